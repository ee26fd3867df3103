#include "galred/dualgraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace galred {

namespace {

template <typename T>
std::vector<T> sorted_copy(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::map<std::string, std::size_t> index_map(const std::vector<std::string>& ids) {
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = i;
    return m;
}

// piM must be a bijection of ids; report problems under label
void check_bijection(const std::map<std::string, std::string>& pi,
                     const std::vector<std::string>& ids,
                     const std::string& label,
                     std::vector<std::string>& errors) {
    std::set<std::string> domain(ids.begin(), ids.end());
    std::set<std::string> seen;
    for (const auto& id : ids) {
        auto it = pi.find(id);
        if (it == pi.end()) {
            errors.push_back(label + " not defined on " + id);
            continue;
        }
        if (!domain.count(it->second)) {
            errors.push_back(label + " maps " + id + " outside the graph");
            continue;
        }
        if (!seen.insert(it->second).second)
            errors.push_back(label + " not injective at " + it->second);
    }
    for (const auto& [k, v] : pi)
        if (!domain.count(k)) errors.push_back(label + " defined on unknown id " + k);
}

}  // namespace

std::vector<std::string> DualGraph::validate() const {
    std::vector<std::string> errors;
    std::set<std::string> vset(vertices.begin(), vertices.end());
    std::set<std::string> eset(edges.begin(), edges.end());
    std::set<std::string> kset(endpoints.begin(), endpoints.end());
    if (vset.size() != vertices.size()) errors.push_back("duplicate vertex id");
    if (eset.size() != edges.size()) errors.push_back("duplicate edge id");
    if (kset.size() != endpoints.size()) errors.push_back("duplicate endpoint id");
    std::map<std::string, int> endpoints_of_edge;
    for (const auto& e : edges) endpoints_of_edge[e] = 0;
    for (const auto& k : endpoints) {
        auto ip = phi.find(k);
        if (ip == phi.end()) {
            errors.push_back("phi not defined on endpoint " + k);
        } else if (!eset.count(ip->second)) {
            errors.push_back("phi maps " + k + " to unknown edge " + ip->second);
        } else {
            ++endpoints_of_edge[ip->second];
        }
        auto iq = psi.find(k);
        if (iq == psi.end())
            errors.push_back("psi not defined on endpoint " + k);
        else if (!vset.count(iq->second))
            errors.push_back("psi maps " + k + " to unknown vertex " + iq->second);
    }
    for (const auto& [e, n] : endpoints_of_edge) {
        if (n != 2) {
            std::ostringstream os;
            os << "edge " << e << " has " << n << " endpoints";
            errors.push_back(os.str());
        }
    }
    return errors;
}

std::vector<std::string> DualGraph::sorted_vertices() const { return sorted_copy(vertices); }
std::vector<std::string> DualGraph::sorted_edges() const { return sorted_copy(edges); }
std::vector<std::string> DualGraph::sorted_endpoints() const { return sorted_copy(endpoints); }

std::size_t DualGraph::connected_components() const {
    // union-find over vertices; each edge joins the vertices under its endpoints
    auto verts = sorted_vertices();
    auto vidx = index_map(verts);
    std::vector<std::size_t> parent(verts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::map<std::string, std::vector<std::string>> ends_of_edge;
    for (const auto& [k, e] : phi) ends_of_edge[e].push_back(k);
    for (const auto& [e, ks] : ends_of_edge) {
        if (ks.size() != 2) continue;
        auto a = find(vidx.at(psi.at(ks[0])));
        auto b = find(vidx.at(psi.at(ks[1])));
        if (a != b) parent[a] = b;
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
    return roots.size();
}

GraphAut GraphAut::identity(const DualGraph& g) {
    GraphAut a;
    for (const auto& k : g.endpoints) a.piK[k] = k;
    for (const auto& e : g.edges) a.piI[e] = e;
    for (const auto& v : g.vertices) a.piJ[v] = v;
    return a;
}

std::vector<std::string> GraphAut::validate(const DualGraph& g) const {
    std::vector<std::string> errors;
    check_bijection(piK, g.endpoints, "piK", errors);
    check_bijection(piI, g.edges, "piI", errors);
    check_bijection(piJ, g.vertices, "piJ", errors);
    if (!errors.empty()) return errors;
    for (const auto& k : g.endpoints) {
        const auto& kk = piK.at(k);
        if (g.phi.at(kk) != piI.at(g.phi.at(k)))
            errors.push_back("phi does not commute at endpoint " + k);
        if (g.psi.at(kk) != piJ.at(g.psi.at(k)))
            errors.push_back("psi does not commute at endpoint " + k);
    }
    return errors;
}

GraphAut GraphAut::compose(const DualGraph& g, const GraphAut& other) const {
    GraphAut out;
    for (const auto& k : g.endpoints) out.piK[k] = other.piK.at(piK.at(k));
    for (const auto& e : g.edges) out.piI[e] = other.piI.at(piI.at(e));
    for (const auto& v : g.vertices) out.piJ[v] = other.piJ.at(piJ.at(v));
    return out;
}

IntMatrix boundary_matrix(const DualGraph& g) {
    auto ks = g.sorted_endpoints();
    auto es = g.sorted_edges();
    auto vs = g.sorted_vertices();
    auto eidx = index_map(es);
    auto vidx = index_map(vs);
    IntMatrix m(ks.size(), es.size() + vs.size());
    for (std::size_t r = 0; r < ks.size(); ++r) {
        m.at(r, eidx.at(g.phi.at(ks[r]))) = 1;
        m.at(r, es.size() + vidx.at(g.psi.at(ks[r]))) = -1;
    }
    return m;
}

H1Lattice h1_lattice(const DualGraph& g) {
    IntMatrix b = boundary_matrix(g);
    return H1Lattice{kernel_basis(b), b};
}

IntMatrix endpoint_permutation_matrix(const DualGraph& g, const GraphAut& a) {
    auto ks = g.sorted_endpoints();
    auto kidx = index_map(ks);
    IntMatrix p(ks.size(), ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i)
        p.at(i, kidx.at(a.piK.at(ks[i]))) = 1;
    return p;
}

IntMatrix action_on_h1(const DualGraph& g, const GraphAut& a, const H1Lattice& l) {
    return restrict_action(endpoint_permutation_matrix(g, a), l.basis);
}

std::vector<VertexOrbit> component_orbits(const DualGraph& g,
                                          const std::vector<GraphAut>& elts) {
    for (const auto& e : elts)
        if (!e.validate(g).empty()) throw Error("element does not validate");
    auto verts = g.sorted_vertices();
    auto vidx = index_map(verts);
    std::vector<std::size_t> parent(verts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : elts)
        for (const auto& v : verts) {
            auto a = find(vidx.at(v));
            auto b = find(vidx.at(e.piJ.at(v)));
            if (a != b) parent[a] = b;
        }
    std::map<std::size_t, VertexOrbit> orbits;
    for (const auto& v : verts) orbits[find(vidx.at(v))].members.push_back(v);
    std::vector<VertexOrbit> out;
    for (auto& [root, orbit] : orbits) {
        orbit.representative = orbit.members.front();  // members sorted by construction
        for (std::size_t i = 0; i < elts.size(); ++i)
            if (elts[i].piJ.at(orbit.representative) == orbit.representative)
                orbit.stabilizer_indices.push_back(i);
        out.push_back(std::move(orbit));
    }
    std::sort(out.begin(), out.end(), [](const VertexOrbit& a, const VertexOrbit& b) {
        return a.representative < b.representative;
    });
    return out;
}

}  // namespace galred
