#ifndef GALRED_TESTS_HELPERS_HPP
#define GALRED_TESTS_HELPERS_HPP

#include "galred/fibre.hpp"

#include <string>
#include <vector>

namespace galred::testing {

// loop graph on one component (Example-2 shape)
inline DualGraph loop_graph(const std::string& v = "c") {
    DualGraph g;
    g.vertices = {v};
    g.edges = {"e"};
    g.endpoints = {"k0", "k1"};
    g.phi = {{"k0", "e"}, {"k1", "e"}};
    g.psi = {{"k0", v}, {"k1", v}};
    return g;
}

inline DualGraph isolated_vertices(const std::vector<std::string>& ids) {
    DualGraph g;
    g.vertices = ids;
    return g;
}

// descriptor with one genus-0 loop component, elements {id, tau (endpoint
// swap), frob (trivial)}; tau generates inertia of order 2
inline FibreDescriptor loop_swap_descriptor(std::int64_t p) {
    FibreDescriptor d;
    d.p = p;
    d.n0 = 1;
    d.residue_field = FqField::make(p, 1);
    d.graph = loop_graph("c");
    d.components.push_back(Component{"c", 0, ProjLineModel{}});
    GraphAut swap = GraphAut::identity(d.graph);
    swap.piK = {{"k0", "k1"}, {"k1", "k0"}};
    d.elements.push_back(SemilinearElt{"id", 0, true, GraphAut::identity(d.graph), {}});
    d.elements.push_back(SemilinearElt{"tau", 0, true, swap, {}});
    d.elements.push_back(SemilinearElt{"frob", 1, false, GraphAut::identity(d.graph), {}});
    d.frobenius_id = "frob";
    d.composition = {{"id*id", "id"},   {"id*tau", "tau"},   {"tau*id", "tau"},
                     {"tau*tau", "id"}, {"id*frob", "frob"}, {"frob*id", "frob"}};
    return d;
}

// good-reduction shape: single Weierstrass component, trivial graph,
// trivial inertia
inline FibreDescriptor good_descriptor(std::int64_t p, std::int64_t a4, std::int64_t a6) {
    FibreDescriptor d;
    d.p = p;
    d.n0 = 1;
    d.residue_field = FqField::make(p, 1);
    const FqField& F = d.residue_field;
    WeierstrassModel w{F, F.zero(), F.from_int(a4), F.from_int(a6)};
    d.components.push_back(Component{"E", 1, w});
    d.graph.vertices = {"E"};
    CoordTwist trivial{F.one(), F.one()};
    d.elements.push_back(
        SemilinearElt{"id", 0, true, GraphAut::identity(d.graph), {{"E", trivial}}});
    d.elements.push_back(
        SemilinearElt{"frob", 1, false, GraphAut::identity(d.graph), {{"E", trivial}}});
    d.frobenius_id = "frob";
    d.composition = {{"id*id", "id"}, {"id*frob", "frob"}, {"frob*id", "frob"}};
    return d;
}

}  // namespace galred::testing

#endif
