#include "galred/descriptor_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace galred {

namespace {

using nlohmann::json;

class Collector {
public:
    void add(const std::string& err) { errors_.push_back(err); }
    bool ok() const { return errors_.empty(); }
    std::vector<std::string>& errors() { return errors_; }

private:
    std::vector<std::string> errors_;
};

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where, Collector& c) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            c.add(where + ": unknown field '" + it.key() + "'");
}

bool want_object(const json& v, const std::string& where, Collector& c) {
    if (v.is_object()) return true;
    c.add(where + ": expected an object");
    return false;
}

bool want_array(const json& v, const std::string& where, Collector& c) {
    if (v.is_array()) return true;
    c.add(where + ": expected an array");
    return false;
}

std::optional<std::string> get_string(const json& obj, const std::string& key,
                                      const std::string& where, Collector& c) {
    if (!obj.contains(key)) { c.add(where + ": missing field '" + key + "'"); return std::nullopt; }
    if (!obj[key].is_string()) { c.add(where + ": field '" + key + "' must be a string"); return std::nullopt; }
    return obj[key].get<std::string>();
}

// integers travel as decimal strings
std::optional<std::int64_t> get_int(const json& obj, const std::string& key,
                                    const std::string& where, Collector& c) {
    auto s = get_string(obj, key, where, c);
    if (!s) return std::nullopt;
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(*s, &pos);
        if (pos != s->size()) throw std::invalid_argument("trailing");
        return v;
    } catch (...) {
        c.add(where + ": field '" + key + "' is not a decimal integer");
        return std::nullopt;
    }
}

std::optional<Int> parse_big(const std::string& s, const std::string& where, Collector& c) {
    if (s.empty() ||
        !std::all_of(s.begin(), s.end(), [&](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '-'; }) ||
        s.find('-', 1) != std::string::npos || s == "-") {
        c.add(where + ": not a decimal integer");
        return std::nullopt;
    }
    return Int(s);
}

// coefficient vector over the residue field: array of decimal strings of
// length n0 with entries in [0, p)
std::optional<FqElem> parse_coeffs(const json& v, const FqField& F,
                                   const std::string& where, Collector& c) {
    if (!v.is_array()) { c.add(where + ": expected a coefficient array"); return std::nullopt; }
    if (static_cast<int>(v.size()) != F.degree()) {
        c.add(where + ": coefficient vector must have length n0");
        return std::nullopt;
    }
    FqElem out = F.zero();
    for (int i = 0; i < F.degree(); ++i) {
        if (!v[i].is_string()) { c.add(where + ": coefficients must be decimal strings"); return std::nullopt; }
        auto big = parse_big(v[i].get<std::string>(), where, c);
        if (!big) return std::nullopt;
        if (*big < 0 || *big >= F.p()) { c.add(where + ": coefficient out of range [0, p)"); return std::nullopt; }
        out.c[i] = static_cast<std::int64_t>(*big);
    }
    return out;
}

std::optional<std::map<std::string, std::string>> parse_string_map(
    const json& v, const std::string& where, Collector& c) {
    if (!want_object(v, where, c)) return std::nullopt;
    std::map<std::string, std::string> out;
    for (auto it = v.begin(); it != v.end(); ++it) {
        if (!it.value().is_string()) { c.add(where + ": values must be strings"); return std::nullopt; }
        out[it.key()] = it.value().get<std::string>();
    }
    return out;
}

}  // namespace

DescriptorParse parse_descriptor(const std::string& json_text) {
    DescriptorParse out;
    Collector c;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        out.errors.push_back(std::string("not valid JSON: ") + e.what());
        return out;
    }
    if (!doc.is_object()) {
        out.errors.push_back("document must be a JSON object");
        return out;
    }
    check_keys(doc, {"residue_field", "components", "graph", "elements",
                     "frobenius", "composition", "tame"},
               "document", c);

    FibreDescriptor d;

    // residue field
    if (doc.contains("residue_field") && want_object(doc["residue_field"], "residue_field", c)) {
        const json& rf = doc["residue_field"];
        check_keys(rf, {"p", "n0"}, "residue_field", c);
        auto p = get_int(rf, "p", "residue_field", c);
        auto n0 = get_int(rf, "n0", "residue_field", c);
        if (p && n0) {
            d.p = *p;
            d.n0 = static_cast<int>(*n0);
            try {
                d.residue_field = FqField::make(d.p, d.n0);
            } catch (const Error& e) {
                c.add(std::string("residue_field: ") + e.what());
            }
        }
    } else if (!doc.contains("residue_field")) {
        c.add("document: missing field 'residue_field'");
    }
    if (!c.ok()) {  // nothing below makes sense without a field
        out.errors = c.errors();
        return out;
    }
    const FqField& F = d.residue_field;

    // components
    if (!doc.contains("components") || !want_array(doc["components"], "components", c)) {
        if (!doc.contains("components")) c.add("document: missing field 'components'");
    } else {
        for (const auto& cj : doc["components"]) {
            if (!want_object(cj, "component", c)) continue;
            check_keys(cj, {"id", "genus", "model"}, "component", c);
            Component comp;
            auto id = get_string(cj, "id", "component", c);
            auto genus = get_int(cj, "genus", "component", c);
            if (!id || !genus) continue;
            if (*genus < 0 || *genus > 10000) {
                c.add("component " + *id + ": genus out of range");
                continue;
            }
            comp.id = *id;
            comp.genus = static_cast<int>(*genus);
            const std::string where = "component " + comp.id;
            if (!cj.contains("model") || !want_object(cj["model"], where, c)) {
                if (!cj.contains("model")) c.add(where + ": missing field 'model'");
                continue;
            }
            const json& mj = cj["model"];
            auto kind = get_string(mj, "kind", where, c);
            if (!kind) continue;
            if (*kind == "proj_line") {
                check_keys(mj, {"kind"}, where, c);
                comp.model = ProjLineModel{};
            } else if (*kind == "weierstrass") {
                check_keys(mj, {"kind", "a2", "a4", "a6"}, where, c);
                WeierstrassModel w{F, F.zero(), F.zero(), F.zero()};
                bool good = true;
                for (const auto& [key, dst] : std::initializer_list<std::pair<const char*, FqElem*>>{
                         {"a2", &w.a2}, {"a4", &w.a4}, {"a6", &w.a6}}) {
                    if (!mj.contains(key)) { c.add(where + ": missing field '" + std::string(key) + "'"); good = false; continue; }
                    auto e = parse_coeffs(mj[key], F, where + "." + key, c);
                    if (e) *dst = *e; else good = false;
                }
                if (!good) continue;
                comp.model = w;
            } else if (*kind == "trace_table") {
                check_keys(mj, {"kind", "traces"}, where, c);
                TraceTableModel t;
                if (!mj.contains("traces") || !mj["traces"].is_object()) {
                    c.add(where + ": missing or bad 'traces'");
                    continue;
                }
                for (auto it = mj["traces"].begin(); it != mj["traces"].end(); ++it) {
                    if (!it.value().is_array()) { c.add(where + ": traces must be arrays"); continue; }
                    std::vector<Int> row;
                    for (const auto& tv : it.value()) {
                        if (!tv.is_string()) { c.add(where + ": trace entries must be decimal strings"); break; }
                        auto big = parse_big(tv.get<std::string>(), where, c);
                        if (!big) break;
                        row.push_back(*big);
                    }
                    t.traces[it.key()] = std::move(row);
                }
                comp.model = t;
            } else {
                c.add(where + ": unknown model kind '" + *kind + "'");
                continue;
            }
            d.components.push_back(std::move(comp));
        }
    }

    // graph
    if (!doc.contains("graph") || !want_object(doc["graph"], "graph", c)) {
        if (!doc.contains("graph")) c.add("document: missing field 'graph'");
    } else {
        const json& gj = doc["graph"];
        check_keys(gj, {"edges", "endpoint_component"}, "graph", c);
        for (const auto& comp : d.components) d.graph.vertices.push_back(comp.id);
        if (gj.contains("edges") && want_array(gj["edges"], "graph.edges", c)) {
            for (const auto& ej : gj["edges"]) {
                if (!want_object(ej, "edge", c)) continue;
                check_keys(ej, {"id", "endpoints"}, "edge", c);
                auto id = get_string(ej, "id", "edge", c);
                if (!id) continue;
                if (!ej.contains("endpoints") || !ej["endpoints"].is_array() ||
                    ej["endpoints"].size() != 2 || !ej["endpoints"][0].is_string() ||
                    !ej["endpoints"][1].is_string()) {
                    c.add("edge " + *id + ": 'endpoints' must be a pair of endpoint ids");
                    continue;
                }
                d.graph.edges.push_back(*id);
                for (const auto& kj : ej["endpoints"]) {
                    std::string k = kj.get<std::string>();
                    d.graph.endpoints.push_back(k);
                    d.graph.phi[k] = *id;
                }
            }
        }
        if (gj.contains("endpoint_component")) {
            auto m = parse_string_map(gj["endpoint_component"], "graph.endpoint_component", c);
            if (m) d.graph.psi = *m;
        } else {
            c.add("graph: missing field 'endpoint_component'");
        }
    }

    // elements
    if (!doc.contains("elements") || !want_array(doc["elements"], "elements", c)) {
        if (!doc.contains("elements")) c.add("document: missing field 'elements'");
    } else {
        for (const auto& ej : doc["elements"]) {
            if (!want_object(ej, "element", c)) continue;
            check_keys(ej, {"id", "frob_power", "inertial", "perm_endpoints",
                            "perm_components", "twists"},
                       "element", c);
            SemilinearElt e;
            auto id = get_string(ej, "id", "element", c);
            auto fp = get_int(ej, "frob_power", "element", c);
            if (!id || !fp) continue;
            if (*fp < 0 || *fp > 1000000) {
                c.add("element " + *id + ": frob_power out of range");
                continue;
            }
            e.id = *id;
            e.frob_power = static_cast<int>(*fp);
            const std::string where = "element " + e.id;
            if (!ej.contains("inertial") || !ej["inertial"].is_boolean())
                c.add(where + ": missing or non-boolean 'inertial'");
            else
                e.inertial = ej["inertial"].get<bool>();
            if (ej.contains("perm_endpoints")) {
                auto m = parse_string_map(ej["perm_endpoints"], where + ".perm_endpoints", c);
                if (m) e.aut.piK = *m;
            } else {
                c.add(where + ": missing field 'perm_endpoints'");
            }
            std::map<std::string, std::string> perm_components;
            if (ej.contains("perm_components")) {
                auto m = parse_string_map(ej["perm_components"], where + ".perm_components", c);
                if (m) perm_components = *m;
            }
            // derive the edge and vertex maps from the endpoint map
            std::set<std::string> kset(d.graph.endpoints.begin(), d.graph.endpoints.end());
            bool derivable = true;
            for (const auto& [k, kk] : e.aut.piK)
                if (!kset.count(k) || !kset.count(kk)) {
                    c.add(where + ": perm_endpoints mentions unknown endpoint");
                    derivable = false;
                    break;
                }
            if (derivable && e.aut.piK.size() == kset.size()) {
                for (const auto& k : d.graph.endpoints) {
                    if (!e.aut.piK.count(k)) { derivable = false; break; }
                    const std::string& kk = e.aut.piK.at(k);
                    const std::string& ei = d.graph.phi.at(k);
                    const std::string& target = d.graph.phi.at(kk);
                    auto it = e.aut.piI.find(ei);
                    if (it == e.aut.piI.end()) e.aut.piI[ei] = target;
                    else if (it->second != target) {
                        c.add(where + ": endpoint permutation does not respect edges");
                        derivable = false;
                        break;
                    }
                    const std::string& v = d.graph.psi.count(k) ? d.graph.psi.at(k) : std::string();
                    const std::string& tv = d.graph.psi.count(kk) ? d.graph.psi.at(kk) : std::string();
                    if (v.empty() || tv.empty()) continue;  // graph errors reported elsewhere
                    auto jt = e.aut.piJ.find(v);
                    if (jt == e.aut.piJ.end()) e.aut.piJ[v] = tv;
                    else if (jt->second != tv) {
                        c.add(where + ": endpoint permutation does not respect vertices");
                        derivable = false;
                        break;
                    }
                }
            } else if (e.aut.piK.size() != kset.size()) {
                c.add(where + ": perm_endpoints must cover every endpoint");
                derivable = false;
            }
            // isolated vertices: explicit perm_components, identity otherwise
            for (const auto& v : d.graph.vertices) {
                auto pc = perm_components.find(v);
                if (pc != perm_components.end()) {
                    auto jt = e.aut.piJ.find(v);
                    if (jt != e.aut.piJ.end() && jt->second != pc->second)
                        c.add(where + ": perm_components contradicts perm_endpoints at " + v);
                    else
                        e.aut.piJ[v] = pc->second;
                } else if (!e.aut.piJ.count(v)) {
                    e.aut.piJ[v] = v;
                }
            }
            (void)derivable;
            // twists
            if (ej.contains("twists") && want_object(ej["twists"], where + ".twists", c)) {
                for (auto it = ej["twists"].begin(); it != ej["twists"].end(); ++it) {
                    if (!it.value().is_object()) { c.add(where + ": twist must be an object"); continue; }
                    check_keys(it.value(), {"c2", "c3"}, where + ".twists." + it.key(), c);
                    CoordTwist t{F.one(), F.one()};
                    bool good = true;
                    if (it.value().contains("c2")) {
                        auto v = parse_coeffs(it.value()["c2"], F, where + ".twists." + it.key() + ".c2", c);
                        if (v) t.c2 = *v; else good = false;
                    } else { c.add(where + ".twists." + it.key() + ": missing c2"); good = false; }
                    if (it.value().contains("c3")) {
                        auto v = parse_coeffs(it.value()["c3"], F, where + ".twists." + it.key() + ".c3", c);
                        if (v) t.c3 = *v; else good = false;
                    } else { c.add(where + ".twists." + it.key() + ": missing c3"); good = false; }
                    if (good) e.twists[it.key()] = t;
                }
            } else if (!ej.contains("twists")) {
                c.add(where + ": missing field 'twists'");
            }
            d.elements.push_back(std::move(e));
        }
    }

    if (doc.contains("frobenius")) {
        auto f = get_string(doc, "frobenius", "document", c);
        if (f) d.frobenius_id = *f;
    } else {
        c.add("document: missing field 'frobenius'");
    }

    if (doc.contains("composition")) {
        auto m = parse_string_map(doc["composition"], "composition", c);
        if (m) d.composition = *m;
    } else {
        c.add("document: missing field 'composition'");
    }

    if (doc.contains("tame")) {
        if (!doc["tame"].is_boolean()) c.add("document: 'tame' must be a boolean");
        else d.tame = doc["tame"].get<bool>();
    }

    if (!c.ok()) {
        out.errors = c.errors();
        return out;
    }
    for (const auto& err : d.validate()) out.errors.push_back(err);
    if (!out.errors.empty()) return out;
    out.descriptor = std::move(d);
    return out;
}

std::string write_descriptor(const FibreDescriptor& d) {
    const FqField& F = d.residue_field;
    auto coeffs = [&](const FqElem& a) {
        json arr = json::array();
        for (int i = 0; i < F.degree(); ++i) arr.push_back(std::to_string(a.c[i]));
        return arr;
    };
    json doc;
    doc["residue_field"] = {{"p", std::to_string(d.p)}, {"n0", std::to_string(d.n0)}};
    json comps = json::array();
    for (const auto& comp : d.components) {
        json cj;
        cj["id"] = comp.id;
        cj["genus"] = std::to_string(comp.genus);
        if (comp.is_proj_line()) {
            cj["model"] = {{"kind", "proj_line"}};
        } else if (comp.is_weierstrass()) {
            const auto& w = std::get<WeierstrassModel>(comp.model);
            cj["model"] = {{"kind", "weierstrass"},
                           {"a2", coeffs(w.a2)},
                           {"a4", coeffs(w.a4)},
                           {"a6", coeffs(w.a6)}};
        } else {
            const auto& t = std::get<TraceTableModel>(comp.model);
            json traces;
            for (const auto& [eid, row] : t.traces) {
                json arr = json::array();
                for (const auto& v : row) arr.push_back(v.str());
                traces[eid] = arr;
            }
            cj["model"] = {{"kind", "trace_table"}, {"traces", traces}};
        }
        comps.push_back(cj);
    }
    doc["components"] = comps;

    json edges = json::array();
    std::map<std::string, std::vector<std::string>> ends_of_edge;
    for (const auto& k : d.graph.sorted_endpoints())
        ends_of_edge[d.graph.phi.at(k)].push_back(k);
    for (const auto& e : d.graph.sorted_edges()) {
        const auto& ks = ends_of_edge.at(e);
        edges.push_back({{"id", e}, {"endpoints", {ks[0], ks[1]}}});
    }
    json endpoint_component = json::object();
    for (const auto& [k, v] : d.graph.psi) endpoint_component[k] = v;
    doc["graph"] = {{"edges", edges}, {"endpoint_component", endpoint_component}};

    json elems = json::array();
    for (const auto& e : d.elements) {
        json ej;
        ej["id"] = e.id;
        ej["frob_power"] = std::to_string(e.frob_power);
        ej["inertial"] = e.inertial;
        json pk = json::object();
        for (const auto& [k, v] : e.aut.piK) pk[k] = v;
        ej["perm_endpoints"] = pk;
        // only write the vertex map where it is not derivable (isolated vertices)
        json pc = json::object();
        std::set<std::string> attached;
        for (const auto& [k, v] : d.graph.psi) attached.insert(v);
        for (const auto& [v, tv] : e.aut.piJ)
            if (!attached.count(v)) pc[v] = tv;
        if (!pc.empty()) ej["perm_components"] = pc;
        json tw = json::object();
        for (const auto& [cid, t] : e.twists)
            tw[cid] = {{"c2", coeffs(t.c2)}, {"c3", coeffs(t.c3)}};
        ej["twists"] = tw;
        elems.push_back(ej);
    }
    doc["elements"] = elems;
    doc["frobenius"] = d.frobenius_id;
    json compn = json::object();
    for (const auto& [k, v] : d.composition) compn[k] = v;
    doc["composition"] = compn;
    doc["tame"] = d.tame;
    return doc.dump(2) + "\n";
}

}  // namespace galred
