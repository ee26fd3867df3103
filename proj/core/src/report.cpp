#include "galred/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace galred {

namespace {

using nlohmann::json;

const std::map<std::string, std::string> kConventions = {
    {"traces", "all traces and the L-factor are on H^1_et of the curve; "
               "good reduction reads 1 - a_p T + p T^2"},
    {"frobenius", "the designated lift acts on residues as x -> x^(p^n0) and fixes "
                  "the chosen tame uniformizer root; chi_cyc(e) = p^frob_power(e)"},
    {"weight2", "weight-2 quotient invariants do not enter the L-factor or the "
                "conductor: the monodromy pairing is nondegenerate for Jacobians"},
    {"choice_independence", "graded ranks, inertia invariants, L-factor and conductor "
                            "do not depend on the choice of Frobenius lift; "
                            "per-element traces do"},
    {"conductor", "tame formula f = (2 h1 + abelian) - (dim0 + dim_ab)"},
};

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

IntMatrix matrix_from_json(const json& rows) {
    std::size_t r = rows.size();
    std::size_t cols = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Int(rows[i][j].get<std::string>());
    return m;
}

json body_to_json(const ReductionReport& r) {
    json body;
    body["residue_field"] = {{"p", std::to_string(r.p)}, {"n0", std::to_string(r.n0)}};
    body["graded_ranks"] = {{"toric", std::to_string(r.toric_rank)},
                            {"abelian", std::to_string(r.abelian_rank)},
                            {"h1", std::to_string(r.h1_rank)}};
    json elems;
    for (const auto& e : r.elements) {
        elems[e.id] = {{"frob_power", std::to_string(e.frob_power)},
                       {"inertial", e.inertial},
                       {"h1_upsilon_matrix", matrix_to_json(e.h1_upsilon)},
                       {"chi_cyc", e.chi_cyc.str()},
                       {"trace", e.trace.str()}};
    }
    body["elements"] = elems.is_null() ? json::object() : elems;
    body["inertia"] = {{"order", std::to_string(r.inertia_order)},
                       {"dim0", std::to_string(r.dim0)},
                       {"dim_abelian", std::to_string(r.dim_ab)}};
    json lcoeffs = json::array();
    for (const auto& c : r.l_coefficients) lcoeffs.push_back(c.str());
    body["l_factor"] = {{"coefficients", lcoeffs},
                        {"degree", std::to_string(r.l_coefficients.empty()
                                                      ? 0
                                                      : r.l_coefficients.size() - 1)}};
    body["conductor_exponent"] = std::to_string(r.conductor);
    json duality;
    duality["ok"] = r.duality_ok;
    json off = json::array();
    for (const auto& o : r.duality_offenders) off.push_back(o);
    duality["offenders"] = off;
    body["duality"] = duality;
    json conv;
    for (const auto& [k, v] : r.conventions) conv[k] = v;
    body["conventions"] = conv;
    return body;
}

json full_to_json(const ReductionReport& r) {
    json doc;
    doc["format"] = "galred-report/1";
    doc["mode"] = r.mode;
    json echo;
    for (const auto& [k, v] : r.input_echo) echo[k] = v;
    doc["input"] = echo.is_null() ? json::object() : echo;
    if (r.classification) {
        const auto& c = *r.classification;
        json cj;
        cj["kind"] = c.kind;
        cj["kodaira"] = c.kodaira;
        cj["e"] = std::to_string(c.e);
        cj["v_disc"] = std::to_string(c.v_disc);
        cj["v_c4"] = c.v_c4 ? std::to_string(*c.v_c4) : "inf";
        cj["v_j"] = c.v_j ? std::to_string(*c.v_j) : "inf";
        cj["components_m"] = std::to_string(c.m_components);
        if (!c.twist_class.empty()) cj["twist_class"] = c.twist_class;
        doc["classification"] = cj;
    }
    doc["body"] = body_to_json(r);
    return doc;
}

}  // namespace

ReductionReport build_report(const FibreDescriptor& d, const std::string& mode,
                             std::map<std::string, std::string> input_echo,
                             std::optional<ClassificationReport> classification) {
    d.require_valid();
    ReductionReport r;
    r.mode = mode;
    r.input_echo = std::move(input_echo);
    r.classification = std::move(classification);
    r.p = d.p;
    r.n0 = d.n0;
    GradedPieces gp = graded_pieces(d);
    r.toric_rank = gp.toric_rank;
    r.h1_rank = gp.h1_rank;
    r.abelian_rank = gp.abelian_rank;
    for (const auto& e : d.elements) {
        ElementReport er;
        er.id = e.id;
        er.frob_power = e.frob_power;
        er.inertial = e.inertial;
        er.h1_upsilon = gp.coh_action.at(e.id);
        er.chi_cyc = chi_cyc(d, e.id);
        er.trace = element_trace(d, e.id);
        r.elements.push_back(std::move(er));
    }
    std::sort(r.elements.begin(), r.elements.end(),
              [](const ElementReport& a, const ElementReport& b) { return a.id < b.id; });
    r.inertia_order = d.inertia().size();
    InertiaInvariants ii = inertia_invariants(d);
    r.dim0 = ii.dim0;
    r.dim_ab = ii.dim_ab;
    LocalLFactor lf = l_factor(d);
    r.l_coefficients = lf.poly.coefficients();
    r.conductor = conductor_exponent(d);
    DualityResult dr = duality_check(gp);
    r.duality_ok = dr.ok;
    r.duality_offenders = dr.offenders;
    r.conventions = kConventions;
    return r;
}

std::string report_to_json(const ReductionReport& r) {
    return full_to_json(r).dump(2) + "\n";
}

std::string report_body_json(const ReductionReport& r) {
    return body_to_json(r).dump(2) + "\n";
}

std::string report_to_text(const ReductionReport& r) {
    std::ostringstream os;
    os << "galred report (" << r.mode << " mode)\n";
    for (const auto& [k, v] : r.input_echo) os << "  input " << k << ": " << v << "\n";
    if (r.classification) {
        const auto& c = *r.classification;
        os << "classification:\n";
        os << "  kind: " << c.kind << "  kodaira: " << c.kodaira;
        if (!c.twist_class.empty()) os << "  twist_class: " << c.twist_class;
        os << "\n";
        os << "  e: " << c.e << "  v(disc_min): " << c.v_disc << "  v(c4): "
           << (c.v_c4 ? std::to_string(*c.v_c4) : "inf") << "  v(j): "
           << (c.v_j ? std::to_string(*c.v_j) : "inf")
           << "  components m: " << c.m_components << "\n";
    }
    os << "residue field: F_" << r.p;
    if (r.n0 > 1) os << "^" << r.n0;
    os << "\n";
    os << "graded ranks (toric, abelian, h1): (" << r.toric_rank << ", "
       << r.abelian_rank << ", " << r.h1_rank << ")\n";
    os << "elements:\n";
    for (const auto& e : r.elements) {
        os << "  " << e.id << ": frob_power " << e.frob_power
           << (e.inertial ? " (inertial)" : "") << "  chi_cyc " << e.chi_cyc
           << "  H^1(graph) " << e.h1_upsilon.to_string() << "  trace " << e.trace << "\n";
    }
    os << "inertia: order " << r.inertia_order << ", invariants dim0 " << r.dim0
       << ", dim_abelian " << r.dim_ab << "\n";
    IntPoly l(std::vector<Int>(r.l_coefficients.begin(), r.l_coefficients.end()));
    os << "local L-factor: " << l.to_string() << "\n";
    os << "conductor exponent: " << r.conductor << "\n";
    os << "duality check: " << (r.duality_ok ? "ok" : "FAILED") << "\n";
    for (const auto& o : r.duality_offenders) os << "  duality offender: " << o << "\n";
    os << "conventions:\n";
    for (const auto& [k, v] : r.conventions) os << "  " << k << ": " << v << "\n";
    return os.str();
}

ReductionReport parse_report(const std::string& json_text) {
    json doc = json::parse(json_text);
    ReductionReport r;
    r.mode = doc.at("mode").get<std::string>();
    for (auto it = doc.at("input").begin(); it != doc.at("input").end(); ++it)
        r.input_echo[it.key()] = it.value().get<std::string>();
    if (doc.contains("classification")) {
        const json& cj = doc["classification"];
        ClassificationReport c;
        c.kind = cj.at("kind").get<std::string>();
        c.kodaira = cj.at("kodaira").get<std::string>();
        c.e = std::stoi(cj.at("e").get<std::string>());
        c.v_disc = std::stoi(cj.at("v_disc").get<std::string>());
        if (cj.at("v_c4").get<std::string>() != "inf")
            c.v_c4 = std::stoi(cj.at("v_c4").get<std::string>());
        if (cj.at("v_j").get<std::string>() != "inf")
            c.v_j = std::stoi(cj.at("v_j").get<std::string>());
        c.m_components = std::stoi(cj.at("components_m").get<std::string>());
        if (cj.contains("twist_class")) c.twist_class = cj["twist_class"].get<std::string>();
        r.classification = c;
    }
    const json& body = doc.at("body");
    r.p = std::stoll(body.at("residue_field").at("p").get<std::string>());
    r.n0 = std::stoi(body.at("residue_field").at("n0").get<std::string>());
    r.toric_rank = std::stoull(body.at("graded_ranks").at("toric").get<std::string>());
    r.abelian_rank = std::stoull(body.at("graded_ranks").at("abelian").get<std::string>());
    r.h1_rank = std::stoull(body.at("graded_ranks").at("h1").get<std::string>());
    for (auto it = body.at("elements").begin(); it != body.at("elements").end(); ++it) {
        ElementReport e;
        e.id = it.key();
        e.frob_power = std::stoi(it.value().at("frob_power").get<std::string>());
        e.inertial = it.value().at("inertial").get<bool>();
        e.h1_upsilon = matrix_from_json(it.value().at("h1_upsilon_matrix"));
        e.chi_cyc = Int(it.value().at("chi_cyc").get<std::string>());
        e.trace = Int(it.value().at("trace").get<std::string>());
        r.elements.push_back(std::move(e));
    }
    r.inertia_order = std::stoull(body.at("inertia").at("order").get<std::string>());
    r.dim0 = std::stoull(body.at("inertia").at("dim0").get<std::string>());
    r.dim_ab = std::stoull(body.at("inertia").at("dim_abelian").get<std::string>());
    for (const auto& cj : body.at("l_factor").at("coefficients"))
        r.l_coefficients.push_back(Int(cj.get<std::string>()));
    r.conductor = std::stoull(body.at("conductor_exponent").get<std::string>());
    r.duality_ok = body.at("duality").at("ok").get<bool>();
    for (const auto& o : body.at("duality").at("offenders"))
        r.duality_offenders.push_back(o.get<std::string>());
    for (auto it = body.at("conventions").begin(); it != body.at("conventions").end(); ++it)
        r.conventions[it.key()] = it.value().get<std::string>();
    return r;
}

}  // namespace galred
