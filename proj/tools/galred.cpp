// galred: Galois-representation data of a curve over Q_p from its
// semistable reduction data. Two modes:
//
//   galred elliptic --p <prime> --a a1,a2,a3,a4,a6 [--json]
//                   [--trace-element id]... [--descriptor-out path]
//   galred fibre --in descriptor.json [--json] [--trace-element id]...
//
// Exit codes: 0 ok, 2 invalid input, 3 unsupported regime (p < 5).

#include "galred/descriptor_io.hpp"
#include "galred/elliptic.hpp"
#include "galred/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace galred;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitRegime = 3;

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw Error("bad rational '" + s + "'");
    }
}

std::vector<Rat> parse_coeff_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.size() != 5) throw Error("--a expects 5 coefficients a1,a2,a3,a4,a6");
    return out;
}

void check_trace_elements(const FibreDescriptor& d, const std::vector<std::string>& ids) {
    for (const auto& id : ids)
        if (!d.find_element(id)) throw Error("unknown trace element '" + id + "'");
}

void emit(const ReductionReport& r, bool as_json, const std::vector<std::string>& trace_ids) {
    if (as_json) {
        std::cout << report_to_json(r);
        return;
    }
    std::cout << report_to_text(r);
    if (!trace_ids.empty()) {
        std::cout << "requested traces:\n";
        for (const auto& id : trace_ids)
            for (const auto& e : r.elements)
                if (e.id == id)
                    std::cout << "  " << id << ": " << e.trace << "\n";
    }
}

int run_elliptic(std::int64_t p, const std::string& coeffs, bool as_json,
                 const std::vector<std::string>& trace_ids,
                 const std::string& descriptor_out) {
    auto a = parse_coeff_list(coeffs);
    WeierstrassCurve curve{a[0], a[1], a[2], a[3], a[4], p};
    ReductionClass rc = classify(minimal_data(curve));
    FibreDescriptor d = semistable_descriptor(rc);
    check_trace_elements(d, trace_ids);
    if (!descriptor_out.empty()) {
        std::ofstream f(descriptor_out);
        if (!f) throw Error("cannot write " + descriptor_out);
        f << write_descriptor(d);
    }
    ClassificationReport cls;
    cls.kind = to_string(rc.kind);
    cls.kodaira = rc.kodaira;
    cls.twist_class = rc.kind == ReductionKind::pot_mult ? rc.twist_class : std::string();
    cls.e = rc.e;
    cls.v_disc = rc.v_disc;
    cls.v_c4 = rc.v_c4;
    cls.v_j = rc.v_j;
    cls.m_components = rc.m_components;
    std::map<std::string, std::string> echo{
        {"p", std::to_string(p)}, {"curve", coeffs}};
    for (std::size_t i = 0; i < trace_ids.size(); ++i)
        echo["trace_element_" + std::to_string(i)] = trace_ids[i];
    ReductionReport r = build_report(d, "elliptic", std::move(echo), cls);
    emit(r, as_json, trace_ids);
    return kExitOk;
}

int run_fibre(const std::string& path, bool as_json,
              const std::vector<std::string>& trace_ids) {
    std::ifstream f(path);
    if (!f) throw Error("cannot read " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    DescriptorParse parsed = parse_descriptor(buf.str());
    if (!parsed.descriptor) {
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& e : parsed.errors) violations.push_back(e);
        std::cerr << nlohmann::json{{"errors", violations}}.dump(2) << "\n";
        return kExitInput;
    }
    const FibreDescriptor& d = *parsed.descriptor;
    check_trace_elements(d, trace_ids);
    std::map<std::string, std::string> echo{{"file", path}};
    for (std::size_t i = 0; i < trace_ids.size(); ++i)
        echo["trace_element_" + std::to_string(i)] = trace_ids[i];
    ReductionReport r = build_report(d, "fibre", std::move(echo), std::nullopt);
    emit(r, as_json, trace_ids);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois representation data from semistable reduction"};
    app.require_subcommand(1);

    auto* ell = app.add_subcommand("elliptic", "classify an elliptic curve over Q_p");
    std::int64_t p = 0;
    std::string coeffs;
    bool as_json = false;
    std::vector<std::string> trace_ids;
    std::string descriptor_out;
    ell->add_option("--p", p, "residue characteristic (prime >= 5)")->required();
    ell->add_option("--a", coeffs, "a1,a2,a3,a4,a6 (rationals, n or n/d)")->required();
    ell->add_flag("--json", as_json, "emit the JSON report");
    ell->add_option("--trace-element", trace_ids, "element id to echo traces for (repeatable)");
    ell->add_option("--descriptor-out", descriptor_out, "write the fibre descriptor to this path");

    auto* fib = app.add_subcommand("fibre", "process a fibre descriptor file");
    std::string in_path;
    bool fib_json = false;
    std::vector<std::string> fib_trace_ids;
    fib->add_option("--in", in_path, "descriptor JSON path")->required();
    fib->add_flag("--json", fib_json, "emit the JSON report");
    fib->add_option("--trace-element", fib_trace_ids, "element id to echo traces for (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (app.got_subcommand("elliptic"))
            return run_elliptic(p, coeffs, as_json, trace_ids, descriptor_out);
        return run_fibre(in_path, fib_json, fib_trace_ids);
    } catch (const galred::UnsupportedRegime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
