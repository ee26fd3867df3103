#ifndef GALRED_REPORT_HPP
#define GALRED_REPORT_HPP

#include "galred/tate.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace galred {

/// Elliptic-mode classification echo.
struct ClassificationReport {
    std::string kind;
    std::string kodaira;
    std::string twist_class;  // empty when not applicable
    int e = 1;
    int v_disc = 0;
    std::optional<int> v_c4;
    std::optional<int> v_j;
    int m_components = 1;
    bool operator==(const ClassificationReport&) const = default;
};

struct ElementReport {
    std::string id;
    int frob_power = 0;
    bool inertial = false;
    IntMatrix h1_upsilon;  // H^1(graph) action matrix
    Int chi_cyc;
    Int trace;  // on H^1 of the curve
    bool operator==(const ElementReport&) const = default;
};

/**
 * The CLI output object. The "body" carries everything derived from the
 * fibre descriptor and is byte-identical between elliptic mode and a replay
 * of the exported descriptor; the input echo and the classification block
 * are outside that contract.
 */
struct ReductionReport {
    std::string mode;  // "elliptic" or "fibre"
    std::map<std::string, std::string> input_echo;
    std::optional<ClassificationReport> classification;

    // body
    std::int64_t p = 0;
    int n0 = 1;
    std::size_t toric_rank = 0, abelian_rank = 0, h1_rank = 0;
    std::vector<ElementReport> elements;  // sorted by id
    std::size_t inertia_order = 0, dim0 = 0, dim_ab = 0;
    std::vector<Int> l_coefficients;  // constant first
    std::size_t conductor = 0;
    bool duality_ok = true;
    std::vector<std::string> duality_offenders;
    std::map<std::string, std::string> conventions;

    bool operator==(const ReductionReport&) const = default;
};

/// Run every tate-level operation on a validated descriptor.
ReductionReport build_report(const FibreDescriptor& d, const std::string& mode,
                             std::map<std::string, std::string> input_echo,
                             std::optional<ClassificationReport> classification);

/// Key-sorted JSON with decimal-string integers; round-trips through
/// parse_report.
std::string report_to_json(const ReductionReport& r);
/// The body object alone (the replay-equality contract).
std::string report_body_json(const ReductionReport& r);
/// Human-readable rendering.
std::string report_to_text(const ReductionReport& r);

/// Inverse of report_to_json.
ReductionReport parse_report(const std::string& json_text);

}  // namespace galred

#endif
