#ifndef GALRED_FIBRE_HPP
#define GALRED_FIBRE_HPP

#include "galred/dualgraph.hpp"
#include "galred/exactlin.hpp"
#include "galred/ff.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace galred {

/// Genus-0 component with no equation attached; H^1 vanishes.
struct ProjLineModel {
    bool operator==(const ProjLineModel&) const = default;
};

/// Smooth genus-1 component y^2 = x^3 + a2 x^2 + a4 x + a6 over the residue
/// field (odd characteristic, nonzero discriminant).
struct WeierstrassModel {
    FqField field;
    FqElem a2, a4, a6;

    FqElem rhs(const FqElem& x) const;
    FqElem discriminant() const;
    bool operator==(const WeierstrassModel&) const = default;
};

/// Trace oracle for components without an equation: traces[g][j] is the
/// trace on H^1 of (element g, then j further powers of the designated
/// Frobenius). Entry j = 0 is the trace of g itself.
struct TraceTableModel {
    std::map<std::string, std::vector<Int>> traces;
    bool operator==(const TraceTableModel&) const = default;
};

struct Component {
    std::string id;
    int genus = 0;
    std::variant<ProjLineModel, WeierstrassModel, TraceTableModel> model;

    bool is_proj_line() const { return std::holds_alternative<ProjLineModel>(model); }
    bool is_weierstrass() const { return std::holds_alternative<WeierstrassModel>(model); }
    bool is_trace_table() const { return std::holds_alternative<TraceTableModel>(model); }
};

/// Diagonal coordinate substitution composed with a Frobenius power:
/// (x, y) |-> (c2 * x^(p^n), c3 * y^(p^n)), fixing the point at infinity.
/// The Frobenius exponent n lives on the owning element.
struct CoordTwist {
    FqElem c2, c3;
    bool operator==(const CoordTwist&) const = default;
};

/**
 * A semilinear element of the descriptor group: acts on the residue closure
 * as x -> x^(p^frob_power), on the dual graph by a graph automorphism, and
 * on each fixed equation component by a CoordTwist.
 */
struct SemilinearElt {
    std::string id;
    int frob_power = 0;
    bool inertial = false;
    GraphAut aut;
    std::map<std::string, CoordTwist> twists;  // keyed by fixed component id
};

/**
 * Complete semistable-fibre datum: residue field, components, dual graph,
 * semilinear elements with a designated Frobenius lift and inertia subset,
 * and a (possibly partial) composition table over the listed element ids.
 * "a*b" means apply a first, then b.
 */
struct FibreDescriptor {
    std::int64_t p = 0;
    int n0 = 1;
    FqField residue_field;
    std::vector<Component> components;
    DualGraph graph;
    std::vector<SemilinearElt> elements;
    std::string frobenius_id;
    std::map<std::string, std::string> composition;  // "a*b" -> c
    bool tame = true;

    const SemilinearElt* find_element(const std::string& id) const;
    const Component* find_component(const std::string& id) const;
    std::vector<const SemilinearElt*> inertia() const;

    /// Table lookup for "a then b"; nullopt when the product is not listed.
    std::optional<std::string> resolve(const std::string& a, const std::string& b) const;

    /// Full invariant check; empty list when the descriptor is valid.
    std::vector<std::string> validate() const;
    /// Throwing wrapper around validate().
    void require_valid() const;
};

/// Exact point count of a component over the m-th extension of the residue
/// field, by exhaustive enumeration (q^m + 1 for a projective line).
/// Error "field too large for enumeration" beyond 10^6 field elements.
std::int64_t count_points(const Component& c, const FqField& residue, int m);
std::int64_t count_points(const WeierstrassModel& w, int m);

/// Fixed points of the twisted map (x,y) -> (c2 x^(p^n), c3 y^(p^n)) on a
/// Weierstrass component, counted over the residue closure; the point at
/// infinity is always fixed. For n >= 1 this enumerates the field
/// F_{p^lcm(n0, n r)} where r is the least power making the r-fold composite
/// an untwisted Frobenius; for n = 0 the fixed locus is cut out by
/// coordinate equations and counted directly.
std::int64_t count_fixed(const WeierstrassModel& w, const CoordTwist& t, int frob_power);

/// Lefschetz trace on H^1 of a single component for the action
/// (twist, Frobenius power): 1 + deg - #fixed with deg = p^n (n >= 1) or 1
/// (n = 0). Identity acts with trace 2*genus (special case, not Lefschetz).
Int trace_on_h1(const Component& c, const CoordTwist& t, int frob_power);

/// Trace of a listed element on H^1 of a component it fixes. TraceTable
/// components read their table; equation components go through Lefschetz.
Int trace_on_h1(const FibreDescriptor& d, const Component& c, const SemilinearElt& e);

/// Traces of e, e^2, ..., e^r on the full abelian part (sum over components
/// fixed by the power). Powers of moved components resolve through the
/// composition table; unresolvable products raise
/// "product not resolvable through composition table".
std::vector<Int> trace_power_sums(const FibreDescriptor& d,
                                  const std::string& elem_id, std::size_t r);

/// Trace of (base, then m powers of the designated Frobenius) on the
/// abelian part. This is the working primitive behind inertia averaging.
Int trace_abelian_frob_shift(const FibreDescriptor& d,
                             const std::string& base_elem_id, std::size_t m);

}  // namespace galred

#endif
