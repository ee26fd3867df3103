#ifndef GALRED_TATE_HPP
#define GALRED_TATE_HPP

#include "galred/fibre.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace galred {

/**
 * The three graded pieces of the canonical filtration in computable form.
 * Weight 0 and weight 2 are the graph (co)homology lattices with their
 * per-element action matrices; the middle (abelian) piece is reached through
 * trace oracles on the components. Everything is reported on H^1 of the
 * curve: the toric piece corresponds to the weight-2 quotient there, and
 * the graph cohomology H^1(graph) sits inside with trivial twist.
 */
struct GradedPieces {
    std::size_t toric_rank = 0;   // = h1_rank
    std::size_t h1_rank = 0;
    std::size_t abelian_rank = 0; // 2 * total genus of the components
    H1Lattice lattice;
    std::map<std::string, IntMatrix> h1_action;   // H_1(graph) per element
    std::map<std::string, IntMatrix> coh_action;  // contragredient, H^1(graph)
};

GradedPieces graded_pieces(const FibreDescriptor& d);

/// (toric, abelian, h1) ranks.
std::tuple<std::size_t, std::size_t, std::size_t> graded_ranks(const FibreDescriptor& d);

/// Cyclotomic character: chi_cyc(e) = p^frob_power(e).
Int chi_cyc(const FibreDescriptor& d, const std::string& elem_id);

/// Trace of an element on H^1 of the curve:
///   Tr(e | H^1(graph)) * (1 + chi_cyc(e)) + Tr(e | abelian part).
/// The graph factor carries the 2-dimensional special representation.
Int element_trace(const FibreDescriptor& d, const std::string& elem_id);

struct InertiaInvariants {
    std::size_t dim0 = 0;                // weight-0 invariant dimension
    std::size_t dim_ab = 0;              // abelian invariant dimension
    IntMatrix fixed_basis;               // basis of the fixed sublattice of H^1(graph)
    IntMatrix frob_on_fixed;             // designated Frobenius restricted to it
    std::vector<Int> weight0_power_sums; // traces of Frob^m there, m = 1..dim0+extra
    std::vector<Rat> abelian_power_sums; // averaged Frob^m traces, m = 1..dim_ab+extra
};

/// Inertia averaging. dim_ab is the trace of the averaging idempotent on
/// the abelian part and must come out a non-negative integer
/// ("non-integral invariant dimension" otherwise); the inertia subset must
/// be a group under the composition table ("inertia set not a group").
/// `extra` extends both power-sum lists beyond what the L-factor needs.
InertiaInvariants inertia_invariants(const FibreDescriptor& d, std::size_t extra = 0);

struct LocalLFactor {
    IntPoly poly;
    std::size_t dim0 = 0;
    std::size_t dim_ab = 0;
};

/// Local L-factor det(1 - Frob T | inertia invariants of H^1): the weight-0
/// factor from the integer Frobenius matrix on the fixed sublattice times
/// the Newton reconstruction from the abelian invariant power sums.
/// Weight-2 quotient invariants never contribute (nondegenerate monodromy
/// pairing; Jacobian case).
LocalLFactor l_factor(const FibreDescriptor& d);

/// Tame conductor exponent f = (2 h1 + abelian) - (dim0 + dim_ab).
/// Error "descriptor not flagged tame" when the descriptor is not tame.
std::size_t conductor_exponent(const FibreDescriptor& d);

struct DualityResult {
    bool ok = true;
    std::vector<std::string> offenders;  // element ids
};

/// Lattice-level orthogonality: for every element the weight-0 (H^1) matrix
/// must be the inverse transpose of the weight-2 (H_1) matrix, i.e.
/// coh^T * h1 = identity.
DualityResult duality_check(const GradedPieces& gp);
DualityResult duality_check(const FibreDescriptor& d);

}  // namespace galred

#endif
