#ifndef GALRED_ELLIPTIC_HPP
#define GALRED_ELLIPTIC_HPP

#include "galred/fibre.hpp"

#include <optional>
#include <string>

namespace galred {

/// Elliptic curve over Q_p in long Weierstrass form, p >= 5.
struct WeierstrassCurve {
    Rat a1, a2, a3, a4, a6;
    std::int64_t p = 0;
};

enum class ReductionKind { good, mult_split, mult_nonsplit, pot_good, pot_mult };

std::string to_string(ReductionKind k);

/**
 * Reduction data of a curve at p: p-minimal short model y^2 = x^3 + Ax + B
 * (possible for p >= 5), valuations, and the completed classification with
 * Kodaira symbol and geometric component count m of the minimal regular
 * model's special fibre.
 */
struct ReductionClass {
    std::int64_t p = 0;
    Rat A, B;        // minimal short model coefficients (p-integral rationals)
    int v_disc = 0;  // valuation of the minimal discriminant
    std::optional<int> v_c4;  // empty when c4 = 0
    std::optional<int> v_j;   // empty when j = 0 (v(j) = +infinity)

    // classification (filled by classify)
    ReductionKind kind = ReductionKind::good;
    int e = 1;                  // semistability degree for pot_good
    std::string twist_class;    // square class of -c6 in {"1","u","p","up"}
    std::string kodaira;        // "I0", "In", "II", ..., "In*", "II*"
    int m_components = 1;       // geometric components of the special fibre

    bool j_integral() const { return !v_j || *v_j >= 0; }
};

/// Minimization only; classification fields left at defaults.
/// Errors: "residue characteristic too small" (p < 5, as Error subclass
/// UnsupportedRegime), "singular curve", "not prime".
ReductionClass minimal_data(const WeierstrassCurve& curve);

/// Complete the classification: kind, twist class, Kodaira symbol, m.
ReductionClass classify(ReductionClass rc);

/// Build the semistable-fibre descriptor realizing the reduction data and
/// the lift-act-reduce action of the tame generators.
FibreDescriptor semistable_descriptor(const ReductionClass& rc);

/// Independent conductor route: f = v(disc_min) - m + 1 (p >= 5).
int ogg_conductor(const ReductionClass& rc);

/// Raised when the residue characteristic is outside the supported range.
class UnsupportedRegime : public Error {
public:
    using Error::Error;
};

/// p-adic valuation of a nonzero rational.
int valuation(const Rat& r, std::int64_t p);

/// Reduction mod p of a p-integral rational.
std::int64_t reduce_mod_p(const Rat& r, std::int64_t p);

}  // namespace galred

#endif
