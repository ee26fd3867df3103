#ifndef GALRED_FF_HPP
#define GALRED_FF_HPP

#include "galred/exactlin.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace galred {

/// Element of F_{p^n}: coefficient vector of length n in the modulus basis,
/// entries reduced mod p, constant coefficient first. Plain data; all
/// arithmetic goes through the owning FqField.
struct FqElem {
    std::vector<std::int64_t> c;
    bool operator==(const FqElem&) const = default;
};

/**
 * Small finite field F_{p^n}, p an odd prime, built as F_p[x]/(modulus).
 * The modulus is the least monic irreducible polynomial of degree n when
 * coefficient vectors are read as base-p integers (most significant digit
 * first), so fields are reproducible across runs. Everything is exhaustive,
 * desk-scale arithmetic: fields are capped at q <= 10^6.
 */
class FqField {
public:
    static constexpr std::int64_t kMaxFieldSize = 1000000;

    /// Deterministic field construction. Errors: "not prime",
    /// "degree out of range", "field too large".
    static FqField make(std::int64_t p, int n);

    std::int64_t p() const { return p_; }
    int degree() const { return n_; }
    std::int64_t q() const { return q_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    FqElem zero() const { return FqElem{std::vector<std::int64_t>(n_, 0)}; }
    FqElem one() const;
    FqElem from_int(std::int64_t v) const;
    /// Element with coefficient vector equal to the base-p digits of idx.
    FqElem element(std::int64_t idx) const;
    /// Inverse of element(): sum c_i p^i.
    std::int64_t index_of(const FqElem& a) const;

    bool is_zero(const FqElem& a) const;
    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    /// a^e for e >= 0 (e reduced by the caller when it matters).
    FqElem pow(const FqElem& a, std::uint64_t e) const;
    /// Multiplicative inverse; error on zero.
    FqElem inv(const FqElem& a) const;

    /// a^(p^m); the m-fold arithmetic Frobenius. m may be any non-negative
    /// integer (reduced mod n internally since Frobenius has order n).
    FqElem frobenius(const FqElem& a, std::uint64_t m) const;

    /// Least primitive e-th root of unity: (least generator)^((q-1)/e).
    /// Error "no e-th root of unity in this field" when e does not divide q-1.
    FqElem root_of_unity(std::int64_t e) const;

    /// Multiplicative order of a nonzero element.
    std::int64_t mult_order(const FqElem& a) const;

    /// Number of y with y^2 = a: 1 if a = 0, else 2 or 0.
    int sqrt_count(const FqElem& a) const;

    /// Least generator of the unit group, by element index.
    FqElem generator() const;

    std::string to_string(const FqElem& a) const;

    bool operator==(const FqField&) const = default;

    /// Default state is an empty placeholder; use make() to build a field.
    FqField() = default;

private:
    std::int64_t p_ = 0;
    int n_ = 0;
    std::int64_t q_ = 0;
    std::vector<std::int64_t> modulus_;  // length n+1, monic
};

/// Canonical embedding F_{p^a} -> F_{p^b} for a | b: the from-field
/// generator x is sent to the least root (by element index) of the
/// from-modulus in the target field.
class FqEmbedding {
public:
    FqEmbedding(const FqField& from, const FqField& to);
    FqElem apply(const FqElem& a) const;
    const FqField& from() const { return *from_; }
    const FqField& to() const { return *to_; }

private:
    const FqField* from_;
    const FqField* to_;
    FqElem image_of_x_;
};

/// Prime test by trial division (inputs are tiny).
bool is_prime(std::int64_t v);

/// Prime factors of v > 0, without multiplicity.
std::vector<std::int64_t> prime_factors(std::int64_t v);

}  // namespace galred

#endif
