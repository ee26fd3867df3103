#ifndef GALRED_EXACTLIN_HPP
#define GALRED_EXACTLIN_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace galred {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Library-wide error type. Messages are stable and tested against.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Dense integer matrix with arbitrary-precision entries, row-major.
 * Everything in this project is desk-scale; no sparsity, no floating point.
 */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    Int trace() const;
    /// Exact determinant (fraction-free Bareiss). Square matrices only.
    Int det() const;
    IntMatrix pow(unsigned long long k) const;

    /// Rows i..j-1 as a new matrix.
    IntMatrix row_slice(std::size_t i, std::size_t j) const;
    /// [this | other] side by side; row counts must agree.
    IntMatrix hcat(const IntMatrix& other) const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

/**
 * Integer polynomial, constant term first. The zero polynomial is the empty
 * coefficient list; otherwise the leading coefficient is nonzero.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly one() { return IntPoly({1}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Int>& coefficients() const { return coeffs_; }

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    bool operator==(const IntPoly& other) const = default;

    /// "1 - 3*T + 7*T^2" style rendering.
    std::string to_string() const;

private:
    std::vector<Int> coeffs_;
};

/// Row echelon (Hermite) form of m with a unimodular row tracker u, u*m = h.
/// The pivot rule is fixed so outputs are reproducible: columns left to
/// right, Euclidean reduction on the row whose entry has least |value|
/// (ties to the lowest row index), pivots made positive, entries above
/// pivots reduced into [0, pivot).
struct EchelonForm {
    IntMatrix h;                  // echelon form
    IntMatrix u;                  // unimodular, u * input = h
    std::vector<std::size_t> pivot_cols;
};
EchelonForm row_echelon(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Hermite-normalize the row lattice of m (drops zero rows).
IntMatrix hermite_rows(const IntMatrix& m);

/// Basis of the left kernel lattice {v : v*m = 0} in Z^rows. The result is
/// saturated (Z^rows / span has no torsion) and deterministic: rows are the
/// Hermite normal form of the kernel lattice.
IntMatrix kernel_basis(const IntMatrix& m);

/// Given a lattice basis b (rows) and a matrix p mapping span(b) into
/// itself, return r with b*p = r*b, integer entries. Throws
/// "action does not preserve lattice" if no integer solution exists.
IntMatrix restrict_action(const IntMatrix& p, const IntMatrix& b);

/// Inverse of a unimodular integer matrix (det must be +-1).
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Contragredient action: inverse transpose.
IntMatrix inverse_transpose(const IntMatrix& m);

/// Newton's identities: from power sums p_1..p_r of an operator whose
/// nonzero spectrum has exactly r values (with multiplicity), reconstruct
/// det(1 - T*Op) as an integer polynomial with constant term 1. The
/// recursion runs over exact rationals; a non-integer elementary symmetric
/// function signals inconsistent trace data and raises
/// "non-integral characteristic polynomial".
IntPoly newton_char_poly(const std::vector<Rat>& power_sums, std::size_t rank);

}  // namespace galred

#endif
