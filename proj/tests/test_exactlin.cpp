#include "galred/exactlin.hpp"

#include <doctest.h>

#include <random>

using namespace galred;

namespace {

// independent oracle: det(1 - T*A) by cofactor expansion over polynomial
// entries, never through Newton's identities
using PolyMat = std::vector<std::vector<IntPoly>>;

IntPoly poly_det(const PolyMat& m) {
    std::size_t n = m.size();
    if (n == 0) return IntPoly::one();
    if (n == 1) return m[0][0];
    IntPoly acc;
    for (std::size_t i = 0; i < n; ++i) {
        PolyMat minor;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<IntPoly> row;
            for (std::size_t c = 1; c < n; ++c) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        IntPoly term = m[i][0] * poly_det(minor);
        if (i % 2 == 1) term = term * IntPoly({-1});
        acc = acc + term;
    }
    return acc;
}

IntPoly one_minus_ta(const IntMatrix& a) {
    PolyMat m(a.rows(), std::vector<IntPoly>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::vector<Int> coeffs{i == j ? Int(1) : Int(0), -a.at(i, j)};
            m[i][j] = IntPoly(coeffs);
        }
    return poly_det(m);
}

// brute-force small-entry kernel vectors of v*M = 0
std::vector<std::vector<long long>> brute_kernel_vectors(const IntMatrix& m, long long bound) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> v(m.rows(), -bound);
    for (;;) {
        bool zero = true, in_kernel = true;
        for (long long x : v)
            if (x != 0) { zero = false; break; }
        if (!zero) {
            for (std::size_t j = 0; j < m.cols() && in_kernel; ++j) {
                Int s = 0;
                for (std::size_t i = 0; i < m.rows(); ++i) s += Int(v[i]) * m.at(i, j);
                if (s != 0) in_kernel = false;
            }
            if (in_kernel) out.push_back(v);
        }
        std::size_t i = 0;
        while (i < v.size() && v[i] == bound) v[i++] = -bound;
        if (i == v.size()) break;
        ++v[i];
    }
    return out;
}

// gcd of all k x k minors; 1 iff the row lattice is saturated
Int minor_gcd(const IntMatrix& b) {
    std::size_t k = b.rows(), n = b.cols();
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    Int g = 0;
    for (;;) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = b.at(i, idx[j]);
        g = boost::multiprecision::gcd(g, sub.det());
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return g < 0 ? Int(-g) : g;
}

}  // namespace

TEST_CASE("kernel basis: forced rank one") {
    IntMatrix m{{1}, {-1}};
    IntMatrix k = kernel_basis(m);
    REQUIRE(k.rows() == 1);
    CHECK(k == IntMatrix{{1, 1}});
}

TEST_CASE("kernel basis: injective map has zero kernel") {
    CHECK(kernel_basis(IntMatrix::identity(2)).rows() == 0);
}

TEST_CASE("kernel basis: rank-one square matrix, against brute-force search") {
    IntMatrix m{{1, 1}, {1, 1}};
    IntMatrix k = kernel_basis(m);
    REQUIRE(k.rows() == 1);
    CHECK(k == IntMatrix{{1, -1}});
    // every small kernel vector is an integer multiple of the basis row
    for (const auto& v : brute_kernel_vectors(m, 3)) {
        CHECK(v[0] == -v[1]);
    }
}

TEST_CASE("kernel basis is saturated, random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = dist(rng);
        IntMatrix k = kernel_basis(m);
        if (k.rows() == 0) continue;
        // basis rows really are in the kernel
        IntMatrix prod = k * m;
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j) == 0);
        CHECK(minor_gcd(k) == 1);
        CHECK(k.rows() == m.rows() - rank(m));
    }
}

TEST_CASE("restrict_action: identity and the loop swap") {
    IntMatrix b{{1, -1}};
    CHECK(restrict_action(IntMatrix::identity(2), b) == IntMatrix::identity(1));
    // swap of the two endpoints of a loop acts by -1 on the cycle
    IntMatrix swap{{0, 1}, {1, 0}};
    CHECK(restrict_action(swap, b) == IntMatrix{{-1}});
}

TEST_CASE("restrict_action: oriented 3-cycle rotation acts trivially") {
    // boundary of a triangle, edges oriented cyclically
    IntMatrix boundary{{-1, 1, 0}, {0, -1, 1}, {1, 0, -1}};
    IntMatrix b = kernel_basis(boundary);
    REQUIRE(b.rows() == 1);
    IntMatrix rot{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    CHECK(restrict_action(rot, b) == IntMatrix{{1}});
}

TEST_CASE("restrict_action rejects maps leaving the lattice") {
    IntMatrix b{{1, 0}};
    IntMatrix off_axis{{0, 1}, {1, 0}};
    CHECK_THROWS_WITH_AS(restrict_action(off_axis, b),
                         "action does not preserve lattice", Error);
}

TEST_CASE("restrict_action is functorial") {
    IntMatrix boundary{{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {1, 0, 0, -1}};
    IntMatrix b = kernel_basis(boundary);
    IntMatrix rot{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}};
    IntMatrix refl{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    for (const IntMatrix& p1 : {rot, refl})
        for (const IntMatrix& p2 : {rot, refl})
            CHECK(restrict_action(p1 * p2, b) ==
                  restrict_action(p1, b) * restrict_action(p2, b));
}

TEST_CASE("newton reconstruction: pinned examples") {
    CHECK(newton_char_poly({}, 0) == IntPoly::one());
    CHECK(newton_char_poly({Rat(5)}, 1) == IntPoly({1, -5}));
    // e1 = 0, e2 = -1: spectrum {1, -1}
    CHECK(newton_char_poly({Rat(0), Rat(2)}, 2) == IntPoly({1, 0, -1}));
}

TEST_CASE("newton reconstruction rejects inconsistent traces") {
    CHECK_THROWS_WITH_AS(newton_char_poly({Rat(1), Rat(2)}, 2),
                         "non-integral characteristic polynomial", Error);
}

TEST_CASE("newton round trip against cofactor expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-3, 3);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = dim(rng);
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = dist(rng);
        std::vector<Rat> sums;
        IntMatrix pw = IntMatrix::identity(n);
        for (std::size_t m = 1; m <= n; ++m) {
            pw = pw * a;
            sums.emplace_back(pw.trace());
        }
        CHECK(newton_char_poly(sums, n) == one_minus_ta(a));
    }
}

TEST_CASE("unimodular inverse and contragredient") {
    IntMatrix m{{2, 1}, {1, 1}};
    CHECK(unimodular_inverse(m) * m == IntMatrix::identity(2));
    CHECK(inverse_transpose(m).transpose() * m == IntMatrix::identity(2));
    IntMatrix bad{{2, 0}, {0, 1}};
    CHECK_THROWS_AS(unimodular_inverse(bad), Error);
}

TEST_CASE("poly printing") {
    CHECK(IntPoly({1, -4, 7}).to_string() == "1 - 4*T + 7*T^2");
    CHECK(IntPoly({1}).to_string() == "1");
    CHECK(IntPoly({}).to_string() == "0");
}
