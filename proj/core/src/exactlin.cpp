#include "galred/exactlin.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace galred {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw Error("entry count does not match matrix shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged initializer");
        for (long long v : r) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw Error("matrix shape mismatch in product");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error("matrix shape mismatch in sum");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error("matrix shape mismatch in difference");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

Int IntMatrix::trace() const {
    if (rows_ != cols_) throw Error("trace of non-square matrix");
    Int t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    // fraction-free Bareiss elimination
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMatrix IntMatrix::pow(unsigned long long k) const {
    if (rows_ != cols_) throw Error("power of non-square matrix");
    IntMatrix acc = identity(rows_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1ULL) acc = acc * base;
        base = base * base;
        k >>= 1ULL;
    }
    return acc;
}

IntMatrix IntMatrix::row_slice(std::size_t i, std::size_t j) const {
    if (i > j || j > rows_) throw Error("bad row slice");
    IntMatrix out(j - i, cols_);
    for (std::size_t r = i; r < j; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(r - i, c) = at(r, c);
    return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& other) const {
    if (rows_ != other.rows_) throw Error("hcat row mismatch");
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
    }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < other.coeffs_.size()) out[i] += other.coeffs_[i];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return IntPoly();
    std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "T";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

namespace {

// floor division quotient: a - q*b in [0, |b|)
Int floor_quot(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

EchelonForm row_echelon(const IntMatrix& m) {
    EchelonForm out{m, IntMatrix::identity(m.rows()), {}};
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        // Euclidean elimination below pr in this column
        for (;;) {
            std::size_t best = m.rows();
            for (std::size_t i = pr; i < m.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == m.rows() ||
                    abs(h.at(i, col)) < abs(h.at(best, col)))
                    best = i;
            }
            if (best == m.rows()) break;  // column clear
            swap_rows(h, pr, best);
            swap_rows(u, pr, best);
            bool reduced_all = true;
            for (std::size_t i = pr + 1; i < m.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = floor_quot(h.at(i, col), h.at(pr, col));
                add_row_multiple(h, i, pr, -q);
                add_row_multiple(u, i, pr, -q);
                if (h.at(i, col) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (h.at(pr, col) == 0) continue;
        if (h.at(pr, col) < 0) {
            negate_row(h, pr);
            negate_row(u, pr);
        }
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < pr; ++i) {
            Int q = floor_quot(h.at(i, col), h.at(pr, col));
            add_row_multiple(h, i, pr, -q);
            add_row_multiple(u, i, pr, -q);
        }
        out.pivot_cols.push_back(col);
        ++pr;
    }
    return out;
}

std::size_t rank(const IntMatrix& m) { return row_echelon(m).pivot_cols.size(); }

IntMatrix hermite_rows(const IntMatrix& m) {
    EchelonForm e = row_echelon(m);
    return e.h.row_slice(0, e.pivot_cols.size());
}

IntMatrix kernel_basis(const IntMatrix& m) {
    EchelonForm e = row_echelon(m);
    std::size_t r = e.pivot_cols.size();
    IntMatrix raw = e.u.row_slice(r, m.rows());
    // canonicalize: Hermite form of the kernel lattice
    return hermite_rows(raw);
}

namespace {

// Solve x * b = target over Q with integer result; nullopt when no integer
// (or no) solution exists. b has independent rows in the intended uses, but
// dependent rows are detected and rejected too.
std::optional<IntMatrix> solve_integer_left(const IntMatrix& b, const IntMatrix& target) {
    if (target.cols() != b.cols()) return std::nullopt;
    const std::size_t k = b.rows();     // unknowns per target row
    const std::size_t t = target.rows();
    const std::size_t n = b.cols();
    // Row-reduce [b^T | target^T] over Q.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + t));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(b.at(j, i));
        for (std::size_t j = 0; j < t; ++j) a[i][k + j] = Rat(target.at(j, i));
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row_of_col(k, n);
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = row; i < n; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv == n) continue;
        std::swap(a[row], a[piv]);
        Rat inv = a[row][col];
        for (std::size_t j = col; j < k + t; ++j) a[row][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < k + t; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    // consistency: non-pivot rows must have empty right-hand side
    for (std::size_t i = row; i < n; ++i)
        for (std::size_t j = 0; j < t; ++j)
            if (a[i][k + j] != 0) return std::nullopt;
    IntMatrix x(t, k);
    for (std::size_t col = 0; col < k; ++col) {
        if (pivot_row_of_col[col] == n) return std::nullopt;  // underdetermined
        for (std::size_t j = 0; j < t; ++j) {
            const Rat& v = a[pivot_row_of_col[col]][k + j];
            if (denominator(v) != 1) return std::nullopt;
            x.at(j, col) = numerator(v);
        }
    }
    return x;
}

}  // namespace

IntMatrix restrict_action(const IntMatrix& p, const IntMatrix& b) {
    if (b.cols() != p.rows() || p.rows() != p.cols())
        throw Error("matrix shape mismatch in restrict_action");
    auto r = solve_integer_left(b, b * p);
    if (!r) throw Error("action does not preserve lattice");
    return *r;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    Int d = m.det();
    if (d != 1 && d != -1) throw Error("matrix is not unimodular");
    auto x = solve_integer_left(m, IntMatrix::identity(m.rows()));
    if (!x) throw Error("matrix is not unimodular");
    return *x;
}

IntMatrix inverse_transpose(const IntMatrix& m) {
    return unimodular_inverse(m).transpose();
}

IntPoly newton_char_poly(const std::vector<Rat>& power_sums, std::size_t r) {
    if (power_sums.size() < r)
        throw Error("not enough power sums for requested rank");
    // e_0 = 1; m*e_m = sum_{i=1..m} (-1)^(i-1) e_{m-i} p_i
    std::vector<Rat> e(r + 1);
    e[0] = 1;
    for (std::size_t m = 1; m <= r; ++m) {
        Rat acc = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            Rat term = e[m - i] * power_sums[i - 1];
            if (i % 2 == 0) acc -= term; else acc += term;
        }
        e[m] = acc / Rat(static_cast<long>(m));
    }
    std::vector<Int> coeffs(r + 1);
    for (std::size_t m = 0; m <= r; ++m) {
        if (denominator(e[m]) != 1)
            throw Error("non-integral characteristic polynomial");
        coeffs[m] = (m % 2 == 0) ? Int(numerator(e[m])) : Int(-numerator(e[m]));
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace galred
