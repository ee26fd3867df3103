#include "galred/ff.hpp"

#include <algorithm>
#include <sstream>

namespace galred {

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t v) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients mod p, constant first

int poly_deg(const Poly& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[d] == 0) --d;
    return d;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    return ((t % p) + p) % p;
}

// f mod g, both over F_p, g nonzero
Poly poly_rem(Poly f, const Poly& g, std::int64_t p) {
    int dg = poly_deg(g);
    std::int64_t lead_inv = mod_inv(g[dg], p);
    for (int df = poly_deg(f); df >= dg; df = poly_deg(f)) {
        std::int64_t c = (f[df] * lead_inv) % p;
        int shift = df - dg;
        for (int i = 0; i <= dg; ++i) {
            f[i + shift] = ((f[i + shift] - c * g[i]) % p + p) % p;
        }
    }
    return f;
}

bool poly_is_zero(const Poly& f) { return poly_deg(f) < 0; }

// exhaustive trial division by monic polynomials of degree 1..deg/2
bool poly_irreducible(const Poly& f, std::int64_t p) {
    int n = poly_deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::int64_t v = idx;
            for (int i = 0; i < d; ++i) { g[i] = v % p; v /= p; }
            g[d] = 1;
            if (poly_is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

FqField FqField::make(std::int64_t p, int n) {
    if (!is_prime(p) || p == 2) throw Error("not prime");
    if (n < 1 || n > 12) throw Error("degree out of range");
    std::int64_t q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw Error("field too large");
    }
    FqField f;
    f.p_ = p;
    f.n_ = n;
    f.q_ = q;
    // least monic irreducible of degree n: coefficient vectors read as
    // base-p integers, most significant first
    std::int64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    for (std::int64_t idx = 0; idx < pn; ++idx) {
        Poly cand(n + 1, 0);
        std::int64_t v = idx;
        for (int i = 0; i < n; ++i) { cand[i] = v % p; v /= p; }
        cand[n] = 1;
        if (poly_irreducible(cand, p)) {
            f.modulus_ = cand;
            return f;
        }
    }
    throw Error("no irreducible modulus found");  // unreachable
}

FqElem FqField::one() const {
    FqElem a = zero();
    a.c[0] = 1;
    return a;
}

FqElem FqField::from_int(std::int64_t v) const {
    FqElem a = zero();
    a.c[0] = ((v % p_) + p_) % p_;
    return a;
}

FqElem FqField::element(std::int64_t idx) const {
    FqElem a = zero();
    for (int i = 0; i < n_; ++i) { a.c[i] = idx % p_; idx /= p_; }
    return a;
}

std::int64_t FqField::index_of(const FqElem& a) const {
    std::int64_t idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + a.c[i];
    return idx;
}

bool FqField::is_zero(const FqElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](std::int64_t v) { return v == 0; });
}

FqElem FqField::add(const FqElem& a, const FqElem& b) const {
    FqElem out = zero();
    for (int i = 0; i < n_; ++i) out.c[i] = (a.c[i] + b.c[i]) % p_;
    return out;
}

FqElem FqField::sub(const FqElem& a, const FqElem& b) const {
    FqElem out = zero();
    for (int i = 0; i < n_; ++i) out.c[i] = ((a.c[i] - b.c[i]) % p_ + p_) % p_;
    return out;
}

FqElem FqField::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem FqField::mul(const FqElem& a, const FqElem& b) const {
    // schoolbook product then reduction by the monic modulus
    std::vector<std::int64_t> prod(2 * n_ - 1, 0);
    for (int i = 0; i < n_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < n_; ++j)
            prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p_;
    }
    for (int d = 2 * n_ - 2; d >= n_; --d) {
        std::int64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < n_; ++i) {
            int k = d - n_ + i;
            prod[k] = ((prod[k] - c * modulus_[i]) % p_ + p_) % p_;
        }
    }
    FqElem out = zero();
    for (int i = 0; i < n_; ++i) out.c[i] = prod[i];
    return out;
}

FqElem FqField::pow(const FqElem& a, std::uint64_t e) const {
    FqElem acc = one();
    FqElem base = a;
    while (e > 0) {
        if (e & 1ULL) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1ULL;
    }
    return acc;
}

FqElem FqField::inv(const FqElem& a) const {
    if (is_zero(a)) throw Error("division by zero");
    return pow(a, static_cast<std::uint64_t>(q_ - 2));
}

FqElem FqField::frobenius(const FqElem& a, std::uint64_t m) const {
    std::uint64_t mm = m % static_cast<std::uint64_t>(n_);
    if (mm == 0) return a;
    std::uint64_t e = 1;
    for (std::uint64_t i = 0; i < mm; ++i) e *= static_cast<std::uint64_t>(p_);
    return pow(a, e);
}

std::int64_t FqField::mult_order(const FqElem& a) const {
    if (is_zero(a)) throw Error("order of zero");
    std::int64_t ord = q_ - 1;
    for (std::int64_t f : prime_factors(q_ - 1)) {
        while (ord % f == 0 &&
               pow(a, static_cast<std::uint64_t>(ord / f)) == one())
            ord /= f;
    }
    return ord;
}

FqElem FqField::generator() const {
    const auto factors = prime_factors(q_ - 1);
    for (std::int64_t idx = 1; idx < q_; ++idx) {
        FqElem g = element(idx);
        bool primitive = true;
        for (std::int64_t f : factors) {
            if (pow(g, static_cast<std::uint64_t>((q_ - 1) / f)) == one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw Error("no generator found");  // unreachable for q > 2
}

FqElem FqField::root_of_unity(std::int64_t e) const {
    if (e < 1 || (q_ - 1) % e != 0)
        throw Error("no e-th root of unity in this field");
    if (e == 1) return one();
    return pow(generator(), static_cast<std::uint64_t>((q_ - 1) / e));
}

int FqField::sqrt_count(const FqElem& a) const {
    if (is_zero(a)) return 1;
    return pow(a, static_cast<std::uint64_t>((q_ - 1) / 2)) == one() ? 2 : 0;
}

std::string FqField::to_string(const FqElem& a) const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << a.c[i];
    os << "]";
    return os.str();
}

FqEmbedding::FqEmbedding(const FqField& from, const FqField& to)
    : from_(&from), to_(&to) {
    if (from.p() != to.p() || to.degree() % from.degree() != 0)
        throw Error("no embedding between these fields");
    if (from.degree() == 1) {
        image_of_x_ = to.zero();  // modulus is x; its root is 0
        return;
    }
    const auto& mod = from.modulus();
    for (std::int64_t idx = 0; idx < to.q(); ++idx) {
        FqElem z = to.element(idx);
        // Horner evaluation of the from-modulus at z
        FqElem acc = to.zero();
        for (int i = from.degree(); i >= 0; --i) {
            acc = to.mul(acc, z);
            acc = to.add(acc, to.from_int(mod[i]));
        }
        if (to.is_zero(acc)) {
            image_of_x_ = z;
            return;
        }
    }
    throw Error("modulus has no root in target field");  // unreachable
}

FqElem FqEmbedding::apply(const FqElem& a) const {
    FqElem acc = to_->zero();
    for (int i = from_->degree() - 1; i >= 0; --i) {
        acc = to_->mul(acc, image_of_x_);
        acc = to_->add(acc, to_->from_int(a.c[i]));
    }
    return acc;
}

}  // namespace galred
