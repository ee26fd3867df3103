#include "galred/elliptic.hpp"

#include <numeric>
#include <sstream>

namespace galred {

std::string to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::good: return "good";
        case ReductionKind::mult_split: return "mult_split";
        case ReductionKind::mult_nonsplit: return "mult_nonsplit";
        case ReductionKind::pot_good: return "pot_good";
        case ReductionKind::pot_mult: return "pot_mult";
    }
    return "?";
}

int valuation(const Rat& r, std::int64_t p) {
    if (r == 0) throw Error("valuation of zero");
    Int num = numerator(r), den = denominator(r);
    int v = 0;
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return v;
}

std::int64_t reduce_mod_p(const Rat& r, std::int64_t p) {
    Int num = numerator(r) % p, den = denominator(r) % p;
    auto to_ll = [&](const Int& v) {
        return static_cast<std::int64_t>(((v % p) + p) % p);
    };
    std::int64_t n = to_ll(num), d = to_ll(den);
    if (d == 0) throw Error("rational is not p-integral");
    // d^(p-2) mod p
    std::int64_t inv = 1, base = d, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = (inv * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return (n * inv) % p;
}

namespace {

std::int64_t legendre(std::int64_t a, std::int64_t p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    std::int64_t r = 1, base = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

int ceil_div(int a, int b) {  // b > 0
    int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// square class of a nonzero rational in Qp*/(Qp*)^2, encoded 1/u/p/up
std::string square_class(const Rat& r, std::int64_t p) {
    int v = valuation(r, p);
    Rat scale = Rat(boost::multiprecision::pow(Int(p), static_cast<unsigned>(std::abs(v))));
    Rat unit = v >= 0 ? Rat(r / scale) : Rat(r * scale);
    bool ram = (std::abs(v) % 2) == 1;
    bool qr = legendre(reduce_mod_p(unit, p), p) == 1;
    if (ram) return qr ? "p" : "up";
    return qr ? "1" : "u";
}

}  // namespace

ReductionClass minimal_data(const WeierstrassCurve& curve) {
    if (!is_prime(curve.p)) throw Error("not prime");
    if (curve.p < 5) throw UnsupportedRegime("residue characteristic too small");
    const std::int64_t p = curve.p;
    const Rat &a1 = curve.a1, &a2 = curve.a2, &a3 = curve.a3, &a4 = curve.a4, &a6 = curve.a6;
    Rat b2 = a1 * a1 + 4 * a2;
    Rat b4 = 2 * a4 + a1 * a3;
    Rat b6 = a3 * a3 + 4 * a6;
    Rat b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    Rat c4 = b2 * b2 - 24 * b4;
    Rat c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    Rat disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if (disc == 0) throw Error("singular curve");
    // short model with the same c-invariants; 48 and 864 are p-units
    Rat A = -c4 / 48;
    Rat B = -c6 / 864;
    // least scale exponent making both coefficients integral; by minimality
    // of the max, the result has v(A) < 4 or v(B) < 6
    int s;
    if (A == 0) {
        s = ceil_div(-valuation(B, p), 6);
    } else if (B == 0) {
        s = ceil_div(-valuation(A, p), 4);
    } else {
        s = std::max(ceil_div(-valuation(A, p), 4), ceil_div(-valuation(B, p), 6));
    }
    Rat scale4 = Rat(boost::multiprecision::pow(Int(p), static_cast<unsigned>(std::abs(4 * s))));
    Rat scale6 = Rat(boost::multiprecision::pow(Int(p), static_cast<unsigned>(std::abs(6 * s))));
    ReductionClass rc;
    rc.p = p;
    rc.A = s >= 0 ? Rat(A * scale4) : Rat(A / scale4);
    rc.B = s >= 0 ? Rat(B * scale6) : Rat(B / scale6);
    Rat disc_min = Rat(-16) * (4 * rc.A * rc.A * rc.A + 27 * rc.B * rc.B);
    rc.v_disc = valuation(disc_min, p);
    if (rc.A != 0) rc.v_c4 = valuation(Rat(-48) * rc.A, p);
    if (rc.v_c4) rc.v_j = 3 * *rc.v_c4 - rc.v_disc;
    return rc;
}

ReductionClass classify(ReductionClass rc) {
    const std::int64_t p = rc.p;
    if (rc.v_disc == 0) {
        rc.kind = ReductionKind::good;
        rc.kodaira = "I0";
        rc.m_components = 1;
        rc.e = 1;
        return rc;
    }
    if (!rc.j_integral()) {
        // -c6 = 864 B is nonzero here
        rc.twist_class = square_class(Rat(864) * rc.B, p);
        if (*rc.v_c4 == 0) {
            int n = rc.v_disc;
            rc.kind = rc.twist_class == "1" ? ReductionKind::mult_split
                                            : ReductionKind::mult_nonsplit;
            rc.kodaira = "I" + std::to_string(n);
            rc.m_components = n;
            rc.e = 1;
            return rc;
        }
        int m = rc.v_disc - 6;
        rc.kind = ReductionKind::pot_mult;
        rc.kodaira = "I" + std::to_string(m) + "*";
        rc.m_components = 5 + m;
        rc.e = 2;
        return rc;
    }
    rc.kind = ReductionKind::pot_good;
    rc.e = 12 / std::gcd(rc.v_disc, 12);
    switch (rc.v_disc) {
        case 2: rc.kodaira = "II"; rc.m_components = 1; break;
        case 3: rc.kodaira = "III"; rc.m_components = 2; break;
        case 4: rc.kodaira = "IV"; rc.m_components = 3; break;
        case 6: rc.kodaira = "I0*"; rc.m_components = 5; break;
        case 8: rc.kodaira = "IV*"; rc.m_components = 7; break;
        case 9: rc.kodaira = "III*"; rc.m_components = 8; break;
        case 10: rc.kodaira = "II*"; rc.m_components = 9; break;
        default: throw Error("impossible minimal discriminant valuation");
    }
    return rc;
}

int ogg_conductor(const ReductionClass& rc) {
    return rc.v_disc - rc.m_components + 1;
}

namespace {

// N-gon dual graph on projective lines: vertices L0..L{N-1}, edge ei from
// Li to L{i+1 mod N} with endpoints k{2i} (on Li) and k{2i+1} (on L{i+1}).
// N = 1 is the loop.
DualGraph make_gon(int N) {
    DualGraph g;
    for (int i = 0; i < N; ++i) g.vertices.push_back("L" + std::to_string(i));
    for (int i = 0; i < N; ++i) {
        std::string e = "e" + std::to_string(i);
        std::string k0 = "k" + std::to_string(2 * i);
        std::string k1 = "k" + std::to_string(2 * i + 1);
        g.edges.push_back(e);
        g.endpoints.push_back(k0);
        g.endpoints.push_back(k1);
        g.phi[k0] = e;
        g.phi[k1] = e;
        g.psi[k0] = "L" + std::to_string(i);
        g.psi[k1] = "L" + std::to_string((i + 1) % N);
    }
    return g;
}

// orientation-reversing reflection of the N-gon (the loop-endpoint swap
// for N = 1); acts by -1 on H_1
GraphAut gon_reflection(int N) {
    GraphAut a;
    for (int i = 0; i < N; ++i) {
        int ri = (N - i) % N;      // vertex target
        int re = (N - 1 - i) % N;  // edge target
        a.piJ["L" + std::to_string(i)] = "L" + std::to_string(ri);
        a.piI["e" + std::to_string(i)] = "e" + std::to_string(re);
        a.piK["k" + std::to_string(2 * i)] = "k" + std::to_string(2 * re + 1);
        a.piK["k" + std::to_string(2 * i + 1)] = "k" + std::to_string(2 * re);
    }
    return a;
}

DualGraph single_vertex_graph(const std::string& id) {
    DualGraph g;
    g.vertices.push_back(id);
    return g;
}

std::string tau_id(int k) {
    if (k == 0) return "id";
    if (k == 1) return "tau";
    return "tau" + std::to_string(k);
}

}  // namespace

FibreDescriptor semistable_descriptor(const ReductionClass& rc) {
    const std::int64_t p = rc.p;
    FibreDescriptor d;
    d.p = p;
    d.tame = true;
    d.frobenius_id = "frob";

    auto add_identity_products = [&d](const std::vector<std::string>& ids) {
        for (const auto& x : ids) {
            d.composition["id*" + x] = x;
            d.composition[x + "*id"] = x;
        }
    };

    switch (rc.kind) {
        case ReductionKind::good: {
            d.n0 = 1;
            d.residue_field = FqField::make(p, 1);
            const FqField& F = d.residue_field;
            WeierstrassModel w{F, F.zero(), F.from_int(reduce_mod_p(rc.A, p)),
                               F.from_int(reduce_mod_p(rc.B, p))};
            d.components.push_back(Component{"E", 1, w});
            d.graph = single_vertex_graph("E");
            CoordTwist trivial{F.one(), F.one()};
            SemilinearElt id_elt{"id", 0, true, GraphAut::identity(d.graph), {{"E", trivial}}};
            SemilinearElt frob{"frob", 1, false, GraphAut::identity(d.graph), {{"E", trivial}}};
            d.elements = {id_elt, frob};
            add_identity_products({"id", "frob"});
            return d;
        }
        case ReductionKind::mult_split:
        case ReductionKind::mult_nonsplit: {
            d.n0 = 1;
            d.residue_field = FqField::make(p, 1);
            int N = rc.v_disc;  // = -v(j)
            d.graph = make_gon(N);
            for (const auto& v : d.graph.vertices)
                d.components.push_back(Component{v, 0, ProjLineModel{}});
            GraphAut frob_aut = rc.kind == ReductionKind::mult_split
                                    ? GraphAut::identity(d.graph)
                                    : gon_reflection(N);
            SemilinearElt id_elt{"id", 0, true, GraphAut::identity(d.graph), {}};
            SemilinearElt frob{"frob", 1, false, frob_aut, {}};
            d.elements = {id_elt, frob};
            add_identity_products({"id", "frob"});
            return d;
        }
        case ReductionKind::pot_good: {
            const int e = rc.e;
            int n0 = 1;
            {
                std::int64_t pw = p % e;
                while (pw != 1 % e) { pw = (pw * (p % e)) % e; ++n0; }
            }
            d.n0 = n0;
            d.residue_field = FqField::make(p, n0);
            const FqField& F = d.residue_field;
            // reduction of the scaled minimal model x -> u^2 x, y -> u^3 y
            // with u = p^(v_disc/12); the surviving coefficient is a p-unit
            FqElem Abar = F.zero(), Bbar = F.zero();
            if (e == 2) {
                Abar = F.from_int(reduce_mod_p(rc.A / Rat(Int(p) * p), p));
                Bbar = F.from_int(reduce_mod_p(rc.B / Rat(Int(p) * p * p), p));
            } else if (e == 3 || e == 6) {
                Rat s = Rat(boost::multiprecision::pow(Int(p), static_cast<unsigned>(rc.v_disc / 2)));
                Bbar = F.from_int(reduce_mod_p(rc.B / s, p));
            } else {  // e == 4
                Rat s = Rat(boost::multiprecision::pow(Int(p), static_cast<unsigned>(rc.v_disc / 3)));
                Abar = F.from_int(reduce_mod_p(rc.A / s, p));
            }
            WeierstrassModel w{F, F.zero(), Abar, Bbar};
            d.components.push_back(Component{"E", 1, w});
            d.graph = single_vertex_graph("E");
            GraphAut triv = GraphAut::identity(d.graph);
            FqElem zeta = F.root_of_unity(e);
            int wexp = rc.v_disc / std::gcd(rc.v_disc, 12);  // sigma(u)/u = zeta^wexp
            for (int k = 0; k < e; ++k) {
                CoordTwist t{F.pow(zeta, static_cast<std::uint64_t>((2 * wexp * k) % e)),
                             F.pow(zeta, static_cast<std::uint64_t>((3 * wexp * k) % e))};
                d.elements.push_back(SemilinearElt{tau_id(k), 0, true, triv, {{"E", t}}});
            }
            CoordTwist trivial{F.one(), F.one()};
            d.elements.push_back(SemilinearElt{"frob", n0, false, triv, {{"E", trivial}}});
            for (int a = 0; a < e; ++a)
                for (int b = 0; b < e; ++b)
                    d.composition[tau_id(a) + "*" + tau_id(b)] = tau_id((a + b) % e);
            d.composition["id*frob"] = "frob";
            d.composition["frob*id"] = "frob";
            return d;
        }
        case ReductionKind::pot_mult: {
            d.n0 = 1;
            d.residue_field = FqField::make(p, 1);
            // -v(j) = v_disc - 6 >= 1 for I_m*; the gon doubles over the
            // ramified quadratic extension
            int N = 2 * (rc.v_disc - 6);
            d.graph = make_gon(N);
            for (const auto& v : d.graph.vertices)
                d.components.push_back(Component{v, 0, ProjLineModel{}});
            GraphAut refl = gon_reflection(N);
            GraphAut frob_aut = rc.twist_class == "p" ? GraphAut::identity(d.graph) : refl;
            SemilinearElt id_elt{"id", 0, true, GraphAut::identity(d.graph), {}};
            SemilinearElt tau{"tau", 0, true, refl, {}};
            SemilinearElt frob{"frob", 1, false, frob_aut, {}};
            d.elements = {id_elt, tau, frob};
            add_identity_products({"id", "tau", "frob"});
            d.composition["tau*tau"] = "id";
            return d;
        }
    }
    throw Error("unclassified reduction data");
}

}  // namespace galred
