#include "galred/fibre.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace galred {

namespace {

constexpr std::int64_t kEnumCap = FqField::kMaxFieldSize;

std::int64_t ipow_checked(std::int64_t base, int e, std::int64_t cap) {
    std::int64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t acc = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) acc = (acc * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return acc;
}

}  // namespace

FqElem WeierstrassModel::rhs(const FqElem& x) const {
    // ((x + a2) x + a4) x + a6
    FqElem acc = field.add(x, a2);
    acc = field.mul(acc, x);
    acc = field.add(acc, a4);
    acc = field.mul(acc, x);
    return field.add(acc, a6);
}

FqElem WeierstrassModel::discriminant() const {
    const FqField& F = field;
    FqElem b2 = F.mul(F.from_int(4), a2);
    FqElem b4 = F.mul(F.from_int(2), a4);
    FqElem b6 = F.mul(F.from_int(4), a6);
    FqElem b8 = F.sub(F.mul(F.mul(F.from_int(4), a2), a6), F.mul(a4, a4));
    // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    FqElem t1 = F.neg(F.mul(F.mul(b2, b2), b8));
    FqElem t2 = F.neg(F.mul(F.from_int(8), F.mul(b4, F.mul(b4, b4))));
    FqElem t3 = F.neg(F.mul(F.from_int(27), F.mul(b6, b6)));
    FqElem t4 = F.mul(F.from_int(9), F.mul(b2, F.mul(b4, b6)));
    return F.add(F.add(t1, t2), F.add(t3, t4));
}

const SemilinearElt* FibreDescriptor::find_element(const std::string& id) const {
    for (const auto& e : elements)
        if (e.id == id) return &e;
    return nullptr;
}

const Component* FibreDescriptor::find_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

std::vector<const SemilinearElt*> FibreDescriptor::inertia() const {
    std::vector<const SemilinearElt*> out;
    for (const auto& e : elements)
        if (e.inertial) out.push_back(&e);
    return out;
}

std::optional<std::string> FibreDescriptor::resolve(const std::string& a,
                                                    const std::string& b) const {
    auto it = composition.find(a + "*" + b);
    if (it == composition.end()) return std::nullopt;
    return it->second;
}

namespace {

bool twist_is_identity(const FqField& F, const CoordTwist& t) {
    return t.c2 == F.one() && t.c3 == F.one();
}

// a coordinate twist together with its Frobenius power
struct TwistPower {
    CoordTwist t;
    int frob = 0;
};

// composite "a then b": the first factor's constants pick up the second
// factor's Frobenius power, exponents add.
TwistPower compose_twists(const FqField& F, const TwistPower& a, const TwistPower& b) {
    TwistPower out;
    out.t.c2 = F.mul(b.t.c2, F.frobenius(a.t.c2, static_cast<std::uint64_t>(b.frob)));
    out.t.c3 = F.mul(b.t.c3, F.frobenius(a.t.c3, static_cast<std::uint64_t>(b.frob)));
    out.frob = a.frob + b.frob;
    return out;
}

// does (c2, c3) with Frobenius power n preserve y^2 = x^3 + a2x^2 + a4x + a6?
// Comparing coefficients of the substituted equation gives
//   c3^2 = c2^3,  c3^2 a2^Q = c2^2 a2,  c3^2 a4^Q = c2 a4,  c3^2 a6^Q = a6
// with Q = p^n acting on coefficients through Frobenius.
bool twist_preserves_model(const WeierstrassModel& w, const CoordTwist& t, int n) {
    const FqField& F = w.field;
    auto frob = [&](const FqElem& a) { return F.frobenius(a, static_cast<std::uint64_t>(n)); };
    FqElem c3sq = F.mul(t.c3, t.c3);
    FqElem c2sq = F.mul(t.c2, t.c2);
    if (c3sq != F.mul(c2sq, t.c2)) return false;
    if (F.mul(c3sq, frob(w.a2)) != F.mul(c2sq, w.a2)) return false;
    if (F.mul(c3sq, frob(w.a4)) != F.mul(t.c2, w.a4)) return false;
    if (F.mul(c3sq, frob(w.a6)) != w.a6) return false;
    return true;
}

using FqPoly = std::vector<FqElem>;  // constant first

int fqpoly_deg(const FqField& F, const FqPoly& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && F.is_zero(f[d])) --d;
    return d;
}

FqPoly fqpoly_rem(const FqField& F, FqPoly f, const FqPoly& g) {
    int dg = fqpoly_deg(F, g);
    FqElem lead_inv = F.inv(g[dg]);
    for (int df = fqpoly_deg(F, f); df >= dg; df = fqpoly_deg(F, f)) {
        FqElem c = F.mul(f[df], lead_inv);
        int shift = df - dg;
        for (int i = 0; i <= dg; ++i)
            f[i + shift] = F.sub(f[i + shift], F.mul(c, g[i]));
    }
    return f;
}

// number of distinct roots of the cubic x^3 + a2x^2 + a4x + a6 in the
// algebraic closure: deg f - deg gcd(f, f'), with the char-3 perfect-cube
// case (f' = 0) giving a single root.
int distinct_cubic_roots(const WeierstrassModel& w) {
    const FqField& F = w.field;
    FqPoly f = {w.a6, w.a4, w.a2, F.one()};
    FqPoly df = {w.a4, F.mul(F.from_int(2), w.a2), F.from_int(3)};
    if (fqpoly_deg(F, df) < 0) return 1;
    FqPoly a = f, b = df;
    while (fqpoly_deg(F, b) >= 0) {
        FqPoly r = fqpoly_rem(F, a, b);
        a = b;
        b = r;
    }
    return 3 - fqpoly_deg(F, a);
}

}  // namespace

std::int64_t count_points(const WeierstrassModel& w, int m) {
    const std::int64_t p = w.field.p();
    const int n0 = w.field.degree();
    if (m < 1) throw Error("extension degree must be positive");
    if (ipow_checked(p, n0 * m, kEnumCap) > kEnumCap)
        throw Error("field too large for enumeration");
    FqField E = FqField::make(p, n0 * m);
    FqEmbedding emb(w.field, E);
    WeierstrassModel we{E, emb.apply(w.a2), emb.apply(w.a4), emb.apply(w.a6)};
    // square table: is_sq[i] for the element of index i
    std::vector<bool> is_sq(static_cast<std::size_t>(E.q()), false);
    for (std::int64_t i = 0; i < E.q(); ++i) {
        FqElem z = E.element(i);
        is_sq[static_cast<std::size_t>(E.index_of(E.mul(z, z)))] = true;
    }
    std::int64_t cnt = 1;  // point at infinity
    for (std::int64_t i = 0; i < E.q(); ++i) {
        FqElem x = E.element(i);
        FqElem r = we.rhs(x);
        if (E.is_zero(r)) cnt += 1;
        else if (is_sq[static_cast<std::size_t>(E.index_of(r))]) cnt += 2;
    }
    return cnt;
}

std::int64_t count_points(const Component& c, const FqField& residue, int m) {
    if (c.is_proj_line()) {
        std::int64_t q = ipow_checked(residue.q(), m, kEnumCap);
        if (q > kEnumCap) throw Error("field too large for enumeration");
        return q + 1;
    }
    if (c.is_weierstrass()) return count_points(std::get<WeierstrassModel>(c.model), m);
    throw Error("cannot enumerate points of a trace-table component");
}

namespace {

std::int64_t count_fixed_geometric(const WeierstrassModel& w, const CoordTwist& t) {
    const FqField& F = w.field;
    if (twist_is_identity(F, t))
        throw Error("identity element has no isolated fixed points");
    std::int64_t cnt = 1;  // infinity
    bool c2_one = (t.c2 == F.one());
    bool c3_one = (t.c3 == F.one());
    if (c2_one) {
        // y = 0: one fixed point per geometric root of the cubic
        cnt += distinct_cubic_roots(w);
    } else if (c3_one) {
        // x = 0: y^2 = a6 over the closure
        cnt += F.is_zero(w.a6) ? 1 : 2;
    } else {
        // x = 0 and y = 0
        cnt += F.is_zero(w.a6) ? 1 : 0;
    }
    return cnt;
}

std::int64_t count_fixed_twisted(const WeierstrassModel& w, const CoordTwist& t, int n) {
    const FqField& F = w.field;
    const std::int64_t p = F.p();
    const int n0 = F.degree();
    if (F.is_zero(t.c2) || F.is_zero(t.c3)) throw Error("twist constants must be nonzero");
    std::int64_t M = std::lcm(F.mult_order(t.c2), F.mult_order(t.c3));
    // least r with 1 + Q + ... + Q^(r-1) = 0 mod M, i.e. the r-fold
    // composite of the twist is an untwisted Frobenius
    std::int64_t Q = mod_pow(p, static_cast<std::int64_t>(n), M);
    std::int64_t S = 0;
    int r = 0;
    for (int cand = 1;; ++cand) {
        if (ipow_checked(p, static_cast<int>(std::lcm<std::int64_t>(n0, std::int64_t(n) * cand)), kEnumCap) > kEnumCap)
            throw Error("search field too large");
        S = (S * Q + 1) % M;
        if (S == 0) { r = cand; break; }
    }
    int N = static_cast<int>(std::lcm<std::int64_t>(n0, std::int64_t(n) * r));
    FqField E = FqField::make(p, N);
    FqEmbedding emb(F, E);
    WeierstrassModel we{E, emb.apply(w.a2), emb.apply(w.a4), emb.apply(w.a6)};
    FqElem C2 = emb.apply(t.c2), C3 = emb.apply(t.c3);
    // one square root per square, by element index
    std::vector<std::int64_t> root(static_cast<std::size_t>(E.q()), -1);
    for (std::int64_t i = 0; i < E.q(); ++i) {
        FqElem z = E.element(i);
        auto s = static_cast<std::size_t>(E.index_of(E.mul(z, z)));
        if (root[s] < 0) root[s] = i;
    }
    std::int64_t cnt = 1;  // infinity
    for (std::int64_t i = 0; i < E.q(); ++i) {
        FqElem x = E.element(i);
        FqElem tx = E.mul(C2, E.frobenius(x, static_cast<std::uint64_t>(n)));
        if (tx != x) continue;
        FqElem rhs = we.rhs(x);
        std::int64_t ri = root[static_cast<std::size_t>(E.index_of(rhs))];
        if (E.is_zero(rhs)) {
            cnt += 1;  // y = 0 is fixed whenever x is
            continue;
        }
        if (ri < 0) continue;
        FqElem y = E.element(ri);
        for (const FqElem& cand : {y, E.neg(y)}) {
            FqElem ty = E.mul(C3, E.frobenius(cand, static_cast<std::uint64_t>(n)));
            if (ty == cand) ++cnt;
        }
    }
    return cnt;
}

}  // namespace

std::int64_t count_fixed(const WeierstrassModel& w, const CoordTwist& t, int frob_power) {
    if (frob_power < 0) throw Error("negative Frobenius power");
    if (frob_power == 0) return count_fixed_geometric(w, t);
    return count_fixed_twisted(w, t, frob_power);
}

Int trace_on_h1(const Component& c, const CoordTwist& t, int frob_power) {
    if (c.is_proj_line()) return 0;
    if (!c.is_weierstrass())
        throw Error("trace-table component has no equation to count on");
    const auto& w = std::get<WeierstrassModel>(c.model);
    if (frob_power == 0 && twist_is_identity(w.field, t))
        return 2 * c.genus;  // identity: trace is the dimension, not Lefschetz
    std::int64_t fixed = count_fixed(w, t, frob_power);
    std::int64_t deg = frob_power >= 1 ? ipow_checked(w.field.p(), frob_power, kEnumCap) : 1;
    return Int(1) + Int(deg) - Int(fixed);
}

namespace {

// ---- word machinery -------------------------------------------------------
//
// Trace queries reduce to short words in the listed elements, applied left
// to right. Twists of a word on a component are computable structurally
// when every factor fixes the component; otherwise the word is folded
// through the composition table first.

using Word = std::vector<const SemilinearElt*>;

GraphAut word_aut(const FibreDescriptor& d, const Word& w) {
    GraphAut acc = GraphAut::identity(d.graph);
    for (const auto* f : w) acc = acc.compose(d.graph, f->aut);
    return acc;
}

std::optional<TwistPower> word_twist_structural(const FibreDescriptor& d, const Word& w,
                                                const std::string& comp_id) {
    const FqField& F = d.residue_field;
    TwistPower acc{{F.one(), F.one()}, 0};
    for (const auto* f : w) {
        if (f->aut.piJ.at(comp_id) != comp_id) return std::nullopt;
        auto it = f->twists.find(comp_id);
        if (it == f->twists.end()) return std::nullopt;
        acc = compose_twists(F, acc, TwistPower{it->second, f->frob_power});
    }
    return acc;
}

// greedy left fold through the composition table
Word fold_word(const FibreDescriptor& d, const Word& w) {
    Word out;
    if (w.empty()) return out;
    const SemilinearElt* cur = w.front();
    for (std::size_t i = 1; i < w.size(); ++i) {
        auto r = d.resolve(cur->id, w[i]->id);
        const SemilinearElt* merged = r ? d.find_element(*r) : nullptr;
        if (merged) {
            cur = merged;
        } else {
            out.push_back(cur);
            cur = w[i];
        }
    }
    out.push_back(cur);
    return out;
}

Int trace_word_on_component(const FibreDescriptor& d, const Word& w, const Component& c) {
    if (c.is_proj_line()) return 0;
    if (c.is_weierstrass()) {
        auto tw = word_twist_structural(d, w, c.id);
        if (!tw) tw = word_twist_structural(d, fold_word(d, w), c.id);
        if (!tw) throw Error("product not resolvable through composition table");
        return trace_on_h1(c, tw->t, tw->frob);
    }
    // trace table: need the word in the form [g] or [g, frob, ..., frob]
    Word folded = fold_word(d, w);
    const SemilinearElt* frob = d.find_element(d.frobenius_id);
    std::size_t shift = 0;
    while (folded.size() > 1 && folded.back() == frob) {
        folded.pop_back();
        ++shift;
    }
    if (folded.size() != 1) throw Error("product not resolvable through composition table");
    const auto& table = std::get<TraceTableModel>(c.model).traces;
    auto it = table.find(folded.front()->id);
    if (it == table.end())
        throw Error("trace table has no entry for element " + folded.front()->id);
    if (shift >= it->second.size())
        throw Error("trace table too short for requested power");
    return it->second[shift];
}

}  // namespace

Int trace_on_h1(const FibreDescriptor& d, const Component& c, const SemilinearElt& e) {
    if (e.aut.piJ.at(c.id) != c.id) throw Error("element does not fix component " + c.id);
    return trace_word_on_component(d, Word{&e}, c);
}

std::vector<Int> trace_power_sums(const FibreDescriptor& d,
                                  const std::string& elem_id, std::size_t r) {
    const SemilinearElt* e = d.find_element(elem_id);
    if (!e) throw Error("unknown element " + elem_id);
    std::vector<Int> out;
    out.reserve(r);
    GraphAut pw = GraphAut::identity(d.graph);
    Word word;
    for (std::size_t m = 1; m <= r; ++m) {
        pw = pw.compose(d.graph, e->aut);
        word.push_back(e);
        Int total = 0;
        for (const auto& c : d.components) {
            if (pw.piJ.at(c.id) != c.id) continue;  // not fixed by e^m
            total += trace_word_on_component(d, word, c);
        }
        out.push_back(total);
    }
    return out;
}

Int trace_abelian_frob_shift(const FibreDescriptor& d,
                             const std::string& base_elem_id, std::size_t m) {
    const SemilinearElt* base = d.find_element(base_elem_id);
    const SemilinearElt* frob = d.find_element(d.frobenius_id);
    if (!base || !frob) throw Error("unknown element in trace query");
    Word w{base};
    for (std::size_t i = 0; i < m; ++i) w.push_back(frob);
    GraphAut total = word_aut(d, w);
    Int out = 0;
    for (const auto& c : d.components) {
        if (total.piJ.at(c.id) != c.id) continue;
        out += trace_word_on_component(d, w, c);
    }
    return out;
}

// ---- validation ------------------------------------------------------------

namespace {

bool element_is_identity(const FibreDescriptor& d, const SemilinearElt& e) {
    if (e.frob_power != 0) return false;
    if (!(e.aut == GraphAut::identity(d.graph))) return false;
    for (const auto& [comp, tw] : e.twists)
        if (!twist_is_identity(d.residue_field, tw)) return false;
    return true;
}

}  // namespace

std::vector<std::string> FibreDescriptor::validate() const {
    std::vector<std::string> errors;
    const FqField& F = residue_field;
    if (!is_prime(p) || p == 2) errors.push_back("residue characteristic must be an odd prime");
    if (n0 < 1) errors.push_back("residue degree must be positive");
    if (F.p() != p || F.degree() != n0) errors.push_back("residue field does not match (p, n0)");

    // components <-> vertices
    std::set<std::string> comp_ids;
    for (const auto& c : components)
        if (!comp_ids.insert(c.id).second) errors.push_back("duplicate component id " + c.id);
    std::set<std::string> vert_ids(graph.vertices.begin(), graph.vertices.end());
    if (comp_ids != vert_ids)
        errors.push_back("graph vertices do not match component ids");

    for (const auto& err : graph.validate()) errors.push_back("graph: " + err);

    for (const auto& c : components) {
        if (c.is_proj_line() && c.genus != 0)
            errors.push_back("projective line " + c.id + " must have genus 0");
        if (c.is_weierstrass()) {
            const auto& w = std::get<WeierstrassModel>(c.model);
            if (c.genus != 1) errors.push_back("weierstrass component " + c.id + " must have genus 1");
            if (!(w.field == F))
                errors.push_back("component " + c.id + " lives over the wrong field");
            else if (F.is_zero(w.discriminant()))
                errors.push_back("weierstrass component " + c.id + " is singular");
        }
        if (c.is_trace_table() && c.genus < 0)
            errors.push_back("component " + c.id + " has negative genus");
    }

    // elements
    std::set<std::string> elem_ids;
    for (const auto& e : elements) {
        if (e.id.empty() || e.id.find('*') != std::string::npos)
            errors.push_back("bad element id '" + e.id + "'");
        if (!elem_ids.insert(e.id).second) errors.push_back("duplicate element id " + e.id);
        if (e.frob_power < 0) errors.push_back("element " + e.id + " has negative frob_power");
        if (e.inertial && e.frob_power != 0)
            errors.push_back("inertial element " + e.id + " must have frob_power 0");
        for (const auto& err : e.aut.validate(graph))
            errors.push_back("element " + e.id + ": " + err);
    }
    if (!errors.empty()) return errors;  // aut maps below assume totality

    const SemilinearElt* frob = find_element(frobenius_id);
    if (!frob) {
        errors.push_back("designated frobenius '" + frobenius_id + "' is not a listed element");
    } else {
        if (frob->frob_power != n0)
            errors.push_back("designated frobenius must have frob_power n0");
        if (frob->inertial) errors.push_back("designated frobenius cannot be inertial");
    }

    // twists: present exactly on fixed weierstrass components, and
    // model-preserving there
    for (const auto& e : elements) {
        for (const auto& [cid, tw] : e.twists) {
            const Component* c = find_component(cid);
            if (!c) { errors.push_back("element " + e.id + " twists unknown component " + cid); continue; }
            if (!c->is_weierstrass()) continue;  // twists only constrain equations
            if (e.aut.piJ.at(cid) != cid) {
                errors.push_back("element " + e.id + " twists a component it moves: " + cid);
                continue;
            }
            const auto& w = std::get<WeierstrassModel>(c->model);
            if (F.is_zero(tw.c2) || F.is_zero(tw.c3))
                errors.push_back("element " + e.id + ": twist constants must be nonzero on " + cid);
            else if (!twist_preserves_model(w, tw, e.frob_power))
                errors.push_back("element " + e.id + ": twist does not preserve component model " + cid);
        }
        for (const auto& c : components) {
            if (!c.is_weierstrass()) continue;
            if (e.aut.piJ.at(c.id) == c.id && !e.twists.count(c.id))
                errors.push_back("element " + e.id + " is missing a twist on fixed component " + c.id);
        }
    }

    // composition table consistency
    for (const auto& [key, val] : composition) {
        auto star = key.find('*');
        if (star == std::string::npos) { errors.push_back("bad composition key '" + key + "'"); continue; }
        std::string a = key.substr(0, star), b = key.substr(star + 1);
        const SemilinearElt* ea = find_element(a);
        const SemilinearElt* eb = find_element(b);
        const SemilinearElt* ec = find_element(val);
        if (!ea || !eb || !ec) {
            errors.push_back("composition entry " + key + " references unknown elements");
            continue;
        }
        if (ec->frob_power != ea->frob_power + eb->frob_power)
            errors.push_back("composition entry " + key + " is not additive in frob_power");
        if (!(ea->aut.compose(graph, eb->aut) == ec->aut))
            errors.push_back("composition entry " + key + " disagrees with graph automorphisms");
        for (const auto& c : components) {
            if (!c.is_weierstrass()) continue;
            if (ea->aut.piJ.at(c.id) != c.id || eb->aut.piJ.at(c.id) != c.id) continue;
            auto ita = ea->twists.find(c.id);
            auto itb = eb->twists.find(c.id);
            auto itc = ec->twists.find(c.id);
            if (ita == ea->twists.end() || itb == eb->twists.end() || itc == ec->twists.end())
                continue;  // missing twists reported above
            TwistPower expect = compose_twists(F, TwistPower{ita->second, ea->frob_power},
                                               TwistPower{itb->second, eb->frob_power});
            if (!(expect.t == itc->second))
                errors.push_back("composition entry " + key + " disagrees with twists on " + c.id);
        }
    }

    // inertia must be a finite group under the table
    auto in = inertia();
    if (!in.empty()) {
        const SemilinearElt* identity = nullptr;
        for (const auto* e : in)
            if (element_is_identity(*this, *e)) { identity = e; break; }
        if (!identity) errors.push_back("inertia set not a group");
        std::set<std::string> iids;
        for (const auto* e : in) iids.insert(e->id);
        for (const auto* a : in) {
            bool has_inverse = false;
            for (const auto* b : in) {
                auto r = resolve(a->id, b->id);
                if (!r || !iids.count(*r)) {
                    errors.push_back("inertia set not a group");
                    return errors;
                }
                if (identity && *r == identity->id) has_inverse = true;
            }
            if (!has_inverse) {
                errors.push_back("inertia set not a group");
                return errors;
            }
        }
    }

    // trace tables: keys must be listed elements, values Weil-bounded
    for (const auto& c : components) {
        if (!c.is_trace_table()) continue;
        const auto& tbl = std::get<TraceTableModel>(c.model).traces;
        for (const auto& [eid, traces] : tbl) {
            const SemilinearElt* e = find_element(eid);
            if (!e) {
                errors.push_back("trace table on " + c.id + " references unknown element " + eid);
                continue;
            }
            for (std::size_t j = 0; j < traces.size(); ++j) {
                // deg of (e, then j Frobenius powers) = p^(frob(e) + j n0);
                // |t| <= 2g sqrt(deg)  <=>  t^2 <= 4 g^2 deg
                Int deg = boost::multiprecision::pow(Int(p),
                          static_cast<unsigned>(e->frob_power + static_cast<int>(j) * n0));
                if (traces[j] * traces[j] > Int(4) * c.genus * c.genus * deg)
                    errors.push_back("trace table on " + c.id + " violates the Weil bound for " + eid);
            }
        }
    }

    return errors;
}

void FibreDescriptor::require_valid() const {
    auto errors = validate();
    if (errors.empty()) return;
    std::ostringstream os;
    os << "invalid descriptor:";
    for (const auto& e : errors) os << " [" << e << "]";
    throw Error(os.str());
}

}  // namespace galred
