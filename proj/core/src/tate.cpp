#include "galred/tate.hpp"

#include <set>

namespace galred {

GradedPieces graded_pieces(const FibreDescriptor& d) {
    d.require_valid();
    GradedPieces gp;
    gp.lattice = h1_lattice(d.graph);
    gp.h1_rank = gp.toric_rank = gp.lattice.rank();
    for (const auto& c : d.components)
        gp.abelian_rank += 2 * static_cast<std::size_t>(c.genus);
    for (const auto& e : d.elements) {
        IntMatrix m = action_on_h1(d.graph, e.aut, gp.lattice);
        gp.coh_action[e.id] = inverse_transpose(m);
        gp.h1_action[e.id] = std::move(m);
    }
    return gp;
}

std::tuple<std::size_t, std::size_t, std::size_t> graded_ranks(const FibreDescriptor& d) {
    d.require_valid();
    std::size_t h1 = h1_lattice(d.graph).rank();
    std::size_t ab = 0;
    for (const auto& c : d.components) ab += 2 * static_cast<std::size_t>(c.genus);
    return {h1, ab, h1};
}

Int chi_cyc(const FibreDescriptor& d, const std::string& elem_id) {
    const SemilinearElt* e = d.find_element(elem_id);
    if (!e) throw Error("unknown element " + elem_id);
    return boost::multiprecision::pow(Int(d.p), static_cast<unsigned>(e->frob_power));
}

Int element_trace(const FibreDescriptor& d, const std::string& elem_id) {
    GradedPieces gp = graded_pieces(d);
    auto it = gp.coh_action.find(elem_id);
    if (it == gp.coh_action.end()) throw Error("unknown element " + elem_id);
    Int graph_trace = it->second.trace();
    Int abelian = trace_power_sums(d, elem_id, 1).front();
    return graph_trace * (Int(1) + chi_cyc(d, elem_id)) + abelian;
}

namespace {

// closure, identity, inverses under the composition table; associativity is
// inherited from the validated composition semantics
void require_inertia_group(const FibreDescriptor& d,
                           const std::vector<const SemilinearElt*>& in) {
    if (in.empty()) throw Error("inertia set not a group");
    std::set<std::string> ids;
    for (const auto* e : in) ids.insert(e->id);
    const SemilinearElt* identity = nullptr;
    for (const auto* e : in) {
        if (e->frob_power == 0 && e->aut == GraphAut::identity(d.graph)) {
            bool trivial = true;
            for (const auto& [cid, tw] : e->twists)
                if (!(tw.c2 == d.residue_field.one() && tw.c3 == d.residue_field.one()))
                    trivial = false;
            if (trivial) { identity = e; break; }
        }
    }
    if (!identity) throw Error("inertia set not a group");
    for (const auto* a : in) {
        bool has_inverse = false;
        for (const auto* b : in) {
            auto r = d.resolve(a->id, b->id);
            if (!r || !ids.count(*r)) throw Error("inertia set not a group");
            if (*r == identity->id) has_inverse = true;
        }
        if (!has_inverse) throw Error("inertia set not a group");
    }
}

GraphAut invert_aut(const DualGraph& g, const GraphAut& a) {
    GraphAut out;
    for (const auto& [k, v] : a.piK) out.piK[v] = k;
    for (const auto& [k, v] : a.piI) out.piI[v] = k;
    for (const auto& [k, v] : a.piJ) out.piJ[v] = k;
    (void)g;
    return out;
}

// the averaging identities need Frob e_I = e_I Frob; catch the graph-level
// failure with a clear message instead of a downstream Newton error
void require_frobenius_normalizes(const FibreDescriptor& d,
                                  const std::vector<const SemilinearElt*>& in) {
    const SemilinearElt* frob = d.find_element(d.frobenius_id);
    if (!frob) throw Error("designated frobenius missing");
    GraphAut frob_inv = invert_aut(d.graph, frob->aut);
    for (const auto* sigma : in) {
        GraphAut conj = frob_inv.compose(d.graph, sigma->aut).compose(d.graph, frob->aut);
        bool found = false;
        for (const auto* tau : in)
            if (tau->aut == conj) { found = true; break; }
        if (!found) throw Error("inertia not normalized by the Frobenius lift");
    }
}

}  // namespace

InertiaInvariants inertia_invariants(const FibreDescriptor& d, std::size_t extra) {
    auto in = d.inertia();
    require_inertia_group(d, in);
    d.require_valid();
    require_frobenius_normalizes(d, in);
    GradedPieces gp = graded_pieces(d);
    for (const auto* e : in)
        if (e->frob_power != 0) throw Error("inertia element with nonzero frob_power");

    InertiaInvariants out;

    // weight-0 fixed sublattice: vectors killed by every (coh(sigma) - 1)
    if (gp.h1_rank == 0) {
        out.fixed_basis = IntMatrix(0, 0);
        out.frob_on_fixed = IntMatrix(0, 0);
    } else {
        IntMatrix stacked(gp.h1_rank, 0);
        bool any = false;
        for (const auto* e : in) {
            IntMatrix diff = gp.coh_action.at(e->id) - IntMatrix::identity(gp.h1_rank);
            stacked = any ? stacked.hcat(diff) : diff;
            any = true;
        }
        out.fixed_basis = any ? kernel_basis(stacked)
                              : IntMatrix::identity(gp.h1_rank);
        out.frob_on_fixed = restrict_action(gp.coh_action.at(d.frobenius_id), out.fixed_basis);
    }
    out.dim0 = out.fixed_basis.rows();

    // abelian invariant dimension: trace of the averaging idempotent
    const Int n_inertia = static_cast<long long>(in.size());
    Int s0 = 0;
    for (const auto* e : in) s0 += trace_abelian_frob_shift(d, e->id, 0);
    if (s0 % n_inertia != 0 || s0 < 0) throw Error("non-integral invariant dimension");
    out.dim_ab = static_cast<std::size_t>(static_cast<long long>(s0 / n_inertia));

    // power sums of Frobenius on the two invariant pieces
    IntMatrix fpow = IntMatrix::identity(out.dim0);
    for (std::size_t m = 1; m <= out.dim0 + extra; ++m) {
        fpow = fpow * out.frob_on_fixed;
        out.weight0_power_sums.push_back(fpow.trace());
    }
    for (std::size_t m = 1; m <= out.dim_ab + extra; ++m) {
        Int s = 0;
        for (const auto* e : in) s += trace_abelian_frob_shift(d, e->id, m);
        out.abelian_power_sums.push_back(Rat(s) / Rat(n_inertia));
    }
    return out;
}

LocalLFactor l_factor(const FibreDescriptor& d) {
    InertiaInvariants ii = inertia_invariants(d);
    std::vector<Rat> w0(ii.weight0_power_sums.begin(), ii.weight0_power_sums.end());
    IntPoly p0 = newton_char_poly(w0, ii.dim0);
    IntPoly pab = newton_char_poly(ii.abelian_power_sums, ii.dim_ab);
    LocalLFactor out;
    out.poly = p0 * pab;
    out.dim0 = ii.dim0;
    out.dim_ab = ii.dim_ab;
    if (out.poly.degree() != static_cast<int>(ii.dim0 + ii.dim_ab))
        throw Error("l-factor degree does not match invariant dimensions");
    return out;
}

std::size_t conductor_exponent(const FibreDescriptor& d) {
    if (!d.tame) throw Error("descriptor not flagged tame");
    InertiaInvariants ii = inertia_invariants(d);
    if (d.inertia().size() % static_cast<std::size_t>(d.p) == 0)
        throw Error("inertia order divisible by p contradicts the tame flag");
    auto [h1, ab, h1b] = graded_ranks(d);
    (void)h1b;
    std::size_t total = 2 * h1 + ab;
    std::size_t inv = ii.dim0 + ii.dim_ab;
    if (inv > total) throw Error("invariants exceed total dimension");
    return total - inv;
}

DualityResult duality_check(const GradedPieces& gp) {
    DualityResult out;
    for (const auto& [id, h1m] : gp.h1_action) {
        auto it = gp.coh_action.find(id);
        if (it == gp.coh_action.end() ||
            !(it->second.transpose() * h1m == IntMatrix::identity(gp.h1_rank))) {
            out.ok = false;
            out.offenders.push_back(id);
        }
    }
    return out;
}

DualityResult duality_check(const FibreDescriptor& d) {
    return duality_check(graded_pieces(d));
}

}  // namespace galred
