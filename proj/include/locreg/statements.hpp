#pragma once

#include <optional>
#include <string>
#include <vector>

#include "generate.hpp"
#include "invariants.hpp"

namespace locreg {

// Catalog of checkable statements. Each entry is verified on randomized
// instances of its declared shape; together with the documented out-of-scope
// list this covers every labeled claim in the source material.
enum class StatementId {
    Lem_br_lem0,
    Lem_br_lem1,
    Lem_br_lem1_1,
    Cor_br_cor4,
    Cor_br_cor5,
    Prop_br_lem2,
    Cor_br_cor1,
    Lem_br_lem3,
    Lem_br_lem4,
    Thm_br_th1,
    Cor_weak_implies_basic,
    Cor_brw_cor3,
    Cor_br_cor2,
    Cor_br_cor3,
    Rmk_square_sum,
    Thm_rs_thm1,
    Cor_rs_cor1,
    Cor_rs_cor2,
    Cor_rs_cor3,
    Cor_rs_cor4,
    Cor_rs_cor5,
    Cor_rs_cor6,
    Cor_rs_cor7,
    Cor_rs_cor8,
    Cor_rs_cor9,
    Prop_rs_prop1,
    Prop_rs_cor10,
    Cor_rs_cor11,
    Thm_bwr_thm1,
    Thm_br_th1_eps2,
};

struct StatementInfo {
    StatementId id;
    const char* name;      // stable identifier used by the CLI
    Shape shape;           // instance shape the check runs on
    const char* statement; // what is being verified
    const char* method;    // how the check decides, including skip conditions
};

inline const std::vector<StatementInfo>& statement_catalog() {
    static const std::vector<StatementInfo> catalog = {
        {StatementId::Lem_br_lem0, "br_lem0", Shape::Map,
         "if phi(x_1..x_r) is part of a minimal basis of an ideal J containing IB, with x_k in I, "
         "then x_1..x_r is part of a minimal basis of I",
         "draws elements of I, tests independence of classes in J/nJ and I/mI by jet linear "
         "algebra at degrees N, N+1, N+2; skips when the verdict is truncation-unstable"},
        {StatementId::Lem_br_lem1, "br_lem1", Shape::Map,
         "0 <= delta_A(I) - delta_phi_B(I) <= rd(phi)", "exact linear-part computation"},
        {StatementId::Lem_br_lem1_1, "br_lem1_1", Shape::Map,
         "delta_A(I) = edim(A) - edim(A/I) and delta_phi_B(I) = edim(B) - edim(B/IB)",
         "exact linear-part computation"},
        {StatementId::Cor_br_cor4, "br_cor4", Shape::RingWithIdeal,
         "for nested ideals I in J: delta_A(J) = delta_A(I) + delta_{A/I}(J/I)",
         "J is drawn as I plus extra generators; exact"},
        {StatementId::Cor_br_cor5, "br_cor5", Shape::RingWithIdeal,
         "for a_1..a_r in I part of a minimal basis of m: delta_A(I) = r + "
         "delta_{A/(a)}(I/(a))",
         "elements drawn as scalar combinations of the generators; exact"},
        {StatementId::Prop_br_lem2, "br_lem2", Shape::Map,
         "rd(phi) = delta_A(m) - delta_phi_B(m) = edim(A) + edim(B/mB) - edim(B)",
         "nullity of the linearized map compared against both right-hand sides; exact"},
        {StatementId::Cor_br_cor1, "br_cor1", Shape::RingWithIdeal,
         "if mB = n (e.g. phi surjective) then rd(phi) = edim(A) - edim(B)",
         "checked on canonical surjections; exact"},
        {StatementId::Lem_br_lem3, "br_lem3", Shape::Map,
         "delta_phi_B(I) equals the maximal length of a sequence from I whose image extends to "
         "part of a minimal basis of n",
         "exhaustive search over generator subsets; exact on linear parts"},
        {StatementId::Lem_br_lem4, "br_lem4", Shape::Map,
         "if some minimal basis of m extends to part of a minimal basis of n then every minimal "
         "basis does",
         "samples up to 25 random invertible changes of basis; exact"},
        {StatementId::Thm_br_th1, "br_th1", Shape::Map,
         "basically regular <=> delta_A(I) = delta_phi_B(I) for all I <=> rd(phi) = 0 <=> "
         "edim(B) = edim(A) + edim(B/mB)",
         "rd both routes, sampled ideals, sampled bases; exact"},
        {StatementId::Cor_weak_implies_basic, "weak_implies_basic", Shape::FlatFamily,
         "weakly regular implies basically regular",
         "flatness by structural witness; skips when fiber regularity is undecidable"},
        {StatementId::Cor_brw_cor3, "brw_cor3", Shape::FlatFamily,
         "flat + basically regular + eps2(A)=eps2(B) <=> flat + basically regular + "
         "cdim(A)=cdim(B) <=> weakly regular",
         "requires witnessed flatness, decidable cdims and stable eps2; skips otherwise"},
        {StatementId::Cor_br_cor2, "br_cor2", Shape::RingWithIdeal,
         "rd(pi_I) = edim(A) - edim(A/I) = delta_A(I); pi_I basically regular <=> I in m^2; "
         "rd(pi_m) = edim(A)",
         "exact"},
        {StatementId::Cor_br_cor3, "br_cor3", Shape::Map,
         "rd(pi_I) >= rd(pi_IB); phi basically regular <=> equality for every I",
         "forward on the drawn ideal, converse witnessed at I = m; exact"},
        {StatementId::Rmk_square_sum, "square_sum", Shape::QuotientSquare,
         "the defect of an oriented square is the sum of the defects of its two "
         "opposite-oriented triangles, and flipping the orientation negates it",
         "exact"},
        {StatementId::Thm_rs_thm1, "rs_thm1", Shape::QuotientSquare,
         "rd(S) = rd((A/I) tensor S) = rd(K tensor S) = rd(psi_mB) - rd(psi'_mC)",
         "base change squares constructed by quotients; exact"},
        {StatementId::Cor_rs_cor1, "rs_cor1", Shape::Map,
         "the square (phi, pi_IB; pi_I, phi_I) is basically regular and rd(phi_I) = rd(phi) - "
         "(rd(pi_I) - rd(pi_IB)) <= rd(phi)",
         "exact"},
        {StatementId::Cor_rs_cor2, "rs_cor2", Shape::QuotientSquare,
         "S basically regular <=> (A/I) tensor S basically regular for each I <=> K tensor S "
         "basically regular <=> rd(psi_mB) = rd(psi'_mC)",
         "sampled ideals plus the maximal ideal; exact"},
        {StatementId::Cor_rs_cor3, "rs_cor3", Shape::ComposablePair,
         "for a clockwise triangle: rd(T) = rd((A/I) tensor T) = rd(K tensor T) = rd(psi_mB)",
         "exact"},
        {StatementId::Cor_rs_cor4, "rs_cor4", Shape::ComposablePair,
         "rd(psi o phi) = rd(phi) + rd(psi) - rd(psi_mB) = rd(phi) + (rd(pi_mB) - rd(pi_mC)); "
         "hence rd(phi) <= rd(psi o phi) <= rd(phi) + rd(psi)",
         "exact"},
        {StatementId::Cor_rs_cor5, "rs_cor5", Shape::SurjectionTriangle,
         "phi surjective implies rd(psi o phi) = rd(phi) + rd(psi)", "exact"},
        {StatementId::Cor_rs_cor6, "rs_cor6", Shape::ComposablePair,
         "composition laws for basic regularity (four parts)",
         "exact; part (4) applies when mB = n"},
        {StatementId::Cor_rs_cor7, "rs_cor7", Shape::Map,
         "I in m^2, IB in J in n^2 implies rd(phi_{I,J}) = rd(phi)",
         "ideals constructed inside the squares of the maximal ideals; exact"},
        {StatementId::Cor_rs_cor8, "rs_cor8", Shape::Map,
         "I in m^2 implies rd(phi_I) = rd(phi); J in n^2 implies rd(pi_J o phi) = rd(phi)",
         "exact"},
        {StatementId::Cor_rs_cor9, "rs_cor9", Shape::FlatFamily,
         "phi basically regular implies phi_{I,J}, phi_I and pi_J o phi are basically regular "
         "for I in m^2, J in n^2 with IB in J",
         "exact"},
        {StatementId::Prop_rs_prop1, "rs_prop1", Shape::Map,
         "rd of the triangle (phi_I, pi_{J/IB}) equals rd(pi_{(J+mB)/mB}), with the induced "
         "defect formulas for phi_{I,J}",
         "exact"},
        {StatementId::Prop_rs_cor10, "rs_cor10", Shape::FlatFamily,
         "for basically regular phi with mB != n: phi_{I,n^2} is basically regular with "
         "non-regular fiber; for non-artinian A, pi_{n^2} o phi is basically regular and not flat",
         "constructive; skips when a needed dimension is undecidable"},
        {StatementId::Cor_rs_cor11, "rs_cor11", Shape::Ring,
         "for non-artinian A the surjection onto A/m^2 is basically regular and not flat",
         "constructive; skips when dim(A) or the flatness witness is undecidable"},
        {StatementId::Thm_bwr_thm1, "bwr_thm1", Shape::Map,
         "basically regular with B regular <=> A and B/mB regular with dim(B) = dim(A) + "
         "dim(B/mB)",
         "checked when all three dimensions are decidable; skips otherwise"},
        {StatementId::Thm_br_th1_eps2, "br_th1_eps2", Shape::FlatFamily,
         "for flat phi: basically regular <=> eps2(B) = eps2(A) + eps2(B/mB)",
         "requires all three eps2 values stable; skips otherwise"},
    };
    return catalog;
}

inline const StatementInfo& statement_info(StatementId id) {
    for (const auto& s : statement_catalog())
        if (s.id == id) return s;
    throw Error("unknown statement id");
}

inline std::optional<StatementId> statement_from_name(const std::string& name) {
    for (const auto& s : statement_catalog())
        if (name == s.name) return s.id;
    return std::nullopt;
}

enum class Outcome { Pass, Fail, Skipped };
enum class SkipReason { UnknownBlocked, UnstableMu, OutOfClass };

inline const char* skip_reason_str(SkipReason r) {
    switch (r) {
        case SkipReason::UnknownBlocked: return "unknown_blocked";
        case SkipReason::UnstableMu: return "unstable_mu";
        default: return "out_of_class";
    }
}

struct Verdict {
    StatementId id;
    Outcome outcome = Outcome::Pass;
    std::optional<SkipReason> skip_reason;
    std::string details;
    std::string instance_digest;
};

namespace check_detail {

template <CoeffField F>
Verdict pass(StatementId id, const Instance<F>& inst) {
    return {id, Outcome::Pass, std::nullopt, "", inst.digest()};
}

template <CoeffField F>
Verdict fail(StatementId id, const Instance<F>& inst, const std::string& details) {
    return {id, Outcome::Fail, std::nullopt, details, inst.digest()};
}

template <CoeffField F>
Verdict skip(StatementId id, const Instance<F>& inst, SkipReason reason,
             const std::string& details) {
    return {id, Outcome::Skipped, reason, details, inst.digest()};
}

// Count how many of vs are independent modulo the linear span of the ring's
// relation linear parts.
template <CoeffField F>
int lin_indep_count(const LocalRingPres<F>& ring,
                    const std::vector<std::vector<typename F::Elem>>& vs) {
    SpanBuilder<F> b(ring.field, ring.nvars());
    for (const auto& r : ring.relations) b.add(to_sparse(ring.field, r.linear_part()));
    int grown = 0;
    for (const auto& v : vs)
        if (b.add(to_sparse(ring.field, v))) ++grown;
    return grown;
}

// Exact linear part of the image of p under phi.
template <CoeffField F>
std::vector<typename F::Elem> image_linear_part(const Poly<F>& p, const LocalMapPres<F>& phi) {
    JetContext ctx(phi.target.nvars(), 2);
    return substitute_trunc(p, phi.images, ctx).linear_part();
}

// Number of vs whose classes are independent in the quotient by the jet span
// of bottom_gens, evaluated at degrees N, N+1, N+2. nullopt when the counts
// disagree (truncation-unstable).
template <CoeffField F>
std::optional<int> stable_indep_count(const F& f, int nvars,
                                      const std::vector<Poly<F>>& bottom_gens,
                                      const std::vector<Poly<F>>& vs, int degree) {
    std::optional<int> agreed;
    for (int d = degree; d <= degree + 2; ++d) {
        JetContext ctx(nvars, d);
        auto b = jet_ideal_span_builder(f, bottom_gens, ctx);
        int grown = 0;
        for (const auto& v : vs)
            if (b.add(jet_vector(v, ctx))) ++grown;
        if (!agreed) {
            agreed = grown;
        } else if (*agreed != grown) {
            return std::nullopt;
        }
    }
    return agreed;
}

// x_i * g for all generators together with the relations: the jet presentation
// of m*J + I_A used for classes in J/mJ.
template <CoeffField F>
std::vector<Poly<F>> m_fold(const LocalRingPres<F>& ring, const std::vector<Poly<F>>& gens) {
    std::vector<Poly<F>> out;
    for (const auto& g : gens) {
        for (int i = 0; i < ring.nvars(); ++i)
            out.push_back(g * Poly<F>::variable(ring.field, ring.nvars(), i));
    }
    for (const auto& r : ring.relations) out.push_back(r);
    return out;
}

template <CoeffField F>
Matrix<F> rand_invertible(Rng& rng, const F& f, int n) {
    Matrix<F> L = Matrix<F>::identity(f, n);
    Matrix<F> U = Matrix<F>::identity(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            if (rng.chance(1, 2)) L.at(i, j) = gen_detail::rand_scalar(rng, f);
            if (rng.chance(1, 2)) U.at(j, i) = gen_detail::rand_scalar(rng, f);
        }
    return L.mul(U);
}

// A random minimal basis of m as coefficient vectors in K^n.
template <CoeffField F>
std::vector<std::vector<typename F::Elem>> rand_minimal_basis(Rng& rng,
                                                              const LocalRingPres<F>& A) {
    const F& f = A.field;
    auto sa = lin_space(A);
    auto cols = sa.complement_columns();
    int r = static_cast<int>(cols.size());
    Matrix<F> M = rand_invertible(rng, f, r);
    std::vector<std::vector<typename F::Elem>> basis;
    for (int k = 0; k < r; ++k) {
        std::vector<typename F::Elem> u(static_cast<std::size_t>(A.nvars()), f.zero());
        for (int j = 0; j < r; ++j)
            u[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])] = M.at(k, j);
        basis.push_back(std::move(u));
    }
    return basis;
}

// Whether the images of the given minimal basis of m are part of a minimal
// basis of n (independence of their classes in n/n^2).
template <CoeffField F>
bool basis_extends(const LocalMapPres<F>& phi,
                   const std::vector<std::vector<typename F::Elem>>& basis) {
    const F& f = phi.source.field;
    std::vector<std::vector<typename F::Elem>> images;
    for (const auto& u : basis) {
        std::vector<typename F::Elem> w(static_cast<std::size_t>(phi.target.nvars()), f.zero());
        for (int i = 0; i < phi.source.nvars(); ++i) {
            if (f.is_zero(u[static_cast<std::size_t>(i)])) continue;
            auto lin = phi.images[static_cast<std::size_t>(i)].linear_part();
            for (int j = 0; j < phi.target.nvars(); ++j)
                w[static_cast<std::size_t>(j)] =
                    f.add(w[static_cast<std::size_t>(j)],
                          f.mul(u[static_cast<std::size_t>(i)], lin[static_cast<std::size_t>(j)]));
        }
        images.push_back(std::move(w));
    }
    return lin_indep_count(phi.target, images) == static_cast<int>(basis.size());
}

// Random ideal with all generators in m^2 (trailing degree >= 2).
template <CoeffField F>
IdealPres<F> rand_m2_ideal(Rng& rng, const GenParams<F>& params, const LocalRingPres<F>& ring) {
    std::vector<Poly<F>> gens;
    if (ring.nvars() > 0) {
        int count = rng.range(0, params.max_ideal_gens);
        for (int k = 0; k < count; ++k)
            gens.push_back(gen_detail::rand_poly(rng, params.field, ring.nvars(), 2,
                                                 std::max(2, params.max_gen_degree), 2,
                                                 rng.chance(1, 2)));
    }
    return make_ideal(ring, std::move(gens));
}

template <CoeffField F>
IdealPres<F> extended_maximal(const LocalMapPres<F>& phi) {
    return extend_ideal(phi, maximal_ideal(phi.source));
}

}  // namespace check_detail

template <CoeffField F>
Verdict check_statement(StatementId id, const Instance<F>& inst, const GenParams<F>& params) {
    using namespace check_detail;
    const Shape want = statement_info(id).shape;
    if (inst.shape != want)
        throw ShapeMismatch(std::string("check_statement: ") + statement_info(id).name +
                            " expects shape " + shape_str(want) + ", got " +
                            shape_str(inst.shape));
    const F& f = params.field;
    Rng rng(mix_seed(inst.seed, 0x5eedf00d));

    switch (id) {
        case StatementId::Lem_br_lem0: {
            const auto& phi = *inst.map;
            const auto& I = *inst.ideal;
            const auto& A = phi.source;
            const auto& B = phi.target;
            // elements of I: polynomial combinations of its generators
            int r = rng.range(1, 2);
            std::vector<Poly<F>> elements;
            for (int k = 0; k < r; ++k) {
                Poly<F> x(f, A.nvars());
                for (const auto& g : I.gens) {
                    if (rng.chance(1, 3)) continue;
                    Poly<F> coeff = Poly<F>::constant(f, A.nvars(), gen_detail::rand_scalar(rng, f));
                    if (rng.chance(1, 3) && A.nvars() > 0)
                        coeff = coeff * Poly<F>::variable(f, A.nvars(), rng.range(0, A.nvars() - 1));
                    x = x + coeff * g;
                }
                elements.push_back(std::move(x));
            }
            // J containing IB, with a couple of extra generators
            IdealPres<F> ib = extend_ideal(phi, I);
            std::vector<Poly<F>> j_gens = ib.gens;
            if (B.nvars() > 0) {
                int extra = rng.range(1, 2);
                for (int k = 0; k < extra; ++k)
                    j_gens.push_back(gen_detail::rand_poly(rng, f, B.nvars(), 1,
                                                           params.max_gen_degree, 2,
                                                           rng.chance(1, 2)));
            }
            // classes of phi(x_k) in J/nJ
            JetContext big(B.nvars(), params.trunc_degree + 2);
            std::vector<Poly<F>> image_elems;
            for (const auto& x : elements) image_elems.push_back(substitute_trunc(x, phi.images, big));
            std::vector<Poly<F>> j_lift = B.relations;
            for (const auto& g : j_gens) j_lift.push_back(g);
            auto indep_j = stable_indep_count(f, B.nvars(), m_fold(B, j_lift), image_elems,
                                              params.trunc_degree);
            // classes of x_k in I/mI
            std::vector<Poly<F>> i_lift = A.relations;
            for (const auto& g : I.gens) i_lift.push_back(g);
            auto indep_i =
                stable_indep_count(f, A.nvars(), m_fold(A, i_lift), elements, params.trunc_degree);
            if (!indep_j || !indep_i)
                return skip(id, inst, SkipReason::UnstableMu, "independence count not stable");
            bool j_independent = (*indep_j == r);
            bool i_independent = (*indep_i == r);
            if (j_independent && !i_independent)
                return fail(id, inst, "images independent in J/nJ but preimages dependent in I/mI");
            return pass(id, inst);
        }

        case StatementId::Lem_br_lem1: {
            const auto& phi = *inst.map;
            int d1 = delta(*inst.ideal);
            int d2 = delta_phi(phi, *inst.ideal);
            int r = rd(phi);
            if (0 <= d1 - d2 && d1 - d2 <= r) return pass(id, inst);
            return fail(id, inst, "delta_A(I)=" + std::to_string(d1) + " delta_phi=" +
                                      std::to_string(d2) + " rd=" + std::to_string(r));
        }

        case StatementId::Lem_br_lem1_1: {
            const auto& phi = *inst.map;
            const auto& I = *inst.ideal;
            int lhs1 = delta(I);
            int rhs1 = edim(phi.source) - edim(quotient(phi.source, I).ring);
            IdealPres<F> ib = extend_ideal(phi, I);
            int lhs2 = delta(ib);
            int rhs2 = edim(phi.target) - edim(quotient(phi.target, ib).ring);
            if (lhs1 == rhs1 && lhs2 == rhs2) return pass(id, inst);
            return fail(id, inst, "delta routes disagree");
        }

        case StatementId::Cor_br_cor4: {
            const auto& A = *inst.ring;
            const auto& I = *inst.ideal;
            std::vector<Poly<F>> j_gens = I.gens;
            if (A.nvars() > 0) {
                int extra = rng.range(1, 2);
                for (int k = 0; k < extra; ++k)
                    j_gens.push_back(gen_detail::rand_poly(rng, f, A.nvars(), 1,
                                                           params.max_gen_degree, 2,
                                                           rng.chance(1, 2)));
            }
            IdealPres<F> J = make_ideal(A, j_gens);
            auto qa = quotient(A, I);
            IdealPres<F> j_over = make_ideal(qa.ring, j_gens);
            int lhs = delta(J);
            int rhs = delta(I) + delta(j_over);
            if (lhs == rhs) return pass(id, inst);
            return fail(id, inst,
                        "delta_A(J)=" + std::to_string(lhs) + " split=" + std::to_string(rhs));
        }

        case StatementId::Cor_br_cor5: {
            const auto& A = *inst.ring;
            const auto& I = *inst.ideal;
            // scalar combinations of the generators that are part of a minimal basis of m
            SpanBuilder<F> span(f, A.nvars());
            for (const auto& rel : A.relations) span.add(to_sparse(f, rel.linear_part()));
            std::vector<Poly<F>> kept;
            int candidates = rng.range(1, 3);
            for (int k = 0; k < candidates; ++k) {
                Poly<F> a(f, A.nvars());
                for (const auto& g : I.gens)
                    if (rng.chance(2, 3)) a = a + g.scaled(gen_detail::rand_scalar(rng, f));
                if (a.is_zero()) continue;
                if (span.add(to_sparse(f, a.linear_part()))) kept.push_back(a);
            }
            int r = static_cast<int>(kept.size());
            IdealPres<F> cut = make_ideal(A, kept);
            auto qa = quotient(A, cut);
            IdealPres<F> i_over = make_ideal(qa.ring, I.gens);
            int lhs = delta(I);
            int rhs = r + delta(i_over);
            if (lhs == rhs) return pass(id, inst);
            return fail(id, inst, "delta=" + std::to_string(lhs) + " r+delta'=" + std::to_string(rhs));
        }

        case StatementId::Prop_br_lem2: {
            const auto& phi = *inst.map;
            int nullity = linearized_map(phi).nullity;
            int via_delta = delta(maximal_ideal(phi.source)) - delta(extended_maximal(phi));
            int via_edim =
                edim(phi.source) + edim(closed_fiber(phi)) - edim(phi.target);
            if (nullity == via_delta && nullity == via_edim) return pass(id, inst);
            return fail(id, inst, "nullity=" + std::to_string(nullity) + " delta-route=" +
                                      std::to_string(via_delta) + " edim-route=" +
                                      std::to_string(via_edim));
        }

        case StatementId::Cor_br_cor1: {
            const auto& A = *inst.ring;
            auto q = quotient(A, *inst.ideal);
            int lhs = rd(q.projection);
            int rhs = edim(A) - edim(q.ring);
            if (lhs == rhs) return pass(id, inst);
            return fail(id, inst, "rd=" + std::to_string(lhs) + " edim diff=" + std::to_string(rhs));
        }

        case StatementId::Lem_br_lem3: {
            const auto& phi = *inst.map;
            const auto& I = *inst.ideal;
            int d = delta_phi(phi, I);
            // exhaustive subsets of the generators
            int n_gens = static_cast<int>(I.gens.size());
            int best = 0;
            for (unsigned mask = 0; mask < (1u << n_gens); ++mask) {
                std::vector<std::vector<typename F::Elem>> vs;
                for (int k = 0; k < n_gens; ++k)
                    if (mask & (1u << k))
                        vs.push_back(image_linear_part(I.gens[static_cast<std::size_t>(k)], phi));
                int count = static_cast<int>(vs.size());
                if (count <= best) continue;
                if (lin_indep_count(phi.target, vs) == count) best = count;
            }
            if (best == d) return pass(id, inst);
            return fail(id, inst,
                        "max sequence " + std::to_string(best) + " != delta_phi " + std::to_string(d));
        }

        case StatementId::Lem_br_lem4: {
            const auto& phi = *inst.map;
            int r = rd(phi);
            int samples = std::min(25, 5 + 2 * edim(phi.source));
            bool any_extends = false;
            bool all_extend = true;
            for (int s = 0; s < samples; ++s) {
                bool ext = basis_extends(phi, rand_minimal_basis(rng, phi.source));
                any_extends = any_extends || ext;
                all_extend = all_extend && ext;
            }
            if (any_extends && !(r == 0 && all_extend))
                return fail(id, inst, "some basis extends but the map is not basically regular");
            if (r == 0 && !all_extend)
                return fail(id, inst, "basically regular map with a non-extending basis");
            return pass(id, inst);
        }

        case StatementId::Thm_br_th1: {
            const auto& phi = *inst.map;
            const auto& A = phi.source;
            int r = rd(phi);
            bool c4 = edim(phi.target) == edim(A) + edim(closed_fiber(phi));
            if ((r == 0) != c4) return fail(id, inst, "(3)<=>(4) failed");
            // (2): sampled ideals plus m
            std::vector<IdealPres<F>> ideals;
            ideals.push_back(*inst.ideal);
            ideals.push_back(maximal_ideal(A));
            ideals.push_back(gen_detail::rand_ideal(rng, params, A, rng.chance(1, 2)));
            if (r == 0) {
                for (const auto& I : ideals)
                    if (delta(I) != delta_phi(phi, I))
                        return fail(id, inst, "(3) holds but (2) fails on an ideal");
            } else {
                IdealPres<F> m = maximal_ideal(A);
                if (delta(m) == delta_phi(phi, m))
                    return fail(id, inst, "(3) fails but delta agrees on m");
            }
            // (1): sampled bases
            for (int s = 0; s < 5; ++s) {
                bool ext = basis_extends(phi, rand_minimal_basis(rng, A));
                if (ext != (r == 0)) return fail(id, inst, "(1) disagrees with rd");
            }
            return pass(id, inst);
        }

        case StatementId::Cor_weak_implies_basic: {
            const auto& phi = *inst.map;
            Tri w = is_weakly_regular(phi);
            if (w == Tri::Unknown)
                return skip(id, inst, SkipReason::UnknownBlocked, "weak regularity undecided");
            if (w == Tri::True && rd(phi) != 0)
                return fail(id, inst, "weakly regular but rd != 0");
            return pass(id, inst);
        }

        case StatementId::Cor_brw_cor3: {
            const auto& phi = *inst.map;
            if (flatness_status(phi).kind != FlatStatus::Kind::Flat)
                return skip(id, inst, SkipReason::UnknownBlocked, "no flatness witness");
            auto e2a = eps2(phi.source, params.trunc_degree);
            auto e2b = eps2(phi.target, params.trunc_degree);
            if (!e2a || !e2b || !e2a->stable || !e2b->stable)
                return skip(id, inst, SkipReason::UnstableMu, "eps2 not stable");
            auto cda = cdim(phi.source);
            auto cdb = cdim(phi.target);
            if (!cda || !cdb)
                return skip(id, inst, SkipReason::UnknownBlocked, "cdim undecidable");
            Tri w = is_weakly_regular(phi);
            if (w == Tri::Unknown)
                return skip(id, inst, SkipReason::UnknownBlocked, "weak regularity undecided");
            bool br = rd(phi) == 0;
            bool c1 = br && e2a->value == e2b->value;
            bool c2 = br && *cda == *cdb;
            bool c3 = w == Tri::True;
            if (c1 == c2 && c2 == c3) return pass(id, inst);
            return fail(id, inst, "equivalence broken");
        }

        case StatementId::Cor_br_cor2: {
            const auto& A = *inst.ring;
            const auto& I = *inst.ideal;
            auto q = quotient(A, I);
            int r = rd(q.projection);
            if (r != edim(A) - edim(q.ring)) return fail(id, inst, "(i) edim route");
            if (r != delta(I)) return fail(id, inst, "(i) delta route");
            bool br = (r == 0);
            if (br != (edim(A) == edim(q.ring))) return fail(id, inst, "(ii)(2)");
            if (br != contained_in_m2(I)) return fail(id, inst, "(ii)(3)");
            auto qm = quotient(A, maximal_ideal(A));
            if (rd(qm.projection) != edim(A)) return fail(id, inst, "(iii)");
            return pass(id, inst);
        }

        case StatementId::Cor_br_cor3: {
            const auto& phi = *inst.map;
            const auto& I = *inst.ideal;
            int r_pi = rd(quotient(phi.source, I).projection);
            int r_pib = rd(quotient(phi.target, extend_ideal(phi, I)).projection);
            if (r_pi < r_pib) return fail(id, inst, "(1) violated");
            int r = rd(phi);
            if (r == 0 && r_pi != r_pib) return fail(id, inst, "(2) forward violated");
            int rm_pi = rd(quotient(phi.source, maximal_ideal(phi.source)).projection);
            int rm_pib = rd(quotient(phi.target, extended_maximal(phi)).projection);
            if ((rm_pi == rm_pib) != (r == 0)) return fail(id, inst, "(2) converse at m violated");
            return pass(id, inst);
        }

        case StatementId::Rmk_square_sum: {
            const auto& s = *inst.diagram;
            int v = square_rd(s);
            int t1 = triangle_rd(make_triangle(s.phi, s.psi, s.orientation));
            int t2 = triangle_rd(make_triangle(*s.phi2, *s.psi2, opposite(s.orientation)));
            if (v != t1 + t2) return fail(id, inst, "square != sum of triangles");
            DiagramShape<F> flipped = s;
            flipped.orientation = opposite(s.orientation);
            if (square_rd(flipped) != -v) return fail(id, inst, "orientation flip does not negate");
            return pass(id, inst);
        }

        case StatementId::Thm_rs_thm1: {
            const auto& s = *inst.diagram;
            const auto& I = *inst.ideal;
            int v = square_rd(s);
            int v_i = square_rd(base_change_square(s, I));
            int v_m = square_rd(base_change_square(s, maximal_ideal(s.phi.source)));
            IdealPres<F> mb = extend_ideal(s.phi, maximal_ideal(s.phi.source));
            IdealPres<F> mc = extend_ideal(*s.phi2, maximal_ideal(s.phi.source));
            int rhs = rd(induced_map(s.psi, mb)) - rd(induced_map(*s.psi2, mc));
            if (s.orientation == Orientation::Anticlockwise) rhs = -rhs;
            if (v == v_i && v_i == v_m && v_m == rhs) return pass(id, inst);
            return fail(id, inst, "chain " + std::to_string(v) + "," + std::to_string(v_i) + "," +
                                      std::to_string(v_m) + "," + std::to_string(rhs));
        }

        case StatementId::Cor_rs_cor1: {
            const auto& phi = *inst.map;
            const auto& I = *inst.ideal;
            IdealPres<F> ib = extend_ideal(phi, I);
            auto qa = quotient(phi.source, I);
            auto qb = quotient(phi.target, ib);
            LocalMapPres<F> phi_i = make_map(qa.ring, qb.ring, phi.images, phi.verified_degree);
            auto square = make_square(phi, qb.projection, qa.projection, phi_i,
                                      Orientation::Clockwise);
            if (square_rd(square) != 0) return fail(id, inst, "square not basically regular");
            int lhs = rd(phi_i);
            int rhs = rd(phi) - (rd(qa.projection) - rd(qb.projection));
            if (lhs != rhs) return fail(id, inst, "defect formula");
            if (lhs > rd(phi)) return fail(id, inst, "monotonicity");
            if (rd(phi) == 0 && lhs != 0) return fail(id, inst, "descent of basic regularity");
            return pass(id, inst);
        }

        case StatementId::Cor_rs_cor2: {
            const auto& s = *inst.diagram;
            const auto& I = *inst.ideal;
            bool b0 = square_rd(s) == 0;
            bool b1 = square_rd(base_change_square(s, I)) == 0;
            bool b2 = square_rd(base_change_square(s, maximal_ideal(s.phi.source))) == 0;
            IdealPres<F> mb = extend_ideal(s.phi, maximal_ideal(s.phi.source));
            IdealPres<F> mc = extend_ideal(*s.phi2, maximal_ideal(s.phi.source));
            bool b3 = rd(induced_map(s.psi, mb)) == rd(induced_map(*s.psi2, mc));
            if (b0 == b1 && b1 == b2 && b2 == b3) return pass(id, inst);
            return fail(id, inst, "equivalence broken");
        }

        case StatementId::Cor_rs_cor3: {
            const auto& phi = *inst.map;
            const auto& psi = *inst.second_map;
            const auto& I = *inst.ideal;
            auto t = make_triangle(phi, psi, Orientation::Clockwise);
            int v = triangle_rd(t);
            int v_i = triangle_rd(base_change_triangle(t, I));
            int v_m = triangle_rd(base_change_triangle(t, maximal_ideal(phi.source)));
            int rhs = rd(induced_map(psi, extended_maximal(phi)));
            if (v == v_i && v_i == v_m && v_m == rhs) return pass(id, inst);
            return fail(id, inst, "chain broken");
        }

        case StatementId::Cor_rs_cor4: {
            const auto& phi = *inst.map;
            const auto& psi = *inst.second_map;
            auto comp = compose(phi, psi);
            int lhs = rd(comp);
            IdealPres<F> mb = extended_maximal(phi);
            int e1 = rd(phi) + rd(psi) - rd(induced_map(psi, mb));
            int r_pi_mb = rd(quotient(phi.target, mb).projection);
            int r_pi_mc = rd(quotient(psi.target, extended_maximal(comp)).projection);
            int e2 = rd(phi) + (r_pi_mb - r_pi_mc);
            if (lhs != e1 || lhs != e2) return fail(id, inst, "equalities broken");
            if (!(rd(phi) <= lhs && lhs <= rd(phi) + rd(psi)))
                return fail(id, inst, "inequalities broken");
            return pass(id, inst);
        }

        case StatementId::Cor_rs_cor5: {
            const auto& phi = *inst.map;
            const auto& psi = *inst.second_map;
            auto comp = compose(phi, psi);
            if (rd(comp) != rd(phi) + rd(psi)) return fail(id, inst, "additivity fails");
            if (triangle_rd(make_triangle(phi, psi, Orientation::Clockwise)) != 0)
                return fail(id, inst, "triangle defect nonzero");
            return pass(id, inst);
        }

        case StatementId::Cor_rs_cor6: {
            const auto& phi = *inst.map;
            const auto& psi = *inst.second_map;
            auto comp = compose(phi, psi);
            IdealPres<F> mb = extended_maximal(phi);
            auto psi_mb = induced_map(psi, mb);
            bool comp_br = rd(comp) == 0;
            bool phi_br = rd(phi) == 0;
            bool psi_br = rd(psi) == 0;
            bool cond_ii = phi_br && rd(psi) == rd(psi_mb);
            int r_pi_mb = rd(quotient(phi.target, mb).projection);
            int r_pi_mc = rd(quotient(psi.target, extended_maximal(comp)).projection);
            bool cond_iii = phi_br && r_pi_mb == r_pi_mc;
            if (comp_br != cond_ii || comp_br != cond_iii) return fail(id, inst, "(1) broken");
            bool rhs2 = (rd(psi_mb) == 0) && rd(comp) == rd(phi);
            if (psi_br != rhs2) return fail(id, inst, "(2) broken");
            if (phi_br && psi_br && !comp_br) return fail(id, inst, "(3) broken");
            bool mb_equals_n = delta_phi(phi, maximal_ideal(phi.source)) == edim(phi.target);
            if (mb_equals_n && comp_br && !(phi_br && psi_br)) return fail(id, inst, "(4) broken");
            return pass(id, inst);
        }

        case StatementId::Cor_rs_cor7: {
            const auto& phi = *inst.map;
            IdealPres<F> I = rand_m2_ideal(rng, params, phi.source);
            IdealPres<F> ib = extend_ideal(phi, I);
            std::vector<Poly<F>> j_gens = ib.gens;
            auto extra = rand_m2_ideal(rng, params, phi.target);
            for (const auto& g : extra.gens) j_gens.push_back(g);
            IdealPres<F> J = make_ideal(phi.target, j_gens);
            auto qa = quotient(phi.source, I);
            auto qb = quotient(phi.target, J);
            LocalMapPres<F> phi_ij = make_map(qa.ring, qb.ring, phi.images, phi.verified_degree);
            if (rd(phi_ij) == rd(phi)) return pass(id, inst);
            return fail(id, inst, "rd changed under m^2-interior base change");
        }

        case StatementId::Cor_rs_cor8: {
            const auto& phi = *inst.map;
            IdealPres<F> I = rand_m2_ideal(rng, params, phi.source);
            if (rd(induced_map(phi, I)) != rd(phi)) return fail(id, inst, "(1) broken");
            IdealPres<F> J = rand_m2_ideal(rng, params, phi.target);
            auto qj = quotient(phi.target, J);
            if (rd(compose(phi, qj.projection)) != rd(phi)) return fail(id, inst, "(2) broken");
            return pass(id, inst);
        }

        case StatementId::Cor_rs_cor9: {
            const auto& phi = *inst.map;
            if (rd(phi) != 0)
                return fail(id, inst, "flat-family map unexpectedly not basically regular");
            IdealPres<F> I = rand_m2_ideal(rng, params, phi.source);
            IdealPres<F> ib = extend_ideal(phi, I);
            std::vector<Poly<F>> j_gens = ib.gens;
            auto extra = rand_m2_ideal(rng, params, phi.target);
            for (const auto& g : extra.gens) j_gens.push_back(g);
            IdealPres<F> J = make_ideal(phi.target, j_gens);
            auto qa = quotient(phi.source, I);
            auto qb = quotient(phi.target, J);
            if (rd(make_map(qa.ring, qb.ring, phi.images, phi.verified_degree)) != 0)
                return fail(id, inst, "(1) broken");
            if (rd(induced_map(phi, I)) != 0) return fail(id, inst, "(2) broken");
            if (rd(compose(phi, quotient(phi.target, extra).projection)) != 0)
                return fail(id, inst, "(3) broken");
            return pass(id, inst);
        }

        case StatementId::Prop_rs_prop1: {
            const auto& phi = *inst.map;
            const auto& I = *inst.ideal;
            IdealPres<F> ib = extend_ideal(phi, I);
            std::vector<Poly<F>> j_gens = ib.gens;
            if (phi.target.nvars() > 0) {
                int extra = rng.range(1, 2);
                for (int k = 0; k < extra; ++k)
                    j_gens.push_back(gen_detail::rand_poly(rng, f, phi.target.nvars(), 1,
                                                           params.max_gen_degree, 2,
                                                           rng.chance(1, 2)));
            }
            auto qa = quotient(phi.source, I);
            auto qb = quotient(phi.target, ib);
            LocalMapPres<F> phi_i = make_map(qa.ring, qb.ring, phi.images, phi.verified_degree);
            IdealPres<F> j_over_ib = make_ideal(qb.ring, j_gens);
            auto qj = quotient(qb.ring, j_over_ib);
            auto t = make_triangle(phi_i, qj.projection, Orientation::Clockwise);
            // pi over the closed fiber: (J + mB)/mB
            LocalRingPres<F> fiber = closed_fiber(phi);
            IdealPres<F> j_over_fiber = make_ideal(fiber, j_gens);
            int r_fiber = rd(quotient(fiber, j_over_fiber).projection);
            if (triangle_rd(t) != r_fiber) return fail(id, inst, "triangle defect formula");
            LocalMapPres<F> phi_ij = compose(phi_i, qj.projection);
            int lhs = rd(phi_ij);
            int e1 = rd(phi_i) + rd(qj.projection) - r_fiber;
            auto q_i = quotient(phi.source, I);
            auto q_ib = quotient(phi.target, ib);
            int e2 = rd(phi) - (rd(q_i.projection) - rd(q_ib.projection)) + rd(qj.projection) -
                     r_fiber;
            if (lhs != e1 || lhs != e2) return fail(id, inst, "induced defect formulas");
            return pass(id, inst);
        }

        case StatementId::Prop_rs_cor10: {
            const auto& phi = *inst.map;
            if (rd(phi) != 0)
                return fail(id, inst, "flat-family map unexpectedly not basically regular");
            bool mb_proper = edim(closed_fiber(phi)) > 0;  // mB != n
            if (!mb_proper)
                return fail(id, inst, "flat-family target gained no fresh variables");
            // (1)
            IdealPres<F> I = rand_m2_ideal(rng, params, phi.source);
            auto qa = quotient(phi.source, I);
            auto qn2 = quotient(phi.target, maximal_ideal_square(phi.target));
            LocalMapPres<F> phi_in2 = make_map(qa.ring, qn2.ring, phi.images, phi.verified_degree);
            if (rd(phi_in2) != 0) return fail(id, inst, "(1) induced map not basically regular");
            Tri fib1 = is_regular(closed_fiber(phi_in2));
            if (fib1 == Tri::True) return fail(id, inst, "(1) fiber regular");
            // (2)
            auto da = krull_dim(phi.source);
            if (!da)
                return skip(id, inst, SkipReason::UnknownBlocked, "dim(A) undecidable");
            if (*da >= 1) {
                LocalMapPres<F> comp = compose(phi, qn2.projection);
                if (rd(comp) != 0) return fail(id, inst, "(2) composite not basically regular");
                FlatStatus fs = flatness_status(comp);
                if (fs.kind == FlatStatus::Kind::Unknown)
                    return skip(id, inst, SkipReason::UnknownBlocked, "flatness witness missing");
                if (fs.kind != FlatStatus::Kind::NotFlat)
                    return fail(id, inst, "(2) composite flat");
                Tri fib2 = is_regular(closed_fiber(comp));
                if (fib2 == Tri::True) return fail(id, inst, "(2) fiber regular");
            }
            if (fib1 == Tri::Unknown)
                return skip(id, inst, SkipReason::UnknownBlocked, "fiber regularity undecided");
            return pass(id, inst);
        }

        case StatementId::Cor_rs_cor11: {
            const auto& A = *inst.ring;
            auto da = krull_dim(A);
            if (!da) return skip(id, inst, SkipReason::UnknownBlocked, "dim(A) undecidable");
            if (*da == 0) return pass(id, inst);  // hypothesis fails: nothing to check
            auto q = quotient(A, maximal_ideal_square(A));
            if (rd(q.projection) != 0) return fail(id, inst, "projection not basically regular");
            FlatStatus fs = flatness_status(q.projection);
            if (fs.kind == FlatStatus::Kind::Unknown)
                return skip(id, inst, SkipReason::UnknownBlocked, "flatness witness missing");
            if (fs.kind != FlatStatus::Kind::NotFlat) return fail(id, inst, "projection flat");
            return pass(id, inst);
        }

        case StatementId::Thm_bwr_thm1: {
            const auto& phi = *inst.map;
            auto da = krull_dim(phi.source);
            auto db = krull_dim(phi.target);
            LocalRingPres<F> fiber = closed_fiber(phi);
            auto dfib = krull_dim(fiber);
            if (!da || !db || !dfib)
                return skip(id, inst, SkipReason::UnknownBlocked, "dimension undecidable");
            bool c1 = rd(phi) == 0 && is_regular(phi.target) == Tri::True;
            bool c2 = is_regular(phi.source) == Tri::True && is_regular(fiber) == Tri::True &&
                      *db == *da + *dfib;
            if (c1 == c2) return pass(id, inst);
            return fail(id, inst, std::string("(1)=") + (c1 ? "T" : "F") + " (2)=" +
                                      (c2 ? "T" : "F"));
        }

        case StatementId::Thm_br_th1_eps2: {
            const auto& phi = *inst.map;
            auto e2a = eps2(phi.source, params.trunc_degree);
            auto e2b = eps2(phi.target, params.trunc_degree);
            auto e2f = eps2(closed_fiber(phi), params.trunc_degree);
            if (!e2a || !e2b || !e2f || !e2a->stable || !e2b->stable || !e2f->stable)
                return skip(id, inst, SkipReason::UnstableMu, "eps2 not stable");
            bool additive = e2b->value == e2a->value + e2f->value;
            if ((rd(phi) == 0) == additive) return pass(id, inst);
            return fail(id, inst, "eps2 additivity disagrees with rd");
        }
    }
    throw Error("check_statement: unhandled statement");
}

}  // namespace locreg
