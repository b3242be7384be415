#pragma once

#include <optional>
#include <string>
#include <vector>

#include "presentation.hpp"

namespace locreg {

enum class Tri { True, False, Unknown };

inline const char* tri_str(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "unknown";
    }
}

// Linear span of the relations inside K^n; m/m^2 is K^n modulo this span.
template <CoeffField F>
Subspace<F> lin_space(const LocalRingPres<F>& A) {
    SpanBuilder<F> b(A.field, A.nvars());
    for (const auto& r : A.relations) b.add(to_sparse(A.field, r.linear_part()));
    return Subspace<F>::from_builder(b);
}

template <CoeffField F>
int edim(const LocalRingPres<F>& A) {
    return A.nvars() - lin_space(A).dim();
}

// delta_A(I) = dim (I + m^2)/m^2, computed from linear parts only.
template <CoeffField F>
int delta(const IdealPres<F>& I) {
    const F& f = I.ring.field;
    SpanBuilder<F> b(f, I.ring.nvars());
    for (const auto& r : I.ring.relations) b.add(to_sparse(f, r.linear_part()));
    int base = b.dim();
    for (const auto& g : I.gens) b.add(to_sparse(f, g.linear_part()));
    return b.dim() - base;
}

template <CoeffField F>
int delta(const LocalRingPres<F>& A, const IdealPres<F>& I) {
    (void)A;
    return delta(I);
}

// delta^phi_B(I) = delta_B(IB).
template <CoeffField F>
int delta_phi(const LocalMapPres<F>& phi, const IdealPres<F>& I) {
    return delta(extend_ideal(phi, I));
}

// The matrix of the induced K-linear map m/m^2 -> n/n^2 on complement bases
// of the relation linear spans.
template <CoeffField F>
struct LinearizedMap {
    Matrix<F> matrix;
    std::vector<int> source_basis;  // variable indices spanning m/m^2
    std::vector<int> target_basis;  // variable indices spanning n/n^2
    int rank = 0;
    int nullity = 0;
};

template <CoeffField F>
LinearizedMap<F> linearized_map(const LocalMapPres<F>& phi) {
    const F& f = phi.source.field;
    Subspace<F> sa = lin_space(phi.source);
    Subspace<F> sb = lin_space(phi.target);
    std::vector<int> src_basis = sa.complement_columns();
    std::vector<int> tgt_basis = sb.complement_columns();

    // columns of the raw map: linear part of each variable image
    std::vector<std::vector<typename F::Elem>> img_lin;
    for (const auto& im : phi.images) img_lin.push_back(im.linear_part());

    // well-definedness guarantees lin(source relations) lands in lin(target relations)
    for (const auto& r : phi.source.relations) {
        auto lr = r.linear_part();
        std::vector<typename F::Elem> w(static_cast<std::size_t>(phi.target.nvars()), f.zero());
        for (int i = 0; i < phi.source.nvars(); ++i) {
            if (f.is_zero(lr[static_cast<std::size_t>(i)])) continue;
            for (int j = 0; j < phi.target.nvars(); ++j)
                w[static_cast<std::size_t>(j)] =
                    f.add(w[static_cast<std::size_t>(j)],
                          f.mul(lr[static_cast<std::size_t>(i)],
                                img_lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        }
        if (!sb.contains(to_sparse(f, w)))
            throw InternalInconsistency(
                "linearized_map: source relation linear part does not map into target span");
    }

    Matrix<F> m(f, static_cast<int>(tgt_basis.size()), static_cast<int>(src_basis.size()));
    for (std::size_t c = 0; c < src_basis.size(); ++c) {
        auto w = to_sparse(f, img_lin[static_cast<std::size_t>(src_basis[c])]);
        auto reduced = to_dense(f, sb.reduce(w), phi.target.nvars());
        for (std::size_t r = 0; r < tgt_basis.size(); ++r)
            m.at(static_cast<int>(r), static_cast<int>(c)) =
                reduced[static_cast<std::size_t>(tgt_basis[r])];
    }
    int rk = rank(m);
    int nullity = static_cast<int>(src_basis.size()) - rk;
    return LinearizedMap<F>{std::move(m), std::move(src_basis), std::move(tgt_basis), rk, nullity};
}

// Regularity defect: nullity of the linearized map. Cross-checked against
// edim(A) + edim(B/mB) - edim(B); disagreement means an implementation bug.
template <CoeffField F>
int rd(const LocalMapPres<F>& phi) {
    int via_nullity = linearized_map(phi).nullity;
    int via_edim = edim(phi.source) + edim(closed_fiber(phi)) - edim(phi.target);
    if (via_nullity != via_edim)
        throw InternalInconsistency("rd: nullity route " + std::to_string(via_nullity) +
                                    " != edim route " + std::to_string(via_edim));
    return via_nullity;
}

template <CoeffField F>
bool is_basically_regular(const LocalMapPres<F>& phi) {
    return rd(phi) == 0;
}

struct MuResult {
    int value = 0;
    bool stable = false;
};

namespace detail {

// dim of ((gens)+I_A+(x)^N) / ((x)(gens,I_A)+I_A+(x)^N) in the jet algebra.
template <CoeffField F>
int mu_at(const IdealPres<F>& I, int degree) {
    const F& f = I.ring.field;
    const int n = I.ring.nvars();
    JetContext ctx(n, degree);
    std::vector<Poly<F>> lifted = I.ring.relations;
    for (const auto& g : I.gens) lifted.push_back(g);

    int top = jet_ideal_span_builder(f, lifted, ctx).dim();

    std::vector<Poly<F>> sub;
    for (const auto& g : lifted)
        for (int i = 0; i < n; ++i) sub.push_back(g * Poly<F>::variable(f, n, i));
    for (const auto& r : I.ring.relations) sub.push_back(r);
    int bottom = jet_ideal_span_builder(f, sub, ctx).dim();
    return top - bottom;
}

}  // namespace detail

// mu_A(I) = dim I/mI computed at truncation degree N; stable means the value
// agrees at N, N+1 and N+2, which certifies it at desk scale.
template <CoeffField F>
MuResult mu(const IdealPres<F>& I, int degree) {
    int v0 = detail::mu_at(I, degree);
    int v1 = detail::mu_at(I, degree + 1);
    int v2 = detail::mu_at(I, degree + 2);
    return MuResult{v0, v0 == v1 && v1 == v2};
}

template <CoeffField F>
MuResult mu(const IdealPres<F>& I) {
    return mu(I, I.ring.trunc_degree);
}

namespace detail {

inline std::optional<int> min_hitting_set(const std::vector<std::vector<int>>& supports, int n) {
    if (n > 20) return std::nullopt;
    for (int k = 0; k <= n; ++k) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != k) continue;
            bool hits_all = true;
            for (const auto& s : supports) {
                bool hit = false;
                for (int v : s)
                    if (mask & (1u << v)) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    hits_all = false;
                    break;
                }
            }
            if (hits_all) return k;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Krull dimension on the decidable classes: free presentations, monomial
// relations (via minimal prime covers), a single nonzero relation, or an
// explicit override. Everything else is Unknown and stays Unknown.
template <CoeffField F>
std::optional<int> krull_dim(const LocalRingPres<F>& A) {
    const int n = A.nvars();
    if (A.relations.empty()) return n;
    bool all_monomial = true;
    for (const auto& r : A.relations)
        if (r.terms().size() != 1) {
            all_monomial = false;
            break;
        }
    if (all_monomial) {
        std::vector<std::vector<int>> supports;
        for (const auto& r : A.relations) {
            std::vector<int> s;
            const Monomial& m = r.terms().begin()->first;
            for (int i = 0; i < n; ++i)
                if (m.e[static_cast<std::size_t>(i)] > 0) s.push_back(i);
            supports.push_back(std::move(s));
        }
        if (auto k = detail::min_hitting_set(supports, n)) return n - *k;
    }
    if (A.relations.size() == 1) return n - 1;
    if (A.dim_override) return *A.dim_override;
    return std::nullopt;
}

template <CoeffField F>
std::optional<int> cdim(const LocalRingPres<F>& A) {
    auto d = krull_dim(A);
    if (!d) return std::nullopt;
    return edim(A) - *d;
}

template <CoeffField F>
Tri is_regular(const LocalRingPres<F>& A) {
    auto d = krull_dim(A);
    if (!d) return Tri::Unknown;
    return edim(A) == *d ? Tri::True : Tri::False;
}

namespace detail {

template <CoeffField F>
struct MinimalPresentation {
    std::vector<std::string> vars;
    std::vector<Poly<F>> relations;  // all inside m^2 of the reduced ambient
};

// Eliminate variables against relations with nonzero linear part until every
// remaining relation lies in the square of the maximal ideal. Correct modulo
// (vars)^work_degree.
template <CoeffField F>
MinimalPresentation<F> minimize_presentation(const LocalRingPres<F>& A, int work_degree) {
    const F& f = A.field;
    std::vector<std::string> vars = A.vars;
    std::vector<Poly<F>> rels;
    for (const auto& r : A.relations) rels.push_back(r.truncated(work_degree));

    for (;;) {
        int n = static_cast<int>(vars.size());
        int rel_idx = -1, var_idx = -1;
        for (std::size_t k = 0; k < rels.size() && rel_idx < 0; ++k) {
            auto lin = rels[k].linear_part();
            for (int i = 0; i < n; ++i)
                if (!f.is_zero(lin[static_cast<std::size_t>(i)])) {
                    rel_idx = static_cast<int>(k);
                    var_idx = i;
                    break;
                }
        }
        if (rel_idx < 0) break;

        JetContext ctx(n, work_degree);
        Poly<F> h = implicit_eliminate(rels[static_cast<std::size_t>(rel_idx)], var_idx, ctx);

        std::vector<Poly<F>> images;
        for (int i = 0; i < n; ++i)
            images.push_back(i == var_idx ? h : Poly<F>::variable(f, n, i));

        std::vector<int> var_map(static_cast<std::size_t>(n), -1);
        std::vector<std::string> new_vars;
        for (int i = 0; i < n; ++i) {
            if (i == var_idx) continue;
            var_map[static_cast<std::size_t>(i)] = static_cast<int>(new_vars.size());
            new_vars.push_back(vars[static_cast<std::size_t>(i)]);
        }
        var_map[static_cast<std::size_t>(var_idx)] = 0;  // never hit: substituted away

        std::vector<Poly<F>> new_rels;
        for (std::size_t k = 0; k < rels.size(); ++k) {
            if (static_cast<int>(k) == rel_idx) continue;
            Poly<F> s = substitute_trunc(rels[k], images, ctx);
            if (s.is_zero()) continue;
            new_rels.push_back(reindex(s, n - 1, var_map));
        }
        vars = std::move(new_vars);
        rels = std::move(new_rels);
    }
    return {std::move(vars), std::move(rels)};
}

}  // namespace detail

// Second deviation via a minimal presentation: eliminate all relations with
// nonzero linear part, then count minimal generators of what remains over the
// reduced regular ambient. A pivot always exists while a linear part is
// nonzero, so this never stalls.
template <CoeffField F>
std::optional<MuResult> eps2(const LocalRingPres<F>& A, int degree) {
    auto min_pres = detail::minimize_presentation(A, degree + 2);
    LocalRingPres<F> ambient =
        make_ring(A.field, min_pres.vars, {}, std::max(A.trunc_degree, degree + 2));
    IdealPres<F> rel_ideal = make_ideal(ambient, min_pres.relations);
    return mu(rel_ideal, degree);
}

template <CoeffField F>
std::optional<MuResult> eps2(const LocalRingPres<F>& A) {
    return eps2(A, A.trunc_degree);
}

// Flatness by structural witness only: identities, variable adjunctions,
// validated isomorphisms, and compositions of witnessed-flat maps are Flat;
// a known dimension defect dim(B) != dim(A) + dim(B/mB) certifies NotFlat.
struct FlatStatus {
    enum class Kind { Flat, NotFlat, Unknown };
    Kind kind = Kind::Unknown;
    std::string witness;

    bool operator==(const FlatStatus& o) const { return kind == o.kind; }
};

namespace detail {

template <CoeffField F>
bool flat_witnessed(const LocalMapPres<F>& phi, std::string& witness) {
    if (phi.tags.identity) {
        witness = "identity";
        return true;
    }
    if (phi.tags.variable_adjunction) {
        witness = "variable adjunction";
        return true;
    }
    if (phi.tags.isomorphism) {
        witness = "isomorphism";
        return true;
    }
    if (phi.is_composite()) {
        std::string w1, w2;
        if (flat_witnessed(*phi.comp_first, w1) && flat_witnessed(*phi.comp_second, w2)) {
            witness = "composition(" + w1 + ", " + w2 + ")";
            return true;
        }
    }
    return false;
}

}  // namespace detail

template <CoeffField F>
FlatStatus flatness_status(const LocalMapPres<F>& phi) {
    std::string witness;
    if (detail::flat_witnessed(phi, witness)) return {FlatStatus::Kind::Flat, witness};
    auto da = krull_dim(phi.source);
    auto db = krull_dim(phi.target);
    auto dfib = krull_dim(closed_fiber(phi));
    if (da && db && dfib && *db != *da + *dfib)
        return {FlatStatus::Kind::NotFlat,
                "dim " + std::to_string(*db) + " != " + std::to_string(*da) + " + " +
                    std::to_string(*dfib)};
    return {FlatStatus::Kind::Unknown, ""};
}

template <CoeffField F>
Tri is_weakly_regular(const LocalMapPres<F>& phi) {
    FlatStatus fs = flatness_status(phi);
    Tri fiber_regular = is_regular(closed_fiber(phi));
    if (fs.kind == FlatStatus::Kind::NotFlat || fiber_regular == Tri::False) return Tri::False;
    if (fs.kind == FlatStatus::Kind::Flat && fiber_regular == Tri::True) return Tri::True;
    return Tri::Unknown;
}

// Signed defect of an oriented triangle: clockwise counts edges minus the
// composite, anticlockwise negates.
template <CoeffField F>
int triangle_rd(const DiagramShape<F>& t) {
    if (t.kind != DiagramShape<F>::Kind::Triangle)
        throw ShapeMismatch("triangle_rd: not a triangle");
    LocalMapPres<F> comp = compose(t.phi, t.psi);
    int v = rd(t.phi) + rd(t.psi) - rd(comp);
    return t.orientation == Orientation::Clockwise ? v : -v;
}

// Signed defect of an oriented square; always equals the sum of its two
// opposite-oriented triangles, which is re-derived here as a self-check.
template <CoeffField F>
int square_rd(const DiagramShape<F>& s) {
    if (s.kind != DiagramShape<F>::Kind::Square) throw ShapeMismatch("square_rd: not a square");
    int v = (rd(s.phi) + rd(s.psi)) - (rd(*s.phi2) + rd(*s.psi2));
    int signed_v = s.orientation == Orientation::Clockwise ? v : -v;
    int t1 = triangle_rd(make_triangle(s.phi, s.psi, s.orientation));
    int t2 = triangle_rd(make_triangle(*s.phi2, *s.psi2, opposite(s.orientation)));
    if (signed_v != t1 + t2)
        throw InternalInconsistency("square_rd: triangle decomposition disagrees");
    return signed_v;
}

// The square (A/I) tensor S: every corner is quotiented by the extension of I
// along the corresponding path. The bottom-right corner folds in both paths'
// representatives so the induced square composes literally.
template <CoeffField F>
DiagramShape<F> base_change_square(const DiagramShape<F>& s, const IdealPres<F>& I) {
    if (s.kind != DiagramShape<F>::Kind::Square)
        throw ShapeMismatch("base_change_square: not a square");
    auto qa = quotient(s.phi.source, I);
    IdealPres<F> ib = extend_ideal(s.phi, I);
    IdealPres<F> ic = extend_ideal(*s.phi2, I);
    auto qb = quotient(s.phi.target, ib);
    auto qc = quotient(s.phi2->target, ic);
    IdealPres<F> id_b = extend_ideal(s.psi, ib);
    IdealPres<F> id_c = extend_ideal(*s.psi2, ic);
    std::vector<Poly<F>> d_gens = id_b.gens;
    for (const auto& g : id_c.gens) d_gens.push_back(g);
    auto qd = quotient(s.psi.target, IdealPres<F>{s.psi.target, std::move(d_gens)});

    int vd = std::min(std::min(s.phi.verified_degree, s.psi.verified_degree),
                      std::min(s.phi2->verified_degree, s.psi2->verified_degree));
    LocalMapPres<F> phi_i = make_map(qa.ring, qb.ring, s.phi.images, vd);
    LocalMapPres<F> psi_i = make_map(qb.ring, qd.ring, s.psi.images, vd);
    LocalMapPres<F> phi2_i = make_map(qa.ring, qc.ring, s.phi2->images, vd);
    LocalMapPres<F> psi2_i = make_map(qc.ring, qd.ring, s.psi2->images, vd);
    return make_square(phi_i, psi_i, phi2_i, psi2_i, s.orientation);
}

// The triangle (A/I) tensor T, with the bottom corner quotiented along the
// composite path.
template <CoeffField F>
DiagramShape<F> base_change_triangle(const DiagramShape<F>& t, const IdealPres<F>& I) {
    if (t.kind != DiagramShape<F>::Kind::Triangle)
        throw ShapeMismatch("base_change_triangle: not a triangle");
    auto qa = quotient(t.phi.source, I);
    IdealPres<F> ib = extend_ideal(t.phi, I);
    auto qb = quotient(t.phi.target, ib);
    IdealPres<F> ic = extend_ideal(t.psi, ib);
    auto qc = quotient(t.psi.target, ic);
    int vd = std::min(t.phi.verified_degree, t.psi.verified_degree);
    LocalMapPres<F> phi_i = make_map(qa.ring, qb.ring, t.phi.images, vd);
    LocalMapPres<F> psi_i = make_map(qb.ring, qc.ring, t.psi.images, vd);
    return make_triangle(phi_i, psi_i, t.orientation);
}

// Summary record consumed by the frontend.
struct InvariantReport {
    int edim = 0;
    std::optional<int> dim;
    std::optional<int> cdim;
    std::optional<MuResult> mu_max;  // mu of the maximal ideal
    std::optional<MuResult> eps2;
    std::optional<int> rd;
    std::optional<bool> basically_regular;
    Tri regular = Tri::Unknown;
    Tri weakly_regular = Tri::Unknown;
    FlatStatus flat;
    int verified_degree = 0;
};

template <CoeffField F>
InvariantReport ring_report(const LocalRingPres<F>& A) {
    InvariantReport r;
    r.edim = edim(A);
    r.dim = krull_dim(A);
    r.cdim = cdim(A);
    r.mu_max = mu(maximal_ideal(A));
    r.eps2 = eps2(A);
    r.regular = is_regular(A);
    r.verified_degree = A.trunc_degree;
    return r;
}

template <CoeffField F>
InvariantReport map_report(const LocalMapPres<F>& phi) {
    InvariantReport r;
    r.edim = edim(phi.source);
    r.rd = rd(phi);
    r.basically_regular = (*r.rd == 0);
    r.flat = flatness_status(phi);
    r.weakly_regular = is_weakly_regular(phi);
    r.verified_degree = phi.verified_degree;
    return r;
}

}  // namespace locreg
