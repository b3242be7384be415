#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jet.hpp"
#include "poly.hpp"

namespace locreg {

// A local ring (A, m, K) presented as K[x1..xn] localized at (x1..xn) modulo
// relations with zero constant term. The residue field equals the coefficient
// field by construction.
template <CoeffField F>
struct LocalRingPres {
    F field;
    std::vector<std::string> vars;
    std::vector<Poly<F>> relations;
    int trunc_degree = 6;
    std::optional<int> dim_override;

    int nvars() const { return static_cast<int>(vars.size()); }
    JetContext jet_ctx(int degree = -1) const {
        return JetContext(nvars(), degree < 0 ? trunc_degree : degree);
    }

    bool operator==(const LocalRingPres& o) const {
        return field.spec() == o.field.spec() && vars == o.vars && relations == o.relations &&
               trunc_degree == o.trunc_degree && dim_override == o.dim_override;
    }

    std::string str() const {
        std::string s = "local " + field.spec().name() + "[";
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (i) s += ",";
            s += vars[i];
        }
        s += "]/(";
        for (std::size_t i = 0; i < relations.size(); ++i) {
            if (i) s += ", ";
            s += relations[i].str(vars);
        }
        s += ")";
        return s;
    }
};

template <CoeffField F>
LocalRingPres<F> make_ring(F field, std::vector<std::string> vars, std::vector<Poly<F>> relations,
                           int trunc_degree) {
    if (trunc_degree < 2) throw Error("make_ring: truncation degree must be >= 2");
    std::set<std::string> seen;
    for (const auto& v : vars)
        if (!seen.insert(v).second) throw DuplicateVariable("make_ring: duplicate variable " + v);
    std::vector<Poly<F>> rels;
    for (auto& r : relations) {
        if (r.nvars() != static_cast<int>(vars.size()))
            throw ArityMismatch("make_ring: relation over wrong ambient");
        if (!r.has_zero_constant_term())
            throw NonzeroConstantTerm("make_ring: relation " + std::to_string(rels.size()) +
                                      " has nonzero constant term");
        if (!r.is_zero()) rels.push_back(std::move(r));
    }
    return LocalRingPres<F>{field, std::move(vars), std::move(rels), trunc_degree, std::nullopt};
}

// A proper ideal I of its ring, given by generators inside the maximal ideal.
template <CoeffField F>
struct IdealPres {
    LocalRingPres<F> ring;
    std::vector<Poly<F>> gens;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) s += ", ";
            s += gens[i].str(ring.vars);
        }
        return s + ")";
    }
};

template <CoeffField F>
IdealPres<F> make_ideal(const LocalRingPres<F>& ring, std::vector<Poly<F>> gens) {
    std::vector<Poly<F>> gs;
    for (auto& g : gens) {
        if (g.nvars() != ring.nvars()) throw ArityMismatch("make_ideal: generator over wrong ambient");
        if (!g.has_zero_constant_term())
            throw NonzeroConstantTerm("make_ideal: generator has nonzero constant term");
        if (!g.is_zero()) gs.push_back(std::move(g));
    }
    return IdealPres<F>{ring, std::move(gs)};
}

// The maximal ideal m = (x1..xn).
template <CoeffField F>
IdealPres<F> maximal_ideal(const LocalRingPres<F>& ring) {
    std::vector<Poly<F>> gens;
    for (int i = 0; i < ring.nvars(); ++i)
        gens.push_back(Poly<F>::variable(ring.field, ring.nvars(), i));
    return IdealPres<F>{ring, std::move(gens)};
}

// m^2, generated by the quadratic monomials.
template <CoeffField F>
IdealPres<F> maximal_ideal_square(const LocalRingPres<F>& ring) {
    std::vector<Poly<F>> gens;
    const int n = ring.nvars();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Monomial m(n);
            m.e[static_cast<std::size_t>(i)] += 1;
            m.e[static_cast<std::size_t>(j)] += 1;
            gens.push_back(Poly<F>::monomial(ring.field, n, m, ring.field.one()));
        }
    return IdealPres<F>{ring, std::move(gens)};
}

struct TagFlags {
    bool identity = false;
    bool surjection = false;
    bool variable_adjunction = false;
    bool isomorphism = false;
};

// A local homomorphism phi: A -> B given by images of the source variables.
// Well-definedness is checked up to the carried verified_degree.
template <CoeffField F>
struct LocalMapPres {
    LocalRingPres<F> source, target;
    std::vector<Poly<F>> images;
    int verified_degree = 0;
    TagFlags tags;
    std::shared_ptr<const LocalMapPres<F>> comp_first, comp_second;

    bool is_composite() const { return comp_first != nullptr && comp_second != nullptr; }

    bool operator==(const LocalMapPres& o) const {
        return source == o.source && target == o.target && images == o.images;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (i) s += ", ";
            s += images[i].str(target.vars);
        }
        return s + "]";
    }
};

namespace detail {

template <CoeffField F>
bool images_are_variables(const LocalMapPres<F>& m) {
    for (std::size_t i = 0; i < m.images.size(); ++i)
        if (!(m.images[i] == Poly<F>::variable(m.target.field, m.target.nvars(), static_cast<int>(i))))
            return false;
    return true;
}

template <CoeffField F>
void detect_tags(LocalMapPres<F>& m) {
    if (m.source == m.target && images_are_variables(m)) m.tags.identity = true;
    // variable adjunction: target extends the source variable list, maps x->x,
    // and carries exactly the source relations
    if (m.target.nvars() >= m.source.nvars() && images_are_variables(m) &&
        std::equal(m.source.vars.begin(), m.source.vars.end(), m.target.vars.begin()) &&
        m.source.relations.size() == m.target.relations.size()) {
        std::vector<int> var_map(static_cast<std::size_t>(m.source.nvars()));
        for (int i = 0; i < m.source.nvars(); ++i) var_map[static_cast<std::size_t>(i)] = i;
        bool ok = true;
        for (std::size_t k = 0; k < m.source.relations.size(); ++k)
            if (!(reindex(m.source.relations[k], m.target.nvars(), var_map) == m.target.relations[k])) {
                ok = false;
                break;
            }
        if (ok) m.tags.variable_adjunction = true;
    }
}

}  // namespace detail

template <CoeffField F>
LocalMapPres<F> make_map(const LocalRingPres<F>& src, const LocalRingPres<F>& tgt,
                         std::vector<Poly<F>> images, int degree) {
    if (!(src.field.spec() == tgt.field.spec()))
        throw Error("make_map: source and target fields differ");
    if (static_cast<int>(images.size()) != src.nvars())
        throw ArityMismatch("make_map: expected " + std::to_string(src.nvars()) + " images, got " +
                            std::to_string(images.size()));
    for (const auto& im : images) {
        if (im.nvars() != tgt.nvars()) throw ArityMismatch("make_map: image over wrong ambient");
        if (!im.has_zero_constant_term())
            throw NonlocalImage("make_map: image has nonzero constant term");
    }
    JetContext ctx(tgt.nvars(), degree);
    auto span = jet_ideal_span_builder(tgt.field, tgt.relations, ctx);
    for (std::size_t k = 0; k < src.relations.size(); ++k) {
        Poly<F> v = substitute_trunc(src.relations[k], images, ctx);
        if (!span.contains(jet_vector(v, ctx)))
            throw NotWellDefined("make_map: relation " + src.relations[k].str(src.vars) +
                                     " does not map into the target ideal at degree " +
                                     std::to_string(degree),
                                 degree, static_cast<int>(k));
    }
    LocalMapPres<F> m{src, tgt, std::move(images), degree, {}, nullptr, nullptr};
    detail::detect_tags(m);
    return m;
}

template <CoeffField F>
LocalMapPres<F> identity_map(const LocalRingPres<F>& ring) {
    std::vector<Poly<F>> images;
    for (int i = 0; i < ring.nvars(); ++i)
        images.push_back(Poly<F>::variable(ring.field, ring.nvars(), i));
    LocalMapPres<F> m{ring, ring, std::move(images), ring.trunc_degree, {}, nullptr, nullptr};
    m.tags.identity = true;
    m.tags.surjection = true;
    detail::detect_tags(m);
    return m;
}

template <CoeffField F>
struct QuotientResult {
    LocalRingPres<F> ring;
    LocalMapPres<F> projection;
};

// A/I with the canonical surjection pi_I. Relations of A/I are the relations
// of A together with the generators of I; pi_I maps every variable to itself.
template <CoeffField F>
QuotientResult<F> quotient(const LocalRingPres<F>& A, const IdealPres<F>& I) {
    std::vector<Poly<F>> rels = A.relations;
    for (const auto& g : I.gens) rels.push_back(g);
    LocalRingPres<F> q = make_ring(A.field, A.vars, std::move(rels), A.trunc_degree);
    std::vector<Poly<F>> images;
    for (int i = 0; i < A.nvars(); ++i)
        images.push_back(Poly<F>::variable(A.field, A.nvars(), i));
    LocalMapPres<F> proj{A, q, std::move(images), A.trunc_degree, {}, nullptr, nullptr};
    proj.tags.surjection = true;
    detail::detect_tags(proj);
    return {std::move(q), std::move(proj)};
}

// The extended ideal IB in the target of phi. Generators are truncated
// substitution representatives (exact modulo n^verified_degree; their linear
// parts are exact).
template <CoeffField F>
IdealPres<F> extend_ideal(const LocalMapPres<F>& phi, const IdealPres<F>& I) {
    JetContext ctx(phi.target.nvars(), phi.verified_degree);
    std::vector<Poly<F>> gens;
    for (const auto& g : I.gens) {
        Poly<F> img = substitute_trunc(g, phi.images, ctx);
        if (!img.is_zero()) gens.push_back(std::move(img));
    }
    return IdealPres<F>{phi.target, std::move(gens)};
}

// The induced map phi_I: A/I -> B/IB.
template <CoeffField F>
LocalMapPres<F> induced_map(const LocalMapPres<F>& phi, const IdealPres<F>& I) {
    auto qa = quotient(phi.source, I);
    auto qb = quotient(phi.target, extend_ideal(phi, I));
    LocalMapPres<F> m = make_map(qa.ring, qb.ring, phi.images, phi.verified_degree);
    if (phi.tags.surjection) m.tags.surjection = true;
    return m;
}

// The closed fiber B/mB of phi, presented over the target variables.
template <CoeffField F>
LocalRingPres<F> closed_fiber(const LocalMapPres<F>& phi) {
    std::vector<Poly<F>> rels = phi.target.relations;
    for (const auto& im : phi.images) rels.push_back(im);
    return make_ring(phi.target.field, phi.target.vars, std::move(rels),
                     phi.target.trunc_degree);
}

template <CoeffField F>
LocalMapPres<F> compose(const LocalMapPres<F>& phi, const LocalMapPres<F>& psi) {
    if (!(phi.target == psi.source))
        throw CompositionMismatch("compose: target of first map differs from source of second");
    int degree = std::min(phi.verified_degree, psi.verified_degree);
    JetContext ctx(psi.target.nvars(), degree);
    std::vector<Poly<F>> images;
    images.reserve(phi.images.size());
    for (const auto& im : phi.images) images.push_back(substitute_trunc(im, psi.images, ctx));
    LocalMapPres<F> m = make_map(phi.source, psi.target, std::move(images), degree);
    m.tags.surjection = phi.tags.surjection && psi.tags.surjection;
    m.comp_first = std::make_shared<LocalMapPres<F>>(phi);
    m.comp_second = std::make_shared<LocalMapPres<F>>(psi);
    return m;
}

// Exact criterion: g lies in m^2 iff its linear part lies in the linear span
// of the ring relations.
template <CoeffField F>
bool contained_in_m2(const IdealPres<F>& I) {
    const F& f = I.ring.field;
    SpanBuilder<F> span(f, I.ring.nvars());
    for (const auto& r : I.ring.relations) span.add(to_sparse(f, r.linear_part()));
    for (const auto& g : I.gens)
        if (!span.contains(to_sparse(f, g.linear_part()))) return false;
    return true;
}

// Adjoin fresh variables: A -> A[y1..yk] localized, x -> x.
template <CoeffField F>
LocalMapPres<F> adjoin_variables(const LocalRingPres<F>& A, const std::vector<std::string>& fresh) {
    std::vector<std::string> vars = A.vars;
    for (const auto& v : fresh) vars.push_back(v);
    std::vector<int> var_map(static_cast<std::size_t>(A.nvars()));
    for (int i = 0; i < A.nvars(); ++i) var_map[static_cast<std::size_t>(i)] = i;
    std::vector<Poly<F>> rels;
    for (const auto& r : A.relations)
        rels.push_back(reindex(r, static_cast<int>(vars.size()), var_map));
    LocalRingPres<F> target = make_ring(A.field, vars, std::move(rels), A.trunc_degree);
    std::vector<Poly<F>> images;
    for (int i = 0; i < A.nvars(); ++i)
        images.push_back(Poly<F>::variable(A.field, target.nvars(), i));
    LocalMapPres<F> m{A, std::move(target), std::move(images), A.trunc_degree, {}, nullptr, nullptr};
    m.tags.variable_adjunction = true;
    detail::detect_tags(m);
    return m;
}

template <CoeffField F>
struct IsoResult {
    LocalMapPres<F> fwd;
    LocalMapPres<F> inv;
};

// Coordinate change with explicit validated inverse. The target presentation
// carries the transformed relations; both directions are checked to compose
// to the identity modulo degree N before the isomorphism tag is granted.
template <CoeffField F>
IsoResult<F> make_isomorphism(const LocalRingPres<F>& B, const std::vector<Poly<F>>& t_images) {
    const F& f = B.field;
    const int n = B.nvars();
    const int N = B.trunc_degree;
    if (static_cast<int>(t_images.size()) != n)
        throw ArityMismatch("make_isomorphism: wrong image count");
    JetContext ctx(n, N);

    // linear part as a row-major matrix: T(y) = L*y + H(y)
    Matrix<F> L(f, n, n);
    for (int i = 0; i < n; ++i) {
        auto lin = t_images[static_cast<std::size_t>(i)].linear_part();
        for (int j = 0; j < n; ++j) L.at(i, j) = lin[static_cast<std::size_t>(j)];
    }
    if (rank(L) != n) throw Error("make_isomorphism: linear part is singular");

    // inverse of L via Gauss-Jordan on [L | I]
    Matrix<F> aug(f, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = L.at(i, j);
        aug.at(i, n + i) = f.one();
    }
    auto red = rref(aug);
    Matrix<F> Linv(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Linv.at(i, j) = red.reduced.at(i, n + j);

    // target ring with transformed relations
    std::vector<Poly<F>> trels;
    for (const auto& r : B.relations) trels.push_back(substitute_trunc(r, t_images, ctx));
    LocalRingPres<F> B2 = make_ring(f, B.vars, std::move(trels), N);

    LocalMapPres<F> fwd = make_map(B, B2, t_images, N);

    // higher-order parts H_i = T_i - (linear part of T_i)
    std::vector<Poly<F>> higher;
    for (int j = 0; j < n; ++j) {
        Poly<F> lin_poly(f, n);
        auto lin = t_images[static_cast<std::size_t>(j)].linear_part();
        for (int i = 0; i < n; ++i)
            lin_poly.add_term(Monomial::var(n, i), lin[static_cast<std::size_t>(i)]);
        higher.push_back(t_images[static_cast<std::size_t>(j)] - lin_poly);
    }

    // iterate G = Linv * (x - H(G))
    std::vector<Poly<F>> g_images;
    auto linear_apply = [&](const Matrix<F>& M, const std::vector<Poly<F>>& vs) {
        std::vector<Poly<F>> out;
        for (int i = 0; i < n; ++i) {
            Poly<F> acc(f, n);
            for (int j = 0; j < n; ++j)
                if (!f.is_zero(M.at(i, j))) acc = acc + vs[static_cast<std::size_t>(j)].scaled(M.at(i, j));
            out.push_back(std::move(acc));
        }
        return out;
    };
    std::vector<Poly<F>> x_vars;
    for (int i = 0; i < n; ++i) x_vars.push_back(Poly<F>::variable(f, n, i));
    g_images = linear_apply(Linv, x_vars);
    for (int round = 0; round <= N; ++round) {
        std::vector<Poly<F>> rhs;
        bool all_zero_higher = true;
        for (int i = 0; i < n; ++i) {
            Poly<F> hi = substitute_trunc(higher[static_cast<std::size_t>(i)], g_images, ctx);
            if (!hi.is_zero()) all_zero_higher = false;
            rhs.push_back(x_vars[static_cast<std::size_t>(i)] - hi);
        }
        std::vector<Poly<F>> next = linear_apply(Linv, rhs);
        if (next == g_images) break;
        g_images = std::move(next);
        if (all_zero_higher) break;
    }

    LocalMapPres<F> inv = make_map(B2, B, g_images, N);

    // both round trips must be the identity modulo degree N
    LocalMapPres<F> rt1 = compose(fwd, inv);
    LocalMapPres<F> rt2 = compose(inv, fwd);
    if (!detail::images_are_variables(rt1) || !detail::images_are_variables(rt2))
        throw InternalInconsistency("make_isomorphism: inverse validation failed");
    fwd.tags.isomorphism = true;
    inv.tags.isomorphism = true;
    return {std::move(fwd), std::move(inv)};
}

enum class Orientation { Clockwise, Anticlockwise };

inline Orientation opposite(Orientation o) {
    return o == Orientation::Clockwise ? Orientation::Anticlockwise : Orientation::Clockwise;
}

// Oriented commutative triangle (phi: A->B, psi: B->C) or square
// (phi: A->B, psi: B->D, phi2: A->C, psi2: C->D).
template <CoeffField F>
struct DiagramShape {
    enum class Kind { Triangle, Square };

    Kind kind;
    Orientation orientation;
    LocalMapPres<F> phi, psi;
    std::optional<LocalMapPres<F>> phi2, psi2;
};

template <CoeffField F>
DiagramShape<F> make_triangle(const LocalMapPres<F>& phi, const LocalMapPres<F>& psi,
                              Orientation orientation) {
    if (!(phi.target == psi.source))
        throw CompositionMismatch("make_triangle: arrows do not compose");
    return DiagramShape<F>{DiagramShape<F>::Kind::Triangle, orientation, phi, psi, std::nullopt,
                           std::nullopt};
}

template <CoeffField F>
DiagramShape<F> make_square(const LocalMapPres<F>& phi, const LocalMapPres<F>& psi,
                            const LocalMapPres<F>& phi2, const LocalMapPres<F>& psi2,
                            Orientation orientation) {
    if (!(phi.source == phi2.source) || !(phi.target == psi.source) ||
        !(phi2.target == psi2.source) || !(psi.target == psi2.target))
        throw CompositionMismatch("make_square: corner rings do not match");
    LocalMapPres<F> upper = compose(phi, psi);
    LocalMapPres<F> lower = compose(phi2, psi2);
    int degree = std::min(upper.verified_degree, lower.verified_degree);
    for (std::size_t i = 0; i < upper.images.size(); ++i)
        if (!(upper.images[i].truncated(degree) == lower.images[i].truncated(degree)))
            throw NonCommutative("make_square: the two composites disagree at degree " +
                                 std::to_string(degree));
    return DiagramShape<F>{DiagramShape<F>::Kind::Square, orientation, phi, psi, phi2, psi2};
}

}  // namespace locreg
