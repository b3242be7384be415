#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "presentation.hpp"
#include "rng.hpp"

namespace locreg {

template <CoeffField F>
struct GenParams {
    F field;
    int max_vars = 4;
    int max_relations = 3;
    int max_gen_degree = 3;
    int max_ideal_gens = 3;
    int trunc_degree = 6;
    std::uint64_t seed = 0;
};

enum class Shape {
    Ring,
    RingWithIdeal,
    Map,
    ComposablePair,
    QuotientSquare,
    FlatFamily,
    SurjectionTriangle
};

inline const char* shape_str(Shape s) {
    switch (s) {
        case Shape::Ring: return "Ring";
        case Shape::RingWithIdeal: return "RingWithIdeal";
        case Shape::Map: return "Map";
        case Shape::ComposablePair: return "ComposablePair";
        case Shape::QuotientSquare: return "QuotientSquare";
        case Shape::FlatFamily: return "FlatFamily";
        case Shape::SurjectionTriangle: return "SurjectionTriangle";
    }
    return "?";
}

// A generated test instance. Statement checks derive any auxiliary randomness
// they need from `seed`, so a verdict is a pure function of the instance.
template <CoeffField F>
struct Instance {
    Shape shape;
    std::uint64_t seed = 0;
    std::optional<LocalRingPres<F>> ring;       // primary ring A
    std::optional<IdealPres<F>> ideal;          // ideal over A
    std::optional<LocalMapPres<F>> map;         // phi
    std::optional<LocalMapPres<F>> second_map;  // psi (pairs / triangles)
    std::optional<DiagramShape<F>> diagram;     // squares

    std::string digest() const {
        std::string s = std::string(shape_str(shape)) + " seed=" + std::to_string(seed);
        if (ring) s += "; A = " + ring->str();
        if (ideal) s += "; I = " + ideal->str() + " in " + ideal->ring.str();
        if (map) s += "; phi: " + map->source.str() + " -> " + map->target.str() + " = " + map->str();
        if (second_map)
            s += "; psi: " + second_map->source.str() + " -> " + second_map->target.str() + " = " +
                 second_map->str();
        if (diagram && diagram->kind == DiagramShape<F>::Kind::Square)
            s += "; square over " + diagram->phi.source.str();
        return s;
    }
};

namespace gen_detail {

// Variable name pools per level; levels never collide, which keeps adjunction
// detection and quotient construction unambiguous.
inline std::vector<std::string> var_names(int level, int count) {
    static const std::vector<std::vector<std::string>> pools = {
        {"x", "y", "z", "w", "x4", "x5", "x6"},
        {"u", "v", "s", "t", "u4", "u5", "u6"},
        {"a", "b", "c", "d", "a4", "a5", "a6"},
    };
    const auto& pool = pools[static_cast<std::size_t>(level % 3)];
    return {pool.begin(), pool.begin() + count};
}

template <CoeffField F>
typename F::Elem rand_scalar(Rng& rng, const F& f) {
    if constexpr (std::is_same_v<F, PrimeFieldT>) {
        return f.from_int(rng.range(1, static_cast<int>(f.p - 1)));
    } else {
        int v = rng.range(-3, 3);
        if (v == 0) v = 1;
        return f.from_int(v);
    }
}

inline Monomial rand_monomial(Rng& rng, int nvars, int min_deg, int max_deg) {
    Monomial m(nvars);
    int deg = rng.range(min_deg, max_deg);
    for (int d = 0; d < deg; ++d) m.e[static_cast<std::size_t>(rng.range(0, nvars - 1))] += 1;
    return m;
}

// When `monomial_theme` is set every drawn polynomial is a single term, which
// keeps the instance inside the dimension-decidable class.
template <CoeffField F>
Poly<F> rand_poly(Rng& rng, const F& f, int nvars, int min_deg, int max_deg, int max_terms,
                  bool monomial_theme) {
    Poly<F> p(f, nvars);
    int terms = monomial_theme ? 1 : rng.range(1, max_terms);
    for (int t = 0; t < terms; ++t)
        p.add_term(rand_monomial(rng, nvars, min_deg, max_deg), rand_scalar(rng, f));
    if (p.is_zero()) p.add_term(rand_monomial(rng, nvars, min_deg, max_deg), f.one());
    return p;
}

template <CoeffField F>
std::vector<Poly<F>> rand_relations(Rng& rng, const GenParams<F>& params, int nvars,
                                    bool monomial_theme, int max_count) {
    std::vector<Poly<F>> rels;
    if (nvars == 0) return rels;
    int count = rng.range(0, max_count);
    for (int k = 0; k < count; ++k) {
        // mostly degree >= 2; linear parts show up now and then
        int min_deg = rng.chance(1, 6) ? 1 : 2;
        rels.push_back(rand_poly(rng, params.field, nvars, min_deg,
                                 std::max(2, params.max_gen_degree), 3, monomial_theme));
    }
    return rels;
}

template <CoeffField F>
LocalRingPres<F> rand_ring(Rng& rng, const GenParams<F>& params, bool monomial_theme, int level,
                           int max_vars = -1, int max_rels = -1) {
    if (max_vars < 0) max_vars = params.max_vars;
    if (max_rels < 0) max_rels = params.max_relations;
    int nvars = rng.chance(1, 20) ? 0 : rng.range(1, max_vars);
    auto rels = rand_relations(rng, params, nvars, monomial_theme, max_rels);
    return make_ring(params.field, var_names(level, nvars), std::move(rels), params.trunc_degree);
}

template <CoeffField F>
IdealPres<F> rand_ideal(Rng& rng, const GenParams<F>& params, const LocalRingPres<F>& ring,
                        bool monomial_theme, int min_deg = 1) {
    std::vector<Poly<F>> gens;
    if (ring.nvars() > 0 && !rng.chance(1, 10)) {
        int count = rng.range(1, params.max_ideal_gens);
        for (int k = 0; k < count; ++k)
            gens.push_back(rand_poly(rng, params.field, ring.nvars(), min_deg,
                                     std::max(min_deg, params.max_gen_degree), 3, monomial_theme));
    }
    return make_ideal(ring, std::move(gens));
}

template <CoeffField F>
std::vector<Poly<F>> rand_images(Rng& rng, const GenParams<F>& params, int src_nvars,
                                 int tgt_nvars, bool monomial_theme) {
    std::vector<Poly<F>> images;
    for (int i = 0; i < src_nvars; ++i) {
        if (tgt_nvars == 0) {
            images.push_back(Poly<F>::zero(params.field, 0));
        } else {
            images.push_back(rand_poly(rng, params.field, tgt_nvars, 1, 2, 2, monomial_theme));
        }
    }
    return images;
}

// Map whose target presentation absorbs the substituted source relations, so
// it is well defined by construction.
template <CoeffField F>
LocalMapPres<F> constructed_map(Rng& rng, const GenParams<F>& params, const LocalRingPres<F>& src,
                                bool monomial_theme, int level) {
    int tgt_nvars = rng.range(1, params.max_vars);
    auto images = rand_images(rng, params, src.nvars(), tgt_nvars, monomial_theme);
    JetContext ctx(tgt_nvars, params.trunc_degree);
    std::vector<Poly<F>> rels;
    for (const auto& r : src.relations) {
        Poly<F> s = substitute_trunc(r, images, ctx);
        if (!s.is_zero()) rels.push_back(std::move(s));
    }
    auto extra = rand_relations(rng, params, tgt_nvars, monomial_theme, 1);
    for (auto& r : extra) rels.push_back(std::move(r));
    LocalRingPres<F> tgt = make_ring(params.field, var_names(level, tgt_nvars), std::move(rels),
                                     params.trunc_degree);
    return make_map(src, tgt, images, params.trunc_degree);
}

// Rejection-sampled map between independently drawn rings. Exposed for its
// error contract; gen_instance itself always falls back to a constructive mode.
template <CoeffField F>
LocalMapPres<F> rejection_map(Rng& rng, const GenParams<F>& params, bool monomial_theme,
                              int max_tries) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        LocalRingPres<F> src = rand_ring(rng, params, monomial_theme, 0);
        LocalRingPres<F> tgt = rand_ring(rng, params, monomial_theme, 1);
        auto images = rand_images(rng, params, src.nvars(), tgt.nvars(), monomial_theme);
        try {
            return make_map(src, tgt, images, params.trunc_degree);
        } catch (const NotWellDefined&) {
            continue;
        }
    }
    throw GenerationExhausted("rejection_map: no well-defined map found");
}

template <CoeffField F>
LocalMapPres<F> rand_map_from(Rng& rng, const GenParams<F>& params, const LocalRingPres<F>& src,
                              bool monomial_theme, int level) {
    int mode = rng.range(1, 100);
    if (mode <= 35) {
        return quotient(src, rand_ideal(rng, params, src, monomial_theme)).projection;
    }
    if (mode <= 55 && src.nvars() < params.max_vars + 1) {
        int fresh = rng.range(1, 2);
        auto names = var_names(level, fresh);
        std::vector<std::string> suffixed;
        for (auto& n : names) suffixed.push_back(n + "_");
        return adjoin_variables(src, suffixed);
    }
    return constructed_map(rng, params, src, monomial_theme, level);
}

template <CoeffField F>
LocalMapPres<F> rand_map(Rng& rng, const GenParams<F>& params, bool monomial_theme) {
    int mode = rng.range(1, 100);
    if (mode <= 20) {
        LocalRingPres<F> a = rand_ring(rng, params, monomial_theme, 0);
        return quotient(a, rand_ideal(rng, params, a, monomial_theme)).projection;
    }
    if (mode <= 35) {
        LocalRingPres<F> a =
            rand_ring(rng, params, monomial_theme, 0, std::max(1, params.max_vars - 1));
        int fresh = rng.range(1, 2);
        return adjoin_variables(a, var_names(1, fresh));
    }
    if (mode <= 50) {
        // free source: any images are well defined
        LocalRingPres<F> a = make_ring(params.field, var_names(0, rng.range(1, params.max_vars)),
                                       {}, params.trunc_degree);
        LocalRingPres<F> b = rand_ring(rng, params, monomial_theme, 1);
        return make_map(a, b, rand_images(rng, params, a.nvars(), b.nvars(), monomial_theme),
                        params.trunc_degree);
    }
    if (mode <= 60) {
        try {
            return rejection_map(rng, params, monomial_theme, 20);
        } catch (const GenerationExhausted&) {
            // fall through to the constructive mode
        }
    }
    LocalRingPres<F> a = rand_ring(rng, params, monomial_theme, 0);
    return constructed_map(rng, params, a, monomial_theme, 1);
}

// Random invertible coordinate change of B with a validated inverse.
template <CoeffField F>
LocalMapPres<F> rand_coordinate_change(Rng& rng, const GenParams<F>& params,
                                       const LocalRingPres<F>& B) {
    const F& f = params.field;
    const int n = B.nvars();
    // unit lower-triangular times unit upper-triangular, always invertible
    Matrix<F> L = Matrix<F>::identity(f, n);
    Matrix<F> U = Matrix<F>::identity(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            if (rng.chance(1, 2)) L.at(i, j) = rand_scalar(rng, f);
            if (rng.chance(1, 2)) U.at(j, i) = rand_scalar(rng, f);
        }
    Matrix<F> M = L.mul(U);
    std::vector<Poly<F>> images;
    for (int i = 0; i < n; ++i) {
        Poly<F> p(f, n);
        for (int j = 0; j < n; ++j)
            if (!f.is_zero(M.at(i, j))) p.add_term(Monomial::var(n, j), M.at(i, j));
        if (rng.chance(1, 3)) p.add_term(rand_monomial(rng, n, 2, 2), rand_scalar(rng, f));
        images.push_back(std::move(p));
    }
    return make_isomorphism(B, images).fwd;
}

}  // namespace gen_detail

// Generate a validated random instance of the given shape. Generation is a
// pure function of params (including the seed).
template <CoeffField F>
Instance<F> gen_instance(const GenParams<F>& params, Shape shape) {
    using namespace gen_detail;
    Rng rng(params.seed);
    Instance<F> inst;
    inst.shape = shape;
    inst.seed = params.seed;
    bool monomial_theme = rng.chance(3, 5);

    switch (shape) {
        case Shape::Ring: {
            LocalRingPres<F> a = rand_ring(rng, params, monomial_theme, 0);
            // append an unused variable half the time: gives non-artinian rings
            if (rng.chance(1, 2) && a.nvars() < params.max_vars + 1) {
                std::vector<std::string> vars = a.vars;
                vars.push_back("f_");
                std::vector<int> var_map(static_cast<std::size_t>(a.nvars()));
                for (int i = 0; i < a.nvars(); ++i) var_map[static_cast<std::size_t>(i)] = i;
                std::vector<Poly<F>> rels;
                for (const auto& r : a.relations)
                    rels.push_back(reindex(r, static_cast<int>(vars.size()), var_map));
                a = make_ring(params.field, vars, std::move(rels), params.trunc_degree);
            }
            inst.ring = std::move(a);
            break;
        }
        case Shape::RingWithIdeal: {
            LocalRingPres<F> a = rand_ring(rng, params, monomial_theme, 0);
            inst.ideal = rand_ideal(rng, params, a, monomial_theme);
            inst.ring = std::move(a);
            break;
        }
        case Shape::Map: {
            LocalMapPres<F> phi = rand_map(rng, params, monomial_theme);
            inst.ring = phi.source;
            inst.ideal = rand_ideal(rng, params, phi.source, monomial_theme);
            inst.map = std::move(phi);
            break;
        }
        case Shape::ComposablePair: {
            LocalMapPres<F> phi = rand_map(rng, params, monomial_theme);
            LocalMapPres<F> psi = rand_map_from(rng, params, phi.target, monomial_theme, 2);
            inst.ring = phi.source;
            inst.ideal = rand_ideal(rng, params, phi.source, monomial_theme);
            inst.map = std::move(phi);
            inst.second_map = std::move(psi);
            break;
        }
        case Shape::QuotientSquare: {
            LocalMapPres<F> phi = rand_map(rng, params, monomial_theme);
            IdealPres<F> j = rand_ideal(rng, params, phi.source, monomial_theme);
            IdealPres<F> jb = extend_ideal(phi, j);
            auto qa = quotient(phi.source, j);
            auto qb = quotient(phi.target, jb);
            LocalMapPres<F> phi_j =
                make_map(qa.ring, qb.ring, phi.images, phi.verified_degree);
            Orientation o = rng.chance(1, 2) ? Orientation::Clockwise : Orientation::Anticlockwise;
            inst.diagram = make_square(phi, qb.projection, qa.projection, phi_j, o);
            inst.ring = phi.source;
            inst.ideal = rand_ideal(rng, params, phi.source, monomial_theme);
            inst.map = std::move(phi);
            break;
        }
        case Shape::FlatFamily: {
            monomial_theme = rng.chance(4, 5);
            LocalRingPres<F> a = rand_ring(rng, params, monomial_theme, 0,
                                           std::min(3, params.max_vars), 2);
            int fresh = rng.range(1, 2);
            LocalMapPres<F> adj = adjoin_variables(a, var_names(1, fresh));
            LocalMapPres<F> phi = adj;
            if (rng.chance(1, 3)) {
                LocalMapPres<F> iso = rand_coordinate_change(rng, params, adj.target);
                phi = compose(adj, iso);
            }
            inst.ring = a;
            inst.ideal = rand_ideal(rng, params, a, monomial_theme);
            inst.map = std::move(phi);
            break;
        }
        case Shape::SurjectionTriangle: {
            LocalRingPres<F> a = rand_ring(rng, params, monomial_theme, 0);
            IdealPres<F> i = rand_ideal(rng, params, a, monomial_theme);
            auto q = quotient(a, i);
            LocalMapPres<F> psi = rand_map_from(rng, params, q.ring, monomial_theme, 1);
            inst.ring = std::move(a);
            inst.ideal = std::move(i);
            inst.map = std::move(q.projection);
            inst.second_map = std::move(psi);
            break;
        }
    }
    return inst;
}

}  // namespace locreg
