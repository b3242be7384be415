#pragma once

#include <map>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace locreg {

// Truncation context: the monomial basis of K[x1..xn]/(x)^N, ascending
// graded-lex, with index lookup. Index 0 is the constant monomial.
class JetContext {
  public:
    JetContext(int nvars, int trunc_degree) : nvars_(nvars), trunc_degree_(trunc_degree) {
        if (trunc_degree < 2) throw Error("truncation degree must be >= 2");
        Monomial m(nvars);
        gather(m, 0, trunc_degree - 1);
        std::sort(basis_.begin(), basis_.end(), GrlexLess{});
        for (std::size_t i = 0; i < basis_.size(); ++i)
            index_.emplace(basis_[i], static_cast<int>(i));
    }

    int nvars() const { return nvars_; }
    int trunc_degree() const { return trunc_degree_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Monomial>& basis() const { return basis_; }

    int index_of(const Monomial& m) const { return index_.at(m); }

  private:
    void gather(Monomial& m, int var, int remaining) {
        if (var == nvars_) {
            basis_.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m.e[static_cast<std::size_t>(var)] = e;
            gather(m, var + 1, remaining - e);
        }
        m.e[static_cast<std::size_t>(var)] = 0;
    }

    int nvars_;
    int trunc_degree_;
    std::vector<Monomial> basis_;
    std::map<Monomial, int, GrlexLess> index_;
};

template <CoeffField F>
Poly<F> mul_trunc(const Poly<F>& p, const Poly<F>& q, const JetContext& ctx) {
    return p.mul_bounded(q, ctx.trunc_degree());
}

// Jet vector of p (coefficients on the ctx basis, degree->=N terms dropped).
template <CoeffField F>
SparseVec<F> jet_vector(const Poly<F>& p, const JetContext& ctx) {
    std::vector<std::pair<int, typename F::Elem>> v;
    for (const auto& [m, c] : p.terms())
        if (m.degree() < ctx.trunc_degree()) v.emplace_back(ctx.index_of(m), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

// Evaluate p at the given images, truncated at ctx.trunc_degree(). Images must
// have zero constant term, so the truncated result agrees with the exact
// substitution modulo (target vars)^N.
template <CoeffField F>
Poly<F> substitute_trunc(const Poly<F>& p, const std::vector<Poly<F>>& images,
                         const JetContext& ctx) {
    const F& f = p.field();
    if (static_cast<int>(images.size()) != p.nvars())
        throw ArityMismatch("substitute_trunc: expected " + std::to_string(p.nvars()) +
                            " images, got " + std::to_string(images.size()));
    for (const auto& im : images)
        if (!im.has_zero_constant_term())
            throw NonlocalImage("substitute_trunc: image has nonzero constant term");
    const int N = ctx.trunc_degree();
    const int tn = ctx.nvars();

    // power cache per source variable
    std::vector<std::vector<Poly<F>>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const Poly<F>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly<F>::constant(f, tn, f.one()));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back().mul_bounded(images[i], N));
        return cache[static_cast<std::size_t>(e)];
    };

    Poly<F> result(f, tn);
    for (const auto& [m, c] : p.terms()) {
        // images lie in the maximal ideal, so a term of degree >= N vanishes
        if (m.degree() >= N) continue;
        Poly<F> term = Poly<F>::constant(f, tn, c);
        for (int i = 0; i < m.nvars(); ++i) {
            int e = m.e[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            term = term.mul_bounded(power(static_cast<std::size_t>(i), e), N);
            if (term.is_zero()) break;
        }
        result = result + term;
    }
    return result;
}

// Span of {monomial * g : g in gens, deg(monomial) + trail(g) < N} inside the
// jet algebra. Membership in the span decides p in (gens) + (x)^N.
template <CoeffField F>
SpanBuilder<F> jet_ideal_span_builder(const F& f, const std::vector<Poly<F>>& gens,
                                      const JetContext& ctx) {
    SpanBuilder<F> b(f, ctx.dim());
    const int N = ctx.trunc_degree();
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.has_zero_constant_term())
            throw NonzeroConstantTerm("jet_ideal_span: generator has nonzero constant term");
        int trail = g.trailing_degree();
        for (const auto& u : ctx.basis()) {
            if (u.degree() + trail >= N) continue;
            Poly<F> mult = Poly<F>::monomial(f, ctx.nvars(), u, f.one());
            b.add(jet_vector(mult.mul_bounded(g, N), ctx));
        }
    }
    return b;
}

template <CoeffField F>
Subspace<F> jet_ideal_span(const F& f, const std::vector<Poly<F>>& gens, const JetContext& ctx) {
    return Subspace<F>::from_builder(jet_ideal_span_builder(f, gens, ctx));
}

// Truncated implicit function theorem: given g with unit coefficient on
// variable j, produce h free of x_j with g(x_j <- h) == 0 mod (vars)^N.
// Fixed-point iteration x_j <- x_j - g/c gains one correct degree per round.
template <CoeffField F>
Poly<F> implicit_eliminate(const Poly<F>& g, int var_index, const JetContext& ctx) {
    const F& f = g.field();
    if (!g.has_zero_constant_term())
        throw NonzeroConstantTerm("implicit_eliminate: relation has nonzero constant term");
    auto lin = g.linear_part();
    typename F::Elem c = lin[static_cast<std::size_t>(var_index)];
    if (f.is_zero(c))
        throw NotEliminable("implicit_eliminate: variable has zero linear coefficient");
    const int N = ctx.trunc_degree();
    const int n = g.nvars();

    // identity images except at var_index
    std::vector<Poly<F>> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images.push_back(Poly<F>::variable(f, n, i));

    Poly<F> h = Poly<F>::zero(f, n);
    typename F::Elem cinv = f.inv(c);
    for (int round = 0; round <= N; ++round) {
        images[static_cast<std::size_t>(var_index)] = h;
        Poly<F> residual = substitute_trunc(g, images, ctx);
        Poly<F> next = h - residual.scaled(cinv);
        if (next == h) break;
        h = next;
    }
    images[static_cast<std::size_t>(var_index)] = h;
    if (!substitute_trunc(g, images, ctx).is_zero())
        throw InternalInconsistency("implicit_eliminate: fixed point did not converge");
    return h;
}

}  // namespace locreg
