#pragma once

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fields.hpp"
#include "monomial.hpp"

namespace locreg {

// Sparse multivariate polynomial over a coefficient field F. Terms are kept
// in descending graded-lex order with no zero coefficients stored.
template <CoeffField F>
class Poly {
  public:
    using Elem = typename F::Elem;
    using TermMap = std::map<Monomial, Elem, GrlexGreater>;

    Poly(F field, int nvars) : field_(field), nvars_(nvars) {}

    static Poly zero(F field, int nvars) { return Poly(field, nvars); }

    static Poly constant(F field, int nvars, Elem c) {
        Poly p(field, nvars);
        p.add_term(Monomial(nvars), c);
        return p;
    }

    static Poly variable(F field, int nvars, int i) {
        Poly p(field, nvars);
        p.add_term(Monomial::var(nvars, i), field.one());
        return p;
    }

    static Poly monomial(F field, int nvars, const Monomial& m, Elem c) {
        Poly p(field, nvars);
        p.add_term(m, c);
        return p;
    }

    const F& field() const { return field_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Elem& c) {
        if (m.nvars() != nvars_)
            throw ArityMismatch("add_term: monomial has " + std::to_string(m.nvars()) +
                                " variables, ambient has " + std::to_string(nvars_));
        if (field_.is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Elem constant_term() const {
        auto it = terms_.find(Monomial(nvars_));
        return it == terms_.end() ? field_.zero() : it->second;
    }

    bool has_zero_constant_term() const { return field_.is_zero(constant_term()); }

    // Smallest total degree among terms; -1 for the zero polynomial.
    int trailing_degree() const {
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.degree();
    }

    int total_degree() const {
        if (terms_.empty()) return -1;
        return terms_.begin()->first.degree();
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
        return r;
    }

    Poly operator-() const {
        Poly r(field_, nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
        return r;
    }

    Poly operator*(const Poly& o) const { return mul_bounded(o, -1); }

    Poly scaled(const Elem& c) const {
        Poly r(field_, nvars_);
        if (field_.is_zero(c)) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, field_.mul(k, c));
        return r;
    }

    // Product discarding all terms of total degree >= bound (bound < 0: keep all).
    Poly mul_bounded(const Poly& o, int bound) const {
        Poly r(field_, nvars_);
        for (const auto& [ma, ca] : terms_) {
            int da = ma.degree();
            if (bound >= 0 && da >= bound) continue;
            for (const auto& [mb, cb] : o.terms_) {
                if (bound >= 0 && da + mb.degree() >= bound) continue;
                r.add_term(ma * mb, field_.mul(ca, cb));
            }
        }
        return r;
    }

    // Drop all terms of total degree >= bound.
    Poly truncated(int bound) const {
        Poly r(field_, nvars_);
        for (const auto& [m, c] : terms_)
            if (m.degree() < bound) r.terms_.emplace(m, c);
        return r;
    }

    // Coefficient vector of the degree-1 terms. Requires zero constant term.
    std::vector<Elem> linear_part() const {
        if (!has_zero_constant_term())
            throw NonzeroConstantTerm("linear_part: polynomial has nonzero constant term");
        std::vector<Elem> v(static_cast<std::size_t>(nvars_), field_.zero());
        for (const auto& [m, c] : terms_) {
            if (m.degree() != 1) continue;
            for (int i = 0; i < nvars_; ++i)
                if (m.e[static_cast<std::size_t>(i)] == 1) v[static_cast<std::size_t>(i)] = c;
        }
        return v;
    }

    bool operator==(const Poly& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (!(a->first == b->first) || !field_.eq(a->second, b->second)) return false;
        return true;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = field_.str(c);
            bool negative = !cs.empty() && cs[0] == '-';
            if (first) {
                if (negative) s += "-", cs = cs.substr(1);
            } else {
                s += negative ? " - " : " + ";
                if (negative) cs = cs.substr(1);
            }
            first = false;
            std::string ms = monomial_str(m, names);
            if (ms.empty()) {
                s += cs;
            } else if (cs == "1") {
                s += ms;
            } else {
                s += cs + "*" + ms;
            }
        }
        return s;
    }

  private:
    F field_;
    int nvars_;
    TermMap terms_;
};

// Re-index a polynomial into an ambient with more variables; var_map[i] gives
// the new index of old variable i.
template <CoeffField F>
Poly<F> reindex(const Poly<F>& p, int new_nvars, const std::vector<int>& var_map) {
    Poly<F> r(p.field(), new_nvars);
    for (const auto& [m, c] : p.terms()) {
        Monomial nm(new_nvars);
        for (int i = 0; i < m.nvars(); ++i)
            if (m.e[static_cast<std::size_t>(i)] != 0)
                nm.e[static_cast<std::size_t>(var_map[static_cast<std::size_t>(i)])] +=
                    m.e[static_cast<std::size_t>(i)];
        r.add_term(nm, c);
    }
    return r;
}

}  // namespace locreg
