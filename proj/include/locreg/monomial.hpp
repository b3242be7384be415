#pragma once

#include <numeric>
#include <string>
#include <vector>

namespace locreg {

// Exponent vector, one entry per ambient variable.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    static Monomial var(int nvars, int i, int exp = 1) {
        Monomial m(nvars);
        m.e[i] = exp;
        return m;
    }

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order with x1 > x2 > ... within a degree.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

inline std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[static_cast<std::size_t>(i)];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

// Number of monomials in n variables of total degree < N, i.e. C(n+N-1, n).
inline long long jet_dimension(int nvars, int trunc_degree) {
    long long r = 1;
    for (int i = 1; i <= nvars; ++i) r = r * (trunc_degree - 1 + i) / i;
    return r;
}

}  // namespace locreg
