#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace locreg {

namespace detail {

// Rescale a row to keep entries small. For QQ: clear denominators, divide by
// integer content, make the leading entry positive. No-op over GF(p).
inline void normalize_row(const RationalField&, std::vector<BigRat>& row) {
    BigInt lcm_den = 1, gcd_num = 0;
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        BigInt den = denominator(x);
        lcm_den = lcm(lcm_den, den);
        gcd_num = gcd(gcd_num, numerator(x));
    }
    if (gcd_num == 0) return;
    BigRat scale(lcm_den, gcd_num);
    if (scale < 0) scale = -scale;
    for (auto& x : row)
        if (!x.is_zero()) x *= scale;
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        if (x < 0)
            for (auto& y : row) y = -y;
        break;
    }
}

inline void normalize_row(const PrimeFieldT&, std::vector<std::int64_t>&) {}

}  // namespace detail

// Dense matrix over an exact field.
template <CoeffField F>
struct Matrix {
    using Elem = typename F::Elem;

    F field;
    int nrows = 0;
    int ncols = 0;
    std::vector<std::vector<Elem>> rows;

    Matrix(F f, int r, int c)
        : field(f), nrows(r), ncols(c),
          rows(static_cast<std::size_t>(r),
               std::vector<Elem>(static_cast<std::size_t>(c), f.zero())) {}

    static Matrix identity(F f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    Elem& at(int r, int c) { return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const Elem& at(int r, int c) const {
        return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    Matrix mul(const Matrix& o) const {
        Matrix r(field, nrows, o.ncols);
        for (int i = 0; i < nrows; ++i)
            for (int k = 0; k < ncols; ++k) {
                if (field.is_zero(at(i, k))) continue;
                for (int j = 0; j < o.ncols; ++j)
                    r.at(i, j) = field.add(r.at(i, j), field.mul(at(i, k), o.at(k, j)));
            }
        return r;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        std::vector<Elem> r(static_cast<std::size_t>(nrows), field.zero());
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j)
                r[static_cast<std::size_t>(i)] =
                    field.add(r[static_cast<std::size_t>(i)],
                              field.mul(at(i, j), v[static_cast<std::size_t>(j)]));
        return r;
    }

    bool operator==(const Matrix& o) const {
        if (nrows != o.nrows || ncols != o.ncols) return false;
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j)
                if (!field.eq(at(i, j), o.at(i, j))) return false;
        return true;
    }
};

template <CoeffField F>
struct RrefResult {
    int rank;
    Matrix<F> reduced;
    std::vector<int> pivots;
};

// Deterministic Gauss-Jordan: scan columns left to right, pivot on the first
// row with a nonzero entry. Rows are re-normalized after every update.
template <CoeffField F>
RrefResult<F> rref(const Matrix<F>& m) {
    const F& f = m.field;
    Matrix<F> a = m;
    for (auto& row : a.rows) detail::normalize_row(f, row);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.ncols && r < a.nrows; ++c) {
        int sel = -1;
        for (int i = r; i < a.nrows; ++i)
            if (!f.is_zero(a.at(i, c))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a.rows[static_cast<std::size_t>(sel)], a.rows[static_cast<std::size_t>(r)]);
        for (int i = 0; i < a.nrows; ++i) {
            if (i == r || f.is_zero(a.at(i, c))) continue;
            typename F::Elem factor = f.div(a.at(i, c), a.at(r, c));
            for (int j = 0; j < a.ncols; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
            detail::normalize_row(f, a.rows[static_cast<std::size_t>(i)]);
        }
        pivots.push_back(c);
        ++r;
    }
    // scale pivot rows to leading one
    for (int i = 0; i < r; ++i) {
        typename F::Elem lead = a.at(i, pivots[static_cast<std::size_t>(i)]);
        for (int j = 0; j < a.ncols; ++j) a.at(i, j) = f.div(a.at(i, j), lead);
    }
    return {r, std::move(a), std::move(pivots)};
}

template <CoeffField F>
int rank(const Matrix<F>& m) {
    return rref(m).rank;
}

template <CoeffField F>
int kernel_dim(const Matrix<F>& m) {
    return m.ncols - rref(m).rank;
}

// Sparse vector: (index, coefficient) pairs sorted by index, no zeros.
template <CoeffField F>
using SparseVec = std::vector<std::pair<int, typename F::Elem>>;

template <CoeffField F>
SparseVec<F> to_sparse(const F& f, const std::vector<typename F::Elem>& dense) {
    SparseVec<F> v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!f.is_zero(dense[i])) v.emplace_back(static_cast<int>(i), dense[i]);
    return v;
}

template <CoeffField F>
std::vector<typename F::Elem> to_dense(const F& f, const SparseVec<F>& v, int dim) {
    std::vector<typename F::Elem> d(static_cast<std::size_t>(dim), f.zero());
    for (const auto& [i, c] : v) d[static_cast<std::size_t>(i)] = c;
    return d;
}

namespace detail {

// r -= c * s, sparse merge.
template <CoeffField F>
SparseVec<F> axpy(const F& f, const SparseVec<F>& r, const typename F::Elem& c,
                  const SparseVec<F>& s) {
    SparseVec<F> out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
        if (j >= s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.push_back(r[i++]);
        } else if (i >= r.size() || s[j].first < r[i].first) {
            out.emplace_back(s[j].first, f.neg(f.mul(c, s[j].second)));
            ++j;
        } else {
            typename F::Elem x = f.sub(r[i].second, f.mul(c, s[j].second));
            if (!f.is_zero(x)) out.emplace_back(r[i].first, x);
            ++i, ++j;
        }
    }
    return out;
}

}  // namespace detail

// Incremental row-echelon accumulator. Rows are kept with unit leading
// coefficient, keyed by pivot column; not back-eliminated (see Subspace for
// the canonical form). Insertion order does not affect the resulting span.
template <CoeffField F>
class SpanBuilder {
  public:
    SpanBuilder(F field, int ambient_dim) : field_(field), dim_(ambient_dim) {}

    const F& field() const { return field_; }
    int ambient_dim() const { return dim_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Reduce v by leading-term elimination; nonzero residual means v is new.
    SparseVec<F> reduce(SparseVec<F> v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end()) break;
            v = detail::axpy(field_, v, v.front().second, it->second);
        }
        return v;
    }

    bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

    // Returns true if the span grew.
    bool add(SparseVec<F> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        typename F::Elem lead = v.front().second;
        for (auto& [i, c] : v) c = field_.div(c, lead);
        int pivot = v.front().first;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    const std::map<int, SparseVec<F>>& echelon_rows() const { return rows_; }

  private:
    F field_;
    int dim_;
    std::map<int, SparseVec<F>> rows_;  // pivot column -> row
};

// A subspace of K^n in canonical reduced row-echelon form.
template <CoeffField F>
class Subspace {
  public:
    explicit Subspace(F field, int ambient_dim) : field_(field), ambient_(ambient_dim) {}

    static Subspace from_builder(const SpanBuilder<F>& b) {
        Subspace s(b.field(), b.ambient_dim());
        const F& f = b.field();
        // back-eliminate: process pivots from the right
        std::map<int, SparseVec<F>> reduced;
        for (auto it = b.echelon_rows().rbegin(); it != b.echelon_rows().rend(); ++it) {
            SparseVec<F> row = it->second;
            // eliminate later pivots from this row
            SparseVec<F> out;
            for (std::size_t k = 1; k < row.size();) {
                auto jt = reduced.find(row[k].first);
                if (jt != reduced.end()) {
                    row = detail::axpy(f, row, row[k].second, jt->second);
                    // restart scan past the pivot entry
                    k = 1;
                } else {
                    ++k;
                }
            }
            reduced.emplace(it->first, std::move(row));
        }
        s.rows_ = std::move(reduced);
        return s;
    }

    static Subspace span_of(const F& f, int ambient, const std::vector<SparseVec<F>>& vecs) {
        SpanBuilder<F> b(f, ambient);
        for (const auto& v : vecs) b.add(v);
        return from_builder(b);
    }

    const F& field() const { return field_; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Canonical residual of v modulo this subspace. Each elimination removes
    // one pivot entry and introduces only non-pivot entries, so this loops at
    // most dim() times.
    SparseVec<F> reduce(SparseVec<F> v) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [i, c] : v) {
                auto it = rows_.find(i);
                if (it != rows_.end()) {
                    v = detail::axpy(field_, v, c, it->second);
                    changed = true;
                    break;
                }
            }
        }
        return v;
    }

    bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

    std::vector<int> pivot_columns() const {
        std::vector<int> p;
        for (const auto& [piv, row] : rows_) p.push_back(piv);
        return p;
    }

    // Indices of standard basis vectors spanning a complement.
    std::vector<int> complement_columns() const {
        std::vector<int> out;
        auto piv = pivot_columns();
        std::size_t k = 0;
        for (int i = 0; i < ambient_; ++i) {
            if (k < piv.size() && piv[k] == i) {
                ++k;
            } else {
                out.push_back(i);
            }
        }
        return out;
    }

    // Basis rows as a dense RREF matrix (dim x ambient).
    Matrix<F> basis_matrix() const {
        Matrix<F> m(field_, dim(), ambient_);
        int r = 0;
        for (const auto& [piv, row] : rows_) {
            for (const auto& [i, c] : row) m.at(r, i) = c;
            ++r;
        }
        return m;
    }

    bool operator==(const Subspace& o) const {
        if (ambient_ != o.ambient_ || rows_.size() != o.rows_.size()) return false;
        auto a = rows_.begin();
        auto b = o.rows_.begin();
        for (; a != rows_.end(); ++a, ++b) {
            if (a->first != b->first || a->second.size() != b->second.size()) return false;
            for (std::size_t k = 0; k < a->second.size(); ++k)
                if (a->second[k].first != b->second[k].first ||
                    !field_.eq(a->second[k].second, b->second[k].second))
                    return false;
        }
        return true;
    }

  private:
    F field_;
    int ambient_;
    std::map<int, SparseVec<F>> rows_;
};

}  // namespace locreg
