#ifndef TROPLEX_POLYMATRIX_HPP
#define TROPLEX_POLYMATRIX_HPP

// Dense matrices over Laurent polynomials, over a coefficient field, and
// over Z (Hermite / Smith forms for abelianizations).

#include "troplex/laurent.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace troplex {

class PolyMatrix {
 public:
  PolyMatrix(CoefficientRing ring, std::size_t nvars, std::size_t rows, std::size_t cols)
      : ring_(ring), nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, LaurentPoly(ring, nvars)) {}

  static PolyMatrix identity(CoefficientRing ring, std::size_t nvars, std::size_t n) {
    PolyMatrix m(ring, nvars, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::one(ring, nvars);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const CoefficientRing& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& f) { return f.is_zero(); });
  }
  bool operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw AlgebraError("matrix shape mismatch in product");
    PolyMatrix r(a.ring_, a.nvars_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AlgebraError("matrix shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  PolyMatrix transposed() const {
    PolyMatrix t(ring_, nvars_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  PolyMatrix submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
    PolyMatrix s(ring_, nvars_, ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j) s(i, j) = (*this)(ri[i], ci[j]);
    return s;
  }

  /// Copies a block into position (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  PolyMatrix map(const std::function<LaurentPoly(const LaurentPoly&)>& fn, CoefficientRing ring) const {
    PolyMatrix r(ring, nvars_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fn(data_[i]);
    return r;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
      s += "]\n";
    }
    return s;
  }

 private:
  CoefficientRing ring_;
  std::size_t nvars_, rows_, cols_;
  std::vector<LaurentPoly> data_;
};

inline PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(a.ring(), a.nvars(), a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

inline PolyMatrix change_ring(const PolyMatrix& m, CoefficientRing target) {
  return m.map([&](const LaurentPoly& f) { return change_ring(f, target); }, target);
}

namespace detail {

inline std::size_t cheapest_pivot_row(const PolyMatrix& a, std::size_t k, std::size_t col) {
  std::size_t best = a.rows();
  for (std::size_t i = k; i < a.rows(); ++i)
    if (!a(i, col).is_zero() && (best == a.rows() || a(i, col).num_terms() < a(best, col).num_terms())) best = i;
  return best;
}

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination.
inline LaurentPoly determinant(PolyMatrix a) {
  if (a.rows() != a.cols()) throw AlgebraError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return LaurentPoly::one(a.ring(), a.nvars());
  LaurentPoly prev = LaurentPoly::one(a.ring(), a.nvars());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = detail::cheapest_pivot_row(a, k, k);
    if (p == n) return LaurentPoly::zero(a.ring(), a.nvars());
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = divexact(v, prev);
      }
    }
    prev = a(k, k);
  }
  LaurentPoly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

/// Rank over the fraction field of the Laurent ring (symbolic, exact).
inline std::size_t generic_rank(PolyMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  LaurentPoly prev = LaurentPoly::one(a.ring(), a.nvars());
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    // full pivoting: any nonzero entry of the trailing block
    std::size_t pi = m, pj = n;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (!a(i, j).is_zero() && (pi == m || a(i, j).num_terms() < a(pi, pj).num_terms())) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(pi, j), a(k, j));
    for (std::size_t i = 0; i < m; ++i) std::swap(a(i, pj), a(i, k));
    for (std::size_t i = k + 1; i < m; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = divexact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    for (std::size_t i = k + 1; i < m; ++i) a(i, k) = LaurentPoly::zero(a.ring(), a.nvars());
    prev = a(k, k);
    ++rank;
  }
  return rank;
}

/// Calls fn on every k-subset of {0..n-1} in lexicographic order; fn returns
/// false to stop.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// All nonzero k x k minors, as deduplicated canonical associates in a
/// deterministic order.  k = 0 gives [1].
inline std::vector<LaurentPoly> minors(const PolyMatrix& m, std::size_t k) {
  if (k > std::min(m.rows(), m.cols())) throw AlgebraError("minor size out of range");
  std::vector<LaurentPoly> out;
  std::set<std::string> seen;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& ri) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& ci) {
      LaurentPoly d = determinant(m.submatrix(ri, ci));
      if (!d.is_zero()) {
        LaurentPoly c = canonical_associate(d);
        if (seen.insert(c.str()).second) out.push_back(std::move(c));
      }
      return true;
    });
    return true;
  });
  return out;
}

/// gcd of all k x k minors, with early exit once the running gcd is a unit.
/// std::nullopt when every minor vanishes.
inline std::optional<LaurentPoly> minors_gcd(const PolyMatrix& m, std::size_t k) {
  if (k > std::min(m.rows(), m.cols())) return std::nullopt;
  if (k == 0) return LaurentPoly::one(m.ring(), m.nvars());
  if (generic_rank(m) < k) return std::nullopt;
  std::optional<LaurentPoly> acc;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& ri) {
    bool go = true;
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& ci) {
      LaurentPoly d = determinant(m.submatrix(ri, ci));
      if (!d.is_zero()) acc = acc ? laurent_gcd(*acc, d) : canonical_associate(d);
      go = !(acc && is_unit(*acc));
      return go;
    });
    return go;
  });
  return acc;
}

/// Matrix with entries in a field given by a CoefficientRing (Q or F_p).
class FieldMatrix {
 public:
  FieldMatrix(CoefficientRing field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {
    if (!field.is_field()) throw AlgebraError("FieldMatrix needs a field");
  }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rank() const {
    std::vector<Rational> a = data_;
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * cols_ + j]; };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && at(p, c) == 0) ++p;
      if (p == rows_) continue;
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
      Rational inv = field_.inverse(at(r, c));
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (at(i, c) == 0) continue;
        Rational f = field_.mul(at(i, c), inv);
        for (std::size_t j = c; j < cols_; ++j) at(i, j) = field_.sub(at(i, j), field_.mul(f, at(r, j)));
      }
      ++r;
    }
    return r;
  }

 private:
  CoefficientRing field_;
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Specializes every entry at a point of the torus (nonzero coordinates).
inline FieldMatrix evaluate(const PolyMatrix& m, const std::vector<Rational>& point) {
  CoefficientRing field = m.ring().is_integers() ? CoefficientRing::rationals() : m.ring();
  FieldMatrix r(field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = field.normalize(m(i, j).evaluate(point));
  return r;
}

// ---------------------------------------------------------------------------
// Integer matrices

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix int_transpose(const IntMatrix& a, std::size_t cols) {
  IntMatrix t(cols, std::vector<Integer>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

/// Row Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot).  Zero rows are dropped.
inline IntMatrix hermite_rows(IntMatrix a, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    while (true) {
      std::size_t p = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 && (p == a.size() || abs_int(a[i][c]) < abs_int(a[p][c]))) p = i;
      if (p == a.size()) break;
      std::swap(a[p], a[r]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < a.size() && a[r][c] != 0) {
      if (a[r][c] < 0)
        for (auto& x : a[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
      }
      ++r;
    }
  }
  a.resize(r);
  return a;
}

/// Basis of {v in Z^n : E v = 0}, returned as the rows of a Hermite form.
inline IntMatrix integer_kernel(const IntMatrix& e, std::size_t n) {
  // Column operations on [E; I] until E is in column echelon form.
  IntMatrix a = e;
  IntMatrix u(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : a) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  std::size_t pc = 0;
  for (std::size_t r = 0; r < a.size() && pc < n; ++r) {
    while (true) {
      std::size_t p = n;
      for (std::size_t j = pc; j < n; ++j)
        if (a[r][j] != 0 && (p == n || abs_int(a[r][j]) < abs_int(a[r][p]))) p = j;
      if (p == n) break;
      col_swap(p, pc);
      bool clean = true;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (a[r][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][pc].get_mpz_t());
        col_op(j, pc, q);
        if (a[r][j] != 0) clean = false;
      }
      if (clean) {
        ++pc;
        break;
      }
    }
  }
  IntMatrix basis;
  for (std::size_t j = pc; j < n; ++j) {
    std::vector<Integer> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i][j];
    basis.push_back(std::move(v));
  }
  return hermite_rows(basis, n);
}

/// Nonzero Smith invariants d_1 | d_2 | ... (positive).
inline std::vector<Integer> smith_invariants(IntMatrix a, std::size_t cols) {
  const std::size_t m = a.size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(m, cols); ++t) {
    // bring the smallest nonzero entry of the trailing block to (t,t)
    while (true) {
      std::size_t pi = m, pj = cols;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == m || abs_int(a[i][j]) < abs_int(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) goto done;
      std::swap(a[pi], a[t]);
      for (auto& row : a) std::swap(row[pj], row[t]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the whole trailing block
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    diag.push_back(abs_int(a[t][t]));
  }
done:
  return diag;
}

}  // namespace troplex

#endif  // TROPLEX_POLYMATRIX_HPP
