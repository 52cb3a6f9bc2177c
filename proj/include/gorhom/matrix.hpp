#pragma once
// Dense matrices over an exact field, with deterministic Gauss-Jordan
// elimination: columns scanned left to right, pivot = first row with a
// nonzero entry, rows processed top-down. Same pivot choices on every run
// and in every backend, so all derived bases are reproducible.
#include <cstdint>
#include <optional>
#include <vector>

#include "gorhom/error.hpp"
#include "gorhom/field.hpp"

namespace gorhom {

namespace modp {
struct Echelon {
  long rank = 0;
  std::vector<long> pivots;
};
// In-place (reduced) row echelon form over F_p, row-major data.
// Fast lanes for small p; exact for any prime p < 2^31.
Echelon echelon_inplace(std::uint64_t* a, long rows, long cols, std::uint64_t p, bool reduced);
}  // namespace modp

template <class F>
struct Mat {
  using E = typename F::Elem;
  F fld;
  long rows = 0, cols = 0;
  std::vector<E> a;

  Mat() = default;
  Mat(F f, long r, long c) : fld(f), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, f.zero()) {}

  E& at(long r, long c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const E& at(long r, long c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static Mat identity(F f, long n) {
    Mat m(f, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  Mat transposed() const {
    Mat t(fld, cols, rows);
    for (long r = 0; r < rows; ++r)
      for (long c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Mat mul(const Mat& o) const {
    if (cols != o.rows) throw internal_error("matrix product shape mismatch");
    Mat out(fld, rows, o.cols);
    for (long r = 0; r < rows; ++r)
      for (long k = 0; k < cols; ++k) {
        const E& v = at(r, k);
        if (fld.is_zero(v)) continue;
        for (long c = 0; c < o.cols; ++c) {
          if (fld.is_zero(o.at(k, c))) continue;
          out.at(r, c) = fld.add(out.at(r, c), fld.mul(v, o.at(k, c)));
        }
      }
    return out;
  }

  std::vector<E> apply(const std::vector<E>& v) const {
    if (static_cast<long>(v.size()) != cols) throw internal_error("matrix apply shape mismatch");
    std::vector<E> out(rows, fld.zero());
    for (long r = 0; r < rows; ++r)
      for (long c = 0; c < cols; ++c)
        if (!fld.is_zero(at(r, c)) && !fld.is_zero(v[c]))
          out[r] = fld.add(out[r], fld.mul(at(r, c), v[c]));
    return out;
  }

  bool is_zero() const {
    for (const E& x : a)
      if (!fld.is_zero(x)) return false;
    return true;
  }

  std::vector<E> col(long c) const {
    std::vector<E> v(rows);
    for (long r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
  }
  void set_col(long c, const std::vector<E>& v) {
    for (long r = 0; r < rows; ++r) at(r, c) = v[r];
  }

  // columns of `o` appended on the right
  Mat hstack(const Mat& o) const {
    if (rows != o.rows) throw internal_error("hstack row mismatch");
    Mat out(fld, rows, cols + o.cols);
    for (long r = 0; r < rows; ++r) {
      for (long c = 0; c < cols; ++c) out.at(r, c) = at(r, c);
      for (long c = 0; c < o.cols; ++c) out.at(r, cols + c) = o.at(r, c);
    }
    return out;
  }

  bool operator==(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!fld.eq(a[i], o.a[i])) return false;
    return true;
  }
};

template <class F>
struct EchelonForm {
  long rank = 0;
  std::vector<long> pivot_cols;
  Mat<F> r;  // echelon form (reduced iff requested)
};

namespace detail {

template <class F>
EchelonForm<F> rref_generic(Mat<F> m, bool reduced) {
  const F& f = m.fld;
  EchelonForm<F> out;
  long pr = 0;
  for (long c = 0; c < m.cols && pr < m.rows; ++c) {
    long sel = -1;
    for (long r = pr; r < m.rows; ++r)
      if (!f.is_zero(m.at(r, c))) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != pr)
      for (long cc = 0; cc < m.cols; ++cc) std::swap(m.at(sel, cc), m.at(pr, cc));
    typename F::Elem piv_inv = f.inv(m.at(pr, c));
    for (long cc = c; cc < m.cols; ++cc)
      if (!f.is_zero(m.at(pr, cc))) m.at(pr, cc) = f.mul(m.at(pr, cc), piv_inv);
    long rfirst = reduced ? 0 : pr + 1;
    for (long r = rfirst; r < m.rows; ++r) {
      if (r == pr) continue;
      const typename F::Elem fac = m.at(r, c);
      if (f.is_zero(fac)) continue;
      for (long cc = c; cc < m.cols; ++cc) {
        if (f.is_zero(m.at(pr, cc))) continue;
        m.at(r, cc) = f.sub(m.at(r, cc), f.mul(fac, m.at(pr, cc)));
      }
    }
    out.pivot_cols.push_back(c);
    ++pr;
  }
  out.rank = pr;
  out.r = std::move(m);
  return out;
}

}  // namespace detail

template <class F>
EchelonForm<F> rref(const Mat<F>& m, bool reduced = true) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    Mat<PrimeField> copy = m;
    modp::Echelon e = modp::echelon_inplace(copy.a.data(), copy.rows, copy.cols, copy.fld.p, reduced);
    EchelonForm<PrimeField> out;
    out.rank = e.rank;
    out.pivot_cols = std::move(e.pivots);
    out.r = std::move(copy);
    return out;
  } else {
    return detail::rref_generic(m, reduced);
  }
}

// rank via non-reduced elimination (cheaper: no back-substitution)
template <class F>
long rank_of(const Mat<F>& m) {
  return rref(m, false).rank;
}

// Columns span ker(m). Basis vector per non-pivot column j: unit at j,
// minus the reduced-echelon coefficients at the pivot positions.
template <class F>
Mat<F> kernel_from_rref(const EchelonForm<F>& e, long cols) {
  const F& f = e.r.fld;
  long nullity = cols - e.rank;
  Mat<F> k(f, cols, nullity);
  std::vector<char> is_pivot(cols, 0);
  for (long c : e.pivot_cols) is_pivot[c] = 1;
  long out_c = 0;
  for (long j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    k.at(j, out_c) = f.one();
    for (long r = 0; r < e.rank; ++r) {
      const typename F::Elem& v = e.r.at(r, j);
      if (!f.is_zero(v)) k.at(e.pivot_cols[r], out_c) = f.neg(v);
    }
    ++out_c;
  }
  return k;
}

template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
  EchelonForm<F> e = rref(m, true);
  return kernel_from_rref(e, m.cols);
}

// Canonical basis of the column space: reduced row-space basis of the
// transpose, returned as columns. Deterministic, so repeated runs and
// different callers agree on the same basis.
template <class F>
Mat<F> column_space_basis(const Mat<F>& m) {
  EchelonForm<F> e = rref(m.transposed(), true);
  Mat<F> b(m.fld, m.rows, e.rank);
  for (long j = 0; j < e.rank; ++j)
    for (long r = 0; r < m.rows; ++r) b.at(r, j) = e.r.at(j, r);
  return b;
}

// Repeated membership / coordinate queries against a fixed spanning matrix b.
// Stores rref([b | I]); then b x = v iff the transformed v is supported on
// the pivot rows, and x reads off there.
template <class F>
struct SpanSolver {
  using E = typename F::Elem;
  F fld;
  long n = 0, k = 0;  // b is n x k
  long rank = 0;
  std::vector<long> pivot_cols;
  Mat<F> rb;  // n x k reduced echelon of b
  Mat<F> t;   // n x n transform with rb = t * b

  explicit SpanSolver(const Mat<F>& b) : fld(b.fld), n(b.rows), k(b.cols) {
    Mat<F> aug = b.hstack(Mat<F>::identity(fld, n));
    EchelonForm<F> e = rref(aug, true);
    // pivots beyond column k would live in the identity block; those rows are
    // the complement of the span and carry no pivot of b
    rank = 0;
    rb = Mat<F>(fld, n, k);
    t = Mat<F>(fld, n, n);
    for (long r = 0; r < n; ++r) {
      for (long c = 0; c < k; ++c) rb.at(r, c) = e.r.at(r, c);
      for (long c = 0; c < n; ++c) t.at(r, c) = e.r.at(r, k + c);
    }
    for (long c : e.pivot_cols)
      if (c < k) { pivot_cols.push_back(c); ++rank; }
  }

  // coordinates x with b x = v, or nullopt if v is outside the span
  std::optional<std::vector<E>> coords(const std::vector<E>& v) const {
    std::vector<E> w = t.apply(v);
    for (long r = rank; r < n; ++r)
      if (!fld.is_zero(w[r])) return std::nullopt;
    std::vector<E> x(k, fld.zero());
    for (long r = 0; r < rank; ++r) x[pivot_cols[r]] = w[r];
    return x;
  }

  bool contains(const std::vector<E>& v) const { return coords(v).has_value(); }
};

}  // namespace gorhom
