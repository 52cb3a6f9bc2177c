#pragma once
// Minimal graded free resolutions by degreewise elimination. Each step
// extracts minimal generators of the current kernel (new generators at
// degree d are kernel vectors outside the span of variable times the
// degree d-1 kernel), then recomputes kernels one degree window further.
// Everything is certified by explicit rank computations; no step relies on
// the resolution being linear or pure.
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gorhom/module.hpp"

namespace gorhom {

struct BettiTable {
  // rows[i] maps internal degree j to the generator count of F_i there
  std::vector<std::map<int, long>> rows;

  long at(std::size_t i, int j) const {
    if (i >= rows.size()) return 0;
    auto it = rows[i].find(j);
    return it == rows[i].end() ? 0 : it->second;
  }
  long total(std::size_t i) const {
    if (i >= rows.size()) return 0;
    long t = 0;
    for (const auto& [j, b] : rows[i]) t += b;
    return t;
  }
  std::vector<long> totals() const {
    std::vector<long> out;
    for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(total(i));
    return out;
  }
};

template <class F>
struct FreeResolution {
  std::vector<std::vector<int>> gen_degs;  // generator degrees of F_i, ascending
  std::vector<PolyMat<F>> maps;            // maps[i]: F_{i+1} -> F_i
  bool exhausted = false;                  // the last computed kernel was zero

  BettiTable betti() const {
    BettiTable t;
    for (const auto& gs : gen_degs) {
      t.rows.emplace_back();
      for (int g : gs) ++t.rows.back()[g];
    }
    return t;
  }
};

namespace detail {

// Refuses an elimination before anything is allocated. The cell count bounds
// the memory footprint; cells times the short side estimates the work, which
// is what actually explodes under exact arithmetic.
inline void guard_cells(long rows, long cols, long max_cells, int degree, const char* what) {
  if (rows <= 0 || cols <= 0) return;
  double cells = static_cast<double>(rows) * static_cast<double>(cols);
  double ops = cells * static_cast<double>(std::min(rows, cols));
  if (cells > static_cast<double>(max_cells) || ops > 50.0 * static_cast<double>(max_cells))
    throw input_error(std::string(what) + " at degree " + std::to_string(degree) + " needs a " +
                      std::to_string(rows) + " x " + std::to_string(cols) +
                      " elimination; reduce the resolution length");
}

// polynomial with coefficients `coords` over the degree-e coset basis
template <class F>
Poly<F> coset_poly(const GradedAlgebra<F>& A, int e, const typename F::Elem* coords) {
  Poly<F> out;
  if (e < 0 || e > A.top) return out;
  for (long i = 0; i < A.dim_at(e); ++i)
    if (!A.fld.is_zero(coords[i]))
      out.t.push_back({A.basis[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)], coords[i]});
  return out;  // basis order is already the polynomial term order
}

// apply a monomial to one vector, walking the action matrices
template <class F>
std::vector<typename F::Elem> module_mono_vec(const GradedModule<F>& M, const Mono& m, int d,
                                              std::vector<typename F::Elem> w) {
  int at = d;
  for (std::size_t v = 0; v < m.size(); ++v)
    for (int k = 0; k < m[v]; ++k) {
      w = M.act_at(static_cast<long>(v), at).apply(w);
      ++at;
    }
  return w;
}

// Minimal generators of a degreewise family of kernel subspaces K inside the
// free module on G, returned as the next map of the resolution. K[d-lo] has
// the kernel basis at degree d in its columns.
template <class F>
PolyMat<F> extract_syzygies(const GradedAlgebra<F>& A, const std::vector<int>& G, int lo, int hi,
                            const std::vector<Mat<F>>& K, long max_cells) {
  std::vector<int> gdegs;
  std::vector<std::vector<typename F::Elem>> gvecs;
  for (int d = lo; d <= hi; ++d) {
    const Mat<F>& kd = K[static_cast<std::size_t>(d - lo)];
    if (kd.cols == 0) continue;
    long prev_cols = d - 1 >= lo ? K[static_cast<std::size_t>(d - 1 - lo)].cols : 0;
    guard_cells(kd.rows, A.nvars() * prev_cols + kd.cols, max_cells, d, "syzygy extraction");
    Mat<F> span(A.fld, kd.rows, 0);
    if (prev_cols > 0) {
      const Mat<F>& prev = K[static_cast<std::size_t>(d - 1 - lo)];
      span = Mat<F>(A.fld, kd.rows, A.nvars() * prev.cols);
      long co = 0;
      for (long v = 0; v < A.nvars(); ++v) {
        Mat<F> img = free_var_act(A, G, v, d - 1).mul(prev);
        for (long c = 0; c < img.cols; ++c, ++co)
          for (long r = 0; r < img.rows; ++r) span.at(r, co) = img.at(r, c);
      }
    }
    EchelonForm<F> ech = rref(span.hstack(kd), false);
    for (long p : ech.pivot_cols)
      if (p >= span.cols) {
        gdegs.push_back(d);
        gvecs.push_back(kd.col(p - span.cols));
      }
  }
  PolyMat<F> m = PolyMat<F>::make(G, gdegs);
  for (long c = 0; c < m.cols(); ++c) {
    int d = m.col_degs[static_cast<std::size_t>(c)];
    auto off = free_offsets(A, G, d);
    for (long r = 0; r < m.rows(); ++r)
      m.at(r, c) = coset_poly(A, d - G[static_cast<std::size_t>(r)],
                              gvecs[static_cast<std::size_t>(c)].data() + off[static_cast<std::size_t>(r)]);
  }
  return m;
}

// degreewise kernels of a free-module map over the full source window
template <class F>
std::vector<Mat<F>> kernel_slices(const GradedAlgebra<F>& A, const PolyMat<F>& m, int lo, int hi,
                                  long max_cells) {
  std::vector<Mat<F>> out;
  for (int d = lo; d <= hi; ++d) {
    long rows = free_dim_at(A, m.row_degs, d);
    long cols = free_dim_at(A, m.col_degs, d);
    guard_cells(rows, cols, max_cells, d, "kernel computation");
    out.push_back(kernel_basis(m.block(A, d)));
  }
  return out;
}

}  // namespace detail

// Minimal free resolution of M, carried `steps` homological degrees out:
// gen_degs[0..steps] are all computed (gen_degs[i] lists the degrees of the
// b_i generators) unless the kernel runs out first.
template <class F>
FreeResolution<F> minimal_free_resolution(const GradedModule<F>& M, int steps,
                                          long max_cells = 40000000L) {
  const GradedAlgebra<F>& A = *M.alg;
  FreeResolution<F> res;
  if (steps < 0) throw input_error("resolution length must be nonnegative");

  // generators of M itself: complements of the span of m*M, degree by degree
  std::vector<int> G0;
  std::vector<std::pair<int, long>> gen_coords;  // degree, coordinate index
  for (int d = M.lo; d <= M.hi; ++d) {
    long dim = M.dim_at(d);
    if (dim == 0) continue;
    Mat<F> span(A.fld, dim, A.nvars() * M.dim_at(d - 1));
    long co = 0;
    for (long v = 0; v < A.nvars(); ++v) {
      Mat<F> a = M.act_at(v, d - 1);
      for (long c = 0; c < a.cols; ++c, ++co)
        for (long r = 0; r < a.rows; ++r) span.at(r, co) = a.at(r, c);
    }
    EchelonForm<F> ech = rref(span.hstack(Mat<F>::identity(A.fld, dim)), false);
    for (long p : ech.pivot_cols)
      if (p >= span.cols) {
        G0.push_back(d);
        gen_coords.emplace_back(d, p - span.cols);
      }
  }
  res.gen_degs.push_back(G0);
  if (G0.empty()) {
    res.exhausted = true;
    return res;
  }

  // the cover F_0 -> M, degree by degree, and its kernel
  auto [glo, ghi] = detail::gen_window(G0, A.top);
  std::vector<Mat<F>> K;
  for (int d = glo; d <= ghi; ++d) {
    long fdim = free_dim_at(A, G0, d);
    detail::guard_cells(M.dim_at(d), fdim, max_cells, d, "kernel computation");
    Mat<F> pi(A.fld, M.dim_at(d), fdim);
    auto off = free_offsets(A, G0, d);
    for (std::size_t j = 0; j < G0.size(); ++j) {
      int g = G0[j];
      int e = d - g;
      if (e < 0 || e > A.top) continue;
      std::vector<typename F::Elem> unit(static_cast<std::size_t>(M.dim_at(g)), A.fld.zero());
      unit[static_cast<std::size_t>(gen_coords[j].second)] = A.fld.one();
      for (long i = 0; i < A.dim_at(e); ++i) {
        auto w = detail::module_mono_vec(
            M, A.basis[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)], g, unit);
        pi.set_col(off[j] + i, w);
      }
    }
    K.push_back(kernel_basis(pi));
  }

  std::vector<int> G = G0;
  int lo = glo, hi = ghi;
  for (int i = 1; i <= steps; ++i) {
    PolyMat<F> d_i = detail::extract_syzygies(A, G, lo, hi, K, max_cells);
    if (d_i.cols() == 0) {
      res.exhausted = true;
      return res;
    }
    res.maps.push_back(d_i);
    res.gen_degs.push_back(d_i.col_degs);
    if (i == steps) break;
    G = d_i.col_degs;
    std::tie(lo, hi) = detail::gen_window(G, A.top);
    K = detail::kernel_slices(A, d_i, lo, hi, max_cells);
  }
  return res;
}

// first two terms of the resolution as a presentation matrix; a free module
// yields a presentation with no columns
template <class F>
PolyMat<F> presentation_of(const GradedModule<F>& M, long max_cells = 40000000L) {
  FreeResolution<F> r = minimal_free_resolution(M, 1, max_cells);
  if (r.maps.empty()) return PolyMat<F>::make(r.gen_degs[0], {});
  return r.maps[0];
}

// every generator of F_i sits in degree first_degree + i
inline bool resolution_is_linear(const BettiTable& t, int first_degree) {
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (const auto& [j, b] : t.rows[i])
      if (b != 0 && j != first_degree + static_cast<int>(i)) return false;
  return true;
}

// no nonzero entry of degree zero anywhere (units would cancel generators)
template <class F>
bool map_is_minimal(const PolyMat<F>& m) {
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero() && m.col_degs[static_cast<std::size_t>(c)] ==
                                       m.row_degs[static_cast<std::size_t>(r)])
        return false;
  return true;
}

template <class F>
bool resolution_is_minimal(const FreeResolution<F>& r) {
  for (const auto& m : r.maps)
    if (!map_is_minimal(m)) return false;
  return true;
}

// g then f compose to zero, checked on every degree slice of g's source
template <class F>
bool composes_to_zero(const GradedAlgebra<F>& A, const PolyMat<F>& f, const PolyMat<F>& g) {
  if (f.col_degs != g.row_degs) throw input_error("maps are not composable");
  if (g.col_degs.empty()) return true;
  auto [lo, hi] = detail::gen_window(g.col_degs, A.top);
  for (int d = lo; d <= hi; ++d)
    if (!f.block(A, d).mul(g.block(A, d)).is_zero()) return false;
  return true;
}

// im(g) = ker(f) on every degree slice of the shared middle module
template <class F>
bool exact_at(const GradedAlgebra<F>& A, const PolyMat<F>& f, const PolyMat<F>& g) {
  if (!composes_to_zero(A, f, g)) return false;
  auto [lo, hi] = detail::gen_window(f.col_degs, A.top);
  for (int d = lo; d <= hi; ++d) {
    Mat<F> fb = f.block(A, d);
    long nullity = fb.cols - rank_of(fb);
    if (nullity != rank_of(g.block(A, d))) return false;
  }
  return true;
}

// power series num/den to `terms` coefficients; den must start with a unit
inline std::vector<long long> series_expand(const std::vector<long long>& num,
                                            const std::vector<long long>& den, int terms) {
  if (den.empty() || (den[0] != 1 && den[0] != -1))
    throw input_error("series denominator must start with 1 or -1");
  std::vector<long long> c(static_cast<std::size_t>(terms), 0);
  for (int k = 0; k < terms; ++k) {
    long long acc = k < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(k)] : 0;
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
      acc -= den[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = den[0] == 1 ? acc : -acc;
  }
  return c;
}

}  // namespace gorhom
