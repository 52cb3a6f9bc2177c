#pragma once
// Explicit graded modules over a GradedAlgebra: finite windows of graded
// vector spaces plus one action matrix per variable per degree. Modules are
// realized from maps between free modules (kernel / image / cokernel),
// cyclic quotients, direct sums, and the two duals.
#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorhom/algebra.hpp"
#include "gorhom/matrix.hpp"

namespace gorhom {

// ---------------------------------------------------------------- free data
// A free module is just its generator degree list: F = sum_j A(-g_j).
template <class F>
long free_dim_at(const GradedAlgebra<F>& A, const std::vector<int>& gens, int d) {
  long t = 0;
  for (int g : gens) t += A.dim_at(d - g);
  return t;
}

template <class F>
std::vector<long> free_offsets(const GradedAlgebra<F>& A, const std::vector<int>& gens, int d) {
  std::vector<long> off(gens.size() + 1, 0);
  for (std::size_t j = 0; j < gens.size(); ++j) off[j + 1] = off[j] + A.dim_at(d - gens[j]);
  return off;
}

template <class F>
Mat<F> free_var_act(const GradedAlgebra<F>& A, const std::vector<int>& gens, long v, int d) {
  Mat<F> out(A.fld, free_dim_at(A, gens, d + 1), free_dim_at(A, gens, d));
  auto src = free_offsets(A, gens, d);
  auto tgt = free_offsets(A, gens, d + 1);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    int e = d - gens[j];
    if (e < 0 || e > A.top) continue;
    const Mat<F>& blk = A.var_act[v][e];
    for (long r = 0; r < blk.rows; ++r)
      for (long c = 0; c < blk.cols; ++c) out.at(tgt[j] + r, src[j] + c) = blk.at(r, c);
  }
  return out;
}

// --------------------------------------------------------------- poly matrix
// A map between free modules written with polynomial entries. Entry (r,c)
// must be homogeneous of degree col_degs[c] - row_degs[r] (or zero).
template <class F>
struct PolyMat {
  std::vector<int> row_degs;  // target generator degrees
  std::vector<int> col_degs;  // source generator degrees
  std::vector<Poly<F>> e;     // row-major

  long rows() const { return static_cast<long>(row_degs.size()); }
  long cols() const { return static_cast<long>(col_degs.size()); }
  Poly<F>& at(long r, long c) { return e[static_cast<std::size_t>(r * cols() + c)]; }
  const Poly<F>& at(long r, long c) const { return e[static_cast<std::size_t>(r * cols() + c)]; }

  static PolyMat make(std::vector<int> rdegs, std::vector<int> cdegs) {
    PolyMat m;
    m.row_degs = std::move(rdegs);
    m.col_degs = std::move(cdegs);
    m.e.resize(m.row_degs.size() * m.col_degs.size());
    return m;
  }

  void validate() const {
    for (long r = 0; r < rows(); ++r)
      for (long c = 0; c < cols(); ++c) {
        const Poly<F>& p = at(r, c);
        if (p.is_zero()) continue;
        auto hd = p.homogeneous_degree();
        if (!hd || *hd != col_degs[c] - row_degs[r])
          throw input_error("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                            ") is not homogeneous of degree " +
                            std::to_string(col_degs[c] - row_degs[r]));
      }
  }

  // degree-d slice of the map in free-module coordinates
  Mat<F> block(const GradedAlgebra<F>& A, int d) const {
    Mat<F> out(A.fld, free_dim_at(A, row_degs, d), free_dim_at(A, col_degs, d));
    auto src = free_offsets(A, col_degs, d);
    auto tgt = free_offsets(A, row_degs, d);
    for (long c = 0; c < cols(); ++c) {
      int es = d - col_degs[c];
      if (es < 0 || es > A.top) continue;
      for (long r = 0; r < rows(); ++r) {
        const Poly<F>& p = at(r, c);
        if (p.is_zero()) continue;
        Mat<F> blk = A.action_matrix(p, es);  // A_es -> A_{d - row_degs[r]}
        for (long rr = 0; rr < blk.rows; ++rr)
          for (long cc = 0; cc < blk.cols; ++cc)
            if (!A.fld.is_zero(blk.at(rr, cc)))
              out.at(tgt[r] + rr, src[c] + cc) = blk.at(rr, cc);
      }
    }
    return out;
  }

  // Hom(-, A) applied to this map: Hom(target, A) -> Hom(source, A)
  PolyMat star_transpose() const {
    PolyMat t = make(negated(col_degs), negated(row_degs));
    for (long r = 0; r < rows(); ++r)
      for (long c = 0; c < cols(); ++c) t.at(c, r) = at(r, c);
    return t;
  }

 private:
  static std::vector<int> negated(const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
  }
};

// ---------------------------------------------------------------- modules
template <class F>
struct GradedModule {
  using E = typename F::Elem;
  const GradedAlgebra<F>* alg = nullptr;
  int lo = 0, hi = -1;  // support window; empty when hi < lo
  std::vector<long> dims;
  std::vector<std::vector<Mat<F>>> act;  // act[v][d-lo]: M_d -> M_{d+1}
  // realization bookkeeping (optional): quotients keep the projection from
  // the ambient free module, submodules keep the embedding into it
  std::vector<int> ambient_gens;
  std::vector<Mat<F>> proj;
  std::vector<Mat<F>> embed;
  std::string name;

  long dim_at(int d) const { return (d < lo || d > hi) ? 0 : dims[static_cast<std::size_t>(d - lo)]; }
  long total_dim() const {
    long t = 0;
    for (long x : dims) t += x;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }

  Mat<F> act_at(long v, int d) const {
    if (d < lo || d > hi) return Mat<F>(alg->fld, dim_at(d + 1), dim_at(d));
    return act[static_cast<std::size_t>(v)][static_cast<std::size_t>(d - lo)];
  }
};

// Hilbert function trimmed to the nonzero support; returns
// {start degree, coefficients}, and {0, {}} for the zero module.
template <class F>
std::pair<int, std::vector<long>> hilbert_trimmed(const GradedModule<F>& M) {
  int a = M.lo, b = M.hi;
  while (a <= b && M.dim_at(a) == 0) ++a;
  while (b >= a && M.dim_at(b) == 0) --b;
  if (a > b) return {0, {}};
  std::vector<long> h;
  for (int d = a; d <= b; ++d) h.push_back(M.dim_at(d));
  return {a, h};
}

// multiplication by a homogeneous polynomial as a matrix M_d -> M_{d+deg p}
template <class F>
Mat<F> module_poly_action(const GradedModule<F>& M, const Poly<F>& p, int d) {
  const F& fld = M.alg->fld;
  auto hd = p.homogeneous_degree();
  if (!hd) throw input_error("module action of a non-homogeneous element");
  Mat<F> out(fld, M.dim_at(d + *hd), M.dim_at(d));
  if (out.rows == 0 || out.cols == 0) return out;
  for (const auto& term : p.t) {
    Mat<F> cur = Mat<F>::identity(fld, M.dim_at(d));
    int at = d;
    for (std::size_t v = 0; v < term.m.size(); ++v)
      for (int k = 0; k < term.m[v]; ++k) {
        cur = M.act_at(static_cast<long>(v), at).mul(cur);
        ++at;
      }
    for (long r = 0; r < out.rows; ++r)
      for (long c = 0; c < out.cols; ++c)
        out.at(r, c) = fld.add(out.at(r, c), fld.mul(term.c, cur.at(r, c)));
  }
  return out;
}

namespace detail {

// Deterministic complement data for quotient slices: rows of rr span the
// subspace (reduced echelon form), the coset basis is the set of non-pivot
// coordinates.
template <class F>
struct QuotientSlice {
  long ambient = 0;
  EchelonForm<F> rr;
  std::vector<long> coset;

  QuotientSlice() = default;
  explicit QuotientSlice(const Mat<F>& span_cols)
      : ambient(span_cols.rows), rr(rref(span_cols.transposed(), true)) {
    std::vector<char> is_pivot(static_cast<std::size_t>(ambient), 0);
    for (long c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
    for (long j = 0; j < ambient; ++j)
      if (!is_pivot[static_cast<std::size_t>(j)]) coset.push_back(j);
  }

  long dim() const { return ambient - rr.rank; }

  // projection ambient -> quotient coordinates: coset coordinates pass
  // through, each pivot coordinate rewrites via its echelon row
  Mat<F> projection(const F& fld) const {
    Mat<F> p(fld, dim(), ambient);
    for (long j = 0; j < dim(); ++j) p.at(j, coset[static_cast<std::size_t>(j)]) = fld.one();
    for (long r = 0; r < rr.rank; ++r) {
      long pj = rr.pivot_cols[static_cast<std::size_t>(r)];
      for (long j = 0; j < dim(); ++j) {
        const typename F::Elem& v = rr.r.at(r, coset[static_cast<std::size_t>(j)]);
        if (!fld.is_zero(v)) p.at(j, pj) = fld.neg(v);
      }
    }
    return p;
  }
};

template <class F>
GradedModule<F> realize_submodule(const GradedAlgebra<F>& A, std::vector<int> ambient, int lo,
                                  int hi, std::vector<Mat<F>> bases, std::string name) {
  GradedModule<F> M;
  M.alg = &A;
  M.name = std::move(name);
  M.lo = lo;
  M.hi = hi;
  M.ambient_gens = std::move(ambient);
  for (const auto& b : bases) M.dims.push_back(b.cols);
  M.embed = std::move(bases);
  M.act.assign(static_cast<std::size_t>(A.nvars()), {});
  for (int d = lo; d <= hi; ++d) {
    long cur_dim = M.dims[static_cast<std::size_t>(d - lo)];
    long next_dim = (d + 1 <= hi) ? M.dims[static_cast<std::size_t>(d + 1 - lo)] : 0;
    std::optional<SpanSolver<F>> solve;
    if (cur_dim > 0 && next_dim > 0) solve.emplace(M.embed[static_cast<std::size_t>(d + 1 - lo)]);
    for (long v = 0; v < A.nvars(); ++v) {
      Mat<F> a(A.fld, next_dim, cur_dim);
      if (cur_dim > 0) {
        Mat<F> img =
            free_var_act(A, M.ambient_gens, v, d).mul(M.embed[static_cast<std::size_t>(d - lo)]);
        if (next_dim > 0) {
          for (long j = 0; j < img.cols; ++j) {
            auto x = solve->coords(img.col(j));
            if (!x) throw internal_error("submodule is not closed under the algebra action");
            a.set_col(j, *x);
          }
        } else if (!img.is_zero()) {
          throw internal_error("submodule is not closed under the algebra action");
        }
      }
      M.act[static_cast<std::size_t>(v)].push_back(std::move(a));
    }
  }
  return M;
}

inline std::pair<int, int> gen_window(const std::vector<int>& gens, int top) {
  int lo = *std::min_element(gens.begin(), gens.end());
  int hi = *std::max_element(gens.begin(), gens.end()) + top;
  return {lo, hi};
}

}  // namespace detail

// the free module itself, realized explicitly
template <class F>
GradedModule<F> realize_free(const GradedAlgebra<F>& A, std::vector<int> gens,
                             std::string name = "") {
  GradedModule<F> M;
  M.alg = &A;
  M.name = std::move(name);
  if (gens.empty()) return M;
  auto [lo, hi] = detail::gen_window(gens, A.top);
  M.lo = lo;
  M.hi = hi;
  M.ambient_gens = std::move(gens);
  for (int d = lo; d <= hi; ++d) M.dims.push_back(free_dim_at(A, M.ambient_gens, d));
  M.act.assign(static_cast<std::size_t>(A.nvars()), {});
  for (long v = 0; v < A.nvars(); ++v)
    for (int d = lo; d <= hi; ++d)
      M.act[static_cast<std::size_t>(v)].push_back(free_var_act(A, M.ambient_gens, v, d));
  return M;
}

// cokernel of a map between free modules, degreewise
template <class F>
GradedModule<F> realize_cokernel(const GradedAlgebra<F>& A, const PolyMat<F>& m,
                                 std::string name = "") {
  m.validate();
  GradedModule<F> M;
  M.alg = &A;
  M.name = std::move(name);
  if (m.row_degs.empty()) return M;
  auto [lo, hi] = detail::gen_window(m.row_degs, A.top);
  M.lo = lo;
  M.hi = hi;
  M.ambient_gens = m.row_degs;
  std::vector<detail::QuotientSlice<F>> q;
  for (int d = lo; d <= hi; ++d) {
    q.emplace_back(m.block(A, d));
    M.dims.push_back(q.back().dim());
    M.proj.push_back(q.back().projection(A.fld));
  }
  M.act.assign(static_cast<std::size_t>(A.nvars()), {});
  for (long v = 0; v < A.nvars(); ++v)
    for (int d = lo; d <= hi; ++d) {
      const auto& qd = q[static_cast<std::size_t>(d - lo)];
      Mat<F> free_act = free_var_act(A, m.row_degs, v, d);
      Mat<F> lifted(A.fld, free_act.rows, qd.dim());
      for (long j = 0; j < lifted.cols; ++j)
        lifted.set_col(j, free_act.col(qd.coset[static_cast<std::size_t>(j)]));
      Mat<F> next_proj = (d + 1 <= hi)
                             ? M.proj[static_cast<std::size_t>(d + 1 - lo)]
                             : Mat<F>(A.fld, 0, free_dim_at(A, m.row_degs, d + 1));
      M.act[static_cast<std::size_t>(v)].push_back(next_proj.mul(lifted));
    }
  return M;
}

// image of a map between free modules, as a submodule of the target
template <class F>
GradedModule<F> realize_image(const GradedAlgebra<F>& A, const PolyMat<F>& m,
                              std::string name = "") {
  m.validate();
  if (m.row_degs.empty() || m.col_degs.empty()) {
    GradedModule<F> Z;
    Z.alg = &A;
    Z.name = std::move(name);
    return Z;
  }
  auto [lo, hi] = detail::gen_window(m.row_degs, A.top);
  std::vector<Mat<F>> bases;
  for (int d = lo; d <= hi; ++d) bases.push_back(column_space_basis(m.block(A, d)));
  return detail::realize_submodule(A, m.row_degs, lo, hi, std::move(bases), std::move(name));
}

// kernel of a map between free modules, as a submodule of the source
template <class F>
GradedModule<F> realize_kernel(const GradedAlgebra<F>& A, const PolyMat<F>& m,
                               std::string name = "") {
  m.validate();
  if (m.col_degs.empty()) {
    GradedModule<F> Z;
    Z.alg = &A;
    Z.name = std::move(name);
    return Z;
  }
  auto [lo, hi] = detail::gen_window(m.col_degs, A.top);
  std::vector<Mat<F>> bases;
  for (int d = lo; d <= hi; ++d) bases.push_back(kernel_basis(m.block(A, d)));
  return detail::realize_submodule(A, m.col_degs, lo, hi, std::move(bases), std::move(name));
}

// A / (g_1, ..., g_m) for homogeneous g_i
template <class F>
GradedModule<F> cyclic_quotient(const GradedAlgebra<F>& A, const std::vector<Poly<F>>& gens,
                                std::string name = "") {
  std::vector<Poly<F>> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  std::vector<int> cdegs;
  for (const auto& g : nz) {
    auto hd = g.homogeneous_degree();
    if (!hd) throw input_error("cyclic quotient relation is not homogeneous");
    cdegs.push_back(*hd);
  }
  PolyMat<F> m = PolyMat<F>::make({0}, std::move(cdegs));
  for (long c = 0; c < m.cols(); ++c) m.at(0, c) = nz[static_cast<std::size_t>(c)];
  return realize_cokernel(A, m, std::move(name));
}

template <class F>
GradedModule<F> direct_sum(const GradedAlgebra<F>& A,
                           const std::vector<const GradedModule<F>*>& parts,
                           std::string name = "") {
  GradedModule<F> M;
  M.alg = &A;
  M.name = std::move(name);
  bool any = false;
  int lo = 0, hi = -1;
  for (const auto* p : parts) {
    if (p->alg != &A) throw input_error("direct sum of modules over different algebras");
    if (p->lo > p->hi) continue;
    if (!any) {
      lo = p->lo;
      hi = p->hi;
      any = true;
    } else {
      lo = std::min(lo, p->lo);
      hi = std::max(hi, p->hi);
    }
  }
  if (!any) return M;
  M.lo = lo;
  M.hi = hi;
  for (int d = lo; d <= hi; ++d) {
    long t = 0;
    for (const auto* p : parts) t += p->dim_at(d);
    M.dims.push_back(t);
  }
  M.act.assign(static_cast<std::size_t>(A.nvars()), {});
  for (long v = 0; v < A.nvars(); ++v)
    for (int d = lo; d <= hi; ++d) {
      Mat<F> a(A.fld, M.dim_at(d + 1), M.dim_at(d));
      long ro = 0, co = 0;
      for (const auto* p : parts) {
        Mat<F> blk = p->act_at(v, d);
        for (long r = 0; r < blk.rows; ++r)
          for (long c = 0; c < blk.cols; ++c) a.at(ro + r, co + c) = blk.at(r, c);
        ro += blk.rows;
        co += blk.cols;
      }
      M.act[static_cast<std::size_t>(v)].push_back(std::move(a));
    }
  return M;
}

// degree shift: shifted(M, k) has (shifted M)_d = M_{d+k}
template <class F>
GradedModule<F> shifted(const GradedModule<F>& M, int k, std::string name = "") {
  GradedModule<F> S = M;
  S.lo = M.lo - k;
  S.hi = M.hi - k;
  S.name = name.empty() ? M.name : std::move(name);
  S.ambient_gens.clear();
  S.proj.clear();
  S.embed.clear();
  return S;
}

// graded dual with (dual M)_d = Hom(M_{-d}, k); actions transpose
template <class F>
GradedModule<F> matlis_dual(const GradedModule<F>& M, std::string name = "") {
  const GradedAlgebra<F>& A = *M.alg;
  GradedModule<F> D;
  D.alg = &A;
  D.name = std::move(name);
  if (M.lo > M.hi) return D;
  D.lo = -M.hi;
  D.hi = -M.lo;
  for (int d = D.lo; d <= D.hi; ++d) D.dims.push_back(M.dim_at(-d));
  D.act.assign(static_cast<std::size_t>(A.nvars()), {});
  for (long v = 0; v < A.nvars(); ++v)
    for (int d = D.lo; d <= D.hi; ++d)
      D.act[static_cast<std::size_t>(v)].push_back(M.act_at(v, -d - 1).transposed());
  return D;
}

// Hom(coker m, A) computed from a presentation m: the kernel of the
// star-transposed map between the dual free modules
template <class F>
GradedModule<F> star_dual(const GradedAlgebra<F>& A, const PolyMat<F>& presentation,
                          std::string name = "") {
  return realize_kernel(A, presentation.star_transpose(), std::move(name));
}

// socle slice dimensions: vectors killed by every variable
template <class F>
std::vector<long> module_socle_dims(const GradedModule<F>& M) {
  const GradedAlgebra<F>& A = *M.alg;
  std::vector<long> out;
  for (int d = M.lo; d <= M.hi; ++d) {
    long cur = M.dim_at(d);
    if (cur == 0) {
      out.push_back(0);
      continue;
    }
    Mat<F> stack(A.fld, A.nvars() * M.dim_at(d + 1), cur);
    long ro = 0;
    for (long v = 0; v < A.nvars(); ++v) {
      Mat<F> a = M.act_at(v, d);
      for (long r = 0; r < a.rows; ++r)
        for (long c = 0; c < a.cols; ++c) stack.at(ro + r, c) = a.at(r, c);
      ro += a.rows;
    }
    out.push_back(cur - rank_of(stack));
  }
  return out;
}

// number of independent generators needed away from the socle: the
// codimension of the socle
template <class F>
long module_c_invariant(const GradedModule<F>& M) {
  long s = 0;
  for (long x : module_socle_dims(M)) s += x;
  return M.total_dim() - s;
}

// structural sanity: variable actions commute and every defining relation
// of the algebra annihilates the module
template <class F>
bool validate_module(const GradedModule<F>& M) {
  const GradedAlgebra<F>& A = *M.alg;
  for (int d = M.lo; d <= M.hi; ++d)
    for (long v = 0; v < A.nvars(); ++v)
      for (long w = v + 1; w < A.nvars(); ++w) {
        Mat<F> vw = M.act_at(w, d + 1).mul(M.act_at(v, d));
        Mat<F> wv = M.act_at(v, d + 1).mul(M.act_at(w, d));
        if (!(vw == wv)) return false;
      }
  for (const auto& g : A.rels)
    for (int d = M.lo; d <= M.hi; ++d)
      if (!module_poly_action(M, g, d).is_zero()) return false;
  return true;
}

}  // namespace gorhom
