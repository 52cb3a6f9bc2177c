#pragma once
// Finite-dimensional graded quotient R = k[x1..xn]/I, realized degree by
// degree. The degree-d slice of I is spanned exactly by {m*g : g relation,
// m monomial of complementary degree}, so one row reduction per degree
// yields the monomial basis (non-pivot monomials under grevlex), normal
// forms, and variable action matrices. No Groebner machinery.
#include <map>
#include <string>
#include <vector>

#include "gorhom/matrix.hpp"
#include "gorhom/poly.hpp"

namespace gorhom {

template <class F>
struct GradedAlgebra {
  using E = typename F::Elem;
  F fld;
  std::vector<std::string> vars;
  std::vector<Poly<F>> rels;
  int cap = 0;
  int top = 0;

  std::vector<std::vector<Mono>> basis;     // basis[d]: grevlex-descending coset monomials
  std::vector<long> dims;                   // dims[d] = |basis[d]|, d in [0, top]
  std::vector<std::vector<Mono>> all_monos; // every degree-d monomial, grevlex-descending
  std::vector<std::map<Mono, long>> mono_pos;
  std::vector<Mat<F>> nf;                   // nf[d]: dims[d] x |all_monos[d]|, column = coset coords
  std::vector<std::vector<Mat<F>>> var_act; // var_act[v][d]: A_d -> A_{d+1}

  long nvars() const { return static_cast<long>(vars.size()); }
  long dim_at(int d) const { return (d < 0 || d > top) ? 0 : dims[d]; }
  long total_dim() const {
    long t = 0;
    for (long x : dims) t += x;
    return t;
  }
  std::vector<long> hilbert() const { return dims; }

  // coset coordinates of a homogeneous polynomial of degree d
  std::vector<E> nf_homog(const Poly<F>& p, int d) const {
    std::vector<E> out(dim_at(d), fld.zero());
    if (d < 0 || d > top) {
      if (!p.is_zero() && d > top) return out;  // everything above top is zero
      if (!p.is_zero()) throw internal_error("normal form requested in unrealized degree");
      return out;
    }
    for (const auto& term : p.t) {
      if (mono_deg(term.m) != d)
        throw input_error("polynomial is not homogeneous of degree " + std::to_string(d));
      auto it = mono_pos[d].find(term.m);
      if (it == mono_pos[d].end()) throw internal_error("monomial outside realized slice");
      for (long r = 0; r < dims[d]; ++r) {
        const E& v = nf[d].at(r, it->second);
        if (!fld.is_zero(v)) out[r] = fld.add(out[r], fld.mul(term.c, v));
      }
    }
    return out;
  }

  Poly<F> basis_poly(int d, long j) const {
    return poly_term(fld, fld.one(), basis[d][j]);
  }

  // matrix of multiplication by homogeneous p: A_d -> A_{d+deg p}
  Mat<F> action_matrix(const Poly<F>& p, int d) const {
    auto hd = p.homogeneous_degree();
    if (!hd) throw input_error("action of a non-homogeneous element");
    int e = p.is_zero() ? 0 : *hd;
    Mat<F> out(fld, dim_at(d + e), dim_at(d));
    if (out.rows == 0 || out.cols == 0) return out;
    for (long j = 0; j < dims[d]; ++j) {
      Poly<F> prod = poly_mul_mono(fld, p, basis[d][j]);
      out.set_col(j, nf_homog(prod, d + e));
    }
    return out;
  }

  // element product in coset coordinates: A_a x A_b -> A_{a+b}
  std::vector<E> multiply(int a, const std::vector<E>& u, int b, const std::vector<E>& v) const {
    Poly<F> pu;
    for (long j = 0; j < dim_at(a); ++j)
      if (!fld.is_zero(u[j])) pu = poly_add(fld, pu, poly_term(fld, u[j], basis[a][j]));
    if (pu.is_zero()) return std::vector<E>(dim_at(a + b), fld.zero());
    return action_matrix(pu, b).apply(v);
  }

  // socle dimensions per degree: intersection of the variable-action kernels
  std::vector<long> socle_dims() const {
    std::vector<long> out(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
      Mat<F> stacked(fld, dim_at(d + 1) * nvars(), dims[d]);
      for (long v = 0; v < nvars(); ++v) {
        const Mat<F>& act = var_act[v][d];
        for (long r = 0; r < act.rows; ++r)
          for (long c = 0; c < act.cols; ++c) stacked.at(v * act.rows + r, c) = act.at(r, c);
      }
      out[d] = dims[d] - rank_of(stacked);
    }
    return out;
  }

  long socle_dim() const {
    long t = 0;
    for (long s : socle_dims()) t += s;
    return t;
  }

  bool is_gorenstein() const { return socle_dim() == 1; }

  // true iff the expected monomials are a k-basis of the whole algebra
  // (independent coset vectors, correct total count), whatever the engine's
  // internal pivot choice was
  bool check_basis(const std::vector<Mono>& expected) const {
    if (static_cast<long>(expected.size()) != total_dim()) return false;
    std::vector<std::vector<Mono>> by_deg(top + 1);
    for (const Mono& m : expected) {
      int d = mono_deg(m);
      if (d < 0 || d > top) return false;
      by_deg[d].push_back(m);
    }
    for (int d = 0; d <= top; ++d) {
      if (static_cast<long>(by_deg[d].size()) != dims[d]) return false;
      Mat<F> cols(fld, dims[d], static_cast<long>(by_deg[d].size()));
      for (long j = 0; j < cols.cols; ++j) {
        auto it = mono_pos[d].find(by_deg[d][j]);
        if (it == mono_pos[d].end()) return false;
        cols.set_col(j, nf[d].col(it->second));
      }
      if (rank_of(cols) != cols.cols) return false;
    }
    return true;
  }
};

template <class F>
GradedAlgebra<F> build_algebra(F fld, std::vector<std::string> vars,
                               std::vector<Poly<F>> rels, int cap = 10) {
  if (cap < 1) throw input_error("degree cap must be at least 1");
  if (vars.empty()) throw input_error("algebra needs at least one variable");
  for (const auto& r : rels) {
    auto hd = r.homogeneous_degree();
    if (r.is_zero()) throw input_error("zero relation");
    if (!hd) throw input_error("relation is not homogeneous: every term must share one degree");
    if (*hd < 2) throw input_error("algebra relations must have degree >= 2");
  }

  GradedAlgebra<F> A;
  A.fld = fld;
  A.vars = std::move(vars);
  A.rels = std::move(rels);
  A.cap = cap;
  const long n = A.nvars();

  bool vanished = false;
  for (int d = 0; d <= cap; ++d) {
    std::vector<Mono> monos = monomials_of_degree(static_cast<int>(n), d);
    std::map<Mono, long> pos;
    for (long j = 0; j < static_cast<long>(monos.size()); ++j) pos[monos[j]] = j;

    // rows spanning the degree-d slice of the ideal
    std::vector<std::vector<typename F::Elem>> rows;
    for (const auto& g : A.rels) {
      int e = *g.homogeneous_degree();
      if (e > d) continue;
      for (const Mono& m : monomials_of_degree(static_cast<int>(n), d - e)) {
        Poly<F> prod = poly_mul_mono(fld, g, m);
        std::vector<typename F::Elem> row(monos.size(), fld.zero());
        for (const auto& term : prod.t) row[pos.at(term.m)] = term.c;
        rows.push_back(std::move(row));
      }
    }
    Mat<F> slice(fld, static_cast<long>(rows.size()), static_cast<long>(monos.size()));
    for (long r = 0; r < slice.rows; ++r)
      for (long c = 0; c < slice.cols; ++c) slice.at(r, c) = rows[r][c];
    EchelonForm<F> e = rref(slice, true);

    std::vector<char> is_pivot(monos.size(), 0);
    for (long c : e.pivot_cols) is_pivot[c] = 1;
    std::vector<Mono> bas;
    std::vector<long> basis_pos_of_mono(monos.size(), -1);
    for (long j = 0; j < static_cast<long>(monos.size()); ++j)
      if (!is_pivot[j]) {
        basis_pos_of_mono[j] = static_cast<long>(bas.size());
        bas.push_back(monos[j]);
      }

    long dim = static_cast<long>(bas.size());
    Mat<F> nfd(fld, dim, static_cast<long>(monos.size()));
    for (long j = 0; j < static_cast<long>(monos.size()); ++j)
      if (!is_pivot[j]) nfd.at(basis_pos_of_mono[j], j) = fld.one();
    for (long r = 0; r < e.rank; ++r) {
      long pj = e.pivot_cols[r];
      // row r reads  m_pj + sum_j c_j m_j = 0  with j non-pivot
      for (long j = 0; j < static_cast<long>(monos.size()); ++j) {
        if (is_pivot[j]) continue;
        const typename F::Elem& c = e.r.at(r, j);
        if (!fld.is_zero(c)) nfd.at(basis_pos_of_mono[j], pj) = fld.neg(c);
      }
    }

    A.all_monos.push_back(std::move(monos));
    A.mono_pos.push_back(std::move(pos));
    A.basis.push_back(std::move(bas));
    A.dims.push_back(dim);
    A.nf.push_back(std::move(nfd));

    if (dim == 0) {
      // standard grading: A_{d+1} = A_1 * A_d, so once a slice dies the
      // algebra stays dead and we are artinian
      vanished = true;
      A.top = d - 1;
      A.all_monos.pop_back();
      A.mono_pos.pop_back();
      A.basis.pop_back();
      A.dims.pop_back();
      A.nf.pop_back();
      break;
    }
  }
  if (!vanished)
    throw input_error("algebra does not become zero by degree " + std::to_string(cap) +
                      "; raise the cap or check the relations");

  A.var_act.resize(n);
  for (long v = 0; v < n; ++v) {
    A.var_act[v].resize(A.top + 1);
    Mono xm(n, 0);
    xm[v] = 1;
    Poly<F> xv = poly_term(fld, fld.one(), xm);
    for (int d = 0; d <= A.top; ++d) A.var_act[v][d] = A.action_matrix(xv, d);
  }
  return A;
}

// quotient-by-variable presentation: substitute x_v = 0 in every relation,
// drop the slot and any relations that die or repeat
template <class F>
std::vector<Poly<F>> relations_mod_var(const F& fld, const std::vector<Poly<F>>& rels, int v) {
  std::vector<Poly<F>> out;
  for (const auto& g : rels) {
    Poly<F> h = poly_set_var_zero_and_drop(fld, g, v);
    if (h.is_zero()) continue;
    bool dup = false;
    for (const auto& seen : out)
      if (poly_sub(fld, seen, h).is_zero()) { dup = true; break; }
    if (!dup) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace gorhom
