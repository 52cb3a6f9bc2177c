#pragma once
// Homology of complexes of free modules against a coefficient module:
// tensor and Hom blocks per internal degree, homology dimension tables for
// resolutions (Tor/Ext) and for doubly infinite map families, plus the
// assembled two-by-two action matrices whose rank deficiencies bound the
// number of nonvanishing positions.
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gorhom/resolve.hpp"

namespace gorhom {

struct HomologyTable {
  int lo_i = 0;                              // homological index of graded[0]
  std::vector<std::map<int, long>> graded;   // per index: internal degree -> dim

  int hi_i() const { return lo_i + static_cast<int>(graded.size()) - 1; }
  long total_at(int i) const {
    if (i < lo_i || i > hi_i()) return 0;
    long t = 0;
    for (const auto& [j, v] : graded[static_cast<std::size_t>(i - lo_i)]) t += v;
    return t;
  }
  std::vector<long> totals() const {
    std::vector<long> out;
    for (int i = lo_i; i <= hi_i(); ++i) out.push_back(total_at(i));
    return out;
  }
  std::vector<int> nonzero_indices() const {
    std::vector<int> out;
    for (int i = lo_i; i <= hi_i(); ++i)
      if (total_at(i) > 0) out.push_back(i);
    return out;
  }
};

template <class F>
long tensor_dim(const GradedModule<F>& N, const std::vector<int>& gens, int d) {
  long t = 0;
  for (int g : gens) t += N.dim_at(d - g);
  return t;
}

template <class F>
long hom_dim(const GradedModule<F>& N, const std::vector<int>& gens, int d) {
  long t = 0;
  for (int g : gens) t += N.dim_at(d + g);
  return t;
}

// degree-d slice of m tensored with N
template <class F>
Mat<F> tensor_block(const GradedModule<F>& N, const PolyMat<F>& m, int d) {
  const F& fld = N.alg->fld;
  Mat<F> out(fld, tensor_dim(N, m.row_degs, d), tensor_dim(N, m.col_degs, d));
  long co = 0;
  for (long c = 0; c < m.cols(); ++c) {
    int dc = d - m.col_degs[static_cast<std::size_t>(c)];
    long w = N.dim_at(dc);
    if (w == 0) continue;
    long ro = 0;
    for (long r = 0; r < m.rows(); ++r) {
      long h = N.dim_at(d - m.row_degs[static_cast<std::size_t>(r)]);
      if (h > 0 && !m.at(r, c).is_zero()) {
        Mat<F> blk = module_poly_action(N, m.at(r, c), dc);
        for (long rr = 0; rr < blk.rows; ++rr)
          for (long cc = 0; cc < blk.cols; ++cc) out.at(ro + rr, co + cc) = blk.at(rr, cc);
      }
      ro += h;
    }
    co += w;
  }
  return out;
}

// degree-d slice of Hom(m, N): precomposition Hom(target, N) -> Hom(source, N)
template <class F>
Mat<F> hom_block(const GradedModule<F>& N, const PolyMat<F>& m, int d) {
  const F& fld = N.alg->fld;
  Mat<F> out(fld, hom_dim(N, m.col_degs, d), hom_dim(N, m.row_degs, d));
  long co = 0;
  for (long r = 0; r < m.rows(); ++r) {
    int dr = d + m.row_degs[static_cast<std::size_t>(r)];
    long w = N.dim_at(dr);
    if (w == 0) continue;
    long ro = 0;
    for (long c = 0; c < m.cols(); ++c) {
      long h = N.dim_at(d + m.col_degs[static_cast<std::size_t>(c)]);
      if (h > 0 && !m.at(r, c).is_zero()) {
        Mat<F> blk = module_poly_action(N, m.at(r, c), dr);
        for (long rr = 0; rr < blk.rows; ++rr)
          for (long cc = 0; cc < blk.cols; ++cc) out.at(ro + rr, co + cc) = blk.at(rr, cc);
      }
      ro += h;
    }
    co += w;
  }
  return out;
}

namespace detail {

template <class F>
void check_chain(const std::vector<PolyMat<F>>& maps) {
  if (maps.size() < 2) throw input_error("homology needs at least two consecutive maps");
  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    if (maps[k + 1].row_degs != maps[k].col_degs)
      throw input_error("maps " + std::to_string(k) + " and " + std::to_string(k + 1) +
                        " of the complex do not compose");
}

}  // namespace detail

// H_i(maps tensor N) for i in [ilo, ilo + maps.size() - 2], where
// maps[k] : F_{ilo+k} -> F_{ilo+k-1}
template <class F>
HomologyTable complex_tensor_homology(const std::vector<PolyMat<F>>& maps, int ilo,
                                      const GradedModule<F>& N) {
  detail::check_chain(maps);
  std::map<std::pair<std::size_t, int>, long> rank_memo;
  auto rank_at = [&](std::size_t k, int d) {
    auto key = std::make_pair(k, d);
    auto it = rank_memo.find(key);
    if (it != rank_memo.end()) return it->second;
    long r = rank_of(tensor_block(N, maps[k], d));
    rank_memo.emplace(key, r);
    return r;
  };
  HomologyTable t;
  t.lo_i = ilo;
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    t.graded.emplace_back();
    const std::vector<int>& gens = maps[k].col_degs;
    if (gens.empty() || N.is_zero()) continue;
    auto [glo, ghi] = detail::gen_window(gens, 0);
    for (int d = glo + N.lo; d <= ghi + N.hi; ++d) {
      long dim = tensor_dim(N, gens, d) - rank_at(k, d) - rank_at(k + 1, d);
      if (dim > 0) t.graded.back()[d] = dim;
    }
  }
  return t;
}

// H^i(Hom(maps, N)) over the same index range
template <class F>
HomologyTable complex_hom_homology(const std::vector<PolyMat<F>>& maps, int ilo,
                                   const GradedModule<F>& N) {
  detail::check_chain(maps);
  std::map<std::pair<std::size_t, int>, long> rank_memo;
  auto rank_at = [&](std::size_t k, int d) {
    auto key = std::make_pair(k, d);
    auto it = rank_memo.find(key);
    if (it != rank_memo.end()) return it->second;
    long r = rank_of(hom_block(N, maps[k], d));
    rank_memo.emplace(key, r);
    return r;
  };
  HomologyTable t;
  t.lo_i = ilo;
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    t.graded.emplace_back();
    const std::vector<int>& gens = maps[k].col_degs;
    if (gens.empty() || N.is_zero()) continue;
    auto [glo, ghi] = detail::gen_window(gens, 0);
    for (int d = N.lo - ghi; d <= N.hi - glo; ++d) {
      long dim = hom_dim(N, gens, d) - rank_at(k + 1, d) - rank_at(k, d);
      if (dim > 0) t.graded.back()[d] = dim;
    }
  }
  return t;
}

namespace detail {

// pad a resolution into a chain d_0 = 0, d_1, ..., d_{hmax+1}; past an
// exhausted resolution the maps are zero
template <class F>
std::vector<PolyMat<F>> resolution_chain(const FreeResolution<F>& R, int hmax) {
  if (hmax < 0) throw input_error("homological range must be nonnegative");
  std::vector<PolyMat<F>> maps;
  maps.push_back(PolyMat<F>::make({}, R.gen_degs.empty() ? std::vector<int>{} : R.gen_degs[0]));
  for (int i = 1; i <= hmax + 1; ++i) {
    if (static_cast<std::size_t>(i - 1) < R.maps.size()) {
      maps.push_back(R.maps[static_cast<std::size_t>(i - 1)]);
    } else if (R.exhausted) {
      maps.push_back(PolyMat<F>::make(maps.back().col_degs, {}));
    } else {
      throw input_error("resolution is too short for homological degree " + std::to_string(hmax));
    }
  }
  return maps;
}

}  // namespace detail

// Tor_i(M, N) for i in [0, hmax], M given through its resolution
template <class F>
HomologyTable tor_table(const FreeResolution<F>& R, const GradedModule<F>& N, int hmax) {
  return complex_tensor_homology(detail::resolution_chain(R, hmax), 0, N);
}

// Ext^i(M, N) for i in [0, hmax]
template <class F>
HomologyTable ext_table(const FreeResolution<F>& R, const GradedModule<F>& N, int hmax) {
  return complex_hom_homology(detail::resolution_chain(R, hmax), 0, N);
}

// summary of where a table is nonzero: the index set, its residue classes
// when the deformation unit has finite order s, and the longest vanishing
// run strictly between nonzero positions
struct VanishingPattern {
  int lo = 0, hi = -1;              // scanned index window
  std::vector<int> nonzero;
  long long modulus = 0;            // 0 means no residue summary applies
  std::vector<int> residues;        // sorted classes mod modulus
  bool residues_consistent = true;  // nonzero set equals its residue expansion
  int max_gap = 0;
};

inline VanishingPattern extract_pattern(const HomologyTable& t, long long s) {
  VanishingPattern p;
  p.lo = t.lo_i;
  p.hi = t.hi_i();
  p.nonzero = t.nonzero_indices();
  p.modulus = s > 0 ? s : 0;
  if (p.modulus > 0) {
    std::set<int> rs;
    for (int i : p.nonzero) rs.insert(static_cast<int>(((i % s) + s) % s));
    p.residues.assign(rs.begin(), rs.end());
    for (int i = p.lo; i <= p.hi; ++i) {
      bool predicted = rs.count(static_cast<int>(((i % s) + s) % s)) > 0;
      if (predicted != (t.total_at(i) > 0)) p.residues_consistent = false;
    }
  }
  for (std::size_t j = 0; j + 1 < p.nonzero.size(); ++j)
    p.max_gap = std::max(p.max_gap, p.nonzero[j + 1] - p.nonzero[j] - 1);
  return p;
}

// the action of one variable on all of N, assembled into a single nilpotent
// endomorphism of the underlying space
template <class F>
Mat<F> full_action(const GradedModule<F>& N, long v) {
  const F& fld = N.alg->fld;
  long e = N.total_dim();
  Mat<F> out(fld, e, e);
  long off = 0;
  for (int d = N.lo; d <= N.hi; ++d) {
    long cur = N.dim_at(d);
    Mat<F> a = N.act_at(v, d);
    for (long r = 0; r < a.rows; ++r)
      for (long c = 0; c < a.cols; ++c) out.at(off + cur + r, off + c) = a.at(r, c);
    off += cur;
  }
  return out;
}

// the assembled degree-i family matrix [[X1, s X3], [X4, X2]] on N + N,
// where s is the caller-supplied power of the deformation unit and Xv the
// full action of the v-th variable
template <class F>
Mat<F> omega_matrix(const GradedModule<F>& N, const typename F::Elem& s) {
  const F& fld = N.alg->fld;
  long e = N.total_dim();
  Mat<F> x1 = full_action(N, 0), x2 = full_action(N, 1), x3 = full_action(N, 2),
         x4 = full_action(N, 3);
  Mat<F> out(fld, 2 * e, 2 * e);
  for (long r = 0; r < e; ++r)
    for (long c = 0; c < e; ++c) {
      out.at(r, c) = x1.at(r, c);
      out.at(r, e + c) = fld.mul(s, x3.at(r, c));
      out.at(e + r, c) = x4.at(r, c);
      out.at(e + r, e + c) = x2.at(r, c);
    }
  return out;
}

// ranks of the assembled family matrices over a window of indices; the
// number of indices where the rank drops below the window maximum is what
// bounds the count of nonvanishing stable positions
struct OmegaScan {
  int lo_i = 0;
  std::vector<long> ranks;
  long max_rank = 0;
  long deficiency_count = 0;  // #{i : rank_i < max_rank}
};

template <class F>
OmegaScan omega_rank_scan(const GradedModule<F>& N, const typename F::Elem& alpha,
                          int ilo, int ihi) {
  if (ihi < ilo) throw input_error("empty scan window");
  const F& fld = N.alg->fld;
  OmegaScan s;
  s.lo_i = ilo;
  for (int i = ilo; i <= ihi; ++i) {
    long r = rank_of(omega_matrix(N, fld.pow(alpha, i)));
    s.ranks.push_back(r);
    s.max_rank = std::max(s.max_rank, r);
  }
  for (long r : s.ranks)
    if (r < s.max_rank) ++s.deficiency_count;
  return s;
}

}  // namespace gorhom
