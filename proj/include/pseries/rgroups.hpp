#pragma once

#include "smooth_group.hpp"

namespace pseries {

using F2Vec = std::vector<std::uint8_t>;

inline int f2_rank(std::vector<F2Vec> columns) {
  int rank = 0;
  size_t rows = 0;
  for (const auto& c : columns) rows = std::max(rows, c.size());
  for (auto& c : columns) c.resize(rows, 0);
  std::vector<F2Vec> basis;
  for (auto col : columns) {
    for (const auto& b : basis) {
      size_t lead = 0;
      while (lead < rows && !b[lead]) ++lead;
      if (lead < rows && col[lead])
        for (size_t i = 0; i < rows; ++i) col[i] ^= b[i];
    }
    if (std::find(col.begin(), col.end(), 1) != col.end()) {
      basis.push_back(col);
      // keep each basis vector's leading row unique
      std::sort(basis.begin(), basis.end(), [rows](const F2Vec& x, const F2Vec& y) {
        size_t lx = 0, ly = 0;
        while (lx < rows && !x[lx]) ++lx;
        while (ly < rows && !y[ly]) ++ly;
        return lx < ly;
      });
      ++rank;
    }
  }
  return rank;
}

inline bool f2_independent(const std::vector<F2Vec>& columns) {
  return f2_rank(columns) == static_cast<int>(columns.size());
}

struct RGroupResult {
  int r = 0;                   // F2 dimension of the subset group
  std::vector<IVec> eligible;  // deduped eligible values, input order of first occurrence
  bool trivial_present = false;
  bool trivial_changes_rank = false;
  std::vector<std::string> notes;
};

namespace detail {

// Filter to order-dividing-2 values and dedupe by value.
inline std::vector<IVec> two_torsion_values(const SmoothCharGroup& g,
                                            const std::vector<IVec>& chars) {
  std::vector<IVec> out;
  for (const auto& v : chars) {
    if (!g.order_divides_two(v)) continue;
    bool dup = false;
    for (const auto& w : out)
      if (g.equal(v, w)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(v);
  }
  return out;
}

inline int solve_even_sum_rank(const SmoothCharGroup& g, const std::vector<IVec>& vals) {
  int k = static_cast<int>(vals.size());
  std::vector<F2Vec> cols;
  for (const auto& v : vals) {
    F2Vec c = g.two_torsion_bits(v);
    c.push_back(1);  // parity row
    cols.push_back(c);
  }
  return k - f2_rank(cols);
}

}  // namespace detail

// Dimension of the group of even-size subsets of the given order-two values
// whose product is trivial.
inline RGroupResult rgroup_rank_gso(const SmoothCharGroup& g, const std::vector<IVec>& chars) {
  RGroupResult res;
  res.eligible = detail::two_torsion_values(g, chars);
  res.r = detail::solve_even_sum_rank(g, res.eligible);
  std::vector<IVec> nontrivial;
  for (const auto& v : res.eligible) {
    if (g.is_trivial(v)) res.trivial_present = true;
    else nontrivial.push_back(v);
  }
  if (res.trivial_present) {
    int r_without = detail::solve_even_sum_rank(g, nontrivial);
    if (r_without != res.r) {
      res.trivial_changes_rank = true;
      res.notes.push_back("including the trivial value raises the rank from " +
                          std::to_string(r_without) + " to " + std::to_string(res.r));
    }
  }
  return res;
}

namespace detail {

inline int solve_coupled_rank(const SmoothCharGroup& g, const std::vector<IVec>& vals,
                              const IVec& twist, bool twist_two_torsion) {
  int k = static_cast<int>(vals.size());
  std::vector<F2Vec> cols;
  size_t bit_rows = 0;
  for (const auto& v : vals) {
    F2Vec c = g.two_torsion_bits(g.norm_compose(v));
    bit_rows = std::max(bit_rows, c.size());
    cols.push_back(c);
  }
  F2Vec tcol;
  if (twist_two_torsion) {
    tcol = g.two_torsion_bits(twist);
    bit_rows = std::max(bit_rows, tcol.size());
  } else {
    // odd subsets can never close; encode t = 0 as an extra equation row
    tcol.assign(bit_rows, 0);
  }
  for (auto& c : cols) {
    c.resize(bit_rows, 0);
    c.push_back(1);  // parity coupling: t + sum x_i = 0
    if (!twist_two_torsion) c.push_back(0);
  }
  tcol.resize(bit_rows, 0);
  tcol.push_back(1);
  if (!twist_two_torsion) tcol.push_back(1);  // forces t = 0
  cols.push_back(tcol);
  return (k + 1) - f2_rank(cols);
}

}  // namespace detail

// Coupled variant: a subset closes when the product of the norm composites,
// times the conjugation defect of the stored extension character raised to the
// subset parity, is trivial. Values whose norm composite cancels that defect
// outright are not eligible.
inline RGroupResult rgroup_rank_gso_star(const SmoothCharGroup& g,
                                         const std::vector<IVec>& chars,
                                         const IVec& chi_n_ext) {
  RGroupResult res;
  IVec defect = g.conj_minus_id(chi_n_ext);
  for (const auto& v : detail::two_torsion_values(g, chars)) {
    if (g.is_trivial(ivec_add(g.norm_compose(v), defect))) continue;
    res.eligible.push_back(v);
  }
  bool defect_two_torsion = g.order_divides_two(defect);
  res.r = detail::solve_coupled_rank(g, res.eligible, defect, defect_two_torsion);
  std::vector<IVec> nontrivial;
  for (const auto& v : res.eligible) {
    if (g.is_trivial(v)) res.trivial_present = true;
    else nontrivial.push_back(v);
  }
  if (res.trivial_present) {
    int r_without = detail::solve_coupled_rank(g, nontrivial, defect, defect_two_torsion);
    if (r_without != res.r) {
      res.trivial_changes_rank = true;
      res.notes.push_back("including the trivial value raises the rank from " +
                          std::to_string(r_without) + " to " + std::to_string(res.r));
    }
  }
  return res;
}

// Exhaustive oracle: number of closed subsets, the empty subset included.
inline Int subset_count_gso(const SmoothCharGroup& g, const std::vector<IVec>& vals) {
  require(vals.size() <= 20, "subset enumeration is capped at 20 characters");
  Int count = 0;
  size_t k = vals.size();
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    IVec sum = g.zero();
    int parity = 0;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t{1} << i)) {
        sum = ivec_add(sum, vals[i]);
        parity ^= 1;
      }
    if (parity == 0 && g.is_trivial(sum)) ++count;
  }
  return count;
}

inline Int subset_count_gso_star(const SmoothCharGroup& g, const std::vector<IVec>& vals,
                                 const IVec& chi_n_ext) {
  require(vals.size() <= 20, "subset enumeration is capped at 20 characters");
  IVec defect = g.conj_minus_id(chi_n_ext);
  Int count = 0;
  size_t k = vals.size();
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    IVec sum = g.zero();
    int parity = 0;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t{1} << i)) {
        sum = ivec_add(sum, g.norm_compose(vals[i]));
        parity ^= 1;
      }
    if (parity) sum = ivec_add(sum, defect);
    if (g.is_trivial(sum)) ++count;
  }
  return count;
}

}  // namespace pseries
