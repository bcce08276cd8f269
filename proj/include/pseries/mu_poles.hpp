#pragma once

#include "character.hpp"

namespace pseries {

// The rank-one situations with known pole locations for the mu-function,
// labelled by the shape of the factor group. The first kind carries the
// division-algebra degree d as a parameter.
enum class RankOneCase { I, II3, II4, III1, III2, IV4, IV5 };

struct PoleCase {
  RankOneCase kind = RankOneCase::I;
  int d = 1;
};

inline std::string pole_case_token(const PoleCase& c) {
  switch (c.kind) {
    case RankOneCase::I: return "i";
    case RankOneCase::II3: return "ii3";
    case RankOneCase::II4: return "ii4";
    case RankOneCase::III1: return "iii1";
    case RankOneCase::III2: return "iii2";
    case RankOneCase::IV4: return "iv4";
    case RankOneCase::IV5: return "iv5";
  }
  return "?";
}

inline std::optional<PoleCase> pole_case_from_token(const std::string& t, int d = 1) {
  if (t == "i") return PoleCase{RankOneCase::I, d};
  if (t == "ii3") return PoleCase{RankOneCase::II3, 1};
  if (t == "ii4") return PoleCase{RankOneCase::II4, 1};
  if (t == "iii1") return PoleCase{RankOneCase::III1, 1};
  if (t == "iii2") return PoleCase{RankOneCase::III2, 1};
  if (t == "iv4") return PoleCase{RankOneCase::IV4, 1};
  if (t == "iv5") return PoleCase{RankOneCase::IV5, 1};
  return std::nullopt;
}

// Denominator bound: candidate poles lie in (1/k) Z.
inline int pole_case_k(const PoleCase& c, bool refined = false) {
  switch (c.kind) {
    case RankOneCase::I: return 2 * c.d;
    case RankOneCase::II3: return 4;
    case RankOneCase::II4: return 6;
    case RankOneCase::III1: return 6;
    case RankOneCase::III2: return refined ? 10 : 20;
    case RankOneCase::IV4: return refined ? 10 : 20;
    case RankOneCase::IV5: return refined ? 14 : 28;
  }
  return 1;
}

namespace detail {

inline std::vector<Rat> window_lattice(int k) {
  std::vector<Rat> out;
  for (int n = -k / 2; n <= k / 2; ++n) out.emplace_back(n, k);
  return out;
}

}  // namespace detail

// Candidate pole locations inside the window [-1/2, 1/2], sorted ascending.
inline std::vector<Rat> rank1_pole_set(const PoleCase& c, bool refined = false) {
  std::vector<Rat> out;
  switch (c.kind) {
    case RankOneCase::I: {
      require(c.d >= 1, "the division-algebra degree must be positive");
      for (int e = 1; e <= c.d; ++e)
        if (c.d % e == 0) {
          out.emplace_back(1, 2 * e);
          out.emplace_back(-1, 2 * e);
        }
      break;
    }
    case RankOneCase::II3:
      out = {Rat(0), Rat(1, 4), Rat(-1, 4), Rat(1, 2), Rat(-1, 2)};
      break;
    case RankOneCase::II4:
      out = detail::window_lattice(6);
      break;
    case RankOneCase::III1:
      out = {Rat(0), Rat(1, 6), Rat(-1, 6), Rat(1, 2), Rat(-1, 2)};
      break;
    case RankOneCase::III2:
    case RankOneCase::IV4:
      out = detail::window_lattice(refined ? 10 : 20);
      break;
    case RankOneCase::IV5:
      out = detail::window_lattice(refined ? 14 : 28);
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool silberger_window_check(const Rat& s) {
  return s >= Rat(-1, 2) && s <= Rat(1, 2);
}

// One factor of the product decomposition: the reduced positives outside the
// Levi, grouped by positive proportionality of their projections away from
// the span of the parabolic subset.
struct MuClass {
  Weight direction;          // canonical projected direction
  std::vector<int> members;  // reduced-root indices, ascending
};

namespace detail {

inline Weight project_away_from_levi(const RootDatum& rd, const ParabolicSubset& I,
                                     const Weight& v) {
  std::vector<int> iroots;
  for (int pos : I.simple_positions) iroots.push_back(rd.simples[pos]);
  int k = static_cast<int>(iroots.size());
  if (k == 0) return v;
  std::vector<Weight> gram(k, Weight(k, Rat(0)));
  Weight rhs(k, Rat(0));
  for (int i = 0; i < k; ++i) {
    Weight bi = to_weight(rd.reduced_pos[iroots[i]]);
    rhs[i] = weight_dot(bi, v);
    for (int j = 0; j < k; ++j)
      gram[i][j] = weight_dot(bi, to_weight(rd.reduced_pos[iroots[j]]));
  }
  auto t = solve_rational(gram, rhs);
  require(t.has_value(), "degenerate Gram matrix in Levi projection");
  Weight proj(v.size(), Rat(0));
  for (int i = 0; i < k; ++i)
    proj = weight_add(proj, weight_scale((*t)[i], to_weight(rd.reduced_pos[iroots[i]])));
  return weight_sub(v, proj);
}

inline Weight positive_direction(const Weight& v) {
  for (const Rat& x : v)
    if (x != 0) {
      Rat a = x < 0 ? -x : x;
      return weight_scale(Rat(1) / a, v);
    }
  fail("zero vector has no direction");
}

}  // namespace detail

inline std::vector<MuClass> mu_factorization(const RootDatum& rd, const ParabolicSubset& I) {
  std::vector<MuClass> classes;
  for (size_t i = 0; i < rd.reduced_pos.size(); ++i) {
    if (rd.in_levi(static_cast<int>(i), I)) continue;
    Weight dir = detail::positive_direction(
        detail::project_away_from_levi(rd, I, to_weight(rd.reduced_pos[i])));
    bool placed = false;
    for (auto& cls : classes)
      if (cls.direction == dir) {
        cls.members.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    if (!placed) classes.push_back({dir, {static_cast<int>(i)}});
  }
  return classes;
}

struct RegularityResult {
  bool regular = true;
  std::optional<WeylElement> witness;  // a fixing non-identity element
};

inline RegularityResult is_g_regular(const SmoothCharGroup& g, const RootDatum& rd,
                                     const Character& chi,
                                     long long budget = 10000000LL) {
  for (const auto& w : weyl_elements(rd, rd.full_subset(), budget)) {
    if (w.is_identity()) continue;
    if (char_equal(g, weyl_act(g, rd, w, chi), chi)) return {false, w};
  }
  return {true, std::nullopt};
}

}  // namespace pseries
