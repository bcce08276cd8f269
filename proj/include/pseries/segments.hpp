#pragma once

#include "rational.hpp"
#include "verdict.hpp"

#include <map>
#include <optional>

namespace pseries {

// One unramified-twist segment datum: an inertial class label, the twist
// exponent k, and the class's torsion step inside a degree-d division algebra.
struct SegmentDatum {
  int class_id = 0;
  Int k = 0;
  int step = 1;
  int d = 1;

  int chain_span() const { return d / step; }  // e: a linked chain has e+1 members
  bool operator==(const SegmentDatum&) const = default;
};

inline void validate_segments(const std::vector<SegmentDatum>& segs) {
  std::map<int, int> class_step;
  for (size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    require(s.d >= 1, "segment " + std::to_string(i + 1) + ": d must be positive");
    require(s.step >= 1 && s.d % s.step == 0,
            "segment " + std::to_string(i + 1) + ": step must divide d");
    require(s.d == segs[0].d, "segments disagree on the division-algebra degree d");
    auto [it, fresh] = class_step.emplace(s.class_id, s.step);
    require(fresh || it->second == s.step,
            "segments of class " + std::to_string(s.class_id) + " disagree on step");
  }
}

namespace detail {

inline bool extend_chain(const std::vector<SegmentDatum>& segs, std::vector<int>& chain,
                         std::vector<bool>& used, int length) {
  if (static_cast<int>(chain.size()) == length) return true;
  const SegmentDatum& prev = segs[chain.back()];
  for (int j = 0; j < static_cast<int>(segs.size()); ++j) {
    if (used[j] || segs[j].class_id != prev.class_id || segs[j].k != prev.k + 1) continue;
    chain.push_back(j);
    used[j] = true;
    if (extend_chain(segs, chain, used, length)) return true;
    chain.pop_back();
    used[j] = false;
  }
  return false;
}

}  // namespace detail

// Lexicographically first linked chain of e+1 segments of one class with
// consecutive exponents, as 1-based positions; nullopt when none exists.
inline std::optional<std::vector<int>> detect_bad_chain(const std::vector<SegmentDatum>& segs) {
  validate_segments(segs);
  int n = static_cast<int>(segs.size());
  for (int i = 0; i < n; ++i) {
    int length = segs[i].chain_span() + 1;
    if (length > n) continue;
    std::vector<int> chain{i};
    std::vector<bool> used(n, false);
    used[i] = true;
    if (detail::extend_chain(segs, chain, used, length)) {
      for (int& idx : chain) ++idx;
      return chain;
    }
  }
  return std::nullopt;
}

struct NormalizeResult {
  std::vector<SegmentDatum> segments;
  std::vector<int> perm;  // perm[new position] = old position, 0-based
  long long swaps = 0;
};

// Standard order: group by class in order of first occurrence, then push
// larger exponents left through gap-two-or-more transpositions. Only
// unlinked neighbours ever exchange, so the chain status is preserved; this
// is asserted at the end.
inline NormalizeResult normalize_segments(const std::vector<SegmentDatum>& segs) {
  validate_segments(segs);
  bool had_chain = detect_bad_chain(segs).has_value();

  NormalizeResult res;
  std::vector<int> class_order;
  for (const auto& s : segs)
    if (std::find(class_order.begin(), class_order.end(), s.class_id) == class_order.end())
      class_order.push_back(s.class_id);
  for (int cls : class_order)
    for (size_t i = 0; i < segs.size(); ++i)
      if (segs[i].class_id == cls) {
        res.segments.push_back(segs[i]);
        res.perm.push_back(static_cast<int>(i));
      }

  // Each swap strictly decreases sum(position * k), so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t l = 0; l + 1 < res.segments.size(); ++l) {
      SegmentDatum& a = res.segments[l];
      SegmentDatum& b = res.segments[l + 1];
      if (a.class_id == b.class_id && a.k < b.k && b.k - a.k >= 2) {
        std::swap(a, b);
        std::swap(res.perm[l], res.perm[l + 1]);
        ++res.swaps;
        changed = true;
      }
    }
  }

  require(detect_bad_chain(res.segments).has_value() == had_chain,
          "normalization altered the linked-chain status");
  return res;
}

inline Verdict check_glnd_banach(const std::vector<SegmentDatum>& segs) {
  validate_segments(segs);
  Verdict v;
  v.theorem_id = "glnd-banach";
  auto chain = detect_bad_chain(segs);
  if (chain) {
    std::string text = "segments";
    for (size_t i = 0; i < chain->size(); ++i)
      text += (i ? "," : " ") + std::to_string((*chain)[i]);
    text += " form a linked chain";
    Witness w{"chain", *chain, text};
    v.add("no-linked-chain", "no class contains a full chain of consecutive unramified twists",
          false, w);
    v.witness = w;
    v.status = Status::Inconclusive;
    v.message = "a linked chain obstructs the sufficient condition";
  } else {
    v.add("no-linked-chain", "no class contains a full chain of consecutive unramified twists",
          true);
    v.status = Status::Irreducible;
    v.message = "no linked chain exists";
  }
  return v;
}

}  // namespace pseries
