#pragma once

// Decision engines for principal-series irreducibility. Each engine evaluates
// one published criterion over the exact character model and returns a Verdict
// whose trace lists every condition of that criterion exactly once.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <pseries/character.hpp>
#include <pseries/mu_poles.hpp>
#include <pseries/rgroups.hpp>
#include <pseries/verdict.hpp>

namespace pseries {

// ---------------------------------------------------------------------------
// Residue-characteristic assumption.

struct PrimeCheck {
  bool ok = true;
  std::string warning;
};

// The Banach criteria for presets whose absolute root system has components of
// type B or C assume p > 2. Type A presets are exempt; the p > 3 exceptional
// case concerns G2 only and never arises for these presets.
inline PrimeCheck check_assumption_p(const RootDatum& rd) {
  bool bc = rd.family == Family::Sp || rd.family == Family::SOodd ||
            rd.family == Family::Ueven || rd.family == Family::Uodd;
  if (bc && rd.field.p == 2)
    return {false,
            "residue characteristic 2 with a type B/C component; the Banach "
            "criteria assume p > 2 (the p > 3 case concerns G2 only and never "
            "arises for these presets)"};
  return {true, ""};
}

namespace detail {

inline AlgPart alg_at(const CharCoord& c, size_t kappa) {
  return kappa < c.alg.size() ? c.alg[kappa] : AlgPart{};
}

inline size_t embedding_count(const Character& chi) {
  size_t n = 0;
  for (const auto& c : chi.coords) n = std::max(n, c.alg.size());
  return n;
}

// <dchi_kappa, alpha^vee> as an exact formal expression.
inline AlgPart alg_pairing(const Character& chi, const IVec& coroot, size_t kappa) {
  AlgPart out;
  for (size_t i = 0; i < coroot.size(); ++i)
    if (coroot[i] != 0) out += alg_at(chi.coords[i], kappa).scaled(Rat(coroot[i]));
  return out;
}

// Coroot of a possibly negative reduced root.
inline IVec coroot_of(const RootDatum& rd, const IVec& root) {
  int idx = rd.find_reduced(root);
  if (idx >= 0) return rd.coroot[idx];
  idx = rd.find_reduced(ivec_neg(root));
  require(idx >= 0, "not a plus-or-minus reduced root of this datum");
  return ivec_neg(rd.coroot[idx]);
}

inline std::string root_str(const RootDatum& rd, int idx) {
  return ivec_str(rd.reduced_pos[idx]);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Largest standard parabolic subset on which every algebraic pairing is a
// non-positive integer. Coroots of the Levi's positive roots are non-negative
// integer combinations of the selected simple coroots, so the simple-root test
// already certifies every positive root of the Levi and the subset is the
// unique maximal one. Generic entries fail the integrality test.
inline ParabolicSubset maximal_Q(const Character& chi, const RootDatum& rd) {
  require(family_is_split(rd.family),
          "the maximal-parabolic computation requires a split family preset");
  require(chi.rank() == rd.rank, "character rank does not match the datum");
  size_t kappas = detail::embedding_count(chi);
  ParabolicSubset I;
  for (size_t p = 0; p < rd.simples.size(); ++p) {
    const IVec& cv = rd.coroot[rd.simples[p]];
    bool ok = true;
    for (size_t k = 0; ok && k < std::max<size_t>(kappas, 1); ++k)
      ok = detail::alg_pairing(chi, cv, k).is_nonpositive_integer();
    if (ok) I.simple_positions.push_back(static_cast<int>(p));
  }
  return I;
}

// ---------------------------------------------------------------------------
// GL_n over the base field: no pair (i, j) may satisfy both the chain
// condition on consecutive algebraic differences and the twisted-ratio
// identity. Sufficient direction only.
inline Verdict check_gln_banach(const SmoothCharGroup& g, const Character& chi) {
  int n = chi.rank();
  require(n >= 1, "the character must have at least one coordinate");
  size_t kappas = detail::embedding_count(chi);

  auto qualifies = [&](int i, int j) {
    for (int k = i; k < j; ++k)
      for (size_t kp = 0; kp < std::max<size_t>(kappas, 1); ++kp) {
        AlgPart diff = detail::alg_at(chi.coords[k], kp) -
                       detail::alg_at(chi.coords[k + 1], kp);
        if (!diff.is_nonpositive_integer()) return false;
      }
    const CharCoord& a = chi.coords[i];
    const CharCoord& b = chi.coords[j];
    if (!g.is_trivial(ivec_sub(a.smooth, b.smooth))) return false;
    return a.s - b.s == Rat(j - i - 1);
  };

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (qualifies(i, j)) pairs.emplace_back(i, j);

  Verdict v;
  v.theorem_id = "gln-banach";
  std::string text =
      "no pair (i,j) satisfies the chain condition on consecutive algebraic "
      "differences together with the twisted-ratio identity";
  if (pairs.empty()) {
    v.add("no-linked-pair", text, true);
    v.status = Status::Irreducible;
    v.message = "no linked pair of coordinates exists";
    return v;
  }
  auto best = pairs[0];
  for (const auto& p : pairs) {
    int span = p.second - p.first, bspan = best.second - best.first;
    if (span > bspan || (span == bspan && p < best)) best = p;
  }
  Witness w{"pair",
            {best.first + 1, best.second + 1},
            "coordinates " + std::to_string(best.first + 1) + " and " +
                std::to_string(best.second + 1) +
                ": consecutive algebraic differences are non-positive integers "
                "and the ratio equals the prescribed unramified twist"};
  v.add("no-linked-pair", text, false, w);
  v.witness = w;
  v.status = Status::Inconclusive;
  v.message = std::to_string(pairs.size()) +
              " linked pair(s) obstruct the sufficient condition";
  return v;
}

// ---------------------------------------------------------------------------
// Split groups: compute the maximal parabolic subset, require every
// non-identity Weyl element of its Levi to move the delta-shifted character by
// a non-algebraic ratio at some Levi root, then require that no positive Levi
// root composes the delta-shifted character to |.|^{-1} times its algebraic
// part. Sufficient direction only.
inline Verdict check_split_banach(const SmoothCharGroup& g, const RootDatum& rd,
                                  const Character& chi,
                                  long long weyl_budget = 10000000LL) {
  require(family_is_split(rd.family),
          "the split criterion requires a split family preset");
  require(chi.rank() == rd.rank, "character rank does not match the datum");

  Verdict v;
  v.theorem_id = "split-banach";
  PrimeCheck pc = check_assumption_p(rd);
  if (!pc.ok) v.notes.push_back(pc.warning);

  ParabolicSubset I = maximal_Q(chi, rd);
  std::string iface = "{";
  for (size_t k = 0; k < I.simple_positions.size(); ++k)
    iface += (k ? "," : "") + std::to_string(I.simple_positions[k]);
  iface += "}";
  v.add("maximal-parabolic",
        "simple-root positions with non-positive integral algebraic pairings: " + iface,
        true);

  Character chid = twist_by_delta(chi, rd, Rat(-1, 2));
  std::vector<int> levi_roots;
  for (size_t idx = 0; idx < rd.reduced_pos.size(); ++idx)
    if (rd.in_levi(static_cast<int>(idx), I)) levi_roots.push_back(static_cast<int>(idx));

  auto ws = weyl_elements(rd, I, weyl_budget);
  std::optional<WeylElement> stuck;
  for (const auto& w : ws) {
    if (w.is_identity()) continue;
    WeylElement winv = w.inverse();
    bool moved = false;
    for (int idx : levi_roots) {
      IVec target = winv.act(rd.reduced_pos[idx]);
      IVec cochar = ivec_sub(detail::coroot_of(rd, target), rd.coroot[idx]);
      CharCoord d = compose_with_cochar(g, chid, cochar, rd);
      if (!g.is_trivial(d.smooth) || d.s != 0) {
        moved = true;
        break;
      }
    }
    if (!moved) {
      stuck = w;
      break;
    }
  }
  std::string reg_text =
      "every non-identity Weyl element of the Levi changes the delta-shifted "
      "character by a non-algebraic ratio at some Levi root";
  if (stuck) {
    Witness w{"weyl", {}, "fixing element " + stuck->str()};
    v.add("levi-regularity", reg_text, false, w);
    v.witness = w;
    v.status = Status::PreconditionFailed;
    v.message = "a Levi Weyl element fixes the delta-shifted character up to "
                "algebraic ratios";
    return v;
  }
  v.add("levi-regularity", reg_text, true);

  std::optional<int> hit;
  for (int idx : levi_roots) {
    CharCoord d = compose_with_cochar(g, chid, rd.coroot[idx], rd);
    if (g.is_trivial(d.smooth) && d.s == Rat(-1)) {
      hit = idx;
      break;
    }
  }
  std::string eq_text =
      "no positive Levi root composes the delta-shifted character to |.|^{-1} "
      "times its algebraic part";
  if (hit) {
    Witness w{"root", {*hit}, "root " + detail::root_str(rd, *hit)};
    v.add("no-levi-coroot-absolute-value", eq_text, false, w);
    v.witness = w;
    v.status = Status::Inconclusive;
    v.message = "a Levi root composes to |.|^{-1}; the sufficient condition fails";
    return v;
  }
  v.add("no-levi-coroot-absolute-value", eq_text, true);
  v.status = Status::Irreducible;
  v.message = "the Levi is regular and no Levi root reaches |.|^{-1}";
  return v;
}

// ---------------------------------------------------------------------------
// Semisimple rank one, split: the composed character decides. Iff criterion.
inline Verdict check_rank1_split(const SmoothCharGroup& g, const CharCoord& psi) {
  Verdict v;
  v.theorem_id = "rank1-split";
  bool smooth_trivial = g.is_trivial(psi.smooth);
  bool s_zero = psi.s == 0;
  bool alg_ok = true;
  int alg_bad = -1;
  for (size_t k = 0; k < psi.alg.size(); ++k)
    if (!psi.alg[k].is_nonpositive_integer()) {
      alg_ok = false;
      alg_bad = static_cast<int>(k);
      break;
    }
  v.add("smooth-part-trivial", "the smooth part of the composed character is trivial",
        smooth_trivial);
  v.add("unramified-exponent-zero", "the unramified exponent of the composed character is zero",
        s_zero);
  v.add("algebraic-exponents-nonpositive-integers",
        "every algebraic exponent of the composed character is a non-positive integer",
        alg_ok,
        alg_ok ? std::nullopt
               : std::optional<Witness>(Witness{
                     "coordinate", {alg_bad}, "embedding " + std::to_string(alg_bad)}));
  if (smooth_trivial && s_zero && alg_ok) {
    v.status = Status::Reducible;
    v.message = "the composed character is non-positive algebraic";
  } else {
    v.status = Status::Irreducible;
    v.message = "the composed character is not non-positive algebraic";
  }
  return v;
}

// ---------------------------------------------------------------------------
// Unitary case for split presets induced from the Borel subgroup: under the
// dominance hypothesis on the accumulated exponent vector (or the wider open
// cone driven by the rank-one pole denominators), reducible exactly when some
// simple coroot composes the character to the trivial character.
inline Verdict check_unitary_split(const SmoothCharGroup& g, const RootDatum& rd,
                                   const Character& chi,
                                   const std::map<int, PoleCase>* cone = nullptr,
                                   bool refined = false) {
  require(family_is_split(rd.family),
          "the unitary criterion requires a split family preset");
  require(chi.rank() == rd.rank, "character rank does not match the datum");

  Verdict v;
  v.theorem_id = "unitary-split";
  PrimeCheck pc = check_assumption_p(rd);
  if (!pc.ok) v.notes.push_back(pc.warning);

  Weight e = e_parameter(chi, rd);
  if (cone) {
    std::optional<int> bad;
    Rat bad_thr;
    for (size_t p = 0; p < rd.simples.size(); ++p) {
      auto it = cone->find(static_cast<int>(p));
      if (it == cone->end())
        fail("no pole case supplied for simple-root position " + std::to_string(p));
      int idx = rd.simples[p];
      Rat thr = Rat(-2 * rd.mult[idx]) / Rat(pole_case_k(it->second, refined));
      if (!(pairing(e, idx, rd) > thr)) {
        bad = static_cast<int>(p);
        bad_thr = thr;
        break;
      }
    }
    std::string text =
        "every simple pairing of the exponent vector exceeds -2n/k for the "
        "supplied rank-one pole case";
    if (bad) {
      Witness w{"root",
                {rd.simples[*bad]},
                "simple root " + detail::root_str(rd, rd.simples[*bad]) +
                    " with bound " + rat_str(bad_thr)};
      v.add("exponent-open-cone", text, false, w);
      v.witness = w;
      v.status = Status::PreconditionFailed;
      v.message = "the exponent vector leaves the open cone";
      return v;
    }
    v.add("exponent-open-cone", text, true);
  } else {
    std::optional<int> bad;
    for (size_t p = 0; p < rd.simples.size(); ++p)
      if (pairing(e, rd.simples[p], rd) < 0) {
        bad = static_cast<int>(p);
        break;
      }
    std::string text = "the accumulated exponent vector is dominant";
    if (bad) {
      Witness w{"root", {rd.simples[*bad]},
                "simple root " + detail::root_str(rd, rd.simples[*bad])};
      v.add("exponent-dominance", text, false, w);
      v.witness = w;
      v.status = Status::PreconditionFailed;
      v.message = "the exponent vector is not dominant";
      return v;
    }
    v.add("exponent-dominance", text, true);
  }

  std::optional<int> hit;
  for (size_t p = 0; p < rd.simples.size() && !hit; ++p) {
    CharCoord psi = compose_with_cochar(g, chi, rd.coroot[rd.simples[p]], rd);
    if (coord_is_trivial(g, psi)) hit = static_cast<int>(p);
  }
  std::string text =
      "some simple coroot composes the character to the trivial character";
  if (hit) {
    int idx = rd.simples[*hit];
    Witness w{"root", {idx}, "simple root " + detail::root_str(rd, idx)};
    v.add("simple-coroot-triviality", text, true, w);
    v.witness = w;
    v.status = Status::Reducible;
    v.message = "the character extends along a simple root";
  } else {
    v.add("simple-coroot-triviality", text, false);
    v.status = Status::Irreducible;
    v.message = "no simple coroot composes to the trivial character";
  }
  return v;
}

// ---------------------------------------------------------------------------
// Classical-family bullet engines.

namespace detail {

struct BulletSink {
  Verdict v;
  bool all_hold = true;
  void bullet(const std::string& id, const std::string& text, bool holds,
              std::optional<Witness> w = std::nullopt) {
    if (!holds && all_hold) {
      all_hold = false;
      v.witness = w;
    }
    v.add(id, text, holds, std::move(w));
  }
};

inline Witness pair_witness(int i, int j, const std::string& what) {
  return {"pair",
          {i + 1, j + 1},
          "coordinates " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
              ": " + what};
}

inline Witness coord_witness(int i, const std::string& what) {
  return {"coordinate", {i + 1}, "coordinate " + std::to_string(i + 1) + ": " + what};
}

// Whether (v, s) equals |.|^t for some t in targets.
inline bool is_abs_power(const SmoothCharGroup& g, const IVec& v, const Rat& s,
                         const std::vector<Rat>& targets) {
  if (!g.is_trivial(v)) return false;
  return std::find(targets.begin(), targets.end(), s) != targets.end();
}

// Indices of coordinates in [0, count) whose full character has order
// dividing two, i.e. s = 0 and twice the smooth part trivial.
inline std::vector<int> order_div_two_coords(const SmoothCharGroup& g,
                                             const Character& chi, int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i)
    if (chi.coords[i].s == 0 && g.order_divides_two(chi.coords[i].smooth))
      out.push_back(i);
  return out;
}

// First-occurrence representatives of distinct values among the given coords.
inline std::vector<int> distinct_value_reps(const SmoothCharGroup& g,
                                            const Character& chi,
                                            const std::vector<int>& coords) {
  std::vector<int> reps;
  for (int i : coords) {
    bool seen = false;
    for (int r : reps)
      if (g.equal(chi.coords[i].smooth, chi.coords[r].smooth)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(i);
  }
  return reps;
}

// Note order-4 coordinates: their squares have order two, but only order-two
// characters enter the subset conditions under the reading implemented here.
inline void note_order_four(const SmoothCharGroup& g, const Character& chi,
                            int count, Verdict& v) {
  for (int i = 0; i < count; ++i) {
    const CharCoord& c = chi.coords[i];
    if (c.s == 0 && g.exact_order_two(ivec_scale(Int(2), c.smooth)))
      v.notes.push_back("coordinate " + std::to_string(i + 1) +
                        " has order 4: its square has order two, but only "
                        "order-two values enter the subset condition");
  }
}

// Smallest nonempty subset of values (by size, then lexicographically by
// index mask) satisfying pred on the sum of the selected smooth vectors.
// Returns 0-based positions into vals; empty when none exists or too many.
template <typename Pred>
inline std::vector<int> smallest_subset(size_t k, Pred pred) {
  if (k > 20) return {};
  std::vector<int> best;
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    std::vector<int> sel;
    for (size_t i = 0; i < k; ++i)
      if (mask & (1UL << i)) sel.push_back(static_cast<int>(i));
    if (!pred(sel)) continue;
    if (best.empty() || sel.size() < best.size()) best = sel;
  }
  return best;
}

inline std::string index_list(const std::vector<int>& idx) {
  std::string out;
  for (size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
  return out;
}

}  // namespace detail

// Shared bullet evaluation for the six classical presets. `banach` selects the
// one-sided |.|^{-1} targets and the subset-relation bullets; otherwise the
// two-sided smooth criteria are evaluated.
namespace detail {

inline void classical_bullets(const SmoothCharGroup& g, const RootDatum& rd,
                              const Character& chi, bool banach, BulletSink& sink) {
  const std::vector<Rat> one = banach ? std::vector<Rat>{Rat(-1)}
                                      : std::vector<Rat>{Rat(1), Rat(-1)};
  const std::vector<Rat> half = banach ? std::vector<Rat>{Rat(-1, 2)}
                                       : std::vector<Rat>{Rat(1, 2), Rat(-1, 2)};
  const std::string abs_text = banach ? "|.|^{-1}" : "|.|^{+1} or |.|^{-1}";
  const std::string habs_text = banach ? "|.|^{-1/2}" : "|.|^{+1/2} or |.|^{-1/2}";
  auto coord = [&](int i) -> const CharCoord& { return chi.coords[i]; };

  // Pair bullets over a coordinate range, optionally including i = j and the
  // conjugate-product variant for extension coordinates.
  auto ratio_bullet = [&](int count, bool include_diag, const std::string& id) {
    std::optional<Witness> w;
    bool holds = true;
    for (int i = 0; holds && i < count; ++i)
      for (int j = include_diag ? i : i + 1; holds && j < count; ++j) {
        if (i == j) {
          IVec sq = ivec_scale(Int(2), coord(i).smooth);
          if (is_abs_power(g, sq, coord(i).s * 2, one)) {
            holds = false;
            w = coord_witness(i, "its square equals " + abs_text);
          }
          continue;
        }
        IVec ratio = ivec_sub(coord(i).smooth, coord(j).smooth);
        if (is_abs_power(g, ratio, coord(i).s - coord(j).s, one)) {
          holds = false;
          w = pair_witness(i, j, "the ratio equals " + abs_text);
          continue;
        }
        if (rd.tags[i] == FieldTag::F) {
          IVec prod = ivec_add(coord(i).smooth, coord(j).smooth);
          if (is_abs_power(g, prod, coord(i).s + coord(j).s, one)) {
            holds = false;
            w = pair_witness(i, j, "the product equals " + abs_text);
          }
        }
      }
    sink.bullet(id,
                std::string("no ratio or product over pairs i ") +
                    (include_diag ? "<= j" : "< j") + " equals " + abs_text,
                holds, w);
  };

  auto conjugate_pair_bullet = [&](int count, const std::string& id) {
    std::optional<Witness> w;
    bool holds = true;
    for (int i = 0; holds && i < count; ++i)
      for (int j = i + 1; holds && j < count; ++j) {
        IVec prod = ivec_add(coord(i).smooth, g.conjugate(coord(j).smooth));
        if (is_abs_power(g, prod, coord(i).s + coord(j).s, one)) {
          holds = false;
          w = pair_witness(i, j, "the conjugate product equals " + abs_text);
        }
      }
    sink.bullet(id, "no conjugate product over a pair i < j equals " + abs_text,
                holds, w);
  };

  switch (rd.family) {
    case Family::Sp: {
      int n = rd.rank;
      ratio_bullet(n, false, "pair-ratio-not-absolute-value");
      {
        std::optional<Witness> w;
        bool holds = true;
        for (int i = 0; holds && i < n; ++i)
          if (is_abs_power(g, coord(i).smooth, coord(i).s, one)) {
            holds = false;
            w = coord_witness(i, "the coordinate equals " + abs_text);
          }
        sink.bullet("coordinate-not-absolute-value",
                    "no coordinate equals " + abs_text, holds, w);
      }
      if (!banach) {
        std::optional<Witness> w;
        bool holds = true;
        for (int i = 0; holds && i < n; ++i)
          if (coord(i).s == 0 && g.exact_order_two(coord(i).smooth)) {
            holds = false;
            w = coord_witness(i, "the coordinate has order two");
          }
        sink.bullet("coordinate-not-order-two", "no coordinate has order two",
                    holds, w);
      } else {
        note_order_four(g, chi, n, sink.v);
        std::vector<int> reps = distinct_value_reps(g, chi, order_div_two_coords(g, chi, n));
        std::vector<int> vals;
        for (int r : reps)
          if (!g.is_trivial(chi.coords[r].smooth)) vals.push_back(r);
        std::vector<F2Vec> cols;
        for (int r : vals) cols.push_back(g.two_torsion_bits(chi.coords[r].smooth));
        bool holds = f2_independent(cols);
        std::optional<Witness> w;
        if (!holds) {
          auto sub = smallest_subset(vals.size(), [&](const std::vector<int>& sel) {
            IVec sum = g.zero();
            for (int s : sel) sum = ivec_add(sum, chi.coords[vals[s]].smooth);
            return g.is_trivial(sum);
          });
          std::vector<int> coords;
          for (int s : sub) coords.push_back(vals[s] + 1);
          w = sub.empty()
                  ? Witness{"subset", {},
                            "a dependent subset exists but enumeration is "
                            "capped at 20 values"}
                  : Witness{"subset", coords,
                            "distinct order-two values at coordinates " +
                                index_list(coords) +
                                " multiply to the trivial character"};
        }
        sink.bullet("order-two-values-independent",
                    "the distinct order-two values are F2-linearly independent",
                    holds, w);
      }
      break;
    }
    case Family::SOodd: {
      ratio_bullet(rd.rank, true, "pair-ratio-not-absolute-value");
      break;
    }
    case Family::SOeven: {
      int n = rd.rank;
      ratio_bullet(n, false, "pair-ratio-not-absolute-value");
      if (!banach) {
        std::vector<int> reps = distinct_value_reps(g, chi, order_div_two_coords(g, chi, n));
        bool holds = reps.size() <= 1;
        std::optional<Witness> w;
        if (!holds)
          w = pair_witness(reps[0], reps[1], "two distinct values square to the trivial character");
        sink.bullet("at-most-one-order-dividing-two-value",
                    "at most one distinct value squares to the trivial character",
                    holds, w);
      } else {
        note_order_four(g, chi, n, sink.v);
        std::vector<IVec> vals;
        for (int i = 0; i < n; ++i)
          if (coord(i).s == 0) vals.push_back(coord(i).smooth);
        RGroupResult rg = rgroup_rank_gso(g, vals);
        for (const auto& note : rg.notes) sink.v.notes.push_back(note);
        bool holds = rg.r == 0;
        std::optional<Witness> w;
        if (!holds) {
          auto sub = smallest_subset(rg.eligible.size(), [&](const std::vector<int>& sel) {
            if (sel.size() % 2 != 0) return false;
            IVec sum = g.zero();
            for (int s : sel) sum = ivec_add(sum, rg.eligible[s]);
            return g.is_trivial(sum);
          });
          std::vector<int> pos(sub.begin(), sub.end());
          w = sub.empty()
                  ? Witness{"subset", {},
                            "a relation exists but enumeration is capped at 20 values"}
                  : Witness{"subset", pos,
                            "an even-size subset of the order-dividing-two values "
                            "(positions " + index_list(pos) +
                                " in the eligible list) multiplies to the trivial "
                                "character"};
        }
        sink.bullet("no-even-product-relation",
                    "no nonempty even-size subset of the order-dividing-two values "
                    "multiplies to the trivial character",
                    holds, w);
      }
      break;
    }
    case Family::SOstar: {
      int nb = rd.rank - 1;  // base-field coordinates
      const IVec& u = coord(rd.rank - 1).smooth;
      bool chin_sq_trivial = g.trivial_on_norm_one(ivec_scale(Int(2), u));
      IVec defect = g.conj_minus_id(u);
      ratio_bullet(nb, false, "base-pair-ratio-not-absolute-value");
      {
        std::optional<Witness> w;
        bool holds = true;
        std::string text = "no norm composite twisted by the norm-one coordinate equals " +
                           abs_text + " (evaluated when the norm-one square is trivial)";
        if (chin_sq_trivial) {
          for (int i = 0; holds && i < nb; ++i) {
            IVec combo = ivec_add(g.norm_compose(coord(i).smooth), defect);
            if (is_abs_power(g, combo, coord(i).s, one)) {
              holds = false;
              w = coord_witness(i, "the norm composite twisted by the norm-one "
                                   "coordinate equals " + abs_text);
            }
          }
        }
        sink.bullet("norm-twist-not-absolute-value", text, holds, w);
      }
      if (!banach) {
        {
          std::optional<Witness> w;
          bool holds = true;
          std::string text =
              "at most one distinct base value squares to the trivial character "
              "(evaluated when the norm-one square is non-trivial)";
          if (!chin_sq_trivial) {
            std::vector<int> reps =
                distinct_value_reps(g, chi, order_div_two_coords(g, chi, nb));
            holds = reps.size() <= 1;
            if (!holds)
              w = pair_witness(reps[0], reps[1],
                               "two distinct base values square to the trivial character");
          }
          sink.bullet("at-most-one-order-dividing-two-value", text, holds, w);
        }
        {
          std::optional<Witness> w;
          bool holds = true;
          std::string text =
              "every base value squaring to the trivial character has trivial "
              "norm-one twist (evaluated when the norm-one square is trivial)";
          if (chin_sq_trivial) {
            for (int i = 0; holds && i < nb; ++i) {
              if (!(coord(i).s == 0 && g.order_divides_two(coord(i).smooth))) continue;
              IVec combo = ivec_add(g.norm_compose(coord(i).smooth), defect);
              if (!g.is_trivial(combo)) {
                holds = false;
                w = coord_witness(i, "the value squares to the trivial character but "
                                     "its norm-one twist is non-trivial");
              }
            }
          }
          sink.bullet("order-two-forces-norm-twist-trivial", text, holds, w);
        }
      } else {
        note_order_four(g, chi, nb, sink.v);
        std::vector<IVec> vals;
        for (int i = 0; i < nb; ++i)
          if (coord(i).s == 0) vals.push_back(coord(i).smooth);
        RGroupResult rg = rgroup_rank_gso_star(g, vals, u);
        for (const auto& note : rg.notes) sink.v.notes.push_back(note);
        bool holds = rg.r == 0;
        std::optional<Witness> w;
        if (!holds) {
          auto sub = smallest_subset(rg.eligible.size(), [&](const std::vector<int>& sel) {
            IVec sum = g.zero();
            for (int s : sel) sum = ivec_add(sum, g.norm_compose(rg.eligible[s]));
            if (sel.size() % 2 != 0) sum = ivec_add(sum, defect);
            return g.is_trivial(sum);
          });
          std::vector<int> pos(sub.begin(), sub.end());
          w = sub.empty()
                  ? Witness{"subset", {},
                            "a relation exists but enumeration is capped at 20 values"}
                  : Witness{"subset", pos,
                            "a subset of the eligible values (positions " +
                                index_list(pos) +
                                ") satisfies the parity-dependent product relation"};
        }
        sink.bullet("no-eligible-subset-relation",
                    "no nonempty subset of the eligible values satisfies the "
                    "parity-dependent product relation",
                    holds, w);
      }
      break;
    }
    case Family::Ueven:
    case Family::Uodd: {
      bool odd = rd.family == Family::Uodd;
      require(g.has_omega(),
              "the unitary presets require a distinguished omega_EF element in "
              "the smooth group");
      int ne = odd ? rd.rank - 1 : rd.rank;  // extension-field coordinates
      IVec defect = odd ? g.conj_minus_id(coord(rd.rank - 1).smooth) : g.zero();
      auto combo = [&](int i) { return ivec_add(coord(i).smooth, defect); };
      {
        std::optional<Witness> w;
        bool holds = true;
        for (int i = 0; holds && i < ne; ++i)
          for (int j = i + 1; holds && j < ne; ++j) {
            IVec ratio = ivec_sub(coord(i).smooth, coord(j).smooth);
            if (is_abs_power(g, ratio, coord(i).s - coord(j).s, one)) {
              holds = false;
              w = pair_witness(i, j, "the ratio equals " + abs_text);
            }
          }
        sink.bullet("pair-ratio-not-absolute-value",
                    "no pair ratio over i < j equals " + abs_text, holds, w);
      }
      conjugate_pair_bullet(ne, "pair-conjugate-product-not-absolute-value");
      if (odd) {
        std::optional<Witness> w;
        bool holds = true;
        for (int i = 0; holds && i < ne; ++i)
          if (is_abs_power(g, combo(i), coord(i).s, one)) {
            holds = false;
            w = coord_witness(i, "the norm-one twist equals " + abs_text);
          }
        sink.bullet("norm-one-twist-not-absolute-value",
                    "no coordinate twisted by the norm-one coordinate equals " + abs_text,
                    holds, w);
      }
      {
        std::optional<Witness> w;
        bool holds = true;
        for (int i = 0; holds && i < ne; ++i) {
          bool s_hit = std::find(half.begin(), half.end(), coord(i).s) != half.end();
          if (!s_hit) continue;
          IVec rest = g.restrict_to_base(combo(i));
          bool rest_hit = odd ? (g.has_omega() && g.equal(rest, g.omega()))
                              : g.is_trivial(rest);
          if (rest_hit) {
            holds = false;
            w = coord_witness(i, std::string("the character is ") +
                                     (odd ? "omega_EF" : "a base-trivial twist") +
                                     " times " + habs_text);
          }
        }
        sink.bullet(odd ? "no-half-twist-with-omega-restriction"
                        : "no-half-twist-with-base-trivial-restriction",
                    odd ? "no norm-one twist equals a character restricting to "
                          "omega_EF times " + habs_text
                        : "no coordinate equals a base-trivial character times " + habs_text,
                    holds, w);
      }
      if (odd) {
        std::optional<Witness> w;
        bool holds = true;
        for (int i = 0; holds && i < ne; ++i) {
          bool twist_trivial = coord(i).s == 0 && g.is_trivial(combo(i));
          bool rest_trivial =
              coord(i).s == 0 && g.is_trivial(g.restrict_to_base(combo(i)));
          // The twist must be trivial outright or restrict non-trivially.
          if (!twist_trivial && rest_trivial) {
            holds = false;
            w = coord_witness(i, "the norm-one twist is non-trivial but restricts "
                                 "to the trivial character");
          }
        }
        sink.bullet("norm-one-twist-trivial-or-restriction-nontrivial",
                    "every norm-one twist is trivial or restricts non-trivially",
                    holds, w);
      } else {
        // Coordinates restricting to omega_EF.
        std::vector<int> qual;
        for (int i = 0; i < ne; ++i)
          if (coord(i).s == 0 && g.has_omega() &&
              g.equal(g.restrict_to_base(coord(i).smooth), g.omega()))
            qual.push_back(i);
        if (!banach) {
          bool holds = qual.empty();
          std::optional<Witness> w;
          if (!holds)
            w = coord_witness(qual[0], "the coordinate restricts to omega_EF");
          sink.bullet("no-coordinate-restricting-to-omega",
                      "no coordinate restricts to omega_EF", holds, w);
        } else {
          std::vector<int> reps = distinct_value_reps(g, chi, qual);
          bool holds = reps.size() <= 1;
          std::optional<Witness> w;
          if (!holds)
            w = pair_witness(reps[0], reps[1],
                             "two distinct values restrict to omega_EF");
          sink.bullet("at-most-one-coordinate-restricting-to-omega",
                      "at most one distinct value restricts to omega_EF", holds, w);
        }
      }
      break;
    }
    default:
      fail("the classical criteria require one of the six classical family presets");
  }
}

inline void require_classical_smooth(const RootDatum& rd, const Character& chi) {
  require(family_is_classical_group(rd.family),
          "the classical criteria require one of the six classical family presets");
  require(chi.rank() == rd.rank, "character rank does not match the datum");
  for (int i = 0; i < chi.rank(); ++i)
    if (!chi.coords[i].alg_all_zero())
      fail("the classical criteria require a smooth character (coordinate " +
           std::to_string(i + 1) + " carries an algebraic part)");
}

}  // namespace detail

// Complete iff criterion for smooth principal series of the six classical
// presets: all bullets hold -> Irreducible, any failure -> Reducible.
inline Verdict check_classical_smooth_iff(const SmoothCharGroup& g, const RootDatum& rd,
                                          const Character& chi) {
  detail::require_classical_smooth(rd, chi);
  detail::BulletSink sink;
  sink.v.theorem_id = "classical-smooth-iff";
  detail::classical_bullets(g, rd, chi, /*banach=*/false, sink);
  sink.v.status = sink.all_hold ? Status::Irreducible : Status::Reducible;
  sink.v.message = sink.all_hold ? "every bullet holds"
                                 : "a bullet fails; the smooth criterion is an "
                                   "equivalence, so the series is reducible";
  return sink.v;
}

// One-sided Banach criterion for the six classical presets: all bullets hold
// -> absolutely Irreducible, any failure -> Inconclusive.
inline Verdict check_classical_banach(const SmoothCharGroup& g, const RootDatum& rd,
                                      const Character& chi) {
  detail::require_classical_smooth(rd, chi);
  detail::BulletSink sink;
  sink.v.theorem_id = "classical-banach";
  if (rd.family == Family::Sp || rd.family == Family::SOodd) {
    PrimeCheck pc = check_assumption_p(rd);
    if (!pc.ok) {
      sink.v.add("odd-residue-characteristic",
                 "the residue characteristic is odd", false);
      sink.v.status = Status::PreconditionFailed;
      sink.v.message = pc.warning;
      return sink.v;
    }
    sink.v.add("odd-residue-characteristic", "the residue characteristic is odd",
               true);
  }
  detail::classical_bullets(g, rd, chi, /*banach=*/true, sink);
  sink.v.status = sink.all_hold ? Status::Irreducible : Status::Inconclusive;
  sink.v.message = sink.all_hold
                       ? "every bullet holds; the completion is absolutely irreducible"
                       : "a bullet fails; the sufficient condition is inconclusive";
  return sink.v;
}

// ---------------------------------------------------------------------------
// Smooth irreducibility through rank-one factors: the series is irreducible
// exactly when every rank-one induction is irreducible and the part on the
// Levi where the exponent pairings vanish is irreducible. For split presets
// the rank-one rule is built in; other presets consult a supplied table.

struct Rank1Table {
  std::map<int, bool> by_root;  // reduced-positive-root index -> reducible?
};

inline Verdict check_smooth_via_rank1(const SmoothCharGroup& g, const RootDatum& rd,
                                      const Character& chi,
                                      const Rank1Table& table = {},
                                      long long weyl_budget = 10000000LL) {
  require(rd.family != Family::GLD,
          "the division-algebra preset uses the segment criterion");
  require(chi.rank() == rd.rank, "character rank does not match the datum");
  for (int i = 0; i < chi.rank(); ++i)
    if (!chi.coords[i].alg_all_zero())
      fail("the rank-one reduction requires a smooth character (coordinate " +
           std::to_string(i + 1) + " carries an algebraic part)");

  Verdict v;
  v.theorem_id = "smooth-via-rank1";

  bool split = family_is_split(rd.family);
  // A rank-one factor lives on the smallest Levi containing the root. Its
  // derived part is a genuine SL_2 factor only for the long roots of the
  // symplectic preset (and for SL_2 itself); there the composed character
  // also reduces at exact order two. Everywhere else the factor is of
  // GL_2/PGL_2 type on pairs of torus coordinates, where only the
  // absolute-value points reduce.
  auto sl2_factor = [&](size_t idx) {
    if (rd.family == Family::SL) return rd.size == 2;
    if (rd.family != Family::Sp) return false;
    int nz = 0;
    for (const auto& c : rd.reduced_pos[idx])
      if (c != 0) ++nz;
    return nz == 1;
  };
  std::vector<int> reducible_roots;
  for (size_t idx = 0; idx < rd.reduced_pos.size(); ++idx) {
    bool red;
    if (split) {
      CharCoord psi = compose_with_cochar(g, chi, rd.coroot[idx], rd);
      red = (g.is_trivial(psi.smooth) && (psi.s == Rat(1) || psi.s == Rat(-1))) ||
            (sl2_factor(idx) && psi.s == 0 && g.exact_order_two(psi.smooth));
    } else {
      auto it = table.by_root.find(static_cast<int>(idx));
      if (it == table.by_root.end())
        fail("rank-one verdict table has no entry for root " +
             detail::root_str(rd, static_cast<int>(idx)));
      red = it->second;
    }
    if (red) reducible_roots.push_back(static_cast<int>(idx));
  }

  {
    std::string text = "every rank-one induction is irreducible";
    if (reducible_roots.empty()) {
      v.add("rank-one-inductions-irreducible", text, true);
    } else {
      std::string roots;
      for (size_t k = 0; k < reducible_roots.size(); ++k)
        roots += (k ? ", " : "") + detail::root_str(rd, reducible_roots[k]);
      Witness w{"root", {reducible_roots[0]},
                "reducible rank-one factors at roots " + roots};
      v.add("rank-one-inductions-irreducible", text, false, w);
      v.witness = w;
    }
  }

  Weight nu(rd.rank, Rat(0));
  for (int i = 0; i < rd.rank; ++i) nu[i] = chi.coords[i].s;
  {
    std::optional<int> bad;
    for (int idx : reducible_roots)
      if (pairing(nu, idx, rd) < 0) {
        bad = idx;
        break;
      }
    std::string text =
        "every reducible rank-one factor pairs non-negatively with the "
        "exponent vector";
    if (bad) {
      Witness w{"root", {*bad},
                "root " + detail::root_str(rd, *bad) + " pairs negatively"};
      v.add("socle-pairings-nonnegative", text, false, w);
    } else {
      v.add("socle-pairings-nonnegative",
            text + (reducible_roots.empty() ? " (vacuous: none is reducible)" : ""),
            true);
    }
  }

  if (!reducible_roots.empty()) {
    v.status = Status::Reducible;
    v.message = "a rank-one factor is reducible";
    return v;
  }

  // All rank-one factors irreducible, so the series class is Weyl-invariant;
  // move the exponent vector into the dominant chamber and examine the Levi
  // where its simple pairings vanish.
  WeylElement w = WeylElement::identity(rd.rank);
  {
    Weight cur = nu;
    int guard = 0;
    bool moved = true;
    while (moved) {
      moved = false;
      for (size_t p = 0; p < rd.simples.size(); ++p) {
        if (pairing(cur, rd.simples[p], rd) < 0) {
          WeylElement s = reflection(rd, rd.simples[p]);
          cur = s.act(cur);
          w = s.compose(w);
          moved = true;
          break;
        }
      }
      require(++guard <= 100000, "exponent dominantization failed to terminate");
    }
  }
  Character chid = weyl_act(g, rd, w, chi);
  Weight nud = w.act(nu);
  ParabolicSubset I;
  for (size_t p = 0; p < rd.simples.size(); ++p)
    if (pairing(nud, rd.simples[p], rd) == 0)
      I.simple_positions.push_back(static_cast<int>(p));

  if (I.simple_positions.empty()) {
    v.add("levi-part-irreducible",
          "the exponent pairings are all non-zero, so the Levi part is the "
          "inducing character itself",
          true);
    v.status = Status::Irreducible;
    v.message = "all rank-one factors are irreducible and the exponent vector "
                "is regular";
    return v;
  }

  std::optional<WeylElement> fixer;
  for (const auto& wl : weyl_elements(rd, I, weyl_budget)) {
    if (wl.is_identity()) continue;
    if (char_equal(g, weyl_act(g, rd, wl, chid), chid)) {
      fixer = wl;
      break;
    }
  }
  if (!fixer) {
    v.add("levi-part-irreducible",
          "no non-identity Weyl element of the exponent-kernel Levi fixes the "
          "character, so the unitary Levi part is irreducible",
          true);
    v.status = Status::Irreducible;
    v.message = "all rank-one factors are irreducible and the Levi part is "
                "regular";
  } else {
    Witness wt{"weyl", {}, "fixing element " + fixer->str()};
    v.add("levi-part-irreducible",
          "no non-identity Weyl element of the exponent-kernel Levi fixes the "
          "character",
          false, wt);
    v.witness = wt;
    v.status = Status::Inconclusive;
    v.message = "a Weyl element fixes the character on the exponent-kernel "
                "Levi; use the family-specific criteria for the unitary part";
  }
  return v;
}

}  // namespace pseries
