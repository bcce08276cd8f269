// Acceptance gate for the library: nine exact criteria, one line each.
// Exits non-zero if any criterion fails. Runtime budgets are enforced where
// a criterion pins one; all numeric checks are exact rational arithmetic.

#include <pseries/report.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace pseries;

namespace {

int failures = 0;

void line(int num, bool ok, const std::string& text, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << text;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

FieldData fd(int p = 3) {
  FieldData f;
  f.p = p;
  f.q = p;
  return f;
}

FieldData fd_ext(int p = 3) {
  FieldData f = fd(p);
  f.has_extension = true;
  return f;
}

CharCoord coord(IVec smooth, Rat s, std::vector<AlgPart> alg = {}) {
  CharCoord c;
  c.smooth = std::move(smooth);
  c.s = std::move(s);
  c.alg = std::move(alg);
  return c;
}

std::string rats_str(const std::vector<Rat>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + rat_str(v[i]);
  return s + "}";
}

// -------------------------------------------------------------------------
// 1. The weighted half-sum pairs with every reduced positive coroot to at
//    least the root multiplicity, with equality exactly at simple roots,
//    for every preset family of rank at most eight and multiplicity
//    scalings 1, 2, 3. Budget: five seconds.
void criterion1() {
  Stopwatch sw;
  bool ok = true;
  std::string detail;
  long long checked = 0;

  std::vector<std::pair<Family, std::vector<int>>> presets;
  auto sizes = [](int from, int to, int by) {
    std::vector<int> out;
    for (int n = from; n <= to; n += by) out.push_back(n);
    return out;
  };
  presets.push_back({Family::GL, sizes(1, 8, 1)});
  presets.push_back({Family::SL, sizes(2, 8, 1)});
  presets.push_back({Family::Sp, sizes(2, 16, 2)});
  presets.push_back({Family::SOodd, sizes(3, 17, 2)});
  presets.push_back({Family::SOeven, sizes(4, 16, 2)});
  presets.push_back({Family::SOstar, sizes(4, 16, 2)});
  presets.push_back({Family::Ueven, sizes(2, 16, 2)});
  presets.push_back({Family::Uodd, sizes(3, 15, 2)});  // rank (size+1)/2 <= 8
  presets.push_back({Family::GLD, sizes(1, 8, 1)});

  for (const auto& [fam, ns] : presets) {
    for (int size : ns) {
      RootDatum rd = build_root_datum(fam, size, family_needs_extension(fam) ? fd_ext() : fd(),
                                      false, fam == Family::GLD ? 2 : 1);
      for (int t = 1; t <= 3 && ok; ++t) {
        RootDatum scaled = rd;
        for (auto& m : scaled.mult) m *= t;
        Weight rho = rho_weighted(scaled);
        for (size_t idx = 0; idx < scaled.reduced_pos.size(); ++idx) {
          Rat pr = pairing(rho, static_cast<int>(idx), scaled);
          Rat bound = Rat(scaled.mult[idx]);
          bool simple = scaled.is_simple(static_cast<int>(idx));
          if (pr < bound || (pr == bound) != simple) {
            ok = false;
            detail = scaled.display() + ", scaling " + std::to_string(t) + ", root " +
                     ivec_str(scaled.reduced_pos[idx]) + ": pairing " + rat_str(pr) +
                     " vs bound " + rat_str(bound);
            break;
          }
          ++checked;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }

  long long elapsed = sw.ms();
  if (ok && elapsed >= 5000) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + " ms exceeds the 5 s budget";
  }
  line(1, ok,
       "half-sum pairing is bounded by the multiplicity with equality exactly at "
       "simple roots (" +
           std::to_string(checked) + " root/scaling pairs, " + std::to_string(elapsed) +
           " ms)",
       detail);
}

// -------------------------------------------------------------------------
// 2. On 500 random presentations with at most twelve order-two characters,
//    two to the reported rank equals the brute-force closed-subset count,
//    for both the plain and the norm-coupled variant. Budget: ten seconds.
void criterion2() {
  Stopwatch sw;
  bool ok = true;
  std::string detail;
  std::mt19937 rng(20260816u);
  const int kTrials = 500;

  for (int trial = 0; trial < kTrials && ok; ++trial) {
    int m = 1 + static_cast<int>(rng() % 5);
    std::vector<std::string> names;
    std::vector<Int> orders;
    std::vector<int> ord_small;
    for (int i = 0; i < m; ++i) {
      names.push_back("g" + std::to_string(i));
      int o = 1 << (rng() % 4);  // 1, 2, 4, or 8
      ord_small.push_back(o);
      orders.push_back(Int(o));
    }
    bool flip = rng() % 2 == 0;
    IntMat invol = IntMat::identity(m);
    if (flip)
      for (int i = 0; i < m; ++i) invol.at(i, i) = Int(-1);
    IntMat norm = IntMat::identity(m);
    for (int i = 0; i < m; ++i) norm.at(i, i) = flip ? Int(0) : Int(2);
    SmoothCharGroup g = group_from_orders(names, orders, invol, norm);

    auto order_two_value = [&]() {
      IVec v(m, Int(0));
      for (int k = 0; k < m; ++k)
        if (ord_small[k] % 2 == 0 && rng() % 2 == 0) v[k] = Int(ord_small[k] / 2);
      return v;
    };
    int count = 1 + static_cast<int>(rng() % 12);
    std::vector<IVec> vals;
    for (int i = 0; i < count; ++i) vals.push_back(order_two_value());

    RGroupResult plain = rgroup_rank_gso(g, vals);
    Int expect = Int(1) << plain.r;
    Int got = subset_count_gso(g, plain.eligible);
    if (expect != got) {
      ok = false;
      detail = "trial " + std::to_string(trial) + ", plain variant: rank " +
               std::to_string(plain.r) + " predicts " + expect.str() +
               " subsets, enumeration finds " + got.str();
      break;
    }

    IVec ext(m, Int(0));
    for (int k = 0; k < m; ++k) ext[k] = Int(rng() % 8);
    RGroupResult coupled = rgroup_rank_gso_star(g, vals, ext);
    Int expect2 = Int(1) << coupled.r;
    Int got2 = subset_count_gso_star(g, coupled.eligible, ext);
    if (expect2 != got2) {
      ok = false;
      detail = "trial " + std::to_string(trial) + ", coupled variant: rank " +
               std::to_string(coupled.r) + " predicts " + expect2.str() +
               " subsets, enumeration finds " + got2.str();
    }
  }

  long long elapsed = sw.ms();
  if (ok && elapsed >= 10000) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + " ms exceeds the 10 s budget";
  }
  line(2, ok,
       "two-group rank matches brute-force subset counts on 500 random "
       "presentations, plain and coupled (" +
           std::to_string(elapsed) + " ms)",
       detail);
}

// -------------------------------------------------------------------------
// 3. The rank-one pole windows match the frozen case tables exactly, in
//    both the default and the refined reading.
void criterion3() {
  bool ok = true;
  std::string detail;

  auto lattice = [](int k) {
    std::vector<Rat> out;
    for (int n = -k / 2; n <= k / 2; ++n) out.emplace_back(n, k);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto expect_set = [&](const std::string& token, int d, bool refined,
                        std::vector<Rat> want) {
    if (!ok) return;
    auto c = pole_case_from_token(token, d);
    if (!c) {
      ok = false;
      detail = "case token \"" + token + "\" did not resolve";
      return;
    }
    std::vector<Rat> got = rank1_pole_set(*c, refined);
    std::sort(want.begin(), want.end());
    if (got != want) {
      ok = false;
      detail = "case " + token + (refined ? " (refined)" : "") + ": got " + rats_str(got) +
               ", want " + rats_str(want);
    }
  };
  auto nonneg_count = [](const std::vector<Rat>& v) {
    return std::count_if(v.begin(), v.end(), [](const Rat& r) { return r >= 0; });
  };

  expect_set("i", 2, false, {Rat(-1, 2), Rat(-1, 4), Rat(1, 4), Rat(1, 2)});
  expect_set("ii3", 1, false, {Rat(-1, 2), Rat(-1, 4), Rat(0), Rat(1, 4), Rat(1, 2)});
  expect_set("iii1", 1, false, {Rat(-1, 2), Rat(-1, 6), Rat(0), Rat(1, 6), Rat(1, 2)});
  expect_set("iii2", 1, false, lattice(20));
  expect_set("iii2", 1, true, lattice(10));
  expect_set("iv5", 1, false, lattice(28));
  expect_set("iv5", 1, true, lattice(14));

  if (ok) {
    auto iii2 = rank1_pole_set(*pole_case_from_token("iii2", 1), false);
    auto iii2r = rank1_pole_set(*pole_case_from_token("iii2", 1), true);
    auto iv5 = rank1_pole_set(*pole_case_from_token("iv5", 1), false);
    auto iv5r = rank1_pole_set(*pole_case_from_token("iv5", 1), true);
    if (nonneg_count(iii2) != 11 || iii2r.size() != 11 || nonneg_count(iv5) != 15 ||
        iv5r.size() != 15) {
      ok = false;
      detail = "density counts: one-twentieth window has " +
               std::to_string(nonneg_count(iii2)) + " non-negative / " +
               std::to_string(iii2r.size()) + " refined values (want 11 / 11); " +
               "one-twenty-eighth window has " + std::to_string(nonneg_count(iv5)) +
               " / " + std::to_string(iv5r.size()) + " (want 15 / 15)";
    }
  }

  if (ok) {
    // Every table is symmetric about zero and confined to [-1/2, 1/2].
    for (const std::string& token : {"i", "ii3", "ii4", "iii1", "iii2", "iv4", "iv5"}) {
      for (bool refined : {false, true}) {
        auto vals = rank1_pole_set(*pole_case_from_token(token, 2), refined);
        std::set<Rat> s(vals.begin(), vals.end());
        for (const Rat& r : vals)
          if (!s.count(-r) || r < Rat(-1, 2) || r > Rat(1, 2)) {
            ok = false;
            detail = "case " + token + ": value " + rat_str(r) +
                     " breaks symmetry or leaves the window";
          }
      }
    }
  }

  line(3, ok, "rank-one pole windows match the frozen case tables exactly", detail);
}

// -------------------------------------------------------------------------
// 4. Rank-one symplectic smooth classification: reducible exactly for the
//    two unramified exponent values plus-or-minus one on the trivial smooth
//    part, and for exact-order-two smooth parts at exponent zero. The
//    character family spans smooth orders one through eight and exponents
//    in quarter-integer steps across [-2, 2].
void criterion4() {
  bool ok = true;
  std::string detail;

  SmoothCharGroup g = group_from_orders(
      {"w", "x", "y", "z"}, {Int(8), Int(7), Int(5), Int(3)});
  RootDatum rd = build_root_datum(Family::Sp, 2, fd());

  std::set<long long> orders_seen;
  long long pairs = 0;
  const int ords[4] = {8, 7, 5, 3};

  for (int a = 0; a < 8 && ok; ++a)
    for (int b = 0; b < 7 && ok; ++b)
      for (int c = 0; c < 5 && ok; ++c)
        for (int d = 0; d < 3 && ok; ++d) {
          int co[4] = {a, b, c, d};
          long long order = 1;
          for (int i = 0; i < 4; ++i)
            order = std::lcm(order, static_cast<long long>(ords[i] / std::gcd(co[i], ords[i])));
          orders_seen.insert(order);
          bool trivial = a == 0 && b == 0 && c == 0 && d == 0;
          bool order_two = order == 2;

          IVec v;
          for (int i = 0; i < 4; ++i) v.push_back(Int(co[i]));
          for (int t = -8; t <= 8 && ok; ++t) {
            Rat s(t, 4);
            Character chi;
            chi.coords.push_back(coord(v, s));
            Verdict verdict = check_classical_smooth_iff(g, rd, chi);
            ++pairs;
            bool expect_red = (trivial && (s == Rat(1) || s == Rat(-1))) ||
                              (order_two && s == Rat(0));
            bool got_red = verdict.status == Status::Reducible;
            bool definite = verdict.status == Status::Reducible ||
                            verdict.status == Status::Irreducible;
            if (!definite || got_red != expect_red) {
              ok = false;
              detail = "smooth part (" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + "," + std::to_string(d) + "), exponent " +
                       rat_str(s) + ": engine says " + status_str(verdict.status) +
                       ", oracle expects " + (expect_red ? "Reducible" : "Irreducible");
            }
          }
        }

  if (ok) {
    for (long long o = 1; o <= 8; ++o)
      if (!orders_seen.count(o)) {
        ok = false;
        detail = "the generated family never produced a character of order " +
                 std::to_string(o);
      }
  }
  if (ok && pairs < 200) {
    ok = false;
    detail = "only " + std::to_string(pairs) + " character/exponent pairs were generated";
  }

  line(4, ok,
       "rank-one symplectic smooth classification matches the closed-form oracle on " +
           std::to_string(pairs) + " character/exponent pairs",
       detail);
}

// -------------------------------------------------------------------------
// 5. General-linear engine spot checks: the trivial character is always
//    obstructed at the first adjacent pair; one unramified-twist splitting
//    is irreducible; the rank-three example is obstructed at (1,3).
void criterion5() {
  bool ok = true;
  std::string detail;
  SmoothCharGroup g = group_from_orders({"eta"}, {Int(2)});

  auto unram = [&](std::vector<Rat> ss) {
    Character chi;
    for (auto& s : ss) chi.coords.push_back(coord(g.zero(), s));
    return chi;
  };
  auto witness_is = [](const Verdict& v, int i, int j) {
    return v.witness.has_value() && v.witness->indices.size() == 2 &&
           v.witness->indices[0] == i && v.witness->indices[1] == j;
  };

  for (int n = 2; n <= 6 && ok; ++n) {
    Verdict v = check_gln_banach(g, unram(std::vector<Rat>(n, Rat(0))));
    if (v.status != Status::Inconclusive || !witness_is(v, 1, 2)) {
      ok = false;
      detail = "trivial character on rank " + std::to_string(n) + ": got " +
               status_str(v.status) +
               (v.witness ? " with witness (" + std::to_string(v.witness->indices[0]) + "," +
                                std::to_string(v.witness->indices[1]) + ")"
                          : " without a witness");
    }
  }
  if (ok) {
    Verdict v = check_gln_banach(g, unram({Rat(0), Rat(1)}));
    if (v.status != Status::Irreducible) {
      ok = false;
      detail = "rank-two (0, 1) exponents: got " + status_str(v.status);
    }
  }
  if (ok) {
    Verdict v = check_gln_banach(g, unram({Rat(0), Rat(0), Rat(-1)}));
    if (v.status != Status::Inconclusive || !witness_is(v, 1, 3)) {
      ok = false;
      detail = "rank-three (0, 0, -1) exponents: got " + status_str(v.status) +
               (v.witness ? " with witness (" + std::to_string(v.witness->indices[0]) + "," +
                                std::to_string(v.witness->indices[1]) + ")"
                          : " without a witness");
    }
  }

  line(5, ok,
       "general-linear engine reproduces the three pinned evaluations "
       "(trivial, split pair, linked triple)",
       detail);
}

// -------------------------------------------------------------------------
// 6. The maximal admissible parabolic subset is confirmed maximal and unique
//    by exhaustive enumeration of all subsets, on 100 random algebraic
//    grids across the split presets of rank at most five. Budget: five
//    seconds.
void criterion6() {
  Stopwatch sw;
  bool ok = true;
  std::string detail;
  std::mt19937 rng(777u);
  SmoothCharGroup g = group_from_orders({"a"}, {Int(2)});
  std::vector<Rat> pool{Rat(-3), Rat(-2), Rat(-1), Rat(0),     Rat(1),
                        Rat(2),  Rat(3),  Rat(1, 2), Rat(-1, 2), Rat(5, 2)};

  for (int trial = 0; trial < 100 && ok; ++trial) {
    int kappa = 1 + static_cast<int>(rng() % 5);  // simple-root count
    Family fam;
    int size = 0;
    switch (rng() % 5) {
      case 0: fam = Family::GL; size = kappa + 1; break;
      case 1: fam = Family::SL; size = kappa + 1; break;
      case 2: fam = Family::Sp; size = 2 * kappa; break;
      case 3: fam = Family::SOodd; size = 2 * kappa + 1; break;
      default:
        fam = Family::SOeven;
        if (kappa < 2) kappa = 2;
        size = 2 * kappa;
        break;
    }
    RootDatum rd = build_root_datum(fam, size, fd());

    Character chi;
    for (int i = 0; i < rd.rank; ++i) {
      if (rng() % 8 == 0)
        chi.coords.push_back(coord(g.zero(), Rat(0), {AlgPart::generic(1 + i)}));
      else
        chi.coords.push_back(
            coord(g.zero(), Rat(0), {AlgPart::value(pool[rng() % pool.size()])}));
    }

    ParabolicSubset I = maximal_Q(chi, rd);
    auto admissible = [&](const ParabolicSubset& J) {
      for (size_t idx = 0; idx < rd.reduced_pos.size(); ++idx) {
        if (!rd.in_levi(static_cast<int>(idx), J)) continue;
        if (!detail::alg_pairing(chi, rd.coroot[idx], 0).is_nonpositive_integer())
          return false;
      }
      return true;
    };

    if (!admissible(I)) {
      ok = false;
      detail = "trial " + std::to_string(trial) + " on " + rd.display() +
               ": the returned subset is not admissible";
      break;
    }
    int s = static_cast<int>(rd.simples.size());
    for (int mask = 0; mask < (1 << s) && ok; ++mask) {
      ParabolicSubset J;
      for (int p = 0; p < s; ++p)
        if (mask & (1 << p)) J.simple_positions.push_back(p);
      if (!admissible(J)) continue;
      for (int p : J.simple_positions)
        if (!I.contains(p)) {
          ok = false;
          detail = "trial " + std::to_string(trial) + " on " + rd.display() +
                   ": admissible subset containing position " + std::to_string(p) +
                   " is not inside the returned one";
        }
    }
  }

  long long elapsed = sw.ms();
  if (ok && elapsed >= 5000) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + " ms exceeds the 5 s budget";
  }
  line(6, ok,
       "maximal admissible parabolic subset is unique and maximal under exhaustive "
       "subset enumeration on 100 random grids (" +
           std::to_string(elapsed) + " ms)",
       detail);
}

// -------------------------------------------------------------------------
// 7. Segment normalization, over every k-sequence of length at most six
//    with entries in [0, 4], chain spans one and two, and one- and
//    two-class labelings: terminates within the integer-measure bound,
//    preserves the multiset, leaves no within-class ascent of two or more,
//    and never changes the linked-chain status. Budget: thirty seconds.
void criterion7() {
  Stopwatch sw;
  bool ok = true;
  std::string detail;
  long long runs = 0;

  auto describe = [](const std::vector<SegmentDatum>& segs) {
    std::string s = "[";
    for (size_t i = 0; i < segs.size(); ++i)
      s += (i ? " " : "") + std::to_string(segs[i].class_id) + ":k=" + segs[i].k.str() +
           ":step=" + std::to_string(segs[i].step);
    return s + "]";
  };

  auto check_one = [&](const std::vector<SegmentDatum>& input) {
    ++runs;
    bool pre = detect_bad_chain(input).has_value();
    NormalizeResult res = normalize_segments(input);
    bool post = detect_bad_chain(res.segments).has_value();
    int n = static_cast<int>(input.size());

    if (pre != post) {
      ok = false;
      detail = "chain status flipped for " + describe(input);
      return;
    }
    // perm must be a permutation that reproduces the output from the input.
    std::vector<int> sorted = res.perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (sorted[i] != i || !(res.segments[i] == input[res.perm[i]])) {
        ok = false;
        detail = "permutation record is inconsistent for " + describe(input);
        return;
      }
    // Multiset preservation.
    using Key = std::tuple<int, Int, int, int>;
    std::vector<Key> in_keys, out_keys;
    for (const auto& s : input) in_keys.emplace_back(s.class_id, s.k, s.step, s.d);
    for (const auto& s : res.segments) out_keys.emplace_back(s.class_id, s.k, s.step, s.d);
    std::sort(in_keys.begin(), in_keys.end());
    std::sort(out_keys.begin(), out_keys.end());
    if (in_keys != out_keys) {
      ok = false;
      detail = "multiset changed for " + describe(input);
      return;
    }
    // No within-class ascent of two or more remains.
    for (int i = 0; i + 1 < n; ++i) {
      const auto& a = res.segments[i];
      const auto& b = res.segments[i + 1];
      if (a.class_id == b.class_id && b.k - a.k >= 2) {
        ok = false;
        detail = "ascent of two or more survives in " + describe(res.segments) +
                 " (from " + describe(input) + ")";
        return;
      }
    }
    // Termination bound: each swap lowers sum(position * k) by at least one.
    Int mink = input[0].k, maxk = input[0].k;
    for (const auto& s : input) {
      mink = std::min(mink, s.k);
      maxk = std::max(maxk, s.k);
    }
    Int bound = (maxk - mink) * Int(n) * Int(n + 1) / 2;
    if (Int(res.swaps) > bound) {
      ok = false;
      detail = "swap count " + std::to_string(res.swaps) + " exceeds the measure bound " +
               bound.str() + " for " + describe(input);
    }
  };

  for (int n = 1; n <= 6 && ok; ++n) {
    std::vector<int> ks(n, 0);
    while (ok) {
      // One class with span two (step 1) or span one (step 2), then two
      // interleaved classes over all step combinations.
      for (int st : {1, 2}) {
        std::vector<SegmentDatum> segs;
        for (int i = 0; i < n; ++i) segs.push_back({0, Int(ks[i]), st, 2});
        check_one(segs);
        if (!ok) break;
      }
      if (n >= 2)
        for (int st0 : {1, 2}) {
          for (int st1 : {1, 2}) {
            std::vector<SegmentDatum> segs;
            for (int i = 0; i < n; ++i)
              segs.push_back({i % 2, Int(ks[i]), i % 2 == 0 ? st0 : st1, 2});
            check_one(segs);
            if (!ok) break;
          }
          if (!ok) break;
        }

      int pos = n - 1;
      while (pos >= 0 && ks[pos] == 4) ks[pos--] = 0;
      if (pos < 0) break;
      ++ks[pos];
    }
  }

  long long elapsed = sw.ms();
  if (ok && elapsed >= 30000) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + " ms exceeds the 30 s budget";
  }
  line(7, ok,
       "segment normalization preserves multiset and chain status with no "
       "within-class ascent left, over " +
           std::to_string(runs) + " exhaustive lists (" + std::to_string(elapsed) + " ms)",
       detail);
}

// -------------------------------------------------------------------------
// 8. On 200 random split general-linear inputs with zero algebraic parts,
//    the two continuous engines never disagree in the direction
//    irreducible-versus-witnessed-adjacent-pair.
void criterion8() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(4242u);
  SmoothCharGroup g = group_from_orders({"a"}, {Int(4)});
  std::vector<Rat> spool{Rat(0),  Rat(1),     Rat(-1), Rat(1, 2),
                         Rat(-2), Rat(2),     Rat(-1, 2), Rat(3, 2)};

  for (int trial = 0; trial < 200 && ok; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    RootDatum rd = build_root_datum(Family::GL, n, fd());
    Character chi;
    for (int i = 0; i < n; ++i) {
      IVec sm;
      sm.push_back(Int(static_cast<int>(rng() % 4)));
      chi.coords.push_back(coord(sm, spool[rng() % spool.size()]));
    }
    Verdict vg = check_gln_banach(g, chi);
    Verdict vs = check_split_banach(g, rd, chi);

    if (vg.status == Status::Reducible || vs.status == Status::Reducible) {
      ok = false;
      detail = "trial " + std::to_string(trial) +
               ": a one-directional engine claimed reducibility";
      break;
    }
    bool gln_adjacent_witness = vg.status == Status::Inconclusive && vg.witness &&
                                vg.witness->indices.size() == 2 &&
                                vg.witness->indices[1] == vg.witness->indices[0] + 1;
    bool split_simple_witness = vs.status == Status::Inconclusive && vs.witness &&
                                vs.witness->kind == "root" &&
                                rd.is_simple(vs.witness->indices[0]);
    if (vs.status == Status::Irreducible && gln_adjacent_witness) {
      ok = false;
      detail = "trial " + std::to_string(trial) +
               ": split engine says irreducible while the general-linear engine is "
               "obstructed at an adjacent pair";
    }
    if (vg.status == Status::Irreducible && split_simple_witness) {
      ok = false;
      detail = "trial " + std::to_string(trial) +
               ": general-linear engine says irreducible while the split engine is "
               "obstructed at a simple root";
    }
  }

  line(8, ok,
       "continuous engines never disagree in the irreducible-versus-adjacent-witness "
       "direction on 200 random split inputs",
       detail);
}

// -------------------------------------------------------------------------
// 9. Two runs over the full sample corpus serialize to byte-identical
//    reports.
void criterion9() {
  bool ok = true;
  std::string detail;

  std::vector<std::filesystem::path> paths;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(PSERIES_SAMPLES_DIR, ec))
    if (entry.path().extension() == ".json") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());

  if (ec || paths.empty()) {
    line(9, false, "sample corpus runs twice with byte-identical reports",
         "no sample documents found under " PSERIES_SAMPLES_DIR);
    return;
  }

  std::vector<std::string> texts, sources;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    texts.push_back(buf.str());
    sources.push_back(p.filename().string());
  }

  BatchReport first = run_batch(texts, sources);
  BatchReport second = run_batch(texts, sources);
  for (const auto& item : first.items)
    if (!item.errors.empty()) {
      ok = false;
      detail = item.source + ": " + item.errors.front();
      break;
    }
  if (ok) {
    std::string s1 = batch_json(first).dump(2);
    std::string s2 = batch_json(second).dump(2);
    if (s1 != s2) {
      ok = false;
      detail = "the two serialized batch reports differ";
    }
  }

  line(9, ok,
       "sample corpus (" + std::to_string(paths.size()) +
           " documents) runs twice with byte-identical reports",
       detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();

  if (failures == 0) {
    std::cout << "acceptance: all 9 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
