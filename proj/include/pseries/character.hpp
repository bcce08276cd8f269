#pragma once

#include "root_datum.hpp"
#include "smooth_group.hpp"

namespace pseries {

// Algebraic exponent at one embedding: an exact affine expression
// offset + sum coeff * g_id over user-declared generic symbols.
struct AlgPart {
  Rat offset = Rat(0);
  std::map<int, Rat> gen;

  static AlgPart value(const Rat& v) {
    AlgPart a;
    a.offset = v;
    return a;
  }
  static AlgPart generic(int id, const Rat& coeff = Rat(1)) {
    AlgPart a;
    if (coeff != 0) a.gen[id] = coeff;
    return a;
  }

  bool is_generic() const { return !gen.empty(); }
  bool is_zero() const { return gen.empty() && offset == 0; }
  // Declared generics are asserted non-integer and independent, so any
  // expression with a surviving generic term is non-integer.
  bool is_integer_value() const { return gen.empty() && is_integer(offset); }
  bool is_nonpositive_integer() const { return is_integer_value() && offset <= 0; }

  AlgPart& operator+=(const AlgPart& o) {
    offset += o.offset;
    for (const auto& [id, c] : o.gen) {
      Rat nc = gen.count(id) ? gen[id] + c : c;
      if (nc == 0) gen.erase(id);
      else gen[id] = nc;
    }
    return *this;
  }
  AlgPart scaled(const Rat& c) const {
    AlgPart r;
    if (c == 0) return r;
    r.offset = offset * c;
    for (const auto& [id, k] : gen) r.gen[id] = k * c;
    return r;
  }
  friend AlgPart operator+(AlgPart a, const AlgPart& b) { return a += b; }
  friend AlgPart operator-(const AlgPart& a, const AlgPart& b) {
    return a + b.scaled(Rat(-1));
  }
  bool operator==(const AlgPart& o) const = default;

  std::string str() const {
    if (gen.empty()) return rat_str(offset);
    std::string s;
    for (const auto& [id, c] : gen) {
      if (!s.empty()) s += "+";
      if (c != 1) s += rat_str(c) + "*";
      s += "gen" + std::to_string(id);
    }
    if (offset != 0) s += "+" + rat_str(offset);
    return s;
  }
};

struct CharCoord {
  IVec smooth;
  Rat s = Rat(0);
  std::vector<AlgPart> alg;

  bool alg_all_zero() const {
    for (const auto& a : alg)
      if (!a.is_zero()) return false;
    return true;
  }
  bool has_generic() const {
    for (const auto& a : alg)
      if (a.is_generic()) return true;
    return false;
  }

  CharCoord& operator*=(const CharCoord& o) {
    smooth = ivec_add(smooth, o.smooth);
    s += o.s;
    require(alg.size() == o.alg.size(), "algebraic exponent lists differ in length");
    for (size_t k = 0; k < alg.size(); ++k) alg[k] += o.alg[k];
    return *this;
  }
  CharCoord powered(const Int& n) const {
    CharCoord r;
    r.smooth = ivec_scale(n, smooth);
    r.s = s * Rat(n);
    for (const auto& a : alg) r.alg.push_back(a.scaled(Rat(n)));
    return r;
  }
  CharCoord inverted() const { return powered(Int(-1)); }
};

struct Character {
  std::vector<CharCoord> coords;

  int rank() const { return static_cast<int>(coords.size()); }
};

inline bool coord_equal(const SmoothCharGroup& g, const CharCoord& a, const CharCoord& b) {
  if (!g.equal(a.smooth, b.smooth) || a.s != b.s) return false;
  size_t n = std::max(a.alg.size(), b.alg.size());
  for (size_t k = 0; k < n; ++k) {
    AlgPart x = k < a.alg.size() ? a.alg[k] : AlgPart{};
    AlgPart y = k < b.alg.size() ? b.alg[k] : AlgPart{};
    if (!(x == y)) return false;
  }
  return true;
}

inline bool char_equal(const SmoothCharGroup& g, const Character& a, const Character& b) {
  if (a.rank() != b.rank()) return false;
  for (int i = 0; i < a.rank(); ++i)
    if (!coord_equal(g, a.coords[i], b.coords[i])) return false;
  return true;
}

inline bool coord_is_trivial(const SmoothCharGroup& g, const CharCoord& c) {
  return g.is_trivial(c.smooth) && c.s == 0 && c.alg_all_zero();
}

// The reducibility-forcing shape at a rank-one factor: an algebraic character
// with all exponents non-positive integers.
inline bool non_positive_algebraic(const SmoothCharGroup& g, const CharCoord& c) {
  if (!g.is_trivial(c.smooth) || c.s != 0) return false;
  for (const auto& a : c.alg)
    if (!a.is_nonpositive_integer()) return false;
  return true;
}

// Composition with a cocharacter: the product over coordinates of
// chi_i raised to the cocharacter coefficient.
inline CharCoord compose_with_cochar(const SmoothCharGroup& g, const Character& chi,
                                     const IVec& cochar, const RootDatum& rd) {
  require(chi.rank() == rd.rank, "character rank does not match the datum");
  require(static_cast<int>(cochar.size()) == rd.rank, "cocharacter length mismatch");
  CharCoord out;
  out.smooth = g.zero();
  std::optional<FieldTag> seen_tag;
  size_t alg_len = 0;
  for (int i = 0; i < rd.rank; ++i)
    if (cochar[i] != 0) alg_len = std::max(alg_len, chi.coords[i].alg.size());
  out.alg.assign(alg_len, AlgPart{});
  for (int i = 0; i < rd.rank; ++i) {
    if (cochar[i] == 0) continue;
    FieldTag t = rd.tags[i];
    if (seen_tag && *seen_tag != t)
      fail("cocharacter mixes coordinates over different fields");
    seen_tag = t;
    const CharCoord& c = chi.coords[i];
    out.smooth = ivec_add(out.smooth, ivec_scale(cochar[i], c.smooth));
    out.s += c.s * Rat(cochar[i]);
    for (size_t k = 0; k < c.alg.size(); ++k)
      out.alg[k] += c.alg[k].scaled(Rat(cochar[i]));
  }
  return out;
}

// <2 rho_I, alpha^vee> for the weighted half-sum over the Levi L_I.
inline Rat delta_pairing(const RootDatum& rd, int root_idx, const ParabolicSubset& I) {
  require(root_idx >= 0 && root_idx < static_cast<int>(rd.reduced_pos.size()),
          "not a reduced positive root of this datum");
  Weight two_rho_I(rd.rank, Rat(0));
  for (size_t i = 0; i < rd.reduced_pos.size(); ++i)
    if (rd.in_levi(static_cast<int>(i), I))
      for (int c = 0; c < rd.rank; ++c)
        two_rho_I[c] += Rat(rd.mult[i] * rd.reduced_pos[i][c]);
  return weight_dot(two_rho_I, rd.coroot[root_idx]);
}

inline Rat delta_pairing(const RootDatum& rd, const IVec& root, const ParabolicSubset& I) {
  int idx = rd.find_reduced(root);
  require(idx >= 0, "not a reduced positive root of this datum");
  return delta_pairing(rd, idx, I);
}

// chi * delta^power, acting on the unramified exponents only.
inline Character twist_by_delta(const Character& chi, const RootDatum& rd, const Rat& power) {
  require(chi.rank() == rd.rank, "character rank does not match the datum");
  Weight two_rho = two_rho_weighted(rd);
  Character out = chi;
  for (int i = 0; i < rd.rank; ++i) out.coords[i].s += power * two_rho[i];
  return out;
}

// Exponent vector in the coordinates of |.|: s plus the averaged algebraic part.
inline Weight e_parameter(const Character& chi, const RootDatum& rd) {
  require(chi.rank() == rd.rank, "character rank does not match the datum");
  Weight e(rd.rank, Rat(0));
  for (int i = 0; i < rd.rank; ++i) {
    const CharCoord& c = chi.coords[i];
    AlgPart total;
    for (const auto& a : c.alg) total += a;
    if (total.is_generic())
      fail("coordinate " + std::to_string(i + 1) +
           " carries a generic algebraic exponent; its exponent vector is undetermined");
    e[i] = c.s + total.offset / Rat(rd.field.deg_F_Qp);
  }
  return e;
}

// Push one coordinate through a declared endomorphism of the smooth group.
// Restriction to the base field scales every exponent by [E:F].
inline CharCoord apply_map(const SmoothCharGroup& g, const CharCoord& c,
                           const std::string& name, const FieldData& field) {
  CharCoord out;
  out.smooth = g.map(name).apply(c.smooth);
  Rat scale = name == "restriction" ? Rat(field.ext_degree) : Rat(1);
  out.s = c.s * scale;
  for (const auto& a : c.alg) out.alg.push_back(a.scaled(scale));
  return out;
}

// The Weyl action on inducing characters. A sign flip inverts a base-field
// coordinate and conjugate-inverts an extension coordinate. Norm-one
// coordinates are never moved; their stored extension data is conjugated
// when the total number of sign flips is odd (base-field ambient group).
inline Character weyl_act(const SmoothCharGroup& g, const RootDatum& rd,
                          const WeylElement& w, const Character& chi) {
  require(chi.rank() == rd.rank, "character rank does not match the datum");
  Character out;
  out.coords.resize(rd.rank);
  bool odd_flips = (w.flipped_sign_count() % 2) != 0;
  for (int i = 0; i < rd.rank; ++i) {
    int t = w.perm[i];
    const CharCoord& c = chi.coords[i];
    if (rd.tags[i] == FieldTag::NormOne) {
      require(t == i && w.sign[i] > 0, "Weyl element moves a norm-one coordinate");
      CharCoord nc = c;
      if (rd.family == Family::SOstar && odd_flips) nc.smooth = g.conjugate(c.smooth);
      out.coords[i] = nc;
      continue;
    }
    if (w.sign[i] > 0) {
      out.coords[t] = c;
    } else if (rd.tags[i] == FieldTag::F) {
      out.coords[t] = c.inverted();
    } else {
      CharCoord nc = c.inverted();
      nc.smooth = ivec_neg(g.conjugate(c.smooth));
      out.coords[t] = nc;
    }
  }
  return out;
}

inline std::string coord_str(const CharCoord& c) {
  std::string out = "smooth=" + ivec_str(c.smooth) + " s=" + rat_str(c.s);
  if (!c.alg.empty()) {
    out += " alg=(";
    for (size_t k = 0; k < c.alg.size(); ++k) {
      if (k) out += ",";
      out += c.alg[k].str();
    }
    out += ")";
  }
  return out;
}

}  // namespace pseries
