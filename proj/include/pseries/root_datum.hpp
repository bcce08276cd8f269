#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "matrix.hpp"

namespace pseries {

enum class Family { GL, SL, Sp, SOodd, SOeven, SOstar, Ueven, Uodd, GLD };

enum class FieldTag { F, E, NormOne };

inline std::string family_token(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::Sp: return "Sp";
    case Family::SOodd: return "SO_odd";
    case Family::SOeven: return "SO_even";
    case Family::SOstar: return "SOstar";
    case Family::Ueven: return "U_even";
    case Family::Uodd: return "U_odd";
    case Family::GLD: return "GLD";
  }
  return "?";
}

inline std::optional<Family> family_from_token(const std::string& t) {
  if (t == "GL") return Family::GL;
  if (t == "SL") return Family::SL;
  if (t == "Sp") return Family::Sp;
  if (t == "SO_odd") return Family::SOodd;
  if (t == "SO_even") return Family::SOeven;
  if (t == "SOstar") return Family::SOstar;
  if (t == "U_even") return Family::Ueven;
  if (t == "U_odd") return Family::Uodd;
  if (t == "GLD") return Family::GLD;
  return std::nullopt;
}

inline bool family_is_split(Family f) {
  return f == Family::GL || f == Family::SL || f == Family::Sp ||
         f == Family::SOodd || f == Family::SOeven;
}

inline bool family_is_classical_group(Family f) {
  return f == Family::Sp || f == Family::SOodd || f == Family::SOeven ||
         f == Family::SOstar || f == Family::Ueven || f == Family::Uodd;
}

inline bool family_needs_extension(Family f) {
  return f == Family::SOstar || f == Family::Ueven || f == Family::Uodd;
}

struct FieldData {
  Int p = 3;          // residue characteristic
  Int q = 3;          // residue cardinality (a power of p)
  int deg_F_Qp = 1;   // [F:Q_p]
  int embeddings = 1; // size of the embedding index set for algebraic parts
  bool has_extension = false;
  int ext_e = 1;      // ramification index of E/F
  int ext_f = 2;      // residue degree of E/F
  int ext_degree = 2; // [E:F]
};

struct WeylElement {
  std::vector<int> perm;  // e_i -> sign[i] * e_perm[i]
  std::vector<int> sign;

  static WeylElement identity(int n) {
    WeylElement w;
    w.perm.resize(n);
    w.sign.assign(n, 1);
    for (int i = 0; i < n; ++i) w.perm[i] = i;
    return w;
  }

  bool is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != static_cast<int>(i) || sign[i] != 1) return false;
    return true;
  }

  template <typename V>
  V act(const V& v) const {
    V r(v.size(), typename V::value_type(0));
    for (size_t i = 0; i < v.size(); ++i) {
      r[perm[i]] = v[i];
      if (sign[i] < 0) r[perm[i]] = -r[perm[i]];
    }
    return r;
  }

  // (this o other): apply `other` first.
  WeylElement compose(const WeylElement& other) const {
    WeylElement r;
    size_t n = perm.size();
    r.perm.resize(n);
    r.sign.resize(n);
    for (size_t i = 0; i < n; ++i) {
      r.perm[i] = perm[other.perm[i]];
      r.sign[i] = other.sign[i] * sign[other.perm[i]];
    }
    return r;
  }

  WeylElement inverse() const {
    WeylElement r;
    size_t n = perm.size();
    r.perm.resize(n);
    r.sign.resize(n);
    for (size_t i = 0; i < n; ++i) {
      r.perm[perm[i]] = static_cast<int>(i);
      r.sign[perm[i]] = sign[i];
    }
    return r;
  }

  int flipped_sign_count() const {
    int c = 0;
    for (int s : sign)
      if (s < 0) ++c;
    return c;
  }

  auto operator<=>(const WeylElement&) const = default;

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < perm.size(); ++i) {
      if (i) s += ",";
      s += (sign[i] < 0 ? "-" : "+") + std::to_string(perm[i] + 1);
    }
    return s + "]";
  }
};

struct ParabolicSubset {
  // Positions into the standard simple-root ordering of the datum.
  std::vector<int> simple_positions;

  bool contains(int pos) const {
    return std::find(simple_positions.begin(), simple_positions.end(), pos) !=
           simple_positions.end();
  }
  static ParabolicSubset none() { return {}; }
};

struct RootDatum {
  Family family = Family::GL;
  int size = 1;   // the integer in the family notation: GL(size), Sp(size), ...
  int rank = 1;   // number of torus coordinates
  int d = 1;      // GLD only
  FieldData field;
  bool res_scalars = false;

  std::vector<IVec> reduced_pos;   // canonical order
  std::vector<IVec> coroot;        // parallel to reduced_pos
  std::vector<Int> mult;           // n_alpha, parallel
  std::vector<bool> doubled;       // 2*alpha is also a root
  std::vector<IVec> positive_roots;  // reduced first, then the doubled ones
  std::vector<int> simples;          // indices into reduced_pos, standard order
  std::vector<IVec> simple_coeffs;   // per reduced root: expansion over simples
  std::vector<FieldTag> tags;        // per coordinate

  int find_reduced(const IVec& r) const {
    for (size_t i = 0; i < reduced_pos.size(); ++i)
      if (reduced_pos[i] == r) return static_cast<int>(i);
    return -1;
  }

  bool is_simple(int idx) const {
    return std::find(simples.begin(), simples.end(), idx) != simples.end();
  }

  int simple_position(int idx) const {
    for (size_t p = 0; p < simples.size(); ++p)
      if (simples[p] == idx) return static_cast<int>(p);
    return -1;
  }

  // Positive roots of the Levi L_I: reduced positives supported on I.
  bool in_levi(int idx, const ParabolicSubset& I) const {
    const IVec& cf = simple_coeffs[idx];
    for (size_t p = 0; p < cf.size(); ++p)
      if (cf[p] != 0 && !I.contains(static_cast<int>(p))) return false;
    return true;
  }

  ParabolicSubset full_subset() const {
    ParabolicSubset I;
    for (size_t p = 0; p < simples.size(); ++p) I.simple_positions.push_back(static_cast<int>(p));
    return I;
  }

  std::string display() const {
    if (family == Family::GLD)
      return "GLD(" + std::to_string(size) + "," + std::to_string(d) + ")";
    std::string token;
    switch (family) {
      case Family::GL: token = "GL"; break;
      case Family::SL: token = "SL"; break;
      case Family::Sp: token = "Sp"; break;
      case Family::SOodd:
      case Family::SOeven: token = "SO"; break;
      case Family::SOstar: token = "SOstar"; break;
      case Family::Ueven:
      case Family::Uodd: token = "U"; break;
      default: token = "?"; break;
    }
    return token + "(" + std::to_string(size) + ")";
  }
};

namespace detail {

inline IVec unit_vec(int n, int i, Int c = Int(1)) {
  IVec v(n, Int(0));
  v[i] = c;
  return v;
}

// Solve for the expansion of each reduced positive root over the simple roots.
inline void fill_simple_coeffs(RootDatum& rd) {
  const int n = rd.rank;
  const int k = static_cast<int>(rd.simples.size());
  rd.simple_coeffs.clear();
  for (const IVec& root : rd.reduced_pos) {
    std::vector<Weight> rows(n, Weight(k, Rat(0)));
    for (int j = 0; j < k; ++j) {
      const IVec& s = rd.reduced_pos[rd.simples[j]];
      for (int i = 0; i < n; ++i) rows[i][j] = Rat(s[i]);
    }
    Weight b(n);
    for (int i = 0; i < n; ++i) b[i] = Rat(root[i]);
    auto x = solve_rational(rows, b);
    require(x.has_value(), "positive root outside the simple-root span");
    IVec cf(k);
    for (int j = 0; j < k; ++j) {
      require(is_integer((*x)[j]) && (*x)[j] >= 0,
              "positive root is not a non-negative integer combination of simples");
      cf[j] = rat_num((*x)[j]);
    }
    rd.simple_coeffs.push_back(cf);
  }
}

}  // namespace detail

inline RootDatum build_root_datum(Family family, int size, FieldData field,
                                  bool res_scalars = false, int gld_d = 1) {
  require(size >= 1, "group size must be positive");
  require(field.p >= 2, "residue characteristic must be at least 2");
  {
    Int qq = field.q;
    require(qq >= 2, "residue cardinality must be at least 2");
    while (qq % field.p == 0) qq /= field.p;
    require(qq == 1, "residue cardinality must be a power of the residue characteristic");
  }
  if (family_needs_extension(family))
    require(field.has_extension,
            "family " + family_token(family) + " requires quadratic extension data");

  RootDatum rd;
  rd.family = family;
  rd.size = size;
  rd.field = field;
  rd.res_scalars = res_scalars;
  rd.d = gld_d;

  auto mk = [&](int n) {
    rd.rank = n;
    rd.tags.assign(n, FieldTag::F);
  };
  auto add_root = [&](const IVec& root, const IVec& cor, Int m, bool dbl = false) {
    rd.reduced_pos.push_back(root);
    rd.coroot.push_back(cor);
    rd.mult.push_back(m);
    rd.doubled.push_back(dbl);
  };
  auto e = [&](int i) { return detail::unit_vec(rd.rank, i); };
  auto diff = [&](int i, int j) { return ivec_sub(e(i), e(j)); };
  auto sum2 = [&](int i, int j) { return ivec_add(e(i), e(j)); };

  switch (family) {
    case Family::GL:
    case Family::SL:
    case Family::GLD: {
      int n = size;
      if (family == Family::SL) require(n >= 2, "SL needs size >= 2");
      if (family == Family::GLD) {
        require(gld_d >= 1, "GLD division-algebra degree must be positive");
      } else {
        require(gld_d == 1, "degree parameter is GLD-only");
      }
      mk(n);
      Int m = family == Family::GLD ? Int(gld_d) * Int(gld_d) : Int(1);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(diff(i, j), diff(i, j), m);
      for (int i = 0; i + 1 < n; ++i) rd.simples.push_back(rd.find_reduced(diff(i, i + 1)));
      break;
    }
    case Family::Sp: {
      require(size % 2 == 0 && size >= 2, "Sp needs even size >= 2");
      int n = size / 2;
      mk(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(diff(i, j), diff(i, j), Int(1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(sum2(i, j), sum2(i, j), Int(1));
      for (int i = 0; i < n; ++i) add_root(ivec_scale(Int(2), e(i)), e(i), Int(1));
      for (int i = 0; i + 1 < n; ++i) rd.simples.push_back(rd.find_reduced(diff(i, i + 1)));
      rd.simples.push_back(rd.find_reduced(ivec_scale(Int(2), e(n - 1))));
      break;
    }
    case Family::SOodd: {
      require(size % 2 == 1 && size >= 3, "SO odd needs odd size >= 3");
      int n = (size - 1) / 2;
      mk(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(diff(i, j), diff(i, j), Int(1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(sum2(i, j), sum2(i, j), Int(1));
      for (int i = 0; i < n; ++i) add_root(e(i), ivec_scale(Int(2), e(i)), Int(1));
      for (int i = 0; i + 1 < n; ++i) rd.simples.push_back(rd.find_reduced(diff(i, i + 1)));
      rd.simples.push_back(rd.find_reduced(e(n - 1)));
      break;
    }
    case Family::SOeven: {
      require(size % 2 == 0, "SO even needs even size");
      int n = size / 2;
      require(n >= 2, "SO(2n) needs n >= 2");
      mk(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(diff(i, j), diff(i, j), Int(1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(sum2(i, j), sum2(i, j), Int(1));
      for (int i = 0; i + 1 < n; ++i) rd.simples.push_back(rd.find_reduced(diff(i, i + 1)));
      rd.simples.push_back(rd.find_reduced(sum2(n - 2, n - 1)));
      break;
    }
    case Family::SOstar: {
      require(size % 2 == 0, "SOstar needs even size");
      int n = size / 2;
      require(n >= 2, "SOstar(2n) needs n >= 2");
      mk(n);
      rd.tags[n - 1] = FieldTag::NormOne;
      int k = n - 1;  // acting coordinates
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) add_root(diff(i, j), diff(i, j), Int(1));
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) add_root(sum2(i, j), sum2(i, j), Int(1));
      for (int i = 0; i < k; ++i) add_root(e(i), ivec_scale(Int(2), e(i)), Int(2));
      for (int i = 0; i + 1 < k; ++i) rd.simples.push_back(rd.find_reduced(diff(i, i + 1)));
      rd.simples.push_back(rd.find_reduced(e(k - 1)));
      break;
    }
    case Family::Ueven: {
      require(size % 2 == 0 && size >= 2, "U even needs even size >= 2");
      int n = size / 2;
      mk(n);
      rd.tags.assign(n, FieldTag::E);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(diff(i, j), diff(i, j), Int(2));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(sum2(i, j), sum2(i, j), Int(2));
      for (int i = 0; i < n; ++i) add_root(ivec_scale(Int(2), e(i)), e(i), Int(1));
      for (int i = 0; i + 1 < n; ++i) rd.simples.push_back(rd.find_reduced(diff(i, i + 1)));
      rd.simples.push_back(rd.find_reduced(ivec_scale(Int(2), e(n - 1))));
      break;
    }
    case Family::Uodd: {
      require(size % 2 == 1 && size >= 3, "U odd needs odd size >= 3");
      int n = (size - 1) / 2;
      mk(n + 1);
      rd.tags.assign(n + 1, FieldTag::E);
      rd.tags[n] = FieldTag::NormOne;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(diff(i, j), diff(i, j), Int(2));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_root(sum2(i, j), sum2(i, j), Int(2));
      for (int i = 0; i < n; ++i) add_root(e(i), ivec_scale(Int(2), e(i)), Int(3), true);
      for (int i = 0; i + 1 < n; ++i) rd.simples.push_back(rd.find_reduced(diff(i, i + 1)));
      rd.simples.push_back(rd.find_reduced(e(n - 1)));
      break;
    }
  }

  if (res_scalars)
    for (auto& m : rd.mult) m *= field.deg_F_Qp;

  rd.positive_roots = rd.reduced_pos;
  for (size_t i = 0; i < rd.reduced_pos.size(); ++i)
    if (rd.doubled[i]) rd.positive_roots.push_back(ivec_scale(Int(2), rd.reduced_pos[i]));

  for (size_t i = 0; i < rd.reduced_pos.size(); ++i)
    require(ivec_dot(rd.reduced_pos[i], rd.coroot[i]) == 2,
            "coroot normalization violated");

  detail::fill_simple_coeffs(rd);
  return rd;
}

inline Rat pairing(const Weight& lambda, int root_idx, const RootDatum& rd) {
  require(root_idx >= 0 && root_idx < static_cast<int>(rd.reduced_pos.size()),
          "not a reduced positive root of this datum");
  return weight_dot(lambda, rd.coroot[root_idx]);
}

inline Rat pairing(const Weight& lambda, const IVec& root, const RootDatum& rd) {
  int idx = rd.find_reduced(root);
  require(idx >= 0, "not a reduced positive root of this datum");
  return pairing(lambda, idx, rd);
}

inline Weight rho_weighted(const RootDatum& rd) {
  Weight rho(rd.rank, Rat(0));
  for (size_t i = 0; i < rd.reduced_pos.size(); ++i)
    for (int c = 0; c < rd.rank; ++c)
      rho[c] += Rat(rd.mult[i] * rd.reduced_pos[i][c], 2);
  return rho;
}

inline Weight two_rho_weighted(const RootDatum& rd) {
  return weight_scale(Rat(2), rho_weighted(rd));
}

// Reflection in a reduced root, as a signed permutation.
inline WeylElement reflection(const RootDatum& rd, int root_idx) {
  const IVec& alpha = rd.reduced_pos[root_idx];
  const IVec& cov = rd.coroot[root_idx];
  int n = rd.rank;
  WeylElement w = WeylElement::identity(n);
  for (int i = 0; i < n; ++i) {
    IVec img(n, Int(0));
    img[i] = 1;
    Int pair = cov[i];
    for (int c = 0; c < n; ++c) img[c] -= pair * alpha[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (img[c] != 0) {
        require(target < 0 && (img[c] == 1 || img[c] == -1),
                "reflection is not a signed permutation");
        target = c;
        w.perm[i] = c;
        w.sign[i] = img[c] == 1 ? 1 : -1;
      }
    require(target >= 0, "reflection killed a basis vector");
  }
  return w;
}

inline std::vector<WeylElement> weyl_elements(const RootDatum& rd, const ParabolicSubset& I,
                                              long long budget = 10000000LL) {
  std::vector<WeylElement> gens;
  for (int pos : I.simple_positions) {
    require(pos >= 0 && pos < static_cast<int>(rd.simples.size()),
            "parabolic subset names a simple-root position out of range");
    gens.push_back(reflection(rd, rd.simples[pos]));
  }
  std::set<WeylElement> seen;
  std::vector<WeylElement> queue{WeylElement::identity(rd.rank)};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    WeylElement w = queue[head];
    for (const auto& g : gens) {
      WeylElement x = g.compose(w);
      if (seen.insert(x).second) {
        require(static_cast<long long>(seen.size()) <= budget,
                "Weyl enumeration budget of " + std::to_string(budget) + " elements exceeded");
        queue.push_back(x);
      }
    }
  }
  std::vector<WeylElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  auto id = std::find_if(out.begin(), out.end(), [](const WeylElement& w) { return w.is_identity(); });
  std::rotate(out.begin(), id, id + 1);
  return out;
}

// Inversion count over reduced positives = word length.
inline int weyl_length(const RootDatum& rd, const WeylElement& w) {
  int len = 0;
  for (const IVec& alpha : rd.reduced_pos) {
    IVec img = w.act(alpha);
    bool negative = false;
    for (const Int& c : img) {
      if (c > 0) break;
      if (c < 0) {
        negative = true;
        break;
      }
    }
    if (negative) ++len;
  }
  return len;
}

// alpha^vee = a * alpha_L^vee + sum c_beta beta^vee along the orthogonal
// splitting against span(I); a > 0 and every c_beta <= 0.
inline std::pair<Rat, std::vector<std::pair<int, Rat>>> coroot_levi_decompose(
    const RootDatum& rd, const ParabolicSubset& I, int simple_pos) {
  require(simple_pos >= 0 && simple_pos < static_cast<int>(rd.simples.size()),
          "simple-root position out of range");
  require(!I.contains(simple_pos), "simple root lies in the parabolic subset");
  int idx = rd.simples[simple_pos];
  Weight alpha = to_weight(rd.reduced_pos[idx]);

  std::vector<int> iroots;
  for (int pos : I.simple_positions) iroots.push_back(rd.simples[pos]);
  const int k = static_cast<int>(iroots.size());

  Weight proj(rd.rank, Rat(0));
  if (k > 0) {
    // Gram solve for the orthogonal projection onto span(I).
    std::vector<Weight> gram(k, Weight(k, Rat(0)));
    Weight rhs(k, Rat(0));
    for (int i = 0; i < k; ++i) {
      Weight bi = to_weight(rd.reduced_pos[iroots[i]]);
      rhs[i] = weight_dot(bi, alpha);
      for (int j = 0; j < k; ++j)
        gram[i][j] = weight_dot(bi, to_weight(rd.reduced_pos[iroots[j]]));
    }
    auto t = solve_rational(gram, rhs);
    require(t.has_value(), "degenerate Gram matrix in Levi projection");
    for (int i = 0; i < k; ++i)
      proj = weight_add(proj, weight_scale((*t)[i], to_weight(rd.reduced_pos[iroots[i]])));
  }

  Weight alpha_L = weight_sub(alpha, proj);
  Rat alpha_sq = weight_dot(alpha, alpha);
  Rat alpha_L_sq = weight_dot(alpha_L, alpha_L);
  require(alpha_L_sq != 0, "simple root collapsed into the Levi span");
  Rat a = alpha_L_sq / alpha_sq;

  std::vector<std::pair<int, Rat>> coeffs;
  if (k > 0) {
    // Solve sum c_beta beta^vee = (2/(alpha,alpha)) * proj in coordinates.
    std::vector<Weight> rows(rd.rank, Weight(k, Rat(0)));
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < rd.rank; ++c) rows[c][j] = Rat(rd.coroot[iroots[j]][c]);
    Weight b = weight_scale(Rat(2) / alpha_sq, proj);
    auto cs = solve_rational(rows, b);
    require(cs.has_value(), "Levi coroots do not span the projection");
    for (int j = 0; j < k; ++j) coeffs.emplace_back(I.simple_positions[j], (*cs)[j]);
  }
  return {a, coeffs};
}

inline bool is_dominant(const Weight& lambda, const RootDatum& rd, const ParabolicSubset& I) {
  for (int pos : I.simple_positions)
    if (pairing(lambda, rd.simples[pos], rd) < 0) return false;
  return true;
}

inline bool is_dominant(const Weight& lambda, const RootDatum& rd) {
  return is_dominant(lambda, rd, rd.full_subset());
}

}  // namespace pseries
