#pragma once

#include <map>
#include <optional>
#include <string>

#include "matrix.hpp"

namespace pseries {

// Finitely presented abelian group hosting the smooth parts of all inducing
// characters, together with the endomorphisms the engines consult.
struct SmoothCharGroup {
  int m = 0;
  std::vector<std::string> gen_names;
  IntMat relations;  // m rows, one column per relation
  LatticeSolver lat;
  std::optional<IntMat> involution;     // Galois conjugation pullback
  std::optional<IntMat> norm_pullback;  // composition with the norm E^x -> F^x
  std::optional<IntMat> restriction;    // restriction E^x <- F^x of characters
  std::map<std::string, IVec> distinguished;
  std::optional<LatticeSolver> norm_image;  // columns of [norm_pullback | relations]

  bool equal(const IVec& v, const IVec& w) const { return lat.contains(ivec_sub(v, w)); }
  bool is_trivial(const IVec& v) const { return lat.contains(v); }
  Int order(const IVec& v) const { return lat.order_mod(v); }
  bool order_divides_two(const IVec& v) const { return lat.contains(ivec_scale(Int(2), v)); }
  bool exact_order_two(const IVec& v) const { return order_divides_two(v) && !is_trivial(v); }
  std::vector<std::uint8_t> two_torsion_bits(const IVec& v) const { return lat.mod2_bits(v); }

  IVec zero() const { return IVec(m, Int(0)); }

  const IntMat& map(const std::string& name) const {
    const std::optional<IntMat>* slot = nullptr;
    if (name == "involution") slot = &involution;
    else if (name == "norm_pullback") slot = &norm_pullback;
    else if (name == "restriction") slot = &restriction;
    else fail("unknown endomorphism \"" + name + "\"");
    require(slot->has_value(), "smooth group declares no map \"" + name + "\"");
    return **slot;
  }
  bool has_map(const std::string& name) const {
    if (name == "involution") return involution.has_value();
    if (name == "norm_pullback") return norm_pullback.has_value();
    if (name == "restriction") return restriction.has_value();
    return false;
  }

  IVec conjugate(const IVec& v) const { return map("involution").apply(v); }
  IVec norm_compose(const IVec& v) const { return map("norm_pullback").apply(v); }
  IVec restrict_to_base(const IVec& v) const { return map("restriction").apply(v); }

  // v composed with conjugation-minus-identity; trivial when v descends.
  IVec conj_minus_id(const IVec& v) const { return ivec_sub(conjugate(v), v); }

  const IVec& omega() const {
    auto it = distinguished.find("omega_EF");
    require(it != distinguished.end(),
            "smooth group declares no distinguished element \"omega_EF\"");
    return it->second;
  }
  bool has_omega() const { return distinguished.count("omega_EF") != 0; }

  // Membership in the subgroup of characters trivial on norm-one elements:
  // the column lattice of [norm_pullback | relations].
  bool trivial_on_norm_one(const IVec& v) const {
    require(norm_image.has_value(), "smooth group declares no map \"norm_pullback\"");
    return norm_image->contains(v);
  }
  bool square_is_norm_composite(const IVec& v) const {
    return trivial_on_norm_one(ivec_scale(Int(2), v));
  }
};

namespace detail {

inline void check_preserves_lattice(const IntMat& M, const std::string& name,
                                    const SmoothCharGroup& g) {
  require(M.rows == g.m && M.cols == g.m,
          "map \"" + name + "\" is not a " + std::to_string(g.m) + "x" +
              std::to_string(g.m) + " matrix");
  for (int j = 0; j < g.relations.cols; ++j)
    require(g.lat.contains(M.apply(g.relations.column(j))),
            "map \"" + name + "\" does not preserve the relation lattice");
}

}  // namespace detail

inline SmoothCharGroup make_smooth_group(
    std::vector<std::string> gen_names, IntMat relations,
    std::optional<IntMat> involution = std::nullopt,
    std::optional<IntMat> norm_pullback = std::nullopt,
    std::optional<IntMat> restriction = std::nullopt,
    std::map<std::string, IVec> distinguished = {}) {
  SmoothCharGroup g;
  g.m = static_cast<int>(gen_names.size());
  require(g.m >= 1, "smooth group needs at least one generator");
  require(relations.rows == g.m, "relation matrix row count must match generator count");
  g.gen_names = std::move(gen_names);
  g.relations = std::move(relations);
  g.lat = LatticeSolver(g.relations);
  if (involution) {
    detail::check_preserves_lattice(*involution, "involution", g);
    IntMat sq = involution->mul(*involution);
    for (int i = 0; i < g.m; ++i) {
      IVec col = sq.column(i);
      col[i] -= 1;
      require(g.lat.contains(col), "map \"involution\" does not square to the identity");
    }
    g.involution = std::move(involution);
  }
  if (norm_pullback) {
    detail::check_preserves_lattice(*norm_pullback, "norm_pullback", g);
    g.norm_pullback = std::move(norm_pullback);
    IntMat combined(g.m, g.norm_pullback->cols + g.relations.cols);
    for (int i = 0; i < g.m; ++i) {
      for (int j = 0; j < g.norm_pullback->cols; ++j)
        combined.at(i, j) = g.norm_pullback->at(i, j);
      for (int j = 0; j < g.relations.cols; ++j)
        combined.at(i, g.norm_pullback->cols + j) = g.relations.at(i, j);
    }
    g.norm_image = LatticeSolver(combined);
  }
  if (restriction) {
    detail::check_preserves_lattice(*restriction, "restriction", g);
    g.restriction = std::move(restriction);
  }
  for (auto& [name, v] : distinguished) {
    require(static_cast<int>(v.size()) == g.m,
            "distinguished element \"" + name + "\" has the wrong length");
    if (name == "omega_EF")
      require(g.order(v) == 2,
              "distinguished element \"omega_EF\" must have order exactly 2");
    g.distinguished[name] = v;
  }
  return g;
}

// Convenience presentation: independent generators of the given orders
// (order 0 for a free generator).
inline SmoothCharGroup group_from_orders(
    std::vector<std::string> gen_names, const std::vector<Int>& orders,
    std::optional<IntMat> involution = std::nullopt,
    std::optional<IntMat> norm_pullback = std::nullopt,
    std::optional<IntMat> restriction = std::nullopt,
    std::map<std::string, IVec> distinguished = {}) {
  int m = static_cast<int>(gen_names.size());
  require(static_cast<int>(orders.size()) == m, "one order per generator");
  std::vector<IVec> cols;
  for (int i = 0; i < m; ++i) {
    require(orders[i] >= 0, "generator orders must be non-negative");
    if (orders[i] > 0) {
      IVec c(m, Int(0));
      c[i] = orders[i];
      cols.push_back(c);
    }
  }
  IntMat rel = cols.empty() ? IntMat(m, 0) : IntMat::from_columns(cols);
  return make_smooth_group(std::move(gen_names), rel, std::move(involution),
                           std::move(norm_pullback), std::move(restriction),
                           std::move(distinguished));
}

inline bool char_equal(const SmoothCharGroup& g, const IVec& v, const IVec& w) {
  return g.equal(v, w);
}

}  // namespace pseries
