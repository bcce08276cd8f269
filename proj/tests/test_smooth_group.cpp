#include <catch2/catch_amalgamated.hpp>

#include <pseries/smooth_group.hpp>

#include <random>

using namespace pseries;

namespace {

IVec vec(std::initializer_list<int> xs) {
  IVec v;
  for (int x : xs) v.push_back(Int(x));
  return v;
}

std::vector<Int> ords(std::initializer_list<int> xs) {
  std::vector<Int> v;
  for (int x : xs) v.push_back(Int(x));
  return v;
}

IntMat mat(int r, int c, std::initializer_list<int> xs) {
  IntMat m(r, c);
  int k = 0;
  for (int x : xs) m.a[k++] = Int(x);
  return m;
}

}  // namespace

TEST_CASE("equality in cyclic presentations") {
  auto g2 = group_from_orders({"eta"}, ords({2}));
  REQUIRE(char_equal(g2, vec({1}), vec({-1})));
  REQUIRE(g2.exact_order_two(vec({1})));
  REQUIRE(g2.is_trivial(vec({2})));

  auto g4 = group_from_orders({"eta"}, ords({4}));
  REQUIRE_FALSE(char_equal(g4, vec({2}), vec({0})));
  REQUIRE(char_equal(g4, vec({5}), vec({1})));
  REQUIRE(g4.order(vec({1})) == 4);
  REQUIRE(g4.order(vec({2})) == 2);
}

TEST_CASE("orders in mixed presentations") {
  auto g = group_from_orders({"a", "b", "z"}, ords({6, 4, 0}));
  REQUIRE(g.order(vec({0, 0, 0})) == 1);
  REQUIRE(g.order(vec({1, 0, 0})) == 6);
  REQUIRE(g.order(vec({2, 1, 0})) == 12);
  REQUIRE(g.order(vec({0, 0, 1})) == 0);
  REQUIRE(g.order_divides_two(vec({3, 2, 0})));
  REQUIRE_FALSE(g.exact_order_two(vec({6, 4, 0})));
}

TEST_CASE("relation-matrix presentation") {
  // <a, b | 2a = 2b> has elements a-b of order 2 and a free part.
  auto g = make_smooth_group({"a", "b"}, IntMat::from_columns({vec({2, -2})}));
  REQUIRE(g.exact_order_two(vec({1, -1})));
  REQUIRE(g.order(vec({1, 0})) == 0);
  REQUIRE(char_equal(g, vec({3, -1}), vec({1, 1})));
}

TEST_CASE("two-torsion bits are injective and additive") {
  auto g = group_from_orders({"a", "b", "c"}, ords({4, 2, 3}));
  std::vector<IVec> tors;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 3; ++k) {
        IVec v = vec({i, j, k});
        if (g.order_divides_two(v)) tors.push_back(v);
      }
  REQUIRE(tors.size() == 4);
  std::set<std::vector<std::uint8_t>> images;
  for (const auto& v : tors) images.insert(g.two_torsion_bits(v));
  REQUIRE(images.size() == 4);
  for (const auto& v : tors)
    for (const auto& w : tors) {
      auto sum = g.two_torsion_bits(ivec_add(v, w));
      auto bv = g.two_torsion_bits(v);
      auto bw = g.two_torsion_bits(w);
      for (size_t t = 0; t < sum.size(); ++t)
        REQUIRE(sum[t] == ((bv[t] + bw[t]) % 2));
    }
}

TEST_CASE("map validation names the offender") {
  // involution must preserve the lattice <3a>
  REQUIRE_THROWS_WITH(
      group_from_orders({"a", "b"}, ords({3, 0}), mat(2, 2, {1, 1, 0, 1})),
      Catch::Matchers::ContainsSubstring("involution"));
  // squares to identity
  REQUIRE_THROWS_WITH(
      group_from_orders({"a", "b"}, ords({0, 0}), mat(2, 2, {1, 1, 0, 1})),
      Catch::Matchers::ContainsSubstring("square"));
  // shape check
  REQUIRE_THROWS_WITH(group_from_orders({"a"}, ords({2}), std::nullopt,
                                        mat(2, 2, {1, 0, 0, 1})),
                      Catch::Matchers::ContainsSubstring("norm_pullback"));
  // omega_EF must have order exactly 2
  REQUIRE_THROWS_WITH(
      group_from_orders({"a"}, ords({4}), std::nullopt, std::nullopt, std::nullopt,
                        {{"omega_EF", vec({1})}}),
      Catch::Matchers::ContainsSubstring("omega_EF"));
  REQUIRE_NOTHROW(group_from_orders({"a"}, ords({4}), std::nullopt, std::nullopt,
                                    std::nullopt, {{"omega_EF", vec({2})}}));
}

TEST_CASE("undeclared maps are reported by name") {
  auto g = group_from_orders({"a"}, ords({2}));
  REQUIRE_THROWS_WITH(g.conjugate(vec({1})),
                      Catch::Matchers::ContainsSubstring("involution"));
  REQUIRE_THROWS_WITH(g.trivial_on_norm_one(vec({1})),
                      Catch::Matchers::ContainsSubstring("norm_pullback"));
  REQUIRE_THROWS_WITH(g.omega(), Catch::Matchers::ContainsSubstring("omega_EF"));
  REQUIRE_FALSE(g.has_map("restriction"));
}

TEST_CASE("involution and norm bookkeeping on a doubled group") {
  // E-side group Z/4 x Z/4 with conjugation swapping the copies and the
  // norm pulling back to the diagonal.
  auto swap2 = mat(2, 2, {0, 1, 1, 0});
  auto diag = mat(2, 2, {1, 1, 1, 1});
  auto g = group_from_orders({"x", "xbar"}, ords({4, 4}), swap2, diag);
  REQUIRE(g.conjugate(vec({1, 0})) == vec({0, 1}));
  REQUIRE(g.conj_minus_id(vec({1, 0})) == vec({-1, 1}));
  REQUIRE(g.is_trivial(g.conj_minus_id(vec({1, 1}))));
  // norm-one triviality: the image of the norm composition plus relations
  REQUIRE(g.trivial_on_norm_one(vec({1, 1})));
  REQUIRE(g.trivial_on_norm_one(vec({3, -1})));
  REQUIRE_FALSE(g.trivial_on_norm_one(vec({1, 0})));
  REQUIRE(g.square_is_norm_composite(vec({1, -1})));
  REQUIRE(g.square_is_norm_composite(vec({2, 0})));
  REQUIRE_FALSE(g.square_is_norm_composite(vec({1, 0})));
}

TEST_CASE("equality agrees with coset enumeration on small groups") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 1 + static_cast<int>(rng() % 3);
    std::vector<Int> orders;
    Int total = 1;
    for (int i = 0; i < m; ++i) {
      Int o = 2 + static_cast<int>(rng() % 7);
      orders.push_back(o);
      total *= o;
    }
    if (total > 4096) continue;
    // add a scrambling relation on top of the diagonal ones
    std::vector<IVec> cols;
    for (int i = 0; i < m; ++i) {
      IVec c(m, Int(0));
      c[i] = orders[i];
      cols.push_back(c);
    }
    IVec extra(m);
    for (int i = 0; i < m; ++i) extra[i] = Int(static_cast<int>(rng() % 5) - 2);
    cols.push_back(extra);
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back("g" + std::to_string(i));
    auto g = make_smooth_group(names, IntMat::from_columns(cols));

    // canonical form via explicit reduction of U*v by the invariant factors
    auto canon = [&](const IVec& v) {
      IVec y = g.lat.snf.U.apply(v);
      for (int i = 0; i < m; ++i) {
        Int d = g.lat.factor_at(i);
        if (d != 0) {
          y[i] %= d;
          if (y[i] < 0) y[i] += d;
        }
      }
      return y;
    };
    for (int probe = 0; probe < 40; ++probe) {
      IVec v(m), w(m);
      for (int i = 0; i < m; ++i) {
        v[i] = Int(static_cast<int>(rng() % 21) - 10);
        w[i] = Int(static_cast<int>(rng() % 21) - 10);
      }
      REQUIRE(char_equal(g, v, w) == (canon(v) == canon(w)));
    }
  }
}

TEST_CASE("equality is a congruence for the group law") {
  auto g = make_smooth_group({"a", "b"}, IntMat::from_columns({vec({2, 2}), vec({0, 8})}));
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    IVec v = vec({static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4});
    IVec w = ivec_add(v, g.relations.column(t % 2));
    REQUIRE(char_equal(g, v, w));
    IVec z = vec({static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4});
    REQUIRE(char_equal(g, ivec_add(v, z), ivec_add(w, z)));
    REQUIRE(char_equal(g, ivec_neg(v), ivec_neg(w)));
  }
}
