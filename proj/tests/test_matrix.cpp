#include <catch2/catch_amalgamated.hpp>

#include <pseries/matrix.hpp>

#include <random>

using namespace pseries;

namespace {

IntMat random_matrix(std::mt19937& rng, int r, int c, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("determinant (Bareiss) on known matrices") {
  IntMat a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 4;
  a.at(1, 0) = 6;
  a.at(1, 1) = 8;
  CHECK(a.det() == -8);

  IntMat b = IntMat::identity(4);
  CHECK(b.det() == 1);

  IntMat c(3, 3);
  int vals[9] = {1, 2, 3, 4, 5, 6, 7, 8, 10};
  for (int i = 0; i < 9; ++i) c.a[i] = vals[i];
  CHECK(c.det() == -3);
}

TEST_CASE("Smith normal form: invariant factors with divisibility chain") {
  SECTION("diag(2,3) -> (1,6)") {
    IntMat a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 3;
    SmithForm s = smith_normal_form(a);
    REQUIRE(s.rank == 2);
    CHECK(s.diag[0] == 1);
    CHECK(s.diag[1] == 6);
  }
  SECTION("[[2,4],[6,8]] -> (2,4)") {
    IntMat a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 4;
    a.at(1, 0) = 6;
    a.at(1, 1) = 8;
    SmithForm s = smith_normal_form(a);
    REQUIRE(s.rank == 2);
    CHECK(s.diag[0] == 2);
    CHECK(s.diag[1] == 4);
  }
  SECTION("rank-deficient") {
    IntMat a(2, 3);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(0, 2) = 3;
    a.at(1, 0) = 2;
    a.at(1, 1) = 4;
    a.at(1, 2) = 6;
    SmithForm s = smith_normal_form(a);
    CHECK(s.rank == 1);
    CHECK(s.diag[0] == 1);
    CHECK(s.diag[1] == 0);
  }
}

TEST_CASE("Smith normal form: transform identity U*A*V = D, unimodular") {
  std::mt19937 rng(20260816);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + trial % 6;
    int c = 1 + (trial / 3) % 6;
    IntMat a = random_matrix(rng, r, c);
    SmithForm s = smith_normal_form(a);
    CHECK(s.U.mul(a).mul(s.V) == s.D);
    Int du = s.U.det();
    Int dv = s.V.det();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (int t = 0; t + 1 < static_cast<int>(s.diag.size()); ++t) {
      if (s.diag[t + 1] != 0) {
        REQUIRE(s.diag[t] != 0);
        CHECK(s.diag[t + 1] % s.diag[t] == 0);
      }
      CHECK(s.diag[t] >= 0);
    }
    // D diagonal off the invariant positions.
    for (int i = 0; i < s.D.rows; ++i)
      for (int j = 0; j < s.D.cols; ++j)
        if (i != j) CHECK(s.D.at(i, j) == 0);
  }
}

TEST_CASE("lattice membership") {
  IntMat rel(2, 2);
  rel.at(0, 0) = 2;
  rel.at(1, 1) = 4;
  LatticeSolver lat(rel);
  CHECK(lat.contains({Int(2), Int(4)}));
  CHECK(lat.contains({Int(0), Int(0)}));
  CHECK(lat.contains({Int(-2), Int(8)}));
  CHECK(!lat.contains({Int(1), Int(0)}));
  CHECK(!lat.contains({Int(0), Int(2)}));
}

TEST_CASE("lattice membership: free quotient directions") {
  // Column lattice spanned by (2,0) inside Z^2: second coordinate is free.
  IntMat rel(2, 1);
  rel.at(0, 0) = 2;
  LatticeSolver lat(rel);
  CHECK(lat.contains({Int(4), Int(0)}));
  CHECK(!lat.contains({Int(4), Int(1)}));
  CHECK(lat.order_mod({Int(1), Int(0)}) == 2);
  CHECK(lat.order_mod({Int(0), Int(1)}) == 0);  // infinite
}

TEST_CASE("element orders in Z^2 / <(2,0),(0,4)>") {
  IntMat rel(2, 2);
  rel.at(0, 0) = 2;
  rel.at(1, 1) = 4;
  LatticeSolver lat(rel);
  CHECK(lat.order_mod({Int(0), Int(0)}) == 1);
  CHECK(lat.order_mod({Int(1), Int(0)}) == 2);
  CHECK(lat.order_mod({Int(0), Int(1)}) == 4);
  CHECK(lat.order_mod({Int(1), Int(2)}) == 2);
  CHECK(lat.order_mod({Int(1), Int(1)}) == 4);
}

TEST_CASE("order agrees with repeated-addition oracle on random presentations") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> od(0, 4);
  const int orders[5] = {1, 2, 3, 4, 6};
  for (int trial = 0; trial < 100; ++trial) {
    int m = 1 + trial % 3;
    IntMat rel(m, m);
    for (int i = 0; i < m; ++i) rel.at(i, i) = orders[od(rng)];
    LatticeSolver lat(rel);
    std::uniform_int_distribution<int> vd(-5, 5);
    IVec v(m);
    for (int i = 0; i < m; ++i) v[i] = vd(rng);
    Int claimed = lat.order_mod(v);
    Int oracle = 0;
    IVec acc(m, Int(0));
    for (int k = 1; k <= 24; ++k) {
      acc = ivec_add(acc, v);
      if (lat.contains(acc)) {
        oracle = k;
        break;
      }
    }
    REQUIRE(oracle != 0);
    CHECK(claimed == oracle);
  }
}

TEST_CASE("mod-2 reduction is injective on 2-torsion") {
  // Z/4 + Z/2 + Z/3: 2-torsion has 4 elements.
  IntMat rel(3, 3);
  rel.at(0, 0) = 4;
  rel.at(1, 1) = 2;
  rel.at(2, 2) = 3;
  LatticeSolver lat(rel);
  std::vector<IVec> torsion;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 3; ++z) {
        IVec v{Int(x), Int(y), Int(z)};
        if (lat.contains(ivec_scale(Int(2), v))) torsion.push_back(v);
      }
  REQUIRE(torsion.size() == 4);
  std::vector<std::vector<std::uint8_t>> images;
  for (const auto& v : torsion) images.push_back(lat.mod2_bits(v));
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (!lat.contains(ivec_sub(torsion[i], torsion[j]))) CHECK(images[i] != images[j]);
}

TEST_CASE("mod-2 reduction is a homomorphism on 2-torsion") {
  IntMat rel(2, 2);
  rel.at(0, 0) = 8;
  rel.at(1, 1) = 6;
  LatticeSolver lat(rel);
  IVec a{Int(4), Int(0)}, b{Int(4), Int(3)};
  auto bits_sum = lat.mod2_bits(ivec_add(a, b));
  auto ba = lat.mod2_bits(a);
  auto bb = lat.mod2_bits(b);
  REQUIRE(ba.size() == bb.size());
  for (size_t i = 0; i < ba.size(); ++i) CHECK(((ba[i] ^ bb[i]) & 1) == bits_sum[i]);
}

TEST_CASE("rational solve") {
  SECTION("unique solution") {
    std::vector<Weight> A{{Rat(2), Rat(1)}, {Rat(1), Rat(-1)}};
    Weight b{Rat(3), Rat(0)};
    auto x = solve_rational(A, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(1));
  }
  SECTION("inconsistent") {
    std::vector<Weight> A{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    Weight b{Rat(1), Rat(3)};
    CHECK(!solve_rational(A, b).has_value());
  }
  SECTION("exact rationals, no rounding") {
    std::vector<Weight> A{{Rat(1, 3), Rat(1, 7)}};
    Weight b{Rat(1)};
    auto x = solve_rational(A, b);
    REQUIRE(x.has_value());
    CHECK(weight_dot(A[0], *x) == Rat(1));
  }
}

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-1/2") == Rat(-1, 2));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat(" -7 ") == Rat(-7));
  CHECK(parse_rat("+2/6") == Rat(1, 3));
  CHECK(rat_str(Rat(3, 4)) == "3/4");
  CHECK(rat_str(Rat(-1, 2)) == "-1/2");
  CHECK(rat_str(Rat(6, 3)) == "2");
  CHECK_THROWS_AS(parse_rat("0.5"), error);
  CHECK_THROWS_AS(parse_rat("x"), error);
  CHECK_THROWS_AS(parse_rat("1/0"), error);
  CHECK_THROWS_AS(parse_rat(""), error);
}
