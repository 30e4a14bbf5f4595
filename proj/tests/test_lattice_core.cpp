#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "suite.hpp"

using namespace k3lm;
using k3lm::testing::double_plane;
using k3lm::testing::hyperbolic_plane;
using k3lm::testing::quartic;

namespace {

// Plain machine-integer pairing, written out independently of the library.
long pair_by_hand(const std::vector<std::vector<long>>& g, const std::vector<long>& a,
                  const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  }
  return s;
}

}  // namespace

TEST(Intersect, DoublePlanePolarizationSquaresTo18) {
  EXPECT_EQ(double_plane().intersect(DivClass{3}, DivClass{3}), 18);
}

TEST(Intersect, QuarticHyperplaneSquaresTo4) {
  EXPECT_EQ(quartic().intersect(DivClass{1}, DivClass{1}), 4);
}

TEST(Intersect, ZeroVectorPairsToZero) {
  const auto u = hyperbolic_plane();
  EXPECT_EQ(u.intersect(DivClass{5, -7}, u.zero()), 0);
  EXPECT_EQ(u.intersect(u.zero(), DivClass{5, -7}), 0);
}

TEST(Intersect, RejectsDimensionMismatch) {
  EXPECT_THROW(hyperbolic_plane().intersect(DivClass{1}, DivClass{1, 0}), InputError);
}

TEST(Intersect, SymmetricBilinearAgainstHandPairing) {
  const std::vector<std::vector<long>> g{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}};
  const auto lat = k3lm::testing::hyperbolic_plus_a1();
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> c(-20, 20);
  for (int t = 0; t < 200; ++t) {
    std::vector<long> a{c(rng), c(rng), c(rng)}, b{c(rng), c(rng), c(rng)};
    DivClass da{a[0], a[1], a[2]}, db{b[0], b[1], b[2]};
    EXPECT_EQ(lat.intersect(da, db), pair_by_hand(g, a, b));
    EXPECT_EQ(lat.intersect(da, db), lat.intersect(db, da));
    EXPECT_EQ(lat.intersect(da + db, db), lat.intersect(da, db) + lat.square(db));
    EXPECT_EQ(lat.square(da) % 2, 0);
  }
}

TEST(EulerChar, DoublePlaneTwiceLineIsSix) { EXPECT_EQ(double_plane().euler_char(DivClass{2}), 6); }

TEST(EulerChar, ZeroClassIsTwo) { EXPECT_EQ(hyperbolic_plane().euler_char(DivClass{0, 0}), 2); }

TEST(EulerChar, HyperbolicRootMatchesHandPairing) {
  const long sq = pair_by_hand({{0, 1}, {1, 0}}, {1, -1}, {1, -1});
  ASSERT_EQ(sq, -2);
  EXPECT_EQ(hyperbolic_plane().euler_char(DivClass{1, -1}), sq / 2 + 2);
}

TEST(EulerChar, InvariantUnderNegation) {
  const auto lat = k3lm::testing::random_rank2(11);
  for (long x = -6; x <= 6; ++x) {
    for (long y = -6; y <= 6; ++y) {
      EXPECT_EQ(lat.euler_char(DivClass{x, y}), lat.euler_char(DivClass{-x, -y}));
    }
  }
}

TEST(Genus, DoublePlanePolarizationHasGenusTen) { EXPECT_EQ(double_plane().genus(DivClass{3}), 10); }

TEST(Genus, QuarticSectionFromCanonicalDegree) {
  // 2g - 2 = H^2 for a hyperplane section.
  const auto q = quartic();
  const long h2 = pair_by_hand({{4}}, {1}, {1});
  EXPECT_EQ(q.genus(DivClass{1}), (h2 + 2) / 2);
  EXPECT_EQ(q.genus(DivClass{1}), 3);
}

TEST(Genus, EllipticClassHasGenusOne) { EXPECT_EQ(hyperbolic_plane().genus(DivClass{0, 1}), 1); }

TEST(Genus, RejectsSquareBelowMinusTwo) {
  EXPECT_THROW(hyperbolic_plane().genus(DivClass{2, -1}), DomainError);
  EXPECT_EQ(hyperbolic_plane().genus(DivClass{1, -1}), 0);
}

TEST(PrimitivePart, ExtractsContent) {
  auto [k, f] = primitive_part(DivClass{2, 2});
  EXPECT_EQ(k, 2);
  EXPECT_EQ(f, (DivClass{1, 1}));
}

TEST(PrimitivePart, DoublePlanePolarizationIsThreeTimesLine) {
  auto [k, f] = primitive_part(DivClass{3});
  EXPECT_EQ(k, 3);
  EXPECT_EQ(f, DivClass{1});
}

TEST(PrimitivePart, PrimitiveClassUnchanged) {
  auto [k, f] = primitive_part(DivClass{1, -1});
  EXPECT_EQ(k, 1);
  EXPECT_EQ(f, (DivClass{1, -1}));
}

TEST(PrimitivePart, NegativeClassKeepsSignInF) {
  auto [k, f] = primitive_part(DivClass{-4, 6});
  EXPECT_EQ(k, 2);
  EXPECT_EQ(f, (DivClass{-2, 3}));
  EXPECT_EQ(k * f, (DivClass{-4, 6}));
}

TEST(PrimitivePart, RejectsZero) { EXPECT_THROW(primitive_part(DivClass{0, 0}), DomainError); }

TEST(Construction, RejectsAsymmetricGram) {
  EXPECT_THROW(PicardLattice::create({{0, 1}, {2, 0}}, DivClass{1, 1}), LatticeError);
}

TEST(Construction, RejectsOddDiagonal) {
  EXPECT_THROW(PicardLattice::create({{3}}, DivClass{1}), LatticeError);
  EXPECT_THROW(PicardLattice::create({{2, 1}, {1, -1}}, DivClass{1, 0}), LatticeError);
}

TEST(Construction, RejectsWrongSignature) {
  EXPECT_THROW(PicardLattice::create({{2, 0}, {0, 2}}, DivClass{1, 0}), LatticeError);
  EXPECT_THROW(PicardLattice::create({{-2}}, DivClass{1}), LatticeError);
  EXPECT_THROW(PicardLattice::create({{2, 2}, {2, 2}}, DivClass{1, 0}), LatticeError);
}

TEST(Construction, RejectsNonSquareOrMismatchedShapes) {
  EXPECT_THROW(PicardLattice::create({{0, 1}, {1}}, DivClass{1, 1}), LatticeError);
  EXPECT_THROW(PicardLattice::create({{2}}, DivClass{1, 0}), LatticeError);
  EXPECT_THROW(PicardLattice::create({{2}}, DivClass{1}, {"a", "b"}), LatticeError);
}

TEST(Construction, RejectsNonPositivePolarization) {
  EXPECT_THROW(PicardLattice::create({{0, 1}, {1, 0}}, DivClass{1, 0}), LatticeError);
  EXPECT_THROW(PicardLattice::create({{0, 1}, {1, 0}}, DivClass{1, -1}), LatticeError);
}

TEST(Construction, RejectsPolarizationWithOrthogonalRoot) {
  // (1,1).(1,-1) = 0 and (1,-1)^2 = -2.
  EXPECT_THROW(PicardLattice::create({{0, 1}, {1, 0}}, DivClass{1, 1}), LatticeError);
}

TEST(Construction, KeepsNames) {
  const auto u = hyperbolic_plane();
  ASSERT_EQ(u.names().size(), 2u);
  EXPECT_EQ(u.names()[0], "e");
}

TEST(Signature, CharacteristicPolynomialOfHyperbolicPlane) {
  auto c = characteristic_polynomial({{0, 1}, {1, 0}});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], -1);
  EXPECT_EQ(c[1], 0);
  EXPECT_EQ(c[2], 1);
}

TEST(Signature, AgreesWithRationalDiagonalization) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> e(-4, 4);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int t = 0; t < 400; ++t) {
    const int n = dim(rng);
    IntMatrix g(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        g[i][j] = g[j][i] = e(rng);
      }
    }
    // Occasionally force a degenerate matrix by duplicating a row/column.
    if (n >= 2 && t % 5 == 0) {
      for (int j = 0; j < n; ++j) g[1][j] = g[0][j];
      for (int i = 0; i < n; ++i) g[i][1] = g[i][0];
    }
    const Signature a = signature_of(g);
    const Signature b = k3lm::testing::ldl_signature(g);
    EXPECT_EQ(a.positive, b.positive) << "trial " << t;
    EXPECT_EQ(a.negative, b.negative) << "trial " << t;
    EXPECT_EQ(a.zero, b.zero) << "trial " << t;
  }
}

TEST(DivClassParse, AcceptsPlainAndParenthesized) {
  EXPECT_EQ(parse_div_class("1,-1"), (DivClass{1, -1}));
  EXPECT_EQ(parse_div_class("(1,-1)"), (DivClass{1, -1}));
  EXPECT_EQ(parse_div_class(" 2 , +3 "), (DivClass{2, 3}));
  EXPECT_EQ(parse_div_class("123456789012345678901234567890")[0],
            BigInt("123456789012345678901234567890"));
}

TEST(DivClassParse, RejectsMalformed) {
  for (const char* bad : {"", "()", "1,,2", "a", "1,", "1.5", "--1", "1 2"}) {
    EXPECT_THROW(parse_div_class(bad), InputError) << bad;
  }
}

TEST(DivClassParse, RoundTripsThroughKey) {
  const DivClass d{-3, 0, 17};
  EXPECT_EQ(parse_div_class(d.key()), d);
  EXPECT_EQ(parse_div_class(d.to_string()), d);
}

TEST(CheckRank, RejectsWrongLength) {
  EXPECT_THROW(quartic().check_rank(DivClass{1, 2}), InputError);
}
