#include <gtest/gtest.h>

#include <algorithm>
#include <optional>

#include "oracles.hpp"
#include "suite.hpp"

using namespace k3lm;
using namespace k3lm::testing;

namespace {

// A(L) straight from the definition: h0 of a nef class on a rank-one lattice
// with no roots is D^2/2 + 2, and every class of positive degree is nef.
std::vector<DivClass> rank_one_a_set(long form, long l) {
  std::vector<DivClass> out;
  for (long x = 1; x < l; ++x) {
    const long h0_d = form * x * x / 2 + 2;
    const long h0_rest = form * (l - x) * (l - x) / 2 + 2;
    if (h0_d >= 2 && h0_rest >= 2) out.push_back(DivClass{x});
  }
  return out;
}

}  // namespace

TEST(Clifford, DoublePlaneASet) {
  ConeOracle o(double_plane());
  const auto want = rank_one_a_set(2, 3);
  ASSERT_EQ(want, (std::vector<DivClass>{DivClass{1}, DivClass{2}}));
  EXPECT_EQ(enumerate_a_set(o, DivClass{3}), want);
}

TEST(Clifford, QuarticASetIsEmpty) {
  ConeOracle o(quartic());
  ASSERT_TRUE(rank_one_a_set(4, 1).empty());
  EXPECT_TRUE(enumerate_a_set(o, DivClass{1}).empty());
  EXPECT_FALSE(mu(o, DivClass{1}).mu.has_value());
}

TEST(Clifford, DoublePlaneMuIsTwo) {
  ConeOracle o(double_plane());
  const auto m = mu(o, DivClass{3});
  ASSERT_TRUE(m.mu.has_value());
  EXPECT_EQ(*m.mu, 2);
  EXPECT_EQ(m.minimizers, (std::vector<DivClass>{DivClass{1}, DivClass{2}}));
}

TEST(Clifford, DoublePlaneReport) {
  ConeOracle o(double_plane());
  const auto r = clifford_index(o, DivClass{3});
  EXPECT_EQ(r.genus, 10);
  EXPECT_EQ(r.cliff, 2);
  EXPECT_EQ(r.gonality_range.first, 4);
  EXPECT_EQ(r.gonality_range.second, 5);
  ASSERT_TRUE(r.bound_witness.has_value());
  const BigInt sq = o.lattice().square(*r.bound_witness);
  EXPECT_GE(sq, 0);
  EXPECT_LE(sq, r.cliff + 2);
  EXPECT_LE(2 * sq, o.lattice().intersect(*r.bound_witness, DivClass{3}));
}

TEST(Clifford, QuarticReportUsesGenericValue) {
  ConeOracle o(quartic());
  const auto r = clifford_index(o, DivClass{1});
  EXPECT_EQ(r.genus, 3);
  EXPECT_EQ(r.cliff, (3 - 1) / 2);
  EXPECT_EQ(r.gonality_range, std::make_pair(BigInt(3), BigInt(4)));
  EXPECT_FALSE(r.mu.has_value());
  EXPECT_FALSE(r.bound_witness.has_value());
}

TEST(Clifford, GenusTwoHasCliffordIndexZero) {
  ConeOracle o(PicardLattice::create({{2}}, DivClass{1}));
  const auto r = clifford_index(o, DivClass{1});
  EXPECT_EQ(r.genus, 2);
  EXPECT_EQ(r.cliff, 0);
}

TEST(Clifford, HyperbolicPlaneAgainstDefinition) {
  // L = (2,2) on U is base point free and big; A(L) from the definition over a box.
  ConeOracle o(hyperbolic_plane());
  const DivClass l{2, 2};
  std::vector<DivClass> want;
  for (const auto& d : box_vectors(2, 12)) {
    const BigInt deg = o.lattice().degree(d);
    if (deg <= 0 || deg >= o.lattice().degree(l)) continue;
    if (o.h0(d) >= 2 && o.h0(l - d) >= 2) want.push_back(d);
  }
  EXPECT_EQ(enumerate_a_set(o, l), want);
  const auto r = clifford_index(o, l);
  std::optional<BigInt> best;
  for (const auto& d : want) {
    const BigInt v = o.lattice().intersect(d, l - d) - 2;
    if (!best || v < *best) best = v;
  }
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(r.mu, best);
  EXPECT_EQ(r.cliff, std::min(floor_div(r.genus - 1, 2), *best));
}

TEST(Clifford, RejectsNonBasePointFreeOrNotBig) {
  ConeOracle u(hyperbolic_plane());
  EXPECT_THROW(clifford_index(u, DivClass{1, 1}), DomainError);  // 2F + Gamma
  EXPECT_THROW(clifford_index(u, DivClass{0, 1}), DomainError);  // square zero
  EXPECT_THROW(clifford_index(u, DivClass{1, 0}), DomainError);  // not nef
  EXPECT_THROW(clifford_index(u, DivClass{0, 0}), DomainError);
}

TEST(Clifford, SymmetryAndMinimizerInvariantsOnSuite) {
  for (const auto& [name, lat] : test_suite()) {
    SCOPED_TRACE(name);
    ConeOracle o(lat);
    const DivClass& h = lat.polarization();
    if (!o.is_base_point_free(h)) continue;
    const auto r = clifford_index(o, h);
    for (const auto& d : r.a_set) {
      EXPECT_TRUE(std::binary_search(r.a_set.begin(), r.a_set.end(), h - d)) << d;
    }
    if (r.mu) EXPECT_GE(*r.mu, 0);
    for (const auto& d : r.a0_set) {
      const auto p = o.cohomology(d);
      EXPECT_EQ(p.h1, 0) << d;
      EXPECT_EQ(lat.intersect(h, p.fixed_part), 0) << d;
    }
    const BigInt generic = floor_div(r.genus - 1, 2);
    EXPECT_EQ(r.cliff, r.mu ? std::min(generic, *r.mu) : generic);
    EXPECT_EQ(r.gonality_range.first, r.cliff + 2);
    EXPECT_EQ(r.gonality_range.second, r.cliff + 3);
  }
}
