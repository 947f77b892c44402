#include <gtest/gtest.h>

#include <cmath>

#include "support/criteria.hpp"

using namespace cutplane;
using cutplane::testing::Sampler;
using cutplane::testing::ulp_distance;

namespace {

errc error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return errc::domain;
}

}  // namespace

TEST(Derivative, Examples) {
  EXPECT_LE(ulp_distance(derivative(FunctionId::arcsin, {0.0, 0.0}), {1.0, 0.0}), 1);
  EXPECT_LE(ulp_distance(derivative(FunctionId::arccosh, {2.0, 0.0}), {1 / std::sqrt(3.0), 0.0}), 2);
  EXPECT_LE(ulp_distance(derivative(FunctionId::arccot, {0.0, 2.0}), {1.0 / 3.0, 0.0}), 2);
}

TEST(Derivative, KernelRules) {
  const Complex z{0.7, -1.3};
  EXPECT_LE(ulp_distance(derivative(FunctionId::X1, z), Complex{1.0, 0.0} / (2.0 * sqrt_zm1(z))), 2);
  EXPECT_LE(ulp_distance(derivative(FunctionId::X, z), z / sqrt_z2m1(z)), 2);
  EXPECT_LE(ulp_distance(derivative(FunctionId::Y, z), -(z / sqrt_1mz2(z))), 2);
  EXPECT_LE(ulp_distance(derivative(FunctionId::Z, z), z / sqrt_1pz2(z)), 2);
}

TEST(Derivative, OnCutIsASingularity) {
  EXPECT_EQ(error_kind([] { derivative(FunctionId::arcsin, {2.0, 0.0}); }), errc::singularity);
  EXPECT_EQ(error_kind([] { derivative(FunctionId::arcsin, {1.0, 0.0}); }), errc::singularity);
  EXPECT_EQ(error_kind([] { derivative(FunctionId::Z, {-0.0, 3.0}); }), errc::singularity);
  EXPECT_EQ(error_kind([] { derivative(FunctionId::arccoth, {0.5, -0.0}); }), errc::singularity);
}

TEST(Derivative, ReciprocalFamilyAtZeroIsABranchPoint) {
  for (auto f : {FunctionId::arccsc, FunctionId::arcsec, FunctionId::arccsch, FunctionId::arcsech})
    EXPECT_EQ(error_kind([f] { derivative(f, {0.0, 0.0}); }), errc::branch_point) << name(f);
}

TEST(Derivative, EveryFunctionHasARule) {
  for (auto f : all_functions) EXPECT_NO_THROW(derivative(f, {0.3, 0.4})) << name(f);
  for (auto f : inverse_functions) EXPECT_NO_THROW(antiderivative(f, {0.3, 0.4})) << name(f);
}

TEST(Derivative, MatchesFiniteDifferences) {
  const auto r = cutplane::testing::derivatives();
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Antiderivative, Examples) {
  EXPECT_LE(ulp_distance(antiderivative(FunctionId::arcsin, {0.0, 0.0}), {1.0, 0.0}), 1);
  const Complex at = antiderivative(FunctionId::arctan, {1.0, 0.0});
  EXPECT_NEAR(at.x, quarter_pi - 0.5 * std::log(2.0), 1e-15);
  EXPECT_EQ(at.y, 0.0);
  const Complex ac = antiderivative(FunctionId::arccosh, {2.0, 0.0});
  EXPECT_NEAR(ac.x, 2 * std::log(2 + std::sqrt(3.0)) - std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(ac.x, 0.90186, 1e-5);
}

TEST(Antiderivative, ExamplesMatchQuadrature) {
  const auto q = integrate([](double t) { return arctan({t, 0.0}); }, 0.0, 1.0, 1e-13);
  EXPECT_NEAR(q.value.x, antiderivative(FunctionId::arctan, {1.0, 0.0}).x, 1e-12);
  const auto r = integrate([](double t) { return arccosh({t, 0.0}); }, 1.0, 2.0, 1e-13);
  EXPECT_NEAR(r.value.x, antiderivative(FunctionId::arccosh, {2.0, 0.0}).x - 0.0, 1e-12);
}

TEST(Antiderivative, PrimitiveCutAdvisories) {
  // ln(z^2 - 1) on [-1, 1]
  EXPECT_EQ(error_kind([] { antiderivative(FunctionId::arctanh, {0.5, 0.0}); }), errc::primitive_cut);
  // ln(1 + z^2) on the imaginary axis beyond +-i
  EXPECT_EQ(error_kind([] { antiderivative(FunctionId::arccot, {0.0, 2.0}); }), errc::primitive_cut);
  // arctanh(Z(1/z)) on the real axis
  EXPECT_EQ(error_kind([] { antiderivative(FunctionId::arccsch, {2.0, 0.0}); }), errc::primitive_cut);
  // the one-sided policy returns the zero-sign limit
  const Complex up = antiderivative(FunctionId::arctanh, {0.5, 0.0}, PrimitiveCut::one_sided);
  const Complex near = antiderivative(FunctionId::arctanh, {0.5, 1e-12});
  EXPECT_LE(abs(up - near), 1e-10);
}

TEST(Antiderivative, OnItsOwnCutIsASingularity) {
  EXPECT_EQ(error_kind([] { antiderivative(FunctionId::arcsin, {3.0, 0.0}); }), errc::singularity);
  EXPECT_EQ(error_kind([] { antiderivative(FunctionId::arccsc, {0.0, 0.0}); }), errc::branch_point);
}

TEST(Antiderivative, LocalIncrementsAndFundamentalTheorem) {
  const auto r = cutplane::testing::antiderivatives();
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Antiderivative, FundamentalTheoremPerSegment) {
  for (auto f : inverse_functions) {
    for (const auto& seg : cutplane::testing::ftc_segments(f)) {
      const auto q = integrate([f](double t) { return evaluate(f, {t, 0.0}); }, seg.p, seg.q, 1e-12);
      const auto pol = cutplane::testing::ftc_policy(f);
      const Complex d = antiderivative(f, {seg.q, 0.0}, pol) - antiderivative(f, {seg.p, 0.0}, pol);
      EXPECT_LE(abs(q.value - d), 1e-9) << name(f) << " on [" << seg.p << ", " << seg.q << "]";
    }
  }
}
