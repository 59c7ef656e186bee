#include "helpers.hpp"
#include "rayzeta/error.hpp"
#include "rayzeta/family.hpp"

#include <gtest/gtest.h>

namespace rayzeta {
namespace {

using testing::R;

const std::vector<std::int64_t> kKs{0, 1, 2, 3, 4, 5, 6};

std::size_t usable(const Family& family, const RayLabel& label, std::int64_t r) {
  std::size_t count = 0;
  for (std::int64_t k : kKs) {
    const auto inst = family.instance(3 * k + r);
    if (inst && in_f_delta(inst->field.basis(), 3, label)) ++count;
  }
  return count;
}

TEST(Presets, Shapes) {
  EXPECT_EQ(preset("rd-n2p2").degree(), 1u);
  EXPECT_EQ(preset("quartic-16n4").degree(), 2u);
  EXPECT_THROW(preset("nope"), ConfigError);
  EXPECT_EQ(preset_names().size(), 3u);
}

TEST(Family, InstancesAndSkips) {
  const Family family(preset("rd-n2p2"));
  std::string reason;
  EXPECT_EQ(family.instance(5, &reason), nullptr);
  EXPECT_NE(reason.find("27"), std::string::npos);
  const auto inst = family.instance(3);
  ASSERT_NE(inst, nullptr);
  EXPECT_EQ(inst->radicand, 11);
  EXPECT_TRUE(inst->maximal_order);
  EXPECT_EQ(inst->field.eps(), testing::Q(10, 3, 11));
}

TEST(Family, InlineHypothesisFailures) {
  FamilySpec spec;
  spec.name = "inline";
  spec.f = Polynomial::parse("x^2+2");
  spec.a = {Polynomial::parse("2x-4"), Polynomial::parse("x")};
  spec.validate();
  const Family family(spec);
  EXPECT_THROW(family.instance(1), HypothesisError);
}

TEST(GammaTau, Examples) {
  const GammaTau a = gamma_tau(preset("rd-n2p2"), 2, 1);
  EXPECT_EQ(a.gamma[1], 1);
  EXPECT_EQ(a.tau[1], 0);
  const GammaTau b = gamma_tau(preset("quartic-16n4"), 3, 0);
  EXPECT_EQ(b.gamma[1], 1);
  EXPECT_EQ(b.tau[1], 0);
  // a_0(x) = 2x at r = 1, q = 2 is exactly q.
  EXPECT_EQ(a.gamma[0], 2);
  EXPECT_EQ(a.tau[0], 0);
}

TEST(GammaTau, DecompositionHolds) {
  for (const char* name : {"rd-n2p2", "quartic-16n4"}) {
    const FamilySpec spec = preset(name);
    for (std::int64_t q : {2, 3, 5}) {
      for (std::int64_t r = 0; r < q; ++r) {
        const GammaTau gt = gamma_tau(spec, q, r);
        for (std::size_t i = 0; i < spec.s(); ++i) {
          EXPECT_EQ(Rational(q * gt.tau[i] + gt.gamma[i]), spec.a[i](r));
          EXPECT_GE(gt.gamma[i], 1);
          EXPECT_LE(gt.gamma[i], q);
        }
      }
    }
  }
}

TEST(AIm, Examples) {
  EXPECT_EQ(A_im(preset("rd-n2p2"), 0, 1, 3, 2), 2);
  const FamilySpec quartic = preset("quartic-16n4");
  for (std::int64_t q : {2, 3, 5}) {
    for (std::int64_t r = 0; r < q; ++r) {
      EXPECT_EQ(A_im(quartic, 0, 2, q, r), 8 * q);
      EXPECT_EQ(A_im(quartic, 0, 1, q, r), 16 * r + 8);
    }
  }
}

TEST(AIm, ReassemblesThePolynomial) {
  const FamilySpec spec = preset("quartic-16n4");
  for (std::int64_t q : {2, 3}) {
    for (std::int64_t r = 0; r < q; ++r) {
      const GammaTau gt = gamma_tau(spec, q, r);
      for (std::int64_t k = 0; k < 5; ++k) {
        for (std::size_t i = 0; i < spec.s(); ++i) {
          Rational value = q * gt.tau[i] + gt.gamma[i];
          for (unsigned m = 1; m <= 2; ++m) value += q * A_im(spec, i, m, q, r) * pow(Rational(k), m);
          EXPECT_EQ(value, spec.a[i](q * k + r));
        }
      }
    }
  }
}

TEST(NuSeq, Example) {
  const ResidueData rd = residue_data(preset("rd-n2p2"), 2, 1);
  const NuSeq nu = nu_seq(rd, {1, 0}, 4);
  EXPECT_EQ(nu.at(-1), R("1/2"));
  EXPECT_EQ(nu.at(0), 1);
}

TEST(NuSeq, ClosedFormOfQuadraticFamily) {
  const FamilySpec spec = preset("rd-n2p2");
  for (std::int64_t q : {2, 3, 5}) {
    for (std::int64_t r = 0; r < q; ++r) {
      const ResidueData rd = residue_data(spec, q, r);
      const std::int64_t g1 = rd.big_gamma[1];
      for (std::int64_t a = 0; a < q; ++a) {
        for (std::int64_t b = 0; b < q; ++b) {
          if (a == 0 && b == 0) continue;
          const NuSeq nu = nu_seq(rd, {a, b}, static_cast<std::size_t>(g1 + 2));
          // Between b_0 and b_{Gamma_1} the nu form a progression with step
          // ((2r+1)B + A)/q mod 1.
          EXPECT_EQ(nu.at(g1), Rational(residue_one((2 * r * r + r + 1) * b + r * a, q), q));
          EXPECT_EQ(nu.at(g1 - 1), Rational(residue_one((2 * r * r - r) * b + (r - 1) * a, q), q));
          EXPECT_EQ(nu.at(0), Rational(residue_one(b, q), q));
        }
      }
    }
  }
}

TEST(CoeffsClosed, QuarticTopCoefficient) {
  const FamilySpec spec = preset("quartic-16n4");
  for (std::int64_t q : {2, 3, 5}) {
    for (std::int64_t r = 0; r < q; ++r) {
      const ResidueData rd = residue_data(spec, q, r);
      const std::int64_t g1 = rd.big_gamma[1];
      for (std::int64_t a = 0; a < q; ++a) {
        for (std::int64_t b = 0; b < q; ++b) {
          if (a == 0 && b == 0) continue;
          const std::vector<Rational> c = coeffs_closed(spec, rd, {a, b});
          const Rational nu = nu_seq(rd, {a, b}, static_cast<std::size_t>(g1 + 2)).at(g1);
          EXPECT_EQ(c[2], Rational(2 * q * q, 3) * (6 * nu * nu - 6 * nu + 1));
        }
      }
    }
  }
}

TEST(QuasiPoly, QuadraticAnchor) {
  const Family family(preset("rd-n2p2"));
  const QuasiPolyResult qp = quasi_poly(family, {1, 0}, 2, 1, kKs);
  EXPECT_EQ(qp.coeffs.size(), 2u);
  EXPECT_EQ(qp.coeffs[0], R("1/6"));
  EXPECT_EQ(qp.formula, CoefficientFormula{});
  const FitResult fit = fit_oracle(family, {1, 0}, 2, 1, {0, 1, 2, 3});
  EXPECT_TRUE(fit.consistent);
  EXPECT_EQ(fit.coeffs, qp.coeffs);
}

TEST(QuasiPoly, QuarticDegreeTwo) {
  const Family family(preset("quartic-16n4"));
  for (std::int64_t r = 0; r < 3; ++r) {
    for (const RayLabel& label : std::vector<RayLabel>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}) {
      if (usable(family, label, r) < 4) continue;
      const QuasiPolyResult qp = quasi_poly(family, label, 3, r, kKs);
      const FitResult fit = fit_oracle(family, label, 3, r, kKs);
      EXPECT_TRUE(fit.consistent);
      EXPECT_EQ(fit.coeffs, qp.coeffs);
    }
  }
}

TEST(QuasiPoly, ConstantFamilyIsDegreeZero) {
  FamilySpec spec;
  spec.name = "constant";
  spec.f = Polynomial::parse("3");
  spec.a = {Polynomial::parse("2"), Polynomial::parse("1")};
  spec.validate();
  const Family family(spec);
  EXPECT_EQ(spec.degree(), 0u);
  const QuasiPolyResult qp = quasi_poly(family, {1, 0}, 2, 0, {0, 1, 2});
  ASSERT_EQ(qp.coeffs.size(), 1u);
  EXPECT_EQ(qp.coeffs[0], R("1/6"));
}

TEST(NormInvariance, PresetsPassAdversarialFails) {
  for (const char* name : {"rd-n2p2", "quartic-16n4"}) {
    const Family family(preset(name));
    for (std::int64_t q : {2, 3, 4, 5}) {
      for (std::int64_t r = 0; r < q; ++r) {
        for (std::int64_t a = 0; a < q; ++a) {
          for (std::int64_t b = 0; b < q; ++b) {
            if (a != 0 || b != 0) {
              EXPECT_TRUE(norm_invariance_check(family, {a, b}, q, r, {0, 1, 2, 3, 4}));
            }
          }
        }
      }
    }
  }
  const Family adversarial(preset("adversarial"));
  bool any = false;
  for (std::int64_t r = 0; r < 2; ++r) any = any || !norm_invariance_check(adversarial, {0, 1}, 2, r, kKs);
  EXPECT_TRUE(any);
  EXPECT_THROW(quasi_poly(adversarial, {0, 1}, 2, 0, kKs), HypothesisError);
}

TEST(NormInvariance, InlineFamilyAnswersWithoutThrowing) {
  // delta(n) - 1 = [[n+1, 1]] lives in Q(sqrt((n+1)(n+5))).
  FamilySpec spec;
  spec.name = "inline";
  spec.f = Polynomial::parse("x^2+6x+5");
  spec.a = {Polynomial::parse("x+1"), Polynomial::parse("1")};
  spec.n_min = 1;
  spec.validate();
  const Family family(spec);
  for (std::int64_t q : {2, 3}) {
    for (std::int64_t r = 0; r < q; ++r) {
      EXPECT_NO_THROW(norm_invariance_check(family, {1, 1}, q, r, kKs));
    }
  }
}

TEST(OrbitRecursion, QuadraticFamily) {
  // eps = (1 - n) + n delta and delta^2 = 2(n+1) delta - (2n - 1).
  const Family family(preset("rd-n2p2"));
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto inst = family.instance(n);
    if (!inst) continue;
    for (std::int64_t q : {2, 3, 5, 7}) {
      for (std::int64_t c = 0; c < q; ++c) {
        for (std::int64_t d = 0; d < q; ++d) {
          const RayLabel image = eps_act(inst->field.eps(), {c, d}, inst->field.basis(), q);
          EXPECT_EQ(image.c, residue_zero((1 - n) * c - (2 * n * n - n) * d, q));
          EXPECT_EQ(image.d, residue_zero(n * c + (2 * n * n + n + 1) * d, q));
        }
      }
    }
  }
}

TEST(OrbitRecursion, QuarticFamily) {
  const Family family(preset("quartic-16n4"));
  for (std::int64_t n = 0; n <= 6; ++n) {
    const auto inst = family.instance(n);
    if (!inst) continue;
    const std::int64_t t = 2 * n + 1;
    for (std::int64_t q : {2, 3, 5}) {
      for (std::int64_t c = 0; c < q; ++c) {
        for (std::int64_t d = 0; d < q; ++d) {
          const RayLabel image = eps_act(inst->field.unit(), {c, d}, q);
          EXPECT_EQ(image.c, residue_zero((1 - t) * c - (2 * t * t * t - 2 * t * t + t) * d, q));
          EXPECT_EQ(image.d, residue_zero(t * c + (2 * t * t * t + t + 1) * d, q));
        }
      }
    }
  }
}

TEST(Yamamoto, PeriodicInsideLongRuns) {
  // a_1(n) = n >= q: the x_i repeat with period q after S_0 = 0.
  const Family family(preset("rd-n2p2"));
  for (std::int64_t n : {7, 9, 11}) {
    const auto inst = family.instance(n);
    ASSERT_NE(inst, nullptr);
    for (std::int64_t q : {2, 3, 5}) {
      if (n < q) continue;
      for (const RayLabel& label : f_delta(inst->field.basis(), q)) {
        const XYSeq xy = yamamoto_xy(label, q, inst->field.minus(), inst->field.m());
        for (std::size_t i = 1; i + q < static_cast<std::size_t>(n); ++i) EXPECT_EQ(xy.xs[i + q], xy.xs[i]);
      }
    }
  }
}

TEST(CoeffsClosed, MatchesEachOrbitMember) {
  const Family family(preset("rd-n2p2"));
  const QuasiPolyResult qp = quasi_poly(family, {1, 0}, 2, 1, {0, 1, 2});
  ASSERT_FALSE(qp.candidates.empty());
  EXPECT_EQ(qp.candidates.front().formula, CoefficientFormula{});
  EXPECT_TRUE(qp.candidates.front().per_member);
  // k = 2 is n = 5, where f(5) = 27.
  EXPECT_EQ(qp.verified_k, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(qp.skipped_k, (std::vector<std::int64_t>{2}));
}

TEST(FitOracle, NeedsEnoughSamples) {
  const Family family(preset("quartic-16n4"));
  EXPECT_THROW(fit_oracle(family, {1, 0}, 2, 0, {0, 1}), HypothesisError);
}

}  // namespace
}  // namespace rayzeta
