#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "softbte/certify.hpp"
#include "softbte/errors.hpp"

using namespace softbte;

namespace {

const CollisionOperator& op8() {
  static const CollisionOperator op(VelocityGrid(6.0, 8), make_model_params(-1.0));
  return op;
}

std::string note(const Certificate& c, const std::string& key) {
  for (const auto& [k, v] : c.notes)
    if (k == key) return v;
  return {};
}

TimeSeriesRecord decreasing_record(int rows) {
  TimeSeriesRecord r;
  for (int k = 0; k < rows; ++k) {
    TimeSeriesRow row;
    row.t = 0.1 * k;
    row.rel_entropy = 0.02 * std::exp(-0.3 * row.t);
    row.split = {0.4 * row.rel_entropy, 0.1 * row.rel_entropy};
    r.rows.push_back(row);
  }
  return r;
}

struct Series {
  std::vector<double> t, y;
};

Series stretched(double lambda, double p, double t_end = 40.0, int n = 400) {
  Series s;
  for (int i = 0; i <= n; ++i) {
    s.t.push_back(t_end * i / n);
    s.y.push_back(0.1 * std::exp(-lambda * std::pow(s.t.back(), p)));
  }
  return s;
}

}  // namespace

TEST(FitHoldout, PassesWithinSlack) {
  const std::vector<double> train{1.0, 3.0, 2.0}, hold{0.5, 3.1};
  const Certificate c = fit_holdout("x", "claim", "C", train, hold);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.constant("C"), 3.0);
  EXPECT_EQ(c.pass_fraction, 1.0);
  EXPECT_EQ(c.train_size, 3u);
  EXPECT_EQ(c.holdout_size, 2u);
}

TEST(FitHoldout, FailsBeyondSlack) {
  const std::vector<double> train{1.0, 3.0}, hold{3.2, 1.0};
  const Certificate c = fit_holdout("x", "claim", "C", train, hold);
  EXPECT_EQ(c.verdict, Verdict::kFail);
  EXPECT_DOUBLE_EQ(c.pass_fraction, 0.5);
  EXPECT_NEAR(c.worst_violation, 3.2 / 3.15 - 1.0, 1e-15);
}

TEST(FitHoldout, DegenerateInputs) {
  const std::vector<double> zeros{0.0, 0.0}, ok{1.0}, bad{1.0, std::numeric_limits<double>::quiet_NaN()}, none;
  EXPECT_EQ(fit_holdout("x", "c", "C", zeros, ok).verdict, Verdict::kDegenerate);
  EXPECT_EQ(fit_holdout("x", "c", "C", bad, ok).verdict, Verdict::kDegenerate);
  EXPECT_EQ(fit_holdout("x", "c", "C", none, ok).verdict, Verdict::kDegenerate);
  EXPECT_EQ(fit_holdout("x", "c", "C", ok, none).verdict, Verdict::kDegenerate);
  EXPECT_EQ(to_string(Verdict::kDegenerate), "degenerate");
  EXPECT_THROW(fit_holdout("x", "c", "C", ok, ok).constant("missing"), Error);
}

TEST(CertifyNu, BandIsPositiveAndStable) {
  for (double g : {-0.5, -1.0, -2.0, -2.5}) {
    const Certificate c = certify_nu_bounds(make_model_params(g));
    EXPECT_TRUE(c.passed()) << g;
    EXPECT_GT(c.constant("c1"), 0.0);
    EXPECT_LE(c.constant("c1"), c.constant("c2"));
  }
}

TEST(CertifyNu, TooFewSpeedsIsDegenerate) {
  NuSweep s;
  s.points = 2;
  EXPECT_EQ(certify_nu_bounds(make_model_params(-1.0), s).verdict, Verdict::kDegenerate);
}

TEST(CertifyK1, ConstantIsTheMaxwellianPrefactor) {
  // k1 / (|v-u|^gamma e^{-|v|^2/4 - |u|^2/4}) = 2 pi (2 pi)^{-3/2} identically
  const Certificate c = certify_k1_bound(make_model_params(-1.0), 8.0, 500, 3);
  EXPECT_TRUE(c.passed());
  EXPECT_NEAR(c.constant("C"), 1.0 / std::sqrt(2.0 * std::numbers::pi), 1e-12);
}

TEST(CertifyKlowcut, ZeroProfileIsDegenerate) {
  const std::vector<double> zero(op8().grid().size(), 0.0);
  const std::vector<double> eps{0.4, 0.2};
  EXPECT_EQ(certify_klowcut_scaling(op8(), WeightParams{}, eps, zero).verdict, Verdict::kDegenerate);
}

TEST(CertifyKchi, RejectsInadmissibleS0) {
  WeightParams wp;
  wp.q = 0.5;
  wp.s0 = 0.4;
  EXPECT_THROW(certify_kchi_weighted(op8(), wp, {}, 1), ConfigError);
}

TEST(CertifyGamma, ZeroInputThrows) {
  const std::vector<double> zero(op8().grid().size(), 0.0);
  EXPECT_THROW(gamma_loss_ratio(op8(), WeightParams{}, 2.5, zero, 4.0), DomainError);
  EXPECT_THROW(gamma_gain_ratio(op8(), WeightParams{}, 2.5, zero, 4.0), DomainError);
}

TEST(CertifyGamma, RatiosAreScaleInvariant) {
  // both sides of the bounds are quadratic in f
  const auto& op = op8();
  std::vector<double> f(op.tables().sqrt_mu);
  const double r1 = gamma_loss_ratio(op, WeightParams{}, 2.5, f, 4.0);
  for (double& x : f) x *= 3.0;
  const double r3 = gamma_loss_ratio(op, WeightParams{}, 2.5, f, 4.0);
  EXPECT_NEAR(r3, r1, 1e-12 * r1);
  EXPECT_GT(r1, 0.0);
}

TEST(CertifyEntropy, MonotoneRecordPasses) {
  const std::vector<TimeSeriesRecord> recs{decreasing_record(30), decreasing_record(10)};
  const Certificate c = certify_entropy(recs);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.constant("split_violations"), 0.0);
  EXPECT_NEAR(c.constant("tol_H"), 1e-6 * 0.02 + 1e-13, 1e-20);
}

TEST(CertifyEntropy, AdversarialFixtureFails) {
  const std::vector<TimeSeriesRecord> recs{adversarial_entropy_record(decreasing_record(30))};
  const Certificate c = certify_entropy(recs);
  EXPECT_EQ(c.verdict, Verdict::kFail);
  EXPECT_GT(c.constant("max_increase"), 1e-3 * 0.02);
  EXPECT_THROW(adversarial_entropy_record(decreasing_record(2)), ConfigError);
}

TEST(CertifyEntropy, SplitViolationFails) {
  TimeSeriesRecord r = decreasing_record(10);
  r.rows[4].split.b = r.rows[4].rel_entropy;
  const std::vector<TimeSeriesRecord> recs{r};
  const Certificate c = certify_entropy(recs);
  EXPECT_EQ(c.verdict, Verdict::kFail);
  EXPECT_EQ(c.constant("split_violations"), 1.0);
}

TEST(CertifyEntropy, NoRowsIsDegenerate) {
  const std::vector<TimeSeriesRecord> recs{TimeSeriesRecord{}};
  EXPECT_EQ(certify_entropy(recs).verdict, Verdict::kDegenerate);
}

TEST(CertifyDecay, ExactRateOneThirdPasses) {
  const ModelParams m = make_model_params(-1.0);
  const Series s = stretched(0.9, 1.0 / 3.0);
  const Certificate c = certify_decay(s.t, s.y, m, WeightParams{0.5, 1.0, 3.5});
  EXPECT_TRUE(c.passed());
  EXPECT_NEAR(c.constant("rho_theory"), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(c.constant("rho_est"), 1.0 / 3.0, 1e-5);
  EXPECT_EQ(note(c, "over_decay"), "");
}

TEST(CertifyDecay, FasterDecayPassesWithFlag) {
  const Series s = stretched(0.3, 0.6);
  const Certificate c = certify_decay(s.t, s.y, make_model_params(-1.0), WeightParams{0.5, 1.0, 3.5});
  EXPECT_GE(c.constant("r2_constrained"), 0.95);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(note(c, "over_decay"), "true");
}

TEST(CertifyDecay, SlowerDecayFails) {
  const Series s = stretched(0.9, 0.1);
  const Certificate c = certify_decay(s.t, s.y, make_model_params(-1.0), WeightParams{0.5, 1.0, 3.5});
  EXPECT_EQ(c.verdict, Verdict::kFail);
}

TEST(CertifyDecay, NonDecayingFails) {
  Series s = stretched(0.0, 1.0);
  const Certificate c = certify_decay(s.t, s.y, make_model_params(-1.0), WeightParams{0.5, 1.0, 3.5});
  EXPECT_EQ(c.verdict, Verdict::kFail);
  EXPECT_FALSE(note(c, "reason").empty());
}

TEST(CertifyDecay, IncreaseInsideWindowFails) {
  Series s = stretched(0.9, 1.0 / 3.0);
  s.y[300] = s.y[299] * 1.0001;
  const Certificate c = certify_decay(s.t, s.y, make_model_params(-1.0), WeightParams{0.5, 1.0, 3.5});
  EXPECT_EQ(c.verdict, Verdict::kFail);
  EXPECT_EQ(c.constant("window_increases"), 1.0);
}

TEST(RunSuite, UnknownSuiteListsValidNames) {
  try {
    run_suite("bogus", SimulationConfig{}, VerifySettings{});
    FAIL();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    for (const auto& n : suite_names()) EXPECT_NE(msg.find(n), std::string::npos) << n;
  }
}

TEST(RunSuite, NuSuiteRunsWithoutAnOperator) {
  const auto certs = run_suite("nu", SimulationConfig{}, VerifySettings{});
  ASSERT_EQ(certs.size(), 1u);
  EXPECT_EQ(certs[0].lemma_id, "nu_est");
  EXPECT_TRUE(certs[0].passed());
}
