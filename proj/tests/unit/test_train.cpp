#include <gtest/gtest.h>

#include <cmath>

#include "qorder/error.hpp"
#include "qorder/optimizer.hpp"
#include "qorder/seeding.hpp"
#include "qorder/train.hpp"

using namespace qorder;

namespace {

RunSpec small_z2_spec(int iters) {
  RunSpec s{build_z2_brickwork(4, 4), build_ising_annni(4), LossConfig{}, OptimizerConfig{},
            InitialStateKind::RandomProduct};
  s.optimizer.max_iters = iters;
  return s;
}

}  // namespace

TEST(Optimizer, AdamMinimizesQuadratic) {
  OptimizerConfig cfg;
  cfg.learning_rate = 0.1;
  Optimizer opt(cfg, 2);
  std::vector<double> x{3.0, -2.0};
  for (int t = 0; t < 2000; ++t) {
    const std::vector<double> g{2 * (x[0] - 1), 4 * (x[1] + 0.5)};
    opt.step(x, g);
  }
  EXPECT_NEAR(x[0], 1.0, 1e-3);
  EXPECT_NEAR(x[1], -0.5, 1e-3);
}

TEST(Optimizer, FirstAdamStepHasLearningRateLength) {
  // Bias correction makes the first update lr * g / (|g| + eps') = lr sign(g).
  Optimizer opt(OptimizerConfig{}, 1);
  std::vector<double> x{0.0};
  opt.step(x, std::vector<double>{-5.0});
  EXPECT_NEAR(x[0], 0.01, 1e-9);
}

TEST(Optimizer, PlainGradientDescent) {
  OptimizerConfig cfg;
  cfg.method = OptimizerMethod::GradientDescent;
  cfg.learning_rate = 0.5;
  Optimizer opt(cfg, 1);
  std::vector<double> x{1.0};
  opt.step(x, std::vector<double>{2.0});
  EXPECT_DOUBLE_EQ(x[0], 0.0);
  EXPECT_EQ(parse_optimizer_method("plain_gd"), OptimizerMethod::GradientDescent);
}

TEST(Optimizer, ConfigValidation) {
  OptimizerConfig cfg;
  cfg.learning_rate = 0;
  EXPECT_THROW(cfg.validate(), ArgumentError);
  cfg = {};
  cfg.beta1 = 1.0;
  EXPECT_THROW(cfg.validate(), ArgumentError);
  cfg = {};
  cfg.max_iters = -1;
  EXPECT_THROW(cfg.validate(), ArgumentError);
}

TEST(Seeding, StreamsAreDistinctAndStable) {
  EXPECT_EQ(derive_seed(1, 0), derive_seed(1, 0));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  // Reference value of splitmix64(0) from the published algorithm.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(Train, InitialParametersInSmallBox) {
  const auto p = initial_parameters(500, 99);
  for (double x : p) {
    EXPECT_GT(x, -0.1);
    EXPECT_LT(x, 0.1);
  }
  EXPECT_EQ(p, initial_parameters(500, 99));
}

TEST(Train, TracesHaveOneEntryPerIterationPlusInitial) {
  const auto spec = small_z2_spec(25);
  const auto rec = run_restart(spec, 3);
  EXPECT_EQ(rec.iterations, 25);
  for (const auto* tr : {&rec.loss, &rec.order, &rec.energy, &rec.variance}) EXPECT_EQ(tr->size(), 26u);
  ASSERT_EQ(rec.symmetry.size(), 1u);
  for (double s : rec.symmetry[0]) EXPECT_NEAR(s, rec.symmetry[0][0], 1e-12);
  EXPECT_LT(rec.loss.back(), rec.loss.front());
  EXPECT_TRUE(rec.succeeded());
}

TEST(Train, ZeroIterationsEvaluatesInitialPoint) {
  const auto rec = run_restart(small_z2_spec(0), 3);
  EXPECT_EQ(rec.iterations, 0);
  EXPECT_EQ(rec.loss.size(), 1u);
  EXPECT_EQ(rec.initial_params, rec.final_params);
  EXPECT_EQ(rec.status, RunStatus::MaxIterations);
}

TEST(Train, NonFiniteLossAborts) {
  auto spec = small_z2_spec(10);
  spec.loss.target_energy = 1e300;
  const auto rec = run_restart(spec, 1);
  EXPECT_EQ(rec.status, RunStatus::NumericError);
  EXPECT_FALSE(rec.succeeded());
  for (double x : rec.loss) EXPECT_TRUE(std::isfinite(x));
}

TEST(Train, ConvergenceStopsEarly) {
  auto spec = small_z2_spec(5000);
  spec.optimizer.convergence_tol = 1e-3;
  spec.optimizer.convergence_window = 10;
  const auto rec = run_restart(spec, 4);
  EXPECT_EQ(rec.status, RunStatus::Converged);
  EXPECT_LT(rec.iterations, 5000);
}

TEST(Train, MultiRestartIndependentOfJobs) {
  const auto spec = small_z2_spec(20);
  const auto a = multi_restart(spec, 4, 77, 1);
  const auto b = multi_restart(spec, 4, 77, 3);
  ASSERT_EQ(a.records.size(), 4u);
  for (std::size_t r = 0; r < 4; ++r) {
    EXPECT_EQ(a.records[r].seed, restart_seed(77, static_cast<int>(r)));
    EXPECT_EQ(a.records[r].final_params, b.records[r].final_params);
    EXPECT_EQ(a.records[r].loss, b.records[r].loss);
  }
  EXPECT_EQ(a.loss.mean, b.loss.mean);
}

TEST(Train, SummaryPadsShortTraces) {
  TrainingRecord a, b;
  a.loss = a.order = a.energy = a.variance = {1.0, 2.0, 3.0};
  b.loss = b.order = b.energy = b.variance = {3.0};
  const auto s = summarize({a, b});
  ASSERT_EQ(s.loss.mean.size(), 3u);
  EXPECT_DOUBLE_EQ(s.loss.mean[0], 2.0);
  EXPECT_DOUBLE_EQ(s.loss.mean[2], 3.0);
  EXPECT_DOUBLE_EQ(s.loss.stderr_of_mean[2], 0.0);
  EXPECT_NEAR(s.loss.stderr_of_mean[0], 1.0, 1e-15);  // sd sqrt(2) over sqrt(2)
}

TEST(Train, RunStatusLabelsRoundTrip) {
  for (auto s : {RunStatus::Converged, RunStatus::MaxIterations, RunStatus::NoImprovement, RunStatus::NumericError,
                 RunStatus::Error})
    EXPECT_EQ(parse_run_status(to_string(s)), s);
}
