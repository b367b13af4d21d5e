#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace qorder {

enum class OptimizerMethod { Adam, GradientDescent };

std::string_view to_string(OptimizerMethod m) noexcept;
OptimizerMethod parse_optimizer_method(std::string_view label);

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::Adam;
  double learning_rate = 0.01;
  // Number of parameter updates; 0 evaluates the initial point only.
  int max_iters = 2000;
  // Converged when |L_t - L_{t-w}| <= tol * max(|L_{t-w}|, 1e-12) with
  // w = convergence_window.
  double convergence_tol = 1e-7;
  int convergence_window = 50;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  void validate() const;
};

// Stateful first-order update rule.
class Optimizer {
 public:
  Optimizer(const OptimizerConfig& cfg, std::size_t n_params);

  // params <- params - step(gradient)
  void step(std::span<double> params, std::span<const double> gradient);

 private:
  OptimizerConfig cfg_;
  std::vector<double> m_;
  std::vector<double> v_;
  long t_ = 0;
};

}  // namespace qorder
