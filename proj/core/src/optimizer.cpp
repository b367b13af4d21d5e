#include "qorder/optimizer.hpp"

#include <cmath>
#include <string>

#include "qorder/error.hpp"

namespace qorder {

std::string_view to_string(OptimizerMethod m) noexcept {
  return m == OptimizerMethod::Adam ? "adam" : "plain_gd";
}

OptimizerMethod parse_optimizer_method(std::string_view label) {
  if (label == "adam") return OptimizerMethod::Adam;
  if (label == "plain_gd") return OptimizerMethod::GradientDescent;
  throw ArgumentError("unknown optimizer '" + std::string(label) + "'");
}

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) throw ArgumentError("learning_rate must be > 0");
  if (max_iters < 0) throw ArgumentError("max_iters must be >= 0");
  if (!(convergence_tol >= 0.0)) throw ArgumentError("convergence_tol must be >= 0");
  if (convergence_window < 1) throw ArgumentError("convergence_window must be >= 1");
  if (method == OptimizerMethod::Adam) {
    if (!(beta1 >= 0.0 && beta1 < 1.0)) throw ArgumentError("adam beta1 must lie in [0, 1)");
    if (!(beta2 >= 0.0 && beta2 < 1.0)) throw ArgumentError("adam beta2 must lie in [0, 1)");
    if (!(epsilon > 0.0)) throw ArgumentError("adam epsilon must be > 0");
  }
}

Optimizer::Optimizer(const OptimizerConfig& cfg, std::size_t n_params) : cfg_(cfg), m_(n_params, 0.0), v_(n_params, 0.0) {
  cfg_.validate();
}

void Optimizer::step(std::span<double> params, std::span<const double> gradient) {
  if (params.size() != m_.size() || gradient.size() != m_.size()) throw SizeError("optimizer step size mismatch");
  if (cfg_.method == OptimizerMethod::GradientDescent) {
    for (std::size_t k = 0; k < params.size(); ++k) params[k] -= cfg_.learning_rate * gradient[k];
    return;
  }
  ++t_;
  const double c1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  for (std::size_t k = 0; k < params.size(); ++k) {
    m_[k] = cfg_.beta1 * m_[k] + (1.0 - cfg_.beta1) * gradient[k];
    v_[k] = cfg_.beta2 * v_[k] + (1.0 - cfg_.beta2) * gradient[k] * gradient[k];
    const double mhat = m_[k] / c1;
    const double vhat = v_[k] / c2;
    params[k] -= cfg_.learning_rate * mhat / (std::sqrt(vhat) + cfg_.epsilon);
  }
}

}  // namespace qorder
