#include <benchmark/benchmark.h>

#include <random>

#include "qorder/circuit.hpp"
#include "qorder/hamiltonian.hpp"
#include "qorder/objective.hpp"
#include "qorder/pauli.hpp"
#include "qorder/states.hpp"

using namespace qorder;

namespace {

std::vector<double> angles(int k) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> p(static_cast<std::size_t>(k));
  for (auto& x : p) x = u(rng);
  return p;
}

void BM_TwoSiteRotation(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  StateVector psi = random_product_state(n, 3);
  const auto p = PauliString::parse("Y3 Z4");
  for (auto _ : st) {
    apply_pauli_rotation(psi, p, 0.3);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(psi.dim()));
}
BENCHMARK(BM_TwoSiteRotation)->DenseRange(8, 20, 4);

void BM_DiagonalRotation(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  StateVector psi = random_product_state(n, 3);
  const auto p = PauliString::parse("Z2 Z3");
  for (auto _ : st) {
    apply_pauli_rotation(psi, p, 0.3);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(psi.dim()));
}
BENCHMARK(BM_DiagonalRotation)->DenseRange(8, 20, 4);

void BM_ApplyAnnni(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto h = build_ising_annni(n);
  const StateVector psi = random_product_state(n, 4);
  StateVector out(n);
  for (auto _ : st) {
    apply_hamiltonian(h, psi, out);
    benchmark::DoNotOptimize(out.amplitudes().data());
  }
}
BENCHMARK(BM_ApplyAnnni)->DenseRange(8, 16, 4);

void BM_LossGradientZ2(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto c = build_z2_brickwork(n, n, GeneratorAssignment::Composite);
  const auto h = build_ising_annni(n);
  const StateVector init = random_product_state(n, 5);
  LossFunction f(c, init, h, LossConfig{});
  const auto p = angles(c.n_params);
  std::vector<double> g(p.size());
  for (auto _ : st) benchmark::DoNotOptimize(f.evaluate_with_gradient(p, g).loss);
  st.counters["params"] = c.n_params;
}
BENCHMARK(BM_LossGradientZ2)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_LossGradientSpt(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto c = build_spt_layer(n);
  const auto h = build_cluster_ising(n);
  const StateVector init = cluster_state(n);
  LossConfig cfg;
  cfg.observable = OrderObservable::default_string_order(n);
  LossFunction f(c, init, h, cfg);
  const auto p = angles(c.n_params);
  std::vector<double> g(p.size());
  for (auto _ : st) benchmark::DoNotOptimize(f.evaluate_with_gradient(p, g).loss);
}
BENCHMARK(BM_LossGradientSpt)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
