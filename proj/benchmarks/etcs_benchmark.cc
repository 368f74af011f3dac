// Copyright 2026 The etcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <string>

#include "etcs/assembler.h"
#include "etcs/configuration.h"
#include "etcs/eta_series.h"
#include "etcs/json_io.h"
#include "etcs/lattice.h"
#include "etcs/torus_gluing.h"

namespace {

std::string Data(const std::string& rel) { return std::string(ETCS_DATA_DIR) + "/" + rel; }

void BM_K3Signature(benchmark::State& state) {
  etcs::GramMatrix k3 = etcs::StandardLattice(etcs::StandardLatticeName::kK3);
  for (auto _ : state) benchmark::DoNotOptimize(etcs::Signature(k3));
}
BENCHMARK(BM_K3Signature);

void BM_DedekindLog(benchmark::State& state) {
  etcs::HalfPlanePoint tau{0.37, 0.011 * state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(etcs::DedekindLog(tau, 1e-12));
}
BENCHMARK(BM_DedekindLog)->Arg(1)->Arg(10)->Arg(100);

void BM_ConfigurationAngles(benchmark::State& state) {
  etcs::Configuration cfg = etcs::LoadConfiguration(Data("configurations/twisted_cubic_pair.json"));
  for (auto _ : state) benchmark::DoNotOptimize(etcs::ConfigurationAngles(cfg));
}
BENCHMARK(BM_ConfigurationAngles);

void BM_EnumerateGluings(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(etcs::Enumerate(3, 2, bound));
  state.SetComplexityN(bound);
}
BENCHMARK(BM_EnumerateGluings)->RangeMultiplier(2)->Range(8, 32)->Complexity();

class AssembleFixture : public benchmark::Fixture {
 public:
  void SetUp(const benchmark::State&) override {
    instance_ = etcs::LoadInstance(Data("instances/z3_rank1_matching.json"));
  }

 protected:
  etcs::EtcsInstance instance_;
};

BENCHMARK_F(AssembleFixture, NuBar)(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(etcs::AssembleNuBar(instance_));
}

}  // namespace

BENCHMARK_MAIN();
