#pragma once

#include "ddmf/circuit.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ddmf {

/// Gate alphabet for random circuits, with draw weights.
/// Order: X, V, V+, R(1/2), R(1/4).
inline constexpr int kBenchGateKinds = 5;

struct BenchConfig {
  int num_qubits = 30;
  int num_gates = 100;
  int trials = 10;
  std::uint64_t seed = 1;
  std::array<unsigned, kBenchGateKinds> gate_mix = {1, 1, 1, 1, 1};
  int max_controls = 2;
};

struct BenchRecord {
  int num_qubits = 0;
  int num_gates = 0;
  int trial = 0;               // 1-based
  std::uint64_t seed = 0;      // per-trial derived seed
  std::size_t nodes = 0;       // total nonterminal nodes interned
  std::size_t peak_nodes = 0;  // peak live nodes during the build
  double millis = 0.0;
  int retries = 0; // always 0: validity is by construction
};

struct BenchSummary {
  double mean_nodes = 0.0;
  double mean_peak_nodes = 0.0;
  double mean_millis = 0.0;
};

/// Deterministic per-trial seed derived from the config seed.
std::uint64_t trial_seed(std::uint64_t config_seed, int trial);

/// Random semi-classical circuit, valid by construction: the generator
/// replays its own gates through a DDMF manager and draws controls only
/// from qubits whose current function is Boolean, so every control is
/// classical when read. Per gate: target uniform, kind from gate_mix,
/// control count uniform on 0..max_controls (capped by eligibility),
/// distinct controls uniform from the eligible set, polarities by coin.
Circuit random_scqc(int num_qubits, int num_gates, std::uint64_t seed,
                    const std::array<unsigned, kBenchGateKinds>& gate_mix = {1, 1, 1, 1, 1},
                    int max_controls = 2);

/// Generates and rebuilds one circuit per trial, each in a fresh manager;
/// the timed portion is the rebuild only.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

BenchSummary summarize(const std::vector<BenchRecord>& records);

/// CSV with a config-echo comment header and the column header
/// n,g,trial,seed,nodes,peak_nodes,millis,retries.
std::string bench_csv(const BenchConfig& config,
                      const std::vector<BenchRecord>& records);

} // namespace ddmf
