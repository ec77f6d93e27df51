#include "ddmf/bench.hpp"

#include "ddmf/verifier.hpp"

#include <cassert>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ddmf {

namespace {

/// Unbiased bounded draw; hand-rolled so records are reproducible
/// bit-for-bit across platforms (mt19937_64 output is standardized,
/// std::uniform_int_distribution is not).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  assert(bound > 0);
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

struct GateTemplate {
  GateKind kind;
  std::optional<DyadicAngle> angle;
};

const std::array<GateTemplate, kBenchGateKinds>& gate_alphabet() {
  static const std::array<GateTemplate, kBenchGateKinds> alphabet = {
      GateTemplate{GateKind::X, std::nullopt},
      GateTemplate{GateKind::V, std::nullopt},
      GateTemplate{GateKind::VDag, std::nullopt},
      GateTemplate{GateKind::R, DyadicAngle::of(1, 1)},  // R(1/2)
      GateTemplate{GateKind::R, DyadicAngle::of(1, 2)}}; // R(1/4)
  return alphabet;
}

const std::array<const char*, kBenchGateKinds> kMixNames = {"X", "V", "V+",
                                                            "R(1/2)", "R(1/4)"};

unsigned mix_ring_order(const std::array<unsigned, kBenchGateKinds>& mix) {
  unsigned order = 8;
  for (int i = 0; i < kBenchGateKinds; ++i)
    if (mix[i] > 0 && gate_alphabet()[i].angle)
      order = std::max(order, gate_alphabet()[i].angle->required_ring_order());
  return order;
}

void check_mix(const std::array<unsigned, kBenchGateKinds>& mix) {
  if (std::accumulate(mix.begin(), mix.end(), 0u) == 0)
    throw std::invalid_argument("gate mix weights are all zero");
}

} // namespace

std::uint64_t trial_seed(std::uint64_t config_seed, int trial) {
  std::uint64_t x = config_seed + 0x9e3779b97f4a7c15ULL *
                                      static_cast<std::uint64_t>(trial);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Circuit random_scqc(int num_qubits, int num_gates, std::uint64_t seed,
                    const std::array<unsigned, kBenchGateKinds>& gate_mix,
                    int max_controls) {
  if (num_qubits < 1) throw std::invalid_argument("need at least one qubit");
  if (num_gates < 0) throw std::invalid_argument("negative gate count");
  if (max_controls < 0) throw std::invalid_argument("negative control bound");
  check_mix(gate_mix);

  std::mt19937_64 rng(seed);
  const unsigned total_weight =
      std::accumulate(gate_mix.begin(), gate_mix.end(), 0u);

  Circuit c;
  c.num_qubits = num_qubits;
  c.labels.reserve(num_qubits);
  for (int i = 1; i <= num_qubits; ++i) c.labels.push_back("x" + std::to_string(i));

  // The generator replays its own circuit so control eligibility tracks
  // the exact current functionality, V V restoring X and so on.
  DdmfManager mgr(mix_ring_order(gate_mix), num_qubits);
  CircuitState state = init_state(mgr, num_qubits);

  std::vector<int> eligible;
  for (int j = 0; j < num_gates; ++j) {
    Gate g;
    g.target = 1 + static_cast<int>(draw(rng, num_qubits));

    std::uint64_t w = draw(rng, total_weight);
    int kind_idx = 0;
    while (w >= gate_mix[kind_idx]) w -= gate_mix[kind_idx++];
    g.kind = gate_alphabet()[kind_idx].kind;
    g.angle = gate_alphabet()[kind_idx].angle;

    eligible.clear();
    for (int q = 1; q <= num_qubits; ++q)
      if (q != g.target && mgr.is_boolean(state.qubit_functions[q - 1]))
        eligible.push_back(q);

    std::uint64_t kmax =
        std::min<std::uint64_t>(max_controls, eligible.size());
    std::uint64_t k = draw(rng, kmax + 1);
    for (std::uint64_t i = 0; i < k; ++i) {
      std::uint64_t pick = i + draw(rng, eligible.size() - i);
      std::swap(eligible[i], eligible[pick]);
      g.controls.push_back(Control{eligible[i], draw(rng, 2) == 1});
    }
    std::sort(g.controls.begin(), g.controls.end(),
              [](const Control& a, const Control& b) { return a.qubit < b.qubit; });

    auto violation = apply_gate(state, g);
    assert(!violation);
    (void)violation;
    c.gates.push_back(std::move(g));
  }
  return c;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("trials must be at least 1");
  check_mix(config.gate_mix);

  const unsigned order = mix_ring_order(config.gate_mix);
  std::vector<BenchRecord> records;
  records.reserve(config.trials);
  for (int t = 1; t <= config.trials; ++t) {
    std::uint64_t seed = trial_seed(config.seed, t);
    Circuit c = random_scqc(config.num_qubits, config.num_gates, seed,
                            config.gate_mix, config.max_controls);
    DdmfManager mgr(order, config.num_qubits);
    BuildOutcome out = build_functions(c, mgr);
    assert(out.ok());
    BenchRecord rec;
    rec.num_qubits = config.num_qubits;
    rec.num_gates = config.num_gates;
    rec.trial = t;
    rec.seed = seed;
    rec.nodes = out.stats.total_nodes;
    rec.peak_nodes = out.stats.peak_live_nodes;
    rec.millis = out.stats.millis;
    rec.retries = 0;
    records.push_back(rec);
  }
  return records;
}

BenchSummary summarize(const std::vector<BenchRecord>& records) {
  BenchSummary s;
  if (records.empty()) return s;
  for (const BenchRecord& r : records) {
    s.mean_nodes += static_cast<double>(r.nodes);
    s.mean_peak_nodes += static_cast<double>(r.peak_nodes);
    s.mean_millis += r.millis;
  }
  const double count = static_cast<double>(records.size());
  s.mean_nodes /= count;
  s.mean_peak_nodes /= count;
  s.mean_millis /= count;
  return s;
}

std::string bench_csv(const BenchConfig& config,
                      const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "# ddmf bench: qubits=" << config.num_qubits
      << " gates=" << config.num_gates << " trials=" << config.trials
      << " seed=" << config.seed << " gate_mix=";
  for (int i = 0; i < kBenchGateKinds; ++i)
    out << (i ? "," : "") << kMixNames[i] << ':' << config.gate_mix[i];
  out << " max_controls=" << config.max_controls
      << " control_count=uniform(0..max_controls) prng=mt19937_64\n";
  out << "n,g,trial,seed,nodes,peak_nodes,millis,retries\n";
  out << std::fixed << std::setprecision(3);
  for (const BenchRecord& r : records) {
    out << r.num_qubits << ',' << r.num_gates << ',' << r.trial << ','
        << r.seed << ',' << r.nodes << ',' << r.peak_nodes << ',' << r.millis
        << ',' << r.retries << "\n";
  }
  return out.str();
}

} // namespace ddmf
