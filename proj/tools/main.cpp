#include "ddmf/bench.hpp"
#include "ddmf/circuit.hpp"
#include "ddmf/ddmf.hpp"
#include "ddmf/matrix_names.hpp"
#include "ddmf/oracle.hpp"
#include "ddmf/verifier.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInequivalent = 1;
constexpr int kExitUsage = 2; // also parse errors and not-scqc
constexpr int kExitNodeLimit = 3;

std::size_t node_limit_from_env() {
  const char* s = std::getenv("DDMF_NODE_LIMIT");
  if (!s || !*s) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0')
    throw std::runtime_error("DDMF_NODE_LIMIT must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ddmf::Circuit load_circuit(const std::string& path) {
  try {
    return ddmf::parse_circuit(read_file(path));
  } catch (const ddmf::ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

ddmf::Assignment parse_bits(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n)
    throw std::runtime_error("--input needs exactly " + std::to_string(n) +
                             " bits, got " + std::to_string(s.size()));
  ddmf::Assignment a;
  a.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::runtime_error("--input must be a 0/1 string");
    a.push_back(c == '1');
  }
  return a;
}

std::string format_assignment(const ddmf::Circuit& c, const ddmf::Assignment& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ' ';
    out << c.labels[i] << '=' << int(a[i]);
  }
  return out.str();
}

json assignment_json(const ddmf::Assignment& a) {
  json arr = json::array();
  for (auto b : a) arr.push_back(int(b));
  return arr;
}

/// The printed witness is re-checked against the per-assignment oracle
/// before it is shown; a failure here would mean an engine bug.
void confirm_counterexample(const ddmf::Circuit& a, const ddmf::Circuit& b,
                            unsigned order, const ddmf::Assignment& bits,
                            int qubit) {
  ddmf::AssignmentTrace ta = ddmf::simulate_assignment(a, order, bits);
  ddmf::AssignmentTrace tb = ddmf::simulate_assignment(b, order, bits);
  if (!ta.scqc_ok || !tb.scqc_ok ||
      ta.per_qubit_matrix[qubit - 1] == tb.per_qubit_matrix[qubit - 1])
    throw std::logic_error("counterexample failed oracle confirmation");
}

int cmd_verify(const std::string& file_a, const std::string& file_b,
               bool want_json, bool want_counterexample) {
  ddmf::Circuit a = load_circuit(file_a);
  ddmf::Circuit b = load_circuit(file_b);
  unsigned order =
      std::max(ddmf::required_ring_order(a), ddmf::required_ring_order(b));
  ddmf::VerificationReport rep = ddmf::check_equivalence(
      a, b, want_counterexample || want_json, node_limit_from_env());

  using Verdict = ddmf::VerificationReport::Verdict;
  if (rep.counterexample)
    confirm_counterexample(a, b, order, *rep.counterexample,
                           rep.counterexample_qubit);

  if (want_json) {
    json out;
    out["verdict"] = rep.verdict == Verdict::Equivalent     ? "equivalent"
                     : rep.verdict == Verdict::Inequivalent ? "inequivalent"
                                                            : "not-scqc";
    out["qubits"] = a.num_qubits;
    out["ring_order"] = order;
    out["qubit_equal"] = rep.qubit_equal.empty()
                             ? json(nullptr)
                             : json(std::vector<bool>(rep.qubit_equal));
    out["first_differing_qubit"] =
        rep.first_differing_qubit ? json(rep.first_differing_qubit) : json(nullptr);
    if (rep.counterexample) {
      out["counterexample"] = {
          {"assignment", assignment_json(*rep.counterexample)},
          {"qubit", rep.counterexample_qubit}};
    } else {
      out["counterexample"] = nullptr;
    }
    if (rep.violation) {
      out["violation"] = {{"circuit", rep.violating_circuit},
                          {"gate", rep.violation->gate_index},
                          {"control_qubit", rep.violation->control_qubit},
                          {"witness", assignment_json(rep.violation->witness)}};
    } else {
      out["violation"] = nullptr;
    }
    out["stats"] = {{"total_nodes", rep.stats.total_nodes},
                    {"peak_live_nodes", rep.stats.peak_live_nodes},
                    {"millis", rep.stats.millis}};
    std::cout << out.dump(2) << "\n";
  } else {
    switch (rep.verdict) {
    case Verdict::Equivalent:
      std::cout << "verdict: equivalent\n";
      break;
    case Verdict::Inequivalent:
      std::cout << "verdict: inequivalent\n";
      std::cout << "first differing qubit: " << rep.first_differing_qubit
                << " (" << a.labels[rep.first_differing_qubit - 1] << ")\n";
      if (rep.counterexample) {
        std::cout << "counterexample: " << format_assignment(a, *rep.counterexample)
                  << "\n";
        ddmf::AssignmentTrace ta =
            ddmf::simulate_assignment(a, order, *rep.counterexample);
        ddmf::AssignmentTrace tb =
            ddmf::simulate_assignment(b, order, *rep.counterexample);
        const ddmf::Unitary2& ma = ta.per_qubit_matrix[rep.counterexample_qubit - 1];
        const ddmf::Unitary2& mb = tb.per_qubit_matrix[rep.counterexample_qubit - 1];
        std::cout << "qubit " << rep.counterexample_qubit << " there: "
                  << ddmf::matrix_name(ma) << " vs " << ddmf::matrix_name(mb)
                  << "\n";
      }
      break;
    case Verdict::NotScqc: {
      const ddmf::Circuit& culprit = rep.violating_circuit == 1 ? a : b;
      std::cout << "verdict: not-scqc\n";
      std::cout << "circuit " << rep.violating_circuit
                << " violates the semi-classical restriction at gate "
                << rep.violation->gate_index << " (control qubit "
                << culprit.labels[rep.violation->control_qubit - 1]
                << " is not classical there)\n";
      std::cout << "witness input: "
                << format_assignment(culprit, rep.violation->witness) << "\n";
      break;
    }
    }
    std::cout << "nodes: " << rep.stats.total_nodes
              << "  peak live: " << rep.stats.peak_live_nodes << "  time: "
              << rep.stats.millis << " ms\n";
  }

  switch (rep.verdict) {
  case Verdict::Equivalent: return kExitOk;
  case Verdict::Inequivalent: return kExitInequivalent;
  case Verdict::NotScqc: return kExitUsage;
  }
  return kExitUsage;
}

int report_violation(const ddmf::Circuit& c, const ddmf::ScqcViolation& v) {
  std::cout << "not-scqc: gate " << v.gate_index << " ("
            << ddmf::gate_name(c.gates[v.gate_index - 1]) << ") uses control qubit "
            << c.labels[v.control_qubit - 1] << " while it is not classical\n";
  std::cout << "witness input: " << format_assignment(c, v.witness) << "\n";
  return kExitUsage;
}

int cmd_build(const std::string& file, bool stats, const std::string& dot_dir) {
  ddmf::Circuit c = load_circuit(file);
  ddmf::DdmfManager mgr(ddmf::required_ring_order(c), c.num_qubits,
                        node_limit_from_env());
  ddmf::BuildOutcome out = ddmf::build_functions(c, mgr);
  if (!out.ok()) return report_violation(c, *out.violation);

  for (int i = 1; i <= c.num_qubits; ++i) {
    ddmf::Ddmf d = out.state.qubit_functions[i - 1];
    std::cout << "q" << i << " (" << c.labels[i - 1]
              << "): nodes=" << mgr.node_count(d)
              << " boolean=" << (mgr.is_boolean(d) ? "yes" : "no") << "\n";
  }
  std::cout << "total nodes: " << out.stats.total_nodes
            << "  peak live: " << out.stats.peak_live_nodes << "\n";
  if (stats) {
    std::cout << "distinct matrices: " << mgr.distinct_matrices()
              << "  ring order: " << mgr.ring_order() << "  build time: "
              << out.stats.millis << " ms\n";
  }
  if (!dot_dir.empty()) {
    std::filesystem::create_directories(dot_dir);
    for (int i = 1; i <= c.num_qubits; ++i) {
      std::filesystem::path path =
          std::filesystem::path(dot_dir) / ("q" + std::to_string(i) + ".dot");
      std::ofstream f(path);
      f << mgr.dot_export(out.state.qubit_functions[i - 1],
                          [](const ddmf::Unitary2& m) {
                            return ddmf::matrix_name(m);
                          });
      std::cout << "wrote " << path.string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_simulate(const std::string& file, const std::string& bits,
                 bool want_json) {
  ddmf::Circuit c = load_circuit(file);
  ddmf::Assignment a = parse_bits(bits, c.num_qubits);
  unsigned order = ddmf::required_ring_order(c);
  ddmf::AssignmentTrace t = ddmf::simulate_assignment(c, order, a);
  if (!t.scqc_ok) {
    if (want_json) {
      json out;
      out["scqc_ok"] = false;
      out["violation"] = {{"gate", t.violation_gate},
                          {"control_qubit", t.violation_qubit}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "not-scqc on this input: gate " << t.violation_gate
                << " reads control qubit " << c.labels[t.violation_qubit - 1]
                << " while it is not classical\n";
    }
    return kExitUsage;
  }

  if (want_json) {
    json out;
    out["scqc_ok"] = true;
    out["input"] = assignment_json(a);
    json qubits = json::array();
    for (int i = 1; i <= c.num_qubits; ++i) {
      const ddmf::Unitary2& m = t.per_qubit_matrix[i - 1];
      qubits.push_back({{"index", i},
                        {"label", c.labels[i - 1]},
                        {"matrix", ddmf::matrix_name(m)},
                        {"state", ddmf::apply_to_ket0(m).to_string()}});
    }
    out["qubits"] = qubits;
    std::cout << out.dump(2) << "\n";
  } else {
    for (int i = 1; i <= c.num_qubits; ++i) {
      const ddmf::Unitary2& m = t.per_qubit_matrix[i - 1];
      std::cout << "q" << i << " (" << c.labels[i - 1]
                << "): matrix=" << ddmf::matrix_name(m)
                << " state=" << ddmf::apply_to_ket0(m).to_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_check(const std::string& file) {
  ddmf::Circuit c = load_circuit(file);
  ddmf::DdmfManager mgr(ddmf::required_ring_order(c), c.num_qubits,
                        node_limit_from_env());
  ddmf::BuildOutcome out = ddmf::build_functions(c, mgr);
  if (!out.ok()) return report_violation(c, *out.violation);
  std::cout << "scqc: ok (" << c.gates.size() << " gates, "
            << out.stats.total_nodes << " nodes)\n";
  return kExitOk;
}

int cmd_bench(int qubits, int gates, int trials, std::uint64_t seed,
              const std::string& csv_path) {
  ddmf::BenchConfig config;
  config.num_qubits = qubits;
  config.num_gates = gates;
  config.trials = trials;
  config.seed = seed;
  std::vector<ddmf::BenchRecord> records = ddmf::run_bench(config);
  std::string csv = ddmf::bench_csv(config, records);
  if (csv_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(csv_path);
    if (!f) throw std::runtime_error(csv_path + ": cannot write");
    f << csv;
  }
  ddmf::BenchSummary s = ddmf::summarize(records);
  std::ostream& sum = csv_path.empty() ? std::cerr : std::cout;
  sum << "mean nodes: " << s.mean_nodes << "  mean peak: " << s.mean_peak_nodes
      << "  mean time: " << s.mean_millis << " ms\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"DDMF tools: equivalence checking of semi-classical quantum "
               "circuits via decision diagrams for matrix functions"};
  app.require_subcommand(1);

  std::string file_a, file_b, input_bits, dot_dir, csv_path;
  bool flag_json = false, flag_counterexample = false, flag_stats = false;
  int bench_qubits = 0, bench_gates = 0, bench_trials = 0;
  std::uint64_t bench_seed = 0;

  CLI::App* verify = app.add_subcommand("verify", "Check two circuits for equivalence");
  verify->add_option("A", file_a, "first circuit file")->required();
  verify->add_option("B", file_b, "second circuit file")->required();
  verify->add_flag("--json", flag_json, "machine-readable report");
  verify->add_flag("--counterexample", flag_counterexample,
                   "print a differing input when inequivalent");

  CLI::App* build = app.add_subcommand("build", "Build per-qubit DDMFs and report sizes");
  build->add_option("F", file_a, "circuit file")->required();
  build->add_flag("--stats", flag_stats, "extra manager statistics");
  build->add_option("--dot", dot_dir, "write one Graphviz file per qubit into DIR");

  CLI::App* simulate = app.add_subcommand("simulate", "Per-qubit matrices for one classical input");
  simulate->add_option("F", file_a, "circuit file")->required();
  simulate->add_option("--input", input_bits, "classical input bits, one per qubit")
      ->required();
  simulate->add_flag("--json", flag_json, "machine-readable report");

  CLI::App* check = app.add_subcommand("check", "Verify the semi-classical restriction");
  check->add_option("F", file_a, "circuit file")->required();

  CLI::App* bench = app.add_subcommand("bench", "Random-circuit growth benchmark, CSV output");
  bench->add_option("--qubits", bench_qubits, "qubit count")->required();
  bench->add_option("--gates", bench_gates, "gate count")->required();
  bench->add_option("--trials", bench_trials, "trial count")->required();
  bench->add_option("--seed", bench_seed, "base seed")->required();
  bench->add_option("--csv", csv_path, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
    if (*verify) return cmd_verify(file_a, file_b, flag_json, flag_counterexample);
    if (*build) return cmd_build(file_a, flag_stats, dot_dir);
    if (*simulate) return cmd_simulate(file_a, input_bits, flag_json);
    if (*check) return cmd_check(file_a);
    if (*bench) return cmd_bench(bench_qubits, bench_gates, bench_trials,
                                 bench_seed, csv_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  } catch (const ddmf::NodeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNodeLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
