#pragma once

#include "ddmf/circuit.hpp"
#include "ddmf/ddmf.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace test_helpers {

inline std::vector<ddmf::Assignment> all_assignments(int n) {
  std::vector<ddmf::Assignment> out;
  const std::size_t count = std::size_t(1) << n;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    ddmf::Assignment a(n);
    for (int i = 0; i < n; ++i) a[i] = (idx >> (n - 1 - i)) & 1;
    out.push_back(std::move(a));
  }
  return out;
}

/// Conjunction of literals selecting exactly the given assignment.
inline ddmf::Ddmf minterm(ddmf::DdmfManager& mgr, const ddmf::Assignment& a) {
  ddmf::Ddmf acc = mgr.constant(ddmf::Unitary2::pauli_x(mgr.ring_order()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    ddmf::Ddmf lit = mgr.variable(static_cast<int>(i) + 1);
    acc = mgr.bool_and(acc, a[i] ? lit : mgr.bool_not(lit));
  }
  return acc;
}

/// Builds the DDMF of an arbitrary matrix function from its value table,
/// as a pointwise product of minterm-guarded constants. The guards are
/// disjoint, so at each assignment exactly one factor is non-identity.
inline ddmf::Ddmf
from_truth_table(ddmf::DdmfManager& mgr, int n,
                 const std::function<ddmf::Unitary2(const ddmf::Assignment&)>& value,
                 bool reverse_order = false) {
  std::vector<ddmf::Assignment> as = all_assignments(n);
  if (reverse_order) std::reverse(as.begin(), as.end());
  ddmf::Ddmf acc = mgr.terminal();
  for (const ddmf::Assignment& a : as)
    acc = mgr.compose(acc, mgr.select(minterm(mgr, a), mgr.constant(value(a))));
  return acc;
}

/// Value fingerprint over all assignments; equal fingerprints in one
/// manager mean pointwise-equal functions.
inline std::vector<ddmf::MatrixId> signature(ddmf::DdmfManager& mgr,
                                             ddmf::Ddmf d, int n) {
  std::vector<ddmf::MatrixId> out;
  for (const ddmf::Assignment& a : all_assignments(n))
    out.push_back(mgr.evaluate_id(d, a));
  return out;
}

inline bool pointwise_boolean(ddmf::DdmfManager& mgr, ddmf::Ddmf d, int n) {
  for (const ddmf::Assignment& a : all_assignments(n)) {
    if (!mgr.evaluate(d, a).is_classical()) return false;
  }
  return true;
}

/// Random DDMFs via random operator sequences over a shared manager.
/// Grows a pool seeded with variables and constants, then repeatedly
/// applies compose/select/bool ops/cofactor to random pool entries.
class RandomDdmfPool {
public:
  RandomDdmfPool(ddmf::DdmfManager& mgr, std::uint64_t seed)
      : mgr_(mgr), rng_(seed) {
    const unsigned order = mgr.ring_order();
    pool_.push_back(mgr.terminal());
    pool_.push_back(mgr.constant(ddmf::Unitary2::pauli_x(order)));
    pool_.push_back(mgr.constant(ddmf::Unitary2::v_gate(order)));
    pool_.push_back(mgr.constant(ddmf::Unitary2::v_dag(order)));
    pool_.push_back(mgr.constant(
        ddmf::Unitary2::rotation(order, ddmf::DyadicAngle::of(1, 1))));
    for (int i = 1; i <= mgr.num_vars(); ++i)
      pool_.push_back(mgr.variable(i));
  }

  ddmf::Ddmf next() {
    ddmf::Ddmf result = step();
    pool_.push_back(result);
    return result;
  }

private:
  ddmf::Ddmf pick() { return pool_[rng_() % pool_.size()]; }

  ddmf::Ddmf pick_boolean() {
    for (int tries = 0; tries < 64; ++tries) {
      ddmf::Ddmf d = pick();
      if (mgr_.is_boolean(d)) return d;
    }
    return mgr_.variable(1 + int(rng_() % mgr_.num_vars()));
  }

  ddmf::Ddmf step() {
    switch (rng_() % 5) {
    case 0: return mgr_.compose(pick(), pick());
    case 1: return mgr_.select(pick_boolean(), pick());
    case 2: return mgr_.bool_not(pick_boolean());
    case 3: return mgr_.bool_and(pick_boolean(), pick_boolean());
    default:
      return mgr_.cofactor(pick(), 1 + int(rng_() % mgr_.num_vars()),
                           int(rng_() % 2));
    }
  }

  ddmf::DdmfManager& mgr_;
  std::mt19937_64 rng_;
  std::vector<ddmf::Ddmf> pool_;
};

/// Runs a command, captures stdout, returns the exit code.
inline int run_command(const std::string& cmd, std::string& output) {
  output.clear();
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  int status = pclose(pipe);
  if (status < 0) throw std::runtime_error("pclose failed for: " + cmd);
  return WEXITSTATUS(status);
}

/// Path of the ddmf CLI binary, from the DDMF_BIN environment variable.
inline std::string cli_path() {
  const char* p = std::getenv("DDMF_BIN");
  if (!p || !*p)
    throw std::runtime_error("DDMF_BIN is not set; run through ctest");
  return p;
}

class TempFile {
public:
  TempFile(const std::string& name, const std::string& contents) {
    path_ = std::string("/tmp/ddmf_test_") + std::to_string(getpid()) + "_" + name;
    FILE* f = std::fopen(path_.c_str(), "w");
    if (!f) throw std::runtime_error("cannot create " + path_);
    std::fwrite(contents.data(), 1, contents.size(), f);
    std::fclose(f);
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

} // namespace test_helpers
