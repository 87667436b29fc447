#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toral/cohomology.hpp"

namespace toral {

struct SweepOptions {
  int max_group_order = 6;
  long max_modulus = 4;
  int max_rank = 2;
  unsigned seed = 1;
  // Harness self-test: corrupts one coboundary sign inside the enumeration
  // oracle; the sweep must then report a failure.
  bool inject_fault = false;
};

struct SweepCase {
  enum class Status { ok, mismatch, skipped_budget };
  std::string label;
  Status status;
  std::string detail;
};

struct SweepSummary {
  std::vector<SweepCase> cases;
  std::size_t performed = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;

  bool all_ok() const { return mismatches == 0; }
};

// Bar resolution vs exhaustive cocycle enumeration over all module structures
// on (Z/m)^r for the catalog groups of order <= max_group_order, plus the
// cyclic closed formulas where the group is cyclic. Cases over the
// enumeration budget are reported as skipped, not failed.
SweepSummary run_enumeration_sweep(const SweepOptions& options);

// Bar resolution vs the cyclic ker N / im(sigma - 1) and M^G / N(M) formulas
// over the catalog lattices attached to each cyclic group of order <= max.
SweepSummary run_cyclic_sweep(int max_order = 12);

}  // namespace toral
