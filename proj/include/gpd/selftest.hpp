#pragma once

#include <string>
#include <vector>

#include "gpd/reflect.hpp"

namespace gpd {

/// Knobs for the generated catalog and the property suites.  Every sampled
/// choice is driven by `seed`; two runs with equal options produce
/// byte-identical reports.
struct SelftestOptions {
  int max_objects = 4;             // object ceiling for catalog bases
  unsigned int seed = 1;           // drives every sampled choice
  SizeGuard guard;                 // shared search/build caps
  long long functor_limit = 12;    // exhaustive enumeration ceiling per pair
  int sample_count = 4;            // sampled functors past the ceiling
  int functor_budget = 900;        // total functor pool ceiling
  int gamma_budget = 140;          // holograph fractions in the pool
  int target_meromorphisms = 200;  // required pool size
  int pair_budget = 300;           // pairwise-case ceiling per suite
};

enum class CaseStatus { pass, fail, skip };

struct CaseResult {
  std::string name;
  CaseStatus status = CaseStatus::pass;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseResult> cases;  // sorted by case name

  int passed() const;
  int failed() const;
  int skipped() const;
};

struct SelftestReport {
  SelftestOptions options;
  int num_groupoids = 0;
  int num_functors = 0;
  int num_meromorphisms = 0;
  int generation_skips = 0;  // size-guard refusals while building the pools
  std::vector<SuiteResult> suites;  // sorted by suite name

  bool all_passed() const;
  std::string render() const;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace gpd
