#pragma once
// Named verification suites shared by the command line front end and the
// acceptance binary. Each suite returns a flat list of checks, one per
// compared quantity, with both sides rendered as text.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weylalt/multiplicity.hpp"
#include "weylalt/rational.hpp"

namespace weylalt {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Lazily built engines keyed by system label, so the partition caches
/// survive across checks and can be persisted as one file.
class EngineSet {
 public:
  explicit EngineSet(WeylSumOptions options = {}, PartitionOptions partition_options = {});

  MultiplicityEngine& get(LieType type, int rank);
  const WeylSumOptions& options() const { return options_; }

  /// Reads concatenated cache sections; each is applied when its system is
  /// first requested. Throws ParseError on malformed input.
  void load_caches(std::istream& in);
  /// Writes one section per engine, plus any sections loaded but unused.
  void save_caches(std::ostream& out) const;

 private:
  WeylSumOptions options_;
  PartitionOptions partition_options_;
  std::map<std::string, std::unique_ptr<MultiplicityEngine>> engines_;
  std::map<std::string, std::string> pending_;
};

struct SuiteOptions {
  /// 0 selects the suite's own default.
  int max_rank = 0;
  /// Box bound for the nonzero-mu scan.
  Rational box_bound{1};
  /// Oracle sample count and seed.
  int samples = 500;
  std::uint64_t seed = 20240611;
};

/// "fibonacci", "charB", "qmult", "pq", "nonzero-mu", "diagram",
/// "dominance", "typeA", "identities", "oracle"; "all" runs each in turn.
const std::vector<std::string>& suite_names();
int default_max_rank(const std::string& suite);

/// Throws std::invalid_argument for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, const SuiteOptions& options, EngineSet& engines);

std::vector<Check> suite_fibonacci(int max_rank, EngineSet& engines);
std::vector<Check> suite_char_b(int max_rank, EngineSet& engines);
std::vector<Check> suite_qmult(int max_rank, EngineSet& engines);
std::vector<Check> suite_pq(int max_rank, EngineSet& engines);
std::vector<Check> suite_nonzero_mu(int max_rank, const Rational& bound, EngineSet& engines);
std::vector<Check> suite_diagram(int max_rank, EngineSet& engines);
std::vector<Check> suite_dominance(int max_rank);
std::vector<Check> suite_type_a(int max_rank, EngineSet& engines);
std::vector<Check> suite_identities(int max_rank);
std::vector<Check> suite_oracle(int samples, std::uint64_t seed);

}  // namespace weylalt
