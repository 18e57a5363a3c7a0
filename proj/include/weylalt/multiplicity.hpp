#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "weylalt/kostant.hpp"
#include "weylalt/polynomial.hpp"
#include "weylalt/rational.hpp"
#include "weylalt/root_system.hpp"
#include "weylalt/weyl.hpp"

namespace weylalt {

struct WeylSumOptions {
  std::uint64_t cap = kDefaultWeylCap;
  /// Workers used for the group traversal and the partition evaluations.
  unsigned threads = 1;
};

/// The elements sigma of W with p(sigma(lambda + rho) - (mu + rho)) > 0,
/// ordered by length and then by reduced word.
struct AlternationSet {
  RationalVector lambda;
  RationalVector mu;
  std::vector<WeylElement> elements;

  std::size_t size() const { return elements.size(); }
  bool contains_word(const std::vector<int>& word) const;
};

/// One nonvanishing term of the alternating sum.
struct AlternationTerm {
  std::vector<int> word;  // lexicographically least reduced word, 1-based
  int length = 0;
  /// sigma(lambda + rho) - (mu + rho) in simple-root coordinates.
  std::vector<std::int64_t> argument;
  QPolynomial pq;  // p_q of the argument
};

struct WeightDiagramEntry {
  RationalVector weight;
  mpz_class multiplicity;
};

/// Evaluates Kostant-type alternating sums over W for one root system,
/// keeping a partition-function cache across calls.
///
/// Only group elements whose argument has nonnegative integral simple-root
/// coordinates are kept; every other term vanishes, and for the survivors
/// the partition function is positive, so the survivors are exactly the
/// alternation set.
class MultiplicityEngine {
 public:
  explicit MultiplicityEngine(const RootSystem& rs, WeylSumOptions options = {},
                              PartitionOptions partition_options = {});

  const RootSystem& root_system() const { return rs_; }
  PartitionFunction& partition_function() { return pf_; }
  const WeylSumOptions& options() const { return options_; }

  /// Nonvanishing terms, sorted by (length, word). Throws CapExceeded when
  /// |W| exceeds the cap and NotInRootSpan for weights off the weight span.
  std::vector<AlternationTerm> terms(const RationalVector& lambda, const RationalVector& mu);

  AlternationSet alternation_set(const RationalVector& lambda, const RationalVector& mu);
  mpz_class multiplicity(const RationalVector& lambda, const RationalVector& mu);
  QPolynomial q_multiplicity(const RationalVector& lambda, const RationalVector& mu);

  /// All weights of L(lambda) with their multiplicities, sorted by depth
  /// below lambda and then by weight (descending). lambda must be dominant
  /// integral (std::invalid_argument otherwise).
  std::vector<WeightDiagramEntry> weight_diagram(const RationalVector& lambda);

 private:
  std::vector<AlternationTerm> collect(const RationalVector& lambda, const RationalVector& mu);
  void evaluate(std::vector<AlternationTerm>& terms);

  RootSystem rs_;
  WeylSumOptions options_;
  PartitionFunction pf_;
};

AlternationSet alternation_set(const RationalVector& lambda, const RationalVector& mu,
                               const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);
mpz_class multiplicity(const RationalVector& lambda, const RationalVector& mu, const RootSystem& rs,
                       std::uint64_t cap = kDefaultWeylCap);
QPolynomial q_multiplicity(const RationalVector& lambda, const RationalVector& mu,
                           const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);
std::vector<WeightDiagramEntry> weight_diagram(const RationalVector& lambda, const RootSystem& rs,
                                               std::uint64_t cap = kDefaultWeylCap);

// Closed forms for lambda = varpi_1, mu = 0 in type B_r.
//
// An element given by a nonconsecutive subset I of {2..r} is the product
// of the commuting reflections s_i, i in I. Its "k" excludes the factor s_r
// when r is in I, so k = |I| without s_r and k = |I| - 1 with it.

/// Nonconsecutive subsets of {2..r}, empty set first, then lexicographic.
std::vector<std::vector<int>> predicted_alternation_set_B(int r);

/// q^{1+k} (1+q)^{r-1-2k} without s_r, q^{1+k} (1+q)^{r-2-2k} with it.
/// Throws std::invalid_argument unless indices is a nonconsecutive subset of {2..r}.
QPolynomial predicted_pq_B(const std::vector<int>& indices, int r);

/// C(r-1-k, k) without s_r, C(r-2-k, k) with it (zero when out of range).
mpz_class predicted_count_by_length_B(int r, int k, bool has_sr);

}  // namespace weylalt
