#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "weylalt/polynomial.hpp"
#include "weylalt/rational.hpp"
#include "weylalt/root_system.hpp"

namespace weylalt {

struct PartitionOptions {
  /// Stop memoizing once the cache holds this many entries; 0 = unbounded.
  std::size_t max_cache_entries = 0;
  /// Order in which positive roots are consumed, as indices into
  /// RootSystem::positive_roots(). Empty selects the default order
  /// (decreasing height, simple roots last).
  std::vector<std::size_t> root_order;
};

/// Memoized q-analog of Kostant's partition function for one root system.
///
/// The coefficient of q^j in the result counts the ways of writing the
/// argument as a sum of exactly j positive roots. Not safe for concurrent
/// use; parallel callers give each worker its own copy and merge() the
/// caches afterwards.
class PartitionFunction {
 public:
  explicit PartitionFunction(const RootSystem& rs, PartitionOptions options = {});

  /// Argument in simple-root coordinates. Negative entries give zero.
  QPolynomial operator()(std::span<const std::int64_t> simple_coords);
  /// Argument in ambient coordinates; anything outside the nonnegative
  /// integer cone of the simple roots gives zero.
  QPolynomial of(const RationalVector& xi);

  const RootSystem& root_system() const { return *rs_; }
  std::size_t cache_size() const { return memo_.size(); }
  void clear_cache() { memo_.clear(); }
  /// Adds entries of another evaluator over the same system and root order.
  void merge(const PartitionFunction& other);

  /// Text format, one record per memo entry:
  ///   weylalt-kostant-cache v1
  ///   system <label> order <fingerprint> entries <n>
  ///   <root index> <c_1> ... <c_r> : <p_0> <p_1> ...
  void save(std::ostream& out) const;
  /// Throws ParseError on malformed input or a system/order mismatch.
  void load(std::istream& in);

 private:
  using Key = std::vector<std::int32_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  QPolynomial count(std::vector<std::int32_t>& xi, std::size_t k);
  std::uint64_t order_fingerprint() const;

  std::shared_ptr<const RootSystem> rs_;
  PartitionOptions options_;
  std::vector<std::vector<std::int32_t>> roots_;    // in consumption order
  std::vector<std::size_t> order_;                  // consumption order -> positive_roots() index
  std::vector<std::vector<bool>> support_from_;     // coordinates reachable by roots_[k..]
  std::size_t simple_tail_start_ = 0;               // roots_[t..] are all simple
  std::vector<bool> tail_support_;
  std::unordered_map<Key, QPolynomial, KeyHash> memo_;
};

/// One-shot evaluation with a fresh cache.
QPolynomial partition_q(const RationalVector& xi, const RootSystem& rs);

inline constexpr std::int64_t kBruteForceMaxHeight = 30;

/// Independent exhaustive count: enumerates multiplicity vectors over the
/// positive roots in reverse order with no memoization. Throws
/// HeightExceeded when the simple-root height of xi exceeds 30.
QPolynomial partition_q_bruteforce(const RationalVector& xi, const RootSystem& rs);

}  // namespace weylalt
