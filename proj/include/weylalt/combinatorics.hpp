#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "weylalt/polynomial.hpp"

namespace weylalt {

/// Fibonacci numbers with F_1 = F_2 = 1, memoized as they are requested.
class FibSequence {
 public:
  /// Throws std::invalid_argument for n < 1.
  const mpz_class& operator()(long n);

 private:
  std::vector<mpz_class> cache_{1, 1};
};

/// F_n via a process-wide FibSequence guarded by a mutex.
mpz_class fibonacci(long n);

/// Binomial coefficient; zero when the upper index is negative or k is
/// outside [0, n].
mpz_class binomial(long n, long k);

/// Every subset of {lo..hi} without two consecutive members, as sorted
/// lists, the empty set first and the rest in lexicographic order.
/// An empty range (lo = hi + 1) yields just the empty set.
void for_each_nonconsecutive_subset(int lo, int hi,
                                    const std::function<void(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> nonconsecutive_subsets(int lo, int hi);

/// sum_{k=0}^{floor((r-1)/2)} (-1)^k C(r-1-k, k) q^{1+k} (1+q)^{r-1-2k}
QPolynomial alternating_sum_without_last(int r);
/// sum_{k=0}^{floor((r-2)/2)} (-1)^{1+k} C(r-2-k, k) q^{1+k} (1+q)^{r-2-2k}
QPolynomial alternating_sum_with_last(int r);
/// q + q^2 + ... + q^n
QPolynomial geometric_q(int n);

/// Both alternating identities at r: the first sum equals q + ... + q^r and
/// the second equals -(q + ... + q^{r-1}), compared coefficientwise.
bool verify_alternating_identity(int r);

}  // namespace weylalt
