#include "weylalt/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace weylalt {

const mpz_class& FibSequence::operator()(long n) {
  if (n < 1) throw std::invalid_argument("Fibonacci index must be >= 1, got " + std::to_string(n));
  while (static_cast<long>(cache_.size()) < n) {
    const std::size_t k = cache_.size();
    cache_.push_back(cache_[k - 1] + cache_[k - 2]);
  }
  return cache_[static_cast<std::size_t>(n - 1)];
}

mpz_class fibonacci(long n) {
  static std::mutex mutex;
  static FibSequence sequence;
  std::lock_guard<std::mutex> lock(mutex);
  return sequence(n);
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

void for_each_nonconsecutive_subset(int lo, int hi,
                                    const std::function<void(const std::vector<int>&)>& visit) {
  if (lo > hi + 1) throw std::invalid_argument("nonconsecutive_subsets: lo > hi + 1");
  std::vector<int> current;
  const std::function<void(int)> extend = [&](int next) {
    visit(current);
    for (int x = next; x <= hi; ++x) {
      current.push_back(x);
      extend(x + 2);
      current.pop_back();
    }
  };
  extend(lo);
}

std::vector<std::vector<int>> nonconsecutive_subsets(int lo, int hi) {
  std::vector<std::vector<int>> out;
  for_each_nonconsecutive_subset(lo, hi, [&](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

namespace {

// sum_{k >= 0} sign(k) C(m-k, k) q^{1+k} (1+q)^{m-2k}; terms with m-2k < 0 vanish.
QPolynomial alternating_sum(int m, int first_sign) {
  QPolynomial total;
  for (int k = 0; 2 * k <= m; ++k) {
    const mpz_class c = binomial(m - k, k);
    if (c == 0) continue;
    QPolynomial term = QPolynomial::one_plus_q_power(static_cast<std::size_t>(m - 2 * k))
                           .shifted(static_cast<std::size_t>(1 + k));
    const int sign = (k % 2 == 0) ? first_sign : -first_sign;
    QPolynomial scaled(std::vector<mpz_class>{c * sign});
    total += scaled * term;
  }
  return total;
}

}  // namespace

QPolynomial alternating_sum_without_last(int r) { return alternating_sum(r - 1, +1); }

QPolynomial alternating_sum_with_last(int r) { return alternating_sum(r - 2, -1); }

QPolynomial geometric_q(int n) {
  QPolynomial p;
  for (int i = 1; i <= n; ++i) p += QPolynomial::monomial(static_cast<std::size_t>(i));
  return p;
}

bool verify_alternating_identity(int r) {
  if (r < 1) throw std::invalid_argument("verify_alternating_identity: r must be >= 1");
  return alternating_sum_without_last(r) == geometric_q(r) &&
         alternating_sum_with_last(r) == -geometric_q(r - 1);
}

}  // namespace weylalt
