// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "weylalt/combinatorics.hpp"
#include "weylalt/kostant.hpp"
#include "weylalt/multiplicity.hpp"
#include "weylalt/verify.hpp"
#include "weylalt/weyl.hpp"

using namespace weylalt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Folds suite checks into an outcome, echoing the failures.
void absorb(Outcome& o, const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (c.pass) continue;
    o.pass = false;
    std::cout << "    failed: " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
  }
}

void require_time(Outcome& o, const std::string& what, double elapsed, double limit) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s %.2fs (limit %.0fs)", what.c_str(), elapsed, limit);
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += buf;
  if (elapsed > limit) o.pass = false;
}

std::set<std::vector<int>> direct_alternation_set(const RootSystem& rs) {
  const auto& w1 = rs.fundamental_weights()[0];
  std::set<std::vector<int>> out;
  for (const auto& w : enumerate(rs))
    if (!partition_q_bruteforce(act(w, w1 + rs.rho()) - rs.rho(), rs).is_zero()) out.insert(w.word());
  return out;
}

}  // namespace

int main() {
  EngineSet engines(WeylSumOptions{20'000'000, 1});
  int failures = 0;

  auto report = [&](int n, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2fs", seconds_since(start));
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << title << " (" << elapsed
              << (o.detail.empty() ? "" : "; " + o.detail) << ")" << std::endl;
  };

  report(1, "|A(w1,0)| = F_{r+1} in B_r, r = 2..8", [&] {
    Outcome o;
    auto start = Clock::now();
    absorb(o, suite_fibonacci(6, engines));
    require_time(o, "r<=6", seconds_since(start), 1);
    start = Clock::now();
    for (int r = 7; r <= 8; ++r) {
      const auto& rs = engines.get(LieType::B, r).root_system();
      const mpz_class count = engines.get(LieType::B, r).alternation_set(rs.fundamental_weights()[0], rs.zero()).size();
      if (count != fibonacci(r + 1)) {
        o.pass = false;
        std::cout << "    failed: B" << r << " count " << count.get_str() << "\n";
      }
    }
    require_time(o, "r=7..8", seconds_since(start), 120);
    return o;
  });

  report(2, "A(w1,0) = nonconsecutive products in B_r, r = 2..8", [&] {
    Outcome o;
    absorb(o, suite_char_b(8, engines));
    for (int r = 2; r <= 5; ++r) {
      const auto rs = RootSystem::build(LieType::B, r);
      std::set<std::vector<int>> predicted;
      for (const auto& s : predicted_alternation_set_B(r)) {
        std::vector<int> word(s.begin(), s.end());
        predicted.insert(word);
      }
      if (direct_alternation_set(rs) != predicted) {
        o.pass = false;
        std::cout << "    failed: direct enumeration in B" << r << "\n";
      }
    }
    return o;
  });

  report(3, "m_q(w1,0) = q^r in B_r, r = 2..6", [&] {
    Outcome o;
    EngineSet fresh;
    const auto start = Clock::now();
    absorb(o, suite_qmult(6, fresh));
    require_time(o, "total", seconds_since(start), 10);
    return o;
  });

  report(4, "per-element p_q and length histograms, r = 2..6", [&] {
    Outcome o;
    absorb(o, suite_pq(6, engines));
    return o;
  });

  report(5, "m(w1,0) = 1 in B_r, r = 2..6", [&] {
    Outcome o;
    for (int r = 2; r <= 6; ++r) {
      auto& e = engines.get(LieType::B, r);
      const auto& rs = e.root_system();
      if (e.multiplicity(rs.fundamental_weights()[0], rs.zero()) != 1) {
        o.pass = false;
        std::cout << "    failed: B" << r << "\n";
      }
    }
    return o;
  });

  report(6, "A(w1,mu) empty for dominant mu != 0 with k_1 <= 1 except mu = w1, r = 2..5", [&] {
    Outcome o;
    absorb(o, suite_nonzero_mu(5, Rational(1), engines));
    return o;
  });

  report(7, "weight diagram of L(w1): W.w1 + {0}, multiplicity 1, 2r+1 weights, r = 2..4", [&] {
    Outcome o;
    absorb(o, suite_diagram(4, engines));
    return o;
  });

  report(8, "sum of simple roots in fundamental weights; dominant only in types A and B", [&] {
    Outcome o;
    absorb(o, suite_dominance(8));
    return o;
  });

  report(9, "|A(highest root,0)| = F_r in A_r, r = 2..8", [&] {
    Outcome o;
    absorb(o, suite_type_a(8, engines));
    return o;
  });

  report(10, "memoized p_q = exhaustive p_q on 500 random points", [&] {
    Outcome o;
    const auto start = Clock::now();
    absorb(o, suite_oracle(500, SuiteOptions{}.seed));
    require_time(o, "total", seconds_since(start), 30);
    return o;
  });

  report(11, "alternating-sum identities r = 1..20; nonconsecutive subset counts m = 0..15", [&] {
    Outcome o;
    absorb(o, suite_identities(20));
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
