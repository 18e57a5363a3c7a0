#include "weylalt/verify.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "weylalt/combinatorics.hpp"
#include "weylalt/errors.hpp"
#include "weylalt/kostant.hpp"
#include "weylalt/lattice.hpp"
#include "weylalt/weyl.hpp"

namespace weylalt {
namespace {

constexpr const char* kSectionMagic = "weylalt-kostant-cache";

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (int i : word) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(i);
  }
  return out;
}

std::string set_string(const std::set<std::vector<int>>& words) {
  std::string out = "{";
  bool first = true;
  for (const auto& w : words) {
    if (!first) out += ", ";
    out += word_string(w);
    first = false;
  }
  return out + "}";
}

template <typename T>
Check compare(std::string name, const T& expected, const T& actual) {
  std::ostringstream e, a;
  e << std::boolalpha;
  a << std::boolalpha;
  e << expected;
  a << actual;
  return Check{std::move(name), e.str(), a.str(), expected == actual};
}

Check compare_text(std::string name, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  return Check{std::move(name), std::move(expected), std::move(actual), pass};
}

RationalVector int_vector(const std::vector<long>& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

}  // namespace

EngineSet::EngineSet(WeylSumOptions options, PartitionOptions partition_options)
    : options_(options), partition_options_(std::move(partition_options)) {}

MultiplicityEngine& EngineSet::get(LieType type, int rank) {
  const RootSystem rs = RootSystem::build(type, rank);
  const std::string key = rs.label();
  auto it = engines_.find(key);
  if (it != engines_.end()) return *it->second;
  auto engine = std::make_unique<MultiplicityEngine>(rs, options_, partition_options_);
  if (auto p = pending_.find(key); p != pending_.end()) {
    std::istringstream in(p->second);
    engine->partition_function().load(in);
    pending_.erase(p);
  }
  return *engines_.emplace(key, std::move(engine)).first->second;
}

void EngineSet::load_caches(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind(kSectionMagic, 0) != 0) throw ParseError("expected a cache section, got: " + line);
    std::string header;
    if (!std::getline(in, header)) throw ParseError("cache section without header");
    std::istringstream hs(header);
    std::string w1, system, w2, fingerprint, w3;
    std::size_t entries = 0;
    if (!(hs >> w1 >> system >> w2 >> fingerprint >> w3 >> entries) || w1 != "system" ||
        w2 != "order" || w3 != "entries")
      throw ParseError("malformed cache header: " + header);
    std::string text = line + '\n' + header + '\n';
    for (std::size_t e = 0; e < entries; ++e) {
      if (!std::getline(in, line)) throw ParseError("cache section for " + system + " is truncated");
      text += line + '\n';
    }
    pending_[system] = std::move(text);
  }
}

void EngineSet::save_caches(std::ostream& out) const {
  std::map<std::string, std::string> sections = pending_;
  for (const auto& [key, engine] : engines_) {
    std::ostringstream s;
    engine->partition_function().save(s);
    sections[key] = s.str();
  }
  for (const auto& [key, text] : sections) out << text;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fibonacci", "charB", "qmult",     "pq",
                                              "nonzero-mu", "diagram", "dominance", "typeA",
                                              "identities", "oracle"};
  return names;
}

int default_max_rank(const std::string& suite) {
  static const std::map<std::string, int> defaults{
      {"fibonacci", 7}, {"charB", 7},     {"qmult", 6},     {"pq", 6},          {"nonzero-mu", 5},
      {"diagram", 4},   {"dominance", 8}, {"typeA", 8},     {"identities", 20}, {"oracle", 0}};
  auto it = defaults.find(suite);
  if (it == defaults.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second;
}

std::vector<Check> run_suite(const std::string& suite, const SuiteOptions& options, EngineSet& engines) {
  if (suite == "all") {
    std::vector<Check> out;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, options, engines);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }
  const int r = options.max_rank > 0 ? options.max_rank : default_max_rank(suite);
  if (suite == "fibonacci") return suite_fibonacci(r, engines);
  if (suite == "charB") return suite_char_b(r, engines);
  if (suite == "qmult") return suite_qmult(r, engines);
  if (suite == "pq") return suite_pq(r, engines);
  if (suite == "nonzero-mu") return suite_nonzero_mu(r, options.box_bound, engines);
  if (suite == "diagram") return suite_diagram(r, engines);
  if (suite == "dominance") return suite_dominance(r);
  if (suite == "typeA") return suite_type_a(r, engines);
  if (suite == "identities") return suite_identities(r);
  if (suite == "oracle") return suite_oracle(options.samples, options.seed);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<Check> suite_fibonacci(int max_rank, EngineSet& engines) {
  std::vector<Check> out;
  for (int r = 2; r <= max_rank; ++r) {
    auto& e = engines.get(LieType::B, r);
    const auto& rs = e.root_system();
    const auto set = e.alternation_set(rs.fundamental_weights()[0], rs.zero());
    out.push_back(compare("|A(w1, 0)| in " + rs.label() + " = F_" + std::to_string(r + 1),
                          fibonacci(r + 1), mpz_class(set.size())));
  }
  return out;
}

std::vector<Check> suite_char_b(int max_rank, EngineSet& engines) {
  std::vector<Check> out;
  for (int r = 2; r <= max_rank; ++r) {
    auto& e = engines.get(LieType::B, r);
    const auto& rs = e.root_system();
    const auto set = e.alternation_set(rs.fundamental_weights()[0], rs.zero());
    std::set<std::vector<int>> actual;
    for (const auto& w : set.elements) actual.insert(w.word());
    const auto predicted = predicted_alternation_set_B(r);
    const std::set<std::vector<int>> expected(predicted.begin(), predicted.end());
    out.push_back(compare_text("A(w1, 0) in " + rs.label() + " = nonconsecutive products",
                               set_string(expected), set_string(actual)));
  }
  return out;
}

std::vector<Check> suite_qmult(int max_rank, EngineSet& engines) {
  std::vector<Check> out;
  for (int r = 2; r <= max_rank; ++r) {
    auto& e = engines.get(LieType::B, r);
    const auto& rs = e.root_system();
    const auto& w1 = rs.fundamental_weights()[0];
    out.push_back(compare("m_q(w1, 0) in " + rs.label() + " = q^" + std::to_string(r),
                          QPolynomial::monomial(static_cast<std::size_t>(r)), e.q_multiplicity(w1, rs.zero())));
    out.push_back(compare("m(w1, 0) in " + rs.label(), mpz_class(1), e.multiplicity(w1, rs.zero())));
  }
  return out;
}

std::vector<Check> suite_pq(int max_rank, EngineSet& engines) {
  std::vector<Check> out;
  for (int r = 2; r <= max_rank; ++r) {
    auto& e = engines.get(LieType::B, r);
    const auto& rs = e.root_system();
    const auto terms = e.terms(rs.fundamental_weights()[0], rs.zero());
    std::map<std::pair<int, bool>, long> histogram;
    for (const auto& t : terms) {
      const bool has_sr = !t.word.empty() && t.word.back() == r;
      const int k = static_cast<int>(t.word.size()) - (has_sr ? 1 : 0);
      ++histogram[{k, has_sr}];
      out.push_back(compare("p_q of " + rs.label() + " term " + word_string(t.word),
                            predicted_pq_B(t.word, r), t.pq));
    }
    std::string expected, actual;
    for (int sr = 0; sr <= 1; ++sr) {
      for (int k = 0; k <= r; ++k) {
        const mpz_class want = predicted_count_by_length_B(r, k, sr == 1);
        const long got = histogram.count({k, sr == 1}) ? histogram[{k, sr == 1}] : 0;
        if (want == 0 && got == 0) continue;
        const std::string tag = (sr ? "sr,k=" : "k=") + std::to_string(k) + ":";
        expected += tag + want.get_str() + ' ';
        actual += tag + std::to_string(got) + ' ';
      }
    }
    out.push_back(compare_text("length histogram of A(w1, 0) in " + rs.label(), expected, actual));
  }
  return out;
}

std::vector<Check> suite_nonzero_mu(int max_rank, const Rational& bound, EngineSet& engines) {
  std::vector<Check> out;
  for (int r = 2; r <= max_rank; ++r) {
    auto& e = engines.get(LieType::B, r);
    const auto& rs = e.root_system();
    const auto& w1 = rs.fundamental_weights()[0];
    const auto weights = dominant_integral_weights_in_box(rs, bound);
    if (bound == Rational(1))
      out.push_back(compare("dominant weights with k_1 <= 1 in " + rs.label(), static_cast<std::size_t>(r + 2),
                            weights.size()));
    for (const auto& mu : weights) {
      if (mu.is_zero()) continue;
      std::set<std::vector<int>> actual;
      for (const auto& w : e.alternation_set(w1, mu).elements) actual.insert(w.word());
      const std::set<std::vector<int>> expected =
          mu == w1 ? std::set<std::vector<int>>{{}} : std::set<std::vector<int>>{};
      out.push_back(compare_text("A(w1, " + mu.str() + ") in " + rs.label(), set_string(expected),
                                 set_string(actual)));
    }
  }
  return out;
}

std::vector<Check> suite_diagram(int max_rank, EngineSet& engines) {
  std::vector<Check> out;
  for (int r = 2; r <= max_rank; ++r) {
    auto& e = engines.get(LieType::B, r);
    const auto& rs = e.root_system();
    const auto& w1 = rs.fundamental_weights()[0];
    const auto diagram = e.weight_diagram(w1);
    out.push_back(compare("weights of L(w1) in " + rs.label(), static_cast<std::size_t>(2 * r + 1),
                          diagram.size()));

    std::set<RationalVector> expected_support;
    for (const auto& v : orbit(w1, rs)) expected_support.insert(v);
    expected_support.insert(rs.zero());
    std::set<RationalVector> support;
    long not_one = 0;
    for (const auto& entry : diagram) {
      support.insert(entry.weight);
      if (entry.multiplicity != 1) ++not_one;
    }
    out.push_back(compare("weights of L(w1) in " + rs.label() + " = W.w1 + {0}", expected_support.size(),
                          support.size()));
    out.back().pass = out.back().pass && support == expected_support;
    out.push_back(compare("multiplicities other than 1 in L(w1) of " + rs.label(), 0L, not_one));

    long mismatches = 0;
    for (const auto& entry : diagram) {
      for (const auto& w : enumerate(rs, e.options().cap)) {
        if (e.multiplicity(w1, act(w, entry.weight)) != entry.multiplicity) ++mismatches;
      }
    }
    out.push_back(compare("orbit invariance of m(w1, .) in " + rs.label(), 0L, mismatches));
  }
  return out;
}

std::vector<Check> suite_dominance(int max_rank) {
  std::vector<Check> out;
  const auto check = [&](LieType t, int r, const std::vector<long>& expected, bool dominant) {
    const RootSystem rs = RootSystem::build(t, r);
    const RationalVector actual = sum_of_simple_roots_in_fundamental_basis(rs);
    out.push_back(compare("sum of simple roots of " + rs.label() + " in fundamental weights",
                          int_vector(expected), actual));
    RationalVector total = rs.zero();
    for (const auto& a : rs.simple_roots()) total += a;
    out.push_back(compare(std::string("sum of simple roots of ") + rs.label() + " is dominant", dominant,
                          is_dominant(total, rs)));
  };
  const auto unit = [](int r, std::vector<std::pair<int, long>> entries) {
    std::vector<long> v(static_cast<std::size_t>(r), 0);
    for (auto [i, c] : entries) v[static_cast<std::size_t>(i - 1)] += c;
    return v;
  };
  for (int r = 1; r <= max_rank; ++r) check(LieType::A, r, unit(r, {{1, 1}, {r, 1}}), true);
  for (int r = 2; r <= max_rank; ++r) check(LieType::B, r, unit(r, {{1, 1}}), true);
  for (int r = 3; r <= max_rank; ++r) check(LieType::C, r, unit(r, {{1, 1}, {r - 1, -1}, {r, 1}}), false);
  for (int r = 4; r <= max_rank; ++r)
    check(LieType::D, r, unit(r, {{1, 1}, {r - 2, -1}, {r - 1, 1}, {r, 1}}), false);
  check(LieType::G2, 2, {-1, 1}, false);
  check(LieType::F4, 4, {1, 0, -1, 1}, false);
  check(LieType::E6, 6, unit(6, {{1, 1}, {2, 1}, {4, -1}, {6, 1}}), false);
  check(LieType::E7, 7, unit(7, {{1, 1}, {2, 1}, {4, -1}, {7, 1}}), false);
  check(LieType::E8, 8, unit(8, {{1, 1}, {2, 1}, {4, -1}, {8, 1}}), false);
  return out;
}

std::vector<Check> suite_type_a(int max_rank, EngineSet& engines) {
  std::vector<Check> out;
  for (int r = 2; r <= max_rank; ++r) {
    auto& e = engines.get(LieType::A, r);
    const auto& rs = e.root_system();
    const auto set = e.alternation_set(rs.highest_root(), rs.zero());
    out.push_back(compare("|A(highest root, 0)| in " + rs.label() + " = F_" + std::to_string(r),
                          fibonacci(r), mpz_class(set.size())));
  }
  return out;
}

std::vector<Check> suite_identities(int max_rank) {
  std::vector<Check> out;
  for (int r = 1; r <= max_rank; ++r) {
    out.push_back(compare("alternating sums at r = " + std::to_string(r), true, verify_alternating_identity(r)));
  }
  for (int m = 0; m <= 15; ++m) {
    std::size_t count = 0;
    bool gaps_ok = true;
    std::set<std::vector<int>> seen;
    for_each_nonconsecutive_subset(1, m, [&](const std::vector<int>& s) {
      ++count;
      for (std::size_t i = 1; i < s.size(); ++i) gaps_ok = gaps_ok && s[i] >= s[i - 1] + 2;
      seen.insert(s);
    });
    out.push_back(compare("nonconsecutive subsets of {1.." + std::to_string(m) + "} = F_" + std::to_string(m + 2),
                          fibonacci(m + 2), mpz_class(count)));
    out.push_back(compare("nonconsecutive subsets of {1.." + std::to_string(m) + "} are distinct and gapped",
                          true, gaps_ok && seen.size() == count));
  }
  return out;
}

std::vector<Check> suite_oracle(int samples, std::uint64_t seed) {
  const std::vector<std::pair<LieType, int>> systems{{LieType::A, 2}, {LieType::A, 3}, {LieType::A, 4},
                                                     {LieType::B, 2}, {LieType::B, 3}, {LieType::B, 4},
                                                     {LieType::C, 3}, {LieType::D, 4}, {LieType::G2, 2}};
  constexpr int kMaxHeight = 12;
  std::mt19937_64 rng(seed);
  std::vector<Check> out;
  const int n = static_cast<int>(systems.size());
  for (int s = 0; s < n; ++s) {
    const RootSystem rs = RootSystem::build(systems[static_cast<std::size_t>(s)].first,
                                            systems[static_cast<std::size_t>(s)].second);
    PartitionFunction p(rs);
    const int share = samples / n + (s < samples % n ? 1 : 0);
    const auto r = static_cast<std::size_t>(rs.rank());
    int agree = 0;
    std::string first_mismatch;
    for (int k = 0; k < share; ++k) {
      std::vector<std::int64_t> coords(r, 0);
      const int height = std::uniform_int_distribution<int>(0, kMaxHeight)(rng);
      std::uniform_int_distribution<std::size_t> pick(0, r - 1);
      for (int h = 0; h < height; ++h) ++coords[pick(rng)];
      const RationalVector xi = from_simple_root_coords(RationalVector::from_ints(coords), rs);
      const QPolynomial fast = p(coords);
      const QPolynomial slow = partition_q_bruteforce(xi, rs);
      if (fast == slow) {
        ++agree;
      } else if (first_mismatch.empty()) {
        first_mismatch = " (first mismatch at " + RationalVector::from_ints(coords).str() + ": " + fast.str() +
                         " vs " + slow.str() + ")";
      }
    }
    out.push_back(compare_text("memoized p_q agrees with exhaustive search on " + rs.label(),
                               std::to_string(share) + " of " + std::to_string(share),
                               std::to_string(agree) + " of " + std::to_string(share) + first_mismatch));
  }
  return out;
}

}  // namespace weylalt
