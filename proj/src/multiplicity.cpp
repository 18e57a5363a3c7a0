#include "weylalt/multiplicity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "weylalt/combinatorics.hpp"
#include "weylalt/errors.hpp"
#include "weylalt/lattice.hpp"

namespace weylalt {
namespace {

void check_cap(const RootSystem& rs, std::uint64_t cap) {
  const mpz_class order = rs.weyl_group_order();
  if (order > mpz_class(std::to_string(cap)))
    throw CapExceeded("|W(" + rs.label() + ")| = " + order.get_str() + " exceeds the cap of " +
                      std::to_string(cap) + "; raise it to run this computation");
}

bool term_less(const AlternationTerm& a, const AlternationTerm& b) {
  if (a.length != b.length) return a.length < b.length;
  return a.word < b.word;
}

Rational height(const RationalVector& simple_coords) {
  Rational h;
  for (const auto& c : simple_coords.coords()) h += c;
  return h;
}

bool in_positive_cone(const RationalVector& simple_coords) {
  return std::all_of(simple_coords.coords().begin(), simple_coords.coords().end(),
                     [](const Rational& c) { return c.is_integer() && c.sign() >= 0; });
}

}  // namespace

bool AlternationSet::contains_word(const std::vector<int>& word) const {
  return std::any_of(elements.begin(), elements.end(),
                     [&](const WeylElement& w) { return w.word() == word; });
}

MultiplicityEngine::MultiplicityEngine(const RootSystem& rs, WeylSumOptions options,
                                       PartitionOptions partition_options)
    : rs_(rs), options_(options), pf_(rs, std::move(partition_options)) {
  if (options_.threads == 0) options_.threads = 1;
}

std::vector<AlternationTerm> MultiplicityEngine::collect(const RationalVector& lambda,
                                                         const RationalVector& mu) {
  check_cap(rs_, options_.cap);
  const auto r = static_cast<std::size_t>(rs_.rank());
  const RationalVector lf = to_fundamental_coords(lambda + rs_.rho(), rs_);
  const RationalVector mf = to_fundamental_coords(mu + rs_.rho(), rs_);

  // Scale both vectors to integers with a common denominator.
  mpz_class denom = 1;
  for (std::size_t i = 0; i < r; ++i) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), lf[i].value().get_den_mpz_t());
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), mf[i].value().get_den_mpz_t());
  }
  const Rational d(denom);
  std::vector<std::int64_t> source(r), target(r);
  for (std::size_t i = 0; i < r; ++i) {
    source[i] = (lf[i] * d).to_int64();
    target[i] = (mf[i] * d).to_int64();
  }
  const std::int64_t scale = rs_.cartan_determinant() * Rational(denom).to_int64();
  const auto& inv = rs_.scaled_inverse_cartan();

  const WeylWalker walker(rs_, {source});
  const auto make_visitor = [&](std::vector<AlternationTerm>& out) {
    return [&, r](const WeylWalker::Node& node) {
      std::int64_t diff[16];
      for (std::size_t j = 0; j < r; ++j) diff[j] = node.images[j] - target[j];
      std::vector<std::int64_t> coords(r);
      for (std::size_t i = 0; i < r; ++i) {
        std::int64_t v = 0;
        for (std::size_t j = 0; j < r; ++j) v += inv[i * r + j] * diff[j];
        if (v < 0 || v % scale != 0) return;
        coords[i] = v / scale;
      }
      out.push_back(AlternationTerm{node.word(), node.length, std::move(coords), {}});
    };
  };
  if (r > 16) throw std::logic_error("rank above 16 is not supported by the Weyl sum");

  std::vector<AlternationTerm> terms;
  if (options_.threads <= 1) {
    walker.walk(make_visitor(terms));
  } else {
    std::vector<WeylWalker::Task> tasks;
    for (int depth = 1;; ++depth) {
      std::vector<AlternationTerm> above;
      tasks = walker.split(depth, make_visitor(above));
      if (tasks.size() >= 8 * options_.threads || tasks.empty() || depth >= 12) {
        terms = std::move(above);
        break;
      }
    }
    std::vector<std::vector<AlternationTerm>> partial(options_.threads);
    {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < options_.threads; ++t) {
        workers.emplace_back([&, t] {
          auto visit = make_visitor(partial[t]);
          for (std::size_t k = t; k < tasks.size(); k += options_.threads) walker.walk_task(tasks[k], visit);
        });
      }
    }
    for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(terms));
  }
  std::sort(terms.begin(), terms.end(), term_less);
  return terms;
}

void MultiplicityEngine::evaluate(std::vector<AlternationTerm>& terms) {
  const unsigned threads = std::min<unsigned>(options_.threads, static_cast<unsigned>(terms.size()));
  if (threads <= 1) {
    for (auto& t : terms) t.pq = pf_(t.argument);
    return;
  }
  std::vector<PartitionFunction> local(threads, pf_);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t k = w; k < terms.size(); k += threads) terms[k].pq = local[w](terms[k].argument);
      });
    }
  }
  for (const auto& l : local) pf_.merge(l);
}

std::vector<AlternationTerm> MultiplicityEngine::terms(const RationalVector& lambda,
                                                       const RationalVector& mu) {
  auto out = collect(lambda, mu);
  evaluate(out);
  for (const auto& t : out) {
    if (t.pq.is_zero()) throw std::logic_error("prefilter admitted a term with zero partition value");
  }
  return out;
}

AlternationSet MultiplicityEngine::alternation_set(const RationalVector& lambda,
                                                   const RationalVector& mu) {
  AlternationSet set{lambda, mu, {}};
  for (auto& t : collect(lambda, mu)) set.elements.push_back(WeylElement::from_word(rs_, t.word));
  return set;
}

mpz_class MultiplicityEngine::multiplicity(const RationalVector& lambda, const RationalVector& mu) {
  mpz_class total = 0;
  for (const auto& t : terms(lambda, mu)) {
    if (t.length % 2) {
      total -= t.pq.at_one();
    } else {
      total += t.pq.at_one();
    }
  }
  return total;
}

QPolynomial MultiplicityEngine::q_multiplicity(const RationalVector& lambda,
                                               const RationalVector& mu) {
  QPolynomial total;
  for (const auto& t : terms(lambda, mu)) total.add_shifted(t.pq, 0, t.length % 2 ? -1 : 1);
  return total;
}

std::vector<WeightDiagramEntry> MultiplicityEngine::weight_diagram(const RationalVector& lambda) {
  const RationalVector m = to_fundamental_coords(lambda, rs_);
  if (!std::all_of(m.coords().begin(), m.coords().end(),
                   [](const Rational& x) { return x.is_integer() && x.sign() >= 0; }))
    throw std::invalid_argument("weight diagram needs a dominant integral highest weight, got " +
                                lambda.str());
  const RationalVector lowest = -dominant_conjugate(-lambda, rs_);
  const Rational max_depth = height(to_simple_root_coords(lambda - lowest, rs_));

  std::unordered_map<RationalVector, mpz_class, RationalVectorHash> dominant_mult;
  std::unordered_set<RationalVector, RationalVectorHash> seen{lambda};
  std::deque<std::pair<RationalVector, long>> queue{{lambda, 0}};
  std::vector<std::pair<long, WeightDiagramEntry>> found;
  while (!queue.empty()) {
    auto [mu, depth] = std::move(queue.front());
    queue.pop_front();
    const RationalVector rep = dominant_conjugate(mu, rs_);
    if (!in_positive_cone(to_simple_root_coords(lambda - rep, rs_))) continue;
    auto it = dominant_mult.find(rep);
    if (it == dominant_mult.end()) it = dominant_mult.emplace(rep, multiplicity(lambda, rep)).first;
    if (it->second == 0) continue;
    found.push_back({depth, WeightDiagramEntry{mu, it->second}});
    if (Rational(depth) >= max_depth) continue;
    for (const auto& a : rs_.simple_roots()) {
      RationalVector next = mu - a;
      if (seen.insert(next).second) queue.emplace_back(std::move(next), depth + 1);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.weight > b.second.weight;
  });
  std::vector<WeightDiagramEntry> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

AlternationSet alternation_set(const RationalVector& lambda, const RationalVector& mu,
                               const RootSystem& rs, std::uint64_t cap) {
  return MultiplicityEngine(rs, {cap, 1}).alternation_set(lambda, mu);
}

mpz_class multiplicity(const RationalVector& lambda, const RationalVector& mu, const RootSystem& rs,
                       std::uint64_t cap) {
  return MultiplicityEngine(rs, {cap, 1}).multiplicity(lambda, mu);
}

QPolynomial q_multiplicity(const RationalVector& lambda, const RationalVector& mu,
                           const RootSystem& rs, std::uint64_t cap) {
  return MultiplicityEngine(rs, {cap, 1}).q_multiplicity(lambda, mu);
}

std::vector<WeightDiagramEntry> weight_diagram(const RationalVector& lambda, const RootSystem& rs,
                                               std::uint64_t cap) {
  return MultiplicityEngine(rs, {cap, 1}).weight_diagram(lambda);
}

std::vector<std::vector<int>> predicted_alternation_set_B(int r) {
  if (r < 2) throw std::invalid_argument("predicted_alternation_set_B needs r >= 2");
  return nonconsecutive_subsets(2, r);
}

QPolynomial predicted_pq_B(const std::vector<int>& indices, int r) {
  if (r < 2) throw std::invalid_argument("predicted_pq_B needs r >= 2");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 2 || indices[k] > r || (k > 0 && indices[k] < indices[k - 1] + 2))
      throw std::invalid_argument("indices must be a sorted nonconsecutive subset of {2..r}");
  }
  const bool has_sr = !indices.empty() && indices.back() == r;
  const long k = static_cast<long>(indices.size()) - (has_sr ? 1 : 0);
  const long exponent = (has_sr ? r - 2 : r - 1) - 2 * k;
  if (exponent < 0) throw std::logic_error("negative exponent in predicted_pq_B");
  return QPolynomial::one_plus_q_power(static_cast<std::size_t>(exponent))
      .shifted(static_cast<std::size_t>(1 + k));
}

mpz_class predicted_count_by_length_B(int r, int k, bool has_sr) {
  if (r < 2 || k < 0) throw std::invalid_argument("predicted_count_by_length_B needs r >= 2, k >= 0");
  return has_sr ? binomial(r - 2 - k, k) : binomial(r - 1 - k, k);
}

}  // namespace weylalt
