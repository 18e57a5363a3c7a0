#include "weylalt/kostant.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "weylalt/errors.hpp"
#include "weylalt/lattice.hpp"

namespace weylalt {
namespace {

constexpr const char* kCacheMagic = "weylalt-kostant-cache";
constexpr const char* kCacheVersion = "v1";

std::int64_t height_of(std::span<const std::int64_t> c) {
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

// Simple-root coordinates of xi when they are nonnegative integers.
std::optional<std::vector<std::int64_t>> cone_coords(const RationalVector& xi, const RootSystem& rs) {
  if (!in_root_span(xi, rs)) return std::nullopt;
  const RationalVector c = to_simple_root_coords(xi, rs);
  std::vector<std::int64_t> out(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (!c[i].is_integer() || c[i].sign() < 0) return std::nullopt;
    out[i] = c[i].to_int64();
  }
  return out;
}

}  // namespace

std::size_t PartitionFunction::KeyHash::operator()(const Key& k) const {
  std::size_t h = k.size();
  for (auto x : k) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

PartitionFunction::PartitionFunction(const RootSystem& rs, PartitionOptions options)
    : rs_(std::make_shared<const RootSystem>(rs)), options_(std::move(options)) {
  const auto& simple = rs_->positive_roots_simple();
  const std::size_t n = simple.size();
  const auto r = static_cast<std::size_t>(rs_->rank());
  if (options_.root_order.empty()) {
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return height_of(simple[a]) > height_of(simple[b]);
    });
  } else {
    order_ = options_.root_order;
    std::vector<std::size_t> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted.size() != n || sorted[k] != k)
        throw std::invalid_argument("root_order must be a permutation of the positive roots");
    }
  }
  for (std::size_t idx : order_) {
    roots_.emplace_back(simple[idx].begin(), simple[idx].end());
  }
  support_from_.assign(n + 1, std::vector<bool>(r, false));
  for (std::size_t k = n; k-- > 0;) {
    support_from_[k] = support_from_[k + 1];
    for (std::size_t j = 0; j < r; ++j)
      if (roots_[k][j] > 0) support_from_[k][j] = true;
  }
  simple_tail_start_ = n;
  while (simple_tail_start_ > 0 && height_of(simple[order_[simple_tail_start_ - 1]]) == 1)
    --simple_tail_start_;
}

QPolynomial PartitionFunction::count(std::vector<std::int32_t>& xi, std::size_t k) {
  const std::size_t r = xi.size();
  bool zero = true;
  std::int64_t height = 0;
  for (std::size_t j = 0; j < r; ++j) {
    if (xi[j] != 0) {
      zero = false;
      if (!support_from_[k][j]) return {};
    }
    height += xi[j];
  }
  if (zero) return QPolynomial::constant(1);
  // Only distinct simple roots remain: the decomposition is unique.
  if (k >= simple_tail_start_) return QPolynomial::monomial(static_cast<std::size_t>(height));

  Key key(xi);
  key.push_back(static_cast<std::int32_t>(k));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const auto& beta = roots_[k];
  QPolynomial result;
  std::int32_t used = 0;
  for (;;) {
    result.add_shifted(count(xi, k + 1), static_cast<std::size_t>(used));
    bool fits = true;
    for (std::size_t j = 0; j < r; ++j) {
      xi[j] -= beta[j];
      if (xi[j] < 0) fits = false;
    }
    ++used;
    if (!fits) break;
  }
  for (std::size_t j = 0; j < r; ++j) xi[j] += used * beta[j];

  if (options_.max_cache_entries == 0 || memo_.size() < options_.max_cache_entries)
    memo_.emplace(std::move(key), result);
  return result;
}

QPolynomial PartitionFunction::operator()(std::span<const std::int64_t> simple_coords) {
  const auto r = static_cast<std::size_t>(rs_->rank());
  if (simple_coords.size() != r) throw std::invalid_argument("partition function: wrong dimension");
  std::vector<std::int32_t> xi(r);
  for (std::size_t j = 0; j < r; ++j) {
    if (simple_coords[j] < 0) return {};
    if (simple_coords[j] > std::numeric_limits<std::int32_t>::max())
      throw std::overflow_error("partition function argument too large");
    xi[j] = static_cast<std::int32_t>(simple_coords[j]);
  }
  return count(xi, 0);
}

QPolynomial PartitionFunction::of(const RationalVector& xi) {
  const auto coords = cone_coords(xi, *rs_);
  if (!coords) return {};
  return (*this)(*coords);
}

void PartitionFunction::merge(const PartitionFunction& other) {
  if (other.rs_->label() != rs_->label() || other.order_ != order_)
    throw std::invalid_argument("merge: evaluators are over different systems or orders");
  for (const auto& [k, v] : other.memo_) {
    if (options_.max_cache_entries != 0 && memo_.size() >= options_.max_cache_entries) break;
    memo_.emplace(k, v);
  }
}

std::uint64_t PartitionFunction::order_fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t idx : order_) {
    h ^= idx + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

void PartitionFunction::save(std::ostream& out) const {
  // Sorted so that the file is reproducible.
  std::vector<const std::pair<const Key, QPolynomial>*> entries;
  entries.reserve(memo_.size());
  for (const auto& e : memo_) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });
  out << kCacheMagic << ' ' << kCacheVersion << '\n';
  out << "system " << rs_->label() << " order " << order_fingerprint() << " entries "
      << entries.size() << '\n';
  for (const auto* e : entries) {
    const Key& key = e->first;
    out << key.back();
    for (std::size_t j = 0; j + 1 < key.size(); ++j) out << ' ' << key[j];
    out << " :";
    for (const auto& c : e->second.coeffs()) out << ' ' << c.get_str();
    out << '\n';
  }
}

void PartitionFunction::load(std::istream& in) {
  std::string magic, version, word, label;
  std::uint64_t fingerprint = 0;
  std::size_t count = 0;
  if (!(in >> magic >> version) || magic != kCacheMagic)
    throw ParseError("not a Kostant cache file");
  if (version != kCacheVersion) throw ParseError("unsupported cache version " + version);
  if (!(in >> word) || word != "system" || !(in >> label) || !(in >> word) || word != "order" ||
      !(in >> fingerprint) || !(in >> word) || word != "entries" || !(in >> count))
    throw ParseError("malformed cache header");
  if (label != rs_->label())
    throw ParseError("cache is for " + label + ", not " + rs_->label());
  if (fingerprint != order_fingerprint()) throw ParseError("cache was built with another root order");

  const auto r = static_cast<std::size_t>(rs_->rank());
  std::string line;
  std::getline(in, line);
  std::unordered_map<Key, QPolynomial, KeyHash> loaded;
  for (std::size_t e = 0; e < count; ++e) {
    if (!std::getline(in, line)) throw ParseError("cache truncated");
    std::istringstream ls(line);
    std::int64_t index = 0;
    if (!(ls >> index) || index < 0 || static_cast<std::size_t>(index) >= roots_.size())
      throw ParseError("bad cache record: " + line);
    Key key(r);
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t x = 0;
      if (!(ls >> x) || x < 0 || x > std::numeric_limits<std::int32_t>::max())
        throw ParseError("bad cache record: " + line);
      key[j] = static_cast<std::int32_t>(x);
    }
    key.push_back(static_cast<std::int32_t>(index));
    if (!(ls >> word) || word != ":") throw ParseError("bad cache record: " + line);
    std::vector<mpz_class> coeffs;
    while (ls >> word) {
      mpz_class c;
      if (c.set_str(word, 10) != 0) throw ParseError("bad coefficient in cache: " + word);
      coeffs.push_back(c);
    }
    loaded.emplace(std::move(key), QPolynomial(std::move(coeffs)));
  }
  for (auto& [k, v] : loaded) memo_.insert_or_assign(k, std::move(v));
}

QPolynomial partition_q(const RationalVector& xi, const RootSystem& rs) {
  PartitionFunction p(rs);
  return p.of(xi);
}

QPolynomial partition_q_bruteforce(const RationalVector& xi, const RootSystem& rs) {
  const auto coords = cone_coords(xi, rs);
  if (!coords) return {};
  const std::int64_t height = height_of(*coords);
  if (height > kBruteForceMaxHeight)
    throw HeightExceeded("height " + std::to_string(height) + " exceeds the exhaustive-search bound of " +
                         std::to_string(kBruteForceMaxHeight));

  const auto& roots = rs.positive_roots_simple();
  const std::size_t n = roots.size();
  const std::size_t r = coords->size();
  std::vector<std::int64_t> remaining = *coords;
  std::vector<mpz_class> histogram(static_cast<std::size_t>(height) + 1);

  // Roots are taken last-to-first; each receives every multiplicity that
  // keeps the remainder coordinatewise nonnegative.
  std::function<void(std::size_t, std::size_t)> place = [&](std::size_t depth, std::size_t parts) {
    if (depth == n) {
      if (std::all_of(remaining.begin(), remaining.end(), [](std::int64_t x) { return x == 0; }))
        histogram[parts] += 1;
      return;
    }
    const auto& beta = roots[n - 1 - depth];
    std::int64_t most = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j = 0; j < r; ++j)
      if (beta[j] > 0) most = std::min(most, remaining[j] / beta[j]);
    for (std::int64_t m = 0; m <= most; ++m) {
      for (std::size_t j = 0; j < r; ++j) remaining[j] -= m * beta[j];
      place(depth + 1, parts + static_cast<std::size_t>(m));
      for (std::size_t j = 0; j < r; ++j) remaining[j] += m * beta[j];
    }
  };
  place(0, 0);
  return QPolynomial(std::move(histogram));
}

}  // namespace weylalt
