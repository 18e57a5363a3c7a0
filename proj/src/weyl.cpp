#include "weylalt/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "weylalt/errors.hpp"
#include "weylalt/lattice.hpp"

namespace weylalt {
namespace {

bool has_signed_perm(LieType t) { return t == LieType::B || t == LieType::C || t == LieType::D; }

std::optional<SignedPermutation> signed_perm_of(const RationalMatrix& m) {
  SignedPermutation p;
  p.image.resize(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    int found = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Rational& x = m(r, c);
      if (x.is_zero()) continue;
      if (found != 0 || (x != Rational(1) && x != Rational(-1))) return std::nullopt;
      found = x.sign() * static_cast<int>(r + 1);
    }
    if (found == 0) return std::nullopt;
    p.image[c] = found;
  }
  return p;
}

void check_cap(const RootSystem& rs, std::uint64_t cap) {
  const mpz_class order = rs.weyl_group_order();
  if (order > mpz_class(std::to_string(cap)))
    throw CapExceeded("|W(" + rs.label() + ")| = " + order.get_str() + " exceeds the cap of " +
                      std::to_string(cap));
}

}  // namespace

RationalVector SignedPermutation::apply(const RationalVector& v) const {
  if (v.dim() != image.size()) throw std::invalid_argument("signed permutation: dimension mismatch");
  RationalVector out(v.dim());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const int target = std::abs(image[i]) - 1;
    out[static_cast<std::size_t>(target)] = image[i] > 0 ? v[i] : -v[i];
  }
  return out;
}

WeylElement::WeylElement(RationalMatrix matrix, std::vector<int> word, const RootSystem& rs)
    : matrix_(std::move(matrix)), word_(std::move(word)) {
  if (has_signed_perm(rs.type())) signed_perm_ = signed_perm_of(matrix_);
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  return WeylElement(RationalMatrix::identity(rs.ambient_dim()), {}, rs);
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::vector<int> word) {
  RationalMatrix m = RationalMatrix::identity(rs.ambient_dim());
  for (int i : word) {
    if (i < 1 || i > rs.rank())
      throw std::invalid_argument("reflection index " + std::to_string(i) + " out of range");
    m = m * reflection_matrix(rs, i - 1);
  }
  if (inversion_count(m, rs) != static_cast<int>(word.size()))
    throw std::invalid_argument("word is not reduced");
  return WeylElement(std::move(m), std::move(word), rs);
}

std::string WeylElement::word_string() const {
  if (word_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) out += ' ';
    out += 's' + std::to_string(word_[k]);
  }
  return out;
}

RationalMatrix reflection_matrix(const RootSystem& rs, int zero_based_index) {
  const auto& a = rs.simple_roots().at(static_cast<std::size_t>(zero_based_index));
  const Rational scale = Rational(2) / dot(a, a);
  const std::size_t n = rs.ambient_dim();
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= scale * a[r] * a[c];
  return m;
}

WeylElement simple_reflection(int i, const RootSystem& rs) {
  if (i < 1 || i > rs.rank())
    throw std::out_of_range("simple reflection index " + std::to_string(i) + " outside 1.." +
                            std::to_string(rs.rank()));
  return WeylElement::from_word(rs, {i});
}

int inversion_count(const RationalMatrix& m, const RootSystem& rs) {
  std::unordered_set<RationalVector, RationalVectorHash> positive(rs.positive_roots().begin(),
                                                                  rs.positive_roots().end());
  int count = 0;
  for (const auto& a : rs.positive_roots()) {
    if (positive.count(-(m * a))) ++count;
  }
  return count;
}

void for_each_element(const RootSystem& rs, std::uint64_t cap,
                      const std::function<void(const WeylElement&)>& visit) {
  check_cap(rs, cap);
  const int r = rs.rank();
  std::vector<RationalMatrix> gens;
  for (int i = 0; i < r; ++i) gens.push_back(reflection_matrix(rs, i));

  using Level = std::vector<std::pair<RationalMatrix, std::vector<int>>>;
  Level current{{RationalMatrix::identity(rs.ambient_dim()), {}}};
  std::unordered_set<RationalMatrix, RationalMatrixHash> previous;
  std::uint64_t seen = 0;
  while (!current.empty()) {
    std::unordered_set<RationalMatrix, RationalMatrixHash> current_keys;
    for (auto& [m, w] : current) {
      if (++seen > cap) throw CapExceeded("Weyl group enumeration exceeded the cap");
      visit(WeylElement(m, w, rs));
      current_keys.insert(m);
    }
    // Left multiplication by s_i; a child keeps the word whose first letter is smallest,
    // which makes every stored word the lexicographically least reduced word.
    std::unordered_map<RationalMatrix, std::vector<int>, RationalMatrixHash> next;
    for (const auto& [m, w] : current) {
      for (int i = 0; i < r; ++i) {
        RationalMatrix child = gens[static_cast<std::size_t>(i)] * m;
        if (previous.count(child)) continue;
        std::vector<int> word;
        word.reserve(w.size() + 1);
        word.push_back(i + 1);
        word.insert(word.end(), w.begin(), w.end());
        auto [it, inserted] = next.try_emplace(std::move(child), word);
        if (!inserted && word < it->second) it->second = std::move(word);
      }
    }
    Level upcoming;
    upcoming.reserve(next.size());
    for (auto& [m, w] : next) upcoming.emplace_back(m, std::move(w));
    std::sort(upcoming.begin(), upcoming.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    previous = std::move(current_keys);
    current = std::move(upcoming);
  }
}

std::vector<WeylElement> enumerate(const RootSystem& rs, std::uint64_t cap) {
  std::vector<WeylElement> out;
  for_each_element(rs, cap, [&](const WeylElement& w) { out.push_back(w); });
  return out;
}

RationalVector act(const WeylElement& w, const RationalVector& v) {
  if (v.dim() != w.matrix().cols())
    throw std::invalid_argument("act: vector has dimension " + std::to_string(v.dim()) +
                                ", expected " + std::to_string(w.matrix().cols()));
  return w.matrix() * v;
}

std::vector<RationalVector> orbit(const RationalVector& v, const RootSystem& rs) {
  std::vector<RationalMatrix> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(reflection_matrix(rs, i));
  std::unordered_set<RationalVector, RationalVectorHash> seen{v};
  std::deque<RationalVector> queue{v};
  while (!queue.empty()) {
    RationalVector x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      RationalVector y = g * x;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<RationalVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

RationalVector dominant_conjugate(const RationalVector& v, const RootSystem& rs) {
  RationalVector x = v;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      const Rational p = rs.coroot_pairing(x, i);
      if (p.sign() < 0) {
        x -= p * rs.simple_roots()[static_cast<std::size_t>(i)];
        moved = true;
      }
    }
    if (!moved) return x;
  }
}

// --- WeylWalker -------------------------------------------------------------

struct WeylWalker::Frame {
  std::vector<std::int64_t> rho;
  std::vector<std::int64_t> images;
};

std::vector<int> WeylWalker::Node::word() const {
  std::vector<int> w(path.rbegin(), path.rend());
  for (int& x : w) ++x;
  return w;
}

WeylWalker::WeylWalker(const RootSystem& rs, std::vector<std::vector<std::int64_t>> tracked)
    : rank_(rs.rank()), tracked_count_(tracked.size()) {
  const auto r = static_cast<std::size_t>(rank_);
  cartan_.resize(r * r);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) cartan_[static_cast<std::size_t>(i * rank_ + j)] = rs.cartan(i, j);
  rho_.assign(r, 1);
  for (const auto& t : tracked) {
    if (t.size() != r) throw std::invalid_argument("tracked vector has wrong dimension");
    tracked_.insert(tracked_.end(), t.begin(), t.end());
  }
}

bool WeylWalker::apply(const Frame& from, int i, Frame& to) const {
  const auto r = static_cast<std::size_t>(rank_);
  const std::int64_t c = from.rho[static_cast<std::size_t>(i)];
  to.rho.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    to.rho[j] = from.rho[j] - c * cartan_[j * r + static_cast<std::size_t>(i)];
    // Canonical parent: i must be the smallest left descent of the child.
    if (j < static_cast<std::size_t>(i) && to.rho[j] < 0) return false;
  }
  to.images.resize(from.images.size());
  for (std::size_t t = 0; t < tracked_count_; ++t) {
    const std::int64_t* src = from.images.data() + t * r;
    std::int64_t* dst = to.images.data() + t * r;
    const std::int64_t d = src[i];
    for (std::size_t j = 0; j < r; ++j) dst[j] = src[j] - d * cartan_[j * r + static_cast<std::size_t>(i)];
  }
  return true;
}

void WeylWalker::descend(std::vector<Frame>& stack, std::vector<int>& path, int depth,
                         int stop_depth, const Visitor& visit, std::vector<Task>* tasks) const {
  const auto d = static_cast<std::size_t>(depth);
  if (path.size() < d + 1) path.resize(d + 64);
  if (tasks != nullptr && depth == stop_depth) {
    tasks->push_back(Task{std::vector<int>(path.begin(), path.begin() + depth)});
    return;
  }
  visit(Node{depth, std::span<const int>(path.data(), d), stack[d].images});
  if (stack.size() < d + 2) stack.resize(d + 2);
  for (int i = 0; i < rank_; ++i) {
    if (stack[d].rho[static_cast<std::size_t>(i)] <= 0) continue;
    if (!apply(stack[d], i, stack[d + 1])) continue;
    if (path.size() < d + 1) path.resize(d + 64);
    path[d] = i;
    descend(stack, path, depth + 1, stop_depth, visit, tasks);
  }
}

void WeylWalker::walk(const Visitor& visit) const {
  std::vector<Frame> stack(1);
  stack[0].rho = rho_;
  stack[0].images = tracked_;
  std::vector<int> path;
  descend(stack, path, 0, -1, visit, nullptr);
}

std::vector<WeylWalker::Task> WeylWalker::split(int depth, const Visitor& visit_above) const {
  std::vector<Frame> stack(1);
  stack[0].rho = rho_;
  stack[0].images = tracked_;
  std::vector<Task> tasks;
  std::vector<int> path;
  descend(stack, path, 0, depth, visit_above, &tasks);
  return tasks;
}

void WeylWalker::walk_task(const Task& task, const Visitor& visit) const {
  std::vector<Frame> stack(task.path.size() + 2);
  stack[0].rho = rho_;
  stack[0].images = tracked_;
  for (std::size_t k = 0; k < task.path.size(); ++k) {
    if (!apply(stack[k], task.path[k], stack[k + 1]))
      throw std::logic_error("walk_task: path is not canonical");
  }
  std::vector<int> path(task.path.begin(), task.path.end());
  path.resize(task.path.size() + 64);
  descend(stack, path, static_cast<int>(task.path.size()), -1, visit, nullptr);
}

}  // namespace weylalt
