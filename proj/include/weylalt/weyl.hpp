#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylalt/rational.hpp"
#include "weylalt/root_system.hpp"

namespace weylalt {

/// Default bound on the number of group elements any single computation may touch.
inline constexpr std::uint64_t kDefaultWeylCap = 2'000'000;

/// Signed permutation of e_1..e_n: e_i -> sign(image[i]) e_{|image[i]|-1}.
struct SignedPermutation {
  std::vector<int> image;

  RationalVector apply(const RationalVector& v) const;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// One element of the Weyl group: its matrix on the ambient space together
/// with a reduced word in the simple reflections (1-based indices, read
/// left to right, so word {i, j} is s_i s_j).
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  /// Builds the product of the given reflections. Throws std::invalid_argument
  /// if an index is out of range or the word is not reduced.
  static WeylElement from_word(const RootSystem& rs, std::vector<int> word);

  const RationalMatrix& matrix() const { return matrix_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  /// Present for types B, C and D.
  const std::optional<SignedPermutation>& signed_perm() const { return signed_perm_; }
  int determinant_sign() const { return length() % 2 ? -1 : 1; }

  /// "1" for the identity, otherwise "s2 s4".
  std::string word_string() const;

 private:
  friend void for_each_element(const RootSystem&, std::uint64_t,
                               const std::function<void(const WeylElement&)>&);
  WeylElement(RationalMatrix matrix, std::vector<int> word, const RootSystem& rs);

  RationalMatrix matrix_;
  std::vector<int> word_;
  std::optional<SignedPermutation> signed_perm_;
};

/// Reflection in alpha_i (1 <= i <= rank); throws std::out_of_range.
WeylElement simple_reflection(int i, const RootSystem& rs);

/// Reflection matrix v -> v - <v, alpha_i^vee> alpha_i for a zero-based index.
RationalMatrix reflection_matrix(const RootSystem& rs, int zero_based_index);

/// Number of positive roots sent to negative roots.
int inversion_count(const RationalMatrix& m, const RootSystem& rs);

/// Visits every group element once, in nondecreasing length and, within a
/// length, in lexicographic order of the canonical reduced word (the
/// lexicographically least reduced word). Throws CapExceeded when |W| > cap.
void for_each_element(const RootSystem& rs, std::uint64_t cap,
                      const std::function<void(const WeylElement&)>& visit);
std::vector<WeylElement> enumerate(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);

/// Matrix-vector action; throws std::invalid_argument on dimension mismatch.
RationalVector act(const WeylElement& w, const RationalVector& v);

/// The W-orbit of v, closed under simple reflections, sorted.
std::vector<RationalVector> orbit(const RationalVector& v, const RootSystem& rs);

/// Dominant representative of the W-orbit of a vector in the root span.
RationalVector dominant_conjugate(const RationalVector& v, const RootSystem& rs);

/// Integer traversal of W for the alternating sums.
///
/// Elements are identified with the orbit of rho written in fundamental
/// coordinates, where each s_i acts by an integer matrix. Every element is
/// generated exactly once from its canonical parent (strip the smallest
/// left descent), so no hash set is needed and memory stays proportional to
/// the longest word. The word reported for each element is its
/// lexicographically least reduced word.
class WeylWalker {
 public:
  struct Node {
    int length;
    /// Letters in discovery order (zero-based); the word is this reversed.
    std::span<const int> path;
    /// Image of each tracked vector, rank entries per vector, concatenated.
    std::span<const std::int64_t> images;

    /// Reduced word, 1-based, left to right.
    std::vector<int> word() const;
  };
  using Visitor = std::function<void(const Node&)>;

  /// `tracked` are integer vectors in fundamental coordinates whose images
  /// under each element should be reported.
  WeylWalker(const RootSystem& rs, std::vector<std::vector<std::int64_t>> tracked);

  /// Visits the whole group; single-threaded.
  void walk(const Visitor& visit) const;

  /// A subtree of the traversal, rooted at the element reached by `path`.
  struct Task {
    std::vector<int> path;
  };
  /// Visits every element of length < depth and returns the subtrees rooted
  /// at length `depth`, which together cover the rest of the group.
  std::vector<Task> split(int depth, const Visitor& visit_above) const;
  void walk_task(const Task& task, const Visitor& visit) const;

 private:
  struct Frame;
  void descend(std::vector<Frame>& stack, std::vector<int>& path, int depth, int stop_depth,
               const Visitor& visit, std::vector<Task>* tasks) const;
  bool apply(const Frame& from, int i, Frame& to) const;

  int rank_;
  std::vector<int> cartan_;
  std::vector<std::int64_t> rho_;
  std::vector<std::int64_t> tracked_;
  std::size_t tracked_count_;
};

}  // namespace weylalt
