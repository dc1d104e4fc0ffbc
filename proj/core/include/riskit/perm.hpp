#pragma once

#include <compare>
#include <vector>

namespace riskit {

/// A permutation of {0, ..., degree-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;  // degree 0

  static Permutation identity(int degree);
  /// Validates that `images` is a bijection; throws Error("NotAPermutation").
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Multiset of cycle lengths, sorted ascending. Conjugation invariant.
  std::vector<int> cycle_type() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// compose(f, g)(i) = f(g(i))  — g is applied first.
Permutation compose(const Permutation& f, const Permutation& g);

/// A concrete permutation group: full element list plus the generators it was
/// closed from. Element 0 is the identity; the rest follow in breadth-first
/// closure order (deterministic given the generator order).
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }
  int index_of(const Permutation& p) const;
};

/// Breadth-first closure of `generators` under composition. Degree 0 yields
/// the trivial group on the empty set.
PermGroup close_generators(int degree, const std::vector<Permutation>& generators);

}  // namespace riskit
