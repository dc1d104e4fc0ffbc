#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "riskit/rq.hpp"

namespace riskit {

/// A finite group as a Cayley table. Built-in constructions put the identity
/// at index 0; tables produced from translation groups keep their natural
/// indexing, so the identity index is stored explicitly.
class FiniteGroup {
 public:
  /// Validates associativity, identity and inverses; throws
  /// Error("InvalidTable") describing the first failure.
  static FiniteGroup from_table(std::vector<std::vector<int>> mul);

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  int element_order(int g) const;
  const std::vector<std::vector<int>>& table() const { return mul_; }

  /// Smallest generating sequence found greedily: repeatedly adjoin the
  /// smallest element outside the subgroup generated so far. Deterministic.
  std::vector<int> generating_sequence() const;

  /// Subgroup generated by `seed`, as an ascending element list.
  std::vector<int> subgroup_closure(const std::vector<int>& seed) const;

  bool operator==(const FiniteGroup& other) const { return mul_ == other.mul_; }

 private:
  FiniteGroup() = default;
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
};

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<int> images;  // images[g] in target, for every g in source

  /// Re-checks images[g*h] == images[g]*images[h] on all pairs.
  bool validate() const;
};

/// A finitely presented group: `generator_count` generators, relators as
/// sequences of letters ±(i+1) (letter k>0 = generator k-1, k<0 = its
/// inverse), each read as "word = identity". Relators are stored freely
/// reduced; construction reduces them.
struct GroupPresentation {
  int generator_count = 0;
  std::vector<std::vector<int>> relators;

  static GroupPresentation make(int generator_count,
                                std::vector<std::vector<int>> relators);

  /// Text format: line "gens: k", then one relator per line as
  /// space-separated signed integers.
  std::string to_text() const;
  static GroupPresentation from_text(const std::string& text);
};

/// Free reduction (cancel adjacent inverse pairs); `cyclic` also cancels
/// first-against-last letters.
std::vector<int> free_reduce(std::vector<int> word, bool cyclic = false);

/// Group construction specs: cyclic:n, symmetric:n (n <= 4), dihedral:n
/// (order 2n), quaternion8, explicit tables, and products.
struct GroupSpec {
  enum class Kind { Cyclic, Symmetric, Dihedral, Quaternion8, Table, Product };
  Kind kind = Kind::Cyclic;
  int n = 1;
  std::vector<std::vector<int>> table;             // Kind::Table
  std::vector<std::shared_ptr<GroupSpec>> factors;  // Kind::Product

  static GroupSpec cyclic(int n);
  static GroupSpec symmetric(int n);
  static GroupSpec dihedral(int n);
  static GroupSpec quaternion8();
  static GroupSpec from_cayley(std::vector<std::vector<int>> table);
  static GroupSpec product(std::vector<GroupSpec> factors);
};

/// Text grammar for specs: "cyclic:6", "symmetric:3", "dihedral:4",
/// "quaternion8", "product(cyclic:2,cyclic:3)".
GroupSpec parse_group_spec(const std::string& text);

/// Builds the Cayley table for a spec. Identity is element 0 for every
/// built-in. Throws Error("InvalidTable") or Error("BoundExceeded") when the
/// resulting order exceeds max_order.
FiniteGroup make_group(const GroupSpec& spec, int max_order = 64);

/// Direct product with pair (a, b) at index a*|H| + b.
FiniteGroup group_product(const FiniteGroup& G, const FiniteGroup& H);

/// The risandle on G's carrier with h ▷ g = h g^{-1}.
RightQuasigroup risandle_of_group(const FiniteGroup& G);

/// Inverse construction for nonempty faithful risandles: the carrier is X
/// itself (element x standing for the translation s_x) and multiplication is
/// composition of translations, mul[a][b] = c with s_c = s_a ∘ s_b. Throws
/// Error named Empty, NotRisandle or NotFaithful when the precondition fails.
FiniteGroup group_of_faithful(const RightQuasigroup& X);

/// All homomorphisms G -> H, by backtracking over images of a generating
/// sequence of G; each result is fully validated. Sorted by image array.
/// Throws Error("BoundExceeded") if |G|*|H| > pair_bound.
std::vector<GroupHom> group_homs(const FiniteGroup& G, const FiniteGroup& H,
                                 long long pair_bound = 1 << 20);

/// True iff the normal closure of the image of phi is the whole target.
bool is_effective(const GroupHom& phi);

/// Bijective homomorphism or nullopt; backtracking on a generating sequence
/// with element-order pruning and an order-multiset precheck.
std::optional<GroupHom> find_group_isomorphism(const FiniteGroup& G,
                                               const FiniteGroup& H);

/// Coset enumeration result. When `finished`, `group` is the Cayley table of
/// the presented group reconstructed from the regular coset action, `action`
/// maps [generator][coset] -> coset, and generator_images[i] is the element
/// the i-th presentation generator maps to.
struct ToddCoxeterResult {
  bool finished = false;
  FiniteGroup group;
  std::vector<std::vector<int>> action;
  std::vector<int> generator_images;
};

/// HLT-style coset enumeration of the trivial subgroup with a hard coset
/// budget and fixed scan order; deterministic. `finished == false` means the
/// enumeration did not complete within max_cosets (the group may be infinite
/// or just large).
ToddCoxeterResult todd_coxeter(const GroupPresentation& P, int max_cosets);

/// JSON exchange format {"identity": e, "mul": [[...]], "order": n}.
std::string to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const std::string& text);

}  // namespace riskit
