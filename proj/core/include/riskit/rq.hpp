#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riskit/perm.hpp"

namespace riskit {

/// A finite right quasigroup as an operation table over elements 0..n-1.
///
/// Convention fixed across the whole toolkit: table[y][x] = y ▷ x, i.e. the
/// column map y ↦ table[y][x] is the right translation s_x, and every column
/// is a permutation. The empty structure (order 0) is admitted.
class RightQuasigroup {
 public:
  /// Validates the table. Throws Error named NotSquare, EntryOutOfRange or
  /// ColumnNotPermutation (message names the offending column).
  static RightQuasigroup from_table(const std::vector<std::vector<int>>& table);

  int order() const { return order_; }
  /// y ▷ x
  int apply(int y, int x) const { return table_[y][x]; }
  /// s_x^{-1}(y), the unique z with z ▷ x = y.
  int apply_inverse(int y, int x) const { return inverse_[y][x]; }
  Permutation translation(int x) const;

  const std::vector<std::vector<int>>& table() const { return table_; }

  bool operator==(const RightQuasigroup& other) const {
    return table_ == other.table_;
  }

 private:
  RightQuasigroup(int order, std::vector<std::vector<int>> table,
                  std::vector<std::vector<int>> inverse)
      : order_(order), table_(std::move(table)), inverse_(std::move(inverse)) {}

  int order_ = 0;
  std::vector<std::vector<int>> table_;    // table_[y][x] = y ▷ x
  std::vector<std::vector<int>> inverse_;  // inverse_[y][x] = s_x^{-1}(y)
};

/// All axiom flags for a validated structure, with the first lexicographically
/// smallest violating tuple recorded per failed axiom (empty vector = holds).
/// `risack` is the exchange axiom y▷z = (y▷x)▷(z▷x); `risandle_identity` is
/// the extra axiom x = (x▷x)▷((x▷x)▷x), checked independently so that the
/// equivalence of the two is testable rather than assumed.
struct AxiomReport {
  bool right_quasigroup = false;
  bool risack = false;
  bool risandle_identity = false;
  bool risandle = false;  // risack && risandle_identity, by definition
  bool rack = false;
  bool quandle = false;
  bool trivial_quandle = false;
  bool faithful = false;
  bool quasigroup = false;  // all left translations bijective

  std::vector<int> risack_witness;             // {x, y, z}
  std::vector<int> risandle_identity_witness;  // {x}
  std::vector<int> rack_witness;               // {x, y, z}
  std::vector<int> quandle_witness;            // {x}
  std::vector<int> trivial_quandle_witness;    // {x}
  std::vector<int> faithful_witness;           // {x1, x2}, x1 < x2
  std::vector<int> quasigroup_witness;         // {y, z1, z2}: y▷z1 = y▷z2
};

AxiomReport check_axioms(const RightQuasigroup& X);

/// {x : s_x = id}, ascending.
std::vector<int> right_identities(const RightQuasigroup& X);

/// True iff x ↦ s_x is injective.
bool is_faithful(const RightQuasigroup& X);

/// Subgroup of S_X generated by all right translations, by breadth-first
/// closure. For order 0 returns the trivial group on the empty set (degree 0).
PermGroup rmult_group(const RightQuasigroup& X);

/// Smallest subset containing `seeds` closed under (a, b) ↦ a ▷ b and
/// (a, b) ↦ a ▷⁻¹ b with both arguments drawn from the subset. Ascending.
std::vector<int> subrisandle_generated(const RightQuasigroup& X,
                                       const std::vector<int>& seeds);

/// Restriction of the table to `subset` (ascending element list), reindexed by
/// position. Throws Error("NotClosed") if the subset is not closed.
RightQuasigroup restrict_to(const RightQuasigroup& X, const std::vector<int>& subset);

/// Componentwise operation on pairs; pair (a, b) gets index a*|Y| + b.
RightQuasigroup direct_product(const RightQuasigroup& X, const RightQuasigroup& Y);

/// Bijection phi with phi(a ▷ b) = phi(a) ▷ phi(b), or nullopt. Backtracking
/// over images in index order, pruned by translation cycle types, faithfulness
/// and right-identity count. First solution in lexicographic order.
std::optional<std::vector<int>> find_isomorphism(const RightQuasigroup& X,
                                                 const RightQuasigroup& Y);

/// All homomorphisms X -> Y as image arrays, lexicographic order.
/// Backtracking over phi(0), phi(1), ... with partial consistency pruning.
std::vector<std::vector<int>> rq_homs(const RightQuasigroup& X,
                                      const RightQuasigroup& Y);

/// All homomorphisms X -> Y restricted to the images of a generating set:
/// every hom is determined by where the generators go, so this enumerates
/// image tuples of `generators` and extends each through the closure
/// structure of X. Requires subrisandle_generated(X, generators) == all of X.
/// Returns full image arrays, in lexicographic order of the generator tuple.
std::vector<std::vector<int>> rq_homs_via_generators(const RightQuasigroup& X,
                                                     const std::vector<int>& generators,
                                                     const RightQuasigroup& Y);

struct EnumerateOptions {
  bool up_to_iso = false;
  bool faithful_only = false;
  int max_order = 5;  // guard for the search space
};

/// All risandle tables of order n, by backtracking over the translation
/// assignment x ↦ s_x with the exchange axiom enforced incrementally.
/// Deterministic: results sorted by table; with up_to_iso, one lex-minimal
/// canonical representative per isomorphism class. Throws
/// Error("BoundExceeded") when n exceeds options.max_order.
std::vector<RightQuasigroup> enumerate_risandles(int n,
                                                 const EnumerateOptions& options = {});

/// Lexicographically minimal table over all relabelings of X.
std::vector<std::vector<int>> canonical_table(const RightQuasigroup& X);

/// The trivial quandle of order n (every translation is the identity).
RightQuasigroup trivial_quandle(int n);

/// JSON exchange format {"order": n, "table": [[...], ...]}; canonical key
/// order, so serialize(parse(s)) == s for canonical s.
std::string to_json(const RightQuasigroup& X);
RightQuasigroup rq_from_json(const std::string& text);

}  // namespace riskit
