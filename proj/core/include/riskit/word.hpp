#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace riskit {

using WordId = std::int32_t;

/// Hash-consed store for words over a fixed generator alphabet. A word is
/// either a generator x_i or an application s_w1(w2) / s_w1^{-1}(w2); equal
/// trees always get the same WordId, so structural equality is id equality.
///
/// Arenas are value types (copy = deep copy, ids preserved); congruence
/// sessions take their own copy, so shared presentations stay immutable.
/// One arena per thread of control — the hash-cons table is mutable state.
class WordArena {
 public:
  explicit WordArena(int alphabet_size);

  int alphabet_size() const { return alphabet_size_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  /// Throws Error("EntryOutOfRange") for an index outside the alphabet.
  WordId generator(int index);

  /// power must be +1 (s_op applied to target) or -1 (its inverse).
  WordId apply(WordId op, WordId target, int power);

  /// s_op^k(target) for any integer k (k = 0 returns target).
  WordId power_apply(WordId op, WordId target, int k);

  bool is_generator(WordId w) const { return nodes_[w].gen >= 0; }
  int generator_index(WordId w) const { return nodes_[w].gen; }

  struct App {
    WordId op;
    WordId target;
    int power;
  };
  /// nullopt for generator nodes.
  std::optional<App> as_apply(WordId w) const;

  /// Text syntax: generators "x0", "x1", ...; applications "s[w1](w2)" and
  /// "si[w1](w2)" for the inverse. print/parse round-trip exactly.
  std::string print(WordId w) const;
  WordId parse(const std::string& text);

 private:
  struct Node {
    int gen;  // >= 0 for generator nodes, -1 for applications
    WordId op;
    WordId target;
    int power;
  };

  WordId intern(const Node& node);

  int alphabet_size_ = 0;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, std::vector<WordId>> index_;
};

/// A freely reduced word in the free group on e_0, e_1, ...; letters are
/// ±(i+1) as in GroupPresentation relators.
struct FreeGroupWord {
  std::vector<int> letters;

  static FreeGroupWord single(int generator_index);
  FreeGroupWord inverse() const;
  bool empty() const { return letters.empty(); }
  bool operator==(const FreeGroupWord&) const = default;
};

/// Concatenation with free reduction at the seam.
FreeGroupWord operator*(const FreeGroupWord& a, const FreeGroupWord& b);

/// The reduction of words into the free group: generators map to e_i, and
/// s_a(b) ↦ image(b) · image(a)^{-1}, s_a^{-1}(b) ↦ image(b) · image(a).
/// Constant on congruence classes, so unequal images prove words distinct.
FreeGroupWord free_group_image(const WordArena& arena, WordId w);

/// For a one-letter alphabet every word is congruent to a unique s_x^k(x);
/// returns that k. Uses the translation law s_{s_x^k(x)} = s_x^{1-k}.
long long one_gen_normal_form(const WordArena& arena, WordId w);

enum class Verdict { Equal, Distinct, Unknown };

struct EqualityVerdict {
  Verdict verdict = Verdict::Unknown;
  int depth_exhausted = 0;  // rounds run before giving up (Unknown only)

  bool equal() const { return verdict == Verdict::Equal; }
  bool distinct() const { return verdict == Verdict::Distinct; }
};

struct WordBudgets {
  int depth = 6;
  int max_nodes = 200000;
};

/// Ground congruence closure over a word arena: a union-find over word ids,
/// saturated round by round under
///   - congruence propagation: a ≡ a', b ≡ b'  ⇒  s_a^p(b) ≡ s_a'^p(b'),
///   - the inverse laws s_a^{-1}(s_a(b)) ≡ b ≡ s_a(s_a^{-1}(b)),
///   - the exchange law s_z(y) ≡ s_{s_x(z)}(s_x(y)), instantiated over all
///     class representatives (instance terms are created as needed),
/// plus any equations merged in by the caller. With `saturate_applications`
/// the universe is also closed under s_a^{±1}(b) for all representative
/// pairs, which is what quotient computation needs.
///
/// Merges are sound: congruent ids are genuinely congruent. Running more
/// rounds only adds merges (monotone).
class CongruenceClosure {
 public:
  explicit CongruenceClosure(WordArena arena);

  WordArena& arena() { return arena_; }
  const WordArena& arena() const { return arena_; }

  void merge(WordId a, WordId b);
  WordId find(WordId w);
  bool same(WordId a, WordId b) { return find(a) == find(b); }

  struct RunResult {
    int rounds = 0;
    bool stabilized = false;  // a full round changed nothing
    bool budget_hit = false;
  };
  RunResult run(int max_rounds, int max_nodes, bool saturate_applications);

  /// Current partition of all words in the arena. Classes are ordered by
  /// their smallest word id, members ascending.
  std::vector<std::vector<WordId>> classes();

 private:
  int representative_count();
  std::vector<WordId> representatives();
  bool propagate_congruence();
  bool apply_inverse_laws(int max_nodes);
  bool apply_exchange_law(int max_nodes, std::vector<WordId> const& reps);
  bool saturate(int max_nodes, std::vector<WordId> const& reps);
  void ensure_uf();

  WordArena arena_;
  std::vector<WordId> parent_;
  bool budget_hit_ = false;
};

/// One-shot closure: seeds and relation words live in `arena`; relations are
/// merged, `depth` rounds are run, and the resulting partition (over every
/// encountered word, including law instances) is returned. Exhausting the
/// depth or node budget is not an error — the partial partition is valid.
std::vector<std::vector<WordId>> rewrite_close(
    const WordArena& arena, const std::vector<WordId>& seeds,
    const std::vector<std::pair<WordId, WordId>>& relations, int depth,
    int max_nodes = 200000);

/// Sound partial equality test for words under optional relations.
///   Equal    — congruence closure merged the words within budget.
///   Distinct — free-group images differ, either absolutely (no relations)
///              or modulo the induced group presentation when coset
///              enumeration shows that group is finite.
///   Unknown  — neither route decided within budget.
EqualityVerdict words_equal(const WordArena& arena, WordId a, WordId b,
                            const std::vector<std::pair<WordId, WordId>>& relations,
                            const WordBudgets& budgets = {});

}  // namespace riskit
