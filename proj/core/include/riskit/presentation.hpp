#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "riskit/group.hpp"
#include "riskit/rq.hpp"
#include "riskit/word.hpp"

namespace riskit {

/// Generators plus word-pair relations; the presented risandle is the free
/// risandle on the generators modulo the congruence the relations generate.
struct RisandlePresentation {
  int generator_count = 0;
  std::shared_ptr<WordArena> arena;  // owns the relation words
  std::vector<std::pair<WordId, WordId>> relations;

  static RisandlePresentation make(int generator_count,
                                   std::vector<std::pair<WordId, WordId>> relations,
                                   std::shared_ptr<WordArena> arena);

  /// ⟨x | s_x^n(x) = x⟩, the presentation of the order-n lens space quotient.
  static RisandlePresentation lens(int n);

  /// File format: line "gens: n", then one relation per line "lhs = rhs" in
  /// the word text syntax.
  std::string to_text() const;
  static RisandlePresentation from_text(const std::string& text);
};

/// The group presented on the same generators with one relator per relation:
/// image(lhs) · image(rhs)^{-1} under the free-group reduction, freely and
/// cyclically reduced. Relations whose relator cancels away are dropped.
GroupPresentation induced_group_presentation(const RisandlePresentation& P);

struct QuotientBudgets {
  int depth = 12;        // congruence saturation rounds
  int max_words = 50000;  // word arena node budget
  int max_cosets = 10000;  // coset budget for the group cross-check
};

enum class QuotientStatus { Finite, Unknown };

/// Outcome of running the group-side cross-check next to the word-side
/// computation. `compared` is false when the group route did not finish or
/// the word route returned Unknown.
struct MethodAgreement {
  bool group_route_finished = false;
  int group_route_order = 0;  // order of the sub-risandle the group route builds
  bool compared = false;
  bool isomorphic = false;
};

struct QuotientResult {
  QuotientStatus status = QuotientStatus::Unknown;
  RightQuasigroup structure;        // order 0 unless Finite
  std::vector<int> generator_images;  // element of `structure` per generator
  MethodAgreement method_agreement;

  bool finite() const { return status == QuotientStatus::Finite; }
};

/// Computes the presented risandle when it is finite.
///
/// Route A (authoritative): ground congruence closure over the word universe
/// generated by the generators, saturated under both operations until the
/// class set is closed and stable; the induced class table is the quotient.
/// Route B (cross-check): coset enumeration on the induced group
/// presentation; if that group G is finite, the sub-risandle of R(G)
/// generated by the generator images is compared with Route A up to
/// isomorphism. Route A's answer is always the one returned; disagreement is
/// surfaced in method_agreement, not resolved silently (the group route can
/// collapse unfaithful quotients).
QuotientResult finite_quotient(const RisandlePresentation& P,
                               const QuotientBudgets& budgets = {});

/// The three equivalent ways a finite quotient can match a candidate
/// fundamental group, evaluated separately:
///   risandle_isomorphic        — quotient ≅ R(pi1) as risandles,
///   rmult_isomorphic           — RMult(quotient) ≅ pi1,
///   presented_group_isomorphic — the group the presentation induces ≅ pi1
///                                (via the translation group when the
///                                quotient is faithful, else via coset
///                                enumeration on the induced presentation).
struct Pi1Correspondence {
  bool quotient_faithful = false;
  int quotient_order = 0;
  bool risandle_isomorphic = false;
  bool rmult_isomorphic = false;
  bool presented_group_isomorphic = false;
  std::string presented_group_method;  // "translation-group" or "coset-enumeration"
};

/// Throws Error("QuotientNotFinite") when the quotient cannot be computed
/// within budget.
Pi1Correspondence pi1_correspondence(const RisandlePresentation& P,
                                     const FiniteGroup& pi1,
                                     const QuotientBudgets& budgets = {});

}  // namespace riskit
