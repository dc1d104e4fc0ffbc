#pragma once

#include <string>
#include <vector>

#include "riskit/presentation.hpp"
#include "riskit/rq.hpp"

namespace riskit {

/// One real crossing: the under-strand enters on arc `under_in`, passes under
/// arc `over` and leaves on arc `under_out`. The sign picks the relation the
/// crossing imposes on arc labels:
///   sign -1:  s_over(under_in) = under_out
///   sign +1:  s_over^{-1}(under_in) = under_out
/// Virtual crossings impose no relations and are not stored.
struct Crossing {
  int sign = -1;  // +1 or -1
  int over = 0;
  int under_in = 0;
  int under_out = 0;

  bool operator==(const Crossing&) const = default;
};

struct VirtualDiagram {
  int arc_count = 0;
  std::vector<Crossing> crossings;
  bool arc_count_override = false;

  /// Validates arc references and, unless overridden, that the number of arcs
  /// equals the number of real crossings. Throws Error named ArcOutOfRange or
  /// ArcCountMismatch.
  static VirtualDiagram make(int arc_count, std::vector<Crossing> crossings,
                             bool arc_count_override = false);

  bool operator==(const VirtualDiagram&) const = default;
};

/// Text format:
///   arcs: n
///   override: arc-count        (optional; disables the n-arcs check)
///   X sign=- over=0 in=1 out=2 (one line per real crossing)
///   V ...                      (virtual crossings; accepted and discarded)
/// Parse errors carry line and column in the message.
VirtualDiagram parse_diagram(const std::string& text);
std::string diagram_to_text(const VirtualDiagram& D);

/// The standard diagram of the lens space L(n,1): n arcs, n negative
/// crossings all passing under arc 0, imposing s_{x0}(x_i) = x_{i+1} mod n.
VirtualDiagram lens_diagram(int n);

/// One generator per arc, one relation per real crossing. With `eliminate`,
/// relations of the shape x_j = w (x_j not occurring in w) are substituted
/// away in deterministic scan order, yielding a smaller presentation of the
/// same quotient; for the lens diagram this leaves ⟨x | s_x^n(x) = x⟩.
RisandlePresentation fundamental_presentation(const VirtualDiagram& D,
                                              bool eliminate = false);

struct ColoringCount {
  long long count = 0;
  bool listed = false;
  std::vector<std::vector<int>> colorings;  // arc -> element, when listed
};

/// Exact number of colorings of D by the risandle R: assignments of R's
/// elements to arcs satisfying every crossing relation. Backtracking with
/// forced propagation through crossings. Throws Error("NotARisandle") if R
/// fails the risandle axioms, and Error("BudgetExceeded") when listing more
/// than list_budget colorings.
ColoringCount count_colorings(const VirtualDiagram& D, const RightQuasigroup& R,
                              bool list = false, long long list_budget = 10000);

}  // namespace riskit
