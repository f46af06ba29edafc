#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

#include "ted/graph.hpp"

namespace ted {

/// Trace of color refinement. rounds[0] is the initial coloring;
/// stable_round is the first t whose partition equals round t+1's, so the
/// trace holds stable_round + 2 colorings and stable() == rounds[stable_round].
struct RefinementTrace {
  std::vector<Coloring> rounds;
  int stable_round = 0;

  const Coloring& stable() const { return rounds[stable_round]; }
};

/// Standard color refinement: color'(v) = id of (color(v), sorted multiset of
/// neighbor colors), iterated until the induced partition stops refining.
/// Ids are dense, assigned in order of first appearance per round.
RefinementTrace wl_refine(const Graph& g, const Coloring& c0);

/// Refines the disjoint union of g and h with a shared color table so the
/// resulting ids are comparable across the two graphs.
std::pair<Coloring, Coloring> wl_refine_joint(const Graph& g, const Graph& h,
                                              const Coloring& c0g, const Coloring& c0h);

/// True iff the jointly refined stable colorings (uniform start) have
/// different histograms, or the node counts differ. False never certifies
/// isomorphism; true certifies non-isomorphism.
bool wl_distinguish(const Graph& g, const Graph& h);
bool wl_distinguish(const Graph& g, const Graph& h,
                    const Coloring& c0g, const Coloring& c0h);

/// Literal summation variant: X_0 = 1 and X_n(v) = sum of X_{n-1}(u) over
/// neighbors u. Weaker than wl_refine (the sum is not injective on multisets)
/// and its partitions need not stabilize, so it runs a fixed round budget.
/// Kept for comparison behind the CLI --variant flag.
struct SumTrace {
  std::vector<std::vector<boost::multiprecision::cpp_int>> rounds;
};

SumTrace wl_sum_rounds(const Graph& g, int rounds);

bool wl_sum_distinguish(const Graph& g, const Graph& h, int rounds);

/// True iff every color class has a single degree value; second member lists
/// the violating color ids.
struct DegreeAssumptionCheck {
  bool ok = true;
  std::vector<int> violations;
};

DegreeAssumptionCheck check_degree_assumption(const Graph& g, const Coloring& c);

}  // namespace ted
