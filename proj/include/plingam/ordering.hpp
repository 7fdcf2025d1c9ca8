#pragma once

#include <span>
#include <vector>

#include "plingam/types.hpp"

namespace plingam {

// Per-candidate exogeneity scores. Slot i holds the score of candidate
// variable i; non-candidate slots hold -infinity. Candidate scores are
// always <= 0 (each summand of the negated sum is a square).
struct KScores {
  std::vector<double> scores;
};

struct SearchResult {
  int chosen = -1;
  KScores scores;
};

// One round of the exogenous-variable search over candidate set U:
// score(i) = -sum_{j != i} min(0, diff_mutual_info(i, j))^2, inner sum over
// j in ascending index order; chosen is the argmax with ties broken toward
// the smallest index. Throws EmptyCandidates, InvalidIndex and
// ZeroVariance(col).
SearchResult search_causal_order(const DataMatrix& X, std::span<const int> U);

// Same values as search_causal_order, bit for bit, for every workers count.
// Candidates are distributed over `workers` threads; each thread computes
// its candidates' full inner sums sequentially and writes to exclusive
// score slots, so no synchronization or reduction reordering is involved.
SearchResult search_causal_order_parallel(const DataMatrix& X, std::span<const int> U,
                                          int workers);

// Least-squares residual of every `remaining` column against the exogenous
// column, column order preserved. Throws ZeroVariance(exog), InvalidIndex.
DataMatrix regress_out(const DataMatrix& X, int exog, std::span<const int> remaining);

// Full recursive ordering: d-1 rounds of search + regress_out, the last
// variable placed implicitly. parallel=true gives a bit-identical order.
CausalOrder causal_order(const DataMatrix& X, bool parallel = false, int workers = 1);

}  // namespace plingam
