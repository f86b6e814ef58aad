#pragma once

#include "diamcount/bigint.hpp"

#include <cstdint>
#include <vector>

namespace diamcount {

/// Exhaustive enumeration refuses degrees above this: the search space is
/// (r!)^2 pairs, about 2.5e7 at r = 7.
inline constexpr int kEnumerationCutoff = 7;

struct CensusResult {
  std::uint64_t transitive_pairs = 0;
  std::uint64_t equivalence_classes = 0;
};

/// Brute-force census of all permutation pairs of degree r: counts the
/// transitive ones and their classes under basepoint-fixing relabeling.
///
/// Classes are counted as canonical fixed points (pairs equal to their own
/// canonical_form); relabelings fixing 0 act freely on transitive pairs, so
/// transitive_pairs == equivalence_classes * (r-1)! always holds and is
/// verified (std::logic_error on violation).  Throws std::invalid_argument
/// for r < 1 or r > kEnumerationCutoff.
CensusResult enumerate_transitive_pairs(int r);

/// Number of index-r subgroups of F2 from the recurrence
///   a_n = n * n! - sum_{i=1}^{n-1} (n-i)! * a_i,   a_1 = 1,
/// evaluated in exact arbitrary-precision arithmetic.
BigInt hall_subgroup_count(int r);

/// All values a_1..a_max_r in one pass of the recurrence.
std::vector<BigInt> hall_subgroup_counts(int max_r);

}  // namespace diamcount
