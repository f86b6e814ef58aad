#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diamcount/bigint.hpp"
#include "diamcount/permutation.hpp"

namespace diamcount {

// Which inputs of sigma2 are pinned to the doubling map i -> 2i.
// kEvenOnly pins even i with 0 < i < r/2; kAllBelowHalf pins every integer
// in that range.  The two differ in family size but every representative
// word below is valid under both, because the words only ever feed even
// values to the b letter.
enum class ConstraintMode { kEvenOnly, kAllBelowHalf };

struct FamilySpec {
  int degree = 0;  // r, must be >= 5
  ConstraintMode mode = ConstraintMode::kAllBelowHalf;
};

/// The pinned inputs of the mode, sorted ascending.
std::vector<int> constrained_inputs(const FamilySpec& spec);

/// The r-cycle i -> i+1 mod r.  Throws invalid_argument for r < 1.
Permutation sigma1(int r);

/// Exact number of permutations satisfying the mode's constraints:
/// (r - m)! with m = |constrained_inputs|.  Equals (floor(r/2)+1)! for
/// kAllBelowHalf at even r.
BigInt family_size(const FamilySpec& spec);

/// Members of the constrained family as full degree-r permutations.
/// If family_size(spec) <= budget: the whole family, in lexicographic order
/// of the free-point assignment (sigma(f0), sigma(f1), ...) with f0 < f1 < ...
/// the free inputs.  Otherwise: `budget` members, each an independently drawn
/// uniform bijection from free inputs to free outputs (deterministic in seed).
std::vector<Permutation> family_members(const FamilySpec& spec,
                                        std::uint64_t budget,
                                        std::uint64_t seed);

struct CosetRepresentative {
  int coset = 0;        // where the word lands, starting from 0
  GeneratorWord word;   // uniform across the whole family
};

// Representatives for cosets 2i (always) and 2i+1 (absent only for odd r at
// i = (r-1)/2, where 2i+1 == r is not a coset).
struct CosetRepPair {
  CosetRepresentative even;
  std::optional<CosetRepresentative> odd;
};

/// The binary-expansion word a^{2d_k} b a^{2d_{k-1}} b ... b a^{2d_0} for the
/// digits d_k...d_0 of i (empty word for i = 0), which lands on coset 2i under
/// (sigma1(r), sigma2) for EVERY sigma2 in the family: each value fed to b is
/// even and strictly between 0 and r/2, so only pinned inputs are used.  The
/// odd variant appends one a.  Word length is 2*(digit sum) + k.
/// Throws domain_error if i >= r/2 (the doubling would escape the pinned
/// range mid-word) or i < 0; invalid_argument for r < 5.
CosetRepPair coset_rep_word(int i, int r);

struct RepVerification {
  std::uint64_t words_checked = 0;  // (coset, member) evaluations, odd included
  std::uint64_t violations = 0;     // wrong landings or length-bound breaches
  int max_word_length = 0;
};

/// Evaluates every coset_rep_word(i, r), 0 <= i < r/2, against `samples`
/// family members (drawn via family_members) and checks landing cosets and,
/// for i >= 1, the length bound  length <= 3(1 + log2 i).
RepVerification verify_representatives(const FamilySpec& spec,
                                       std::uint64_t samples,
                                       std::uint64_t seed);

struct LowerBoundCount {
  BigRat exact;       // (floor(r/2)+1)! / (r*k)
  double log_exact;   // ln(exact), computed from the big rational
  double log_lgamma;  // ln(exact) via lgamma, the floating-point route
};

/// The count lower bound (floor(r/2)+1)!/(r*k) with k the conjugacy-cap
/// parameter.  Both log routes are exposed so they can be cross-checked.
LowerBoundCount lower_bound_count(int r, std::uint64_t k);

}  // namespace diamcount
