#include "diamcount/family.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "diamcount/rng.hpp"

namespace diamcount {

namespace {

void check_degree(int r) {
  if (r < 5)
    throw std::invalid_argument("family: degree must be >= 5, got " +
                                std::to_string(r));
}

// Inputs not pinned by the mode, sorted ascending, and the matching set of
// available outputs ({0..r-1} minus the pinned images 2i).
struct FreePoints {
  std::vector<int> inputs;
  std::vector<int> outputs;
};

FreePoints free_points(const FamilySpec& spec) {
  const int r = spec.degree;
  std::vector<char> input_pinned(r, 0), output_taken(r, 0);
  for (int i : constrained_inputs(spec)) {
    input_pinned[i] = 1;
    output_taken[2 * i] = 1;
  }
  FreePoints fp;
  for (int i = 0; i < r; ++i) {
    if (!input_pinned[i]) fp.inputs.push_back(i);
    if (!output_taken[i]) fp.outputs.push_back(i);
  }
  return fp;
}

Permutation assemble_member(const FamilySpec& spec, const FreePoints& fp,
                            const std::vector<int>& free_images) {
  Eigen::VectorXi images(spec.degree);
  for (int i : constrained_inputs(spec)) images[i] = 2 * i;
  for (std::size_t j = 0; j < fp.inputs.size(); ++j)
    images[fp.inputs[j]] = free_images[j];
  return Permutation(std::move(images));
}

}  // namespace

std::vector<int> constrained_inputs(const FamilySpec& spec) {
  check_degree(spec.degree);
  std::vector<int> pinned;
  const int step = spec.mode == ConstraintMode::kEvenOnly ? 2 : 1;
  const int first = spec.mode == ConstraintMode::kEvenOnly ? 2 : 1;
  for (int i = first; 2 * i < spec.degree; i += step) pinned.push_back(i);
  return pinned;
}

Permutation sigma1(int r) {
  if (r < 1) throw std::invalid_argument("sigma1: r must be >= 1");
  Eigen::VectorXi images(r);
  for (int i = 0; i < r; ++i) images[i] = (i + 1) % r;
  return Permutation(std::move(images));
}

BigInt family_size(const FamilySpec& spec) {
  check_degree(spec.degree);
  const int m = static_cast<int>(constrained_inputs(spec).size());
  return factorial_big(static_cast<unsigned>(spec.degree - m));
}

std::vector<Permutation> family_members(const FamilySpec& spec,
                                        std::uint64_t budget,
                                        std::uint64_t seed) {
  check_degree(spec.degree);
  const FreePoints fp = free_points(spec);
  std::vector<Permutation> members;

  if (family_size(spec) <= budget) {
    // Exhaustive: next_permutation walks the free-image tuples in
    // lexicographic order, which is the documented enumeration order.
    std::vector<int> free_images = fp.outputs;  // already sorted
    do {
      members.push_back(assemble_member(spec, fp, free_images));
    } while (std::next_permutation(free_images.begin(), free_images.end()));
    return members;
  }

  Rng rng(seed);
  members.reserve(budget);
  for (std::uint64_t t = 0; t < budget; ++t) {
    std::vector<int> free_images = fp.outputs;
    rng.shuffle(free_images);
    members.push_back(assemble_member(spec, fp, free_images));
  }
  return members;
}

CosetRepPair coset_rep_word(int i, int r) {
  check_degree(r);
  if (i < 0 || 2 * i >= r)
    throw std::domain_error("coset_rep_word: need 0 <= i < r/2, got i=" +
                            std::to_string(i) + " r=" + std::to_string(r));

  GeneratorWord word;
  if (i >= 1) {
    const int k = std::bit_width(static_cast<unsigned>(i)) - 1;
    for (int t = k; t >= 0; --t) {
      if ((i >> t) & 1) {
        word.append(Letter::A);
        word.append(Letter::A);
      }
      if (t > 0) word.append(Letter::B);
    }
  }

  CosetRepPair pair;
  pair.even = CosetRepresentative{2 * i, word};
  if (2 * i + 1 < r) {
    GeneratorWord odd = word;
    odd.append(Letter::A);
    pair.odd = CosetRepresentative{2 * i + 1, std::move(odd)};
  }
  return pair;
}

RepVerification verify_representatives(const FamilySpec& spec,
                                       std::uint64_t samples,
                                       std::uint64_t seed) {
  const int r = spec.degree;
  check_degree(r);
  const Permutation s1 = sigma1(r);
  const std::vector<Permutation> members = family_members(spec, samples, seed);

  std::vector<CosetRepPair> reps;
  reps.reserve(static_cast<std::size_t>((r + 1) / 2));
  for (int i = 0; 2 * i < r; ++i) reps.push_back(coset_rep_word(i, r));

  RepVerification result;
  for (const Permutation& s2 : members) {
    const PermutationPair pair(s1, s2);
    for (int i = 0; 2 * i < r; ++i) {
      const CosetRepPair& rep = reps[i];
      ++result.words_checked;
      if (apply_word(pair, rep.even.word, 0) != rep.even.coset)
        ++result.violations;
      if (rep.odd) {
        ++result.words_checked;
        if (apply_word(pair, rep.odd->word, 0) != rep.odd->coset)
          ++result.violations;
      }
      int len = static_cast<int>(rep.even.word.length());
      if (rep.odd) len = std::max(len, static_cast<int>(rep.odd->word.length()));
      result.max_word_length = std::max(result.max_word_length, len);
      if (i >= 1 && len > 3.0 * (1.0 + std::log2(static_cast<double>(i))))
        ++result.violations;
    }
  }
  return result;
}

LowerBoundCount lower_bound_count(int r, std::uint64_t k) {
  check_degree(r);
  if (k < 1) throw std::invalid_argument("lower_bound_count: k must be >= 1");

  const unsigned top = static_cast<unsigned>(r / 2 + 1);
  LowerBoundCount out;
  out.exact = BigRat(factorial_big(top), BigInt(r) * BigInt(k));
  out.log_exact = log_big(out.exact);
  out.log_lgamma = std::lgamma(static_cast<double>(top) + 1.0) -
                   std::log(static_cast<double>(r)) -
                   std::log(static_cast<double>(k));
  return out;
}

}  // namespace diamcount
