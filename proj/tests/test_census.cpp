#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "diamcount/census.hpp"
#include "diamcount/permutation.hpp"

using namespace diamcount;

namespace {

std::vector<PermutationPair> all_transitive_pairs(int r) {
  std::vector<PermutationPair> pairs;
  std::vector<int> a(r), b(r);
  std::iota(a.begin(), a.end(), 0);
  do {
    std::iota(b.begin(), b.end(), 0);
    do {
      Eigen::VectorXi e1(r), e2(r);
      for (int i = 0; i < r; ++i) {
        e1[i] = a[i];
        e2[i] = b[i];
      }
      PermutationPair pair{Permutation(std::move(e1)),
                           Permutation(std::move(e2))};
      if (pair.transitive()) pairs.push_back(std::move(pair));
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return pairs;
}

// Class count by explicit conjugation: try every relabeling fixing 0 in the
// test itself, independent of the library's BFS machinery.
int classes_by_explicit_conjugation(int r) {
  const std::vector<PermutationPair> pairs = all_transitive_pairs(r);

  std::vector<Permutation> relabelings;
  std::vector<int> tail(r - 1);
  std::iota(tail.begin(), tail.end(), 1);
  do {
    Eigen::VectorXi images(r);
    images[0] = 0;
    for (int i = 1; i < r; ++i) images[i] = tail[i - 1];
    relabelings.emplace_back(std::move(images));
  } while (std::next_permutation(tail.begin(), tail.end()));

  auto conjugate = [r](const Permutation& s, const Permutation& pi) {
    Eigen::VectorXi images(r);
    for (int i = 0; i < r; ++i) images[pi(i)] = pi(s(i));
    return Permutation(std::move(images));
  };

  std::vector<char> seen(pairs.size(), 0);
  int classes = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (const Permutation& pi : relabelings) {
      const Permutation c1 = conjugate(pairs[i].sigma1(), pi);
      const Permutation c2 = conjugate(pairs[i].sigma2(), pi);
      for (std::size_t j = i; j < pairs.size(); ++j) {
        if (!seen[j] && pairs[j].sigma1() == c1 && pairs[j].sigma2() == c2) {
          seen[j] = 1;
          break;
        }
      }
    }
  }
  return classes;
}

}  // namespace

TEST_CASE("recurrence values for the first degrees") {
  const std::vector<BigInt> counts = hall_subgroup_counts(6);
  REQUIRE(counts.size() == 6);
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 3);
  CHECK(counts[2] == 13);
  CHECK(counts[3] == 71);
  CHECK(counts[4] == 461);
  CHECK(counts[5] == 3447);
  CHECK(hall_subgroup_count(4) == 71);
  CHECK_THROWS_AS(hall_subgroup_counts(0), std::invalid_argument);
}

TEST_CASE("enumeration matches the recurrence and the index formula") {
  std::uint64_t fact = 1;  // (r-1)!
  for (int r = 1; r <= 5; ++r) {
    if (r > 1) fact *= static_cast<std::uint64_t>(r - 1);
    const CensusResult counts = enumerate_transitive_pairs(r);
    CHECK(BigInt(counts.equivalence_classes) == hall_subgroup_count(r));
    CHECK(counts.transitive_pairs == counts.equivalence_classes * fact);
  }
}

TEST_CASE("class counts agree with explicit conjugation orbits") {
  for (int r = 2; r <= 4; ++r) {
    const CensusResult counts = enumerate_transitive_pairs(r);
    CHECK(static_cast<int>(counts.equivalence_classes) ==
          classes_by_explicit_conjugation(r));
  }
}

TEST_CASE("transitive pair totals match a direct filter count") {
  for (int r = 2; r <= 4; ++r) {
    const CensusResult counts = enumerate_transitive_pairs(r);
    CHECK(counts.transitive_pairs == all_transitive_pairs(r).size());
  }
}

TEST_CASE("enumeration cutoff is enforced") {
  CHECK_THROWS_AS(enumerate_transitive_pairs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_transitive_pairs(kEnumerationCutoff + 1),
                  std::invalid_argument);
}
