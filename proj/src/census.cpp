#include "diamcount/census.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace diamcount {

namespace {

// Orbit of 0 under forward edges, as a bitmask walk.  Valid for r <= 32.
bool transitive_small(const int* s1, const int* s2, int r) {
  std::uint32_t visited = 1;
  std::array<int, 32> stack;
  int top = 0;
  stack[top++] = 0;
  int count = 1;
  while (top > 0) {
    const int u = stack[--top];
    const int v1 = s1[u];
    if (!((visited >> v1) & 1)) {
      visited |= std::uint32_t{1} << v1;
      ++count;
      stack[top++] = v1;
    }
    const int v2 = s2[u];
    if (!((visited >> v2) & 1)) {
      visited |= std::uint32_t{1} << v2;
      ++count;
      stack[top++] = v2;
    }
  }
  return count == r;
}

// A transitive pair is the canonical representative of its class iff the
// BFS from 0 (a-edge before b-edge) discovers vertices in increasing order,
// i.e. the relabeling it induces is the identity.  Relabelings fixing 0 act
// freely on transitive pairs, so counting these fixed points counts classes.
bool is_canonical(const int* s1, const int* s2, int r) {
  std::uint32_t seen = 1;
  int discovered = 1;
  for (int u = 0; u < r; ++u) {
    for (const int v : {s1[u], s2[u]}) {
      if ((seen >> v) & 1) continue;
      if (v != discovered) return false;
      seen |= std::uint32_t{1} << v;
      ++discovered;
    }
  }
  return discovered == r;
}

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

CensusResult enumerate_transitive_pairs(int r) {
  if (r < 1)
    throw std::invalid_argument("enumerate_transitive_pairs: degree must be >= 1");
  if (r > kEnumerationCutoff)
    throw std::invalid_argument(
        "enumerate_transitive_pairs: degree exceeds the enumeration cutoff (" +
        std::to_string(kEnumerationCutoff) + "); the (r!)^2 search space is too large");

  std::vector<int> s1(r), s2(r);
  CensusResult result;
  std::iota(s1.begin(), s1.end(), 0);
  do {
    std::iota(s2.begin(), s2.end(), 0);
    do {
      if (!transitive_small(s1.data(), s2.data(), r)) continue;
      ++result.transitive_pairs;
      if (is_canonical(s1.data(), s2.data(), r)) ++result.equivalence_classes;
    } while (std::next_permutation(s2.begin(), s2.end()));
  } while (std::next_permutation(s1.begin(), s1.end()));

  if (result.transitive_pairs !=
      result.equivalence_classes * factorial_u64(r - 1))
    throw std::logic_error(
        "enumerate_transitive_pairs: transitive count is not classes * (r-1)!");
  return result;
}

std::vector<BigInt> hall_subgroup_counts(int max_r) {
  if (max_r < 1)
    throw std::invalid_argument("hall_subgroup_counts: max_r must be >= 1");
  std::vector<BigInt> fact(max_r + 1);
  fact[0] = 1;
  for (int i = 1; i <= max_r; ++i) fact[i] = fact[i - 1] * i;

  std::vector<BigInt> a(max_r + 1);
  a[1] = 1;
  for (int n = 2; n <= max_r; ++n) {
    BigInt sum = 0;
    for (int i = 1; i < n; ++i) sum += fact[n - i] * a[i];
    a[n] = n * fact[n] - sum;
  }
  a.erase(a.begin());
  return a;
}

BigInt hall_subgroup_count(int r) { return hall_subgroup_counts(r).back(); }

}  // namespace diamcount
