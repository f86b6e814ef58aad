#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace diamcount {

/// A bijection of {0, ..., r-1}, stored as its image vector.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(Eigen::VectorXi images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const Eigen::VectorXi& images() const { return images_; }

  Permutation inverse() const;

  bool operator==(const Permutation& other) const {
    return images_.size() == other.images_.size() && images_ == other.images_;
  }
  bool operator!=(const Permutation& other) const { return !(*this == other); }

 private:
  Eigen::VectorXi images_;
};

bool is_bijection(const Eigen::VectorXi& images);

/// Letters of the free group F2 = <a, b>.  Upper case denotes the inverse.
enum class Letter : std::uint8_t { A, AInv, B, BInv };

Letter inverse(Letter l);
char letter_char(Letter l);

/// A word over {a, a^-1, b, b^-1}.  Words are kept exactly as written; no
/// free reduction is ever applied, so length() matches the letter count.
class GeneratorWord {
 public:
  GeneratorWord() = default;
  explicit GeneratorWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  /// Parses the compact form "aAbB" (e.g. "aabba" = a a b b a).
  static GeneratorWord parse(std::string_view text);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  GeneratorWord& append(Letter l) {
    letters_.push_back(l);
    return *this;
  }
  GeneratorWord concat(const GeneratorWord& other) const;

  std::string str() const;

  bool operator==(const GeneratorWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// A pair of same-degree permutations (sigma1, sigma2).  Letter a acts by
/// sigma1 and letter b by sigma2; inverses are precomputed.  A transitive
/// pair encodes the index-r subgroup of F2 stabilizing the basepoint 0.
class PermutationPair {
 public:
  PermutationPair(Permutation sigma1, Permutation sigma2);

  int degree() const { return sigma1_.degree(); }
  const Permutation& sigma1() const { return sigma1_; }
  const Permutation& sigma2() const { return sigma2_; }
  const Permutation& sigma1_inverse() const { return sigma1_inv_; }
  const Permutation& sigma2_inverse() const { return sigma2_inv_; }

  bool transitive() const { return transitive_; }

  int apply(Letter l, int point) const {
    switch (l) {
      case Letter::A:
        return sigma1_(point);
      case Letter::AInv:
        return sigma1_inv_(point);
      case Letter::B:
        return sigma2_(point);
      default:
        return sigma2_inv_(point);
    }
  }

 private:
  Permutation sigma1_, sigma2_, sigma1_inv_, sigma2_inv_;
  bool transitive_ = false;
};

/// Image of `start` under the word action, letters applied left to right.
/// Throws std::out_of_range if start is not a point of the pair.
int apply_word(const PermutationPair& pair, const GeneratorWord& word,
               int start);

/// True iff the orbit of 0 under <sigma1, sigma2> is all of {0, ..., r-1}.
bool is_transitive(const PermutationPair& pair);

/// Coset index of a word: its image of the basepoint 0.  Returns 0 exactly
/// when the word lies in the stabilizer subgroup.  Requires a transitive
/// pair (throws std::invalid_argument otherwise).
int coset_of(const PermutationPair& pair, const GeneratorWord& word);

/// Whether some relabeling fixing 0 conjugates one pair to the other, i.e.
/// whether both pairs define the same stabilizer subgroup.  Decided by a
/// simultaneous labeled BFS from 0; a label conflict refutes equivalence.
/// Requires transitive pairs of equal degree.
bool pairs_equivalent(const PermutationPair& p1, const PermutationPair& p2);

/// The canonical representative of a pair's equivalence class: vertices are
/// relabeled by BFS discovery order from 0 (a-edges scanned before b-edges).
/// Two transitive pairs are equivalent iff their canonical forms are equal.
PermutationPair canonical_form(const PermutationPair& pair);

}  // namespace diamcount
