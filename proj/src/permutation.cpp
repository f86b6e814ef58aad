#include "diamcount/permutation.hpp"

#include <stdexcept>
#include <utility>

namespace diamcount {

bool is_bijection(const Eigen::VectorXi& images) {
  const int r = static_cast<int>(images.size());
  std::vector<bool> seen(r, false);
  for (int i = 0; i < r; ++i) {
    const int v = images[i];
    if (v < 0 || v >= r || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation::Permutation(Eigen::VectorXi images) : images_(std::move(images)) {
  if (!is_bijection(images_))
    throw std::invalid_argument("Permutation: images are not a bijection");
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
  return Permutation(Eigen::VectorXi::LinSpaced(degree, 0, degree - 1));
}

Permutation Permutation::inverse() const {
  Eigen::VectorXi inv(images_.size());
  for (int i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Letter inverse(Letter l) {
  switch (l) {
    case Letter::A:
      return Letter::AInv;
    case Letter::AInv:
      return Letter::A;
    case Letter::B:
      return Letter::BInv;
    default:
      return Letter::B;
  }
}

char letter_char(Letter l) {
  switch (l) {
    case Letter::A:
      return 'a';
    case Letter::AInv:
      return 'A';
    case Letter::B:
      return 'b';
    default:
      return 'B';
  }
}

GeneratorWord GeneratorWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a':
        letters.push_back(Letter::A);
        break;
      case 'A':
        letters.push_back(Letter::AInv);
        break;
      case 'b':
        letters.push_back(Letter::B);
        break;
      case 'B':
        letters.push_back(Letter::BInv);
        break;
      case ' ':
        break;
      default:
        throw std::invalid_argument("GeneratorWord: unknown letter in input");
    }
  }
  return GeneratorWord(std::move(letters));
}

GeneratorWord GeneratorWord::concat(const GeneratorWord& other) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return GeneratorWord(std::move(letters));
}

std::string GeneratorWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(letter_char(l));
  return s;
}

namespace {

// Orbit of 0 under forward a/b edges.  The generated group is finite, so the
// forward semigroup orbit equals the full group orbit.
int orbit_size_of_zero(const Permutation& s1, const Permutation& s2) {
  const int r = s1.degree();
  if (r == 0) return 0;
  std::vector<bool> visited(r, false);
  std::vector<int> stack;
  stack.reserve(r);
  visited[0] = true;
  stack.push_back(0);
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const Permutation* s : {&s1, &s2}) {
      const int v = (*s)(u);
      if (!visited[v]) {
        visited[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

PermutationPair::PermutationPair(Permutation sigma1, Permutation sigma2)
    : sigma1_(std::move(sigma1)), sigma2_(std::move(sigma2)) {
  if (sigma1_.degree() != sigma2_.degree())
    throw std::invalid_argument("PermutationPair: degree mismatch");
  sigma1_inv_ = sigma1_.inverse();
  sigma2_inv_ = sigma2_.inverse();
  transitive_ = orbit_size_of_zero(sigma1_, sigma2_) == degree();
}

int apply_word(const PermutationPair& pair, const GeneratorWord& word,
               int start) {
  if (start < 0 || start >= pair.degree())
    throw std::out_of_range("apply_word: start point out of range");
  int p = start;
  for (Letter l : word.letters()) p = pair.apply(l, p);
  return p;
}

bool is_transitive(const PermutationPair& pair) { return pair.transitive(); }

int coset_of(const PermutationPair& pair, const GeneratorWord& word) {
  if (!pair.transitive())
    throw std::invalid_argument("coset_of: pair is not transitive");
  return apply_word(pair, word, 0);
}

bool pairs_equivalent(const PermutationPair& p1, const PermutationPair& p2) {
  if (p1.degree() != p2.degree())
    throw std::invalid_argument("pairs_equivalent: degree mismatch");
  if (!p1.transitive() || !p2.transitive())
    throw std::invalid_argument("pairs_equivalent: pairs must be transitive");
  const int r = p1.degree();

  // pi(w . 0 under p1) := w . 0 under p2, built breadth-first.  Every
  // forward edge of p1 is checked once, which covers all conjugacy
  // constraints; surjectivity follows from transitivity of p2.
  std::vector<int> pi(r, -1);
  std::vector<int> queue;
  queue.reserve(r);
  pi[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    const int pu = pi[u];
    for (Letter l : {Letter::A, Letter::B}) {
      const int v = p1.apply(l, u);
      const int pv = p2.apply(l, pu);
      if (pi[v] < 0) {
        pi[v] = pv;
        queue.push_back(v);
      } else if (pi[v] != pv) {
        return false;
      }
    }
  }
  return true;
}

PermutationPair canonical_form(const PermutationPair& pair) {
  if (!pair.transitive())
    throw std::invalid_argument("canonical_form: pair is not transitive");
  const int r = pair.degree();

  std::vector<int> label(r, -1);
  std::vector<int> order;
  order.reserve(r);
  label[0] = 0;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int u = order[head];
    for (Letter l : {Letter::A, Letter::B}) {
      const int v = pair.apply(l, u);
      if (label[v] < 0) {
        label[v] = static_cast<int>(order.size());
        order.push_back(v);
      }
    }
  }

  Eigen::VectorXi s1(r), s2(r);
  for (int u = 0; u < r; ++u) {
    s1[label[u]] = label[pair.sigma1()(u)];
    s2[label[u]] = label[pair.sigma2()(u)];
  }
  return PermutationPair(Permutation(std::move(s1)), Permutation(std::move(s2)));
}

}  // namespace diamcount
