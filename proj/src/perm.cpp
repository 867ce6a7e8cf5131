#include "unbias/perm.hpp"

#include <algorithm>
#include <sstream>

#include "unbias/error.hpp"

namespace unbias {

Perm::Perm(std::vector<std::size_t> img) : img_(std::move(img)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t v : img_) {
    if (v >= img_.size() || seen[v]) fail(Errc::InvalidPermutation, "not a bijection: " + to_string(*this));
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  Perm p;
  p.img_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.img_[i] = i;
  return p;
}

Perm Perm::transposition(std::size_t l, std::size_t n) {
  if (l + 1 >= n) fail(Errc::LetterOutOfRange, "letter " + std::to_string(l) + " in S_" + std::to_string(n));
  Perm p = identity(n);
  std::swap(p.img_[l], p.img_[l + 1]);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = i;
  return r;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) fail(Errc::InvalidPermutation, "size mismatch in composition");
  std::vector<std::size_t> img(p.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = p[q[i]];
  return Perm(std::move(img));
}

std::string to_string(const Perm& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << to_string(p); }

unsigned CoxeterMatrixA::entry(std::size_t i, std::size_t j) const {
  if (i == j) return 1;
  return (i > j ? i - j : j - i) == 1 ? 3 : 2;
}

Perm word_to_perm(const Word& w, std::size_t n) {
  // Right-multiplying by t_l swaps entries l and l+1 of the image vector.
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  for (std::size_t l : w) {
    if (l + 1 >= n) fail(Errc::LetterOutOfRange, "letter " + std::to_string(l) + " in S_" + std::to_string(n));
    std::swap(img[l], img[l + 1]);
  }
  return Perm(std::move(img));
}

std::size_t inversion_length(const Perm& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

Word reduced_word(const Perm& p) {
  std::vector<std::size_t> img = p.images();
  Word peeled;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < img.size() && img[i] < img[i + 1]) ++i;
    if (i + 1 >= img.size()) break;
    std::swap(img[i], img[i + 1]);
    peeled.push_back(i);
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

bool is_reduced(const Word& w, std::size_t n) { return inversion_length(word_to_perm(w, n)) == w.size(); }

std::size_t exchange_step(const Word& w, std::size_t b, std::size_t n) {
  if (!is_reduced(w, n)) fail(Errc::NotReduced, "word is not reduced");
  const Perm tb = Perm::transposition(b, n);
  const Perm target = tb * word_to_perm(w, n);
  if (inversion_length(target) > w.size()) fail(Errc::NoReductionPossible, "b . w is reduced");
  // t_b * P = P * (swap of the positions holding b and b+1 in P), so letter i can be
  // erased exactly when those positions are w[i], w[i]+1 after the first i letters.
  std::size_t x = b, y = b + 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t l = w[i];
    if (std::min(x, y) == l && std::max(x, y) == l + 1) return i;
    auto moved = [l](std::size_t p) { return p == l ? l + 1 : p == l + 1 ? l : p; };
    x = moved(x);
    y = moved(y);
  }
  fail(Errc::NoSuchIndex, "no erasable index");
}

}  // namespace unbias
