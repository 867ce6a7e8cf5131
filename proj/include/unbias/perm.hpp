#pragma once

// Permutations of {0..n-1} and reduced words in the adjacent transpositions.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace unbias {

// A word in the letters t_0..t_{n-2}; letter l stands for the swap of l and l+1.
using Word = std::vector<std::size_t>;

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::size_t> img);  // throws InvalidPermutation

  static Perm identity(std::size_t n);
  static Perm transposition(std::size_t l, std::size_t n);

  std::size_t size() const { return img_.size(); }
  std::size_t operator[](std::size_t i) const { return img_[i]; }
  const std::vector<std::size_t>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::size_t> img_;
};

// (p * q)[i] = p[q[i]]
Perm operator*(const Perm& p, const Perm& q);

std::string to_string(const Perm& p);
std::ostream& operator<<(std::ostream& os, const Perm& p);

// Rank n-1 Coxeter matrix of type A.
struct CoxeterMatrixA {
  std::size_t rank;
  unsigned entry(std::size_t i, std::size_t j) const;
};

// t_{w_1} * ... * t_{w_m} in S_n
Perm word_to_perm(const Word& w, std::size_t n);
std::size_t inversion_length(const Perm& p);
// Repeatedly peels the leftmost descent off the right end.
Word reduced_word(const Perm& p);
bool is_reduced(const Word& w, std::size_t n);
// Least index i with [b] ++ w equal to w with position i erased.
std::size_t exchange_step(const Word& w, std::size_t b, std::size_t n);

}  // namespace unbias
