#pragma once

// Lists of labels and the groupoid of label-preserving index permutations.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "unbias/error.hpp"
#include "unbias/perm.hpp"

namespace unbias {

template <class L>
using SList = std::vector<L>;

template <class L>
std::string label_text(const L& l) {
  std::ostringstream os;
  os << l;
  return os.str();
}

template <class L>
std::string to_string(const SList<L>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += label_text(xs[i]);
  }
  return out + "]";
}

// Invariant: src[phi[i]] == dst[i] for every i.
template <class L>
class SListHom {
 public:
  SListHom(SList<L> src, SList<L> dst, Perm phi) : src_(std::move(src)), dst_(std::move(dst)), phi_(std::move(phi)) {
    if (src_.size() != dst_.size() || phi_.size() != dst_.size())
      fail(Errc::InvalidHom, "length mismatch " + unbias::to_string(src_) + " -> " + unbias::to_string(dst_));
    for (std::size_t i = 0; i < dst_.size(); ++i)
      if (!(src_[phi_[i]] == dst_[i]))
        fail(Errc::InvalidHom, "label not preserved at index " + std::to_string(i));
  }

  static SListHom identity(const SList<L>& xs) { return SListHom(xs, xs, Perm::identity(xs.size())); }

  const SList<L>& src() const { return src_; }
  const SList<L>& dst() const { return dst_; }
  const Perm& phi() const { return phi_; }

  friend bool operator==(const SListHom&, const SListHom&) = default;

 private:
  SList<L> src_;
  SList<L> dst_;
  Perm phi_;
};

template <class L>
std::string to_string(const SListHom<L>& f) {
  return unbias::to_string(f.src()) + " -> " + unbias::to_string(f.dst()) + " phi=" + unbias::to_string(f.phi());
}

template <class L>
struct GenWord {
  SList<L> start;
  std::vector<std::size_t> positions;
};

template <class L>
class Multiset {
 public:
  void add(const L& l, std::size_t n = 1) {
    if (n) counts_[l] += n;
  }
  std::size_t count(const L& l) const {
    auto it = counts_.find(l);
    return it == counts_.end() ? 0 : it->second;
  }
  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& [l, c] : counts_) s += c;
    return s;
  }
  const std::map<L, std::size_t>& counts() const { return counts_; }

  Multiset& operator+=(const Multiset& o) {
    for (const auto& [l, c] : o.counts_) counts_[l] += c;
    return *this;
  }
  Multiset scaled(std::size_t n) const {
    Multiset r;
    for (const auto& [l, c] : counts_) r.add(l, c * n);
    return r;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::map<L, std::size_t> counts_;
};

template <class L>
std::string to_string(const Multiset<L>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [l, c] : m.counts()) {
    if (!first) out += ',';
    first = false;
    out += label_text(l) + ":" + std::to_string(c);
  }
  return out + "}";
}

template <class L>
Multiset<L> underlying_multiset(const SList<L>& xs) {
  Multiset<L> m;
  for (const L& l : xs) m.add(l);
  return m;
}

template <class L>
bool is_linear(const SList<L>& xs) {
  std::map<L, bool> seen;
  for (const L& l : xs)
    if (!seen.emplace(l, true).second) return false;
  return true;
}

template <class L>
SListHom<L> hom_from_word(const GenWord<L>& w) {
  SList<L> cur = w.start;
  for (std::size_t p : w.positions) {
    if (p + 1 >= cur.size())
      fail(Errc::PositionOutOfRange, "swap at " + std::to_string(p) + " in list of length " + std::to_string(cur.size()));
    std::swap(cur[p], cur[p + 1]);
  }
  return SListHom<L>(w.start, std::move(cur), word_to_perm(w.positions, w.start.size()));
}

template <class L>
GenWord<L> word_from_hom(const SListHom<L>& f) {
  return GenWord<L>{f.src(), reduced_word(f.phi())};
}

// Diagram order: f then g.
template <class L>
SListHom<L> compose(const SListHom<L>& f, const SListHom<L>& g) {
  if (!(f.dst() == g.src()))
    fail(Errc::SourceTargetMismatch, unbias::to_string(f.dst()) + " vs " + unbias::to_string(g.src()));
  return SListHom<L>(f.src(), g.dst(), f.phi() * g.phi());
}

template <class L>
SListHom<L> invert(const SListHom<L>& f) {
  return SListHom<L>(f.dst(), f.src(), f.phi().inverse());
}

template <class L>
bool hom_equal(const SListHom<L>& f, const SListHom<L>& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst()))
    fail(Errc::SourceTargetMismatch, "homs have different boundaries");
  return f.phi() == g.phi();
}

// The unique hom between permutation-equivalent lists when the source is linear.
template <class L>
SListHom<L> unique_hom_linear(const SList<L>& src, const SList<L>& dst) {
  if (!is_linear(src)) fail(Errc::NotLinear, unbias::to_string(src));
  if (!(underlying_multiset(src) == underlying_multiset(dst)))
    fail(Errc::NotPermutationEquivalent, unbias::to_string(src) + " vs " + unbias::to_string(dst));
  std::map<L, std::size_t> where;
  for (std::size_t i = 0; i < src.size(); ++i) where[src[i]] = i;
  std::vector<std::size_t> img(dst.size());
  for (std::size_t i = 0; i < dst.size(); ++i) img[i] = where.at(dst[i]);
  return SListHom<L>(src, dst, Perm(std::move(img)));
}

}  // namespace unbias
