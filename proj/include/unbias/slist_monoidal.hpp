#pragma once

// Strict symmetric monoidal structure on lists: concatenation and block swaps.

#include "unbias/slist.hpp"

namespace unbias {

template <class L>
SList<L> tensor_obj(const SList<L>& x, const SList<L>& y) {
  SList<L> r = x;
  r.insert(r.end(), y.begin(), y.end());
  return r;
}

template <class L>
SListHom<L> tensor_hom(const SListHom<L>& f, const SListHom<L>& g) {
  const std::size_t nf = f.dst().size();
  std::vector<std::size_t> img(nf + g.dst().size());
  for (std::size_t i = 0; i < nf; ++i) img[i] = f.phi()[i];
  for (std::size_t i = 0; i < g.dst().size(); ++i) img[nf + i] = f.src().size() + g.phi()[i];
  return SListHom<L>(tensor_obj(f.src(), g.src()), tensor_obj(f.dst(), g.dst()), Perm(std::move(img)));
}

// x ++ y -> y ++ x
template <class L>
SListHom<L> braiding(const SList<L>& x, const SList<L>& y) {
  std::vector<std::size_t> img(x.size() + y.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = i < y.size() ? i + x.size() : i - y.size();
  return SListHom<L>(tensor_obj(x, y), tensor_obj(y, x), Perm(std::move(img)));
}

namespace detail {

template <class L>
std::vector<std::size_t> braiding_positions(typename SList<L>::const_iterator first,
                                            typename SList<L>::const_iterator last, const SList<L>& y) {
  if (first == last) return {};
  // Braid the tail past y one slot to the right, then bubble the head through y.
  std::vector<std::size_t> ps = braiding_positions<L>(first + 1, last, y);
  for (std::size_t& p : ps) ++p;
  for (std::size_t i = 0; i < y.size(); ++i) ps.push_back(i);
  return ps;
}

}  // namespace detail

// The braiding assembled from single swaps by recursion on x.
template <class L>
GenWord<L> braiding_word(const SList<L>& x, const SList<L>& y) {
  return GenWord<L>{tensor_obj(x, y), detail::braiding_positions<L>(x.begin(), x.end(), y)};
}

template <class L>
SListHom<L> braiding_recursive(const SList<L>& x, const SList<L>& y) {
  return hom_from_word(braiding_word(x, y));
}

enum class Side { Left, Right };

template <class L>
std::size_t index_embed(const SList<L>& x, const SList<L>& y, Side side, std::size_t i) {
  if (side == Side::Left) {
    if (i >= x.size()) fail(Errc::IndexOutOfRange, "left index " + std::to_string(i));
    return i;
  }
  if (i >= y.size()) fail(Errc::IndexOutOfRange, "right index " + std::to_string(i));
  return x.size() + i;
}

}  // namespace unbias
