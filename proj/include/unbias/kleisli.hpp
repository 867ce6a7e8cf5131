#pragma once

// The Kleisli bicategory of the free symmetric monoidal category monad on
// finite sets: a 1-cell I ~> K is an I-indexed family of lists over K, and a
// 2-cell is an indexed family of list homs. Composition substitutes lists and
// is strictly associative and unital.

#include <functional>
#include <string>
#include <vector>

#include "unbias/free_smc.hpp"

namespace unbias {

using NList = SList<std::size_t>;
using NHom = SListHom<std::size_t>;

struct KHom {
  std::size_t src;
  std::size_t dst;
  std::vector<NList> lists;

  KHom(std::size_t src, std::size_t dst, std::vector<NList> lists);  // throws LabelOutOfRange

  friend bool operator==(const KHom&, const KHom&) = default;
};

std::string to_string(const KHom& f);

struct KCell {
  KHom src;
  KHom dst;
  std::vector<NHom> homs;

  KCell(KHom src, KHom dst, std::vector<NHom> homs);  // throws BoundaryMismatch

  friend bool operator==(const KCell&, const KCell&) = default;
};

// Concatenation of g's lists along xs.
NList theta_apply(const KHom& g, const NList& xs);
// Block permutation of theta_apply(g, f.src) onto theta_apply(g, f.dst).
NHom theta_apply_hom(const KHom& g, const NHom& f);
// Block-diagonal hom theta_apply(psi.src, xs) -> theta_apply(psi.dst, xs).
NHom theta_whisker(const KCell& psi, const NList& xs);

KHom k_id(std::size_t n);
// f : I ~> J then g : J ~> K
KHom k_compose(const KHom& f, const KHom& g);

KCell k_id_cell(const KHom& f);
KCell k_vcomp(const KCell& a, const KCell& b);
// (f;g) => (f';g') for phi : f => f' and psi : g => g'
KCell k_hcomp(const KCell& phi, const KCell& psi);
KCell k_invert(const KCell& c);
// The componentwise unique cell between linear families.
KCell k_unique_cell(const KHom& src, const KHom& dst);

Multiset<std::size_t> composite_multiset(const KHom& f, const KHom& g, std::size_t j);

// k ~> lists of j repeated once per occurrence of k in X(j), j ascending.
KHom duality(const KHom& x);
KCell duality_cell(const KCell& eta);

// ---------------------------------------------------------------------------
// Families of objects and lax monoidal functors.

template <SmcModel C, SmcModel D>
struct LaxFunctor {
  std::function<typename D::Obj(const typename C::Obj&)> obj;
  std::function<typename D::Mor(const typename C::Mor&)> mor;
  // I -> F(I)
  typename D::Mor unit_cmp;
  // F(x) * F(y) -> F(x * y)
  std::function<typename D::Mor(const typename C::Obj&, const typename C::Obj&)> tensor_cmp;
};

// Checks associativity, unitality and symmetry of the comparison maps on the
// given objects; throws LaxLawViolation.
template <SmcModel C, SmcModel D>
void check_lax_laws(const LaxFunctor<C, D>& F, const C& c, const D& d, const std::vector<typename C::Obj>& objs) {
  auto fo = F.obj;
  auto mu = F.tensor_cmp;
  for (const auto& x : objs) {
    auto lhs = d.compose(d.compose(d.tensor_mor(F.unit_cmp, d.id(fo(x))), mu(c.unit(), x)), F.mor(c.left_unitor(x)));
    if (!d.equal(lhs, d.left_unitor(fo(x)))) fail(Errc::LaxLawViolation, "left unit");
    auto rhs = d.compose(d.compose(d.tensor_mor(d.id(fo(x)), F.unit_cmp), mu(x, c.unit())), F.mor(c.right_unitor(x)));
    if (!d.equal(rhs, d.right_unitor(fo(x)))) fail(Errc::LaxLawViolation, "right unit");
    for (const auto& y : objs) {
      auto s1 = d.compose(mu(x, y), F.mor(c.braid(x, y)));
      auto s2 = d.compose(d.braid(fo(x), fo(y)), mu(y, x));
      if (!d.equal(s1, s2)) fail(Errc::LaxLawViolation, "symmetry");
      for (const auto& z : objs) {
        auto a1 = d.compose(d.compose(d.tensor_mor(mu(x, y), d.id(fo(z))), mu(c.tensor(x, y), z)),
                            F.mor(c.assoc(x, y, z)));
        auto a2 = d.compose(d.compose(d.assoc(fo(x), fo(y), fo(z)), d.tensor_mor(d.id(fo(x)), mu(y, z))),
                            mu(x, c.tensor(y, z)));
        if (!d.equal(a1, a2)) fail(Errc::LaxLawViolation, "associativity");
      }
    }
  }
}

template <SmcModel C, SmcModel D>
std::vector<typename D::Obj> map_family(const LaxFunctor<C, D>& F, const C& c, const D& d,
                                        const std::vector<typename C::Obj>& x) {
  check_lax_laws(F, c, d, x);
  std::vector<typename D::Obj> out;
  out.reserve(x.size());
  for (const auto& o : x) out.push_back(F.obj(o));
  return out;
}

template <SmcModel M>
PsiExtension<M, std::size_t> family_extension(const M& m, const std::vector<typename M::Obj>& x) {
  return PsiExtension<M, std::size_t>(m, [x](const std::size_t& k) {
    if (k >= x.size()) fail(Errc::UnassignedLabel, "index " + std::to_string(k));
    return x[k];
  });
}

// Per source index j: Psi_{F x}(f(j)) -> F(Psi_x(f(j))).
template <SmcModel C, SmcModel D>
std::vector<typename D::Mor> naturality_cell(const LaxFunctor<C, D>& F, const C& c, const D& d, const KHom& f,
                                             const std::vector<typename C::Obj>& x) {
  if (x.size() != f.dst) fail(Errc::BoundaryMismatch, "family is not indexed by the target of f");
  auto psi_c = family_extension(c, x);
  auto psi_d = family_extension(d, map_family(F, c, d, x));
  std::vector<typename D::Mor> out;
  for (const NList& xs : f.lists) {
    typename D::Mor acc = F.unit_cmp;
    for (std::size_t i = xs.size(); i-- > 0;) {
      NList tail(xs.begin() + static_cast<std::ptrdiff_t>(i) + 1, xs.end());
      acc = d.compose(d.tensor_mor(d.id(F.obj(x[xs[i]])), acc), F.tensor_cmp(x[xs[i]], psi_c.obj(tail)));
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace unbias
