#pragma once

// Terms of the free symmetric monoidal category, models, and the unbiased
// extension of an assignment along lists.

#include <concepts>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unbias/slist_monoidal.hpp"

namespace unbias {

class ObjTerm {
 public:
  enum class Kind { Unit, Gen, Tensor };

  static ObjTerm unit();
  static ObjTerm gen(std::string label);
  static ObjTerm tensor(ObjTerm x, ObjTerm y);

  Kind kind() const;
  const std::string& label() const;
  const ObjTerm& left() const;
  const ObjTerm& right() const;
  std::size_t size() const;

  friend bool operator==(const ObjTerm& a, const ObjTerm& b);

 private:
  struct Node;
  explicit ObjTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class MorTerm {
 public:
  enum class Kind { Id, Comp, Tensor, Assoc, LeftUnitor, RightUnitor, Braid, Inv };

  static MorTerm id(ObjTerm x);
  // Diagram order: f then g.
  static MorTerm comp(MorTerm f, MorTerm g);
  static MorTerm tensor(MorTerm f, MorTerm g);
  // (x*y)*z -> x*(y*z)
  static MorTerm assoc(ObjTerm x, ObjTerm y, ObjTerm z);
  // I*x -> x
  static MorTerm left_unitor(ObjTerm x);
  // x*I -> x
  static MorTerm right_unitor(ObjTerm x);
  // x*y -> y*x
  static MorTerm braid(ObjTerm x, ObjTerm y);
  static MorTerm inv(MorTerm f);

  Kind kind() const;
  // Object arguments of the structural constructors, in order.
  const std::vector<ObjTerm>& objs() const;
  // Morphism arguments of Comp, Tensor and Inv.
  const std::vector<MorTerm>& args() const;
  std::size_t size() const;

  friend bool operator==(const MorTerm& a, const MorTerm& b);

 private:
  struct Node;
  explicit MorTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Boundary {
  ObjTerm src;
  ObjTerm dst;
};

Boundary type_of(const MorTerm& t);  // throws IllTyped

// ---------------------------------------------------------------------------
// Models

template <class M>
concept SmcModel = requires(const M& m, const typename M::Obj& x, const typename M::Mor& f) {
  { m.unit() } -> std::convertible_to<typename M::Obj>;
  { m.tensor(x, x) } -> std::convertible_to<typename M::Obj>;
  { m.id(x) } -> std::convertible_to<typename M::Mor>;
  { m.compose(f, f) } -> std::convertible_to<typename M::Mor>;
  { m.tensor_mor(f, f) } -> std::convertible_to<typename M::Mor>;
  { m.assoc(x, x, x) } -> std::convertible_to<typename M::Mor>;
  { m.assoc_inv(x, x, x) } -> std::convertible_to<typename M::Mor>;
  { m.left_unitor(x) } -> std::convertible_to<typename M::Mor>;
  { m.left_unitor_inv(x) } -> std::convertible_to<typename M::Mor>;
  { m.right_unitor(x) } -> std::convertible_to<typename M::Mor>;
  { m.right_unitor_inv(x) } -> std::convertible_to<typename M::Mor>;
  { m.braid(x, x) } -> std::convertible_to<typename M::Mor>;
  { m.braid_inv(x, x) } -> std::convertible_to<typename M::Mor>;
  { m.equal(f, f) } -> std::convertible_to<bool>;
};

// Lists under concatenation; every structural map except the braiding is an identity.
template <class L>
struct SListModel {
  using Obj = SList<L>;
  using Mor = SListHom<L>;

  Obj unit() const { return {}; }
  Obj tensor(const Obj& x, const Obj& y) const { return tensor_obj(x, y); }
  Mor id(const Obj& x) const { return Mor::identity(x); }
  Mor compose(const Mor& f, const Mor& g) const { return unbias::compose(f, g); }
  Mor tensor_mor(const Mor& f, const Mor& g) const { return tensor_hom(f, g); }
  Mor assoc(const Obj& x, const Obj& y, const Obj& z) const { return id(tensor(tensor(x, y), z)); }
  Mor assoc_inv(const Obj& x, const Obj& y, const Obj& z) const { return assoc(x, y, z); }
  Mor left_unitor(const Obj& x) const { return id(x); }
  Mor left_unitor_inv(const Obj& x) const { return id(x); }
  Mor right_unitor(const Obj& x) const { return id(x); }
  Mor right_unitor_inv(const Obj& x) const { return id(x); }
  Mor braid(const Obj& x, const Obj& y) const { return braiding(x, y); }
  Mor braid_inv(const Obj& x, const Obj& y) const { return braiding(y, x); }
  bool equal(const Mor& f, const Mor& g) const { return f == g; }
};

// Finite cardinals and bijections; phi maps target index to source index.
struct FinBijModel {
  using Obj = std::size_t;
  using Mor = Perm;

  Obj unit() const { return 0; }
  Obj tensor(Obj x, Obj y) const { return x + y; }
  Mor id(Obj x) const { return Perm::identity(x); }
  Mor compose(const Mor& f, const Mor& g) const;
  Mor tensor_mor(const Mor& f, const Mor& g) const;
  Mor assoc(Obj x, Obj y, Obj z) const { return id(x + y + z); }
  Mor assoc_inv(Obj x, Obj y, Obj z) const { return id(x + y + z); }
  Mor left_unitor(Obj x) const { return id(x); }
  Mor left_unitor_inv(Obj x) const { return id(x); }
  Mor right_unitor(Obj x) const { return id(x); }
  Mor right_unitor_inv(Obj x) const { return id(x); }
  Mor braid(Obj x, Obj y) const;
  Mor braid_inv(Obj x, Obj y) const { return braid(y, x); }
  bool equal(const Mor& f, const Mor& g) const { return f == g; }
};

// Terms themselves, with equality decided by normalization.
struct FreeTermModel {
  using Obj = ObjTerm;
  using Mor = MorTerm;

  Obj unit() const { return ObjTerm::unit(); }
  Obj tensor(const Obj& x, const Obj& y) const { return ObjTerm::tensor(x, y); }
  Mor id(const Obj& x) const { return MorTerm::id(x); }
  Mor compose(const Mor& f, const Mor& g) const { return MorTerm::comp(f, g); }
  Mor tensor_mor(const Mor& f, const Mor& g) const { return MorTerm::tensor(f, g); }
  Mor assoc(const Obj& x, const Obj& y, const Obj& z) const { return MorTerm::assoc(x, y, z); }
  Mor assoc_inv(const Obj& x, const Obj& y, const Obj& z) const { return MorTerm::inv(assoc(x, y, z)); }
  Mor left_unitor(const Obj& x) const { return MorTerm::left_unitor(x); }
  Mor left_unitor_inv(const Obj& x) const { return MorTerm::inv(left_unitor(x)); }
  Mor right_unitor(const Obj& x) const { return MorTerm::right_unitor(x); }
  Mor right_unitor_inv(const Obj& x) const { return MorTerm::inv(right_unitor(x)); }
  Mor braid(const Obj& x, const Obj& y) const { return MorTerm::braid(x, y); }
  Mor braid_inv(const Obj& x, const Obj& y) const { return MorTerm::inv(braid(x, y)); }
  bool equal(const Mor& f, const Mor& g) const;
};

template <class M>
using Assignment = std::map<std::string, typename M::Obj>;

template <SmcModel M>
typename M::Obj eval_obj(const ObjTerm& t, const M& m, const Assignment<M>& x) {
  switch (t.kind()) {
    case ObjTerm::Kind::Unit: return m.unit();
    case ObjTerm::Kind::Gen: {
      auto it = x.find(t.label());
      if (it == x.end()) fail(Errc::UnassignedLabel, t.label());
      return it->second;
    }
    case ObjTerm::Kind::Tensor: return m.tensor(eval_obj(t.left(), m, x), eval_obj(t.right(), m, x));
  }
  fail(Errc::IllTyped, "bad object term");
}

namespace detail {

template <SmcModel M>
typename M::Mor eval_typed(const MorTerm& t, const M& m, const Assignment<M>& x, bool inverted) {
  using K = MorTerm::Kind;
  const auto& o = t.objs();
  const auto& a = t.args();
  auto ob = [&](std::size_t i) { return eval_obj(o[i], m, x); };
  switch (t.kind()) {
    case K::Id: return m.id(ob(0));
    case K::Comp:
      return inverted ? m.compose(eval_typed(a[1], m, x, true), eval_typed(a[0], m, x, true))
                      : m.compose(eval_typed(a[0], m, x, false), eval_typed(a[1], m, x, false));
    case K::Tensor: return m.tensor_mor(eval_typed(a[0], m, x, inverted), eval_typed(a[1], m, x, inverted));
    case K::Assoc: return inverted ? m.assoc_inv(ob(0), ob(1), ob(2)) : m.assoc(ob(0), ob(1), ob(2));
    case K::LeftUnitor: return inverted ? m.left_unitor_inv(ob(0)) : m.left_unitor(ob(0));
    case K::RightUnitor: return inverted ? m.right_unitor_inv(ob(0)) : m.right_unitor(ob(0));
    case K::Braid: return inverted ? m.braid_inv(ob(0), ob(1)) : m.braid(ob(0), ob(1));
    case K::Inv: return eval_typed(a[0], m, x, !inverted);
  }
  fail(Errc::IllTyped, "bad morphism term");
}

}  // namespace detail

template <SmcModel M>
typename M::Mor eval_mor(const MorTerm& t, const M& m, const Assignment<M>& x) {
  type_of(t);
  return detail::eval_typed(t, m, x, false);
}

// Evaluation in the list model with each generator sent to its singleton list.
SListHom<std::string> normalize(const MorTerm& t);
SList<std::string> normalize_obj(const ObjTerm& t);
// Throws BoundaryMismatch when the syntactic boundaries differ.
bool decide_equal(const MorTerm& s, const MorTerm& t);

// ---------------------------------------------------------------------------
// Extension along lists: [l0,..,ln-1] goes to x(l0) * (x(l1) * (.. * I)).

template <SmcModel M, class L>
class PsiExtension {
 public:
  using Obj = typename M::Obj;
  using Mor = typename M::Mor;

  PsiExtension(M model, std::function<Obj(const L&)> x) : m_(std::move(model)), x_(std::move(x)) {}

  const M& model() const { return m_; }
  Obj at(const L& l) const { return x_(l); }

  Obj obj(const SList<L>& xs) const { return obj_from(xs, 0); }

  // One nested swap per letter of the canonical reduced word.
  Mor hom(const SListHom<L>& f) const {
    const Word w = reduced_word(f.phi());
    SList<L> cur = f.src();
    if (w.empty()) return m_.id(obj(cur));
    std::optional<Mor> acc;
    for (std::size_t p : w) {
      Mor step = swap_at(cur, p);
      acc = acc ? m_.compose(*acc, step) : step;
      std::swap(cur[p], cur[p + 1]);
    }
    return *acc;
  }

  // Psi(xs ++ ys) -> Psi(xs) * Psi(ys), from associators and the left unitor.
  Mor monoidal_iso(const SList<L>& xs, const SList<L>& ys) const { return monoidal_iso_from(xs, 0, ys); }

  // Tensor of a family of morphisms along a list, closed off by the unit identity.
  Mor family_map(const SList<L>& xs, const std::function<Mor(const L&)>& h) const {
    Mor acc = m_.id(m_.unit());
    for (std::size_t i = xs.size(); i-- > 0;) acc = m_.tensor_mor(h(xs[i]), acc);
    return acc;
  }

 private:
  Obj obj_from(const SList<L>& xs, std::size_t from) const {
    Obj acc = m_.unit();
    for (std::size_t i = xs.size(); i-- > from;) acc = m_.tensor(x_(xs[i]), acc);
    return acc;
  }

  Mor swap_at(const SList<L>& cur, std::size_t p) const {
    const Obj a = x_(cur[p]);
    const Obj b = x_(cur[p + 1]);
    const Obj rest = obj_from(cur, p + 2);
    Mor core = m_.compose(m_.compose(m_.assoc_inv(a, b, rest), m_.tensor_mor(m_.braid(a, b), m_.id(rest))),
                          m_.assoc(b, a, rest));
    for (std::size_t i = p; i-- > 0;) core = m_.tensor_mor(m_.id(x_(cur[i])), core);
    return core;
  }

  Mor monoidal_iso_from(const SList<L>& xs, std::size_t from, const SList<L>& ys) const {
    if (from == xs.size()) return m_.left_unitor_inv(obj(ys));
    const Obj head = x_(xs[from]);
    Mor inner = m_.tensor_mor(m_.id(head), monoidal_iso_from(xs, from + 1, ys));
    return m_.compose(inner, m_.assoc_inv(head, obj_from(xs, from + 1), obj(ys)));
  }

  M m_;
  std::function<Obj(const L&)> x_;
};

template <SmcModel M>
PsiExtension<M, std::string> psi_extend(const Assignment<M>& x, const M& m) {
  return PsiExtension<M, std::string>(m, [x](const std::string& l) {
    auto it = x.find(l);
    if (it == x.end()) fail(Errc::UnassignedLabel, l);
    return it->second;
  });
}

// Gen l0 * (Gen l1 * (.. * I))
ObjTerm nest(const SList<std::string>& xs);
MorTerm canonical_term(const SListHom<std::string>& f);

}  // namespace unbias
