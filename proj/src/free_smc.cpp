#include "unbias/free_smc.hpp"

#include "unbias/dsl.hpp"

namespace unbias {

struct ObjTerm::Node {
  Kind kind;
  std::string label;
  std::vector<ObjTerm> kids;
  std::size_t size;
};

ObjTerm ObjTerm::unit() {
  static const ObjTerm u(std::make_shared<const Node>(Node{Kind::Unit, {}, {}, 1}));
  return u;
}

ObjTerm ObjTerm::gen(std::string label) {
  return ObjTerm(std::make_shared<const Node>(Node{Kind::Gen, std::move(label), {}, 1}));
}

ObjTerm ObjTerm::tensor(ObjTerm x, ObjTerm y) {
  const std::size_t n = 1 + x.size() + y.size();
  return ObjTerm(std::make_shared<const Node>(Node{Kind::Tensor, {}, {std::move(x), std::move(y)}, n}));
}

ObjTerm::Kind ObjTerm::kind() const { return node_->kind; }
const std::string& ObjTerm::label() const { return node_->label; }
const ObjTerm& ObjTerm::left() const { return node_->kids.at(0); }
const ObjTerm& ObjTerm::right() const { return node_->kids.at(1); }
std::size_t ObjTerm::size() const { return node_->size; }

bool operator==(const ObjTerm& a, const ObjTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case ObjTerm::Kind::Unit: return true;
    case ObjTerm::Kind::Gen: return a.label() == b.label();
    case ObjTerm::Kind::Tensor: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

struct MorTerm::Node {
  Kind kind;
  std::vector<ObjTerm> objs;
  std::vector<MorTerm> args;
  std::size_t size;
};

MorTerm MorTerm::id(ObjTerm x) { return MorTerm(std::make_shared<const Node>(Node{Kind::Id, {std::move(x)}, {}, 1})); }

MorTerm MorTerm::comp(MorTerm f, MorTerm g) {
  const std::size_t n = 1 + f.size() + g.size();
  return MorTerm(std::make_shared<const Node>(Node{Kind::Comp, {}, {std::move(f), std::move(g)}, n}));
}

MorTerm MorTerm::tensor(MorTerm f, MorTerm g) {
  const std::size_t n = 1 + f.size() + g.size();
  return MorTerm(std::make_shared<const Node>(Node{Kind::Tensor, {}, {std::move(f), std::move(g)}, n}));
}

MorTerm MorTerm::assoc(ObjTerm x, ObjTerm y, ObjTerm z) {
  return MorTerm(std::make_shared<const Node>(Node{Kind::Assoc, {std::move(x), std::move(y), std::move(z)}, {}, 1}));
}

MorTerm MorTerm::left_unitor(ObjTerm x) {
  return MorTerm(std::make_shared<const Node>(Node{Kind::LeftUnitor, {std::move(x)}, {}, 1}));
}

MorTerm MorTerm::right_unitor(ObjTerm x) {
  return MorTerm(std::make_shared<const Node>(Node{Kind::RightUnitor, {std::move(x)}, {}, 1}));
}

MorTerm MorTerm::braid(ObjTerm x, ObjTerm y) {
  return MorTerm(std::make_shared<const Node>(Node{Kind::Braid, {std::move(x), std::move(y)}, {}, 1}));
}

MorTerm MorTerm::inv(MorTerm f) {
  const std::size_t n = 1 + f.size();
  return MorTerm(std::make_shared<const Node>(Node{Kind::Inv, {}, {std::move(f)}, n}));
}

MorTerm::Kind MorTerm::kind() const { return node_->kind; }
const std::vector<ObjTerm>& MorTerm::objs() const { return node_->objs; }
const std::vector<MorTerm>& MorTerm::args() const { return node_->args; }
std::size_t MorTerm::size() const { return node_->size; }

bool operator==(const MorTerm& a, const MorTerm& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.size() == b.size() && a.objs() == b.objs() && a.args() == b.args();
}

Boundary type_of(const MorTerm& t) {
  using K = MorTerm::Kind;
  const auto& o = t.objs();
  const auto& a = t.args();
  auto T = [](const ObjTerm& x, const ObjTerm& y) { return ObjTerm::tensor(x, y); };
  switch (t.kind()) {
    case K::Id: return {o[0], o[0]};
    case K::Comp: {
      Boundary f = type_of(a[0]);
      Boundary g = type_of(a[1]);
      if (!(f.dst == g.src))
        fail(Errc::IllTyped, render(a[0]) + " ends at " + render(f.dst) + " but " + render(a[1]) + " starts at " +
                                 render(g.src));
      return {f.src, g.dst};
    }
    case K::Tensor: {
      Boundary f = type_of(a[0]);
      Boundary g = type_of(a[1]);
      return {T(f.src, g.src), T(f.dst, g.dst)};
    }
    case K::Assoc: return {T(T(o[0], o[1]), o[2]), T(o[0], T(o[1], o[2]))};
    case K::LeftUnitor: return {T(ObjTerm::unit(), o[0]), o[0]};
    case K::RightUnitor: return {T(o[0], ObjTerm::unit()), o[0]};
    case K::Braid: return {T(o[0], o[1]), T(o[1], o[0])};
    case K::Inv: {
      Boundary f = type_of(a[0]);
      return {f.dst, f.src};
    }
  }
  fail(Errc::IllTyped, "bad morphism term");
}

FinBijModel::Mor FinBijModel::compose(const Mor& f, const Mor& g) const { return f * g; }

FinBijModel::Mor FinBijModel::tensor_mor(const Mor& f, const Mor& g) const {
  std::vector<std::size_t> img(f.size() + g.size());
  for (std::size_t i = 0; i < f.size(); ++i) img[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) img[f.size() + i] = f.size() + g[i];
  return Perm(std::move(img));
}

FinBijModel::Mor FinBijModel::braid(Obj x, Obj y) const {
  std::vector<std::size_t> img(x + y);
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = i < y ? i + x : i - y;
  return Perm(std::move(img));
}

bool FreeTermModel::equal(const Mor& f, const Mor& g) const { return decide_equal(f, g); }

namespace {

void collect_labels(const ObjTerm& t, SList<std::string>& out) {
  switch (t.kind()) {
    case ObjTerm::Kind::Unit: return;
    case ObjTerm::Kind::Gen: out.push_back(t.label()); return;
    case ObjTerm::Kind::Tensor:
      collect_labels(t.left(), out);
      collect_labels(t.right(), out);
      return;
  }
}

void collect_labels(const MorTerm& t, std::map<std::string, SList<std::string>>& out) {
  for (const ObjTerm& o : t.objs()) {
    SList<std::string> ls;
    collect_labels(o, ls);
    for (auto& l : ls) out.emplace(l, SList<std::string>{l});
  }
  for (const MorTerm& a : t.args()) collect_labels(a, out);
}

}  // namespace

SList<std::string> normalize_obj(const ObjTerm& t) {
  SList<std::string> out;
  collect_labels(t, out);
  return out;
}

SListHom<std::string> normalize(const MorTerm& t) {
  Assignment<SListModel<std::string>> singletons;
  collect_labels(t, singletons);
  return eval_mor(t, SListModel<std::string>{}, singletons);
}

bool decide_equal(const MorTerm& s, const MorTerm& t) {
  Boundary bs = type_of(s);
  Boundary bt = type_of(t);
  if (!(bs.src == bt.src) || !(bs.dst == bt.dst))
    fail(Errc::BoundaryMismatch, render(bs.src) + " -> " + render(bs.dst) + " vs " + render(bt.src) + " -> " +
                                     render(bt.dst));
  return normalize(s).phi() == normalize(t).phi();
}

ObjTerm nest(const SList<std::string>& xs) {
  ObjTerm acc = ObjTerm::unit();
  for (std::size_t i = xs.size(); i-- > 0;) acc = ObjTerm::tensor(ObjTerm::gen(xs[i]), acc);
  return acc;
}

MorTerm canonical_term(const SListHom<std::string>& f) {
  PsiExtension<FreeTermModel, std::string> psi(FreeTermModel{}, [](const std::string& l) { return ObjTerm::gen(l); });
  return psi.hom(f);
}

}  // namespace unbias
