#include "unbias/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unbias {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Perm random_perm(Rng& rng, std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

Word random_word(Rng& rng, std::size_t n, std::size_t length) {
  if (n < 2 && length > 0) fail(Errc::LetterOutOfRange, "no letters in S_" + std::to_string(n));
  Word w(length);
  for (auto& l : w) l = uniform(rng, 0, n - 2);
  return w;
}

FinFun random_fun(Rng& rng, std::size_t src, std::size_t dst) {
  std::vector<std::size_t> img(src);
  for (auto& v : img) v = uniform(rng, 0, dst - 1);
  return FinFun(src, dst, std::move(img));
}

Span random_span(Rng& rng, std::size_t source, std::size_t target, std::size_t max_apex) {
  std::size_t apex = (source == 0 || target == 0) ? 0 : uniform(rng, 0, max_apex);
  return Span(random_fun(rng, apex, source), random_fun(rng, apex, target));
}

KHom random_khom(Rng& rng, std::size_t src, std::size_t dst, std::size_t max_len) {
  std::vector<NList> ls(src);
  for (auto& xs : ls) {
    std::size_t len = dst == 0 ? 0 : uniform(rng, 0, max_len);
    for (std::size_t i = 0; i < len; ++i) xs.push_back(uniform(rng, 0, dst - 1));
  }
  return KHom(src, dst, std::move(ls));
}

KHom random_linear_khom(Rng& rng, std::size_t src, std::size_t dst) {
  std::vector<NList> ls(src);
  for (auto& xs : ls) {
    for (std::size_t k = 0; k < dst; ++k)
      if (uniform(rng, 0, 1)) xs.push_back(k);
    std::shuffle(xs.begin(), xs.end(), rng);
  }
  return KHom(src, dst, std::move(ls));
}

std::vector<FinFun> all_funs(std::size_t src, std::size_t dst) {
  std::vector<FinFun> out;
  if (dst == 0 && src > 0) return out;
  std::vector<std::size_t> img(src, 0);
  for (;;) {
    out.emplace_back(src, dst, img);
    std::size_t i = 0;
    while (i < src && ++img[i] == dst) img[i++] = 0;
    if (i == src) break;
  }
  return out;
}

std::vector<Span> all_spans(std::size_t source, std::size_t target, std::size_t max_apex) {
  std::vector<Span> out;
  for (std::size_t a = 0; a <= max_apex; ++a) {
    auto ls = all_funs(a, source);
    auto rs = all_funs(a, target);
    for (const auto& l : ls)
      for (const auto& r : rs) out.emplace_back(l, r);
  }
  return out;
}

std::vector<std::string> generator_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

ObjTerm random_obj_term(Rng& rng, const std::vector<std::string>& gens, std::size_t depth) {
  const std::size_t pick = uniform(rng, 0, 5);
  if (depth == 0 || pick < 2) {
    if (pick == 0) return ObjTerm::unit();
    return ObjTerm::gen(gens[uniform(rng, 0, gens.size() - 1)]);
  }
  ObjTerm x = random_obj_term(rng, gens, depth - 1);
  return ObjTerm::tensor(std::move(x), random_obj_term(rng, gens, depth - 1));
}

namespace {

bool is_tensor(const ObjTerm& x) { return x.kind() == ObjTerm::Kind::Tensor; }
bool is_unit(const ObjTerm& x) { return x.kind() == ObjTerm::Kind::Unit; }

}  // namespace

MorTerm random_mor_from(Rng& rng, const ObjTerm& src, const std::vector<std::string>& gens, std::size_t depth) {
  std::vector<std::function<MorTerm()>> options;
  options.push_back([&] { return MorTerm::id(src); });
  options.push_back([&] { return MorTerm::inv(MorTerm::left_unitor(src)); });
  options.push_back([&] { return MorTerm::inv(MorTerm::right_unitor(src)); });
  if (is_tensor(src)) {
    const ObjTerm& x = src.left();
    const ObjTerm& y = src.right();
    options.push_back([&] { return MorTerm::braid(x, y); });
    options.push_back([&] { return MorTerm::inv(MorTerm::braid(y, x)); });
    if (depth > 0) {
      options.push_back([&] {
        MorTerm f = random_mor_from(rng, x, gens, depth - 1);
        return MorTerm::tensor(std::move(f), random_mor_from(rng, y, gens, depth - 1));
      });
      options.push_back([&] {
        MorTerm f = random_mor_from(rng, x, gens, depth - 1);
        return MorTerm::tensor(std::move(f), random_mor_from(rng, y, gens, depth - 1));
      });
    }
    if (is_tensor(x)) options.push_back([&] { return MorTerm::assoc(x.left(), x.right(), y); });
    if (is_tensor(y)) options.push_back([&] { return MorTerm::inv(MorTerm::assoc(x, y.left(), y.right())); });
    if (is_unit(x)) options.push_back([&] { return MorTerm::left_unitor(y); });
    if (is_unit(y)) options.push_back([&] { return MorTerm::right_unitor(x); });
  }
  if (depth > 0) {
    options.push_back([&] {
      MorTerm f = random_mor_from(rng, src, gens, depth - 1);
      return MorTerm::comp(f, random_mor_from(rng, type_of(f).dst, gens, depth - 1));
    });
    options.push_back([&] { return MorTerm::inv(MorTerm::inv(random_mor_from(rng, src, gens, depth - 1))); });
    options.push_back([&] {
      MorTerm f = random_mor_from(rng, src, gens, depth - 1);
      MorTerm g = random_mor_from(rng, type_of(f).dst, gens, depth - 1);
      return MorTerm::comp(MorTerm::comp(f, g), MorTerm::inv(g));
    });
  }
  return options[uniform(rng, 0, options.size() - 1)]();
}

MorTerm random_mor_term(Rng& rng, const std::vector<std::string>& gens, std::size_t depth) {
  return random_mor_from(rng, random_obj_term(rng, gens, 3), gens, depth);
}

namespace {

using K = MorTerm::Kind;

ObjTerm T(const ObjTerm& x, const ObjTerm& y) { return ObjTerm::tensor(x, y); }
MorTerm C(const MorTerm& f, const MorTerm& g) { return MorTerm::comp(f, g); }
MorTerm X(const MorTerm& f, const MorTerm& g) { return MorTerm::tensor(f, g); }
MorTerm Id(const ObjTerm& x) { return MorTerm::id(x); }
MorTerm Inv(const MorTerm& f) { return MorTerm::inv(f); }

MorTerm with_arg(const MorTerm& t, std::size_t i, const MorTerm& a) {
  auto args = t.args();
  args[i] = a;
  switch (t.kind()) {
    case K::Comp: return C(args[0], args[1]);
    case K::Tensor: return X(args[0], args[1]);
    case K::Inv: return Inv(args[0]);
    default: return t;
  }
}

// Pairs of parallel axiom instances out of a given object.
std::vector<std::pair<MorTerm, MorTerm>> instances_from(const ObjTerm& a) {
  std::vector<std::pair<MorTerm, MorTerm>> out;
  if (!is_tensor(a)) return out;
  const ObjTerm& l = a.left();
  const ObjTerm& r = a.right();
  if (is_tensor(l)) {
    const ObjTerm &x = l.left(), &y = l.right(), &z = r;
    // hexagon
    out.push_back({C(MorTerm::assoc(x, y, z), C(MorTerm::braid(x, T(y, z)), MorTerm::assoc(y, z, x))),
                   C(X(MorTerm::braid(x, y), Id(z)), C(MorTerm::assoc(y, x, z), X(Id(y), MorTerm::braid(x, z))))});
    if (is_unit(y))
      out.push_back({X(MorTerm::right_unitor(x), Id(z)), C(MorTerm::assoc(x, y, z), X(Id(x), MorTerm::left_unitor(z)))});
    if (is_tensor(x)) {
      const ObjTerm &p = x.left(), &q = x.right();
      // ((p*q)*y)*z
      out.push_back({C(MorTerm::assoc(T(p, q), y, z), MorTerm::assoc(p, q, T(y, z))),
                     C(C(X(MorTerm::assoc(p, q, y), Id(z)), MorTerm::assoc(p, T(q, y), z)), X(Id(p), MorTerm::assoc(q, y, z)))});
    }
  }
  if (is_tensor(r)) {
    const ObjTerm &x = l, &y = r.left(), &z = r.right();
    out.push_back(
        {C(Inv(MorTerm::assoc(x, y, z)), C(MorTerm::braid(T(x, y), z), Inv(MorTerm::assoc(z, x, y)))),
         C(X(Id(x), MorTerm::braid(y, z)), C(Inv(MorTerm::assoc(x, z, y)), X(MorTerm::braid(x, z), Id(y))))});
  }
  if (is_unit(l) && is_unit(r)) out.push_back({MorTerm::left_unitor(l), MorTerm::right_unitor(l)});
  out.push_back({C(MorTerm::braid(l, r), MorTerm::braid(r, l)), Id(a)});
  return out;
}

void root_rewrites(const MorTerm& s, std::vector<MorTerm>& out) {
  const Boundary b = type_of(s);
  const auto& a = s.args();
  const auto& o = s.objs();
  out.push_back(C(Id(b.src), s));
  out.push_back(C(s, Id(b.dst)));
  out.push_back(C(C(s, Inv(s)), s));
  out.push_back(C(C(Inv(MorTerm::left_unitor(b.src)), X(Id(ObjTerm::unit()), s)), MorTerm::left_unitor(b.dst)));
  out.push_back(C(C(Inv(MorTerm::right_unitor(b.src)), X(s, Id(ObjTerm::unit()))), MorTerm::right_unitor(b.dst)));
  for (const auto& [lhs, rhs] : instances_from(b.src)) out.push_back(C(C(lhs, Inv(rhs)), s));

  switch (s.kind()) {
    case K::Comp: {
      const MorTerm &f = a[0], &g = a[1];
      if (f.kind() == K::Comp) out.push_back(C(f.args()[0], C(f.args()[1], g)));
      if (g.kind() == K::Comp) out.push_back(C(C(f, g.args()[0]), g.args()[1]));
      if (f.kind() == K::Inv && g.kind() == K::Inv) out.push_back(Inv(C(g.args()[0], f.args()[0])));
      if (f.kind() == K::Tensor && g.kind() == K::Tensor)
        out.push_back(X(C(f.args()[0], g.args()[0]), C(f.args()[1], g.args()[1])));
      if (f.kind() == K::Braid && g.kind() == K::Braid && f.objs()[0] == g.objs()[1] && f.objs()[1] == g.objs()[0])
        out.push_back(Id(b.src));
      if (f.kind() == K::Assoc && g.kind() == K::Assoc && is_tensor(f.objs()[0])) {
        const ObjTerm &p = f.objs()[0].left(), &q = f.objs()[0].right(), &y = f.objs()[1], &z = f.objs()[2];
        out.push_back(C(C(X(MorTerm::assoc(p, q, y), Id(z)), MorTerm::assoc(p, T(q, y), z)), X(Id(p), MorTerm::assoc(q, y, z))));
      }
      break;
    }
    case K::Tensor: {
      const MorTerm &f = a[0], &g = a[1];
      const Boundary bf = type_of(f), bg = type_of(g);
      out.push_back(C(C(MorTerm::braid(bf.src, bg.src), X(g, f)), MorTerm::braid(bg.dst, bf.dst)));
      if (f.kind() == K::Comp && g.kind() == K::Comp)
        out.push_back(C(X(f.args()[0], g.args()[0]), X(f.args()[1], g.args()[1])));
      if (f.kind() == K::Id && g.kind() == K::Id) out.push_back(Id(b.src));
      if (f.kind() == K::Tensor) {
        const MorTerm &p = f.args()[0], &q = f.args()[1];
        const Boundary bp = type_of(p), bq = type_of(q);
        out.push_back(C(C(MorTerm::assoc(bp.src, bq.src, bg.src), X(p, X(q, g))), Inv(MorTerm::assoc(bp.dst, bq.dst, bg.dst))));
      }
      break;
    }
    case K::Id:
      if (is_tensor(o[0])) out.push_back(X(Id(o[0].left()), Id(o[0].right())));
      break;
    case K::Inv: {
      const MorTerm& f = a[0];
      if (f.kind() == K::Inv) out.push_back(f.args()[0]);
      if (f.kind() == K::Comp) out.push_back(C(Inv(f.args()[1]), Inv(f.args()[0])));
      if (f.kind() == K::Braid) out.push_back(MorTerm::braid(f.objs()[1], f.objs()[0]));
      if (f.kind() == K::Tensor) out.push_back(X(Inv(f.args()[0]), Inv(f.args()[1])));
      break;
    }
    case K::LeftUnitor:
      if (is_unit(o[0])) out.push_back(MorTerm::right_unitor(o[0]));
      break;
    case K::RightUnitor:
      if (is_unit(o[0])) out.push_back(MorTerm::left_unitor(o[0]));
      break;
    default: break;
  }
}

void all_rewrites(const MorTerm& t, std::vector<MorTerm>& out) {
  root_rewrites(t, out);
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    std::vector<MorTerm> inner;
    all_rewrites(t.args()[i], inner);
    for (const MorTerm& r : inner) out.push_back(with_arg(t, i, r));
  }
}

}  // namespace

std::vector<MorTerm> axiom_rewrites(const MorTerm& t) {
  std::vector<MorTerm> out;
  all_rewrites(t, out);
  return out;
}

}  // namespace unbias
