#include "unbias/pbc.hpp"

#include <algorithm>
#include <numeric>

namespace unbias {

KHom op_compose(const KHom& a, const KHom& b) { return k_compose(b, a); }
KCell op_hcomp(const KCell& phi, const KCell& psi) { return k_hcomp(psi, phi); }
KHom op_id(std::size_t n) { return k_id(n); }

KHom lambda_u(const FinFun& f) {
  std::vector<NList> ls(f.dst());
  for (std::size_t k = 0; k < f.dst(); ++k) ls[k] = f.fiber(k);
  return KHom(f.dst(), f.src(), std::move(ls));
}

KHom lambda_v(const FinFun& f) {
  std::vector<NList> ls(f.src());
  for (std::size_t j = 0; j < f.src(); ++j) ls[j] = {f(j)};
  return KHom(f.src(), f.dst(), std::move(ls));
}

KCell base_change_unique(const Square& sq) {
  if (!is_pullback_square(sq)) fail(Errc::NotPullbackSquare, "base change needs a pullback square");
  return k_unique_cell(op_compose(lambda_u(sq.right), lambda_v(sq.bottom)),
                       op_compose(lambda_v(sq.top), lambda_u(sq.left)));
}

PbcSystem lambda_system() {
  PbcSystem s;
  s.u = lambda_u;
  s.v = lambda_v;
  s.u_comp = [](const FinFun& f, const FinFun& g) {
    return k_unique_cell(lambda_u(f.then(g)), op_compose(lambda_u(f), lambda_u(g)));
  };
  s.v_comp = [](const FinFun& f, const FinFun& g) {
    return k_unique_cell(lambda_v(f.then(g)), op_compose(lambda_v(g), lambda_v(f)));
  };
  s.u_id = [](std::size_t n) { return k_unique_cell(lambda_u(FinFun::identity(n)), op_id(n)); };
  s.v_id = [](std::size_t n) { return k_unique_cell(lambda_v(FinFun::identity(n)), op_id(n)); };
  s.base_change = base_change_unique;
  return s;
}

Square pullback_square(const FinFun& right, const FinFun& bottom) {
  Pullback pb(bottom, right);
  return Square{pb.p2(), pb.p1(), right, bottom};
}

KHom pseudofunctor_on_span(const PbcSystem& sys, const Span& s) { return op_compose(sys.v(s.left), sys.u(s.right)); }

KCell pseudofunctor_on_cell(const PbcSystem& sys, const SpanCell& c) {
  const FinFun& phi = c.map;
  if (!phi.is_bijective()) fail(Errc::NotInvertible, "cell map is not a bijection");
  const std::size_t n = phi.dst();
  const FinFun id = FinFun::identity(n);
  KCell eta = k_vcomp(k_invert(sys.base_change(Square{phi, phi, id, id})), op_hcomp(sys.u_id(n), sys.v_id(n)));
  KCell split = op_hcomp(sys.v_comp(phi, c.dst.left), sys.u_comp(phi, c.dst.right));
  KCell collapse = op_hcomp(k_id_cell(sys.v(c.dst.left)), op_hcomp(eta, k_id_cell(sys.u(c.dst.right))));
  return k_vcomp(split, collapse);
}

KCell pseudofunctor_comp(const PbcSystem& sys, const Span& s, const Span& t) {
  SpanComposite st = compose_span_detail(s, t);
  const FinFun& p1 = st.pb.p1();
  const FinFun& p2 = st.pb.p2();
  KCell split = op_hcomp(sys.v_comp(p1, s.left), sys.u_comp(p2, t.right));
  KCell swap = k_invert(sys.base_change(Square{p1, p2, s.right, t.left}));
  KCell middle = op_hcomp(k_id_cell(sys.v(s.left)), op_hcomp(swap, k_id_cell(sys.u(t.right))));
  return k_vcomp(split, middle);
}

KCell pseudofunctor_id(const PbcSystem& sys, std::size_t n) { return op_hcomp(sys.v_id(n), sys.u_id(n)); }

void LawReport::record(const std::string& violation) {
  ++failed;
  if (violations.size() < 20) violations.push_back(violation);
}

void LawReport::merge(const LawReport& o) {
  cases += o.cases;
  failed += o.failed;
  for (const auto& v : o.violations)
    if (violations.size() < 20) violations.push_back(v);
}

namespace {

template <class Build>
void expect_equal(LawReport& r, const std::string& law, Build build) {
  ++r.cases;
  try {
    auto [lhs, rhs] = build();
    if (!(lhs == rhs)) r.record(law);
  } catch (const Error& e) {
    r.record(law + ": " + e.what());
  }
}

KCell vcomp3(const KCell& a, const KCell& b, const KCell& c) { return k_vcomp(k_vcomp(a, b), c); }

}  // namespace

LawReport pbc_laws_horizontal(const PbcSystem& sys, const FinFun& b0, const FinFun& b1, const FinFun& v2) {
  LawReport r{"horizontal pasting"};
  const Square R = pullback_square(v2, b1);
  const Square L = pullback_square(R.left, b0);
  const Square H{L.top.then(R.top), L.left, v2, b0.then(b1)};
  const std::string tag = " for " + to_string(b0) + ", " + to_string(b1) + ", " + to_string(v2);
  expect_equal(r, "horizontal pasting" + tag, [&] {
    KCell lhs = k_vcomp(sys.base_change(H), op_hcomp(sys.v_comp(L.top, R.top), k_id_cell(sys.u(L.left))));
    KCell rhs = vcomp3(op_hcomp(k_id_cell(sys.u(v2)), sys.v_comp(b0, b1)),
                       op_hcomp(sys.base_change(R), k_id_cell(sys.v(b0))),
                       op_hcomp(k_id_cell(sys.v(R.top)), sys.base_change(L)));
    return std::pair{lhs, rhs};
  });
  return r;
}

LawReport pbc_laws_vertical(const PbcSystem& sys, const FinFun& r0, const FinFun& r1, const FinFun& h2) {
  LawReport r{"vertical pasting"};
  const Square B = pullback_square(r1, h2);
  const Square T = pullback_square(r0, B.top);
  const Square V{T.top, T.left.then(B.left), r0.then(r1), h2};
  const std::string tag = " for " + to_string(r0) + ", " + to_string(r1) + ", " + to_string(h2);
  expect_equal(r, "vertical pasting" + tag, [&] {
    KCell lhs = k_vcomp(sys.base_change(V), op_hcomp(k_id_cell(sys.v(T.top)), sys.u_comp(T.left, B.left)));
    KCell rhs = vcomp3(op_hcomp(sys.u_comp(r0, r1), k_id_cell(sys.v(h2))),
                       op_hcomp(k_id_cell(sys.u(r0)), sys.base_change(B)),
                       op_hcomp(sys.base_change(T), k_id_cell(sys.u(B.left))));
    return std::pair{lhs, rhs};
  });
  return r;
}

LawReport pbc_laws_units(const PbcSystem& sys, const FinFun& f) {
  LawReport r{"unit squares"};
  const std::size_t x = f.src(), y = f.dst();
  const FinFun ix = FinFun::identity(x), iy = FinFun::identity(y);
  const std::string tag = " for " + to_string(f);
  expect_equal(r, "horizontal unit square" + tag, [&] {
    KCell lhs = sys.base_change(Square{ix, f, f, iy});
    KCell rhs = k_vcomp(op_hcomp(k_id_cell(sys.u(f)), sys.v_id(y)), op_hcomp(k_invert(sys.v_id(x)), k_id_cell(sys.u(f))));
    return std::pair{lhs, rhs};
  });
  expect_equal(r, "vertical unit square" + tag, [&] {
    KCell lhs = sys.base_change(Square{f, ix, iy, f});
    KCell rhs = k_vcomp(op_hcomp(sys.u_id(y), k_id_cell(sys.v(f))), op_hcomp(k_id_cell(sys.v(f)), k_invert(sys.u_id(x))));
    return std::pair{lhs, rhs};
  });
  return r;
}

LawReport pbc_laws_functors(const PbcSystem& sys, const FinFun& f, const FinFun& g, const FinFun& h) {
  LawReport r{"functor coherence"};
  const std::string tag = " for " + to_string(f) + ", " + to_string(g) + ", " + to_string(h);
  const FinFun ia = FinFun::identity(f.src()), ib = FinFun::identity(f.dst());
  expect_equal(r, "u associativity" + tag, [&] {
    KCell lhs = k_vcomp(sys.u_comp(f.then(g), h), op_hcomp(sys.u_comp(f, g), k_id_cell(sys.u(h))));
    KCell rhs = k_vcomp(sys.u_comp(f, g.then(h)), op_hcomp(k_id_cell(sys.u(f)), sys.u_comp(g, h)));
    return std::pair{lhs, rhs};
  });
  expect_equal(r, "v associativity" + tag, [&] {
    KCell lhs = k_vcomp(sys.v_comp(f.then(g), h), op_hcomp(k_id_cell(sys.v(h)), sys.v_comp(f, g)));
    KCell rhs = k_vcomp(sys.v_comp(f, g.then(h)), op_hcomp(sys.v_comp(g, h), k_id_cell(sys.v(f))));
    return std::pair{lhs, rhs};
  });
  expect_equal(r, "u left unit" + tag, [&] {
    KCell lhs = k_vcomp(sys.u_comp(ia, f), op_hcomp(sys.u_id(f.src()), k_id_cell(sys.u(f))));
    return std::pair{lhs, k_id_cell(sys.u(f))};
  });
  expect_equal(r, "u right unit" + tag, [&] {
    KCell lhs = k_vcomp(sys.u_comp(f, ib), op_hcomp(k_id_cell(sys.u(f)), sys.u_id(f.dst())));
    return std::pair{lhs, k_id_cell(sys.u(f))};
  });
  expect_equal(r, "v left unit" + tag, [&] {
    KCell lhs = k_vcomp(sys.v_comp(ia, f), op_hcomp(k_id_cell(sys.v(f)), sys.v_id(f.src())));
    return std::pair{lhs, k_id_cell(sys.v(f))};
  });
  expect_equal(r, "v right unit" + tag, [&] {
    KCell lhs = k_vcomp(sys.v_comp(f, ib), op_hcomp(sys.v_id(f.dst()), k_id_cell(sys.v(f))));
    return std::pair{lhs, k_id_cell(sys.v(f))};
  });
  return r;
}

std::vector<SpanCell> pith_cells_from(const Span& s) {
  std::vector<std::size_t> sigma(s.apex());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<SpanCell> out;
  do {
    FinFun map(s.apex(), s.apex(), sigma);
    FinFun back = map.inverse();
    out.emplace_back(s, Span(back.then(s.left), back.then(s.right)), map);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

namespace {

struct Functor {
  const PbcSystem& sys;
  KHom F(const Span& x) const { return pseudofunctor_on_span(sys, x); }
  KCell F2(const SpanCell& c) const { return pseudofunctor_on_cell(sys, c); }
  KCell Fc(const Span& x, const Span& y) const { return pseudofunctor_comp(sys, x, y); }
  KCell Fi(std::size_t n) const { return pseudofunctor_id(sys, n); }
};

}  // namespace

LawReport pseudofunctor_laws_unary(const PbcSystem& sys, const Span& s) {
  LawReport r{"pseudofunctor"};
  const Functor P{sys};
  const std::string tag = " for " + to_string(s);
  expect_equal(r, "left unit" + tag, [&] {
    KCell rhs = k_vcomp(P.Fc(id_span(s.source()), s), op_hcomp(P.Fi(s.source()), k_id_cell(P.F(s))));
    return std::pair{P.F2(span_left_unitor(s)), rhs};
  });
  expect_equal(r, "right unit" + tag, [&] {
    KCell rhs = k_vcomp(P.Fc(s, id_span(s.target())), op_hcomp(k_id_cell(P.F(s)), P.Fi(s.target())));
    return std::pair{P.F2(span_right_unitor(s)), rhs};
  });
  expect_equal(r, "identity cell" + tag, [&] { return std::pair{P.F2(identity_cell(s)), k_id_cell(P.F(s))}; });
  for (const SpanCell& eta : pith_cells_from(s)) {
    for (const SpanCell& theta : pith_cells_from(eta.dst)) {
      expect_equal(r, "functoriality on cells" + tag, [&] {
        return std::pair{P.F2(vertical_compose(eta, theta)), k_vcomp(P.F2(eta), P.F2(theta))};
      });
    }
  }
  return r;
}

LawReport pseudofunctor_laws_binary(const PbcSystem& sys, const Span& s, const Span& t) {
  LawReport r{"pseudofunctor"};
  const Functor P{sys};
  const std::string tag = " for " + to_string(s) + ", " + to_string(t);
  for (const SpanCell& eta : pith_cells_from(s)) {
    expect_equal(r, "naturality on the left" + tag, [&] {
      KCell lhs = k_vcomp(P.F2(horizontal_compose(eta, identity_cell(t))), P.Fc(eta.dst, t));
      KCell rhs = k_vcomp(P.Fc(s, t), op_hcomp(P.F2(eta), k_id_cell(P.F(t))));
      return std::pair{lhs, rhs};
    });
  }
  for (const SpanCell& eta : pith_cells_from(t)) {
    expect_equal(r, "naturality on the right" + tag, [&] {
      KCell lhs = k_vcomp(P.F2(horizontal_compose(identity_cell(s), eta)), P.Fc(s, eta.dst));
      KCell rhs = k_vcomp(P.Fc(s, t), op_hcomp(k_id_cell(P.F(s)), P.F2(eta)));
      return std::pair{lhs, rhs};
    });
  }
  return r;
}

LawReport pseudofunctor_laws_ternary(const PbcSystem& sys, const Span& s, const Span& t, const Span& w) {
  LawReport r{"pseudofunctor"};
  const Functor P{sys};
  const std::string tag = " for " + to_string(s) + ", " + to_string(t) + ", " + to_string(w);
  expect_equal(r, "associativity" + tag, [&] {
    KCell lhs = vcomp3(P.F2(span_associator(s, t, w)), P.Fc(s, compose_span(t, w)), op_hcomp(k_id_cell(P.F(s)), P.Fc(t, w)));
    KCell rhs = k_vcomp(P.Fc(compose_span(s, t), w), op_hcomp(P.Fc(s, t), k_id_cell(P.F(w))));
    return std::pair{lhs, rhs};
  });
  return r;
}

LawReport pseudofunctor_laws(const PbcSystem& sys, const Span& s, const Span& t, const Span& w) {
  LawReport r{"pseudofunctor"};
  r.merge(pseudofunctor_laws_unary(sys, s));
  r.merge(pseudofunctor_laws_binary(sys, s, t));
  r.merge(pseudofunctor_laws_ternary(sys, s, t, w));
  return r;
}

}  // namespace unbias
