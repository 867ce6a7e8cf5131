#include <doctest.h>

#include "unbias/error.hpp"
#include "unbias/finspan.hpp"
#include "unbias/generators.hpp"

using namespace unbias;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::SyntaxError;
}

FinFun fun(std::size_t src, std::size_t dst, std::vector<std::size_t> img) { return FinFun(src, dst, std::move(img)); }

// Universal property tested against one-point cones only: each compatible pair
// (x, y) must have exactly one preimage.
bool pullback_by_cones(const Square& sq) {
  for (std::size_t x = 0; x < sq.right.src(); ++x)
    for (std::size_t y = 0; y < sq.bottom.src(); ++y) {
      if (sq.right(x) != sq.bottom(y)) continue;
      std::size_t lifts = 0;
      for (std::size_t z = 0; z < sq.top.src(); ++z)
        if (sq.top(z) == x && sq.left(z) == y) ++lifts;
      if (lifts != 1) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("FinFun") {
  const FinFun f = fun(3, 2, {0, 0, 1});
  CHECK(f.fiber(0) == std::vector<std::size_t>{0, 1});
  CHECK(f.fiber(1) == std::vector<std::size_t>{2});
  CHECK_FALSE(f.is_bijective());
  CHECK(code_of([] { fun(2, 1, {0, 1}); }) == Errc::InvalidFunction);
  CHECK(code_of([] { fun(2, 1, {0}); }) == Errc::InvalidFunction);
  CHECK(code_of([&] { f.then(f); }) == Errc::TargetMismatch);
  CHECK(code_of([&] { f.inverse(); }) == Errc::NotInvertible);
  const FinFun p = fun(3, 3, {2, 0, 1});
  CHECK(p.then(p.inverse()) == FinFun::identity(3));
}

TEST_CASE("pullback") {
  const Pullback d(FinFun::identity(2), FinFun::identity(2));
  CHECK(d.apex() == 2);
  CHECK(d.p1().img() == std::vector<std::size_t>{0, 1});
  CHECK(d.p2().img() == std::vector<std::size_t>{0, 1});

  const FinFun k = fun(2, 1, {0, 0});
  const Pullback pb(k, k);
  CHECK(pb.apex() == 4);
  CHECK(pb.p1().img() == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(pb.p2().img() == std::vector<std::size_t>{0, 1, 0, 1});
  CHECK(pb.index_of(1, 0) == std::optional<std::size_t>(2));

  CHECK(Pullback(fun(0, 1, {}), fun(1, 1, {0})).apex() == 0);
  CHECK(code_of([] { Pullback(fun(1, 1, {0}), fun(1, 2, {0})); }) == Errc::TargetMismatch);

  CHECK(pb.lift(pb.p1(), pb.p2()) == FinFun::identity(4));
}

TEST_CASE("lift rejects cones that do not commute") {
  const Pullback pb(fun(2, 2, {0, 1}), fun(2, 2, {0, 1}));
  CHECK(code_of([&] { pb.lift(fun(1, 2, {0}), fun(1, 2, {1})); }) == Errc::LiftEquationFails);
}

TEST_CASE("span composition") {
  const Span s(fun(3, 2, {0, 1, 1}), fun(3, 2, {1, 0, 0}));
  const Span left = compose_span(id_span(2), s);
  CHECK(left.apex() == 3);
  CHECK(span_left_unitor(s).map.is_bijective());
  CHECK(span_right_unitor(s).map.is_bijective());

  const Span p(fun(2, 1, {0, 0}), fun(2, 1, {0, 0}));
  const Span q(fun(3, 1, {0, 0, 0}), fun(3, 1, {0, 0, 0}));
  CHECK(compose_span(p, q).apex() == 6);
  CHECK(code_of([&] { compose_span(s, p); }) == Errc::TargetMismatch);
}

TEST_CASE("associator") {
  const Span i = id_span(3);
  CHECK(span_associator(i, i, i).map == FinFun::identity(3));

  Rng rng(8);
  for (int n = 0; n < 50; ++n) {
    const Span s = random_span(rng, 2, 3, 3), t = random_span(rng, 3, 2, 3), u = random_span(rng, 2, 2, 3);
    const SpanComposite st = compose_span_detail(s, t), st_u = compose_span_detail(st.span, u);
    const SpanComposite tu = compose_span_detail(t, u), s_tu = compose_span_detail(s, tu.span);
    const FinFun m = span_associator(s, t, u).map;
    // the components in s, t and u are preserved
    CHECK(st_u.pb.p1().then(st.pb.p1()) == m.then(s_tu.pb.p1()));
    CHECK(st_u.pb.p1().then(st.pb.p2()) == m.then(s_tu.pb.p2()).then(tu.pb.p1()));
    CHECK(st_u.pb.p2() == m.then(s_tu.pb.p2()).then(tu.pb.p2()));
    CHECK(m.is_bijective());
  }
}

TEST_CASE("vertical and horizontal composition") {
  Rng rng(4);
  for (int n = 0; n < 50; ++n) {
    const Span s = random_span(rng, 2, 2, 3), t = random_span(rng, 2, 3, 3);
    const SpanCell is = identity_cell(s);
    CHECK(vertical_compose(is, is) == is);
    CHECK(horizontal_compose(is, identity_cell(t)) == identity_cell(compose_span(s, t)));
    const SpanCell a = span_left_unitor(s);
    CHECK(vertical_compose(a, invert(a)) == identity_cell(a.src));
    CHECK(is_pith(a));
  }
  const Span s(fun(1, 1, {0}), fun(1, 1, {0}));
  const Span t(fun(2, 1, {0, 0}), fun(2, 1, {0, 0}));
  CHECK(SpanCell(t, s, fun(2, 1, {0, 0})).dst == s);
  CHECK(code_of([&] { SpanCell(s, id_span(2), fun(1, 2, {0})); }) == Errc::BoundaryMismatch);
  CHECK(code_of([&] { vertical_compose(identity_cell(s), identity_cell(t)); }) == Errc::BoundaryMismatch);
}

TEST_CASE("transposes") {
  const FinFun f = fun(3, 2, {0, 0, 1});
  CHECK(transpose_span(lower_shriek(f)) == upper_star(f));
  const Span s(fun(3, 2, {0, 1, 1}), fun(3, 4, {3, 0, 0}));
  CHECK(transpose_span(transpose_span(s)) == s);
  CHECK(transpose_span(id_span(3)) == id_span(3));
}

TEST_CASE("adjunction cells") {
  const AdjunctionCells idc = adjunction_cells(FinFun::identity(3));
  CHECK(idc.unit.map.is_bijective());
  CHECK(idc.counit.map.is_bijective());
  const AdjunctionCells k = adjunction_cells(fun(2, 1, {0, 0}));
  CHECK(k.unit.dst.apex() == 4);
  CHECK(k.unit.map.img() == std::vector<std::size_t>{0, 3});
}

TEST_CASE("pullback squares") {
  const Square ids{FinFun::identity(2), FinFun::identity(2), FinFun::identity(2), FinFun::identity(2)};
  CHECK(is_pullback_square(ids));
  CHECK(base_change_1cell(ids).map == FinFun::identity(2));

  // rows bijective: c0 = c1 = 2 swapped over c2 = c3 = 1
  const FinFun sw = fun(2, 2, {1, 0});
  const Square rows{sw, fun(2, 1, {0, 0}), fun(2, 1, {0, 0}), FinFun::identity(1)};
  CHECK(is_pullback_square(rows));
  CHECK(base_change_1cell(rows).map.is_bijective());

  const Square not_pb{fun(1, 2, {0}), fun(1, 1, {0}), fun(2, 1, {0, 0}), FinFun::identity(1)};
  CHECK_FALSE(is_pullback_square(not_pb));
  CHECK(code_of([&] { base_change_1cell(not_pb); }) == Errc::NotPullbackSquare);

  // exhaustive comparison with the cone oracle on small commuting squares
  for (std::size_t n0 = 0; n0 <= 3; ++n0)
    for (std::size_t n1 = 0; n1 <= 2; ++n1)
      for (std::size_t n2 = 0; n2 <= 2; ++n2)
        for (std::size_t n3 = 1; n3 <= 2; ++n3)
          for (const FinFun& right : all_funs(n1, n3))
            for (const FinFun& bottom : all_funs(n2, n3))
              for (const FinFun& top : all_funs(n0, n1))
                for (const FinFun& left : all_funs(n0, n2)) {
                  if (top.then(right) != left.then(bottom)) continue;
                  const Square sq{top, left, right, bottom};
                  CHECK(is_pullback_square(sq) == pullback_by_cones(sq));
                  if (is_pullback_square(sq)) CHECK(base_change_1cell(sq).map.is_bijective());
                }
}
