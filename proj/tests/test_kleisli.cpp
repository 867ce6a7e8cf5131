#include <doctest.h>

#include "unbias/error.hpp"
#include "unbias/free_smc.hpp"
#include "unbias/generators.hpp"
#include "unbias/kleisli.hpp"

using namespace unbias;

namespace {

// a random automorphism cell on each list of f
KCell shuffle_cell(Rng& rng, const KHom& f) {
  std::vector<NHom> hs;
  std::vector<NList> ls;
  for (const NList& xs : f.lists) {
    const Perm p = random_perm(rng, xs.size());
    NList d(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) d[i] = xs[p[i]];
    hs.emplace_back(xs, d, p);
    ls.push_back(d);
  }
  return KCell(f, KHom(f.src, f.dst, ls), hs);
}

}  // namespace

TEST_CASE("theta") {
  const KHom g(2, 3, {{0, 1}, {2}});
  CHECK(theta_apply(g, {0, 1}) == NList{0, 1, 2});
  const NHom swap({0, 1}, {1, 0}, Perm({1, 0}));
  const NHom t = theta_apply_hom(g, swap);
  CHECK(t.dst() == NList{2, 0, 1});
  CHECK(t.phi() == Perm({2, 0, 1}));
  CHECK(theta_apply(g, {}).empty());
  CHECK(theta_apply_hom(g, NHom::identity({})) == NHom::identity({}));
  CHECK(theta_apply(k_id(3), {2, 0, 2}) == NList{2, 0, 2});
  CHECK(theta_apply(g, {1}) == g.lists[1]);
  CHECK_THROWS_AS(theta_apply(g, {2}), Error);
}

TEST_CASE("theta respects composition") {
  Rng rng(31);
  for (int s = 0; s < 200; ++s) {
    const std::size_t a = uniform(rng, 1, 4), b = uniform(rng, 1, 4), c = uniform(rng, 1, 4);
    const KHom g = random_khom(rng, a, b, 3), h = random_khom(rng, b, c, 3);
    NList xs(uniform(rng, 0, 5));
    for (auto& l : xs) l = uniform(rng, 0, a - 1);
    CHECK(theta_apply(k_compose(g, h), xs) == theta_apply(h, theta_apply(g, xs)));
  }
}

TEST_CASE("k_compose") {
  const KHom f(1, 1, {{0, 0}});
  const KHom g(1, 1, {{0}});
  CHECK(k_compose(f, k_id(1)) == f);
  CHECK(k_compose(f, g).lists[0] == NList{0, 0});
  const KHom empty(0, 2, {});
  CHECK(k_compose(empty, KHom(2, 1, {{0}, {}})).lists.empty());
  CHECK_THROWS_AS(k_compose(f, KHom(2, 1, {{0}, {0}})), Error);
}

TEST_CASE("k_hcomp") {
  const KHom f(1, 2, {{0, 1}});
  const KHom g(2, 3, {{0, 1}, {2}});
  CHECK(k_hcomp(k_id_cell(f), k_id_cell(g)) == k_id_cell(k_compose(f, g)));
  // swap inside the block of label 0 only
  const KHom g2(2, 3, {{1, 0}, {2}});
  const KCell psi(g, g2, {NHom({0, 1}, {1, 0}, Perm({1, 0})), NHom::identity({2})});
  const KCell h = k_hcomp(k_id_cell(f), psi);
  CHECK(h.homs[0].phi() == Perm({1, 0, 2}));

  Rng rng(12);
  for (int s = 0; s < 200; ++s) {
    const std::size_t a = uniform(rng, 0, 3), b = uniform(rng, 1, 3), c = uniform(rng, 1, 3);
    const KHom x = random_khom(rng, a, b, 3), y = random_khom(rng, b, c, 3);
    const KCell p = shuffle_cell(rng, x), p2 = shuffle_cell(rng, p.dst);
    const KCell q = shuffle_cell(rng, y), q2 = shuffle_cell(rng, q.dst);
    CHECK(k_hcomp(k_vcomp(p, p2), k_vcomp(q, q2)) == k_vcomp(k_hcomp(p, q), k_hcomp(p2, q2)));
    CHECK(k_vcomp(p, k_invert(p)) == k_id_cell(x));
  }
}

TEST_CASE("composite_multiset") {
  const KHom f(1, 1, {{0, 0}});
  const KHom g(1, 1, {{0}});
  CHECK(composite_multiset(f, g, 0).count(0) == 2);
  CHECK(composite_multiset(KHom(1, 1, {{}}), g, 0).size() == 0);
  const KHom f2(1, 2, {{0, 1}});
  const KHom g2(2, 1, {{0}, {0}});
  CHECK(composite_multiset(f2, g2, 0).count(0) == 2);
  CHECK(composite_multiset(f2, g2, 0).size() == 2);
}

TEST_CASE("duality") {
  const KHom x(2, 1, {{0}, {0}});
  CHECK(duality(x).lists[0] == NList{0, 1});
  const KHom empty(3, 2, {{}, {}, {}});
  CHECK(duality(empty) == KHom(2, 3, {{}, {}}));
  const KHom y(2, 3, {{2, 0, 2}, {2}});
  const KHom dy = duality(y);
  CHECK(dy.lists[0] == NList{0});
  CHECK(dy.lists[1].empty());
  CHECK(dy.lists[2] == NList{0, 0, 1});
}

TEST_CASE("duality_cell on linear families") {
  const KHom x(2, 3, {{0, 2}, {1}});
  const KHom x2(2, 3, {{2, 0}, {1}});
  const KCell eta(x, x2, {NHom({0, 2}, {2, 0}, Perm({1, 0})), NHom::identity({1})});
  const KCell d = duality_cell(eta);
  CHECK(d.src == duality(x));
  CHECK(d.dst == duality(x2));
  CHECK(duality_cell(k_id_cell(x)) == k_id_cell(duality(x)));
}

namespace {

using Free = FreeTermModel;

LaxFunctor<Free, Free> identity_functor() {
  const Free m;
  return {[](const ObjTerm& x) { return x; }, [](const MorTerm& f) { return f; }, m.id(m.unit()),
          [m](const ObjTerm& x, const ObjTerm& y) { return m.id(m.tensor(x, y)); }};
}

}  // namespace

TEST_CASE("lax functors and the naturality cell") {
  const Free m;
  const std::vector<ObjTerm> x{ObjTerm::gen("p"), ObjTerm::gen("q")};
  const LaxFunctor<Free, Free> F = identity_functor();
  CHECK_NOTHROW(check_lax_laws(F, m, m, x));
  const KHom f(3, 2, {{0, 1}, {}, {1, 1, 0}});
  const auto cells = naturality_cell(F, m, m, f, x);
  REQUIRE(cells.size() == 3);
  for (std::size_t j = 0; j < cells.size(); ++j) {
    CHECK(normalize(cells[j]).phi().is_identity());
  }
  CHECK(cells[1] == F.unit_cmp);

  // braiding as the comparison breaks symmetry
  const FinBijModel b;
  LaxFunctor<FinBijModel, FinBijModel> bad{[](std::size_t n) { return n; }, [](const Perm& p) { return p; }, b.id(0),
                                          [b](std::size_t p, std::size_t q) { return b.braid(p, q); }};
  try {
    check_lax_laws(bad, b, b, {1, 2});
    FAIL("expected a violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LaxLawViolation);
  }
}
