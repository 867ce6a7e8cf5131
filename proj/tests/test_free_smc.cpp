#include <doctest.h>

#include "unbias/dsl.hpp"
#include "unbias/error.hpp"
#include "unbias/free_smc.hpp"
#include "unbias/generators.hpp"
#include "unbias/laws.hpp"

using namespace unbias;
using S = std::string;
using L = SList<S>;
using H = SListHom<S>;

namespace {

const ObjTerm a = ObjTerm::gen("a"), b = ObjTerm::gen("b"), c = ObjTerm::gen("c"), d = ObjTerm::gen("d");
const ObjTerm I = ObjTerm::unit();
ObjTerm T(const ObjTerm& x, const ObjTerm& y) { return ObjTerm::tensor(x, y); }
MorTerm C(const MorTerm& f, const MorTerm& g) { return MorTerm::comp(f, g); }
MorTerm X(const MorTerm& f, const MorTerm& g) { return MorTerm::tensor(f, g); }

Assignment<SListModel<S>> singletons() { return {{"a", {"a"}}, {"b", {"b"}}, {"c", {"c"}}, {"d", {"d"}}}; }

}  // namespace

TEST_CASE("eval_obj") {
  const SListModel<S> m;
  CHECK(eval_obj(I, m, singletons()).empty());
  CHECK(eval_obj(a, m, singletons()) == L{"a"});
  CHECK(eval_obj(T(a, I), m, singletons()) == L{"a"});
  CHECK_THROWS_AS(eval_obj(ObjTerm::gen("z"), m, singletons()), Error);
}

TEST_CASE("eval_mor in the list model") {
  const SListModel<S> m;
  CHECK(eval_mor(MorTerm::braid(a, b), m, singletons()) == braiding<S>({"a"}, {"b"}));
  CHECK(eval_mor(MorTerm::braid(a, b), m, singletons()).phi() == Perm({1, 0}));
  CHECK(eval_mor(MorTerm::assoc(a, b, c), m, singletons()) == H::identity({"a", "b", "c"}));
  const MorTerm f = C(MorTerm::braid(a, T(b, c)), MorTerm::braid(T(b, c), a));
  CHECK(eval_mor(C(f, MorTerm::inv(f)), m, singletons()) == H::identity({"a", "b", "c"}));
  const MorTerm g = MorTerm::braid(a, b);
  CHECK(eval_mor(C(g, MorTerm::inv(g)), m, singletons()) == H::identity({"a", "b"}));
}

TEST_CASE("type_of") {
  CHECK(type_of(MorTerm::assoc(a, b, c)).src == T(T(a, b), c));
  CHECK(type_of(MorTerm::assoc(a, b, c)).dst == T(a, T(b, c)));
  CHECK(type_of(MorTerm::left_unitor(a)).src == T(I, a));
  CHECK(type_of(MorTerm::right_unitor(a)).src == T(a, I));
  CHECK(type_of(MorTerm::inv(MorTerm::braid(a, b))).src == T(b, a));
  try {
    type_of(C(MorTerm::braid(a, b), MorTerm::braid(a, b)));
    FAIL("expected IllTyped");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IllTyped);
  }
}

TEST_CASE("normalize") {
  const MorTerm leg1 = C(MorTerm::assoc(T(a, b), c, d), MorTerm::assoc(a, b, T(c, d)));
  const MorTerm leg2 = C(C(X(MorTerm::assoc(a, b, c), MorTerm::id(d)), MorTerm::assoc(a, T(b, c), d)),
                         X(MorTerm::id(a), MorTerm::assoc(b, c, d)));
  CHECK(normalize(leg1) == H::identity({"a", "b", "c", "d"}));
  CHECK(normalize(leg2) == H::identity({"a", "b", "c", "d"}));

  const MorTerm hex1 = MorTerm::braid(a, T(b, c));
  const MorTerm hex2 = C(C(C(C(MorTerm::inv(MorTerm::assoc(a, b, c)), X(MorTerm::braid(a, b), MorTerm::id(c))),
                             MorTerm::assoc(b, a, c)),
                           X(MorTerm::id(b), MorTerm::braid(a, c))),
                         MorTerm::inv(MorTerm::assoc(b, c, a)));
  CHECK(normalize(hex1).phi() == Perm({1, 2, 0}));
  CHECK(normalize(hex2).phi() == Perm({1, 2, 0}));
  CHECK(normalize(MorTerm::id(a)) == H::identity({"a"}));
}

TEST_CASE("decide_equal") {
  const MorTerm tri1 = X(MorTerm::right_unitor(a), MorTerm::id(b));
  const MorTerm tri2 = C(MorTerm::assoc(a, I, b), X(MorTerm::id(a), MorTerm::left_unitor(b)));
  CHECK(decide_equal(tri1, tri2));
  CHECK_FALSE(decide_equal(MorTerm::braid(a, a), MorTerm::id(T(a, a))));
  CHECK(decide_equal(MorTerm::braid(a, b), MorTerm::braid(a, b)));
  CHECK(decide_equal(C(MorTerm::braid(a, b), MorTerm::braid(b, a)), MorTerm::id(T(a, b))));
  CHECK_THROWS_AS(decide_equal(MorTerm::id(a), MorTerm::id(b)), Error);
}

TEST_CASE("canonical_term") {
  const L ab{"a", "b"}, abc{"a", "b", "c"};
  CHECK(normalize(canonical_term(H::identity(abc))) == H::identity(abc));
  const H swap(ab, {"b", "a"}, Perm({1, 0}));
  CHECK(normalize(canonical_term(swap)) == swap);
  const H rev(abc, {"c", "b", "a"}, Perm({2, 1, 0}));
  CHECK(normalize(canonical_term(rev)) == rev);
  CHECK(type_of(canonical_term(rev)).src == nest(abc));
  Rng rng(9);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = uniform(rng, 0, 6);
    L xs(n);
    for (auto& l : xs) l = S(1, static_cast<char>('a' + uniform(rng, 0, 2)));
    const H f = hom_from_word(GenWord<S>{xs, random_word(rng, n, n < 2 ? 0 : 8)});
    CHECK(normalize(canonical_term(f)) == f);
  }
}

TEST_CASE("extension along lists") {
  const FreeTermModel m;
  const ObjTerm A = ObjTerm::gen("A");
  PsiExtension<FreeTermModel, std::size_t> psi(m, [&](const std::size_t&) { return A; });
  CHECK(psi.obj({}) == I);
  CHECK(psi.obj({4, 4}) == T(A, T(A, I)));

  const Assignment<FreeTermModel> x{{"a", a}, {"b", b}};
  auto px = psi_extend(x, m);
  CHECK(normalize(px.hom(H({"a", "b"}, {"b", "a"}, Perm({1, 0})))).phi() == Perm({1, 0}));

  CHECK(px.monoidal_iso({}, {"a"}) == MorTerm::inv(MorTerm::left_unitor(T(a, I))));
  const MorTerm iso = px.monoidal_iso({"a"}, {});
  CHECK(type_of(iso).src == T(a, I));
  CHECK(type_of(iso).dst == T(T(a, I), I));
  const MorTerm iso2 = px.monoidal_iso({"a", "b"}, {"b", "a"});
  CHECK(type_of(iso2).src == nest({"a", "b", "b", "a"}));
  CHECK(type_of(iso2).dst == T(nest({"a", "b"}), nest({"b", "a"})));
  CHECK(normalize(iso2) == H::identity({"a", "b", "b", "a"}));
}

TEST_CASE("bijection model agrees with normalization") {
  // every generator evaluates to a one-element set, so the permutation is phi
  Rng rng(17);
  const FinBijModel m;
  const auto names = generator_names(4);
  Assignment<FinBijModel> ones;
  for (const auto& n : names) ones[n] = 1;
  for (int s = 0; s < 300; ++s) {
    const MorTerm t = random_mor_term(rng, names, 3);
    CHECK(eval_mor(t, m, ones) == normalize(t).phi());
  }
}

TEST_CASE("shipped models satisfy the symmetric monoidal laws") {
  const LawReport r = model_suite(1);
  CHECK(r.cases > 0);
  CHECK(r.violations.empty());
  CHECK(r.ok());
}

TEST_CASE("axiom rewrites preserve meaning") {
  Rng rng(23);
  const auto names = generator_names(3);
  std::size_t rewrites = 0;
  for (int s = 0; s < 100; ++s) {
    const MorTerm t = random_mor_term(rng, names, 3);
    for (const MorTerm& u : axiom_rewrites(t)) {
      ++rewrites;
      CHECK(type_of(u).src == type_of(t).src);
      CHECK(type_of(u).dst == type_of(t).dst);
      CHECK(decide_equal(t, u));
    }
  }
  CHECK(rewrites > 100);
}
