#include <doctest.h>

#include "unbias/dsl.hpp"
#include "unbias/error.hpp"
#include "unbias/generators.hpp"
#include "unbias/laws.hpp"
#include "unbias/unbias_eval.hpp"

using namespace unbias;

namespace {

FinFun fun(std::size_t src, std::size_t dst, std::vector<std::size_t> img) { return FinFun(src, dst, std::move(img)); }
const ObjTerm A = ObjTerm::gen("A"), B = ObjTerm::gen("B"), I = ObjTerm::unit();
ObjTerm T(const ObjTerm& x, const ObjTerm& y) { return ObjTerm::tensor(x, y); }

std::vector<ObjTerm> gens(std::size_t n) {
  std::vector<ObjTerm> x;
  for (std::size_t j = 0; j < n; ++j) x.push_back(ObjTerm::gen("x" + std::to_string(j)));
  return x;
}

}  // namespace

TEST_CASE("identity span") {
  const Unbiased<FreeTermModel> U{FreeTermModel{}};
  const auto res = U.eval(id_span(2), {A, B});
  CHECK(res.objects == std::vector<ObjTerm>{T(A, I), T(B, I)});
  const auto units = U.unit_cell(2, {A, B});
  REQUIRE(units.size() == 2);
  CHECK(type_of(units[0]).src == T(A, I));
  CHECK(type_of(units[0]).dst == A);
}

TEST_CASE("binary fiber") {
  const Span s(fun(2, 1, {0, 0}), fun(2, 1, {0, 0}));
  const auto res = unbias_eval(s, FreeTermModel{}, {A});
  CHECK(res.objects == std::vector<ObjTerm>{T(A, T(A, I))});
  CHECK(render(res.objects[0]) == "(A * (A * I))");

  // the swap of the two apex points is the braiding of A with itself
  const Unbiased<FreeTermModel> U{FreeTermModel{}};
  const auto swap = U.cell(SpanCell(s, s, fun(2, 2, {1, 0})), {A});
  CHECK(normalize(swap[0]).phi() == Perm({1, 0}));
  CHECK_FALSE(decide_equal(swap[0], MorTerm::id(res.objects[0])));
}

TEST_CASE("bijection model sizes add up over fibers") {
  Rng rng(4);
  const Unbiased<FinBijModel> U{FinBijModel{}};
  for (int n = 0; n < 100; ++n) {
    const Span s = random_span(rng, uniform(rng, 1, 4), uniform(rng, 1, 4), 5);
    std::vector<std::size_t> x(s.source());
    for (auto& v : x) v = uniform(rng, 0, 3);
    const auto objs = U.apply(s, x);
    for (std::size_t k = 0; k < s.target(); ++k) {
      std::size_t total = 0;
      for (std::size_t a = 0; a < s.apex(); ++a)
        if (s.right(a) == k) total += x[s.left(a)];
      CHECK(objs[k] == total);
    }
  }
}

TEST_CASE("composition cells agree with the unique linear hom") {
  // injective left legs and distinct generators give linear normal forms,
  // where any two parallel structural maps coincide
  Rng rng(21);
  const Unbiased<FreeTermModel> U{FreeTermModel{}};
  for (int n = 0; n < 100; ++n) {
    const std::size_t j = uniform(rng, 1, 4);
    const Perm p = random_perm(rng, j);
    const Span s(fun(j, j, p.images()), random_fun(rng, j, uniform(rng, 1, 3)));
    const Span t(FinFun::identity(s.target()), random_fun(rng, s.target(), uniform(rng, 1, 3)));
    const auto x = gens(j);
    const auto cells = U.comp_cell(s, t, x);
    const auto lhs = U.apply(compose_span(s, t), x);
    const auto rhs = U.apply(t, U.apply(s, x));
    for (std::size_t l = 0; l < cells.size(); ++l) {
      const Boundary b = type_of(cells[l]);
      CHECK(b.src == lhs[l]);
      CHECK(b.dst == rhs[l]);
      const auto src = normalize_obj(b.src), dst = normalize_obj(b.dst);
      CHECK(normalize(cells[l]) == unique_hom_linear(src, dst));
    }
  }
}

TEST_CASE("unbiased laws decide true on small spans") {
  const Unbiased<FreeTermModel> U{FreeTermModel{}};
  const Span s(fun(2, 1, {0, 0}), fun(2, 2, {1, 1}));
  const Span t(fun(3, 2, {1, 1, 0}), fun(3, 1, {0, 0, 0}));
  CHECK(unbiased_laws_unary(U, s, gens(1)).ok());
  CHECK(unbiased_laws_binary(U, s, t, gens(1)).ok());
  CHECK(unbiased_laws_ternary(U, s, t, id_span(1), gens(1)).ok());
  const Unbiased<FinBijModel> V{FinBijModel{}};
  CHECK(unbiased_laws_binary(V, s, t, {2}).ok());
  const LawReport r = main_theorem_suite(2, 10, 3);
  CHECK(r.cases > 100);
  CHECK(r.violations.empty());
}

TEST_CASE("family errors") {
  const Unbiased<FreeTermModel> U{FreeTermModel{}};
  CHECK_THROWS_AS(U.eval(id_span(2), {A}), Error);
}
