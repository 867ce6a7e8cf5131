#pragma once

// Law suites over exhaustive small instances and seeded random ones. Each
// returns a report whose failure count must be zero.

#include <cstdint>
#include <string>
#include <vector>

#include "unbias/free_smc.hpp"
#include "unbias/pbc.hpp"

namespace unbias {

template <SmcModel M>
struct Arrow {
  typename M::Mor f;
  typename M::Obj src;
  typename M::Obj dst;
};

// Symmetric monoidal category axioms of a model on sample objects, plus
// naturality of the braiding and associator against sample arrows.
template <SmcModel M>
LawReport smc_model_laws(const M& m, const std::vector<typename M::Obj>& objs, const std::vector<Arrow<M>>& arrows) {
  LawReport r("model axioms");
  auto expect = [&](bool ok, const std::string& law) {
    ++r.cases;
    if (!ok) r.record(law);
  };
  const auto I = m.unit();
  auto T = [&](const auto& x, const auto& y) { return m.tensor(x, y); };
  auto C = [&](const auto& f, const auto& g) { return m.compose(f, g); };
  auto X = [&](const auto& f, const auto& g) { return m.tensor_mor(f, g); };
  expect(m.equal(m.left_unitor(I), m.right_unitor(I)), "unitors agree on the unit");
  for (const auto& x : objs) {
    expect(m.equal(C(m.left_unitor(x), m.left_unitor_inv(x)), m.id(T(I, x))), "left unitor inverse");
    expect(m.equal(C(m.right_unitor(x), m.right_unitor_inv(x)), m.id(T(x, I))), "right unitor inverse");
    for (const auto& y : objs) {
      expect(m.equal(C(m.braid(x, y), m.braid(y, x)), m.id(T(x, y))), "symmetry");
      expect(m.equal(C(m.braid(x, y), m.braid_inv(x, y)), m.id(T(x, y))), "braid inverse");
      expect(m.equal(C(m.assoc(x, I, y), X(m.id(x), m.left_unitor(y))), X(m.right_unitor(x), m.id(y))), "triangle");
      for (const auto& z : objs) {
        expect(m.equal(C(m.assoc(x, y, z), m.assoc_inv(x, y, z)), m.id(T(T(x, y), z))), "associator inverse");
        auto h1 = C(C(m.assoc(x, y, z), m.braid(x, T(y, z))), m.assoc(y, z, x));
        auto h2 = C(C(X(m.braid(x, y), m.id(z)), m.assoc(y, x, z)), X(m.id(y), m.braid(x, z)));
        expect(m.equal(h1, h2), "hexagon");
        for (const auto& w : objs) {
          auto p1 = C(m.assoc(T(x, y), z, w), m.assoc(x, y, T(z, w)));
          auto p2 = C(C(X(m.assoc(x, y, z), m.id(w)), m.assoc(x, T(y, z), w)), X(m.id(x), m.assoc(y, z, w)));
          expect(m.equal(p1, p2), "pentagon");
        }
      }
    }
  }
  for (const auto& a : arrows)
    for (const auto& b : arrows) {
      expect(m.equal(C(X(a.f, b.f), m.braid(a.dst, b.dst)), C(m.braid(a.src, b.src), X(b.f, a.f))), "braid naturality");
      expect(m.equal(C(a.f, m.id(a.dst)), a.f) && m.equal(C(m.id(a.src), a.f), a.f), "identity");
      for (const auto& c : arrows)
        expect(m.equal(C(X(X(a.f, b.f), c.f), m.assoc(a.dst, b.dst, c.dst)),
                       C(m.assoc(a.src, b.src, c.src), X(a.f, X(b.f, c.f)))),
               "associator naturality");
    }
  return r;
}

LawReport coxeter_suite(std::size_t exhaustive_n, std::size_t random_n, std::size_t samples, std::uint64_t seed);
// exchange_step on every reduced word of every permutation up to exhaustive_n.
LawReport exchange_suite(std::size_t exhaustive_n);
LawReport faithfulness_suite(std::size_t max_len, std::size_t per_len, std::uint64_t seed);
LawReport coherence_suite(std::size_t terms, std::size_t gens, std::uint64_t seed);
LawReport braiding_suite(std::size_t max_total, std::uint64_t seed);
LawReport model_suite(std::uint64_t seed);
LawReport span_suite(std::size_t exhaustive, std::size_t random_size, std::size_t samples, std::uint64_t seed);
LawReport kleisli_suite(std::size_t exhaustive, std::size_t random_size, std::size_t samples, std::uint64_t seed);
LawReport pbc_suite(std::size_t exhaustive, std::size_t random_size, std::size_t samples, std::uint64_t seed);
LawReport main_theorem_suite(std::size_t exhaustive, std::size_t samples, std::uint64_t seed);

std::vector<std::string> suite_names();
// Scales the suite's instance sizes by max_size; throws std::invalid_argument for unknown names.
LawReport run_suite(const std::string& name, std::size_t max_size, std::uint64_t seed);

}  // namespace unbias
