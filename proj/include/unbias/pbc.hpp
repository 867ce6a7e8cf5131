#pragma once

// Pullback-compatible pairs of functors into the opposite Kleisli bicategory,
// and the pseudofunctor they induce out of spans.
//
// Orientation: a 1-cell a -> b of the opposite bicategory is a KHom b ~> a,
// composed in diagram order by op_compose. 2-cells keep their direction.
// For f : J -> K, u(f) : J -> K and v(f) : K -> J.

#include <functional>
#include <string>
#include <vector>

#include "unbias/finspan.hpp"
#include "unbias/kleisli.hpp"

namespace unbias {

// a then b, in the opposite bicategory
KHom op_compose(const KHom& a, const KHom& b);
KCell op_hcomp(const KCell& phi, const KCell& psi);
KHom op_id(std::size_t n);

struct PbcSystem {
  std::function<KHom(const FinFun&)> u;
  std::function<KHom(const FinFun&)> v;
  // u(g . f) => u(f) ; u(g)
  std::function<KCell(const FinFun& f, const FinFun& g)> u_comp;
  // v(g . f) => v(g) ; v(f)
  std::function<KCell(const FinFun& f, const FinFun& g)> v_comp;
  std::function<KCell(std::size_t)> u_id;
  std::function<KCell(std::size_t)> v_id;
  // u(right) ; v(bottom) => v(top) ; u(left)
  std::function<KCell(const Square&)> base_change;
};

// v(f)(j) = [f(j)] and u(f)(k) = the fiber over k; every structure cell is
// the unique one between linear families.
PbcSystem lambda_system();

// Fiber list of u(f) at k and the like, as plain families.
KHom lambda_u(const FinFun& f);
KHom lambda_v(const FinFun& f);
// The unique cell between the two sides of a pullback square.
KCell base_change_unique(const Square& sq);

// Canonical pullback square of a cospan: top and left are the projections.
Square pullback_square(const FinFun& right, const FinFun& bottom);

// ---------------------------------------------------------------------------
// The induced pseudofunctor on spans with invertible cells.

// v(left) ; u(right)
KHom pseudofunctor_on_span(const PbcSystem& sys, const Span& s);
// Throws NotInvertible unless the cell map is a bijection.
KCell pseudofunctor_on_cell(const PbcSystem& sys, const SpanCell& c);
// F(s;t) => F(s) ; F(t)
KCell pseudofunctor_comp(const PbcSystem& sys, const Span& s, const Span& t);
// F(id_n) => id
KCell pseudofunctor_id(const PbcSystem& sys, std::size_t n);

struct LawReport {
  explicit LawReport(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failed = 0;
  // The first few failures, for display.
  std::vector<std::string> violations;

  bool ok() const { return failed == 0; }
  void record(const std::string& violation);
  void merge(const LawReport& o);
};

// Horizontal and vertical pasting and the two unit squares, checked on every
// pair of adjacent pullback squares built from the given cospans.
LawReport pbc_laws_horizontal(const PbcSystem& sys, const FinFun& b0, const FinFun& b1, const FinFun& v2);
LawReport pbc_laws_vertical(const PbcSystem& sys, const FinFun& r0, const FinFun& r1, const FinFun& h2);
LawReport pbc_laws_units(const PbcSystem& sys, const FinFun& f);
// Pseudofunctoriality of u and v on a composable triple.
LawReport pbc_laws_functors(const PbcSystem& sys, const FinFun& f, const FinFun& g, const FinFun& h);

// Pseudofunctor laws, by the number of spans they involve: the unit laws and
// functoriality on cells; naturality of the composition cell in each argument
// against apex permutations; associativity.
LawReport pseudofunctor_laws_unary(const PbcSystem& sys, const Span& s);
LawReport pseudofunctor_laws_binary(const PbcSystem& sys, const Span& s, const Span& t);
LawReport pseudofunctor_laws_ternary(const PbcSystem& sys, const Span& s, const Span& t, const Span& w);
LawReport pseudofunctor_laws(const PbcSystem& sys, const Span& s, const Span& t, const Span& w);

// All permutations of the apex, as pith cells out of s.
std::vector<SpanCell> pith_cells_from(const Span& s);

}  // namespace unbias
