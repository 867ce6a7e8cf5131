#pragma once

// Spans of finite sets, their pullback composition, and maps of spans.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace unbias {

class FinFun {
 public:
  FinFun(std::size_t src, std::size_t dst, std::vector<std::size_t> img);  // throws InvalidFunction

  static FinFun identity(std::size_t n);

  std::size_t src() const { return src_; }
  std::size_t dst() const { return dst_; }
  std::size_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::size_t>& img() const { return img_; }

  // g after this; throws TargetMismatch unless dst() == g.src()
  FinFun then(const FinFun& g) const;
  bool is_bijective() const;
  FinFun inverse() const;  // throws NotInvertible
  // Indices mapping to k, ascending.
  std::vector<std::size_t> fiber(std::size_t k) const;

  friend bool operator==(const FinFun&, const FinFun&) = default;

 private:
  std::size_t src_;
  std::size_t dst_;
  std::vector<std::size_t> img_;
};

std::string to_string(const FinFun& f);

// source <- apex -> target
struct Span {
  FinFun left;
  FinFun right;

  Span(FinFun l, FinFun r);  // throws BoundaryMismatch unless the legs share a source

  std::size_t apex() const { return left.src(); }
  std::size_t source() const { return left.dst(); }
  std::size_t target() const { return right.dst(); }

  friend bool operator==(const Span&, const Span&) = default;
};

std::string to_string(const Span& s);

// A map of apexes commuting with both legs.
struct SpanCell {
  Span src;
  Span dst;
  FinFun map;

  SpanCell(Span s, Span d, FinFun m);  // throws BoundaryMismatch

  friend bool operator==(const SpanCell&, const SpanCell&) = default;
};

// Pairs (a,b) with f(a) = g(b), in lexicographic order.
class Pullback {
 public:
  Pullback(const FinFun& f, const FinFun& g);  // throws TargetMismatch

  std::size_t apex() const { return p1_.src(); }
  const FinFun& p1() const { return p1_; }
  const FinFun& p2() const { return p2_; }
  std::optional<std::size_t> index_of(std::size_t a, std::size_t b) const;
  // The induced map from a commuting cone; throws LiftEquationFails.
  FinFun lift(const FinFun& q1, const FinFun& q2) const;

 private:
  std::size_t nb_;
  FinFun p1_;
  FinFun p2_;
  std::vector<std::size_t> index_;
};

Pullback pullback(const FinFun& f, const FinFun& g);

Span id_span(std::size_t n);

struct SpanComposite {
  Span span;
  Pullback pb;
};

SpanComposite compose_span_detail(const Span& s, const Span& t);
Span compose_span(const Span& s, const Span& t);

SpanCell identity_cell(const Span& s);
// (s;t);u => s;(t;u)
SpanCell span_associator(const Span& s, const Span& t, const Span& u);
// id;s => s
SpanCell span_left_unitor(const Span& s);
// s;id => s
SpanCell span_right_unitor(const Span& s);

struct StructuralCells {
  SpanCell assoc;
  SpanCell lunitor;
  SpanCell runitor;
};

StructuralCells structural_cells(const Span& s, const Span& t, const Span& u);

SpanCell vertical_compose(const SpanCell& c1, const SpanCell& c2);
SpanCell horizontal_compose(const SpanCell& c1, const SpanCell& c2);
SpanCell invert(const SpanCell& c);
bool is_pith(const SpanCell& c);

Span transpose_span(const Span& s);
// f_! = (id, f) and f^* = (f, id)
Span lower_shriek(const FinFun& f);
Span upper_star(const FinFun& f);

struct AdjunctionCells {
  SpanCell unit;    // id => f_! ; f^*
  SpanCell counit;  // f^* ; f_! => id
};

AdjunctionCells adjunction_cells(const FinFun& f);

// c0 -top-> c1, c0 -left-> c2, c1 -right-> c3, c2 -bottom-> c3
struct Square {
  FinFun top;
  FinFun left;
  FinFun right;
  FinFun bottom;
};

bool is_pullback_square(const Square& sq);
// bottom_! ; right^* => left^* ; top_!
SpanCell base_change_1cell(const Square& sq);  // throws NotPullbackSquare

}  // namespace unbias
