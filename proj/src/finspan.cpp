#include "unbias/finspan.hpp"

#include "unbias/error.hpp"

namespace unbias {

FinFun::FinFun(std::size_t src, std::size_t dst, std::vector<std::size_t> img)
    : src_(src), dst_(dst), img_(std::move(img)) {
  if (img_.size() != src_) fail(Errc::InvalidFunction, "image vector of length " + std::to_string(img_.size()));
  for (std::size_t v : img_)
    if (v >= dst_) fail(Errc::InvalidFunction, "value " + std::to_string(v) + " outside target " + std::to_string(dst_));
}

FinFun FinFun::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  return FinFun(n, n, std::move(img));
}

FinFun FinFun::then(const FinFun& g) const {
  if (dst_ != g.src_) fail(Errc::TargetMismatch, to_string(*this) + " then " + unbias::to_string(g));
  std::vector<std::size_t> img(src_);
  for (std::size_t i = 0; i < src_; ++i) img[i] = g.img_[img_[i]];
  return FinFun(src_, g.dst_, std::move(img));
}

bool FinFun::is_bijective() const {
  if (src_ != dst_) return false;
  std::vector<bool> hit(dst_, false);
  for (std::size_t v : img_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

FinFun FinFun::inverse() const {
  if (!is_bijective()) fail(Errc::NotInvertible, unbias::to_string(*this));
  std::vector<std::size_t> img(src_);
  for (std::size_t i = 0; i < src_; ++i) img[img_[i]] = i;
  return FinFun(dst_, src_, std::move(img));
}

std::vector<std::size_t> FinFun::fiber(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < src_; ++i)
    if (img_[i] == k) out.push_back(i);
  return out;
}

std::string to_string(const FinFun& f) {
  std::string out = std::to_string(f.src()) + "->" + std::to_string(f.dst()) + " [";
  for (std::size_t i = 0; i < f.src(); ++i) out += (i ? "," : "") + std::to_string(f(i));
  return out + "]";
}

Span::Span(FinFun l, FinFun r) : left(std::move(l)), right(std::move(r)) {
  if (left.src() != right.src()) fail(Errc::BoundaryMismatch, "legs have different sources");
}

std::string to_string(const Span& s) { return "(" + to_string(s.left) + " | " + to_string(s.right) + ")"; }

SpanCell::SpanCell(Span s, Span d, FinFun m) : src(std::move(s)), dst(std::move(d)), map(std::move(m)) {
  if (map.src() != src.apex() || map.dst() != dst.apex() || src.source() != dst.source() ||
      src.target() != dst.target())
    fail(Errc::BoundaryMismatch, "cell map does not fit the spans");
  if (!(map.then(dst.left) == src.left) || !(map.then(dst.right) == src.right))
    fail(Errc::BoundaryMismatch, "cell map does not commute with the legs");
}

Pullback::Pullback(const FinFun& f, const FinFun& g) : nb_(g.src()), p1_(FinFun::identity(0)), p2_(FinFun::identity(0)) {
  if (f.dst() != g.dst()) fail(Errc::TargetMismatch, to_string(f) + " vs " + to_string(g));
  std::vector<std::size_t> as, bs;
  index_.assign(f.src() * g.src(), SIZE_MAX);
  for (std::size_t a = 0; a < f.src(); ++a)
    for (std::size_t b = 0; b < g.src(); ++b)
      if (f(a) == g(b)) {
        index_[a * nb_ + b] = as.size();
        as.push_back(a);
        bs.push_back(b);
      }
  const std::size_t n = as.size();
  p1_ = FinFun(n, f.src(), std::move(as));
  p2_ = FinFun(n, g.src(), std::move(bs));
}

std::optional<std::size_t> Pullback::index_of(std::size_t a, std::size_t b) const {
  if (a >= p1_.dst() || b >= p2_.dst()) return std::nullopt;
  std::size_t i = index_[a * nb_ + b];
  if (i == SIZE_MAX) return std::nullopt;
  return i;
}

FinFun Pullback::lift(const FinFun& q1, const FinFun& q2) const {
  if (q1.src() != q2.src() || q1.dst() != p1_.dst() || q2.dst() != p2_.dst())
    fail(Errc::LiftEquationFails, "cone does not fit the cospan");
  std::vector<std::size_t> img(q1.src());
  for (std::size_t x = 0; x < q1.src(); ++x) {
    auto i = index_of(q1(x), q2(x));
    if (!i) fail(Errc::LiftEquationFails, "cone does not commute at " + std::to_string(x));
    img[x] = *i;
  }
  return FinFun(q1.src(), apex(), std::move(img));
}

Pullback pullback(const FinFun& f, const FinFun& g) { return Pullback(f, g); }

Span id_span(std::size_t n) { return Span(FinFun::identity(n), FinFun::identity(n)); }

SpanComposite compose_span_detail(const Span& s, const Span& t) {
  Pullback pb(s.right, t.left);
  Span span(pb.p1().then(s.left), pb.p2().then(t.right));
  return {std::move(span), std::move(pb)};
}

Span compose_span(const Span& s, const Span& t) { return compose_span_detail(s, t).span; }

SpanCell identity_cell(const Span& s) { return SpanCell(s, s, FinFun::identity(s.apex())); }

SpanCell span_associator(const Span& s, const Span& t, const Span& u) {
  SpanComposite st = compose_span_detail(s, t);
  SpanComposite st_u = compose_span_detail(st.span, u);
  SpanComposite tu = compose_span_detail(t, u);
  SpanComposite s_tu = compose_span_detail(s, tu.span);
  const FinFun& x = st_u.pb.p1();
  FinFun to_s = x.then(st.pb.p1());
  FinFun to_tu = tu.pb.lift(x.then(st.pb.p2()), st_u.pb.p2());
  return SpanCell(st_u.span, s_tu.span, s_tu.pb.lift(to_s, to_tu));
}

SpanCell span_left_unitor(const Span& s) {
  SpanComposite c = compose_span_detail(id_span(s.source()), s);
  return SpanCell(c.span, s, c.pb.p2());
}

SpanCell span_right_unitor(const Span& s) {
  SpanComposite c = compose_span_detail(s, id_span(s.target()));
  return SpanCell(c.span, s, c.pb.p1());
}

StructuralCells structural_cells(const Span& s, const Span& t, const Span& u) {
  return {span_associator(s, t, u), span_left_unitor(s), span_right_unitor(s)};
}

SpanCell vertical_compose(const SpanCell& c1, const SpanCell& c2) {
  if (!(c1.dst == c2.src)) fail(Errc::BoundaryMismatch, "vertical composite of non-adjacent cells");
  return SpanCell(c1.src, c2.dst, c1.map.then(c2.map));
}

SpanCell horizontal_compose(const SpanCell& c1, const SpanCell& c2) {
  if (c1.src.target() != c2.src.source()) fail(Errc::BoundaryMismatch, "horizontal composite of non-adjacent cells");
  SpanComposite from = compose_span_detail(c1.src, c2.src);
  SpanComposite to = compose_span_detail(c1.dst, c2.dst);
  FinFun m = to.pb.lift(from.pb.p1().then(c1.map), from.pb.p2().then(c2.map));
  return SpanCell(from.span, to.span, m);
}

SpanCell invert(const SpanCell& c) { return SpanCell(c.dst, c.src, c.map.inverse()); }

bool is_pith(const SpanCell& c) { return c.map.is_bijective(); }

Span transpose_span(const Span& s) { return Span(s.right, s.left); }

Span lower_shriek(const FinFun& f) { return Span(FinFun::identity(f.src()), f); }
Span upper_star(const FinFun& f) { return Span(f, FinFun::identity(f.src())); }

AdjunctionCells adjunction_cells(const FinFun& f) {
  SpanComposite up = compose_span_detail(lower_shriek(f), upper_star(f));
  const FinFun id = FinFun::identity(f.src());
  SpanCell unit(id_span(f.src()), up.span, up.pb.lift(id, id));
  SpanComposite down = compose_span_detail(upper_star(f), lower_shriek(f));
  SpanCell counit(down.span, id_span(f.dst()), down.pb.p1().then(f));
  return {std::move(unit), std::move(counit)};
}

namespace {

// The comparison map from the square's corner into the canonical pullback.
std::optional<FinFun> pullback_comparison(const Square& sq, const Pullback& pb) {
  if (sq.top.src() != sq.left.src() || sq.top.dst() != sq.right.src() || sq.left.dst() != sq.bottom.src() ||
      sq.right.dst() != sq.bottom.dst())
    fail(Errc::NotPullbackSquare, "square edges do not meet");
  if (!(sq.left.then(sq.bottom) == sq.top.then(sq.right))) return std::nullopt;
  FinFun cmp = pb.lift(sq.left, sq.top);
  if (cmp.src() != cmp.dst() || !cmp.is_bijective()) return std::nullopt;
  return cmp;
}

}  // namespace

bool is_pullback_square(const Square& sq) {
  Pullback pb(sq.bottom, sq.right);
  return pullback_comparison(sq, pb).has_value();
}

SpanCell base_change_1cell(const Square& sq) {
  SpanComposite from = compose_span_detail(lower_shriek(sq.bottom), upper_star(sq.right));
  auto cmp = pullback_comparison(sq, from.pb);
  if (!cmp) fail(Errc::NotPullbackSquare, "corner is not the pullback of the cospan");
  SpanComposite to = compose_span_detail(upper_star(sq.left), lower_shriek(sq.top));
  const FinFun back = cmp->inverse();
  return SpanCell(from.span, to.span, to.pb.lift(back, back));
}

}  // namespace unbias
