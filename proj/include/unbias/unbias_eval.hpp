#pragma once

// Unbiased tensor products indexed by spans: a span J <- A -> K sends a
// J-indexed family x to the K-indexed family of tensors of x over the fibers.

#include <string>
#include <vector>

#include "unbias/pbc.hpp"

namespace unbias {

template <SmcModel M>
struct UnbiasResult {
  // k -> labels f(a) for a in the fiber over k, ascending in a
  KHom family;
  std::vector<typename M::Obj> objects;
};

template <SmcModel M>
class Unbiased {
 public:
  using Obj = typename M::Obj;
  using Mor = typename M::Mor;
  using Family = std::vector<Obj>;
  using MorFamily = std::vector<Mor>;

  explicit Unbiased(M m, PbcSystem sys = lambda_system()) : m_(std::move(m)), sys_(std::move(sys)) {}

  const M& model() const { return m_; }
  const PbcSystem& system() const { return sys_; }

  UnbiasResult<M> eval(const Span& s, const Family& x) const {
    check_family(s.source(), x);
    KHom fam = pseudofunctor_on_span(sys_, s);
    auto psi = family_extension(m_, x);
    Family objs;
    for (const NList& xs : fam.lists) objs.push_back(psi.obj(xs));
    return {std::move(fam), std::move(objs)};
  }

  Family apply(const Span& s, const Family& x) const { return eval(s, x).objects; }

  // The functor of s on a family of morphisms h : x -> x'.
  MorFamily apply_mor(const Span& s, const Family& x, const MorFamily& h) const {
    check_family(s.source(), x);
    KHom fam = pseudofunctor_on_span(sys_, s);
    auto psi = family_extension(m_, x);
    MorFamily out;
    for (const NList& xs : fam.lists) out.push_back(psi.family_map(xs, [&](const std::size_t& j) { return h.at(j); }));
    return out;
  }

  // The image of an invertible span cell, at x.
  MorFamily cell(const SpanCell& c, const Family& x) const { return act(pseudofunctor_on_cell(sys_, c), x); }

  // (s;t)(x) -> t(s(x))
  MorFamily comp_cell(const Span& s, const Span& t, const Family& x) const {
    KCell fc = pseudofunctor_comp(sys_, s, t);
    KHom a = pseudofunctor_on_span(sys_, s);
    KHom b = pseudofunctor_on_span(sys_, t);
    auto psi = family_extension(m_, x);
    MorFamily out;
    for (std::size_t l = 0; l < b.src; ++l) out.push_back(m_.compose(psi.hom(fc.homs[l]), regroup(a, b.lists[l], psi)));
    return out;
  }

  // id(x) -> x
  MorFamily unit_cell(std::size_t n, const Family& x) const {
    check_family(n, x);
    KCell fi = pseudofunctor_id(sys_, n);
    auto psi = family_extension(m_, x);
    MorFamily out;
    for (std::size_t j = 0; j < n; ++j) out.push_back(m_.compose(psi.hom(fi.homs[j]), m_.right_unitor(x[j])));
    return out;
  }

  // Psi_x(concat of a(b) for b in bs) -> Psi_y(bs), where y(k) = Psi_x(a(k)).
  template <class Psi>
  Mor regroup(const KHom& a, const NList& bs, const Psi& psi) const {
    if (bs.empty()) return m_.id(m_.unit());
    const NList& head = a.lists.at(bs[0]);
    NList rest(bs.begin() + 1, bs.end());
    const NList tail = theta_apply(a, rest);
    return m_.compose(psi.monoidal_iso(head, tail), m_.tensor_mor(m_.id(psi.obj(head)), regroup(a, rest, psi)));
  }

 private:
  void check_family(std::size_t n, const Family& x) const {
    if (x.size() != n)
      fail(Errc::BoundaryMismatch, "family of size " + std::to_string(x.size()) + " over a set of size " + std::to_string(n));
  }

  MorFamily act(const KCell& c, const Family& x) const {
    auto psi = family_extension(m_, x);
    MorFamily out;
    for (const NHom& h : c.homs) out.push_back(psi.hom(h));
    return out;
  }

  M m_;
  PbcSystem sys_;
};

template <SmcModel M>
UnbiasResult<M> unbias_eval(const Span& s, const M& m, const std::vector<typename M::Obj>& x) {
  return Unbiased<M>(m).eval(s, x);
}

namespace detail {

template <SmcModel M>
class UnbiasedLawCheck {
 public:
  using MorFamily = typename Unbiased<M>::MorFamily;

  UnbiasedLawCheck(const Unbiased<M>& U, std::string tag) : U_(U), m_(U.model()), tag_(std::move(tag)) {}

  template <class Build>
  void check(const std::string& law, Build build) {
    ++r_.cases;
    try {
      auto [lhs, rhs] = build();
      if (lhs.size() != rhs.size()) {
        r_.record(law + tag_ + ": component count");
        return;
      }
      for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!m_.equal(lhs[i], rhs[i])) {
          r_.record(law + tag_ + " at component " + std::to_string(i));
          return;
        }
    } catch (const Error& e) {
      r_.record(law + tag_ + ": " + e.what());
    }
  }

  MorFamily seq(const MorFamily& a, const MorFamily& b) const {
    MorFamily out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(m_.compose(a[i], b.at(i)));
    return out;
  }

  LawReport report() const { return r_; }

 private:
  const Unbiased<M>& U_;
  const M& m_;
  std::string tag_;
  LawReport r_{"unbiased pseudofunctor"};
};

}  // namespace detail

// Pseudofunctor laws for the unbiased tensor, componentwise at x and decided
// with the model's equality.
template <SmcModel M>
LawReport unbiased_laws_unary(const Unbiased<M>& U, const Span& s, const std::vector<typename M::Obj>& x) {
  detail::UnbiasedLawCheck<M> c(U, " for " + to_string(s));
  c.check("left unit", [&] {
    const Span id = id_span(s.source());
    auto rhs = c.seq(U.comp_cell(id, s, x), U.apply_mor(s, U.apply(id, x), U.unit_cell(s.source(), x)));
    return std::pair{U.cell(span_left_unitor(s), x), rhs};
  });
  c.check("right unit", [&] {
    const auto sx = U.apply(s, x);
    auto rhs = c.seq(U.comp_cell(s, id_span(s.target()), x), U.unit_cell(s.target(), sx));
    return std::pair{U.cell(span_right_unitor(s), x), rhs};
  });
  for (const SpanCell& eta : pith_cells_from(s)) {
    for (const SpanCell& theta : pith_cells_from(eta.dst)) {
      c.check("functoriality on cells", [&] {
        return std::pair{U.cell(vertical_compose(eta, theta), x), c.seq(U.cell(eta, x), U.cell(theta, x))};
      });
    }
  }
  return c.report();
}

template <SmcModel M>
LawReport unbiased_laws_binary(const Unbiased<M>& U, const Span& s, const Span& t,
                               const std::vector<typename M::Obj>& x) {
  detail::UnbiasedLawCheck<M> c(U, " for " + to_string(s) + ", " + to_string(t));
  for (const SpanCell& eta : pith_cells_from(s)) {
    c.check("naturality on the left", [&] {
      auto lhs = c.seq(U.cell(horizontal_compose(eta, identity_cell(t)), x), U.comp_cell(eta.dst, t, x));
      auto rhs = c.seq(U.comp_cell(s, t, x), U.apply_mor(t, U.apply(s, x), U.cell(eta, x)));
      return std::pair{lhs, rhs};
    });
  }
  for (const SpanCell& eta : pith_cells_from(t)) {
    c.check("naturality on the right", [&] {
      auto lhs = c.seq(U.cell(horizontal_compose(identity_cell(s), eta), x), U.comp_cell(s, eta.dst, x));
      auto rhs = c.seq(U.comp_cell(s, t, x), U.cell(eta, U.apply(s, x)));
      return std::pair{lhs, rhs};
    });
  }
  return c.report();
}

template <SmcModel M>
LawReport unbiased_laws_ternary(const Unbiased<M>& U, const Span& s, const Span& t, const Span& w,
                                const std::vector<typename M::Obj>& x) {
  detail::UnbiasedLawCheck<M> c(U, " for " + to_string(s) + ", " + to_string(t) + ", " + to_string(w));
  c.check("associativity", [&] {
    const auto sx = U.apply(s, x);
    auto lhs = c.seq(c.seq(U.cell(span_associator(s, t, w), x), U.comp_cell(s, compose_span(t, w), x)),
                     U.comp_cell(t, w, sx));
    auto rhs = c.seq(U.comp_cell(compose_span(s, t), w, x), U.apply_mor(w, U.apply(t, sx), U.comp_cell(s, t, x)));
    return std::pair{lhs, rhs};
  });
  return c.report();
}

}  // namespace unbias
