#include "unbias/laws.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "unbias/dsl.hpp"
#include "unbias/generators.hpp"
#include "unbias/unbias_eval.hpp"

namespace unbias {

namespace {

void expect(LawReport& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok) r.record(what);
}

template <class F>
void guarded(LawReport& r, const std::string& what, F body) {
  try {
    body();
  } catch (const Error& e) {
    ++r.cases;
    r.record(what + ": " + e.what());
  }
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Word length of each permutation, by breadth-first search from the identity.
std::map<Perm, std::size_t> cayley_distances(std::size_t n) {
  std::map<Perm, std::size_t> dist{{Perm::identity(n), 0}};
  std::deque<Perm> queue{Perm::identity(n)};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    const std::size_t d = dist[p];
    for (std::size_t l = 0; l + 1 < n; ++l) {
      Perm q = p * Perm::transposition(l, n);
      if (dist.emplace(q, d + 1).second) queue.push_back(q);
    }
  }
  return dist;
}

void check_reduced_word(LawReport& r, const Perm& p, const std::map<Perm, std::size_t>& dist) {
  const std::size_t n = p.size();
  const Word w = reduced_word(p);
  const std::string tag = " at " + to_string(p);
  expect(r, word_to_perm(w, n) == p, "round trip" + tag);
  expect(r, w.size() == inversion_length(p), "length equals inversions" + tag);
  expect(r, w.size() == dist.at(p), "length equals word metric" + tag);
  expect(r, is_reduced(w, n), "reduced" + tag);
}

}  // namespace

LawReport coxeter_suite(std::size_t exhaustive_n, std::size_t random_n, std::size_t samples, std::uint64_t seed) {
  LawReport r("coxeter");
  std::map<std::size_t, std::map<Perm, std::size_t>> dist;
  for (std::size_t n = 0; n <= std::max(exhaustive_n, random_n); ++n) dist[n] = cayley_distances(n);

  for (std::size_t n = 0; n <= exhaustive_n; ++n)
    for (const Perm& p : all_perms(n)) check_reduced_word(r, p, dist[n]);

  for (std::size_t n = 2; n <= std::max<std::size_t>(exhaustive_n + 1, 2); ++n) {
    const CoxeterMatrixA a{n - 1};
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) {
        const unsigned m = a.entry(i, j);
        Word w;
        for (unsigned k = 1; k <= m; ++k) {
          w.push_back(i);
          w.push_back(j);
          const bool id = word_to_perm(w, n).is_identity();
          expect(r, id == (k == m),
                 "order of s" + std::to_string(i) + " s" + std::to_string(j) + " in S_" + std::to_string(n));
        }
      }
  }

  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = uniform(rng, 1, random_n);
    check_reduced_word(r, random_perm(rng, n), dist[n]);
    if (n >= 2) {
      const Word w = random_word(rng, n, uniform(rng, 0, 12));
      const Perm p = word_to_perm(w, n);
      expect(r, is_reduced(w, n) == (dist[n].at(p) == w.size()), "is_reduced agrees with the word metric");
    }
  }
  return r;
}

LawReport exchange_suite(std::size_t exhaustive_n) {
  LawReport r("exchange");
  for (std::size_t n = 1; n <= exhaustive_n; ++n) {
    // Depth-first over reduced words; img tracks the permutation of the current word.
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    Word w;
    std::size_t checked_errors = 0;
    std::vector<std::vector<std::size_t>> prefix, suffix;
    auto visit = [&](auto&& self) -> void {
      // image vectors of the first j letters and of the letters from j on
      prefix.assign(w.size() + 1, std::vector<std::size_t>(n));
      suffix.assign(w.size() + 1, std::vector<std::size_t>(n));
      std::iota(prefix[0].begin(), prefix[0].end(), 0);
      std::iota(suffix[w.size()].begin(), suffix[w.size()].end(), 0);
      for (std::size_t j = 0; j < w.size(); ++j) {
        prefix[j + 1] = prefix[j];
        std::swap(prefix[j + 1][w[j]], prefix[j + 1][w[j] + 1]);
      }
      for (std::size_t j = w.size(); j-- > 0;) {
        suffix[j] = suffix[j + 1];
        // left multiplication by t_l swaps the values l and l+1
        for (auto& v : suffix[j]) v = v == w[j] ? w[j] + 1 : v == w[j] + 1 ? w[j] : v;
      }
      for (std::size_t b = 0; b + 1 < n; ++b) {
        // t_b on the left swaps the values b and b+1; it shortens w iff b+1 comes before b.
        const auto pos_b = std::find(img.begin(), img.end(), b) - img.begin();
        const auto pos_b1 = std::find(img.begin(), img.end(), b + 1) - img.begin();
        if (pos_b1 < pos_b) {
          guarded(r, "exchange_step", [&] {
            const std::size_t i = exchange_step(w, b, n);
            // target = t_b . w; erasing letter j gives prefix[j] * suffix[j+1]
            std::vector<std::size_t> target = img;
            std::swap(target[static_cast<std::size_t>(pos_b)], target[static_cast<std::size_t>(pos_b1)]);
            bool minimal = true, hit_i = false;
            for (std::size_t j = 0; j <= i && j < w.size(); ++j) {
              std::vector<std::size_t> erased(n);
              for (std::size_t k = 0; k < n; ++k) erased[k] = prefix[j][suffix[j + 1][k]];
              const bool hit = erased == target;
              if (j < i && hit) minimal = false;
              if (j == i) hit_i = hit;
            }
            expect(r, hit_i, "exchange index erases correctly");
            expect(r, minimal, "exchange index is least");
          });
        } else if (checked_errors < 64) {
          ++checked_errors;
          bool threw = false;
          try {
            exchange_step(w, b, n);
          } catch (const Error& e) {
            threw = e.code() == Errc::NoReductionPossible;
          }
          expect(r, threw, "NoReductionPossible when b lengthens w");
        }
      }
      for (std::size_t l = 0; l + 1 < n; ++l) {
        if (img[l] > img[l + 1]) continue;
        std::swap(img[l], img[l + 1]);
        w.push_back(l);
        self(self);
        w.pop_back();
        std::swap(img[l], img[l + 1]);
      }
    };
    visit(visit);
  }
  return r;
}

namespace {

// One Coxeter relation applied somewhere in w, if any applies.
Word coxeter_rewrite(Rng& rng, Word w, std::size_t n) {
  const std::size_t kind = uniform(rng, 0, 2);
  if (kind == 0 || w.size() < 2) {
    const std::size_t at = uniform(rng, 0, w.size());
    const std::size_t l = uniform(rng, 0, n - 2);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(at), {l, l});
    return w;
  }
  std::vector<std::size_t> starts(w.size());
  std::iota(starts.begin(), starts.end(), 0);
  std::shuffle(starts.begin(), starts.end(), rng);
  for (std::size_t i : starts) {
    if (kind == 1 && i + 1 < w.size() && (w[i] > w[i + 1] ? w[i] - w[i + 1] : w[i + 1] - w[i]) >= 2) {
      std::swap(w[i], w[i + 1]);
      return w;
    }
    if (kind == 2 && i + 2 < w.size() && w[i] == w[i + 2] &&
        (w[i] > w[i + 1] ? w[i] - w[i + 1] : w[i + 1] - w[i]) == 1) {
      const std::size_t a = w[i], b = w[i + 1];
      w[i] = b;
      w[i + 1] = a;
      w[i + 2] = b;
      return w;
    }
  }
  return w;
}

}  // namespace

LawReport faithfulness_suite(std::size_t max_len, std::size_t per_len, std::uint64_t seed) {
  LawReport r("faithfulness");
  Rng rng(seed);
  for (std::size_t n = 0; n <= max_len; ++n)
    for (std::size_t s = 0; s < per_len; ++s) {
      const std::size_t len = n < 2 ? 0 : uniform(rng, 0, 2 * n + 2);
      const std::size_t alphabet = n == 0 ? 1 : uniform(rng, 1, n);
      SList<std::string> start(n);
      for (auto& l : start) l = std::string(1, static_cast<char>('a' + uniform(rng, 0, alphabet - 1)));
      GenWord<std::string> w{start, random_word(rng, n, len)};

      // Track where each original index ends up by swapping indices directly.
      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      for (std::size_t p : w.positions) std::swap(idx[p], idx[p + 1]);
      SList<std::string> dst(n);
      for (std::size_t i = 0; i < n; ++i) dst[i] = start[idx[i]];

      const SListHom<std::string> f = hom_from_word(w);
      expect(r, f.dst() == dst && f.phi().images() == idx, "hom_from_word matches index tracking");
      expect(r, hom_from_word(word_from_hom(f)) == f, "word_from_hom then hom_from_word is the identity");
      expect(r, word_from_hom(f).positions.size() <= len, "canonical word is no longer");

      if (n >= 2) {
        GenWord<std::string> related{start, coxeter_rewrite(rng, w.positions, n)};
        expect(r, hom_equal(hom_from_word(related), f), "Coxeter-related words give equal homs");
      }

      if (n >= 2) {
        // one more swap of two equal labels keeps the endpoints but not the hom
        const std::size_t l = uniform(rng, 0, n - 2);
        if (dst[l] == dst[l + 1]) {
          GenWord<std::string> longer = w;
          longer.positions.push_back(l);
          expect(r, !hom_equal(hom_from_word(longer), f), "a swap of equal labels is not the identity");
        }
      }

      GenWord<std::string> other{start, random_word(rng, n, n < 2 ? 0 : uniform(rng, 0, 2 * n + 2))};
      const SListHom<std::string> g = hom_from_word(other);
      if (g.dst() == f.dst())
        expect(r, hom_equal(f, g) == (word_to_perm(w.positions, n) == word_to_perm(other.positions, n)),
               "homs agree iff permutations agree");
    }
  return r;
}

LawReport coherence_suite(std::size_t terms, std::size_t gens, std::uint64_t seed) {
  LawReport r("coherence");
  Rng rng(seed);
  const auto names = generator_names(gens);
  for (std::size_t s = 0; s < terms; ++s) {
    const MorTerm t = random_mor_term(rng, names, 3);
    for (const MorTerm& u : axiom_rewrites(t))
      guarded(r, "rewrite of " + render(t), [&] { expect(r, decide_equal(t, u), render(t) + " vs " + render(u)); });

    const ObjTerm x = random_obj_term(rng, names, 2), y = random_obj_term(rng, names, 2);
    const ObjTerm z = random_obj_term(rng, names, 2), w = random_obj_term(rng, names, 2);
    for (const ObjTerm& a : {ObjTerm::tensor(ObjTerm::tensor(ObjTerm::tensor(x, y), z), w),
                             ObjTerm::tensor(ObjTerm::tensor(x, ObjTerm::unit()), y),
                             ObjTerm::tensor(x, ObjTerm::tensor(y, z))})
      for (const MorTerm& u : axiom_rewrites(MorTerm::id(a)))
        guarded(r, "axiom instance", [&] { expect(r, decide_equal(MorTerm::id(a), u), "instance " + render(u)); });
  }
  for (const std::string& a : names) {
    const ObjTerm g = ObjTerm::gen(a);
    expect(r, !decide_equal(MorTerm::braid(g, g), MorTerm::id(ObjTerm::tensor(g, g))), "braid on a*a is not the identity");
    expect(r, decide_equal(MorTerm::comp(MorTerm::braid(g, g), MorTerm::braid(g, g)), MorTerm::id(ObjTerm::tensor(g, g))),
           "braid on a*a squares to the identity");
  }
  return r;
}

LawReport braiding_suite(std::size_t max_total, std::uint64_t seed) {
  LawReport r("braiding");
  Rng rng(seed);
  auto linear = [](std::size_t from, std::size_t n) {
    SList<std::size_t> xs(n);
    std::iota(xs.begin(), xs.end(), from);
    return xs;
  };
  auto random_list = [&](std::size_t n) {
    SList<std::size_t> xs(n);
    for (auto& l : xs) l = uniform(rng, 0, 2);
    return xs;
  };
  for (std::size_t p = 0; p <= max_total; ++p)
    for (std::size_t q = 0; p + q <= max_total; ++q) {
      const std::string tag = " for shape " + std::to_string(p) + "+" + std::to_string(q);
      expect(r, braiding_recursive(linear(0, p), linear(p, q)) == braiding(linear(0, p), linear(p, q)),
             "recursive braiding on distinct labels" + tag);
      for (int k = 0; k < 4; ++k) {
        const auto x = random_list(p), y = random_list(q);
        expect(r, braiding_recursive(x, y) == braiding(x, y), "recursive braiding on repeated labels" + tag);
      }
    }
  using Hom = SListHom<std::size_t>;
  const std::size_t small = std::min<std::size_t>(max_total, 6);
  for (std::size_t p = 0; p <= small; ++p)
    for (std::size_t q = 0; p + q <= small; ++q)
      for (std::size_t s = 0; p + q + s <= small; ++s) {
        const auto x = linear(0, p), y = linear(p, q), z = linear(p + q, s);
        const Hom id_x = Hom::identity(x), id_y = Hom::identity(y), id_z = Hom::identity(z);
        expect(r, compose(tensor_hom(braiding(x, y), id_z), tensor_hom(id_y, braiding(x, z))) ==
                      braiding(x, tensor_obj(y, z)),
               "hexagon on the right");
        expect(r, compose(tensor_hom(id_x, braiding(y, z)), tensor_hom(braiding(x, z), id_y)) ==
                      braiding(tensor_obj(x, y), z),
               "hexagon on the left");
        expect(r, compose(braiding(x, y), braiding(y, x)) == Hom::identity(tensor_obj(x, y)), "symmetry");
        // naturality against random automorphisms of lists with repeats
        const auto u = random_list(p), v = random_list(q);
        auto random_hom = [&](const SList<std::size_t>& src) {
          const Perm pr = random_perm(rng, src.size());
          SList<std::size_t> d(src.size());
          for (std::size_t i = 0; i < src.size(); ++i) d[i] = src[pr[i]];
          return Hom(src, d, pr);
        };
        const Hom g = random_hom(u), h = random_hom(v);
        expect(r, compose(tensor_hom(g, h), braiding(g.dst(), h.dst())) == compose(braiding(u, v), tensor_hom(h, g)),
               "braiding naturality");
      }
  return r;
}

LawReport model_suite(std::uint64_t seed) {
  LawReport r("models");
  Rng rng(seed);
  {
    using M = SListModel<std::string>;
    const M m;
    std::vector<M::Obj> objs{{}, {"a"}, {"a", "b"}, {"b", "a", "a"}};
    std::vector<Arrow<M>> arrows;
    for (const auto& o : objs) {
      const Perm p = random_perm(rng, o.size());
      SList<std::string> d(o.size());
      for (std::size_t i = 0; i < o.size(); ++i) d[i] = o[p[i]];
      arrows.push_back({SListHom<std::string>(o, d, p), o, d});
    }
    arrows.push_back({braiding<std::string>({"a"}, {"b", "c"}), {"a", "b", "c"}, {"b", "c", "a"}});
    r.merge(smc_model_laws(m, objs, arrows));
  }
  {
    using M = FinBijModel;
    const M m;
    std::vector<M::Obj> objs{0, 1, 2, 3};
    std::vector<Arrow<M>> arrows;
    for (std::size_t n : {0, 1, 2, 3, 3}) arrows.push_back({random_perm(rng, n), n, n});
    r.merge(smc_model_laws(m, objs, arrows));
  }
  {
    using M = FreeTermModel;
    const M m;
    const ObjTerm a = ObjTerm::gen("a"), b = ObjTerm::gen("b"), I = ObjTerm::unit();
    std::vector<M::Obj> objs{I, a, ObjTerm::tensor(a, b), ObjTerm::tensor(b, ObjTerm::tensor(I, a))};
    std::vector<Arrow<M>> arrows;
    for (const MorTerm& f : {MorTerm::braid(a, b), MorTerm::id(a), MorTerm::inv(MorTerm::right_unitor(b)),
                             MorTerm::assoc(a, I, b)}) {
      const Boundary bd = type_of(f);
      arrows.push_back({f, bd.src, bd.dst});
    }
    r.merge(smc_model_laws(m, objs, arrows));
  }
  return r;
}

namespace {

// Every composable chain of `len` spans through sets of size at most `sets`,
// with apexes of size at most `apex`.
template <class Visit>
void for_each_chain(std::size_t len, std::size_t sets, std::size_t apex, Visit visit) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Span>> cache;
  auto spans = [&](std::size_t a, std::size_t b) -> const std::vector<Span>& {
    auto it = cache.find({a, b});
    if (it == cache.end()) it = cache.emplace(std::pair{a, b}, all_spans(a, b, apex)).first;
    return it->second;
  };
  std::vector<std::size_t> sizes(len + 1, 0);
  std::vector<const Span*> chain(len);
  auto fill = [&](auto&& self, std::size_t i) -> void {
    if (i == len) {
      std::vector<Span> c;
      for (const Span* s : chain) c.push_back(*s);
      visit(c);
      return;
    }
    for (const Span& s : spans(sizes[i], sizes[i + 1])) {
      chain[i] = &s;
      self(self, i + 1);
    }
  };
  for (;;) {
    fill(fill, 0);
    std::size_t i = 0;
    while (i <= len && ++sizes[i] > sets) sizes[i++] = 0;
    if (i > len) break;
  }
}

Span random_chain_span(Rng& rng, std::size_t a, std::size_t b, std::size_t max_apex) {
  return random_span(rng, a, b, max_apex);
}

std::vector<Span> random_chain(Rng& rng, std::size_t len, std::size_t max_size) {
  std::vector<std::size_t> sizes(len + 1);
  for (auto& s : sizes) s = uniform(rng, 1, max_size);
  std::vector<Span> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(random_chain_span(rng, sizes[i], sizes[i + 1], max_size));
  return out;
}

// A random span with a random cell into it: (s . m) => s for m : A' -> A.
SpanCell random_cell_into(Rng& rng, const Span& s, std::size_t max_apex) {
  const std::size_t n = s.apex() == 0 ? 0 : uniform(rng, 0, max_apex);
  const FinFun m = random_fun(rng, n, s.apex());
  return SpanCell(Span(m.then(s.left), m.then(s.right)), s, m);
}

SpanCell random_pith_cell_from(Rng& rng, const Span& s) {
  const FinFun map(s.apex(), s.apex(), random_perm(rng, s.apex()).images());
  const FinFun back = map.inverse();
  return SpanCell(s, Span(back.then(s.left), back.then(s.right)), map);
}

void span_pentagon(LawReport& r, const Span& s, const Span& t, const Span& u, const Span& v) {
  guarded(r, "pentagon", [&] {
    const SpanCell lhs = vertical_compose(
        vertical_compose(horizontal_compose(span_associator(s, t, u), identity_cell(v)),
                         span_associator(s, compose_span(t, u), v)),
        horizontal_compose(identity_cell(s), span_associator(t, u, v)));
    const SpanCell rhs = vertical_compose(span_associator(compose_span(s, t), u, v), span_associator(s, t, compose_span(u, v)));
    expect(r, lhs == rhs, "pentagon for " + to_string(s) + ", " + to_string(t) + ", " + to_string(u) + ", " + to_string(v));
  });
}

void span_triangle(LawReport& r, const Span& s, const Span& t) {
  guarded(r, "triangle", [&] {
    const SpanCell lhs = vertical_compose(span_associator(s, id_span(s.target()), t),
                                          horizontal_compose(identity_cell(s), span_left_unitor(t)));
    const SpanCell rhs = horizontal_compose(span_right_unitor(s), identity_cell(t));
    expect(r, lhs == rhs, "triangle for " + to_string(s) + ", " + to_string(t));
  });
}

void span_interchange(LawReport& r, const SpanCell& a, const SpanCell& a2, const SpanCell& b, const SpanCell& b2) {
  guarded(r, "interchange", [&] {
    const SpanCell lhs = horizontal_compose(vertical_compose(a, a2), vertical_compose(b, b2));
    const SpanCell rhs = vertical_compose(horizontal_compose(a, b), horizontal_compose(a2, b2));
    expect(r, lhs == rhs, "interchange");
  });
}

void span_adjunction(LawReport& r, const FinFun& f) {
  guarded(r, "adjunction", [&] {
    const AdjunctionCells adj = adjunction_cells(f);
    const Span L = lower_shriek(f), R = upper_star(f);
    const SpanCell first = vertical_compose(
        vertical_compose(vertical_compose(invert(span_left_unitor(L)), horizontal_compose(adj.unit, identity_cell(L))),
                         span_associator(L, R, L)),
        vertical_compose(horizontal_compose(identity_cell(L), adj.counit), span_right_unitor(L)));
    expect(r, first == identity_cell(L), "left triangle identity for " + to_string(f));
    const SpanCell second = vertical_compose(
        vertical_compose(vertical_compose(invert(span_right_unitor(R)), horizontal_compose(identity_cell(R), adj.unit)),
                         invert(span_associator(R, L, R))),
        vertical_compose(horizontal_compose(adj.counit, identity_cell(R)), span_left_unitor(R)));
    expect(r, second == identity_cell(R), "right triangle identity for " + to_string(f));
  });
}

void span_associator_naturality(LawReport& r, const SpanCell& a, const SpanCell& b, const SpanCell& c) {
  guarded(r, "associator naturality", [&] {
    const SpanCell lhs = vertical_compose(horizontal_compose(horizontal_compose(a, b), c),
                                          span_associator(a.dst, b.dst, c.dst));
    const SpanCell rhs = vertical_compose(span_associator(a.src, b.src, c.src),
                                          horizontal_compose(a, horizontal_compose(b, c)));
    expect(r, lhs == rhs, "associator naturality");
  });
}

}  // namespace

LawReport span_suite(std::size_t exhaustive, std::size_t random_size, std::size_t samples, std::uint64_t seed) {
  LawReport r("span bicategory");
  const std::size_t e = exhaustive;
  const std::size_t e2 = std::min<std::size_t>(e, 2);
  for (std::size_t a = 0; a <= e; ++a)
    for (std::size_t c = 0; c <= e; ++c)
      for (const FinFun& f : all_funs(a, c)) span_adjunction(r, f);
  for_each_chain(2, e, e, [&](const std::vector<Span>& ch) { span_triangle(r, ch[0], ch[1]); });
  for_each_chain(4, e2, e2, [&](const std::vector<Span>& ch) { span_pentagon(r, ch[0], ch[1], ch[2], ch[3]); });
  if (e > e2)
    for_each_chain(4, e, 1, [&](const std::vector<Span>& ch) { span_pentagon(r, ch[0], ch[1], ch[2], ch[3]); });
  for_each_chain(2, e, e2, [&](const std::vector<Span>& ch) {
    for (const SpanCell& a : pith_cells_from(ch[0]))
      for (const SpanCell& a2 : pith_cells_from(a.dst))
        for (const SpanCell& b : pith_cells_from(ch[1]))
          for (const SpanCell& b2 : pith_cells_from(b.dst)) span_interchange(r, a, a2, b, b2);
  });

  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto ch = random_chain(rng, 4, random_size);
    span_pentagon(r, ch[0], ch[1], ch[2], ch[3]);
    span_triangle(r, ch[0], ch[1]);
    span_adjunction(r, random_fun(rng, uniform(rng, 0, random_size), uniform(rng, 1, random_size)));
    // general cells b2 : S'' => S', b : S' => S stacked on each leg
    const SpanCell a2 = random_cell_into(rng, ch[0], random_size);
    const SpanCell a1 = random_cell_into(rng, a2.src, random_size);
    const SpanCell b2 = random_cell_into(rng, ch[1], random_size);
    const SpanCell b1 = random_cell_into(rng, b2.src, random_size);
    span_interchange(r, a1, a2, b1, b2);
    span_associator_naturality(r, random_pith_cell_from(rng, ch[0]), random_pith_cell_from(rng, ch[1]),
                               random_pith_cell_from(rng, ch[2]));
  }
  return r;
}

namespace {

std::vector<NList> all_lists(std::size_t labels, std::size_t max_len) {
  std::vector<NList> out{{}};
  std::vector<NList> layer{{}};
  for (std::size_t len = 1; len <= max_len && labels > 0; ++len) {
    std::vector<NList> next;
    for (const NList& xs : layer)
      for (std::size_t l = 0; l < labels; ++l) {
        NList ys = xs;
        ys.push_back(l);
        next.push_back(ys);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

template <class Visit>
void for_each_family(std::size_t src, std::size_t dst, std::size_t max_len, Visit visit) {
  const auto lists = all_lists(dst, max_len);
  std::vector<std::size_t> pick(src, 0);
  for (;;) {
    std::vector<NList> ls;
    for (std::size_t i : pick) ls.push_back(lists[i]);
    visit(KHom(src, dst, std::move(ls)));
    std::size_t i = 0;
    while (i < src && ++pick[i] == lists.size()) pick[i++] = 0;
    if (i == src) break;
  }
}

std::size_t occurrences(const NList& xs, std::size_t l) { return static_cast<std::size_t>(std::count(xs.begin(), xs.end(), l)); }

void check_composite_multiset(LawReport& r, const KHom& f, const KHom& g) {
  const KHom fg = k_compose(f, g);
  for (std::size_t j = 0; j < f.src; ++j) {
    // count each (occurrence in f(j), occurrence in g(that label)) pair
    Multiset<std::size_t> brute;
    for (std::size_t k : f.lists[j])
      for (std::size_t l : g.lists[k]) brute.add(l);
    const auto formula = composite_multiset(f, g, j);
    expect(r, formula == underlying_multiset(fg.lists[j]) && formula == brute,
           "composite multiset at " + std::to_string(j) + " for " + to_string(f) + " ; " + to_string(g));
  }
}

void check_duality(LawReport& r, const KHom& x) {
  const KHom d = duality(x);
  bool ok = d.src == x.dst && d.dst == x.src;
  for (std::size_t j = 0; ok && j < x.src; ++j)
    for (std::size_t k = 0; k < x.dst; ++k)
      if (occurrences(d.lists[k], j) != occurrences(x.lists[j], k)) ok = false;
  expect(r, ok, "duality multiplicities for " + to_string(x));
  const KHom dd = duality(d);
  bool same = true;
  for (std::size_t j = 0; j < x.src; ++j) same = same && underlying_multiset(dd.lists[j]) == underlying_multiset(x.lists[j]);
  expect(r, same, "double dual has the same multisets for " + to_string(x));
}

KCell random_kcell_from(Rng& rng, const KHom& f) {
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

LawReport kleisli_suite(std::size_t exhaustive, std::size_t random_size, std::size_t samples, std::uint64_t seed) {
  LawReport r("kleisli");
  const std::size_t e = exhaustive;
  const std::size_t e2 = std::min<std::size_t>(e, 2);
  for (std::size_t i = 0; i <= e; ++i)
    for (std::size_t k = 0; k <= e; ++k) for_each_family(i, k, e, [&](const KHom& x) { check_duality(r, x); });
  // all pairs through sets of size at most 2, and single-index f through sets up to e
  for (std::size_t i = 0; i <= e2; ++i)
    for (std::size_t j = 0; j <= e; ++j)
      for (std::size_t k = 0; k <= e; ++k) {
        if (i > 1 && std::max(j, k) > e2) continue;
        std::vector<KHom> gs;
        for_each_family(j, k, e, [&](const KHom& g) { gs.push_back(g); });
        for_each_family(i, j, e, [&](const KHom& f) {
          for (const KHom& g : gs) check_composite_multiset(r, f, g);
        });
      }

  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t a = uniform(rng, 0, random_size), b = uniform(rng, 1, random_size);
    const std::size_t c = uniform(rng, 1, random_size), d = uniform(rng, 1, random_size);
    const KHom f = random_khom(rng, a, b, 5), g = random_khom(rng, b, c, 5), h = random_khom(rng, c, d, 5);
    check_composite_multiset(r, f, g);
    check_duality(r, f);
    expect(r, k_compose(k_compose(f, g), h) == k_compose(f, k_compose(g, h)), "strict associativity");
    expect(r, k_compose(k_id(a), f) == f && k_compose(f, k_id(b)) == f, "strict unit laws");
    guarded(r, "cells", [&] {
      const KCell phi = random_kcell_from(rng, f), phi2 = random_kcell_from(rng, phi.dst);
      const KCell psi = random_kcell_from(rng, g), psi2 = random_kcell_from(rng, psi.dst);
      expect(r, k_hcomp(k_vcomp(phi, phi2), k_vcomp(psi, psi2)) == k_vcomp(k_hcomp(phi, psi), k_hcomp(phi2, psi2)),
             "interchange");
      expect(r, k_hcomp(k_id_cell(f), k_id_cell(g)) == k_id_cell(k_compose(f, g)), "identity cells");
      const KCell chi = random_kcell_from(rng, h);
      expect(r, k_hcomp(k_hcomp(phi, psi), chi) == k_hcomp(phi, k_hcomp(psi, chi)), "horizontal associativity");
      expect(r, duality_cell(k_vcomp(phi, phi2)) == k_vcomp(duality_cell(phi), duality_cell(phi2)),
             "duality is functorial on cells");
      for (std::size_t i = 0; i < f.src; ++i) {
        const NHom& p1 = phi.homs[i];
        const NHom& p2 = phi2.homs[i];
        expect(r, theta_apply_hom(g, compose(p1, p2)) == compose(theta_apply_hom(g, p1), theta_apply_hom(g, p2)),
               "theta is functorial");
        expect(r, theta_apply(g, tensor_obj(f.lists[i], p1.dst())) ==
                      tensor_obj(theta_apply(g, f.lists[i]), theta_apply(g, p1.dst())),
               "theta preserves concatenation");
      }
    });
    guarded(r, "linear duality", [&] {
      const KHom x = random_linear_khom(rng, a, b);
      const KCell eta = random_kcell_from(rng, x);
      const KCell cmp_src = k_unique_cell(x, duality(duality(x)));
      const KCell cmp_dst = k_unique_cell(eta.dst, duality(duality(eta.dst)));
      expect(r, k_vcomp(eta, cmp_dst) == k_vcomp(cmp_src, duality_cell(duality_cell(eta))),
             "double dual comparison is natural");
    });
  }
  return r;
}

LawReport pbc_suite(std::size_t exhaustive, std::size_t random_size, std::size_t samples, std::uint64_t seed) {
  LawReport r("pbc");
  const PbcSystem sys = lambda_system();
  const std::size_t e = exhaustive;
  const std::size_t e2 = std::min<std::size_t>(e, 2);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<FinFun>> funs;
  auto F = [&](std::size_t a, std::size_t b) -> const std::vector<FinFun>& {
    auto it = funs.find({a, b});
    if (it == funs.end()) it = funs.emplace(std::pair{a, b}, all_funs(a, b)).first;
    return it->second;
  };
  for (std::size_t a = 0; a <= e; ++a)
    for (std::size_t b = 0; b <= e; ++b)
      for (const FinFun& f : F(a, b)) {
        r.merge(pbc_laws_units(sys, f));
        const KHom u = sys.u(f), v = sys.v(f);
        bool linear = true;
        for (const NList& xs : u.lists) linear = linear && is_linear(xs);
        for (const NList& xs : v.lists) linear = linear && is_linear(xs);
        expect(r, linear, "u and v are linear for " + to_string(f));
        expect(r, pseudofunctor_on_span(sys, transpose_span(lower_shriek(f))) == v, "transpose of f_! goes to v(f)");
      }
  // Chains of three maps through sets of size at most e.
  for (std::size_t a = 0; a <= e; ++a)
    for (std::size_t b = 0; b <= e; ++b)
      for (std::size_t c = 0; c <= e; ++c)
        for (std::size_t d = 0; d <= e; ++d)
          for (const FinFun& f : F(a, b))
            for (const FinFun& g : F(b, c))
              for (const FinFun& h : F(c, d)) {
                r.merge(pbc_laws_functors(sys, f, g, h));
              }
  for (std::size_t d = 0; d <= e; ++d)
    for (std::size_t ee = 0; ee <= e; ++ee)
      for (std::size_t f = 0; f <= e; ++f)
        for (std::size_t c = 0; c <= e; ++c)
          for (const FinFun& x : F(d, ee))
            for (const FinFun& y : F(ee, f))
              for (const FinFun& z : F(c, f)) {
                r.merge(pbc_laws_horizontal(sys, x, y, z));
                r.merge(pbc_laws_vertical(sys, x, y, z));
                guarded(r, "base change linearity", [&] {
                  const Square sq = pullback_square(z, y);
                  const KCell bc = sys.base_change(sq);
                  bool linear = true;
                  for (std::size_t k = 0; k < bc.src.src; ++k) {
                    linear = linear && is_linear(bc.src.lists[k]) && is_linear(bc.dst.lists[k]);
                    Multiset<std::size_t> fiber;
                    for (std::size_t i : z.fiber(y(k))) fiber.add(i);
                    linear = linear && underlying_multiset(bc.src.lists[k]) == fiber;
                  }
                  expect(r, linear, "base change boundaries are linear fibers");
                });
              }
  for_each_chain(1, e, e, [&](const std::vector<Span>& ch) { r.merge(pseudofunctor_laws_unary(sys, ch[0])); });
  for_each_chain(2, e, e2, [&](const std::vector<Span>& ch) { r.merge(pseudofunctor_laws_binary(sys, ch[0], ch[1])); });
  for_each_chain(3, e2, e2 == 0 ? 0 : 1, [&](const std::vector<Span>& ch) {
    r.merge(pseudofunctor_laws_ternary(sys, ch[0], ch[1], ch[2]));
  });

  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto n = [&] { return uniform(rng, 1, random_size); };
    const std::size_t d = n(), ee = n(), f = n(), c = n();
    const FinFun x = random_fun(rng, d, ee), y = random_fun(rng, ee, f), z = random_fun(rng, c, f);
    r.merge(pbc_laws_horizontal(sys, x, y, z));
    r.merge(pbc_laws_vertical(sys, x, y, z));
    r.merge(pbc_laws_units(sys, x));
    r.merge(pbc_laws_functors(sys, x, y, random_fun(rng, f, n())));
    const auto ch = random_chain(rng, 3, std::min<std::size_t>(random_size, 3));
    r.merge(pseudofunctor_laws(sys, ch[0], ch[1], ch[2]));
  }
  return r;
}

LawReport main_theorem_suite(std::size_t exhaustive, std::size_t samples, std::uint64_t seed) {
  LawReport r("unbiased tensor");
  const Unbiased<FreeTermModel> U{FreeTermModel{}};
  const std::size_t e = exhaustive;
  const std::size_t e2 = std::min<std::size_t>(e, 2);
  auto family = [](std::size_t n) {
    std::vector<ObjTerm> x;
    for (std::size_t j = 0; j < n; ++j) x.push_back(ObjTerm::gen("x" + std::to_string(j)));
    return x;
  };
  for_each_chain(1, e, e, [&](const std::vector<Span>& ch) {
    const Span& s = ch[0];
    const auto x = family(s.source());
    guarded(r, "evaluation", [&] {
      const auto res = unbias_eval(s, FreeTermModel{}, x);
      for (std::size_t k = 0; k < s.target(); ++k) {
        SList<std::string> expected;
        Multiset<std::string> fiber;
        for (std::size_t a = 0; a < s.apex(); ++a)
          if (s.right(a) == k) {
            expected.push_back("x" + std::to_string(s.left(a)));
            fiber.add("x" + std::to_string(s.left(a)));
          }
        const auto got = normalize_obj(res.objects[k]);
        expect(r, underlying_multiset(got) == fiber, "fiber multiset at " + std::to_string(k) + " for " + to_string(s));
        expect(r, got == expected, "fiber order at " + std::to_string(k) + " for " + to_string(s));
      }
    });
    r.merge(unbiased_laws_unary(U, s, x));
  });
  for_each_chain(2, e, e2, [&](const std::vector<Span>& ch) {
    r.merge(unbiased_laws_binary(U, ch[0], ch[1], family(ch[0].source())));
  });
  for_each_chain(3, e2, e2 == 0 ? 0 : 1, [&](const std::vector<Span>& ch) {
    r.merge(unbiased_laws_ternary(U, ch[0], ch[1], ch[2], family(ch[0].source())));
  });
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto ch = random_chain(rng, 3, std::max<std::size_t>(e, 1));
    r.merge(unbiased_laws_binary(U, ch[0], ch[1], family(ch[0].source())));
    r.merge(unbiased_laws_ternary(U, ch[0], ch[1], ch[2], family(ch[0].source())));
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"coxeter", "exchange", "faithfulness", "coherence", "braiding", "models", "span", "kleisli", "pbc", "main"};
}

LawReport run_suite(const std::string& name, std::size_t max_size, std::uint64_t seed) {
  const std::size_t n = max_size;
  if (name == "coxeter") return coxeter_suite(n, n + 2, 1000, seed);
  if (name == "exchange") return exchange_suite(n);
  if (name == "faithfulness") return faithfulness_suite(n, 1000, seed);
  if (name == "coherence") return coherence_suite(1000, std::max<std::size_t>(n, 1), seed);
  if (name == "braiding") return braiding_suite(n, seed);
  if (name == "models") return model_suite(seed);
  if (name == "span") return span_suite(n, n + 2, 1000, seed);
  if (name == "kleisli") return kleisli_suite(n, n + 1, 1000, seed);
  if (name == "pbc") return pbc_suite(n, n + 2, 200, seed);
  if (name == "main") return main_theorem_suite(n, 100, seed);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace unbias
