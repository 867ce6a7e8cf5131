#include "unbias/kleisli.hpp"

#include <map>

namespace unbias {

KHom::KHom(std::size_t s, std::size_t d, std::vector<NList> ls) : src(s), dst(d), lists(std::move(ls)) {
  if (lists.size() != src) fail(Errc::LabelOutOfRange, "family has " + std::to_string(lists.size()) + " lists");
  for (const NList& xs : lists)
    for (std::size_t l : xs)
      if (l >= dst) fail(Errc::LabelOutOfRange, "label " + std::to_string(l) + " outside " + std::to_string(dst));
}

std::string to_string(const KHom& f) {
  std::string out = std::to_string(f.src) + "~>" + std::to_string(f.dst) + " {";
  for (std::size_t i = 0; i < f.src; ++i) out += (i ? " " : "") + std::to_string(i) + ":" + to_string(f.lists[i]);
  return out + "}";
}

KCell::KCell(KHom s, KHom d, std::vector<NHom> hs) : src(std::move(s)), dst(std::move(d)), homs(std::move(hs)) {
  if (src.src != dst.src || src.dst != dst.dst || homs.size() != src.src)
    fail(Errc::BoundaryMismatch, "cell between families of different shape");
  for (std::size_t i = 0; i < homs.size(); ++i)
    if (!(homs[i].src() == src.lists[i]) || !(homs[i].dst() == dst.lists[i]))
      fail(Errc::BoundaryMismatch, "component " + std::to_string(i) + " has the wrong boundary");
}

NList theta_apply(const KHom& g, const NList& xs) {
  NList out;
  for (std::size_t l : xs) {
    if (l >= g.src) fail(Errc::LabelOutOfRange, "label " + std::to_string(l));
    out.insert(out.end(), g.lists[l].begin(), g.lists[l].end());
  }
  return out;
}

namespace {

std::vector<std::size_t> offsets(const KHom& g, const NList& xs) {
  std::vector<std::size_t> off(xs.size());
  std::size_t acc = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    off[i] = acc;
    acc += g.lists[xs[i]].size();
  }
  return off;
}

}  // namespace

NHom theta_apply_hom(const KHom& g, const NHom& f) {
  NList from = theta_apply(g, f.src());
  NList to = theta_apply(g, f.dst());
  const auto off1 = offsets(g, f.src());
  const auto off2 = offsets(g, f.dst());
  std::vector<std::size_t> img(to.size());
  for (std::size_t i = 0; i < f.dst().size(); ++i)
    for (std::size_t t = 0; t < g.lists[f.dst()[i]].size(); ++t) img[off2[i] + t] = off1[f.phi()[i]] + t;
  return NHom(std::move(from), std::move(to), Perm(std::move(img)));
}

NHom theta_whisker(const KCell& psi, const NList& xs) {
  std::vector<std::size_t> img;
  NList from, to;
  for (std::size_t l : xs) {
    if (l >= psi.homs.size()) fail(Errc::LabelOutOfRange, "label " + std::to_string(l));
    const NHom& h = psi.homs[l];
    const std::size_t base = img.size();
    for (std::size_t i = 0; i < h.dst().size(); ++i) img.push_back(base + h.phi()[i]);
    from.insert(from.end(), h.src().begin(), h.src().end());
    to.insert(to.end(), h.dst().begin(), h.dst().end());
  }
  return NHom(std::move(from), std::move(to), Perm(std::move(img)));
}

KHom k_id(std::size_t n) {
  std::vector<NList> ls(n);
  for (std::size_t i = 0; i < n; ++i) ls[i] = {i};
  return KHom(n, n, std::move(ls));
}

KHom k_compose(const KHom& f, const KHom& g) {
  if (f.dst != g.src) fail(Errc::BoundaryMismatch, "composite of " + to_string(f) + " and " + to_string(g));
  std::vector<NList> ls;
  ls.reserve(f.src);
  for (const NList& xs : f.lists) ls.push_back(theta_apply(g, xs));
  return KHom(f.src, g.dst, std::move(ls));
}

KCell k_id_cell(const KHom& f) {
  std::vector<NHom> hs;
  for (const NList& xs : f.lists) hs.push_back(NHom::identity(xs));
  return KCell(f, f, std::move(hs));
}

KCell k_vcomp(const KCell& a, const KCell& b) {
  if (!(a.dst == b.src)) fail(Errc::BoundaryMismatch, to_string(a.dst) + " vs " + to_string(b.src));
  std::vector<NHom> hs;
  for (std::size_t i = 0; i < a.homs.size(); ++i) hs.push_back(compose(a.homs[i], b.homs[i]));
  return KCell(a.src, b.dst, std::move(hs));
}

KCell k_hcomp(const KCell& phi, const KCell& psi) {
  KHom from = k_compose(phi.src, psi.src);
  KHom to = k_compose(phi.dst, psi.dst);
  std::vector<NHom> hs;
  for (std::size_t i = 0; i < phi.homs.size(); ++i)
    hs.push_back(compose(theta_whisker(psi, phi.src.lists[i]), theta_apply_hom(psi.dst, phi.homs[i])));
  return KCell(std::move(from), std::move(to), std::move(hs));
}

KCell k_invert(const KCell& c) {
  std::vector<NHom> hs;
  for (const NHom& h : c.homs) hs.push_back(invert(h));
  return KCell(c.dst, c.src, std::move(hs));
}

KCell k_unique_cell(const KHom& src, const KHom& dst) {
  if (src.src != dst.src || src.dst != dst.dst) fail(Errc::BoundaryMismatch, "families of different shape");
  std::vector<NHom> hs;
  for (std::size_t i = 0; i < src.src; ++i) hs.push_back(unique_hom_linear(src.lists[i], dst.lists[i]));
  return KCell(src, dst, std::move(hs));
}

Multiset<std::size_t> composite_multiset(const KHom& f, const KHom& g, std::size_t j) {
  if (j >= f.src) fail(Errc::LabelOutOfRange, "index " + std::to_string(j));
  const Multiset<std::size_t> fj = underlying_multiset(f.lists[j]);
  Multiset<std::size_t> out;
  for (std::size_t k = 0; k < g.src; ++k) out += underlying_multiset(g.lists[k]).scaled(fj.count(k));
  return out;
}

KHom duality(const KHom& x) {
  std::vector<NList> ls(x.dst);
  for (std::size_t j = 0; j < x.src; ++j)
    for (std::size_t k : x.lists[j]) ls[k].push_back(j);
  return KHom(x.dst, x.src, std::move(ls));
}

KCell duality_cell(const KCell& eta) {
  const KHom from = duality(eta.src);
  const KHom to = duality(eta.dst);
  const std::size_t nk = eta.src.dst;
  // rank[j][p] = number of earlier occurrences of the label at position p of list j
  auto ranks = [](const NList& xs) {
    std::map<std::size_t, std::size_t> seen;
    std::vector<std::size_t> r(xs.size());
    for (std::size_t p = 0; p < xs.size(); ++p) r[p] = seen[xs[p]]++;
    return r;
  };
  // start[k][j] = first slot of the j block in the k list of the dual
  std::vector<std::vector<std::size_t>> start(nk, std::vector<std::size_t>(eta.src.src + 1, 0));
  for (std::size_t k = 0; k < nk; ++k)
    for (std::size_t j = 0; j < eta.src.src; ++j) {
      std::size_t c = 0;
      for (std::size_t l : eta.src.lists[j]) c += (l == k);
      start[k][j + 1] = start[k][j] + c;
    }
  std::vector<std::vector<std::size_t>> img(nk);
  for (std::size_t k = 0; k < nk; ++k) img[k].resize(to.lists[k].size());
  for (std::size_t j = 0; j < eta.homs.size(); ++j) {
    const NHom& h = eta.homs[j];
    const auto rsrc = ranks(h.src());
    const auto rdst = ranks(h.dst());
    for (std::size_t p = 0; p < h.dst().size(); ++p) {
      const std::size_t k = h.dst()[p];
      img[k][start[k][j] + rdst[p]] = start[k][j] + rsrc[h.phi()[p]];
    }
  }
  std::vector<NHom> hs;
  for (std::size_t k = 0; k < nk; ++k) hs.push_back(NHom(from.lists[k], to.lists[k], Perm(std::move(img[k]))));
  return KCell(from, to, std::move(hs));
}

}  // namespace unbias
