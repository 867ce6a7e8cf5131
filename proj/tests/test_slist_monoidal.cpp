#include <doctest.h>

#include <set>

#include "unbias/error.hpp"
#include "unbias/generators.hpp"
#include "unbias/slist_monoidal.hpp"

using namespace unbias;
using S = std::string;
using L = SList<S>;
using H = SListHom<S>;

TEST_CASE("tensor_obj") {
  CHECK(tensor_obj<S>({"a"}, {"b", "c"}) == L{"a", "b", "c"});
  CHECK(tensor_obj<S>({}, {"x"}) == L{"x"});
  const L a{"a"}, b{"b", "c"}, c{"d"};
  CHECK(tensor_obj(tensor_obj(a, b), c) == tensor_obj(a, tensor_obj(b, c)));
}

TEST_CASE("tensor_hom") {
  const H ida = H::identity({"a"}), idb = H::identity({"b"});
  CHECK(tensor_hom(ida, idb) == H::identity({"a", "b"}));
  const H swap = hom_from_word(GenWord<S>{{"a", "b"}, {0}});
  CHECK(tensor_hom(swap, H::identity({"c"})).phi() == Perm({1, 0, 2}));
  CHECK(tensor_hom(H::identity({"c"}), swap).phi() == Perm({0, 2, 1}));
}

TEST_CASE("braiding") {
  CHECK(braiding<S>({"a"}, {"b", "c"}).phi() == Perm({1, 2, 0}));
  const L l{"p", "q"};
  CHECK(braiding<S>({}, l) == H::identity(l));
  const L x{"a", "b"}, y{"c"};
  CHECK(compose(braiding(x, y), braiding(y, x)) == H::identity(tensor_obj(x, y)));
}

TEST_CASE("braiding_recursive and braiding_word") {
  CHECK(braiding_word<S>({"a"}, {"b"}).positions == Word{0});
  CHECK(braiding_recursive<S>({"a"}, {"b"}).phi() == Perm({1, 0}));
  CHECK(braiding_recursive<S>({"a"}, {"b", "c"}).phi() == Perm({1, 2, 0}));
  CHECK(braiding_recursive<S>({"a", "b"}, {"c"}).phi() == Perm({2, 0, 1}));
  for (std::size_t p = 0; p <= 5; ++p)
    for (std::size_t q = 0; q <= 5; ++q) {
      L x(p, "x"), y(q, "y");
      CHECK(hom_from_word(braiding_word(x, y)) == braiding(x, y));
      CHECK(braiding_word(x, y).positions.size() == p * q);
    }
}

TEST_CASE("index_embed") {
  const L x{"a", "b"}, y{"c", "d", "e"};
  CHECK(index_embed(x, y, Side::Left, 1) == 1);
  CHECK(index_embed(x, y, Side::Right, 0) == 2);
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < x.size(); ++i) seen.insert(index_embed(x, y, Side::Left, i));
  for (std::size_t i = 0; i < y.size(); ++i) seen.insert(index_embed(x, y, Side::Right, i));
  CHECK(seen == std::set<std::size_t>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(index_embed(x, y, Side::Left, 2), Error);
  CHECK_THROWS_AS(index_embed(x, y, Side::Right, 3), Error);
}

TEST_CASE("braiding is natural") {
  Rng rng(5);
  for (int s = 0; s < 200; ++s) {
    L u(uniform(rng, 0, 4)), v(uniform(rng, 0, 4));
    for (auto& l : u) l = S(1, static_cast<char>('a' + uniform(rng, 0, 1)));
    for (auto& l : v) l = S(1, static_cast<char>('a' + uniform(rng, 0, 1)));
    const H f = hom_from_word(GenWord<S>{u, random_word(rng, u.size(), u.size() < 2 ? 0 : 5)});
    const H g = hom_from_word(GenWord<S>{v, random_word(rng, v.size(), v.size() < 2 ? 0 : 5)});
    CHECK(compose(tensor_hom(f, g), braiding(f.dst(), g.dst())) == compose(braiding(u, v), tensor_hom(g, f)));
  }
}
