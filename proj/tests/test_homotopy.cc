#include "doctest.h"
#include "qsigma/errors.hpp"
#include "qsigma/homotopy.hpp"
#include "qsigma/monoidal.hpp"

using namespace qsigma;

namespace {

Morphism M(std::string_view s)
{
  return Morphism::parse(s);
}

} // namespace

TEST_CASE("contraction of a cube onto a vertex")
{
  CHECK(contraction(1) == M("(x1^x2):2->1"));
  CHECK(contraction(2) == M("(x1^x3,x2^x4):4->2"));
  CHECK(compose(contraction(1), M("(x1,0):1->2")) == M("(0):1->1"));
  CHECK(compose(contraction(1), M("(x1,1):1->2")) == M("(x1):1->1"));
  for (int n = 1; n <= 4; ++n) {
    auto r = verify_contraction(n);
    CHECK(r.ok());
    CHECK(r.size() == 4);
  }
  auto f = factor(contraction(2));
  CHECK(f.conjs.size() == 2);
  CHECK(!f.perm.is_identity());
}

TEST_CASE("lifting problems")
{
  auto site = Site::QSigma;

  // against an identity every square has a filler, the bottom map
  auto b2 = boundary(2, site);
  auto id2 = identity_map(b2.dst);
  auto lift = solve_lifting({b2, id2, b2, id2});
  REQUIRE(lift);
  CHECK(lift->at == id2.at);

  // a vertex of the interval over the point
  auto e1 = representable(1, site);
  PresheafMap from_empty{empty_presheaf(site, 1), point(site, 1), {{}, {}}};
  PresheafMap empty_to_e1{from_empty.src, e1, {{}, {}}};
  auto v = solve_lifting({from_empty, to_point(e1), empty_to_e1, identity_map(point(site, 1))});
  REQUIRE(v);
  CHECK(v->natural());

  // the interval does not retract onto its endpoints
  auto b1 = boundary(1, site);
  auto ends = to_point(b1.src);
  CHECK(!solve_lifting({b1, ends, identity_map(b1.src), to_point(e1)}));

  // the open cap of the interval is a single vertex, and the discrete pair
  // of points does fill it: send the interval to that vertex
  auto c = symmetrize_map(cap(1, 1, 0));
  CHECK(c.src->sizes() == std::vector<std::size_t>{1, 1});
  auto target = b1.src;
  auto pick = hom_presheaf(c.src, target);
  REQUIRE(pick.size() == 2);
  auto l = solve_lifting({c, to_point(target), pick[0], to_point(c.dst)});
  REQUIRE(l);
  CHECK(compose(*l, c).at == pick[0].at);

  // a square that does not commute is an input error
  auto v0 = vertex_map(e1, e1->find_label(M("(0):0->1")));
  auto v1 = vertex_map(e1, e1->find_label(M("(1):0->1")));
  auto pt1 = identity_map(point(site, 1));
  CHECK_THROWS_AS(solve_lifting({pt1, identity_map(e1), v0, v1}), InputError);
}

TEST_CASE("fibrancy against caps")
{
  auto site = Site::QSigma;
  CHECK(is_fibrant(point(site), 3).ok());
  CHECK(is_fibrant(boundary(1, site).src, 2).ok());

  auto r = is_fibrant(representable(1, site), 2);
  // the interval fills every cap of the edge but not every cap of the square
  std::size_t bad_low = 0, bad_high = 0;
  for (auto const &e : r.entries)
    (e.name.starts_with("cap n=1") ? bad_low : bad_high) += e.ok ? 0 : 1;
  CHECK(bad_low == 0);
  CHECK(bad_high > 0);
  CHECK(r.size() == 6);
  for (auto const &e : r.entries)
    if (e.name.starts_with("cap n=2"))
      CHECK(e.detail == "5 of 7 maps extend");

  CHECK_THROWS_AS(is_fibrant(representable(1, Site::Q), 1), InputError);
}

TEST_CASE("homotopies between maps")
{
  auto site = Site::QSigma;
  auto e1 = representable(1, site);
  int a = e1->find_label(M("(0):0->1"));
  int b = e1->find_label(M("(1):0->1"));
  auto h = find_homotopy(vertex_map(e1, a), vertex_map(e1, b), 1);
  REQUIRE(h);
  CHECK(h->h.natural());
  CHECK(h->h.bijective()); // the point (x) the interval is the interval

  auto b1 = boundary(1, site).src;
  int p = b1->find_label(M("(0):0->1"));
  int q = b1->find_label(M("(1):0->1"));
  CHECK(!find_homotopy(vertex_map(b1, p), vertex_map(b1, q), 1));
  CHECK(!find_homotopy(vertex_map(b1, p), vertex_map(b1, q), 2));
  CHECK(find_homotopy(vertex_map(b1, p), vertex_map(b1, p), 1));

  // f is homotopic to itself through the projection
  auto sq = boundary(2, site);
  auto self = find_homotopy(sq, sq, 1);
  REQUIRE(self);
  CHECK(self->h.natural());

  // the identity of the interval is homotopic to the constant map at 0
  auto id = identity_map(e1);
  PresheafMap c0{e1, e1, {}};
  for (int l = 0; l <= 1; ++l) {
    auto &row = c0.at.emplace_back();
    for (int s = 0; s < e1->size(l); ++s)
      row.push_back(e1->act(Morphism(l, {}), a));
  }
  CHECK(c0.natural());
  CHECK(find_homotopy(c0, id, 1));
}
