#include <set>

#include "doctest.h"
#include "qsigma/errors.hpp"
#include "qsigma/monoidal.hpp"

using namespace qsigma;

namespace {

Morphism M(std::string_view s)
{
  return Morphism::parse(s);
}

// Labels of a level; REQUIREs that distinct sections carry distinct labels.
std::set<Morphism> labels_at(Presheaf const &x, int level)
{
  std::set<Morphism> out;
  for (int k = 0; k < x.size(level); ++k)
    out.insert(*x.label(level, k));
  REQUIRE(out.size() == static_cast<std::size_t>(x.size(level)));
  return out;
}

std::set<Morphism> as_set(std::vector<Morphism> const &v)
{
  return {v.begin(), v.end()};
}

std::set<Morphism> boundary_labels(int n, Site site, int level)
{
  std::set<Morphism> out;
  for (auto const &f : hom_set(level, n, site).elements())
    for (auto const &e : f.entries())
      if (e.is_constant()) {
        out.insert(f);
        break;
      }
  return out;
}

} // namespace

TEST_CASE("convolution of representables")
{
  for (auto site : {Site::Q, Site::QSigma})
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; m + n <= 3; ++n) {
        auto c = convolve(representable(m, site), representable(n, site));
        auto const &p = *c.product();
        REQUIRE(p.top() == m + n);
        CHECK(p.audit().ok());
        for (int k = 0; k <= m + n; ++k)
          CHECK(labels_at(p, k) == as_set(hom_set(k, m + n, site).elements()));
      }
}

TEST_CASE("unit law and small products")
{
  auto pt = point(Site::QSigma);
  std::vector<PresheafPtr> corpus = {representable(1, Site::QSigma),
                                     boundary(2, Site::QSigma).src,
                                     quotient_by_group(representable(2, Site::QSigma),
                                                       {Permutation({2, 1})})
                                         .dst};
  for (auto const &x : corpus) {
    auto c = convolve(x, pt);
    PresheafMap m{x, c.product(), {}};
    for (int l = 0; l <= x->top(); ++l) {
      auto &row = m.at.emplace_back();
      for (int s = 0; s < x->size(l); ++s)
        row.push_back(c.section(l, 0, Morphism::identity(l), s, 0));
    }
    CHECK(m.natural());
    CHECK(m.bijective());
  }

  auto b1 = boundary(1, Site::QSigma).src;
  auto bb = convolve(b1, b1).product();
  CHECK(bb->sizes() == std::vector<std::size_t>{4, 4, 4});
  CHECK(nondegenerate_sections(*bb, 1).empty());
  CHECK(nondegenerate_sections(*bb, 2).empty());

  CHECK_THROWS_AS(convolve(b1, representable(1, Site::Q)), InputError);
}

TEST_CASE("convolution is symmetric and associative on the corpus")
{
  auto site = Site::QSigma;
  std::vector<PresheafPtr> corpus = {point(site), representable(1, site), boundary(1, site).src,
                                     boundary(2, site).src, representable(2, site)};
  auto dim = [](PresheafPtr const &x) { return x->label(0, 0)->dst(); };
  for (auto const &x : corpus)
    for (auto const &y : corpus) {
      if (dim(x) + dim(y) > 3)
        continue;
      auto xy = convolve(x, y).product();
      auto yx = convolve(y, x).product();
      CHECK(xy->sizes() == yx->sizes());
      auto sw = symmetry(dim(x), dim(y));
      for (int k = 0; k <= xy->top(); ++k) {
        std::set<Morphism> swapped;
        for (auto const &f : labels_at(*xy, k))
          swapped.insert(compose(sw, f));
        CHECK(swapped == labels_at(*yx, k));
      }
      for (auto const &z : corpus) {
        if (dim(x) + dim(y) + dim(z) > 3)
          continue;
        auto left = convolve(xy, z).product();
        auto right = convolve(x, convolve(y, z).product()).product();
        REQUIRE(left->sizes() == right->sizes());
        for (int k = 0; k <= left->top(); ++k)
          CHECK(labels_at(*left, k) == labels_at(*right, k));
      }
    }
}

TEST_CASE("tensor of maps")
{
  auto b = boundary(1, Site::QSigma);
  auto t = tensor(b, b);
  CHECK(t.natural());
  CHECK(t.injective());
  auto id = tensor(identity_map(b.dst), identity_map(b.dst));
  CHECK(id.bijective());
}

TEST_CASE("pushout-products")
{
  for (auto site : {Site::Q, Site::QSigma}) {
    auto b1 = boundary(1, site);
    auto pp = pushout_product(b1, b1);
    CHECK(pp.map.natural());
    CHECK(pp.map.injective());
    for (int k = 0; k <= 2; ++k) {
      std::set<Morphism> image;
      for (int s : pp.map.at[k])
        image.insert(*pp.map.dst->label(k, s));
      CHECK(image == boundary_labels(2, site, k));
    }
    auto b2 = boundary(2, site);
    auto pp3 = pushout_product(b1, b2);
    CHECK(pp3.map.injective());
    for (int k = 0; k <= 3; ++k) {
      std::set<Morphism> image;
      for (int s : pp3.map.at[k])
        image.insert(*pp3.map.dst->label(k, s));
      CHECK(image == boundary_labels(3, site, k));
    }
  }

  // the unit of the pushout-product is the empty set into the point
  auto f = boundary(2, Site::QSigma);
  PresheafMap unit{empty_presheaf(Site::QSigma, 0), point(Site::QSigma), {{}}};
  auto pp = pushout_product(f, unit);
  CHECK(pp.map.injective());
  CHECK(pp.corner.object->sizes() == f.src->sizes());
  CHECK(pp.map.dst->sizes() == f.dst->sizes());

  auto c = cap(2, 1, 0);
  auto pc = pushout_product(c, boundary(1, Site::Q));
  CHECK(pc.map.injective());
  CHECK(pc.map.natural());
}

TEST_CASE("left Kan extension along Q in Q_Sigma")
{
  for (int n = 0; n <= 3; ++n) {
    auto s = symmetrize(representable(n, Site::Q));
    CHECK(s->site() == Site::QSigma);
    for (int k = 0; k <= n; ++k)
      CHECK(labels_at(*s, k) == as_set(hom_set(k, n, Site::QSigma).elements()));
    auto sb = symmetrize(boundary(n, Site::Q).src);
    for (int k = 0; k <= n; ++k)
      CHECK(labels_at(*sb, k) == boundary_labels(n, Site::QSigma, k));
  }

  // the symmetrized cap is the part of the square meeting a constant
  // other than 0 in the first coordinate
  auto sc = symmetrize(cap(2, 1, 0).src);
  CHECK(sc->sizes() == std::vector<std::size_t>{4, 7, 16});
  for (int k = 0; k <= 2; ++k) {
    std::set<Morphism> expect;
    for (auto const &f : hom_set(k, 2, Site::QSigma).elements())
      if ((f[0].is_constant() && f[0].bit() == 1) || f[1].is_constant())
        expect.insert(f);
    CHECK(labels_at(*sc, k) == expect);
  }
  CHECK(sc->audit().ok());
  CHECK(nondegenerate_sections(*sc, 1).size() == 3);

  // skeleta commute with i_!
  auto q3 = representable(3, Site::Q);
  for (int k = 0; k <= 3; ++k) {
    auto a = skeleton(symmetrize(q3), k).src;
    auto b = symmetrize(skeleton(q3, k).src);
    CHECK(a->sizes() == b->sizes());
    for (int l = 0; l <= 3; ++l)
      CHECK(labels_at(*a, l) == labels_at(*b, l));
  }

  // strong monoidal on the corpus
  std::vector<PresheafPtr> corpus = {representable(1, Site::Q), boundary(1, Site::Q).src,
                                     representable(0, Site::Q)};
  for (auto const &x : corpus)
    for (auto const &y : corpus) {
      auto a = symmetrize(convolve(x, y).product());
      auto b = convolve(symmetrize(x), symmetrize(y)).product();
      REQUIRE(a->sizes() == b->sizes());
      for (int l = 0; l <= a->top(); ++l)
        CHECK(labels_at(*a, l) == labels_at(*b, l));
    }

  CHECK_THROWS_AS(symmetrize(representable(1, Site::QSigma)), InputError);
}

TEST_CASE("restriction to Q")
{
  auto r = restriction(representable(1, Site::QSigma), 2);
  CHECK(r->sizes() == std::vector<std::size_t>{2, 3, 6});
  CHECK(r->truncated());
  CHECK(r->site() == Site::Q);
  CHECK(r->audit().ok());
  int conj = r->find_label(M("(x1^x2):2->1"));
  REQUIRE(conj >= 0);
  CHECK(!is_degenerate(*r, 2, conj));

  CHECK(restriction(point(Site::QSigma), 3)->sizes() == std::vector<std::size_t>{1, 1, 1, 1});

  // a truncated presheaf refuses levels it does not have
  CHECK_THROWS_AS(restriction(r->as_truncated(), 3), InputError);
  CHECK_THROWS_AS(extend(r, 3), InputError);
}

TEST_CASE("unit and counit")
{
  for (int n = 0; n <= 2; ++n) {
    auto x = representable(n, Site::Q);
    auto eta = adjunction_unit(x, 3);
    CHECK(eta.natural());
    CHECK(eta.injective());
    for (int l = 0; l <= 3; ++l)
      for (int s = 0; s < eta.src->size(l); ++s)
        CHECK(*eta.dst->label(l, eta(l, s)) == *eta.src->label(l, s));

    auto eps = adjunction_counit(representable(n, Site::QSigma), 3);
    CHECK(eps.natural());
    CHECK(eps.surjective());
  }

  // naturality of the unit along the boundary inclusion
  auto b = boundary(2, Site::Q);
  auto lhs = compose(restriction_map(symmetrize_map(b), 3), adjunction_unit(b.src, 3));
  auto rhs = compose(adjunction_unit(b.dst, 3), extend_map(b, 3));
  CHECK(lhs.at == rhs.at);

  for (auto const &[x, y] :
       std::vector<std::pair<PresheafPtr, PresheafPtr>>{
           {representable(1, Site::Q), representable(1, Site::QSigma)},
           {boundary(2, Site::Q).src, boundary(2, Site::QSigma).src},
           {cap(2, 1, 0).src, quotient_by_group(representable(2, Site::QSigma),
                                                {Permutation({2, 1})})
                                  .dst}}) {
    auto r = verify_triangle_identities(x, y, 3);
    CHECK(r.ok());
  }
}
