#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "qsigma/errors.hpp"
#include "qsigma/presheaf.hpp"

using namespace qsigma;

namespace {

Morphism M(std::string_view s)
{
  return Morphism::parse(s);
}

std::set<Morphism> labels_at(Presheaf const &x, int level)
{
  std::set<Morphism> out;
  for (int k = 0; k < x.size(level); ++k)
    out.insert(*x.label(level, k));
  return out;
}

// Orbits of H acting on Hom(m, n) by postcomposition, counted directly.
std::size_t orbit_count(int m, int n, std::vector<Permutation> const &h)
{
  std::set<std::set<Morphism>> orbits;
  for (auto const &f : enumerate_hom(m, n, Site::QSigma)) {
    std::set<Morphism> orbit;
    for (auto const &p : generated_subgroup(n, h))
      orbit.insert(compose(cosymmetry(p), f));
    orbits.insert(orbit);
  }
  return orbits.size();
}

} // namespace

TEST_CASE("representables have the hom-set as sections")
{
  auto c1 = representable(1, Site::QSigma);
  CHECK(c1->sizes() == std::vector<std::size_t>{2, 3});
  CHECK(representable(0, Site::QSigma)->sizes() == std::vector<std::size_t>{1});
  auto q2 = representable(2, Site::Q);
  CHECK(q2->size(0) == 4);
  CHECK(q2->size(1) == 4 + 4);
  CHECK(labels_at(*q2, 2) == std::set<Morphism>(hom_set(2, 2, Site::Q).elements().begin(),
                                                hom_set(2, 2, Site::Q).elements().end()));
  for (int n = 0; n <= 2; ++n)
    for (auto site : {Site::Q, Site::QSigma})
      CHECK(representable(n, site, 3)->audit().ok());
}

TEST_CASE("act agrees with precomposition")
{
  for (auto site : {Site::Q, Site::QSigma}) {
    auto x = representable(2, site, 3);
    for (int m = 0; m <= 3; ++m)
      for (int l = 0; l <= 3; ++l)
        for (auto const &f : hom_set(m, l, site).elements())
          for (int s = 0; s < x->size(l); ++s)
            REQUIRE(*x->label(m, x->act(f, s)) == compose(*x->label(l, s), f));
  }
  auto q = representable(1, Site::Q);
  CHECK_THROWS_AS(q->act(M("(x1^x2):2->1"), 0), InputError);
}

TEST_CASE("boundaries")
{
  auto b1 = boundary(1, Site::QSigma);
  CHECK(b1.src->sizes() == std::vector<std::size_t>{2, 2});
  CHECK(nondegenerate_sections(*b1.src, 1).empty());

  auto b2 = boundary(2, Site::QSigma);
  CHECK(b2.src->size(1) == 8);
  CHECK(b2.src->size(1) == b2.dst->size(1));
  CHECK(b2.src->size(2) == b2.dst->size(2) - 2);
  auto l2 = labels_at(*b2.src, 2);
  CHECK(!l2.count(M("(x1,x2):2->2")));
  CHECK(!l2.count(M("(x2,x1):2->2")));
  CHECK(b2.injective());
  CHECK(b2.natural());
  CHECK(nondegenerate_sections(*b2.src, 2).empty());

  // the entry criterion against factorization through a lower cube
  for (auto site : {Site::Q, Site::QSigma})
    for (int n = 1; n <= 3; ++n) {
      auto b = boundary(n, site);
      for (int m = 0; m <= n; ++m)
        for (auto const &f : hom_set(m, n, site).elements())
          REQUIRE((b.src->find_label(f) >= 0) == (ez_factor(f).epi.dst() < n));
    }

  auto b0 = boundary(0, Site::QSigma);
  CHECK(b0.src->total_size() == 0);
  CHECK(b0.dst->total_size() == 1);
}

TEST_CASE("caps")
{
  auto c = cap(1, 1, 0);
  CHECK(c.src->size(0) == 1);
  CHECK(*c.src->label(0, 0) == M("(1):0->1"));

  auto c2 = cap(2, 1, 0);
  CHECK(nondegenerate_sections(*c2.src, 1).size() == 3);
  CHECK(c2.src->size(0) == 4);
  CHECK(nondegenerate_sections(*c2.src, 2).empty());

  // cap -> boundary -> cube equals cap -> cube
  auto b = boundary(2, Site::Q);
  PresheafMap into_b{c2.src, b.src, {}};
  for (int l = 0; l <= 2; ++l) {
    auto &row = into_b.at.emplace_back();
    for (int k = 0; k < c2.src->size(l); ++k)
      row.push_back(b.src->find_label(*c2.src->label(l, k)));
  }
  CHECK(into_b.natural());
  CHECK(compose(b, into_b).at == c2.at);

  CHECK_THROWS_AS(cap(2, 3, 0), InputError);
  CHECK_THROWS_AS(cap(2, 0, 1), InputError);
  CHECK_THROWS_AS(cap(2, 1, 2), InputError);
}

TEST_CASE("EZ decomposition")
{
  auto c1 = representable(1, Site::QSigma, 2);
  int x = c1->find_label(M("(x1^x2):2->1"));
  auto d = ez_decompose_section(*c1, 2, x);
  CHECK(d.epi == conjunction(1, 1));
  CHECK(d.level == 1);
  CHECK(*c1->label(1, d.id) == Morphism::identity(1));
  CHECK(c1->act(d.epi, d.id) == x);

  auto d0 = ez_decompose_section(*c1, 0, 1);
  CHECK(d0.epi == Morphism::identity(0));
  CHECK(d0.id == 1);

  auto c2 = representable(2, Site::QSigma);
  CHECK(!is_degenerate(*c2, 1, c2->find_label(M("(x1,0):1->2"))));

  // nondegenerate means the label is a monomorphism, in both sites
  for (auto site : {Site::Q, Site::QSigma}) {
    auto c = representable(2, site, 3);
    for (int l = 0; l <= 3; ++l)
      for (int k = 0; k < c->size(l); ++k) {
        auto dk = ez_decompose_section(*c, l, k);
        auto f = *c->label(l, k);
        REQUIRE(c->act(dk.epi, dk.id) == k);
        REQUIRE(is_degenerate(*c, l, k) != classify(f).is_mono);
        REQUIRE(classify(*c->label(dk.level, dk.id)).is_mono);
      }
  }

  auto nd = nondegenerate_sections(*c2, 2);
  std::set<Morphism> got;
  for (int k : nd)
    got.insert(*c2->label(2, k));
  CHECK(got == std::set<Morphism>{M("(x1,x2):2->2"), M("(x2,x1):2->2")});
  for (int n = 0; n <= 3; ++n)
    CHECK(nondegenerate_sections(*representable(n, Site::QSigma), 0).size() == (1u << n));
}

TEST_CASE("EZ decompositions of a section are related by unique cosymmetries")
{
  // for representables: x = e^* y with y mono; enumerate all (e, y)
  for (int n = 1; n <= 2; ++n) {
    auto c = representable(n, Site::QSigma, 3);
    for (int l = 0; l <= 3; ++l)
      for (int k = 0; k < c->size(l); ++k) {
        auto d = ez_decompose_section(*c, l, k);
        int s = d.level;
        for (auto const &e : hom_set(l, s, Site::QSigma).elements()) {
          if (!classify(e).is_epi)
            continue;
          for (int y : nondegenerate_sections(*c, s)) {
            if (c->act(e, y) != k)
              continue;
            int mediators = 0;
            for (auto const &p : all_permutations(s))
              if (compose(cosymmetry(p), d.epi) == e && c->act(cosymmetry(p), y) == d.id)
                ++mediators;
            REQUIRE(mediators == 1);
          }
        }
      }
  }
}

TEST_CASE("skeleta")
{
  auto c1 = representable(1, Site::QSigma, 3);
  auto s0 = skeleton(c1, 0);
  CHECK(s0.src->sizes() == std::vector<std::size_t>{2, 2, 2, 2});

  auto c2 = representable(2, Site::QSigma);
  CHECK(skeleton(c2, 2) == identity_map(c2));

  auto b3 = boundary(3, Site::QSigma).src;
  auto c3 = representable(3, Site::QSigma);
  auto sb = skeleton(b3, 1).src;
  auto sc = skeleton(c3, 1).src;
  CHECK(sb->sizes() == sc->sizes());
  for (int l = 0; l <= 3; ++l)
    CHECK(labels_at(*sb, l) == labels_at(*sc, l));

  for (int k = 0; k <= 3; ++k)
    for (int j = 0; j <= 3; ++j) {
      auto a = skeleton(skeleton(c3, k).src, j).src;
      auto b = skeleton(c3, std::min(j, k)).src;
      CHECK(a->sizes() == b->sizes());
    }
}

TEST_CASE("coskeleta")
{
  auto x = representable(1, Site::QSigma);
  auto ck0 = coskeleton(x, 0, 3);
  for (int n = 0; n <= 3; ++n)
    CHECK(ck0->size(n) == static_cast<int>(std::pow(2, 1 << n)));
  CHECK(ck0->truncated());
  CHECK(ck0->audit().ok());

  auto y = boundary(2, Site::QSigma).src;
  auto ck1 = coskeleton(y, 1, 3);
  CHECK(ck1->size(0) == y->size(0));
  CHECK(ck1->size(1) == y->size(1));
  CHECK(ck1->audit().ok());

  auto pt = coskeleton(point(Site::QSigma), 1, 3);
  CHECK(pt->sizes() == std::vector<std::size_t>{1, 1, 1, 1});

  // Hom(sk_k A, X) and Hom(A, cosk_k X) have the same size
  for (int k = 0; k <= 1; ++k) {
    auto a = representable(2, Site::QSigma);
    auto lhs = hom_presheaf(skeleton(a, k).src, x);
    auto rhs = hom_presheaf(a, truncate(coskeleton(x, k, 2), 2));
    CHECK(lhs.size() == rhs.size());
  }
}

TEST_CASE("extension to higher levels")
{
  auto c1 = representable(1, Site::QSigma);
  auto e = extend(c1, 2);
  CHECK(e->size(2) == 6);
  CHECK(e->audit().ok());
  CHECK(labels_at(*e, 2) == labels_at(*representable(1, Site::QSigma, 2), 2));

  auto pts = skeleton(representable(1, Site::QSigma), 0).src;
  auto two = truncate(pts, 0);
  auto two_points = std::make_shared<Presheaf>(Site::QSigma, 0,
                                               std::vector<std::vector<std::string>>{{"a", "b"}},
                                               std::vector<std::vector<int>>{});
  CHECK(extend(two_points, 1)->size(1) == 2);
  CHECK_THROWS_AS(extend(two, 1), InputError);

  // both constructions agree on the corpus
  std::vector<PresheafPtr> corpus = {
      point(Site::QSigma),
      c1,
      representable(2, Site::QSigma),
      boundary(2, Site::QSigma).src,
      boundary(3, Site::QSigma).src,
      quotient_by_group(representable(2, Site::QSigma), {Permutation({2, 1})}).dst,
      representable(2, Site::Q),
      boundary(2, Site::Q).src,
      cap(2, 1, 0).src,
  };
  for (auto const &x : corpus)
    for (int n = x->top() + 1; n <= std::min(x->top() + 2, 4); ++n) {
      auto cmp = compare_extension_methods(*x, n);
      INFO(to_text(*x));
      CHECK(cmp.bijective);
      CHECK(cmp.colimit_count == cmp.ez_count);
      if (x->has_labels() && x->site() == Site::QSigma && n <= 3)
        CHECK(cmp.colimit_count == labels_at(*extend(x, n), n).size());
    }

  // representables extended agree with representables stored higher
  for (auto site : {Site::Q, Site::QSigma})
    for (int n = 0; n <= 2; ++n) {
      auto a = extend(representable(n, site), 3);
      auto b = representable(n, site, 3);
      for (int l = 0; l <= 3; ++l)
        CHECK(labels_at(*a, l) == labels_at(*b, l));
    }

  auto b = boundary(2, Site::QSigma);
  auto eb = extend_map(b, 3);
  CHECK(eb.natural());
  CHECK(eb.injective());
  for (int k = 0; k < eb.src->size(3); ++k)
    CHECK(*eb.dst->label(3, eb(3, k)) == *eb.src->label(3, k));
}

TEST_CASE("hom-sets of presheaves")
{
  auto x = representable(2, Site::QSigma);
  CHECK(hom_presheaf(point(Site::QSigma), x).size() == 4);
  auto c1 = representable(1, Site::QSigma);
  CHECK(hom_presheaf(c1, c1).size() == 3);
  CHECK(hom_presheaf(boundary(1, Site::QSigma).src, point(Site::QSigma)).size() == 1);

  // Yoneda: Hom(cube(n), X) = X_n
  std::vector<PresheafPtr> targets = {x, boundary(2, Site::QSigma).src,
                                      quotient_by_group(x, {Permutation({2, 1})}).dst};
  for (auto const &y : targets)
    for (int n = 0; n <= 2; ++n)
      CHECK(hom_presheaf(representable(n, Site::QSigma), y).size() ==
            static_cast<std::size_t>(y->size(n)));
  for (auto const &f : hom_presheaf(c1, x))
    CHECK(f.natural());

  HomSearchOptions one;
  one.first_only = true;
  CHECK(hom_presheaf(x, x, one).size() == 1);
  HomSearchOptions tiny;
  tiny.limit = 2;
  CHECK_THROWS_AS(hom_presheaf(x, x, tiny), ResourceBound);
}

TEST_CASE("pushouts")
{
  auto c1 = representable(1, Site::QSigma);
  auto b1 = boundary(1, Site::QSigma);

  auto along_id = pushout(identity_map(b1.src), b1);
  CHECK(along_id.object->sizes() == c1->sizes());
  CHECK(along_id.from_c.bijective());

  auto glued = pushout(b1, b1);
  CHECK(glued.object->size(0) == 2);
  CHECK(glued.object->size(1) == 4);
  CHECK(glued.object->audit().ok());
  CHECK(glued.from_b.natural());
  CHECK(glued.from_c.natural());

  auto circle = pushout(b1, to_point(b1.src));
  CHECK(circle.object->size(0) == 1);
  CHECK(circle.object->size(1) == 2);

  // universal property against a few targets: Hom(P, Z) is the set of
  // compatible pairs
  for (auto const &z : {c1, representable(2, Site::QSigma), glued.object}) {
    auto from_p = hom_presheaf(glued.object, z);
    std::size_t pairs = 0;
    for (auto const &u : hom_presheaf(c1, z))
      for (auto const &v : hom_presheaf(c1, z))
      {
        bool agree = true;
        for (int l = 0; l <= b1.src->top(); ++l)
          for (int a : b1.at[l])
            agree = agree && u(l, a) == v(l, a);
        pairs += agree;
      }
    CHECK(from_p.size() == pairs);
  }

  CHECK_THROWS_AS(pushout(b1, boundary(1, Site::QSigma, 2)), InputError);
}

TEST_CASE("group quotients and stabilizers")
{
  auto c2 = representable(2, Site::QSigma);
  auto trivial = quotient_by_group(c2, {});
  CHECK(trivial.dst->sizes() == c2->sizes());
  CHECK(trivial.bijective());

  Permutation swap({2, 1});
  auto q = quotient_by_group(c2, {swap});
  CHECK(q.dst->size(0) == 3);
  CHECK(q.surjective());
  CHECK(q.natural());
  CHECK(q.dst->audit().ok());
  for (int m = 0; m <= 2; ++m)
    CHECK(q.dst->size(m) == static_cast<int>(orbit_count(m, 2, {swap})));

  auto c3 = representable(3, Site::QSigma);
  std::vector<Permutation> cyc{Permutation({2, 3, 1})};
  auto q3 = quotient_by_group(c3, cyc);
  for (int m = 0; m <= 3; ++m)
    CHECK(q3.dst->size(m) == static_cast<int>(orbit_count(m, 3, cyc)));

  // quotients of the boundary inclusion stay monic
  auto b = boundary(3, Site::QSigma);
  auto qb = quotient_by_group(b.src, cyc).dst;
  PresheafMap incl{qb, q3.dst, {}};
  for (int l = 0; l <= 3; ++l) {
    auto &row = incl.at.emplace_back();
    for (int k = 0; k < qb->size(l); ++k)
      row.push_back(q3.dst->find_label(*qb->label(l, k)));
  }
  CHECK(incl.natural());
  CHECK(incl.injective());

  CHECK(stabilizer(*c2, 2, c2->find_label(Morphism::identity(2))).size() == 1);
  int id = q.dst->find_label(std::min(Morphism::identity(2), cosymmetry(swap)));
  CHECK(stabilizer(*q.dst, 2, id).size() == 2);
  CHECK(stabilizer(*c2, 0, 0).size() == 1);
}

TEST_CASE("cells of skeletal presheaves glue as pushouts")
{
  auto c2 = representable(2, Site::QSigma);
  auto q = quotient_by_group(c2, {Permutation({2, 1})}).dst;
  auto b3 = boundary(3, Site::QSigma).src;
  for (auto const &x : {c2, q, b3, representable(2, Site::Q), boundary(3, Site::Q).src})
    for (int k = 0; k <= 3; ++k) {
      auto r = verify_skeletal_pushout(x, k);
      INFO(k, " ", r.title);
      for (auto const &e : r.entries)
        INFO(e.name, ": ", e.detail);
      CHECK(r.ok());
    }
  auto rq = verify_skeletal_pushout(q, 2);
  bool saw_sigma2 = false;
  for (auto const &e : rq.entries)
    saw_sigma2 = saw_sigma2 || e.detail.find("order 2") != std::string::npos;
  CHECK(saw_sigma2);
}

TEST_CASE("audit and file formats")
{
  auto q = quotient_by_group(representable(2, Site::QSigma), {Permutation({2, 1})}).dst;
  for (auto const &x : {representable(1, Site::QSigma), q, boundary(2, Site::Q).src}) {
    auto text = to_text(*x);
    auto back = parse_presheaf(text);
    CHECK(*back == *x);
    CHECK(to_text(*back) == text);
    CHECK(*presheaf_from_json(to_json(*x)) == *x);
  }

  auto good = to_text(*representable(1, Site::QSigma));
  // swap the two degenerate images of the vertex 0 so a relation breaks
  std::string bad = good;
  auto pos = bad.find("sigma[1]_0:");
  REQUIRE(pos != std::string::npos);
  auto line = bad.find("(0) -> (0)", pos);
  REQUIRE(line != std::string::npos);
  bad.replace(line, 10, "(0) -> (1)");
  try {
    parse_presheaf(bad);
    FAIL("broken presheaf accepted");
  } catch (InputError const &e) {
    CHECK(e.kind() == InputError::Kind::InvalidPresheaf);
    CHECK(std::string(e.what()).find("fails") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_presheaf("truncation: 0\nlevel 0: a\n"), InputError);
  CHECK_THROWS_AS(parse_presheaf("site: QSigma\ntruncation: 1\nlevel 0: a\nlevel 1: e\n"),
                  InputError);

  auto loaded = load_presheaf("data/boundary2.cub");
  CHECK(loaded->sizes() == boundary(2, Site::QSigma).src->sizes());
  CHECK(hom_presheaf(loaded, boundary(2, Site::QSigma).src).size() > 0);
}
