// One pass/fail line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "qsigma/errors.hpp"
#include "qsigma/homotopy.hpp"
#include "qsigma/monoidal.hpp"
#include "qsigma/realize.hpp"

using namespace qsigma;

namespace {

// Collects failed checks; a criterion passes when none are recorded.
struct Check
{
  std::vector<std::string> failures;
  std::size_t count = 0;

  void operator()(bool ok, std::string const &what)
  {
    ++count;
    if (!ok)
      failures.push_back(what);
  }
  void report(Report const &r)
  {
    (*this)(r.ok(), r.title + ": " + std::to_string(r.failures()) + " failed");
  }
};

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

std::set<Morphism> hom_labels(int m, int n, Site site)
{
  auto const &e = hom_set(m, n, site).elements();
  return {e.begin(), e.end()};
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

// Labelled presheaves with the expected labels at every level, distinct.
bool has_labels(Presheaf const &x, std::function<std::set<Morphism>(int)> const &expect)
{
  for (int l = 0; l <= x.top(); ++l) {
    auto got = labels_at(x, l);
    if (got.size() != static_cast<std::size_t>(x.size(l)) || got != expect(l))
      return false;
  }
  return true;
}

std::vector<std::string> strs(HomologyResult const &h)
{
  std::vector<std::string> out;
  for (std::size_t k = 0; k < h.shown_degrees(); ++k)
    out.push_back(h.groups[k].str());
  return out;
}

void compositions(Check &check)
{
  check(compose(M("(x3,x1^x2):3->2"), M("(0,x1,x5):5->3")).str() == "(x5,0):5->2", "first");
  check(compose(M("(x2^x1):2->1"), M("(x1^x2,x3):3->2")).str() == "(x3^x1^x2):3->1", "second");
  check(compose(M("(x1^x2):2->1"), M("(1,1):0->2")).str() == "(1):0->1", "third");
  check(compose(M("(0,x1^x4):5->2"), M("(x10,0,0,1,x3):10->5")).str() == "(0,x10):10->2",
        "fourth");
  check(tensor(M("(x1^x2):2->1"), M("(0,x1):1->2")).str() == "(x1^x2,0,x3):3->3", "sum");
}

void normal_form(Check &check)
{
  check.report(verify_normal_form(3));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto const &hs = hom_set(m, n, Site::QSigma);
      auto fs = enumerate_factorizations(m, n);
      std::set<Morphism> images;
      bool ok = fs.size() == hs.size();
      for (auto const &fz : fs) {
        ok = ok && fz.well_formed();
        images.insert(fz.evaluate());
      }
      for (auto const &f : hs.elements())
        ok = ok && factor(f).evaluate() == f;
      check(ok && images.size() == hs.size(),
            "factorizations of Hom(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  auto fz = factor(M("(x3,1,x1^x5^x2,0):5->4"));
  check(fz.perm == Permutation::parse("(1 2 4 3)", 4), "worked permutation");
  check(fz.evaluate() == M("(x3,1,x1^x5^x2,0):5->4"), "worked factorization evaluates back");
}

void relations(Check &check)
{
  auto r = verify_relations(4);
  check.report(r);
  check(r.size() == relation_instances(4).size(), "every instance checked");
}

void ez_axioms(Check &check)
{
  check.report(verify_ez1(3));
  check.report(verify_ez2(3));
  check.report(verify_ez3(4));
}

void hom_cardinalities(Check &check)
{
  for (int n = 0; n <= 6; ++n) {
    check(enumerate_hom(n, 0, Site::QSigma).size() == 1, "Hom(m,0)");
    check(enumerate_hom(0, n, Site::QSigma).size() == (std::size_t{1} << n), "Hom(0,n)");
  }
  check(enumerate_hom(2, 1, Site::QSigma).size() == 6, "Hom(2,1)");
  check(enumerate_hom(1, 1, Site::Q).size() == 3, "box Hom(1,1)");
}

void vertices_not_faithful(Check &check)
{
  std::vector<std::pair<Morphism, Morphism>> witnesses;
  auto hs = enumerate_hom(2, 1, Site::QSigma);
  for (std::size_t a = 0; a < hs.size(); ++a)
    for (std::size_t b = a + 1; b < hs.size(); ++b)
      if (vertices_action(hs[a]) == vertices_action(hs[b]))
        witnesses.emplace_back(hs[a], hs[b]);
  check(witnesses.size() == 1, "exactly one witness");
  check(!witnesses.empty() && witnesses[0].first == M("(x1^x2):2->1") &&
            witnesses[0].second == M("(x2^x1):2->1"),
        "the witness is the pair of conjunctions");
}

void skeletal_pushouts(Check &check)
{
  std::vector<PresheafPtr> corpus = {
      representable(2, Site::QSigma),
      quotient_by_group(representable(2, Site::QSigma), {Permutation({2, 1})}).dst,
      boundary(3, Site::QSigma).src};
  for (auto const &x : corpus)
    for (int k = 0; k <= 3; ++k)
      check.report(verify_skeletal_pushout(x, k));
}

void convolution(Check &check)
{
  auto site = Site::QSigma;
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 3; ++n) {
      auto p = convolve(representable(m, site), representable(n, site)).product();
      check(has_labels(*p, [&](int l) { return hom_labels(l, m + n, site); }),
            "cube tensor cube");
    }
  // boundary pushout-products, including the empty boundary of the point
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; m + n <= 2; ++n) {
      auto pp = pushout_product(boundary(m, site), boundary(n, site));
      bool ok = pp.map.natural() && pp.map.injective();
      for (int l = 0; ok && l <= m + n; ++l) {
        std::set<Morphism> image;
        for (int s : pp.map.at[l])
          image.insert(*pp.map.dst->label(l, s));
        ok = image == boundary_labels(m + n, site, l);
      }
      check(ok, "pushout-product of boundaries " + std::to_string(m) + "," + std::to_string(n));
    }
  // unit and symmetry
  std::vector<PresheafPtr> corpus = {representable(1, site), boundary(2, site).src,
                                     quotient_by_group(representable(2, site),
                                                       {Permutation({2, 1})})
                                         .dst};
  auto pt = point(site);
  for (auto const &x : corpus) {
    auto c = convolve(x, pt);
    PresheafMap unit{x, c.product(), {}};
    for (int l = 0; l <= x->top(); ++l) {
      auto &row = unit.at.emplace_back();
      for (int s = 0; s < x->size(l); ++s)
        row.push_back(c.section(l, 0, Morphism::identity(l), s, 0));
    }
    check(unit.natural() && unit.bijective(), "right unit");
    for (auto const &y : corpus) {
      auto xy = convolve(x, y).product();
      auto yx = convolve(y, x).product();
      int dx = x->label(0, 0)->dst(), dy = y->label(0, 0)->dst();
      bool ok = xy->sizes() == yx->sizes();
      for (int l = 0; ok && l <= xy->top(); ++l) {
        std::set<Morphism> swapped;
        for (auto const &f : labels_at(*xy, l))
          swapped.insert(compose(symmetry(dx, dy), f));
        ok = swapped == labels_at(*yx, l);
      }
      check(ok, "symmetry");
    }
  }
}

void kan_extension(Check &check)
{
  for (int n = 0; n <= 3; ++n) {
    check(has_labels(*symmetrize(representable(n, Site::Q)),
                     [&](int l) { return hom_labels(l, n, Site::QSigma); }),
          "i_! of the cube");
    check(has_labels(*symmetrize(boundary(n, Site::Q).src),
                     [&](int l) { return boundary_labels(n, Site::QSigma, l); }),
          "i_! of the boundary");
  }
  std::vector<PresheafPtr> corpus = {representable(3, Site::Q), boundary(3, Site::Q).src,
                                     cap(3, 2, 0).src, cap(2, 1, 1).src};
  for (auto const &x : corpus)
    for (int k = 0; k <= x->top(); ++k) {
      auto a = skeleton(symmetrize(x), k).src;
      auto b = symmetrize(skeleton(x, k).src);
      bool ok = a->sizes() == b->sizes();
      for (int l = 0; ok && l <= a->top(); ++l)
        ok = labels_at(*a, l) == labels_at(*b, l);
      check(ok, "skeleta commute with i_!");
    }
  for (auto const &x : corpus) {
    auto eta = adjunction_unit(x, 3);
    check(eta.natural() && eta.injective(), "unit injective");
  }
  std::vector<std::pair<PresheafPtr, PresheafPtr>> pairs = {
      {representable(1, Site::Q), representable(1, Site::QSigma)},
      {boundary(2, Site::Q).src, boundary(2, Site::QSigma).src},
      {cap(2, 1, 0).src,
       quotient_by_group(representable(2, Site::QSigma), {Permutation({2, 1})}).dst}};
  for (auto const &[x, y] : pairs)
    for (int t = 0; t <= 3; ++t)
      check.report(verify_triangle_identities(x, y, t));
}

void homology_suite(Check &check)
{
  using V = std::vector<std::string>;
  for (int n = 0; n <= 3; ++n)
    check(strs(homology(*representable(n, Site::QSigma))) == V{"Z"}, "cube");
  check(strs(homology(*boundary(2, Site::QSigma).src)) == V{"Z", "Z"}, "boundary of the square");
  check(strs(homology(*boundary(3, Site::QSigma).src)) == V{"Z", "0", "Z"},
        "boundary of the 3-cube");
  auto b1 = boundary(1, Site::QSigma);
  auto circle = pushout(b1, to_point(b1.src)).object;
  check(strs(homology(*circle)) == V{"Z", "Z"}, "interval modulo its ends");

  std::vector<PresheafPtr> corpus = {
      representable(2, Site::QSigma), boundary(2, Site::QSigma).src, boundary(3, Site::Q).src,
      circle, cap(3, 2, 1).src, symmetrize(cap(2, 1, 0).src),
      quotient_by_group(representable(3, Site::QSigma), {Permutation({2, 3, 1})}).dst,
      convolve(b1.src, b1.src).product()};
  for (auto const &x : corpus) {
    auto s = realize(*x);
    long cells = 0;
    for (int k = 0; k <= s.top; ++k)
      cells += (k % 2 == 0 ? 1 : -1) * static_cast<long>(s.nondegenerate(k).size());
    auto h = homology(*x);
    bool torsion_free = true;
    for (auto const &g : h.groups)
      torsion_free = torsion_free && g.torsion.empty();
    check(torsion_free && h.euler_characteristic() == cells, "Euler characteristic");
  }
}

void cubical_monoid(Check &check)
{
  check.report(verify_cubical_monoid_delta1(3));
}

void homotopy(Check &check)
{
  for (int n = 1; n <= 4; ++n)
    check.report(verify_contraction(n));
  auto e1 = representable(1, Site::QSigma);
  auto v = [](PresheafPtr const &y, std::string_view f) {
    return vertex_map(y, y->find_label(M(f)));
  };
  check(find_homotopy(v(e1, "(0):0->1"), v(e1, "(1):0->1"), 1).has_value(),
        "endpoints of the interval are homotopic");
  auto b1 = boundary(1, Site::QSigma).src;
  check(!find_homotopy(v(b1, "(0):0->1"), v(b1, "(1):0->1"), 1).has_value(),
        "endpoints of the two-point set are not homotopic");
  std::vector<PresheafPtr> corpus = {representable(1, Site::QSigma), boundary(2, Site::QSigma).src,
                                     representable(1, Site::Q), boundary(2, Site::Q).src,
                                     cap(2, 1, 0).src, symmetrize(cap(2, 2, 1).src)};
  for (auto const &x : corpus)
    for (int n = x->top() + 1; n <= 4; ++n) {
      auto c = compare_extension_methods(*x, n);
      check(c.bijective && c.colimit_count == c.ez_count, "extension methods agree");
    }
}

} // namespace

int main()
{
  struct Criterion
  {
    std::string name;
    std::function<void(Check &)> run;
  };
  std::vector<Criterion> criteria = {
      {"composition examples", compositions},
      {"normal form", normal_form},
      {"generator relations", relations},
      {"Eilenberg-Zilber axioms", ez_axioms},
      {"hom-set cardinalities", hom_cardinalities},
      {"vertices functor is not faithful", vertices_not_faithful},
      {"skeletal pushout squares", skeletal_pushouts},
      {"Day convolution", convolution},
      {"Kan extension along Q in Q_Sigma", kan_extension},
      {"homology", homology_suite},
      {"Delta[1] cubical monoid", cubical_monoid},
      {"homotopy", homotopy},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].run(check);
    } catch (std::exception const &e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = check.failures.empty();
    failed += !ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].name << "  ("
         << check.count << " checks, " << std::fixed;
    line.precision(2);
    line << secs << " s)";
    std::cout << line.str() << '\n';
    for (auto const &f : check.failures)
      std::cout << "      " << f << '\n';
  }
  std::cout << (criteria.size() - failed) << " of " << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
