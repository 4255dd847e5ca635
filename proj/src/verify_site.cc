#include <map>
#include <set>

#include "qsigma/errors.hpp"
#include "qsigma/site.hpp"

namespace qsigma {

namespace {

std::string dims(std::initializer_list<int> ds)
{
  std::string s = "[";
  bool first = true;
  for (int d : ds) {
    s += (first ? "" : ",") + std::to_string(d);
    first = false;
  }
  return s + "]";
}

std::vector<Morphism> const &hom(int m, int n)
{
  return hom_set(m, n, Site::QSigma).elements();
}

} // namespace

Report verify_category_laws(int n_max)
{
  Report r;
  r.title = "category laws up to [" + std::to_string(n_max) + "]";
  for (int a = 0; a <= n_max; ++a)
    for (int b = 0; b <= n_max; ++b) {
      std::size_t bad = 0;
      for (auto const &f : hom(a, b))
        if (compose(Morphism::identity(b), f) != f || compose(f, Morphism::identity(a)) != f)
          ++bad;
      r.add("identity " + dims({a, b}), bad == 0, std::to_string(bad) + " failures");
      for (int c = 0; c <= n_max; ++c)
        for (int d = 0; d <= n_max; ++d) {
          bad = 0;
          for (auto const &f : hom(a, b))
            for (auto const &g : hom(b, c)) {
              auto gf = compose(g, f);
              for (auto const &h : hom(c, d))
                if (compose(compose(h, g), f) != compose(h, gf))
                  ++bad;
            }
          r.add("associativity " + dims({a, b, c, d}), bad == 0,
                std::to_string(bad) + " failures");
        }
    }

  // interchange, with every object of the composite at most n_max
  for (int a = 0; a <= n_max; ++a)
    for (int b = 0; b <= n_max; ++b)
      for (int c = 0; c <= n_max; ++c)
        for (int a2 = 0; a + a2 <= n_max; ++a2)
          for (int b2 = 0; b + b2 <= n_max; ++b2)
            for (int c2 = 0; c + c2 <= n_max; ++c2) {
              std::size_t bad = 0;
              for (auto const &f2 : hom(a, b))
                for (auto const &f1 : hom(b, c))
                  for (auto const &g2 : hom(a2, b2))
                    for (auto const &g1 : hom(b2, c2))
                      if (compose(tensor(f1, g1), tensor(f2, g2)) !=
                          tensor(compose(f1, f2), compose(g1, g2)))
                        ++bad;
              r.add("interchange " + dims({a, b, c}) + "x" + dims({a2, b2, c2}), bad == 0,
                    std::to_string(bad) + " failures");
            }

  for (int a = 0; a <= n_max; ++a)
    for (int b = 0; b <= n_max; ++b) {
      r.add("symmetry involution " + dims({a, b}),
            compose(symmetry(b, a), symmetry(a, b)) == Morphism::identity(a + b));
      for (int c = 0; c <= n_max; ++c)
        for (int d = 0; d <= n_max; ++d) {
          std::size_t bad = 0;
          for (auto const &f : hom(a, b))
            for (auto const &g : hom(c, d))
              if (compose(symmetry(b, d), tensor(f, g)) != compose(tensor(g, f), symmetry(a, c)))
                ++bad;
          r.add("symmetry naturality " + dims({a, b, c, d}), bad == 0,
                std::to_string(bad) + " failures");
        }
    }
  return r;
}

Report verify_normal_form(int n_max)
{
  Report r;
  r.title = "normal form up to [" + std::to_string(n_max) + "]";
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n) {
      auto const &hs = hom_set(m, n, Site::QSigma);
      std::size_t bad = 0;
      for (auto const &f : hs.elements()) {
        auto fz = factor(f);
        if (!fz.well_formed() || fz.evaluate() != f)
          ++bad;
        auto c = classify(f);
        if (c.in_plus && !(fz.conjs.empty() && fz.degens.empty()))
          ++bad;
        if (c.in_Q && !(fz.conjs.empty() && fz.perm.is_identity()))
          ++bad;
      }
      r.add("round trip " + dims({m, n}), bad == 0, std::to_string(bad) + " failures");

      auto all = enumerate_factorizations(m, n);
      std::set<Morphism> images;
      bool formed = true;
      for (auto const &fz : all) {
        formed = formed && fz.well_formed();
        images.insert(fz.evaluate());
      }
      bool bij = formed && all.size() == hs.size() && images.size() == hs.size();
      r.add("bijection " + dims({m, n}), bij,
            std::to_string(all.size()) + " factorizations, " + std::to_string(hs.size()) +
                " morphisms");
    }
  return r;
}

Report verify_thickening(int n_max)
{
  Report r;
  r.title = "thickening up to [" + std::to_string(n_max) + "]";
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n) {
      std::set<Morphism> plus;
      for (auto const &f : hom(m, n))
        if (classify(f).in_plus)
          plus.insert(f);
      std::set<Morphism> image;
      std::size_t pairs = 0;
      for (auto const &p : all_permutations(m))
        for (auto const &d : hom_set(m, n, Site::Q).elements()) {
          if (!classify(d).in_plus)
            continue;
          ++pairs;
          image.insert(compose(d, cosymmetry(p)));
        }
      r.add("Aut x Q+ -> QSigma+ " + dims({m, n}),
            pairs == plus.size() && image == plus,
            std::to_string(pairs) + " pairs, " + std::to_string(plus.size()) + " targets");
    }
  return r;
}

Report verify_ez1(int n_max)
{
  Report r;
  r.title = "EZ1 up to [" + std::to_string(n_max) + "]";
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n) {
      std::size_t bad = 0;
      for (auto const &f : hom(m, n)) {
        auto c = classify(f);
        if (c.is_mono && m > n)
          ++bad;
        if (c.is_mono && m == n && !c.is_iso)
          ++bad;
        if (c.is_mono && m < n && c.is_iso)
          ++bad;
      }
      r.add("monos raise degree " + dims({m, n}), bad == 0, std::to_string(bad) + " failures");
    }
  return r;
}

Report verify_ez2(int n_max)
{
  Report r;
  r.title = "EZ2 up to [" + std::to_string(n_max) + "]";
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n) {
      // every factorization through a middle object, bucketed by composite
      std::map<Morphism, std::vector<std::pair<Morphism, Morphism>>> found;
      for (int k = 0; k <= std::min(m, n); ++k)
        for (auto const &e : hom(m, k)) {
          if (!classify(e).is_epi)
            continue;
          for (auto const &i : hom(k, n))
            if (classify(i).is_mono)
              found[compose(i, e)].emplace_back(e, i);
        }
      std::size_t bad_exist = 0, bad_unique = 0, pairs = 0;
      for (auto const &f : hom(m, n)) {
        auto ez = ez_factor(f);
        if (compose(ez.mono, ez.epi) != f || !classify(ez.epi).is_epi ||
            !classify(ez.mono).is_mono)
          ++bad_exist;
        auto const &list = found[f];
        for (auto const &[e1, i1] : list)
          for (auto const &[e2, i2] : list) {
            ++pairs;
            if (e1.dst() != e2.dst()) {
              ++bad_unique;
              continue;
            }
            int count = 0;
            for (auto const &p : all_permutations(e1.dst())) {
              auto t = cosymmetry(p);
              if (compose(t, e1) == e2 && compose(i2, t) == i1)
                ++count;
            }
            if (count != 1)
              ++bad_unique;
          }
      }
      r.add("epi-mono factorization " + dims({m, n}), bad_exist == 0,
            std::to_string(bad_exist) + " failures");
      r.add("unique mediating cosymmetry " + dims({m, n}), bad_unique == 0,
            std::to_string(pairs) + " pairs, " + std::to_string(bad_unique) + " failures");
    }
  return r;
}

Report verify_ez3(int n_max)
{
  Report r;
  r.title = "EZ3 up to [" + std::to_string(n_max) + "]";
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i)
      gens.push_back(Generator::degeneracy(n - 1, i));
    for (int i = 1; i < n; ++i)
      gens.push_back(Generator::conj(n - 1, i));
    for (auto const &g1 : gens)
      for (auto const &g2 : gens) {
        std::string name = g1.name() + " / " + g2.name();
        try {
          auto sp = split_pushout(g1.morphism(), g2.morphism());
          bool ok = sp.valid() && classify(sp.right).is_epi && classify(sp.bottom).is_epi;
          int ell = sp.right.dst();
          ok = ok && ell >= n - 2 && ell <= n - 1;
          r.add(name, ok, sp.rule);
        } catch (Error const &e) {
          r.add(name, false, e.what());
        }
      }
  }
  return r;
}

} // namespace qsigma
