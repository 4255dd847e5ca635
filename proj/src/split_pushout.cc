#include <functional>
#include <numeric>
#include <optional>

#include "qsigma/errors.hpp"
#include "qsigma/site.hpp"

namespace qsigma {

Morphism SplitPushout::d1prime() const
{
  return compose_all({d2prime, d0, right});
}

std::vector<std::pair<std::string, bool>> SplitPushout::check() const
{
  auto eq = [](Morphism const &a, Morphism const &b) { return a == b; };
  auto id = Morphism::identity;
  auto d1p = d1prime();
  return {
      {"square commutes", eq(compose(right, top), compose(bottom, left))},
      {"d0 p1 = a1 d1", eq(compose(d0, bottom), compose(top, d1))},
      {"d0 p2 = a1 d1'", eq(compose(d0, right), compose(top, d1p))},
      {"a2 d1 = id", eq(compose(left, d1), id(left.dst()))},
      {"a2 d1' = a2 d2'", eq(compose(left, d1p), compose(left, d2prime))},
      {"p2 d0 = id", eq(compose(right, d0), id(right.dst()))},
      {"a1 d2' = id", eq(compose(top, d2prime), id(top.dst()))},
  };
}

bool SplitPushout::valid() const
{
  try {
    for (auto const &[name, ok] : check())
      if (!ok)
        return false;
  } catch (InputError const &) {
    return false;
  }
  return true;
}

namespace {

struct Gen
{
  bool conj = false;
  int i = 0;
};

// Recognise sigma^i or gamma^i among epimorphisms.
std::optional<Gen> as_generator(Morphism const &e)
{
  auto fz = factor(e);
  if (!fz.faces.empty() || !fz.perm.is_identity())
    return std::nullopt;
  if (fz.degens.size() == 1 && fz.conjs.empty())
    return Gen{false, fz.degens[0]};
  if (fz.degens.empty() && fz.conjs.size() == 1)
    return Gen{true, fz.conjs[0]};
  return std::nullopt;
}

Morphism gen(Gen g, int src)
{
  return g.conj ? conjunction(src - 1, g.i) : codegeneracy(src - 1, g.i);
}

// Table of squares with top a1 = gen(t), left a2 = gen(l) out of [n].
std::optional<SplitPushout> table(Gen t, Gen l, int n)
{
  auto sg = [](int dim, int i) { return codegeneracy(dim, i); };
  auto gm = [](int dim, int i) { return conjunction(dim, i); };
  auto dl = [](int dim, int i, int e) { return coface(dim, i, e); };
  SplitPushout s;
  s.top = gen(t, n);
  s.left = gen(l, n);
  int i = t.i, j = l.i;
  auto set = [&](Morphism p2, Morphism p1, Morphism d0, Morphism d1, Morphism d2,
                 std::string rule) {
    s.right = std::move(p2);
    s.bottom = std::move(p1);
    s.d0 = std::move(d0);
    s.d1 = std::move(d1);
    s.d2prime = std::move(d2);
    s.rule = std::move(rule);
    return std::optional<SplitPushout>(s);
  };
  if (!t.conj && !l.conj && i < j)
    return set(sg(n - 2, j - 1), sg(n - 2, i), dl(n - 2, j - 1, 0), dl(n - 1, j, 0),
               dl(n - 1, i, 0), "sigma-sigma i<j");
  if (t.conj && l.conj && j == i + 1)
    return set(gm(n - 2, i), gm(n - 2, i), dl(n - 2, i + 1, 1), dl(n - 1, i + 2, 1),
               dl(n - 1, i, 1), "gamma-gamma j=i+1");
  if (t.conj && l.conj && j > i + 1)
    return set(gm(n - 2, j - 1), gm(n - 2, i), dl(n - 2, j - 1, 1), dl(n - 1, j, 1),
               dl(n - 1, i, 1), "gamma-gamma j>i+1");
  // gamma^i against sigma^j with i > j: top sigma^j, left gamma^i
  if (!t.conj && l.conj && l.i > t.i)
    return set(gm(n - 2, j - 1), sg(n - 2, i), dl(n - 2, j - 1, 1), dl(n - 1, j, 1),
               dl(n - 1, i, 1), "gamma-sigma i>j");
  if (t.conj && !l.conj && i == j)
    return set(sg(n - 2, i), sg(n - 2, i), dl(n - 2, i, 0), dl(n - 1, i, 0),
               dl(n - 1, i + 1, 1), "gamma-sigma i=j");
  if (t.conj && !l.conj && j == i + 1)
    return set(sg(n - 2, i), sg(n - 2, i), dl(n - 2, i, 0), dl(n - 1, j, 0),
               dl(n - 1, i, 1), "gamma-sigma i+1=j");
  if (t.conj && !l.conj && j > i + 1)
    return set(sg(n - 2, j - 1), gm(n - 2, i), dl(n - 2, j - 1, 0), dl(n - 1, j, 0),
               dl(n - 1, i, 1), "gamma-sigma i+1<j");
  return std::nullopt;
}

std::vector<Morphism> sections(Morphism const &e)
{
  std::vector<Morphism> out;
  auto id = Morphism::identity(e.dst());
  for (auto const &s : hom_set(e.dst(), e.src(), Site::QSigma).elements())
    if (compose(e, s) == id)
      out.push_back(s);
  return out;
}

std::optional<SplitPushout> search(Morphism const &a1, Morphism const &a2)
{
  auto d1s = sections(a2);
  auto d2s = sections(a1);
  int top = std::min(a1.dst(), a2.dst());
  for (int ell = top; ell >= 0; --ell) {
    for (auto const &p2 : hom_set(a1.dst(), ell, Site::QSigma).elements()) {
      if (!classify(p2).is_epi)
        continue;
      auto p2a1 = compose(p2, a1);
      auto d0s = sections(p2);
      for (auto const &d1 : d1s) {
        auto p1 = compose_all({p2, a1, d1});
        if (compose(p1, a2) != p2a1)
          continue;
        for (auto const &d0 : d0s) {
          if (compose(d0, p1) != compose(a1, d1))
            continue;
          for (auto const &d2 : d2s) {
            SplitPushout s{a1, a2, p2, p1, d0, d1, d2, false, "witness search"};
            if (s.valid())
              return s;
          }
        }
      }
    }
  }
  return std::nullopt;
}

} // namespace

SplitPushout split_pushout(Morphism const &e1, Morphism const &e2)
{
  for (auto const *e : {&e1, &e2})
    if (!classify(*e).is_epi)
      throw InputError(InputError::Kind::NotEpi, e->str() + " is not an epimorphism");
  if (e1.src() != e2.src())
    throw InputError(InputError::Kind::CompositionMismatch,
                     "split_pushout needs a common source");

  if (e1 == e2) {
    auto s = epi_section(e1);
    auto id = Morphism::identity(e1.dst());
    return {e1, e2, id, id, id, s, s, false, "equal epimorphisms"};
  }

  auto g1 = as_generator(e1);
  auto g2 = as_generator(e2);
  int n = e1.src();
  if (g1 && g2) {
    if (auto s = table(*g1, *g2, n))
      return *s;
    if (auto s = table(*g2, *g1, n)) {
      s->transposed = true;
      return *s;
    }
  }
  if (auto s = search(e1, e2))
    return *s;
  if (auto s = search(e2, e1)) {
    s->transposed = true;
    return *s;
  }
  throw Error("no split pushout found for " + e1.str() + " and " + e2.str());
}

bool is_absolute_pushout(Morphism const &top, Morphism const &left, Morphism const &right,
                         Morphism const &bottom)
{
  if (compose(right, top) != compose(bottom, left))
    return false;
  int ell = right.dst();
  auto const &hb = hom_set(ell, top.dst(), Site::QSigma);
  auto const &hc = hom_set(ell, left.dst(), Site::QSigma);
  auto const &hp = hom_set(ell, ell, Site::QSigma);
  std::size_t nb = hb.size();
  std::vector<std::size_t> parent(nb + hc.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto const &u : hom_set(ell, top.src(), Site::QSigma).elements())
    parent[find(hb.index(compose(top, u)))] = find(nb + hc.index(compose(left, u)));

  // the induced map from the pushout of sets to Hom(P, P) must be bijective
  std::vector<int> image(parent.size(), -1);
  std::vector<bool> hit(hp.size(), false);
  std::size_t classes = 0;
  for (std::size_t x = 0; x < parent.size(); ++x) {
    int y = x < nb ? hp.index(compose(right, hb[x])) : hp.index(compose(bottom, hc[x - nb]));
    auto c = find(x);
    if (image[c] == -1) {
      image[c] = y;
      if (hit[y])
        return false;
      hit[y] = true;
      ++classes;
    }
  }
  return classes == hp.size();
}

std::optional<std::pair<Morphism, Morphism>> absolute_pushout(Morphism const &e1,
                                                              Morphism const &e2)
{
  try {
    auto sp = split_pushout(e1, e2);
    return std::make_pair(sp.tau_first(), sp.tau_second());
  } catch (InputError const &) {
    throw;
  } catch (Error const &) {
  }
  for (int ell = std::min(e1.dst(), e2.dst()); ell >= 0; --ell)
    for (auto const &t1 : hom_set(e1.dst(), ell, Site::QSigma).elements()) {
      if (!classify(t1).is_epi)
        continue;
      auto c = compose(t1, e1);
      for (auto const &t2 : hom_set(e2.dst(), ell, Site::QSigma).elements())
        if (classify(t2).is_epi && compose(t2, e2) == c && is_absolute_pushout(e1, e2, t1, t2))
          return std::make_pair(t1, t2);
    }
  return std::nullopt;
}

PushoutSurvey survey_epi_pushouts(int n_max)
{
  PushoutSurvey s;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Morphism> epis;
    for (int k = 0; k <= n; ++k)
      for (auto const &e : hom_set(n, k, Site::QSigma).elements())
        if (classify(e).is_epi)
          epis.push_back(e);
    for (auto const &e1 : epis)
      for (auto const &e2 : epis) {
        ++s.pairs;
        try {
          auto sp = split_pushout(e1, e2);
          if (sp.valid()) {
            ++s.split;
            continue;
          }
        } catch (Error const &) {
        }
        if (absolute_pushout(e1, e2))
          ++s.absolute_only;
        else
          s.no_absolute.emplace_back(e1, e2);
      }
  }
  return s;
}

} // namespace qsigma
