#include <algorithm>
#include <numeric>
#include <set>

#include "qsigma/errors.hpp"
#include "qsigma/presheaf.hpp"
#include "qsigma/union_find.hpp"

namespace qsigma {

PresheafPtr presheaf_of_labels(Site site, int n, int top,
                               std::vector<std::vector<Morphism>> const &labels,
                               std::function<Morphism(Morphism const &)> const &canon)
{
  if (static_cast<int>(labels.size()) != top + 1)
    throw InputError(InputError::Kind::InvalidPresheaf, "label levels do not match top");
  std::vector<std::unordered_map<Morphism, int, MorphismHash>> index(top + 1);
  std::vector<std::vector<std::string>> names(top + 1);
  Presheaf::Labels lab(top + 1);
  for (int m = 0; m <= top; ++m)
    for (auto const &f : labels[m]) {
      if (f.src() != m || f.dst() != n)
        throw InputError(InputError::Kind::InvalidPresheaf,
                         f.str() + " is not a morphism [" + std::to_string(m) + "] -> [" +
                             std::to_string(n) + "]");
      index[m].emplace(f, static_cast<int>(names[m].size()));
      names[m].push_back(f.tuple_str());
      lab[m].push_back(f);
    }
  std::vector<std::vector<int>> tables;
  for (auto const &g : generators(site, top)) {
    auto gm = g.morphism();
    auto &t = tables.emplace_back();
    for (auto const &f : labels[g.target()]) {
      auto h = compose(f, gm);
      if (canon)
        h = canon(h);
      auto it = index[g.source()].find(h);
      if (it == index[g.source()].end())
        throw InputError(InputError::Kind::InvalidPresheaf,
                         "sections are not closed under " + g.name() + ": " + h.str());
      t.push_back(it->second);
    }
  }
  return std::make_shared<Presheaf>(site, top, std::move(names), std::move(tables), false,
                                    std::move(lab));
}

PresheafPtr representable(int n, Site site, int top)
{
  if (n < 0)
    throw InputError(InputError::Kind::BadDimension, "negative dimension");
  top = std::max(n, top);
  std::vector<std::vector<Morphism>> labels;
  for (int m = 0; m <= top; ++m)
    labels.push_back(hom_set(m, n, site).elements());
  return presheaf_of_labels(site, n, top, labels);
}

PresheafPtr empty_presheaf(Site site, int top)
{
  return std::make_shared<Presheaf>(site, top, std::vector<std::vector<std::string>>(top + 1),
                                    std::vector<std::vector<int>>(generators(site, top).size()));
}

PresheafPtr point(Site site, int top) { return representable(0, site, top); }

namespace {

bool has_constant(Morphism const &f)
{
  return std::any_of(f.entries().begin(), f.entries().end(),
                     [](Entry const &e) { return e.is_constant(); });
}

PresheafMap sub_of_representable(int n, Site site, int top,
                                 std::function<bool(Morphism const &)> const &keep)
{
  auto cube = representable(n, site, top);
  std::vector<std::vector<bool>> marks(cube->top() + 1);
  for (int m = 0; m <= cube->top(); ++m)
    for (int k = 0; k < cube->size(m); ++k)
      marks[m].push_back(keep(*cube->label(m, k)));
  return subpresheaf(cube, marks);
}

} // namespace

PresheafMap boundary(int n, Site site, int top)
{
  // Without a constant entry every coordinate is a conjunction, so the
  // section is an epimorphism onto [n] and cannot factor lower.
  return sub_of_representable(n, site, top, has_constant);
}

PresheafMap cap(int n, int i, int eps, int top)
{
  if (i < 1 || i > n || (eps != 0 && eps != 1))
    throw InputError(InputError::Kind::IndexOutOfRange,
                     "cap(" + std::to_string(n) + "," + std::to_string(i) + "," +
                         std::to_string(eps) + ") needs 1 <= i <= n and eps in {0,1}");
  return sub_of_representable(n, Site::Q, top, [&](Morphism const &f) {
    for (int k = 0; k < f.dst(); ++k)
      if (f[k].is_constant() && !(k + 1 == i && f[k].bit() == eps))
        return true;
    return false;
  });
}

PresheafMap subpresheaf(PresheafPtr const &x, std::vector<std::vector<bool>> const &keep)
{
  int top = x->top();
  if (static_cast<int>(keep.size()) != top + 1)
    throw InputError(InputError::Kind::InvalidPresheaf, "marks do not cover every level");
  std::vector<std::vector<int>> pos(top + 1);
  std::vector<std::vector<std::string>> names(top + 1);
  Presheaf::Labels labels(x->has_labels() ? top + 1 : 0);
  PresheafMap incl{nullptr, x, std::vector<std::vector<int>>(top + 1)};
  for (int l = 0; l <= top; ++l) {
    if (static_cast<int>(keep[l].size()) != x->size(l))
      throw InputError(InputError::Kind::InvalidPresheaf, "marks do not cover every section");
    pos[l].assign(x->size(l), -1);
    for (int k = 0; k < x->size(l); ++k)
      if (keep[l][k]) {
        pos[l][k] = static_cast<int>(names[l].size());
        names[l].push_back(x->name(l, k));
        if (x->has_labels())
          labels[l].push_back(x->label(l, k));
        incl.at[l].push_back(k);
      }
  }
  std::vector<std::vector<int>> tables;
  auto const &gens = x->gens();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto &t = tables.emplace_back();
    for (int k : incl.at[gens[g].target()]) {
      int v = pos[gens[g].source()][x->tables()[g][k]];
      if (v < 0)
        throw InputError(InputError::Kind::InvalidPresheaf,
                         "marked sections are not closed under " + gens[g].name());
      t.push_back(v);
    }
  }
  incl.src = std::make_shared<Presheaf>(x->site(), top, std::move(names), std::move(tables),
                                        x->truncated(), std::move(labels));
  return incl;
}

PresheafMap image(PresheafMap const &f)
{
  std::vector<std::vector<bool>> keep(f.dst->top() + 1);
  for (int l = 0; l <= f.dst->top(); ++l) {
    keep[l].assign(f.dst->size(l), false);
    for (int v : f.at[l])
      keep[l][v] = true;
  }
  return subpresheaf(f.dst, keep);
}

PresheafMap to_point(PresheafPtr const &x)
{
  PresheafMap m{x, point(x->site(), x->top()), {}};
  for (int l = 0; l <= x->top(); ++l)
    m.at.emplace_back(x->size(l), 0);
  return m;
}

Coproduct coproduct(std::vector<PresheafPtr> const &parts, Site site, int top)
{
  std::vector<std::vector<std::string>> names(top + 1);
  std::vector<std::vector<int>> offset(parts.size(), std::vector<int>(top + 1));
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p]->site() != site)
      throw InputError(InputError::Kind::SiteMismatch, "coproduct of different sites");
    if (parts[p]->top() != top)
      throw InputError(InputError::Kind::TruncationMismatch,
                       "coproduct parts must be stored to level " + std::to_string(top));
    for (int l = 0; l <= top; ++l) {
      offset[p][l] = static_cast<int>(names[l].size());
      for (auto const &nm : parts[p]->names(l))
        names[l].push_back(std::to_string(p) + "." + nm);
    }
  }
  auto gens = generators(site, top);
  std::vector<std::vector<int>> tables(gens.size());
  bool truncated = false;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    truncated = truncated || parts[p]->truncated();
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (int v : parts[p]->tables()[g])
        tables[g].push_back(v + offset[p][gens[g].source()]);
  }
  Coproduct c;
  c.object = std::make_shared<Presheaf>(site, top, std::move(names), std::move(tables), truncated);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    PresheafMap m{parts[p], c.object, {}};
    for (int l = 0; l <= top; ++l) {
      m.at.emplace_back(parts[p]->size(l));
      std::iota(m.at.back().begin(), m.at.back().end(), offset[p][l]);
    }
    c.injections.push_back(std::move(m));
  }
  return c;
}

Pushout pushout(PresheafMap const &f, PresheafMap const &g)
{
  auto const &a = *f.src;
  auto const &b = f.dst;
  auto const &c = g.dst;
  if (f.src.get() != g.src.get() && !(*f.src == *g.src))
    throw InputError(InputError::Kind::CompositionMismatch, "pushout legs need a common source");
  if (b->site() != c->site())
    throw InputError(InputError::Kind::SiteMismatch, "pushout of different sites");
  if (b->top() != c->top() || a.top() != b->top())
    throw InputError(InputError::Kind::TruncationMismatch, "pushout legs stored to different levels");
  int top = b->top();
  Pushout out;
  out.from_b = {b, nullptr, {}};
  out.from_c = {c, nullptr, {}};
  std::vector<std::vector<std::string>> names(top + 1);
  // reps[l][class] = element of B_l + C_l
  std::vector<std::vector<std::size_t>> reps(top + 1);
  std::vector<std::vector<int>> class_of(top + 1);
  for (int l = 0; l <= top; ++l) {
    std::size_t nb = b->size(l);
    UnionFind uf(nb + c->size(l));
    for (int x = 0; x < a.size(l); ++x)
      uf.unite(f.at[l][x], nb + g.at[l][x]);
    reps[l] = uf.classes(class_of[l]);
    std::set<std::string> used;
    for (auto r : reps[l]) {
      std::string nm = r < nb ? b->name(l, r) : c->name(l, r - nb);
      while (!used.insert(nm).second)
        nm += "'";
      names[l].push_back(nm);
    }
    out.from_b.at.emplace_back(class_of[l].begin(), class_of[l].begin() + nb);
    out.from_c.at.emplace_back(class_of[l].begin() + nb, class_of[l].end());
  }
  auto const &gens = b->gens();
  std::vector<std::vector<int>> tables;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    int s = gens[k].source(), t = gens[k].target();
    std::size_t nb_s = b->size(s), nb_t = b->size(t);
    auto &tab = tables.emplace_back();
    for (auto r : reps[t]) {
      std::size_t v = r < nb_t ? b->tables()[k][r] : nb_s + c->tables()[k][r - nb_t];
      tab.push_back(class_of[s][v]);
    }
  }
  out.object = std::make_shared<Presheaf>(b->site(), top, std::move(names), std::move(tables),
                                          b->truncated() || c->truncated());
  out.from_b.dst = out.object;
  out.from_c.dst = out.object;
  return out;
}

// ------------------------------------------------------- group actions

PresheafMap quotient_by_group(PresheafPtr const &x, std::vector<Permutation> const &gens)
{
  if (x->site() != Site::QSigma)
    throw InputError(InputError::Kind::SiteMismatch, "group quotients need Q_Sigma");
  if (!x->has_labels())
    throw InputError(InputError::Kind::InvalidPresheaf, "group quotient needs labelled sections");
  int n = -1;
  for (int l = 0; l <= x->top(); ++l)
    for (int k = 0; k < x->size(l); ++k) {
      auto const &f = x->label(l, k);
      if (!f)
        throw InputError(InputError::Kind::InvalidPresheaf, "unlabelled section " + x->name(l, k));
      if (n >= 0 && f->dst() != n)
        throw InputError(InputError::Kind::InvalidPresheaf, "labels have different targets");
      n = f->dst();
    }
  if (n < 0)
    return identity_map(x);
  for (auto const &p : gens)
    if (p.size() != n)
      throw InputError(InputError::Kind::BadDimension,
                       "permutation " + p.str_one_line() + " does not act on [" +
                           std::to_string(n) + "]");
  std::vector<Morphism> group;
  for (auto const &p : generated_subgroup(n, gens))
    group.push_back(cosymmetry(p));
  auto canon = [&group](Morphism const &f) {
    Morphism best = f;
    for (auto const &h : group)
      best = std::min(best, compose(h, f));
    return best;
  };
  std::vector<std::vector<Morphism>> labels(x->top() + 1);
  for (int l = 0; l <= x->top(); ++l) {
    std::set<Morphism> reps;
    for (int k = 0; k < x->size(l); ++k)
      reps.insert(canon(*x->label(l, k)));
    labels[l].assign(reps.begin(), reps.end());
  }
  auto q = presheaf_of_labels(Site::QSigma, n, x->top(), labels, canon);
  PresheafMap m{x, q, std::vector<std::vector<int>>(x->top() + 1)};
  for (int l = 0; l <= x->top(); ++l)
    for (int k = 0; k < x->size(l); ++k)
      m.at[l].push_back(q->find_label(canon(*x->label(l, k))));
  return m;
}

std::vector<Permutation> stabilizer(Presheaf const &x, int level, int id)
{
  if (x.site() == Site::Q)
    return {Permutation::identity(level)};
  std::vector<Permutation> out;
  for (auto const &p : all_permutations(level))
    if (x.act(cosymmetry(p), id) == id)
      out.push_back(p);
  return out;
}

} // namespace qsigma
