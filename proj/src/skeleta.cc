#include <map>
#include <mutex>

#include "qsigma/errors.hpp"
#include "qsigma/presheaf.hpp"

namespace qsigma {

std::vector<Morphism> const &codim_one_epis(int r, Site site)
{
  static std::mutex lock;
  static std::map<std::pair<int, Site>, std::vector<Morphism>> cache;
  std::lock_guard guard(lock);
  auto [it, fresh] = cache.try_emplace({r, site});
  if (fresh && r > 0)
    for (auto const &e : hom_set(r, r - 1, site).elements())
      if (classify(e).is_epi)
        it->second.push_back(e);
  return it->second;
}

namespace {

// An epi e: [level] -> [level-1] with x = e^* y, together with y.
std::optional<std::pair<Morphism, int>> degenerate_witness(Presheaf const &x, int level, int id)
{
  if (level == 0)
    return std::nullopt;
  for (auto const &e : codim_one_epis(level, x.site())) {
    int y = x.act(epi_section(e), id);
    if (x.act(e, y) == id)
      return std::make_pair(e, y);
  }
  return std::nullopt;
}

} // namespace

bool is_degenerate(Presheaf const &x, int level, int id)
{
  return degenerate_witness(x, level, id).has_value();
}

std::vector<int> nondegenerate_sections(Presheaf const &x, int level)
{
  std::vector<int> out;
  for (int k = 0; k < x.size(level); ++k)
    if (!is_degenerate(x, level, k))
      out.push_back(k);
  return out;
}

EZDecomposition ez_decompose_section(Presheaf const &x, int level, int id)
{
  EZDecomposition d{Morphism::identity(level), level, id};
  while (auto w = degenerate_witness(x, d.level, d.id)) {
    d.epi = compose(w->first, d.epi);
    d.level -= 1;
    d.id = w->second;
  }
  return d;
}

PresheafMap skeleton(PresheafPtr const &x, int k)
{
  if (k < 0)
    throw InputError(InputError::Kind::BadDimension, "negative skeleton degree");
  if (k >= x->top())
    return identity_map(x);
  std::vector<std::vector<bool>> keep(x->top() + 1);
  for (int l = 0; l <= x->top(); ++l)
    for (int i = 0; i < x->size(l); ++i)
      keep[l].push_back(l <= k || ez_decompose_section(*x, l, i).level <= k);
  return subpresheaf(x, keep);
}

PresheafPtr truncate(PresheafPtr const &x, int k)
{
  if (k < 0 || k > x->top())
    throw InputError(InputError::Kind::TruncationMismatch,
                     "cannot truncate a presheaf stored to " + std::to_string(x->top()) +
                         " at " + std::to_string(k));
  if (k == x->top())
    return x;
  std::vector<std::vector<std::string>> names;
  Presheaf::Labels labels;
  for (int l = 0; l <= k; ++l) {
    names.push_back(x->names(l));
    if (x->has_labels()) {
      auto &row = labels.emplace_back();
      for (int i = 0; i < x->size(l); ++i)
        row.push_back(x->label(l, i));
    }
  }
  std::vector<std::vector<int>> tables;
  for (auto const &g : generators(x->site(), k))
    tables.push_back(x->tables()[x->gen_index(g)]);
  return std::make_shared<Presheaf>(x->site(), k, std::move(names), std::move(tables), true,
                                    std::move(labels));
}

PresheafPtr coskeleton(PresheafPtr const &x, int k, int up_to, std::size_t limit)
{
  if (k < 0 || up_to < 0)
    throw InputError(InputError::Kind::BadDimension, "negative coskeleton degree");
  if (k > x->top() && x->truncated())
    throw InputError(InputError::Kind::TruncationMismatch,
                     "coskeleton needs the presheaf up to level " + std::to_string(k));
  auto xk = truncate(extend(x, k), k);
  Site site = x->site();

  // level r is Hom(cube(r) restricted to degrees <= k, X restricted likewise)
  std::vector<PresheafPtr> cubes;
  std::vector<std::vector<PresheafMap>> maps;
  std::vector<std::map<std::vector<std::vector<int>>, int>> index(up_to + 1);
  std::vector<std::vector<std::string>> names(up_to + 1);
  HomSearchOptions opts;
  opts.limit = limit;
  for (int r = 0; r <= up_to; ++r) {
    cubes.push_back(truncate(representable(r, site, k), k));
    maps.push_back(hom_presheaf(cubes.back(), xk, opts));
    for (std::size_t h = 0; h < maps[r].size(); ++h) {
      index[r].emplace(maps[r][h].at, static_cast<int>(h));
      if (r <= k)
        names[r].push_back(xk->name(r, maps[r][h](r, cubes[r]->find_label(Morphism::identity(r)))));
      else
        names[r].push_back("c" + std::to_string(r) + "." + std::to_string(h));
    }
  }
  // g^* phi = phi composed with g_*, where g_* postcomposes on sections of the cube
  std::vector<std::vector<int>> tables;
  for (auto const &g : generators(site, up_to)) {
    int a = g.source(), b = g.target();
    auto gm = g.morphism();
    std::vector<std::vector<int>> push(k + 1);
    for (int l = 0; l <= k; ++l)
      for (int u = 0; u < cubes[a]->size(l); ++u)
        push[l].push_back(cubes[b]->find_label(compose(gm, *cubes[a]->label(l, u))));
    auto &t = tables.emplace_back();
    for (auto const &phi : maps[b]) {
      std::vector<std::vector<int>> at(k + 1);
      for (int l = 0; l <= k; ++l)
        for (int v : push[l])
          at[l].push_back(phi.at[l][v]);
      t.push_back(index[a].at(at));
    }
  }
  return std::make_shared<Presheaf>(site, up_to, std::move(names), std::move(tables), true);
}

} // namespace qsigma
