#include <algorithm>
#include <set>
#include <tuple>

#include "coend.hpp"
#include "qsigma/errors.hpp"
#include "qsigma/presheaf.hpp"

namespace qsigma {

using detail::ColimitLevel;
using detail::colimit_level;

PresheafPtr extend(PresheafPtr const &x, int top)
{
  int base = x->top();
  if (top <= base)
    return x;
  if (x->truncated())
    throw InputError(InputError::Kind::TruncationMismatch,
                     "a truncated presheaf has no extension past level " + std::to_string(base));
  Site site = x->site();
  std::vector<ColimitLevel> levels(top + 1);
  std::vector<std::vector<std::string>> names(top + 1);
  Presheaf::Labels labels(x->has_labels() ? top + 1 : 0);
  for (int l = 0; l <= base; ++l) {
    names[l] = x->names(l);
    if (x->has_labels())
      for (int i = 0; i < x->size(l); ++i)
        labels[l].push_back(x->label(l, i));
  }
  for (int n = base + 1; n <= top; ++n) {
    levels[n] = colimit_level(*x, n, x->site());
    for (auto r : levels[n].reps) {
      auto [m, f, s] = levels[n].decode(*x, r);
      auto const &fm = hom_set(n, m, site)[f];
      names[n].push_back(fm.tuple_str() + "*" + x->name(m, s));
      if (x->has_labels()) {
        auto const &lab = x->label(m, s);
        labels[n].push_back(lab ? std::optional(compose(*lab, fm)) : std::nullopt);
      }
    }
  }

  std::vector<std::vector<int>> tables;
  for (auto const &g : generators(site, top)) {
    int a = g.source(), b = g.target();
    auto &t = tables.emplace_back();
    if (a <= base && b <= base) {
      t = x->tables()[x->gen_index(g)];
      continue;
    }
    auto gm = g.morphism();
    auto image = [&](int m, Morphism const &f, int s) {
      auto fg = compose(f, gm);
      if (a <= base)
        return x->act(fg, s);
      auto const &c = levels[a];
      return c.class_of[c.element(*x, m, hom_set(a, m, site).index(fg), s)];
    };
    if (b <= base)
      for (int s = 0; s < x->size(b); ++s)
        t.push_back(image(b, Morphism::identity(b), s));
    else
      for (auto r : levels[b].reps) {
        auto [m, f, s] = levels[b].decode(*x, r);
        t.push_back(image(m, hom_set(b, m, site)[f], s));
      }
  }
  return std::make_shared<Presheaf>(site, top, std::move(names), std::move(tables), false,
                                    std::move(labels));
}

PresheafMap extend_map(PresheafMap const &f, int top)
{
  int base = f.src->top();
  if (top <= base)
    return f;
  PresheafMap out{extend(f.src, top), extend(f.dst, top), f.at};
  for (int n = base + 1; n <= top; ++n) {
    auto &row = out.at.emplace_back();
    for (int x = 0; x < out.src->size(n); ++x) {
      auto d = ez_decompose_section(*out.src, n, x);
      row.push_back(out.dst->act(d.epi, f.at[d.level][d.id]));
    }
  }
  return out;
}

ExtensionComparison compare_extension_methods(Presheaf const &x, int n)
{
  if (n <= x.top())
    throw InputError(InputError::Kind::BadDimension, "comparison level must exceed the stored top");
  ExtensionComparison out;
  auto c = colimit_level(x, n, x.site());
  out.colimit_count = c.reps.size();

  // (epi, nondegenerate) pairs up to (s, y) ~ (theta s, (theta^-1)^* y)
  std::set<std::tuple<int, int, int>> orbits;
  std::vector<bool> hit(c.reps.size(), false);
  bool well_defined = true, injective = true;
  std::string detail;
  for (int m = 0; m <= x.top(); ++m) {
    auto const &hs = hom_set(n, m, x.site());
    std::vector<Permutation> auts = x.site() == Site::QSigma
                                        ? all_permutations(m)
                                        : std::vector<Permutation>{Permutation::identity(m)};
    for (int y : nondegenerate_sections(x, m))
      for (std::size_t s = 0; s < hs.size(); ++s) {
        if (!classify(hs[s]).is_epi)
          continue;
        std::tuple<int, int, int> best{m, static_cast<int>(s), y};
        int cls = c.class_of[c.element(x, m, s, y)];
        for (auto const &p : auts) {
          int ts = hs.index(compose(cosymmetry(p), hs[s]));
          int ty = x.act(cosymmetry(p.inverse()), y);
          best = std::min(best, std::tuple<int, int, int>{m, ts, ty});
          if (c.class_of[c.element(x, m, ts, ty)] != cls && well_defined) {
            well_defined = false;
            detail = "orbit of " + hs[s].str() + " on " + x.name(m, y) + " splits";
          }
        }
        if (orbits.insert(best).second) {
          if (hit[cls] && injective) {
            injective = false;
            detail = "two orbits meet in the class of " + hs[s].str() + "*" + x.name(m, y);
          }
          hit[cls] = true;
        }
      }
  }
  out.ez_count = orbits.size();
  bool surjective = std::find(hit.begin(), hit.end(), false) == hit.end();
  if (!surjective && detail.empty())
    detail = "some colimit class has no nondegenerate representative";
  out.bijective = well_defined && injective && surjective;
  out.detail = detail;
  return out;
}

} // namespace qsigma
