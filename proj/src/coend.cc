#include "coend.hpp"

#include "qsigma/errors.hpp"
#include "qsigma/union_find.hpp"

namespace qsigma::detail {

std::tuple<int, std::size_t, int> ColimitLevel::decode(Presheaf const &x, std::size_t e) const
{
  int m = x.top();
  while (offset[m] > e || x.size(m) == 0)
    --m;
  std::size_t r = e - offset[m];
  return {m, r / x.size(m), static_cast<int>(r % x.size(m))};
}

ColimitLevel colimit_level(Presheaf const &x, int n, Site hom_site)
{
  ColimitLevel c;
  c.n = n;
  c.hom_site = hom_site;
  std::size_t total = 0;
  for (int m = 0; m <= x.top(); ++m) {
    c.offset.push_back(total);
    total += hom_set(n, m, hom_site).size() * x.size(m);
  }
  if (total > 20'000'000)
    throw ResourceBound("level " + std::to_string(n) + " of the coend needs " +
                        std::to_string(total) + " elements");
  UnionFind uf(total);
  auto const &gens = x.gens();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    int m = gens[k].source(), mp = gens[k].target();
    auto hm = gens[k].morphism();
    auto const &from = hom_set(n, m, hom_site);
    auto const &to = hom_set(n, mp, hom_site);
    for (std::size_t f = 0; f < from.size(); ++f) {
      std::size_t hf = to.index(compose(hm, from[f]));
      for (int s = 0; s < x.size(mp); ++s)
        uf.unite(c.element(x, mp, hf, s), c.element(x, m, f, x.tables()[k][s]));
    }
  }
  c.reps = uf.classes(c.class_of);
  return c;
}

} // namespace qsigma::detail
