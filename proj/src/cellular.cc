#include <algorithm>
#include <set>

#include "qsigma/errors.hpp"
#include "qsigma/presheaf.hpp"

namespace qsigma {

Report verify_skeletal_pushout(PresheafPtr const &x, int k)
{
  Report r;
  r.title = "skeletal pushout in degree " + std::to_string(k);
  if (k < 0)
    throw InputError(InputError::Kind::BadDimension, "negative degree");
  Site site = x->site();
  int top = std::max(x->top(), k);
  auto xe = extend(x, top);
  auto skk = skeleton(xe, k);
  auto const &sk = skk.src;
  PresheafMap lower = k > 0 ? skeleton(sk, k - 1) : PresheafMap{empty_presheaf(site, top), sk, {}};
  if (k == 0)
    lower.at.assign(top + 1, {});

  // orbit representatives of nondegenerate k-sections under Aut([k])
  std::vector<int> reps;
  std::set<int> seen;
  auto perms = site == Site::QSigma ? all_permutations(k)
                                    : std::vector<Permutation>{Permutation::identity(k)};
  for (int f : nondegenerate_sections(*xe, k)) {
    if (seen.count(f))
      continue;
    reps.push_back(f);
    for (auto const &p : perms)
      seen.insert(xe->act(cosymmetry(p), f));
  }
  r.add("cells", true,
        std::to_string(reps.size()) + " orbit(s) of nondegenerate " + std::to_string(k) +
            "-sections");

  std::vector<PresheafPtr> bounds, cubes;
  std::vector<PresheafMap> attach, chars, incls;
  auto cube = representable(k, site, top);
  auto bd = boundary(k, site, top);
  for (int f : reps) {
    auto stab = stabilizer(*xe, k, f);
    auto qc = site == Site::QSigma ? quotient_by_group(cube, stab).dst : cube;
    auto qb = site == Site::QSigma ? quotient_by_group(bd.src, stab).dst : bd.src;
    PresheafMap incl{qb, qc, {}}, att{qb, lower.src, {}}, chi{qc, sk, {}};
    bool inside = true;
    for (int l = 0; l <= top; ++l) {
      auto &row_i = incl.at.emplace_back();
      auto &row_a = att.at.emplace_back();
      auto &row_c = chi.at.emplace_back();
      row_c.assign(qc->size(l), -1);
      for (int u = 0; u < qc->size(l); ++u) {
        int in_x = xe->act(*qc->label(l, u), f);
        // sk_k X is a subpresheaf of X; locate the section there
        auto const &at = skk.at[l];
        auto it = std::find(at.begin(), at.end(), in_x);
        row_c[u] = it == at.end() ? -1 : static_cast<int>(it - at.begin());
      }
      for (int u = 0; u < qb->size(l); ++u) {
        int c = qc->find_label(*qb->label(l, u));
        row_i.push_back(c);
        int s = c < 0 ? -1 : row_c[c];
        auto const &low = lower.at[l];
        auto it = std::find(low.begin(), low.end(), s);
        inside = inside && it != low.end();
        row_a.push_back(it == low.end() ? 0 : static_cast<int>(it - low.begin()));
      }
    }
    bool natural = incl.natural() && chi.natural() && inside && att.natural();
    r.add("cell " + xe->name(k, f), natural,
          "stabilizer of order " + std::to_string(stab.size()) +
              (inside ? "" : "; boundary leaves the lower skeleton"));
    if (!natural)
      return r;
    bounds.push_back(qb);
    cubes.push_back(qc);
    attach.push_back(att);
    chars.push_back(chi);
    incls.push_back(incl);
  }

  auto a = coproduct(bounds, site, top);
  auto b = coproduct(cubes, site, top);
  PresheafMap a_to_low{a.object, lower.src, std::vector<std::vector<int>>(top + 1)};
  PresheafMap a_to_b{a.object, b.object, std::vector<std::vector<int>>(top + 1)};
  std::vector<std::vector<int>> b_to_sk(top + 1);
  for (std::size_t p = 0; p < reps.size(); ++p)
    for (int l = 0; l <= top; ++l) {
      for (int u = 0; u < bounds[p]->size(l); ++u) {
        a_to_low.at[l].push_back(attach[p].at[l][u]);
        a_to_b.at[l].push_back(b.injections[p].at[l][incls[p].at[l][u]]);
      }
      for (int u = 0; u < cubes[p]->size(l); ++u)
        b_to_sk[l].push_back(chars[p].at[l][u]);
    }
  auto po = pushout(a_to_low, a_to_b);

  // the comparison P -> sk_k X induced by the inclusion and the cells
  PresheafMap cmp{po.object, sk, {}};
  bool defined = true;
  for (int l = 0; l <= top; ++l) {
    auto &row = cmp.at.emplace_back(po.object->size(l), -1);
    auto put = [&](int cls, int v) {
      if (row[cls] >= 0 && row[cls] != v)
        defined = false;
      row[cls] = v;
    };
    for (int s = 0; s < lower.src->size(l); ++s)
      put(po.from_b.at[l][s], lower.at[l][s]);
    for (int u = 0; u < b.object->size(l); ++u)
      put(po.from_c.at[l][u], b_to_sk[l][u]);
  }
  r.add("comparison map is well defined", defined);
  if (!defined)
    return r;
  r.add("comparison map is natural", cmp.natural());
  for (int l = 0; l <= top; ++l) {
    std::vector<int> v = cmp.at[l];
    std::sort(v.begin(), v.end());
    bool bij = static_cast<int>(v.size()) == sk->size(l) &&
               std::adjacent_find(v.begin(), v.end()) == v.end();
    r.add("level " + std::to_string(l) + " bijective", bij,
          std::to_string(po.object->size(l)) + " vs " + std::to_string(sk->size(l)));
  }
  return r;
}

} // namespace qsigma
