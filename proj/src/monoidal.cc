#include "qsigma/monoidal.hpp"

#include <set>

#include "coend.hpp"
#include "qsigma/errors.hpp"
#include "qsigma/union_find.hpp"

namespace qsigma {

// ------------------------------------------------------------ convolution

std::size_t Convolution::element(int k, int i, int j, std::size_t f, int x, int y) const
{
  return _levels[k].offset[i][j] + (f * _x->size(i) + x) * _y->size(j) + y;
}

Convolution::Convolution(PresheafPtr x, PresheafPtr y) : _x(std::move(x)), _y(std::move(y))
{
  if (_x->site() != _y->site())
    throw InputError(InputError::Kind::SiteMismatch, "convolution of presheaves on different sites");
  if (_x->truncated() || _y->truncated())
    throw InputError(InputError::Kind::TruncationMismatch,
                     "convolution needs skeletal factors, not truncated ones");
  Site site = _x->site();
  int nx = _x->top(), ny = _y->top(), top = nx + ny;
  _levels.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    auto &lv = _levels[k];
    std::size_t total = 0;
    lv.offset.assign(nx + 1, std::vector<std::size_t>(ny + 1));
    for (int i = 0; i <= nx; ++i)
      for (int j = 0; j <= ny; ++j) {
        lv.offset[i][j] = total;
        total += hom_set(k, i + j, site).size() * _x->size(i) * _y->size(j);
      }
    if (total > 20'000'000)
      throw ResourceBound("level " + std::to_string(k) + " of the convolution needs " +
                          std::to_string(total) + " elements");
    UnionFind uf(total);
    // naturality in the first variable
    auto const &gx = _x->gens();
    for (std::size_t g = 0; g < gx.size(); ++g) {
      int i = gx[g].source(), ip = gx[g].target();
      auto h = gx[g].morphism();
      for (int j = 0; j <= ny; ++j) {
        auto hj = tensor(h, Morphism::identity(j));
        auto const &from = hom_set(k, i + j, site);
        auto const &to = hom_set(k, ip + j, site);
        for (std::size_t f = 0; f < from.size(); ++f) {
          std::size_t hf = to.index(compose(hj, from[f]));
          for (int xp = 0; xp < _x->size(ip); ++xp)
            for (int yy = 0; yy < _y->size(j); ++yy)
              uf.unite(element(k, ip, j, hf, xp, yy),
                       element(k, i, j, f, _x->tables()[g][xp], yy));
        }
      }
    }
    // and in the second
    auto const &gy = _y->gens();
    for (std::size_t g = 0; g < gy.size(); ++g) {
      int j = gy[g].source(), jp = gy[g].target();
      auto h = gy[g].morphism();
      for (int i = 0; i <= nx; ++i) {
        auto ih = tensor(Morphism::identity(i), h);
        auto const &from = hom_set(k, i + j, site);
        auto const &to = hom_set(k, i + jp, site);
        for (std::size_t f = 0; f < from.size(); ++f) {
          std::size_t hf = to.index(compose(ih, from[f]));
          for (int xx = 0; xx < _x->size(i); ++xx)
            for (int yp = 0; yp < _y->size(jp); ++yp)
              uf.unite(element(k, i, jp, hf, xx, yp),
                       element(k, i, j, f, xx, _y->tables()[g][yp]));
        }
      }
    }
    lv.reps = uf.classes(lv.class_of);
  }

  bool labelled = _x->has_labels() && _y->has_labels();
  std::vector<std::vector<std::string>> names(top + 1);
  Presheaf::Labels labels(labelled ? top + 1 : 0);
  for (int k = 0; k <= top; ++k)
    for (int c = 0; c < static_cast<int>(_levels[k].reps.size()); ++c) {
      auto r = representative(k, c);
      names[k].push_back(r.f.tuple_str() + "*" + _x->name(r.i, r.x) + "|" + _y->name(r.j, r.y));
      if (labelled) {
        auto const &lx = _x->label(r.i, r.x);
        auto const &ly = _y->label(r.j, r.y);
        labels[k].push_back(lx && ly ? std::optional(compose(tensor(*lx, *ly), r.f))
                                     : std::nullopt);
      }
    }
  std::vector<std::vector<int>> tables;
  for (auto const &g : generators(site, top)) {
    auto gm = g.morphism();
    auto &t = tables.emplace_back();
    for (std::size_t c = 0; c < _levels[g.target()].reps.size(); ++c) {
      auto r = representative(g.target(), static_cast<int>(c));
      t.push_back(section(r.i, r.j, compose(r.f, gm), r.x, r.y));
    }
  }
  _product = std::make_shared<Presheaf>(site, top, std::move(names), std::move(tables), false,
                                        std::move(labels));
}

int Convolution::section(int i, int j, Morphism const &f, int x, int y) const
{
  int k = f.src();
  if (k >= static_cast<int>(_levels.size()) || i > _x->top() || j > _y->top() ||
      f.dst() != i + j)
    throw InputError(InputError::Kind::IndexOutOfRange, "no such section of the convolution");
  int fi = hom_set(k, i + j, _x->site()).index(f);
  return _levels[k].class_of[element(k, i, j, fi, x, y)];
}

Convolution::Representative Convolution::representative(int level, int id) const
{
  auto const &lv = _levels[level];
  std::size_t e = lv.reps[id];
  for (int i = _x->top(); i >= 0; --i)
    for (int j = _y->top(); j >= 0; --j) {
      std::size_t width = std::size_t(_x->size(i)) * _y->size(j);
      if (lv.offset[i][j] > e || width == 0)
        continue;
      std::size_t r = e - lv.offset[i][j];
      auto const &hs = hom_set(level, i + j, _x->site());
      if (r >= hs.size() * width)
        continue;
      std::size_t f = r / width, rest = r % width;
      return {i, j, hs[f], static_cast<int>(rest / _y->size(j)),
              static_cast<int>(rest % _y->size(j))};
    }
  throw Error("convolution bookkeeping is inconsistent");
}

Convolution convolve(PresheafPtr const &x, PresheafPtr const &y) { return Convolution(x, y); }

PresheafMap tensor(PresheafMap const &f, PresheafMap const &g)
{
  Convolution src(f.src, g.src), dst(f.dst, g.dst);
  PresheafMap m{src.product(), dst.product(), {}};
  for (int k = 0; k <= src.product()->top(); ++k) {
    auto &row = m.at.emplace_back();
    for (int c = 0; c < src.product()->size(k); ++c) {
      auto r = src.representative(k, c);
      row.push_back(dst.section(r.i, r.j, r.f, f.at[r.i][r.x], g.at[r.j][r.y]));
    }
  }
  return m;
}

PushoutProduct pushout_product(PresheafMap const &f, PresheafMap const &g)
{
  auto a_l = tensor(identity_map(f.src), g); // A(x)K -> A(x)L
  auto b_k = tensor(f, identity_map(g.src)); // A(x)K -> B(x)K
  PushoutProduct out{pushout(a_l, b_k), {}};
  auto from_al = tensor(f, identity_map(g.dst)); // A(x)L -> B(x)L
  auto from_bk = tensor(identity_map(f.dst), g); // B(x)K -> B(x)L
  auto const &p = out.corner.object;
  out.map = {p, from_al.dst, {}};
  for (int k = 0; k <= p->top(); ++k) {
    auto &row = out.map.at.emplace_back(p->size(k), -1);
    auto put = [&](int cls, int v) {
      if (row[cls] >= 0 && row[cls] != v)
        throw Error("pushout-product legs disagree");
      row[cls] = v;
    };
    for (int s = 0; s < from_al.src->size(k); ++s)
      put(out.corner.from_b.at[k][s], from_al.at[k][s]);
    for (int s = 0; s < from_bk.src->size(k); ++s)
      put(out.corner.from_c.at[k][s], from_bk.at[k][s]);
  }
  return out;
}

// ------------------------------------------------------ i_! and i^*

namespace {

struct Lan
{
  PresheafPtr object;
  std::vector<detail::ColimitLevel> levels;

  int section(Presheaf const &x, int m, Morphism const &f, int s) const
  {
    auto const &c = levels[f.src()];
    return c.class_of[c.element(x, m, hom_set(f.src(), m, Site::QSigma).index(f), s)];
  }
};

Lan left_kan(PresheafPtr const &x)
{
  if (x->site() != Site::Q)
    throw InputError(InputError::Kind::SiteMismatch, "i_! takes a presheaf over Q");
  int top = x->top();
  Lan lan;
  std::vector<std::vector<std::string>> names(top + 1);
  Presheaf::Labels labels(x->has_labels() ? top + 1 : 0);
  for (int n = 0; n <= top; ++n) {
    lan.levels.push_back(detail::colimit_level(*x, n, Site::QSigma));
    std::set<std::string> used;
    for (auto r : lan.levels[n].reps) {
      auto [m, f, s] = lan.levels[n].decode(*x, r);
      auto const &fm = hom_set(n, m, Site::QSigma)[f];
      auto nm = fm.is_identity() ? x->name(m, s) : fm.tuple_str() + "*" + x->name(m, s);
      while (!used.insert(nm).second)
        nm += "'";
      names[n].push_back(nm);
      if (x->has_labels()) {
        auto const &lab = x->label(m, s);
        labels[n].push_back(lab ? std::optional(compose(*lab, fm)) : std::nullopt);
      }
    }
  }
  std::vector<std::vector<int>> tables;
  for (auto const &g : generators(Site::QSigma, top)) {
    auto gm = g.morphism();
    auto &t = tables.emplace_back();
    auto const &c = lan.levels[g.target()];
    for (auto r : c.reps) {
      auto [m, f, s] = c.decode(*x, r);
      t.push_back(lan.section(*x, m, compose(hom_set(g.target(), m, Site::QSigma)[f], gm), s));
    }
  }
  lan.object = std::make_shared<Presheaf>(Site::QSigma, top, std::move(names), std::move(tables),
                                          x->truncated(), std::move(labels));
  return lan;
}

} // namespace

PresheafPtr symmetrize(PresheafPtr const &x) { return left_kan(x).object; }

PresheafMap symmetrize_map(PresheafMap const &f)
{
  auto src = left_kan(f.src);
  auto dst = left_kan(f.dst);
  PresheafMap m{src.object, dst.object, {}};
  for (int n = 0; n <= f.src->top(); ++n) {
    auto &row = m.at.emplace_back();
    auto const &c = src.levels[n];
    for (auto r : c.reps) {
      auto [mm, fi, s] = c.decode(*f.src, r);
      row.push_back(dst.section(*f.dst, mm, hom_set(n, mm, Site::QSigma)[fi], f.at[mm][s]));
    }
  }
  return m;
}

PresheafPtr restriction(PresheafPtr const &y, int up_to)
{
  if (y->site() != Site::QSigma)
    throw InputError(InputError::Kind::SiteMismatch, "i^* takes a presheaf over Q_Sigma");
  if (up_to < 0)
    throw InputError(InputError::Kind::BadDimension, "negative level bound");
  auto ye = extend(y, up_to);
  std::vector<std::vector<std::string>> names;
  Presheaf::Labels labels;
  for (int l = 0; l <= up_to; ++l) {
    names.push_back(ye->names(l));
    if (ye->has_labels()) {
      auto &row = labels.emplace_back();
      for (int k = 0; k < ye->size(l); ++k)
        row.push_back(ye->label(l, k));
    }
  }
  std::vector<std::vector<int>> tables;
  for (auto const &g : generators(Site::Q, up_to))
    tables.push_back(ye->tables()[ye->gen_index(g)]);
  return std::make_shared<Presheaf>(Site::Q, up_to, std::move(names), std::move(tables), true,
                                    std::move(labels));
}

PresheafMap restriction_map(PresheafMap const &f, int up_to)
{
  auto e = extend_map(f, up_to);
  e.at.resize(up_to + 1);
  return {restriction(f.src, up_to), restriction(f.dst, up_to), std::move(e.at)};
}

PresheafMap adjunction_unit(PresheafPtr const &x, int up_to)
{
  auto lan = left_kan(x);
  auto dom = truncate(extend(x, up_to), up_to);
  auto cod = restriction(lan.object, up_to);
  PresheafMap m{dom, cod, {}};
  for (int n = 0; n <= up_to; ++n) {
    auto &row = m.at.emplace_back();
    for (int s = 0; s < dom->size(n); ++s) {
      if (n <= x->top()) {
        row.push_back(lan.section(*x, n, Morphism::identity(n), s));
      } else {
        // above the stored levels every section is degenerate
        auto d = ez_decompose_section(*dom, n, s);
        row.push_back(cod->act(d.epi, m.at[d.level][d.id]));
      }
    }
  }
  return m;
}

PresheafMap adjunction_counit(PresheafPtr const &y, int up_to)
{
  auto a = restriction(y, up_to);
  auto lan = left_kan(a);
  auto cod = truncate(extend(y, up_to), up_to);
  PresheafMap m{lan.object, cod, {}};
  for (int n = 0; n <= up_to; ++n) {
    auto &row = m.at.emplace_back();
    auto const &c = lan.levels[n];
    for (auto r : c.reps) {
      auto [mm, f, s] = c.decode(*a, r);
      row.push_back(cod->act(hom_set(n, mm, Site::QSigma)[f], s));
    }
  }
  return m;
}

Report verify_triangle_identities(PresheafPtr const &x, PresheafPtr const &y, int up_to)
{
  Report r;
  r.title = "triangle identities to level " + std::to_string(up_to);
  auto is_identity = [](PresheafMap const &m) {
    for (auto const &row : m.at)
      for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k] != static_cast<int>(k))
          return false;
    return m.src->sizes() == m.dst->sizes();
  };

  // i^*(counit) . unit(i^* Y) = id
  auto iy = restriction(y, up_to);
  auto eta = adjunction_unit(iy, up_to);
  auto eps = restriction_map(adjunction_counit(y, up_to), up_to);
  auto first = compose(eps, eta);
  r.add("counit after unit on i^*Y", is_identity(first) && first.natural());

  // counit(i_! X) . i_!(unit X) = id
  auto xs = truncate(extend(x, up_to), up_to);
  auto lx = symmetrize(xs);
  auto second = compose(adjunction_counit(lx, up_to), symmetrize_map(adjunction_unit(xs, up_to)));
  r.add("counit after i_!(unit) on i_!X", is_identity(second) && second.natural());
  return r;
}

} // namespace qsigma
