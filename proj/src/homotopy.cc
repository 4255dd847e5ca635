#include "qsigma/homotopy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qsigma/errors.hpp"
#include "qsigma/monoidal.hpp"

namespace qsigma {

std::optional<PresheafMap> solve_lifting(LiftingProblem const &p, std::size_t limit)
{
  int top = std::max({p.left.src->top(), p.left.dst->top(), p.right.src->top(),
                      p.right.dst->top()});
  auto left = extend_map(p.left, top);
  auto right = extend_map(p.right, top);
  auto upper = extend_map(p.top, top);
  auto lower = extend_map(p.bottom, top);
  if (compose(right, upper).at != compose(lower, left).at)
    throw InputError(InputError::Kind::CompositionMismatch, "the lifting square does not commute");

  HomSearchOptions opts;
  opts.limit = limit;
  opts.first_only = true;
  opts.forced.resize(top + 1);
  for (int l = 0; l <= top; ++l) {
    opts.forced[l].assign(left.dst->size(l), -1);
    for (int a = 0; a < left.src->size(l); ++a) {
      int &slot = opts.forced[l][left(l, a)];
      if (slot >= 0 && slot != upper(l, a))
        return std::nullopt; // left identifies sections that top separates
      slot = upper(l, a);
    }
  }
  opts.allowed = [&](int l, int b, int x) {
    return l > top || right(l, x) == lower(l, b);
  };
  auto found = hom_presheaf(left.dst, upper.dst, opts);
  if (found.empty())
    return std::nullopt;
  auto h = found.front();
  for (int l = 0; l <= top; ++l) {
    for (int a = 0; a < left.src->size(l); ++a)
      if (h(l, left(l, a)) != upper(l, a))
        throw std::logic_error("filler disagrees with the top map");
    for (int b = 0; b < left.dst->size(l); ++b)
      if (right(l, h(l, b)) != lower(l, b))
        throw std::logic_error("filler disagrees with the bottom map");
  }
  return h;
}

Report is_fibrant(PresheafPtr const &x, int up_to, std::size_t limit)
{
  if (x->site() != Site::QSigma)
    throw InputError(InputError::Kind::SiteMismatch, "fibrancy is checked over Q_Sigma");
  Report r;
  r.title = "cap filling";
  HomSearchOptions opts;
  opts.limit = limit;
  for (int n = 1; n <= up_to; ++n)
    for (int j = 1; j <= n; ++j)
      for (int eps = 0; eps <= 1; ++eps) {
        auto incl = extend_map(symmetrize_map(cap(n, j, eps)), std::max(n, x->top()));
        std::set<std::vector<std::vector<int>>> fillable;
        for (auto const &h : hom_presheaf(incl.dst, x, opts))
          fillable.insert(compose(h, incl).at);
        std::size_t total = 0, filled = 0;
        for (auto const &u : hom_presheaf(incl.src, x, opts)) {
          ++total;
          filled += fillable.count(u.at);
        }
        r.add("cap n=" + std::to_string(n) + " j=" + std::to_string(j) +
                  " eps=" + std::to_string(eps),
              filled == total,
              std::to_string(filled) + " of " + std::to_string(total) + " maps extend");
      }
  return r;
}

PresheafMap vertex_map(PresheafPtr const &y, int v)
{
  PresheafMap m{point(y->site(), y->top()), y, {}};
  for (int l = 0; l <= y->top(); ++l)
    m.at.push_back({y->act(Morphism(l, {}), v)});
  return m;
}

std::optional<Homotopy> find_homotopy(PresheafMap const &f, PresheafMap const &g, int n,
                                      std::size_t limit)
{
  if (n < 1)
    throw InputError(InputError::Kind::BadDimension, "a homotopy needs a cube of dimension >= 1");
  if (f.src->sizes() != g.src->sizes() || f.dst->sizes() != g.dst->sizes())
    throw InputError(InputError::Kind::CompositionMismatch, "f and g must be parallel");
  auto const &x = f.src;
  Convolution conv(x, representable(n, x->site()));
  auto const &cube = conv.right();
  int at0 = cube->find_label(constant_vertex(n, 0));
  int at1 = cube->find_label(constant_vertex(n, 1));

  HomSearchOptions opts;
  opts.limit = limit;
  opts.first_only = true;
  auto const &p = conv.product();
  opts.forced.resize(p->top() + 1);
  for (int l = 0; l <= p->top(); ++l)
    opts.forced[l].assign(p->size(l), -1);
  for (int l = 0; l <= x->top(); ++l)
    for (int s = 0; s < x->size(l); ++s) {
      auto id = Morphism::identity(l);
      opts.forced[l][conv.section(l, 0, id, s, at0)] = f(l, s);
      opts.forced[l][conv.section(l, 0, id, s, at1)] = g(l, s);
    }
  auto found = hom_presheaf(p, f.dst, opts);
  if (found.empty())
    return std::nullopt;
  return Homotopy{n, found.front()};
}

Morphism contraction(int n)
{
  std::vector<Entry> e;
  for (int k = 1; k <= n; ++k)
    e.push_back(Entry::conj({k, n + k}));
  return Morphism(2 * n, e);
}

Report verify_contraction(int n)
{
  Report r;
  r.title = "contraction of the " + std::to_string(n) + "-cube";
  auto h = contraction(n);
  auto end = [n](int eps) {
    std::vector<Entry> e;
    for (int k = 1; k <= n; ++k)
      e.push_back(Entry::conj({k}));
    for (int k = 1; k <= n; ++k)
      e.push_back(Entry::constant(eps));
    return Morphism(n, e);
  };
  std::vector<Entry> zeros(n, Entry::constant(0));
  auto at0 = compose(h, end(0));
  auto at1 = compose(h, end(1));
  r.add("at 0 it is the constant vertex 0", at0 == Morphism(n, zeros), at0.str());
  r.add("at 1 it is the identity", at1 == Morphism::identity(n), at1.str());
  auto fac = factor(h);
  r.add("normal form evaluates back", fac.evaluate() == h, fac.str());
  r.add("a symmetry followed by n conjunctions",
        static_cast<int>(fac.conjs.size()) == n && fac.faces.empty() && fac.degens.empty() &&
            (n == 1 || !fac.perm.is_identity()),
        fac.str());
  return r;
}

} // namespace qsigma
