#include "qsigma/realize.hpp"

#include <algorithm>

#include "qsigma/errors.hpp"
#include "qsigma/union_find.hpp"

namespace qsigma {

CubeSimplex act_on_cube(Morphism const &f, CubeSimplex const &s, int k)
{
  if (static_cast<int>(s.size()) != f.src())
    throw InputError(InputError::Kind::CompositionMismatch,
                     "simplex of the wrong cube for " + f.str());
  CubeSimplex out;
  for (auto const &e : f.entries()) {
    if (e.is_constant()) {
      out.push_back(e.bit() == 1 ? 0 : k + 1);
    } else {
      int t = 0;
      for (int sym : e.symbols())
        t = std::max(t, s[sym - 1]);
      out.push_back(t);
    }
  }
  return out;
}

SimplicialOperator face_operator(int k, int i)
{
  SimplicialOperator th;
  for (int q = 0; q < k; ++q)
    th.push_back(q < i ? q : q + 1);
  return th;
}

SimplicialOperator degeneracy_operator(int k, int i)
{
  SimplicialOperator th;
  for (int q = 0; q <= k + 1; ++q)
    th.push_back(q <= i ? q : q - 1);
  return th;
}

CubeSimplex apply_operator(SimplicialOperator const &theta, CubeSimplex const &s, int)
{
  int j = static_cast<int>(theta.size()) - 1;
  CubeSimplex out;
  for (int t : s) {
    int q = 0;
    while (q <= j && theta[q] < t)
      ++q;
    out.push_back(q);
  }
  return out;
}

bool SimplicialSet::is_degenerate(int k, int x) const
{
  for (int i = 0; i < k; ++i)
    if (degeneracy[k - 1][i][face[k][i][x]] == x)
      return true;
  return false;
}

std::vector<int> SimplicialSet::nondegenerate(int k) const
{
  std::vector<int> out;
  for (int x = 0; x < sizes[k]; ++x)
    if (!is_degenerate(k, x))
      out.push_back(x);
  return out;
}

Report SimplicialSet::check() const
{
  Report r;
  r.title = "simplicial identities";
  auto d = [&](int k, int i, int x) { return face[k][i][x]; };
  auto s = [&](int k, int i, int x) { return degeneracy[k][i][x]; };
  for (int k = 2; k <= top; ++k) {
    bool ok = true;
    for (int x = 0; x < sizes[k]; ++x)
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          ok = ok && d(k - 1, i, d(k, j, x)) == d(k - 1, j - 1, d(k, i, x));
    r.add("d_i d_j = d_{j-1} d_i at level " + std::to_string(k), ok);
  }
  for (int k = 0; k + 1 <= top; ++k) {
    bool ok = true;
    for (int x = 0; x < sizes[k]; ++x)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= k + 1; ++i) {
          int y = d(k + 1, i, s(k, j, x));
          if (i == j || i == j + 1)
            ok = ok && y == x;
          else if (i < j)
            ok = ok && y == s(k - 1, j - 1, d(k, i, x));
          else
            ok = ok && y == s(k - 1, j, d(k, i - 1, x));
        }
    r.add("d_i s_j at level " + std::to_string(k), ok);
  }
  for (int k = 0; k + 2 <= top; ++k) {
    bool ok = true;
    for (int x = 0; x < sizes[k]; ++x)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i)
          ok = ok && s(k + 1, i, s(k, j, x)) == s(k + 1, j + 1, s(k, i, x));
    r.add("s_i s_j = s_{j+1} s_i at level " + std::to_string(k), ok);
  }
  return r;
}

namespace {

// Level k of the coend of the sections of X against Delta[1]^n.
struct RealizedLevel
{
  int k = 0;
  std::vector<std::size_t> offset; // block of (n, ., .)
  std::vector<std::size_t> cube;   // (k+2)^n
  std::vector<int> class_of;
  std::vector<std::size_t> reps;

  std::size_t encode(CubeSimplex const &s) const
  {
    std::size_t c = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it)
      c = c * (k + 2) + *it;
    return c;
  }
  CubeSimplex decode_simplex(int n, std::size_t c) const
  {
    CubeSimplex s(n);
    for (int t = 0; t < n; ++t, c /= k + 2)
      s[t] = static_cast<int>(c % (k + 2));
    return s;
  }
  std::size_t element(int n, int x, CubeSimplex const &s) const
  {
    return offset[n] + x * cube[n] + encode(s);
  }
  int section(int n, int x, CubeSimplex const &s) const { return class_of[element(n, x, s)]; }
  std::tuple<int, int, CubeSimplex> decode(Presheaf const &x, std::size_t e) const
  {
    int n = x.top();
    while (offset[n] > e || x.size(n) == 0)
      --n;
    std::size_t r = e - offset[n];
    return {n, static_cast<int>(r / cube[n]), decode_simplex(n, r % cube[n])};
  }
};

struct Realization
{
  SimplicialSet set;
  std::vector<RealizedLevel> levels;
};

Realization realize_full(Presheaf const &x)
{
  if (x.truncated())
    throw InputError(InputError::Kind::TruncationMismatch,
                     "realization needs a skeletal presheaf, not a truncated one");
  int top = x.top();
  Realization out;
  out.set.top = top;
  for (int k = 0; k <= top; ++k) {
    RealizedLevel lv;
    lv.k = k;
    std::size_t total = 0;
    for (int n = 0; n <= top; ++n) {
      std::size_t c = 1;
      for (int t = 0; t < n; ++t)
        c *= k + 2;
      lv.cube.push_back(c);
      lv.offset.push_back(total);
      total += c * x.size(n);
    }
    if (total > 20'000'000)
      throw ResourceBound("realization level " + std::to_string(k) + " needs " +
                          std::to_string(total) + " elements");
    UnionFind uf(total);
    auto const &gens = x.gens();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int a = gens[g].source(), b = gens[g].target();
      auto gm = gens[g].morphism();
      for (std::size_t c = 0; c < lv.cube[a]; ++c) {
        auto s = lv.decode_simplex(a, c);
        auto gs = act_on_cube(gm, s, k);
        for (int xb = 0; xb < x.size(b); ++xb)
          uf.unite(lv.element(a, x.tables()[g][xb], s), lv.element(b, xb, gs));
      }
    }
    lv.reps = uf.classes(lv.class_of);
    out.set.sizes.push_back(static_cast<int>(lv.reps.size()));
    out.levels.push_back(std::move(lv));
  }
  auto &set = out.set;
  set.face.resize(top + 1);
  set.degeneracy.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    auto const &lv = out.levels[k];
    for (auto r : lv.reps) {
      auto [n, xs, s] = lv.decode(x, r);
      if (k >= 1) {
        set.face[k].resize(k + 1);
        for (int i = 0; i <= k; ++i)
          set.face[k][i].push_back(
              out.levels[k - 1].section(n, xs, apply_operator(face_operator(k, i), s, k)));
      }
      if (k + 1 <= top) {
        set.degeneracy[k].resize(k + 1);
        for (int i = 0; i <= k; ++i)
          set.degeneracy[k][i].push_back(
              out.levels[k + 1].section(n, xs, apply_operator(degeneracy_operator(k, i), s, k)));
      }
    }
  }
  return out;
}

} // namespace

SimplicialSet realize(Presheaf const &x) { return realize_full(x).set; }

std::vector<std::vector<int>> realize_map(PresheafMap const &f)
{
  auto src = realize_full(*f.src);
  auto dst = realize_full(*f.dst);
  std::vector<std::vector<int>> at;
  for (int k = 0; k <= src.set.top; ++k) {
    auto &row = at.emplace_back();
    for (auto r : src.levels[k].reps) {
      auto [n, x, s] = src.levels[k].decode(*f.src, r);
      row.push_back(dst.levels[k].section(n, f.at[n][x], s));
    }
  }
  return at;
}

Report verify_cubical_monoid_delta1(int up_to_level)
{
  Report r;
  r.title = "Delta[1] as a cubical monoid";
  auto mu_m = conjunction(1, 1);
  auto s_m = codegeneracy(0, 1);
  for (int k = 0; k <= up_to_level; ++k) {
    auto mu = [&](int a, int b) { return act_on_cube(mu_m, {a, b}, k)[0]; };
    int one = act_on_cube(constant_vertex(1, 1), {}, k)[0];
    int zero = act_on_cube(constant_vertex(1, 0), {}, k)[0];
    bool assoc = true, unit = true, absorb = true, smap = true, natural = true;
    for (int a = 0; a <= k + 1; ++a)
      for (int b = 0; b <= k + 1; ++b) {
        unit = unit && mu(a, one) == a && mu(one, a) == a;
        absorb = absorb && mu(a, zero) == zero && mu(zero, a) == zero;
        smap = smap && act_on_cube(s_m, {mu(a, b)}, k).empty();
        for (int c = 0; c <= k + 1; ++c)
          assoc = assoc && mu(mu(a, b), c) == mu(a, mu(b, c));
        for (int i = 0; i <= k && k >= 1; ++i) {
          auto th = face_operator(k, i);
          auto lhs = apply_operator(th, {mu(a, b)}, k);
          auto rhs = act_on_cube(mu_m, apply_operator(th, {a, b}, k), k - 1);
          natural = natural && lhs == rhs;
        }
        for (int i = 0; i <= k; ++i) {
          auto th = degeneracy_operator(k, i);
          auto lhs = apply_operator(th, {mu(a, b)}, k);
          auto rhs = act_on_cube(mu_m, apply_operator(th, {a, b}, k), k + 1);
          natural = natural && lhs == rhs;
        }
      }
    auto lv = " at level " + std::to_string(k);
    r.add("associative" + lv, assoc);
    r.add("vertex 1 is a two-sided unit" + lv, unit);
    r.add("vertex 0 is absorbing" + lv, absorb);
    r.add("collapse is a monoid map" + lv, smap);
    r.add("product commutes with simplicial operators" + lv, natural);
  }
  return r;
}

} // namespace qsigma
