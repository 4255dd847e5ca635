#include <sstream>

#include "qsigma/errors.hpp"
#include "qsigma/site.hpp"

namespace qsigma {

namespace {

// A generator with its subscript left open; the subscript is inferred from
// the object it is applied to.
struct Token
{
  Generator::Kind kind;
  int i;
  int eps = 0;
};

Token d(int i, int eps) { return {Generator::Kind::Face, i, eps}; }
Token s(int i) { return {Generator::Kind::Degeneracy, i}; }
Token g(int i) { return {Generator::Kind::Conjunction, i}; }

// Resolve a word (leftmost applied last) starting at object src. Returns
// false if some index is out of range or an object exceeds n_max.
bool resolve(std::vector<Token> const &tokens, int src, int n_max, std::vector<Generator> &out)
{
  out.assign(tokens.size(), {});
  int dim = src;
  for (std::size_t k = tokens.size(); k-- > 0;) {
    auto const &t = tokens[k];
    Generator gen;
    switch (t.kind) {
      case Generator::Kind::Face:
        gen = Generator::face(dim, t.i, t.eps);
        break;
      case Generator::Kind::Degeneracy:
        gen = Generator::degeneracy(dim - 1, t.i);
        break;
      case Generator::Kind::Conjunction:
        gen = Generator::conj(dim - 1, t.i);
        break;
      default:
        return false;
    }
    if (gen.n < 0 || gen.target() > n_max)
      return false;
    try {
      gen.morphism();
    } catch (InputError const &) {
      return false;
    }
    out[k] = gen;
    dim = gen.target();
  }
  return true;
}

} // namespace

std::vector<RelationInstance> relation_instances(int n_max, Site site)
{
  std::vector<RelationInstance> out;
  auto add = [&](std::string family, std::string indices, int src, std::vector<Token> lhs,
                 std::vector<Token> rhs) {
    RelationInstance r;
    r.src = src;
    if (!resolve(lhs, src, n_max, r.lhs) || !resolve(rhs, src, n_max, r.rhs))
      return;
    r.label = family + " " + indices + " on [" + std::to_string(src) + "]";
    out.push_back(std::move(r));
  };
  auto ix = [](std::initializer_list<std::pair<char const *, int>> kv) {
    std::ostringstream os;
    bool first = true;
    for (auto [k, v] : kv) {
      os << (first ? "" : ",") << k << "=" << v;
      first = false;
    }
    return os.str();
  };

  int top = n_max + 1;
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 1; i <= top; ++i)
      for (int j = i + 1; j <= top; ++j)
        for (int e = 0; e <= 1; ++e)
          for (int h = 0; h <= 1; ++h)
            add("dd", ix({{"i", i}, {"j", j}, {"e", e}, {"h", h}}), n, {d(j, h), d(i, e)},
                {d(i, e), d(j - 1, h)});

    for (int i = 1; i <= top; ++i)
      for (int j = 1; j <= top; ++j)
        for (int e = 0; e <= 1; ++e) {
          auto idx = ix({{"i", i}, {"j", j}, {"e", e}});
          if (i < j)
            add("sd", idx, n, {s(j), d(i, e)}, {d(i, e), s(j - 1)});
          else if (i == j)
            add("sd", idx, n, {s(j), d(i, e)}, {});
          else
            add("sd", idx, n, {s(j), d(i, e)}, {d(i - 1, e), s(j)});
        }

    for (int i = 1; i <= top; ++i)
      for (int j = i; j <= top; ++j)
        add("ss", ix({{"i", i}, {"j", j}}), n, {s(j), s(i)}, {s(i), s(j + 1)});

    if (site == Site::Q)
      continue;

    for (int i = 1; i <= top; ++i)
      for (int j = i; j <= top; ++j)
        add("gg", ix({{"i", i}, {"j", j}}), n, {g(j), g(i)},
            j > i ? std::vector<Token>{g(i), g(j + 1)} : std::vector<Token>{g(i), g(i + 1)});

    for (int i = 1; i <= top; ++i)
      for (int j = 1; j <= top; ++j) {
        auto idx = ix({{"i", i}, {"j", j}});
        if (j < i)
          add("sg", idx, n, {s(j), g(i)}, {g(i - 1), s(j)});
        else if (j == i)
          add("sg", idx, n, {s(j), g(i)}, {s(i), s(i)});
        else
          add("sg", idx, n, {s(j), g(i)}, {g(i), s(j + 1)});
      }

    for (int i = 1; i <= top; ++i)
      for (int j = 1; j <= top; ++j)
        for (int e = 0; e <= 1; ++e) {
          auto idx = ix({{"i", i}, {"j", j}, {"e", e}});
          if (j < i - 1)
            add("gd", idx, n, {g(j), d(i, e)}, {d(i - 1, e), g(j)});
          else if ((j == i - 1 || j == i) && e == 0)
            add("gd", idx, n, {g(j), d(i, e)}, {d(j, 0), s(j)});
          else if (j == i - 1 || j == i)
            add("gd", idx, n, {g(j), d(i, e)}, {});
          else
            add("gd", idx, n, {g(j), d(i, e)}, {d(i, e), g(j - 1)});
        }
  }
  return out;
}

Report verify_relations(int n_max)
{
  Report r;
  r.title = "relations up to [" + std::to_string(n_max) + "]";
  for (auto const &inst : relation_instances(n_max, Site::QSigma)) {
    auto lhs = evaluate_word(inst.lhs, inst.src);
    auto rhs = evaluate_word(inst.rhs, inst.src);
    r.add(inst.label, lhs == rhs, lhs == rhs ? "" : lhs.str() + " vs " + rhs.str());
  }
  return r;
}

} // namespace qsigma
