#include "qsigma/site.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qsigma/errors.hpp"

namespace qsigma {

std::string_view to_string(Site site)
{
  return site == Site::Q ? "Q" : "QSigma";
}

Site parse_site(std::string_view text)
{
  if (text == "Q")
    return Site::Q;
  if (text == "QSigma" || text == "QS")
    return Site::QSigma;
  throw InputError(InputError::Kind::Parse, "unknown site '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- entries

Entry Entry::constant(int bit)
{
  if (bit != 0 && bit != 1)
    throw InputError(InputError::Kind::InvalidMorphism, "constant must be 0 or 1");
  Entry e;
  e._bit = bit;
  return e;
}

Entry Entry::conj(std::vector<int> symbols)
{
  if (symbols.empty())
    throw InputError(InputError::Kind::InvalidMorphism, "empty conjunction");
  Entry e;
  e._symbols = std::move(symbols);
  return e;
}

std::string Entry::str() const
{
  if (is_constant())
    return _bit ? "1" : "0";
  std::string s;
  for (std::size_t k = 0; k < _symbols.size(); ++k) {
    if (k)
      s += '^';
    s += 'x' + std::to_string(_symbols[k]);
  }
  return s;
}

std::strong_ordering operator<=>(Entry const &a, Entry const &b)
{
  if (a.is_constant() && b.is_constant())
    return a._bit <=> b._bit;
  if (a.is_constant())
    return std::strong_ordering::less;
  if (b.is_constant())
    return std::strong_ordering::greater;
  return a._symbols <=> b._symbols;
}

// -------------------------------------------------------------- morphisms

Morphism::Morphism(int src, std::vector<Entry> entries)
: _src(src), _entries(std::move(entries))
{
  if (src < 0)
    throw InputError(InputError::Kind::InvalidMorphism, "negative source dimension");
  std::vector<bool> used(src + 1, false);
  for (auto const &e : _entries) {
    for (int s : e.symbols()) {
      if (s < 1 || s > src)
        throw InputError(InputError::Kind::InvalidMorphism,
                         "symbol x" + std::to_string(s) + " out of range for source " +
                             std::to_string(src));
      if (used[s])
        throw InputError(InputError::Kind::InvalidMorphism,
                         "symbol x" + std::to_string(s) + " occurs more than once");
      used[s] = true;
    }
  }
}

Morphism Morphism::identity(int n)
{
  std::vector<Entry> e;
  e.reserve(n);
  for (int k = 1; k <= n; ++k)
    e.push_back(Entry::conj({k}));
  return Morphism(n, std::move(e));
}

std::string Morphism::tuple_str() const
{
  std::string s = "(";
  for (std::size_t k = 0; k < _entries.size(); ++k) {
    if (k)
      s += ',';
    s += _entries[k].str();
  }
  return s + ")";
}

std::string Morphism::str() const
{
  return tuple_str() + ":" + std::to_string(src()) + "->" + std::to_string(dst());
}

bool Morphism::is_identity() const
{
  if (src() != dst())
    return false;
  for (int k = 0; k < dst(); ++k)
    if (_entries[k].is_constant() || _entries[k].symbols() != std::vector<int>{k + 1})
      return false;
  return true;
}

std::strong_ordering operator<=>(Morphism const &a, Morphism const &b)
{
  if (auto c = a._src <=> b._src; c != 0)
    return c;
  if (auto c = a.dst() <=> b.dst(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(a._entries.begin(), a._entries.end(),
                                                b._entries.begin(), b._entries.end());
}

std::size_t MorphismHash::operator()(Morphism const &f) const noexcept
{
  std::size_t h = static_cast<std::size_t>(f.src()) * 0x9e3779b97f4a7c15ULL;
  for (auto const &e : f.entries()) {
    h = (h ^ static_cast<std::size_t>(e.bit() + 3)) * 0x100000001b3ULL;
    for (int s : e.symbols())
      h = (h ^ static_cast<std::size_t>(s)) * 0x100000001b3ULL;
    h = (h ^ 0xff) * 0x100000001b3ULL;
  }
  return h;
}

Morphism compose(Morphism const &g, Morphism const &f)
{
  if (f.dst() != g.src())
    throw InputError(InputError::Kind::CompositionMismatch,
                     "cannot compose " + g.str() + " after " + f.str());
  std::vector<Entry> out;
  out.reserve(g.dst());
  std::vector<int> syms;
  for (auto const &e : g.entries()) {
    if (e.is_constant()) {
      out.push_back(e);
      continue;
    }
    syms.clear();
    bool zero = false;
    for (int s : e.symbols()) {
      auto const &sub = f[s - 1];
      if (sub.is_constant()) {
        if (sub.bit() == 0)
          zero = true;
        // a 1 inside a conjunction is deleted; a lone 1 stays 1 below
      } else {
        syms.insert(syms.end(), sub.symbols().begin(), sub.symbols().end());
      }
    }
    if (zero)
      out.push_back(Entry::constant(0));
    else if (syms.empty())
      out.push_back(Entry::constant(1));
    else
      out.push_back(Entry::conj(syms));
  }
  return Morphism(f.src(), std::move(out));
}

Morphism compose_all(std::vector<Morphism> const &word)
{
  if (word.empty())
    throw InputError(InputError::Kind::CompositionMismatch, "empty composite");
  Morphism r = word.back();
  for (auto it = word.rbegin() + 1; it != word.rend(); ++it)
    r = compose(*it, r);
  return r;
}

Morphism tensor(Morphism const &f, Morphism const &g)
{
  std::vector<Entry> out = f.entries();
  for (auto const &e : g.entries()) {
    if (e.is_constant()) {
      out.push_back(e);
    } else {
      std::vector<int> s = e.symbols();
      for (int &v : s)
        v += f.src();
      out.push_back(Entry::conj(std::move(s)));
    }
  }
  return Morphism(f.src() + g.src(), std::move(out));
}

Morphism symmetry(int m, int n)
{
  std::vector<Entry> e;
  for (int k = m + 1; k <= m + n; ++k)
    e.push_back(Entry::conj({k}));
  for (int k = 1; k <= m; ++k)
    e.push_back(Entry::conj({k}));
  return Morphism(m + n, std::move(e));
}

namespace {

void require(bool ok, std::string const &what)
{
  if (!ok)
    throw InputError(InputError::Kind::IndexOutOfRange, what);
}

} // namespace

Morphism coface(int n, int i, int eps)
{
  require(n >= 0 && i >= 1 && i <= n + 1 && (eps == 0 || eps == 1),
          "coface index out of range: delta[" + std::to_string(i) + "," +
              std::to_string(eps) + "]_" + std::to_string(n));
  std::vector<Entry> e;
  for (int k = 1; k < i; ++k)
    e.push_back(Entry::conj({k}));
  e.push_back(Entry::constant(eps));
  for (int k = i; k <= n; ++k)
    e.push_back(Entry::conj({k}));
  return Morphism(n, std::move(e));
}

Morphism codegeneracy(int n, int i)
{
  require(n >= 0 && i >= 1 && i <= n + 1,
          "codegeneracy index out of range: sigma[" + std::to_string(i) + "]_" +
              std::to_string(n));
  std::vector<Entry> e;
  for (int k = 1; k <= n + 1; ++k)
    if (k != i)
      e.push_back(Entry::conj({k}));
  return Morphism(n + 1, std::move(e));
}

Morphism conjunction(int n, int i)
{
  require(n >= 1 && i >= 1 && i <= n,
          "conjunction index out of range: gamma[" + std::to_string(i) + "]_" +
              std::to_string(n));
  std::vector<Entry> e;
  for (int k = 1; k < i; ++k)
    e.push_back(Entry::conj({k}));
  e.push_back(Entry::conj({i, i + 1}));
  for (int k = i + 2; k <= n + 1; ++k)
    e.push_back(Entry::conj({k}));
  return Morphism(n + 1, std::move(e));
}

Morphism cosymmetry(Permutation const &p)
{
  auto inv = p.inverse();
  std::vector<Entry> e;
  for (int k = 1; k <= p.size(); ++k)
    e.push_back(Entry::conj({inv(k)}));
  return Morphism(p.size(), std::move(e));
}

Morphism constant_vertex(int n, int eps)
{
  return Morphism(0, std::vector<Entry>(n, Entry::constant(eps)));
}

// ------------------------------------------------------------- generators

int Generator::source() const
{
  switch (kind) {
    case Kind::Face:
    case Kind::Transposition:
      return n;
    default:
      return n + 1;
  }
}

int Generator::target() const
{
  return kind == Kind::Face ? n + 1 : n;
}

Morphism Generator::morphism() const
{
  switch (kind) {
    case Kind::Face:
      return coface(n, i, eps);
    case Kind::Degeneracy:
      return codegeneracy(n, i);
    case Kind::Conjunction:
      return conjunction(n, i);
    case Kind::Transposition:
      return cosymmetry(Permutation::adjacent(n, i));
  }
  return {};
}

std::string Generator::name() const
{
  std::string s;
  switch (kind) {
    case Kind::Face:
      s = "delta[" + std::to_string(i) + "," + std::to_string(eps) + "]";
      break;
    case Kind::Degeneracy:
      s = "sigma[" + std::to_string(i) + "]";
      break;
    case Kind::Conjunction:
      s = "gamma[" + std::to_string(i) + "]";
      break;
    case Kind::Transposition:
      s = "swap[" + std::to_string(i) + "]";
      break;
  }
  return s + "_" + std::to_string(n);
}

Generator Generator::parse(std::string_view text)
{
  auto fail = [&]() -> Generator {
    throw InputError(InputError::Kind::Parse,
                     "cannot parse generator '" + std::string(text) + "'");
  };
  auto lb = text.find('[');
  auto rb = text.find(']');
  auto us = text.find('_', rb == std::string_view::npos ? 0 : rb);
  if (lb == std::string_view::npos || rb == std::string_view::npos || rb < lb ||
      us != rb + 1 || us + 1 >= text.size())
    return fail();
  std::string head(text.substr(0, lb));
  std::string args(text.substr(lb + 1, rb - lb - 1));
  std::string sub(text.substr(us + 1));
  int n = 0, i = 0, eps = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(sub, &used);
    if (used != sub.size())
      return fail();
    auto comma = args.find(',');
    if (head == "delta") {
      if (comma == std::string::npos)
        return fail();
      i = std::stoi(args.substr(0, comma));
      eps = std::stoi(args.substr(comma + 1));
    } else {
      if (comma != std::string::npos)
        return fail();
      i = std::stoi(args);
    }
  } catch (std::logic_error const &) {
    return fail();
  }
  Generator g;
  if (head == "delta")
    g = face(n, i, eps);
  else if (head == "sigma")
    g = degeneracy(n, i);
  else if (head == "gamma")
    g = conj(n, i);
  else if (head == "swap")
    g = transposition(n, i);
  else
    return fail();
  g.morphism(); // range check
  return g;
}

std::vector<Generator> generators(Site site, int max_dim)
{
  std::vector<Generator> out;
  for (int n = 0; n + 1 <= max_dim; ++n)
    for (int i = 1; i <= n + 1; ++i)
      for (int eps = 0; eps <= 1; ++eps)
        out.push_back(Generator::face(n, i, eps));
  for (int n = 0; n + 1 <= max_dim; ++n)
    for (int i = 1; i <= n + 1; ++i)
      out.push_back(Generator::degeneracy(n, i));
  if (site == Site::QSigma) {
    for (int n = 1; n + 1 <= max_dim; ++n)
      for (int i = 1; i <= n; ++i)
        out.push_back(Generator::conj(n, i));
    for (int n = 2; n <= max_dim; ++n)
      for (int i = 1; i < n; ++i)
        out.push_back(Generator::transposition(n, i));
  }
  return out;
}

bool in_box_category(Morphism const &f)
{
  int last = 0;
  for (auto const &e : f.entries()) {
    if (e.is_constant())
      continue;
    if (e.symbols().size() != 1 || e.symbols()[0] <= last)
      return false;
    last = e.symbols()[0];
  }
  return true;
}

// ---------------------------------------------------------- normal forms

bool Factorization::well_formed() const
{
  int ell = middle();
  if (ell < 0 || perm.size() != ell)
    return false;
  for (std::size_t k = 0; k < degens.size(); ++k)
    if (degens[k] < 1 || degens[k] > src || (k && degens[k] <= degens[k - 1]))
      return false;
  for (std::size_t k = 0; k < conjs.size(); ++k)
    if (conjs[k] < 1 || conjs[k] >= ell || (k && conjs[k] <= conjs[k - 1]))
      return false;
  int after_conj = ell - static_cast<int>(conjs.size());
  if (after_conj + static_cast<int>(faces.size()) != dst)
    return false;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    auto [i, eps] = faces[k];
    if (i < 1 || i > dst || (eps != 0 && eps != 1) || (k && i >= faces[k - 1].first))
      return false;
  }
  return true;
}

std::vector<Generator> Factorization::word() const
{
  std::vector<Generator> w;
  int ell = middle();
  int r = static_cast<int>(conjs.size());
  for (std::size_t t = 0; t < faces.size(); ++t)
    w.push_back(Generator::face(dst - 1 - static_cast<int>(t), faces[t].first,
                                faces[t].second));
  for (int t = 0; t < r; ++t)
    w.push_back(Generator::conj(ell - r + t, conjs[t]));
  for (int a : perm.adjacent_word())
    w.push_back(Generator::transposition(ell, a));
  for (std::size_t t = 0; t < degens.size(); ++t)
    w.push_back(Generator::degeneracy(ell + static_cast<int>(t), degens[t]));
  return w;
}

Morphism evaluate_word(std::vector<Generator> const &word, int src)
{
  if (word.empty())
    return Morphism::identity(src);
  std::vector<Morphism> ms;
  ms.reserve(word.size());
  for (auto const &g : word)
    ms.push_back(g.morphism());
  if (ms.back().src() != src)
    throw InputError(InputError::Kind::CompositionMismatch, "word source mismatch");
  return compose_all(ms);
}

Morphism Factorization::evaluate() const
{
  return evaluate_word(word(), src);
}

std::string Factorization::str() const
{
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() -> std::ostream & {
    if (!first)
      os << ' ';
    first = false;
    return os;
  };
  for (auto [i, eps] : faces)
    sep() << "delta[" << i << ',' << eps << ']';
  for (int k : conjs)
    sep() << "gamma[" << k << ']';
  if (!perm.is_identity())
    sep() << "pi" << perm.str_cycles();
  for (int j : degens)
    sep() << "sigma[" << j << ']';
  if (first)
    os << "id";
  os << " : " << src << " -> " << dst;
  return os.str();
}

Factorization factor(Morphism const &f)
{
  Factorization fz;
  fz.src = f.src();
  fz.dst = f.dst();

  std::vector<bool> used(f.src() + 1, false);
  for (auto const &e : f.entries())
    for (int s : e.symbols())
      used[s] = true;
  std::vector<int> rename(f.src() + 1, 0);
  int ell = 0;
  for (int s = 1; s <= f.src(); ++s) {
    if (used[s])
      rename[s] = ++ell;
    else
      fz.degens.push_back(s);
  }

  // concatenated symbol order, and block boundaries
  std::vector<int> order;
  for (auto const &e : f.entries()) {
    if (e.is_constant())
      continue;
    for (std::size_t k = 0; k < e.symbols().size(); ++k) {
      if (k)
        fz.conjs.push_back(static_cast<int>(order.size()));
      order.push_back(rename[e.symbols()[k]]);
    }
  }
  // pi_p = (x_{q_1}, ..., x_{q_ell}) means p(q_t) = t
  std::vector<int> p(ell);
  for (int t = 0; t < ell; ++t)
    p[order[t] - 1] = t + 1;
  fz.perm = Permutation(std::move(p));

  for (int k = f.dst(); k >= 1; --k)
    if (f[k - 1].is_constant())
      fz.faces.emplace_back(k, f[k - 1].bit());
  return fz;
}

namespace {

template<typename F>
void for_each_subset(int n, int size, F &&fn)
{
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      fn(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

} // namespace

std::vector<Factorization> enumerate_factorizations(int m, int n)
{
  std::vector<Factorization> out;
  for (int nd = 0; nd <= m; ++nd) {
    int ell = m - nd;
    for_each_subset(m, nd, [&](std::vector<int> const &degens) {
      for (int r = 0; r <= std::max(0, ell - 1); ++r) {
        int after = ell - r;
        if (after > n || (ell > 0 && r > ell - 1))
          continue;
        int nf = n - after;
        for_each_subset(ell - 1, r, [&](std::vector<int> const &conjs) {
          for_each_subset(n, nf, [&](std::vector<int> const &pos) {
            for (int bits = 0; bits < (1 << nf); ++bits) {
              for (auto const &p : all_permutations(ell)) {
                Factorization fz;
                fz.src = m;
                fz.dst = n;
                fz.degens = degens;
                fz.conjs = conjs;
                fz.perm = p;
                for (int t = nf - 1; t >= 0; --t)
                  fz.faces.emplace_back(pos[t], (bits >> t) & 1);
                out.push_back(std::move(fz));
              }
            }
          });
        });
      }
    });
  }
  return out;
}

// -------------------------------------------------------------- hom-sets

std::vector<Morphism> enumerate_hom(int m, int n, Site site, std::size_t limit)
{
  if (m < 0 || n < 0)
    throw InputError(InputError::Kind::BadDimension, "negative dimension");
  std::vector<Morphism> out;
  std::vector<Entry> cur;
  std::vector<bool> used(m + 1, false);

  std::function<void(int, int)> rec = [&](int pos, int last) {
    if (pos == n) {
      if (out.size() >= limit)
        throw ResourceBound("hom-set Hom(" + std::to_string(m) + "," + std::to_string(n) +
                            ") exceeds the limit of " + std::to_string(limit));
      out.emplace_back(m, cur);
      return;
    }
    for (int bit = 0; bit <= 1; ++bit) {
      cur.push_back(Entry::constant(bit));
      rec(pos + 1, last);
      cur.pop_back();
    }
    if (site == Site::Q) {
      for (int s = last + 1; s <= m; ++s) {
        cur.push_back(Entry::conj({s}));
        rec(pos + 1, s);
        cur.pop_back();
      }
      return;
    }
    // conjunctions in lexicographic order: a prefix precedes its extensions
    std::vector<int> conj;
    std::function<void()> grow = [&]() {
      for (int s = 1; s <= m; ++s) {
        if (used[s])
          continue;
        used[s] = true;
        conj.push_back(s);
        cur.push_back(Entry::conj(conj));
        rec(pos + 1, last);
        cur.pop_back();
        grow();
        conj.pop_back();
        used[s] = false;
      }
    };
    grow();
  };
  rec(0, 0);
  return out;
}

HomSet::HomSet(int m, int n, Site site, std::size_t limit)
: _m(m), _n(n), _elements(enumerate_hom(m, n, site, limit))
{
  _index.reserve(_elements.size());
  for (std::size_t k = 0; k < _elements.size(); ++k)
    _index.emplace(_elements[k], static_cast<int>(k));
}

int HomSet::index(Morphism const &f) const
{
  auto it = _index.find(f);
  return it == _index.end() ? -1 : it->second;
}

HomSet const &hom_set(int m, int n, Site site)
{
  static std::mutex mutex;
  static std::map<std::tuple<int, int, Site>, std::unique_ptr<HomSet>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto &slot = cache[{m, n, site}];
  if (!slot)
    slot = std::make_unique<HomSet>(m, n, site, 1'000'000);
  return *slot;
}

// --------------------------------------------------------- classification

Classification classify(Morphism const &f)
{
  auto fz = factor(f);
  Classification c;
  c.in_Q = in_box_category(f);
  c.in_plus = fz.conjs.empty() && fz.degens.empty();
  c.in_minus = fz.faces.empty();
  c.is_mono = c.in_plus;
  c.is_epi = c.in_minus;
  c.is_iso = c.in_plus && c.in_minus;
  return c;
}

std::vector<std::vector<int>> vertices_action(Morphism const &f)
{
  int m = f.src();
  std::vector<std::vector<int>> table;
  table.reserve(std::size_t{1} << m);
  for (int v = 0; v < (1 << m); ++v) {
    std::vector<Entry> coords;
    for (int k = 1; k <= m; ++k)
      coords.push_back(Entry::constant((v >> (m - k)) & 1));
    auto image = compose(f, Morphism(0, std::move(coords)));
    std::vector<int> bits;
    for (auto const &e : image.entries())
      bits.push_back(e.bit());
    table.push_back(std::move(bits));
  }
  return table;
}

EpiMono ez_factor(Morphism const &f)
{
  auto fz = factor(f);
  Factorization epi = fz;
  epi.faces.clear();
  epi.dst = fz.middle() - static_cast<int>(fz.conjs.size());
  Factorization mono;
  mono.src = epi.dst;
  mono.dst = fz.dst;
  mono.faces = fz.faces;
  mono.perm = Permutation::identity(epi.dst);
  return {epi.evaluate(), mono.evaluate()};
}

Morphism epi_section(Morphism const &e)
{
  if (!classify(e).is_epi)
    throw InputError(InputError::Kind::NotEpi, e.str() + " is not an epimorphism");
  // first symbol of each block carries the coordinate, the rest are 1,
  // omitted symbols are 0
  std::vector<Entry> s(e.src(), Entry::constant(0));
  for (int t = 0; t < e.dst(); ++t) {
    auto const &syms = e[t].symbols();
    for (std::size_t k = 0; k < syms.size(); ++k)
      s[syms[k] - 1] = k == 0 ? Entry::conj({t + 1}) : Entry::constant(1);
  }
  return Morphism(e.dst(), std::move(s));
}

} // namespace qsigma
