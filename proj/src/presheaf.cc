#include "qsigma/presheaf.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>

#include "qsigma/errors.hpp"

namespace qsigma {

namespace {

[[noreturn]] void invalid(std::string const &what)
{
  throw InputError(InputError::Kind::InvalidPresheaf, what);
}

bool valid_name(std::string const &s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '#')
      return false;
  return s.find("->") == std::string::npos;
}

// Generator words are reused heavily by the searches built on act().
std::vector<Generator> const &word_of(Morphism const &f)
{
  static std::mutex lock;
  static std::unordered_map<Morphism, std::vector<Generator>, MorphismHash> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(f);
  if (it == cache.end())
    it = cache.emplace(f, factor(f).word()).first;
  return it->second;
}

} // namespace

Presheaf::Presheaf(Site site, int top, std::vector<std::vector<std::string>> names,
                   std::vector<std::vector<int>> tables, bool truncated, Labels labels)
: _site(site), _top(top), _truncated(truncated), _names(std::move(names)),
  _labels(std::move(labels)), _tables(std::move(tables))
{
  if (top < 0)
    throw InputError(InputError::Kind::BadDimension, "negative truncation");
  if (static_cast<int>(_names.size()) != top + 1)
    invalid("expected " + std::to_string(top + 1) + " levels, got " +
            std::to_string(_names.size()));
  _name_index.resize(top + 1);
  for (int l = 0; l <= top; ++l)
    for (int k = 0; k < static_cast<int>(_names[l].size()); ++k) {
      if (!valid_name(_names[l][k]))
        invalid("bad section name '" + _names[l][k] + "'");
      if (!_name_index[l].emplace(_names[l][k], k).second)
        invalid("duplicate section name '" + _names[l][k] + "' at level " + std::to_string(l));
    }
  if (!_labels.empty()) {
    if (static_cast<int>(_labels.size()) != top + 1)
      invalid("label levels do not match");
    for (int l = 0; l <= top; ++l) {
      if (_labels[l].size() != _names[l].size())
        invalid("label count does not match at level " + std::to_string(l));
      for (int k = 0; k < size(l); ++k)
        if (_labels[l][k])
          _label_index.emplace(*_labels[l][k], std::make_pair(l, k));
    }
  }
  _gens = generators(site, top);
  for (std::size_t k = 0; k < _gens.size(); ++k)
    _gen_index.emplace(_gens[k], static_cast<int>(k));
  if (_tables.size() != _gens.size())
    invalid("expected " + std::to_string(_gens.size()) + " generator tables, got " +
            std::to_string(_tables.size()));
  for (std::size_t k = 0; k < _gens.size(); ++k) {
    auto const &g = _gens[k];
    if (static_cast<int>(_tables[k].size()) != size(g.target()))
      invalid("table for " + g.name() + " has the wrong length");
    for (int v : _tables[k])
      if (v < 0 || v >= size(g.source()))
        invalid("table for " + g.name() + " points outside level " +
                std::to_string(g.source()));
  }
}

int Presheaf::size(int level) const
{
  if (level < 0 || level > _top)
    throw InputError(InputError::Kind::TruncationMismatch,
                     "level " + std::to_string(level) + " is not stored (top " +
                         std::to_string(_top) + ")");
  return static_cast<int>(_names[level].size());
}

std::vector<std::size_t> Presheaf::sizes() const
{
  std::vector<std::size_t> out;
  for (auto const &l : _names)
    out.push_back(l.size());
  return out;
}

std::size_t Presheaf::total_size() const
{
  std::size_t n = 0;
  for (auto const &l : _names)
    n += l.size();
  return n;
}

int Presheaf::find(int level, std::string_view name) const
{
  if (level < 0 || level > _top)
    return -1;
  auto it = _name_index[level].find(std::string(name));
  return it == _name_index[level].end() ? -1 : it->second;
}

std::optional<Morphism> const &Presheaf::label(int level, int id) const
{
  static std::optional<Morphism> const none;
  return _labels.empty() ? none : _labels[level][id];
}

int Presheaf::find_label(Morphism const &f) const
{
  auto it = _label_index.find(f);
  return it == _label_index.end() ? -1 : it->second.second;
}

int Presheaf::gen_index(Generator const &g) const
{
  auto it = _gen_index.find(g);
  return it == _gen_index.end() ? -1 : it->second;
}

int Presheaf::act(Generator const &g, int x) const
{
  int k = gen_index(g);
  if (k < 0)
    throw InputError(InputError::Kind::TruncationMismatch,
                     g.name() + " does not act on stored levels");
  return _tables[k][x];
}

int Presheaf::act(Morphism const &f, int x) const
{
  if (f.src() > _top || f.dst() > _top)
    throw InputError(InputError::Kind::TruncationMismatch,
                     f.str() + " leaves the stored levels (top " + std::to_string(_top) + ")");
  if (_site == Site::Q && !in_box_category(f))
    throw InputError(InputError::Kind::SiteMismatch, f.str() + " is not an arrow of Q");
  if (f.is_identity())
    return x;
  for (auto const &g : word_of(f))
    x = act(g, x);
  return x;
}

Report Presheaf::audit() const
{
  Report r;
  r.title = "functoriality";
  for (auto const &inst : relation_instances(_top, _site)) {
    int level = inst.lhs.empty() ? inst.src : inst.lhs.front().target();
    bool ok = true;
    std::string detail;
    for (int x = 0; x < size(level) && ok; ++x) {
      int a = x, b = x;
      for (auto const &g : inst.lhs)
        a = act(g, a);
      for (auto const &g : inst.rhs)
        b = act(g, b);
      if (a != b) {
        ok = false;
        detail = "section " + name(level, x) + ": " + name(inst.src, a) + " vs " +
                 name(inst.src, b);
      }
    }
    r.add(inst.label, ok, detail);
  }
  for (auto const &g : _gens) {
    auto gm = g.morphism();
    for (int c = 0; c <= _top; ++c) {
      bool ok = true;
      std::string detail;
      for (auto const &f : hom_set(c, g.source(), _site).elements()) {
        auto gf = compose(gm, f);
        for (int x = 0; x < size(g.target()) && ok; ++x)
          if (act(gf, x) != act(f, act(g, x))) {
            ok = false;
            detail = "section " + name(g.target(), x) + " along " + f.str();
          }
        if (!ok)
          break;
      }
      r.add("composite " + g.name() + " after Hom(" + std::to_string(c) + "," +
                std::to_string(g.source()) + ")",
            ok, detail);
    }
  }
  return r;
}

bool operator==(Presheaf const &a, Presheaf const &b)
{
  return a._site == b._site && a._top == b._top && a._names == b._names &&
         a._tables == b._tables && a._truncated == b._truncated;
}

PresheafPtr Presheaf::as_truncated() const
{
  auto copy = std::make_shared<Presheaf>(*this);
  copy->_truncated = true;
  return copy;
}

// ------------------------------------------------------------------ maps

Report PresheafMap::check() const
{
  Report r;
  r.title = "naturality";
  if (src->site() != dst->site() || src->top() != dst->top() ||
      static_cast<int>(at.size()) != src->top() + 1) {
    r.add("shape", false, "source and target must share site and top level");
    return r;
  }
  for (int l = 0; l <= src->top(); ++l) {
    bool ok = static_cast<int>(at[l].size()) == src->size(l);
    for (int v : at[l])
      ok = ok && v >= 0 && v < dst->size(l);
    r.add("level " + std::to_string(l) + " shape", ok);
    if (!ok)
      return r;
  }
  auto const &gens = src->gens();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto const &g = gens[k];
    bool ok = true;
    std::string detail;
    for (int x = 0; x < src->size(g.target()) && ok; ++x)
      if (at[g.source()][src->tables()[k][x]] != dst->tables()[k][at[g.target()][x]]) {
        ok = false;
        detail = "section " + src->name(g.target(), x);
      }
    r.add(g.name(), ok, detail);
  }
  return r;
}

bool PresheafMap::injective() const
{
  for (auto const &lvl : at) {
    std::vector<int> v = lvl;
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      return false;
  }
  return true;
}

bool PresheafMap::surjective() const
{
  for (int l = 0; l < static_cast<int>(at.size()); ++l) {
    std::vector<bool> hit(dst->size(l), false);
    for (int v : at[l])
      hit[v] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      return false;
  }
  return true;
}

PresheafMap identity_map(PresheafPtr const &x)
{
  PresheafMap m{x, x, {}};
  for (int l = 0; l <= x->top(); ++l) {
    m.at.emplace_back(x->size(l));
    std::iota(m.at.back().begin(), m.at.back().end(), 0);
  }
  return m;
}

PresheafMap compose(PresheafMap const &g, PresheafMap const &f)
{
  if (g.src->top() != f.dst->top() || g.src->total_size() != f.dst->total_size())
    throw InputError(InputError::Kind::CompositionMismatch, "presheaf maps do not compose");
  PresheafMap m{f.src, g.dst, f.at};
  for (std::size_t l = 0; l < m.at.size(); ++l)
    for (int &v : m.at[l])
      v = g.at[l][v];
  return m;
}

bool operator==(PresheafMap const &a, PresheafMap const &b)
{
  return *a.src == *b.src && *a.dst == *b.dst && a.at == b.at;
}

} // namespace qsigma
