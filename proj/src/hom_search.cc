#include <algorithm>

#include "qsigma/errors.hpp"
#include "qsigma/presheaf.hpp"

namespace qsigma {

namespace {

// phi(v) = Y(g)(phi(u)) for the generator g with X(g)(u) = v.
struct Constraint
{
  int gen;
  int u_pos;
  int v_pos;
};

class Search
{
public:
  Search(Presheaf const &x, Presheaf const &y, HomSearchOptions const &opts)
  : _x(x), _y(y), _opts(opts)
  {
    for (int l = 0; l <= x.top(); ++l)
      for (int i = 0; i < x.size(l); ++i) {
        _level.push_back(l);
        _local.push_back(i);
      }
    _offset.push_back(0);
    for (int l = 0; l <= x.top(); ++l)
      _offset.push_back(_offset.back() + x.size(l));
    _forcing.resize(_level.size());
    _checks.resize(_level.size());
    auto const &gens = x.gens();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int a = gens[k].source(), b = gens[k].target();
      for (int u = 0; u < x.size(b); ++u) {
        Constraint c{static_cast<int>(k), _offset[b] + u, _offset[a] + x.tables()[k][u]};
        if (c.v_pos > c.u_pos)
          _forcing[c.v_pos].push_back(c);
        else
          _checks[c.u_pos].push_back(c);
      }
    }
    _value.assign(_level.size(), -1);
  }

  std::vector<PresheafMap> run(PresheafPtr const &src, PresheafPtr const &dst)
  {
    _src = src;
    _dst = dst;
    descend(0);
    return std::move(_found);
  }

private:
  bool done() const { return _opts.first_only && !_found.empty(); }

  bool consistent(std::size_t p) const
  {
    for (auto const &c : _forcing[p])
      if (_value[p] != _y.tables()[c.gen][_value[c.u_pos]])
        return false;
    for (auto const &c : _checks[p])
      if (_value[c.v_pos] != _y.tables()[c.gen][_value[p]])
        return false;
    int l = _level[p], i = _local[p];
    if (!_opts.forced.empty() && l < static_cast<int>(_opts.forced.size()) &&
        i < static_cast<int>(_opts.forced[l].size()) && _opts.forced[l][i] >= 0 &&
        _opts.forced[l][i] != _value[p])
      return false;
    return !_opts.allowed || _opts.allowed(l, i, _value[p]);
  }

  void descend(std::size_t p)
  {
    if (done())
      return;
    if (p == _level.size()) {
      if (_found.size() >= _opts.limit)
        throw ResourceBound("more than " + std::to_string(_opts.limit) + " maps " +
                            "between the presheaves");
      PresheafMap m{_src, _dst, std::vector<std::vector<int>>(_x.top() + 1)};
      for (std::size_t q = 0; q < _level.size(); ++q)
        m.at[_level[q]].push_back(_value[q]);
      _found.push_back(std::move(m));
      return;
    }
    int l = _level[p];
    if (!_forcing[p].empty()) {
      auto const &c = _forcing[p].front();
      _value[p] = _y.tables()[c.gen][_value[c.u_pos]];
      if (consistent(p))
        descend(p + 1);
    } else {
      for (int v = 0; v < _y.size(l) && !done(); ++v) {
        _value[p] = v;
        if (consistent(p))
          descend(p + 1);
      }
    }
    _value[p] = -1;
  }

  Presheaf const &_x;
  Presheaf const &_y;
  HomSearchOptions const &_opts;
  std::vector<int> _level, _local, _offset;
  std::vector<std::vector<Constraint>> _forcing, _checks;
  std::vector<int> _value;
  std::vector<PresheafMap> _found;
  PresheafPtr _src, _dst;
};

} // namespace

std::vector<PresheafMap> hom_presheaf(PresheafPtr const &x, PresheafPtr const &y,
                                      HomSearchOptions const &options)
{
  if (x->site() != y->site())
    throw InputError(InputError::Kind::SiteMismatch, "maps between presheaves on different sites");
  // a skeletal source is determined by its stored levels, but the maps
  // are reported between presheaves stored to a common level
  int top = std::max(x->top(), y->top());
  auto xe = extend(x, top);
  auto ye = extend(y, top);
  return Search(*xe, *ye, options).run(xe, ye);
}

} // namespace qsigma
