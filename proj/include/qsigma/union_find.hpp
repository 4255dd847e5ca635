#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace qsigma {

/// Disjoint sets whose representative is always the least element.
class UnionFind
{
public:
  explicit UnionFind(std::size_t n = 0) : _parent(n) { std::iota(_parent.begin(), _parent.end(), 0); }

  std::size_t size() const { return _parent.size(); }

  std::size_t find(std::size_t x)
  {
    std::size_t root = x;
    while (_parent[root] != root)
      root = _parent[root];
    while (_parent[x] != root) {
      auto next = _parent[x];
      _parent[x] = root;
      x = next;
    }
    return root;
  }

  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (a < b)
      _parent[b] = a;
    else
      _parent[a] = b;
    return true;
  }

  /// Roots in increasing order, and for each element the position of its
  /// root in that list.
  std::vector<std::size_t> classes(std::vector<int> &class_of)
  {
    std::vector<std::size_t> roots;
    std::vector<int> pos(_parent.size(), -1);
    class_of.assign(_parent.size(), -1);
    for (std::size_t x = 0; x < _parent.size(); ++x) {
      auto r = find(x);
      if (pos[r] < 0) {
        pos[r] = static_cast<int>(roots.size());
        roots.push_back(r);
      }
      class_of[x] = pos[r];
    }
    return roots;
  }

private:
  std::vector<std::size_t> _parent;
};

} // namespace qsigma
