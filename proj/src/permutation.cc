#include "qsigma/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "qsigma/errors.hpp"

namespace qsigma {

namespace {

[[noreturn]] void parse_error(std::string_view text, std::string const &why)
{
  throw InputError(InputError::Kind::Parse,
                   "cannot parse permutation '" + std::string(text) + "': " + why);
}

std::vector<int> read_ints(std::string_view body, std::string_view text)
{
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    char c = body[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      parse_error(text, "unexpected character");
    int v = 0;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])))
      v = v * 10 + (body[pos++] - '0');
    out.push_back(v);
  }
  return out;
}

} // namespace

Permutation::Permutation(std::vector<int> one_line) : _one_line(std::move(one_line))
{
  std::vector<bool> seen(_one_line.size() + 1, false);
  for (int v : _one_line) {
    if (v < 1 || v > size() || seen[v])
      throw InputError(InputError::Kind::InvalidMorphism,
                       "not a permutation: " + str_one_line());
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n)
{
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::adjacent(int n, int i)
{
  if (i < 1 || i >= n)
    throw InputError(InputError::Kind::IndexOutOfRange,
                     "adjacent transposition index out of range");
  auto p = identity(n);
  std::swap(p._one_line[i - 1], p._one_line[i]);
  return p;
}

Permutation Permutation::parse(std::string_view text, int n)
{
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos)
    parse_error(text, "empty");
  std::string_view t = text.substr(b, e - b + 1);

  if (t.front() == '[') {
    if (t.back() != ']')
      parse_error(text, "missing ']'");
    auto v = read_ints(t.substr(1, t.size() - 2), text);
    if (n >= 0 && static_cast<int>(v.size()) != n)
      parse_error(text, "wrong degree");
    return Permutation(std::move(v));
  }

  if (n < 0)
    parse_error(text, "cycle notation needs an explicit degree");
  auto p = identity(n);
  if (t == "()" || t == "id")
    return p;

  std::size_t pos = 0;
  while (pos < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[pos]))) {
      ++pos;
      continue;
    }
    if (t[pos] != '(')
      parse_error(text, "expected '('");
    std::size_t close = t.find(')', pos);
    if (close == std::string_view::npos)
      parse_error(text, "unbalanced parentheses");
    auto cyc = read_ints(t.substr(pos + 1, close - pos - 1), text);
    for (int v : cyc)
      if (v < 1 || v > n)
        parse_error(text, "cycle entry out of range");
    if (std::set<int>(cyc.begin(), cyc.end()).size() != cyc.size())
      parse_error(text, "repeated cycle entry");
    // cycle (a1 a2 ... ak) sends a_t to a_{t+1}; cycles compose right to left
    auto c = identity(n);
    for (std::size_t k = 0; k < cyc.size(); ++k)
      c._one_line[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    p = p * c;
    pos = close + 1;
  }
  return p;
}

bool Permutation::is_identity() const
{
  for (int k = 0; k < size(); ++k)
    if (_one_line[k] != k + 1)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<int> inv(_one_line.size());
  for (int k = 0; k < size(); ++k)
    inv[_one_line[k] - 1] = k + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(Permutation const &p, Permutation const &q)
{
  if (p.size() != q.size())
    throw InputError(InputError::Kind::CompositionMismatch,
                     "composing permutations of different degree");
  std::vector<int> r(p.size());
  for (int k = 1; k <= p.size(); ++k)
    r[k - 1] = p(q(k));
  return Permutation(std::move(r));
}

std::vector<int> Permutation::adjacent_word() const
{
  // Bubble sort q = p into the identity by q <- q * s_a; then
  // p * s_{a_1} * ... * s_{a_r} = id, so p = s_{a_r} * ... * s_{a_1}.
  std::vector<int> q = _one_line;
  std::vector<int> applied;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int a = 1; a < size(); ++a) {
      if (q[a - 1] > q[a]) {
        std::swap(q[a - 1], q[a]);
        applied.push_back(a);
        swapped = true;
      }
    }
  }
  return {applied.rbegin(), applied.rend()};
}

std::string Permutation::str_one_line() const
{
  std::ostringstream os;
  os << '[';
  for (int k = 0; k < size(); ++k)
    os << (k ? "," : "") << _one_line[k];
  os << ']';
  return os.str();
}

std::string Permutation::str_cycles() const
{
  std::ostringstream os;
  std::vector<bool> done(_one_line.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (done[start] || (*this)(start) == start)
      continue;
    os << '(';
    int k = start;
    bool first = true;
    while (!done[k]) {
      done[k] = true;
      os << (first ? "" : " ") << k;
      first = false;
      k = (*this)(k);
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::vector<Permutation> all_permutations(int n)
{
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> generated_subgroup(int n, std::vector<Permutation> const &generators)
{
  std::set<Permutation> group{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const &g : frontier) {
      for (auto const &s : generators) {
        if (s.size() != n)
          throw InputError(InputError::Kind::InvalidMorphism,
                           "subgroup generator of wrong degree");
        auto h = g * s;
        if (group.insert(h).second)
          next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

} // namespace qsigma
