#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qsigma {

/// A permutation of {1..n} in one-line notation: p(k) = one_line()[k-1].
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// The transposition exchanging i and i+1 in Sigma_n.
  static Permutation adjacent(int n, int i);

  /// Accepts one-line notation "[2,4,1,3]" or cycle notation "(1 2 4 3)(5 6)".
  /// Cycle notation needs the degree n; one-line notation determines it.
  static Permutation parse(std::string_view text, int n = -1);

  int size() const { return static_cast<int>(_one_line.size()); }
  int operator()(int k) const { return _one_line[k - 1]; }
  std::vector<int> const &one_line() const { return _one_line; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Composition (p * q)(k) = p(q(k)).
  friend Permutation operator*(Permutation const &p, Permutation const &q);

  /// Indices a_1..a_r with p = s_{a_1} * ... * s_{a_r}, s_a the adjacent
  /// transposition (a a+1).
  std::vector<int> adjacent_word() const;

  std::string str_one_line() const;
  std::string str_cycles() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<int> _one_line;
};

/// All permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// The subgroup of Sigma_n generated by the given permutations, sorted.
std::vector<Permutation> generated_subgroup(int n, std::vector<Permutation> const &generators);

} // namespace qsigma
