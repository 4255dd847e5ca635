#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "qsigma/presheaf.hpp"

namespace qsigma {

/// A k-simplex of Delta[1]^m: for each coordinate the threshold t in
/// 0..k+1 of the monotone map [k] -> {0,1} that is 1 from position t on.
using CubeSimplex = std::vector<int>;

/// The action of f: [m] -> [n] on k-simplices: constants give constant
/// maps, a conjunction the pointwise minimum of its components.
CubeSimplex act_on_cube(Morphism const &f, CubeSimplex const &s, int k);

/// A simplicial operator [j] -> [k], as its list of values.
using SimplicialOperator = std::vector<int>;
SimplicialOperator face_operator(int k, int i);       // [k-1] -> [k], skips i
SimplicialOperator degeneracy_operator(int k, int i); // [k+1] -> [k], repeats i
/// Precomposition of a simplex of Delta[1]^m with theta: [j] -> [k].
CubeSimplex apply_operator(SimplicialOperator const &theta, CubeSimplex const &s, int k);

/// A simplicial set stored to level top with its faces and degeneracies.
struct SimplicialSet
{
  int top = 0;
  std::vector<int> sizes;
  /// face[k][i][x] for 1 <= k <= top, 0 <= i <= k.
  std::vector<std::vector<std::vector<int>>> face;
  /// degeneracy[k][i][x] for k + 1 <= top, 0 <= i <= k.
  std::vector<std::vector<std::vector<int>>> degeneracy;

  bool is_degenerate(int k, int x) const;
  std::vector<int> nondegenerate(int k) const;
  /// The simplicial identities at every stored level.
  Report check() const;
};

SimplicialSet realize(Presheaf const &x);

/// Levelwise map realize(f.src) -> realize(f.dst).
std::vector<std::vector<int>> realize_map(PresheafMap const &f);

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Boundaries of the normalized chain complex: boundary[k] maps the
/// nondegenerate k-simplices to the nondegenerate (k-1)-simplices
/// (rows indexed by the target basis). boundary[0] is empty.
struct ChainComplex
{
  std::vector<std::vector<int>> basis;
  std::vector<IntMatrix> boundary;

  /// d_{k-1} d_k = 0 for every k.
  bool is_complex() const;
};

ChainComplex normalized_chains(SimplicialSet const &s);

struct SmithForm
{
  IntMatrix d, u, v; // u m v = d
};

/// Diagonal form with d_1 | d_2 | ..., u and v unimodular.
SmithForm smith_normal_form(IntMatrix const &m);
/// Just the nonzero invariant factors.
std::vector<mpz_class> invariant_factors(IntMatrix const &m);

struct HomologyGroup
{
  std::size_t rank = 0;
  std::vector<mpz_class> torsion; // each >= 2, each dividing the next

  std::string str() const; // "Z^2 + Z/2", "Z", "0"
  friend bool operator==(HomologyGroup const &, HomologyGroup const &) = default;
};

struct HomologyResult
{
  std::vector<HomologyGroup> groups;

  /// Degrees up to the last nonzero group (at least H_0); print and
  /// to_json show only these.
  std::size_t shown_degrees() const;
  /// One "H_k = ..." line per shown degree.
  void print(std::ostream &os) const;
  nlohmann::json to_json() const;
  long euler_characteristic() const;
};

HomologyResult homology(ChainComplex const &c);
HomologyResult homology(Presheaf const &x);

/// Delta[1] with the minimum as product, the vertex 1 as unit and the
/// vertex 0 as absorbing element, checked levelwise to the bound.
Report verify_cubical_monoid_delta1(int up_to_level);

} // namespace qsigma
