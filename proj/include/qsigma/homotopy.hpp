#pragma once

#include <optional>

#include "qsigma/presheaf.hpp"

namespace qsigma {

/// The square
///     A --top--> X
///     |          |
///   left       right
///     v          v
///     B -bottom-> Y
struct LiftingProblem
{
  PresheafMap left;
  PresheafMap right;
  PresheafMap top;
  PresheafMap bottom;
};

/// The first filler B -> X in canonical order, or nothing when the search
/// refutes every candidate. Throws InputError if the square does not
/// commute.
std::optional<PresheafMap> solve_lifting(LiftingProblem const &p,
                                         std::size_t limit = 1'000'000);

/// For every 1 <= n <= up_to, every cap i_! of the (j, eps) cap in the
/// n-cube, and every map from it into X: does the map extend over the
/// n-cube? One entry per cap. X over Q_Sigma.
Report is_fibrant(PresheafPtr const &x, int up_to, std::size_t limit = 1'000'000);

/// The map from the point picking the vertex v of Y, stored to Y's top.
PresheafMap vertex_map(PresheafPtr const &y, int v);

struct Homotopy
{
  int n = 1;
  /// X (x) cube^n -> Y.
  PresheafMap h;
};

/// A homotopy from f to g parametrized by the n-cube: h restricted along
/// id (x) {(0,...,0)} is f and along id (x) {(1,...,1)} is g.
std::optional<Homotopy> find_homotopy(PresheafMap const &f, PresheafMap const &g, int n,
                                      std::size_t limit = 1'000'000);

/// (x1^x_{n+1}, ..., xn^x_{2n}) : 2n -> n, which restricted to the last n
/// coordinates at 0 is constant 0 and at 1 is the identity.
Morphism contraction(int n);
Report verify_contraction(int n);

} // namespace qsigma
