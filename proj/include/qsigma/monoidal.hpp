#pragma once

#include <vector>

#include "qsigma/presheaf.hpp"

namespace qsigma {

/// X (x) Y stored to level N_X + N_Y, together with the coend bookkeeping
/// that names each section by a representative (i, j, f, x, y), meaning
/// the image of x (x) y under f: [k] -> [i + j].
class Convolution
{
public:
  struct Representative
  {
    int i = 0, j = 0;
    Morphism f;
    int x = 0, y = 0;
  };

  Convolution(PresheafPtr x, PresheafPtr y);

  PresheafPtr const &product() const { return _product; }
  PresheafPtr const &left() const { return _x; }
  PresheafPtr const &right() const { return _y; }

  /// Section of the product at level f.src() given by (i, j, f, x, y).
  int section(int i, int j, Morphism const &f, int x, int y) const;
  Representative representative(int level, int id) const;

private:
  struct Level
  {
    // blocks[(i, j)] = first element index
    std::vector<std::vector<std::size_t>> offset;
    std::vector<int> class_of;
    std::vector<std::size_t> reps;
  };

  std::size_t element(int k, int i, int j, std::size_t f, int x, int y) const;

  PresheafPtr _x, _y, _product;
  std::vector<Level> _levels;
};

Convolution convolve(PresheafPtr const &x, PresheafPtr const &y);

/// f (x) g between the convolutions of the sources and of the targets.
PresheafMap tensor(PresheafMap const &f, PresheafMap const &g);

struct PushoutProduct
{
  /// A (x) L  +_{A (x) K}  B (x) K
  Pushout corner;
  /// The induced map into B (x) L.
  PresheafMap map;
};

/// For f: A -> B and g: K -> L.
PushoutProduct pushout_product(PresheafMap const &f, PresheafMap const &g);

/// i_! X for X over Q, stored to the level of X. A truncated X gives a
/// truncated result that is correct at the stored levels.
PresheafPtr symmetrize(PresheafPtr const &x);
PresheafMap symmetrize_map(PresheafMap const &f);

/// i^* Y at levels 0..up_to, over Q and truncated.
PresheafPtr restriction(PresheafPtr const &y, int up_to);
PresheafMap restriction_map(PresheafMap const &f, int up_to);

/// X -> i^* i_! X at levels 0..up_to, for X over Q.
PresheafMap adjunction_unit(PresheafPtr const &x, int up_to);
/// i_! i^* Y -> Y at levels 0..up_to, for Y over Q_Sigma.
PresheafMap adjunction_counit(PresheafPtr const &y, int up_to);

/// Both triangle identities, levelwise to up_to, for X over Q and Y over
/// Q_Sigma.
Report verify_triangle_identities(PresheafPtr const &x, PresheafPtr const &y, int up_to);

} // namespace qsigma
