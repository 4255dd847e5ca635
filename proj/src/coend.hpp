#pragma once

#include <tuple>
#include <vector>

#include "qsigma/presheaf.hpp"

namespace qsigma::detail {

// One level n of the coend of Hom_S([n], -) against the stored levels of
// x: the disjoint union over m <= top of Hom_S([n],[m]) x X_m modulo
// (h f, s) ~ (f, h^* s) for the generators h of x. With S the site of x
// and n > top this is the skeletal extension; with S = Q_Sigma and x over
// Q it is the left Kan extension along the inclusion.
struct ColimitLevel
{
  int n = 0;
  Site hom_site = Site::QSigma;
  std::vector<std::size_t> offset; // start of the (m, ., .) block
  std::vector<int> class_of;
  std::vector<std::size_t> reps;

  std::size_t element(Presheaf const &x, int m, std::size_t f, int s) const
  {
    return offset[m] + f * x.size(m) + s;
  }
  std::tuple<int, std::size_t, int> decode(Presheaf const &x, std::size_t e) const;
};

ColimitLevel colimit_level(Presheaf const &x, int n, Site hom_site);

} // namespace qsigma::detail
