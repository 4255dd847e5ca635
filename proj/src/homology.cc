#include <utility>

#include "qsigma/realize.hpp"

namespace qsigma {

ChainComplex normalized_chains(SimplicialSet const &s)
{
  ChainComplex c;
  for (int k = 0; k <= s.top; ++k)
    c.basis.push_back(s.nondegenerate(k));
  c.boundary.resize(s.top + 1);
  for (int k = 1; k <= s.top; ++k) {
    std::vector<int> pos(s.sizes[k - 1], -1);
    for (std::size_t r = 0; r < c.basis[k - 1].size(); ++r)
      pos[c.basis[k - 1][r]] = static_cast<int>(r);
    IntMatrix m(c.basis[k - 1].size(), std::vector<mpz_class>(c.basis[k].size(), 0));
    for (std::size_t col = 0; col < c.basis[k].size(); ++col)
      for (int i = 0; i <= k; ++i) {
        int f = s.face[k][i][c.basis[k][col]];
        if (pos[f] >= 0)
          m[pos[f]][col] += i % 2 == 0 ? 1 : -1;
      }
    c.boundary[k] = std::move(m);
  }
  return c;
}

bool ChainComplex::is_complex() const
{
  for (std::size_t k = 2; k < boundary.size(); ++k) {
    auto const &a = boundary[k - 1];
    auto const &b = boundary[k];
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < basis[k].size(); ++j) {
        mpz_class sum = 0;
        for (std::size_t t = 0; t < b.size(); ++t)
          sum += a[i][t] * b[t][j];
        if (sum != 0)
          return false;
      }
  }
  return true;
}

namespace {

IntMatrix identity(std::size_t n)
{
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

} // namespace

SmithForm smith_normal_form(IntMatrix const &m)
{
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  SmithForm sf{m, identity(rows), identity(cols)};
  auto &d = sf.d;
  auto &u = sf.u;
  auto &v = sf.v;

  // row_i -= q row_j, on d and u; col_i -= q col_j, on d and v
  auto row_op = [&](std::size_t i, std::size_t j, mpz_class const &q) {
    for (auto &x : {&d, &u})
      for (std::size_t c = 0; c < (*x)[i].size(); ++c)
        (*x)[i][c] -= q * (*x)[j][c];
  };
  auto col_op = [&](std::size_t i, std::size_t j, mpz_class const &q) {
    for (auto &row : d)
      row[i] -= q * row[j];
    for (auto &row : v)
      row[i] -= q * row[j];
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto &row : d)
      std::swap(row[i], row[j]);
    for (auto &row : v)
      std::swap(row[i], row[j]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the remaining block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d[i][j] != 0 && (pi == rows || abs(d[i][j]) < abs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows)
        break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (d[i][t] != 0) {
          mpz_class q = d[i][t] / d[t][t];
          row_op(i, t, q);
          clean = clean && d[i][t] == 0;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (d[t][j] != 0) {
          mpz_class q = d[t][j] / d[t][t];
          col_op(j, t, q);
          clean = clean && d[t][j] == 0;
        }
      if (!clean)
        continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      row_op(t, bad, -1);
    }
    if (t < rows && t < cols && d[t][t] < 0) {
      for (auto &x : d[t])
        x = -x;
      for (auto &x : u[t])
        x = -x;
    }
  }
  return sf;
}

std::vector<mpz_class> invariant_factors(IntMatrix const &m)
{
  auto sf = smith_normal_form(m);
  std::vector<mpz_class> out;
  for (std::size_t t = 0; t < sf.d.size() && t < sf.d[t].size(); ++t)
    if (sf.d[t][t] != 0)
      out.push_back(sf.d[t][t]);
  return out;
}

std::string HomologyGroup::str() const
{
  std::string out;
  auto add = [&](std::string const &part) { out += (out.empty() ? "" : " + ") + part; };
  if (rank == 1)
    add("Z");
  else if (rank > 1)
    add("Z^" + std::to_string(rank));
  for (auto const &t : torsion)
    add("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

std::size_t HomologyResult::shown_degrees() const
{
  std::size_t n = groups.size();
  while (n > 1 && groups[n - 1] == HomologyGroup{})
    --n;
  return n;
}

void HomologyResult::print(std::ostream &os) const
{
  for (std::size_t k = 0; k < shown_degrees(); ++k)
    os << "H_" << k << " = " << groups[k].str() << '\n';
}

nlohmann::json HomologyResult::to_json() const
{
  auto out = nlohmann::json::array();
  for (std::size_t k = 0; k < shown_degrees(); ++k) {
    auto torsion = nlohmann::json::array();
    for (auto const &t : groups[k].torsion) {
      if (t.fits_slong_p())
        torsion.push_back(t.get_si());
      else
        torsion.push_back(t.get_str());
    }
    out.push_back({{"degree", k},
                   {"rank", groups[k].rank},
                   {"torsion", torsion},
                   {"group", groups[k].str()}});
  }
  return {{"homology", out}, {"euler_characteristic", euler_characteristic()}};
}

long HomologyResult::euler_characteristic() const
{
  long chi = 0;
  for (std::size_t k = 0; k < groups.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(groups[k].rank);
  return chi;
}

// Degrees above the stored top are taken to be zero, which is exact for
// realizations: a cube of dimension n has no nondegenerate simplex above n.
HomologyResult homology(ChainComplex const &c)
{
  std::size_t top = c.basis.size();
  std::vector<std::vector<mpz_class>> factors(top + 1);
  for (std::size_t k = 1; k < top; ++k)
    factors[k] = invariant_factors(c.boundary[k]);
  HomologyResult r;
  for (std::size_t k = 0; k < top; ++k) {
    HomologyGroup g;
    g.rank = c.basis[k].size() - factors[k].size() - factors[k + 1].size();
    for (auto const &t : factors[k + 1])
      if (t > 1)
        g.torsion.push_back(t);
    r.groups.push_back(std::move(g));
  }
  return r;
}

HomologyResult homology(Presheaf const &x) { return homology(normalized_chains(realize(x))); }

} // namespace qsigma
