#include "quatcy/invariants.hpp"

#include <stdexcept>

#include "quatcy/quaternion.hpp"

namespace quatcy {

Series series_multiply(const Series& a, const Series& b, std::size_t terms) {
  Series out(terms, 0);
  for (std::size_t i = 0; i < a.size() && i < terms; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) out[i + j] += a[i] * b[j];
  return out;
}

Series series_inverse(const Series& a, std::size_t terms) {
  if (a.empty() || a[0] == 0) throw std::invalid_argument("series has no inverse");
  Series out(terms, 0);
  out[0] = 1 / a[0];
  for (std::size_t n = 1; n < terms; ++n) {
    mpq_class s = 0;
    for (std::size_t i = 1; i <= n && i < a.size(); ++i) s += a[i] * out[n - i];
    out[n] = -s / a[0];
  }
  return out;
}

Series binomial_series(long c, long e, std::size_t terms) {
  Series base(2);
  base[0] = 1;
  base[1] = c;
  const long reps = e < 0 ? -e : e;
  Series out(terms, 0);
  out[0] = 1;
  for (long r = 0; r < reps; ++r) out = series_multiply(out, base, terms);
  return e < 0 ? series_inverse(out, terms) : out;
}

ChernData chern_invariants(unsigned ambient_dim, const std::vector<long>& degrees, long group_order) {
  const std::size_t terms = ambient_dim + 1;
  ChernData d;
  d.total_chern = binomial_series(1, ambient_dim + 1, terms);
  d.degree = 1;
  for (long deg : degrees) {
    d.total_chern = series_multiply(d.total_chern, binomial_series(deg, -1, terms), terms);
    d.degree *= deg;
  }
  d.c1 = d.total_chern[1];
  d.c2 = d.total_chern[2];
  d.c3 = d.total_chern[3];
  const mpq_class euler_cover = d.c3 * d.degree;
  const mpq_class euler_quotient = euler_cover / group_order;
  if (euler_cover.get_den() != 1 || euler_quotient.get_den() != 1)
    throw std::logic_error("non-integral Euler characteristic");
  d.euler_cover = euler_cover.get_num().get_si();
  d.euler_quotient = euler_quotient.get_num().get_si();
  d.l_cubed = mpq_class(d.degree, group_order);
  d.l_cubed.canonicalize();
  d.l_c2 = d.c2 * d.degree / group_order;
  d.riemann_roch = d.l_cubed / 6 + d.l_c2 / 12;
  d.riemann_roch_holds = d.riemann_roch == 1;
  d.k2_surface = d.l_cubed;
  d.miyaoka_bound_holds = d.k2_surface <= 5;
  return d;
}

ChernData chern_invariants() { return chern_invariants(7, {2, 2, 2, 2}, 8); }

RegularRepCheck regular_rep_check() {
  RegularRepCheck r;
  r.traces = coordinate_character();
  r.is_regular = r.traces[0] == 8;
  for (std::size_t g = 1; g < r.traces.size(); ++g) r.is_regular = r.is_regular && r.traces[g] == 0;
  return r;
}

}  // namespace quatcy
