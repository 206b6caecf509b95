// Numerical invariants of the complete intersection of four quadrics in P^7
// and of its free quotient by H.
#ifndef QUATCY_INVARIANTS_HPP
#define QUATCY_INVARIANTS_HPP

#include <array>
#include <vector>

#include <gmpxx.h>

namespace quatcy {

/// Truncated power series in one variable with rational coefficients.
using Series = std::vector<mpq_class>;

Series series_multiply(const Series& a, const Series& b, std::size_t terms);
/// Inverse of a series with nonzero constant term.
Series series_inverse(const Series& a, std::size_t terms);
/// (1 + c h)^e for any integer e, truncated.
Series binomial_series(long c, long e, std::size_t terms);

struct ChernData {
  Series total_chern;  // c(T) restricted to X~, degrees 0..7
  mpq_class c1, c2, c3;  // coefficients of h, h^2, h^3
  long degree = 0;  // h^3 on X~
  long euler_cover = 0;
  long euler_quotient = 0;
  mpq_class l_cubed;  // L^3 on X
  mpq_class l_c2;     // L.c2 on X
  mpq_class riemann_roch;  // L^3/6 + L.c2/12
  bool riemann_roch_holds = false;
  bool miyaoka_bound_holds = false;  // K_S^2 = L^3 <= 5
  mpq_class k2_surface;
};

/// Invariants of a complete intersection of the given degrees in P^n,
/// divided by a freely acting group of the given order.
ChernData chern_invariants(unsigned ambient_dim, const std::vector<long>& degrees, long group_order);
/// The case at hand: four quadrics in P^7, |H| = 8.
ChernData chern_invariants();

struct RegularRepCheck {
  std::array<long long, 8> traces{};  // in kGroupElements order
  bool is_regular = false;
};

RegularRepCheck regular_rep_check();

}  // namespace quatcy

#endif  // QUATCY_INVARIANTS_HPP
