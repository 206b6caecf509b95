// Random inputs shared by the test suites.
#ifndef QUATCY_TESTS_SUPPORT_HPP
#define QUATCY_TESTS_SUPPORT_HPP

#include <random>

#include "quatcy/field.hpp"
#include "quatcy/instance.hpp"
#include "quatcy/poly.hpp"

namespace quatcy::testing {

inline Element random_element(const Field& k, std::mt19937_64& rng) {
  if (k.is_finite()) return std::uniform_int_distribution<std::uint64_t>(0, k.cardinality() - 1)(rng);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  mpq_class re(num(rng), den(rng));
  re.canonicalize();
  if (k.kind() == FieldKind::rational) return re;
  mpq_class im(num(rng), den(rng));
  im.canonicalize();
  return GaussianRational{re, im};
}

inline Element random_nonzero(const Field& k, std::mt19937_64& rng) {
  Element e = random_element(k, rng);
  while (k.is_zero(e)) e = random_element(k, rng);
  return e;
}

inline Monomial random_monomial(std::mt19937_64& rng, unsigned max_exp = 3) {
  std::array<unsigned, kNumVars> e{};
  std::uniform_int_distribution<unsigned> d(0, max_exp);
  for (auto& x : e) x = d(rng) * (rng() % 3 == 0);
  return Monomial(e);
}

inline Poly random_poly(const FieldPtr& k, std::mt19937_64& rng, std::size_t terms = 6, unsigned max_exp = 3) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < terms; ++i) t.push_back({random_monomial(rng, max_exp), random_element(*k, rng)});
  return Poly(k, std::move(t));
}

/// Random homogeneous form of the given degree.
inline Poly random_form(const FieldPtr& k, std::mt19937_64& rng, unsigned degree, std::size_t terms = 8) {
  std::vector<Term> t;
  std::uniform_int_distribution<std::size_t> var(0, kNumVars - 1);
  for (std::size_t i = 0; i < terms; ++i) {
    std::array<unsigned, kNumVars> e{};
    for (unsigned d = 0; d < degree; ++d) ++e[var(rng)];
    t.push_back({Monomial(e), random_element(*k, rng)});
  }
  return Poly(k, std::move(t));
}

inline Point random_point(const Field& k, std::mt19937_64& rng) {
  Point x;
  for (auto& c : x) c = random_element(k, rng);
  return x;
}

struct PlaneIdeal {
  std::vector<Poly> plane;  // linear form and up to two quadrics in Y, Z, Zp
  std::vector<Poly> gens;
};

inline PlaneIdeal random_plane_ideal(const FieldPtr& k, std::mt19937_64& rng) {
  const std::array<Var, 3> vars = {Var::Y, Var::Z, Var::Zp};
  auto form = [&](unsigned degree) {
    Poly f(k);
    while (f.is_zero()) {
      std::vector<Term> t;
      for (std::size_t a = 0; a < 3; ++a) {
        if (degree == 1) {
          t.push_back({Monomial::variable(vars[a]), random_element(*k, rng)});
          continue;
        }
        for (std::size_t b = a; b < 3; ++b)
          t.push_back({Monomial::variable(vars[a]) * Monomial::variable(vars[b]), random_element(*k, rng)});
      }
      f = Poly(k, std::move(t));
    }
    return f;
  };
  PlaneIdeal ideal;
  ideal.plane.push_back(form(1));
  const int quadrics = static_cast<int>(rng() % 3);
  for (int i = 0; i < quadrics; ++i) ideal.plane.push_back(form(2));
  ideal.gens = ideal.plane;
  for (Var v : {Var::X1, Var::Xa, Var::Xb, Var::Xg, Var::Yp}) ideal.gens.push_back(Poly::variable(k, v));
  return ideal;
}

// Exhaustive search of P^2(F_{5^k}) with field arithmetic only.
inline bool has_point(const std::vector<Poly>& plane, const FieldPtr& ext) {
  std::vector<Poly> lifted;
  for (const auto& f : plane) lifted.push_back(lift_to_extension(f, ext));
  const auto elements = ext->enumerate();
  Point x;
  for (auto& c : x) c = ext->zero();
  auto on = [&]() {
    for (const auto& f : lifted)
      if (!ext->is_zero(evaluate(f, x))) return false;
    return true;
  };
  const std::size_t y = index(Var::Y), z = index(Var::Z), w = index(Var::Zp);
  x[w] = ext->one();
  for (const auto& a : elements)
    for (const auto& b : elements) {
      x[y] = a;
      x[z] = b;
      if (on()) return true;
    }
  x[w] = ext->zero();
  x[z] = ext->one();
  for (const auto& a : elements) {
    x[y] = a;
    if (on()) return true;
  }
  x[z] = ext->zero();
  x[y] = ext->one();
  return on();
}

}  // namespace quatcy::testing

#endif  // QUATCY_TESTS_SUPPORT_HPP
