// Sparse polynomials in the eight coordinates over an exact field.
#ifndef QUATCY_POLY_HPP
#define QUATCY_POLY_HPP

#include <array>
#include <bitset>
#include <span>
#include <string>
#include <vector>

#include "quatcy/field.hpp"
#include "quatcy/monomial.hpp"

namespace quatcy {

struct Term {
  Monomial mono;
  Element coeff;
};

using VarSet = std::bitset<kNumVars>;
using Point = std::array<Element, kNumVars>;
using LinearMap = std::array<std::array<Element, kNumVars>, kNumVars>;

/// Terms are kept strictly decreasing in grevlex with no zero coefficients.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Term> terms);  // sorts and merges

  static Poly constant(FieldPtr field, long long c);
  static Poly constant(FieldPtr field, Element c);
  static Poly variable(FieldPtr field, Var v);
  static Poly monomial(FieldPtr field, Monomial m, Element c);
  static Poly monomial(FieldPtr field, Monomial m, long long c);

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Coefficient of `m` (zero when absent).
  Element coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Element& c) const;
  Poly shifted(const Monomial& m) const;
  /// Divides by the leading coefficient.
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b);

  /// Report format, e.g. "2*X1^2 + 12*Y*Zp".
  std::string to_string() const;

 private:
  Poly combine(const Poly& o, bool subtract) const;

  FieldPtr field_;
  std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& f, const Poly& g, PolyOp op);

Poly differentiate(const Poly& f, Var v);
Element evaluate(const Poly& f, std::span<const Element, kNumVars> point);
Poly substitute_zero(const Poly& f, const VarSet& vars);
VarSet var_set(std::initializer_list<Var> vars);

/// f(M x): every coordinate x_v is replaced by sum_w M[v][w] x_w.
Poly substitute_linear(const Poly& f, const LinearMap& m);

/// Determinant of a square matrix of polynomials (Laplace expansion).
Poly determinant(const std::vector<std::vector<Poly>>& m);

}  // namespace quatcy

#endif  // QUATCY_POLY_HPP
