// Members of the four-quadric family X_t in P^7.
#ifndef QUATCY_INSTANCE_HPP
#define QUATCY_INSTANCE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "quatcy/poly.hpp"
#include "quatcy/quaternion.hpp"

namespace quatcy {

inline constexpr std::size_t kParamsPerQuadric = 5;

/// t[chi][n] is the coefficient t^chi_{n+1}; rows follow kCharacters.
using ParameterMatrix = std::array<std::array<Element, kParamsPerQuadric>, 4>;

struct Instance {
  FieldPtr field;
  ParameterMatrix t;
  std::uint64_t seed = 0;  // 0 when hand-authored

  const Element& param(Character chi, std::size_t n) const {
    return t[static_cast<std::size_t>(chi)][n - 1];
  }
  void set_param(Character chi, std::size_t n, Element value) {
    t[static_cast<std::size_t>(chi)][n - 1] = std::move(value);
  }
  /// True when some t^chi_n vanishes.
  bool is_degenerate() const;
};

/// One quadric per character, indexed like kCharacters.
struct QuadricSystem {
  std::array<Poly, 4> q;

  const Poly& operator[](Character chi) const { return q[static_cast<std::size_t>(chi)]; }
  const FieldPtr& field() const { return q[0].field(); }
};

/// Instance with every coefficient equal to `value`.
Instance uniform_instance(const FieldPtr& field, long long value = 1);

QuadricSystem build_quadrics(const Instance& inst);

/// Seeded uniform sample of nonzero coefficients. Finite fields draw from
/// F_q^*; Q(i) draws a + b i with integers |a|, |b| <= 9, not both zero.
Instance random_instance(std::uint64_t seed, const FieldSpec& spec);

/// 4 x 8 matrix of partial derivatives d q_chi / d x_v.
std::vector<std::vector<Poly>> jacobian(const QuadricSystem& qs);

/// The four quadrics together with all 70 maximal minors of the Jacobian:
/// its projective zero set is the singular locus of X_t.
std::vector<Poly> singular_locus_ideal(const QuadricSystem& qs);

/// The system with the listed coordinates set to zero.
QuadricSystem restrict_system(const QuadricSystem& qs, const VarSet& zero_vars);

/// Generators for the singular locus of the section X1 = 0: X1, the
/// restricted quadrics and the 35 maximal minors of their Jacobian in the
/// remaining seven coordinates.
std::vector<Poly> surface_singular_locus_ideal(const QuadricSystem& qs);

/// Linear coordinate equations cutting out L+ (Y=Z=Yp=Zp=0) or L- (X=0).
std::vector<Poly> linear_space_equations(const FieldPtr& field, bool plus);

/// Coefficients of the prime subfield moved into an extension F_{p^k}.
Poly lift_to_extension(const Poly& f, const FieldPtr& ext);

}  // namespace quatcy

#endif  // QUATCY_INSTANCE_HPP
