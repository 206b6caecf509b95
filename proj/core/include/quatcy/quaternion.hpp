// The quaternion group H = {+-1, +-i, +-j, +-k}, its linear characters and
// its action on the eight coordinates.
#ifndef QUATCY_QUATERNION_HPP
#define QUATCY_QUATERNION_HPP

#include <array>
#include <cstdint>
#include <string_view>

#include "quatcy/poly.hpp"

namespace quatcy {

enum class GroupElement : std::uint8_t { one, minus_one, i, minus_i, j, minus_j, k, minus_k };

inline constexpr std::array<GroupElement, 8> kGroupElements = {
    GroupElement::one, GroupElement::minus_one, GroupElement::i, GroupElement::minus_i,
    GroupElement::j,   GroupElement::minus_j,   GroupElement::k, GroupElement::minus_k};

std::string_view to_string(GroupElement g);
GroupElement parse_group_element(std::string_view s);

GroupElement multiply(GroupElement g, GroupElement h);
GroupElement inverse(GroupElement g);

/// The four linear characters; alpha (resp. beta, gamma) is the nontrivial
/// one equal to +1 on i (resp. j, k).
enum class Character : std::uint8_t { trivial, alpha, beta, gamma };

inline constexpr std::array<Character, 4> kCharacters = {Character::trivial, Character::alpha,
                                                          Character::beta, Character::gamma};

std::string_view to_string(Character c);
Character parse_character(std::string_view s);

int character_value(Character chi, GroupElement g);

/// 8x8 matrix of the action on (X1, Xa, Xb, Xg, Y, Z, Yp, Zp): the characters
/// on the X block and the Pauli matrices rho(g) on (Y, Z) and on (Yp, Zp).
struct RepMatrix {
  FieldPtr field;
  LinearMap entries;

  RepMatrix operator*(const RepMatrix& o) const;
  bool operator==(const RepMatrix& o) const;
  Element trace() const;
  /// Coordinates of M x.
  Point apply(const Point& x) const;
};

/// Throws NoSquareRootOfMinusOne when the field cannot host rho.
RepMatrix rep_matrix(GroupElement g, const FieldPtr& field);

/// (g.f)(x) = f(rep(g)^-1 x), a left action.
Poly act_on_poly(GroupElement g, const Poly& f);

class BadCharacteristic : public FieldError {
 public:
  BadCharacteristic() : FieldError("characteristic divides |H| = 8") {}
};

/// (1/8) sum_h chi(h)^-1 (h.f).
Poly isotypic_project(const Poly& f, Character chi);

struct IsotypicDimensions {
  std::array<int, 4> by_character{};  // indexed like kCharacters
  int residual = 0;
  int total = 0;
};

/// Ranks of the isotypic projectors on degree-d forms (computed over Q(i)).
IsotypicDimensions isotypic_dimensions(unsigned degree = 2);

/// Traces of rep_matrix(g), in kGroupElements order.
std::array<long long, 8> coordinate_character();

}  // namespace quatcy

#endif  // QUATCY_QUATERNION_HPP
