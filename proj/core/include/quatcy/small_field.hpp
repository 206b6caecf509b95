// Table-driven arithmetic for finite fields with at most 256 elements, used
// by the point enumerators.
#ifndef QUATCY_SMALL_FIELD_HPP
#define QUATCY_SMALL_FIELD_HPP

#include <cstdint>
#include <vector>

#include "quatcy/field.hpp"

namespace quatcy {

class SmallField {
 public:
  static constexpr std::uint64_t kMaxSize = 256;

  /// Elements are the canonical codes 0..q-1 of `field`.
  explicit SmallField(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  unsigned size() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[(unsigned{a} << 8) | b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[(unsigned{a} << 8) | b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }

  std::uint8_t from(const Element& e) const;
  Element to(std::uint8_t a) const { return std::uint64_t{a}; }

  /// Image of a coefficient from this field or from its prime subfield.
  std::uint8_t embed(const Field& source, const Element& e) const;
  std::uint8_t sqrt_minus_one() const { return i_; }

 private:
  FieldPtr field_;
  unsigned q_ = 0;
  std::uint64_t p_ = 0;
  std::uint8_t i_ = 0;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;  // add_/mul_ use a 256 stride
};

}  // namespace quatcy

#endif  // QUATCY_SMALL_FIELD_HPP
