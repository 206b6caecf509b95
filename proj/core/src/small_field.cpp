#include "quatcy/small_field.hpp"

namespace quatcy {

SmallField::SmallField(FieldPtr field) : field_(std::move(field)) {
  const Field& k = *field_;
  if (!k.is_finite() || k.cardinality() > kMaxSize)
    throw FieldError("table arithmetic needs a finite field with at most 256 elements");
  q_ = static_cast<unsigned>(k.cardinality());
  p_ = k.characteristic();
  add_.resize(256 * 256, 0);
  mul_.resize(256 * 256, 0);
  neg_.resize(q_);
  inv_.resize(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    neg_[a] = from(k.neg(Element{std::uint64_t{a}}));
    if (a) inv_[a] = from(k.inv(Element{std::uint64_t{a}}));
    for (unsigned b = 0; b < q_; ++b) {
      add_[(a << 8) | b] = from(k.add(Element{std::uint64_t{a}}, Element{std::uint64_t{b}}));
      mul_[(a << 8) | b] = from(k.mul(Element{std::uint64_t{a}}, Element{std::uint64_t{b}}));
    }
  }
  if (k.has_sqrt_minus_one()) i_ = from(k.sqrt_minus_one());
}

std::uint8_t SmallField::from(const Element& e) const {
  return static_cast<std::uint8_t>(std::get<std::uint64_t>(e));
}

std::uint8_t SmallField::embed(const Field& source, const Element& e) const {
  if (same_field(source, *field_)) return from(e);
  if (source.kind() == FieldKind::prime && source.characteristic() == p_)
    return static_cast<std::uint8_t>(std::get<std::uint64_t>(e));
  throw MixedFields();
}

}  // namespace quatcy
