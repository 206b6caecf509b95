// Exact coefficient fields: Q, Q(i), F_p and F_{p^k}.
#ifndef QUATCY_FIELD_HPP
#define QUATCY_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace quatcy {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero") {}
};

class MixedFields : public FieldError {
 public:
  MixedFields() : FieldError("operands live in different fields") {}
};

class NoSquareRootOfMinusOne : public FieldError {
 public:
  explicit NoSquareRootOfMinusOne(const std::string& field)
      : FieldError("-1 is not a square in " + field +
                   " (need p = 1 mod 4, or an even extension degree)") {}
};

class InfiniteField : public FieldError {
 public:
  InfiniteField() : FieldError("field is infinite; cannot enumerate") {}
};

class InvalidField : public FieldError {
 public:
  using FieldError::FieldError;
};

enum class FieldKind { rational, gaussian_rational, prime, prime_ext };

/// Description of a coefficient field. For prime_ext, `modulus` holds the
/// coefficients of a monic irreducible polynomial over F_p, lowest degree
/// first (size k + 1).
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::vector<std::uint64_t> modulus;

  static FieldSpec rational();
  static FieldSpec gaussian_rational();
  static FieldSpec prime(std::uint64_t p);
  /// F_{p^k} with the first monic irreducible modulus in base-p order.
  static FieldSpec extension(std::uint64_t p, unsigned k);
  static FieldSpec extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

  bool is_finite() const { return kind == FieldKind::prime || kind == FieldKind::prime_ext; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Parses the CLI notation: "q", "qi", "fp:13", "fp:13^2".
FieldSpec parse_field_spec(std::string_view text);

struct GaussianRational {
  mpq_class re;
  mpq_class im;
};

/// Raw field element; its interpretation depends on the owning Field.
/// Finite-field elements are canonical residues (F_{p^k}: base-p digits of
/// the coefficient vector, constant term least significant).
using Element = std::variant<std::uint64_t, mpq_class, GaussianRational>;

bool is_prime(std::uint64_t n);
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& monic, std::uint64_t p);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Validated, immutable field context. All element arithmetic goes through
/// a Field so that raw Elements stay small.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  FieldKind kind() const { return spec_.kind; }
  bool is_finite() const { return spec_.is_finite(); }
  std::uint64_t characteristic() const { return is_finite() ? spec_.p : 0; }
  /// p^k; throws InfiniteField for characteristic 0.
  std::uint64_t cardinality() const;

  Element zero() const;
  Element one() const;
  Element from_int(long long v) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element div(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element inv(const Element& a) const;
  Element pow(Element a, std::uint64_t e) const;

  bool is_zero(const Element& a) const;
  bool equal(const Element& a, const Element& b) const;
  /// Total order on canonical forms; only used for deterministic sorting.
  bool less(const Element& a, const Element& b) const;

  /// Designated square root of -1.
  Element sqrt_minus_one() const;
  bool has_sqrt_minus_one() const;

  /// Every element once, in increasing canonical order.
  std::vector<Element> enumerate() const;

  std::string format(const Element& a) const;
  Element parse(std::string_view text) const;

  /// Integer value of an element of the prime subfield (or Q); throws when
  /// the element is not an integer of the prime subfield.
  long long to_int(const Element& a) const;

  /// For F_{p^k}: digits <-> encoding.
  std::vector<std::uint64_t> digits(std::uint64_t code) const;
  std::uint64_t encode(const std::vector<std::uint64_t>& digits) const;

 private:
  std::uint64_t ext_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t ext_add(std::uint64_t a, std::uint64_t b, bool subtract) const;
  std::uint64_t residue(const Element& a) const;
  const mpq_class& rational(const Element& a) const;
  const GaussianRational& gaussian(const Element& a) const;

  FieldSpec spec_;
  std::uint64_t cardinality_ = 0;
  std::vector<std::uint64_t> powers_;  // p^0 .. p^(k-1)
};

FieldPtr make_field(FieldSpec spec);

/// Self-describing field element; operators throw MixedFields when the
/// operands come from different fields.
class Scalar {
 public:
  Scalar(FieldPtr field, Element value) : field_(std::move(field)), value_(std::move(value)) {}
  static Scalar from_int(FieldPtr field, long long v);

  const FieldPtr& field() const { return field_; }
  const Element& value() const { return value_; }
  bool is_zero() const { return field_->is_zero(value_); }
  std::string to_string() const { return field_->format(value_); }

  Scalar inverse() const { return {field_, field_->inv(value_)}; }
  Scalar operator-() const { return {field_, field_->neg(value_)}; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  FieldPtr field_;
  Element value_;
};

enum class ArithOp { add, sub, mul, div };
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

bool same_field(const Field& a, const Field& b);
void require_same_field(const Field& a, const Field& b);

Scalar sqrt_minus_one(const FieldSpec& spec);
std::vector<Scalar> enumerate_field(const FieldSpec& spec);

}  // namespace quatcy

#endif  // QUATCY_FIELD_HPP
