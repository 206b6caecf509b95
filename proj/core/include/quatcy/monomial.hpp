// Monomials in the eight homogeneous coordinates (X1, Xa, Xb, Xg, Y, Z, Yp, Zp).
#ifndef QUATCY_MONOMIAL_HPP
#define QUATCY_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quatcy {

inline constexpr std::size_t kNumVars = 8;

enum class Var : std::uint8_t { X1, Xa, Xb, Xg, Y, Z, Yp, Zp };

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "X1", "Xa", "Xb", "Xg", "Y", "Z", "Yp", "Zp"};

inline constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

/// Parses a coordinate name ("X1", "Yp", ...).
Var parse_var(std::string_view name);

class DegreeOverflow : public std::overflow_error {
 public:
  DegreeOverflow() : std::overflow_error("monomial exponent exceeds the per-variable cap of 64") {}
};

/// Exponent vector packed one byte per variable (variable v in byte v).
/// Exponents are capped at kMaxExponent, which keeps byte arithmetic free of
/// carries.
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 64;

  constexpr Monomial() = default;
  explicit Monomial(const std::array<unsigned, kNumVars>& exponents);
  static Monomial variable(Var v, unsigned power = 1);
  static Monomial from_packed(std::uint64_t packed);

  unsigned exponent(std::size_t v) const { return (packed_ >> (8 * v)) & 0xFF; }
  unsigned exponent(Var v) const { return exponent(index(v)); }
  unsigned degree() const { return degree_; }
  std::uint64_t packed() const { return packed_; }
  std::array<unsigned, kNumVars> exponents() const;
  bool is_one() const { return packed_ == 0; }

  /// The variable of a pure power x_v^n (n >= 1), or -1.
  int pure_power_var() const;

  Monomial operator*(const Monomial& o) const;
  /// Requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    return Monomial(packed_ - o.packed_, degree_ - o.degree_);
  }
  bool divides(const Monomial& o) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    return (((o.packed_ | kHigh) - packed_) & kHigh) == kHigh;
  }
  bool coprime(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  constexpr Monomial(std::uint64_t packed, unsigned degree) : packed_(packed), degree_(degree) {}

  std::uint64_t packed_ = 0;
  unsigned degree_ = 0;
};

/// Graded reverse lexicographic order with X1 > Xa > ... > Zp.
inline std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Higher bytes hold later variables; a smaller later exponent wins.
  return b.packed() <=> a.packed();
}

/// Pure lexicographic order with X1 > Xa > ... > Zp.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// Dense numbering of all monomials of total degree <= some bound, ordered by
/// increasing grevlex. rank() works for any degree; unranking covers the
/// degrees reserved so far.
class MonomialIndex {
 public:
  static std::size_t count_of_degree(unsigned degree);
  static std::size_t count_up_to(unsigned degree);
  static std::size_t rank(const Monomial& m);

  /// Extends the unranking table to cover every degree <= `degree`.
  void reserve_degree(unsigned degree);
  const Monomial& unrank(std::size_t r) const { return table_[r]; }
  std::size_t size() const { return table_.size(); }

 private:
  unsigned covered_ = 0;  // degrees 0 .. covered_-1 are tabulated
  std::vector<Monomial> table_;
};

}  // namespace quatcy

#endif  // QUATCY_MONOMIAL_HPP
