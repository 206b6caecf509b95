#include "quatcy/quaternion.hpp"

#include "quatcy/linalg.hpp"

namespace quatcy {

namespace {

constexpr std::array<std::string_view, 8> kElementNames = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
constexpr std::array<std::string_view, 4> kCharacterNames = {"1", "a", "b", "g"};

struct Signed {
  int unit;  // 0 = 1, 1 = i, 2 = j, 3 = k
  bool negative;
};

Signed split(GroupElement g) {
  const auto n = static_cast<int>(g);
  return {n / 2, (n % 2) == 1};
}

GroupElement join(int unit, bool negative) {
  return static_cast<GroupElement>(unit * 2 + (negative ? 1 : 0));
}

// Products of the units 1, i, j, k: [a][b] = (unit, negative).
constexpr Signed kUnitTable[4][4] = {
    {{0, false}, {1, false}, {2, false}, {3, false}},
    {{1, false}, {0, true}, {3, false}, {2, true}},
    {{2, false}, {3, true}, {0, true}, {1, false}},
    {{3, false}, {2, false}, {1, true}, {0, true}},
};

// 2x2 Pauli block of rho for the generators as displayed; everything else
// is obtained by multiplying these.
std::array<std::array<Element, 2>, 2> pauli_block(int unit, const Field& k) {
  const Element zero = k.zero(), one = k.one(), m_one = k.from_int(-1);
  const Element i = k.sqrt_minus_one(), m_i = k.neg(i);
  switch (unit) {
    case 0: return {{{one, zero}, {zero, one}}};
    case 1: return {{{i, zero}, {zero, m_i}}};      // (Y,Z) -> (iY, -iZ)
    case 2: return {{{zero, m_one}, {one, zero}}};  // (Y,Z) -> (-Z, Y)
    default: return {{{zero, m_i}, {m_i, zero}}};   // (Y,Z) -> (-iZ, -iY)
  }
}

RepMatrix block_matrix(GroupElement g, const FieldPtr& field, const std::array<std::array<Element, 2>, 2>& rho) {
  const Field& k = *field;
  RepMatrix m{field, {}};
  for (auto& row : m.entries) row.fill(k.zero());
  for (std::size_t c = 0; c < 4; ++c) {
    const int value = c == 0 ? 1 : character_value(kCharacters[c], g);
    m.entries[c][c] = k.from_int(value);
  }
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      m.entries[4 + a][4 + b] = rho[a][b];
      m.entries[6 + a][6 + b] = rho[a][b];
    }
  return m;
}

}  // namespace

std::string_view to_string(GroupElement g) { return kElementNames[static_cast<int>(g)]; }

GroupElement parse_group_element(std::string_view s) {
  for (std::size_t n = 0; n < kElementNames.size(); ++n)
    if (kElementNames[n] == s) return static_cast<GroupElement>(n);
  throw std::invalid_argument("unknown group element '" + std::string(s) + "'");
}

GroupElement multiply(GroupElement g, GroupElement h) {
  const Signed a = split(g), b = split(h);
  const Signed u = kUnitTable[a.unit][b.unit];
  return join(u.unit, u.negative != (a.negative != b.negative));
}

GroupElement inverse(GroupElement g) {
  const Signed a = split(g);
  return a.unit == 0 ? g : join(a.unit, !a.negative);
}

std::string_view to_string(Character c) { return kCharacterNames[static_cast<int>(c)]; }

Character parse_character(std::string_view s) {
  for (std::size_t n = 0; n < kCharacterNames.size(); ++n)
    if (kCharacterNames[n] == s) return static_cast<Character>(n);
  throw std::invalid_argument("unknown character '" + std::string(s) + "'");
}

int character_value(Character chi, GroupElement g) {
  const int unit = split(g).unit;
  switch (chi) {
    case Character::trivial: return 1;
    case Character::alpha: return (unit == 0 || unit == 1) ? 1 : -1;
    case Character::beta: return (unit == 0 || unit == 2) ? 1 : -1;
    case Character::gamma: return (unit == 0 || unit == 3) ? 1 : -1;
  }
  return 1;
}

RepMatrix RepMatrix::operator*(const RepMatrix& o) const {
  require_same_field(*field, *o.field);
  const Field& k = *field;
  RepMatrix out{field, {}};
  for (std::size_t r = 0; r < kNumVars; ++r)
    for (std::size_t c = 0; c < kNumVars; ++c) {
      Element s = k.zero();
      for (std::size_t m = 0; m < kNumVars; ++m) s = k.add(s, k.mul(entries[r][m], o.entries[m][c]));
      out.entries[r][c] = s;
    }
  return out;
}

bool RepMatrix::operator==(const RepMatrix& o) const {
  if (!same_field(*field, *o.field)) return false;
  for (std::size_t r = 0; r < kNumVars; ++r)
    for (std::size_t c = 0; c < kNumVars; ++c)
      if (!field->equal(entries[r][c], o.entries[r][c])) return false;
  return true;
}

Element RepMatrix::trace() const {
  Element s = field->zero();
  for (std::size_t r = 0; r < kNumVars; ++r) s = field->add(s, entries[r][r]);
  return s;
}

Point RepMatrix::apply(const Point& x) const {
  Point y;
  for (std::size_t r = 0; r < kNumVars; ++r) {
    Element s = field->zero();
    for (std::size_t c = 0; c < kNumVars; ++c) s = field->add(s, field->mul(entries[r][c], x[c]));
    y[r] = s;
  }
  return y;
}

RepMatrix rep_matrix(GroupElement g, const FieldPtr& field) {
  const Field& k = *field;
  if (!k.has_sqrt_minus_one()) throw NoSquareRootOfMinusOne(k.spec().name());
  const Signed s = split(g);
  auto rho = pauli_block(s.unit, k);
  if (s.negative) {
    // rho(-g) = rho(i)^2 rho(g)
    const auto i = pauli_block(1, k);
    const Element minus_one = k.mul(i[0][0], i[0][0]);
    for (auto& row : rho)
      for (auto& e : row) e = k.mul(e, minus_one);
  }
  return block_matrix(g, field, rho);
}

Poly act_on_poly(GroupElement g, const Poly& f) {
  return substitute_linear(f, rep_matrix(inverse(g), f.field()).entries);
}

Poly isotypic_project(const Poly& f, Character chi) {
  const Field& k = *f.field();
  if (k.characteristic() == 2) throw BadCharacteristic();
  Poly sum(f.field());
  for (GroupElement h : kGroupElements) {
    // chi(h)^-1 = chi(h) for a +-1-valued character.
    const Poly image = act_on_poly(h, f);
    if (character_value(chi, h) == 1) sum += image;
    else sum -= image;
  }
  return sum.scaled(k.inv(k.from_int(8)));
}

IsotypicDimensions isotypic_dimensions(unsigned degree) {
  const FieldPtr field = make_field(FieldSpec::gaussian_rational());
  MonomialIndex index;
  index.reserve_degree(degree);
  std::vector<Monomial> basis;
  for (std::size_t r = 0; r < index.size(); ++r)
    if (index.unrank(r).degree() == degree) basis.push_back(index.unrank(r));

  auto coordinates = [&](const Poly& p) {
    std::vector<Element> row;
    for (const auto& m : basis) row.push_back(p.coefficient(m));
    return row;
  };

  IsotypicDimensions dims;
  dims.total = static_cast<int>(basis.size());
  Matrix residual;
  std::array<Matrix, 4> images;
  for (const auto& m : basis) {
    const Poly x = Poly::monomial(field, m, 1);
    Poly rest = x;
    for (std::size_t c = 0; c < 4; ++c) {
      const Poly p = isotypic_project(x, kCharacters[c]);
      images[c].push_back(coordinates(p));
      rest -= p;
    }
    residual.push_back(coordinates(rest));
  }
  for (std::size_t c = 0; c < 4; ++c) dims.by_character[c] = matrix_rank(*field, images[c]);
  dims.residual = matrix_rank(*field, residual);
  return dims;
}

std::array<long long, 8> coordinate_character() {
  const FieldPtr field = make_field(FieldSpec::gaussian_rational());
  std::array<long long, 8> out{};
  for (std::size_t n = 0; n < kGroupElements.size(); ++n)
    out[n] = field->to_int(rep_matrix(kGroupElements[n], field).trace());
  return out;
}

}  // namespace quatcy
