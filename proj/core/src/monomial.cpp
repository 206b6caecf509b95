#include "quatcy/monomial.hpp"

#include <algorithm>

namespace quatcy {

namespace {

constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
constexpr std::uint64_t kOverflowProbe = 0x3F3F3F3F3F3F3F3FULL;
constexpr unsigned kMaxBinomN = kNumVars * Monomial::kMaxExponent + kNumVars + 2;

struct BinomialTable {
  std::vector<std::array<std::uint64_t, kNumVars + 1>> rows;
  BinomialTable() : rows(kMaxBinomN + 1) {
    for (unsigned n = 0; n <= kMaxBinomN; ++n) {
      rows[n].fill(0);
      rows[n][0] = 1;
      for (unsigned k = 1; k <= std::min<unsigned>(n, kNumVars); ++k)
        rows[n][k] = rows[n - 1][k - 1] + (k <= n - 1 ? rows[n - 1][k] : 0);
    }
  }
  std::uint64_t operator()(unsigned n, unsigned k) const { return k > n ? 0 : rows[n][k]; }
};

const BinomialTable& binomial() {
  static const BinomialTable table;
  return table;
}

}  // namespace

Var parse_var(std::string_view name) {
  for (std::size_t v = 0; v < kNumVars; ++v)
    if (kVarNames[v] == name) return static_cast<Var>(v);
  throw std::invalid_argument("unknown coordinate '" + std::string(name) + "'");
}

Monomial::Monomial(const std::array<unsigned, kNumVars>& exponents) {
  for (std::size_t v = 0; v < kNumVars; ++v) {
    if (exponents[v] > kMaxExponent) throw DegreeOverflow();
    packed_ |= std::uint64_t{exponents[v]} << (8 * v);
    degree_ += exponents[v];
  }
}

Monomial Monomial::variable(Var v, unsigned power) {
  if (power > kMaxExponent) throw DegreeOverflow();
  return Monomial(std::uint64_t{power} << (8 * index(v)), power);
}

Monomial Monomial::from_packed(std::uint64_t packed) {
  unsigned degree = 0;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    const unsigned e = (packed >> (8 * v)) & 0xFF;
    if (e > kMaxExponent) throw DegreeOverflow();
    degree += e;
  }
  return Monomial(packed, degree);
}

std::array<unsigned, kNumVars> Monomial::exponents() const {
  std::array<unsigned, kNumVars> e{};
  for (std::size_t v = 0; v < kNumVars; ++v) e[v] = exponent(v);
  return e;
}

int Monomial::pure_power_var() const {
  if (packed_ == 0) return -1;
  for (std::size_t v = 0; v < kNumVars; ++v)
    if (exponent(v) == degree_) return static_cast<int>(v);
  return -1;
}

Monomial Monomial::operator*(const Monomial& o) const {
  const std::uint64_t sum = packed_ + o.packed_;
  if (((sum + kOverflowProbe) & kHigh) != 0) throw DegreeOverflow();
  return Monomial(sum, degree_ + o.degree_);
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t v = 0; v < kNumVars; ++v)
    if (exponent(v) && o.exponent(v)) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  std::uint64_t packed = 0;
  unsigned degree = 0;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    const unsigned e = std::max(exponent(v), o.exponent(v));
    packed |= std::uint64_t{e} << (8 * v);
    degree += e;
  }
  return Monomial(packed, degree);
}

std::string Monomial::to_string() const {
  if (packed_ == 0) return "1";
  std::string out;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    const unsigned e = exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += kVarNames[v];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < kNumVars; ++v) {
    if (a.exponent(v) != b.exponent(v)) return a.exponent(v) <=> b.exponent(v);
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialIndex::count_of_degree(unsigned degree) {
  return binomial()(degree + kNumVars - 1, kNumVars - 1);
}

std::size_t MonomialIndex::count_up_to(unsigned degree) {
  return binomial()(degree + kNumVars, kNumVars);
}

std::size_t MonomialIndex::rank(const Monomial& m) {
  const auto& C = binomial();
  const unsigned d = m.degree();
  // Position in decreasing grevlex among degree-d monomials: count those whose
  // (e7, e6, ..., e1) is lexicographically smaller.
  std::size_t desc = 0;
  unsigned r = d;
  for (std::size_t v = kNumVars - 1; v >= 1; --v) {
    const unsigned e = m.exponent(v);
    if (e) {
      const auto vv = static_cast<unsigned>(v);
      desc += C(r + vv, vv) - C(r - e + vv, vv);
      r -= e;
    }
  }
  const std::size_t below = d == 0 ? 0 : count_up_to(d - 1);
  return below + count_of_degree(d) - 1 - desc;
}

void MonomialIndex::reserve_degree(unsigned degree) {
  while (covered_ <= degree) {
    const unsigned d = covered_;
    std::vector<Monomial> level;
    level.reserve(count_of_degree(d));
    std::array<unsigned, kNumVars> e{};
    // Compositions of d into kNumVars parts.
    auto recurse = [&](auto&& self, std::size_t v, unsigned left) -> void {
      if (v == kNumVars - 1) {
        e[v] = left;
        level.emplace_back(e);
        return;
      }
      for (unsigned x = 0; x <= left; ++x) {
        e[v] = x;
        self(self, v + 1, left - x);
      }
    };
    recurse(recurse, 0, d);
    std::sort(level.begin(), level.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
    table_.insert(table_.end(), level.begin(), level.end());
    ++covered_;
  }
}

}  // namespace quatcy
