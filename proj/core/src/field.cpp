#include "quatcy/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace quatcy {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Remainder of a by monic b over F_p; both low degree first.
std::vector<u64> poly_mod(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const u64 lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i < db; ++i)
        a[shift + i] = (a[shift + i] + p - mulmod(lead, b[i], p)) % p;
    }
    a.pop_back();
  }
  return a;
}

bool all_zero(const std::vector<u64>& v) {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

u64 parse_u64(std::string_view s) {
  s = trim(s);
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw FieldError("malformed integer '" + std::string(s) + "'");
  return v;
}

mpq_class parse_rational(std::string_view s) {
  s = trim(s);
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  if (text.empty()) throw FieldError("empty rational");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw FieldError("malformed rational '" + text + "'");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw FieldError("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases make Miller-Rabin deterministic below 2^64.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<u64>& monic, u64 p) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const std::size_t k = monic.size() - 1;
  if (k == 1) return true;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::vector<u64> divisor(d + 1, 0);
    divisor[d] = 1;
    while (true) {
      if (all_zero(poly_mod(monic, divisor, p))) return false;
      std::size_t i = 0;
      while (i < d && ++divisor[i] == p) divisor[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

FieldSpec FieldSpec::rational() { return {FieldKind::rational, 0, 1, {}}; }
FieldSpec FieldSpec::gaussian_rational() { return {FieldKind::gaussian_rational, 0, 1, {}}; }
FieldSpec FieldSpec::prime(u64 p) { return {FieldKind::prime, p, 1, {}}; }

FieldSpec FieldSpec::extension(u64 p, unsigned k) {
  if (k == 1) return prime(p);
  if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
  std::vector<u64> poly(k + 1, 0);
  poly[k] = 1;
  while (true) {
    if (is_irreducible_mod_p(poly, p)) return extension(p, poly);
    std::size_t i = 0;
    while (i < k && ++poly[i] == p) poly[i++] = 0;
    if (i == k) throw InvalidField("no irreducible polynomial found");
  }
}

FieldSpec FieldSpec::extension(u64 p, std::vector<u64> modulus) {
  if (modulus.size() < 2) throw InvalidField("extension modulus must have degree >= 1");
  const auto k = static_cast<unsigned>(modulus.size() - 1);
  if (k == 1) return prime(p);
  return {FieldKind::prime_ext, p, k, std::move(modulus)};
}

std::string FieldSpec::name() const {
  switch (kind) {
    case FieldKind::rational: return "Q";
    case FieldKind::gaussian_rational: return "Q(i)";
    case FieldKind::prime: return "F_" + std::to_string(p);
    case FieldKind::prime_ext: return "F_" + std::to_string(p) + "^" + std::to_string(k);
  }
  return "?";
}

FieldSpec parse_field_spec(std::string_view text) {
  text = trim(text);
  if (text == "q") return FieldSpec::rational();
  if (text == "qi") return FieldSpec::gaussian_rational();
  if (text.substr(0, 3) != "fp:") throw InvalidField("unknown field '" + std::string(text) + "'");
  text.remove_prefix(3);
  const auto caret = text.find('^');
  const u64 p = parse_u64(text.substr(0, caret));
  unsigned k = 1;
  if (caret != std::string_view::npos) {
    const u64 kk = parse_u64(text.substr(caret + 1));
    if (kk == 0 || kk > 16) throw InvalidField("extension degree must be in 1..16");
    k = static_cast<unsigned>(kk);
  }
  if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
  return FieldSpec::extension(p, k);
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  switch (spec_.kind) {
    case FieldKind::rational:
    case FieldKind::gaussian_rational:
      spec_.p = 0;
      spec_.k = 1;
      spec_.modulus.clear();
      return;
    case FieldKind::prime:
      spec_.k = 1;
      spec_.modulus.clear();
      break;
    case FieldKind::prime_ext:
      if (spec_.modulus.size() != spec_.k + 1)
        throw InvalidField("modulus degree does not match k");
      break;
  }
  if (!is_prime(spec_.p)) throw InvalidField(std::to_string(spec_.p) + " is not prime");
  if (spec_.p == 2) throw InvalidField("characteristic 2 is not supported");
  if (spec_.kind == FieldKind::prime) {
    cardinality_ = spec_.p;
    powers_ = {1};
    return;
  }
  if (spec_.p >= (u64{1} << 32)) throw InvalidField("extension fields need p < 2^32");
  for (u64 c : spec_.modulus)
    if (c >= spec_.p) throw InvalidField("modulus coefficients must be reduced mod p");
  if (!is_irreducible_mod_p(spec_.modulus, spec_.p))
    throw InvalidField("extension modulus is not irreducible");
  u64 q = 1;
  for (unsigned i = 0; i < spec_.k; ++i) {
    powers_.push_back(q);
    if (q > std::numeric_limits<u64>::max() / 2 / spec_.p)
      throw InvalidField("field too large for 64-bit encoding");
    q *= spec_.p;
  }
  cardinality_ = q;
}

u64 Field::cardinality() const {
  if (!is_finite()) throw InfiniteField();
  return cardinality_;
}

Element Field::zero() const { return from_int(0); }
Element Field::one() const { return from_int(1); }

Element Field::from_int(long long v) const {
  switch (spec_.kind) {
    case FieldKind::rational: return mpq_class(static_cast<long>(v));
    case FieldKind::gaussian_rational:
      return GaussianRational{mpq_class(static_cast<long>(v)), mpq_class(0)};
    case FieldKind::prime:
    case FieldKind::prime_ext: {
      const auto p = static_cast<long long>(spec_.p);
      const long long r = ((v % p) + p) % p;
      return static_cast<u64>(r);
    }
  }
  return u64{0};
}

u64 Field::residue(const Element& a) const {
  if (!is_finite()) throw MixedFields();
  const u64* r = std::get_if<u64>(&a);
  if (!r) throw MixedFields();
  return *r;
}

const mpq_class& Field::rational(const Element& a) const {
  const auto* r = std::get_if<mpq_class>(&a);
  if (!r) throw MixedFields();
  return *r;
}

const GaussianRational& Field::gaussian(const Element& a) const {
  const auto* r = std::get_if<GaussianRational>(&a);
  if (!r) throw MixedFields();
  return *r;
}

std::vector<u64> Field::digits(u64 code) const {
  std::vector<u64> d(spec_.k, 0);
  for (unsigned i = 0; i < spec_.k; ++i) {
    d[i] = code % spec_.p;
    code /= spec_.p;
  }
  return d;
}

u64 Field::encode(const std::vector<u64>& d) const {
  u64 code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * spec_.p + d[i];
  return code;
}

u64 Field::ext_add(u64 a, u64 b, bool subtract) const {
  const u64 p = spec_.p;
  u64 out = 0;
  for (unsigned i = 0; i < spec_.k; ++i) {
    const u64 da = a % p, db = b % p;
    a /= p;
    b /= p;
    const u64 r = subtract ? (da + p - db) % p : (da + db) % p;
    out += r * powers_[i];
  }
  return out;
}

u64 Field::ext_mul(u64 a, u64 b) const {
  const u64 p = spec_.p;
  const auto da = digits(a), db = digits(b);
  std::vector<u64> prod(2 * spec_.k - 1, 0);
  for (unsigned i = 0; i < spec_.k; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < spec_.k; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j] % p) % p;
  }
  return encode(poly_mod(std::move(prod), spec_.modulus, p));
}

Element Field::add(const Element& a, const Element& b) const {
  switch (spec_.kind) {
    case FieldKind::rational: return mpq_class(rational(a) + rational(b));
    case FieldKind::gaussian_rational: {
      const auto &x = gaussian(a), &y = gaussian(b);
      return GaussianRational{x.re + y.re, x.im + y.im};
    }
    case FieldKind::prime: {
      const u64 p = spec_.p, x = residue(a), y = residue(b);
      return x >= p - y ? x - (p - y) : x + y;
    }
    case FieldKind::prime_ext: return ext_add(residue(a), residue(b), false);
  }
  return u64{0};
}

Element Field::sub(const Element& a, const Element& b) const {
  switch (spec_.kind) {
    case FieldKind::rational: return mpq_class(rational(a) - rational(b));
    case FieldKind::gaussian_rational: {
      const auto &x = gaussian(a), &y = gaussian(b);
      return GaussianRational{x.re - y.re, x.im - y.im};
    }
    case FieldKind::prime: {
      const u64 x = residue(a), y = residue(b);
      return x >= y ? x - y : x + (spec_.p - y);
    }
    case FieldKind::prime_ext: return ext_add(residue(a), residue(b), true);
  }
  return u64{0};
}

Element Field::mul(const Element& a, const Element& b) const {
  switch (spec_.kind) {
    case FieldKind::rational: return mpq_class(rational(a) * rational(b));
    case FieldKind::gaussian_rational: {
      const auto &x = gaussian(a), &y = gaussian(b);
      return GaussianRational{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    case FieldKind::prime: return mulmod(residue(a), residue(b), spec_.p);
    case FieldKind::prime_ext: return ext_mul(residue(a), residue(b));
  }
  return u64{0};
}

Element Field::neg(const Element& a) const { return sub(zero(), a); }

Element Field::inv(const Element& a) const {
  if (is_zero(a)) throw DivisionByZero();
  switch (spec_.kind) {
    case FieldKind::rational: return mpq_class(1 / rational(a));
    case FieldKind::gaussian_rational: {
      const auto& x = gaussian(a);
      const mpq_class norm = x.re * x.re + x.im * x.im;
      return GaussianRational{x.re / norm, -x.im / norm};
    }
    case FieldKind::prime: return powmod(residue(a), spec_.p - 2, spec_.p);
    case FieldKind::prime_ext: return pow(a, cardinality_ - 2);
  }
  return u64{0};
}

Element Field::div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

Element Field::pow(Element a, u64 e) const {
  Element r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool Field::is_zero(const Element& a) const {
  switch (spec_.kind) {
    case FieldKind::rational: return rational(a) == 0;
    case FieldKind::gaussian_rational: {
      const auto& x = gaussian(a);
      return x.re == 0 && x.im == 0;
    }
    default: return residue(a) == 0;
  }
}

bool Field::equal(const Element& a, const Element& b) const {
  switch (spec_.kind) {
    case FieldKind::rational: return rational(a) == rational(b);
    case FieldKind::gaussian_rational: {
      const auto &x = gaussian(a), &y = gaussian(b);
      return x.re == y.re && x.im == y.im;
    }
    default: return residue(a) == residue(b);
  }
}

bool Field::less(const Element& a, const Element& b) const {
  switch (spec_.kind) {
    case FieldKind::rational: return rational(a) < rational(b);
    case FieldKind::gaussian_rational: {
      const auto &x = gaussian(a), &y = gaussian(b);
      return x.re < y.re || (x.re == y.re && x.im < y.im);
    }
    default: return residue(a) < residue(b);
  }
}

bool Field::has_sqrt_minus_one() const {
  switch (spec_.kind) {
    case FieldKind::rational: return false;
    case FieldKind::gaussian_rational: return true;
    case FieldKind::prime: return spec_.p % 4 == 1;
    case FieldKind::prime_ext: return spec_.p % 4 == 1 || spec_.k % 2 == 0;
  }
  return false;
}

Element Field::sqrt_minus_one() const {
  if (!has_sqrt_minus_one()) throw NoSquareRootOfMinusOne(spec_.name());
  if (spec_.kind == FieldKind::gaussian_rational) return GaussianRational{0, 1};
  const u64 p = spec_.p;
  if (p % 4 == 1) {
    // Root in the prime subfield; its constant encoding beats any non-constant.
    for (u64 a = 2;; ++a) {
      if (powmod(a, (p - 1) / 2, p) == p - 1) {
        const u64 r = powmod(a, (p - 1) / 4, p);
        return std::min(r, p - r);
      }
    }
  }
  const u64 q = cardinality_;
  const Element minus_one = from_int(-1);
  for (u64 a = 2; a < q; ++a) {
    if (equal(pow(Element{a}, (q - 1) / 2), minus_one)) {
      const Element r = pow(Element{a}, (q - 1) / 4);
      const Element s = neg(r);
      return less(r, s) ? r : s;
    }
  }
  throw NoSquareRootOfMinusOne(spec_.name());
}

std::vector<Element> Field::enumerate() const {
  if (!is_finite()) throw InfiniteField();
  if (cardinality_ > (u64{1} << 26)) throw FieldError("field too large to enumerate");
  std::vector<Element> out;
  out.reserve(cardinality_);
  for (u64 c = 0; c < cardinality_; ++c) out.emplace_back(c);
  return out;
}

std::string Field::format(const Element& a) const {
  switch (spec_.kind) {
    case FieldKind::rational: return rational(a).get_str();
    case FieldKind::gaussian_rational: {
      const auto& x = gaussian(a);
      if (x.im == 0) return x.re.get_str();
      std::string im;
      if (x.im == 1) im = "i";
      else if (x.im == -1) im = "-i";
      else im = x.im.get_str() + "*i";
      if (x.re == 0) return im;
      if (im.front() == '-') return x.re.get_str() + im;
      return x.re.get_str() + "+" + im;
    }
    case FieldKind::prime: return std::to_string(residue(a));
    case FieldKind::prime_ext: {
      const auto d = digits(residue(a));
      std::string out;
      for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
          out += std::to_string(d[i]);
          continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += "w";
        if (i > 1) out += "^" + std::to_string(i);
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

Element Field::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw FieldError("empty field element");
  switch (spec_.kind) {
    case FieldKind::rational: return parse_rational(text);
    case FieldKind::gaussian_rational: {
      if (text.back() != 'i') return GaussianRational{parse_rational(text), 0};
      std::string_view body = text.substr(0, text.size() - 1);
      std::size_t split = std::string_view::npos;
      for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
          split = i;
          break;
        }
      }
      std::string_view re = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
      std::string_view im = split == std::string_view::npos ? body : body.substr(split);
      if (!im.empty() && im.back() == '*') im.remove_suffix(1);
      mpq_class imv;
      if (im.empty() || im == "+") imv = 1;
      else if (im == "-") imv = -1;
      else imv = parse_rational(im);
      return GaussianRational{re.empty() ? mpq_class(0) : parse_rational(re), imv};
    }
    case FieldKind::prime: {
      const u64 v = parse_u64(text);
      if (v >= spec_.p) throw FieldError("residue out of range: " + std::string(text));
      return v;
    }
    case FieldKind::prime_ext: {
      std::vector<u64> d(spec_.k, 0);
      std::string_view rest = text;
      while (!rest.empty()) {
        const auto plus = rest.find('+');
        std::string_view term = trim(rest.substr(0, plus));
        rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 1);
        const auto w = term.find('w');
        u64 coef = 1;
        unsigned power = 0;
        if (w == std::string_view::npos) {
          coef = parse_u64(term);
        } else {
          std::string_view c = trim(term.substr(0, w));
          if (!c.empty()) {
            if (c.back() != '*') throw FieldError("malformed extension element");
            coef = parse_u64(c.substr(0, c.size() - 1));
          }
          std::string_view e = trim(term.substr(w + 1));
          power = 1;
          if (!e.empty()) {
            if (e.front() != '^') throw FieldError("malformed extension element");
            power = static_cast<unsigned>(parse_u64(e.substr(1)));
          }
        }
        if (power >= spec_.k || coef >= spec_.p)
          throw FieldError("extension element out of range: " + std::string(text));
        d[power] = (d[power] + coef) % spec_.p;
      }
      return encode(d);
    }
  }
  throw FieldError("unreachable");
}

long long Field::to_int(const Element& a) const {
  switch (spec_.kind) {
    case FieldKind::rational: {
      const auto& q = rational(a);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw FieldError("not an integer");
      return q.get_num().get_si();
    }
    case FieldKind::gaussian_rational: {
      const auto& x = gaussian(a);
      if (x.im != 0 || x.re.get_den() != 1 || !x.re.get_num().fits_slong_p())
        throw FieldError("not an integer");
      return x.re.get_num().get_si();
    }
    case FieldKind::prime:
    case FieldKind::prime_ext: {
      const u64 r = residue(a);
      if (r >= spec_.p) throw FieldError("not in the prime subfield");
      // Symmetric representative so small negative integers round-trip.
      return r > spec_.p / 2 ? static_cast<long long>(r) - static_cast<long long>(spec_.p)
                             : static_cast<long long>(r);
    }
  }
  return 0;
}

FieldPtr make_field(FieldSpec spec) { return std::make_shared<const Field>(std::move(spec)); }

bool same_field(const Field& a, const Field& b) { return &a == &b || a.spec() == b.spec(); }

void require_same_field(const Field& a, const Field& b) {
  if (!same_field(a, b)) throw MixedFields();
}

Scalar Scalar::from_int(FieldPtr field, long long v) {
  Element e = field->from_int(v);
  return {std::move(field), std::move(e)};
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->div(a.value_, b.value_)};
}

bool operator==(const Scalar& a, const Scalar& b) {
  return same_field(*a.field_, *b.field_) && a.field_->equal(a.value_, b.value_);
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw FieldError("unknown op");
}

Scalar sqrt_minus_one(const FieldSpec& spec) {
  auto field = make_field(spec);
  Element r = field->sqrt_minus_one();
  return {std::move(field), std::move(r)};
}

std::vector<Scalar> enumerate_field(const FieldSpec& spec) {
  auto field = make_field(spec);
  std::vector<Scalar> out;
  for (auto& e : field->enumerate()) out.emplace_back(field, std::move(e));
  return out;
}

}  // namespace quatcy
