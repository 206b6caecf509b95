#include "quatcy/poly.hpp"

#include <algorithm>
#include <map>

namespace quatcy {

Poly::Poly(FieldPtr field, std::vector<Term> terms) : field_(std::move(field)) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_compare(a.mono, b.mono) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = field_->add(terms_.back().coeff, t.coeff);
      if (field_->is_zero(terms_.back().coeff)) terms_.pop_back();
    } else if (!field_->is_zero(t.coeff)) {
      terms_.push_back(std::move(t));
    }
  }
}

Poly Poly::constant(FieldPtr field, long long c) {
  Element e = field->from_int(c);
  return constant(std::move(field), std::move(e));
}

Poly Poly::constant(FieldPtr field, Element c) { return monomial(std::move(field), Monomial{}, std::move(c)); }

Poly Poly::variable(FieldPtr field, Var v) { return monomial(field, Monomial::variable(v), field->one()); }

Poly Poly::monomial(FieldPtr field, Monomial m, Element c) {
  Poly p(std::move(field));
  if (!p.field_->is_zero(c)) p.terms_.push_back({m, std::move(c)});
  return p;
}

Poly Poly::monomial(FieldPtr field, Monomial m, long long c) {
  Element e = field->from_int(c);
  return monomial(std::move(field), m, std::move(e));
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Poly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mono.degree() == terms_.front().mono.degree();
  });
}

Element Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return grevlex_compare(t.mono, x) > 0;
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return field_->zero();
}

Poly Poly::operator-() const {
  Poly out(field_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, field_->neg(t.coeff)});
  return out;
}

Poly Poly::combine(const Poly& o, bool subtract) const {
  require_same_field(*field_, *o.field_);
  Poly out(field_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    const auto cmp = a == terms_.end()     ? std::strong_ordering::less
                     : b == o.terms_.end() ? std::strong_ordering::greater
                                           : grevlex_compare(a->mono, b->mono);
    if (cmp > 0) {
      out.terms_.push_back(*a++);
    } else if (cmp < 0) {
      out.terms_.push_back({b->mono, subtract ? field_->neg(b->coeff) : b->coeff});
      ++b;
    } else {
      Element c = subtract ? field_->sub(a->coeff, b->coeff) : field_->add(a->coeff, b->coeff);
      if (!field_->is_zero(c)) out.terms_.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) { return *this = combine(o, false); }
Poly& Poly::operator-=(const Poly& o) { return *this = combine(o, true); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(*a.field_, *b.field_);
  const Field& k = *a.field_;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, k.mul(s.coeff, t.coeff)});
  return Poly(a.field_, std::move(prod));
}

Poly Poly::scaled(const Element& c) const {
  Poly out(field_);
  if (field_->is_zero(c)) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, field_->mul(t.coeff, c)});
  return out;
}

Poly Poly::shifted(const Monomial& m) const {
  Poly out(field_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff});
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(terms_.front().coeff));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_field(*a.field_, *b.field_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono) return false;
    if (!a.field_->equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const bool signed_field = field_->kind() == FieldKind::rational;
  for (const auto& t : terms_) {
    std::string c = field_->format(t.coeff);
    bool negative = false;
    if (signed_field && c.front() == '-') {
      negative = true;
      c.erase(0, 1);
    }
    const bool compound = field_->kind() == FieldKind::gaussian_rational ||
                          field_->kind() == FieldKind::prime_ext;
    if (compound && (c.find('+') != std::string::npos || c.find('-', 1) != std::string::npos))
      c = "(" + c + ")";
    std::string term;
    if (t.mono.is_one()) term = c;
    else if (c == "1") term = t.mono.to_string();
    else term = c + "*" + t.mono.to_string();
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

Poly poly_arith(const Poly& f, const Poly& g, PolyOp op) {
  switch (op) {
    case PolyOp::add: return f + g;
    case PolyOp::sub: return f - g;
    case PolyOp::mul: return f * g;
  }
  return Poly(f.field());
}

Poly differentiate(const Poly& f, Var v) {
  const Field& k = *f.field();
  std::vector<Term> out;
  const Monomial x = Monomial::variable(v);
  for (const auto& t : f.terms()) {
    const unsigned e = t.mono.exponent(v);
    if (e == 0) continue;
    out.push_back({t.mono / x, k.mul(t.coeff, k.from_int(e))});
  }
  return Poly(f.field(), std::move(out));
}

Element evaluate(const Poly& f, std::span<const Element, kNumVars> point) {
  const Field& k = *f.field();
  Element sum = k.zero();
  for (const auto& t : f.terms()) {
    Element term = t.coeff;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      const unsigned e = t.mono.exponent(v);
      if (e) term = k.mul(term, k.pow(point[v], e));
    }
    sum = k.add(sum, term);
  }
  return sum;
}

Poly substitute_zero(const Poly& f, const VarSet& vars) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    bool keep = true;
    for (std::size_t v = 0; v < kNumVars && keep; ++v) keep = !(vars[v] && t.mono.exponent(v));
    if (keep) out.push_back(t);
  }
  return Poly(f.field(), std::move(out));
}

VarSet var_set(std::initializer_list<Var> vars) {
  VarSet s;
  for (Var v : vars) s.set(index(v));
  return s;
}

Poly substitute_linear(const Poly& f, const LinearMap& m) {
  const FieldPtr& field = f.field();
  std::array<std::vector<Poly>, kNumVars> powers;  // powers[v][e] = (row v)^e
  for (std::size_t v = 0; v < kNumVars; ++v) {
    std::vector<Term> row;
    for (std::size_t w = 0; w < kNumVars; ++w)
      row.push_back({Monomial::variable(static_cast<Var>(w)), m[v][w]});
    powers[v].push_back(Poly::constant(field, 1));
    powers[v].push_back(Poly(field, std::move(row)));
  }
  Poly out(field);
  for (const auto& t : f.terms()) {
    Poly term = Poly::constant(field, t.coeff);
    for (std::size_t v = 0; v < kNumVars; ++v) {
      const unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      while (powers[v].size() <= e) powers[v].push_back(powers[v].back() * powers[v][1]);
      term = term * powers[v][e];
    }
    out += term;
  }
  return out;
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  const FieldPtr& field = m[0][0].field();
  if (n == 1) return m[0][0];
  Poly det(field);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][col] * determinant(minor);
    if (col % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace quatcy
