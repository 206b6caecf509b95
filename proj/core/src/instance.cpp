#include "quatcy/instance.hpp"

#include <random>

namespace quatcy {

namespace {

// Uniform integer in [0, bound) from the standardized mt19937_64 stream; the
// rejection step keeps samples identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = gen();
    if (x < limit) return x % bound;
  }
}

Monomial mono(Var a, Var b) { return Monomial::variable(a) * Monomial::variable(b); }

}  // namespace

bool Instance::is_degenerate() const {
  for (const auto& row : t)
    for (const auto& e : row)
      if (field->is_zero(e)) return true;
  return false;
}

Instance uniform_instance(const FieldPtr& field, long long value) {
  Instance inst{field, {}, 0};
  for (auto& row : inst.t) row.fill(field->from_int(value));
  return inst;
}

QuadricSystem build_quadrics(const Instance& inst) {
  const FieldPtr& f = inst.field;
  if (!f->has_sqrt_minus_one()) throw NoSquareRootOfMinusOne(f->spec().name());
  const Field& k = *f;
  using V = Var;
  auto t = [&](Character chi, std::size_t n) { return inst.param(chi, n); };
  auto term = [&](const Element& c, Monomial m) { return Term{m, c}; };
  auto minus = [&](const Element& c) { return k.neg(c); };

  const Character one = Character::trivial, a = Character::alpha, b = Character::beta,
                  g = Character::gamma;

  std::vector<Term> q1 = {
      term(t(one, 1), mono(V::X1, V::X1)),  term(t(one, 2), mono(V::Xa, V::Xa)),
      term(t(one, 3), mono(V::Xb, V::Xb)),  term(t(one, 4), mono(V::Xg, V::Xg)),
      term(t(one, 5), mono(V::Y, V::Zp)),   term(minus(t(one, 5)), mono(V::Yp, V::Z)),
  };
  std::vector<Term> qa = {
      term(t(a, 1), mono(V::X1, V::Xa)), term(t(a, 2), mono(V::Xb, V::Xg)),
      term(t(a, 3), mono(V::Y, V::Z)),   term(t(a, 4), mono(V::Yp, V::Zp)),
      term(t(a, 5), mono(V::Y, V::Zp)),  term(t(a, 5), mono(V::Z, V::Yp)),
  };
  std::vector<Term> qb = {
      term(t(b, 1), mono(V::X1, V::Xb)), term(t(b, 2), mono(V::Xa, V::Xg)),
      term(t(b, 3), mono(V::Y, V::Y)),   term(t(b, 3), mono(V::Z, V::Z)),
      term(t(b, 4), mono(V::Yp, V::Yp)), term(t(b, 4), mono(V::Zp, V::Zp)),
      term(t(b, 5), mono(V::Y, V::Yp)),  term(t(b, 5), mono(V::Z, V::Zp)),
  };
  std::vector<Term> qg = {
      term(t(g, 1), mono(V::X1, V::Xg)),        term(t(g, 2), mono(V::Xa, V::Xb)),
      term(t(g, 3), mono(V::Y, V::Y)),          term(minus(t(g, 3)), mono(V::Z, V::Z)),
      term(t(g, 4), mono(V::Yp, V::Yp)),        term(minus(t(g, 4)), mono(V::Zp, V::Zp)),
      term(t(g, 5), mono(V::Y, V::Yp)),         term(minus(t(g, 5)), mono(V::Z, V::Zp)),
  };
  return QuadricSystem{{Poly(f, std::move(q1)), Poly(f, std::move(qa)), Poly(f, std::move(qb)),
                        Poly(f, std::move(qg))}};
}

Instance random_instance(std::uint64_t seed, const FieldSpec& spec) {
  const FieldPtr field = make_field(spec);
  if (!field->has_sqrt_minus_one()) throw NoSquareRootOfMinusOne(spec.name());
  std::mt19937_64 gen(seed);
  Instance inst{field, {}, seed};
  for (auto& row : inst.t) {
    for (auto& e : row) {
      if (field->is_finite()) {
        e = std::uint64_t{1 + uniform_below(gen, field->cardinality() - 1)};
      } else {
        constexpr long kHeight = 9;
        long re = 0, im = 0;
        while (re == 0 && im == 0) {
          re = static_cast<long>(uniform_below(gen, 2 * kHeight + 1)) - kHeight;
          im = static_cast<long>(uniform_below(gen, 2 * kHeight + 1)) - kHeight;
        }
        e = GaussianRational{mpq_class(re), mpq_class(im)};
      }
    }
  }
  return inst;
}

std::vector<std::vector<Poly>> jacobian(const QuadricSystem& qs) {
  std::vector<std::vector<Poly>> j;
  for (const auto& q : qs.q) {
    std::vector<Poly> row;
    for (std::size_t v = 0; v < kNumVars; ++v) row.push_back(differentiate(q, static_cast<Var>(v)));
    j.push_back(std::move(row));
  }
  return j;
}

namespace {

std::vector<Poly> maximal_minors(const std::vector<std::vector<Poly>>& jac,
                                 const std::vector<std::size_t>& columns) {
  std::vector<Poly> out;
  const std::size_t n = columns.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          std::vector<std::vector<Poly>> m;
          for (const auto& row : jac)
            m.push_back({row[columns[a]], row[columns[b]], row[columns[c]], row[columns[d]]});
          out.push_back(determinant(m));
        }
  return out;
}

}  // namespace

std::vector<Poly> singular_locus_ideal(const QuadricSystem& qs) {
  std::vector<Poly> gens(qs.q.begin(), qs.q.end());
  const auto minors = maximal_minors(jacobian(qs), {0, 1, 2, 3, 4, 5, 6, 7});
  gens.insert(gens.end(), minors.begin(), minors.end());
  return gens;
}

QuadricSystem restrict_system(const QuadricSystem& qs, const VarSet& zero_vars) {
  return QuadricSystem{{substitute_zero(qs.q[0], zero_vars), substitute_zero(qs.q[1], zero_vars),
                        substitute_zero(qs.q[2], zero_vars), substitute_zero(qs.q[3], zero_vars)}};
}

std::vector<Poly> surface_singular_locus_ideal(const QuadricSystem& qs) {
  const QuadricSystem s = restrict_system(qs, var_set({Var::X1}));
  std::vector<Poly> gens = {Poly::variable(qs.field(), Var::X1)};
  gens.insert(gens.end(), s.q.begin(), s.q.end());
  const auto minors = maximal_minors(jacobian(s), {1, 2, 3, 4, 5, 6, 7});
  gens.insert(gens.end(), minors.begin(), minors.end());
  return gens;
}

std::vector<Poly> linear_space_equations(const FieldPtr& field, bool plus) {
  std::vector<Poly> out;
  const std::size_t first = plus ? 4 : 0;
  for (std::size_t v = first; v < first + 4; ++v) out.push_back(Poly::variable(field, static_cast<Var>(v)));
  return out;
}

Poly lift_to_extension(const Poly& f, const FieldPtr& ext) {
  const Field& base = *f.field();
  if (same_field(base, *ext)) return f;
  if (base.kind() != FieldKind::prime || !ext->is_finite() || ext->characteristic() != base.characteristic())
    throw MixedFields();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({t.mono, t.coeff});  // residue r encodes the constant r
  return Poly(ext, std::move(terms));
}

}  // namespace quatcy
