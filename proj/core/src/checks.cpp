#include "quatcy/checks.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "quatcy/linalg.hpp"

namespace quatcy {

using nlohmann::json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::symbolic: return "symbolic";
    case Method::groebner: return "groebner";
    case Method::enumeration: return "enumeration";
    case Method::both: return "both";
  }
  return "?";
}

Method parse_method(std::string_view s) {
  for (Method m : {Method::symbolic, Method::groebner, Method::enumeration, Method::both})
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

json CheckRecord::to_json(bool timings) const {
  json j{{"name", name},
         {"method", std::string(to_string(method))},
         {"verdict", std::string(to_string(verdict))},
         {"witnesses", witnesses},
         {"seconds", timings ? seconds : 0.0}};
  if (!note.empty()) j["note"] = note;
  if (!parts.empty()) {
    j["parts"] = json::array();
    for (const auto& p : parts) j["parts"].push_back(p.to_json(timings));
  }
  return j;
}

Verdict VerificationReport::overall() const {
  bool inconclusive = false;
  for (const auto& r : records) {
    if (r.verdict == Verdict::refuted) return Verdict::refuted;
    inconclusive = inconclusive || r.verdict == Verdict::inconclusive;
  }
  return inconclusive ? Verdict::inconclusive : Verdict::certified;
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

QuadricSystem lift(const QuadricSystem& qs, const FieldPtr& field) {
  QuadricSystem out = qs;
  for (auto& q : out.q) q = lift_to_extension(q, field);
  return out;
}

bool on_system(const QuadricSystem& qs, const Field& k, const Point& x) {
  if (std::all_of(x.begin(), x.end(), [&](const Element& e) { return k.is_zero(e); })) return false;
  return std::all_of(qs.q.begin(), qs.q.end(), [&](const Poly& q) { return k.is_zero(evaluate(q, x)); });
}

json exponent_witness(const EmptinessCertificate& cert) {
  json j = json::object();
  for (std::size_t v = 0; v < kNumVars; ++v) j[std::string(kVarNames[v])] = cert.witness[v];
  return j;
}

json point_json(const SmallPoint& x, const SmallField& k) {
  return json{{"point", format_point(x, k)}, {"field", k.field()->spec().name()}};
}

json scan_summary(const PointScan& s) {
  json orbits = json::object();
  for (const auto& [size, count] : s.orbit_histogram) orbits[std::to_string(size)] = count;
  return json{{"field", s.field->spec().name()},
              {"points", s.points.size()},
              {"orbits", orbits},
              {"fixed_points", s.fixed_point_count},
              {"singular_points", s.singular_count},
              {"surface_points", s.surface_point_count},
              {"surface_singular_points", s.surface_singular_count}};
}

std::string budget_note(const BudgetExceeded& e) {
  return std::string("Groebner budget exceeded (") + e.what() + "); try --method enumeration";
}

// Fields F_{p^k}, k = 1, 2, ..., up to `max_size` elements, over which a
// witness for the instance can be searched.
std::vector<FieldPtr> witness_fields(const Instance& inst, std::uint64_t max_size) {
  std::vector<FieldPtr> out;
  const Field& base = *inst.field;
  if (!base.is_finite()) return out;
  max_size = std::min<std::uint64_t>(max_size, SmallField::kMaxSize);
  if (base.kind() != FieldKind::prime) {
    if (base.cardinality() <= max_size) out.push_back(inst.field);
    return out;
  }
  std::uint64_t q = base.cardinality();
  for (unsigned k = 1; q <= max_size; ++k, q *= base.cardinality())
    out.push_back(enumeration_field(inst, k, max_size));
  return out;
}

}  // namespace

std::optional<GroupElement> eigen_law_violation(const Poly& f, Character chi) {
  for (GroupElement h : kGroupElements) {
    const Poly image = act_on_poly(h, f);
    const Poly expected = character_value(chi, h) == 1 ? f : -f;
    if (!(image == expected)) return h;
  }
  return std::nullopt;
}

bool is_fixed_point(const QuadricSystem& qs, const FieldPtr& field, const Point& x, GroupElement g) {
  const QuadricSystem lifted = lift(qs, field);
  if (!on_system(lifted, *field, x)) return false;
  const Point y = rep_matrix(g, field).apply(x);
  return matrix_rank(*field, {{x.begin(), x.end()}, {y.begin(), y.end()}}) == 1;
}

bool is_singular_point(const QuadricSystem& qs, const FieldPtr& field, const Point& x,
                       const VarSet& columns) {
  const QuadricSystem lifted = lift(qs, field);
  if (!on_system(lifted, *field, x)) return false;
  for (std::size_t v = 0; v < kNumVars; ++v)
    if (!columns[v] && !field->is_zero(x[v])) return false;
  const auto jac = jacobian(lifted);
  Matrix m;
  for (const auto& row : jac) {
    std::vector<Element> values;
    for (std::size_t v = 0; v < kNumVars; ++v)
      if (columns[v]) values.push_back(evaluate(row[v], x));
    m.push_back(std::move(values));
  }
  return matrix_rank(*field, std::move(m)) < 4;
}

std::vector<std::uint64_t> complete_intersection_hilbert(unsigned cap) {
  auto binom = [](long long n, long long r) -> std::uint64_t {
    if (r < 0 || n < r) return 0;
    std::uint64_t b = 1;
    for (long long i = 1; i <= r; ++i) b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return b;
  };
  std::vector<std::uint64_t> out;
  for (unsigned d = 0; d <= cap; ++d) {
    std::uint64_t s = 0;
    for (unsigned j = 0; j <= 4 && j <= d; ++j) s += binom(4, j) * binom(d - j + 3, 3);
    out.push_back(s);
  }
  return out;
}

CheckRecord check_eigenspace(const QuadricSystem& qs) {
  Stopwatch clock;
  CheckRecord r{"eigenspace", Method::symbolic};
  json violations = json::array();
  for (Character chi : kCharacters) {
    for (GroupElement h : kGroupElements) {
      const Poly& q = qs[chi];
      const Poly expected = character_value(chi, h) == 1 ? q : -q;
      if (!(act_on_poly(h, q) == expected))
        violations.push_back({{"h", std::string(to_string(h))}, {"chi", std::string(to_string(chi))}});
    }
  }
  r.verdict = violations.empty() ? Verdict::certified : Verdict::refuted;
  r.witnesses = {{"identities", kCharacters.size() * kGroupElements.size()}, {"violations", violations}};
  r.seconds = clock.seconds();
  return r;
}

CheckRecord check_eigenspace(const Instance& inst) { return check_eigenspace(build_quadrics(inst)); }

InstanceVerifier::InstanceVerifier(Instance inst, CheckOptions options)
    : inst_(std::move(inst)), options_(options), qs_(build_quadrics(inst_)) {}

const PointScan& InstanceVerifier::scan(unsigned ext_degree) {
  auto it = scans_.find(ext_degree);
  if (it == scans_.end()) it = scans_.emplace(ext_degree, scan_points(inst_, ext_degree, options_.scan)).first;
  return it->second;
}

CheckRecord InstanceVerifier::eigenspace() { return check_eigenspace(qs_); }

CheckRecord InstanceVerifier::combine(std::string name, CheckRecord g, CheckRecord e) const {
  CheckRecord r{std::move(name), Method::both};
  if (g.verdict == Verdict::certified && e.verdict == Verdict::refuted) {
    r.verdict = Verdict::refuted;
    r.note = "methods disagree: the enumeration witness stands";
  } else if (g.verdict == Verdict::refuted || e.verdict == Verdict::refuted) {
    r.verdict = Verdict::refuted;
  } else if (g.verdict == Verdict::certified) {
    r.verdict = Verdict::certified;
  }
  r.witnesses = {{"groebner", g.witnesses}, {"enumeration", e.witnesses}};
  r.seconds = g.seconds + e.seconds;
  r.parts = {std::move(g), std::move(e)};
  return r;
}

std::optional<json> InstanceVerifier::search_linear_space_witness(bool plus) {
  VarSet support;
  for (std::size_t v = 0; v < 4; ++v) support.set(plus ? v : v + 4);
  for (const FieldPtr& field : witness_fields(inst_, options_.witness_field_size)) {
    const SmallField k(field);
    const QuadricSystem lifted = lift(qs_, field);
    const auto zeros = projective_zeros({lifted.q.begin(), lifted.q.end()}, k, support, options_.scan.threads);
    for (const auto& x : zeros) {
      if (!is_fixed_point(qs_, field, to_point(x, k), GroupElement::minus_one))
        throw std::logic_error("witness point failed re-verification");
      json w = point_json(x, k);
      w["element"] = "-1";
      w["locus"] = plus ? "L+" : "L-";
      return w;
    }
  }
  return std::nullopt;
}

CheckRecord InstanceVerifier::free_action_groebner() {
  Stopwatch clock;
  CheckRecord r{"free_action", Method::groebner};
  bool all_empty = true;
  for (bool plus : {true, false}) {
    const char* locus = plus ? "L+" : "L-";
    std::vector<Poly> gens(qs_.q.begin(), qs_.q.end());
    for (auto& l : linear_space_equations(inst_.field, plus)) gens.push_back(std::move(l));
    try {
      const GroebnerBasis gb = buchberger(gens, options_.budget);
      const EmptinessCertificate cert = is_projectively_empty(gb);
      r.witnesses[locus] = exponent_witness(cert);
      if (cert.empty) continue;
      all_empty = false;
      if (auto w = search_linear_space_witness(plus)) {
        r.verdict = Verdict::refuted;
        r.witnesses["fixed_point"] = *w;
        r.note = std::string("X meets ") + locus + ", so -1 has a fixed point";
        break;
      }
      r.note = std::string("the ideal of X on ") + locus +
               " is not projectively empty, but no witness point was found over small fields";
    } catch (const BudgetExceeded& e) {
      all_empty = false;
      r.note = budget_note(e);
      break;
    }
  }
  if (all_empty) r.verdict = Verdict::certified;
  r.seconds = clock.seconds();
  return r;
}

CheckRecord InstanceVerifier::free_action_enumeration() {
  Stopwatch clock;
  CheckRecord r{"free_action", Method::enumeration};
  r.witnesses["fields"] = json::array();
  try {
    for (unsigned k = 1; k <= options_.ext_degree; ++k) {
      const PointScan& s = scan(k);
      r.witnesses["fields"].push_back(scan_summary(s));
      if (s.fixed.empty()) continue;
      const SmallField sf(s.field);
      json fixed = json::array();
      for (const auto& w : s.fixed) {
        if (!is_fixed_point(qs_, s.field, to_point(w.point, sf), w.element))
          throw std::logic_error("fixed point failed re-verification");
        json j = point_json(w.point, sf);
        j["element"] = std::string(to_string(w.element));
        fixed.push_back(j);
      }
      r.witnesses["fixed_points"] = fixed;
      r.verdict = Verdict::refuted;
      break;
    }
    if (r.verdict != Verdict::refuted)
      r.note = "no point fixed by a nontrivial element; enumeration is evidence, not a certificate";
  } catch (const EnumerationTooLarge& e) {
    r.note = e.what();
  }
  r.seconds = clock.seconds();
  return r;
}

CheckRecord InstanceVerifier::free_action() {
  switch (options_.method) {
    case Method::enumeration: return free_action_enumeration();
    case Method::both: return combine("free_action", free_action_groebner(), free_action_enumeration());
    default: return free_action_groebner();
  }
}

std::optional<json> InstanceVerifier::search_singular_witness(bool surface) {
  VarSet columns;
  columns.set();
  if (surface) columns.reset(index(Var::X1));
  for (unsigned k = 1;; ++k) {
    const PointScan* s = nullptr;
    try {
      s = &scan(k);
    } catch (const EnumerationTooLarge&) {
      return std::nullopt;
    }
    const auto& found = surface ? s->surface_singular : s->singular;
    if (found.empty()) continue;
    const SmallField sf(s->field);
    if (!is_singular_point(qs_, s->field, to_point(found.front(), sf), columns))
      throw std::logic_error("singular point failed re-verification");
    return point_json(found.front(), sf);
  }
}

CheckRecord InstanceVerifier::smooth_groebner(bool surface) {
  Stopwatch clock;
  CheckRecord r{surface ? "reid_surface_smoothness" : "smoothness", Method::groebner};
  try {
    const GroebnerBasis gb =
        buchberger(surface ? surface_singular_locus_ideal(qs_) : singular_locus_ideal(qs_), options_.budget);
    const EmptinessCertificate cert = is_projectively_empty(gb);
    r.witnesses["singular_locus"] = exponent_witness(cert);
    r.witnesses["basis_size"] = gb.size();
    if (cert.empty) {
      r.verdict = Verdict::certified;
      r.note = "smooth over the algebraic closure of the instance field";
    } else if (auto w = search_singular_witness(surface)) {
      r.verdict = Verdict::refuted;
      r.witnesses["singular_point"] = *w;
    } else {
      r.note = "singular locus is not empty, but no singular point was found by enumeration";
    }
  } catch (const BudgetExceeded& e) {
    r.note = budget_note(e);
  }
  r.seconds = clock.seconds();
  return r;
}

CheckRecord InstanceVerifier::smooth_enumeration(bool surface) {
  Stopwatch clock;
  CheckRecord r{surface ? "reid_surface_smoothness" : "smoothness", Method::enumeration};
  VarSet columns;
  columns.set();
  if (surface) columns.reset(index(Var::X1));
  r.witnesses["fields"] = json::array();
  try {
    for (unsigned k = 1; k <= options_.ext_degree; ++k) {
      const PointScan& s = scan(k);
      r.witnesses["fields"].push_back(scan_summary(s));
      const auto& found = surface ? s.surface_singular : s.singular;
      if (found.empty()) continue;
      const SmallField sf(s.field);
      json points = json::array();
      for (const auto& x : found) {
        if (!is_singular_point(qs_, s.field, to_point(x, sf), columns))
          throw std::logic_error("singular point failed re-verification");
        points.push_back(point_json(x, sf));
      }
      r.witnesses["singular_points"] = points;
      r.verdict = Verdict::refuted;
      break;
    }
    if (r.verdict != Verdict::refuted)
      r.note = "Jacobian has rank 4 at every enumerated point; evidence, not a certificate";
  } catch (const EnumerationTooLarge& e) {
    r.note = e.what();
  }
  r.seconds = clock.seconds();
  return r;
}

CheckRecord InstanceVerifier::smoothness() {
  switch (options_.method) {
    case Method::enumeration: return smooth_enumeration(false);
    case Method::both: return combine("smoothness", smooth_groebner(false), smooth_enumeration(false));
    default: return smooth_groebner(false);
  }
}

CheckRecord InstanceVerifier::complete_intersection() {
  Stopwatch clock;
  CheckRecord r{"complete_intersection", Method::groebner};
  try {
    const GroebnerBasis gb = buchberger({qs_.q.begin(), qs_.q.end()}, options_.budget);
    const auto found = hilbert_function(gb, options_.hilbert_degree);
    const auto expected = complete_intersection_hilbert(options_.hilbert_degree);
    r.witnesses["hilbert_function"] = found;
    r.verdict = Verdict::certified;
    for (std::size_t d = 0; d < expected.size(); ++d) {
      if (found[d] == expected[d]) continue;
      r.verdict = Verdict::refuted;
      r.witnesses["first_deviation"] = {{"degree", d}, {"expected", expected[d]}, {"found", found[d]}};
      r.note = "the four quadrics do not form a regular sequence";
      break;
    }
  } catch (const BudgetExceeded& e) {
    r.note = budget_note(e);
  }
  r.seconds = clock.seconds();
  return r;
}

std::vector<CheckRecord> InstanceVerifier::reid_surface() {
  CheckRecord stability = check_eigenspace(restrict_system(qs_, var_set({Var::X1})));
  stability.name = "reid_surface_stability";
  CheckRecord smooth;
  switch (options_.method) {
    case Method::enumeration: smooth = smooth_enumeration(true); break;
    case Method::both:
      smooth = combine("reid_surface_smoothness", smooth_groebner(true), smooth_enumeration(true));
      break;
    default: smooth = smooth_groebner(true);
  }
  return {std::move(stability), std::move(smooth)};
}

std::vector<CheckRecord> InstanceVerifier::run(const std::vector<std::string>& checks) {
  static const std::vector<std::string> kOrder = {"eigen", "free", "smooth", "hilbert", "surface"};
  for (const auto& c : checks)
    if (std::find(kOrder.begin(), kOrder.end(), c) == kOrder.end())
      throw std::invalid_argument("unknown check '" + c + "'");
  std::vector<CheckRecord> out;
  for (const auto& name : kOrder) {
    if (std::find(checks.begin(), checks.end(), name) == checks.end()) continue;
    if (name == "eigen") out.push_back(eigenspace());
    else if (name == "free") out.push_back(free_action());
    else if (name == "smooth") out.push_back(smoothness());
    else if (name == "hilbert") out.push_back(complete_intersection());
    else
      for (auto& r : reid_surface()) out.push_back(std::move(r));
  }
  return out;
}

CheckRecord check_free_action(const Instance& inst, const CheckOptions& options) {
  return InstanceVerifier(inst, options).free_action();
}

CheckRecord check_smooth(const Instance& inst, const CheckOptions& options) {
  return InstanceVerifier(inst, options).smoothness();
}

CheckRecord check_complete_intersection(const Instance& inst, const CheckOptions& options) {
  return InstanceVerifier(inst, options).complete_intersection();
}

std::vector<CheckRecord> reid_surface(const Instance& inst, const CheckOptions& options) {
  return InstanceVerifier(inst, options).reid_surface();
}

}  // namespace quatcy
