#include "quatcy/ideal.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace quatcy {

namespace {

using u64 = std::uint64_t;

// Coefficients of F_p with p < 2^31 as machine words; accumulators stay
// unreduced until they approach 2^62.
struct PrimeRing {
  using value_type = std::uint32_t;
  using acc_type = u64;

  u64 p;

  value_type one() const { return 1; }
  value_type from(const Element& e) const { return static_cast<value_type>(std::get<u64>(e)); }
  Element to(value_type v) const { return u64{v}; }
  value_type neg(value_type a) const { return a == 0 ? 0 : static_cast<value_type>(p - a); }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>(u64{a} * b % p); }
  value_type inv(value_type a) const {
    u64 r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(r);
  }
  bool is_zero(value_type a) const { return a == 0; }
  acc_type acc_zero() const { return 0; }
  void fma(acc_type& acc, value_type c, value_type a) const {
    acc += u64{c} * a;
    if (acc >= (u64{1} << 62)) acc %= p;
  }
  value_type take(acc_type& acc) const {
    const auto v = static_cast<value_type>(acc % p);
    acc = 0;
    return v;
  }
};

// Any other field, through the Field interface.
struct GenericRing {
  using value_type = Element;
  using acc_type = Element;

  const Field* field;

  value_type one() const { return field->one(); }
  value_type from(const Element& e) const { return e; }
  Element to(const value_type& v) const { return v; }
  value_type neg(const value_type& a) const { return field->neg(a); }
  value_type mul(const value_type& a, const value_type& b) const { return field->mul(a, b); }
  value_type inv(const value_type& a) const { return field->inv(a); }
  bool is_zero(const value_type& a) const { return field->is_zero(a); }
  acc_type acc_zero() const { return field->zero(); }
  void fma(acc_type& acc, const value_type& c, const value_type& a) const {
    acc = field->add(acc, field->mul(c, a));
  }
  value_type take(acc_type& acc) const {
    value_type v = std::move(acc);
    acc = field->zero();
    return v;
  }
};

constexpr std::uint32_t kInputGenerator = 0xFFFFFFFFu;
constexpr std::size_t kMaxDenseMonomials = std::size_t{1} << 24;

struct QueueEntry {
  Monomial lcm;
  std::uint32_t i;
  std::uint32_t j;  // kInputGenerator: entry i of the input list
};

struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    const auto c = grevlex_compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

template <class Ring>
class Engine {
 public:
  using C = typename Ring::value_type;
  using A = typename Ring::acc_type;

  struct KPoly {
    std::vector<Monomial> mono;  // decreasing grevlex
    std::vector<C> coef;         // monic: coef[0] == 1
    std::size_t size() const { return mono.size(); }
    bool empty() const { return mono.empty(); }
  };

  Engine(Ring ring, GroebnerBudget budget) : ring_(std::move(ring)), budget_(budget) {}

  KPoly import(const Poly& f) const {
    KPoly k;
    for (const auto& t : f.terms()) {
      k.mono.push_back(t.mono);
      k.coef.push_back(ring_.from(t.coeff));
    }
    return k;
  }

  Poly export_poly(const FieldPtr& field, const KPoly& k) const {
    std::vector<Term> terms;
    terms.reserve(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) terms.push_back({k.mono[i], ring_.to(k.coef[i])});
    return Poly(field, std::move(terms));
  }

  /// Registers a known ideal element as a reducer (no pairs are formed).
  void add_reducer(KPoly f) {
    make_monic(f);
    basis_.push_back(std::move(f));
    active_.push_back(1);
  }

  /// Full normal form of f against the registered reducers.
  KPoly normal_form(const KPoly& f, bool normalize) {
    if (f.empty()) return {};
    ensure_degree(f.mono.front().degree());
    std::size_t top = 0;
    for (std::size_t t = 0; t < f.size(); ++t) {
      const std::size_t r = MonomialIndex::rank(f.mono[t]);
      ring_.fma(acc_[r], f.coef[t], one());
      mark(r);
      top = std::max(top, r);
    }
    return reduce(top, normalize);
  }

  std::vector<KPoly> run(std::vector<KPoly> inputs) {
    std::set<QueueEntry, QueueOrder> queue;
    for (std::uint32_t g = 0; g < inputs.size(); ++g) {
      if (inputs[g].empty()) continue;
      queue.insert({inputs[g].mono.front(), g, kInputGenerator});
    }
    while (!queue.empty()) {
      const QueueEntry e = *queue.begin();
      queue.erase(queue.begin());
      stats_.max_degree = std::max(stats_.max_degree, e.lcm.degree());
      KPoly h;
      if (e.j == kInputGenerator) {
        h = normal_form(inputs[e.i], true);
      } else {
        if (++stats_.pairs_reduced > budget_.max_pair_reductions)
          throw BudgetExceeded("pair-reduction budget exceeded", stats_);
        h = s_poly_normal_form(e.i, e.j, e.lcm);
      }
      if (h.empty()) {
        if (e.j != kInputGenerator) ++stats_.zero_reductions;
        continue;
      }
      stats_.total_terms += h.size();
      if (stats_.total_terms > budget_.max_total_terms)
        throw BudgetExceeded("term budget exceeded", stats_);
      update(std::move(h), queue);
      if (basis_.back().mono.front().is_one()) break;  // unit ideal
    }
    return interreduce();
  }

  /// Buchberger's criterion over all pairs of `gens`, independently of run().
  bool all_s_pairs_vanish(const std::vector<KPoly>& gens) {
    for (const auto& g : gens) add_reducer(g);
    for (std::uint32_t i = 0; i < basis_.size(); ++i)
      for (std::uint32_t j = i + 1; j < basis_.size(); ++j) {
        const Monomial l = basis_[i].mono.front().lcm(basis_[j].mono.front());
        if (!s_poly_normal_form(i, j, l).empty()) return false;
      }
    return true;
  }

  const GroebnerStats& stats() const { return stats_; }

 private:
  C one() const { return ring_.one(); }

  void make_monic(KPoly& f) const {
    if (f.empty()) return;
    const C lead_inv = ring_.inv(f.coef[0]);
    for (auto& c : f.coef) c = ring_.mul(c, lead_inv);
  }

  void ensure_degree(unsigned degree) {
    if (index_.size() >= MonomialIndex::count_up_to(degree)) return;
    if (MonomialIndex::count_up_to(degree) > kMaxDenseMonomials)
      throw BudgetExceeded("degree " + std::to_string(degree) + " too high for dense reduction", stats_);
    index_.reserve_degree(degree);
    const std::size_t n = index_.size();
    acc_.resize(n, ring_.acc_zero());
    bits_.resize((n + 63) / 64, 0);
    reducer_.resize(n, -1);
    checked_.resize(n, 0);
  }

  void mark(std::size_t r) { bits_[r >> 6] |= u64{1} << (r & 63); }

  // Highest marked rank <= from, or -1.
  long next_marked(long from) const {
    if (from < 0) return -1;
    long w = from >> 6;
    u64 word = bits_[w] & (from % 64 == 63 ? ~u64{0} : ((u64{1} << ((from & 63) + 1)) - 1));
    while (true) {
      if (word) return (w << 6) + 63 - std::countl_zero(word);
      if (--w < 0) return -1;
      word = bits_[w];
    }
  }

  int find_reducer(std::size_t r, const Monomial& m) {
    if (reducer_[r] >= 0) return reducer_[r];
    for (std::size_t g = checked_[r]; g < basis_.size(); ++g) {
      if (active_[g] && basis_[g].mono.front().divides(m)) {
        reducer_[r] = static_cast<int>(g);
        return reducer_[r];
      }
    }
    checked_[r] = static_cast<std::uint32_t>(basis_.size());
    return -1;
  }

  KPoly reduce(std::size_t top, bool normalize) {
    KPoly out;
    for (long r = next_marked(static_cast<long>(top)); r >= 0; r = next_marked(r - 1)) {
      bits_[r >> 6] &= ~(u64{1} << (r & 63));
      C c = ring_.take(acc_[r]);
      if (ring_.is_zero(c)) continue;
      const Monomial& m = index_.unrank(static_cast<std::size_t>(r));
      const int g = find_reducer(static_cast<std::size_t>(r), m);
      if (g < 0) {
        out.mono.push_back(m);
        out.coef.push_back(std::move(c));
        continue;
      }
      const KPoly& red = basis_[static_cast<std::size_t>(g)];
      const Monomial q = m / red.mono.front();
      const C minus_c = ring_.neg(c);
      for (std::size_t t = 1; t < red.size(); ++t) {
        const std::size_t rr = MonomialIndex::rank(red.mono[t] * q);
        ring_.fma(acc_[rr], minus_c, red.coef[t]);
        mark(rr);
      }
    }
    if (normalize) make_monic(out);
    return out;
  }

  KPoly s_poly_normal_form(std::uint32_t i, std::uint32_t j, const Monomial& lcm) {
    ensure_degree(lcm.degree());
    const KPoly& f = basis_[i];
    const KPoly& g = basis_[j];
    const Monomial qf = lcm / f.mono.front();
    const Monomial qg = lcm / g.mono.front();
    const C minus_one = ring_.neg(one());
    std::size_t top = 0;
    for (std::size_t t = 1; t < f.size(); ++t) {
      const std::size_t r = MonomialIndex::rank(f.mono[t] * qf);
      ring_.fma(acc_[r], one(), f.coef[t]);
      mark(r);
      top = std::max(top, r);
    }
    for (std::size_t t = 1; t < g.size(); ++t) {
      const std::size_t r = MonomialIndex::rank(g.mono[t] * qg);
      ring_.fma(acc_[r], minus_one, g.coef[t]);
      mark(r);
      top = std::max(top, r);
    }
    if (f.size() == 1 && g.size() == 1) return {};
    return reduce(top, true);
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(KPoly h, std::set<QueueEntry, QueueOrder>& queue) {
    const auto hi = static_cast<std::uint32_t>(basis_.size());
    const Monomial lh = h.mono.front();
    basis_.push_back(std::move(h));
    active_.push_back(1);
    ++stats_.elements_added;

    struct Candidate {
      std::uint32_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> cands;
    for (std::uint32_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = basis_[g].mono.front();
      cands.push_back({g, lg.lcm(lh), lg.coprime(lh)});
    }
    stats_.pairs_created += cands.size();
    std::vector<char> kept(cands.size(), 0);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = cands[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < cands.size() && keep; ++b) {
          if (b == a || (b < a && !kept[b])) continue;
          if (cands[b].lcm.divides(cands[a].lcm)) keep = false;
        }
      }
      kept[a] = keep;
      if (!keep) ++stats_.chain_criterion;
    }

    for (auto it = queue.begin(); it != queue.end();) {
      if (it->j != kInputGenerator && lh.divides(it->lcm)) {
        const Monomial& li = basis_[it->i].mono.front();
        const Monomial& lj = basis_[it->j].mono.front();
        if (li.lcm(lh) != it->lcm && lj.lcm(lh) != it->lcm) {
          it = queue.erase(it);
          ++stats_.chain_criterion;
          continue;
        }
      }
      ++it;
    }

    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!kept[a]) continue;
      if (cands[a].coprime) {
        ++stats_.product_criterion;
        continue;
      }
      queue.insert({cands[a].lcm, cands[a].g, hi});
    }

    for (std::uint32_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(basis_[g].mono.front())) active_[g] = 0;
  }

  std::vector<KPoly> interreduce() {
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t g = 0; g < basis_.size(); ++g)
      if (active_[g]) minimal.push_back(g);
    std::vector<KPoly> out;
    for (std::uint32_t g : minimal) {
      const KPoly& f = basis_[g];
      KPoly tail;
      tail.mono.assign(f.mono.begin() + 1, f.mono.end());
      tail.coef.assign(f.coef.begin() + 1, f.coef.end());
      KPoly reduced_tail = tail.empty() ? KPoly{} : normal_form(tail, false);
      KPoly r;
      r.mono.push_back(f.mono.front());
      r.coef.push_back(f.coef.front());
      r.mono.insert(r.mono.end(), reduced_tail.mono.begin(), reduced_tail.mono.end());
      r.coef.insert(r.coef.end(), reduced_tail.coef.begin(), reduced_tail.coef.end());
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const KPoly& a, const KPoly& b) {
      return grevlex_compare(a.mono.front(), b.mono.front()) < 0;
    });
    return out;
  }

  Ring ring_;
  GroebnerBudget budget_;
  GroebnerStats stats_;
  MonomialIndex index_;
  std::vector<A> acc_;
  std::vector<u64> bits_;
  std::vector<int> reducer_;
  std::vector<std::uint32_t> checked_;
  std::vector<KPoly> basis_;
  std::vector<char> active_;
};

template <class Fn>
auto with_engine(const Field& field, const GroebnerBudget& budget, Fn&& fn) {
  if (field.kind() == FieldKind::prime && field.characteristic() < (u64{1} << 31))
    return fn(Engine<PrimeRing>(PrimeRing{field.characteristic()}, budget));
  return fn(Engine<GenericRing>(GenericRing{&field}, budget));
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators_) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::is_unit() const {
  return generators_.size() == 1 && generators_.front().leading_monomial().is_one();
}

GroebnerBasis buchberger(const std::vector<Poly>& generators, const GroebnerBudget& budget) {
  if (generators.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const FieldPtr field = generators.front().field();
  for (const auto& g : generators) require_same_field(*field, *g.field());
  return with_engine(*field, budget, [&](auto engine) {
    using E = decltype(engine);
    std::vector<typename E::KPoly> inputs;
    for (const auto& g : generators) inputs.push_back(engine.import(g));
    auto basis = engine.run(std::move(inputs));
    std::vector<Poly> out;
    for (const auto& b : basis) out.push_back(engine.export_poly(field, b));
    if (out.empty()) out.push_back(Poly(field));
    return GroebnerBasis(field, std::move(out), engine.stats());
  });
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  require_same_field(*f.field(), *gb.field());
  if (f.is_zero()) return f;
  return with_engine(*gb.field(), GroebnerBudget{}, [&](auto engine) {
    for (const auto& g : gb.generators())
      if (!g.is_zero()) engine.add_reducer(engine.import(g));
    return engine.export_poly(gb.field(), engine.normal_form(engine.import(f), false));
  });
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  require_same_field(*f.field(), *g.field());
  if (f.is_zero() || g.is_zero()) return Poly(f.field());
  const Field& k = *f.field();
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const Poly a = f.shifted(l / f.leading_monomial()).scaled(k.inv(f.leading_term().coeff));
  const Poly b = g.shifted(l / g.leading_monomial()).scaled(k.inv(g.leading_term().coeff));
  return a - b;
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& gb) {
  return with_engine(*gb.field(), GroebnerBudget{}, [&](auto engine) {
    using E = decltype(engine);
    std::vector<typename E::KPoly> gens;
    for (const auto& g : gb.generators())
      if (!g.is_zero()) gens.push_back(engine.import(g));
    return engine.all_s_pairs_vanish(gens);
  });
}

EmptinessCertificate is_projectively_empty(const GroebnerBasis& gb) {
  EmptinessCertificate cert;
  cert.witness.fill(-1);
  for (const auto& g : gb.generators()) {
    if (g.is_zero()) continue;
    const Monomial& m = g.leading_monomial();
    if (m.is_one()) {
      cert.witness.fill(0);
      break;
    }
    const int v = m.pure_power_var();
    if (v < 0) continue;
    const int n = static_cast<int>(m.degree());
    if (cert.witness[v] < 0 || n < cert.witness[v]) cert.witness[v] = n;
  }
  cert.empty = std::all_of(cert.witness.begin(), cert.witness.end(), [](int n) { return n >= 0; });
  return cert;
}

std::vector<std::uint64_t> hilbert_function(const GroebnerBasis& gb, unsigned degree_cap) {
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators())
    if (!g.is_zero()) leads.push_back(g.leading_monomial());
  MonomialIndex index;
  index.reserve_degree(degree_cap);
  std::vector<std::uint64_t> out(degree_cap + 1, 0);
  for (std::size_t r = 0; r < index.size(); ++r) {
    const Monomial& m = index.unrank(r);
    const bool standard = std::none_of(leads.begin(), leads.end(),
                                       [&](const Monomial& l) { return l.divides(m); });
    if (standard) ++out[m.degree()];
  }
  return out;
}

}  // namespace quatcy
