// Groebner bases (grevlex), normal forms and the certificates built on them.
#ifndef QUATCY_IDEAL_HPP
#define QUATCY_IDEAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "quatcy/poly.hpp"

namespace quatcy {

struct GroebnerBudget {
  std::size_t max_pair_reductions = 200000;
  std::size_t max_total_terms = 5000000;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t elements_added = 0;
  std::size_t total_terms = 0;
  unsigned max_degree = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, GroebnerStats stats)
      : std::runtime_error(what), stats_(stats) {}
  const GroebnerStats& stats() const { return stats_; }

 private:
  GroebnerStats stats_;
};

/// Reduced, monic Groebner basis under grevlex, sorted by increasing leading
/// monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(FieldPtr field, std::vector<Poly> generators, GroebnerStats stats)
      : field_(std::move(field)), generators_(std::move(generators)), stats_(stats) {}

  const FieldPtr& field() const { return field_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const GroebnerStats& stats() const { return stats_; }
  std::size_t size() const { return generators_.size(); }
  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const;

 private:
  FieldPtr field_;
  std::vector<Poly> generators_;
  GroebnerStats stats_;
};

/// Buchberger's algorithm: normal selection strategy, Gebauer-Moeller
/// criteria, dense per-degree reduction. Throws BudgetExceeded when either
/// budget runs out and std::invalid_argument on empty input.
GroebnerBasis buchberger(const std::vector<Poly>& generators, const GroebnerBudget& budget = {});

/// Fully reduced remainder of f modulo gb; zero iff f lies in the ideal.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

Poly s_polynomial(const Poly& f, const Poly& g);

/// Independent pass over every pair of basis elements: true iff each
/// S-polynomial reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& gb);

struct EmptinessCertificate {
  bool empty = false;
  /// witness[v] = n such that x_v^n is a leading monomial, or -1 if none.
  std::array<int, kNumVars> witness{};
};

/// Projective Nullstellensatz via the staircase: for homogeneous ideals the
/// zero set in P^7 over the algebraic closure is empty iff the leading-term
/// ideal contains a pure power of every variable.
EmptinessCertificate is_projectively_empty(const GroebnerBasis& gb);

/// dim_k (R/I)_d for d = 0..degree_cap, counted from the leading-term
/// staircase.
std::vector<std::uint64_t> hilbert_function(const GroebnerBasis& gb, unsigned degree_cap);

}  // namespace quatcy

#endif  // QUATCY_IDEAL_HPP
