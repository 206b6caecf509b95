// Exhaustive point enumeration over small finite fields.
#ifndef QUATCY_POINTS_HPP
#define QUATCY_POINTS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "quatcy/instance.hpp"
#include "quatcy/small_field.hpp"

namespace quatcy {

class EnumerationTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point of P^7 over a SmallField, normalized so that its first nonzero
/// coordinate is 1.
using SmallPoint = std::array<std::uint8_t, kNumVars>;

/// Worker count: `requested` if nonzero, else $QUATCY_THREADS, else the
/// hardware concurrency.
unsigned worker_threads(unsigned requested = 0);

/// Polynomial prepared for table evaluation.
class CompiledPoly {
 public:
  CompiledPoly(const Poly& f, const SmallField& k);
  std::uint8_t eval(const SmallPoint& x, const SmallField& k) const;

 private:
  struct Quad {
    std::uint8_t a, b, c;
  };
  struct Factor {
    std::uint8_t var, exp;
  };
  struct GeneralTerm {
    std::uint8_t c;
    std::vector<Factor> factors;
  };
  bool quadratic_ = true;
  std::vector<Quad> quads_;
  std::vector<GeneralTerm> general_;
};

/// All projective points at which every polynomial vanishes, among points
/// whose coordinates outside `support` are zero. Sorted.
std::vector<SmallPoint> projective_zeros(const std::vector<Poly>& polys, const SmallField& k,
                                         const VarSet& support, unsigned threads = 0);

SmallPoint normalize(SmallPoint x, const SmallField& k);
Point to_point(const SmallPoint& x, const SmallField& k);
std::vector<std::string> format_point(const SmallPoint& x, const SmallField& k);

struct ScanOptions {
  std::uint64_t max_field_size = 17;
  unsigned threads = 0;
};

/// Field F_{p^k} used to enumerate an instance over; throws
/// EnumerationTooLarge when its size exceeds `max_field_size`.
FieldPtr enumeration_field(const Instance& inst, unsigned ext_degree, std::uint64_t max_field_size);

struct FixedPointWitness {
  SmallPoint point;
  GroupElement element;
};

/// Everything the checks need from one pass over X(F_q).
struct PointScan {
  FieldPtr field;
  unsigned ext_degree = 1;
  std::vector<SmallPoint> points;
  /// orbit size -> number of H-orbits of that size
  std::map<unsigned, std::uint64_t> orbit_histogram;
  std::uint64_t fixed_point_count = 0;
  std::vector<FixedPointWitness> fixed;  // first few, in point order
  std::uint64_t singular_count = 0;
  std::vector<SmallPoint> singular;  // first few
  std::uint64_t surface_point_count = 0;  // points with X1 = 0
  std::uint64_t surface_singular_count = 0;
  std::vector<SmallPoint> surface_singular;
};

inline constexpr std::size_t kMaxListedWitnesses = 8;

PointScan scan_points(const Instance& inst, unsigned ext_degree, const ScanOptions& options = {});

/// Rank of the 4 x 8 Jacobian at x (columns restricted to `columns`).
int jacobian_rank(const QuadricSystem& qs, const SmallField& k, const SmallPoint& x,
                  const VarSet& columns);

}  // namespace quatcy

#endif  // QUATCY_POINTS_HPP
