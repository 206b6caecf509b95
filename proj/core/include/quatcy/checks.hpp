// Per-instance verification of the eigenspace law, free action, smoothness,
// the complete-intersection Hilbert function and the X1 = 0 section.
#ifndef QUATCY_CHECKS_HPP
#define QUATCY_CHECKS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatcy/ideal.hpp"
#include "quatcy/instance.hpp"
#include "quatcy/points.hpp"

namespace quatcy {

enum class Verdict { certified, refuted, inconclusive };
enum class Method { symbolic, groebner, enumeration, both };

std::string_view to_string(Verdict v);
std::string_view to_string(Method m);
Method parse_method(std::string_view s);

struct CheckRecord {
  CheckRecord() = default;
  CheckRecord(std::string name, Method method) : name(std::move(name)), method(method) {}

  std::string name;
  Method method = Method::symbolic;
  Verdict verdict = Verdict::inconclusive;
  nlohmann::json witnesses = nlohmann::json::object();
  std::string note;
  double seconds = 0;
  std::vector<CheckRecord> parts;  // one per method when method == both

  nlohmann::json to_json(bool timings = true) const;
};

struct CheckOptions {
  Method method = Method::groebner;
  unsigned ext_degree = 1;
  GroebnerBudget budget;
  ScanOptions scan;
  unsigned hilbert_degree = 8;
  /// Largest field searched for witness points when a certificate fails.
  std::uint64_t witness_field_size = SmallField::kMaxSize;
};

/// First h with h.f != chi(h) f, if any.
std::optional<GroupElement> eigen_law_violation(const Poly& f, Character chi);

/// Exact re-checks of reported witnesses, all by direct evaluation. The
/// quadrics are lifted into the point's field when needed.
bool is_fixed_point(const QuadricSystem& qs, const FieldPtr& field, const Point& x, GroupElement g);
bool is_singular_point(const QuadricSystem& qs, const FieldPtr& field, const Point& x,
                       const VarSet& columns);

/// The binomial form of (1+t)^4/(1-t)^4 through degree `cap`.
std::vector<std::uint64_t> complete_intersection_hilbert(unsigned cap);

/// Runs the checks for one instance, sharing point scans between them.
class InstanceVerifier {
 public:
  InstanceVerifier(Instance inst, CheckOptions options = {});

  const Instance& instance() const { return inst_; }
  const QuadricSystem& quadrics() const { return qs_; }

  CheckRecord eigenspace();
  CheckRecord free_action();
  CheckRecord smoothness();
  CheckRecord complete_intersection();
  /// Stability of the X1 = 0 section, then its smoothness.
  std::vector<CheckRecord> reid_surface();

  /// Check names: eigen, free, smooth, hilbert, surface.
  std::vector<CheckRecord> run(const std::vector<std::string>& checks);

  /// Point scan over F_{p^k}, cached.
  const PointScan& scan(unsigned ext_degree);

 private:
  CheckRecord free_action_groebner();
  CheckRecord free_action_enumeration();
  CheckRecord smooth_groebner(bool surface);
  CheckRecord smooth_enumeration(bool surface);
  CheckRecord combine(std::string name, CheckRecord g, CheckRecord e) const;
  std::optional<nlohmann::json> search_linear_space_witness(bool plus);
  std::optional<nlohmann::json> search_singular_witness(bool surface);

  Instance inst_;
  CheckOptions options_;
  QuadricSystem qs_;
  std::map<unsigned, PointScan> scans_;
};

CheckRecord check_eigenspace(const Instance& inst);
/// Eigenspace law for a bare polynomial system indexed by character.
CheckRecord check_eigenspace(const QuadricSystem& qs);
CheckRecord check_free_action(const Instance& inst, const CheckOptions& options = {});
CheckRecord check_smooth(const Instance& inst, const CheckOptions& options = {});
CheckRecord check_complete_intersection(const Instance& inst, const CheckOptions& options = {});
std::vector<CheckRecord> reid_surface(const Instance& inst, const CheckOptions& options = {});

struct VerificationReport {
  std::vector<CheckRecord> records;
  Verdict overall() const;
};

}  // namespace quatcy

#endif  // QUATCY_CHECKS_HPP
