#include "quatcy/points.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

namespace quatcy {

unsigned worker_threads(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("QUATCY_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CompiledPoly::CompiledPoly(const Poly& f, const SmallField& k) {
  const Field& source = *f.field();
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != 2) quadratic_ = false;
  }
  for (const auto& t : f.terms()) {
    const std::uint8_t c = k.embed(source, t.coeff);
    if (quadratic_) {
      std::uint8_t vars[2];
      int n = 0;
      for (std::size_t v = 0; v < kNumVars; ++v)
        for (unsigned e = 0; e < t.mono.exponent(v); ++e) vars[n++] = static_cast<std::uint8_t>(v);
      quads_.push_back({vars[0], vars[1], c});
    } else {
      GeneralTerm g{c, {}};
      for (std::size_t v = 0; v < kNumVars; ++v)
        if (t.mono.exponent(v))
          g.factors.push_back({static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(t.mono.exponent(v))});
      general_.push_back(std::move(g));
    }
  }
}

std::uint8_t CompiledPoly::eval(const SmallPoint& x, const SmallField& k) const {
  std::uint8_t sum = 0;
  if (quadratic_) {
    for (const auto& q : quads_) sum = k.add(sum, k.mul(q.c, k.mul(x[q.a], x[q.b])));
    return sum;
  }
  for (const auto& t : general_) {
    std::uint8_t term = t.c;
    for (const auto& f : t.factors)
      for (unsigned e = 0; e < f.exp; ++e) term = k.mul(term, x[f.var]);
    sum = k.add(sum, term);
  }
  return sum;
}

SmallPoint normalize(SmallPoint x, const SmallField& k) {
  std::size_t lead = 0;
  while (lead < kNumVars && x[lead] == 0) ++lead;
  if (lead == kNumVars) return x;
  const std::uint8_t inv = k.inv(x[lead]);
  for (std::size_t v = lead; v < kNumVars; ++v) x[v] = k.mul(x[v], inv);
  return x;
}

Point to_point(const SmallPoint& x, const SmallField& k) {
  Point p;
  for (std::size_t v = 0; v < kNumVars; ++v) p[v] = k.to(x[v]);
  return p;
}

std::vector<std::string> format_point(const SmallPoint& x, const SmallField& k) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < kNumVars; ++v) out.push_back(k.field()->format(k.to(x[v])));
  return out;
}

std::vector<SmallPoint> projective_zeros(const std::vector<Poly>& polys, const SmallField& k,
                                         const VarSet& support, unsigned threads) {
  std::vector<CompiledPoly> compiled;
  for (const auto& f : polys) compiled.emplace_back(f, k);
  std::vector<std::uint8_t> coords;
  for (std::size_t v = 0; v < kNumVars; ++v)
    if (support[v]) coords.push_back(static_cast<std::uint8_t>(v));
  const unsigned q = k.size();
  const std::size_t n = coords.size();

  // A chunk fixes the lead position and the values of all but the last
  // `inner` free coordinates.
  struct Chunk {
    std::size_t lead;
    std::uint64_t high;
  };
  constexpr std::size_t kInner = 4;
  std::vector<Chunk> chunks;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t free = n - 1 - lead;
    const std::size_t outer = free > kInner ? free - kInner : 0;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < outer; ++i) count *= q;
    for (std::uint64_t h = 0; h < count; ++h) chunks.push_back({lead, h});
  }

  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  std::vector<SmallPoint> result;
  auto worker = [&] {
    std::vector<SmallPoint> local;
    while (true) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks.size()) break;
      const Chunk chunk = chunks[c];
      const std::size_t free = n - 1 - chunk.lead;
      const std::size_t inner = std::min(free, kInner);
      SmallPoint x{};
      x[coords[chunk.lead]] = 1;
      std::uint64_t h = chunk.high;
      // Outer free coordinates come first (after the lead), low digit first.
      for (std::size_t i = chunk.lead + 1; i < n - inner; ++i) {
        x[coords[i]] = static_cast<std::uint8_t>(h % q);
        h /= q;
      }
      const std::size_t first_inner = n - inner;
      while (true) {
        bool on = true;
        for (const auto& f : compiled) {
          if (f.eval(x, k) != 0) {
            on = false;
            break;
          }
        }
        if (on) local.push_back(x);
        // Odometer over the inner coordinates; stops after wrapping to zero.
        std::size_t i = n;
        while (i > first_inner) {
          --i;
          if (++x[coords[i]] < q) break;
          x[coords[i]] = 0;
          if (i == first_inner) i = 0;
        }
        if (inner == 0 || i < first_inner) break;
      }
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    result.insert(result.end(), local.begin(), local.end());
  };
  const unsigned nthreads = std::min<unsigned>(worker_threads(threads), static_cast<unsigned>(chunks.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(result.begin(), result.end());
  return result;
}

FieldPtr enumeration_field(const Instance& inst, unsigned ext_degree, std::uint64_t max_field_size) {
  const Field& base = *inst.field;
  if (!base.is_finite()) throw EnumerationTooLarge("enumeration needs a finite field");
  if (ext_degree == 0) throw EnumerationTooLarge("extension degree must be >= 1");
  if (ext_degree > 1 && base.kind() != FieldKind::prime)
    throw EnumerationTooLarge("extensions are only enumerated over prime instance fields");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < ext_degree; ++i) {
    q *= base.cardinality();
    if (q > max_field_size || q > SmallField::kMaxSize)
      throw EnumerationTooLarge("field of size " + std::to_string(q) + "+ exceeds the enumeration cap " +
                                std::to_string(std::min<std::uint64_t>(max_field_size, SmallField::kMaxSize)));
  }
  if (ext_degree == 1) return inst.field;
  return make_field(FieldSpec::extension(base.characteristic(), ext_degree));
}

namespace {

struct Jacobian {
  std::array<std::array<std::unique_ptr<CompiledPoly>, kNumVars>, 4> entries;

  Jacobian(const QuadricSystem& qs, const SmallField& k) {
    const auto j = jacobian(qs);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < kNumVars; ++c) entries[r][c] = std::make_unique<CompiledPoly>(j[r][c], k);
  }

  int rank(const SmallField& k, const SmallPoint& x, const VarSet& columns) const {
    std::array<std::array<std::uint8_t, kNumVars>, 4> m{};
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < kNumVars; ++c)
      if (columns[c]) cols.push_back(c);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = entries[r][cols[c]]->eval(x, k);
    int rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < 4; ++c) {
      std::size_t pivot = rank;
      while (pivot < 4 && m[pivot][c] == 0) ++pivot;
      if (pivot == 4) continue;
      std::swap(m[pivot], m[rank]);
      const std::uint8_t inv = k.inv(m[rank][c]);
      for (std::size_t r = rank + 1; r < 4; ++r) {
        if (m[r][c] == 0) continue;
        const std::uint8_t f = k.mul(m[r][c], inv);
        for (std::size_t cc = c; cc < cols.size(); ++cc) m[r][cc] = k.sub(m[r][cc], k.mul(f, m[rank][cc]));
      }
      ++rank;
    }
    return rank;
  }
};

using SmallMatrix = std::array<std::array<std::uint8_t, kNumVars>, kNumVars>;

SmallPoint apply(const SmallMatrix& m, const SmallPoint& x, const SmallField& k) {
  SmallPoint y{};
  for (std::size_t r = 0; r < kNumVars; ++r) {
    std::uint8_t s = 0;
    for (std::size_t c = 0; c < kNumVars; ++c)
      if (m[r][c] && x[c]) s = k.add(s, k.mul(m[r][c], x[c]));
    y[r] = s;
  }
  return y;
}

}  // namespace

int jacobian_rank(const QuadricSystem& qs, const SmallField& k, const SmallPoint& x, const VarSet& columns) {
  return Jacobian(qs, k).rank(k, x, columns);
}

PointScan scan_points(const Instance& inst, unsigned ext_degree, const ScanOptions& options) {
  PointScan scan;
  scan.field = enumeration_field(inst, ext_degree, options.max_field_size);
  scan.ext_degree = ext_degree;
  const SmallField k(scan.field);
  const QuadricSystem qs = build_quadrics(inst);
  VarSet all;
  all.set();
  scan.points = projective_zeros({qs.q.begin(), qs.q.end()}, k, all, options.threads);

  std::array<SmallMatrix, 8> reps{};
  for (std::size_t g = 0; g < 8; ++g) {
    const RepMatrix m = rep_matrix(kGroupElements[g], scan.field);
    for (std::size_t r = 0; r < kNumVars; ++r)
      for (std::size_t c = 0; c < kNumVars; ++c) reps[g][r][c] = k.from(m.entries[r][c]);
  }
  const Jacobian jac(qs, k);
  VarSet surface_columns = all;
  surface_columns.reset(index(Var::X1));

  std::map<unsigned, std::uint64_t> points_by_orbit_size;
  for (const auto& x : scan.points) {
    std::set<SmallPoint> orbit;
    bool fixed = false;
    for (std::size_t g = 0; g < 8; ++g) {
      const SmallPoint y = normalize(apply(reps[g], x, k), k);
      orbit.insert(y);
      if (g != 0 && y == x) {
        if (!fixed) ++scan.fixed_point_count;
        fixed = true;
        if (scan.fixed.size() < kMaxListedWitnesses) scan.fixed.push_back({x, kGroupElements[g]});
      }
    }
    ++points_by_orbit_size[static_cast<unsigned>(orbit.size())];
    if (jac.rank(k, x, all) < 4) {
      ++scan.singular_count;
      if (scan.singular.size() < kMaxListedWitnesses) scan.singular.push_back(x);
    }
    if (x[index(Var::X1)] == 0) {
      ++scan.surface_point_count;
      if (jac.rank(k, x, surface_columns) < 4) {
        ++scan.surface_singular_count;
        if (scan.surface_singular.size() < kMaxListedWitnesses) scan.surface_singular.push_back(x);
      }
    }
  }
  for (const auto& [size, count] : points_by_orbit_size) scan.orbit_histogram[size] = count / size;
  return scan;
}

}  // namespace quatcy
