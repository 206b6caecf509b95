#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "quatcy/checks.hpp"
#include "quatcy/files.hpp"
#include "quatcy/invariants.hpp"
#include "quatcy/points.hpp"
#include "quatcy/quaternion.hpp"

namespace quatcy::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

FieldPtr instance_field(const std::string& text) {
  const FieldPtr field = make_field(parse_field_spec(text));
  if (!field->has_sqrt_minus_one()) throw NoSquareRootOfMinusOne(field->spec().name());
  return field;
}

Instance load_instance(const std::string& path, bool allow_degenerate, std::string* bytes) {
  std::string text = read_file(path);
  Instance inst = parse_instance(text, allow_degenerate);
  if (!inst.field->has_sqrt_minus_one()) throw NoSquareRootOfMinusOne(inst.field->spec().name());
  if (bytes) *bytes = std::move(text);
  return inst;
}

struct GenerateArgs {
  std::string field;
  std::uint64_t seed = 1;
  std::string out;
  std::vector<std::string> zero;
  bool allow_degenerate = false;
};

int generate(const GenerateArgs& a, std::ostream& out) {
  Instance inst = random_instance(a.seed, instance_field(a.field)->spec());
  for (const auto& z : a.zero) {
    const auto parts = split(z, ':');
    if (parts.size() != 2) throw UsageError("--zero expects CHAR:N such as 1:5 or a:3");
    const Character chi = parse_character(parts[0]);
    std::size_t n = 0;
    try {
      n = std::stoul(parts[1]);
    } catch (const std::exception&) {
    }
    if (n < 1 || n > kParamsPerQuadric) throw UsageError("--zero index must be 1..5");
    inst.set_param(chi, n, inst.field->zero());
  }
  if (inst.is_degenerate() && !a.allow_degenerate)
    throw UsageError("--zero produces a degenerate instance; pass --allow-degenerate");
  const std::string text = serialize_instance(inst);
  if (a.out.empty()) out << text;
  else write_file(a.out, text);
  out << sha256_hex(text) << "\n";
  return kCertified;
}

struct VerifyArgs {
  std::string instance;
  std::string checks = "eigen,free,smooth,hilbert,surface";
  std::string method = "groebner";
  unsigned ext_degree = 1;
  std::string out;
  std::size_t max_pairs = GroebnerBudget{}.max_pair_reductions;
  std::size_t max_terms = GroebnerBudget{}.max_total_terms;
  std::uint64_t max_field_size = ScanOptions{}.max_field_size;
  bool allow_degenerate = false;
  bool no_timings = false;
};

void print_record(const CheckRecord& r, bool timings, std::ostream& out) {
  out << "  " << std::left << std::setw(26) << r.name << std::setw(14) << to_string(r.verdict)
      << std::setw(12) << to_string(r.method);
  if (timings) out << std::fixed << std::setprecision(2) << r.seconds << "s";
  out << "\n";
  if (!r.note.empty()) out << "      " << r.note << "\n";
  if (r.verdict == Verdict::refuted) out << "      witnesses: " << r.witnesses.dump() << "\n";
}

int verify(const VerifyArgs& a, std::ostream& out) {
  if (a.ext_degree == 0) throw UsageError("--ext-degree must be >= 1");
  std::string bytes;
  const Instance inst = load_instance(a.instance, a.allow_degenerate, &bytes);
  CheckOptions options;
  options.method = parse_method(a.method);
  if (options.method == Method::symbolic) throw UsageError("--method must be groebner, enumeration or both");
  options.ext_degree = a.ext_degree;
  options.budget = {a.max_pairs, a.max_terms};
  options.scan.max_field_size = a.max_field_size;
  InstanceVerifier verifier(inst, options);
  std::vector<CheckRecord> records;
  try {
    records = verifier.run(split(a.checks, ','));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool timings = !a.no_timings;
  const json report = build_report(bytes, records, timings);
  if (!a.out.empty()) write_file(a.out, canonical_dump(report));

  out << "instance " << report["instance_digest"].get<std::string>() << " over "
      << inst.field->spec().name() << " (seed " << inst.seed << ")\n";
  for (const auto& r : records) print_record(r, timings, out);
  const Verdict overall = VerificationReport{records}.overall();
  out << "overall: " << to_string(overall) << "\n";
  switch (overall) {
    case Verdict::certified: return kCertified;
    case Verdict::refuted: return kRefuted;
    case Verdict::inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

struct CountArgs {
  std::string instance;
  unsigned ext_degree = 1;
  std::string report;
  std::uint64_t max_field_size = ScanOptions{}.max_field_size;
  bool allow_degenerate = false;
};

int count(const CountArgs& a, std::ostream& out) {
  if (a.ext_degree == 0) throw UsageError("--ext-degree must be >= 1");
  std::string bytes;
  const Instance inst = load_instance(a.instance, a.allow_degenerate, &bytes);
  ScanOptions options;
  options.max_field_size = a.max_field_size;
  // Check every field size up front so that nothing is printed on failure.
  for (unsigned k = 1; k <= a.ext_degree; ++k) enumeration_field(inst, k, options.max_field_size);
  json counts = json::array();
  for (unsigned k = 1; k <= a.ext_degree; ++k) {
    const PointScan s = scan_points(inst, k, options);
    json orbits = json::object();
    std::ostringstream hist;
    for (const auto& [size, n] : s.orbit_histogram) {
      orbits[std::to_string(size)] = n;
      hist << (hist.tellp() ? ", " : "") << size << ": " << n;
    }
    out << s.field->spec().name() << ": " << s.points.size() << " points, orbits {" << hist.str() << "}, "
        << (s.points.size() % 8 == 0 ? "divisible by 8" : "NOT divisible by 8") << "\n";
    counts.push_back({{"field", s.field->spec().name()},
                      {"ext_degree", k},
                      {"points", s.points.size()},
                      {"orbits", orbits}});
  }
  if (!a.report.empty()) {
    json report = json::object();
    if (std::filesystem::exists(a.report)) {
      try {
        report = json::parse(read_file(a.report));
      } catch (const json::parse_error& e) {
        throw FormatError("existing report is not valid JSON: " + std::string(e.what()));
      }
    }
    report["instance_digest"] = sha256_hex(bytes);
    report["point_counts"] = counts;
    write_file(a.report, canonical_dump(report));
  }
  return kCertified;
}

std::string rational(const mpq_class& q) { return q.get_str(); }

int invariants(std::ostream& out) {
  const ChernData c = chern_invariants();
  const RegularRepCheck r = regular_rep_check();
  out << "Chern series (1+h)^8 (1+2h)^-4:";
  for (const auto& x : c.total_chern) out << " " << rational(x);
  out << "\n";
  out << "c1 = " << rational(c.c1) << (c.c1 == 0 ? " (Calabi-Yau)" : "") << "\n";
  out << "c2 = " << rational(c.c2) << " h^2, c3 = " << rational(c.c3) << " h^3\n";
  out << "deg = " << c.degree << "\n";
  out << "euler(cover) = " << c.euler_cover << "\n";
  out << "euler(quotient) = " << c.euler_quotient << "\n";
  out << "L^3 = " << rational(c.l_cubed) << "\n";
  out << "L.c2 = " << rational(c.l_c2) << "\n";
  out << "1 = " << rational(c.l_cubed) << "/6 + " << rational(c.l_c2) << "/12: "
      << (c.riemann_roch_holds ? "exact" : "FAILS (sum is " + rational(c.riemann_roch) + ")") << "\n";
  out << "K_S^2 = " << rational(c.k2_surface) << " <= 5: " << (c.miyaoka_bound_holds ? "OK" : "FAILS") << "\n";
  out << "regular character over (1,-1,i,-i,j,-j,k,-k): (";
  for (std::size_t g = 0; g < r.traces.size(); ++g) out << (g ? "," : "") << r.traces[g];
  out << "): " << (r.is_regular ? "OK" : "FAILS") << "\n";
  const bool ok = c.c1 == 0 && c.riemann_roch_holds && c.miyaoka_bound_holds && r.is_regular;
  return ok ? kCertified : kRefuted;
}

int decompose(std::ostream& out) {
  const IsotypicDimensions d = isotypic_dimensions(2);
  out << "Sym^2 V by character:\n";
  for (Character chi : kCharacters)
    out << "  " << std::left << std::setw(9) << to_string(chi) << d.by_character[static_cast<std::size_t>(chi)] << "\n";
  out << "  " << std::setw(9) << "residual" << d.residual << "\n";
  out << "  " << std::setw(9) << "total" << d.total << "\n";
  return kCertified;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternionic four-quadric Calabi-Yau threefolds: instances and certificates", "quatcy"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a seeded random instance");
  g->add_option("--field", gen.field, "fp:P, fp:P^K or qi")->required();
  g->add_option("--seed", gen.seed, "Sampler seed");
  g->add_option("--out", gen.out, "Output file (stdout if omitted)");
  g->add_option("--zero", gen.zero, "Set t^CHAR_N to zero, e.g. 1:5 (repeatable)");
  g->add_flag("--allow-degenerate", gen.allow_degenerate, "Permit zero coefficients");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run the verification suite on an instance");
  v->add_option("instance", ver.instance, "Instance file")->required();
  v->add_option("--checks", ver.checks, "Comma list of eigen,free,smooth,hilbert,surface");
  v->add_option("--method", ver.method, "groebner, enumeration or both");
  v->add_option("--ext-degree", ver.ext_degree, "Largest extension degree enumerated");
  v->add_option("--out", ver.out, "Report file");
  v->add_option("--max-pairs", ver.max_pairs, "Groebner pair-reduction budget");
  v->add_option("--max-terms", ver.max_terms, "Groebner total-term budget");
  v->add_option("--max-field-size", ver.max_field_size, "Largest field enumerated (at most 256)");
  v->add_flag("--allow-degenerate", ver.allow_degenerate, "Accept zero coefficients");
  v->add_flag("--no-timings", ver.no_timings, "Record zero timings for byte-stable reports");

  CountArgs cnt;
  auto* c = app.add_subcommand("count", "Count points and H-orbits over F_{p^k}");
  c->add_option("instance", cnt.instance, "Instance file")->required();
  c->add_option("--ext-degree", cnt.ext_degree, "Count over F_{p^k} for k = 1..this");
  c->add_option("--report", cnt.report, "Report file to update");
  c->add_option("--max-field-size", cnt.max_field_size, "Largest field enumerated (at most 256)");
  c->add_flag("--allow-degenerate", cnt.allow_degenerate, "Accept zero coefficients");

  auto* inv = app.add_subcommand("invariants", "Print the Chern-class invariants");
  auto* dec = app.add_subcommand("decompose", "Print the isotypic decomposition of Sym^2 V");

  std::ostringstream buffer;
  int code = kUsage;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (g->parsed()) code = generate(gen, buffer);
    else if (v->parsed()) code = verify(ver, buffer);
    else if (c->parsed()) code = count(cnt, buffer);
    else if (inv->parsed()) code = invariants(buffer);
    else if (dec->parsed()) code = decompose(buffer);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kCertified;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kCertified;
  } catch (const CLI::ParseError& e) {
    err << "quatcy: " << e.what() << "\n";
    return kUsage;
  } catch (const FieldError& e) {
    err << "quatcy: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "quatcy: " << e.what() << "\n";
    return kUsage;
  } catch (const EnumerationTooLarge& e) {
    err << "quatcy: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "quatcy: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "quatcy: " << e.what() << "\n";
    return kUsage;
  }
  out << buffer.str();
  return code;
}

}  // namespace quatcy::cli
