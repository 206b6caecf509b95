#include "quatcy/files.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace quatcy {

using nlohmann::json;

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json field_spec_to_json(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldKind::rational: return {{"kind", "rational"}};
    case FieldKind::gaussian_rational: return {{"kind", "gaussian_rational"}};
    case FieldKind::prime: return {{"kind", "prime"}, {"p", spec.p}};
    case FieldKind::prime_ext: return {{"kind", "prime_ext"}, {"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus}};
  }
  return {};
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw FormatError(what);
}

void require_keys(const json& j, std::initializer_list<std::string_view> keys, const std::string& where) {
  require(j.is_object(), where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : keys) known = known || k == key;
    require(known, "unexpected key '" + key + "' in " + where);
  }
  for (auto k : keys) require(j.contains(std::string(k)), "missing key '" + std::string(k) + "' in " + where);
}

json integer(const mpq_class& q) {
  if (q.get_den() != 1) return q.get_str();
  return q.get_num().get_si();
}

std::uint64_t get_uint(const json& j, const std::string& what) {
  require(j.is_number_unsigned(), what + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

FieldSpec field_spec_from_json(const json& j) {
  require(j.is_object() && j.contains("kind") && j["kind"].is_string(), "field needs a string 'kind'");
  const std::string kind = j["kind"];
  try {
    if (kind == "rational") {
      require_keys(j, {"kind"}, "field");
      return FieldSpec::rational();
    }
    if (kind == "gaussian_rational") {
      require_keys(j, {"kind"}, "field");
      return FieldSpec::gaussian_rational();
    }
    if (kind == "prime") {
      require_keys(j, {"kind", "p"}, "field");
      return FieldSpec::prime(get_uint(j["p"], "p"));
    }
    if (kind == "prime_ext") {
      require_keys(j, {"kind", "p", "k", "modulus"}, "field");
      require(j["modulus"].is_array(), "modulus must be an array");
      std::vector<std::uint64_t> modulus;
      for (const auto& c : j["modulus"]) modulus.push_back(get_uint(c, "modulus coefficient"));
      FieldSpec spec = FieldSpec::extension(get_uint(j["p"], "p"), modulus);
      require(spec.k == get_uint(j["k"], "k"), "k does not match the modulus degree");
      return spec;
    }
  } catch (const FieldError& e) {
    throw FormatError(std::string("invalid field: ") + e.what());
  }
  throw FormatError("unknown field kind '" + kind + "'");
}

std::string serialize_instance(const Instance& inst) {
  json t = json::array();
  for (const auto& row : inst.t) {
    json r = json::array();
    for (const auto& c : row) r.push_back(inst.field->format(c));
    t.push_back(r);
  }
  json coords = json::array();
  for (auto name : kVarNames) coords.push_back(std::string(name));
  return canonical_dump({{"version", kInstanceFormatVersion},
                         {"field", field_spec_to_json(inst.field->spec())},
                         {"t", t},
                         {"seed", inst.seed},
                         {"coordinates", coords}});
}

Instance parse_instance(std::string_view text, bool allow_degenerate) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
  require_keys(j, {"coordinates", "field", "seed", "t", "version"}, "instance");
  require(j["version"].is_number_integer() && j["version"].get<long long>() == kInstanceFormatVersion,
          "unsupported instance version");
  require(j["coordinates"].is_array() && j["coordinates"].size() == kNumVars, "coordinates must list 8 names");
  for (std::size_t v = 0; v < kNumVars; ++v)
    require(j["coordinates"][v] == std::string(kVarNames[v]), "coordinates must be X1,Xa,Xb,Xg,Y,Z,Yp,Zp");

  Instance inst;
  try {
    inst.field = make_field(field_spec_from_json(j["field"]));
  } catch (const FieldError& e) {
    throw FormatError(std::string("invalid field: ") + e.what());
  }
  inst.seed = get_uint(j["seed"], "seed");
  const json& t = j["t"];
  require(t.is_array() && t.size() == 4, "t must have 4 rows");
  for (std::size_t r = 0; r < 4; ++r) {
    require(t[r].is_array() && t[r].size() == kParamsPerQuadric, "each row of t must have 5 entries");
    for (std::size_t c = 0; c < kParamsPerQuadric; ++c) {
      require(t[r][c].is_string(), "coefficients must be strings");
      const std::string s = t[r][c];
      try {
        inst.t[r][c] = inst.field->parse(s);
      } catch (const std::exception& e) {
        throw FormatError("bad coefficient '" + s + "': " + e.what());
      }
      require(inst.field->format(inst.t[r][c]) == s, "coefficient '" + s + "' is not in canonical form");
    }
  }
  if (!allow_degenerate && inst.is_degenerate())
    throw DegenerateInstance("instance has a zero coefficient (pass --allow-degenerate to accept it)");
  return inst;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr))
    throw std::runtime_error("SHA-256 failed");
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

json invariants_json(const ChernData& chern, const RegularRepCheck& regular) {
  json series = json::array();
  for (const auto& c : chern.total_chern) series.push_back(c.get_str());
  json traces = json::object();
  for (std::size_t g = 0; g < kGroupElements.size(); ++g)
    traces[std::string(to_string(kGroupElements[g]))] = regular.traces[g];
  return {{"chern_series", series},
          {"c1", chern.c1.get_str()},
          {"deg_cover", chern.degree},
          {"euler_cover", chern.euler_cover},
          {"euler", chern.euler_quotient},
          {"L3", integer(chern.l_cubed)},
          {"L_c2", integer(chern.l_c2)},
          {"riemann_roch", chern.riemann_roch.get_str()},
          {"riemann_roch_holds", chern.riemann_roch_holds},
          {"miyaoka_bound_holds", chern.miyaoka_bound_holds},
          {"regular_character", traces},
          {"regular_representation", regular.is_regular}};
}

json build_report(std::string_view instance_bytes, const std::vector<CheckRecord>& records, bool timings) {
  VerificationReport report{records};
  json checks = json::array();
  json timing = json::object();
  for (const auto& r : records) {
    checks.push_back(r.to_json(timings));
    timing[r.name] = timings ? r.seconds : 0.0;
  }
  return {{"instance_digest", sha256_hex(instance_bytes)},
          {"tool_version", std::string(kToolVersion)},
          {"checks", checks},
          {"overall", std::string(to_string(report.overall()))},
          {"invariants", invariants_json(chern_invariants(), regular_rep_check())},
          {"K2_S", integer(chern_invariants().k2_surface)},
          {"timings", timing}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + path);
    out << contents;
    if (!out) throw FormatError("cannot write " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw FormatError("cannot write " + path);
}

}  // namespace quatcy
