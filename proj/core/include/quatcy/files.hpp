// Instance and report files: canonical JSON with sorted keys.
#ifndef QUATCY_FILES_HPP
#define QUATCY_FILES_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quatcy/checks.hpp"
#include "quatcy/instance.hpp"
#include "quatcy/invariants.hpp"
#include "quatcy/version.hpp"

namespace quatcy {

inline constexpr int kInstanceFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateInstance : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Two-space indentation, sorted keys, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const nlohmann::json& j);

std::string serialize_instance(const Instance& inst);
/// Throws FormatError on malformed input and DegenerateInstance on a zero
/// coefficient unless `allow_degenerate`.
Instance parse_instance(std::string_view text, bool allow_degenerate = false);

std::string sha256_hex(std::string_view bytes);

nlohmann::json invariants_json(const ChernData& chern, const RegularRepCheck& regular);

/// Report document for the given instance bytes and check records.
nlohmann::json build_report(std::string_view instance_bytes, const std::vector<CheckRecord>& records,
                            bool timings = true);

std::string read_file(const std::string& path);
/// Writes through a temporary file and a rename.
void write_file(const std::string& path, std::string_view contents);

}  // namespace quatcy

#endif  // QUATCY_FILES_HPP
