#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "geodex/cases.hpp"
#include "geodex/homology.hpp"
#include "geodex/iteration.hpp"
#include "geodex/jump.hpp"
#include "geodex/morse.hpp"
#include "geodex/normal_forms.hpp"

namespace geodex::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "geodex/1";
inline constexpr const char* kToolVersion = "0.1.0";

/// Input shape or schema problem.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers are written as JSON numbers when they fit in 64 bits, else as strings.
json to_json(const Int& v);
Int int_from(const json& j);
// Exact values: {"value": "...", "approx": double}.
json exact_json(const Rat& q);
json exact_json(const ExactReal& x);
Rat rat_from(const json& j);

json to_json(const Turn& t);
json to_json(const Block& b);
json to_json(const Decomposition& d);
json to_json(const GeodesicModel& g);
json to_json(const TypeNumbers& t);
json to_json(const DressedGeodesic& dg);
json to_json(const JumpCertificate& c);
json to_json(const JumpVerification& v);
json to_json(const IndexProfile& p);
json to_json(const IdentityReport& r);
json to_json(const MorseReport& r);
json to_json(const EliminationReport& r);
json to_json(const SweepSummary& s, bool details);

Turn turn_from(const json& j);
Block block_from(const json& j);
Decomposition decomposition_from(const json& j);
/// {"decomposition": {...}, "index": i, "label"?} or the flat form with "n"/"blocks" beside "index".
GeodesicModel model_from(const json& j);
TypeNumbers types_from(const json& j);
DressedGeodesic dressed_from(const json& j);

struct Config {
  int n = 3;
  std::vector<DressedGeodesic> geodesics;
  std::vector<GeodesicModel> models() const;
};
/// {"n": 3, "geodesics": [model + optional "types"]}.
Config config_from(const json& j);
json to_json(const Config& c);
std::vector<IterWindow> windows_from(const json& j);

/// Rejects documents whose "schema" field names another version.
void check_schema(const json& j);

json read_json_file(const std::string& path);
std::string read_file(const std::string& path);

/// TOML grid: [c1] turns/index, [c2] turns/indices/cases/..., [options].
SweepGrid grid_from_toml(const std::string& text);

struct RunManifest {
  std::string tool_version = kToolVersion;
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::string backend;
  std::optional<double> wall_seconds;
  std::string result_digest;
};

std::string sha256_hex(const std::string& bytes);
std::string backend_id();
json to_json(const RunManifest& m);

/// {"schema", "manifest", "result"}; the digest covers result.dump() only.
json envelope(RunManifest manifest, const json& result);

}  // namespace geodex::io
