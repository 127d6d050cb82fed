#include <openssl/evp.h>

#include <cstdio>

#include "geodex/io.hpp"

namespace geodex::io {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string backend_id() { return std::string("gmp-") + gmp_version; }

json to_json(const RunManifest& m) {
  json inputs = json::array();
  for (const auto& [path, digest] : m.inputs) inputs.push_back({{"path", path}, {"sha256", digest}});
  json j = {{"tool_version", m.tool_version},
            {"command", m.command},
            {"inputs", inputs},
            {"backend", m.backend},
            {"result_digest", m.result_digest}};
  if (m.wall_seconds) j["wall_seconds"] = *m.wall_seconds;
  return j;
}

json envelope(RunManifest manifest, const json& result) {
  if (manifest.backend.empty()) manifest.backend = backend_id();
  manifest.result_digest = sha256_hex(result.dump());
  return {{"schema", kSchema}, {"manifest", to_json(manifest)}, {"result", result}};
}

}  // namespace geodex::io
