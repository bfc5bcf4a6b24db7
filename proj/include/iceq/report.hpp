#pragma once

#include <string>

#include <json.hpp>

namespace iceq {

using ordered_json = nlohmann::ordered_json;

inline const char* kToolVersion = "0.1.0";

// FNV-1a 64-bit, hex string; stable input digest for reports.
std::string fnv1a64_hex(const std::string& bytes);

// Machine report envelope with stable key order. Timing is deliberately
// absent: machine reports are byte-identical across runs.
ordered_json report_envelope(const std::string& command, const std::string& input_digest);

}  // namespace iceq
