#include "iceq/report.hpp"

#include <cstdint>
#include <sstream>

namespace iceq {

std::string fnv1a64_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << "0123456789abcdef"[(h >> (4 * i)) & 0xf];
  return os.str();
}

ordered_json report_envelope(const std::string& command, const std::string& input_digest) {
  ordered_json j;
  j["tool"] = "iceq";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["input_digest"] = input_digest;
  return j;
}

}  // namespace iceq
