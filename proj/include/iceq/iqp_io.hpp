#pragma once

#include <string>
#include <utility>

#include "iceq/algebra.hpp"
#include "iceq/quiver.hpp"

namespace iceq {

struct IqpFile {
  IceQuiver ice;
  Potential potential;
};

// Parse the .iqp JSON format. filename is used in diagnostics only.
// Cycle arrays list arrow names with the FIRST entry applied LAST
// (the array spells the word a_m...a_1 left to right).
IqpFile parse_iqp(const std::string& text, const std::string& filename = "<input>");
IqpFile parse_iqp_file(const std::string& path);

// Canonical serialization; parse(serialize(x)) == x, and serialize is
// the identity on canonical files.
std::string serialize_iqp(const IqpFile& f);

// Rejects loops (ice quivers with potential are loop-free).
void validate_iqp(const IqpFile& f, const std::string& filename = "<input>");

}  // namespace iceq
