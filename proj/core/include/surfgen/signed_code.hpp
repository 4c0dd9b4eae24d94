#pragma once

#include "surfgen/embedded_map.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace surfgen {

// Binary interchange for bulk runs. Stream layout:
//   header bytes ">>signed_code<<"
//   per map: one byte n (vertex count, <= 127), then for each vertex in
//   order its rotation as 1-based neighbor bytes, bit 7 set on an entry
//   exactly when that edge has signature -1 (set at both ends), then a
//   0x00 terminator byte.

inline constexpr char kSignedCodeHeader[] = ">>signed_code<<";

void write_signed_code_header(std::ostream& out);
void write_signed_code(std::ostream& out, const EmbeddedMap& m);
std::vector<std::uint8_t> signed_code_bytes(const EmbeddedMap& m);

// Reads maps until end of stream. Throws std::runtime_error on a missing
// header or truncated payload.
std::vector<EmbeddedMap> read_signed_code(std::istream& in);

// Decodes one map from its headerless signed-code bytes.
EmbeddedMap map_from_signed_code_bytes(const std::uint8_t* data, std::size_t size);

} // namespace surfgen
