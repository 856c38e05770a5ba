#pragma once

#include <cstdint>
#include <string>

namespace pslab {

/// Hex digest of the SHA-256 of `data`. Self-contained implementation; used
/// for content-addressed cache keys and input hashes in reports.
std::string sha256_hex(const std::string& data);

} // namespace pslab
