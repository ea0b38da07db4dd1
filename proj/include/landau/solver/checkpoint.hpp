#pragma once

#include <string>

#include "landau/solver/solver.hpp"

namespace landau {

// Writes <stem>.bin (the complex samples as interleaved little-endian doubles, in the field's
// representation) and <stem>.json {grid, t, repr, sha256}. Returns the sidecar path.
std::string write_checkpoint(const std::string& stem, const SimState& s);

// Reads a checkpoint given its sidecar path; ConfigInvalid on a hash or size mismatch.
SimState read_checkpoint(const std::string& sidecar_path);

}  // namespace landau
