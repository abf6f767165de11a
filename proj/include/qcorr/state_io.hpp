#pragma once

#include <string>

#include "qcorr/qstate.hpp"

namespace qcorr {

// State file schema: a JSON object with exactly one of
//   "matrix": 4x4 array of [re, im] pairs
//   "bloch":  {"r": [3], "s": [3], "T": [[3] x 3]}
// Parse errors and schema violations throw BadSetting; matrix content is then
// validated by DensityMatrix::from_matrix (trace/Hermiticity, PSD optional).
DensityMatrix load_state_json(const std::string& text, bool require_physical = false);
DensityMatrix load_state_file(const std::string& path, bool require_physical = false);

std::string state_to_json(const DensityMatrix& rho);

}  // namespace qcorr
