#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Input outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Iterative routine exhausted its budget before reaching tolerance.
struct NonConvergent : std::runtime_error {
    explicit NonConvergent(const std::string& what) : std::runtime_error(what) {}
};

// Matrix expected to be Hermitian is not, beyond tolerance.
struct NotHermitian : std::invalid_argument {
    explicit NotHermitian(const std::string& what) : std::invalid_argument(what) {}
};

// Bracketing interval does not straddle a sign change.
struct NoSignChange : std::invalid_argument {
    explicit NoSignChange(const std::string& what) : std::invalid_argument(what) {}
};

// Matrix fails a density-matrix check; message names the check and the residual.
struct NotDensityMatrix : std::invalid_argument {
    explicit NotDensityMatrix(const std::string& what) : std::invalid_argument(what) {}
};

// Family or channel parameter outside its admissible range.
struct ParamOutOfRange : std::invalid_argument {
    explicit ParamOutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally invalid configuration (bad setting count, non-unit vectors, ...).
struct BadSetting : std::invalid_argument {
    explicit BadSetting(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qcorr
