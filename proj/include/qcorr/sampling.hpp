#pragma once

#include <cstdint>
#include <vector>

#include "qcorr/qstate.hpp"

namespace qcorr {

enum class SamplerKind { GinibreMixed, HaarPure, BellDiagonalUniform };

// Random-state source.  Draw i is a pure function of (seed, i): reproducible,
// order-independent, safe to evaluate in parallel.
struct SamplerSpec {
    SamplerKind kind = SamplerKind::GinibreMixed;
    int ginibre_rank = 4;  // 1..4 columns of the Ginibre factor
    std::uint64_t seed = 0;
};

// One validated, physical state.
//   GinibreMixed:        rho = G G^dagger / tr(G G^dagger), G 4 x rank complex
//                        Gaussian; rank 4 is the Hilbert-Schmidt ensemble and
//                        rank 1 coincides with HaarPure in distribution.
//   HaarPure:            normalized complex Gaussian 4-vector, outer product.
//   BellDiagonalUniform: uniform over the tetrahedron of physical Bell-diagonal
//                        coefficient vectors, by rejection from [-1, 1]^3
//                        (acceptance rate 1/3).
DensityMatrix sample(const SamplerSpec& spec, std::uint64_t index);

std::vector<DensityMatrix> stream(const SamplerSpec& spec, std::uint64_t count);

}  // namespace qcorr
