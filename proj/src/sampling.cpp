#include "qcorr/sampling.hpp"

#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {
namespace {

DensityMatrix ginibre(RandomStream& rng, int rank) {
    // Columns of the Ginibre factor; rho = G G^dagger normalized.
    std::array<std::array<Complex, 4>, 4> g{};
    for (int c = 0; c < rank; ++c)
        for (std::size_t r = 0; r < 4; ++r)
            g[static_cast<std::size_t>(c)][r] = rng.complex_gaussian();

    Mat4c rho{};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            Complex acc = 0.0;
            for (int k = 0; k < rank; ++k)
                acc += g[static_cast<std::size_t>(k)][r] *
                       std::conj(g[static_cast<std::size_t>(k)][c]);
            rho(r, c) = acc;
        }
    const double tr = trace(rho).real();
    rho = Complex{1.0 / tr, 0.0} * rho;
    return DensityMatrix::from_matrix(rho, /*require_physical=*/true);
}

DensityMatrix haar_pure(RandomStream& rng) {
    std::array<Complex, 4> v;
    double norm2 = 0.0;
    for (Complex& z : v) {
        z = rng.complex_gaussian();
        norm2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    Mat4c rho;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            rho(r, c) = v[r] * std::conj(v[c]) * (inv * inv);
    return DensityMatrix::from_matrix(rho, /*require_physical=*/true);
}

DensityMatrix bell_diagonal_uniform(RandomStream& rng) {
    // Physical iff all four Bell-basis populations are nonnegative.
    for (;;) {
        const double c1 = rng.uniform_symmetric();
        const double c2 = rng.uniform_symmetric();
        const double c3 = rng.uniform_symmetric();
        const bool ok = (1.0 - c1 - c2 - c3 >= 0.0) && (1.0 - c1 + c2 + c3 >= 0.0) &&
                        (1.0 + c1 - c2 + c3 >= 0.0) && (1.0 + c1 + c2 - c3 >= 0.0);
        if (!ok) continue;
        BlochForm b;
        b.T[0][0] = c1;
        b.T[1][1] = c2;
        b.T[2][2] = c3;
        return bloch_compose(b);
    }
}

}  // namespace

DensityMatrix sample(const SamplerSpec& spec, std::uint64_t index) {
    if (spec.kind == SamplerKind::GinibreMixed &&
        (spec.ginibre_rank < 1 || spec.ginibre_rank > 4))
        throw BadSetting("sampler: ginibre rank must be 1..4");
    RandomStream rng(spec.seed, index);
    switch (spec.kind) {
        case SamplerKind::GinibreMixed: return ginibre(rng, spec.ginibre_rank);
        case SamplerKind::HaarPure: return haar_pure(rng);
        case SamplerKind::BellDiagonalUniform: return bell_diagonal_uniform(rng);
    }
    throw BadSetting("sampler: unknown kind");
}

std::vector<DensityMatrix> stream(const SamplerSpec& spec, std::uint64_t count) {
    std::vector<DensityMatrix> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(sample(spec, i));
    return out;
}

}  // namespace qcorr
