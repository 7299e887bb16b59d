#pragma once

// Seeded random operators for property sweeps and the acceptance suite.

#include <cstdint>
#include <random>

#include "uj/joint.hpp"

namespace uj {

using Rng = std::mt19937_64;

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
Matrix random_unitary(std::size_t dim, Rng& rng);

/// Uniformly random unit vector in C^dim.
Vector random_state_vector(std::size_t dim, Rng& rng);

/// Haar-random rank-r projector.
Projector random_projector(std::size_t dim, std::size_t rank, Rng& rng);

/// Random effect: Haar eigenbasis with eigenvalues uniform in [0, 1].
Effect random_effect(std::size_t dim, Rng& rng);

/// Random density matrix from a Ginibre matrix G: G G^dagger / Tr.
DensityMatrix random_density(std::size_t dim, Rng& rng);

BlochVector random_bloch(Rng& rng);

/// Real 3x3 rotation from a normalized Gaussian quaternion.
std::array<std::array<double, 3>, 3> random_rotation(Rng& rng);

BlochVector rotate(const std::array<std::array<double, 3>, 3>& r, const BlochVector& v);

}  // namespace uj
