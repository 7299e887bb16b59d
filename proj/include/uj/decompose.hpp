#pragma once

// Structural decompositions: the simultaneous reduction of two projectors to
// 1- and 2-dimensional invariant blocks, and the Neumark dilation of a
// dichotomic POVM to a projector on C^d (x) C^2 together with its compression.

#include <optional>
#include <string>
#include <vector>

#include "uj/operators.hpp"

namespace uj {

/// One invariant subspace of the pair (p, q).
struct Block {
  std::size_t dim = 0;               // 1 or 2
  std::vector<std::size_t> columns;  // columns of BlockDecomposition::unitary
  int rank_p = 0;                    // rank of p restricted to the block
  int rank_q = 0;
  /// |<chi_p|chi_q>| for a 2-dim block with rank_p = rank_q = 1; for 1-dim
  /// blocks 1 if the restrictions coincide and 0 otherwise. Empty otherwise.
  std::optional<double> overlap;
};

struct BlockDecomposition {
  Matrix unitary;  // columns form the adapted orthonormal basis
  std::vector<Block> blocks;

  std::size_t dim() const { return static_cast<std::size_t>(unitary.rows()); }

  /// U^dagger m U restricted to the block's columns.
  Matrix restrict(const Matrix& m, const Block& block) const;
  /// Largest |entry| of U^dagger m U outside the declared diagonal blocks.
  double off_block_residual(const Matrix& m) const;
  /// |U (blockdiag of U^dagger m U) U^dagger - m|, i.e. what is lost by
  /// dropping the off-block part.
  double reconstruction_residual(const Matrix& m) const;
};

/// Eigenvalues of pqp closer than this to 0 or 1 are treated as exact.
inline constexpr double kOverlapClusterTol = 1e-10;

/// Adapted basis for two projectors. 2-dim blocks are seeded by eigenvectors of
/// p q p with eigenvalue c in (0,1) (overlap sqrt(c)); every intersection of
/// ranges and kernels contributes 1-dim blocks. Ordering: 2-dim blocks by
/// descending overlap, then 1-dim blocks with ranks (1,1), (1,0), (0,1), (0,0).
BlockDecomposition two_projector_blocks(const Projector& p, const Projector& q);

/// Same, validating raw matrices with the looser idempotency tolerance 1e-8.
BlockDecomposition two_projector_blocks(const Matrix& p, const Matrix& q);

/// Tensor convention of the dilation space: system (x) ancilla, ancilla last,
/// so basis index = 2*i + a and the ancilla ground state |0> selects even
/// indices.
inline constexpr const char* kAncillaConvention = "system(x)ancilla;ancilla0=even";

struct Dilation {
  Projector projector;  // on C^{2d}
  std::string convention = kAncillaConvention;
};

/// Projector P on C^d (x) C^2 with <0_A|P|0_A> = E_yes. Built from the spectral
/// decomposition E_yes = sum a_i |e_i><e_i| as P = sum |v_i><v_i| with
/// |v_i> = sqrt(a_i)|e_i>|0> + sqrt(1 - a_i)|e_i>|1>.
Dilation neumark_dilate(const DichotomicObservable& obs);

/// <0_A| g |0_A>, the d x d sub-block on even indices. Throws OddDimension.
Matrix compress(const Matrix& g);
Effect compress(const Effect& g);

}  // namespace uj
