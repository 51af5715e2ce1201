#ifndef GGM_CODEC_HPP
#define GGM_CODEC_HPP

#include <cstdint>
#include <vector>

#include "ggm/core.hpp"
#include "ggm/rng.hpp"

namespace ggm {

/// Rank counting direction. greater_equal: rank of x_k = #{l : x_l ≥ x_k}
/// (the largest value gets rank 1). less_equal is the mirrored convention;
/// the two are related by negating the ranked column.
enum class RankConvention { greater_equal, less_equal };

/// Ranks of one column, values in {1..n}; a permutation when there are no
/// ties, otherwise ties share the max-style count on both sides.
struct RankVector {
  std::vector<std::int32_t> ranks;
};

RankVector compute_ranks(const Eigen::VectorXd& column,
                         RankConvention convention);

/// compute_ranks with the greater_equal convention.
RankVector ranks_desc(const Eigen::VectorXd& column);

/// Single nearest neighbor of every point, self excluded. Equidistant
/// candidates (exact tie on squared Euclidean distance, no epsilon) are
/// broken uniformly at random from the caller's stream; tie_count records
/// how many candidates attained the minimum at each point.
struct NeighborAssignment {
  std::vector<std::int32_t> indices;    // indices[k] != k, 0-based
  std::vector<std::int32_t> tie_count;  // >= 1
};

/// Which exact-NN search runs under the hood. Both backends produce identical
/// assignments on identical inputs and stream (the tie sets are exact and
/// canonically ordered). automatic picks kd_tree for d ≤ 10, where the tree
/// prunes well, and the vectorized scan otherwise.
enum class NnBackend { automatic, brute_force, kd_tree };

class DegenerateDimError : public Error {
 public:
  DegenerateDimError();
};

/// Exact nearest neighbors of each row of `points` (n×d, one point per row).
/// Consumes one uniform draw from `rng` per tied point, in row order.
NeighborAssignment nearest_neighbors(const Eigen::MatrixXd& points,
                                     RngStream& rng,
                                     NnBackend backend = NnBackend::automatic);

/// Empirical denominator of the pair coefficient was exactly zero: column i
/// carried no rank variation unexplained by its conditioning set (e.g. a
/// constant column). The pair must be reported, never silently mapped to 0.
class DegenerateDenominatorError : public Error {
 public:
  DegenerateDenominatorError(int i, int j);
  int i, j;
};

struct CodecOptions {
  RankConvention convention = RankConvention::greater_equal;
  NnBackend backend = NnBackend::automatic;
  int threads = 1;  // 0 = all cores; only codec_matrix parallelizes
};

/// Conditional dependence coefficient of column i vs column j given all
/// remaining columns, estimated from ranks and nearest neighbors:
///
///   T = Σ_k (min(R_k, R_aug(k)) − min(R_k, R_cond(k)))
///       / Σ_k (R_k − min(R_k, R_cond(k)))
///
/// where R are the ranks of column i, cond(k) is the nearest neighbor of
/// sample k among the conditioning columns (all but i and j), and aug(k) the
/// nearest neighbor when column j is adjoined to that space. Both sums are
/// exact integers; T ≤ 1 whenever defined, and T is invariant under strictly
/// increasing transforms of column i.
///
/// Tie-break streams are derived deterministically from the seed: the
/// conditioning-space stream from (seed, min(i,j), max(i,j)) — that space is
/// symmetric in the pair — and the augmented-space stream from (seed, i)
/// only, so the augmented assignment is shared by every j for fixed i.
///
/// Throws DegenerateDenominatorError when the denominator is exactly zero.
double codec_pair(const DataMatrix& data, int i, int j, std::uint64_t seed,
                  const CodecOptions& options = {});

/// Everything codec_pair computes, for diagnostics and oracle tests.
struct CodecPairDetail {
  RankVector ranks;
  NeighborAssignment conditioning;  // NN over columns \ {i,j}
  NeighborAssignment augmented;     // NN over columns \ {i}
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
};

CodecPairDetail codec_pair_detail(const DataMatrix& data, int i, int j,
                                  std::uint64_t seed,
                                  const CodecOptions& options = {});

/// Full p×p coefficient matrix. Entry (i,j) is bitwise equal to
/// codec_pair(data, i, j, seed), the diagonal is 1, and degenerate pairs are
/// zeroed and listed in DepMatrix::excluded (sorted). Pure function of
/// (data, seed, options.convention): the per-pair stream derivation makes the
/// result independent of thread count and scheduling.
DepMatrix codec_matrix(const DataMatrix& data, std::uint64_t seed,
                       const CodecOptions& options = {});

}  // namespace ggm

#endif  // GGM_CODEC_HPP
