#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "freeharm/cayley_ball.hpp"
#include "freeharm/coefficients.hpp"
#include "freeharm/power_iteration.hpp"

namespace freeharm {

inline constexpr std::uint64_t kDefaultEntryCap = 200'000'000;

/// Compression of the left-convolution operator of a coefficient function a
/// to a Cayley ball B_r: the operator on C^d ⊗ l2(B_r) with blocks
/// M[g,h] = a(g h^{-1}), stored sparsely. An entry (g,h) exists exactly when
/// g h^{-1} lies in the support of a, so each row and each column carries at
/// most |supp a| blocks.
///
/// Storage is one index map per support word s: target[h] = index of s·h in
/// the ball (or absent), so the apply loops stream the ball in order rather
/// than gathering at random.
class SparseConvolutionOperator final : public LinearOperator {
public:
    SparseConvolutionOperator(std::shared_ptr<const CayleyBall> ball, int block_dim,
                              std::vector<Word> support, std::vector<DenseMatrix> blocks);

    const CayleyBall& ball() const { return *ball_; }
    int block_dim() const noexcept { return block_dim_; }
    std::size_t ball_size() const noexcept { return ball_->size(); }
    std::uint64_t entry_count() const noexcept { return entry_count_; }
    const std::vector<Word>& support() const noexcept { return support_; }

    std::size_t rows() const override { return ball_->size() * block_dim_; }
    std::size_t cols() const override { return ball_->size() * block_dim_; }
    void apply(const std::vector<Complex>& x, std::vector<Complex>& y) const override;
    void apply_adjoint(const std::vector<Complex>& x, std::vector<Complex>& y) const override;

    /// Block at ball-index pair (g, h); zero block when absent. Meant for
    /// tests and spot checks.
    DenseMatrix block_at(std::uint32_t g, std::uint32_t h) const;

    /// Swaps in new block values for the same support pattern (the order
    /// must match support()). Used by the randomized constant estimator.
    void replace_blocks(std::vector<DenseMatrix> blocks);

private:
    static constexpr std::uint32_t kOutside = 0xFFFFFFFFu;

    std::shared_ptr<const CayleyBall> ball_;
    int block_dim_;
    std::vector<Word> support_;       // shortlex order, parallel to blocks_
    std::vector<DenseMatrix> blocks_; // one block per support word
    std::vector<std::vector<std::uint32_t>> targets_; // per support word: h -> idx(s·h)
    std::uint64_t entry_count_ = 0;
};

/// Builds the compression of λ(a) to B_r. The generator count is inferred
/// from the support when not given explicitly. Throws ResourceError when
/// d^2 |B_r| |supp a| exceeds entry_cap or the ball exceeds ball_cap.
SparseConvolutionOperator build_compression(const CoefficientFunction& a, int radius,
                                            std::optional<int> num_generators = std::nullopt,
                                            std::uint64_t ball_cap = kDefaultBallCap,
                                            std::uint64_t entry_cap = kDefaultEntryCap);

/// Largest singular value of the compression; a monotone lower bound for
/// the true convolution norm.
NormEstimate operator_norm(const SparseConvolutionOperator& op, double tol = kDefaultNormTol,
                           int max_iterations = kDefaultMaxPowerIterations);

struct SweepRow {
    int radius = 0;
    std::uint64_t ball_size = 0;
    NormEstimate norm;
    double row_bound = 0.0;
    double col_bound = 0.0;
    double l1_bound = 0.0;
};

/// Compression norms over a radius range, with the radius-independent
/// row/column lower bounds and l1 upper bound attached to every row.
std::vector<SweepRow> norm_sweep(const CoefficientFunction& a, int r_min, int r_max,
                                 double tol = kDefaultNormTol,
                                 std::optional<int> num_generators = std::nullopt,
                                 std::uint64_t ball_cap = kDefaultBallCap,
                                 std::uint64_t entry_cap = kDefaultEntryCap);

struct ConstantEstimate {
    double value = 0.0;          // max ratio over all trials
    std::uint64_t seed = 0;      // seed the random trials were drawn from
    std::vector<double> ratios;  // trial 0 is the deterministic uniform trial
    bool all_converged = true;
};

/// Lower-bound estimate for the best constant C with
///   || sum a(h) ⊗ λ(h) || <= C max(row, col)
/// over matrix-valued a supported on E: the maximum, over the uniform
/// coefficient family and `trials` random Gaussian families (fixed seed), of
/// compression-norm / max(row, col) at the given radius. Requires
/// radius >= max word length of E so the sandwich lower bound applies.
ConstantEstimate leinert_constant_estimate(const GroupElementSet& E, int trials, int block_dim,
                                           int radius, std::uint64_t seed,
                                           double tol = kDefaultNormTol,
                                           std::uint64_t ball_cap = kDefaultBallCap,
                                           std::uint64_t entry_cap = kDefaultEntryCap);

} // namespace freeharm
