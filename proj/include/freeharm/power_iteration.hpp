#pragma once

#include <cstdint>
#include <vector>

#include "freeharm/dense.hpp"

namespace freeharm {

inline constexpr double kDefaultNormTol = 1e-9;
inline constexpr int kDefaultMaxPowerIterations = 10'000;

/// Linear map on complex coordinate spaces, exposed through forward and
/// adjoint application. Implementations must be pure: apply may be called
/// concurrently from multiple threads.
class LinearOperator {
public:
    virtual ~LinearOperator() = default;
    virtual std::size_t rows() const = 0;
    virtual std::size_t cols() const = 0;
    /// y = A x, y resized by the callee.
    virtual void apply(const std::vector<Complex>& x, std::vector<Complex>& y) const = 0;
    /// y = A* x.
    virtual void apply_adjoint(const std::vector<Complex>& x, std::vector<Complex>& y) const = 0;
};

struct NormEstimate {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Largest singular value via power iteration on A*A. The start vector is
/// the normalized all-ones vector plus a fixed deterministic perturbation, so
/// repeated runs give identical results. The iteration stops once the
/// relative change of the estimate stays below tol over two consecutive
/// iterates; non-convergence within max_iterations is reported, never
/// hidden. Estimates increase monotonically, so the returned value is a
/// lower bound on the true norm up to roundoff.
NormEstimate spectral_norm(const LinearOperator& op, double tol = kDefaultNormTol,
                           int max_iterations = kDefaultMaxPowerIterations);

/// Adapter for dense matrices.
class DenseOperator final : public LinearOperator {
public:
    explicit DenseOperator(const DenseMatrix& m) : m_(m) {}
    std::size_t rows() const override { return m_.rows(); }
    std::size_t cols() const override { return m_.cols(); }
    void apply(const std::vector<Complex>& x, std::vector<Complex>& y) const override;
    void apply_adjoint(const std::vector<Complex>& x, std::vector<Complex>& y) const override;

private:
    const DenseMatrix& m_;
};

NormEstimate spectral_norm(const DenseMatrix& m, double tol = kDefaultNormTol,
                           int max_iterations = kDefaultMaxPowerIterations);

} // namespace freeharm
