#include "freeharm/convolution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "freeharm/errors.hpp"
#include "freeharm/rng.hpp"

namespace freeharm {

SparseConvolutionOperator::SparseConvolutionOperator(std::shared_ptr<const CayleyBall> ball,
                                                     int block_dim, std::vector<Word> support,
                                                     std::vector<DenseMatrix> blocks)
    : ball_(std::move(ball)),
      block_dim_(block_dim),
      support_(std::move(support)),
      blocks_(std::move(blocks)) {
    targets_.resize(support_.size());
    for (std::size_t s = 0; s < support_.size(); ++s) {
        auto& target = targets_[s];
        target.assign(ball_->size(), kOutside);
        for (std::uint32_t h = 0; h < ball_->size(); ++h) {
            if (auto gi = ball_->index_of(support_[s] * ball_->element(h))) {
                target[h] = *gi;
                ++entry_count_;
            }
        }
    }
}

void SparseConvolutionOperator::apply(const std::vector<Complex>& x,
                                      std::vector<Complex>& y) const {
    const auto d = static_cast<std::size_t>(block_dim_);
    if (x.size() != cols()) throw std::invalid_argument("operand dimension mismatch");
    y.assign(rows(), Complex{});
    const std::size_t n = ball_->size();
    for (std::size_t s = 0; s < support_.size(); ++s) {
        const std::uint32_t* target = targets_[s].data();
        if (d == 1) {
            const Complex a = blocks_[s](0, 0);
            for (std::size_t h = 0; h < n; ++h) {
                const std::uint32_t g = target[h];
                if (g != kOutside) y[g] += a * x[h];
            }
        } else {
            const auto& block = blocks_[s];
            for (std::size_t h = 0; h < n; ++h) {
                const std::uint32_t g = target[h];
                if (g == kOutside) continue;
                const Complex* xh = x.data() + h * d;
                Complex* yg = y.data() + static_cast<std::size_t>(g) * d;
                for (std::size_t i = 0; i < d; ++i) {
                    Complex acc{};
                    for (std::size_t j = 0; j < d; ++j) acc += block(i, j) * xh[j];
                    yg[i] += acc;
                }
            }
        }
    }
}

void SparseConvolutionOperator::apply_adjoint(const std::vector<Complex>& x,
                                              std::vector<Complex>& y) const {
    const auto d = static_cast<std::size_t>(block_dim_);
    if (x.size() != rows()) throw std::invalid_argument("operand dimension mismatch");
    y.assign(cols(), Complex{});
    const std::size_t n = ball_->size();
    for (std::size_t s = 0; s < support_.size(); ++s) {
        const std::uint32_t* target = targets_[s].data();
        if (d == 1) {
            const Complex a = std::conj(blocks_[s](0, 0));
            for (std::size_t h = 0; h < n; ++h) {
                const std::uint32_t g = target[h];
                if (g != kOutside) y[h] += a * x[g];
            }
        } else {
            const auto& block = blocks_[s];
            for (std::size_t h = 0; h < n; ++h) {
                const std::uint32_t g = target[h];
                if (g == kOutside) continue;
                const Complex* xg = x.data() + static_cast<std::size_t>(g) * d;
                Complex* yh = y.data() + h * d;
                for (std::size_t j = 0; j < d; ++j) {
                    Complex acc{};
                    for (std::size_t i = 0; i < d; ++i) acc += std::conj(block(i, j)) * xg[i];
                    yh[j] += acc;
                }
            }
        }
    }
}

DenseMatrix SparseConvolutionOperator::block_at(std::uint32_t g, std::uint32_t h) const {
    for (std::size_t s = 0; s < support_.size(); ++s) {
        if (targets_[s][h] == g) return blocks_[s];
    }
    return DenseMatrix(static_cast<std::size_t>(block_dim_),
                       static_cast<std::size_t>(block_dim_));
}

void SparseConvolutionOperator::replace_blocks(std::vector<DenseMatrix> blocks) {
    if (blocks.size() != blocks_.size())
        throw std::invalid_argument("block count does not match the support pattern");
    const auto d = static_cast<std::size_t>(block_dim_);
    for (const auto& b : blocks)
        if (b.rows() != d || b.cols() != d)
            throw std::invalid_argument("block dimension mismatch");
    blocks_ = std::move(blocks);
}

SparseConvolutionOperator build_compression(const CoefficientFunction& a, int radius,
                                            std::optional<int> num_generators,
                                            std::uint64_t ball_cap, std::uint64_t entry_cap) {
    const int inferred = a.max_generator_index();
    const int n_gens = num_generators.value_or(std::max(1, inferred));
    if (n_gens < inferred)
        throw std::invalid_argument("support uses generator indices beyond num_generators");

    const std::uint64_t ball_size = CayleyBall::size_formula(n_gens, radius, ball_cap);
    const auto d = static_cast<std::uint64_t>(a.block_dim());
    if (d * d * ball_size * std::max<std::uint64_t>(1, a.support_size()) > entry_cap)
        throw ResourceError("compression would exceed the entry cap of " +
                            std::to_string(entry_cap));

    auto ball = std::make_shared<const CayleyBall>(enumerate_ball(n_gens, radius, ball_cap));
    std::vector<Word> support;
    std::vector<DenseMatrix> blocks;
    support.reserve(a.support_size());
    blocks.reserve(a.support_size());
    for (const auto& [w, block] : a.values()) {
        support.push_back(w);
        blocks.push_back(block);
    }
    return SparseConvolutionOperator(std::move(ball), a.block_dim(), std::move(support),
                                     std::move(blocks));
}

NormEstimate operator_norm(const SparseConvolutionOperator& op, double tol, int max_iterations) {
    return spectral_norm(op, tol, max_iterations);
}

std::vector<SweepRow> norm_sweep(const CoefficientFunction& a, int r_min, int r_max, double tol,
                                 std::optional<int> num_generators, std::uint64_t ball_cap,
                                 std::uint64_t entry_cap) {
    if (r_min < 0 || r_max < r_min) throw std::invalid_argument("invalid radius range");
    const RowColumnBounds rc = row_column_bounds(a);
    const double l1 = l1_bound(a);
    std::vector<SweepRow> rows;
    for (int r = r_min; r <= r_max; ++r) {
        const auto op = build_compression(a, r, num_generators, ball_cap, entry_cap);
        SweepRow row;
        row.radius = r;
        row.ball_size = op.ball_size();
        row.norm = operator_norm(op, tol);
        row.row_bound = rc.row;
        row.col_bound = rc.col;
        row.l1_bound = l1;
        rows.push_back(row);
    }
    return rows;
}

ConstantEstimate leinert_constant_estimate(const GroupElementSet& E, int trials, int block_dim,
                                           int radius, std::uint64_t seed, double tol,
                                           std::uint64_t ball_cap, std::uint64_t entry_cap) {
    if (E.empty()) throw std::invalid_argument("set must be nonempty");
    if (block_dim < 1) throw std::invalid_argument("block dimension must be >= 1");
    if (trials < 0) throw std::invalid_argument("trial count must be >= 0");
    if (static_cast<std::size_t>(radius) < E.max_word_length())
        throw std::invalid_argument("radius must cover the longest word of E");

    const auto d = static_cast<std::size_t>(block_dim);
    // Uniform coefficients first; the sparse pattern is reused across trials.
    CoefficientFunction uniform(block_dim);
    for (const auto& h : E.elements()) uniform.set(h, DenseMatrix::identity(d));
    auto op = build_compression(uniform, radius, std::nullopt, ball_cap, entry_cap);

    GaussianSource rng(seed);
    ConstantEstimate result;
    result.seed = seed;

    CoefficientFunction a = uniform;
    for (int t = 0; t <= trials; ++t) {
        if (t > 0) {
            std::vector<DenseMatrix> blocks;
            blocks.reserve(E.size());
            a = CoefficientFunction(block_dim);
            for (const auto& h : E.elements()) {
                DenseMatrix block(d, d);
                for (auto& v : block.data()) v = rng.complex_normal();
                a.set(h, block);
                blocks.push_back(std::move(block));
            }
            op.replace_blocks(std::move(blocks));
        }
        const NormEstimate norm = operator_norm(op, tol);
        const double denom = row_column_bounds(a).max();
        const double ratio = denom > 0.0 ? norm.value / denom : 0.0;
        result.all_converged = result.all_converged && norm.converged;
        result.ratios.push_back(ratio);
        result.value = std::max(result.value, ratio);
    }
    return result;
}

} // namespace freeharm
