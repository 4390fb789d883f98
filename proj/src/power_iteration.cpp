#include "freeharm/power_iteration.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace freeharm {

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Fixed perturbation in [-1/2, 1/2), the same on every run.
inline double perturbation(std::uint64_t j) {
    return static_cast<double>(splitmix64(j) >> 11) * (1.0 / 9007199254740992.0) - 0.5;
}

double vector_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

void normalize(std::vector<Complex>& v) {
    const double n = vector_norm(v);
    if (n == 0.0) return;
    const double inv = 1.0 / n;
    for (auto& z : v) z *= inv;
}

// Components decaying through the subnormal range stall the FPU for many
// iterations and carry nothing at the tolerances used here.
void flush_tiny(std::vector<Complex>& v) {
    constexpr double kFlush = 1e-250;
    for (auto& z : v) {
        double re = z.real();
        double im = z.imag();
        if (std::abs(re) < kFlush) re = 0.0;
        if (std::abs(im) < kFlush) im = 0.0;
        z = Complex(re, im);
    }
}

} // namespace

NormEstimate spectral_norm(const LinearOperator& op, double tol, int max_iterations) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const std::size_t n = op.cols();
    if (n == 0 || op.rows() == 0) return NormEstimate{0.0, true, 0};

    std::vector<Complex> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = 1.0 + 1e-4 * perturbation(j);
    normalize(v);

    std::vector<Complex> w, u;
    double previous = -1.0;
    int stable = 0;
    for (int k = 1; k <= max_iterations; ++k) {
        op.apply(v, w);
        const double sigma = vector_norm(w); // ||A v||, v unit
        if (sigma == 0.0) return NormEstimate{0.0, true, k};
        op.apply_adjoint(w, u);
        v = u;
        normalize(v);

        if (previous >= 0.0) {
            const double rel = std::abs(sigma - previous) / std::max(sigma, 1e-300);
            stable = (rel < tol) ? stable + 1 : 0;
        }
        previous = sigma;
        if (stable >= 2) return NormEstimate{sigma, true, k};
    }
    return NormEstimate{previous, false, max_iterations};
}

void DenseOperator::apply(const std::vector<Complex>& x, std::vector<Complex>& y) const {
    if (x.size() != m_.cols()) throw std::invalid_argument("operand dimension mismatch");
    y.assign(m_.rows(), Complex{});
    const auto& d = m_.data();
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        Complex acc{};
        const Complex* row = d.data() + i * m_.cols();
        for (std::size_t j = 0; j < m_.cols(); ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

void DenseOperator::apply_adjoint(const std::vector<Complex>& x, std::vector<Complex>& y) const {
    if (x.size() != m_.rows()) throw std::invalid_argument("operand dimension mismatch");
    y.assign(m_.cols(), Complex{});
    const auto& d = m_.data();
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        const Complex xi = x[i];
        if (xi == Complex{}) continue;
        const Complex* row = d.data() + i * m_.cols();
        for (std::size_t j = 0; j < m_.cols(); ++j) y[j] += std::conj(row[j]) * xi;
    }
}

NormEstimate spectral_norm(const DenseMatrix& m, double tol, int max_iterations) {
    DenseOperator op(m);
    return spectral_norm(op, tol, max_iterations);
}

} // namespace freeharm
