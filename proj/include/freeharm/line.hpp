#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "freeharm/dense.hpp"

namespace freeharm {

/// Positive definite bump on the real line with compact support: the
/// autocorrelation u = conj(xi) * check(xi) of a normalized triangular window
/// xi supported in (-delta/2, delta/2). Then supp u = (-delta, delta),
/// u(0) = 1, and the Fourier transform is a nonnegative sinc^4 with
/// (1/2pi) * integral = 1, which witnesses positive definiteness. The
/// omega^{-4} decay lets a uniform grid certify tight tail bounds.
class LineBump {
public:
    explicit LineBump(double delta); // requires 0 < delta <= 1/2

    double delta() const noexcept { return delta_; }
    double support_radius() const noexcept { return delta_; }

    /// Closed-form value: piecewise cubic, even, u(0) = 1, zero outside
    /// (-delta, delta).
    double value(double x) const;

    /// Fourier transform: (3a/2) sinc^4(a omega / 2) with a = delta/2.
    double hat(double omega) const;

    /// Certified bound on (1/2pi) * integral of u-hat over |omega| > omega_min.
    double tail_mass_bound(double omega_min) const;

private:
    double delta_;
};

/// Uniform frequency grid commensurate with the 2pi-periodicity of integer
/// frequencies: spacing 2pi/samples_per_period over [-2pi*periods, 2pi*periods].
struct FrequencyGrid {
    int samples_per_period = 256; // M; delta_omega = 2pi/M
    int periods = 4096;           // K; omega_max = 2pi*K

    double delta_omega() const;
    double omega_max() const;
    std::size_t size() const { return static_cast<std::size_t>(2) * samples_per_period * periods + 1; }
    double omega(std::size_t j) const;

    static FrequencyGrid standard() { return FrequencyGrid{}; }

    friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;
};

/// Finitely supported map Z -> C.
class IntegerSequence {
public:
    IntegerSequence() = default;

    void set(int n, Complex value); // exact zeros are dropped
    Complex at(int n) const;
    bool empty() const noexcept { return values_.empty(); }
    std::size_t support_size() const noexcept { return values_.size(); }
    const std::map<int, Complex>& values() const noexcept { return values_; }

    int min_index() const; // 0 when empty
    int max_index() const;
    int max_abs_index() const;
    double l1_norm() const;
    double l2_norm() const;

private:
    std::map<int, Complex> values_;
};

/// Function on R represented by samples of its Fourier transform on a
/// uniform grid, together with a certified bound on the |f-hat| mass beyond
/// the grid. Reconstruction f(x) = (1/2pi) * quadrature of f-hat e^{i omega x}.
class SampledLineFunction {
public:
    SampledLineFunction(FrequencyGrid grid, std::vector<Complex> samples, double tail_bound);

    static SampledLineFunction zero(const FrequencyGrid& grid);

    const FrequencyGrid& grid() const noexcept { return grid_; }
    const std::vector<Complex>& samples() const noexcept { return samples_; }
    double tail_bound() const noexcept { return tail_bound_; }

    struct ANorm {
        double value = 0.0;      // trapezoid quadrature of |f-hat| over the grid
        double tail_bound = 0.0; // analytic bound on the mass beyond the grid
    };
    ANorm a_norm() const;

    /// Pointwise reconstruction at arbitrary x (full trapezoid sum).
    Complex evaluate(double x) const;

    /// Values at the integers n_min..n_max via exact folding of the trapezoid
    /// sum onto one period; integers must stay below samples_per_period/4 in
    /// magnitude to keep the periodization alias-free.
    std::vector<Complex> integer_values(int n_min, int n_max) const;

    /// Restriction to the representable integer range as a sequence.
    IntegerSequence integer_restriction() const;
    int max_integer_range() const { return grid_.samples_per_period / 4 - 1; }

    SampledLineFunction operator-(const SampledLineFunction& other) const;
    SampledLineFunction scaled(Complex factor) const;

private:
    FrequencyGrid grid_;
    std::vector<Complex> samples_;
    double tail_bound_;
};

/// True when the translates {p + (-delta, delta)} are pairwise disjoint,
/// i.e. the minimal pairwise distance is at least 2*delta (open intervals,
/// so equality passes).
bool check_uniformly_discrete(const std::vector<double>& points, double delta);

/// Gram matrix of the translated windows: G(i,j) = u(p_i - p_j) in closed
/// form. Equals the identity whenever the points are at least 2*delta apart.
DenseMatrix ons_gram(const std::vector<int>& points, double delta);

/// Interpolation map: x -> sum_n phi(n) u(x - n) in frequency representation
/// f-hat(omega) = u-hat(omega) sum_n phi(n) e^{-i n omega}. Evaluation at
/// integers reproduces phi up to the certified grid tolerances. Throws
/// GridResolutionError when the grid cannot certify a 1e-9 bump tail or the
/// support exceeds the alias-free integer range.
SampledLineFunction gamma_interpolate(const IntegerSequence& phi, double delta,
                                      const FrequencyGrid& grid = FrequencyGrid::standard());

/// Complementing projection P v = v - Gamma(v|_Z): the result vanishes on
/// the representable integers and P is idempotent up to grid tolerances.
SampledLineFunction complement_projection(const SampledLineFunction& v, double delta);

/// Residual of the conjugation identity u((x + h) - h) = u(x) over a sample
/// of points; identically zero on the line, where conjugation is trivial.
double sin_conjugation_residual(double delta, double shift, const std::vector<double>& xs);

/// Function-file format: header "omega_max delta_omega" then one "re im"
/// line per sample.
void write_function(std::ostream& out, const SampledLineFunction& f);
SampledLineFunction read_function(std::istream& in);
SampledLineFunction read_function_file(const std::string& path);

/// Sequence-file format: lines "n re im".
IntegerSequence read_sequence(std::istream& in);
IntegerSequence read_sequence_file(const std::string& path);

} // namespace freeharm
