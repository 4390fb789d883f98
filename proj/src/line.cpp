#include "freeharm/line.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "freeharm/errors.hpp"

namespace freeharm {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kBumpTailRequirement = 1e-9;

double sinc(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

} // namespace

LineBump::LineBump(double delta) : delta_(delta) {
    if (!(delta > 0.0) || delta > 0.5)
        throw std::invalid_argument("bump half-width must satisfy 0 < delta <= 1/2");
}

double LineBump::value(double x) const {
    const double a = delta_ / 2.0;
    const double s = std::abs(x) / a;
    if (s >= 2.0) return 0.0;
    if (s <= 1.0) return 1.0 + s * s * (0.75 * s - 1.5);
    const double t = 2.0 - s;
    return 0.25 * t * t * t;
}

double LineBump::hat(double omega) const {
    const double a = delta_ / 2.0;
    const double sc = sinc(a * omega / 2.0);
    const double sc2 = sc * sc;
    return 1.5 * a * sc2 * sc2;
}

double LineBump::tail_mass_bound(double omega_min) const {
    if (omega_min <= 0.0) throw std::invalid_argument("tail cutoff must be positive");
    const double a = delta_ / 2.0;
    return 8.0 / (M_PI * a * a * a * omega_min * omega_min * omega_min);
}

double FrequencyGrid::delta_omega() const { return kTwoPi / samples_per_period; }
double FrequencyGrid::omega_max() const { return kTwoPi * periods; }

double FrequencyGrid::omega(std::size_t j) const {
    const auto center = static_cast<std::int64_t>(samples_per_period) * periods;
    return delta_omega() * static_cast<double>(static_cast<std::int64_t>(j) - center);
}

void IntegerSequence::set(int n, Complex value) {
    if (value == Complex{}) {
        values_.erase(n);
    } else {
        values_[n] = value;
    }
}

Complex IntegerSequence::at(int n) const {
    auto it = values_.find(n);
    return it != values_.end() ? it->second : Complex{};
}

int IntegerSequence::min_index() const { return values_.empty() ? 0 : values_.begin()->first; }
int IntegerSequence::max_index() const { return values_.empty() ? 0 : values_.rbegin()->first; }

int IntegerSequence::max_abs_index() const {
    return std::max(std::abs(min_index()), std::abs(max_index()));
}

double IntegerSequence::l1_norm() const {
    double s = 0.0;
    for (const auto& [n, v] : values_) s += std::abs(v);
    return s;
}

double IntegerSequence::l2_norm() const {
    double s = 0.0;
    for (const auto& [n, v] : values_) s += std::norm(v);
    return std::sqrt(s);
}

SampledLineFunction::SampledLineFunction(FrequencyGrid grid, std::vector<Complex> samples,
                                         double tail_bound)
    : grid_(grid), samples_(std::move(samples)), tail_bound_(tail_bound) {
    if (samples_.size() != grid_.size())
        throw std::invalid_argument("sample count does not match the grid");
}

SampledLineFunction SampledLineFunction::zero(const FrequencyGrid& grid) {
    return SampledLineFunction(grid, std::vector<Complex>(grid.size()), 0.0);
}

SampledLineFunction::ANorm SampledLineFunction::a_norm() const {
    double sum = 0.0;
    for (const auto& s : samples_) sum += std::abs(s);
    sum -= 0.5 * (std::abs(samples_.front()) + std::abs(samples_.back()));
    return ANorm{sum * grid_.delta_omega() / kTwoPi, tail_bound_};
}

Complex SampledLineFunction::evaluate(double x) const {
    const double dw = grid_.delta_omega();
    const Complex step = std::polar(1.0, dw * x);
    Complex acc{};
    Complex rot{};
    constexpr std::size_t kResync = 8192;
    for (std::size_t j = 0; j < samples_.size(); ++j) {
        if (j % kResync == 0) rot = std::polar(1.0, grid_.omega(j) * x);
        double weight = (j == 0 || j + 1 == samples_.size()) ? 0.5 : 1.0;
        acc += weight * samples_[j] * rot;
        rot *= step;
    }
    return acc * (dw / kTwoPi);
}

std::vector<Complex> SampledLineFunction::integer_values(int n_min, int n_max) const {
    if (n_min > n_max) throw std::invalid_argument("empty integer range");
    const int bound = max_integer_range();
    if (std::abs(n_min) > bound || std::abs(n_max) > bound)
        throw GridResolutionError("integer range exceeds the alias-free window of the grid");

    // Fold the trapezoid sum onto one period: e^{i omega n} has period 2pi in
    // omega for integer n, so samples in the same residue class share the
    // phase factor exactly.
    const int m = grid_.samples_per_period;
    std::vector<Complex> folded(static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < samples_.size(); ++j) {
        const double weight = (j == 0 || j + 1 == samples_.size()) ? 0.5 : 1.0;
        folded[j % m] += weight * samples_[j];
    }
    const double dw = grid_.delta_omega();
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        Complex acc{};
        for (int r = 0; r < m; ++r) acc += folded[static_cast<std::size_t>(r)] *
                                           std::polar(1.0, grid_.omega(static_cast<std::size_t>(r)) * n);
        out.push_back(acc * (dw / kTwoPi));
    }
    return out;
}

IntegerSequence SampledLineFunction::integer_restriction() const {
    const int bound = max_integer_range();
    const auto vals = integer_values(-bound, bound);
    IntegerSequence seq;
    for (int n = -bound; n <= bound; ++n)
        seq.set(n, vals[static_cast<std::size_t>(n + bound)]);
    return seq;
}

SampledLineFunction SampledLineFunction::operator-(const SampledLineFunction& other) const {
    if (!(grid_ == other.grid_)) throw std::invalid_argument("grids differ");
    std::vector<Complex> diff(samples_.size());
    for (std::size_t j = 0; j < samples_.size(); ++j) diff[j] = samples_[j] - other.samples_[j];
    return SampledLineFunction(grid_, std::move(diff), tail_bound_ + other.tail_bound_);
}

SampledLineFunction SampledLineFunction::scaled(Complex factor) const {
    std::vector<Complex> out = samples_;
    for (auto& s : out) s *= factor;
    return SampledLineFunction(grid_, std::move(out), tail_bound_ * std::abs(factor));
}

bool check_uniformly_discrete(const std::vector<double>& points, double delta) {
    if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
    std::vector<double> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] - sorted[i - 1] < 2.0 * delta) return false;
    }
    return true;
}

DenseMatrix ons_gram(const std::vector<int>& points, double delta) {
    const LineBump bump(delta);
    const std::size_t n = points.size();
    DenseMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = bump.value(static_cast<double>(points[i]) - static_cast<double>(points[j]));
    return g;
}

SampledLineFunction gamma_interpolate(const IntegerSequence& phi, double delta,
                                      const FrequencyGrid& grid) {
    const LineBump bump(delta);
    const double bump_tail = bump.tail_mass_bound(grid.omega_max());
    if (bump_tail > kBumpTailRequirement)
        throw GridResolutionError(
            "grid does not certify the required bump tail: increase the period count");
    if (!phi.empty() && phi.max_abs_index() >= grid.samples_per_period / 4)
        throw GridResolutionError(
            "sequence support exceeds the alias-free window: increase samples per period");

    // m(omega) = sum_n phi(n) e^{-i n omega} is 2pi-periodic and the grid is
    // commensurate, so one period of values tiles the whole grid exactly.
    const int m = grid.samples_per_period;
    std::vector<Complex> tile(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        const double omega = grid.omega(static_cast<std::size_t>(r));
        Complex acc{};
        for (const auto& [n, v] : phi.values()) acc += v * std::polar(1.0, -omega * n);
        tile[static_cast<std::size_t>(r)] = acc;
    }
    std::vector<Complex> samples(grid.size());
    for (std::size_t j = 0; j < samples.size(); ++j)
        samples[j] = bump.hat(grid.omega(j)) * tile[j % static_cast<std::size_t>(m)];
    return SampledLineFunction(grid, std::move(samples), phi.l1_norm() * bump_tail);
}

SampledLineFunction complement_projection(const SampledLineFunction& v, double delta) {
    const IntegerSequence restriction = v.integer_restriction();
    return v - gamma_interpolate(restriction, delta, v.grid());
}

double sin_conjugation_residual(double delta, double shift, const std::vector<double>& xs) {
    const LineBump bump(delta);
    double residual = 0.0;
    for (double x : xs)
        residual = std::max(residual, std::abs(bump.value((x + shift) - shift) - bump.value(x)));
    return residual;
}

void write_function(std::ostream& out, const SampledLineFunction& f) {
    out.precision(17);
    out << f.grid().omega_max() << ' ' << f.grid().delta_omega() << '\n';
    for (const auto& s : f.samples()) out << s.real() << ' ' << s.imag() << '\n';
}

SampledLineFunction read_function(std::istream& in) {
    double omega_max = 0.0, delta_omega = 0.0;
    if (!(in >> omega_max >> delta_omega))
        throw ParseError("function file: malformed header", 0);
    const int m = static_cast<int>(std::lround(kTwoPi / delta_omega));
    const int k = static_cast<int>(std::lround(omega_max / kTwoPi));
    if (m < 4 || k < 1 || std::abs(kTwoPi / m - delta_omega) > 1e-9 ||
        std::abs(kTwoPi * k - omega_max) > 1e-6)
        throw ParseError("function file: grid is not commensurate with 2pi", 0);
    FrequencyGrid grid{m, k};
    std::vector<Complex> samples;
    samples.reserve(grid.size());
    double re, im;
    while (in >> re >> im) samples.emplace_back(re, im);
    if (samples.size() != grid.size())
        throw ParseError("function file: expected " + std::to_string(grid.size()) +
                             " samples, found " + std::to_string(samples.size()),
                         0);
    return SampledLineFunction(grid, std::move(samples), 0.0);
}

SampledLineFunction read_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open function file: " + path);
    return read_function(in);
}

IntegerSequence read_sequence(std::istream& in) {
    IntegerSequence seq;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long n;
        double re, im;
        if (!(ls >> n)) continue;
        if (!(ls >> re >> im))
            throw ParseError("sequence line " + std::to_string(line_no) +
                                 ": expected 'n re im'",
                             0);
        seq.set(static_cast<int>(n), Complex(re, im));
    }
    return seq;
}

IntegerSequence read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence file: " + path);
    return read_sequence(in);
}

} // namespace freeharm
