#include "freeharm/schur.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "freeharm/errors.hpp"

namespace freeharm {

namespace {

double euclidean_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

} // namespace

SchurSymbol::SchurSymbol(DenseMatrix values) : values_(std::move(values)) {
    if (!values_.is_square()) throw std::invalid_argument("symbol must be square");
}

SchurSymbol SchurSymbol::all_ones(std::size_t n) {
    DenseMatrix m(n, n);
    for (auto& v : m.data()) v = 1.0;
    return SchurSymbol(std::move(m));
}

SchurSymbol SchurSymbol::diagonal_pattern(std::size_t n) {
    return SchurSymbol(DenseMatrix::identity(n));
}

SchurSymbol SchurSymbol::upper_triangular(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) m(j, k) = 1.0;
    return SchurSymbol(std::move(m));
}

DenseMatrix schur_apply(const SchurSymbol& symbol, const DenseMatrix& t) {
    if (t.rows() != symbol.dim() || t.cols() != symbol.dim())
        throw std::invalid_argument("symbol and matrix dimensions do not match");
    DenseMatrix out = t;
    const auto& s = symbol.values().data();
    for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] *= s[k];
    return out;
}

FactorizationPair::FactorizationPair(const SchurSymbol& symbol,
                                     std::vector<std::vector<Complex>> xi,
                                     std::vector<std::vector<Complex>> eta, double check_tol)
    : xi_(std::move(xi)), eta_(std::move(eta)) {
    const std::size_t n = symbol.dim();
    if (xi_.size() != n || eta_.size() != n)
        throw std::invalid_argument("factorization family size does not match the symbol");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (xi_[j].size() != eta_[i].size())
                throw std::invalid_argument("factorization vectors live in different spaces");
            Complex inner{};
            for (std::size_t k = 0; k < xi_[j].size(); ++k)
                inner += xi_[j][k] * std::conj(eta_[i][k]);
            if (std::abs(inner - symbol.values()(i, j)) > check_tol)
                throw std::invalid_argument(
                    "factorization does not reproduce the symbol at (" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
        }
    }
}

double FactorizationPair::upper_bound() const {
    double sup_xi = 0.0, sup_eta = 0.0;
    for (const auto& v : xi_) sup_xi = std::max(sup_xi, euclidean_norm(v));
    for (const auto& v : eta_) sup_eta = std::max(sup_eta, euclidean_norm(v));
    return sup_xi * sup_eta;
}

FactorizationPair triangular_partial_sum_factorization(std::size_t n) {
    std::vector<std::vector<Complex>> xi(n), eta(n);
    for (std::size_t j = 0; j < n; ++j) {
        xi[j].assign(n, Complex{});
        for (std::size_t k = 0; k <= j; ++k) xi[j][k] = 1.0;
        eta[j].assign(n, Complex{});
        eta[j][j] = 1.0;
    }
    return FactorizationPair(SchurSymbol::upper_triangular(n), std::move(xi), std::move(eta));
}

double schur_norm_lower_bound(const SchurSymbol& symbol, const DenseMatrix& t, double tol) {
    if (t.is_zero()) throw std::invalid_argument("test matrix must be nonzero");
    const double denom = spectral_norm(t, tol).value;
    const double numer = spectral_norm(schur_apply(symbol, t), tol).value;
    return numer / denom;
}

DenseMatrix hilbert_kernel(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (j != k)
                m(j, k) = 1.0 / (static_cast<double>(j) - static_cast<double>(k));
    return m;
}

DenseMatrix triangular_truncation(const DenseMatrix& t) {
    DenseMatrix out = t;
    for (std::size_t j = 0; j < t.rows(); ++j)
        for (std::size_t k = 0; k < std::min(j, t.cols()); ++k) out(j, k) = Complex{};
    return out;
}

std::vector<TriangularSweepEntry> triangular_growth_sweep(const std::vector<std::size_t>& dims,
                                                          double tol, std::size_t dim_cap) {
    std::vector<TriangularSweepEntry> out;
    for (std::size_t n : dims) {
        if (n > dim_cap)
            throw ResourceError("sweep dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(dim_cap));
        TriangularSweepEntry entry;
        entry.n = n;
        if (n <= 1) {
            entry.skipped = true;
            out.push_back(entry);
            continue;
        }
        const DenseMatrix h = hilbert_kernel(n);
        entry.norm_h = spectral_norm(h, tol);
        entry.norm_tri = spectral_norm(triangular_truncation(h), tol);
        entry.rho = entry.norm_tri.value / entry.norm_h.value;
        out.push_back(entry);
    }
    return out;
}

DenseMatrix read_matrix(std::istream& in) {
    long n = 0;
    if (!(in >> n) || n < 1) throw ParseError("matrix file: expected dimension on line 1", 0);
    DenseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string token;
            if (!(in >> token))
                throw ParseError("matrix file: missing entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")",
                                 0);
            const auto comma = token.find(',');
            if (comma == std::string::npos)
                throw ParseError("matrix file: entries must be 're,im' pairs", 0);
            try {
                m(i, j) = Complex(std::stod(token.substr(0, comma)),
                                  std::stod(token.substr(comma + 1)));
            } catch (const std::exception&) {
                throw ParseError("matrix file: malformed entry '" + token + "'", 0);
            }
        }
    }
    return m;
}

DenseMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
    out.precision(17);
    out << m.rows() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j).real() << ',' << m(i, j).imag();
        }
        out << '\n';
    }
}

} // namespace freeharm
