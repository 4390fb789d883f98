#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "freeharm/dense.hpp"
#include "freeharm/power_iteration.hpp"

namespace freeharm {

/// Finite truncation of a Schur-multiplier symbol: an n x n table of values
/// acting entrywise on n x n matrices.
class SchurSymbol {
public:
    explicit SchurSymbol(DenseMatrix values);

    std::size_t dim() const noexcept { return values_.rows(); }
    const DenseMatrix& values() const noexcept { return values_; }

    static SchurSymbol all_ones(std::size_t n);
    static SchurSymbol diagonal_pattern(std::size_t n);
    /// 1 on {(j,k) : j <= k}, 0 below the diagonal.
    static SchurSymbol upper_triangular(std::size_t n);

private:
    DenseMatrix values_;
};

/// Entrywise (Hadamard) action of the symbol.
DenseMatrix schur_apply(const SchurSymbol& symbol, const DenseMatrix& t);

/// Pair of vector families with sigma(i,j) = <xi(j) | eta(i)>; witnesses the
/// factorization upper bound ||S_sigma|| <= sup ||xi|| sup ||eta||.
class FactorizationPair {
public:
    /// Validates the factorization entrywise against the symbol; deviations
    /// above check_tol are rejected.
    FactorizationPair(const SchurSymbol& symbol, std::vector<std::vector<Complex>> xi,
                      std::vector<std::vector<Complex>> eta, double check_tol = 1e-12);

    double upper_bound() const; // sup_j ||xi(j)|| * sup_i ||eta(i)||

private:
    std::vector<std::vector<Complex>> xi_;
    std::vector<std::vector<Complex>> eta_;
};

/// The running-partial-sum factorization of the upper-triangular symbol:
/// xi(j) = e_1 + ... + e_j, eta(i) = e_i; its bound grows like sqrt(n).
FactorizationPair triangular_partial_sum_factorization(std::size_t n);

/// ||sigma ∘ T|| / ||T||, a certified lower bound for the Schur norm of the
/// symbol. Spectral norms come from the shared power-iteration engine.
double schur_norm_lower_bound(const SchurSymbol& symbol, const DenseMatrix& t,
                              double tol = kDefaultNormTol);

/// Hilbert-type kernel H_n(j,k) = 1/(j-k) off the diagonal, 0 on it.
DenseMatrix hilbert_kernel(std::size_t n);

/// Upper-triangular truncation: entries with row <= col retained.
DenseMatrix triangular_truncation(const DenseMatrix& t);

struct TriangularSweepEntry {
    std::size_t n = 0;
    bool skipped = false; // n = 1: H_1 = 0, the ratio is undefined
    NormEstimate norm_h;
    NormEstimate norm_tri;
    double rho = 0.0; // ||Tri(H_n)|| / ||H_n||
};

/// Truncation-growth experiment: for each n computes ||H_n||, ||Tri(H_n)||
/// and their ratio. ||H_n|| stays below pi while the truncated norm grows,
/// which is the desk-scale content of the unboundedness of triangular
/// truncation.
std::vector<TriangularSweepEntry> triangular_growth_sweep(const std::vector<std::size_t>& dims,
                                                          double tol = kDefaultNormTol,
                                                          std::size_t dim_cap = 8192);

/// Matrix-file format: first line n, then n rows of n "re,im" entries
/// separated by whitespace.
DenseMatrix read_matrix(std::istream& in);
DenseMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const DenseMatrix& m);

} // namespace freeharm
