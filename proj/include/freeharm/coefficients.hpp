#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "freeharm/cayley_ball.hpp"
#include "freeharm/dense.hpp"
#include "freeharm/element_set.hpp"
#include "freeharm/word.hpp"

namespace freeharm {

/// Finitely supported function h -> a(h) on a free group, scalar or with
/// d x d complex matrix blocks. Exact-zero blocks are never stored; support
/// iteration is in shortlex order, so everything built from a coefficient
/// function is deterministic.
class CoefficientFunction {
public:
    explicit CoefficientFunction(int block_dim = 1);

    int block_dim() const noexcept { return block_dim_; }
    bool empty() const noexcept { return values_.empty(); }
    std::size_t support_size() const noexcept { return values_.size(); }
    const std::map<Word, DenseMatrix>& values() const noexcept { return values_; }

    /// Stores (or erases, when the block is exactly zero) the value at w.
    void set(const Word& w, DenseMatrix block);
    void set_scalar(const Word& w, Complex value);

    /// Zero block when w is outside the support.
    DenseMatrix at(const Word& w) const;
    Complex scalar_at(const Word& w) const;
    bool supported_on(const Word& w) const { return values_.count(w) > 0; }

    static CoefficientFunction delta(const Word& w, Complex value = 1.0);

    int max_generator_index() const;
    std::size_t max_word_length() const;

    friend bool operator==(const CoefficientFunction&, const CoefficientFunction&) = default;

private:
    int block_dim_;
    std::map<Word, DenseMatrix> values_;
};

/// 1_{E ∩ B} as a scalar coefficient function.
CoefficientFunction indicator(const GroupElementSet& set, const CayleyBall& support_bound);

/// 2 sup_{g in supp} |phi(g)| (1+|g|)^2 for scalar phi; an upper bound on the
/// multiplier norm of phi on free groups, independent of the number of
/// generators. Returns 0 for the zero function.
double haagerup_bound(const CoefficientFunction& phi);
/// The sup factor alone: max |phi(g)| (1+|g|)^2.
double haagerup_sup_term(const CoefficientFunction& phi);

struct RowColumnBounds {
    double row = 0.0; // || sum a(h) a(h)* ||^{1/2}
    double col = 0.0; // || sum a(h)* a(h) ||^{1/2}
    double max() const { return row > col ? row : col; }
};

/// Row/column square-function norms of a; for scalars both equal the l2
/// norm. Lower bounds for the norm of sum a(h) ⊗ λ(h).
RowColumnBounds row_column_bounds(const CoefficientFunction& a);

/// sum_h ||a(h)||; triangle-inequality upper bound for the convolution norm.
double l1_bound(const CoefficientFunction& a);

/// Zeroes every coefficient at h outside E. Idempotent, and a module map for
/// the pointwise action: vn_restrict(v.T, E) = v . vn_restrict(T, E).
CoefficientFunction vn_restrict(const CoefficientFunction& T, const GroupElementSet& E);

/// Coefficientwise action (v . T)(h) = v(h) T(h) of a scalar v on T.
CoefficientFunction pointwise_product(const CoefficientFunction& v, const CoefficientFunction& T);

/// Coefficient-file format: one word per line followed by 2 numbers
/// (re, im) for scalars or 2 d^2 numbers (row-major re-im pairs) for blocks;
/// '#' comments and blank lines ignored. The block dimension is inferred
/// from the first data line.
CoefficientFunction read_coefficients(std::istream& in);
CoefficientFunction read_coefficients_file(const std::string& path);
void write_coefficients(std::ostream& out, const CoefficientFunction& a);

} // namespace freeharm
