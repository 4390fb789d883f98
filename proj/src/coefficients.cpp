#include "freeharm/coefficients.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "freeharm/errors.hpp"
#include "freeharm/power_iteration.hpp"

namespace freeharm {

namespace {

// Block norms feed upper bounds, so they are computed essentially to
// roundoff; the d x d problems here are tiny.
double block_operator_norm(const DenseMatrix& block) {
    if (block.rows() == 1 && block.cols() == 1) return std::abs(block(0, 0));
    return spectral_norm(block, 1e-13, 50'000).value;
}

} // namespace

CoefficientFunction::CoefficientFunction(int block_dim) : block_dim_(block_dim) {
    if (block_dim < 1) throw std::invalid_argument("block dimension must be >= 1");
}

void CoefficientFunction::set(const Word& w, DenseMatrix block) {
    if (block.rows() != static_cast<std::size_t>(block_dim_) ||
        block.cols() != static_cast<std::size_t>(block_dim_))
        throw std::invalid_argument("block dimension mismatch");
    if (block.is_zero()) {
        values_.erase(w);
    } else {
        values_.insert_or_assign(w, std::move(block));
    }
}

void CoefficientFunction::set_scalar(const Word& w, Complex value) {
    if (block_dim_ != 1) throw std::invalid_argument("scalar assignment on block function");
    DenseMatrix m(1, 1);
    m(0, 0) = value;
    set(w, std::move(m));
}

DenseMatrix CoefficientFunction::at(const Word& w) const {
    auto it = values_.find(w);
    if (it != values_.end()) return it->second;
    return DenseMatrix(static_cast<std::size_t>(block_dim_),
                       static_cast<std::size_t>(block_dim_));
}

Complex CoefficientFunction::scalar_at(const Word& w) const {
    if (block_dim_ != 1) throw std::invalid_argument("scalar access on block function");
    auto it = values_.find(w);
    return it != values_.end() ? it->second(0, 0) : Complex{};
}

CoefficientFunction CoefficientFunction::delta(const Word& w, Complex value) {
    CoefficientFunction f(1);
    f.set_scalar(w, value);
    return f;
}

int CoefficientFunction::max_generator_index() const {
    int m = 0;
    for (const auto& [w, block] : values_) m = std::max(m, w.max_generator_index());
    return m;
}

std::size_t CoefficientFunction::max_word_length() const {
    std::size_t m = 0;
    for (const auto& [w, block] : values_) m = std::max(m, w.length());
    return m;
}

CoefficientFunction indicator(const GroupElementSet& set, const CayleyBall& support_bound) {
    CoefficientFunction f(1);
    for (const auto& w : set.elements()) {
        if (support_bound.index_of(w)) f.set_scalar(w, 1.0);
    }
    return f;
}

double haagerup_sup_term(const CoefficientFunction& phi) {
    if (phi.block_dim() != 1)
        throw std::invalid_argument("multiplier bound requires a scalar function");
    double sup = 0.0;
    for (const auto& [g, block] : phi.values()) {
        const double factor = 1.0 + static_cast<double>(g.length());
        sup = std::max(sup, std::abs(block(0, 0)) * factor * factor);
    }
    return sup;
}

double haagerup_bound(const CoefficientFunction& phi) { return 2.0 * haagerup_sup_term(phi); }

RowColumnBounds row_column_bounds(const CoefficientFunction& a) {
    const auto d = static_cast<std::size_t>(a.block_dim());
    DenseMatrix col_sum(d, d); // sum a(h)* a(h)
    DenseMatrix row_sum(d, d); // sum a(h) a(h)*
    for (const auto& [h, block] : a.values()) {
        const DenseMatrix adj = block.adjoint();
        col_sum += adj * block;
        row_sum += block * adj;
    }
    RowColumnBounds out;
    out.col = std::sqrt(block_operator_norm(col_sum));
    out.row = std::sqrt(block_operator_norm(row_sum));
    return out;
}

double l1_bound(const CoefficientFunction& a) {
    double s = 0.0;
    for (const auto& [h, block] : a.values()) s += block_operator_norm(block);
    return s;
}

CoefficientFunction vn_restrict(const CoefficientFunction& T, const GroupElementSet& E) {
    CoefficientFunction out(T.block_dim());
    for (const auto& [h, block] : T.values()) {
        if (E.contains(h)) out.set(h, block);
    }
    return out;
}

CoefficientFunction pointwise_product(const CoefficientFunction& v,
                                      const CoefficientFunction& T) {
    if (v.block_dim() != 1) throw std::invalid_argument("pointwise action requires scalar v");
    CoefficientFunction out(T.block_dim());
    for (const auto& [h, block] : T.values()) {
        if (!v.supported_on(h)) continue;
        DenseMatrix scaled = block;
        scaled *= v.scalar_at(h);
        out.set(h, std::move(scaled));
    }
    return out;
}

CoefficientFunction read_coefficients(std::istream& in) {
    std::string line;
    int block_dim = 0;
    CoefficientFunction out(1);
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word_text;
        if (!(ls >> word_text)) continue;
        std::vector<double> nums;
        double x;
        while (ls >> x) nums.push_back(x);
        if (nums.empty() || nums.size() % 2 != 0)
            throw ParseError("coefficient line " + std::to_string(line_no) +
                                 ": expected an even, positive number of values",
                             0);
        const auto pairs = nums.size() / 2;
        const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(pairs))));
        if (static_cast<std::size_t>(d) * static_cast<std::size_t>(d) != pairs)
            throw ParseError("coefficient line " + std::to_string(line_no) +
                                 ": value count is not 2*d^2",
                             0);
        if (block_dim == 0) {
            block_dim = d;
            out = CoefficientFunction(block_dim);
        } else if (d != block_dim) {
            throw ParseError("coefficient line " + std::to_string(line_no) +
                                 ": block dimension changed mid-file",
                             0);
        }
        const Word w = parse_word(word_text);
        if (out.supported_on(w))
            throw ParseError("coefficient line " + std::to_string(line_no) +
                                 ": duplicate word " + word_text,
                             0);
        DenseMatrix block(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
        for (std::size_t k = 0; k < pairs; ++k)
            block.data()[k] = Complex(nums[2 * k], nums[2 * k + 1]);
        out.set(w, std::move(block));
    }
    return out;
}

CoefficientFunction read_coefficients_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
    return read_coefficients(in);
}

void write_coefficients(std::ostream& out, const CoefficientFunction& a) {
    out.precision(17);
    for (const auto& [w, block] : a.values()) {
        out << format_word(w);
        for (const auto& v : block.data()) out << ' ' << v.real() << ' ' << v.imag();
        out << '\n';
    }
}

} // namespace freeharm
