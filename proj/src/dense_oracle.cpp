#include "freeharm/dense_oracle.hpp"

#include <stdexcept>

#include <Eigen/Dense>

#include "freeharm/errors.hpp"

namespace freeharm {

double dense_sigma_max(const DenseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::MatrixXcd a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(static_cast<Eigen::Index>(i),
                                                     static_cast<Eigen::Index>(j)) = m(i, j);
    if (m.rows() <= 256 && m.cols() <= 256) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
        return svd.singularValues()(0);
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    return svd.singularValues()(0);
}

DenseMatrix densify(const LinearOperator& op, std::size_t max_dim) {
    if (op.rows() > max_dim || op.cols() > max_dim)
        throw ResourceError("refusing to densify an operator this large");
    DenseMatrix out(op.rows(), op.cols());
    std::vector<Complex> e(op.cols()), col;
    for (std::size_t j = 0; j < op.cols(); ++j) {
        e.assign(op.cols(), Complex{});
        e[j] = 1.0;
        op.apply(e, col);
        for (std::size_t i = 0; i < op.rows(); ++i) out(i, j) = col[i];
    }
    return out;
}

} // namespace freeharm
