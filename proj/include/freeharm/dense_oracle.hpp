#pragma once

#include "freeharm/dense.hpp"
#include "freeharm/power_iteration.hpp"

namespace freeharm {

/// Largest singular value by full dense SVD. Independent reference route for
/// the power-iteration engine; not used by any production code path.
double dense_sigma_max(const DenseMatrix& m);

/// Materializes a LinearOperator column by column. Guarded: refuses
/// dimensions above max_dim.
DenseMatrix densify(const LinearOperator& op, std::size_t max_dim = 4096);

} // namespace freeharm
