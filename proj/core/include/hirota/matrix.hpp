#pragma once

#include <Eigen/Dense>

#include "hirota/soliton.hpp"

namespace hirota {

/// Dense N x N complex matrix (row-major), used for B, D, B_x and the
/// resolvent algebra.
using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;

}  // namespace hirota
