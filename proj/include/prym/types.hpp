#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace prym {

// All lattice computations run over int64. Entries stay far below the
// overflow threshold for the word lengths and genera this library accepts;
// eval paths guard against silent wraparound (see checked_mul / guard_entries).
using Int = std::int64_t;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using Cplx = std::complex<double>;

} // namespace prym
