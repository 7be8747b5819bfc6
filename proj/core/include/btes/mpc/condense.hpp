#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "btes/mpc/ocp.hpp"
#include "btes/system.hpp"

namespace btes {

/// Per-system cache for condensing: impulse-response columns Gamma_i = A^i B,
/// affine tails sum_{i<k} A^i f, and cumulative |Gamma| sums used to prove
/// state-bound rows inactive.
struct CondenseWorkspace {
  int H = 0;
  Eigen::MatrixXd gamma;          // n x H, column i = A^i B
  Eigen::MatrixXd f_tail;         // n x (H+1), column k = sum_{i<k} A^i f
  Eigen::MatrixXd gamma_abs_cum;  // n x H, column k-1 = sum_{j<k} |A^j B|
};

CondenseWorkspace build_condense_workspace(const AffineSystem& sys, int H);

struct ConstraintRow {
  std::vector<std::pair<int, double>> coeffs;  // over the H inputs
  double lo = 0;
  double hi = 0;
};

/// One OCP instance over the H inputs only. Objective u' hessian u +
/// gradient' u (+ const); the box applies to every input.
struct CondensedQp {
  Eigen::MatrixXd hessian;
  Eigen::VectorXd gradient;
  std::vector<ConstraintRow> ineq_rows;  // state-bound images
  double u_lo = 0;
  double u_hi = 0;
};

/// Build the condensed tracking QP at state x_now. State-bound rows that can
/// never become active for any input inside the box (proved via the
/// cumulative impulse-response magnitude) are dropped; the remaining rows are
/// exact. y_ref must have length H.
CondensedQp condense(const AffineSystem& sys, const CondenseWorkspace& ws,
                     const OcpConfig& ocp, std::span<const double> x_now,
                     double u_prev, std::span<const double> y_ref);

/// Predicted state k steps ahead for a given input sequence (used by tests
/// and the closed loop for constraint audits).
Eigen::VectorXd predict_state(const AffineSystem& sys, const CondenseWorkspace& ws,
                              std::span<const double> x_now,
                              std::span<const double> u_seq, int k);

}  // namespace btes
