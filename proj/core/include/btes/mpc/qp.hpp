#pragma once

#include <Eigen/Dense>

#include "btes/mpc/condense.hpp"

namespace btes {

enum class QpStatus { Optimal, MaxIterations, InfeasibleDetected };

const char* to_string(QpStatus s);

struct QpSettings {
  double tolerance = 1e-6;  // absolute KKT residual bound [W]
  int max_iter = 20000;
  double rho = 0.1;    // ADMM penalty
  double sigma = 1e-6; // proximal regularization
  double alpha = 1.6;  // relaxation
};

struct QpSolution {
  Eigen::VectorXd u;
  double objective = 0;
  double kkt_residual = 0;
  int iterations = 0;
  QpStatus status = QpStatus::MaxIterations;
};

/// Operator-splitting (ADMM) solve with an active-set polish step.
/// Deterministic for identical inputs; warm starting changes iteration counts
/// only. Conflicting bounds yield InfeasibleDetected, not a throw.
QpSolution solve_qp(const CondensedQp& qp, const QpSettings& settings = {},
                    const Eigen::VectorXd* warm_start = nullptr);

/// Independent KKT certificate: max of stationarity, primal violation, and
/// complementarity residuals for multipliers y over [box; ineq_rows].
double kkt_residual(const CondensedQp& qp, const Eigen::VectorXd& u,
                    const Eigen::VectorXd& y);

}  // namespace btes
