#include "btes/mpc/qp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "btes/errors.hpp"

namespace btes {

const char* to_string(QpStatus s) {
  switch (s) {
    case QpStatus::Optimal: return "optimal";
    case QpStatus::MaxIterations: return "max-iterations";
    case QpStatus::InfeasibleDetected: return "infeasible-detected";
  }
  return "unknown";
}

namespace {

struct Problem {
  Eigen::MatrixXd P;  // 2 * hessian, so the objective is 1/2 u'Pu + q'u
  Eigen::VectorXd q;
  Eigen::MatrixXd C;  // [I; state rows]
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  int H = 0;
  int m = 0;  // total constraint count
};

Problem build_problem(const CondensedQp& qp) {
  Problem p;
  p.H = static_cast<int>(qp.hessian.rows());
  p.m = p.H + static_cast<int>(qp.ineq_rows.size());
  p.P = 2.0 * qp.hessian;
  p.q = qp.gradient;
  p.C = Eigen::MatrixXd::Zero(p.m, p.H);
  p.lo.resize(p.m);
  p.hi.resize(p.m);
  for (int i = 0; i < p.H; ++i) {
    p.C(i, i) = 1.0;
    p.lo(i) = qp.u_lo;
    p.hi(i) = qp.u_hi;
  }
  for (size_t r = 0; r < qp.ineq_rows.size(); ++r) {
    const auto& row = qp.ineq_rows[r];
    const int i = p.H + static_cast<int>(r);
    for (const auto& [j, v] : row.coeffs) p.C(i, j) = v;
    p.lo(i) = row.lo;
    p.hi(i) = row.hi;
  }
  return p;
}

double kkt_residual_impl(const Problem& p, const Eigen::VectorXd& u, const Eigen::VectorXd& y) {
  const Eigen::VectorXd cu = p.C * u;
  const Eigen::VectorXd stat = p.P * u + p.q + p.C.transpose() * y;
  double res = stat.lpNorm<Eigen::Infinity>();
  for (int i = 0; i < p.m; ++i) {
    res = std::max(res, cu(i) - p.hi(i));
    res = std::max(res, p.lo(i) - cu(i));
    // Complementarity: a positive multiplier pins the upper bound, a
    // negative one the lower bound.
    if (y(i) > 0) res = std::max(res, y(i) * std::abs(p.hi(i) - cu(i)) /
                                          std::max(1.0, std::abs(y(i))));
    if (y(i) < 0) res = std::max(res, -y(i) * std::abs(cu(i) - p.lo(i)) /
                                          std::max(1.0, std::abs(y(i))));
  }
  return res;
}

/// Equality-constrained polish on the active set implied by the multipliers.
/// Returns true when the polished point passes the full KKT check at `tol`.
bool try_polish(const Problem& p, double tol, Eigen::VectorXd& u, Eigen::VectorXd& y) {
  const Eigen::VectorXd cu = p.C * u;
  const double act_tol = std::max(10.0 * tol, 1e-10);

  std::vector<int> active;
  std::vector<int> side;  // -1 lower, +1 upper
  for (int i = 0; i < p.m; ++i) {
    if (cu(i) >= p.hi(i) - act_tol || y(i) > act_tol) {
      active.push_back(i);
      side.push_back(+1);
    } else if (cu(i) <= p.lo(i) + act_tol || y(i) < -act_tol) {
      active.push_back(i);
      side.push_back(-1);
    }
  }

  for (int round = 0; round < 8; ++round) {
    const int na = static_cast<int>(active.size());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(p.H + na, p.H + na);
    kkt.topLeftCorner(p.H, p.H) = p.P;
    Eigen::VectorXd rhs(p.H + na);
    rhs.head(p.H) = -p.q;
    for (int a = 0; a < na; ++a) {
      kkt.block(p.H + a, 0, 1, p.H) = p.C.row(active[a]);
      kkt.block(0, p.H + a, p.H, 1) = p.C.row(active[a]).transpose();
      kkt(p.H + a, p.H + a) = -1e-12;
      rhs(p.H + a) = side[a] > 0 ? p.hi(active[a]) : p.lo(active[a]);
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(kkt);
    Eigen::VectorXd sol = lu.solve(rhs);
    sol += lu.solve(rhs - kkt * sol);  // one refinement step

    Eigen::VectorXd u_p = sol.head(p.H);
    Eigen::VectorXd y_p = Eigen::VectorXd::Zero(p.m);
    bool signs_ok = true;
    std::vector<int> keep_active, keep_side;
    for (int a = 0; a < na; ++a) {
      const double lambda = sol(p.H + a);
      if (side[a] > 0 ? lambda < -act_tol : lambda > act_tol) {
        signs_ok = false;  // wrong-signed multiplier: drop the constraint
        continue;
      }
      y_p(active[a]) = lambda;
      keep_active.push_back(active[a]);
      keep_side.push_back(side[a]);
    }
    if (!signs_ok) {
      active = std::move(keep_active);
      side = std::move(keep_side);
      continue;
    }

    // Inactive constraints must hold at the polished point.
    const Eigen::VectorXd cu_p = p.C * u_p;
    bool feasible = true;
    for (int i = 0; i < p.m && feasible; ++i) {
      feasible = cu_p(i) >= p.lo(i) - tol && cu_p(i) <= p.hi(i) + tol;
    }
    if (feasible && kkt_residual_impl(p, u_p, y_p) <= tol) {
      u = u_p;
      y = y_p;
      return true;
    }
    if (feasible) return false;

    // Add the most violated constraint and retry.
    int worst = -1;
    double worst_v = tol;
    int worst_side = 0;
    for (int i = 0; i < p.m; ++i) {
      if (std::find(active.begin(), active.end(), i) != active.end()) continue;
      const double v_hi = cu_p(i) - p.hi(i);
      const double v_lo = p.lo(i) - cu_p(i);
      if (v_hi > worst_v) {
        worst_v = v_hi;
        worst = i;
        worst_side = +1;
      }
      if (v_lo > worst_v) {
        worst_v = v_lo;
        worst = i;
        worst_side = -1;
      }
    }
    if (worst < 0) return false;
    active.push_back(worst);
    side.push_back(worst_side);
  }
  return false;
}

}  // namespace

double kkt_residual(const CondensedQp& qp, const Eigen::VectorXd& u, const Eigen::VectorXd& y) {
  return kkt_residual_impl(build_problem(qp), u, y);
}

QpSolution solve_qp(const CondensedQp& qp, const QpSettings& settings,
                    const Eigen::VectorXd* warm_start) {
  const Problem p = build_problem(qp);

  QpSolution sol;
  sol.u = Eigen::VectorXd::Zero(p.H);

  for (int i = 0; i < p.m; ++i) {
    if (p.lo(i) > p.hi(i) + settings.tolerance) {
      sol.status = QpStatus::InfeasibleDetected;
      sol.kkt_residual = std::numeric_limits<double>::infinity();
      return sol;
    }
  }

  Eigen::VectorXd x = (warm_start != nullptr && warm_start->size() == p.H)
                          ? *warm_start
                          : Eigen::VectorXd::Zero(p.H);
  Eigen::VectorXd z = (p.C * x).cwiseMax(p.lo).cwiseMin(p.hi);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(p.m);

  double rho = settings.rho;
  auto factorize = [&](double r) {
    return Eigen::LLT<Eigen::MatrixXd>(
        p.P + settings.sigma * Eigen::MatrixXd::Identity(p.H, p.H) +
        r * p.C.transpose() * p.C);
  };
  Eigen::LLT<Eigen::MatrixXd> llt = factorize(rho);

  // ADMM runs to a loose target first; the active-set polish then certifies
  // the exact KKT conditions. If polish fails the target tightens.
  const double q_scale = std::max(1.0, p.q.lpNorm<Eigen::Infinity>());
  double admm_target = std::max(settings.tolerance, 1e-4 * q_scale);

  int it = 0;
  for (; it < settings.max_iter; ++it) {
    const Eigen::VectorXd rhs = settings.sigma * x - p.q + p.C.transpose() * (rho * z - y);
    x = llt.solve(rhs);
    const Eigen::VectorXd cx = p.C * x;
    const Eigen::VectorXd cx_rel = settings.alpha * cx + (1.0 - settings.alpha) * z;
    const Eigen::VectorXd z_new = (cx_rel + y / rho).cwiseMax(p.lo).cwiseMin(p.hi);
    y += rho * (cx_rel - z_new);
    z = z_new;

    if ((it + 1) % 25 == 0) {
      const double r_prim = (cx - z).lpNorm<Eigen::Infinity>();
      const double r_dual =
          (p.P * x + p.q + p.C.transpose() * y).lpNorm<Eigen::Infinity>();
      if (r_prim <= admm_target && r_dual <= admm_target) {
        Eigen::VectorXd u_try = x, y_try = y;
        if (try_polish(p, settings.tolerance, u_try, y_try)) {
          sol.u = u_try;
          sol.kkt_residual = kkt_residual_impl(p, u_try, y_try);
          sol.status = QpStatus::Optimal;
          sol.iterations = it + 1;
          sol.objective = u_try.dot(qp.hessian * u_try) + qp.gradient.dot(u_try);
          return sol;
        }
        if (r_prim <= settings.tolerance && r_dual <= settings.tolerance) {
          break;  // raw iterate already meets the tolerance
        }
        admm_target = std::max(settings.tolerance, admm_target / 10.0);
      }

      // Mild residual balancing.
      if ((it + 1) % 200 == 0 && r_prim > 0 && r_dual > 0) {
        const double ratio = std::sqrt(r_prim / r_dual);
        if (ratio > 5.0 || ratio < 0.2) {
          rho = std::clamp(rho * ratio, 1e-6, 1e6);
          llt = factorize(rho);
        }
      }
    }
  }

  sol.u = x;
  sol.iterations = it;
  sol.kkt_residual = kkt_residual_impl(p, x, y);
  sol.status = sol.kkt_residual <= settings.tolerance ? QpStatus::Optimal
                                                      : QpStatus::MaxIterations;
  sol.objective = x.dot(qp.hessian * x) + qp.gradient.dot(x);
  return sol;
}

}  // namespace btes
