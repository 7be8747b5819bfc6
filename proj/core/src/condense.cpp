#include "btes/mpc/condense.hpp"

#include <cmath>

#include "btes/errors.hpp"

namespace btes {

CondenseWorkspace build_condense_workspace(const AffineSystem& sys, int H) {
  if (H < 1) throw ArgumentError("condense: horizon must be >= 1");
  const int n = sys.layout.n();

  CondenseWorkspace ws;
  ws.H = H;
  ws.gamma.resize(n, H);
  ws.f_tail.resize(n, H + 1);
  ws.gamma_abs_cum.resize(n, H);

  // The sampled one-step map (dt, not the substep generator) drives the
  // prediction: Gamma_i = A_eff^i B_eff and tails of f_eff.
  std::vector<double> cur = sys.effective_B();
  const std::vector<double> f_eff = sys.effective_f();
  std::vector<double> next(n);
  for (int i = 0; i < H; ++i) {
    for (int r = 0; r < n; ++r) ws.gamma(r, i) = cur[r];
    sys.apply_A_eff(cur, next);
    cur.swap(next);
  }

  ws.f_tail.col(0).setZero();
  std::vector<double> tail(n, 0.0);
  for (int k = 1; k <= H; ++k) {
    sys.apply_A_eff(tail, next);
    for (int r = 0; r < n; ++r) tail[r] = next[r] + f_eff[r];
    for (int r = 0; r < n; ++r) ws.f_tail(r, k) = tail[r];
  }

  ws.gamma_abs_cum.col(0) = ws.gamma.col(0).cwiseAbs();
  for (int k = 1; k < H; ++k) {
    ws.gamma_abs_cum.col(k) = ws.gamma_abs_cum.col(k - 1) + ws.gamma.col(k).cwiseAbs();
  }
  return ws;
}

CondensedQp condense(const AffineSystem& sys, const CondenseWorkspace& ws,
                     const OcpConfig& ocp, std::span<const double> x_now,
                     double u_prev, std::span<const double> y_ref) {
  ocp.validate();
  const int H = ocp.H;
  if (ws.H != H) throw ArgumentError("condense: workspace horizon mismatch");
  if (static_cast<int>(x_now.size()) != sys.layout.n()) {
    throw ArgumentError("condense: state dimension mismatch");
  }
  if (static_cast<int>(y_ref.size()) != H) {
    throw ArgumentError("condense: reference window must have length H");
  }
  if (!std::isfinite(u_prev)) throw ArgumentError("condense: non-finite u_prev");
  for (const double v : y_ref) {
    if (!std::isfinite(v)) throw ArgumentError("condense: non-finite reference");
  }

  CondensedQp qp;
  qp.u_lo = ocp.u_lo;
  qp.u_hi = ocp.u_hi;

  // sum_k R (u_k - y_k)^2 + Q (u_k - u_{k-1})^2 with u_{-1} = u_prev, as
  // u' hessian u + gradient' u (+ const).
  qp.hessian = Eigen::MatrixXd::Zero(H, H);
  qp.gradient = Eigen::VectorXd::Zero(H);
  for (int k = 0; k < H; ++k) {
    qp.hessian(k, k) += ocp.R;
    qp.gradient(k) -= 2.0 * ocp.R * y_ref[k];
  }
  qp.hessian(0, 0) += ocp.Q;
  qp.gradient(0) -= 2.0 * ocp.Q * u_prev;
  for (int k = 1; k < H; ++k) {
    qp.hessian(k, k) += ocp.Q;
    qp.hessian(k - 1, k - 1) += ocp.Q;
    qp.hessian(k, k - 1) -= ocp.Q;
    qp.hessian(k - 1, k) -= ocp.Q;
  }

  if (ocp.constrained == ConstrainedStates::None) return qp;

  // State bounds over the condensed prediction, x_lo <= x(k) <= x_hi for
  // k = 1..H. x(k) = A^k x0 + f tail + sum_j Gamma_{k-1-j} u_j. Rows whose
  // response magnitude cannot bridge the gap to either bound for any input
  // in the box are provably inactive and dropped.
  const double u_absmax = std::max(std::abs(ocp.u_lo), std::abs(ocp.u_hi));
  const int n = sys.layout.n();

  std::vector<double> drift(x_now.begin(), x_now.end());
  std::vector<double> next(n);
  const std::vector<double> f_eff = sys.effective_f();

  const bool all = ocp.constrained == ConstrainedStates::All;
  for (int k = 1; k <= H; ++k) {
    sys.apply_A_eff(drift, next);
    for (int r = 0; r < n; ++r) drift[r] = next[r] + f_eff[r];

    auto consider = [&](int state) {
      const double d = drift[state];
      const double slack = u_absmax * ws.gamma_abs_cum(state, k - 1);
      if (d - slack >= ocp.x_lo && d + slack <= ocp.x_hi) return;
      ConstraintRow row;
      row.lo = ocp.x_lo - d;
      row.hi = ocp.x_hi - d;
      for (int j = 0; j < k; ++j) {
        const double c = ws.gamma(state, k - 1 - j);
        if (c != 0) row.coeffs.push_back({j, c});
      }
      if (!row.coeffs.empty()) qp.ineq_rows.push_back(std::move(row));
    };

    if (all) {
      for (int state = 0; state < n; ++state) consider(state);
    } else {
      for (const int state : ocp.constrained_list) {
        if (state < 0 || state >= n) throw ArgumentError("condense: constrained state out of range");
        consider(state);
      }
    }
  }
  return qp;
}

Eigen::VectorXd predict_state(const AffineSystem& sys, const CondenseWorkspace& ws,
                              std::span<const double> x_now,
                              std::span<const double> u_seq, int k) {
  if (k < 0 || k > ws.H) throw ArgumentError("predict_state: step out of range");
  if (static_cast<int>(u_seq.size()) < k) {
    throw ArgumentError("predict_state: input sequence shorter than k");
  }
  // Condensed route: A^k x0 + cached affine tail + impulse-response columns.
  const int n = sys.layout.n();
  std::vector<double> x(x_now.begin(), x_now.end());
  std::vector<double> next(n);
  for (int i = 0; i < k; ++i) {
    sys.apply_A_eff(x, next);
    x.swap(next);
  }
  Eigen::VectorXd out = Eigen::Map<const Eigen::VectorXd>(x.data(), n);
  out += ws.f_tail.col(k);
  for (int j = 0; j < k; ++j) {
    out += ws.gamma.col(k - 1 - j) * u_seq[j];
  }
  return out;
}

}  // namespace btes
