#include "repucost/univariate_cost.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "repucost/error.hpp"
#include "repucost/simplex.hpp"

namespace repu {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

double coef(const std::vector<double>& c, int k) { return k < static_cast<int>(c.size()) ? c[k] : 0.0; }

LambdaCase closed_form_case(double integral, double boundary, double limit_sum) {
  if (boundary > integral * (1.0 + 1e-12) + 1e-300) return limit_sum > 0.0 ? LambdaCase::Negative : LambdaCase::Positive;
  return LambdaCase::Zero;
}

}  // namespace

std::string to_string(LambdaCase c) {
  switch (c) {
    case LambdaCase::Zero:
      return "Lambda=0";
    case LambdaCase::Negative:
      return "Lambda<0";
    case LambdaCase::Positive:
      return "Lambda>0";
  }
  return "unknown";
}

DerivativeData distributional_derivatives(const PiecewisePoly1D& f, int p) {
  require_odd_power(p);
  if (f.degree() > p) throw Error("not RePU-representable at this p");
  if (f.measured_continuity() < p - 1) throw Error("not RePU-representable at this p (not C^(p-1))");
  DerivativeData out;
  const double pf = factorial(p);
  std::vector<std::vector<double>> constants;
  for (const auto& c : f.pieces()) constants.push_back({pf * coef(c, p)});
  out.pth = PiecewisePoly1D(f.breakpoints(), constants);
  std::vector<std::vector<double>> zeros(constants.size(), std::vector<double>{0.0});
  out.next.regular_part = PiecewisePoly1D(f.breakpoints(), zeros);
  for (std::size_t j = 0; j < f.breakpoints().size(); ++j) {
    double jump = constants[j + 1][0] - constants[j][0];
    if (jump != 0.0) out.next.atoms.push_back({f.breakpoints()[j], jump});
  }
  out.limit_minus = constants.front()[0];
  out.limit_plus = constants.back()[0];
  return out;
}

CostReport cost_1d(const PiecewisePoly1D& f, int p) {
  DerivativeData dd = distributional_derivatives(f, p);
  const double pf = factorial(p);
  CostReport rep;
  for (const auto& a : dd.next.atoms) rep.integral_term += std::abs(a.weight);
  rep.integral_term /= pf;
  rep.boundary_term = std::abs(dd.limit_minus + dd.limit_plus) / pf;
  rep.cost = std::pow(std::max(rep.integral_term, rep.boundary_term), 1.0 / p);
  rep.active_case = closed_form_case(rep.integral_term, rep.boundary_term, dd.limit_minus + dd.limit_plus);
  return rep;
}

Eigen::VectorXd moment_targets(const PiecewisePoly1D& f, int p) {
  DerivativeData dd = distributional_derivatives(f, p);
  const double pf = factorial(p);
  // Q(x) = f(x) - f(0) - (1/(2 p!)) sum_j J_j (|x - t_j|^p - |t_j|^p) is a polynomial with
  // Q(0) = 0; read its coefficients off the rightmost piece, where |x - t_j| = x - t_j.
  const auto& last = f.pieces().back();
  Eigen::VectorXd rhs(p);
  for (int k = 1; k <= p; ++k) {
    double q = coef(last, k);
    for (const auto& a : dd.next.atoms) q -= a.weight / (2.0 * pf) * binomial(p, k) * std::pow(-a.location, p - k);
    // Odd part: sum_i m_i ((x - b_i)^p + b_i^p) / 2 must equal Q.
    rhs[p - k] = 2.0 * q * ((p - k) % 2 == 0 ? 1.0 : -1.0) / binomial(p, k);
  }
  return rhs;
}

MomentL1Problem solve_moment_problem(const PiecewisePoly1D& f, int p, double B, double h) {
  DerivativeData dd = distributional_derivatives(f, p);
  const double pf = factorial(p);
  OffsetGrid grid(B, h);

  MomentL1Problem prob;
  prob.p = p;
  std::vector<double> nodes(grid.count);
  for (int j = 0; j < grid.count; ++j) nodes[j] = grid.node(j);
  std::vector<double> target(grid.count, 0.0);
  std::vector<char> is_break(grid.count, 0);
  for (const auto& a : dd.next.atoms) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), a.location);
    std::size_t pos = it - nodes.begin();
    std::size_t nearest = pos;
    if (pos == nodes.size() || (pos > 0 && std::abs(nodes[pos - 1] - a.location) < std::abs(nodes[pos] - a.location)))
      nearest = pos - 1;
    if (std::abs(nodes[nearest] - a.location) <= 1e-9 * h) {
      nodes[nearest] = a.location;
      target[nearest] += a.weight / pf;
      is_break[nearest] = 1;
    } else {
      nodes.insert(nodes.begin() + pos, a.location);
      target.insert(target.begin() + pos, a.weight / pf);
      is_break.insert(is_break.begin() + pos, 1);
    }
  }
  const int n = static_cast<int>(nodes.size());
  prob.nodes = nodes;
  prob.target = target;
  prob.is_breakpoint = is_break;
  prob.moment_rhs = moment_targets(f, p);
  prob.constraints.resize(p, n);
  for (int i = 0; i < n; ++i) {
    double power = 1.0;
    for (int j = 0; j < p; ++j) {
      prob.constraints(j, i) = power;
      power *= nodes[i];
    }
  }

  // Columns: (m+_i, m-_i) per node, then (t_k, s_k) per breakpoint node. Moment rows use
  // offsets divided by `scale` for conditioning.
  std::vector<int> break_nodes;
  for (int i = 0; i < n; ++i)
    if (is_break[i]) break_nodes.push_back(i);
  const int nb = static_cast<int>(break_nodes.size());
  const int cols = 2 * n + 2 * nb, rows = p + nb;
  const double scale = std::max(1.0, B);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::VectorXd rhs(rows), c = Eigen::VectorXd::Zero(cols);
  for (int i = 0; i < n; ++i) {
    double power = 1.0;
    for (int j = 0; j < p; ++j) {
      A(j, 2 * i) = power;
      A(j, 2 * i + 1) = -power;
      power *= nodes[i] / scale;
    }
    if (!is_break[i]) c[2 * i] = c[2 * i + 1] = 1.0;
  }
  for (int j = 0; j < p; ++j) rhs[j] = prob.moment_rhs[j] / std::pow(scale, j);
  for (int k = 0; k < nb; ++k) {
    int i = break_nodes[k], row = p + k;
    A(row, 2 * i) = 1.0;
    A(row, 2 * i + 1) = 1.0;
    A(row, 2 * n + 2 * k) = -1.0;
    A(row, 2 * n + 2 * k + 1) = 1.0;
    rhs[row] = std::abs(target[i]);
    c[2 * n + 2 * k] = 1.0;
  }

  LpResult lp = solve_standard_lp(A, rhs, c);
  prob.iterations = lp.iterations;
  if (lp.status == LpStatus::Infeasible) throw Error("increase truncation B");
  if (lp.status != LpStatus::Optimal) throw Error("moment program did not reach optimality");

  prob.solution.resize(n);
  double mag = 0.0;
  for (int i = 0; i < n; ++i) {
    prob.solution[i] = lp.x[2 * i] - lp.x[2 * i + 1];
    mag = std::max(mag, std::abs(prob.solution[i]));
  }
  for (int i = 0; i < n; ++i)
    if (std::abs(prob.solution[i]) < 1e-14 * mag) prob.solution[i] = 0.0;
  prob.multipliers.resize(p);
  for (int j = 0; j < p; ++j) prob.multipliers[j] = lp.duals[j] / std::pow(scale, j);
  prob.objective = 0.0;
  for (int i = 0; i < n; ++i) prob.objective += std::max(std::abs(target[i]), std::abs(prob.solution[i]));
  prob.max_residual = (prob.constraints * prob.solution - prob.moment_rhs).cwiseAbs().maxCoeff();
  return prob;
}

OptimalMeasure build_optimal_measure(const PiecewisePoly1D& f, int p, double B, double h) {
  OptimalMeasure out;
  out.report = cost_1d(f, p);
  out.problem = solve_moment_problem(f, p, B, h);
  const auto& prob = out.problem;
  WeightFn psi(p);
  std::vector<Atom> atoms;
  double excess_pos = 0.0, excess_neg = 0.0;
  for (std::size_t i = 0; i < prob.nodes.size(); ++i) {
    double g = prob.target[i], m = prob.solution[i], b = prob.nodes[i];
    if (g == 0.0 && m == 0.0) continue;
    // Unit (w, b') in the reparametrized form [w (x - b')]_+ is the standard unit (w, w b').
    atoms.push_back({Eigen::VectorXd::Constant(1, 1.0), b, 0.5 * psi(b) * (g + m)});
    atoms.push_back({Eigen::VectorXd::Constant(1, -1.0), -b + 0.0, 0.5 * psi(b) * (g - m)});
    double over = std::abs(m) - std::abs(g);
    if (over > 1e-9 * (1.0 + std::abs(g))) (m > 0.0 ? excess_pos : excess_neg) += over;
  }
  out.measure = AtomicMeasure(1, std::move(atoms));
  out.c = f(0.0);
  out.achieved_norm = weighted_tv_norm(out.measure, [&psi](double b) { return psi.inverse(b); });
  if (excess_pos > 0.0 || excess_neg > 0.0)
    out.lp_case = excess_pos >= excess_neg ? LambdaCase::Negative : LambdaCase::Positive;
  else
    out.lp_case = LambdaCase::Zero;
  return out;
}

TheoremCheck verify_theorem_1d(const PiecewisePoly1D& f, int p, double B, double h, double tolerance) {
  TheoremCheck chk;
  chk.tolerance = tolerance;
  OptimalMeasure opt = build_optimal_measure(f, p, B, h);
  chk.closed_form = opt.report;
  chk.closed_form_value = std::max(opt.report.integral_term, opt.report.boundary_term);
  chk.lp_value = opt.achieved_norm;
  chk.lp_case = opt.lp_case;
  double denom = std::max(chk.closed_form_value, 1e-300);
  chk.rel_error = chk.closed_form_value == 0.0 ? chk.lp_value : std::abs(chk.lp_value - chk.closed_form_value) / denom;
  chk.passed = chk.rel_error <= tolerance;
  return chk;
}

namespace {

// Coefficients of scale * (sign * (x - t))^p in the monomial basis.
std::vector<double> shifted_power(double scale, double sign, double t, int p) {
  std::vector<double> c(p + 1, 0.0);
  double sp = std::pow(sign, p);
  for (int k = 0; k <= p; ++k) c[k] = scale * sp * binomial(p, k) * std::pow(-t, p - k);
  return c;
}

}  // namespace

PiecewisePoly1D piecewise_from_net(const RepuNet& net) {
  net.validate();
  if (net.dim() != 1 && net.width() > 0) throw Error("piecewise form needs a one-input net");
  std::set<double> cuts;
  for (int i = 0; i < net.width(); ++i)
    if (net.W(i, 0) != 0.0) cuts.insert(net.b[i] / net.W(i, 0));
  std::vector<double> breaks(cuts.begin(), cuts.end());
  std::vector<std::vector<double>> pieces(breaks.size() + 1, std::vector<double>(net.p + 1, 0.0));
  for (auto& piece : pieces) piece[0] = net.c;
  for (int i = 0; i < net.width(); ++i) {
    double w = net.W(i, 0);
    if (w == 0.0) {
      for (auto& piece : pieces) piece[0] += net.a[i] * repu(-net.b[i], net.p);
      continue;
    }
    double t = net.b[i] / w;
    std::size_t at = std::lower_bound(breaks.begin(), breaks.end(), t) - breaks.begin();
    // a [w x - b]_+^p = a |w|^p [sign(w) (x - t)]_+^p, active right of t for w > 0.
    auto term = shifted_power(net.a[i] * std::pow(std::abs(w), net.p), w > 0.0 ? 1.0 : -1.0, t, net.p);
    std::size_t lo = w > 0.0 ? at + 1 : 0, hi = w > 0.0 ? pieces.size() : at + 1;
    for (std::size_t k = lo; k < hi; ++k)
      for (int j = 0; j <= net.p; ++j) pieces[k][j] += term[j];
  }
  return PiecewisePoly1D(std::move(breaks), std::move(pieces));
}

PiecewisePoly1D fit_piecewise_poly(const std::vector<double>& xs, const std::vector<double>& ys,
                                   const std::vector<double>& breakpoints, int p) {
  require_odd_power(p);
  if (xs.size() != ys.size() || xs.empty()) throw Error("sample arrays must be nonempty and equal length");
  for (std::size_t j = 1; j < breakpoints.size(); ++j)
    if (!(breakpoints[j] > breakpoints[j - 1])) throw Error("breakpoints must be strictly increasing");
  const int nb = static_cast<int>(breakpoints.size());
  const int cols = p + 1 + nb;
  Eigen::MatrixXd X(xs.size(), cols);
  Eigen::VectorXd y(ys.size());
  for (std::size_t r = 0; r < xs.size(); ++r) {
    double tp = 1.0;
    for (int k = 0; k <= p; ++k) {
      X(r, k) = tp;
      tp *= xs[r];
    }
    for (int j = 0; j < nb; ++j) X(r, p + 1 + j) = repu(xs[r] - breakpoints[j], p);
    y[r] = ys[r];
  }
  Eigen::VectorXd sol = X.colPivHouseholderQr().solve(y);
  std::vector<std::vector<double>> pieces(nb + 1, std::vector<double>(p + 1, 0.0));
  for (int k = 0; k <= nb; ++k) {
    for (int j = 0; j <= p; ++j) pieces[k][j] = sol[j];
    for (int j = 0; j < k; ++j) {
      auto term = shifted_power(sol[p + 1 + j], 1.0, breakpoints[j], p);
      for (int q = 0; q <= p; ++q) pieces[k][q] += term[q];
    }
  }
  return PiecewisePoly1D(breakpoints, std::move(pieces));
}

}  // namespace repu
