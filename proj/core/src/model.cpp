#include "ptflow/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ptflow {

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Free: return "free";
    case Phase::Congested: return "congested";
    case Phase::Boundary: return "boundary";
  }
  return "?";
}

PsiSpec linear_psi(double R) {
  return PsiSpec{
      "linear",
      [R](double rho) { return 1.0 - rho / R; },
      [R](double) { return -1.0 / R; },
      [R](double) { return -2.0 / R; },
  };
}

PsiSpec quadratic_psi(double R) {
  return PsiSpec{
      "quadratic",
      [R](double rho) { return 1.0 - (rho / R) * (rho / R); },
      [R](double rho) { return -2.0 * rho / (R * R); },
      [R](double rho) { return -6.0 * rho / (R * R); },
  };
}

ModelParams::ModelParams(double R, double v_max, double w_min, double w_max, PsiSpec psi)
    : R_(R), v_max_(v_max), w_min_(w_min), w_max_(w_max), psi_(std::move(psi)) {
  if (!(R > 0.0)) throw std::invalid_argument("ModelParams: R must be positive");
  if (!(v_max > 0.0) || !(v_max < w_min) || !(w_min < w_max))
    throw std::invalid_argument("ModelParams: need 0 < V_max < w_min < w_max (H-1)");
  if (!psi_.value || !psi_.slope || !psi_.rho_psi_curv)
    throw std::invalid_argument("ModelParams: psi needs value, slope and (rho psi)'' handles");
}

ModelParams ModelParams::p0() { return ModelParams(1.0, 1.0, 2.5, 3.0, linear_psi(1.0)); }

namespace {

double state_slack(const ModelParams& p) { return 1e-9 * std::max(1.0, p.w_max() * p.R()); }

}  // namespace

bool state_valid(const ModelParams& p, const State& s) {
  const double slack = state_slack(p);
  if (!std::isfinite(s.rho) || !std::isfinite(s.eta)) return false;
  if (s.rho < -slack || s.rho > p.R() + slack) return false;
  if (s.rho <= slack) return std::abs(s.eta) <= p.w_max() * std::max(s.rho, 0.0) + slack;
  return s.eta >= p.w_min() * s.rho - slack && s.eta <= p.w_max() * s.rho + slack;
}

void require_valid(const ModelParams& p, const State& s) {
  if (!state_valid(p, s)) {
    std::ostringstream os;
    os << "state (" << s.rho << ", " << s.eta << ") outside F u C (rho in [0," << p.R()
       << "], w in [" << p.w_min() << "," << p.w_max() << "])";
    throw std::domain_error(os.str());
  }
}

double w_of(const ModelParams& p, const State& s) {
  if (s.rho <= 0.0) throw std::domain_error("w undefined at vacuum (rho = 0)");
  (void)p;
  return s.eta / s.rho;
}

double velocity(const ModelParams& p, const State& s) {
  require_valid(p, s);
  if (s.rho <= 0.0) return p.v_max();
  return std::min(p.v_max(), (s.eta / s.rho) * p.psi(s.rho));
}

double flux_rho(const ModelParams& p, const State& s) { return s.rho * velocity(p, s); }
double flux_eta(const ModelParams& p, const State& s) { return s.eta * velocity(p, s); }

Phase phase_of(const ModelParams& p, const State& s) {
  require_valid(p, s);
  if (s.rho <= 0.0) return Phase::Free;
  const double wpsi = (s.eta / s.rho) * p.psi(s.rho);
  const double band = tols::phase * p.v_max();
  if (std::abs(wpsi - p.v_max()) <= band) return Phase::Boundary;
  return wpsi > p.v_max() ? Phase::Free : Phase::Congested;
}

EigenSystem eigen(const ModelParams& p, const State& s) {
  const Phase ph = phase_of(p, s);
  if (ph == Phase::Free)
    throw std::domain_error("eigen: not strictly hyperbolic inside the free phase");
  const double v = velocity(p, s);
  const double dpsi = p.dpsi(s.rho);
  EigenSystem e;
  e.lambda1 = s.eta * dpsi + v;
  e.lambda2 = v;
  e.r1 = {-s.rho, -s.eta};
  const double ps = p.psi(s.rho);
  if (ps > 1e-14) {
    e.r2 = {1.0, s.eta * (1.0 / s.rho - dpsi / ps)};
  } else {
    e.r2 = {0.0, 1.0};  // degenerate 2-curve is the vertical segment at rho = R
  }
  return e;
}

double lambda1_on_ray(const ModelParams& p, double w, double rho) {
  return w * (p.psi(rho) + rho * p.dpsi(rho));
}

double lax1_eta(const ModelParams& p, const State& origin, double rho) {
  if (origin.rho <= 0.0) throw std::domain_error("1-Lax curve needs rho_o > 0");
  (void)p;
  return origin.eta * rho / origin.rho;
}

double lax2_eta(const ModelParams& p, const State& origin, double rho) {
  const double v_o = velocity(p, origin);
  const double ps = p.psi(rho);
  if (ps <= 1e-14) {
    if (v_o > 1e-14)
      throw std::domain_error("2-Lax curve degenerate: psi(rho) = 0 with positive velocity");
    return rho * p.w_min();  // rho = R, v_o = 0: any eta on the segment; report the lower end
  }
  return rho * v_o / ps;
}

LaxCurves lax_curves(const ModelParams& p, const State& origin, double rho) {
  if (!(rho > 0.0) || rho > p.R() + state_slack(p))
    throw std::domain_error("lax_curves: rho must lie in (0, R]");
  LaxCurves out;
  out.eta1 = lax1_eta(p, origin, rho);
  if (origin.rho >= p.R() - 1e-14 * p.R()) {
    out.eta2_segment = std::make_pair(p.R() * p.w_min(), p.R() * p.w_max());
  } else {
    out.eta2 = lax2_eta(p, origin, rho);
  }
  return out;
}

State sharp_point(const ModelParams& p, double w, double v_target) {
  const double slack = 1e-9 * p.w_max();
  if (w < p.w_min() - slack || w > p.w_max() + slack)
    throw std::domain_error("sharp_point: w outside [w_min, w_max]");
  if (v_target < 0.0 || v_target > p.v_max() * (1.0 + tols::phase))
    throw std::domain_error("sharp_point: v_target outside [0, V_max]");
  if (v_target <= 0.0) return State{p.R(), w * p.R()};

  // w psi(rho) - v_target is non-increasing in rho, positive near 0, negative at R.
  double lo = 0.0, hi = p.R();
  double flo = w * p.psi(lo) - v_target;
  if (flo < 0.0) {
    if (flo > -tols::root) return State{0.0, 0.0};
    throw std::domain_error("sharp_point: no root, v_target above w psi(0)");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = w * p.psi(mid) - v_target;
    if (f > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * p.R()) break;
  }
  const double rho = 0.5 * (lo + hi);
  return State{rho, w * rho};
}

State flat_point(const ModelParams& p, double w) { return sharp_point(p, w, p.v_max()); }

ValidationReport validate(const ModelParams& p, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("validate: grid_n must be >= 2");
  ValidationReport rep;
  rep.h1_ok = p.v_max() > 0.0 && p.v_max() < p.w_min() && p.w_min() < p.w_max() && p.R() > 0.0;
  if (!rep.h1_ok)
    rep.issues.push_back({"H-1", "need 0 < V_max < w_min < w_max and R > 0", 0, 0, 0});

  rep.h2_ok = true;
  const double e0 = std::abs(p.psi(0.0) - 1.0);
  if (e0 > 1e-12) {
    rep.h2_ok = false;
    rep.issues.push_back({"H-2", "psi(0) != 1", 0.0, 0.0, p.psi(0.0)});
  }
  const double eR = std::abs(p.psi(p.R()));
  if (eR > 1e-12) {
    rep.h2_ok = false;
    rep.issues.push_back({"H-2", "psi(R) != 0", p.R(), 0.0, p.psi(p.R())});
  }
  for (int i = 0; i < grid_n && rep.h2_ok; ++i) {
    const double rho = p.R() * (i + 0.5) / grid_n;
    if (p.dpsi(rho) > 1e-12) {
      rep.h2_ok = false;
      rep.issues.push_back({"H-2", "psi' > 0", rho, 0.0, p.dpsi(rho)});
    }
    if (p.rho_psi_curv(rho) > 1e-12) {
      rep.h2_ok = false;
      rep.issues.push_back({"H-2", "(rho psi)'' > 0", rho, 0.0, p.rho_psi_curv(rho)});
    }
  }

  // H-3 on the congested rectangle: for each w, rho runs from the phase
  // boundary rho_flat(w) up to R.
  rep.h3_ok = true;
  rep.worst_h3_lambda1 = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid_n; ++j) {
    const double w = p.w_min() + (p.w_max() - p.w_min()) * j / (grid_n - 1);
    const double rho_b = flat_point(p, w).rho;
    for (int i = 0; i < grid_n; ++i) {
      const double rho = rho_b + (p.R() - rho_b) * i / (grid_n - 1);
      const double l1 = lambda1_on_ray(p, w, rho);
      if (l1 > rep.worst_h3_lambda1) {
        rep.worst_h3_lambda1 = l1;
        rep.worst_h3_rho = rho;
        rep.worst_h3_w = w;
      }
    }
  }
  if (rep.worst_h3_lambda1 >= 0.0) {
    rep.h3_ok = false;
    rep.issues.push_back({"H-3", "first-family speed not negative on C", rep.worst_h3_rho,
                          rep.worst_h3_w, rep.worst_h3_lambda1});
  }

  rep.ok = rep.h1_ok && rep.h2_ok && rep.h3_ok;
  return rep;
}

}  // namespace ptflow
