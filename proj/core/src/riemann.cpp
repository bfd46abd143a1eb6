#include "ptflow/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ptflow {

const char* wave_kind_name(WaveKind k) {
  switch (k) {
    case WaveKind::Linear: return "linear";
    case WaveKind::PhaseTransition: return "phase_transition";
    case WaveKind::Shock1: return "shock1";
    case WaveKind::Rarefaction1: return "rarefaction1";
    case WaveKind::Contact2: return "contact2";
  }
  return "?";
}

namespace {

double state_gap(const ModelParams& p, const State& a, const State& b) {
  const double sr = std::max(1.0, p.R());
  const double se = std::max(1.0, p.w_max() * p.R());
  return std::max(std::abs(a.rho - b.rho) / sr, std::abs(a.eta - b.eta) / se);
}

bool same_state(const ModelParams& p, const State& a, const State& b) {
  return state_gap(p, a, b) <= tols::state_eq;
}

// Free phase includes the boundary; the solver routes boundary states as free,
// which yields the fewest waves (the degenerate alternatives coincide).
bool on_free_side(const ModelParams& p, const State& s) {
  return phase_of(p, s) != Phase::Congested;
}

}  // namespace

double rh_speed(const ModelParams& p, const State& left, const State& right) {
  require_valid(p, left);
  require_valid(p, right);
  const double drho = right.rho - left.rho;
  const double deta = right.eta - left.eta;
  if (std::abs(drho) < 1e-14 * std::max(1.0, p.R()))
    throw std::domain_error("rh_speed: rho jump vanishes");
  const double s_rho = (flux_rho(p, right) - flux_rho(p, left)) / drho;
  const double scale = std::max(1.0, p.w_max());
  if (std::abs(deta) >= 1e-14 * std::max(1.0, p.w_max() * p.R())) {
    const double s_eta = (flux_eta(p, right) - flux_eta(p, left)) / deta;
    if (std::abs(s_rho - s_eta) > tols::rh * scale)
      throw std::domain_error("rh_speed: jump violates the Rankine-Hugoniot conditions");
  } else {
    const double resid = flux_eta(p, right) - flux_eta(p, left) - s_rho * deta;
    if (std::abs(resid) > tols::rh * scale)
      throw std::domain_error("rh_speed: eta equation inconsistent with vanishing eta jump");
  }
  return s_rho;
}

namespace {

Wave make_jump(WaveKind kind, const State& l, const State& r, double speed) {
  Wave w;
  w.kind = kind;
  w.left = l;
  w.right = r;
  w.speed = speed;
  return w;
}

Wave make_fan(const ModelParams& p, const State& l, const State& r) {
  Wave w;
  w.kind = WaveKind::Rarefaction1;
  w.left = l;
  w.right = r;
  const double wl = w_of(p, l);
  w.lambda_lo = lambda1_on_ray(p, wl, l.rho);
  w.lambda_hi = lambda1_on_ray(p, wl, r.rho);
  w.speed = w.lambda_lo;
  return w;
}

// First-family wave between two congested states on one ray: shock for
// increasing density, fan for decreasing.
void emit_first_family(const ModelParams& p, const State& l, const State& m,
                       std::vector<Wave>& waves) {
  if (same_state(p, l, m)) return;
  if (m.rho > l.rho)
    waves.push_back(make_jump(WaveKind::Shock1, l, m, rh_speed(p, l, m)));
  else
    waves.push_back(make_fan(p, l, m));
}

}  // namespace

RiemannSolution solve(const ModelParams& p, const State& left, const State& right) {
  require_valid(p, left);
  require_valid(p, right);
  RiemannSolution sol;
  sol.left = left;
  sol.right = right;
  if (same_state(p, left, right)) return sol;

  const bool lF = on_free_side(p, left);
  const bool rF = on_free_side(p, right);

  if (lF && rF) {
    sol.waves.push_back(make_jump(WaveKind::Linear, left, right, p.v_max()));
    return sol;
  }

  if (lF && !rF) {
    // Phase transition onto the left ray, then a 2-contact.
    if (left.rho <= 0.0) {
      // Vacuum ahead of congestion: the single admissible jump moves with the
      // downstream velocity.
      sol.waves.push_back(
          make_jump(WaveKind::PhaseTransition, left, right, velocity(p, right)));
      return sol;
    }
    const State m = sharp_point(p, w_of(p, left), velocity(p, right));
    State tail = left;
    if (!same_state(p, left, m)) {
      sol.middles.push_back(m);
      sol.waves.push_back(make_jump(WaveKind::PhaseTransition, left, m, rh_speed(p, left, m)));
      tail = m;
    }
    if (!same_state(p, tail, right))
      sol.waves.push_back(make_jump(WaveKind::Contact2, tail, right, velocity(p, tail)));
    return sol;
  }

  if (!lF && rF) {
    // First-family rarefaction up to the phase boundary on the left ray,
    // then a linear wave.
    const State m = flat_point(p, w_of(p, left));
    State tail = left;
    if (!same_state(p, left, m)) {
      sol.middles.push_back(m);
      emit_first_family(p, left, m, sol.waves);
      tail = m;
    }
    if (!same_state(p, tail, right))
      sol.waves.push_back(make_jump(WaveKind::Linear, tail, right, p.v_max()));
    return sol;
  }

  // Both congested.
  const State m = sharp_point(p, w_of(p, left), velocity(p, right));
  State tail = left;
  if (!same_state(p, left, m)) {
    sol.middles.push_back(m);
    emit_first_family(p, left, m, sol.waves);
    tail = m;
  }
  if (!same_state(p, tail, right))
    sol.waves.push_back(make_jump(WaveKind::Contact2, tail, right, velocity(p, tail)));
  return sol;
}

State fan_state(const ModelParams& p, const Wave& fan, double xi) {
  if (!fan.is_fan()) throw std::invalid_argument("fan_state: wave is not a rarefaction fan");
  if (xi <= fan.lambda_lo) return fan.left;
  if (xi >= fan.lambda_hi) return fan.right;
  const double w = w_of(p, fan.left);
  // lambda1 is non-increasing in rho on the ray; the fan spans
  // [rho_right, rho_left] with rho_right < rho_left.
  double lo = fan.right.rho, hi = fan.left.rho;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (lambda1_on_ray(p, w, mid) > xi)
      lo = mid;  // speed too high -> need denser state
    else
      hi = mid;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * p.R()) break;
  }
  const double rho = 0.5 * (lo + hi);
  return State{rho, w * rho};
}

State eval(const ModelParams& p, const RiemannSolution& sol, double xi) {
  State current = sol.left;
  for (const Wave& w : sol.waves) {
    if (xi < w.lo_speed()) return current;
    if (w.is_fan() && xi <= w.lambda_hi) return fan_state(p, w, xi);
    current = w.right;
  }
  return current;
}

}  // namespace ptflow
