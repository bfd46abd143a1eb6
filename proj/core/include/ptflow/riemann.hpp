#pragma once

#include <vector>

#include "ptflow/model.hpp"

namespace ptflow {

enum class WaveKind { Linear, PhaseTransition, Shock1, Rarefaction1, Contact2 };

const char* wave_kind_name(WaveKind k);

struct Wave {
  WaveKind kind = WaveKind::Linear;
  State left;
  State right;
  double speed = 0.0;      // discontinuities
  double lambda_lo = 0.0;  // Rarefaction1 fan range
  double lambda_hi = 0.0;

  bool is_fan() const { return kind == WaveKind::Rarefaction1; }
  double lo_speed() const { return is_fan() ? lambda_lo : speed; }
  double hi_speed() const { return is_fan() ? lambda_hi : speed; }
};

struct RiemannSolution {
  State left;
  State right;
  std::vector<Wave> waves;    // ordered by nondecreasing speed
  std::vector<State> middles; // intermediate constant states, left to right
};

// Rankine-Hugoniot speed of the jump left -> right, checked for consistency
// between the two conservation laws; throws when the pair does not admit a
// single-speed jump.
double rh_speed(const ModelParams& p, const State& left, const State& right);

// Exact self-similar solution of the single-road Riemann problem.
RiemannSolution solve(const ModelParams& p, const State& left, const State& right);

// State of a first-family fan at similarity speed xi (root-found on the
// left state's w-ray); xi is clamped to the fan range.
State fan_state(const ModelParams& p, const Wave& fan, double xi);

// Solution state at xi = x/t. On a discontinuity the right state is returned.
State eval(const ModelParams& p, const RiemannSolution& sol, double xi);

}  // namespace ptflow
