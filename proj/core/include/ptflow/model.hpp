#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ptflow {

// Conserved pair on a road: density rho and generalized momentum eta.
// For rho > 0 the ratio w = eta/rho is the drivers' maximal speed.
struct State {
  double rho = 0.0;
  double eta = 0.0;
};

enum class Phase { Free, Congested, Boundary };

const char* phase_name(Phase p);

namespace tols {
inline constexpr double phase = 1e-9;     // relative band for Boundary classification
inline constexpr double root = 1e-12;     // residual bound for monotone root solves
inline constexpr double rh = 1e-10;       // Rankine-Hugoniot consistency bound
inline constexpr double event = 1e-12;    // front-tracking event coalescing, in time
inline constexpr double state_eq = 1e-12; // relative gap below which states are "the same"
}  // namespace tols

// Speed-reduction profile psi and the two derivatives the model needs.
// psi maps [0, R] onto [0, 1] with psi(0) = 1, psi(R) = 0.
struct PsiSpec {
  std::string name;
  std::function<double(double)> value;         // psi(rho)
  std::function<double(double)> slope;         // psi'(rho)
  std::function<double(double)> rho_psi_curv;  // (rho * psi(rho))''
};

PsiSpec linear_psi(double R);
PsiSpec quadratic_psi(double R);

class ModelParams {
 public:
  // Checks the ordering hypothesis 0 < V_max < w_min < w_max eagerly;
  // the profile hypotheses are checked by validate() on a grid.
  ModelParams(double R, double v_max, double w_min, double w_max, PsiSpec psi);

  static ModelParams p0();  // R=1, V_max=1, w in [2.5, 3], linear psi

  double R() const { return R_; }
  double v_max() const { return v_max_; }
  double w_min() const { return w_min_; }
  double w_max() const { return w_max_; }
  const PsiSpec& psi_spec() const { return psi_; }

  double psi(double rho) const { return psi_.value(rho); }
  double dpsi(double rho) const { return psi_.slope(rho); }
  double rho_psi_curv(double rho) const { return psi_.rho_psi_curv(rho); }

 private:
  double R_, v_max_, w_min_, w_max_;
  PsiSpec psi_;
};

bool state_valid(const ModelParams& p, const State& s);
void require_valid(const ModelParams& p, const State& s);

// eta/rho; throws std::domain_error at vacuum.
double w_of(const ModelParams& p, const State& s);

// min{V_max, (eta/rho) psi(rho)}; V_max at vacuum.
double velocity(const ModelParams& p, const State& s);

double flux_rho(const ModelParams& p, const State& s);  // rho * v
double flux_eta(const ModelParams& p, const State& s);  // eta * v

Phase phase_of(const ModelParams& p, const State& s);

struct EigenSystem {
  double lambda1;
  double lambda2;
  std::array<double, 2> r1;
  std::array<double, 2> r2;
};

// Defined on the congested phase with rho > 0; throws elsewhere
// (the system is not strictly hyperbolic inside the free phase).
EigenSystem eigen(const ModelParams& p, const State& s);

// First characteristic speed along the w-ray of the congested phase:
// lambda1(rho) = w * d/drho (rho psi(rho)).
double lambda1_on_ray(const ModelParams& p, double w, double rho);

struct LaxCurves {
  double eta1;                                     // on the 1-curve through the origin
  std::optional<double> eta2;                      // on the 2-curve, when rho_o < R
  std::optional<std::pair<double, double>> eta2_segment;  // degenerate 2-curve at rho_o = R
};

LaxCurves lax_curves(const ModelParams& p, const State& origin, double rho);
double lax1_eta(const ModelParams& p, const State& origin, double rho);
double lax2_eta(const ModelParams& p, const State& origin, double rho);

// Congested state with prescribed maximal speed w and velocity v_target,
// solved from w psi(rho) = v_target by bisection (monotone under the
// profile hypotheses).
State sharp_point(const ModelParams& p, double w, double v_target);

// The F/C boundary state on the ray w: velocity equals V_max there.
State flat_point(const ModelParams& p, double w);

struct ValidationIssue {
  std::string hypothesis;  // "H-1", "H-2", "H-3"
  std::string detail;
  double rho = 0.0;
  double w = 0.0;
  double value = 0.0;
};

struct ValidationReport {
  bool ok = false;
  bool h1_ok = false;
  bool h2_ok = false;
  bool h3_ok = false;
  // worst (largest) first-family speed found on the congested sample grid
  double worst_h3_lambda1 = 0.0;
  double worst_h3_rho = 0.0;
  double worst_h3_w = 0.0;
  std::vector<ValidationIssue> issues;
};

// Grid check of the model hypotheses: ordering exactly, profile signs and
// negative first-family speeds on a grid_n x grid_n sample of the
// congested (rho, w) rectangle.
ValidationReport validate(const ModelParams& p, int grid_n);

}  // namespace ptflow
