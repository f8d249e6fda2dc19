#pragma once

#include <memory>

#include "latbench/controllers/config.hpp"
#include "latbench/vehicle/params.hpp"

namespace latbench::controllers {

inline constexpr double kControlPeriod = 0.05;

/// Below this speed the speed-scheduled models are evaluated at the floor.
inline constexpr double kModelSpeedFloor = 1.0;

/// Measurements available to a feedback law at one control tick.
struct ControlInputs {
  double y_1 = 0.0;    // preview deviation, positive when the path is to the left
  double e_psi = 0.0;  // heading error at the closest point
  double v_x = 0.0;
  double kappa = 0.0;          // closest-point curvature
  double kappa_preview = 0.0;  // curvature at the preview point
  double u_ff = 0.0;
  double u_prev = 0.0;  // feedback actually applied at the previous tick
  double preview_distance = 0.0;
  // Closest-point errors with kinematic rates, for the model predictive law.
  double e_y = 0.0;
  double e_y_rate = 0.0;
  double e_psi_rate = 0.0;
};

/// Stateful feedback law producing the normalized action u_fb.
class FeedbackLaw {
 public:
  virtual ~FeedbackLaw() = default;
  virtual double step(const ControlInputs& in) = 0;
  virtual void reset() = 0;
  /// Number of ticks on which the law fell back to holding its previous output.
  int faults() const { return faults_; }

 protected:
  int faults_ = 0;
};

std::unique_ptr<FeedbackLaw> make_feedback_law(const ControllerConfig& config, const vehicle::VehicleParams& params,
                                               double sample_time = kControlPeriod);

}  // namespace latbench::controllers
