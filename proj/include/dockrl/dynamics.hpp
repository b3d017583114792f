#pragma once

#include "dockrl/types.hpp"

#include <stdexcept>

namespace dockrl {

/// Diagonal Fossen-form hydrodynamic model of the vehicle, plus the per-axis
/// actuation maxima that map normalized wrench commands to Newtons. The
/// current velocity is a world-frame disturbance entering the drag terms
/// through the relative velocity.
struct HydroParams {
  double mass{100.0};                                        // kg
  Vec3 inertia{8.0, 12.0, 15.0};                             // kg m^2, diagonal
  Vec6 added_mass{(Vec6() << 50, 70, 120, 4, 8, 8).finished()};
  Vec6 linear_damping{(Vec6() << 20, 30, 50, 5, 8, 8).finished()};
  Vec6 quadratic_damping{(Vec6() << 100, 150, 400, 10, 20, 20).finished()};
  double buoyancy_offset{2.0};       // N, net buoyancy minus weight (> 0 floats)
  Vec3 cob_offset{0.0, 0.0, -0.05};  // m, center of buoyancy (body, z down)
  Vec3 current_vel{Vec3::Zero()};    // m/s, world frame
  Vec3 max_force{50.0, 40.0, 50.0};  // N per unit command
  Vec3 max_torque{0.0, 15.0, 15.0};  // N m per unit command (roll unactuated)
  double gravity{9.81};

  void validate() const {
    if (!(mass > 0.0)) throw std::invalid_argument("hydro: mass must be > 0");
    if (!(inertia.minCoeff() > 0.0))
      throw std::invalid_argument("hydro: inertia components must be > 0");
    if (added_mass.minCoeff() < 0.0 || linear_damping.minCoeff() < 0.0 ||
        quadratic_damping.minCoeff() < 0.0)
      throw std::invalid_argument("hydro: damping/added mass must be >= 0");
  }
};

struct SimulationDiverged : std::runtime_error {
  SimulationDiverged() : std::runtime_error("dynamics: non-finite vehicle state") {}
};

/// Zeroes the roll torque and clips every other component to
/// [-limit_fraction, +limit_fraction].
Wrench apply_actuation_constraints(const Wrench& cmd, double limit_fraction);

/// Advances the state by one semi-implicit Euler step of the rigid-body
/// hydrodynamic equations. `cmd` is the normalized commanded wrench (already
/// constrained); `external_wrench` is an additional body-frame wrench in
/// Newtons / Newton-meters (dock contact). The returned state carries the
/// computed body-frame linear acceleration in lin_acc.
///
/// Throws SimulationDiverged when the incoming state is non-finite.
VehicleState step_physics(const VehicleState& state, const Wrench& cmd,
                          const HydroParams& params, double dt,
                          const Vec6& external_wrench = Vec6::Zero());

/// Body-frame kinetic energy in the combined rigid + added mass metric.
double kinetic_energy(const VehicleState& state, const HydroParams& params);

/// Potential energy of the net-buoyancy and restoring-moment forces,
/// consistent with the forces applied by step_physics.
double potential_energy(const VehicleState& state, const HydroParams& params);

}  // namespace dockrl
