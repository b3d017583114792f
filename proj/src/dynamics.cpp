#include "dockrl/dynamics.hpp"

#include <algorithm>

namespace dockrl {

Wrench apply_actuation_constraints(const Wrench& cmd, double limit_fraction) {
  const double lim = limit_fraction;
  Wrench out;
  for (int i = 0; i < 3; ++i) {
    out.force[i] = std::clamp(cmd.force[i], -lim, lim);
    out.torque[i] = std::clamp(cmd.torque[i], -lim, lim);
  }
  out.torque[0] = 0.0;  // roll is not actuated
  return out;
}

namespace {

// Quaternion exponential of a rotation vector (axis * angle).
Quat quat_exp(const Vec3& w) {
  const double angle = w.norm();
  if (angle < 1e-12) {
    Quat q(1.0, 0.5 * w.x(), 0.5 * w.y(), 0.5 * w.z());
    q.normalize();
    return q;
  }
  const Vec3 axis = w / angle;
  return Quat(Eigen::AngleAxisd(angle, axis));
}

}  // namespace

VehicleState step_physics(const VehicleState& state, const Wrench& cmd,
                          const HydroParams& p, double dt,
                          const Vec6& external_wrench) {
  if (!state.all_finite()) throw SimulationDiverged();

  const Quat& q = state.pose.orientation;
  const Vec3 v = state.lin_vel;
  const Vec3 w = state.ang_vel;

  // Commanded thrust in Newtons; roll torque has no actuator behind it.
  Vec3 f_thrust = cmd.force.cwiseProduct(p.max_force);
  Vec3 t_thrust = cmd.torque.cwiseProduct(p.max_torque);
  t_thrust[0] = 0.0;

  // Drag on the velocity relative to the ambient current.
  const Vec3 v_rel = v - q.conjugate() * p.current_vel;
  Vec3 f_damp, t_damp;
  for (int i = 0; i < 3; ++i) {
    f_damp[i] = -(p.linear_damping[i] * v_rel[i] +
                  p.quadratic_damping[i] * std::abs(v_rel[i]) * v_rel[i]);
    t_damp[i] = -(p.linear_damping[3 + i] * w[i] +
                  p.quadratic_damping[3 + i] * std::abs(w[i]) * w[i]);
  }

  // Net buoyancy along world z plus the restoring moment from the buoyancy
  // force acting at the center of buoyancy (gravity acts at the origin).
  const double buoyancy_total = p.mass * p.gravity + p.buoyancy_offset;
  const Vec3 f_net_world(0.0, 0.0, -p.buoyancy_offset);
  const Vec3 f_buoy_body = q.conjugate() * Vec3(0.0, 0.0, -buoyancy_total);
  const Vec3 f_restoring = q.conjugate() * f_net_world;
  const Vec3 t_restoring = p.cob_offset.cross(f_buoy_body);

  // Rigid-body Coriolis terms (workless; added mass enters the inertia only).
  const Vec3 f_cor = -p.mass * w.cross(v);
  const Vec3 t_cor = -w.cross(state.ang_vel.cwiseProduct(p.inertia));

  const Vec3 f_total = f_thrust + f_damp + f_restoring + f_cor + external_wrench.head<3>();
  const Vec3 t_total = t_thrust + t_damp + t_restoring + t_cor + external_wrench.tail<3>();

  const Vec3 m_lin = Vec3::Constant(p.mass) + p.added_mass.head<3>();
  const Vec3 m_ang = p.inertia + p.added_mass.tail<3>();

  VehicleState next = state;
  next.lin_acc = f_total.cwiseQuotient(m_lin);
  const Vec3 ang_acc = t_total.cwiseQuotient(m_ang);

  next.lin_vel = v + dt * next.lin_acc;
  next.ang_vel = w + dt * ang_acc;

  next.pose.position = state.pose.position + dt * (q * next.lin_vel);
  next.pose.orientation = q * quat_exp(next.ang_vel * dt);
  next.pose.renormalize();

  if (!next.all_finite()) throw SimulationDiverged();
  return next;
}

double kinetic_energy(const VehicleState& s, const HydroParams& p) {
  const Vec3 m_lin = Vec3::Constant(p.mass) + p.added_mass.head<3>();
  const Vec3 m_ang = p.inertia + p.added_mass.tail<3>();
  return 0.5 * s.lin_vel.cwiseProduct(m_lin).dot(s.lin_vel) +
         0.5 * s.ang_vel.cwiseProduct(m_ang).dot(s.ang_vel);
}

double potential_energy(const VehicleState& s, const HydroParams& p) {
  const double buoyancy_total = p.mass * p.gravity + p.buoyancy_offset;
  // F_net = -buoyancy_offset * z_world on the origin, F_buoy at the COB.
  const double pe_net = p.buoyancy_offset * s.pose.position.z();
  const Vec3 cob_world = s.pose.orientation * p.cob_offset;
  const double pe_restoring = buoyancy_total * cob_world.z();
  return pe_net + pe_restoring;
}

}  // namespace dockrl
