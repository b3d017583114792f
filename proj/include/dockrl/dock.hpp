#pragma once

#include "dockrl/types.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace dockrl {

/// Funnel-guided docking station. The guide funnel is a right circular cone
/// with its apex at `pose.position` (the docking point), axis vertical and
/// opening upward; the mouth sits funnel_depth above the apex. The station
/// yaw only matters for the terminal yaw tolerance, the cone itself is
/// rotationally symmetric.
struct DockStation {
  Pose pose;
  double funnel_clearance_xy{0.25};  // m, lateral capture the funnel provides
  double funnel_depth{0.42};         // m, apex to mouth
  double funnel_half_angle{0.56};    // rad, wall angle from the vertical axis
  double success_radius_xy{0.08};    // m
  double success_depth_band{0.05};   // m
  double success_yaw_tol{0.26};      // rad
  double max_dock_speed{0.25};       // m/s, soft-contact vertical limit

  double mouth_radius() const { return funnel_depth * std::tan(funnel_half_angle); }

  void validate() const {
    if (!(funnel_clearance_xy > success_radius_xy && success_radius_xy > 0.0))
      throw std::invalid_argument("dock: need clearance > success radius > 0");
    if (!(mouth_radius() >= funnel_clearance_xy))
      throw std::invalid_argument("dock: funnel mouth narrower than the stated clearance");
    if (!(success_depth_band < funnel_depth))
      throw std::invalid_argument("dock: success depth band exceeds funnel depth");
  }
};

/// Penalty-method contact parameters for the funnel walls.
struct ContactParams {
  double stiffness{2000.0};   // N/m
  double damping{200.0};      // N s/m
  double friction{0.2};       // Coulomb coefficient for the sliding component
  double shell{0.05};         // m, funnel wall thickness
};

/// Body-frame probe points of the vehicle used for contact and docking
/// checks: the docking pin tip plus the lower hull corners.
struct ProbeGeometry {
  Vec3 pin_tip{0.0, 0.0, 0.55};
  Vec3 hull_half_extents{0.45, 0.30, 0.15};
  Vec3 camera_mount{0.0, 0.0, 0.10};

  std::vector<Vec3> body_points() const {
    const Vec3& h = hull_half_extents;
    return {pin_tip, Vec3(h.x(), h.y(), h.z()), Vec3(h.x(), -h.y(), h.z()),
            Vec3(-h.x(), h.y(), h.z()), Vec3(-h.x(), -h.y(), h.z())};
  }
};

struct ContactEvent {
  double penetration{0.0};  // m
  double impulse{0.0};      // N s over the physics step
  int64_t step{0};          // physics step index
};

struct ContactResult {
  Vec3 force{Vec3::Zero()};   // world frame
  Vec3 torque{Vec3::Zero()};  // world frame, about the reference point
  std::vector<ContactEvent> events;
};

/// Evaluates spring-damper penalty forces of every probe point against the
/// funnel cone shell and the seat at the apex. Forces are repulsive only,
/// with a Coulomb-style sliding component tangential to the wall. Torque is
/// taken about `ref_point` (the vehicle origin).
ContactResult contact_force(std::span<const Vec3> points_world,
                            std::span<const Vec3> vels_world,
                            const Vec3& ref_point, const DockStation& ds,
                            const ContactParams& cp, double dt,
                            int64_t step_index = 0);

/// True iff the station origin lies inside the downward-facing camera cone
/// (apex at the camera mount, axis body-down rotated to world), boundary
/// inclusive, and within max_range.
bool is_visible(const VehicleState& auv, const Vec3& camera_mount_body,
                const DockStation& ds, double fov_half_angle, double max_range);

/// True iff the pin sits inside the success region of the funnel throat with
/// matched yaw and a gentle vertical speed.
bool is_docked(const VehicleState& auv, const ProbeGeometry& probe,
               const DockStation& ds);

}  // namespace dockrl
