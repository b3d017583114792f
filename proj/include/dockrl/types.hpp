#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cmath>
#include <cstdint>
#include <random>

namespace dockrl {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a <= 0.0) a += 2.0 * M_PI;  // (0, 2*pi]
  return a - M_PI;
}

/// Rigid-body pose: position in the world NED frame (z down), orientation as
/// the unit quaternion rotating body-frame vectors into the world frame.
struct Pose {
  Vec3 position{Vec3::Zero()};
  Quat orientation{Quat::Identity()};

  /// Yaw of the ZYX Euler decomposition (heading about world z).
  double yaw() const {
    const Quat& q = orientation;
    return std::atan2(2.0 * (q.w() * q.z() + q.x() * q.y()),
                      1.0 - 2.0 * (q.y() * q.y() + q.z() * q.z()));
  }

  static Pose from_xyz_yaw(const Vec3& p, double yaw) {
    Pose out;
    out.position = p;
    out.orientation = Quat(Eigen::AngleAxisd(yaw, Vec3::UnitZ()));
    return out;
  }

  void renormalize() { orientation.normalize(); }
};

/// Rotation-only change of coordinates world -> body. Preserves norm.
inline Vec3 world_to_body(const Vec3& v_world, const Pose& pose) {
  return pose.orientation.conjugate() * v_world;
}

inline Vec3 body_to_world(const Vec3& v_body, const Pose& pose) {
  return pose.orientation * v_body;
}

/// Wrapped yaw difference target - auv in (-pi, pi], computed so that a small
/// positive value means the target heading is reached by a small positive
/// (clockwise, NED) rotation.
inline double yaw_error(const Pose& auv, const Pose& target) {
  return wrap_angle(target.yaw() - auv.yaw());
}

/// Full rigid-body state of the vehicle. Linear/angular velocities and the
/// linear acceleration are expressed in the body frame; lin_acc always holds
/// the acceleration computed by the most recent dynamics step.
struct VehicleState {
  Pose pose;
  Vec3 lin_vel{Vec3::Zero()};
  Vec3 ang_vel{Vec3::Zero()};
  Vec3 lin_acc{Vec3::Zero()};

  bool all_finite() const {
    return pose.position.allFinite() && pose.orientation.coeffs().allFinite() &&
           lin_vel.allFinite() && ang_vel.allFinite() && lin_acc.allFinite();
  }
};

/// Normalized 6-component body-frame actuation command. Components live in
/// [-1, 1] and are mapped to Newtons / Newton-meters by per-axis maxima in
/// the dynamics module. Roll torque is carried for interface generality but
/// produces no actuation effect.
struct Wrench {
  Vec3 force{Vec3::Zero()};
  Vec3 torque{Vec3::Zero()};

  Vec6 as_vec6() const {
    Vec6 v;
    v << force, torque;
    return v;
  }

  static Wrench from_vec6(const Vec6& v) {
    Wrench w;
    w.force = v.head<3>();
    w.torque = v.tail<3>();
    return w;
  }
};

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and a stream index.
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 0x51ed270b0f4dll));
}

/// Deterministic random stream. The generator is the standard-specified
/// mt19937_64; uniform and normal draws avoid std distributions so that the
/// byte-exact sequence is pinned by this code alone.
class Rng {
 public:
  Rng() : Rng(0) {}
  explicit Rng(uint64_t seed) : gen_(splitmix64(seed)) {}

  void reseed(uint64_t seed) { gen_.seed(splitmix64(seed)); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller (cosine branch only).
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Vec3 normal3() { return Vec3(normal(), normal(), normal()); }

  uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dockrl
