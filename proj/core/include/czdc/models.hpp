#pragma once

#include <string>
#include <vector>

#include "czdc/filter.hpp"

namespace czdc {

/// @brief Benchmark run sizes, reduction orders, and the stage polytope
/// kind a model was tuned for.
struct ModelDefaults {
  int steps{0};
  int runs{0};
  int phi_c{0};
  int phi_g{0};
  EnclosureKind enclosure{EnclosureKind::kBox};
};

/**
 * @brief Planar system with quadratic/exponential dynamics, additive noise
 * on both equations, and a scalar sum measurement. Ships an explicit convex
 * split for both maps.
 */
SystemModel build_quad2d();

/**
 * @brief Quaternion attitude kinematics driven by gyro rates measured with
 * bounded error, with two reference-vector observations and the unit-norm
 * invariant. The dynamics are convexified per step; the measurement ships
 * an explicit convex split.
 */
SystemModel build_attitude();

SystemModel build_model(const std::string& name);
ModelDefaults defaults_for(const std::string& name);
std::vector<std::string> model_names();

}  // namespace czdc
