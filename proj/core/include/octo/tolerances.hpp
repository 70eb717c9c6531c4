#pragma once

namespace octo {

// Numerical thresholds shared by the symbolic and numerical stages.
struct Tolerances {
  double simplex = 1e-12;        // sum-to-one check on simplex inputs
  double boundary = 1e-12;       // alpha, beta in {0, 1}
  double singular_det = 1e-12;   // |det A| for the interior equilibrium
  double generic = 1e-12;        // |a10 b01 det A|
  double equality = 1e-12;       // |f_i(p_j)| collisions of q and p points
  double hyperbolic = 1e-10;     // |Re lambda| > hyperbolic * ||J||
  double trace_zero = 1e-12;     // monodromic branch at the origin
  double double_root = 1e-12;    // |Delta| relative to max(1, (b10 - a01)^2)
  double discriminant = 1e-12;   // zero test for T, K, delta
  double polycycle_log = 1e-10;  // |log r(Gamma)| genericity

  // Integrator and skeleton controls.
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  double max_step = 1e-2;
  double singular_ball = 1e-5;
  double endpoint_radius = 1e-4;
  double launch_offset = 1e-6;
  double connection = 1e-6;
  double bisection = 1e-10;
};

}  // namespace octo
