#include "octo/omega.hpp"

#include <cmath>

#include "octo/integrate.hpp"

namespace octo {

std::vector<SquareEquilibrium> square_equilibria(const RawSystem& s) {
  std::vector<SquareEquilibrium> out = {
      {"(0,0)", {0.0, 0.0}}, {"(1,0)", {1.0, 0.0}}, {"(0,1)", {0.0, 1.0}}, {"(1,1)", {1.0, 1.0}}};
  auto open = [](double v) { return v > 0.0 && v < 1.0; };
  // On y = const the first factor a00 + a10 x + a01 y vanishes at one x.
  for (double y : {0.0, 1.0}) {
    if (s.a10 == 0.0) continue;
    const double x = -(s.a00 + s.a01 * y) / s.a10;
    if (open(x)) out.push_back({y == 0.0 ? "edge:y=0" : "edge:y=1", {x, y}});
  }
  for (double x : {0.0, 1.0}) {
    if (s.b01 == 0.0) continue;
    const double y = -(s.b00 + s.b10 * x) / s.b01;
    if (open(y)) out.push_back({x == 0.0 ? "edge:x=0" : "edge:x=1", {x, y}});
  }
  const double det = s.detA();
  if (det != 0.0) {
    const double x = (-s.a00 * s.b01 + s.a01 * s.b00) / det;
    const double y = (-s.a10 * s.b00 + s.a00 * s.b10) / det;
    if (open(x) && open(y)) out.push_back({"interior", {x, y}});
  }
  return out;
}

std::vector<OmegaEstimate> omega_grid(const RawSystem& s, int n, double max_time, double radius) {
  const auto eq = square_equilibria(s);
  Controls ctl;
  ctl.max_time = max_time;
  std::vector<OmegaEstimate> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      OmegaEstimate e;
      e.start = {(i + 0.5) / n, (j + 0.5) / n};
      auto stop = [&](double, Vec2 p) {
        for (const auto& q : eq) {
          if (norm(p - q.location) < radius) {
            e.limit = q.id;
            return true;
          }
        }
        return false;
      };
      const PlaneTrajectory tr = integrate_plane([&](Vec2 p) { return s.field(p); }, e.start, 1.0, ctl, stop);
      e.end = tr.points.back();
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace octo
