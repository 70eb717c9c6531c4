#include "octo/render.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "octo/integrate.hpp"

namespace octo {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* color_of(LocalType t) {
  if (is_attractor(t)) return "#1f4e9c";
  if (is_repeller(t)) return "#b22222";
  if (t == LocalType::saddle) return "#2e7d32";
  return "#777777";
}

// Maps model coordinates to pixels. The disk view uses disk coordinates in
// [-1, 1]^2; the square view uses game coordinates (x + alpha, y + beta) in
// [0, 1]^2.
struct Canvas {
  View view;
  double size;
  double pad = 20.0;

  Vec2 px(Vec2 p) const {
    const double s = size - 2.0 * pad;
    if (view == View::disk) return {pad + 0.5 * (p.x + 1.0) * s, pad + 0.5 * (1.0 - p.y) * s};
    return {pad + p.x * s, pad + (1.0 - p.y) * s};
  }
};

class Svg {
 public:
  Svg(const CanonicalSystem& c, const RenderOptions& opt) : c_(c), cv_{opt.view, static_cast<double>(opt.size)} {
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size << "\" height=\""
        << opt.size << "\" viewBox=\"0 0 " << opt.size << " " << opt.size << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  // Model point of a sphere point, or false when it is outside the view.
  bool model(const Vec3& y, Vec2& out) const {
    if (cv_.view == View::disk) {
      out = disk_of_sphere(y);
      return true;
    }
    if (y[2] <= 1e-12) return false;
    const Vec2 p = plane_of_sphere(y);
    out = {p.x + c_.alpha, p.y + c_.beta};
    const double e = 1e-9;
    return out.x >= -e && out.x <= 1.0 + e && out.y >= -e && out.y <= 1.0 + e;
  }

  void polyline(const std::vector<Vec3>& pts, const char* stroke, double width, const char* cls) {
    std::string d;
    bool pen = false;
    for (const auto& y : pts) {
      Vec2 m;
      if (!model(y, m)) {
        pen = false;
        continue;
      }
      const Vec2 p = cv_.px(m);
      d += (pen ? " L" : " M") + fmt(p.x) + "," + fmt(p.y);
      pen = true;
    }
    if (d.empty()) return;
    os_ << "<path class=\"" << cls << "\" d=\"" << d.substr(1) << "\" fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"" << width << "\"/>\n";
  }

  void frame() {
    if (cv_.view == View::disk) {
      const Vec2 o = cv_.px({0.0, 0.0});
      const double r = 0.5 * (cv_.size - 2.0 * cv_.pad);
      os_ << "<circle class=\"boundary\" cx=\"" << fmt(o.x) << "\" cy=\"" << fmt(o.y) << "\" r=\"" << fmt(r)
          << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    } else {
      const Vec2 a = cv_.px({0.0, 1.0});
      const double s = cv_.size - 2.0 * cv_.pad;
      os_ << "<rect class=\"boundary\" x=\"" << fmt(a.x) << "\" y=\"" << fmt(a.y) << "\" width=\"" << fmt(s)
          << "\" height=\"" << fmt(s) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
  }

  // The four invariant lines, sampled along their length.
  void octothorpe() {
    if (cv_.view == View::square) return;  // they are the sides of the square
    const double xs[2] = {-c_.alpha, 1.0 - c_.alpha};
    const double ys[2] = {-c_.beta, 1.0 - c_.beta};
    for (int k = 0; k < 4; ++k) {
      std::vector<Vec3> pts;
      for (int i = -200; i <= 200; ++i) {
        const double t = std::tan(0.499 * M_PI * i / 200.0);
        const Vec2 p = k < 2 ? Vec2{xs[k], t} : Vec2{t, ys[k - 2]};
        pts.push_back(sphere_of_plane(p));
      }
      polyline(pts, "#999999", 0.8, "invariant");
    }
  }

  void point(const SingularPoint& s) {
    Vec2 m;
    if (!model(s.sphere, m)) return;
    const Vec2 p = cv_.px(m);
    const char* col = color_of(s.report.type);
    const bool filled = is_attractor(s.report.type) || s.report.type == LocalType::saddle;
    os_ << "<circle class=\"singularity\" data-id=\"" << s.report.id << "\" data-type=\"" << to_string(s.report.type)
        << "\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"4\" fill=\"" << (filled ? col : "white")
        << "\" stroke=\"" << col << "\" stroke-width=\"1.5\"/>\n";
  }

  std::string str() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  const CanonicalSystem& c_;
  Canvas cv_;
  std::ostringstream os_;
};

std::vector<Vec3> sample_orbit(const CanonicalSystem& c, const std::vector<SingularPoint>& sing, Vec3 start,
                               double time) {
  Controls ctl;
  ctl.max_time = time;
  ctl.max_steps = 20000;
  auto stop = [&](double, const Vec3& y) {
    for (const auto& s : sing) {
      if (sphere_distance(y, s.sphere) < 1e-4) return true;
    }
    return false;
  };
  std::vector<Vec3> out;
  const SphereTrajectory back = integrate_sphere(c, start, -1.0, ctl, stop);
  for (auto it = back.points.rbegin(); it != back.points.rend(); ++it) out.push_back(*it);
  const SphereTrajectory fwd = integrate_sphere(c, start, 1.0, ctl, stop);
  out.insert(out.end(), fwd.points.begin() + 1, fwd.points.end());
  return out;
}

// One turn of the cycle through s * p3, traced in the plane.
std::vector<Vec3> cycle_orbit(const CanonicalSystem& c, double s) {
  const Vec2 start = s * Vec2{1.0 - c.alpha, 1.0 - c.beta};
  double winding = 0.0;
  Vec2 prev = start;
  Controls ctl;
  ctl.max_time = 1e4;
  auto stop = [&](double, Vec2 p) {
    winding += std::atan2(prev.x * p.y - prev.y * p.x, prev.x * p.x + prev.y * p.y);
    prev = p;
    return std::fabs(winding) >= 2.0 * M_PI;
  };
  const PlaneTrajectory tr = integrate(c, start, 1.0, ctl, stop);
  std::vector<Vec3> out;
  for (const auto& p : tr.points) out.push_back(sphere_of_plane(p));
  return out;
}

}  // namespace

std::string render_svg(const CanonicalSystem& c, const SeparatrixSkeleton& sk, const RenderOptions& opt) {
  Svg svg(c, opt);
  svg.frame();
  svg.octothorpe();
  const int n = std::max(opt.sample_grid, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = (i + 0.5) / n, v = (j + 0.5) / n;
      Vec3 start;
      if (opt.view == View::square) {
        start = sphere_of_plane({u - c.alpha, v - c.beta});
      } else {
        // Grid on the disk, pulled back to the upper hemisphere.
        const double x = 1.8 * u - 0.9, y = 1.8 * v - 0.9;
        if (x * x + y * y >= 0.81) continue;
        start = {x, y, std::sqrt(1.0 - x * x - y * y)};
      }
      svg.polyline(sample_orbit(c, sk.singularities, start, opt.sample_time), "#bbbbbb", 0.6, "orbit");
    }
  }
  for (const auto& s : sk.separatrices) svg.polyline(s.path.points, "#222222", 1.2, "separatrix");
  if (opt.cycle_s > 0.0) svg.polyline(cycle_orbit(c, opt.cycle_s), "#8e24aa", 1.8, "cycle");
  for (const auto& s : sk.singularities) svg.point(s);
  return svg.str();
}

std::string skeleton_json(const CanonicalSystem& c, const SeparatrixSkeleton& sk, int indent) {
  using json = nlohmann::ordered_json;
  json sing = json::array();
  for (const auto& s : sk.singularities) {
    const Vec2 d = disk_of_sphere(s.sphere);
    sing.push_back({{"id", s.report.id},
                    {"type", to_string(s.report.type)},
                    {"at_infinity", s.report.at_infinity()},
                    {"disk", {d.x, d.y}}});
  }
  json seps = json::array();
  std::set<std::string> cycles;
  for (const auto& s : sk.separatrices) {
    json pts = json::array();
    for (const auto& y : s.path.points) {
      const Vec2 d = disk_of_sphere(y);
      pts.push_back({d.x, d.y});
    }
    seps.push_back({{"from", s.saddle},
                    {"direction", s.direction > 0 ? "unstable" : "stable"},
                    {"to", s.endpoint},
                    {"kind", to_string(s.kind)},
                    {"ambiguous", s.ambiguous},
                    {"points", pts}});
    if (s.kind == EndpointKind::cycle) cycles.insert(s.endpoint);
  }
  json j = {{"system", {{"alpha", c.alpha}, {"beta", c.beta}, {"a10", c.a10}, {"a01", c.a01}, {"b10", c.b10},
                        {"b01", c.b01}}},
            {"singularities", sing},
            {"separatrices", seps},
            {"cycles", std::vector<std::string>(cycles.begin(), cycles.end())}};
  return j.dump(indent);
}

}  // namespace octo
