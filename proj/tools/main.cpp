// octo: classify cubic replicator systems of the unit square, draw their
// portraits and run parameter sweeps.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "octo/canonical.hpp"
#include "octo/errors.hpp"
#include "octo/genericity.hpp"
#include "octo/integrate.hpp"
#include "octo/omega.hpp"
#include "octo/render.hpp"
#include "octo/replicator.hpp"
#include "octo/report.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitNonGeneric = 2;
constexpr int kExitUnrealizable = 3;

// Failure that is reported with exit status 1 (I/O and malformed input).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string coeffs;
  bool canonical = false;
  std::string game;
};

struct Common {
  Input input;
  std::string out;
  std::string format;
  std::uint64_t seed = 1;
  octo::Tolerances tol;
};

std::vector<double> parse_list(const std::string& s, char sep = ',') {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw IoError("not a number: '" + item + "'");
    }
  }
  return out;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

octo::RawSystem raw_of(const std::vector<double>& v) {
  if (v.size() != 6) throw IoError("expected six coefficients a00,a10,a01,b00,b10,b01");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

octo::CanonicalSystem canonical_of(const std::vector<double>& v) {
  if (v.size() != 6) throw IoError("expected six canonical parameters alpha,beta,a10,a01,b10,b01");
  octo::CanonicalSystem c;
  c.alpha = v[0];
  c.beta = v[1];
  c.a10 = v[2];
  c.a01 = v[3];
  c.b10 = v[4];
  c.b01 = v[5];
  return c;
}

octo::Mat2 mat_of(const json& j) {
  const auto m = j.get<std::vector<std::vector<double>>>();
  if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2) throw IoError("payoff matrices must be 2x2");
  return {m[0][0], m[0][1], m[1][0], m[1][1]};
}

// The system described by the input flags. Raw coefficients pass the
// genericity gate first so that the error names the vanishing factor.
octo::CanonicalSystem load_system(const Common& o) {
  const int sources = !o.input.coeffs.empty() + !o.input.game.empty();
  if (sources != 1) throw IoError("give exactly one of --coeffs or --game");
  bool canonical = o.input.canonical;
  std::vector<double> v;
  octo::RawSystem raw;
  if (!o.input.coeffs.empty()) {
    v = parse_list(o.input.coeffs);
  } else {
    const json j = read_json(o.input.game);
    try {
      if (j.contains("canonical")) {
        v = j["canonical"].get<std::vector<double>>();
        canonical = true;
      } else if (j.contains("coeffs")) {
        v = j["coeffs"].get<std::vector<double>>();
      } else if (j.contains("A") && j.contains("B")) {
        raw = octo::reduce_two_player({mat_of(j["A"]), mat_of(j["B"])});
        v = {raw.a00, raw.a10, raw.a01, raw.b00, raw.b10, raw.b01};
      } else {
        throw IoError(o.input.game + ": expected \"canonical\", \"coeffs\" or payoff matrices \"A\" and \"B\"");
      }
    } catch (const json::exception& e) {
      throw IoError(o.input.game + ": " + e.what());
    }
  }
  if (canonical) return canonical_of(v);
  raw = raw_of(v);
  const octo::GenericityCheck g = octo::necessary_condition(raw, o.tol);
  if (!g.pass) throw octo::Error(octo::ErrorKind::non_generic, "a10 * b01 * det A vanishes", g.witnesses);
  return octo::to_canonical(raw, o.tol);
}

void add_input(CLI::App* cmd, Common& o) {
  cmd->add_option("--coeffs", o.input.coeffs, "a00,a10,a01,b00,b10,b01 (or alpha,beta,a10,a01,b10,b01)");
  cmd->add_flag("--canonical", o.input.canonical, "read --coeffs as canonical parameters");
  cmd->add_option("--game", o.input.game, "JSON file with \"coeffs\", \"canonical\" or 2x2 payoffs \"A\", \"B\"");
}

void add_common(CLI::App* cmd, Common& o, const std::string& default_format, std::vector<std::string> formats) {
  o.format = default_format;
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--seed", o.seed, "seed for randomized choices");
  auto pos = CLI::PositiveNumber;
  cmd->add_option("--tol-generic", o.tol.generic, "threshold on |a10 b01 det A|")->check(pos);
  cmd->add_option("--tol-boundary", o.tol.boundary, "distance of alpha, beta from 0 and 1")->check(pos);
  cmd->add_option("--tol-hyperbolic", o.tol.hyperbolic, "relative threshold on Re(lambda)")->check(pos);
  cmd->add_option("--tol-discriminant", o.tol.discriminant, "zero test for T, K, delta")->check(pos);
  cmd->add_option("--tol-equality", o.tol.equality, "collision test for p and q points")->check(pos);
  cmd->add_option("--tol-polycycle", o.tol.polycycle_log, "threshold on |log r|")->check(pos);
  cmd->add_option("--tol-bisection", o.tol.bisection, "return-map bisection width")->check(pos);
}

// Writes text to --out/name when an output directory is given, to stdout otherwise.
void emit(const Common& o, const std::string& name, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_file(fs::path(o.out) / name, text);
  }
}

// classify ---------------------------------------------------------------

int run_classify(const Common& o, bool fast) {
  const octo::CanonicalSystem c = load_system(o);
  octo::ReportOptions ro;
  ro.numerics = !fast;
  const octo::ClassificationReport r = octo::classify_system(c, ro, o.tol);
  if (o.format == "text") emit(o, "classify.txt", octo::to_text(r));
  else emit(o, "classify.json", octo::to_json(r));
  return 0;
}

// portrait ---------------------------------------------------------------

int run_portrait(const Common& o, const std::string& view, int grid) {
  const octo::CanonicalSystem c = load_system(o);
  octo::SkeletonOptions so;
  so.keep_paths = true;
  const octo::SeparatrixSkeleton sk = octo::trace_separatrices(c, so, o.tol);
  octo::RenderOptions ro;
  ro.sample_grid = grid;
  try {
    const octo::CycleResult cyc = octo::detect_limit_cycle(c, o.tol);
    if (cyc.found) ro.cycle_s = cyc.s;
  } catch (const octo::Error&) {
    // No return map outside the central node/focus configuration.
  }
  if (!o.out.empty()) {
    ro.view = octo::View::disk;
    emit(o, "portrait_disk.svg", octo::render_svg(c, sk, ro));
    ro.view = octo::View::square;
    emit(o, "portrait_square.svg", octo::render_svg(c, sk, ro));
    emit(o, "skeleton.json", octo::skeleton_json(c, sk));
    return 0;
  }
  if (o.format == "json") {
    emit(o, "", octo::skeleton_json(c, sk));
  } else {
    ro.view = view == "square" ? octo::View::square : octo::View::disk;
    emit(o, "", octo::render_svg(c, sk, ro));
  }
  return 0;
}

// simulate ---------------------------------------------------------------

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run_simulate(const Common& o, const std::string& start, double time) {
  const octo::CanonicalSystem c = load_system(o);
  octo::Vec2 p0;
  if (start.empty()) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double x = u(rng), y = u(rng);
    p0 = {x, y};
  } else {
    const auto v = parse_list(start);
    if (v.size() != 2) throw IoError("--start needs x,y");
    p0 = {v[0], v[1]};
  }
  // Starting points and output are in game coordinates, the unit square.
  octo::Controls ctl = octo::Controls::from(o.tol);
  ctl.max_time = std::fabs(time);
  const octo::PlaneTrajectory tr =
      octo::integrate(c, {p0.x - c.alpha, p0.y - c.beta}, time < 0.0 ? -1.0 : 1.0, ctl);
  std::ostringstream os;
  os << "t,x,y\n";
  for (std::size_t i = 0; i < tr.points.size(); ++i) {
    os << csv_number(tr.t[i]) << ',' << csv_number(tr.points[i].x + c.alpha) << ','
       << csv_number(tr.points[i].y + c.beta) << '\n';
  }
  emit(o, "trajectory.csv", os.str());
  return 0;
}

// sweep ------------------------------------------------------------------

struct Axis {
  std::string name;
  double from = 0.0, to = 0.0;
  int steps = 1;
  double at(int i) const { return steps == 1 ? from : from + (to - from) * i / (steps - 1); }
};

Axis parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4) throw IoError("--param expects NAME:FROM:TO:STEPS, got " + spec);
  Axis a;
  a.name = parts[0];
  a.from = parse_list(parts[1]).at(0);
  a.to = parse_list(parts[2]).at(0);
  a.steps = static_cast<int>(parse_list(parts[3]).at(0));
  if (a.steps < 1) throw IoError("STEPS must be positive in " + spec);
  return a;
}

double* slot(octo::RawSystem& r, octo::CanonicalSystem& c, bool canonical, const std::string& name) {
  static const std::vector<std::string> raw_names = {"a00", "a10", "a01", "b00", "b10", "b01"};
  static const std::vector<std::string> can_names = {"alpha", "beta", "a10", "a01", "b10", "b01"};
  if (canonical) {
    double* s[] = {&c.alpha, &c.beta, &c.a10, &c.a01, &c.b10, &c.b01};
    for (int i = 0; i < 6; ++i) {
      if (can_names[i] == name) return s[i];
    }
  } else {
    double* s[] = {&r.a00, &r.a10, &r.a01, &r.b00, &r.b10, &r.b01};
    for (int i = 0; i < 6; ++i) {
      if (raw_names[i] == name) return s[i];
    }
  }
  throw IoError("unknown parameter " + name + (canonical ? " (canonical input)" : " (raw input)"));
}

struct SweepRow {
  std::vector<double> params;
  int position = 0;
  int family = 0;
  std::string label;  // portrait when resolved, row otherwise, error kind on failure
  std::string cls;
  std::string cycle;
  std::string audit;
};

SweepRow sweep_cell(octo::RawSystem raw, octo::CanonicalSystem can, bool canonical, bool fast,
                    const octo::Tolerances& tol) {
  SweepRow row;
  row.params = canonical ? std::vector<double>{can.alpha, can.beta, can.a10, can.a01, can.b10, can.b01}
                         : std::vector<double>{raw.a00, raw.a10, raw.a01, raw.b00, raw.b10, raw.b01};
  try {
    if (!canonical) {
      const octo::GenericityCheck g = octo::necessary_condition(raw, tol);
      if (!g.pass) throw octo::Error(octo::ErrorKind::non_generic, "a10 * b01 * det A vanishes", g.witnesses);
      can = octo::to_canonical(raw, tol);
    }
    octo::ReportOptions ro;
    ro.numerics = !fast;
    const octo::ClassificationReport r = octo::classify_system(can, ro, tol);
    row.position = r.position.index;
    row.family = r.label.family;
    if (r.label.position != 1) {
      row.label = "";
    } else if (r.label.resolved) {
      row.label = r.label.portrait;
    } else {
      std::string all;
      for (const auto& s : r.label.candidates) all += (all.empty() ? "" : "|") + s;
      row.label = all;
    }
    row.cls = r.classes ? r.classes->disk_class : "";
    if (!r.limit_cycle.applicable) row.cycle = "na";
    else if (r.limit_cycle.numerical) row.cycle = r.limit_cycle.numerical->found ? "yes" : "no";
    else row.cycle = r.limit_cycle.criterion ? "yes" : "no";
    row.audit = r.audit.pass ? "true" : "false";
  } catch (const octo::Error& e) {
    row.label = octo::to_string(e.kind());
    row.cycle = "na";
    row.audit = "false";
  }
  return row;
}

int run_sweep(const Common& o, const std::vector<std::string>& specs, bool fast, int jobs) {
  if (specs.empty() || specs.size() > 2) throw IoError("sweep needs one or two --param axes");
  std::vector<Axis> axes;
  for (const auto& s : specs) axes.push_back(parse_axis(s));
  const int sources = !o.input.coeffs.empty() + !o.input.game.empty();
  if (sources != 1) throw IoError("give exactly one of --coeffs or --game as the base system");
  // The base is read without the genericity gate: a degenerate base is fine
  // as long as the swept cells are generic.
  bool canonical = o.input.canonical;
  std::vector<double> base;
  if (!o.input.coeffs.empty()) {
    base = parse_list(o.input.coeffs);
  } else {
    const json j = read_json(o.input.game);
    canonical = j.contains("canonical");
    base = j.value(canonical ? "canonical" : "coeffs", std::vector<double>{});
  }
  octo::RawSystem raw0;
  octo::CanonicalSystem can0;
  if (canonical) can0 = canonical_of(base);
  else raw0 = raw_of(base);
  for (const auto& a : axes) slot(raw0, can0, canonical, a.name);

  const int n0 = axes[0].steps;
  const int n1 = axes.size() > 1 ? axes[1].steps : 1;
  std::vector<std::pair<octo::RawSystem, octo::CanonicalSystem>> cells;
  for (int i = 0; i < n0; ++i) {
    for (int j = 0; j < n1; ++j) {
      octo::RawSystem r = raw0;
      octo::CanonicalSystem c = can0;
      *slot(r, c, canonical, axes[0].name) = axes[0].at(i);
      if (axes.size() > 1) *slot(r, c, canonical, axes[1].name) = axes[1].at(j);
      cells.emplace_back(r, c);
    }
  }
  // Cells are independent; workers take interleaved cells and the rows are
  // written back in grid order.
  std::vector<SweepRow> rows(cells.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  std::vector<std::future<void>> pool;
  for (int w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < cells.size(); k += workers) {
        rows[k] = sweep_cell(cells[k].first, cells[k].second, canonical, fast, o.tol);
      }
    }));
  }
  for (auto& f : pool) f.get();

  std::ostringstream os;
  if (o.format == "text") {
    // Label changes along the grid.
    std::string prev;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].label == prev) continue;
      os << (prev.empty() ? "start" : "transition") << " at";
      for (const auto& a : axes) os << ' ' << a.name << '=' << csv_number(*slot(cells[k].first, cells[k].second, canonical, a.name));
      os << ": " << (prev.empty() ? "" : prev + " -> ") << rows[k].label << '\n';
      prev = rows[k].label;
    }
    emit(o, "sweep.txt", os.str());
    return 0;
  }
  os << (canonical ? "alpha,beta,a10,a01,b10,b01" : "a00,a10,a01,b00,b10,b01")
     << ",position,family,case,class,limit_cycle,audit_pass\n";
  for (const auto& r : rows) {
    for (double v : r.params) os << csv_number(v) << ',';
    os << r.position << ',' << r.family << ',' << r.label << ',' << r.cls << ',' << r.cycle << ',' << r.audit
       << '\n';
  }
  emit(o, "sweep.csv", os.str());
  return 0;
}

// replicator -------------------------------------------------------------

int run_replicator(const Common& o, const std::string& matrix, const std::string& x0, double dt, int steps,
                   int every) {
  std::vector<std::vector<double>> rows;
  if (!matrix.empty()) {
    std::stringstream ss(matrix);
    std::string line;
    while (std::getline(ss, line, ';')) rows.push_back(parse_list(line));
  } else if (!o.input.game.empty()) {
    const json j = read_json(o.input.game);
    if (!j.contains("matrix")) throw IoError(o.input.game + ": expected \"matrix\"");
    rows = j["matrix"].get<std::vector<std::vector<double>>>();
  } else {
    throw IoError("replicator needs --matrix or --game");
  }
  const octo::PayoffMatrixN A(rows);
  std::vector<double> x;
  if (x0.empty()) {
    // Uniform point of the simplex from normalized exponential draws.
    std::mt19937_64 rng(o.seed);
    std::exponential_distribution<double> e(1.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < A.size(); ++i) sum += x.emplace_back(e(rng));
    for (auto& v : x) v /= sum;
  } else {
    x = parse_list(x0);
  }
  const auto traj = octo::simulate_replicator(octo::SimplexPoint(x), A, dt, static_cast<std::size_t>(steps));
  std::ostringstream os;
  os << 't';
  for (std::size_t i = 0; i < A.size(); ++i) os << ",x" << i + 1;
  os << '\n';
  for (std::size_t k = 0; k < traj.size(); k += std::max(every, 1)) {
    os << csv_number(k * dt);
    for (double v : traj[k]) os << ',' << csv_number(v);
    os << '\n';
  }
  emit(o, "replicator.csv", os.str());
  return 0;
}

// example-corruption -----------------------------------------------------

int run_corruption(const Common& o, const octo::CorruptionPayoffs& p, int grid) {
  const octo::RawSystem raw = octo::reduce_two_player(octo::corruption_game(p));
  json j;
  j["payoffs"] = {{"W", p.W},     {"M", p.M},     {"Mc", p.Mc}, {"Mg", p.Mg}, {"Mg_prime", p.Mg_prime},
                  {"e", p.e},     {"VGc", p.VGc}, {"VGnc", p.VGnc}, {"K", p.K}, {"P", p.P}};
  j["coeffs"] = {raw.a00, raw.a10, raw.a01, raw.b00, raw.b10, raw.b01};
  j["sign_conditions"] = {{"b00 > 0", raw.b00 > 0.0},
                          {"b00 + b10 < 0", raw.b00 + raw.b10 < 0.0},
                          {"a00 > 0", raw.a00 > 0.0},
                          {"a00 + a01 < 0", raw.a00 + raw.a01 < 0.0}};
  const octo::GenericityCheck g = octo::necessary_condition(raw, o.tol);
  j["generic"] = g.pass;
  j["genericity_witnesses"] = g.witnesses;
  // Payoff-matrix games always have a10 = b01 = 0, so the classification
  // does not apply; the portrait is read off the equilibria and the
  // omega-limits of a grid of initial conditions instead.
  json eq = json::array();
  for (const auto& e : octo::square_equilibria(raw)) {
    const double h = 1e-7;
    const octo::Vec2 p0 = e.location;
    const octo::Vec2 fx = (1.0 / (2 * h)) * (raw.field({p0.x + h, p0.y}) - raw.field({p0.x - h, p0.y}));
    const octo::Vec2 fy = (1.0 / (2 * h)) * (raw.field({p0.x, p0.y + h}) - raw.field({p0.x, p0.y - h}));
    const octo::Mat2 J{fx.x, fy.x, fx.y, fy.y};
    eq.push_back({{"id", e.id},
                  {"location", {p0.x, p0.y}},
                  {"type", octo::to_string(octo::classify_linear(J, o.tol))}});
  }
  j["equilibria"] = eq;
  std::map<std::string, int> counts;
  for (const auto& e : octo::omega_grid(raw, grid)) counts[e.limit.empty() ? "none" : e.limit]++;
  j["omega_grid"] = {{"n", grid}, {"limits", counts}};
  if (o.format == "text") {
    std::ostringstream os;
    os << "coefficients a00=" << raw.a00 << " a10=" << raw.a10 << " a01=" << raw.a01 << " b00=" << raw.b00
       << " b10=" << raw.b10 << " b01=" << raw.b01 << "\n";
    for (const auto& [k, v] : j["sign_conditions"].items()) os << "  " << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
    os << "generic: " << (g.pass ? "yes" : "no") << "\n";
    for (const auto& e : eq) os << "  " << e["id"].get<std::string>() << "  " << e["type"].get<std::string>() << "\n";
    os << "omega-limits of a " << grid << "x" << grid << " grid:";
    for (const auto& [k, v] : counts) os << " " << k << "=" << v;
    os << "\n";
    emit(o, "corruption.txt", os.str());
  } else {
    emit(o, "corruption.json", j.dump(2));
  }
  return 0;
}

int exit_code(octo::ErrorKind k) {
  switch (k) {
    case octo::ErrorKind::non_generic:
    case octo::ErrorKind::singular_payoff_matrix:
      return kExitNonGeneric;
    case octo::ErrorKind::unrealizable_position:
      return kExitUnrealizable;
    default:
      return kExitIo;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase portraits of cubic replicator systems on the unit square"};
  app.require_subcommand(1);

  Common o;
  bool fast = false;
  auto* classify = app.add_subcommand("classify", "position, case, classes, limit cycle and audit");
  add_input(classify, o);
  add_common(classify, o, "json", {"json", "text"});
  classify->add_flag("--fast", fast, "skip separatrix tracing and the return map");

  std::string view = "disk";
  int grid = 5;
  auto* portrait = app.add_subcommand("portrait", "SVG portrait and JSON skeleton");
  add_input(portrait, o);
  add_common(portrait, o, "svg", {"svg", "json"});
  portrait->add_option("--view", view, "disk or square")->check(CLI::IsMember({"disk", "square"}));
  portrait->add_option("--grid", grid, "sample orbits per side")->check(CLI::PositiveNumber);

  std::string start;
  double time = 50.0;
  auto* simulate = app.add_subcommand("simulate", "trajectory CSV in game coordinates");
  add_input(simulate, o);
  add_common(simulate, o, "csv", {"csv"});
  simulate->add_option("--start", start, "x,y in the unit square (random from --seed when absent)");
  simulate->add_option("--time", time, "integration time, negative for backward");

  std::vector<std::string> params;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* sweep = app.add_subcommand("sweep", "grid over one or two parameters");
  add_input(sweep, o);
  add_common(sweep, o, "csv", {"csv", "text"});
  sweep->add_option("--param", params, "NAME:FROM:TO:STEPS, once or twice")->required();
  sweep->add_flag("--fast", fast, "skip separatrix tracing and the return map");
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string matrix, x0;
  double dt = 0.01;
  int steps = 1000, every = 10;
  auto* replicator = app.add_subcommand("replicator", "n-strategy replicator simulation");
  replicator->add_option("--matrix", matrix, "payoff rows separated by ';', entries by ','");
  replicator->add_option("--game", o.input.game, "JSON file with \"matrix\"");
  add_common(replicator, o, "csv", {"csv"});
  replicator->add_option("--x0", x0, "initial mixed strategy (random from --seed when absent)");
  replicator->add_option("--dt", dt, "RK4 step")->check(CLI::PositiveNumber);
  replicator->add_option("--steps", steps, "number of steps")->check(CLI::NonNegativeNumber);
  replicator->add_option("--every", every, "write every k-th state")->check(CLI::PositiveNumber);

  octo::CorruptionPayoffs pay;
  int omega_n = 20;
  auto* corruption = app.add_subcommand("example-corruption", "officials/government corruption game");
  add_common(corruption, o, "json", {"json", "text"});
  corruption->add_option("--W", pay.W, "officials' wage");
  corruption->add_option("--M", pay.M, "fine on a corrupt official");
  corruption->add_option("--Mc", pay.Mc, "bribe taken by a corrupt official");
  corruption->add_option("--Mg", pay.Mg, "share of the bribe passed on");
  corruption->add_option("--Mg-prime", pay.Mg_prime, "payment of an honest official");
  corruption->add_option("--e", pay.e, "cost of capturing a corrupt official");
  corruption->add_option("--VGc", pay.VGc, "re-election value, corrupt government");
  corruption->add_option("--VGnc", pay.VGnc, "re-election value, honest government");
  corruption->add_option("--K", pay.K, "citizens paid for votes");
  corruption->add_option("--P", pay.P, "unit vote price");
  corruption->add_option("--grid", omega_n, "initial conditions per side")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitIo;
  }

  try {
    if (*classify) return run_classify(o, fast);
    if (*portrait) return run_portrait(o, view, grid);
    if (*simulate) return run_simulate(o, start, time);
    if (*sweep) return run_sweep(o, params, fast, jobs);
    if (*replicator) return run_replicator(o, matrix, x0, dt, steps, every);
    if (*corruption) return run_corruption(o, pay, omega_n);
  } catch (const octo::Error& e) {
    std::cerr << octo::error_json(octo::to_string(e.kind()), e.what(), e.witnesses()) << '\n';
    return exit_code(e.kind());
  } catch (const IoError& e) {
    std::cerr << octo::error_json("IO", e.what()) << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << octo::error_json("Internal", e.what()) << '\n';
    return kExitIo;
  }
  return 0;
}
