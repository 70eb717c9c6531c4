#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run octo(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / "octo_cli_test";
  fs::create_directories(dir);
  const fs::path out = dir / "stdout.txt", err = dir / "stderr.txt";
  const std::string cmd = std::string("\"") + OCTO_CLI_PATH + "\" " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

const char* kCycle = "--canonical --coeffs 0.5,0.5,1,3,-1,-0.5";

}  // namespace

TEST_CASE("classify json") {
  const Run r = octo(std::string("classify --fast ") + kCycle);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["position"] == 1);
  CHECK(j["family"] == 4);
  CHECK(j["case"] == "4.1b.i");
  CHECK(j["class"]["disk"] == "4.1b.i");
  CHECK(j["limit_cycle"]["criterion"] == true);
  CHECK(j["discriminants"]["K"].get<double>() == doctest::Approx(0.125));
  CHECK(j["audit"]["pass"] == true);
}

TEST_CASE("classify from raw coefficients and a game file") {
  // Interior equilibrium (1/2, 1/2) with A = identity.
  const Run r = octo("classify --fast --coeffs -0.5,1,0,-0.5,0,1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["input"]["alpha"].get<double>() == doctest::Approx(0.5));
  CHECK(j["input"]["beta"].get<double>() == doctest::Approx(0.5));

  const fs::path game = fs::temp_directory_path() / "octo_cli_test" / "game.json";
  std::ofstream(game) << R"({"canonical": [0.5, 0.5, 1, 3, -1, -0.5]})";
  const Run g = octo("classify --fast --game " + game.string());
  REQUIRE(g.code == 0);
  CHECK(nlohmann::json::parse(g.out)["case"] == "4.1b.i");
}

TEST_CASE("classify text with numerics") {
  const Run r = octo(std::string("classify --format text ") + kCycle);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("case       4.1b.i") != std::string::npos);
  CHECK(r.out.find("return map: cycle at s=") != std::string::npos);
}

TEST_CASE("error exits") {
  const Run a = octo("classify --coeffs 1,0,2,1,3,4");
  CHECK(a.code == 2);
  CHECK(a.out.empty());
  const auto ea = nlohmann::json::parse(a.err)["error"];
  CHECK(ea["kind"] == "NonGeneric");
  CHECK(ea["witnesses"] == nlohmann::json::array({"a10"}));

  const Run b = octo("classify --canonical --coeffs 0.5,0.5,1,1,1,-1");
  CHECK(b.code == 2);
  CHECK(nlohmann::json::parse(b.err)["error"]["witnesses"][0] == "q1-p2");

  const Run c = octo("classify --canonical --coeffs 0,0.5,1,3,-1,-0.5");
  CHECK(c.code == 2);
  CHECK(nlohmann::json::parse(c.err)["error"]["witnesses"][0] == "alpha");

  const Run d = octo("classify --coeffs 1,2");
  CHECK(d.code == 1);
  CHECK(nlohmann::json::parse(d.err)["error"]["kind"] == "IO");

  CHECK(octo("classify --game /nonexistent/game.json").code == 1);
  CHECK(octo("classify --format yaml --coeffs 1,1,1,1,1,1").code == 1);
  CHECK(octo("--help").code == 0);
}

TEST_CASE("portrait writes its three files") {
  const fs::path dir = fs::temp_directory_path() / "octo_cli_test" / "portrait";
  fs::remove_all(dir);
  const Run r = octo(std::string("portrait --grid 2 --out ") + dir.string() + " " + kCycle);
  REQUIRE(r.code == 0);
  CHECK(slurp(dir / "portrait_disk.svg").find("<svg") != std::string::npos);
  CHECK(slurp(dir / "portrait_square.svg").find("class=\"cycle\"") != std::string::npos);
  const auto sk = nlohmann::json::parse(slurp(dir / "skeleton.json"));
  CHECK(sk["separatrices"].size() > 0);
}

TEST_CASE("simulate stays in the square") {
  const Run r = octo(std::string("simulate --start 0.2,0.3 --time 5 ") + kCycle);
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,x,y");
  int rows = 0;
  while (std::getline(in, line)) {
    double t, x, y;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &x, &y) == 3);
    CHECK(x > 0.0);
    CHECK(x < 1.0);
    CHECK(y > 0.0);
    CHECK(y < 1.0);
    ++rows;
  }
  CHECK(rows > 10);
}

TEST_CASE("sweep") {
  const Run r = octo("sweep --fast --canonical --coeffs 0.5,0.5,1,5,1,-0.5 --param a10:0.05:4.995:3");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "alpha,beta,a10,a01,b10,b01,position,family,case,class,limit_cycle,audit_pass");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 3);

  const Run t = octo("sweep --format text --canonical --coeffs 0.5,0.5,1,5,1,-0.5 --param a10:0.05:4.995:3");
  REQUIRE(t.code == 0);
  CHECK(t.out.find("2.1a1 -> 2.1a4") != std::string::npos);
}

TEST_CASE("replicator") {
  const Run r = octo("replicator --matrix \"0,1;1,0\" --x0 0.3,0.7 --steps 100 --every 100");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,x1,x2");
  std::getline(in, line);
  std::getline(in, line);
  double t, x1, x2;
  REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &x1, &x2) == 3);
  CHECK(x1 + x2 == doctest::Approx(1.0));
  CHECK(x1 > 0.3);  // the anti-coordination game pulls toward (1/2, 1/2)
  CHECK(octo("replicator --matrix \"0,1;1,0\" --x0 0.3,0.6").code == 1);
}

TEST_CASE("corruption example") {
  const Run r = octo("example-corruption --grid 4");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coeffs"] == nlohmann::json::array({2.0, 0.0, -4.5, 2.0, -7.5, 0.0}));
  CHECK(j["generic"] == false);
}
