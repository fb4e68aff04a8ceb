#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "hmap/extremal.hpp"
#include "hmap/mapping_io.hpp"

using namespace hmap;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_tool(const std::string& args) {
  const std::string out_path =
      std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
      "/hmtool_out.txt";
  const std::string cmd =
      std::string(HMTOOL_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.output = slurp(out_path);
  return r;
}

std::string temp_path(const std::string& name) {
  return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
         "/" + name;
}

}  // namespace

TEST_CASE("JSON round trip is bit-exact on random documents") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> ord(2, 20);
  std::uniform_real_distribution<double> scale(-20.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = ord(rng);
    std::vector<Complex> h(static_cast<size_t>(order) + 1);
    std::vector<Complex> g(static_cast<size_t>(order) + 1);
    h[1] = 1.0;
    for (int n = 2; n <= order; ++n) {
      const double s = std::exp2(scale(rng));
      h[static_cast<size_t>(n)] = Complex{coeff(rng) * s, coeff(rng) * s};
      g[static_cast<size_t>(n)] = Complex{coeff(rng) * s, coeff(rng) * s};
    }
    MappingDocument doc;
    doc.params = ClassParams(std::abs(coeff(rng)) * 3.0,
                             std::abs(coeff(rng)) * 0.99);
    doc.mapping = HarmonicMapping(PowerSeries{h}, PowerSeries{g});

    const std::string text = document_to_json(doc);
    const MappingDocument back = document_from_json(text);
    CHECK(back.params.alpha == doc.params.alpha);
    CHECK(back.params.beta == doc.params.beta);
    REQUIRE(back.mapping.h().order() == order);
    REQUIRE(back.mapping.g().order() == order);
    for (int n = 0; n <= order; ++n) {
      CHECK(back.mapping.h().coeff(n) == doc.mapping.h().coeff(n));
      CHECK(back.mapping.g().coeff(n) == doc.mapping.g().coeff(n));
    }
    // Serialize-again stability (shortest round-trip representation).
    CHECK(document_to_json(back) == text);
  }
}

TEST_CASE("document_from_json errors") {
  CHECK_THROWS_WITH_AS(document_from_json("{not json"),
                       doctest::Contains("parse error"), std::runtime_error);
  // h'(0) != 1
  CHECK_THROWS_WITH_AS(
      document_from_json(
          R"({"alpha":0,"beta":0,"h":[[0,0],[2,0]],"g":[[0,0]]})"),
      doctest::Contains("h'(0)"), std::runtime_error);
  // missing field
  CHECK_THROWS_WITH_AS(
      document_from_json(R"({"alpha":0,"beta":0,"h":[[0,0],[1,0]]})"),
      doctest::Contains("'g'"), std::runtime_error);
  // malformed coefficient pair
  CHECK_THROWS_WITH_AS(
      document_from_json(
          R"({"alpha":0,"beta":0,"h":[[0,0],[1,0]],"g":[[0]]})"),
      doctest::Contains("[re, im]"), std::runtime_error);
  // invalid class parameters
  CHECK_THROWS_AS(
      document_from_json(
          R"({"alpha":-1,"beta":0,"h":[[0,0],[1,0]],"g":[[0,0]]})"),
      std::runtime_error);
}

TEST_CASE("documented example parses to the n=2 sharp mapping") {
  const MappingDocument doc = document_from_json(
      R"({"alpha":1,"beta":0,"h":[[0,0],[1,0]],"g":[[0,0],[0,0],[0.25,0]]})");
  const HarmonicMapping e = extremal_bn(2, ClassParams(1.0, 0.0));
  CHECK(approx_equal(doc.mapping.h(), e.h()));
  CHECK(approx_equal(doc.mapping.g(), e.g(), 0.0));
}

TEST_CASE("emit_curves") {
  const HarmonicMapping id(PowerSeries::monomial(1), PowerSeries::zero(1));
  std::ostringstream out;
  emit_curves(id, {0.5}, 16, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "r,theta,re_f,im_f,jacobian");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 16);
  CHECK(rows[0] == "0.5,0.0,0.5,0.0,1.0");
  // theta = pi/2 and pi land on the axes.
  CHECK(rows[4].find("0.5,1.5707963267948966,") == 0);
  CHECK(rows[8].find(",-0.5,") != std::string::npos);

  // jacobian column equals point_data's jacobian (same computation).
  const HarmonicMapping e = extremal_bn(2, ClassParams(1.0, 0.0));
  std::ostringstream out2;
  emit_curves(e, {0.5}, 16, out2);
  std::istringstream in2(out2.str());
  std::getline(in2, line);
  std::getline(in2, line);  // theta = 0 row
  const double j = std::stod(line.substr(line.rfind(',') + 1));
  CHECK(j == point_data(e, Complex{0.5, 0.0}).jacobian);
  // f(0.5) = 0.5 + conj(0.0625)
  CHECK(line.find("0.5625") != std::string::npos);

  std::ostringstream sink;
  CHECK_THROWS_AS(emit_curves(id, {0.5}, 4, sink), std::invalid_argument);
  CHECK_THROWS_AS(emit_curves(id, {1.5}, 16, sink), std::invalid_argument);
}

TEST_CASE("CLI golden files") {
  const RunResult radius = run_tool("radius --kind r1 --beta 0");
  CHECK(radius.exit_code == 0);
  CHECK(radius.output == slurp(std::string(GOLDEN_DIR) + "/radius_r1_beta0.json"));

  const RunResult cond = run_tool("hypergeo cond --id C64i --alpha 0 --beta 0");
  CHECK(cond.exit_code == 1);  // condition fails
  CHECK(cond.output == slurp(std::string(GOLDEN_DIR) + "/cond_c64i.json"));

  const std::string id_doc = temp_path("identity.json");
  {
    MappingDocument doc;
    doc.mapping = HarmonicMapping(PowerSeries::monomial(1), PowerSeries::zero(1));
    save_mapping(id_doc, doc);
  }
  const std::string csv = temp_path("identity_curves.csv");
  const RunResult plot = run_tool("plot-data --input " + id_doc +
                                  " --radii 0.5 --samples 16 --out " + csv);
  CHECK(plot.exit_code == 0);
  CHECK(slurp(csv) == slurp(std::string(GOLDEN_DIR) + "/plot_identity.csv"));
}

TEST_CASE("CLI exit code contract") {
  CHECK(run_tool("no-such-command").exit_code == 2);
  CHECK(run_tool("check --input /nonexistent.json").exit_code == 2);

  const std::string bad = temp_path("nonmember.json");
  {
    std::ofstream out(bad);
    out << R"({"alpha":0,"beta":0,"h":[[0,0],[1,0],[2,0]],"g":[[0,0]]})";
  }
  CHECK(run_tool("check --input " + bad).exit_code == 1);

  const std::string sharp = temp_path("sharp.json");
  {
    MappingDocument doc;
    doc.params = ClassParams(0.0, 0.0);
    doc.mapping = extremal_bn(2, doc.params);
    save_mapping(sharp, doc);
  }
  CHECK(run_tool("check --input " + sharp).exit_code == 0);
  // On a grid that touches the sharpness circle within the tolerance band
  // the verdict becomes inconclusive (exit 3).
  const RunResult border =
      run_tool("check --input " + sharp + " --sufficient");
  CHECK(border.exit_code == 0);  // sum sits exactly on the budget

  const std::string inc = temp_path("inconclusive.json");
  {
    std::ofstream out(inc);
    // Sum slightly over budget: sufficient condition cannot decide.
    out << R"({"alpha":0,"beta":0,"h":[[0,0],[1,0],[0.51,0]],"g":[[0,0]]})";
  }
  CHECK(run_tool("check --input " + inc + " --sufficient").exit_code == 3);
}
