#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#ifndef CGT_CLI_PATH
#error "CGT_CLI_PATH must point at the cgt binary"
#endif

namespace fs = std::filesystem;

TEST_SUITE_BEGIN("cli");

namespace {

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() /
          ("cgt-test-" + std::to_string(static_cast<unsigned>(::getpid())) + "-" +
           std::to_string(counter()++));
    fs::create_directories(dir);
  }
  ~Workdir() { std::error_code ec; fs::remove_all(dir, ec); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  fs::path file(const std::string& name, const std::string& content) const {
    const fs::path p = dir / name;
    std::ofstream out(p);
    out << content;
    return p;
  }
};

int run(const std::string& args) {
  const std::string cmd = std::string(CGT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("growth: graded Z writes an 11-row census and passes") {
  Workdir w;
  const auto cfg = w.file("c.json",
                          R"({"group":{"kind":"integer-lattice","rank":1},
                              "generators":{"scheme":"graded"},"radius":10})");
  CHECK(run("growth --config " + cfg.string() + " --out " + (w.dir / "o").string()) == 0);
  const std::string csv = slurp(w.dir / "o" / "census.csv");
  // Header plus rows n = 0..10.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
  CHECK(csv.find("10,21,2,59049,true") != std::string::npos);
}

TEST_CASE("growth: radius 0 is a config error (exit 3)") {
  Workdir w;
  const auto cfg = w.file("c.json",
                          R"({"group":{"kind":"integer-lattice","rank":1},
                              "generators":{"scheme":"graded"},"radius":0})");
  CHECK(run("growth --config " + cfg.string() + " --out " + w.dir.string()) == 3);
}

TEST_CASE("growth: F2 rate lands within 0.05 of ln 3 at N = 8") {
  Workdir w;
  const auto cfg = w.file("c.json",
                          R"({"group":{"kind":"free","rank":2},
                              "generators":{"scheme":"unit"},"radius":8})");
  CHECK(run("growth --config " + cfg.string() + " --out " + (w.dir / "o").string()) == 0);
  const std::string js = slurp(w.dir / "o" / "growth.json");
  const auto pos = js.find("\"growth_rate\":");
  REQUIRE(pos != std::string::npos);
  const double rate = std::atof(js.c_str() + pos + 14);
  CHECK(std::abs(rate - std::log(3.0)) < 0.05);
}

TEST_CASE("embed: Z radius 20 reports c1 > 0 and passes") {
  Workdir w;
  const auto cfg = w.file("c.json",
                          R"({"group":{"kind":"integer-lattice","rank":1},
                              "generators":{"scheme":"unit"},
                              "radius":20,"truncation":8})");
  CHECK(run("embed --config " + cfg.string() + " --out " + (w.dir / "o").string()) == 0);
  const std::string js = slurp(w.dir / "o" / "embedding.json");
  CHECK(js.find("\"pass\": true") != std::string::npos);
  const auto pos = js.find("\"c1\":");
  REQUIRE(pos != std::string::npos);
  CHECK(std::atof(js.c_str() + pos + 5) > 0.0);
}

TEST_CASE("lattice: Z^2 covering check passes; bad separation is exit 3") {
  Workdir w;
  const auto cfg = w.file("c.json",
                          R"({"group":{"kind":"integer-lattice","rank":2},
                              "generators":{"scheme":"unit"},
                              "radius":6,"separation":1.0,"census_m":[1,2]})");
  CHECK(run("lattice --config " + cfg.string() + " --out " + (w.dir / "o").string()) == 0);
  const auto bad = w.file("bad.json",
                          R"({"group":{"kind":"integer-lattice","rank":2},
                              "generators":{"scheme":"unit"},
                              "radius":6,"separation":0.0})");
  CHECK(run("lattice --config " + bad.string() + " --out " + w.dir.string()) == 3);
}

TEST_CASE("lattice fixture: cloud growth table is emitted") {
  Workdir w;
  const auto cfg = w.file("c.json", R"({"clouds":6})");
  CHECK(run("lattice --config " + cfg.string() + " --out " + (w.dir / "o").string()) == 0);
  const std::string csv = slurp(w.dir / "o" / "cloud_growth.csv");
  CHECK(csv.find("6,7") != std::string::npos);
}

TEST_CASE("verify: default suite passes; injected bad weight names the axiom") {
  Workdir w;
  const auto good = w.file("good.json",
                           R"({"group":{"kind":"integer-lattice","rank":2},
                               "generators":{"scheme":"unit"},"radius":3})");
  CHECK(run("verify --config " + good.string() + " --out " + w.dir.string()) == 0);

  const auto bad = w.file("bad.json",
                          R"({"group":{"kind":"integer-lattice","rank":1},
                              "generators":{"scheme":"explicit","symmetrize":false,
                                "entries":[{"element":[1],"weight":1},
                                           {"element":[-1],"weight":2}]},
                              "radius":3})");
  const std::string out_file = (w.dir / "verify_out.txt").string();
  const std::string cmd = std::string(CGT_CLI_PATH) + " verify --config " +
                          bad.string() + " --out " + w.dir.string() + " > " +
                          out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
  const std::string log = slurp(out_file);
  CHECK(log.find("symmetry") != std::string::npos);
}

TEST_CASE("embed: no pairs past c3 is a failed check (exit 2)") {
  Workdir w;
  const auto cfg = w.file("c.json",
                          R"({"group":{"kind":"integer-lattice","rank":1},
                              "generators":{"scheme":"unit"},
                              "radius":1,"truncation":2})");
  CHECK(run("embed --config " + cfg.string() + " --out " + w.dir.string()) == 2);
}

TEST_CASE("gl: explicit samples file is honored") {
  Workdir w;
  const auto samples = w.file("m.json", R"([[1.0,0.0,0.0,1.0],[2.0,0.0,0.0,0.5],
                                            [0.8,0.1,0.0,1.2],[1.0,0.0,0.3,1.0]])");
  const auto cfg = w.file("c.json", std::string(R"({"gl":{"dim":2,"count":4,"samples":")") +
                                        samples.string() + R"("}})");
  CHECK(run("gl --config " + cfg.string() + " --out " + (w.dir / "o").string()) == 0);
  const std::string js = slurp(w.dir / "o" / "gl_report.json");
  CHECK(js.find("\"axioms_pass\": true") != std::string::npos);
}

TEST_CASE("gl: seeded run passes and reruns byte-identically") {
  Workdir w;
  const auto cfg = w.file("c.json", R"({"gl":{"dim":2,"count":60},"seed":5})");
  CHECK(run("gl --config " + cfg.string() + " --out " + (w.dir / "a").string()) == 0);
  CHECK(run("gl --config " + cfg.string() + " --out " + (w.dir / "b").string()) == 0);
  CHECK(slurp(w.dir / "a" / "gl_report.json") == slurp(w.dir / "b" / "gl_report.json"));
}

TEST_CASE("identical config and seed give byte-identical growth outputs") {
  Workdir w;
  const auto cfg = w.file("c.json",
                          R"({"group":{"kind":"free","rank":2},
                              "generators":{"scheme":"unit"},"radius":6,"seed":9})");
  CHECK(run("growth --config " + cfg.string() + " --out " + (w.dir / "a").string()) == 0);
  CHECK(run("growth --config " + cfg.string() + " --out " + (w.dir / "b").string()) == 0);
  CHECK(slurp(w.dir / "a" / "census.csv") == slurp(w.dir / "b" / "census.csv"));
  CHECK(slurp(w.dir / "a" / "growth.json") == slurp(w.dir / "b" / "growth.json"));
}

TEST_CASE("missing config file is a config error") {
  Workdir w;
  CHECK(run("growth --config " + (w.dir / "nope.json").string()) == 3);
  const auto junk = w.file("junk.json", "{not json");
  CHECK(run("growth --config " + junk.string()) == 3);
}

TEST_CASE("shipped example configs run clean") {
  Workdir w;
  const fs::path configs = CGT_CONFIG_DIR;
  CHECK(run("growth --config " + (configs / "growth_z_graded.json").string() +
            " --out " + (w.dir / "a").string()) == 0);
  CHECK(run("lattice --config " + (configs / "lattice_clouds.json").string() +
            " --out " + (w.dir / "b").string()) == 0);
  CHECK(run("verify --config " + (configs / "verify_heisenberg.json").string() +
            " --out " + (w.dir / "c").string()) == 0);
}

TEST_CASE("COARSE_METRIC_BUDGET caps enumerations (exit 4)") {
  Workdir w;
  const auto cfg = w.file("c.json",
                          R"({"group":{"kind":"free","rank":2},
                              "generators":{"scheme":"unit"},"radius":9})");
  const std::string cmd = "COARSE_METRIC_BUDGET=50 " + std::string(CGT_CLI_PATH) +
                          " growth --config " + cfg.string() + " --out " +
                          w.dir.string() + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 4);
}

TEST_CASE("embed on F2 with a tight horizon passes and reruns identically") {
  Workdir w;
  const auto cfg = w.file("c.json",
                          R"({"group":{"kind":"free","rank":2},
                              "generators":{"scheme":"unit"},
                              "radius":4,"horizon":6,"truncation":5,
                              "pair_limit":200,"identity_checks":40})");
  CHECK(run("embed --config " + cfg.string() + " --out " + (w.dir / "a").string()) == 0);
  CHECK(run("embed --config " + cfg.string() + " --out " + (w.dir / "b").string()) == 0);
  CHECK(slurp(w.dir / "a" / "embedding.csv") == slurp(w.dir / "b" / "embedding.csv"));
  CHECK(slurp(w.dir / "a" / "embedding.json") == slurp(w.dir / "b" / "embedding.json"));
}

TEST_SUITE_END();
