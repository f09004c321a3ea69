#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "jacobi/io.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int status;
  std::string out;
};

Run run(const std::string &args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("jacobi_cli_test_" + std::to_string(::getpid()) + "_" +
                                             std::to_string(counter++) + ".out");
  std::string cmd = std::string(JACOBI_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(out);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

} // namespace

TEST_SUITE("cli") {
  TEST_CASE("seeded generation is reproducible") {
    auto a = run("gen-matrix --random --seed 17");
    auto b = run("gen-matrix --random --seed 17");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    auto j = jacobi::Json::parse(a.out);
    CHECK(j["seed"] == 17);
    CHECK(j["mode"] == "random");
    CHECK(run("gen-matrix --random --seed 18").out != a.out);
  }

  TEST_CASE("full report for lambda = 1..8") {
    auto r = run("all --lambda 1,2,3,4,5,6,7,8 --threads 2");
    REQUIRE(r.status == 0);
    auto j = jacobi::Json::parse(r.out);
    CHECK(j["dims"] == jacobi::Json::array({1, 9, 9, 1}));
    CHECK(j["plethysm"]["dims"]["U33"] == 78);
    CHECK(j["charvar1"]["equations"] == 9);
  }

  TEST_CASE("exit codes") {
    CHECK(run("--no-such-flag").status == 1);
    CHECK(run("cohomology --user").status == 1);
    CHECK(run("gen-matrix --lambda 1,1,3,4,5,6,7,8").status == 1);
    CHECK(run("gen-matrix --field gfp --modulus 12").status == 1);
    // equal leading columns: degenerate, and the check is requested
    auto m = fs::temp_directory_path() / ("jacobi_cli_deg_" + std::to_string(::getpid()) + ".json");
    REQUIRE(run("gen-matrix --user --entries "
                "'1,1,1,1,1,1,1,1;1,1,1,1,2,3,4,5;1,1,1,1,4,9,16,25;1,1,1,1,8,27,64,125' -o " +
                m.string())
                .status == 0);
    CHECK(run("cohomology --check-user-matrix -i " + m.string()).status == 2);
    CHECK(run("cohomology").status == 1);
    fs::remove(m);
    CHECK(run("--help").status == 0);
  }
}
