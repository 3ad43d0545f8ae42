#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "pluri/cli.hpp"

using namespace pluri;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  return text.substr(text.rfind('\n', end) + 1, end - text.rfind('\n', end));
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("generate") {
  Run r = run({"generate", "--k", "3"});
  CHECK(r.status == 0);
  CHECK(last_line(r.out) == "r_3 = 10*u^3 + 5*u_x^2 + 10*u*u_xx + u_xxxx");
  CHECK(run({"generate", "--k", "0"}).out == "r_0 = 1/2\n");
  Run s = run({"generate", "--k", "1", "--format", "structured"});
  CHECK(s.out ==
        "format pluri-generate 1\n"
        "entry\tname=g_1\tvalue=v_x\n"
        "entry\tname=h_1\tvalue=1/2*v_x^2 + 1/6*v_xxx\n"
        "entry\tname=r_0\tvalue=1/2\n"
        "entry\tname=r_1\tvalue=u\n"
        "summary\tk=1\tn=none\n");
  Run with_L = run({"generate", "--k", "3", "--n", "3"});
  CHECK(with_L.out.find("L_12 = ") != std::string::npos);
  CHECK(with_L.out.find("L_23 = ") != std::string::npos);
  CHECK(run({"generate", "--k", "2", "--n", "3"}).status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"verify"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"generate", "--format", "xml"}).status == 2);
  Run r = run({"verify", "pkdv", "--n", "2"});
  CHECK(r.status == 2);
  CHECK(r.err.find("--n >= 3") != std::string::npos);
  CHECK(run({"verify", "pkdv", "--n", "3", "--omit", "4"}).status == 2);
  CHECK(run({"verify", "pkdv", "--n", "4", "--k", "3"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("verify pkdv") {
  Run r = run({"verify", "pkdv", "--n", "3"});
  CHECK(r.status == 0);
  CHECK(last_line(r.out) == "result: pass");
  Run omit = run({"verify", "pkdv", "--n", "4", "--omit", "4", "--format", "structured"});
  CHECK(omit.status == 0);
  CHECK(omit.out.find("closedness\ttriple=1,2,3\tomit=4\treduced=0\treduced_dx=0\n") != std::string::npos);
  CHECK(omit.out.find("closedness\ttriple=2,3,4\tomit=4\treduced=0\treduced_dx=0\n") != std::string::npos);
  CHECK(omit.out.find("NONZERO-RESIDUAL=0") != std::string::npos);
}

TEST_CASE("structured output is stable across runs, worker counts and cache state") {
  auto dir = fresh_dir("pluri-test-cli-cache");
  std::vector<std::string> base = {"verify", "pkdv", "--n", "4", "--format", "structured"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args);
  };
  Run plain = with({"--jobs", "1"});
  Run cold = with({"--jobs", "4", "--cache-dir", dir.string()});
  CHECK(std::filesystem::exists(dir / "hierarchy-n4-k4.json"));
  Run warm = with({"--cache-dir", dir.string()});
  CHECK(plain.status == 0);
  CHECK(plain.out == cold.out);
  CHECK(cold.out == warm.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("other verifications") {
  Run sg = run({"verify", "sine-gordon"});
  CHECK(sg.status == 0);
  CHECK(sg.out.find("= -(u_z - 1/2*u_x^3 - u_xxx)*(u_xy - sin(u)) [pass]") != std::string::npos);
  Run curves = run({"verify", "curves-demo", "--format", "structured"});
  CHECK(curves.status == 0);
  CHECK(last_line(curves.out) == "result\tmatches-first-jet-system=pass");
  Run inv = run({"involutivity", "--k", "1"});
  CHECK(inv.status == 0);
  CHECK(inv.out.find("  1  1\n") != std::string::npos);
  Run inv4 = run({"involutivity", "--k", "4", "--format", "structured"});
  CHECK(inv4.status == 0);
  CHECK(inv4.out.find("zero=false") == std::string::npos);
  CHECK(inv4.out.find("bracket\ti=4\tj=4\tzero=true\n") != std::string::npos);
  Run bc = run({"bicomplex-props", "--seed", "3", "--format", "structured"});
  CHECK(bc.status == 0);
  CHECK(bc.out == run({"bicomplex-props", "--seed", "3", "--format", "structured", "--jobs", "1"}).out);
}
