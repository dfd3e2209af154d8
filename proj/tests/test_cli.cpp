// Drives the installed binary end to end: exit codes, file outputs,
// determinism. Runs out of a scratch directory.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "[ok] " << what << "\n";
  } else {
    std::cout << "[FAILED] " << what << "\n";
    ++g_failures;
  }
}

int run(const std::string& args) {
  const std::string cmd = std::string(NCTOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

json load(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "nctool_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto at = [&dir](const std::string& name) { return (dir / name).string(); };

  // -- star ----------------------------------------------------------------
  write_file(dir / "u10.json",
             R"({"n":2,"theta":[[0,0.5],[-0.5,0]],
                 "coeffs":[{"k":[1,0],"re":1,"im":0}]})");
  write_file(dir / "u01.json",
             R"({"n":2,"theta":[[0,0.5],[-0.5,0]],
                 "coeffs":[{"k":[0,1],"re":1,"im":0}]})");
  expect(run("star " + at("u10.json") + " " + at("u01.json") + " --out " +
             at("prod.json") + " --oracle") == 0,
         "star with oracle exits 0");
  {
    const json p = load(dir / "prod.json");
    expect(p.at("coeffs").size() == 1, "product has one coefficient");
    const json& c = p.at("coeffs").at(0);
    expect(c.at("k") == json::array({1, 1}) && c.at("re") == 0.0 &&
               c.at("im") == -1.0,
           "product is -i at (1,1)");
  }

  write_file(dir / "broken.json", "{ not json");
  expect(run("star " + at("broken.json") + " " + at("u01.json") + " --out " +
             at("x.json")) == 2,
         "malformed JSON exits 2");

  write_file(dir / "mismatch.json",
             R"({"n":2,"theta":[[0,0.25],[-0.25,0]],
                 "coeffs":[{"k":[0,1],"re":1,"im":0}]})");
  expect(run("star " + at("u10.json") + " " + at("mismatch.json") + " --out " +
             at("x.json")) == 3,
         "deformation mismatch exits 3");

  // -- spectrum --------------------------------------------------------------
  write_file(dir / "theta.json", R"({"n":2,"theta":[[0,0.3],[-0.3,0]]})");
  expect(run("spectrum --theta " + at("theta.json") + " --window 1 --out " +
             at("spec1.json")) == 0,
         "spectrum exits 0");
  {
    const json s = load(dir / "spec1.json");
    expect(s.at("eigenvalues").size() == 18, "R=1 spectrum has 18 values");
  }
  expect(run("spectrum --theta " + at("theta.json") + " --window 1 --out " +
             at("spec2.json")) == 0,
         "spectrum rerun exits 0");
  expect(slurp(dir / "spec1.json") == slurp(dir / "spec2.json"),
         "spectrum output is byte-identical across runs");

  write_file(dir / "theta0.json", R"({"n":2,"theta":[[0,0],[0,0]]})");
  expect(run("spectrum --theta " + at("theta0.json") + " --window 1 --out " +
             at("spec0.json")) == 0,
         "flat spectrum exits 0");
  {
    const json a = load(dir / "spec0.json");
    const json b = load(dir / "spec1.json");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.at("eigenvalues").size(); ++i)
      worst = std::max(worst,
                       std::abs(a.at("eigenvalues").at(i).get<double>() -
                                b.at("eigenvalues").at(i).get<double>()));
    expect(worst <= 1e-12, "spectra agree across deformations");
  }
  expect(run("spectrum --theta " + at("theta.json") + " --window 80 --out " +
             at("too_big.json")) == 4,
         "oversized window exits 4");
  expect(run("spectrum --theta " + at("theta.json") + " --window 2 --out " +
             at("spec.csv") + " --format csv") == 0,
         "csv export exits 0");
  {
    std::ifstream in(dir / "spec.csv");
    int lines = 0;
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) ++lines;
    expect(lines == 50, "csv has one eigenvalue per line");
  }

  // -- cover -----------------------------------------------------------------
  expect(run("cover verify --k 2,3 --theta12 0.5 --out " + at("cover.json")) == 0,
         "cover verify exits 0");
  {
    const json r = load(dir / "cover.json");
    bool all = true;
    for (const json& c : r.at("cases")) all &= c.at("pass").get<bool>();
    expect(all && r.at("cases").size() >= 3, "cover verify cases all pass");
  }
  expect(run("cover verify --k 0,3 --out " + at("bad.json")) == 3,
         "invalid multiplicities exit 3");
  expect(run("cover lift --k 2,3 --theta12 0.5 --window 6 --out " +
             at("lift.json")) == 0,
         "cover lift exits 0");
  expect(run("cover tower --primes 2,3 --theta12 0.5 --out " +
             at("tower.json")) == 0,
         "cover tower exits 0");
  {
    const json t = load(dir / "tower.json");
    expect(t.at("specs").size() == 2, "tower has two levels");
    bool found4 = false, found36 = false, all_exact = true;
    for (const json& e : t.at("exactness")) {
      if (e.at("from") == 0 && e.at("to") == 1 && e.at("mid") == 0)
        found4 = e.at("order") == 4;
      if (e.at("from") == 0 && e.at("to") == 2 && e.at("mid") == 0)
        found36 = e.at("order") == 36;
      all_exact &= e.at("exact").get<bool>();
    }
    expect(found4 && found36 && all_exact, "tower orders 4 and 36, all exact");
  }

  // -- verify-all --------------------------------------------------------------
  expect(run("verify-all --seed 5 --out " + at("va1.json")) == 0,
         "verify-all exits 0");
  expect(run("verify-all --seed 5 --out " + at("va2.json")) == 0,
         "verify-all rerun exits 0");
  {
    const json a = load(dir / "va1.json");
    const json b = load(dir / "va2.json");
    expect(a.at("cases") == b.at("cases"),
           "verify-all residual table is deterministic under a fixed seed");
    bool all = true;
    for (const json& c : a.at("cases")) all &= c.at("pass").get<bool>();
    expect(all, "verify-all default run passes");
  }
  expect(run("verify-all --seed 5 --tol 1e-20 --out " + at("va3.json")) == 1,
         "over-tight tolerance exits 1");
  {
    const json a = load(dir / "va3.json");
    bool some_fail = false;
    for (const json& c : a.at("cases"))
      if (!c.at("pass").get<bool>() && c.at("residual").get<double>() > 0.0)
        some_fail = true;
    expect(some_fail, "over-tight tolerance flags residuals");
  }

  std::cout << (g_failures == 0 ? "CLI TESTS PASSED" : "CLI TESTS FAILED")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
