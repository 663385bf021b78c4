// End-to-end exercises of the command-line interface: exit codes per the
// contract (0 holds, 2 violated, 3 hypothesis-failed-but-held, 4 input
// error, 5 numeric failure), JSON output, and seed determinism.

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

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
  if (!ok)
    ++failures;
}

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
  std::string stderr_text;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args, const fs::path& dir, const std::string& env = "") {
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = env + std::string(LOEWNER_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.stdout_text = slurp(out);
  res.stderr_text = slurp(err);
  return res;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

} // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "loewner_cli_tests";
  fs::create_directories(dir);

  const fs::path ex27 = dir / "ex27.json";
  write_file(ex27, R"({"A": [[3,1],[1,5]], "B": [[10,-1],[-1,9]]})");
  const fs::path ex28 = dir / "ex28.json";
  write_file(ex28, R"({"A": [[1,1],[1,1]], "B": [[3,1],[1,1]]})");
  const fs::path same = dir / "same.json";
  write_file(same, R"({"A": [[3,1],[1,5]], "B": [[3,1],[1,5]]})");

  {
    const RunResult r = run("check --theorem power --r 6 --input " + ex27.string() +
                                " --output-format json",
                            dir);
    bool entry_ok = false;
    if (r.exit_code == 0) {
      const auto j = nlohmann::json::parse(r.stdout_text);
      const double d00 = j["rhs"][0][0].get<double>() - j["lhs"][0][0].get<double>();
      entry_ok = std::abs(d00 - 985931.21) / 985931.21 < 5e-3;
    }
    expect(r.exit_code == 0 && entry_ok, "check power r=6 on the worked pair exits 0");
  }
  {
    const RunResult r = run("check --theorem power --r 3 --input " + ex28.string() +
                                " --output-format json",
                            dir);
    bool eig_ok = false;
    if (!r.stdout_text.empty()) {
      const auto j = nlohmann::json::parse(r.stdout_text);
      eig_ok = std::abs(j["verdict"]["min_eig_of_difference"].get<double>() - (-0.324555)) < 1e-5;
    }
    expect(r.exit_code == 2 && eig_ok, "check power r=3 on the counterexample exits 2");
  }
  {
    const RunResult r = run("check --theorem thm1 --v 0.5 --f power:2 --input " + same.string(),
                            dir);
    expect(r.exit_code == 3, "check thm1 with A=B holds but its hypothesis fails: exit 3");
  }
  {
    const RunResult r =
        run("check --theorem thm1 --v 0.5 --f power:6 --input " + ex27.string(), dir);
    expect(r.exit_code == 0, "check thm1 t^6 on the worked pair exits 0");
  }
  {
    const fs::path bad = dir / "bad.json";
    write_file(bad, R"({"A": [[1, 2], [2]]})");
    const RunResult r = run("check --theorem power --r 2 --input " + bad.string(), dir);
    expect(r.exit_code == 4 && r.stderr_text.find("\"A\"") != std::string::npos,
           "malformed matrix exits 4 and names the field");
  }
  {
    const RunResult r = run("check --theorem power --r 2 --input " + dir.string() +
                                "/does_not_exist.json",
                            dir);
    expect(r.exit_code == 4, "missing input file exits 4");
  }
  {
    const RunResult r = run("check --theorem power --r -1 --input " + ex28.string(), dir);
    expect(r.exit_code == 4, "negative power of a singular matrix exits 4 (domain violation)");
  }
  {
    const RunResult r = run("check --theorem decreasing_chain --f inverse_shift:1 --input " +
                                ex27.string(),
                            dir);
    expect(r.exit_code == 0, "decreasing chain on positive matrices exits 0");
  }
  {
    const RunResult r = run("constants --m 1 --M 2 --f power:2 --output-format json", dir);
    bool ok = r.exit_code == 0;
    if (ok) {
      const auto j = nlohmann::json::parse(r.stdout_text);
      ok = std::abs(j["K"]["value"].get<double>() - 1.125) < 1e-9 &&
           std::abs(j["K_oracle_delta"].get<double>()) < 1e-7;
    }
    expect(ok, "constants K(1,2,t^2) = 1.125 with a small oracle delta");
  }
  {
    const RunResult r = run("constants --m 1 --M 2 --f affine:1,0 --output-format json", dir);
    bool ok = r.exit_code == 0;
    if (ok) {
      const auto j = nlohmann::json::parse(r.stdout_text);
      ok = std::abs(j["K"]["value"].get<double>() - 1.0) < 1e-12 &&
           std::abs(j["k"]["value"].get<double>() - 1.0) < 1e-12;
    }
    expect(ok, "constants for the identity function are exactly 1");
  }
  {
    const RunResult r = run("constants --m 2 --M 1 --f power:2", dir);
    expect(r.exit_code == 4, "inverted constants interval exits 4");
  }
  {
    const fs::path hh_in = dir / "hh.json";
    write_file(hh_in, R"({"A": [[1]], "B": [[2]], "f": {"family":"power","r":2}})");
    const RunResult r = run("hh --input " + hh_in.string() + " --output-format json", dir);
    bool ok = r.exit_code == 0;
    if (ok) {
      const auto j = nlohmann::json::parse(r.stdout_text);
      ok = std::abs(j["chain_links"][0]["rhs"][0][0].get<double>() - 7.0 / 3.0) < 1e-10;
    }
    expect(ok, "hh chain on scalars reproduces the 7/3 midpoint integral");
  }
  {
    const RunResult a =
        run("hunt --checker power --f power:3 --trials 500 --dim 2 --spectrum 0.5:3 --seed 7 "
            "--output-format json",
            dir);
    const RunResult b =
        run("hunt --checker power --f power:3 --trials 500 --dim 2 --spectrum 0.5:3 --seed 7 "
            "--output-format json",
            dir);
    expect(a.exit_code == 0 && a.stdout_text == b.stdout_text && !a.stdout_text.empty(),
           "hunt reruns with the same seed are byte-identical");
    const RunResult c =
        run("hunt --checker power --f power:3 --trials 500 --dim 2 --spectrum 0.5:3 --seed 8 "
            "--output-format json",
            dir);
    expect(c.stdout_text != a.stdout_text, "a different seed changes the hunt report");
  }
  {
    const RunResult a = run("probe --condition thm1 --samples 3000 --seed 5 --output-format json",
                            dir);
    const RunResult b = run("probe --condition thm1 --samples 3000 --seed 5 --output-format json",
                            dir);
    bool witness = false;
    if (a.exit_code == 0) {
      const auto j = nlohmann::json::parse(a.stdout_text);
      witness = j["satisfying_hypothesis_count"].get<long>() > 0;
    }
    expect(a.stdout_text == b.stdout_text && witness,
           "probe thm1 finds witnesses and reruns byte-identically");
  }
  {
    const RunResult env_run =
        run("hunt --checker power --f power:3 --trials 200 --dim 2 --spectrum 0.5:3 "
            "--output-format json",
            dir, "LOEWNER_LAB_SEED=7 ");
    const RunResult flag_run =
        run("hunt --checker power --f power:3 --trials 200 --dim 2 --spectrum 0.5:3 --seed 7 "
            "--output-format json",
            dir);
    expect(env_run.stdout_text == flag_run.stdout_text,
           "LOEWNER_LAB_SEED env var substitutes for --seed");
  }
  {
    const RunResult r = run("paper", dir);
    expect(r.exit_code == 0, "paper fixtures pass at the default tolerance");
    const RunResult tight = run("paper --tolerance 1e-12", dir);
    expect(tight.exit_code == 2,
           "paper fixtures fail by design at 1e-12 against 4-6 digit printed values");
  }
  {
    const RunResult r = run("probe --condition nope --samples 10", dir);
    expect(r.exit_code == 4, "unknown probe condition exits 4");
  }
  {
    const RunResult r = run("audit --f power:2 --samples 500", dir);
    expect(r.exit_code == 0, "audit of a correctly-declared function exits 0");
  }

  std::printf("%s\n", failures == 0 ? "cli_tests: all passed" : "cli_tests: FAILURES");
  return failures == 0 ? 0 : 1;
}
