// End-to-end exercise of the installed command-line surface: exact stdout for
// pinned outputs, the exit-code contract (0 success or expected-empty, 1
// verification failure, 2 usage), and the emit -> verify round trip for every
// document kind. Takes the CLI path as argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int failures = 0;

#define EXPECT(cond)                                                       \
  do {                                                                     \
    if (!(cond)) {                                                         \
      ++failures;                                                          \
      std::cerr << "FAILED " << __FILE__ << ":" << __LINE__ << ": " #cond  \
                << "\n";                                                   \
    }                                                                      \
  } while (0)

struct RunResult {
  int code = -1;
  std::string out;
};

std::string cli_path;

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = "'" + cli_path + "' " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

void pinned_outputs() {
  RunResult r = run("witness --basis 2,3");
  EXPECT(r.code == 0);
  EXPECT(r.out == "5\n");

  r = run("witness --basis 2");
  EXPECT(r.out == "3\n");

  r = run("sweep-quartic --zmax 100");
  EXPECT(r.code == 0);
  EXPECT(r.out == "0 solutions\n");

  r = run("schur --colors 2 --mode strong");
  EXPECT(r.code == 0);
  const json doc = json::parse(r.out);
  EXPECT(doc.at("s_value") == 4);
  EXPECT(doc.at("searched_through") == 5);
  EXPECT(doc.at("witness_colors") == json::array({0, 1, 1, 0}));
  EXPECT(doc.at("mode") == "strong");

  r = run("schur --colors 2 --mode strong --format plain");
  EXPECT(r.out ==
         "S = 4 (t=2, strong); witness 0,1,1,0; searched through 5\n");

  r = run("select --rule parity --colors 2 --mode strong");
  const json sel = json::parse(r.out);
  EXPECT(sel.at("triple").at("a") == 2);
  EXPECT(sel.at("triple").at("b") == 2);
  EXPECT(sel.at("triple").at("c") == 4);
  EXPECT(sel.at("cap") == 5);

  r = run("select --rule mod3 --colors 3 --mode strong --format plain");
  EXPECT(r.out == "(3, 3, 6) color 0 (rule mod3, cap 14)\n");

  r = run("decompose --m 48 --basis 2,3 --format plain");
  EXPECT(r.out == "48 = 2^4 * 3; residues (0,1), index 4\n");

  r = run("decompose --m 10 --basis 2,3 --format plain");
  EXPECT(r.code == 0);  // not smooth is an expected outcome, not an error
  EXPECT(r.out == "10 is not smooth over {2,3}: cofactor 5\n");

  r = run("decompose --m 10 --basis 2,3");
  const json ns = json::parse(r.out);
  EXPECT(ns.at("smooth") == false);
  EXPECT(ns.at("cofactor") == 5);

  r = run("sweep-triples --basis 2,3 --bound 100 --format plain");
  EXPECT(r.code == 0);
  EXPECT(r.out.rfind("0 violations", 0) == 0);

  r = run("demo --basis 2,3 --bound 100");
  EXPECT(r.code == 0);
  EXPECT(r.out.find("pigeonholing fails at 5") != std::string::npos);
  EXPECT(r.out.find("0 with a shared mantissa") != std::string::npos);

  r = run("--version");
  EXPECT(r.code == 0);
  EXPECT(!r.out.empty());

  r = run("--help");
  EXPECT(r.code == 0);
}

void exit_codes(const fs::path& tmp) {
  // Usage errors are exit 2.
  EXPECT(run("").code == 2);
  EXPECT(run("wat").code == 2);
  EXPECT(run("schur --colors 2").code == 2);          // missing --mode
  EXPECT(run("schur --mode strong").code == 2);       // missing --colors
  EXPECT(run("schur --colors 0 --mode strong").code == 2);
  EXPECT(run("schur --colors 2 --mode bold").code == 2);
  EXPECT(run("schur --colors 2 --mode strong --format yaml").code == 2);
  EXPECT(run("decompose --m 0 --basis 2,3").code == 2);
  EXPECT(run("decompose --m 48 --basis 2,4").code == 2);
  EXPECT(run("witness --basis 9").code == 2);
  EXPECT(run("sweep-triples --basis 2,3 --bound 2").code == 2);
  EXPECT(run("triple --coloring does_not_exist.json --mode weak").code == 2);
  EXPECT(run("verify --certificate does_not_exist.json").code == 2);

  // A cap below the threshold is a usage error with a hint.
  RunResult r = run("schur --colors 2 --mode strong --cap 3", true);
  EXPECT(r.code == 2);
  EXPECT(r.out.find("--cap") != std::string::npos);

  // Exhausted selection horizon: same treatment.
  r = run("select --rule const --colors 1 --mode weak --cap 2", true);
  EXPECT(r.code == 2);
  EXPECT(r.out.find("--cap") != std::string::npos);

  // No certified default cap for weak mode with four colors.
  r = run("select --rule parity --colors 4 --mode weak", true);
  EXPECT(r.code == 2);
  EXPECT(r.out.find("--cap") != std::string::npos);
  EXPECT(run("select --rule parity --colors 4 --mode weak --cap 100").code ==
         0);

  // Bad selector rules.
  EXPECT(run("select --rule mod0 --colors 2 --mode strong").code == 2);
  EXPECT(run("select --rule shuffle --colors 2 --mode strong").code == 2);

  // A coloring file that does not parse.
  const fs::path bad = tmp / "bad_coloring.json";
  spit(bad, "{\"t\":2,\"n\":2}");
  EXPECT(run("triple --coloring " + bad.string() + " --mode weak").code == 2);

  // Expected-empty results exit 0.
  const fs::path split = tmp / "split.json";
  spit(split, R"({"t":2,"n":4,"colors":[0,1,1,0]})");
  r = run("triple --coloring " + split.string() + " --mode strong");
  EXPECT(r.code == 0);
  EXPECT(json::parse(r.out).at("triple").is_null());
  r = run("triple --coloring " + split.string() +
          " --mode strong --format plain");
  EXPECT(r.out == "none\n");

  const fs::path mono = tmp / "mono.json";
  spit(mono, R"({"t":1,"n":3,"colors":[0,0,0]})");
  r = run("triple --coloring " + mono.string() + " --mode weak --format plain");
  EXPECT(r.code == 0);
  EXPECT(r.out == "(1, 2, 3) color 0\n");
}

void emit_verify_round_trip(const fs::path& tmp) {
  const std::pair<const char*, const char*> cases[] = {
      {"schur --colors 2 --mode strong", "schur_strong.json"},
      {"schur --colors 3 --mode strong", "schur_strong3.json"},
      {"schur --colors 2 --mode weak", "schur_weak.json"},
      {"select --rule parity --colors 2 --mode strong", "selected.json"},
      {"decompose --m 48 --basis 2,3", "dec.json"},
      {"decompose --m 10 --basis 2,3", "dec_ns.json"},
      {"witness --basis 2,3", "witness.json"},
      {"sweep-triples --basis 2,3 --bound 500", "sweep.json"},
      {"sweep-quartic --zmax 100", "quartic.json"},
      {"demo --basis 2,3 --bound 100", "demo.json"},
  };
  for (const auto& [args, name] : cases) {
    const fs::path out = tmp / name;
    RunResult r = run(std::string(args) + " --out " + out.string());
    EXPECT(r.code == 0);
    EXPECT(fs::exists(out));

    r = run("verify --certificate " + out.string());
    EXPECT(r.code == 0);
    EXPECT(r.out.rfind("OK ", 0) == 0);
  }

  // A coloring document with a triple also round-trips.
  const fs::path mono = tmp / "mono_rt.json";
  spit(mono, R"({"t":1,"n":3,"colors":[0,0,0]})");
  const fs::path tdoc = tmp / "triple_doc.json";
  RunResult r =
      run("triple --coloring " + mono.string() + " --mode weak --out " +
          tdoc.string());
  EXPECT(r.code == 0);
  r = run("verify --certificate " + tdoc.string());
  EXPECT(r.code == 0);

  // Verification failure is exit 1 with a FAIL line.
  const std::string cert = slurp(tmp / "schur_strong.json");
  std::string forged = cert;
  const auto pos = forged.find("\"s_value\":4");
  EXPECT(pos != std::string::npos);
  forged.replace(pos, 11, "\"s_value\":5");
  const fs::path bad = tmp / "forged.json";
  spit(bad, forged);
  r = run("verify --certificate " + bad.string());
  EXPECT(r.code == 1);
  EXPECT(r.out.rfind("FAIL ", 0) == 0);

  // Unknown document shapes also fail verification.
  const fs::path alien = tmp / "alien.json";
  spit(alien, R"({"alpha":1})");
  r = run("verify --certificate " + alien.string());
  EXPECT(r.code == 1);
  EXPECT(r.out.rfind("FAIL unknown", 0) == 0);
}

void out_dir_env(const fs::path& tmp) {
  const fs::path dir = tmp / "outdir";
  fs::create_directories(dir);
  setenv("SCHUR_PRIMES_OUT_DIR", dir.c_str(), 1);
  RunResult r = run("witness --basis 2,3 --out w.json");
  EXPECT(r.code == 0);
  EXPECT(fs::exists(dir / "w.json"));
  // Absolute paths ignore the prefix.
  const fs::path abs = tmp / "abs.json";
  r = run("witness --basis 2,3 --out " + abs.string());
  EXPECT(fs::exists(abs));
  unsetenv("SCHUR_PRIMES_OUT_DIR");

  r = run("witness --basis 2,3 --out " + (tmp / "plain_env.json").string());
  EXPECT(r.code == 0);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_matrix <path-to-cli>\n";
    return 1;
  }
  cli_path = argv[1];

  const fs::path tmp =
      fs::temp_directory_path() /
      ("cli_matrix_" + std::to_string(static_cast<long>(getpid())));
  fs::remove_all(tmp);
  fs::create_directories(tmp);

  pinned_outputs();
  exit_codes(tmp);
  emit_verify_round_trip(tmp);
  out_dir_env(tmp);

  fs::remove_all(tmp);

  if (failures == 0) {
    std::cout << "cli_matrix: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_matrix: " << failures << " check(s) failed\n";
  return 1;
}
