// Command-line front end. Every operation goes through the C API of the
// shared library; this file only parses flags, shapes output, and maps
// statuses to exit codes (0 success or expected-empty result, 1 verification
// failure, 2 usage error).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurprimes.h"

using nlohmann::json;

namespace {

struct Out {
  sp_status status = SP_OK;
  std::string doc;
  std::string err;
};

template <typename F>
Out invoke(F f) {
  char* doc = nullptr;
  char* err = nullptr;
  Out o;
  o.status = f(&doc, &err);
  if (doc) o.doc = doc;
  if (err) o.err = err;
  sp_string_free(doc);
  sp_string_free(err);
  return o;
}

int exit_code_for(sp_status s) {
  if (s == SP_OK) return 0;
  if (s == SP_E_VERIFY_FAILED) return 1;
  return 2;
}

int fail(const Out& o) {
  std::string msg = o.err;
  try {
    msg = json::parse(o.err).at("message").get<std::string>();
  } catch (...) {
    // fall back to the raw error document
  }
  std::cerr << "error: " << msg << "\n";
  if (o.status == SP_E_CAP_EXCEEDED)
    std::cerr << "hint: raise --cap to keep searching, or accept that the "
                 "threshold lies at or beyond it\n";
  if (o.status == SP_E_HORIZON_EXHAUSTED)
    std::cerr << "hint: raise --cap; no monochromatic triple appears below "
                 "the current horizon\n";
  return exit_code_for(o.status);
}

// Writes the document when --out was given, otherwise prints it (JSON) or a
// plain rendering. Relative --out paths honor SCHUR_PRIMES_OUT_DIR.
int emit(const std::string& doc, const std::string& format,
         const std::string& out_path,
         const std::function<std::string(const json&)>& plain) {
  if (!out_path.empty()) {
    std::string path = out_path;
    const char* dir = std::getenv("SCHUR_PRIMES_OUT_DIR");
    if (dir && *dir && path.front() != '/')
      path = std::string(dir) + "/" + path;
    std::ofstream f(path, std::ios::binary);
    f << doc << "\n";
    f.close();
    if (!f) {
      std::cerr << "error: cannot write --out file " << path << "\n";
      return 2;
    }
    return 0;
  }
  if (format == "json") {
    std::cout << doc << "\n";
    return 0;
  }
  std::cout << plain(json::parse(doc)) << "\n";
  return 0;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

std::string join_u64(const json& arr) {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += ",";
    s += std::to_string(v.get<uint64_t>());
  }
  return s;
}

sp_triple_mode to_mode(const std::string& mode) {
  return mode == "strong" ? SP_MODE_STRONG : SP_MODE_WEAK;
}

std::string triple_line(const json& t) {
  return "(" + std::to_string(t.at("a").get<uint64_t>()) + ", " +
         std::to_string(t.at("b").get<uint64_t>()) + ", " +
         std::to_string(t.at("c").get<uint64_t>()) + ") color " +
         std::to_string(t.at("color").get<int>());
}

// Owns an sp_basis built from the --basis flag.
struct Basis {
  sp_basis* handle = nullptr;
  ~Basis() { sp_basis_free(handle); }
  int create(const std::vector<uint64_t>& primes) {
    char* err = nullptr;
    const sp_status st =
        sp_basis_create(primes.data(), primes.size(), &handle, &err);
    if (st != SP_OK) {
      Out o;
      o.status = st;
      if (err) o.err = err;
      sp_string_free(err);
      std::cerr << "(--basis) ";
      return fail(o);
    }
    sp_string_free(err);
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "schurprimes: colorings, Schur thresholds, mantissa decompositions, "
      "and the executable infinitude-of-primes pipeline"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sp_version()));

  int rc = 0;

  // --- schur -------------------------------------------------------------
  auto* schur = app.add_subcommand(
      "schur", "Exact Schur threshold with witness coloring (JSON by default)");
  uint32_t schur_colors = 1;
  std::string schur_mode, schur_format = "json", schur_out;
  uint64_t schur_cap = 0;
  schur->add_option("--colors", schur_colors, "palette size t >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  schur->add_option("--mode", schur_mode, "triple mode")
      ->required()
      ->check(CLI::IsMember({"strong", "weak"}));
  schur->add_option("--cap", schur_cap,
                    "search bound (0 = built-in default of 63)");
  schur->add_option("--format", schur_format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));
  schur->add_option("--out", schur_out, "write the JSON certificate here");
  schur->callback([&]() {
    const Out o = invoke([&](char** d, char** e) {
      return sp_schur_number(schur_colors, to_mode(schur_mode), schur_cap, d, e);
    });
    if (o.status != SP_OK) {
      rc = fail(o);
      return;
    }
    rc = emit(o.doc, schur_format, schur_out, [](const json& j) {
      std::string cs;
      for (const auto& c : j.at("witness_colors")) {
        if (!cs.empty()) cs += ",";
        cs += std::to_string(c.get<int>());
      }
      return "S = " + std::to_string(j.at("s_value").get<uint64_t>()) +
             " (t=" + std::to_string(j.at("t").get<int>()) + ", " +
             j.at("mode").get<std::string>() + "); witness " + cs +
             "; searched through " +
             std::to_string(j.at("searched_through").get<uint64_t>());
    });
  });

  // --- triple ------------------------------------------------------------
  auto* triple = app.add_subcommand(
      "triple",
      "First monochromatic a+b=c in a coloring file. Coloring file format: "
      "JSON {\"t\": palette, \"n\": length, \"colors\": [ints]} where "
      "colors[i] is the color of integer i+1, each in [0,t)");
  std::string triple_file, triple_mode, triple_format = "json", triple_out;
  triple->add_option("--coloring", triple_file, "path to the coloring JSON")
      ->required();
  triple->add_option("--mode", triple_mode, "triple mode")
      ->required()
      ->check(CLI::IsMember({"strong", "weak"}));
  triple->add_option("--format", triple_format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));
  triple->add_option("--out", triple_out, "write the JSON document here");
  triple->callback([&]() {
    std::string text;
    if (!read_file(triple_file, text)) {
      std::cerr << "error: cannot read --coloring file " << triple_file
                << "\n";
      rc = 2;
      return;
    }
    sp_coloring* coloring = nullptr;
    {
      char* err = nullptr;
      const sp_status st = sp_coloring_parse(text.c_str(), &coloring, &err);
      if (st != SP_OK) {
        Out o;
        o.status = st;
        if (err) o.err = err;
        sp_string_free(err);
        std::cerr << "(--coloring) ";
        rc = fail(o);
        return;
      }
    }
    const Out o = invoke([&](char** d, char** e) {
      return sp_find_triple(coloring, to_mode(triple_mode), d, e);
    });
    sp_coloring_free(coloring);
    if (o.status != SP_OK) {
      rc = fail(o);
      return;
    }
    rc = emit(o.doc, triple_format, triple_out, [](const json& j) {
      return j.at("triple").is_null() ? std::string("none")
                                      : triple_line(j.at("triple"));
    });
  });

  // --- select ------------------------------------------------------------
  auto* select = app.add_subcommand(
      "select", "Guaranteed monochromatic triple for a named coloring rule");
  std::string select_rule, select_mode, select_format = "json", select_out;
  uint32_t select_colors = 1;
  uint64_t select_cap = 0;
  select->add_option("--rule", select_rule, "const, parity, or mod<k>")
      ->required();
  select->add_option("--colors", select_colors, "palette size t >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  select->add_option("--mode", select_mode, "triple mode")
      ->required()
      ->check(CLI::IsMember({"strong", "weak"}));
  select->add_option(
      "--cap", select_cap,
      "scan horizon (0 = certified default, available for strong t<=4 and "
      "weak t<=3)");
  select->add_option("--format", select_format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));
  select->add_option("--out", select_out, "write the JSON document here");
  select->callback([&]() {
    const Out o = invoke([&](char** d, char** e) {
      return sp_select_triple(select_rule.c_str(), select_colors,
                              to_mode(select_mode), select_cap, d, e);
    });
    if (o.status != SP_OK) {
      rc = fail(o);
      return;
    }
    rc = emit(o.doc, select_format, select_out, [](const json& j) {
      return triple_line(j.at("triple")) + " (rule " +
             j.at("rule").get<std::string>() + ", cap " +
             std::to_string(j.at("cap").get<uint64_t>()) + ")";
    });
  });

  // --- decompose ---------------------------------------------------------
  auto* decompose = app.add_subcommand(
      "decompose", "Fourth-power/mantissa split m = u^4 * mantissa");
  std::vector<uint64_t> dec_basis;
  uint64_t dec_m = 1;
  std::string dec_format = "json", dec_out;
  decompose->add_option("--m", dec_m, "integer to decompose (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  decompose->add_option("--basis", dec_basis, "comma-separated primes")
      ->required()
      ->delimiter(',');
  decompose->add_option("--format", dec_format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));
  decompose->add_option("--out", dec_out, "write the JSON document here");
  decompose->callback([&]() {
    Basis basis;
    if ((rc = basis.create(dec_basis)) != 0) return;
    const Out o = invoke([&](char** d, char** e) {
      return sp_decompose(basis.handle, dec_m, d, e);
    });
    if (o.status != SP_OK) {
      rc = fail(o);
      return;
    }
    rc = emit(o.doc, dec_format, dec_out, [](const json& j) {
      const uint64_t m = j.at("m").get<uint64_t>();
      if (!j.at("smooth").get<bool>())
        return std::to_string(m) + " is not smooth over {" +
               join_u64(j.at("basis")) + "}: cofactor " +
               std::to_string(j.at("cofactor").get<uint64_t>());
      std::string rs;
      for (const auto& r : j.at("residues")) {
        if (!rs.empty()) rs += ",";
        rs += std::to_string(r.get<uint32_t>());
      }
      return std::to_string(m) + " = " +
             std::to_string(j.at("u").get<uint64_t>()) + "^4 * " +
             std::to_string(j.at("mantissa").get<uint64_t>()) +
             "; residues (" + rs + "), index " +
             std::to_string(j.at("mantissa_index").get<uint64_t>());
    });
  });

  // --- witness -----------------------------------------------------------
  auto* witness = app.add_subcommand(
      "witness", "Smallest non-smooth integer: a prime outside the basis");
  std::vector<uint64_t> wit_basis;
  std::string wit_format = "plain", wit_out;
  witness->add_option("--basis", wit_basis, "comma-separated primes")
      ->required()
      ->delimiter(',');
  witness->add_option("--format", wit_format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));
  witness->add_option("--out", wit_out, "write the JSON document here");
  witness->callback([&]() {
    Basis basis;
    if ((rc = basis.create(wit_basis)) != 0) return;
    const Out o = invoke([&](char** d, char** e) {
      return sp_euclid_witness(basis.handle, nullptr, d, e);
    });
    if (o.status != SP_OK) {
      rc = fail(o);
      return;
    }
    rc = emit(o.doc, wit_format, wit_out, [](const json& j) {
      return std::to_string(j.at("witness").get<uint64_t>());
    });
  });

  // --- sweep-triples -----------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep-triples",
      "Exhaustive check: no monochromatic same-mantissa smooth triple");
  std::vector<uint64_t> sw_basis;
  uint64_t sw_bound = 3;
  std::string sw_mode = "weak", sw_format = "json", sw_out;
  sweep->add_option("--basis", sw_basis, "comma-separated primes")
      ->required()
      ->delimiter(',');
  sweep->add_option("--bound", sw_bound, "sweep a+b=c up to this bound (>= 3)")
      ->required();
  sweep->add_option("--mode", sw_mode, "triple mode (default weak)")
      ->check(CLI::IsMember({"strong", "weak"}));
  sweep->add_option("--format", sw_format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));
  sweep->add_option("--out", sw_out, "write the JSON report here");
  sweep->callback([&]() {
    Basis basis;
    if ((rc = basis.create(sw_basis)) != 0) return;
    const Out o = invoke([&](char** d, char** e) {
      return sp_sweep_triples(basis.handle, sw_bound, to_mode(sw_mode), d, e);
    });
    if (o.status != SP_OK) {
      rc = fail(o);
      return;
    }
    rc = emit(o.doc, sw_format, sw_out, [](const json& j) {
      return std::to_string(j.at("violations").size()) + " violations (" +
             std::to_string(j.at("smooth_count").get<uint64_t>()) +
             " smooth numbers, " +
             std::to_string(j.at("triples_examined").get<uint64_t>()) +
             " triples examined)";
    });
  });

  // --- sweep-quartic -----------------------------------------------------
  auto* quartic = app.add_subcommand(
      "sweep-quartic", "Exhaustive refutation of z^4 - y^4 = x^2 up to zmax");
  uint64_t q_zmax = 1;
  std::string q_format = "plain", q_out;
  quartic->add_option("--zmax", q_zmax, "sweep z in [2, zmax]")
      ->required()
      ->check(CLI::PositiveNumber);
  quartic->add_option("--format", q_format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));
  quartic->add_option("--out", q_out, "write the JSON report here");
  quartic->callback([&]() {
    const Out o = invoke(
        [&](char** d, char** e) { return sp_sweep_quartic(q_zmax, d, e); });
    if (o.status != SP_OK) {
      rc = fail(o);
      return;
    }
    rc = emit(o.doc, q_format, q_out, [](const json& j) {
      return std::to_string(j.at("solutions").size()) + " solutions";
    });
  });

  // --- demo --------------------------------------------------------------
  auto* demo = app.add_subcommand(
      "demo",
      "End-to-end pipeline: Euclid witness plus the weak-mode mantissa sweep");
  std::vector<uint64_t> demo_basis;
  uint64_t demo_bound = 3;
  std::string demo_format = "plain", demo_out;
  demo->add_option("--basis", demo_basis, "comma-separated primes")
      ->required()
      ->delimiter(',');
  demo->add_option("--bound", demo_bound, "sweep bound (>= 3)")->required();
  demo->add_option("--format", demo_format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));
  demo->add_option("--out", demo_out, "write the JSON report here");
  demo->callback([&]() {
    Basis basis;
    if ((rc = basis.create(demo_basis)) != 0) return;
    const Out o = invoke([&](char** d, char** e) {
      return sp_proof_demo(basis.handle, demo_bound, d, e);
    });
    if (o.status != SP_OK) {
      rc = fail(o);
      return;
    }
    rc = emit(o.doc, demo_format, demo_out, [](const json& j) {
      std::ostringstream s;
      s << "basis: {" << join_u64(j.at("basis")) << "}, bound "
        << j.at("bound").get<uint64_t>() << "\n";
      s << "pigeonholing fails at " << j.at("witness").get<uint64_t>()
        << ": a prime outside the basis (every smaller integer is smooth)\n";
      s << "smooth part: " << j.at("triples_examined").get<uint64_t>()
        << " weak triples examined, "
        << j.at("violations").size()
        << " with a shared mantissa";
      return s.str();
    });
  });

  // --- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Re-check any certificate emitted by the other subcommands");
  std::string verify_file;
  verify->add_option("--certificate", verify_file, "path to the JSON document")
      ->required();
  verify->callback([&]() {
    std::string text;
    if (!read_file(verify_file, text)) {
      std::cerr << "error: cannot read --certificate file " << verify_file
                << "\n";
      rc = 2;
      return;
    }
    char* report = nullptr;
    char* err = nullptr;
    const sp_status st = sp_verify_document(text.c_str(), &report, &err);
    std::string kind = "unknown", detail;
    if (report) {
      try {
        const json j = json::parse(report);
        kind = j.at("kind").get<std::string>();
        detail = j.at("detail").get<std::string>();
      } catch (...) {
      }
    }
    sp_string_free(report);
    sp_string_free(err);
    if (st == SP_OK) {
      std::cout << "OK " << kind << "\n";
      rc = 0;
    } else {
      std::cout << "FAIL " << kind << ": " << detail << "\n";
      rc = exit_code_for(st);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);  // prints the usage error
    return 2;
  }
  return rc;
}
