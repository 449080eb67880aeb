#include "sp/json_io.hpp"

#include <json.hpp>

#include <set>
#include <utility>

namespace sp {

using nlohmann::json;

namespace {

json triple_json(const SchurTriple& t) {
  json j;
  j["a"] = t.a;
  j["b"] = t.b;
  j["c"] = t.c;
  j["color"] = t.color;
  return j;
}

json violations_json(const std::vector<MantissaViolation>& violations) {
  json arr = json::array();
  for (const MantissaViolation& v : violations) {
    json j;
    j["a"] = v.a;
    j["b"] = v.b;
    j["c"] = v.c;
    j["shared_mantissa"] = v.shared_mantissa;
    arr.push_back(std::move(j));
  }
  return arr;
}

json coloring_json(const Coloring& coloring) {
  json j;
  j["colors"] = coloring.colors();
  j["n"] = coloring.n();
  j["t"] = coloring.t();
  return j;
}

}  // namespace

std::string to_json(const SchurCertificate& cert) {
  json j;
  j["mode"] = to_string(cert.mode);
  j["s_value"] = cert.s_value;
  j["searched_through"] = cert.searched_through;
  j["t"] = cert.t;
  j["witness_colors"] = cert.witness.colors();
  return j.dump();
}

std::string to_json(const Coloring& coloring) {
  return coloring_json(coloring).dump();
}

Coloring coloring_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.size() != 3 || !j.contains("colors") ||
      !j.contains("n") || !j.contains("t"))
    throw ParseError("coloring document must have exactly keys {colors, n, t}");
  try {
    const int t = j.at("t").get<int>();
    const u64 n = j.at("n").get<u64>();
    std::vector<int> colors = j.at("colors").get<std::vector<int>>();
    if (n != colors.size())
      throw ParseError("n does not match the colors array length");
    return Coloring(t, std::move(colors));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed coloring document: ") + e.what());
  }
}

std::string quartic_sweep_to_json(u64 z_max,
                                  const std::vector<QuarticCandidate>& sols,
                                  const std::string& elapsed_note) {
  json arr = json::array();
  for (const QuarticCandidate& s : sols) {
    json j;
    j["x"] = s.x;
    j["y"] = s.y;
    j["z"] = s.z;
    arr.push_back(std::move(j));
  }
  json j;
  j["elapsed_note"] = elapsed_note;
  j["solutions"] = std::move(arr);
  j["z_max"] = z_max;
  return j.dump();
}

std::string to_json(const TripleSweepReport& report) {
  json j;
  j["basis"] = report.basis.primes();
  j["bound"] = report.bound;
  j["mode"] = to_string(report.mode);
  j["smooth_count"] = report.smooth_count;
  j["triples_examined"] = report.triples_examined;
  j["violations"] = violations_json(report.violations);
  return j.dump();
}

std::string to_json(const DemoReport& report) {
  json j;
  j["basis"] = report.basis.primes();
  j["bound"] = report.bound;
  j["triples_examined"] = report.sweep.triples_examined;
  j["violations"] = violations_json(report.sweep.violations);
  j["witness"] = report.witness.witness;
  return j.dump();
}

std::string to_json(const EuclidWitness& witness) {
  json j;
  j["basis"] = witness.basis.primes();
  j["verified_smooth_below"] = witness.verified_smooth_below;
  j["witness"] = witness.witness;
  return j.dump();
}

std::string decomposition_to_json(const MantissaDecomposition& dec,
                                  const PrimeBasis& basis) {
  json j;
  j["basis"] = basis.primes();
  j["m"] = dec.m;
  j["mantissa"] = dec.mantissa;
  j["mantissa_index"] = mantissa_index(dec.residues);
  j["quotients"] = dec.quotients;
  j["residues"] = dec.residues;
  j["smooth"] = true;
  j["u"] = dec.u;
  return j.dump();
}

std::string not_smooth_to_json(u64 m, const PrimeBasis& basis, u64 cofactor) {
  json j;
  j["basis"] = basis.primes();
  j["cofactor"] = cofactor;
  j["m"] = m;
  j["smooth"] = false;
  return j.dump();
}

std::string triple_doc_to_json(const Coloring& coloring, TripleMode mode,
                               const std::optional<SchurTriple>& triple) {
  json j;
  j["coloring"] = coloring_json(coloring);
  j["mode"] = to_string(mode);
  j["triple"] = triple ? triple_json(*triple) : json(nullptr);
  return j.dump();
}

std::string selected_triple_to_json(const std::string& rule, int t,
                                    TripleMode mode, u64 cap,
                                    const SchurTriple& triple) {
  json j;
  j["cap"] = cap;
  j["mode"] = to_string(mode);
  j["rule"] = rule;
  j["t"] = t;
  j["triple"] = triple_json(triple);
  return j.dump();
}

// ---------------------------------------------------------------------------
// Verification: recognize a document by its exact key set and re-check it.

namespace {

VerifyReport ok_report(const char* kind) { return {true, kind, ""}; }
VerifyReport fail_report(const char* kind, std::string detail) {
  return {false, kind, std::move(detail)};
}

PrimeBasis basis_from(const json& j) {
  return PrimeBasis(j.get<std::vector<u64>>());
}

std::string triple_str(u64 a, u64 b, u64 c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

// Naive monochromatic-triple scan, deliberately written out here so the
// verifier shares no code with the backtracking search.
bool scan_has_triple(const std::vector<int>& colors, TripleMode mode,
                     u64* oa = nullptr, u64* ob = nullptr, u64* oc = nullptr) {
  const u64 n = colors.size();
  for (u64 c = 2; c <= n; ++c)
    for (u64 a = 1; a < c; ++a) {
      const u64 b = c - a;
      if (a > b || (mode == TripleMode::Weak && a == b)) break;
      if (colors[a - 1] == colors[b - 1] && colors[a - 1] == colors[c - 1]) {
        if (oa) *oa = a;
        if (ob) *ob = b;
        if (oc) *oc = c;
        return true;
      }
    }
  return false;
}

// Exact re-computation is cheap up to t = 3 in either mode; the t = 4 strong
// search runs minutes and is deliberately not re-run by the verifier.
bool rerun_is_cheap(int t) { return t <= 3; }

VerifyReport check_schur(const json& j) {
  const char* kind = "schur_certificate";
  const TripleMode mode = mode_from_string(j.at("mode").get<std::string>());
  const int t = j.at("t").get<int>();
  const u64 s = j.at("s_value").get<u64>();
  const u64 searched = j.at("searched_through").get<u64>();
  const std::vector<int> colors =
      j.at("witness_colors").get<std::vector<int>>();
  if (t < 1) return fail_report(kind, "palette size must be >= 1");
  if (colors.size() != s)
    return fail_report(kind, "witness_colors length differs from s_value");
  if (searched != s + 1)
    return fail_report(kind, "searched_through must equal s_value + 1");
  int max_seen = -1;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const int c = colors[i];
    if (c < 0 || c >= t)
      return fail_report(kind, "witness color outside palette at position " +
                                   std::to_string(i + 1));
    if (c > max_seen + 1)
      return fail_report(kind,
                         "witness is not in canonical color order (color " +
                             std::to_string(c) + " appears at position " +
                             std::to_string(i + 1) + " before color " +
                             std::to_string(c - 1) + ")");
    max_seen = std::max(max_seen, c);
  }
  u64 a = 0, b = 0, c = 0;
  if (scan_has_triple(colors, mode, &a, &b, &c))
    return fail_report(kind, "witness admits the monochromatic triple " +
                                 triple_str(a, b, c));
  const auto cert = certified_schur_number(t, mode);
  if (!cert)
    return fail_report(kind,
                       "no certified threshold for t = " + std::to_string(t) +
                           " in " + to_string(mode) +
                           " mode; such a certificate cannot come from this "
                           "artifact and cannot be checked");
  if (*cert != s)
    return fail_report(kind, "s_value " + std::to_string(s) +
                                 " disagrees with the certified threshold " +
                                 std::to_string(*cert));
  if (rerun_is_cheap(t)) {
    const SchurCertificate fresh = schur_number(t, mode);
    if (fresh.s_value != s)
      return fail_report(kind, "recomputed search found S = " +
                                   std::to_string(fresh.s_value));
    if (fresh.witness.colors() != colors)
      return fail_report(
          kind, "witness differs from the deterministic search result");
  }
  return ok_report(kind);
}

VerifyReport check_coloring(const json& j) {
  const char* kind = "coloring";
  coloring_from_json(j.dump());  // throws ParseError with the exact problem
  return ok_report(kind);
}

VerifyReport check_quartic(const json& j) {
  const char* kind = "quartic_sweep";
  const u64 z_max = j.at("z_max").get<u64>();
  if (!j.at("elapsed_note").is_string())
    return fail_report(kind, "elapsed_note must be a string");
  std::vector<QuarticCandidate> claimed;
  for (const json& s : j.at("solutions"))
    claimed.push_back(
        {s.at("x").get<u64>(), s.at("y").get<u64>(), s.at("z").get<u64>()});
  const std::vector<QuarticCandidate> fresh = search_quartic(z_max);
  if (claimed != fresh)
    return fail_report(kind,
                       "solution list differs from a fresh exhaustive sweep (" +
                           std::to_string(claimed.size()) + " claimed, " +
                           std::to_string(fresh.size()) + " found)");
  return ok_report(kind);
}

VerifyReport check_sweep(const json& j) {
  const char* kind = "triple_sweep";
  const PrimeBasis basis = basis_from(j.at("basis"));
  const u64 bound = j.at("bound").get<u64>();
  const TripleMode mode = mode_from_string(j.at("mode").get<std::string>());
  const TripleSweepReport fresh =
      verify_no_mono_smooth_triple(basis, bound, mode);
  if (j.at("smooth_count").get<u64>() != fresh.smooth_count)
    return fail_report(kind, "smooth_count differs from a fresh sweep (" +
                                 std::to_string(fresh.smooth_count) +
                                 " recomputed)");
  if (j.at("triples_examined").get<u64>() != fresh.triples_examined)
    return fail_report(kind, "triples_examined differs from a fresh sweep (" +
                                 std::to_string(fresh.triples_examined) +
                                 " recomputed)");
  const json fresh_violations = violations_json(fresh.violations);
  if (j.at("violations") != fresh_violations)
    return fail_report(kind, "violations differ from a fresh sweep");
  return ok_report(kind);
}

VerifyReport check_demo(const json& j) {
  const char* kind = "demo";
  const PrimeBasis basis = basis_from(j.at("basis"));
  const u64 bound = j.at("bound").get<u64>();
  // The demo pipeline always runs in weak mode (distinct summands).
  const DemoReport fresh = run_proof_demo(basis, bound, TripleMode::Weak);
  if (j.at("witness").get<u64>() != fresh.witness.witness)
    return fail_report(kind, "witness differs from a fresh scan (" +
                                 std::to_string(fresh.witness.witness) +
                                 " recomputed)");
  if (j.at("triples_examined").get<u64>() != fresh.sweep.triples_examined)
    return fail_report(kind, "triples_examined differs from a fresh sweep (" +
                                 std::to_string(fresh.sweep.triples_examined) +
                                 " recomputed)");
  if (j.at("violations") != violations_json(fresh.sweep.violations))
    return fail_report(kind, "violations differ from a fresh sweep");
  return ok_report(kind);
}

VerifyReport check_euclid(const json& j) {
  const char* kind = "euclid_witness";
  const PrimeBasis basis = basis_from(j.at("basis"));
  const u64 claimed = j.at("witness").get<u64>();
  const u64 below = j.at("verified_smooth_below").get<u64>();
  const EuclidWitness fresh = euclid_witness(basis);
  if (claimed != fresh.witness)
    return fail_report(kind, "witness differs from a fresh scan (" +
                                 std::to_string(fresh.witness) +
                                 " recomputed)");
  if (below != fresh.verified_smooth_below)
    return fail_report(kind, "verified_smooth_below differs from a fresh scan");
  if (!is_prime_u64(claimed))
    return fail_report(kind, "witness is not prime");
  if (basis.contains(claimed))
    return fail_report(kind, "witness lies inside the basis");
  return ok_report(kind);
}

VerifyReport check_decomposition(const json& j) {
  const char* kind = "decomposition";
  const PrimeBasis basis = basis_from(j.at("basis"));
  const u64 m = j.at("m").get<u64>();
  if (j.at("smooth").get<bool>() != true)
    return fail_report(kind, "smooth must be true for this document shape");
  const MantissaDecomposition fresh = decompose(m, basis);
  if (j.at("u").get<u64>() != fresh.u)
    return fail_report(kind, "u differs from a fresh decomposition");
  if (j.at("mantissa").get<u64>() != fresh.mantissa)
    return fail_report(kind, "mantissa differs from a fresh decomposition");
  if (j.at("quotients").get<std::vector<u32>>() != fresh.quotients)
    return fail_report(kind, "quotients differ from a fresh decomposition");
  if (j.at("residues").get<std::vector<u32>>() != fresh.residues)
    return fail_report(kind, "residues differ from a fresh decomposition");
  if (j.at("mantissa_index").get<u64>() != mantissa_index(fresh.residues))
    return fail_report(kind, "mantissa_index differs from the residues");
  // Reconstruction identity, checked directly on the document's own numbers.
  const u64 u = j.at("u").get<u64>();
  if (checked_mul(checked_pow(u, 4), j.at("mantissa").get<u64>()) != m)
    return fail_report(kind, "m != u^4 * mantissa");
  return ok_report(kind);
}

VerifyReport check_not_smooth(const json& j) {
  const char* kind = "decomposition";
  const PrimeBasis basis = basis_from(j.at("basis"));
  const u64 m = j.at("m").get<u64>();
  if (j.at("smooth").get<bool>() != false)
    return fail_report(kind, "smooth must be false for this document shape");
  const FactorResult fresh = try_factor_over_basis(m, basis);
  if (fresh.smooth)
    return fail_report(kind, std::to_string(m) + " is basis-smooth after all");
  if (j.at("cofactor").get<u64>() != fresh.cofactor)
    return fail_report(kind, "cofactor differs from a fresh factorization (" +
                                 std::to_string(fresh.cofactor) +
                                 " recomputed)");
  return ok_report(kind);
}

VerifyReport check_triple_doc(const json& j) {
  const char* kind = "triple";
  const TripleMode mode = mode_from_string(j.at("mode").get<std::string>());
  const Coloring coloring = coloring_from_json(j.at("coloring").dump());
  const std::optional<SchurTriple> fresh =
      find_monochromatic_triple(coloring, mode);
  const json& t = j.at("triple");
  if (t.is_null()) {
    if (fresh)
      return fail_report(kind, "coloring admits the monochromatic triple " +
                                   triple_str(fresh->a, fresh->b, fresh->c) +
                                   " but the document claims none");
    return ok_report(kind);
  }
  const u64 a = t.at("a").get<u64>();
  const u64 b = t.at("b").get<u64>();
  const u64 c = t.at("c").get<u64>();
  const int color = t.at("color").get<int>();
  if (checked_add(a, b) != c) return fail_report(kind, "a + b != c");
  if (mode == TripleMode::Strong ? a > b : a >= b)
    return fail_report(kind, "summand order violates the mode");
  if (c > coloring.n())
    return fail_report(kind, "triple lies outside the colored interval");
  if (coloring.color_of(a) != color || coloring.color_of(b) != color ||
      coloring.color_of(c) != color)
    return fail_report(kind, "triple is not monochromatic under the coloring");
  if (!fresh || fresh->a != a || fresh->b != b || fresh->c != c ||
      fresh->color != color)
    return fail_report(kind,
                       "triple is not the lexicographically smallest one");
  return ok_report(kind);
}

VerifyReport check_selected(const json& j) {
  const char* kind = "selected_triple";
  const std::string rule = j.at("rule").get<std::string>();
  const int t = j.at("t").get<int>();
  const TripleMode mode = mode_from_string(j.at("mode").get<std::string>());
  const u64 cap = j.at("cap").get<u64>();
  const SchurTriple fresh =
      guaranteed_triple(selector_rule(rule), t, mode, cap);
  const json& tr = j.at("triple");
  if (tr.at("a").get<u64>() != fresh.a || tr.at("b").get<u64>() != fresh.b ||
      tr.at("c").get<u64>() != fresh.c ||
      tr.at("color").get<int>() != fresh.color)
    return fail_report(kind, "triple differs from a fresh selection " +
                                 triple_str(fresh.a, fresh.b, fresh.c));
  return ok_report(kind);
}

}  // namespace

VerifyReport verify_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    return fail_report("parse", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object())
    return fail_report("parse", "top level is not a JSON object");

  std::set<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
  const auto is = [&keys](std::initializer_list<const char*> want) {
    if (keys.size() != want.size()) return false;
    for (const char* k : want)
      if (!keys.count(k)) return false;
    return true;
  };

  try {
    if (is({"mode", "s_value", "searched_through", "t", "witness_colors"}))
      return check_schur(j);
    if (is({"colors", "n", "t"})) return check_coloring(j);
    if (is({"elapsed_note", "solutions", "z_max"})) return check_quartic(j);
    if (is({"basis", "bound", "mode", "smooth_count", "triples_examined",
            "violations"}))
      return check_sweep(j);
    if (is({"basis", "bound", "triples_examined", "violations", "witness"}))
      return check_demo(j);
    if (is({"basis", "verified_smooth_below", "witness"}))
      return check_euclid(j);
    if (is({"basis", "m", "mantissa", "mantissa_index", "quotients",
            "residues", "smooth", "u"}))
      return check_decomposition(j);
    if (is({"basis", "cofactor", "m", "smooth"})) return check_not_smooth(j);
    if (is({"coloring", "mode", "triple"})) return check_triple_doc(j);
    if (is({"cap", "mode", "rule", "t", "triple"})) return check_selected(j);
    return fail_report("unknown", "unrecognized document key set");
  } catch (const std::exception& e) {
    return fail_report("malformed", e.what());
  }
}

}  // namespace sp
