#include "schurprimes.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include <json.hpp>

#include "sp/arith.hpp"
#include "sp/json_io.hpp"
#include "sp/pipeline.hpp"
#include "sp/schur.hpp"

#ifndef SP_VERSION_STRING
#define SP_VERSION_STRING "0.0.0"
#endif

struct sp_basis {
  sp::PrimeBasis impl;
};

struct sp_coloring {
  sp::Coloring impl;
};

namespace {

using nlohmann::json;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put_error(char** out_error, sp_status code, const std::string& message,
               json extras = json::object()) {
  if (!out_error) return;
  json j = std::move(extras);
  j["code"] = sp_status_name(code);
  j["message"] = message;
  *out_error = dup_string(j.dump());
}

sp_status bad_argument(char** out_error, const std::string& message) {
  put_error(out_error, SP_E_BAD_ARGUMENT, message);
  return SP_E_BAD_ARGUMENT;
}

// Runs the body and funnels the library's exception taxonomy into status
// codes plus a JSON error document.
template <typename F>
sp_status guarded(char** out_error, F&& body) {
  if (out_error) *out_error = nullptr;
  try {
    return body();
  } catch (const sp::NotSmoothError& e) {
    put_error(out_error, SP_E_NOT_SMOOTH, e.what(),
              {{"value", e.value}, {"cofactor", e.cofactor}});
    return SP_E_NOT_SMOOTH;
  } catch (const sp::OverflowError& e) {
    put_error(out_error, SP_E_OVERFLOW, e.what());
    return SP_E_OVERFLOW;
  } catch (const sp::CapExceededError& e) {
    put_error(out_error, SP_E_CAP_EXCEEDED, e.what(), {{"cap", e.cap}});
    return SP_E_CAP_EXCEEDED;
  } catch (const sp::HorizonExhaustedError& e) {
    put_error(out_error, SP_E_HORIZON_EXHAUSTED, e.what(), {{"cap", e.cap}});
    return SP_E_HORIZON_EXHAUSTED;
  } catch (const sp::NotATripleError& e) {
    put_error(out_error, SP_E_NOT_A_TRIPLE, e.what());
    return SP_E_NOT_A_TRIPLE;
  } catch (const sp::NotPrimitiveError& e) {
    put_error(out_error, SP_E_NOT_PRIMITIVE, e.what());
    return SP_E_NOT_PRIMITIVE;
  } catch (const sp::SumMismatchError& e) {
    put_error(out_error, SP_E_SUM_MISMATCH, e.what());
    return SP_E_SUM_MISMATCH;
  } catch (const sp::MantissaMismatchError& e) {
    put_error(out_error, SP_E_MANTISSA_MISMATCH, e.what(),
              {{"mantissa_a", e.mantissa_a},
               {"mantissa_b", e.mantissa_b},
               {"mantissa_c", e.mantissa_c}});
    return SP_E_MANTISSA_MISMATCH;
  } catch (const sp::ParseError& e) {
    put_error(out_error, SP_E_PARSE, e.what());
    return SP_E_PARSE;
  } catch (const std::exception& e) {
    put_error(out_error, SP_E_INTERNAL, e.what());
    return SP_E_INTERNAL;
  } catch (...) {
    put_error(out_error, SP_E_INTERNAL, "unknown error");
    return SP_E_INTERNAL;
  }
}

sp::TripleMode to_mode(sp_triple_mode mode) {
  return mode == SP_MODE_STRONG ? sp::TripleMode::Strong
                                : sp::TripleMode::Weak;
}

}  // namespace

extern "C" {

SP_API const char* sp_version(void) { return SP_VERSION_STRING; }

SP_API const char* sp_status_name(sp_status status) {
  switch (status) {
    case SP_OK: return "SP_OK";
    case SP_E_BAD_ARGUMENT: return "SP_E_BAD_ARGUMENT";
    case SP_E_PARSE: return "SP_E_PARSE";
    case SP_E_NOT_SMOOTH: return "SP_E_NOT_SMOOTH";
    case SP_E_OVERFLOW: return "SP_E_OVERFLOW";
    case SP_E_CAP_EXCEEDED: return "SP_E_CAP_EXCEEDED";
    case SP_E_HORIZON_EXHAUSTED: return "SP_E_HORIZON_EXHAUSTED";
    case SP_E_NOT_A_TRIPLE: return "SP_E_NOT_A_TRIPLE";
    case SP_E_NOT_PRIMITIVE: return "SP_E_NOT_PRIMITIVE";
    case SP_E_SUM_MISMATCH: return "SP_E_SUM_MISMATCH";
    case SP_E_MANTISSA_MISMATCH: return "SP_E_MANTISSA_MISMATCH";
    case SP_E_VERIFY_FAILED: return "SP_E_VERIFY_FAILED";
    case SP_E_INTERNAL: return "SP_E_INTERNAL";
  }
  return "SP_E_INTERNAL";
}

SP_API void sp_string_free(char* s) { std::free(s); }

SP_API sp_status sp_basis_create(const uint64_t* primes, size_t count,
                                 sp_basis** out_basis, char** out_error) {
  if (!out_basis) return bad_argument(out_error, "out_basis must not be NULL");
  *out_basis = nullptr;
  if (!primes || count == 0)
    return bad_argument(out_error, "primes must be a non-empty array");
  return guarded(out_error, [&]() {
    std::vector<sp::u64> v(primes, primes + count);
    *out_basis = new sp_basis{sp::PrimeBasis(std::move(v))};
    return SP_OK;
  });
}

SP_API void sp_basis_free(sp_basis* basis) { delete basis; }

SP_API size_t sp_basis_size(const sp_basis* basis) {
  return basis ? basis->impl.size() : 0;
}

SP_API uint64_t sp_basis_prime(const sp_basis* basis, size_t index) {
  if (!basis || index >= basis->impl.size()) return 0;
  return basis->impl.prime(index);
}

SP_API sp_status sp_coloring_create(uint32_t t, const int32_t* colors,
                                    size_t n, sp_coloring** out_coloring,
                                    char** out_error) {
  if (!out_coloring)
    return bad_argument(out_error, "out_coloring must not be NULL");
  *out_coloring = nullptr;
  if (!colors || n == 0)
    return bad_argument(out_error, "colors must be a non-empty array");
  return guarded(out_error, [&]() {
    std::vector<int> v(colors, colors + n);
    *out_coloring =
        new sp_coloring{sp::Coloring(static_cast<int>(t), std::move(v))};
    return SP_OK;
  });
}

SP_API sp_status sp_coloring_parse(const char* text,
                                   sp_coloring** out_coloring,
                                   char** out_error) {
  if (!out_coloring)
    return bad_argument(out_error, "out_coloring must not be NULL");
  *out_coloring = nullptr;
  if (!text) return bad_argument(out_error, "text must not be NULL");
  return guarded(out_error, [&]() {
    *out_coloring = new sp_coloring{sp::coloring_from_json(text)};
    return SP_OK;
  });
}

SP_API void sp_coloring_free(sp_coloring* coloring) { delete coloring; }

SP_API uint32_t sp_coloring_palette(const sp_coloring* coloring) {
  return coloring ? static_cast<uint32_t>(coloring->impl.t()) : 0;
}

SP_API uint64_t sp_coloring_length(const sp_coloring* coloring) {
  return coloring ? coloring->impl.n() : 0;
}

SP_API int32_t sp_coloring_color(const sp_coloring* coloring, uint64_t x) {
  if (!coloring || x < 1 || x > coloring->impl.n()) return -1;
  return coloring->impl.color_of(x);
}

SP_API sp_status sp_schur_number(uint32_t colors, sp_triple_mode mode,
                                 uint64_t cap, char** out_json,
                                 char** out_error) {
  if (!out_json) return bad_argument(out_error, "out_json must not be NULL");
  *out_json = nullptr;
  return guarded(out_error, [&]() {
    const sp::SchurCertificate cert =
        (cap == 0)
            ? sp::schur_number(static_cast<int>(colors), to_mode(mode))
            : sp::schur_number(static_cast<int>(colors), to_mode(mode), cap);
    *out_json = dup_string(sp::to_json(cert));
    return SP_OK;
  });
}

SP_API sp_status sp_find_triple(const sp_coloring* coloring,
                                sp_triple_mode mode, char** out_json,
                                char** out_error) {
  if (!out_json) return bad_argument(out_error, "out_json must not be NULL");
  *out_json = nullptr;
  if (!coloring) return bad_argument(out_error, "coloring must not be NULL");
  return guarded(out_error, [&]() {
    const auto triple =
        sp::find_monochromatic_triple(coloring->impl, to_mode(mode));
    *out_json =
        dup_string(sp::triple_doc_to_json(coloring->impl, to_mode(mode), triple));
    return SP_OK;
  });
}

SP_API sp_status sp_select_triple(const char* rule, uint32_t colors,
                                  sp_triple_mode mode, uint64_t cap,
                                  char** out_json, char** out_error) {
  if (!out_json) return bad_argument(out_error, "out_json must not be NULL");
  *out_json = nullptr;
  if (!rule) return bad_argument(out_error, "rule must not be NULL");
  return guarded(out_error, [&]() {
    const int t = static_cast<int>(colors);
    const sp::TripleMode m = to_mode(mode);
    sp::u64 horizon = cap;
    if (horizon == 0) {
      const auto d = sp::default_selector_cap(t, m);
      if (!d)
        throw sp::ParseError(
            "no certified default cap for this palette/mode; pass --cap");
      horizon = *d;
    }
    const sp::SchurTriple triple =
        sp::guaranteed_triple(sp::selector_rule(rule), t, m, horizon);
    *out_json =
        dup_string(sp::selected_triple_to_json(rule, t, m, horizon, triple));
    return SP_OK;
  });
}

SP_API sp_status sp_decompose(const sp_basis* basis, uint64_t m,
                              char** out_json, char** out_error) {
  if (!out_json) return bad_argument(out_error, "out_json must not be NULL");
  *out_json = nullptr;
  if (!basis) return bad_argument(out_error, "basis must not be NULL");
  return guarded(out_error, [&]() {
    const sp::FactorResult f = sp::try_factor_over_basis(m, basis->impl);
    if (!f.smooth) {
      *out_json =
          dup_string(sp::not_smooth_to_json(m, basis->impl, f.cofactor));
      return SP_OK;
    }
    const sp::MantissaDecomposition dec = sp::decompose(m, basis->impl);
    *out_json = dup_string(sp::decomposition_to_json(dec, basis->impl));
    return SP_OK;
  });
}

SP_API sp_status sp_euclid_witness(const sp_basis* basis,
                                   uint64_t* out_witness, char** out_json,
                                   char** out_error) {
  if (out_json) *out_json = nullptr;
  if (out_witness) *out_witness = 0;
  if (!basis) return bad_argument(out_error, "basis must not be NULL");
  return guarded(out_error, [&]() {
    const sp::EuclidWitness w = sp::euclid_witness(basis->impl);
    if (out_witness) *out_witness = w.witness;
    if (out_json) *out_json = dup_string(sp::to_json(w));
    return SP_OK;
  });
}

SP_API sp_status sp_sweep_triples(const sp_basis* basis, uint64_t bound,
                                  sp_triple_mode mode, char** out_json,
                                  char** out_error) {
  if (!out_json) return bad_argument(out_error, "out_json must not be NULL");
  *out_json = nullptr;
  if (!basis) return bad_argument(out_error, "basis must not be NULL");
  return guarded(out_error, [&]() {
    const sp::TripleSweepReport report =
        sp::verify_no_mono_smooth_triple(basis->impl, bound, to_mode(mode));
    *out_json = dup_string(sp::to_json(report));
    return SP_OK;
  });
}

SP_API sp_status sp_sweep_quartic(uint64_t z_max, char** out_json,
                                  char** out_error) {
  if (!out_json) return bad_argument(out_error, "out_json must not be NULL");
  *out_json = nullptr;
  return guarded(out_error, [&]() {
    const std::vector<sp::QuarticCandidate> sols = sp::search_quartic(z_max);
    // Deterministic note (no wall-clock content): documents the sweep extent.
    const sp::u64 pairs = z_max < 2 ? 0 : z_max * (z_max - 1) / 2;
    const std::string note = "exhaustive over 1 <= y < z <= " +
                             std::to_string(z_max) + "; " +
                             std::to_string(pairs) +
                             " pairs tested with exact integer square roots";
    *out_json = dup_string(sp::quartic_sweep_to_json(z_max, sols, note));
    return SP_OK;
  });
}

SP_API sp_status sp_proof_demo(const sp_basis* basis, uint64_t bound,
                               char** out_json, char** out_error) {
  if (!out_json) return bad_argument(out_error, "out_json must not be NULL");
  *out_json = nullptr;
  if (!basis) return bad_argument(out_error, "basis must not be NULL");
  return guarded(out_error, [&]() {
    const sp::DemoReport report =
        sp::run_proof_demo(basis->impl, bound, sp::TripleMode::Weak);
    *out_json = dup_string(sp::to_json(report));
    return SP_OK;
  });
}

SP_API sp_status sp_verify_document(const char* text, char** out_report,
                                    char** out_error) {
  if (out_report) *out_report = nullptr;
  if (out_error) *out_error = nullptr;
  if (!text) return bad_argument(out_error, "text must not be NULL");
  const sp::VerifyReport report = sp::verify_document(text);
  if (out_report) {
    json j;
    j["detail"] = report.detail;
    j["kind"] = report.kind;
    j["ok"] = report.ok;
    *out_report = dup_string(j.dump());
  }
  return report.ok ? SP_OK : SP_E_VERIFY_FAILED;
}

}  // extern "C"
