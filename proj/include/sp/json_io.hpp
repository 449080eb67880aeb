#pragma once

#include <optional>
#include <string>

#include "sp/descent.hpp"
#include "sp/pipeline.hpp"
#include "sp/schur.hpp"

namespace sp {

// JSON documents with pinned, stable keys. Emission and verification live
// together so every document the CLI writes can be re-checked.

// {"mode", "t", "s_value", "witness_colors", "searched_through"}
std::string to_json(const SchurCertificate& cert);

// {"t", "n", "colors"}; colors[i] is the color of integer i+1.
std::string to_json(const Coloring& coloring);
Coloring coloring_from_json(const std::string& text);  // throws ParseError

// {"z_max", "solutions", "elapsed_note"}
std::string quartic_sweep_to_json(u64 z_max,
                                  const std::vector<QuarticCandidate>& sols,
                                  const std::string& elapsed_note);

// {"basis", "bound", "mode", "smooth_count", "triples_examined", "violations"}
std::string to_json(const TripleSweepReport& report);

// {"basis", "bound", "witness", "triples_examined", "violations"}
std::string to_json(const DemoReport& report);

// {"basis", "witness", "verified_smooth_below"}
std::string to_json(const EuclidWitness& witness);

// {"m", "basis", "smooth", "u", "quotients", "residues", "mantissa",
// "mantissa_index"} or the not-smooth outcome {"m", "basis", "smooth",
// "cofactor"}.
std::string decomposition_to_json(const MantissaDecomposition& dec,
                                  const PrimeBasis& basis);
std::string not_smooth_to_json(u64 m, const PrimeBasis& basis, u64 cofactor);

// {"mode", "coloring", "triple"}; triple is null when none exists.
std::string triple_doc_to_json(const Coloring& coloring, TripleMode mode,
                               const std::optional<SchurTriple>& triple);

// {"rule", "t", "mode", "cap", "triple"}
std::string selected_triple_to_json(const std::string& rule, int t,
                                    TripleMode mode, u64 cap,
                                    const SchurTriple& triple);

struct VerifyReport {
  bool ok = false;
  std::string kind;    // document kind recognized from its key set
  std::string detail;  // first violated invariant when !ok
};

// Recognizes any document emitted above by its key fingerprint and re-checks
// it. Witness colorings are validated with a standalone scanner independent
// of the search; sweep documents are re-executed and compared.
VerifyReport verify_document(const std::string& text);

}  // namespace sp
