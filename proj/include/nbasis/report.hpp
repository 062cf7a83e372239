#ifndef NBASIS_REPORT_HPP
#define NBASIS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nbasis/certificate.hpp"

namespace nbasis {

using Json = nlohmann::ordered_json;

struct FieldInput {
  std::string label;
  std::vector<Integer> defining_polynomial;  // constant term first
  std::optional<std::vector<RationalVector>> integral_basis;
  std::vector<RationalVector> automorphisms;
  std::string notes;
};

/// Throws InputError with line/column on malformed JSON, unknown keys,
/// non-monic or low-degree polynomials and inconsistent dimensions.
FieldInput parse_field_input(const std::string& text, const std::string& source = "<input>");
/// Parses the file and validates the field, including exact verification of
/// supplied automorphisms.
FieldInput load_field(const std::string& path);
FieldPtr build_field(const FieldInput& input);

enum class MethodChoice { Auto, Artin, Lattice, Quadratic };
MethodChoice parse_method(const std::string& name);

struct PipelineOptions {
  MethodChoice method = MethodChoice::Auto;
  PrecisionBits precision = kDefaultPrecision;
  /// Coordinate radius for enumerations without an a-priori box (primitive
  /// element search).
  std::int64_t max_box = 6;
  Rational ratio_constant = 1;
};

/// d = 2 -> quadratic; odd prime d and totally real -> lattice; else artin.
Method auto_method(const NumberField& k);

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitNotGalois = 2, kExitExhausted = 3, kExitInconclusive = 4 };

/// A serialized certificate (or rejection). All exact values are strings.
struct CertificateDocument {
  Json body;    // deterministic part, fixed key order
  Json timing;  // segregated, excluded from determinism
  int exit_code = kExitOk;
};

CertificateDocument certificate_document(const FieldInput& input, const NumberField& k,
                                         const NormalBasisCertificate& c);
/// Runs the chosen method. Non-Galois fields, exhausted searches and other
/// failures become rejection documents with the matching exit code.
CertificateDocument run_pipeline(const FieldInput& input, const PipelineOptions& options);
/// Field facts without a normal basis search.
CertificateDocument analyze_field(const FieldInput& input, const PipelineOptions& options);

enum class ReportFormat { Json, Text };
ReportFormat parse_format(const std::string& name);
/// Rendered document; json output ends with the timing block.
std::string render(const CertificateDocument& doc, ReportFormat format, bool include_timing = true);
void emit_report(const CertificateDocument& doc, const std::string& path, ReportFormat format);

CertificateDocument parse_document(const std::string& text, const std::string& source = "<certificate>");

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> checks;  // "ok: ..." or "FAILED: ..."
};
/// Rebuilds the field from the document, verifies the stored automorphisms,
/// basis = conjugates of beta, det_witness, the minimal polynomial, the
/// height enclosure and the bound.
VerifyResult verify_certificate(const CertificateDocument& doc);

struct CorpusRow {
  std::string file;
  CertificateDocument doc;
};
/// Every *.json field file in `directory`, sorted by file name.
std::vector<CorpusRow> run_corpus(const std::string& directory, const PipelineOptions& options);
std::string corpus_table(const std::vector<CorpusRow>& rows);

}  // namespace nbasis

#endif
