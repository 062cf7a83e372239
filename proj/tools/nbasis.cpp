#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nbasis/errors.hpp"
#include "nbasis/report.hpp"

using namespace nbasis;

namespace {

struct CommonFlags {
  std::string method = "auto";
  long precision = kDefaultPrecision;
  long max_box = 6;
  std::string ratio_constant = "1";
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* app, CommonFlags& flags) {
  app->add_option("--method", flags.method, "auto, artin, lattice or quadratic")->capture_default_str();
  app->add_option("--precision-bits", flags.precision, "working precision in bits")->capture_default_str()
      ->check(CLI::Range(32L, static_cast<long>(kMaxPrecision)));
  app->add_option("--max-box", flags.max_box, "coordinate radius for the primitive element search")
      ->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--ratio-constant", flags.ratio_constant, "reference constant for the quadratic height ratio")
      ->capture_default_str();
  app->add_option("--output,-o", flags.output, "write the report here instead of stdout");
  app->add_option("--format", flags.format, "json or text")->capture_default_str();
}

PipelineOptions pipeline_options(const CommonFlags& flags) {
  PipelineOptions o;
  o.method = parse_method(flags.method);
  o.precision = flags.precision;
  o.max_box = flags.max_box;
  o.ratio_constant = parse_rational(flags.ratio_constant);
  return o;
}

void write(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal bases of small height for Galois number fields"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, basis_flags, corpus_flags;
  std::string analyze_input, basis_input, corpus_dir = "corpus", certificate;
  std::string verify_output;

  auto* analyze = app.add_subcommand("analyze", "field facts: discriminant, embeddings, automorphisms");
  analyze->add_option("field", analyze_input, "field JSON file")->required()->check(CLI::ExistingFile);
  add_common(analyze, analyze_flags);

  auto* basis = app.add_subcommand("normal-basis", "construct and certify a normal basis");
  basis->add_option("field", basis_input, "field JSON file")->required()->check(CLI::ExistingFile);
  add_common(basis, basis_flags);

  auto* verify = app.add_subcommand("verify", "re-check a certificate");
  verify->add_option("certificate", certificate, "certificate JSON file")->required()->check(CLI::ExistingFile);
  verify->add_option("--output,-o", verify_output, "write the check list here instead of stdout");

  auto* corpus = app.add_subcommand("corpus", "run every field file in a directory");
  corpus->add_option("directory", corpus_dir, "directory of field JSON files")->capture_default_str()
      ->check(CLI::ExistingDirectory);
  add_common(corpus, corpus_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      ReportFormat fmt = parse_format(analyze_flags.format);
      CertificateDocument doc = analyze_field(parse_field_input(read_file(analyze_input), analyze_input),
                                              pipeline_options(analyze_flags));
      write(render(doc, fmt), analyze_flags.output);
      return doc.exit_code;
    }
    if (*basis) {
      ReportFormat fmt = parse_format(basis_flags.format);
      PipelineOptions opts = pipeline_options(basis_flags);
      FieldInput in = parse_field_input(read_file(basis_input), basis_input);
      CertificateDocument doc = run_pipeline(in, opts);
      write(render(doc, fmt), basis_flags.output);
      if (doc.exit_code != kExitOk && doc.body.contains("message"))
        std::cerr << "nbasis: " << doc.body["message"].get<std::string>() << "\n";
      return doc.exit_code;
    }
    if (*verify) {
      VerifyResult r = verify_certificate(parse_document(read_file(certificate), certificate));
      std::ostringstream os;
      for (const auto& c : r.checks) os << c << "\n";
      os << (r.ok ? "verified" : "NOT verified") << "\n";
      write(os.str(), verify_output);
      return r.ok ? kExitOk : kExitError;
    }
    if (*corpus) {
      ReportFormat fmt = parse_format(corpus_flags.format);
      std::vector<CorpusRow> rows = run_corpus(corpus_dir, pipeline_options(corpus_flags));
      std::string text;
      if (fmt == ReportFormat::Text) {
        text = corpus_table(rows);
      } else {
        Json all = Json::array();
        for (const auto& r : rows) {
          Json entry;
          entry["file"] = r.file;
          entry["certificate"] = r.doc.body;
          entry["timing"] = r.doc.timing;
          all.push_back(entry);
        }
        text = all.dump(2) + "\n";
      }
      write(text, corpus_flags.output);
      int worst = kExitOk;
      for (const auto& r : rows)
        if (r.doc.exit_code != kExitOk && r.doc.exit_code != kExitNotGalois) worst = r.doc.exit_code;
      return worst;
    }
  } catch (const Error& e) {
    std::cerr << "nbasis: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "nbasis: internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
