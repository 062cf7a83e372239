#include "nbasis/report.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "nbasis/artin.hpp"
#include "nbasis/errors.hpp"
#include "nbasis/lattice.hpp"

namespace nbasis {

namespace {

int decimal_digits(PrecisionBits p) { return static_cast<int>(static_cast<double>(p) * 0.30103) + 2; }

Json interval_json(const RealInterval& x) {
  const int digits = decimal_digits(x.precision());
  Json j;
  j["lower"] = x.lower().to_decimal(digits, MPFR_RNDD);
  j["upper"] = x.upper().to_decimal(digits, MPFR_RNDU);
  j["precision_bits"] = x.precision();
  return j;
}

RealInterval interval_from_json(const Json& j) {
  return RealInterval::parse(j.at("lower").get<std::string>(), j.at("upper").get<std::string>(),
                             j.at("precision_bits").get<PrecisionBits>());
}

Json coords_json(const RationalVector& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(to_string(q));
  return j;
}

Json poly_json(const IntPolynomial& f) {
  Json j = Json::array();
  for (const auto& c : f.coefficients()) j.push_back(to_string(c));
  return j;
}

Json bound_json(const BoundCheck& b) {
  Json j;
  j["name"] = b.name;
  j["exact"] = b.exact ? Json(to_string(*b.exact)) : Json(nullptr);
  Json iv = interval_json(b.enclosure);
  j["lower"] = iv["lower"];
  j["upper"] = iv["upper"];
  j["precision_bits"] = iv["precision_bits"];
  j["comparison"] = to_string(b.comparison);
  j["informational"] = b.informational;
  return j;
}

std::string plural(std::size_t n, const std::string& word) { return std::to_string(n) + " " + word + (n == 1 ? "" : "s"); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(parse_integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError(where + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

std::vector<RationalVector> matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of rows");
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw InputError(w + ": expected a list");
    RationalVector row;
    for (std::size_t c = 0; c < j[i].size(); ++c) row.push_back(rational_from_json(j[i][c], w + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json field_json(const FieldInput& input, const NumberField& k, bool with_group) {
  Json f;
  f["defining_polynomial"] = poly_json(k.defining_polynomial());
  f["degree"] = k.degree();
  f["discriminant"] = to_string(k.discriminant());
  f["polynomial_discriminant"] = to_string(k.polynomial_discriminant());
  Json basis = Json::array();
  for (std::size_t i = 0; i < k.degree(); ++i) basis.push_back(coords_json(k.integral_basis().row(i)));
  f["integral_basis"] = basis;
  f["integral_basis_supplied"] = k.has_supplied_integral_basis();
  f["totally_real"] = k.is_totally_real();
  f["real_embeddings"] = k.real_embedding_count();
  if (with_group) {
    const AutomorphismGroup& g = k.automorphisms();
    f["galois"] = to_string(g.status);
    f["automorphism_count"] = g.size();
    Json autos = Json::array();
    for (const auto& a : g.automorphisms) autos.push_back(coords_json(a.image_of_generator().coords()));
    f["automorphisms"] = autos;
  }
  Json warnings = Json::array();
  for (const auto& w : k.warnings()) warnings.push_back(w);
  f["warnings"] = warnings;
  f["notes"] = input.notes;
  return f;
}

Json header(const FieldInput& input, const std::string& status) {
  Json j;
  j["format"] = "nbasis-certificate/1";
  j["label"] = input.label;
  j["status"] = status;
  return j;
}

CertificateDocument rejection(const FieldInput& input, const NumberField* k, const std::string& message, int code,
                              const std::optional<Method>& method) {
  CertificateDocument doc;
  doc.body = header(input, "rejected");
  doc.body["message"] = message;
  doc.body["exit_code"] = code;
  if (k) doc.body["field"] = field_json(input, *k, k->automorphisms_populated());
  if (method) doc.body["method"] = to_string(*method);
  doc.exit_code = code;
  return doc;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

// ---- input -------------------------------------------------------------------

FieldInput parse_field_input(const std::string& text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": JSON parse error at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError(source + ": expected a JSON object");
  static const std::vector<std::string> known{"label", "defining_polynomial", "integral_basis", "automorphisms",
                                              "notes"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw InputError(source + ": unknown key \"" + key + "\"");
  if (!j.contains("defining_polynomial")) throw InputError(source + ": missing \"defining_polynomial\"");

  FieldInput in;
  const Json& poly = j["defining_polynomial"];
  if (!poly.is_array()) throw InputError(source + ": defining_polynomial must be a list of integers");
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Rational c = rational_from_json(poly[i], source + ": defining_polynomial[" + std::to_string(i) + "]");
    if (c.get_den() != 1)
      throw InputError(source + ": defining_polynomial[" + std::to_string(i) + "] is not an integer");
    in.defining_polynomial.push_back(c.get_num());
  }
  while (!in.defining_polynomial.empty() && in.defining_polynomial.back() == 0) in.defining_polynomial.pop_back();
  if (in.defining_polynomial.size() < 3) throw InputError(source + ": defining polynomial must have degree >= 2");
  if (in.defining_polynomial.back() != 1) throw InputError(source + ": defining polynomial must be monic");
  const std::size_t d = in.defining_polynomial.size() - 1;

  if (j.contains("integral_basis") && !j["integral_basis"].is_null()) {
    auto rows = matrix_from_json(j["integral_basis"], source + ": integral_basis");
    if (rows.size() != d) throw InputError(source + ": integral_basis must have " + std::to_string(d) + " rows");
    for (const auto& r : rows)
      if (r.size() != d)
        throw InputError(source + ": integral_basis rows must have " + std::to_string(d) + " entries");
    in.integral_basis = std::move(rows);
  }
  if (j.contains("automorphisms") && !j["automorphisms"].is_null()) {
    in.automorphisms = matrix_from_json(j["automorphisms"], source + ": automorphisms");
    for (const auto& a : in.automorphisms)
      if (a.size() != d)
        throw InputError(source + ": automorphism images must have " + std::to_string(d) + " coordinates");
  }
  if (j.contains("notes")) {
    if (!j["notes"].is_string()) throw InputError(source + ": notes must be a string");
    in.notes = j["notes"].get<std::string>();
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InputError(source + ": label must be a string");
    in.label = j["label"].get<std::string>();
  } else {
    in.label = to_pretty_string(IntPolynomial(in.defining_polynomial));
  }
  return in;
}

FieldInput load_field(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << file.rdbuf();
  FieldInput in = parse_field_input(ss.str(), path);
  if (in.label.empty()) in.label = std::filesystem::path(path).stem().string();
  build_field(in);
  return in;
}

FieldPtr build_field(const FieldInput& input) {
  std::optional<RationalMatrix> basis;
  if (input.integral_basis) basis = RationalMatrix::from_rows(*input.integral_basis);
  return make_field(IntPolynomial(input.defining_polynomial), basis, input.automorphisms);
}

MethodChoice parse_method(const std::string& name) {
  if (name == "auto") return MethodChoice::Auto;
  if (name == "artin") return MethodChoice::Artin;
  if (name == "lattice") return MethodChoice::Lattice;
  if (name == "quadratic") return MethodChoice::Quadratic;
  throw InputError("unknown method '" + name + "' (expected auto, artin, lattice or quadratic)");
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  throw InputError("unknown format '" + name + "' (expected json or text)");
}

Method auto_method(const NumberField& k) {
  const std::size_t d = k.degree();
  if (d == 2) return Method::Quadratic;
  if (d % 2 == 1 && is_prime(d) && k.is_totally_real()) return Method::Lattice;
  return Method::Artin;
}

// ---- documents -----------------------------------------------------------------

CertificateDocument certificate_document(const FieldInput& input, const NumberField& k,
                                         const NormalBasisCertificate& c) {
  CertificateDocument doc;
  Json& b = doc.body;
  b = header(input, "certified");
  doc.exit_code = c.satisfied == Verdict::Inconclusive ? kExitInconclusive : kExitOk;
  b["exit_code"] = doc.exit_code;
  b["field"] = field_json(input, k, true);
  b["method"] = to_string(c.method);
  b["beta"] = coords_json(c.beta.coords());
  Json basis = Json::array();
  for (const auto& e : c.basis) basis.push_back(coords_json(e.coords()));
  b["basis"] = basis;
  b["det_witness"] = to_string(c.det_witness);

  Json h = interval_json(c.height.height);
  h["decimal"] = c.height.height.midpoint().to_decimal(12);
  h["minpoly"] = poly_json(c.height.minpoly);
  h["mahler"] = interval_json(c.height.mahler);
  h["count"] = c.basis.size();
  b["height"] = h;
  b["bound"] = bound_json(c.bound);
  Json extra = Json::array();
  for (const auto& e : c.extra_bounds) extra.push_back(bound_json(e));
  b["extra_bounds"] = extra;
  b["satisfied"] = to_string(c.satisfied);

  Json details = Json::object();
  if (c.artin) {
    details["theta"] = coords_json(c.artin->theta.coords());
    Json xi = Json::array();
    for (auto x : c.artin->xi) xi.push_back(x);
    details["xi"] = xi;
    details["alpha"] = coords_json(c.artin->alpha.coords());
    details["evaluation_point"] = to_string(c.artin->eval_point);
  }
  if (c.lattice) {
    details["selection"] = c.lattice->selection;
    details["exact_minima"] = c.lattice->exact_minima;
    details["det_enclosure"] = interval_json(c.lattice->det_enclosure);
    Json minima = Json::array(), pre = Json::array();
    for (const auto& m : c.lattice->minima) minima.push_back(interval_json(m));
    for (const auto& p : c.lattice->minima_preimages) pre.push_back(coords_json(p.coords()));
    details["minima"] = minima;
    details["minima_preimages"] = pre;
    details["beta_sup_norm"] = interval_json(c.lattice->sup_norm);
  }
  if (c.height_ratio) {
    Json r = interval_json(*c.height_ratio);
    r["decimal"] = c.height_ratio->midpoint().to_decimal(12);
    r["constant"] = to_string(*c.ratio_constant);
    details["height_ratio"] = r;
  }
  b["details"] = details;
  Json stats = Json::object();
  for (const auto& [key, value] : c.stats.counters) stats[key] = value;
  b["statistics"] = stats;
  Json notes = Json::array();
  for (const auto& n : c.notes) notes.push_back(n);
  b["notes"] = notes;
  return doc;
}

CertificateDocument run_pipeline(const FieldInput& input, const PipelineOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  FieldPtr k;
  std::optional<Method> method;
  CertificateDocument doc;
  try {
    k = build_field(input);
    switch (options.method) {
      case MethodChoice::Auto:
        method = auto_method(*k);
        break;
      case MethodChoice::Artin:
        method = Method::Artin;
        break;
      case MethodChoice::Lattice:
        method = Method::Lattice;
        break;
      case MethodChoice::Quadratic:
        method = Method::Quadratic;
        break;
    }
    const AutomorphismGroup& g = k->automorphisms(options.precision);
    if (g.status == GaloisStatus::NotGalois) {
      doc = rejection(input, k.get(), "not Galois (" + plural(g.size(), "automorphism") + ")", kExitNotGalois, method);
    } else if (g.status == GaloisStatus::Indeterminate) {
      doc = rejection(input, k.get(),
                      "Galois status undetermined (" + plural(g.size(), "automorphism") + " verified up to " +
                          std::to_string(g.precision_used) + " bits)",
                      kExitInconclusive, method);
    } else {
      std::optional<NormalBasisCertificate> cert;
      if (*method == Method::Artin) {
        PrimitiveElementResult pe = find_primitive_element(*k, std::nullopt, options.max_box, options.precision);
        ArtinOptions ao{pe.theta, options.precision};
        cert = artin_search(*k, ao);
        cert->stats.counters.insert(cert->stats.counters.begin(),
                                    {"primitive_candidates", static_cast<std::int64_t>(pe.candidates)});
        if (!pe.within_budget)
          cert->notes.push_back("no primitive element met the |disc|^(1/d) height budget; smallest found used");
      } else if (*method == Method::Lattice) {
        cert = lattice_normal_basis(*k, options.precision);
      } else {
        cert = quadratic_normal_basis(*k, QuadraticOptions{options.ratio_constant, options.precision});
      }
      doc = certificate_document(input, *k, *cert);
    }
  } catch (const NotGaloisError& e) {
    doc = rejection(input, k.get(), e.what(), kExitNotGalois, method);
  } catch (const SearchExhausted& e) {
    doc = rejection(input, k.get(), e.what(), kExitExhausted, method);
  } catch (const PrecisionError& e) {
    doc = rejection(input, k.get(), e.what(), kExitInconclusive, method);
  } catch (const Error& e) {
    doc = rejection(input, k.get(), e.what(), kExitError, method);
  }
  doc.timing["total_ms"] = elapsed_ms(t0);
  return doc;
}

CertificateDocument analyze_field(const FieldInput& input, const PipelineOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  CertificateDocument doc;
  FieldPtr k;
  try {
    k = build_field(input);
    k->automorphisms(options.precision);
    doc.body = header(input, "analysis");
    doc.body["exit_code"] = kExitOk;
    doc.body["field"] = field_json(input, *k, true);
    doc.body["method"] = to_string(auto_method(*k));
    Json roots = Json::array();
    EmbeddingSet e = k->embeddings(options.precision);
    for (std::size_t i = 0; i < e.size(); ++i) {
      ComplexInterval z = e.root(i);
      Json r;
      r["re"] = interval_json(z.re);
      r["im"] = interval_json(z.im);
      roots.push_back(r);
    }
    doc.body["embeddings"] = roots;
    PrimitiveElementResult pe = find_primitive_element(*k, std::nullopt, options.max_box, options.precision);
    Json p;
    p["element"] = coords_json(pe.theta.coords());
    p["height"] = interval_json(pe.height.height);
    p["within_budget"] = pe.within_budget;
    doc.body["primitive_element"] = p;
  } catch (const Error& e) {
    doc = rejection(input, k.get(), e.what(), kExitError, std::nullopt);
  }
  doc.timing["total_ms"] = elapsed_ms(t0);
  return doc;
}

// ---- rendering -------------------------------------------------------------------

namespace {

void render_text(std::ostream& os, const Json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      render_text(os, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && (value[0].is_object() || value[0].is_array())) {
      os << indent << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          os << indent << "  -\n";
          render_text(os, item, indent + "    ");
        } else {
          os << indent << "  - " << item.dump() << "\n";
        }
      }
    } else {
      os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

}  // namespace

std::string render(const CertificateDocument& doc, ReportFormat format, bool include_timing) {
  if (format == ReportFormat::Json) {
    Json j = doc.body;
    if (include_timing) j["timing"] = doc.timing;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  render_text(os, doc.body, "");
  if (include_timing) render_text(os, Json{{"timing", doc.timing}}, "");
  return os.str();
}

void emit_report(const CertificateDocument& doc, const std::string& path, ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << render(doc, format);
  if (!out) throw Error("write failed for " + path);
}

CertificateDocument parse_document(const std::string& text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": JSON parse error at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("format")) throw InputError(source + ": not a certificate document");
  CertificateDocument doc;
  if (j.contains("timing")) {
    doc.timing = j["timing"];
    j.erase("timing");
  }
  doc.exit_code = j.value("exit_code", static_cast<int>(kExitOk));
  doc.body = std::move(j);
  return doc;
}

// ---- verification ------------------------------------------------------------------

VerifyResult verify_certificate(const CertificateDocument& doc) {
  VerifyResult res;
  auto check = [&](bool ok, const std::string& what) {
    res.checks.push_back((ok ? "ok: " : "FAILED: ") + what);
    if (!ok) res.ok = false;
  };
  const Json& b = doc.body;
  try {
    if (b.value("status", "") != "certified") {
      check(false, "document status is '" + b.value("status", "") + "', not 'certified'");
      return res;
    }
    const Json& f = b.at("field");
    FieldInput in;
    in.label = b.value("label", "");
    for (const auto& c : f.at("defining_polynomial")) in.defining_polynomial.push_back(parse_integer(c.get<std::string>()));
    if (f.at("integral_basis_supplied").get<bool>()) in.integral_basis = matrix_from_json(f.at("integral_basis"), "integral_basis");
    in.automorphisms = matrix_from_json(f.at("automorphisms"), "automorphisms");
    FieldPtr k = build_field(in);
    check(true, "stored automorphisms map theta to roots of f (exact)");
    const AutomorphismGroup& g = k->automorphisms();
    check(g.status == GaloisStatus::Galois && g.size() == k->degree(),
          "field is Galois with " + plural(g.size(), "automorphism"));
    check(to_string(k->discriminant()) == f.at("discriminant").get<std::string>(), "discriminant matches");

    FieldElement beta = k->element(matrix_from_json(Json::array({b.at("beta")}), "beta").front());
    std::vector<RationalVector> basis = matrix_from_json(b.at("basis"), "basis");
    std::vector<FieldElement> conj = conjugates(beta);
    bool same = basis.size() == conj.size();
    for (std::size_t i = 0; same && i < basis.size(); ++i) same = conj[i].coords() == basis[i];
    check(same, "basis equals the conjugates of beta");
    Rational det = RationalMatrix::from_rows(basis).determinant();
    check(det != 0 && to_string(det) == b.at("det_witness").get<std::string>(),
          "det_witness " + b.at("det_witness").get<std::string>() + " recomputed exactly");

    const Json& h = b.at("height");
    IntPolynomial m = minimal_polynomial(beta);
    check(poly_json(m) == h.at("minpoly"), "minimal polynomial of beta matches");
    RealInterval stored = interval_from_json(h);
    const PrecisionBits prec = std::max<PrecisionBits>(stored.precision() - 32, 64);
    HeightReport hr = weil_height(beta, prec);
    check(hr.height.overlaps(stored), "height enclosure reproduced at " + std::to_string(prec) + " bits");

    const Json& bound = b.at("bound");
    const std::string name = bound.at("name").get<std::string>();
    const Integer abs_disc = abs(k->discriminant());
    BoundCheck again;
    if (name == "artin_bound") {
      Integer v = artin_bound(static_cast<unsigned>(k->degree()), abs_disc);
      again = BoundCheck{name, Rational(v), RealInterval(v, prec + 32), certified_compare(height_of(beta), Rational(v), prec)};
    } else {
      again = sqrt_discriminant_check(name, abs_disc, height_of(beta), prec);
    }
    const std::string exact = bound.at("exact").is_null() ? "" : bound.at("exact").get<std::string>();
    check(again.exact ? exact == to_string(*again.exact) : exact.empty(), "bound value " + name + " recomputed");
    check(to_string(again.comparison) == bound.at("comparison").get<std::string>(),
          "bound comparison " + to_string(again.comparison) + " re-decided");
    check(to_string(verdict_at_most(again.comparison)) == b.at("satisfied").get<std::string>(), "satisfied flag consistent");
  } catch (const std::exception& e) {
    check(false, std::string("exception: ") + e.what());
  }
  return res;
}

// ---- corpus -------------------------------------------------------------------------

std::vector<CorpusRow> run_corpus(const std::string& directory, const PipelineOptions& options) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
  if (files.empty()) throw InputError("no *.json field files in " + directory);
  std::sort(files.begin(), files.end());
  std::vector<CorpusRow> rows;
  for (const auto& file : files) {
    CorpusRow row{std::filesystem::path(file).filename().string(), {}};
    try {
      row.doc = run_pipeline(load_field(file), options);
    } catch (const Error& e) {
      FieldInput in;
      in.label = row.file;
      row.doc = rejection(in, nullptr, e.what(), kExitError, std::nullopt);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string corpus_table(const std::vector<CorpusRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(26) << "file" << std::setw(4) << "d" << std::setw(9) << "disc" << std::setw(10)
     << "method" << std::setw(10) << "status" << std::setw(11) << "satisfied" << std::setw(16) << "height"
     << std::setw(12) << "det" << "ms\n";
  for (const auto& r : rows) {
    const Json& b = r.doc.body;
    auto field = [&](const char* key) -> std::string {
      if (!b.contains("field") || !b["field"].contains(key)) return "-";
      const Json& v = b["field"][key];
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << r.doc.timing.value("total_ms", 0.0);
    os << std::setw(26) << r.file << std::setw(4) << field("degree") << std::setw(9) << field("discriminant")
       << std::setw(10) << b.value("method", "-") << std::setw(10) << b.value("status", "-") << std::setw(11)
       << b.value("satisfied", "-") << std::setw(16)
       << (b.contains("height") ? b["height"].value("decimal", "-").substr(0, 14) : std::string("-")) << std::setw(12)
       << b.value("det_witness", "-") << ms.str() << "\n";
    if (b.value("status", "") == "rejected") os << "    " << b.value("message", "") << "\n";
  }
  return os.str();
}

}  // namespace nbasis
