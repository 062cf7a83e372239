// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "nbasis/artin.hpp"
#include "nbasis/errors.hpp"
#include "nbasis/lattice.hpp"
#include "nbasis/report.hpp"
#include "oracles.hpp"

using namespace nbasis;

namespace {

constexpr double kHeightTolerance = 1e-3;

struct Criterion {
  int number;
  std::string title;
  bool ok = true;
  std::vector<std::string> failures;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The enclosure meets [target - tol, target + tol].
bool near(const RealInterval& x, double target, double tol = kHeightTolerance) {
  return x.lower().to_double() <= target + tol && x.upper().to_double() >= target - tol;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

FieldPtr corpus_field(const std::string& name) { return build_field(load_field("corpus/" + name + ".json")); }

struct CorpusField {
  std::string name;
  FieldPtr k;
};

std::vector<CorpusField> galois_corpus() {
  std::vector<CorpusField> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator("corpus"))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    FieldPtr k = build_field(load_field(f.string()));
    if (is_galois(*k) == GaloisStatus::Galois) out.push_back({f.stem().string(), k});
  }
  return out;
}

FieldElement random_integral(std::mt19937_64& rng, const FieldPtr& k, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  while (true) {
    IntVector x(k->degree());
    for (auto& v : x) v = c(rng);
    if (sup_norm(x) != 0) return k->from_integral_coordinates(x);
  }
}

Rational abs_q(const Integer& z) { return Rational(z < 0 ? Integer(-z) : z); }

// ---------------------------------------------------------------------------

void criterion1(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  FieldPtr k = make_field(make_int_polynomial({-1, -2, 1, 1}));
  NormalBasisCertificate cert = lattice_normal_basis(*k);
  const double elapsed = seconds_since(t0);
  c.check(cert.method == Method::Lattice, "method is not lattice");
  const auto conj = conjugates(k->generator());
  c.check(cert.basis == conj, "basis is not the conjugates of theta");
  c.check(cert.det_witness == -1, "det witness " + to_string(cert.det_witness) + " != -1");
  c.check(near(cert.height.height, 1.3096), "h = " + fmt(cert.height.height.to_double()) + " not within 1e-3 of 1.3096");
  c.check(cert.bound.exact == Rational(7), "bound is not exactly 7");
  c.check(cert.bound.comparison == Comparison::Less, "h <= 7 not decided LESS");
  c.check(certified_compare(height_of(cert.beta), Rational(7), kDefaultPrecision, kDefaultPrecision) == Comparison::Less,
          "h <= 7 not decided at default precision");
  c.check(elapsed < 1.0, "runtime " + fmt(elapsed) + " s >= 1 s");
}

void criterion2(Criterion& c) {
  FieldPtr k = make_field(make_int_polynomial({-1, -3, 0, 1}));
  NormalBasisCertificate cert = lattice_normal_basis(*k);
  FieldElement th = k->generator();
  const std::vector<FieldElement> expected{k->one(), th, th * th + Rational(-2)};
  c.check(cert.lattice && cert.lattice->minima_preimages == expected, "minima preimages are not {1, theta, theta^2-2}");
  if (cert.lattice)
    for (const auto& p : cert.lattice->minima_preimages)
      c.check(!is_primitive(p) || trace(p) == 0, "minima preimage " + p.to_string() + " passes the joint filter");
  c.check(cert.lattice && cert.lattice->selection != "minima", "selection did not fall back");
  c.check(cert.beta == th + Rational(1), "beta = " + cert.beta.to_string() + ", expected theta+1");
  c.check(cert.height.minpoly == make_int_polynomial({1, 0, -3, 1}), "minpoly is not x^3-3x^2+1");
  c.check(near(cert.height.height, 1.506), "h = " + fmt(cert.height.height.to_double()) + " not within 1e-3 of 1.506");
  c.check(cert.bound.exact == Rational(9), "bound is not exactly 9");
  c.check(cert.bound.comparison == Comparison::Less, "h <= 9 not decided LESS");
}

void criterion3(Criterion& c) {
  FieldPtr k = corpus_field("q_sqrt5_halfbasis");
  c.check(k->discriminant() == 5, "discriminant is not 5");
  NormalBasisCertificate cert = quadratic_normal_basis(*k);
  c.check(cert.method == Method::Quadratic, "method is not quadratic");
  c.check(cert.height.minpoly == make_int_polynomial({-1, -1, 1}), "beta is not a conjugate of phi");
  RationalMatrix m = conjugate_coordinate_matrix(cert.beta);
  c.check(m.determinant() == cert.det_witness && cert.det_witness != 0, "det witness mismatch");
  c.check(near(cert.height.height, 1.2720), "h = " + fmt(cert.height.height.to_double()) + " not within 1e-3 of 1.2720");
  c.check(cert.height_ratio && near(*cert.height_ratio, 0.8506),
          "ratio " + (cert.height_ratio ? fmt(cert.height_ratio->to_double()) : std::string("missing")) +
              " not within 1e-3 of 0.8506");
  c.check(cert.bound.comparison == Comparison::Less && cert.satisfied == Verdict::True, "h <= sqrt(5) check failed");
}

void criterion4(Criterion& c) {
  FieldPtr k = make_field(make_int_polynomial({-5, 0, 1}), RationalMatrix{{1, 0}, {Rational(1, 2), Rational(1, 2)}});
  NormalBasisCertificate cert = artin_search(*k);
  c.check(cert.height.minpoly == make_int_polynomial({1, -5, 5}), "minpoly " + to_string(cert.height.minpoly) +
                                                                     " is not 5x^2-5x+1");
  c.check(square(cert.height.height).contains(Rational(5)), "h enclosure does not contain sqrt(5)");
  c.check(artin_bound(2, Integer(5)) == Integer(25600000), "artin_bound(2,5) != 25600000");
  c.check(cert.bound.exact == Rational(25600000), "certificate bound is not 25600000");
  c.check(cert.bound.comparison == Comparison::Less, "h <= bound not decided LESS");
  c.check(cert.det_witness != 0, "zero det witness");
}

void criterion5(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  bool saw_cyclotomic = false;
  for (const auto& [name, k] : galois_corpus()) {
    if (k->degree() < 2 || k->degree() > 5) continue;
    if (k->defining_polynomial() == make_int_polynomial({1, 1, 1, 1, 1})) saw_cyclotomic = true;
    try {
      NormalBasisCertificate cert = artin_search(*k);
      const bool valid = cert.det_witness != 0 && conjugate_coordinate_matrix(cert.beta).determinant() == cert.det_witness;
      c.check(valid, name + ": invalid certificate");
    } catch (const std::exception& e) {
      c.check(false, name + ": " + e.what());
    }
  }
  c.check(saw_cyclotomic, "x^4+x^3+x^2+x+1 missing from the corpus");
  const double elapsed = seconds_since(t0);
  c.check(elapsed < 60.0, "corpus runtime " + fmt(elapsed) + " s >= 60 s");
}

void criterion6(Criterion& c) {
  std::mt19937_64 rng(20261016);
  constexpr int kCases = 100;
  for (const auto& [name, k] : galois_corpus()) {
    const std::size_t d = k->degree();
    for (int i = 0; i < kCases; ++i) {
      FieldElement a = random_integral(rng, k, 3);
      // height^deg against the Mahler measure at two precisions
      for (PrecisionBits p : {PrecisionBits(128), PrecisionBits(256)}) {
        HeightReport h = weil_height(a, p);
        RealInterval mu = mahler_measure(h.minpoly, p);
        if (!pow(h.height, static_cast<unsigned long>(h.minpoly.degree())).overlaps(mu))
          c.check(false, name + ": h^deg and mu disjoint at " + std::to_string(p) + " bits for " + a.to_string());
      }
      HeightReport h = weil_height(a);
      const int deg = h.minpoly.degree();
      // coefficient bound
      RealInterval rhs = RealInterval(binomial(static_cast<unsigned long>(deg), static_cast<unsigned long>(deg / 2)), 128) *
                         RealInterval::point(h.mahler.lower());
      if (rhs.less_than(Rational(max_abs_coefficient(h.minpoly))))
        c.check(false, name + ": |f| exceeds binomial * mu for " + a.to_string());
      // norm as a product over the embeddings
      RealInterval prod(Integer(1), 128);
      for (const auto& v : embed_all(a, k->embeddings())) prod = prod * abs(v);
      const Rational norm = trace_and_norm(a).norm;
      if (!prod.contains(norm < 0 ? Rational(-norm) : norm))
        c.check(false, name + ": embedding product misses |norm| for " + a.to_string());
      // integer combinations
      std::uniform_int_distribution<int> xi(-3, 3), md(1, 3);
      const int m = md(rng);
      FieldElement sum = k->zero();
      RealInterval hp(Integer(1), 128);
      long sup = 0;
      for (int j = 0; j < m; ++j) {
        FieldElement b = random_integral(rng, k, 2);
        const int x = xi(rng);
        sup = std::max(sup, static_cast<long>(std::abs(x)));
        sum = sum + b * Rational(x);
        hp = hp * weil_height(b).height;
      }
      if (!sum.is_zero()) {
        RealInterval bound = RealInterval(Integer(m * sup), 128) * hp;
        if (weil_height(sum).height.lower() > bound.upper())
          c.check(false, name + ": combination height exceeds m|xi| prod h");
      }
    }
    // independence dichotomy on prime-degree fields
    if (is_prime(d) && d >= 3) {
      int primitive = 0, zero = 0, attempts = 0;
      while ((primitive < kCases || zero < kCases) && attempts < 100000) {
        ++attempts;
        FieldElement a = random_integral(rng, k, 4);
        if (zero < kCases && attempts % 2 == 0) {
          a = a + Rational(-trace(a) / Rational(static_cast<long>(d)));
          if (a.is_zero()) continue;
          RationalMatrix m = conjugate_coordinate_matrix(a);
          RationalVector sum(d, Rational(0));
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sum[j] += m(i, j);
          c.check(m.determinant() == 0 && sum == RationalVector(d, Rational(0)), name + ": trace-zero element independent");
          ++zero;
        } else if (primitive < kCases && is_primitive(a) && trace(a) != 0) {
          c.check(conjugate_coordinate_matrix(a).determinant() != 0, name + ": primitive nonzero-trace element dependent");
          ++primitive;
        }
      }
      c.check(primitive >= kCases && zero >= kCases, name + ": too few dichotomy samples");
    }
    // Minkowski gates
    if (k->is_totally_real() && d <= 5) {
      MinkowskiLattice l = minkowski_lattice(*k);
      c.check(square(l.det).contains(abs_q(k->discriminant())), name + ": det gate");
      MinimaResult mr = supnorm_minima(l);
      c.check(!mr.minima[0].less_than(Rational(1)), name + ": lambda_1 < 1");
      if (mr.exact) {
        RealInterval prod(Integer(1), 128);
        for (const auto& x : mr.minima) prod = prod * x;
        c.check(square(prod).lower() <= RealInterval(abs_q(k->discriminant()), 128).upper(), name + ": prod lambda > sqrt|Delta|");
      }
      if (d <= 3) {
        // exhaustive enumeration oracle
        auto roots = oracle::durand_kerner(k->defining_polynomial());
        std::vector<std::pair<double, IntVector>> pts;
        for (const auto& x : oracle::full_box(d, 4)) {
          if (sup_norm(x) == 0) continue;
          double s = 0;
          for (const auto& r : roots)
            s = std::max(s, static_cast<double>(std::abs(oracle::embed(k->from_integral_coordinates(x), r))));
          pts.emplace_back(s, x);
        }
        std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<RationalVector> rows;
        std::vector<double> ref;
        for (const auto& [s, x] : pts) {
          RationalVector r;
          for (auto v : x) r.push_back(Rational(static_cast<long>(v)));
          rows.push_back(r);
          if (RationalMatrix::from_rows(rows).rank() == rows.size()) ref.push_back(s);
          else rows.pop_back();
          if (ref.size() == d) break;
        }
        for (std::size_t i = 0; i < d && i < ref.size(); ++i)
          c.check(std::fabs(mr.minima[i].to_double() - ref[i]) < 1e-9, name + ": minimum " + std::to_string(i + 1) +
                                                                            " differs from enumeration oracle");
      }
    }
  }
}

void criterion7(Criterion& c) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const unsigned m = 1 + static_cast<unsigned>((t / 3) % 6);
    oracle::MultiPoly p = oracle::random_multipoly(rng, n, m);
    const std::int64_t r = avoidance_radius(p.total_degree());
    bool exists = false;
    IntVector first;
    SmallFirstBox order(n, r);
    while (order.next())
      if (p(order.point()) != 0) {
        exists = true;
        first = order.point();
        break;
      }
    c.check(exists, "no nonvanishing point in the box for case " + std::to_string(t));
    try {
      BoxWitness w = box_search_nonvanishing(std::cref(p), n, p.total_degree());
      c.check(p(w.point) != 0 && sup_norm(w.point) <= r && w.point == first,
              "witness mismatch for case " + std::to_string(t));
    } catch (const std::exception& e) {
      c.check(false, std::string("case ") + std::to_string(t) + ": " + e.what());
    }
  }
}

int run_cli(const std::string& args, std::string& out) {
#ifdef NBASIS_CLI_PATH
  std::string cmd = std::string(NBASIS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
  (void)args;
  (void)out;
  return -1;
#endif
}

void criterion8(Criterion& c) {
  CertificateDocument doc = run_pipeline(load_field("corpus/cubic_pure2.json"), {});
  c.check(doc.exit_code == 2, "pipeline exit code " + std::to_string(doc.exit_code));
  c.check(doc.body.value("message", "").find("1 automorphism") != std::string::npos, "message does not name the count 1");
  c.check(doc.body["field"]["automorphism_count"] == 1, "automorphism_count != 1");
  std::string out;
  const int code = run_cli("normal-basis corpus/cubic_pure2.json", out);
  c.check(code == 2, "CLI exit code " + std::to_string(code));
  try {
    CertificateDocument cli = parse_document(out);
    c.check(cli.body["field"]["automorphism_count"] == 1, "CLI document automorphism_count != 1");
  } catch (const std::exception& e) {
    c.check(false, std::string("CLI output unparsable: ") + e.what());
  }
}

void criterion9(Criterion& c) {
  for (const auto& e : std::filesystem::directory_iterator("corpus")) {
    if (e.path().extension() != ".json") continue;
    FieldInput in = load_field(e.path().string());
    const std::string a = render(run_pipeline(in, {}), ReportFormat::Json, false);
    const std::string b = render(run_pipeline(in, {}), ReportFormat::Json, false);
    c.check(a == b, e.path().filename().string() + ": repeated runs differ");
  }
  std::string first, second;
  run_cli("normal-basis corpus/quintic_zeta11_plus.json", first);
  run_cli("normal-basis corpus/quintic_zeta11_plus.json", second);
  try {
    c.check(render(parse_document(first), ReportFormat::Json, false) ==
                render(parse_document(second), ReportFormat::Json, false),
            "CLI runs differ outside the timing block");
  } catch (const std::exception& e) {
    c.check(false, std::string("CLI output unparsable: ") + e.what());
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    void (*run)(Criterion&);
  };
  const Entry entries[] = {
      {"cyclotomic cubic x^3+x^2-2x-1 lattice certificate", criterion1},
      {"degenerate-minima cubic x^3-3x-1 fallback", criterion2},
      {"quadratic Q(sqrt5) with basis {1,(1+x)/2}", criterion3},
      {"Artin path on Q(sqrt5)", criterion4},
      {"Artin path on every Galois corpus field", criterion5},
      {"randomized property suites", criterion6},
      {"avoidance box brute-force equivalence", criterion7},
      {"non-Galois rejection of x^3-2", criterion8},
      {"deterministic certificates", criterion9},
  };
  int failed = 0, number = 0;
  for (const auto& e : entries) {
    Criterion c{++number, e.title};
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.check(false, std::string("exception: ") + ex.what());
    }
    std::printf("[%s] criterion %d: %s (%.2f s)\n", c.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds_since(t0));
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::printf("    - %s\n", c.failures[i].c_str());
    if (c.failures.size() > 10) std::printf("    - ... %zu more\n", c.failures.size() - 10);
    if (!c.ok) ++failed;
  }
  std::printf("%d of %d criteria passed\n", number - failed, number);
  return failed == 0 ? 0 : 1;
}
