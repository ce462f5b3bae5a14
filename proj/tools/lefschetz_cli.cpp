// lefschetz: command-line front end for the library.
//
// Exit codes: 0 ok, 1 usage, 2 disagreement, 3 resource cap.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lefschetz/duality.hpp"
#include "lefschetz/fatpoints.hpp"
#include "lefschetz/json.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/quotient.hpp"
#include "lefschetz/verify.hpp"

namespace {

using namespace lefschetz;

enum Exit { kOk = 0, kUsage = 1, kDisagreement = 2, kResourceCap = 3 };

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t prime = kDefaultPrime;
  int retries = 3;
  std::optional<int> degree_cap;
  std::string format = "plain";
};

std::vector<int> parse_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 0) {
      throw PreconditionViolation(std::string("malformed ") + what + " '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

template <class T>
std::string joined(const std::vector<T>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

class Runner {
 public:
  explicit Runner(const Globals& g) : g_(g), prime_(g.prime) {}

  int hilbert(const std::vector<int>& exponents) {
    QuotientSpec spec{exponents, g_.seed, prime_};
    auto h = hilbert_function(spec, quotient());
    auto socle = socle_vector(spec, quotient());
    Json params{{"exponents", exponents}};
    Json results{{"hilbert_function", tagged(h.values, Provenance::Oracle)},
                 {"socle_degree", tagged(h.socle_degree(), Provenance::Oracle)},
                 {"socle_dimensions", tagged(socle, Provenance::Oracle)}};
    if (g_.format == "json") {
      emit(record("hilbert", params, results));
    } else if (g_.format == "csv") {
      std::cout << "degree,h,socle_dimension\n";
      for (int d = 0; d <= h.socle_degree(); ++d) std::cout << d << ',' << h(d) << ',' << socle[static_cast<std::size_t>(d)] << '\n';
    } else {
      std::cout << "exponents: " << joined(exponents, ",") << "\n"
                << "hilbert function: " << joined(h.values, " ") << "\n"
                << "socle degree: " << h.socle_degree() << "\n"
                << "socle dimensions: " << joined(socle, " ") << "\n"
                << "provenance: oracle\n";
    }
    return kOk;
  }

  int lsdim(int degree, const std::vector<int>& mults) {
    LinearSystemSpec s{degree, mults};
    auto r = dimension(s, oracle());
    const auto expected = expected_dim(s);
    const bool special = r.value != expected;
    Json params{{"degree", degree}, {"multiplicities", mults}};
    Json results = to_json(r);
    results["expected_dimension"] = tagged(expected, Provenance::ClosedForm);
    results["special"] = special;
    if (g_.format == "json") {
      emit(record("lsdim", params, results));
    } else if (g_.format == "csv") {
      std::cout << "dimension,expected_dimension,special,provenance\n"
                << r.value << ',' << expected << ',' << (special ? "true" : "false") << ',' << to_string(r.provenance)
                << '\n';
    } else {
      std::cout << "system: " << s.str() << "\n"
                << "dimension: " << r.value << " (" << to_string(r.provenance) << ")\n"
                << "expected dimension: " << expected << "\n"
                << "special: " << (special ? "yes" : "no") << "\n"
                << "trace:\n";
      for (const auto& step : r.trace) std::cout << "  " << step.rule << " -> " << step.result.str() << "\n";
    }
    return kOk;
  }

  int scan(int k, int r, int j, ScanMode mode, Engine engine) {
    auto rep = lefschetz::scan(QuotientSpec::uniform(k, r, g_.seed, prime_), j, {quotient(), mode, engine});
    Json params{{"k", k}, {"r", r}, {"j", j}, {"mode", mode == ScanMode::Full ? "full" : "two-degree"},
                {"engine", engine == Engine::Algebra ? "algebra" : "points"}};
    if (g_.format == "json") {
      emit(record("scan", params, to_json(rep)));
    } else if (g_.format == "csv") {
      std::cout << "degree,dim_source,dim_target,rank,deficiency\n";
      for (const auto& v : rep.verdicts)
        std::cout << v.degree << ',' << v.dim_source << ',' << v.dim_target << ',' << v.rank << ',' << v.deficiency()
                  << '\n';
    } else {
      std::cout << "×L^" << j << " on R/(L_1^" << k << ", ..., L_" << r << "^" << k << ")\n"
                << "hilbert function: " << joined(rep.hilbert.values, " ") << " (" << to_string(rep.provenance)
                << ")\n"
                << "critical degrees: a=" << rep.critical.a << " b=" << rep.critical.b << "\n"
                << "degree  source  target  rank  deficiency\n";
      for (const auto& v : rep.verdicts) {
        std::cout << std::setw(6) << v.degree << std::setw(8) << v.dim_source << std::setw(8) << v.dim_target
                  << std::setw(6) << v.rank << std::setw(12) << v.deficiency() << "\n";
      }
      std::cout << "failures:";
      if (rep.failures.empty()) std::cout << " none";
      for (const auto& f : rep.failures) std::cout << " (" << f.degree << ", " << f.deficiency << ")";
      std::cout << "\n";
      if (rep.prediction) {
        std::cout << "predicted:";
        if (rep.prediction->empty()) std::cout << " none";
        for (const auto& f : *rep.prediction) std::cout << " (" << f.degree << ", " << f.deficiency << ")";
        std::cout << "\nagreement: " << (*rep.agreement ? "yes" : "NO") << "\n";
      } else {
        std::cout << "predicted: no closed form for these parameters\n";
      }
      if (rep.two_degree_certificate) {
        std::cout << "two-degree certificate: " << (*rep.two_degree_certificate ? "maximal rank" : "fails") << "\n";
      }
    }
    return rep.agreement.value_or(true) ? kOk : kDisagreement;
  }

  int table(int r, int jmin, int jmax, int kmin, int kmax, Engine engine) {
    auto rows = experiment_table(r, jmin, jmax, kmin, kmax, g_.seed, prime_, {quotient(), ScanMode::Full, engine});
    bool agree = true;
    Json jrows = Json::array();
    for (const auto& row : rows) {
      // Compared only over the k that have a closed-form prediction.
      std::vector<int> predicted, observed;
      bool any_in_scope = false;
      for (int k = kmin; k <= kmax; ++k) {
        if (!prediction_in_scope(k, r, row.j)) continue;
        any_in_scope = true;
        if (!predict(k, r, row.j).empty()) predicted.push_back(k);
        if (std::find(row.k_values.begin(), row.k_values.end(), k) != row.k_values.end()) observed.push_back(k);
      }
      Json jr{{"j", row.j}, {"k_values", tagged(row.k_values, engine == Engine::Algebra ? Provenance::Oracle : Provenance::Reduction)}};
      if (any_in_scope) {
        jr["predicted"] = tagged(predicted, Provenance::ClosedForm);
        jr["agreement"] = predicted == observed;
        agree = agree && predicted == observed;
      }
      jrows.push_back(jr);
    }
    Json params{{"r", r}, {"jmin", jmin}, {"jmax", jmax}, {"kmin", kmin}, {"kmax", kmax},
                {"engine", engine == Engine::Algebra ? "algebra" : "points"}};
    if (g_.format == "json") {
      emit(record("table", params, Json{{"rows", jrows}}));
    } else if (g_.format == "csv") {
      std::cout << "j,k_values\n";
      for (const auto& row : rows) std::cout << row.j << ',' << joined(row.k_values, " ") << '\n';
    } else {
      std::cout << "r=" << r << ", " << kmin << " <= k <= " << kmax << ": k for which ×L^j fails maximal rank\n";
      for (const auto& row : rows) std::cout << std::setw(3) << row.j << " | " << joined(row.k_values, ", ") << "\n";
    }
    return agree ? kOk : kDisagreement;
  }

  int verify(const std::string& suite) {
    std::vector<std::string> names;
    if (suite == "all") {
      names = suite_names();
    } else {
      names = {suite};
    }
    VerifyOptions vo{g_.seed, prime_, g_.retries, g_.degree_cap};
    std::vector<SuiteResult> results;
    for (const auto& n : names) results.push_back(run_suite(n, vo));
    bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& s) { return s.passed(); });
    if (g_.format == "json") {
      Json suites = Json::array();
      for (const auto& s : results) suites.push_back(to_json(s));
      emit(record("verify", Json{{"suite", suite}}, Json{{"suites", suites}, {"pass", ok}}));
    } else if (g_.format == "csv") {
      std::cout << "suite,check,expected,observed,pass,gating\n";
      for (const auto& s : results) {
        for (const auto& c : s.checks) {
          std::cout << s.suite << ',' << csv_quote(c.name) << ',' << csv_quote(c.expected["value"].dump()) << ','
                    << csv_quote(c.observed["value"].dump()) << ',' << (c.pass ? "true" : "false") << ','
                    << (c.gating ? "true" : "false") << '\n';
        }
      }
    } else {
      for (const auto& s : results) {
        for (const auto& c : s.checks) {
          const char* tag = c.pass ? "PASS" : (c.gating ? "FAIL" : "NOTE");
          std::cout << tag << "  " << s.suite << "/" << c.name << "  expected " << c.expected["value"].dump() << " ("
                    << c.expected["provenance"].get<std::string>() << "), observed " << c.observed["value"].dump()
                    << " (" << c.observed["provenance"].get<std::string>() << ")\n";
        }
        std::cout << s.suite << ": " << (s.checks.size() - s.failures()) << "/" << s.checks.size() << " "
                  << (s.passed() ? "passed" : "FAILED") << "\n";
      }
    }
    return ok ? kOk : kDisagreement;
  }

 private:
  QuotientOptions quotient() const { return {g_.retries, g_.degree_cap}; }
  OracleOptions oracle() const { return {g_.seed, prime_, g_.retries}; }

  Json record(const std::string& command, Json params, Json results) const {
    if (g_.degree_cap) params["degree_cap"] = *g_.degree_cap;
    return lefschetz::record(command, std::move(params), g_.seed, prime_, g_.retries, std::move(results));
  }

  static void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

  Globals g_;
  Prime prime_;
};

ScanMode parse_mode(const std::string& s) { return s == "two-degree" ? ScanMode::TwoDegree : ScanMode::Full; }
Engine parse_engine(const std::string& s) { return s == "points" ? Engine::Points : Engine::Algebra; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal rank of multiplication by powers of a general linear form on quotients by powers of "
               "general linear forms in three variables"};
  app.require_subcommand(1);
  Globals g;
  int cap = 0;
  app.add_option("--seed", g.seed, "Seed for the random draws")->envname("LEFSCHETZ_SEED");
  app.add_option("--prime", g.prime, "Prime modulus, 10^6 < p < 2^62")->envname("LEFSCHETZ_PRIME");
  app.add_option("--retries", g.retries, "Independent draws per computation")
      ->envname("LEFSCHETZ_RETRIES")
      ->check(CLI::PositiveNumber);
  auto* cap_opt = app.add_option("--degree-cap", cap, "Largest degree searched for a vanishing Hilbert function")
                      ->envname("LEFSCHETZ_DEGREE_CAP")
                      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "Output format")
      ->envname("LEFSCHETZ_FORMAT")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  auto* fjson = app.add_flag("--json", "Same as --format json");
  auto* fcsv = app.add_flag("--csv", "Same as --format csv");
  auto* fplain = app.add_flag("--plain", "Same as --format plain");
  fjson->excludes(fcsv)->excludes(fplain);
  fcsv->excludes(fplain);

  auto* hil = app.add_subcommand("hilbert", "Hilbert function and socle of R/(L_1^a_1, ..., L_r^a_r)")->fallthrough();
  int uk = 0, ur = 0;
  std::string exps;
  auto* o_uk = hil->add_option("--uniform", uk, "Common exponent k")->check(CLI::PositiveNumber);
  auto* o_ur = hil->add_option("--forms", ur, "Number of forms r")->check(CLI::PositiveNumber);
  auto* o_ex = hil->add_option("--exponents", exps, "Comma-separated exponents");
  o_uk->needs(o_ur);
  o_ur->needs(o_uk);
  o_ex->excludes(o_uk)->excludes(o_ur);

  auto* lsd = app.add_subcommand("lsdim", "Dimension of the plane linear system L(j; b_1, ..., b_n)")->fallthrough();
  int ls_j = 0;
  std::string ls_b;
  lsd->add_option("j", ls_j, "Degree")->required()->check(CLI::NonNegativeNumber);
  lsd->add_option("multiplicities", ls_b, "Comma-separated multiplicities");

  auto* scn = app.add_subcommand("scan", "Rank of ×L^j in every degree")->fallthrough();
  int sk = 0, sr = 0, sj = 0;
  std::string mode = "full", engine = "algebra";
  scn->add_option("--k", sk, "Exponent k")->required()->check(CLI::PositiveNumber);
  scn->add_option("--r", sr, "Number of forms r")->required()->check(CLI::PositiveNumber);
  scn->add_option("--j", sj, "Power j of L")->required()->check(CLI::PositiveNumber);
  scn->add_option("--mode", mode, "full or two-degree")->check(CLI::IsMember({"full", "two-degree"}));
  scn->add_option("--engine", engine, "algebra or points")->check(CLI::IsMember({"algebra", "points"}));

  auto* tab = app.add_subcommand("table", "For each j, the k where ×L^j fails maximal rank")->fallthrough();
  int tr = 0, jmin = 3, jmax = 0, kmin = 3, kmax = 0;
  std::string tengine = "algebra";
  tab->add_option("--r", tr, "Number of forms r")->required()->check(CLI::Range(3, 1000));
  tab->add_option("--jmin", jmin, "Smallest j")->check(CLI::PositiveNumber);
  tab->add_option("--jmax", jmax, "Largest j")->required()->check(CLI::PositiveNumber);
  tab->add_option("--kmin", kmin, "Smallest k")->check(CLI::PositiveNumber);
  tab->add_option("--kmax", kmax, "Largest k")->required()->check(CLI::PositiveNumber);
  tab->add_option("--engine", tengine, "algebra or points")->check(CLI::IsMember({"algebra", "points"}));

  auto* ver = app.add_subcommand("verify", "Run a verification suite")->fallthrough();
  std::string suite;
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  ver->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(allowed));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  if (*fjson) g.format = "json";
  if (*fcsv) g.format = "csv";
  if (*fplain) g.format = "plain";
  if (*cap_opt) g.degree_cap = cap;

  try {
    Runner run(g);
    if (*hil) {
      std::vector<int> e;
      if (*o_ex) {
        e = parse_list(exps, "exponent list");
      } else if (*o_uk) {
        e.assign(static_cast<std::size_t>(ur), uk);
      } else {
        throw PreconditionViolation("hilbert needs --uniform K --forms R or --exponents LIST");
      }
      if (e.empty()) throw PreconditionViolation("hilbert needs at least one exponent");
      return run.hilbert(e);
    }
    if (*lsd) return run.lsdim(ls_j, parse_list(ls_b, "multiplicity list"));
    if (*scn) return run.scan(sk, sr, sj, parse_mode(mode), parse_engine(engine));
    if (*tab) {
      if (jmin > jmax || kmin > kmax) throw PreconditionViolation("empty j or k range");
      return run.table(tr, jmin, jmax, kmin, kmax, parse_engine(tengine));
    }
    if (*ver) return run.verify(suite);
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
