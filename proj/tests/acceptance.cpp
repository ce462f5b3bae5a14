// Acceptance run: one line per criterion, nonzero exit if any gating criterion fails.
//
// Expected values are written out here from the published statements rather
// than taken from the library's own closed forms.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lefschetz/duality.hpp"
#include "lefschetz/fatpoints.hpp"
#include "lefschetz/json.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/quotient.hpp"
#include "lefschetz/verify.hpp"

using namespace lefschetz;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Reporter {
 public:
  void run(int id, const std::string& title, double budget_s, bool gating, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt < budget_s;
    const bool pass = out.pass && in_time;
    std::ostringstream line;
    line << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << std::fixed;
    line.precision(2);
    line << dt << " s, budget " << budget_s << " s)";
    if (!gating) line << " [observational, not gating]";
    if (!in_time) line << " over budget";
    if (!out.detail.empty()) line << "\n       " << out.detail;
    std::cout << line.str() << std::endl;
    if (gating && !pass) ++gating_failures_;
  }
  int gating_failures() const { return gating_failures_; }

 private:
  int gating_failures_ = 0;
};

std::string failures_str(const std::vector<Failure>& fs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? " " : "") << "(" << fs[i].degree << "," << fs[i].deficiency << ")";
  return os.str() + "]";
}

template <class T>
std::string list_str(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// (1 + t + ... + t^{k-1})^3 by direct convolution.
std::vector<std::int64_t> complete_intersection(int k) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(3 * k - 2), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) ++h[static_cast<std::size_t>(a + b + c)];
  return h;
}

/// The fourth power acts with maximal rank on the complete intersection, so
/// h(d) = max(0, h_CI(d) - h_CI(d-k)).
std::vector<std::int64_t> four_form_table(int k) {
  auto ci = complete_intersection(k);
  auto at = [&](int d) { return d < 0 || d >= static_cast<int>(ci.size()) ? 0 : ci[static_cast<std::size_t>(d)]; };
  std::vector<std::int64_t> out;
  for (int d = 0;; ++d) {
    auto v = std::max<std::int64_t>(0, at(d) - at(d - k));
    if (v == 0) break;
    out.push_back(v);
  }
  return out;
}

/// Failure degrees and deficiencies for four forms and j = 3, 4, 5, keyed on k mod 3.
std::vector<Failure> published_failures(int k, int j) {
  const int k0 = k / 3;
  const int e = k % 3;
  if (j == 3) return e == 0 ? std::vector<Failure>{{4 * k0, 1}} : std::vector<Failure>{};
  if (j == 4) {
    if (e == 1) return {{4 * k0 + 2, 1}};
    if (e == 2) return {{4 * k0 + 3, 1}};
    return {};
  }
  if (e == 0) return {{4 * k0 + 1, 3}};
  if (e == 1) return {{4 * k0 + 2, 1}};
  return {{4 * k0 + 4, 1}};
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 8192> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

}  // namespace

int main() {
  Reporter rep;
  const QuotientOptions qopt{};
  const OracleOptions fopt{};

  rep.run(1, "Hilbert function of four uniform powers, k = 3..12", 10, true, [&] {
    for (int k = 3; k <= 12; ++k) {
      auto h = hilbert_function(QuotientSpec::uniform(k, 4), qopt);
      auto table = four_form_table(k);
      bool literal = h(k) == binom2(k + 2) - 4 && h(k + 1) == binom2(k + 3) - 12 && h(2 * k - 3) == 3 * k - 3 &&
                     h(2 * k - 2) == k && (2 * k - 4 < k || h(2 * k - 4) == 5 * k - 9);
      for (int d = 0; d < k; ++d) literal = literal && h(d) == binom2(d + 2);
      if (h.values != table || !literal) {
        return Outcome{false, "k=" + std::to_string(k) + " computed " + list_str(h.values) + " expected " +
                                  list_str(table)};
      }
    }
    return Outcome{true, ""};
  });

  rep.run(2, "Duality: linear algebra equals fat points, r = 3..7, k = 3..10, degrees >= k", 60, true, [&] {
    int compared = 0;
    for (int r = 3; r <= 7; ++r) {
      for (int k = 3; k <= 10; ++k) {
        auto spec = QuotientSpec::uniform(k, r);
        auto h = hilbert_function(spec, qopt);
        for (int d = k; d <= h.socle_degree() + 2; ++d) {
          auto pts = quotient_dim_via_points({spec.exponents, d}, fopt).value;
          ++compared;
          if (pts != h(d)) {
            return Outcome{false, "r=" + std::to_string(r) + " k=" + std::to_string(k) + " degree " +
                                      std::to_string(d) + ": " + std::to_string(h(d)) + " vs " + std::to_string(pts)};
          }
        }
      }
    }
    return Outcome{true, std::to_string(compared) + " degrees compared"};
  });

  rep.run(3, "Cremona and Bezout steps preserve the oracle dimension on 200 seeded systems", 120, true, [&] {
    int steps = 0;
    for (const auto& s : detail::fatpoint_corpus(0)) {
      const auto before = oracle_dimension(s, fopt);
      for (auto step : {cremona_step, bezout_conic_step, bezout_line_step}) {
        if (auto next = step(s)) {
          ++steps;
          const auto after = oracle_dimension(*next, fopt);
          if (after != before) {
            return Outcome{false, s.str() + " -> " + next->str() + ": " + std::to_string(before) + " vs " +
                                      std::to_string(after)};
          }
        }
      }
    }
    return Outcome{true, std::to_string(steps) + " steps checked"};
  });

  rep.run(4, "Named fat-point dimensions", 60, true, [&] {
    std::vector<std::pair<LinearSystemSpec, std::int64_t>> named{
        {{7, {5, 2, 2, 2, 2}}, 9}, {{12, {8, 4, 4, 4, 4}}, 15}, {{3, {1, 1, 1, 1, 2}}, 3}};
    for (int k = 3; k <= 8; ++k) named.push_back({{2 * k - 2, std::vector<int>(5, k - 1)}, 1});
    for (const auto& [s, want] : named) {
      const auto red = dimension(s, fopt).value;
      const auto orc = oracle_dimension(s, fopt);
      if (red != want || orc != want) {
        return Outcome{false, s.str() + ": reduction " + std::to_string(red) + ", oracle " + std::to_string(orc) +
                                  ", expected " + std::to_string(want)};
      }
    }
    return Outcome{true, ""};
  });

  rep.run(5, "x L^2 has maximal rank for r = 5..8, k = 3..12", 60, true, [&] {
    for (int r = 5; r <= 8; ++r) {
      for (int k = 3; k <= 12; ++k) {
        auto s = scan(QuotientSpec::uniform(k, r), 2);
        if (!s.failures.empty()) {
          return Outcome{false, "r=" + std::to_string(r) + " k=" + std::to_string(k) + " failures " +
                                    failures_str(s.failures)};
        }
      }
    }
    return Outcome{true, ""};
  });

  rep.run(6, "x L^3, x L^4, x L^5 failures for four forms, k = 3..12", 60, true, [&] {
    for (int k = 3; k <= 12; ++k) {
      std::vector<int> powers{3, 4};
      if (k >= 4) powers.push_back(5);
      for (const auto& s : scan_powers(QuotientSpec::uniform(k, 4), powers)) {
        auto want = published_failures(k, s.power);
        if (s.failures != want || want != predict(k, 4, s.power)) {
          return Outcome{false, "k=" + std::to_string(k) + " j=" + std::to_string(s.power) + ": observed " +
                                    failures_str(s.failures) + ", expected " + failures_str(want)};
        }
      }
    }
    return Outcome{true, ""};
  });

  rep.run(7, "x L^6 for four forms, k = 12..18: at least two failure degrees", 60, false, [&] {
    bool all = true;
    std::ostringstream os;
    for (int k = 12; k <= 18; ++k) {
      auto s = scan(QuotientSpec::uniform(k, 4), 6);
      all = all && s.failures.size() >= 2;
      os << "k=" << k << " " << failures_str(s.failures) << (k < 18 ? "; " : "");
    }
    return Outcome{all, os.str()};
  });

  rep.run(8, "Six forms, j = 3..6, k = 3..15 failure table", 300, true, [&] {
    const std::vector<std::vector<int>> want{{5, 10, 15}, {7, 8, 12, 13}, {9, 10, 11, 14, 15}, {9, 11, 12, 13, 14}};
    auto rows = experiment_table(6, 3, 6, 3, 15);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].k_values != want[i]) {
        return Outcome{false, "j=" + std::to_string(rows[i].j) + ": " + list_str(rows[i].k_values) + " expected " +
                                  list_str(want[i])};
      }
    }
    return Outcome{true, ""};
  });

  rep.run(9, "Socle: degree 2k-2 for four and five forms, nothing below 2k-3 for four", 60, true, [&] {
    for (int k = 3; k <= 10; ++k) {
      auto socle = socle_vector(QuotientSpec::uniform(k, 4), qopt);
      if (static_cast<int>(socle.size()) != 2 * k - 1) return Outcome{false, "r=4 k=" + std::to_string(k) + " degree"};
      for (int d = 0; d < 2 * k - 3; ++d)
        if (socle[static_cast<std::size_t>(d)] != 0)
          return Outcome{false, "r=4 k=" + std::to_string(k) + " socle in degree " + std::to_string(d)};
    }
    for (int k = 3; k <= 8; ++k) {
      if (hilbert_function(QuotientSpec::uniform(k, 5), qopt).socle_degree() != 2 * k - 2)
        return Outcome{false, "r=5 k=" + std::to_string(k)};
    }
    return Outcome{true, ""};
  });

  rep.run(10, "Formulas: C1 - C2, critical degrees, peaks", 60, true, [&] {
    int compared = 0;
    for (int k = 3; k <= 12; ++k) {
      auto h = hilbert_function(QuotientSpec::uniform(k, 4), qopt);
      for (int j = 1; j <= 5; ++j) {
        for (int d = k; d <= 2 * k - 2; ++d) {
          ++compared;
          if (c1c2(k, j, d).difference != h(d - j) - h(d))
            return Outcome{false, "c1c2 k=" + std::to_string(k) + " j=" + std::to_string(j) + " d=" + std::to_string(d)};
        }
      }
    }
    for (int k = 3; k <= 30; ++k) {
      auto h = k <= 12 ? hilbert_function(QuotientSpec::uniform(k, 4), qopt)
                       : hilbert_function_via_points(QuotientSpec::uniform(k, 4), qopt, fopt).hf;
      for (int j = 2; j <= 5; ++j) {
        CriticalDegrees closed;
        try {
          closed = critical_degrees_closed_form(k, j);
        } catch (const OutOfRange&) {
          continue;
        }
        ++compared;
        if (!(closed == critical_degrees_scan(h, j)))
          return Outcome{false, "critical degrees k=" + std::to_string(k) + " j=" + std::to_string(j)};
      }
    }
    for (int r = 5; r <= 8; ++r) {
      for (int k = 2; k <= 12; ++k) {
        ++compared;
        auto h = hilbert_function(QuotientSpec::uniform(k, r), qopt);
        const int e = k % (r - 1), k0 = k / (r - 1);
        std::vector<int> want = k <= r - 2 ? std::vector<int>{k - 1}
                                : e >= 1   ? std::vector<int>{r * k0 + e - 1}
                                           : std::vector<int>{r * k0 - 2, r * k0 - 1};
        if (argmax_degrees(h) != want || peaks(r, k).peaks != want)
          return Outcome{false, "peaks r=" + std::to_string(r) + " k=" + std::to_string(k) + ": " +
                                    list_str(argmax_degrees(h))};
      }
    }
    return Outcome{true, std::to_string(compared) + " comparisons"};
  });

  rep.run(11, "Determinism: verify output is byte-identical across runs", 120, true, [&] {
    for (const auto& name : suite_names()) {
      if (to_json(run_suite(name)).dump() != to_json(run_suite(name)).dump())
        return Outcome{false, "library suite " + name};
    }
    const std::string cmd = std::string(LEFSCHETZ_CLI_PATH) + " verify all --json --seed 0";
    int s1 = 0, s2 = 0;
    auto a = capture(cmd, s1);
    auto b = capture(cmd, s2);
    if (a.empty() || a != b) return Outcome{false, "CLI output differs between runs"};
    if (s1 != 0 || s2 != 0) return Outcome{false, "CLI exit status " + std::to_string(s1)};
    return Outcome{true, std::to_string(a.size()) + " bytes identical"};
  });

  // Extended target, reported but not gating.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::vector<int>> want{
        {5, 10, 15, 20, 25, 30},
        {7, 8, 12, 13, 17, 18, 22, 23, 27, 28},
        {9, 10, 11, 14, 15, 16, 19, 20, 21, 24, 25, 26, 29, 30},
        {9, 11, 12, 13, 14, 16, 17, 18, 19, 21, 22, 23, 24, 26, 27, 28, 29},
        {11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30},
        {10, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30},
        {12, 13, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30},
        {14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30}};
    auto rows = experiment_table(6, 3, 10, 3, 30, 0, Prime{}, {qopt, ScanMode::Full, Engine::Points});
    bool ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) ok = ok && rows[i].k_values == want[i];
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "[INFO] extended six-form table j <= 10, k <= 30 (fat-point engine): "
              << (ok ? "matches" : "DIFFERS") << " (" << dt << " s)" << std::endl;
  }

  std::cout << (rep.gating_failures() == 0 ? "all gating criteria passed" : "gating criteria failed: ")
            << (rep.gating_failures() == 0 ? "" : std::to_string(rep.gating_failures())) << std::endl;
  return rep.gating_failures() == 0 ? 0 : 1;
}
