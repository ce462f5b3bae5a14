#pragma once

// Machine-readable records. Every number is wrapped with the engine that
// produced it: {"value": ..., "provenance": "oracle" | "reduction" | "closed-form"}.

#include <string>
#include <vector>

#include <json.hpp>

#include "lefschetz/fatpoints.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/quotient.hpp"

namespace lefschetz {

using Json = nlohmann::ordered_json;

template <class T>
Json tagged(const T& value, Provenance p) {
  return Json{{"value", value}, {"provenance", std::string(to_string(p))}};
}

inline Json record(const std::string& command, Json parameters, std::uint64_t seed, const Prime& prime, int retries,
                   Json results) {
  return Json{{"command", command},   {"parameters", std::move(parameters)},
              {"seed", seed},         {"prime", prime.value()},
              {"retries", retries},   {"results", std::move(results)}};
}

inline Json to_json(const LinearSystemSpec& s) {
  return Json{{"degree", s.degree}, {"multiplicities", s.multiplicities}};
}

inline Json to_json(const DimensionResult& r) {
  Json trace = Json::array();
  for (const auto& step : r.trace) trace.push_back(Json{{"rule", step.rule}, {"system", to_json(step.result)}});
  return Json{{"dimension", tagged(r.value, r.provenance)}, {"trace", trace}};
}

inline Json to_json(const Failure& f, Provenance p) {
  return Json{{"degree", f.degree}, {"deficiency", f.deficiency}, {"provenance", std::string(to_string(p))}};
}

inline std::string failure_kind(const RankVerdict& v) {
  if (v.dim_source < v.dim_target) return "injectivity";
  if (v.dim_source > v.dim_target) return "surjectivity";
  return "isomorphism";
}

inline Json to_json(const LefschetzReport& rep) {
  const auto prov = std::string(to_string(rep.provenance));
  Json verdicts = Json::array();
  for (const auto& v : rep.verdicts) {
    verdicts.push_back(Json{{"degree", v.degree},
                            {"dim_source", v.dim_source},
                            {"dim_target", v.dim_target},
                            {"rank", v.rank},
                            {"deficiency", v.deficiency()},
                            {"provenance", prov}});
  }
  Json failures = Json::array();
  for (const auto& f : rep.failures) {
    auto it = std::find_if(rep.verdicts.begin(), rep.verdicts.end(),
                           [&](const RankVerdict& v) { return v.degree == f.degree; });
    auto j = to_json(f, rep.provenance);
    j["kind"] = failure_kind(*it);
    failures.push_back(j);
  }
  Json prediction = nullptr;
  if (rep.prediction) {
    prediction = Json::array();
    for (const auto& f : *rep.prediction) prediction.push_back(to_json(f, Provenance::ClosedForm));
  }
  Json out{{"power", rep.power},
           {"mode", rep.mode == ScanMode::Full ? "full" : "two-degree"},
           {"hilbert_function", tagged(rep.hilbert.values, rep.provenance)},
           {"critical_degrees", Json{{"a", rep.critical.a}, {"b", rep.critical.b}, {"provenance", prov}}},
           {"verdicts", verdicts},
           {"failures", failures},
           {"prediction", prediction},
           {"agreement", rep.agreement ? Json(*rep.agreement) : Json(nullptr)},
           {"monotone_surjectivity", rep.monotone_surjectivity}};
  if (rep.two_degree_certificate) out["two_degree_certificate"] = *rep.two_degree_certificate;
  return out;
}

}  // namespace lefschetz
