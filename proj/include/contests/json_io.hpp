#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "contests/bimatrix.hpp"
#include "contests/contest_spec.hpp"
#include "contests/identity_check.hpp"
#include "contests/oracle.hpp"
#include "contests/solver.hpp"

namespace contests {

using Json = nlohmann::json;

/// Anything wrong with a config file: unreadable, bad JSON, bad field. The
/// message carries the file/field context so the CLI can print it verbatim.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_keys(const Json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) throw ConfigError(where + ": unknown field \"" + key + "\"");
  }
}

inline double parse_fraction(const std::string& text, const std::string& where) {
  const auto bad = [&]() {
    return ConfigError(where + ": string values must be exact fractions like \"5/9\", got \"" +
                       text + "\"");
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size()) throw bad();
  std::int64_t num = 0;
  std::int64_t den = 0;
  const char* first = text.data();
  const char* mid = text.data() + slash;
  const char* last = text.data() + text.size();
  auto r1 = std::from_chars(first, mid, num);
  auto r2 = std::from_chars(mid + 1, last, den);
  if (r1.ec != std::errc{} || r1.ptr != mid || r2.ec != std::errc{} || r2.ptr != last) {
    throw bad();
  }
  if (den <= 0) throw ConfigError(where + ": fraction denominator must be positive");
  return static_cast<double>(num) / static_cast<double>(den);
}

/// Numbers may be JSON numbers or exact-fraction strings.
inline double parse_number(const Json& node, const std::string& where) {
  if (node.is_number()) {
    const double x = node.get<double>();
    if (!std::isfinite(x)) throw ConfigError(where + ": value must be finite");
    return x;
  }
  if (node.is_string()) return parse_fraction(node.get<std::string>(), where);
  throw ConfigError(where + ": expected a number or an exact-fraction string");
}

inline double parse_positive(const Json& node, const std::string& where) {
  const double x = parse_number(node, where);
  if (x <= 0.0) throw ConfigError(where + ": value must be positive");
  return x;
}

}  // namespace detail

struct ParsedConfig {
  ContestSpec spec;
  RunConfig run;
};

inline ParsedConfig parse_config_json(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");
  detail::check_keys(doc,
                     {"valuations", "impact", "choice_set", "efforts_1", "efforts_2",
                      "tolerances", "grid_step", "eps"},
                     "config");

  if (!doc.contains("valuations")) throw ConfigError("config: missing \"valuations\"");
  const Json& vals = doc["valuations"];
  if (!vals.is_array() || vals.empty() || vals.size() > 2) {
    throw ConfigError("valuations: expected an array of one or two numbers");
  }
  const double v1_raw = detail::parse_number(vals[0], "valuations[0]");
  const double v2_raw =
      vals.size() == 2 ? detail::parse_number(vals[1], "valuations[1]") : v1_raw;

  double exponent = 1.0;
  double scale = 1.0;
  if (doc.contains("impact")) {
    const Json& imp = doc["impact"];
    if (!imp.is_object()) throw ConfigError("impact: expected an object");
    detail::check_keys(imp, {"family", "r", "a"}, "impact");
    if (imp.contains("family")) {
      if (!imp["family"].is_string() || imp["family"].get<std::string>() != "scaled_power") {
        throw ConfigError("impact.family: only \"scaled_power\" is supported");
      }
    }
    if (imp.contains("r")) exponent = detail::parse_number(imp["r"], "impact.r");
    if (imp.contains("a")) scale = detail::parse_number(imp["a"], "impact.a");
  }

  std::optional<ChoiceSet> set;
  if (doc.contains("choice_set")) {
    const Json& cs = doc["choice_set"];
    if (!cs.is_array() || cs.empty()) {
      throw ConfigError("choice_set: expected a nonempty array of points and [lo, hi] pairs");
    }
    std::vector<Segment> segments;
    segments.reserve(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const std::string where = "choice_set[" + std::to_string(k) + "]";
      const Json& entry = cs[k];
      if (entry.is_array()) {
        if (entry.size() != 2) throw ConfigError(where + ": a segment is a [lo, hi] pair");
        const double lo = detail::parse_number(entry[0], where + "[0]");
        const double hi = detail::parse_number(entry[1], where + "[1]");
        segments.push_back({lo, hi});
      } else {
        const double x = detail::parse_number(entry, where);
        segments.push_back({x, x});
      }
    }
    try {
      set.emplace(std::move(segments));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("choice_set: ") + e.what());
    }
  }

  std::optional<std::vector<double>> eff1;
  std::optional<std::vector<double>> eff2;
  for (const char* name : {"efforts_1", "efforts_2"}) {
    if (!doc.contains(name)) continue;
    const Json& list = doc[name];
    if (!list.is_array() || list.empty()) {
      throw ConfigError(std::string(name) + ": expected a nonempty array");
    }
    std::vector<double> efforts;
    efforts.reserve(list.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
      efforts.push_back(
          detail::parse_number(list[k], std::string(name) + "[" + std::to_string(k) + "]"));
    }
    (std::string(name) == "efforts_1" ? eff1 : eff2) = std::move(efforts);
  }

  RunConfig run;
  if (doc.contains("tolerances")) {
    const Json& tol = doc["tolerances"];
    if (!tol.is_object()) throw ConfigError("tolerances: expected an object");
    detail::check_keys(tol, {"root", "knife_edge", "tie"}, "tolerances");
    if (tol.contains("root")) run.tolerances.root = detail::parse_positive(tol["root"], "tolerances.root");
    if (tol.contains("knife_edge")) {
      run.tolerances.knife_edge = detail::parse_positive(tol["knife_edge"], "tolerances.knife_edge");
    }
    if (tol.contains("tie")) run.tolerances.tie = detail::parse_positive(tol["tie"], "tolerances.tie");
  }
  if (doc.contains("grid_step")) run.grid_step = detail::parse_positive(doc["grid_step"], "grid_step");
  if (doc.contains("eps")) run.eps = detail::parse_positive(doc["eps"], "eps");

  try {
    ContestSpec spec(Valuation(v1_raw), Valuation(v2_raw),
                     ImpactFunction::scaled_power(exponent, scale), std::move(set),
                     std::move(eff1), std::move(eff2));
    return ParsedConfig{std::move(spec), run};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

inline ParsedConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError(path + ":" + std::to_string(line) + ":" + std::to_string(column) +
                      ": " + e.what());
  }
  return parse_config_json(doc);
}

inline Json effort_pairs_to_json(const std::vector<EffortPair>& pairs) {
  Json arr = Json::array();
  for (const EffortPair& p : pairs) arr.push_back(Json::array({p.e1, p.e2}));
  return arr;
}

inline Json report_to_json(const EquilibriumReport& r) {
  Json j;
  j["e_star"] = r.e_star;
  j["bracket"] = Json{{"e_low", r.bracket.lower},
                      {"e_high", r.bracket.upper},
                      {"interior", r.bracket.interior()}};
  j["threshold"] = r.threshold.has_value() ? Json(*r.threshold) : Json(nullptr);
  j["case"] = to_string(r.eq_case);
  j["equilibria"] = effort_pairs_to_json(r.equilibria);
  j["dominant_strategy_2x2"] =
      r.dominant_2x2.has_value() ? Json(r.dominant_2x2->effort) : Json(nullptr);
  j["rent_dissipation"] = r.rent_dissipation;
  j["diagnostics"] = r.diagnostics;
  return j;
}

inline Json nash_result_to_json(const Bimatrix& bm, const NashResult& res) {
  Json j;
  j["efforts_1"] = bm.efforts_1;
  j["efforts_2"] = bm.efforts_2;
  j["payoff_1"] = bm.payoff_1;
  j["payoff_2"] = bm.payoff_2;

  Json pure = Json::array();
  for (const Cell& c : res.pure_equilibria) {
    pure.push_back(Json::array({bm.efforts_1[c.row], bm.efforts_2[c.col]}));
  }
  j["pure_equilibria"] = pure;
  j["exists_pure"] = res.exists_pure;

  Json dom = Json::array();
  for (const DominanceRelation& rel : res.dominance_relations) {
    const auto& efforts = rel.player == 1 ? bm.efforts_1 : bm.efforts_2;
    dom.push_back(Json{{"player", rel.player},
                       {"dominating", efforts[rel.dominating]},
                       {"dominated", efforts[rel.dominated]},
                       {"strict", rel.strict}});
  }
  j["dominance"] = dom;

  Json mixed = Json::array();
  for (const MixedEquilibrium& eq : res.mixed.equilibria) {
    Json s1 = Json::array();
    Json s2 = Json::array();
    for (std::size_t idx : eq.support_1) s1.push_back(bm.efforts_1[idx]);
    for (std::size_t idx : eq.support_2) s2.push_back(bm.efforts_2[idx]);
    mixed.push_back(Json{{"support_1", s1},
                         {"probs_1", eq.probs_1},
                         {"support_2", s2},
                         {"probs_2", eq.probs_2}});
  }
  j["mixed_2support"] = mixed;
  j["mixed_continuum"] = res.mixed.continuum;

  if (res.br_path.has_value() && res.br_path->outcome == PathOutcome::Cycle) {
    Json cycle = Json::array();
    for (const Cell& c : res.br_path->cycle()) {
      cycle.push_back(Json::array({bm.efforts_1[c.row], bm.efforts_2[c.col]}));
    }
    j["br_cycle"] = cycle;
  } else {
    j["br_cycle"] = nullptr;
  }
  return j;
}

inline Json verdict_to_json(const OracleVerdict& v) {
  Json j;
  j["confirmed"] = v.confirmed;
  j["predicted_missing"] = effort_pairs_to_json(v.predicted_missing);
  j["extra_found"] = effort_pairs_to_json(v.extra_found);
  j["parameters"] = Json{{"h", v.h}, {"eps", v.eps}, {"delta", v.delta}};
  return j;
}

inline Json sweep_to_json(const std::vector<ThresholdSweepRow>& rows) {
  Json arr = Json::array();
  for (const ThresholdSweepRow& row : rows) {
    arr.push_back(Json{{"e_high", row.e_high},
                       {"e_hat", row.e_hat.has_value() ? Json(*row.e_hat) : Json(nullptr)},
                       {"case", to_string(row.eq_case)}});
  }
  return Json{{"rows", arr}};
}

inline Json identity_to_json(const IdentityCheckResult& r) {
  return Json{{"max_residual", r.max_residual},
              {"tolerance", r.tolerance},
              {"pass", r.pass},
              {"samples", r.samples},
              {"seed", r.seed}};
}

}  // namespace contests
