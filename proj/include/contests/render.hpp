#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

namespace contests {

namespace detail {

inline std::string fmt(const nlohmann::json& node) {
  if (node.is_null()) return "none";
  if (node.is_number()) {
    std::ostringstream out;
    out << std::setprecision(12) << node.get<double>();
    return out.str();
  }
  if (node.is_boolean()) return node.get<bool>() ? "yes" : "no";
  if (node.is_string()) return node.get<std::string>();
  return node.dump();
}

inline std::string fmt_pair(const nlohmann::json& pair) {
  return "(" + fmt(pair[0]) + ", " + fmt(pair[1]) + ")";
}

}  // namespace detail

/// Human-readable view of a solve report. Every value is read back from the
/// JSON form so the two output formats can never drift apart.
inline std::string render_report(const nlohmann::json& j) {
  using detail::fmt;
  using detail::fmt_pair;
  std::ostringstream out;
  out << "unconstrained equilibrium effort: " << fmt(j["e_star"]) << "\n";
  const auto& br = j["bracket"];
  out << "bracket around it: e_low=" << fmt(br["e_low"]) << " e_high=" << fmt(br["e_high"])
      << (br["interior"].get<bool>() ? " (contains it)" : "") << "\n";
  out << "threshold effort: " << fmt(j["threshold"]) << "\n";
  out << "case: " << fmt(j["case"]) << "\n";
  out << "equilibria:";
  if (j["equilibria"].empty()) {
    out << " none\n";
  } else {
    out << "\n";
    for (const auto& pair : j["equilibria"]) out << "  " << fmt_pair(pair) << "\n";
  }
  if (!j["dominant_strategy_2x2"].is_null()) {
    out << "dominant strategy in the two-point game: " << fmt(j["dominant_strategy_2x2"])
        << "\n";
  }
  out << "rent dissipation: " << fmt(j["rent_dissipation"]) << "\n";
  for (const auto& note : j["diagnostics"]) {
    out << "note: " << note.get<std::string>() << "\n";
  }
  return out.str();
}

inline std::string render_matrix(const nlohmann::json& j) {
  using detail::fmt;
  using detail::fmt_pair;
  std::ostringstream out;
  out << "efforts (player 1):";
  for (const auto& e : j["efforts_1"]) out << " " << fmt(e);
  out << "\nefforts (player 2):";
  for (const auto& e : j["efforts_2"]) out << " " << fmt(e);
  out << "\npayoffs (player 1 effort by rows):\n";
  const auto& p1 = j["payoff_1"];
  const auto& p2 = j["payoff_2"];
  for (std::size_t i = 0; i < p1.size(); ++i) {
    out << " ";
    for (std::size_t k = 0; k < p1[i].size(); ++k) {
      out << " (" << fmt(p1[i][k]) << ", " << fmt(p2[i][k]) << ")";
    }
    out << "\n";
  }
  out << "pure equilibria:";
  if (j["pure_equilibria"].empty()) {
    out << " none\n";
  } else {
    out << "\n";
    for (const auto& pair : j["pure_equilibria"]) out << "  " << fmt_pair(pair) << "\n";
  }
  for (const auto& rel : j["dominance"]) {
    out << "player " << rel["player"].get<int>() << ": " << fmt(rel["dominating"])
        << (rel["strict"].get<bool>() ? " strictly dominates " : " weakly dominates ")
        << fmt(rel["dominated"]) << "\n";
  }
  for (const auto& eq : j["mixed_2support"]) {
    out << "mixed equilibrium: player 1 plays";
    for (std::size_t k = 0; k < eq["support_1"].size(); ++k) {
      out << " " << fmt(eq["support_1"][k]) << " w.p. " << fmt(eq["probs_1"][k]);
    }
    out << "; player 2 plays";
    for (std::size_t k = 0; k < eq["support_2"].size(); ++k) {
      out << " " << fmt(eq["support_2"][k]) << " w.p. " << fmt(eq["probs_2"][k]);
    }
    out << "\n";
  }
  if (j["mixed_continuum"].get<bool>()) {
    out << "a continuum of mixed equilibria exists; one representative listed\n";
  }
  if (!j["br_cycle"].is_null()) {
    out << "best-response cycle:";
    for (const auto& pair : j["br_cycle"]) out << " " << fmt_pair(pair);
    out << "\n";
  }
  return out.str();
}

inline std::string render_verdict(const nlohmann::json& j) {
  using detail::fmt;
  using detail::fmt_pair;
  std::ostringstream out;
  out << (j["confirmed"].get<bool>() ? "confirmed" : "refuted") << " (h="
      << fmt(j["parameters"]["h"]) << ", eps=" << fmt(j["parameters"]["eps"])
      << ", delta=" << fmt(j["parameters"]["delta"]) << ")\n";
  for (const auto& pair : j["predicted_missing"]) {
    out << "predicted but not found on the grid: " << fmt_pair(pair) << "\n";
  }
  for (const auto& pair : j["extra_found"]) {
    out << "found on the grid but not predicted: " << fmt_pair(pair) << "\n";
  }
  return out.str();
}

/// CSV with one row per upper-bracket effort.
inline std::string render_sweep(const nlohmann::json& j) {
  using detail::fmt;
  std::ostringstream out;
  out << "e_high,e_hat,case\n";
  for (const auto& row : j["rows"]) {
    out << fmt(row["e_high"]) << ","
        << (row["e_hat"].is_null() ? std::string("no threshold") : fmt(row["e_hat"])) << ","
        << fmt(row["case"]) << "\n";
  }
  return out.str();
}

inline std::string render_identity(const nlohmann::json& j) {
  using detail::fmt;
  std::ostringstream out;
  out << "payoff identity over " << j["samples"].get<std::uint64_t>()
      << " sampled effort pairs (seed " << j["seed"].get<std::uint64_t>()
      << "): max |residual| = " << fmt(j["max_residual"]) << ", tolerance = "
      << fmt(j["tolerance"]) << ", " << (j["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace contests
