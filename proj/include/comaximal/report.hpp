#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "comaximal/arithmetic.hpp"
#include "comaximal/support_model.hpp"

namespace comaximal {

using json = nlohmann::ordered_json;

struct LayerRow {
  std::vector<std::size_t> support;
  integer divisor;
  integer size;
  integer degree;

  friend bool operator==(const LayerRow&, const LayerRow&) = default;
};

// Every closed-form invariant of G2(n) in one record.
struct AnalysisReport {
  integer n = 0;
  std::vector<integer> primes;
  integer phi = 0;
  integer vertex_count = 0;
  integer kappa = 0;
  integer lambda = 0;
  integer delta = 0;
  integer prior_bound = 0;
  int diameter = 0;
  std::optional<int> radius;
  std::vector<std::size_t> min_degree_layer;
  std::vector<std::size_t> min_cut_layer;
  std::vector<LayerRow> layers;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline AnalysisReport analyze(const Modulus& mod) {
  const QuotientModel model = build_quotient(mod);
  const MinDegree delta = min_degree(mod);

  AnalysisReport r;
  r.n = mod.n();
  r.primes.assign(mod.primes().begin(), mod.primes().end());
  r.phi = euler_phi(mod);
  r.vertex_count = model.vertex_count();
  r.kappa = kappa(mod);
  r.lambda = lambda_edge(mod);
  r.delta = delta.value;
  r.prior_bound = prior_upper_bound(mod);
  r.diameter = diameter(mod);
  if (mod.m() >= 3) r.radius = radius_and_center(mod).radius;
  r.min_degree_layer = delta.argmin.members();
  r.min_cut_layer = min_cut_support(mod.m()).members();
  for (const auto& l : model.layers())
    r.layers.push_back({l.support.members(), l.divisor, l.size, l.degree});

  if (r.kappa != r.lambda || r.kappa != r.delta || r.vertex_count != r.n - 1 - r.phi)
    throw std::logic_error("inconsistent analysis for n = " + std::to_string(r.n));
  return r;
}

namespace detail {

inline std::string braces(const std::vector<std::size_t>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

}  // namespace detail

inline std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << " = ";
  for (std::size_t i = 0; i < r.primes.size(); ++i) out << (i ? " * " : "") << r.primes[i];
  out << "  (m = " << r.primes.size() << ")\n\n";

  auto row = [&](const char* label, const std::string& value) {
    out << "  " << std::left << std::setw(18) << label << value << "\n";
  };
  row("phi(n)", std::to_string(r.phi));
  row("vertices", std::to_string(r.vertex_count));
  row("kappa", std::to_string(r.kappa));
  row("lambda", std::to_string(r.lambda));
  row("delta", std::to_string(r.delta));
  row("prior bound", std::to_string(r.prior_bound));
  row("diameter", std::to_string(r.diameter));
  row("radius", r.radius ? std::to_string(*r.radius) : std::string("n/a (m = 2)"));
  row("min-degree layer", detail::braces(r.min_degree_layer));
  row("min-cut layer", detail::braces(r.min_cut_layer));

  std::size_t width = 7;
  for (const auto& l : r.layers) width = std::max(width, detail::braces(l.support).size());
  out << "\n  " << std::left << std::setw(static_cast<int>(width) + 2) << "support" << std::right
      << std::setw(12) << "divisor" << std::setw(12) << "size" << std::setw(12) << "degree" << "\n";
  for (const auto& l : r.layers)
    out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << detail::braces(l.support)
        << std::right << std::setw(12) << l.divisor << std::setw(12) << l.size << std::setw(12)
        << l.degree << "\n";
  return out.str();
}

inline void to_json(json& j, const LayerRow& l) {
  j = json{{"support", l.support}, {"divisor", l.divisor}, {"size", l.size}, {"degree", l.degree}};
}

inline void from_json(const json& j, LayerRow& l) {
  j.at("support").get_to(l.support);
  j.at("divisor").get_to(l.divisor);
  j.at("size").get_to(l.size);
  j.at("degree").get_to(l.degree);
}

inline void to_json(json& j, const AnalysisReport& r) {
  j = json{{"n", r.n},
           {"primes", r.primes},
           {"phi", r.phi},
           {"vertex_count", r.vertex_count},
           {"kappa", r.kappa},
           {"lambda", r.lambda},
           {"delta", r.delta},
           {"prior_bound", r.prior_bound},
           {"diameter", r.diameter},
           {"radius", r.radius ? json(*r.radius) : json(nullptr)},
           {"min_degree_layer", r.min_degree_layer},
           {"min_cut_layer", r.min_cut_layer},
           {"layers", r.layers}};
}

inline void from_json(const json& j, AnalysisReport& r) {
  j.at("n").get_to(r.n);
  j.at("primes").get_to(r.primes);
  j.at("phi").get_to(r.phi);
  j.at("vertex_count").get_to(r.vertex_count);
  j.at("kappa").get_to(r.kappa);
  j.at("lambda").get_to(r.lambda);
  j.at("delta").get_to(r.delta);
  j.at("prior_bound").get_to(r.prior_bound);
  j.at("diameter").get_to(r.diameter);
  if (j.at("radius").is_null()) r.radius.reset();
  else r.radius = j.at("radius").get<int>();
  j.at("min_degree_layer").get_to(r.min_degree_layer);
  j.at("min_cut_layer").get_to(r.min_cut_layer);
  j.at("layers").get_to(r.layers);
}

inline std::string render_json(const AnalysisReport& r) { return json(r).dump(2) + "\n"; }

inline AnalysisReport parse_report(const std::string& text) { return json::parse(text).get<AnalysisReport>(); }

}  // namespace comaximal
