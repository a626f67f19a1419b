#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "comaximal/explicit_graph.hpp"
#include "comaximal/support_model.hpp"

namespace comaximal {

enum class ExportFormat { dot, csv, json };
enum class ExportLevel { quotient, explicit_graph };

// Node order is canonical layer order; edges are listed by (i, j), i < j, in
// that order.

inline std::string quotient_dot(const QuotientModel& model) {
  std::ostringstream out;
  const auto& layers = model.layers();
  out << "graph G2_" << model.modulus().n() << " {\n";
  for (const auto& l : layers)
    out << "  " << l.support.to_identifier() << " [label=\"X_" << l.support.to_string() << " ("
        << l.size << ")\"];\n";
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (std::size_t j = i + 1; j < layers.size(); ++j)
      if (layers_adjacent(layers[i].support, layers[j].support))
        out << "  " << layers[i].support.to_identifier() << " -- "
            << layers[j].support.to_identifier() << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string quotient_csv(const QuotientModel& model) {
  std::ostringstream out;
  const auto& layers = model.layers();
  out << "source,target\n";
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (std::size_t j = i + 1; j < layers.size(); ++j)
      if (layers_adjacent(layers[i].support, layers[j].support))
        out << layers[i].support.to_plus_string() << "," << layers[j].support.to_plus_string()
            << "\n";
  return out.str();
}

inline std::string quotient_json(const QuotientModel& model) {
  nlohmann::ordered_json j;
  j["n"] = model.modulus().n();
  j["level"] = "quotient";
  auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  const auto& layers = model.layers();
  for (const auto& l : layers)
    nodes.push_back({{"id", l.support.to_identifier()},
                     {"support", l.support.members()},
                     {"divisor", l.divisor},
                     {"size", l.size},
                     {"degree", l.degree}});
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (std::size_t j2 = i + 1; j2 < layers.size(); ++j2)
      if (layers_adjacent(layers[i].support, layers[j2].support))
        edges.push_back({layers[i].support.to_identifier(), layers[j2].support.to_identifier()});
  return j.dump(2) + "\n";
}

inline std::string explicit_dot(const ExplicitGraph& graph) {
  std::ostringstream out;
  const auto& vs = graph.vertices();
  out << "graph G2_" << graph.modulus().n() << " {\n";
  for (const auto& v : vs) out << "  v" << v.residue << " [label=\"" << v.residue << "\"];\n";
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::uint32_t j : graph.adjacency()[i])
      if (j > i) out << "  v" << vs[i].residue << " -- v" << vs[j].residue << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string explicit_csv(const ExplicitGraph& graph) {
  std::ostringstream out;
  const auto& vs = graph.vertices();
  out << "source,target\n";
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::uint32_t j : graph.adjacency()[i])
      if (j > i) out << vs[i].residue << "," << vs[j].residue << "\n";
  return out.str();
}

inline std::string explicit_json(const ExplicitGraph& graph) {
  nlohmann::ordered_json j;
  j["n"] = graph.modulus().n();
  j["level"] = "explicit";
  auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  const auto& vs = graph.vertices();
  for (const auto& v : vs)
    nodes.push_back({{"id", "v" + std::to_string(v.residue)},
                     {"residue", v.residue},
                     {"zero_set", v.zero_set.members()}});
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::uint32_t k : graph.adjacency()[i])
      if (k > i) edges.push_back({vs[i].residue, vs[k].residue});
  return j.dump(2) + "\n";
}

inline std::string export_quotient(const QuotientModel& model, ExportFormat format) {
  switch (format) {
    case ExportFormat::dot: return quotient_dot(model);
    case ExportFormat::csv: return quotient_csv(model);
    case ExportFormat::json: return quotient_json(model);
  }
  return {};
}

inline std::string export_explicit(const ExplicitGraph& graph, ExportFormat format) {
  switch (format) {
    case ExportFormat::dot: return explicit_dot(graph);
    case ExportFormat::csv: return explicit_csv(graph);
    case ExportFormat::json: return explicit_json(graph);
  }
  return {};
}

}  // namespace comaximal
