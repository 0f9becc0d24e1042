#include "lapctl/io.hpp"

#include <fstream>
#include <sstream>

namespace lapctl::io {

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
      throw InvalidArgument("graph JSON needs \"n\" and \"edges\"");
    const auto n = j.at("n").get<long long>();
    if (n < 1) throw InvalidArgument("graph JSON: n must be positive");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw InvalidArgument("graph JSON: each edge is a pair [u, v]");
      const auto u = e[0].get<long long>(), v = e[1].get<long long>();
      if (u < 1 || v < 1) throw InvalidArgument("graph JSON: vertices are 1-indexed");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("graph JSON: ") + ex.what());
  }
}

Json to_json(const Verdict& v) {
  Json out;
  out["controllable"] = v.controllable;
  out["method"] = std::string(to_string(v.method));
  out["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  out["rank"] = v.rank ? Json(*v.rank) : Json(nullptr);
  return out;
}

Json to_json(const EigDecomp& d) {
  Json modal = Json::array();
  for (std::size_t j = 0; j < d.modal.cols(); ++j) modal.push_back(d.modal.column(j));
  return Json{{"values", d.values}, {"modal", std::move(modal)}};
}

Json to_json(const CompositeSpec& spec) {
  return Json{{"structure", to_json(spec.structure)},
              {"cell", to_json(spec.cell)},
              {"s", spec.s}};
}

CompositeSpec composite_spec_from_json(const Json& j) {
  try {
    CompositeSpec spec{graph_from_json(j.at("structure")), graph_from_json(j.at("cell")),
                       j.at("s").get<Vertex>()};
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("composite spec JSON: ") + ex.what());
  }
}

Json to_json(const ChainSpec& spec) {
  Json links = Json::array();
  for (auto l : spec.links) links.push_back(l == Link::Dominating ? "D" : "T");
  return Json{{"c", spec.c},
              {"k2", spec.k2},
              {"links", std::move(links)},
              {"tail", spec.tail},
              {"tail_attach", spec.attach_vertex()}};
}

ChainSpec chain_spec_from_json(const Json& j) {
  try {
    ChainSpec spec;
    spec.c = j.at("c").get<std::size_t>();
    spec.k2 = j.at("k2").get<std::size_t>();
    for (const auto& l : j.value("links", Json::array())) {
      const auto s = l.get<std::string>();
      if (s == "D")
        spec.links.push_back(Link::Dominating);
      else if (s == "T")
        spec.links.push_back(Link::Terminal);
      else
        throw InvalidArgument("chain link must be \"D\" or \"T\", got \"" + s + "\"");
    }
    spec.tail = j.value("tail", std::size_t{0});
    if (j.contains("tail_attach")) spec.tail_attach = j.at("tail_attach").get<Vertex>();
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("chain spec JSON: ") + ex.what());
  }
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph {";
  const auto deg = g.degrees();
  for (Vertex v = 1; v <= g.order(); ++v)
    if (deg[v - 1] == 0) os << ' ' << v << ';';
  for (const auto& e : g.edges()) os << ' ' << e.u << " -- " << e.v << ';';
  os << " }";
  return os.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(path + ": " + ex.what());
  }
  return graph_from_json(j);
}

}  // namespace lapctl::io
