// Copyright 2026 The Delivery Mechanisms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "delivery/io.hpp"

#include <fstream>
#include <sstream>

namespace delivery::io {
namespace {

std::string node_key(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("node identifier must be a string or an integer, got " + j.dump());
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("expected a rational string such as \"3/4\", got " + j.dump());
}

Json rational_to_json(const Rational& r) { return r.str(); }

Instance instance_from_json(const Json& j) {
  try {
    const Json& g = require(j, "graph");
    std::vector<std::string> names;
    for (const Json& n : require(g, "nodes")) names.push_back(node_key(n));
    std::unordered_map<std::string, NodeIndex> index;
    for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<NodeIndex>(i));
    auto lookup = [&](const Json& n) {
      auto it = index.find(node_key(n));
      if (it == index.end()) throw InputError("unknown node '" + node_key(n) + "'");
      return it->second;
    };
    std::vector<Edge> edges;
    for (const Json& e : require(g, "edges")) {
      edges.push_back({lookup(require(e, "u")), lookup(require(e, "v")), rational_from_json(require(e, "len"))});
    }
    std::vector<AgentSpec> agents;
    for (const Json& a : require(j, "agents")) {
      agents.push_back({int_field(a, "id"), lookup(require(a, "start")), rational_from_json(require(a, "weight"))});
    }
    std::vector<PackageSpec> packages;
    if (j.contains("packages")) {
      for (const Json& p : j.at("packages")) {
        packages.push_back({int_field(p, "id"), lookup(require(p, "source")), lookup(require(p, "target"))});
      }
    }
    return Instance(Graph(std::move(names), std::move(edges)), std::move(agents), std::move(packages));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed instance: ") + e.what());
  }
}

Json instance_to_json(const Instance& instance) {
  const Graph& g = instance.graph();
  Json nodes = Json::array();
  for (const std::string& n : g.names()) nodes.push_back(n);
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"len", e.length.str()}});
  }
  Json agents = Json::array();
  for (const AgentSpec& a : instance.agents()) {
    agents.push_back({{"id", a.id}, {"start", g.name(a.start)}, {"weight", a.weight.str()}});
  }
  Json packages = Json::array();
  for (const PackageSpec& p : instance.packages()) {
    packages.push_back({{"id", p.id}, {"source", g.name(p.source)}, {"target", g.name(p.target)}});
  }
  return {{"graph", {{"nodes", nodes}, {"edges", edges}}}, {"agents", agents}, {"packages", packages}};
}

Solution solution_from_json(const Json& j, const Instance& instance) {
  Solution s;
  try {
    for (const Json& it : require(j, "itineraries")) {
      const AgentId agent = int_field(it, "agent");
      if (!instance.has_agent(agent)) throw StructuralError("itinerary for unknown agent " + std::to_string(agent));
      Itinerary actions;
      for (const Json& a : require(it, "actions")) {
        if (a.contains("move")) {
          const std::string name = node_key(a.at("move"));
          auto v = instance.graph().find(name);
          if (!v) throw StructuralError("move to unknown node '" + name + "'");
          actions.push_back(Action::move(*v));
        } else if (a.contains("pickup")) {
          actions.push_back(Action::pickup(a.at("pickup").get<int>()));
        } else if (a.contains("drop")) {
          actions.push_back(Action::drop(a.at("drop").get<int>()));
        } else {
          throw InputError("unknown action " + a.dump());
        }
      }
      if (!s.itineraries.emplace(agent, std::move(actions)).second) {
        throw InputError("duplicate itinerary for agent " + std::to_string(agent));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed solution: ") + e.what());
  }
  return s;
}

Json solution_to_json(const Solution& solution, const Instance& instance) {
  Json its = Json::array();
  for (const auto& [agent, actions] : solution.itineraries) {
    if (actions.empty()) continue;
    Json acts = Json::array();
    for (const Action& a : actions) {
      switch (a.kind) {
        case Action::Kind::kMove: acts.push_back({{"move", instance.graph().name(a.node)}}); break;
        case Action::Kind::kPickup: acts.push_back({{"pickup", a.package}}); break;
        case Action::Kind::kDrop: acts.push_back({{"drop", a.package}}); break;
      }
    }
    its.push_back({{"agent", agent}, {"actions", acts}});
  }
  return {{"itineraries", its}};
}

WeightVector weights_from_json(const Json& j) {
  const Json& body = (j.is_object() && j.contains("weights")) ? j.at("weights") : j;
  if (!body.is_object()) throw InputError("weights must be an object keyed by agent id");
  WeightVector w;
  for (const auto& [key, value] : body.items()) {
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError("agent id '" + key + "' is not an integer");
    }
    Rational r = rational_from_json(value);
    if (r.sign() < 0) throw InputError("negative weight for agent " + key);
    w[id] = std::move(r);
  }
  return w;
}

Json weights_to_json(const WeightVector& w) {
  Json out = Json::object();
  for (const auto& [id, r] : w) out[std::to_string(id)] = r.str();
  return {{"weights", out}};
}

Json cost_to_json(const CostBreakdown& cost, int decimal_digits) {
  Json per = Json::object();
  for (const auto& [id, r] : cost.per_agent) per[std::to_string(id)] = r.str();
  Json out = {{"per_agent", per}, {"total", cost.total.str()}};
  if (decimal_digits >= 0) out["total_decimal"] = cost.total.decimal(decimal_digits);
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

Instance load_instance(const std::filesystem::path& path) { return instance_from_json(read_json_file(path)); }

void save_instance(const std::filesystem::path& path, const Instance& instance) {
  write_json_file(path, instance_to_json(instance));
}

}  // namespace delivery::io
