#include "pursuit/io.hpp"

#include <cstdio>
#include <cstdlib>

#include "pursuit/error.hpp"

namespace pursuit {

double parse_real(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw ConfigError(path + ": '" + s + "' is not a decimal number");
    return v;
  }
  throw ConfigError(path + ": expected a number or decimal string");
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(path + "." + key + ": missing field");
  return j.at(key);
}

namespace {

int require_int(const json& j, const std::string& key, const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_number_integer()) throw ConfigError(path + "." + key + ": expected an integer");
  return v.get<int>();
}

}  // namespace

SpacePtr space_from_json(const json& j, const std::string& path) {
  const json& type = require(j, "type", path);
  if (!type.is_string()) throw ConfigError(path + ".type: expected a string");
  const std::string t = type.get<std::string>();
  if (t == "metric_graph") {
    const int n = require_int(j, "vertices", path);
    const json& edges = require(j, "edges", path);
    if (!edges.is_array()) throw ConfigError(path + ".edges: expected a list");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string ep = path + ".edges[" + std::to_string(i) + "]";
      out.push_back({require_int(edges[i], "u", ep), require_int(edges[i], "v", ep),
                     parse_real(require(edges[i], "length", ep), ep + ".length")});
    }
    try {
      return std::make_shared<MetricGraphSpace>(n, std::move(out));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ": " + e.what());
    }
  }
  if (t == "ball") {
    const double r = j.contains("radius") ? parse_real(j.at("radius"), path + ".radius") : 1.0;
    return std::make_shared<BallSpace>(require_int(j, "dimension", path), r);
  }
  if (t == "sphere") return std::make_shared<SphereSpace>(require_int(j, "dimension", path));
  if (t == "product") {
    SpacePtr base = space_from_json(require(j, "base", path), path + ".base");
    const double len = j.contains("fiber_length") ? parse_real(j.at("fiber_length"), path + ".fiber_length") : 1.0;
    return std::make_shared<ProductSpace>(std::move(base), len, parse_real(require(j, "p", path), path + ".p"));
  }
  throw ConfigError(path + ".type: unknown space type '" + t + "'");
}

json space_to_json(const Space& space) {
  if (auto* g = dynamic_cast<const MetricGraphSpace*>(&space)) {
    json edges = json::array();
    for (const Edge& e : g->edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"length", format_real(e.length)}});
    return {{"type", "metric_graph"}, {"vertices", g->vertex_count()}, {"edges", edges}};
  }
  if (auto* b = dynamic_cast<const BallSpace*>(&space)) {
    return {{"type", "ball"}, {"dimension", b->dimension()}, {"radius", format_real(b->radius())}};
  }
  if (auto* s = dynamic_cast<const SphereSpace*>(&space)) {
    return {{"type", "sphere"}, {"dimension", s->dimension()}};
  }
  if (auto* p = dynamic_cast<const ProductSpace*>(&space)) {
    return {{"type", "product"},
            {"base", space_to_json(p->base())},
            {"fiber_length", format_real(p->fiber_length())},
            {"p", format_real(p->exponent())}};
  }
  throw ConfigError("space kind '" + space.kind() + "' has no JSON form");
}

Point point_from_json(const Space& space, const json& j, const std::string& path) {
  Point p;
  if (auto* prod = dynamic_cast<const ProductSpace*>(&space)) {
    Point b = point_from_json(prod->base(), require(j, "base", path), path + ".base");
    p = ProductSpace::lift(b, parse_real(require(j, "s", path), path + ".s"));
  } else if (dynamic_cast<const MetricGraphSpace*>(&space)) {
    const json& e = require(j, "edge", path);
    if (!e.is_number_integer()) throw ConfigError(path + ".edge: expected an integer");
    p = Point{e.get<int>(), {parse_real(require(j, "offset", path), path + ".offset")}};
  } else {
    if (!j.is_array()) throw ConfigError(path + ": expected a coordinate list");
    for (std::size_t i = 0; i < j.size(); ++i) p.x.push_back(parse_real(j[i], path + "[" + std::to_string(i) + "]"));
  }
  space.validate(p);
  return p;
}

json point_to_json(const Space& space, const Point& p) {
  if (auto* prod = dynamic_cast<const ProductSpace*>(&space)) {
    return {{"base", point_to_json(prod->base(), ProductSpace::base_part(p))}, {"s", ProductSpace::fiber_part(p)}};
  }
  if (dynamic_cast<const MetricGraphSpace*>(&space)) return {{"edge", p.edge}, {"offset", p.x.at(0)}};
  return p.x;
}

}  // namespace pursuit
