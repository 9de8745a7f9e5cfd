#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "pursuit/error.hpp"
#include "pursuit/spaces.hpp"

namespace pursuit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kOffsetSlack = 1e-12;

bool same_length(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

MetricGraphSpace::MetricGraphSpace(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw ConfigError("metric graph needs at least one vertex");
  if (edges_.empty()) throw ConfigError("metric graph needs at least one edge");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.u >= vertex_count_ || ed.v < 0 || ed.v >= vertex_count_) {
      throw ConfigError("edge " + std::to_string(e) + " has an endpoint outside the vertex set");
    }
    if (!(ed.length > 0.0) || !std::isfinite(ed.length)) {
      throw ConfigError("edge " + std::to_string(e) + " must have positive finite length");
    }
  }

  const int n = vertex_count_;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge id)
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    adj[edges_[e].u].push_back({edges_[e].v, e});
    if (edges_[e].v != edges_[e].u) adj[edges_[e].v].push_back({edges_[e].u, e});
  }

  apsp_.assign(static_cast<std::size_t>(n) * n, kInf);
  pred_edge_.assign(static_cast<std::size_t>(n) * n, -1);
  using Item = std::pair<double, int>;
  for (int src = 0; src < n; ++src) {
    double* dist = &apsp_[static_cast<std::size_t>(src) * n];
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[src] = 0.0;
    pq.push({0.0, src});
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d > dist[x]) continue;
      for (auto [y, e] : adj[x]) {
        const double nd = d + edges_[e].length;
        if (nd < dist[y]) {
          dist[y] = nd;
          pq.push({nd, y});
        }
      }
    }
    for (int w = 0; w < n; ++w) {
      if (dist[w] == kInf) throw ConfigError("metric graph is not connected");
    }
    // Predecessor = lowest edge id among the edges that realise dist[w].
    for (int w = 0; w < n; ++w) {
      if (w == src) continue;
      int best = -1;
      for (auto [x, e] : adj[w]) {
        if (x == w) continue;
        if (same_length(dist[x] + edges_[e].length, dist[w]) && dist[x] < dist[w]) {
          if (best < 0 || e < best) best = e;
        }
      }
      pred_edge_[static_cast<std::size_t>(src) * n + w] = best;
    }
  }
  // Path sums from either end can round differently; keep the matrix symmetric.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double d = std::min(apsp_[a * n + b], apsp_[b * n + a]);
      apsp_[a * n + b] = apsp_[b * n + a] = d;
    }
  }
}

std::shared_ptr<MetricGraphSpace> MetricGraphSpace::cycle(double total_length, int pieces) {
  if (pieces < 2) throw ConfigError("a cycle needs at least two edges");
  std::vector<Edge> edges;
  for (int i = 0; i < pieces; ++i) {
    edges.push_back({i, (i + 1) % pieces, total_length / pieces});
  }
  return std::make_shared<MetricGraphSpace>(pieces, std::move(edges));
}

std::shared_ptr<MetricGraphSpace> MetricGraphSpace::interval(double length) {
  return std::make_shared<MetricGraphSpace>(2, std::vector<Edge>{{0, 1, length}});
}

std::shared_ptr<MetricGraphSpace> MetricGraphSpace::star(int arms, double arm_length) {
  std::vector<Edge> edges;
  for (int i = 0; i < arms; ++i) edges.push_back({0, i + 1, arm_length});
  return std::make_shared<MetricGraphSpace>(arms + 1, std::move(edges));
}

void MetricGraphSpace::check_point(const Point& p) const {
  if (p.edge < 0 || p.edge >= static_cast<int>(edges_.size())) {
    throw MalformedPoint("metric graph point has invalid edge id " + std::to_string(p.edge));
  }
  if (p.x.size() != 1) throw MalformedPoint("metric graph point needs exactly one offset");
  const double len = edges_[p.edge].length;
  if (!(p.x[0] >= -kOffsetSlack && p.x[0] <= len + kOffsetSlack)) {
    throw MalformedPoint("offset " + std::to_string(p.x[0]) + " outside edge " +
                         std::to_string(p.edge) + " of length " + std::to_string(len));
  }
}

void MetricGraphSpace::validate(const Point& p) const { check_point(p); }

double MetricGraphSpace::distance(const Point& p, const Point& q) const {
  check_point(p);
  check_point(q);
  const Edge& ep = edges_[p.edge];
  const Edge& eq = edges_[q.edge];
  const double a = p.x[0];
  const double b = q.x[0];
  double best = kInf;
  if (p.edge == q.edge) best = std::abs(a - b);
  const int pe[2] = {ep.u, ep.v};
  const double pd[2] = {a, ep.length - a};
  const int qe[2] = {eq.u, eq.v};
  const double qd[2] = {b, eq.length - b};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      best = std::min(best, (pd[i] + qd[j]) + vertex_distance(pe[i], qe[j]));
    }
  }
  return std::max(0.0, best);
}

std::vector<int> MetricGraphSpace::vertex_path_edges(int a, int b) const {
  std::vector<int> path;
  int w = b;
  while (w != a) {
    const int e = pred_edge_[static_cast<std::size_t>(a) * vertex_count_ + w];
    path.push_back(e);
    w = (edges_[e].u == w) ? edges_[e].v : edges_[e].u;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

MetricGraphSpace::Route MetricGraphSpace::best_route(const Point& from, const Point& to) const {
  const Edge& ef = edges_[from.edge];
  const Edge& et = edges_[to.edge];
  const double a = from.x[0];
  const double b = to.x[0];

  std::vector<Route> candidates;
  if (from.edge == to.edge) {
    candidates.push_back({std::abs(a - b), {from.edge}, -1, -1});
  }
  const int fv[2] = {ef.u, ef.v};
  const double fd[2] = {a, ef.length - a};
  const int tv[2] = {et.u, et.v};
  const double td[2] = {b, et.length - b};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Route r;
      r.length = (fd[i] + td[j]) + vertex_distance(fv[i], tv[j]);
      r.from_end = i;
      r.to_end = j;
      if (fd[i] > 0.0) r.edge_seq.push_back(from.edge);
      for (int e : vertex_path_edges(fv[i], tv[j])) r.edge_seq.push_back(e);
      if (td[j] > 0.0) r.edge_seq.push_back(to.edge);
      candidates.push_back(std::move(r));
    }
  }
  double shortest = kInf;
  for (const Route& r : candidates) shortest = std::min(shortest, r.length);
  const Route* pick = nullptr;
  for (const Route& r : candidates) {
    if (!same_length(r.length, shortest)) continue;
    if (pick == nullptr || r.edge_seq < pick->edge_seq) pick = &r;
  }
  return *pick;
}

Point MetricGraphSpace::walk(const Point& from, const Point& to, const Route& route,
                             double t) const {
  const Edge& ef = edges_[from.edge];
  const double a = from.x[0];
  if (route.from_end < 0) {
    const double off = (to.x[0] >= a) ? a + t : a - t;
    return Point{from.edge, {off}};
  }
  const double leg1 = route.from_end == 0 ? a : ef.length - a;
  if (t <= leg1) {
    return Point{from.edge, {route.from_end == 0 ? a - t : a + t}};
  }
  double rem = t - leg1;
  int at = route.from_end == 0 ? ef.u : ef.v;
  const Edge& et = edges_[to.edge];
  const int entry = route.to_end == 0 ? et.u : et.v;
  for (int e : vertex_path_edges(at, entry)) {
    const Edge& ed = edges_[e];
    if (rem <= ed.length) {
      return Point{e, {ed.u == at ? rem : ed.length - rem}};
    }
    rem -= ed.length;
    at = (ed.u == at) ? ed.v : ed.u;
  }
  return Point{to.edge, {route.to_end == 0 ? rem : et.length - rem}};
}

Point MetricGraphSpace::step_toward(const Point& from, const Point& to, double t) const {
  check_point(from);
  check_point(to);
  if (t <= 0.0) return from;
  const double d = distance(from, to);
  if (t >= d) return to;
  return walk(from, to, best_route(from, to), t);
}

NetSample MetricGraphSpace::net_sample(double h, std::size_t budget) const {
  if (!(h > 0.0)) throw ConfigError("net spacing h must be positive");
  std::vector<int> pieces(edges_.size());
  std::size_t count = static_cast<std::size_t>(vertex_count_);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const double ratio = edges_[e].length / h;
    if (ratio > static_cast<double>(budget)) {
      throw CapacityError("metric graph net exceeds point budget", budget + 1, budget);
    }
    pieces[e] = std::max(1, static_cast<int>(std::ceil(ratio - 1e-9)));
    count += static_cast<std::size_t>(pieces[e] - 1);
  }
  if (count > budget) throw CapacityError("metric graph net exceeds point budget", count, budget);

  NetSample out;
  out.points.reserve(count);
  for (int v = 0; v < vertex_count_; ++v) out.points.push_back(vertex_point(v));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const double len = edges_[e].length;
    const int m = pieces[e];
    for (int j = 1; j < m; ++j) {
      out.points.push_back(Point{static_cast<int>(e), {len * j / m}});
    }
    out.covering_radius = std::max(out.covering_radius, 0.5 * len / m);
  }
  return out;
}

Point MetricGraphSpace::sample(std::mt19937_64& rng) const {
  double total = 0.0;
  for (const Edge& e : edges_) total += e.length;
  std::uniform_real_distribution<double> u(0.0, total);
  double s = u(rng);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (s <= edges_[e].length || e + 1 == edges_.size()) {
      return Point{static_cast<int>(e), {std::min(s, edges_[e].length)}};
    }
    s -= edges_[e].length;
  }
  return Point{0, {0.0}};
}

Point MetricGraphSpace::vertex_point(int v) const {
  if (v < 0 || v >= vertex_count_) throw IndexError("vertex " + std::to_string(v) + " out of range");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].u == v) return Point{static_cast<int>(e), {0.0}};
    if (edges_[e].v == v) return Point{static_cast<int>(e), {edges_[e].length}};
  }
  throw MalformedPoint("vertex " + std::to_string(v) + " has no incident edge");
}

Point MetricGraphSpace::at_arc(double s) const {
  double total = 0.0;
  for (const Edge& e : edges_) total += e.length;
  s = std::fmod(s, total);
  if (s < 0) s += total;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (s < edges_[e].length || e + 1 == edges_.size()) {
      return Point{static_cast<int>(e), {std::min(s, edges_[e].length)}};
    }
    s -= edges_[e].length;
  }
  return Point{0, {0.0}};
}

}  // namespace pursuit
