#include "sciomap/netalgo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

#include "sciomap/parallel.hpp"

namespace sciomap::netalgo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

DistanceGraph to_distance(const WeightedGraph& g) {
  return g.reweighted<DistanceWeights>([](double w) {
    if (!(w > 0.0)) throw PreconditionError("similarity weights must be positive");
    return 1.0 / w;
  });
}

WeightedGraph to_similarity(const DistanceGraph& g) {
  return g.reweighted<SimilarityWeights>([](double d) { return 1.0 / d; });
}

// ---------------------------------------------------------------------------
// Pathfinder

DistanceGraph pathfinder(const DistanceGraph& g, const PathfinderParams& params, unsigned jobs) {
  if (!(params.r >= 1.0)) throw PreconditionError("Minkowski r must be >= 1");
  const auto view = AdjacencyView::of(g);
  const std::size_t n = view.size();
  if (n < 3) return g;
  const std::size_t q = (params.q == 0 || params.q >= n - 1) ? n - 1 : params.q;
  if (q == 1) return g;

  // Finite r works on d^r so path costs are plain sums; r = inf uses max.
  const bool minimax = std::isinf(params.r);
  auto lift = [&](double d) { return minimax || params.r == 1.0 ? d : std::pow(d, params.r); };
  auto combine = [minimax](double a, double b) { return minimax ? std::max(a, b) : a + b; };

  std::vector<double> direct(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    direct[i * n + i] = 0.0;
    for (const auto& [j, d] : view.neighbours[i]) direct[i * n + j] = lift(d);
  }

  std::vector<double> best = direct;
  if (q == n - 1) {
    // Shortest walks of any length; cycles never help with positive costs, so
    // these are the cheapest simple paths.
    for (std::size_t k = 0; k < n; ++k) {
      const double* row_k = &best[k * n];
      parallel_for(n, jobs, [&](std::size_t i) {
        if (i == k) return;
        double* row_i = &best[i * n];
        const double ik = row_i[k];
        if (ik == kInf) return;
        for (std::size_t j = 0; j < n; ++j) {
          const double via = combine(ik, row_k[j]);
          if (via < row_i[j]) row_i[j] = via;
        }
      });
    }
  } else {
    // best_t holds the cheapest walks of at most t edges.
    std::vector<double> next(n * n);
    for (std::size_t t = 1; t < q; ++t) {
      parallel_for(n, jobs, [&](std::size_t i) {
        const double* row_direct = &direct[i * n];
        double* out = &next[i * n];
        std::copy_n(&best[i * n], n, out);
        for (std::size_t k = 0; k < n; ++k) {
          const double ik = row_direct[k];
          if (ik == kInf || k == i) continue;
          const double* row_k = &best[k * n];
          for (std::size_t j = 0; j < n; ++j) {
            const double via = combine(ik, row_k[j]);
            if (via < out[j]) out[j] = via;
          }
        }
      });
      best.swap(next);
    }
  }

  DistanceGraph out;
  for (const auto& [id, info] : g.nodes()) out.add_node(id, info);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, d] : view.neighbours[i]) {
      if (j < i) continue;
      if (!(best[i * n + j] < direct[i * n + j])) out.set_edge(view.ids[i], view.ids[j], d);
    }
  }
  return out;
}

DistanceGraph pathfinder_mst(const DistanceGraph& g) {
  const auto view = AdjacencyView::of(g);
  struct Edge {
    double d;
    std::size_t a, b;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < view.size(); ++i)
    for (const auto& [j, d] : view.neighbours[i])
      if (i < j) edges.push_back({d, i, j});
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.d, x.a, x.b) < std::tie(y.d, y.a, y.b); });

  std::vector<std::size_t> parent(view.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  DistanceGraph out;
  for (const auto& [id, info] : g.nodes()) out.add_node(id, info);
  // An edge lies on some minimum spanning forest iff its endpoints are not
  // yet joined by strictly lighter edges.
  for (std::size_t lo = 0; lo < edges.size();) {
    std::size_t hi = lo;
    while (hi < edges.size() && edges[hi].d == edges[lo].d) ++hi;
    for (std::size_t e = lo; e < hi; ++e)
      if (find(edges[e].a) != find(edges[e].b)) out.set_edge(view.ids[edges[e].a], view.ids[edges[e].b], edges[e].d);
    for (std::size_t e = lo; e < hi; ++e) parent[find(edges[e].a)] = find(edges[e].b);
    lo = hi;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Betweenness

namespace {

/// Adds the dependencies of every target on `source` into `acc`.
void accumulate_source(const AdjacencyView& view, bool weighted, std::size_t source, std::vector<double>& acc) {
  const std::size_t n = view.size();
  std::vector<double> sigma(n, 0.0);
  std::vector<double> dist(n, kInf);
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<std::size_t> order;
  order.reserve(n);

  sigma[source] = 1.0;
  dist[source] = 0.0;
  if (weighted) {
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    std::vector<bool> settled(n, false);
    queue.emplace(0.0, source);
    while (!queue.empty()) {
      const auto [d, v] = queue.top();
      queue.pop();
      if (settled[v] || d > dist[v]) continue;
      settled[v] = true;
      order.push_back(v);
      for (const auto& [w, c] : view.neighbours[v]) {
        const double alt = dist[v] + c;
        if (alt < dist[w]) {
          dist[w] = alt;
          sigma[w] = sigma[v];
          preds[w].assign(1, v);
          queue.emplace(alt, w);
        } else if (alt == dist[w] && !settled[w]) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
  } else {
    std::vector<std::size_t> frontier{source};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const std::size_t v = frontier[head];
      order.push_back(v);
      for (const auto& [w, c] : view.neighbours[v]) {
        if (dist[w] == kInf) {
          dist[w] = dist[v] + 1.0;
          frontier.push_back(w);
        }
        if (dist[w] == dist[v] + 1.0) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
  }

  std::vector<double> delta(n, 0.0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t w = *it;
    for (std::size_t v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
    if (w != source) acc[w] += delta[w];
  }
}

}  // namespace

std::map<NodeId, double> betweenness(const AdjacencyView& view, bool weighted, unsigned jobs) {
  const std::size_t n = view.size();
  // Sources are processed in fixed-size blocks whose partial sums are added
  // in block order, so the floating-point result is independent of `jobs`.
  constexpr std::size_t kBlock = 32;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::vector<double>> partial(blocks, std::vector<double>(n, 0.0));
  parallel_for(blocks, jobs, [&](std::size_t b) {
    for (std::size_t s = b * kBlock; s < std::min(n, (b + 1) * kBlock); ++s)
      accumulate_source(view, weighted, s, partial[b]);
  });

  std::map<NodeId, double> out;
  for (std::size_t v = 0; v < n; ++v) {
    double total = 0.0;
    for (const auto& p : partial) total += p[v];
    out.emplace(view.ids[v], total / 2.0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Communities

double modularity(const WeightedGraph& g, const std::map<NodeId, std::size_t>& assignment, double resolution) {
  for (const auto& [id, info] : g.nodes())
    if (!assignment.contains(id)) throw PreconditionError("node " + id + " has no community");
  double m = 0.0;
  std::map<std::size_t, double> internal;
  std::map<std::size_t, double> total;
  for (const auto& [key, w] : g.edges()) {
    const std::size_t a = assignment.at(key.first());
    const std::size_t b = assignment.at(key.second());
    m += w;
    if (a == b) internal[a] += w;
    total[a] += w;
    total[b] += w;
  }
  if (m == 0.0) return 0.0;
  double q = 0.0;
  for (const auto& [c, tot] : total) {
    const double in = internal.contains(c) ? internal.at(c) : 0.0;
    const double share = tot / (2.0 * m);
    q += in / m - resolution * share * share;
  }
  return q;
}

namespace {

struct LevelGraph {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;  // no self-loops
  std::vector<double> self_loop;
  std::vector<double> strength;  // includes twice the self-loop
};

LevelGraph level_from(const AdjacencyView& view) {
  LevelGraph lg;
  lg.adj = view.neighbours;
  lg.self_loop.assign(view.size(), 0.0);
  lg.strength.assign(view.size(), 0.0);
  for (std::size_t i = 0; i < view.size(); ++i)
    for (const auto& [j, w] : view.neighbours[i]) lg.strength[i] += w;
  return lg;
}

/// One round of local moving. Returns the community of every node, numbered
/// densely in node order, and whether anything moved.
bool local_moving(const LevelGraph& lg, double total_weight2, double resolution, std::mt19937_64& rng,
                  std::vector<std::size_t>& community) {
  const std::size_t n = lg.adj.size();
  community.resize(n);
  std::iota(community.begin(), community.end(), 0);
  std::vector<double> tot = lg.strength;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  std::vector<double> link_to(n, 0.0);
  std::vector<std::size_t> touched;
  bool any_move = false;
  for (int pass = 0; pass < 1000; ++pass) {
    bool moved = false;
    for (std::size_t node : order) {
      const std::size_t own = community[node];
      const double k = lg.strength[node];
      for (const auto& [nb, w] : lg.adj[node]) {
        const std::size_t c = community[nb];
        if (link_to[c] == 0.0) touched.push_back(c);
        link_to[c] += w;
      }
      tot[own] -= k;
      auto gain = [&](std::size_t c) { return link_to[c] - resolution * tot[c] * k / total_weight2; };
      std::size_t best = own;
      double best_gain = gain(own);
      for (std::size_t c : touched) {
        const double g = gain(c);
        if (g > best_gain + 1e-12) {
          best = c;
          best_gain = g;
        }
      }
      tot[best] += k;
      if (best != own) {
        community[node] = best;
        moved = true;
      }
      for (std::size_t c : touched) link_to[c] = 0.0;
      touched.clear();
    }
    if (!moved) break;
    any_move = true;
  }

  std::vector<std::size_t> renumber(n, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto& slot = renumber[community[i]];
    if (slot == static_cast<std::size_t>(-1)) slot = next++;
    community[i] = slot;
  }
  return any_move;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<std::size_t>& community, std::size_t count) {
  LevelGraph out;
  out.self_loop.assign(count, 0.0);
  out.strength.assign(count, 0.0);
  std::vector<std::map<std::size_t, double>> links(count);
  for (std::size_t i = 0; i < lg.adj.size(); ++i) {
    const std::size_t ci = community[i];
    out.self_loop[ci] += lg.self_loop[i];
    out.strength[ci] += lg.strength[i];
    for (const auto& [j, w] : lg.adj[i]) {
      const std::size_t cj = community[j];
      if (ci == cj) {
        if (i < j) out.self_loop[ci] += w;
      } else {
        links[ci][cj] += w;
      }
    }
  }
  out.adj.resize(count);
  for (std::size_t c = 0; c < count; ++c) out.adj[c].assign(links[c].begin(), links[c].end());
  return out;
}

}  // namespace

CommunityPartition louvain_communities(const WeightedGraph& g, double resolution, std::uint64_t seed) {
  if (g.empty()) throw PreconditionError("louvain_communities needs at least one node");
  const auto view = AdjacencyView::of(g);
  const std::size_t n = view.size();

  std::vector<std::size_t> membership(n);
  std::iota(membership.begin(), membership.end(), 0);

  double total_weight2 = 0.0;
  for (const auto& [key, w] : g.edges()) total_weight2 += 2.0 * w;

  if (total_weight2 > 0.0) {
    std::mt19937_64 rng(seed);
    LevelGraph level = level_from(view);
    for (;;) {
      std::vector<std::size_t> community;
      const bool moved = local_moving(level, total_weight2, resolution, rng, community);
      if (!moved) break;
      const std::size_t count = *std::max_element(community.begin(), community.end()) + 1;
      for (auto& m : membership) m = community[m];
      if (count == level.adj.size()) break;
      level = aggregate(level, community, count);
    }
  }

  // Renumber by first appearance in node-id order.
  std::vector<std::size_t> renumber(n, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  CommunityPartition out;
  for (std::size_t i = 0; i < n; ++i) {
    auto& slot = renumber[membership[i]];
    if (slot == static_cast<std::size_t>(-1)) slot = next++;
    out.assignment.emplace(view.ids[i], slot);
  }
  out.community_count = next;
  out.modularity = modularity(g, out.assignment);
  return out;
}

}  // namespace sciomap::netalgo
