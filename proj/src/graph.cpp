#include "drg/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "drg/errors.hpp"

namespace drg {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) throw ParseError("graph has no vertices");
  for (auto& [u, v] : edges) {
    if (u == v)
      throw ParseError("loop edge at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") outside vertex range 0.." + std::to_string(n - 1));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw ParseError("duplicate edge (" + std::to_string(edges[i].first) +
                       "," + std::to_string(edges[i].second) + ")");

  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

  // connectivity
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != n)
    throw ParseError("graph is disconnected (" + std::to_string(reached) +
                     " of " + std::to_string(n) + " vertices reachable)");
  return g;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int declared_n = -1;
  int max_index = -1;
  std::string line;
  int lineno = 0;
  bool seen_edge = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only line

    if (!seen_edge && declared_n < 0 && first.rfind("n=", 0) == 0) {
      try {
        size_t pos = 0;
        declared_n = std::stoi(first.substr(2), &pos);
        if (pos != first.size() - 2 || declared_n <= 0)
          throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": malformed vertex-count header '" + first + "'");
      }
      std::string extra;
      if (ls >> extra)
        throw ParseError("line " + std::to_string(lineno) +
                         ": unexpected token after header");
      continue;
    }

    int u, v;
    std::istringstream es(line);
    if (!(es >> u >> v))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected two vertex indices, got '" + line + "'");
    std::string extra;
    if (es >> extra)
      throw ParseError("line " + std::to_string(lineno) +
                       ": unexpected token '" + extra + "'");
    if (u < 0 || v < 0)
      throw ParseError("line " + std::to_string(lineno) +
                       ": negative vertex index");
    seen_edge = true;
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
  }
  if (edges.empty()) throw ParseError("edge list contains no edges");
  if (declared_n >= 0 && max_index >= declared_n)
    throw ParseError("vertex index " + std::to_string(max_index) +
                     " exceeds declared count n=" + std::to_string(declared_n));
  return Graph::from_edges(declared_n >= 0 ? declared_n : max_index + 1,
                           std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> dist(g.n, std::vector<int>(g.n, -1));
  for (int s = 0; s < g.n; ++s) {
    auto& row = dist[s];
    row[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.adj[v])
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
    }
  }
  return dist;
}

IntersectionNumbers check_distance_regular(const Graph& g) {
  const auto dist = all_pairs_distances(g);
  int d = 0;
  for (const auto& row : dist)
    for (int v : row) d = std::max(d, v);

  IntersectionNumbers num;
  num.d = d;
  num.p = Tensor3<long long>(d + 1, -1);

  std::vector<long long> count((d + 1) * (d + 1));
  std::vector<char> have(d + 1, 0);
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < g.n; ++y) {
      int h = dist[x][y];
      std::fill(count.begin(), count.end(), 0);
      for (int z = 0; z < g.n; ++z) ++count[dist[x][z] * (d + 1) + dist[z][y]];
      if (!have[h]) {
        have[h] = 1;
        for (int i = 0; i <= d; ++i)
          for (int j = 0; j <= d; ++j) num.p(h, i, j) = count[i * (d + 1) + j];
      } else {
        for (int i = 0; i <= d; ++i)
          for (int j = 0; j <= d; ++j)
            if (num.p(h, i, j) != count[i * (d + 1) + j])
              throw NotDistanceRegularError(x, y, h, i, j);
      }
    }
  }

  num.k.resize(d + 1);
  for (int i = 0; i <= d; ++i) num.k[i] = num.p(0, i, i);
  return num;
}

DistanceMatrices distance_matrices(const Graph& g) {
  DistanceMatrices dm;
  dm.n = g.n;
  dm.dist = all_pairs_distances(g);
  for (const auto& row : dm.dist)
    for (int v : row) dm.d = std::max(dm.d, v);
  dm.A.assign(dm.d + 1, Eigen::MatrixXi::Zero(g.n, g.n));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) dm.A[dm.dist[x][y]](x, y) = 1;
  return dm;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.n, -1);
  std::deque<int> queue{0};
  colour[0] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.adj[v]) {
      if (colour[w] < 0) {
        colour[w] = colour[v] ^ 1;
        queue.push_back(w);
      } else if (colour[w] == colour[v]) {
        return false;
      }
    }
  }
  return true;
}

bool is_antipodal(const DistanceMatrices& dm) {
  // Every vertex at distance d from x must be at distance d (or 0) from every
  // other such vertex, so that the distance-d graph is a union of cliques.
  for (int x = 0; x < dm.n; ++x) {
    std::vector<int> far;
    for (int y = 0; y < dm.n; ++y)
      if (dm.dist[x][y] == dm.d) far.push_back(y);
    if (far.empty()) return false;
    for (size_t a = 0; a < far.size(); ++a)
      for (size_t b = a + 1; b < far.size(); ++b)
        if (dm.dist[far[a]][far[b]] != dm.d) return false;
  }
  return true;
}

}  // namespace drg
