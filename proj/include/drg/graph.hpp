#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "drg/numeric.hpp"

namespace drg {

// Simple connected undirected graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted, unique
  std::vector<std::vector<int>> adj;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  // Validates: endpoints in [0, n), no loops, no duplicates, connected.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
};

// Text format: one "u v" edge per line; '#' starts a comment; an optional
// leading "n=<count>" line declares the vertex count (otherwise it is
// 1 + max index). Throws ParseError on malformed input.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// BFS from every vertex; entry [x][y] is the distance between x and y.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

// p(h,i,j) = |{z : dist(x,z) = i and dist(z,y) = j}| for any x,y at distance h.
struct IntersectionNumbers {
  int d = 0;
  Tensor3<long long> p;
  std::vector<long long> k;  // sphere sizes, k[i] = p(0,i,i)

  long long operator()(int h, int i, int j) const { return p(h, i, j); }
};

// Verifies that the triple counts depend only on (h,i,j) over every ordered
// pair of vertices; throws NotDistanceRegularError with a witness otherwise.
IntersectionNumbers check_distance_regular(const Graph& g);

struct DistanceMatrices {
  int n = 0;
  int d = 0;
  std::vector<Eigen::MatrixXi> A;  // A[i](x,y) = 1 iff dist(x,y) == i
  std::vector<std::vector<int>> dist;
};

DistanceMatrices distance_matrices(const Graph& g);

bool is_bipartite(const Graph& g);

// True when "equal or at maximal distance" is an equivalence relation.
bool is_antipodal(const DistanceMatrices& dm);

}  // namespace drg
