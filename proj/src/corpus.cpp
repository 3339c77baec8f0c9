#include "drg/corpus.hpp"

#include <functional>

#include "drg/errors.hpp"

namespace drg::corpus {

Graph hypercube(int m) {
  if (m < 3) throw InputError("hypercube requires m >= 3");
  const int n = 1 << m;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < m; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 6) throw InputError("cycle requires n >= 6");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

Graph johnson(int n, int e) {
  if (n < 2 || e < 1 || e >= n) throw InputError("invalid Johnson parameters");
  // vertices = e-element subsets of {0..n-1} as bitmasks, in increasing order
  std::vector<unsigned> sets;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (__builtin_popcount(mask) == e) sets.push_back(mask);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j)
      if (__builtin_popcount(sets[i] & sets[j]) == e - 1)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph::from_edges(static_cast<int>(sets.size()), std::move(edges));
}

Graph dodecahedron() {
  // Generalized Petersen construction: outer 10-cycle, spokes, inner
  // pentagram stepping by 2.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(10 + i, 10 + (i + 2) % 10);
  }
  return Graph::from_edges(20, std::move(edges));
}

Graph icosahedron() {
  // Two apexes capping a pentagonal antiprism.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(0, 1 + i);
    edges.emplace_back(11, 6 + i);
    edges.emplace_back(1 + i, 1 + (i + 1) % 5);
    edges.emplace_back(6 + i, 6 + (i + 1) % 5);
    edges.emplace_back(1 + i, 6 + i);
    edges.emplace_back(1 + (i + 1) % 5, 6 + i);
  }
  return Graph::from_edges(12, std::move(edges));
}

Graph fano_flag_graph() {
  // Vertices are the 21 incident point-line pairs of the Fano plane; two
  // flags are adjacent when they share the point or the line.
  static const int lines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                  {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  std::vector<std::pair<int, int>> flags;  // (point, line)
  for (int li = 0; li < 7; ++li)
    for (int p : lines[li]) flags.emplace_back(p, li);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < flags.size(); ++i)
    for (size_t j = i + 1; j < flags.size(); ++j)
      if (flags[i].first == flags[j].first ||
          flags[i].second == flags[j].second)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph::from_edges(static_cast<int>(flags.size()), std::move(edges));
}

Graph wells() { return parse_edge_list(std::string(kWellsEdgeList)); }

namespace {

struct Entry {
  std::function<Graph()> build;
  bool stored = false;
  std::vector<long long> b, c;
  std::vector<ExpectedClassification> expected;
};

const std::vector<std::pair<std::string, Entry>>& registry() {
  static const std::vector<std::pair<std::string, Entry>> reg = [] {
    std::vector<std::pair<std::string, Entry>> r;
    r.push_back({"h_3_2",
                 {[] { return hypercube(3); }, false, {3, 2, 1}, {1, 2, 3}, {}}});
    r.push_back({"h_4_2",
                 {[] { return hypercube(4); },
                  false,
                  {4, 3, 2, 1},
                  {1, 2, 3, 4},
                  {}}});
    r.push_back({"h_5_2",
                 {[] { return hypercube(5); },
                  false,
                  {5, 4, 3, 2, 1},
                  {1, 2, 3, 4, 5},
                  {}}});
    r.push_back({"c_6",
                 {[] { return cycle(6); }, false, {2, 1, 1}, {1, 1, 2}, {}}});
    r.push_back({"c_7",
                 {[] { return cycle(7); }, false, {2, 1, 1}, {1, 1, 1}, {}}});
    r.push_back({"c_8",
                 {[] { return cycle(8); },
                  false,
                  {2, 1, 1, 1},
                  {1, 1, 1, 2},
                  {}}});
    r.push_back({"j_6_3",
                 {[] { return johnson(6, 3); }, false, {9, 4, 1}, {1, 4, 9}, {}}});
    r.push_back({"icosahedron",
                 {[] { return icosahedron(); }, false, {5, 2, 1}, {1, 2, 5}, {}}});
    r.push_back(
        {"dodecahedron",
         {[] { return dodecahedron(); },
          false,
          {3, 2, 1, 1, 1},
          {1, 1, 1, 2, 3},
          // First idempotent: tail and nondegenerate duals hold, but no
          // three-term recurrence, hence not q-polynomial.
          {{1, true, false, true, false}}}});
    r.push_back({"gh_2_1",
                 {[] { return fano_flag_graph(); },
                  false,
                  {4, 2, 2},
                  {1, 1, 2},
                  // First idempotent: recurrence and nondegeneracy hold but
                  // the tail condition fails.
                  {{1, false, true, true, false}}}});
    r.push_back({"wells",
                 {[] { return wells(); },
                  true,
                  {5, 4, 1, 1},
                  {1, 1, 4, 5},
                  // Second idempotent: tail and recurrence hold but the dual
                  // eigenvalues degenerate.
                  {{2, true, true, false, false}}}});
    return r;
  }();
  return reg;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : registry()) names.push_back(name);
  return names;
}

Fixture get_fixture(const std::string& name) {
  const Entry* entry = nullptr;
  for (const auto& [n, e] : registry())
    if (n == name) {
      entry = &e;
      break;
    }
  if (!entry) throw UnknownFixtureError(name);

  Fixture f;
  f.name = name;
  f.stored = entry->stored;
  f.graph = entry->build();
  f.expected = entry->expected;

  const auto num = check_distance_regular(f.graph);
  f.array = IntersectionArray::from_intersection_numbers(num);
  const auto declared = IntersectionArray::create(entry->b, entry->c);
  if (!(f.array == declared))
    throw MathError("fixture " + name +
                    " does not match its declared intersection array");
  if (f.array.vertex_count() != f.graph.n)
    throw MathError("fixture " + name + " has inconsistent vertex count");

  const auto dm = distance_matrices(f.graph);
  f.bipartite = is_bipartite(f.graph);
  f.antipodal = is_antipodal(dm);
  f.primitive = !f.bipartite && !f.antipodal;
  return f;
}

std::vector<FixtureTag> list_fixtures() {
  std::vector<FixtureTag> tags;
  for (const auto& name : fixture_names()) {
    const Fixture f = get_fixture(name);
    tags.push_back({f.name, f.bipartite, f.antipodal, f.primitive});
  }
  return tags;
}

}  // namespace drg::corpus
