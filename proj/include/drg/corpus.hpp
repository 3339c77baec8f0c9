#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/graph.hpp"
#include "drg/spectra.hpp"

namespace drg::corpus {

// Known classification outcomes pinned for selected fixtures; fields left
// empty are computed rather than asserted.
struct ExpectedClassification {
  int j = 0;
  std::optional<bool> tail;
  std::optional<bool> ttr_present;
  std::optional<bool> condition_iii;
  std::optional<bool> q_polynomial;
};

struct Fixture {
  std::string name;
  bool stored = false;  // true when loaded from a frozen edge list
  Graph graph;
  IntersectionArray array;  // declared array, verified on load
  bool bipartite = false;
  bool antipodal = false;
  bool primitive = false;
  std::vector<ExpectedClassification> expected;
};

struct FixtureTag {
  std::string name;
  bool bipartite = false;
  bool antipodal = false;
  bool primitive = false;
};

std::vector<std::string> fixture_names();
std::vector<FixtureTag> list_fixtures();

// Builds the graph, re-derives its intersection numbers, and verifies the
// declared array and structural tags. Throws UnknownFixtureError for names
// outside the registry and MathError if validation fails.
Fixture get_fixture(const std::string& name);

// Generators.
Graph hypercube(int m);  // m >= 3
Graph cycle(int n);      // n >= 6
Graph johnson(int n, int e);
Graph dodecahedron();
Graph icosahedron();
Graph fano_flag_graph();

// The one stored fixture: parsed from the frozen edge list below.
Graph wells();
extern const char* const kWellsEdgeList;

}  // namespace drg::corpus
