#pragma once

// Canonical labelling by partition refinement and exhaustive individualization.
// Two graphs get equal codes exactly when they are isomorphic.

#include "indstab/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace indstab {

inline constexpr int canonical_max_vertices = 16;

struct CanonicalForm
{
  std::string code;
  // Vertex i of the canonical graph is vertex labelling[i] of the input.
  std::vector<int> labelling;
};

auto canonical_form(const Graph& g) -> CanonicalForm;
auto canonical_code(const Graph& g) -> std::string;
auto canonical_graph(const Graph& g) -> Graph;
// Inverse of canonical_code: the canonical graph itself.
auto graph_from_code(std::string_view code) -> Graph;

} // namespace indstab
