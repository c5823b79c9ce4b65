#pragma once

#include <homind/graph.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homind {

class DecompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tree decomposition (T, beta): bags[t] is the sorted vertex set of tree node t.
/// With `path` set, validation additionally requires T to be a path.
struct TreeDecomposition {
    Graph tree;
    std::vector<std::vector<int>> bags;
    std::optional<int> root;
    bool path = false;
};

/// Returns the width; throws DecompositionError naming the first violated
/// condition together with a witness vertex or edge.
int validate(const TreeDecomposition & dec, const Graph & f);

bool is_smooth(const TreeDecomposition & dec, int k);

/// All bags of size exactly k, adjacent bags sharing exactly k - 1 vertices.
/// Requires width <= k - 1 and |V(F)| >= k. The root, if any, is tracked.
TreeDecomposition smooth(const TreeDecomposition & dec, const Graph & f, int k);

/// Rooted out-degree <= k for a smooth decomposition with a designated root.
TreeDecomposition rewire_bounded_outdegree(const TreeDecomposition & dec, const Graph & f, int k);

/// Maximum number of children of a node when T is rooted at dec.root.
int max_out_degree(const TreeDecomposition & dec);

/// Number of nodes on the longest root-to-leaf path.
int rooted_depth(const TreeDecomposition & dec);

/// Exact values by subset dynamic programming over vertex orderings (n <= 16).
int exact_treewidth_tiny(const Graph & f);
int exact_pathwidth_tiny(const Graph & f);

/// Optimal-width decompositions built from the orderings found above.
TreeDecomposition optimal_tree_decomposition_tiny(const Graph & f);
TreeDecomposition optimal_path_decomposition_tiny(const Graph & f);

/// Text format: `bag <t> : <v>...`, `tedge <s> <t>`, optional `root <t>`.
TreeDecomposition parse_decomposition(std::string_view text);
std::string to_text(const TreeDecomposition & dec);

} // namespace homind
