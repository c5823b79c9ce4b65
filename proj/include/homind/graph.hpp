#pragma once

#include <homind/bigint.hpp>
#include <homind/rng.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homind {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive oracle would exceed its work budget.
class OracleTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Edges may be given in either orientation; self-loops, duplicates and
    /// out-of-range ids throw GraphError.
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    /// Sorted, each with first < second.
    const std::vector<Edge> & edges() const { return edges_; }
    const std::vector<int> & neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0; }

    /// Vertex v of this graph becomes perm[v].
    Graph relabelled(const std::vector<int> & perm) const;
    Graph induced(const std::vector<int> & vertices) const;
    Graph without_edge(int u, int v) const;
    Graph with_edge(int u, int v) const;

    friend bool operator==(const Graph & a, const Graph & b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> matrix_;
};

/// Graph file format: `n <int> m <int>` then m pairs; '#' comments.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string & path);
std::string to_text(const Graph & g);

/// Compact single-line rendering used in verdicts: `n=3;0-1,0-2,1-2`.
std::string to_inline(const Graph & g);

Graph disjoint_union(const Graph & g, const Graph & h);
Graph categorical_product(const Graph & g, const Graph & h);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);
Graph empty_graph(int n);
Graph random_graph(int n, double edge_probability, Rng & rng);
Graph random_permuted(const Graph & g, Rng & rng);

bool is_connected(const Graph & g);
bool is_forest(const Graph & g);
/// Connected, n-1 edges, max degree 2. The single vertex counts as a path.
bool is_path_graph(const Graph & g);
int max_degree(const Graph & g);
std::vector<int> component_ids(const Graph & g);

inline constexpr std::uint64_t default_hom_budget = 100'000'000;

/// Exact hom(F, G) by exhaustive search over V(G)^V(F) with edge pruning.
/// Throws OracleTooLarge once more than `budget` edge checks are needed.
std::uint64_t hom_count(const Graph & f, const Graph & g, std::uint64_t budget = default_hom_budget);

/// Entry l is the number of walks of length l, i.e. 1^T A^l 1.
std::vector<BigInt> walk_counts(const Graph & g, int max_len);

/// Exhaustive isomorphism test with colour-refinement pruning.
bool is_isomorphic_small(const Graph & g, const Graph & h, int cap = 10);

/// Canonical code: equal iff the graphs are isomorphic once the first
/// `fixed` vertices are required to stay in place (label slots).
std::vector<std::uint64_t> canonical_code(const Graph & g, int fixed = 0);

/// All graphs on exactly n vertices up to isomorphism (n <= 8), cached.
const std::vector<Graph> & graphs_of_order(int n);

/// All graphs on 1..max_n vertices up to isomorphism, ascending order.
std::vector<Graph> graphs_up_to(int max_n);

} // namespace homind
