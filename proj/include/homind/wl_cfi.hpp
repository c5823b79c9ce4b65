#pragma once

#include <homind/graph.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homind {

class WlError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// k-WL on the disjoint union in a shared palette; true iff the colour
/// histograms of the G-tuples and the H-tuples agree after stabilization.
bool wl_refine(const Graph & g, const Graph & h, int k, std::size_t max_tuples = std::size_t{1} << 22);

class CfiError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CfiVertex {
    int base_vertex = 0;
    /// S(e) for the edges at base_vertex, in increasing neighbour order.
    std::vector<int> assignment;
};

struct CfiInstance {
    Graph base;
    int parity = 0;
    Graph result;
    std::vector<CfiVertex> legend;
};

inline constexpr int cfi_max_degree = 16;

/// Parity is placed on the lowest-id vertex; vertices (v, S) with sum S = U(v),
/// (u, S) ~ (v, T) iff uv in E and S(uv) + T(uv) = 0.
CfiInstance cfi(const Graph & base, int parity);

/// Text legend, one line per result vertex: `<id> <base vertex> <S bits>`.
std::string legend_text(const CfiInstance & inst);

struct ReductionInstance {
    Graph first;
    Graph second;
    int k = 0;
};

/// Deletes isolated vertices and chains the components by an edge between
/// consecutive lowest vertices.
Graph wl_hardness_base(const Graph & g);

/// CFI pair of wl_hardness_base(g), plus k.
ReductionInstance gen_wl_hardness(const Graph & g, int k);

/// (G x CFI(K_k, 0), G x CFI(K_k, 1), k) for 2 <= k <= 4.
ReductionInstance gen_clique_reduction(const Graph & g, int k);

} // namespace homind
