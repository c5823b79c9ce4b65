#pragma once

// Brute-force ground truth. Nothing here uses the tensor kernels.

#include <homind/automaton.hpp>
#include <homind/bigint.hpp>
#include <homind/graph.hpp>
#include <homind/labelled.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homind {

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// hom tensor of a labelled graph: entry z counts homomorphisms sending slot i to z_i,
/// indexed over V(G)^{slots} with the first slot most significant.
std::vector<std::uint64_t> hom_tensor(const LabelledGraph & f, const Graph & g, std::uint64_t budget = default_hom_budget);

struct ClassSpec {
    enum class Kind { All, Treewidth, Pathwidth, Paths, LasserreT1, Automaton };
    Kind kind = Kind::All;
    /// Width bound for Treewidth / Pathwidth.
    int width = 0;
    /// Term depth for LasserreT1.
    int depth = 3;
    /// Recognised class for Automaton.
    std::optional<homind::Automaton> automaton;
    /// Enumeration budget for the term-generated classes.
    std::uint64_t budget = default_enumeration_budget;
};

/// `all`, `tw:<w>`, `pw:<w>`, `paths`, `lasserre-t1`; automaton classes are built in code.
ClassSpec parse_class_spec(const std::string & text);
std::string to_string(const ClassSpec & spec);

/// Non-isomorphic members on 1..max_size vertices.
std::vector<Graph> class_members(const ClassSpec & spec, int max_size);

struct OracleResult {
    bool indistinguishable = true;
    std::optional<Graph> witness;
    BigInt hom_g = 0;
    BigInt hom_h = 0;
    std::size_t members = 0;
};

/// Compares hom counts (exactly, or mod modulus) over class_members(spec, max_size).
OracleResult homind_bruteforce(const Graph & g, const Graph & h, const ClassSpec & spec, int max_size, const std::optional<BigInt> & modulus = std::nullopt);

/// All graphs on at most k vertices, k <= 5.
OracleResult homind_size_bruteforce(const Graph & g, const Graph & h, int k);

/// Walk counts of lengths 0..2n-1 (n the larger order), exactly or mod modulus.
bool paths_oracle(const Graph & g, const Graph & h, const std::optional<BigInt> & modulus = std::nullopt);

} // namespace homind
