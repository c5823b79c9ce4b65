#pragma once

#include <homind/automaton.hpp>
#include <homind/bigint.hpp>
#include <homind/graph.hpp>
#include <homind/modular.hpp>
#include <homind/verdict.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace homind {

class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Variant { Treewidth, Pathwidth };

inline constexpr int small_stage_cap = 7;

struct EngineOptions {
    /// Pop worklist entries in a seeded random order instead of FIFO.
    std::optional<std::uint64_t> order_seed;
    /// Upper bound on the total basis size across states.
    std::size_t max_basis = std::size_t{1} << 20;
};

/// Algorithm 1 over the class recognised by aut, modulo the prime p.
Verdict modhomind(const Graph & g, const Graph & h, const Automaton & aut, const BigInt & p, const EngineOptions & options = {});
/// Same closure without Schur products (pathwidth terms).
Verdict modhomind_pw(const Graph & g, const Graph & h, const Automaton & aut, const BigInt & p, const EngineOptions & options = {});
Verdict modhomind_variant(const Graph & g, const Graph & h, const Automaton & aut, const BigInt & p, Variant variant,
                          const EngineOptions & options = {});

struct RandomizedOptions {
    std::uint64_t seed = 0;
    /// Worker threads for the trial loop (1 = sequential).
    unsigned parallel = 1;
    std::size_t bits_cap = default_bound_bits_cap;
};

/// Algorithm 2: trials = ceil(4 log2 L) draws from (L, L^2]; composite draws are skipped,
/// the first rejecting prime (lowest trial index) rejects.
Verdict homind_randomized(const Graph & g, const Graph & h, const Automaton & aut, Variant variant, const RandomizedOptions & options);

/// Random primes of exactly `bits` bits instead of the bound-derived range; heuristic.
Verdict homind_prime_bits(const Graph & g, const Graph & h, const Automaton & aut, Variant variant, int bits, std::size_t trials,
                          const RandomizedOptions & options);

/// Pathwidth closure for each of the smallest primes whose product exceeds n^N.
/// Throws EngineError when more than max_primes primes are needed.
Verdict homind_deterministic_crt(const Graph & g, const Graph & h, const Automaton & aut, std::size_t max_primes = 100000);

/// Number of primes the deterministic mode would use.
std::size_t crt_prime_count(std::uint64_t n, std::uint64_t k, std::uint64_t states);

} // namespace homind
