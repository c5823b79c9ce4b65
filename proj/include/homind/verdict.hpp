#pragma once

#include <homind/bigint.hpp>
#include <homind/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homind {

enum class VerdictMode { SinglePrime, Randomized, DeterministicCrt, PrimeBits };

std::string to_string(VerdictMode mode);

struct Verdict {
    bool accept = true;
    VerdictMode mode = VerdictMode::SinglePrime;
    /// "tw", "pw" or "lasserre".
    std::string variant = "tw";
    std::vector<BigInt> primes_used;
    std::optional<BigInt> rejecting_prime;
    /// Graph whose hom counts differ mod the rejecting prime.
    std::optional<Graph> witness;
    /// "small-stage" or "closure" when a witness is present.
    std::string witness_source;
    /// The automaton declares no small members: only graphs built from terms are covered.
    bool small_none = false;
    /// Prime-bits mode: the failure-probability bound does not apply.
    bool heuristic = false;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 0;
    std::size_t composite_draws = 0;
    /// Sum of basis sizes of the last closure.
    std::size_t basis_size = 0;
};

/// `key=value` lines: verdict, mode, variant, prime (repeatable), rejecting_prime, witness, ...
std::string format_verdict(const Verdict & v);
/// Single JSON object mirroring the line format.
std::string verdict_json(const Verdict & v);

} // namespace homind
