#include <homind/engine.hpp>
#include <homind/field.hpp>
#include <homind/tensor.hpp>

#include "trials.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace homind {

namespace {

/// Line 1 of Algorithm 1: graphs on at most k vertices declared members by the automaton.
std::optional<Graph> small_stage(const Graph & g, const Graph & h, const Automaton & aut, const BigInt & p)
{
    if (aut.small == SmallPolicy::None)
        return std::nullopt;
    if (aut.k > small_stage_cap)
        throw EngineError("small stage needs all graphs on at most k vertices; k = " + std::to_string(aut.k) + " exceeds the cap of " +
                          std::to_string(small_stage_cap));
    for (const auto & f : graphs_up_to(aut.k)) {
        if (!aut.small_member(f))
            continue;
        if (BigInt(hom_count(f, g)) % p != BigInt(hom_count(f, h)) % p)
            return f;
    }
    return std::nullopt;
}

template <typename Field>
class Closure {
public:
    using Elem = typename Field::Elem;

    Closure(const Field & field, const Graph & g, const Graph & h, const Automaton & aut, bool use_schur, const EngineOptions & options) :
        field_(field), aut_(aut), blocks_(stacked_blocks(g, h, aut.k)), use_schur_(use_schur), options_(options)
    {
        bases_.reserve(aut.states);
        for (int q = 0; q < aut.states; ++q)
            bases_.emplace_back(field_);
        for (int i = 1; i <= aut.k; ++i)
            for (int j = i + 1; j <= aut.k; ++j)
                pairs_.emplace_back(i, j);
    }

    /// Runs to a fixed point or to the first accepting-state vector with unequal readouts.
    /// Returns the witness term of a failed readout.
    std::optional<TermPtr> run()
    {
        if (insert(aut_.start, ones(field_, blocks_), make_one(aut_.k)))
            return witness_;
        Rng order(options_.order_seed.value_or(0));
        while (!pending_.empty()) {
            std::size_t slot = 0;
            if (options_.order_seed)
                slot = order.below(pending_.size());
            const std::size_t e = pending_[slot];
            if (options_.order_seed) {
                pending_[slot] = pending_.back();
                pending_.pop_back();
            }
            else {
                pending_.pop_front();
            }
            if (process(e))
                return witness_;
        }
        return std::nullopt;
    }

    std::size_t basis_size() const { return entries_.size(); }

private:
    struct Entry {
        std::vector<Elem> vec;
        TermPtr term;
        int state;
    };

    bool process(std::size_t e)
    {
        const int q = entries_[e].state;
        for (int i = 1; i <= aut_.k; ++i) {
            auto w = entries_[e].vec;
            apply_J(field_, blocks_, i, w);
            if (insert(aut_.j_table[i - 1][q], std::move(w), make_J(i, entries_[e].term)))
                return true;
        }
        for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
            auto w = entries_[e].vec;
            apply_A(field_, blocks_, pairs_[pi].first, pairs_[pi].second, w);
            if (insert(aut_.a_table[pi][q], std::move(w), make_A(pairs_[pi].first, pairs_[pi].second, entries_[e].term)))
                return true;
        }
        if (use_schur_) {
            popped_.push_back(e);
            for (std::size_t f : popped_) {
                auto w = schur(field_, entries_[e].vec, entries_[f].vec);
                if (insert(aut_.glue[q][entries_[f].state], std::move(w), make_glue(entries_[e].term, entries_[f].term)))
                    return true;
            }
        }
        return false;
    }

    /// Adds v to B(q) if it is outside the span; true when it breaks the acceptance condition.
    bool insert(int q, std::vector<Elem> v, TermPtr term)
    {
        if (!bases_[q].insert(v))
            return false;
        if (entries_.size() >= options_.max_basis)
            throw EngineError("closure exceeded the basis budget of " + std::to_string(options_.max_basis) + " vectors");
        const bool failed = aut_.accepts(q) && block_sum(field_, blocks_[0], v) != block_sum(field_, blocks_[1], v);
        entries_.push_back(Entry{std::move(v), term, q});
        pending_.push_back(entries_.size() - 1);
        if (failed)
            witness_ = term;
        return failed;
    }

    const Field & field_;
    const Automaton & aut_;
    std::vector<Block> blocks_;
    bool use_schur_;
    EngineOptions options_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<EchelonBasis<Field>> bases_;
    std::vector<Entry> entries_;
    std::deque<std::size_t> pending_;
    std::vector<std::size_t> popped_;
    std::optional<TermPtr> witness_;
};

} // namespace

Verdict modhomind_variant(const Graph & g, const Graph & h, const Automaton & aut, const BigInt & p, Variant variant, const EngineOptions & options)
{
    check_automaton(aut);
    if (!is_prime(p))
        throw EngineError("modulus " + p.str() + " is not prime");
    Verdict verdict;
    verdict.variant = variant == Variant::Treewidth ? "tw" : "pw";
    verdict.primes_used.push_back(p);
    verdict.small_none = aut.small == SmallPolicy::None;
    if (auto f = small_stage(g, h, aut, p)) {
        verdict.accept = false;
        verdict.rejecting_prime = p;
        verdict.witness = *f;
        verdict.witness_source = "small-stage";
        return verdict;
    }
    with_field(p, [&](const auto & field) {
        Closure closure(field, g, h, aut, variant == Variant::Treewidth, options);
        const auto witness = closure.run();
        verdict.basis_size = closure.basis_size();
        if (witness) {
            verdict.accept = false;
            verdict.rejecting_prime = p;
            verdict.witness = soe(val(*witness));
            verdict.witness_source = "closure";
        }
        return 0;
    });
    return verdict;
}

Verdict modhomind(const Graph & g, const Graph & h, const Automaton & aut, const BigInt & p, const EngineOptions & options)
{
    return modhomind_variant(g, h, aut, p, Variant::Treewidth, options);
}

Verdict modhomind_pw(const Graph & g, const Graph & h, const Automaton & aut, const BigInt & p, const EngineOptions & options)
{
    return modhomind_variant(g, h, aut, p, Variant::Pathwidth, options);
}

namespace {

std::uint64_t max_order(const Graph & g, const Graph & h) { return static_cast<std::uint64_t>(std::max(g.order(), h.order())); }

} // namespace

Verdict homind_randomized(const Graph & g, const Graph & h, const Automaton & aut, Variant variant, const RandomizedOptions & options)
{
    check_automaton(aut);
    const std::uint64_t n = max_order(g, h);
    const auto bounds = variant == Variant::Treewidth ? bound_tw(n, aut.k, aut.states, options.bits_cap) : bound_pw(n, aut.k, aut.states, options.bits_cap);
    Verdict merged;
    merged.mode = VerdictMode::Randomized;
    merged.variant = variant == Variant::Treewidth ? "tw" : "pw";
    merged.seed = options.seed;
    merged.small_none = aut.small == SmallPolicy::None;
    auto trial = [&](std::size_t i) {
        detail::TrialOutcome out;
        Rng rng = Rng::stream(options.seed, i);
        if (auto p = sample_prime_in_range(bounds.L, rng)) {
            out.composite = false;
            out.verdict = modhomind_variant(g, h, aut, *p, variant);
        }
        return out;
    };
    return detail::run_trials(bounds.trials, options.parallel, trial, merged);
}

Verdict homind_prime_bits(const Graph & g, const Graph & h, const Automaton & aut, Variant variant, int bits, std::size_t trials,
                          const RandomizedOptions & options)
{
    check_automaton(aut);
    if (bits < 2)
        throw EngineError("--prime-bits needs at least 2 bits");
    Verdict merged;
    merged.mode = VerdictMode::PrimeBits;
    merged.variant = variant == Variant::Treewidth ? "tw" : "pw";
    merged.seed = options.seed;
    merged.heuristic = true;
    merged.small_none = aut.small == SmallPolicy::None;
    auto trial = [&](std::size_t i) {
        detail::TrialOutcome out;
        Rng rng = Rng::stream(options.seed, i);
        out.composite = false;
        out.verdict = modhomind_variant(g, h, aut, random_prime_bits(bits, rng), variant);
        return out;
    };
    return detail::run_trials(trials, options.parallel, trial, merged);
}

namespace {

BigInt crt_target(std::uint64_t n, std::uint64_t k, std::uint64_t states)
{
    const auto bounds = bound_pw(n, k, states);
    if (n <= 1)
        return BigInt(1);
    const double bits = static_cast<double>(bounds.N) * std::log2(static_cast<double>(n));
    if (bits > double(default_bound_bits_cap))
        throw BoundTooLarge("n^N has about " + std::to_string(static_cast<long long>(bits)) + " bits; too many primes for the deterministic mode");
    return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(bounds.N));
}

} // namespace

std::size_t crt_prime_count(std::uint64_t n, std::uint64_t k, std::uint64_t states)
{
    return smallest_primes_with_product_exceeding(crt_target(n, k, states)).size();
}

Verdict homind_deterministic_crt(const Graph & g, const Graph & h, const Automaton & aut, std::size_t max_primes)
{
    check_automaton(aut);
    const auto primes = smallest_primes_with_product_exceeding(crt_target(max_order(g, h), aut.k, aut.states));
    if (primes.size() > max_primes)
        throw EngineError("deterministic mode needs " + std::to_string(primes.size()) + " primes, budget is " + std::to_string(max_primes));
    Verdict merged;
    merged.mode = VerdictMode::DeterministicCrt;
    merged.variant = "pw";
    merged.small_none = aut.small == SmallPolicy::None;
    for (const auto & p : primes) {
        const auto v = modhomind_pw(g, h, aut, p);
        merged.primes_used.push_back(p);
        merged.basis_size = v.basis_size;
        if (!v.accept) {
            merged.accept = false;
            merged.rejecting_prime = p;
            merged.witness = v.witness;
            merged.witness_source = v.witness_source;
            break;
        }
    }
    return merged;
}

} // namespace homind
