#pragma once

#include <homind/verdict.hpp>

#include <atomic>
#include <thread>
#include <vector>

namespace homind::detail {

struct TrialOutcome {
    bool composite = true;
    Verdict verdict;
};

/// Runs trials 0..count-1 and merges them in index order: the lowest rejecting trial wins.
template <typename TrialFn>
Verdict run_trials(std::size_t count, unsigned parallel, TrialFn && trial, Verdict merged)
{
    std::vector<TrialOutcome> outcomes(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_reject{count};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || i > first_reject.load())
                return;
            outcomes[i] = trial(i);
            if (!outcomes[i].composite && !outcomes[i].verdict.accept) {
                std::size_t seen = first_reject.load();
                while (i < seen && !first_reject.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };
    if (parallel <= 1) {
        worker();
    }
    else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < parallel; ++t)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
    }
    merged.trials = count;
    for (std::size_t i = 0; i < count; ++i) {
        if (i > first_reject.load())
            break;
        auto & o = outcomes[i];
        if (o.composite) {
            ++merged.composite_draws;
            continue;
        }
        merged.primes_used.push_back(o.verdict.primes_used.front());
        merged.basis_size = o.verdict.basis_size;
        if (!o.verdict.accept) {
            merged.accept = false;
            merged.rejecting_prime = o.verdict.rejecting_prime;
            merged.witness = o.verdict.witness;
            merged.witness_source = o.verdict.witness_source;
            break;
        }
    }
    return merged;
}

} // namespace homind::detail
