#include <homind/field.hpp>
#include <homind/lasserre.hpp>

#include "trials.hpp"

#include <deque>

namespace homind {

namespace {

template <typename Field>
class LasserreClosure {
public:
    using Elem = typename Field::Elem;

    LasserreClosure(const Field & field, const Graph & g, const Graph & h, int t, const LasserreOptions & options) :
        field_(field), blocks_(stacked_blocks(g, h, 2 * t)), basis_(field), options_(options)
    {
        for (const auto & a : enumerate_atomic(t)) {
            atomics_.push_back(a);
            atomic_tensors_.push_back(atomic_tensor(field_, blocks_, a));
        }
        for (int i = 0; i < 2 * t; ++i)
            for (int j = i + 1; j < 2 * t; ++j) {
                std::vector<int> sigma(2 * t);
                for (int a = 0; a < 2 * t; ++a)
                    sigma[a] = a;
                std::swap(sigma[i], sigma[j]);
                transpositions_.push_back(sigma);
            }
    }

    std::optional<LasserreTermPtr> run()
    {
        for (std::size_t a = 0; a < atomics_.size(); ++a)
            if (insert(atomic_tensors_[a], make_atomic(atomics_[a])))
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
        LasserreTermPtr term;
    };

    bool process(std::size_t e)
    {
        for (std::size_t a = 0; a < atomics_.size(); ++a)
            if (insert(schur(field_, atomic_tensors_[a], entries_[e].vec), make_glue_atomic(atomics_[a], entries_[e].term)))
                return true;
        for (const auto & sigma : transpositions_)
            if (insert(permute_axes(field_, blocks_, sigma, entries_[e].vec), make_permute(sigma, entries_[e].term)))
                return true;
        popped_.push_back(e);
        for (std::size_t f : popped_) {
            if (insert(matrix_product(field_, blocks_, entries_[e].vec, entries_[f].vec), make_series(entries_[e].term, entries_[f].term)))
                return true;
            if (f != e && insert(matrix_product(field_, blocks_, entries_[f].vec, entries_[e].vec), make_series(entries_[f].term, entries_[e].term)))
                return true;
        }
        return false;
    }

    bool insert(std::vector<Elem> v, LasserreTermPtr term)
    {
        if (!basis_.insert(v))
            return false;
        if (entries_.size() >= options_.max_basis)
            throw LasserreError("Lasserre closure exceeded the basis budget of " + std::to_string(options_.max_basis) + " vectors");
        const bool failed = block_sum(field_, blocks_[0], v) != block_sum(field_, blocks_[1], v);
        entries_.push_back(Entry{std::move(v), term});
        pending_.push_back(entries_.size() - 1);
        if (failed)
            witness_ = term;
        return failed;
    }

    const Field & field_;
    std::vector<Block> blocks_;
    EchelonBasis<Field> basis_;
    LasserreOptions options_;
    std::vector<LabelledGraph> atomics_;
    std::vector<std::vector<Elem>> atomic_tensors_;
    std::vector<std::vector<int>> transpositions_;
    std::vector<Entry> entries_;
    std::deque<std::size_t> pending_;
    std::vector<std::size_t> popped_;
    std::optional<LasserreTermPtr> witness_;
};

void check_t(int t)
{
    if (t < 1 || t > lasserre_max_t)
        throw LasserreError("Lasserre level t must be 1 or 2, got " + std::to_string(t));
}

} // namespace

Verdict lasserre_mod(const Graph & g, const Graph & h, int t, const BigInt & p, const LasserreOptions & options)
{
    check_t(t);
    if (!is_prime(p))
        throw LasserreError("modulus " + p.str() + " is not prime");
    Verdict verdict;
    verdict.variant = "lasserre";
    verdict.primes_used.push_back(p);
    with_field(p, [&](const auto & field) {
        LasserreClosure closure(field, g, h, t, options);
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

Verdict lasserre_randomized(const Graph & g, const Graph & h, int t, const RandomizedOptions & options)
{
    check_t(t);
    const auto n = static_cast<std::uint64_t>(std::max(g.order(), h.order()));
    const auto bounds = bound_lasserre(n, static_cast<std::uint64_t>(t), options.bits_cap);
    Verdict merged;
    merged.mode = VerdictMode::Randomized;
    merged.variant = "lasserre";
    merged.seed = options.seed;
    auto trial = [&](std::size_t i) {
        detail::TrialOutcome out;
        Rng rng = Rng::stream(options.seed, i);
        if (auto p = sample_prime_in_range(bounds.L, rng)) {
            out.composite = false;
            out.verdict = lasserre_mod(g, h, t, *p);
        }
        return out;
    };
    return detail::run_trials(bounds.trials, options.parallel, trial, merged);
}

Verdict lasserre_prime_bits(const Graph & g, const Graph & h, int t, int bits, std::size_t trials, const RandomizedOptions & options)
{
    check_t(t);
    if (bits < 2)
        throw LasserreError("--prime-bits needs at least 2 bits");
    Verdict merged;
    merged.mode = VerdictMode::PrimeBits;
    merged.variant = "lasserre";
    merged.seed = options.seed;
    merged.heuristic = true;
    auto trial = [&](std::size_t i) {
        detail::TrialOutcome out;
        Rng rng = Rng::stream(options.seed, i);
        out.composite = false;
        out.verdict = lasserre_mod(g, h, t, random_prime_bits(bits, rng));
        return out;
    };
    return detail::run_trials(trials, options.parallel, trial, merged);
}

} // namespace homind
