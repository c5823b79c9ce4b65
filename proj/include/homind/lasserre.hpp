#pragma once

// Modular homomorphism indistinguishability over the Lasserre classes L_t.
// A (t,t)-bilabelled tensor over V^{2t} is read as an n^t x n^t matrix whose
// row index is the in-label tuple.

#include <homind/engine.hpp>
#include <homind/labelled.hpp>
#include <homind/tensor.hpp>

namespace homind {

class LasserreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int lasserre_max_t = 2;

/// 0/1 tensor of an atomic graph: z must respect coinciding slots and every edge.
template <typename Field>
std::vector<typename Field::Elem> atomic_tensor(const Field & field, const std::vector<Block> & blocks, const LabelledGraph & atomic)
{
    const auto slots = atomic.slots();
    std::vector<int> slot_of(atomic.graph.order(), -1);
    for (std::size_t s = 0; s < slots.size(); ++s)
        if (slot_of[slots[s]] < 0)
            slot_of[slots[s]] = static_cast<int>(s);
    for (int v = 0; v < atomic.graph.order(); ++v)
        if (slot_of[v] < 0)
            throw LasserreError("atomic graph has an unlabelled vertex");
    std::vector<typename Field::Elem> out(total_size(blocks), field.zero());
    std::vector<int> z(slots.size());
    for (const auto & b : blocks) {
        for (std::size_t x = 0; x < b.size; ++x) {
            std::size_t rest = x;
            for (int a = b.k - 1; a >= 0; --a) {
                z[a] = static_cast<int>(rest % static_cast<std::size_t>(b.n));
                rest /= static_cast<std::size_t>(b.n);
            }
            bool ok = true;
            for (std::size_t s = 0; s < slots.size() && ok; ++s)
                ok = z[s] == z[slot_of[slots[s]]];
            for (const auto & [u, v] : atomic.graph.edges()) {
                if (!ok)
                    break;
                ok = b.graph->adjacent(z[slot_of[u]], z[slot_of[v]]);
            }
            if (ok)
                out[b.offset + x] = field.one();
        }
    }
    return out;
}

/// Per-block matrix product with t row axes and t column axes.
template <typename Field>
std::vector<typename Field::Elem> matrix_product(const Field & field, const std::vector<Block> & blocks, const std::vector<typename Field::Elem> & a,
                                                 const std::vector<typename Field::Elem> & b)
{
    std::vector<typename Field::Elem> out(a.size(), field.zero());
    for (const auto & blk : blocks) {
        const std::size_t dim = blk.stride(blk.k / 2);
        const std::size_t base = blk.offset;
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t m = 0; m < dim; ++m) {
                const auto & arm = a[base + r * dim + m];
                if (field.is_zero(arm))
                    continue;
                for (std::size_t c = 0; c < dim; ++c)
                    out[base + r * dim + c] = field.add(out[base + r * dim + c], field.mul(arm, b[base + m * dim + c]));
            }
    }
    return out;
}

/// Axis permutation matching permute_labels: out(z) = in(w) with w[sigma[i]] = z[i].
template <typename Field>
std::vector<typename Field::Elem> permute_axes(const Field & field, const std::vector<Block> & blocks, const std::vector<int> & sigma,
                                               const std::vector<typename Field::Elem> & v)
{
    std::vector<typename Field::Elem> out(v.size(), field.zero());
    for (const auto & b : blocks) {
        if (static_cast<int>(sigma.size()) != b.k)
            throw LasserreError("permutation length differs from the tensor order");
        std::vector<std::size_t> strides(b.k);
        for (int a = 0; a < b.k; ++a)
            strides[a] = b.stride(a + 1);
        for (std::size_t x = 0; x < b.size; ++x) {
            std::size_t rest = x;
            std::size_t source = 0;
            for (int a = b.k - 1; a >= 0; --a) {
                const std::size_t digit = rest % static_cast<std::size_t>(b.n);
                rest /= static_cast<std::size_t>(b.n);
                source += digit * strides[sigma[a]];
            }
            out[b.offset + x] = v[b.offset + source];
        }
    }
    return out;
}

/// Tensor of val(w) built from atomic tensors, Schur products, matrix products and axis permutations.
template <typename Field>
std::vector<typename Field::Elem> lasserre_tensor(const Field & field, const std::vector<Block> & blocks, const LasserreTerm & w)
{
    switch (w.kind) {
    case LasserreTerm::Kind::Atomic:
        return atomic_tensor(field, blocks, w.atomic);
    case LasserreTerm::Kind::GlueAtomic:
        return schur(field, atomic_tensor(field, blocks, w.atomic), lasserre_tensor(field, blocks, *w.left));
    case LasserreTerm::Kind::Permute:
        return permute_axes(field, blocks, w.sigma, lasserre_tensor(field, blocks, *w.left));
    case LasserreTerm::Kind::Series:
        return matrix_product(field, blocks, lasserre_tensor(field, blocks, *w.left), lasserre_tensor(field, blocks, *w.right));
    }
    throw LasserreError("corrupt Lasserre term");
}

struct LasserreOptions {
    std::optional<std::uint64_t> order_seed;
    std::size_t max_basis = std::size_t{1} << 16;
};

/// Algorithm 3 modulo the prime p (t <= 2).
Verdict lasserre_mod(const Graph & g, const Graph & h, int t, const BigInt & p, const LasserreOptions & options = {});

/// Algorithm 2 with N = bound_lasserre(n, t).
Verdict lasserre_randomized(const Graph & g, const Graph & h, int t, const RandomizedOptions & options);

/// Random primes of exactly `bits` bits; heuristic.
Verdict lasserre_prime_bits(const Graph & g, const Graph & h, int t, int bits, std::size_t trials, const RandomizedOptions & options);

} // namespace homind
