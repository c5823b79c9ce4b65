#pragma once

// Mod-p homomorphism tensors over V(G)^k, flattened with x_1 most significant,
// and the implicit generator kernels acting on them. A stacked pair F_G + F_H
// is the G block followed by the H block.

#include <homind/graph.hpp>
#include <homind/labelled.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace homind {

class TensorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Index space V(G)^k with n = |V(G)|.
struct Block {
    int n = 0;
    int k = 0;
    std::size_t offset = 0;
    std::size_t size = 0;
    const Graph * graph = nullptr;

    /// Stride of 1-based axis i.
    std::size_t stride(int i) const
    {
        std::size_t s = 1;
        for (int a = i; a < k; ++a)
            s *= static_cast<std::size_t>(n);
        return s;
    }
};

inline std::size_t checked_power(int n, int k, std::size_t cap = std::size_t{1} << 28)
{
    std::size_t s = 1;
    for (int a = 0; a < k; ++a) {
        s *= static_cast<std::size_t>(n);
        if (s > cap)
            throw TensorError("tensor index space " + std::to_string(n) + "^" + std::to_string(k) + " exceeds the memory budget");
    }
    return s;
}

/// Blocks for G and H stacked at arity k.
inline std::vector<Block> stacked_blocks(const Graph & g, const Graph & h, int k)
{
    Block bg{g.order(), k, 0, checked_power(g.order(), k), &g};
    Block bh{h.order(), k, bg.size, checked_power(h.order(), k), &h};
    return {bg, bh};
}

inline std::vector<Block> single_block(const Graph & g, int k) { return {Block{g.order(), k, 0, checked_power(g.order(), k), &g}}; }

inline std::size_t total_size(const std::vector<Block> & blocks)
{
    std::size_t s = 0;
    for (auto & b : blocks)
        s += b.size;
    return s;
}

template <typename Field>
std::vector<typename Field::Elem> ones(const Field & field, const std::vector<Block> & blocks)
{
    return std::vector<typename Field::Elem>(total_size(blocks), field.one());
}

/// w(x) = v(x) [x_i x_j in E], 1 <= i < j <= k.
template <typename Field>
void apply_A(const Field & field, const std::vector<Block> & blocks, int i, int j, std::vector<typename Field::Elem> & v)
{
    for (const auto & b : blocks) {
        if (i < 1 || j > b.k || i >= j)
            throw TensorError("apply_A: labels out of range");
        const std::size_t si = b.stride(i);
        const std::size_t sj = b.stride(j);
        const auto n = static_cast<std::size_t>(b.n);
        for (std::size_t x = 0; x < b.size; ++x) {
            const int xi = static_cast<int>((x / si) % n);
            const int xj = static_cast<int>((x / sj) % n);
            if (!b.graph->adjacent(xi, xj))
                v[b.offset + x] = field.zero();
        }
    }
}

/// w(x) = sum_y v(x[i <- y]): marginalize axis i, then broadcast along it.
template <typename Field>
void apply_J(const Field & field, const std::vector<Block> & blocks, int i, std::vector<typename Field::Elem> & v)
{
    for (const auto & b : blocks) {
        if (i < 1 || i > b.k)
            throw TensorError("apply_J: label out of range");
        if (b.size == 0)
            continue;
        const std::size_t inner = b.stride(i);
        const auto n = static_cast<std::size_t>(b.n);
        const std::size_t outer = b.size / (inner * n);
        for (std::size_t o = 0; o < outer; ++o) {
            const std::size_t base = b.offset + o * n * inner;
            for (std::size_t r = 0; r < inner; ++r) {
                auto sum = field.zero();
                for (std::size_t y = 0; y < n; ++y)
                    sum = field.add(sum, v[base + y * inner + r]);
                for (std::size_t y = 0; y < n; ++y)
                    v[base + y * inner + r] = sum;
            }
        }
    }
}

template <typename Field>
std::vector<typename Field::Elem> schur(const Field & field, const std::vector<typename Field::Elem> & a, const std::vector<typename Field::Elem> & b)
{
    if (a.size() != b.size())
        throw TensorError("schur: size mismatch");
    std::vector<typename Field::Elem> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
        out[x] = field.mul(a[x], b[x]);
    return out;
}

/// Sum of the entries of one block.
template <typename Field>
typename Field::Elem block_sum(const Field & field, const Block & b, const std::vector<typename Field::Elem> & v)
{
    auto s = field.zero();
    for (std::size_t x = 0; x < b.size; ++x)
        s = field.add(s, v[b.offset + x]);
    return s;
}

/// Tensor of val(t) built from the generator kernels alone.
template <typename Field>
std::vector<typename Field::Elem> tensor_of_term(const Field & field, const std::vector<Block> & blocks, const Term & t)
{
    switch (t.kind) {
    case Term::Kind::One:
        return ones(field, blocks);
    case Term::Kind::Glue:
        return schur(field, tensor_of_term(field, blocks, *t.left), tensor_of_term(field, blocks, *t.right));
    case Term::Kind::A: {
        auto v = tensor_of_term(field, blocks, *t.left);
        apply_A(field, blocks, t.i, t.j, v);
        return v;
    }
    case Term::Kind::J: {
        auto v = tensor_of_term(field, blocks, *t.left);
        apply_J(field, blocks, t.i, v);
        return v;
    }
    }
    throw TensorError("corrupt term");
}

/// Incrementally maintained semi-echelon basis: every stored vector is
/// normalized to 1 at its pivot and vanishes at the pivots of earlier vectors.
template <typename Field>
class EchelonBasis {
public:
    using Elem = typename Field::Elem;

    explicit EchelonBasis(const Field & field) :
        field_(&field)
    {
    }

    std::size_t size() const { return rows_.size(); }

    /// Reduces v against the basis; returns true (and stores the reduction) iff v is outside the span.
    bool insert(std::vector<Elem> v)
    {
        reduce(v);
        std::size_t pivot = 0;
        while (pivot < v.size() && field_->is_zero(v[pivot]))
            ++pivot;
        if (pivot == v.size())
            return false;
        const Elem scale = field_->inv(v[pivot]);
        for (std::size_t x = pivot; x < v.size(); ++x)
            v[x] = field_->mul(v[x], scale);
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

    bool contains(std::vector<Elem> v) const
    {
        reduce(v);
        for (const auto & e : v)
            if (!field_->is_zero(e))
                return false;
        return true;
    }

private:
    void reduce(std::vector<Elem> & v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Elem c = v[pivots_[r]];
            if (field_->is_zero(c))
                continue;
            const auto & row = rows_[r];
            for (std::size_t x = pivots_[r]; x < v.size(); ++x)
                if (!field_->is_zero(row[x]))
                    v[x] = field_->sub(v[x], field_->mul(c, row[x]));
        }
    }

    const Field * field_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace homind
