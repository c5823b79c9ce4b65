#include <homind/wl_cfi.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace homind {

namespace {

// 0: equal, 1: adjacent, 2: distinct non-adjacent.
int relation(const Graph & u, int a, int b)
{
    if (a == b)
        return 0;
    return u.adjacent(a, b) ? 1 : 2;
}

} // namespace

bool wl_refine(const Graph & g, const Graph & h, int k, std::size_t max_tuples)
{
    if (k < 1)
        throw WlError("WL dimension must be at least 1");
    const Graph u = disjoint_union(g, h);
    const auto n = static_cast<std::size_t>(u.order());
    std::size_t count = 1;
    for (int a = 0; a < k; ++a) {
        count *= n;
        if (count > max_tuples)
            throw WlError("k-WL on " + std::to_string(n) + " vertices needs more than " + std::to_string(max_tuples) + " tuples");
    }
    std::vector<std::size_t> stride(k);
    for (int a = 0; a < k; ++a) {
        stride[a] = 1;
        for (int b = a + 1; b < k; ++b)
            stride[a] *= n;
    }
    auto decode = [&](std::size_t x, std::vector<int> & tuple) {
        for (int a = k - 1; a >= 0; --a) {
            tuple[a] = static_cast<int>(x % n);
            x /= n;
        }
    };

    std::vector<int> colour(count);
    std::size_t classes = 0;
    {
        std::map<std::vector<int>, int> palette;
        std::vector<int> tuple(k);
        for (std::size_t x = 0; x < count; ++x) {
            decode(x, tuple);
            std::vector<int> type;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    type.push_back(relation(u, tuple[a], tuple[b]));
            colour[x] = palette.try_emplace(type, static_cast<int>(palette.size())).first->second;
        }
        classes = palette.size();
    }

    std::vector<int> tuple(k);
    for (;;) {
        std::map<std::vector<int>, int> palette;
        std::vector<int> next(count);
        std::vector<std::vector<int>> around(n, std::vector<int>(2 * k));
        for (std::size_t x = 0; x < count; ++x) {
            decode(x, tuple);
            for (std::size_t y = 0; y < n; ++y) {
                auto & entry = around[y];
                for (int a = 0; a < k; ++a) {
                    entry[a] = relation(u, tuple[a], static_cast<int>(y));
                    const std::size_t replaced = x - static_cast<std::size_t>(tuple[a]) * stride[a] + y * stride[a];
                    entry[k + a] = colour[replaced];
                }
            }
            auto sorted = around;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> signature{colour[x]};
            for (const auto & entry : sorted)
                signature.insert(signature.end(), entry.begin(), entry.end());
            next[x] = palette.try_emplace(std::move(signature), static_cast<int>(palette.size())).first->second;
        }
        colour = std::move(next);
        if (palette.size() == classes)
            break;
        classes = palette.size();
    }

    const auto ng = static_cast<std::size_t>(g.order());
    std::map<int, long long> histogram;
    for (std::size_t x = 0; x < count; ++x) {
        decode(x, tuple);
        const bool in_g = std::all_of(tuple.begin(), tuple.end(), [&](int v) { return static_cast<std::size_t>(v) < ng; });
        const bool in_h = std::all_of(tuple.begin(), tuple.end(), [&](int v) { return static_cast<std::size_t>(v) >= ng; });
        if (in_g)
            ++histogram[colour[x]];
        else if (in_h)
            --histogram[colour[x]];
    }
    return std::all_of(histogram.begin(), histogram.end(), [](const auto & kv) { return kv.second == 0; });
}

CfiInstance cfi(const Graph & base, int parity)
{
    if (parity != 0 && parity != 1)
        throw CfiError("parity must be 0 or 1");
    if (base.order() == 0)
        throw CfiError("CFI base graph is empty");
    for (int v = 0; v < base.order(); ++v) {
        if (base.degree(v) == 0)
            throw CfiError("CFI base graph has isolated vertex " + std::to_string(v));
        if (base.degree(v) > cfi_max_degree)
            throw CfiError("CFI base vertex " + std::to_string(v) + " has degree " + std::to_string(base.degree(v)) + " above the cap of " +
                           std::to_string(cfi_max_degree));
    }
    CfiInstance inst;
    inst.base = base;
    inst.parity = parity;
    std::vector<std::vector<int>> neighbours(base.order());
    for (int v = 0; v < base.order(); ++v) {
        neighbours[v] = base.neighbours(v);
        std::sort(neighbours[v].begin(), neighbours[v].end());
    }
    // first[v]: id of the first gadget vertex of v; masks[id]: S as a bitmask over neighbours[v].
    std::vector<int> first(base.order());
    std::vector<std::uint32_t> masks;
    for (int v = 0; v < base.order(); ++v) {
        first[v] = static_cast<int>(inst.legend.size());
        const int target = v == 0 ? parity : 0;
        const int deg = static_cast<int>(neighbours[v].size());
        for (std::uint32_t s = 0; s < (std::uint32_t{1} << deg); ++s) {
            if (std::popcount(s) % 2 != target)
                continue;
            CfiVertex cv;
            cv.base_vertex = v;
            for (int e = 0; e < deg; ++e)
                cv.assignment.push_back((s >> e) & 1);
            inst.legend.push_back(std::move(cv));
            masks.push_back(s);
        }
    }
    const int total = static_cast<int>(inst.legend.size());
    auto position = [&](int v, int w) {
        return static_cast<int>(std::lower_bound(neighbours[v].begin(), neighbours[v].end(), w) - neighbours[v].begin());
    };
    std::vector<Edge> edges;
    for (const auto & [u, v] : base.edges()) {
        const int pu = position(u, v);
        const int pv = position(v, u);
        const int end_u = u + 1 < base.order() ? first[u + 1] : total;
        const int end_v = v + 1 < base.order() ? first[v + 1] : total;
        for (int a = first[u]; a < end_u; ++a)
            for (int b = first[v]; b < end_v; ++b)
                if (((masks[a] >> pu) & 1) == ((masks[b] >> pv) & 1))
                    edges.push_back({std::min(a, b), std::max(a, b)});
    }
    inst.result = Graph(total, std::move(edges));
    return inst;
}

std::string legend_text(const CfiInstance & inst)
{
    std::ostringstream out;
    out << "# vertex base_vertex assignment (one bit per incident edge, increasing neighbour order)\n";
    for (std::size_t i = 0; i < inst.legend.size(); ++i) {
        out << i << ' ' << inst.legend[i].base_vertex << ' ';
        for (int bit : inst.legend[i].assignment)
            out << bit;
        out << '\n';
    }
    return out.str();
}

Graph wl_hardness_base(const Graph & g)
{
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0)
            keep.push_back(v);
    if (keep.empty())
        throw CfiError("graph has no edges; nothing remains after deleting isolated vertices");
    Graph core = g.induced(keep);
    const auto comp = component_ids(core);
    std::map<int, int> lowest;
    for (int v = 0; v < core.order(); ++v)
        lowest.try_emplace(comp[v], v);
    std::vector<int> heads;
    for (const auto & [c, v] : lowest)
        heads.push_back(v);
    std::sort(heads.begin(), heads.end());
    for (std::size_t i = 0; i + 1 < heads.size(); ++i)
        core = core.with_edge(heads[i], heads[i + 1]);
    return core;
}

ReductionInstance gen_wl_hardness(const Graph & g, int k)
{
    if (k < 1)
        throw CfiError("k must be at least 1");
    const Graph core = wl_hardness_base(g);
    return {cfi(core, 0).result, cfi(core, 1).result, k};
}

ReductionInstance gen_clique_reduction(const Graph & g, int k)
{
    if (k < 2 || k > 4)
        throw CfiError("clique reduction supports 2 <= k <= 4");
    const Graph clique = complete_graph(k);
    return {categorical_product(g, cfi(clique, 0).result), categorical_product(g, cfi(clique, 1).result), k};
}

} // namespace homind
