#include <homind/graph.hpp>

#include "tokens.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace homind {

Graph::Graph(int n) :
    n_(n),
    adj_(static_cast<std::size_t>(std::max(n, 0))),
    matrix_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), 0)
{
    if (n < 0)
        throw GraphError("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) :
    Graph(n)
{
    for (auto & [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        auto & cell = matrix_[static_cast<std::size_t>(u) * n + v];
        if (cell)
            throw GraphError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        cell = 1;
        matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto & list : adj_)
        std::sort(list.begin(), list.end());
}

Graph Graph::relabelled(const std::vector<int> & perm) const
{
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (auto [u, v] : edges_)
        edges.emplace_back(perm[u], perm[v]);
    return Graph(n_, std::move(edges));
}

Graph Graph::induced(const std::vector<int> & vertices) const
{
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : edges_)
        if (index[u] >= 0 && index[v] >= 0)
            edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph Graph::without_edge(int u, int v) const
{
    if (u > v)
        std::swap(u, v);
    std::vector<Edge> edges;
    for (auto e : edges_)
        if (e != Edge{u, v})
            edges.push_back(e);
    return Graph(n_, std::move(edges));
}

Graph Graph::with_edge(int u, int v) const
{
    if (adjacent(u, v))
        return *this;
    auto edges = edges_;
    edges.emplace_back(u, v);
    return Graph(n_, std::move(edges));
}

namespace detail {

Graph parse_graph_block(const std::vector<Token> & tokens, std::size_t & pos)
{
    auto expect_word = [&](const char * word) {
        if (pos >= tokens.size())
            throw GraphError("unexpected end of input: expected '" + std::string(word) + "'");
        if (tokens[pos].text != word)
            throw GraphError("line " + std::to_string(tokens[pos].line) + ": malformed header, expected '" + word + "' got '" + tokens[pos].text + "'");
        ++pos;
    };
    auto next_int = [&](const char * what) -> long long {
        if (pos >= tokens.size())
            throw GraphError(std::string("unexpected end of input: expected ") + what);
        return to_integer<GraphError>(tokens[pos++]);
    };

    expect_word("n");
    const int header_line = tokens[pos - 1].line;
    const long long n = next_int("vertex count");
    expect_word("m");
    const long long m = next_int("edge count");
    if (n < 0 || m < 0)
        throw GraphError("line " + std::to_string(header_line) + ": malformed header, negative count");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (long long i = 0; i < m; ++i) {
        if (pos >= tokens.size())
            throw GraphError("unexpected end of input: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        const int line = tokens[pos].line;
        const long long u = next_int("edge endpoint");
        const long long v = next_int("edge endpoint");
        const std::string where = "line " + std::to_string(line) + ": ";
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError(where + "vertex id out of range in edge " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw GraphError(where + "self-loop at vertex " + std::to_string(u));
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(e).second)
            throw GraphError(where + "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
        edges.push_back(e);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

} // namespace detail

Graph parse_graph(std::string_view text)
{
    const auto tokens = detail::tokenize(text);
    std::size_t pos = 0;
    Graph g = detail::parse_graph_block(tokens, pos);
    if (pos != tokens.size())
        throw GraphError("line " + std::to_string(tokens[pos].line) + ": trailing data '" + tokens[pos].text + "'");
    return g;
}

Graph read_graph_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw GraphError("cannot open graph file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_graph(buffer.str());
    }
    catch (const GraphError & e) {
        throw GraphError(path + ": " + e.what());
    }
}

std::string to_text(const Graph & g)
{
    std::string out = "n " + std::to_string(g.order()) + " m " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string to_inline(const Graph & g)
{
    std::string out = "n=" + std::to_string(g.order()) + ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first)
            out += ",";
        first = false;
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

Graph disjoint_union(const Graph & g, const Graph & h)
{
    auto edges = g.edges();
    for (auto [u, v] : h.edges())
        edges.emplace_back(u + g.order(), v + g.order());
    return Graph(g.order() + h.order(), std::move(edges));
}

Graph categorical_product(const Graph & g, const Graph & h)
{
    const int nh = h.order();
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        for (auto [c, d] : h.edges()) {
            edges.emplace_back(a * nh + c, b * nh + d);
            edges.emplace_back(a * nh + d, b * nh + c);
        }
    return Graph(g.order() * nh, std::move(edges));
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        edges.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(edges));
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, u + 1);
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves)
{
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

Graph grid_graph(int rows, int cols)
{
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.emplace_back(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows)
                edges.emplace_back(r * cols + c, (r + 1) * cols + c);
        }
    return Graph(rows * cols, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n); }

Graph random_graph(int n, double edge_probability, Rng & rng)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(edge_probability))
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_permuted(const Graph & g, Rng & rng)
{
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.order() - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);
    return g.relabelled(perm);
}

std::vector<int> component_ids(const Graph & g)
{
    std::vector<int> comp(g.order(), -1);
    int next = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(v))
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Graph & g)
{
    if (g.order() == 0)
        return true;
    auto comp = component_ids(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool is_forest(const Graph & g)
{
    auto comp = component_ids(g);
    const int components = g.order() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    return static_cast<int>(g.size()) == g.order() - components;
}

int max_degree(const Graph & g)
{
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

bool is_path_graph(const Graph & g)
{
    return g.order() >= 1 && static_cast<int>(g.size()) == g.order() - 1 && max_degree(g) <= 2 && is_connected(g);
}

namespace {

// Counts homomorphisms from one connected component (vertices listed in
// placement order) by depth-first search.
class HomCounter {
public:
    HomCounter(const Graph & f, const Graph & g, std::uint64_t budget) :
        f_(f), g_(g), budget_(budget)
    {
    }

    std::uint64_t count_component(const std::vector<int> & order)
    {
        order_ = order;
        back_.assign(order.size(), {});
        std::vector<int> position(f_.order(), -1);
        for (std::size_t i = 0; i < order.size(); ++i)
            position[order[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int w : f_.neighbours(order[i]))
                if (position[w] >= 0 && position[w] < static_cast<int>(i))
                    back_[i].push_back(position[w]);
        image_.assign(order.size(), -1);
        return search(0);
    }

private:
    std::uint64_t search(std::size_t depth)
    {
        if (depth == order_.size())
            return 1;
        std::uint64_t total = 0;
        const auto & back = back_[depth];
        auto try_vertex = [&](int x) {
            for (std::size_t b = 1; b < back.size(); ++b) {
                if (++checks_ > budget_)
                    throw OracleTooLarge("hom_count: more than " + std::to_string(budget_) + " edge checks needed");
                if (!g_.adjacent(image_[back[b]], x))
                    return;
            }
            image_[depth] = x;
            total += search(depth + 1);
        };
        if (back.empty()) {
            for (int x = 0; x < g_.order(); ++x) {
                if (++checks_ > budget_)
                    throw OracleTooLarge("hom_count: more than " + std::to_string(budget_) + " edge checks needed");
                try_vertex(x);
            }
        }
        else {
            for (int x : g_.neighbours(image_[back[0]])) {
                if (++checks_ > budget_)
                    throw OracleTooLarge("hom_count: more than " + std::to_string(budget_) + " edge checks needed");
                try_vertex(x);
            }
        }
        return total;
    }

    const Graph & f_;
    const Graph & g_;
    std::uint64_t budget_;
    std::uint64_t checks_ = 0;
    std::vector<int> order_;
    std::vector<std::vector<int>> back_;
    std::vector<int> image_;
};

} // namespace

std::uint64_t hom_count(const Graph & f, const Graph & g, std::uint64_t budget)
{
    if (f.order() == 0)
        return 1;
    if (g.order() == 0)
        return 0;

    // hom is multiplicative over the components of F.
    const auto comp = component_ids(f);
    const int components = *std::max_element(comp.begin(), comp.end()) + 1;
    HomCounter counter(f, g, budget);
    std::uint64_t result = 1;
    for (int c = 0; c < components; ++c) {
        // Greedy order: each next vertex has the most already-placed neighbours.
        std::vector<int> members;
        for (int v = 0; v < f.order(); ++v)
            if (comp[v] == c)
                members.push_back(v);
        std::vector<int> order;
        std::vector<int> placed_nbrs(f.order(), 0);
        std::vector<char> used(f.order(), 0);
        for (std::size_t step = 0; step < members.size(); ++step) {
            int best = -1;
            for (int v : members) {
                if (used[v])
                    continue;
                if (best < 0 || placed_nbrs[v] > placed_nbrs[best] || (placed_nbrs[v] == placed_nbrs[best] && f.degree(v) > f.degree(best)))
                    best = v;
            }
            used[best] = 1;
            order.push_back(best);
            for (int w : f.neighbours(best))
                ++placed_nbrs[w];
        }
        const std::uint64_t part = counter.count_component(order);
        if (part == 0)
            return 0;
        result *= part;
    }
    return result;
}

std::vector<BigInt> walk_counts(const Graph & g, int max_len)
{
    if (max_len < 0)
        throw std::invalid_argument("walk_counts: negative length");
    std::vector<BigInt> out;
    std::vector<BigInt> x(g.order(), BigInt(1));
    for (int len = 0; len <= max_len; ++len) {
        BigInt total = 0;
        for (const auto & entry : x)
            total += entry;
        out.push_back(total);
        std::vector<BigInt> next(g.order(), BigInt(0));
        for (int v = 0; v < g.order(); ++v)
            for (int w : g.neighbours(v))
                next[v] += x[w];
        x = std::move(next);
    }
    return out;
}

namespace {

// Stable colour refinement on a vertex set given by adjacency lists. Colours
// are ranks of (old colour, sorted neighbour colours) signatures, so the
// result is invariant under isomorphism.
std::vector<int> refine_colours(const std::vector<std::vector<int>> & adj, std::vector<int> colours)
{
    const std::size_t n = adj.size();
    std::size_t classes = std::set<int>(colours.begin(), colours.end()).size();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.reserve(adj[v].size() + 1);
            sig.push_back(colours[v]);
            std::vector<int> nb;
            for (int w : adj[v])
                nb.push_back(colours[w]);
            std::sort(nb.begin(), nb.end());
            sig.insert(sig.end(), nb.begin(), nb.end());
            sigs[v] = {std::move(sig), static_cast<int>(v)};
        }
        std::vector<std::vector<int>> keys;
        keys.reserve(n);
        for (auto & s : sigs)
            keys.push_back(s.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> next(n);
        for (std::size_t v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sigs[v].first) - keys.begin());
        colours = std::move(next);
        if (keys.size() == classes)
            return colours;
        classes = keys.size();
    }
}

class IsoSearch {
public:
    IsoSearch(const Graph & g, const Graph & h) :
        g_(g), h_(h), n_(g.order())
    {
        adj_.resize(2 * n_);
        for (int v = 0; v < n_; ++v) {
            adj_[v] = g.neighbours(v);
            for (int w : h.neighbours(v))
                adj_[n_ + v].push_back(n_ + w);
        }
    }

    bool run() { return search(std::vector<int>(2 * n_, 0)); }

private:
    bool histograms_match(const std::vector<int> & colours) const
    {
        std::map<int, int> balance;
        for (int v = 0; v < n_; ++v) {
            ++balance[colours[v]];
            --balance[colours[n_ + v]];
        }
        return std::all_of(balance.begin(), balance.end(), [](auto & kv) { return kv.second == 0; });
    }

    bool search(std::vector<int> colours)
    {
        colours = refine_colours(adj_, std::move(colours));
        if (!histograms_match(colours))
            return false;

        std::map<int, std::vector<int>> cells_g;
        for (int v = 0; v < n_; ++v)
            cells_g[colours[v]].push_back(v);
        const std::vector<int> * target = nullptr;
        int target_colour = -1;
        for (auto & [c, members] : cells_g)
            if (members.size() > 1 && (!target || members.size() < target->size())) {
                target = &members;
                target_colour = c;
            }

        if (!target) {
            std::vector<int> map_to(n_);
            std::map<int, int> h_of_colour;
            for (int v = 0; v < n_; ++v)
                h_of_colour[colours[n_ + v]] = v;
            for (int v = 0; v < n_; ++v)
                map_to[v] = h_of_colour.at(colours[v]);
            for (auto [u, v] : g_.edges())
                if (!h_.adjacent(map_to[u], map_to[v]))
                    return false;
            return g_.size() == h_.size();
        }

        const int x = target->front();
        const int fresh = 2 * n_ + 1;
        for (int y = 0; y < n_; ++y) {
            if (colours[n_ + y] != target_colour)
                continue;
            auto next = colours;
            next[x] = fresh;
            next[n_ + y] = fresh;
            if (search(std::move(next)))
                return true;
        }
        return false;
    }

    const Graph & g_;
    const Graph & h_;
    int n_;
    std::vector<std::vector<int>> adj_;
};

} // namespace

bool is_isomorphic_small(const Graph & g, const Graph & h, int cap)
{
    if (g.order() > cap || h.order() > cap)
        throw GraphError("is_isomorphic_small: graphs exceed the cap of " + std::to_string(cap) + " vertices");
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return false;
    return IsoSearch(g, h).run();
}

namespace {

class Canonizer {
public:
    Canonizer(const Graph & g, int fixed) :
        g_(g), n_(g.order()), fixed_(fixed)
    {
        std::vector<std::vector<int>> adj(n_);
        for (int v = 0; v < n_; ++v)
            adj[v] = g.neighbours(v);
        std::vector<int> colours(n_, 0);
        for (int i = 0; i < fixed_; ++i)
            colours[i] = i + 1;
        colours_ = refine_colours(adj, colours);

        // Free vertices grouped by colour; positions fixed_.. follow colour order.
        std::map<int, std::vector<int>> cells;
        for (int v = fixed_; v < n_; ++v)
            cells[colours_[v]].push_back(v);
        for (auto & [c, members] : cells)
            for (std::size_t i = 0; i < members.size(); ++i)
                position_colour_.push_back(c);

        // Twins inside a colour cell are swapped by an automorphism fixing
        // everything else, so only one relative order of each twin class is tried.
        twin_class_.assign(n_, -1);
        for (int v = fixed_; v < n_; ++v) {
            if (twin_class_[v] >= 0)
                continue;
            twin_class_[v] = v;
            for (int w = v + 1; w < n_; ++w)
                if (twin_class_[w] < 0 && colours_[w] == colours_[v] && are_twins(v, w)) {
                    bool with_all = true;
                    for (int u = v + 1; u < w && with_all; ++u)
                        if (twin_class_[u] == v && !are_twins(u, w))
                            with_all = false;
                    if (with_all)
                        twin_class_[w] = v;
                }
        }

        bits_ = static_cast<std::size_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2;
        current_.assign(bits_, 0);
        order_.assign(n_, -1);
        placed_.assign(n_, 0);
    }

    std::vector<std::uint64_t> run()
    {
        for (int i = 0; i < fixed_; ++i) {
            order_[i] = i;
            placed_[i] = 1;
            write_column(i);
        }
        search(fixed_);
        std::vector<std::uint64_t> code{static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(fixed_)};
        std::uint64_t word = 0;
        int filled = 0;
        for (std::size_t i = 0; i < bits_; ++i) {
            word = (word << 1) | best_[i];
            if (++filled == 64) {
                code.push_back(word);
                word = 0;
                filled = 0;
            }
        }
        if (filled > 0)
            code.push_back(word << (64 - filled));
        return code;
    }

private:
    bool are_twins(int a, int b) const
    {
        for (int x = 0; x < n_; ++x) {
            if (x == a || x == b)
                continue;
            if (g_.adjacent(a, x) != g_.adjacent(b, x))
                return false;
        }
        return true;
    }

    static std::size_t column_start(int j) { return static_cast<std::size_t>(j) * (j - 1) / 2; }

    void write_column(int j)
    {
        for (int i = 0; i < j; ++i)
            current_[column_start(j) + i] = g_.adjacent(order_[i], order_[j]) ? 1 : 0;
    }

    // Columns 0..pos compared with the best code found so far.
    int compare_prefix(int pos) const
    {
        const std::size_t end = column_start(pos + 1);
        for (std::size_t i = 0; i < end; ++i)
            if (current_[i] != best_[i])
                return current_[i] < best_[i] ? -1 : 1;
        return 0;
    }

    void search(int pos)
    {
        if (pos == n_) {
            if (!have_best_ || current_ < best_) {
                best_ = current_;
                have_best_ = true;
            }
            return;
        }
        const int colour = position_colour_[pos - fixed_];
        for (int v = fixed_; v < n_; ++v) {
            if (placed_[v] || colours_[v] != colour)
                continue;
            bool blocked = false;
            for (int u = fixed_; u < v && !blocked; ++u)
                if (!placed_[u] && twin_class_[u] == twin_class_[v])
                    blocked = true;
            if (blocked)
                continue;

            order_[pos] = v;
            write_column(pos);
            if (have_best_ && compare_prefix(pos) > 0)
                continue;
            placed_[v] = 1;
            search(pos + 1);
            placed_[v] = 0;
        }
    }

    const Graph & g_;
    int n_;
    int fixed_;
    std::vector<int> colours_;
    std::vector<int> position_colour_;
    std::vector<int> twin_class_;
    std::size_t bits_ = 0;
    std::vector<char> current_;
    std::vector<char> best_;
    bool have_best_ = false;
    std::vector<int> order_;
    std::vector<char> placed_;
};

} // namespace

std::vector<std::uint64_t> canonical_code(const Graph & g, int fixed)
{
    if (fixed < 0 || fixed > g.order())
        throw GraphError("canonical_code: bad fixed prefix");
    return Canonizer(g, fixed).run();
}

const std::vector<Graph> & graphs_of_order(int n)
{
    constexpr int max_order = 8;
    if (n < 0 || n > max_order)
        throw GraphError("graphs_of_order: order must be in 0.." + std::to_string(max_order));
    static std::array<std::vector<Graph>, max_order + 1> cache;
    static std::array<bool, max_order + 1> ready{};
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    if (!ready[0]) {
        cache[0] = {Graph(0)};
        ready[0] = true;
    }
    for (int m = 1; m <= n; ++m) {
        if (ready[m])
            continue;
        std::map<std::vector<std::uint64_t>, Graph> found;
        for (const auto & base : cache[m - 1]) {
            for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
                auto edges = base.edges();
                for (int v = 0; v < m - 1; ++v)
                    if (mask & (1u << v))
                        edges.emplace_back(v, m - 1);
                Graph g(m, std::move(edges));
                auto code = canonical_code(g);
                found.try_emplace(std::move(code), std::move(g));
            }
        }
        std::vector<Graph> list;
        for (auto & [code, g] : found)
            list.push_back(std::move(g));
        std::stable_sort(list.begin(), list.end(), [](const Graph & a, const Graph & b) { return a.size() < b.size(); });
        cache[m] = std::move(list);
        ready[m] = true;
    }
    return cache[n];
}

std::vector<Graph> graphs_up_to(int max_n)
{
    std::vector<Graph> out;
    for (int m = 1; m <= max_n; ++m) {
        const auto & list = graphs_of_order(m);
        out.insert(out.end(), list.begin(), list.end());
    }
    return out;
}

} // namespace homind
