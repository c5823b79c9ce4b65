#include <homind/decomposition.hpp>

#include "tokens.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>

namespace homind {

namespace {

std::string edge_text(int u, int v) { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }

bool contains(const std::vector<int> & sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::vector<int> intersection(const std::vector<int> & a, const std::vector<int> & b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> difference(const std::vector<int> & a, const std::vector<int> & b)
{
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool includes(const std::vector<int> & big, const std::vector<int> & small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Mutable forest used while reshaping decompositions.
struct Workspace {
    std::vector<std::vector<int>> bags;
    std::vector<std::set<int>> nbrs;
    std::vector<char> alive;
    int root = -1;

    explicit Workspace(const TreeDecomposition & dec)
    {
        bags = dec.bags;
        for (auto & b : bags)
            std::sort(b.begin(), b.end());
        nbrs.resize(bags.size());
        alive.assign(bags.size(), 1);
        for (auto [s, t] : dec.tree.edges()) {
            nbrs[s].insert(t);
            nbrs[t].insert(s);
        }
        root = dec.root.value_or(-1);
    }

    int add_node(std::vector<int> bag)
    {
        bags.push_back(std::move(bag));
        nbrs.emplace_back();
        alive.push_back(1);
        return static_cast<int>(bags.size()) - 1;
    }

    void link(int s, int t)
    {
        nbrs[s].insert(t);
        nbrs[t].insert(s);
    }

    void unlink(int s, int t)
    {
        nbrs[s].erase(t);
        nbrs[t].erase(s);
    }

    // Removes `gone`, attaching its other neighbours to `keep` (which must be adjacent).
    void contract_into(int gone, int keep)
    {
        for (int x : std::vector<int>(nbrs[gone].begin(), nbrs[gone].end())) {
            unlink(gone, x);
            if (x != keep)
                link(keep, x);
        }
        alive[gone] = 0;
        if (root == gone)
            root = keep;
    }

    TreeDecomposition finish(bool path) const
    {
        std::vector<int> index(bags.size(), -1);
        TreeDecomposition out;
        for (std::size_t t = 0; t < bags.size(); ++t)
            if (alive[t]) {
                index[t] = static_cast<int>(out.bags.size());
                out.bags.push_back(bags[t]);
            }
        std::vector<Edge> edges;
        for (std::size_t s = 0; s < bags.size(); ++s)
            if (alive[s])
                for (int t : nbrs[s])
                    if (static_cast<int>(s) < t)
                        edges.emplace_back(index[s], index[t]);
        out.tree = Graph(static_cast<int>(out.bags.size()), std::move(edges));
        if (root >= 0)
            out.root = index[root];
        out.path = path;
        return out;
    }
};

} // namespace

int validate(const TreeDecomposition & dec, const Graph & f)
{
    const int nodes = dec.tree.order();
    if (static_cast<int>(dec.bags.size()) != nodes)
        throw DecompositionError("bag count " + std::to_string(dec.bags.size()) + " differs from tree order " + std::to_string(nodes));
    if (nodes == 0)
        throw DecompositionError("decomposition tree is empty");
    if (!is_connected(dec.tree) || static_cast<int>(dec.tree.size()) != nodes - 1)
        throw DecompositionError("decomposition tree is not a tree");
    if (dec.path && max_degree(dec.tree) > 2)
        throw DecompositionError("path decomposition tree is not a path");
    if (dec.root && (*dec.root < 0 || *dec.root >= nodes))
        throw DecompositionError("root " + std::to_string(*dec.root) + " is not a tree vertex");

    int width = -1;
    std::vector<std::vector<int>> occurs(f.order());
    for (int t = 0; t < nodes; ++t) {
        width = std::max(width, static_cast<int>(dec.bags[t].size()) - 1);
        for (int v : dec.bags[t]) {
            if (v < 0 || v >= f.order())
                throw DecompositionError("bag " + std::to_string(t) + " contains unknown vertex " + std::to_string(v));
            occurs[v].push_back(t);
        }
    }
    for (int v = 0; v < f.order(); ++v)
        if (occurs[v].empty())
            throw DecompositionError("vertex " + std::to_string(v) + " is not covered by any bag");
    for (auto [u, v] : f.edges()) {
        bool covered = false;
        for (const auto & bag : dec.bags)
            if (contains(bag, u) && contains(bag, v)) {
                covered = true;
                break;
            }
        if (!covered)
            throw DecompositionError("edge " + edge_text(u, v) + " is not contained in any bag");
    }
    for (int v = 0; v < f.order(); ++v) {
        auto & nodes_v = occurs[v];
        std::sort(nodes_v.begin(), nodes_v.end());
        nodes_v.erase(std::unique(nodes_v.begin(), nodes_v.end()), nodes_v.end());
        if (!is_connected(dec.tree.induced(nodes_v)))
            throw DecompositionError("occurrences of vertex " + std::to_string(v) + " do not form a subtree");
    }
    return width;
}

bool is_smooth(const TreeDecomposition & dec, int k)
{
    for (const auto & bag : dec.bags)
        if (static_cast<int>(bag.size()) != k)
            return false;
    for (auto [s, t] : dec.tree.edges())
        if (static_cast<int>(intersection(dec.bags[s], dec.bags[t]).size()) != k - 1)
            return false;
    return true;
}

TreeDecomposition smooth(const TreeDecomposition & dec, const Graph & f, int k)
{
    const int width = validate(dec, f);
    if (k < 1)
        throw DecompositionError("smooth: k must be at least 1");
    if (width > k - 1)
        throw DecompositionError("smooth: width " + std::to_string(width) + " exceeds k-1 = " + std::to_string(k - 1));
    if (f.order() < k)
        throw DecompositionError("smooth: graph has fewer than k vertices");

    Workspace ws(dec);
    // Contract inclusions and pad short bags until every bag has size k.
    while (true) {
        bool changed = false;
        for (int s = 0; s < static_cast<int>(ws.bags.size()) && !changed; ++s) {
            if (!ws.alive[s])
                continue;
            for (int t : ws.nbrs[s])
                if (includes(ws.bags[t], ws.bags[s])) {
                    ws.contract_into(s, t);
                    changed = true;
                    break;
                }
        }
        if (changed)
            continue;
        for (int s = 0; s < static_cast<int>(ws.bags.size()) && !changed; ++s) {
            if (!ws.alive[s] || static_cast<int>(ws.bags[s].size()) >= k)
                continue;
            int pick = -1;
            for (int t : ws.nbrs[s]) {
                auto extra = difference(ws.bags[t], ws.bags[s]);
                if (!extra.empty() && (pick < 0 || extra.front() < pick))
                    pick = extra.front();
            }
            if (pick < 0) {
                // Lone node: every vertex of F is in this bag already, so |bag| >= k.
                throw DecompositionError("smooth: internal error, cannot pad bag " + std::to_string(s));
            }
            ws.bags[s].insert(std::lower_bound(ws.bags[s].begin(), ws.bags[s].end(), pick), pick);
            changed = true;
        }
        if (!changed)
            break;
    }

    // Interpolate between adjacent bags sharing fewer than k - 1 vertices.
    std::vector<Edge> edges;
    for (int s = 0; s < static_cast<int>(ws.bags.size()); ++s)
        if (ws.alive[s])
            for (int t : ws.nbrs[s])
                if (s < t)
                    edges.emplace_back(s, t);
    for (auto [s, t] : edges) {
        const auto leave = difference(ws.bags[s], ws.bags[t]);
        const auto enter = difference(ws.bags[t], ws.bags[s]);
        if (leave.size() <= 1)
            continue;
        ws.unlink(s, t);
        int previous = s;
        std::vector<int> bag = ws.bags[s];
        for (std::size_t step = 0; step + 1 < leave.size(); ++step) {
            bag.erase(std::find(bag.begin(), bag.end(), leave[step]));
            bag.insert(std::lower_bound(bag.begin(), bag.end(), enter[step]), enter[step]);
            const int node = ws.add_node(bag);
            ws.link(previous, node);
            previous = node;
        }
        ws.link(previous, t);
    }
    return ws.finish(dec.path);
}

TreeDecomposition rewire_bounded_outdegree(const TreeDecomposition & dec, const Graph & f, int k)
{
    validate(dec, f);
    if (!dec.root)
        throw DecompositionError("rewire: a root must be designated");
    // Smooth, except that adjacent bags may coincide; those are contracted below.
    for (const auto & bag : dec.bags)
        if (static_cast<int>(bag.size()) != k)
            throw DecompositionError("rewire: decomposition is not smooth for k = " + std::to_string(k));
    for (auto [s, t] : dec.tree.edges())
        if (static_cast<int>(intersection(dec.bags[s], dec.bags[t]).size()) < k - 1)
            throw DecompositionError("rewire: decomposition is not smooth for k = " + std::to_string(k));

    Workspace ws(dec);
    std::vector<int> parent(ws.bags.size(), -1);
    std::vector<int> stack{ws.root};
    parent[ws.root] = ws.root;
    while (!stack.empty()) {
        const int r = stack.back();
        stack.pop_back();
        auto children_of = [&](int node) {
            std::vector<int> out;
            for (int c : ws.nbrs[node])
                if (c != parent[node])
                    out.push_back(c);
            return out;
        };

        // Contract children whose bag equals beta(r), then merge children carrying equal bags.
        for (bool again = true; again;) {
            again = false;
            for (int c : children_of(r))
                if (ws.bags[c] == ws.bags[r]) {
                    ws.contract_into(c, r);
                    again = true;
                    break;
                }
        }
        std::vector<int> children = children_of(r);
        std::map<std::vector<int>, int> by_bag;
        for (int c : children) {
            auto [it, fresh] = by_bag.try_emplace(ws.bags[c], c);
            if (!fresh) {
                const int keep = it->second;
                for (int g : std::vector<int>(ws.nbrs[c].begin(), ws.nbrs[c].end()))
                    if (g != r) {
                        ws.unlink(c, g);
                        ws.link(keep, g);
                    }
                ws.unlink(c, r);
                ws.alive[c] = 0;
            }
        }

        // Partition the remaining children by the vertex of beta(r) they drop.
        children = children_of(r);
        std::map<int, std::vector<int>> parts;
        for (int c : children) {
            const auto dropped = difference(ws.bags[r], ws.bags[c]);
            if (dropped.size() != 1)
                throw DecompositionError("rewire: child bag does not drop exactly one root vertex");
            parts[dropped.front()].push_back(c);
        }
        for (auto & [v, members] : parts) {
            const int rep = members.front();
            for (std::size_t i = 1; i < members.size(); ++i) {
                ws.unlink(r, members[i]);
                ws.link(rep, members[i]);
            }
        }
        for (int c : children_of(r)) {
            parent[c] = r;
            stack.push_back(c);
        }
    }
    return ws.finish(dec.path);
}

namespace {

std::vector<std::vector<int>> rooted_children(const TreeDecomposition & dec)
{
    const int nodes = dec.tree.order();
    std::vector<std::vector<int>> children(nodes);
    if (nodes == 0)
        return children;
    const int root = dec.root.value_or(0);
    std::vector<int> parent(nodes, -2);
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : dec.tree.neighbours(v))
            if (parent[w] == -2) {
                parent[w] = v;
                children[v].push_back(w);
                stack.push_back(w);
            }
    }
    return children;
}

} // namespace

int max_out_degree(const TreeDecomposition & dec)
{
    int best = 0;
    for (const auto & c : rooted_children(dec))
        best = std::max(best, static_cast<int>(c.size()));
    return best;
}

int rooted_depth(const TreeDecomposition & dec)
{
    if (dec.tree.order() == 0)
        return 0;
    const auto children = rooted_children(dec);
    std::vector<std::pair<int, int>> stack{{dec.root.value_or(0), 1}};
    int best = 0;
    while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        best = std::max(best, d);
        for (int c : children[v])
            stack.emplace_back(c, d + 1);
    }
    return best;
}

namespace {

constexpr int tiny_cap = 16;

std::vector<std::uint32_t> adjacency_masks(const Graph & f)
{
    if (f.order() > tiny_cap)
        throw DecompositionError("exact width oracle: more than " + std::to_string(tiny_cap) + " vertices");
    std::vector<std::uint32_t> adj(f.order(), 0);
    for (auto [u, v] : f.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

// Vertices outside S + v reachable from v through S.
int q_value(const std::vector<std::uint32_t> & adj, std::uint32_t s, int v)
{
    std::uint32_t inside = 1u << v;
    std::uint32_t frontier = inside;
    std::uint32_t reached = 0;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t rest = frontier; rest; rest &= rest - 1)
            next |= adj[std::countr_zero(rest)];
        reached |= next;
        const std::uint32_t grow = next & s & ~inside;
        inside |= grow;
        frontier = grow;
    }
    return std::popcount(reached & ~s & ~(1u << v));
}

// dp over subsets S of "already placed" vertices; returns the optimal value and an ordering.
template <typename Cost>
std::pair<int, std::vector<int>> ordering_dp(int n, Cost cost)
{
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<int> best(std::size_t{1} << n, std::numeric_limits<int>::max());
    std::vector<std::int8_t> choice(std::size_t{1} << n, -1);
    best[0] = -1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const std::uint32_t prev = s & ~(1u << v);
            const int value = std::max(best[prev], cost(prev, v));
            if (value < best[s]) {
                best[s] = value;
                choice[s] = static_cast<std::int8_t>(v);
            }
        }
    }
    std::vector<int> order;
    for (std::uint32_t s = full; s; s &= ~(1u << choice[s]))
        order.push_back(choice[s]);
    std::reverse(order.begin(), order.end());
    return {best[full], order};
}

std::pair<int, std::vector<int>> treewidth_dp(const Graph & f)
{
    const auto adj = adjacency_masks(f);
    if (f.order() == 0)
        return {-1, {}};
    return ordering_dp(f.order(), [&](std::uint32_t s, int v) { return q_value(adj, s, v); });
}

std::pair<int, std::vector<int>> pathwidth_dp(const Graph & f)
{
    const auto adj = adjacency_masks(f);
    if (f.order() == 0)
        return {-1, {}};
    // Vertex separation: placed vertices (including v) still having unplaced neighbours.
    auto [value, order] = ordering_dp(f.order(), [&](std::uint32_t s, int v) {
        const std::uint32_t placed = s | (1u << v);
        int boundary = 0;
        for (std::uint32_t rest = placed; rest; rest &= rest - 1)
            if (adj[std::countr_zero(rest)] & ~placed)
                ++boundary;
        return boundary;
    });
    return {value, order};
}

} // namespace

int exact_treewidth_tiny(const Graph & f) { return std::max(0, treewidth_dp(f).first); }

int exact_pathwidth_tiny(const Graph & f) { return std::max(0, pathwidth_dp(f).first); }

TreeDecomposition optimal_tree_decomposition_tiny(const Graph & f)
{
    const auto order = treewidth_dp(f).second;
    const int n = f.order();
    if (n == 0)
        throw DecompositionError("cannot decompose the empty graph");
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i)
        position[order[i]] = i;

    // Elimination game: bag(v) = v plus its later neighbours in the filled graph.
    std::vector<std::set<int>> fill(n);
    for (auto [u, v] : f.edges()) {
        fill[u].insert(v);
        fill[v].insert(u);
    }
    std::vector<std::vector<int>> bags(n);
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        std::vector<int> later;
        for (int w : fill[v])
            if (position[w] > i)
                later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b) {
                fill[later[a]].insert(later[b]);
                fill[later[b]].insert(later[a]);
            }
        bags[i] = later;
        bags[i].push_back(v);
        std::sort(bags[i].begin(), bags[i].end());
        int next = -1;
        for (int w : later)
            if (next < 0 || position[w] < next)
                next = position[w];
        parent[i] = next;
    }
    std::vector<Edge> edges;
    int previous_root = -1;
    for (int i = 0; i < n; ++i) {
        if (parent[i] >= 0)
            edges.emplace_back(i, parent[i]);
        else {
            if (previous_root >= 0)
                edges.emplace_back(previous_root, i);
            previous_root = i;
        }
    }
    TreeDecomposition dec;
    dec.tree = Graph(n, std::move(edges));
    dec.bags = std::move(bags);
    dec.root = n - 1;
    return dec;
}

TreeDecomposition optimal_path_decomposition_tiny(const Graph & f)
{
    const auto order = pathwidth_dp(f).second;
    const int n = f.order();
    if (n == 0)
        throw DecompositionError("cannot decompose the empty graph");
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i)
        position[order[i]] = i;
    std::vector<std::vector<int>> bags(n);
    for (int i = 0; i < n; ++i) {
        bags[i].push_back(order[i]);
        for (int j = 0; j < i; ++j) {
            const int u = order[j];
            for (int w : f.neighbours(u))
                if (position[w] >= i) {
                    bags[i].push_back(u);
                    break;
                }
        }
        std::sort(bags[i].begin(), bags[i].end());
    }
    TreeDecomposition dec;
    dec.tree = path_graph(n);
    dec.bags = std::move(bags);
    dec.root = 0;
    dec.path = true;
    return dec;
}

TreeDecomposition parse_decomposition(std::string_view text)
{
    const auto tokens = detail::tokenize(text);
    std::map<int, std::vector<int>> bags;
    std::vector<Edge> edges;
    std::optional<int> root;
    std::size_t pos = 0;
    auto need = [&](const char * what) -> const detail::Token & {
        if (pos >= tokens.size())
            throw DecompositionError(std::string("unexpected end of input: expected ") + what);
        return tokens[pos++];
    };
    auto number = [&](const char * what) { return static_cast<int>(detail::to_integer<DecompositionError>(need(what))); };
    while (pos < tokens.size()) {
        const auto & head = tokens[pos++];
        if (head.text == "bag") {
            const int t = number("tree vertex");
            const auto & colon = need("':'");
            if (colon.text != ":")
                throw DecompositionError("line " + std::to_string(colon.line) + ": expected ':' after bag id");
            std::vector<int> bag;
            while (pos < tokens.size() && tokens[pos].line == colon.line)
                bag.push_back(number("vertex"));
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
                throw DecompositionError("line " + std::to_string(head.line) + ": repeated vertex in bag");
            if (!bags.emplace(t, std::move(bag)).second)
                throw DecompositionError("line " + std::to_string(head.line) + ": bag " + std::to_string(t) + " declared twice");
        }
        else if (head.text == "tedge") {
            const int s = number("tree vertex");
            const int t = number("tree vertex");
            edges.emplace_back(s, t);
        }
        else if (head.text == "root") {
            root = number("tree vertex");
        }
        else {
            throw DecompositionError("line " + std::to_string(head.line) + ": unknown keyword '" + head.text + "'");
        }
    }
    TreeDecomposition dec;
    const int nodes = static_cast<int>(bags.size());
    for (int t = 0; t < nodes; ++t) {
        auto it = bags.find(t);
        if (it == bags.end())
            throw DecompositionError("tree vertices must be 0.." + std::to_string(nodes - 1) + "; bag " + std::to_string(t) + " missing");
        dec.bags.push_back(it->second);
    }
    try {
        dec.tree = Graph(nodes, std::move(edges));
    }
    catch (const GraphError & e) {
        throw DecompositionError(std::string("tree edges: ") + e.what());
    }
    dec.root = root;
    return dec;
}

std::string to_text(const TreeDecomposition & dec)
{
    std::string out;
    for (std::size_t t = 0; t < dec.bags.size(); ++t) {
        out += "bag " + std::to_string(t) + " :";
        for (int v : dec.bags[t])
            out += " " + std::to_string(v);
        out += "\n";
    }
    for (auto [s, t] : dec.tree.edges())
        out += "tedge " + std::to_string(s) + " " + std::to_string(t) + "\n";
    if (dec.root)
        out += "root " + std::to_string(*dec.root) + "\n";
    return out;
}

} // namespace homind
