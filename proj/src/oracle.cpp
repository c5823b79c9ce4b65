#include <homind/decomposition.hpp>
#include <homind/oracle.hpp>

#include <set>

namespace homind {

std::vector<std::uint64_t> hom_tensor(const LabelledGraph & f, const Graph & g, std::uint64_t budget)
{
    const auto slots = f.slots();
    const int nf = f.graph.order();
    const auto ng = static_cast<std::uint64_t>(g.order());
    std::uint64_t entries = 1;
    for (std::size_t s = 0; s < slots.size(); ++s)
        entries *= ng;
    std::vector<std::uint64_t> tensor(entries, 0);
    if (ng == 0)
        return tensor;
    std::uint64_t maps = 1;
    for (int v = 0; v < nf; ++v) {
        maps *= ng;
        if (maps > budget)
            throw OracleTooLarge("hom_tensor: " + std::to_string(g.order()) + "^" + std::to_string(nf) + " maps exceed the budget");
    }
    std::vector<int> image(nf, 0);
    for (std::uint64_t m = 0; m < maps; ++m) {
        bool hom = true;
        for (const auto & [a, b] : f.graph.edges())
            if (!g.adjacent(image[a], image[b])) {
                hom = false;
                break;
            }
        if (hom) {
            std::uint64_t index = 0;
            for (int s : slots)
                index = index * ng + static_cast<std::uint64_t>(image[s]);
            ++tensor[index];
        }
        for (int v = nf - 1; v >= 0; --v) {
            if (++image[v] < g.order())
                break;
            image[v] = 0;
        }
    }
    return tensor;
}

ClassSpec parse_class_spec(const std::string & text)
{
    ClassSpec spec;
    auto width_of = [&](const std::string & rest) {
        try {
            std::size_t used = 0;
            const int w = std::stoi(rest, &used);
            if (used != rest.size() || w < 0)
                throw OracleError("");
            return w;
        }
        catch (const std::exception &) {
            throw OracleError("bad width in class spec '" + text + "'");
        }
    };
    if (text == "all")
        spec.kind = ClassSpec::Kind::All;
    else if (text == "paths")
        spec.kind = ClassSpec::Kind::Paths;
    else if (text == "lasserre-t1")
        spec.kind = ClassSpec::Kind::LasserreT1;
    else if (text.rfind("tw:", 0) == 0 || text.rfind("tw<=", 0) == 0) {
        spec.kind = ClassSpec::Kind::Treewidth;
        spec.width = width_of(text.substr(text.find_first_of(":=") + 1));
    }
    else if (text.rfind("pw:", 0) == 0 || text.rfind("pw<=", 0) == 0) {
        spec.kind = ClassSpec::Kind::Pathwidth;
        spec.width = width_of(text.substr(text.find_first_of(":=") + 1));
    }
    else
        throw OracleError("unknown class spec '" + text + "' (expected all, tw:<w>, pw:<w>, paths, lasserre-t1)");
    return spec;
}

std::string to_string(const ClassSpec & spec)
{
    switch (spec.kind) {
    case ClassSpec::Kind::All:
        return "all";
    case ClassSpec::Kind::Treewidth:
        return "tw:" + std::to_string(spec.width);
    case ClassSpec::Kind::Pathwidth:
        return "pw:" + std::to_string(spec.width);
    case ClassSpec::Kind::Paths:
        return "paths";
    case ClassSpec::Kind::LasserreT1:
        return "lasserre-t1";
    case ClassSpec::Kind::Automaton:
        return "automaton:k=" + std::to_string(spec.automaton ? spec.automaton->k : 0);
    }
    return "unknown";
}

std::vector<Graph> class_members(const ClassSpec & spec, int max_size)
{
    std::vector<Graph> out;
    if (max_size <= 0)
        return out;
    switch (spec.kind) {
    case ClassSpec::Kind::All:
        return graphs_up_to(max_size);
    case ClassSpec::Kind::Treewidth:
        for (auto & g : graphs_up_to(max_size))
            if (exact_treewidth_tiny(g) <= spec.width)
                out.push_back(g);
        return out;
    case ClassSpec::Kind::Pathwidth:
        for (auto & g : graphs_up_to(max_size))
            if (exact_pathwidth_tiny(g) <= spec.width)
                out.push_back(g);
        return out;
    case ClassSpec::Kind::Paths:
        for (int n = 1; n <= max_size; ++n)
            out.push_back(path_graph(n));
        return out;
    case ClassSpec::Kind::LasserreT1:
        return enumerate_lasserre(1, spec.depth, max_size, spec.budget);
    case ClassSpec::Kind::Automaton: {
        if (!spec.automaton)
            throw OracleError("automaton class without an automaton");
        const auto & aut = *spec.automaton;
        std::set<std::vector<std::uint64_t>> seen;
        auto add = [&](const Graph & g) {
            if (g.order() <= max_size && seen.insert(canonical_code(g)).second)
                out.push_back(g);
        };
        for (auto & g : graphs_up_to(std::min(aut.k, max_size)))
            if (aut.small_member(g))
                add(g);
        const auto terms = enumerate_tw_tagged(aut.k, max_size, max_size, [&](const TermPtr & t) { return static_cast<std::uint64_t>(trace(aut, t)); }, spec.budget);
        for (const auto & m : terms)
            if (aut.accepts(trace(aut, m.term)))
                add(soe(m.graph));
        return out;
    }
    }
    return out;
}

OracleResult homind_bruteforce(const Graph & g, const Graph & h, const ClassSpec & spec, int max_size, const std::optional<BigInt> & modulus)
{
    OracleResult result;
    for (const auto & f : class_members(spec, max_size)) {
        ++result.members;
        BigInt a = hom_count(f, g);
        BigInt b = hom_count(f, h);
        if (modulus) {
            a %= *modulus;
            b %= *modulus;
        }
        if (a != b) {
            result.indistinguishable = false;
            result.witness = f;
            result.hom_g = a;
            result.hom_h = b;
            return result;
        }
    }
    return result;
}

OracleResult homind_size_bruteforce(const Graph & g, const Graph & h, int k)
{
    if (k > 5)
        throw OracleError("homind_size_bruteforce supports k <= 5");
    return homind_bruteforce(g, h, ClassSpec{}, k);
}

bool paths_oracle(const Graph & g, const Graph & h, const std::optional<BigInt> & modulus)
{
    const int n = std::max(g.order(), h.order());
    const int len = std::max(0, 2 * n - 1);
    auto wg = walk_counts(g, len);
    auto wh = walk_counts(h, len);
    for (std::size_t i = 0; i < wg.size(); ++i) {
        BigInt a = wg[i];
        BigInt b = wh[i];
        if (modulus) {
            a %= *modulus;
            b %= *modulus;
        }
        if (a != b)
            return false;
    }
    return true;
}

} // namespace homind
