#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homind/engine.hpp>
#include <homind/oracle.hpp>
#include <homind/wl_cfi.hpp>

using namespace homind;

namespace {

const Graph c6 = cycle_graph(6);
const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));

int expected_cfi_order(const Graph & base)
{
    int total = 0;
    for (int v = 0; v < base.order(); ++v)
        total += 1 << (base.degree(v) - 1);
    return total;
}

Graph random_connected(int n, double p, Rng & rng)
{
    for (;;) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g))
            return g;
    }
}

} // namespace

TEST_CASE("cfi on K3")
{
    const auto even = cfi(complete_graph(3), 0);
    const auto odd = cfi(complete_graph(3), 1);
    CHECK(even.result.order() == 6);
    CHECK(odd.result.order() == 6);
    CHECK_FALSE(is_isomorphic_small(even.result, odd.result));
    CHECK(hom_count(complete_graph(3), even.result) != hom_count(complete_graph(3), odd.result));
    CHECK(even.legend.size() == 6);
    CHECK_THROWS_AS(cfi(Graph(3, {{0, 1}}), 0), CfiError);
}

TEST_CASE("cfi invariants")
{
    Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph base = random_connected(2 + trial % 5, 0.6, rng);
        for (int parity = 0; parity <= 1; ++parity) {
            const auto inst = cfi(base, parity);
            CHECK(inst.result.order() == expected_cfi_order(base));
            for (const auto & v : inst.legend) {
                int sum = 0;
                for (int s : v.assignment)
                    sum += s;
                const int u = (parity && v.base_vertex == 0) ? 1 : 0;
                CHECK(sum % 2 == u);
                CHECK(static_cast<int>(v.assignment.size()) == base.degree(v.base_vertex));
            }
        }
        CHECK_FALSE(is_isomorphic_small(cfi(base, 0).result, cfi(base, 1).result, 64));
    }
}

TEST_CASE("legend text")
{
    const auto inst = cfi(path_graph(3), 0);
    const auto text = legend_text(inst);
    int lines = 0;
    for (char c : text)
        lines += c == '\n';
    CHECK(lines == inst.result.order() + 1);
    CHECK(text.rfind("# ", 0) == 0);
}

TEST_CASE("wl_refine fixtures")
{
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(2 + trial % 6, 0.5, rng);
        const Graph h = random_permuted(g, rng);
        CHECK(wl_refine(g, h, 1));
        CHECK(wl_refine(g, h, 2));
    }
    CHECK(wl_refine(c6, two_triangles, 1));
    CHECK_FALSE(wl_refine(c6, two_triangles, 2));
    const auto even = cfi(complete_graph(3), 0).result;
    const auto odd = cfi(complete_graph(3), 1).result;
    CHECK(wl_refine(even, odd, 1));
    CHECK_FALSE(wl_refine(even, odd, 2));
    CHECK_FALSE(wl_refine(path_graph(4), star_graph(3), 1));
    CHECK_FALSE(wl_refine(Graph(3), Graph(4), 1));
    CHECK_THROWS_AS(wl_refine(c6, c6, 3, 100), WlError);
}

TEST_CASE("1-WL agrees with colour refinement on trees")
{
    // two non-isomorphic trees are always told apart by 1-WL
    CHECK_FALSE(wl_refine(path_graph(5), Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}), 1));
}

TEST_CASE("WL agrees with modhomind at arity k + 1")
{
    Rng rng(23);
    std::vector<std::pair<Graph, Graph>> pairs{{c6, two_triangles}, {path_graph(4), star_graph(3)}};
    for (int trial = 0; trial < 6; ++trial) {
        const Graph g = random_graph(5, 0.5, rng);
        pairs.emplace_back(g, trial % 2 ? random_permuted(g, rng) : random_graph(5, 0.5, rng));
    }
    for (const auto & [g, h] : pairs)
        for (int k = 1; k <= 2; ++k) {
            const bool wl = wl_refine(g, h, k);
            const auto aut = builtin_automaton("tw-all", k + 1);
            for (int i = 0; i < 3; ++i) {
                const BigInt p = random_prime_bits(40, rng);
                CHECK(modhomind(g, h, aut, p).accept == wl);
            }
        }
}

TEST_CASE("wl hardness instances")
{
    const auto one = gen_wl_hardness(complete_graph(3), 1);
    CHECK(one.first.order() == 6);
    CHECK(one.second.order() == 6);
    CHECK(one.k == 1);
    CHECK(wl_refine(one.first, one.second, 1));
    const auto two = gen_wl_hardness(complete_graph(3), 2);
    CHECK_FALSE(wl_refine(two.first, two.second, 2));

    // isolated vertices are dropped and components chained into one
    const Graph split = disjoint_union(disjoint_union(complete_graph(3), Graph(1)), complete_graph(2));
    const Graph base = wl_hardness_base(split);
    CHECK(base.order() == 5);
    CHECK(is_connected(base));
    const auto inst = gen_wl_hardness(split, 2);
    CHECK(inst.first.order() == expected_cfi_order(base));
}

TEST_CASE("clique reduction")
{
    const Graph k3 = complete_graph(3);
    const auto with = gen_clique_reduction(disjoint_union(k3, path_graph(2)), 3);
    CHECK(with.k == 3);
    CHECK(with.first.order() == 5 * cfi(k3, 0).result.order());
    const auto r = homind_size_bruteforce(with.first, with.second, 3);
    CHECK_FALSE(r.indistinguishable);
    REQUIRE(r.witness.has_value());
    CHECK(is_isomorphic_small(*r.witness, k3));

    const auto without = gen_clique_reduction(cycle_graph(4), 3);
    CHECK(homind_size_bruteforce(without.first, without.second, 3).indistinguishable);
    CHECK_THROWS_AS(gen_clique_reduction(k3, 5), CfiError);
}
