#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homind/graph.hpp>
#include <homind/wl_cfi.hpp>

using namespace homind;

TEST_CASE("parse: triangle, single vertex, self-loop")
{
    const Graph k3 = parse_graph("n 3 m 3\n0 1\n1 2\n0 2\n");
    CHECK(k3 == complete_graph(3));

    const Graph one = parse_graph("n 1 m 0\n");
    CHECK(one.order() == 1);
    CHECK(one.size() == 0);

    CHECK_THROWS_AS(parse_graph("n 2 m 1\n1 1\n"), GraphError);
}

TEST_CASE("parse: malformed input")
{
    CHECK_THROWS_AS(parse_graph("n 2 m 2\n0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_graph("n 2 m 1\n0 2\n"), GraphError);
    CHECK_THROWS_AS(parse_graph("n 3 m 2\n0 1\n1 0\n"), GraphError);
    CHECK_THROWS_AS(parse_graph("m 1 n 2\n0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_graph("n 2 m 1\n0 1\n1 0\n"), GraphError);
    CHECK_THROWS_AS(parse_graph("n -1 m 0\n"), GraphError);
}

TEST_CASE("parse: comments and roundtrip")
{
    const Graph g = parse_graph("# comment\nn 4 m 2 # trailing\n0 3\n# mid\n2 1\n");
    CHECK(g.order() == 4);
    CHECK(g.adjacent(3, 0));
    CHECK(g.adjacent(1, 2));
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph r = random_graph(1 + trial % 7, 0.4, rng);
        CHECK(parse_graph(to_text(r)) == r);
    }
}

TEST_CASE("hom_count examples")
{
    const Graph c6 = cycle_graph(6);
    const Graph k3k3 = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(hom_count(complete_graph(2), c6) == 12);
    CHECK(hom_count(complete_graph(3), c6) == 0);
    CHECK(hom_count(complete_graph(3), k3k3) == 12);
    CHECK(hom_count(Graph(0), c6) == 1);
    CHECK(hom_count(Graph(3), Graph(2)) == 8);
    CHECK(hom_count(Graph(1), Graph(0)) == 0);
}

TEST_CASE("hom_count budget")
{
    CHECK_THROWS_AS(hom_count(cycle_graph(12), complete_graph(8), 1000), OracleTooLarge);
}

TEST_CASE("categorical product")
{
    const Graph p = categorical_product(complete_graph(2), complete_graph(2));
    CHECK(p.order() == 4);
    CHECK(p.size() == 2);
    CHECK(max_degree(p) == 1);
    CHECK(categorical_product(cycle_graph(5), Graph(0)).order() == 0);

    Rng rng(11);
    const Graph k3 = complete_graph(3);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_graph(2 + trial % 4, 0.6, rng);
        const Graph h = random_graph(2 + (trial / 3) % 4, 0.6, rng);
        CHECK(hom_count(k3, categorical_product(g, h)) == hom_count(k3, g) * hom_count(k3, h));
    }
}

TEST_CASE("disjoint union")
{
    const Graph k3 = complete_graph(3);
    const Graph u = disjoint_union(k3, k3);
    CHECK(u.order() == 6);
    CHECK(u.size() == 6);
    CHECK(disjoint_union(cycle_graph(5), Graph(0)) == cycle_graph(5));

    Rng rng(3);
    const Graph k2 = complete_graph(2);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_graph(1 + trial % 5, 0.5, rng);
        const Graph h = random_graph(1 + (trial / 2) % 5, 0.5, rng);
        CHECK(hom_count(k2, disjoint_union(g, h)) == hom_count(k2, g) + hom_count(k2, h));
        CHECK(hom_count(path_graph(3), disjoint_union(g, h)) == hom_count(path_graph(3), g) + hom_count(path_graph(3), h));
    }
}

TEST_CASE("walk counts")
{
    CHECK(walk_counts(cycle_graph(6), 2)[2] == 24);
    CHECK(walk_counts(path_graph(3), 1)[1] == 4);
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(1 + trial, 0.3, rng);
        const auto w = walk_counts(g, 3);
        CHECK(w[0] == g.order());
        CHECK(w[1] == 2 * static_cast<int>(g.size()));
        // walks of length l are homomorphisms from the path on l + 1 vertices
        CHECK(w[2] == hom_count(path_graph(3), g));
        CHECK(w[3] == hom_count(path_graph(4), g));
    }
    const std::vector<BigInt> p4{4, 6, 10, 16, 26, 42, 68, 110};
    const std::vector<BigInt> k13{4, 6, 12, 18, 36, 54, 108, 162};
    CHECK(walk_counts(path_graph(4), 7) == p4);
    CHECK(walk_counts(star_graph(3), 7) == k13);
}

TEST_CASE("isomorphism")
{
    Rng rng(9);
    const Graph c6 = cycle_graph(6);
    CHECK(is_isomorphic_small(c6, random_permuted(c6, rng)));
    CHECK_FALSE(is_isomorphic_small(c6, disjoint_union(complete_graph(3), complete_graph(3))));
    CHECK_FALSE(is_isomorphic_small(cfi(complete_graph(3), 0).result, cfi(complete_graph(3), 1).result));
    CHECK_FALSE(is_isomorphic_small(path_graph(4), star_graph(3)));
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(1 + trial % 8, 0.5, rng);
        const Graph h = random_permuted(g, rng);
        CHECK(is_isomorphic_small(g, h));
        CHECK(canonical_code(g) == canonical_code(h));
    }
}

TEST_CASE("graph counts up to isomorphism")
{
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n)
        CHECK(graphs_of_order(n).size() == expected[n]);
    CHECK(graphs_up_to(4).size() == 1 + 2 + 4 + 11);
}

TEST_CASE("graph predicates")
{
    CHECK(is_path_graph(Graph(1)));
    CHECK(is_path_graph(path_graph(5)));
    CHECK_FALSE(is_path_graph(star_graph(3)));
    CHECK_FALSE(is_path_graph(Graph(2)));
    CHECK(is_forest(star_graph(4)));
    CHECK_FALSE(is_forest(cycle_graph(3)));
    CHECK(is_connected(grid_graph(2, 3)));
    CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("canonical code with a fixed prefix")
{
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 8;
        const int fixed = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
        const Graph g = random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v)
            perm[v] = v;
        for (int v = n - 1; v > fixed; --v)
            std::swap(perm[v], perm[fixed + static_cast<int>(rng.below(static_cast<std::uint64_t>(v - fixed + 1)))]);
        CHECK(canonical_code(g, fixed) == canonical_code(g.relabelled(perm), fixed));
    }
    // swapping the two labelled ends of P3 is not allowed to collapse P3 labelled at an end and in the middle
    const Graph end_first(3, {{0, 1}, {1, 2}});
    const Graph mid_first(3, {{0, 1}, {0, 2}});
    CHECK(canonical_code(end_first, 1) != canonical_code(mid_first, 1));
    CHECK(canonical_code(end_first, 0) == canonical_code(mid_first, 0));
}

TEST_CASE("graphs on 8 vertices")
{
    CHECK(graphs_of_order(8).size() == 12346);
}
