#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homind/engine.hpp>
#include <homind/field.hpp>
#include <homind/oracle.hpp>
#include <homind/tensor.hpp>

using namespace homind;

namespace {

const Graph c6 = cycle_graph(6);
const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));

// Entries where the kernel-built tensor of the term differs from brute force mod p.
std::size_t kernel_mismatches(const BigInt & p, const TermMember & m, const Graph & g)
{
    const auto exact = hom_tensor(m.graph, g);
    return with_field(p, [&](const auto & field) {
        const auto blocks = single_block(g, m.graph.arity());
        const auto v = tensor_of_term(field, blocks, *m.term);
        std::size_t bad = 0;
        for (std::size_t x = 0; x < v.size(); ++x)
            bad += field.to_big(v[x]) != BigInt(exact[x]) % p;
        return bad;
    });
}

} // namespace

TEST_CASE("kernel examples")
{
    const Graph k2 = complete_graph(2);
    Field64 f(97);
    const auto blocks = single_block(k2, 2);
    auto v = ones(f, blocks);
    apply_A(f, blocks, 1, 2, v);
    CHECK(v == std::vector<std::uint64_t>{0, 1, 1, 0});
    auto again = v;
    apply_A(f, blocks, 1, 2, again);
    CHECK(again == v);

    // k = 1: J applied to the degree vector gives 2|E| everywhere
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(2 + trial % 6, 0.5, rng);
        const auto b1 = single_block(g, 1);
        std::vector<std::uint64_t> deg(g.order());
        for (int u = 0; u < g.order(); ++u)
            deg[u] = static_cast<std::uint64_t>(g.degree(u));
        apply_J(f, b1, 1, deg);
        for (auto e : deg)
            CHECK(e == 2 * g.size() % 97);
    }
}

TEST_CASE("J twice is n times J")
{
    Rng rng(5);
    Field64 f(1000003);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(2 + trial % 4, 0.5, rng);
        const auto blocks = single_block(g, 3);
        std::vector<std::uint64_t> v(blocks[0].size);
        for (auto & e : v)
            e = rng.below(1000003);
        for (int i = 1; i <= 3; ++i) {
            auto once = v;
            apply_J(f, blocks, i, once);
            auto twice = once;
            apply_J(f, blocks, i, twice);
            for (std::size_t x = 0; x < v.size(); ++x)
                CHECK(twice[x] == f.mul(f.from_u64(static_cast<std::uint64_t>(g.order())), once[x]));
        }
    }
}

TEST_CASE("schur identities")
{
    Field64 f(101);
    Rng rng(1);
    std::vector<std::uint64_t> a(50), b(50), c(50);
    for (std::size_t x = 0; x < 50; ++x) {
        a[x] = rng.below(101);
        b[x] = rng.below(101);
        c[x] = rng.below(101);
    }
    CHECK(schur(f, a, std::vector<std::uint64_t>(50, 1)) == a);
    CHECK(schur(f, a, b) == schur(f, b, a));
    CHECK(schur(f, schur(f, a, b), c) == schur(f, a, schur(f, b, c)));
}

TEST_CASE("kernel tensors equal brute-force hom tensors")
{
    Rng rng(128);
    const std::vector<BigInt> primes{2, 97, random_prime_bits(128, rng)};
    const auto bases = graphs_up_to(4);
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (int k = 1; k <= 3; ++k)
        for (const auto & m : enumerate_tw(k, 4, 4))
            for (const auto & g : bases)
                for (const auto & p : primes) {
                    bad += kernel_mismatches(p, m, g);
                    ++checked;
                }
    CHECK(checked > 0);
    CHECK(bad == 0);
}

TEST_CASE("stacked blocks act independently")
{
    Field64 f(97);
    const Graph g = path_graph(3);
    const Graph h = complete_graph(3);
    const auto blocks = stacked_blocks(g, h, 2);
    for (const auto & m : enumerate_tw(2, 3, 4)) {
        const auto v = tensor_of_term(f, blocks, *m.term);
        const auto eg = hom_tensor(m.graph, g);
        const auto eh = hom_tensor(m.graph, h);
        for (std::size_t x = 0; x < eg.size(); ++x)
            CHECK(v[x] == eg[x] % 97);
        for (std::size_t x = 0; x < eh.size(); ++x)
            CHECK(v[blocks[1].offset + x] == eh[x] % 97);
        CHECK(block_sum(f, blocks[0], v) == hom_count(soe(m.graph), g) % 97);
    }
}

TEST_CASE("echelon basis")
{
    Field64 f(7);
    EchelonBasis<Field64> basis(f);
    CHECK(basis.insert({1, 2, 3}));
    CHECK(basis.insert({0, 1, 1}));
    CHECK_FALSE(basis.insert({2, 5, 0}));
    CHECK(basis.contains({3, 6, 9 % 7}));
    CHECK_FALSE(basis.contains({0, 0, 1}));
    CHECK(basis.insert({0, 0, 5}));
    CHECK(basis.size() == 3);
    CHECK_FALSE(basis.insert({4, 4, 4}));
}

TEST_CASE("modhomind fixtures")
{
    Rng rng(77);
    const auto tw3 = builtin_automaton("tw-all", 3);
    const auto v = modhomind(c6, two_triangles, tw3, 101);
    CHECK_FALSE(v.accept);
    REQUIRE(v.witness.has_value());
    CHECK(hom_count(*v.witness, c6) % 101 != hom_count(*v.witness, two_triangles) % 101);
    CHECK(is_isomorphic_small(*v.witness, complete_graph(3)));
    REQUIRE(v.rejecting_prime.has_value());
    CHECK(*v.rejecting_prime == 101);

    const auto tw2 = builtin_automaton("tw-all", 2);
    for (int trial = 0; trial < 20; ++trial) {
        const BigInt p = random_prime_bits(20 + trial % 40, rng);
        const auto r = modhomind(c6, two_triangles, tw2, p);
        CHECK(r.accept);
        CHECK_FALSE(r.rejecting_prime.has_value());
        CHECK(r.basis_size <= 2 * 36);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(1 + trial % 6, 0.5, rng);
        const Graph h = random_permuted(g, rng);
        CHECK(modhomind(g, h, tw2, 1000003).accept);
        CHECK(modhomind(g, h, tw3, 97).accept);
        CHECK(modhomind_pw(g, h, tw2, 2).accept);
    }
    CHECK_THROWS_AS(modhomind(c6, c6, tw2, 100), EngineError);
}

TEST_CASE("basis stays within |Q| 2n^k")
{
    Rng rng(9);
    const auto paths = builtin_automaton("paths", 2);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(3 + trial % 4, 0.5, rng);
        const Graph h = random_permuted(g, rng);
        const auto v = modhomind(g, h, paths, 1009);
        const std::size_t n = static_cast<std::size_t>(g.order());
        CHECK(v.basis_size <= static_cast<std::size_t>(paths.states) * 2 * n * n);
    }
}

TEST_CASE("closure is order independent")
{
    Rng rng(10);
    const auto tw2 = builtin_automaton("tw-all", 2);
    const auto paths = builtin_automaton("paths", 2);
    for (int fixture = 0; fixture < 6; ++fixture) {
        const Graph g = random_graph(4 + fixture % 3, 0.5, rng);
        const Graph h = fixture < 3 ? random_permuted(g, rng) : random_graph(4 + fixture % 3, 0.5, rng);
        const auto aut = fixture % 2 ? paths : tw2;
        const auto base = modhomind(g, h, aut, 10007);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            EngineOptions options;
            options.order_seed = seed;
            const auto v = modhomind(g, h, aut, 10007, options);
            CHECK(v.accept == base.accept);
            if (base.accept)
                CHECK(v.basis_size == base.basis_size);
        }
    }
}

TEST_CASE("modhomind agrees with the brute-force treewidth-1 oracle")
{
    Rng rng(2718);
    const auto tw2 = builtin_automaton("tw-all", 2);
    ClassSpec forests = parse_class_spec("tw:1");
    const auto members = class_members(forests, 7);
    int rejects = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 3 + trial % 4;
        const Graph g = random_graph(n, 0.5, rng);
        const Graph h = trial % 3 == 0 ? random_permuted(g, rng) : random_graph(n, 0.5, rng);
        const BigInt p = random_prime_bits(24, rng);
        const auto v = modhomind(g, h, tw2, p);
        bool equal = true;
        for (const auto & f : members)
            if (hom_count(f, g) % p != hom_count(f, h) % p) {
                equal = false;
                break;
            }
        CHECK(v.accept == equal);
        rejects += !v.accept;
    }
    CHECK(rejects > 0);
}

TEST_CASE("pathwidth variant")
{
    const auto paths = builtin_automaton("paths", 2);
    Rng rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 5;
        const Graph g = random_graph(n, 0.5, rng);
        const Graph h = random_graph(n, 0.5, rng);
        const BigInt p = random_prime_bits(31, rng);
        CHECK(modhomind_pw(g, h, paths, p).accept == paths_oracle(g, h, p));
    }
    CHECK(modhomind_pw(c6, two_triangles, paths, 1000003).accept);
    CHECK_FALSE(modhomind_pw(path_graph(4), star_graph(3), paths, 1000003).accept);

    // tw acceptance implies pw acceptance on tw-all
    const auto tw2 = builtin_automaton("tw-all", 2);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(5, 0.5, rng);
        const Graph h = random_graph(5, 0.5, rng);
        if (modhomind(g, h, tw2, 101).accept)
            CHECK(modhomind_pw(g, h, tw2, 101).accept);
    }
}

TEST_CASE("randomized mode")
{
    const auto tw3 = builtin_automaton("tw-all", 3);
    RandomizedOptions options;
    options.seed = 5;
    const auto v = homind_randomized(c6, two_triangles, tw3, Variant::Treewidth, options);
    CHECK_FALSE(v.accept);
    CHECK(v.mode == VerdictMode::Randomized);
    REQUIRE(v.rejecting_prime.has_value());
    CHECK(*v.rejecting_prime > 12);

    const auto tw2 = builtin_automaton("tw-all", 2);
    options.seed = 1;
    const auto a = homind_randomized(c6, two_triangles, tw2, Variant::Treewidth, options);
    CHECK(a.accept);
    CHECK(a.trials == 295);
    CHECK(a.trials == a.primes_used.size() + a.composite_draws);
    const Bounds b = bound_tw(6, 2, 1);
    for (const auto & p : a.primes_used) {
        CHECK(p > b.L);
        CHECK(p <= b.L * b.L);
        CHECK(is_prime(p));
    }

    // the same seed gives the same draws; threads do not change the verdict
    const auto again = homind_randomized(c6, two_triangles, tw2, Variant::Treewidth, options);
    CHECK(again.primes_used == a.primes_used);
    options.parallel = 3;
    const auto threaded = homind_randomized(c6, two_triangles, tw2, Variant::Treewidth, options);
    CHECK(threaded.accept == a.accept);
    CHECK(threaded.primes_used == a.primes_used);

    Rng rng(4);
    for (int trial = 0; trial < 5; ++trial) {
        const Graph g = random_graph(2 + trial, 0.5, rng);
        RandomizedOptions o;
        o.seed = static_cast<std::uint64_t>(trial);
        CHECK(homind_randomized(g, random_permuted(g, rng), tw2, Variant::Pathwidth, o).accept);
    }
}

TEST_CASE("prime-bits mode is flagged heuristic")
{
    const auto tw3 = builtin_automaton("tw-all", 3);
    RandomizedOptions options;
    options.seed = 3;
    const auto v = homind_prime_bits(c6, two_triangles, tw3, Variant::Treewidth, 32, 4, options);
    CHECK(v.heuristic);
    CHECK(v.mode == VerdictMode::PrimeBits);
    CHECK_FALSE(v.accept);
    REQUIRE(v.rejecting_prime.has_value());
    CHECK(bit_length(*v.rejecting_prime) == 32);
}

TEST_CASE("deterministic CRT mode")
{
    CHECK(crt_prime_count(4, 2, 1) == 17);
    const auto paths = builtin_automaton("paths", 2);
    const auto v = homind_deterministic_crt(path_graph(4), star_graph(3), paths);
    CHECK_FALSE(v.accept);
    CHECK(v.mode == VerdictMode::DeterministicCrt);
    REQUIRE(v.witness.has_value());
    CHECK(hom_count(*v.witness, path_graph(4)) != hom_count(*v.witness, star_graph(3)));

    Rng rng(8);
    const Graph g = random_graph(5, 0.5, rng);
    const auto iso = homind_deterministic_crt(g, random_permuted(g, rng), builtin_automaton("tw-all", 2));
    CHECK(iso.accept);
    CHECK(iso.primes_used.size() == crt_prime_count(5, 2, 1));
    BigInt product = 1;
    for (const auto & p : iso.primes_used)
        product *= p;
    CHECK(product > boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(bound_pw(5, 2, 1).N)));
    CHECK_THROWS_AS(homind_deterministic_crt(g, g, builtin_automaton("tw-all", 2), 3), EngineError);
}

TEST_CASE("small none is surfaced")
{
    auto aut = builtin_automaton("tw-all", 2);
    aut.small = SmallPolicy::None;
    const auto v = modhomind(Graph(1), Graph(2), aut, 101);
    CHECK(v.small_none);
    const auto text = format_verdict(v);
    CHECK(text.find("small_stage=none") != std::string::npos);
}

TEST_CASE("verdict rendering")
{
    const auto v = modhomind(c6, two_triangles, builtin_automaton("tw-all", 3), 101);
    const auto text = format_verdict(v);
    CHECK(text.rfind("verdict=reject\n", 0) == 0);
    CHECK(text.find("prime=101\n") != std::string::npos);
    CHECK(text.find("rejecting_prime=101\n") != std::string::npos);
    CHECK(text.find("witness=n=3;0-1,0-2,1-2\n") != std::string::npos);
    const auto json = verdict_json(v);
    CHECK(json.find("\"verdict\":\"reject\"") != std::string::npos);
}
