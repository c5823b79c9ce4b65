#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homind/automaton.hpp>

#include <string>

using namespace homind;

namespace {

std::string error_of(const std::string & text)
{
    try {
        parse_automaton(text);
    }
    catch (const AutomatonError & e) {
        return e.what();
    }
    return "";
}

bool mentions(const std::string & haystack, const std::string & needle)
{
    return haystack.find(needle) != std::string::npos;
}

const char * two_state_k1 = R"(k 1
states 2
start 0
accept 0
glue 0 0 -> 0
glue 0 1 -> 1
glue 1 1 -> 1
J 1 0 -> 1
J 1 1 -> 1
small all
)";

} // namespace

TEST_CASE("parse tw-all text")
{
    const auto aut = parse_automaton("k 2\nstates 1\nstart 0\naccept 0\nglue 0 0 -> 0\nJ 1 0 -> 0\nJ 2 0 -> 0\nA 1 2 0 -> 0\nsmall all\n");
    CHECK(aut.states == 1);
    CHECK(aut.accepts(0));
    CHECK(to_text(aut) == to_text(builtin_automaton("tw-all", 2)));
    CHECK(to_text(parse_automaton(to_text(aut))) == to_text(aut));
}

TEST_CASE("parse errors")
{
    std::string missing_j = two_state_k1;
    missing_j.replace(missing_j.find("J 1 0 -> 1\n"), 11, "");
    const auto e1 = error_of(missing_j);
    CHECK(mentions(e1, "J 1 0"));

    std::string asym = two_state_k1;
    asym.replace(asym.find("glue 0 1 -> 1\n"), 14, "glue 0 1 -> 1\nglue 1 0 -> 0\n");
    CHECK(mentions(error_of(asym), "glue"));

    std::string bad_state = two_state_k1;
    bad_state.replace(bad_state.find("J 1 1 -> 1"), 10, "J 1 1 -> 7");
    CHECK_FALSE(error_of(bad_state).empty());

    std::string no_footer = two_state_k1;
    no_footer.replace(no_footer.find("small all\n"), 10, "");
    CHECK_FALSE(error_of(no_footer).empty());

    CHECK_FALSE(error_of("k 2\nstates 1\nstart 0\naccept 0\nglue 0 0 -> 0\nJ 1 0 -> 0\nJ 2 0 -> 0\nsmall all\n").empty());
    CHECK(error_of(two_state_k1).empty());
}

TEST_CASE("small list")
{
    const auto aut = parse_automaton("k 2\nstates 1\nstart 0\naccept 0\nglue 0 0 -> 0\nJ 1 0 -> 0\nJ 2 0 -> 0\nA 1 2 0 -> 0\nsmall list\nn 1 m 0\nn 2 m 1\n0 1\n");
    CHECK(aut.small == SmallPolicy::List);
    CHECK(aut.small_member(Graph(1)));
    CHECK(aut.small_member(complete_graph(2)));
    CHECK_FALSE(aut.small_member(Graph(2)));
    CHECK(to_text(parse_automaton(to_text(aut))) == to_text(aut));
    CHECK_THROWS_AS(parse_automaton("k 1\nstates 1\nstart 0\naccept 0\nglue 0 0 -> 0\nJ 1 0 -> 0\nsmall list\nn 2 m 0\n"), AutomatonError);
}

TEST_CASE("builtins")
{
    CHECK(builtin_automaton("tw-all", 3).states == 1);
    CHECK(builtin_automaton("tw-all", 3).k == 3);
    CHECK_THROWS_AS(builtin_automaton("paths", 3), AutomatonError);
    CHECK_THROWS_AS(builtin_automaton("nope", 2), AutomatonError);

    const auto paths = builtin_automaton("paths", 2);
    check_automaton(paths);
    // P3 with labels on an end and the middle
    const auto p3 = make_A(1, 2, make_J(1, make_A(1, 2, make_one(2))));
    CHECK(is_path_graph(soe(val(p3))));
    CHECK(soe(val(p3)).order() == 3);
    CHECK(paths.accepts(trace(paths, p3)));
    // K3 has treewidth 2 and no arity-2 term; the claw is the smallest tree that is not a path
    const auto claw = make_glue(make_A(1, 2, make_one(2)), make_J(1, make_A(1, 2, make_J(1, make_A(1, 2, make_one(2))))));
    CHECK(is_isomorphic_small(soe(val(claw)), star_graph(3)));
    CHECK_FALSE(paths.accepts(trace(paths, claw)));
    const auto tw3 = builtin_automaton("tw-all", 3);
    const auto k3 = make_A(1, 2, make_A(1, 3, make_A(2, 3, make_one(3))));
    CHECK(is_isomorphic_small(soe(val(k3)), complete_graph(3)));
    CHECK(tw3.accepts(trace(tw3, k3)));
}

TEST_CASE("acceptance matches membership on enumerated terms")
{
    const auto paths = builtin_automaton("paths", 2);
    for (const auto & m : enumerate_tw(2, 4, 7))
        CHECK_MESSAGE(paths.accepts(trace(paths, m.term)) == is_path_graph(soe(m.graph)), to_text(m.term));
}

TEST_CASE("trace is invariant under re-association of glue")
{
    const auto paths = builtin_automaton("paths", 2);
    const auto members = enumerate_tw(2, 3, 5);
    Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto & a = members[rng.below(members.size())].term;
        const auto & b = members[rng.below(members.size())].term;
        const auto & c = members[rng.below(members.size())].term;
        CHECK(trace(paths, make_glue(make_glue(a, b), c)) == trace(paths, make_glue(a, make_glue(b, c))));
        CHECK(trace(paths, make_glue(a, b)) == trace(paths, make_glue(b, a)));
    }
}

TEST_CASE("validation")
{
    const auto tw = validate_automaton(builtin_automaton("tw-all", 2), builtin_membership("tw-all", 2), 5);
    CHECK(tw.ok);

    const auto paths = builtin_automaton("paths", 2);
    const auto report = validate_automaton(paths, builtin_membership("paths", 2), 5);
    CHECK_MESSAGE(report.ok, report.message);
    CHECK(report.terms > 0);
    CHECK(report.contexts > 0);

    // A^{12} on the unit state must lead to the single-edge state; send it to the start state instead
    Automaton mutated = paths;
    const int pair = mutated.pair_index(1, 2);
    const int before = mutated.a_table[pair][mutated.start];
    mutated.a_table[pair][mutated.start] = before == mutated.start ? (before + 1) % mutated.states : mutated.start;
    const auto caught = validate_automaton(mutated, builtin_membership("paths", 2), 5);
    CHECK_FALSE(caught.ok);
    CHECK_FALSE(caught.message.empty());
}

TEST_CASE("learner")
{
    CHECK(learn_automaton(builtin_membership("all", 2), 2, 4, 5).states == 1);

    const auto k1 = learn_automaton(builtin_membership("paths", 1), 1, 4, 4);
    CHECK(k1.states == 4);
    check_automaton(k1);

    const auto k2 = learn_automaton(builtin_membership("paths", 2), 2, 4, 5);
    CHECK(to_text(k2) == to_text(builtin_automaton("paths", 2)));
}

TEST_CASE("learned k = 1 paths automaton")
{
    const auto aut = learn_automaton(builtin_membership("paths", 1), 1, 4, 5);
    REQUIRE(aut.states == 4);
    CHECK(validate_automaton(aut, builtin_membership("paths", 1), 5).ok);
    // a single labelled vertex extended by J^1 repeatedly stays edgeless; traces must be deterministic
    for (int q = 0; q < aut.states; ++q)
        CHECK(aut.glue[q][aut.start] == q);
}
