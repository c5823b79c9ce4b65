#include <homind/automaton.hpp>
#include <homind/decomposition.hpp>

#include "tokens.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace homind {

namespace {

// Frozen output of learn_automaton(paths, k = 2, candidate_bound 4, context_bound 5),
// validated with validate_automaton and the walk-count oracle.
constexpr std::string_view paths_k2_fixture = R"(
k 2
states 13
start 0
accept 1 5 6 7 9 10 11 12
glue 0 0 -> 0
glue 0 1 -> 1
glue 0 2 -> 2
glue 0 3 -> 3
glue 0 4 -> 4
glue 0 5 -> 5
glue 0 6 -> 6
glue 0 7 -> 7
glue 0 8 -> 8
glue 0 9 -> 9
glue 0 10 -> 10
glue 0 11 -> 11
glue 0 12 -> 12
glue 1 1 -> 1
glue 1 2 -> 2
glue 1 3 -> 7
glue 1 4 -> 6
glue 1 5 -> 2
glue 1 6 -> 6
glue 1 7 -> 7
glue 1 8 -> 10
glue 1 9 -> 2
glue 1 10 -> 10
glue 1 11 -> 2
glue 1 12 -> 2
glue 2 2 -> 2
glue 2 3 -> 2
glue 2 4 -> 2
glue 2 5 -> 2
glue 2 6 -> 2
glue 2 7 -> 2
glue 2 8 -> 2
glue 2 9 -> 2
glue 2 10 -> 2
glue 2 11 -> 2
glue 2 12 -> 2
glue 3 3 -> 2
glue 3 4 -> 8
glue 3 5 -> 9
glue 3 6 -> 10
glue 3 7 -> 2
glue 3 8 -> 2
glue 3 9 -> 2
glue 3 10 -> 2
glue 3 11 -> 12
glue 3 12 -> 2
glue 4 4 -> 2
glue 4 5 -> 11
glue 4 6 -> 2
glue 4 7 -> 10
glue 4 8 -> 2
glue 4 9 -> 12
glue 4 10 -> 2
glue 4 11 -> 2
glue 4 12 -> 2
glue 5 5 -> 2
glue 5 6 -> 2
glue 5 7 -> 2
glue 5 8 -> 12
glue 5 9 -> 2
glue 5 10 -> 2
glue 5 11 -> 2
glue 5 12 -> 2
glue 6 6 -> 2
glue 6 7 -> 10
glue 6 8 -> 2
glue 6 9 -> 2
glue 6 10 -> 2
glue 6 11 -> 2
glue 6 12 -> 2
glue 7 7 -> 2
glue 7 8 -> 2
glue 7 9 -> 2
glue 7 10 -> 2
glue 7 11 -> 2
glue 7 12 -> 2
glue 8 8 -> 2
glue 8 9 -> 2
glue 8 10 -> 2
glue 8 11 -> 2
glue 8 12 -> 2
glue 9 9 -> 2
glue 9 10 -> 2
glue 9 11 -> 2
glue 9 12 -> 2
glue 10 10 -> 2
glue 10 11 -> 2
glue 10 12 -> 2
glue 11 11 -> 2
glue 11 12 -> 2
glue 12 12 -> 2
J 1 0 -> 2
J 1 1 -> 4
J 1 2 -> 2
J 1 3 -> 2
J 1 4 -> 2
J 1 5 -> 4
J 1 6 -> 2
J 1 7 -> 4
J 1 8 -> 2
J 1 9 -> 4
J 1 10 -> 2
J 1 11 -> 2
J 1 12 -> 2
J 2 0 -> 2
J 2 1 -> 3
J 2 2 -> 2
J 2 3 -> 2
J 2 4 -> 2
J 2 5 -> 3
J 2 6 -> 3
J 2 7 -> 2
J 2 8 -> 2
J 2 9 -> 2
J 2 10 -> 2
J 2 11 -> 3
J 2 12 -> 2
A 1 2 0 -> 1
A 1 2 1 -> 1
A 1 2 2 -> 2
A 1 2 3 -> 7
A 1 2 4 -> 6
A 1 2 5 -> 2
A 1 2 6 -> 6
A 1 2 7 -> 7
A 1 2 8 -> 10
A 1 2 9 -> 2
A 1 2 10 -> 10
A 1 2 11 -> 2
A 1 2 12 -> 2
small list
n 1 m 0
n 2 m 1
0 1
)";

std::string state_text(int q) { return std::to_string(q); }

} // namespace

int Automaton::pair_index(int i, int j) const
{
    if (i < 1 || j > k || i >= j)
        throw AutomatonError("label pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for k = " + std::to_string(k));
    // Pairs ordered (1,2), (1,3), ..., (1,k), (2,3), ...
    int index = 0;
    for (int a = 1; a < i; ++a)
        index += k - a;
    return index + (j - i - 1);
}

bool Automaton::small_member(const Graph & g) const
{
    switch (small) {
    case SmallPolicy::All:
        return true;
    case SmallPolicy::None:
        return false;
    case SmallPolicy::List:
        for (const auto & h : small_list)
            if (h.order() == g.order() && canonical_code(h) == canonical_code(g))
                return true;
        return false;
    }
    return false;
}

void check_automaton(const Automaton & aut)
{
    if (aut.k < 1)
        throw AutomatonError("k must be at least 1");
    if (aut.states < 1)
        throw AutomatonError("an automaton needs at least one state");
    auto check_state = [&](int q, const std::string & where) {
        if (q < 0 || q >= aut.states)
            throw AutomatonError("bad state id " + std::to_string(q) + " in " + where);
    };
    check_state(aut.start, "start");
    if (static_cast<int>(aut.accepting.size()) != aut.states)
        throw AutomatonError("accepting set has the wrong size");
    if (static_cast<int>(aut.glue.size()) != aut.states)
        throw AutomatonError("incomplete glue table");
    for (int a = 0; a < aut.states; ++a) {
        if (static_cast<int>(aut.glue[a].size()) != aut.states)
            throw AutomatonError("incomplete glue table at state " + std::to_string(a));
        for (int b = 0; b < aut.states; ++b) {
            check_state(aut.glue[a][b], "glue " + state_text(a) + " " + state_text(b));
            if (aut.glue[a][b] != aut.glue[b][a])
                throw AutomatonError("asymmetric glue entry: glue " + state_text(a) + " " + state_text(b) + " -> " + state_text(aut.glue[a][b]) +
                                     " but glue " + state_text(b) + " " + state_text(a) + " -> " + state_text(aut.glue[b][a]));
        }
    }
    if (static_cast<int>(aut.j_table.size()) != aut.k)
        throw AutomatonError("incomplete j_table");
    for (int i = 0; i < aut.k; ++i) {
        if (static_cast<int>(aut.j_table[i].size()) != aut.states)
            throw AutomatonError("incomplete j_table for J " + std::to_string(i + 1));
        for (int q = 0; q < aut.states; ++q)
            check_state(aut.j_table[i][q], "J " + std::to_string(i + 1) + " " + state_text(q));
    }
    if (static_cast<int>(aut.a_table.size()) != aut.pair_count())
        throw AutomatonError("incomplete a_table");
    for (auto & row : aut.a_table) {
        if (static_cast<int>(row.size()) != aut.states)
            throw AutomatonError("incomplete a_table row");
        for (int q : row)
            check_state(q, "a_table");
    }
}

Automaton parse_automaton(std::string_view text)
{
    const auto tokens = detail::tokenize(text);
    std::size_t pos = 0;
    auto at = [&](std::size_t p) -> const detail::Token & {
        if (p >= tokens.size())
            throw AutomatonError("unexpected end of automaton file");
        return tokens[p];
    };
    auto number = [&]() { return static_cast<int>(detail::to_integer<AutomatonError>(at(pos++))); };
    auto keyword = [&](const char * word) {
        const auto & tok = at(pos++);
        if (tok.text != word)
            throw AutomatonError("line " + std::to_string(tok.line) + ": expected '" + word + "', got '" + tok.text + "'");
    };
    auto arrow = [&]() { keyword("->"); };

    Automaton aut;
    keyword("k");
    aut.k = number();
    keyword("states");
    aut.states = number();
    if (aut.k < 1 || aut.states < 1 || aut.k > 16 || aut.states > 100000)
        throw AutomatonError("k and states must be positive (and moderate)");
    keyword("start");
    aut.start = number();
    keyword("accept");
    aut.accepting.assign(aut.states, 0);
    while (pos < tokens.size() && !tokens[pos].text.empty() && std::isdigit(static_cast<unsigned char>(tokens[pos].text[0]))) {
        const int line = tokens[pos].line;
        const int q = number();
        if (q < 0 || q >= aut.states)
            throw AutomatonError("line " + std::to_string(line) + ": bad state id " + std::to_string(q) + " in accept");
        aut.accepting[q] = 1;
    }

    const int unset = -1;
    aut.glue.assign(aut.states, std::vector<int>(aut.states, unset));
    aut.j_table.assign(aut.k, std::vector<int>(aut.states, unset));
    aut.a_table.assign(aut.pair_count(), std::vector<int>(aut.states, unset));
    auto state_at = [&](int line, int q) {
        if (q < 0 || q >= aut.states)
            throw AutomatonError("line " + std::to_string(line) + ": bad state id " + std::to_string(q));
        return q;
    };
    bool have_small = false;
    while (pos < tokens.size()) {
        const auto & head = tokens[pos++];
        const int line = head.line;
        if (head.text == "glue") {
            const int a = state_at(line, number());
            const int b = state_at(line, number());
            arrow();
            const int q = state_at(line, number());
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                if (aut.glue[x][y] != unset && aut.glue[x][y] != q)
                    throw AutomatonError("line " + std::to_string(line) + ": asymmetric glue entry: glue " + state_text(x) + " " + state_text(y) +
                                         " -> " + state_text(aut.glue[x][y]) + " conflicts with -> " + state_text(q));
            }
            aut.glue[a][b] = q;
            aut.glue[b][a] = q;
        }
        else if (head.text == "J") {
            const int i = number();
            if (i < 1 || i > aut.k)
                throw AutomatonError("line " + std::to_string(line) + ": J label " + std::to_string(i) + " out of range");
            const int from = state_at(line, number());
            arrow();
            const int to = state_at(line, number());
            if (aut.j_table[i - 1][from] != unset && aut.j_table[i - 1][from] != to)
                throw AutomatonError("line " + std::to_string(line) + ": conflicting J transition");
            aut.j_table[i - 1][from] = to;
        }
        else if (head.text == "A") {
            const int i = number();
            const int j = number();
            if (i < 1 || j > aut.k || i >= j)
                throw AutomatonError("line " + std::to_string(line) + ": A labels must satisfy 1 <= i < j <= k");
            const int from = state_at(line, number());
            arrow();
            const int to = state_at(line, number());
            auto & cell = aut.a_table[aut.pair_index(i, j)][from];
            if (cell != unset && cell != to)
                throw AutomatonError("line " + std::to_string(line) + ": conflicting A transition");
            cell = to;
        }
        else if (head.text == "small") {
            const auto & policy = at(pos++);
            have_small = true;
            if (policy.text == "all")
                aut.small = SmallPolicy::All;
            else if (policy.text == "none")
                aut.small = SmallPolicy::None;
            else if (policy.text == "list") {
                aut.small = SmallPolicy::List;
                while (pos < tokens.size()) {
                    try {
                        aut.small_list.push_back(detail::parse_graph_block(tokens, pos));
                    }
                    catch (const GraphError & e) {
                        throw AutomatonError(std::string("small list: ") + e.what());
                    }
                    if (aut.small_list.back().order() > aut.k)
                        throw AutomatonError("small list graph has more than k vertices");
                }
            }
            else
                throw AutomatonError("line " + std::to_string(policy.line) + ": small policy must be all, none or list");
        }
        else {
            throw AutomatonError("line " + std::to_string(line) + ": unknown keyword '" + head.text + "'");
        }
    }
    if (!have_small)
        throw AutomatonError("missing footer: small all|none|list");

    for (int a = 0; a < aut.states; ++a)
        for (int b = 0; b < aut.states; ++b)
            if (aut.glue[a][b] == unset)
                throw AutomatonError("incomplete glue table: missing glue " + state_text(a) + " " + state_text(b) + " -> ?");
    for (int i = 0; i < aut.k; ++i)
        for (int q = 0; q < aut.states; ++q)
            if (aut.j_table[i][q] == unset)
                throw AutomatonError("incomplete j_table: missing J " + std::to_string(i + 1) + " " + state_text(q) + " -> ?");
    for (int i = 1; i <= aut.k; ++i)
        for (int j = i + 1; j <= aut.k; ++j)
            for (int q = 0; q < aut.states; ++q)
                if (aut.a_table[aut.pair_index(i, j)][q] == unset)
                    throw AutomatonError("incomplete a_table: missing A " + std::to_string(i) + " " + std::to_string(j) + " " + state_text(q) + " -> ?");
    check_automaton(aut);
    return aut;
}

Automaton read_automaton_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw AutomatonError("cannot open automaton file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_automaton(buffer.str());
    }
    catch (const AutomatonError & e) {
        throw AutomatonError(path + ": " + e.what());
    }
}

std::string to_text(const Automaton & aut)
{
    std::ostringstream out;
    out << "k " << aut.k << "\nstates " << aut.states << "\nstart " << aut.start << "\naccept";
    for (int q = 0; q < aut.states; ++q)
        if (aut.accepting[q])
            out << ' ' << q;
    out << '\n';
    for (int a = 0; a < aut.states; ++a)
        for (int b = a; b < aut.states; ++b)
            out << "glue " << a << ' ' << b << " -> " << aut.glue[a][b] << '\n';
    for (int i = 1; i <= aut.k; ++i)
        for (int q = 0; q < aut.states; ++q)
            out << "J " << i << ' ' << q << " -> " << aut.j_table[i - 1][q] << '\n';
    for (int i = 1; i <= aut.k; ++i)
        for (int j = i + 1; j <= aut.k; ++j)
            for (int q = 0; q < aut.states; ++q)
                out << "A " << i << ' ' << j << ' ' << q << " -> " << aut.a_table[aut.pair_index(i, j)][q] << '\n';
    switch (aut.small) {
    case SmallPolicy::All:
        out << "small all\n";
        break;
    case SmallPolicy::None:
        out << "small none\n";
        break;
    case SmallPolicy::List:
        out << "small list\n";
        for (const auto & g : aut.small_list)
            out << to_text(g);
        break;
    }
    return out.str();
}

Automaton builtin_automaton(const std::string & name, int k)
{
    if (name == "tw-all") {
        if (k < 1)
            throw AutomatonError("tw-all needs k >= 1");
        Automaton aut;
        aut.k = k;
        aut.states = 1;
        aut.start = 0;
        aut.accepting = {1};
        aut.glue = {{0}};
        aut.j_table.assign(k, {0});
        aut.a_table.assign(aut.pair_count(), {0});
        aut.small = SmallPolicy::All;
        return aut;
    }
    if (name == "paths") {
        if (k != 2)
            throw AutomatonError("the paths builtin exists for k = 2 only");
        return parse_automaton(paths_k2_fixture);
    }
    throw AutomatonError("unknown builtin automaton '" + name + "' (known: tw-all, paths)");
}

Membership builtin_membership(const std::string & name, int k)
{
    if (name == "tw-all")
        return [k](const Graph & g) { return g.order() <= k || exact_treewidth_tiny(g) <= k - 1; };
    if (name == "paths")
        return [](const Graph & g) { return is_path_graph(g); };
    if (name == "all")
        return [](const Graph &) { return true; };
    throw AutomatonError("no membership oracle for class '" + name + "'");
}

int trace(const Automaton & aut, const Term & t)
{
    if (t.k != aut.k)
        throw AutomatonError("term arity " + std::to_string(t.k) + " differs from automaton arity " + std::to_string(aut.k));
    switch (t.kind) {
    case Term::Kind::One:
        return aut.start;
    case Term::Kind::Glue:
        return aut.glue[trace(aut, *t.left)][trace(aut, *t.right)];
    case Term::Kind::A:
        return aut.a_table[aut.pair_index(t.i, t.j)][trace(aut, *t.left)];
    case Term::Kind::J:
        return aut.j_table[t.i - 1][trace(aut, *t.left)];
    }
    throw AutomatonError("corrupt term");
}

namespace {

std::vector<char> signature(const LabelledGraph & f, const std::vector<LabelledGraph> & contexts, const Membership & member)
{
    std::vector<char> sig;
    sig.reserve(contexts.size());
    for (const auto & c : contexts)
        sig.push_back(member(soe(glue(c, f))) ? 1 : 0);
    return sig;
}

} // namespace

ValidationReport validate_automaton(const Automaton & aut, const Membership & member, int context_bound, int term_bound)
{
    check_automaton(aut);
    ValidationReport report;
    const auto terms =
        enumerate_tw_tagged(aut.k, term_bound, term_bound, [&](const TermPtr & t) { return static_cast<std::uint64_t>(trace(aut, t)); });
    std::vector<LabelledGraph> contexts;
    for (auto & m : enumerate_tw(aut.k, context_bound, context_bound))
        contexts.push_back(std::move(m.graph));
    report.terms = terms.size();
    report.contexts = contexts.size();

    std::map<int, std::pair<const TermMember *, std::vector<char>>> reference;
    for (const auto & m : terms) {
        const int q = trace(aut, m.term);
        const bool is_member = member(soe(m.graph));
        if (aut.accepts(q) != is_member) {
            report.ok = false;
            report.message = "term " + to_text(m.term) + " reaches state " + std::to_string(q) + (aut.accepts(q) ? " (accepting)" : " (rejecting)") +
                             " but soe " + to_inline(soe(m.graph)) + (is_member ? " is" : " is not") + " a member";
            return report;
        }
        auto sig = signature(m.graph, contexts, member);
        auto [it, fresh] = reference.try_emplace(q, &m, sig);
        if (fresh)
            continue;
        const auto & ref = it->second;
        for (std::size_t c = 0; c < contexts.size(); ++c)
            if (ref.second[c] != sig[c]) {
                report.ok = false;
                report.message = "terms " + to_text(ref.first->term) + " and " + to_text(m.term) + " share state " + std::to_string(q) +
                                 " but context " + to_text(contexts[c]) + " separates them";
                return report;
            }
    }
    report.message = "no counterexample";
    return report;
}

Automaton learn_automaton(const Membership & member, int k, int candidate_bound, int context_bound)
{
    if (k < 1)
        throw AutomatonError("learner: k must be at least 1");
    const auto candidates = enumerate_distinctly_labelled(k, candidate_bound);

    auto partition_of = [&](const std::vector<LabelledGraph> & contexts) {
        std::map<std::vector<char>, int> ids;
        std::vector<int> classes;
        for (const auto & f : candidates)
            classes.push_back(ids.try_emplace(signature(f, contexts, member), static_cast<int>(ids.size())).first->second);
        return classes;
    };

    // Grow contexts until the candidate partition is unchanged twice in a row.
    std::vector<LabelledGraph> contexts;
    std::vector<int> previous;
    int unchanged = 0;
    for (int bound = k; bound <= context_bound; ++bound) {
        contexts = enumerate_distinctly_labelled(k, bound);
        auto classes = partition_of(contexts);
        unchanged = (classes == previous) ? unchanged + 1 : 0;
        previous = std::move(classes);
        if (unchanged >= 2)
            break;
    }

    std::map<std::vector<char>, int> state_of;
    std::vector<LabelledGraph> reps;
    auto classify = [&](const LabelledGraph & f, bool may_create) {
        auto sig = signature(f, contexts, member);
        auto it = state_of.find(sig);
        if (it != state_of.end())
            return it->second;
        if (!may_create)
            return -1;
        if (reps.size() >= 512)
            throw AutomatonError("learner: more than 512 states; contexts too weak or class not recognisable at this arity");
        const int id = static_cast<int>(reps.size());
        state_of.emplace(std::move(sig), id);
        reps.push_back(f);
        return id;
    };

    classify(unit(k), true);
    for (const auto & f : candidates)
        classify(f, true);

    Automaton aut;
    aut.k = k;
    aut.start = 0;
    std::vector<std::vector<int>> j_rows(k), a_rows(k * (k - 1) / 2);
    std::vector<std::vector<int>> glue_rows;
    const auto gens_j = [&] {
        std::vector<LabelledGraph> g;
        for (int i = 1; i <= k; ++i)
            g.push_back(generator_J(k, i));
        return g;
    }();
    std::vector<LabelledGraph> gens_a;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            gens_a.push_back(generator_A(k, i, j));

    for (std::size_t q = 0; q < reps.size(); ++q) {
        const LabelledGraph rep = reps[q];
        for (int i = 0; i < k; ++i)
            j_rows[i].push_back(classify(series(gens_j[i], rep), true));
        for (std::size_t p = 0; p < gens_a.size(); ++p)
            a_rows[p].push_back(classify(series(gens_a[p], rep), true));
        glue_rows.emplace_back();
        for (std::size_t r = 0; r <= q; ++r)
            glue_rows[q].push_back(classify(glue(rep, reps[r]), true));
    }
    const int states = static_cast<int>(reps.size());
    aut.states = states;
    aut.glue.assign(states, std::vector<int>(states));
    for (int a = 0; a < states; ++a)
        for (int b = 0; b <= a; ++b) {
            aut.glue[a][b] = glue_rows[a][b];
            aut.glue[b][a] = glue_rows[a][b];
        }
    aut.j_table = j_rows;
    aut.a_table = a_rows;
    aut.accepting.resize(states);
    for (int q = 0; q < states; ++q)
        aut.accepting[q] = member(soe(reps[q])) ? 1 : 0;

    // Every candidate must step like the representative of its class.
    for (const auto & f : candidates) {
        const int q = classify(f, false);
        auto expect = [&](const LabelledGraph & image, int wanted, const std::string & op) {
            const int got = classify(image, false);
            if (got != wanted)
                throw AutomatonError("learner: inconsistent transition " + op + " on " + to_text(f) + " (state " + std::to_string(q) + "): expected " +
                                     std::to_string(wanted) + ", got " + (got < 0 ? std::string("an unseen class") : std::to_string(got)));
        };
        for (int i = 0; i < k; ++i)
            expect(series(gens_j[i], f), aut.j_table[i][q], "J " + std::to_string(i + 1));
        for (std::size_t p = 0; p < gens_a.size(); ++p)
            expect(series(gens_a[p], f), aut.a_table[p][q], "A");
        for (int r = 0; r < states; ++r)
            expect(glue(f, reps[r]), aut.glue[q][r], "glue with state " + std::to_string(r));
    }

    aut.small = SmallPolicy::List;
    for (int n = 1; n <= k; ++n)
        for (const auto & g : graphs_of_order(n))
            if (member(g))
                aut.small_list.push_back(g);
    check_automaton(aut);
    return aut;
}

} // namespace homind
