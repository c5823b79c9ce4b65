#pragma once

#include <homind/graph.hpp>
#include <homind/labelled.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homind {

class AutomatonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SmallPolicy { All, None, List };

/// Recognisability data (Q, A, q0, g, b_B) for a class of graphs at arity k.
struct Automaton {
    int k = 1;
    int states = 1;
    int start = 0;
    std::vector<char> accepting;
    /// glue[q1][q2]
    std::vector<std::vector<int>> glue;
    /// j_table[i - 1][q]
    std::vector<std::vector<int>> j_table;
    /// a_table[pair_index(i, j)][q]
    std::vector<std::vector<int>> a_table;
    SmallPolicy small = SmallPolicy::None;
    std::vector<Graph> small_list;

    int pair_index(int i, int j) const;
    int pair_count() const { return k * (k - 1) / 2; }
    bool accepts(int q) const { return accepting[q] != 0; }
    /// Membership of a graph on at most k vertices as declared by the small policy.
    bool small_member(const Graph & g) const;
};

/// Checks ranges, totality and symmetry; throws AutomatonError naming the defect.
void check_automaton(const Automaton & aut);

Automaton parse_automaton(std::string_view text);
Automaton read_automaton_file(const std::string & path);
std::string to_text(const Automaton & aut);

/// "tw-all" (any k) or "paths" (k = 2).
Automaton builtin_automaton(const std::string & name, int k);

using Membership = std::function<bool(const Graph &)>;

/// Membership oracle of a builtin class ("tw-all": treewidth <= k - 1, "paths").
Membership builtin_membership(const std::string & name, int k);

/// State reached by evaluating the term bottom-up.
int trace(const Automaton & aut, const Term & t);
inline int trace(const Automaton & aut, const TermPtr & t) { return trace(aut, *t); }

struct ValidationReport {
    bool ok = true;
    std::string message;
    std::size_t terms = 0;
    std::size_t contexts = 0;
};

/// Terms on at most term_bound vertices are traced; terms sharing a state must
/// agree on membership of soe(K glued with val(t)) for every TW(k) context K on
/// at most context_bound vertices, and acceptance must match membership.
ValidationReport validate_automaton(const Automaton & aut, const Membership & member, int context_bound, int term_bound = 5);

/// Myhill-Nerode style learner. Candidate graphs are the distinctly k-labelled
/// graphs on at most candidate_bound vertices; contexts are drawn from the same
/// family and grown up to context_bound until the partition is stable for two
/// consecutive bounds. Throws AutomatonError on an inconsistent transition.
Automaton learn_automaton(const Membership & member, int k, int candidate_bound, int context_bound);

} // namespace homind
