#pragma once

#include <homind/graph.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homind {

class LabelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A graph with an in-label tuple and an optional out-label tuple.
/// Labels may coincide unless the graph is distinctly labelled.
struct LabelledGraph {
    Graph graph;
    std::vector<int> in;
    std::vector<int> out;

    int arity() const { return static_cast<int>(in.size()); }
    bool bilabelled() const { return !out.empty(); }
    /// in ++ out
    std::vector<int> slots() const;
    bool distinct() const;
};

/// Checks label ranges; throws LabelError.
void check_labels(const LabelledGraph & f);

/// k isolated vertices labelled 1..k.
LabelledGraph unit(int k);
Graph soe(const LabelledGraph & f);

/// Merges matching in-labels (and matching out-labels). Throws LabelError on
/// arity mismatch or when merging would create a self-loop.
LabelledGraph glue(const LabelledGraph & f, const LabelledGraph & g);

/// K's i-th out-vertex is identified with F's i-th in-vertex; the result
/// carries K's in-labels and F's out-labels.
LabelledGraph series(const LabelledGraph & k, const LabelledGraph & f);

/// With combined slots w = in ++ out, the new slot i holds w[sigma[i]]
/// (0-based). The in/out split is kept.
LabelledGraph permute_labels(const LabelledGraph & f, const std::vector<int> & sigma);

/// Generators with 1-based label indices.
LabelledGraph generator_J(int k, int i);
LabelledGraph generator_A(int k, int i, int j);
/// B(k): J^1..J^k followed by A^{ij} for i < j.
std::vector<LabelledGraph> generators(int k);

/// Equal iff the labelled graphs are isomorphic by a map respecting every slot.
std::vector<std::uint64_t> labelled_code(const LabelledGraph & f);
bool labelled_isomorphic(const LabelledGraph & a, const LabelledGraph & b);

/// Compact rendering, e.g. `n=3;0-1,1-2|in=0,2|out=1`.
std::string to_text(const LabelledGraph & f);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Syntax of the term algebra over B(k); label indices are 1-based.
struct Term {
    enum class Kind { One, Glue, A, J };
    Kind kind = Kind::One;
    int k = 1;
    int i = 0;
    int j = 0;
    TermPtr left;
    TermPtr right;
};

TermPtr make_one(int k);
TermPtr make_glue(TermPtr a, TermPtr b);
TermPtr make_A(int i, int j, TermPtr t);
TermPtr make_J(int i, TermPtr t);

LabelledGraph val(const Term & t);
inline LabelledGraph val(const TermPtr & t) { return val(*t); }

std::string to_text(const TermPtr & t);
TermPtr parse_term(std::string_view text, int k);

struct TermMember {
    LabelledGraph graph;
    TermPtr term;
};

inline constexpr std::uint64_t default_enumeration_budget = 5'000'000;

/// TW_d(k) members with at most max_vertices vertices, one term each, up to
/// labelled isomorphism. A depth-d member glues A-edges on the labels with at
/// most one J^l-child per label l whose argument has depth d - 1.
std::vector<TermMember> enumerate_tw(int k, int d, int max_vertices, std::uint64_t budget = default_enumeration_budget);

/// As enumerate_tw, but members are distinct up to (labelled isomorphism, tag(term)),
/// so one graph may be reported with several terms.
std::vector<TermMember> enumerate_tw_tagged(int k, int d, int max_vertices, const std::function<std::uint64_t(const TermPtr &)> & tag,
                                            std::uint64_t budget = default_enumeration_budget);

/// PW_d(k): like enumerate_tw without gluing (a single J-child per level).
std::vector<TermMember> enumerate_pw(int k, int d, int max_vertices = std::numeric_limits<int>::max(),
                                     std::uint64_t budget = default_enumeration_budget);

/// All distinctly k-labelled graphs on k..max_vertices vertices up to labelled isomorphism.
std::vector<LabelledGraph> enumerate_distinctly_labelled(int k, int max_vertices);

/// (t,t)-bilabelled graphs whose vertices are exactly the label slots, one per
/// set partition of the 2t slots and edge set on the blocks (t <= 2).
std::vector<LabelledGraph> enumerate_atomic(int t);

struct LasserreTerm;
using LasserreTermPtr = std::shared_ptr<const LasserreTerm>;

struct LasserreTerm {
    enum class Kind { Atomic, GlueAtomic, Permute, Series };
    Kind kind = Kind::Atomic;
    int t = 1;
    int depth = 1;
    LabelledGraph atomic;
    std::vector<int> sigma; // 0-based
    LasserreTermPtr left;
    LasserreTermPtr right;
};

LasserreTermPtr make_atomic(const LabelledGraph & atomic);
LasserreTermPtr make_glue_atomic(const LabelledGraph & atomic, LasserreTermPtr w);
LasserreTermPtr make_permute(std::vector<int> sigma, LasserreTermPtr w);
LasserreTermPtr make_series(LasserreTermPtr a, LasserreTermPtr b);

LabelledGraph val(const LasserreTerm & w);
inline LabelledGraph val(const LasserreTermPtr & w) { return val(*w); }

/// `atomic(<inline graph>,[in],[out])`, `glue(atomic(...),w)`, `perm([sigma 1-based],w)`, `series(w1,w2)`.
std::string to_text(const LasserreTermPtr & w);
LasserreTermPtr parse_lasserre_term(std::string_view text);

struct LasserreMember {
    LabelledGraph graph;
    LasserreTermPtr term;
};

/// Bilabelled members of L_t up to the given term depth and vertex count, one term each.
std::vector<LasserreMember> enumerate_lasserre_terms(int t, int depth, int max_vertices, std::uint64_t budget = default_enumeration_budget);

/// Underlying graphs of the above, up to isomorphism.
std::vector<Graph> enumerate_lasserre(int t, int depth, int max_vertices, std::uint64_t budget = default_enumeration_budget);

} // namespace homind
