#include <homind/labelled.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace homind {

std::vector<int> LabelledGraph::slots() const
{
    std::vector<int> s = in;
    s.insert(s.end(), out.begin(), out.end());
    return s;
}

bool LabelledGraph::distinct() const
{
    auto unique = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    return unique(in) && unique(out);
}

void check_labels(const LabelledGraph & f)
{
    for (int v : f.slots())
        if (v < 0 || v >= f.graph.order())
            throw LabelError("label points at missing vertex " + std::to_string(v));
}

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) :
        parent_(n)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v)
    {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

// Builds the quotient of a vertex set under `merges`; ids follow first appearance.
LabelledGraph quotient(int total, const std::vector<Edge> & edges, const std::vector<std::pair<int, int>> & merges, const std::vector<int> & in,
                       const std::vector<int> & out)
{
    UnionFind uf(total);
    for (auto [a, b] : merges)
        uf.unite(a, b);
    std::vector<int> id(total, -1);
    int next = 0;
    for (int v = 0; v < total; ++v) {
        const int r = uf.find(v);
        if (id[r] < 0)
            id[r] = next++;
        id[v] = id[r];
    }
    std::set<Edge> mapped;
    for (auto [u, v] : edges) {
        int a = id[u], b = id[v];
        if (a == b)
            throw LabelError("identifying labels would create a self-loop");
        if (a > b)
            std::swap(a, b);
        mapped.emplace(a, b);
    }
    LabelledGraph out_graph;
    out_graph.graph = Graph(next, std::vector<Edge>(mapped.begin(), mapped.end()));
    for (int v : in)
        out_graph.in.push_back(id[v]);
    for (int v : out)
        out_graph.out.push_back(id[v]);
    return out_graph;
}

std::vector<Edge> shifted_edges(const Graph & g, int offset)
{
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(u + offset, v + offset);
    return edges;
}

std::vector<int> shifted(const std::vector<int> & labels, int offset)
{
    std::vector<int> out;
    for (int v : labels)
        out.push_back(v + offset);
    return out;
}

} // namespace

LabelledGraph unit(int k)
{
    if (k < 0)
        throw LabelError("negative arity");
    LabelledGraph f;
    f.graph = Graph(k);
    f.in.resize(k);
    std::iota(f.in.begin(), f.in.end(), 0);
    return f;
}

Graph soe(const LabelledGraph & f) { return f.graph; }

LabelledGraph glue(const LabelledGraph & f, const LabelledGraph & g)
{
    if (f.in.size() != g.in.size() || f.out.size() != g.out.size())
        throw LabelError("glue: arity mismatch (" + std::to_string(f.in.size()) + "," + std::to_string(f.out.size()) + ") vs (" +
                         std::to_string(g.in.size()) + "," + std::to_string(g.out.size()) + ")");
    const int nf = f.graph.order();
    auto edges = f.graph.edges();
    auto extra = shifted_edges(g.graph, nf);
    edges.insert(edges.end(), extra.begin(), extra.end());
    std::vector<std::pair<int, int>> merges;
    for (std::size_t i = 0; i < f.in.size(); ++i)
        merges.emplace_back(f.in[i], g.in[i] + nf);
    for (std::size_t i = 0; i < f.out.size(); ++i)
        merges.emplace_back(f.out[i], g.out[i] + nf);
    return quotient(nf + g.graph.order(), edges, merges, f.in, f.out);
}

LabelledGraph series(const LabelledGraph & k, const LabelledGraph & f)
{
    if (k.out.size() != f.in.size())
        throw LabelError("series: out-arity " + std::to_string(k.out.size()) + " does not match arity " + std::to_string(f.in.size()));
    const int nk = k.graph.order();
    auto edges = k.graph.edges();
    auto extra = shifted_edges(f.graph, nk);
    edges.insert(edges.end(), extra.begin(), extra.end());
    std::vector<std::pair<int, int>> merges;
    for (std::size_t i = 0; i < k.out.size(); ++i)
        merges.emplace_back(k.out[i], f.in[i] + nk);
    return quotient(nk + f.graph.order(), edges, merges, k.in, shifted(f.out, nk));
}

LabelledGraph permute_labels(const LabelledGraph & f, const std::vector<int> & sigma)
{
    const auto w = f.slots();
    if (sigma.size() != w.size())
        throw LabelError("permute_labels: permutation has " + std::to_string(sigma.size()) + " points, expected " + std::to_string(w.size()));
    std::vector<char> seen(sigma.size(), 0);
    for (int s : sigma) {
        if (s < 0 || s >= static_cast<int>(sigma.size()) || seen[s])
            throw LabelError("permute_labels: not a permutation");
        seen[s] = 1;
    }
    LabelledGraph out;
    out.graph = f.graph;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        (i < f.in.size() ? out.in : out.out).push_back(w[sigma[i]]);
    return out;
}

LabelledGraph generator_J(int k, int i)
{
    if (i < 1 || i > k)
        throw LabelError("J^" + std::to_string(i) + " out of range for k = " + std::to_string(k));
    LabelledGraph f;
    f.graph = Graph(k + 1);
    for (int l = 0; l < k; ++l) {
        f.in.push_back(l == i - 1 ? k : l);
        f.out.push_back(l);
    }
    return f;
}

LabelledGraph generator_A(int k, int i, int j)
{
    if (i < 1 || j > k || i >= j)
        throw LabelError("A^{" + std::to_string(i) + std::to_string(j) + "} out of range for k = " + std::to_string(k));
    LabelledGraph f;
    f.graph = Graph(k, {{i - 1, j - 1}});
    for (int l = 0; l < k; ++l) {
        f.in.push_back(l);
        f.out.push_back(l);
    }
    return f;
}

std::vector<LabelledGraph> generators(int k)
{
    if (k < 1)
        throw LabelError("generators: k must be at least 1");
    std::vector<LabelledGraph> out;
    for (int i = 1; i <= k; ++i)
        out.push_back(generator_J(k, i));
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            out.push_back(generator_A(k, i, j));
    return out;
}

std::vector<std::uint64_t> labelled_code(const LabelledGraph & f)
{
    const auto w = f.slots();
    std::vector<int> order;
    std::vector<int> position(f.graph.order(), -1);
    std::vector<std::uint64_t> code{f.in.size(), f.out.size()};
    for (int v : w) {
        if (position[v] < 0) {
            position[v] = static_cast<int>(order.size());
            order.push_back(v);
        }
        code.push_back(static_cast<std::uint64_t>(position[v]));
    }
    const int fixed = static_cast<int>(order.size());
    for (int v = 0; v < f.graph.order(); ++v)
        if (position[v] < 0) {
            position[v] = static_cast<int>(order.size());
            order.push_back(v);
        }
    const auto body = canonical_code(f.graph.relabelled(position), fixed);
    code.insert(code.end(), body.begin(), body.end());
    return code;
}

bool labelled_isomorphic(const LabelledGraph & a, const LabelledGraph & b) { return labelled_code(a) == labelled_code(b); }

std::string to_text(const LabelledGraph & f)
{
    auto list = [](const std::vector<int> & v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    std::string out = to_inline(f.graph) + "|in=" + list(f.in);
    if (f.bilabelled())
        out += "|out=" + list(f.out);
    return out;
}

// ---------------------------------------------------------------- terms

TermPtr make_one(int k)
{
    if (k < 1)
        throw LabelError("term arity must be at least 1");
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::One;
    t->k = k;
    return t;
}

TermPtr make_glue(TermPtr a, TermPtr b)
{
    if (a->k != b->k)
        throw LabelError("glue of terms with arities " + std::to_string(a->k) + " and " + std::to_string(b->k));
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Glue;
    t->k = a->k;
    t->left = std::move(a);
    t->right = std::move(b);
    return t;
}

TermPtr make_A(int i, int j, TermPtr sub)
{
    if (i < 1 || j > sub->k || i >= j)
        throw LabelError("A(" + std::to_string(i) + "," + std::to_string(j) + ") needs 1 <= i < j <= " + std::to_string(sub->k));
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::A;
    t->k = sub->k;
    t->i = i;
    t->j = j;
    t->left = std::move(sub);
    return t;
}

TermPtr make_J(int i, TermPtr sub)
{
    if (i < 1 || i > sub->k)
        throw LabelError("J(" + std::to_string(i) + ") needs 1 <= i <= " + std::to_string(sub->k));
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::J;
    t->k = sub->k;
    t->i = i;
    t->left = std::move(sub);
    return t;
}

LabelledGraph val(const Term & t)
{
    switch (t.kind) {
    case Term::Kind::One:
        return unit(t.k);
    case Term::Kind::Glue:
        return glue(val(*t.left), val(*t.right));
    case Term::Kind::A:
        return series(generator_A(t.k, t.i, t.j), val(*t.left));
    case Term::Kind::J:
        return series(generator_J(t.k, t.i), val(*t.left));
    }
    throw LabelError("corrupt term");
}

std::string to_text(const TermPtr & t)
{
    switch (t->kind) {
    case Term::Kind::One:
        return "one";
    case Term::Kind::Glue:
        return "glue(" + to_text(t->left) + "," + to_text(t->right) + ")";
    case Term::Kind::A:
        return "A(" + std::to_string(t->i) + "," + std::to_string(t->j) + "," + to_text(t->left) + ")";
    case Term::Kind::J:
        return "J(" + std::to_string(t->i) + "," + to_text(t->left) + ")";
    }
    return "?";
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) :
        text_(text)
    {
    }

    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool peek_word(std::string_view w)
    {
        skip_space();
        return text_.substr(pos_, w.size()) == w;
    }

    void expect(char c)
    {
        if (!peek(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect_word(std::string_view w)
    {
        if (!peek_word(w))
            fail("expected '" + std::string(w) + "'");
        pos_ += w.size();
    }

    long long integer()
    {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            ++pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
            ++pos_;
        if (start == pos_ || (pos_ == start + 1 && text_[start] == '-'))
            fail("expected an integer");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    bool at_digit()
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9';
    }

    void finish()
    {
        skip_space();
        if (pos_ != text_.size())
            fail("trailing characters");
    }

    [[noreturn]] void fail(const std::string & what) const { throw LabelError("term parse error at offset " + std::to_string(pos_) + ": " + what); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

TermPtr parse_term_at(Cursor & c, int k)
{
    if (c.peek_word("one")) {
        c.expect_word("one");
        return make_one(k);
    }
    if (c.peek_word("glue")) {
        c.expect_word("glue");
        c.expect('(');
        auto a = parse_term_at(c, k);
        c.expect(',');
        auto b = parse_term_at(c, k);
        c.expect(')');
        return make_glue(a, b);
    }
    if (c.peek_word("A")) {
        c.expect_word("A");
        c.expect('(');
        const int i = static_cast<int>(c.integer());
        c.expect(',');
        const int j = static_cast<int>(c.integer());
        c.expect(',');
        auto sub = parse_term_at(c, k);
        c.expect(')');
        return make_A(i, j, sub);
    }
    if (c.peek_word("J")) {
        c.expect_word("J");
        c.expect('(');
        const int i = static_cast<int>(c.integer());
        c.expect(',');
        auto sub = parse_term_at(c, k);
        c.expect(')');
        return make_J(i, sub);
    }
    c.fail("expected one, glue, A or J");
}

} // namespace

TermPtr parse_term(std::string_view text, int k)
{
    Cursor c(text);
    auto t = parse_term_at(c, k);
    c.finish();
    return t;
}

// ---------------------------------------------------------------- enumeration

namespace {

class Budget {
public:
    explicit Budget(std::uint64_t limit, const char * what) :
        limit_(limit), what_(what)
    {
    }

    void spend()
    {
        if (++used_ > limit_)
            throw OracleTooLarge(std::string(what_) + ": enumeration budget of " + std::to_string(limit_) + " steps exceeded");
    }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    const char * what_;
};

template <typename Member>
class Dedup {
public:
    bool add(Member m, std::uint64_t tag = 0)
    {
        auto code = labelled_code(m.graph);
        code.push_back(tag);
        if (!seen_.insert(std::move(code)).second)
            return false;
        items.push_back(std::move(m));
        return true;
    }

    std::vector<Member> items;

private:
    std::set<std::vector<std::uint64_t>> seen_;
};

std::vector<std::pair<int, int>> label_pairs(int k)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

// A_E applied to the unit, for every edge set E on the labels.
std::vector<TermMember> base_level(int k)
{
    const auto pairs = label_pairs(k);
    std::vector<TermMember> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        TermPtr t = make_one(k);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask & (std::uint64_t{1} << e))
                t = make_A(pairs[e].first, pairs[e].second, t);
        out.push_back({val(t), t});
    }
    return out;
}

using Tagger = std::function<std::uint64_t(const TermPtr &)>;

std::vector<TermMember> j_children(int k, int l, const std::vector<TermMember> & previous, int max_vertices, const Tagger & tag, Budget & budget)
{
    Dedup<TermMember> children;
    const auto gen = generator_J(k, l);
    for (const auto & x : previous) {
        if (x.graph.graph.order() + 1 > max_vertices)
            continue;
        budget.spend();
        TermMember m{series(gen, x.graph), make_J(l, x.term)};
        const auto t = tag(m.term);
        children.add(std::move(m), t);
    }
    return std::move(children.items);
}

} // namespace

std::vector<TermMember> enumerate_tw_tagged(int k, int d, int max_vertices, const Tagger & tag, std::uint64_t budget_limit)
{
    if (k < 1 || d < 1)
        throw LabelError("enumerate_tw: k and d must be at least 1");
    Budget budget(budget_limit, "enumerate_tw");
    const auto base = base_level(k);
    std::vector<TermMember> level;
    {
        Dedup<TermMember> first;
        for (const auto & b : base)
            if (b.graph.graph.order() <= max_vertices)
                first.add(b, tag(b.term));
        level = std::move(first.items);
    }
    for (int depth = 2; depth <= d; ++depth) {
        std::vector<std::vector<TermMember>> children(k + 1);
        for (int l = 1; l <= k; ++l)
            children[l] = j_children(k, l, level, max_vertices, tag, budget);

        Dedup<TermMember> next;
        // Choose, per label l, either no child or one J^l-child; glue onto a base.
        std::function<void(int, const TermMember &)> extend = [&](int l, const TermMember & current) {
            if (l > k) {
                next.add(current, tag(current.term));
                return;
            }
            extend(l + 1, current);
            for (const auto & c : children[l]) {
                const int size = current.graph.graph.order() + c.graph.graph.order() - k;
                if (size > max_vertices)
                    continue;
                budget.spend();
                extend(l + 1, TermMember{glue(current.graph, c.graph), make_glue(current.term, c.term)});
            }
        };
        for (const auto & b : base)
            if (b.graph.graph.order() <= max_vertices)
                extend(1, b);
        // Levels are nested, so an unchanged size means a fixed point.
        const bool stable = next.items.size() == level.size();
        level = std::move(next.items);
        if (stable)
            break;
    }
    return level;
}

std::vector<TermMember> enumerate_tw(int k, int d, int max_vertices, std::uint64_t budget)
{
    return enumerate_tw_tagged(k, d, max_vertices, [](const TermPtr &) { return std::uint64_t{0}; }, budget);
}

std::vector<TermMember> enumerate_pw(int k, int d, int max_vertices, std::uint64_t budget_limit)
{
    if (k < 1 || d < 1)
        throw LabelError("enumerate_pw: k and d must be at least 1");
    Budget budget(budget_limit, "enumerate_pw");
    const Tagger no_tag = [](const TermPtr &) { return std::uint64_t{0}; };
    const auto base = base_level(k);
    Dedup<TermMember> all;
    for (const auto & b : base)
        if (b.graph.graph.order() <= max_vertices)
            all.add(b);
    std::vector<TermMember> frontier = all.items;
    for (int depth = 2; depth <= d; ++depth) {
        std::vector<TermMember> fresh;
        for (int l = 1; l <= k; ++l)
            for (const auto & c : j_children(k, l, frontier, max_vertices, no_tag, budget))
                for (const auto & b : base) {
                    budget.spend();
                    TermMember m{glue(b.graph, c.graph), make_glue(b.term, c.term)};
                    if (all.add(m))
                        fresh.push_back(std::move(m));
                }
        frontier = std::move(fresh);
    }
    return std::move(all.items);
}

std::vector<LabelledGraph> enumerate_distinctly_labelled(int k, int max_vertices)
{
    Dedup<TermMember> seen;
    std::vector<LabelledGraph> out;
    for (int n = std::max(k, 1); n <= max_vertices; ++n) {
        for (const auto & g : graphs_of_order(n)) {
            // Every injective k-tuple of vertices.
            std::vector<int> tuple(k, 0);
            std::vector<char> used(n, 0);
            std::function<void(int)> pick = [&](int pos) {
                if (pos == k) {
                    LabelledGraph f{g, tuple, {}};
                    if (seen.add({f, nullptr}))
                        out.push_back(std::move(f));
                    return;
                }
                for (int v = 0; v < n; ++v)
                    if (!used[v]) {
                        used[v] = 1;
                        tuple[pos] = v;
                        pick(pos + 1);
                        used[v] = 0;
                    }
            };
            pick(0);
        }
    }
    return out;
}

std::vector<LabelledGraph> enumerate_atomic(int t)
{
    if (t < 1 || t > 2)
        throw LabelError("enumerate_atomic: t must be 1 or 2");
    const int slots = 2 * t;
    std::vector<LabelledGraph> out;
    // Restricted-growth strings: s[0] = 0, s[i] <= 1 + max(s[0..i-1]).
    std::vector<int> rgs(slots, 0);
    std::function<void(int, int)> walk = [&](int pos, int blocks) {
        if (pos == slots) {
            std::vector<Edge> pairs;
            for (int a = 0; a < blocks; ++a)
                for (int b = a + 1; b < blocks; ++b)
                    pairs.emplace_back(a, b);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
                std::vector<Edge> edges;
                for (std::size_t e = 0; e < pairs.size(); ++e)
                    if (mask & (std::uint64_t{1} << e))
                        edges.push_back(pairs[e]);
                LabelledGraph f;
                f.graph = Graph(blocks, std::move(edges));
                f.in.assign(rgs.begin(), rgs.begin() + t);
                f.out.assign(rgs.begin() + t, rgs.end());
                out.push_back(std::move(f));
            }
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[pos] = b;
            walk(pos + 1, std::max(blocks, b + 1));
        }
    };
    rgs[0] = 0;
    walk(1, 1);
    return out;
}

// ---------------------------------------------------------------- Lasserre terms

namespace {

void check_atomic(const LabelledGraph & a)
{
    check_labels(a);
    if (a.in.size() != a.out.size() || a.in.empty())
        throw LabelError("atomic graph must be (t,t)-bilabelled with t >= 1");
    std::vector<char> hit(a.graph.order(), 0);
    for (int v : a.slots())
        hit[v] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw LabelError("atomic graph has an unlabelled vertex");
}

} // namespace

LasserreTermPtr make_atomic(const LabelledGraph & atomic)
{
    check_atomic(atomic);
    auto w = std::make_shared<LasserreTerm>();
    w->kind = LasserreTerm::Kind::Atomic;
    w->t = atomic.arity();
    w->atomic = atomic;
    w->depth = 1;
    return w;
}

LasserreTermPtr make_glue_atomic(const LabelledGraph & atomic, LasserreTermPtr sub)
{
    check_atomic(atomic);
    if (atomic.arity() != sub->t)
        throw LabelError("glue of atomic and term with different t");
    auto w = std::make_shared<LasserreTerm>();
    w->kind = LasserreTerm::Kind::GlueAtomic;
    w->t = sub->t;
    w->atomic = atomic;
    w->depth = sub->depth;
    w->left = std::move(sub);
    return w;
}

LasserreTermPtr make_permute(std::vector<int> sigma, LasserreTermPtr sub)
{
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        if (sorted[i] != i)
            throw LabelError("perm: not a permutation");
    if (static_cast<int>(sigma.size()) != 2 * sub->t)
        throw LabelError("perm: permutation must act on 2t labels");
    auto w = std::make_shared<LasserreTerm>();
    w->kind = LasserreTerm::Kind::Permute;
    w->t = sub->t;
    w->sigma = std::move(sigma);
    w->depth = sub->depth;
    w->left = std::move(sub);
    return w;
}

LasserreTermPtr make_series(LasserreTermPtr a, LasserreTermPtr b)
{
    if (a->t != b->t)
        throw LabelError("series of terms with different t");
    auto w = std::make_shared<LasserreTerm>();
    w->kind = LasserreTerm::Kind::Series;
    w->t = a->t;
    w->depth = std::max(a->depth, b->depth) + 1;
    w->left = std::move(a);
    w->right = std::move(b);
    return w;
}

LabelledGraph val(const LasserreTerm & w)
{
    switch (w.kind) {
    case LasserreTerm::Kind::Atomic:
        return w.atomic;
    case LasserreTerm::Kind::GlueAtomic:
        return glue(w.atomic, val(*w.left));
    case LasserreTerm::Kind::Permute:
        return permute_labels(val(*w.left), w.sigma);
    case LasserreTerm::Kind::Series:
        return series(val(*w.left), val(*w.right));
    }
    throw LabelError("corrupt Lasserre term");
}

namespace {

std::string bracket_list(const std::vector<int> & v, int offset)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i] + offset);
    return s + "]";
}

std::string atomic_text(const LabelledGraph & a) { return "atomic(" + to_inline(a.graph) + "," + bracket_list(a.in, 0) + "," + bracket_list(a.out, 0) + ")"; }

std::vector<int> parse_bracket_list(Cursor & c, int offset)
{
    std::vector<int> out;
    c.expect('[');
    if (!c.peek(']')) {
        out.push_back(static_cast<int>(c.integer()) - offset);
        while (c.peek(',')) {
            c.expect(',');
            out.push_back(static_cast<int>(c.integer()) - offset);
        }
    }
    c.expect(']');
    return out;
}

LabelledGraph parse_atomic(Cursor & c)
{
    c.expect_word("atomic");
    c.expect('(');
    c.expect_word("n");
    c.expect('=');
    const int n = static_cast<int>(c.integer());
    c.expect(';');
    std::vector<Edge> edges;
    while (c.at_digit()) {
        const int u = static_cast<int>(c.integer());
        c.expect('-');
        const int v = static_cast<int>(c.integer());
        edges.emplace_back(u, v);
        c.expect(',');
    }
    if (edges.empty())
        c.expect(',');
    LabelledGraph a;
    try {
        a.graph = Graph(n, std::move(edges));
    }
    catch (const GraphError & e) {
        c.fail(e.what());
    }
    a.in = parse_bracket_list(c, 0);
    c.expect(',');
    a.out = parse_bracket_list(c, 0);
    c.expect(')');
    for (int v : a.slots())
        if (v < 0 || v >= n)
            c.fail("label out of range");
    return a;
}

LasserreTermPtr parse_lasserre_at(Cursor & c)
{
    if (c.peek_word("atomic"))
        return make_atomic(parse_atomic(c));
    if (c.peek_word("glue")) {
        c.expect_word("glue");
        c.expect('(');
        auto a = parse_atomic(c);
        c.expect(',');
        auto w = parse_lasserre_at(c);
        c.expect(')');
        return make_glue_atomic(a, w);
    }
    if (c.peek_word("perm")) {
        c.expect_word("perm");
        c.expect('(');
        auto sigma = parse_bracket_list(c, 1);
        c.expect(',');
        auto w = parse_lasserre_at(c);
        c.expect(')');
        return make_permute(std::move(sigma), w);
    }
    if (c.peek_word("series")) {
        c.expect_word("series");
        c.expect('(');
        auto a = parse_lasserre_at(c);
        c.expect(',');
        auto b = parse_lasserre_at(c);
        c.expect(')');
        return make_series(a, b);
    }
    c.fail("expected atomic, glue, perm or series");
}

} // namespace

std::string to_text(const LasserreTermPtr & w)
{
    switch (w->kind) {
    case LasserreTerm::Kind::Atomic:
        return atomic_text(w->atomic);
    case LasserreTerm::Kind::GlueAtomic:
        return "glue(" + atomic_text(w->atomic) + "," + to_text(w->left) + ")";
    case LasserreTerm::Kind::Permute:
        return "perm(" + bracket_list(w->sigma, 1) + "," + to_text(w->left) + ")";
    case LasserreTerm::Kind::Series:
        return "series(" + to_text(w->left) + "," + to_text(w->right) + ")";
    }
    return "?";
}

LasserreTermPtr parse_lasserre_term(std::string_view text)
{
    Cursor c(text);
    auto w = parse_lasserre_at(c);
    c.finish();
    return w;
}

std::vector<LasserreMember> enumerate_lasserre_terms(int t, int depth, int max_vertices, std::uint64_t budget_limit)
{
    if (depth < 1)
        throw LabelError("enumerate_lasserre: depth must be at least 1");
    Budget budget(budget_limit, "enumerate_lasserre");
    const auto atomics = enumerate_atomic(t);
    std::vector<std::vector<int>> transpositions;
    for (int i = 0; i < 2 * t; ++i)
        for (int j = i + 1; j < 2 * t; ++j) {
            std::vector<int> sigma(2 * t);
            std::iota(sigma.begin(), sigma.end(), 0);
            std::swap(sigma[i], sigma[j]);
            transpositions.push_back(std::move(sigma));
        }

    Dedup<LasserreMember> all;
    // Adds m and everything reachable by atomic gluing and transpositions.
    auto close_from = [&](std::vector<LasserreMember> seeds) {
        std::vector<LasserreMember> work;
        for (auto & m : seeds)
            if (m.graph.graph.order() <= max_vertices && all.add(m))
                work.push_back(std::move(m));
        while (!work.empty()) {
            const LasserreMember m = work.back();
            work.pop_back();
            auto offer = [&](LasserreMember next) {
                if (next.graph.graph.order() <= max_vertices && all.add(next))
                    work.push_back(std::move(next));
            };
            for (const auto & a : atomics) {
                budget.spend();
                try {
                    offer({glue(a, m.graph), make_glue_atomic(a, m.term)});
                }
                catch (const LabelError &) {
                    // Gluing produced a self-loop: its tensor is zero.
                }
            }
            for (const auto & sigma : transpositions) {
                budget.spend();
                offer({permute_labels(m.graph, sigma), make_permute(sigma, m.term)});
            }
        }
    };

    std::vector<LasserreMember> seeds;
    for (const auto & a : atomics)
        seeds.push_back({a, make_atomic(a)});
    close_from(std::move(seeds));
    for (int d = 2; d <= depth; ++d) {
        const std::vector<LasserreMember> previous = all.items;
        std::vector<LasserreMember> products;
        for (const auto & a : previous)
            for (const auto & b : previous) {
                budget.spend();
                try {
                    products.push_back({series(a.graph, b.graph), make_series(a.term, b.term)});
                }
                catch (const LabelError &) {
                }
            }
        close_from(std::move(products));
    }
    return std::move(all.items);
}

std::vector<Graph> enumerate_lasserre(int t, int depth, int max_vertices, std::uint64_t budget)
{
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Graph> out;
    for (const auto & m : enumerate_lasserre_terms(t, depth, max_vertices, budget))
        if (seen.insert(canonical_code(m.graph.graph)).second)
            out.push_back(m.graph.graph);
    return out;
}

} // namespace homind
