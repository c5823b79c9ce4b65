#include <homind/automaton.hpp>
#include <homind/decomposition.hpp>
#include <homind/engine.hpp>
#include <homind/lasserre.hpp>
#include <homind/oracle.hpp>
#include <homind/wl_cfi.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

using namespace homind;

namespace {

constexpr int exit_accept = 0;
constexpr int exit_reject = 1;
constexpr int exit_error = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordered key=value report, printed as lines or as one JSON object.
class Report {
public:
    Report & add(const std::string & key, const std::string & value)
    {
        items_.emplace_back(key, value);
        return *this;
    }

    void print(bool json) const
    {
        if (json) {
            nlohmann::ordered_json j;
            for (const auto & [k, v] : items_) {
                if (j.contains(k)) {
                    if (!j[k].is_array())
                        j[k] = nlohmann::ordered_json::array({j[k]});
                    j[k].push_back(v);
                }
                else
                    j[k] = v;
            }
            std::cout << j.dump() << '\n';
        }
        else {
            for (const auto & [k, v] : items_)
                std::cout << k << '=' << v << '\n';
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> items_;
};

std::uint64_t env_budget()
{
    if (const char * text = std::getenv("HOMIND_BUDGET")) {
        try {
            return std::stoull(text);
        }
        catch (const std::exception &) {
            throw UsageError("HOMIND_BUDGET must be a positive integer");
        }
    }
    return default_enumeration_budget;
}

struct AutomatonChoice {
    std::string file;
    std::string builtin;
    int k = 0;

    void attach(CLI::App * app)
    {
        auto * f = app->add_option("--automaton", file, "Automaton file");
        auto * b = app->add_option("--builtin", builtin, "Builtin automaton: tw-all | paths");
        f->excludes(b);
        app->add_option("--k", k, "Arity of the builtin automaton");
    }

    Automaton load() const
    {
        if (!file.empty())
            return read_automaton_file(file);
        if (builtin.empty())
            throw UsageError("one of --automaton or --builtin is required");
        if (k < 1)
            throw UsageError("--builtin needs --k >= 1");
        return builtin_automaton(builtin, k);
    }
};

BigInt parse_prime_option(const std::string & text)
{
    try {
        return parse_bigint(text);
    }
    catch (const std::exception & e) {
        throw UsageError(std::string("--prime: ") + e.what());
    }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t> & seed)
{
    if (seed)
        return *seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int print_verdict(const Verdict & v, bool json)
{
    if (json)
        std::cout << verdict_json(v) << '\n';
    else
        std::cout << format_verdict(v);
    return v.accept ? exit_accept : exit_reject;
}

std::string log2_text(const BigInt & x)
{
    if (x <= 0)
        return "-inf";
    const std::size_t bits = bit_length(x);
    const std::size_t shift = bits > 53 ? bits - 53 : 0;
    const double top = static_cast<double>(BigInt(x >> shift));
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << std::log2(top) + static_cast<double>(shift);
    return out.str();
}

std::string write_or_print(const std::string & path, const std::string & text)
{
    if (path.empty()) {
        std::cout << text;
        return "-";
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << text;
    return path;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Homomorphism indistinguishability via finite-field subspace closure"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit one JSON object instead of key=value lines");
    std::optional<std::uint64_t> budget_flag;
    app.add_option("--budget", budget_flag, "Enumeration budget (default: HOMIND_BUDGET or built-in)");

    std::string g_path, h_path;
    auto add_pair = [&](CLI::App * sub) {
        sub->add_option("first", g_path, "First graph file")->required();
        sub->add_option("second", h_path, "Second graph file")->required();
    };

    // homind
    auto * homind_cmd = app.add_subcommand("homind", "Decide indistinguishability over the class of an automaton");
    AutomatonChoice homind_aut;
    homind_aut.attach(homind_cmd);
    std::string mode = "random";
    std::string variant_text = "tw";
    std::string prime_text;
    std::optional<std::uint64_t> seed;
    int prime_bits = 0;
    std::size_t trials = 20;
    unsigned parallel = 1;
    std::size_t max_primes = 100000;
    homind_cmd->add_option("--mode", mode, "random | deterministic | single-prime")->check(CLI::IsMember({"random", "deterministic", "single-prime"}));
    homind_cmd->add_option("--variant", variant_text, "tw | pw")->check(CLI::IsMember({"tw", "pw"}));
    homind_cmd->add_option("--prime", prime_text, "Prime for single-prime mode (decimal or 0x-hex)");
    homind_cmd->add_option("--seed", seed, "Master seed (default: OS entropy, echoed)");
    homind_cmd->add_option("--prime-bits", prime_bits, "Heuristic: random primes of this many bits instead of the bound range");
    homind_cmd->add_option("--trials", trials, "Trials for --prime-bits");
    homind_cmd->add_option("--parallel", parallel, "Worker threads for randomized trials");
    homind_cmd->add_option("--max-primes", max_primes, "Prime budget of the deterministic mode");
    add_pair(homind_cmd);

    // modhomind / pwhomind
    AutomatonChoice mod_aut;
    std::optional<std::uint64_t> order_seed;
    auto * mod_cmd = app.add_subcommand("modhomind", "Algorithm 1 modulo one prime (treewidth terms)");
    auto * pw_cmd = app.add_subcommand("pwhomind", "Algorithm 1 modulo one prime without gluing (pathwidth terms)");
    for (auto * sub : {mod_cmd, pw_cmd}) {
        mod_aut.attach(sub);
        sub->add_option("--prime", prime_text, "Prime modulus (decimal or 0x-hex)")->required();
        sub->add_option("--order-seed", order_seed, "Randomize the worklist order");
        add_pair(sub);
    }

    // lasserre
    auto * lasserre_cmd = app.add_subcommand("lasserre", "Modular Lasserre-level indistinguishability");
    int t = 1;
    std::string lasserre_mode = "single-prime";
    lasserre_cmd->add_option("--t", t, "Level t (1 or 2)");
    lasserre_cmd->add_option("--prime", prime_text, "Prime modulus");
    lasserre_cmd->add_option("--mode", lasserre_mode, "single-prime | random")->check(CLI::IsMember({"single-prime", "random"}));
    lasserre_cmd->add_option("--seed", seed, "Master seed");
    lasserre_cmd->add_option("--prime-bits", prime_bits, "Heuristic random b-bit primes");
    lasserre_cmd->add_option("--trials", trials, "Trials for --prime-bits");
    lasserre_cmd->add_option("--parallel", parallel, "Worker threads for randomized trials");
    add_pair(lasserre_cmd);

    // wl
    auto * wl_cmd = app.add_subcommand("wl", "k-dimensional Weisfeiler-Leman comparison");
    int wl_k = 1;
    wl_cmd->add_option("--k", wl_k, "Dimension")->required();
    add_pair(wl_cmd);

    // cfi
    auto * cfi_cmd = app.add_subcommand("cfi", "CFI graph of a base graph");
    int parity = 0;
    std::string base_path, out_path, legend_path;
    cfi_cmd->add_option("--parity", parity, "0 or 1");
    cfi_cmd->add_option("base", base_path, "Base graph file")->required();
    cfi_cmd->add_option("--out", out_path, "Output graph file (default stdout)");
    cfi_cmd->add_option("--legend", legend_path, "Write the vertex legend here");

    // gen
    auto * gen_cmd = app.add_subcommand("gen", "Hardness-reduction instances");
    std::string gen_kind;
    int gen_k = 1;
    std::string out_dir = ".";
    gen_cmd->add_option("kind", gen_kind, "wl-hardness | clique")->required()->check(CLI::IsMember({"wl-hardness", "clique"}));
    gen_cmd->add_option("base", base_path, "Source graph file")->required();
    gen_cmd->add_option("--k", gen_k, "Parameter k")->required();
    gen_cmd->add_option("--out-dir", out_dir, "Directory for first.graph, second.graph and the legend");

    // oracle
    auto * oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
    std::string oracle_kind;
    std::string class_text = "all";
    int max_size = 0;
    int size_k = 0;
    std::string mod_text;
    int lasserre_depth = 3;
    AutomatonChoice oracle_aut;
    oracle_cmd->add_option("kind", oracle_kind, "homind | size | paths")->required()->check(CLI::IsMember({"homind", "size", "paths"}));
    oracle_cmd->add_option("--class", class_text, "all | tw:<w> | pw:<w> | paths | lasserre-t1 | automaton");
    oracle_cmd->add_option("--max-size", max_size, "Largest member order");
    oracle_cmd->add_option("--size-k", size_k, "k for the size decider");
    oracle_cmd->add_option("--mod", mod_text, "Compare counts modulo this number");
    oracle_cmd->add_option("--depth", lasserre_depth, "Term depth for lasserre-t1");
    oracle_aut.attach(oracle_cmd);
    add_pair(oracle_cmd);

    // enumerate
    auto * enum_cmd = app.add_subcommand("enumerate", "Enumerate graphs, terms and labelled classes");
    std::string enum_kind;
    int enum_k = 1, enum_d = 1, enum_max = 4, enum_n = 1;
    enum_cmd->add_option("kind", enum_kind, "graphs | tw | pw | distinct | atomic | lasserre")
        ->required()
        ->check(CLI::IsMember({"graphs", "tw", "pw", "distinct", "atomic", "lasserre"}));
    enum_cmd->add_option("--k", enum_k, "Arity (or t for atomic/lasserre)");
    enum_cmd->add_option("--d", enum_d, "Depth");
    enum_cmd->add_option("--max-vertices", enum_max, "Vertex cap");
    enum_cmd->add_option("--n", enum_n, "Order for `graphs`");

    // bounds
    auto * bounds_cmd = app.add_subcommand("bounds", "Class-size bounds and randomized trial counts");
    bool b_tw = false, b_pw = false, b_lasserre = false;
    std::uint64_t b_n = 1, b_k = 1, b_c = 1, b_t = 1;
    bounds_cmd->add_flag("--tw", b_tw, "Treewidth bound");
    bounds_cmd->add_flag("--pw", b_pw, "Pathwidth bound");
    bounds_cmd->add_flag("--lasserre", b_lasserre, "Lasserre bound");
    bounds_cmd->add_option("--n", b_n, "Input order")->required();
    bounds_cmd->add_option("--k", b_k, "Arity");
    bounds_cmd->add_option("--C", b_c, "Number of automaton states");
    bounds_cmd->add_option("--t", b_t, "Lasserre level");

    // validate-automaton
    auto * val_cmd = app.add_subcommand("validate-automaton", "Check an automaton against a membership oracle, or learn one");
    AutomatonChoice val_aut;
    val_aut.attach(val_cmd);
    std::string member_class;
    int context_bound = 5, term_bound = 5, candidate_bound = 4;
    bool learn = false;
    val_cmd->add_option("--class", member_class, "Membership oracle: paths | tw-all | all (default: the builtin name)");
    val_cmd->add_option("--context-bound", context_bound, "Largest context order");
    val_cmd->add_option("--term-bound", term_bound, "Largest term order");
    val_cmd->add_flag("--learn", learn, "Learn an automaton for --class at arity --k first and print it");
    val_cmd->add_option("--candidate-bound", candidate_bound, "Learner candidate order");
    val_cmd->add_option("--out", out_path, "Write the learned automaton here");

    // graph
    auto * graph_cmd = app.add_subcommand("graph", "Graph utilities");
    std::string graph_kind;
    std::vector<std::string> graph_files;
    int walk_len = 4;
    graph_cmd->add_option("kind", graph_kind, "info | hom | walks | iso | canon | tw | pw | product | union")
        ->required()
        ->check(CLI::IsMember({"info", "hom", "walks", "iso", "canon", "tw", "pw", "product", "union"}));
    graph_cmd->add_option("files", graph_files, "Graph files")->required();
    graph_cmd->add_option("--len", walk_len, "Largest walk length");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_error;
    }

    try {
        const std::uint64_t budget = budget_flag.value_or(env_budget());
        auto pair = [&] { return std::pair{read_graph_file(g_path), read_graph_file(h_path)}; };

        if (homind_cmd->parsed()) {
            const auto aut = homind_aut.load();
            const auto [g, h] = pair();
            const Variant variant = variant_text == "tw" ? Variant::Treewidth : Variant::Pathwidth;
            if (prime_bits > 0) {
                RandomizedOptions opts;
                opts.seed = resolve_seed(seed);
                opts.parallel = parallel;
                return print_verdict(homind_prime_bits(g, h, aut, variant, prime_bits, trials, opts), json);
            }
            if (mode == "single-prime") {
                if (prime_text.empty())
                    throw UsageError("--mode single-prime needs --prime");
                return print_verdict(modhomind_variant(g, h, aut, parse_prime_option(prime_text), variant), json);
            }
            if (mode == "deterministic") {
                if (variant != Variant::Pathwidth)
                    throw UsageError("the deterministic mode exists for --variant pw only");
                return print_verdict(homind_deterministic_crt(g, h, aut, max_primes), json);
            }
            RandomizedOptions opts;
            opts.seed = resolve_seed(seed);
            opts.parallel = parallel;
            try {
                return print_verdict(homind_randomized(g, h, aut, variant, opts), json);
            }
            catch (const BoundTooLarge & e) {
                throw UsageError(std::string(e.what()) + "; use --prime-bits <b> for the heuristic mode");
            }
        }
        if (mod_cmd->parsed() || pw_cmd->parsed()) {
            const auto aut = mod_aut.load();
            const auto [g, h] = pair();
            EngineOptions opts;
            opts.order_seed = order_seed;
            const Variant variant = mod_cmd->parsed() ? Variant::Treewidth : Variant::Pathwidth;
            return print_verdict(modhomind_variant(g, h, aut, parse_prime_option(prime_text), variant, opts), json);
        }
        if (lasserre_cmd->parsed()) {
            const auto [g, h] = pair();
            if (prime_bits > 0) {
                RandomizedOptions opts;
                opts.seed = resolve_seed(seed);
                opts.parallel = parallel;
                return print_verdict(lasserre_prime_bits(g, h, t, prime_bits, trials, opts), json);
            }
            if (lasserre_mode == "random") {
                RandomizedOptions opts;
                opts.seed = resolve_seed(seed);
                opts.parallel = parallel;
                try {
                    return print_verdict(lasserre_randomized(g, h, t, opts), json);
                }
                catch (const BoundTooLarge & e) {
                    throw UsageError(std::string(e.what()) + "; use --prime-bits <b> for the heuristic mode");
                }
            }
            if (prime_text.empty())
                throw UsageError("lasserre needs --prime or --mode random");
            return print_verdict(lasserre_mod(g, h, t, parse_prime_option(prime_text)), json);
        }
        if (wl_cmd->parsed()) {
            const auto [g, h] = pair();
            const bool same = wl_refine(g, h, wl_k);
            Report().add("wl", same ? "indistinguishable" : "distinguishable").add("k", std::to_string(wl_k)).print(json);
            return same ? exit_accept : exit_reject;
        }
        if (cfi_cmd->parsed()) {
            const auto inst = cfi(read_graph_file(base_path), parity);
            if (!legend_path.empty())
                write_or_print(legend_path, legend_text(inst));
            if (out_path.empty()) {
                std::cout << to_text(inst.result);
            }
            else {
                write_or_print(out_path, to_text(inst.result));
                Report()
                    .add("graph", out_path)
                    .add("vertices", std::to_string(inst.result.order()))
                    .add("edges", std::to_string(inst.result.size()))
                    .add("parity_legend", legend_path.empty() ? "none" : legend_path)
                    .print(json);
            }
            return exit_accept;
        }
        if (gen_cmd->parsed()) {
            const Graph base = read_graph_file(base_path);
            std::filesystem::create_directories(out_dir);
            const auto dir = std::filesystem::path(out_dir);
            ReductionInstance inst;
            std::string legend;
            if (gen_kind == "wl-hardness") {
                inst = gen_wl_hardness(base, gen_k);
                legend = "# parity 1 instance; parity 0 has the same layout with the even gadget at vertex 0\n";
                legend += legend_text(cfi(wl_hardness_base(base), 1));
            }
            else {
                inst = gen_clique_reduction(base, gen_k);
                legend = "# CFI(K_" + std::to_string(gen_k) + ", 1) gadget legend; product vertex (g, c) has index g * |CFI| + c\n";
                legend += legend_text(cfi(complete_graph(gen_k), 1));
            }
            const auto first = (dir / "first.graph").string();
            const auto second = (dir / "second.graph").string();
            const auto legend_file = (dir / "parity_legend.txt").string();
            write_or_print(first, to_text(inst.first));
            write_or_print(second, to_text(inst.second));
            write_or_print(legend_file, legend);
            Report().add("first", first).add("second", second).add("k", std::to_string(inst.k)).add("parity_legend", legend_file).print(json);
            return exit_accept;
        }
        if (oracle_cmd->parsed()) {
            const auto [g, h] = pair();
            std::optional<BigInt> modulus;
            if (!mod_text.empty())
                modulus = parse_bigint(mod_text);
            if (oracle_kind == "paths") {
                const bool same = paths_oracle(g, h, modulus);
                Report().add("indistinguishable", same ? "true" : "false").add("class", "paths").print(json);
                return same ? exit_accept : exit_reject;
            }
            OracleResult result;
            std::string label;
            if (oracle_kind == "size") {
                result = homind_size_bruteforce(g, h, size_k);
                label = "size<=" + std::to_string(size_k);
            }
            else {
                ClassSpec spec;
                if (class_text == "automaton") {
                    spec.kind = ClassSpec::Kind::Automaton;
                    spec.automaton = oracle_aut.load();
                }
                else
                    spec = parse_class_spec(class_text);
                spec.depth = lasserre_depth;
                spec.budget = budget;
                result = homind_bruteforce(g, h, spec, max_size, modulus);
                label = to_string(spec);
            }
            Report r;
            r.add("indistinguishable", result.indistinguishable ? "true" : "false").add("class", label).add("members", std::to_string(result.members));
            r.add("witness", result.witness ? to_inline(*result.witness) : "none");
            if (result.witness)
                r.add("hom_g", result.hom_g.str()).add("hom_h", result.hom_h.str());
            r.print(json);
            return result.indistinguishable ? exit_accept : exit_reject;
        }
        if (enum_cmd->parsed()) {
            std::size_t count = 0;
            nlohmann::ordered_json items = nlohmann::ordered_json::array();
            auto emit = [&](const std::string & term, const std::string & graph) {
                ++count;
                if (json)
                    items.push_back({{"term", term}, {"graph", graph}});
                else
                    std::cout << (term.empty() ? graph : term + '\t' + graph) << '\n';
            };
            if (enum_kind == "graphs") {
                if (enum_n < 1 || enum_n > 8)
                    throw UsageError("--n must be in 1..8");
                for (const auto & g : graphs_of_order(enum_n))
                    emit("", to_inline(g));
            }
            else if (enum_kind == "tw" || enum_kind == "pw") {
                const auto members = enum_kind == "tw" ? enumerate_tw(enum_k, enum_d, enum_max, budget) : enumerate_pw(enum_k, enum_d, enum_max, budget);
                for (const auto & m : members)
                    emit(to_text(m.term), to_text(m.graph));
            }
            else if (enum_kind == "distinct") {
                for (const auto & f : enumerate_distinctly_labelled(enum_k, enum_max))
                    emit("", to_text(f));
            }
            else if (enum_kind == "atomic") {
                for (const auto & f : enumerate_atomic(enum_k))
                    emit("", to_text(f));
            }
            else {
                for (const auto & m : enumerate_lasserre_terms(enum_k, enum_d, enum_max, budget))
                    emit(to_text(m.term), to_text(m.graph));
            }
            if (json)
                std::cout << nlohmann::ordered_json{{"count", count}, {"items", items}}.dump() << '\n';
            else
                std::cout << "count=" << count << '\n';
            return exit_accept;
        }
        if (bounds_cmd->parsed()) {
            if (int(b_tw) + int(b_pw) + int(b_lasserre) != 1)
                throw UsageError("bounds needs exactly one of --tw, --pw, --lasserre");
            const Bounds b = b_tw ? bound_tw(b_n, b_k, b_c) : b_pw ? bound_pw(b_n, b_k, b_c) : bound_lasserre(b_n, b_t);
            Report()
                .add("class", b_tw ? "tw" : b_pw ? "pw" : "lasserre")
                .add("N", b.N.str())
                .add("N_log2", log2_text(b.N))
                .add("L", b.L.str())
                .add("L_log2", log2_text(b.L))
                .add("trials", std::to_string(b.trials))
                .print(json);
            return exit_accept;
        }
        if (val_cmd->parsed()) {
            std::string cls = member_class.empty() ? val_aut.builtin : member_class;
            if (cls.empty())
                throw UsageError("--class is required with --automaton");
            const int k = val_aut.k;
            Automaton aut;
            if (learn) {
                if (k < 1)
                    throw UsageError("--learn needs --k");
                aut = learn_automaton(builtin_membership(cls, k), k, candidate_bound, context_bound);
                write_or_print(out_path, to_text(aut));
            }
            else
                aut = val_aut.load();
            const auto report = validate_automaton(aut, builtin_membership(cls, aut.k), context_bound, term_bound);
            Report()
                .add("valid", report.ok ? "true" : "false")
                .add("states", std::to_string(aut.states))
                .add("terms", std::to_string(report.terms))
                .add("contexts", std::to_string(report.contexts))
                .add("message", report.message)
                .print(json);
            return report.ok ? exit_accept : exit_reject;
        }
        if (graph_cmd->parsed()) {
            std::vector<Graph> gs;
            for (const auto & f : graph_files)
                gs.push_back(read_graph_file(f));
            auto need = [&](std::size_t count) {
                if (gs.size() != count)
                    throw UsageError("graph " + graph_kind + " takes " + std::to_string(count) + " file(s)");
            };
            Report r;
            if (graph_kind == "info") {
                need(1);
                r.add("vertices", std::to_string(gs[0].order()))
                    .add("edges", std::to_string(gs[0].size()))
                    .add("connected", is_connected(gs[0]) ? "true" : "false")
                    .add("max_degree", std::to_string(max_degree(gs[0])));
            }
            else if (graph_kind == "hom") {
                need(2);
                r.add("hom", std::to_string(hom_count(gs[0], gs[1])));
            }
            else if (graph_kind == "walks") {
                need(1);
                for (const auto & w : walk_counts(gs[0], walk_len))
                    r.add("walks", w.str());
            }
            else if (graph_kind == "iso") {
                need(2);
                r.add("isomorphic", canonical_code(gs[0]) == canonical_code(gs[1]) ? "true" : "false");
            }
            else if (graph_kind == "canon") {
                need(1);
                std::string code;
                for (auto w : canonical_code(gs[0]))
                    code += (code.empty() ? "" : ",") + std::to_string(w);
                r.add("canonical_code", code);
            }
            else if (graph_kind == "tw") {
                need(1);
                r.add("treewidth", std::to_string(exact_treewidth_tiny(gs[0])));
            }
            else if (graph_kind == "pw") {
                need(1);
                r.add("pathwidth", std::to_string(exact_pathwidth_tiny(gs[0])));
            }
            else if (graph_kind == "product" || graph_kind == "union") {
                need(2);
                std::cout << to_text(graph_kind == "product" ? categorical_product(gs[0], gs[1]) : disjoint_union(gs[0], gs[1]));
                return exit_accept;
            }
            r.print(json);
            return exit_accept;
        }
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
