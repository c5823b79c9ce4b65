#include <homind/verdict.hpp>

#include <json.hpp>

#include <sstream>

namespace homind {

std::string to_string(VerdictMode mode)
{
    switch (mode) {
    case VerdictMode::SinglePrime:
        return "single-prime";
    case VerdictMode::Randomized:
        return "randomized";
    case VerdictMode::DeterministicCrt:
        return "deterministic-crt";
    case VerdictMode::PrimeBits:
        return "prime-bits";
    }
    return "unknown";
}

std::string format_verdict(const Verdict & v)
{
    std::ostringstream out;
    out << "verdict=" << (v.accept ? "accept" : "reject") << '\n';
    out << "mode=" << to_string(v.mode) << '\n';
    out << "variant=" << v.variant << '\n';
    if (v.seed)
        out << "seed=" << *v.seed << '\n';
    if (v.mode == VerdictMode::Randomized || v.mode == VerdictMode::PrimeBits)
        out << "trials=" << v.trials << "\ncomposite_draws=" << v.composite_draws << '\n';
    for (const auto & p : v.primes_used)
        out << "prime=" << p << '\n';
    out << "rejecting_prime=" << (v.rejecting_prime ? v.rejecting_prime->str() : std::string("none")) << '\n';
    out << "witness=" << (v.witness ? to_inline(*v.witness) : std::string("none")) << '\n';
    if (v.witness)
        out << "witness_source=" << v.witness_source << '\n';
    out << "small_stage=" << (v.small_none ? "none" : "checked") << '\n';
    out << "heuristic=" << (v.heuristic ? "true" : "false") << '\n';
    out << "basis_size=" << v.basis_size << '\n';
    return out.str();
}

std::string verdict_json(const Verdict & v)
{
    nlohmann::ordered_json j;
    j["verdict"] = v.accept ? "accept" : "reject";
    j["mode"] = to_string(v.mode);
    j["variant"] = v.variant;
    if (v.seed)
        j["seed"] = *v.seed;
    if (v.mode == VerdictMode::Randomized || v.mode == VerdictMode::PrimeBits) {
        j["trials"] = v.trials;
        j["composite_draws"] = v.composite_draws;
    }
    auto primes = nlohmann::ordered_json::array();
    for (const auto & p : v.primes_used)
        primes.push_back(p.str());
    j["primes"] = primes;
    j["rejecting_prime"] = v.rejecting_prime ? nlohmann::ordered_json(v.rejecting_prime->str()) : nlohmann::ordered_json(nullptr);
    j["witness"] = v.witness ? nlohmann::ordered_json(to_inline(*v.witness)) : nlohmann::ordered_json(nullptr);
    if (v.witness)
        j["witness_source"] = v.witness_source;
    j["small_stage"] = v.small_none ? "none" : "checked";
    j["heuristic"] = v.heuristic;
    j["basis_size"] = v.basis_size;
    return j.dump();
}

} // namespace homind
