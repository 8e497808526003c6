#include "semiwalk/cayley.hpp"
#include "semiwalk/chain.hpp"
#include "semiwalk/expansions.hpp"
#include "semiwalk/families.hpp"
#include "semiwalk/spec_io.hpp"
#include "semiwalk/stationary.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

using namespace semiwalk;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Input {
    std::string spec_path;
    std::string family;
};

void add_input(CLI::App* app, Input& in) {
    auto* spec = app->add_option("--spec", in.spec_path, "JSON semigroup specification file");
    auto* fam = app->add_option("--family", in.family, "built-in family, e.g. tsetlin:3 or rees_zp:2,2");
    spec->excludes(fam);
}

LoadedSpec load(const Input& in, bool check_tables = true) {
    if (!in.family.empty()) {
        LoadedSpec s;
        s.family = make_family(in.family);
        s.semigroup = s.family->semigroup;
        return s;
    }
    if (in.spec_path.empty()) throw Error(ErrorCode::Parse, "give --spec FILE or --family NAME");
    return load_spec_file(in.spec_path, check_tables);
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string element_set(const Semigroup& S, const std::vector<int>& elems) {
    std::string s = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? "," : "") + S.name(elems[i]);
    return s + "}";
}

std::uint64_t parse_count(const std::string& text, const char* what) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || v < 0 || v != std::floor(v) || v > 1e15)
        throw Error(ErrorCode::Parse, std::string("bad ") + what + " '" + text + "'");
    return static_cast<std::uint64_t>(v);
}

std::vector<Rational> probabilities(const Semigroup& S, const std::string& spec) {
    return parse_probabilities(S, spec.empty() ? "uniform" : spec);
}

// ---------------------------------------------------------------------- build

int cmd_build(const Input& in, const std::string& format) {
    const LoadedSpec L = load(in);
    const Semigroup& S = L.semigroup;
    const std::vector<int> K = minimal_ideal(S);
    const bool lz = is_left_zero(S, K);
    if (format == "json") {
        Json j;
        j["size"] = S.size();
        j["generators"] = S.generator_names();
        Json elems = Json::array();
        for (std::size_t e = 0; e < S.size(); ++e) elems.push_back({{"name", S.name(static_cast<int>(e))}, {"label", S.label(static_cast<int>(e))}});
        j["elements"] = elems;
        Json k = Json::array();
        for (int e : K) k.push_back(S.name(e));
        j["minimal_ideal"] = k;
        j["left_zero"] = lz;
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "|S|=" << S.size() << ", K=" << element_set(S, K) << ", left-zero: " << (lz ? "yes" : "no") << "\n";
    std::string labels;
    for (std::size_t i = 0; i < K.size(); ++i) labels += (i ? "," : "") + S.label(K[i]);
    std::cout << "K labels: {" << labels << "}\n";
    return kOk;
}

// --------------------------------------------------------------------- expand

int cmd_expand(const Input& in, bool rcay, bool kr, bool mc, const std::string& dot_path) {
    const LoadedSpec L = load(in);
    const Semigroup& S = L.semigroup;
    if (rcay + kr + mc != 1) throw Error(ErrorCode::Parse, "choose exactly one of --rcay, --kr, --mc");
    RootedGraph G;
    std::vector<char> dashed;
    std::string name;
    if (rcay) {
        G = right_cayley(S);
        name = "RCay";
    } else {
        KRExpansion K = karnofsky_rhodes(S);
        if (kr) {
            G = K.graph;
            name = "KR";
        } else {
            McExpansion M = mccammond(K.graph);
            G = M.graph;
            dashed.assign(G.size() * static_cast<std::size_t>(G.num_generators), 0);
            for (std::size_t v = 0; v < G.size(); ++v)
                for (int a = 0; a < G.num_generators; ++a)
                    if (!M.is_tree_edge(static_cast<int>(v), a)) dashed[static_cast<std::size_t>(G.edge_id(static_cast<int>(v), a))] = 1;
            name = "McKR";
        }
    }
    const std::vector<char> blue = transition_edges(G);
    std::cout << name << ": vertices=" << G.size() << ", edges=" << G.edge_count()
              << ", transition edges=" << std::count(blue.begin(), blue.end(), 1) << "\n";
    if (!dot_path.empty()) {
        DotStyle style;
        style.blue = &blue;
        if (!dashed.empty()) style.dashed = &dashed;
        const std::string dot = to_dot(G, S.generator_names(), style, name);
        if (dot_path == "-") {
            std::cout << dot;
        } else {
            std::ofstream out(dot_path);
            if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + dot_path + "'");
            out << dot;
        }
    }
    return kOk;
}

// ----------------------------------------------------------------- stationary

struct StationaryArgs {
    std::string probs;
    bool limit_zero = false;
    bool expressions = false;
    bool as_float = false;
    std::string format = "text";
    std::string level;
};

Distribution at_level(const LoadedSpec& L, const StationaryResult& R, const std::string& level, std::string& used) {
    used = level;
    if (used.empty()) {
        if (L.family) used = L.family->level == Level::KR ? "kr" : L.family->level == Level::S ? "s" : "family";
        else used = "s";
    }
    if (used == "kr") return R.kr;
    if (used == "s") return R.s;
    if (used == "family") {
        if (!L.family || L.family->level != Level::Lumped) throw Error(ErrorCode::Parse, "--level family needs a lumped family");
        const KRExpansion kr = karnofsky_rhodes(L.semigroup);
        std::map<std::string, Rational> mass;
        for (const auto& k : L.family->lump_keys) mass[k] = 0;
        for (std::size_t i = 0; i < R.kr.size(); ++i)
            mass[L.family->lump(kr.graph.word[static_cast<std::size_t>(R.kr_vertices[i])])] += R.kr.values[i];
        Distribution d;
        for (const auto& k : L.family->lump_keys) {
            d.keys.push_back(k);
            d.values.push_back(mass[k]);
        }
        return d;
    }
    throw Error(ErrorCode::Parse, "unknown level '" + used + "'");
}

int cmd_stationary(const Input& in, const StationaryArgs& a) {
    const LoadedSpec L = load(in);
    const std::vector<Rational> x = probabilities(L.semigroup, a.probs);
    StationaryOptions opt;
    opt.expressions = a.expressions;
    opt.force_limit = a.limit_zero;
    const StationaryResult R = stationary(L.semigroup, x, opt);
    std::string level;
    const Distribution d = at_level(L, R, a.level, level);
    const bool normalized = normalization_check(d);
    auto value = [&](const Rational& v) { return a.as_float ? fmt_double(to_double(v)) : to_string(v); };

    if (a.format == "json") {
        Json j;
        j["level"] = level;
        j["limit_mode"] = R.limit_mode;
        Json dist = Json::object();
        for (std::size_t i = 0; i < d.size(); ++i) dist[d.keys[i]] = value(d.values[i]);
        j["distribution"] = dist;
        j["sum"] = value(d.total());
        j["normalized"] = normalized;
        if (a.expressions) {
            Json nfs = Json::array();
            for (const auto& nf : R.normal_forms)
                nfs.push_back({{"word", nf.word}, {"kr_vertex", nf.kr_key}, {"weight", nf.weight}, {"expression", nf.expr},
                               {"zimin", nf.zimin}});
            j["normal_forms"] = nfs;
        }
        std::cout << j.dump(2) << "\n";
    } else if (a.format == "csv") {
        std::cout << "key,value\n";
        for (std::size_t i = 0; i < d.size(); ++i) std::cout << d.keys[i] << "," << value(d.values[i]) << "\n";
    } else if (a.format == "text") {
        std::cout << "level: " << level << (R.limit_mode ? " (adjoined-zero limit)" : "") << "\n";
        for (std::size_t i = 0; i < d.size(); ++i) std::cout << d.keys[i] << "\t" << value(d.values[i]) << "\n";
        std::cout << "sum\t" << value(d.total()) << (normalized ? "" : "  (NOT normalized)") << "\n";
        if (a.expressions) {
            std::cout << "normal forms:\n";
            for (const auto& nf : R.normal_forms) {
                std::cout << "  " << nf.word << " -> " << nf.kr_key << "\tNF⁻¹ = " << nf.expr;
                if (nf.zimin != nf.expr) std::cout << "  (Zimin: " << nf.zimin << ")";
                std::cout << "\tweight " << nf.weight << "\n";
            }
        }
    } else {
        throw Error(ErrorCode::Parse, "unknown format '" + a.format + "'");
    }
    return normalized ? kOk : kCheckFailed;
}

// --------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string probs;
    bool simulate = false;
    std::string steps = "1e6";
    std::size_t walkers = 100;
    std::uint64_t seed = 42;
    double tv_tolerance = 0.005;
    std::size_t max_length = 12;
};

int cmd_verify(const Input& in, const VerifyArgs& a) {
    const LoadedSpec L = load(in, false);
    const Semigroup& S = L.semigroup;
    const std::vector<Rational> x = probabilities(S, a.probs);
    bool all = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        all = all && ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
    };
    auto guarded = [&](const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            report(name, false, e.what());
        }
    };

    report("associativity", S.is_associative(), "");
    std::optional<StationaryResult> R;
    guarded("stationary", [&] {
        R = stationary(S, x);
        report("normalization", normalization_check(R->kr) && normalization_check(R->s), "sum " + to_string(R->kr.total()));
    });
    guarded("oracle", [&] {
        if (!R) throw Error(ErrorCode::Unavailable, "no exact distribution");
        const FloatDistribution o = stationary_oracle(build_chain(S, x, StateSpace::Monoid));
        const double tv = tv_distance(o, to_float(R->s));
        double diff = 0;
        for (std::size_t i = 0; i < R->s.size(); ++i) diff = std::max(diff, std::fabs(o.at(R->s.keys[i]) - to_double(R->s.values[i])));
        for (std::size_t i = 0; i < o.keys.size(); ++i) diff = std::max(diff, std::fabs(o.values[i] - to_double(R->s.at(o.keys[i]))));
        report("oracle", diff < 1e-10, "max diff " + fmt_double(diff) + ", tv " + fmt_double(tv));
    });
    guarded("lumping KR->S", [&] {
        const LumpingReport r = check_kr_to_s(S, x);
        report("lumping KR->S", r.lumps && r.matches_s,
               std::string("lumps ") + (r.lumps ? "yes" : "no") + ", lumped chain equals S chain " + (r.matches_s ? "yes" : "no"));
    });
    guarded("lumping semaphore->KR", [&] {
        const std::vector<int> K = minimal_ideal(S);
        if (!is_left_zero(S, K)) {
            std::cout << "SKIP lumping semaphore->KR: minimal ideal is not left zero\n";
            return;
        }
        const std::size_t len = truncation_length(S, membership(S, K), a.max_length, 200000);
        const TruncationReport t = check_semaphore_to_kr(S, x, len);
        report("lumping semaphore->KR", t.lumps,
               "length <= " + std::to_string(t.length) + ", " + std::to_string(t.states) + " code words, " +
                   std::to_string(t.interior) + " interior");
    });
    if (L.family && L.family->closed_form) {
        guarded("closed form", [&] {
            const Distribution got = family_distribution(*L.family, x);
            const Distribution want = L.family->closed_form(x);
            bool same = true;
            for (std::size_t i = 0; i < want.size(); ++i) same = same && got.at(want.keys[i]) == want.values[i];
            for (std::size_t i = 0; i < got.size(); ++i) same = same && want.at(got.keys[i]) == got.values[i];
            report("closed form", same, L.family->name);
        });
    }
    if (a.simulate) {
        guarded("simulation", [&] {
            if (!R) throw Error(ErrorCode::Unavailable, "no exact distribution");
            const std::uint64_t total = parse_count(a.steps, "step count");
            SimulationOptions opt;
            opt.walkers = std::max<std::size_t>(1, a.walkers);
            opt.steps = std::max<std::uint64_t>(1, total / opt.walkers);
            opt.seed = a.seed;
            const SimulationResult sim = simulate_semaphore(S, x, opt);
            const double tv = tv_distance(sim.distribution(), to_float(R->kr));
            report("simulation", tv <= a.tv_tolerance,
                   "tv " + fmt_double(tv) + " over " + std::to_string(sim.total) + " steps (" + std::to_string(opt.walkers) +
                       " walkers, seed " + std::to_string(opt.seed) + (sim.adjoined_zero ? ", adjoined zero" : "") + ")");
        });
    }
    return all ? kOk : kCheckFailed;
}

// --------------------------------------------------------------------- mixing

int cmd_mixing(const Input& in, const std::string& probs, const std::string& c_text, std::size_t walkers,
               std::uint64_t seed, const std::string& format) {
    const LoadedSpec L = load(in);
    const std::vector<Rational> x = probabilities(L.semigroup, probs);
    const Rational c = parse_rational(c_text);
    if (c <= 0) throw Error(ErrorCode::Parse, "c must be positive");
    const MixingBound b = mixing_bound(L.semigroup, x, c);
    const MixingCheck m = mixing_check(L.semigroup, x, b.k, walkers, seed);
    const double target = std::exp(-to_double(c));
    const bool ok = m.simulated_tv <= target;
    if (format == "json") {
        Json j;
        j["n"] = b.n;
        j["ell"] = b.ell;
        j["p"] = to_string(b.p);
        j["c"] = to_string(b.c);
        j["k"] = b.k;
        j["simulated_tv"] = m.simulated_tv;
        j["exact_tv"] = m.exact_tv;
        j["worst_start"] = m.worst_start;
        j["target"] = target;
        j["pass"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n=" << b.n << " ell=" << b.ell << " p=" << to_string(b.p) << " c=" << to_string(b.c) << " k=" << b.k << "\n"
                  << "tv at k steps: simulated " << fmt_double(m.simulated_tv) << " (worst start " << m.worst_start
                  << "), evolved " << fmt_double(m.exact_tv) << ", bound e^-c = " << fmt_double(target) << "\n"
                  << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stationary distributions of random walks on finite semigroups"};
    app.require_subcommand(1);

    Input in;
    std::string format = "text";

    auto* build = app.add_subcommand("build", "summarize a semigroup");
    add_input(build, in);
    build->add_option("--format", format, "text or json");

    bool rcay = false, kr = false, mc = false;
    std::string dot;
    auto* expand = app.add_subcommand("expand", "build RCay, KR or Mc∘KR and optionally write DOT");
    add_input(expand, in);
    expand->add_flag("--rcay", rcay, "right Cayley graph");
    expand->add_flag("--kr", kr, "Karnofsky-Rhodes expansion");
    expand->add_flag("--mc", mc, "McCammond expansion of KR");
    expand->add_option("--dot", dot, "write DOT to FILE ('-' for stdout)");

    StationaryArgs sa;
    auto* stat = app.add_subcommand("stationary", "exact stationary distribution");
    add_input(stat, in);
    stat->add_option("--probs", sa.probs, "a=1/3,b=2/3 or uniform (default)");
    stat->add_flag("--limit-zero", sa.limit_zero, "use the adjoined-zero limit even for a left-zero ideal");
    stat->add_flag("--expressions", sa.expressions, "print normal forms and their Kleene expressions");
    stat->add_flag("--float", sa.as_float, "decimal output");
    stat->add_option("--format", sa.format, "text, json or csv");
    stat->add_option("--level", sa.level, "kr, s or family (default: the family's level, else s)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "cross-check the engine against the oracle, lumping and simulation");
    add_input(verify, in);
    verify->add_option("--probs", va.probs, "a=1/3,b=2/3 or uniform (default)");
    verify->add_flag("--simulate", va.simulate, "run the semaphore simulation");
    verify->add_option("--steps", va.steps, "aggregate simulation steps (default 1e6)");
    verify->add_option("--walkers", va.walkers, "independent walkers (default 100)");
    verify->add_option("--seed", va.seed, "simulation seed (default 42)");
    verify->add_option("--tv-tolerance", va.tv_tolerance, "simulation pass threshold (default 0.005)");
    verify->add_option("--max-length", va.max_length, "semaphore truncation length (default 12)");

    std::string mprobs, c_text = "1";
    std::size_t mwalkers = 20000;
    std::uint64_t mseed = 42;
    auto* mixing = app.add_subcommand("mixing", "mixing-time bound and a simulated check at the bound");
    add_input(mixing, in);
    mixing->add_option("--probs", mprobs, "a=1/3,b=2/3 or uniform (default)");
    mixing->add_option("--c", c_text, "target exponent, TV <= e^-c (default 1)");
    mixing->add_option("--walkers", mwalkers, "walkers per start state (default 20000)");
    mixing->add_option("--seed", mseed, "seed (default 42)");
    mixing->add_option("--format", format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (build->parsed()) return cmd_build(in, format);
        if (expand->parsed()) return cmd_expand(in, rcay, kr, mc, dot);
        if (stat->parsed()) return cmd_stationary(in, sa);
        if (verify->parsed()) return cmd_verify(in, va);
        if (mixing->parsed()) return cmd_mixing(in, mprobs, c_text, mwalkers, mseed, format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::Parse:
            case ErrorCode::InvalidArgument:
            case ErrorCode::InvalidProbabilities:
            case ErrorCode::NotAssociative:
            case ErrorCode::GeneratorsDoNotGenerate: return kUsage;
            default: return kCheckFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
