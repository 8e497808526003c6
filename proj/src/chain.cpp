#include "semiwalk/chain.hpp"

#include "semiwalk/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace semiwalk {

// ------------------------------------------------------------------- matrices

bool TransitionMatrix::is_column_stochastic() const {
    for (const auto& col : columns) {
        Rational sum = 0;
        for (const auto& [to, w] : col) sum += w;
        if (sum != 1) return false;
    }
    return true;
}

Rational TransitionMatrix::entry(int to, int from) const {
    for (const auto& [t, w] : columns[static_cast<std::size_t>(from)])
        if (t == to) return w;
    return Rational(0);
}

namespace {

std::vector<std::pair<int, Rational>> to_column(const std::map<int, Rational>& m) {
    return {m.begin(), m.end()};
}

}  // namespace

TransitionMatrix build_chain(const Semigroup& S, const std::vector<Rational>& x, StateSpace space) {
    const int k = S.num_generators();
    if (static_cast<int>(x.size()) != k) throw Error(ErrorCode::InvalidProbabilities, "probability count mismatch");
    TransitionMatrix T;
    if (space == StateSpace::Monoid) {
        T.labels.push_back("1");
        for (std::size_t e = 0; e < S.size(); ++e) T.labels.push_back(S.name(static_cast<int>(e)));
        std::map<int, Rational> col;
        for (int a = 0; a < k; ++a) col[monoid_state(S.generator(a))] += x[static_cast<std::size_t>(a)];
        T.columns.push_back(to_column(col));
        for (std::size_t e = 0; e < S.size(); ++e) {
            col.clear();
            for (int a = 0; a < k; ++a) col[monoid_state(S.left(a, static_cast<int>(e)))] += x[static_cast<std::size_t>(a)];
            T.columns.push_back(to_column(col));
        }
        return T;
    }
    const std::vector<int> K = minimal_ideal(S);
    std::vector<int> index(S.size(), -1);
    for (std::size_t i = 0; i < K.size(); ++i) {
        index[static_cast<std::size_t>(K[i])] = static_cast<int>(i);
        T.labels.push_back(S.name(K[i]));
    }
    for (int s : K) {
        std::map<int, Rational> col;
        for (int a = 0; a < k; ++a) col[index[static_cast<std::size_t>(S.left(a, s))]] += x[static_cast<std::size_t>(a)];
        T.columns.push_back(to_column(col));
    }
    return T;
}

// -------------------------------------------------------------- distributions

double FloatDistribution::at(const std::string& key) const {
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (keys[i] == key) return values[i];
    return 0.0;
}

double tv_distance(const FloatDistribution& p, const FloatDistribution& q) {
    std::map<std::string, double> diff;
    for (std::size_t i = 0; i < p.keys.size(); ++i) diff[p.keys[i]] += p.values[i];
    for (std::size_t i = 0; i < q.keys.size(); ++i) diff[q.keys[i]] -= q.values[i];
    double sum = 0;
    for (const auto& [k, v] : diff) sum += std::fabs(v);
    return sum / 2;
}

FloatDistribution to_float(const Distribution& d) {
    FloatDistribution f;
    f.keys = d.keys;
    for (const Rational& v : d.values) f.values.push_back(to_double(v));
    return f;
}

// --------------------------------------------------------------------- oracle

std::vector<char> recurrent_states(const TransitionMatrix& T) {
    // Pad every adjacency list with self loops so the chain fits a fixed-degree graph.
    RootedGraph G;
    std::size_t degree = 1;
    for (const auto& col : T.columns) degree = std::max(degree, col.size());
    G.num_generators = static_cast<int>(degree);
    for (std::size_t s = 0; s < T.size(); ++s) {
        std::vector<int> out(degree, static_cast<int>(s));
        for (std::size_t i = 0; i < T.columns[s].size(); ++i) out[i] = T.columns[s][i].first;
        G.out.push_back(std::move(out));
        G.image.push_back(static_cast<int>(s));
        G.word.emplace_back();
    }
    const Components C = strongly_connected_components(G);
    std::vector<char> closed(C.members.size(), 1);
    for (std::size_t s = 0; s < T.size(); ++s)
        for (const auto& [t, w] : T.columns[s])
            if (C.of[s] != C.of[static_cast<std::size_t>(t)]) closed[static_cast<std::size_t>(C.of[s])] = 0;
    std::vector<char> out(T.size());
    for (std::size_t s = 0; s < T.size(); ++s) out[s] = closed[static_cast<std::size_t>(C.of[s])];
    return out;
}

FloatDistribution stationary_oracle(const TransitionMatrix& T, const OracleOptions& opt) {
    const std::size_t n = T.size();
    std::vector<std::vector<std::pair<int, double>>> cols(n);
    for (std::size_t s = 0; s < n; ++s)
        for (const auto& [t, w] : T.columns[s]) cols[s].emplace_back(t, to_double(w));
    std::vector<double> p(n, 0.0), next(n);
    p[static_cast<std::size_t>(opt.start)] = 1.0;
    bool converged = false;
    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
        for (std::size_t s = 0; s < n; ++s) next[s] = p[s] / 2;
        for (std::size_t s = 0; s < n; ++s) {
            if (p[s] == 0) continue;
            for (const auto& [t, w] : cols[s]) next[static_cast<std::size_t>(t)] += w * p[s] / 2;
        }
        double tv = 0;
        for (std::size_t s = 0; s < n; ++s) tv += std::fabs(next[s] - p[s]);
        p.swap(next);
        if (tv / 2 < opt.tolerance) {
            converged = true;
            break;
        }
    }
    if (!converged) throw Error(ErrorCode::NotConverged, "power iteration did not converge");
    const std::vector<char> rec = recurrent_states(T);
    FloatDistribution d;
    for (std::size_t s = 0; s < n; ++s) {
        if (!rec[s] || p[s] == 0) continue;
        d.keys.push_back(T.labels[s]);
        d.values.push_back(p[s]);
    }
    return d;
}

// -------------------------------------------------------------------- lumping

namespace {

std::map<int, Rational> class_masses(const TransitionMatrix& T, const std::vector<int>& partition, std::size_t s) {
    std::map<int, Rational> m;
    for (const auto& [t, w] : T.columns[s]) m[partition[static_cast<std::size_t>(t)]] += w;
    return m;
}

}  // namespace

bool check_lumping(const TransitionMatrix& T, const std::vector<int>& partition, const std::vector<char>* columns) {
    std::map<int, std::map<int, Rational>> reference;
    for (std::size_t s = 0; s < T.size(); ++s) {
        if (columns && !(*columns)[s]) continue;
        auto m = class_masses(T, partition, s);
        auto [it, fresh] = reference.emplace(partition[s], m);
        if (!fresh && it->second != m) return false;
    }
    return true;
}

TransitionMatrix lump(const TransitionMatrix& T, const std::vector<int>& partition, std::vector<std::string> labels) {
    TransitionMatrix L;
    L.labels = std::move(labels);
    L.columns.resize(L.labels.size());
    std::vector<char> done(L.labels.size(), 0);
    for (std::size_t s = 0; s < T.size(); ++s) {
        std::size_t c = static_cast<std::size_t>(partition[s]);
        if (done[c]) continue;
        done[c] = 1;
        L.columns[c] = to_column(class_masses(T, partition, s));
    }
    return L;
}

bool same_matrix(const TransitionMatrix& A, const TransitionMatrix& B) {
    return A.labels == B.labels && A.columns == B.columns;
}

LumpingReport check_kr_to_s(const Semigroup& S, const std::vector<Rational>& x) {
    const KRExpansion kr = karnofsky_rhodes(S);
    const Semigroup T = kr.semigroup();
    const TransitionMatrix big = build_chain(T, x, StateSpace::Monoid);
    std::vector<int> partition(big.size(), 0);
    for (std::size_t e = 0; e < T.size(); ++e) {
        int v = kr.graph.follow(kr.graph.root, T.rep(static_cast<int>(e)));
        partition[static_cast<std::size_t>(monoid_state(static_cast<int>(e)))] =
            monoid_state(kr.graph.image[static_cast<std::size_t>(v)]);
    }
    const TransitionMatrix small = build_chain(S, x, StateSpace::Monoid);
    LumpingReport r;
    r.lumps = check_lumping(big, partition);
    r.matches_s = r.lumps && same_matrix(lump(big, partition, small.labels), small);
    return r;
}

// ------------------------------------------------------------ semaphore words

std::vector<Word> semaphore_words(const Semigroup& S, const std::vector<char>& ideal, std::size_t max_length,
                                  std::size_t cap) {
    std::vector<Word> out;
    std::vector<std::pair<Word, int>> stack;
    for (int a = S.num_generators() - 1; a >= 0; --a) stack.push_back({Word{a}, S.generator(a)});
    while (!stack.empty()) {
        auto [w, e] = std::move(stack.back());
        stack.pop_back();
        if (ideal[static_cast<std::size_t>(e)]) {
            if (out.size() >= cap) throw Error(ErrorCode::SizeCap, "too many code words");
            out.push_back(std::move(w));
            continue;
        }
        if (w.size() >= max_length) continue;
        for (int a = S.num_generators() - 1; a >= 0; --a) {
            Word v = w;
            v.push_back(a);
            stack.push_back({std::move(v), S.right(e, a)});
        }
    }
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

std::size_t truncation_length(const Semigroup& S, const std::vector<char>& ideal, std::size_t max_length,
                              std::size_t budget) {
    // Counts by length through the right action: prefixes outside the ideal, then one entering letter.
    std::vector<double> prefixes(S.size(), 0.0);
    double total = 0;
    std::size_t best = 0;
    for (int a = 0; a < S.num_generators(); ++a) {
        int e = S.generator(a);
        if (ideal[static_cast<std::size_t>(e)])
            total += 1;
        else
            prefixes[static_cast<std::size_t>(e)] += 1;
    }
    for (std::size_t L = 1; L <= max_length; ++L) {
        if (total > static_cast<double>(budget)) break;
        best = L;
        std::vector<double> next(S.size(), 0.0);
        for (std::size_t e = 0; e < S.size(); ++e) {
            if (prefixes[e] == 0) continue;
            for (int a = 0; a < S.num_generators(); ++a) {
                int f = S.right(static_cast<int>(e), a);
                if (ideal[static_cast<std::size_t>(f)])
                    total += prefixes[e];
                else
                    next[static_cast<std::size_t>(f)] += prefixes[e];
            }
        }
        prefixes.swap(next);
    }
    return best;
}

TruncationReport check_semaphore_to_kr(const Semigroup& S, const std::vector<Rational>& x, std::size_t max_length) {
    const std::vector<int> K = minimal_ideal(S);
    if (!is_left_zero(S, K)) throw Error(ErrorCode::InvalidArgument, "semaphore lumping needs a left-zero minimal ideal");
    const std::vector<char> in = membership(S, K);
    const std::vector<Word> words = semaphore_words(S, in, max_length);
    std::map<Word, int> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));
    const KRExpansion kr = karnofsky_rhodes(S);

    TransitionMatrix T;
    std::vector<int> partition;
    std::vector<char> interior;
    std::map<int, int> class_of_vertex;
    for (const Word& w : words) {
        T.labels.push_back(S.word_string(w));
        std::map<int, Rational> col;
        for (int a = 0; a < S.num_generators(); ++a) {
            auto it = index.find(semaphore_left_action(S, in, w, a));
            if (it != index.end()) col[it->second] += x[static_cast<std::size_t>(a)];
        }
        T.columns.push_back(to_column(col));
        int v = kr.graph.follow(kr.graph.root, w);
        auto [c, fresh] = class_of_vertex.emplace(v, static_cast<int>(class_of_vertex.size()));
        partition.push_back(c->second);
        interior.push_back(w.size() < max_length);
    }
    TruncationReport r;
    r.length = max_length;
    r.states = words.size();
    r.interior = static_cast<std::size_t>(std::count(interior.begin(), interior.end(), 1));
    r.lumps = check_lumping(T, partition, &interior);
    return r;
}

// ---------------------------------------------------------------- randomness

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t walker_seed(std::uint64_t seed, std::uint64_t walker) {
    SplitMix64 base(seed);
    SplitMix64 mixed(base.next() ^ (walker * 0xd1b54a32d192ed03ULL));
    return mixed.next();
}

LetterSampler::LetterSampler(const std::vector<Rational>& x) {
    if (x.empty()) throw Error(ErrorCode::InvalidProbabilities, "no probabilities");
    Rational cum = 0;
    const mpz_class two64 = mpz_class(1) << 64;
    for (std::size_t a = 0; a + 1 < x.size(); ++a) {
        cum += x[a];
        mpz_class t = cum.get_num() * two64 / cum.get_den();
        if (t >= two64) t = two64 - 1;
        std::uint64_t v = 0;
        mpz_export(&v, nullptr, -1, sizeof v, 0, 0, t.get_mpz_t());
        thresholds_.push_back(v);
    }
}

int LetterSampler::draw(SplitMix64& rng) const {
    const std::uint64_t u = rng.next();
    for (std::size_t a = 0; a < thresholds_.size(); ++a)
        if (u < thresholds_[a]) return static_cast<int>(a);
    return static_cast<int>(thresholds_.size());
}

// ----------------------------------------------------------------- simulation

FloatDistribution SimulationResult::distribution() const {
    FloatDistribution d;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (counts[i] == 0) continue;
        d.keys.push_back(keys[i]);
        d.values.push_back(static_cast<double>(counts[i]) / static_cast<double>(total));
    }
    return d;
}

SimulationResult simulate_semaphore(const Semigroup& S, const std::vector<Rational>& x, const SimulationOptions& opt) {
    validate_probabilities(x);
    SimulationResult R;
    const std::vector<int> K = minimal_ideal(S);
    R.adjoined_zero = !is_left_zero(S, K);
    Semigroup model = S;
    std::vector<Rational> probs = x;
    if (R.adjoined_zero) {
        model = adjoin_zero(S);
        for (Rational& v : probs) v *= Rational(1) - opt.zero_weight;
        probs.push_back(opt.zero_weight);
    }
    const std::vector<char> in = membership(model, minimal_ideal(model));
    const KRExpansion kr = karnofsky_rhodes(S);
    for (const Word& w : kr.graph.word) R.keys.push_back(S.word_string(w));
    R.counts.assign(R.keys.size(), 0);
    const LetterSampler sampler(probs);

    for (std::size_t i = 0; i < opt.walkers; ++i) {
        SplitMix64 rng(walker_seed(opt.seed, i));
        Word s;
        for (int e = -1; e < 0 || !in[static_cast<std::size_t>(e)];) {
            int a = sampler.draw(rng);
            s.push_back(a);
            e = e < 0 ? model.generator(a) : model.right(e, a);
        }
        for (std::size_t step = 0; step < opt.steps; ++step) {
            s = semaphore_left_action(model, in, s, sampler.draw(rng));
            Word path = s;
            if (R.adjoined_zero) path.pop_back();
            ++R.counts[static_cast<std::size_t>(kr.graph.follow(kr.graph.root, path))];
            ++R.total;
        }
    }
    return R;
}

// -------------------------------------------------------------------- mixing

MixingBound mixing_bound(const Semigroup& S, const std::vector<Rational>& x, const Rational& c) {
    validate_probabilities(x);
    const KRExpansion kr = karnofsky_rhodes(S);
    const McExpansion mc = mccammond(kr.graph);
    const Components C = strongly_connected_components(mc.graph);
    MixingBound b;
    b.n = mc.max_depth();
    std::vector<int> run(mc.graph.size(), 0);
    int longest = 0;
    for (std::size_t v = 0; v < mc.graph.size(); ++v) {
        int p = mc.parent[v];
        if (p < 0) continue;
        if (C.of[v] == C.of[static_cast<std::size_t>(p)]) run[v] = run[static_cast<std::size_t>(p)] + 1;
        longest = std::max(longest, run[v]);
    }
    b.ell = 1 + longest;
    b.p = *std::min_element(x.begin(), x.end());
    b.c = c;
    Rational pl = 1;
    for (int i = 0; i < b.ell; ++i) pl *= b.p;
    const Rational bound = Rational(2) * (Rational(b.n) + Rational(b.ell) * c - 1) / pl;
    mpz_class k;
    mpz_cdiv_q(k.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    b.k = k.get_ui();
    return b;
}

MixingCheck mixing_check(const Semigroup& S, const std::vector<Rational>& x, std::uint64_t steps,
                         std::size_t walkers_per_start, std::uint64_t seed) {
    const KRExpansion kr = karnofsky_rhodes(S);
    const Semigroup T = kr.semigroup();
    std::vector<std::string> key(T.size());
    for (std::size_t e = 0; e < T.size(); ++e)
        key[e] = S.word_string(kr.graph.word[static_cast<std::size_t>(kr.graph.follow(kr.graph.root, T.rep(static_cast<int>(e))))]);
    const FloatDistribution target = to_float(stationary(S, x).kr);
    const LetterSampler sampler(x);
    const int k = T.num_generators();

    MixingCheck out;
    out.steps = steps;
    for (int start = -1; start < static_cast<int>(T.size()); ++start) {
        std::vector<std::uint64_t> counts(T.size(), 0);
        for (std::size_t w = 0; w < walkers_per_start; ++w) {
            SplitMix64 rng(walker_seed(seed, static_cast<std::uint64_t>(start + 1) * walkers_per_start + w));
            int e = start;
            for (std::uint64_t t = 0; t < steps; ++t) {
                int a = sampler.draw(rng);
                e = e < 0 ? T.generator(a) : T.left(a, e);
            }
            if (e >= 0) ++counts[static_cast<std::size_t>(e)];
        }
        std::vector<double> p(T.size(), 0.0);
        if (start >= 0) p[static_cast<std::size_t>(start)] = 1.0;
        for (std::uint64_t t = 0; t < steps; ++t) {
            std::vector<double> next(T.size(), 0.0);
            for (int a = 0; a < k; ++a) {
                const double xa = to_double(x[static_cast<std::size_t>(a)]);
                if (t == 0 && start < 0) next[static_cast<std::size_t>(T.generator(a))] += xa;
                for (std::size_t e = 0; e < T.size(); ++e)
                    if (p[e] != 0) next[static_cast<std::size_t>(T.left(a, static_cast<int>(e)))] += xa * p[e];
            }
            p.swap(next);
        }
        FloatDistribution empirical, evolved;
        for (std::size_t e = 0; e < T.size(); ++e) {
            empirical.keys.push_back(key[e]);
            empirical.values.push_back(static_cast<double>(counts[e]) / static_cast<double>(walkers_per_start));
            evolved.keys.push_back(key[e]);
            evolved.values.push_back(p[e]);
        }
        const double sim = steps == 0 && start < 0 ? 1.0 : tv_distance(empirical, target);
        const double exact = steps == 0 && start < 0 ? 1.0 : tv_distance(evolved, target);
        if (sim > out.simulated_tv) {
            out.simulated_tv = sim;
            out.worst_start = start < 0 ? "1" : key[static_cast<std::size_t>(start)];
        }
        out.exact_tv = std::max(out.exact_tv, exact);
    }
    return out;
}

}  // namespace semiwalk
