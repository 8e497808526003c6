#include "semiwalk/expansions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace semiwalk {

KRExpansion karnofsky_rhodes(const Semigroup& S, std::size_t cap) {
    const RootedGraph rcay = right_cayley(S);
    const std::vector<char> trans = transition_edges(rcay);
    const int k = S.num_generators();

    KRExpansion kr;
    kr.names = S.generator_names();
    kr.tsets.push_back({});
    std::map<std::vector<int>, int> tset_index{{{}, 0}};
    std::map<std::pair<int, int>, int> extend_memo;  // (tset, edge) -> tset
    auto extend = [&](int t, int e) {
        auto [it, fresh] = extend_memo.emplace(std::make_pair(t, e), -1);
        if (!fresh) return it->second;
        std::vector<int> next = kr.tsets[static_cast<std::size_t>(t)];
        auto pos = std::lower_bound(next.begin(), next.end(), e);
        if (pos == next.end() || *pos != e) next.insert(pos, e);
        auto [jt, added] = tset_index.emplace(next, static_cast<int>(kr.tsets.size()));
        if (added) kr.tsets.push_back(std::move(next));
        it->second = jt->second;
        return jt->second;
    };

    std::map<std::pair<int, int>, int> vertex_index;  // (rcay vertex, tset) -> KR vertex
    std::vector<int> rcay_of;
    RootedGraph& G = kr.graph;
    G.num_generators = k;
    G.root = 0;
    auto add_vertex = [&](int rv, int t, Word w) {
        if (G.out.size() >= cap) throw Error(ErrorCode::SizeCap, "Karnofsky-Rhodes expansion exceeds " + std::to_string(cap) + " vertices");
        int id = static_cast<int>(G.out.size());
        vertex_index.emplace(std::make_pair(rv, t), id);
        G.out.push_back(std::vector<int>(static_cast<std::size_t>(k), -1));
        G.image.push_back(rcay.image[static_cast<std::size_t>(rv)]);
        G.word.push_back(std::move(w));
        kr.tset.push_back(t);
        rcay_of.push_back(rv);
        return id;
    };
    add_vertex(rcay.root, 0, {});
    for (std::size_t head = 0; head < G.out.size(); ++head) {
        const int rv = rcay_of[head];
        const int t = kr.tset[head];
        for (int a = 0; a < k; ++a) {
            const int rw = rcay.edge(rv, a);
            const int e = rcay.edge_id(rv, a);
            const int nt = trans[static_cast<std::size_t>(e)] ? extend(t, e) : t;
            auto it = vertex_index.find({rw, nt});
            int target;
            if (it == vertex_index.end()) {
                Word w = G.word[head];
                w.push_back(a);
                target = add_vertex(rw, nt, std::move(w));
            } else {
                target = it->second;
            }
            G.out[head][static_cast<std::size_t>(a)] = target;
        }
    }
    return kr;
}

Semigroup KRExpansion::semigroup() const {
    const int k = graph.num_generators;
    std::vector<int> gens(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) gens[static_cast<std::size_t>(a)] = graph.edge(graph.root, a) - 1;
    std::vector<std::vector<int>> right(graph.size() - 1, std::vector<int>(static_cast<std::size_t>(k)));
    std::vector<std::string> labels;
    for (std::size_t v = 1; v < graph.size(); ++v) {
        for (int a = 0; a < k; ++a) right[v - 1][static_cast<std::size_t>(a)] = graph.edge(static_cast<int>(v), a) - 1;
        labels.push_back(format_word(names, graph.word[v]));
    }
    return Semigroup::from_right_action(names, gens, right, labels);
}

int kr_multiply(const KRExpansion& kr, int v, const Word& w) { return kr.graph.follow(v, w); }

int McExpansion::max_depth() const {
    int d = 0;
    for (int x : depth) d = std::max(d, x);
    return d;
}

McExpansion mccammond(const RootedGraph& G, std::size_t cap) {
    const int k = G.num_generators;
    McExpansion mc;
    RootedGraph& M = mc.graph;
    M.num_generators = k;
    M.root = 0;
    std::vector<int> on_path(G.size(), -1);
    auto add_vertex = [&](int src, int par, Word w) {
        if (M.out.size() >= cap) throw Error(ErrorCode::SizeCap, "McCammond expansion exceeds " + std::to_string(cap) + " simple paths");
        int id = static_cast<int>(M.out.size());
        M.out.push_back(std::vector<int>(static_cast<std::size_t>(k), -1));
        M.image.push_back(G.image[static_cast<std::size_t>(src)]);
        M.word.push_back(std::move(w));
        mc.source.push_back(src);
        mc.parent.push_back(par);
        mc.depth.push_back(par < 0 ? 0 : mc.depth[static_cast<std::size_t>(par)] + 1);
        return id;
    };
    add_vertex(G.root, -1, {});
    std::vector<std::pair<int, int>> stack{{0, 0}};
    on_path[static_cast<std::size_t>(G.root)] = 0;
    while (!stack.empty()) {
        auto& [p, a] = stack.back();
        if (a == k) {
            on_path[static_cast<std::size_t>(mc.source[static_cast<std::size_t>(p)])] = -1;
            stack.pop_back();
            continue;
        }
        const int letter = a++;
        const int pv = p;
        const int u = G.edge(mc.source[static_cast<std::size_t>(pv)], letter);
        if (u < 0) continue;
        const int seen = on_path[static_cast<std::size_t>(u)];
        if (seen >= 0) {
            M.out[static_cast<std::size_t>(pv)][static_cast<std::size_t>(letter)] = seen;
            continue;
        }
        Word w = M.word[static_cast<std::size_t>(pv)];
        w.push_back(letter);
        const int c = add_vertex(u, pv, std::move(w));
        M.out[static_cast<std::size_t>(pv)][static_cast<std::size_t>(letter)] = c;
        on_path[static_cast<std::size_t>(u)] = c;
        stack.push_back({c, 0});
    }
    return mc;
}

bool has_unique_simple_paths(const RootedGraph& G) {
    const int k = G.num_generators;
    const std::size_t limit = G.size();
    std::size_t count = 1;
    std::vector<char> on_path(G.size(), 0);
    std::vector<std::pair<int, int>> stack{{G.root, 0}};
    on_path[static_cast<std::size_t>(G.root)] = 1;
    while (!stack.empty()) {
        auto& [v, a] = stack.back();
        if (a == k) {
            on_path[static_cast<std::size_t>(v)] = 0;
            stack.pop_back();
            continue;
        }
        const int u = G.edge(v, a++);
        if (u < 0 || on_path[static_cast<std::size_t>(u)]) continue;
        if (++count > limit) return false;
        on_path[static_cast<std::size_t>(u)] = 1;
        stack.push_back({u, 0});
    }
    return count == limit;
}

bool is_right_cayley(const RootedGraph& G, std::size_t cap) {
    const int k = G.num_generators;
    const std::size_t n = G.size();
    for (std::size_t v = 0; v < n; ++v)
        for (int a = 0; a < k; ++a) {
            int w = G.edge(static_cast<int>(v), a);
            if (w < 0 || w == G.root) return false;
        }
    std::map<std::vector<int>, int> seen;
    std::vector<int> owner(n, -1);  // root image -> transformation index
    std::vector<std::vector<int>> queue;
    auto visit = [&](std::vector<int> f) {
        if (seen.count(f)) return true;
        const int img = f[static_cast<std::size_t>(G.root)];
        if (owner[static_cast<std::size_t>(img)] >= 0) return false;
        owner[static_cast<std::size_t>(img)] = static_cast<int>(queue.size());
        seen.emplace(f, static_cast<int>(queue.size()));
        queue.push_back(std::move(f));
        return true;
    };
    for (int a = 0; a < k; ++a) {
        std::vector<int> f(n);
        for (std::size_t v = 0; v < n; ++v) f[v] = G.edge(static_cast<int>(v), a);
        if (!visit(std::move(f))) return false;
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        if (queue.size() > std::min(cap, n)) return false;
        for (int a = 0; a < k; ++a) {
            std::vector<int> g(n);
            for (std::size_t v = 0; v < n; ++v) g[v] = G.edge(queue[head][v], a);
            if (!visit(std::move(g))) return false;
        }
    }
    return true;
}

bool graphs_isomorphic(const RootedGraph& G, const RootedGraph& H) {
    if (G.size() != H.size() || G.num_generators != H.num_generators) return false;
    std::vector<int> fwd(G.size(), -1), bwd(H.size(), -1);
    std::deque<int> queue;
    auto pair_up = [&](int g, int h) {
        if (g < 0 || h < 0) return g == h;
        if (fwd[static_cast<std::size_t>(g)] < 0 && bwd[static_cast<std::size_t>(h)] < 0) {
            fwd[static_cast<std::size_t>(g)] = h;
            bwd[static_cast<std::size_t>(h)] = g;
            queue.push_back(g);
            return true;
        }
        return fwd[static_cast<std::size_t>(g)] == h;
    };
    if (!pair_up(G.root, H.root)) return false;
    while (!queue.empty()) {
        int g = queue.front();
        queue.pop_front();
        int h = fwd[static_cast<std::size_t>(g)];
        for (int a = 0; a < G.num_generators; ++a)
            if (!pair_up(G.edge(g, a), H.edge(h, a))) return false;
    }
    return true;
}

bool is_mc_stable(const Semigroup& S) { return has_unique_simple_paths(karnofsky_rhodes(S).graph); }

bool is_stable1(const Semigroup& S) {
    KRExpansion kr = karnofsky_rhodes(S);
    return has_unique_simple_paths(kr.graph) && graphs_isomorphic(kr.graph, right_cayley(S));
}

}  // namespace semiwalk
