#include "semiwalk/cayley.hpp"

#include <algorithm>
#include <sstream>

namespace semiwalk {

std::size_t RootedGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& row : out)
        for (int t : row) n += t >= 0;
    return n;
}

int RootedGraph::follow(int v, const Word& w) const {
    for (int a : w) {
        if (v < 0) return -1;
        v = edge(v, a);
    }
    return v;
}

RootedGraph right_cayley(const Semigroup& S) {
    RootedGraph G;
    const int k = S.num_generators();
    G.num_generators = k;
    G.root = 0;
    G.out.assign(S.size() + 1, std::vector<int>(static_cast<std::size_t>(k)));
    G.image.resize(S.size() + 1);
    G.word.resize(S.size() + 1);
    G.image[0] = -1;
    for (int a = 0; a < k; ++a) G.out[0][static_cast<std::size_t>(a)] = S.generator(a) + 1;
    for (std::size_t x = 0; x < S.size(); ++x) {
        G.image[x + 1] = static_cast<int>(x);
        G.word[x + 1] = S.rep(static_cast<int>(x));
        for (int a = 0; a < k; ++a) G.out[x + 1][static_cast<std::size_t>(a)] = S.right(static_cast<int>(x), a) + 1;
    }
    return G;
}

RootedGraph left_cayley(const Semigroup& S) {
    const int k = S.num_generators();
    std::vector<int> vertex_of(S.size(), -1);
    RootedGraph G;
    G.num_generators = k;
    G.out.push_back(std::vector<int>(static_cast<std::size_t>(k), -1));
    G.image.push_back(-1);
    G.word.push_back({});
    std::vector<int> elem_of{-1};
    for (std::size_t head = 0; head < G.out.size(); ++head) {
        for (int a = 0; a < k; ++a) {
            int x = elem_of[head];
            int y = x < 0 ? S.generator(a) : S.left(a, x);
            int& v = vertex_of[static_cast<std::size_t>(y)];
            if (v < 0) {
                v = static_cast<int>(G.out.size());
                G.out.push_back(std::vector<int>(static_cast<std::size_t>(k), -1));
                G.image.push_back(y);
                Word w = G.word[head];
                w.push_back(a);
                G.word.push_back(std::move(w));
                elem_of.push_back(y);
            }
            G.out[head][static_cast<std::size_t>(a)] = v;
        }
    }
    return G;
}

Components strongly_connected_components(const RootedGraph& G) {
    // Iterative Tarjan.
    const int n = static_cast<int>(G.size());
    const int k = G.num_generators;
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0), comp(static_cast<std::size_t>(n), -1);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    std::vector<std::pair<int, int>> call;  // (vertex, next generator)
    int counter = 0;
    std::vector<std::vector<int>> found;
    for (int s = 0; s < n; ++s) {
        if (index[static_cast<std::size_t>(s)] >= 0) continue;
        call.push_back({s, 0});
        while (!call.empty()) {
            auto& [v, a] = call.back();
            const std::size_t vi = static_cast<std::size_t>(v);
            if (a == 0 && index[vi] < 0) {
                index[vi] = low[vi] = counter++;
                stack.push_back(v);
                on_stack[vi] = 1;
            }
            if (a < k) {
                int w = G.edge(v, a);
                ++a;
                if (w < 0) continue;
                const std::size_t wi = static_cast<std::size_t>(w);
                if (index[wi] < 0) {
                    call.push_back({w, 0});
                } else if (on_stack[wi]) {
                    low[vi] = std::min(low[vi], index[wi]);
                }
                continue;
            }
            if (low[vi] == index[vi]) {
                std::vector<int> members;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin(), members.end());
                found.push_back(std::move(members));
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) {
                const std::size_t pi = static_cast<std::size_t>(call.back().first);
                low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done)]);
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    Components C;
    C.of.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < found.size(); ++c)
        for (int v : found[c]) C.of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    C.members = std::move(found);
    return C;
}

std::vector<char> transition_edges(const RootedGraph& G, const Components& C) {
    std::vector<char> flag(G.size() * static_cast<std::size_t>(G.num_generators), 0);
    for (int v = 0; v < static_cast<int>(G.size()); ++v)
        for (int a = 0; a < G.num_generators; ++a) {
            int w = G.edge(v, a);
            if (w >= 0 && w != v && C.of[static_cast<std::size_t>(v)] != C.of[static_cast<std::size_t>(w)])
                flag[static_cast<std::size_t>(G.edge_id(v, a))] = 1;
        }
    return flag;
}

std::vector<char> transition_edges(const RootedGraph& G) {
    return transition_edges(G, strongly_connected_components(G));
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const RootedGraph& G, const std::vector<std::string>& names, const DotStyle& style,
                   const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    for (std::size_t v = 0; v < G.size(); ++v) {
        std::string label = v == static_cast<std::size_t>(G.root) ? "𝟙" : format_word(names, G.word[v]);
        os << "  v" << v << " [label=\"" << dot_escape(label) << "\"];\n";
    }
    for (int v = 0; v < static_cast<int>(G.size()); ++v)
        for (int a = 0; a < G.num_generators; ++a) {
            int w = G.edge(v, a);
            if (w < 0 || (style.hide_loops && w == v)) continue;
            const std::size_t id = static_cast<std::size_t>(G.edge_id(v, a));
            std::vector<std::string> attrs{"label=\"" + dot_escape(names[static_cast<std::size_t>(a)]) + "\""};
            if (style.blue && (*style.blue)[id]) attrs.push_back("color=\"blue\"");
            if (w == v || (style.dashed && (*style.dashed)[id])) attrs.push_back("style=\"dashed\"");
            if (style.dashed && (*style.dashed)[id] && w != v) attrs.push_back("color=\"red\"");
            os << "  v" << v << " -> v" << w << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
            os << "];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace semiwalk
