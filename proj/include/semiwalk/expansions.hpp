#pragma once

// Karnofsky–Rhodes and McCammond expansions, stability predicates.

#include "semiwalk/cayley.hpp"
#include "semiwalk/semigroup.hpp"

#include <cstddef>
#include <vector>

namespace semiwalk {

struct KRExpansion {
    /// Vertex 0 is the root; vertices in breadth-first order. image[] is the S element.
    RootedGraph graph;
    /// Per vertex, index into tsets (sorted transition-edge ids of RCay(S)).
    std::vector<int> tset;
    std::vector<std::vector<int>> tsets;
    std::vector<std::string> names;

    /// KR(S) as an A-semigroup: element i is vertex i+1.
    Semigroup semigroup() const;
    int vertex_of_element(int e) const { return e + 1; }
    int element_of_vertex(int v) const { return v - 1; }
};

KRExpansion karnofsky_rhodes(const Semigroup& S, std::size_t cap = 1000000);

/// Follows w from v in the KR graph.
int kr_multiply(const KRExpansion& kr, int v, const Word& w);

struct McExpansion {
    /// Vertex 0 is the root (empty path); vertices in depth-first preorder.
    /// image[] is carried over from the input graph, word[] is the simple path label.
    RootedGraph graph;
    std::vector<int> source;  // input-graph vertex reached by the path
    std::vector<int> parent;  // -1 for the root
    std::vector<int> depth;

    bool is_tree_edge(int v, int a) const {
        int w = graph.edge(v, a);
        return w >= 0 && parent[static_cast<std::size_t>(w)] == v &&
               graph.word[static_cast<std::size_t>(w)].back() == a;
    }
    int max_depth() const;
};

McExpansion mccammond(const RootedGraph& G, std::size_t cap = 1000000);

/// True iff every vertex is reached from the root by exactly one simple path.
bool has_unique_simple_paths(const RootedGraph& G);
/// Is G the right Cayley graph of the semigroup generated by its edge maps?
bool is_right_cayley(const RootedGraph& G, std::size_t cap = 1000000);
/// Root-fixing, label-preserving isomorphism.
bool graphs_isomorphic(const RootedGraph& G, const RootedGraph& H);

/// Mc∘KR(S) = KR(S).
bool is_mc_stable(const Semigroup& S);
/// Mc∘KR(S) = S.
bool is_stable1(const Semigroup& S);

}  // namespace semiwalk
