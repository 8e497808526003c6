#pragma once

// Rooted generator-labelled graphs, Cayley graphs, strongly connected components.

#include "semiwalk/semigroup.hpp"

#include <string>
#include <vector>

namespace semiwalk {

/// Deterministic rooted graph: out[v][a] is the target of the a-edge at v, or -1.
/// image[v] is the semigroup element carried by v (-1 for the identity root).
/// word[v] labels a path from the root to v (shortest for Cayley graphs and KR).
struct RootedGraph {
    int num_generators = 0;
    int root = 0;
    std::vector<std::vector<int>> out;
    std::vector<int> image;
    std::vector<Word> word;

    std::size_t size() const { return out.size(); }
    int edge(int v, int a) const { return out[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)]; }
    int edge_id(int v, int a) const { return v * num_generators + a; }
    std::size_t edge_count() const;
    int follow(int v, const Word& w) const;
};

/// Vertices are S^1: vertex 0 is the root, vertex i+1 is element i (breadth-first order).
RootedGraph right_cayley(const Semigroup& S);
/// Edges s -> as; vertices renumbered in breadth-first order from the root.
RootedGraph left_cayley(const Semigroup& S);

struct Components {
    std::vector<int> of;                   // component id per vertex
    std::vector<std::vector<int>> members; // sorted; components ordered by smallest member
};

Components strongly_connected_components(const RootedGraph& G);

/// Flag per edge id: true iff the edge is not a loop and joins distinct components.
std::vector<char> transition_edges(const RootedGraph& G, const Components& C);
std::vector<char> transition_edges(const RootedGraph& G);

struct DotStyle {
    const std::vector<char>* blue = nullptr;    // per edge id
    const std::vector<char>* dashed = nullptr;  // per edge id
    bool hide_loops = false;
};

std::string to_dot(const RootedGraph& G, const std::vector<std::string>& names, const DotStyle& style,
                   const std::string& graph_name = "G");

}  // namespace semiwalk
