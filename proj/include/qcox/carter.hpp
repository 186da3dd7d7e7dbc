#pragma once

#include <optional>
#include <string>

#include "qcox/hurwitz.hpp"

namespace qcox {

// Bond graph of a bipartite reflection decomposition: vertices are the
// reflections, bonds carry the order of the product of the two reflections
// (order 2 = no bond; 3 = single; 4 = double; 5 = quintuple for H types).
struct CarterDiagram {
    int n = 0;                            // vertex count
    std::vector<std::vector<int>> order;  // n x n, order[i][j] = o(t_i t_j), diag 1
    std::optional<int> m_parameter;       // for the D_n family diagrams
    ReflectionTuple roots;                // optional: positive-root indices per vertex
    int split = 0;                        // vertices [0,split) / [split,n) are the two
                                          // commuting halves when built from a tuple

    bool has_edge(int i, int j) const { return order[(std::size_t)i][(std::size_t)j] > 2; }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // i < j
    bool is_admissible() const;  // every cycle even == bond graph bipartite
};

// A named diagram from the built-in catalog, with the two marked vertices
// used by the centralizer tables (s_1: the "corner" generator, s_m: the
// opposite cycle corner).
struct CatalogEntry {
    std::string label;
    CarterDiagram diagram;
    int s1 = -1;
    int sm = -1;
};

// The full built-in catalog for a given rank range: the D-family diagrams
// Delta(m,n), the exceptional 4-cycle diagrams E6(a1..a2), E7(a1..a4),
// E8(a1..a8), F4(a1), and the Coxeter diagrams of the supported types.
const std::vector<CatalogEntry>& carter_catalog();
const CatalogEntry& catalog_entry(const std::string& label);  // throws if absent

// w = w1 w2 with ell_T(w) = |w1| + |w2|, reflections within each half
// pairwise commuting; found by search over the Hurwitz orbit of a reduced
// decomposition.
std::pair<ReflectionTuple, ReflectionTuple> bipartite_decomposition(
    const CoxGroup& g, const Elt& w, std::size_t budget = 10'000'000);

CarterDiagram diagram_of(const CoxGroup& g, const Elt& w, std::size_t budget = 10'000'000);
CarterDiagram diagram_of_tuple(const CoxGroup& g, const ReflectionTuple& w1,
                               const ReflectionTuple& w2);

// Exact graph isomorphism (bond orders respected) against the catalog;
// "unrecognized" when nothing matches.
std::string classify_diagram(const CarterDiagram& d);

// all chordless 4-vertex cycles, each as 4 vertices in cyclic order
std::vector<std::array<int, 4>> four_cycles(const CarterDiagram& d);

struct OrientationReport {
    bool orientable = false;
    // directed edges (from, to) when orientable
    std::vector<std::pair<int, int>> orientation;
};

// Can the edges be directed so that every chordless 4-cycle is cyclically
// oriented?
OrientationReport is_orientable(const CarterDiagram& d);

std::string diagram_to_dot(const CarterDiagram& d);

// true iff the two diagrams are isomorphic as bond-labeled graphs
bool diagrams_isomorphic(const CarterDiagram& a, const CarterDiagram& b);

// an explicit isomorphism: map[i] is the vertex of b matching vertex i of a
std::optional<std::vector<int>> diagram_isomorphism(const CarterDiagram& a,
                                                    const CarterDiagram& b);

// every isomorphism a -> b (useful because presentation verification can
// succeed for one vertex alignment and stall on another)
std::vector<std::vector<int>> diagram_isomorphisms(const CarterDiagram& a,
                                                   const CarterDiagram& b);

}  // namespace qcox
