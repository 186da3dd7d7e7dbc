#pragma once

#include "qcox/carter.hpp"

namespace qcox {

struct QuasiCoxeterClass {
    Elt rep;
    int order = 0;
    std::string label;        // catalog label; synthetic H3(a_i)/H4(a_i) for H types
    ReflectionTuple witness;  // reduced decomposition generating W
    CarterDiagram diagram;
};

// One representative per conjugacy class of quasi-Coxeter elements.
// Exhaustive enumeration for |W| <= ~10^6; deterministic diagram-realization
// search against the catalog for D8, E7 and E8.
std::vector<QuasiCoxeterClass> quasi_coxeter_class_representatives(const CoxGroup& g);

// Roots (positive-root indices, one per diagram vertex) realizing the given
// bond diagram inside g, with reflection closure equal to the whole root
// system. Deterministic backtracking; throws if none exists.
ReflectionTuple find_diagram_realization(const CoxGroup& g, const CarterDiagram& d);

// Quasi-Coxeter element carried by a diagram realization: the product over
// the two color classes of the (bipartite) diagram.
Elt element_of_realization(const CoxGroup& g, const CarterDiagram& d,
                           const ReflectionTuple& roots);

struct CentralizerRow {
    std::vector<std::string> P;          // parabolic closure of s_1's commuting vertices
    std::vector<std::string> P_m;        // vertices other than s_m
    std::vector<std::string> C_Pm_s1;    // centralizer of s_1 inside P_m
    std::vector<std::string> P_cap_Pm;
    bool centralizer_verdict = false;    // <P, C_Pm(s1)> = C_W(s1)
};

// Reflection-subgroup analysis around the marked vertices s_1 / s_m of a
// proper quasi-Coxeter class of E6, E7 or E8.
CentralizerRow verify_centralizer_row(const CoxGroup& g, const std::string& label);

}  // namespace qcox
