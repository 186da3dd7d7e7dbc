#pragma once

#include <optional>
#include <string>

#include "qcox/group.hpp"

namespace qcox {

// The poset of left divisors of w in absolute order, graded by reflection
// length. Element 0 is the identity; the last element of top rank is w.
struct IntervalPoset {
    Elt w;
    std::vector<Elt> elements;                 // grouped by rank, ascending
    std::vector<int> rank_of;                  // parallel to elements
    std::vector<std::pair<int, int>> covers;   // (lower index, upper index)
    const CoxGroup* group = nullptr;

    int top_rank() const { return rank_of.empty() ? 0 : rank_of.back(); }
    std::size_t index_of(const Elt& x) const;  // throws if absent
};

IntervalPoset build_interval(const CoxGroup& g, const Elt& w,
                             std::size_t budget = 1'000'000);

struct LatticeReport {
    bool is_lattice = true;
    // x1,x2 both below y1,y2 with no z between: x1,x2 <= z <= y1,y2
    std::optional<std::array<int, 4>> bowtie_witness;  // (x1, x2, y1, y2)
    std::optional<std::pair<int, int>> failing_pair;   // pair lacking meet/join
    std::string failing_kind;                          // "meet" or "join"
};

LatticeReport is_lattice(const IntervalPoset& p);

// True iff [1,w] and its right-divisor counterpart have the same element set.
bool is_balanced(const CoxGroup& g, const Elt& w, std::size_t budget = 1'000'000);

// P(w): parabolic closures P_x of interval elements, ordered by inclusion.
// F(w): fixed spaces Fix(x), ordered by inclusion. Stored as the partial
// order matrix over the interval's element indices (dedup handled inside
// verify_structure_maps: both maps are bijections when the propositions hold).
struct StructureMapReport {
    bool p_map_is_isomorphism = false;       // x -> P_x order isomorphism
    bool f_map_is_anti_isomorphism = false;  // x -> Fix(x) order anti-isomorphism
    bool p_f_anti_isomorphic = false;        // P(w) vs F(w)
    bool all() const {
        return p_map_is_isomorphism && f_map_is_anti_isomorphism && p_f_anti_isomorphic;
    }
};

StructureMapReport verify_structure_maps(const IntervalPoset& p);

// Two fixed spaces in F(w) whose intersection is not in F(w) (present
// exactly when the interval is not a lattice; empty otherwise).
std::optional<std::pair<int, int>> missing_intersection_in_F(const IntervalPoset& p);

std::string interval_to_dot(const IntervalPoset& p);
std::string interval_to_json(const IntervalPoset& p);

}  // namespace qcox
