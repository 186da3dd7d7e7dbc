#pragma once

#include "qcox/group.hpp"

namespace qcox {

// A tuple of reflections, stored by positive-root index.
using ReflectionTuple = std::vector<int>;

enum class MoveDirection { forward, inverse };

// Braid generator sigma_i (1-based, 1 <= i <= length-1):
//   forward:  (..., t_i, t_{i+1}, ...) -> (..., t_i t_{i+1} t_i, t_i, ...)
//   inverse:  (..., t_i, t_{i+1}, ...) -> (..., t_{i+1}, t_{i+1} t_i t_{i+1}, ...)
// The product of the tuple is unchanged.
ReflectionTuple hurwitz_move(const CoxGroup& g, const ReflectionTuple& t, int i,
                             MoveDirection dir);

struct HurwitzOrbits {
    std::vector<std::size_t> orbit_sizes;  // descending
    bool transitive = false;
    // one representative tuple per orbit, parallel to orbit_sizes
    std::vector<ReflectionTuple> representatives;
};

// Partitions the reduced reflection decompositions of w into Hurwitz orbits.
HurwitzOrbits hurwitz_orbits(const CoxGroup& g, const Elt& w,
                             std::size_t budget = 10'000'000);

// Orbit of a single tuple under Hurwitz moves (budgeted BFS).
std::vector<ReflectionTuple> hurwitz_orbit_of(const CoxGroup& g, const ReflectionTuple& t,
                                              std::size_t budget = 10'000'000);

}  // namespace qcox
