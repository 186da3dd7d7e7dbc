#include "qcox/hurwitz.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qcox {

ReflectionTuple hurwitz_move(const CoxGroup& g, const ReflectionTuple& t, int i,
                             MoveDirection dir) {
    if (i < 1 || i >= (int)t.size())
        throw std::out_of_range("hurwitz_move: index out of range");
    ReflectionTuple out = t;
    int a = t[(std::size_t)(i - 1)], b = t[(std::size_t)i];
    // conjugating a reflection by a reflection is reading off the root image
    if (dir == MoveDirection::forward) {
        // (t_i t_{i+1} t_i, t_i)
        int c = g.roots().reflect_root(a, b);
        if (c >= g.num_reflections()) c = g.roots().negative_of(c);
        out[(std::size_t)(i - 1)] = c;
        out[(std::size_t)i] = a;
    } else {
        // (t_{i+1}, t_{i+1} t_i t_{i+1})
        int c = g.roots().reflect_root(b, a);
        if (c >= g.num_reflections()) c = g.roots().negative_of(c);
        out[(std::size_t)(i - 1)] = b;
        out[(std::size_t)i] = c;
    }
    return out;
}

std::vector<ReflectionTuple> hurwitz_orbit_of(const CoxGroup& g, const ReflectionTuple& t,
                                              std::size_t budget) {
    std::set<ReflectionTuple> seen{t};
    std::vector<ReflectionTuple> queue{t};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        ReflectionTuple cur = queue[q];
        for (int i = 1; i < (int)cur.size(); ++i)
            for (auto dir : {MoveDirection::forward, MoveDirection::inverse}) {
                ReflectionTuple next = hurwitz_move(g, cur, i, dir);
                if (seen.insert(next).second) {
                    queue.push_back(std::move(next));
                    if (seen.size() > budget)
                        throw BudgetExceeded("hurwitz_orbit_of: budget exceeded");
                }
            }
    }
    return queue;
}

HurwitzOrbits hurwitz_orbits(const CoxGroup& g, const Elt& w, std::size_t budget) {
    auto decs = g.reduced_decompositions(w, budget);
    std::set<ReflectionTuple> remaining(decs.begin(), decs.end());
    HurwitzOrbits out;
    while (!remaining.empty()) {
        ReflectionTuple rep = *remaining.begin();
        auto orbit = hurwitz_orbit_of(g, rep, budget);
        for (const auto& t : orbit)
            if (remaining.erase(t) == 0)
                throw std::logic_error("hurwitz_orbits: orbit left the decomposition set");
        out.orbit_sizes.push_back(orbit.size());
        out.representatives.push_back(rep);
    }
    // descending sizes, representatives kept in step
    std::vector<std::size_t> idx(out.orbit_sizes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return out.orbit_sizes[a] > out.orbit_sizes[b];
    });
    HurwitzOrbits sorted;
    for (std::size_t i : idx) {
        sorted.orbit_sizes.push_back(out.orbit_sizes[i]);
        sorted.representatives.push_back(out.representatives[i]);
    }
    sorted.transitive = sorted.orbit_sizes.size() == 1;
    return sorted;
}

}  // namespace qcox
