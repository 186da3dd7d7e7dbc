#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcox/linalg.hpp"

namespace qcox {

enum class Family : char { A = 'A', B = 'B', D = 'D', E = 'E', F = 'F', H = 'H' };

Family family_from_char(char c);

struct UnsupportedType : std::runtime_error {
    UnsupportedType(char family, int rank)
        : std::runtime_error("unsupported Coxeter type " + std::string(1, family) +
                             std::to_string(rank)) {}
};

// A finite (crystallographic or H-type) root system with a fixed simple
// system and a fixed numbering of the roots: positive roots first, then
// their negatives, with root i + num_positive == -root i.
//
// Simple root numbering:
//   A_n: e_i - e_{i+1};  B_n: e_i - e_{i+1}, then e_n;
//   D_n: e_i - e_{i+1}, then e_{n-1} + e_n;  E_n, F_4: Bourbaki;
//   H_3/H_4: computed canonical simple system, ordered so that the 5-bond
//   joins s_1 and s_2 (path s_1 -5- s_2 - s_3 [- s_4]).
class RootSystem {
public:
    Family family;
    int rank;           // number of simple roots
    int ambient;        // dimension of the ambient space V
    std::vector<Vec> roots;
    std::vector<int> simple;  // indices (into roots) of the simple roots
    int num_positive;

    const Vec& root(int i) const { return roots[(std::size_t)i]; }
    int negative_of(int i) const {
        return i < num_positive ? i + num_positive : i - num_positive;
    }
    int root_index(const Vec& v) const;  // -1 if absent

    // index (into the positive roots) of the image of root i under the
    // reflection in positive root r; full-root indices on both sides.
    int reflect_root(int r, int i) const { return reflection_table_[(std::size_t)r][(std::size_t)i]; }

    std::string type_name() const;

    // Closes the given set of root indices under mutual reflections.
    // Returns sorted full-root indices (both signs).
    std::vector<int> reflection_closure(const std::vector<int>& root_indices) const;

    // Decomposes a reflection-closed root set into irreducible components
    // and names each component type ("A1", "D4", ...). Sorted labels.
    std::vector<std::string> classify_closed_subsystem(const std::vector<int>& closed) const;

private:
    friend std::shared_ptr<const RootSystem> build_root_system(Family, int);
    std::vector<std::vector<int>> reflection_table_;  // [positive root][root] -> root
    std::unordered_map<std::size_t, std::vector<int>> index_;
};

std::shared_ptr<const RootSystem> build_root_system(Family family, int rank);

// The orthogonal reflection x -> x - 2<x,a>/<a,a> a.
Vec reflect(const Vec& x, const Vec& a);
Mat reflection_matrix(const RootSystem& rs, const Vec& root);

// classify_subsystem closes the subset under mutual reflections first.
std::vector<std::string> classify_subsystem(const RootSystem& rs, const std::vector<Vec>& roots);

}  // namespace qcox
