#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qcox/root_system.hpp"

namespace qcox {

// A group element, stored as the permutation it induces on the root set.
// Two elements of the same group are equal iff their permutations are.
struct Elt {
    std::vector<std::uint16_t> perm;
    friend bool operator==(const Elt& a, const Elt& b) { return a.perm == b.perm; }
    friend bool operator<(const Elt& a, const Elt& b) { return a.perm < b.perm; }
};

struct EltHash {
    std::size_t operator()(const Elt& e) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : e.perm) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The finite Coxeter group W acting on its root system. Multiplication is
// permutation composition; exact matrices are reconstructed on demand for
// fixed-space computations.
class CoxGroup {
public:
    explicit CoxGroup(std::shared_ptr<const RootSystem> rs);

    const RootSystem& roots() const { return *rs_; }
    std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
    int rank() const { return rs_->rank; }
    int num_reflections() const { return rs_->num_positive; }

    Elt identity() const;
    // r indexes a positive root
    const Elt& reflection(int r) const { return reflections_[(std::size_t)r]; }
    Elt mul(const Elt& a, const Elt& b) const;  // (ab)(v) = a(b(v))
    Elt inv(const Elt& a) const;
    Elt conj(const Elt& a, const Elt& g) const { return mul(mul(inv(g), a), g); }  // a^g
    bool is_identity(const Elt& a) const;
    int element_order(const Elt& a) const;

    // -1 if a is not a reflection, else the positive-root index.
    int reflection_index(const Elt& a) const;

    Mat matrix_of(const Elt& a) const;
    int mov_dim(const Elt& a) const;
    int reflection_length(const Elt& a) const { return mov_dim(a); }

    // Fix(x) = ker(x - id) and Mov(x) = im(x - id), canonical echelon bases.
    std::pair<Mat, Mat> fix_and_mov(const Elt& a) const;

    bool is_left_divisor(const Elt& x, const Elt& w) const;
    bool is_right_divisor(const Elt& y, const Elt& w) const;

    // positive-root indices of reflections t with t <= w in absolute order
    std::vector<int> divisor_reflections(const Elt& w) const;

    // order of the product of the reflections in positive roots r, s
    int pairwise_order(int r, int s) const;

    // All reduced reflection decompositions of w (tuples of positive-root
    // indices), enumerated by DFS over left divisors in canonical order.
    std::vector<std::vector<int>> reduced_decompositions(const Elt& w,
                                                         std::size_t budget = 5'000'000) const;

    // True iff some reduced decomposition of w generates W; the witness is
    // a decomposition whose roots close up to the whole root system.
    std::optional<std::vector<int>> quasi_coxeter_witness(const Elt& w) const;
    bool is_quasi_coxeter(const Elt& w) const { return quasi_coxeter_witness(w).has_value(); }

    // Product of the simple reflections, in simple-root order.
    Elt coxeter_element() const;

    Elt product_of_reflections(const std::vector<int>& refl) const;

    // Pointwise stabilizer of Fix(x): generating reflections plus the full
    // element set (closed subgroup enumeration; budgeted).
    struct Subgroup {
        std::vector<int> generating_reflections;
        std::vector<Elt> elements;
    };
    Subgroup parabolic_closure(const Elt& x, std::size_t budget = 2'000'000) const;

    // Breadth-first closure of the whole group from the simple reflections.
    const std::vector<Elt>& all_elements(std::size_t budget = 20'000'000) const;
    std::size_t element_index(const Elt& a) const;  // requires all_elements()

    std::vector<Elt> subgroup_closure(const std::vector<Elt>& gens,
                                      std::size_t budget = 2'000'000) const;

    // Exact characteristic polynomial of the matrix of a (conjugacy invariant).
    std::vector<QuadraticNumber> char_poly_of(const Elt& a) const;

private:
    std::shared_ptr<const RootSystem> rs_;
    std::vector<Elt> reflections_;
    std::unordered_map<std::size_t, std::vector<int>> reflection_lookup_;
    std::vector<int> basis_roots_;  // positive-root indices spanning the root span
    Mat basis_inverse_;             // inverse of [basis roots | orth complement] columns
    Mat complement_;                // rows: basis of the orthogonal complement of the root span
    mutable std::vector<Elt> all_elements_;
    mutable std::unordered_map<Elt, std::size_t, EltHash> element_index_;
    mutable std::vector<std::vector<int>> pairwise_order_;
};

}  // namespace qcox
