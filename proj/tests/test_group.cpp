#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>

#include "qcox/group.hpp"

using namespace qcox;

namespace {
CoxGroup make(Family f, int n) { return CoxGroup(build_root_system(f, n)); }

// ground-truth reflection length: BFS distance from the identity in the
// Cayley graph on all reflections
std::unordered_map<Elt, int, EltHash> bfs_lengths(const CoxGroup& g) {
    std::unordered_map<Elt, int, EltHash> dist;
    std::queue<Elt> q;
    dist[g.identity()] = 0;
    q.push(g.identity());
    while (!q.empty()) {
        Elt x = q.front();
        q.pop();
        int d = dist[x];
        for (int r = 0; r < g.num_reflections(); ++r) {
            Elt y = g.mul(x, g.reflection(r));
            if (dist.emplace(y, d + 1).second) q.push(y);
        }
    }
    return dist;
}
}  // namespace

TEST_CASE("group orders via breadth-first enumeration") {
    CHECK(make(Family::A, 3).all_elements().size() == 24);
    CHECK(make(Family::B, 2).all_elements().size() == 8);
    CHECK(make(Family::B, 3).all_elements().size() == 48);
    CHECK(make(Family::D, 4).all_elements().size() == 192);
    CHECK(make(Family::H, 3).all_elements().size() == 120);
    CHECK(make(Family::F, 4).all_elements().size() == 1152);
}

TEST_CASE("reflection length equals Cayley distance on all reflections") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::D, 4}, {Family::B, 3}, {Family::H, 3}}) {
        CoxGroup g = make(f, n);
        auto dist = bfs_lengths(g);
        CHECK(dist.size() == g.all_elements().size());
        for (const auto& [x, d] : dist) CHECK(g.reflection_length(x) == d);
    }
}

TEST_CASE("multiplication, inverse, conjugation") {
    CoxGroup g = make(Family::D, 4);
    Elt a = g.reflection(0), b = g.reflection(3);
    CHECK(g.is_identity(g.mul(a, a)));
    CHECK(g.mul(g.mul(a, b), g.inv(b)) == a);
    // conjugate of a reflection is a reflection
    Elt c = g.conj(a, b);
    CHECK(g.reflection_index(c) >= 0);
    CHECK(g.element_order(c) == 2);
    // matrix representation is a homomorphism
    CHECK(mat_mul(g.matrix_of(a), g.matrix_of(b)) == g.matrix_of(g.mul(a, b)));
    // reflection matrices match
    for (int r = 0; r < g.num_reflections(); ++r)
        CHECK(g.matrix_of(g.reflection(r)) == reflection_matrix(g.roots(), g.roots().root(r)));
}

TEST_CASE("Fix and Mov decompose the ambient space") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::D, 4}, {Family::H, 3}}) {
        CoxGroup g = make(f, n);
        for (const auto& x : g.all_elements()) {
            auto [fix, mov] = g.fix_and_mov(x);
            CHECK((int)fix.size() + (int)mov.size() == g.roots().ambient);
            CHECK((int)mov.size() == g.reflection_length(x));
            // the sum really is direct
            Mat both = fix;
            for (const auto& v : mov) both.push_back(v);
            CHECK((int)rank(both) == g.roots().ambient);
            // fix is fixed pointwise
            Mat m = g.matrix_of(x);
            for (const auto& v : fix) CHECK(mat_apply(m, v) == v);
        }
    }
}

TEST_CASE("coxeter elements have full reflection length and the right order") {
    struct Row { Family f; int n; int h; };
    for (auto [f, n, h] : std::vector<Row>{{Family::A, 3, 4},
                                           {Family::B, 3, 6},
                                           {Family::D, 4, 6},
                                           {Family::F, 4, 12},
                                           {Family::H, 3, 10},
                                           {Family::E, 6, 12}}) {
        CoxGroup g = make(f, n);
        Elt c = g.coxeter_element();
        CHECK(g.element_order(c) == h);
        CHECK(g.reflection_length(c) == n);
    }
}

TEST_CASE("absolute-order divisibility") {
    CoxGroup g = make(Family::A, 3);
    Elt c = g.coxeter_element();
    // every reflection below a Coxeter element divides it on both sides
    for (int r : g.divisor_reflections(c)) {
        CHECK(g.is_left_divisor(g.reflection(r), c));
        CHECK(g.is_right_divisor(g.reflection(r), c));
    }
    // in S4 every reflection divides the Coxeter element (a 4-cycle)
    CHECK((int)g.divisor_reflections(c).size() == g.num_reflections());
    CHECK(g.is_left_divisor(g.identity(), c));
    CHECK(g.is_left_divisor(c, c));
}

TEST_CASE("reduced decompositions of a Coxeter element of A2") {
    CoxGroup g = make(Family::A, 2);
    Elt c = g.coxeter_element();
    auto decs = g.reduced_decompositions(c);
    CHECK(decs.size() == 3);  // 3 reflections, each appears as a first letter once
    for (const auto& d : decs) {
        CHECK(d.size() == 2);
        CHECK(g.product_of_reflections(d) == c);
    }
}

TEST_CASE("quasi-Coxeter detection: -1 in W(B2) is not quasi-Coxeter") {
    CoxGroup g = make(Family::B, 2);
    // -1 = (s1 s2)^2, reflection length 2, but every reduced decomposition
    // uses two orthogonal reflections generating a proper subgroup
    Elt c = g.coxeter_element();
    Elt minus1 = g.mul(c, c);
    CHECK(g.reflection_length(minus1) == 2);
    CHECK(!g.is_quasi_coxeter(minus1));
    CHECK(g.is_quasi_coxeter(c));
}

TEST_CASE("quasi-Coxeter detection: Coxeter elements are quasi-Coxeter") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::A, 3}, {Family::D, 4}, {Family::H, 3}, {Family::F, 4}}) {
        CoxGroup g = make(f, n);
        auto w = g.quasi_coxeter_witness(g.coxeter_element());
        REQUIRE(w.has_value());
        CHECK((int)w->size() == n);
        CHECK(g.product_of_reflections(*w) == g.coxeter_element());
    }
}

TEST_CASE("parabolic closure of an element") {
    CoxGroup g = make(Family::D, 4);
    // product of two orthogonal simple reflections: closure is A1 x A1
    Elt x = g.mul(g.reflection(g.roots().simple[0]), g.reflection(g.roots().simple[2]));
    auto sg = g.parabolic_closure(x);
    CHECK(sg.elements.size() == 4);
    CHECK(sg.generating_reflections.size() == 2);
    // closure of a Coxeter element is everything
    CHECK(g.parabolic_closure(g.coxeter_element()).elements.size() == 192);
    // closure of the identity is trivial
    CHECK(g.parabolic_closure(g.identity()).elements.size() == 1);
}

TEST_CASE("characteristic polynomial is a conjugacy invariant") {
    CoxGroup g = make(Family::B, 3);
    Elt c = g.coxeter_element();
    for (int r = 0; r < g.num_reflections(); r += 3)
        CHECK(g.char_poly_of(g.conj(c, g.reflection(r))) == g.char_poly_of(c));
    // reflections: char poly (x-1)^{n-1} (x+1)
    auto p = g.char_poly_of(g.reflection(0));
    // x^3 - x^2 - x + 1
    CHECK(p == std::vector<QuadraticNumber>{QuadraticNumber(1), QuadraticNumber(-1),
                                            QuadraticNumber(-1), QuadraticNumber(1)});
}

TEST_CASE("budget limits raise BudgetExceeded") {
    CoxGroup g = make(Family::D, 4);
    CHECK_THROWS_AS(g.subgroup_closure({g.coxeter_element(), g.reflection(0)}, 10),
                    BudgetExceeded);
}
