#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcox/classes.hpp"

using namespace qcox;

namespace {
CoxGroup make(Family f, int n) { return CoxGroup(build_root_system(f, n)); }

Elt proper_quasi_coxeter_d4(const CoxGroup& g) {
    for (const auto& x : g.all_elements())
        if (g.reflection_length(x) == 4 && g.element_order(x) != 6 && g.is_quasi_coxeter(x))
            return x;
    throw std::runtime_error("no proper quasi-Coxeter element found in D4");
}
}  // namespace

TEST_CASE("catalog sanity") {
    const auto& cat = carter_catalog();
    // D family: Delta(m,n) for 2 <= m <= n/2, n = 4..8
    CHECK_NOTHROW(catalog_entry("Delta(2,4)"));
    CHECK_NOTHROW(catalog_entry("Delta(4,8)"));
    CHECK_THROWS(catalog_entry("Delta(5,8)"));
    for (int i = 1; i <= 2; ++i) CHECK_NOTHROW(catalog_entry("E6(a" + std::to_string(i) + ")"));
    for (int i = 1; i <= 4; ++i) CHECK_NOTHROW(catalog_entry("E7(a" + std::to_string(i) + ")"));
    for (int i = 1; i <= 8; ++i) CHECK_NOTHROW(catalog_entry("E8(a" + std::to_string(i) + ")"));
    CHECK_NOTHROW(catalog_entry("F4(a1)"));
    CHECK_NOTHROW(catalog_entry("H4"));
    // all catalog diagrams are admissible and pairwise non-isomorphic
    for (const auto& e : cat) {
        INFO(e.label);
        CHECK(e.diagram.is_admissible());
    }
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j) {
            INFO(cat[i].label << " vs " << cat[j].label);
            CHECK(!diagrams_isomorphic(cat[i].diagram, cat[j].diagram));
        }
    // vertex counts
    CHECK(catalog_entry("E8(a8)").diagram.n == 8);
    CHECK(catalog_entry("Delta(2,4)").diagram.n == 4);
    // Delta(m,n) has exactly n bonds (one cycle), Coxeter diagrams n-1
    CHECK(catalog_entry("Delta(3,7)").diagram.edge_count() == 7);
    CHECK(catalog_entry("D7").diagram.edge_count() == 6);
}

TEST_CASE("four-cycles and orientability") {
    auto cycles24 = four_cycles(catalog_entry("Delta(2,4)").diagram);
    CHECK(cycles24.size() == 1);
    CHECK(four_cycles(catalog_entry("E6(a1)").diagram).size() == 1);
    CHECK(four_cycles(catalog_entry("E6(a2)").diagram).size() == 2);
    CHECK(four_cycles(catalog_entry("E7(a4)").diagram).size() == 3);
    CHECK(four_cycles(catalog_entry("E8(a8)").diagram).size() == 6);
    CHECK(four_cycles(catalog_entry("D5").diagram).empty());

    // non-orientable: exactly E7(a4), E8(a7), E8(a8)
    std::vector<std::string> nonorientable;
    for (const auto& e : carter_catalog()) {
        auto rep = is_orientable(e.diagram);
        if (!rep.orientable) nonorientable.push_back(e.label);
        else if (!four_cycles(e.diagram).empty()) {
            // verify the witness: every 4-cycle consistently oriented
            auto dir = [&](int u, int v) {
                for (auto [a, b] : rep.orientation) {
                    if (a == u && b == v) return 1;
                    if (a == v && b == u) return -1;
                }
                return 0;
            };
            for (const auto& c : four_cycles(e.diagram)) {
                int s = dir(c[0], c[1]);
                CHECK(s != 0);
                CHECK(dir(c[1], c[2]) == s);
                CHECK(dir(c[2], c[3]) == s);
                CHECK(dir(c[3], c[0]) == s);
            }
        }
    }
    CHECK(nonorientable == std::vector<std::string>{"E7(a4)", "E8(a7)", "E8(a8)"});
}

TEST_CASE("bipartite decomposition") {
    CoxGroup g = make(Family::D, 4);
    // reflection: ((t), ())
    auto [r1, r2] = bipartite_decomposition(g, g.reflection(0));
    CHECK(r1 == ReflectionTuple{0});
    CHECK(r2.empty());
    // the Coxeter diagram of D4 is a star, so its 2-coloring is (1,3) or
    // (3,1); the proper class carries the 4-cycle and splits (2,2)
    for (const Elt& w : {g.coxeter_element(), proper_quasi_coxeter_d4(g)}) {
        auto [w1, w2] = bipartite_decomposition(g, w);
        CHECK(w1.size() + w2.size() == 4);
        if (w == proper_quasi_coxeter_d4(g)) CHECK(w1.size() == 2);
        for (std::size_t i = 0; i < w1.size(); ++i)
            for (std::size_t j = i + 1; j < w1.size(); ++j)
                CHECK(g.pairwise_order((int)w1[i], (int)w1[j]) == 2);
        for (std::size_t i = 0; i < w2.size(); ++i)
            for (std::size_t j = i + 1; j < w2.size(); ++j)
                CHECK(g.pairwise_order((int)w2[i], (int)w2[j]) == 2);
        ReflectionTuple full = w1;
        full.insert(full.end(), w2.begin(), w2.end());
        CHECK(g.product_of_reflections(full) == w);
    }
}

TEST_CASE("diagram extraction and classification") {
    CoxGroup d4 = make(Family::D, 4);
    auto d = diagram_of(d4, proper_quasi_coxeter_d4(d4));
    CHECK(d.n == 4);
    CHECK(d.is_admissible());
    CHECK(classify_diagram(d) == "Delta(2,4)");
    CHECK(classify_diagram(diagram_of(d4, d4.coxeter_element())) == "D4");

    CoxGroup d5 = make(Family::D, 5);
    CHECK(classify_diagram(diagram_of(d5, d5.coxeter_element())) == "D5");

    // vertex count always equals reflection length
    for (const Elt& w : {d4.reflection(3), d4.coxeter_element()})
        CHECK(diagram_of(d4, w).n == d4.reflection_length(w));
}

TEST_CASE("classification is invariant under vertex relabeling") {
    std::mt19937 rng(4242);
    for (const char* label : {"Delta(2,4)", "E6(a2)", "E8(a6)", "F4(a1)"}) {
        const auto& d = catalog_entry(label).diagram;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> perm(static_cast<std::size_t>(d.n));
            for (int i = 0; i < d.n; ++i) perm[(std::size_t)i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            CarterDiagram shuffled = d;
            for (int i = 0; i < d.n; ++i)
                for (int j = 0; j < d.n; ++j)
                    shuffled.order[(std::size_t)perm[(std::size_t)i]]
                                  [(std::size_t)perm[(std::size_t)j]] =
                        d.order[(std::size_t)i][(std::size_t)j];
            CHECK(classify_diagram(shuffled) == label);
        }
    }
}

TEST_CASE("diagram realization in D4") {
    CoxGroup g = make(Family::D, 4);
    const auto& e = catalog_entry("Delta(2,4)");
    auto roots = find_diagram_realization(g, e.diagram);
    REQUIRE(roots.size() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(g.pairwise_order(roots[(std::size_t)i], roots[(std::size_t)j]) ==
                  e.diagram.order[(std::size_t)i][(std::size_t)j]);
    Elt w = element_of_realization(g, e.diagram, roots);
    CHECK(g.reflection_length(w) == 4);
    CHECK(g.is_quasi_coxeter(w));
    CHECK(g.element_order(w) != 6);  // proper class, not the Coxeter class
}

TEST_CASE("DOT export of diagrams") {
    auto dot = diagram_to_dot(catalog_entry("F4(a1)").diagram);
    CHECK(dot.find("graph carter") != std::string::npos);
    auto dot5 = diagram_to_dot(catalog_entry("H3").diagram);
    CHECK(dot5.find("label=\"5\"") != std::string::npos);
}
