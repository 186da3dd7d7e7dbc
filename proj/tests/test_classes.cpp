#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcox/classes.hpp"

using namespace qcox;

namespace {
CoxGroup make(Family f, int n) { return CoxGroup(build_root_system(f, n)); }

std::vector<std::string> labels_of(const std::vector<QuasiCoxeterClass>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.label);
    return out;
}

void check_class_list(const CoxGroup& g, const std::vector<QuasiCoxeterClass>& cs) {
    for (const auto& c : cs) {
        INFO(c.label);
        CHECK(g.reflection_length(c.rep) == g.rank());
        CHECK(g.product_of_reflections(c.witness) == c.rep);
        CHECK((int)c.witness.size() == g.rank());
        // witness generates W
        CHECK(g.roots().reflection_closure(c.witness).size() == g.roots().roots.size());
        CHECK(g.element_order(c.rep) == c.order);
    }
    // pairwise distinct classes: different char poly or different diagram
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            CHECK(cs[i].label != cs[j].label);
}
}  // namespace

TEST_CASE("quasi-Coxeter classes of D4 and D5") {
    CoxGroup d4 = make(Family::D, 4);
    auto cs = quasi_coxeter_class_representatives(d4);
    check_class_list(d4, cs);
    CHECK(labels_of(cs) == std::vector<std::string>{"D4", "Delta(2,4)"});
    CHECK(cs[0].order == 6);  // Coxeter number of D4
    CHECK(cs[1].order == 4);

    CoxGroup d5 = make(Family::D, 5);
    auto cs5 = quasi_coxeter_class_representatives(d5);
    check_class_list(d5, cs5);
    CHECK(labels_of(cs5) == std::vector<std::string>{"D5", "Delta(2,5)"});
}

TEST_CASE("quasi-Coxeter classes of F4") {
    CoxGroup f4 = make(Family::F, 4);
    auto cs = quasi_coxeter_class_representatives(f4);
    check_class_list(f4, cs);
    CHECK(labels_of(cs) == std::vector<std::string>{"F4", "F4(a1)"});
    CHECK(cs[0].order == 12);
    CHECK(cs[1].order == 6);
}

TEST_CASE("quasi-Coxeter classes of H3") {
    CoxGroup h3 = make(Family::H, 3);
    auto cs = quasi_coxeter_class_representatives(h3);
    check_class_list(h3, cs);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].label == "H3");
    CHECK(cs[0].order == 10);  // Coxeter number
    // a1 is the proper class whose decomposition diagram has the Coxeter
    // diagram's shape; the other proper class (order 6) is a2 and carries
    // the triangle diagram with the 5-bond
    CHECK(cs[1].label == "H3(a1)");
    CHECK(cs[1].order == 10);
    CHECK(classify_diagram(diagram_of(h3, cs[1].rep)) == "H3");
    CHECK(cs[2].label == "H3(a2)");
    CHECK(cs[2].order == 6);
}

TEST_CASE("quasi-Coxeter classes of E6 with centralizer row") {
    CoxGroup e6 = make(Family::E, 6);
    auto cs = quasi_coxeter_class_representatives(e6);
    check_class_list(e6, cs);
    CHECK(labels_of(cs) == std::vector<std::string>{"E6", "E6(a1)", "E6(a2)"});
    std::map<std::string, int> orders;
    for (const auto& c : cs) orders[c.label] = c.order;
    CHECK(orders["E6"] == 12);
    CHECK(orders["E6(a1)"] == 9);
    CHECK(orders["E6(a2)"] == 6);

    auto row = verify_centralizer_row(e6, "E6(a1)");
    CHECK(row.P == std::vector<std::string>{"A1", "A4"});
    CHECK(row.P_m == std::vector<std::string>{"D5"});
    CHECK(row.C_Pm_s1 == std::vector<std::string>{"A1", "A1", "A3"});
    CHECK(row.P_cap_Pm == std::vector<std::string>{"A1", "A3"});
    CHECK(row.centralizer_verdict);

    auto row2 = verify_centralizer_row(e6, "E6(a2)");
    CHECK(row2.P == std::vector<std::string>{"A1", "A3"});
    CHECK(row2.P_m == std::vector<std::string>{"D5"});
    CHECK(row2.C_Pm_s1 == std::vector<std::string>{"A1", "A1", "A3"});
    CHECK(row2.P_cap_Pm == std::vector<std::string>{"A1", "A3"});
    // P ∩ P_m = P here, so P ≤ C_{P_m}(s_1) and the joint subgroup is only
    // C_{P_m}(s_1) itself, strictly below the full reflection centralizer
    CHECK(!row2.centralizer_verdict);
}

TEST_CASE("centralizer rows of E7") {
    CoxGroup e7 = make(Family::E, 7);
    auto r1 = verify_centralizer_row(e7, "E7(a1)");
    CHECK(r1.P == std::vector<std::string>{"A1", "D5"});
    CHECK(r1.P_m == std::vector<std::string>{"D6"});
    CHECK(r1.C_Pm_s1 == std::vector<std::string>{"A1", "A1", "D4"});
    CHECK(r1.P_cap_Pm == std::vector<std::string>{"A1", "D4"});
    CHECK(r1.centralizer_verdict);

    auto r4 = verify_centralizer_row(e7, "E7(a4)");
    CHECK(r4.P == std::vector<std::string>{"A1", "D4"});
    CHECK(r4.P_m == std::vector<std::string>{"E6"});
    CHECK(r4.C_Pm_s1 == std::vector<std::string>{"A1", "A5"});
    CHECK(r4.P_cap_Pm == std::vector<std::string>{"A1", "A3"});
    CHECK(r4.centralizer_verdict);
}

TEST_CASE("centralizer row of E8(a3)") {
    CoxGroup e8 = make(Family::E, 8);
    auto row = verify_centralizer_row(e8, "E8(a3)");
    CHECK(row.P == std::vector<std::string>{"A1", "E6"});
    CHECK(row.P_m == std::vector<std::string>{"E7"});
    CHECK(row.C_Pm_s1 == std::vector<std::string>{"A1", "D6"});
    CHECK(row.P_cap_Pm == std::vector<std::string>{"A1", "A5"});
    CHECK(row.centralizer_verdict);
}

TEST_CASE("realized classes for D8 agree with the expected count") {
    CoxGroup d8 = make(Family::D, 8);
    auto cs = quasi_coxeter_class_representatives(d8);
    check_class_list(d8, cs);
    CHECK(labels_of(cs) ==
          std::vector<std::string>{"D8", "Delta(2,8)", "Delta(3,8)", "Delta(4,8)"});
    CHECK(cs[0].order == 14);  // Coxeter number of D8
}
