#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcox/root_system.hpp"

using namespace qcox;

namespace {
int expected_count(Family f, int n) {
    switch (f) {
        case Family::A: return n * (n + 1);
        case Family::B: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
        case Family::F: return 48;
        case Family::H: return n == 3 ? 30 : 120;
    }
    return -1;
}
}  // namespace

TEST_CASE("root counts for all supported types") {
    std::vector<std::pair<Family, int>> types = {
        {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 5},
        {Family::B, 2}, {Family::B, 3}, {Family::B, 4},
        {Family::D, 4}, {Family::D, 5}, {Family::D, 6}, {Family::D, 7}, {Family::D, 8},
        {Family::E, 6}, {Family::E, 7}, {Family::E, 8},
        {Family::F, 4}, {Family::H, 3}, {Family::H, 4}};
    for (auto [f, n] : types) {
        auto rs = build_root_system(f, n);
        INFO(rs->type_name());
        CHECK((int)rs->roots.size() == expected_count(f, n));
        CHECK(rs->num_positive * 2 == (int)rs->roots.size());
        CHECK((int)rs->simple.size() == n);
        // negatives are paired correctly
        for (int i = 0; i < (int)rs->roots.size(); ++i)
            CHECK(is_zero(add(rs->root(i), rs->root(rs->negative_of(i)))));
        // simple roots are positive
        for (int s : rs->simple) CHECK(s < rs->num_positive);
    }
}

TEST_CASE("reflections permute the root set and are involutions") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::D, 4}, {Family::F, 4}, {Family::H, 3}, {Family::B, 3}}) {
        auto rs = build_root_system(f, n);
        for (int r = 0; r < rs->num_positive; ++r) {
            std::vector<bool> hit(rs->roots.size(), false);
            for (int i = 0; i < (int)rs->roots.size(); ++i) {
                int j = rs->reflect_root(r, i);
                CHECK(!hit[(std::size_t)j]);
                hit[(std::size_t)j] = true;
                CHECK(rs->reflect_root(r, j) == i);  // involution
            }
            CHECK(rs->reflect_root(r, r) == rs->negative_of(r));
        }
    }
}

TEST_CASE("reflect matches the root permutation table") {
    auto rs = build_root_system(Family::H, 3);
    for (int r = 0; r < rs->num_positive; ++r)
        for (int i = 0; i < (int)rs->roots.size(); ++i) {
            Vec img = reflect(rs->root(i), rs->root(r));
            CHECK(rs->root_index(img) == rs->reflect_root(r, i));
        }
}

// Coxeter diagram shape read off from the orders m(s_i, s_j) of products of
// simple reflections; m = 2 is a non-edge.
static std::vector<std::vector<int>> bond_matrix(const RootSystem& rs) {
    int n = rs.rank;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) { m[i][j] = 1; continue; }
            const Vec &a = rs.root(rs.simple[(std::size_t)i]),
                      &b = rs.root(rs.simple[(std::size_t)j]);
            // order of s_a s_b from cos^2(pi/m) = <a,b>^2 / (<a,a><b,b>)
            QuadraticNumber c2 = dot(a, b) * dot(a, b);
            QuadraticNumber denom = dot(a, a) * dot(b, b);
            if (c2.is_zero()) m[i][j] = 2;
            else if (c2 * QuadraticNumber(4) == denom) m[i][j] = 3;
            else if (c2 * QuadraticNumber(2) == denom) m[i][j] = 4;
            else if (c2 * QuadraticNumber(8) == denom * (QuadraticNumber(3) + QuadraticNumber::sqrt5()))
                m[i][j] = 5;
            else m[i][j] = -1;
        }
    return m;
}

TEST_CASE("simple systems have the expected diagram shape") {
    auto count_bonds = [](const std::vector<std::vector<int>>& m, int order) {
        int c = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                if (m[i][j] == order) ++c;
        return c;
    };

    SUBCASE("A3: path with two single bonds") {
        auto m = bond_matrix(*build_root_system(Family::A, 3));
        CHECK(count_bonds(m, 3) == 2);
        CHECK(count_bonds(m, 4) == 0);
    }
    SUBCASE("B3: one 4-bond at the end") {
        auto m = bond_matrix(*build_root_system(Family::B, 3));
        CHECK(count_bonds(m, 3) == 1);
        CHECK(count_bonds(m, 4) == 1);
        CHECK(m[1][2] == 4);
    }
    SUBCASE("D4: star, three single bonds through the branch node") {
        auto m = bond_matrix(*build_root_system(Family::D, 4));
        CHECK(count_bonds(m, 3) == 3);
        // s_2 (index 1) is the branch node: e2 - e3 meets all others
        CHECK(m[0][1] == 3);
        CHECK(m[1][2] == 3);
        CHECK(m[1][3] == 3);
        CHECK(m[0][2] == 2);
    }
    SUBCASE("F4: path with the double bond in the middle") {
        auto m = bond_matrix(*build_root_system(Family::F, 4));
        CHECK(count_bonds(m, 3) == 2);
        CHECK(count_bonds(m, 4) == 1);
        CHECK(m[1][2] == 4);
    }
    SUBCASE("E6/E7/E8: tree with n-1 single bonds and one branch node") {
        for (int n : {6, 7, 8}) {
            auto m = bond_matrix(*build_root_system(Family::E, n));
            CHECK(count_bonds(m, 3) == n - 1);
            CHECK(count_bonds(m, 4) == 0);
            // Bourbaki: alpha_2 hangs off alpha_4
            CHECK(m[1][3] == 3);
            CHECK(m[0][2] == 3);
        }
    }
    SUBCASE("H3: path s1 -5- s2 - s3") {
        auto m = bond_matrix(*build_root_system(Family::H, 3));
        CHECK(m[0][1] == 5);
        CHECK(m[1][2] == 3);
        CHECK(m[0][2] == 2);
    }
    SUBCASE("H4: path s1 -5- s2 - s3 - s4") {
        auto m = bond_matrix(*build_root_system(Family::H, 4));
        CHECK(m[0][1] == 5);
        CHECK(m[1][2] == 3);
        CHECK(m[2][3] == 3);
        CHECK(m[0][2] == 2);
        CHECK(m[0][3] == 2);
        CHECK(m[1][3] == 2);
    }
}

TEST_CASE("reflection closure and subsystem classification") {
    auto rs = build_root_system(Family::D, 4);
    // the full simple system closes to everything
    CHECK(rs->reflection_closure(rs->simple).size() == rs->roots.size());
    // a single root closes to an A1
    auto one = rs->reflection_closure({rs->simple[0]});
    CHECK(one.size() == 2);
    CHECK(rs->classify_closed_subsystem(one) == std::vector<std::string>{"A1"});
    // two orthogonal roots: A1 x A1
    auto e8 = build_root_system(Family::E, 8);
    CHECK(e8->reflection_closure(e8->simple).size() == 240);
    auto sub = e8->reflection_closure(
        {e8->simple[0], e8->simple[2], e8->simple[3], e8->simple[4]});
    CHECK(e8->classify_closed_subsystem(sub) == std::vector<std::string>{"A4"});
}

TEST_CASE("classify_subsystem names standard embeddings") {
    auto e8 = build_root_system(Family::E, 8);
    // first 7 Bourbaki simples of E8 generate E7
    std::vector<Vec> e7simples;
    for (int i = 0; i < 7; ++i) e7simples.push_back(e8->root(e8->simple[(std::size_t)i]));
    CHECK(classify_subsystem(*e8, e7simples) == std::vector<std::string>{"E7"});
    std::vector<Vec> e6simples(e7simples.begin(), e7simples.end() - 1);
    CHECK(classify_subsystem(*e8, e6simples) == std::vector<std::string>{"E6"});

    auto h4 = build_root_system(Family::H, 4);
    std::vector<Vec> h3simples;
    for (int i = 0; i < 3; ++i) h3simples.push_back(h4->root(h4->simple[(std::size_t)i]));
    CHECK(classify_subsystem(*h4, h3simples) == std::vector<std::string>{"H3"});

    auto b4 = build_root_system(Family::B, 4);
    std::vector<Vec> dsimples;
    for (int i = 0; i < 3; ++i) dsimples.push_back(b4->root(b4->simple[(std::size_t)i]));
    Vec last(4, QuadraticNumber(0));
    last[2] = QuadraticNumber(1);
    last[3] = QuadraticNumber(1);
    dsimples.push_back(last);
    CHECK(classify_subsystem(*b4, dsimples) == std::vector<std::string>{"D4"});
}

TEST_CASE("unsupported types are rejected") {
    CHECK_THROWS_AS(build_root_system(Family::H, 5), UnsupportedType);
    CHECK_THROWS_AS(build_root_system(Family::E, 9), UnsupportedType);
    CHECK_THROWS_AS(build_root_system(Family::F, 3), UnsupportedType);
}
