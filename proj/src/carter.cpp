#include "qcox/carter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcox {

int CarterDiagram::edge_count() const { return (int)edges().size(); }

std::vector<std::pair<int, int>> CarterDiagram::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (has_edge(i, j)) e.emplace_back(i, j);
    return e;
}

bool CarterDiagram::is_admissible() const {
    // all cycles even <=> the bond graph is bipartite
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[(std::size_t)s] >= 0) continue;
        color[(std::size_t)s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (!has_edge(v, u)) continue;
                if (color[(std::size_t)u] < 0) {
                    color[(std::size_t)u] = 1 - color[(std::size_t)v];
                    stack.push_back(u);
                } else if (color[(std::size_t)u] == color[(std::size_t)v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

CarterDiagram blank(int n) {
    CarterDiagram d;
    d.n = n;
    d.order.assign((std::size_t)n, std::vector<int>((std::size_t)n, 2));
    for (int i = 0; i < n; ++i) d.order[(std::size_t)i][(std::size_t)i] = 1;
    return d;
}

void bond(CarterDiagram& d, int i, int j, int o = 3) {
    d.order[(std::size_t)i][(std::size_t)j] = o;
    d.order[(std::size_t)j][(std::size_t)i] = o;
}

// Delta(m,n): path s2-...-sm, 4-cycle (s1, sm, s(m+1), s(m+2)) with edges
// sm-s(m+1), sm-s1, s(m+1)-s(m+2), s1-s(m+2), then path s(m+2)-...-sn.
// Vertices are 0-based: s_k -> k-1.
CarterDiagram delta_diagram(int m, int n) {
    CarterDiagram d = blank(n);
    d.m_parameter = m;
    for (int k = 2; k < m; ++k) bond(d, k - 1, k);          // s_k - s_{k+1}
    bond(d, m - 1, m);      // s_m - s_{m+1}
    bond(d, m - 1, 0);      // s_m - s_1
    bond(d, m, m + 1);      // s_{m+1} - s_{m+2}
    bond(d, 0, m + 1);      // s_1 - s_{m+2}
    for (int k = m + 2; k < n; ++k) bond(d, k - 1, k);      // tail
    return d;
}

CarterDiagram coxeter_diagram(Family f, int rank) {
    CarterDiagram d = blank(rank);
    switch (f) {
        case Family::A:
            for (int i = 0; i + 1 < rank; ++i) bond(d, i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < rank; ++i) bond(d, i, i + 1);
            bond(d, rank - 2, rank - 1, 4);
            break;
        case Family::D:
            for (int i = 0; i + 1 < rank - 1; ++i) bond(d, i, i + 1);
            bond(d, rank - 3, rank - 1);
            break;
        case Family::E:
            // Bourbaki: a1-a3-a4-a5-...-a_rank path, a2 off a4
            bond(d, 0, 2);
            for (int i = 2; i + 1 < rank; ++i) bond(d, i, i + 1);
            bond(d, 1, 3);
            break;
        case Family::F:
            bond(d, 0, 1);
            bond(d, 1, 2, 4);
            bond(d, 2, 3);
            break;
        case Family::H:
            bond(d, 0, 1, 5);
            for (int i = 1; i + 1 < rank; ++i) bond(d, i, i + 1);
            break;
    }
    return d;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    auto add = [&](std::string label, CarterDiagram d, int s1, int sm) {
        cat.push_back({std::move(label), std::move(d), s1, sm});
    };

    // D family: Delta(m,n), 2 <= m <= n/2 (Delta(m,n) = Delta(n-m,n))
    for (int n = 4; n <= 8; ++n)
        for (int m = 2; 2 * m <= n; ++m)
            add("Delta(" + std::to_string(m) + "," + std::to_string(n) + ")",
                delta_diagram(m, n), /*s1*/ 0, /*sm*/ m - 1);

    // exceptional diagrams; vertex ids follow the ladder layout
    // bottom row 00,10,20(,30) = 0,1,2(,...) then top row 01,11,21,...
    {
        CarterDiagram e6a1 = blank(6);
        // 00=0 10=1 20=2 01=3 11=4 21=5
        for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}})
            bond(e6a1, a, b);
        add("E6(a1)", e6a1, /*s1=21*/ 5, /*sm=20*/ 2);

        CarterDiagram e6a2 = e6a1;
        bond(e6a2, 2, 5);
        add("E6(a2)", e6a2, 5, 2);

        auto grow = [](const CarterDiagram& base) {
            CarterDiagram d = blank(base.n + 1);
            for (int i = 0; i < base.n; ++i)
                for (int j = 0; j < base.n; ++j)
                    d.order[(std::size_t)i][(std::size_t)j] = base.order[(std::size_t)i][(std::size_t)j];
            return d;
        };

        CarterDiagram e7a1 = grow(e6a1);  // + 31=6 on 21=5
        bond(e7a1, 6, 5);
        add("E7(a1)", e7a1, /*s1=31*/ 6, /*sm=20*/ 2);

        CarterDiagram e7a2 = grow(e6a1);  // + m11=6 on 01=3
        bond(e7a2, 6, 3);
        add("E7(a2)", e7a2, /*s1=21*/ 5, /*sm=20*/ 2);

        CarterDiagram e7a3 = grow(e6a2);  // + 31=6 on 21=5
        bond(e7a3, 6, 5);
        add("E7(a3)", e7a3, /*s1=31*/ 6, /*sm=00*/ 0);

        CarterDiagram e7a4 = grow(e6a2);  // + 12=6 on 21=5 and 01=3
        bond(e7a4, 6, 5);
        bond(e7a4, 6, 3);
        add("E7(a4)", e7a4, /*s1=12*/ 6, /*sm=20*/ 2);

        CarterDiagram e8a1 = grow(e7a1);  // + 41=7 on 31=6
        bond(e8a1, 7, 6);
        add("E8(a1)", e8a1, /*s1=41*/ 7, /*sm=20*/ 2);

        CarterDiagram e8a2 = grow(e7a1);  // + m10=7 on 00=0
        bond(e8a2, 7, 0);
        add("E8(a2)", e8a2, /*s1=31*/ 6, /*sm=20*/ 2);

        CarterDiagram e8a3 = grow(grow(e6a1));  // + m11=6 on 01=3, m10=7 on 00=0
        bond(e8a3, 6, 3);
        bond(e8a3, 7, 0);
        add("E8(a3)", e8a3, /*s1=21*/ 5, /*sm=m10*/ 7);

        CarterDiagram e8a4 = grow(grow(e6a2));  // + chain 21=5 - 31=6 - 41=7
        bond(e8a4, 5, 6);
        bond(e8a4, 6, 7);
        add("E8(a4)", e8a4, /*s1=41*/ 7, /*sm=20*/ 2);

        CarterDiagram e8a5 = grow(e7a3);  // + m10=7 on 00=0
        bond(e8a5, 7, 0);
        add("E8(a5)", e8a5, /*s1=31*/ 6, /*sm=20*/ 2);

        CarterDiagram e8a6 = blank(8);
        // 00=0 10=1 20=2 30=3 01=4 11=5 21=6 31=7 -- 3-square ladder
        for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {4, 5}, {5, 6}, {0, 4},
                            {1, 5}, {2, 6}, {7, 6}, {7, 3}, {2, 3}})
            bond(e8a6, a, b);
        add("E8(a6)", e8a6, /*s1=31*/ 7, /*sm=30*/ 3);

        CarterDiagram e8a7 = grow(e7a4);  // + 13=7 on 12=6
        bond(e8a7, 7, 6);
        add("E8(a7)", e8a7, /*s1=13*/ 7, /*sm=20*/ 2);

        CarterDiagram e8a8 = blank(8);  // cube graph
        for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5},
                            {2, 3}, {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}})
            bond(e8a8, a, b);
        add("E8(a8)", e8a8, /*s1=vertex 6*/ 5, /*sm=vertex 3*/ 2);

        CarterDiagram f4a1 = blank(4);  // 4-cycle with alternating bond orders
        bond(f4a1, 0, 1, 3);
        bond(f4a1, 1, 2, 4);
        bond(f4a1, 2, 3, 3);
        bond(f4a1, 3, 0, 4);
        add("F4(a1)", f4a1, 0, 2);
    }

    // Coxeter diagrams of the supported types
    for (int n = 1; n <= 8; ++n) add("A" + std::to_string(n), coxeter_diagram(Family::A, n), -1, -1);
    for (int n = 2; n <= 8; ++n) add("B" + std::to_string(n), coxeter_diagram(Family::B, n), -1, -1);
    for (int n = 4; n <= 8; ++n) add("D" + std::to_string(n), coxeter_diagram(Family::D, n), -1, -1);
    for (int n = 6; n <= 8; ++n) add("E" + std::to_string(n), coxeter_diagram(Family::E, n), -1, -1);
    add("F4", coxeter_diagram(Family::F, 4), -1, -1);
    add("H3", coxeter_diagram(Family::H, 3), -1, -1);
    add("H4", coxeter_diagram(Family::H, 4), -1, -1);
    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& carter_catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry& catalog_entry(const std::string& label) {
    for (const auto& e : carter_catalog())
        if (e.label == label) return e;
    throw std::out_of_range("catalog_entry: no such label " + label);
}

namespace {

// backtracking vertex matching; with all_of set, collects every isomorphism
std::vector<std::vector<int>> match_diagrams(const CarterDiagram& a, const CarterDiagram& b,
                                             bool all_of) {
    if (a.n != b.n) return {};
    int n = a.n;
    // cheap invariants: multiset of bond orders, degree sequences
    auto profile = [n](const CarterDiagram& d) {
        std::multiset<std::vector<int>> rows;
        for (int i = 0; i < n; ++i) {
            std::vector<int> row = d.order[(std::size_t)i];
            std::sort(row.begin(), row.end());
            rows.insert(row);
        }
        return rows;
    };
    if (profile(a) != profile(b)) return {};
    std::vector<std::vector<int>> out;
    std::vector<int> map_(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) {
            out.push_back(map_);
            return !all_of;  // stop at the first match unless collecting all
        }
        for (int j = 0; j < n; ++j) {
            if (used[(std::size_t)j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k)
                if (a.order[(std::size_t)i][(std::size_t)k] !=
                    b.order[(std::size_t)j][(std::size_t)map_[(std::size_t)k]])
                    ok = false;
            if (!ok) continue;
            map_[(std::size_t)i] = j;
            used[(std::size_t)j] = true;
            if (self(self, i + 1)) return true;
            used[(std::size_t)j] = false;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::optional<std::vector<int>> diagram_isomorphism(const CarterDiagram& a,
                                                    const CarterDiagram& b) {
    auto all = match_diagrams(a, b, false);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<std::vector<int>> diagram_isomorphisms(const CarterDiagram& a,
                                                   const CarterDiagram& b) {
    return match_diagrams(a, b, true);
}

bool diagrams_isomorphic(const CarterDiagram& a, const CarterDiagram& b) {
    return diagram_isomorphism(a, b).has_value();
}

std::string classify_diagram(const CarterDiagram& d) {
    for (const auto& e : carter_catalog())
        if (diagrams_isomorphic(d, e.diagram)) return e.label;
    return "unrecognized";
}

std::pair<ReflectionTuple, ReflectionTuple> bipartite_decomposition(
    const CoxGroup& g, const Elt& w, std::size_t budget) {
    int lw = g.reflection_length(w);
    if (lw == 0) return {{}, {}};
    // first reduced decomposition in canonical order
    ReflectionTuple seed;
    Elt rest = w;
    for (int len = lw; len > 0; --len)
        for (int r = 0; r < g.num_reflections(); ++r) {
            Elt next = g.mul(g.reflection(r), rest);
            if (g.reflection_length(next) == len - 1) {
                seed.push_back(r);
                rest = next;
                break;
            }
        }
    auto split_point = [&](const ReflectionTuple& t) -> int {
        // largest k such that t[0..k) pairwise commute; then check the rest
        int k = 1;
        while (k < (int)t.size()) {
            bool comm = true;
            for (int i = 0; i < k && comm; ++i)
                if (g.pairwise_order(t[(std::size_t)i], t[(std::size_t)k]) != 2) comm = false;
            if (!comm) break;
            ++k;
        }
        for (int i = k; i < (int)t.size(); ++i)
            for (int j = i + 1; j < (int)t.size(); ++j)
                if (g.pairwise_order(t[(std::size_t)i], t[(std::size_t)j]) != 2) return -1;
        return k;
    };
    // BFS over the Hurwitz orbit until a bipartite tuple appears
    std::set<ReflectionTuple> seen{seed};
    std::vector<ReflectionTuple> queue{seed};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        ReflectionTuple cur = queue[qi];
        int k = split_point(cur);
        if (k >= 0) {
            ReflectionTuple w1(cur.begin(), cur.begin() + k);
            ReflectionTuple w2(cur.begin() + k, cur.end());
            return {w1, w2};
        }
        for (int i = 1; i < (int)cur.size(); ++i)
            for (auto dir : {MoveDirection::forward, MoveDirection::inverse}) {
                ReflectionTuple next = hurwitz_move(g, cur, i, dir);
                if (seen.insert(next).second) {
                    queue.push_back(std::move(next));
                    if (seen.size() > budget)
                        throw BudgetExceeded("bipartite_decomposition: budget exceeded");
                }
            }
    }
    throw std::runtime_error("bipartite_decomposition: no bipartite tuple in the orbit");
}

CarterDiagram diagram_of_tuple(const CoxGroup& g, const ReflectionTuple& w1,
                               const ReflectionTuple& w2) {
    CarterDiagram d = blank((int)(w1.size() + w2.size()));
    d.roots = w1;
    d.roots.insert(d.roots.end(), w2.begin(), w2.end());
    d.split = (int)w1.size();
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            bond(d, i, j, g.pairwise_order(d.roots[(std::size_t)i], d.roots[(std::size_t)j]));
    return d;
}

CarterDiagram diagram_of(const CoxGroup& g, const Elt& w, std::size_t budget) {
    auto [w1, w2] = bipartite_decomposition(g, w, budget);
    CarterDiagram d = diagram_of_tuple(g, w1, w2);
    if (g.roots().family != Family::H && !d.is_admissible())
        throw std::logic_error("diagram_of: inadmissible diagram from a Weyl-group element");
    return d;
}

std::vector<std::array<int, 4>> four_cycles(const CarterDiagram& d) {
    std::vector<std::array<int, 4>> out;
    // cycles a-b-c-e-a, chordless: no a-c or b-e edge; normalize with a
    // smallest, and b < e to kill the reflection
    for (int a = 0; a < d.n; ++a)
        for (int b = a + 1; b < d.n; ++b) {
            if (!d.has_edge(a, b)) continue;
            for (int c = a + 1; c < d.n; ++c) {
                if (c == b || !d.has_edge(b, c) || d.has_edge(a, c)) continue;
                for (int e = b + 1; e < d.n; ++e) {
                    if (e == c || !d.has_edge(c, e) || !d.has_edge(a, e) || d.has_edge(b, e))
                        continue;
                    out.push_back({a, b, c, e});
                }
            }
        }
    return out;
}

OrientationReport is_orientable(const CarterDiagram& d) {
    auto es = d.edges();
    auto cycles = four_cycles(d);
    OrientationReport rep;
    if (es.size() > 30) throw std::runtime_error("is_orientable: too many edges");
    std::map<std::pair<int, int>, int> eidx;
    for (std::size_t k = 0; k < es.size(); ++k) eidx[es[k]] = (int)k;
    auto dir_of = [&](std::uint64_t mask, int u, int v) {
        // +1 if oriented u -> v
        bool flip = u > v;
        int k = eidx.at(flip ? std::make_pair(v, u) : std::make_pair(u, v));
        bool fwd = !((mask >> k) & 1);  // bit clear: low -> high vertex
        return (fwd != flip) ? 1 : -1;
    };
    for (std::uint64_t mask = 0; mask < (1ull << es.size()); ++mask) {
        bool ok = true;
        for (const auto& cyc : cycles) {
            // cyclically oriented: consistent direction around a-b-c-e-a
            int s = dir_of(mask, cyc[0], cyc[1]);
            if (dir_of(mask, cyc[1], cyc[2]) != s || dir_of(mask, cyc[2], cyc[3]) != s ||
                dir_of(mask, cyc[3], cyc[0]) != s) {
                ok = false;
                break;
            }
        }
        if (ok) {
            rep.orientable = true;
            for (std::size_t k = 0; k < es.size(); ++k)
                rep.orientation.push_back(((mask >> k) & 1) ? std::make_pair(es[k].second, es[k].first)
                                                            : es[k]);
            return rep;
        }
    }
    return rep;
}

std::string diagram_to_dot(const CarterDiagram& d) {
    std::ostringstream os;
    os << "graph carter {\n";
    for (int i = 0; i < d.n; ++i) os << "  v" << i << ";\n";
    for (auto [i, j] : d.edges()) {
        int o = d.order[(std::size_t)i][(std::size_t)j];
        if (o == 4)
            os << "  v" << i << " -- v" << j << ";\n  v" << i << " -- v" << j << ";\n";
        else if (o >= 5)
            os << "  v" << i << " -- v" << j << " [label=\"" << o << "\"];\n";
        else
            os << "  v" << i << " -- v" << j << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace qcox
