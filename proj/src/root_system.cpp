#include "qcox/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qcox {

Family family_from_char(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::B;  // same Weyl group
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'H': return Family::H;
        default: throw std::runtime_error(std::string("unknown family letter ") + c);
    }
}

Vec reflect(const Vec& x, const Vec& a) {
    QuadraticNumber c = (dot(x, a) + dot(x, a)) / dot(a, a);
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - c * a[i];
    return r;
}

Mat reflection_matrix(const RootSystem& rs, const Vec& root) {
    if (rs.root_index(root) < 0)
        throw std::invalid_argument("reflection_matrix: vector is not a root");
    std::size_t n = root.size();
    QuadraticNumber nn = dot(root, root);
    Mat m = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] -= (QuadraticNumber(2) * root[i] * root[j]) / nn;
    return m;
}

namespace {


bool vec_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int s = (a[i] - b[i]).sign();
        if (s != 0) return s < 0;
    }
    return false;
}

// All sign patterns over the nonzero support of v.
void push_signed(std::vector<Vec>& out, const Vec& v) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) support.push_back(i);
    for (std::size_t mask = 0; mask < (1u << support.size()); ++mask) {
        Vec w = v;
        for (std::size_t k = 0; k < support.size(); ++k)
            if (mask & (1u << k)) w[support[k]] = -w[support[k]];
        out.push_back(std::move(w));
    }
}

std::vector<Vec> h_type_roots(int rank) {
    QuadraticNumber half(Rational(1, 2));
    QuadraticNumber phi = QuadraticNumber::golden();
    QuadraticNumber psi = phi - QuadraticNumber(1);  // 1/phi
    std::vector<Vec> out;
    if (rank == 3) {
        for (int i = 0; i < 3; ++i) {
            Vec v(3);
            v[(std::size_t)i] = QuadraticNumber(1);
            push_signed(out, v);
        }
        // even permutations of (phi, 1, 1/phi)/2 are the 3 cyclic shifts
        QuadraticNumber c[3] = {half * phi, half, half * psi};
        for (int s = 0; s < 3; ++s) {
            Vec v(3);
            for (int i = 0; i < 3; ++i) v[(std::size_t)((i + s) % 3)] = c[i];
            push_signed(out, v);
        }
    } else {
        for (int i = 0; i < 4; ++i) {
            Vec v(4);
            v[(std::size_t)i] = QuadraticNumber(1);
            push_signed(out, v);
        }
        push_signed(out, Vec{half, half, half, half});
        // even permutations of (phi, 1, 1/phi, 0)/2
        QuadraticNumber c[4] = {half * phi, half, half * psi, QuadraticNumber(0)};
        int perms[12][4] = {{0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}, {0, 2, 3, 1},
                            {2, 3, 0, 1}, {3, 0, 2, 1}, {0, 3, 1, 2}, {3, 1, 0, 2},
                            {1, 0, 3, 2}, {1, 3, 2, 0}, {3, 2, 1, 0}, {2, 1, 3, 0}};
        for (auto& p : perms) {
            Vec v(4);
            for (int i = 0; i < 4; ++i) v[(std::size_t)p[i]] = c[i];
            push_signed(out, v);
        }
    }
    // dedupe (sign patterns over the half-integer vectors can repeat zeros)
    std::sort(out.begin(), out.end(), vec_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vec> closure_of(std::vector<Vec> roots) {
    std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> seen;
    auto key = [](const Vec& v) {
        std::vector<std::pair<std::int64_t, std::int64_t>> k;
        for (const auto& c : v) {
            k.emplace_back(c.rational_part().num(), c.rational_part().den());
            k.emplace_back(c.surd_part().num(), c.surd_part().den());
        }
        return k;
    };
    std::vector<Vec> out;
    for (auto& r : roots)
        if (seen.insert(key(r)).second) out.push_back(r);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) {
            Vec v = reflect(out[i], out[j]);
            if (seen.insert(key(v)).second) out.push_back(std::move(v));
        }
    return out;
}

}  // namespace

int RootSystem::root_index(const Vec& v) const {
    auto it = index_.find(hash_vec(v));
    if (it == index_.end()) return -1;
    for (int i : it->second)
        if (roots[(std::size_t)i] == v) return i;
    return -1;
}

std::string RootSystem::type_name() const {
    return std::string(1, (char)family) + std::to_string(rank);
}

std::vector<int> RootSystem::reflection_closure(const std::vector<int>& root_indices) const {
    std::vector<bool> in(roots.size(), false);
    std::vector<int> work;
    for (int i : root_indices) {
        if (!in[(std::size_t)i]) { in[(std::size_t)i] = true; work.push_back(i); }
        int n = negative_of(i);
        if (!in[(std::size_t)n]) { in[(std::size_t)n] = true; work.push_back(n); }
    }
    for (std::size_t a = 0; a < work.size(); ++a)
        for (std::size_t b = 0; b < work.size(); ++b) {
            int r = work[b] < num_positive ? work[b] : negative_of(work[b]);
            int img = reflect_root(r, work[a]);
            if (!in[(std::size_t)img]) { in[(std::size_t)img] = true; work.push_back(img); }
        }
    std::sort(work.begin(), work.end());
    return work;
}

std::vector<std::string> RootSystem::classify_closed_subsystem(const std::vector<int>& closed) const {
    std::vector<int> pos;
    for (int i : closed)
        if (i < num_positive) pos.push_back(i);
    // components via non-orthogonality
    std::vector<int> comp(pos.size(), -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = ncomp;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < pos.size(); ++b) {
                if (comp[b] >= 0) continue;
                if (!dot(roots[(std::size_t)pos[a]], roots[(std::size_t)pos[b]]).is_zero()) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::pair<int, std::string>> labels;
    for (int c = 0; c < ncomp; ++c) {
        Mat span;
        int count = 0;
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (comp[i] == c) { span.push_back(roots[(std::size_t)pos[i]]); ++count; }
        int r = (int)qcox::rank(span);
        count *= 2;
        bool same_len = true;
        QuadraticNumber len2 = dot(span[0], span[0]);
        for (const auto& v : span)
            if (!(dot(v, v) == len2)) { same_len = false; break; }
        std::string name;
        if (same_len) {
            // D3 = A3; rank-3 systems with 12 roots are reported as A3
            if (count == r * (r + 1)) name = "A" + std::to_string(r);
            else if (count == 2 * r * (r - 1)) name = "D" + std::to_string(r);
            else if (r == 6 && count == 72) name = "E6";
            else if (r == 7 && count == 126) name = "E7";
            else if (r == 8 && count == 240) name = "E8";
            else if (r == 3 && count == 30) name = "H3";
            else if (r == 4 && count == 120) name = "H4";
            else if (r == 2 && count == 10) name = "I5";
            else name = "X" + std::to_string(r) + "." + std::to_string(count / 2);
        } else {
            if (count == 2 * r * r) name = "B" + std::to_string(r);
            else if (r == 4 && count == 48) name = "F4";
            else if (r == 2 && count == 12) name = "G2";
            else name = "X" + std::to_string(r) + "." + std::to_string(count / 2);
        }
        labels.emplace_back(r, name);
    }
    std::sort(labels.begin(), labels.end());
    std::vector<std::string> out;
    for (auto& [r, n] : labels) out.push_back(n);
    return out;
}

std::vector<std::string> classify_subsystem(const RootSystem& rs, const std::vector<Vec>& roots) {
    std::vector<int> idx;
    for (const auto& v : roots) {
        int i = rs.root_index(v);
        if (i < 0) throw std::invalid_argument("classify_subsystem: vector is not a root");
        idx.push_back(i);
    }
    return rs.classify_closed_subsystem(rs.reflection_closure(idx));
}

std::shared_ptr<const RootSystem> build_root_system(Family family, int rank) {
    auto rs = std::make_shared<RootSystem>();
    rs->family = family;
    rs->rank = rank;
    std::vector<Vec> all;
    std::vector<Vec> simple_vecs;
    QuadraticNumber one(1), half(Rational(1, 2));

    auto unit = [](int dim, int i) {
        Vec v((std::size_t)dim);
        v[(std::size_t)i] = QuadraticNumber(1);
        return v;
    };

    switch (family) {
        case Family::A: {
            if (rank < 1) throw UnsupportedType('A', rank);
            int d = rank + 1;
            rs->ambient = d;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (i != j) all.push_back(sub(unit(d, i), unit(d, j)));
            for (int i = 0; i + 1 < d; ++i) simple_vecs.push_back(sub(unit(d, i), unit(d, i + 1)));
            break;
        }
        case Family::B: {
            if (rank < 2) throw UnsupportedType('B', rank);
            int d = rank;
            rs->ambient = d;
            for (int i = 0; i < d; ++i) {
                all.push_back(unit(d, i));
                all.push_back(negate(unit(d, i)));
            }
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    push_signed(all, add(unit(d, i), unit(d, j)));
                }
            for (int i = 0; i + 1 < d; ++i) simple_vecs.push_back(sub(unit(d, i), unit(d, i + 1)));
            simple_vecs.push_back(unit(d, d - 1));
            break;
        }
        case Family::D: {
            if (rank < 3) throw UnsupportedType('D', rank);
            int d = rank;
            rs->ambient = d;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) push_signed(all, add(unit(d, i), unit(d, j)));
            for (int i = 0; i + 1 < d; ++i) simple_vecs.push_back(sub(unit(d, i), unit(d, i + 1)));
            simple_vecs.push_back(add(unit(d, d - 2), unit(d, d - 1)));
            break;
        }
        case Family::E: {
            if (rank < 6 || rank > 8) throw UnsupportedType('E', rank);
            rs->ambient = 8;
            // Bourbaki simple roots of E8
            Vec a1(8);
            a1[0] = half;
            a1[7] = half;
            for (int i = 1; i <= 6; ++i) a1[(std::size_t)i] = -half;
            std::vector<Vec> e8_simple{a1, add(unit(8, 0), unit(8, 1))};
            for (int i = 0; i + 1 < 7; ++i) e8_simple.push_back(sub(unit(8, i + 1), unit(8, i)));
            // e8_simple = (a1, a2, a3=e2-e1, a4=e3-e2, ..., a8=e7-e6)
            for (int i = 0; i < rank; ++i) simple_vecs.push_back(e8_simple[(std::size_t)i]);
            all = closure_of(simple_vecs);
            break;
        }
        case Family::F: {
            if (rank != 4) throw UnsupportedType('F', rank);
            rs->ambient = 4;
            for (int i = 0; i < 4; ++i) push_signed(all, unit(4, i));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) push_signed(all, add(unit(4, i), unit(4, j)));
            push_signed(all, Vec{half, half, half, half});
            simple_vecs.push_back(sub(unit(4, 1), unit(4, 2)));
            simple_vecs.push_back(sub(unit(4, 2), unit(4, 3)));
            simple_vecs.push_back(unit(4, 3));
            Vec a4{half, -half, -half, -half};
            simple_vecs.push_back(a4);
            break;
        }
        case Family::H: {
            if (rank != 3 && rank != 4) throw UnsupportedType('H', rank);
            rs->ambient = rank;
            all = h_type_roots(rank);
            break;
        }
    }

    // Positivity: a generic functional positive on the simple system (or a
    // plain generic one for H, where the simple system is then computed).
    Vec functional;
    if (family == Family::H) {
        for (std::int64_t k : {7, 11, 13, 17, 19, 23}) {
            Vec v((std::size_t)rs->ambient);
            QuadraticNumber p(1);
            for (int i = 0; i < rs->ambient; ++i) {
                v[(std::size_t)i] = p;
                p *= QuadraticNumber(k);
            }
            bool generic = true;
            for (const auto& r : all)
                if (dot(v, r).is_zero()) { generic = false; break; }
            if (generic) { functional = v; break; }
        }
        if (functional.empty()) throw std::runtime_error("no generic functional found");
    } else {
        // solve <a_i, x> = 1 for all simple roots
        Mat aug;
        for (const auto& a : simple_vecs) {
            Vec row = a;
            row.push_back(one);
            aug.push_back(row);
        }
        rref(aug);
        functional.assign((std::size_t)rs->ambient, QuadraticNumber(0));
        for (const auto& row : aug) {
            std::size_t c = 0;
            while (c < (std::size_t)rs->ambient && row[c].is_zero()) ++c;
            if (c < (std::size_t)rs->ambient) functional[c] = row.back();
        }
    }

    std::vector<Vec> positives;
    for (const auto& r : all)
        if (dot(functional, r).sign() > 0) positives.push_back(r);
    if (2 * positives.size() != all.size())
        throw std::runtime_error("root system construction: positivity split failed");
    std::sort(positives.begin(), positives.end(), vec_less);

    rs->num_positive = (int)positives.size();
    rs->roots = positives;
    for (const auto& r : positives) rs->roots.push_back(negate(r));

    for (std::size_t i = 0; i < rs->roots.size(); ++i)
        rs->index_[hash_vec(rs->roots[i])].push_back((int)i);

    if (family == Family::H) {
        // a positive root is simple iff its reflection permutes the other
        // positive roots (valid for non-crystallographic systems too)
        std::vector<Vec> simples;
        for (const auto& g : positives) {
            bool simple_root = true;
            for (const auto& a : positives) {
                if (a == g) continue;
                int idx = rs->root_index(reflect(a, g));
                if (idx < 0) throw std::runtime_error("root set is not closed under reflections");
                if (idx >= rs->num_positive) { simple_root = false; break; }
            }
            if (simple_root) simples.push_back(g);
        }
        if ((int)simples.size() != rank)
            throw std::runtime_error("H-type simple system has wrong size");
        // order along the path with the 5-bond first: s1 -5- s2 - s3 [- s4]
        QuadraticNumber cos5 = -(half * QuadraticNumber::golden());  // -cos(pi/5)
        auto bonded = [&](const Vec& x, const Vec& y) { return !dot(x, y).is_zero(); };
        int deg[4] = {0, 0, 0, 0};
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (i != j && bonded(simples[(std::size_t)i], simples[(std::size_t)j])) ++deg[i];
        // find the degree-1 endpoint incident to the 5-bond
        int start = -1, next = -1;
        for (int i = 0; i < rank && start < 0; ++i)
            for (int j = 0; j < rank; ++j)
                if (i != j && deg[i] == 1 && dot(simples[(std::size_t)i], simples[(std::size_t)j]) == cos5) {
                    start = i;
                    next = j;
                }
        if (start < 0) throw std::runtime_error("H-type simple system: no 5-bond endpoint");
        std::vector<int> order{start, next};
        while ((int)order.size() < rank) {
            int cur = order.back(), prev = order[order.size() - 2];
            for (int j = 0; j < rank; ++j)
                if (j != cur && j != prev && bonded(simples[(std::size_t)cur], simples[(std::size_t)j])) {
                    order.push_back(j);
                    break;
                }
        }
        simple_vecs.clear();
        for (int i : order) simple_vecs.push_back(simples[(std::size_t)i]);
    }

    for (const auto& a : simple_vecs) {
        int i = rs->root_index(a);
        if (i < 0) {
            i = rs->root_index(negate(a));
            if (i < 0) throw std::runtime_error("simple root missing from root set");
            i = rs->negative_of(i);
        }
        rs->simple.push_back(i);
    }

    // closure sanity + reflection table
    rs->reflection_table_.resize((std::size_t)rs->num_positive);
    for (int r = 0; r < rs->num_positive; ++r) {
        auto& row = rs->reflection_table_[(std::size_t)r];
        row.resize(rs->roots.size());
        for (std::size_t i = 0; i < rs->roots.size(); ++i) {
            Vec v = reflect(rs->roots[i], rs->roots[(std::size_t)r]);
            int idx = rs->root_index(v);
            if (idx < 0) throw std::runtime_error("root set is not closed under reflections");
            row[i] = idx;
        }
    }
    return rs;
}

}  // namespace qcox
