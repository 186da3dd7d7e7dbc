#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qcox/fpgroup.hpp"
#include "qcox/group.hpp"

namespace qcox {

int FiniteGroupTable::eval(const Word& w, const std::vector<int>& assignment) const {
    int x = 0;
    for (const Letter& l : w.letters) {
        int g = assignment[(std::size_t)l.gen];
        if (l.exp < 0) g = inv[(std::size_t)g];
        x = mul[(std::size_t)x][(std::size_t)g];
    }
    return x;
}

namespace {

FiniteGroupTable from_permutations(std::string name, std::vector<std::vector<int>> elems) {
    // close under composition, element 0 must be the identity
    std::size_t deg = elems[0].size();
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    elems.insert(elems.begin(), id);

    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(deg);
        for (std::size_t i = 0; i < deg; ++i) c[i] = a[(std::size_t)b[i]];
        return c;
    };
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size();) {
        if (index.emplace(elems[i], (int)i).second)
            ++i;
        else
            elems.erase(elems.begin() + (long)i);
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            auto c = compose(elems[i], elems[j]);
            if (index.emplace(c, (int)elems.size()).second) elems.push_back(std::move(c));
        }

    FiniteGroupTable t;
    t.name = std::move(name);
    t.order = (int)elems.size();
    t.mul.assign(elems.size(), std::vector<int>(elems.size()));
    t.inv.assign(elems.size(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            int k = index.at(compose(elems[i], elems[j]));
            t.mul[i][j] = k;
            if (k == 0) t.inv[i] = (int)j;
        }
    return t;
}

}  // namespace

FiniteGroupTable cyclic_group(int n) {
    FiniteGroupTable t;
    t.name = "C" + std::to_string(n);
    t.order = n;
    t.mul.assign((std::size_t)n, std::vector<int>((std::size_t)n));
    t.inv.assign((std::size_t)n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t.mul[(std::size_t)a][(std::size_t)b] = (a + b) % n;
        t.inv[(std::size_t)a] = (n - a) % n;
    }
    return t;
}

FiniteGroupTable dihedral_group(int n) {
    // rotations by 1 step and a reflection acting on n points
    std::vector<int> rot((std::size_t)n), refl((std::size_t)n);
    for (int i = 0; i < n; ++i) {
        rot[(std::size_t)i] = (i + 1) % n;
        refl[(std::size_t)i] = (n - i) % n;
    }
    return from_permutations("D" + std::to_string(2 * n), {rot, refl});
}

FiniteGroupTable symmetric_group(int n) {
    std::vector<int> id((std::size_t)n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> gens;
    for (int i = 0; i + 1 < n; ++i) {
        auto s = id;
        std::swap(s[(std::size_t)i], s[(std::size_t)i + 1]);
        gens.push_back(std::move(s));
    }
    if (gens.empty()) gens.push_back(id);
    return from_permutations("S" + std::to_string(n), std::move(gens));
}

FiniteGroupTable alternating_group(int n) {
    std::vector<int> id((std::size_t)n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> gens;
    for (int i = 0; i + 2 < n; ++i) {  // 3-cycles (i, i+1, i+2)
        auto s = id;
        s[(std::size_t)i] = i + 1;
        s[(std::size_t)i + 1] = i + 2;
        s[(std::size_t)i + 2] = i;
        gens.push_back(std::move(s));
    }
    if (gens.empty()) gens.push_back(id);
    return from_permutations("A" + std::to_string(n), std::move(gens));
}

FiniteGroupTable quaternion_group() {
    // regular action of Q8 on itself: elements 1,-1,i,-i,j,-j,k,-k
    // generators i and j as permutations of that list
    std::vector<int> gi = {2, 3, 1, 0, 7, 6, 4, 5};  // left mult by i
    std::vector<int> gj = {4, 5, 6, 7, 1, 0, 3, 2};  // left mult by j
    FiniteGroupTable t = from_permutations("Q8", {gi, gj});
    t.name = "Q8";
    return t;
}

FiniteGroupTable psl_2(int q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("psl_2: q must be an odd prime");
    // projective line 0..q-1 plus infinity at index q, generated by
    // x -> x+1 and x -> -1/x
    int inf = q;
    std::vector<int> a((std::size_t)q + 1), b((std::size_t)q + 1);
    std::vector<int> recip((std::size_t)q, 0);
    for (int x = 1; x < q; ++x)
        for (int y = 1; y < q; ++y)
            if (x * y % q == 1) recip[(std::size_t)x] = y;
    for (int x = 0; x < q; ++x) a[(std::size_t)x] = (x + 1) % q;
    a[(std::size_t)inf] = inf;
    b[0] = inf;
    b[(std::size_t)inf] = 0;
    for (int x = 1; x < q; ++x) b[(std::size_t)x] = (q - recip[(std::size_t)x]) % q;
    return from_permutations("PSL(2," + std::to_string(q) + ")", {a, b});
}

FiniteGroupTable product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
    FiniteGroupTable t;
    t.name = a.name + "x" + b.name;
    t.order = a.order * b.order;
    auto pack = [&](int x, int y) { return x * b.order + y; };
    t.mul.assign((std::size_t)t.order, std::vector<int>((std::size_t)t.order));
    t.inv.assign((std::size_t)t.order, 0);
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1) {
            int p = pack(x1, y1);
            t.inv[(std::size_t)p] = pack(a.inv[(std::size_t)x1], b.inv[(std::size_t)y1]);
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    t.mul[(std::size_t)p][(std::size_t)pack(x2, y2)] =
                        pack(a.mul[(std::size_t)x1][(std::size_t)x2],
                             b.mul[(std::size_t)y1][(std::size_t)y2]);
        }
    return t;
}

const std::vector<FiniteGroupTable>& default_target_battery() {
    static const std::vector<FiniteGroupTable> battery = [] {
        std::vector<FiniteGroupTable> v;
        v.push_back(cyclic_group(2));
        v.push_back(cyclic_group(3));
        v.push_back(cyclic_group(4));
        v.push_back(cyclic_group(5));
        v.push_back(cyclic_group(6));
        v.push_back(symmetric_group(3));
        v.push_back(dihedral_group(4));
        v.push_back(quaternion_group());
        v.push_back(dihedral_group(5));
        v.push_back(dihedral_group(6));
        v.push_back(alternating_group(4));
        v.push_back(symmetric_group(4));
        v.push_back(dihedral_group(10));
        v.push_back(alternating_group(5));
        v.push_back(symmetric_group(5));
        return v;
    }();
    return battery;
}

const std::vector<FiniteGroupTable>& extended_target_battery() {
    static const std::vector<FiniteGroupTable> battery = [] {
        std::vector<FiniteGroupTable> v;
        v.push_back(psl_2(7));
        v.push_back(alternating_group(6));
        v.push_back(symmetric_group(6));
        v.push_back(psl_2(11));
        v.push_back(psl_2(13));
        return v;
    }();
    return battery;
}

std::vector<std::uint64_t> hom_count_signature(const Presentation& p,
                                               const std::vector<FiniteGroupTable>& targets,
                                               std::uint64_t budget) {
    int n = p.num_generators();
    // check each relator as soon as its highest generator is assigned
    std::vector<std::vector<const Word*>> by_depth((std::size_t)n + 1);
    for (const Word& r : p.relators) {
        int m = r.max_generator();
        if (m < 0) continue;
        by_depth[(std::size_t)m + 1].push_back(&r);
    }

    std::vector<std::uint64_t> sig;
    std::uint64_t spent = 0;
    for (const FiniteGroupTable& t : targets) {
        std::uint64_t count = 0;
        std::vector<int> assign((std::size_t)n, 0);
        // depth d: generators 0..d-1 assigned
        int d = 0;
        std::vector<int> next((std::size_t)n, 0);
        for (;;) {
            if (d == n) {
                ++count;
                if (n == 0) break;
                --d;  // backtrack from the full assignment
                continue;
            }
            if (next[(std::size_t)d] == t.order) {
                next[(std::size_t)d] = 0;
                if (d == 0) break;
                --d;
                continue;
            }
            if (++spent > budget) throw BudgetExceeded("hom_count_signature: budget exceeded");
            assign[(std::size_t)d] = next[(std::size_t)d]++;
            bool ok = true;
            for (const Word* r : by_depth[(std::size_t)d + 1])
                if (t.eval(*r, assign) != 0) {
                    ok = false;
                    break;
                }
            if (ok) ++d;
        }
        sig.push_back(count);
    }
    return sig;
}

}  // namespace qcox
