#include "qcox/interval.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

namespace qcox {

namespace {

// fixed-size-free bitset over element indices
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= 1ull << (i % 64); }
    bool get(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    friend Bits operator&(const Bits& a, const Bits& b) {
        Bits r;
        r.w.resize(a.w.size());
        for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
        return r;
    }
    void operator|=(const Bits& b) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= b.w[i];
    }
    bool operator==(const Bits& b) const { return w == b.w; }
    bool subset_of(const Bits& b) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~b.w[i]) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += (std::size_t)__builtin_popcountll(x);
        return c;
    }
};

// lower_sets[i] = { j : elements[j] <= elements[i] }, including i itself
std::vector<Bits> lower_sets(const IntervalPoset& p) {
    std::size_t n = p.elements.size();
    std::vector<Bits> low(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) low[i].set(i);
    // covers go from lower rank to higher; elements are sorted by rank
    for (auto [a, b] : p.covers) low[(std::size_t)b] |= low[(std::size_t)a];
    return low;
}

std::vector<Bits> upper_sets(const IntervalPoset& p) {
    std::size_t n = p.elements.size();
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (std::size_t k = p.covers.size(); k-- > 0;) {
        auto [a, b] = p.covers[k];
        up[(std::size_t)a] |= up[(std::size_t)b];
    }
    return up;
}

}  // namespace

std::size_t IntervalPoset::index_of(const Elt& x) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == x) return i;
    throw std::out_of_range("IntervalPoset::index_of: element not in interval");
}

IntervalPoset build_interval(const CoxGroup& g, const Elt& w, std::size_t budget) {
    IntervalPoset p;
    p.w = w;
    p.group = &g;
    int lw = g.reflection_length(w);
    p.elements.push_back(g.identity());
    p.rank_of.push_back(0);
    std::unordered_map<Elt, int, EltHash> index;
    index.emplace(p.elements[0], 0);
    std::size_t stratum_begin = 0;
    for (int k = 0; k < lw; ++k) {
        std::size_t stratum_end = p.elements.size();
        for (std::size_t xi = stratum_begin; xi < stratum_end; ++xi)
            for (int t = 0; t < g.num_reflections(); ++t) {
                Elt y = g.mul(p.elements[xi], g.reflection(t));
                if (g.reflection_length(y) != k + 1) continue;
                if (g.reflection_length(g.mul(g.inv(y), w)) != lw - k - 1) continue;
                auto [it, fresh] = index.emplace(y, (int)p.elements.size());
                if (fresh) {
                    p.elements.push_back(std::move(y));
                    p.rank_of.push_back(k + 1);
                    if (p.elements.size() > budget)
                        throw BudgetExceeded("build_interval: budget exceeded");
                }
                p.covers.emplace_back((int)xi, it->second);
            }
        stratum_begin = stratum_end;
    }
    std::sort(p.covers.begin(), p.covers.end());
    p.covers.erase(std::unique(p.covers.begin(), p.covers.end()), p.covers.end());
    return p;
}

LatticeReport is_lattice(const IntervalPoset& p) {
    std::size_t n = p.elements.size();
    auto low = lower_sets(p);
    auto up = upper_sets(p);
    LatticeReport rep;

    auto has_bound = [&](const std::vector<Bits>& sets, std::size_t i, std::size_t j) {
        Bits common = sets[i] & sets[j];
        // a meet (join) is an element whose lower (upper) set is exactly the
        // common lower (upper) set
        for (std::size_t m = 0; m < n; ++m)
            if (common.get(m) && sets[m] == common) return true;
        return false;
    };

    for (std::size_t i = 0; i < n && rep.is_lattice; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!has_bound(low, i, j)) {
                rep.is_lattice = false;
                rep.failing_pair = {(int)i, (int)j};
                rep.failing_kind = "meet";
                break;
            }
            if (!has_bound(up, i, j)) {
                rep.is_lattice = false;
                rep.failing_pair = {(int)i, (int)j};
                rep.failing_kind = "join";
                break;
            }
        }
    if (rep.is_lattice) return rep;

    // bowtie: x1,x2 <= y1,y2 with nothing in between. If x1,x2 have two
    // minimal common upper bounds y1,y2, any mediating z would contradict
    // their minimality, so the quadruple is automatically a bowtie.
    for (std::size_t x1 = 0; x1 < n && !rep.bowtie_witness; ++x1)
        for (std::size_t x2 = x1 + 1; x2 < n && !rep.bowtie_witness; ++x2) {
            Bits common = up[x1] & up[x2];
            std::vector<int> minimal;
            for (std::size_t m = 0; m < n; ++m) {
                if (!common.get(m)) continue;
                bool is_min = true;
                for (std::size_t z = 0; z < n && is_min; ++z)
                    if (z != m && common.get(z) && low[m].get(z)) is_min = false;
                if (is_min) {
                    minimal.push_back((int)m);
                    if (minimal.size() == 2) break;
                }
            }
            if (minimal.size() >= 2)
                rep.bowtie_witness = std::array<int, 4>{(int)x1, (int)x2, minimal[0], minimal[1]};
        }
    return rep;
}

bool is_balanced(const CoxGroup& g, const Elt& w, std::size_t budget) {
    // right divisors: y with l(y) + l(w y^-1) = l(w); BFS like the interval
    int lw = g.reflection_length(w);
    std::unordered_map<Elt, int, EltHash> right;
    std::vector<Elt> queue{g.identity()};
    right.emplace(queue[0], 0);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const Elt x = queue[qi];
        int k = g.reflection_length(x);
        if (k == lw) continue;
        for (int t = 0; t < g.num_reflections(); ++t) {
            Elt y = g.mul(g.reflection(t), x);
            if (g.reflection_length(y) != k + 1) continue;
            if (g.reflection_length(g.mul(w, g.inv(y))) != lw - k - 1) continue;
            if (right.emplace(y, (int)queue.size()).second) {
                queue.push_back(std::move(y));
                if (queue.size() > budget) throw BudgetExceeded("is_balanced: budget exceeded");
            }
        }
    }
    IntervalPoset p = build_interval(g, w, budget);
    if (p.elements.size() != queue.size()) return false;
    for (const auto& x : p.elements)
        if (!right.count(x)) return false;
    return true;
}

StructureMapReport verify_structure_maps(const IntervalPoset& p) {
    const CoxGroup& g = *p.group;
    std::size_t n = p.elements.size();
    auto low = lower_sets(p);

    // P_x as the set of reflections orthogonal to Fix(x); Fix(x) as its
    // canonical echelon basis
    std::vector<Bits> pset(n, Bits((std::size_t)g.num_reflections()));
    std::vector<Mat> fix(n);
    for (std::size_t i = 0; i < n; ++i) {
        fix[i] = g.fix_and_mov(p.elements[i]).first;
        for (int r = 0; r < g.num_reflections(); ++r) {
            bool orth = true;
            for (const auto& f : fix[i])
                if (!dot(g.roots().root(r), f).is_zero()) { orth = false; break; }
            if (orth) pset[i].set((std::size_t)r);
        }
    }
    auto fix_subset = [&](std::size_t i, std::size_t j) {
        // Fix(i) within Fix(j)?
        Mat m = fix[j];
        std::size_t base = rref(m);
        for (const auto& v : fix[i]) m.push_back(v);
        return rref(m) == base;
    };

    StructureMapReport rep;
    rep.p_map_is_isomorphism = true;
    rep.f_map_is_anti_isomorphism = true;
    rep.p_f_anti_isomorphic = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool le = low[j].get(i);  // i <= j in the interval
            bool p_le = pset[i].subset_of(pset[j]) && !(pset[i] == pset[j]);
            bool f_ge = fix_subset(j, i) && !(fix[i] == fix[j]);
            if (i < j && (pset[i] == pset[j] || fix[i] == fix[j])) {
                // injectivity failure
                rep.p_map_is_isomorphism = rep.p_map_is_isomorphism && !(pset[i] == pset[j]);
                rep.f_map_is_anti_isomorphism =
                    rep.f_map_is_anti_isomorphism && !(fix[i] == fix[j]);
            }
            if (le != (p_le || pset[i] == pset[j])) rep.p_map_is_isomorphism = false;
            if (le != (f_ge || fix[i] == fix[j])) rep.f_map_is_anti_isomorphism = false;
            if ((p_le || pset[i] == pset[j]) != (f_ge || fix[i] == fix[j]))
                rep.p_f_anti_isomorphic = false;
        }
    return rep;
}

std::optional<std::pair<int, int>> missing_intersection_in_F(const IntervalPoset& p) {
    const CoxGroup& g = *p.group;
    std::size_t n = p.elements.size();
    std::vector<Mat> fix(n), perp(n);
    for (std::size_t i = 0; i < n; ++i) {
        fix[i] = row_space_basis(g.fix_and_mov(p.elements[i]).first);
        perp[i] = kernel_basis(fix[i].empty() ? Mat{Vec((std::size_t)g.roots().ambient)}
                                              : fix[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // Fix(i) ∩ Fix(j) = (Fix(i)^perp + Fix(j)^perp)^perp
            Mat stacked = perp[i];
            for (const auto& v : perp[j]) stacked.push_back(v);
            Mat inter = row_space_basis(kernel_basis(stacked));
            bool present = false;
            for (std::size_t k = 0; k < n && !present; ++k)
                if (fix[k] == inter) present = true;
            if (!present) return std::make_pair((int)i, (int)j);
        }
    return std::nullopt;
}

std::string interval_to_dot(const IntervalPoset& p) {
    std::ostringstream os;
    os << "digraph interval {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        os << "  n" << i << " [label=\"" << i << " (r" << p.rank_of[i] << ")\"];\n";
    for (auto [a, b] : p.covers) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string interval_to_json(const IntervalPoset& p) {
    nlohmann::json j;
    const CoxGroup& g = *p.group;
    // an element is recorded by the images of the simple roots under its
    // permutation of the root set (enough to reconstruct it)
    auto encode = [&](const Elt& x) {
        std::vector<int> img;
        for (int s : g.roots().simple) img.push_back((int)x.perm[(std::size_t)s]);
        return img;
    };
    j["w"] = encode(p.w);
    j["elements"] = nlohmann::json::array();
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        j["elements"].push_back({{"simple_images", encode(p.elements[i])},
                                 {"rank", p.rank_of[i]}});
    j["covers"] = nlohmann::json::array();
    for (auto [a, b] : p.covers) j["covers"].push_back({a, b});
    return j.dump(2);
}

}  // namespace qcox
