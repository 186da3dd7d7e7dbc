#include <algorithm>
#include <set>

#include "qcox/fpgroup.hpp"
#include "qcox/group.hpp"

namespace qcox {

namespace {

int encode(const Letter& l) { return 2 * l.gen + (l.exp < 0 ? 1 : 0); }
int inv_col(int e) { return e ^ 1; }

using Table = std::vector<std::vector<int>>;

// renumber the cosets of a complete table starting from `base`, visiting
// cells in row-major order; the result is the canonical form of the
// conjugate subgroup stabilizing `base`
Table renumber(const Table& t, int cols, int base) {
    int n = (int)t.size();
    std::vector<int> old_of = {base};
    std::vector<int> new_of((std::size_t)n, -1);
    new_of[(std::size_t)base] = 0;
    Table out;
    for (int c = 0; c < n; ++c) {
        out.emplace_back((std::size_t)cols, -1);
        for (int e = 0; e < cols; ++e) {
            int d = t[(std::size_t)old_of[(std::size_t)c]][(std::size_t)e];
            if (new_of[(std::size_t)d] < 0) {
                new_of[(std::size_t)d] = (int)old_of.size();
                old_of.push_back(d);
            }
            out[(std::size_t)c][(std::size_t)e] = new_of[(std::size_t)d];
        }
    }
    return out;
}

struct Search {
    int cols;
    int max_index;
    std::uint64_t budget;
    std::uint64_t spent = 0;
    std::vector<std::vector<int>> relators;  // encoded
    std::vector<Table> found;
    std::set<Table> canonical_seen;

    // scan every relator at every coset; force single-gap deductions; false
    // on contradiction
    bool propagate(Table& t) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& r : relators)
                for (int c = 0; c < (int)t.size(); ++c) {
                    int f = c;
                    std::size_t i = 0;
                    while (i < r.size()) {
                        int nxt = t[(std::size_t)f][(std::size_t)r[i]];
                        if (nxt < 0) break;
                        f = nxt;
                        ++i;
                    }
                    if (i == r.size()) {
                        if (f != c) return false;
                        continue;
                    }
                    int b = c;
                    std::size_t j = r.size();
                    while (j > i) {
                        int prv = t[(std::size_t)b][(std::size_t)inv_col(r[j - 1])];
                        if (prv < 0) break;
                        b = prv;
                        --j;
                    }
                    if (j == i) return false;  // met with a mismatch
                    if (j == i + 1) {
                        int e = r[i];
                        if (t[(std::size_t)f][(std::size_t)e] >= 0 &&
                            t[(std::size_t)f][(std::size_t)e] != b)
                            return false;
                        t[(std::size_t)f][(std::size_t)e] = b;
                        t[(std::size_t)b][(std::size_t)inv_col(e)] = f;
                        progress = true;
                    }
                }
        }
        return true;
    }

    void recurse(Table t) {
        if (++spent > budget) throw BudgetExceeded("low_index_subgroups: budget exceeded");
        if (!propagate(t)) return;
        // first undefined cell, row-major
        int dc = -1, de = -1;
        for (int c = 0; c < (int)t.size() && dc < 0; ++c)
            for (int e = 0; e < cols; ++e)
                if (t[(std::size_t)c][(std::size_t)e] < 0) {
                    dc = c;
                    de = e;
                    break;
                }
        if (dc < 0) {
            // complete: keep one representative per conjugacy class
            Table best = renumber(t, cols, 0);
            for (int b = 1; b < (int)t.size(); ++b) best = std::min(best, renumber(t, cols, b));
            if (canonical_seen.insert(std::move(best)).second) found.push_back(std::move(t));
            return;
        }
        int limit = (int)t.size();
        for (int target = 0; target <= limit; ++target) {
            Table child = t;
            if (target == limit) {
                if (limit >= max_index) break;
                child.emplace_back((std::size_t)cols, -1);
            } else if (t[(std::size_t)target][(std::size_t)inv_col(de)] >= 0) {
                continue;  // target already has that incoming edge
            }
            child[(std::size_t)dc][(std::size_t)de] = target;
            child[(std::size_t)target][(std::size_t)inv_col(de)] = dc;
            recurse(std::move(child));
        }
    }
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& p, int max_index,
                                            std::uint64_t budget) {
    Search s;
    s.cols = 2 * p.num_generators();
    s.max_index = max_index;
    s.budget = budget;
    for (const Word& r : p.relators) {
        Word cr = r.cyclically_reduced();
        std::vector<int> enc;
        for (const Letter& l : cr.letters) enc.push_back(encode(l));
        if (!enc.empty()) s.relators.push_back(std::move(enc));
    }
    Table start;
    start.emplace_back((std::size_t)s.cols, -1);
    s.recurse(std::move(start));

    std::vector<CosetTable> out;
    for (Table& t : s.found) {
        CosetTable ct;
        ct.num_gens = p.num_generators();
        ct.status = CosetTable::Status::complete;
        ct.coset_count = (int)t.size();
        ct.table = std::move(t);
        out.push_back(std::move(ct));
    }
    std::sort(out.begin(), out.end(), [](const CosetTable& a, const CosetTable& b) {
        if (a.coset_count != b.coset_count) return a.coset_count < b.coset_count;
        return a.table < b.table;
    });
    return out;
}

std::map<int, int> subgroup_counts_by_index(const std::vector<CosetTable>& tables) {
    std::map<int, int> out;
    for (const CosetTable& t : tables) ++out[t.coset_count];
    return out;
}

}  // namespace qcox
