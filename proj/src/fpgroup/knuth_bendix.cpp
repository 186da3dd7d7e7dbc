#include <algorithm>
#include <array>
#include <queue>
#include <set>

#include "qcox/fpgroup.hpp"

namespace qcox {

namespace {

using Str = std::vector<int>;

int encode_letter(const Letter& l) { return 2 * l.gen + (l.exp < 0 ? 1 : 0); }

Str encode_word(const Word& w) {
    Str s;
    for (const Letter& l : w.letters) s.push_back(encode_letter(l));
    return s;
}

Str invert(const Str& s) {
    Str r;
    for (auto it = s.rbegin(); it != s.rend(); ++it) r.push_back(*it ^ 1);
    return r;
}

// shortlex: length first, then encoded letters
bool shortlex_less(const Str& a, const Str& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

std::vector<int> RewriteSystem::reduce_encoded(Str w) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t pos = 0; pos < w.size() && !changed; ++pos)
            for (const auto& [lhs, rhs] : rules) {
                if (lhs.empty() || pos + lhs.size() > w.size()) continue;
                if (!std::equal(lhs.begin(), lhs.end(), w.begin() + (long)pos)) continue;
                Str nw(w.begin(), w.begin() + (long)pos);
                nw.insert(nw.end(), rhs.begin(), rhs.end());
                nw.insert(nw.end(), w.begin() + (long)(pos + lhs.size()), w.end());
                w = std::move(nw);
                changed = true;
                break;
            }
    }
    return w;
}

Word RewriteSystem::reduce(const Word& w) const {
    Str r = reduce_encoded(encode_word(w));
    Word out;
    for (int e : r) out.push(e / 2, (e & 1) ? -1 : 1);
    return out;
}

namespace {

struct Completion {
    KBLimits limits;
    std::vector<std::pair<Str, Str>> rules;
    std::vector<bool> dead;
    std::vector<std::pair<Str, Str>> pending;  // unoriented equations
    std::size_t iters = 0;
    bool ok = true;

    bool budget_tick() {
        if (++iters > limits.max_iterations) ok = false;
        return ok;
    }

    Str normalize(Str w) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t pos = 0; pos < w.size() && !changed; ++pos)
                for (std::size_t r = 0; r < rules.size(); ++r) {
                    if (dead[r]) continue;
                    const Str& lhs = rules[r].first;
                    if (lhs.empty() || pos + lhs.size() > w.size()) continue;
                    if (!std::equal(lhs.begin(), lhs.end(), w.begin() + (long)pos)) continue;
                    Str nw(w.begin(), w.begin() + (long)pos);
                    nw.insert(nw.end(), rules[r].second.begin(), rules[r].second.end());
                    nw.insert(nw.end(), w.begin() + (long)(pos + lhs.size()), w.end());
                    w = std::move(nw);
                    changed = true;
                    break;
                }
        }
        return w;
    }

    bool contains(const Str& hay, const Str& needle) const {
        if (needle.size() > hay.size()) return false;
        return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
    }

    // drain the equation queue, interreducing older rules against new ones
    void settle() {
        while (ok && !pending.empty()) {
            auto [a, b] = std::move(pending.back());
            pending.pop_back();
            a = normalize(std::move(a));
            b = normalize(std::move(b));
            if (a == b) continue;
            if (shortlex_less(a, b)) std::swap(a, b);
            if (a.size() > limits.max_length) {
                ok = false;
                return;
            }
            std::size_t idx = rules.size();
            rules.emplace_back(std::move(a), std::move(b));
            dead.push_back(false);
            if (rules.size() > limits.max_rules) {
                ok = false;
                return;
            }
            for (std::size_t r = 0; r < idx; ++r) {
                if (dead[r]) continue;
                if (contains(rules[r].first, rules[idx].first)) {
                    dead[r] = true;  // now derivable; requeue what it said
                    pending.push_back(rules[r]);
                } else {
                    rules[r].second = normalize(std::move(rules[r].second));
                }
            }
        }
    }

    // critical pairs from overlaps of rules i and j
    void overlap(std::size_t i, std::size_t j) {
        const Str li = rules[i].first;
        const Str lj = rules[j].first;
        // suffix of li = prefix of lj, overlap shorter than both
        for (std::size_t k = 1; k < li.size() && ok; ++k) {
            if (!budget_tick()) return;
            if (k > lj.size()) break;
            if (!std::equal(li.end() - (long)k, li.end(), lj.begin())) continue;
            if (k == lj.size() && i != j) continue;  // containment, handled below
            // li = x u, lj = u y  ->  rhs_i y  vs  x rhs_j
            Str left = rules[i].second;
            left.insert(left.end(), lj.begin() + (long)k, lj.end());
            Str right(li.begin(), li.end() - (long)k);
            right.insert(right.end(), rules[j].second.begin(), rules[j].second.end());
            pending.emplace_back(std::move(left), std::move(right));
            settle();
            if (dead[i] || dead[j]) return;
        }
        // lj properly inside li
        if (i != j && lj.size() < li.size() && !lj.empty())
            for (std::size_t pos = 0; pos + lj.size() <= li.size() && ok; ++pos) {
                if (!budget_tick()) return;
                if (!std::equal(lj.begin(), lj.end(), li.begin() + (long)pos)) continue;
                Str left = rules[i].second;
                Str right(li.begin(), li.begin() + (long)pos);
                right.insert(right.end(), rules[j].second.begin(), rules[j].second.end());
                right.insert(right.end(), li.begin() + (long)(pos + lj.size()), li.end());
                pending.emplace_back(std::move(left), std::move(right));
                settle();
                if (dead[i] || dead[j]) return;
            }
    }
};

}  // namespace

RewriteSystem knuth_bendix_bounded(const Presentation& p, const KBLimits& limits) {
    Completion c;
    c.limits = limits;

    // free-group cancellation plus the oriented relators
    for (int g = 0; g < p.num_generators(); ++g) {
        c.rules.push_back({{2 * g, 2 * g + 1}, {}});
        c.rules.push_back({{2 * g + 1, 2 * g}, {}});
        c.dead.push_back(false);
        c.dead.push_back(false);
    }
    for (const Word& r : p.relators) {
        Str s = encode_word(r.cyclically_reduced());
        std::size_t half = (s.size() + 1) / 2;
        c.pending.emplace_back(Str(s.begin(), s.begin() + (long)half),
                               invert(Str(s.begin() + (long)half, s.end())));
    }
    c.settle();

    // process every unordered pair of live rules, including pairs with
    // rules created along the way
    for (std::size_t i = 0; i < c.rules.size() && c.ok; ++i) {
        if (c.dead[i]) continue;
        for (std::size_t j = 0; j <= i && c.ok; ++j) {
            if (c.dead[j] || c.dead[i]) continue;
            c.overlap(i, j);
            if (i != j && c.ok && !c.dead[i] && !c.dead[j]) c.overlap(j, i);
        }
    }

    RewriteSystem sys;
    for (std::size_t r = 0; r < c.rules.size(); ++r)
        if (!c.dead[r]) sys.rules.push_back(std::move(c.rules[r]));
    sys.verdict = c.ok ? RewriteSystem::Verdict::confluent : RewriteSystem::Verdict::budget_exhausted;
    return sys;
}

Presentation interreduce_relators(const Presentation& p, const KBLimits& limits) {
    std::vector<Word> rels;
    for (const Word& r : p.relators) {
        Word c = r.cyclically_reduced();
        if (!c.empty()) rels.push_back(std::move(c));
    }
    std::sort(rels.begin(), rels.end(), [](const Word& a, const Word& b) {
        return a.letters.size() < b.letters.size();
    });

    Presentation out;
    out.generator_names = p.generator_names;
    RewriteSystem rw;
    for (const Word& r : rels) {
        Word rr = out.relators.empty() ? r : rw.reduce(r).cyclically_reduced();
        if (rr.empty()) continue;
        std::size_t before = out.relators.size();
        out.add_relator(std::move(rr));
        if (out.relators.size() > before) rw = knuth_bendix_bounded(out, limits);
    }
    return out;
}

namespace {

Str freely_reduce(Str v) {
    Str out;
    for (int e : v) {
        if (!out.empty() && (out.back() ^ 1) == e)
            out.pop_back();
        else
            out.push_back(e);
    }
    return out;
}

// replacement moves of a rule set, applied in both directions, indexed by
// the leading letter of the matched side; growing moves (empty match side,
// e.g. the reverse of a cancellation) kept apart
struct MoveIndex {
    std::vector<std::vector<std::pair<const Str*, const Str*>>> by_first;
    std::vector<const Str*> insertions;

    explicit MoveIndex(const RewriteSystem& rw) {
        auto file_move = [&](const Str& from, const Str& to) {
            if (from.empty()) {
                insertions.push_back(&to);
                return;
            }
            if ((std::size_t)from[0] >= by_first.size())
                by_first.resize((std::size_t)from[0] + 1);
            by_first[(std::size_t)from[0]].emplace_back(&from, &to);
        };
        for (const auto& [lhs, rhs] : rw.rules) {
            file_move(lhs, rhs);
            file_move(rhs, lhs);
        }
    }

    // all words one move away from cur, within the length cap
    template <class Fn>
    void neighbors(const Str& cur, std::size_t cap, Fn&& emit) const {
        for (std::size_t p = 0; p < cur.size(); ++p) {
            if ((std::size_t)cur[p] >= by_first.size()) continue;
            for (const auto& [from, to] : by_first[(std::size_t)cur[p]]) {
                if (p + from->size() > cur.size()) continue;
                if (cur.size() - from->size() + to->size() > cap) continue;
                if (!std::equal(from->begin(), from->end(), cur.begin() + (long)p)) continue;
                Str next(cur.begin(), cur.begin() + (long)p);
                next.insert(next.end(), to->begin(), to->end());
                next.insert(next.end(), cur.begin() + (long)(p + from->size()), cur.end());
                emit(std::move(next));
            }
        }
        // growing moves, essential since most rules preserve length
        for (const Str* to : insertions) {
            if (cur.size() + to->size() > cap) continue;
            for (std::size_t p = 0; p <= cur.size(); ++p) {
                Str next(cur.begin(), cur.begin() + (long)p);
                next.insert(next.end(), to->begin(), to->end());
                next.insert(next.end(), cur.begin() + (long)p, cur.end());
                emit(std::move(next));
            }
        }
    }
};

using Frontier =
    std::priority_queue<Str, std::vector<Str>, bool (*)(const Str&, const Str&)>;

bool frontier_longer(const Str& a, const Str& b) { return a.size() > b.size(); }

// one-sided search: rewrite w (and its conjugates) down to the empty word
bool search_to_empty(const MoveIndex& moves, const Str& start, std::size_t cap,
                     std::size_t node_budget) {
    Frontier frontier(&frontier_longer);
    std::set<Str> seen;
    bool found = false;
    auto visit = [&](Str v) {
        v = freely_reduce(std::move(v));
        if (v.empty()) {
            found = true;
            return;
        }
        if (v.size() > cap) return;
        if (seen.insert(v).second) frontier.push(std::move(v));
    };
    visit(start);
    std::size_t nodes = 0;
    // the node budget bounds expansions; the seen cap bounds memory
    while (!frontier.empty() && !found && nodes < node_budget && seen.size() < 4'000'000) {
        Str cur = frontier.top();
        frontier.pop();
        ++nodes;
        // conjugates are trivial together with the word itself
        for (std::size_t k = 1; k < cur.size() && !found; ++k) {
            Str rot(cur.begin() + (long)k, cur.end());
            rot.insert(rot.end(), cur.begin(), cur.begin() + (long)k);
            visit(std::move(rot));
        }
        if (!found) moves.neighbors(cur, cap, [&](Str next) { visit(std::move(next)); });
    }
    return found;
}

// two-sided search: do u and v rewrite to a common word? Explores words of
// roughly half the relator length, so it reaches much deeper proofs than
// the one-sided search for the same budget.
bool search_meet(const MoveIndex& moves, const Str& u, const Str& v, std::size_t cap,
                 std::size_t node_budget) {
    if (u == v) return true;
    std::array<std::set<Str>, 2> seen;
    std::array<Frontier, 2> frontier{Frontier(&frontier_longer), Frontier(&frontier_longer)};
    bool found = false;
    auto visit = [&](int side, Str x) {
        x = freely_reduce(std::move(x));
        if (x.size() > cap) return;
        if (seen[(std::size_t)(side ^ 1)].count(x)) {
            found = true;
            return;
        }
        if (seen[(std::size_t)side].insert(x).second) frontier[(std::size_t)side].push(std::move(x));
    };
    visit(0, u);
    if (!found) visit(1, v);
    std::size_t nodes = 0;
    while (!found && nodes < node_budget && !frontier[0].empty() && !frontier[1].empty() &&
           seen[0].size() + seen[1].size() < 4'000'000) {
        // expand the smaller side
        int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        Str cur = frontier[(std::size_t)side].top();
        frontier[(std::size_t)side].pop();
        ++nodes;
        moves.neighbors(cur, cap, [&](Str next) {
            if (!found) visit(side, std::move(next));
        });
    }
    return found;
}

}  // namespace

bool proves_trivial(const RewriteSystem& rw, const Word& w, std::size_t node_budget,
                    std::size_t length_slack) {
    Str start = rw.reduce_encoded(encode_word(w));
    if (start.empty()) return true;
    MoveIndex moves(rw);

    if (search_to_empty(moves, start, start.size() + length_slack, node_budget)) return true;

    // meet-in-the-middle pass over a few rotation splits: the relator is
    // trivial iff its first half equals the inverse of its second half
    std::size_t n = start.size();
    std::size_t half = n / 2;
    std::size_t splits = std::min<std::size_t>(n, 4);
    for (std::size_t s = 0; s < splits; ++s) {
        std::size_t off = s * n / splits;
        Str rot(start.begin() + (long)off, start.end());
        rot.insert(rot.end(), start.begin(), start.begin() + (long)off);
        Str u(rot.begin(), rot.begin() + (long)half);
        Str vinv(rot.begin() + (long)half, rot.end());
        Str v;
        for (auto it = vinv.rbegin(); it != vinv.rend(); ++it) v.push_back(*it ^ 1);
        if (search_meet(moves, freely_reduce(u), freely_reduce(v),
                        half + length_slack, node_budget / splits))
            return true;
    }
    return false;
}

bool proves_equal(const RewriteSystem& rw, const Word& lhs, const Word& rhs,
                  std::size_t node_budget, std::size_t length_slack) {
    Str u = rw.reduce_encoded(encode_word(lhs));
    Str v = rw.reduce_encoded(encode_word(rhs));
    if (u == v) return true;
    MoveIndex moves(rw);
    return search_meet(moves, u, v, std::max(u.size(), v.size()) + length_slack, node_budget);
}

}  // namespace qcox
