#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qcox/dualpres.hpp"

namespace qcox {

namespace {

Word gen_word(int g, int exp = 1) {
    Word w;
    w.push(g, exp);
    return w;
}

Elt eval_in_group(const CoxGroup& g, const Word& w, const std::vector<Elt>& images) {
    Elt x = g.identity();
    for (const Letter& l : w.letters) {
        const Elt& im = images[(std::size_t)l.gen];
        x = g.mul(x, l.exp > 0 ? im : g.inv(im));
    }
    return x;
}

// dedup key: lexicographically least serialization over all rotations of the
// cyclically reduced word and of its inverse
std::string cyclic_canonical_key(const Word& w) {
    Word cr = w.cyclically_reduced();
    auto serialize = [](const std::vector<Letter>& ls, std::size_t start) {
        std::string s;
        for (std::size_t k = 0; k < ls.size(); ++k) {
            const Letter& l = ls[(start + k) % ls.size()];
            s += std::to_string(2 * l.gen + (l.exp < 0 ? 1 : 0));
            s += ',';
        }
        return s;
    };
    std::string best;
    for (const Word& v : {cr, cr.inverse()})
        for (std::size_t start = 0; start < std::max<std::size_t>(v.letters.size(), 1); ++start) {
            std::string s = serialize(v.letters, start);
            if (best.empty() || s < best) best = std::move(s);
        }
    return best;
}

// register an equation known to hold as an oriented rewrite rule
void add_proven_rule(RewriteSystem& rw, const Word& a, const Word& b) {
    auto enc = [](const Word& w) {
        std::vector<int> s;
        for (const Letter& l : w.letters) s.push_back(2 * l.gen + (l.exp < 0 ? 1 : 0));
        return s;
    };
    std::vector<int> lhs = enc(a), rhs = enc(b);
    if (lhs == rhs) return;
    if (lhs.size() < rhs.size() || (lhs.size() == rhs.size() && lhs < rhs)) std::swap(lhs, rhs);
    rw.rules.emplace_back(std::move(lhs), std::move(rhs));
}

// split a relator known to be trivial into an oriented length-reducing rule
void add_proven_rule(RewriteSystem& rw, const Word& w) {
    Word cr = w.cyclically_reduced();
    if (cr.letters.empty()) return;
    std::size_t half = (cr.letters.size() + 1) / 2;
    Word a, b;
    for (std::size_t i = 0; i < half; ++i) a.push(cr.letters[i].gen, cr.letters[i].exp);
    for (std::size_t i = cr.letters.size(); i > half; --i)
        b.push(cr.letters[i - 1].gen, -cr.letters[i - 1].exp);
    add_proven_rule(rw, a, b);
}

// braid relator of the given order between two generators
Word braid_relator(int s, int t, int order) {
    Word a, b;
    for (int i = 0; i < order; ++i) {
        a.push(i % 2 == 0 ? s : t, 1);
        b.push(i % 2 == 0 ? t : s, 1);
    }
    return a * b.inverse();
}

CarterDiagram h3a2_triangle() {
    CarterDiagram d;
    d.n = 3;
    d.order.assign(3, std::vector<int>(3, 2));
    for (int i = 0; i < 3; ++i) d.order[(std::size_t)i][(std::size_t)i] = 1;
    auto bond = [&](int i, int j, int o) {
        d.order[(std::size_t)i][(std::size_t)j] = o;
        d.order[(std::size_t)j][(std::size_t)i] = o;
    };
    bond(0, 1, 3);  // s1 - s2
    bond(0, 2, 3);  // s1 - s3
    bond(1, 2, 5);  // s2 - s3, the 5-bond
    return d;
}

}  // namespace

int DualPresentation::gen_of_root(int positive_root) const {
    auto it = std::find(reflections.begin(), reflections.end(), positive_root);
    return it == reflections.end() ? -1 : (int)(it - reflections.begin());
}

DualPresentation dual_presentation(const IntervalPoset& interval) {
    const CoxGroup& g = *interval.group;
    if (!g.is_quasi_coxeter(interval.w))
        throw std::invalid_argument(
            "dual_presentation: top element is not quasi-Coxeter, the generators "
            "would not exhaust the reflections");

    DualPresentation dp;
    dp.w = interval.w;

    std::vector<int> gen_of_refl((std::size_t)g.num_reflections(), -1);
    for (std::size_t i = 0; i < interval.elements.size(); ++i) {
        if (interval.rank_of[i] != 1) continue;
        int r = g.reflection_index(interval.elements[i]);
        gen_of_refl[(std::size_t)r] = (int)dp.reflections.size();
        dp.reflections.push_back(r);
        dp.base.generator_names.push_back("t" + std::to_string(r));
    }

    // The m factorizations d = t t' of a length-2 divisor form one cycle
    // under (t, t') -> (t', t' t t'); chaining consecutive factorizations
    // gives m - 1 relators per divisor (the closing relation is redundant).
    // Start each chain at the smallest left factor for determinism.
    for (std::size_t i = 0; i < interval.elements.size(); ++i) {
        if (interval.rank_of[i] != 2) continue;
        const Elt& d = interval.elements[i];
        int first = -1;
        std::size_t m = 0;
        for (std::size_t gi = 0; gi < dp.reflections.size(); ++gi) {
            const Elt& t = g.reflection(dp.reflections[gi]);
            if (g.reflection_index(g.mul(t, d)) < 0) continue;  // t does not divide d
            if (first < 0) first = (int)gi;
            ++m;
        }
        int a = first;
        for (std::size_t step = 0; step + 1 < m; ++step) {
            const Elt& t = g.reflection(dp.reflections[(std::size_t)a]);
            Elt tp = g.mul(t, d);  // t * d, = t^{-1} d
            int rp = g.reflection_index(tp);
            Elt tpp = g.mul(g.mul(tp, t), tp);
            int rpp = g.reflection_index(tpp);
            int b = gen_of_refl[(std::size_t)rp], c = gen_of_refl[(std::size_t)rpp];
            dp.relation_pairs.push_back({a, b, c});
            Word rel = gen_word(a) * gen_word(b) * gen_word(c, -1) * gen_word(b, -1);
            dp.base.relators.push_back(std::move(rel));  // keep aligned with relation_pairs
            a = b;
        }
    }
    return dp;
}

Word cycle_commutator(int s1, int s2, int s3, int s4) {
    if (s1 == s2 || s1 == s3 || s1 == s4 || s2 == s3 || s2 == s4 || s3 == s4)
        throw std::invalid_argument("cycle_commutator: indices must be distinct");
    Word inner = gen_word(s2) * gen_word(s3) * gen_word(s4) * gen_word(s3, -1) * gen_word(s2, -1);
    return commutator(gen_word(s1), inner);
}

Word twisted_cycle_commutator(int s1, int s2, int s3, int s4) {
    if (s1 == s2 || s1 == s3 || s1 == s4 || s2 == s3 || s2 == s4 || s3 == s4)
        throw std::invalid_argument("twisted_cycle_commutator: indices must be distinct");
    Word inner = gen_word(s2, -1) * gen_word(s3) * gen_word(s4) * gen_word(s3, -1) * gen_word(s2);
    return commutator(gen_word(s1), inner);
}

DiagramPresentation diagram_presentation(const std::string& label, Flavor flavor) {
    DiagramPresentation out;
    out.label = label;
    out.diagram = label == "H3(a2)" ? h3a2_triangle() : catalog_entry(label).diagram;
    const CarterDiagram& d = out.diagram;

    for (int i = 0; i < d.n; ++i)
        out.presentation.generator_names.push_back("s" + std::to_string(i + 1));
    if (flavor == Flavor::coxeter)
        for (int i = 0; i < d.n; ++i) out.presentation.add_relator(gen_word(i) * gen_word(i));
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            out.presentation.add_relator(braid_relator(i, j, d.order[(std::size_t)i][(std::size_t)j]));

    auto add_extra = [&](std::string name, Word w) {
        out.presentation.add_relator(w);
        out.extra.emplace_back(std::move(name), std::move(w));
    };

    if (label == "H3(a2)") {
        if (flavor != Flavor::interval)
            throw std::invalid_argument(
                "diagram_presentation: the triangle diagram only has the interval flavor");
        out.commutator_kind = "none";
        // s2 s3 s2 s1 s3 s2 = s3 s2 s1 s3 s2 s3
        add_extra("hexagonal",
                  Word{{1, 1}, {2, 1}, {1, 1}, {0, 1}, {2, 1}, {1, 1}} *
                      Word{{2, 1}, {1, 1}, {0, 1}, {2, 1}, {1, 1}, {2, 1}}.inverse());
        // (s3 s2 s1)^3 = (s1 s3 s2)^3
        add_extra("cubes", pow(Word{{2, 1}, {1, 1}, {0, 1}}, 3) *
                               pow(Word{{0, 1}, {2, 1}, {1, 1}}, 3).inverse());
        return out;
    }

    if (label == "F4(a1)") {
        if (flavor == Flavor::interval) {
            out.commutator_kind = "twisted";
            Word a = gen_word(1, -1) * gen_word(0) * gen_word(1);   // s2^-1 s1 s2
            Word b = gen_word(2, -1) * gen_word(3) * gen_word(2);   // s3^-1 s4 s3
            add_extra("conjugate-commutator-1", commutator(a, b));
            Word a2 = gen_word(1) * gen_word(0) * gen_word(1, -1);  // s2 s1 s2^-1
            Word b2 = gen_word(2) * gen_word(3) * gen_word(2, -1);  // s3 s4 s3^-1
            add_extra("conjugate-commutator-2", commutator(a2, b2));
        } else {
            out.commutator_kind = "plain";
            add_extra("commutator", commutator(gen_word(1), gen_word(2)));  // [s2, s3]
        }
        return out;
    }

    auto cycles = four_cycles(d);
    if (flavor == Flavor::interval) {
        out.commutator_kind = cycles.empty() ? "none" : "twisted";
        for (const auto& c : cycles)
            out.presentation.add_relator(twisted_cycle_commutator(c[0], c[1], c[2], c[3]));
        return out;
    }

    // plain commutators; the artin flavor additionally insists on an
    // orientation so that every 4-cycle is cyclically oriented
    out.commutator_kind = cycles.empty() ? "none" : "plain";
    if (flavor == Flavor::artin && !cycles.empty()) {
        OrientationReport rep = is_orientable(d);
        if (!rep.orientable)
            throw std::invalid_argument(
                "diagram_presentation: no orientation of this diagram orients every "
                "4-cycle, so no Artin-flavor presentation is constructed");
        auto directed = [&](int a, int b) {
            return std::find(rep.orientation.begin(), rep.orientation.end(),
                             std::make_pair(a, b)) != rep.orientation.end();
        };
        for (const auto& c : cycles) {
            if (directed(c[0], c[1]))
                out.presentation.add_relator(cycle_commutator(c[0], c[1], c[2], c[3]));
            else
                out.presentation.add_relator(cycle_commutator(c[0], c[3], c[2], c[1]));
        }
    } else {
        for (const auto& c : cycles)
            out.presentation.add_relator(cycle_commutator(c[0], c[1], c[2], c[3]));
    }
    return out;
}

VerificationReport reduce_dual_to_diagram(const CoxGroup& g, const DualPresentation& dp,
                                          const DiagramPresentation& target,
                                          const ReflectionTuple& realization,
                                          const VerificationBudgets& budgets,
                                          const RewriteSystem* kb) {
    VerificationReport rep;
    rep.target_label = target.label;
    if ((int)realization.size() != target.diagram.n)
        throw std::invalid_argument("reduce_dual_to_diagram: one root per diagram vertex");

    std::vector<Elt> vertex_refl;
    for (int r : realization) vertex_refl.push_back(g.reflection(r));

    // (1) image check: target relators die in W
    rep.image_check = "verified";
    for (const Word& r : target.presentation.relators)
        if (!g.is_identity(eval_in_group(g, r, vertex_refl))) {
            rep.image_check = "failed";
            break;
        }

    // the rewrite rules double as an expression shortener in step (2)
    RewriteSystem rw = kb ? *kb : knuth_bendix_bounded(target.presentation, budgets.kb);

    // (2) expressions for every reflection generator over the diagram
    // generators, breadth-first through the dual braid relations; keep the
    // shortest expression found so the substituted relators stay small
    std::size_t n_gens = dp.reflections.size();
    std::vector<Word> expr(n_gens);
    std::vector<bool> known(n_gens, false);
    std::size_t covered = 0;
    for (int v = 0; v < target.diagram.n; ++v) {
        int gi = dp.gen_of_root(realization[(std::size_t)v]);
        if (gi < 0) throw std::invalid_argument("reduce_dual_to_diagram: root not a generator");
        if (!known[(std::size_t)gi]) {
            expr[(std::size_t)gi] = gen_word(v);
            known[(std::size_t)gi] = true;
            ++covered;
        }
    }
    rep.expression_check = "verified";
    for (std::size_t round = 0; round < budgets.expression_rounds; ++round) {
        bool progress = false;
        for (const auto& [t, tp, tpp] : dp.relation_pairs) {
            auto derive = [&](int target_gen, Word w) {
                // shortening through the target rules is only W-sound when
                // the target relators die in W
                if (rep.image_check == "verified") w = rw.reduce(w);
                std::size_t tg = (std::size_t)target_gen;
                if (known[tg] && expr[tg].letters.size() <= w.letters.size()) return;
                // sanity: the expression must evaluate to the reflection
                if (!(eval_in_group(g, w, vertex_refl) ==
                      g.reflection(dp.reflections[tg]))) {
                    rep.expression_check = "failed";
                    return;
                }
                expr[tg] = std::move(w);
                if (!known[tg]) ++covered;
                known[tg] = true;
                progress = true;
            };
            if (known[(std::size_t)t] && known[(std::size_t)tp])
                derive(tpp, expr[(std::size_t)tp].inverse() * expr[(std::size_t)t] *
                                expr[(std::size_t)tp]);
            if (known[(std::size_t)tp] && known[(std::size_t)tpp])
                derive(t, expr[(std::size_t)tp] * expr[(std::size_t)tpp] *
                              expr[(std::size_t)tp].inverse());
        }
        if (!progress) break;
    }
    if (covered < n_gens && rep.expression_check == "verified") {
        rep.expression_check = "inconclusive";
        for (std::size_t i = 0; i < n_gens; ++i)
            if (!known[i]) rep.uncovered_reflections.push_back(dp.reflections[i]);
    }

    // (3) collapse: substituted dual relators reduce to the empty word
    if (rep.expression_check != "verified") {
        rep.collapse_check = "inconclusive";
        return rep;
    }
    // each dual relator is the equation E(t)E(t') = E(t')E(t''); keeping the
    // two sides lets the prover meet in the middle instead of rewriting the
    // full relator down to the empty word
    struct Pending {
        Word lhs, rhs;
        Word relator() const { return lhs * rhs.inverse(); }
    };
    std::vector<Pending> todo;
    {
        std::set<std::string> seen;  // dedup up to rotation and inversion
        for (const auto& [t, tp, tpp] : dp.relation_pairs) {
            Pending p{rw.reduce(expr[(std::size_t)t] * expr[(std::size_t)tp]),
                      rw.reduce(expr[(std::size_t)tp] * expr[(std::size_t)tpp])};
            Word rel = rw.reduce(p.relator());
            if (rel.letters.empty()) continue;
            if (seen.insert(cyclic_canonical_key(rel)).second) todo.push_back(std::move(p));
        }
    }
    // every relator proven trivial is a consequence of the target relators,
    // so it can soundly join the rule set for the remaining ones; the search
    // budget escalates so only the stubborn tail pays for deep searches
    RewriteSystem work = rw;
    for (std::size_t tier = 0; tier < budgets.search_tiers; ++tier) {
        bool progress = true;
        while (progress && !todo.empty()) {
            std::size_t proved_this_pass = 0;
            // shortest first: the short proofs feed rules to the long ones
            std::sort(todo.begin(), todo.end(), [](const Pending& a, const Pending& b) {
                return a.lhs.size() + a.rhs.size() < b.lhs.size() + b.rhs.size();
            });
            std::vector<Pending> still;
            std::set<std::string> still_seen;
            std::size_t nodes = budgets.search_nodes << (2 * tier);
            std::size_t slack = budgets.length_slack + 2 * tier;
            for (Pending& p : todo) {
                p.lhs = work.reduce(p.lhs);  // the rule set may have grown
                p.rhs = work.reduce(p.rhs);
                Word rel = work.reduce(p.relator());
                if (rel.letters.empty()) {
                    ++proved_this_pass;
                    continue;
                }
                if (!still_seen.insert(cyclic_canonical_key(rel)).second) {
                    ++proved_this_pass;
                    continue;
                }
                if (proves_equal(work, p.lhs, p.rhs, nodes, slack) ||
                    proves_trivial(work, rel, nodes, slack)) {
                    ++proved_this_pass;
                    add_proven_rule(work, rel);
                } else {
                    still.push_back(std::move(p));
                }
            }
            // a pass that proved a single relator rarely unlocks the rest;
            // escalating the budget is the better use of the time
            progress = proved_this_pass >= 2;
            todo = std::move(still);
        }
        if (todo.empty()) break;
    }
    rep.unreduced_relators = todo.size();
    if (rep.unreduced_relators == 0)
        rep.collapse_check = "verified";
    else
        rep.collapse_check =
            rw.verdict == RewriteSystem::Verdict::confluent ? "failed" : "inconclusive";
    return rep;
}

nlohmann::json verification_report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["target"] = r.target_label;
    j["checks"] = {{"image", r.image_check},
                   {"expressions", r.expression_check},
                   {"collapse", r.collapse_check}};
    j["uncovered_reflections"] = r.uncovered_reflections;
    j["unreduced_relators"] = r.unreduced_relators;
    j["verified"] = r.verified();
    return j;
}

KernelRankReport pure_kernel_rank(const Presentation& p, const CoxGroup& g,
                                  const std::vector<Elt>& generator_images) {
    if ((int)generator_images.size() != p.num_generators())
        throw std::invalid_argument("pure_kernel_rank: one image per generator");
    for (const Word& r : p.relators)
        if (!g.is_identity(eval_in_group(g, r, generator_images)))
            throw std::invalid_argument("pure_kernel_rank: relator has a nontrivial image in W");

    std::vector<Elt> elems = g.all_elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (g.is_identity(elems[i])) {
            std::swap(elems[0], elems[i]);
            break;
        }
    std::unordered_map<Elt, int, EltHash> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
    // the images must generate W, otherwise some product is missing
    std::vector<std::vector<int>> images;
    for (const Elt& s : generator_images) {
        std::vector<int> img(elems.size());
        for (std::size_t c = 0; c < elems.size(); ++c) {
            auto it = index.find(g.mul(elems[c], s));
            if (it == index.end())
                throw std::invalid_argument("pure_kernel_rank: image outside the group closure");
            img[c] = it->second;
        }
        images.push_back(std::move(img));
    }
    CosetTable t = kernel_table_from_action(p.num_generators(), images);
    Presentation kernel = reidemeister_schreier(p, t);
    SmithForm s = abelianization(kernel);
    KernelRankReport out;
    out.free_rank = s.free_rank;
    out.torsion = s.invariant_factors;
    return out;
}

}  // namespace qcox
