#pragma once

#include <array>
#include <string>

#include "qcox/classes.hpp"
#include "qcox/fpgroup.hpp"
#include "qcox/interval.hpp"

namespace qcox {

// Presentation of the interval group on one generator per reflection below
// w, with the dual braid relations t t' = t' t'' (t'' = t' t t') coming from
// the ordered factorizations of the length-2 divisors of w.
struct DualPresentation {
    Presentation base;
    std::vector<int> reflections;  // positive-root index of each generator
    // (t, t', t'') as generator indices, one triple per relator, same order
    std::vector<std::array<int, 3>> relation_pairs;
    Elt w;

    int gen_of_root(int positive_root) const;  // -1 if absent
};

// Requires the top element of the interval to be quasi-Coxeter (so that the
// generators exhaust the reflections of W).
DualPresentation dual_presentation(const IntervalPoset& interval);

// [s1, s2 s3 s4 s4^-1 s2^-1] and the twisted variant [s1, s2^-1 s3 s4 s3^-1 s2],
// on four distinct generator indices
Word cycle_commutator(int s1, int s2, int s3, int s4);
Word twisted_cycle_commutator(int s1, int s2, int s3, int s4);

enum class Flavor { interval, artin, coxeter };

struct DiagramPresentation {
    std::string label;
    CarterDiagram diagram;
    Presentation presentation;
    std::string commutator_kind;  // "twisted", "plain" or "none"
    std::vector<std::pair<std::string, Word>> extra;  // named special relators
};

// Carter-diagram presentation for a catalog label (plus the special triangle
// diagram "H3(a2)"): braid relations of the diagram, then per flavor
//   interval -> twisted cycle commutators (F4(a1), H3(a2): their special
//               relators), artin -> plain cycle commutators along the
//               canonical orientation (rejected for non-orientable diagrams),
//   coxeter  -> quadratic relators plus the plain commutators.
DiagramPresentation diagram_presentation(const std::string& label, Flavor flavor);

struct VerificationBudgets {
    std::size_t expression_rounds = 64;
    // a mid-size rule set reduces fast; the triviality search covers the
    // relators the greedy reduction alone cannot finish
    KBLimits kb{800, 32, 200'000};
    std::size_t search_nodes = 20'000;  // per stubborn relator (collapse step)
    std::size_t length_slack = 8;
    // escalation tiers for the collapse search: tier k gets 4^k * search_nodes
    // nodes and length_slack + 2k slack
    std::size_t search_tiers = 4;
};

struct VerificationReport {
    std::string target_label;
    // each "verified", "failed" or "inconclusive"
    std::string image_check;
    std::string expression_check;
    std::string collapse_check;
    std::vector<int> uncovered_reflections;  // positive-root indices (check 2)
    std::size_t unreduced_relators = 0;      // dual relators not collapsed (check 3)
    bool verified() const {
        return image_check == "verified" && expression_check == "verified" &&
               collapse_check == "verified";
    }
};

// The three-step verification that the dual presentation collapses onto the
// target diagram presentation: (1) target relators die in W, (2) every
// reflection generator gets an expression over the diagram generators via
// the dual braid relations, (3) every dual relator reduces to the empty
// word in the target presentation under bounded rewriting.
// `realization` assigns a positive root to each diagram vertex; the product
// of the corresponding reflections (per the diagram's split) must be dp.w.
// `kb` optionally supplies the bounded rewrite system of the target
// presentation (it only depends on target and budgets.kb, so callers sweeping
// realizations should compute it once).
VerificationReport reduce_dual_to_diagram(const CoxGroup& g, const DualPresentation& dp,
                                          const DiagramPresentation& target,
                                          const ReflectionTuple& realization,
                                          const VerificationBudgets& budgets = {},
                                          const RewriteSystem* kb = nullptr);

nlohmann::json verification_report_to_json(const VerificationReport& r);

struct KernelRankReport {
    int free_rank = 0;
    std::vector<BigInt> torsion;
};

// Abelianization of the kernel of the map p -> W sending generator i to
// generator_images[i]; rejects presentations that are not W-quotients.
KernelRankReport pure_kernel_rank(const Presentation& p, const CoxGroup& g,
                                  const std::vector<Elt>& generator_images);

}  // namespace qcox
