#pragma once

#include <optional>
#include <string>

#include "qcox/classes.hpp"
#include "qcox/dualpres.hpp"
#include "qcox/hurwitz.hpp"
#include "qcox/interval.hpp"

namespace qcox {

// "D4", "E6", "H3", ... -> the group; throws with the list of valid labels.
CoxGroup group_from_type(const std::string& type);

// ---- class survey ----------------------------------------------------------

struct SurveyOptions {
    std::size_t interval_budget = 1'000'000;
    std::size_t hurwitz_budget = 10'000'000;
    // lattice / balanced checks are quadratic-ish in the interval; skip above
    std::size_t lattice_max_interval = 3'000;
    bool with_hurwitz = true;  // forced off for E8 (orbits too large)
};

struct SurveyRow {
    std::string class_label;
    int order = 0;
    std::string diagram_label;
    std::size_t interval_size = 0;
    std::size_t dual_relator_count = 0;
    std::optional<bool> balanced;
    std::optional<bool> lattice;
    std::optional<std::array<int, 4>> bowtie_witness;  // interval indices
    std::optional<bool> hurwitz_transitive;
    std::string note;  // skipped phases / budget overflows, empty when clean
};

struct SurveyReport {
    std::string type_label;
    std::vector<SurveyRow> rows;
};

SurveyReport survey(const CoxGroup& g, const SurveyOptions& opts = {});

nlohmann::json survey_to_json(const SurveyReport& r);
std::string survey_to_text(const SurveyReport& r);

// ---- presentation verification ----------------------------------------------

// Runs reduce_dual_to_diagram over every candidate vertex alignment between
// the target diagram and the class diagram (a cheap prescreen pass first,
// then full budgets on the most promising candidates). When the target
// diagram cannot align with the class diagram vertex-for-vertex (the
// triangle target), candidates are bond-compatible tuples of divisor
// reflections instead.
VerificationReport verify_class_presentation(const CoxGroup& g, const DualPresentation& dp,
                                             const CarterDiagram& class_diagram,
                                             const DiagramPresentation& target,
                                             const VerificationBudgets& budgets = {});

struct PresentationCell {
    std::string class_label;
    std::string flavor;        // "interval", "artin" or "coxeter"
    std::string target_label;
    std::string status;        // "verified", "inconclusive", "failed",
                               // "rejected" (non-orientable artin), "skipped"
    std::optional<VerificationReport> report;   // interval / artin flavors
    std::optional<int> coset_count;             // coxeter flavor (Todd-Coxeter)
    std::optional<std::size_t> expected_order;  // |W|, coxeter flavor
    std::string note;
};

struct PresentationMatrix {
    std::string type_label;
    std::vector<PresentationCell> cells;
};

struct VerifyOptions {
    VerificationBudgets budgets;
    std::size_t interval_budget = 1'000'000;
    std::size_t coset_budget = 200'000;      // Todd-Coxeter table rows
    std::size_t coxeter_flavor_max_order = 2'000;  // |W| gate for the TC cells
};

PresentationMatrix verify_presentations(const CoxGroup& g, const VerifyOptions& opts = {});

// check (1) alone, cheap: the interval-flavor relators for `label` die in W
// under a realization of the diagram inside g
bool image_check_for_label(const CoxGroup& g, const std::string& label);

nlohmann::json presentation_matrix_to_json(const PresentationMatrix& m);
std::string presentation_matrix_to_text(const PresentationMatrix& m);

// ---- non-isomorphism evidence -----------------------------------------------

struct NonIsomorphismReport {
    std::string interval_group;  // class label
    std::string artin_group;     // ambient type label
    // free ranks of the pure-kernel abelianizations, when |W| is small
    // enough to enumerate the kernel presentation
    std::optional<int> rank_interval;
    std::optional<int> rank_artin;
    struct Separation {
        std::string invariant;  // "rank", "hom-count", "low-index"
        std::string detail;     // replayable: target / index and both counts
    };
    std::optional<Separation> separation;
    std::string verdict;  // "separated" or "not separated within budget"
    std::string note;     // odd-n deferral flag, budget overflows
};

struct NonIsomOptions {
    std::size_t rank_max_order = 1'000;  // |W| gate for the rank invariant
    std::uint64_t hom_budget = 200'000'000ull;
    int low_index = 4;
    std::uint64_t low_index_budget = 50'000'000ull;
    std::size_t interval_budget = 1'000'000;
};

NonIsomorphismReport nonisomorphism_suite(const CoxGroup& g, const std::string& class_label,
                                          const NonIsomOptions& opts = {});

nlohmann::json nonisom_to_json(const NonIsomorphismReport& r);
std::string nonisom_to_text(const NonIsomorphismReport& r);

// Presentation of the interval group of the class on the vertices of its
// diagram, generic over the catalog: the dual presentation with every other
// reflection generator eliminated through its derived expression. This is
// what the hom-count / low-index batteries run on when no hand-made diagram
// presentation exists (the H4 classes).
Presentation interval_presentation_on_diagram(const CoxGroup& g, const DualPresentation& dp,
                                              const ReflectionTuple& vertex_roots);

}  // namespace qcox
