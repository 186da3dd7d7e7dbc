#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcox/word.hpp"

namespace qcox {

using BigInt = boost::multiprecision::cpp_int;

// ---- abelianization -------------------------------------------------------

struct SmithForm {
    std::vector<BigInt> invariant_factors;  // the nontrivial ones, d1 | d2 | ...
    int free_rank = 0;
};

// Smith normal form of an integer matrix (rows x cols); free_rank is
// cols - rank, i.e. the free rank of the cokernel.
SmithForm smith_normal_form(std::vector<std::vector<BigInt>> m, int cols);

// Smith form of the relator-exponent-sum matrix of p.
SmithForm abelianization(const Presentation& p);

// ---- Todd-Coxeter ---------------------------------------------------------

struct CosetTable {
    enum class Status { complete, overflowed };
    int num_gens = 0;
    // row per coset, 2*num_gens columns (gen, then its inverse), -1 undefined
    std::vector<std::vector<int>> table;
    Status status = Status::overflowed;
    int coset_count = 0;

    int act(int coset, int gen, int exp) const {
        return table[(std::size_t)coset][(std::size_t)(2 * gen + (exp < 0 ? 1 : 0))];
    }
    int act_word(int coset, const Word& w) const;  // -1 if any step undefined
};

// Felsch-style coset enumeration of the subgroup generated by
// subgroup_words; table overflow yields Status::overflowed, not a throw.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                        std::size_t max_cosets);

// Coset table of the kernel of a homomorphism onto a finite group given by
// its multiplication action: images[g] acts on {0..order-1}, identity is 0.
CosetTable kernel_table_from_action(int num_gens, const std::vector<std::vector<int>>& images);

// ---- Reidemeister-Schreier ------------------------------------------------

// Presentation of the subgroup the complete table was enumerated over.
// tree_strategy 0: BFS spanning tree; 1: DFS (for the invariance test).
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                   int tree_strategy = 0);

// ---- bounded Knuth-Bendix -------------------------------------------------

struct KBLimits {
    std::size_t max_rules = 4000;
    std::size_t max_length = 64;
    std::size_t max_iterations = 200000;
};

struct RewriteSystem {
    enum class Verdict { confluent, budget_exhausted };
    // letters encoded as 2*gen (+) and 2*gen+1 (-)
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rules;
    Verdict verdict = Verdict::budget_exhausted;

    std::vector<int> reduce_encoded(std::vector<int> w) const;
    Word reduce(const Word& w) const;
};

RewriteSystem knuth_bendix_bounded(const Presentation& p, const KBLimits& limits = {});

// Tietze-style relator interreduction: relators are processed shortest
// first, each rewritten against the rules generated by the relators already
// kept; the ones that reduce to the empty word are dropped. Presents the
// same group on the same generators, usually far more compactly.
Presentation interreduce_relators(const Presentation& p, const KBLimits& limits = {});

// Bounded shortest-first search for a proof that w is trivial in the group
// the rewrite rules come from: applies every rule in both directions plus
// cyclic rotations, capped at |w| + length_slack letters and node_budget
// states. A `true` answer is a certificate; `false` certifies nothing.
bool proves_trivial(const RewriteSystem& rw, const Word& w, std::size_t node_budget = 20'000,
                    std::size_t length_slack = 8);

// Bounded two-sided search for a proof that lhs and rhs represent the same
// group element: both sides are rewritten toward a common word, which reaches
// far deeper proofs than proves_trivial(lhs * rhs^-1) for the same budget.
// A `true` answer is a certificate; `false` certifies nothing.
bool proves_equal(const RewriteSystem& rw, const Word& lhs, const Word& rhs,
                  std::size_t node_budget = 20'000, std::size_t length_slack = 8);

// ---- homomorphism counting ------------------------------------------------

struct FiniteGroupTable {
    std::string name;
    int order = 0;
    std::vector<std::vector<int>> mul;  // mul[a][b], identity = 0
    std::vector<int> inv;

    int eval(const Word& w, const std::vector<int>& assignment) const;
};

FiniteGroupTable cyclic_group(int n);
FiniteGroupTable dihedral_group(int n);  // order 2n
FiniteGroupTable symmetric_group(int n);
FiniteGroupTable alternating_group(int n);
FiniteGroupTable quaternion_group();          // Q8
FiniteGroupTable psl_2(int q);                // PSL(2,q) on the projective line, q odd prime
FiniteGroupTable product(const FiniteGroupTable& a, const FiniteGroupTable& b);

// the default battery used by the non-isomorphism suite
const std::vector<FiniteGroupTable>& default_target_battery();
// larger targets tried when the default battery does not separate
const std::vector<FiniteGroupTable>& extended_target_battery();

// number of homomorphisms into each target (all generator assignments
// satisfying every relator); throws BudgetExceeded past `budget` assignments.
std::vector<std::uint64_t> hom_count_signature(const Presentation& p,
                                               const std::vector<FiniteGroupTable>& targets,
                                               std::uint64_t budget = 2'000'000'000ull);

// ---- low-index subgroups --------------------------------------------------

// Complete coset tables of subgroups of index <= max_index, one per
// conjugacy class (deduplicated by canonical renumbering over base points).
std::vector<CosetTable> low_index_subgroups(const Presentation& p, int max_index,
                                            std::uint64_t budget = 50'000'000ull);

std::map<int, int> subgroup_counts_by_index(const std::vector<CosetTable>& tables);

// ---- Tietze ---------------------------------------------------------------

// Eliminate every generator not in `keep`, substituting the given expression
// (a word over the kept generators, indexed by their position in `keep`).
Presentation tietze_eliminate(const Presentation& p, const std::vector<int>& keep,
                              const std::map<int, Word>& expressions);

}  // namespace qcox
