#include <stdexcept>

#include "qcox/fpgroup.hpp"

namespace qcox {

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                   int tree_strategy) {
    if (t.status != CosetTable::Status::complete)
        throw std::invalid_argument("reidemeister_schreier: incomplete coset table");
    int n = t.coset_count;
    int g = t.num_gens;

    // spanning tree of the coset graph: tree_edge[c] = (parent, gen, exp)
    // marks which edges carry trivial Schreier generators
    std::vector<bool> in_tree((std::size_t)(n * g), false);  // edge (coset, gen) forward
    std::vector<int> order;
    {
        std::vector<bool> seen((std::size_t)n, false);
        seen[0] = true;
        std::vector<int> stack{0};
        std::size_t head = 0;
        while (head < stack.size()) {
            int c;
            if (tree_strategy == 0) {  // BFS
                c = stack[head++];
            } else {  // DFS
                c = stack.back();
                stack.pop_back();
            }
            order.push_back(c);
            for (int gen = 0; gen < g; ++gen)
                for (int exp : {1, -1}) {
                    int d = t.act(c, gen, exp);
                    if (!seen[(std::size_t)d]) {
                        seen[(std::size_t)d] = true;
                        // orient the tree edge in the forward direction
                        if (exp > 0)
                            in_tree[(std::size_t)(c * g + gen)] = true;
                        else
                            in_tree[(std::size_t)(d * g + gen)] = true;
                        stack.push_back(d);
                    }
                }
        }
        if ((int)order.size() != n)
            throw std::invalid_argument("reidemeister_schreier: coset graph not connected");
    }

    // Schreier generators: one per non-tree forward edge
    std::vector<int> gen_index((std::size_t)(n * g), -1);
    Presentation out;
    for (int c = 0; c < n; ++c)
        for (int gen = 0; gen < g; ++gen) {
            if (in_tree[(std::size_t)(c * g + gen)]) continue;
            gen_index[(std::size_t)(c * g + gen)] = out.num_generators();
            out.generator_names.push_back("x" + std::to_string(c) + "_" +
                                          p.generator_names[(std::size_t)gen]);
        }

    // rewrite each relator traced from every coset
    for (const Word& r : p.relators)
        for (int c = 0; c < n; ++c) {
            Word w;
            int cur = c;
            for (const Letter& l : r.letters) {
                if (l.exp > 0) {
                    int k = gen_index[(std::size_t)(cur * g + l.gen)];
                    if (k >= 0) w.push(k, 1);
                    cur = t.act(cur, l.gen, 1);
                } else {
                    int prev = t.act(cur, l.gen, -1);
                    int k = gen_index[(std::size_t)(prev * g + l.gen)];
                    if (k >= 0) w.push(k, -1);
                    cur = prev;
                }
            }
            out.add_relator(std::move(w));
        }
    return out;
}

}  // namespace qcox
