#include <algorithm>
#include <stdexcept>

#include "qcox/fpgroup.hpp"

namespace qcox {

Presentation tietze_eliminate(const Presentation& p, const std::vector<int>& keep,
                              const std::map<int, Word>& expressions) {
    std::vector<int> new_index((std::size_t)p.num_generators(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int g = keep[i];
        if (g < 0 || g >= p.num_generators())
            throw std::invalid_argument("tietze_eliminate: kept generator out of range");
        new_index[(std::size_t)g] = (int)i;
    }
    for (int g = 0; g < p.num_generators(); ++g) {
        if (new_index[(std::size_t)g] >= 0) continue;
        auto it = expressions.find(g);
        if (it == expressions.end())
            throw std::invalid_argument("tietze_eliminate: no expression for eliminated generator");
        for (const Letter& l : it->second.letters)
            if (l.gen < 0 || l.gen >= (int)keep.size())
                throw std::invalid_argument(
                    "tietze_eliminate: expression uses a non-kept generator");
    }

    Presentation out;
    for (int g : keep) out.generator_names.push_back(p.generator_names[(std::size_t)g]);
    for (const Word& r : p.relators) {
        Word w;
        for (const Letter& l : r.letters) {
            int ni = new_index[(std::size_t)l.gen];
            if (ni >= 0) {
                w.push(ni, l.exp);
            } else {
                const Word& ex = expressions.at(l.gen);
                w.append(l.exp > 0 ? ex : ex.inverse());
            }
        }
        out.add_relator(std::move(w));
    }
    return out;
}

}  // namespace qcox
