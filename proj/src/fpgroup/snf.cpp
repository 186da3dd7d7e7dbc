#include <algorithm>

#include "qcox/fpgroup.hpp"

namespace qcox {

SmithForm smith_normal_form(std::vector<std::vector<BigInt>> m, int cols) {
    int rows = (int)m.size();
    for (auto& r : m)
        if ((int)r.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");

    std::vector<BigInt> diag;
    int top = 0;
    while (top < rows && top < cols) {
        // find the entry of smallest absolute value in the remaining block
        int pr = -1, pc = -1;
        BigInt best = 0;
        for (int i = top; i < rows && best != 1; ++i)
            for (int j = top; j < cols; ++j) {
                if (m[(std::size_t)i][(std::size_t)j] == 0) continue;
                BigInt a = abs(m[(std::size_t)i][(std::size_t)j]);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                    if (best == 1) break;  // cannot do better
                }
            }
        if (pr < 0) break;  // zero block
        std::swap(m[(std::size_t)top], m[(std::size_t)pr]);
        for (int i = 0; i < rows; ++i)
            std::swap(m[(std::size_t)i][(std::size_t)top], m[(std::size_t)i][(std::size_t)pc]);

        bool clean = true;
        for (int i = top + 1; i < rows; ++i) {
            if (m[(std::size_t)i][(std::size_t)top] == 0) continue;
            BigInt q = m[(std::size_t)i][(std::size_t)top] / m[(std::size_t)top][(std::size_t)top];
            if (q != 0)
                for (int j = top; j < cols; ++j)
                    m[(std::size_t)i][(std::size_t)j] -= q * m[(std::size_t)top][(std::size_t)j];
            if (m[(std::size_t)i][(std::size_t)top] != 0) clean = false;
        }
        for (int j = top + 1; j < cols; ++j) {
            if (m[(std::size_t)top][(std::size_t)j] == 0) continue;
            BigInt q = m[(std::size_t)top][(std::size_t)j] / m[(std::size_t)top][(std::size_t)top];
            if (q != 0)
                for (int i = top; i < rows; ++i)
                    m[(std::size_t)i][(std::size_t)j] -= q * m[(std::size_t)i][(std::size_t)top];
            if (m[(std::size_t)top][(std::size_t)j] != 0) clean = false;
        }
        if (!clean) continue;  // remainders became new smaller pivot candidates

        // pivot must divide every remaining entry for the divisibility chain
        BigInt p = abs(m[(std::size_t)top][(std::size_t)top]);
        if (p == 1) {
            diag.push_back(std::move(p));
            ++top;
            continue;
        }
        bool divides_all = true;
        for (int i = top + 1; i < rows && divides_all; ++i)
            for (int j = top + 1; j < cols && divides_all; ++j)
                if (m[(std::size_t)i][(std::size_t)j] % p != 0) {
                    // fold that row into the pivot row and redo the block
                    for (int k = top; k < cols; ++k)
                        m[(std::size_t)top][(std::size_t)k] += m[(std::size_t)i][(std::size_t)k];
                    divides_all = false;
                }
        if (!divides_all) continue;
        diag.push_back(p);
        ++top;
    }

    SmithForm out;
    out.free_rank = cols - (int)diag.size();
    for (const BigInt& d : diag)
        if (d != 1) out.invariant_factors.push_back(d);
    return out;
}

SmithForm abelianization(const Presentation& p) {
    std::vector<std::vector<BigInt>> m;
    for (const Word& r : p.relators) {
        std::vector<BigInt> row((std::size_t)p.num_generators(), 0);
        for (const Letter& l : r.letters) row[(std::size_t)l.gen] += l.exp;
        m.push_back(std::move(row));
    }
    return smith_normal_form(std::move(m), p.num_generators());
}

}  // namespace qcox
