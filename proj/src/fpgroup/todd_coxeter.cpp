#include <numeric>

#include "qcox/fpgroup.hpp"

namespace qcox {

int CosetTable::act_word(int coset, const Word& w) const {
    int c = coset;
    for (const Letter& l : w.letters) {
        c = act(c, l.gen, l.exp);
        if (c < 0) return -1;
    }
    return c;
}

namespace {

// encoded letters: 2*gen for the generator, 2*gen+1 for its inverse
int encode(const Letter& l) { return 2 * l.gen + (l.exp < 0 ? 1 : 0); }
int inv_col(int e) { return e ^ 1; }

struct Enumerator {
    int cols;
    std::size_t max_cosets;
    std::vector<std::vector<int>> table;
    std::vector<int> rep;  // union-find over cosets
    std::vector<std::pair<int, int>> deductions;
    std::vector<std::pair<int, int>> coincidences;
    // cyclic relator rotations grouped by first encoded letter
    std::vector<std::vector<std::vector<int>>> scans_by_letter;

    explicit Enumerator(int num_gens, std::size_t maxc) : cols(2 * num_gens), max_cosets(maxc) {
        scans_by_letter.resize((std::size_t)cols);
    }

    int find(int c) {
        while (rep[(std::size_t)c] != c) {
            rep[(std::size_t)c] = rep[(std::size_t)rep[(std::size_t)c]];
            c = rep[(std::size_t)c];
        }
        return c;
    }

    int get(int c, int e) {
        int d = table[(std::size_t)c][(std::size_t)e];
        return d < 0 ? -1 : find(d);
    }

    void set_edge(int a, int e, int b) {
        table[(std::size_t)a][(std::size_t)e] = b;
        table[(std::size_t)b][(std::size_t)inv_col(e)] = a;
        deductions.emplace_back(a, e);
        deductions.emplace_back(b, inv_col(e));
    }

    std::size_t live = 0;

    int new_coset() {
        table.emplace_back((std::size_t)cols, -1);
        rep.push_back((int)rep.size());
        ++live;
        return (int)rep.size() - 1;
    }

    void add_relator_scans(const Word& w) {
        std::vector<int> enc;
        for (const Letter& l : w.letters) enc.push_back(encode(l));
        for (std::size_t r = 0; r < enc.size(); ++r) {
            std::vector<int> rot;
            for (std::size_t k = 0; k < enc.size(); ++k)
                rot.push_back(enc[(r + k) % enc.size()]);
            scans_by_letter[(std::size_t)rot[0]].push_back(std::move(rot));
        }
    }

    // scan the cyclic word from c back to c, deducing a single missing edge
    // or queueing a coincidence
    void scan(int c, const std::vector<int>& word) {
        int f = find(c);
        std::size_t i = 0;
        while (i < word.size()) {
            int nxt = get(f, word[i]);
            if (nxt < 0) break;
            f = nxt;
            ++i;
        }
        if (i == word.size()) {
            if (f != find(c)) coincidences.emplace_back(f, find(c));
            return;
        }
        int b = find(c);
        std::size_t j = word.size();
        while (j > i) {
            int prv = get(b, inv_col(word[j - 1]));
            if (prv < 0) break;
            b = prv;
            --j;
        }
        if (j == i + 1)
            set_edge(f, word[i], b);
        else if (j == i)
            coincidences.emplace_back(f, b);  // both scans met with different cosets
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        rep[(std::size_t)b] = a;
        --live;
        for (int e = 0; e < cols; ++e) {
            int d = table[(std::size_t)b][(std::size_t)e];
            if (d < 0) continue;
            d = find(d);
            int cur = get(a, e);
            if (cur < 0)
                set_edge(a, e, d);
            else if (cur != d)
                coincidences.emplace_back(cur, d);
        }
    }

    void drain() {
        while (!deductions.empty() || !coincidences.empty()) {
            if (!coincidences.empty()) {
                auto [x, y] = coincidences.back();
                coincidences.pop_back();
                merge(x, y);
                continue;
            }
            auto [c, e] = deductions.back();
            deductions.pop_back();
            c = find(c);
            for (const auto& w : scans_by_letter[(std::size_t)e]) scan(c, w);
        }
    }

};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                        std::size_t max_cosets) {
    Enumerator en(p.num_generators(), max_cosets);
    for (const Word& r : p.relators) en.add_relator_scans(r.cyclically_reduced());
    en.new_coset();

    // trace subgroup generators from coset 0, defining what is missing
    for (const Word& w : subgroup_words) {
        Word red = w;  // freely reduced already by construction
        if (red.empty()) continue;
        int c = 0;
        for (std::size_t i = 0; i + 1 < red.letters.size(); ++i) {
            int e = encode(red.letters[i]);
            int nxt = en.get(en.find(c), e);
            if (nxt < 0) {
                nxt = en.new_coset();
                en.set_edge(en.find(c), e, nxt);
            }
            c = nxt;
            en.drain();
            c = en.find(c);
        }
        int e = encode(red.letters.back());
        int last = en.get(en.find(c), e);
        if (last < 0)
            en.set_edge(en.find(c), e, en.find(0));
        else if (last != en.find(0))
            en.coincidences.emplace_back(last, en.find(0));
        en.drain();
    }

    // Felsch main loop: define the first undefined entry, then close all
    // consequences before the next definition. Entries are never unset, so
    // the search cursor only moves forward.
    int cursor = 0;
    for (;;) {
        int dc = -1, de = -1;
        for (int c = cursor; c < (int)en.rep.size() && dc < 0; ++c) {
            if (en.find(c) != c) continue;
            for (int e = 0; e < en.cols; ++e)
                if (en.get(c, e) < 0) {
                    dc = c;
                    de = e;
                    break;
                }
            if (dc < 0) cursor = c + 1;
        }
        if (dc < 0) break;  // table closed
        if (en.live >= max_cosets) {
            CosetTable out;
            out.num_gens = p.num_generators();
            out.status = CosetTable::Status::overflowed;
            out.coset_count = (int)en.live;
            return out;
        }
        int n = en.new_coset();
        en.set_edge(dc, de, n);
        en.drain();
    }

    // compress to consecutive live cosets
    std::vector<int> index(en.rep.size(), -1);
    int n = 0;
    for (int c = 0; c < (int)en.rep.size(); ++c)
        if (en.find(c) == c) index[(std::size_t)c] = n++;
    CosetTable out;
    out.num_gens = p.num_generators();
    out.status = CosetTable::Status::complete;
    out.coset_count = n;
    out.table.assign((std::size_t)n, std::vector<int>((std::size_t)en.cols, -1));
    for (int c = 0; c < (int)en.rep.size(); ++c) {
        if (en.find(c) != c) continue;
        for (int e = 0; e < en.cols; ++e)
            out.table[(std::size_t)index[(std::size_t)c]][(std::size_t)e] =
                index[(std::size_t)en.find(en.get(c, e))];
    }
    return out;
}

CosetTable kernel_table_from_action(int num_gens, const std::vector<std::vector<int>>& images) {
    if ((int)images.size() != num_gens)
        throw std::invalid_argument("kernel_table_from_action: one image per generator");
    std::size_t order = images.empty() ? 1 : images[0].size();
    CosetTable t;
    t.num_gens = num_gens;
    t.status = CosetTable::Status::complete;
    t.coset_count = (int)order;
    t.table.assign(order, std::vector<int>((std::size_t)(2 * num_gens), -1));
    for (int g = 0; g < num_gens; ++g) {
        if (images[(std::size_t)g].size() != order)
            throw std::invalid_argument("kernel_table_from_action: image size mismatch");
        for (std::size_t c = 0; c < order; ++c) {
            int d = images[(std::size_t)g][c];
            t.table[c][(std::size_t)(2 * g)] = d;
            t.table[(std::size_t)d][(std::size_t)(2 * g + 1)] = (int)c;
        }
    }
    for (const auto& row : t.table)
        for (int v : row)
            if (v < 0) throw std::invalid_argument("kernel_table_from_action: not a permutation");
    return t;
}

}  // namespace qcox
