#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qcox {

// One letter of a free-group word: generator index with exponent +1 or -1.
struct Letter {
    int gen = 0;
    int exp = 1;
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

// Freely reduced word in a free group.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> ls) {
        for (const Letter& l : ls) push(l.gen, l.exp);
    }

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    // append with free reduction
    void push(int gen, int exp);
    void append(const Word& w);

    Word inverse() const;
    Word cyclically_reduced() const;
    int max_generator() const;  // -1 for the empty word

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;
};

Word operator*(const Word& a, const Word& b);
inline Word commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}
Word pow(const Word& a, int n);

struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    int num_generators() const { return (int)generator_names.size(); }
    // cyclically reduces, drops empty relators, skips exact duplicates
    void add_relator(Word w);
};

// text format: whitespace-separated tokens, a generator name for the
// generator itself and the name with the first character upper-cased (or a
// trailing ^-1) for its inverse, e.g. "a b a B A B"
Word parse_word(const std::string& text, const std::vector<std::string>& names);
std::string word_to_text(const Word& w, const std::vector<std::string>& names);

nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

}  // namespace qcox
