#include "qcox/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qcox {

void Word::push(int gen, int exp) {
    if (exp != 1 && exp != -1) throw std::invalid_argument("Word::push: exponent must be +-1");
    if (!letters.empty() && letters.back().gen == gen && letters.back().exp == -exp)
        letters.pop_back();
    else
        letters.push_back({gen, exp});
}

void Word::append(const Word& w) {
    for (const Letter& l : w.letters) push(l.gen, l.exp);
}

Word Word::inverse() const {
    Word r;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.push(it->gen, -it->exp);
    return r;
}

Word Word::cyclically_reduced() const {
    Word r = *this;
    while (r.letters.size() >= 2 && r.letters.front().gen == r.letters.back().gen &&
           r.letters.front().exp == -r.letters.back().exp) {
        r.letters.pop_back();
        r.letters.erase(r.letters.begin());
    }
    return r;
}

int Word::max_generator() const {
    int m = -1;
    for (const Letter& l : letters) m = std::max(m, l.gen);
    return m;
}

Word operator*(const Word& a, const Word& b) {
    Word r = a;
    r.append(b);
    return r;
}

Word pow(const Word& a, int n) {
    Word base = n < 0 ? a.inverse() : a;
    Word r;
    for (int i = 0; i < std::abs(n); ++i) r.append(base);
    return r;
}

void Presentation::add_relator(Word w) {
    w = w.cyclically_reduced();
    if (w.empty()) return;
    if (w.max_generator() >= num_generators())
        throw std::out_of_range("add_relator: generator index out of range");
    if (std::find(relators.begin(), relators.end(), w) != relators.end()) return;
    relators.push_back(std::move(w));
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        bool found = false;
        for (int g = 0; g < (int)names.size() && !found; ++g) {
            const std::string& n = names[(std::size_t)g];
            std::string inv_cap = n;
            if (!inv_cap.empty()) inv_cap[0] = (char)std::toupper((unsigned char)inv_cap[0]);
            if (tok == n) {
                w.push(g, 1);
                found = true;
            } else if ((tok == inv_cap && inv_cap != n) || tok == n + "^-1") {
                w.push(g, -1);
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("parse_word: unknown token '" + tok + "'");
    }
    return w;
}

std::string word_to_text(const Word& w, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w.letters) {
        if (!first) os << ' ';
        first = false;
        std::string n = names.at((std::size_t)l.gen);
        if (l.exp < 0) {
            if (!n.empty() && std::islower((unsigned char)n[0]))
                n[0] = (char)std::toupper((unsigned char)n[0]);
            else
                n += "^-1";
        }
        os << n;
    }
    return os.str();
}

nlohmann::json word_to_json(const Word& w) {
    nlohmann::json j = nlohmann::json::array();
    for (const Letter& l : w.letters) j.push_back({l.gen, l.exp});
    return j;
}

Word word_from_json(const nlohmann::json& j) {
    Word w;
    for (const auto& pair : j) w.push(pair.at(0).get<int>(), pair.at(1).get<int>());
    return w;
}

nlohmann::json presentation_to_json(const Presentation& p) {
    nlohmann::json j;
    j["generators"] = p.generator_names;
    j["relators"] = nlohmann::json::array();
    for (const Word& r : p.relators) j["relators"].push_back(word_to_json(r));
    return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
    Presentation p;
    p.generator_names = j.at("generators").get<std::vector<std::string>>();
    for (const auto& r : j.at("relators")) p.add_relator(word_from_json(r));
    return p;
}

}  // namespace qcox
