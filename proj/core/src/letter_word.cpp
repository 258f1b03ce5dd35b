#include "grsc/letter_word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grsc {

uint16_t Alphabet::add(const std::string& name) {
    auto it = index_of.find(name);
    if (it != index_of.end()) return it->second;
    uint16_t id = uint16_t(names.size());
    names.push_back(name);
    index_of.emplace(name, id);
    return id;
}

std::optional<uint16_t> Alphabet::find(const std::string& name) const {
    auto it = index_of.find(name);
    if (it == index_of.end()) return std::nullopt;
    return it->second;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

bool is_freely_reduced(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] == w[i].inverse()) return false;
    return true;
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_freely_reduced(w)) return false;
    if (w.size() >= 2 && w.front() == w.back().inverse()) return false;
    return true;
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word rotate(const Word& w, size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    Word out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return out;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].code() != b[i].code()) return a[i].code() < b[i].code();
    }
    return false;
}

Word canonical_cyclic(const Word& w) {
    if (w.empty()) return w;
    Word best = w;
    Word inv = inverse(w);
    for (size_t k = 0; k < w.size(); ++k) {
        Word r = rotate(w, k);
        if (shortlex_less(r, best)) best = r;
        r = rotate(inv, k);
        if (shortlex_less(r, best)) best = r;
    }
    return best;
}

std::string format_letter(const Alphabet& a, Letter l) {
    std::string s;
    if (l.negative) s += '-';
    s += a.names.at(l.index);
    return s;
}

std::string format_word(const Alphabet& a, const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += format_letter(a, w[i]);
    }
    return s;
}

Word parse_word(const Alphabet& a, const std::string& text) {
    Word out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        bool neg = false;
        std::string name = tok;
        if (!name.empty() && name[0] == '-') {
            neg = true;
            name = name.substr(1);
        }
        auto idx = a.find(name);
        if (!idx) throw std::runtime_error("unknown letter '" + tok + "'");
        out.push_back({*idx, neg});
    }
    return out;
}

}  // namespace grsc
