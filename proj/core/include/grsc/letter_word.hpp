#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grsc {

// A letter is a positive alphabet symbol or its formal inverse.
struct Letter {
    uint16_t index = 0;   // position in the alphabet
    bool negative = false;

    Letter inverse() const { return {index, !negative}; }
    // a < -a < b < -b < ...
    int code() const { return int(index) * 2 + (negative ? 1 : 0); }
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct Alphabet {
    std::vector<std::string> names;
    std::map<std::string, uint16_t> index_of;

    uint16_t add(const std::string& name);
    std::optional<uint16_t> find(const std::string& name) const;
    size_t size() const { return names.size(); }
    bool operator==(const Alphabet& o) const { return names == o.names; }
};

Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word rotate(const Word& w, size_t k);

// total order: length first, then letter codes
bool shortlex_less(const Word& a, const Word& b);
// least word among all rotations of w and of w^-1
Word canonical_cyclic(const Word& w);

// token form: inverse letters carry a leading '-', e.g. "a b -a -b"
std::string format_letter(const Alphabet& a, Letter l);
std::string format_word(const Alphabet& a, const Word& w);
// throws std::runtime_error on unknown letters
Word parse_word(const Alphabet& a, const std::string& text);

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (Letter l : w) {
            h ^= size_t(l.code()) + 1;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace grsc
