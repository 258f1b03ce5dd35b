#pragma once

#include <unordered_map>
#include <vector>

#include "grsc/cancellation.hpp"

namespace grsc {

// Rewriting engine over a fixed presentation: replaces any factor longer than
// half a relator by the inverse of its complement. Precomputes a factor table
// over all cyclic rotations of the relators and their inverses.
class DehnReducer {
  public:
    explicit DehnReducer(Presentation p);

    struct Step {
        Word before;        // freely reduced word the step applied to
        size_t prefix_len;  // letters before the replaced factor
        size_t factor_len;
        Word rotation;     // the relator rotation, beginning with the factor
        Word replacement;  // inverse of the rotation's remainder
    };

    // leftmost, then longest replaceable factor; repeats until irreducible
    Word reduce(Word w, std::vector<Step>* trace = nullptr) const;
    bool is_trivial(const Word& w) const { return reduce(w).empty(); }

    // all words obtained from w by replacing one exact-half relator factor by
    // the inverse of the other half (freely reduced; may be shorter than w)
    std::vector<Word> half_swaps(const Word& w) const;

    const Presentation& pres() const { return p_; }
    size_t min_relator() const { return min_rel_; }
    size_t max_relator() const { return max_rel_; }

  private:
    Presentation p_;
    size_t min_rel_ = 0, max_rel_ = 0;
    // factor -> (rotation, replacement), factor length > |r|/2
    std::unordered_map<Word, std::pair<Word, Word>, WordHash> repl_;
    // factor -> replacements, factor length == |r|/2 (even relators only)
    std::unordered_map<Word, std::vector<Word>, WordHash> half_;
};

}  // namespace grsc
