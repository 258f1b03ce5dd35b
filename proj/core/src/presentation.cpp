#include <algorithm>
#include <set>

#include "grsc/cancellation.hpp"

namespace grsc {

size_t Presentation::min_relator_length() const {
    size_t m = 0;
    for (const auto& r : relators) m = (m == 0 || r.size() < m) ? r.size() : m;
    return m;
}

size_t Presentation::max_relator_length() const {
    size_t m = 0;
    for (const auto& r : relators) m = std::max(m, r.size());
    return m;
}

Presentation presentation(const LabelledGraph& g, size_t cycle_cap) {
    Presentation p;
    p.alphabet = g.alphabet;
    CycleList cl = simple_cycles(g, cycle_cap);
    p.capped = cl.capped;
    std::set<Word> canon;
    for (const auto& c : cl.cycles) canon.insert(canonical_cyclic(c.word));
    p.relators.assign(canon.begin(), canon.end());
    std::sort(p.relators.begin(), p.relators.end(), shortlex_less);
    return p;
}

}  // namespace grsc
