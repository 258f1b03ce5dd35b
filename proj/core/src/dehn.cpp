#include "grsc/dehn.hpp"

#include <algorithm>

namespace grsc {

DehnReducer::DehnReducer(Presentation p) : p_(std::move(p)) {
    min_rel_ = p_.min_relator_length();
    max_rel_ = p_.max_relator_length();
    for (const Word& r : p_.relators) {
        for (int inv = 0; inv < 2; ++inv) {
            Word base = inv ? inverse(r) : r;
            for (size_t k = 0; k < base.size(); ++k) {
                Word rho = rotate(base, k);
                size_t half = base.size() / 2;
                for (size_t lf = half + 1; lf <= base.size(); ++lf) {
                    Word s(rho.begin(), rho.begin() + lf);
                    Word t(rho.begin() + lf, rho.end());
                    repl_.emplace(std::move(s), std::pair{rho, inverse(t)});
                }
                if (base.size() % 2 == 0) {
                    Word s(rho.begin(), rho.begin() + half);
                    Word t(rho.begin() + half, rho.end());
                    Word y = inverse(t);
                    auto& v = half_[s];
                    if (std::find(v.begin(), v.end(), y) == v.end()) v.push_back(y);
                }
            }
        }
    }
}

Word DehnReducer::reduce(Word w, std::vector<Step>* trace) const {
    w = free_reduce(w);
    if (repl_.empty()) return w;
    bool changed = true;
    while (changed) {
        changed = false;
        size_t n = w.size();
        for (size_t i = 0; i < n && !changed; ++i) {
            size_t max_len = std::min(max_rel_, n - i);
            for (size_t len = max_len; len > min_rel_ / 2 && !changed; --len) {
                Word s(w.begin() + i, w.begin() + i + len);
                auto it = repl_.find(s);
                if (it == repl_.end()) continue;
                if (trace)
                    trace->push_back({w, i, len, it->second.first, it->second.second});
                Word next(w.begin(), w.begin() + i);
                next.insert(next.end(), it->second.second.begin(), it->second.second.end());
                next.insert(next.end(), w.begin() + i + len, w.end());
                w = free_reduce(next);
                changed = true;
            }
        }
    }
    return w;
}

std::vector<Word> DehnReducer::half_swaps(const Word& w) const {
    std::vector<Word> out;
    if (half_.empty()) return out;
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t len = 1; len <= w.size() - i; ++len) {
            Word s(w.begin() + i, w.begin() + i + len);
            auto it = half_.find(s);
            if (it == half_.end()) continue;
            for (const Word& y : it->second) {
                Word next(w.begin(), w.begin() + i);
                next.insert(next.end(), y.begin(), y.end());
                next.insert(next.end(), w.begin() + i + len, w.end());
                Word red = free_reduce(next);
                if (red != w) out.push_back(std::move(red));
            }
        }
    }
    return out;
}

}  // namespace grsc
