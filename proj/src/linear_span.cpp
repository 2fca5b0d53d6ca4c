#include "carleman/linear_span.hpp"

namespace carleman {

namespace {

void axpy(LinearReducer::Combination& acc, const Rational& c, const LinearReducer::Combination& x) {
    for (const auto& [tag, v] : x) {
        auto [it, inserted] = acc.try_emplace(tag, c * v);
        if (!inserted) {
            it->second += c * v;
            if (it->second == 0) acc.erase(it);
        }
    }
}

}  // namespace

LinearReducer::Reduction LinearReducer::reduce(const Polynomial& v) const {
    Reduction out{v, {}};
    if (v.is_zero()) return out;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        if (out.remainder.is_zero()) break;
        const auto& key = it->first;
        GrlexLess less;
        if (less(out.remainder.leading_exponents(), key)) continue;
        Rational c = out.remainder.coefficient(key);
        if (c == 0) continue;
        c /= it->second.vec.leading_coefficient();
        out.remainder -= it->second.vec * c;
        axpy(out.combination, c, it->second.combo);
    }
    return out;
}

bool LinearReducer::insert(const Polynomial& v, std::size_t tag) {
    Reduction r = reduce(v);
    if (r.remainder.is_zero()) return false;
    Combination combo;
    combo[tag] = 1;
    axpy(combo, -1, r.combination);
    Exponents key = r.remainder.leading_exponents();
    rows_.emplace(std::move(key), Row{std::move(r.remainder), std::move(combo)});
    return true;
}

}  // namespace carleman
