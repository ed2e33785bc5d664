#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matchforge/polynomial.hpp"

namespace matchforge {

/// Distribution of forcing (or anti-forcing) numbers read off a generating
/// polynomial: exponent support with per-value counts. A constant polynomial
/// (unique perfect matching, F(G,x) = 1) reports the empty-support sentinel
/// with min/max unset.
struct SpectrumReport {
    std::vector<std::pair<int, BigInt>> counts;  // value -> multiplicity, ascending
    std::optional<int> min;
    std::optional<int> max;
    bool contiguous = true;  // no gaps in the support
    BigInt total;            // p(1)
};

inline SpectrumReport make_spectrum(const IntPolynomial& p) {
    SpectrumReport r;
    r.total = p.eval_one();
    if (p.degree() <= 0) return r;  // constant: empty support
    int lo = p.min_exponent();
    r.min = lo;
    r.max = p.degree();
    for (int e = lo; e <= p.degree(); ++e) {
        const BigInt& c = p.coeff(static_cast<std::size_t>(e));
        if (c == 0) {
            r.contiguous = false;
            continue;
        }
        r.counts.push_back({e, c});
    }
    return r;
}

}  // namespace matchforge
