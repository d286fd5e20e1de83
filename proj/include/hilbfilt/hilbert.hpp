#pragma once

#include "hilbfilt/bigint.hpp"
#include "hilbfilt/filtration.hpp"

#include <cstdint>
#include <vector>

namespace hilbfilt {

struct FitConfig {
    std::uint64_t box_cap = kDefaultBoxCap;
    int horizon_cap = 256;
    /// Overrides the adaptive starting horizon when positive; the re-fit
    /// stability check uses this to force a doubled horizon.
    int initial_horizon = 0;
};

/// Samples of the Hilbert-Samuel function H(n) = len(M/F_{n+1}) together
/// with the fitted coefficients e_0..e_d of the eventual polynomial
/// P(n) = sum_i (-1)^i e_i C(n+d-i, d-i) and the postulation number
/// (least n0 with H(n) = P(n) for all checked n >= n0).
struct HilbertData {
    int dim = 0;
    std::vector<BigInt> coefficients; // e_0..e_d
    int postulation = 0;
    int horizon = 0;
    std::vector<std::uint64_t> samples; // H(0..horizon)

    BigInt polynomial_at(long long n) const {
        BigInt value = 0;
        for (int i = 0; i <= dim; ++i) {
            const BigInt term = coefficients[i] * binomial(n + dim - i, dim - i);
            value += (i % 2 == 0) ? term : -term;
        }
        return value;
    }
};

/// xi_s = max(e_0, |e_1|, ..., |e_s|); non-decreasing in s by construction.
struct XiVector {
    std::vector<BigInt> values; // xi_0..xi_d

    const BigInt& at(int s) const { return values.at(s); }
    const BigInt& last() const { return values.back(); }
};

inline XiVector xi_vector(const std::vector<BigInt>& coefficients) {
    if (coefficients.empty() || coefficients[0] < 1)
        throw Error(Error::Code::InvalidMultiplicity,
                    "e_0 must be >= 1 for a module of positive dimension");
    XiVector xi;
    xi.values.reserve(coefficients.size());
    BigInt running = coefficients[0];
    for (const BigInt& e : coefficients) {
        const BigInt a = abs(e);
        if (a > running) running = a;
        xi.values.push_back(running);
    }
    return xi;
}

/// H(n) = len(M/F_{n+1}); terms already carry the annihilator.
inline std::uint64_t hilbert_samuel(const GoodFiltration& f, int n,
                                    std::uint64_t box_cap = kDefaultBoxCap) {
    return colength(f.term_at(n + 1), box_cap);
}

namespace detail {

/// Forward difference of order k at position n over BigInt samples.
inline BigInt forward_difference(const std::vector<BigInt>& h, int k, int n) {
    BigInt acc = 0;
    for (int j = 0; j <= k; ++j) {
        const BigInt term = binomial(k, j) * h[n + j];
        acc += ((k - j) % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace detail

/// Sample H, detect polynomial stabilization, and extract the coefficients
/// by exact integer differencing in the binomial basis.
///
/// The horizon starts at max(L+d+2, 2(d+2)) and doubles until the
/// (d+1)-st difference of H vanishes on the trailing window of length
/// max(d+2, 8); a hard cap bounds runtime, and reaching it raises an
/// error rather than truncating silently. Stabilization detection is
/// heuristic; the test suite cross-validates by re-fitting at a doubled
/// horizon.
inline HilbertData fit_hilbert_data(const GoodFiltration& f, const FitConfig& config = {}) {
    const int d = f.module().dim();
    const int window = std::max(d + 2, 8);
    int horizon = config.initial_horizon > 0
                      ? config.initial_horizon
                      : std::max(f.prefix_length() + d + 2, 2 * (d + 2));
    if (horizon > config.horizon_cap) horizon = config.horizon_cap;

    TermChain chain(f);
    std::vector<std::uint64_t> samples;
    std::vector<BigInt> h;

    int stable_from = -1;
    while (true) {
        while (static_cast<int>(samples.size()) <= horizon) {
            const int n = static_cast<int>(samples.size());
            const std::uint64_t value = colength(chain.at(n + 1), config.box_cap);
            samples.push_back(value);
            h.emplace_back(value);
        }
        // Delta^{d+1} H(n) needs samples n..n+d+1, so the last computable
        // start is horizon - d - 1; require the trailing `window` of them
        // to vanish.
        const int last_start = horizon - d - 1;
        const int first_start = last_start - window + 1;
        if (first_start >= 0) {
            bool flat = true;
            for (int n = first_start; n <= last_start && flat; ++n)
                flat = detail::forward_difference(h, d + 1, n) == 0;
            if (flat) {
                stable_from = first_start;
                break;
            }
        }
        if (horizon >= config.horizon_cap)
            throw Error(Error::Code::NonStabilized,
                        "Hilbert function did not stabilize within horizon cap " +
                            std::to_string(config.horizon_cap));
        horizon = std::min(2 * horizon, config.horizon_cap);
    }

    // Extraction at the stable point s: H agrees with a degree-d polynomial
    // on [s, horizon]. e_0 = Delta^d H(s); then peel each binomial term off
    // the running residual: e_i = (-1)^i Delta^{d-i} R_i(s).
    const int s = stable_from;
    HilbertData data;
    data.dim = d;
    data.horizon = horizon;
    data.samples = samples;

    std::vector<BigInt> residual(h.begin() + s, h.end()); // indexed by n - s
    std::vector<BigInt> e(d + 1);
    e[0] = detail::forward_difference(residual, d, 0);
    if (e[0] < 1)
        throw Error(Error::Code::InvalidMultiplicity,
                    "fitted e_0 = " + e[0].str() + "; degree mismatch with module dimension");
    for (int i = 1; i <= d; ++i) {
        for (std::size_t k = 0; k < residual.size(); ++k) {
            const long long n = s + static_cast<long long>(k);
            const BigInt term = e[i - 1] * binomial(n + d - (i - 1), d - (i - 1));
            residual[k] -= ((i - 1) % 2 == 0) ? term : -term;
        }
        const BigInt diff = detail::forward_difference(residual, d - i, 0);
        e[i] = (i % 2 == 0) ? diff : -diff;
    }
    data.coefficients = std::move(e);

    int postulation = 0;
    for (int n = horizon; n >= 0; --n) {
        if (data.polynomial_at(n) != h[n]) {
            postulation = n + 1;
            break;
        }
    }
    data.postulation = postulation;
    return data;
}

inline int postulation_number(const GoodFiltration& f, const FitConfig& config = {}) {
    return fit_hilbert_data(f, config).postulation;
}

} // namespace hilbfilt
