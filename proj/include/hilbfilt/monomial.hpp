#pragma once

#include "hilbfilt/bigint.hpp"
#include "hilbfilt/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace hilbfilt {

inline constexpr std::uint64_t kDefaultBoxCap = 100'000'000;

/// A monomial x_1^{e_1} ... x_D^{e_D}, stored as its exponent vector.
/// The ambient variable count D is the vector length.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        for (int e : exps_)
            if (e < 0) throw Error(Error::Code::ParseError, "negative exponent in monomial");
    }

    static Monomial unit(int ambient) { return Monomial(std::vector<int>(ambient, 0)); }

    /// Pure power x_i^e (0-based variable index).
    static Monomial pure_power(int ambient, int var, int e) {
        std::vector<int> v(ambient, 0);
        v.at(var) = e;
        return Monomial(std::move(v));
    }

    int ambient() const { return static_cast<int>(exps_.size()); }
    int exponent(int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    int total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    bool is_unit() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }

    bool divides(const Monomial& t) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > t.exps_[i]) return false;
        return true;
    }

    Monomial times(const Monomial& t) const {
        std::vector<int> v(exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] + t.exps_[i];
        return Monomial(std::move(v));
    }

    Monomial lcm(const Monomial& t) const {
        std::vector<int> v(exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(exps_[i], t.exps_[i]);
        return Monomial(std::move(v));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<int> exps_;
};

/// Canonical generator order: ascending total degree, then descending
/// lexicographic exponent vector (so m^2 lists as x^2, xy, y^2).
inline bool canonical_less(const Monomial& a, const Monomial& b) {
    const int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
}

namespace detail {

inline void require_same_ambient(int a, int b) {
    if (a != b)
        throw Error(Error::Code::DimensionMismatch,
                    "operands live in different ambient rings (" + std::to_string(a) + " vs " +
                        std::to_string(b) + " variables)");
}

/// Minimal, canonically sorted generating set. A generator is redundant
/// exactly when a distinct generator divides it; sorting by degree first
/// means any divisor of g precedes g, so one kept-scan suffices.
inline std::vector<Monomial> minimal_sorted(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : kept)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

} // namespace detail

/// A monomial ideal of R = k[x_1,...,x_D], held in canonical form:
/// minimal generators, sorted. Equal ideals have identical representations,
/// so equality is a plain vector comparison. The zero ideal has no
/// generators; the unit ideal is generated by the unit monomial.
class MonomialIdeal {
public:
    /// Canonicalize an arbitrary generating set.
    static MonomialIdeal minimalize(int ambient, std::vector<Monomial> gens) {
        for (const Monomial& g : gens) detail::require_same_ambient(ambient, g.ambient());
        return MonomialIdeal(ambient, detail::minimal_sorted(std::move(gens)));
    }

    static MonomialIdeal zero(int ambient) { return MonomialIdeal(ambient, {}); }
    static MonomialIdeal unit(int ambient) {
        return MonomialIdeal(ambient, {Monomial::unit(ambient)});
    }

    int ambient() const { return ambient_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    /// Membership: some generator divides t.
    bool contains(const Monomial& t) const {
        detail::require_same_ambient(ambient_, t.ambient());
        for (const Monomial& g : gens_)
            if (g.divides(t)) return true;
        return false;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        detail::require_same_ambient(a.ambient_, b.ambient_);
        return a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
    MonomialIdeal(int ambient, std::vector<Monomial> canonical)
        : ambient_(ambient), gens_(std::move(canonical)) {}

    int ambient_;
    std::vector<Monomial> gens_;
};

inline bool contains(const MonomialIdeal& ideal, const Monomial& t) { return ideal.contains(t); }

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require_same_ambient(a.ambient(), b.ambient());
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::minimalize(a.ambient(), std::move(gens));
}

inline MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require_same_ambient(a.ambient(), b.ambient());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& g : a.generators())
        for (const Monomial& h : b.generators()) gens.push_back(g.times(h));
    return MonomialIdeal::minimalize(a.ambient(), std::move(gens));
}

inline MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require_same_ambient(a.ambient(), b.ambient());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& g : a.generators())
        for (const Monomial& h : b.generators()) gens.push_back(g.lcm(h));
    return MonomialIdeal::minimalize(a.ambient(), std::move(gens));
}

inline MonomialIdeal ideal_power(const MonomialIdeal& ideal, int n) {
    if (n < 0) throw Error(Error::Code::ParseError, "ideal power wants a non-negative exponent");
    MonomialIdeal result = MonomialIdeal::unit(ideal.ambient());
    for (int i = 0; i < n; ++i) result = ideal_product(result, ideal);
    return result;
}

/// I <= J as ideals: every generator of I lies in J.
inline bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require_same_ambient(a.ambient(), b.ambient());
    for (const Monomial& g : a.generators())
        if (!b.contains(g)) return false;
    return true;
}

inline bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

/// m-primary test: every variable has a pure power among the generators.
inline bool is_primary_to_max(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) return true;
    const int D = ideal.ambient();
    std::vector<bool> covered(D, false);
    for (const Monomial& g : ideal.generators()) {
        int support_var = -1;
        bool pure = true;
        for (int i = 0; i < D; ++i) {
            if (g.exponent(i) > 0) {
                if (support_var >= 0) {
                    pure = false;
                    break;
                }
                support_var = i;
            }
        }
        if (pure && support_var >= 0) covered[support_var] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

namespace detail {

/// Count monomials outside the ideal, recursing on the last variable.
/// For each exponent e of x_D below its pure power, the standard
/// monomials with x_D-part e correspond to standard monomials of the
/// slice ideal {g restricted to x_1..x_{D-1} : g_D <= e}. The slice
/// only changes at e-values that occur as a generator's x_D-exponent,
/// so equal slices are counted once and weighted by the interval length.
inline std::uint64_t count_standard(const std::vector<std::vector<int>>& gens, int nvars) {
    for (const auto& g : gens) {
        bool unit = true;
        for (int i = 0; i < nvars; ++i)
            if (g[i] > 0) {
                unit = false;
                break;
            }
        if (unit) return 0;
    }
    if (nvars == 0) return 1; // the residue field: just the monomial 1
    const int last = nvars - 1;

    int pure = -1;
    std::vector<int> breaks;
    for (const auto& g : gens) {
        bool pure_last = g[last] > 0;
        for (int i = 0; i < last && pure_last; ++i)
            if (g[i] > 0) pure_last = false;
        if (pure_last && (pure < 0 || g[last] < pure)) pure = g[last];
        breaks.push_back(g[last]);
    }
    if (pure < 0)
        throw Error(Error::Code::InfiniteColength, "ideal is not m-primary: no pure power");

    breaks.push_back(0);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::uint64_t total = 0;
    for (std::size_t bi = 0; bi < breaks.size() && breaks[bi] < pure; ++bi) {
        const int e = breaks[bi];
        const int next = (bi + 1 < breaks.size()) ? std::min(breaks[bi + 1], pure) : pure;
        std::vector<std::vector<int>> slice;
        for (const auto& g : gens)
            if (g[last] <= e) slice.emplace_back(g.begin(), g.begin() + last);
        // re-minimalize the projected slice
        std::sort(slice.begin(), slice.end(), [](const auto& a, const auto& b) {
            const int da = std::accumulate(a.begin(), a.end(), 0);
            const int db = std::accumulate(b.begin(), b.end(), 0);
            return da != db ? da < db : a > b;
        });
        slice.erase(std::unique(slice.begin(), slice.end()), slice.end());
        std::vector<std::vector<int>> kept;
        for (const auto& g : slice) {
            bool redundant = false;
            for (const auto& h : kept) {
                bool div = true;
                for (int i = 0; i < last; ++i)
                    if (h[i] > g[i]) {
                        div = false;
                        break;
                    }
                if (div) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(g);
        }
        total += static_cast<std::uint64_t>(next - e) * count_standard(kept, last);
    }
    return total;
}

} // namespace detail

/// Pure-power box of an m-primary ideal: b_i is the least exponent with
/// x_i^{b_i} among the generators. Every standard monomial lies inside
/// the box, whose volume gates instance size.
inline std::vector<int> pure_power_box(const MonomialIdeal& ideal) {
    const int D = ideal.ambient();
    std::vector<int> box(D, -1);
    for (const Monomial& g : ideal.generators()) {
        int var = -1;
        bool pure = true;
        for (int i = 0; i < D; ++i)
            if (g.exponent(i) > 0) {
                if (var >= 0) {
                    pure = false;
                    break;
                }
                var = i;
            }
        if (pure && var >= 0 && (box[var] < 0 || g.exponent(var) < box[var]))
            box[var] = g.exponent(var);
    }
    return box;
}

/// Length of R/I: the number of monomials outside I. Requires I to be
/// m-primary (or the unit ideal). Instances whose pure-power box exceeds
/// the cap are rejected instead of ground through.
inline std::uint64_t colength(const MonomialIdeal& ideal, std::uint64_t box_cap = kDefaultBoxCap) {
    if (ideal.is_unit()) return 0;
    if (!is_primary_to_max(ideal))
        throw Error(Error::Code::InfiniteColength, "colength of a non-m-primary ideal is infinite");

    const std::vector<int> box = pure_power_box(ideal);
    std::uint64_t volume = 1;
    for (int b : box) {
        volume *= static_cast<std::uint64_t>(b);
        if (volume > box_cap)
            throw Error(Error::Code::BoxCapExceeded,
                        "pure-power box exceeds the cap of " + std::to_string(box_cap));
    }

    std::vector<std::vector<int>> gens;
    gens.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) gens.push_back(g.exponents());
    return detail::count_standard(gens, ideal.ambient());
}

/// Saturation (J : m^infty) = intersection over i of (J : x_i^infty),
/// where (J : x_i^infty) is generated by the generators of J with their
/// x_i-exponent set to zero.
inline MonomialIdeal saturate(const MonomialIdeal& ideal) {
    const int D = ideal.ambient();
    if (ideal.is_zero() || ideal.is_unit()) return ideal;
    MonomialIdeal result = MonomialIdeal::unit(D);
    bool first = true;
    for (int var = 0; var < D; ++var) {
        std::vector<Monomial> gens;
        gens.reserve(ideal.generators().size());
        for (const Monomial& g : ideal.generators()) {
            std::vector<int> e = g.exponents();
            e[var] = 0;
            gens.emplace_back(std::move(e));
        }
        MonomialIdeal sat_var = MonomialIdeal::minimalize(D, std::move(gens));
        result = first ? sat_var : ideal_intersection(result, sat_var);
        first = false;
    }
    return result;
}

/// Krull dimension of R/J: D minus the size of a minimum variable set
/// meeting the support of every generator. Ambient counts are desk
/// scale, so the cover search is exhaustive over subsets.
inline int krull_dim_of_quotient(const MonomialIdeal& ideal) {
    if (ideal.is_unit())
        throw Error(Error::Code::UndefinedDimension, "R/R is the zero module");
    const int D = ideal.ambient();
    if (ideal.is_zero()) return D;

    std::vector<unsigned> supports;
    supports.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) {
        unsigned mask = 0;
        for (int i = 0; i < D; ++i)
            if (g.exponent(i) > 0) mask |= 1u << i;
        supports.push_back(mask);
    }

    int best = D;
    for (unsigned subset = 0; subset < (1u << D); ++subset) {
        const int size = __builtin_popcount(subset);
        if (size >= best) continue;
        bool covers = true;
        for (unsigned s : supports)
            if ((s & subset) == 0) {
                covers = false;
                break;
            }
        if (covers) best = size;
    }
    return D - best;
}

} // namespace hilbfilt
