#pragma once

#include "hilbfilt/monomial.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hilbfilt {

/// The module M = R/J for a monomial ideal J, with its dimension and
/// the length of the largest finite-length submodule cached. J = 0
/// presents the free module R itself.
class ModulePresentation {
public:
    static ModulePresentation make(MonomialIdeal annihilator,
                                   std::uint64_t box_cap = kDefaultBoxCap) {
        if (annihilator.is_unit())
            throw Error(Error::Code::UnitAnnihilator, "annihilator is the unit ideal: M = 0");
        const int d = krull_dim_of_quotient(annihilator);
        if (d < 1)
            throw Error(Error::Code::ZeroDimensionalModule,
                        "module dimension must be >= 1, got 0");
        const std::uint64_t h0 = compute_h0(annihilator, box_cap);
        return ModulePresentation(std::move(annihilator), d, h0);
    }

    static ModulePresentation free_module(int ambient, std::uint64_t box_cap = kDefaultBoxCap) {
        return make(MonomialIdeal::zero(ambient), box_cap);
    }

    int ambient() const { return annihilator_.ambient(); }
    const MonomialIdeal& annihilator() const { return annihilator_; }
    int dim() const { return dim_; }
    std::uint64_t h0() const { return h0_; }

    friend bool operator==(const ModulePresentation& a, const ModulePresentation& b) {
        return a.annihilator_ == b.annihilator_;
    }
    friend bool operator!=(const ModulePresentation& a, const ModulePresentation& b) {
        return !(a == b);
    }

private:
    ModulePresentation(MonomialIdeal j, int d, std::uint64_t h0)
        : annihilator_(std::move(j)), dim_(d), h0_(h0) {}

    /// h0(M) = length of sat(J)/J, counted as monomials in sat(J)
    /// outside J. Any such monomial t has t_i < max generator exponent
    /// of x_i in J for every i (otherwise a generator witnessing
    /// t in (J : x_i^infty) would already divide t), so the count is a
    /// finite box enumeration.
    static std::uint64_t compute_h0(const MonomialIdeal& j, std::uint64_t box_cap) {
        if (j.is_zero()) return 0;
        const MonomialIdeal sat = saturate(j);
        if (sat == j) return 0;
        const int D = j.ambient();
        std::vector<int> box(D, 0);
        for (const Monomial& g : j.generators())
            for (int i = 0; i < D; ++i) box[i] = std::max(box[i], g.exponent(i));
        std::uint64_t volume = 1;
        for (int b : box) {
            volume *= static_cast<std::uint64_t>(std::max(b, 1));
            if (volume > box_cap)
                throw Error(Error::Code::BoxCapExceeded,
                            "h0 enumeration box exceeds the cap of " + std::to_string(box_cap));
        }
        std::uint64_t count = 0;
        std::vector<int> t(D, 0);
        while (true) {
            const Monomial m{std::vector<int>(t)};
            if (sat.contains(m) && !j.contains(m)) ++count;
            int i = 0;
            while (i < D && ++t[i] >= std::max(box[i], 1)) t[i++] = 0;
            if (i == D) break;
        }
        return count;
    }

    MonomialIdeal annihilator_;
    int dim_;
    std::uint64_t h0_;
};

struct ValidationIssue {
    enum class Kind {
        BaseNotPrimary,   // base ideal I is not m-primary
        ChainNotDescending, // G_n is not inside G_{n-1} modulo J
        StabilityFailure, // I*G_n is not inside G_{n+1} modulo J
    };
    Kind kind;
    int index; // the chain index n at which the inclusion fails
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    const ValidationIssue* first() const { return issues.empty() ? nullptr : &issues[0]; }
};

/// A good I-filtration of M = R/J, given by a finite prefix of terms
/// G_1 >= ... >= G_L (ideals of R, J implicit) with the I-adic tail
/// F_n = I^{n-L} G_L for n > L. Goodness beyond the prefix holds by
/// construction, so validation is finite and r(F) <= L.
class GoodFiltration {
public:
    /// Check the chain invariants without constructing. All term
    /// comparisons happen modulo J, i.e. after adding J.
    static ValidationReport validate(const ModulePresentation& module, const MonomialIdeal& base,
                                     const std::vector<MonomialIdeal>& prefix) {
        ValidationReport report;
        const MonomialIdeal& j = module.annihilator();
        if (base.is_unit() || !is_primary_to_max(base)) {
            report.issues.push_back({ValidationIssue::Kind::BaseNotPrimary, -1,
                                     base.is_unit() ? "base ideal must be proper"
                                                    : "base ideal is not m-primary"});
            return report;
        }
        std::vector<MonomialIdeal> terms; // F_0 + J, F_1 + J, ..., F_L + J
        terms.push_back(MonomialIdeal::unit(module.ambient()));
        for (const MonomialIdeal& g : prefix) terms.push_back(ideal_sum(g, j));

        for (std::size_t n = 1; n < terms.size(); ++n) {
            if (!is_subideal(terms[n], terms[n - 1])) {
                report.issues.push_back({ValidationIssue::Kind::ChainNotDescending,
                                         static_cast<int>(n),
                                         "term " + std::to_string(n) +
                                             " is not contained in term " + std::to_string(n - 1)});
                return report;
            }
        }
        for (std::size_t n = 0; n + 1 < terms.size(); ++n) {
            const MonomialIdeal product = ideal_sum(ideal_product(base, terms[n]), j);
            if (!is_subideal(product, terms[n + 1])) {
                report.issues.push_back({ValidationIssue::Kind::StabilityFailure,
                                         static_cast<int>(n),
                                         "I * term " + std::to_string(n) +
                                             " is not contained in term " + std::to_string(n + 1)});
                return report;
            }
        }
        return report;
    }

    /// Validate and construct; the reduction number is computed once here.
    static GoodFiltration make(ModulePresentation module, MonomialIdeal base,
                               std::vector<MonomialIdeal> prefix) {
        detail::require_same_ambient(module.ambient(), base.ambient());
        for (const MonomialIdeal& g : prefix) detail::require_same_ambient(module.ambient(), g.ambient());
        const ValidationReport report = validate(module, base, prefix);
        if (!report.ok()) {
            const ValidationIssue& issue = *report.first();
            throw Error(issue.kind == ValidationIssue::Kind::BaseNotPrimary
                            ? Error::Code::NotPrimary
                            : Error::Code::InvalidFiltration,
                        issue.detail);
        }
        GoodFiltration f(std::move(module), std::move(base), std::move(prefix));
        f.reduction_ = f.compute_reduction_number();
        return f;
    }

    const ModulePresentation& module() const { return module_; }
    const MonomialIdeal& base_ideal() const { return base_; }
    const std::vector<MonomialIdeal>& prefix() const { return prefix_; }
    int prefix_length() const { return static_cast<int>(prefix_.size()); }
    int reduction_number() const { return reduction_; }

    /// F_n + J as an ideal of R. F_0 is M itself, i.e. the unit ideal.
    MonomialIdeal term_at(int n) const {
        if (n < 0) throw Error(Error::Code::ParseError, "filtration index must be >= 0");
        if (n == 0) return MonomialIdeal::unit(module_.ambient());
        const MonomialIdeal& j = module_.annihilator();
        const int L = prefix_length();
        if (n <= L) return ideal_sum(prefix_[n - 1], j);
        MonomialIdeal g = L == 0 ? MonomialIdeal::unit(module_.ambient()) : prefix_[L - 1];
        return ideal_sum(ideal_product(ideal_power(base_, n - L), g), j);
    }

    friend bool operator==(const GoodFiltration& a, const GoodFiltration& b) {
        return a.module_ == b.module_ && a.base_ == b.base_ && a.prefix_ == b.prefix_;
    }

private:
    GoodFiltration(ModulePresentation module, MonomialIdeal base, std::vector<MonomialIdeal> prefix)
        : module_(std::move(module)), base_(std::move(base)), prefix_(std::move(prefix)),
          reduction_(0) {}

    /// r(F) = 1 + the last n with F_{n+1} != I*F_n modulo J (0 if none).
    /// The tail is I-adic by construction, so only n < L can fail.
    int compute_reduction_number() const {
        const MonomialIdeal& j = module_.annihilator();
        int r = 0;
        MonomialIdeal current = term_at(0);
        for (int n = 0; n < prefix_length(); ++n) {
            const MonomialIdeal next = term_at(n + 1);
            if (ideal_sum(ideal_product(base_, current), j) != next) r = n + 1;
            current = next;
        }
        return r;
    }

    ModulePresentation module_;
    MonomialIdeal base_;
    std::vector<MonomialIdeal> prefix_;
    int reduction_;
};

/// Incremental term chain F_0+J, F_1+J, ... for one filtration; grows on
/// demand so Hilbert sampling reuses each power instead of recomputing.
class TermChain {
public:
    explicit TermChain(const GoodFiltration& f) : f_(&f) {
        terms_.push_back(f.term_at(0));
    }

    const MonomialIdeal& at(int n) {
        while (static_cast<int>(terms_.size()) <= n) {
            const int next = static_cast<int>(terms_.size());
            if (next <= f_->prefix_length())
                terms_.push_back(f_->term_at(next));
            else
                terms_.push_back(ideal_sum(ideal_product(f_->base_ideal(), terms_.back()),
                                           f_->module().annihilator()));
        }
        return terms_[n];
    }

private:
    const GoodFiltration* f_;
    std::vector<MonomialIdeal> terms_;
};

/// The I-adic filtration {I^n M}: prefix [I], reduction number 0.
inline GoodFiltration adic_filtration(const MonomialIdeal& base, const ModulePresentation& module) {
    if (base.is_unit() || !is_primary_to_max(base))
        throw Error(Error::Code::NotPrimary,
                    "adic filtration wants a proper m-primary base ideal");
    return GoodFiltration::make(module, base, {base});
}

/// The parameter filtration M >= F1 >= Q F1 >= Q^2 F1 >= ...; a good
/// Q-filtration with reduction number at most 1. Needs Q <= F1 mod J so
/// that Q F_0 <= F_1.
inline GoodFiltration e_filtration(const MonomialIdeal& f1, const MonomialIdeal& q,
                                   const ModulePresentation& module) {
    if (q.is_unit() || !is_primary_to_max(q))
        throw Error(Error::Code::NotPrimary, "parameter ideal must be proper and m-primary");
    if (!is_subideal(q, ideal_sum(f1, module.annihilator())))
        throw Error(Error::Code::NotQFiltration,
                    "not a Q-filtration: Q is not contained in F_1 modulo the annihilator");
    return GoodFiltration::make(module, q, {f1});
}

/// F modulo the largest finite-length submodule: same base ideal and
/// prefix over R/sat(J). The quotient has h0 = 0 and the same dimension.
inline GoodFiltration quotient_by_h0(const GoodFiltration& f,
                                     std::uint64_t box_cap = kDefaultBoxCap) {
    const MonomialIdeal sat = saturate(f.module().annihilator());
    ModulePresentation quotient = ModulePresentation::make(sat, box_cap);
    return GoodFiltration::make(std::move(quotient), f.base_ideal(), f.prefix());
}

} // namespace hilbfilt
