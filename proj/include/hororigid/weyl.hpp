#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "root_system.hpp"

namespace hororigid {

/// Reduced word; letters[0] is applied last.
struct WeylWord {
    std::vector<int> letters;

    std::size_t length() const { return letters.size(); }
    WeylWord inverse() const { return WeylWord{{letters.rbegin(), letters.rend()}}; }
    friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// Stores the simple roots of the Levi, not the roots removed from it.
struct ParabolicSpec {
    std::vector<int> levi_roots;

    static ParabolicSpec borel() { return {}; }
    static ParabolicSpec whole(const RootSystem& rs) {
        ParabolicSpec p;
        for (int j = 0; j < rs.rank(); ++j) p.levi_roots.push_back(j);
        return p;
    }
    /// Levi S \ removed.
    static ParabolicSpec from_complement(const RootSystem& rs, const std::vector<int>& removed) {
        ParabolicSpec p;
        for (int j = 0; j < rs.rank(); ++j)
            if (std::find(removed.begin(), removed.end(), j) == removed.end()) p.levi_roots.push_back(j);
        return p;
    }
    std::vector<int> complement(const RootSystem& rs) const {
        std::vector<int> out;
        for (int j = 0; j < rs.rank(); ++j)
            if (!contains(j)) out.push_back(j);
        return out;
    }
    bool contains(int j) const { return std::find(levi_roots.begin(), levi_roots.end(), j) != levi_roots.end(); }
    void validate(const RootSystem& rs) const {
        for (int j : levi_roots)
            if (j < 0 || j >= rs.rank()) throw std::invalid_argument("Levi root index out of range: " + std::to_string(j + 1));
    }
};

/// Greedy descent from the I-part of rho: reflect at the lowest positive
/// I-coordinate until none is left. Yields a reduced word for w_0^I.
inline WeylWord longest_parabolic_word(const RootSystem& rs, const ParabolicSpec& p) {
    p.validate(rs);
    std::vector<int> t(rs.rank(), 0);
    for (int j : p.levi_roots) t[j] = 1;
    std::vector<int> applied;
    while (true) {
        int pick = -1;
        for (int j = 0; j < rs.rank() && pick < 0; ++j)
            if (p.contains(j) && t[j] > 0) pick = j;
        if (pick < 0) break;
        const int v = t[pick];
        for (int k = 0; k < rs.rank(); ++k) t[k] -= v * rs.cartan(pick, k);
        applied.push_back(pick);
    }
    return WeylWord{{applied.rbegin(), applied.rend()}};
}

template <ExactInteger T>
BasicWeight<T> apply_word(const RootSystem& rs, const WeylWord& w, BasicWeight<T> lambda) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) lambda = reflect_weight(rs, *it, std::move(lambda));
    return lambda;
}

template <ExactInteger T>
BasicCoroot<T> apply_word(const RootSystem& rs, const WeylWord& w, BasicCoroot<T> c) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) c = reflect_coroot(rs, *it, std::move(c));
    return c;
}

/// Either every cohomology group vanishes, or exactly H^degree = V(highest_weight).
template <ExactInteger T = Int>
struct BasicCohomology {
    bool nonzero = false;
    int degree = -1;
    BasicWeight<T> highest_weight;

    static BasicCohomology all_zero() { return {}; }
    static BasicCohomology in_degree(int d, BasicWeight<T> w) { return {true, d, std::move(w)}; }

    bool nonzero_in(int i) const { return nonzero && degree == i; }
    /// Outcome restricted to degree i.
    BasicCohomology at(int i) const { return nonzero_in(i) ? *this : all_zero(); }
    friend bool operator==(const BasicCohomology&, const BasicCohomology&) = default;
};

using Cohomology = BasicCohomology<Int>;

template <ExactInteger T>
bool is_singular(const RootSystem& rs, const BasicWeight<T>& mu) {
    for (const auto& c : rs.positive_coroots())
        if (pairing(mu, c) == 0) return true;
    return false;
}

enum class PickPolicy { LowestFirst, HighestFirst };

/// Moves a regular mu into the strictly antidominant chamber by simple
/// reflections; degree = number of steps, module = V(-w(mu) - rho).
template <ExactInteger T>
BasicCohomology<T> bott_reduce(const RootSystem& rs, BasicWeight<T> mu, PickPolicy policy = PickPolicy::LowestFirst) {
    if (static_cast<int>(mu.size()) != rs.rank()) throw std::invalid_argument("bott_reduce: dimension mismatch");
    if (is_singular(rs, mu)) return BasicCohomology<T>::all_zero();
    const std::size_t bound = rs.positive_roots().size();
    std::size_t steps = 0;
    while (true) {
        int pick = -1;
        if (policy == PickPolicy::LowestFirst) {
            for (int j = 0; j < rs.rank() && pick < 0; ++j)
                if (mu[j] > 0) pick = j;
        } else {
            for (int j = rs.rank() - 1; j >= 0 && pick < 0; --j)
                if (mu[j] > 0) pick = j;
        }
        if (pick < 0) break;
        mu = reflect_weight(rs, pick, std::move(mu));
        if (++steps > bound) throw std::logic_error("bott_reduce: step bound |R+| exceeded");
    }
    return BasicCohomology<T>::in_degree(static_cast<int>(steps), -mu - rho<T>(rs));
}

template <ExactInteger T>
bool levi_dominant(const ParabolicSpec& p, const BasicWeight<T>& chi) {
    for (int j : p.levi_roots)
        if (chi[j] < 0) return false;
    return true;
}

/// Cohomology of the bundle induced from the Levi module of highest weight chi:
/// reduce w_0^I(chi) - rho. H^0 is nonzero exactly when chi is antidominant off I.
template <ExactInteger T>
BasicCohomology<T> bwb_cohomology(const RootSystem& rs, const ParabolicSpec& p, const BasicWeight<T>& chi) {
    p.validate(rs);
    if (static_cast<int>(chi.size()) != rs.rank()) throw std::invalid_argument("bwb_cohomology: dimension mismatch");
    if (!levi_dominant(p, chi)) throw std::invalid_argument("bwb_cohomology: weight is not dominant for the Levi");
    const auto low = apply_word(rs, longest_parabolic_word(rs, p), chi);
    return bott_reduce(rs, low - rho<T>(rs));
}

/// Dual convention: the bundle whose sections are V(lambda) for G-dominant
/// lambda. Equivalent to bwb_cohomology at chi = -w_0^I(lambda).
template <ExactInteger T>
BasicCohomology<T> section_cohomology(const RootSystem& rs, const ParabolicSpec& p, const BasicWeight<T>& lambda) {
    p.validate(rs);
    if (static_cast<int>(lambda.size()) != rs.rank()) throw std::invalid_argument("section_cohomology: dimension mismatch");
    if (!levi_dominant(p, lambda)) throw std::invalid_argument("section_cohomology: weight is not dominant for the Levi");
    return bott_reduce(rs, -lambda - rho<T>(rs));
}

/// Weyl dimension formula, exact.
template <ExactInteger T>
T weyl_dimension(const RootSystem& rs, const BasicWeight<T>& lambda) {
    if (!lambda.all_nonneg()) throw std::invalid_argument("weyl_dimension: weight is not dominant");
    const auto shifted = lambda + rho<T>(rs);
    const auto r = rho<T>(rs);
    T num = 1, den = 1;
    for (const auto& c : rs.positive_coroots()) {
        num *= pairing(shifted, c);
        den *= pairing(r, c);
    }
    if (num % den != 0) throw std::logic_error("weyl_dimension: non-integral quotient");
    return num / den;
}

} // namespace hororigid
