#pragma once

#include <string>
#include <vector>

#include "datum.hpp"
#include "weyl.hpp"

namespace hororigid {

enum class Orbit { Y, Z };

inline const char* orbit_name(Orbit o) { return o == Orbit::Y ? "Y" : "Z"; }

/// c, d and alpha' for source alpha_i, computed over the Levi S \ {alpha_j, beta}.
struct CdCoefficients {
    Int c = 0;
    Int d = 0;
    RootRef alpha_prime = RootRef::none();
    friend bool operator==(const CdCoefficients&, const CdCoefficients&) = default;
};

enum class Source { Alpha0, Alpha1 };

inline const RootRef& source_root(const HorosphericalDatum& d, Source s) { return s == Source::Alpha0 ? d.alpha0 : d.alpha1; }
inline const RootRef& other_root(const HorosphericalDatum& d, Source s) { return s == Source::Alpha0 ? d.alpha1 : d.alpha0; }

/// Orbit Y works over S \ {beta, alpha0}; orbit Z over S \ {beta, alpha1}.
inline ParabolicSpec orbit_levi(const HorosphericalDatum& d, Orbit o) {
    std::vector<int> removed{d.beta};
    const RootRef& a = o == Orbit::Y ? d.alpha0 : d.alpha1;
    if (!a.imaginary) removed.push_back(a.index);
    return ParabolicSpec::from_complement(d.rs, removed);
}

inline Source orbit_source(Orbit o) { return o == Orbit::Y ? Source::Alpha1 : Source::Alpha0; }

inline Weight chi_Y(const HorosphericalDatum& d) {
    auto w = zero_weight(d.rs);
    if (!d.alpha0.imaginary) w[d.alpha0.index] -= 1;
    if (!d.alpha1.imaginary) w[d.alpha1.index] += 1;
    w[d.beta] += d.a1;
    return w;
}

inline Weight chi_Z(const HorosphericalDatum& d) { return -chi_Y(d); }

inline Weight orbit_chi(const HorosphericalDatum& d, Orbit o) { return o == Orbit::Y ? chi_Y(d) : chi_Z(d); }

namespace detail {

inline ParabolicSpec source_levi(const HorosphericalDatum& d, Source s) {
    std::vector<int> removed{d.beta};
    const RootRef& aj = other_root(d, s);
    if (!aj.imaginary) removed.push_back(aj.index);
    return ParabolicSpec::from_complement(d.rs, removed);
}

// w must be the longest word of source_levi(d, s).
inline CdCoefficients cd_from_word(const HorosphericalDatum& d, Source s, const WeylWord& w) {
    const RootRef& ai = source_root(d, s);
    const RootRef& aj = other_root(d, s);
    CdCoefficients out;
    if (ai.imaginary) return out;
    if (!aj.imaginary) out.c = apply_word(d.rs, w, simple_coroot(d.rs, aj.index))[ai.index];
    out.d = apply_word(d.rs, w, simple_coroot(d.rs, d.beta))[ai.index];
    const auto img = apply_word(d.rs, w, simple_coroot(d.rs, ai.index));
    int gamma = -1;
    for (int k = 0; k < d.rs.rank(); ++k) {
        if (img[k] == 0) continue;
        if (img[k] != -1 || gamma >= 0) throw std::logic_error("cd_coefficients: image of alpha_i is not minus a simple root");
        gamma = k;
    }
    if (gamma < 0) throw std::logic_error("cd_coefficients: image of alpha_i vanished");
    out.alpha_prime = RootRef::concrete(gamma);
    return out;
}

} // namespace detail

inline CdCoefficients cd_coefficients(const HorosphericalDatum& d, Source s) {
    if (source_root(d, s).imaginary) return {};
    return detail::cd_from_word(d, s, longest_parabolic_word(d.rs, detail::source_levi(d, s)));
}

struct Linkage {
    Int A = 0;
    Int B = 0;
    bool beta_linked_only_to_allowed = true;
    friend bool operator==(const Linkage&, const Linkage&) = default;
};

namespace detail {

inline Linkage linkage_from(const HorosphericalDatum& d, Orbit o, const RootRef& prime) {
    const RootRef& first = o == Orbit::Y ? d.alpha0 : d.alpha1;
    Linkage out;
    if (!first.imaginary) out.A = -d.rs.cartan(d.beta, first.index);
    if (!prime.imaginary) out.B = -d.rs.cartan(d.beta, prime.index);
    for (int k = 0; k < d.rs.rank(); ++k) {
        if (!d.rs.linked(d.beta, k)) continue;
        if (!first.is(k) && !prime.is(k)) out.beta_linked_only_to_allowed = false;
    }
    return out;
}

inline Int lambda_from(const HorosphericalDatum& d, Orbit o, const CdCoefficients& cd) {
    return o == Orbit::Y ? cd.d + d.a1 - 1 : cd.d - d.a1 - 1;
}

} // namespace detail

/// Orbit Y: A = -<beta, alpha0^vee>, B = -<beta, alpha1'^vee>, allowed {alpha0, alpha1'}.
/// Orbit Z: indices 0 and 1 exchanged.
inline Linkage linkage_AB(const HorosphericalDatum& d, Orbit o) {
    return detail::linkage_from(d, o, cd_coefficients(d, orbit_source(o)).alpha_prime);
}

inline Int orbit_lambda(const HorosphericalDatum& d, Orbit o) {
    return detail::lambda_from(d, o, cd_coefficients(d, orbit_source(o)));
}

/// Both alpha in one G2 factor away from beta.
inline bool is_g2_pair_shape(const HorosphericalDatum& d) {
    if (d.alpha0.imaginary || d.alpha1.imaginary) return false;
    const int k0 = d.rs.component_of(d.alpha0.index);
    const int k1 = d.rs.component_of(d.alpha1.index);
    if (k0 != k1 || k0 == d.rs.component_of(d.beta)) return false;
    const auto& c = d.rs.components()[k0];
    return c.letter == 'G' && c.rank == 2;
}

enum class Verdict { Trivial, Nontrivial, NotApplicable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::Nontrivial: return "nontrivial";
    default: return "not applicable";
    }
}

namespace detail {

inline Verdict verdict_from(const HorosphericalDatum& d, const CdCoefficients& cd, const Linkage& link, const Int& lambda) {
    if (is_g2_pair_shape(d)) return Verdict::NotApplicable;
    if (cd.c > 2) return Verdict::NotApplicable;
    const bool a = lambda > 0 && cd.c < 2;
    const bool b = link.beta_linked_only_to_allowed;
    const bool c = link.A * lambda + cd.c - 2 < 0 && link.B * lambda - 2 < 0;
    return a && b && c ? Verdict::Nontrivial : Verdict::Trivial;
}

} // namespace detail

/// Predicted nontriviality of H^1 on the orbit from conditions (a), (b), (c).
/// Not applicable to the G2-pair shape or when c exceeds 2.
inline Verdict theorem_verdict(const HorosphericalDatum& d, Orbit o) {
    const auto cd = cd_coefficients(d, orbit_source(o));
    return detail::verdict_from(d, cd, detail::linkage_from(d, o, cd.alpha_prime), detail::lambda_from(d, o, cd));
}

struct OrbitAnalysis {
    Orbit orbit = Orbit::Y;
    Weight chi;
    Weight lowered;
    Cohomology result;
    Cohomology h0, h1, h2;
    Verdict verdict = Verdict::NotApplicable;
    Linkage link;
    Int lambda = 0;
    CdCoefficients cd;
    bool agreement = true;
};

inline OrbitAnalysis orbit_analysis(const HorosphericalDatum& d, Orbit o) {
    OrbitAnalysis a;
    a.orbit = o;
    a.chi = orbit_chi(d, o);
    const auto w = longest_parabolic_word(d.rs, orbit_levi(d, o));
    a.lowered = apply_word(d.rs, w, a.chi) - rho(d.rs);
    a.result = bott_reduce(d.rs, a.lowered);
    a.h0 = a.result.at(0);
    a.h1 = a.result.at(1);
    a.h2 = a.result.at(2);
    const Source s = orbit_source(o);
    if (!source_root(d, s).imaginary) a.cd = detail::cd_from_word(d, s, w);
    a.link = detail::linkage_from(d, o, a.cd.alpha_prime);
    a.lambda = detail::lambda_from(d, o, a.cd);
    a.verdict = detail::verdict_from(d, a.cd, a.link, a.lambda);
    if (a.verdict != Verdict::NotApplicable) a.agreement = (a.verdict == Verdict::Nontrivial) == a.h1.nonzero;
    return a;
}

enum class FanoStatus { Fano, WeakFano, Neither };

inline const char* fano_name(FanoStatus f) {
    switch (f) {
    case FanoStatus::Fano: return "Fano";
    case FanoStatus::WeakFano: return "weak Fano";
    default: return "neither";
    }
}

struct FanoData {
    FanoStatus status = FanoStatus::Neither;
    Int a_beta = 0;
    Int a_alpha1 = 0;
};

/// a_gamma = 2 - <sum of positive roots on S \ {beta, alpha0, alpha1}, gamma^vee>,
/// a_gamma = 1 for imaginary gamma; Fano iff a1 a_alpha1 < a_beta.
inline FanoData fano_status(const HorosphericalDatum& d) {
    std::vector<int> rest;
    for (int j = 0; j < d.rs.rank(); ++j)
        if (j != d.beta && !d.alpha0.is(j) && !d.alpha1.is(j)) rest.push_back(j);
    std::vector<long long> sum(d.rs.rank(), 0);
    for (const auto& r : d.rs.positive_roots_on(rest))
        for (int i = 0; i < d.rs.rank(); ++i) sum[i] += r[i];
    auto a_of = [&](const RootRef& g) -> Int {
        if (g.imaginary) return 1;
        long long p = 0;
        for (int i = 0; i < d.rs.rank(); ++i) p += sum[i] * d.rs.cartan(i, g.index);
        return Int(2 - p);
    };
    FanoData f;
    f.a_beta = a_of(RootRef::concrete(d.beta));
    f.a_alpha1 = a_of(d.alpha1);
    const Int lhs = d.a1 * f.a_alpha1;
    f.status = lhs < f.a_beta ? FanoStatus::Fano : lhs == f.a_beta ? FanoStatus::WeakFano : FanoStatus::Neither;
    return f;
}

struct ObstructionVerdict {
    bool trivial = true;
    std::string reason;
    /// False when a sufficient condition claims vanishing but H^2 is nonzero.
    bool agreement = true;
};

inline ObstructionVerdict obstruction_verdict(const HorosphericalDatum&, const OrbitAnalysis& y, const OrbitAnalysis& z,
                                              const FanoData& f) {
    ObstructionVerdict v;
    v.trivial = !y.h2.nonzero && !z.h2.nonzero;
    const bool weak = f.status != FanoStatus::Neither;
    if (weak) {
        v.reason = "weak Fano";
        v.agreement = v.trivial;
    } else if (!v.trivial) {
        v.reason = std::string("H^2 nonzero on orbit ") + (y.h2.nonzero ? "Y" : "Z");
    } else if (y.result.nonzero && z.result.nonzero) {
        v.reason = "single nonzero degree";
    } else {
        v.reason = "direct vanishing";
    }
    return v;
}

inline ObstructionVerdict obstruction_verdict(const HorosphericalDatum& d) {
    return obstruction_verdict(d, orbit_analysis(d, Orbit::Y), orbit_analysis(d, Orbit::Z), fano_status(d));
}

struct RigidityReport {
    HorosphericalDatum datum;
    OrbitAnalysis Y, Z;
    Int h1_total_dim = 0;
    Int h2_total_dim = 0;
    bool locally_rigid = true;
    FanoData fano;
    bool obstruction_space_trivial = true;
    std::string unobstructed_reason;
    /// Theorem/oracle and sufficient-condition/oracle cross-checks.
    bool agreement = true;
};

inline Int degree_dim(const RootSystem& rs, const Cohomology& h) {
    return h.nonzero ? weyl_dimension(rs, h.highest_weight) : Int(0);
}

inline RigidityReport rigidity_report(const HorosphericalDatum& d) {
    d.validate();
    RigidityReport r;
    r.datum = d;
    r.Y = orbit_analysis(d, Orbit::Y);
    r.Z = orbit_analysis(d, Orbit::Z);
    r.h1_total_dim = degree_dim(d.rs, r.Y.h1) + degree_dim(d.rs, r.Z.h1);
    r.h2_total_dim = degree_dim(d.rs, r.Y.h2) + degree_dim(d.rs, r.Z.h2);
    r.locally_rigid = !r.Y.h1.nonzero && !r.Z.h1.nonzero;
    r.fano = fano_status(d);
    const auto ob = obstruction_verdict(d, r.Y, r.Z, r.fano);
    r.obstruction_space_trivial = ob.trivial;
    r.unobstructed_reason = ob.reason;
    r.agreement = r.Y.agreement && r.Z.agreement && ob.agreement;
    return r;
}

} // namespace hororigid
