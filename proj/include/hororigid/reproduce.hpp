#pragma once

#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace hororigid {

struct BulletTally {
    bool zero_list = false;
    std::size_t expected = 0;
    std::size_t found = 0;
};

/// Matches, misses and extras; merge() is associative.
struct DiffReport {
    std::vector<std::string> matches;
    std::vector<std::string> misses;
    std::vector<std::string> extras;
    std::vector<std::string> disagreements;
    std::map<std::string, BulletTally> bullets;
    std::size_t data_checked = 0;
    std::size_t rows_checked = 0; // distinct (label, orbit) table rows

    bool ok() const { return misses.empty() && extras.empty() && disagreements.empty(); }

    void merge(const DiffReport& o) {
        matches.insert(matches.end(), o.matches.begin(), o.matches.end());
        misses.insert(misses.end(), o.misses.begin(), o.misses.end());
        extras.insert(extras.end(), o.extras.begin(), o.extras.end());
        disagreements.insert(disagreements.end(), o.disagreements.begin(), o.disagreements.end());
        for (const auto& [k, t] : o.bullets) {
            auto& b = bullets[k];
            b.zero_list = t.zero_list;
            b.expected += t.expected;
            b.found += t.found;
        }
        data_checked += o.data_checked;
        rows_checked += o.rows_checked;
    }

    /// Bullets with at least one expected instance and none missing, split by a1 = 0 list.
    std::pair<std::size_t, std::size_t> bullets_matched() const {
        std::size_t z = 0, p = 0;
        for (const auto& [k, t] : bullets)
            if (t.expected > 0 && t.found == t.expected) ++(t.zero_list ? z : p);
        return {z, p};
    }
};

inline std::string describe(const HorosphericalDatum& d) {
    auto ref = [](const RootRef& r) { return r.imaginary ? std::string("im") : std::to_string(r.index + 1); };
    return d.rs.name() + " beta=" + std::to_string(d.beta + 1) + " alpha0=" + ref(d.alpha0) + " alpha1=" + ref(d.alpha1);
}

inline std::string label_set(const std::vector<CatalogInstance>& insts, const std::vector<std::size_t>& ids) {
    std::set<std::string> ls;
    for (auto i : ids) ls.insert(insts[i].label);
    std::string s;
    for (const auto& l : ls) s += (s.empty() ? "" : ",") + l;
    return s;
}

/// Sweeps the catalog at a1 = 0..max_a1 (a1 = 0 only for data carrying an
/// unprimed label) and diffs nontrivial H^1 against the expected hits.
inline DiffReport reproduce_proposition(const std::vector<FamilyRecord>& records, int max_rank, int max_a1) {
    const auto insts = instantiate(records, max_rank);
    const auto data = dedupe(insts);
    DiffReport rep;
    for (const auto& rec : records)
        for (const auto& e : rec.expected) rep.bullets[e.bullet].zero_list = e.a1_min == 0 && e.a1_max && *e.a1_max == 0;
    for (const auto& cd : data) {
        bool any_unprimed = false;
        long long from = std::numeric_limits<long long>::max();
        for (auto i : cd.instances) {
            any_unprimed |= !is_prime_label(insts[i].label);
            from = std::min(from, insts[i].a1_from);
        }
        const auto labels = label_set(insts, cd.instances);
        for (int a1 = static_cast<int>(std::max<long long>(from, any_unprimed ? 0 : 1)); a1 <= max_a1; ++a1) {
            auto d = cd.datum;
            d.a1 = a1;
            const auto r = rigidity_report(d);
            ++rep.data_checked;
            for (const auto* oa : {&r.Y, &r.Z}) {
                const Orbit o = oa->orbit;
                std::set<std::string> bullets;
                for (auto i : cd.instances) {
                    const auto& inst = insts[i];
                    for (const auto& e : records[inst.record].expected) {
                        if (e.label != inst.label || e.orbit != o) continue;
                        if (a1 < e.a1_min || (e.a1_max && a1 > *e.a1_max)) continue;
                        if (e.g0 && *e.g0 != inst.g0) continue;
                        if (!binding_matches(e.where, inst.params)) continue;
                        bullets.insert(e.bullet);
                    }
                }
                const bool hit = oa->h1.nonzero;
                const std::string what = "[" + labels + "] " + describe(d) + " orbit " + orbit_name(o) + " a1=" + std::to_string(a1);
                for (const auto& b : bullets) {
                    ++rep.bullets[b].expected;
                    if (hit) ++rep.bullets[b].found;
                }
                if (hit && !bullets.empty()) rep.matches.push_back(what);
                if (!hit && !bullets.empty()) rep.misses.push_back(what);
                if (hit && bullets.empty()) rep.extras.push_back(what);
                if (!oa->agreement) rep.disagreements.push_back(what);
            }
        }
    }
    return rep;
}

inline DiffReport reproduce_proposition(int max_rank = 9, int max_a1 = 6) {
    return reproduce_proposition(builtin_catalog(), max_rank, max_a1);
}

/// Compares (A, B, c, d) and the a1 annotation of every table row against
/// every matching instance. `only` restricts to one label.
inline DiffReport reproduce_appendix_table(const std::vector<FamilyRecord>& records, int max_rank, int max_a1,
                                           const std::string& only = "") {
    const auto insts = instantiate(records, max_rank);
    DiffReport rep;
    std::set<std::string> distinct;
    for (const auto& rec : records) {
        for (const auto& row : rec.table) {
            if (!only.empty() && row.label != only) continue;
            std::size_t n = 0;
            bool row_ok = true;
            for (const auto& inst : insts) {
                if (inst.label != row.label || &records[inst.record] != &rec) continue;
                if (!binding_matches(row.where, inst.params)) continue;
                ++n;
                const auto& d = inst.datum;
                const auto link = linkage_AB(d, row.orbit);
                const auto cd = cd_coefficients(d, orbit_source(row.orbit));
                std::set<long long> hits;
                for (int a1 = static_cast<int>(inst.a1_from); a1 <= max_a1; ++a1) {
                    auto e = d;
                    e.a1 = a1;
                    if (orbit_analysis(e, row.orbit).h1.nonzero) hits.insert(a1);
                }
                std::set<long long> want;
                if (row.a1) want.insert(*row.a1);
                std::string bad;
                if (link.A != row.A) bad += " A=" + link.A.str();
                if (link.B != row.B) bad += " B=" + link.B.str();
                if (cd.c != row.c) bad += " c=" + cd.c.str();
                if (row.d && cd.d != *row.d) bad += " d=" + cd.d.str();
                if (hits != want) {
                    bad += " a1-hits={";
                    for (auto h : hits) bad += std::to_string(h) + ";";
                    bad += "}";
                }
                if (!bad.empty()) {
                    row_ok = false;
                    rep.misses.push_back("row " + row.label + " " + orbit_name(row.orbit) + ": " + describe(d) + bad);
                }
            }
            if (n == 0) {
                row_ok = false;
                rep.misses.push_back("row " + row.label + " " + orbit_name(row.orbit) + ": no instance in range");
            }
            if (row_ok) rep.matches.push_back("row " + row.label + " " + orbit_name(row.orbit) + " (" + std::to_string(n) + " instances)");
            distinct.insert(row.label + " " + orbit_name(row.orbit));
            rep.data_checked += n;
        }
    }
    rep.rows_checked = distinct.size();
    return rep;
}

inline DiffReport reproduce_appendix_table(int max_rank = 9, int max_a1 = 6, const std::string& only = "") {
    return reproduce_appendix_table(builtin_catalog(), max_rank, max_a1, only);
}

/// Which group shapes brute_scan sweeps.
struct ScanConfig {
    int max_rank = 4;
    int max_a1 = 3;
    bool g0_alone = true;
    bool imaginary = true;
    bool g0_g1 = false;
    bool g0_g1_g2 = false;
    int max_factor_rank = 2;
    int ceiling = 9;
};

struct ScanReport {
    std::size_t data_checked = 0;
    std::vector<std::string> hits;
    std::vector<std::string> disagreements;
    std::vector<std::string> outside_catalog;
    std::vector<std::string> not_applicable;
};

namespace detail {

inline void scan_group(const std::string& group, const ScanConfig& cfg, const std::map<std::string, std::string>& known,
                       ScanReport& rep) {
    const auto rs = make_root_system(group);
    const auto& comps = rs.components();
    bool has_trivial = false, has_torus = false;
    for (const auto& c : comps) {
        has_trivial |= c.kind == ComponentKind::Trivial;
        has_torus |= c.kind == ComponentKind::Torus;
    }
    std::vector<RootRef> refs;
    for (int j = 0; j < rs.rank(); ++j) refs.push_back(RootRef::concrete(j));
    for (int b = 0; b < rs.rank(); ++b) {
        if (rs.component_of(b) != 0) continue;
        std::vector<RootRef> a0s = refs, a1s = refs;
        if (has_trivial) a0s.push_back(RootRef::none());
        if (has_torus) a1s.push_back(RootRef::none());
        for (const auto& a0 : a0s) {
            for (const auto& a1 : a1s) {
                HorosphericalDatum d{rs, b, a0, a1, 0, std::nullopt};
                try {
                    d.validate();
                } catch (const DatumError&) {
                    continue;
                }
                // the extra factors must carry a root, otherwise the shape belongs to a smaller menu
                bool used_all = true;
                for (std::size_t k = 1; k < comps.size(); ++k) {
                    const auto& c = comps[k];
                    bool used = false;
                    if (c.is_simple()) {
                        used = (!a0.imaginary && rs.component_of(a0.index) == static_cast<int>(k)) ||
                               (!a1.imaginary && rs.component_of(a1.index) == static_cast<int>(k));
                    } else if (c.kind == ComponentKind::Trivial) {
                        used = a0.imaginary;
                    } else {
                        used = a1.imaginary;
                    }
                    used_all &= used;
                }
                if (!used_all) continue;
                const auto it = known.find(d.canonical_key());
                for (int a = 0; a <= cfg.max_a1; ++a) {
                    d.a1 = a;
                    ++rep.data_checked;
                    for (Orbit o : {Orbit::Y, Orbit::Z}) {
                        const auto oa = orbit_analysis(d, o);
                        const std::string what = describe(d) + " orbit " + orbit_name(o) + " a1=" + std::to_string(a);
                        if (!oa.agreement) rep.disagreements.push_back(what);
                        if (oa.verdict == Verdict::NotApplicable) rep.not_applicable.push_back(what);
                        if (oa.h1.nonzero) {
                            rep.hits.push_back(what + (it == known.end() ? "" : " [" + it->second + "]"));
                            if (it == known.end()) rep.outside_catalog.push_back(what);
                        }
                    }
                }
            }
        }
    }
}

} // namespace detail

/// Exhaustive sweep of well-formed data over the configured group shapes.
inline ScanReport brute_scan(const ScanConfig& cfg) {
    if (cfg.max_rank > cfg.ceiling || cfg.max_rank < 1) throw std::invalid_argument("scan: max_rank outside 1.." + std::to_string(cfg.ceiling));
    if (cfg.max_a1 < 0) throw std::invalid_argument("scan: max_a1 must be non-negative");
    std::map<std::string, std::string> known;
    {
        const auto insts = instantiate(builtin_catalog(), cfg.max_rank);
        for (const auto& cd : dedupe(insts)) known[cd.datum.canonical_key()] = label_set(insts, cd.instances);
    }
    ScanReport rep;
    const auto g0s = simple_types(1, cfg.max_rank);
    std::vector<std::string> extras{""};
    if (cfg.imaginary) {
        for (const char* e : {"x-", "xC*", "x-xC*"}) extras.push_back(e);
    }
    std::vector<std::string> g1s;
    if (cfg.g0_g1 || cfg.g0_g1_g2) g1s = simple_types(1, cfg.max_factor_rank);
    for (const auto& g0 : g0s) {
        if (cfg.g0_alone)
            for (const auto& e : extras) detail::scan_group(g0 + e, cfg, known, rep);
        if (cfg.g0_g1) {
            for (const auto& g1 : g1s) {
                detail::scan_group(g0 + "x" + g1, cfg, known, rep);
                if (cfg.imaginary) {
                    detail::scan_group(g0 + "x" + g1 + "x-", cfg, known, rep);
                    detail::scan_group(g0 + "x" + g1 + "xC*", cfg, known, rep);
                }
            }
        }
        if (cfg.g0_g1_g2) {
            for (const auto& g1 : g1s)
                for (const auto& g2 : g1s) detail::scan_group(g0 + "x" + g1 + "x" + g2, cfg, known, rep);
        }
    }
    return rep;
}

/// Diffs both readings of the XI.4' diagram against the expected hits.
struct ReadingComparison {
    DiffReport tied;
    DiffReport literal;
};

inline ReadingComparison compare_xi4_readings(int max_rank, int max_a1) {
    std::vector<FamilyRecord> tied, literal;
    for (const auto& r : builtin_catalog())
        if (r.label == "XI.4'" || r.label == "XI.4") tied.push_back(r);
    literal = xi4_literal_reading();
    for (const auto& r : builtin_catalog())
        if (r.label == "XI.4") literal.push_back(r);
    return {reproduce_proposition(tied, max_rank, max_a1), reproduce_proposition(literal, max_rank, max_a1)};
}

} // namespace hororigid
