#pragma once

#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reproduce.hpp"

namespace hororigid {

using Json = nlohmann::ordered_json;

namespace detail {

// Appends coefficient*w[j] to out with the sign folded into the separator.
inline void append_term(std::string& out, std::string coeff, bool negative, int j) {
    const std::string basis = "w[" + std::to_string(j + 1) + "]";
    if (out.empty()) out = negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += coeff.empty() ? basis : coeff + "*" + basis;
}

// "a1", "2*a1", "a1 - 1", "2*a1 + 3" for slope*a1 + offset with slope > 0.
inline std::string affine_text(const Int& slope, const Int& offset) {
    std::string s = slope == 1 ? "a1" : to_string(slope) + "*a1";
    if (offset > 0) s += " + " + to_string(offset);
    if (offset < 0) s += " - " + to_string(Int(-offset));
    return s;
}

} // namespace detail

/// "5*w[1] - w[2] - 2*w[6]", "0" for the zero weight.
template <ExactInteger T>
std::string format_weight(const BasicWeight<T>& w) {
    std::string out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const T& x = w[j];
        if (x == 0) continue;
        const T mag = x < 0 ? T(-x) : x;
        detail::append_term(out, mag == 1 ? "" : to_string(mag), x < 0, static_cast<int>(j));
    }
    return out.empty() ? "0" : out;
}

/// Weight affine in a1, written with a1 as a symbol: offset + a1*slope.
inline std::string format_affine_weight(const Weight& offset, const Weight& slope) {
    std::string out;
    for (std::size_t j = 0; j < offset.size(); ++j) {
        Int s = slope[j], o = offset[j];
        if (s == 0 && o == 0) continue;
        bool neg = false;
        if (s < 0 || (s == 0 && o < 0)) {
            neg = true;
            s = -s;
            o = -o;
        }
        std::string coeff;
        if (s == 0) coeff = o == 1 ? "" : to_string(o);
        else if (o == 0) coeff = s == 1 ? "a1" : to_string(s) + "*a1";
        else coeff = "(" + detail::affine_text(s, o) + ")";
        detail::append_term(out, coeff, neg, static_cast<int>(j));
    }
    return out.empty() ? "0" : out;
}

/// w_0^I(chi) - rho for the orbit, with a1 kept symbolic.
inline std::string symbolic_lowered(const HorosphericalDatum& d, Orbit o) {
    auto at = [&](long long a) {
        auto e = d;
        e.a1 = a;
        return apply_word(e.rs, longest_parabolic_word(e.rs, orbit_levi(e, o)), orbit_chi(e, o)) - rho(e.rs);
    };
    const auto base = at(0);
    return format_affine_weight(base, at(1) - base);
}

template <ExactInteger T>
std::string weight_tuple(const BasicWeight<T>& w) {
    std::string s;
    for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "," : "") + to_string(w[j]);
    return s;
}

/// "H1 = V(1,1), dim 8" or "all H^i = 0".
inline std::string format_cohomology(const RootSystem& rs, const Cohomology& h) {
    if (!h.nonzero) return "all H^i = 0";
    return "H" + std::to_string(h.degree) + " = V(" + weight_tuple(h.highest_weight) + "), dim " +
           to_string(weyl_dimension(rs, h.highest_weight));
}

inline std::string root_ref_text(const RootRef& r) { return r.imaginary ? "im" : std::to_string(r.index + 1); }

inline Json cohomology_json(const RootSystem& rs, const Cohomology& h) {
    Json j;
    if (!h.nonzero) {
        j["outcome"] = "all_zero";
        return j;
    }
    j["outcome"] = "nonzero";
    j["degree"] = h.degree;
    j["highest_weight"] = format_weight(h.highest_weight);
    j["dim"] = to_string(weyl_dimension(rs, h.highest_weight));
    return j;
}

inline Json orbit_json(const HorosphericalDatum& d, const OrbitAnalysis& a) {
    Json j;
    j["orbit"] = orbit_name(a.orbit);
    auto levi = orbit_levi(d, a.orbit).complement(d.rs);
    std::string removed;
    for (int k : levi) removed += (removed.empty() ? "" : ",") + std::to_string(k + 1);
    j["levi_complement"] = removed;
    j["chi"] = format_weight(a.chi);
    j["lowered"] = format_weight(a.lowered);
    j["lowered_symbolic"] = symbolic_lowered(d, a.orbit);
    j["h0"] = cohomology_json(d.rs, a.h0);
    j["h1"] = cohomology_json(d.rs, a.h1);
    j["h2"] = cohomology_json(d.rs, a.h2);
    j["theorem_verdict"] = verdict_name(a.verdict);
    j["A"] = to_string(a.link.A);
    j["B"] = to_string(a.link.B);
    j["beta_linked_only_to_allowed"] = a.link.beta_linked_only_to_allowed;
    j["c"] = to_string(a.cd.c);
    j["d"] = to_string(a.cd.d);
    j["alpha_prime"] = root_ref_text(a.cd.alpha_prime);
    j["lambda"] = to_string(a.lambda);
    j["agreement"] = a.agreement;
    return j;
}

inline Json report_json(const RigidityReport& r) {
    const auto& d = r.datum;
    Json j;
    j["group"] = d.rs.name();
    j["beta"] = std::to_string(d.beta + 1);
    j["alpha0"] = root_ref_text(d.alpha0);
    j["alpha1"] = root_ref_text(d.alpha1);
    j["a1"] = to_string(d.a1);
    j["case"] = d.case_label ? Json(*d.case_label) : Json(nullptr);
    j["Y"] = orbit_json(d, r.Y);
    j["Z"] = orbit_json(d, r.Z);
    j["h1_total_dim"] = to_string(r.h1_total_dim);
    j["h2_total_dim"] = to_string(r.h2_total_dim);
    j["locally_rigid"] = r.locally_rigid;
    j["fano"] = fano_name(r.fano.status);
    j["a_beta"] = to_string(r.fano.a_beta);
    j["a_alpha1"] = to_string(r.fano.a_alpha1);
    j["obstruction_space_trivial"] = r.obstruction_space_trivial;
    j["unobstructed_reason"] = r.unobstructed_reason;
    j["agreement"] = r.agreement;
    return j;
}

inline std::string format_report_text(const RigidityReport& r) {
    const auto& d = r.datum;
    std::ostringstream os;
    os << "datum: " << describe(d) << " a1=" << d.a1;
    if (d.case_label) os << " [" << *d.case_label << "]";
    os << "\n";
    for (const auto* a : {&r.Y, &r.Z}) {
        os << "orbit " << orbit_name(a->orbit) << ": chi = " << format_weight(a->chi) << "\n";
        os << "  lowered = " << format_weight(a->lowered) << "  (" << symbolic_lowered(d, a->orbit) << ")\n";
        os << "  " << format_cohomology(d.rs, a->result) << "\n";
        os << "  A=" << a->link.A << " B=" << a->link.B << " c=" << a->cd.c << " d=" << a->cd.d
           << " alpha'=" << root_ref_text(a->cd.alpha_prime) << " lambda=" << a->lambda
           << " theorem: " << verdict_name(a->verdict) << (a->agreement ? "" : " (DISAGREES)") << "\n";
    }
    os << "h1_total_dim = " << r.h1_total_dim << ", h2_total_dim = " << r.h2_total_dim << "\n";
    os << "fano: " << fano_name(r.fano.status) << " (a_beta=" << r.fano.a_beta << ", a_alpha1=" << r.fano.a_alpha1
       << ")\n";
    os << "summary: " << (r.locally_rigid ? "locally rigid" : "not locally rigid") << "; obstruction space "
       << (r.obstruction_space_trivial ? "trivial" : "nontrivial") << " (" << r.unobstructed_reason << ")\n";
    return os.str();
}

class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void only_fields(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw FormatError(where + ": expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!ok.count(it.key())) throw FormatError(where + ": unknown field '" + it.key() + "'");
}

template <class T>
T field(const Json& j, const char* name, const std::string& where) {
    if (!j.contains(name)) throw FormatError(where + ": missing field '" + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw FormatError(where + ": field '" + name + "' has the wrong type");
    }
}

template <class T>
T field_or(const Json& j, const char* name, T fallback, const std::string& where) {
    return j.contains(name) ? field<T>(j, name, where) : fallback;
}

inline Orbit orbit_field(const Json& j, const std::string& where) {
    const auto s = field_or<std::string>(j, "orbit", "Y", where);
    if (s == "Y") return Orbit::Y;
    if (s == "Z") return Orbit::Z;
    throw FormatError(where + ": orbit must be \"Y\" or \"Z\"");
}

inline ParamBinding where_field(const Json& j, const std::string& where) {
    ParamBinding b;
    if (!j.contains("where")) return b;
    const auto& w = j.at("where");
    if (!w.is_object()) throw FormatError(where + ": 'where' must be an object");
    for (auto it = w.begin(); it != w.end(); ++it) {
        if (!it.value().is_number_integer()) throw FormatError(where + ": 'where' values must be integers");
        b[it.key()] = it.value().get<long long>();
    }
    return b;
}

inline std::optional<long long> opt_int(const Json& j, const char* name, const std::string& where) {
    if (!j.contains(name) || j.at(name).is_null()) return std::nullopt;
    return field<long long>(j, name, where);
}

inline Json where_json(const ParamBinding& b) {
    Json w = Json::object();
    for (const auto& [k, v] : b) w[k] = v;
    return w;
}

} // namespace detail

/// Parses a catalog override document: {"families": [ ... ]}. Unknown fields are rejected.
inline std::vector<FamilyRecord> parse_catalog(const Json& doc) {
    using namespace detail;
    only_fields(doc, {"families"}, "catalog");
    const auto fams = doc.contains("families") ? doc.at("families") : Json::array();
    if (!fams.is_array()) throw FormatError("catalog: 'families' must be an array");
    std::vector<FamilyRecord> out;
    for (std::size_t i = 0; i < fams.size(); ++i) {
        const auto& f = fams[i];
        const std::string at = "families[" + std::to_string(i) + "]";
        only_fields(f, {"label", "group", "beta", "alpha0", "alpha1", "params", "partner", "drawn", "partner_drawn", "table",
                        "expected", "a1_from"},
                    at);
        FamilyRecord r;
        r.label = field<std::string>(f, "label", at);
        r.group = field<std::string>(f, "group", at);
        r.beta = field<std::string>(f, "beta", at);
        r.alpha0 = field<std::string>(f, "alpha0", at);
        r.alpha1 = field<std::string>(f, "alpha1", at);
        r.partner = field_or<bool>(f, "partner", false, at);
        r.drawn = field_or<bool>(f, "drawn", true, at);
        r.partner_drawn = field_or<bool>(f, "partner_drawn", false, at);
        r.a1_from = field_or<long long>(f, "a1_from", 0, at);
        if (f.contains("params")) {
            const auto& ps = f.at("params");
            if (!ps.is_array()) throw FormatError(at + ": 'params' must be an array");
            for (std::size_t k = 0; k < ps.size(); ++k) {
                const std::string pat = at + ".params[" + std::to_string(k) + "]";
                only_fields(ps[k], {"name", "from", "to", "types"}, pat);
                r.params.push_back({field<std::string>(ps[k], "name", pat), field<std::string>(ps[k], "from", pat),
                                    field<std::string>(ps[k], "to", pat), field_or<bool>(ps[k], "types", false, pat)});
            }
        }
        if (f.contains("table")) {
            const auto& ts = f.at("table");
            if (!ts.is_array()) throw FormatError(at + ": 'table' must be an array");
            for (std::size_t k = 0; k < ts.size(); ++k) {
                const std::string tat = at + ".table[" + std::to_string(k) + "]";
                only_fields(ts[k], {"label", "orbit", "A", "B", "c", "d", "a1", "where"}, tat);
                TableRow t;
                t.label = field_or<std::string>(ts[k], "label", r.label, tat);
                t.orbit = orbit_field(ts[k], tat);
                t.A = field<long long>(ts[k], "A", tat);
                t.B = field<long long>(ts[k], "B", tat);
                t.c = field<long long>(ts[k], "c", tat);
                t.d = opt_int(ts[k], "d", tat);
                t.a1 = opt_int(ts[k], "a1", tat);
                t.where = where_field(ts[k], tat);
                r.table.push_back(std::move(t));
            }
        }
        if (f.contains("expected")) {
            const auto& es = f.at("expected");
            if (!es.is_array()) throw FormatError(at + ": 'expected' must be an array");
            for (std::size_t k = 0; k < es.size(); ++k) {
                const std::string eat = at + ".expected[" + std::to_string(k) + "]";
                only_fields(es[k], {"label", "bullet", "orbit", "a1_min", "a1_max", "g0", "where"}, eat);
                ExpectedHit e;
                e.label = field_or<std::string>(es[k], "label", r.label, eat);
                e.bullet = field_or<std::string>(es[k], "bullet", e.label, eat);
                e.orbit = orbit_field(es[k], eat);
                e.a1_min = field<long long>(es[k], "a1_min", eat);
                e.a1_max = opt_int(es[k], "a1_max", eat);
                if (es[k].contains("g0") && !es[k].at("g0").is_null()) e.g0 = field<std::string>(es[k], "g0", eat);
                e.where = where_field(es[k], eat);
                r.expected.push_back(std::move(e));
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<FamilyRecord> parse_catalog(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("catalog: ") + e.what());
    }
    return parse_catalog(doc);
}

inline Json catalog_json(const std::vector<FamilyRecord>& records) {
    using namespace detail;
    Json fams = Json::array();
    for (const auto& r : records) {
        Json f;
        f["label"] = r.label;
        f["group"] = r.group;
        f["beta"] = r.beta;
        f["alpha0"] = r.alpha0;
        f["alpha1"] = r.alpha1;
        Json ps = Json::array();
        for (const auto& p : r.params) {
            Json q{{"name", p.name}, {"from", p.from}, {"to", p.to}};
            if (p.types) q["types"] = true;
            ps.push_back(q);
        }
        f["params"] = ps;
        f["partner"] = r.partner;
        f["drawn"] = r.drawn;
        f["partner_drawn"] = r.partner_drawn;
        f["a1_from"] = r.a1_from;
        Json ts = Json::array();
        for (const auto& t : r.table) {
            Json row{{"label", t.label}, {"orbit", orbit_name(t.orbit)}, {"A", t.A}, {"B", t.B}, {"c", t.c}};
            row["d"] = t.d ? Json(*t.d) : Json(nullptr);
            row["a1"] = t.a1 ? Json(*t.a1) : Json(nullptr);
            if (!t.where.empty()) row["where"] = where_json(t.where);
            ts.push_back(row);
        }
        f["table"] = ts;
        Json es = Json::array();
        for (const auto& e : r.expected) {
            Json x{{"label", e.label}, {"bullet", e.bullet}, {"orbit", orbit_name(e.orbit)}, {"a1_min", e.a1_min}};
            x["a1_max"] = e.a1_max ? Json(*e.a1_max) : Json(nullptr);
            if (e.g0) x["g0"] = *e.g0;
            if (!e.where.empty()) x["where"] = where_json(e.where);
            es.push_back(x);
        }
        f["expected"] = es;
        fams.push_back(f);
    }
    return Json{{"families", fams}};
}

} // namespace hororigid
