#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "group_spec.hpp"
#include "rigidity.hpp"

namespace hororigid {

/// Integer parameter (from..to) or, with `types`, every simple type whose rank lies in from..to.
struct ParamRange {
    std::string name;
    std::string from;
    std::string to;
    bool types = false;
};

using ParamBinding = std::map<std::string, long long>;

/// Expected (A, B, c, d) for one label and orbit; a1 is the unique value with
/// nontrivial H^1 on that orbit, absent when none exists.
struct TableRow {
    std::string label;
    Orbit orbit = Orbit::Y;
    long long A = 0, B = 0, c = 0;
    std::optional<long long> d;
    std::optional<long long> a1;
    ParamBinding where;
};

/// Nontrivial H^1 expected on `orbit` for a1 in [a1_min, a1_max].
struct ExpectedHit {
    std::string label;
    std::string bullet;
    Orbit orbit = Orbit::Y;
    long long a1_min = 0;
    std::optional<long long> a1_max;
    std::optional<std::string> g0;
    ParamBinding where;
};

/// One family: group template, root placements "component:index" or "im",
/// parameter ranges and expected values.
struct FamilyRecord {
    std::string label;
    std::string group;
    std::string beta, alpha0, alpha1;
    std::vector<ParamRange> params;
    bool partner = false;
    bool drawn = false;
    bool partner_drawn = false;
    std::vector<TableRow> table;
    std::vector<ExpectedHit> expected;
    /// Smallest a1 for which the family is defined.
    long long a1_from = 0;
};

class CatalogError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime_label(const std::string& l) { return !l.empty() && l.back() == '\''; }
inline std::string toggle_prime(const std::string& l) { return is_prime_label(l) ? l.substr(0, l.size() - 1) : l + "'"; }

/// Sum of integer literals and variables, e.g. "m-1", "i+1", "R".
inline long long eval_expr(const std::string& e, const ParamBinding& vars) {
    long long total = 0;
    int sign = 1;
    bool expect_term = true;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) { return CatalogError("expression '" + e + "': " + why); };
    while (i < e.size()) {
        const char ch = e[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (ch == '+' || ch == '-') {
            if (expect_term && ch == '+') throw fail("unexpected '+'");
            if (expect_term) sign = -sign;
            else sign = ch == '-' ? -1 : 1;
            expect_term = true;
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            if (!expect_term) throw fail("missing operator");
            std::size_t j = i;
            while (j < e.size() && std::isdigit(static_cast<unsigned char>(e[j]))) ++j;
            total += sign * std::stoll(e.substr(i, j - i));
            i = j;
            sign = 1;
            expect_term = false;
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            if (!expect_term) throw fail("missing operator");
            std::size_t j = i;
            while (j < e.size() && (std::isalnum(static_cast<unsigned char>(e[j])) || e[j] == '_')) ++j;
            const auto name = e.substr(i, j - i);
            const auto it = vars.find(name);
            if (it == vars.end()) throw fail("unknown variable '" + name + "'");
            total += sign * it->second;
            i = j;
            sign = 1;
            expect_term = false;
        } else {
            throw fail(std::string("unexpected character '") + ch + "'");
        }
    }
    if (expect_term) throw fail("incomplete");
    return total;
}

namespace detail {

inline std::vector<std::string> split_outside_braces(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '{') ++depth;
        if (ch == '}') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

/// Expands "A{m}xA{n}", "{G0}xG2", "B{m}x-" to a concrete group spec.
inline std::string expand_group(const std::string& tmpl, const ParamBinding& vars, const std::map<std::string, std::string>& types) {
    std::string out;
    for (const auto& tok : detail::split_outside_braces(tmpl, 'x')) {
        if (!out.empty()) out += "x";
        if (tok.size() > 2 && tok.front() == '{' && tok.back() == '}') {
            const auto it = types.find(tok.substr(1, tok.size() - 2));
            if (it == types.end()) throw CatalogError("unknown type parameter in '" + tok + "'");
            out += it->second;
        } else if (tok.size() > 3 && tok[1] == '{' && tok.back() == '}') {
            out += tok[0] + std::to_string(eval_expr(tok.substr(2, tok.size() - 3), vars));
        } else {
            out += tok;
        }
    }
    return out;
}

inline RootRef resolve_root(const RootSystem& rs, const std::string& spec, const ParamBinding& vars) {
    if (spec == "im") return RootRef::none();
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw CatalogError("root placement '" + spec + "' needs component:index");
    const auto comp = eval_expr(spec.substr(0, colon), vars);
    const auto local = eval_expr(spec.substr(colon + 1), vars);
    try {
        return RootRef::concrete(rs.global_index(static_cast<int>(comp) - 1, static_cast<int>(local)));
    } catch (const RootSystemError& e) {
        throw CatalogError("root placement '" + spec + "': " + e.what());
    }
}

/// Every simple type of rank in [lo, hi], in letter order.
inline std::vector<std::string> simple_types(long long lo, long long hi) {
    std::vector<std::string> out;
    for (char L : std::string("ABCDEFG")) {
        for (long long r = std::max(1LL, lo); r <= hi; ++r) {
            try {
                (void)cartan_block(L, static_cast<int>(r));
            } catch (const RootSystemError&) {
                continue;
            }
            out.push_back(L + std::to_string(r));
        }
    }
    return out;
}

/// One instantiated family member.
struct CatalogInstance {
    HorosphericalDatum datum;
    std::string label;
    ParamBinding params;
    std::size_t record = 0;
    bool partner = false;
    bool drawn = false;
    std::string g0;
    long long a1_from = 0;
};

inline bool binding_matches(const ParamBinding& where, const ParamBinding& params) {
    for (const auto& [k, v] : where) {
        const auto it = params.find(k);
        if (it == params.end() || it->second != v) return false;
    }
    return true;
}

/// Instantiates every record whose simple factors have rank at most max_rank (bound to the variable R).
inline std::vector<CatalogInstance> instantiate(const std::vector<FamilyRecord>& records, int max_rank) {
    std::vector<CatalogInstance> out;
    std::map<std::string, RootSystem> cache;
    auto system = [&](const std::string& g) -> const RootSystem& {
        auto it = cache.find(g);
        if (it == cache.end()) it = cache.emplace(g, make_root_system(g)).first;
        return it->second;
    };
    for (std::size_t ri = 0; ri < records.size(); ++ri) {
        const auto& rec = records[ri];
        ParamBinding vars{{"R", max_rank}};
        std::map<std::string, std::string> types;
        auto emit = [&]() {
            const auto g = expand_group(rec.group, vars, types);
            const RootSystem* rs = nullptr;
            try {
                rs = &system(g);
            } catch (const ParseError&) {
                return; // rank outside the type's range
            }
            for (const auto& c : rs->components())
                if (c.simple_rank() > max_rank) return;
            HorosphericalDatum d;
            d.rs = *rs;
            const auto b = resolve_root(*rs, rec.beta, vars);
            if (b.imaginary) throw CatalogError(rec.label + ": beta cannot be imaginary");
            d.beta = b.index;
            d.alpha0 = resolve_root(*rs, rec.alpha0, vars);
            d.alpha1 = resolve_root(*rs, rec.alpha1, vars);
            d.case_label = rec.label;
            try {
                d.validate();
            } catch (const DatumError& e) {
                throw CatalogError(rec.label + " (" + g + "): " + e.what());
            }
            ParamBinding params;
            for (const auto& p : rec.params)
                if (!p.types) params[p.name] = vars.at(p.name);
            CatalogInstance inst{d, rec.label, params, ri, false, rec.drawn, rs->components().front().name(), rec.a1_from};
            out.push_back(inst);
            if (rec.partner) {
                CatalogInstance q = inst;
                q.datum = d.swapped();
                q.label = toggle_prime(rec.label);
                q.datum.case_label = q.label;
                q.partner = true;
                q.drawn = rec.partner_drawn;
                out.push_back(q);
            }
        };
        auto recurse = [&](auto&& self, std::size_t k) -> void {
            if (k == rec.params.size()) {
                emit();
                return;
            }
            const auto& p = rec.params[k];
            const auto lo = eval_expr(p.from, vars);
            const auto hi = eval_expr(p.to, vars);
            if (p.types) {
                for (const auto& t : simple_types(lo, hi)) {
                    types[p.name] = t;
                    vars["rank_" + p.name] = std::stoll(t.substr(1));
                    self(self, k + 1);
                }
                types.erase(p.name);
                vars.erase("rank_" + p.name);
            } else {
                for (long long v = lo; v <= hi; ++v) {
                    vars[p.name] = v;
                    self(self, k + 1);
                }
                vars.erase(p.name);
            }
        };
        recurse(recurse, 0);
    }
    return out;
}

/// "(XI)(4)'" or "XI.4'" to "XI.4'"; other text unchanged.
inline std::string normalize_label(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.size() < 6 || t[0] != '(') return t;
    const auto close = t.find(')');
    if (close == std::string::npos || close + 1 >= t.size() || t[close + 1] != '(') return t;
    const auto close2 = t.find(')', close + 2);
    if (close2 == std::string::npos) return t;
    return t.substr(1, close - 1) + "." + t.substr(close + 2, close2 - close - 2) + t.substr(close2 + 1);
}

/// The unique instance of `label` in `group` whose parameters agree with `params`.
inline HorosphericalDatum find_case(const std::vector<FamilyRecord>& records, const std::string& group, const std::string& label,
                                    const ParamBinding& params = {}) {
    const auto rs = make_root_system(group);
    int max_rank = 1;
    for (const auto& c : rs.components()) max_rank = std::max(max_rank, c.simple_rank());
    const auto want = normalize_label(label);
    std::vector<const CatalogInstance*> found;
    const auto insts = instantiate(records, max_rank);
    for (const auto& inst : insts)
        if (inst.label == want && inst.datum.rs.name() == rs.name() && binding_matches(params, inst.params)) found.push_back(&inst);
    if (found.empty()) throw CatalogError("no instance of case " + want + " in group " + rs.name());
    if (found.size() > 1) {
        std::string opts;
        for (const auto* f : found) {
            std::string b;
            for (const auto& [k, v] : f->params) b += (b.empty() ? "" : ",") + k + "=" + std::to_string(v);
            opts += " {" + b + "}";
        }
        throw CatalogError("case " + want + " is ambiguous in " + rs.name() + "; give parameters, one of:" + opts);
    }
    auto d = found.front()->datum;
    d.case_label = want;
    return d;
}

/// Instances grouped by isomorphic datum.
struct CatalogDatum {
    HorosphericalDatum datum;
    std::vector<std::size_t> instances;
};

inline std::vector<CatalogDatum> dedupe(const std::vector<CatalogInstance>& insts) {
    std::map<std::string, std::size_t> index;
    std::vector<CatalogDatum> out;
    for (std::size_t i = 0; i < insts.size(); ++i) {
        const auto k = insts[i].datum.canonical_key();
        auto it = index.find(k);
        if (it == index.end()) {
            index.emplace(k, out.size());
            out.push_back({insts[i].datum, {i}});
            out.back().datum.case_label.reset();
        } else {
            out[it->second].instances.push_back(i);
        }
    }
    return out;
}

namespace detail {

inline TableRow row(std::string label, Orbit o, long long A, long long B, long long c, std::optional<long long> d,
                    std::optional<long long> a1, ParamBinding where = {}) {
    return {std::move(label), o, A, B, c, d, a1, std::move(where)};
}

inline ExpectedHit hit(std::string label, std::string bullet, Orbit o, long long lo, std::optional<long long> hi,
                       std::optional<std::string> g0 = std::nullopt, ParamBinding where = {}) {
    return {std::move(label), std::move(bullet), o, lo, hi, std::move(g0), std::move(where)};
}

inline ParamRange P(std::string n, std::string from, std::string to) { return {std::move(n), std::move(from), std::move(to), false}; }

} // namespace detail

/// The appendix families, Bourbaki labels, as compiled-in data.
inline std::vector<FamilyRecord> builtin_catalog() {
    using detail::hit;
    using detail::P;
    using detail::row;
    const auto Y = Orbit::Y;
    const auto Z = Orbit::Z;
    std::vector<FamilyRecord> c;

    c.push_back({"I.3", "A{m}", "1:1", "1:i+1", "1:i", {P("m", "3", "R"), P("i", "2", "m-1")}, true, true, false,
                 {row("I.3", Y, 0, 1, 1, 1, 1)}, {hit("I.3", "I.3", Y, 1, 1)}});
    c.push_back({"II.3", "B{m}", "1:m", "1:p", "1:p+1", {P("m", "3", "R"), P("p", "1", "m-2")}, true, true, false,
                 {row("II.3", Y, 0, 1, 1, 2, 0)}, {hit("II.3", "II.3", Y, 0, 0)}});
    c.push_back({"II.5'", "B{m}", "1:1", "1:m", "1:m-1", {P("m", "3", "R")}, true, true, false,
                 {row("II.5'", Y, 0, 1, 2, 1, std::nullopt)}, {}});
    c.push_back({"III.5'", "C{m}", "1:1", "1:q+1", "1:q", {P("m", "4", "R"), P("q", "2", "m-2")}, true, true, false,
                 {row("III.5'", Y, 0, 1, 1, 1, 1)}, {hit("III.5'", "III.5'", Y, 1, 1)}});
    c.push_back({"IV.2'", "D{m}", "1:m", "1:m-1", "1:1", {P("m", "4", "R")}, true, true, false,
                 {row("IV.2'", Y, 0, 1, 1, 1, 1)}, {hit("IV.2'", "IV.2'", Y, 1, 1)}});
    c.push_back({"IV.5", "D{m}", "1:1", "1:m", "1:m-1", {P("m", "4", "R")}, false, true, false,
                 {row("IV.5", Y, 0, 1, 1, 1, 1)}, {hit("IV.5", "IV.5", Y, 1, 1)}});
    c.push_back({"VIII.2'", "F4", "1:1", "1:3", "1:2", {}, true, true, false,
                 {row("VIII.2'", Y, 0, 1, 2, std::nullopt, std::nullopt)}, {}});
    c.push_back({"VIII.5", "F4", "1:4", "1:2", "1:3", {}, true, true, false,
                 {row("VIII.5", Y, 0, 1, 1, 1, 1)}, {hit("VIII.5", "VIII.5", Y, 1, 1)}});
    c.push_back({"VIII.6", "F4", "1:4", "1:1", "1:3", {}, true, true, false,
                 {row("VIII.6", Y, 0, 1, 1, 2, 0)}, {hit("VIII.6", "VIII.6", Y, 0, 0)}});

    for (const char* g : {"A{m}xA{n}", "A{m}xC*"}) {
        const bool im = std::string(g).find("C*") != std::string::npos;
        std::vector<ParamRange> ps{P("m", "2", "R")};
        if (!im) ps.push_back(P("n", "1", "R"));
        c.push_back({"IX.1", g, "1:1", "1:2", im ? "im" : "2:1", ps, true, true, false,
                     {row("IX.1", Y, 1, 0, 0, 0, 2)}, {hit("IX.1", "IX.1", Y, 2, 2)}});
    }
    for (const char* g : {"A{m}xA{n}", "A{m}x-"}) {
        const bool im = std::string(g).find('-') != std::string::npos;
        std::vector<ParamRange> ps{P("m", "2", "R")};
        if (!im) ps.push_back(P("n", "1", "R"));
        c.push_back({"IX.2'", g, "1:1", im ? "im" : "2:1", "1:m", ps, true, true, false,
                     {row("IX.2'", Y, 0, 1, 0, 1, 1)}, {hit("IX.2'", "IX.2'", Y, 1, 1)}});
    }
    for (const char* l : {"IX.5'", "IX.7", "IX.12", "IX.17'"}) {
        c.push_back({l, "A{m}", "1:b", "1:b+1", "1:1", {P("m", "3", "R"), P("b", "2", "m-1")}, true, true, false,
                     {row(l, Y, 1, 1, 0, 1, 1)}, {hit(l, l, Y, 1, 1)}});
    }
    for (const char* g : {"B{m}xA{n}", "B{m}x-"}) {
        const bool im = std::string(g).find('-') != std::string::npos;
        std::vector<ParamRange> ps{P("m", "2", "R")};
        if (!im) ps.push_back(P("n", "1", "R"));
        c.push_back({"X.15'", g, "1:m", im ? "im" : "2:1", "1:1", ps, true, true, false,
                     {row("X.15", Z, 0, 1, 0, 2, 0)}, {hit("X.15", "X.15", Z, 0, 0)}});
    }
    for (const char* g : {"B{m}xA{n}", "B{m}xC*"}) {
        const bool im = std::string(g).find("C*") != std::string::npos;
        std::vector<ParamRange> ps{P("m", "2", "R")};
        if (!im) ps.push_back(P("n", "1", "R"));
        c.push_back({"X.16", g, "1:m", "1:m-1", im ? "im" : "2:1", ps, true, true, false,
                     {row("X.16", Y, 1, 0, 0, 0, 2)}, {hit("X.16", "X.16", Y, 2, 2)}});
    }
    for (const char* g : {"C{m}xA{n}", "C{m}xC*"}) {
        const bool im = std::string(g).find("C*") != std::string::npos;
        std::vector<ParamRange> ps{P("m", "2", "R")};
        if (!im) ps.push_back(P("n", "1", "R"));
        c.push_back({"XI.1", g, "1:1", "1:2", im ? "im" : "2:1", ps, true, true, false,
                     {row("XI.1", Y, 1, 0, 0, 0, 2)}, {hit("XI.1", "XI.1", Y, 2, 2)}});
    }
    c.push_back({"XI.4'", "C{m}", "1:m-1", "1:m", "1:1", {P("m", "3", "R")}, true, true, false,
                 {row("XI.4'", Y, 1, 1, 0, 1, 1), row("XI.4", Y, 1, 1, 0, 2, 0, {{"m", 3}})},
                 {hit("XI.4'", "XI.4'", Y, 1, 1), hit("XI.4", "XI.4 m=3", Y, 0, 0, std::nullopt, {{"m", 3}})}});
    c.push_back({"XI.4", "C3", "1:2", "1:1", "1:3", {}, false, true, false,
                 {row("XI.4", Y, 1, 1, 0, 2, 0)}, {hit("XI.4", "XI.4 m=3", Y, 0, 0)}});
    c.push_back({"XI.7", "C{m}", "1:m-1", "1:m-2", "1:m", {P("m", "3", "R")}, true, true, false,
                 {row("XI.7", Y, 1, 1, 0, 2, 0)}, {hit("XI.7", "XI.7", Y, 0, 0)}});
    c.push_back({"XVI.9'", "F4", "1:3", "1:4", "1:1", {}, true, true, false,
                 {row("XVI.9", Z, 1, 1, 0, 2, 0)}, {hit("XVI.9", "XVI.9", Z, 0, 0)}});
    c.push_back({"XVI.11", "F4", "1:3", "1:2", "1:4", {}, true, true, false,
                 {row("XVI.11", Y, 1, 1, 0, 1, 1)}, {hit("XVI.11", "XVI.11", Y, 1, 1)}});
    for (const char* g : {"G2xA{n}", "G2xC*"}) {
        const bool im = std::string(g).find("C*") != std::string::npos;
        std::vector<ParamRange> ps;
        if (!im) ps.push_back(P("n", "1", "R"));
        c.push_back({"XVII.1", g, "1:1", "1:2", im ? "im" : "2:1", ps, true, true, true,
                     {row("XVII.1", Y, 1, 0, 0, 0, 2), row("XVII.1", Z, 0, 1, 0, 3, 1)},
                     {hit("XVII.1", "XVII.1 Y", Y, 2, 2), hit("XVII.1", "XVII.1 Z", Z, 1, 1)}});
    }

    const std::string a1_bullet = "XVIII.1-8 G0=A1";
    auto xviii = [&](std::string label, std::string g1, std::string a0, std::string a1, std::vector<ParamRange> ps, bool partner) {
        c.push_back({label, "A1x" + g1, "1:1", a0, a1, std::move(ps), partner, false, false, {},
                     {hit(label, a1_bullet, Y, 2, std::nullopt, std::string("A1"))}});
    };
    xviii("XVIII.1", "A{n}", "2:1", "2:n", {P("n", "2", "R")}, false);
    xviii("XVIII.2", "A{n}", "2:p", "2:p+1", {P("n", "4", "R"), P("p", "2", "n-2")}, false);
    xviii("XVIII.3", "B{n}", "2:n-1", "2:n", {P("n", "2", "R")}, true);
    xviii("XVIII.4", "B3", "2:1", "2:3", {}, true);
    xviii("XVIII.5", "C{n}", "2:p+1", "2:p", {P("n", "3", "R"), P("p", "1", "n-2")}, true);
    xviii("XVIII.6", "D{n}", "2:n-1", "2:n", {P("n", "4", "R")}, false);
    xviii("XVIII.7", "F4", "2:2", "2:3", {}, true);
    c.push_back({"XVIII.8", "{G0}xG2", "1:b", "2:2", "2:1", {ParamRange{"G0", "1", "R", true}, P("b", "1", "rank_G0")},
                 true, false, false, {},
                 {hit("XVIII.8", a1_bullet, Y, 2, std::nullopt, std::string("A1")),
                  hit("XVIII.8", "XVIII.8 Z", Z, 1, std::nullopt)},
                 1});

    const std::string trio = "G0xG1xG2";
    c.push_back({trio, "A1xA{n}xA{k}", "1:1", "2:1", "3:1", {P("n", "1", "R"), P("k", "1", "R")}, false, false, false, {},
                 {hit(trio, trio, Y, 2, std::nullopt)}});
    c.push_back({trio, "A1x-xA{k}", "1:1", "im", "3:1", {P("k", "1", "R")}, false, false, false, {},
                 {hit(trio, trio, Y, 2, std::nullopt)}});
    c.push_back({trio, "A1xA{n}xC*", "1:1", "2:1", "im", {P("n", "1", "R")}, false, false, false, {},
                 {hit(trio, trio, Y, 2, std::nullopt)}});
    c.push_back({trio, "A1x-xC*", "1:1", "im", "im", {}, false, false, false, {}, {hit(trio, trio, Y, 2, std::nullopt)}});

    c.push_back({"V.1", "E6", "1:1", "1:2", "1:3", {}, true, false, false, {}, {}});
    return c;
}

/// The literal diagram reading of the XI.4' family (beta at a free position b).
inline std::vector<FamilyRecord> xi4_literal_reading() {
    using detail::hit;
    using detail::P;
    using detail::row;
    return {{"XI.4'", "C{m}", "1:b", "1:b+1", "1:1", {P("m", "3", "R"), P("b", "2", "m-1")}, true, true, false,
             {row("XI.4'", Orbit::Y, 1, 1, 0, 1, 1)},
             {hit("XI.4'", "XI.4'", Orbit::Y, 1, 1), hit("XI.4", "XI.4 m=3", Orbit::Y, 0, 0, std::nullopt, {{"m", 3}})}}};
}

/// Replaces builtin records sharing a label with the override's, appends the rest.
inline std::vector<FamilyRecord> apply_override(std::vector<FamilyRecord> base, const std::vector<FamilyRecord>& extra) {
    std::set<std::string> labels;
    for (const auto& r : extra) labels.insert(r.label);
    std::vector<FamilyRecord> out;
    for (auto& r : base)
        if (!labels.count(r.label)) out.push_back(std::move(r));
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

} // namespace hororigid
