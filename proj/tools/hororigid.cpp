#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hororigid/hororigid.hpp"

using namespace hororigid;

namespace {

enum Exit { kOk = 0, kDiff = 1, kParse = 2, kDisagree = 3 };

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (s.back() == sep) out.emplace_back();
    return out;
}

long long parse_int(const std::string& tok, const std::string& what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("bad " + what + " '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("bad " + what + " '" + tok + "'");
    return v;
}

// 1-based labels to 0-based indices, checked against the rank.
std::vector<int> parse_indices(const std::string& list, const RootSystem& rs) {
    std::vector<int> out;
    for (const auto& tok : split(list, ',')) {
        const auto v = parse_int(tok, "root index");
        if (v < 1 || v > rs.rank()) throw ParseError("root index '" + tok + "' out of range 1.." + std::to_string(rs.rank()));
        out.push_back(static_cast<int>(v - 1));
    }
    return out;
}

Weight parse_weight(const std::string& list, const RootSystem& rs) {
    const auto toks = split(list, ',');
    if (static_cast<int>(toks.size()) != rs.rank())
        throw ParseError("weight '" + list + "' has " + std::to_string(toks.size()) + " coordinates, expected " +
                         std::to_string(rs.rank()));
    Weight w(rs.rank());
    for (std::size_t j = 0; j < toks.size(); ++j) w[j] = parse_int(toks[j], "weight coordinate");
    return w;
}

RootRef parse_root(const std::string& tok, const RootSystem& rs) {
    if (tok == "im") return RootRef::none();
    const auto v = parse_int(tok, "root");
    if (v < 1 || v > rs.rank()) throw ParseError("root '" + tok + "' out of range 1.." + std::to_string(rs.rank()));
    return RootRef::concrete(static_cast<int>(v - 1));
}

struct CaseSpec {
    std::string label;
    ParamBinding params;
    std::optional<long long> a1;
    Orbit orbit = Orbit::Y;
};

// LABEL[:key=value,...][:Y|Z], e.g. "(V)(1):a1=0" or "I.3:m=5,i=2,a1=1:Z".
CaseSpec parse_case(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.empty() || parts.front().empty()) throw ParseError("empty case spec");
    CaseSpec c;
    c.label = normalize_label(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == "Y" || parts[i] == "Z") {
            c.orbit = parts[i] == "Y" ? Orbit::Y : Orbit::Z;
            continue;
        }
        for (const auto& kv : split(parts[i], ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw ParseError("bad case parameter '" + kv + "'");
            const auto key = kv.substr(0, eq);
            const auto val = parse_int(kv.substr(eq + 1), "case parameter");
            if (key == "a1") c.a1 = val;
            else c.params[key] = val;
        }
    }
    return c;
}

std::vector<FamilyRecord> load_catalog(const std::string& override_path) {
    auto records = builtin_catalog();
    if (override_path.empty()) return records;
    std::ifstream in(override_path);
    if (!in) throw ParseError("cannot open override file '" + override_path + "'");
    return apply_override(std::move(records), parse_catalog(in));
}

void print_list(const char* tag, const std::vector<std::string>& xs) {
    for (const auto& x : xs) std::cout << tag << ": " << x << "\n";
}

Json list_json(const std::vector<std::string>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(x);
    return a;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of line bundles on flag varieties and local rigidity of rank-one horospherical varieties"};
    app.require_subcommand(1);
    std::string format = "text";

    auto* bwb = app.add_subcommand("bwb", "Borel-Weil-Bott cohomology of one line bundle");
    std::string bwb_group, bwb_levi, bwb_minus, bwb_weight, bwb_chi;
    bool bwb_pipeline = false;
    bwb->add_option("group", bwb_group, "group, e.g. A2, E6, A1xG2")->required();
    auto* levi_opt = bwb->add_option("--levi", bwb_levi, "simple roots of the Levi, comma separated (empty: Borel)");
    auto* minus_opt = bwb->add_option("--minus", bwb_minus, "simple roots removed from the Levi");
    levi_opt->excludes(minus_opt);
    auto* weight_opt = bwb->add_option("--weight", bwb_weight, "coordinates on w[1..r]; H^0 = V(weight) when dominant");
    auto* chi_opt = bwb->add_option("--chi", bwb_chi, "character of a catalog case: LABEL[:k=v,...][:Y|Z]");
    weight_opt->excludes(chi_opt);
    bwb->add_flag("--pipeline", bwb_pipeline, "read --weight as a Levi highest weight chi and reduce w0(chi) - rho");
    bwb->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    auto* report = app.add_subcommand("report", "rigidity report for one datum");
    std::string rep_group, rep_beta, rep_a0, rep_a1root, rep_case;
    long long rep_a1 = -1;
    report->add_option("group", rep_group, "group, e.g. E6, A1x-xC*")->required();
    report->add_option("--beta", rep_beta, "beta, global 1-based index");
    report->add_option("--alpha0", rep_a0, "alpha0, index or im");
    report->add_option("--alpha1", rep_a1root, "alpha1, index or im");
    report->add_option("--a1", rep_a1, "a1 >= 0");
    report->add_option("--case", rep_case, "catalog case LABEL[:k=v,...] instead of explicit roots");
    report->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    bool flip_verdicts = false;
    report->add_flag("--flip-verdicts", flip_verdicts, "negate theorem verdicts before cross-checking")->group("");

    auto* catalog = app.add_subcommand("catalog", "reproduce the case list and the value tables");
    std::string check = "all", only, override_path;
    int cat_rank = 9, cat_a1 = 6;
    bool cat_verbose = false, cat_dump = false, cat_readings = false;
    catalog->add_option("--check", check, "all, proposition or table")->check(CLI::IsMember({"all", "proposition", "table"}));
    catalog->add_option("--only", only, "restrict to one label");
    catalog->add_option("--max-rank", cat_rank, "largest rank of a free family parameter")->check(CLI::Range(1, 9));
    catalog->add_option("--max-a1", cat_a1, "largest a1 swept")->check(CLI::Range(0, 64));
    catalog->add_option("--override", override_path, "JSON catalog override file");
    catalog->add_flag("--verbose", cat_verbose, "list every match");
    catalog->add_flag("--dump", cat_dump, "print the catalog as JSON and exit");
    catalog->add_flag("--compare-readings", cat_readings, "diff both readings of the XI.4' diagram");
    catalog->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    auto* scan = app.add_subcommand("scan", "exhaustive sweep of well-formed data");
    ScanConfig cfg;
    bool no_imaginary = false, scan_verbose = false;
    scan->add_option("--max-rank", cfg.max_rank, "largest rank of G0");
    scan->add_option("--max-a1", cfg.max_a1, "largest a1");
    scan->add_flag("--g0-g1", cfg.g0_g1, "also sweep G0 x G1");
    scan->add_flag("--g0-g1-g2", cfg.g0_g1_g2, "also sweep G0 x G1 x G2");
    scan->add_option("--max-factor-rank", cfg.max_factor_rank, "largest rank of G1, G2");
    scan->add_flag("--no-imaginary", no_imaginary, "skip trivial and torus factors");
    scan->add_flag("--verbose", scan_verbose, "list every hit");
    scan->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }
    const bool structured = format == "structured";

    try {
        if (*bwb) {
            const auto rs = make_root_system(bwb_group);
            ParabolicSpec p;
            if (*minus_opt) p = ParabolicSpec::from_complement(rs, parse_indices(bwb_minus, rs));
            else if (*levi_opt) p.levi_roots = parse_indices(bwb_levi, rs);
            Weight w;
            std::string convention;
            Cohomology h;
            if (*chi_opt) {
                const auto c = parse_case(bwb_chi);
                auto d = find_case(builtin_catalog(), bwb_group, c.label, c.params);
                d.a1 = c.a1.value_or(0);
                d.validate();
                if (!*minus_opt && !*levi_opt) p = orbit_levi(d, c.orbit);
                w = orbit_chi(d, c.orbit);
                convention = "pipeline";
            } else if (*weight_opt) {
                w = parse_weight(bwb_weight, rs);
                convention = bwb_pipeline ? "pipeline" : "sections";
            } else {
                throw ParseError("bwb needs --weight or --chi");
            }
            if (!levi_dominant(p, w)) throw ParseError("weight " + format_weight(w) + " is not dominant for the Levi");
            h = convention == "pipeline" ? bwb_cohomology(rs, p, w) : section_cohomology(rs, p, w);
            if (structured) {
                Json j;
                j["group"] = rs.name();
                std::string levi;
                for (int k : p.levi_roots) levi += (levi.empty() ? "" : ",") + std::to_string(k + 1);
                j["levi"] = levi;
                j["weight"] = format_weight(w);
                j["convention"] = convention;
                j["result"] = cohomology_json(rs, h);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << format_cohomology(rs, h) << "\n";
            }
            return kOk;
        }

        if (*report) {
            HorosphericalDatum d;
            if (!rep_case.empty()) {
                if (!rep_beta.empty() || !rep_a0.empty() || !rep_a1root.empty())
                    throw ParseError("--case excludes --beta/--alpha0/--alpha1");
                const auto c = parse_case(rep_case);
                d = find_case(builtin_catalog(), rep_group, c.label, c.params);
                if (c.a1) d.a1 = *c.a1;
            } else {
                if (rep_beta.empty() || rep_a0.empty() || rep_a1root.empty())
                    throw ParseError("report needs --beta, --alpha0 and --alpha1, or --case");
                d.rs = make_root_system(rep_group);
                const auto b = parse_root(rep_beta, d.rs);
                if (b.imaginary) throw ParseError("beta cannot be 'im'");
                d.beta = b.index;
                d.alpha0 = parse_root(rep_a0, d.rs);
                d.alpha1 = parse_root(rep_a1root, d.rs);
            }
            if (rep_a1 >= 0) d.a1 = rep_a1;
            else if (report->count("--a1")) throw ParseError("a1 must be non-negative");
            auto r = rigidity_report(d);
            if (flip_verdicts) {
                for (auto* o : {&r.Y, &r.Z}) {
                    if (o->verdict == Verdict::NotApplicable) continue;
                    o->verdict = o->verdict == Verdict::Trivial ? Verdict::Nontrivial : Verdict::Trivial;
                    o->agreement = (o->verdict == Verdict::Nontrivial) == o->h1.nonzero;
                }
                r.agreement = r.agreement && r.Y.agreement && r.Z.agreement;
            }
            if (structured) std::cout << report_json(r).dump(2) << "\n";
            else std::cout << format_report_text(r);
            if (!r.agreement) {
                std::cerr << "cross-check failed: theorem verdict and direct computation disagree\n";
                return kDisagree;
            }
            return kOk;
        }

        if (*catalog) {
            const auto records = load_catalog(override_path);
            if (cat_dump) {
                std::cout << catalog_json(records).dump(2) << "\n";
                return kOk;
            }
            if (cat_readings) {
                const auto cmp = compare_xi4_readings(cat_rank, cat_a1);
                auto line = [](const char* name, const DiffReport& r) {
                    std::cout << name << ": " << (r.ok() ? "OK" : "FAIL") << " (" << r.matches.size() << " matches, "
                              << r.misses.size() << " misses, " << r.extras.size() << " extras)\n";
                };
                line("tied reading", cmp.tied);
                line("literal reading", cmp.literal);
                return kOk;
            }
            std::vector<FamilyRecord> scoped;
            if (only.empty()) {
                scoped = records;
            } else {
                const auto want = normalize_label(only);
                for (const auto& r : records) {
                    bool keep = r.label == want || toggle_prime(r.label) == want;
                    for (const auto& t : r.table) keep |= t.label == want;
                    for (const auto& e : r.expected) keep |= e.label == want;
                    if (keep) scoped.push_back(r);
                }
                if (scoped.empty()) throw ParseError("no catalog family labelled '" + only + "'");
            }
            const bool do_prop = check != "table", do_table = check != "proposition";
            DiffReport prop, table;
            if (do_prop) prop = reproduce_proposition(scoped, cat_rank, cat_a1);
            if (do_table) table = reproduce_appendix_table(scoped, cat_rank, cat_a1, only.empty() ? "" : normalize_label(only));
            const bool ok = (!do_prop || prop.ok()) && (!do_table || table.ok());
            const bool disagree = !prop.disagreements.empty() || !table.disagreements.empty();
            if (structured) {
                Json j;
                if (do_prop) {
                    const auto [z, p] = prop.bullets_matched();
                    j["proposition"] = {{"ok", prop.ok()},        {"zero_list_hits", z},
                                        {"positive_list_hits", p}, {"data_checked", prop.data_checked},
                                        {"misses", list_json(prop.misses)}, {"extras", list_json(prop.extras)},
                                        {"disagreements", list_json(prop.disagreements)}};
                }
                if (do_table)
                    j["table"] = {{"ok", table.ok()}, {"rows", table.rows_checked}, {"misses", list_json(table.misses)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::string line;
                if (do_prop) {
                    const auto [z, p] = prop.bullets_matched();
                    line += std::string("proposition: ") + (prop.ok() ? "OK" : "FAIL") + " (" + std::to_string(z) + " + " +
                            std::to_string(p) + " family hits";
                    if (!prop.ok())
                        line += ", " + std::to_string(prop.misses.size()) + " misses, " + std::to_string(prop.extras.size()) +
                                " extras";
                    line += ")";
                }
                if (do_table) {
                    if (!line.empty()) line += ", ";
                    line += std::string("table: ") + (table.ok() ? "OK" : "FAIL");
                    if (!do_prop) line += " (" + std::to_string(table.rows_checked) + " rows)";
                }
                std::cout << line << "\n";
                print_list("miss", prop.misses);
                print_list("extra", prop.extras);
                print_list("disagreement", prop.disagreements);
                print_list("miss", table.misses);
                if (cat_verbose) {
                    print_list("match", prop.matches);
                    print_list("match", table.matches);
                }
            }
            if (disagree) return kDisagree;
            return ok ? kOk : kDiff;
        }

        if (*scan) {
            cfg.imaginary = !no_imaginary;
            const auto rep = brute_scan(cfg);
            if (structured) {
                Json j;
                j["data_checked"] = rep.data_checked;
                j["hits"] = list_json(rep.hits);
                j["outside_catalog"] = list_json(rep.outside_catalog);
                j["not_applicable"] = rep.not_applicable.size();
                j["disagreements"] = list_json(rep.disagreements);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "data checked: " << rep.data_checked << ", hits: " << rep.hits.size() << " ("
                          << rep.outside_catalog.size() << " outside the catalog), not applicable: "
                          << rep.not_applicable.size() << "\n";
                std::cout << rep.disagreements.size() << " disagreements\n";
                print_list("disagreement", rep.disagreements);
                if (scan_verbose) print_list("hit", rep.hits);
            }
            return rep.disagreements.empty() ? kOk : kDisagree;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
    return kOk;
}
