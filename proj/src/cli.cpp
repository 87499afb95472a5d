#include "ramsat/cli.hpp"

#include "ramsat/dual_reps.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/facets_admissible.hpp"
#include "ramsat/folding.hpp"
#include "ramsat/iwahori_weyl.hpp"
#include "ramsat/kernels.hpp"
#include "ramsat/preset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

namespace ramsat {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
};

/// What a command produces: scalar metadata plus tables, rendered per --format.
struct Output {
    std::string command;
    Json meta = Json::object();
    std::vector<Table> tables;
};

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void render(const Output& o, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json doc = Json::object();
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = o.command;
        for (auto it = o.meta.begin(); it != o.meta.end(); ++it) doc[it.key()] = it.value();
        for (const auto& t : o.tables) {
            Json rows = Json::array();
            for (const auto& r : t.rows) {
                Json obj = Json::object();
                for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = r[i];
                rows.push_back(obj);
            }
            doc[t.name] = rows;
        }
        out << doc.dump(2) << "\n";
        return;
    }
    if (format == "tsv") {
        for (auto it = o.meta.begin(); it != o.meta.end(); ++it) out << "# " << it.key() << "\t" << cell(it.value()) << "\n";
        for (std::size_t k = 0; k < o.tables.size(); ++k) {
            const Table& t = o.tables[k];
            if (k) out << "\n";
            for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "\t" : "") << t.columns[i];
            out << "\n";
            for (const auto& r : t.rows) {
                for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << cell(r[i]);
                out << "\n";
            }
        }
        return;
    }
    std::size_t key_width = 0;
    for (auto it = o.meta.begin(); it != o.meta.end(); ++it) key_width = std::max(key_width, it.key().size());
    for (auto it = o.meta.begin(); it != o.meta.end(); ++it)
        out << it.key() << std::string(key_width - it.key().size(), ' ') << "  " << cell(it.value()) << "\n";
    for (const auto& t : o.tables) {
        out << "\n" << t.name << " (" << t.rows.size() << ")\n";
        std::vector<std::size_t> w(t.columns.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.columns[i].size();
        for (const auto& r : t.rows)
            for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], cell(r[i]).size());
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                s += cells[i];
                if (i + 1 < cells.size()) s += std::string(w[i] - cells[i].size() + 2, ' ');
            }
            out << "  " << s << "\n";
        };
        line(t.columns);
        for (const auto& r : t.rows) {
            std::vector<std::string> cells;
            for (const auto& v : r) cells.push_back(cell(v));
            line(cells);
        }
    }
}

IntVec parse_ints(const std::string& text, const std::string& what) {
    IntVec out;
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '[' && ch != ']' && ch != '(' && ch != ')') t += ch;
    if (t.empty()) return out;
    std::istringstream is(t);
    for (std::string tok; std::getline(is, tok, ',');) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("cli.bad_integer_list", what + ": cannot parse '" + text + "' as comma-separated integers");
        }
    }
    return out;
}

/// A class given as free coordinates followed by torsion coordinates; torsion may be omitted.
LatticeClass parse_class(const LatticeQuotient& q, const std::string& text, const std::string& what) {
    IntVec v = parse_ints(text, what);
    const std::size_t nf = std::size_t(q.free_rank()), nt = q.torsion().size();
    if (v.size() != nf && v.size() != nf + nt)
        throw ParseError("cli.bad_class", what + ": expected " + std::to_string(nf) + " free coordinates" +
                                              (nt ? " optionally followed by " + std::to_string(nt) + " torsion" : "") +
                                              ", got " + std::to_string(v.size()));
    LatticeClass c = q.zero();
    std::copy(v.begin(), v.begin() + nf, c.free.begin());
    if (v.size() > nf) std::copy(v.begin() + nf, v.end(), c.tors.begin());
    return q.normalize(c);
}

Json ints(std::span<const Int> v) { return Json(std::vector<Int>(v.begin(), v.end())); }

std::string class_str(const LatticeClass& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.free.size(); ++i) s += (i ? "," : "") + std::to_string(c.free[i]);
    if (!c.tors.empty()) {
        s += "|";
        for (std::size_t i = 0; i < c.tors.size(); ++i) s += (i ? "," : "") + std::to_string(c.tors[i]);
    }
    return s + ")";
}

std::string facet_str(const std::vector<int>& J) {
    std::string s;
    for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
    return s.empty() ? "-" : s;
}

struct Common {
    std::string preset;
    std::string action;
    std::string format = "text";
    std::size_t cap = kDefaultCap;
};

IwahoriWeylGroup group_of(const Common& c) {
    return IwahoriWeylGroup::from_preset(PresetCatalog::global(), c.preset, c.action);
}

Output cmd_list_presets() {
    const PresetCatalog& cat = PresetCatalog::global();
    Output o{"list-presets", Json::object(), {}};
    Table t{"presets", {"name", "kind", "lattice", "rank", "base", "actions", "aliases", "description"}, {}};
    for (const auto& name : cat.names()) {
        const PresetManifest& m = cat.manifest(name);
        std::string acts, aliases;
        for (const auto& a : cat.action_names(name)) acts += (acts.empty() ? "" : ",") + a;
        for (const auto& a : m.aliases) aliases += (aliases.empty() ? "" : ",") + a;
        const int rank = cat.datum(name).rank();
        t.rows.push_back({name, m.kind, m.lattice_variant, rank, m.base.empty() ? "-" : m.base,
                          m.kind == "folded" ? *m.action_name : acts, aliases.empty() ? "-" : aliases,
                          m.description});
    }
    o.meta["count"] = t.rows.size();
    o.tables.push_back(std::move(t));
    return o;
}

Output cmd_fold(const Common& c) {
    const PresetCatalog& cat = PresetCatalog::global();
    PinnedAction a = c.action.empty() ? cat.default_action(c.preset) : cat.action(c.preset, c.action);
    FoldedDatum f = fold(a);
    CoinvariantLattice cochar = coinvariants(a, LatticeSide::cocharacters);
    Output o{"fold", Json::object(), {}};
    o.meta["preset"] = cat.canonical(c.preset);
    o.meta["action"] = a.name();
    o.meta["order_I"] = a.order();
    o.meta["cocharacter_coinvariants_free_rank"] = cochar.free_rank();
    o.meta["cocharacter_coinvariants_torsion"] = ints(cochar.torsion());
    o.meta["character_coinvariants_free_rank"] = f.characters.free_rank();
    o.meta["character_coinvariants_torsion"] = ints(f.characters.torsion());
    o.meta["pi0_fixed_torus_order"] = f.component_group.order();
    o.meta["nonreduced"] = f.nonreduced;
    o.meta["folded_weyl_order"] = WeylGroup(f.datum).order();
    Table t{"folded_simple_roots", {"k", "orbit", "root", "coroot"}, {}};
    for (std::size_t k = 0; k < f.orbit_map.size(); ++k) {
        std::string orbit;
        for (int i : f.orbit_map[k]) orbit += (orbit.empty() ? "" : ",") + std::to_string(i + 1);
        t.rows.push_back({k + 1, orbit, class_str(f.simple_root_classes[k]), to_string(f.datum.simple_coroot(int(k)))});
    }
    o.tables.push_back(std::move(t));
    return o;
}

Output cmd_wgroup(const Common& c, const std::string& op, const std::vector<std::string>& elems) {
    IwahoriWeylGroup g = group_of(c);
    Output o{"wgroup " + op, Json::object(), {}};
    o.meta["preset"] = g.name();
    o.meta["action"] = g.action().name();
    if (op == "info") {
        o.meta["dimension"] = g.dimension();
        o.meta["finite_weyl_order"] = g.finite_order();
        o.meta["translation_torsion"] = ints(g.coinvariants().torsion());
        o.meta["pi1_I_torsion"] = ints(g.fundamental_group().torsion());
        Table s{"simple_affine", {"index", "element", "finite_simple"}, {}};
        for (int i = 0; i < g.num_simple(); ++i) s.rows.push_back({i, g.format(g.simple(i)), g.simple(i).translation == g.coinvariants().zero()});
        Table w{"omega", {"index", "element", "kottwitz"}, {}};
        for (std::size_t i = 0; i < g.omega().size(); ++i)
            w.rows.push_back({i, g.format(g.omega()[i]), class_str(g.kottwitz(g.omega()[i]))});
        Table e{"echelon", {"root", "stride"}, {}};
        for (const auto& en : g.echelon_table()) {
            std::ostringstream st;
            st << en.stride;
            e.rows.push_back({to_string(en.root_coefficients), st.str()});
        }
        o.tables = {s, w, e};
        return o;
    }
    const std::size_t need = op == "leq" ? 2 : 1;
    if (elems.size() != need)
        throw ParseError("cli.bad_arguments", "wgroup " + op + " takes " + std::to_string(need) + " element(s)");
    std::vector<IwahoriWeylElement> xs;
    for (const auto& s : elems) xs.push_back(g.parse(s));
    if (op == "length") {
        Table t{"elements", {"element", "length"}, {}};
        t.rows.push_back({g.format(xs[0]), g.length(xs[0])});
        o.tables.push_back(t);
    } else if (op == "word") {
        ReducedWord w = g.reduced_word(xs[0]);
        o.meta["element"] = g.format(xs[0]);
        o.meta["length"] = g.length(xs[0]);
        o.meta["omega"] = w.omega;
        o.meta["letters"] = w.letters;
        o.meta["word"] = g.format_word(w);
    } else if (op == "leq") {
        o.meta["u"] = g.format(xs[0]);
        o.meta["v"] = g.format(xs[1]);
        o.meta["leq"] = g.bruhat_leq(xs[0], xs[1]);
    } else if (op == "kottwitz") {
        o.meta["element"] = g.format(xs[0]);
        o.meta["kottwitz"] = class_str(g.kottwitz(xs[0]));
        o.meta["omega"] = g.omega_index(xs[0]);
    }
    return o;
}

Output cmd_adm(const Common& c, const std::string& facet, const std::string& mu, const std::string& mu_class) {
    IwahoriWeylGroup g = group_of(c);
    Facet f = make_facet(g, parse_facet(facet));
    LatticeClass mu_bar;
    Output o{"adm", Json::object(), {}};
    o.meta["preset"] = g.name();
    o.meta["facet"] = facet_str(f.J);
    if (!mu.empty()) {
        IntVec m = parse_ints(mu, "--mu");
        if (int(m.size()) != g.datum().rank())
            throw ParseError("cli.bad_arguments", "--mu needs " + std::to_string(g.datum().rank()) + " entries");
        o.meta["mu"] = m;
        auto lam = lambda_mu(g, m);
        mu_bar = g.dominant(lam.front()).first;
    } else if (!mu_class.empty()) {
        mu_bar = g.dominant(parse_class(g.coinvariants(), mu_class, "--mu-class")).first;
    } else {
        throw ParseError("cli.bad_arguments", "adm needs --mu or --mu-class");
    }
    AdmissibleSet adm = admissible_set(g, mu_bar, f, ExecPolicy::parallel, c.cap);
    o.meta["mu_bar"] = class_str(mu_bar);
    o.meta["special"] = f.special;
    o.meta["size"] = adm.elements.size();
    o.meta["maxima"] = adm.maximal.size();
    o.meta["expected_maxima"] = double_coset_count(g, mu_bar, f);
    o.meta["top_length"] = g.pair_two_rho(mu_bar);
    o.meta["cap"] = c.cap;
    Table t{"elements", {"element", "word", "length", "component"}, {}};
    for (const auto& s : schubert_components(g, adm))
        t.rows.push_back({g.format(s.element), g.format_word(g.reduced_word(s.element)), s.dimension, s.component});
    o.tables.push_back(std::move(t));
    return o;
}

Output cmd_report(const Common& c, int bound, Int max_pairing) {
    IwahoriWeylGroup g = group_of(c);
    auto samples = default_mu_samples(g, max_pairing);
    TheoremBReport rep = theorem_b_report(g, samples, bound, ExecPolicy::parallel, c.cap);
    Output o{"report", Json::object(), {}};
    o.meta["preset"] = g.name();
    o.meta["bound"] = rep.bound;
    o.meta["max_pairing"] = max_pairing;
    o.meta["samples"] = samples.size();
    o.meta["cap"] = c.cap;
    o.meta["all_agree"] = rep.all_agree();
    Table t{"facets", {"facet", "W_J", "special", "parity", "witness", "unique_max", "multi_max_mu", "agree"}, {}};
    for (const auto& r : rep.rows) {
        std::string witness = "-";
        if (r.parity.witness)
            witness = g.format_word(g.reduced_word(r.parity.witness->first)) + " " +
                      g.format_word(g.reduced_word(r.parity.witness->second));
        t.rows.push_back({facet_str(r.facet.J), r.facet.elements.size(), r.facet.special, r.parity.ok, witness,
                          r.unique_max, r.multi_max_mu ? class_str(*r.multi_max_mu) : "-", r.agree});
    }
    o.tables.push_back(std::move(t));
    return o;
}

Output cmd_branch(const Common& c, const std::vector<std::string>& lambdas) {
    DualGroup d = dual_group(PresetCatalog::global(), c.preset, c.action);
    if (lambdas.empty()) throw ParseError("cli.bad_arguments", "branch needs at least one --lambda");
    std::vector<IntVec> ls;
    for (const auto& s : lambdas) ls.push_back(parse_ints(s, "--lambda"));
    Output o{"branch", Json::object(), {}};
    o.meta["preset"] = PresetCatalog::global().canonical(c.preset);
    o.meta["action"] = d.action.name();
    o.meta["pi0_order"] = d.folded.component_group.order();
    Table t{"constituents", {"lambda", "dim_lambda", "mu", "multiplicity", "dim_mu", "weights"}, {}};
    for (const auto& r : satake_basis_report(d, ls))
        t.rows.push_back({to_string(r.lambda), r.lambda_dim, class_str(r.mu), r.multiplicity, r.dimension,
                          r.weight_count});
    o.tables.push_back(std::move(t));
    return o;
}

Output cmd_char(const Common& c, const std::string& mu) {
    DualGroup d = dual_group(PresetCatalog::global(), c.preset, c.action);
    const LatticeQuotient& q = d.folded.characters.quotient();
    LatticeClass m = parse_class(q, mu, "--mu");
    WeightMultiset ch = irreducible_character(d.folded, m);
    Output o{"char", Json::object(), {}};
    o.meta["preset"] = PresetCatalog::global().canonical(c.preset);
    o.meta["action"] = d.action.name();
    o.meta["mu"] = class_str(m);
    o.meta["dimension"] = ch.dimension();
    Table t{"weights", {"weight", "multiplicity"}, {}};
    std::vector<std::pair<LatticeClass, Int>> ws(ch.weights.rbegin(), ch.weights.rend());
    for (const auto& [w, k] : ws) t.rows.push_back({class_str(w), k});
    o.tables.push_back(std::move(t));
    return o;
}

// ---- selftest: internal consistency across every buildable preset ----

struct Check {
    std::string name, preset;
    bool ok;
    std::string detail;
};

void group_checks(const IwahoriWeylGroup& g, std::vector<Check>& out) {
    auto add = [&](const std::string& n, bool ok, const std::string& d = "") { out.push_back({n, g.name(), ok, d}); };
    const auto elems = elements_up_to_length(g, 6, ExecPolicy::parallel);
    bool words = true;
    for (const auto& x : elems) words = words && g.from_word(g.reduced_word(x)) == x &&
                                        int(g.reduced_word(x).letters.size()) == g.length(x);
    add("length_vs_word", words, std::to_string(elems.size()) + " elements");
    add("serial_parallel", elems == elements_up_to_length(g, 6, ExecPolicy::serial));
    bool lengthcor = true;
    for (const auto& mu : dominant_classes(g, 8))
        for (const auto& nu : g.finite_orbit(mu)) lengthcor = lengthcor && g.length(g.translation(nu)) == g.pair_two_rho(mu);
    add("translation_length", lengthcor);
    add("omega_pi1", g.omega().size() == std::size_t(g.fundamental_group().torsion_order()));
    const auto facets = enumerate_facets(g);
    const auto samples = default_mu_samples(g, 6);
    bool transmax = true, maxadm = true;
    for (const auto& f : facets)
        for (const auto& mu : samples)
            for (const auto& nu : g.finite_orbit(mu)) {
                const IwahoriWeylElement t = g.translation(nu);
                transmax = transmax && g.length(min_coset_rep(g, t, f)) == g.length(t) - count_negative_restricted(g, f, nu);
            }
    for (const auto& mu : samples) {
        const AdmissibleSet alcove = admissible_alcove(g, mu);
        for (const auto& f : facets) {
            auto adm = admissible_relative(g, alcove, f);
            maxadm = maxadm && adm.maximal == expected_maxima(g, mu, f) &&
                     int(adm.maximal.size()) == double_coset_count(g, mu, f);
            for (const auto& m : adm.maximal) maxadm = maxadm && g.length(m) == g.pair_two_rho(mu);
        }
    }
    add("transmax", transmax);
    add("maximal_admissible", maxadm);
    add("theorem_b", theorem_b_report(g, samples).all_agree());
}

void dual_checks(const std::string& preset, std::vector<Check>& out) {
    DualGroup d = dual_group(PresetCatalog::global(), preset);
    const BasedRootDatum& dd = d.datum;
    std::vector<IntVec> lambdas{IntVec(dd.rank(), 0)};
    for (int k = 0; k < dd.semisimple_rank(); ++k) {
        // a dominant weight supported near the k-th simple coroot
        IntVec lam = dd.simple_root(k);
        auto [dom, _] = WeylGroup(dd).dominant_representative_character(lam);
        lambdas.push_back(dom);
    }
    bool ok = true;
    DominanceOrder order(d.folded);
    for (const auto& lam : lambdas) {
        Int dim = 0;
        for (const auto& [_, m] : freudenthal(dd, lam)) dim += m;
        Int total = 0;
        for (const auto& [mu, m] : restrict_to_fixed_group(d, lam)) {
            WeightMultiset rho = irreducible_character(d.folded, mu);
            total += m * rho.dimension();
            ok = ok && rho.multiplicity(mu) == 1;
            for (const auto& [w, _] : rho.weights) ok = ok && order.leq(w, mu);
        }
        ok = ok && total == dim;
    }
    out.push_back({"restriction", preset, ok, std::to_string(lambdas.size()) + " weights"});
}

Output cmd_selftest(bool& passed) {
    const PresetCatalog& cat = PresetCatalog::global();
    std::vector<Check> checks;
    for (const auto& name : cat.names()) {
        try {
            group_checks(IwahoriWeylGroup::from_preset(cat, name), checks);
        } catch (const Error& e) {
            if (e.name() != "iwahori_weyl.unbounded_alcove") checks.push_back({"build", name, false, e.name() + ": " + e.what()});
        }
        try {
            dual_checks(name, checks);
        } catch (const Error& e) {
            checks.push_back({"restriction", name, false, e.name() + ": " + e.what()});
        }
    }
    Output o{"selftest", Json::object(), {}};
    Table t{"checks", {"check", "preset", "result", "detail"}, {}};
    passed = true;
    for (const auto& ch : checks) {
        passed = passed && ch.ok;
        t.rows.push_back({ch.name, ch.preset, ch.ok ? "PASS" : "FAIL", ch.detail.empty() ? "-" : ch.detail});
    }
    o.meta["checks"] = checks.size();
    o.meta["passed"] = passed;
    o.tables.push_back(std::move(t));
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ramsat: Iwahori-Weyl groups, admissible sets and restriction of dual group representations"};
    app.require_subcommand(1);
    Common c;
    auto common = [&c](CLI::App* sub, bool preset_required = true) {
        auto* p = sub->add_option("--preset", c.preset, "preset name or alias");
        if (preset_required) p->required();
        sub->add_option("--action", c.action, "action name (default: the preset's own)");
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "tsv"}));
        sub->add_option("--cap", c.cap, "cap on enumerated set sizes");
    };

    auto* list = app.add_subcommand("list-presets", "list the preset catalog");
    common(list, false);
    auto* fold_cmd = app.add_subcommand("fold", "coinvariants and folded root datum of an action");
    common(fold_cmd);

    auto* wg = app.add_subcommand("wgroup", "Iwahori-Weyl group queries");
    wg->require_subcommand(1);
    std::string wg_op;
    std::vector<std::string> wg_elems;
    for (const char* op : {"info", "length", "word", "leq", "kottwitz"}) {
        auto* s = wg->add_subcommand(op, std::string("wgroup ") + op);
        common(s);
        if (std::string(op) != "info") s->add_option("elements", wg_elems, "elements such as t[1]*w[1] or s[0,1]");
        s->callback([&wg_op, op] { wg_op = op; });
    }

    auto* adm = app.add_subcommand("adm", "admissible set of a facet");
    common(adm);
    std::string facet, mu, mu_class;
    adm->add_option("--facet", facet, "comma-separated S_aff indices (empty or '-' for the alcove)");
    adm->add_option("--mu", mu, "absolute cocharacter, comma-separated");
    adm->add_option("--mu-class", mu_class, "class in X_*(T)_I: free then torsion coordinates");

    auto* report = app.add_subcommand("report", "speciality, parity and unique-maximum table per facet");
    common(report);
    int bound = -1;
    Int max_pairing = 10;
    report->add_option("--bound", bound, "length bound for the parity check (default: max sample length + 2)");
    report->add_option("--max-pairing", max_pairing, "sample dominant classes with <mu, 2 rho> up to this");

    auto* branch = app.add_subcommand("branch", "restriction of dual group representations to the fixed points");
    common(branch);
    std::vector<std::string> lambdas;
    branch->add_option("--lambda", lambdas, "dominant weight of the dual group, comma-separated (repeatable)");

    auto* chr = app.add_subcommand("char", "weights of an irreducible representation of the fixed points");
    common(chr);
    std::string char_mu;
    chr->add_option("--mu", char_mu, "highest weight in X^*(T^I): free then torsion coordinates")->required();

    auto* self = app.add_subcommand("selftest", "run the internal consistency suite on every preset");
    common(self, false);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        Output o;
        int status = 0;
        if (list->parsed()) {
            o = cmd_list_presets();
        } else if (fold_cmd->parsed()) {
            o = cmd_fold(c);
        } else if (wg->parsed()) {
            o = cmd_wgroup(c, wg_op, wg_elems);
        } else if (adm->parsed()) {
            o = cmd_adm(c, facet, mu, mu_class);
        } else if (report->parsed()) {
            o = cmd_report(c, bound, max_pairing);
        } else if (branch->parsed()) {
            o = cmd_branch(c, lambdas);
        } else if (chr->parsed()) {
            o = cmd_char(c, char_mu);
        } else if (self->parsed()) {
            bool passed = false;
            o = cmd_selftest(passed);
            status = passed ? 0 : 3;
        }
        render(o, c.format, out);
        return status;
    } catch (const ParseError& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.name() << ": " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace ramsat
