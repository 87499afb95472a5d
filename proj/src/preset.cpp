#include "ramsat/preset.hpp"

#include "ramsat/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef RAMSAT_PRESET_DIR
#define RAMSAT_PRESET_DIR "data/presets"
#endif

namespace ramsat {

namespace {

[[noreturn]] void throw_parse(const std::string& name, const std::string& what) { throw ParseError(name, what); }

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;) out.push_back(tok);
    return out;
}

Int parse_int(const std::string& tok, const std::string& where) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw_parse("cli.preset_parse", where + ": expected an integer, got '" + tok + "'");
    }
}

IntVec parse_ints(const std::vector<std::string>& toks, std::size_t from, std::size_t to, const std::string& where) {
    IntVec v;
    for (std::size_t i = from; i < to; ++i) v.push_back(parse_int(toks[i], where));
    return v;
}

Rational parse_rational(const std::string& tok, const std::string& where) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Rational(parse_int(tok, where));
    Int den = parse_int(tok.substr(slash + 1), where);
    if (den <= 0) throw_parse("cli.preset_parse", where + ": stride denominator must be positive");
    return Rational(parse_int(tok.substr(0, slash), where), den);
}

ActionSpec& action_slot(PresetManifest& m, const std::string& name) {
    for (auto& a : m.actions)
        if (a.name == name) return a;
    m.actions.push_back(ActionSpec{name, {}, {}});
    return m.actions.back();
}

} // namespace

PresetManifest parse_preset(const std::string& text, const std::filesystem::path& source) {
    PresetManifest m;
    m.source = source;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string where = source.filename().string() + ":" + std::to_string(lineno);
        const std::string& key = toks[0];
        auto need = [&](std::size_t n) {
            if (toks.size() < n) throw_parse("cli.preset_parse", where + ": too few fields for '" + key + "'");
        };
        if (key == "preset") {
            need(2);
            m.name = toks[1];
        } else if (key == "alias") {
            need(2);
            m.aliases.insert(m.aliases.end(), toks.begin() + 1, toks.end());
        } else if (key == "description") {
            m.description = line.substr(line.find("description") + 11);
            m.description.erase(0, m.description.find_first_not_of(" \t"));
            m.description.erase(m.description.find_last_not_of(" \t\r") + 1);
        } else if (key == "kind") {
            need(2);
            if (toks[1] != "split" && toks[1] != "folded") throw_parse("cli.preset_parse", where + ": unknown kind");
            m.kind = toks[1];
        } else if (key == "lattice") {
            need(2);
            if (toks[1] != "simply-connected" && toks[1] != "adjoint" && toks[1] != "custom")
                throw_parse("cli.preset_parse", where + ": unknown lattice variant");
            m.lattice_variant = toks[1];
        } else if (key == "rank") {
            need(2);
            m.rank = int(parse_int(toks[1], where));
        } else if (key == "simple") {
            auto semi = std::find(toks.begin(), toks.end(), ";");
            if (semi == toks.end()) throw_parse("cli.preset_parse", where + ": simple needs '<root> ; <coroot>'");
            std::size_t k = std::size_t(semi - toks.begin());
            m.simple_roots.push_back(parse_ints(toks, 1, k, where));
            m.simple_coroots.push_back(parse_ints(toks, k + 1, toks.size(), where));
        } else if (key == "action") {
            need(4);
            ActionSpec& a = action_slot(m, toks[1]);
            if (toks[2] == "perm") {
                std::vector<int> p;
                for (std::size_t i = 3; i < toks.size(); ++i) p.push_back(int(parse_int(toks[i], where)) - 1);
                a.permutations.push_back(p);
            } else if (toks[2] == "matrix") {
                std::vector<IntVec> rows{{}};
                for (std::size_t i = 3; i < toks.size(); ++i) {
                    if (toks[i] == ";")
                        rows.emplace_back();
                    else
                        rows.back().push_back(parse_int(toks[i], where));
                }
                a.matrices.push_back(IntMatrix::from_rows(rows, int(rows.front().size())));
            } else {
                throw_parse("cli.preset_parse", where + ": action kind must be perm or matrix");
            }
        } else if (key == "base") {
            need(2);
            m.base = toks[1];
        } else if (key == "uses-action") {
            need(2);
            m.action_name = toks[1];
        } else if (key == "echelon") {
            auto colon = std::find(toks.begin(), toks.end(), ":");
            if (colon == toks.end() || colon + 1 == toks.end())
                throw_parse("cli.preset_parse", where + ": echelon needs '<coefficients> : <stride>'");
            std::size_t k = std::size_t(colon - toks.begin());
            Rational stride = parse_rational(toks[k + 1], where);
            if (stride <= 0) throw_parse("cli.preset_parse", where + ": stride must be positive");
            m.echelon.push_back(EchelonEntry{parse_ints(toks, 1, k, where), stride});
        } else {
            throw_parse("cli.preset_parse", where + ": unknown directive '" + key + "'");
        }
    }
    if (m.name.empty()) throw_parse("cli.preset_parse", source.string() + ": missing 'preset <name>'");
    if (m.kind == "split" && m.rank <= 0) throw_parse("cli.preset_parse", m.name + ": split preset needs a positive rank");
    if (m.kind == "folded" && (m.base.empty() || !m.action_name))
        throw_parse("cli.preset_parse", m.name + ": folded preset needs 'base' and 'uses-action'");
    return m;
}

PresetCatalog::PresetCatalog(const std::vector<std::filesystem::path>& dirs) {
    for (const auto& dir : dirs) {
        if (!std::filesystem::is_directory(dir)) continue;
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(dir))
            if (e.path().extension() == ".preset") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            std::ifstream in(f);
            std::stringstream ss;
            ss << in.rdbuf();
            PresetManifest m = parse_preset(ss.str(), f);
            if (manifests_.count(m.name) || aliases_.count(m.name)) continue;
            for (const auto& a : m.aliases)
                if (!manifests_.count(a)) aliases_.emplace(a, m.name);
            manifests_.emplace(m.name, std::move(m));
        }
    }
    // validate: data, actions, folded references
    for (const auto& [name, m] : manifests_) {
        if (m.kind == "split") {
            BasedRootDatum d = datum(name);
            for (const auto& a : m.actions) action(name, a.name);
        } else {
            if (!contains(m.base)) fail("cli.preset_invalid", name + ": base preset '" + m.base + "' not found");
            if (manifest(m.base).kind != "split") fail("cli.preset_invalid", name + ": base must be a split preset");
            default_action(name);
        }
    }
}

std::vector<std::filesystem::path> PresetCatalog::default_search_path() {
    std::vector<std::filesystem::path> dirs;
    if (const char* env = std::getenv("RAMSAT_PRESET_PATH"); env && *env) {
        std::string s(env);
        std::size_t start = 0;
        while (start <= s.size()) {
            std::size_t end = s.find(':', start);
            if (end == std::string::npos) end = s.size();
            if (end > start) dirs.emplace_back(s.substr(start, end - start));
            start = end + 1;
        }
    }
    dirs.emplace_back(RAMSAT_PRESET_DIR);
    return dirs;
}

const PresetCatalog& PresetCatalog::global() {
    static const PresetCatalog catalog(default_search_path());
    return catalog;
}

std::vector<std::string> PresetCatalog::names() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : manifests_) out.push_back(name);
    return out;
}

std::string PresetCatalog::canonical(const std::string& name) const {
    auto it = aliases_.find(name);
    return it == aliases_.end() ? name : it->second;
}

const PresetManifest& PresetCatalog::manifest(const std::string& name) const {
    auto it = manifests_.find(canonical(name));
    if (it == manifests_.end()) fail("root_datum.unknown_preset", "unknown preset '" + name + "'");
    return it->second;
}

const PresetManifest& PresetCatalog::datum_manifest(const std::string& name) const {
    const PresetManifest& m = manifest(name);
    return m.kind == "folded" ? manifest(m.base) : m;
}

BasedRootDatum PresetCatalog::datum(const std::string& name) const {
    const PresetManifest& m = datum_manifest(name);
    return BasedRootDatum::from_simple(m.name, m.rank, m.simple_roots, m.simple_coroots);
}

std::vector<std::string> PresetCatalog::action_names(const std::string& preset) const {
    std::vector<std::string> out{"trivial"};
    for (const auto& a : datum_manifest(preset).actions) out.push_back(a.name);
    return out;
}

PinnedAction PresetCatalog::action(const std::string& preset, const std::string& action_name) const {
    BasedRootDatum d = datum(preset);
    if (action_name == "trivial") return PinnedAction::trivial(d);
    for (const auto& a : datum_manifest(preset).actions) {
        if (a.name != action_name) continue;
        if (!a.permutations.empty() && !a.matrices.empty())
            fail("cli.preset_invalid", preset + ": action mixes perm and matrix generators");
        if (!a.permutations.empty()) return PinnedAction::from_permutations(d, a.name, a.permutations);
        return PinnedAction::from_matrices(d, a.name, a.matrices);
    }
    fail("folding.unknown_action", "preset '" + preset + "' has no action '" + action_name + "'");
}

PinnedAction PresetCatalog::default_action(const std::string& preset) const {
    const PresetManifest& m = manifest(preset);
    if (m.kind == "folded") return action(preset, *m.action_name);
    return PinnedAction::trivial(datum(preset));
}

std::vector<EchelonEntry> PresetCatalog::echelon_table(const std::string& preset) const {
    const PresetManifest& m = manifest(preset);
    if (m.kind == "folded") return m.echelon;
    BasedRootDatum d = datum(preset);
    std::vector<EchelonEntry> table;
    for (int i : d.positive_indices()) table.push_back(EchelonEntry{d.root_coefficients(i), Rational(1)});
    return table;
}

BasedRootDatum build_datum(const std::string& preset_name) { return PresetCatalog::global().datum(preset_name); }

} // namespace ramsat
