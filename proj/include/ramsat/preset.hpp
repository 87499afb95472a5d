#pragma once

#include "ramsat/folding.hpp"
#include "ramsat/lattice.hpp"
#include "ramsat/root_datum.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramsat {

/// Walls of the apartment in the direction of an absolute root: the I-averaged
/// point v lies on a wall iff <v, alpha> is an integer multiple of stride.
struct EchelonEntry {
    IntVec root_coefficients; // absolute root in simple-root coordinates
    Rational stride;
};

struct ActionSpec {
    std::string name;
    std::vector<std::vector<int>> permutations; // 0-based simple-root images
    std::vector<IntMatrix> matrices;            // character-side generators
};

/// One preset file.
///
/// Format (one directive per line, '#' starts a comment):
///
///     preset <name>
///     alias <name> ...                       (other names accepted on lookup)
///     description <free text>
///     kind split|folded
///     lattice simply-connected|adjoint|custom
///     rank <n>                               (split only)
///     simple <root coords> ; <coroot coords>  (split only, one simple root per line)
///     action <name> perm <p_1> ... <p_l>      (1-based images of the simple roots)
///     action <name> matrix <row> ; <row> ...  (integer matrix on character coordinates)
///     base <preset>                          (folded only: the absolute datum)
///     uses-action <name>                     (folded only: action of the base preset)
///     echelon <c_1> ... <c_l> : <p>/<q>       (folded only: root in simple coordinates and stride)
///
/// Repeating an action name adds another generator to that action.
struct PresetManifest {
    std::string name;
    std::vector<std::string> aliases;
    std::string description;
    std::string kind = "split";
    std::string lattice_variant = "custom";
    int rank = 0;
    std::vector<IntVec> simple_roots, simple_coroots;
    std::vector<ActionSpec> actions;
    std::string base;
    std::optional<std::string> action_name;
    std::vector<EchelonEntry> echelon;
    std::filesystem::path source;
};

PresetManifest parse_preset(const std::string& text, const std::filesystem::path& source = {});

class PresetCatalog {
public:
    /// Loads every *.preset file in the given directories; later directories do not
    /// override earlier ones. Every manifest is validated on load.
    explicit PresetCatalog(const std::vector<std::filesystem::path>& dirs);

    /// Catalog from $RAMSAT_PRESET_PATH (colon separated) or the built-in data directory.
    static const PresetCatalog& global();
    static std::vector<std::filesystem::path> default_search_path();

    std::vector<std::string> names() const;
    bool contains(const std::string& name) const { return manifests_.count(canonical(name)) != 0; }
    /// The preset name behind an alias (or the name itself).
    std::string canonical(const std::string& name) const;
    const PresetManifest& manifest(const std::string& name) const;

    /// The absolute based root datum of a preset (the base datum for folded presets).
    BasedRootDatum datum(const std::string& name) const;
    /// A named action on the preset's datum; "trivial" is always available.
    PinnedAction action(const std::string& preset, const std::string& action_name) const;
    /// The action a folded preset declares, or the trivial action for split presets.
    PinnedAction default_action(const std::string& preset) const;
    /// Echelonnage table: the declared one for folded presets, stride 1 on every
    /// positive root for split presets.
    std::vector<EchelonEntry> echelon_table(const std::string& preset) const;
    std::vector<std::string> action_names(const std::string& preset) const;

private:
    const PresetManifest& datum_manifest(const std::string& name) const;
    std::map<std::string, PresetManifest> manifests_;
    std::map<std::string, std::string> aliases_;
};

/// Datum of a preset in the global catalog; root_datum.unknown_preset if absent.
BasedRootDatum build_datum(const std::string& preset_name);

} // namespace ramsat
