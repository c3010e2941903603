#include "hfd/jamo.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hfd::jamo {

namespace {

// Compatibility-jamo codepoints per slot (Unicode Hangul Compatibility
// Jamo block). The empty final has no codepoint.
constexpr std::array<char32_t, kInitialCount> kInitialCompat = {
    0x3131, 0x3132, 0x3134, 0x3137, 0x3138, 0x3139, 0x3141, 0x3142, 0x3143,
    0x3145, 0x3146, 0x3147, 0x3148, 0x3149, 0x314A, 0x314B, 0x314C, 0x314D,
    0x314E};

constexpr std::array<char32_t, kMedialCount> kMedialCompat = {
    0x314F, 0x3150, 0x3151, 0x3152, 0x3153, 0x3154, 0x3155, 0x3156, 0x3157,
    0x3158, 0x3159, 0x315A, 0x315B, 0x315C, 0x315D, 0x315E, 0x315F, 0x3160,
    0x3161, 0x3162, 0x3163};

constexpr std::array<char32_t, kFinalCount> kFinalCompat = {
    0,      0x3131, 0x3132, 0x3133, 0x3134, 0x3135, 0x3136, 0x3137, 0x3139,
    0x313A, 0x313B, 0x313C, 0x313D, 0x313E, 0x313F, 0x3140, 0x3141, 0x3142,
    0x3144, 0x3145, 0x3146, 0x3147, 0x3148, 0x314A, 0x314B, 0x314C, 0x314D,
    0x314E};

int position_count(JamoPosition pos) {
    switch (pos) {
    case JamoPosition::Initial: return kInitialCount;
    case JamoPosition::Medial: return kMedialCount;
    case JamoPosition::Final: return kFinalCount;
    }
    return 0;
}

char32_t parse_codepoint(const std::string& tok) {
    if (tok.size() < 3 || tok[0] != 'U' || tok[1] != '+')
        throw ConfigError("bad codepoint token '" + tok + "'");
    return static_cast<char32_t>(std::stoul(tok.substr(2), nullptr, 16));
}

InitialGeometry parse_initial_geom(const std::string& s) {
    if (s == "single") return InitialGeometry::Single;
    if (s == "double") return InitialGeometry::Double;
    throw ConfigError("unknown initial geometry '" + s + "'");
}

MedialGeometry parse_medial_geom(const std::string& s) {
    if (s == "below") return MedialGeometry::Below;
    if (s == "right-single") return MedialGeometry::RightSingle;
    if (s == "right-double") return MedialGeometry::RightDouble;
    if (s == "below-right-single") return MedialGeometry::BelowRightSingle;
    if (s == "below-right-double") return MedialGeometry::BelowRightDouble;
    throw ConfigError("unknown medial geometry '" + s + "'");
}

FinalGeometry parse_final_geom(const std::string& s) {
    if (s == "none") return FinalGeometry::None;
    if (s == "single") return FinalGeometry::Single;
    if (s == "double") return FinalGeometry::Double;
    throw ConfigError("unknown final geometry '" + s + "'");
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

// Reads non-comment lines and checks the "schema <name> <version>" header.
std::vector<std::vector<std::string>> read_records(const std::filesystem::path& file,
                                                   const std::string& schema_name,
                                                   int schema_version) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open table file " + file.string());
    std::vector<std::vector<std::string>> records;
    std::string line;
    bool schema_seen = false;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "schema") {
            if (toks.size() != 3 || toks[1] != schema_name ||
                std::stoi(toks[2]) != schema_version)
                throw ConfigError("unexpected schema in " + file.string() +
                                  " (want " + schema_name + " " +
                                  std::to_string(schema_version) + ")");
            schema_seen = true;
            continue;
        }
        if (!schema_seen)
            throw ConfigError("missing schema header in " + file.string());
        records.push_back(std::move(toks));
    }
    return records;
}

JamoPosition parse_position(const std::string& s, const std::filesystem::path& file) {
    if (s == "I") return JamoPosition::Initial;
    if (s == "M") return JamoPosition::Medial;
    if (s == "F") return JamoPosition::Final;
    throw ConfigError("bad position '" + s + "' in " + file.string());
}

} // namespace

BlockIdentity compose_block(int initial, int medial, int final_) {
    if (initial < 0 || initial >= kInitialCount)
        throw ArgumentError("initial index " + std::to_string(initial) +
                            " outside [0, 19)");
    if (medial < 0 || medial >= kMedialCount)
        throw ArgumentError("medial index " + std::to_string(medial) +
                            " outside [0, 21)");
    if (final_ < 0 || final_ >= kFinalCount)
        throw ArgumentError("final index " + std::to_string(final_) +
                            " outside [0, 28)");
    BlockIdentity b;
    b.indices = {initial, medial, final_};
    b.codepoint = kSyllableBase +
                  static_cast<char32_t>((initial * kMedialCount + medial) * kFinalCount +
                                        final_);
    return b;
}

JamoIndices decompose_block(char32_t codepoint) {
    if (codepoint < kSyllableBase || codepoint > kSyllableLast)
        throw DomainError("codepoint U+" + [&] {
            std::ostringstream os;
            os << std::hex << std::uppercase << static_cast<std::uint32_t>(codepoint);
            return os.str();
        }() + " outside the Hangul syllable range");
    int offset = static_cast<int>(codepoint - kSyllableBase);
    JamoIndices idx;
    idx.final_ = offset % kFinalCount;
    idx.medial = (offset / kFinalCount) % kMedialCount;
    idx.initial = offset / (kFinalCount * kMedialCount);
    return idx;
}

std::vector<BlockIdentity> enumerate_blocks() {
    std::vector<BlockIdentity> blocks;
    blocks.reserve(kBlockCount);
    for (int i = 0; i < kInitialCount; ++i)
        for (int m = 0; m < kMedialCount; ++m)
            for (int f = 0; f < kFinalCount; ++f) blocks.push_back(compose_block(i, m, f));
    return blocks;
}

std::optional<char32_t> compat_codepoint(JamoPosition pos, int slot) {
    if (slot < 0 || slot >= position_count(pos))
        throw ArgumentError("jamo slot " + std::to_string(slot) + " out of range");
    switch (pos) {
    case JamoPosition::Initial: return kInitialCompat[static_cast<size_t>(slot)];
    case JamoPosition::Medial: return kMedialCompat[static_cast<size_t>(slot)];
    case JamoPosition::Final:
        if (slot == 0) return std::nullopt;
        return kFinalCompat[static_cast<size_t>(slot)];
    }
    return std::nullopt;
}

std::filesystem::path JamoTables::default_dir() {
    if (const char* env = std::getenv("HFD_DATA_DIR"); env && *env)
        return std::filesystem::path(env);
#ifdef HFD_SOURCE_DIR
    return std::filesystem::path(HFD_SOURCE_DIR) / "data";
#else
    return std::filesystem::path("data");
#endif
}

JamoTables JamoTables::load(const std::filesystem::path& dir) {
    JamoTables t;

    // --- geometry table ---
    auto geo = read_records(dir / "jamo_geometry.txt", "hfd-jamo-geometry", 1);
    std::set<std::pair<int, int>> seen;
    for (const auto& r : geo) {
        if (r.size() != 5)
            throw ConfigError("geometry record needs 5 fields, got " +
                              std::to_string(r.size()));
        JamoPosition pos = parse_position(r[0], dir / "jamo_geometry.txt");
        int slot = std::stoi(r[1]);
        if (slot < 0 || slot >= position_count(pos))
            throw ConfigError("geometry slot out of range: " + r[0] + " " + r[1]);
        if (!seen.insert({static_cast<int>(pos), slot}).second)
            throw ConfigError("duplicate geometry record " + r[0] + " " + r[1]);

        std::optional<char32_t> compat;
        if (r[2] != "-") compat = parse_codepoint(r[2]);
        if (compat != compat_codepoint(pos, slot))
            throw ConfigError("compat codepoint mismatch at " + r[0] + " " + r[1]);

        JamoDescriptor d;
        d.position = pos;
        d.slot = slot;
        d.compat_codepoint = compat;
        d.name = r[4];
        switch (pos) {
        case JamoPosition::Initial:
            t.initial_geom_[static_cast<size_t>(slot)] = parse_initial_geom(r[3]);
            d.geometry_class = static_cast<int>(t.initial_geom_[static_cast<size_t>(slot)]);
            break;
        case JamoPosition::Medial:
            t.medial_geom_[static_cast<size_t>(slot)] = parse_medial_geom(r[3]);
            d.geometry_class = static_cast<int>(t.medial_geom_[static_cast<size_t>(slot)]);
            break;
        case JamoPosition::Final:
            t.final_geom_[static_cast<size_t>(slot)] = parse_final_geom(r[3]);
            d.geometry_class = static_cast<int>(t.final_geom_[static_cast<size_t>(slot)]);
            d.empty = (slot == 0);
            break;
        }
        t.descriptors_.push_back(std::move(d));
    }
    if (seen.size() != kInitialCount + kMedialCount + kFinalCount)
        throw ConfigError("geometry table incomplete: " + std::to_string(seen.size()) +
                          " records");
    std::sort(t.descriptors_.begin(), t.descriptors_.end(),
              [](const JamoDescriptor& a, const JamoDescriptor& b) {
                  return std::pair(static_cast<int>(a.position), a.slot) <
                         std::pair(static_cast<int>(b.position), b.slot);
              });

    // --- atom inventory ---
    auto inv = read_records(dir / "atom_inventory.txt", "hfd-atom-inventory", 1);
    std::map<std::string, int> idx16, idx24;
    for (int p = 0; p < 3; ++p)
        t.jamo_atoms_[p].assign(
            static_cast<size_t>(position_count(static_cast<JamoPosition>(p))), {});
    std::vector<std::pair<std::string, std::string>> collapse_lines;
    bool jamo_seen[3][kFinalCount] = {};
    for (const auto& r : inv) {
        if (r[0] == "atoms16") {
            for (size_t i = 1; i < r.size(); ++i) {
                if (!idx16.emplace(r[i], static_cast<int>(i - 1)).second)
                    throw ConfigError("duplicate collapsed atom '" + r[i] + "'");
                t.atoms16_.push_back(r[i]);
            }
        } else if (r[0] == "atoms24") {
            for (size_t i = 1; i < r.size(); ++i) {
                if (!idx24.emplace(r[i], static_cast<int>(i - 1)).second)
                    throw ConfigError("duplicate distinct atom '" + r[i] + "'");
                t.atoms24_.push_back(r[i]);
            }
        } else if (r[0] == "collapse") {
            if (r.size() != 3) throw ConfigError("collapse record needs 2 fields");
            collapse_lines.emplace_back(r[1], r[2]);
        } else if (r[0] == "jamo") {
            if (r.size() < 3) throw ConfigError("jamo record needs pos and slot");
            JamoPosition pos = parse_position(r[1], dir / "atom_inventory.txt");
            int slot = std::stoi(r[2]);
            if (slot < 0 || slot >= position_count(pos))
                throw ConfigError("atom record slot out of range: " + r[1] + " " + r[2]);
            auto& dst = t.jamo_atoms_[static_cast<int>(pos)][static_cast<size_t>(slot)];
            for (size_t i = 3; i < r.size(); ++i) {
                auto it = idx24.find(r[i]);
                if (it == idx24.end())
                    throw ConfigError("unknown atom '" + r[i] + "' at " + r[1] + " " + r[2]);
                dst.push_back(it->second);
            }
            jamo_seen[static_cast<int>(pos)][slot] = true;
        } else {
            throw ConfigError("unknown record type '" + r[0] + "' in atom inventory");
        }
    }
    if (t.atoms16_.size() != kAtomCountCollapsed)
        throw ConfigError("atoms16 must list exactly 16 atoms");
    if (t.atoms24_.size() != kAtomCountDistinct)
        throw ConfigError("atoms24 must list exactly 24 atoms");
    t.collapse_.assign(kAtomCountDistinct, -1);
    for (const auto& [from, to] : collapse_lines) {
        auto f = idx24.find(from);
        auto c = idx16.find(to);
        if (f == idx24.end() || c == idx16.end())
            throw ConfigError("collapse references unknown atom: " + from + " -> " + to);
        if (t.collapse_[static_cast<size_t>(f->second)] != -1)
            throw ConfigError("duplicate collapse entry for '" + from + "'");
        t.collapse_[static_cast<size_t>(f->second)] = c->second;
    }
    for (int p = 0; p < 3; ++p)
        for (int s = 0; s < position_count(static_cast<JamoPosition>(p)); ++s)
            if (!jamo_seen[p][s])
                throw ConfigError("atom inventory missing jamo record for slot " +
                                  std::to_string(s));

    t.validate();
    return t;
}

void JamoTables::validate() const {
    // Geometry partition: 2/5/3 classes, all non-empty, none-class singleton.
    std::array<int, 2> icount{};
    for (auto g : initial_geom_) icount[static_cast<size_t>(g)]++;
    if (icount[0] == 0 || icount[1] == 0)
        throw ConfigError("initial geometry classes must both be non-empty");
    std::array<int, 5> mcount{};
    for (auto g : medial_geom_) mcount[static_cast<size_t>(g)]++;
    for (int c : mcount)
        if (c == 0) throw ConfigError("every medial geometry class must be non-empty");
    std::array<int, 3> fcount{};
    for (auto g : final_geom_) fcount[static_cast<size_t>(g)]++;
    if (fcount[0] != 1)
        throw ConfigError("final geometry 'none' class must contain exactly slot 0");
    if (final_geom_[0] != FinalGeometry::None)
        throw ConfigError("final slot 0 must have geometry 'none'");
    if (fcount[1] == 0 || fcount[2] == 0)
        throw ConfigError("final single/double classes must be non-empty");

    // Collapse map total and surjective.
    std::set<int> hit;
    for (int c : collapse_) {
        if (c < 0) throw ConfigError("collapse map does not cover every distinct atom");
        hit.insert(c);
    }
    if (hit.size() != kAtomCountCollapsed)
        throw ConfigError("collapse map must be onto the 16 collapsed atoms");

    // Every jamo slot non-empty except final 0.
    for (int p = 0; p < 3; ++p) {
        const auto& per = jamo_atoms_[p];
        for (size_t s = 0; s < per.size(); ++s) {
            bool must_be_empty = (p == static_cast<int>(JamoPosition::Final) && s == 0);
            if (must_be_empty && !per[s].empty())
                throw ConfigError("final slot 0 must map to the empty multiset");
            if (!must_be_empty && per[s].empty())
                throw ConfigError("jamo slot has empty atom multiset");
        }
    }
}

GeometryLabel JamoTables::geometry_label(const BlockIdentity& block) const {
    const auto& idx = block.indices;
    if (idx.initial < 0 || idx.initial >= kInitialCount || idx.medial < 0 ||
        idx.medial >= kMedialCount || idx.final_ < 0 || idx.final_ >= kFinalCount)
        throw ArgumentError("block indices out of range");
    GeometryLabel g;
    g.initial_geom = initial_geom_[static_cast<size_t>(idx.initial)];
    g.medial_geom = medial_geom_[static_cast<size_t>(idx.medial)];
    g.final_geom = final_geom_[static_cast<size_t>(idx.final_)];
    g.combined = static_cast<int>(g.initial_geom) * 15 +
                 static_cast<int>(g.medial_geom) * 3 + static_cast<int>(g.final_geom);
    return g;
}

AtomBag JamoTables::atom_bag(const BlockIdentity& block, AtomMode mode) const {
    const auto& idx = block.indices;
    AtomBag distinct;
    distinct.mode = AtomMode::RotationDistinct;
    distinct.bits.assign(kAtomCountDistinct, 0);
    for (int a : jamo_atoms_[0][static_cast<size_t>(idx.initial)])
        distinct.bits[static_cast<size_t>(a)] = 1;
    for (int a : jamo_atoms_[1][static_cast<size_t>(idx.medial)])
        distinct.bits[static_cast<size_t>(a)] = 1;
    for (int a : jamo_atoms_[2][static_cast<size_t>(idx.final_)])
        distinct.bits[static_cast<size_t>(a)] = 1;
    if (mode == AtomMode::RotationDistinct) return distinct;
    return collapse(distinct);
}

AtomBag JamoTables::collapse(const AtomBag& distinct_bag) const {
    if (distinct_bag.mode != AtomMode::RotationDistinct ||
        distinct_bag.bits.size() != kAtomCountDistinct)
        throw ArgumentError("collapse expects a 24-atom rotation-distinct bag");
    AtomBag bag;
    bag.mode = AtomMode::RotationCollapsed;
    bag.bits.assign(kAtomCountCollapsed, 0);
    for (size_t i = 0; i < distinct_bag.bits.size(); ++i)
        if (distinct_bag.bits[i]) bag.bits[static_cast<size_t>(collapse_[i])] = 1;
    return bag;
}

std::vector<JamoDescriptor> JamoTables::jamo_glyph_list() const { return descriptors_; }

InitialGeometry JamoTables::initial_geometry(int slot) const {
    if (slot < 0 || slot >= kInitialCount) throw ArgumentError("initial slot out of range");
    return initial_geom_[static_cast<size_t>(slot)];
}

MedialGeometry JamoTables::medial_geometry(int slot) const {
    if (slot < 0 || slot >= kMedialCount) throw ArgumentError("medial slot out of range");
    return medial_geom_[static_cast<size_t>(slot)];
}

FinalGeometry JamoTables::final_geometry(int slot) const {
    if (slot < 0 || slot >= kFinalCount) throw ArgumentError("final slot out of range");
    return final_geom_[static_cast<size_t>(slot)];
}

const std::vector<std::string>& JamoTables::atom_names(AtomMode mode) const {
    return mode == AtomMode::RotationCollapsed ? atoms16_ : atoms24_;
}

const std::vector<int>& JamoTables::jamo_atoms(JamoPosition pos, int slot) const {
    if (slot < 0 || slot >= position_count(pos))
        throw ArgumentError("jamo slot out of range");
    return jamo_atoms_[static_cast<int>(pos)][static_cast<size_t>(slot)];
}

} // namespace hfd::jamo
