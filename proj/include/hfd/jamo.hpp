#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hfd/errors.hpp"

namespace hfd::jamo {

inline constexpr int kInitialCount = 19;
inline constexpr int kMedialCount = 21;
inline constexpr int kFinalCount = 28; // slot 0 = no final consonant
inline constexpr int kBlockCount = kInitialCount * kMedialCount * kFinalCount; // 11,172

inline constexpr char32_t kSyllableBase = 0xAC00;
inline constexpr char32_t kSyllableLast = 0xD7A3;

/// (initial, medial, final) index triple of one syllable block.
struct JamoIndices {
    int initial = 0; // [0, 19)
    int medial = 0;  // [0, 21)
    int final_ = 0;  // [0, 28), 0 = no final

    bool operator==(const JamoIndices&) const = default;
};

/// A syllable block: its index triple plus the Unicode codepoint.
struct BlockIdentity {
    JamoIndices indices;
    char32_t codepoint = kSyllableBase;

    bool operator==(const BlockIdentity&) const = default;
};

enum class InitialGeometry : int { Single = 0, Double = 1 };

enum class MedialGeometry : int {
    Below = 0,
    RightSingle = 1,
    RightDouble = 2,
    BelowRightSingle = 3,
    BelowRightDouble = 4,
};

enum class FinalGeometry : int { None = 0, Single = 1, Double = 2 };

inline constexpr int kCombinedGeometryCount = 2 * 5 * 3; // 30

/// Geometry classes of a block plus the combined 30-way class.
struct GeometryLabel {
    InitialGeometry initial_geom = InitialGeometry::Single;
    MedialGeometry medial_geom = MedialGeometry::Below;
    FinalGeometry final_geom = FinalGeometry::None;
    int combined = 0; // initial*15 + medial*3 + final

    bool operator==(const GeometryLabel&) const = default;
};

enum class AtomMode { RotationCollapsed, RotationDistinct };

inline constexpr int kAtomCountCollapsed = 16;
inline constexpr int kAtomCountDistinct = 24;

/// Binary presence vector over the atom inventory.
struct AtomBag {
    AtomMode mode = AtomMode::RotationCollapsed;
    std::vector<std::uint8_t> bits; // length 16 or 24, values 0/1

    bool operator==(const AtomBag&) const = default;
};

enum class JamoPosition : int { Initial = 0, Medial = 1, Final = 2 };

/// One jamo slot: position, index, compatibility codepoint and geometry.
struct JamoDescriptor {
    JamoPosition position = JamoPosition::Initial;
    int slot = 0;
    std::optional<char32_t> compat_codepoint; // U+3131..U+3163; empty final has none
    int geometry_class = 0;                   // index within the position's enum
    std::string name;                         // romanized letter name
    bool empty = false;                       // true only for final slot 0
};

/// Codepoint = base + (initial*21 + medial)*28 + final. Throws ArgumentError
/// naming the offending field when an index is out of range.
BlockIdentity compose_block(int initial, int medial, int final_);

/// Inverse of compose_block. Throws DomainError outside U+AC00..U+D7A3.
JamoIndices decompose_block(char32_t codepoint);

/// All 11,172 blocks in codepoint order.
std::vector<BlockIdentity> enumerate_blocks();

/// Geometry and atom tables shipped as data files. Immutable once loaded;
/// safe to share across threads.
class JamoTables {
public:
    /// Loads and validates jamo_geometry.txt and atom_inventory.txt from
    /// `dir`. Throws ConfigError on missing files, schema mismatch, or any
    /// violated table invariant (partition sizes, atom list lengths, ...).
    static JamoTables load(const std::filesystem::path& dir);

    /// Resolves the data directory: explicit argument > HFD_DATA_DIR
    /// environment variable > compiled-in source-tree default.
    static std::filesystem::path default_dir();

    GeometryLabel geometry_label(const BlockIdentity& block) const;
    AtomBag atom_bag(const BlockIdentity& block, AtomMode mode) const;

    /// Descriptors for the 19+21+28 jamo slots, initials first.
    std::vector<JamoDescriptor> jamo_glyph_list() const;

    InitialGeometry initial_geometry(int slot) const;
    MedialGeometry medial_geometry(int slot) const;
    FinalGeometry final_geometry(int slot) const;

    const std::vector<std::string>& atom_names(AtomMode mode) const;

    /// Applies the inventory's rotation-collapse map to a 24-atom bag.
    AtomBag collapse(const AtomBag& distinct_bag) const;

    /// Atom multiset of one jamo slot, as indices into the distinct list.
    const std::vector<int>& jamo_atoms(JamoPosition pos, int slot) const;

private:
    JamoTables() = default;
    void validate() const;

    std::array<InitialGeometry, kInitialCount> initial_geom_{};
    std::array<MedialGeometry, kMedialCount> medial_geom_{};
    std::array<FinalGeometry, kFinalCount> final_geom_{};
    std::vector<JamoDescriptor> descriptors_;
    std::vector<std::string> atoms16_;
    std::vector<std::string> atoms24_;
    std::vector<int> collapse_;                    // distinct index -> collapsed index
    std::vector<std::vector<int>> jamo_atoms_[3];  // per position, per slot
};

/// Compatibility-jamo codepoint for a slot, if one exists (final 0 has none).
std::optional<char32_t> compat_codepoint(JamoPosition pos, int slot);

} // namespace hfd::jamo
