#include "doctest.h"

#include <algorithm>
#include <set>

#include "hfd/jamo.hpp"

using namespace hfd;
using namespace hfd::jamo;

namespace {
const JamoTables& tables() {
    static JamoTables t = JamoTables::load(JamoTables::default_dir());
    return t;
}
} // namespace

TEST_CASE("compose_block matches the Unicode syllable layout") {
    CHECK(compose_block(0, 0, 0).codepoint == char32_t{0xAC00});
    CHECK(compose_block(18, 20, 27).codepoint == char32_t{0xD7A3});
    CHECK(compose_block(0, 0, 1).codepoint == char32_t{0xAC01});
}

TEST_CASE("compose_block rejects out-of-range indices by field name") {
    CHECK_THROWS_WITH_AS(compose_block(19, 0, 0), doctest::Contains("initial"),
                         ArgumentError);
    CHECK_THROWS_WITH_AS(compose_block(0, 21, 0), doctest::Contains("medial"),
                         ArgumentError);
    CHECK_THROWS_WITH_AS(compose_block(0, 0, 28), doctest::Contains("final"),
                         ArgumentError);
    CHECK_THROWS_AS(compose_block(-1, 0, 0), ArgumentError);
}

TEST_CASE("decompose_block inverts composition") {
    CHECK(decompose_block(0xAC00) == JamoIndices{0, 0, 0});
    CHECK(decompose_block(0xD7A3) == JamoIndices{18, 20, 27});
    CHECK(decompose_block(0xAC1D) == JamoIndices{0, 1, 1});
    CHECK_THROWS_AS(decompose_block(0xABFF), DomainError);
    CHECK_THROWS_AS(decompose_block(0xD7A4), DomainError);
    CHECK_THROWS_AS(decompose_block(0x0041), DomainError);
}

TEST_CASE("roundtrip over the whole syllable range") {
    for (char32_t cp = kSyllableBase; cp <= kSyllableLast; ++cp) {
        auto idx = decompose_block(cp);
        CHECK(compose_block(idx.initial, idx.medial, idx.final_).codepoint == cp);
    }
}

TEST_CASE("enumerate_blocks yields 11172 sorted unique blocks") {
    auto blocks = enumerate_blocks();
    REQUIRE(blocks.size() == 11172);
    CHECK(blocks.front().codepoint == char32_t{0xAC00});
    CHECK(blocks.back().codepoint == char32_t{0xD7A3});
    CHECK(std::is_sorted(blocks.begin(), blocks.end(),
                         [](const BlockIdentity& a, const BlockIdentity& b) {
                             return a.codepoint < b.codepoint;
                         }));
    // position (i*21+m)*28+f holds compose_block(i,m,f)
    CHECK(blocks[(3 * 21 + 5) * 28 + 7] == compose_block(3, 5, 7));
}

TEST_CASE("geometry labels partition the jamo inventories") {
    const auto& t = tables();
    int doubles = 0;
    for (int i = 0; i < kInitialCount; ++i)
        if (t.initial_geometry(i) == InitialGeometry::Double) ++doubles;
    CHECK(doubles == 5); // the five doubled consonants

    std::array<int, 5> medial_counts{};
    for (int m = 0; m < kMedialCount; ++m)
        medial_counts[static_cast<size_t>(t.medial_geometry(m))]++;
    for (int c : medial_counts) CHECK(c > 0);

    std::array<int, 3> final_counts{};
    for (int f = 0; f < kFinalCount; ++f)
        final_counts[static_cast<size_t>(t.final_geometry(f))]++;
    CHECK(final_counts[0] == 1);
    CHECK(final_counts[1] > 0);
    CHECK(final_counts[2] > 0);
}

TEST_CASE("combined geometry takes exactly 30 distinct values") {
    const auto& t = tables();
    std::set<int> combined;
    for (const auto& b : enumerate_blocks()) {
        auto g = t.geometry_label(b);
        CHECK(g.combined == static_cast<int>(g.initial_geom) * 15 +
                                static_cast<int>(g.medial_geom) * 3 +
                                static_cast<int>(g.final_geom));
        if (b.indices.final_ == 0) CHECK(g.final_geom == FinalGeometry::None);
        if (g.final_geom == FinalGeometry::None) CHECK(b.indices.final_ == 0);
        combined.insert(g.combined);
    }
    CHECK(combined.size() == 30);
}

TEST_CASE("medial classification spot checks") {
    const auto& t = tables();
    CHECK(t.medial_geometry(0) == MedialGeometry::RightSingle);   // a
    CHECK(t.medial_geometry(1) == MedialGeometry::RightDouble);   // ae
    CHECK(t.medial_geometry(8) == MedialGeometry::Below);         // o
    CHECK(t.medial_geometry(9) == MedialGeometry::BelowRightSingle); // wa
    CHECK(t.medial_geometry(10) == MedialGeometry::BelowRightDouble); // wae
    CHECK(t.medial_geometry(20) == MedialGeometry::RightSingle);  // i
}

TEST_CASE("atom bags have the documented lengths and bit semantics") {
    const auto& t = tables();
    auto block = compose_block(0, 0, 0); // kiyeok + a, no final
    auto b16 = t.atom_bag(block, AtomMode::RotationCollapsed);
    auto b24 = t.atom_bag(block, AtomMode::RotationDistinct);
    REQUIRE(b16.bits.size() == 16);
    REQUIRE(b24.bits.size() == 24);

    // No final: bag is the union of initial and medial contributions only.
    auto with_final = t.atom_bag(compose_block(0, 0, 1), AtomMode::RotationDistinct);
    int extra = 0;
    for (size_t i = 0; i < b24.bits.size(); ++i) {
        CHECK(with_final.bits[i] >= b24.bits[i]);
        extra += with_final.bits[i] - b24.bits[i];
    }
    CHECK(extra == 0); // final kiyeok re-uses the initial's atom
}

TEST_CASE("collapse of the 24-bag reproduces the 16-bag for every block") {
    const auto& t = tables();
    for (const auto& b : enumerate_blocks()) {
        auto b24 = t.atom_bag(b, AtomMode::RotationDistinct);
        auto b16 = t.atom_bag(b, AtomMode::RotationCollapsed);
        CHECK(t.collapse(b24) == b16);
    }
}

TEST_CASE("jamo_glyph_list describes all 68 slots") {
    const auto& t = tables();
    auto list = t.jamo_glyph_list();
    REQUIRE(list.size() == 19 + 21 + 28);
    int counts[3] = {};
    for (const auto& d : list) counts[static_cast<int>(d.position)]++;
    CHECK(counts[0] == 19);
    CHECK(counts[1] == 21);
    CHECK(counts[2] == 28);

    const auto& empty_final = list[19 + 21 + 0];
    CHECK(empty_final.position == JamoPosition::Final);
    CHECK(empty_final.slot == 0);
    CHECK(empty_final.empty);
    CHECK(!empty_final.compat_codepoint.has_value());

    const auto& a = list[19 + 0];
    CHECK(a.compat_codepoint == char32_t{0x314F});
    CHECK(a.geometry_class == static_cast<int>(MedialGeometry::RightSingle));
}

TEST_CASE("tables are deterministic across loads") {
    auto t1 = JamoTables::load(JamoTables::default_dir());
    auto t2 = JamoTables::load(JamoTables::default_dir());
    for (const auto& b : {compose_block(5, 9, 3), compose_block(11, 18, 0)}) {
        CHECK(t1.geometry_label(b) == t2.geometry_label(b));
        CHECK(t1.atom_bag(b, AtomMode::RotationDistinct) ==
              t2.atom_bag(b, AtomMode::RotationDistinct));
    }
}
