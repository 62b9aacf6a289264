#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "spectree/cospectral.hpp"

using namespace spectree;
using namespace spectree::testing;

#ifndef SPECTREE_DATA_DIR
#define SPECTREE_DATA_DIR "data"
#endif

namespace {

const std::string kTablePath = std::string(SPECTREE_DATA_DIR) + "/published_tables.json";

} // namespace

TEST_CASE("spectral keys") {
    SpectralKey k = spectral_key(path(4));
    CHECK(k.p == 4);
    CHECK(k.p_pen == 2);
    CHECK(k.poly.poly() == IntPoly{-1, 0, 4});
    CHECK_THROWS_AS(spectral_key(path(2)), std::invalid_argument);

    // relabeling does not change the key
    CHECK(spectral_key(relabel(path(4), {2, 0, 3, 1})) == k);
}

TEST_CASE("no cospectral trees below nine vertices") {
    for (int p = 3; p <= 8; ++p) CHECK(find_classes(p).empty());
}

TEST_CASE("the nine-vertex classes: one pair and one triple") {
    auto classes = find_classes(9);
    REQUIRE(classes.size() == 2);

    CHECK(classes[0].key.p_pen == 5);
    CHECK(classes[0].key.poly.poly() == IntPoly{1, 0, -22, 0, 48});
    CHECK(classes[0].members.size() == 2);

    CHECK(classes[1].key.p_pen == 6);
    CHECK(classes[1].key.poly.poly() == IntPoly{0, -1, 0, 6});
    CHECK(classes[1].members.size() == 3);

    for (const auto& cls : classes) {
        // members pairwise non-isomorphic, sorted
        std::set<std::string> codes;
        for (const auto& m : cls.members) codes.insert(m.code);
        CHECK(codes.size() == cls.members.size());
        for (std::size_t i = 0; i + 1 < cls.trees.size(); ++i)
            for (std::size_t j = i + 1; j < cls.trees.size(); ++j)
                CHECK_FALSE(is_isomorphic(cls.trees[i], cls.trees[j]));
        // and they share the key by construction
        for (const auto& t : cls.trees) CHECK(spectral_key(t) == cls.key);
    }
}

TEST_CASE("reference table loads with the expected shape") {
    auto table = load_reference_table(kTablePath);
    CHECK(table.size() == 91);
    int typos = 0;
    for (const auto& entry : table)
        if (entry.typo) ++typos;
    CHECK(typos == 5);
}

TEST_CASE("catalog regression against the reference tables") {
    auto table = load_reference_table(kTablePath);

    int total_matched = 0;
    std::vector<Correction> corrections;
    for (int p = 3; p <= 9; ++p) {
        CatalogReport report = verify_catalog(p, table);
        total_matched += report.matched;
        CHECK(report.unmatched_entries.empty());
        CHECK(report.unmatched_computed.empty());
        corrections.insert(corrections.end(), report.corrections.begin(),
                           report.corrections.end());
    }
    CHECK(total_matched == 83);
    REQUIRE(corrections.size() == 8);

    auto find = [&](const std::string& label) -> const Correction& {
        for (const auto& c : corrections)
            if (c.label == label) return c;
        static Correction missing;
        FAIL("missing correction for ", label);
        return missing;
    };

    // typographic entries: the obvious reading is confirmed
    CHECK(find("9,4^5").computed == IntPoly{0, -7, 0, 54, 0, -72});
    CHECK(find("9,4^7").computed == IntPoly{0, -7, 0, 50, 0, -72});
    CHECK(find("9,4^11").computed == IntPoly{0, -5, 0, 50, 0, -72});
    CHECK(find("9,7^2").computed == IntPoly{-1, 0, 18});
    // the parity-violating entry resolves to an odd polynomial
    CHECK(find("9,4^9").computed == IntPoly{0, -8, 0, 48, 0, -64});
    CHECK(find("9,4^9").kind == Correction::Kind::Typographic);

    // silently erroneous printed values, caught by exact computation
    CHECK(find("8,4^6").computed == IntPoly{0, 0, -12, 0, 32});
    CHECK(find("8,4^6").kind == Correction::Kind::Erroneous);
    CHECK(find("8,4^8").computed == IntPoly{1, 0, -16, 0, 32});
    CHECK(find("9,5^14").computed == IntPoly{0, 0, -16, 0, 48});

    // every correction obeys the parity invariant
    for (const auto& c : corrections) {
        int parity = c.computed.degree() % 2;
        for (int k = 0; k <= c.computed.degree(); ++k)
            if (k % 2 != parity) CHECK(c.computed.coeff(k) == 0);
    }
}

TEST_CASE("report rendering mentions corrections") {
    auto table = load_reference_table(kTablePath);
    std::string text = render_report(verify_catalog(9, table));
    CHECK(text.find("9,4^9") != std::string::npos);
    CHECK(text.find("-64z^5+48z^3-8z") != std::string::npos);
}
