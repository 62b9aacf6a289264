#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "spectree/enumerate.hpp"

using namespace spectree;
using namespace spectree::testing;

TEST_CASE("free tree counts match the known sequence") {
    const int expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int p = 1; p <= 10; ++p) CHECK(enumerate_trees(p).size() == expected[p]);
}

TEST_CASE("counting oracle: Euler transform plus dissimilarity") {
    auto rooted = rooted_tree_counts(12);
    CHECK(rooted[5] == 9);
    CHECK(rooted[10] == 719);
    const int expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int p = 1; p <= 10; ++p) CHECK(free_tree_count(p, rooted) == expected[p]);
    CHECK(free_tree_count(11, rooted) == 235);
    CHECK(free_tree_count(12, rooted) == 551);
}

TEST_CASE("generation oracle: all labeled trees deduplicate to the same classes") {
    for (int p = 2; p <= 8; ++p) {
        std::set<std::string> codes;
        int seq_len = p - 2;
        long total = 1;
        for (int i = 0; i < seq_len; ++i) total *= p;
        std::vector<int> seq(seq_len, 0);
        for (long it = 0; it < total; ++it) {
            long v = it;
            for (int i = 0; i < seq_len; ++i) {
                seq[i] = static_cast<int>(v % p);
                v /= p;
            }
            codes.insert(canonical_code(tree_from_pruefer(seq, p)).code);
        }
        TreeCatalog catalog = enumerate_trees(p);
        CHECK(static_cast<int>(codes.size()) == catalog.size());
        for (const auto& entry : catalog.trees) CHECK(codes.contains(entry.code.code));
    }
}

TEST_CASE("catalog codes are pairwise distinct and sorted") {
    for (int p : {6, 9}) {
        TreeCatalog catalog = enumerate_trees(p);
        for (int i = 0; i + 1 < catalog.size(); ++i)
            CHECK(catalog.trees[i].code < catalog.trees[i + 1].code);
    }
}

TEST_CASE("pendant buckets match the published figure counts") {
    CHECK(count_by_pendants(enumerate_trees(7)) ==
          std::map<int, int>{{2, 1}, {3, 3}, {4, 4}, {5, 2}, {6, 1}});
    CHECK(count_by_pendants(enumerate_trees(8)) ==
          std::map<int, int>{{2, 1}, {3, 4}, {4, 8}, {5, 6}, {6, 3}, {7, 1}});
    CHECK(count_by_pendants(enumerate_trees(9)) ==
          std::map<int, int>{{2, 1}, {3, 5}, {4, 14}, {5, 14}, {6, 9}, {7, 3}, {8, 1}});
}

TEST_CASE("rooted level sequences have the expected counts") {
    CHECK(rooted_level_sequences(1).size() == 1);
    CHECK(rooted_level_sequences(4).size() == 4);
    CHECK(rooted_level_sequences(6).size() == 20);
    CHECK(rooted_level_sequences(10).size() == 719);
}

TEST_CASE("enumeration is deterministic") {
    TreeCatalog a = enumerate_trees(8), b = enumerate_trees(8);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) {
        CHECK(a.trees[i].code == b.trees[i].code);
        CHECK(a.trees[i].tree.edges() == b.trees[i].tree.edges());
    }
}

TEST_CASE("small catalogs contain the expected shapes") {
    TreeCatalog c4 = enumerate_trees(4);
    REQUIRE(c4.size() == 2);
    std::set<std::string> codes;
    for (const auto& e : c4.trees) codes.insert(e.code.code);
    CHECK(codes.contains(canonical_code(path(4)).code));
    CHECK(codes.contains(canonical_code(star(3)).code));
    CHECK(enumerate_trees(5).size() == 3);
}
