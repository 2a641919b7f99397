#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbons/composition.hpp"
#include "ribbons/errors.hpp"
#include "ribbons/json_io.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace ribbons;

TEST_CASE("parsing accepts comma and compact forms") {
    CHECK(Composition::parse("2,2,1,2") == Composition({2, 2, 1, 2}));
    CHECK(Composition::parse("2212") == Composition({2, 2, 1, 2}));
    CHECK(Composition::parse(" 12 ") == Composition({1, 2}));
    CHECK(Composition::parse("10,3") == Composition({10, 3}));
    CHECK(Composition::parse("3").size() == 3);
    CHECK_THROWS_AS(Composition::parse("2,0,1"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
}

TEST_CASE("str round trips") {
    for (int n = 1; n <= 8; ++n)
        for (const Composition& beta : compositions_of(n))
            CHECK(Composition::parse(beta.str()) == beta);
    CHECK(Composition({2, 2, 1, 2}).str() == "2,2,1,2");
}

TEST_CASE("descent set partial sums") {
    CHECK(descent_set(Composition({2, 2, 1, 2})) == DescentSet(7, {2, 4, 5}));
    CHECK(descent_set(Composition({5})) == DescentSet(5, {}));
    CHECK(descent_set(Composition({1, 1, 1, 1})) == DescentSet(4, {1, 2, 3}));
}

TEST_CASE("composition of a subset") {
    CHECK(composition_of(DescentSet(6, {1, 3, 5})) == Composition({1, 2, 2, 1}));
    CHECK(composition_of(DescentSet(5, {})) == Composition({5}));
    CHECK(composition_of(DescentSet(7, {2, 4, 5})) == Composition({2, 2, 1, 2}));
}

TEST_CASE("subset bijection is exhaustive") {
    for (int n = 1; n <= 12; ++n) {
        std::set<std::string> seen;
        int count = 0;
        for (const Composition& beta : compositions_of(n)) {
            DescentSet s = descent_set(beta);
            CHECK(s.n() == n);
            CHECK(composition_of(s) == beta);
            seen.insert(s.str());
            ++count;
        }
        CHECK(count == (n == 0 ? 1 : 1 << (n - 1)));
        CHECK(static_cast<int>(seen.size()) == count);
    }
}

TEST_CASE("reversal") {
    CHECK(Composition({2, 2, 1, 2}).reversed() == Composition({2, 1, 2, 2}));
    CHECK(Composition({1, 2, 1, 3, 2}).reversed() == Composition({2, 3, 1, 2, 1}));
    CHECK(Composition({1, 2, 1}).reversed() == Composition({1, 2, 1}));
}

TEST_CASE("sorting to a partition") {
    CHECK(sort_to_partition(Composition({3, 2, 4, 3})) == Partition({4, 3, 3, 2}));
    CHECK(sort_to_partition(Composition({4, 3, 3, 2})) == Partition({4, 3, 3, 2}));
    CHECK(sort_to_partition(Composition({1, 1, 1})) == Partition({1, 1, 1}));
}

TEST_CASE("partition validation and conjugate") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK(Partition({3, 3}).conjugate() == Partition({2, 2, 2}));
    CHECK(Partition({4}).conjugate() == Partition({1, 1, 1, 1}));
    CHECK(Partition({2, 2, 1}).conjugate() == Partition({3, 2}));
    for (int n = 1; n <= 9; ++n)
        for (const Partition& l : partitions_of(n))
            CHECK(l.conjugate().conjugate() == l);
}

TEST_CASE("coarsenings of 211 in merge-mask order") {
    std::vector<Composition> c = coarsenings(Composition({2, 1, 1}));
    REQUIRE(c.size() == 4);
    CHECK(c[0] == Composition({2, 1, 1}));
    CHECK(c[1] == Composition({3, 1}));
    CHECK(c[2] == Composition({2, 2}));
    CHECK(c[3] == Composition({4}));
}

TEST_CASE("coarsening counts and boundary cases") {
    CHECK(coarsenings(Composition({7})).size() == 1);
    for (int n = 1; n <= 10; ++n)
        for (const Composition& beta : compositions_of(n))
            CHECK(coarsenings(beta).size() ==
                  (std::size_t(1) << (beta.length() - 1)));
}

TEST_CASE("coarsening multiset frozen values") {
    PartitionMultiset m211 = coarsening_multiset(Composition({2, 1, 1}));
    CHECK(m211.multiplicity(Partition({4})) == 1);
    CHECK(m211.multiplicity(Partition({3, 1})) == 1);
    CHECK(m211.multiplicity(Partition({2, 2})) == 1);
    CHECK(m211.multiplicity(Partition({2, 1, 1})) == 1);
    CHECK(m211.total() == 4);
    CHECK(m211 == coarsening_multiset(Composition({1, 1, 2})));

    PartitionMultiset m121 = coarsening_multiset(Composition({1, 2, 1}));
    CHECK(m121.multiplicity(Partition({4})) == 1);
    CHECK(m121.multiplicity(Partition({3, 1})) == 2);
    CHECK(m121.multiplicity(Partition({2, 1, 1})) == 1);
    CHECK(m121.multiplicity(Partition({2, 2})) == 0);
    CHECK(m121 != m211);

    CHECK(coarsening_multiset(Composition({2, 1, 1, 1})).multiplicity(Partition({3, 1, 1})) == 1);
    CHECK(coarsening_multiset(Composition({1, 2, 1, 1})).multiplicity(Partition({3, 1, 1})) == 2);
}

TEST_CASE("coarsening multiset invariants") {
    for (int n = 1; n <= 10; ++n) {
        for (const Composition& beta : compositions_of(n)) {
            PartitionMultiset m = coarsening_multiset(beta);
            CHECK(m.total() == (1ll << (beta.length() - 1)));
            CHECK(m.multiplicity(Partition({n})) == 1);
            CHECK(m.multiplicity(sort_to_partition(beta)) >= 1);
            CHECK(m == coarsening_multiset(beta.reversed()));
        }
    }
}

TEST_CASE("lexicographic order") {
    CHECK(lex_compare(Composition({1, 1, 1, 1}), Composition({1, 1, 2})) < 0);
    CHECK(lex_compare(Composition({4}), Composition({3, 1})) > 0);
    CHECK(lex_compare(Composition({2, 2}), Composition({2, 2})) == 0);
    std::vector<Composition> all = compositions_of(5);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front() == Composition({1, 1, 1, 1, 1}));
    CHECK(all.back() == Composition({5}));
}

TEST_CASE("partitions enumerate in canonical order") {
    std::vector<Partition> p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));
    CHECK(partitions_of(7).size() == 15);
    CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("type profile of 1,1,2,3,1") {
    TypeProfile t(Composition({1, 1, 2, 3, 1}));
    CHECK(t.n() == 8);
    CHECK(t.type_of(1) == 2);
    CHECK(t.type_of(2) == 1);
    CHECK(t.type_of(3) == 0);
    CHECK(t.type_of(4) == 2);
    CHECK(t.type_of(5) == 0);
    CHECK(t.type_of(6) == 1);
    CHECK(t.type_of(7) == 2);
    CHECK(t.type_of(8) == 0);
    CHECK(t.type_of(9) == t.type_of(1));
    CHECK(t.type_of(-1) == t.type_of(7));
}

TEST_CASE("doubled middle position") {
    TypeProfile t(Composition({2, 2}));
    CHECK(t.type_of(2) == 2);
    TypeProfile u(Composition({1, 3}));
    CHECK(u.type_of(2) == 0);
}

namespace {

std::string h_string(const Composition& beta) {
    TypeProfile t(beta);
    std::string s;
    for (int i = 1; i <= t.n(); ++i) {
        int v = t.h(i);
        s += v == 2 ? '2' : v == 1 ? '+' : v == -1 ? '-' : '0';
    }
    return s;
}

std::string g_string(const Composition& beta) {
    TypeProfile t(beta);
    std::string s;
    for (int i = 1; i <= t.n(); ++i) {
        int v = t.g(i);
        s += v == 1 ? '+' : v == -1 ? '-' : '0';
    }
    return s;
}

} // namespace

TEST_CASE("g and h strings of 1,3,2,1,2,1,3,3,2") {
    Composition beta({1, 3, 2, 1, 2, 1, 3, 3, 2});
    CHECK(beta.size() == 18);
    CHECK(g_string(beta) == "+-0+-++-0+--+-0+-0");
    CHECK(h_string(beta) == "+-0+-++-2+--+-0+-0");
}

TEST_CASE("h marks exactly the descent positions") {
    for (int n = 1; n <= 9; ++n)
        for (const Composition& beta : compositions_of(n)) {
            TypeProfile t(beta);
            DescentSet s = descent_set(beta);
            for (int i = 1; i < n; ++i) {
                bool in = s.contains(i);
                bool marked = t.h(i) == 1 || t.h(i) == 2;
                CHECK(in == marked);
            }
            CHECK(t.h(n) == 0);
        }
}

TEST_CASE("refinements invert coarsenings") {
    for (int n = 1; n <= 8; ++n)
        for (const Composition& beta : compositions_of(n))
            for (const Composition& gamma : refinements(beta)) {
                std::vector<Composition> c = coarsenings(gamma);
                CHECK(std::find(c.begin(), c.end(), beta) != c.end());
            }
    CHECK(refinements(Composition({3})).size() == 4);
    CHECK(refinements(Composition({1, 1})).size() == 1);
}

TEST_CASE("multiset serialization uses canonical key order") {
    PartitionMultiset m = coarsening_multiset(Composition({1, 2, 1}));
    CHECK(m.str() == "{\"4\": 1, \"3,1\": 2, \"2,1,1\": 1}");
    Json j = to_json(m);
    CHECK(j.dump() == "{\"4\":1,\"3,1\":2,\"2,1,1\":1}");
}

TEST_CASE("descent set validation") {
    CHECK_THROWS_AS(DescentSet(4, {4}), std::invalid_argument);
    CHECK_THROWS_AS(DescentSet(4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(DescentSet(4, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(DescentSet(4, {3, 1}), std::invalid_argument);
    CHECK(DescentSet(1, {}).elements().empty());
}
