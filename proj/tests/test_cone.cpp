#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbons/comp_ops.hpp"
#include "ribbons/cone.hpp"
#include "ribbons/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace ribbons;

namespace {

Composition C(const std::string& s) { return Composition::parse(s); }
Partition P(const std::string& s) { return Partition::parse(s); }

std::string schur_str(const std::map<Partition, Rat, PartitionOrder>& m) {
    std::string out;
    for (const auto& [l, c] : m)
        out += l.str() + ":" + rat_str(c) + ";";
    return out;
}

std::set<std::string> schur_set(const std::vector<ConeRay>& rays) {
    std::set<std::string> out;
    for (const ConeRay& r : rays)
        out.insert(schur_str(r.schur));
    return out;
}

} // namespace

TEST_CASE("class representatives") {
    std::vector<Composition> r4 = class_representatives(4);
    REQUIRE(r4.size() == 6);
    CHECK(r4[0] == C("1111"));
    CHECK(std::find(r4.begin(), r4.end(), C("112")) != r4.end());
    CHECK(std::find(r4.begin(), r4.end(), C("211")) == r4.end());
    // representative count for n = 1..6: every composition is lex-least in
    // its own class exactly once
    std::vector<std::size_t> want = {1, 2, 3, 6, 10, 20};
    for (int n = 1; n <= 6; ++n) {
        std::vector<Composition> reps = class_representatives(n);
        CHECK(reps.size() == want[static_cast<std::size_t>(n - 1)]);
        std::size_t covered = 0;
        for (const Composition& rep : reps) {
            std::vector<Composition> cl = equivalence_class(rep);
            CHECK(cl.front() == rep);
            covered += cl.size();
        }
        CHECK(covered == (std::size_t(1) << (n - 1)));
    }
}

TEST_CASE("multiplicity vectors separate classes") {
    CHECK(cone_vector(C("211")) == cone_vector(C("112")));
    CHECK(cone_vector(C("211")) != cone_vector(C("121")));
    for (int n = 1; n <= 8; ++n)
        for (const Composition& a : compositions_of(n))
            for (const Composition& b : compositions_of(n))
                CHECK((cone_vector(a) == cone_vector(b)) == equivalent(a, b));
}

TEST_CASE("matrix of multiplicities") {
    RayMatrix m = ray_matrix(4);
    CHECK(m.rows.size() == 5);
    CHECK(m.cols.size() == 8);
    // column of 1111 is the coarsening multiset of 1111: one of everything
    std::size_t c1111 = 0;
    for (std::size_t j = 0; j < m.cols.size(); ++j)
        if (m.cols[j] == C("1111"))
            c1111 = j;
    long long sum = 0;
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        sum += m.entries[i][c1111];
    CHECK(sum == 8);
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
        std::vector<long long> col(m.rows.size());
        for (std::size_t i = 0; i < m.rows.size(); ++i)
            col[i] = m.entries[i][j];
        CHECK(col == cone_vector(m.cols[j]));
    }
}

TEST_CASE("run profiles") {
    CHECK(run_profile({2, 3, 5, 7, 8, 9}) == std::vector<int>{3, 2, 1});
    CHECK(run_profile({}) == std::vector<int>{});
    CHECK(run_profile({4}) == std::vector<int>{1});
    CHECK(run_profile({1, 2, 3}) == std::vector<int>{3});
    CHECK(run_profile({5, 1, 2}) == std::vector<int>{2, 1}); // order-insensitive
    CHECK_THROWS_AS(run_profile({2, 2}), std::invalid_argument);
}

TEST_CASE("profile classes of subsets") {
    // lambda = 432111 over [11]: required runs {3, 2, 1}
    std::vector<std::vector<int>> fam = f_lambda(P("432111"), 11);
    CHECK(std::find(fam.begin(), fam.end(),
                    std::vector<int>{2, 3, 5, 7, 8, 9}) != fam.end());
    for (const auto& s : fam)
        CHECK(run_profile(s) == std::vector<int>{3, 2, 1});

    // all-ones partition: only the empty subset qualifies
    std::vector<std::vector<int>> e = f_lambda(P("11111"), 4);
    REQUIRE(e.size() == 1);
    CHECK(e[0].empty());

    // single part n+1: only the full interval
    std::vector<std::vector<int>> full = f_lambda(P("5"), 4);
    REQUIRE(full.size() == 1);
    CHECK(full[0] == std::vector<int>{1, 2, 3, 4});

    // one part above 1: exactly the singletons
    std::vector<std::vector<int>> singles = f_lambda(P("2111"), 4);
    CHECK(singles.size() == 4);
    for (const auto& s : singles)
        CHECK(s.size() == 1);

    // two parts above 1: pairs with a gap
    std::vector<std::vector<int>> pairs = f_lambda(P("221"), 4);
    REQUIRE(pairs.size() == 3);
    for (const auto& s : pairs) {
        REQUIRE(s.size() == 2);
        CHECK(s[1] > s[0] + 1);
    }

    CHECK_THROWS_AS(f_lambda(P("32"), 3), std::invalid_argument); // 5 != 3+1

    // partition of the subset counts: every subset of [n] has exactly one profile
    for (int n = 1; n <= 6; ++n) {
        std::size_t total = 0;
        for (const Partition& l : partitions_of(n + 1))
            total += f_lambda(l, n).size();
        CHECK(total == (std::size_t(1) << n));
    }
}

TEST_CASE("multicollection generating function") {
    Multicollection mc;
    mc.n = 3;
    mc.weights[{1, 3}] = 1;
    mc.weights[{2}] = 2;
    QsymExpr f = multicollection_to_f(mc);
    CHECK(f.degree() == 4);
    CHECK(f.basis() == Basis::F);
    CHECK(f.coeff(C("121")) == 1);
    CHECK(f.coeff(C("22")) == 2);
    CHECK(f.terms().size() == 2);
}

TEST_CASE("covering sums") {
    // the F-support of s_22 over [3]: subsets {2} and {1,3}, weight 1 each
    Multicollection mc;
    mc.n = 3;
    mc.weights[{2}] = 1;
    mc.weights[{1, 3}] = 1;

    auto k22 = balanced_check(mc, P("22"));   // required profile {1}
    REQUIRE(k22.has_value());
    CHECK(*k22 == 1);
    auto k211 = balanced_check(mc, P("211")); // required profile {1, 1}
    REQUIRE(k211.has_value());
    CHECK(*k211 == 1);
    auto k1111 = balanced_check(mc, P("1111"));
    REQUIRE(k1111.has_value());
    CHECK(*k1111 == 2); // empty target covered by everything
    auto k31 = balanced_check(mc, P("31"));   // runs {2}: subsets {1,2},{2,3}
    REQUIRE(k31.has_value());
    CHECK(*k31 == 0);
    CHECK(fully_balanced(mc));
    CHECK(is_symmetric(multicollection_to_f(mc)));

    // drop one weight: no longer balanced
    mc.weights[{1, 3}] = 2;
    CHECK_FALSE(balanced_check(mc, P("211")).has_value());
    CHECK_FALSE(fully_balanced(mc));
    CHECK_FALSE(is_symmetric(multicollection_to_f(mc)));

    // the empty multicollection covers everything zero times
    Multicollection none;
    none.n = 3;
    for (const Partition& l : partitions_of(4)) {
        auto k = balanced_check(none, l);
        REQUIRE(k.has_value());
        CHECK(*k == 0);
    }
    CHECK(fully_balanced(none));

    // one lone set cannot balance the singleton family
    Multicollection lone;
    lone.n = 2;
    lone.weights[{2}] = 1; // the F-support of F_21 by itself
    CHECK_FALSE(balanced_check(lone, P("21")).has_value());
    CHECK_FALSE(fully_balanced(lone));
    CHECK_FALSE(is_symmetric(multicollection_to_f(lone)));
}

TEST_CASE("balance coincides with symmetry on random instances") {
    std::mt19937_64 rng(771234);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            Multicollection mc;
            mc.n = n;
            if (trial % 2 == 0) {
                // random nonnegative combination of Schur F-supports
                for (const Partition& l : partitions_of(n + 1)) {
                    long long w = static_cast<long long>(rng() % 3);
                    if (w == 0)
                        continue;
                    QsymExpr s = schur_in_f(l);
                    for (const auto& [g, c] : s.terms()) {
                        DescentSet d = descent_set(g);
                        mc.weights[d.elements()] += c * w;
                    }
                }
            } else {
                // random sparse subset weights
                for (int bits = 0; bits < (1 << n); ++bits) {
                    if (rng() % 4 != 0)
                        continue;
                    std::vector<int> s;
                    for (int i = 1; i <= n; ++i)
                        if (bits & (1 << (i - 1)))
                            s.push_back(i);
                    mc.weights[s] = static_cast<long long>(rng() % 3 + 1);
                }
            }
            CHECK(fully_balanced(mc) == is_symmetric(multicollection_to_f(mc)));
        }
    }
}

TEST_CASE("extreme rays at small degree") {
    std::vector<ConeRay> r1 = extreme_rays(1);
    CHECK(r1.size() == 1);
    for (int n = 1; n <= 3; ++n) {
        std::vector<ConeRay> rays = extreme_rays(n);
        CHECK(rays.size() == partitions_of(n).size());
        std::set<std::string> seen = schur_set(rays);
        for (const Partition& l : partitions_of(n)) {
            std::map<Partition, Rat, PartitionOrder> want;
            want[l] = 1;
            CHECK(seen.count(schur_str(want)) == 1);
        }
    }
}

TEST_CASE("extreme rays at degree four") {
    std::vector<ConeRay> rays = extreme_rays(4);
    REQUIRE(rays.size() == 6);
    std::map<Partition, Rat, PartitionOrder> extra;
    extra[P("31")] = 1;
    extra[P("22")] = -1;
    extra[P("211")] = 1;
    CHECK(schur_set(rays).count(schur_str(extra)) == 1);
    for (const ConeRay& r : rays) {
        CHECK(!r.fundamental.is_zero());
        for (const auto& [g, c] : r.fundamental.terms())
            CHECK(c > 0);
        CHECK(is_symmetric(r.fundamental));
    }
    // the extra ray's F-expansion
    for (const ConeRay& r : rays)
        if (r.schur.size() == 3) {
            CHECK(r.fundamental.coeff(C("31")) == 1);
            CHECK(r.fundamental.coeff(C("13")) == 1);
            CHECK(r.fundamental.coeff(C("211")) == 1);
            CHECK(r.fundamental.coeff(C("112")) == 1);
            CHECK(r.fundamental.terms().size() == 4);
        }
}

TEST_CASE("extreme rays at degree five") {
    std::vector<ConeRay> rays = extreme_rays(5);
    REQUIRE(rays.size() == 9);
    std::map<Partition, Rat, PartitionOrder> e1, e2;
    e1[P("41")] = 1;
    e1[P("32")] = -1;
    e1[P("311")] = 1;
    e2[P("311")] = 1;
    e2[P("221")] = -1;
    e2[P("2111")] = 1;
    std::set<std::string> seen = schur_set(rays);
    CHECK(seen.count(schur_str(e1)) == 1);
    CHECK(seen.count(schur_str(e2)) == 1);
    for (const ConeRay& r : rays)
        if (r.schur == e1) {
            CHECK(r.fundamental.coeff(C("14")) == 1);
            CHECK(r.fundamental.coeff(C("41")) == 1);
            CHECK(r.fundamental.coeff(C("113")) == 1);
            CHECK(r.fundamental.coeff(C("212")) == 1);
            CHECK(r.fundamental.coeff(C("311")) == 1);
            CHECK(r.fundamental.terms().size() == 5);
        }
}

TEST_CASE("ray counts by degree") {
    std::vector<std::size_t> extras = {0, 0, 0, 1, 2, 23};
    for (int n = 1; n <= 6; ++n) {
        std::vector<ConeRay> rays = extreme_rays(n);
        CHECK(rays.size() ==
              partitions_of(n).size() + extras[static_cast<std::size_t>(n - 1)]);
        // every Schur function is a ray
        std::set<std::string> seen = schur_set(rays);
        for (const Partition& l : partitions_of(n)) {
            std::map<Partition, Rat, PartitionOrder> want;
            want[l] = 1;
            CHECK(seen.count(schur_str(want)) == 1);
        }
    }
}

TEST_CASE("both enumeration routes agree") {
    for (int n = 1; n <= 5; ++n)
        CHECK(schur_set(extreme_rays(n)) == schur_set(extreme_rays_reference(n)));
}

TEST_CASE("vertex extremality of multiplicity vectors") {
    CHECK(is_extreme_vector(C("1111")));
    CHECK(is_extreme_vector(C("4")));
    // at n = 4 every class vector is a vertex
    for (const Composition& rep : class_representatives(4))
        CHECK(is_extreme_vector(rep));
}

TEST_CASE("facet scan finds no redundant inequalities at small n") {
    for (int n = 1; n <= 6; ++n) {
        FacetReport rep = facet_report(n);
        CHECK(rep.n == n);
        CHECK(rep.reps.size() == class_representatives(n).size());
        CHECK(rep.redundant_count == 0);
        CHECK(rep.status == "verified at this scale");
        for (std::size_t i = 0; i < rep.reps.size(); ++i) {
            CHECK_FALSE(rep.redundant[i]);
            CHECK(rep.vertex_extreme[i]);
            CHECK(rep.redundant[i] != rep.vertex_extreme[i]);
        }
    }
}

TEST_CASE("scale guards") {
    CHECK_THROWS_AS(extreme_rays(8), ResourceError);
    CHECK_THROWS_AS(extreme_rays_reference(6), ResourceError);
    CHECK_THROWS_AS(facet_report(7), ResourceError);
    CHECK_THROWS_AS(is_extreme_vector(C("333")), ResourceError);
    CHECK_THROWS_AS(extreme_rays(0), std::invalid_argument);
}
