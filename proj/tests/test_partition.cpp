#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "invpart/partition.hpp"
#include "invpart/qseries.hpp"
#include "oracles.hpp"

using namespace invpart;

TEST_CASE("make_partition canonicalizes and validates")
{
    CHECK(make_partition({1, 3, 9}) == make_partition({9, 3, 1}));
    CHECK(make_partition({}) == Partition());
    CHECK(make_partition({0}).length() == 1);
    CHECK_THROWS_WITH_AS(make_partition({0, 0}), doctest::Contains("zero"), error);
    CHECK_THROWS_AS(make_partition({3, -1}), error);
    try {
        make_partition({-2});
    } catch (const error& e) {
        CHECK(e.code() == errc::negative_part);
    }
}

TEST_CASE("stats")
{
    const PartitionStats a = stats(make_partition({5, 3, 1}));
    CHECK(a.n == 9);
    CHECK(a.length == 3);
    CHECK(a.even_parts == 0);
    CHECK(a.odd_parts == 3);
    CHECK(a.smallest == 1);
    CHECK(a.second_smallest == 3);

    const PartitionStats b = stats(make_partition({5, 3, 1, 0}));
    CHECK(b.n == 9);
    CHECK(b.length == 4);
    CHECK(b.even_parts == 1);  // 0 counts as even
    CHECK(b.odd_parts == 3);
    CHECK(b.smallest == 0);
    CHECK(b.second_smallest == 1);

    const PartitionStats c = stats(Partition());
    CHECK(c.n == 0);
    CHECK(c.length == 0);
    CHECK_FALSE(c.smallest.has_value());
    CHECK_FALSE(c.second_smallest.has_value());
}

TEST_CASE("componentwise addition")
{
    CHECK(make_partition({3, 2, 1}) + make_partition({2, 2}) == make_partition({5, 4, 1}));
    CHECK(make_partition({7, 4}) + Partition() == make_partition({7, 4}));
    CHECK(make_partition({3, 2, 1}) + make_partition({4}) == make_partition({7, 2, 1}));
}

TEST_CASE("addition is associative and commutative with identity")
{
    const auto parts = enumerate(FamilySpec::all_distinct(), 9);
    for (const auto& x : parts)
        for (const auto& y : parts) {
            CHECK(x + y == y + x);
            CHECK(x + Partition() == x);
            for (const auto& z : parts)
                CHECK((x + y) + z == x + (y + z));
        }
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(make_partition({5, 5, 3, 3, 2, 2, 2, 2, 1, 1}))
          == make_partition({10, 8, 4, 2, 2}));
    CHECK(conjugate(make_partition({1})) == make_partition({1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK_THROWS_AS(conjugate(make_partition({3, 0})), error);

    for (int n = 0; n <= 18; ++n)
        for (const auto& p : oracles::general_partitions(n)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(conjugate(p).sum() == p.sum());
        }
}

TEST_CASE("triangular staircases")
{
    CHECK(triangular(3) == make_partition({5, 3, 1}));
    CHECK(triangular(0) == Partition());
    CHECK(triangular(5) == make_partition({9, 7, 5, 3, 1}));
    for (int k = 0; k <= 12; ++k)
        CHECK(triangular(k).sum() == k * k);
}

TEST_CASE("membership spot checks")
{
    CHECK(is_member(make_partition({6, 5, 3, 2, 1}), FamilySpec::dk(5, 1)));
    CHECK(is_member(make_partition({19, 15, 9, 5, 3}), FamilySpec::b(3)));
    CHECK_FALSE(is_member(make_partition({4, 2}), FamilySpec::pdo(1)));
    CHECK(is_member(make_partition({4, 2}), FamilySpec::q()));
    CHECK(is_member(make_partition({9, 1, 0}), FamilySpec::q()));
    CHECK_FALSE(is_member(Partition(), FamilySpec::q()));
    CHECK(is_member(make_partition({0}), FamilySpec::a(3)));
    CHECK(is_member(make_partition({20, 16, 11, 5, 3, 0}), FamilySpec::a(2)));
    CHECK_FALSE(is_member(make_partition({20, 6, 11, 5, 3, 0}), FamilySpec::a(2)));
    CHECK(is_member(make_partition({8, 6, 2, 2}), FamilySpec::ek(4, 1)));
    CHECK_FALSE(is_member(make_partition({10, 2}), FamilySpec::ek(4, 1)));
    CHECK(is_member(make_partition({5, 5, 3, 3, 2, 2, 2, 2, 1, 1}), FamilySpec::hkm(5, 3)));
    CHECK_FALSE(is_member(make_partition({5, 5, 5, 1, 1}), FamilySpec::hkm(5, 3)));
    CHECK_FALSE(is_member(make_partition({5, 5, 5, 5, 1, 1}), FamilySpec::hkm(5, 2)));
    CHECK(is_member(Partition(), FamilySpec::hkm(4, 1)));
    CHECK_FALSE(is_member(make_partition({1, 1}), FamilySpec::hkm(4, 1)));
}

TEST_CASE("enumeration matches the worked lists")
{
    const auto pdo10 = enumerate(FamilySpec::pdo(1), 10);
    const std::set<Partition> expected10 = {
        make_partition({9, 1}),       make_partition({7, 3}), make_partition({4, 3, 2, 1}),
        make_partition({7, 2, 1}),    make_partition({6, 3, 1}), make_partition({5, 4, 1})};
    CHECK(pdo10.size() == 6);
    CHECK(std::set<Partition>(pdo10.begin(), pdo10.end()) == expected10);

    CHECK(enumerate(FamilySpec::q(), 10).size() == 14);
    CHECK(enumerate(FamilySpec::pdo(1), 0) == std::vector<Partition>{Partition()});
    CHECK(enumerate(FamilySpec::q(), 0) == std::vector<Partition>{make_partition({0})});

    const auto q9 = enumerate(FamilySpec::q(), 9);
    CHECK(q9.size() == 11);
    int even_evens = 0, odd_evens = 0;
    for (const auto& p : q9)
        (stats(p).even_parts % 2 == 0 ? even_evens : odd_evens)++;
    CHECK(even_evens == 5);
    CHECK(odd_evens == 6);
}

TEST_CASE("enumeration output is sorted decreasing and duplicate free")
{
    const auto list = enumerate(FamilySpec::q(), 12);
    CHECK(std::is_sorted(list.begin(), list.end(), std::greater<>{}));
    CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
}

TEST_CASE("enumeration agrees with generate-and-filter for every family")
{
    const std::vector<FamilySpec> families = {
        FamilySpec::all_distinct(), FamilySpec::pdo(1),   FamilySpec::pdo(2),
        FamilySpec::q(),            FamilySpec::a(2),     FamilySpec::a(3),
        FamilySpec::b(1),           FamilySpec::b(2),     FamilySpec::b(3),
        FamilySpec::dk(3, 1),       FamilySpec::dk(4, 2), FamilySpec::ek(3, 1),
        FamilySpec::ek(2, 2),       FamilySpec::hkm(4, 2), FamilySpec::hkm(3, 3)};
    for (int n = 0; n <= 40; ++n) {
        const auto candidates = oracles::all_candidates(n);
        for (const auto& f : families) {
            std::set<Partition> filtered;
            for (const auto& p : candidates)
                if (is_member(p, f))
                    filtered.insert(p);
            const auto enumerated = enumerate(f, n);
            std::set<Partition> produced(enumerated.begin(), enumerated.end());
            CAPTURE(to_string(f));
            CAPTURE(n);
            CHECK(produced == filtered);
            CHECK(produced.size() == enumerated.size());
            for (const auto& p : enumerated)
                CHECK(p.sum() == n);
        }
    }
}

TEST_CASE("distinct-partition counts match the Euler product")
{
    const int N = 100;
    // prod (1 + q^i) is (-q; q)_inf
    const TruncatedSeries product = pochhammer(0, -1, 1, 1, std::nullopt, N);
    for (int n = 0; n <= N; ++n) {
        const auto count = enumerate(FamilySpec::all_distinct(), n).size();
        CHECK(product[n] == APolynomial::constant(static_cast<long long>(count)));
    }
}

TEST_CASE("text form")
{
    CHECK(to_text(make_partition({9, 3, 1})) == "9+3+1");
    CHECK(to_text(make_partition({0})) == "0");
    CHECK(to_text(Partition()) == "()");
}
