#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "invpart/involutions.hpp"
#include "invpart/weights.hpp"

using namespace invpart;

namespace {

APolynomial mono(long long c, int e)
{
    return APolynomial::monomial(c, e);
}

}  // namespace

TEST_CASE("polynomial arithmetic and text form")
{
    const APolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.str() == "0");
    CHECK((mono(1, 2) + mono(-1, 2)).is_zero());
    CHECK(mono(2, 1) * mono(3, 4) == mono(6, 5));
    CHECK((mono(1, 1) + mono(1, 0)) * (mono(1, 1) - mono(1, 0)) == mono(1, 2) - mono(1, 0));
    CHECK(mono(-1, 5).str() == "-a^5");
    CHECK(mono(1, 1).str() == "a");
    CHECK(mono(-3, 0).str() == "-3");
    CHECK((mono(2, 2) - mono(1, 0)).str() == "2a^2 - 1");
    CHECK(mono(1, 3).substitute(-1) == -1);
    CHECK((mono(1, 2) + mono(1, 1)).substitute(-1) == 0);
}

TEST_CASE("weights of the worked partitions")
{
    CHECK(weight(make_partition({9, 1}), WeightKind::gap) == mono(1, 5));
    CHECK(weight(make_partition({7, 2, 1}), WeightKind::gap) == mono(-1, 5));
    CHECK(weight(make_partition({7, 3}), WeightKind::gap) == mono(1, 4));
    CHECK(weight(make_partition({4, 3, 2, 1}), WeightKind::gap) == mono(1, 4));
    CHECK(weight(make_partition({6, 3, 1}), WeightKind::gap) == mono(-1, 4));
    CHECK(weight(make_partition({5, 4, 1}), WeightKind::gap) == mono(-1, 4));
    for (int k = 0; k <= 8; ++k)
        CHECK(weight(triangular(k), WeightKind::gap) == mono(k % 2 ? -1 : 1, k));

    CHECK(weight(make_partition({9, 1}), WeightKind::odd) == mono(1, 2));
    CHECK(weight(make_partition({10}), WeightKind::even_smallest) == mono(1, 0));
    CHECK(weight(make_partition({8, 2}), WeightKind::even_smallest) == mono(-1, 0));
    // (-1)^{l-1} a^{number of odd parts}: 5+3+2 carries two odd parts
    CHECK(weight(make_partition({5, 3, 2}), WeightKind::even_smallest) == mono(1, 2));
    CHECK(weight(make_partition({9, 1, 0}), WeightKind::even_smallest) == mono(1, 2));
    CHECK(weight(make_partition({19, 15, 9, 5, 3}), WeightKind::a2) == mono(-1, 5));
    CHECK(weight(make_partition({5, 3, 1}), WeightKind::sign_only) == mono(-1, 0));

    CHECK_THROWS_AS(weight(make_partition({4, 2}), WeightKind::gap), error);
    CHECK_THROWS_AS(weight(make_partition({5, 3}), WeightKind::even_smallest), error);
    CHECK_THROWS_AS(weight(make_partition({4, 1}), WeightKind::a2), error);
}

TEST_CASE("weighted sums at the worked weights")
{
    CHECK(weighted_sum(FamilySpec::pdo(1), 10, WeightKind::gap).is_zero());
    CHECK(weighted_sum(FamilySpec::pdo(1), 9, WeightKind::sign_only) == mono(-1, 0));
    CHECK(weighted_sum(FamilySpec::q(), 9, WeightKind::even_smallest).substitute(-1) == 1);
    CHECK(weighted_sum(FamilySpec::pdo(1), 0, WeightKind::odd) == mono(1, 0));
}

TEST_CASE("closed form of the square side")
{
    CHECK(rhs_square(16, WeightKind::odd) == mono(1, 4));
    CHECK(rhs_square(10, WeightKind::gap).is_zero());
    CHECK(rhs_square(9, WeightKind::sign_only) == mono(-1, 0));
    CHECK(rhs_square(25, WeightKind::even_smallest) == mono(-1, 5));
    CHECK(rhs_square(0, WeightKind::gap) == mono(1, 0));
}

TEST_CASE("theorem reports")
{
    const TheoremReport r32 = verify_theorem(TheoremId::t32, 9);
    CHECK(r32.pass);
    CHECK(r32.theorem == "T3.2");
    CHECK(r32.entries.size() == 9);
    CHECK(r32.entries.back().n == 9);
    CHECK(r32.entries.back().lhs == mono(-1, 0));
    const ParityCounts counts = count_by_length_parity(FamilySpec::pdo(1), 9);
    CHECK(counts.even == 2);
    CHECK(counts.odd == 3);

    CHECK(verify_theorem(TheoremId::t61, 10).pass);
    CHECK(verify_theorem(TheoremId::t82, 55, 2).pass);
    CHECK(verify_theorem(TheoremId::t82, 30, 3).theorem == "T8.2(3)");
    CHECK_THROWS_AS(verify_theorem(TheoremId::t31, 0), error);
}

TEST_CASE("weighted sums equal the fixed point contributions, orbit by orbit")
{
    // psi_do carries gap, odd and sign_only; psi_q carries even_smallest
    // and a1: non-fixed orbits cancel, so the family sum is the fixed sum
    for (int n = 0; n <= 60; ++n) {
        for (WeightKind kind : {WeightKind::gap, WeightKind::odd, WeightKind::sign_only}) {
            APolynomial fixed_sum;
            for (const Partition& lam : enumerate(FamilySpec::pdo(1), n))
                if (psi_do(lam, 1).fixed_point())
                    fixed_sum += weight(lam, kind);
            CHECK(weighted_sum(FamilySpec::pdo(1), n, kind) == fixed_sum);
        }
        APolynomial fixed_sum;
        for (const Partition& lam : enumerate(FamilySpec::q(), n))
            if (psi_q(lam, 1).fixed_point())
                fixed_sum += weight(lam, WeightKind::even_smallest);
        CHECK(weighted_sum(FamilySpec::q(), n, WeightKind::even_smallest) == fixed_sum);
    }
    for (int m : {1, 2, 3})
        for (int n = 0; n <= 60; ++n) {
            APolynomial fixed_sum;
            for (const Partition& lam : enumerate(FamilySpec::a(m), n))
                if (psi_q(lam, m).fixed_point())
                    fixed_sum += weight(lam, WeightKind::a1);
            CHECK(weighted_sum(FamilySpec::a(m), n, WeightKind::a1) == fixed_sum);
        }
}

TEST_CASE("the gap exponent equals l(lambda) + l(sigma) from extraction")
{
    for (int n = 0; n <= 60; ++n)
        for (const Partition& lam : enumerate(FamilySpec::pdo(1), n)) {
            const APolynomial w = weight(lam, WeightKind::gap);
            REQUIRE(w.terms().size() == 1);
            const int exponent = w.terms().begin()->first;
            const PairState s = extract(lam, 1);
            CHECK(exponent == lam.length() + s.sigma.length());
        }
}

TEST_CASE("even-smallest weight specializes to the even-part parity sign")
{
    for (int n = 0; n <= 60; ++n)
        for (const Partition& lam : enumerate(FamilySpec::q(), n)) {
            // (-1)^{l_e - 1}
            const int l_e = stats(lam).even_parts;
            CHECK(weight(lam, WeightKind::even_smallest).substitute(-1)
                  == (l_e % 2 == 1 ? 1 : -1));
        }
}
