#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "invpart/modular_diagram.hpp"

using namespace invpart;

TEST_CASE("diagram rows")
{
    const ModularDiagram d = build_diagram(make_partition({5, 3, 1}), 1);
    CHECK(d.rows == std::vector<std::vector<int>>{{2, 2, 1}, {2, 1}, {1}});
    CHECK(render(d) == "2 2 1\n2 1\n1\n");

    const ModularDiagram big = build_diagram(make_partition({16, 11, 9, 6, 3}), 1);
    for (std::size_t i = 0; i < big.rows.size(); ++i) {
        int sum = 0;
        for (int c : big.rows[i])
            sum += c;
        CHECK(sum == big.source[static_cast<int>(i)]);
    }
    CHECK(big.rows[1] == std::vector<int>{2, 2, 2, 2, 2, 1});

    const ModularDiagram four = build_diagram(make_partition({20, 16, 11, 5, 3}), 2);
    CHECK(four.rows[0] == std::vector<int>{4, 4, 4, 4, 4});
    CHECK(four.rows[2] == std::vector<int>{4, 4, 3});

    CHECK_THROWS_AS(build_diagram(make_partition({3, 0}), 1), error);
}

TEST_CASE("diagram cells: full cells are 2m, residues lie in [1, 2m]")
{
    for (int m : {1, 2, 3})
        for (int n = 1; n <= 20; ++n)
            for (const auto& p : enumerate(FamilySpec::all_distinct(), n)) {
                const ModularDiagram d = build_diagram(p, m);
                for (const auto& row : d.rows) {
                    for (std::size_t i = 0; i + 1 < row.size(); ++i)
                        CHECK(row[i] == 2 * m);
                    CHECK(row.back() >= 1);
                    CHECK(row.back() <= 2 * m);
                }
            }
}

TEST_CASE("leg hooks of the worked partitions")
{
    // note: deleting the row-2 hook of (8,6,5,4,2,1) gives (6,5,4,2,1),
    // which stays inside D_5, so all three hooks are deletion valid
    const auto hooks = leg_hooks(make_partition({8, 6, 5, 4, 2, 1}), 6, 1);
    REQUIRE(hooks.size() == 3);
    CHECK(hooks[0].row == 2);
    CHECK(hooks[0].length == 8);
    CHECK(hooks[0].deletion_valid);
    CHECK(hooks[1].row == 4);
    CHECK(hooks[1].length == 10);
    CHECK(hooks[1].deletion_valid);
    CHECK(hooks[2].row == 5);
    CHECK(hooks[2].length == 10);
    CHECK(hooks[2].height == 5);
    CHECK(hooks[2].deletion_valid);

    CHECK(leg_hooks(make_partition({5, 3, 1}), 3, 1).empty());

    const auto two = leg_hooks(make_partition({7, 6, 4, 3, 1}), 5, 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0].row == 2);
    CHECK(two[0].length == 8);
    CHECK(two[0].deletion_valid);
    CHECK(two[1].row == 3);
    CHECK(two[1].length == 8);
    CHECK(two[1].deletion_valid);

    CHECK_THROWS_AS(leg_hooks(make_partition({4, 2}), 2, 1), error);
}

TEST_CASE("hook deletion")
{
    CHECK(delete_leg_hook(make_partition({8, 6, 5, 4, 2, 1}), 5, 1)
          == make_partition({6, 4, 3, 2, 1}));
    CHECK(delete_leg_hook(make_partition({7, 6, 4, 3, 1}), 3, 1) == make_partition({5, 4, 3, 1}));
    // deletion is defined even when the result leaves the family
    CHECK(delete_leg_hook(make_partition({6, 5, 3, 2, 1}), 4, 1) == make_partition({4, 3, 1, 1}));
    CHECK_THROWS_AS(delete_leg_hook(make_partition({5, 3, 1}), 2, 1), error);
    CHECK_THROWS_AS(delete_leg_hook(make_partition({6, 3, 1}), 1, 1), error);
}

TEST_CASE("hook insertion")
{
    CHECK(insert_leg_hook(make_partition({6, 4, 3, 2, 1}), 10, 1)
          == make_partition({8, 6, 5, 4, 2, 1}));
    CHECK(insert_leg_hook(make_partition({5, 4, 3, 1}), 8, 1) == make_partition({7, 6, 4, 3, 1}));
    CHECK_THROWS_AS(insert_leg_hook(make_partition({5, 3, 1}), 4, 1), error);
}

TEST_CASE("deletion and insertion invert each other over D_k")
{
    for (int k = 1; k <= 6; ++k)
        for (int n = k * (k + 1) / 2; n <= k * k; ++n)
            for (const auto& pi : enumerate(FamilySpec::dk(k, 1), n)) {
                // delete then insert
                for (const auto& h : leg_hooks(pi, k, 1))
                    if (h.deletion_valid) {
                        const Partition reduced = delete_leg_hook(pi, h.row, 1);
                        CHECK(insert_leg_hook(reduced, h.length, 1) == pi);
                    }
                // insert then delete, for every even hook length that fits
                for (int h = 2; h <= 2 * k - 2; h += 2) {
                    Partition grown;
                    try {
                        grown = insert_leg_hook(pi, h, 1);
                    } catch (const error&) {
                        continue;  // no admissible row for this length
                    }
                    CHECK(is_member(grown, FamilySpec::dk(k + 1, 1)));
                    bool reverses = false;
                    for (const auto& h2 : leg_hooks(grown, k + 1, 1))
                        if (h2.deletion_valid && h2.length == h
                            && delete_leg_hook(grown, h2.row, 1) == pi)
                            reverses = true;
                    CHECK(reverses);
                }
            }
}

TEST_CASE("hook lengths over D_k: closed form and ceiling")
{
    for (int k = 1; k <= 6; ++k)
        for (int n = k * (k + 1) / 2; n <= k * k; ++n)
            for (const auto& pi : enumerate(FamilySpec::dk(k, 1), n))
                for (const auto& h : leg_hooks(pi, k, 1)) {
                    CHECK(h.length == pi.part(h.row) + 2 * (h.row - 1));
                    CHECK(h.length <= 2 * k - 2);
                    CHECK(h.height == h.row);
                }
}

TEST_CASE("modular conjugation")
{
    CHECK(modular_conjugate(make_partition({10, 8, 6, 2, 2}), 1)
          == make_partition({10, 6, 6, 4, 2}));
    CHECK(modular_conjugate(make_partition({2, 2}), 1) == make_partition({4}));
    CHECK(modular_conjugate(Partition(), 3) == Partition());
    CHECK_THROWS_AS(modular_conjugate(make_partition({3, 2}), 1), error);
    CHECK_THROWS_AS(modular_conjugate(make_partition({4, 2}), 2), error);

    for (int m : {1, 2, 3})
        for (int n = 0; n <= 6 * (2 * m); n += 2 * m)
            for (int k = 1; k <= 6; ++k)
                for (const auto& sigma : enumerate(FamilySpec::ek(k, m), n)) {
                    if (!sigma.empty() && sigma[0] > 12)
                        continue;
                    const Partition conj = modular_conjugate(sigma, m);
                    CHECK(conj.sum() == sigma.sum());
                    CHECK(modular_conjugate(conj, m) == sigma);
                }
}
