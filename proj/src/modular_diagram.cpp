#include "invpart/modular_diagram.hpp"

#include <algorithm>

namespace invpart {

namespace {

void require_modulus(int m)
{
    if (m < 1)
        fail(errc::invalid_argument, "modular diagrams need m >= 1");
}

}  // namespace

ModularDiagram build_diagram(const Partition& p, int m)
{
    require_modulus(m);
    if (!p.empty() && p[p.length() - 1] == 0)
        fail(errc::zero_part_present, "modular diagram of a partition with a zero part");
    ModularDiagram d;
    d.source = p;
    d.modulus = 2 * m;
    for (int x : p.parts()) {
        const int residue = (x - 1) % d.modulus + 1;
        std::vector<int> row(static_cast<std::size_t>((x - residue) / d.modulus), d.modulus);
        row.push_back(residue);
        d.rows.push_back(std::move(row));
    }
    return d;
}

std::string render(const ModularDiagram& d)
{
    std::string s;
    for (const auto& row : d.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                s += ' ';
            s += std::to_string(row[i]);
        }
        s += '\n';
    }
    return s;
}

std::vector<ModularHook> leg_hooks(const Partition& pi, int k, int m)
{
    if (!is_member(pi, FamilySpec::dk(k, m)))
        fail(errc::not_in_family, to_text(pi) + " is not in D_" + std::to_string(k));
    const int modulus = 2 * m;
    std::vector<ModularHook> hooks;
    for (int i = 2; i <= k; ++i) {
        if (pi.part(i) % 2 != 0)
            continue;
        // every first-column cell above an even part holds 2m: the parts
        // above exceed pi_i >= 2m
        for (int j = 1; j < i; ++j)
            if (pi.part(j) < modulus)
                fail(errc::invalid_hook_row, "short first column above hook row");
        ModularHook h;
        h.row = i;
        h.length = pi.part(i) + modulus * (i - 1);
        h.height = i;
        // a deletion is valid when the rows, left in place, still decrease
        // strictly and the result stays in D_{k-1}; at m = 1 the ordering
        // condition is automatic, for larger m it is what keeps deletion
        // and insertion inverse to each other
        std::vector<int> rows;
        for (int j = 1; j <= k; ++j) {
            if (j == i)
                continue;
            rows.push_back(j < i ? pi.part(j) - modulus : pi.part(j));
        }
        bool ordered = true;
        for (std::size_t j = 1; j < rows.size(); ++j)
            if (rows[j] >= rows[j - 1])
                ordered = false;
        h.deletion_valid =
            ordered && is_member(make_partition(std::move(rows)), FamilySpec::dk(k - 1, m));
        hooks.push_back(h);
    }
    return hooks;
}

Partition delete_leg_hook(const Partition& pi, int row, int m)
{
    require_modulus(m);
    if (row < 2 || row > pi.length() || pi.part(row) < 2 || pi.part(row) % 2 != 0)
        fail(errc::invalid_hook_row,
             "row " + std::to_string(row) + " of " + to_text(pi) + " holds no leg hook");
    std::vector<int> out;
    for (int i = 1; i <= pi.length(); ++i) {
        if (i == row)
            continue;
        out.push_back(i < row ? pi.part(i) - 2 * m : pi.part(i));
    }
    return make_partition(std::move(out));
}

Partition insert_leg_hook(const Partition& pi, int h, int m)
{
    require_modulus(m);
    if (h < 2 || h % (2 * m) != 0)
        fail(errc::invalid_argument, "hook length must be a positive multiple of 2m");
    // deepest admissible row: largest i with h - 2mi > pi_{i+1} whose new
    // part also lands in order below the incremented pi_i and keeps the
    // result inside the family (several i can satisfy the bare inequality;
    // only order-respecting ones invert a deletion)
    for (int i = pi.length(); i >= 1; --i) {
        const int p = h - 2 * m * i;
        if (p <= pi.part(i + 1))
            continue;
        if (p >= pi.part(i) + 2 * m)
            continue;
        std::vector<int> out;
        for (int j = 1; j <= i; ++j)
            out.push_back(pi.part(j) + 2 * m);
        out.push_back(p);
        for (int j = i + 1; j <= pi.length(); ++j)
            out.push_back(pi.part(j));
        Partition candidate = make_partition(std::move(out));
        if (is_member(candidate, FamilySpec::dk(pi.length() + 1, m)))
            return candidate;
    }
    fail(errc::no_valid_position, "no row admits hook length " + std::to_string(h));
}

Partition modular_conjugate(const Partition& sigma, int m)
{
    require_modulus(m);
    const int modulus = 2 * m;
    for (int x : sigma.parts())
        if (x % modulus != 0)
            fail(errc::not_multiple_of_modulus,
                 "part " + std::to_string(x) + " is not a multiple of " + std::to_string(modulus));
    std::vector<int> out;
    const int columns = sigma.empty() ? 0 : sigma[0] / modulus;
    for (int j = 1; j <= columns; ++j) {
        int count = 0;
        for (int x : sigma.parts())
            if (x >= modulus * j)
                ++count;
        out.push_back(modulus * count);
    }
    return make_partition(std::move(out));
}

}  // namespace invpart
