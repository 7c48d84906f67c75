#ifndef INVPART_MODULAR_DIAGRAM_HPP
#define INVPART_MODULAR_DIAGRAM_HPP

#include <string>
#include <vector>

#include "invpart/partition.hpp"

namespace invpart {

/* The 2m-modular diagram of a partition: row i is filled with copies of 2m
 * followed by one residue cell r with 1 <= r <= 2m, so the row sums to the
 * part. At m = 1 every cell is 2 except a trailing 1 exactly when the part
 * is odd. */
struct ModularDiagram {
    Partition source;
    int modulus = 2;  // 2m
    std::vector<std::vector<int>> rows;
};

ModularDiagram build_diagram(const Partition& p, int m);

/// One row per line, cells space separated: "2 2 1\n2 1\n1\n".
std::string render(const ModularDiagram& d);

/* A modular leg hook of pi sits at an even part pi_i other than the largest
 * part: the cells of row i together with the first-column cells of the rows
 * above. Its length is the fill sum pi_i + 2m(i-1), its height the row
 * index i. deletion_valid records whether deleting it leaves a member of
 * D_{k-1}; the test is extensional (delete, then check membership). */
struct ModularHook {
    int row = 0;     // 1-based
    int length = 0;
    int height = 0;  // equals row
    bool deletion_valid = false;
};

/// All modular leg hooks of pi in D_k, ordered by increasing row index.
std::vector<ModularHook> leg_hooks(const Partition& pi, int k, int m);

/// Removes part pi_i and subtracts 2m from each of pi_1..pi_{i-1}; the
/// result is re-sorted and returned even when it leaves the family (the
/// caller judges validity). Total weight removed equals the hook length.
Partition delete_leg_hook(const Partition& pi, int row, int m);

/// Inverse of deletion: with i the largest index such that
/// h - 2m*i > pi_{i+1}, adds 2m to the first i parts and inserts h - 2m*i
/// as a new part in front of the old pi_{i+1}.
Partition insert_leg_hook(const Partition& pi, int h, int m);

/// 2m-modular conjugate: part j of the result is 2m times the number of
/// parts of sigma that reach column j of the 2m-modular diagram. Self
/// inverse and weight preserving on partitions with all parts divisible
/// by 2m.
Partition modular_conjugate(const Partition& sigma, int m);

}  // namespace invpart

#endif
