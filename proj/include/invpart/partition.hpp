#ifndef INVPART_PARTITION_HPP
#define INVPART_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "invpart/error.hpp"

namespace invpart {

/* A partition is its weakly decreasing list of parts. Parts are nonnegative
 * and at most one zero part is allowed; the families Q and A_m carry an
 * explicit trailing 0 so that the involution psi can add and remove it as a
 * plain list edit. Repeated positive parts are legal (the sets E_k and
 * H_{k,m} need them); the distinct-part families enforce distinctness
 * through their membership predicates instead. */
class Partition {
public:
    Partition() = default;

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// 0-based access; parts()[0] is the largest part.
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    /// 1-based access matching the usual lambda_i notation, 0 beyond the end.
    int part(int i) const
    {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    int sum() const noexcept;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    friend Partition make_partition(std::vector<int> parts);
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {}

    std::vector<int> parts_;
};

/// Canonicalizes (sorts weakly decreasing) and validates. Rejects negative
/// entries and more than one zero.
Partition make_partition(std::vector<int> parts);
Partition make_partition(std::initializer_list<int> parts);

struct PartitionStats {
    int n = 0;            // weight
    int length = 0;       // number of parts
    int even_parts = 0;   // 0 counts as even
    int odd_parts = 0;
    std::optional<int> smallest;         // absent when there are no parts
    std::optional<int> second_smallest;  // absent when fewer than two parts
};

PartitionStats stats(const Partition& p);

/// Componentwise sum, the shorter operand padded with zeros.
Partition operator+(const Partition& a, const Partition& b);

/// Ordinary Young-diagram conjugate; requires zero-free input.
Partition conjugate(const Partition& p);

/// The staircase of odd parts (2k-1, 2k-3, ..., 3, 1); weight k^2.
Partition triangular(int k);

/* Partition families. The parameters k and m are only read by the family
 * tags that use them. Conventions at weight 0: the empty partition belongs
 * to the distinct / pdo / b / ek / hkm families, while q and a contain the
 * single-part partition (0) and never the empty one (their members must
 * have a smallest part, and it must be even). */
enum class Family { all_distinct, pdo, q, a, b, dk, ek, hkm };

struct FamilySpec {
    Family tag = Family::all_distinct;
    int k = 0;
    int m = 1;

    // distinct positive parts
    static FamilySpec all_distinct();
    // distinct positive parts, smallest odd, even parts multiples of 2m
    static FamilySpec pdo(int m = 1);
    // distinct nonnegative parts, smallest even
    static FamilySpec q();
    // distinct nonnegative parts, smallest even, even parts multiples of 2m
    static FamilySpec a(int m);
    // distinct odd parts, consecutive gaps at most 2m (last part counts
    // as a gap to 0)
    static FamilySpec b(int m);
    // exactly k distinct parts, smallest odd, gaps at most 2m, even parts
    // multiples of 2m; at m=1 this is: smallest part 1, gaps at most 2
    static FamilySpec dk(int k, int m = 1);
    // parts multiples of 2m, largest at most 2mk, repeats allowed
    static FamilySpec ek(int k, int m = 1);
    // parts at most k, each multiplicity even and less than 2m
    static FamilySpec hkm(int k, int m);
};

bool is_member(const Partition& p, const FamilySpec& f);

/// All partitions of n in the family, duplicate free, sorted in
/// lexicographically decreasing order of the part vectors.
std::vector<Partition> enumerate(const FamilySpec& f, int n);

/// "9+3+1" / "0" for (0) / "()" for the empty partition.
std::string to_text(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

std::string to_string(const FamilySpec& f);

}  // namespace invpart

#endif
