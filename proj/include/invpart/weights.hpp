#ifndef INVPART_WEIGHTS_HPP
#define INVPART_WEIGHTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "invpart/partition.hpp"

namespace invpart {

/* Exact integer polynomials in the formal weight variable a. Weighted sums
 * are held in this form and compared as polynomials; numeric values only
 * appear through an explicit substitution. */
class APolynomial {
public:
    using Int = boost::multiprecision::cpp_int;

    APolynomial() = default;  // zero
    static APolynomial constant(Int c);
    static APolynomial monomial(Int c, int a_exp);

    bool is_zero() const noexcept { return terms_.empty(); }
    /// a-exponent -> coefficient; zero coefficients are never stored.
    const std::map<int, Int>& terms() const noexcept { return terms_; }
    int degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    const Int& coefficient(int a_exp) const;

    APolynomial& operator+=(const APolynomial& rhs);
    APolynomial& operator-=(const APolynomial& rhs);
    friend APolynomial operator+(APolynomial lhs, const APolynomial& rhs);
    friend APolynomial operator-(APolynomial lhs, const APolynomial& rhs);
    friend APolynomial operator*(const APolynomial& lhs, const APolynomial& rhs);
    APolynomial operator-() const;
    bool operator==(const APolynomial&) const = default;

    /// this += c * a^a_exp * src
    void add_scaled(const APolynomial& src, const Int& c, int a_exp);
    /// this *= c * a^a_exp
    void scale(const Int& c, int a_exp);

    Int substitute(const Int& value) const;

    /// Canonical text form, leading term first: "0", "-1", "a", "-a^5",
    /// "2a^2 - 1".
    std::string str() const;

private:
    std::map<int, Int> terms_;
};

std::ostream& operator<<(std::ostream& os, const APolynomial& p);

/* The five weight assignments, plus the bare sign. Every weight is a
 * signed monomial in a:
 *
 *   gap            (-1)^l a^{sum of gap statistics}   on pdo
 *   odd            (-1)^l a^{odd part count}          on pdo
 *   even_smallest  (-1)^{l-1} a^{odd part count}      on q
 *   a1             (-1)^{l-1} a^{odd part count}      on a(m)
 *   a2             (-a)^l                             on b(m)
 *   sign_only      (-1)^l                             on pdo
 *
 * where the gap statistic of row i is the least integer at least half the
 * gap to the next part (0 below the last part). */
enum class WeightKind { gap, odd, even_smallest, a1, a2, sign_only };

APolynomial weight(const Partition& p, WeightKind kind);
APolynomial weighted_sum(const FamilySpec& f, int n, WeightKind kind);

/// (-a)^k when n = k^2 (or (-1)^k for sign_only), the zero polynomial
/// otherwise.
APolynomial rhs_square(int n, WeightKind kind);

enum class TheoremId { t31, t32, t41, t51, t61, andrews_problem, t82 };

struct TheoremEntry {
    int n = 0;
    APolynomial lhs;
    APolynomial rhs;
    bool ok = false;
};

struct TheoremReport {
    std::string theorem;
    int n_max = 0;
    std::vector<TheoremEntry> entries;  // one per n in 1..n_max
    bool pass = false;
};

/// Compares the weighted sum to its closed form for every n up to n_max
/// (for t82, compares the two weighted sums across a(m) and b(m)).
/// Failures become report entries, never exceptions.
TheoremReport verify_theorem(TheoremId id, int n_max, int m = 1);

std::string to_string(TheoremId id, int m = 1);

/// Counts of members with even / odd part count (the R statistics over
/// pdo) and with even / odd number of even parts (the q statistics over q).
struct ParityCounts {
    long long even = 0;
    long long odd = 0;
};
ParityCounts count_by_length_parity(const FamilySpec& f, int n);
ParityCounts count_by_even_part_parity(const FamilySpec& f, int n);

}  // namespace invpart

#endif
