#ifndef INVPART_QSERIES_HPP
#define INVPART_QSERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "invpart/weights.hpp"

namespace invpart {

/* A power series in q truncated at a fixed degree, with exact APolynomial
 * coefficients. Operations never read or write beyond the truncation
 * degree; multiplication simply discards the cross terms above it. */
class TruncatedSeries {
public:
    using Int = APolynomial::Int;

    explicit TruncatedSeries(int truncation);
    static TruncatedSeries one(int truncation);

    int truncation() const noexcept { return trunc_; }
    const APolynomial& operator[](int degree) const;
    APolynomial& at(int degree);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;
    bool operator==(const TruncatedSeries&) const = default;

    /// this *= (1 + c a^e q^shift), shift >= 1
    void mul_binomial(const Int& c, int a_exp, int q_shift);
    /// this *= 1 + sum of the given monomial terms (all q shifts >= 1)
    struct Term {
        Int coeff;
        int a_exp;
        int q_shift;
    };
    void mul_one_plus(const std::vector<Term>& terms);
    /// this /= (1 - c a^e q^shift), expanded as the geometric series
    void mul_geometric(const Int& c, int a_exp, int q_shift);
    /// this *= c a^e
    void scale(const Int& c, int a_exp);
    /// this += other * q^shift
    void add_shifted(const TruncatedSeries& other, int q_shift);

    /// "0: 1\n1: -a\n..." one line per degree.
    std::string str() const;

private:
    int trunc_ = 0;
    std::vector<APolynomial> coeffs_;
};

struct SeriesComparison {
    bool equal = true;
    int degree = -1;       // smallest differing degree when unequal
    APolynomial lhs, rhs;  // the differing coefficients
};

/// Exact coefficient-wise comparison with a first-discrepancy report.
SeriesComparison series_compare(const TruncatedSeries& a, const TruncatedSeries& b);

/* (sign a^{a_exp} q^{q_shift}; q^{q_step})_{terms}: the product of factors
 * (1 - sign a^{a_exp} q^{q_shift + j q_step}) for j below terms, infinite
 * when terms is absent (then cut once the factor exponent passes the
 * truncation; an infinite product needs q_shift >= 1). */
TruncatedSeries pochhammer(int a_exp, int sign, int q_shift, int q_step,
                           std::optional<int> terms, int truncation);

/// Reciprocal of the same product, each factor expanded geometrically.
TruncatedSeries pochhammer_inverse(int a_exp, int sign, int q_shift, int q_step,
                                   std::optional<int> terms, int truncation);

/* The verified identities. ramanujan and andrews_theta share the partial
 * theta right side; general carries the modulus parameter m and reduces to
 * andrews_theta at m = 1; andrews_m is general at a = -1; alladi_alt is
 * the odd-weight variant with both sums starting at 1; andrews_problem is
 * andrews_m at m = 1. */
enum class IdentityId { ramanujan, andrews_theta, general, andrews_m, alladi_alt, andrews_problem };
enum class Side { lhs, rhs };

TruncatedSeries build_identity_side(IdentityId id, Side side, int m, int truncation);

/// Coefficient of q^n is the weighted sum over the family at weight n:
/// the combinatorial reading of each identity side.
TruncatedSeries series_from_enumeration(const FamilySpec& f, WeightKind kind, int truncation);

/// Coefficient-wise substitution a := value.
TruncatedSeries substitute_a(const TruncatedSeries& s, const TruncatedSeries::Int& value);

std::optional<IdentityId> identity_from_string(const std::string& name);
std::string to_string(IdentityId id);

}  // namespace invpart

#endif
