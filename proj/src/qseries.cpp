#include "invpart/qseries.hpp"

#include <algorithm>

namespace invpart {

namespace {

void require_same_truncation(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.truncation() != b.truncation())
        fail(errc::mismatched_truncation,
             "series truncated at " + std::to_string(a.truncation()) + " and "
                 + std::to_string(b.truncation()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int truncation) : trunc_(truncation)
{
    if (truncation < 0)
        fail(errc::invalid_argument, "truncation order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(truncation) + 1);
}

TruncatedSeries TruncatedSeries::one(int truncation)
{
    TruncatedSeries s(truncation);
    s.coeffs_[0] = APolynomial::constant(1);
    return s;
}

const APolynomial& TruncatedSeries::operator[](int degree) const
{
    return coeffs_[static_cast<std::size_t>(degree)];
}

APolynomial& TruncatedSeries::at(int degree)
{
    return coeffs_[static_cast<std::size_t>(degree)];
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_truncation(a, b);
    TruncatedSeries out = a;
    for (int d = 0; d <= a.trunc_; ++d)
        out.coeffs_[static_cast<std::size_t>(d)] += b[d];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_truncation(a, b);
    TruncatedSeries out = a;
    for (int d = 0; d <= a.trunc_; ++d)
        out.coeffs_[static_cast<std::size_t>(d)] -= b[d];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_truncation(a, b);
    TruncatedSeries out(a.trunc_);
    for (int i = 0; i <= a.trunc_; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j <= a.trunc_; ++j) {
            if (b[j].is_zero())
                continue;
            out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out(trunc_);
    for (int d = 0; d <= trunc_; ++d)
        out.coeffs_[static_cast<std::size_t>(d)] = -coeffs_[static_cast<std::size_t>(d)];
    return out;
}

void TruncatedSeries::mul_binomial(const Int& c, int a_exp, int q_shift)
{
    mul_one_plus({Term{c, a_exp, q_shift}});
}

void TruncatedSeries::mul_one_plus(const std::vector<Term>& terms)
{
    for (const Term& t : terms)
        if (t.q_shift < 1)
            fail(errc::invalid_argument, "factor terms need q shifts >= 1");
    // descending so each read sees the pre-multiplication coefficient
    for (int d = trunc_; d >= 1; --d)
        for (const Term& t : terms)
            if (d >= t.q_shift)
                coeffs_[static_cast<std::size_t>(d)].add_scaled(
                    coeffs_[static_cast<std::size_t>(d - t.q_shift)], t.coeff, t.a_exp);
}

void TruncatedSeries::mul_geometric(const Int& c, int a_exp, int q_shift)
{
    if (q_shift < 1)
        fail(errc::invalid_argument, "geometric factor needs q shift >= 1");
    // ascending: S/(1-x q^u) satisfies S'[d] = S[d] + x S'[d-u]
    for (int d = q_shift; d <= trunc_; ++d)
        coeffs_[static_cast<std::size_t>(d)].add_scaled(
            coeffs_[static_cast<std::size_t>(d - q_shift)], c, a_exp);
}

void TruncatedSeries::scale(const Int& c, int a_exp)
{
    for (auto& coeff : coeffs_)
        coeff.scale(c, a_exp);
}

void TruncatedSeries::add_shifted(const TruncatedSeries& other, int q_shift)
{
    for (int d = 0; d + q_shift <= trunc_ && d <= other.trunc_; ++d)
        coeffs_[static_cast<std::size_t>(d + q_shift)] += other[d];
}

std::string TruncatedSeries::str() const
{
    std::string s;
    for (int d = 0; d <= trunc_; ++d) {
        s += std::to_string(d);
        s += ": ";
        s += coeffs_[static_cast<std::size_t>(d)].str();
        s += '\n';
    }
    return s;
}

SeriesComparison series_compare(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_truncation(a, b);
    for (int d = 0; d <= a.truncation(); ++d)
        if (!(a[d] == b[d]))
            return {false, d, a[d], b[d]};
    return {};
}

// ---------------------------------------------------------------------------
// products

namespace {

TruncatedSeries pochhammer_impl(int a_exp, int sign, int q_shift, int q_step,
                                std::optional<int> terms, int truncation, bool inverse)
{
    if (sign != 1 && sign != -1)
        fail(errc::invalid_argument, "pochhammer sign must be +1 or -1");
    if (q_step < 1)
        fail(errc::invalid_argument, "pochhammer step must be >= 1");
    if (!terms && q_shift < 1)
        fail(errc::divergent_at_q0, "infinite product with a factor at q^0 or below");
    TruncatedSeries s = TruncatedSeries::one(truncation);
    for (long long j = 0; !terms || j < *terms; ++j) {
        const long long shift = q_shift + j * q_step;
        if (shift > truncation)
            break;  // later factors only touch degrees beyond the truncation
        if (shift < 0)
            fail(errc::invalid_argument, "factor with negative q exponent");
        const TruncatedSeries::Int c = -sign;
        if (shift == 0) {
            // constant factor (1 - sign a^e); only reachable with finite terms
            TruncatedSeries factor(truncation);
            factor.at(0) = APolynomial::constant(1) + APolynomial::monomial(c, a_exp);
            if (inverse)
                fail(errc::invalid_argument, "cannot invert a constant-in-q factor");
            s = s * factor;
            continue;
        }
        if (inverse)
            s.mul_geometric(TruncatedSeries::Int(sign), a_exp, static_cast<int>(shift));
        else
            s.mul_binomial(c, a_exp, static_cast<int>(shift));
    }
    return s;
}

}  // namespace

TruncatedSeries pochhammer(int a_exp, int sign, int q_shift, int q_step,
                           std::optional<int> terms, int truncation)
{
    return pochhammer_impl(a_exp, sign, q_shift, q_step, terms, truncation, false);
}

TruncatedSeries pochhammer_inverse(int a_exp, int sign, int q_shift, int q_step,
                                   std::optional<int> terms, int truncation)
{
    return pochhammer_impl(a_exp, sign, q_shift, q_step, terms, truncation, true);
}

// ---------------------------------------------------------------------------
// identity sides

namespace {

// sum of (-a)^k q^{k^2}, or its a = -1 form sum of q^{k^2}, from k_from
TruncatedSeries theta_sum(int truncation, bool with_a, int k_from)
{
    TruncatedSeries s(truncation);
    for (int k = k_from; static_cast<long long>(k) * k <= truncation; ++k)
        s.at(k * k) = with_a ? APolynomial::monomial(k % 2 == 0 ? 1 : -1, k)
                             : APolynomial::constant(1);
    return s;
}

// the k-th truncated factor product prod_{j=1..k} (1 + q^{2j} + ... + q^{2(m-1)j})
void mul_h_product(TruncatedSeries& s, int k, int m)
{
    for (int j = 1; j <= k; ++j) {
        std::vector<TruncatedSeries::Term> terms;
        for (int t = 1; t <= m - 1; ++t)
            if (2 * t * j <= s.truncation())
                terms.push_back({1, 0, 2 * t * j});
        if (!terms.empty())
            s.mul_one_plus(terms);
    }
}

TruncatedSeries ramanujan_lhs(int truncation)
{
    TruncatedSeries s = TruncatedSeries::one(truncation);
    for (int k = 1; k * (k + 1) / 2 <= truncation; ++k) {
        const int base = k * (k + 1) / 2;
        TruncatedSeries term = TruncatedSeries::one(truncation - base);
        for (int j = 1; j <= k - 1 && j <= term.truncation(); ++j)
            term.mul_binomial(1, 0, j);  // (-q; q)_{k-1}
        for (int j = 1; j <= k && 2 * j <= term.truncation(); ++j)
            term.mul_geometric(1, 1, 2 * j);  // 1 / (a q^2; q^2)_k
        term.scale(k % 2 == 0 ? 1 : -1, k);   // (-a)^k
        s.add_shifted(term, base);
    }
    return s;
}

// sum over n of q^{2mn} (q^{2mn+2m}; q^{2m})_inf * (odd-part product), the
// odd factors carrying a when with_a is set
TruncatedSeries theta_product_lhs(int truncation, int m, bool with_a, bool odd_smallest)
{
    TruncatedSeries s(truncation);
    const int modulus = 2 * m;
    for (int n = odd_smallest ? 1 : 0;; ++n) {
        const int base = odd_smallest ? 2 * n - 1 : modulus * n;
        if (base > truncation)
            break;
        TruncatedSeries term = TruncatedSeries::one(truncation - base);
        const int even_from = odd_smallest ? 2 * n : modulus * (n + 1);
        for (int u = even_from; u <= term.truncation(); u += modulus)
            term.mul_binomial(-1, 0, u);
        const int odd_from = odd_smallest ? 2 * n + 1 : modulus * n + 1;
        for (int u = odd_from; u <= term.truncation(); u += 2)
            term.mul_binomial(with_a ? -1 : 1, with_a ? 1 : 0, u);
        if (odd_smallest)
            term.scale(-1, 1);  // the leading -a q^{2n-1}
        s.add_shifted(term, base);
    }
    return s;
}

TruncatedSeries product_rhs(int truncation, int m, bool with_a)
{
    TruncatedSeries s = TruncatedSeries::one(truncation);
    for (int k = 1; static_cast<long long>(k) * k <= truncation; ++k) {
        TruncatedSeries term = TruncatedSeries::one(truncation - k * k);
        mul_h_product(term, k, m);
        if (with_a)
            term.scale(k % 2 == 0 ? 1 : -1, k);  // (-a)^k; at a = -1 this is 1
        s.add_shifted(term, k * k);
    }
    return s;
}

}  // namespace

TruncatedSeries build_identity_side(IdentityId id, Side side, int m, int truncation)
{
    if (m < 1)
        fail(errc::invalid_argument, "identity modulus parameter m must be >= 1");
    const bool lhs = (side == Side::lhs);
    switch (id) {
    case IdentityId::ramanujan:
        return lhs ? ramanujan_lhs(truncation) : theta_sum(truncation, true, 0);
    case IdentityId::andrews_theta:
        return lhs ? theta_product_lhs(truncation, 1, true, false)
                   : theta_sum(truncation, true, 0);
    case IdentityId::general:
        return lhs ? theta_product_lhs(truncation, m, true, false)
                   : product_rhs(truncation, m, true);
    case IdentityId::andrews_m:
        return lhs ? theta_product_lhs(truncation, m, false, false)
                   : product_rhs(truncation, m, false);
    case IdentityId::alladi_alt:
        return lhs ? theta_product_lhs(truncation, 1, true, true)
                   : theta_sum(truncation, true, 1);
    case IdentityId::andrews_problem:
        return lhs ? theta_product_lhs(truncation, 1, false, false)
                   : theta_sum(truncation, false, 0);
    }
    fail(errc::unknown_identity, "unknown identity id");
}

TruncatedSeries series_from_enumeration(const FamilySpec& f, WeightKind kind, int truncation)
{
    TruncatedSeries s(truncation);
    for (int n = 0; n <= truncation; ++n)
        s.at(n) = weighted_sum(f, n, kind);
    return s;
}

TruncatedSeries substitute_a(const TruncatedSeries& s, const TruncatedSeries::Int& value)
{
    TruncatedSeries out(s.truncation());
    for (int d = 0; d <= s.truncation(); ++d)
        out.at(d) = APolynomial::constant(s[d].substitute(value));
    return out;
}

std::optional<IdentityId> identity_from_string(const std::string& name)
{
    if (name == "ramanujan")
        return IdentityId::ramanujan;
    if (name == "andrews-theta")
        return IdentityId::andrews_theta;
    if (name == "general")
        return IdentityId::general;
    if (name == "andrews-m")
        return IdentityId::andrews_m;
    if (name == "alladi-alt")
        return IdentityId::alladi_alt;
    if (name == "andrews-problem")
        return IdentityId::andrews_problem;
    return std::nullopt;
}

std::string to_string(IdentityId id)
{
    switch (id) {
    case IdentityId::ramanujan: return "ramanujan";
    case IdentityId::andrews_theta: return "andrews-theta";
    case IdentityId::general: return "general";
    case IdentityId::andrews_m: return "andrews-m";
    case IdentityId::alladi_alt: return "alladi-alt";
    case IdentityId::andrews_problem: return "andrews-problem";
    }
    return "?";
}

}  // namespace invpart
