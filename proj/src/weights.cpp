#include "invpart/weights.hpp"

#include <cmath>
#include <sstream>

namespace invpart {

APolynomial APolynomial::constant(Int c)
{
    return monomial(std::move(c), 0);
}

APolynomial APolynomial::monomial(Int c, int a_exp)
{
    APolynomial p;
    if (c != 0)
        p.terms_[a_exp] = std::move(c);
    return p;
}

const APolynomial::Int& APolynomial::coefficient(int a_exp) const
{
    static const Int zero = 0;
    auto it = terms_.find(a_exp);
    return it == terms_.end() ? zero : it->second;
}

APolynomial& APolynomial::operator+=(const APolynomial& rhs)
{
    add_scaled(rhs, 1, 0);
    return *this;
}

APolynomial& APolynomial::operator-=(const APolynomial& rhs)
{
    add_scaled(rhs, -1, 0);
    return *this;
}

APolynomial operator+(APolynomial lhs, const APolynomial& rhs)
{
    lhs += rhs;
    return lhs;
}

APolynomial operator-(APolynomial lhs, const APolynomial& rhs)
{
    lhs -= rhs;
    return lhs;
}

APolynomial operator*(const APolynomial& lhs, const APolynomial& rhs)
{
    APolynomial out;
    for (const auto& [el, cl] : lhs.terms_)
        for (const auto& [er, cr] : rhs.terms_) {
            auto& slot = out.terms_[el + er];
            slot += cl * cr;
            if (slot == 0)
                out.terms_.erase(el + er);
        }
    return out;
}

APolynomial APolynomial::operator-() const
{
    APolynomial out;
    for (const auto& [e, c] : terms_)
        out.terms_[e] = -c;
    return out;
}

void APolynomial::add_scaled(const APolynomial& src, const Int& c, int a_exp)
{
    if (c == 0)
        return;
    for (const auto& [e, coeff] : src.terms_) {
        auto& slot = terms_[e + a_exp];
        slot += c * coeff;
        if (slot == 0)
            terms_.erase(e + a_exp);
    }
}

void APolynomial::scale(const Int& c, int a_exp)
{
    std::map<int, Int> out;
    if (c != 0)
        for (const auto& [e, coeff] : terms_)
            out[e + a_exp] = c * coeff;
    terms_ = std::move(out);
}

APolynomial::Int APolynomial::substitute(const Int& value) const
{
    Int total = 0;
    for (const auto& [e, coeff] : terms_) {
        Int power = 1;
        for (int i = 0; i < e; ++i)
            power *= value;
        total += coeff * power;
    }
    return total;
}

std::string APolynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        if (mag != 1 || e == 0)
            os << mag;
        if (e >= 1)
            os << (e == 1 ? "a" : "a^" + std::to_string(e));
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const APolynomial& p)
{
    return os << p.str();
}

// ---------------------------------------------------------------------------
// weight functions

namespace {

bool pdo_shape(const Partition& p)
{
    return is_member(p, FamilySpec::pdo(1));
}

bool q_shape(const Partition& p)
{
    return is_member(p, FamilySpec::q());
}

bool b_shape(const Partition& p)
{
    for (int x : p.parts())
        if (x % 2 == 0)
            return false;
    const auto& v = p.parts();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] >= v[i - 1])
            return false;
    return true;
}

int sign_pow(int exponent)
{
    return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace

APolynomial weight(const Partition& p, WeightKind kind)
{
    const PartitionStats st = stats(p);
    switch (kind) {
    case WeightKind::gap: {
        if (!pdo_shape(p))
            fail(errc::wrong_family_for_weight, "gap weight needs a pdo partition");
        int delta_sum = 0;
        for (int i = 1; i <= st.length; ++i)
            delta_sum += (p.part(i) - p.part(i + 1) + 1) / 2;
        return APolynomial::monomial(sign_pow(st.length), delta_sum);
    }
    case WeightKind::odd:
        if (!pdo_shape(p))
            fail(errc::wrong_family_for_weight, "odd weight needs a pdo partition");
        return APolynomial::monomial(sign_pow(st.length), st.odd_parts);
    case WeightKind::even_smallest:
    case WeightKind::a1:
        if (!q_shape(p))
            fail(errc::wrong_family_for_weight,
                 "even-smallest weight needs distinct nonnegative parts, smallest even");
        return APolynomial::monomial(sign_pow(st.length - 1), st.odd_parts);
    case WeightKind::a2:
        if (!b_shape(p))
            fail(errc::wrong_family_for_weight, "a2 weight needs distinct odd parts");
        return APolynomial::monomial(sign_pow(st.length), st.length);
    case WeightKind::sign_only:
        if (!pdo_shape(p))
            fail(errc::wrong_family_for_weight, "sign weight needs a pdo partition");
        return APolynomial::constant(sign_pow(st.length));
    }
    fail(errc::invalid_argument, "unknown weight kind");
}

APolynomial weighted_sum(const FamilySpec& f, int n, WeightKind kind)
{
    APolynomial total;
    for (const Partition& p : enumerate(f, n))
        total += weight(p, kind);
    return total;
}

APolynomial rhs_square(int n, WeightKind kind)
{
    if (n < 0)
        fail(errc::invalid_argument, "rhs_square needs n >= 0");
    const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (root * root != n)
        return APolynomial();
    if (kind == WeightKind::sign_only)
        return APolynomial::constant(sign_pow(root));
    return APolynomial::monomial(sign_pow(root), root);
}

// ---------------------------------------------------------------------------
// theorem verification

ParityCounts count_by_length_parity(const FamilySpec& f, int n)
{
    ParityCounts c;
    for (const Partition& p : enumerate(f, n))
        (p.length() % 2 == 0 ? c.even : c.odd)++;
    return c;
}

ParityCounts count_by_even_part_parity(const FamilySpec& f, int n)
{
    ParityCounts c;
    for (const Partition& p : enumerate(f, n)) {
        const int evens = stats(p).even_parts;
        (evens % 2 == 0 ? c.even : c.odd)++;
    }
    return c;
}

std::string to_string(TheoremId id, int m)
{
    switch (id) {
    case TheoremId::t31: return "T3.1";
    case TheoremId::t32: return "T3.2";
    case TheoremId::t41: return "T4.1";
    case TheoremId::t51: return "T5.1";
    case TheoremId::t61: return "T6.1";
    case TheoremId::andrews_problem: return "AndrewsProblem";
    case TheoremId::t82: return "T8.2(" + std::to_string(m) + ")";
    }
    return "?";
}

TheoremReport verify_theorem(TheoremId id, int n_max, int m)
{
    if (n_max < 1)
        fail(errc::invalid_argument, "verify_theorem needs n_max >= 1");
    if (m < 1)
        fail(errc::invalid_argument, "verify_theorem needs m >= 1");
    TheoremReport report;
    report.theorem = to_string(id, m);
    report.n_max = n_max;
    report.pass = true;
    for (int n = 1; n <= n_max; ++n) {
        TheoremEntry e;
        e.n = n;
        switch (id) {
        case TheoremId::t31:
            e.lhs = weighted_sum(FamilySpec::pdo(1), n, WeightKind::sign_only);
            e.rhs = rhs_square(n, WeightKind::sign_only);
            break;
        case TheoremId::t32: {
            // the same census through the counting route
            const ParityCounts c = count_by_length_parity(FamilySpec::pdo(1), n);
            e.lhs = APolynomial::constant(c.even - c.odd);
            e.rhs = rhs_square(n, WeightKind::sign_only);
            break;
        }
        case TheoremId::t41:
            e.lhs = weighted_sum(FamilySpec::pdo(1), n, WeightKind::gap);
            e.rhs = rhs_square(n, WeightKind::gap);
            break;
        case TheoremId::t51:
            e.lhs = weighted_sum(FamilySpec::pdo(1), n, WeightKind::odd);
            e.rhs = rhs_square(n, WeightKind::odd);
            break;
        case TheoremId::t61:
            e.lhs = weighted_sum(FamilySpec::q(), n, WeightKind::even_smallest);
            e.rhs = rhs_square(n, WeightKind::even_smallest);
            break;
        case TheoremId::andrews_problem: {
            const ParityCounts c = count_by_even_part_parity(FamilySpec::q(), n);
            e.lhs = APolynomial::constant(c.odd - c.even);
            const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
            e.rhs = APolynomial::constant(root * root == n ? 1 : 0);
            break;
        }
        case TheoremId::t82:
            e.lhs = weighted_sum(FamilySpec::a(m), n, WeightKind::a1);
            e.rhs = weighted_sum(FamilySpec::b(m), n, WeightKind::a2);
            break;
        }
        e.ok = (e.lhs == e.rhs);
        report.pass = report.pass && e.ok;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace invpart
