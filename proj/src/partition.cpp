#include "invpart/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace invpart {

int Partition::sum() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition make_partition(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>{});
    int zeros = 0;
    for (int p : parts) {
        if (p < 0)
            fail(errc::negative_part, "partition part " + std::to_string(p) + " is negative");
        if (p == 0)
            ++zeros;
    }
    if (zeros > 1)
        fail(errc::duplicate_zero, "partition carries more than one zero part");
    return Partition(std::move(parts));
}

Partition make_partition(std::initializer_list<int> parts)
{
    return make_partition(std::vector<int>(parts));
}

PartitionStats stats(const Partition& p)
{
    PartitionStats s;
    s.n = p.sum();
    s.length = p.length();
    for (int x : p.parts())
        (x % 2 == 0 ? s.even_parts : s.odd_parts)++;
    if (s.length >= 1)
        s.smallest = p[s.length - 1];
    if (s.length >= 2)
        s.second_smallest = p[s.length - 2];
    return s;
}

Partition operator+(const Partition& a, const Partition& b)
{
    std::vector<int> out(static_cast<std::size_t>(std::max(a.length(), b.length())), 0);
    for (int i = 0; i < a.length(); ++i)
        out[static_cast<std::size_t>(i)] += a[i];
    for (int i = 0; i < b.length(); ++i)
        out[static_cast<std::size_t>(i)] += b[i];
    return make_partition(std::move(out));
}

Partition conjugate(const Partition& p)
{
    if (!p.empty() && p[p.length() - 1] == 0)
        fail(errc::zero_part_present, "conjugate is undefined for partitions with a zero part");
    std::vector<int> out;
    const int largest = p.empty() ? 0 : p[0];
    for (int j = 1; j <= largest; ++j) {
        int count = 0;
        for (int x : p.parts())
            if (x >= j)
                ++count;
        out.push_back(count);
    }
    return make_partition(std::move(out));
}

Partition triangular(int k)
{
    if (k < 0)
        fail(errc::invalid_argument, "triangular(k) needs k >= 0");
    std::vector<int> out;
    for (int i = k; i >= 1; --i)
        out.push_back(2 * i - 1);
    return make_partition(std::move(out));
}

// ---------------------------------------------------------------------------
// families

namespace {

void require_m(int m)
{
    if (m < 1)
        fail(errc::invalid_argument, "family modulus parameter m must be >= 1");
}

void require_k(int k)
{
    if (k < 0)
        fail(errc::invalid_argument, "family size parameter k must be >= 0");
}

bool strictly_decreasing(const std::vector<int>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] >= v[i - 1])
            return false;
    return true;
}

bool even_parts_divisible(const std::vector<int>& v, int modulus)
{
    for (int x : v)
        if (x % 2 == 0 && x % modulus != 0)
            return false;
    return true;
}

}  // namespace

FamilySpec FamilySpec::all_distinct() { return {Family::all_distinct, 0, 1}; }
FamilySpec FamilySpec::pdo(int m)
{
    require_m(m);
    return {Family::pdo, 0, m};
}
FamilySpec FamilySpec::q() { return {Family::q, 0, 1}; }
FamilySpec FamilySpec::a(int m)
{
    require_m(m);
    return {Family::a, 0, m};
}
FamilySpec FamilySpec::b(int m)
{
    require_m(m);
    return {Family::b, 0, m};
}
FamilySpec FamilySpec::dk(int k, int m)
{
    require_k(k);
    require_m(m);
    return {Family::dk, k, m};
}
FamilySpec FamilySpec::ek(int k, int m)
{
    require_k(k);
    require_m(m);
    return {Family::ek, k, m};
}
FamilySpec FamilySpec::hkm(int k, int m)
{
    require_k(k);
    require_m(m);
    return {Family::hkm, k, m};
}

bool is_member(const Partition& p, const FamilySpec& f)
{
    const auto& v = p.parts();
    const int len = p.length();
    const int modulus = 2 * f.m;
    switch (f.tag) {
    case Family::all_distinct:
        return strictly_decreasing(v) && (len == 0 || v.back() >= 1);
    case Family::pdo:
        if (len == 0)
            return true;
        return strictly_decreasing(v) && v.back() >= 1 && v.back() % 2 == 1
               && even_parts_divisible(v, modulus);
    case Family::q:
    case Family::a:
        if (len == 0)
            return false;  // members must have a smallest part, and it is even
        if (!strictly_decreasing(v) || v.back() % 2 != 0)
            return false;
        return f.tag == Family::q || even_parts_divisible(v, modulus);
    case Family::b:
        if (!strictly_decreasing(v))
            return false;
        for (int x : v)
            if (x % 2 == 0)
                return false;
        for (int i = 0; i < len; ++i) {
            const int next = (i + 1 < len) ? v[static_cast<std::size_t>(i + 1)] : 0;
            if (v[static_cast<std::size_t>(i)] - next > modulus)
                return false;
        }
        return true;
    case Family::dk:
        if (len != f.k)
            return false;
        if (len == 0)
            return true;
        if (!strictly_decreasing(v) || v.back() < 1 || v.back() % 2 != 1)
            return false;
        if (!even_parts_divisible(v, modulus))
            return false;
        for (int i = 0; i < len; ++i) {
            const int next = (i + 1 < len) ? v[static_cast<std::size_t>(i + 1)] : 0;
            if (v[static_cast<std::size_t>(i)] - next > modulus)
                return false;
        }
        return true;
    case Family::ek:
        for (int x : v)
            if (x < 1 || x % modulus != 0)
                return false;
        return len == 0 || v.front() <= modulus * f.k;
    case Family::hkm: {
        if (len == 0)
            return true;
        if (v.back() < 1 || v.front() > f.k)
            return false;
        int run = 1;
        for (int i = 1; i <= len; ++i) {
            if (i < len && v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(i - 1)]) {
                ++run;
                continue;
            }
            if (run % 2 != 0 || run > modulus - 2)
                return false;
            run = 1;
        }
        return true;
    }
    }
    return false;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

/* Distinct strictly decreasing positive parts, chosen largest first so the
 * output comes out in lexicographically decreasing order. allow() limits
 * which values may appear at all, allow_last() which may close the
 * partition as its smallest part. */
template <class AllowF, class LastF>
void gen_distinct(int n, int cap, std::vector<int>& acc, const AllowF& allow,
                  const LastF& allow_last, std::vector<Partition>& out)
{
    for (int p = std::min(cap, n); p >= 1; --p) {
        if (!allow(p))
            continue;
        if (p == n) {
            if (allow_last(p)) {
                acc.push_back(p);
                out.push_back(make_partition(acc));
                acc.pop_back();
            }
            continue;
        }
        const int rest = n - p;
        if (static_cast<long long>(p) * (p - 1) / 2 < rest)
            continue;  // even 1+2+...+(p-1) cannot reach the rest
        acc.push_back(p);
        gen_distinct(rest, p - 1, acc, allow, allow_last, out);
        acc.pop_back();
    }
}

// distinct odd parts, consecutive gaps <= 2m, smallest part <= 2m
void gen_b(int n, int high, int low, int modulus, std::vector<int>& acc,
           std::vector<Partition>& out)
{
    for (int p = std::min(high, n); p >= low; --p) {
        if (p % 2 == 0)
            continue;
        if (p == n) {
            if (p <= modulus) {
                acc.push_back(p);
                out.push_back(make_partition(acc));
                acc.pop_back();
            }
            continue;
        }
        acc.push_back(p);
        gen_b(n - p, p - 2, std::max(1, p - modulus), modulus, acc, out);
        acc.pop_back();
    }
}

// k parts built smallest-first: values odd or divisible by 2m, each within
// 2m of its predecessor, the smallest odd and at most 2m
void gen_dk(int n, int parts_left, int prev, int modulus, std::vector<int>& acc,
            std::vector<Partition>& out)
{
    if (parts_left == 0) {
        if (n == 0) {
            std::vector<int> rev(acc.rbegin(), acc.rend());
            out.push_back(make_partition(std::move(rev)));
        }
        return;
    }
    for (int v = prev + 1; v <= prev + modulus && v <= n; ++v) {
        if (v % 2 != 1 && v % modulus != 0)
            continue;
        if (acc.empty() && v % 2 != 1)
            continue;  // smallest part must be odd
        acc.push_back(v);
        gen_dk(n - v, parts_left - 1, v, modulus, acc, out);
        acc.pop_back();
    }
}

// weakly decreasing parts from {2m, 4m, ..., 2mk}
void gen_ek(int n, int max_index, int modulus, std::vector<int>& acc,
            std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(make_partition(acc));
        return;
    }
    for (int c = std::min(max_index, n / modulus); c >= 1; --c) {
        acc.push_back(modulus * c);
        gen_ek(n - modulus * c, c, modulus, acc, out);
        acc.pop_back();
    }
}

// values v = k..1, each used with an even multiplicity below 2m
void gen_hkm(int n, int v, int modulus, std::vector<int>& acc, std::vector<Partition>& out)
{
    if (v == 0) {
        if (n == 0)
            out.push_back(make_partition(acc));
        return;
    }
    for (int mult = 0; mult <= modulus - 2 && mult * v <= n; mult += 2) {
        for (int i = 0; i < mult; ++i)
            acc.push_back(v);
        gen_hkm(n - mult * v, v - 1, modulus, acc, out);
        for (int i = 0; i < mult; ++i)
            acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate(const FamilySpec& f, int n)
{
    if (n < 0)
        fail(errc::invalid_argument, "enumerate needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    const int modulus = 2 * f.m;
    const auto any = [](int) { return true; };
    const auto odd = [](int p) { return p % 2 == 1; };
    const auto even = [](int p) { return p % 2 == 0; };
    const auto allowed_part = [modulus](int p) { return p % 2 == 1 || p % modulus == 0; };

    switch (f.tag) {
    case Family::all_distinct:
        if (n == 0)
            return {Partition()};
        gen_distinct(n, n, acc, any, any, out);
        break;
    case Family::pdo:
        if (n == 0)
            return {Partition()};
        gen_distinct(n, n, acc, allowed_part, odd, out);
        break;
    case Family::q:
    case Family::a:
        if (n == 0)
            return {make_partition({0})};
        {
            std::vector<Partition> positive;
            if (f.tag == Family::q)
                gen_distinct(n, n, acc, any, any, positive);
            else
                gen_distinct(n, n, acc, allowed_part, allowed_part, positive);
            for (const Partition& mu : positive) {
                if (even(mu[mu.length() - 1]))
                    out.push_back(mu);
                std::vector<int> with_zero = mu.parts();
                with_zero.push_back(0);
                out.push_back(make_partition(std::move(with_zero)));
            }
        }
        break;
    case Family::b:
        if (n == 0)
            return {Partition()};
        gen_b(n, n, 1, modulus, acc, out);
        break;
    case Family::dk:
        gen_dk(n, f.k, 0, modulus, acc, out);
        break;
    case Family::ek:
        gen_ek(n, f.k, modulus, acc, out);
        break;
    case Family::hkm:
        gen_hkm(n, f.k, modulus, acc, out);
        break;
    }
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

std::string to_text(const Partition& p)
{
    if (p.empty())
        return "()";
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i)
            s += '+';
        s += std::to_string(p[i]);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << to_text(p);
}

std::string to_string(const FamilySpec& f)
{
    std::ostringstream os;
    switch (f.tag) {
    case Family::all_distinct: return "distinct";
    case Family::pdo: os << "pdo(m=" << f.m << ")"; break;
    case Family::q: return "q";
    case Family::a: os << "a(m=" << f.m << ")"; break;
    case Family::b: os << "b(m=" << f.m << ")"; break;
    case Family::dk: os << "dk(k=" << f.k << ",m=" << f.m << ")"; break;
    case Family::ek: os << "ek(k=" << f.k << ",m=" << f.m << ")"; break;
    case Family::hkm: os << "hkm(k=" << f.k << ",m=" << f.m << ")"; break;
    }
    return os.str();
}

}  // namespace invpart
