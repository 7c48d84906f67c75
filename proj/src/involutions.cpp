#include "invpart/involutions.hpp"

#include <algorithm>
#include <stdexcept>

namespace invpart {

namespace {

void check_internal(bool ok, const std::string& what)
{
    if (!ok)
        throw std::logic_error("involution internal invariant violated: " + what);
}

std::vector<int> drop_index(const std::vector<int>& v, std::size_t idx)
{
    std::vector<int> out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != idx)
            out.push_back(v[i]);
    return out;
}

std::vector<int> prepend(int value, const std::vector<int>& v)
{
    std::vector<int> out;
    out.reserve(v.size() + 1);
    out.push_back(value);
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

}  // namespace

PairState make_pair_state(Partition pi, Partition sigma, int m)
{
    const int k = pi.length();
    if (!is_member(pi, FamilySpec::dk(k, m)))
        fail(errc::not_in_family, "pi = " + to_text(pi) + " is not in D_" + std::to_string(k));
    if (!is_member(sigma, FamilySpec::ek(k, m)))
        fail(errc::not_in_family,
             "sigma = " + to_text(sigma) + " is not in E_" + std::to_string(k));
    return PairState{std::move(pi), std::move(sigma), m};
}

std::string to_string(StepCase c)
{
    switch (c) {
    case StepCase::a1: return "A1";
    case StepCase::a2: return "A2";
    case StepCase::b1: return "B1";
    case StepCase::b2: return "B2";
    case StepCase::psi_i: return "psi-i";
    case StepCase::psi_ii: return "psi-ii";
    case StepCase::psi_iii: return "psi-iii";
    }
    return "?";
}

PairOutcome phi(const PairState& s)
{
    const int m = s.m;
    const int k = s.k();
    const int modulus = 2 * m;
    make_pair_state(s.pi, s.sigma, m);  // reject ill-formed states up front

    const auto hooks = leg_hooks(s.pi, k, m);
    const ModularHook* best = nullptr;  // maximal height = largest row index
    for (const auto& h : hooks)
        if (h.deletion_valid)
            best = &h;

    const int sigma1 = s.sigma.empty() ? 0 : s.sigma[0];
    const int pi1 = s.pi.empty() ? 0 : s.pi[0];

    if (best != nullptr && best->length >= sigma1) {
        // A1: the hook leaves pi and becomes the new largest part of sigma
        Partition pi_star = delete_leg_hook(s.pi, best->row, m);
        check_internal(best->length <= modulus * (k - 1), "hook too long for E_{k-1}");
        Partition sigma_star = make_partition(prepend(best->length, s.sigma.parts()));
        return {make_pair_state(std::move(pi_star), std::move(sigma_star), m), StepCase::a1};
    }

    if ((best != nullptr && best->length < sigma1) || (best == nullptr && pi1 + modulus < sigma1)) {
        // A2: sigma_1 enters pi as a modular leg hook
        Partition pi_star = insert_leg_hook(s.pi, sigma1, m);
        Partition sigma_star = make_partition(drop_index(s.sigma.parts(), 0));
        check_internal(pi_star.length() == k + 1, "A2 must grow pi by one part");
        return {make_pair_state(std::move(pi_star), std::move(sigma_star), m), StepCase::a2};
    }

    // Part B: no valid hook and sigma_1 <= pi_1 + 2m
    int pir = 0;       // largest even part of pi, 0 when all parts are odd
    int pir_idx = -1;
    for (int i = 0; i < s.pi.length(); ++i)
        if (s.pi[i] % 2 == 0) {
            pir = s.pi[i];
            pir_idx = i;
            break;
        }

    if (pir > 0 && pir >= sigma1) {
        // B1: the largest even part of pi moves to the front of sigma
        Partition pi_star = make_partition(drop_index(s.pi.parts(), static_cast<std::size_t>(pir_idx)));
        check_internal(pir <= modulus * (k - 1), "B1 part too large for E_{k-1}");
        Partition sigma_star = make_partition(prepend(pir, s.sigma.parts()));
        return {make_pair_state(std::move(pi_star), std::move(sigma_star), m), StepCase::b1};
    }

    if (pir < sigma1) {
        // B2: sigma_1 becomes a plain part of pi (lands between two odd
        // parts or on top)
        std::vector<int> parts = s.pi.parts();
        parts.push_back(sigma1);
        Partition pi_star = make_partition(std::move(parts));
        Partition sigma_star = make_partition(drop_index(s.sigma.parts(), 0));
        return {make_pair_state(std::move(pi_star), std::move(sigma_star), m), StepCase::b2};
    }

    // pi has only odd parts and sigma is empty
    check_internal(pir == 0 && sigma1 == 0, "unhandled phi case");
    return {std::nullopt, std::nullopt};
}

PairState extract(const Partition& lambda, int m)
{
    if (!is_member(lambda, FamilySpec::pdo(m)))
        fail(errc::not_in_family, to_text(lambda) + " is not in pdo(m=" + std::to_string(m) + ")");
    const int k = lambda.length();
    const int modulus = 2 * m;
    std::vector<int> pi = lambda.parts();
    std::vector<int> sigma;
    for (int t = k; t >= 1; --t) {
        const int below = (t < k) ? pi[static_cast<std::size_t>(t)] : 0;
        const int gap = pi[static_cast<std::size_t>(t - 1)] - below;
        const int residue = (gap - 1) % modulus + 1;  // 1 <= residue <= 2m
        const int multiples = (gap - residue) / modulus;
        for (int j = 0; j < t; ++j)
            pi[static_cast<std::size_t>(j)] -= modulus * multiples;
        for (int j = 0; j < multiples; ++j)
            sigma.push_back(modulus * t);
    }
    return make_pair_state(make_partition(std::move(pi)), make_partition(std::move(sigma)), m);
}

Partition assemble(const PairState& s)
{
    make_pair_state(s.pi, s.sigma, s.m);
    return s.pi + modular_conjugate(s.sigma, s.m);
}

SquareMapTrace psi_do_trace(const Partition& lambda, int m)
{
    SquareMapTrace trace;
    trace.input = lambda;
    trace.extracted = extract(lambda, m);
    PairOutcome step = phi(trace.extracted);
    if (step.fixed_point())
        return trace;
    trace.step = step.step;
    trace.image = assemble(*step.image);
    check_internal(is_member(*trace.image, FamilySpec::pdo(m)), "psi_do image left pdo");
    check_internal(trace.image->sum() == lambda.sum(), "psi_do changed the weight");
    return trace;
}

MapOutcome psi_do(const Partition& lambda, int m)
{
    SquareMapTrace trace = psi_do_trace(lambda, m);
    return {trace.image, trace.step};
}

PsiQTrace psi_q_trace(const Partition& lambda, int m)
{
    if (!is_member(lambda, FamilySpec::a(m)))
        fail(errc::not_in_family, to_text(lambda) + " is not in a(m=" + std::to_string(m) + ")");
    PsiQTrace trace;
    trace.input = lambda;
    const int len = lambda.length();
    const int smallest = lambda[len - 1];

    if (smallest != 0) {
        std::vector<int> parts = lambda.parts();
        parts.push_back(0);
        trace.step = StepCase::psi_ii;
        trace.image = make_partition(std::move(parts));
        return trace;
    }
    if (len == 1)
        return trace;  // the partition (0): the weight-0 fixed point
    const int second = lambda[len - 2];
    if (second % 2 == 0) {
        trace.step = StepCase::psi_i;
        trace.image = make_partition(drop_index(lambda.parts(), static_cast<std::size_t>(len - 1)));
        return trace;
    }
    // smallest 0, second smallest odd: act through psi_do on the rest
    Partition stripped = make_partition(drop_index(lambda.parts(), static_cast<std::size_t>(len - 1)));
    SquareMapTrace inner = psi_do_trace(stripped, m);
    trace.inner = inner;
    if (!inner.image)
        return trace;  // psi_do fixed point, so lambda is fixed too
    std::vector<int> parts = inner.image->parts();
    parts.push_back(0);
    trace.step = StepCase::psi_iii;
    trace.image = make_partition(std::move(parts));
    return trace;
}

MapOutcome psi_q(const Partition& lambda, int m)
{
    PsiQTrace trace = psi_q_trace(lambda, m);
    return {trace.image, trace.step};
}

std::pair<int, Partition> b_to_pair(const Partition& mu, int m)
{
    if (!is_member(mu, FamilySpec::b(m)))
        fail(errc::not_in_family, to_text(mu) + " is not in b(m=" + std::to_string(m) + ")");
    const int k = mu.length();
    std::vector<int> work = mu.parts();
    std::vector<int> rows;
    for (;;) {
        // deepest row whose gap exceeds the staircase target (2 between
        // consecutive rows, 1 for the last part)
        int row = 0, excess = 0;
        for (int i = k; i >= 1; --i) {
            const int below = (i < k) ? work[static_cast<std::size_t>(i)] : 0;
            const int target = (i < k) ? 2 : 1;
            const int gap = work[static_cast<std::size_t>(i - 1)] - below;
            if (gap > target) {
                row = i;
                excess = gap - target;
                break;
            }
        }
        if (row == 0)
            break;
        check_internal(excess % 2 == 0 && excess <= 2 * m - 2, "gap excess outside hkm range");
        for (int j = 0; j < row; ++j)
            work[static_cast<std::size_t>(j)] -= excess;
        for (int j = 0; j < excess; ++j)
            rows.push_back(row);
    }
    check_internal(make_partition(work) == triangular(k), "residue is not the staircase");
    Partition lambda_km = make_partition(std::move(rows));
    check_internal(is_member(lambda_km, FamilySpec::hkm(k, m)), "columns left hkm");
    check_internal(mu.sum() == k * k + lambda_km.sum(), "weight split violated");
    return {k, lambda_km};
}

Partition pair_to_b(int k, const Partition& lambda_km, int m)
{
    if (!is_member(lambda_km, FamilySpec::hkm(k, m)))
        fail(errc::not_in_family,
             to_text(lambda_km) + " is not in hkm(k=" + std::to_string(k) + ")");
    Partition mu = triangular(k) + conjugate(lambda_km);
    check_internal(is_member(mu, FamilySpec::b(m)), "reassembled partition left b(m)");
    return mu;
}

}  // namespace invpart
