#ifndef INVPART_INVOLUTIONS_HPP
#define INVPART_INVOLUTIONS_HPP

#include <optional>
#include <string>
#include <utility>

#include "invpart/modular_diagram.hpp"
#include "invpart/partition.hpp"

namespace invpart {

/* A pair (pi, sigma) in D_k x E_k with its modulus parameter m; the domain
 * of the involution phi. k is the part count of pi. */
struct PairState {
    Partition pi;
    Partition sigma;
    int m = 1;

    int k() const noexcept { return pi.length(); }
    bool operator==(const PairState&) const = default;
};

/// Validates membership of both components; throws not_in_family.
PairState make_pair_state(Partition pi, Partition sigma, int m);

enum class StepCase { a1, a2, b1, b2, psi_i, psi_ii, psi_iii };

std::string to_string(StepCase c);  // "A1" ... "B2", "psi-i" ... "psi-iii"

/// The image of an involution step, or a fixed point when image is absent.
template <class T>
struct InvolutionOutcome {
    std::optional<T> image;
    std::optional<StepCase> step;

    bool fixed_point() const noexcept { return !image.has_value(); }
};

using PairOutcome = InvolutionOutcome<PairState>;
using MapOutcome = InvolutionOutcome<Partition>;

/* The involution phi on D_k x E_k. Case dispatch, with sigma_1 read as 0
 * when sigma is empty and pi_r the largest even part of pi (0 when pi has
 * none):
 *
 *   A1  a deletion-valid hook exists and the maximal-height one H_r has
 *       |H_r| >= sigma_1: delete H_r from pi, prepend |H_r| to sigma.
 *   A2  (a valid hook exists and |H_r| < sigma_1) or (no valid hook and
 *       pi_1 + 2m < sigma_1): move sigma_1 from sigma into pi as a hook.
 *   B1  no valid hook, sigma_1 <= pi_1 + 2m, pi_r >= sigma_1, pi_r > 0:
 *       move the part pi_r from pi to the front of sigma.
 *   B2  no valid hook, sigma_1 <= pi_1 + 2m, pi_r < sigma_1: move sigma_1
 *       from sigma into pi as a plain part.
 *
 * Remaining case (pi all odd, sigma empty): fixed point. Applying phi
 * twice is the identity away from fixed points; each step changes the
 * number of even parts of pi by one and preserves both the number of odd
 * parts and l(pi) + l(sigma). */
PairOutcome phi(const PairState& s);

/* Step 1 of the square involution: peel maximal multiples of 2m off the
 * gaps of lambda (bottom row up), collecting the removed columns as parts
 * of sigma. Produces (pi, sigma) in D_k x E_k with the part-parity profile
 * of lambda preserved in pi. */
PairState extract(const Partition& lambda, int m);

/* Step 3: lambda* = pi + 2m-modular conjugate of sigma. Exact inverse of
 * extract. */
Partition assemble(const PairState& s);

/// Trace of one application of the square involution (extract, phi,
/// assemble), as exposed by the CLI.
struct SquareMapTrace {
    Partition input;
    PairState extracted;
    std::optional<StepCase> step;     // absent on fixed points
    std::optional<Partition> image;   // absent on fixed points
};

/* The Franklin-type involution for squares on the family pdo(m); at m = 1
 * its unique fixed point of weight k^2 is the staircase (2k-1,...,3,1),
 * for larger m the fixed points are exactly the members of b(m). The step
 * tag reports which phi case fired. */
MapOutcome psi_do(const Partition& lambda, int m);
SquareMapTrace psi_do_trace(const Partition& lambda, int m);

/* The companion involution on the family a(m) (distinct nonnegative parts,
 * smallest even):
 *   psi-i    smallest part 0, second smallest even: drop the 0,
 *   psi-ii   smallest part nonzero: append a 0,
 *   psi-iii  smallest part 0, second smallest odd: apply psi_do to the
 *            zero-stripped partition and re-append the 0.
 * Fixed points of weight n are mu + trailing 0 for mu a fixed point of
 * psi_do; the single-part partition (0) is the weight-0 fixed point. */
MapOutcome psi_q(const Partition& lambda, int m);

struct PsiQTrace {
    Partition input;
    std::optional<StepCase> step;            // psi-i / psi-ii / psi-iii
    std::optional<SquareMapTrace> inner;     // present for psi-iii
    std::optional<Partition> image;
};
PsiQTrace psi_q_trace(const Partition& lambda, int m);

/* The staircase decomposition of mu in b(m): repeatedly remove the even
 * excess of the deepest oversized gap as columns, leaving the staircase
 * T_k; the removed columns, read as rows, form a partition in hkm(k, m).
 * Weight bookkeeping: |mu| = k^2 + |result|. */
std::pair<int, Partition> b_to_pair(const Partition& mu, int m);

/// Inverse: T_k plus the conjugate of the hkm-partition.
Partition pair_to_b(int k, const Partition& lambda_km, int m);

}  // namespace invpart

#endif
