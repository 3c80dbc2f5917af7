#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zarlat/ring.hpp"

namespace zarlat {

/// Groebner basis of a multivariate ideal under the fixed graded reverse
/// lexicographic order, with a transform matrix expressing every basis
/// element as an explicit combination of the input generators:
///   basis[i] = sum_j transform[i][j] * input[j]
/// The rows re-verify exactly; build() checks them before returning.
struct GroebnerBasis {
    std::vector<Elem> input;
    std::vector<Elem> basis;
    std::vector<std::vector<Elem>> transform;
};

/// Multivariate division: p = sum cofactors[i]*divisors[i] + remainder, with
/// no remainder monomial divisible by any divisor's leading monomial. Zero
/// divisors are skipped (their cofactor stays zero).
std::pair<Elem, std::vector<Elem>> divide_with_cofactors(const Elem& p,
                                                         const std::vector<Elem>& divisors);

/// Buchberger's algorithm with cofactor tracking. Aborts with ResourceError
/// once `pair_budget` S-pairs have been processed.
GroebnerBasis buchberger(const std::vector<Elem>& gens, std::size_t pair_budget = 100000);

/// Membership in <gens> for multivariate rings; coefficients are composed
/// through the transform matrix and re-verified.
std::optional<std::vector<Elem>> mv_ideal_membership(const Elem& x, const std::vector<Elem>& gens);
std::optional<std::vector<Elem>> mv_ideal_membership(const Elem& x, const GroebnerBasis& gb);

/// Membership in sqrt(<gens>) decided by adjoining a fresh variable t and
/// testing 1 in <gens, 1 - t*x>; the certificate is extracted by substituting
/// t -> 1/x in the combination for 1 and clearing denominators, then the
/// exponent is minimized against <gens> directly.
std::optional<RadicalCert> mv_radical_membership(const Elem& x, const std::vector<Elem>& gens);

} // namespace zarlat
