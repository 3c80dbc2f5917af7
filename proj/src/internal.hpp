#pragma once

// Shared internals: dense rational polynomial arithmetic and small helpers
// used by the ring, membership and Groebner translation units.

#include <cstddef>
#include <utility>

#include "zarlat/audit.hpp"
#include "zarlat/ring.hpp"

namespace zarlat::detail {

// Emission gates: every certificate re-checks exactly before it leaves the
// producing operation, and the audit counters see the outcome.

inline AnnPowerWitness emit_ann(const Elem& f, const Elem& x, AnnPowerWitness w) {
    bool ok = check_ann_power(f, x, w);
    audit::record(audit::CertKind::ann_power, ok);
    if (!ok) throw InternalError("annihilator witness failed re-verification");
    return w;
}

inline RadicalCert emit_radical(const Elem& x, const std::vector<Elem>& gens, RadicalCert c) {
    bool ok = check_radical_cert(x, gens, c);
    audit::record(audit::CertKind::radical, ok);
    if (!ok) throw InternalError("radical certificate failed re-verification");
    return c;
}

inline std::vector<Elem> emit_coeffs(const Elem& x, const std::vector<Elem>& gens,
                                     std::vector<Elem> coeffs) {
    bool ok = check_membership_coeffs(x, gens, coeffs);
    audit::record(audit::CertKind::bezout, ok);
    if (!ok) throw InternalError("membership coefficients failed re-verification");
    return coeffs;
}

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool uni_is_zero(const UniPoly& p) { return p.empty(); }

inline std::size_t uni_deg(const UniPoly& p) { return p.empty() ? 0 : p.size() - 1; }

UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_neg(const UniPoly& a);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const UniPoly& a, const mpq_class& c);

/// Long division over Q: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);

/// Monic normalization (zero stays zero).
UniPoly uni_monic(const UniPoly& a);

MultiPoly multi_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly multi_neg(const MultiPoly& a);
MultiPoly multi_mul(const MultiPoly& a, const MultiPoly& b);

/// Canonical residue in [0, n).
mpz_class mod_canon(const mpz_class& v, const mpz_class& n);

/// Extended gcd in a principal-ideal setting on Elems of one ring
/// (integers or uni_poly): returns (g, u, v) with u*a + v*b = g, g
/// normalized (nonnegative / monic).
struct Xgcd {
    Elem g, u, v;
};
Xgcd xgcd(const Elem& a, const Elem& b);

} // namespace zarlat::detail
