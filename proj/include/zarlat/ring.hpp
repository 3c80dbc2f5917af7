#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "zarlat/error.hpp"

namespace zarlat {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A concrete computable commutative ring with a unit. Four kinds are
/// supported: the integers Z, the modular rings Z/n (n >= 2), univariate
/// polynomials Q[x], and multivariate polynomials Q[x1..xm]. The first three
/// are principal-ideal rings where ideal and radical membership reduce to
/// gcd computations with trackable coefficients; the multivariate ring is
/// handled by the Groebner engine.
class Ring {
public:
    enum class Kind { integers, modular, uni_poly, multi_poly };

    static RingPtr integers();
    static RingPtr modular(mpz_class modulus);
    static RingPtr rational_poly(std::string var);
    static RingPtr rational_multi_poly(std::vector<std::string> vars);

    Kind kind() const { return kind_; }
    const mpz_class& modulus() const;
    const std::vector<std::string>& variables() const;
    std::size_t var_count() const { return vars_.size(); }

    bool is_integral_domain() const { return kind_ != Kind::modular; }
    /// True for Z, Z/n and Q[x]: every finitely generated ideal is principal
    /// and membership is decided by iterated extended gcd.
    bool is_principal() const { return kind_ != Kind::multi_poly; }

    std::string name() const;

    friend bool operator==(const Ring& a, const Ring& b);
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    Ring() = default;
    Kind kind_ = Kind::integers;
    mpz_class modulus_;
    std::vector<std::string> vars_;
};

/// Exponent vector of a multivariate monomial, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial& m);

/// Graded reverse lexicographic order, the fixed monomial order of the
/// multivariate engine. Compares by total degree first; ties are broken by
/// the last nonzero entry of the exponent difference (smaller trailing
/// exponent wins).
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using UniPoly = std::vector<mpq_class>;             // coeff of x^i, no trailing zeros
using MultiPoly = std::map<Monomial, mpq_class, GrevlexLess>; // no zero coefficients

/// An element of a Ring in canonical form, so structural equality coincides
/// with ring equality: integers as arbitrary-precision values, residues in
/// [0, n), dense rational coefficient vectors without trailing zeros, and
/// monomial maps without zero coefficients (rationals are kept coprime with
/// positive denominator by GMP). Immutable after construction.
class Elem {
public:
    static Elem from_int(RingPtr ring, mpz_class v);
    static Elem from_rational(RingPtr ring, mpq_class v);
    static Elem from_uni(RingPtr ring, UniPoly coeffs);
    static Elem from_multi(RingPtr ring, MultiPoly terms);
    /// The monomial c * prod x_i^exps_i in a multivariate ring.
    static Elem monomial(RingPtr ring, Monomial exps, mpq_class c = 1);

    const RingPtr& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;

    const mpz_class& int_value() const;   // integers / modular
    const UniPoly& uni_value() const;     // uni_poly
    const MultiPoly& multi_value() const; // multi_poly

    friend bool operator==(const Elem& a, const Elem& b);
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

private:
    RingPtr ring_;
    std::variant<mpz_class, UniPoly, MultiPoly> v_;
    friend Elem add(const Elem&, const Elem&);
    friend Elem mul(const Elem&, const Elem&);
    friend Elem neg(const Elem&);
};

Elem zero(const RingPtr& ring);
Elem one(const RingPtr& ring);

Elem add(const Elem& a, const Elem& b);
Elem sub(const Elem& a, const Elem& b);
Elem mul(const Elem& a, const Elem& b);
Elem neg(const Elem& a);
Elem pow(const Elem& a, std::uint64_t n); // n = 0 gives 1, also for a = 0

inline Elem operator+(const Elem& a, const Elem& b) { return add(a, b); }
inline Elem operator-(const Elem& a, const Elem& b) { return sub(a, b); }
inline Elem operator*(const Elem& a, const Elem& b) { return mul(a, b); }
inline Elem operator-(const Elem& a) { return neg(a); }

/// Canonical text form; parse_elem() of the result reproduces the element.
std::string to_string(const Elem& a);
std::ostream& operator<<(std::ostream& os, const Elem& a);

void require_same_ring(const Elem& a, const Elem& b, const char* where);
void require_same_ring(const std::vector<Elem>& xs, const RingPtr& ring, const char* where);

// --- Certificates -----------------------------------------------------------
//
// Every existential the algorithms rely on is answered with an explicit
// witness that re-checks by exact arithmetic. Emission sites verify the
// witness and feed the audit counters; a failed re-check throws
// InternalError.

/// Witness for x in the radical of <gens>: x^k = sum coeffs[i] * gens[i].
struct RadicalCert {
    std::uint32_t k = 1;        // exponent, >= 1
    std::vector<Elem> coeffs;   // same length as the generator list
};

/// Witness for 1 in <gens>: sum coeffs[i] * gens[i] = 1.
struct BezoutCert {
    std::vector<Elem> coeffs;
};

/// Witness for f^k * x = 0 (k minimal when produced by ann_power).
struct AnnPowerWitness {
    std::uint32_t k = 0;
};

bool check_radical_cert(const Elem& x, const std::vector<Elem>& gens, const RadicalCert& c);
bool check_bezout_cert(const std::vector<Elem>& gens, const BezoutCert& c);
bool check_membership_coeffs(const Elem& x, const std::vector<Elem>& gens,
                             const std::vector<Elem>& coeffs);
bool check_ann_power(const Elem& f, const Elem& x, const AnnPowerWitness& w);

// --- Decision procedures ----------------------------------------------------

/// Inverse of a, when a is a unit.
std::optional<Elem> is_unit(const Elem& a);

/// Coefficients c with sum c[i]*gens[i] = x, when x lies in <gens>.
/// Principal-ideal rings use iterated extended gcd (the modulus joins the
/// generators for Z/n); multivariate rings go through the Groebner engine.
std::optional<std::vector<Elem>> ideal_membership(const Elem& x, const std::vector<Elem>& gens);

/// Certificate for x in sqrt(<gens>), with minimal exponent k.
std::optional<RadicalCert> radical_membership(const Elem& x, const std::vector<Elem>& gens);

/// Bezout certificate for the unit ideal: 1 = sum c[i]*gens[i].
std::optional<BezoutCert> unit_ideal_cert(const std::vector<Elem>& gens);

/// Minimal k with f^k * x = 0, when some power of f annihilates x. In
/// integral domains this only happens for x = 0 (k = 0) or f = 0 (k = 1);
/// in Z/n the search is bounded by ceil(log2 n), where the descending chain
/// <f> >= <f^2> >= ... has stabilized.
std::optional<AnnPowerWitness> ann_power(const Elem& f, const Elem& x);

// gcd helpers shared by the membership procedures and lattice normalization;
// results are normalized (nonnegative in Z, monic in Q[x]).
Elem gcd_elem(const Elem& a, const Elem& b);
std::optional<Elem> exact_div(const Elem& a, const Elem& b); // a / b when b | a exactly

} // namespace zarlat
