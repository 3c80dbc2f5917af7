#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zarlat/ring.hpp"

namespace zarlat {

struct LocRing;
using LocRingPtr = std::shared_ptr<const LocRing>;

/// The ring R[1/f] of fractions r/f^n. If some power of f annihilates 1 (in
/// particular f = 0 or f nilpotent) the localization collapses to the zero
/// ring, which the flag records.
struct LocRing {
    Elem den;           // the inverted element f
    bool zero_ring;     // ann_power(f, 1) present

    static LocRingPtr at(Elem f);
    /// The base ring viewed as a localization (denominator 1).
    static LocRingPtr trivial(const RingPtr& ring);

    const RingPtr& base() const { return den.ring(); }
    std::string name() const;
};

bool same_loc_ring(const LocRing& a, const LocRing& b);

/// A fraction num / f^exp. There is no canonical form; equality is semantic,
/// decided by loc_eq through an annihilator-power search.
struct LocElem {
    LocRingPtr loc;
    Elem num;
    std::uint32_t exp = 0;
};

LocElem loc_from_base(const LocRingPtr& loc, const Elem& r);
LocElem loc_zero(const LocRingPtr& loc);
LocElem loc_one(const LocRingPtr& loc);

/// r/f^n = r'/f^m  iff  some f^k annihilates the cross difference
/// f^m r - f^n r'. Present means equal; the witness carries the k.
std::optional<AnnPowerWitness> loc_eq(const LocElem& a, const LocElem& b);

LocElem loc_add(const LocElem& a, const LocElem& b);
LocElem loc_sub(const LocElem& a, const LocElem& b);
LocElem loc_mul(const LocElem& a, const LocElem& b);
LocElem loc_neg(const LocElem& a);
LocElem loc_pow(const LocElem& a, std::uint64_t n);

/// Inverse of a = r/f^n, present iff some f^k = c*r (then a^-1 = c*f^n / f^k).
std::optional<LocElem> loc_is_unit(const LocElem& a);

/// The homomorphism R[1/f] -> R[1/g] determined by a certificate
/// g^k = c * f; it sends r/f^n to r*c^n / g^(k*n) and commutes with the
/// canonical maps from R. Any two such maps between the same rings agree up
/// to loc_eq.
struct LocHom {
    LocRingPtr source;
    LocRingPtr target;
    std::uint32_t k = 1; // >= 1
    Elem c;
};

/// Validates target.den^k = c * source.den exactly.
LocHom make_loc_hom(LocRingPtr source, LocRingPtr target, std::uint32_t k, Elem c);

LocElem apply_hom(const LocHom& h, const LocElem& a);

/// The restriction map R[1/f] -> R[1/g], present iff g lies in sqrt(<f>)
/// (i.e. D(g) <= D(f)); the radical certificate g^k = c*f is the rule data.
std::optional<LocHom> restriction_hom(const Elem& f, const Elem& g);

// --- iterated localization (depth two) ---------------------------------------

struct Loc2Ring;
using Loc2RingPtr = std::shared_ptr<const Loc2Ring>;

/// R[1/f][1/g]: the inner localization R[1/f] with the image of g inverted
/// on top. Elements are (num / f^inner) / (g/1)^outer.
struct Loc2Ring {
    LocRingPtr inner; // R[1/f]
    Elem outer;       // g, as a base ring element

    static Loc2RingPtr at(LocRingPtr inner, Elem g);
    std::string name() const;
};

struct Loc2Elem {
    Loc2RingPtr loc;
    Elem num;
    std::uint32_t inner_exp = 0;
    std::uint32_t outer_exp = 0;
};

Loc2Elem loc2_from_base(const Loc2RingPtr& loc, const Elem& r);
Loc2Elem loc2_one(const Loc2RingPtr& loc);

/// Iterated fraction equality unfolds to a single annihilator search against
/// the product f*g of the two denominators.
std::optional<AnnPowerWitness> loc2_eq(const Loc2Elem& a, const Loc2Elem& b);

Loc2Elem loc2_add(const Loc2Elem& a, const Loc2Elem& b);
Loc2Elem loc2_mul(const Loc2Elem& a, const Loc2Elem& b);
Loc2Elem loc2_neg(const Loc2Elem& a);

// --- the three localization isomorphisms --------------------------------------

/// R[1/f][1/g] ~ R[1/fg]:  (r, n, m) -> r*f^m*g^n / (fg)^(n+m)  and back
/// (r, n) -> (r, n, n). The two maps are mutually inverse up to loc_eq and
/// preserve +, *, 1.
struct IteratedLocIso {
    Loc2RingPtr iterated; // R[1/f][1/g]
    LocRingPtr product;   // R[1/fg]

    LocElem collapse(const Loc2Elem& a) const;
    Loc2Elem expand(const LocElem& a) const;
};
IteratedLocIso iterated_loc_iso(const Elem& f, const Elem& g);

/// R[1/f] ~ R when f is a unit: r/f^n -> r * (f^-1)^n, back via _/1.
/// Requires is_unit(f); throws UsageError otherwise.
struct UnitLocIso {
    LocRingPtr loc;
    Elem inverse; // f^-1 in R

    Elem to_base(const LocElem& a) const;
    LocElem from_base(const Elem& r) const;
};
UnitLocIso unit_loc_iso(const Elem& f);

/// R[1/f] ~ R[1/g] from mutual radical certificates g^k = c*f and
/// f^l = d*g. Requires both; throws UsageError naming the missing one.
struct MutualLocIso {
    LocHom forward;  // R[1/f] -> R[1/g]
    LocHom backward; // R[1/g] -> R[1/f]
};
MutualLocIso mutual_loc_iso(const Elem& f, const Elem& g);

// --- localization-axioms instance check ----------------------------------------
//
// The universal characterization of R[1/f]: a candidate R-algebra map out of
// R[1/f] identifies the target with the localization exactly when (i) the
// image of f is a unit, (ii) base elements with image zero are annihilated by
// a power of f, and (iii) every target element is a fraction phi(r)*phi(f)^-n.
// The check runs those three clauses on samples, with every witness verified
// by exact arithmetic. Clause (iii) uses an untrusted witness supplier whose
// claims are re-checked in the target.

template <class T>
struct LocCandidate {
    LocRingPtr source; // R[1/f]
    std::function<T(const Elem&)> phi;              // R -> target
    std::function<bool(const T&, const T&)> eq;     // semantic equality in target
    std::function<T(const T&, const T&)> mul;       // target multiplication
    std::function<std::optional<T>(const T&)> invert;
    T one;
    T zero;
    std::function<std::string(const T&)> show;
    // claimed (r, n) with t ~ phi(r) * (phi(f)^-1)^n; nullopt = no claim
    std::function<std::optional<std::pair<Elem, std::uint32_t>>(const T&)> fraction_form;
};

struct LocCheckReport {
    struct Clause {
        bool ok = false;
        std::string detail;
    };
    Clause unit_of_f;                  // clause (i), with the inverse printed
    std::vector<Clause> kernel;        // clause (ii), one per base sample with zero image
    std::vector<Clause> fractions;     // clause (iii), one per target sample
    bool all_ok() const;
    std::string summary() const;
};

LocCheckReport localization_conditions_check(const LocCandidate<LocElem>& cand,
                                             const std::vector<Elem>& base_samples,
                                             const std::vector<LocElem>& target_samples);
LocCheckReport localization_conditions_check(const LocCandidate<Loc2Elem>& cand,
                                             const std::vector<Elem>& base_samples,
                                             const std::vector<Loc2Elem>& target_samples);

/// Candidate for a LocHom, with the fraction-form supplier backed by a mutual
/// certificate between the two denominators when one exists.
LocCandidate<LocElem> candidate_from_hom(const LocHom& h);

/// Candidate for the collapse R[1/fg] -> R[1/f][1/g] (the direction whose
/// target is the iterated ring), with the explicit fraction-form rewrite.
LocCandidate<Loc2Elem> candidate_from_iterated(const IteratedLocIso& iso);

std::string to_string(const LocElem& a);
std::string to_string(const Loc2Elem& a);

} // namespace zarlat
