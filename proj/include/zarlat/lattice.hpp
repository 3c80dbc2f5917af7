#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zarlat/ring.hpp"

namespace zarlat {

/// An element of the Zariski lattice of R: a finite generator list standing
/// for the radical of the ideal it generates. Two lists are equal exactly
/// when each generator of one lies in the radical generated by the other.
struct LatticeElt {
    RingPtr ring;
    std::vector<Elem> gens;
};

LatticeElt make_lattice_elt(RingPtr ring, std::vector<Elem> gens);

/// D(f), the basic open attached to f: the singleton list [f].
LatticeElt basic_open(const Elem& f);

LatticeElt lat_top(const RingPtr& ring);    // [1]
LatticeElt lat_bottom(const RingPtr& ring); // []

/// Join is list concatenation (ideal sum), meet is the list of all pairwise
/// products in row-major order (ideal product).
LatticeElt lat_join(const LatticeElt& a, const LatticeElt& b);
LatticeElt lat_meet(const LatticeElt& a, const LatticeElt& b);

/// a <= b, certified by one radical certificate per generator of a.
std::optional<std::vector<RadicalCert>> lat_leq_cert(const LatticeElt& a, const LatticeElt& b);
bool lat_leq(const LatticeElt& a, const LatticeElt& b);

struct LatEqCerts {
    std::vector<RadicalCert> fwd; // a's generators in sqrt<b>
    std::vector<RadicalCert> bwd; // b's generators in sqrt<a>
};
std::optional<LatEqCerts> lat_eq_cert(const LatticeElt& a, const LatticeElt& b);
bool lat_eq(const LatticeElt& a, const LatticeElt& b);

/// Equivalent canonical-leaning representative: zeros dropped, duplicates
/// removed; principal-ideal rings collapse to the single gcd generator,
/// multivariate rings drop generators lying in the radical of the rest.
LatticeElt normalize(const LatticeElt& a);

// --- the three support relations -------------------------------------------------

/// Report for the support-map laws of D: D(1) = top, D(0) = bottom,
/// D(fg) = D(f) ^ D(g), D(f+g) <= D(f) v D(g). The sum relation always
/// carries the direct certificate f+g = 1*f + 1*g.
struct SupportReport {
    std::size_t pairs_checked = 0;
    std::vector<std::string> violations;
    bool all_ok() const { return violations.empty(); }
};
SupportReport support_check(const RingPtr& ring, const std::vector<std::pair<Elem, Elem>>& pairs);

// --- finite distributive lattices as explicit tables ------------------------------

/// A finite distributive lattice given by its full order table. Construction
/// validates the lattice axioms and distributivity over all triples, so a
/// successfully built instance is a valid universal-property target.
class FiniteDistLattice {
public:
    static FiniteDistLattice from_leq(std::vector<std::string> labels,
                                      const std::vector<std::vector<bool>>& leq);
    /// Divisors of n ordered by divisibility: join = lcm, meet = gcd,
    /// bottom = 1, top = n.
    static FiniteDistLattice divisor_lattice(const mpz_class& n);

    std::size_t size() const { return labels_.size(); }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
    std::size_t top() const { return top_; }
    std::size_t bottom() const { return bottom_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    std::optional<std::size_t> index_of(const std::string& label) const;

private:
    FiniteDistLattice() = default;
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<std::size_t>> join_;
    std::vector<std::vector<std::size_t>> meet_;
    std::size_t top_ = 0, bottom_ = 0;
};

/// A support map into a finite lattice, given elementwise.
using SupportMap = std::function<std::size_t(const Elem&)>;

/// The induced lattice morphism on a generator list:
/// [g1..gn] -> d(g1) v ... v d(gn), the empty list to bottom. Validates the
/// support relations on the generators it touches and throws UsageError when
/// one fails.
std::size_t universal_morphism(const FiniteDistLattice& lat, const SupportMap& d,
                               const LatticeElt& a);

// --- basic-open detection -----------------------------------------------------------

/// Whether a lattice element is D(f) for a single f. Principal-ideal rings
/// always produce the gcd witness; multivariate rings decide only the cases
/// that normalize to at most one generator and answer "unknown" otherwise.
struct BasicOpenResult {
    enum class Status { basic, unknown };
    Status status = Status::unknown;
    std::optional<Elem> generator;
};
BasicOpenResult is_basic_open(const LatticeElt& a);

std::string to_string(const LatticeElt& a);

} // namespace zarlat
