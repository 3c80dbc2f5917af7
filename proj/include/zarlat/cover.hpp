#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zarlat/lattice.hpp"
#include "zarlat/localization.hpp"

namespace zarlat {

/// The finite index category for a cover of size n: one object per index i,
/// one per pair (i, j) with i < j, and, besides identities, exactly the left
/// and right inclusions i -> (i,j) and j -> (i,j). No two non-identity
/// arrows compose.
struct DiagShape {
    std::size_t n = 0;

    struct Obj {
        std::size_t i = 0, j = 0; // pair uses both; singleton uses i
        bool is_pair = false;
    };
    struct Arrow {
        enum class Kind { identity, left, right };
        std::size_t src = 0, dst = 0; // object indices
        Kind kind = Kind::identity;
    };

    std::vector<Obj> objects; // singletons first, then pairs in row-major order
    std::vector<Arrow> arrows;

    std::size_t sing_index(std::size_t i) const;                  // 1-based cover index
    std::size_t pair_index(std::size_t i, std::size_t j) const;   // i < j, 1-based
    /// Composite of `first` followed by `then`, when the endpoints match.
    std::optional<std::size_t> compose(std::size_t first, std::size_t then) const;
};

DiagShape cover_diagram_shape(std::size_t n);

/// A certified cover of a lattice element by basic opens D(parts[i]):
/// cert_down[i] witnesses parts[i] in sqrt<target.gens> and cert_up[j]
/// witnesses target.gens[j] in sqrt<parts>, together giving
/// join of D(parts) = target.
struct Cover {
    LatticeElt target;
    std::vector<Elem> parts;
    std::vector<RadicalCert> cert_down;
    std::vector<RadicalCert> cert_up;

    bool verify() const;
};

std::optional<Cover> cover_check(const LatticeElt& target, const std::vector<Elem>& parts);

/// One localization element per cover index, pairwise agreeing after
/// restriction to R[1/fi*fj]; agreements holds the annihilator witnesses in
/// row-major (i < j) order.
struct CompatibleFamily {
    Cover cover;
    std::vector<LocElem> sections;
    std::vector<AnnPowerWitness> agreements;

    bool verify() const;
};

std::optional<CompatibleFamily> check_compatible(const Cover& cover,
                                                 const std::vector<LocElem>& sections);

/// R[1/fi] -> R[1/fi*fj] with the direct certificate (fi*fj)^1 = fj * fi.
LocHom restriction_to_product(const Elem& fi, const Elem& fj);

/// The constant family r/1 over every part of a cover.
CompatibleFamily constant_family(const Cover& cover, const Elem& r);

/// Instance check that the square
///     R[1/h]  ->  R[1/f]
///       |           |
///     R[1/g]  ->  R[1/fg]
/// is a pullback, given D(h) = D(f) v D(g): compatible test pairs glue to a
/// unique element of R[1/h] restricting back to the pair, incompatible pairs
/// are rejected, and the localization at 0 is degenerate (terminal).
struct PullbackReport {
    struct Case {
        bool compatible = false;
        bool glue_restricts_back = false; // meaningful when compatible
        bool glue_unique = false;         // re-glue with permuted combination agrees
    };
    std::vector<Case> cases;
    bool terminal_ok = false;
};

PullbackReport pullback_instance_check(const Elem& h, const Elem& f, const Elem& g,
                                       const std::vector<std::pair<LocElem, LocElem>>& test_pairs);

} // namespace zarlat
