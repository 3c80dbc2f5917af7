#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zarlat/cover.hpp"
#include "zarlat/lattice.hpp"
#include "zarlat/localization.hpp"
#include "zarlat/random.hpp"
#include "zarlat/sheaf.hpp"

namespace zarlat {

/// Shared shape of the randomized property suites exposed through the CLI.
struct SuiteReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool all_ok() const { return failures.empty(); }
};

/// Support relations D(1)=top, D(0)=bottom, D(fg)=D(f)^D(g),
/// D(f+g) <= D(f)vD(g) on seeded random pairs.
SupportReport support_suite(const RingPtr& ring, Rng& rng, std::size_t samples);

/// Roundtrips and ring-law preservation for the three localization
/// isomorphisms, on seeded random elements.
SuiteReport iterated_iso_suite(const Elem& f, const Elem& g, Rng& rng, std::size_t samples);
SuiteReport unit_iso_suite(const Elem& f, Rng& rng, std::size_t samples);
SuiteReport mutual_iso_suite(const Elem& f, const Elem& g, Rng& rng, std::size_t samples);

/// Top-element roundtrip on seeded random global elements.
RoundtripReport roundtrip_suite(const RingPtr& ring, const std::vector<Elem>& parts, Rng& rng,
                                std::size_t samples);

/// Families built by spreading a random global element and perturbing every
/// representation r/f^n -> r*f/f^(n+1) a few times: gluing must reproduce an
/// element whose restrictions match the perturbed inputs.
SuiteReport perturbed_roundtrip_suite(const RingPtr& ring, const std::vector<Elem>& parts,
                                      Rng& rng, std::size_t samples);

/// Pullback behavior over D(h) = D(f) v D(g): constructed compatible pairs
/// must glue uniquely and restrict back; constructed incompatible pairs must
/// be rejected.
struct SheafSuiteReport {
    std::size_t compatible_checked = 0;
    std::size_t incompatible_checked = 0;
    std::vector<std::string> failures;
    bool all_ok() const { return failures.empty(); }
};
SheafSuiteReport sheaf_suite(const Elem& h, const Elem& f, const Elem& g, Rng& rng,
                             std::size_t n_compatible, std::size_t n_incompatible);

} // namespace zarlat
