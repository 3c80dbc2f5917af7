#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zarlat/cover.hpp"

namespace zarlat {

/// A section of the structure sheaf over an arbitrary lattice element,
/// represented by a certified cover together with a compatible family of
/// localization elements, one per basic piece. Sections over the same
/// element given by different covers are compared through the common
/// refinement (section_eq).
struct SheafSection {
    LatticeElt over;
    CompatibleFamily family;
};

/// Glue a compatible family over a cover of D(h) into a single element of
/// R[1/h]. Every step is certificate-verified:
///   (a) the cover certificate h^t = sum c_i f_i makes the f_i/1 generate
///       the unit ideal of R[1/h];
///   (b) sections are rewritten over the common denominator exponent d;
///   (c) the pairwise annihilator witnesses give N with
///       f_i^N f_j^N (a_i f_j^d - a_j f_i^d) = 0 exactly;
///   (d) with adjusted numerators a~_i = a_i f_i^N and D = d + N the cross
///       identities a~_i f_j^D = a~_j f_i^D hold exactly;
///   (e) a Bezout-style combination h^T = sum e_i f_i^D is found by radical
///       membership on the powered generators;
///   (f) the result (sum e_i a~_i) / h^T restricts back to every section
///       (checked in R[1/h*f_i]), and f_j^D * s = a~_j exactly, which forces
///       any two glues to agree.
/// Precondition failures (invalid cover / incompatible family) raise
/// UsageError; a failed post-verification raises InternalError.
LocElem glue(const Elem& h, const CompatibleFamily& fam);

/// Same algorithm with the powered Bezout combination computed over the
/// reversed generator order; used by uniqueness checks, which compare the
/// two results with loc_eq.
LocElem glue_permuted(const Elem& h, const CompatibleFamily& fam);

/// Restriction along D(g) <= D(f); raises UsageError with the failed radical
/// membership when the order does not hold.
LocElem restrict_basic(const LocElem& s, const Elem& g);

/// Restrict a section over x to y <= x, presented by the given cover of y:
/// each component over D(g_j) is glued from the restrictions of the original
/// components to the R[1/g_j*f_i]. The resulting family is re-checked.
SheafSection restrict_section(const SheafSection& sec, const LatticeElt& y,
                              const std::vector<Elem>& y_parts);

/// Cover-independent equality: restrict both sections to the common
/// refinement {f_i * g_j} and compare componentwise.
bool section_eq(const SheafSection& s, const SheafSection& t);

/// Evidence for O(top) = R over a given cover of the top element: every
/// sample r spreads to a compatible constant family, glues back to r in
/// R[1/1], and the glued element restricts to r/1 on every part.
struct RoundtripReport {
    std::size_t samples = 0;
    std::vector<std::string> failures;
    bool all_ok() const { return failures.empty(); }
};

RoundtripReport global_sections_roundtrip(const RingPtr& ring, const std::vector<Elem>& parts,
                                          const std::vector<Elem>& samples);

} // namespace zarlat
