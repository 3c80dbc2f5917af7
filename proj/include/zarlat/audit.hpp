#pragma once

#include <cstdint>

namespace zarlat::audit {

// Every certificate the library emits (radical certificates, Bezout-style
// coefficient sequences, annihilator-power witnesses) is re-verified by exact
// arithmetic at the point of emission. These counters record how many were
// emitted and how many re-checked; a mismatch means an InternalError was
// thrown somewhere. Counters are atomic, safe under concurrent use.
struct Stats {
    std::uint64_t radical_emitted = 0;
    std::uint64_t radical_verified = 0;
    std::uint64_t bezout_emitted = 0;
    std::uint64_t bezout_verified = 0;
    std::uint64_t ann_power_emitted = 0;
    std::uint64_t ann_power_verified = 0;
};

enum class CertKind { radical, bezout, ann_power };

void record(CertKind kind, bool verified);
Stats stats();
void reset();

} // namespace zarlat::audit
