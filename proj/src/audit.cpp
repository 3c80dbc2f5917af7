#include "zarlat/audit.hpp"

#include <atomic>

namespace zarlat::audit {

namespace {

struct Counters {
    std::atomic<std::uint64_t> radical_emitted{0};
    std::atomic<std::uint64_t> radical_verified{0};
    std::atomic<std::uint64_t> bezout_emitted{0};
    std::atomic<std::uint64_t> bezout_verified{0};
    std::atomic<std::uint64_t> ann_emitted{0};
    std::atomic<std::uint64_t> ann_verified{0};
};

Counters& counters() {
    static Counters c;
    return c;
}

} // namespace

void record(CertKind kind, bool verified) {
    auto& c = counters();
    switch (kind) {
        case CertKind::radical:
            c.radical_emitted++;
            if (verified) c.radical_verified++;
            break;
        case CertKind::bezout:
            c.bezout_emitted++;
            if (verified) c.bezout_verified++;
            break;
        case CertKind::ann_power:
            c.ann_emitted++;
            if (verified) c.ann_verified++;
            break;
    }
}

Stats stats() {
    auto& c = counters();
    return Stats{c.radical_emitted.load(),  c.radical_verified.load(), c.bezout_emitted.load(),
                 c.bezout_verified.load(),  c.ann_emitted.load(),      c.ann_verified.load()};
}

void reset() {
    auto& c = counters();
    c.radical_emitted = c.radical_verified = 0;
    c.bezout_emitted = c.bezout_verified = 0;
    c.ann_emitted = c.ann_verified = 0;
}

} // namespace zarlat::audit
