#include "zarlat/random.hpp"

#include "internal.hpp"

namespace zarlat {

namespace {

long draw(Rng& rng, long lo, long hi) { // inclusive bounds
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

mpq_class small_rational(Rng& rng) {
    mpq_class q(draw(rng, -10, 10), draw(rng, 1, 4));
    q.canonicalize();
    return q;
}

} // namespace

Elem random_elem(Rng& rng, const RingPtr& ring, int size) {
    if (size < 1) size = 1;
    switch (ring->kind()) {
        case Ring::Kind::integers: {
            long b = 20L * size;
            return Elem::from_int(ring, draw(rng, -b, b));
        }
        case Ring::Kind::modular: {
            mpz_class v = ring->modulus() > 1000000 ? mpz_class(rng() % 1000000)
                                                    : mpz_class(rng()) % ring->modulus();
            return Elem::from_int(ring, v);
        }
        case Ring::Kind::uni_poly: {
            long deg = draw(rng, 0, size);
            UniPoly p(static_cast<std::size_t>(deg) + 1);
            for (auto& c : p) c = small_rational(rng);
            detail::uni_trim(p);
            return Elem::from_uni(ring, std::move(p));
        }
        case Ring::Kind::multi_poly: {
            long terms = draw(rng, 1, size + 1);
            MultiPoly p;
            for (long t = 0; t < terms; ++t) {
                Monomial m(ring->var_count());
                for (auto& e : m) e = static_cast<std::uint32_t>(draw(rng, 0, 2));
                mpq_class c = small_rational(rng);
                if (c == 0) continue;
                auto it = p.find(m);
                if (it == p.end()) p.emplace(std::move(m), std::move(c));
                else {
                    it->second += c;
                    if (it->second == 0) p.erase(it);
                }
            }
            return Elem::from_multi(ring, std::move(p));
        }
    }
    throw InternalError("unreachable");
}

Elem random_nonzero(Rng& rng, const RingPtr& ring, int size) {
    for (int tries = 0; tries < 64; ++tries) {
        Elem e = random_elem(rng, ring, size);
        if (!e.is_zero()) return e;
    }
    return one(ring);
}

} // namespace zarlat
