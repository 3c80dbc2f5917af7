#include <utility>

#include "internal.hpp"
#include "zarlat/groebner.hpp"
#include "zarlat/ring.hpp"

namespace zarlat {

namespace detail {

Xgcd xgcd(const Elem& a, const Elem& b) {
    require_same_ring(a, b, "xgcd");
    switch (a.ring()->kind()) {
        case Ring::Kind::integers: {
            mpz_class g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.int_value().get_mpz_t(),
                       b.int_value().get_mpz_t());
            return {Elem::from_int(a.ring(), g), Elem::from_int(a.ring(), u),
                    Elem::from_int(a.ring(), v)};
        }
        case Ring::Kind::uni_poly: {
            UniPoly r0 = a.uni_value(), r1 = b.uni_value();
            UniPoly s0 = {mpq_class(1)}, s1 = {};
            UniPoly t0 = {}, t1 = {mpq_class(1)};
            while (!uni_is_zero(r1)) {
                auto [q, r] = uni_divmod(r0, r1);
                r0 = std::move(r1);
                r1 = std::move(r);
                UniPoly s2 = uni_add(s0, uni_neg(uni_mul(q, s1)));
                s0 = std::move(s1);
                s1 = std::move(s2);
                UniPoly t2 = uni_add(t0, uni_neg(uni_mul(q, t1)));
                t0 = std::move(t1);
                t1 = std::move(t2);
            }
            if (!uni_is_zero(r0)) {
                mpq_class inv = 1 / r0.back();
                r0 = uni_scale(r0, inv);
                s0 = uni_scale(s0, inv);
                t0 = uni_scale(t0, inv);
            }
            return {Elem::from_uni(a.ring(), r0), Elem::from_uni(a.ring(), s0),
                    Elem::from_uni(a.ring(), t0)};
        }
        default: throw UsageError("xgcd not available in " + a.ring()->name());
    }
}

} // namespace detail

namespace {

// Iterated extended gcd over a list: returns (g, coeffs) with
// sum coeffs[i]*items[i] = g, g normalized (nonnegative / monic).
std::pair<Elem, std::vector<Elem>> gcd_combination(const RingPtr& ring,
                                                   const std::vector<Elem>& items) {
    Elem g = zero(ring);
    std::vector<Elem> coeffs;
    for (const auto& item : items) {
        detail::Xgcd step = detail::xgcd(g, item);
        for (auto& c : coeffs) c = mul(c, step.u);
        coeffs.push_back(step.v);
        g = std::move(step.g);
    }
    return {std::move(g), std::move(coeffs)};
}

} // namespace

std::optional<std::vector<Elem>> ideal_membership(const Elem& x, const std::vector<Elem>& gens) {
    const RingPtr& ring = x.ring();
    require_same_ring(gens, ring, "ideal_membership");

    switch (ring->kind()) {
        case Ring::Kind::multi_poly: return mv_ideal_membership(x, gens);
        case Ring::Kind::integers:
        case Ring::Kind::uni_poly: {
            auto [g, coeffs] = gcd_combination(ring, gens);
            if (g.is_zero()) {
                if (!x.is_zero()) return std::nullopt;
                return detail::emit_coeffs(x, gens, std::vector<Elem>(gens.size(), zero(ring)));
            }
            auto q = exact_div(x, g);
            if (!q) return std::nullopt;
            for (auto& c : coeffs) c = mul(c, *q);
            return detail::emit_coeffs(x, gens, std::move(coeffs));
        }
        case Ring::Kind::modular: {
            // over integer representatives, with the modulus as an implicit
            // extra generator
            RingPtr z = Ring::integers();
            std::vector<Elem> lifted;
            lifted.reserve(gens.size() + 1);
            for (const auto& gen : gens) lifted.push_back(Elem::from_int(z, gen.int_value()));
            lifted.push_back(Elem::from_int(z, ring->modulus()));
            auto [g, zc] = gcd_combination(z, lifted);
            auto q = exact_div(Elem::from_int(z, x.int_value()), g);
            if (!q) return std::nullopt;
            std::vector<Elem> coeffs;
            coeffs.reserve(gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i)
                coeffs.push_back(Elem::from_int(ring, mul(zc[i], *q).int_value()));
            return detail::emit_coeffs(x, gens, std::move(coeffs));
        }
    }
    throw InternalError("unreachable");
}

std::optional<BezoutCert> unit_ideal_cert(const std::vector<Elem>& gens) {
    if (gens.empty()) return std::nullopt;
    auto coeffs = ideal_membership(one(gens[0].ring()), gens);
    if (!coeffs) return std::nullopt;
    return BezoutCert{std::move(*coeffs)};
}

namespace {

// The principal-ring radical test: reduce the ideal to its gcd g, then
// repeatedly strip common factors of g and x. Membership holds exactly when
// the factor-free residual is a unit.
bool radical_member_principal(const Elem& x, const std::vector<Elem>& gens) {
    const RingPtr& ring = x.ring();
    RingPtr work = ring->kind() == Ring::Kind::modular ? Ring::integers() : ring;

    std::vector<Elem> items;
    for (const auto& gen : gens)
        items.push_back(ring->kind() == Ring::Kind::modular ? Elem::from_int(work, gen.int_value())
                                                            : gen);
    if (ring->kind() == Ring::Kind::modular) items.push_back(Elem::from_int(work, ring->modulus()));

    Elem g = zero(work);
    for (const auto& item : items) g = gcd_elem(g, item);
    Elem xw = ring->kind() == Ring::Kind::modular ? Elem::from_int(work, x.int_value()) : x;

    if (g.is_zero()) return xw.is_zero();
    while (true) {
        Elem d = gcd_elem(g, xw);
        if (d.is_one()) break;
        g = *exact_div(g, d); // d divides g by construction
    }
    return g.is_one();
}

} // namespace

std::optional<RadicalCert> radical_membership(const Elem& x, const std::vector<Elem>& gens) {
    const RingPtr& ring = x.ring();
    require_same_ring(gens, ring, "radical_membership");
    if (ring->kind() == Ring::Kind::multi_poly) return mv_radical_membership(x, gens);

    if (x.is_zero())
        return detail::emit_radical(x, gens,
                                    RadicalCert{1, std::vector<Elem>(gens.size(), zero(ring))});
    if (!radical_member_principal(x, gens)) return std::nullopt;

    // membership is confirmed; find the minimal exponent
    constexpr std::uint32_t kExponentCap = 64;
    Elem xp = one(ring);
    for (std::uint32_t k = 1; k <= kExponentCap; ++k) {
        xp = mul(xp, x);
        if (auto coeffs = ideal_membership(xp, gens))
            return detail::emit_radical(x, gens, RadicalCert{k, std::move(*coeffs)});
    }
    throw InternalError("radical exponent exceeded the safety cap after membership was confirmed");
}

} // namespace zarlat
