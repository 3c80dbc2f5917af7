#include "zarlat/localization.hpp"

#include <sstream>

#include "internal.hpp"

namespace zarlat {

// --- rings --------------------------------------------------------------------

LocRingPtr LocRing::at(Elem f) {
    auto lr = std::make_shared<LocRing>();
    lr->zero_ring = ann_power(f, one(f.ring())).has_value();
    lr->den = std::move(f);
    return lr;
}

LocRingPtr LocRing::trivial(const RingPtr& ring) { return at(one(ring)); }

std::string LocRing::name() const { return base()->name() + "[1/" + to_string(den) + "]"; }

bool same_loc_ring(const LocRing& a, const LocRing& b) {
    return *a.base() == *b.base() && a.den == b.den;
}

namespace {

void require_same_loc(const LocElem& a, const LocElem& b, const char* where) {
    if (!same_loc_ring(*a.loc, *b.loc))
        throw UsageError(std::string(where) + ": mixed localizations " + a.loc->name() + " and " +
                         b.loc->name());
}

} // namespace

// --- elements -----------------------------------------------------------------

LocElem loc_from_base(const LocRingPtr& loc, const Elem& r) {
    require_same_ring(r, loc->den, "loc_from_base");
    return {loc, r, 0};
}

LocElem loc_zero(const LocRingPtr& loc) { return {loc, zero(loc->base()), 0}; }
LocElem loc_one(const LocRingPtr& loc) { return {loc, one(loc->base()), 0}; }

std::optional<AnnPowerWitness> loc_eq(const LocElem& a, const LocElem& b) {
    require_same_loc(a, b, "loc_eq");
    const Elem& f = a.loc->den;
    Elem cross = sub(mul(pow(f, b.exp), a.num), mul(pow(f, a.exp), b.num));
    return ann_power(f, cross);
}

LocElem loc_add(const LocElem& a, const LocElem& b) {
    require_same_loc(a, b, "loc_add");
    const Elem& f = a.loc->den;
    std::uint32_t p = std::max(a.exp, b.exp);
    Elem num = add(mul(a.num, pow(f, p - a.exp)), mul(b.num, pow(f, p - b.exp)));
    return {a.loc, std::move(num), p};
}

LocElem loc_neg(const LocElem& a) { return {a.loc, neg(a.num), a.exp}; }

LocElem loc_sub(const LocElem& a, const LocElem& b) { return loc_add(a, loc_neg(b)); }

LocElem loc_mul(const LocElem& a, const LocElem& b) {
    require_same_loc(a, b, "loc_mul");
    return {a.loc, mul(a.num, b.num), a.exp + b.exp};
}

LocElem loc_pow(const LocElem& a, std::uint64_t n) {
    return {a.loc, pow(a.num, n), static_cast<std::uint32_t>(a.exp * n)};
}

std::optional<LocElem> loc_is_unit(const LocElem& a) {
    // r/f^n is a unit iff some f^k = c*r; the inverse is then c*f^n / f^k
    auto cert = radical_membership(a.loc->den, {a.num});
    if (!cert) return std::nullopt;
    LocElem inv{a.loc, mul(cert->coeffs[0], pow(a.loc->den, a.exp)), cert->k};
    if (!loc_eq(loc_mul(a, inv), loc_one(a.loc)))
        throw InternalError("loc_is_unit: certified inverse failed a*inv = 1");
    return inv;
}

// --- homomorphisms --------------------------------------------------------------

LocHom make_loc_hom(LocRingPtr source, LocRingPtr target, std::uint32_t k, Elem c) {
    if (!(*source->base() == *target->base()))
        throw UsageError("loc hom: source and target over different base rings");
    if (k < 1) throw UsageError("loc hom: certificate exponent must be >= 1");
    if (!(pow(target->den, k) == mul(c, source->den)))
        throw UsageError("loc hom: certificate g^k = c*f does not hold for k=" +
                         std::to_string(k) + ", c=" + to_string(c));
    return LocHom{std::move(source), std::move(target), k, std::move(c)};
}

LocElem apply_hom(const LocHom& h, const LocElem& a) {
    if (!same_loc_ring(*a.loc, *h.source))
        throw UsageError("apply_hom: element lives in " + a.loc->name() + ", hom expects " +
                         h.source->name());
    return {h.target, mul(a.num, pow(h.c, a.exp)), h.k * a.exp};
}

std::optional<LocHom> restriction_hom(const Elem& f, const Elem& g) {
    auto cert = radical_membership(g, {f});
    if (!cert) return std::nullopt;
    return make_loc_hom(LocRing::at(f), LocRing::at(g), cert->k, cert->coeffs[0]);
}

// --- iterated localization -------------------------------------------------------

Loc2RingPtr Loc2Ring::at(LocRingPtr inner, Elem g) {
    require_same_ring(g, inner->den, "Loc2Ring::at");
    auto lr = std::make_shared<Loc2Ring>();
    lr->inner = std::move(inner);
    lr->outer = std::move(g);
    return lr;
}

std::string Loc2Ring::name() const { return inner->name() + "[1/" + to_string(outer) + "]"; }

namespace {

bool same_loc2_ring(const Loc2Ring& a, const Loc2Ring& b) {
    return same_loc_ring(*a.inner, *b.inner) && a.outer == b.outer;
}

void require_same_loc2(const Loc2Elem& a, const Loc2Elem& b, const char* where) {
    if (!same_loc2_ring(*a.loc, *b.loc))
        throw UsageError(std::string(where) + ": mixed localizations " + a.loc->name() + " and " +
                         b.loc->name());
}

} // namespace

Loc2Elem loc2_from_base(const Loc2RingPtr& loc, const Elem& r) {
    require_same_ring(r, loc->outer, "loc2_from_base");
    return {loc, r, 0, 0};
}

Loc2Elem loc2_one(const Loc2RingPtr& loc) { return loc2_from_base(loc, one(loc->outer.ring())); }

std::optional<AnnPowerWitness> loc2_eq(const Loc2Elem& a, const Loc2Elem& b) {
    require_same_loc2(a, b, "loc2_eq");
    const Elem& f = a.loc->inner->den;
    const Elem& g = a.loc->outer;
    // (r/f^n)/g^m = (r'/f^n')/g^m'  iff  (fg)^K kills the cross difference
    // g^m' * r * f^n' - g^m * r' * f^n for some K
    Elem cross = sub(mul(mul(pow(g, b.outer_exp), a.num), pow(f, b.inner_exp)),
                     mul(mul(pow(g, a.outer_exp), b.num), pow(f, a.inner_exp)));
    return ann_power(mul(f, g), cross);
}

Loc2Elem loc2_add(const Loc2Elem& a, const Loc2Elem& b) {
    require_same_loc2(a, b, "loc2_add");
    const Elem& f = a.loc->inner->den;
    const Elem& g = a.loc->outer;
    std::uint32_t n = std::max(a.inner_exp, b.inner_exp);
    std::uint32_t m = std::max(a.outer_exp, b.outer_exp);
    Elem num = add(mul(a.num, mul(pow(f, n - a.inner_exp), pow(g, m - a.outer_exp))),
                   mul(b.num, mul(pow(f, n - b.inner_exp), pow(g, m - b.outer_exp))));
    return {a.loc, std::move(num), n, m};
}

Loc2Elem loc2_mul(const Loc2Elem& a, const Loc2Elem& b) {
    require_same_loc2(a, b, "loc2_mul");
    return {a.loc, mul(a.num, b.num), a.inner_exp + b.inner_exp, a.outer_exp + b.outer_exp};
}

Loc2Elem loc2_neg(const Loc2Elem& a) { return {a.loc, neg(a.num), a.inner_exp, a.outer_exp}; }

// --- isomorphisms ---------------------------------------------------------------

LocElem IteratedLocIso::collapse(const Loc2Elem& a) const {
    if (!same_loc2_ring(*a.loc, *iterated))
        throw UsageError("collapse: element not in " + iterated->name());
    const Elem& f = iterated->inner->den;
    const Elem& g = iterated->outer;
    Elem num = mul(a.num, mul(pow(f, a.outer_exp), pow(g, a.inner_exp)));
    return {product, std::move(num), a.inner_exp + a.outer_exp};
}

Loc2Elem IteratedLocIso::expand(const LocElem& a) const {
    if (!same_loc_ring(*a.loc, *product))
        throw UsageError("expand: element not in " + product->name());
    return {iterated, a.num, a.exp, a.exp};
}

IteratedLocIso iterated_loc_iso(const Elem& f, const Elem& g) {
    require_same_ring(f, g, "iterated_loc_iso");
    IteratedLocIso iso;
    iso.iterated = Loc2Ring::at(LocRing::at(f), g);
    iso.product = LocRing::at(mul(f, g));
    return iso;
}

Elem UnitLocIso::to_base(const LocElem& a) const {
    if (!same_loc_ring(*a.loc, *loc)) throw UsageError("to_base: element not in " + loc->name());
    return mul(a.num, pow(inverse, a.exp));
}

LocElem UnitLocIso::from_base(const Elem& r) const { return loc_from_base(loc, r); }

UnitLocIso unit_loc_iso(const Elem& f) {
    auto inv = is_unit(f);
    if (!inv)
        throw UsageError("unit_loc_iso: " + to_string(f) + " is not a unit in " +
                         f.ring()->name());
    return UnitLocIso{LocRing::at(f), *inv};
}

MutualLocIso mutual_loc_iso(const Elem& f, const Elem& g) {
    auto fwd = restriction_hom(f, g);
    if (!fwd)
        throw UsageError("mutual_loc_iso: missing certificate g^k = c*f for g=" + to_string(g) +
                         ", f=" + to_string(f));
    auto bwd = restriction_hom(g, f);
    if (!bwd)
        throw UsageError("mutual_loc_iso: missing certificate f^l = d*g for f=" + to_string(f) +
                         ", g=" + to_string(g));
    return MutualLocIso{std::move(*fwd), std::move(*bwd)};
}

// --- printing --------------------------------------------------------------------

namespace {

std::string wrap(const std::string& s) {
    return s.find_first_of("+- ") == std::string::npos ? s : "(" + s + ")";
}

std::string frac_str(const Elem& num, const Elem& den, std::uint32_t exp) {
    if (exp == 0 || den.is_one()) return to_string(num);
    std::string s = wrap(to_string(num)) + "/" + wrap(to_string(den));
    if (exp > 1) s += "^" + std::to_string(exp);
    return s;
}

} // namespace

std::string to_string(const LocElem& a) { return frac_str(a.num, a.loc->den, a.exp); }

std::string to_string(const Loc2Elem& a) {
    std::string s = frac_str(a.num, a.loc->inner->den, a.inner_exp);
    if (a.outer_exp == 0) return s;
    std::string t = wrap(s) + "/" + wrap(to_string(a.loc->outer));
    if (a.outer_exp > 1) t += "^" + std::to_string(a.outer_exp);
    return t;
}

// --- localization-axioms check ------------------------------------------------------

bool LocCheckReport::all_ok() const {
    if (!unit_of_f.ok) return false;
    for (const auto& c : kernel)
        if (!c.ok) return false;
    for (const auto& c : fractions)
        if (!c.ok) return false;
    return true;
}

std::string LocCheckReport::summary() const {
    std::ostringstream os;
    os << "(i) unit: " << (unit_of_f.ok ? "ok" : "FAIL") << " -- " << unit_of_f.detail << "\n";
    for (const auto& c : kernel)
        os << "(ii) kernel: " << (c.ok ? "ok" : "FAIL") << " -- " << c.detail << "\n";
    for (const auto& c : fractions)
        os << "(iii) fraction: " << (c.ok ? "ok" : "FAIL") << " -- " << c.detail << "\n";
    return os.str();
}

namespace {

template <class T>
LocCheckReport check_impl(const LocCandidate<T>& cand, const std::vector<Elem>& base_samples,
                          const std::vector<T>& target_samples) {
    LocCheckReport rep;
    const Elem& f = cand.source->den;

    T phif = cand.phi(f);
    auto inv = cand.invert(phif);
    rep.unit_of_f.ok = inv.has_value();
    rep.unit_of_f.detail =
        inv ? "phi(" + to_string(f) + ") has inverse " + cand.show(*inv)
            : "phi(" + to_string(f) + ") = " + cand.show(phif) + " is not a unit in the target";

    for (const auto& r : base_samples) {
        if (!cand.eq(cand.phi(r), cand.zero)) continue; // only zero images constrain the kernel
        LocCheckReport::Clause cl;
        auto w = ann_power(f, r);
        cl.ok = w.has_value();
        cl.detail = "phi(" + to_string(r) + ") = 0; " +
                    (w ? "annihilated by f^" + std::to_string(w->k)
                       : "no power of f annihilates it");
        rep.kernel.push_back(std::move(cl));
    }

    std::size_t idx = 0;
    for (const auto& t : target_samples) {
        ++idx;
        LocCheckReport::Clause cl;
        if (!inv) {
            cl.ok = false;
            cl.detail = "sample " + std::to_string(idx) + ": phi(f) has no inverse, " +
                        cand.show(t) + " admits no fraction form";
        } else if (auto ff = cand.fraction_form(t)) {
            T rhs = cand.phi(ff->first);
            for (std::uint32_t i = 0; i < ff->second; ++i) rhs = cand.mul(rhs, *inv);
            cl.ok = cand.eq(t, rhs);
            cl.detail = "sample " + std::to_string(idx) + ": " + cand.show(t) + " ~ phi(" +
                        to_string(ff->first) + ")*phi(" + to_string(f) + ")^-" +
                        std::to_string(ff->second) + (cl.ok ? "" : " FAILED verification");
        } else {
            cl.ok = false;
            cl.detail = "sample " + std::to_string(idx) + ": no fraction form found for " +
                        cand.show(t);
        }
        rep.fractions.push_back(std::move(cl));
    }
    return rep;
}

} // namespace

LocCheckReport localization_conditions_check(const LocCandidate<LocElem>& cand,
                                             const std::vector<Elem>& base_samples,
                                             const std::vector<LocElem>& target_samples) {
    return check_impl(cand, base_samples, target_samples);
}

LocCheckReport localization_conditions_check(const LocCandidate<Loc2Elem>& cand,
                                             const std::vector<Elem>& base_samples,
                                             const std::vector<Loc2Elem>& target_samples) {
    return check_impl(cand, base_samples, target_samples);
}

LocCandidate<LocElem> candidate_from_hom(const LocHom& h) {
    LocCandidate<LocElem> cand;
    cand.source = h.source;
    LocRingPtr target = h.target;
    cand.phi = [target](const Elem& r) { return loc_from_base(target, r); };
    cand.eq = [](const LocElem& a, const LocElem& b) { return loc_eq(a, b).has_value(); };
    cand.mul = [](const LocElem& a, const LocElem& b) { return loc_mul(a, b); };
    cand.invert = [](const LocElem& a) { return loc_is_unit(a); };
    cand.one = loc_one(target);
    cand.zero = loc_zero(target);
    cand.show = [](const LocElem& a) { return to_string(a); };
    // fraction forms exist when the denominators certify against each other
    // both ways; f^l = d*g turns s/g^m into phi(s*d^m) * phi(f)^-(l*m)
    auto mutual = radical_membership(h.source->den, {h.target->den});
    cand.fraction_form =
        [mutual](const LocElem& t) -> std::optional<std::pair<Elem, std::uint32_t>> {
        if (!mutual) return std::nullopt;
        Elem r = mul(t.num, pow(mutual->coeffs[0], t.exp));
        return std::make_pair(std::move(r), mutual->k * t.exp);
    };
    return cand;
}

LocCandidate<Loc2Elem> candidate_from_iterated(const IteratedLocIso& iso) {
    LocCandidate<Loc2Elem> cand;
    cand.source = iso.product;
    Loc2RingPtr target = iso.iterated;
    cand.phi = [target](const Elem& r) { return loc2_from_base(target, r); };
    cand.eq = [](const Loc2Elem& a, const Loc2Elem& b) { return loc2_eq(a, b).has_value(); };
    cand.mul = [](const Loc2Elem& a, const Loc2Elem& b) { return loc2_mul(a, b); };
    IteratedLocIso iso_copy = iso;
    cand.invert = [iso_copy](const Loc2Elem& a) -> std::optional<Loc2Elem> {
        // invert through the product ring and carry the inverse back
        auto inv = loc_is_unit(iso_copy.collapse(a));
        if (!inv) return std::nullopt;
        Loc2Elem candidate = iso_copy.expand(*inv);
        if (!loc2_eq(loc2_mul(a, candidate), loc2_one(iso_copy.iterated)))
            throw InternalError("iterated inverse failed a*inv = 1");
        return candidate;
    };
    cand.one = loc2_one(target);
    cand.zero = loc2_from_base(target, zero(target->outer.ring()));
    cand.show = [](const Loc2Elem& a) { return to_string(a); };
    Elem f = iso.iterated->inner->den;
    Elem g = iso.iterated->outer;
    cand.fraction_form =
        [f, g](const Loc2Elem& t) -> std::optional<std::pair<Elem, std::uint32_t>> {
        std::uint32_t p = std::max(t.inner_exp, t.outer_exp);
        Elem r = mul(t.num, mul(pow(f, p - t.inner_exp), pow(g, p - t.outer_exp)));
        return std::make_pair(std::move(r), p);
    };
    return cand;
}

} // namespace zarlat
