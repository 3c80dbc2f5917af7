#include "zarlat/sheaf.hpp"

#include <algorithm>

#include "internal.hpp"

namespace zarlat {

namespace {

LocElem glue_impl(const Elem& h, const CompatibleFamily& fam, bool permute_bezout) {
    const RingPtr& ring = h.ring();
    if (fam.cover.target.gens.size() != 1 || !(fam.cover.target.gens[0] == h))
        throw UsageError("glue: family's cover is not a cover of D(" + to_string(h) + ")");
    if (!fam.cover.verify()) throw UsageError("glue: cover certificates do not re-verify");

    const std::vector<Elem>& parts = fam.cover.parts;
    std::size_t n = parts.size();

    // (b) common denominator exponent
    std::uint32_t d = 0;
    for (const auto& s : fam.sections) d = std::max(d, s.exp);
    std::vector<Elem> a;
    a.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        a.push_back(mul(fam.sections[i].num, pow(parts[i], d - fam.sections[i].exp)));

    // (c) pairwise annihilator exponents on the common-denominator forms
    std::uint32_t N = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Elem cross = sub(mul(a[i], pow(parts[j], d)), mul(a[j], pow(parts[i], d)));
            auto w = ann_power(mul(parts[i], parts[j]), cross);
            if (!w) throw UsageError("glue: family is not compatible at pair (" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            N = std::max(N, w->k);
        }

    // (d) adjusted numerators make the cross identities exact
    std::uint32_t D = d + N;
    std::vector<Elem> at;
    at.reserve(n);
    for (std::size_t i = 0; i < n; ++i) at.push_back(mul(a[i], pow(parts[i], N)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(mul(at[i], pow(parts[j], D)) == mul(at[j], pow(parts[i], D))))
                throw InternalError("glue: exact cross identity failed after adjustment");

    // (e) Bezout-style combination h^T = sum e_i * parts_i^D
    std::vector<Elem> powered;
    powered.reserve(n);
    for (const auto& p : parts) powered.push_back(pow(p, D));
    std::vector<Elem> query = powered;
    if (permute_bezout) std::reverse(query.begin(), query.end());
    auto rc = radical_membership(h, query);
    if (!rc) throw InternalError("glue: powered cover generators lost the radical certificate");
    std::vector<Elem> e = rc->coeffs;
    if (permute_bezout) std::reverse(e.begin(), e.end());

    // (f) assemble and post-verify
    Elem num = zero(ring);
    for (std::size_t i = 0; i < n; ++i) num = add(num, mul(e[i], at[i]));
    LocRingPtr target = LocRing::at(h);
    LocElem s{target, num, rc->k};

    Elem hT = pow(h, rc->k);
    for (std::size_t j = 0; j < n; ++j) {
        // separation: f_j^D * s = a~_j exactly, i.e.
        // sum_i e_i a~_i f_j^D = a~_j h^T in R
        Elem lhs = zero(ring);
        for (std::size_t i = 0; i < n; ++i)
            lhs = add(lhs, mul(e[i], mul(at[i], pow(parts[j], D))));
        if (!(lhs == mul(at[j], hT)))
            throw InternalError("glue: separation identity f^D*s = a~ failed");
        // the glued element restricts back to section j (checked in R[1/h*f_j])
        LocElem s_dn = apply_hom(restriction_to_product(h, parts[j]), s);
        LocElem sec_dn = apply_hom(restriction_to_product(parts[j], h), fam.sections[j]);
        if (!loc_eq(s_dn, sec_dn))
            throw InternalError("glue: result does not restrict back to section " +
                                std::to_string(j + 1));
    }
    return s;
}

} // namespace

LocElem glue(const Elem& h, const CompatibleFamily& fam) { return glue_impl(h, fam, false); }

LocElem glue_permuted(const Elem& h, const CompatibleFamily& fam) {
    return glue_impl(h, fam, true);
}

LocElem restrict_basic(const LocElem& s, const Elem& g) {
    auto hom = restriction_hom(s.loc->den, g);
    if (!hom)
        throw UsageError("restrict: D(" + to_string(g) + ") <= D(" + to_string(s.loc->den) +
                         ") fails: " + to_string(g) + " is not in sqrt<" +
                         to_string(s.loc->den) + ">");
    return apply_hom(*hom, s);
}

SheafSection restrict_section(const SheafSection& sec, const LatticeElt& y,
                              const std::vector<Elem>& y_parts) {
    if (!lat_leq(y, sec.over))
        throw UsageError("restrict_section: target is not below the section's element");
    auto y_cover = cover_check(y, y_parts);
    if (!y_cover) throw UsageError("restrict_section: parts do not cover the target element");

    const std::vector<Elem>& f = sec.family.cover.parts;
    std::vector<LocElem> components;
    components.reserve(y_parts.size());
    for (const auto& g : y_parts) {
        // D(g) <= join of D(f_i), so the products g*f_i cover D(g)
        std::vector<Elem> sub_parts;
        sub_parts.reserve(f.size());
        for (const auto& fi : f) sub_parts.push_back(mul(g, fi));
        auto sub_cover = cover_check(basic_open(g), sub_parts);
        if (!sub_cover)
            throw InternalError("restrict_section: composite cover lost its certificates");
        std::vector<LocElem> restricted;
        restricted.reserve(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            restricted.push_back(apply_hom(restriction_to_product(f[i], g), sec.family.sections[i]));
        auto sub_fam = check_compatible(*sub_cover, restricted);
        if (!sub_fam)
            throw InternalError("restrict_section: restricted family lost compatibility");
        components.push_back(glue(g, *sub_fam));
    }

    auto fam = check_compatible(*y_cover, components);
    if (!fam) throw InternalError("restrict_section: glued components are not compatible");
    return SheafSection{y, std::move(*fam)};
}

bool section_eq(const SheafSection& s, const SheafSection& t) {
    if (!lat_eq(s.over, t.over))
        throw UsageError("section_eq: sections live over different lattice elements");
    const auto& fs = s.family.cover.parts;
    const auto& gs = t.family.cover.parts;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < gs.size(); ++j) {
            Elem p = mul(fs[i], gs[j]);
            LocElem a = apply_hom(make_loc_hom(LocRing::at(fs[i]), LocRing::at(p), 1, gs[j]),
                                  s.family.sections[i]);
            LocElem b = apply_hom(make_loc_hom(LocRing::at(gs[j]), LocRing::at(p), 1, fs[i]),
                                  t.family.sections[j]);
            if (!loc_eq(a, b)) return false;
        }
    return true;
}

RoundtripReport global_sections_roundtrip(const RingPtr& ring, const std::vector<Elem>& parts,
                                          const std::vector<Elem>& samples) {
    auto cover = cover_check(lat_top(ring), parts);
    if (!cover) throw UsageError("global_sections_roundtrip: parts do not cover the top element");
    RoundtripReport rep;
    LocRingPtr total = LocRing::trivial(ring);
    for (const auto& r : samples) {
        ++rep.samples;
        auto fam = check_compatible(*cover, [&] {
            std::vector<LocElem> xs;
            for (const auto& p : cover->parts) xs.push_back(loc_from_base(LocRing::at(p), r));
            return xs;
        }());
        if (!fam) {
            rep.failures.push_back("constant family of " + to_string(r) + " not compatible");
            continue;
        }
        LocElem s = glue(one(ring), *fam);
        if (!loc_eq(s, loc_from_base(total, r))) {
            rep.failures.push_back("glue of constant family " + to_string(r) +
                                   " is not r/1 in R[1/1]");
            continue;
        }
        bool spread_ok = true;
        for (const auto& p : cover->parts) {
            LocElem back = restrict_basic(s, p);
            if (!loc_eq(back, loc_from_base(LocRing::at(p), r))) spread_ok = false;
        }
        if (!spread_ok)
            rep.failures.push_back("glued element of " + to_string(r) +
                                   " does not spread back to the family");
    }
    return rep;
}

PullbackReport pullback_instance_check(const Elem& h, const Elem& f, const Elem& g,
                                       const std::vector<std::pair<LocElem, LocElem>>& test_pairs) {
    auto cover = cover_check(basic_open(h), {f, g});
    if (!cover)
        throw UsageError("pullback_instance_check: D(" + to_string(h) + ") != D(" + to_string(f) +
                         ") v D(" + to_string(g) + ")");

    PullbackReport rep;
    for (const auto& [a, b] : test_pairs) {
        PullbackReport::Case c;
        auto fam = check_compatible(*cover, {a, b});
        c.compatible = fam.has_value();
        if (fam) {
            LocElem s = glue(h, *fam);
            LocElem ra = restrict_basic(s, f);
            LocElem rb = restrict_basic(s, g);
            c.glue_restricts_back = loc_eq(ra, a).has_value() && loc_eq(rb, b).has_value();
            LocElem s2 = glue_permuted(h, *fam);
            c.glue_unique = loc_eq(s, s2).has_value();
        }
        rep.cases.push_back(c);
    }

    // the localization at 0 is the zero ring: everything is equal there
    LocRingPtr at_zero = LocRing::at(zero(h.ring()));
    std::vector<LocElem> degenerate = {loc_zero(at_zero), loc_one(at_zero),
                                       loc_from_base(at_zero, h), loc_from_base(at_zero, f),
                                       LocElem{at_zero, g, 3}};
    rep.terminal_ok = true;
    for (const auto& x : degenerate)
        for (const auto& y : degenerate)
            if (!loc_eq(x, y)) rep.terminal_ok = false;
    return rep;
}

} // namespace zarlat
