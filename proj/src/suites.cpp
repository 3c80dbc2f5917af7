#include "zarlat/suites.hpp"

#include "internal.hpp"

namespace zarlat {

SupportReport support_suite(const RingPtr& ring, Rng& rng, std::size_t samples) {
    std::vector<std::pair<Elem, Elem>> pairs;
    pairs.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i)
        pairs.emplace_back(random_elem(rng, ring), random_elem(rng, ring));
    return support_check(ring, pairs);
}

namespace {

LocElem random_loc(Rng& rng, const LocRingPtr& loc, int size = 2) {
    return {loc, random_elem(rng, loc->base(), size),
            static_cast<std::uint32_t>(rng() % 3)};
}

} // namespace

SuiteReport iterated_iso_suite(const Elem& f, const Elem& g, Rng& rng, std::size_t samples) {
    SuiteReport rep;
    IteratedLocIso iso = iterated_loc_iso(f, g);
    for (std::size_t i = 0; i < samples; ++i) {
        ++rep.checked;
        Loc2Elem a{iso.iterated, random_elem(rng, f.ring()),
                   static_cast<std::uint32_t>(rng() % 3),
                   static_cast<std::uint32_t>(rng() % 3)};
        Loc2Elem b{iso.iterated, random_elem(rng, f.ring()),
                   static_cast<std::uint32_t>(rng() % 3),
                   static_cast<std::uint32_t>(rng() % 3)};
        LocElem x = random_loc(rng, iso.product);

        if (!loc2_eq(iso.expand(iso.collapse(a)), a))
            rep.failures.push_back("expand(collapse(a)) != a for a = " + to_string(a));
        if (!loc_eq(iso.collapse(iso.expand(x)), x))
            rep.failures.push_back("collapse(expand(x)) != x for x = " + to_string(x));
        if (!loc_eq(iso.collapse(loc2_add(a, b)), loc_add(iso.collapse(a), iso.collapse(b))))
            rep.failures.push_back("collapse does not preserve + at " + to_string(a));
        if (!loc_eq(iso.collapse(loc2_mul(a, b)), loc_mul(iso.collapse(a), iso.collapse(b))))
            rep.failures.push_back("collapse does not preserve * at " + to_string(a));
    }
    if (!loc_eq(iso.collapse(loc2_one(iso.iterated)), loc_one(iso.product)))
        rep.failures.push_back("collapse does not preserve 1");
    return rep;
}

SuiteReport unit_iso_suite(const Elem& f, Rng& rng, std::size_t samples) {
    SuiteReport rep;
    UnitLocIso iso = unit_loc_iso(f);
    for (std::size_t i = 0; i < samples; ++i) {
        ++rep.checked;
        LocElem a = random_loc(rng, iso.loc);
        LocElem b = random_loc(rng, iso.loc);
        Elem r = random_elem(rng, f.ring());

        if (!loc_eq(iso.from_base(iso.to_base(a)), a))
            rep.failures.push_back("from_base(to_base(a)) != a for a = " + to_string(a));
        if (!(iso.to_base(iso.from_base(r)) == r))
            rep.failures.push_back("to_base(from_base(r)) != r for r = " + to_string(r));
        if (!(iso.to_base(loc_add(a, b)) == add(iso.to_base(a), iso.to_base(b))))
            rep.failures.push_back("to_base does not preserve + at " + to_string(a));
        if (!(iso.to_base(loc_mul(a, b)) == mul(iso.to_base(a), iso.to_base(b))))
            rep.failures.push_back("to_base does not preserve * at " + to_string(a));
    }
    if (!iso.to_base(loc_one(iso.loc)).is_one()) rep.failures.push_back("to_base(1) != 1");
    return rep;
}

SuiteReport mutual_iso_suite(const Elem& f, const Elem& g, Rng& rng, std::size_t samples) {
    SuiteReport rep;
    MutualLocIso iso = mutual_loc_iso(f, g);
    for (std::size_t i = 0; i < samples; ++i) {
        ++rep.checked;
        LocElem a = random_loc(rng, iso.forward.source);
        LocElem a2 = random_loc(rng, iso.forward.source);
        LocElem b = random_loc(rng, iso.backward.source);

        if (!loc_eq(apply_hom(iso.backward, apply_hom(iso.forward, a)), a))
            rep.failures.push_back("backward(forward(a)) != a for a = " + to_string(a));
        if (!loc_eq(apply_hom(iso.forward, apply_hom(iso.backward, b)), b))
            rep.failures.push_back("forward(backward(b)) != b for b = " + to_string(b));
        if (!loc_eq(apply_hom(iso.forward, loc_add(a, a2)),
                    loc_add(apply_hom(iso.forward, a), apply_hom(iso.forward, a2))))
            rep.failures.push_back("forward does not preserve + at " + to_string(a));
        if (!loc_eq(apply_hom(iso.forward, loc_mul(a, a2)),
                    loc_mul(apply_hom(iso.forward, a), apply_hom(iso.forward, a2))))
            rep.failures.push_back("forward does not preserve * at " + to_string(a));
    }
    if (!loc_eq(apply_hom(iso.forward, loc_one(iso.forward.source)),
                loc_one(iso.forward.target)))
        rep.failures.push_back("forward does not preserve 1");
    return rep;
}

RoundtripReport roundtrip_suite(const RingPtr& ring, const std::vector<Elem>& parts, Rng& rng,
                                std::size_t samples) {
    std::vector<Elem> xs;
    xs.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) xs.push_back(random_elem(rng, ring, 5));
    return global_sections_roundtrip(ring, parts, xs);
}

SuiteReport perturbed_roundtrip_suite(const RingPtr& ring, const std::vector<Elem>& parts,
                                      Rng& rng, std::size_t samples) {
    SuiteReport rep;
    auto cover = cover_check(lat_top(ring), parts);
    if (!cover) throw UsageError("perturbed roundtrip: parts do not cover the top element");
    for (std::size_t s = 0; s < samples; ++s) {
        ++rep.checked;
        Elem r = random_elem(rng, ring, 4);
        std::vector<LocElem> sections;
        for (const auto& p : cover->parts) {
            // loc_eq-preserving rewrite r/1 -> r*p^e / p^e
            std::uint32_t e = static_cast<std::uint32_t>(rng() % 4);
            sections.push_back(LocElem{LocRing::at(p), mul(r, pow(p, e)), e});
        }
        auto fam = check_compatible(*cover, sections);
        if (!fam) {
            rep.failures.push_back("perturbed family of " + to_string(r) + " not compatible");
            continue;
        }
        LocElem glued = glue(one(ring), *fam);
        if (!loc_eq(glued, loc_from_base(LocRing::trivial(ring), r)))
            rep.failures.push_back("glue of perturbed family != " + to_string(r));
        for (std::size_t i = 0; i < cover->parts.size(); ++i)
            if (!loc_eq(restrict_basic(glued, cover->parts[i]), fam->sections[i]))
                rep.failures.push_back("restriction " + std::to_string(i + 1) +
                                       " does not reproduce the input for " + to_string(r));
    }
    return rep;
}

SheafSuiteReport sheaf_suite(const Elem& h, const Elem& f, const Elem& g, Rng& rng,
                             std::size_t n_compatible, std::size_t n_incompatible) {
    SheafSuiteReport rep;
    LocRingPtr at_h = LocRing::at(h);
    std::vector<std::pair<LocElem, LocElem>> pairs;

    auto spread_pair = [&](const LocElem& s) {
        LocElem a = restrict_basic(s, f);
        LocElem b = restrict_basic(s, g);
        // perturb the representations without changing the elements
        std::uint32_t ea = static_cast<std::uint32_t>(rng() % 3);
        std::uint32_t eb = static_cast<std::uint32_t>(rng() % 3);
        a = LocElem{a.loc, mul(a.num, pow(f, ea)), a.exp + ea};
        b = LocElem{b.loc, mul(b.num, pow(g, eb)), b.exp + eb};
        return std::make_pair(a, b);
    };

    for (std::size_t i = 0; i < n_compatible; ++i) {
        LocElem s{at_h, random_elem(rng, h.ring(), 3), static_cast<std::uint32_t>(rng() % 3)};
        pairs.push_back(spread_pair(s));
    }
    for (std::size_t i = 0; i < n_incompatible; ++i) {
        LocElem s{at_h, random_elem(rng, h.ring(), 3), static_cast<std::uint32_t>(rng() % 3)};
        auto [a, b] = spread_pair(s);
        // shifting one side by 1 breaks agreement whenever fg is not nilpotent
        pairs.emplace_back(a, loc_add(b, loc_one(b.loc)));
    }

    PullbackReport pb = pullback_instance_check(h, f, g, pairs);
    for (std::size_t i = 0; i < pb.cases.size(); ++i) {
        bool expect_compatible = i < n_compatible;
        const auto& c = pb.cases[i];
        if (expect_compatible) {
            ++rep.compatible_checked;
            if (!c.compatible)
                rep.failures.push_back("pair " + std::to_string(i + 1) +
                                       ": expected compatible, was rejected");
            else if (!c.glue_restricts_back)
                rep.failures.push_back("pair " + std::to_string(i + 1) +
                                       ": glue does not restrict back");
            else if (!c.glue_unique)
                rep.failures.push_back("pair " + std::to_string(i + 1) +
                                       ": permuted re-glue disagrees");
        } else {
            ++rep.incompatible_checked;
            if (c.compatible)
                rep.failures.push_back("pair " + std::to_string(i + 1) +
                                       ": expected incompatible, was accepted");
        }
    }
    if (!pb.terminal_ok) rep.failures.push_back("localization at 0 is not degenerate");
    return rep;
}

} // namespace zarlat
