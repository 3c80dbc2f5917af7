#include "zarlat/cover.hpp"

#include "internal.hpp"

namespace zarlat {

// --- diagram shape --------------------------------------------------------------

DiagShape cover_diagram_shape(std::size_t n) {
    DiagShape d;
    d.n = n;
    for (std::size_t i = 1; i <= n; ++i) d.objects.push_back({i, 0, false});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) d.objects.push_back({i, j, true});

    for (std::size_t o = 0; o < d.objects.size(); ++o)
        d.arrows.push_back({o, o, DiagShape::Arrow::Kind::identity});
    for (std::size_t o = 0; o < d.objects.size(); ++o) {
        if (!d.objects[o].is_pair) continue;
        d.arrows.push_back(
            {d.sing_index(d.objects[o].i), o, DiagShape::Arrow::Kind::left});
        d.arrows.push_back(
            {d.sing_index(d.objects[o].j), o, DiagShape::Arrow::Kind::right});
    }
    return d;
}

std::size_t DiagShape::sing_index(std::size_t i) const {
    if (i < 1 || i > n) throw UsageError("sing_index out of range");
    return i - 1;
}

std::size_t DiagShape::pair_index(std::size_t i, std::size_t j) const {
    if (!(1 <= i && i < j && j <= n)) throw UsageError("pair_index needs 1 <= i < j <= n");
    for (std::size_t o = n; o < objects.size(); ++o)
        if (objects[o].is_pair && objects[o].i == i && objects[o].j == j) return o;
    throw InternalError("pair object missing");
}

std::optional<std::size_t> DiagShape::compose(std::size_t first, std::size_t then) const {
    const Arrow& a = arrows.at(first);
    const Arrow& b = arrows.at(then);
    if (a.dst != b.src) return std::nullopt;
    if (a.kind == Arrow::Kind::identity) return then;
    if (b.kind == Arrow::Kind::identity) return first;
    // non-identity arrows end in pair objects, which only identities leave
    return std::nullopt;
}

// --- covers ----------------------------------------------------------------------

bool Cover::verify() const {
    if (cert_down.size() != parts.size() || cert_up.size() != target.gens.size()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!check_radical_cert(parts[i], target.gens, cert_down[i])) return false;
    for (std::size_t j = 0; j < target.gens.size(); ++j)
        if (!check_radical_cert(target.gens[j], parts, cert_up[j])) return false;
    return true;
}

std::optional<Cover> cover_check(const LatticeElt& target, const std::vector<Elem>& parts) {
    require_same_ring(parts, target.ring, "cover_check");
    Cover c;
    c.target = target;
    c.parts = parts;
    for (const auto& p : parts) {
        auto down = radical_membership(p, target.gens);
        if (!down) return std::nullopt;
        c.cert_down.push_back(std::move(*down));
    }
    for (const auto& g : target.gens) {
        auto up = radical_membership(g, parts);
        if (!up) return std::nullopt;
        c.cert_up.push_back(std::move(*up));
    }
    return c;
}

LocHom restriction_to_product(const Elem& fi, const Elem& fj) {
    Elem p = mul(fi, fj);
    return make_loc_hom(LocRing::at(fi), LocRing::at(p), 1, fj);
}

bool CompatibleFamily::verify() const {
    if (!cover.verify()) return false;
    if (sections.size() != cover.parts.size()) return false;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (std::size_t j = i + 1; j < sections.size(); ++j) {
            if (idx >= agreements.size()) return false;
            LocElem ri = apply_hom(restriction_to_product(cover.parts[i], cover.parts[j]),
                                   sections[i]);
            LocElem rj = apply_hom(restriction_to_product(cover.parts[j], cover.parts[i]),
                                   sections[j]);
            // both legs land in R[1/fi*fj]; check the recorded witness
            const Elem& p = ri.loc->den;
            Elem cross = sub(mul(pow(p, rj.exp), ri.num), mul(pow(p, ri.exp), rj.num));
            if (!check_ann_power(p, cross, agreements[idx])) return false;
            ++idx;
        }
    return idx == agreements.size();
}

std::optional<CompatibleFamily> check_compatible(const Cover& cover,
                                                 const std::vector<LocElem>& sections) {
    if (sections.size() != cover.parts.size())
        throw UsageError("check_compatible: " + std::to_string(sections.size()) +
                         " sections for " + std::to_string(cover.parts.size()) + " cover parts");
    for (std::size_t i = 0; i < sections.size(); ++i)
        if (!(sections[i].loc->den == cover.parts[i]))
            throw UsageError("check_compatible: section " + std::to_string(i + 1) +
                             " lives in " + sections[i].loc->name() + ", expected R[1/" +
                             to_string(cover.parts[i]) + "]");

    CompatibleFamily fam;
    fam.cover = cover;
    fam.sections = sections;
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (std::size_t j = i + 1; j < sections.size(); ++j) {
            LocElem ri =
                apply_hom(restriction_to_product(cover.parts[i], cover.parts[j]), sections[i]);
            LocElem rj =
                apply_hom(restriction_to_product(cover.parts[j], cover.parts[i]), sections[j]);
            auto w = loc_eq(ri, rj);
            if (!w) return std::nullopt;
            fam.agreements.push_back(*w);
        }
    return fam;
}

CompatibleFamily constant_family(const Cover& cover, const Elem& r) {
    std::vector<LocElem> sections;
    sections.reserve(cover.parts.size());
    for (const auto& p : cover.parts) sections.push_back(loc_from_base(LocRing::at(p), r));
    auto fam = check_compatible(cover, sections);
    if (!fam) throw InternalError("constant family failed its own compatibility check");
    return std::move(*fam);
}

} // namespace zarlat
