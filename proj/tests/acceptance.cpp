// Acceptance suite: every check below is exact (zero tolerance); randomized
// parts run from fixed seeds. One line per criterion; exit 0 only if all
// pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zarlat/audit.hpp"
#include "zarlat/groebner.hpp"
#include "zarlat/job.hpp"
#include "zarlat/lattice.hpp"
#include "zarlat/localization.hpp"
#include "zarlat/parse.hpp"
#include "zarlat/random.hpp"
#include "zarlat/sheaf.hpp"
#include "zarlat/suites.hpp"

using namespace zarlat;

namespace {

const RingPtr Z = Ring::integers();
const RingPtr Z12 = Ring::modular(12);
const RingPtr QX = Ring::rational_poly("x");
const RingPtr RXY = Ring::rational_multi_poly({"x", "y"});

Elem zi(long v) { return Elem::from_int(Z, v); }
Elem zm(long v) { return Elem::from_int(Z12, v); }
Elem q(const char* text) { return parse_elem(text, QX); }
Elem m(const char* text) { return parse_elem(text, RXY); }

int failures = 0;

void report(int num, const std::string& name, bool ok, double secs) {
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", num, name.c_str(),
                secs);
    if (!ok) ++failures;
}

void criterion(int num, const std::string& name, double budget_secs,
               const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_secs > 0 && secs > budget_secs) {
        ok = false;
        note += " [over the " + std::to_string(static_cast<int>(budget_secs)) + "s budget]";
    }
    report(num, name + note, ok, secs);
}

// the lattice laws of criterion 7, on one random triple
bool lattice_laws_hold(const LatticeElt& a, const LatticeElt& b, const LatticeElt& c) {
    if (!lat_eq(lat_join(a, b), lat_join(b, a))) return false;
    if (!lat_eq(lat_meet(a, b), lat_meet(b, a))) return false;
    if (!lat_eq(lat_join(a, lat_join(b, c)), lat_join(lat_join(a, b), c))) return false;
    if (!lat_eq(lat_meet(a, lat_meet(b, c)), lat_meet(lat_meet(a, b), c))) return false;
    if (!lat_eq(lat_join(a, lat_meet(a, b)), a)) return false;
    if (!lat_eq(lat_meet(a, lat_join(a, b)), a)) return false;
    if (!lat_eq(lat_join(a, a), a) || !lat_eq(lat_meet(a, a), a)) return false;
    if (!lat_eq(lat_meet(a, lat_join(b, c)), lat_join(lat_meet(a, b), lat_meet(a, c))))
        return false;
    return true;
}

} // namespace

int main() {
    // 1. support axioms on 1000 seeded pairs per ring
    criterion(1, "support axioms hold on 1000 seeded pairs in Z, Z/12, Q[x]", 10.0, [] {
        for (auto ring : {Z, Z12, QX}) {
            Rng rng(101);
            SupportReport rep = support_suite(ring, rng, 1000);
            if (!rep.all_ok() || rep.pairs_checked != 1000) return false;
        }
        return true;
    });

    // 2. D(x) = D(x^2) with exponent 2, and 1/x = x/x^2 with witness 0
    criterion(2, "intro identities: D(x) = D(x^2) [k=2], 1/x = x/x^2 [k=0]", 0, [] {
        auto certs = lat_eq_cert(basic_open(q("x")), basic_open(q("x^2")));
        if (!certs || certs->fwd.size() != 1) return false;
        if (certs->fwd[0].k != 2) return false;
        if (!check_radical_cert(q("x"), {q("x^2")}, certs->fwd[0])) return false;
        std::printf("    certificate: x^%u = %s * x^2\n", certs->fwd[0].k,
                    to_string(certs->fwd[0].coeffs[0]).c_str());

        auto loc = LocRing::at(q("x"));
        auto w = loc_eq(LocElem{loc, q("1"), 1}, LocElem{loc, q("x"), 2});
        if (!w || w->k != 0) return false;
        std::printf("    witness: annihilator exponent k=%u\n", w->k);
        return true;
    });

    // 3. the three localization isomorphisms, 100 seeded elements per case
    criterion(3, "localization isomorphisms on 100 seeded elements per case and ring", 0, [] {
        Rng rng(303);
        bool ok = true;
        ok &= iterated_iso_suite(zi(2), zi(3), rng, 100).all_ok();
        ok &= iterated_iso_suite(q("x"), q("x - 1"), rng, 100).all_ok();
        ok &= iterated_iso_suite(zm(2), zm(3), rng, 100).all_ok();
        ok &= unit_iso_suite(zi(-1), rng, 100).all_ok();
        ok &= unit_iso_suite(q("3/2"), rng, 100).all_ok();
        ok &= unit_iso_suite(zm(5), rng, 100).all_ok();
        ok &= mutual_iso_suite(zi(2), zi(-2), rng, 100).all_ok();
        ok &= mutual_iso_suite(q("x"), q("2*x"), rng, 100).all_ok();
        ok &= mutual_iso_suite(zm(2), zm(10), rng, 100).all_ok();
        return ok;
    });

    // 4. gluing: hand traces, 500-element roundtrips, 200 perturbed families
    criterion(4, "gluing reproduces hand traces and roundtrips 500+200 seeded samples", 60.0, [] {
        auto cover23 = cover_check(lat_top(Z), {zi(2), zi(3)});
        if (!cover23) return false;
        auto fam = check_compatible(*cover23, {LocElem{LocRing::at(zi(2)), zi(14), 1},
                                               LocElem{LocRing::at(zi(3)), zi(21), 1}});
        if (!fam) return false;
        LocElem glued = glue(zi(1), *fam);
        if (!(glued.num == zi(7)) || glued.exp != 1) return false;
        std::printf("    glue(Z, {2,3}, (14/2, 21/3)) = %s\n", to_string(glued).c_str());

        auto coverx = cover_check(lat_top(QX), {q("x"), q("x - 1")});
        if (!coverx) return false;
        auto famx = check_compatible(
            *coverx, {LocElem{LocRing::at(q("x")), q("x^3 + x"), 1},
                      LocElem{LocRing::at(q("x - 1")), q("x^3 - x^2 + x - 1"), 1}});
        if (!famx) return false;
        LocElem gluedx = glue(q("1"), *famx);
        if (!loc_eq(gluedx, loc_from_base(LocRing::trivial(QX), q("x^2 + 1")))) return false;
        std::printf("    glue(Q[x], {x, x-1}, ...) = %s\n", to_string(gluedx).c_str());

        Rng rng(404);
        if (!roundtrip_suite(Z, {zi(2), zi(3)}, rng, 500).all_ok()) return false;
        if (!roundtrip_suite(Z, {zi(6), zi(10), zi(15)}, rng, 500).all_ok()) return false;
        if (!roundtrip_suite(QX, {q("x"), q("x - 1")}, rng, 500).all_ok()) return false;
        if (!perturbed_roundtrip_suite(Z, {zi(2), zi(3)}, rng, 200).all_ok()) return false;
        if (!perturbed_roundtrip_suite(QX, {q("x"), q("x - 1")}, rng, 200).all_ok())
            return false;
        return true;
    });

    // 5. pullback squares: 50 compatible + 50 incompatible pairs per instance
    criterion(5, "pullback instances accept 50 compatible and reject 50 incompatible pairs",
              0, [] {
                  Rng rng(505);
                  if (!sheaf_suite(zi(1), zi(2), zi(3), rng, 50, 50).all_ok()) return false;
                  if (!sheaf_suite(zi(6), zi(12), zi(18), rng, 50, 50).all_ok()) return false;
                  if (!sheaf_suite(q("1"), q("x"), q("x - 1"), rng, 50, 50).all_ok())
                      return false;
                  return true;
              });

    // 6. restriction functoriality over 200 seeded chains per ring
    criterion(6, "composite and direct restrictions agree on 200 seeded chains", 0, [] {
        for (auto ring : {Z, QX}) {
            Rng rng(606);
            for (int i = 0; i < 200; ++i) {
                Elem f = random_nonzero(rng, ring);
                Elem g = mul(f, random_nonzero(rng, ring));
                Elem e = mul(g, random_nonzero(rng, ring));
                auto fg = restriction_hom(f, g);
                auto ge = restriction_hom(g, e);
                auto fe = restriction_hom(f, e);
                if (!fg || !ge || !fe) return false;
                LocElem a{fg->source, random_elem(rng, ring),
                          static_cast<std::uint32_t>(rng() % 3)};
                if (!loc_eq(apply_hom(*ge, apply_hom(*fg, a)), apply_hom(*fe, a)))
                    return false;
            }
        }
        return true;
    });

    // 7. lattice laws and normalize on 500 seeded triples per ring
    criterion(7, "lattice laws + normalize on 500 seeded triples in Z, Z/12, Q[x]", 0, [] {
        for (auto ring : {Z, Z12, QX}) {
            Rng rng(707);
            for (int i = 0; i < 500; ++i) {
                auto rnd = [&] {
                    std::vector<Elem> gens;
                    for (std::size_t k = 0; k < 1 + rng() % 2; ++k)
                        gens.push_back(random_elem(rng, ring));
                    return make_lattice_elt(ring, gens);
                };
                LatticeElt a = rnd(), b = rnd(), c = rnd();
                if (!lattice_laws_hold(a, b, c)) return false;
                LatticeElt na = normalize(a);
                if (!lat_eq(na, a)) return false;
                LatticeElt nna = normalize(na);
                if (nna.gens.size() != na.gens.size()) return false;
                for (std::size_t k = 0; k < na.gens.size(); ++k)
                    if (!(nna.gens[k] == na.gens[k])) return false;
            }
        }
        return true;
    });

    // 8. the localization at 0 is terminal, D(0) is bottom, empty covers glue
    criterion(8, "zero ring: all pairs equal in R[1/0], D(0) = bottom, empty-cover glue", 0, [] {
        for (auto ring : {Z, Z12, QX, RXY}) {
            auto at0 = LocRing::at(zero(ring));
            if (!at0->zero_ring) return false;
            Rng rng(808);
            for (int i = 0; i < 25; ++i) {
                LocElem x{at0, random_elem(rng, ring), static_cast<std::uint32_t>(rng() % 3)};
                LocElem y{at0, random_elem(rng, ring), static_cast<std::uint32_t>(rng() % 3)};
                if (!loc_eq(x, y)) return false;
            }
            if (!lat_eq(basic_open(zero(ring)), lat_bottom(ring))) return false;

            auto cover = cover_check(basic_open(zero(ring)), {});
            if (!cover) return false;
            auto fam = check_compatible(*cover, {});
            if (!fam) return false;
            LocElem glued = glue(zero(ring), *fam);
            if (!loc_eq(glued, loc_one(at0)) || !loc_eq(glued, loc_zero(at0))) return false;
        }
        return true;
    });

    // 9. tier-2 coverage in Q[x,y]
    criterion(9, "Q[x,y]: radical certificates, 1 not in <x,y>, [x,y] irredundant", 30.0, [] {
        auto r1 = mv_radical_membership(m("x"), {m("x^2"), m("x*y")});
        if (!r1 || r1->k != 2) return false;
        if (!check_radical_cert(m("x"), {m("x^2"), m("x*y")}, *r1)) return false;
        std::printf("    x in sqrt<x^2, xy>: k=%u coeffs=[%s, %s]\n", r1->k,
                    to_string(r1->coeffs[0]).c_str(), to_string(r1->coeffs[1]).c_str());

        auto r2 = mv_radical_membership(m("x + y"), {m("x"), m("y")});
        if (!r2 || r2->k != 1) return false;
        if (!check_radical_cert(m("x + y"), {m("x"), m("y")}, *r2)) return false;
        std::printf("    x+y in sqrt<x, y>: k=%u coeffs=[%s, %s]\n", r2->k,
                    to_string(r2->coeffs[0]).c_str(), to_string(r2->coeffs[1]).c_str());

        if (mv_ideal_membership(one(RXY), {m("x"), m("y")})) return false;

        LatticeElt xy = normalize(make_lattice_elt(RXY, {m("x"), m("y")}));
        if (xy.gens.size() != 2) return false;
        if (radical_membership(m("x"), {m("y")})) return false;
        if (radical_membership(m("y"), {m("x")})) return false;
        return true;
    });

    // 10. certificate audit over everything the run above emitted
    criterion(10, "certificate audit: 100% of emitted certificates re-verified", 0, [] {
        audit::Stats s = audit::stats();
        std::printf("    radical %llu/%llu, coefficient %llu/%llu, annihilator %llu/%llu\n",
                    static_cast<unsigned long long>(s.radical_verified),
                    static_cast<unsigned long long>(s.radical_emitted),
                    static_cast<unsigned long long>(s.bezout_verified),
                    static_cast<unsigned long long>(s.bezout_emitted),
                    static_cast<unsigned long long>(s.ann_power_verified),
                    static_cast<unsigned long long>(s.ann_power_emitted));
        return s.radical_emitted > 0 && s.radical_emitted == s.radical_verified &&
               s.bezout_emitted > 0 && s.bezout_emitted == s.bezout_verified &&
               s.ann_power_emitted > 0 && s.ann_power_emitted == s.ann_power_verified;
    });

    if (failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
