#include "zarlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "internal.hpp"
#include "zarlat/groebner.hpp"

namespace zarlat {

LatticeElt make_lattice_elt(RingPtr ring, std::vector<Elem> gens) {
    require_same_ring(gens, ring, "lattice element");
    return LatticeElt{std::move(ring), std::move(gens)};
}

LatticeElt basic_open(const Elem& f) { return {f.ring(), {f}}; }

LatticeElt lat_top(const RingPtr& ring) { return {ring, {one(ring)}}; }
LatticeElt lat_bottom(const RingPtr& ring) { return {ring, {}}; }

namespace {

void require_same_lattice(const LatticeElt& a, const LatticeElt& b, const char* where) {
    if (!(*a.ring == *b.ring))
        throw UsageError(std::string(where) + ": mixed rings " + a.ring->name() + " and " +
                         b.ring->name());
}

} // namespace

LatticeElt lat_join(const LatticeElt& a, const LatticeElt& b) {
    require_same_lattice(a, b, "lat_join");
    LatticeElt r{a.ring, a.gens};
    r.gens.insert(r.gens.end(), b.gens.begin(), b.gens.end());
    return r;
}

LatticeElt lat_meet(const LatticeElt& a, const LatticeElt& b) {
    require_same_lattice(a, b, "lat_meet");
    LatticeElt r{a.ring, {}};
    r.gens.reserve(a.gens.size() * b.gens.size());
    for (const auto& x : a.gens)
        for (const auto& y : b.gens) r.gens.push_back(mul(x, y));
    return r;
}

std::optional<std::vector<RadicalCert>> lat_leq_cert(const LatticeElt& a, const LatticeElt& b) {
    require_same_lattice(a, b, "lat_leq");
    std::vector<RadicalCert> certs;
    certs.reserve(a.gens.size());
    for (const auto& g : a.gens) {
        auto c = radical_membership(g, b.gens);
        if (!c) return std::nullopt;
        certs.push_back(std::move(*c));
    }
    return certs;
}

bool lat_leq(const LatticeElt& a, const LatticeElt& b) { return lat_leq_cert(a, b).has_value(); }

std::optional<LatEqCerts> lat_eq_cert(const LatticeElt& a, const LatticeElt& b) {
    auto fwd = lat_leq_cert(a, b);
    if (!fwd) return std::nullopt;
    auto bwd = lat_leq_cert(b, a);
    if (!bwd) return std::nullopt;
    return LatEqCerts{std::move(*fwd), std::move(*bwd)};
}

bool lat_eq(const LatticeElt& a, const LatticeElt& b) { return lat_eq_cert(a, b).has_value(); }

LatticeElt normalize(const LatticeElt& a) {
    // drop zeros, dedupe structurally
    std::vector<Elem> kept;
    for (const auto& g : a.gens) {
        if (g.is_zero()) continue;
        bool dup = false;
        for (const auto& k : kept)
            if (k == g) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(g);
    }
    if (kept.empty()) return lat_bottom(a.ring);

    if (a.ring->is_principal()) {
        // sqrt<g1..gn> = sqrt<gcd> in these rings; the modulus joins in for Z/n
        if (a.ring->kind() == Ring::Kind::modular) {
            RingPtr z = Ring::integers();
            Elem g = Elem::from_int(z, a.ring->modulus());
            for (const auto& x : kept) g = gcd_elem(g, Elem::from_int(z, x.int_value()));
            Elem r = Elem::from_int(a.ring, g.int_value());
            if (r.is_zero()) return lat_bottom(a.ring);
            if (is_unit(r)) return lat_top(a.ring);
            return {a.ring, {std::move(r)}};
        }
        Elem g = zero(a.ring);
        for (const auto& x : kept) g = gcd_elem(g, x);
        if (is_unit(g)) return lat_top(a.ring);
        return {a.ring, {std::move(g)}};
    }

    // multivariate: a unit generator absorbs everything, then drop any
    // generator lying in the radical of the rest (until stable)
    for (const auto& g : kept)
        if (is_unit(g)) return lat_top(a.ring);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = kept.size(); i-- > 0;) {
            std::vector<Elem> rest;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) rest.push_back(kept[j]);
            if (radical_membership(kept[i], rest)) {
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return {a.ring, std::move(kept)};
}

// --- support relations ---------------------------------------------------------

SupportReport support_check(const RingPtr& ring,
                            const std::vector<std::pair<Elem, Elem>>& pairs) {
    SupportReport rep;
    if (!lat_eq(basic_open(one(ring)), lat_top(ring)))
        rep.violations.push_back("D(1) != top");
    if (!lat_eq(basic_open(zero(ring)), lat_bottom(ring)))
        rep.violations.push_back("D(0) != bottom");

    for (const auto& [f, g] : pairs) {
        ++rep.pairs_checked;
        LatticeElt prod = basic_open(mul(f, g));
        LatticeElt met = lat_meet(basic_open(f), basic_open(g));
        if (!lat_eq(prod, met))
            rep.violations.push_back("D(fg) != D(f)^D(g) for f=" + to_string(f) +
                                     ", g=" + to_string(g));
        // the sum relation always holds with the direct combination
        // f+g = 1*f + 1*g
        RadicalCert direct{1, {one(ring), one(ring)}};
        if (!check_radical_cert(add(f, g), {f, g}, direct) ||
            !lat_leq(basic_open(add(f, g)), lat_join(basic_open(f), basic_open(g))))
            rep.violations.push_back("D(f+g) !<= D(f)vD(g) for f=" + to_string(f) +
                                     ", g=" + to_string(g));
    }
    return rep;
}

// --- finite distributive lattices -------------------------------------------------

FiniteDistLattice FiniteDistLattice::from_leq(std::vector<std::string> labels,
                                              const std::vector<std::vector<bool>>& leq) {
    std::size_t n = labels.size();
    if (leq.size() != n) throw UsageError("finite lattice: order table size mismatch");
    for (const auto& row : leq)
        if (row.size() != n) throw UsageError("finite lattice: order table not square");

    for (std::size_t i = 0; i < n; ++i)
        if (!leq[i][i]) throw UsageError("finite lattice: order not reflexive");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq[i][j] && leq[j][i])
                throw UsageError("finite lattice: order not antisymmetric");
            for (std::size_t k = 0; k < n; ++k)
                if (leq[i][j] && leq[j][k] && !leq[i][k])
                    throw UsageError("finite lattice: order not transitive");
        }

    FiniteDistLattice lat;
    lat.labels_ = std::move(labels);
    lat.leq_ = leq;
    lat.join_.assign(n, std::vector<std::size_t>(n, 0));
    lat.meet_.assign(n, std::vector<std::size_t>(n, 0));

    // least upper bound / greatest lower bound by exhaustive scan
    auto bound = [&](std::size_t a, std::size_t b, bool upper) -> std::size_t {
        for (std::size_t c = 0; c < n; ++c) {
            bool is_b = upper ? (leq[a][c] && leq[b][c]) : (leq[c][a] && leq[c][b]);
            if (!is_b) continue;
            bool extremal = true;
            for (std::size_t e = 0; e < n; ++e) {
                bool other = upper ? (leq[a][e] && leq[b][e]) : (leq[e][a] && leq[e][b]);
                if (other && !(upper ? leq[c][e] : leq[e][c])) {
                    extremal = false;
                    break;
                }
            }
            if (extremal) return c;
        }
        return n;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t jn = bound(i, j, true);
            std::size_t mt = bound(i, j, false);
            if (jn == n || mt == n)
                throw UsageError("finite lattice: join/meet missing for a pair");
            lat.join_[i][j] = jn;
            lat.meet_[i][j] = mt;
        }

    std::size_t top = 0, bottom = 0;
    for (std::size_t i = 0; i < n; ++i) {
        top = lat.join_[top][i];
        bottom = lat.meet_[bottom][i];
    }
    lat.top_ = top;
    lat.bottom_ = bottom;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (lat.meet_[i][lat.join_[j][k]] !=
                    lat.join_[lat.meet_[i][j]][lat.meet_[i][k]])
                    throw UsageError("finite lattice: distributivity fails at (" +
                                     lat.labels_[i] + "," + lat.labels_[j] + "," +
                                     lat.labels_[k] + ")");
    return lat;
}

FiniteDistLattice FiniteDistLattice::divisor_lattice(const mpz_class& n) {
    if (n < 1) throw UsageError("divisor lattice needs n >= 1");
    std::vector<mpz_class> divs;
    for (mpz_class d = 1; d <= n; ++d)
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) divs.push_back(d);
    std::vector<std::string> labels;
    for (const auto& d : divs) labels.push_back(d.get_str());
    std::vector<std::vector<bool>> leq(divs.size(), std::vector<bool>(divs.size(), false));
    for (std::size_t i = 0; i < divs.size(); ++i)
        for (std::size_t j = 0; j < divs.size(); ++j)
            leq[i][j] = mpz_divisible_p(divs[j].get_mpz_t(), divs[i].get_mpz_t());
    return from_leq(std::move(labels), leq);
}

std::optional<std::size_t> FiniteDistLattice::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::size_t universal_morphism(const FiniteDistLattice& lat, const SupportMap& d,
                               const LatticeElt& a) {
    auto check_index = [&](std::size_t v, const Elem& x) {
        if (v >= lat.size())
            throw UsageError("support map value out of range at " + to_string(x));
        return v;
    };
    // support relations on the touched generators
    if (check_index(d(zero(a.ring)), zero(a.ring)) != lat.bottom())
        throw UsageError("support map violates d(0) = bottom");
    if (check_index(d(one(a.ring)), one(a.ring)) != lat.top())
        throw UsageError("support map violates d(1) = top");
    for (const auto& f : a.gens)
        for (const auto& g : a.gens) {
            std::size_t df = check_index(d(f), f), dg = check_index(d(g), g);
            if (check_index(d(mul(f, g)), mul(f, g)) != lat.meet(df, dg))
                throw UsageError("support map violates d(fg) = d(f)^d(g) at f=" + to_string(f) +
                                 ", g=" + to_string(g));
            if (!lat.leq(check_index(d(add(f, g)), add(f, g)), lat.join(df, dg)))
                throw UsageError("support map violates d(f+g) <= d(f)vd(g) at f=" + to_string(f) +
                                 ", g=" + to_string(g));
        }

    std::size_t acc = lat.bottom();
    for (const auto& g : a.gens) acc = lat.join(acc, d(g));
    return acc;
}

// --- basic-open detection -----------------------------------------------------------

BasicOpenResult is_basic_open(const LatticeElt& a) {
    LatticeElt n = normalize(a);
    if (a.ring->is_principal()) {
        // every element is basic: the gcd generates the same radical
        Elem g = n.gens.empty() ? zero(a.ring) : n.gens[0];
        return {BasicOpenResult::Status::basic, std::move(g)};
    }
    if (n.gens.empty()) return {BasicOpenResult::Status::basic, zero(a.ring)};
    if (n.gens.size() == 1) return {BasicOpenResult::Status::basic, n.gens[0]};
    return {BasicOpenResult::Status::unknown, std::nullopt};
}

std::string to_string(const LatticeElt& a) {
    std::ostringstream os;
    os << "D(";
    for (std::size_t i = 0; i < a.gens.size(); ++i) {
        if (i) os << ", ";
        os << a.gens[i];
    }
    os << ")";
    return os.str();
}

} // namespace zarlat
