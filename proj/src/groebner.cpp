#include "zarlat/groebner.hpp"

#include <algorithm>
#include <deque>

#include "internal.hpp"

namespace zarlat {

namespace {

void require_multi(const Elem& x, const char* where) {
    if (x.ring()->kind() != Ring::Kind::multi_poly)
        throw UsageError(std::string(where) + " needs a multivariate ring, got " +
                         x.ring()->name());
}

const Monomial& leading_monomial(const MultiPoly& p) { return p.rbegin()->first; }
const mpq_class& leading_coeff(const MultiPoly& p) { return p.rbegin()->second; }

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_sub(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Elem term_elem(const RingPtr& ring, const Monomial& m, const mpq_class& c) {
    return Elem::monomial(ring, m, c);
}

} // namespace

std::pair<Elem, std::vector<Elem>> divide_with_cofactors(const Elem& p,
                                                         const std::vector<Elem>& divisors) {
    require_multi(p, "divide_with_cofactors");
    const RingPtr& ring = p.ring();
    require_same_ring(divisors, ring, "divide_with_cofactors");

    std::vector<Elem> cof(divisors.size(), zero(ring));
    Elem rem = zero(ring);
    Elem h = p;
    while (!h.is_zero()) {
        const MultiPoly& hp = h.multi_value();
        const Monomial& lm = leading_monomial(hp);
        const mpq_class& lc = leading_coeff(hp);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (divisors[i].is_zero()) continue;
            const MultiPoly& d = divisors[i].multi_value();
            if (!divides(leading_monomial(d), lm)) continue;
            Elem t = term_elem(ring, mono_sub(lm, leading_monomial(d)), lc / leading_coeff(d));
            h = sub(h, mul(t, divisors[i]));
            cof[i] = add(cof[i], t);
            reduced = true;
            break;
        }
        if (!reduced) {
            Elem t = term_elem(ring, lm, lc);
            rem = add(rem, t);
            h = sub(h, t);
        }
    }
    return {std::move(rem), std::move(cof)};
}

GroebnerBasis buchberger(const std::vector<Elem>& gens, std::size_t pair_budget) {
    GroebnerBasis gb;
    gb.input = gens;
    if (!gens.empty()) {
        require_multi(gens[0], "buchberger");
        require_same_ring(gens, gens[0].ring(), "buchberger");
    }

    auto unit_row = [&](std::size_t i) {
        std::vector<Elem> row(gens.size(), zero(gens[i].ring()));
        row[i] = one(gens[i].ring());
        return row;
    };
    auto push = [&](Elem g, std::vector<Elem> row) {
        // keep basis elements monic
        mpq_class lc = leading_coeff(g.multi_value());
        if (lc != 1) {
            Elem s = Elem::from_rational(g.ring(), 1 / lc);
            g = mul(s, g);
            for (auto& c : row) c = mul(s, c);
        }
        gb.basis.push_back(std::move(g));
        gb.transform.push_back(std::move(row));
    };

    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!gens[i].is_zero()) push(gens[i], unit_row(i));

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j) pairs.emplace_back(i, j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > pair_budget)
            throw ResourceError("buchberger: S-pair budget exhausted (" +
                                std::to_string(pair_budget) + ")");
        auto [i, j] = pairs.front();
        pairs.pop_front();

        const Monomial& mi = leading_monomial(gb.basis[i].multi_value());
        const Monomial& mj = leading_monomial(gb.basis[j].multi_value());
        Monomial l = mono_lcm(mi, mj);
        // product criterion: coprime leading monomials reduce to zero
        if (total_degree(l) == total_degree(mi) + total_degree(mj)) continue;

        const RingPtr& ring = gb.basis[i].ring();
        Elem ui = term_elem(ring, mono_sub(l, mi), 1);
        Elem uj = term_elem(ring, mono_sub(l, mj), 1);
        Elem s = sub(mul(ui, gb.basis[i]), mul(uj, gb.basis[j]));
        auto [r, q] = divide_with_cofactors(s, gb.basis);
        if (r.is_zero()) continue;

        std::vector<Elem> row(gens.size(), zero(ring));
        for (std::size_t c = 0; c < gens.size(); ++c) {
            Elem acc = sub(mul(ui, gb.transform[i][c]), mul(uj, gb.transform[j][c]));
            for (std::size_t k = 0; k < gb.basis.size(); ++k)
                acc = sub(acc, mul(q[k], gb.transform[k][c]));
            row[c] = std::move(acc);
        }
        std::size_t added = gb.basis.size();
        push(std::move(r), std::move(row));
        for (std::size_t k = 0; k < added; ++k) pairs.emplace_back(k, added);
    }

    // transform rows must reproduce the basis exactly
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        if (!check_membership_coeffs(gb.basis[i], gb.input, gb.transform[i]))
            throw InternalError("groebner transform row failed re-verification");
    return gb;
}

std::optional<std::vector<Elem>> mv_ideal_membership(const Elem& x, const GroebnerBasis& gb) {
    auto [r, cof] = divide_with_cofactors(x, gb.basis);
    if (!r.is_zero()) return std::nullopt;
    std::vector<Elem> coeffs(gb.input.size(), zero(x.ring()));
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = 0; j < gb.input.size(); ++j)
            coeffs[j] = add(coeffs[j], mul(cof[i], gb.transform[i][j]));
    return detail::emit_coeffs(x, gb.input, std::move(coeffs));
}

std::optional<std::vector<Elem>> mv_ideal_membership(const Elem& x, const std::vector<Elem>& gens) {
    require_multi(x, "mv_ideal_membership");
    return mv_ideal_membership(x, buchberger(gens));
}

namespace {

std::string fresh_var(const std::vector<std::string>& vars) {
    std::string t = "t";
    int suffix = 0;
    while (std::find(vars.begin(), vars.end(), t) != vars.end()) t = "t" + std::to_string(suffix++);
    return t;
}

Elem lift_to_extended(const Elem& p, const RingPtr& ext) {
    MultiPoly lifted;
    for (const auto& [m, c] : p.multi_value()) {
        Monomial em = m;
        em.push_back(0);
        lifted.emplace(std::move(em), c);
    }
    return Elem::from_multi(ext, std::move(lifted));
}

} // namespace

std::optional<RadicalCert> mv_radical_membership(const Elem& x, const std::vector<Elem>& gens) {
    require_multi(x, "mv_radical_membership");
    const RingPtr& ring = x.ring();
    require_same_ring(gens, ring, "mv_radical_membership");

    if (x.is_zero())
        return detail::emit_radical(x, gens, RadicalCert{1, std::vector<Elem>(gens.size(), zero(ring))});

    // decide via 1 in <gens, 1 - t*x> in the extended ring
    std::vector<std::string> ext_vars = ring->variables();
    ext_vars.push_back(fresh_var(ext_vars));
    RingPtr ext = Ring::rational_multi_poly(ext_vars);
    std::vector<Elem> ext_gens;
    for (const auto& g : gens) ext_gens.push_back(lift_to_extended(g, ext));
    Monomial t_mono(ext_vars.size(), 0);
    t_mono.back() = 1;
    Elem t = Elem::monomial(ext, t_mono);
    ext_gens.push_back(sub(one(ext), mul(t, lift_to_extended(x, ext))));

    auto combo = mv_ideal_membership(one(ext), ext_gens);
    if (!combo) return std::nullopt;

    // substitute t -> 1/x in the combination for 1 and clear denominators:
    // with K the maximal t-degree, x^K = sum_i (sum_d c_{i,d} x^{K-d}) gens_i
    std::uint32_t cap = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (const auto& [m, c] : (*combo)[i].multi_value()) cap = std::max(cap, m.back());

    std::vector<Elem> cleared(gens.size(), zero(ring));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (const auto& [m, c] : (*combo)[i].multi_value()) {
            Monomial proj(m.begin(), m.end() - 1);
            Elem term = mul(Elem::monomial(ring, std::move(proj), c), pow(x, cap - m.back()));
            cleared[i] = add(cleared[i], term);
        }
    }
    RadicalCert candidate{std::max<std::uint32_t>(cap, 1),
                          cap == 0 ? std::vector<Elem>() : cleared};
    if (cap == 0) {
        // the combination was t-free: 1 in <gens>, so x itself is a member
        candidate = RadicalCert{1, *mv_ideal_membership(x, gens)};
        return detail::emit_radical(x, gens, std::move(candidate));
    }
    candidate.coeffs = std::move(cleared);
    if (!check_radical_cert(x, gens, candidate))
        throw InternalError("cleared radical combination failed re-verification");

    // minimize the exponent against <gens> directly (cap guarantees a hit)
    GroebnerBasis gb = buchberger(gens);
    for (std::uint32_t k = 1; k <= candidate.k; ++k) {
        if (auto c = mv_ideal_membership(pow(x, k), gb))
            return detail::emit_radical(x, gens, RadicalCert{k, std::move(*c)});
    }
    throw InternalError("radical exponent minimization missed the verified cap");
}

} // namespace zarlat
