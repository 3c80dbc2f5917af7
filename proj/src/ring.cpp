#include "zarlat/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "internal.hpp"

namespace zarlat {

// --- Ring -------------------------------------------------------------------

RingPtr Ring::integers() {
    auto r = std::shared_ptr<Ring>(new Ring);
    r->kind_ = Kind::integers;
    return r;
}

RingPtr Ring::modular(mpz_class modulus) {
    if (modulus < 2) throw UsageError("modular ring requires modulus >= 2");
    auto r = std::shared_ptr<Ring>(new Ring);
    r->kind_ = Kind::modular;
    r->modulus_ = std::move(modulus);
    return r;
}

namespace {

void validate_var_name(const std::string& v) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
        throw UsageError("variable name must start with a letter: '" + v + "'");
    for (char c : v)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw UsageError("invalid character in variable name: '" + v + "'");
}

} // namespace

RingPtr Ring::rational_poly(std::string var) {
    validate_var_name(var);
    auto r = std::shared_ptr<Ring>(new Ring);
    r->kind_ = Kind::uni_poly;
    r->vars_ = {std::move(var)};
    return r;
}

RingPtr Ring::rational_multi_poly(std::vector<std::string> vars) {
    if (vars.empty()) throw UsageError("multivariate ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        validate_var_name(v);
        if (!seen.insert(v).second) throw UsageError("duplicate variable name: '" + v + "'");
    }
    auto r = std::shared_ptr<Ring>(new Ring);
    r->kind_ = Kind::multi_poly;
    r->vars_ = std::move(vars);
    return r;
}

const mpz_class& Ring::modulus() const {
    if (kind_ != Kind::modular) throw UsageError("modulus() on non-modular ring " + name());
    return modulus_;
}

const std::vector<std::string>& Ring::variables() const { return vars_; }

std::string Ring::name() const {
    switch (kind_) {
        case Kind::integers: return "Z";
        case Kind::modular: return "Z/" + modulus_.get_str();
        case Kind::uni_poly: return "Q[" + vars_[0] + "]";
        case Kind::multi_poly: {
            std::string s = "Q[";
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (i) s += ",";
                s += vars_[i];
            }
            return s + "]";
        }
    }
    return "?";
}

bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.vars_ == b.vars_;
}

void require_same_ring(const Elem& a, const Elem& b, const char* where) {
    if (!(*a.ring() == *b.ring()))
        throw UsageError(std::string(where) + ": mixed rings " + a.ring()->name() + " and " +
                         b.ring()->name());
}

void require_same_ring(const std::vector<Elem>& xs, const RingPtr& ring, const char* where) {
    for (const auto& x : xs)
        if (!(*x.ring() == *ring))
            throw UsageError(std::string(where) + ": mixed rings " + x.ring()->name() + " and " +
                             ring->name());
}

// --- Monomials ---------------------------------------------------------------

std::uint64_t total_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool GrevlexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = std::min(a.size(), b.size()); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

// --- dense univariate helpers -------------------------------------------------

namespace detail {

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uni_trim(r);
    return r;
}

UniPoly uni_neg(const UniPoly& a) {
    UniPoly r = a;
    for (auto& c : r) c = -c;
    return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

UniPoly uni_scale(const UniPoly& a, const mpq_class& c) {
    if (c == 0) return {};
    UniPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    if (uni_is_zero(b)) throw InternalError("uni_divmod by zero");
    UniPoly q, r = a;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
    const mpq_class& lc = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        mpq_class f = r.back() / lc;
        std::size_t shift = r.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        uni_trim(r); // leading term cancels exactly
    }
    uni_trim(q);
    return {std::move(q), std::move(r)};
}

UniPoly uni_monic(const UniPoly& a) {
    if (a.empty()) return a;
    mpq_class inv = 1 / a.back();
    return uni_scale(a, inv);
}

MultiPoly multi_add(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b) {
        auto it = r.find(m);
        if (it == r.end()) {
            r.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

MultiPoly multi_neg(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& [m, c] : r) c = -c;
    return r;
}

MultiPoly multi_mul(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            mpq_class c = ca * cb;
            auto it = r.find(m);
            if (it == r.end()) {
                if (c != 0) r.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

mpz_class mod_canon(const mpz_class& v, const mpz_class& n) {
    mpz_class r = v % n;
    if (r < 0) r += n;
    return r;
}

} // namespace detail

// --- Elem --------------------------------------------------------------------

Elem Elem::from_int(RingPtr ring, mpz_class v) {
    Elem e;
    switch (ring->kind()) {
        case Ring::Kind::integers: e.v_ = std::move(v); break;
        case Ring::Kind::modular: e.v_ = detail::mod_canon(v, ring->modulus()); break;
        case Ring::Kind::uni_poly: {
            UniPoly p;
            if (v != 0) p.push_back(mpq_class(v));
            e.v_ = std::move(p);
            break;
        }
        case Ring::Kind::multi_poly: {
            MultiPoly p;
            if (v != 0) p.emplace(Monomial(ring->var_count(), 0), mpq_class(v));
            e.v_ = std::move(p);
            break;
        }
    }
    e.ring_ = std::move(ring);
    return e;
}

Elem Elem::from_rational(RingPtr ring, mpq_class v) {
    v.canonicalize();
    if (ring->kind() == Ring::Kind::integers || ring->kind() == Ring::Kind::modular) {
        if (v.get_den() != 1)
            throw UsageError("non-integral constant " + v.get_str() + " in ring " + ring->name());
        return from_int(std::move(ring), v.get_num());
    }
    if (ring->kind() == Ring::Kind::uni_poly) {
        UniPoly p;
        if (v != 0) p.push_back(std::move(v));
        return from_uni(std::move(ring), std::move(p));
    }
    MultiPoly p;
    if (v != 0) p.emplace(Monomial(ring->var_count(), 0), std::move(v));
    return from_multi(std::move(ring), std::move(p));
}

Elem Elem::from_uni(RingPtr ring, UniPoly coeffs) {
    if (ring->kind() != Ring::Kind::uni_poly)
        throw UsageError("from_uni on ring " + ring->name());
    detail::uni_trim(coeffs);
    Elem e;
    e.ring_ = std::move(ring);
    e.v_ = std::move(coeffs);
    return e;
}

Elem Elem::from_multi(RingPtr ring, MultiPoly terms) {
    if (ring->kind() != Ring::Kind::multi_poly)
        throw UsageError("from_multi on ring " + ring->name());
    for (const auto& [m, c] : terms) {
        if (m.size() != ring->var_count()) throw InternalError("monomial arity mismatch");
        if (c == 0) throw InternalError("zero coefficient in multi poly term map");
    }
    Elem e;
    e.ring_ = std::move(ring);
    e.v_ = std::move(terms);
    return e;
}

Elem Elem::monomial(RingPtr ring, Monomial exps, mpq_class c) {
    c.canonicalize();
    MultiPoly p;
    if (c != 0) {
        if (exps.size() != ring->var_count()) throw UsageError("monomial arity mismatch");
        p.emplace(std::move(exps), std::move(c));
    }
    return from_multi(std::move(ring), std::move(p));
}

bool Elem::is_zero() const {
    switch (ring_->kind()) {
        case Ring::Kind::integers:
        case Ring::Kind::modular: return std::get<mpz_class>(v_) == 0;
        case Ring::Kind::uni_poly: return std::get<UniPoly>(v_).empty();
        case Ring::Kind::multi_poly: return std::get<MultiPoly>(v_).empty();
    }
    return false;
}

bool Elem::is_one() const { return *this == one(ring_); }

const mpz_class& Elem::int_value() const {
    if (!std::holds_alternative<mpz_class>(v_))
        throw UsageError("int_value() on ring " + ring_->name());
    return std::get<mpz_class>(v_);
}

const UniPoly& Elem::uni_value() const {
    if (!std::holds_alternative<UniPoly>(v_))
        throw UsageError("uni_value() on ring " + ring_->name());
    return std::get<UniPoly>(v_);
}

const MultiPoly& Elem::multi_value() const {
    if (!std::holds_alternative<MultiPoly>(v_))
        throw UsageError("multi_value() on ring " + ring_->name());
    return std::get<MultiPoly>(v_);
}

bool operator==(const Elem& a, const Elem& b) {
    require_same_ring(a, b, "eq");
    return a.v_ == b.v_;
}

Elem zero(const RingPtr& ring) { return Elem::from_int(ring, 0); }
Elem one(const RingPtr& ring) { return Elem::from_int(ring, 1); }

Elem add(const Elem& a, const Elem& b) {
    require_same_ring(a, b, "add");
    Elem r;
    r.ring_ = a.ring_;
    switch (a.ring_->kind()) {
        case Ring::Kind::integers:
            r.v_ = mpz_class(std::get<mpz_class>(a.v_) + std::get<mpz_class>(b.v_));
            break;
        case Ring::Kind::modular:
            r.v_ = detail::mod_canon(std::get<mpz_class>(a.v_) + std::get<mpz_class>(b.v_),
                                     a.ring_->modulus());
            break;
        case Ring::Kind::uni_poly:
            r.v_ = detail::uni_add(std::get<UniPoly>(a.v_), std::get<UniPoly>(b.v_));
            break;
        case Ring::Kind::multi_poly:
            r.v_ = detail::multi_add(std::get<MultiPoly>(a.v_), std::get<MultiPoly>(b.v_));
            break;
    }
    return r;
}

Elem neg(const Elem& a) {
    Elem r;
    r.ring_ = a.ring_;
    switch (a.ring_->kind()) {
        case Ring::Kind::integers: r.v_ = mpz_class(-std::get<mpz_class>(a.v_)); break;
        case Ring::Kind::modular:
            r.v_ = detail::mod_canon(-std::get<mpz_class>(a.v_), a.ring_->modulus());
            break;
        case Ring::Kind::uni_poly: r.v_ = detail::uni_neg(std::get<UniPoly>(a.v_)); break;
        case Ring::Kind::multi_poly: r.v_ = detail::multi_neg(std::get<MultiPoly>(a.v_)); break;
    }
    return r;
}

Elem sub(const Elem& a, const Elem& b) { return add(a, neg(b)); }

Elem mul(const Elem& a, const Elem& b) {
    require_same_ring(a, b, "mul");
    Elem r;
    r.ring_ = a.ring_;
    switch (a.ring_->kind()) {
        case Ring::Kind::integers:
            r.v_ = mpz_class(std::get<mpz_class>(a.v_) * std::get<mpz_class>(b.v_));
            break;
        case Ring::Kind::modular:
            r.v_ = detail::mod_canon(std::get<mpz_class>(a.v_) * std::get<mpz_class>(b.v_),
                                     a.ring_->modulus());
            break;
        case Ring::Kind::uni_poly:
            r.v_ = detail::uni_mul(std::get<UniPoly>(a.v_), std::get<UniPoly>(b.v_));
            break;
        case Ring::Kind::multi_poly:
            r.v_ = detail::multi_mul(std::get<MultiPoly>(a.v_), std::get<MultiPoly>(b.v_));
            break;
    }
    return r;
}

Elem pow(const Elem& a, std::uint64_t n) {
    Elem result = one(a.ring());
    Elem base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return result;
}

// --- printing ----------------------------------------------------------------

namespace {

// one monomial term; used by both polynomial kinds
void print_term(std::ostream& os, bool first, const mpq_class& c, const std::string& varpart) {
    mpq_class a = abs(c);
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (varpart.empty()) {
        os << a.get_str();
    } else if (a == 1) {
        os << varpart;
    } else {
        os << a.get_str() << "*" << varpart;
    }
}

} // namespace

std::string to_string(const Elem& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Elem& a) {
    switch (a.ring()->kind()) {
        case Ring::Kind::integers:
        case Ring::Kind::modular: return os << a.int_value().get_str();
        case Ring::Kind::uni_poly: {
            const UniPoly& p = a.uni_value();
            if (p.empty()) return os << "0";
            const std::string& x = a.ring()->variables()[0];
            bool first = true;
            for (std::size_t i = p.size(); i-- > 0;) {
                if (p[i] == 0) continue;
                std::string varpart;
                if (i == 1) varpart = x;
                else if (i > 1) varpart = x + "^" + std::to_string(i);
                print_term(os, first, p[i], varpart);
                first = false;
            }
            return os;
        }
        case Ring::Kind::multi_poly: {
            const MultiPoly& p = a.multi_value();
            if (p.empty()) return os << "0";
            const auto& vars = a.ring()->variables();
            bool first = true;
            for (auto it = p.rbegin(); it != p.rend(); ++it) {
                std::string varpart;
                for (std::size_t i = 0; i < it->first.size(); ++i) {
                    auto e = it->first[i];
                    if (e == 0) continue;
                    if (!varpart.empty()) varpart += "*";
                    varpart += vars[i];
                    if (e > 1) varpart += "^" + std::to_string(e);
                }
                print_term(os, first, it->second, varpart);
                first = false;
            }
            return os;
        }
    }
    return os;
}

// --- gcd / exact division ------------------------------------------------------

Elem gcd_elem(const Elem& a, const Elem& b) {
    require_same_ring(a, b, "gcd");
    switch (a.ring()->kind()) {
        case Ring::Kind::integers:
        case Ring::Kind::modular: {
            // gcd of representatives; for Z/n callers fold the modulus in
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.int_value().get_mpz_t(), b.int_value().get_mpz_t());
            return Elem::from_int(a.ring(), g);
        }
        case Ring::Kind::uni_poly: {
            UniPoly x = a.uni_value(), y = b.uni_value();
            while (!detail::uni_is_zero(y)) {
                auto [q, r] = detail::uni_divmod(x, y);
                x = std::move(y);
                y = std::move(r);
            }
            return Elem::from_uni(a.ring(), detail::uni_monic(x));
        }
        case Ring::Kind::multi_poly:
            throw UsageError("gcd not available in " + a.ring()->name());
    }
    throw InternalError("unreachable");
}

std::optional<Elem> exact_div(const Elem& a, const Elem& b) {
    require_same_ring(a, b, "exact_div");
    if (b.is_zero()) return a.is_zero() ? std::optional<Elem>(zero(a.ring())) : std::nullopt;
    switch (a.ring()->kind()) {
        case Ring::Kind::integers: {
            if (!mpz_divisible_p(a.int_value().get_mpz_t(), b.int_value().get_mpz_t()))
                return std::nullopt;
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), a.int_value().get_mpz_t(), b.int_value().get_mpz_t());
            return Elem::from_int(a.ring(), q);
        }
        case Ring::Kind::uni_poly: {
            auto [q, r] = detail::uni_divmod(a.uni_value(), b.uni_value());
            if (!detail::uni_is_zero(r)) return std::nullopt;
            return Elem::from_uni(a.ring(), q);
        }
        default: throw UsageError("exact_div not available in " + a.ring()->name());
    }
}

// --- units and annihilator powers ----------------------------------------------

std::optional<Elem> is_unit(const Elem& a) {
    switch (a.ring()->kind()) {
        case Ring::Kind::integers: {
            const mpz_class& v = a.int_value();
            if (v == 1 || v == -1) return a; // self-inverse
            return std::nullopt;
        }
        case Ring::Kind::modular: {
            mpz_class g, u, t;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), t.get_mpz_t(), a.int_value().get_mpz_t(),
                       a.ring()->modulus().get_mpz_t());
            if (g != 1) return std::nullopt;
            return Elem::from_int(a.ring(), u);
        }
        case Ring::Kind::uni_poly: {
            const UniPoly& p = a.uni_value();
            if (p.size() != 1) return std::nullopt;
            return Elem::from_rational(a.ring(), 1 / p[0]);
        }
        case Ring::Kind::multi_poly: {
            const MultiPoly& p = a.multi_value();
            if (p.size() != 1) return std::nullopt;
            const auto& [m, c] = *p.begin();
            if (total_degree(m) != 0) return std::nullopt;
            return Elem::from_rational(a.ring(), 1 / c);
        }
    }
    return std::nullopt;
}

std::optional<AnnPowerWitness> ann_power(const Elem& f, const Elem& x) {
    require_same_ring(f, x, "ann_power");
    if (x.is_zero()) return detail::emit_ann(f, x, AnnPowerWitness{0});
    if (f.ring()->is_integral_domain()) {
        if (f.is_zero()) return detail::emit_ann(f, x, AnnPowerWitness{1});
        return std::nullopt;
    }
    // Z/n: the chain <f> >= <f^2> >= ... stabilizes within ceil(log2 n) steps
    std::uint32_t bound =
        static_cast<std::uint32_t>(mpz_sizeinbase(f.ring()->modulus().get_mpz_t(), 2));
    Elem p = x;
    for (std::uint32_t k = 1; k <= bound; ++k) {
        p = mul(p, f);
        if (p.is_zero()) return detail::emit_ann(f, x, AnnPowerWitness{k});
    }
    return std::nullopt;
}

// --- certificate checks ----------------------------------------------------------

bool check_membership_coeffs(const Elem& x, const std::vector<Elem>& gens,
                             const std::vector<Elem>& coeffs) {
    if (gens.size() != coeffs.size()) return false;
    Elem s = zero(x.ring());
    for (std::size_t i = 0; i < gens.size(); ++i) s = add(s, mul(coeffs[i], gens[i]));
    return s == x;
}

bool check_radical_cert(const Elem& x, const std::vector<Elem>& gens, const RadicalCert& c) {
    if (c.k < 1) return false;
    return check_membership_coeffs(pow(x, c.k), gens, c.coeffs);
}

bool check_bezout_cert(const std::vector<Elem>& gens, const BezoutCert& c) {
    if (gens.empty()) return false;
    return check_membership_coeffs(one(gens[0].ring()), gens, c.coeffs);
}

bool check_ann_power(const Elem& f, const Elem& x, const AnnPowerWitness& w) {
    return mul(pow(f, w.k), x).is_zero();
}

} // namespace zarlat
