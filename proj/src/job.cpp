#include "zarlat/job.hpp"

#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zarlat/cover.hpp"
#include "zarlat/groebner.hpp"
#include "zarlat/lattice.hpp"
#include "zarlat/localization.hpp"
#include "zarlat/parse.hpp"
#include "zarlat/sheaf.hpp"
#include "zarlat/suites.hpp"

namespace zarlat {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw UsageError(std::string("job: missing field '") + name + "'");
    return *it;
}

std::string str_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string())
        throw UsageError(std::string("job: field '") + name + "' must be a string");
    return v.get<std::string>();
}

RingPtr ring_from_json(const json& job) {
    const json& r = field(job, "ring");
    if (!r.is_object()) throw UsageError("job: 'ring' must be an object");
    std::string kind = str_field(r, "kind");
    if (kind == "integers") return Ring::integers();
    if (kind == "modular") return Ring::modular(mpz_class(str_field(r, "modulus")));
    if (kind == "poly") return Ring::rational_poly(str_field(r, "variable"));
    if (kind == "multi-poly") {
        const json& vs = field(r, "variables");
        if (!vs.is_array()) throw UsageError("job: 'variables' must be an array");
        std::vector<std::string> vars;
        for (const auto& v : vs) vars.push_back(v.get<std::string>());
        return Ring::rational_multi_poly(std::move(vars));
    }
    throw UsageError("job: unknown ring kind '" + kind + "'");
}

Elem elem_field(const json& j, const char* name, const RingPtr& ring) {
    return parse_elem(str_field(j, name), ring);
}

std::vector<Elem> elems_field(const json& j, const char* name, const RingPtr& ring) {
    const json& v = field(j, name);
    if (!v.is_array()) throw UsageError(std::string("job: field '") + name + "' must be an array");
    std::vector<Elem> out;
    for (const auto& e : v) {
        if (!e.is_string()) throw UsageError("job: elements must be strings");
        out.push_back(parse_elem(e.get<std::string>(), ring));
    }
    return out;
}

LocElem loc_elem_from(const json& j, const LocRingPtr& loc) {
    if (!j.is_object()) throw UsageError("job: a section must be an object {num, exp}");
    Elem num = parse_elem(str_field(j, "num"), loc->base());
    const json& e = field(j, "exp");
    if (!e.is_number_unsigned()) throw UsageError("job: 'exp' must be a nonnegative integer");
    return LocElem{loc, std::move(num), e.get<std::uint32_t>()};
}

std::uint64_t seed_for(const json& job, const JobOptions& opts) {
    if (opts.seed) return *opts.seed;
    auto it = job.find("seed");
    if (it != job.end() && it->is_number_unsigned()) return it->get<std::uint64_t>();
    throw UsageError("job: randomized suites need a seed ('seed' field or --seed)");
}

std::uint64_t samples_for(const json& job, const JobOptions& opts, std::uint64_t dflt) {
    if (opts.samples) return *opts.samples;
    auto it = job.find("samples");
    if (it != job.end() && it->is_number_unsigned()) return it->get<std::uint64_t>();
    return dflt;
}

std::string gens_str(const std::vector<Elem>& gens) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ", ";
        os << gens[i];
    }
    os << "]";
    return os.str();
}

std::string cert_str(const RadicalCert& c) {
    std::ostringstream os;
    os << "k=" << c.k << " coeffs=" << gens_str(c.coeffs);
    return os.str();
}

// first witness of a failed lat_leq, for the false-report
std::string leq_failure(const LatticeElt& a, const LatticeElt& b) {
    for (const auto& g : a.gens)
        if (!radical_membership(g, b.gens)) return to_string(g) + " not in sqrt" + gens_str(b.gens);
    return "unexpected: all generators are members";
}

void print_leq_certs(std::ostringstream& os, const char* tag, const LatticeElt& a,
                     const std::vector<RadicalCert>& certs) {
    for (std::size_t i = 0; i < certs.size(); ++i)
        os << tag << "[" << i + 1 << "]: " << a.gens[i] << ": " << cert_str(certs[i]) << "\n";
}

JobResult report_result(const std::ostringstream& os, bool ok) {
    return {os.str(), ok ? 0 : 1};
}

} // namespace

JobResult run_command(const json& job, const JobOptions& opts) {
    try {
        if (!job.is_object()) throw UsageError("job: top level must be an object");
        std::string cmd = str_field(job, "command");
        RingPtr ring = ring_from_json(job);
        std::ostringstream os;

        if (cmd == "normalize") {
            LatticeElt a = make_lattice_elt(ring, elems_field(job, "gens", ring));
            os << gens_str(normalize(a).gens) << "\n";
            return {os.str(), 0};
        }

        if (cmd == "lat-eq" || cmd == "lat-leq") {
            LatticeElt a = make_lattice_elt(ring, elems_field(job, "a", ring));
            LatticeElt b = make_lattice_elt(ring, elems_field(job, "b", ring));
            if (cmd == "lat-leq") {
                auto certs = lat_leq_cert(a, b);
                if (!certs) {
                    os << "false: " << leq_failure(a, b) << "\n";
                    return {os.str(), 1};
                }
                os << "true\n";
                print_leq_certs(os, "cert", a, *certs);
                return {os.str(), 0};
            }
            auto certs = lat_eq_cert(a, b);
            if (!certs) {
                os << "false: "
                   << (lat_leq(a, b) ? leq_failure(b, a) : leq_failure(a, b)) << "\n";
                return {os.str(), 1};
            }
            os << "true\n";
            print_leq_certs(os, "cert fwd", a, certs->fwd);
            print_leq_certs(os, "cert bwd", b, certs->bwd);
            return {os.str(), 0};
        }

        if (cmd == "join" || cmd == "meet") {
            LatticeElt a = make_lattice_elt(ring, elems_field(job, "a", ring));
            LatticeElt b = make_lattice_elt(ring, elems_field(job, "b", ring));
            LatticeElt r = cmd == "join" ? lat_join(a, b) : lat_meet(a, b);
            os << gens_str(r.gens) << "\n";
            return {os.str(), 0};
        }

        if (cmd == "support-check") {
            SupportReport rep;
            if (job.contains("pairs")) {
                const json& ps = field(job, "pairs");
                std::vector<std::pair<Elem, Elem>> pairs;
                for (const auto& p : ps) {
                    if (!p.is_array() || p.size() != 2)
                        throw UsageError("job: each pair must be a two-element array");
                    pairs.emplace_back(parse_elem(p[0].get<std::string>(), ring),
                                       parse_elem(p[1].get<std::string>(), ring));
                }
                rep = support_check(ring, pairs);
            } else {
                Rng rng(seed_for(job, opts));
                rep = support_suite(ring, rng, samples_for(job, opts, 100));
            }
            os << "support relations: " << rep.pairs_checked << " pairs checked, "
               << rep.violations.size() << " violations\n";
            for (const auto& v : rep.violations) os << "violation: " << v << "\n";
            return report_result(os, rep.all_ok());
        }

        if (cmd == "cover-check") {
            LatticeElt target = make_lattice_elt(ring, elems_field(job, "target", ring));
            std::vector<Elem> parts = elems_field(job, "parts", ring);
            auto cover = cover_check(target, parts);
            if (!cover) {
                // locate the first missing certificate for the report
                std::string reason;
                for (const auto& p : parts)
                    if (!radical_membership(p, target.gens)) {
                        reason = to_string(p) + " not in sqrt" + gens_str(target.gens);
                        break;
                    }
                if (reason.empty())
                    for (const auto& g : target.gens)
                        if (!radical_membership(g, parts)) {
                            reason = to_string(g) + " not in sqrt" + gens_str(parts);
                            break;
                        }
                os << "false: " << reason << "\n";
                return {os.str(), 1};
            }
            os << "true\n";
            for (std::size_t i = 0; i < parts.size(); ++i)
                os << "cert down[" << i + 1 << "]: " << parts[i] << ": "
                   << cert_str(cover->cert_down[i]) << "\n";
            for (std::size_t j = 0; j < target.gens.size(); ++j)
                os << "cert up[" << j + 1 << "]: " << target.gens[j] << ": "
                   << cert_str(cover->cert_up[j]) << "\n";
            return {os.str(), 0};
        }

        if (cmd == "is-basic") {
            LatticeElt a = make_lattice_elt(ring, elems_field(job, "gens", ring));
            BasicOpenResult r = is_basic_open(a);
            if (r.status == BasicOpenResult::Status::basic) {
                os << "basic: " << *r.generator << "\n";
                return {os.str(), 0};
            }
            os << "unknown\n";
            return {os.str(), 1};
        }

        if (cmd == "loc-eq") {
            LocRingPtr loc = LocRing::at(elem_field(job, "den", ring));
            LocElem a = loc_elem_from(field(job, "a"), loc);
            LocElem b = loc_elem_from(field(job, "b"), loc);
            auto w = loc_eq(a, b);
            if (!w) {
                os << "false\n";
                return {os.str(), 1};
            }
            os << "true (k=" << w->k << ")\n";
            return {os.str(), 0};
        }

        if (cmd == "restrict") {
            Elem f = elem_field(job, "f", ring);
            Elem g = elem_field(job, "g", ring);
            LocElem a = loc_elem_from(field(job, "elem"), LocRing::at(f));
            LocElem image = restrict_basic(a, g);
            os << to_string(image) << "\n";
            return {os.str(), 0};
        }

        if (cmd == "glue") {
            Elem h = elem_field(job, "h", ring);
            std::vector<Elem> parts = elems_field(job, "parts", ring);
            auto cover = cover_check(basic_open(h), parts);
            if (!cover) {
                os << "false: parts do not cover D(" << h << ")\n";
                return {os.str(), 1};
            }
            const json& secs = field(job, "sections");
            if (!secs.is_array() || secs.size() != parts.size())
                throw UsageError("job: 'sections' must list one {num, exp} per part");
            std::vector<LocElem> sections;
            for (std::size_t i = 0; i < parts.size(); ++i)
                sections.push_back(loc_elem_from(secs[i], LocRing::at(parts[i])));
            auto fam = check_compatible(*cover, sections);
            if (!fam) {
                os << "false: family is not compatible\n";
                return {os.str(), 1};
            }
            LocElem s = glue(h, *fam);
            os << to_string(s) << "\n";
            if (opts.verbose_certs) {
                os << "cover certs:\n";
                for (std::size_t i = 0; i < parts.size(); ++i)
                    os << "  down[" << i + 1 << "]: " << cert_str(cover->cert_down[i]) << "\n";
                os << "  up[1]: " << cert_str(cover->cert_up[0]) << "\n";
                for (std::size_t i = 0; i < fam->agreements.size(); ++i)
                    os << "  agreement[" << i + 1 << "]: k=" << fam->agreements[i].k << "\n";
            }
            return {os.str(), 0};
        }

        if (cmd == "section-eq") {
            LatticeElt over = make_lattice_elt(ring, elems_field(job, "over", ring));
            auto build = [&](const json& spec) {
                std::vector<Elem> parts = elems_field(spec, "parts", ring);
                auto cover = cover_check(over, parts);
                if (!cover) throw UsageError("section-eq: parts do not cover the element");
                const json& secs = field(spec, "sections");
                std::vector<LocElem> sections;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    sections.push_back(loc_elem_from(secs[i], LocRing::at(parts[i])));
                auto fam = check_compatible(*cover, sections);
                if (!fam) throw UsageError("section-eq: family is not compatible");
                return SheafSection{over, std::move(*fam)};
            };
            SheafSection s = build(field(job, "s"));
            SheafSection t = build(field(job, "t"));
            bool eq = section_eq(s, t);
            os << (eq ? "true" : "false") << "\n";
            return report_result(os, eq);
        }

        if (cmd == "top-roundtrip") {
            std::vector<Elem> parts = elems_field(job, "parts", ring);
            RoundtripReport rep;
            if (job.contains("elements")) {
                rep = global_sections_roundtrip(ring, parts, elems_field(job, "elements", ring));
            } else {
                Rng rng(seed_for(job, opts));
                rep = roundtrip_suite(ring, parts, rng, samples_for(job, opts, 100));
            }
            os << "roundtrip: " << rep.samples << " samples, " << rep.failures.size()
               << " failures\n";
            for (const auto& fl : rep.failures) os << "failure: " << fl << "\n";
            return report_result(os, rep.all_ok());
        }

        if (cmd == "iso-test") {
            std::string which = str_field(job, "case");
            Rng rng(seed_for(job, opts));
            std::uint64_t n = samples_for(job, opts, 100);
            SuiteReport rep;
            if (which == "iterated")
                rep = iterated_iso_suite(elem_field(job, "f", ring), elem_field(job, "g", ring),
                                         rng, n);
            else if (which == "unit")
                rep = unit_iso_suite(elem_field(job, "f", ring), rng, n);
            else if (which == "mutual")
                rep = mutual_iso_suite(elem_field(job, "f", ring), elem_field(job, "g", ring),
                                       rng, n);
            else
                throw UsageError("job: iso-test case must be iterated|unit|mutual");
            os << "iso " << which << ": " << rep.checked << " samples, " << rep.failures.size()
               << " failures\n";
            for (const auto& fl : rep.failures) os << "failure: " << fl << "\n";
            return report_result(os, rep.all_ok());
        }

        if (cmd == "sheaf-test") {
            Rng rng(seed_for(job, opts));
            std::uint64_t n = samples_for(job, opts, 50);
            SheafSuiteReport rep =
                sheaf_suite(elem_field(job, "h", ring), elem_field(job, "f", ring),
                            elem_field(job, "g", ring), rng, n, n);
            os << "sheaf condition: " << rep.compatible_checked << " compatible and "
               << rep.incompatible_checked << " incompatible pairs, " << rep.failures.size()
               << " failures\n";
            for (const auto& fl : rep.failures) os << "failure: " << fl << "\n";
            return report_result(os, rep.all_ok());
        }

        if (cmd == "verify-cert") {
            std::string kind = str_field(job, "kind");
            bool ok = false;
            if (kind == "radical") {
                RadicalCert c;
                c.k = field(job, "k").get<std::uint32_t>();
                c.coeffs = elems_field(job, "coeffs", ring);
                ok = check_radical_cert(elem_field(job, "x", ring),
                                        elems_field(job, "gens", ring), c);
            } else if (kind == "bezout") {
                ok = check_bezout_cert(elems_field(job, "gens", ring),
                                       BezoutCert{elems_field(job, "coeffs", ring)});
            } else if (kind == "ann-power") {
                ok = check_ann_power(elem_field(job, "f", ring), elem_field(job, "x", ring),
                                     AnnPowerWitness{field(job, "k").get<std::uint32_t>()});
            } else {
                throw UsageError("job: verify-cert kind must be radical|bezout|ann-power");
            }
            os << (ok ? "verified" : "invalid") << "\n";
            return report_result(os, ok);
        }

        throw UsageError("job: unknown command '" + cmd + "'");
    } catch (const UsageError& e) {
        return {std::string("error: ") + e.what() + "\n", 2};
    } catch (const ResourceError& e) {
        return {std::string("resource error: ") + e.what() + "\n", 3};
    } catch (const InternalError& e) {
        return {std::string("internal error: ") + e.what() + "\n", 3};
    }
}

JobResult run_command_text(const std::string& job_text, const JobOptions& opts) {
    json job = json::parse(job_text, nullptr, false);
    if (job.is_discarded()) return {"error: job file is not valid JSON\n", 2};
    return run_command(job, opts);
}

} // namespace zarlat
