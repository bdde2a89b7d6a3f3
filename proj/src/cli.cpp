#include "dehn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "dehn/bott_ac.hpp"
#include "dehn/classification.hpp"
#include "dehn/cross_check.hpp"
#include "dehn/groups.hpp"
#include "dehn/intmat.hpp"
#include "dehn/plumbing.hpp"
#include "dehn/snf.hpp"
#include "dehn/twist_action.hpp"

namespace dehn::cli {

namespace {

using nlohmann::json;

// Arbitrary-precision integers are rendered as decimal strings so that no
// value is ever truncated by a JSON number parser.
json jz(const mpz_class& z) { return z.get_str(); }

json jgroup(const AbelianGroupDescriptor& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion()) torsion.push_back(jz(d));
    return {{"free_rank", g.free_rank()}, {"torsion", torsion}, {"pretty", g.to_string()}};
}

json jorder(const OrderResult& r) {
    switch (r.kind()) {
        case OrderResult::Kind::infinite:
            return {{"kind", "infinite"}};
        case OrderResult::Kind::finite:
            return {{"kind", "finite"}, {"order", jz(r.finite_order())}};
        case OrderResult::Kind::bounded:
            return {{"kind", "bounded"}, {"lower", jz(r.lower())}, {"upper", jz(r.upper())}};
        case OrderResult::Kind::ambiguous: {
            json c = json::array();
            for (const auto& x : r.candidates()) c.push_back(jz(x));
            return {{"kind", "ambiguous"}, {"candidates", c}};
        }
    }
    return {};
}

json jmatrix(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(jz(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json jaction(const RelativeTwistAction& a) {
    return {{"epsilon", a.epsilon}, {"a", jz(a.a)}, {"matrix", jmatrix(a.matrix)}};
}

json jboundary(const BoundaryInvariants& b, bool with_type) {
    json out = {{"h_n", jgroup(b.h_n)}, {"h_n_plus_1", jgroup(b.h_n_plus_1)}};
    if (with_type) {
        out["sphere_type"] = to_string(b.sphere_type);
        out["notes"] = b.notes;
    }
    return out;
}

json jreport(const CrossCheckReport& r) {
    return {{"dim", r.dim},
            {"samples", r.samples},
            {"failures", r.failures},
            {"first_counterexample", r.first_counterexample}};
}

struct Outcome {
    json value;
    std::vector<std::string> human;
    std::vector<std::string> provenance;
    int exit_code = kExitOk;
};

// Citation strings for the imported (non-computed) tables.
const char* kCiteSeidelGraded = "Seidel, 'Graded Lagrangian submanifolds', Theorem 4.17";
const char* kCiteKronheimer =
    "Kronheimer's argument via the cross-product isotopy (Seidel, Lemma 6.3)";
const char* kCiteKK = "Kauffman-Krylov mapping class group extensions (their Theorem 3)";
const char* kCiteArnold =
    "Picard-Lefschetz formula in the basis {[S^n], [D]} (Arnold, ch. 2 sec. 1.3)";
const char* kCiteMilnorSpanier =
    "no fibre homotopy trivialisation of S*(S^(n+1)) unless n+1 in {1,3,7} "
    "(Milnor-Spanier, Theorem 2)";
const char* kCiteAlexander =
    "Alexander trick: the disc-supported fourth power is topologically trivial";
const char* kCiteBott = "Bott periodicity (period-8 table for pi_*(O))";
const char* kCiteOModU = "O/U is the double loop space of Z x BO";
const char* kCiteHarris = "Harris: order of pi_(2n+1)(O(2n)/U(n)) from the unstable table";
const char* kCiteUstilovsky =
    "Ustilovsky, sec. 2 (after Morita): almost-contact structures on S^(2n+1) "
    "form Z/d, the twist power's open book sitting at (k-1)/2";
const char* kCiteBrieskorn =
    "open books of twist powers are boundaries of A_(k-1) chain plumbings "
    "(cf. Kwon-van Koert, sec. 4)";
const char* kCiteHomologyCert = "relative homology action: certified unipotent, infinite order";

Outcome do_order(const std::string& category, int n) {
    const Category cat = category_from_string(category);
    const OrderResult r = twist_order(cat, n);
    Outcome o;
    o.value = {{"category", to_string(cat)}, {"n", n}, {"order", jorder(r)}};
    o.human = {"order(" + to_string(cat) + ", n=" + std::to_string(n) + ") = " + r.to_string()};
    if (n % 2 != 0) {
        o.provenance = {kCiteHomologyCert, kCiteArnold};
        return o;
    }
    switch (cat) {
        case Category::symp:
            o.provenance = {kCiteSeidelGraded};
            break;
        case Category::diff:
            if (n == 2 || n == 6) {
                o.provenance = {kCiteKronheimer,
                                "lower bound 2: homology action of the twist is nontrivial"};
            } else {
                o.provenance = {kCiteKK, kervaire_entry(2 * n + 1).citation, kCiteBrieskorn};
            }
            break;
        case Category::homeo:
        case Category::haut:
            if (n == 2 || n == 6) {
                o.provenance = {"smooth order 2 descends", kCiteKronheimer};
            } else {
                o.provenance = {kCiteAlexander, kCiteMilnorSpanier};
            }
            break;
        case Category::almost_complex:
            break;  // twist_order already rejected this
    }
    return o;
}

Outcome do_matrix(int n, unsigned long power) {
    const RelativeTwistAction act = twist_matrix(n);
    const IntMatrix m = matrix_pow(act.matrix, power);
    Outcome o;
    o.value = {{"n", n}, {"power", power}, {"matrix", jmatrix(m)}};
    if (power == 1) {
        o.value["epsilon"] = act.epsilon;
        o.value["a"] = jz(act.a);
    }
    o.human = {"twist action on H_n(D*S^n, B; Z), power " + std::to_string(power) + ": " +
               m.to_string()};
    o.provenance = {kCiteArnold};
    return o;
}

Outcome do_enumerate(int n, long range) {
    const auto actions = enumerate_homology_actions(n, range);
    Outcome o;
    json arr = json::array();
    for (const auto& a : actions) arr.push_back(jaction(a));
    o.value = {{"n", n}, {"range", range}, {"actions", arr}};
    o.human.push_back("pairing-compatible actions for n=" + std::to_string(n) + " (" +
                      std::to_string(actions.size()) + "):");
    for (const auto& a : actions) o.human.push_back("  " + a.matrix.to_string());
    o.provenance = {"exhaustive scan of (epsilon, A) against the intersection pairing "
                    "<f[D], f[S^n]> = 1",
                    kCiteArnold};
    return o;
}

Outcome do_boundary(unsigned long k, int n) {
    const BoundaryInvariants inv = open_book_boundary_homology(k, n);
    Outcome o;
    o.value = {{"k", k}, {"n", n}, {"homology", jboundary(inv, false)}};
    o.human = {"boundary of the A_" + std::to_string(k - 1) + " plumbing of D*S^" +
                   std::to_string(n + 1) + ":",
               "  H_" + std::to_string(n) + " = " + inv.h_n.to_string(),
               "  H_" + std::to_string(n + 1) + " = " + inv.h_n_plus_1.to_string()};
    o.provenance = {kCiteBrieskorn,
                    "cokernel/kernel of the chain Gram matrix via Smith normal form"};
    return o;
}

Outcome do_arf(unsigned long l) {
    const int bit = arf_a_chain(l);
    Outcome o;
    o.value = {{"l", l}, {"arf", bit}};
    o.human = {"Arf(A_" + std::to_string(l) + " chain refinement) = " + std::to_string(bit)};
    o.provenance = {"exhaustive majority count over all 2^l vectors with q = 1 on "
                    "vanishing cycles"};
    return o;
}

Outcome do_sphere_type(unsigned long k, int n) {
    const BoundaryInvariants inv = boundary_sphere_type(k, n);
    Outcome o;
    o.value = {{"k", k}, {"n", n}, {"invariants", jboundary(inv, true)}};
    o.human = {"boundary of the twist power " + std::to_string(k) + " open book (dim " +
               std::to_string(2 * n + 1) + "): " + to_string(inv.sphere_type)};
    for (const auto& note : inv.notes) o.human.push_back("  " + note);
    o.provenance = {kCiteBrieskorn,
                    "Arf invariant of the chain refinement by exhaustive majority count"};
    return o;
}

Outcome do_kervaire(int dim) {
    const KervaireEntry e = kervaire_entry(dim);
    Outcome o;
    o.value = {{"dim", dim}, {"status", to_string(e.status)}};
    o.human = {"Kervaire sphere, dimension " + std::to_string(dim) + ": " + to_string(e.status)};
    o.provenance = {e.citation};
    return o;
}

Outcome do_chi_r(int n) {
    const AbelianGroupDescriptor g = chi_r_target(n);
    Outcome o;
    o.value = {{"n", n}, {"group", jgroup(g)}};
    o.human = {"chi_r target for n=" + std::to_string(n) + ": " + g.to_string()};
    o.provenance = {kCiteKK};
    return o;
}

Outcome do_bott(unsigned long i, const std::string& space) {
    Outcome o;
    AbelianGroupDescriptor g;
    if (space == "o") {
        g = pi_o(i);
        o.provenance = {kCiteBott};
    } else if (space == "o-mod-u") {
        g = pi_o_mod_u(i);
        o.provenance = {kCiteBott, kCiteOModU};
    } else {
        throw std::invalid_argument("bott: --space must be 'o' or 'o-mod-u'");
    }
    o.value = {{"i", i}, {"space", space}, {"group", jgroup(g)}};
    o.human = {"pi_" + std::to_string(i) + "(" + (space == "o" ? "O" : "O/U") +
               ") = " + g.to_string()};
    return o;
}

Outcome do_harris(int n) {
    const mpz_class h = harris_order(n);
    Outcome o;
    o.value = {{"n", n}, {"order", jz(h)}};
    o.human = {"|pi_" + std::to_string(2 * n + 1) + "(O(" + std::to_string(2 * n) + ")/U(" +
               std::to_string(n) + "))| = " + h.get_str()};
    o.provenance = {kCiteHarris};
    return o;
}

Outcome do_contact_class(long k, int n) {
    const ContactClass c = ustilovsky_class(k, n);
    Outcome o;
    o.value = {{"k", k}, {"n", n}, {"residue", jz(c.residue)}, {"modulus", jz(c.modulus)}};
    o.human = {"almost-contact class of the power-" + std::to_string(k) + " open book: " +
               c.residue.get_str() + " mod " + c.modulus.get_str()};
    o.provenance = {kCiteUstilovsky};
    return o;
}

Outcome do_ac_bounds(int n) {
    const OrderResult r = ac_order_bounds(n);
    Outcome o;
    o.value = {{"n", n}, {"lower", jz(r.lower())}, {"upper", jz(r.upper())}};
    o.human = {"almost-complex order for n=" + std::to_string(n) + ": " + r.to_string()};
    o.provenance = {kCiteHarris, kCiteUstilovsky};
    if (n == 2) {
        o.provenance.push_back("lower bound 2 taken from the smooth order (the factorial "
                               "bound degenerates at n=2)");
    }
    return o;
}

Outcome do_ac_consistent(int n) {
    const auto orders = ac_consistent_orders(n);
    Outcome o;
    json arr = json::array();
    for (const auto& m : orders) arr.push_back(jz(m));
    o.value = {{"n", n}, {"orders", arr}};
    std::ostringstream line;
    line << "almost-complex order candidates for n=" << n << ":";
    for (const auto& m : orders) line << ' ' << m;
    o.human = {line.str()};
    o.provenance = {"even divisors of 16 n! passing the almost-contact residue "
                    "obstruction along k = 1 mod 8",
                    kCiteUstilovsky};
    return o;
}

Outcome do_cross_selftest(int dim, std::size_t samples, std::uint64_t seed,
                          std::size_t rotation_samples) {
    Outcome o;
    json reports = json::array();
    std::size_t failures = 0;
    std::vector<std::size_t> dims = dim == 0 ? std::vector<std::size_t>{3, 7}
                                             : std::vector<std::size_t>{static_cast<std::size_t>(dim)};
    for (std::size_t d : dims) {
        const CrossCheckReport r = verify_cross_identities(d, samples, seed);
        failures += r.failures;
        reports.push_back(jreport(r));
        o.human.push_back("dim " + std::to_string(d) + ": " + std::to_string(r.samples) +
                          " samples, " + std::to_string(r.failures) + " failures" +
                          (r.failures ? " (" + r.first_counterexample + ")" : ""));
        if (rotation_samples > 0) {
            const std::size_t fixed = rotation_sample_pass_count(d, rotation_samples, seed + d);
            reports.back()["rotation_samples"] = rotation_samples;
            reports.back()["rotation_fixed"] = fixed;
            failures += rotation_samples - fixed;
            o.human.push_back("dim " + std::to_string(d) + ": rotation fixes u on " +
                              std::to_string(fixed) + "/" + std::to_string(rotation_samples) +
                              " samples");
        }
    }
    o.value = {{"reports", reports}, {"all_passed", failures == 0}};
    o.provenance = {"cross-product identities checked exactly over Q; the 7-dimensional "
                    "table comes from the Cayley-Dickson octonion product"};
    if (failures != 0) {
        o.exit_code = kExitInternal;
    }
    return o;
}

void emit(const Outcome& o, const std::string& command, bool json_mode, std::ostream& out) {
    if (json_mode) {
        json envelope = {{"command", command},
                         {"status", o.exit_code == kExitOk ? "ok" : "error"},
                         {"value", o.value},
                         {"provenance", o.provenance}};
        out << envelope.dump(2) << '\n';
        return;
    }
    for (const auto& line : o.human) out << line << '\n';
    for (const auto& p : o.provenance) out << "  -- " << p << '\n';
}

void emit_error(const std::string& command, const std::string& message, bool json_mode,
                std::ostream& out, std::ostream& err) {
    if (json_mode) {
        json envelope = {{"command", command}, {"status", "error"}, {"error", message}};
        out << envelope.dump(2) << '\n';
    } else {
        err << "error: " << message << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculator for Dehn twist orders, plumbing boundaries and "
                 "almost-complex bounds on T*S^n"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit a single JSON object");

    std::function<Outcome()> action;
    std::string command;

    // order
    {
        auto* sub = app.add_subcommand("order", "order of the twist in a mapping class group");
        sub->fallthrough();
        auto category = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        sub->add_option("--category", *category, "symp | diff | homeo | haut")->required();
        sub->add_option("--n", *n, "sphere dimension (>= 2)")->required();
        sub->callback([&, category, n] {
            command = "order";
            action = [category, n] { return do_order(*category, *n); };
        });
    }
    // matrix
    {
        auto* sub = app.add_subcommand("matrix", "twist action on relative middle homology");
        sub->fallthrough();
        auto n = std::make_shared<int>(0);
        auto power = std::make_shared<unsigned long>(1);
        sub->add_option("--n", *n, "sphere dimension (>= 1)")->required();
        sub->add_option("--power", *power, "matrix power (default 1)");
        sub->callback([&, n, power] {
            command = "matrix";
            action = [n, power] { return do_matrix(*n, *power); };
        });
    }
    // enumerate-actions
    {
        auto* sub = app.add_subcommand("enumerate-actions",
                                       "all pairing-compatible homology actions (even n)");
        sub->fallthrough();
        auto n = std::make_shared<int>(0);
        auto range = std::make_shared<long>(16);
        sub->add_option("--n", *n, "even sphere dimension")->required();
        sub->add_option("--range", *range, "scan |A| <= range (default 16)");
        sub->callback([&, n, range] {
            command = "enumerate-actions";
            action = [n, range] { return do_enumerate(*n, *range); };
        });
    }
    // boundary
    {
        auto* sub = app.add_subcommand("boundary", "homology of the twist-power open book");
        sub->fallthrough();
        auto k = std::make_shared<unsigned long>(0);
        auto n = std::make_shared<int>(0);
        sub->add_option("--k", *k, "twist power (>= 2)")->required();
        sub->add_option("--n", *n, "even sphere dimension")->required();
        sub->callback([&, k, n] {
            command = "boundary";
            action = [k, n] { return do_boundary(*k, *n); };
        });
    }
    // arf
    {
        auto* sub = app.add_subcommand("arf", "Arf invariant of the even A_l chain refinement");
        sub->fallthrough();
        auto l = std::make_shared<unsigned long>(0);
        sub->add_option("--l", *l, "even chain length (2..24)")->required();
        sub->callback([&, l] {
            command = "arf";
            action = [l] { return do_arf(*l); };
        });
    }
    // sphere-type
    {
        auto* sub = app.add_subcommand("sphere-type",
                                       "sphere classification of the twist-power open book");
        sub->fallthrough();
        auto k = std::make_shared<unsigned long>(0);
        auto n = std::make_shared<int>(0);
        sub->add_option("--k", *k, "twist power (>= 2)")->required();
        sub->add_option("--n", *n, "even sphere dimension")->required();
        sub->callback([&, k, n] {
            command = "sphere-type";
            action = [k, n] { return do_sphere_type(*k, *n); };
        });
    }
    // kervaire
    {
        auto* sub = app.add_subcommand("kervaire", "Kervaire sphere status table");
        sub->fallthrough();
        auto dim = std::make_shared<int>(0);
        sub->add_option("--dim", *dim, "sphere dimension, 1 mod 4, >= 5")->required();
        sub->callback([&, dim] {
            command = "kervaire";
            action = [dim] { return do_kervaire(*dim); };
        });
    }
    // chi-r
    {
        auto* sub = app.add_subcommand("chi-r", "target group of the chi_r homomorphism");
        sub->fallthrough();
        auto n = std::make_shared<int>(0);
        sub->add_option("--n", *n, "even sphere dimension >= 4")->required();
        sub->callback([&, n] {
            command = "chi-r";
            action = [n] { return do_chi_r(*n); };
        });
    }
    // bott
    {
        auto* sub = app.add_subcommand("bott", "homotopy groups of O and O/U");
        sub->fallthrough();
        auto i = std::make_shared<unsigned long>(0);
        auto space = std::make_shared<std::string>("o");
        sub->add_option("--i", *i, "degree")->required();
        sub->add_option("--space", *space, "o | o-mod-u (default o)");
        sub->callback([&, i, space] {
            command = "bott";
            action = [i, space] { return do_bott(*i, *space); };
        });
    }
    // harris
    {
        auto* sub = app.add_subcommand("harris", "order of pi_(2n+1)(O(2n)/U(n))");
        sub->fallthrough();
        auto n = std::make_shared<int>(0);
        sub->add_option("--n", *n, "even n >= 2")->required();
        sub->callback([&, n] {
            command = "harris";
            action = [n] { return do_harris(*n); };
        });
    }
    // contact-class
    {
        auto* sub = app.add_subcommand("contact-class",
                                       "almost-contact class of a twist-power open book");
        sub->fallthrough();
        auto k = std::make_shared<long>(0);
        auto n = std::make_shared<int>(0);
        sub->add_option("--k", *k, "twist power, +/-1 mod 8")->required();
        sub->add_option("--n", *n, "even n >= 2")->required();
        sub->callback([&, k, n] {
            command = "contact-class";
            action = [k, n] { return do_contact_class(*k, *n); };
        });
    }
    // ac-bounds
    {
        auto* sub = app.add_subcommand("ac-bounds", "almost-complex order bounds");
        sub->fallthrough();
        auto n = std::make_shared<int>(0);
        sub->add_option("--n", *n, "even n >= 2")->required();
        sub->callback([&, n] {
            command = "ac-bounds";
            action = [n] { return do_ac_bounds(*n); };
        });
    }
    // ac-consistent
    {
        auto* sub = app.add_subcommand("ac-consistent",
                                       "almost-complex orders surviving the residue filter");
        sub->fallthrough();
        auto n = std::make_shared<int>(0);
        sub->add_option("--n", *n, "n in {4, 6, 8}")->required();
        sub->callback([&, n] {
            command = "ac-consistent";
            action = [n] { return do_ac_consistent(*n); };
        });
    }
    // cross-selftest
    {
        auto* sub = app.add_subcommand("cross-selftest",
                                       "exact cross-product identity and rotation suite");
        sub->fallthrough();
        auto dim = std::make_shared<int>(0);
        auto samples = std::make_shared<std::size_t>(1000);
        auto seed = std::make_shared<std::uint64_t>(20240528ULL);
        auto rotation = std::make_shared<std::size_t>(1000);
        sub->add_option("--dim", *dim, "3 or 7 (default: both)")
            ->check(CLI::IsMember({0, 3, 7}));
        sub->add_option("--samples", *samples, "identity samples (default 1000)");
        sub->add_option("--seed", *seed, "PRNG seed");
        sub->add_option("--rotation-samples", *rotation, "rotation samples (default 1000)");
        sub->callback([&, dim, samples, seed, rotation] {
            command = "cross-selftest";
            action = [dim, samples, seed, rotation] {
                return do_cross_selftest(*dim, *samples, *seed, *rotation);
            };
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        const Outcome o = action();
        emit(o, command, json_mode, out);
        return o.exit_code;
    } catch (const order_search_exceeded& e) {
        emit_error(command, e.what(), json_mode, out, err);
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        emit_error(command, e.what(), json_mode, out, err);
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        emit_error(command, e.what(), json_mode, out, err);
        return kExitPrecondition;
    } catch (const std::exception& e) {
        emit_error(command, e.what(), json_mode, out, err);
        return kExitInternal;
    }
}

}  // namespace dehn::cli
