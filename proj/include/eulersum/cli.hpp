#pragma once

// Command-line front end: node parsing, the five verbs, and their text/JSON
// rendering. Everything returns a RunResult so the same code path is testable
// without spawning a process.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "errors.hpp"
#include "nodes.hpp"
#include "nodeset.hpp"
#include "partfrac.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "symmetric.hpp"

namespace eulersum::cli {

using json = nlohmann::ordered_json;

enum class Verb { weights, table, decompose, symmetric, verify };
enum class Format { text, json };

struct Command {
    Verb verb = Verb::weights;
    NodeSet nodes;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> nmax;
    std::optional<std::int64_t> kmax;
    Format format = Format::text;
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Multiset enumerations larger than this are skipped by the brute-force checks.
inline constexpr std::uint64_t brute_force_limit = 200000;

inline const char* verb_name(Verb v)
{
    switch (v) {
    case Verb::weights:
        return "weights";
    case Verb::table:
        return "table";
    case Verb::decompose:
        return "decompose";
    case Verb::symmetric:
        return "symmetric";
    case Verb::verify:
        return "verify";
    }
    return "?";
}

/// Integers or fractions "p/q" (optional leading minus) separated by commas
/// and/or whitespace. A leading '@' reads the same grammar from a file.
inline NodeSet parse_nodes(std::string_view text)
{
    std::string buffer;
    if (!text.empty() && text.front() == '@') {
        std::string path(text.substr(1));
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw Error("cannot read node file '" + path + "'");
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        buffer = ss.str();
        text = buffer;
    }

    auto is_separator = [](char c) {
        return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    };

    std::vector<Rational> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (is_separator(text[pos])) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_separator(text[end])) {
            ++end;
        }
        std::string token(text.substr(pos, end - pos));
        try {
            values.push_back(Rational::parse(token));
        } catch (const std::invalid_argument&) {
            throw ParseError(pos, token);
        } catch (const std::domain_error&) {
            throw ParseError(pos, token, "zero denominator");
        }
        pos = end;
    }
    return NodeSet(std::move(values));
}

namespace detail {

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(std::span<const Rational> values)
{
    json arr = json::array();
    for (const auto& v : values) {
        arr.push_back(v.str());
    }
    return arr;
}

inline json to_json(const std::vector<Rational>& values) { return to_json(std::span<const Rational>(values)); }

inline json to_json(const CommonDenominator& c)
{
    json nums = json::array();
    for (const auto& v : c.numerators) {
        nums.push_back(v.str());
    }
    return {{"numerators", nums}, {"denominator", c.denominator.str()}};
}

inline std::string join(std::span<const Rational> values, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? sep : "") + values[i].str();
    }
    return out;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// C(m + k - 1, k) saturated at limit + 1.
inline std::uint64_t multiset_count(std::uint64_t m, std::uint64_t k, std::uint64_t limit)
{
    Integer c(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (m + i - 1) / i;
        if (c > limit) {
            return limit + 1;
        }
    }
    return static_cast<std::uint64_t>(c);
}

inline bool brute_force_affordable(std::size_t m, std::size_t k)
{
    return multiset_count(m, k, brute_force_limit) <= brute_force_limit;
}

inline bool signs_alternate(const NodeSet& ns, const DiffProducts& prods)
{
    const std::size_t m = ns.size();
    for (std::size_t i = 0; i < m; ++i) {
        int expected = (m - 1 - i) % 2 == 0 ? 1 : -1;
        if (prods.products[i].sign() != expected) {
            return false;
        }
    }
    return true;
}

inline std::string header_line(const NodeSet& ns)
{
    return "nodes: " + join(ns.values()) + " (m = " + std::to_string(ns.size()) + ")\n";
}

inline json base_json(const Command& cmd)
{
    return {{"verb", verb_name(cmd.verb)}, {"nodes", to_json(cmd.nodes.values())}, {"m", cmd.nodes.size()}};
}

inline std::int64_t default_depth(const NodeSet& ns) { return static_cast<std::int64_t>(ns.size()) + 4; }

inline std::int64_t require_nonnegative(std::optional<std::int64_t> value, std::int64_t fallback)
{
    std::int64_t v = value.value_or(fallback);
    if (v < 0) {
        throw NegativeExponent(v);
    }
    return v;
}

inline std::string pad(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

inline RunResult finish(const Command& cmd, json& doc, std::string text, bool ok)
{
    doc["all_identities_hold"] = ok;
    RunResult r;
    r.exit_code = ok ? exit_ok : exit_verification_failed;
    if (cmd.format == Format::json) {
        r.out = doc.dump(2) + "\n";
    } else {
        r.out = std::move(text);
    }
    if (!ok) {
        r.err = std::string(verb_name(cmd.verb)) + ": identity check failed\n";
    }
    return r;
}

inline RunResult run_weights(const Command& cmd)
{
    const NodeSet& ns = cmd.nodes;
    const std::int64_t n = require_nonnegative(cmd.n, 0);
    const auto prods = diff_products(ns);
    const auto table = alternating_display(ns, n);
    const bool derivative_ok = diff_products_via_derivative(ns) == prods;
    const bool parity_ok = signs_alternate(ns, prods);
    const Rational sum = euler_sum(ns, n);
    const bool sum_ok = sum == expected_euler_sum(ns, n);

    std::ostringstream text;
    text << header_line(ns);
    text << pad("node", 12) << pad("product", 20) << "displayed\n";
    json rows = json::array();
    for (const auto& row : table.rows) {
        std::string shown = std::string(row.displayed_sign > 0 ? "+" : "-") + row.numerator.str() + "/" +
                            row.magnitude.str();
        text << pad(row.node.str(), 12) << pad(row.signed_denominator.str(), 20) << shown << "\n";
        rows.push_back({{"node", row.node.str()},
                        {"product", row.signed_denominator.str()},
                        {"magnitude", row.magnitude.str()},
                        {"sign", row.displayed_sign > 0 ? "+" : "-"},
                        {"numerator", row.numerator.str()}});
    }

    Rational scaled_sum;
    std::string numerators;
    for (std::size_t i = 0; i < table.common.numerators.size(); ++i) {
        const Integer& v = table.common.numerators[i];
        scaled_sum += Rational(v);
        if (i == 0) {
            numerators += v.str();
        } else {
            numerators += v < 0 ? " - " + Integer(-v).str() : " + " + v.str();
        }
    }
    scaled_sum /= Rational(table.common.denominator);
    text << "multiplied by " << table.scale << ": (" << numerators << ")/" << table.common.denominator.str()
         << " = " << scaled_sum << "\n";
    text << "sum of a^" << n << "/A = " << sum << "\n";

    json doc = base_json(cmd);
    doc["n"] = n;
    doc["products"] = to_json(prods.products);
    doc["rows"] = rows;
    doc["scale"] = table.scale.str();
    doc["common_denominator"] = to_json(table.common);
    doc["sum"] = sum.str();
    return finish(cmd, doc, text.str(), derivative_ok && parity_ok && sum_ok);
}

inline RunResult run_table(const Command& cmd)
{
    const NodeSet& ns = cmd.nodes;
    const std::int64_t nmax = require_nonnegative(cmd.nmax, default_depth(ns));
    const auto prods = diff_products(ns);
    const auto display = alternating_display(ns, 0);

    std::ostringstream text;
    text << header_line(ns);
    text << pad("n", 6) << pad("sum", 24) << pad("expected", 24) << "match\n";
    json rows = json::array();
    bool all = true;
    for (std::int64_t n = 0; n <= nmax; ++n) {
        const Rational sum = euler_sum(ns, n);
        const Rational expected = expected_euler_sum(ns, n);
        const bool match = sum == expected;
        all = all && match;
        text << pad(std::to_string(n), 6) << pad(sum.str(), 24) << pad(expected.str(), 24) << yes_no(match)
             << "\n";
        rows.push_back({{"n", n}, {"sum", sum.str()}, {"expected", expected.str()}, {"match", match}});
    }

    std::vector<Rational> magnitudes;
    for (const auto& row : display.rows) {
        magnitudes.push_back(row.magnitude);
    }

    json doc = base_json(cmd);
    doc["nmax"] = nmax;
    doc["products"] = to_json(prods.products);
    doc["magnitudes"] = to_json(magnitudes);
    doc["scale"] = display.scale.str();
    doc["common_denominator"] = to_json(display.common);
    doc["rows"] = rows;
    return finish(cmd, doc, text.str(), all);
}

inline RunResult run_decompose(const Command& cmd)
{
    const NodeSet& ns = cmd.nodes;
    // default: one more than the pole count, where the polynomial part is x + (sum of poles)
    const std::int64_t n = require_nonnegative(cmd.n, static_cast<std::int64_t>(ns.size()) + 1);
    const auto pfd = decompose(n, ns);
    const bool ok = reconstruct(pfd);

    std::ostringstream text;
    text << header_line(ns);
    text << "x^" << n << " / prod(x - a_i)\n";
    text << "polynomial part: " << to_string(pfd.polynomial_part) << "\n";
    text << pad("pole", 12) << "residue\n";
    for (std::size_t i = 0; i < ns.size(); ++i) {
        text << pad(ns[i].str(), 12) << pfd.residues[i] << "\n";
    }
    text << "reconstructs: " << yes_no(ok) << "\n";

    json doc = base_json(cmd);
    doc["decomposition"] = {{"n", n},
                            {"poles", to_json(ns.values())},
                            {"polynomial_part", to_json(pfd.polynomial_part.coeffs())},
                            {"polynomial_part_text", to_string(pfd.polynomial_part)},
                            {"residues", to_json(pfd.residues)},
                            {"reconstructs", ok}};
    return finish(cmd, doc, text.str(), ok);
}

inline RunResult run_symmetric(const Command& cmd)
{
    const NodeSet& ns = cmd.nodes;
    const auto kmax = static_cast<std::size_t>(require_nonnegative(cmd.kmax, default_depth(ns)));
    const auto e = elementary_all(ns, kmax);
    const auto p = power_sums(ns, kmax);
    const auto h_e = homogeneous_via_elementary(e, kmax);
    const auto h_p = homogeneous_via_power_sums(p, kmax);
    const auto p_newton = newton_power_from_elementary(e, kmax);

    json brute = json::array();
    bool brute_ok = true;
    std::vector<std::string> brute_text;
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (brute_force_affordable(ns.size(), k)) {
            Rational v = homogeneous_brute_force(ns, k);
            brute_ok = brute_ok && v == h_e[k];
            brute.push_back(v.str());
            brute_text.push_back(v.str());
        } else {
            brute.push_back(nullptr);
            brute_text.push_back("-");
        }
    }
    const bool recurrences_agree = h_e == h_p;
    const bool newton_ok = p_newton == p;

    std::ostringstream text;
    text << header_line(ns);
    text << pad("k", 4) << pad("e_k", 20) << pad("p_k", 20) << pad("h_k (e)", 20) << pad("h_k (p)", 20)
         << "h_k (enum)\n";
    for (std::size_t k = 0; k <= kmax; ++k) {
        text << pad(std::to_string(k), 4) << pad(e[k].str(), 20) << pad(k == 0 ? "-" : p[k - 1].str(), 20)
             << pad(h_e[k].str(), 20) << pad(h_p[k].str(), 20) << brute_text[k] << "\n";
    }
    text << "recurrences agree: " << yes_no(recurrences_agree) << "\n";
    text << "enumeration agrees: " << yes_no(brute_ok) << "\n";
    text << "newton p from e agrees: " << yes_no(newton_ok) << "\n";

    json doc = base_json(cmd);
    doc["tables"] = {{"kmax", kmax},
                     {"e", to_json(e)},
                     {"p", to_json(p)},
                     {"h_via_elementary", to_json(h_e)},
                     {"h_via_power_sums", to_json(h_p)},
                     {"h_brute_force", brute},
                     {"p_via_newton", to_json(p_newton)},
                     {"recurrences_agree", recurrences_agree},
                     {"brute_force_agrees", brute_ok},
                     {"newton_agrees", newton_ok}};
    return finish(cmd, doc, text.str(), recurrences_agree && brute_ok && newton_ok);
}

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Every identity the library knows, exercised on one node set.
inline std::vector<Check> verify_checks(const NodeSet& ns, std::size_t nmax, std::size_t kmax)
{
    std::vector<Check> checks;
    auto add = [&checks](std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const std::size_t m = ns.size();
    const auto prods = diff_products(ns);

    add("sign_parity", signs_alternate(ns, prods));
    add("derivative_agreement", diff_products_via_derivative(ns) == prods);

    {
        const Rational shift(Integer(7), Integer(3));
        bool ok = diff_products(ns.translated(shift)) == prods;
        add("translation_invariance", ok, "shift 7/3");

        const Rational c(Integer(-3), Integer(2));
        const Rational cm = pow(c, m - 1);
        const auto scaled = diff_products(ns.scaled(c));
        bool scale_ok = true;
        for (std::size_t i = 0; i < m; ++i) {
            // a negative factor reverses the ascending order
            scale_ok = scale_ok && scaled.products[m - 1 - i] == cm * prods.products[i];
        }
        add("scaling_covariance", scale_ok, "factor -3/2");
    }

    bool zero_regime = true;
    bool closed_form = true;
    bool brute = true;
    bool skipped_brute = false;
    bool proof_path = true;
    bool recon = true;
    bool ladder = true;
    const Polynomial w = poly_from_roots(ns.values());
    for (std::size_t n = 0; n <= nmax; ++n) {
        const auto ni = static_cast<std::int64_t>(n);
        const Rational sum = euler_sum(ns, ni);
        if (n + 2 <= m) {
            zero_regime = zero_regime && sum.is_zero();
        } else {
            closed_form = closed_form && sum == expected_euler_sum(ns, ni);
            const std::size_t k = n + 1 - m;
            if (brute_force_affordable(m, k)) {
                brute = brute && sum == homogeneous_brute_force(ns, k);
            } else {
                skipped_brute = true;
            }
        }
        if (m >= 2) {
            proof_path = proof_path && euler_sum_via_decomposition(ns, ni) == sum;
        }
        const auto pfd = decompose(ni, ns);
        recon = recon && reconstruct(pfd);
        ladder = ladder && poly_divmod(Polynomial::monomial(Rational(1), n), w).quotient == pfd.polynomial_part;
    }
    add("zero_sums", zero_regime, "n <= m-2");
    add("closed_form", closed_form, "n >= m-1");
    add("closed_form_enumeration", brute, skipped_brute ? "some large cases skipped" : "");
    add("decomposition_path", proof_path, m >= 2 ? "" : "needs m >= 2");
    add("reconstruction", recon);
    add("integral_part_division", ladder);

    const auto e = elementary_all(ns, kmax);
    const auto p = power_sums(ns, kmax);
    const auto h_e = homogeneous_via_elementary(e, kmax);
    add("homogeneous_recurrences", h_e == homogeneous_via_power_sums(p, kmax));
    add("homogeneous_series", h_e == homogeneous_via_series(ns, kmax));
    bool h_brute = true;
    bool h_skipped = false;
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (brute_force_affordable(m, k)) {
            h_brute = h_brute && homogeneous_brute_force(ns, k) == h_e[k];
        } else {
            h_skipped = true;
        }
    }
    add("homogeneous_enumeration", h_brute, h_skipped ? "some large cases skipped" : "");
    add("newton_identities", newton_power_from_elementary(e, kmax) == p);

    const auto e5 = elementary_all(ns, 5);
    bool expansions = true;
    for (std::size_t k = 0; k <= 5; ++k) {
        expansions = expansions && homogeneous_explicit(e5, k) == homogeneous_via_elementary(e5, 5)[k];
    }
    add("explicit_expansions", expansions, "h_0..h_5");
    return checks;
}

inline RunResult run_verify(const Command& cmd)
{
    const NodeSet& ns = cmd.nodes;
    const auto nmax = static_cast<std::size_t>(require_nonnegative(cmd.nmax, default_depth(ns)));
    const auto kmax = static_cast<std::size_t>(require_nonnegative(cmd.kmax, default_depth(ns)));
    const auto checks = verify_checks(ns, nmax, kmax);

    std::ostringstream text;
    text << header_line(ns);
    json arr = json::array();
    bool all = true;
    for (const auto& c : checks) {
        all = all && c.pass;
        text << (c.pass ? "PASS " : "FAIL ") << pad(c.name, 26) << c.detail << "\n";
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    text << (all ? "all identities hold\n" : "some identities FAILED\n");

    json doc = base_json(cmd);
    doc["nmax"] = nmax;
    doc["kmax"] = kmax;
    doc["checks"] = arr;
    return finish(cmd, doc, text.str(), all);
}

} // namespace detail

inline RunResult run(const Command& cmd)
{
    try {
        switch (cmd.verb) {
        case Verb::weights:
            return detail::run_weights(cmd);
        case Verb::table:
            return detail::run_table(cmd);
        case Verb::decompose:
            return detail::run_decompose(cmd);
        case Verb::symmetric:
            return detail::run_symmetric(cmd);
        case Verb::verify:
            return detail::run_verify(cmd);
        }
    } catch (const Error& e) {
        return {exit_usage, {}, std::string("error: ") + e.what() + "\n"};
    }
    return {exit_usage, {}, "error: unknown verb\n"};
}

/// Parses argv-style arguments (without the program name) and runs the command.
inline RunResult run_cli(const std::vector<std::string>& args)
{
    CLI::App app{"Exact difference-product sums, partial fractions and symmetric functions"};
    app.require_subcommand(1);

    struct Options {
        std::string nodes;
        std::optional<std::int64_t> n;
        std::optional<std::int64_t> nmax;
        std::optional<std::int64_t> kmax;
        std::string format = "text";
    };
    Options opts;

    const std::vector<std::pair<Verb, std::string>> verbs = {
        {Verb::weights, "signed difference products with the alternating-sign display"},
        {Verb::table, "sums of a^n/A against their closed form for n = 0..nmax"},
        {Verb::decompose, "partial fractions of x^n / prod(x - a_i)"},
        {Verb::symmetric, "elementary, power-sum and complete homogeneous tables"},
        {Verb::verify, "run every identity check; exit 0 iff all hold"},
    };
    std::vector<std::pair<Verb, CLI::App*>> subs;
    for (const auto& [verb, help] : verbs) {
        CLI::App* sub = app.add_subcommand(verb_name(verb), help);
        sub->add_option("nodes", opts.nodes, "nodes, e.g. \"3 8 12\" or \"1/2,-3\" or @file")->required();
        if (verb == Verb::weights || verb == Verb::decompose) {
            sub->add_option("--n", opts.n, "exponent");
        }
        if (verb == Verb::table || verb == Verb::verify) {
            sub->add_option("--nmax", opts.nmax, "largest exponent (default m+4)");
        }
        if (verb == Verb::symmetric || verb == Verb::verify) {
            sub->add_option("--kmax", opts.kmax, "largest symmetric degree (default m+4)");
        }
        sub->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"text", "json"}));
        subs.emplace_back(verb, sub);
    }

    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {exit_ok, app.help(), {}};
    } catch (const CLI::CallForAllHelp&) {
        return {exit_ok, app.help("", CLI::AppFormatMode::All), {}};
    } catch (const CLI::ParseError& e) {
        return {exit_usage, {}, std::string("error: ") + e.what() + "\n" + "run with --help for usage\n"};
    }

    Verb verb = Verb::weights;
    for (const auto& [v, sub] : subs) {
        if (sub->parsed()) {
            verb = v;
        }
    }

    try {
        Command cmd{verb, parse_nodes(opts.nodes), opts.n, opts.nmax, opts.kmax,
                    opts.format == "json" ? Format::json : Format::text};
        return run(cmd);
    } catch (const Error& e) {
        return {exit_usage, {}, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace eulersum::cli
