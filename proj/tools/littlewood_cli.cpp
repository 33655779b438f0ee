// littlewood - command-line front end: construct extremal forms, compute
// mixed and operator norms, report constant bounds, run verification
// suites and sweep the sharp 3-linear region to CSV.

#include "littlewood/littlewood.hpp"
#include "littlewood/serialize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace littlewood;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        out.push_back(item);
    return out;
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    for (const auto& tok : split(text, ','))
        out.push_back(std::stoi(tok));
    return out;
}

ExponentVector parse_q(const std::string& text)
{
    try {
        return ExponentVector::parse(split(text, ','));
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid exponent list: ") + e.what());
    }
}

struct FormOptions {
    std::string kind = "T";
    int m = 0;
    bool full_domain = false;
    std::string dims;
    std::uint64_t seed = 0;
    std::string file;
};

void add_form_options(CLI::App* cmd, FormOptions& opt)
{
    cmd->add_option("--form", opt.kind, "form source: T, L, random or file")
        ->check(CLI::IsMember({"T", "L", "random", "file"}));
    cmd->add_option("--m", opt.m, "arity for T/L");
    cmd->add_flag("--full-domain", opt.full_domain, "use 2^(m-1) in every slot");
    cmd->add_option("--dims", opt.dims, "comma-separated dims for random forms");
    cmd->add_option("--seed", opt.seed, "seed for random forms");
    cmd->add_option("--file", opt.file, "path to a form JSON file");
}

MultilinearForm load_form(const FormOptions& opt)
{
    if (opt.kind == "T" || opt.kind == "L") {
        if (opt.m == 0)
            throw UsageError("--m is required for form " + opt.kind);
        try {
            return opt.kind == "T" ? construct_T(opt.m, opt.full_domain)
                                   : construct_L(opt.m, opt.full_domain);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (opt.kind == "random") {
        if (opt.dims.empty())
            throw UsageError("--dims is required for random forms");
        return random_form(parse_int_list(opt.dims), opt.seed);
    }
    std::ifstream in(opt.file);
    if (!in)
        throw UsageError("cannot open form file: " + opt.file);
    nlohmann::json j;
    in >> j;
    return form_from_json(j);
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open output file: " + path);
    out << text;
}

/// "2..6" or a single integer.
std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int cmd_construct(const FormOptions& opt, const std::string& output)
{
    if (opt.kind != "T" && opt.kind != "L")
        throw UsageError("construct supports --form T or L");
    write_output(output, to_json(load_form(opt)).dump(2) + "\n");
    return 0;
}

int cmd_mixed_norm(const FormOptions& opt, const std::string& q_text, bool require_admissible,
                   const std::string& output)
{
    const MultilinearForm form = load_form(opt);
    const ExponentVector q = parse_q(q_text);
    if (q.size() != form.arity())
        throw UsageError("exponent count does not match form arity");
    if (require_admissible && !q.admissible(AdmissibilityMode::inequality))
        throw UsageError("exponent vector is not admissible");
    nlohmann::json report;
    try {
        const DyadicScalar exact = mixed_norm_exact(form, q);
        report = {{"log2", to_string(exact.log2())}, {"value", exact.value()}, {"exact", true}};
    } catch (const std::exception&) {
        // NotDyadic or non-unimodular coefficients: fall back to the float path.
        report = {{"value", mixed_norm(form, q)}, {"exact", false}};
    }
    write_output(output, report.dump(2) + "\n");
    return 0;
}

int cmd_opnorm(const FormOptions& opt, bool full, int threads, const std::string& output)
{
    const MultilinearForm form = load_form(opt);
    NormResult result;
    try {
        result = full ? operator_norm_full(form) : operator_norm(form, threads);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    write_output(output, to_json(result).dump(2) + "\n");
    return 0;
}

int cmd_bounds(int m, const std::string& q_text, const std::string& output)
{
    if (m < 2)
        throw UsageError("--m >= 2 is required");
    nlohmann::json reports = nlohmann::json::array();
    reports.push_back(to_json(bh_lower_real(m)));
    reports.push_back(to_json(bh_upper_real(m)));
    reports.push_back(to_json(bh_upper_complex(m)));
    reports.push_back(to_json(mixed_littlewood_upper(m, ScalarField::real)));
    reports.push_back(to_json(mixed_littlewood_upper(m, ScalarField::complex)));
    if (!q_text.empty()) {
        const ExponentVector q = parse_q(q_text);
        try {
            reports.push_back(to_json(lower_bound_pos1(m, q)));
            reports.push_back(to_json(lower_bound_pos2(m, q)));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    write_output(output, reports.dump(2) + "\n");
    return 0;
}

int cmd_interpolate(const std::string& anchors_text, const std::string& weights_text,
                    const std::string& q_text, const std::string& output)
{
    std::vector<ExponentVector> anchors;
    for (const auto& tok : split(anchors_text, ';'))
        anchors.push_back(parse_q(tok));
    if (anchors.empty())
        throw UsageError("--anchors is required");

    nlohmann::json report;
    if (!weights_text.empty()) {
        std::vector<Rational> weights;
        for (const auto& tok : split(weights_text, ','))
            weights.push_back(parse_rational(tok));
        try {
            report["q"] = to_json(interpolate_exponents(anchors, weights));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (!q_text.empty()) {
        const ExponentVector q = parse_q(q_text);
        std::vector<std::vector<Rational>> vertex_recips;
        for (const auto& a : anchors)
            vertex_recips.push_back(reciprocals(a));
        auto cert = in_convex_hull(reciprocals(q), vertex_recips);
        report["in_hull"] = cert.has_value();
        if (cert)
            report["certificate"] = to_json(*cert);
        auto upper = interpolated_upper(q.size(), q, anchors);
        if (upper)
            report["upper_bound"] = to_json(*upper);
    } else {
        throw UsageError("interpolate needs --weights or --q");
    }
    write_output(output, report.dump(2) + "\n");
    return 0;
}

struct VerifyOutcome {
    int checked = 0;
    int failed = 0;
};

void verify_identity_suite(const std::string& name, char family, std::pair<int, int> m_range,
                           VerifyOutcome& out)
{
    for (int m = m_range.first; m <= m_range.second; ++m) {
        const MultilinearForm form = family == 'T' ? construct_T(m) : construct_L(m);
        int cases = 0;
        bool pass = true;
        for (const auto& q : admissible_equality_grid(m)) {
            const DyadicScalar lhs = mixed_norm_exact(form, q);
            const DyadicScalar rhs = family == 'T' ? predicted_mixed_norm_T(m, q)
                                                   : predicted_mixed_norm_L(m, q);
            ++cases;
            if (!(lhs == rhs))
                pass = false;
        }
        ++out.checked;
        if (!pass)
            ++out.failed;
        std::cout << nlohmann::json{{"suite", name}, {"m", m}, {"cases", cases}, {"pass", pass}}
                         .dump()
                  << "\n";
    }
}

void verify_opnorm_suite(std::pair<int, int> m_range, int threads, VerifyOutcome& out)
{
    for (int m = m_range.first; m <= m_range.second; ++m) {
        const std::int64_t expected = std::int64_t{1} << (m - 1);
        try {
            const bool pass = operator_norm(construct_T(m), threads).value == expected
                              && operator_norm(construct_L(m), threads).value == expected;
            ++out.checked;
            if (!pass)
                ++out.failed;
            std::cout << nlohmann::json{{"suite", "opnorm"}, {"m", m}, {"pass", pass}}.dump()
                      << "\n";
        } catch (const std::invalid_argument&) {
            // enumeration guard: larger arities are certified by the closed form
            std::cout << nlohmann::json{{"suite", "opnorm"}, {"m", m}, {"skipped", true}}.dump()
                      << "\n";
        }
    }
}

void verify_envelopes_suite(int max_m, VerifyOutcome& out)
{
    bool pass = true;
    int worst_m = 0;
    for (int m = 2; m <= max_m; ++m) {
        const double md = static_cast<double>(m);
        if (!(bh_upper_real(m).value < 1.3 * std::pow(md, 0.36481))
            || !(bh_upper_complex(m).value < std::pow(md, 0.21392))) {
            pass = false;
            worst_m = m;
        }
    }
    ++out.checked;
    if (!pass)
        ++out.failed;
    nlohmann::json line{{"suite", "envelopes"}, {"max_m", max_m}, {"pass", pass}};
    if (!pass)
        line["first_failure"] = worst_m;
    std::cout << line.dump() << "\n";
}

void verify_sharp_suite(int grid, VerifyOutcome& out)
{
    for (auto variant : {TrilinearVariant::pos1, TrilinearVariant::pos2}) {
        int cases = 0;
        bool pass = true;
        for (int a = 0; a < grid; ++a) {
            for (int b = 0; b < grid; ++b) {
                const Rational tau(a, grid - 1), theta(b, grid - 1);
                try {
                    const BoundReport r =
                        trilinear_sharp_constant(TrilinearParams(tau, theta, variant));
                    if (!r.log2 || *r.log2 != (theta + 3) / 4)
                        pass = false;
                } catch (const std::logic_error&) {
                    pass = false;
                }
                ++cases;
            }
        }
        ++out.checked;
        if (!pass)
            ++out.failed;
        std::cout << nlohmann::json{{"suite", "sharp"},
                                    {"variant", variant == TrilinearVariant::pos1 ? "pos1" : "pos2"},
                                    {"cases", cases},
                                    {"pass", pass}}
                         .dump()
                  << "\n";
    }
}

int cmd_verify(const std::string& suite, const std::string& m_text, int max_m, int grid,
               int threads)
{
    VerifyOutcome out;
    if (suite == "t-identity" || suite == "all")
        verify_identity_suite("t-identity", 'T', m_text.empty() ? std::pair{2, 6} : parse_range(m_text), out);
    if (suite == "l-identity" || suite == "all")
        verify_identity_suite("l-identity", 'L', m_text.empty() ? std::pair{2, 6} : parse_range(m_text), out);
    if (suite == "opnorm" || suite == "all")
        verify_opnorm_suite(m_text.empty() ? std::pair{2, 4} : parse_range(m_text), threads, out);
    if (suite == "envelopes" || suite == "all")
        verify_envelopes_suite(max_m, out);
    if (suite == "sharp" || suite == "all")
        verify_sharp_suite(grid, out);
    if (out.checked == 0)
        throw UsageError("unknown suite: " + suite);
    return out.failed == 0 ? 0 : kExitVerifyFailure;
}

int cmd_sweep(int grid, const std::string& variant_filter, const std::string& output)
{
    if (grid < 2)
        throw UsageError("--grid must be at least 2");
    std::ostringstream csv;
    csv << "variant,tau,theta,q1,q2,q3,lower_log2,upper_log2,sharp\r\n";
    for (auto variant : {TrilinearVariant::pos1, TrilinearVariant::pos2}) {
        const std::string name = variant == TrilinearVariant::pos1 ? "pos1" : "pos2";
        if (variant_filter != "both" && variant_filter != name)
            continue;
        for (int a = 0; a < grid; ++a) {
            for (int b = 0; b < grid; ++b) {
                const Rational tau(a, grid - 1), theta(b, grid - 1);
                const TrilinearParams params(tau, theta, variant);
                const ExponentVector q = trilinear_family_q(params);
                const BoundReport lower = variant == TrilinearVariant::pos1
                                              ? lower_bound_pos1(3, q)
                                              : lower_bound_pos2(3, q);
                std::string upper_log2;
                int sharp = 0;
                try {
                    const BoundReport r = trilinear_sharp_constant(params);
                    upper_log2 = to_string(*r.log2);
                    sharp = 1;
                } catch (const std::logic_error&) {
                    // leave the row unlabeled; the lower bound still stands
                }
                csv << name << "," << to_string(tau) << "," << to_string(theta) << ","
                    << to_string(q.slot(1)) << "," << to_string(q.slot(2)) << ","
                    << to_string(q.slot(3)) << "," << to_string(*lower.log2) << "," << upper_log2
                    << "," << sharp << "\r\n";
            }
        }
    }
    write_output(output, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mixed-norm inequalities: extremal forms, norms and sharp constants"};
    app.require_subcommand(1);

    FormOptions form_opt;
    std::string output, q_text, anchors_text, weights_text, suite = "all", m_text, variant = "both";
    bool require_admissible = false, full = false;
    int m = 0, max_m = 500, grid = 9, threads = 0;

    auto* construct = app.add_subcommand("construct", "emit a form as canonical JSON");
    add_form_options(construct, form_opt);
    construct->add_option("--output", output, "output file (default stdout)");

    auto* mixed = app.add_subcommand("mixed-norm", "nested mixed norm of a form");
    add_form_options(mixed, form_opt);
    mixed->add_option("--q", q_text, "comma-separated exponents, e.g. 1,2,2")->required();
    mixed->add_flag("--require-admissible", require_admissible, "reject inadmissible q");
    mixed->add_option("--output", output, "output file (default stdout)");

    auto* opnorm_cmd = app.add_subcommand("opnorm", "sup norm over unit sup-norm balls");
    add_form_options(opnorm_cmd, form_opt);
    opnorm_cmd->add_flag("--full", full, "enumerate every slot (oracle mode)");
    opnorm_cmd->add_option("--threads", threads, "worker threads (0 = auto); never affects results");
    opnorm_cmd->add_option("--output", output, "output file (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "constant bounds for a given arity");
    bounds->add_option("--m", m, "arity")->required();
    bounds->add_option("--q", q_text, "exponents for the extremal lower bounds");
    bounds->add_option("--output", output, "output file (default stdout)");

    auto* interpolate = app.add_subcommand("interpolate", "exponent interpolation and hull certificates");
    interpolate->add_option("--anchors", anchors_text, "semicolon-separated exponent vectors")->required();
    interpolate->add_option("--weights", weights_text, "convex weights; emits the interpolated q");
    interpolate->add_option("--q", q_text, "target exponents; emits certificate and upper bound");
    interpolate->add_option("--output", output, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run identity suites; exit 1 on any failure");
    verify->add_option("--suite", suite, "t-identity, l-identity, opnorm, envelopes, sharp or all");
    verify->add_option("--m", m_text, "arity range, e.g. 2..6");
    verify->add_option("--max-m", max_m, "upper arity for the envelope suite");
    verify->add_option("--grid", grid, "grid points per parameter axis");
    verify->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* sweep = app.add_subcommand("sweep", "CSV sweep of the sharp 3-linear region");
    sweep->add_option("--grid", grid, "grid points per parameter axis");
    sweep->add_option("--variant", variant, "pos1, pos2 or both")
        ->check(CLI::IsMember({"pos1", "pos2", "both"}));
    sweep->add_option("--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(form_opt, output);
        if (mixed->parsed())
            return cmd_mixed_norm(form_opt, q_text, require_admissible, output);
        if (opnorm_cmd->parsed())
            return cmd_opnorm(form_opt, full, threads, output);
        if (bounds->parsed())
            return cmd_bounds(m, q_text, output);
        if (interpolate->parsed())
            return cmd_interpolate(anchors_text, weights_text, q_text, output);
        if (verify->parsed())
            return cmd_verify(suite, m_text, max_m, grid, threads);
        if (sweep->parsed())
            return cmd_sweep(grid, variant, output);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
