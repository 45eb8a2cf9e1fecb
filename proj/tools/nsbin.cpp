// Command-line front end: counts, transfer matrices, characteristic
// polynomials, growth coefficients, tables and self-verification.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 growth hypothesis violated (no odd digit), 4 stability/budget failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nsbin/asymptotics.hpp"
#include "nsbin/counting.hpp"
#include "nsbin/digit_set.hpp"
#include "nsbin/memo_cache.hpp"
#include "nsbin/recurrence_matrix.hpp"
#include "nsbin/report_io.hpp"
#include "nsbin/symmetry.hpp"
#include "nsbin/verify.hpp"

namespace {

using namespace nsbin;

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kInputError = 2,
    kHypothesis = 3,
    kInternal = 4,
};

struct CliConfig {
    std::string output_format = "text";
    std::string cache_path;
    int max_digit_cap = kDefaultMaxDigit;
    std::int64_t oracle_cap = kDefaultOracleCap;
    std::int64_t summation_budget = kDefaultSummationBudget;
    int r_max = kDefaultRMax;
    unsigned decimal_places = kDefaultDecimalPlaces;

    GrowthOptions growth() const { return {r_max, summation_budget, decimal_places}; }
};

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::OddElementRequired:
        return kHypothesis;
    case ErrorKind::StabilityFailure:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::OracleCapExceeded:
    case ErrorKind::ArgumentOverflow:
    case ErrorKind::InternalExactnessFailure:
        return kInternal;
    default:
        return kInputError;
    }
}

void print_json(const nlohmann::json& value) { std::cout << value.dump() << '\n'; }

std::string braces(const DigitSet& set) { return "{" + set.to_string() + "}"; }

int cmd_count(const CliConfig& config, const std::string& set_text, std::int64_t n)
{
    if (n < 0)
        throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
    const DigitSet set = parse_digit_set(set_text, config.max_digit_cap);
    CountingContext ctx(set);
    std::optional<std::filesystem::path> cache;
    if (!config.cache_path.empty()) {
        cache = memo_cache_file(config.cache_path, set);
        load_memo(ctx, *cache);
    }
    const BigInt value = ctx.count(n);
    if (cache)
        save_memo(ctx, *cache);

    if (config.output_format == "json")
        print_json({{"set", set.to_string()}, {"n", n}, {"count", value.str()}});
    else if (config.output_format == "csv")
        std::cout << "set,n,count\n" << csv_field(set.to_string()) << ',' << n << ',' << value << '\n';
    else
        std::cout << value << '\n';
    return kOk;
}

int cmd_coeff(const CliConfig& config, const std::string& set_text, std::int64_t m)
{
    const DigitSet set = parse_digit_set(set_text, config.max_digit_cap);
    const GrowthReport report = growth_coefficient(set, m, config.growth());
    if (config.output_format == "json") {
        print_json(to_json(report));
    } else if (config.output_format == "csv") {
        std::cout << csv_header(report) << '\n' << csv_row(report) << '\n';
    } else {
        std::cout << "c = " << to_display_string(report.coefficient) << " (≈ " << report.decimal
                  << "), r_used = " << report.r_used << '\n';
    }
    return kOk;
}

std::vector<DigitSet> read_set_file(const std::string& path, int cap)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot open sets file " + path);
    std::vector<DigitSet> sets;
    std::string line;
    while (std::getline(in, line)) {
        const auto text = detail::trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        sets.push_back(parse_digit_set(text, cap));
    }
    return sets;
}

int cmd_table(const CliConfig& config, const std::string& family, int t_min, int t_max,
              const std::string& sets_path)
{
    const GrowthOptions options = config.growth();
    const unsigned places = config.decimal_places;

    if (!sets_path.empty()) {
        const auto sets = read_set_file(sets_path, config.max_digit_cap);
        std::vector<std::future<GrowthPair>> jobs;
        for (const auto& set : sets)
            jobs.push_back(std::async(std::launch::async, [set, options] {
                return compare_growth_pair(set, 1, options);
            }));
        std::vector<GrowthPair> rows;
        for (auto& job : jobs)
            rows.push_back(job.get());

        if (config.output_format == "json") {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& row : rows)
                out.push_back(to_json(row));
            print_json(out);
        } else if (config.output_format == "csv") {
            std::cout << "set,c,decimal,reflected,c_reflected,decimal_reflected\n";
            for (const auto& row : rows)
                std::cout << csv_field(row.set.to_string()) << ',' << to_fraction_string(row.coefficient)
                          << ',' << to_decimal_string(row.coefficient, places) << ','
                          << csv_field(row.reflected.to_string()) << ','
                          << to_fraction_string(row.reflected_coefficient) << ','
                          << to_decimal_string(row.reflected_coefficient, places) << '\n';
        } else {
            for (const auto& row : rows)
                std::cout << std::left << std::setw(14) << braces(row.set) << std::setw(22)
                          << to_display_string(row.coefficient) << std::setw(8)
                          << to_decimal_string(row.coefficient, places) << " | " << std::setw(14)
                          << braces(row.reflected) << std::setw(22)
                          << to_display_string(row.reflected_coefficient)
                          << to_decimal_string(row.reflected_coefficient, places) << '\n';
        }
        return kOk;
    }

    if (family != "01t")
        throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "' (expected 01t)");
    if (t_min < 2 || t_max < t_min)
        throw Error(ErrorKind::InvalidArgument, "need 2 <= t-min <= t-max");

    std::vector<std::future<GrowthReport>> jobs;
    for (int t = t_min; t <= t_max; ++t) {
        const DigitSet set = DigitSet::from_digits({0, 1, t}, config.max_digit_cap);
        jobs.push_back(std::async(std::launch::async, [set, options] {
            return growth_coefficient(set, 1, options);
        }));
    }
    std::vector<GrowthReport> rows;
    for (auto& job : jobs)
        rows.push_back(job.get());

    if (config.output_format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& row : rows)
            out.push_back(to_json(row));
        print_json(out);
    } else if (config.output_format == "csv") {
        std::cout << csv_header(rows.front()) << '\n';
        for (const auto& row : rows)
            std::cout << csv_row(row) << '\n';
    } else {
        for (const auto& row : rows)
            std::cout << std::left << std::setw(12) << braces(row.alphabet) << std::setw(22)
                      << to_display_string(row.coefficient) << row.decimal << '\n';
    }
    return kOk;
}

int cmd_verify(const CliConfig& config, const std::string& suite, const std::string& fixture,
               std::int64_t oracle_max)
{
    if (suite != "paper" && suite != "oracle" && suite != "properties" && suite != "all")
        throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");

    std::vector<CheckResult> results;
    auto append = [&results](std::vector<CheckResult> more) {
        results.insert(results.end(), more.begin(), more.end());
    };
    if (suite == "paper" || suite == "all")
        append(run_paper_suite(fixture, config.growth()));
    if (suite == "oracle" || suite == "all")
        append(run_oracle_suite(oracle_max, config.oracle_cap));
    if (suite == "properties" || suite == "all")
        append(run_property_suite(config.growth()));

    std::size_t failures = 0;
    for (const auto& r : results) {
        failures += r.passed ? 0 : 1;
        if (config.output_format == "text") {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.passed && !r.detail.empty())
                std::cout << ": " << r.detail;
            std::cout << '\n';
        }
    }
    if (config.output_format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : results)
            checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        print_json({{"suite", suite}, {"checks", checks}, {"failed", failures}});
    } else if (config.output_format == "csv") {
        std::cout << "name,passed,detail\n";
        for (const auto& r : results)
            std::cout << csv_field(r.name) << ',' << (r.passed ? "true" : "false") << ','
                      << csv_field(r.detail) << '\n';
    } else {
        std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
    }
    return failures == 0 ? kOk : kVerifyFailed;
}

int cmd_matrix(const CliConfig& config, const std::string& set_text)
{
    const DigitSet set = parse_digit_set(set_text, config.max_digit_cap);
    const TransferMatrix m = build_matrix(set);
    if (config.output_format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.dim(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < m.dim(); ++j)
                row.push_back(m(i, j));
            rows.push_back(row);
        }
        print_json({{"set", set.to_string()}, {"rows", rows}});
    } else {
        std::cout << render(m);
    }
    return kOk;
}

int cmd_charpoly(const CliConfig& config, const std::string& set_text)
{
    const DigitSet set = parse_digit_set(set_text, config.max_digit_cap);
    const IntPolynomial g = char_poly(build_matrix(set));
    if (config.output_format == "json") {
        nlohmann::json coefficients = nlohmann::json::array();
        for (const auto& c : g.coefficients())
            coefficients.push_back(c.str());
        print_json({{"set", set.to_string()}, {"coefficients", coefficients}, {"polynomial", g.to_string()}});
    } else {
        std::cout << g.coefficient_list() << '\n' << "g(x) = " << g.to_string() << '\n';
    }
    return kOk;
}

int cmd_reflect(const CliConfig& config, const std::string& set_text)
{
    const DigitSet set = parse_digit_set(set_text, config.max_digit_cap);
    const DigitSet reflected = reflect(set);
    if (config.output_format == "json")
        print_json({{"set", set.to_string()}, {"reflected", reflected.to_string()}});
    else
        std::cout << reflected.to_string() << '\n';
    return kOk;
}

int cmd_bounds(const CliConfig& config, std::int64_t t)
{
    const GrowthBounds b = bounds_01t(t);
    const unsigned places = config.decimal_places;
    if (config.output_format == "json") {
        print_json({{"t", t},
                    {"k", b.k},
                    {"lower", to_fraction_string(b.lower)},
                    {"upper", to_fraction_string(b.upper)}});
    } else if (config.output_format == "csv") {
        std::cout << "t,k,lower,upper\n"
                  << t << ',' << b.k << ',' << to_fraction_string(b.lower) << ','
                  << to_fraction_string(b.upper) << '\n';
    } else {
        std::cout << "k = " << b.k << ": " << to_display_string(b.lower) << " (≈ "
                  << to_decimal_string(b.lower, places) << ") <= c <= " << to_display_string(b.upper)
                  << " (≈ " << to_decimal_string(b.upper, places) << ")\n";
    }
    return kOk;
}

int cmd_ratio(const CliConfig& config, const std::string& set_text, std::int64_t m, int r_max)
{
    const DigitSet set = parse_digit_set(set_text, config.max_digit_cap);
    const auto trace = ratio_trace(set, m, r_max, config.summation_budget);
    const unsigned places = config.decimal_places;
    if (config.output_format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [r, q] : trace)
            out.push_back(nlohmann::json::array({r, to_fraction_string(q)}));
        print_json({{"set", set.to_string()}, {"m", m}, {"ratios", out}});
    } else if (config.output_format == "csv") {
        std::cout << "r,ratio,decimal\n";
        for (const auto& [r, q] : trace)
            std::cout << r << ',' << to_fraction_string(q) << ',' << to_decimal_string(q, places) << '\n';
    } else {
        for (const auto& [r, q] : trace)
            std::cout << r << '\t' << to_decimal_string(q, places) << '\t' << to_display_string(q) << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Counts and growth coefficients of binary expansions with arbitrary digit sets"};
    app.require_subcommand(1);

    CliConfig config;
    app.add_option("--format", config.output_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache", config.cache_path, "Directory of memo cache files");
    app.add_option("--max-digit", config.max_digit_cap, "Largest digit accepted")->check(CLI::PositiveNumber);
    app.add_option("--oracle-cap", config.oracle_cap, "Largest n for brute-force enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", config.summation_budget, "Longest block summed directly")
        ->check(CLI::PositiveNumber);
    app.add_option("--r-max", config.r_max, "Largest block index r")->check(CLI::PositiveNumber);
    app.add_option("--decimal-places", config.decimal_places, "Digits after the decimal point")
        ->check(CLI::Range(1u, 100u));

    std::string set_text;
    std::int64_t n = 0;
    std::int64_t m = 1;
    std::int64_t t = 2;

    auto* count = app.add_subcommand("count", "Print f_A(n)");
    count->add_option("set", set_text, "Digit set, e.g. 0,1,3")->required();
    count->add_option("n", n, "Integer to represent")->required();

    auto* coeff = app.add_subcommand("coeff", "Exact growth coefficient c(A, m)");
    coeff->add_option("set", set_text)->required();
    coeff->add_option("--m", m, "Block multiplier")->check(CLI::PositiveNumber);

    std::string family = "01t";
    int t_min = 2;
    int t_max = 17;
    std::string sets_path;
    auto* table = app.add_subcommand("table", "Growth coefficients for a family or a list of sets");
    table->add_option("--family", family, "Family of sets");
    table->add_option("--t-min", t_min);
    table->add_option("--t-max", t_max);
    table->add_option("--sets", sets_path, "File with one set per line (paired with reflections)");

    std::string suite = "all";
    std::string fixture = std::string(NSBIN_DATA_DIR) + "/paper_values.tsv";
    std::int64_t oracle_max = 4096;
    auto* verify = app.add_subcommand("verify", "Run self-checks");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"paper", "oracle", "properties", "all"}));
    verify->add_option("--fixture", fixture, "Expected-value fixture file");
    verify->add_option("--oracle-max", oracle_max, "Largest n compared against brute force");

    auto* matrix = app.add_subcommand("matrix", "Print the transfer matrix M_A");
    matrix->add_option("set", set_text)->required();

    auto* charpoly = app.add_subcommand("charpoly", "Print det(M_A - xI)");
    charpoly->add_option("set", set_text)->required();

    auto* reflect_cmd = app.add_subcommand("reflect", "Print the reflected set");
    reflect_cmd->add_option("set", set_text)->required();

    auto* bounds = app.add_subcommand("bounds", "Bounds on c({0,1,t}, 1)");
    bounds->add_option("t", t)->required();

    auto* ratio = app.add_subcommand("ratio", "Exact s_A(r, m) / |A|^r for r = 0..--r-max");
    ratio->add_option("set", set_text)->required();
    ratio->add_option("--m", m)->check(CLI::PositiveNumber);

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (count->parsed())
            return cmd_count(config, set_text, n);
        if (coeff->parsed())
            return cmd_coeff(config, set_text, m);
        if (table->parsed())
            return cmd_table(config, family, t_min, t_max, sets_path);
        if (verify->parsed())
            return cmd_verify(config, suite, fixture, oracle_max);
        if (matrix->parsed())
            return cmd_matrix(config, set_text);
        if (charpoly->parsed())
            return cmd_charpoly(config, set_text);
        if (reflect_cmd->parsed())
            return cmd_reflect(config, set_text);
        if (bounds->parsed())
            return cmd_bounds(config, t);
        if (ratio->parsed())
            return cmd_ratio(config, set_text, m, config.r_max);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
    return kInputError;
}
