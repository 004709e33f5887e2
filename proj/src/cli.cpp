#include "annihil/cli.hpp"

#include "annihil/annihilated.hpp"
#include "annihil/delta0.hpp"
#include "annihil/element_io.hpp"
#include "annihil/freeness.hpp"
#include "annihil/parallel.hpp"
#include "annihil/steenrod.hpp"
#include "annihil/verify.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace annihil {

namespace {

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out)
{
    if (!config.out) {
        out << text;
        return;
    }
    std::ofstream file(*config.out, std::ios::trunc);
    if (!file || !(file << text) || !file.flush())
        throw UsageError("cannot write output file " + config.out->string());
}

std::optional<std::filesystem::path> resolve_cache_dir(const RunConfig& config)
{
    if (config.cache_dir)
        return config.cache_dir;
    if (const char* env = std::getenv(kCacheDirEnv); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

std::pair<int, int> required_bounds(const RunConfig& config)
{
    if (!config.s_max || !config.d_max)
        throw UsageError(config.command + " needs --s-max and --d-max");
    return {*config.s_max, *config.d_max};
}

void check_config(const RunConfig& config)
{
    if (config.k < 0)
        throw UsageError("--k must be nonnegative");
    if ((config.s_max && *config.s_max < 0) || (config.d_max && *config.d_max < 0))
        throw UsageError("bounds must be nonnegative");
}

int cmd_dims(const RunConfig& config, BasisCache& cache, std::ostream& out)
{
    const auto [s_max, d_max] = required_bounds(config);
    HilbertTable dims(s_max, d_max);
    std::vector<std::size_t> values(static_cast<std::size_t>((s_max + 1) * (d_max + 1)));
    parallel_for(values.size(), [&](std::size_t i) {
        const int s = static_cast<int>(i) / (d_max + 1);
        const int d = static_cast<int>(i) % (d_max + 1);
        values[i] = cache.delta(config.k, s, d).dimension();
    });
    for (std::size_t i = 0; i < values.size(); ++i)
        dims.set(static_cast<int>(i) / (d_max + 1), static_cast<int>(i) % (d_max + 1), values[i]);

    if (config.format == OutputFormat::csv) {
        emit(config, dims.to_csv(), out);
        return kExitOk;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (int s = 0; s <= s_max; ++s) {
        nlohmann::json row = nlohmann::json::array();
        for (int d = 0; d <= d_max; ++d)
            row.push_back(dims.at(s, d));
        rows.push_back(row);
    }
    nlohmann::json doc = {{"k", config.k}, {"bounds", {{"s_max", s_max}, {"d_max", d_max}}}, {"dims", rows}};
    emit(config, doc.dump(2) + "\n", out);
    return kExitOk;
}

std::string sigma_name(const SigmaDescriptor& desc)
{
    std::string name = "sigma(";
    for (std::size_t i = 0; i < desc.ms.size(); ++i)
        name += (i ? "," : "") + std::to_string(desc.ms[i]);
    return name + ")";
}

int cmd_generators(const RunConfig& config, BasisCache& cache, std::ostream& out)
{
    const auto [s_max, d_max] = required_bounds(config);
    struct Row
    {
        int s, d;
        std::string name;
        Element element;
    };
    std::vector<Row> rows;
    if (config.k == 0) {
        for (int s = 1; s <= s_max; ++s)
            for (int d = 1; d <= d_max; ++d)
                for (const auto& desc : enumerate_sigma(s, d))
                    rows.push_back({s, d, sigma_name(desc), sigma(desc)});
    }
    else {
        const GeneratorTable table = minimal_generators(config.k, s_max, d_max, cache);
        for (int s = 1; s <= s_max; ++s)
            for (int d = 1; d <= d_max; ++d) {
                int n = 0;
                for (const auto& e : table.at(s, d))
                    rows.push_back({s, d, fmt::format("g{}_{}_{}", s, d, ++n), e});
            }
    }

    if (config.format == OutputFormat::csv) {
        std::string text = "s,d,generator,element\n";
        for (const auto& r : rows)
            text += fmt::format("{},{},{},{}\n", r.s, r.d, csv_field(r.name), csv_field(to_string(r.element)));
        emit(config, text, out);
        return kExitOk;
    }
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : rows)
        list.push_back({{"s", r.s}, {"d", r.d}, {"name", r.name}, {"element", to_string(r.element)}});
    nlohmann::json doc = {
        {"k", config.k}, {"bounds", {{"s_max", s_max}, {"d_max", d_max}}}, {"generators", list}};
    emit(config, doc.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_certify(const RunConfig& config, BasisCache& cache, std::ostream& out)
{
    const auto [s_max, d_max] = required_bounds(config);
    const FreenessReport report = certify_free(config.k, s_max, d_max, cache);
    if (config.out) {
        std::string text;
        if (config.format == OutputFormat::json)
            text = to_json(report).dump(2) + "\n";
        else {
            text = "s,d,dim,dec,g,f,pass\n";
            for (const auto& c : report.cells)
                text += fmt::format("{},{},{},{},{},{},{}\n", c.s, c.d, c.dim, c.dec, c.g, c.f, c.pass ? 1 : 0);
        }
        std::ofstream file(*config.out, std::ios::trunc);
        if (!file || !(file << text) || !file.flush())
            throw UsageError("cannot write output file " + config.out->string());
    }
    if (auto bad = report.first_failure()) {
        out << fmt::format("FAIL certify k={} s<={} d<={}: first failing cell ({},{}) dim={} f={} g={} dec={}\n",
                           config.k, s_max, d_max, bad->s, bad->d, bad->dim, bad->f, bad->g, bad->dec);
        return kExitCheckFailed;
    }
    out << fmt::format("PASS certify k={} s<={} d<={}: {} cells, dim = f everywhere\n", config.k, s_max, d_max,
                       report.cells.size());
    return kExitOk;
}

int cmd_verify(const RunConfig& config, BasisCache& cache, std::ostream& out)
{
    std::vector<std::string> names = config.suites;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) {
        names.clear();
        for (auto n : suite_names())
            names.emplace_back(n);
    }
    for (const auto& n : names)
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
            throw UsageError("unknown suite '" + n + "'");

    const SuiteBounds bounds{config.s_max, config.d_max};
    bool all = true;
    std::string text;
    for (const auto& n : names) {
        const SuiteResult r = run_suite(n, bounds, cache);
        all = all && r.passed;
        text += fmt::format("{} {} ({} checks): {}\n", r.passed ? "PASS" : "FAIL", r.name, r.checks, r.detail);
    }
    emit(config, text, out);
    return all ? kExitOk : kExitCheckFailed;
}

int cmd_sq(const std::string& element_text, int k, const RunConfig& config, std::ostream& out)
{
    if (k < 0)
        throw UsageError("the square index must be nonnegative");
    emit(config, to_string(sq(parse_element(element_text), k)) + "\n", out);
    return kExitOk;
}

int cmd_matrix(int s, int d, int k, const RunConfig& config, std::ostream& out)
{
    if (s < 0 || d < 0 || k < 1)
        throw UsageError("matrix needs s, d >= 0 and a square index >= 1");
    emit(config, sq_matrix(s, d, k).to_csv(), out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    std::string format = "csv";
    std::string element_text;
    int square = 0;
    int ms = 0, md = 0;

    CLI::App app{"Partially A-annihilated subalgebras of the homology of elementary abelian 2-groups", "annihil"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--k", config.k, "Level k: annihilated by Sq^1, Sq^2, ..., Sq^{2^k}");
        sub->add_option("--s-max", config.s_max, "Largest length");
        sub->add_option("--d-max", config.d_max, "Largest degree");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--cache-dir", config.cache_dir, std::string("Basis cache directory (default: $") +
                                                               kCacheDirEnv + ")");
        sub->add_option("--out", config.out, "Write results to this file instead of stdout");
        // Unbound: CLI11 resets variables shared across unselected subcommands.
        sub->add_flag("-v,--verbose", "Report timing on stderr");
    };

    auto* dims = app.add_subcommand("dims", "Dimensions of Delta(k) by bidegree");
    auto* generators = app.add_subcommand("generators", "Generators of Delta(k) by bidegree");
    auto* certify = app.add_subcommand("certify", "Bounded freeness certificate for Delta(k)");
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    auto* sq_cmd = app.add_subcommand("sq", "Apply Sq^k to an element");
    auto* matrix = app.add_subcommand("matrix", "Dump the matrix of Sq^k on one bidegree as CSV");
    for (auto* sub : {dims, generators, certify, verify})
        add_common(sub);
    verify->add_option("--suite", config.suites, "Suite name (repeatable; default: all)");
    sq_cmd->add_option("element", element_text, "Element, e.g. [2,2]+[4]")->required();
    sq_cmd->add_option("k", square, "Square index")->required();
    sq_cmd->add_option("--out", config.out, "Write the result to this file");
    matrix->add_option("--s", ms, "Length")->required();
    matrix->add_option("--d", md, "Source degree")->required();
    matrix->add_option("--square", square, "Square index")->required();
    matrix->add_option("--out", config.out, "Write the CSV to this file");

    std::vector<const char*> argv{"annihil"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    }
    catch (const CLI::ParseError& e) {
        err << "annihil: " << e.what() << "\n";
        return kExitUsage;
    }

    const CLI::App* selected = app.get_subcommands().front();
    config.command = selected->get_name();
    if (selected->get_option_no_throw("--verbose"))
        config.verbosity = static_cast<int>(selected->count("--verbose"));
    config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        check_config(config);
        BasisCache cache(resolve_cache_dir(config));
        if (config.command == "dims")
            code = cmd_dims(config, cache, out);
        else if (config.command == "generators")
            code = cmd_generators(config, cache, out);
        else if (config.command == "certify")
            code = cmd_certify(config, cache, out);
        else if (config.command == "verify")
            code = cmd_verify(config, cache, out);
        else if (config.command == "sq")
            code = cmd_sq(element_text, square, config, out);
        else
            code = cmd_matrix(ms, md, square, config, out);
    }
    catch (const std::exception& e) {
        err << "annihil: " << e.what() << "\n";
        return kExitUsage;
    }
    if (config.verbosity > 0) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        err << fmt::format("annihil {}: {:.3f}s\n", config.command, elapsed.count());
    }
    return code;
}

}  // namespace annihil
