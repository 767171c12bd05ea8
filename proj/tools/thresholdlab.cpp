// Command-line front end: graph construction, process simulation, conversion
// numbers (formula / reduction / brute force), minimum-seed search, seeding
// probabilities, and CSV parameter sweeps.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 enumeration budget refusal.
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "thresholdlab/closed_form.hpp"
#include "thresholdlab/constructions.hpp"
#include "thresholdlab/dynamics.hpp"
#include "thresholdlab/graph.hpp"
#include "thresholdlab/json_io.hpp"
#include "thresholdlab/probability.hpp"
#include "thresholdlab/search.hpp"
#include "thresholdlab/vertex_set.hpp"

namespace {

using nlohmann::json;
using namespace thresholdlab;

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    std::size_t n = 0;
    std::size_t p = 0;
    unsigned k = 1;
    std::string format;  // per-command default when empty
    std::uint64_t budget = kDefaultSearchBudget;
    std::uint64_t rng_seed = 0;
    unsigned threads = 0;

    std::string seed_spec;
    std::size_t max_steps = 0;
    std::string method;
    bool verify = false;
    bool emit_graph = false;
    std::size_t size_limit = 0;
    std::size_t size = 0;
    std::uint64_t trials = 100000;
    std::size_t digits = 10;
    std::string n_range, p_range, k_range;
    std::string out_path = "-";
};

FamilySpec make_spec(const Options& opt) {
    FamilySpec spec{family_from_name(opt.family), opt.n, opt.p};
    spec.validate();
    return spec;
}

SearchOptions search_options(const Options& opt) {
    return {opt.budget, opt.size_limit, opt.threads};
}

std::string pick_format(const Options& opt, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
    std::string format = opt.format.empty() ? fallback : opt.format;
    for (const char* a : allowed)
        if (format == a) return format;
    throw std::invalid_argument("format '" + format + "' is not supported by this command");
}

std::string fixed6(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << value;
    return out.str();
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- info ----

int cmd_info(const Options& opt) {
    std::string format = pick_format(opt, "text", {"text", "json"});
    LabeledGraph lg = build_family(make_spec(opt));
    const Graph& g = lg.graph();

    std::map<std::size_t, std::size_t> degree_histogram;
    for (VertexId v = 0; v < g.num_vertices(); ++v) ++degree_histogram[g.degree(v)];
    std::size_t inner = 0, outer = 0, block = 0;
    for (const auto& role : lg.roles()) {
        if (role.kind == RoleKind::Inner) ++inner;
        else if (role.kind == RoleKind::Outer) ++outer;
        else ++block;
    }

    if (format == "json") {
        json j{{"family", family_name(lg.spec().family)},
               {"n", lg.spec().n},
               {"p", lg.spec().p},
               {"num_vertices", g.num_vertices()},
               {"num_edges", g.num_edges()},
               {"roles", {{"inner", inner}, {"outer", outer}, {"block", block}}}};
        json hist = json::object();
        for (auto [deg, cnt] : degree_histogram) hist[std::to_string(deg)] = cnt;
        j["degree_histogram"] = hist;
        if (opt.emit_graph) j["graph"] = graph_to_json(lg);
        print_json(j);
        return 0;
    }
    std::cout << "family: " << family_name(lg.spec().family) << "\n"
              << "n: " << lg.spec().n << "\n"
              << "p: " << lg.spec().p << "\n"
              << "vertices: " << g.num_vertices() << "\n"
              << "edges: " << g.num_edges() << "\n"
              << "roles: inner=" << inner << " outer=" << outer << " block=" << block << "\n";
    std::cout << "degrees:";
    for (auto [deg, cnt] : degree_histogram) std::cout << " " << deg << "x" << cnt;
    std::cout << "\n";
    if (opt.emit_graph) print_json(graph_to_json(lg));
    return 0;
}

// ------------------------------------------------------------ simulate ----

bool looks_like_pattern(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (std::string("BIOMTC").find(c) == std::string::npos) return false;
    return true;
}

VertexSet parse_seed(const Options& opt, const FamilySpec& spec, std::size_t num_vertices) {
    const std::string& text = opt.seed_spec;
    if (text == "canonical") return canonical_seed(spec, opt.k);
    if (looks_like_pattern(text)) {
        if (spec.family != Family::DoubleCorona)
            throw std::invalid_argument("block patterns describe double-corona seeds only");
        return pattern_to_seed(BlockPattern::parse(text), spec.n, spec.p);
    }
    VertexSet seed(num_vertices);
    std::stringstream stream(text);
    std::string item;
    bool any = false;
    while (std::getline(stream, item, ',')) {
        std::size_t pos = 0;
        unsigned long id = std::stoul(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("malformed seed id '" + item + "'");
        seed.add(static_cast<VertexId>(id));
        any = true;
    }
    if (!any) throw std::invalid_argument("seed spec is empty");
    return seed;
}

int cmd_simulate(const Options& opt) {
    std::string format = pick_format(opt, "json", {"text", "json"});
    FamilySpec spec = make_spec(opt);
    LabeledGraph lg = build_family(spec);
    VertexSet seed = parse_seed(opt, spec, lg.graph().num_vertices());
    ProcessTrace trace = run(lg.graph(), seed, opt.k, opt.max_steps);

    if (format == "json") {
        print_json(trace_to_json(trace));
        return 0;
    }
    std::cout << "seed size: " << trace.seed.count() << "\n"
              << "converted: " << (trace.converted ? "true" : "false") << "\n"
              << "steps: " << trace.step_count() << "\n";
    std::cout << "step sizes:";
    for (const auto& s : trace.steps) std::cout << " " << s.count();
    std::cout << "\n";
    return 0;
}

// ---------------------------------------------------------------- conv ----

bool reduction_applies(const FamilySpec& spec, unsigned k) {
    return spec.family == Family::Corona ||
           (spec.family == Family::DoubleCorona && k >= 2);
}

ConversionNumber reduced(const FamilySpec& spec, unsigned k) {
    if (spec.family == Family::Corona) return reduce_corona(spec.n, spec.p, k);
    if (spec.family == Family::DoubleCorona) return reduce_double_corona(spec.n, spec.p, k);
    throw std::invalid_argument("the reduction applies to corona and double-corona instances only");
}

int cmd_conv(const Options& opt) {
    std::string format = pick_format(opt, "text", {"text", "json"});
    FamilySpec spec = make_spec(opt);
    std::map<std::string, ConversionNumber> results;
    std::optional<VertexSet> witness;
    std::string brute_note;

    auto run_brute = [&] {
        SearchReport report = brute_force_min(build_family(spec).graph(), opt.k, search_options(opt));
        witness = report.witness;
        return report.minimum;
    };

    if (opt.verify) {
        results.emplace("formula", conversion_number(spec, opt.k));
        if (reduction_applies(spec, opt.k)) results.emplace("reduce", reduced(spec, opt.k));
        try {
            results.emplace("brute", run_brute());
        } catch (const BudgetExceededError&) {
            brute_note = "skipped(budget)";
        }
        const ConversionNumber& reference = results.begin()->second;
        for (const auto& [name, value] : results)
            if (!(value == reference))
                throw MismatchError("conversion-number methods disagree: " + name + "=" +
                                    value.to_string() + " vs " + results.begin()->first + "=" +
                                    reference.to_string());
    } else {
        std::string method = opt.method.empty() ? "formula" : opt.method;
        if (method == "formula") results.emplace("formula", conversion_number(spec, opt.k));
        else if (method == "reduce") results.emplace("reduce", reduced(spec, opt.k));
        else if (method == "brute") results.emplace("brute", run_brute());
        else throw std::invalid_argument("unknown method '" + method + "'");
    }

    const ConversionNumber& answer = results.begin()->second;
    if (format == "json") {
        json methods = json::object();
        for (const auto& [name, value] : results) methods[name] = value.to_string();
        if (!brute_note.empty()) methods["brute"] = brute_note;
        json j{{"family", family_name(spec.family)}, {"n", spec.n},   {"p", spec.p},
               {"k", opt.k},                         {"value", answer.seeds_required()},
               {"inconvertible", answer.is_inconvertible()},          {"methods", methods}};
        if (opt.verify) j["agree"] = true;
        if (witness) j["witness"] = json(witness->ids());
        print_json(j);
        return 0;
    }
    std::cout << "conversion number: " << answer.to_string() << "\n";
    std::cout << "methods:";
    for (const auto& [name, value] : results) std::cout << " " << name << "=" << value.to_string();
    if (!brute_note.empty()) std::cout << " brute=" << brute_note;
    std::cout << "\n";
    if (opt.verify) std::cout << "verified: agree\n";
    if (witness) {
        std::cout << "witness:";
        for (VertexId v : witness->ids()) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- min-set ----

int cmd_min_set(const Options& opt) {
    std::string format = pick_format(opt, "text", {"text", "json"});
    FamilySpec spec = make_spec(opt);
    SearchReport report = brute_force_min(build_family(spec).graph(), opt.k, search_options(opt));

    if (format == "json") {
        json j = search_report_to_json(report);
        j["family"] = family_name(spec.family);
        j["n"] = spec.n;
        j["p"] = spec.p;
        print_json(j);
        return 0;
    }
    std::cout << "minimum: " << report.minimum.to_string() << "\n";
    if (report.witness) {
        std::cout << "witness:";
        for (VertexId v : report.witness->ids()) std::cout << " " << v;
        std::cout << "\n";
    }
    std::cout << "sets examined: " << report.sets_examined << "\n";
    for (const auto& [size, tally] : report.per_size)
        std::cout << "size " << size << ": examined " << tally.examined << ", converting "
                  << tally.converting << "\n";
    return 0;
}

// --------------------------------------------------------- probability ----

std::size_t default_seed_size(const FamilySpec& spec, unsigned k) {
    return conversion_number(spec, k).seeds_required();
}

int cmd_probability(const Options& opt) {
    std::string format = pick_format(opt, "text", {"text", "json"});
    FamilySpec spec = make_spec(opt);
    std::string method = opt.method.empty() ? "formula" : opt.method;

    if (method == "formula") {
        if (spec.family == Family::DoubleCorona)
            throw std::invalid_argument("no exact seeding formula covers double coronas; "
                                        "estimator required (--method enumerate or montecarlo)");
        if (spec.family != Family::Corona)
            throw std::invalid_argument("the seeding formula covers corona products only; "
                                        "use --method enumerate or montecarlo");
        if (opt.size != 0)
            throw std::invalid_argument("--size applies to the estimators; the formula always "
                                        "seeds at the conversion number");
        ExactProbability p = corona_success_probability(spec.n, spec.p, opt.k);
        std::size_t size = default_seed_size(spec, opt.k);
        if (format == "json") {
            print_json(json{{"method", method},
                            {"family", family_name(spec.family)},
                            {"n", spec.n},
                            {"p", spec.p},
                            {"k", opt.k},
                            {"size", size},
                            {"probability", probability_to_json(p, opt.digits)},
                            {"resilience", probability_to_json(p.complement(), opt.digits)}});
            return 0;
        }
        std::cout << "method: formula\nseed size: " << size << "\n"
                  << "success probability: " << p.to_string() << " = " << p.decimal(opt.digits)
                  << "\n"
                  << "resilience factor: " << p.complement().to_string() << " = "
                  << p.complement().decimal(opt.digits) << "\n";
        return 0;
    }

    LabeledGraph lg = build_family(spec);
    std::size_t size = opt.size;
    if (size == 0) {
        if (spec.family == Family::Complete)
            throw std::invalid_argument("pass --size explicitly for complete graphs");
        size = default_seed_size(spec, opt.k);
    }

    if (method == "enumerate") {
        ExactProbability p = enumeration_probability(lg.graph(), opt.k, size, search_options(opt));
        if (format == "json") {
            print_json(json{{"method", method},
                            {"family", family_name(spec.family)},
                            {"n", spec.n},
                            {"p", spec.p},
                            {"k", opt.k},
                            {"size", size},
                            {"probability", probability_to_json(p, opt.digits)},
                            {"resilience", probability_to_json(p.complement(), opt.digits)}});
            return 0;
        }
        std::cout << "method: enumerate\nseed size: " << size << "\n"
                  << "success probability: " << p.to_string() << " = " << p.decimal(opt.digits)
                  << "\n"
                  << "resilience factor: " << p.complement().to_string() << " = "
                  << p.complement().decimal(opt.digits) << "\n";
        return 0;
    }

    if (method != "montecarlo") throw std::invalid_argument("unknown method '" + method + "'");
    EstimateReport est =
        monte_carlo_probability(lg.graph(), opt.k, size, opt.trials, opt.rng_seed, opt.threads);
    if (format == "json") {
        json j = estimate_to_json(est);
        j["method"] = method;
        j["family"] = family_name(spec.family);
        j["n"] = spec.n;
        j["p"] = spec.p;
        j["k"] = opt.k;
        j["size"] = size;
        j["resilience_estimate"] = 1.0 - est.estimate;
        print_json(j);
        return 0;
    }
    std::cout << "method: montecarlo\nseed size: " << size << "\n"
              << "trials: " << est.trials << "\n"
              << "successes: " << est.successes << "\n"
              << "estimate: " << fixed6(est.estimate) << "\n"
              << "half-width (95%): " << fixed6(est.half_width_95) << "\n"
              << "resilience estimate: " << fixed6(1.0 - est.estimate) << "\n"
              << "rng seed: " << est.rng_seed << "\n";
    return 0;
}

// --------------------------------------------------------------- sweep ----

struct Range {
    std::size_t lo = 0;
    std::size_t hi = 0;  // inclusive; lo > hi means empty
};

Range parse_range(const std::string& text, const char* what) {
    auto parse_num = [&](const std::string& s) {
        std::size_t pos = 0;
        unsigned long value = std::stoul(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(std::string("malformed ") + what + " range '" + text + "'");
        return static_cast<std::size_t>(value);
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        std::size_t v = parse_num(text);
        return {v, v};
    }
    return {parse_num(text.substr(0, dots)), parse_num(text.substr(dots + 2))};
}

int cmd_sweep(const Options& opt) {
    std::string format = pick_format(opt, "csv", {"csv", "json", "text"});
    Family family = family_from_name(opt.family);
    if (family != Family::Corona && family != Family::DoubleCorona && family != Family::Cycle)
        throw std::invalid_argument("sweep covers cycle, corona, and double-corona families");
    Range n_range = parse_range(opt.n_range, "n");
    Range p_range = family == Family::Cycle ? Range{0, 0} : parse_range(opt.p_range, "p");
    Range k_range = parse_range(opt.k_range, "k");
    if (k_range.lo < 1) throw std::invalid_argument("k range must start at 1 or above");

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (opt.out_path != "-") {
        file.open(opt.out_path);
        if (!file) throw std::invalid_argument("cannot open output file '" + opt.out_path + "'");
        out = &file;
    }

    json rows = json::array();
    std::ostringstream csv;
    csv << "family,n,p,k,num_vertices,formula,reduce,brute,agree\n";
    for (std::size_t n = n_range.lo; n <= n_range.hi && n_range.lo <= n_range.hi; ++n) {
        for (std::size_t p = p_range.lo; p <= p_range.hi; ++p) {
            for (std::size_t k = k_range.lo; k <= k_range.hi; ++k) {
                FamilySpec spec{family, n, p};
                spec.validate();
                unsigned kk = static_cast<unsigned>(k);
                ConversionNumber formula = conversion_number(spec, kk);
                std::string reduce_cell, brute_cell;
                bool agree = true;
                if (reduction_applies(spec, kk)) {
                    ConversionNumber r = reduced(spec, kk);
                    reduce_cell = r.to_string();
                    agree = agree && r == formula;
                }
                try {
                    SearchReport report =
                        brute_force_min(build_family(spec).graph(), kk, search_options(opt));
                    brute_cell = report.minimum.to_string();
                    agree = agree && report.minimum == formula;
                } catch (const BudgetExceededError&) {
                    brute_cell = "refused(budget)";
                }
                csv << family_name(family) << "," << n << "," << p << "," << k << ","
                    << spec.expected_vertices() << "," << formula.to_string() << "," << reduce_cell
                    << "," << brute_cell << "," << (agree ? "yes" : "no") << "\n";
                rows.push_back(json{{"family", family_name(family)},
                                    {"n", n},
                                    {"p", p},
                                    {"k", k},
                                    {"num_vertices", spec.expected_vertices()},
                                    {"formula", formula.to_string()},
                                    {"reduce", reduce_cell},
                                    {"brute", brute_cell},
                                    {"agree", agree}});
            }
        }
    }
    if (format == "json")
        *out << rows.dump(2) << "\n";
    else
        *out << csv.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Irreversible k-threshold conversion on corona-style graph products"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    const char* env_budget = std::getenv("THRESHOLDLAB_BUDGET");
    if (env_budget != nullptr) {
        try {
            std::size_t pos = 0;
            opt.budget = std::stoull(env_budget, &pos);
            if (pos != std::string(env_budget).size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            std::cerr << "error: THRESHOLDLAB_BUDGET must be an unsigned integer\n";
            return kExitInvalid;
        }
    }

    app.add_option("--format", opt.format, "Output format: json, csv, or text");
    app.add_option("--budget", opt.budget, "Maximum candidate seeds any enumeration may simulate");
    app.add_option("--rng-seed", opt.rng_seed, "Seed for Monte-Carlo sampling");
    app.add_option("--threads", opt.threads, "Worker threads (0 = hardware)");

    auto add_family = [&](CLI::App* sub, bool need_k) {
        sub->add_option("--family", opt.family, "cycle, complete, corona, or double-corona")
            ->required();
        sub->add_option("-n,--n", opt.n, "Cycle length");
        sub->add_option("-p,--p", opt.p, "Block size");
        if (need_k) sub->add_option("-k,--k", opt.k, "Threshold")->required();
    };

    CLI::App* info = app.add_subcommand("info", "Construct a graph and print its summary");
    add_family(info, false);
    info->add_flag("--emit-graph", opt.emit_graph, "Also emit the full graph JSON");

    CLI::App* simulate = app.add_subcommand("simulate", "Run the process from a seed");
    add_family(simulate, true);
    simulate->add_option("--seed", opt.seed_spec,
                         "Seed: 'canonical', comma-separated ids, or a block pattern")
        ->required();
    simulate->add_option("--max-steps", opt.max_steps, "Round limit (0 = vertex count)");

    CLI::App* conv = app.add_subcommand("conv", "Conversion number of an instance");
    add_family(conv, true);
    conv->add_option("--method", opt.method, "formula (default), reduce, or brute");
    conv->add_flag("--verify", opt.verify, "Run all applicable methods and require agreement");
    conv->add_option("--size-limit", opt.size_limit, "Largest seed size brute force may try");

    CLI::App* min_set = app.add_subcommand("min-set", "Exhaustive minimum-seed search report");
    add_family(min_set, true);
    min_set->add_option("--size-limit", opt.size_limit, "Largest seed size to try");

    CLI::App* probability =
        app.add_subcommand("probability", "Chance a uniformly random seed converts");
    add_family(probability, true);
    probability->add_option("--method", opt.method, "formula (default), enumerate, or montecarlo");
    probability->add_option("--size", opt.size, "Seed size (default: the conversion number)");
    probability->add_option("--trials", opt.trials, "Monte-Carlo trials");
    probability->add_option("--digits", opt.digits, "Decimal digits in rendered probabilities");

    CLI::App* sweep = app.add_subcommand("sweep", "Formula/reduction/brute table over a grid");
    sweep->add_option("--family", opt.family, "cycle, corona, or double-corona")->required();
    sweep->add_option("--n", opt.n_range, "n range, e.g. 3..6")->required();
    sweep->add_option("--p", opt.p_range, "p range, e.g. 1..3");
    sweep->add_option("--k", opt.k_range, "k range, e.g. 1..5")->required();
    sweep->add_option("--out", opt.out_path, "Output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalid;
    }

    try {
        if (info->parsed()) return cmd_info(opt);
        if (simulate->parsed()) return cmd_simulate(opt);
        if (conv->parsed()) return cmd_conv(opt);
        if (min_set->parsed()) return cmd_min_set(opt);
        if (probability->parsed()) return cmd_probability(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
