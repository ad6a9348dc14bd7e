#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "nimseq/json_io.hpp"
#include "nimseq/random.hpp"

namespace {

using namespace nimseq;

enum class Format { json, csv, text };

struct Options {
    std::string input;
    Format format = Format::json;
    Int budget = 0;
    Int rows = 4;
    Int mu = -1;
    Int nu = 1;
    Int p = 1;
    Int terms = 32;
    std::vector<Int> seed_values;
    Method method = Method::cuts;
    std::optional<std::uint64_t> rand_seed;
    int verbosity = 0;
};

std::string read_input(const std::string& input) {
    if (input == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream file(input);
    if (file) return {std::istreambuf_iterator<char>(file), {}};
    return input;
}

ProblemInstance load_instance(const Options& o) {
    if (o.rand_seed) {
        std::mt19937_64 rng(*o.rand_seed);
        return random_instance(rng);
    }
    if (o.input.empty()) throw ValidationError("an instance is required (--input or --rand-seed)");
    return instance_from_json(parse_json(read_input(o.input)));
}

std::string join(const std::vector<Int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

int run_gen(const Options& o) {
    const auto inst = load_instance(o);
    const auto values = generate(inst, o.terms);
    switch (o.format) {
        case Format::json:
            if (o.rand_seed) emit(Json{{"instance", inst}, {"values", values}});
            else emit(values);
            break;
        case Format::csv: std::cout << join(values, ',') << '\n'; break;
        case Format::text: std::cout << join(values, ' ') << '\n'; break;
    }
    return 0;
}

int run_detect(const Options& o) {
    const auto inst = load_instance(o);
    DetectOptions opts;
    opts.method = o.method;
    opts.budget = o.budget;
    if (o.verbosity > 0)
        opts.trace = [](Int pos, std::size_t hash) { std::cerr << pos << ' ' << hash << '\n'; };
    DetectStats stats;
    const auto cert = detect(inst, opts, &stats);
    if (!verify_certificate(inst, cert).ok) throw InvalidCertificate("certificate failed verification");
    switch (o.format) {
        case Format::json: emit(cert); break;
        case Format::csv:
            std::cout << "preperiod,period,diff_period\n"
                      << cert.preperiod << ',' << cert.period << ",\"" << join(cert.diff_period, ';') << "\"\n";
            break;
        case Format::text:
            std::cout << "preperiod " << cert.preperiod << "\nperiod " << cert.period << "\ndiff_period "
                      << join(cert.diff_period, ' ') << '\n';
            break;
    }
    if (o.verbosity > 0)
        std::cerr << "scanned " << stats.scanned_positions << " generated " << stats.generated_terms
                  << " rejected " << stats.rejected_repeats << '\n';
    return 0;
}

int run_wythoff(const Options& o) {
    const auto analysis = analyze_rows(o.rows - 1, o.budget, o.method);
    if (o.format == Format::json) {
        Json rows = Json::array();
        for (const auto& r : analysis.rows) rows.push_back({{"y", r.row}, {"certificate", r.certificate}});
        Json out{{"rows", rows}};
        if (analysis.failure) out["failure"] = *analysis.failure;
        emit(out);
    } else {
        const char sep = o.format == Format::csv ? ',' : ' ';
        std::cout << "y" << sep << "preperiod" << sep << "period" << sep << "diff_period\n";
        for (const auto& r : analysis.rows) {
            const auto& c = r.certificate;
            std::cout << r.row << sep << c.preperiod << sep << c.period << sep;
            if (o.format == Format::csv) std::cout << '"' << join(c.diff_period, ';') << "\"\n";
            else std::cout << join(c.diff_period, ' ') << '\n';
        }
    }
    if (analysis.failure) {
        std::cerr << "nimseq: " << *analysis.failure << '\n';
        return 2;
    }
    return 0;
}

int run_bound(const Options& o) {
    DifferenceBounds b;
    b.mu = o.mu;
    b.nu = o.nu;
    b.big_m = o.nu - o.mu;
    const Int kh = o.seed_values.empty() ? 0 : k_hat(o.seed_values);
    const auto report = bound_report(b, o.p, kh);
    if (o.format == Format::json) {
        emit(report);
    } else {
        for (const auto& [key, value] : Json(report).items()) std::cout << key << ' ' << value.dump() << '\n';
    }
    return 0;
}

int run_construct(const Options& o) {
    const auto r = construct_extremal(o.mu, o.nu);
    if (o.format == Format::json) {
        emit(Json{{"instance", r.instance},
                  {"certificate", r.certificate},
                  {"p", r.p},
                  {"expected_period", r.expected_period},
                  {"cycle_lengths", r.cycle_lengths}});
    } else {
        std::cout << "p " << r.p << "\nperiod " << r.certificate.period << "\nexpected " << r.expected_period
                  << "\ncycles " << join(r.cycle_lengths, ' ') << '\n'
                  << format_binary(binary_rep(r.path.front()));
    }
    return 0;
}

int run_explore(const Options& o) {
    const auto s = explore_digraph(o.rows, o.mu, o.nu);
    if (o.format == Format::json) {
        emit(s);
    } else {
        std::cout << "vertices " << s.vertices << "\nedges " << s.edges << "\nclosed " << s.cycled_closed_count << '\n';
        for (auto [size, count] : s.component_sizes) std::cout << "size " << size << " count " << count << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Additively periodic Nim sequences: generation, detection and bounds"};
    app.require_subcommand(1, 1);
    Options o;

    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
    const std::map<std::string, Method> methods{{"cuts", Method::cuts}, {"window", Method::window}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("-i,--input", o.input, "Instance JSON file, inline JSON, or - for stdin");
        sub->add_option("--rand-seed", o.rand_seed, "Use a seeded random instance instead of --input");
    };
    auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--mu", o.mu, "Lower difference bound")->required();
        sub->add_option("--nu", o.nu, "Upper difference bound")->required();
    };

    auto* gen = app.add_subcommand("gen", "Generate the first terms of a sequence");
    add_input(gen);
    add_format(gen);
    gen->add_option("--terms", o.terms, "Number of terms")->check(CLI::NonNegativeNumber);

    auto* det = app.add_subcommand("detect", "Detect and certify the additive period");
    add_input(det);
    add_format(det);
    det->add_option("--budget", o.budget, "Term budget (0 selects the default)")->check(CLI::NonNegativeNumber);
    det->add_option("--method", o.method, "Signature method")->transform(CLI::CheckedTransformer(methods));
    det->add_flag("-v,--verbose", o.verbosity, "Trace scanned positions to stderr");

    auto* wyt = app.add_subcommand("wythoff", "Period table for the rows of Wythoff's game");
    add_format(wyt);
    wyt->add_option("--rows", o.rows, "Number of rows")->check(CLI::PositiveNumber);
    wyt->add_option("--budget", o.budget, "Term budget per row")->check(CLI::NonNegativeNumber);
    wyt->add_option("--method", o.method, "Signature method")->transform(CLI::CheckedTransformer(methods));

    auto* bnd = app.add_subcommand("bound", "Period and preperiod bounds");
    add_bounds(bnd);
    add_format(bnd);
    bnd->add_option("--p", o.p, "Period of the obstruction sets")->check(CLI::PositiveNumber);
    bnd->add_option("--seed-values", o.seed_values, "Seed values for the preperiod bound")->delimiter(',');

    auto* con = app.add_subcommand("construct", "Build an instance with maximal period");
    add_bounds(con);
    add_format(con);

    auto* exp = app.add_subcommand("explore", "Components of the optimized cut-set digraph");
    add_bounds(exp);
    add_format(exp);
    exp->add_option("--rows", o.rows, "Rows per cut set")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*gen) return run_gen(o);
        if (*det) return run_detect(o);
        if (*wyt) return run_wythoff(o);
        if (*bnd) return run_bound(o);
        if (*con) return run_construct(o);
        return run_explore(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "nimseq: " << e.what() << " (" << e.scanned() << " terms)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "nimseq: " << e.what() << '\n';
        return 1;
    }
}
