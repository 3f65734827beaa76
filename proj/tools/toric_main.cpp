#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "toric/io.hpp"

using namespace toric;

namespace {

struct CommonArgs {
    std::string input_file;
    std::string model_name;
    std::string format_name = "text";
    std::size_t fiber_cap = default_fiber_cap;
    unsigned jobs = 1;
    bool chain = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_model = true) {
    if (needs_model) {
        cmd->add_option("input", args.input_file,
                        "matrix file (first line 'd r', then d rows)");
        cmd->add_option("--model", args.model_name,
                        "builtin model name (paper-example)");
    }
    cmd->add_option("--format", args.format_name, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--fiber-cap", args.fiber_cap,
                    "abort when a fiber exceeds this many monomials");
    cmd->add_option("--jobs", args.jobs, "threads for independent runs");
    cmd->add_flag("--chain-criterion", args.chain,
                  "enable Buchberger's chain criterion");
}

ModelMatrix load_model(const CommonArgs& args) {
    if (!args.model_name.empty()) {
        if (!args.input_file.empty())
            fail(errc::parse_error, "give either an input file or --model, not both");
        return builtin_model(args.model_name);
    }
    if (args.input_file.empty())
        fail(errc::parse_error, "no input: give a matrix file or --model <name>");
    return parse_matrix_file(args.input_file);
}

Format format_of(const CommonArgs& args) {
    return args.format_name == "json" ? Format::json : Format::text;
}

PipelineOptions pipeline_options(const CommonArgs& args) {
    PipelineOptions opts;
    if (args.fiber_cap == 0)
        fail(errc::parse_error, "--fiber-cap must be at least 1");
    opts.fiber_cap = args.fiber_cap;
    opts.jobs = args.jobs;
    opts.chain_criterion = args.chain;
    return opts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric ideal fibers, Markov bases and indispensable binomials"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string degree_text;
    std::string method = "both";
    std::size_t lowest = 1;
    std::string order_matrix_file;
    std::string kron_spec;

    CLI::App* validate = app.add_subcommand("validate", "check a model matrix");
    add_common(validate, args);

    CLI::App* fiber_cmd = app.add_subcommand("fiber", "enumerate one fiber");
    add_common(fiber_cmd, args);
    fiber_cmd->add_option("--degree", degree_text, "degree, d integers")->required();

    CLI::App* nabla_cmd =
        app.add_subcommand("nabla", "fiber complex: edges and components");
    add_common(nabla_cmd, args);
    nabla_cmd->add_option("--degree", degree_text, "degree, d integers")->required();

    CLI::App* degrees_cmd =
        app.add_subcommand("degrees", "minimal degrees with fiber statistics");
    add_common(degrees_cmd, args);

    CLI::App* grobner_cmd =
        app.add_subcommand("grobner", "reduced Grobner basis of the toric ideal");
    add_common(grobner_cmd, args);
    grobner_cmd->add_option("--lowest", lowest,
                            "1-based variable made lowest (default 1)");
    grobner_cmd
        ->add_option("--order-matrix,--matrix-order", order_matrix_file,
                     "file with an explicit r-row order matrix")
        ->excludes("--lowest");

    CLI::App* markov_cmd =
        app.add_subcommand("markov", "minimal binomial generating set");
    add_common(markov_cmd, args);

    CLI::App* indis_cmd =
        app.add_subcommand("indispensable", "indispensable binomials");
    add_common(indis_cmd, args);
    indis_cmd->add_option("--method", method, "nabla|grobner|both")
        ->check(CLI::IsMember({"nabla", "grobner", "both"}));

    CLI::App* monomials_cmd =
        app.add_subcommand("monomials", "indispensable monomials");
    add_common(monomials_cmd, args);
    monomials_cmd->add_option(
        "--degree", degree_text,
        "restrict to the maximal-gcd construction at this degree");

    CLI::App* verdict_cmd = app.add_subcommand(
        "verdict", "is the minimal binomial generating set unique?");
    add_common(verdict_cmd, args);

    CLI::App* lawrence_cmd =
        app.add_subcommand("lawrence-verdict", "verdict for the Lawrence lifting");
    add_common(lawrence_cmd, args);

    CLI::App* kron_cmd =
        app.add_subcommand("kron", "build a stacked Kronecker product matrix");
    add_common(kron_cmd, args, /*needs_model=*/false);
    kron_cmd->add_option("spec", kron_spec,
                         "e.g. \"ones(2)*id(4)*id(2);id(4)*ones(2)*id(2)\"")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format format = format_of(args);
        const PipelineOptions opts = pipeline_options(args);

        if (*kron_cmd) {
            std::cout << emit_matrix(build_kronecker(parse_kronecker(kron_spec)),
                                     format);
            return 0;
        }

        ModelMatrix model = load_model(args);

        if (*validate) {
            std::cout << emit_matrix(model, format);
        } else if (*fiber_cmd) {
            Degree a = parse_degree(degree_text, model.d);
            std::cout << emit_fiber(enumerate_fiber(model, a, opts.fiber_cap), format);
        } else if (*nabla_cmd) {
            Degree a = parse_degree(degree_text, model.d);
            std::cout << emit_nabla(
                build_nabla(enumerate_fiber(model, a, opts.fiber_cap)), format);
        } else if (*degrees_cmd) {
            std::cout << emit_degree_reports(minimal_degrees(model, opts), format);
        } else if (*grobner_cmd) {
            TermOrder ord;
            if (!order_matrix_file.empty()) {
                ord = order_from_rows(parse_int_matrix_file(order_matrix_file));
                if (ord.nvars != model.r)
                    fail(errc::length_mismatch,
                         "order matrix width differs from variable count");
            } else {
                if (lowest < 1 || lowest > model.r)
                    fail(errc::index_out_of_range,
                         "--lowest must be between 1 and " + std::to_string(model.r));
                ord = degrevlex_lowest(lowest - 1, model.weights);
            }
            LatticeBasis kernel = lattice_kernel(model);
            std::vector<Binomial> gens;
            for (const IntRow& w : kernel) gens.push_back(binomial_from_vector(model, w));
            gens = saturate_full(model, std::move(gens),
                                 EngineOptions{opts.chain_criterion});
            GrobnerBasis basis = reduce_gb(
                buchberger(gens, std::move(ord), EngineOptions{opts.chain_criterion}));
            std::cout << emit_grobner(model, basis, format);
        } else if (*markov_cmd) {
            std::cout << emit_markov(markov_basis(model, opts), model.weights, format);
        } else if (*indis_cmd) {
            std::vector<Binomial> result;
            if (method == "nabla") {
                result = indispensable_binomials_combinatorial(model, opts);
            } else if (method == "grobner") {
                result = indispensable_binomials_grobner(model, opts);
            } else {
                result = indispensable_binomials_combinatorial(model, opts);
                std::vector<Binomial> via_grobner =
                    indispensable_binomials_grobner(model, opts);
                if (result != via_grobner) {
                    std::cerr << "error: the two characterizations disagree\n"
                              << "combinatorial:\n"
                              << emit_binomials(model.weights, result, Format::text)
                              << "grobner:\n"
                              << emit_binomials(model.weights, via_grobner,
                                                Format::text);
                    return 1;
                }
            }
            std::cout << emit_binomials(model.weights, std::move(result), format);
        } else if (*monomials_cmd) {
            std::vector<Exponents> result;
            if (degree_text.empty()) {
                result = indispensable_monomials(model, opts);
            } else {
                result = indispensable_monomials_at(
                    model, parse_degree(degree_text, model.d), opts);
            }
            std::cout << emit_monomials(model.weights, std::move(result), format);
        } else if (*verdict_cmd) {
            std::cout << emit_verdict(uniqueness_verdict(model, opts), format);
        } else if (*lawrence_cmd) {
            std::cout << emit_verdict(lawrence_uniqueness(model, opts), format);
        }
        return 0;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
