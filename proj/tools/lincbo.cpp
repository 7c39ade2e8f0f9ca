// Command-line front end: basis computation, intent enumeration, dataset
// generation, conceptual scaling, benchmarking and basis verification.
//
// Exit codes: 0 ok, 1 I/O error, 2 parse error, 3 bad flags/arguments,
// 4 algorithm disagreement in bench, 5 failed verification.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lincbo/basis_io.hpp"
#include "lincbo/bench.hpp"
#include "lincbo/context_io.hpp"
#include "lincbo/dgbasis.hpp"
#include "lincbo/enumeration.hpp"
#include "lincbo/scaling.hpp"

namespace {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << data;
    if (!out) throw io_error("write to '" + path + "' failed");
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

lincbo::FormalContext load_context(const std::string& path, const std::string& format) {
    std::string fmt = format;
    if (fmt == "auto") {
        if (ends_with(path, ".cxt"))
            fmt = "cxt";
        else if (ends_with(path, ".fimi") || ends_with(path, ".dat") || ends_with(path, ".txt"))
            fmt = "fimi";
        else
            throw CLI::ValidationError("cannot infer input format of '" + path + "', use --input-format");
    }
    std::string data = read_input(path);
    return fmt == "cxt" ? lincbo::read_cxt(data) : lincbo::read_fimi(data);
}

std::string dataset_name(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

int cmd_basis(const std::string& input, const std::string& in_format, const std::string& algo_name,
              const std::string& out_format, bool reduced_rhs) {
    auto algo = lincbo::algorithm_from_string(algo_name);
    if (!algo) throw CLI::ValidationError("unknown algorithm '" + algo_name + "'");
    lincbo::FormalContext ctx = load_context(input, in_format);
    lincbo::BasisResult res = lincbo::compute_basis(ctx, *algo);
    if (out_format == "json") {
        nlohmann::json doc = lincbo::basis_result_to_json(res);
        doc["implications"] = nlohmann::json::array();
        for (const auto& imp : res.basis.implications()) doc["implications"].push_back(lincbo::implication_to_json(imp));
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& imp : res.basis.implications())
            std::cout << lincbo::implication_to_text(imp, ctx.attribute_names(), reduced_rhs) << "\n";
        std::cerr << "intents: " << res.intent_count << "\n"
                  << "pseudo_intents: " << res.pseudo_intent_count << "\n"
                  << "closure_calls: " << res.closure_calls << "\n"
                  << "ms: " << res.wall_ms << "\n";
    }
    return 0;
}

int cmd_intents(const std::string& input, const std::string& in_format, bool count_only) {
    lincbo::FormalContext ctx = load_context(input, in_format);
    auto close = [&](const lincbo::AttributeSet& b) { return ctx.closure_downup(b); };
    std::uint64_t count = 0;
    lincbo::cbo_closed_sets(close, ctx.n_attributes(), [&](const lincbo::AttributeSet& intent) {
        ++count;
        if (count_only) return;
        bool first = true;
        intent.for_each([&](int a) {
            if (!first) std::cout << ' ';
            std::cout << a + 1;
            first = false;
        });
        std::cout << "\n";
    });
    if (count_only) std::cout << count << "\n";
    return 0;
}

int cmd_gen(int contranominal, const std::vector<int>& random_params, std::uint64_t seed, const std::string& out) {
    lincbo::FormalContext ctx;
    if (contranominal > 0) {
        ctx = lincbo::gen_contranominal(contranominal);
    } else if (random_params.size() == 3) {
        ctx = lincbo::gen_random(random_params[0], random_params[1], random_params[2], seed);
    } else {
        throw CLI::ValidationError("gen: specify --contranominal N or --random NX NY D");
    }
    write_output(out, lincbo::write_cxt(ctx));
    return 0;
}

int cmd_scale(const std::string& input, const std::string& method_name, int k, bool drop_missing, bool no_header,
              bool remove_full, const std::string& cutpoints_path, const std::string& out) {
    lincbo::ScalingSpec spec;
    if (method_name == "nom")
        spec.method = lincbo::ScalingMethod::nom;
    else if (method_name == "ord")
        spec.method = lincbo::ScalingMethod::ord;
    else if (method_name == "inter")
        spec.method = lincbo::ScalingMethod::inter;
    else
        throw CLI::ValidationError("unknown scaling method '" + method_name + "'");
    spec.k = k;
    spec.drop_missing_rows = drop_missing;

    lincbo::DataTable table = lincbo::read_csv(read_input(input), !no_header);
    lincbo::ScaleResult result = lincbo::scale(table, spec);
    for (const auto& warning : result.warnings) std::cerr << "warning: " << warning << "\n";
    lincbo::FormalContext ctx = remove_full ? lincbo::remove_full_columns(result.context) : result.context;

    if (!cutpoints_path.empty()) {
        nlohmann::json doc;
        doc["features"] = nlohmann::json::array();
        for (const auto& [feature, cuts] : result.cutpoints)
            doc["features"].push_back({{"name", feature}, {"cutpoints", cuts}});
        write_output(cutpoints_path, doc.dump(2) + "\n");
    }
    write_output(out, lincbo::write_cxt(ctx));
    return 0;
}

int cmd_bench(const std::vector<std::string>& inputs, const std::string& in_format,
              const std::vector<std::string>& algo_names, int repeat, const std::string& format, int jobs) {
    std::vector<lincbo::AlgorithmId> algorithms;
    for (const auto& name : algo_names) {
        auto algo = lincbo::algorithm_from_string(name);
        if (!algo) throw CLI::ValidationError("unknown algorithm '" + name + "'");
        algorithms.push_back(*algo);
    }
    std::vector<lincbo::FormalContext> contexts;
    contexts.reserve(inputs.size());
    std::vector<std::pair<std::string, const lincbo::FormalContext*>> datasets;
    for (const auto& path : inputs) contexts.push_back(load_context(path, in_format));
    for (std::size_t i = 0; i < inputs.size(); ++i) datasets.emplace_back(dataset_name(inputs[i]), &contexts[i]);

    std::vector<lincbo::BenchRecord> records = lincbo::run_bench(datasets, algorithms, repeat, jobs);
    if (format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& rec : records)
            doc.push_back({{"dataset", rec.dataset},
                           {"algorithm", std::string(lincbo::to_string(rec.algorithm))},
                           {"repeat", rec.repeat},
                           {"mean_ms", rec.mean_ms},
                           {"intents", rec.intents},
                           {"pseudo_intents", rec.pseudo_intents},
                           {"closure_calls", rec.closure_calls}});
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << lincbo::bench_csv_header() << "\n";
        for (const auto& rec : records) std::cout << lincbo::bench_record_csv(rec) << "\n";
    }
    if (!lincbo::bench_counts_agree(records)) {
        std::cerr << "error: algorithms disagree on intent/pseudo-intent counts\n";
        return 4;
    }
    return 0;
}

int cmd_verify(const std::string& input, const std::string& in_format, const std::string& basis_path, int limit) {
    lincbo::FormalContext ctx = load_context(input, in_format);
    lincbo::Theory theory(ctx.n_attributes());
    if (basis_path.empty()) {
        theory = lincbo::lincbo_basis(ctx).basis;
        std::cerr << "verifying computed basis (" << theory.size() << " implications)\n";
    } else {
        theory = lincbo::read_theory(read_input(basis_path), ctx, ends_with(basis_path, ".json"));
    }
    lincbo::VerifyReport rep = lincbo::verify_basis(ctx, theory, limit);
    auto line = [](const char* what, bool checked, bool ok) {
        std::cout << what << ": " << (!checked ? "SKIP" : ok ? "PASS" : "FAIL") << "\n";
    };
    line("soundness", true, rep.soundness_ok);
    line("completeness", rep.exhaustive_checked, rep.completeness_ok);
    line("non-redundancy", rep.exhaustive_checked, rep.nonredundancy_ok);
    line("pseudo-intent count", rep.count_checked, rep.count_ok);
    if (rep.count_checked)
        std::cout << "basis size " << rep.basis_size << ", oracle " << rep.oracle_pseudo_count << "\n";
    return rep.all_ok() ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Duquenne-Guigues basis toolkit (LinCbO and friends)"};
    app.require_subcommand(1);

    std::string input, in_format = "auto", out, algo_name = "lincbo", out_format = "text";
    bool reduced_rhs = false;
    auto* basis_cmd = app.add_subcommand("basis", "compute the Duquenne-Guigues basis");
    basis_cmd->add_option("input", input, "context file (CXT or FIMI, '-' for stdin)")->required();
    basis_cmd->add_option("--input-format", in_format, "auto|cxt|fimi")->default_val("auto");
    basis_cmd->add_option("-a,--algorithm", algo_name, "lincbo|lincbo1|nc1|nc2|nc3|ncp1|ncp2|ncp3")
        ->default_val("lincbo");
    basis_cmd->add_option("--format", out_format, "text|json")->default_val("text");
    basis_cmd->add_flag("--reduced-rhs", reduced_rhs, "print conclusions without premise attributes");

    bool count_only = false;
    auto* intents_cmd = app.add_subcommand("intents", "enumerate or count intents");
    intents_cmd->add_option("input", input, "context file")->required();
    intents_cmd->add_option("--input-format", in_format, "auto|cxt|fimi")->default_val("auto");
    intents_cmd->add_flag("--count-only", count_only, "print the number of intents only");

    int contranominal = 0;
    std::vector<int> random_params;
    std::uint64_t seed = 1;
    auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic context as CXT");
    auto* contra_opt = gen_cmd->add_option("--contranominal", contranominal, "n x n context with incidence x != y");
    gen_cmd->add_option("--random", random_params, "NX NY D: NX objects, D of NY attributes each")
        ->expected(3)
        ->excludes(contra_opt);
    gen_cmd->add_option("--seed", seed, "xorshift64* seed")->default_val(1);
    gen_cmd->add_option("-o,--out", out, "output file (default stdout)");

    std::string method = "nom", cutpoints_path;
    int k = 2;
    bool drop_missing = false, no_header = false, remove_full = false;
    auto* scale_cmd = app.add_subcommand("scale", "binarize a CSV table into a CXT context");
    scale_cmd->add_option("input", input, "CSV file")->required();
    scale_cmd->add_option("--method", method, "nom|ord|inter")->default_val("nom");
    scale_cmd->add_option("--k", k, "bins per numeric feature (k >= 2)")->default_val(2);
    scale_cmd->add_flag("--drop-missing", drop_missing, "drop rows containing '?'");
    scale_cmd->add_flag("--no-header", no_header, "treat the first CSV line as data");
    scale_cmd->add_flag("--remove-full", remove_full, "drop attributes present in every object");
    scale_cmd->add_option("--cutpoints-json", cutpoints_path, "write cutpoints sidecar JSON here");
    scale_cmd->add_option("-o,--out", out, "output file (default stdout)");

    std::vector<std::string> inputs, algo_names;
    int repeat = 10, jobs = 1;
    std::string bench_format = "csv";
    auto* bench_cmd = app.add_subcommand("bench", "time basis algorithms over datasets");
    bench_cmd->add_option("inputs", inputs, "context files")->required();
    bench_cmd->add_option("--input-format", in_format, "auto|cxt|fimi")->default_val("auto");
    bench_cmd->add_option("-a,--algorithms", algo_names, "algorithms to run")->required();
    bench_cmd->add_option("--repeat", repeat, "runs per pair, mean reported")->default_val(10)
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--format", bench_format, "csv|json")->default_val("csv");
    bench_cmd->add_option("--jobs", jobs, "parallel (dataset, algorithm) pairs")
        ->envname("LINCBO_JOBS")
        ->default_val(1)
        ->check(CLI::PositiveNumber);

    std::string basis_path;
    int limit = 15;
    auto* verify_cmd = app.add_subcommand("verify", "check a basis against a context");
    verify_cmd->add_option("input", input, "context file")->required();
    verify_cmd->add_option("--basis", basis_path, "basis file (text or .json); default: compute with lincbo");
    verify_cmd->add_option("--input-format", in_format, "auto|cxt|fimi")->default_val("auto");
    verify_cmd->add_option("--limit", limit, "exhaustive checks up to this attribute count")->default_val(15);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (basis_cmd->parsed()) return cmd_basis(input, in_format, algo_name, out_format, reduced_rhs);
        if (intents_cmd->parsed()) return cmd_intents(input, in_format, count_only);
        if (gen_cmd->parsed()) return cmd_gen(contranominal, random_params, seed, out);
        if (scale_cmd->parsed())
            return cmd_scale(input, method, k, drop_missing, no_header, remove_full, cutpoints_path, out);
        if (bench_cmd->parsed()) return cmd_bench(inputs, in_format, algo_names, repeat, bench_format, jobs);
        if (verify_cmd->parsed()) return cmd_verify(input, in_format, basis_path, limit);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lincbo::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
