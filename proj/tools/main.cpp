// Batch command-line interface: align two ontologies, evaluate a
// predicted table against a gold standard, sweep score thresholds,
// generate synthetic twins, and dump ontology statistics.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ontoalign/aligner.hpp"
#include "ontoalign/evaluation.hpp"
#include "ontoalign/ontology.hpp"
#include "ontoalign/synth.hpp"

namespace fs = std::filesystem;
using namespace ontoalign;

namespace {

constexpr int kExitInputError = 2;

struct LoadFlags {
    std::string format = "auto";
    std::string type_iri;
    std::string subclass_iri;
    std::string subproperty_iri;
    bool no_closure = false;
    bool skip_malformed = false;
};

void add_load_flags(CLI::App* cmd, LoadFlags& flags) {
    cmd->add_option("--format", flags.format, "Input format")
        ->check(CLI::IsMember({"ntriples", "tsv", "auto"}));
    cmd->add_option("--type-iri", flags.type_iri, "Relation IRI marking instance-of-class facts");
    cmd->add_option("--subclass-iri", flags.subclass_iri, "Relation IRI for subclass facts");
    cmd->add_option("--subproperty-iri", flags.subproperty_iri,
                    "Relation IRI for subproperty facts");
    cmd->add_flag("--no-closure", flags.no_closure,
                  "Trust the input as already deductively closed");
    cmd->add_flag("--skip-malformed", flags.skip_malformed,
                  "Skip and count malformed lines instead of aborting");
}

Ontology load_with_flags(const std::string& path, const LoadFlags& flags) {
    OntologyOptions opts;
    if (!flags.type_iri.empty()) opts.type_iri = flags.type_iri;
    if (!flags.subclass_iri.empty()) opts.subclass_iri = flags.subclass_iri;
    if (!flags.subproperty_iri.empty()) opts.subproperty_iri = flags.subproperty_iri;
    opts.compute_closure = !flags.no_closure;

    ParseOptions parse_opts;
    parse_opts.skip_malformed = flags.skip_malformed;

    TripleFormat format = flags.format == "ntriples"  ? TripleFormat::NTriples
                          : flags.format == "tsv"     ? TripleFormat::Tsv
                                                      : detect_format(path);
    auto in = open_text_input(path);
    OntologyBuilder builder(opts);
    ParseStats stats = parse_file(*in, format, [&](RawTriple&& t) { builder.add(t); }, parse_opts);
    if (stats.skipped > 0) {
        std::cerr << path << ": skipped " << stats.skipped << " malformed lines\n";
    }
    return builder.finalize();
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

int run_align(const std::string& o1_path, const std::string& o2_path, const LoadFlags& flags,
              const Config& cfg, const std::string& out_dir, bool dump_iterations) {
    Config effective = cfg;
    fs::create_directories(out_dir);
    if (dump_iterations) {
        effective.iteration_dump_dir = (fs::path(out_dir) / "iterations").string();
    }
    effective.validate();

    Ontology o1 = load_with_flags(o1_path, flags);
    Ontology o2 = load_with_flags(o2_path, flags);

    AlignmentResult result = align(o1, o2, effective);

    auto instances = open_output(fs::path(out_dir) / "instances.tsv");
    write_equalities_tsv(instances, result.equalities, o1, o2);
    auto relations = open_output(fs::path(out_dir) / "relations.tsv");
    write_subrelations_tsv(relations, result.subrelations, o1, o2);
    auto classes = open_output(fs::path(out_dir) / "classes.tsv");
    write_subclasses_tsv(classes, result.subclasses, o1, o2);
    auto diagnostics = open_output(fs::path(out_dir) / "diagnostics.jsonl");
    write_diagnostics_jsonl(diagnostics, result.diagnostics);

    std::cout << (result.converged ? "converged" : "stopped") << " after " << result.iterations
              << " iteration(s); " << result.assignment.size() << " assignments, "
              << result.subrelations.size() << " relation scores, " << result.subclasses.size()
              << " class scores\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Probabilistic alignment of instances, relations, and classes across two ontologies"};
    app.require_subcommand(1);

    // --- align ---
    auto* align_cmd = app.add_subcommand("align", "Align two ontologies");
    std::string o1_path;
    std::string o2_path;
    std::string out_dir;
    LoadFlags align_flags;
    Config cfg;
    bool negative_evidence = false;
    bool dump_iterations = false;
    std::string literal_sim = "exact";
    align_cmd->add_option("--o1", o1_path, "First ontology file")->required();
    align_cmd->add_option("--o2", o2_path, "Second ontology file")->required();
    align_cmd->add_option("--out", out_dir, "Output directory")->required();
    add_load_flags(align_cmd, align_flags);
    align_cmd->add_option("--theta", cfg.theta, "Bootstrap constant and pruning threshold");
    align_cmd->add_option("--max-iters", cfg.max_iterations, "Iteration cap");
    align_cmd->add_option("--pair-limit", cfg.pair_limit,
                          "Statements sampled per relation/class and direction");
    align_cmd->add_flag("--negative-evidence", negative_evidence,
                        "Use the missing-match penalty as well as positive evidence");
    align_cmd->add_option("--literal-sim", literal_sim, "Literal similarity")
        ->check(CLI::IsMember({"exact", "normalized", "edit"}));
    align_cmd->add_option("--workers", cfg.workers, "Scoring threads (0 = hardware)");
    align_cmd->add_option("--convergence", cfg.convergence_fraction,
                          "Assignment-change fraction that counts as converged");
    align_cmd->add_option("--bootstrap", cfg.bootstrap,
                          "Separate bootstrap constant (defaults to theta)");
    align_cmd->add_option("--dampening", cfg.dampening, "Decaying update weight (0 disables)");
    align_cmd->add_flag("--dump-iterations", dump_iterations,
                        "Write per-iteration tables under OUT/iterations");

    // --- eval ---
    auto* eval_cmd = app.add_subcommand("eval", "Score predictions against a gold standard");
    std::string pred_path;
    std::string gold_path;
    eval_cmd->add_option("--pred", pred_path, "Predicted table (instances.tsv)")->required();
    eval_cmd->add_option("--gold", gold_path, "Gold standard TSV")->required();

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "Retained counts per score threshold");
    std::string table_path;
    std::string sweep_gold_path;
    std::vector<double> thresholds;
    sweep_cmd->add_option("--table", table_path, "Scored table file")->required();
    sweep_cmd->add_option("--thresholds", thresholds, "Ascending thresholds")->required();
    sweep_cmd->add_option("--gold", sweep_gold_path, "Labels for precision (optional)");

    // --- synth ---
    auto* synth_cmd = app.add_subcommand("synth", "Generate a renamed twin plus gold standard");
    std::string synth_in;
    std::string synth_out;
    LoadFlags synth_flags;
    TwinOptions twin_opts;
    synth_cmd->add_option("--in", synth_in, "Source ontology file")->required();
    synth_cmd->add_option("--out", synth_out, "Output directory")->required();
    add_load_flags(synth_cmd, synth_flags);
    synth_cmd->add_option("--drop-rate", twin_opts.drop_rate, "Fraction of statements dropped");
    synth_cmd->add_option("--perturb-rate", twin_opts.perturb_rate,
                          "Fraction of literal occurrences format-perturbed");
    synth_cmd->add_option("--seed", twin_opts.seed, "Random seed");
    synth_cmd->add_option("--prefix", twin_opts.rename_prefix, "Identifier rename prefix");

    // --- stats ---
    auto* stats_cmd = app.add_subcommand("stats", "Entity/statement counts and functionalities");
    std::string stats_in;
    std::string stats_out;
    LoadFlags stats_flags;
    stats_cmd->add_option("--in", stats_in, "Ontology file")->required();
    stats_cmd->add_option("--out", stats_out, "Output directory (default: stdout)");
    add_load_flags(stats_cmd, stats_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (align_cmd->parsed()) {
            cfg.negative_evidence = negative_evidence;
            cfg.literal_sim = literal_sim == "normalized" ? LiteralSimChoice::Normalized
                              : literal_sim == "edit"     ? LiteralSimChoice::Edit
                                                          : LiteralSimChoice::Exact;
            return run_align(o1_path, o2_path, align_flags, cfg, out_dir, dump_iterations);
        }

        if (eval_cmd->parsed()) {
            auto rows = read_scored_pairs_file(pred_path);
            GoldStandard gold = GoldStandard::load_file(gold_path);
            Metrics metrics = evaluate_pairs(top_predictions(rows), gold);
            metrics.print(std::cout);
            return 0;
        }

        if (sweep_cmd->parsed()) {
            auto rows = read_scored_pairs_file(table_path);
            std::optional<GoldStandard> labels;
            if (!sweep_gold_path.empty()) labels = GoldStandard::load_file(sweep_gold_path);
            auto sweep_rows = threshold_sweep(rows, labels, thresholds);
            write_sweep_csv(std::cout, sweep_rows);
            return 0;
        }

        if (synth_cmd->parsed()) {
            Ontology source = load_with_flags(synth_in, synth_flags);
            TwinResult twin = make_twin(source, twin_opts);
            fs::create_directories(synth_out);

            TripleFormat format = synth_flags.format == "ntriples" ? TripleFormat::NTriples
                                  : synth_flags.format == "tsv"    ? TripleFormat::Tsv
                                                                   : detect_format(synth_in);
            fs::path twin_path = fs::path(synth_out) /
                                 (format == TripleFormat::Tsv ? "twin.tsv" : "twin.nt");
            auto twin_out = open_output(twin_path);
            if (format == TripleFormat::Tsv) {
                twin.twin.write_tsv(twin_out);
            } else {
                twin.twin.write_ntriples(twin_out);
            }
            auto write_gold = [&](const char* name,
                                  const std::vector<std::pair<std::string, std::string>>& pairs) {
                auto out = open_output(fs::path(synth_out) / name);
                for (const auto& [a, b] : pairs) out << a << '\t' << b << '\n';
            };
            write_gold("gold_instances.tsv", twin.instance_gold);
            write_gold("gold_relations.tsv", twin.relation_gold);
            write_gold("gold_classes.tsv", twin.class_gold);

            std::cout << "twin: " << twin.twin.statements().size() << " statements ("
                      << twin.dropped_statements << " dropped, " << twin.perturbed_literals
                      << " literals perturbed)\n";
            return 0;
        }

        if (stats_cmd->parsed()) {
            Ontology ont = load_with_flags(stats_in, stats_flags);
            FunctionalityTable funs = FunctionalityTable::compute(ont);
            if (stats_out.empty()) {
                ont.write_stats_csv(std::cout);
                funs.write_csv(std::cout, ont);
            } else {
                fs::create_directories(stats_out);
                auto stats_file = open_output(fs::path(stats_out) / "ontology_stats.csv");
                ont.write_stats_csv(stats_file);
                auto fun_file = open_output(fs::path(stats_out) / "functionalities.csv");
                funs.write_csv(fun_file, ont);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
