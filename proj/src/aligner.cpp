#include "ontoalign/aligner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace ontoalign {

void Config::validate() const {
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must be in (0,1)");
    if (pair_limit < 1) throw std::invalid_argument("pair_limit must be at least 1");
    if (!(convergence_fraction > 0.0 && convergence_fraction < 1.0)) {
        throw std::invalid_argument("convergence_fraction must be in (0,1)");
    }
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
    if (bootstrap >= 0.0 && !(bootstrap > 0.0 && bootstrap < 1.0)) {
        throw std::invalid_argument("bootstrap must be in (0,1)");
    }
    if (dampening < 0.0 || dampening >= 1.0) {
        if (dampening != 0.0) throw std::invalid_argument("dampening must be in [0,1)");
    }
}

double assignment_change_fraction(const MaximalAssignment& prev, const MaximalAssignment& next) {
    std::size_t changed = 0;
    std::size_t in_either = 0;
    for (const auto& [id, assigned] : prev.entries()) {
        ++in_either;
        auto now = next.partner_of(EntityId(id));
        if (!now || now->partner != assigned.partner) ++changed;
    }
    for (const auto& [id, _] : next.entries()) {
        if (!prev.partner_of(EntityId(id))) {
            ++in_either;
            ++changed;  // gained assignments count as changes
        }
    }
    if (in_either == 0) return 0.0;
    return static_cast<double>(changed) / static_cast<double>(in_either);
}

bool has_converged(const MaximalAssignment& prev, const MaximalAssignment& next, double fraction) {
    return assignment_change_fraction(prev, next) < fraction;
}

namespace {

// prev view for the next iteration: literal clamps plus the equalities
// of the given maximal assignment, nothing else.
EqualityTable restrict_to_assignment(const EqualityTable& clamps,
                                     const MaximalAssignment& assignment, int iteration) {
    EqualityTable view = clamps;
    for (const auto& [id, assigned] : assignment.entries()) {
        view.set(EntityId(id), assigned.partner, assigned.score);
    }
    view.iteration = iteration;
    return view;
}

void dump_iteration_tables(const std::string& dir, unsigned iteration, const EqualityTable& eqs,
                           const SubrelationTable& subrel, const Ontology& o1, const Ontology& o2) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::ofstream eq_out(fs::path(dir) / ("iteration_" + std::to_string(iteration) + "_instances.tsv"));
    write_equalities_tsv(eq_out, eqs, o1, o2);
    std::ofstream rel_out(fs::path(dir) / ("iteration_" + std::to_string(iteration) + "_relations.tsv"));
    write_subrelations_tsv(rel_out, subrel, o1, o2);
}

}  // namespace

AlignmentResult align(const Ontology& o1, const Ontology& o2, const Config& cfg) {
    cfg.validate();
    using clock = std::chrono::steady_clock;

    AlignmentResult result;

    LiteralSimilarity sim = make_literal_similarity(
        cfg.literal_sim, cfg.edit_cutoff >= 0.0 ? cfg.edit_cutoff : cfg.theta);
    result.literal_clamps = build_literal_clamps(o1, o2, sim, cfg.literal_sim, cfg.theta);

    FunctionalityTable funs1 = FunctionalityTable::compute(o1, cfg.functionality_strategy);
    FunctionalityTable funs2 = FunctionalityTable::compute(o2, cfg.functionality_strategy);

    MatcherConfig matcher_cfg;
    matcher_cfg.theta = cfg.theta;
    matcher_cfg.mode = cfg.negative_evidence ? EvidenceMode::Combined : EvidenceMode::Positive;
    matcher_cfg.penalty_inner_pair = cfg.penalty_inner_pair;
    matcher_cfg.workers = cfg.workers;

    SchemaConfig schema_cfg{cfg.theta, cfg.pair_limit};

    double bootstrap = cfg.bootstrap >= 0.0 ? cfg.bootstrap : cfg.theta;

    // The first pass sees only the literal clamps and the bootstrap
    // containment constant.
    EqualityTable prev_view = result.literal_clamps;
    MaximalAssignment prev_assignment;
    SubrelationTable subrel;

    for (unsigned k = 1; k <= cfg.max_iterations; ++k) {
        auto start = clock::now();

        SubrelationView subrel_view;
        if (k == 1) {
            subrel_view.table = nullptr;
            subrel_view.bootstrap = bootstrap;
        } else {
            subrel_view.table = &subrel;
        }

        EqualityTable eqs = score_all(o1, o2, subrel_view, prev_view, funs1, funs2, matcher_cfg);

        if (cfg.dampening > 0.0 && k > 1) {
            // Blend each fresh score toward the previous full table with a
            // decaying weight, then re-prune.
            double weight = std::pow(cfg.dampening, static_cast<double>(k - 1));
            EqualityTable blended;
            for (EntityId first : eqs.first_keys_sorted()) {
                for (const auto& [second, fresh] : eqs.partners_of_first(first)) {
                    double mixed = weight * fresh + (1.0 - weight) * result.equalities.get(first, second);
                    if (mixed >= cfg.theta) blended.set(first, second, mixed);
                }
            }
            eqs = std::move(blended);
        }
        eqs.iteration = static_cast<int>(k);

        MaximalAssignment assignment = maximal_assignment(eqs);

        EqualityTable restricted = restrict_to_assignment(result.literal_clamps, assignment,
                                                          static_cast<int>(k));
        subrel = subrelation_scores(o1, o2, restricted, schema_cfg);

        double changed = assignment_change_fraction(prev_assignment, assignment);
        double seconds = std::chrono::duration<double>(clock::now() - start).count();
        result.diagnostics.push_back(
            IterationDiagnostics{k, changed, eqs.size(), subrel.size(), seconds});

        if (!cfg.iteration_dump_dir.empty()) {
            dump_iteration_tables(cfg.iteration_dump_dir, k, eqs, subrel, o1, o2);
        }

        result.equalities = std::move(eqs);
        result.assignment = assignment;
        prev_assignment = std::move(assignment);
        prev_view = std::move(restricted);
        result.iterations = k;

        if (changed < cfg.convergence_fraction) {
            result.converged = true;
            break;
        }
    }

    result.subrelations = subrel;
    result.subclasses = subclass_scores(o1, o2, prev_view, schema_cfg);
    return result;
}

void write_diagnostics_jsonl(std::ostream& out, const std::vector<IterationDiagnostics>& diags) {
    for (const IterationDiagnostics& d : diags) {
        nlohmann::json j{{"iteration", d.iteration},
                         {"changed_fraction", d.changed_fraction},
                         {"eq_entries", d.eq_entries},
                         {"subrel_entries", d.subrel_entries},
                         {"seconds", d.seconds}};
        out << j.dump() << "\n";
    }
}

}  // namespace ontoalign
