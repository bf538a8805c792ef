#pragma once

// Drives the alternating fixpoint: instance scores, maximal assignment,
// relation-containment scores, repeated until the assignments settle;
// then one class-containment pass over the final equalities.

#include <cstddef>
#include <string>
#include <vector>

#include "ontoalign/functionality.hpp"
#include "ontoalign/instance_matcher.hpp"
#include "ontoalign/ontology.hpp"
#include "ontoalign/schema_matcher.hpp"
#include "ontoalign/tables.hpp"

namespace ontoalign {

struct Config {
    double theta = 0.10;            // bootstrap constant and pruning threshold
    std::size_t pair_limit = 10000;
    unsigned max_iterations = 10;
    bool negative_evidence = false;
    LiteralSimChoice literal_sim = LiteralSimChoice::Exact;
    FunctionalityStrategy functionality_strategy = FunctionalityStrategy::Harmonic;
    double convergence_fraction = 0.01;
    unsigned workers = 1;           // 0 = hardware concurrency

    // The bootstrap constant may be split from the pruning threshold;
    // negative keeps them identical.
    double bootstrap = -1.0;
    // Decaying update weight; 0 disables. With base d, iteration k blends
    // d^(k-1) of the fresh score with the rest of the previous score.
    double dampening = 0.0;
    double edit_cutoff = -1.0;      // cutoff for the edit similarity; negative = theta
    bool penalty_inner_pair = false;
    std::string iteration_dump_dir;  // when set, per-iteration tables land here

    void validate() const;  // throws std::invalid_argument on bad values
};

struct IterationDiagnostics {
    unsigned iteration = 0;
    double changed_fraction = 0.0;
    std::size_t eq_entries = 0;
    std::size_t subrel_entries = 0;
    double seconds = 0.0;
};

struct AlignmentResult {
    EqualityTable equalities;  // full instance table of the final iteration
    MaximalAssignment assignment;
    SubrelationTable subrelations;
    SubclassTable subclasses;
    EqualityTable literal_clamps;
    std::vector<IterationDiagnostics> diagnostics;
    bool converged = false;
    unsigned iterations = 0;
};

// Fraction of entities whose assigned partner differs, over the entities
// assigned in either; 0 when both are empty.
double assignment_change_fraction(const MaximalAssignment& prev, const MaximalAssignment& next);

bool has_converged(const MaximalAssignment& prev, const MaximalAssignment& next, double fraction);

AlignmentResult align(const Ontology& o1, const Ontology& o2, const Config& cfg);

void write_diagnostics_jsonl(std::ostream& out, const std::vector<IterationDiagnostics>& diags);

}  // namespace ontoalign
