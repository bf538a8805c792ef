#pragma once

// Gold-standard evaluation of computed assignments, plus threshold
// sweeps over any scored table.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ontoalign/ontology.hpp"
#include "ontoalign/tables.hpp"

namespace ontoalign {

// Known-equivalent pairs, by lexical form. Each first-ontology entity
// appears at most once.
struct GoldStandard {
    std::vector<std::pair<std::string, std::string>> pairs;

    static GoldStandard load(std::istream& in);
    static GoldStandard load_file(const std::string& path);
};

struct Metrics {
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f_measure;
    std::size_t true_positives = 0;
    std::size_t predicted = 0;
    std::size_t gold_size = 0;
    std::size_t unknown_gold_entities = 0;  // gold entities absent from the inputs

    void print(std::ostream& out) const;
};

// Metrics from raw counts; 0/0 ratios stay undefined rather than 0.
Metrics metrics_from_counts(std::size_t true_positives, std::size_t predicted,
                            std::size_t gold_size);

// Compares a maximal assignment against the gold standard. Gold pairs
// naming entities unknown to either ontology still count toward recall
// and are tallied separately.
Metrics evaluate(const MaximalAssignment& assignment, const Ontology& o1, const Ontology& o2,
                 const GoldStandard& gold);

// Same, over lexical pairs (one prediction per first entity).
Metrics evaluate_pairs(const std::vector<std::pair<std::string, std::string>>& predicted,
                       const GoldStandard& gold);

struct ScoredPair {
    std::string first;
    std::string second;
    double score = 0.0;
};

// Reads a scored table: the last column is the score, the first column
// and the column before the score form the pair (so both 3-column
// equality tables and 4-column directed tables load).
std::vector<ScoredPair> read_scored_pairs(std::istream& in);
std::vector<ScoredPair> read_scored_pairs_file(const std::string& path);

// One prediction per first entity: the first row wins, matching the
// writer's maximal-assignment-first row order.
std::vector<std::pair<std::string, std::string>> top_predictions(
    const std::vector<ScoredPair>& rows);

struct SweepRow {
    double threshold = 0.0;
    std::size_t retained = 0;
    std::optional<double> precision;
};

// Entries at or above each threshold; precision only when labels are
// provided. Thresholds must be ascending.
std::vector<SweepRow> threshold_sweep(const std::vector<ScoredPair>& table,
                                      const std::optional<GoldStandard>& labels,
                                      const std::vector<double>& thresholds);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace ontoalign
