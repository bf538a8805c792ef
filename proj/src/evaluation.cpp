#include "ontoalign/evaluation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ontoalign {

GoldStandard GoldStandard::load(std::istream& in) {
    GoldStandard gold;
    std::unordered_map<std::string, std::string> seen;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::runtime_error("gold line " + std::to_string(line_number) +
                                     ": expected 2 tab-separated columns");
        }
        std::string first = line.substr(0, tab);
        std::string second = line.substr(tab + 1);
        auto it = seen.find(first);
        if (it != seen.end()) {
            if (it->second != second) {
                throw std::runtime_error("gold line " + std::to_string(line_number) +
                                         ": conflicting duplicate for " + first);
            }
            continue;  // identical duplicate row
        }
        seen.emplace(first, second);
        gold.pairs.emplace_back(std::move(first), std::move(second));
    }
    return gold;
}

GoldStandard GoldStandard::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load(in);
}

Metrics metrics_from_counts(std::size_t true_positives, std::size_t predicted,
                            std::size_t gold_size) {
    Metrics m;
    m.true_positives = true_positives;
    m.predicted = predicted;
    m.gold_size = gold_size;
    if (predicted > 0) {
        m.precision = static_cast<double>(true_positives) / static_cast<double>(predicted);
    }
    if (gold_size > 0) {
        m.recall = static_cast<double>(true_positives) / static_cast<double>(gold_size);
    }
    if (m.precision && m.recall) {
        double sum = *m.precision + *m.recall;
        m.f_measure = sum > 0.0 ? 2.0 * *m.precision * *m.recall / sum : 0.0;
    }
    return m;
}

void Metrics::print(std::ostream& out) const {
    auto show = [&](const char* name, const std::optional<double>& v) {
        out << name << ": ";
        if (v) {
            out << *v * 100.0 << "%";
        } else {
            out << "undefined";
        }
        out << "\n";
    };
    out << "predicted: " << predicted << "\n";
    out << "gold: " << gold_size << "\n";
    out << "correct: " << true_positives << "\n";
    if (unknown_gold_entities > 0) {
        out << "gold entities unknown to the inputs: " << unknown_gold_entities << "\n";
    }
    show("precision", precision);
    show("recall", recall);
    show("f-measure", f_measure);
}

Metrics evaluate(const MaximalAssignment& assignment, const Ontology& o1, const Ontology& o2,
                 const GoldStandard& gold) {
    std::size_t true_positives = 0;
    std::size_t unknown = 0;
    for (const auto& [first, second] : gold.pairs) {
        auto e1 = o1.find_resource(first);
        auto e2 = o2.find_resource(second);
        if (!e1 || !e2) {
            ++unknown;
            continue;
        }
        auto assigned = assignment.partner_of(*e1);
        if (assigned && assigned->partner == *e2) ++true_positives;
    }
    Metrics m = metrics_from_counts(true_positives, assignment.size(), gold.pairs.size());
    m.unknown_gold_entities = unknown;
    return m;
}

Metrics evaluate_pairs(const std::vector<std::pair<std::string, std::string>>& predicted,
                       const GoldStandard& gold) {
    std::unordered_map<std::string, const std::string*> gold_index;
    for (const auto& [first, second] : gold.pairs) gold_index.emplace(first, &second);
    std::size_t true_positives = 0;
    for (const auto& [first, second] : predicted) {
        auto it = gold_index.find(first);
        if (it != gold_index.end() && *it->second == second) ++true_positives;
    }
    return metrics_from_counts(true_positives, predicted.size(), gold.pairs.size());
}

std::vector<ScoredPair> read_scored_pairs(std::istream& in) {
    std::vector<ScoredPair> rows;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                cols.push_back(line.substr(start));
                break;
            }
            cols.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (cols.size() < 3) {
            throw std::runtime_error("table line " + std::to_string(line_number) +
                                     ": expected at least 3 columns");
        }
        ScoredPair row;
        row.first = cols.front();
        row.second = cols[cols.size() - 2];
        try {
            row.score = std::stod(cols.back());
        } catch (const std::exception&) {
            throw std::runtime_error("table line " + std::to_string(line_number) +
                                     ": bad score '" + cols.back() + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ScoredPair> read_scored_pairs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_scored_pairs(in);
}

std::vector<std::pair<std::string, std::string>> top_predictions(
    const std::vector<ScoredPair>& rows) {
    std::vector<std::pair<std::string, std::string>> predictions;
    std::unordered_set<std::string> seen;
    for (const ScoredPair& row : rows) {
        if (seen.insert(row.first).second) {
            predictions.emplace_back(row.first, row.second);
        }
    }
    return predictions;
}

std::vector<SweepRow> threshold_sweep(const std::vector<ScoredPair>& table,
                                      const std::optional<GoldStandard>& labels,
                                      const std::vector<double>& thresholds) {
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
        if (thresholds[i] < thresholds[i - 1]) {
            throw std::invalid_argument("thresholds must be ascending");
        }
    }
    std::set<std::pair<std::string, std::string>> labeled;
    if (labels) {
        for (const auto& p : labels->pairs) labeled.insert(p);
    }

    std::vector<SweepRow> rows;
    rows.reserve(thresholds.size());
    for (double t : thresholds) {
        SweepRow row;
        row.threshold = t;
        std::size_t correct = 0;
        for (const ScoredPair& entry : table) {
            if (entry.score >= t) {
                ++row.retained;
                if (labels && labeled.count({entry.first, entry.second}) > 0) ++correct;
            }
        }
        if (labels && row.retained > 0) {
            row.precision = static_cast<double>(correct) / static_cast<double>(row.retained);
        }
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "threshold,retained,precision\n";
    for (const SweepRow& row : rows) {
        out << row.threshold << ',' << row.retained << ',';
        if (row.precision) out << *row.precision;
        out << "\n";
    }
}

}  // namespace ontoalign
