#pragma once

// Synthetic twin generator: clones an ontology under fresh identifiers,
// optionally drops statements and perturbs literal formatting, and emits
// the implied gold standard. The evaluation harness uses the twins in
// place of large-scale corpora.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ontoalign/ontology.hpp"

namespace ontoalign {

struct TwinOptions {
    double drop_rate = 0.0;     // fraction of non-schema statements dropped in the twin
    double perturb_rate = 0.0;  // fraction of literal occurrences format-perturbed
    std::uint64_t seed = 1;
    std::string rename_prefix = "twin:";
};

struct TwinResult {
    Ontology twin;
    std::vector<std::pair<std::string, std::string>> instance_gold;
    std::vector<std::pair<std::string, std::string>> relation_gold;
    std::vector<std::pair<std::string, std::string>> class_gold;
    std::size_t dropped_statements = 0;
    std::size_t perturbed_literals = 0;
};

// Changes a literal's exact form but not its alphanumeric content, e.g.
// 213-467-1108 -> 213/467-1108.
std::string format_perturb(const std::string& raw);

TwinResult make_twin(const Ontology& source, const TwinOptions& options);

}  // namespace ontoalign
