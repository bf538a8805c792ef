#pragma once

// Clamped equality probabilities between literal pairs. These are fixed
// before the iteration starts and never updated. Datatype and language
// tags are stripped before any comparison.

#include <functional>
#include <string>
#include <string_view>

namespace ontoalign {

enum class LiteralSimChoice { Exact, Normalized, Edit };

// 1 when the lexical forms are identical, else 0.
double exact_equality(std::string_view a, std::string_view b);

// 1 when the forms are identical after lowercasing and removing all
// non-alphanumeric characters, else 0.
double normalized_equality(std::string_view a, std::string_view b);

// 1 minus the length-normalized edit distance, clamped to 0 below the
// cutoff. The normalization and cutoff are local choices.
double edit_similarity(std::string_view a, std::string_view b, double cutoff);

std::string normalize_literal(std::string_view raw);
std::size_t edit_distance(std::string_view a, std::string_view b);

// A named pure similarity; symmetric, reflexive, deterministic.
struct LiteralSimilarity {
    std::string name;
    std::function<double(std::string_view, std::string_view)> fn;
};

LiteralSimilarity make_literal_similarity(LiteralSimChoice choice, double edit_cutoff);

}  // namespace ontoalign
