#include "ontoalign/literal_similarity.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace ontoalign {

double exact_equality(std::string_view a, std::string_view b) {
    return a == b ? 1.0 : 0.0;
}

std::string normalize_literal(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (unsigned char c : raw) {
        if (std::isalnum(c)) {
            out.push_back(static_cast<char>(std::tolower(c)));
        } else if (c >= 0x80) {
            // Keep multi-byte sequences; normalization is ASCII-scoped.
            out.push_back(static_cast<char>(c));
        }
    }
    return out;
}

double normalized_equality(std::string_view a, std::string_view b) {
    return normalize_literal(a) == normalize_literal(b) ? 1.0 : 0.0;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    std::vector<std::size_t> row(a.size() + 1);
    for (std::size_t i = 0; i <= a.size(); ++i) row[i] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
        std::size_t prev_diag = row[0];
        row[0] = j;
        for (std::size_t i = 1; i <= a.size(); ++i) {
            std::size_t del = row[i] + 1;
            std::size_t ins = row[i - 1] + 1;
            std::size_t sub = prev_diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            prev_diag = row[i];
            row[i] = std::min({del, ins, sub});
        }
    }
    return row[a.size()];
}

double edit_similarity(std::string_view a, std::string_view b, double cutoff) {
    if (a == b) return 1.0;
    std::size_t longest = std::max(a.size(), b.size());
    if (longest == 0) return 1.0;
    double sim = 1.0 - static_cast<double>(edit_distance(a, b)) / static_cast<double>(longest);
    return sim < cutoff ? 0.0 : sim;
}

LiteralSimilarity make_literal_similarity(LiteralSimChoice choice, double edit_cutoff) {
    switch (choice) {
        case LiteralSimChoice::Exact:
            return {"exact", [](std::string_view a, std::string_view b) { return exact_equality(a, b); }};
        case LiteralSimChoice::Normalized:
            return {"normalized",
                    [](std::string_view a, std::string_view b) { return normalized_equality(a, b); }};
        case LiteralSimChoice::Edit:
            return {"edit", [edit_cutoff](std::string_view a, std::string_view b) {
                        return edit_similarity(a, b, edit_cutoff);
                    }};
    }
    throw std::invalid_argument("unknown literal similarity");
}

}  // namespace ontoalign
