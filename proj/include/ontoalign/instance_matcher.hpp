#pragma once

// Cross-ontology instance-equivalence scoring. The optimized pass
// traverses each first-ontology instance's statements, jumps through the
// known equalities of the statement objects, and folds one noisy-OR
// factor per matching statement pair, weighted by relation-containment
// scores and inverse functionalities. Unknown equalities contribute
// nothing, so they never need to be stored.

#include <cstddef>

#include "ontoalign/functionality.hpp"
#include "ontoalign/literal_similarity.hpp"
#include "ontoalign/ontology.hpp"
#include "ontoalign/tables.hpp"

namespace ontoalign {

enum class EvidenceMode {
    Positive,  // shared-neighbor evidence only
    Combined,  // positive evidence multiplied by a missing-match penalty
};

struct MatcherConfig {
    double theta = 0.1;  // pruning threshold for stored scores
    EvidenceMode mode = EvidenceMode::Positive;
    // Study switch for the penalty's inner product: false folds object
    // equalities (the consistent reading), true folds the scored pair's
    // own previous equality.
    bool penalty_inner_pair = false;
    unsigned workers = 1;
};

// Equality score for one pair when both ontologies use the same relation
// vocabulary (relations matched by lexical form). `funs` supplies the
// functionality estimates for the shared vocabulary, conventionally
// computed on the first ontology.
double score_pair_shared(const Ontology& o1, const Ontology& o2, EntityId x, EntityId x2,
                         const EqualityTable& prev, const FunctionalityTable& funs,
                         EvidenceMode mode);

// Scores every first-ontology instance against the second ontology.
// `prev` holds the literal clamps plus the previous iteration's instance
// equalities (restricted upstream to the previous maximal assignment);
// all scores are computed from that snapshot alone. Results below theta
// are pruned.
EqualityTable score_all(const Ontology& o1, const Ontology& o2, const SubrelationView& subrel,
                        const EqualityTable& prev, const FunctionalityTable& funs1,
                        const FunctionalityTable& funs2, const MatcherConfig& cfg);

// Best partner per first-ontology entity; ties go to the smallest
// partner id so runs are reproducible.
MaximalAssignment maximal_assignment(const EqualityTable& table);

// Literal-equality clamps between the two ontologies' literal sets,
// entries below theta pruned. Exact and normalized similarities join on
// a canonical key; the edit similarity compares all pairs.
EqualityTable build_literal_clamps(const Ontology& o1, const Ontology& o2,
                                   const LiteralSimilarity& sim, LiteralSimChoice choice,
                                   double theta);

}  // namespace ontoalign
