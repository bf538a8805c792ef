#pragma once

// Directed containment scores between the two ontologies' relations and
// classes, derived from the current instance equalities. A relation is
// scored against itself across ontologies like any other pair; nothing
// is assumed equal by name.

#include <cstddef>

#include "ontoalign/ontology.hpp"
#include "ontoalign/tables.hpp"

namespace ontoalign {

struct SchemaConfig {
    double theta = 0.1;
    std::size_t pair_limit = 10000;  // statements sampled per relation/class and direction
};

// For each direction r -> r': the probability-weighted fraction of r's
// pairs realized in r' under the known equalities, normalized by the
// fraction that has any counterpart at all. `eqs` holds the current
// maximal-assignment equalities plus the literal clamps. Relations whose
// pairs have no counterparts get no entry.
SubrelationTable subrelation_scores(const Ontology& o1, const Ontology& o2,
                                    const EqualityTable& eqs, const SchemaConfig& cfg);

// Expected fraction of one class's instances matched into the other
// class, per direction. Run once after the instance fixpoint.
SubclassTable subclass_scores(const Ontology& o1, const Ontology& o2, const EqualityTable& eqs,
                              const SchemaConfig& cfg);

}  // namespace ontoalign
