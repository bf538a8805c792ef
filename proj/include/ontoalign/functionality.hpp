#pragma once

// Functionality of a relation: how close it comes to mapping each first
// argument to a single second argument. The harmonic-mean estimator is
// the production choice; the alternatives exist for comparison studies
// and must not drive the alignment pipeline.

#include <iosfwd>
#include <vector>

#include "ontoalign/ids.hpp"
#include "ontoalign/ontology.hpp"

namespace ontoalign {

enum class FunctionalityStrategy {
    Harmonic,        // distinct first args / statements
    PairRatio,       // statements / same-source argument pairs
    ArgRatio,        // distinct first args / distinct second args
    ArithmeticMean,  // plain average of local functionalities
};

// 1 / #objects of x under r. Precondition: x has at least one object
// under r; throws std::invalid_argument otherwise.
double local_functionality(const Ontology& ont, RelationId r, EntityId x);

// Global functionality of r under the given strategy. Throws
// std::invalid_argument("no statements") for an empty relation.
double global_functionality(const Ontology& ont, RelationId r,
                            FunctionalityStrategy strategy = FunctionalityStrategy::Harmonic);

// Per-relation functionalities for both polarities, computed once per
// ontology and never updated afterwards.
class FunctionalityTable {
public:
    static FunctionalityTable compute(const Ontology& ont,
                                      FunctionalityStrategy strategy = FunctionalityStrategy::Harmonic);

    [[nodiscard]] double fun(RelationId r) const { return values_[r.code]; }
    [[nodiscard]] double inverse_fun(RelationId r) const { return values_[r.inverse().code]; }
    [[nodiscard]] FunctionalityStrategy strategy() const { return strategy_; }

    // CSV: relation, fun, inverse fun, statement count.
    void write_csv(std::ostream& out, const Ontology& ont) const;

private:
    std::vector<double> values_;  // indexed by polarized relation code
    FunctionalityStrategy strategy_ = FunctionalityStrategy::Harmonic;
};

}  // namespace ontoalign
