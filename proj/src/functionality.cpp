#include "ontoalign/functionality.hpp"

#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace ontoalign {

namespace {

// Count of second arguments per first argument of r, honoring polarity.
std::unordered_map<std::uint32_t, std::size_t> first_arg_counts(const Ontology& ont, RelationId r) {
    std::unordered_map<std::uint32_t, std::size_t> counts;
    for (const Statement& st : ont.base_statements(r)) {
        EntityId first = r.inverted() ? st.object : st.subject;
        ++counts[first.value];
    }
    return counts;
}

}  // namespace

double local_functionality(const Ontology& ont, RelationId r, EntityId x) {
    std::size_t n = ont.objects_of(x, r).size();
    if (n == 0) {
        throw std::invalid_argument("local functionality undefined: no objects under relation");
    }
    return 1.0 / static_cast<double>(n);
}

double global_functionality(const Ontology& ont, RelationId r, FunctionalityStrategy strategy) {
    std::size_t statements = ont.statement_count(r);
    if (statements == 0) throw std::invalid_argument("no statements");

    std::size_t firsts = ont.distinct_first_args(r);
    switch (strategy) {
        case FunctionalityStrategy::Harmonic:
            return static_cast<double>(firsts) / static_cast<double>(statements);
        case FunctionalityStrategy::PairRatio: {
            // statements / ordered same-source second-argument pairs
            std::size_t pairs = 0;
            for (const auto& [_, n] : first_arg_counts(ont, r)) pairs += n * n;
            return static_cast<double>(statements) / static_cast<double>(pairs);
        }
        case FunctionalityStrategy::ArgRatio: {
            std::size_t seconds = ont.distinct_first_args(r.inverse());
            return static_cast<double>(firsts) / static_cast<double>(seconds);
        }
        case FunctionalityStrategy::ArithmeticMean: {
            double sum = 0.0;
            for (const auto& [_, n] : first_arg_counts(ont, r)) sum += 1.0 / static_cast<double>(n);
            return sum / static_cast<double>(firsts);
        }
    }
    throw std::logic_error("unknown functionality strategy");
}

FunctionalityTable FunctionalityTable::compute(const Ontology& ont,
                                               FunctionalityStrategy strategy) {
    FunctionalityTable table;
    table.strategy_ = strategy;
    table.values_.assign(ont.relation_count() * 2, 0.0);
    for (std::uint32_t i = 0; i < ont.relation_count(); ++i) {
        RelationId r = RelationId::base(i);
        if (ont.statement_count(r) == 0) continue;  // empty relations stay out of the catalog
        table.values_[r.code] = global_functionality(ont, r, strategy);
        table.values_[r.inverse().code] = global_functionality(ont, r.inverse(), strategy);
    }
    return table;
}

void FunctionalityTable::write_csv(std::ostream& out, const Ontology& ont) const {
    out << "relation,fun,inverse_fun,statements\n";
    for (std::uint32_t i = 0; i < ont.relation_count(); ++i) {
        RelationId r = RelationId::base(i);
        if (ont.statement_count(r) == 0) continue;
        out << ont.relation_info(r).lexical << ',' << fun(r) << ',' << inverse_fun(r) << ','
            << ont.statement_count(r) << "\n";
    }
}

}  // namespace ontoalign
