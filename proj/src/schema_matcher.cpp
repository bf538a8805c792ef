#include "ontoalign/schema_matcher.hpp"

#include <algorithm>
#include <unordered_map>

#include "ontoalign/probability.hpp"

namespace ontoalign {

namespace {

// Binary search in a sorted partner list.
double partner_probability(std::span<const EqualityTable::Partner> partners, EntityId entity) {
    auto it = std::lower_bound(partners.begin(), partners.end(), entity,
                               [](const EqualityTable::Partner& a, EntityId b) { return a.first < b; });
    if (it != partners.end() && it->first == entity) return it->second;
    return 0.0;
}

struct StatementPair {
    EntityId first;
    EntityId second;
};

// Statements of a polarized relation as (first, second) pairs, capped.
std::vector<StatementPair> polarized_statements(const Ontology& ont, RelationId r,
                                                std::size_t limit) {
    std::span<const Statement> base = ont.base_statements(r);
    std::size_t n = std::min(base.size(), limit);
    std::vector<StatementPair> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (r.inverted()) {
            pairs.push_back({base[i].object, base[i].subject});
        } else {
            pairs.push_back({base[i].subject, base[i].object});
        }
    }
    return pairs;
}

}  // namespace

SubrelationTable subrelation_scores(const Ontology& o1, const Ontology& o2,
                                    const EqualityTable& eqs, const SchemaConfig& cfg) {
    SubrelationTable table;

    // Direction O1 -> O2.
    for (std::uint32_t code = 0; code < o1.relation_count() * 2; ++code) {
        RelationId r{code};
        if (o1.statement_count(r) == 0) continue;

        std::unordered_map<std::uint32_t, double> numerator;
        std::unordered_map<std::uint32_t, NoisyOr> realized;  // per right relation, this statement
        double denominator = 0.0;

        for (const StatementPair& st : polarized_statements(o1, r, cfg.pair_limit)) {
            auto ex = eqs.partners_of_first(st.first);
            if (ex.empty()) continue;
            auto ey = eqs.partners_of_first(st.second);
            if (ey.empty()) continue;

            NoisyOr any_counterpart;
            for (const auto& [x2, px] : ex) {
                for (const auto& [y2, py] : ey) any_counterpart.add_complement(1.0 - px * py);
            }
            denominator += any_counterpart.value();

            realized.clear();
            for (const auto& [x2, px] : ex) {
                for (const Neighbor& n2 : o2.neighbors(x2)) {
                    double py = partner_probability(ey, n2.entity);
                    if (py == 0.0) continue;
                    realized[n2.relation.code].add_complement(1.0 - px * py);
                }
            }
            for (const auto& [r2, acc] : realized) {
                numerator[r2] += acc.value();
            }
        }

        if (denominator <= 0.0) continue;
        std::vector<std::pair<std::uint32_t, double>> scores(numerator.begin(), numerator.end());
        std::sort(scores.begin(), scores.end());
        for (const auto& [r2, num] : scores) {
            double score = num / denominator;
            if (score >= cfg.theta) table.set_first_in_second(r, RelationId{r2}, score);
        }
    }

    // Direction O2 -> O1.
    for (std::uint32_t code = 0; code < o2.relation_count() * 2; ++code) {
        RelationId r2{code};
        if (o2.statement_count(r2) == 0) continue;

        std::unordered_map<std::uint32_t, double> numerator;
        std::unordered_map<std::uint32_t, NoisyOr> realized;
        double denominator = 0.0;

        for (const StatementPair& st : polarized_statements(o2, r2, cfg.pair_limit)) {
            auto ex = eqs.partners_of_second(st.first);
            if (ex.empty()) continue;
            auto ey = eqs.partners_of_second(st.second);
            if (ey.empty()) continue;

            NoisyOr any_counterpart;
            for (const auto& [x1, px] : ex) {
                for (const auto& [y1, py] : ey) any_counterpart.add_complement(1.0 - px * py);
            }
            denominator += any_counterpart.value();

            realized.clear();
            for (const auto& [x1, px] : ex) {
                for (const Neighbor& n1 : o1.neighbors(x1)) {
                    double py = partner_probability(ey, n1.entity);
                    if (py == 0.0) continue;
                    realized[n1.relation.code].add_complement(1.0 - px * py);
                }
            }
            for (const auto& [r1, acc] : realized) {
                numerator[r1] += acc.value();
            }
        }

        if (denominator <= 0.0) continue;
        std::vector<std::pair<std::uint32_t, double>> scores(numerator.begin(), numerator.end());
        std::sort(scores.begin(), scores.end());
        for (const auto& [r1, num] : scores) {
            double score = num / denominator;
            if (score >= cfg.theta) table.set_second_in_first(RelationId{r1}, r2, score);
        }
    }

    return table;
}

SubclassTable subclass_scores(const Ontology& o1, const Ontology& o2, const EqualityTable& eqs,
                              const SchemaConfig& cfg) {
    SubclassTable table;
    auto type2 = o2.type_relation();
    auto type1 = o1.type_relation();

    // Direction O1 -> O2.
    if (type2) {
        std::unordered_map<std::uint32_t, double> numerator;
        std::unordered_map<std::uint32_t, NoisyOr> member_in;
        for (EntityId c1 : o1.classes()) {
            std::span<const EntityId> members = o1.instances_of(c1);
            if (members.empty()) continue;
            std::size_t sampled = std::min(members.size(), cfg.pair_limit);

            numerator.clear();
            for (std::size_t i = 0; i < sampled; ++i) {
                member_in.clear();
                for (const auto& [x2, p] : eqs.partners_of_first(members[i])) {
                    for (EntityId c2 : o2.objects_of(x2, *type2)) {
                        member_in[c2.value].add(p);
                    }
                }
                for (const auto& [c2, acc] : member_in) numerator[c2] += acc.value();
            }

            std::vector<std::pair<std::uint32_t, double>> scores(numerator.begin(), numerator.end());
            std::sort(scores.begin(), scores.end());
            for (const auto& [c2, num] : scores) {
                double score = num / static_cast<double>(sampled);
                if (score >= cfg.theta) table.set_first_in_second(c1, EntityId{c2}, score);
            }
        }
    }

    // Direction O2 -> O1.
    if (type1) {
        std::unordered_map<std::uint32_t, double> numerator;
        std::unordered_map<std::uint32_t, NoisyOr> member_in;
        for (EntityId c2 : o2.classes()) {
            std::span<const EntityId> members = o2.instances_of(c2);
            if (members.empty()) continue;
            std::size_t sampled = std::min(members.size(), cfg.pair_limit);

            numerator.clear();
            for (std::size_t i = 0; i < sampled; ++i) {
                member_in.clear();
                for (const auto& [x1, p] : eqs.partners_of_second(members[i])) {
                    for (EntityId c1 : o1.objects_of(x1, *type1)) {
                        member_in[c1.value].add(p);
                    }
                }
                for (const auto& [c1, acc] : member_in) numerator[c1] += acc.value();
            }

            std::vector<std::pair<std::uint32_t, double>> scores(numerator.begin(), numerator.end());
            std::sort(scores.begin(), scores.end());
            for (const auto& [c1, num] : scores) {
                double score = num / static_cast<double>(sampled);
                if (score >= cfg.theta) table.set_second_in_first(EntityId{c1}, c2, score);
            }
        }
    }

    return table;
}

}  // namespace ontoalign
