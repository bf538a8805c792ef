#include "ontoalign/instance_matcher.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "ontoalign/probability.hpp"

namespace ontoalign {

namespace {

// Positive evidence for x ≡ x2 under a shared vocabulary: noisy-OR over
// statement pairs with the same relation, each weighted by the inverse
// functionality and the objects' previous equality.
double shared_positive(const Ontology& o1, const Ontology& o2, EntityId x, EntityId x2,
                       const EqualityTable& prev, const FunctionalityTable& funs) {
    double complement = 1.0;
    for (const Neighbor& n1 : o1.neighbors(x)) {
        auto r2 = o2.find_relation(o1.relation_name(n1.relation));
        if (!r2) continue;
        double inv_fun = funs.inverse_fun(n1.relation);
        if (inv_fun == 0.0) continue;
        for (EntityId y2 : o2.objects_of(x2, *r2)) {
            double p = prev.get(n1.entity, y2);
            if (p == 0.0) continue;
            complement *= 1.0 - inv_fun * p;
        }
    }
    return 1.0 - complement;
}

// Penalty for x ≡ x2 under a shared vocabulary: one factor per statement
// of x, small when a highly functional relation finds no matching object
// on x2's side. An x2 with no statements of that relation keeps the
// inner product at one.
double shared_penalty(const Ontology& o1, const Ontology& o2, EntityId x, EntityId x2,
                      const EqualityTable& prev, const FunctionalityTable& funs) {
    double penalty = 1.0;
    for (const Neighbor& n1 : o1.neighbors(x)) {
        double fun = funs.fun(n1.relation);
        if (fun == 0.0) continue;
        double no_match = 1.0;
        auto r2 = o2.find_relation(o1.relation_name(n1.relation));
        if (r2) {
            for (EntityId y2 : o2.objects_of(x2, *r2)) {
                no_match *= 1.0 - prev.get(n1.entity, y2);
            }
        }
        penalty *= 1.0 - fun * no_match;
    }
    return penalty;
}

}  // namespace

double score_pair_shared(const Ontology& o1, const Ontology& o2, EntityId x, EntityId x2,
                         const EqualityTable& prev, const FunctionalityTable& funs,
                         EvidenceMode mode) {
    double score = shared_positive(o1, o2, x, x2, prev, funs);
    if (mode == EvidenceMode::Combined) {
        score *= shared_penalty(o1, o2, x, x2, prev, funs);
    }
    return score;
}

namespace {

// Relation pairs with a nonzero containment score in either direction,
// grouped by first-ontology relation. Used by the penalty pass.
struct PenaltyCandidates {
    struct Entry {
        RelationId r2;
        double second_in_first;  // Pr(r2 ⊆ r1)
        double first_in_second;  // Pr(r1 ⊆ r2)
    };
    std::vector<std::vector<Entry>> by_relation;  // indexed by polarized r1 code

    static PenaltyCandidates build(const Ontology& o1, const Ontology& o2,
                                   const SubrelationView& subrel) {
        PenaltyCandidates cands;
        cands.by_relation.resize(o1.relation_count() * 2);
        for (std::uint32_t c1 = 0; c1 < o1.relation_count() * 2; ++c1) {
            RelationId r1{c1};
            if (o1.statement_count(r1) == 0) continue;
            auto& list = cands.by_relation[c1];
            for (std::uint32_t c2 = 0; c2 < o2.relation_count() * 2; ++c2) {
                RelationId r2{c2};
                if (o2.statement_count(r2) == 0) continue;
                double s21 = subrel.second_in_first(r1, r2);
                double s12 = subrel.first_in_second(r1, r2);
                if (s21 > 0.0 || s12 > 0.0) list.push_back({r2, s21, s12});
            }
        }
        return cands;
    }
};

// Penalty factors for one candidate pair: for every statement r1(x,y)
// and every related second-ontology relation r2, the chance that a
// functional r1/r2 should have produced a matching object but did not.
double generalized_penalty(const Ontology& o1, const Ontology& o2, EntityId x, EntityId x2,
                           const EqualityTable& prev, const FunctionalityTable& funs1,
                           const FunctionalityTable& funs2, const PenaltyCandidates& cands,
                           bool penalty_inner_pair) {
    double penalty = 1.0;
    double pair_prev = penalty_inner_pair ? prev.get(x, x2) : 0.0;
    for (const Neighbor& n1 : o1.neighbors(x)) {
        double fun1 = funs1.fun(n1.relation);
        for (const auto& cand : cands.by_relation[n1.relation.code]) {
            double no_match = 1.0;
            auto objects = o2.objects_of(x2, cand.r2);
            if (penalty_inner_pair) {
                for (std::size_t i = 0; i < objects.size(); ++i) no_match *= 1.0 - pair_prev;
            } else {
                for (EntityId y2 : objects) no_match *= 1.0 - prev.get(n1.entity, y2);
            }
            if (cand.second_in_first > 0.0 && fun1 > 0.0) {
                penalty *= 1.0 - fun1 * cand.second_in_first * no_match;
            }
            if (cand.first_in_second > 0.0) {
                double fun2 = funs2.fun(cand.r2);
                if (fun2 > 0.0) penalty *= 1.0 - fun2 * cand.first_in_second * no_match;
            }
        }
    }
    return penalty;
}

struct PairScore {
    EntityId first;
    EntityId second;
    double score;
};

// Scores all pairs for the instances in [begin, end) of o1.instances().
void score_instance_range(const Ontology& o1, const Ontology& o2, const SubrelationView& subrel,
                          const EqualityTable& prev, const FunctionalityTable& funs1,
                          const FunctionalityTable& funs2, const MatcherConfig& cfg,
                          const PenaltyCandidates* cands, std::size_t begin, std::size_t end,
                          std::vector<PairScore>& out) {
    std::span<const EntityId> instances = o1.instances();
    std::unordered_map<std::uint32_t, NoisyOr> evidence;
    std::vector<std::pair<std::uint32_t, double>> scored;

    for (std::size_t i = begin; i < end; ++i) {
        EntityId x = instances[i];
        evidence.clear();

        for (const Neighbor& n1 : o1.neighbors(x)) {
            double inv_fun1 = funs1.inverse_fun(n1.relation);
            for (const auto& [y2, p] : prev.partners_of_first(n1.entity)) {
                // Statements r2(x2, y2) are reached through y2's own
                // neighborhood under the inverse polarity.
                for (const Neighbor& n2 : o2.neighbors(y2)) {
                    RelationId r2 = n2.relation.inverse();
                    EntityId x2 = n2.entity;
                    if (o2.kind(x2) != EntityKind::Instance) continue;
                    double s21 = subrel.second_in_first(n1.relation, r2);
                    double s12 = subrel.first_in_second(n1.relation, r2);
                    if (s21 == 0.0 && s12 == 0.0) continue;
                    evidence[x2.value].add_complement((1.0 - s21 * inv_fun1 * p) *
                                                      (1.0 - s12 * funs2.inverse_fun(r2) * p));
                }
            }
        }

        scored.clear();
        scored.reserve(evidence.size());
        for (const auto& [x2, acc] : evidence) scored.push_back({x2, acc.value()});
        // Deterministic order independent of hash-map iteration.
        std::sort(scored.begin(), scored.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        for (auto& [x2, score] : scored) {
            if (cfg.mode == EvidenceMode::Combined && score > 0.0) {
                score *= generalized_penalty(o1, o2, x, EntityId(x2), prev, funs1, funs2, *cands,
                                             cfg.penalty_inner_pair);
            }
            if (score >= cfg.theta) {
                out.push_back(PairScore{x, EntityId(x2), score});
            }
        }
    }
}

}  // namespace

EqualityTable score_all(const Ontology& o1, const Ontology& o2, const SubrelationView& subrel,
                        const EqualityTable& prev, const FunctionalityTable& funs1,
                        const FunctionalityTable& funs2, const MatcherConfig& cfg) {
    PenaltyCandidates cands;
    if (cfg.mode == EvidenceMode::Combined) {
        cands = PenaltyCandidates::build(o1, o2, subrel);
    }

    std::size_t n = o1.instances().size();
    unsigned workers = cfg.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                        : cfg.workers;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

    std::vector<std::vector<PairScore>> shards(workers);
    if (workers <= 1) {
        score_instance_range(o1, o2, subrel, prev, funs1, funs2, cfg,
                             cfg.mode == EvidenceMode::Combined ? &cands : nullptr, 0, n,
                             shards[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        std::size_t chunk = (n + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t begin = std::min<std::size_t>(w * chunk, n);
            std::size_t end = std::min<std::size_t>(begin + chunk, n);
            threads.emplace_back([&, begin, end, w] {
                score_instance_range(o1, o2, subrel, prev, funs1, funs2, cfg,
                                     cfg.mode == EvidenceMode::Combined ? &cands : nullptr, begin,
                                     end, shards[w]);
            });
        }
        for (auto& t : threads) t.join();
    }

    // Shards cover disjoint first entities, so merge order cannot change
    // the table contents.
    EqualityTable table;
    for (const auto& shard : shards) {
        for (const PairScore& ps : shard) table.set(ps.first, ps.second, ps.score);
    }
    return table;
}

MaximalAssignment maximal_assignment(const EqualityTable& table) {
    MaximalAssignment assignment;
    for (EntityId first : table.first_keys_sorted()) {
        const EntityId* best = nullptr;
        double best_score = -1.0;
        for (const auto& [partner, score] : table.partners_of_first(first)) {
            // Partners are sorted by id, so a strict comparison settles
            // ties on the smallest partner id.
            if (score > best_score) {
                best_score = score;
                best = &partner;
            }
        }
        if (best != nullptr) assignment.assign(first, *best, best_score);
    }
    return assignment;
}

EqualityTable build_literal_clamps(const Ontology& o1, const Ontology& o2,
                                   const LiteralSimilarity& sim, LiteralSimChoice choice,
                                   double theta) {
    EqualityTable clamps;
    if (choice == LiteralSimChoice::Exact || choice == LiteralSimChoice::Normalized) {
        auto canon = [&](const std::string& raw) {
            return choice == LiteralSimChoice::Exact ? raw : normalize_literal(raw);
        };
        std::unordered_map<std::string, std::vector<EntityId>> buckets;
        for (EntityId l2 : o2.literals()) buckets[canon(o2.lexical(l2))].push_back(l2);
        for (EntityId l1 : o1.literals()) {
            auto it = buckets.find(canon(o1.lexical(l1)));
            if (it == buckets.end()) continue;
            for (EntityId l2 : it->second) {
                double p = sim.fn(o1.lexical(l1), o2.lexical(l2));
                if (p >= theta && p > 0.0) clamps.set(l1, l2, p);
            }
        }
    } else {
        // No canonical join key exists for graded similarities; compare
        // all pairs. Quadratic in the literal counts.
        for (EntityId l1 : o1.literals()) {
            for (EntityId l2 : o2.literals()) {
                double p = sim.fn(o1.lexical(l1), o2.lexical(l2));
                if (p >= theta && p > 0.0) clamps.set(l1, l2, p);
            }
        }
    }
    return clamps;
}

}  // namespace ontoalign
