#pragma once

// Sparse cross-ontology score tables. Keys always pair a first-ontology
// handle with a second-ontology handle; both sides are indexed so either
// direction can be traversed. Values below the pruning threshold are
// never stored.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ontoalign/ids.hpp"

namespace ontoalign {

class Ontology;

// (entity of O1, entity of O2) -> probability.
class EqualityTable {
public:
    using Partner = std::pair<EntityId, double>;

    void set(EntityId first, EntityId second, double probability);
    [[nodiscard]] double get(EntityId first, EntityId second) const;

    // Partners sorted by entity id; empty span when none.
    [[nodiscard]] std::span<const Partner> partners_of_first(EntityId first) const;
    [[nodiscard]] std::span<const Partner> partners_of_second(EntityId second) const;

    [[nodiscard]] std::size_t size() const { return entries_; }
    [[nodiscard]] bool empty() const { return entries_ == 0; }

    [[nodiscard]] std::vector<EntityId> first_keys_sorted() const;

    int iteration = 0;

private:
    using PartnerMap = std::unordered_map<std::uint32_t, std::vector<Partner>>;
    static void insert_sorted(PartnerMap& map, EntityId key, EntityId partner, double p,
                              std::size_t& fresh);

    PartnerMap forward_;
    PartnerMap reverse_;
    std::size_t entries_ = 0;
};

// Per first-ontology entity, the single best partner.
class MaximalAssignment {
public:
    struct Assigned {
        EntityId partner;
        double score;
    };

    void assign(EntityId entity, EntityId partner, double score) {
        best_[entity.value] = Assigned{partner, score};
    }
    [[nodiscard]] std::optional<Assigned> partner_of(EntityId entity) const {
        auto it = best_.find(entity.value);
        if (it == best_.end()) return std::nullopt;
        return it->second;
    }
    [[nodiscard]] std::size_t size() const { return best_.size(); }
    [[nodiscard]] std::vector<EntityId> keys_sorted() const;
    [[nodiscard]] const std::unordered_map<std::uint32_t, Assigned>& entries() const {
        return best_;
    }

    friend bool operator==(const MaximalAssignment& a, const MaximalAssignment& b);

private:
    std::unordered_map<std::uint32_t, Assigned> best_;
};

// Directed relation-containment scores; the two directions are
// independent entries under the same (r of O1, r' of O2) key.
class SubrelationTable {
public:
    void set_first_in_second(RelationId r1, RelationId r2, double p) {
        first_in_second_[key(r1, r2)] = p;
    }
    void set_second_in_first(RelationId r1, RelationId r2, double p) {
        second_in_first_[key(r1, r2)] = p;
    }
    [[nodiscard]] double first_in_second(RelationId r1, RelationId r2) const {
        return lookup(first_in_second_, key(r1, r2));
    }
    [[nodiscard]] double second_in_first(RelationId r1, RelationId r2) const {
        return lookup(second_in_first_, key(r1, r2));
    }
    [[nodiscard]] std::size_t size() const {
        return first_in_second_.size() + second_in_first_.size();
    }

    [[nodiscard]] std::vector<std::pair<std::pair<RelationId, RelationId>, double>>
    entries_first_in_second() const;
    [[nodiscard]] std::vector<std::pair<std::pair<RelationId, RelationId>, double>>
    entries_second_in_first() const;

    friend bool operator==(const SubrelationTable& a, const SubrelationTable& b) {
        return a.first_in_second_ == b.first_in_second_ && a.second_in_first_ == b.second_in_first_;
    }

private:
    static std::uint64_t key(RelationId r1, RelationId r2) {
        return (static_cast<std::uint64_t>(r1.code) << 32) | r2.code;
    }
    static double lookup(const std::unordered_map<std::uint64_t, double>& map, std::uint64_t k) {
        auto it = map.find(k);
        return it == map.end() ? 0.0 : it->second;
    }

    std::unordered_map<std::uint64_t, double> first_in_second_;
    std::unordered_map<std::uint64_t, double> second_in_first_;
};

// Supplies relation-containment factors to the instance scorer: the
// bootstrap constant on the first pass, table lookups afterwards.
struct SubrelationView {
    const SubrelationTable* table = nullptr;
    double bootstrap = 0.0;

    [[nodiscard]] double first_in_second(RelationId r1, RelationId r2) const {
        return table != nullptr ? table->first_in_second(r1, r2) : bootstrap;
    }
    [[nodiscard]] double second_in_first(RelationId r1, RelationId r2) const {
        return table != nullptr ? table->second_in_first(r1, r2) : bootstrap;
    }
};

// Directed class-containment scores.
class SubclassTable {
public:
    void set_first_in_second(EntityId c1, EntityId c2, double p) {
        first_in_second_[key(c1, c2)] = p;
    }
    void set_second_in_first(EntityId c1, EntityId c2, double p) {
        second_in_first_[key(c1, c2)] = p;
    }
    [[nodiscard]] double first_in_second(EntityId c1, EntityId c2) const {
        auto it = first_in_second_.find(key(c1, c2));
        return it == first_in_second_.end() ? 0.0 : it->second;
    }
    [[nodiscard]] double second_in_first(EntityId c1, EntityId c2) const {
        auto it = second_in_first_.find(key(c1, c2));
        return it == second_in_first_.end() ? 0.0 : it->second;
    }
    [[nodiscard]] std::size_t size() const {
        return first_in_second_.size() + second_in_first_.size();
    }

    [[nodiscard]] std::vector<std::pair<std::pair<EntityId, EntityId>, double>>
    entries_first_in_second() const;
    [[nodiscard]] std::vector<std::pair<std::pair<EntityId, EntityId>, double>>
    entries_second_in_first() const;

private:
    static std::uint64_t key(EntityId a, EntityId b) {
        return (static_cast<std::uint64_t>(a.value) << 32) | b.value;
    }

    std::unordered_map<std::uint64_t, double> first_in_second_;
    std::unordered_map<std::uint64_t, double> second_in_first_;
};

// --- serialization ----------------------------------------------------

// entity1 TAB entity2 TAB probability, sorted by entity1 lexical, then
// probability descending, then partner id; the first row per entity is
// therefore its maximal assignment.
void write_equalities_tsv(std::ostream& out, const EqualityTable& table, const Ontology& o1,
                          const Ontology& o2);

// relation1 TAB direction TAB relation2 TAB score; direction "->" means
// relation1 contained in relation2, "<-" the converse. Score descending.
void write_subrelations_tsv(std::ostream& out, const SubrelationTable& table, const Ontology& o1,
                            const Ontology& o2);

// class1 TAB direction TAB class2 TAB score, same conventions.
void write_subclasses_tsv(std::ostream& out, const SubclassTable& table, const Ontology& o1,
                          const Ontology& o2);

}  // namespace ontoalign
