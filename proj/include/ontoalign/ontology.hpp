#pragma once

// One ontology: interned entities and relations, a deduplicated and
// deductively closed statement set, and indexes answering neighborhood
// queries in both directions at constant cost.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontoalign/ids.hpp"
#include "ontoalign/parser.hpp"

namespace ontoalign {

struct OntologyOptions {
    std::string type_iri = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
    std::string subclass_iri = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
    std::string subproperty_iri = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
    // When false, subclassOf/subPropertyOf consequences are trusted to be
    // materialized in the input already.
    bool compute_closure = true;
};

// A relation paired with the neighbor it leads to; adjacency entry of
// one entity. The relation carries polarity, so a single statement
// r(x,y) appears as (r,y) on x and (r⁻¹,x) on y.
struct Neighbor {
    RelationId relation;
    EntityId entity;

    friend bool operator==(const Neighbor& a, const Neighbor& b) {
        return a.relation == b.relation && a.entity == b.entity;
    }
    friend bool operator<(const Neighbor& a, const Neighbor& b) {
        if (a.relation != b.relation) return a.relation < b.relation;
        return a.entity < b.entity;
    }
};

struct RelationInfo {
    std::string lexical;
    std::size_t statements = 0;        // statements of the base relation
    std::size_t distinct_subjects = 0; // distinct first arguments, base polarity
    std::size_t distinct_objects = 0;  // distinct first arguments of the inverse
};

struct OntologyStats {
    std::size_t instances = 0;
    std::size_t classes = 0;
    std::size_t literals = 0;
    std::size_t relations = 0;  // base relations
    std::size_t statements = 0;
    std::size_t class_instance_conflicts = 0;
};

class Ontology {
public:
    // --- entities ---
    [[nodiscard]] std::size_t entity_count() const { return kinds_.size(); }
    [[nodiscard]] EntityKind kind(EntityId e) const { return kinds_[e.value]; }
    [[nodiscard]] const std::string& lexical(EntityId e) const { return lexicals_[e.value]; }
    [[nodiscard]] const std::string& literal_tag(EntityId e) const;
    [[nodiscard]] std::optional<EntityId> find_resource(std::string_view lexical) const;
    [[nodiscard]] std::optional<EntityId> find_literal(std::string_view lexical,
                                                       std::string_view tag = "") const;

    [[nodiscard]] std::span<const EntityId> instances() const { return instances_; }
    [[nodiscard]] std::span<const EntityId> classes() const { return classes_; }
    [[nodiscard]] std::span<const EntityId> literals() const { return literals_; }

    // --- relations ---
    [[nodiscard]] std::size_t relation_count() const { return relations_.size(); }
    [[nodiscard]] const RelationInfo& relation_info(RelationId r) const {
        return relations_[r.base_index()];
    }
    [[nodiscard]] std::string relation_name(RelationId r) const {
        const std::string& base = relations_[r.base_index()].lexical;
        return r.inverted() ? base + "^-1" : base;
    }
    [[nodiscard]] std::optional<RelationId> find_relation(std::string_view lexical) const;
    [[nodiscard]] std::size_t statement_count(RelationId r) const {
        return relations_[r.base_index()].statements;
    }
    [[nodiscard]] std::size_t distinct_first_args(RelationId r) const {
        const RelationInfo& info = relations_[r.base_index()];
        return r.inverted() ? info.distinct_objects : info.distinct_subjects;
    }
    [[nodiscard]] std::optional<RelationId> type_relation() const { return type_relation_; }
    [[nodiscard]] std::optional<RelationId> subclass_relation() const { return subclass_relation_; }

    // --- statements & neighborhoods ---
    [[nodiscard]] std::span<const Statement> statements() const { return statements_; }

    // Statements of r as (first, second) pairs honoring polarity.
    [[nodiscard]] std::span<const Statement> base_statements(RelationId r) const;

    // All y with r(x,y); empty when x or r is unknown.
    [[nodiscard]] std::span<const EntityId> objects_of(EntityId x, RelationId r) const;

    // All x with r(x,y); identical to objects_of(y, r⁻¹).
    [[nodiscard]] std::span<const EntityId> subjects_with(RelationId r, EntityId y) const {
        return objects_of(y, r.inverse());
    }

    // Every statement in which x appears as first argument, inverse
    // views included. Sorted by (relation, entity).
    [[nodiscard]] std::span<const Neighbor> neighbors(EntityId x) const;

    [[nodiscard]] std::span<const EntityId> instances_of(EntityId cls) const;

    // --- reports ---
    [[nodiscard]] OntologyStats stats() const;
    void write_stats_csv(std::ostream& out) const;
    void write_ntriples(std::ostream& out) const;
    void write_tsv(std::ostream& out) const;

    [[nodiscard]] const OntologyOptions& options() const { return options_; }

private:
    friend class OntologyBuilder;

    OntologyOptions options_;
    std::vector<std::string> lexicals_;
    std::vector<std::string> literal_tags_;  // parallel to lexicals_; empty for resources
    std::vector<EntityKind> kinds_;
    std::unordered_map<std::string, std::uint32_t> resource_index_;
    std::unordered_map<std::string, std::uint32_t> literal_index_;  // key: lexical + '\n' + tag

    std::vector<RelationInfo> relations_;
    std::unordered_map<std::string, std::uint32_t> relation_index_;
    std::optional<RelationId> type_relation_;
    std::optional<RelationId> subclass_relation_;
    std::optional<RelationId> subproperty_relation_;

    std::vector<Statement> statements_;  // sorted by (relation, subject, object)
    std::vector<std::pair<std::size_t, std::size_t>> relation_ranges_;  // into statements_

    // Flattened per-entity adjacency, sorted by (relation, entity), with
    // the entity column duplicated for contiguous objects_of answers.
    std::vector<Neighbor> adjacency_;
    std::vector<EntityId> objects_flat_;
    std::vector<std::pair<std::size_t, std::size_t>> adjacency_ranges_;

    std::vector<EntityId> instances_;
    std::vector<EntityId> classes_;
    std::vector<EntityId> literals_;
    std::size_t class_instance_conflicts_ = 0;
};

class OntologyBuilder {
public:
    explicit OntologyBuilder(OntologyOptions options = {});

    void add(const RawTriple& triple);
    void add_resource_triple(std::string_view subject, std::string_view relation,
                             std::string_view object);
    void add_literal_triple(std::string_view subject, std::string_view relation,
                            std::string_view literal, std::string_view tag = "");

    // Dedup, deductive closure, partition, and index construction.
    [[nodiscard]] Ontology finalize();

private:
    EntityId intern_resource(std::string_view lexical);
    EntityId intern_literal(std::string_view lexical, std::string_view tag);
    RelationId intern_relation(std::string_view lexical);

    Ontology ont_;
    std::vector<Statement> pending_;
};

// Convenience loaders.
Ontology load_ontology(const std::string& path, const OntologyOptions& options = {},
                       const ParseOptions& parse_options = {});
Ontology load_ontology(std::istream& in, TripleFormat format, const OntologyOptions& options = {},
                       const ParseOptions& parse_options = {});
Ontology ontology_from_string(const std::string& text, TripleFormat format,
                              const OntologyOptions& options = {});

}  // namespace ontoalign
