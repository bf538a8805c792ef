#include "ontoalign/ontology.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace ontoalign {

namespace {
const std::string kEmptyTag;

std::string literal_key(std::string_view lexical, std::string_view tag) {
    // Length-prefixed so lexical forms containing any byte stay unambiguous.
    std::string key = std::to_string(lexical.size());
    key.push_back(':');
    key.append(lexical);
    key.append(tag);
    return key;
}
}  // namespace

// ---------------------------------------------------------------------------
// Ontology queries
// ---------------------------------------------------------------------------

const std::string& Ontology::literal_tag(EntityId e) const {
    return e.value < literal_tags_.size() ? literal_tags_[e.value] : kEmptyTag;
}

std::optional<EntityId> Ontology::find_resource(std::string_view lexical) const {
    auto it = resource_index_.find(std::string(lexical));
    if (it == resource_index_.end()) return std::nullopt;
    return EntityId(it->second);
}

std::optional<EntityId> Ontology::find_literal(std::string_view lexical,
                                               std::string_view tag) const {
    auto it = literal_index_.find(literal_key(lexical, tag));
    if (it == literal_index_.end()) return std::nullopt;
    return EntityId(it->second);
}

std::optional<RelationId> Ontology::find_relation(std::string_view lexical) const {
    bool inverted = false;
    std::string_view base = lexical;
    if (base.size() > 3 && base.substr(base.size() - 3) == "^-1") {
        inverted = true;
        base = base.substr(0, base.size() - 3);
    }
    auto it = relation_index_.find(std::string(base));
    if (it == relation_index_.end()) return std::nullopt;
    RelationId r = RelationId::base(it->second);
    return inverted ? r.inverse() : r;
}

std::span<const Statement> Ontology::base_statements(RelationId r) const {
    const auto& [begin, end] = relation_ranges_[r.base_index()];
    return {statements_.data() + begin, statements_.data() + end};
}

std::span<const Neighbor> Ontology::neighbors(EntityId x) const {
    if (x.value >= adjacency_ranges_.size()) return {};
    const auto& [begin, end] = adjacency_ranges_[x.value];
    return {adjacency_.data() + begin, adjacency_.data() + end};
}

std::span<const EntityId> Ontology::objects_of(EntityId x, RelationId r) const {
    std::span<const Neighbor> adj = neighbors(x);
    auto lo = std::lower_bound(adj.begin(), adj.end(), r,
                               [](const Neighbor& n, RelationId rel) { return n.relation < rel; });
    auto hi = lo;
    while (hi != adj.end() && hi->relation == r) ++hi;
    if (lo == hi) return {};
    // objects_flat_ mirrors the entity column of adjacency_, giving the
    // answer as one contiguous slice.
    std::size_t offset = adjacency_ranges_[x.value].first + static_cast<std::size_t>(lo - adj.begin());
    return {objects_flat_.data() + offset, static_cast<std::size_t>(hi - lo)};
}

std::span<const EntityId> Ontology::instances_of(EntityId cls) const {
    if (!type_relation_) return {};
    return objects_of(cls, type_relation_->inverse());
}

OntologyStats Ontology::stats() const {
    OntologyStats s;
    s.instances = instances_.size();
    s.classes = classes_.size();
    s.literals = literals_.size();
    s.relations = relations_.size();
    s.statements = statements_.size();
    s.class_instance_conflicts = class_instance_conflicts_;
    return s;
}

void Ontology::write_stats_csv(std::ostream& out) const {
    OntologyStats s = stats();
    out << "metric,count\n";
    out << "instances," << s.instances << "\n";
    out << "classes," << s.classes << "\n";
    out << "literals," << s.literals << "\n";
    out << "relations," << s.relations << "\n";
    out << "statements," << s.statements << "\n";
    out << "class_instance_conflicts," << s.class_instance_conflicts << "\n";
}

namespace {
void write_term_nt(std::ostream& out, const Ontology& ont, EntityId e) {
    if (ont.kind(e) == EntityKind::Literal) {
        out << '"' << escape_ntriples_literal(ont.lexical(e)) << '"';
        const std::string& tag = ont.literal_tag(e);
        if (!tag.empty()) {
            if (tag[0] == '@') out << tag;
            else out << "^^<" << tag << '>';
        }
    } else if (ont.lexical(e).compare(0, 2, "_:") == 0) {
        out << ont.lexical(e);
    } else {
        out << '<' << ont.lexical(e) << '>';
    }
}
}  // namespace

void Ontology::write_ntriples(std::ostream& out) const {
    for (const Statement& st : statements_) {
        write_term_nt(out, *this, st.subject);
        out << ' ' << '<' << relations_[st.relation.base_index()].lexical << '>' << ' ';
        write_term_nt(out, *this, st.object);
        out << " .\n";
    }
}

void Ontology::write_tsv(std::ostream& out) const {
    for (const Statement& st : statements_) {
        out << lexical(st.subject) << '\t' << relations_[st.relation.base_index()].lexical << '\t';
        if (kind(st.object) == EntityKind::Literal) {
            out << '"' << escape_ntriples_literal(lexical(st.object)) << '"';
            const std::string& tag = literal_tag(st.object);
            if (!tag.empty()) {
                if (tag[0] == '@') out << tag;
                else out << "^^<" << tag << '>';
            }
        } else {
            out << lexical(st.object);
        }
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Builder
// ---------------------------------------------------------------------------

OntologyBuilder::OntologyBuilder(OntologyOptions options) {
    ont_.options_ = std::move(options);
}

EntityId OntologyBuilder::intern_resource(std::string_view lexical) {
    auto [it, inserted] =
        ont_.resource_index_.try_emplace(std::string(lexical),
                                         static_cast<std::uint32_t>(ont_.lexicals_.size()));
    if (inserted) {
        ont_.lexicals_.emplace_back(lexical);
        ont_.literal_tags_.emplace_back();
        ont_.kinds_.push_back(EntityKind::Instance);
    }
    return EntityId(it->second);
}

EntityId OntologyBuilder::intern_literal(std::string_view lexical, std::string_view tag) {
    auto [it, inserted] =
        ont_.literal_index_.try_emplace(literal_key(lexical, tag),
                                        static_cast<std::uint32_t>(ont_.lexicals_.size()));
    if (inserted) {
        ont_.lexicals_.emplace_back(lexical);
        ont_.literal_tags_.emplace_back(tag);
        ont_.kinds_.push_back(EntityKind::Literal);
    }
    return EntityId(it->second);
}

RelationId OntologyBuilder::intern_relation(std::string_view lexical) {
    auto [it, inserted] =
        ont_.relation_index_.try_emplace(std::string(lexical),
                                         static_cast<std::uint32_t>(ont_.relations_.size()));
    if (inserted) {
        ont_.relations_.push_back(RelationInfo{std::string(lexical), 0, 0, 0});
    }
    return RelationId::base(it->second);
}

void OntologyBuilder::add(const RawTriple& triple) {
    if (triple.object.is_literal) {
        add_literal_triple(triple.subject, triple.relation, triple.object.lexical,
                           triple.object.tag);
    } else {
        add_resource_triple(triple.subject, triple.relation, triple.object.lexical);
    }
}

void OntologyBuilder::add_resource_triple(std::string_view subject, std::string_view relation,
                                          std::string_view object) {
    Statement st;
    st.subject = intern_resource(subject);
    st.relation = intern_relation(relation);
    st.object = intern_resource(object);
    pending_.push_back(st);
}

void OntologyBuilder::add_literal_triple(std::string_view subject, std::string_view relation,
                                         std::string_view literal, std::string_view tag) {
    Statement st;
    st.subject = intern_resource(subject);
    st.relation = intern_relation(relation);
    st.object = intern_literal(literal, tag);
    pending_.push_back(st);
}

namespace {

// Transitive reachability over a child→parents edge map; cycle-safe.
void collect_ancestors(std::uint32_t node,
                       const std::unordered_map<std::uint32_t, std::vector<std::uint32_t>>& edges,
                       std::unordered_map<std::uint32_t, std::vector<std::uint32_t>>& memo,
                       std::unordered_set<std::uint32_t>& in_progress) {
    if (memo.count(node) || in_progress.count(node)) return;
    in_progress.insert(node);
    std::unordered_set<std::uint32_t> acc;
    auto it = edges.find(node);
    if (it != edges.end()) {
        for (std::uint32_t parent : it->second) {
            if (parent == node) continue;
            acc.insert(parent);
            collect_ancestors(parent, edges, memo, in_progress);
            auto pm = memo.find(parent);
            if (pm != memo.end()) {
                acc.insert(pm->second.begin(), pm->second.end());
            }
        }
    }
    acc.erase(node);
    std::vector<std::uint32_t> sorted(acc.begin(), acc.end());
    std::sort(sorted.begin(), sorted.end());
    memo.emplace(node, std::move(sorted));
    in_progress.erase(node);
}

}  // namespace

Ontology OntologyBuilder::finalize() {
    auto find_rel = [&](const std::string& iri) -> std::optional<RelationId> {
        auto it = ont_.relation_index_.find(iri);
        if (it == ont_.relation_index_.end()) return std::nullopt;
        return RelationId::base(it->second);
    };
    ont_.type_relation_ = find_rel(ont_.options_.type_iri);
    ont_.subclass_relation_ = find_rel(ont_.options_.subclass_iri);
    ont_.subproperty_relation_ = find_rel(ont_.options_.subproperty_iri);

    if (ont_.options_.compute_closure) {
        // Sub-class closure: transitive subclassOf edges, and type
        // statements propagated to every ancestor class.
        if (ont_.subclass_relation_) {
            std::uint32_t sub = ont_.subclass_relation_->base_index();
            std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> edges;
            for (const Statement& st : pending_) {
                if (st.relation.base_index() == sub) {
                    edges[st.subject.value].push_back(st.object.value);
                }
            }
            std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> memo;
            std::unordered_set<std::uint32_t> in_progress;
            for (const auto& [node, _] : edges) {
                collect_ancestors(node, edges, memo, in_progress);
            }
            std::vector<Statement> extra;
            for (const auto& [node, ancestors] : memo) {
                for (std::uint32_t a : ancestors) {
                    extra.push_back(Statement{EntityId(node), *ont_.subclass_relation_, EntityId(a)});
                }
            }
            if (ont_.type_relation_) {
                std::uint32_t type = ont_.type_relation_->base_index();
                for (const Statement& st : pending_) {
                    if (st.relation.base_index() != type) continue;
                    auto it = memo.find(st.object.value);
                    if (it == memo.end()) continue;
                    for (std::uint32_t a : it->second) {
                        extra.push_back(Statement{st.subject, *ont_.type_relation_, EntityId(a)});
                    }
                }
            }
            pending_.insert(pending_.end(), extra.begin(), extra.end());
        }

        // Sub-property closure: r(x,y) with subpropertyOf(r,s) implies
        // s(x,y). Relations are named by entities in those statements.
        if (ont_.subproperty_relation_) {
            std::uint32_t subp = ont_.subproperty_relation_->base_index();
            std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> edges;  // rel -> parent rels
            for (const Statement& st : pending_) {
                if (st.relation.base_index() != subp) continue;
                auto child = ont_.relation_index_.find(ont_.lexicals_[st.subject.value]);
                auto parent = ont_.relation_index_.find(ont_.lexicals_[st.object.value]);
                if (child == ont_.relation_index_.end()) continue;
                std::uint32_t parent_rel;
                if (parent == ont_.relation_index_.end()) {
                    parent_rel = intern_relation(ont_.lexicals_[st.object.value]).base_index();
                } else {
                    parent_rel = parent->second;
                }
                edges[child->second].push_back(parent_rel);
            }
            std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> memo;
            std::unordered_set<std::uint32_t> in_progress;
            for (const auto& [node, _] : edges) {
                collect_ancestors(node, edges, memo, in_progress);
            }
            std::vector<Statement> extra;
            for (const Statement& st : pending_) {
                auto it = memo.find(st.relation.base_index());
                if (it == memo.end()) continue;
                for (std::uint32_t parent : it->second) {
                    extra.push_back(Statement{st.subject, RelationId::base(parent), st.object});
                }
            }
            pending_.insert(pending_.end(), extra.begin(), extra.end());
        }
    }

    // Dedup into the final, deterministically ordered statement set.
    std::sort(pending_.begin(), pending_.end());
    pending_.erase(std::unique(pending_.begin(), pending_.end()), pending_.end());
    ont_.statements_ = std::move(pending_);
    pending_.clear();

    // Partition. Classes are objects of the type relation and arguments
    // of subclassOf; a class that also occurs in instance position stays
    // a class and is counted as a conflict.
    std::vector<bool> is_class(ont_.kinds_.size(), false);
    for (const Statement& st : ont_.statements_) {
        if (ont_.type_relation_ && st.relation == *ont_.type_relation_) {
            if (ont_.kinds_[st.object.value] != EntityKind::Literal) {
                is_class[st.object.value] = true;
            }
        }
        if (ont_.subclass_relation_ && st.relation == *ont_.subclass_relation_) {
            if (ont_.kinds_[st.subject.value] != EntityKind::Literal) is_class[st.subject.value] = true;
            if (ont_.kinds_[st.object.value] != EntityKind::Literal) is_class[st.object.value] = true;
        }
    }
    std::vector<bool> instance_position(ont_.kinds_.size(), false);
    for (const Statement& st : ont_.statements_) {
        bool is_type = ont_.type_relation_ && st.relation == *ont_.type_relation_;
        bool is_schema = (ont_.subclass_relation_ && st.relation == *ont_.subclass_relation_) ||
                         (ont_.subproperty_relation_ && st.relation == *ont_.subproperty_relation_);
        if (is_schema) continue;
        instance_position[st.subject.value] = true;
        if (!is_type && ont_.kinds_[st.object.value] != EntityKind::Literal) {
            instance_position[st.object.value] = true;
        }
    }
    for (std::uint32_t i = 0; i < ont_.kinds_.size(); ++i) {
        if (ont_.kinds_[i] == EntityKind::Literal) {
            ont_.literals_.push_back(EntityId(i));
        } else if (is_class[i]) {
            ont_.kinds_[i] = EntityKind::Class;
            ont_.classes_.push_back(EntityId(i));
            if (instance_position[i]) ++ont_.class_instance_conflicts_;
        } else {
            ont_.kinds_[i] = EntityKind::Instance;
            ont_.instances_.push_back(EntityId(i));
        }
    }

    // Relation catalog: statement ranges plus count columns.
    ont_.relation_ranges_.assign(ont_.relations_.size(), {0, 0});
    {
        std::size_t begin = 0;
        while (begin < ont_.statements_.size()) {
            std::size_t end = begin;
            std::uint32_t rel = ont_.statements_[begin].relation.base_index();
            std::unordered_set<std::uint32_t> subjects;
            std::unordered_set<std::uint32_t> objects;
            while (end < ont_.statements_.size() &&
                   ont_.statements_[end].relation.base_index() == rel) {
                subjects.insert(ont_.statements_[end].subject.value);
                objects.insert(ont_.statements_[end].object.value);
                ++end;
            }
            RelationInfo& info = ont_.relations_[rel];
            info.statements = end - begin;
            info.distinct_subjects = subjects.size();
            info.distinct_objects = objects.size();
            ont_.relation_ranges_[rel] = {begin, end};
            begin = end;
        }
    }

    // Flattened adjacency covering both polarities.
    std::vector<std::size_t> degree(ont_.kinds_.size(), 0);
    for (const Statement& st : ont_.statements_) {
        ++degree[st.subject.value];
        ++degree[st.object.value];
    }
    ont_.adjacency_ranges_.resize(ont_.kinds_.size());
    std::size_t total = 0;
    for (std::uint32_t i = 0; i < degree.size(); ++i) {
        ont_.adjacency_ranges_[i] = {total, total};
        total += degree[i];
    }
    ont_.adjacency_.resize(total);
    for (const Statement& st : ont_.statements_) {
        auto& sub_range = ont_.adjacency_ranges_[st.subject.value];
        ont_.adjacency_[sub_range.second++] = Neighbor{st.relation, st.object};
        auto& obj_range = ont_.adjacency_ranges_[st.object.value];
        ont_.adjacency_[obj_range.second++] = Neighbor{st.relation.inverse(), st.subject};
    }
    for (std::uint32_t i = 0; i < ont_.adjacency_ranges_.size(); ++i) {
        auto [begin, end] = ont_.adjacency_ranges_[i];
        std::sort(ont_.adjacency_.begin() + begin, ont_.adjacency_.begin() + end);
    }
    ont_.objects_flat_.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
        ont_.objects_flat_[i] = ont_.adjacency_[i].entity;
    }

    return std::move(ont_);
}

// ---------------------------------------------------------------------------
// Loaders
// ---------------------------------------------------------------------------

Ontology load_ontology(std::istream& in, TripleFormat format, const OntologyOptions& options,
                       const ParseOptions& parse_options) {
    OntologyBuilder builder(options);
    parse_file(in, format, [&](RawTriple&& t) { builder.add(t); }, parse_options);
    return builder.finalize();
}

Ontology load_ontology(const std::string& path, const OntologyOptions& options,
                       const ParseOptions& parse_options) {
    auto in = open_text_input(path);
    return load_ontology(*in, detect_format(path), options, parse_options);
}

Ontology ontology_from_string(const std::string& text, TripleFormat format,
                              const OntologyOptions& options) {
    std::istringstream in(text);
    return load_ontology(in, format, options);
}

}  // namespace ontoalign
