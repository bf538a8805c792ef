#include "ontoalign/tables.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "ontoalign/ontology.hpp"

namespace ontoalign {

void EqualityTable::insert_sorted(PartnerMap& map, EntityId key, EntityId partner, double p,
                                  std::size_t& fresh) {
    auto& partners = map[key.value];
    auto it = std::lower_bound(partners.begin(), partners.end(), partner,
                               [](const Partner& a, EntityId b) { return a.first < b; });
    if (it != partners.end() && it->first == partner) {
        it->second = p;
    } else {
        partners.insert(it, Partner{partner, p});
        ++fresh;
    }
}

void EqualityTable::set(EntityId first, EntityId second, double probability) {
    std::size_t fresh = 0;
    insert_sorted(forward_, first, second, probability, fresh);
    if (fresh > 0) ++entries_;
    fresh = 0;
    insert_sorted(reverse_, second, first, probability, fresh);
}

double EqualityTable::get(EntityId first, EntityId second) const {
    auto it = forward_.find(first.value);
    if (it == forward_.end()) return 0.0;
    const auto& partners = it->second;
    auto pos = std::lower_bound(partners.begin(), partners.end(), second,
                                [](const Partner& a, EntityId b) { return a.first < b; });
    if (pos != partners.end() && pos->first == second) return pos->second;
    return 0.0;
}

std::span<const EqualityTable::Partner> EqualityTable::partners_of_first(EntityId first) const {
    auto it = forward_.find(first.value);
    if (it == forward_.end()) return {};
    return it->second;
}

std::span<const EqualityTable::Partner> EqualityTable::partners_of_second(EntityId second) const {
    auto it = reverse_.find(second.value);
    if (it == reverse_.end()) return {};
    return it->second;
}

std::vector<EntityId> EqualityTable::first_keys_sorted() const {
    std::vector<EntityId> keys;
    keys.reserve(forward_.size());
    for (const auto& [id, _] : forward_) keys.push_back(EntityId(id));
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<EntityId> MaximalAssignment::keys_sorted() const {
    std::vector<EntityId> keys;
    keys.reserve(best_.size());
    for (const auto& [id, _] : best_) keys.push_back(EntityId(id));
    std::sort(keys.begin(), keys.end());
    return keys;
}

bool operator==(const MaximalAssignment& a, const MaximalAssignment& b) {
    if (a.best_.size() != b.best_.size()) return false;
    for (const auto& [id, assigned] : a.best_) {
        auto it = b.best_.find(id);
        if (it == b.best_.end()) return false;
        if (it->second.partner != assigned.partner || it->second.score != assigned.score) {
            return false;
        }
    }
    return true;
}

namespace {

template <typename Map, typename Key>
std::vector<std::pair<std::pair<Key, Key>, double>> sorted_entries(const Map& map) {
    std::vector<std::pair<std::pair<Key, Key>, double>> out;
    out.reserve(map.size());
    for (const auto& [k, v] : map) {
        Key a(static_cast<std::uint32_t>(k >> 32));
        Key b(static_cast<std::uint32_t>(k & 0xffffffffu));
        out.push_back({{a, b}, v});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.first < y.first.first) return true;
        if (y.first.first < x.first.first) return false;
        return x.first.second < y.first.second;
    });
    return out;
}

}  // namespace

std::vector<std::pair<std::pair<RelationId, RelationId>, double>>
SubrelationTable::entries_first_in_second() const {
    return sorted_entries<std::unordered_map<std::uint64_t, double>, RelationId>(first_in_second_);
}

std::vector<std::pair<std::pair<RelationId, RelationId>, double>>
SubrelationTable::entries_second_in_first() const {
    return sorted_entries<std::unordered_map<std::uint64_t, double>, RelationId>(second_in_first_);
}

std::vector<std::pair<std::pair<EntityId, EntityId>, double>>
SubclassTable::entries_first_in_second() const {
    return sorted_entries<std::unordered_map<std::uint64_t, double>, EntityId>(first_in_second_);
}

std::vector<std::pair<std::pair<EntityId, EntityId>, double>>
SubclassTable::entries_second_in_first() const {
    return sorted_entries<std::unordered_map<std::uint64_t, double>, EntityId>(second_in_first_);
}

namespace {
void write_score(std::ostream& out, double score) {
    out << std::setprecision(17) << score;
}
}  // namespace

void write_equalities_tsv(std::ostream& out, const EqualityTable& table, const Ontology& o1,
                          const Ontology& o2) {
    struct Row {
        const std::string* first;
        EntityId second;
        double score;
    };
    std::vector<Row> rows;
    for (EntityId first : table.first_keys_sorted()) {
        for (const auto& [second, score] : table.partners_of_first(first)) {
            rows.push_back(Row{&o1.lexical(first), second, score});
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (*a.first != *b.first) return *a.first < *b.first;
        if (a.score != b.score) return a.score > b.score;
        return a.second < b.second;
    });
    for (const Row& row : rows) {
        out << *row.first << '\t' << o2.lexical(row.second) << '\t';
        write_score(out, row.score);
        out << '\n';
    }
}

namespace {

struct DirectedRow {
    std::string left;
    const char* direction;
    std::string right;
    double score;
};

void write_directed_rows(std::ostream& out, std::vector<DirectedRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const DirectedRow& a, const DirectedRow& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.left != b.left) return a.left < b.left;
        return a.right < b.right;
    });
    for (const DirectedRow& row : rows) {
        out << row.left << '\t' << row.direction << '\t' << row.right << '\t';
        write_score(out, row.score);
        out << '\n';
    }
}

}  // namespace

void write_subrelations_tsv(std::ostream& out, const SubrelationTable& table, const Ontology& o1,
                            const Ontology& o2) {
    std::vector<DirectedRow> rows;
    for (const auto& [pair, score] : table.entries_first_in_second()) {
        rows.push_back({o1.relation_name(pair.first), "->", o2.relation_name(pair.second), score});
    }
    for (const auto& [pair, score] : table.entries_second_in_first()) {
        rows.push_back({o1.relation_name(pair.first), "<-", o2.relation_name(pair.second), score});
    }
    write_directed_rows(out, rows);
}

void write_subclasses_tsv(std::ostream& out, const SubclassTable& table, const Ontology& o1,
                          const Ontology& o2) {
    std::vector<DirectedRow> rows;
    for (const auto& [pair, score] : table.entries_first_in_second()) {
        rows.push_back({o1.lexical(pair.first), "->", o2.lexical(pair.second), score});
    }
    for (const auto& [pair, score] : table.entries_second_in_first()) {
        rows.push_back({o1.lexical(pair.first), "<-", o2.lexical(pair.second), score});
    }
    write_directed_rows(out, rows);
}

}  // namespace ontoalign
