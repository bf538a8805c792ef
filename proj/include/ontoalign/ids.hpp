#pragma once

#include <cstdint>
#include <functional>

namespace ontoalign {

// What an interned entity denotes. Every entity is exactly one of these.
enum class EntityKind : std::uint8_t {
    Instance,
    Class,
    Literal,
};

// Dense handle for an interned resource or literal. Handles are only
// meaningful relative to the ontology that interned them.
struct EntityId {
    static constexpr std::uint32_t invalid = 0xffffffffu;

    std::uint32_t value = invalid;

    constexpr EntityId() = default;
    constexpr explicit EntityId(std::uint32_t v) : value(v) {}

    [[nodiscard]] constexpr bool valid() const { return value != invalid; }

    friend constexpr bool operator==(EntityId a, EntityId b) { return a.value == b.value; }
    friend constexpr bool operator!=(EntityId a, EntityId b) { return a.value != b.value; }
    friend constexpr bool operator<(EntityId a, EntityId b) { return a.value < b.value; }
};

// Handle for a relation with a polarity bit. The inverse view of base
// relation k is code 2k+1; flipping polarity twice is the identity.
struct RelationId {
    static constexpr std::uint32_t invalid = 0xffffffffu;

    std::uint32_t code = invalid;

    constexpr RelationId() = default;
    constexpr explicit RelationId(std::uint32_t c) : code(c) {}

    [[nodiscard]] static constexpr RelationId base(std::uint32_t index) {
        return RelationId(index << 1);
    }

    [[nodiscard]] constexpr RelationId inverse() const { return RelationId(code ^ 1u); }
    [[nodiscard]] constexpr bool inverted() const { return (code & 1u) != 0; }
    [[nodiscard]] constexpr std::uint32_t base_index() const { return code >> 1; }
    [[nodiscard]] constexpr bool valid() const { return code != invalid; }

    friend constexpr bool operator==(RelationId a, RelationId b) { return a.code == b.code; }
    friend constexpr bool operator!=(RelationId a, RelationId b) { return a.code != b.code; }
    friend constexpr bool operator<(RelationId a, RelationId b) { return a.code < b.code; }
};

// One fact: relation(subject, object). Stored with base polarity; the
// inverse view is produced by the indexes, never materialized.
struct Statement {
    EntityId subject;
    RelationId relation;
    EntityId object;

    friend bool operator==(const Statement& a, const Statement& b) {
        return a.subject == b.subject && a.relation == b.relation && a.object == b.object;
    }
    friend bool operator<(const Statement& a, const Statement& b) {
        if (a.relation != b.relation) return a.relation < b.relation;
        if (a.subject != b.subject) return a.subject < b.subject;
        return a.object < b.object;
    }
};

}  // namespace ontoalign

template <>
struct std::hash<ontoalign::EntityId> {
    size_t operator()(ontoalign::EntityId id) const noexcept {
        return std::hash<std::uint32_t>{}(id.value);
    }
};

template <>
struct std::hash<ontoalign::RelationId> {
    size_t operator()(ontoalign::RelationId id) const noexcept {
        return std::hash<std::uint32_t>{}(id.code);
    }
};
