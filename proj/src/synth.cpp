#include "ontoalign/synth.hpp"

#include <cctype>
#include <random>

namespace ontoalign {

std::string format_perturb(const std::string& raw) {
    if (raw.empty()) return raw;
    std::string out = raw;
    std::size_t dash = out.find('-');
    if (dash != std::string::npos) {
        out[dash] = '/';
        return out;
    }
    bool has_upper = false;
    bool has_lower = false;
    for (unsigned char c : out) {
        if (std::isupper(c)) has_upper = true;
        if (std::islower(c)) has_lower = true;
    }
    if (has_upper) {
        for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return out;
    }
    if (has_lower) {
        for (char& c : out) {
            if (std::islower(static_cast<unsigned char>(c))) {
                c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
                break;
            }
        }
        return out;
    }
    // Digits or punctuation only: split with a dash.
    out.insert(out.size() / 2 + (out.size() == 1 ? 1 : 0), 1, '-');
    return out;
}

TwinResult make_twin(const Ontology& source, const TwinOptions& options) {
    TwinResult result;
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    const OntologyOptions& oo = source.options();
    auto rename_entity = [&](EntityId e) { return options.rename_prefix + source.lexical(e); };
    auto rename_relation = [&](RelationId r) -> std::string {
        const std::string& lex = source.relation_info(r).lexical;
        // Structural relations keep their identifiers so the twin stays
        // interpretable as an ontology.
        if (lex == oo.type_iri || lex == oo.subclass_iri || lex == oo.subproperty_iri) return lex;
        return options.rename_prefix + lex;
    };

    OntologyBuilder builder(oo);
    for (const Statement& st : source.statements()) {
        const std::string& rel_lex = source.relation_info(st.relation).lexical;
        bool is_schema = rel_lex == oo.subclass_iri || rel_lex == oo.subproperty_iri;
        if (!is_schema && options.drop_rate > 0.0 && uniform(rng) < options.drop_rate) {
            ++result.dropped_statements;
            continue;
        }
        std::string subject = rename_entity(st.subject);
        std::string relation = rename_relation(st.relation);
        if (source.kind(st.object) == EntityKind::Literal) {
            std::string lexical = source.lexical(st.object);
            if (options.perturb_rate > 0.0 && uniform(rng) < options.perturb_rate) {
                std::string perturbed = format_perturb(lexical);
                if (perturbed != lexical) ++result.perturbed_literals;
                lexical = std::move(perturbed);
            }
            builder.add_literal_triple(subject, relation, lexical, source.literal_tag(st.object));
        } else {
            builder.add_resource_triple(subject, relation, rename_entity(st.object));
        }
    }
    result.twin = builder.finalize();

    for (EntityId e : source.instances()) {
        result.instance_gold.emplace_back(source.lexical(e), rename_entity(e));
    }
    for (EntityId c : source.classes()) {
        result.class_gold.emplace_back(source.lexical(c), rename_entity(c));
    }
    for (std::uint32_t i = 0; i < source.relation_count(); ++i) {
        RelationId r = RelationId::base(i);
        const std::string& lex = source.relation_info(r).lexical;
        if (lex == oo.type_iri || lex == oo.subclass_iri || lex == oo.subproperty_iri) continue;
        result.relation_gold.emplace_back(lex, options.rename_prefix + lex);
    }
    return result;
}

}  // namespace ontoalign
