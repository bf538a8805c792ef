// Python bindings for the alignment engine: load ontologies, run the
// fixpoint, inspect the resulting tables, and evaluate against a gold
// standard.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "ontoalign/aligner.hpp"
#include "ontoalign/evaluation.hpp"
#include "ontoalign/ontology.hpp"
#include "ontoalign/synth.hpp"

namespace py = pybind11;
using namespace ontoalign;

namespace {

using OntologyPtr = std::shared_ptr<Ontology>;

TripleFormat parse_format(const std::string& format, const std::string& path) {
    if (format == "ntriples") return TripleFormat::NTriples;
    if (format == "tsv") return TripleFormat::Tsv;
    if (format == "auto") return detect_format(path);
    throw std::invalid_argument("format must be 'ntriples', 'tsv', or 'auto'");
}

OntologyOptions make_options(const std::string& type_iri, const std::string& subclass_iri,
                             const std::string& subproperty_iri, bool compute_closure) {
    OntologyOptions opts;
    if (!type_iri.empty()) opts.type_iri = type_iri;
    if (!subclass_iri.empty()) opts.subclass_iri = subclass_iri;
    if (!subproperty_iri.empty()) opts.subproperty_iri = subproperty_iri;
    opts.compute_closure = compute_closure;
    return opts;
}

// Alignment output with the ontologies kept alive for lexical lookups.
struct PyAlignment {
    OntologyPtr o1;
    OntologyPtr o2;
    AlignmentResult result;

    std::vector<std::tuple<std::string, std::string, double>> equalities() const {
        std::vector<std::tuple<std::string, std::string, double>> rows;
        for (EntityId first : result.equalities.first_keys_sorted()) {
            for (const auto& [second, score] : result.equalities.partners_of_first(first)) {
                rows.emplace_back(o1->lexical(first), o2->lexical(second), score);
            }
        }
        return rows;
    }

    py::dict assignment() const {
        py::dict out;
        for (EntityId first : result.equalities.first_keys_sorted()) {
            auto assigned = result.assignment.partner_of(first);
            if (assigned) {
                out[py::str(o1->lexical(first))] =
                    py::make_tuple(o2->lexical(assigned->partner), assigned->score);
            }
        }
        return out;
    }

    std::vector<std::tuple<std::string, std::string, std::string, double>> subrelations() const {
        std::vector<std::tuple<std::string, std::string, std::string, double>> rows;
        for (const auto& [pair, score] : result.subrelations.entries_first_in_second()) {
            rows.emplace_back(o1->relation_name(pair.first), "->", o2->relation_name(pair.second),
                              score);
        }
        for (const auto& [pair, score] : result.subrelations.entries_second_in_first()) {
            rows.emplace_back(o1->relation_name(pair.first), "<-", o2->relation_name(pair.second),
                              score);
        }
        return rows;
    }

    std::vector<std::tuple<std::string, std::string, std::string, double>> subclasses() const {
        std::vector<std::tuple<std::string, std::string, std::string, double>> rows;
        for (const auto& [pair, score] : result.subclasses.entries_first_in_second()) {
            rows.emplace_back(o1->lexical(pair.first), "->", o2->lexical(pair.second), score);
        }
        for (const auto& [pair, score] : result.subclasses.entries_second_in_first()) {
            rows.emplace_back(o1->lexical(pair.first), "<-", o2->lexical(pair.second), score);
        }
        return rows;
    }

    py::list diagnostics() const {
        py::list out;
        for (const IterationDiagnostics& d : result.diagnostics) {
            py::dict row;
            row["iteration"] = d.iteration;
            row["changed_fraction"] = d.changed_fraction;
            row["eq_entries"] = d.eq_entries;
            row["subrel_entries"] = d.subrel_entries;
            row["seconds"] = d.seconds;
            out.append(row);
        }
        return out;
    }

    Metrics evaluate_instances(
        const std::vector<std::pair<std::string, std::string>>& gold_pairs) const {
        GoldStandard gold;
        gold.pairs = gold_pairs;
        return evaluate(result.assignment, *o1, *o2, gold);
    }
};

Config config_from_kwargs(double theta, std::size_t pair_limit, unsigned max_iterations,
                          bool negative_evidence, const std::string& literal_sim,
                          double convergence_fraction, unsigned workers, double dampening) {
    Config cfg;
    cfg.theta = theta;
    cfg.pair_limit = pair_limit;
    cfg.max_iterations = max_iterations;
    cfg.negative_evidence = negative_evidence;
    cfg.literal_sim = literal_sim == "normalized" ? LiteralSimChoice::Normalized
                      : literal_sim == "edit"     ? LiteralSimChoice::Edit
                                                  : LiteralSimChoice::Exact;
    cfg.convergence_fraction = convergence_fraction;
    cfg.workers = workers;
    cfg.dampening = dampening;
    cfg.validate();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Probabilistic ontology alignment engine";

    py::class_<Ontology, OntologyPtr>(m, "Ontology")
        .def_property_readonly("num_statements",
                               [](const Ontology& o) { return o.statements().size(); })
        .def_property_readonly("num_instances",
                               [](const Ontology& o) { return o.instances().size(); })
        .def_property_readonly("num_classes", [](const Ontology& o) { return o.classes().size(); })
        .def_property_readonly("num_literals",
                               [](const Ontology& o) { return o.literals().size(); })
        .def_property_readonly("num_relations", [](const Ontology& o) { return o.relation_count(); })
        .def("stats_csv",
             [](const Ontology& o) {
                 std::ostringstream out;
                 o.write_stats_csv(out);
                 return out.str();
             })
        .def("functionalities",
             [](const Ontology& o) {
                 FunctionalityTable funs = FunctionalityTable::compute(o);
                 std::vector<std::tuple<std::string, double, double, std::size_t>> rows;
                 for (std::uint32_t i = 0; i < o.relation_count(); ++i) {
                     RelationId r = RelationId::base(i);
                     if (o.statement_count(r) == 0) continue;
                     rows.emplace_back(o.relation_info(r).lexical, funs.fun(r), funs.inverse_fun(r),
                                       o.statement_count(r));
                 }
                 return rows;
             })
        .def("to_ntriples",
             [](const Ontology& o) {
                 std::ostringstream out;
                 o.write_ntriples(out);
                 return out.str();
             })
        .def("to_tsv", [](const Ontology& o) {
            std::ostringstream out;
            o.write_tsv(out);
            return out.str();
        });

    m.def(
        "load_ontology",
        [](const std::string& path, const std::string& format, const std::string& type_iri,
           const std::string& subclass_iri, const std::string& subproperty_iri,
           bool compute_closure) {
            OntologyOptions opts =
                make_options(type_iri, subclass_iri, subproperty_iri, compute_closure);
            auto in = open_text_input(path);
            return std::make_shared<Ontology>(
                load_ontology(*in, parse_format(format, path), opts));
        },
        py::arg("path"), py::arg("format") = "auto", py::arg("type_iri") = "",
        py::arg("subclass_iri") = "", py::arg("subproperty_iri") = "",
        py::arg("compute_closure") = true);

    m.def(
        "ontology_from_string",
        [](const std::string& text, const std::string& format, const std::string& type_iri,
           const std::string& subclass_iri, const std::string& subproperty_iri,
           bool compute_closure) {
            OntologyOptions opts =
                make_options(type_iri, subclass_iri, subproperty_iri, compute_closure);
            return std::make_shared<Ontology>(
                ontology_from_string(text, parse_format(format, "input." + format), opts));
        },
        py::arg("text"), py::arg("format") = "tsv", py::arg("type_iri") = "",
        py::arg("subclass_iri") = "", py::arg("subproperty_iri") = "",
        py::arg("compute_closure") = true);

    py::class_<Metrics>(m, "Metrics")
        .def_property_readonly("precision",
                               [](const Metrics& m_) { return m_.precision; })
        .def_property_readonly("recall", [](const Metrics& m_) { return m_.recall; })
        .def_property_readonly("f_measure", [](const Metrics& m_) { return m_.f_measure; })
        .def_readonly("true_positives", &Metrics::true_positives)
        .def_readonly("predicted", &Metrics::predicted)
        .def_readonly("gold_size", &Metrics::gold_size)
        .def_readonly("unknown_gold_entities", &Metrics::unknown_gold_entities)
        .def("__repr__", [](const Metrics& m_) {
            std::ostringstream out;
            m_.print(out);
            return out.str();
        });

    py::class_<PyAlignment>(m, "AlignmentResult")
        .def_property_readonly("converged",
                               [](const PyAlignment& a) { return a.result.converged; })
        .def_property_readonly("iterations",
                               [](const PyAlignment& a) { return a.result.iterations; })
        .def("equalities", &PyAlignment::equalities)
        .def("assignment", &PyAlignment::assignment)
        .def("subrelations", &PyAlignment::subrelations)
        .def("subclasses", &PyAlignment::subclasses)
        .def("diagnostics", &PyAlignment::diagnostics)
        .def("evaluate_instances", &PyAlignment::evaluate_instances, py::arg("gold_pairs"));

    m.def(
        "align",
        [](OntologyPtr o1, OntologyPtr o2, double theta, std::size_t pair_limit,
           unsigned max_iterations, bool negative_evidence, const std::string& literal_sim,
           double convergence_fraction, unsigned workers, double dampening) {
            Config cfg = config_from_kwargs(theta, pair_limit, max_iterations, negative_evidence,
                                            literal_sim, convergence_fraction, workers, dampening);
            PyAlignment out{o1, o2, align(*o1, *o2, cfg)};
            return out;
        },
        py::arg("o1"), py::arg("o2"), py::arg("theta") = 0.1, py::arg("pair_limit") = 10000,
        py::arg("max_iterations") = 10, py::arg("negative_evidence") = false,
        py::arg("literal_sim") = "exact", py::arg("convergence_fraction") = 0.01,
        py::arg("workers") = 1, py::arg("dampening") = 0.0,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "make_twin",
        [](OntologyPtr source, double drop_rate, double perturb_rate, std::uint64_t seed,
           const std::string& prefix) {
            TwinOptions opts;
            opts.drop_rate = drop_rate;
            opts.perturb_rate = perturb_rate;
            opts.seed = seed;
            opts.rename_prefix = prefix;
            TwinResult twin = make_twin(*source, opts);
            py::dict out;
            out["twin"] = std::make_shared<Ontology>(std::move(twin.twin));
            out["instance_gold"] = twin.instance_gold;
            out["relation_gold"] = twin.relation_gold;
            out["class_gold"] = twin.class_gold;
            out["dropped_statements"] = twin.dropped_statements;
            out["perturbed_literals"] = twin.perturbed_literals;
            return out;
        },
        py::arg("source"), py::arg("drop_rate") = 0.0, py::arg("perturb_rate") = 0.0,
        py::arg("seed") = 1, py::arg("prefix") = "twin:");

    m.def(
        "evaluate_pairs",
        [](const std::vector<std::pair<std::string, std::string>>& predicted,
           const std::vector<std::pair<std::string, std::string>>& gold_pairs) {
            GoldStandard gold;
            gold.pairs = gold_pairs;
            return evaluate_pairs(predicted, gold);
        },
        py::arg("predicted"), py::arg("gold"));

    m.def("exact_equality", &exact_equality, py::arg("a"), py::arg("b"));
    m.def("normalized_equality", &normalized_equality, py::arg("a"), py::arg("b"));
    m.def("edit_similarity", &edit_similarity, py::arg("a"), py::arg("b"),
          py::arg("cutoff") = 0.0);
    m.def("format_perturb", &format_perturb, py::arg("literal"));

    m.attr("__version__") = "0.1.0";
}
