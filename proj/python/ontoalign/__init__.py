"""Probabilistic alignment of instances, relations, and classes across two ontologies."""

from ontoalign._core import (
    AlignmentResult,
    Metrics,
    Ontology,
    __version__,
    align,
    edit_similarity,
    evaluate_pairs,
    exact_equality,
    format_perturb,
    load_ontology,
    make_twin,
    normalized_equality,
    ontology_from_string,
)

__all__ = [
    "AlignmentResult",
    "Metrics",
    "Ontology",
    "__version__",
    "align",
    "edit_similarity",
    "evaluate_pairs",
    "exact_equality",
    "format_perturb",
    "load_ontology",
    "make_twin",
    "normalized_equality",
    "ontology_from_string",
]
