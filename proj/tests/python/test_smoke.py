"""Smoke tests for the python module: build two small ontologies, align
them, and check the tables and metrics that come back."""

import unittest

import ontoalign


BASE = """\
r1\thasName\t"Casa Uno"
r1\thasPhone\t"213-467-0001"
r1\ttype\tRestaurant
r2\thasName\t"Casa Dos"
r2\thasPhone\t"213-467-0002"
r2\ttype\tRestaurant
Restaurant\tsubclassOf\tVenue
"""

TWIN = """\
t1\tname2\t"Casa Uno"
t1\tphone2\t"213-467-0001"
t1\ttype\tPlaceToEat
t2\tname2\t"Casa Dos"
t2\tphone2\t"213-467-0002"
t2\ttype\tPlaceToEat
"""


def load(text):
    return ontoalign.ontology_from_string(
        text, format="tsv", type_iri="type", subclass_iri="subclassOf"
    )


class SmokeTest(unittest.TestCase):
    def test_counts_and_stats(self):
        ont = load(BASE)
        self.assertEqual(ont.num_instances, 2)
        self.assertEqual(ont.num_classes, 2)
        self.assertEqual(ont.num_literals, 4)
        self.assertIn("statements,", ont.stats_csv())
        funs = dict((row[0], row[1:]) for row in ont.functionalities())
        self.assertEqual(funs["hasPhone"][0], 1.0)  # fun
        self.assertEqual(funs["hasPhone"][1], 1.0)  # inverse fun

    def test_align_and_evaluate(self):
        o1, o2 = load(BASE), load(TWIN)
        result = ontoalign.align(o1, o2)
        self.assertTrue(result.converged)

        assignment = result.assignment()
        self.assertEqual(assignment["r1"][0], "t1")
        self.assertEqual(assignment["r2"][0], "t2")
        self.assertEqual(assignment["r1"][1], 1.0)

        gold = [("r1", "t1"), ("r2", "t2")]
        metrics = result.evaluate_instances(gold)
        self.assertEqual(metrics.precision, 1.0)
        self.assertEqual(metrics.recall, 1.0)

        rel_scores = {
            (left, right): score
            for left, direction, right, score in result.subrelations()
            if direction == "->"
        }
        self.assertEqual(rel_scores[("hasName", "name2")], 1.0)
        self.assertEqual(rel_scores[("hasPhone", "phone2")], 1.0)

        class_rows = {
            (left, right): score
            for left, direction, right, score in result.subclasses()
            if direction == "->"
        }
        self.assertEqual(class_rows[("Restaurant", "PlaceToEat")], 1.0)

        self.assertEqual(len(result.diagnostics()), result.iterations)

    def test_twin_generator_roundtrip(self):
        o1 = load(BASE)
        twin = ontoalign.make_twin(o1, drop_rate=0.0, perturb_rate=0.0, seed=3)
        o2 = twin["twin"]
        result = ontoalign.align(o1, o2)
        metrics = result.evaluate_instances(twin["instance_gold"])
        self.assertEqual(metrics.precision, 1.0)
        self.assertEqual(metrics.recall, 1.0)

    def test_literal_helpers(self):
        self.assertEqual(ontoalign.exact_equality("a", "a"), 1.0)
        self.assertEqual(ontoalign.normalized_equality("A-B", "ab"), 1.0)
        self.assertAlmostEqual(ontoalign.edit_similarity("abcd", "abce", 0.1), 0.75)
        perturbed = ontoalign.format_perturb("213-467-1108")
        self.assertNotEqual(perturbed, "213-467-1108")
        self.assertEqual(ontoalign.normalized_equality(perturbed, "213-467-1108"), 1.0)

    def test_evaluate_pairs(self):
        metrics = ontoalign.evaluate_pairs([("a", "x"), ("b", "y")], [("a", "x"), ("c", "z")])
        self.assertEqual(metrics.true_positives, 1)
        self.assertEqual(metrics.precision, 0.5)
        self.assertEqual(metrics.recall, 0.5)

    def test_empty_alignment(self):
        o1 = load(BASE)
        o2 = ontoalign.ontology_from_string("", format="tsv")
        result = ontoalign.align(o1, o2)
        self.assertTrue(result.converged)
        self.assertEqual(result.iterations, 1)
        self.assertEqual(result.assignment(), {})


if __name__ == "__main__":
    unittest.main()
