#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ontoalign/evaluation.hpp"
#include "ontoalign/synth.hpp"
#include "support/generators.hpp"

using namespace ontoalign;
using namespace ontoalign::testing;

TEST_CASE("metrics from counts") {
    // 100 predicted, 95 correct, 108 gold.
    Metrics m = metrics_from_counts(95, 100, 108);
    CHECK(*m.precision == doctest::Approx(0.95));
    CHECK(*m.recall == doctest::Approx(95.0 / 108.0));
    CHECK(*m.f_measure ==
          doctest::Approx(2.0 * 0.95 * (95.0 / 108.0) / (0.95 + 95.0 / 108.0)));

    Metrics perfect = metrics_from_counts(500, 500, 500);
    CHECK(*perfect.precision == 1.0);
    CHECK(*perfect.recall == 1.0);
    CHECK(*perfect.f_measure == 1.0);

    Metrics nothing = metrics_from_counts(0, 0, 108);
    CHECK_FALSE(nothing.precision.has_value());
    CHECK(*nothing.recall == 0.0);
    CHECK_FALSE(nothing.f_measure.has_value());

    Metrics no_gold = metrics_from_counts(0, 10, 0);
    CHECK_FALSE(no_gold.recall.has_value());
}

TEST_CASE("gold loading dedups identical rows and rejects conflicts") {
    std::istringstream ok("a\tb\na\tb\nc\td\n");
    GoldStandard gold = GoldStandard::load(ok);
    CHECK(gold.pairs.size() == 2);

    std::istringstream conflict("a\tb\na\tz\n");
    CHECK_THROWS_AS(GoldStandard::load(conflict), std::runtime_error);
}

TEST_CASE("evaluate counts assignment hits and unknown gold entities") {
    OntologyBuilder b1(short_name_options());
    b1.add_literal_triple("x", "name", "En");
    b1.add_literal_triple("y", "name", "Zwei");
    Ontology o1 = b1.finalize();
    OntologyBuilder b2(short_name_options());
    b2.add_literal_triple("x2", "name", "En");
    Ontology o2 = b2.finalize();

    MaximalAssignment assignment;
    assignment.assign(*o1.find_resource("x"), *o2.find_resource("x2"), 1.0);

    GoldStandard gold;
    gold.pairs = {{"x", "x2"}, {"y", "missing"}, {"ghost", "x2"}};
    Metrics m = evaluate(assignment, o1, o2, gold);
    CHECK(m.true_positives == 1);
    CHECK(m.predicted == 1);
    CHECK(m.gold_size == 3);
    CHECK(m.unknown_gold_entities == 2);
    CHECK(*m.precision == 1.0);
    CHECK(*m.recall == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("scored tables load generically and keep first-row predictions") {
    std::istringstream table(
        "x\ta\t0.9\n"
        "x\tb\t0.5\n"
        "y\tc\t0.7\n");
    auto rows = read_scored_pairs(table);
    REQUIRE(rows.size() == 3);
    auto predictions = top_predictions(rows);
    REQUIRE(predictions.size() == 2);
    CHECK(predictions[0] == std::pair<std::string, std::string>{"x", "a"});

    // Directed 4-column tables load with the same reader.
    std::istringstream directed("r\t->\tr2\t0.25\n");
    auto drows = read_scored_pairs(directed);
    REQUIRE(drows.size() == 1);
    CHECK(drows[0].first == "r");
    CHECK(drows[0].second == "r2");
    CHECK(drows[0].score == 0.25);
}

TEST_CASE("threshold sweep counts and precision") {
    std::vector<ScoredPair> table{{"a", "x", 0.2}, {"b", "y", 0.5}, {"c", "z", 0.9}};
    auto rows = threshold_sweep(table, std::nullopt, {0.4, 0.8});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].retained == 2);
    CHECK(rows[1].retained == 1);
    CHECK_FALSE(rows[0].precision.has_value());

    // Threshold 0 keeps everything; just above 1 keeps exact ones only.
    auto edges = threshold_sweep(table, std::nullopt, {0.0, 1.0 + 1e-9});
    CHECK(edges[0].retained == table.size());
    CHECK(edges[1].retained == 0);

    GoldStandard labels;
    labels.pairs = {{"b", "y"}, {"c", "wrong"}};
    auto labeled = threshold_sweep(table, labels, {0.4});
    REQUIRE(labeled[0].precision);
    CHECK(*labeled[0].precision == 0.5);

    CHECK_THROWS_AS(threshold_sweep(table, std::nullopt, {0.8, 0.4}), std::invalid_argument);

    // Retained counts never increase along ascending thresholds.
    auto monotone = threshold_sweep(table, std::nullopt, {0.0, 0.3, 0.6, 0.95});
    for (std::size_t i = 1; i < monotone.size(); ++i) {
        CHECK(monotone[i].retained <= monotone[i - 1].retained);
    }
}

TEST_CASE("format perturbation keeps the normalized form and changes the exact form") {
    for (const char* s : {"213-467-1108", "House Of Plates 3", "lowercase words", "12345"}) {
        std::string p = format_perturb(s);
        CHECK(p != s);
        CHECK(normalize_literal(p) == normalize_literal(s));
    }
}

TEST_CASE("twin generator renames, drops, and emits gold") {
    Ontology base = restaurant_base(30, 5, 4);
    TwinOptions opts;
    opts.drop_rate = 0.3;
    opts.seed = 41;
    TwinResult twin = make_twin(base, opts);

    CHECK(twin.dropped_statements > 0);
    CHECK(twin.twin.statements().size() < base.statements().size());
    CHECK(twin.instance_gold.size() == base.instances().size());
    CHECK(!twin.relation_gold.empty());
    CHECK(!twin.class_gold.empty());

    // Renaming separates the identifier spaces; literals stay shared.
    for (const auto& [lex1, lex2] : twin.instance_gold) {
        CHECK(lex2 == "twin:" + lex1);
        CHECK_FALSE(twin.twin.find_resource(lex1).has_value());
    }
    bool some_literal_shared = false;
    for (EntityId l : base.literals()) {
        if (twin.twin.find_literal(base.lexical(l), base.literal_tag(l))) {
            some_literal_shared = true;
        }
    }
    CHECK(some_literal_shared);

    // Same seed, same twin.
    TwinResult again = make_twin(base, opts);
    CHECK(again.twin.statements().size() == twin.twin.statements().size());
    CHECK(again.dropped_statements == twin.dropped_statements);
}

TEST_CASE("metrics print undefined ratios explicitly") {
    Metrics m = metrics_from_counts(0, 0, 5);
    std::ostringstream out;
    m.print(out);
    CHECK(out.str().find("precision: undefined") != std::string::npos);
    CHECK(out.str().find("recall: 0%") != std::string::npos);
}
