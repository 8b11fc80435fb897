#include <doctest.h>

#include "kstab/analysis3d.hpp"
#include "kstab/dsl.hpp"
#include "kstab/errors.hpp"
#include "kstab/io.hpp"
#include "kstab/registry.hpp"
#include "test_helpers.hpp"

using namespace kstab;

// =========================================================================
// Structured documents: JSON and expression-language loading, canonical
// printing, round trips.
// =========================================================================

TEST_CASE("expression-language documents load by sniffing") {
    InputDocument doc = load_document("pi = x*y * e[1,2];\nf = x + y;\n");
    CHECK(doc.n == 2);
    CHECK(!doc.fibered);
    CHECK(!doc.algebra);
    REQUIRE(doc.multivectors.size() == 2);
    CHECK(doc.multivectors[0].first == "pi");
    REQUIRE(doc.find("pi") != nullptr);
    CHECK(*doc.find("pi") == parse_mvf("x*y * e[1,2]", 2));
    CHECK(doc.find("missing") == nullptr);
}

TEST_CASE("JSON documents load by sniffing the opening brace") {
    std::string text = R"({
      "format": "kstab-1",
      "dimension": 2,
      "multivectors": [
        {"name": "pi", "rank": 2,
         "terms": [{"indices": [1, 2],
                    "poly": [{"coeff": "1", "exps": [1, 1]}]}]}
      ]
    })";
    InputDocument doc = load_document(text);
    CHECK(doc.n == 2);
    REQUIRE(doc.find("pi") != nullptr);
    CHECK(*doc.find("pi") == parse_mvf("x*y * e[1,2]", 2));
}

TEST_CASE("JSON terms canonicalize signs and accumulate") {
    // Out-of-order indices flip the sign; repeated tuples accumulate.
    std::string text = R"({
      "format": "kstab-1", "dimension": 3,
      "multivectors": [
        {"name": "a", "rank": 2, "terms": [
          {"indices": [2, 1], "poly": [{"coeff": "1/2", "exps": [0, 0, 0]}]},
          {"indices": [1, 2], "poly": [{"coeff": "3/2", "exps": [0, 0, 0]}]}
        ]}
      ]
    })";
    CHECK(*load_document(text).find("a") == parse_mvf("e[1,2]", 3));
}

TEST_CASE("printing and reloading a rich document is the identity") {
    RegistryExample ex = registry_example("aff1");
    std::string printed = print_document(ex.doc);
    InputDocument back = load_document(printed);
    CHECK(back.n == ex.doc.n);
    REQUIRE(back.fibered.has_value());
    CHECK(back.fibered->d == 2);
    CHECK(back.fibered->rf == 2);
    REQUIRE(back.find("pi") != nullptr);
    CHECK(*back.find("pi") == *ex.doc.find("pi"));
    REQUIRE(back.algebra.has_value());
    CHECK(back.algebra->dim() == 2);
    CHECK(back.algebra->a(0, 1, 1) == Rational(1)); // [e1,e2] = e2
    REQUIRE(back.representation.has_value());
    CHECK(back.representation->module_dim() == 2);
    // Byte-for-byte stability.
    CHECK(print_document(back) == printed);
    CHECK(printed.back() == '\n');
}

TEST_CASE("expression-language documents survive the JSON round trip") {
    InputDocument doc = load_document("pi = (x^2 - y) * e[1,2] - 1/3 * e[1,2];");
    InputDocument back = load_document(print_document(doc));
    CHECK(back.n == doc.n);
    CHECK(*back.find("pi") == *doc.find("pi"));
    CHECK(print_document(back) == print_document(doc));
}

TEST_CASE("document validation rejects malformed input") {
    auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(load_document(text), InvalidInput);
    };
    bad("{ not json");
    bad(R"({"format": "other", "dimension": 2, "multivectors": []})");
    bad(R"({"format": "kstab-1"})");                       // no dimension
    bad(R"({"format": "kstab-1", "dimension": 0})");
    bad(R"({"dimension": 2})");                            // no format tag
    // Decimal coefficients are rejected at the exactness boundary.
    bad(R"({"format": "kstab-1", "dimension": 2, "multivectors": [
          {"name": "pi", "rank": 2,
           "terms": [{"indices": [1,2], "poly": [{"coeff": "0.5",
                      "exps": [0,0]}]}]}]})");
    // Wrong exponent-vector length.
    bad(R"({"format": "kstab-1", "dimension": 2, "multivectors": [
          {"name": "pi", "rank": 2,
           "terms": [{"indices": [1,2], "poly": [{"coeff": "1",
                      "exps": [0,0,0]}]}]}]})");
    // Index out of range, wrong index count, duplicate names.
    bad(R"({"format": "kstab-1", "dimension": 2, "multivectors": [
          {"name": "pi", "rank": 2,
           "terms": [{"indices": [1,3], "poly": []}]}]})");
    bad(R"({"format": "kstab-1", "dimension": 3, "multivectors": [
          {"name": "pi", "rank": 2,
           "terms": [{"indices": [1], "poly": []}]}]})");
    bad(R"({"format": "kstab-1", "dimension": 2, "multivectors": [
          {"name": "pi", "rank": 0, "terms": []},
          {"name": "pi", "rank": 0, "terms": []}]})");
    // Fibered split must sum to the dimension.
    bad(R"({"format": "kstab-1", "dimension": 3,
           "fibered": {"base": 2, "fiber": 2}, "multivectors": []})");
    // Representation requires an algebra; bracket indices must be i < j.
    bad(R"({"format": "kstab-1", "dimension": 2, "multivectors": [],
           "representation": {"dim": 1, "matrices": [["1"]]}})");
    bad(R"({"format": "kstab-1", "dimension": 2, "multivectors": [],
           "lie_algebra": {"dim": 2,
             "brackets": [{"i": 2, "j": 1, "coeffs": ["0","1"]}]}})");
    bad(R"({"format": "kstab-1", "dimension": 2, "multivectors": [],
           "lie_algebra": {"dim": 2,
             "brackets": [{"i": 1, "j": 2, "coeffs": ["0"]}]}})");
}

TEST_CASE("missing bracket pairs serialize as zero rows") {
    std::string text = R"({"format": "kstab-1", "dimension": 3,
        "multivectors": [],
        "lie_algebra": {"dim": 3,
          "brackets": [{"i": 1, "j": 2, "coeffs": ["0","0","1"]}]}})";
    InputDocument doc = load_document(text);
    REQUIRE(doc.algebra.has_value());
    CHECK(doc.algebra->a(0, 1, 2) == Rational(1)); // Heisenberg-like
    CHECK(doc.algebra->a(1, 0, 2) == Rational(-1));
    CHECK(doc.algebra->a(0, 2, 0) == Rational(0));
    // Canonical print lists every i < j pair and reloads identically.
    std::string printed = print_document(doc);
    CHECK(print_document(load_document(printed)) == printed);
}

// =========================================================================
// The example registry.
// =========================================================================

TEST_CASE("every registry pattern instantiates") {
    const std::vector<std::string> specs = {
        "linear2d",     "quadratic-xy", "quadratic-diagonal:1,2,4",
        "cyclic3d:3",   "aff1-poisson", "aff1",
        "sl2-irrep2",   "scaling-r1",   "monnier:2",
        "monnier-recentered:2",
    };
    CHECK(registry_list().size() == specs.size());
    for (const std::string& s : specs) {
        CAPTURE(s);
        RegistryExample ex = registry_example(s);
        CHECK(ex.name == s);
        CHECK(!ex.description.empty());
        CHECK(ex.doc.n >= 2);
        REQUIRE(ex.doc.find("pi") != nullptr);
        CHECK(ex.doc.find("pi")->dim() == ex.doc.n);
        CHECK(ex.doc.find("pi")->degree() == 2);
        // Every example document serializes and reloads.
        InputDocument back = load_document(print_document(ex.doc));
        CHECK(*back.find("pi") == *ex.doc.find("pi"));
    }
}

TEST_CASE("registry anchors match their closed forms") {
    CHECK(*registry_example("linear2d").doc.find("pi") ==
          parse_mvf("x * e[1,2]", 2));
    CHECK(registry_example("linear2d").k == 1);

    CHECK(*registry_example("quadratic-xy").doc.find("pi") ==
          parse_mvf("x*y * e[1,2]", 2));
    CHECK(registry_example("quadratic-xy").k == 2);

    CHECK(*registry_example("quadratic-diagonal:1,2,4").doc.find("pi") ==
          parse_mvf("x*y * e[1,2] + 2*x*z * e[1,3] + 4*y*z * e[2,3]", 3));
    CHECK(*registry_example("quadratic-diagonal:1,-1/2,0").doc.find("pi") ==
          parse_mvf("x*y * e[1,2] - 1/2*x*z * e[1,3]", 3));

    CHECK(*registry_example("cyclic3d:3").doc.find("pi") == example_pi_k(3).mv);
    CHECK(registry_example("cyclic3d:3").k == 3);
    CHECK(registry_example("cyclic3d:2").doc.find("pi")->is_zero());

    CHECK(*registry_example("aff1-poisson").doc.find("pi") ==
          parse_mvf("y * e[1,2]", 2));
    CHECK(registry_example("aff1-poisson").doc.algebra.has_value());
}

TEST_CASE("action-algebroid registry entries carry their data") {
    RegistryExample aff = registry_example("aff1");
    CHECK(aff.doc.n == 4);
    REQUIRE(aff.doc.fibered.has_value());
    CHECK(aff.doc.fibered->d == 2);
    CHECK(aff.doc.fibered->rf == 2);
    CHECK(aff.doc.representation.has_value());
    CHECK(*aff.doc.find("pi") == action_algebroid(aff1_coadjoint()));
    CHECK(aff.k == 1);

    RegistryExample sl2 = registry_example("sl2-irrep2");
    CHECK(sl2.doc.n == 5);
    CHECK(sl2.doc.fibered->d == 2);
    CHECK(sl2.doc.fibered->rf == 3);

    RegistryExample sc = registry_example("scaling-r1");
    CHECK(sc.doc.n == 2);
    CHECK(sc.doc.fibered->d == 1);
    CHECK(sc.doc.fibered->rf == 1);
}

TEST_CASE("sphere-bivector registry entries") {
    RegistryExample mon = registry_example("monnier:2");
    CHECK(mon.doc.n == 6);
    REQUIRE(mon.doc.fibered.has_value());
    CHECK(mon.doc.fibered->d == 3);
    CHECK(!mon.k.has_value()); // inhomogeneous: no single order
    CHECK(*mon.doc.find("pi") == monnier_algebroid(2));

    RegistryExample rec = registry_example("monnier-recentered:2");
    CHECK(rec.doc.n == 6);
    CHECK(rec.k == 1);
    // Degree-1 part at (1,0,...,0):
    //   2 x1 (e[1,4] + e[2,5] + e[3,6]) - 2 x5 e[4,5] - 2 x6 e[4,6].
    MultiVector expected =
        kt::mvf(6, 2, {{{1, 4}, kt::pvar(6, 1).scaled(Rational(2))},
                       {{2, 5}, kt::pvar(6, 1).scaled(Rational(2))},
                       {{3, 6}, kt::pvar(6, 1).scaled(Rational(2))},
                       {{4, 5}, kt::pvar(6, 5).scaled(Rational(-2))},
                       {{4, 6}, kt::pvar(6, 6).scaled(Rational(-2))}});
    CHECK(*rec.doc.find("pi") == expected);
}

TEST_CASE("registry argument validation") {
    CHECK_THROWS_AS(registry_example("no-such-example"), InvalidInput);
    CHECK_THROWS_AS(registry_example("linear2d:1"), InvalidInput);
    CHECK_THROWS_AS(registry_example("quadratic-diagonal"), InvalidInput);
    CHECK_THROWS_AS(registry_example("quadratic-diagonal:1,2"), InvalidInput);
    CHECK_THROWS_AS(registry_example("quadratic-diagonal:1,2,0.5"), InvalidInput);
    CHECK_THROWS_AS(registry_example("cyclic3d"), InvalidInput);
    CHECK_THROWS_AS(registry_example("cyclic3d:1"), InvalidInput);
    CHECK_THROWS_AS(registry_example("cyclic3d:x"), InvalidInput);
    CHECK_THROWS_AS(registry_example("monnier:0"), InvalidInput);
    CHECK_THROWS_AS(registry_example("monnier:2,3"), InvalidInput);
}
