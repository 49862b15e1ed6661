#include <doctest.h>

#include "test_util.hpp"

using namespace derivlab;

namespace {
Verdict run(const std::string& spec, ClassifyOptions opts = {}) {
    return classify(parse_derivation(spec), opts);
}
} // namespace

TEST_CASE("R1: simple Shamsuddin is NotMZ with witness y_{1,1}") {
    auto v = run("vars: x, y; x' = 1; y' = x*y + 1");
    CHECK(v.status == MzStatus::NotMZ);
    CHECK(v.rule == "Thm 2.2");
    REQUIRE(v.witness.has_value());
    CHECK(render(*v.witness) == "y");
}

TEST_CASE("R2: Prop 2.4 iff pair") {
    auto mz = run("vars: x, y1, y2; x' = 1; y1' = 2*y1 + x; y2' = x^2");
    CHECK(mz.status == MzStatus::MZ);
    CHECK(mz.rule == "Prop 2.4");
    CHECK(!mz.witness.has_value());

    auto not_mz = run("vars: x, y1, y2; x' = 1; y1' = x*y1 + x; y2' = x^2");
    CHECK(not_mz.status == MzStatus::NotMZ);
    CHECK(not_mz.rule == "Prop 2.4");
    REQUIRE(not_mz.witness.has_value());
    CHECK(render(*not_mz.witness) == "y1");

    // a in K with constant part only
    auto mz2 = run("vars: x, y; x' = 1; y' = y + 1");
    CHECK(mz2.status == MzStatus::MZ);
    CHECK(mz2.rule == "Prop 2.4");
}

TEST_CASE("R3: Cor 2.6 single group with b's") {
    auto v = run("vars: x, y1, y2; x' = 1; y1' = x*y1 + 1; y2' = x^2*y2");
    CHECK(v.status == MzStatus::NotMZ);
    CHECK(v.rule == "Cor 2.6");
    REQUIRE(v.witness.has_value());
    CHECK(render(*v.witness) == "y1");
}

TEST_CASE("R4: Prop 3.1 branches") {
    // (1) deg_{x2} a3 >= 1
    auto v1 = run("vars: x1, x2, x3; x1' = 1; x2' = x1*x2 + 1; x3' = x2*x3 + 1");
    CHECK(v1.status == MzStatus::NotMZ);
    CHECK(v1.rule == "Prop 3.1(1)");
    CHECK(render(*v1.witness) == "x3");

    // (2) a3 free of x2 but the (n1, n2) condition holds on x1
    auto v2 = run(
        "vars: x1, x2, x3; x1' = 1; x2' = x1*x2 + 1; x3' = x1^2*x3 + x2");
    CHECK(v2.status == MzStatus::NotMZ);
    CHECK(v2.rule == "Prop 3.1(2)");
    CHECK(render(*v2.witness) == "x3");
}

TEST_CASE("prop31_condition2") {
    auto c = make_context({"x1", "x2", "x3"}, 0);
    auto q = [&](const std::string& s) { return parse_poly(s, c); };
    CHECK(prop31_condition2(q("x1"), q("x1^2"), 0));
    CHECK(!prop31_condition2(q("x1"), q("-x1"), 0));
    CHECK(!prop31_condition2(q("x1"), q("5"), 0));
    // proportional with positive ratio is fine
    CHECK(prop31_condition2(q("x1"), q("2*x1"), 0));
    // constant offsets do not matter
    CHECK(!prop31_condition2(q("x1 + 3"), q("-x1"), 0));

    // exhaustive (n1, n2) grid confirms the first case
    auto a = q("x1");
    auto b = q("x1^2");
    for (int n1 = 0; n1 <= 20; ++n1)
        for (int n2 = 0; n2 <= 20; ++n2) {
            if (n1 == 0 && n2 == 0) continue;
            CHECK((a * Rational(n1) + b * Rational(n2)).degree_in(0) >= 1);
        }
}

TEST_CASE("R6: Cor 3.6 / Prop 3.5 branches") {
    auto v = run("vars: x1, x2, x3; x1' = 1; x2' = x1*x2 + 1; x3' = x2 + 1");
    CHECK(v.status == MzStatus::NotMZ);
    CHECK(v.rule == "Cor 3.6");
    CHECK(render(*v.witness) == "x2^2");

    // iff: a2 in K flips the verdict
    auto mz = run("vars: x1, x2, x3; x1' = 1; x2' = 2*x2 + 1; x3' = x2 + 1");
    CHECK(mz.status == MzStatus::MZ);
    CHECK(mz.rule == "Cor 3.6");

    // Prop 3.5: leading x2-coefficient of b3 not constant, deg a2 larger
    auto p35 = run(
        "vars: x1, x2, x3; x1' = 1; x2' = x1^2*x2 + 1; x3' = x1*x2 + 1");
    CHECK(p35.status == MzStatus::NotMZ);
    CHECK(p35.rule == "Prop 3.5");
    CHECK(render(*p35.witness) == "x2^2");
}

TEST_CASE("R5: conditional verdicts under assumed simplicity") {
    // a3 = 0, b3 multivariate in a way that defeats R6 and R4
    auto v = run(
        "vars: x1, x2, x3; x1' = 1; x2' = (x1^2+1)*x2 + x1; x3' = x1^3*x2 + 1",
        ClassifyOptions{.assume_simple = true});
    CHECK(v.status == MzStatus::ConditionalNotMZ);
    CHECK(v.rule == "Prop 3.3");
    CHECK(render(*v.witness) == "x2^2");
    CHECK(v.hypotheses_used.size() == 1);

    // same derivation without the hypothesis: Unknown
    auto u = run(
        "vars: x1, x2, x3; x1' = 1; x2' = (x1^2+1)*x2 + x1; x3' = x1^3*x2 + 1");
    CHECK(u.status == MzStatus::Unknown);

    // Thm 3.4 branch: a3 nonzero and free of x2; a2 and a3 negatively
    // proportional, so the Prop 3.1(2) route stays closed
    auto t = run(
        "vars: x1, x2, x3; x1' = 1; x2' = x1*x2 + 1; x3' = -1*x1*x3 + x2",
        ClassifyOptions{.assume_simple = true});
    CHECK(t.status == MzStatus::ConditionalNotMZ);
    CHECK(t.rule == "Thm 3.4");
    CHECK(render(*t.witness) == "x2");
}

TEST_CASE("R7: locally nilpotent annotation") {
    auto v = run("vars: x, y1, y2; x' = 1; y1' = x; y2' = y1");
    CHECK(v.not_simple);
    // the MZ chain still ran: Cor 3.6 with a2 = 0 gives MZ
    CHECK(v.status == MzStatus::MZ);
    CHECK(v.rule == "Cor 3.6");

    // strictly triangular in two variables: only the annotation fires
    auto w = run("vars: x, y; x' = 1; y' = x^2");
    CHECK(w.not_simple);
    CHECK(w.status == MzStatus::MZ); // Prop 2.4 with a = 0
}

TEST_CASE("fallback Unknown cites the conjecture") {
    auto v = run("vars: x, y; x' = 1; y' = y^2");
    CHECK(v.status == MzStatus::Unknown);
    CHECK(v.note.find("Conjecture 1.1") != std::string::npos);
}

TEST_CASE("extensions: locally finite beyond Prop 2.4's shape") {
    std::string spec =
        "vars: x, y1, y2; x' = 1; y1' = y1 + x; y2' = 2*y2 + 1";
    auto off = run(spec);
    CHECK(off.status == MzStatus::Unknown);
    auto on = run(spec, ClassifyOptions{.extensions = true});
    CHECK(on.status == MzStatus::MZ);
    CHECK(on.rule == "beyond-paper: locally finite");
    CHECK(!on.note.empty());
}

TEST_CASE("witness verification certificates attach and agree") {
    Derivation D = parse_derivation("vars: x, y; x' = 1; y' = x*y + 1");
    ClassifyOptions opts;
    opts.check_bounds = DegreeBounds::uniform(D.context(), 5);
    auto v = classify(D, opts);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->witness_check);
    CHECK(!v.certificate->contradiction);
}

TEST_CASE("classify requires D(x) = 1") {
    CHECK_THROWS_AS(run("vars: x, y; x' = x; y' = y"), input_error);
}

TEST_CASE("classification is deterministic") {
    for (int i = 0; i < 3; ++i) {
        auto v = run("vars: x, y1, y2; x' = 1; y1' = x*y1 + 1; y2' = x*y2 + x");
        CHECK(v.status == MzStatus::NotMZ);
        CHECK(v.rule == "Prop 2.4");
    }
}
