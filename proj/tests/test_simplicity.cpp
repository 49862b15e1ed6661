#include <doctest.h>

#include "test_util.hpp"

using namespace derivlab;

namespace {
ShamsuddinForm form_of(const std::string& spec) {
    auto F = as_shamsuddin(parse_derivation(spec));
    REQUIRE(F.has_value());
    return *F;
}
} // namespace

TEST_CASE("is_simple_shamsuddin regression instances") {
    CHECK(is_simple_shamsuddin(form_of("vars: x, y; x' = 1; y' = x*y + 1")).simple);

    auto v1 = is_simple_shamsuddin(form_of("vars: x, y; x' = 1; y' = y + 1"));
    CHECK(!v1.simple);
    CHECK(v1.reason == "Lemma 2.1: deg a < 1");

    auto v2 = is_simple_shamsuddin(
        form_of("vars: x, y1, y2; x' = 1; y1' = x*y1 + 1; y2' = x*y2 + x"));
    CHECK(!v2.simple);
    REQUIRE(v2.failing_k.has_value());
    CHECK((*v2.failing_k)[0] == 0);
    CHECK((*v2.failing_k)[1] == 1);

    CHECK(is_simple_shamsuddin(form_of(
              "vars: x, y1, y2; x' = 1; y1' = x*y1 + 1; y2' = x^2*y2 + 1"))
              .simple);
}

TEST_CASE("failing_k re-verifies via solve_ode") {
    auto F = form_of("vars: x, y1, y2; x' = 1; y1' = x*y1 + 1; y2' = x*y2 + x");
    auto v = is_simple_shamsuddin(F);
    REQUIRE(v.failing_k.has_value());
    const auto& g = F.groups[*v.failing_group];
    Polynomial rhs = Polynomial::zero(F.ctx);
    for (std::size_t j = 0; j < g.bs.size(); ++j)
        rhs = rhs + g.bs[j] * (*v.failing_k)[j];
    CHECK(solve_ode(g.a, rhs).has_value());
}

TEST_CASE("sufficient_simple_cor23") {
    CHECK(sufficient_simple_cor23(form_of(
        "vars: x, y1, y2; x' = 1; y1' = x^2*y1 + 1; y2' = x^2*y2 + x")));
    CHECK(!sufficient_simple_cor23(form_of(
        "vars: x, y1, y2; x' = 1; y1' = x*y1 + 1; y2' = x*y2 + x")));
    CHECK(!sufficient_simple_cor23(form_of(
        "vars: x, y1, y2; x' = 1; y1' = x^2*y1 + 1; y2' = x^2*y2 + 2")));
}

TEST_CASE("Cor 2.3 fast path is sound against the full decision") {
    auto rng = dl_test::make_rng(50);
    auto cx = make_context({"x"}, 0);
    int checked = 0;
    while (checked < 60) {
        // random grouped form over at most 2 groups / 2 slots
        std::uniform_int_distribution<int> gdist(1, 2), sdist(1, 2);
        int ngroups = gdist(rng);
        std::vector<std::string> names = {"x"};
        std::vector<std::string> rules = {"x' = 1"};
        int var = 0;
        bool ok = true;
        std::vector<UniPoly> as;
        for (int i = 0; i < ngroups && ok; ++i) {
            UniPoly a = dl_test::random_unipoly(rng, 3);
            for (const auto& prev : as)
                if (prev == a) ok = false;
            if (!ok) break;
            as.push_back(a);
            int slots = sdist(rng);
            for (int j = 0; j < slots; ++j) {
                UniPoly b = dl_test::random_unipoly(rng, 3);
                std::string v = "y" + std::to_string(++var);
                names.push_back(v);
                Polynomial ap = from_unipoly(a, cx);
                Polynomial bp = from_unipoly(b, cx);
                rules.push_back(v + "' = (" + render(ap) + ")*" + v + " + (" +
                                render(bp) + ")");
            }
        }
        if (!ok) continue;
        std::string spec = "vars: " + names[0];
        for (std::size_t i = 1; i < names.size(); ++i) spec += ", " + names[i];
        for (const auto& r : rules) spec += "; " + r;
        auto F = as_shamsuddin(parse_derivation(spec));
        REQUIRE(F.has_value());
        if (sufficient_simple_cor23(*F)) CHECK(is_simple_shamsuddin(*F).simple);
        ++checked;
    }
}

TEST_CASE("simplicity invariant under group and slot permutation") {
    // same derivation, variables declared in a different order
    auto a = is_simple_shamsuddin(form_of(
        "vars: x, y1, y2; x' = 1; y1' = x*y1 + 1; y2' = x*y2 + x"));
    auto b = is_simple_shamsuddin(form_of(
        "vars: x, y2, y1; x' = 1; y2' = x*y2 + x; y1' = x*y1 + 1"));
    CHECK(a.simple == b.simple);

    auto c = is_simple_shamsuddin(form_of(
        "vars: x, y1, y2; x' = 1; y1' = x*y1 + 1; y2' = x^2*y2 + 1"));
    auto d = is_simple_shamsuddin(form_of(
        "vars: x, y2, y1; x' = 1; y2' = x^2*y2 + 1; y1' = x*y1 + 1"));
    CHECK(c.simple == d.simple);
}
