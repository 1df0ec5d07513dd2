#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "bs5/coeffs.hpp"
#include "bs5/fixture_tables.hpp"

using namespace bs5;

namespace {

std::vector<CoeffTable> tables_up_to(int k_max) {
    std::vector<CoeffTable> tabs;
    tabs.push_back(CoeffTable(0));
    tabs.push_back(seed_table_k1());
    for (int k = 1; k < k_max; ++k) tabs.push_back(advance(tabs.back()));
    return tabs;
}

}  // namespace

TEST_CASE("seed table k=1") {
    const auto t = seed_table_k1();
    CHECK(t.k() == 1);
    CHECK(t.at(1, 0) == rat(1));
    CHECK(t.at(2, 0) == rat(-1));
    CHECK(t.at(3, 0) == rat(1, 3));
    CHECK(t.at(0, 0) == 0);
    CHECK(t.at(1, 1) == 0);
    CHECK(t.entries().size() == 3);
}

TEST_CASE("advance reproduces the fixture tables exactly") {
    CoeffTable t = seed_table_k1();
    for (int k = 2; k <= 5; ++k) {
        t = advance(t);
        const auto ref = fixtures::table_k(k);
        CHECK(t == ref);
    }
}

TEST_CASE("advance spot values") {
    const auto tabs = tables_up_to(5);
    CHECK(tabs[2].at(2, 0) == rat(3));
    CHECK(tabs[2].at(3, 0) == rat(-19, 3));
    CHECK(tabs[2].at(1, 1) == rat(1));
    CHECK(tabs[3].at(1, 1) == rat(1, 5));
    CHECK(tabs[3].at(2, 0) == rat(2, 5));
    CHECK(tabs[5].at(4, 0) == rat(47, 60));
    CHECK(tabs[5].at(1, 3) == rat(3, 5));
}

TEST_CASE("table invariants hold on every produced table") {
    const auto tabs = tables_up_to(10);
    for (int k = 1; k <= 10; ++k) {
        CHECK_NOTHROW(tabs[k].check_invariants());
        for (int j = 0; j <= 3 * k; ++j) CHECK(tabs[k].at(0, j) == 0);
        if (k >= 2) CHECK(tabs[k].at(1, 0) == 0);
    }
}

TEST_CASE("advance rejects invariant-violating input") {
    CoeffTable bad(1);
    bad.set(0, 1, rat(1));
    CHECK_THROWS_AS(advance(bad), std::logic_error);
}

TEST_CASE("stabilization: entries with i+j+1 <= k are frozen") {
    const auto tabs = tables_up_to(11);
    for (int k = 2; k <= 10; ++k) {
        for (const auto& [key, v] : tabs[k].entries())
            if (key.first + key.second + 1 <= k)
                CHECK(tabs[k + 1].at(key.first, key.second) == v);
        for (const auto& [key, v] : tabs[k + 1].entries())
            if (key.first + key.second + 1 <= k)
                CHECK(tabs[k].at(key.first, key.second) == v);
    }
}

TEST_CASE("exact normalization for k = 1..10") {
    const auto tabs = tables_up_to(10);
    for (int k = 1; k <= 10; ++k) {
        CHECK(integral_gk(tabs[k]) == 1);
        CHECK(marginal_poly_k(tabs[k]).integral01() == 1);
    }
}

TEST_CASE("eval_qk") {
    const auto tabs = tables_up_to(2);
    CHECK(eval_qk(tabs[1], 1.0, 0.7) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(eval_qk(tabs[2], 0.0, 0.5) == 0.0);

    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int p = 0; p < 10; ++p) {
        double x = u(rng), y = u(rng);
        if (x > y) std::swap(x, y);
        double direct = 0.0;
        for (const auto& [key, v] : tabs[2].entries())
            direct += to_double(v) * std::pow(x, key.first) * std::pow(y, key.second);
        CHECK(eval_qk(tabs[2], x, y) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("integral_gk of a single-entry table") {
    CoeffTable t(1);
    t.set(1, 0, rat(1));
    CHECK(integral_gk(t) == rat(5, 3));
}

TEST_CASE("marginal polynomial k=1 and nonnegativity") {
    const auto tabs = tables_up_to(5);
    const auto m1 = marginal_poly_k(tabs[1]);
    CHECK(m1.coeff(0) == rat(3, 5));
    CHECK(m1.coeff(1) == rat(2));
    CHECK(m1.coeff(2) == rat(-3));
    CHECK(m1.coeff(3) == rat(2));
    CHECK(m1.coeff(4) == rat(-1, 2));
    CHECK(m1.degree() == 4);

    for (int k = 1; k <= 5; ++k) {
        const auto m = marginal_poly_k(tabs[k]);
        CHECK(m.coeff(0) == rat(3, 5));
        for (int p = 0; p <= 1000; ++p)
            CHECK(m.eval(static_cast<double>(p) / 1000.0) >= 0.0);
    }
}

TEST_CASE("limits") {
    const auto lt = limits(5);
    CHECK(lt.k_used == 5);
    CHECK(lt.at(1, 1) == rat(1, 5));
    CHECK(lt.at(1, 2) == rat(1, 2));
    CHECK(lt.at(1, 3) == rat(3, 5));
    CHECK(lt.at(2, 0) == rat(2, 5));
    CHECK(lt.at(3, 0) == rat(1));

    const auto lt3 = limits(3);
    CHECK(lt3.contains(1, 1));
    CHECK(lt3.at(1, 1) == rat(1, 5));
    CHECK(!lt3.contains(1, 3));
    CHECK_THROWS_AS(lt3.at(1, 3), std::runtime_error);
}

TEST_CASE("boundary conditions from limits") {
    const auto bc = boundary_conditions_from_limits(limits(5));
    CHECK(bc[0] == rat(1, 5));
    CHECK(bc[1] == rat(0));
    CHECK(bc[2] == rat(-1, 5));
    CHECK(bc[3] == rat(1));
    CHECK(bc[4] == rat(-18, 5));

    CHECK_THROWS_AS(boundary_conditions_from_limits(limits(4)), std::runtime_error);
}

TEST_CASE("csv round-trip and k=3 content") {
    const auto tabs = tables_up_to(3);
    std::ostringstream os;
    write_csv(tabs[3], os);
    CHECK(os.str().find("9,0,487/1260") != std::string::npos);
    std::istringstream is(os.str());
    const auto back = read_csv(is);
    CHECK(back == tabs[3]);
}

TEST_CASE("json round-trip") {
    const auto tabs = tables_up_to(2);
    const auto back = table_from_json(to_json(tabs[2]));
    CHECK(back == tabs[2]);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("-19/3") == rat(-19, 3));
    CHECK(parse_rational("7") == rat(7));
    CHECK(to_string(rat(-19, 3)) == "-19/3");
    CHECK(to_string(rat(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}
