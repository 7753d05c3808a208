#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motzeta/snc_model.hpp"
#include "motzeta/worked_examples.hpp"
#include "support.hpp"

#include <random>

using namespace motzeta;

namespace {

GrothElement L(std::int64_t k = 1) { return GrothElement::lefschetz(k); }
GrothElement S(const std::string& s) { return GrothElement::symbol(s); }
const GrothElement one(1L);

bool has_error(const SncModel& m, const std::string& needle) {
    for (const auto& e : validation_errors(m))
        if (e.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validation_errors(examples::cvs_models().w_model).empty());
    CHECK(validation_errors(examples::cvs_x_model()).empty());
    for (int d = 1; d <= 6; ++d) CHECK(validation_errors(examples::odp_local_model(d)).empty());

    SncModel m;
    m.components = {{"E0", 1, 0}, {"H", 0, 0}};
    m.strata = {{{"E0"}, S("A"), std::nullopt}};
    CHECK(has_error(m, "nu_i>0 whenever N_i=0 violated"));

    SncModel u;
    u.components = {{"E0", 1, 0}};
    u.strata = {{{"E0", "E9"}, S("A"), std::nullopt}};
    CHECK(has_error(u, "unknown component 'E9'"));
    CHECK_THROWS_AS(validate(u), ValidationError);

    SncModel many;
    many.components = {{"E0", 1, 0}, {"E0", -1, 0}, {"L", 1, 0}};
    many.strata = {{{"E0"}, S("A"), 3}, {{"E0"}, S("B"), std::nullopt}, {{}, S("C"), std::nullopt}};
    auto errors = validation_errors(many);
    CHECK(has_error(many, "duplicate component"));
    CHECK(has_error(many, "negative multiplicity"));
    CHECK(has_error(many, "invalid component name 'L'"));
    CHECK(has_error(many, "repeats an index set"));
    CHECK(has_error(many, "empty index set"));
    CHECK(errors.size() >= 5);
    try {
        validate(many);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.violations() == errors);
    }

    SncModel torsor;
    torsor.components = {{"E0", 1, 0}, {"E1", 2, 1}};
    torsor.strata = {{{"E1"}, S("A"), 3}};
    CHECK(has_error(torsor, "torsor order 3 but N_J = 2"));

    SncModel horizontal_only;
    horizontal_only.components = {{"H", 0, 1}};
    horizontal_only.strata = {{{"H"}, S("A"), std::nullopt}};
    CHECK(has_error(horizontal_only, "no stratum meets a vertical component"));
}

TEST_CASE("compute_zeta") {
    SncModel smooth;
    smooth.components = {{"E", 1, 0}};
    smooth.strata = {{{"E"}, S("S"), std::nullopt}};
    CHECK(compute_zeta(smooth) == ZetaFunction::term(S("S"), 1, {DenFactor(0, 1)}));

    const GrothElement lm1 = L() - one;
    CHECK(zf_equal(compute_zeta(examples::cvs_models().w_model), examples::cvs_zw_reference()));
    CHECK(compute_zeta(examples::cvs_models().w_model) == examples::cvs_zw_reference());

    // the exceptional-support model of a double point
    for (int d = 1; d <= 5; ++d) {
        const GrothElement qpd = S("Qp_" + std::to_string(d)), qd1 = S("Q_" + std::to_string(d - 1));
        ZetaFunction expect = ZetaFunction::term((qpd - qd1) * L(1 - d), 2, {DenFactor(1 - d, 2)}) +
                              ZetaFunction::term(lm1 * qd1 * L(1 - d), 3, {DenFactor(0, 1), DenFactor(1 - d, 2)});
        CHECK(zf_equal(examples::odp_local_zeta(d), expect));
    }

    // horizontal members give constant factors and L^{-nu}
    SncModel h;
    h.components = {{"E", 1, 0}, {"H", 0, 2}};
    h.strata = {{{"E", "H"}, S("A"), std::nullopt}, {{"H"}, S("B"), std::nullopt}};
    CHECK(compute_zeta(h) == ZetaFunction::term(S("A") * lm1 * L(-2), 1, {DenFactor(0, 1), DenFactor(-2, 0)}));
}

TEST_CASE("candidate poles of a model lie among -nu_i/N_i") {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 80; ++i) {
        SncModel m = gen::random_model(rng);
        REQUIRE(validation_errors(m).empty());
        std::set<Fraction> allowed;
        for (const auto& c : m.components)
            if (c.is_vertical()) allowed.insert(Fraction(-c.nu, c.N));
        for (const auto& p : candidate_poles(compute_zeta(m))) CHECK(allowed.contains(p));
    }
}

TEST_CASE("reduced fibre with nu = 0 has only the pole 0") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        SncModel m = gen::random_model(rng);
        for (auto& c : m.components)
            if (c.is_vertical()) c = {c.name, 1, 0};
        for (const auto& p : candidate_poles(compute_zeta(m))) CHECK(p == Fraction(0));
    }
}

TEST_CASE("totally ramified base change of a single component") {
    for (std::int64_t N = 1; N <= 4; ++N)
        for (std::int64_t nu = 0; nu <= 3; ++nu) {
            SncModel m;
            m.components = {{"E", N, nu}};
            m.strata = {{{"E"}, S("A"), static_cast<int>(N)}};
            CHECK(candidate_poles(multisect(compute_zeta(m), N)) == std::set<Fraction>{Fraction(-nu)});
        }
}

TEST_CASE("A'Campo zeta function") {
    SncModel one_comp;
    one_comp.components = {{"E", 1, 0}};
    one_comp.strata = {{{"E"}, S("A"), std::nullopt}};
    one_comp.chi = std::map<std::string, std::int64_t>{{"E", 5}};
    CHECK(acampo_zeta(one_comp) == FactoredRationalU({{1, -5}}));

    SncModel two = examples::cvs_models().w_model;
    two.chi = std::map<std::string, std::int64_t>{{"E0", 4}, {"E1", 2}};
    FactoredRationalU z = acampo_zeta(two);
    CHECK(z == FactoredRationalU({{1, -4}, {2, -2}}));
    CHECK(z.to_string() == "(u - 1)^-4*(u^2 - 1)^-2");
    CHECK(cyclotomic_refactor(z) == std::map<std::int64_t, std::int64_t>{{1, -6}, {2, -2}});

    SncModel missing = examples::cvs_models().w_model;
    try {
        acampo_zeta(missing);
        FAIL("expected missing chi");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("missing chi") != std::string::npos);
        CHECK(std::string(e.what()).find("E0, E1") != std::string::npos);
    }

    // exponents add over disjoint data
    FactoredRationalU a({{1, 2}, {3, -1}}), b({{3, 1}, {2, 4}});
    FactoredRationalU ab = a;
    ab *= b;
    CHECK(ab == FactoredRationalU({{1, 2}, {2, 4}}));
}

TEST_CASE("cyclotomic refactoring") {
    CHECK(cyclotomic_refactor(FactoredRationalU({{2, 1}})) == std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 1}});
    CHECK(cyclotomic_refactor(FactoredRationalU({{6, 1}})) ==
          std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 1}, {3, 1}, {6, 1}});
    // u^n - 1 is the product of Phi_d over d | n
    for (std::int64_t n = 1; n <= 12; ++n) {
        IntPoly prod(1L);
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
        CHECK(prod == IntPoly::monomial(Integer(1), static_cast<std::size_t>(n)) - IntPoly(1L));
    }
    CHECK(cyclotomic_polynomial(6) == IntPoly(std::vector<Integer>{1, -1, 1}));
}
