#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxplus/errors.hpp"
#include "maxplus/ranks.hpp"
#include "maxplus/semigroup.hpp"
#include "maxplus/ultimate.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace maxplus;
using fixtures::from_text;
using fixtures::vec;

TEST_CASE("visualization tests") {
    Matrix a1 = fixtures::a1();
    EigenBasis basis = eigen_basis(a1);
    for (const Vector& v : basis.generators) CHECK(is_visualization(a1, v));

    CHECK(is_visualization(a1, vec({0, 0, 0})));
    // (0,-3,0) conjugates a1 into a2, whose entries reach 1 > 0 = rho,
    // so it is not a visualization of a1
    CHECK(!is_visualization(a1, vec({0, -3, 0})));
    CHECK(sup(conjugate(a1, vec({0, -3, 0})), scalar_mul(Trop(0), fixtures::a2())) ==
          fixtures::a2());

    CHECK_THROWS_AS(is_visualization(from_text("2 2  . 1  . ."), vec({0, 0})),
                    precondition_error);
    Vector holed(3);
    holed[0] = Trop(0);
    CHECK_THROWS_AS(is_visualization(a1, holed), precondition_error);
}

TEST_CASE("strict visualization recognition") {
    CHECK(is_strict_visualization(fixtures::c2(), vec({0, 0, 0})));
    CHECK(!is_strict_visualization(fixtures::a1(), vec({0, -3, 0}))); // ties off-critical

    oracle::Rng rng(51);
    for (int t = 0; t < 60; ++t) {
        int n = rng.uniform(2, 5);
        Matrix m = rng.matrix(n, n, 0.3, -4, 4);
        if (max_cycle_mean(m).is_bottom()) continue;
        Vector u = rng.finite_vector(n, -3, 3);
        if (is_strict_visualization(m, u)) CHECK(is_visualization(m, u));
    }
}

TEST_CASE("strict visualization construction self-check") {
    for (const Matrix& m : {fixtures::a1(), fixtures::c2(),
                            sup(fixtures::b1(), fixtures::b2())}) {
        Vector u = strict_visualization(m);
        CHECK(is_strict_visualization(m, u));
    }
    CHECK_THROWS_AS(strict_visualization(from_text("2 2  . 1  . .")),
                    precondition_error);

    oracle::Rng rng(52);
    int built = 0;
    for (int t = 0; t < 120 && built < 60; ++t) {
        int n = rng.uniform(2, 5);
        Matrix m = rng.matrix(n, n, 0.4, -4, 4);
        if (max_cycle_mean(m).is_bottom()) continue;
        Vector u = strict_visualization(m);
        CHECK(is_strict_visualization(m, u));
        ++built;
    }
    CHECK(built == 60);
}

TEST_CASE("strict visualizations of a full-rank matrix are the cell eigenvectors") {
    oracle::Rng rng(53);
    for (int t = 0; t < 40; ++t) {
        int n = rng.uniform(2, 4);
        Matrix m = oracle::planted_max_urank(rng, n);
        Trop rho = max_cycle_mean(m);

        // candidate vectors from both sides of the biconditional
        std::vector<Vector> candidates;
        candidates.push_back(strict_visualization(m));
        for (int extra = 0; extra < 6; ++extra)
            candidates.push_back(rng.finite_vector(n, -2, 2));
        for (const Vector& u : candidates) {
            bool strict = is_strict_visualization(m, u);
            auto lambda = is_eigenvector(m, u);
            bool eigen_in_cell =
                lambda.has_value() && *lambda == rho && fundamental_cell_contains(m, u);
            CHECK(strict == eigen_in_cell);
        }
    }
}

TEST_CASE("fundamental cell membership") {
    CHECK(fundamental_cell_contains(fixtures::c1(), vec({0, 0, 0})));
    CHECK(fundamental_cell_contains(fixtures::c2(), vec({0, 0, 0})));
    CHECK(fundamental_cell_contains(
        FundamentalCellQuery{fixtures::c1(), vec({0, 0, 0})}));
    CHECK(!fundamental_cell_contains(fixtures::ex3_9_A(), vec({0, 0, 0}))); // singular

    // the two rotation centers are projectively different, so the cells
    // share no eigenvector
    Vector d1_center = vec({0, 0, 0});
    Vector d2_center(3);
    d2_center[0] = Trop(Rat(1, 5));
    d2_center[1] = Trop(0);
    d2_center[2] = Trop(0);
    CHECK(is_eigenvector(fixtures::d1(), d1_center) == Trop(0));
    CHECK(is_eigenvector(fixtures::d2(), d2_center) == Trop(0));
    CHECK(!is_eigenvector(fixtures::d2(), d1_center).has_value());
    EigenBasis e1 = eigen_basis(fixtures::d1()), e2 = eigen_basis(fixtures::d2());
    REQUIRE(e1.generators.size() == 1);
    REQUIRE(e2.generators.size() == 1);
    CHECK(!(projective_form(e1.generators[0]).normalized ==
            projective_form(e2.generators[0]).normalized));
}

TEST_CASE("generator sets") {
    GeneratorSet g = GeneratorSet::make({fixtures::a1(), fixtures::a2()});
    CHECK(g.dim() == 3);
    CHECK(g.all_rho_finite());
    for (const Matrix& norm : g.normalized()) {
        CHECK(max_cycle_mean(norm) == Trop(0));
        CHECK(sup(g.envelope(), norm) == g.envelope()); // envelope dominates
    }

    CHECK_THROWS_AS(GeneratorSet::make({}), precondition_error);
    CHECK_THROWS_AS(GeneratorSet::make({fixtures::a1(), Matrix::null(2, 2)}),
                    precondition_error);

    GeneratorSet acyclic =
        GeneratorSet::make({fixtures::a1(), from_text("3 3  . 1 .  . . 1  . . .")});
    CHECK(!acyclic.all_rho_finite());
    SemigroupDecision d = decide_max_ultimate_rank(acyclic);
    CHECK(!d.verdict);
    CHECK(!d.c1.ok);
    CHECK(d.c1.offender == 2);
    CHECK(d.c1.offender_urk == 0);
    CHECK(!d.c2.evaluated);
}

TEST_CASE("decision on the four bundled pairs") {
    SemigroupDecision d =
        decide_max_ultimate_rank(GeneratorSet::make({fixtures::a1(), fixtures::a2()}));
    CHECK(d.verdict);
    REQUIRE(d.witness_eigenvector.has_value());
    CHECK(witness_check(GeneratorSet::make({fixtures::a1(), fixtures::a2()}),
                        *d.witness_eigenvector));

    d = decide_max_ultimate_rank(GeneratorSet::make({fixtures::c1(), fixtures::c2()}));
    CHECK(d.verdict);
    CHECK(witness_check(GeneratorSet::make({fixtures::c1(), fixtures::c2()}),
                        *d.witness_eigenvector));

    d = decide_max_ultimate_rank(GeneratorSet::make({fixtures::b1(), fixtures::b2()}));
    CHECK(!d.verdict);
    CHECK(d.c1.ok);
    CHECK(d.c2.ok);
    CHECK(!d.c3.ok);
    CHECK(d.c3.offender_generator == 2);
    CHECK(d.c3.offender_arc == std::pair<int, int>(2, 3));

    d = decide_max_ultimate_rank(GeneratorSet::make({fixtures::d1(), fixtures::d2()}));
    CHECK(!d.verdict);
    CHECK(d.c1.ok);
    CHECK(!d.c2.ok);
    CHECK(d.c2.rho_envelope == Trop(Rat(1, 15)));
}

TEST_CASE("witness check specifics") {
    GeneratorSet cs = GeneratorSet::make({fixtures::c1(), fixtures::c2()});
    CHECK(witness_check(cs, vec({0, 0, 0})));

    GeneratorSet ds = GeneratorSet::make({fixtures::d1(), fixtures::d2()});
    CHECK(!witness_check(ds, vec({0, 0, 0}))); // not an eigenvector of d2
}

TEST_CASE("enumeration oracle on the bundled pairs") {
    SemigroupOracleReport r =
        semigroup_oracle(GeneratorSet::make({fixtures::b1(), fixtures::b2()}));
    CHECK(r.not_maximal);
    CHECK(r.agrees);
    CHECK(*r.witness_product == std::vector<int>{1, 2});
    CHECK(*r.witness_urk == 2);

    r = semigroup_oracle(GeneratorSet::make({fixtures::d1(), fixtures::d2()}));
    CHECK(r.not_maximal);
    CHECK(r.agrees);

    r = semigroup_oracle(GeneratorSet::make({fixtures::a1(), fixtures::a2()}), 4);
    CHECK(!r.not_maximal);
    CHECK(r.agrees);
    CHECK(r.products_checked == 2 + 4 + 8 + 16);

    // the word the text checks by hand
    Matrix ddd = mul(mul(fixtures::d1(), fixtures::d2()), fixtures::d1());
    CHECK(ultimate_rank(ddd).value == 1);
}

TEST_CASE("oracle reports an exceeded enumeration budget") {
    GeneratorSet g =
        GeneratorSet::make({fixtures::a1(), fixtures::a2(), fixtures::c2()});
    SemigroupOracleReport r = semigroup_oracle(g, 14); // 3^14 products is too many
    CHECK(r.budget_exceeded);
}

TEST_CASE("decision matches enumeration on random generator sets") {
    oracle::Rng rng(54);
    for (int trial = 0; trial < 80; ++trial) {
        int n = rng.uniform(2, 4);
        int count = rng.uniform(2, 3);
        std::vector<Matrix> gens;
        for (int k = 0; k < count; ++k) gens.push_back(rng.matrix(n, n, 0.25, -3, 3));
        GeneratorSet g = GeneratorSet::make(gens);
        SemigroupOracleReport r = semigroup_oracle(g);
        CHECK(r.agrees);
    }
}

TEST_CASE("visualizations of the envelope drive the whole semigroup") {
    // with C1 and C2 in force, any vector below the envelope action is a
    // common eigenvector of everything generated
    for (auto pair : {std::pair{fixtures::a1(), fixtures::a2()},
                      std::pair{fixtures::c1(), fixtures::c2()}}) {
        GeneratorSet g = GeneratorSet::make({pair.first, pair.second});
        Vector u = strict_visualization(g.envelope());
        Vector mu = mul(g.envelope(), u);
        for (int i = 0; i < u.size(); ++i) CHECK(!(mu[i] > u[i]));

        for (const Matrix& norm : g.normalized()) CHECK(mul(norm, u) == u);

        std::vector<Matrix> products = g.normalized();
        for (int len = 2; len <= g.dim() + 1; ++len) {
            std::vector<Matrix> next;
            for (const Matrix& p : products)
                for (const Matrix& norm : g.normalized()) next.push_back(mul(p, norm));
            products = std::move(next);
            for (const Matrix& p : products) {
                CHECK(mul(p, u) == u);
                CHECK(max_cycle_mean(p) == Trop(0));
                CHECK(ultimate_rank(p).value == g.dim()); // stays maximal
                CHECK(!permanent(p).singular);
                OrbitReport orbit = power_orbit(p);
                CHECK(orbit.closed);
            }
        }
    }
}

TEST_CASE("products under a true verdict factor their permanents") {
    GeneratorSet g = GeneratorSet::make({fixtures::a1(), fixtures::a2()});
    std::vector<std::pair<Matrix, Trop>> level;
    for (int k = 0; k < g.size(); ++k)
        level.emplace_back(g.generators()[static_cast<std::size_t>(k)],
                           permanent(g.generators()[static_cast<std::size_t>(k)]).permanent);
    for (int len = 2; len <= 4; ++len) {
        std::vector<std::pair<Matrix, Trop>> next;
        for (const auto& [p, per] : level)
            for (int k = 0; k < g.size(); ++k) {
                const Matrix& gen = g.generators()[static_cast<std::size_t>(k)];
                Matrix prod = mul(p, gen);
                Trop expected = per + permanent(gen).permanent;
                PermanentCertificate cert = permanent(prod);
                CHECK(!cert.singular);
                CHECK(cert.permanent == expected);
                next.emplace_back(std::move(prod), expected);
            }
        level = std::move(next);
    }
}

TEST_CASE("third condition reacts to single-entry mutations") {
    // lowering the entry that violates the third condition repairs the set
    Matrix repaired = fixtures::b2();
    repaired(1, 2) = Trop(-2);
    GeneratorSet fixed = GeneratorSet::make({fixtures::b1(), repaired});
    SemigroupDecision d = decide_max_ultimate_rank(fixed);
    CHECK(d.c1.ok);
    CHECK(d.c2.ok);
    CHECK(d.c3.ok);
    CHECK(d.verdict);
    CHECK(semigroup_oracle(fixed).agrees);

    // and raising it back above every rival flips the verdict again
    Matrix broken = repaired;
    broken(1, 2) = Trop(2);
    GeneratorSet bad = GeneratorSet::make({fixtures::b1(), broken});
    SemigroupDecision d2 = decide_max_ultimate_rank(bad);
    CHECK(d2.c1.ok);
    CHECK(d2.c2.ok);
    CHECK(!d2.c3.ok);
    CHECK(!d2.verdict);
    CHECK(semigroup_oracle(bad).agrees);
}
