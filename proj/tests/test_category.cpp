#include <cmath>
#include <random>

#include "doctest.h"
#include "fcat/catalog.hpp"
#include "fcat/fusion_ring.hpp"

using namespace fcat;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("quantum dimensions") {
    auto fib = make_fibonacci();
    CHECK(quantum_dimension(fib, 1) == doctest::Approx(kPhi).epsilon(1e-12));
    CHECK(quantum_dimension(fib, 0) == doctest::Approx(1.0));

    auto h3 = make_haagerup_h3();
    double dr = (3.0 + std::sqrt(13.0)) / 2.0;
    for (int a : {0, 1, 2}) CHECK(h3.qdim(a) == doctest::Approx(1.0).epsilon(1e-12));
    for (int a : {3, 4, 5}) CHECK(h3.qdim(a) == doctest::Approx(dr).epsilon(1e-12));
    CHECK(h3.qdim(3) == doctest::Approx(3.302775637731995).epsilon(1e-11));

    auto ising = make_ising();
    CHECK(ising.qdim(2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("pentagon equation across the catalog") {
    CHECK(check_pentagon(make_vec_zp(2)).max_residual == 0.0);
    CHECK(check_pentagon(make_vec_zp(3)).max_residual == 0.0);
    CHECK(check_pentagon(make_fibonacci()).max_residual < 1e-12);
    CHECK(check_pentagon(make_ising()).max_residual < 1e-12);
    CHECK(check_pentagon(make_yang_lee()).max_residual < 1e-12);
    for (int p1 : {-1, +1})
        for (int p2 : {-1, +1}) {
            auto rep = check_pentagon(make_haagerup_h3(p1, p2));
            INFO("signs ", p1, " ", p2, " worst ", rep.witness);
            CHECK(rep.max_residual < 1e-9);
            CHECK(rep.count_checked > 10000);
        }
}

TEST_CASE("unitarity") {
    CHECK(check_unitarity(make_vec_zp(2)).pass);
    CHECK(check_unitarity(make_fibonacci()).pass);
    CHECK(check_unitarity(make_ising()).pass);
    CHECK(check_unitarity(make_haagerup_h3()).pass);
    auto rep = check_unitarity(make_yang_lee());
    CHECK_FALSE(rep.pass);
    CHECK(rep.witness.find("block") != std::string::npos);
}

TEST_CASE("hexagon identities") {
    CHECK(check_hexagon(make_fibonacci()).pass);
    CHECK(check_hexagon(make_ising()).pass);
    CHECK_THROWS_AS((void)check_hexagon(make_haagerup_h3()), NoBraiding);

    // perturb-and-check: negated R_tau^{tautau} must fail
    auto fib = make_fibonacci();
    RSymbolTable r = fib.rtable();
    r.set(1, 1, 1, -r.get(1, 1, 1));
    FusionCategory broken("fib-broken", fib.labels(), fib.rules(), fib.ftable(), std::move(r));
    auto rep = check_hexagon(broken);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_residual > 1e-3);
}

TEST_CASE("dimension identity") {
    for (const char* nm : {"vec_z2", "vec_z3", "fibonacci", "ising", "haagerup_h3"}) {
        auto cat = catalog(nm);
        auto rep = check_dim_identity(cat);
        INFO(nm, " worst ", rep.witness);
        CHECK(rep.max_residual < 1e-9);
    }
    // phi^2 = 1 + phi and d_r^2 = 1 + 3 d_r are what the sweep checks at (tau,tau), (r,r)
    auto h3 = make_haagerup_h3();
    CHECK(h3.qdim(3) * h3.qdim(3) ==
          doctest::Approx(1.0 + 3.0 * h3.qdim(3)).epsilon(1e-12));
}

TEST_CASE("dual involution and N identities") {
    for (const char* nm : {"vec_z2", "vec_z3", "fibonacci", "ising", "haagerup_h3"}) {
        auto cat = catalog(nm);
        CHECK(check_dual_involution(cat).pass);
        CHECK(check_n_identities(cat).pass);
    }
}

TEST_CASE("Frobenius-Schur indicators") {
    auto fib = make_fibonacci();
    CHECK(frobenius_schur(fib, 0).real() == doctest::Approx(1.0));
    CHECK(frobenius_schur(fib, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
    for (const char* nm : {"vec_z2", "vec_z3", "fibonacci", "ising", "haagerup_h3"}) {
        auto cat = catalog(nm);
        for (int a = 0; a < cat.num_labels(); ++a) {
            cplx k = frobenius_schur(cat, a);
            CHECK(std::abs(std::abs(k) - 1.0) < 1e-9);
            CHECK(std::abs(frobenius_schur(cat, cat.dual(a)) - std::conj(k)) < 1e-9);
        }
    }
}

TEST_CASE("bending operators and F identities") {
    for (const char* nm : {"vec_z2", "fibonacci", "ising", "haagerup_h3"}) {
        auto cat = catalog(nm);
        const int n = cat.num_labels();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (!cat.n(a, b, c)) continue;
                    CHECK(std::abs(std::abs(bend_A(cat, a, b, c)) - 1.0) < 1e-9);
                    CHECK(std::abs(std::abs(bend_B(cat, a, b, c)) - 1.0) < 1e-9);
                    // |(F_a^{abb*})_{0c}|^2 = d_c/(d_a d_b)
                    double lhs = std::norm(cat.f(a, a, b, cat.dual(b), 0, c));
                    double rhs = cat.qdim(c) / (cat.qdim(a) * cat.qdim(b));
                    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
                }
        // vacuum bends
        CHECK(bend_A(cat, 0, 0, 0).real() == doctest::Approx(1.0));
        CHECK(bend_B(cat, 0, 0, 0).real() == doctest::Approx(1.0));
    }
}

TEST_CASE("tetrahedral symmetry: pass and fail cases") {
    CHECK(check_tetrahedral(make_vec_zp(2)).pass);
    CHECK(check_tetrahedral(make_vec_zp(3)).pass);
    CHECK(check_tetrahedral(make_fibonacci()).pass);
    CHECK(check_tetrahedral(make_ising()).pass);

    auto h3 = make_haagerup_h3();
    auto rep = check_tetrahedral(h3);
    CHECK_FALSE(rep.pass);
    // known counterexample: (F_r^{1 a a*r})_{r a} with the middle two identities
    // mapping onto invalid vertex spaces
    int a = h3.find_label("a"), r = h3.find_label("r"), asr = h3.find_label("a*r");
    bool found = false;
    for (const auto& ce : rep.counterexamples) {
        if (ce.i == r && ce.j == 0 && ce.k == a && ce.l == asr && ce.n == r && ce.m == a) {
            found = true;
            CHECK(ce.eq2 == 1);
            CHECK(ce.eq3 == 1);
        }
    }
    CHECK(found);
}

TEST_CASE("gauge transforms") {
    auto fib = make_fibonacci();
    SUBCASE("identity gauge leaves the table unchanged") {
        GaugeTransform g;
        auto fib2 = apply_gauge(fib, g);
        for (const auto& [key, val] : fib.ftable().entries())
            CHECK(std::abs(fib2.ftable().entries().at(key) - val) < 1e-15);
    }
    SUBCASE("pentagon invariance under random nonzero gauges") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> mag(0.5, 2.0), ph(0.0, 6.28318);
        for (int trial = 0; trial < 100; ++trial) {
            GaugeTransform g;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c)
                        if (fib.n(a, b, c)) g.set(a, b, c, std::polar(mag(rng), ph(rng)));
            auto gf = apply_gauge(fib, g);
            CHECK(check_pentagon(gf).max_residual < 1e-10);
        }
    }
    SUBCASE("unit-modulus gauge keeps quantum dimensions") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> ph(0.0, 6.28318);
        auto h3 = make_haagerup_h3();
        GaugeTransform g;
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                for (int c = 0; c < 6; ++c)
                    if (h3.n(a, b, c)) g.set(a, b, c, std::polar(1.0, ph(rng)));
        auto gh = apply_gauge(h3, g);
        for (int a = 0; a < 6; ++a)
            CHECK(gh.qdim(a) == doctest::Approx(h3.qdim(a)).epsilon(1e-12));
        CHECK(check_pentagon(gh).max_residual < 1e-9);
    }
    SUBCASE("zero gauge scalar is rejected") {
        GaugeTransform g;
        g.set(1, 1, 1, 0.0);
        CHECK_THROWS_AS((void)apply_gauge(fib, g), ZeroGauge);
    }
}

TEST_CASE("catalog data spot checks") {
    auto fib = make_fibonacci();
    double s = 1.0 / std::sqrt(kPhi);
    CHECK(fib.f(1, 1, 1, 1, 0, 0).real() == doctest::Approx(1.0 / kPhi));
    CHECK(fib.f(1, 1, 1, 1, 0, 1).real() == doctest::Approx(s));
    CHECK(fib.f(1, 1, 1, 1, 1, 1).real() == doctest::Approx(-1.0 / kPhi));

    auto z2 = make_vec_zp(2);
    CHECK(z2.num_labels() == 2);
    for (const auto& [k, v] : z2.ftable().entries()) CHECK(v == cplx(1.0));

    auto h3 = make_haagerup_h3(+1, +1);
    // fusion table: r x r = 1 + r + ar + a*r, a x r = ar, r x a = a*r
    int a = 1, r = 3, ar = 4, asr = 5;
    CHECK(h3.n(r, r, 0) == 1);
    CHECK(h3.n(r, r, r) == 1);
    CHECK(h3.n(r, r, ar) == 1);
    CHECK(h3.n(r, r, asr) == 1);
    CHECK(h3.n(r, r, a) == 0);
    CHECK(h3.n(a, r, ar) == 1);
    CHECK(h3.n(r, a, asr) == 1);
    CHECK(FusionRing::from_category(h3).multiplicity_free());
}

TEST_CASE("unknown names and invalid signs") {
    CHECK_THROWS_AS((void)catalog("nope"), UnknownName);
    CHECK_THROWS_AS((void)make_haagerup_h3(2, 1), InvalidSign);
}
