#include <cmath>
#include <random>

#include "doctest.h"
#include "fcat/trivalent.hpp"

using namespace fcat;

TEST_CASE("elementary diagram values") {
    TrivalentParams p = h3_trivalent_params();
    CHECK(evaluate_closed_diagram(p, diagram_single_loop()) == doctest::Approx(p.d));
    CHECK(evaluate_closed_diagram(p, diagram_theta()) ==
          doctest::Approx(p.b * p.d).epsilon(1e-12));
    CHECK(evaluate_closed_diagram(p, diagram_tetrahedron()) ==
          doctest::Approx(p.t * p.b * p.d).epsilon(1e-12));
}

TEST_CASE("square-in-square evaluates to 2 a b^2 d + 2 b b d t^2") {
    for (auto p : {h3_trivalent_params(), fibonacci_trivalent_params()}) {
        auto [alpha, beta] = square_coeffs(p);
        double want = alpha * 2.0 * p.b * p.b * p.d + beta * 2.0 * p.t * p.t * p.b * p.d;
        CHECK(evaluate_closed_diagram(p, diagram_cube()) ==
              doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("square coefficients") {
    SUBCASE("b=1, t=0 gives (1/d, -1/d)") {
        TrivalentParams p{2.5, 1.0, 0.0};
        auto [alpha, beta] = square_coeffs(p);
        CHECK(alpha == doctest::Approx(1.0 / p.d));
        CHECK(beta == doctest::Approx(-1.0 / p.d));
    }
    SUBCASE("H3 parameters give a finite pair") {
        auto [alpha, beta] = square_coeffs(h3_trivalent_params());
        CHECK(std::isfinite(alpha));
        CHECK(std::isfinite(beta));
    }
    SUBCASE("singular denominator throws") {
        // bd + t + dt = 0 at t = -bd/(1+d)
        TrivalentParams p{2.0, 1.0, -2.0 / 3.0};
        CHECK_THROWS_AS((void)square_coeffs(p), SingularDenominator);
    }
    SUBCASE("Fibonacci coefficients agree with the two-relation reduction") {
        // In Fib the four-point space is two dimensional with relations
        //   w4 - w3 + w1/(d+1) + w2/(d-1) = 0 and w1 - w2/d = w3,
        // so the square must reduce consistently onto span{w1, w2}.
        auto p = fibonacci_trivalent_params();
        auto [alpha, beta] = square_coeffs(p);
        Eigen::Matrix4d G = c4_gram_matrix(p);
        Eigen::Vector4d sq_coeffs(alpha, alpha, beta, beta);
        // relation vectors must annihilate the Gram metric in Fib
        Eigen::Vector4d rel1(1.0 / (p.d + 1.0), 1.0 / (p.d - 1.0), -1.0, 1.0);
        Eigen::Vector4d rel2(1.0, -1.0 / p.d, -1.0, 0.0);
        CHECK((G * rel1).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((G * rel2).cwiseAbs().maxCoeff() < 1e-12);
        // reduce the square onto {w1,w2} two ways: via Gram projection of the
        // alpha/beta expansion and via direct substitution of the relations
        Eigen::Vector4d direct = sq_coeffs;
        // substitute w3 = w1 - w2/d
        direct(0) += direct(2);
        direct(1) += -direct(2) / p.d;
        direct(2) = 0.0;
        // substitute w4 = w3 - w1/(d+1) - w2/(d-1), then w3 again
        double c4 = direct(3);
        direct(0) += c4 * (1.0 - 1.0 / (p.d + 1.0));
        direct(1) += c4 * (-1.0 / p.d - 1.0 / (p.d - 1.0));
        direct(3) = 0.0;
        // check the two reductions give the same inner products with w1, w2
        Eigen::Vector4d red = Eigen::Vector4d::Zero();
        red(0) = direct(0);
        red(1) = direct(1);
        CHECK(std::abs(G.row(0).dot(sq_coeffs) - G.row(0).dot(red)) < 1e-12);
        CHECK(std::abs(G.row(1).dot(sq_coeffs) - G.row(1).dot(red)) < 1e-12);
    }
}

TEST_CASE("Gram matrix of the four-point basis") {
    TrivalentParams p = h3_trivalent_params();
    Eigen::Matrix4d G = c4_gram_matrix(p);
    const double d = p.d, b = p.b, t = p.t;
    Eigen::Matrix4d want;
    want << d * d, d, b * d, 0.0,
            d, d * d, 0.0, b * d,
            b * d, 0.0, b * b * d, t * b * d,
            0.0, b * d, t * b * d, b * b * d;
    CHECK((G - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Theta matrix") {
    SUBCASE("entry (1,1) is 1/|d|") {
        auto p = h3_trivalent_params();
        CHECK(theta_matrix(p)(0, 0) == doctest::Approx(1.0 / std::abs(p.d)));
    }
    SUBCASE("Theta G Theta^T = identity for H3 parameters") {
        auto p = h3_trivalent_params();
        Eigen::Matrix4d th = theta_matrix(p);
        Eigen::Matrix4d G = c4_gram_matrix(p);
        Eigen::Matrix4d I = th * G * th.transpose();
        CHECK((I - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-9);
    }
    SUBCASE("degenerate parameters throw") {
        // choose t so the C_theta radicand goes negative
        TrivalentParams p{3.0, 1.0, 5.0};
        CHECK_THROWS_AS((void)theta_matrix(p), SingularDenominator);
    }
}

TEST_CASE("reduction order independence") {
    std::mt19937_64 rng(2024);
    for (auto base : {h3_trivalent_params(), fibonacci_trivalent_params()}) {
        // random reducible diagrams from inverse moves on the theta graph
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::array<int, 3>> rot = {{0, 1, 2}, {2, 1, 0}};
            int next_edge = 3;
            int moves = int(rng() % 5) + 1;
            for (int mv = 0; mv < moves && rot.size() <= 10; ++mv) {
                if (rng() % 2 == 0) {
                    // blow a vertex up into a triangle
                    std::size_t v = rng() % rot.size();
                    auto old = rot[v];
                    int e0 = next_edge++, e1 = next_edge++, e2 = next_edge++;
                    rot[v] = {old[0], e0, e2};
                    rot.push_back({old[1], e1, e0});
                    rot.push_back({old[2], e2, e1});
                } else {
                    // insert a bigon in the middle of an edge
                    std::size_t v = rng() % rot.size();
                    int slot = int(rng() % 3);
                    int old_edge = rot[v][std::size_t(slot)];
                    std::size_t w = 0;
                    int wslot = -1;
                    for (std::size_t u = 0; u < rot.size() && wslot < 0; ++u)
                        for (int s = 0; s < 3; ++s)
                            if (!(u == v && s == slot) && rot[u][std::size_t(s)] == old_edge) {
                                w = u;
                                wslot = s;
                                break;
                            }
                    if (wslot < 0) continue;  // self-loop side picked; skip
                    int ea = next_edge++, eb = next_edge++, ec = next_edge++, ed = next_edge++;
                    rot[v][std::size_t(slot)] = ea;
                    rot[w][std::size_t(wslot)] = ec;
                    rot.push_back({ea, eb, ed});
                    rot.push_back({ec, ed, eb});
                }
            }
            auto diag = PlanarDiagram::from_rotations(rot);
            double ref = evaluate_closed_diagram(base, diag);
            for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
                double v = evaluate_closed_diagram_shuffled(base, diag, seed);
                CHECK(v == doctest::Approx(ref).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("disjoint union multiplies") {
    auto p = h3_trivalent_params();
    auto d1 = diagram_theta();
    auto d2 = diagram_tetrahedron();
    double v = evaluate_closed_diagram(p, d1.disjoint_union(d2));
    CHECK(v == doctest::Approx(evaluate_closed_diagram(p, d1) *
                               evaluate_closed_diagram(p, d2))
                   .epsilon(1e-12));
}

TEST_CASE("lollipops vanish") {
    auto p = h3_trivalent_params();
    // vertex with a self loop hanging off a theta graph
    auto d = PlanarDiagram::from_rotations({{0, 1, 2}, {2, 1, 3}, {3, 4, 4}});
    CHECK(evaluate_closed_diagram(p, d) == 0.0);
}

TEST_CASE("irreducible diagrams raise") {
    auto p = h3_trivalent_params();
    // Petersen graph: girth 5, so no face of size <= 4 exists under any
    // rotation system; the evaluator must refuse rather than guess
    std::vector<std::array<int, 3>> rot;
    for (int i = 0; i < 5; ++i)
        rot.push_back({(i + 4) % 5, i, 5 + i});
    for (int i = 0; i < 5; ++i)
        rot.push_back({5 + i, 10 + i, 10 + (i + 3) % 5});
    CHECK_THROWS_AS((void)evaluate_closed_diagram(p, PlanarDiagram::from_rotations(rot)),
                    IrreducibleDiagram);
}
