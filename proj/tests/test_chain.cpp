#include <cmath>
#include <random>

#include "doctest.h"
#include "fcat/catalog.hpp"
#include "fcat/chain.hpp"
#include "fcat/entropy.hpp"

using namespace fcat;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

ChainSpec golden_chain(const FusionCategory& fib, int N, Boundary bc) {
    ChainSpec spec;
    spec.cat = &fib;
    spec.rail = 1;
    spec.sites = N;
    spec.bc = bc;
    spec.couplings = {{0, -1.0}};  // -p^(1)
    return spec;
}
}  // namespace

TEST_CASE("fusion graphs") {
    auto fib = make_fibonacci();
    auto g = fusion_graph(fib, 1);
    CHECK(g(0, 1) == 1);
    CHECK(g(1, 0) == 1);
    CHECK(g(1, 1) == 1);
    CHECK(g(0, 0) == 0);

    auto gv = fusion_graph(fib, 0);
    CHECK(gv == Eigen::MatrixXi::Identity(2, 2));

    auto h3 = make_haagerup_h3();
    auto gh = fusion_graph(h3, h3.find_label("r"));
    // six nodes; 1 -- r, r has a self loop, a(r) branches reached from r
    CHECK(gh.rows() == 6);
    CHECK(gh(0, 3) == 1);
    CHECK(gh(3, 0) == 1);
    CHECK(gh(3, 3) == 1);
    CHECK(gh(3, 4) == 1);
    CHECK(gh(3, 5) == 1);
    CHECK(gh(1, 4) == 1);  // a -> ar
    CHECK(gh(4, 1) == 1);  // ar -> a
    CHECK(gh(0, 0) == 0);
}

TEST_CASE("basis enumeration") {
    auto fib = make_fibonacci();
    SUBCASE("golden chain N=4 open has the five local states") {
        auto basis = enumerate_basis(golden_chain(fib, 4, Boundary::Open));
        REQUIRE(basis.size() == 5);
        // lexicographic in (x_1,x_2,x_3) with 1 < tau
        CHECK(basis.states[0] == std::vector<std::uint8_t>{0, 1, 0});
        CHECK(basis.states[4] == std::vector<std::uint8_t>{1, 1, 1});
    }
    SUBCASE("counts follow the transfer matrix for all catalog categories") {
        for (const char* nm : {"vec_z2", "vec_z3", "fibonacci", "ising"}) {
            auto cat = catalog(nm);
            for (int rail = 0; rail < cat.num_labels(); ++rail)
                for (int N : {3, 5, 8}) {
                    ChainSpec spec;
                    spec.cat = &cat;
                    spec.rail = rail;
                    spec.sites = N;
                    spec.bc = Boundary::Periodic;
                    auto basis = enumerate_basis(spec);
                    CHECK(long(basis.size()) ==
                          count_paths(cat, rail, N, Boundary::Periodic));
                    spec.bc = Boundary::Open;
                    auto basis2 = enumerate_basis(spec);
                    CHECK(long(basis2.size()) == count_paths(cat, rail, N, Boundary::Open));
                }
        }
        auto h3 = make_haagerup_h3();
        for (int N : {4, 6, 8}) {
            ChainSpec spec;
            spec.cat = &h3;
            spec.rail = h3.find_label("r");
            spec.sites = N;
            spec.bc = Boundary::Periodic;
            CHECK(long(enumerate_basis(spec).size()) ==
                  count_paths(h3, spec.rail, N, Boundary::Periodic));
        }
    }
    SUBCASE("golden chain counts give the Fibonacci recurrence") {
        std::vector<long> counts;
        for (int N = 3; N <= 12; ++N)
            counts.push_back(count_paths(fib, 1, N, Boundary::Open));
        for (std::size_t i = 2; i < counts.size(); ++i)
            CHECK(counts[i] == counts[i - 1] + counts[i - 2]);
    }
    SUBCASE("vec(Z/2) chain with rail 1 has two closed states") {
        auto z2 = make_vec_zp(2);
        for (int N : {4, 6, 10}) {
            ChainSpec spec;
            spec.cat = &z2;
            spec.rail = 1;
            spec.sites = N;
            spec.bc = Boundary::Periodic;
            CHECK(enumerate_basis(spec).size() == 2);
        }
    }
}

TEST_CASE("golden chain local Hamiltonian matches the printed 5x5 matrix") {
    auto fib = make_fibonacci();
    // paper basis order: |1t1>, |1tt>, |tt1>, |t1t>, |ttt> for (x_{i-1}, x_i, x_{i+1})
    const int states[5][3] = {{0, 1, 0}, {0, 1, 1}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}};
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(5, 5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            if (states[r][0] != states[c][0] || states[r][2] != states[c][2]) continue;
            H(r, c) = -std::real(
                projector_element(fib, 1, 0, states[c][0], states[c][1], states[r][1],
                                  states[c][2]));
        }
    Eigen::MatrixXd want = Eigen::MatrixXd::Zero(5, 5);
    want(0, 0) = 1.0;
    want(3, 3) = std::pow(kPhi, -2.0);
    want(3, 4) = want(4, 3) = std::pow(kPhi, -1.5);
    want(4, 4) = 1.0 / kPhi;
    want = -want;
    CHECK((H - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("projector channel algebra") {
    std::mt19937_64 rng(5);
    for (const char* nm : {"fibonacci", "ising", "haagerup_h3"}) {
        auto cat = catalog(nm);
        const int n = cat.num_labels();
        for (int rail = 1; rail < n; ++rail) {
            auto channels = cat.rules().channels(rail, rail);
            for (int xl = 0; xl < n; ++xl)
                for (int xr = 0; xr < n; ++xr) {
                    // admissible middle labels for the (xl, rail, rail, xr) block
                    std::vector<int> mids;
                    for (int xm = 0; xm < n; ++xm)
                        if (cat.n(xl, rail, xm) && cat.n(xm, rail, xr)) mids.push_back(xm);
                    if (mids.empty()) continue;
                    const int m = int(mids.size());
                    std::vector<Eigen::MatrixXcd> P;
                    for (int e : channels) {
                        Eigen::MatrixXcd pe(m, m);
                        for (int r = 0; r < m; ++r)
                            for (int c = 0; c < m; ++c)
                                pe(r, c) = projector_element(cat, rail, e, xl, mids[c],
                                                             mids[r], xr);
                        P.push_back(pe);
                    }
                    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(m, m);
                    for (std::size_t i = 0; i < P.size(); ++i) {
                        CHECK((P[i] - P[i].adjoint()).cwiseAbs().maxCoeff() < 1e-10);
                        CHECK((P[i] * P[i] - P[i]).cwiseAbs().maxCoeff() < 1e-10);
                        for (std::size_t j = 0; j < P.size(); ++j)
                            if (i != j)
                                CHECK((P[i] * P[j]).cwiseAbs().maxCoeff() < 1e-10);
                        sum += P[i];
                    }
                    CHECK((sum - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff() <
                          1e-10);
                }
        }
    }
}

TEST_CASE("constrained vs penalty Hamiltonian spectra") {
    auto fib = make_fibonacci();
    for (int N : {4, 6, 8}) {
        auto spec = golden_chain(fib, N, Boundary::Open);
        auto basis = enumerate_basis(spec);
        auto Hc = build_hamiltonian(spec, basis);
        double C = default_penalty(spec);
        auto Hp = build_penalty_hamiltonian(spec, C);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> esc(Hc.dense());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> esp(Hp.dense());
        // low sector of the penalised spectrum reproduces the constrained one
        for (int i = 0; i < int(basis.size()); ++i)
            CHECK(std::abs(esc.eigenvalues()(i) - esp.eigenvalues()(i)) < 1e-8);
        // the next penalised level lies above the constrained band by ~C
        CHECK(esp.eigenvalues()(int(basis.size())) >
              esc.eigenvalues()(int(basis.size()) - 1) + C / 2.0);
    }
}

TEST_CASE("zero couplings give the zero operator") {
    auto fib = make_fibonacci();
    auto spec = golden_chain(fib, 5, Boundary::Open);
    spec.couplings = {{0, 0.0}, {1, 0.0}};
    auto basis = enumerate_basis(spec);
    auto H = build_hamiltonian(spec, basis);
    CHECK(H.nonzeros() == 0);
}

TEST_CASE("ground state solver") {
    SUBCASE("2x2 diagonal matrix") {
        SparseOperator op(2);
        op.add(0, 0, 3.0);
        op.add(1, 1, -2.0);
        op.compress();
        auto gs = ground_state(op);
        CHECK(gs.energy == doctest::Approx(-2.0).epsilon(1e-12));
        CHECK(std::abs(gs.vector(1)) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("golden chain N=8 against dense diagonalisation") {
        auto fib = make_fibonacci();
        auto spec = golden_chain(fib, 8, Boundary::Periodic);
        auto basis = enumerate_basis(spec);
        auto H = build_hamiltonian(spec, basis);
        auto gs = ground_state(H);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.dense());
        CHECK(std::abs(gs.energy - es.eigenvalues()(0)) < 1e-10);
        CHECK(gs.residual < 1e-9);
    }
    SUBCASE("degenerate ground space reports multiplicity") {
        SparseOperator op(4);
        op.add(0, 0, -1.0);
        op.add(1, 1, -1.0);
        op.add(2, 2, 0.5);
        op.add(3, 3, 2.0);
        op.compress();
        auto gs = ground_state(op);
        CHECK(gs.multiplicity == 2);
    }
}

TEST_CASE("periodic Hamiltonian commutes with translation") {
    auto fib = make_fibonacci();
    for (int N : {6, 8, 10}) {
        auto spec = golden_chain(fib, N, Boundary::Periodic);
        auto basis = enumerate_basis(spec);
        auto H = build_hamiltonian(spec, basis);
        auto T = shift_operator(basis);
        Eigen::MatrixXcd comm = T.dense() * H.dense() - H.dense() * T.dense();
        CHECK(comm.cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("entanglement entropy") {
    auto fib = make_fibonacci();
    SUBCASE("product state has zero entropy") {
        auto spec = golden_chain(fib, 6, Boundary::Periodic);
        auto basis = enumerate_basis(spec);
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(long(basis.size()));
        v(0) = 1.0;
        CHECK(entanglement_entropy(v, basis, 3) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("maximally mixed two-value bond gives ln 2") {
        // two basis states differing on both sides of the cut, equal weight
        ChainBasis basis;
        basis.sites = 4;
        basis.bc = Boundary::Periodic;
        basis.states = {{0, 0, 0, 0}, {1, 1, 1, 1}};
        Eigen::VectorXcd v(2);
        v << std::sqrt(0.5), std::sqrt(0.5);
        CHECK(entanglement_entropy(v, basis, 2) == doctest::Approx(std::log(2.0)));
    }
    SUBCASE("half cut matches the embedding oracle (golden chain N=12 PBC)") {
        auto spec = golden_chain(fib, 12, Boundary::Periodic);
        auto basis = enumerate_basis(spec);
        auto H = build_hamiltonian(spec, basis);
        auto gs = ground_state(H);
        double s1 = entanglement_entropy(gs.vector, basis, 6);
        double s2 = entanglement_entropy_embedded(gs.vector, basis, 6, 2);
        CHECK(s1 == doctest::Approx(s2).epsilon(1e-9));
    }
}

TEST_CASE("central charge fit") {
    SUBCASE("synthetic data recovers the generator") {
        std::vector<std::pair<int, double>> samples;
        for (int N : {8, 10, 12, 14, 16})
            samples.emplace_back(N, 0.7 / 3.0 * std::log(double(N)) + 0.1);
        auto fit = central_charge_fit(samples);
        CHECK(fit.c == doctest::Approx(0.7).epsilon(1e-12));
        CHECK(fit.offset == doctest::Approx(0.1).epsilon(1e-10));
        CHECK(fit.rms < 1e-12);
    }
}

TEST_CASE("h3 chain coupling coordinates") {
    auto h3 = make_haagerup_h3();
    const double pi = std::acos(-1.0);
    SUBCASE("psi = pi/2, theta = 0 collapses to -p^(r)") {
        auto spec = h3_chain(h3, pi / 2, 0.0, 0.0, 6, Boundary::Periodic);
        for (auto& [e, c] : spec.couplings) {
            if (e == h3.find_label("r"))
                CHECK(c == doctest::Approx(-1.0));
            else
                CHECK(std::abs(c) < 1e-15);
        }
    }
    SUBCASE("psi = 0 collapses to -p^(1)") {
        auto spec = h3_chain(h3, 0.0, 0.3, 0.7, 6, Boundary::Periodic);
        for (auto& [e, c] : spec.couplings) {
            if (e == 0)
                CHECK(c == doctest::Approx(-1.0));
            else
                CHECK(std::abs(c) < 1e-15);
        }
    }
    SUBCASE("(psi,theta) slice reproduces the two-parameter couplings") {
        double theta2 = 1.1;  // two-parameter model -(sin t p1 + cos t pr)
        double psi = pi / 2 - 0.2;
        auto spec = h3_chain(h3, psi, 0.0, 0.0, 6, Boundary::Periodic);
        CHECK(spec.couplings[0].second == doctest::Approx(-std::cos(psi)));
        CHECK(spec.couplings[1].second == doctest::Approx(-std::sin(psi)));
        (void)theta2;
    }
}
