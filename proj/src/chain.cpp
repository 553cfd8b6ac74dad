#include "fcat/chain.hpp"

#include <algorithm>
#include <cmath>

namespace fcat {

std::uint64_t ChainBasis::key(const std::vector<std::uint8_t>& s) {
    // labels fit in 4 bits for every catalog category
    std::uint64_t k = 1;  // leading sentinel keeps different lengths distinct
    for (std::uint8_t x : s) k = (k << 4) | x;
    return k;
}

int ChainBasis::find(const std::vector<std::uint8_t>& s) const {
    auto it = index.find(key(s));
    return it == index.end() ? -1 : it->second;
}

Eigen::MatrixXi fusion_graph(const FusionCategory& cat, int a) {
    const int n = cat.num_labels();
    Eigen::MatrixXi adj = Eigen::MatrixXi::Zero(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) adj(x, y) = cat.n(x, a, y);
    return adj;
}

ChainBasis enumerate_basis(const ChainSpec& spec) {
    const FusionCategory& cat = *spec.cat;
    const int n = cat.num_labels();
    const int N = spec.sites;
    if (N < 3) throw Error("chain needs at least 3 sites");
    ChainBasis basis;
    basis.sites = N;
    basis.bc = spec.bc;

    Eigen::MatrixXi adj = fusion_graph(cat, spec.rail);
    std::vector<std::uint8_t> cur;

    if (spec.bc == Boundary::Open) {
        // free labels x_1 .. x_{N-1}
        cur.assign(std::size_t(N - 1), 0);
        const int x0 = spec.left(), xN = spec.right();
        std::function<void(int, int)> rec = [&](int pos, int prev) {
            if (pos == N - 1) {
                if (adj(prev, xN)) {
                    basis.index.emplace(ChainBasis::key(cur), int(basis.states.size()));
                    basis.states.push_back(cur);
                }
                return;
            }
            for (int x = 0; x < n; ++x) {
                if (!adj(prev, x)) continue;
                cur[std::size_t(pos)] = std::uint8_t(x);
                rec(pos + 1, x);
            }
        };
        rec(0, x0);
    } else {
        // free labels x_0 .. x_{N-1}, closed
        cur.assign(std::size_t(N), 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == N) {
                if (adj(cur[std::size_t(N - 1)], cur[0])) {
                    basis.index.emplace(ChainBasis::key(cur), int(basis.states.size()));
                    basis.states.push_back(cur);
                }
                return;
            }
            for (int x = 0; x < n; ++x) {
                if (pos > 0 && !adj(cur[std::size_t(pos - 1)], x)) continue;
                cur[std::size_t(pos)] = std::uint8_t(x);
                rec(pos + 1);
            }
        };
        rec(0);
    }
    return basis;
}

long count_paths(const FusionCategory& cat, int a, int sites, Boundary bc, int left,
                 int right) {
    using MatL = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::MatrixXi adj = fusion_graph(cat, a);
    MatL M = adj.cast<long>();
    MatL P = MatL::Identity(adj.rows(), adj.cols());
    for (int i = 0; i < sites; ++i) P = (P * M).eval();
    if (bc == Boundary::Periodic) return P.trace();
    int l = left < 0 ? a : left, r = right < 0 ? a : right;
    return P(l, r);
}

cplx projector_element(const FusionCategory& cat, int a, int e, int x_left, int x_mid,
                       int x_mid_new, int x_right) {
    return cat.f(x_right, x_left, a, a, e, x_mid) *
           std::conj(cat.f(x_right, x_left, a, a, e, x_mid_new));
}

namespace {

// local term acting on (xl, xm, xr): returns list of (new mid label, amplitude)
void local_action(const ChainSpec& spec, int xl, int xm, int xr,
                  std::vector<std::pair<int, cplx>>& out) {
    out.clear();
    const FusionCategory& cat = *spec.cat;
    for (int xm2 = 0; xm2 < cat.num_labels(); ++xm2) {
        cplx amp = 0.0;
        for (const auto& [e, coeff] : spec.couplings) {
            if (coeff == 0.0) continue;
            amp += coeff * projector_element(cat, spec.rail, e, xl, xm, xm2, xr);
        }
        if (amp != cplx(0.0)) out.emplace_back(xm2, amp);
    }
}

}  // namespace

SparseOperator build_hamiltonian(const ChainSpec& spec, const ChainBasis& basis) {
    const int N = spec.sites;
    SparseOperator H(int(basis.size()), true);
    std::vector<std::pair<int, cplx>> acts;
    std::vector<std::uint8_t> tmp;

    for (int col = 0; col < int(basis.size()); ++col) {
        const auto& s = basis.states[std::size_t(col)];
        tmp = s;
        if (spec.bc == Boundary::Open) {
            // positions i = 1 .. N-1 touch (x_{i-1}, x_i, x_{i+1}); the state stores
            // x_1..x_{N-1} at offsets 0..N-2 and the boundary labels are implicit
            for (int i = 1; i <= N - 1; ++i) {
                int xl = (i == 1) ? spec.left() : s[std::size_t(i - 2)];
                int xm = s[std::size_t(i - 1)];
                int xr = (i == N - 1) ? spec.right() : s[std::size_t(i)];
                local_action(spec, xl, xm, xr, acts);
                for (auto& [xm2, amp] : acts) {
                    tmp[std::size_t(i - 1)] = std::uint8_t(xm2);
                    int row = basis.find(tmp);
                    if (row >= 0) H.add(row, col, amp);
                    tmp[std::size_t(i - 1)] = std::uint8_t(xm);
                }
            }
        } else {
            for (int i = 0; i < N; ++i) {
                int xl = s[std::size_t((i + N - 1) % N)];
                int xm = s[std::size_t(i)];
                int xr = s[std::size_t((i + 1) % N)];
                local_action(spec, xl, xm, xr, acts);
                for (auto& [xm2, amp] : acts) {
                    tmp[std::size_t(i)] = std::uint8_t(xm2);
                    int row = basis.find(tmp);
                    if (row >= 0) H.add(row, col, amp);
                    tmp[std::size_t(i)] = std::uint8_t(xm);
                }
            }
        }
    }
    H.compress();
    return H;
}

double default_penalty(const ChainSpec& spec) {
    double mx = 0.0;
    for (const auto& [e, c] : spec.couplings) mx = std::max(mx, std::abs(c));
    return 10.0 * spec.sites * mx;
}

SparseOperator build_penalty_hamiltonian(const ChainSpec& spec, double C) {
    const FusionCategory& cat = *spec.cat;
    const int n = cat.num_labels();
    const int N = spec.sites;
    const int nfree = (spec.bc == Boundary::Open) ? N - 1 : N;
    double dim_d = std::pow(double(n), nfree);
    if (dim_d > (1 << 24)) throw TooLarge("penalty Hamiltonian space too large");
    const long dim = long(dim_d);

    Eigen::MatrixXi adj = fusion_graph(cat, spec.rail);
    SparseOperator H(int(dim), true);
    std::vector<std::pair<int, cplx>> acts;
    std::vector<long> pw(std::size_t(nfree) + 1, 1);
    for (int i = 1; i <= nfree; ++i) pw[std::size_t(i)] = pw[std::size_t(i - 1)] * n;
    auto digit = [&](long state, int pos) { return int((state / pw[std::size_t(pos)]) % n); };

    for (long col = 0; col < dim; ++col) {
        // penalty on fusion-forbidden neighbour pairs, each bond once
        double pen = 0.0;
        if (spec.bc == Boundary::Open) {
            int prev = spec.left();
            for (int i = 0; i < nfree; ++i) {
                int x = digit(col, i);
                if (!adj(prev, x)) pen += 1.0;
                prev = x;
            }
            if (!adj(prev, spec.right())) pen += 1.0;
        } else {
            for (int i = 0; i < nfree; ++i)
                if (!adj(digit(col, i), digit(col, (i + 1) % nfree))) pen += 1.0;
        }
        if (pen != 0.0) H.add(int(col), int(col), C * pen);

        // chain couplings, extended by zero outside admissible local blocks
        auto apply_site = [&](int offset, int xl, int xm, int xr) {
            local_action(spec, xl, xm, xr, acts);
            for (auto& [xm2, amp] : acts) {
                long row = col + (long(xm2) - xm) * pw[std::size_t(offset)];
                H.add(int(row), int(col), amp);
            }
        };
        if (spec.bc == Boundary::Open) {
            for (int i = 1; i <= N - 1; ++i) {
                int xl = (i == 1) ? spec.left() : digit(col, i - 2);
                int xm = digit(col, i - 1);
                int xr = (i == N - 1) ? spec.right() : digit(col, i);
                apply_site(i - 1, xl, xm, xr);
            }
        } else {
            for (int i = 0; i < N; ++i)
                apply_site(i, digit(col, (i + N - 1) % N), digit(col, i),
                           digit(col, (i + 1) % N));
        }
    }
    H.compress();
    return H;
}

SparseOperator shift_operator(const ChainBasis& basis) {
    if (basis.bc != Boundary::Periodic) throw Error("shift operator needs a periodic basis");
    SparseOperator T(int(basis.size()), false);
    std::vector<std::uint8_t> tmp;
    for (int col = 0; col < int(basis.size()); ++col) {
        const auto& s = basis.states[std::size_t(col)];
        tmp.assign(s.size(), 0);
        for (std::size_t i = 0; i < s.size(); ++i) tmp[(i + 1) % s.size()] = s[i];
        int row = basis.find(tmp);
        if (row < 0) throw Error("translation left the basis; basis is inconsistent");
        T.add(row, col, 1.0);
    }
    T.compress();
    return T;
}

ChainSpec h3_chain(const FusionCategory& h3, double psi, double theta, double phi, int sites,
                   Boundary bc) {
    ChainSpec spec;
    spec.cat = &h3;
    spec.rail = h3.find_label("r");
    spec.sites = sites;
    spec.bc = bc;
    int one = 0, r = h3.find_label("r"), ar = h3.find_label("ar"), asr = h3.find_label("a*r");
    spec.couplings = {
        {one, -std::cos(psi)},
        {r, -std::sin(psi) * std::cos(theta)},
        {ar, -std::sin(psi) * std::sin(theta) * std::cos(phi)},
        {asr, -std::sin(psi) * std::sin(theta) * std::sin(phi)},
    };
    return spec;
}

}  // namespace fcat
