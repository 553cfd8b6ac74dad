#include "fcat/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace fcat {

std::string ObjectSum::str(const FusionRing& ring) const {
    std::ostringstream os;
    bool first = true;
    for (int x = 0; x < int(mult.size()); ++x) {
        for (int k = 0; k < mult[std::size_t(x)]; ++k) {
            if (!first) os << "+";
            os << ring.label(x).name;
            first = false;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<ObjectSum> candidate_objects(const FusionRing& ring) {
    const int n = ring.num_labels();
    std::vector<int> bound(std::size_t(n), 0);
    for (int x = 0; x < n; ++x) bound[std::size_t(x)] = int(std::floor(ring.qdim(x) + 1e-9));
    std::vector<ObjectSum> out;
    ObjectSum cur;
    cur.mult.assign(std::size_t(n), 0);
    cur.mult[0] = 1;
    std::function<void(int)> rec = [&](int x) {
        if (x == n) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= bound[std::size_t(x)]; ++k) {
            cur.mult[std::size_t(x)] = k;
            rec(x + 1);
        }
        cur.mult[std::size_t(x)] = 0;
    };
    rec(1);
    return out;
}

Eigen::MatrixXi fusion_matrix_T(const FusionRing& ring, const ObjectSum& obj, TSide side) {
    const int n = ring.num_labels();
    Eigen::MatrixXi T = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = 0;
            for (int x = 0; x < n; ++x) {
                if (!obj.at(x)) continue;
                v += obj.at(x) * (side == TSide::Right ? ring.n(i, x, j) : ring.n(x, i, j));
            }
            T(i, j) = v;
        }
    return T;
}

namespace {

// Backtracking Gram realisation: find rows r_i in Z_{>=0}^m with r_i.r_j = T_ij.
bool gram_rows(const Eigen::MatrixXi& T, int m, std::vector<Eigen::VectorXi>& rows) {
    const int n = int(T.rows());
    rows.assign(std::size_t(n), Eigen::VectorXi::Zero(m));

    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == n) return true;
        // enumerate nonnegative vectors r with |r|^2 = T_ii and r.r_j = T_ij (j<i)
        Eigen::VectorXi r = Eigen::VectorXi::Zero(m);
        std::function<bool(int, int)> fill = [&](int pos, int left) -> bool {
            if (pos == m) {
                if (left != 0) return false;
                for (int j = 0; j < i; ++j)
                    if (rows[std::size_t(j)].dot(r) != T(j, i)) return false;
                rows[std::size_t(i)] = r;
                return place(i + 1);
            }
            int cap = int(std::sqrt(double(left)) + 1e-9);
            for (int v = cap; v >= 0; --v) {
                r(pos) = v;
                // partial dot-product pruning
                bool ok = true;
                for (int j = 0; j < i && ok; ++j) {
                    int partial = 0;
                    for (int k = 0; k <= pos; ++k)
                        partial += rows[std::size_t(j)](k) * r(k);
                    if (partial > T(j, i)) ok = false;
                }
                if (ok && fill(pos + 1, left - v * v)) return true;
            }
            r(pos) = 0;
            return false;
        };
        return fill(0, T(i, i));
    };
    return place(0);
}

}  // namespace

std::optional<Eigen::MatrixXi> factor_V(const Eigen::MatrixXi& T) {
    const int n = int(T.rows());
    if (T != T.transpose()) return std::nullopt;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(T.cast<double>());
    int rank = int(lu.rank());
    int max_cols = 0;
    for (int i = 0; i < n; ++i) max_cols += T(i, i);

    for (int m = std::max(rank, 1); m <= std::max(max_cols, 1); ++m) {
        std::vector<Eigen::VectorXi> rows;
        if (!gram_rows(T, m, rows)) continue;
        Eigen::MatrixXi V(n, m);
        for (int i = 0; i < n; ++i) V.row(i) = rows[std::size_t(i)].transpose();
        // drop all-zero columns, sort the rest in descending lexicographic order
        std::vector<Eigen::VectorXi> cols;
        for (int c = 0; c < m; ++c)
            if (V.col(c).any()) cols.push_back(V.col(c));
        std::sort(cols.begin(), cols.end(), [](const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
            for (int i = 0; i < a.size(); ++i)
                if (a(i) != b(i)) return a(i) > b(i);
            return false;
        });
        Eigen::MatrixXi out(n, int(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) out.col(int(c)) = cols[c];
        if (out * out.transpose() == T) return out;
    }
    return std::nullopt;
}

namespace {

struct MultSystem {
    const FusionCategory* cat;
    ObjectSum obj;
    std::vector<std::array<int, 3>> keys;            // unknown coefficient keys
    std::map<std::uint64_t, int> key_index;          // pack3 -> index into keys
    std::map<std::uint64_t, cplx> fixed;             // unit-constrained coefficients

    cplx value(const Eigen::VectorXd& vars, int x, int y, int z) const {
        auto packed = pack3(x, y, z);
        auto it = key_index.find(packed);
        if (it != key_index.end()) return vars(it->second);
        auto f = fixed.find(packed);
        return f == fixed.end() ? cplx(0.0) : f->second;
    }

    // residuals of sum_a c_xy^a c_az^w (F_w^{xyz})_{ba} - c_xb^w c_yz^b
    void residuals(const Eigen::VectorXd& vars, std::vector<double>& out) const {
        out.clear();
        const int n = cat->num_labels();
        for (int x = 0; x < n; ++x) {
            if (!obj.at(x)) continue;
            for (int y = 0; y < n; ++y) {
                if (!obj.at(y)) continue;
                for (int z = 0; z < n; ++z) {
                    if (!obj.at(z)) continue;
                    for (int w = 0; w < n; ++w) {
                        if (!obj.at(w)) continue;
                        for (int b = 0; b < n; ++b) {
                            if (!obj.at(b)) continue;
                            if (!(cat->n(y, z, b) && cat->n(x, b, w))) continue;
                            cplx lhs = 0.0;
                            for (int a = 0; a < n; ++a) {
                                if (!obj.at(a)) continue;
                                if (!(cat->n(x, y, a) && cat->n(a, z, w))) continue;
                                lhs += value(vars, x, y, a) * value(vars, a, z, w) *
                                       cat->f(w, x, y, z, b, a);
                            }
                            cplx rhs = value(vars, x, b, w) * value(vars, y, z, b);
                            out.push_back(std::abs(lhs - rhs));
                        }
                    }
                }
            }
        }
    }

    double max_residual(const Eigen::VectorXd& vars) const {
        std::vector<double> r;
        residuals(vars, r);
        double mx = 0.0;
        for (double v : r) mx = std::max(mx, v);
        return mx;
    }

    // signed residual vector for Newton (real arithmetic; catalog F real here)
    Eigen::VectorXd signed_residuals(const Eigen::VectorXd& vars,
                                     const std::vector<std::array<int, 3>>& pins,
                                     double free_value) const {
        std::vector<double> parts;
        const int n = cat->num_labels();
        for (int x = 0; x < n; ++x) {
            if (!obj.at(x)) continue;
            for (int y = 0; y < n; ++y) {
                if (!obj.at(y)) continue;
                for (int z = 0; z < n; ++z) {
                    if (!obj.at(z)) continue;
                    for (int w = 0; w < n; ++w) {
                        if (!obj.at(w)) continue;
                        for (int b = 0; b < n; ++b) {
                            if (!obj.at(b)) continue;
                            if (!(cat->n(y, z, b) && cat->n(x, b, w))) continue;
                            cplx lhs = 0.0;
                            for (int a = 0; a < n; ++a) {
                                if (!obj.at(a)) continue;
                                if (!(cat->n(x, y, a) && cat->n(a, z, w))) continue;
                                lhs += value(vars, x, y, a) * value(vars, a, z, w) *
                                       cat->f(w, x, y, z, b, a);
                            }
                            cplx rhs = value(vars, x, b, w) * value(vars, y, z, b);
                            parts.push_back(std::real(lhs - rhs));
                        }
                    }
                }
            }
        }
        for (const auto& pin : pins) {
            auto it = key_index.find(pack3(pin[0], pin[1], pin[2]));
            if (it != key_index.end())
                parts.push_back(vars(it->second) - free_value);
        }
        Eigen::VectorXd out(long(parts.size()));
        for (std::size_t i = 0; i < parts.size(); ++i) out(long(i)) = parts[i];
        return out;
    }
};

Eigen::MatrixXd numeric_jacobian(const MultSystem& sys, const Eigen::VectorXd& vars,
                                 const std::vector<std::array<int, 3>>& pins,
                                 double free_value) {
    const double h = 1e-7;
    Eigen::VectorXd f0 = sys.signed_residuals(vars, pins, free_value);
    Eigen::MatrixXd J(f0.size(), vars.size());
    for (int k = 0; k < vars.size(); ++k) {
        Eigen::VectorXd vp = vars;
        vp(k) += h;
        J.col(k) = (sys.signed_residuals(vp, pins, free_value) - f0) / h;
    }
    return J;
}

bool newton_solve(const MultSystem& sys, Eigen::VectorXd& vars,
                  const std::vector<std::array<int, 3>>& pins, double free_value,
                  double target) {
    for (int it = 0; it < 200; ++it) {
        Eigen::VectorXd f = sys.signed_residuals(vars, pins, free_value);
        if (f.size() == 0) return true;
        double err = f.cwiseAbs().maxCoeff();
        if (err < target) return true;
        Eigen::MatrixXd J = numeric_jacobian(sys, vars, pins, free_value);
        Eigen::VectorXd step =
            J.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).setThreshold(1e-10).solve(f);
        if (!step.allFinite()) return false;
        double lambda = 1.0;
        for (int back = 0; back < 30; ++back) {
            Eigen::VectorXd trial = vars - lambda * step;
            if (sys.signed_residuals(trial, pins, free_value).cwiseAbs().maxCoeff() < err ||
                back == 29) {
                vars = trial;
                break;
            }
            lambda *= 0.5;
        }
    }
    return sys.signed_residuals(vars, pins, free_value).cwiseAbs().maxCoeff() < target;
}

}  // namespace

std::optional<AlgebraObject> solve_multiplication(const FusionCategory& cat,
                                                  const ObjectSum& obj,
                                                  const SolveOptions& opts) {
    if (obj.at(0) != 1) return std::nullopt;  // no unit morphism
    const int n = cat.num_labels();

    MultSystem sys;
    sys.cat = &cat;
    sys.obj = obj;
    // unit constraints fix c_00^0 = c_x0^x = c_0x^x = 1
    for (int x = 0; x < n; ++x) {
        if (!obj.at(x)) continue;
        sys.fixed[pack3(0, x, x)] = 1.0;
        sys.fixed[pack3(x, 0, x)] = 1.0;
    }
    for (int x = 0; x < n; ++x) {
        if (!obj.at(x)) continue;
        for (int y = 0; y < n; ++y) {
            if (!obj.at(y)) continue;
            if (x == 0 || y == 0) continue;
            for (int z = 0; z < n; ++z) {
                if (!obj.at(z) || !cat.n(x, y, z)) continue;
                sys.key_index[pack3(x, y, z)] = int(sys.keys.size());
                sys.keys.push_back({x, y, z});
            }
        }
    }

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 0.3);
    const double fv = std::real(opts.free_value);

    auto attempt = [&](const std::vector<std::array<int, 3>>& pins,
                       Eigen::VectorXd& vars) -> bool {
        for (int restart = 0; restart < opts.max_restarts; ++restart) {
            Eigen::VectorXd v0(long(sys.keys.size()));
            for (int i = 0; i < v0.size(); ++i)
                v0(i) = (restart == 0) ? fv : fv + gauss(rng);
            if (newton_solve(sys, v0, pins, fv, opts.target)) {
                vars = v0;
                return true;
            }
        }
        return false;
    };

    std::vector<std::array<int, 3>> pins = opts.pinned;
    Eigen::VectorXd vars;
    if (!attempt(pins, vars)) return std::nullopt;

    if (opts.pinned.empty() && !sys.keys.empty()) {
        // pin gauge directions one at a time until the Jacobian has full rank
        for (int round = 0; round < int(sys.keys.size()); ++round) {
            Eigen::MatrixXd J = numeric_jacobian(sys, vars, pins, fv);
            Eigen::BDCSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinV);
            svd.setThreshold(1e-7);
            long nullity = long(sys.keys.size()) - svd.rank();
            if (nullity <= 0) break;
            Eigen::MatrixXd V = svd.matrixV();
            Eigen::VectorXd dir = V.col(V.cols() - 1).cwiseAbs();
            int best = 0;
            for (int i = 1; i < dir.size(); ++i)
                if (dir(i) > dir(best) + 1e-12) best = i;
            pins.push_back(sys.keys[std::size_t(best)]);
            if (!attempt(pins, vars)) return std::nullopt;
        }
    }

    double res = sys.max_residual(vars);
    if (res > opts.tol) return std::nullopt;

    AlgebraObject out;
    out.object = obj;
    out.residual = res;
    out.free_params = pins;
    for (const auto& [key, val] : sys.fixed) out.coeffs[key] = val;
    for (std::size_t i = 0; i < sys.keys.size(); ++i) {
        auto [x, y, z] = sys.keys[i];
        out.coeffs[pack3(x, y, z)] = vars(long(i));
    }
    return out;
}

PrincipalGraph principal_graph(const FusionRing& ring, const ObjectSum& alg,
                               const ObjectSum& fixed_module) {
    const int n = ring.num_labels();
    Eigen::MatrixXi T = fusion_matrix_T(ring, alg, TSide::Right);
    auto V = factor_V(T);
    if (!V) throw Error("fusion matrix of " + alg.str(ring) + " admits no V V^T factorisation");

    PrincipalGraph g;
    for (int i = 0; i < n; ++i) g.even_vertices.push_back(ring.label(i).name);
    for (int c = 0; c < V->cols(); ++c) {
        ObjectSum m;
        m.mult.assign(std::size_t(n), 0);
        for (int i = 0; i < n; ++i) m.mult[std::size_t(i)] = (*V)(i, c);
        g.odd_vertices.push_back(m);
    }

    g.adjacency = Eigen::MatrixXi::Zero(n, int(V->cols()));
    Eigen::MatrixXd Vd = V->cast<double>();
    for (int k = 0; k < n; ++k) {
        // decomposition of X_k (x) fixed_module
        Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
        for (int y = 0; y < n; ++y) {
            if (!fixed_module.at(y)) continue;
            for (int z = 0; z < n; ++z) w(z) += fixed_module.at(y) * ring.n(k, y, z);
        }
        Eigen::VectorXd sol = Vd.colPivHouseholderQr().solve(w);
        for (int c = 0; c < sol.size(); ++c) {
            int rounded = int(std::lround(sol(c)));
            if (std::abs(sol(c) - rounded) > 1e-6 || rounded < 0)
                throw Error("module decomposition of " + ring.label(k).name +
                            " (x) M is not a nonnegative integer combination");
            g.adjacency(k, c) = rounded;
        }
        // exact check
        Eigen::VectorXd back = Vd * g.adjacency.row(k).transpose().cast<double>();
        if ((back - w).cwiseAbs().maxCoeff() > 1e-9)
            throw Error("inconsistent module decomposition");
    }
    return g;
}

}  // namespace fcat
