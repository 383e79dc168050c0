#include "sd/exprack.hpp"

#include <algorithm>
#include <cmath>

namespace sd {

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& M) {
    if (M.rows() != M.cols()) throw InputError("matrix_exp: matrix is not square");
    if (!M.allFinite()) throw InputError("matrix_exp: non-finite entries");
    const Eigen::Index n = M.rows();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);

    double norm1 = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) norm1 = std::max(norm1, M.col(j).cwiseAbs().sum());

    int squarings = 0;
    if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    const Eigen::MatrixXd A = M / std::ldexp(1.0, squarings);

    // degree-(6,6) diagonal approximant to e^x
    static const double b[7] = {1.0,          1.0 / 2.0,     5.0 / 44.0, 1.0 / 66.0,
                                1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0};
    const Eigen::MatrixXd A2 = A * A;
    const Eigen::MatrixXd A4 = A2 * A2;
    const Eigen::MatrixXd A6 = A2 * A4;
    const Eigen::MatrixXd even = b[0] * I + b[2] * A2 + b[4] * A4 + b[6] * A6;
    const Eigen::MatrixXd odd = A * (b[1] * I + b[3] * A2 + b[5] * A4);
    Eigen::MatrixXd X = (even - odd).partialPivLu().solve(even + odd);
    for (int s = 0; s < squarings; ++s) X = X * X;
    return X;
}

Eigen::MatrixXd ad_matrix_real(const LeibnizAlgebra<RealField>& A, const Eigen::VectorXd& a) {
    if (a.size() != A.dim) throw InputError("ad: coordinate length mismatch");
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(A.dim, A.dim);
    for (int k = 0; k < A.dim; ++k)
        for (int i = 0; i < A.dim; ++i) {
            double s = 0.0;
            for (int j = 0; j < A.dim; ++j) s += a[j] * A.at(i, j, k);
            M(k, i) = s;
        }
    return M;
}

Eigen::VectorXd bracket_real(const LeibnizAlgebra<RealField>& A, const Eigen::VectorXd& x,
                             const Eigen::VectorXd& y) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(A.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            double s = x[i] * y[j];
            if (s == 0.0) continue;
            for (int k = 0; k < A.dim; ++k) out[k] += s * A.at(i, j, k);
        }
    return out;
}

Eigen::VectorXd exp_rack_op(const LeibnizAlgebra<RealField>& A, const Eigen::VectorXd& a,
                            const Eigen::VectorXd& b, double s) {
    if (a.size() != A.dim || b.size() != A.dim) throw InputError("exp_rack_op: dimension mismatch");
    return matrix_exp(s * ad_matrix_real(A, b)) * a;
}

double SampledReport::max_residual() const {
    double m = 0.0;
    for (const auto& ax : axioms) m = std::max(m, ax.max_residual);
    return m;
}

namespace {

Eigen::VectorXd random_vec(Rng& rng, int dim, double lo, double hi) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rng.uniform(lo, hi);
    return v;
}

void track(AxiomResidual& ax, double resid, std::initializer_list<const Eigen::VectorXd*> vecs,
           std::initializer_list<double> params) {
    if (resid < ax.max_residual) return;
    ax.max_residual = resid;
    ax.witness.clear();
    for (const auto* v : vecs)
        for (Eigen::Index i = 0; i < v->size(); ++i) ax.witness.push_back((*v)[i]);
    for (double p : params) ax.witness.push_back(p);
}

}  // namespace

SampledReport verify_exp_rack_sampled(const LeibnizAlgebra<RealField>& A, int samples, double tol,
                                      std::uint64_t seed) {
    SampledReport rep;
    rep.seed = seed;
    rep.samples = samples;
    rep.tol = tol;
    const bool lie = verify_leibniz(A).is_lie;
    rep.axioms = {{"unit", 0.0, {}}, {"group-law", 0.0, {}}, {"distributivity", 0.0, {}}};
    if (lie) rep.axioms.push_back({"quandle", 0.0, {}});

    Rng base(seed);
    for (int it = 0; it < samples; ++it) {
        Rng rng = base.derived(static_cast<std::uint64_t>(it));
        Eigen::VectorXd a = random_vec(rng, A.dim, -1.0, 1.0);
        Eigen::VectorXd b = random_vec(rng, A.dim, -1.0, 1.0);
        Eigen::VectorXd c = random_vec(rng, A.dim, -1.0, 1.0);
        double t = rng.uniform(-2.0, 2.0);
        double s = rng.uniform(-2.0, 2.0);

        double r_unit = (exp_rack_op(A, a, b, 0.0) - a).norm();
        track(rep.axioms[0], r_unit, {&a, &b}, {});

        double r_group = (exp_rack_op(A, exp_rack_op(A, a, b, t), b, s) - exp_rack_op(A, a, b, t + s)).norm();
        track(rep.axioms[1], r_group, {&a, &b}, {t, s});

        Eigen::VectorXd lhs = exp_rack_op(A, exp_rack_op(A, a, b, t), c, s);
        Eigen::VectorXd rhs = exp_rack_op(A, exp_rack_op(A, a, c, s), exp_rack_op(A, b, c, s), t);
        track(rep.axioms[2], (lhs - rhs).norm(), {&a, &b, &c}, {t, s});

        if (lie) {
            double r_q = (exp_rack_op(A, a, a, s) - a).norm();
            track(rep.axioms[3], r_q, {&a}, {s});
        }
    }
    rep.passed = rep.max_residual() <= tol;
    return rep;
}

Eigen::VectorXd recover_bracket_fd(const LeibnizAlgebra<RealField>& A, const Eigen::VectorXd& a,
                                   const Eigen::VectorXd& b, double h) {
    if (!(h > 0)) throw InputError("recover_bracket_fd: step must be positive");
    return (exp_rack_op(A, a, b, h) - exp_rack_op(A, a, b, -h)) / (2.0 * h);
}

SampledReport check_exp_automorphism(const LeibnizAlgebra<RealField>& A, const Eigen::VectorXd& a,
                                     int samples, double tol, std::uint64_t seed) {
    SampledReport rep;
    rep.seed = seed;
    rep.samples = samples;
    rep.tol = tol;
    rep.axioms = {{"automorphism", 0.0, {}}, {"ad-conjugation", 0.0, {}}};

    const Eigen::MatrixXd E = matrix_exp(ad_matrix_real(A, a));
    const Eigen::MatrixXd Einv = matrix_exp(-ad_matrix_real(A, a));

    Rng base(seed);
    for (int it = 0; it < samples; ++it) {
        Rng rng = base.derived(static_cast<std::uint64_t>(it));
        Eigen::VectorXd b = random_vec(rng, A.dim, -1.0, 1.0);
        Eigen::VectorXd c = random_vec(rng, A.dim, -1.0, 1.0);

        double r_hom = (E * bracket_real(A, b, c) - bracket_real(A, E * b, E * c)).norm();
        track(rep.axioms[0], r_hom, {&b, &c}, {});

        // (e^{ad_a} ∘ ad_b ∘ e^{-ad_a})(c) = ad_{e^{ad_a} b}(c)
        Eigen::VectorXd lhs = E * (ad_matrix_real(A, b) * (Einv * c));
        Eigen::VectorXd rhs = ad_matrix_real(A, Eigen::VectorXd(E * b)) * c;
        track(rep.axioms[1], (lhs - rhs).norm(), {&b, &c}, {});
    }
    rep.passed = rep.max_residual() <= tol;
    return rep;
}

MorphismReport transport_morphism_check(const Eigen::MatrixXd& f, const LeibnizAlgebra<RealField>& A,
                                        const LeibnizAlgebra<RealField>& B, int samples, double tol,
                                        std::uint64_t seed) {
    if (f.cols() != A.dim || f.rows() != B.dim) throw InputError("morphism matrix has wrong shape");
    MorphismReport rep;
    rep.seed = seed;
    rep.samples = samples;
    rep.tol = tol;

    rep.is_homomorphism = true;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            Eigen::VectorXd br(A.dim);
            for (int k = 0; k < A.dim; ++k) br[k] = A.at(i, j, k);
            double resid = (f * br - bracket_real(B, f.col(i), f.col(j))).norm();
            rep.hom_residual = std::max(rep.hom_residual, resid);
            if (resid > tol && rep.is_homomorphism) {
                rep.is_homomorphism = false;
                rep.hom_witness = {i, j};
            }
        }
    if (!rep.is_homomorphism) return rep;

    Rng base(seed);
    for (int it = 0; it < samples; ++it) {
        Rng rng = base.derived(static_cast<std::uint64_t>(it));
        Eigen::VectorXd a = random_vec(rng, A.dim, -1.0, 1.0);
        Eigen::VectorXd b = random_vec(rng, A.dim, -1.0, 1.0);
        double s = rng.uniform(-2.0, 2.0);
        double resid = (f * exp_rack_op(A, a, b, s) -
                        exp_rack_op(B, Eigen::VectorXd(f * a), Eigen::VectorXd(f * b), s))
                           .norm();
        rep.transport_residual = std::max(rep.transport_residual, resid);
    }
    rep.transport_ok = rep.transport_residual <= tol;
    return rep;
}

}  // namespace sd
