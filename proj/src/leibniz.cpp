#include "sd/leibniz.hpp"

#include <Eigen/Dense>

#include "sd/exprack.hpp"

namespace sd {

SampledNoetherResult check_noether_bracket_sampled(const LeibnizAlgebra<RealField>& A, int trials,
                                                   double tol, std::uint64_t seed) {
    SampledNoetherResult res;
    res.seed = seed;
    res.trials = trials;

    constexpr double kRankTol = 1e-9;  // relative to the largest singular value

    Rng base(seed);
    for (int it = 0; it < trials; ++it) {
        Rng rng = base.derived(static_cast<std::uint64_t>(it));
        Eigen::VectorXd b(A.dim);
        for (int i = 0; i < A.dim; ++i) b[i] = rng.uniform(-1.0, 1.0);

        Eigen::MatrixXd M = ad_matrix_real(A, b);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        double smax = sv.size() ? sv[0] : 0.0;
        int rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv[i] > kRankTol * std::max(smax, 1e-300)) ++rank;

        // kernel samples a with [a,b] = 0; test whether [b,a] also vanishes
        for (Eigen::Index col = rank; col < A.dim; ++col) {
            Eigen::VectorXd a = svd.matrixV().col(col);
            double resid = bracket_real(A, b, a).norm();
            res.max_residual = std::max(res.max_residual, resid);
            if (resid > tol) {
                res.holds = false;
                std::vector<double> av(a.data(), a.data() + a.size());
                std::vector<double> bv(b.data(), b.data() + b.size());
                res.witness = {av, bv};
                return res;
            }
        }
    }
    res.holds = true;  // no counterexample found; sampling cannot certify
    return res;
}

}  // namespace sd
