#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "sd/common.hpp"
#include "sd/leibniz.hpp"

namespace sd {

/// e^M by scaling-and-squaring with the degree-(6,6) diagonal rational
/// approximant, scaling threshold |M|_1 <= 0.5. Deterministic for fixed input;
/// matrix_exp(0) is the exact identity.
Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& M);

/// The rack operation a <|_s b = e^{s ad_b}(a) of the algebra's Leibniz rack.
Eigen::VectorXd exp_rack_op(const LeibnizAlgebra<RealField>& A, const Eigen::VectorXd& a,
                            const Eigen::VectorXd& b, double s);

Eigen::MatrixXd ad_matrix_real(const LeibnizAlgebra<RealField>& A, const Eigen::VectorXd& a);
Eigen::VectorXd bracket_real(const LeibnizAlgebra<RealField>& A, const Eigen::VectorXd& x,
                             const Eigen::VectorXd& y);

struct AxiomResidual {
    std::string name;
    double max_residual = 0.0;
    std::vector<double> witness;  // concatenated worst-case sample (vectors then parameters)
};

struct SampledReport {
    std::uint64_t seed = 0;
    int samples = 0;
    double tol = 0.0;
    std::vector<AxiomResidual> axioms;
    bool passed = false;

    double max_residual() const;
};

/// Checks unit, group-law and distributivity axioms of the Leibniz rack at
/// seeded random points (vectors in [-1,1]^dim, parameters in [-2,2]); for Lie
/// algebras also the quandle axiom a <|_s a = a.
SampledReport verify_exp_rack_sampled(const LeibnizAlgebra<RealField>& A, int samples, double tol,
                                      std::uint64_t seed);

/// Central difference (a <|_h b - a <|_{-h} b) / 2h; approaches [a,b] at O(h^2).
Eigen::VectorXd recover_bracket_fd(const LeibnizAlgebra<RealField>& A, const Eigen::VectorXd& a,
                                   const Eigen::VectorXd& b, double h);

/// e^{ad_a} is a Leibniz algebra automorphism and conjugates ad_b to
/// ad_{e^{ad_a} b}; both identities checked at sampled (b, c).
SampledReport check_exp_automorphism(const LeibnizAlgebra<RealField>& A, const Eigen::VectorXd& a,
                                     int samples, double tol, std::uint64_t seed);

struct MorphismReport {
    bool is_homomorphism = false;
    std::optional<std::pair<int, int>> hom_witness;  // basis pair
    double hom_residual = 0.0;
    bool transport_ok = false;
    double transport_residual = 0.0;
    std::uint64_t seed = 0;
    int samples = 0;
    double tol = 0.0;
};

/// Stage one: f is a Leibniz homomorphism on basis pairs. Stage two:
/// f(a <|_s b) = f(a) <|_s f(b) at sampled points.
MorphismReport transport_morphism_check(const Eigen::MatrixXd& f, const LeibnizAlgebra<RealField>& A,
                                        const LeibnizAlgebra<RealField>& B, int samples, double tol,
                                        std::uint64_t seed);

}  // namespace sd
