#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sd/common.hpp"
#include "sd/exact_matrix.hpp"
#include "sd/scalars.hpp"

namespace sd {

/// Leibniz algebra by structure constants: [e_i, e_j] = sum_k c[i][j][k] e_k.
/// The bracket convention is right Leibniz, [[a,b],c] = [[a,c],b] + [a,[b,c]],
/// with ad_a(b) = [b, a].
template <class F>
struct LeibnizAlgebra {
    using Elem = typename F::Elem;

    F field;
    int dim = 0;
    std::vector<Elem> c;  // dim^3, layout c[(i*dim + j)*dim + k]

    LeibnizAlgebra() = default;
    LeibnizAlgebra(int d, const F& f) : field(f), dim(d), c(static_cast<std::size_t>(d) * d * d, f.zero()) {}

    Elem& at(int i, int j, int k) { return c[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
    const Elem& at(int i, int j, int k) const { return c[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }

    using Vec = std::vector<Elem>;

    /// [x, y] by bilinear extension.
    Vec bracket(const Vec& x, const Vec& y) const {
        Vec out(dim, field.zero());
        for (int i = 0; i < dim; ++i) {
            if (field.is_zero(x[i])) continue;
            for (int j = 0; j < dim; ++j) {
                if (field.is_zero(y[j])) continue;
                Elem s = field.mul(x[i], y[j]);
                for (int k = 0; k < dim; ++k)
                    out[k] = field.add(out[k], field.mul(s, at(i, j, k)));
            }
        }
        return out;
    }

    Vec basis_vector(int i) const {
        Vec v(dim, field.zero());
        v[i] = field.one();
        return v;
    }

    /// [e_i, e_j] as a coordinate vector.
    Vec basis_bracket(int i, int j) const {
        Vec v(dim, field.zero());
        for (int k = 0; k < dim; ++k) v[k] = at(i, j, k);
        return v;
    }

    bool vec_is_zero(const Vec& v) const {
        for (const Elem& x : v)
            if (!field.is_zero(x)) return false;
        return true;
    }
};

struct LeibnizCheck {
    bool is_leibniz = false;
    bool is_lie = false;
    std::optional<std::array<int, 3>> witness;  // basis triple breaking the identity
};

/// Verifies the Leibniz identity on all basis triples (sufficient by
/// trilinearity) and the Lie conditions (alternating + antisymmetric).
template <class F>
LeibnizCheck verify_leibniz(const LeibnizAlgebra<F>& A) {
    const F& f = A.field;
    LeibnizCheck res;
    res.is_leibniz = true;
    for (int i = 0; i < A.dim && res.is_leibniz; ++i)
        for (int j = 0; j < A.dim && res.is_leibniz; ++j)
            for (int k = 0; k < A.dim; ++k) {
                // [[e_i,e_j],e_k] vs [[e_i,e_k],e_j] + [e_i,[e_j,e_k]]
                for (int l = 0; l < A.dim; ++l) {
                    auto lhs = f.zero();
                    auto rhs = f.zero();
                    for (int m = 0; m < A.dim; ++m) {
                        lhs = f.add(lhs, f.mul(A.at(i, j, m), A.at(m, k, l)));
                        rhs = f.add(rhs, f.mul(A.at(i, k, m), A.at(m, j, l)));
                        rhs = f.add(rhs, f.mul(A.at(j, k, m), A.at(i, m, l)));
                    }
                    if (!f.eq(lhs, rhs)) {
                        res.is_leibniz = false;
                        res.witness = {i, j, k};
                        break;
                    }
                }
                if (!res.is_leibniz) break;
            }
    res.is_lie = res.is_leibniz;
    for (int i = 0; i < A.dim && res.is_lie; ++i)
        for (int k = 0; k < A.dim && res.is_lie; ++k)
            if (!f.is_zero(A.at(i, i, k))) res.is_lie = false;
    for (int i = 0; i < A.dim && res.is_lie; ++i)
        for (int j = 0; j < A.dim && res.is_lie; ++j)
            for (int k = 0; k < A.dim; ++k)
                if (!f.eq(A.at(i, j, k), f.neg(A.at(j, i, k)))) {
                    res.is_lie = false;
                    break;
                }
    return res;
}

template <class F>
LeibnizAlgebra<F> leibniz_from_constants(int dim, const F& f, const std::vector<typename F::Elem>& c) {
    if (static_cast<std::size_t>(dim) * dim * dim != c.size())
        throw InputError("structure tensor has wrong shape");
    LeibnizAlgebra<F> A(dim, f);
    A.c = c;
    LeibnizCheck chk = verify_leibniz(A);
    if (!chk.is_leibniz) {
        auto [i, j, k] = *chk.witness;
        throw InputError("Leibniz identity fails at basis triple (" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k) + ")");
    }
    return A;
}

/// The canonical 2-dimensional non-Lie algebra: [e_1,e_1] = e_2, rest zero.
template <class F>
LeibnizAlgebra<F> dim2_nonlie(const F& f) {
    LeibnizAlgebra<F> A(2, f);
    A.at(0, 0, 1) = f.one();
    return A;
}

/// Commutator bracket [x,y] = xy - yx of an associative algebra given by its
/// multiplication tensor (e_i e_j = sum_k m[i][j][k] e_k). Associativity is
/// checked on basis triples first.
template <class F>
LeibnizAlgebra<F> leibniz_from_associative(int dim, const F& f, const std::vector<typename F::Elem>& m) {
    if (static_cast<std::size_t>(dim) * dim * dim != m.size())
        throw InputError("multiplication tensor has wrong shape");
    auto at = [&](int i, int j, int k) -> const typename F::Elem& {
        return m[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    auto lhs = f.zero();
                    auto rhs = f.zero();
                    for (int s = 0; s < dim; ++s) {
                        lhs = f.add(lhs, f.mul(at(i, j, s), at(s, k, l)));
                        rhs = f.add(rhs, f.mul(at(j, k, s), at(i, s, l)));
                    }
                    if (!f.eq(lhs, rhs))
                        throw InputError("multiplication tensor is not associative at (" + std::to_string(i) +
                                         "," + std::to_string(j) + "," + std::to_string(k) + ")");
                }
    LeibnizAlgebra<F> A(dim, f);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) A.at(i, j, k) = f.sub(at(i, j, k), at(j, i, k));
    return A;
}

/// Bracket [(x,v),(y,w)] = ([x,y], x.w - y.v) on g + V for a Lie algebra g
/// acting on V; action[i] is the dV x dV matrix of the basis element x_i.
/// Requires g to be Lie and the action to be a representation.
template <class F>
LeibnizAlgebra<F> leibniz_hemisemidirect(const LeibnizAlgebra<F>& g,
                                         const std::vector<FMatrix<F>>& action, int dV) {
    const F& f = g.field;
    LeibnizCheck gc = verify_leibniz(g);
    if (!gc.is_lie) throw InputError("hemisemidirect product needs a Lie algebra");
    if (static_cast<int>(action.size()) != g.dim) throw InputError("one action matrix per basis element required");
    for (const auto& M : action)
        if (M.rows != dV || M.cols != dV) throw InputError("action matrix has wrong shape");

    // representation: rho([x_i,x_j]) = rho(x_i) rho(x_j) - rho(x_j) rho(x_i)
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
            for (int r = 0; r < dV; ++r)
                for (int s = 0; s < dV; ++s) {
                    auto lhs = f.zero();
                    for (int k = 0; k < g.dim; ++k)
                        lhs = f.add(lhs, f.mul(g.at(i, j, k), action[k].at(r, s)));
                    auto rhs = f.zero();
                    for (int t = 0; t < dV; ++t) {
                        rhs = f.add(rhs, f.mul(action[i].at(r, t), action[j].at(t, s)));
                        rhs = f.sub(rhs, f.mul(action[j].at(r, t), action[i].at(t, s)));
                    }
                    if (!f.eq(lhs, rhs))
                        throw InputError("action is not a representation (basis pair " + std::to_string(i) +
                                         "," + std::to_string(j) + ")");
                }

    const int n = g.dim + dV;
    LeibnizAlgebra<F> A(n, f);
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
            for (int k = 0; k < g.dim; ++k) A.at(i, j, k) = g.at(i, j, k);
    // [x_i, w_s] = (0, x_i . w_s), [w_s, x_i] = (0, -x_i . w_s)
    for (int i = 0; i < g.dim; ++i)
        for (int s = 0; s < dV; ++s)
            for (int r = 0; r < dV; ++r) {
                A.at(i, g.dim + s, g.dim + r) = action[i].at(r, s);
                A.at(g.dim + s, i, g.dim + r) = f.neg(action[i].at(r, s));
            }
    return A;
}

/// Matrix of ad_a: b |-> [b, a].
template <class F>
FMatrix<F> ad_matrix(const LeibnizAlgebra<F>& A, const std::vector<typename F::Elem>& a) {
    if (static_cast<int>(a.size()) != A.dim) throw InputError("ad: coordinate length mismatch");
    const F& f = A.field;
    FMatrix<F> M(A.dim, A.dim, f);
    for (int k = 0; k < A.dim; ++k)
        for (int i = 0; i < A.dim; ++i) {
            auto s = f.zero();
            for (int j = 0; j < A.dim; ++j) s = f.add(s, f.mul(a[j], A.at(i, j, k)));
            M.at(k, i) = s;
        }
    return M;
}

/// Echelon basis of a subspace, kept in reduced form.
template <class F>
struct SubspaceBasis {
    std::vector<std::vector<typename F::Elem>> vectors;
    int ambient_dim = 0;

    int dim() const { return static_cast<int>(vectors.size()); }
};

template <class F>
struct LeibQuotient {
    SubspaceBasis<F> leib;
    LeibnizAlgebra<F> quotient;
    /// Rows of the full change of basis: leib vectors first, then the
    /// complementary unit vectors that carry the quotient coordinates.
    std::vector<std::vector<typename F::Elem>> new_basis;
};

/// Leib(L) = span{[x,x]} from the polarized spanning set
/// {[e_i,e_i]} ∪ {[e_i,e_j]+[e_j,e_i], i<j}, and the quotient Lie algebra on a
/// complementary basis. Exact scalars only; characteristic 2 is excluded
/// because polarization needs 1/2.
template <class F>
LeibQuotient<F> leib_ideal_and_quotient(const LeibnizAlgebra<F>& A) {
    static_assert(is_exact_field_v<F>, "Leib ideal requires exact scalars");
    const F& f = A.field;
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (f.p == 2) throw InputError("Leib ideal over F_2 is unsupported (polarization needs char != 2)");
    }

    std::vector<std::vector<typename F::Elem>> span;
    for (int i = 0; i < A.dim; ++i) span.push_back(A.basis_bracket(i, i));
    for (int i = 0; i < A.dim; ++i)
        for (int j = i + 1; j < A.dim; ++j) {
            auto v = A.basis_bracket(i, j);
            auto w = A.basis_bracket(j, i);
            for (int k = 0; k < A.dim; ++k) v[k] = f.add(v[k], w[k]);
            span.push_back(std::move(v));
        }

    LeibQuotient<F> out;
    out.leib.ambient_dim = A.dim;
    out.leib.vectors = row_space_basis(span, A.dim, f);

    std::vector<bool> is_pivot(A.dim, false);
    for (const auto& row : out.leib.vectors)
        for (int j = 0; j < A.dim; ++j)
            if (!f.is_zero(row[j])) {
                is_pivot[j] = true;
                break;
            }

    std::vector<int> comp;  // complementary unit vectors carry the quotient
    for (int j = 0; j < A.dim; ++j)
        if (!is_pivot[j]) comp.push_back(j);

    out.new_basis = out.leib.vectors;
    for (int j : comp) {
        std::vector<typename F::Elem> unit(A.dim, f.zero());
        unit[j] = f.one();
        out.new_basis.push_back(std::move(unit));
    }

    const int qdim = static_cast<int>(comp.size());
    LeibnizAlgebra<F> Q(qdim, f);
    for (int a = 0; a < qdim; ++a)
        for (int b = 0; b < qdim; ++b) {
            auto w = A.basis_bracket(comp[a], comp[b]);
            w = reduce_mod(std::move(w), out.leib.vectors, f);
            for (int k = 0; k < qdim; ++k) Q.at(a, b, k) = w[comp[k]];
            // after reduction the vector is supported on non-pivot coordinates
            for (int j = 0; j < A.dim; ++j)
                if (is_pivot[j] && !f.is_zero(w[j]))
                    throw InputError("internal: quotient reduction left a pivot coordinate");
        }
    out.quotient = std::move(Q);
    return out;
}

struct Dim2Classification {
    bool lie = false;
    bool nonlie_canonical = false;
    /// Rows are the new basis vectors expressed in the input basis; transforms
    /// the input constants to [f_1,f_1] = f_2.
    std::optional<std::vector<std::vector<std::string>>> change_of_basis_repr;  // printable form
    std::string note;
};

/// Structure constants in the basis whose rows are given by P (new basis in
/// old coordinates).
template <class F>
LeibnizAlgebra<F> change_basis(const LeibnizAlgebra<F>& A, const std::vector<std::vector<typename F::Elem>>& P) {
    const F& f = A.field;
    const int n = A.dim;
    FMatrix<F> Pt(n, n, f);  // P transposed: old coords = P^T * new coords
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Pt.at(j, i) = P[i][j];
    LeibnizAlgebra<F> B(n, f);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto w = A.bracket(P[a], P[b]);
            auto y = solve(Pt, w, f);  // coordinates of w in the new basis
            for (int k = 0; k < n; ++k) B.at(a, b, k) = y[k];
        }
    return B;
}

template <class F>
struct Dim2Result {
    bool lie = false;
    bool nonlie_canonical = false;
    std::optional<std::vector<std::vector<typename F::Elem>>> change_of_basis;
    std::string note;
};

/// Classifies a 2-dimensional Leibniz algebra over an exact field: either Lie,
/// or reducible to the canonical non-Lie form [e_1,e_1] = e_2. The reduction is
/// verified rather than assumed; when the produced basis does not yield the
/// canonical form, both flags stay false and the note carries the obstruction.
template <class F>
Dim2Result<F> classify_dim2(const LeibnizAlgebra<F>& A) {
    static_assert(is_exact_field_v<F>, "classification requires exact scalars");
    const F& f = A.field;
    if (A.dim != 2) throw InputError("classify_dim2 needs dim = 2");
    LeibnizCheck chk = verify_leibniz(A);
    if (!chk.is_leibniz) throw InputError("input is not a Leibniz algebra");

    Dim2Result<F> res;
    if (chk.is_lie) {
        res.lie = true;
        return res;
    }

    // find x with [x,x] != 0 among e1, e2, e1+e2 (enough when char != 2)
    std::vector<std::vector<typename F::Elem>> candidates = {
        A.basis_vector(0), A.basis_vector(1), {f.one(), f.one()}};
    std::vector<typename F::Elem> x, sq;
    for (auto& cand : candidates) {
        auto s = A.bracket(cand, cand);
        if (!A.vec_is_zero(s)) {
            x = cand;
            sq = s;
            break;
        }
    }
    if (x.empty()) {
        res.note = "no basis candidate has a nonzero square; algebra looks Lie";
        return res;
    }

    std::vector<std::vector<typename F::Elem>> P = {x, sq};
    FMatrix<F> M(2, 2, f);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) M.at(i, j) = P[i][j];
    if (!is_invertible(M, f)) {
        res.note = "x and [x,x] are linearly dependent; no canonical reduction";
        return res;
    }

    LeibnizAlgebra<F> B = change_basis(A, P);
    bool canonical = true;
    for (int i = 0; i < 2 && canonical; ++i)
        for (int j = 0; j < 2 && canonical; ++j)
            for (int k = 0; k < 2; ++k) {
                bool expect_one = (i == 0 && j == 0 && k == 1);
                if (expect_one ? !f.eq(B.at(i, j, k), f.one()) : !f.is_zero(B.at(i, j, k))) {
                    canonical = false;
                    res.note = "residual bracket c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                               std::to_string(k) + "] = " + f.to_string(B.at(i, j, k)) +
                               " after reduction; not isomorphic to the canonical form";
                    break;
                }
            }
    if (canonical) {
        res.nonlie_canonical = true;
        res.change_of_basis = P;
    }
    return res;
}

template <class F>
struct NoetherBracketResult {
    bool holds = false;
    std::optional<std::pair<std::vector<typename F::Elem>, std::vector<typename F::Elem>>> witness;  // (a, b)
    std::uint64_t pairs_scanned = 0;
};

/// Exact Noether bracket criterion over F_p: [a,b] = 0 implies [b,a] = 0 for
/// all pairs. For fixed b the conditions are linear in a, so checking the
/// kernel basis of ad_b against a |-> [b,a] decides the full quantifier.
inline NoetherBracketResult<PrimeField> check_noether_bracket_exact(const LeibnizAlgebra<PrimeField>& A) {
    const PrimeField& f = A.field;
    double count = 1;
    for (int i = 0; i < A.dim; ++i) count *= f.p;
    if (count > 1e6) throw InputError("p^dim exceeds the documented limit 10^6");
    const std::uint64_t total = static_cast<std::uint64_t>(count);

    NoetherBracketResult<PrimeField> res;
    std::vector<PrimeField::Elem> b(A.dim, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int i = 0; i < A.dim; ++i) {
            b[i] = static_cast<PrimeField::Elem>(t % f.p);
            t /= f.p;
        }
        FMatrix<PrimeField> M = ad_matrix(A, b);
        auto kernel = kernel_basis(M, f);
        res.pairs_scanned += static_cast<std::uint64_t>(kernel.size());
        for (auto& a : kernel) {
            auto back = A.bracket(b, a);
            if (!A.vec_is_zero(back)) {
                res.holds = false;
                res.witness = {a, b};
                return res;
            }
        }
    }
    res.holds = true;
    return res;
}

struct SampledNoetherResult {
    bool holds = false;  // no counterexample found; sampling only refutes
    std::optional<std::pair<std::vector<double>, std::vector<double>>> witness;
    double max_residual = 0.0;
    std::uint64_t seed = 0;
    int trials = 0;
};

SampledNoetherResult check_noether_bracket_sampled(const LeibnizAlgebra<RealField>& A, int trials,
                                                   double tol, std::uint64_t seed);

/// Exact-to-float conversion at the boundary (single rounding point).
template <class F>
LeibnizAlgebra<RealField> to_real(const LeibnizAlgebra<F>& A) {
    LeibnizAlgebra<RealField> B(A.dim, RealField{});
    for (std::size_t i = 0; i < A.c.size(); ++i) B.c[i] = A.field.to_double(A.c[i]);
    return B;
}

}  // namespace sd
