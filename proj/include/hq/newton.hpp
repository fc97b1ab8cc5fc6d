#pragma once

#include "hq/consistency.hpp"
#include "hq/error.hpp"
#include "hq/qpoly.hpp"
#include "hq/quat.hpp"

#include <optional>
#include <vector>

namespace hq {

struct QMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Quat> entries;  // row-major

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Quat& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Quat& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

enum class UnknownSide {
    CoefficientsOnRight,  // sum_j A[i][j] x_j = rhs_i
    CoefficientsOnLeft,   // sum_i x_i A[i][j] = rhs_j
};

// Exact Gaussian elimination over H, first nonzero pivot in column order. The
// answer is checked by substitution. Throws Singular.
std::vector<Quat> solve_linear(const QMatrix& a, const std::vector<Quat>& rhs, UnknownSide side);

// Whether target lies in {sum_j cols_j x_j} (right span of the columns).
bool in_right_span(const std::vector<std::vector<Quat>>& cols, const std::vector<Quat>& target);

enum class Basis { Lagrange, Monomial, Newton };

// Basis a_0..a_{n-1} of the polynomials of degree < n used with the given
// left nodes.
std::vector<QPoly> left_basis(const std::vector<Quat>& nodes, Basis basis);
// A[i][j] = a_j^el(alpha_i)
QMatrix left_basis_matrix(const std::vector<Quat>& nodes, const std::vector<QPoly>& basis);
// sum_j a_j phi_j with A phi = C solved generically.
QPoly solve_left_with_basis(const std::vector<Condition>& left, Basis basis);

// Right-sided counterparts: B[i][j] = b_i^er(beta_j), h = sum_i psi_i b_i with
// psi B = D.
std::vector<QPoly> right_basis(const std::vector<Quat>& nodes, Basis basis);
QMatrix right_basis_matrix(const std::vector<Quat>& nodes, const std::vector<QPoly>& basis);
QPoly solve_right_with_basis(const std::vector<Condition>& right, Basis basis);

// Left Newton scheme: f = sum_j basis_j phi_j where basis_j is the left minimal
// polynomial of the first j nodes (built by linear factors) and annihilator
// the one of all nodes.
struct NewtonCoeffs {
    std::vector<Quat> nodes;
    std::vector<Quat> values;
    std::vector<Quat> phis;
    std::vector<QPoly> basis;
    QPoly annihilator = QPoly(Quat(1));

    QPoly polynomial() const;
};

// Throws AssumptionAViolated / NodesNotDistinct.
NewtonCoeffs newton_left(const std::vector<Condition>& left);
NewtonCoeffs newton_append(NewtonCoeffs nc, const Quat& node, const Quat& value);

// Right Newton scheme: h = sum_j psis_j basis_j, basis_j the right minimal
// polynomial of the first j nodes.
struct NewtonRightCoeffs {
    std::vector<Quat> nodes;
    std::vector<Quat> values;
    std::vector<Quat> psis;
    std::vector<QPoly> basis;
    QPoly annihilator = QPoly(Quat(1));

    QPoly polynomial() const;
};

NewtonRightCoeffs newton_right(const std::vector<Condition>& right);

// Degree of the unique interpolant of degree < n, read off the Vandermonde
// columns; nullopt when every target is zero.
std::optional<std::size_t> left_degree(const std::vector<Condition>& left);
// Same for right data given as values (deltas) at nodes (rights).
std::optional<std::size_t> h_degree(const std::vector<Quat>& deltas, const std::vector<Quat>& rights);

// Values the correction h must take at the right nodes so that
// f_left + P_left h meets the right conditions.
std::vector<Quat> correction_targets(const ReducedProblem& reduced, const QPoly& f_left, const QPoly& p_left);

// Low-degree solution for k = 0: Newton on the left conditions, then on the
// recomputed right conditions. Throws ArityMismatch if some pair is present.
QPoly two_sided_newton(const ReducedProblem& reduced);
// Same construction with the generic basis path on both sides.
QPoly two_sided_with_basis(const ReducedProblem& reduced, Basis basis);

}  // namespace hq
