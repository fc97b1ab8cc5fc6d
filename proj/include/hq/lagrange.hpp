#pragma once

#include "hq/consistency.hpp"
#include "hq/error.hpp"
#include "hq/qpoly.hpp"
#include "hq/sylvester.hpp"

#include <utility>
#include <vector>

namespace hq {

using PlaneCoords = std::pair<Rat, Rat>;

// Unique interpolant of degree < n for left conditions (no three nodes
// equivalent). Throws AssumptionAViolated / NodesNotDistinct.
QPoly solve_left(const std::vector<Condition>& left);
// Right-sided counterpart.
QPoly solve_right(const std::vector<Condition>& right);

// Minimal polynomials of a reduced problem. Index i runs over
// ReducedProblem::left_nodes(), j over right_nodes().
struct ProblemPolys {
    std::vector<Quat> lambda, omega;
    QPoly left;                       // lmp of all left nodes
    QPoly right;                      // rmp of all right nodes
    std::vector<QPoly> left_without;  // lmp with node i removed
    std::vector<QPoly> right_without; // rmp with node j removed

    explicit ProblemPolys(const ReducedProblem& problem);
};

// Free-parameter term left_factor * mu * right_factor with mu in plane.
struct PairedTerm {
    QPoly left_factor;
    PlaneH plane;
    QPoly right_factor;
    Quat alpha_tilde, beta_tilde;
};

// Every solution is
//   particular + sum_s left_factor_s mu_s right_factor_s + ideal_left h ideal_right
// with mu_s in plane_s and h arbitrary.
struct SolutionSet {
    QPoly particular;
    std::vector<PairedTerm> paired_terms;
    QPoly ideal_left;
    QPoly ideal_right;
};

// Interpolant of degree < n+m with right value d at right_only[s], zero at
// every other node and zero backward-shift values on the paired nodes.
QPoly elementary_right(const ReducedProblem& problem, std::size_t s);
// Same with left value c at left_only[s].
QPoly elementary_left(const ReducedProblem& problem, std::size_t s);
// Particular low-degree interpolant for paired[s] (zero elsewhere) and the
// descriptor of its free parameter.
std::pair<QPoly, PairedTerm> elementary_paired(const ReducedProblem& problem, std::size_t s);

SolutionSet solve(const ReducedProblem& problem);

// Throws ArityMismatch unless there is one coordinate pair per paired term.
QPoly instantiate(const SolutionSet& sol, const std::vector<PlaneCoords>& mu_coords, const QPoly& h);

// Solution family with the backward-shift values (L_alpha_s f)^er(beta_s)
// prescribed; only h stays free.
struct ConstrainedSolution {
    SolutionSet base;
    std::vector<Quat> mu;
    std::vector<PlaneCoords> mu_coords;
    QPoly fixed;  // base.particular plus the fixed paired terms

    QPoly instantiate(const QPoly& h) const { return fixed + base.ideal_left * h * base.ideal_right; }
};

// Throws ArityMismatch on a wrong number of constraints and InvalidConstraint
// when some q_s fails alpha_s q - q beta_s = c_s - d_s.
ConstrainedSolution solve_constrained(const ReducedProblem& problem, const std::vector<Quat>& q);

class NotMember : public Error {
public:
    NotMember(Side side, Quat node, Quat value);
    Side side;
    Quat node;
    Quat value;
};

struct MembershipReport {
    std::vector<Quat> mu;
    std::vector<PlaneCoords> mu_coords;
    QPoly h;
};

// Decides whether f vanishes (left at every left node, right at every right
// node; targets are ignored) and returns mu_s, h with
//   f = sum_s P_left mu_s P_right_without_s + P_left h P_right.
// Throws NotMember with the first nonzero value.
MembershipReport homogeneous_membership(const QPoly& f, const ReducedProblem& problem);

// Parameters (mu coordinates, h) that reproduce a given solution f through
// instantiate(). Throws NotMember if f is not a solution.
MembershipReport decompose(const SolutionSet& sol, const ReducedProblem& problem, const QPoly& f);

}  // namespace hq
