#include "hq/lagrange.hpp"

#include "hq/conjclass.hpp"

namespace hq {

namespace {

Quat nonzero(const Quat& q, const char* what) {
    if (q.is_zero()) throw InternalError(std::string("unexpected zero: ") + what);
    return q;
}

void check_one_sided(const std::vector<Quat>& nodes) {
    NodeSet checked(nodes);
    if (max_class_multiplicity(nodes) >= 3)
        throw AssumptionAViolated("three or more interpolation nodes lie in one conjugacy class");
}

std::vector<Quat> nodes_of(const std::vector<Condition>& conds) {
    std::vector<Quat> out;
    out.reserve(conds.size());
    for (const auto& c : conds) out.push_back(c.node);
    return out;
}

// gamma with (P gamma Q)^er(beta) = d, where Q^er(beta) = q_beta != 0 and P
// has no zero in [beta]:
//   gamma = P#^er(d beta d^-1) d (P# P)(beta)^-1 q_beta^-1.
Quat right_coefficient(const QPoly& p, const Quat& beta, const Quat& d, const Quat& q_beta) {
    if (d.is_zero()) return {};
    const QPoly ps = sharp(p);
    const Quat norm_value = nonzero(eval_right(ps * p, beta), "(P#P)(beta)");
    return eval_right(ps, d * beta * inv(d)) * d * inv(norm_value) * inv(nonzero(q_beta, "Q^er(beta)"));
}

// rho with (P rho Q)^el(alpha) = c, where P^el(alpha) = p_alpha != 0 and Q
// has no zero in [alpha]:
//   rho = p_alpha^-1 (Q# Q)(alpha)^-1 c Q#^el(c^-1 alpha c).
Quat left_coefficient(const QPoly& q, const Quat& alpha, const Quat& c, const Quat& p_alpha) {
    if (c.is_zero()) return {};
    const QPoly qs = sharp(q);
    const Quat norm_value = nonzero(eval_left(qs * q, alpha), "(Q#Q)(alpha)");
    return inv(nonzero(p_alpha, "P^el(alpha)")) * inv(norm_value) * c * eval_left(qs, inv(c) * alpha * c);
}

QPoly elementary_right(const ReducedProblem& problem, const ProblemPolys& polys, std::size_t s) {
    const std::size_t j = problem.k() + s;
    const Condition& cond = problem.right_only.at(s);
    const Quat gamma =
        right_coefficient(polys.left, cond.node, cond.value, eval_right(polys.right_without[j], cond.node));
    return polys.left * gamma * polys.right_without[j];
}

QPoly elementary_left(const ReducedProblem& problem, const ProblemPolys& polys, std::size_t s) {
    const std::size_t i = problem.k() + s;
    const Condition& cond = problem.left_only.at(s);
    const Quat rho =
        left_coefficient(polys.right, cond.node, cond.value, eval_left(polys.left_without[i], cond.node));
    return polys.left_without[i] * rho * polys.right;
}

std::pair<Quat, Quat> tilde_nodes(const ReducedProblem& problem, const ProblemPolys& polys, std::size_t s) {
    const auto& pc = problem.paired.at(s);
    const Quat pa = nonzero(eval_left(polys.left_without[s], pc.alpha), "P_{L_s}^el(alpha_s)");
    const Quat pb = nonzero(eval_right(polys.right_without[s], pc.beta), "P_{R_s}^er(beta_s)");
    return {inv(pa) * pc.alpha * pa, pb * pc.beta * inv(pb)};
}

std::pair<QPoly, PairedTerm> elementary_paired(const ReducedProblem& problem, const ProblemPolys& polys,
                                               std::size_t s) {
    const auto& pc = problem.paired.at(s);
    const QPoly& pl_s = polys.left_without[s];
    const QPoly& pr_s = polys.right_without[s];
    const auto [alpha_t, beta_t] = tilde_nodes(problem, polys, s);

    const Quat gamma = right_coefficient(pl_s, pc.beta, pc.d, eval_right(pr_s, pc.beta));
    const Quat rho = left_coefficient(pr_s, pc.alpha, pc.c, eval_left(pl_s, pc.alpha));
    const Quat diff = rho - gamma;
    if (alpha_t.conj() * diff != diff * beta_t)
        throw InternalError("paired coefficients violate the Sylvester solvability identity");

    QPoly particular = pl_s * rho * pr_s + polys.left * (inv(Rat(2) * alpha_t.im()) * diff) * pr_s;
    PairedTerm term{pl_s, plane(alpha_t, beta_t), polys.right, alpha_t, beta_t};
    return {std::move(particular), std::move(term)};
}

SolutionSet solve(const ReducedProblem& problem, const ProblemPolys& polys) {
    SolutionSet sol;
    for (std::size_t s = 0; s < problem.left_only.size(); ++s)
        sol.particular += elementary_left(problem, polys, s);
    for (std::size_t s = 0; s < problem.right_only.size(); ++s)
        sol.particular += elementary_right(problem, polys, s);
    for (std::size_t s = 0; s < problem.paired.size(); ++s) {
        auto [part, term] = elementary_paired(problem, polys, s);
        sol.particular += part;
        sol.paired_terms.push_back(std::move(term));
    }
    sol.ideal_left = polys.left;
    sol.ideal_right = polys.right;
    return sol;
}

}  // namespace

QPoly solve_left(const std::vector<Condition>& left) {
    const auto nodes = nodes_of(left);
    check_one_sided(nodes);
    const NodeSet all(nodes);
    QPoly f;
    for (std::size_t k = 0; k < left.size(); ++k) {
        const QPoly p = lmp(all.without(k));
        f += p * (inv(nonzero(eval_left(p, nodes[k]), "P_k^el(alpha_k)")) * left[k].value);
    }
    return f;
}

QPoly solve_right(const std::vector<Condition>& right) {
    const auto nodes = nodes_of(right);
    check_one_sided(nodes);
    const NodeSet all(nodes);
    QPoly f;
    for (std::size_t k = 0; k < right.size(); ++k) {
        const QPoly p = rmp(all.without(k));
        f += (right[k].value * inv(nonzero(eval_right(p, nodes[k]), "P_k^er(beta_k)"))) * p;
    }
    return f;
}

ProblemPolys::ProblemPolys(const ReducedProblem& problem)
    : lambda(problem.left_nodes()), omega(problem.right_nodes()) {
    const NodeSet ls(lambda);
    const NodeSet rs(omega);
    left = lmp(ls);
    right = rmp(rs);
    for (std::size_t i = 0; i < ls.size(); ++i) left_without.push_back(lmp(ls.without(i)));
    for (std::size_t j = 0; j < rs.size(); ++j) right_without.push_back(rmp(rs.without(j)));
}

QPoly elementary_right(const ReducedProblem& problem, std::size_t s) {
    return elementary_right(problem, ProblemPolys(problem), s);
}

QPoly elementary_left(const ReducedProblem& problem, std::size_t s) {
    return elementary_left(problem, ProblemPolys(problem), s);
}

std::pair<QPoly, PairedTerm> elementary_paired(const ReducedProblem& problem, std::size_t s) {
    return elementary_paired(problem, ProblemPolys(problem), s);
}

SolutionSet solve(const ReducedProblem& problem) { return solve(problem, ProblemPolys(problem)); }

QPoly instantiate(const SolutionSet& sol, const std::vector<PlaneCoords>& mu_coords, const QPoly& h) {
    if (mu_coords.size() != sol.paired_terms.size())
        throw ArityMismatch("expected " + std::to_string(sol.paired_terms.size()) + " plane coordinate pairs, got " +
                            std::to_string(mu_coords.size()));
    QPoly f = sol.particular;
    for (std::size_t s = 0; s < mu_coords.size(); ++s) {
        const auto& t = sol.paired_terms[s];
        f += t.left_factor * t.plane.at(mu_coords[s].first, mu_coords[s].second) * t.right_factor;
    }
    if (!h.is_zero()) f += sol.ideal_left * h * sol.ideal_right;
    return f;
}

ConstrainedSolution solve_constrained(const ReducedProblem& problem, const std::vector<Quat>& q) {
    if (q.size() != problem.k())
        throw ArityMismatch("expected " + std::to_string(problem.k()) + " constraints, got " +
                            std::to_string(q.size()));
    for (std::size_t s = 0; s < q.size(); ++s) {
        const auto& pc = problem.paired[s];
        if (sylvester_apply(pc.alpha, pc.beta, q[s]) != pc.c - pc.d)
            throw InvalidConstraint("constraint " + std::to_string(s) + " (" + to_string(q[s]) +
                                    ") does not solve alpha q - q beta = c - d");
    }
    const ProblemPolys polys(problem);
    ConstrainedSolution out{solve(problem, polys), {}, {}, {}};
    out.fixed = out.base.particular;
    for (std::size_t s = 0; s < q.size(); ++s) {
        const auto& pc = problem.paired[s];
        const auto& term = out.base.paired_terms[s];
        const Quat residual = q[s] - eval_right(backshift_left(out.base.particular, pc.alpha), pc.beta);
        // Solve ((L_alpha P_left) mu P_right_without_s)^er(beta) = residual for mu.
        const QPoly shifted = backshift_left(polys.left, pc.alpha);
        const Quat mu = right_coefficient(shifted, pc.beta, residual, eval_right(polys.right_without[s], pc.beta));
        auto coords = term.plane.coordinates(mu);
        if (!coords) throw InternalError("constrained parameter left its solution plane");
        out.fixed += term.left_factor * mu * term.right_factor;
        out.mu.push_back(mu);
        out.mu_coords.push_back(std::move(*coords));
    }
    return out;
}

NotMember::NotMember(Side side_, Quat node_, Quat value_)
    : Error(std::string("not in the homogeneous solution set: ") + to_string(side_) + " value at " +
            to_string(node_) + " is " + to_string(value_)),
      side(side_),
      node(std::move(node_)),
      value(std::move(value_)) {}

MembershipReport homogeneous_membership(const QPoly& f, const ReducedProblem& problem) {
    const ProblemPolys polys(problem);
    for (const auto& a : polys.lambda) {
        const Quat v = eval_left(f, a);
        if (!v.is_zero()) throw NotMember(Side::Left, a, v);
    }
    for (const auto& b : polys.omega) {
        const Quat v = eval_right(f, b);
        if (!v.is_zero()) throw NotMember(Side::Right, b, v);
    }
    // f = P_left g; g = h P_right + r with deg r < m, and r = sum_s mu_s P_right_without_s.
    const auto left_div = divmod_poly_left(f, polys.left);
    if (!left_div.remainder.is_zero()) throw InternalError("left-vanishing polynomial outside the left ideal");
    const auto right_div = divmod_poly_right(left_div.quotient, polys.right);

    MembershipReport report;
    report.h = right_div.quotient;
    QPoly rebuilt;
    for (std::size_t s = 0; s < problem.k(); ++s) {
        const auto& pc = problem.paired[s];
        const QPoly& pr_s = polys.right_without[s];
        const Quat mu = eval_right(right_div.remainder, pc.beta) * inv(nonzero(eval_right(pr_s, pc.beta), "P^er"));
        const auto [alpha_t, beta_t] = tilde_nodes(problem, polys, s);
        auto coords = plane(alpha_t, beta_t).coordinates(mu);
        if (!coords) throw InternalError("homogeneous parameter outside its solution plane");
        rebuilt += mu * pr_s;
        report.mu.push_back(mu);
        report.mu_coords.push_back(std::move(*coords));
    }
    if (rebuilt != right_div.remainder) throw InternalError("homogeneous remainder is not a paired combination");
    return report;
}

MembershipReport decompose(const SolutionSet& sol, const ReducedProblem& problem, const QPoly& f) {
    return homogeneous_membership(f - sol.particular, problem);
}

}  // namespace hq
