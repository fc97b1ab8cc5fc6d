#include "hq/newton.hpp"

#include "hq/conjclass.hpp"

namespace hq {

namespace {

// Gauss-Jordan on the augmented rows [A | b] of sum_j A[i][j] x_j = b_i. Row
// operations multiply on the left, which keeps right-multiplied unknowns
// intact. Returns the pivot column of each leading row.
std::vector<std::size_t> eliminate(std::vector<std::vector<Quat>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Quat scale = inv(rows[r][c]);
        for (auto& e : rows[r]) e = scale * e;
        for (std::size_t m = 0; m < rows.size(); ++m) {
            if (m == r || rows[m][c].is_zero()) continue;
            const Quat factor = rows[m][c];
            for (std::size_t n = c; n < rows[m].size(); ++n) rows[m][n] -= factor * rows[r][n];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Quat> solve_right_unknowns(const QMatrix& a, const std::vector<Quat>& rhs) {
    std::vector<std::vector<Quat>> rows(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) rows[i].push_back(a.at(i, j));
        rows[i].push_back(rhs[i]);
    }
    const auto pivots = eliminate(rows, a.cols);
    if (pivots.size() != a.cols) throw Singular("matrix is singular over H");
    std::vector<Quat> x(a.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][a.cols];
    return x;
}

void check_one_sided(const std::vector<Quat>& nodes) {
    NodeSet checked(nodes);
    if (max_class_multiplicity(nodes) >= 3)
        throw AssumptionAViolated("three or more interpolation nodes lie in one conjugacy class");
}

std::vector<Quat> nodes_of(const std::vector<Condition>& conds) {
    std::vector<Quat> out;
    for (const auto& c : conds) out.push_back(c.node);
    return out;
}

std::vector<Quat> values_of(const std::vector<Condition>& conds) {
    std::vector<Quat> out;
    for (const auto& c : conds) out.push_back(c.value);
    return out;
}

std::vector<Quat> first(const std::vector<Quat>& v, std::size_t n) { return {v.begin(), v.begin() + n}; }

Quat nonzero(const Quat& q, const char* what) {
    if (q.is_zero()) throw InternalError(std::string("unexpected zero: ") + what);
    return q;
}

// Throws if node cannot join nodes without breaking distinctness or the
// at-most-two-per-class rule.
void check_can_append(const std::vector<Quat>& nodes, const Quat& node) {
    std::size_t same_class = 0;
    for (const auto& a : nodes) {
        if (a == node) throw NodesNotDistinct("node " + to_string(node) + " already present");
        if (equivalent(a, node)) ++same_class;
    }
    if (same_class >= 2)
        throw AssumptionAViolated("node " + to_string(node) + " would be the third in its conjugacy class");
}

std::vector<Quat> conj_all(const std::vector<Quat>& v) {
    std::vector<Quat> out;
    for (const auto& q : v) out.push_back(q.conj());
    return out;
}

// Minimal k with target in the right span of (nodes_i^j)_i for j < k.
std::optional<std::size_t> vandermonde_degree(const std::vector<Quat>& nodes, const std::vector<Quat>& target) {
    bool all_zero = true;
    for (const auto& t : target) all_zero = all_zero && t.is_zero();
    if (all_zero) return std::nullopt;
    std::vector<std::vector<Quat>> cols;
    std::vector<Quat> column(nodes.size(), Quat(1));
    for (std::size_t k = 1; k <= nodes.size(); ++k) {
        cols.push_back(column);
        if (in_right_span(cols, target)) return k - 1;
        for (std::size_t i = 0; i < nodes.size(); ++i) column[i] = nodes[i] * column[i];
    }
    throw InternalError("target outside the span of all Vandermonde columns");
}

}  // namespace

std::vector<Quat> solve_linear(const QMatrix& a, const std::vector<Quat>& rhs, UnknownSide side) {
    if (a.rows != a.cols) throw Singular("matrix is not square");
    if (rhs.size() != a.rows) throw ArityMismatch("right-hand side length does not match the matrix");
    std::vector<Quat> x;
    if (side == UnknownSide::CoefficientsOnRight) {
        x = solve_right_unknowns(a, rhs);
    } else {
        // sum_i x_i A[i][j] = r_j  <=>  sum_i conj(A[i][j]) conj(x_i) = conj(r_j).
        QMatrix t(a.cols, a.rows);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j).conj();
        x = conj_all(solve_right_unknowns(t, conj_all(rhs)));
    }
    for (std::size_t n = 0; n < a.rows; ++n) {
        Quat acc;
        for (std::size_t m = 0; m < a.cols; ++m)
            acc += side == UnknownSide::CoefficientsOnRight ? a.at(n, m) * x[m] : x[m] * a.at(m, n);
        if (acc != rhs[n]) throw InternalError("linear solve failed substitution check");
    }
    return x;
}

bool in_right_span(const std::vector<std::vector<Quat>>& cols, const std::vector<Quat>& target) {
    std::vector<std::vector<Quat>> rows(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
        for (const auto& c : cols) rows[i].push_back(c.at(i));
        rows[i].push_back(target[i]);
    }
    const auto pivots = eliminate(rows, cols.size());
    for (std::size_t r = pivots.size(); r < rows.size(); ++r)
        if (!rows[r].back().is_zero()) return false;
    return true;
}

std::vector<QPoly> left_basis(const std::vector<Quat>& nodes, Basis basis) {
    check_one_sided(nodes);
    const NodeSet all(nodes);
    std::vector<QPoly> out;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        switch (basis) {
            case Basis::Lagrange: out.push_back(lmp(all.without(j))); break;
            case Basis::Monomial: out.push_back(QPoly::monomial(static_cast<unsigned>(j), Quat(1))); break;
            case Basis::Newton: out.push_back(lmp(NodeSet(first(nodes, j)))); break;
        }
    }
    return out;
}

QMatrix left_basis_matrix(const std::vector<Quat>& nodes, const std::vector<QPoly>& basis) {
    QMatrix a(nodes.size(), basis.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) a.at(i, j) = eval_left(basis[j], nodes[i]);
    return a;
}

QPoly solve_left_with_basis(const std::vector<Condition>& left, Basis basis) {
    const auto nodes = nodes_of(left);
    const auto b = left_basis(nodes, basis);
    const auto phi = solve_linear(left_basis_matrix(nodes, b), values_of(left), UnknownSide::CoefficientsOnRight);
    QPoly f;
    for (std::size_t j = 0; j < b.size(); ++j) f += b[j] * phi[j];
    return f;
}

std::vector<QPoly> right_basis(const std::vector<Quat>& nodes, Basis basis) {
    check_one_sided(nodes);
    const NodeSet all(nodes);
    std::vector<QPoly> out;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        switch (basis) {
            case Basis::Lagrange: out.push_back(rmp(all.without(j))); break;
            case Basis::Monomial: out.push_back(QPoly::monomial(static_cast<unsigned>(j), Quat(1))); break;
            case Basis::Newton: out.push_back(rmp(NodeSet(first(nodes, j)))); break;
        }
    }
    return out;
}

QMatrix right_basis_matrix(const std::vector<Quat>& nodes, const std::vector<QPoly>& basis) {
    QMatrix b(basis.size(), nodes.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j) b.at(i, j) = eval_right(basis[i], nodes[j]);
    return b;
}

QPoly solve_right_with_basis(const std::vector<Condition>& right, Basis basis) {
    const auto nodes = nodes_of(right);
    const auto b = right_basis(nodes, basis);
    const auto psi = solve_linear(right_basis_matrix(nodes, b), values_of(right), UnknownSide::CoefficientsOnLeft);
    QPoly h;
    for (std::size_t i = 0; i < b.size(); ++i) h += psi[i] * b[i];
    return h;
}

QPoly NewtonCoeffs::polynomial() const {
    QPoly f;
    for (std::size_t j = 0; j < phis.size(); ++j) f += basis[j] * phis[j];
    return f;
}

NewtonCoeffs newton_append(NewtonCoeffs nc, const Quat& node, const Quat& value) {
    check_can_append(nc.nodes, node);
    const Quat pivot = nonzero(eval_left(nc.annihilator, node), "p_n^el(alpha)");
    const Quat phi = inv(pivot) * (value - eval_left(nc.polynomial(), node));
    nc.nodes.push_back(node);
    nc.values.push_back(value);
    nc.basis.push_back(nc.annihilator);
    nc.phis.push_back(phi);
    nc.annihilator = nc.annihilator * QPoly::linear(inv(pivot) * node * pivot);
    return nc;
}

NewtonCoeffs newton_left(const std::vector<Condition>& left) {
    check_one_sided(nodes_of(left));
    NewtonCoeffs nc;
    for (const auto& cond : left) {
        const Quat p = nonzero(eval_left(nc.annihilator, cond.node), "p_n^el(alpha)");
        nc.basis.push_back(nc.annihilator);
        nc.nodes.push_back(cond.node);
        nc.annihilator = nc.annihilator * QPoly::linear(inv(p) * cond.node * p);
    }
    // Forward substitution in the lower-triangular system
    //   c_i = sum_{j <= i} p_j^el(alpha_i) phi_j.
    for (std::size_t i = 0; i < left.size(); ++i) {
        Quat acc = left[i].value;
        for (std::size_t j = 0; j < i; ++j) acc -= eval_left(nc.basis[j], left[i].node) * nc.phis[j];
        nc.phis.push_back(inv(eval_left(nc.basis[i], left[i].node)) * acc);
        nc.values.push_back(left[i].value);
    }
    return nc;
}

QPoly NewtonRightCoeffs::polynomial() const {
    QPoly h;
    for (std::size_t j = 0; j < psis.size(); ++j) h += psis[j] * basis[j];
    return h;
}

NewtonRightCoeffs newton_right(const std::vector<Condition>& right) {
    check_one_sided(nodes_of(right));
    NewtonRightCoeffs nc;
    for (const auto& cond : right) {
        const Quat pivot = nonzero(eval_right(nc.annihilator, cond.node), "q_n^er(beta)");
        Quat acc = cond.value;
        for (std::size_t j = 0; j < nc.basis.size(); ++j) acc -= nc.psis[j] * eval_right(nc.basis[j], cond.node);
        nc.psis.push_back(acc * inv(pivot));
        nc.basis.push_back(nc.annihilator);
        nc.nodes.push_back(cond.node);
        nc.values.push_back(cond.value);
        nc.annihilator = QPoly::linear(pivot * cond.node * inv(pivot)) * nc.annihilator;
    }
    return nc;
}

std::optional<std::size_t> left_degree(const std::vector<Condition>& left) {
    const auto nodes = nodes_of(left);
    check_one_sided(nodes);
    return vandermonde_degree(nodes, values_of(left));
}

std::optional<std::size_t> h_degree(const std::vector<Quat>& deltas, const std::vector<Quat>& rights) {
    if (deltas.size() != rights.size()) throw ArityMismatch("one target per right node expected");
    // Left span of rows (beta_j^s)_j, conjugated into a right-span question.
    return vandermonde_degree(conj_all(rights), conj_all(deltas));
}

std::vector<Quat> correction_targets(const ReducedProblem& reduced, const QPoly& f_left, const QPoly& p_left) {
    const QPoly ps = sharp(p_left);
    const QPoly norm = ps * p_left;
    std::vector<Quat> deltas;
    for (const auto& cond : reduced.right_conditions()) {
        const Quat d = cond.value - eval_right(f_left, cond.node);
        if (d.is_zero()) {
            deltas.emplace_back();
            continue;
        }
        const Quat nv = nonzero(eval_right(norm, cond.node), "(P#P)(beta)");
        deltas.push_back(eval_right(ps, d * cond.node * inv(d)) * d * inv(nv));
    }
    return deltas;
}

namespace {

std::vector<Condition> with_values(const std::vector<Quat>& nodes, const std::vector<Quat>& values) {
    std::vector<Condition> out;
    for (std::size_t j = 0; j < nodes.size(); ++j) out.push_back({nodes[j], values[j]});
    return out;
}

void require_unpaired(const ReducedProblem& reduced) {
    if (reduced.k() != 0)
        throw ArityMismatch("two-sided Newton needs a problem without equivalent left/right pairs, got " +
                            std::to_string(reduced.k()));
}

}  // namespace

QPoly two_sided_newton(const ReducedProblem& reduced) {
    require_unpaired(reduced);
    const NewtonCoeffs left = newton_left(reduced.left_conditions());
    const QPoly f_left = left.polynomial();
    const auto deltas = correction_targets(reduced, f_left, left.annihilator);
    const QPoly h = newton_right(with_values(reduced.right_nodes(), deltas)).polynomial();
    return f_left + left.annihilator * h;
}

QPoly two_sided_with_basis(const ReducedProblem& reduced, Basis basis) {
    require_unpaired(reduced);
    const auto left = reduced.left_conditions();
    const QPoly f_left = solve_left_with_basis(left, basis);
    const QPoly p_left = lmp(NodeSet(nodes_of(left)));
    const auto deltas = correction_targets(reduced, f_left, p_left);
    const QPoly h = solve_right_with_basis(with_values(reduced.right_nodes(), deltas), basis);
    return f_left + p_left * h;
}

}  // namespace hq
