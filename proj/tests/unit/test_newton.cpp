#include "doctest.h"

#include "hq/conjclass.hpp"
#include "hq/error.hpp"
#include "hq/lagrange.hpp"
#include "hq/newton.hpp"
#include "oracle.hpp"
#include "problems.hpp"

using namespace hq;

namespace {
const Quat I = Quat::i(), J = Quat::j(), K = Quat::k(), ONE(1);

std::vector<Condition> read_left(const QPoly& f, const std::vector<Quat>& nodes) {
    std::vector<Condition> out;
    for (const auto& a : nodes) out.push_back({a, oracle::naive_eval_left(f, a)});
    return out;
}
}  // namespace

TEST_CASE("linear systems over H") {
    QMatrix id(2, 2);
    id.at(0, 0) = ONE;
    id.at(1, 1) = ONE;
    CHECK(solve_linear(id, {I, K}, UnknownSide::CoefficientsOnRight) == std::vector<Quat>{I, K});
    CHECK(solve_linear(id, {I, K}, UnknownSide::CoefficientsOnLeft) == std::vector<Quat>{I, K});

    QMatrix v(2, 2);
    v.at(0, 0) = ONE;
    v.at(0, 1) = ONE;
    v.at(1, 0) = ONE;
    v.at(1, 1) = Quat(2);
    CHECK(solve_linear(v, {I, J}, UnknownSide::CoefficientsOnRight) == std::vector<Quat>{Quat(2) * I - J, J - I});

    QMatrix s(2, 2);
    s.at(0, 0) = I;
    s.at(0, 1) = J;
    s.at(1, 0) = I;
    s.at(1, 1) = J;
    CHECK_THROWS_AS(solve_linear(s, {ONE, K}, UnknownSide::CoefficientsOnRight), Singular);
    CHECK_THROWS_AS(solve_linear(s, {ONE, K}, UnknownSide::CoefficientsOnLeft), Singular);

    oracle::Gen g(71);
    for (int n = 0; n < 50; ++n) {
        const std::size_t size = static_cast<std::size_t>(g.integer(1, 4));
        QMatrix a(size, size);
        for (auto& e : a.entries) e = g.quat(10);
        std::vector<Quat> x(size);
        for (auto& e : x) e = g.quat(10);
        std::vector<Quat> right(size), left(size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) {
                right[i] += a.at(i, j) * x[j];
                left[i] += x[j] * a.at(j, i);
            }
        try {
            CHECK(solve_linear(a, right, UnknownSide::CoefficientsOnRight) == x);
            CHECK(solve_linear(a, left, UnknownSide::CoefficientsOnLeft) == x);
        } catch (const Singular&) {
            // Random matrices are almost never singular; nothing to compare.
        }
    }
}

TEST_CASE("left Newton scheme") {
    const auto nc = newton_left({{ONE, I}, {Quat(2), J}});
    CHECK(nc.phis == std::vector<Quat>{I, J - I});
    CHECK(nc.basis == std::vector<QPoly>{QPoly(ONE), QPoly::linear(ONE)});
    CHECK(nc.polynomial() == QPoly(I) + QPoly::linear(ONE) * QPoly(J - I));
    CHECK(newton_left({{I, K}}).phis == std::vector<Quat>{K});
    CHECK_THROWS_AS(newton_left({{I, ONE}, {J, ONE}, {K, ONE}}), AssumptionAViolated);

    // Appending a value the interpolant already takes adds a zero coefficient.
    const auto grown = newton_append(nc, Quat(3), eval_left(nc.polynomial(), Quat(3)));
    CHECK(grown.phis.back() == Quat());
    CHECK_THROWS_AS(newton_append(newton_left({{I, ONE}, {J, ONE}}), K, ONE), AssumptionAViolated);
    CHECK_THROWS_AS(newton_append(nc, ONE, ONE), NodesNotDistinct);

    oracle::Gen g(72);
    for (int n = 0; n < 60; ++n) {
        const auto nodes = oracle::sample_nodes(g, static_cast<std::size_t>(g.integer(1, 6)), 6);
        const auto left = read_left(g.poly(7, 20), nodes);
        const auto full = newton_left(left);
        CHECK(full.polynomial() == solve_left(left));
        // Lower triangular with nonzero diagonal.
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = 0; j < nodes.size(); ++j)
                CHECK(eval_left(full.basis[j], nodes[i]).is_zero() == (j > i));
        auto part = newton_left({left.begin(), left.end() - 1});
        part = newton_append(part, left.back().node, left.back().value);
        CHECK(part.phis == full.phis);
        CHECK(part.basis == full.basis);
        CHECK(part.annihilator == lmp(NodeSet(nodes)));
    }
}

TEST_CASE("generic basis solve") {
    oracle::Gen g(73);
    for (int n = 0; n < 40; ++n) {
        const auto nodes = oracle::sample_nodes(g, static_cast<std::size_t>(g.integer(1, 5)), 6);
        const auto left = read_left(g.poly(6, 20), nodes);
        const QPoly expect = solve_left(left);
        for (Basis b : {Basis::Lagrange, Basis::Monomial, Basis::Newton})
            CHECK(solve_left_with_basis(left, b) == expect);
        // Lagrange basis gives a diagonal matrix.
        const auto a = left_basis_matrix(nodes, left_basis(nodes, Basis::Lagrange));
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = 0; j < nodes.size(); ++j) CHECK(a.at(i, j).is_zero() == (i != j));

        std::vector<Condition> right;
        for (const auto& b : nodes) right.push_back({b, g.quat(10)});
        const QPoly h = solve_right(right);
        for (Basis b : {Basis::Lagrange, Basis::Monomial, Basis::Newton})
            CHECK(solve_right_with_basis(right, b) == h);
        CHECK(newton_right(right).polynomial() == h);
    }
}

TEST_CASE("degree read off the data") {
    const Quat c(2, 1, 0, -1);
    CHECK(left_degree({{I, c}, {ONE, c}, {J + ONE, c}}) == 0u);
    CHECK(left_degree({{I, I}, {ONE, ONE}, {K, K}}) == 1u);
    CHECK_FALSE(left_degree({{I, Quat()}, {ONE, Quat()}}).has_value());
    CHECK_FALSE(h_degree({Quat(), Quat()}, {I, ONE + K}).has_value());
    CHECK(h_degree({c, c, c}, {I, J, ONE + K}) == 0u);

    oracle::Gen g(74);
    for (int n = 0; n < 40; ++n) {
        const auto nodes = oracle::sample_nodes(g, static_cast<std::size_t>(g.integer(3, 6)), 6);
        const QPoly f = g.poly(static_cast<unsigned>(nodes.size() - 1), 20);
        const auto left = read_left(f, nodes);
        CHECK(left_degree(left) == f.degree());
        const QPoly h = g.poly(2, 10);
        std::vector<Quat> deltas;
        for (const auto& b : nodes) deltas.push_back(oracle::naive_eval_right(h, b));
        CHECK(h_degree(deltas, nodes) == h.degree());
    }
}

TEST_CASE("two-sided Newton construction") {
    const auto r = reduce({{{ONE, I}}, {{ONE + J, K}}});
    CHECK(two_sided_newton(r) == solve(r).particular);

    // Data already met by the left interpolant needs no correction.
    const QPoly f({Quat(1, 2, 0, 0)});
    const auto r0 = reduce({{{I, f.coeff(0)}, {ONE, f.coeff(0)}}, {{Quat(1, 0, 1, 1), f.coeff(0)}}});
    CHECK(two_sided_newton(r0) == f);

    oracle::Gen g(75);
    oracle::SampleShape shape;
    shape.mixed_classes = false;
    shape.max_degree = 6;
    shape.coeff_bound = 20;
    shape.max_left = 4;
    shape.max_right = 4;
    for (int n = 0; n < 40; ++n) {
        const auto r1 = reduce(oracle::sample_problem(g, shape).raw);
        REQUIRE(r1.k() == 0);
        const QPoly expect = solve(r1).particular;
        const QPoly got = two_sided_newton(r1);
        CHECK(got == expect);
        CHECK(two_sided_with_basis(r1, Basis::Monomial) == expect);
        // Degree bookkeeping.
        const auto left = newton_left(r1.left_conditions());
        const auto deltas = correction_targets(r1, left.polynomial(), left.annihilator);
        const auto hd = h_degree(deltas, r1.right_nodes());
        if (hd) CHECK(*got.degree() == r1.n() + *hd);
        else CHECK(got == left.polynomial());
    }
    CHECK_THROWS_AS(two_sided_newton(reduce({{{I, ONE}}, {{J, ONE}}})), ArityMismatch);
}
