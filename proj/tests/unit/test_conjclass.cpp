#include "doctest.h"

#include "hq/conjclass.hpp"
#include "hq/error.hpp"
#include "oracle.hpp"

#include <algorithm>

using namespace hq;

namespace {
const Quat I = Quat::i(), J = Quat::j(), K = Quat::k();
const QPoly Z = QPoly::z();
const QPoly X_I = Z * Z + QPoly(Quat(1));

// Random node set with some classes hit twice, none three times.
std::vector<Quat> random_nodes(oracle::Gen& g, std::size_t count) {
    std::vector<Quat> nodes;
    while (nodes.size() < count) {
        Quat a = g.coin(0.3) ? Quat(g.rat(20)) : g.quat(20);
        if (!nodes.empty() && g.coin(0.4) && !nodes.back().is_real()) a = g.conjugate_of(nodes.back());
        if (std::find(nodes.begin(), nodes.end(), a) != nodes.end()) continue;
        nodes.push_back(a);
        if (max_class_multiplicity(nodes) > 2) nodes.pop_back();
    }
    return nodes;
}
}  // namespace

TEST_CASE("node sets reject repeats") {
    CHECK_THROWS_AS(NodeSet({I, J, I}), NodesNotDistinct);
    const NodeSet s{I, J, K};
    CHECK(s.without(1).nodes() == std::vector<Quat>{I, K});
    CHECK(max_class_multiplicity({I, J, K, Quat(1)}) == 3);
    CHECK(max_class_multiplicity({}) == 0);
}

TEST_CASE("characteristic polynomial of a class") {
    CHECK(char_poly(I) == X_I);
    CHECK(char_poly(Quat(1) + I) == QPoly({Quat(2), Quat(-2), Quat(1)}));
    CHECK(eval_left(char_poly(I), J) == Quat());
    CHECK_THROWS_AS(char_poly(Quat(3)), RealInput);
    oracle::Gen g(31);
    for (int n = 0; n < 100; ++n) {
        const Quat a = g.nonreal_quat();
        const Quat b = g.conjugate_of(a);
        CHECK(char_poly(a).is_real());
        CHECK(eval_left(char_poly(a), b) == Quat());
        CHECK(eval_right(char_poly(a), b) == Quat());
    }
}

TEST_CASE("minimal polynomials of small sets") {
    CHECK(lmp(NodeSet{I, J}) == X_I);
    CHECK(lmp(NodeSet{I, Quat(1)}) == QPoly::linear(I) * QPoly::linear(Quat(1)));
    CHECK(lmp(NodeSet{I, J, K}) == X_I);
    CHECK(lmp(NodeSet{}) == QPoly(Quat(1)));
    CHECK(rmp(NodeSet{}) == QPoly(Quat(1)));
    CHECK(rmp(NodeSet{I, J, K}) == X_I);
    CHECK(lmp(NodeSet{I}) == QPoly::linear(I));

    CHECK(lmp_factored(NodeSet{I, J, Quat(1)}) == std::vector<QPoly>{X_I, QPoly::linear(Quat(1))});
    CHECK(lmp_factored(NodeSet{Quat(1), Quat(2)}) ==
          std::vector<QPoly>{QPoly::linear(Quat(1)), QPoly::linear(Quat(2))});
    CHECK(lmp_factored(NodeSet{I}) == std::vector<QPoly>{QPoly::linear(I)});
    CHECK_THROWS_AS(lmp_factored(NodeSet{I, J, K}), AssumptionAViolated);
    CHECK_THROWS_AS(rmp_factored(NodeSet{I, J, K}), AssumptionAViolated);
}

TEST_CASE("minimal polynomials annihilate their nodes") {
    oracle::Gen g(32);
    for (int n = 0; n < 60; ++n) {
        const auto nodes = random_nodes(g, static_cast<std::size_t>(g.integer(1, 6)));
        const NodeSet s(nodes);
        const QPoly p = lmp(s);
        const QPoly q = rmp(s);
        for (const auto& a : nodes) {
            CHECK(oracle::naive_eval_left(p, a) == Quat());
            CHECK(oracle::naive_eval_right(q, a) == Quat());
        }
        CHECK(p.is_monic());
        CHECK(q.is_monic());
        CHECK(*p.degree() == nodes.size());
        CHECK(*q.degree() == nodes.size());
        CHECK(product(lmp_factored(s)) == p);
        CHECK(product(rmp_factored(s)) == q);
        CHECK(product(lmp_linear_factors(s)) == p);
        CHECK(product(rmp_linear_factors(s)) == q);

        // Any order gives the same generator.
        auto shuffled = nodes;
        std::shuffle(shuffled.begin(), shuffled.end(), g.engine());
        CHECK(lmp(NodeSet(shuffled)) == p);
        CHECK(rmp(NodeSet(shuffled)) == q);

        // Generator of the ideal: any left-vanishing f is a right multiple.
        const QPoly f = p * g.poly(3) ;
        CHECK(in_right_ideal(f, p));
    }
}

TEST_CASE("degree counts classes hit twice once each") {
    oracle::Gen g(33);
    for (int n = 0; n < 40; ++n) {
        const auto nodes = random_nodes(g, static_cast<std::size_t>(g.integer(2, 6)));
        std::size_t doubled = 0, single = 0;
        std::vector<ConjClassKey> seen;
        for (const auto& a : nodes) {
            const auto key = a.class_key();
            const auto hits = std::count_if(nodes.begin(), nodes.end(), [&](const Quat& b) { return b.class_key() == key; });
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
            seen.push_back(key);
            (hits == 2 ? doubled : single) += 1;
        }
        const auto factors = lmp_factored(NodeSet(nodes));
        std::size_t quadratic = 0;
        for (const auto& f : factors) quadratic += *f.degree() == 2 ? 1 : 0;
        CHECK(quadratic == doubled);
        CHECK(*lmp(NodeSet(nodes)).degree() == single + 2 * doubled);
    }
}

TEST_CASE("adding two points of a fresh class multiplies by its characteristic polynomial") {
    oracle::Gen g(34);
    for (int n = 0; n < 40; ++n) {
        auto nodes = random_nodes(g, static_cast<std::size_t>(g.integer(0, 4)));
        const Quat v = g.nonreal_quat(20);
        bool fresh = true;
        for (const auto& a : nodes) fresh = fresh && !equivalent(a, v);
        if (!fresh) continue;
        const Quat u1 = g.conjugate_of(v);
        Quat u2 = g.conjugate_of(v);
        if (u2 == u1) continue;
        const QPoly base = lmp(NodeSet(nodes));
        auto grown = nodes;
        grown.push_back(u1);
        grown.push_back(u2);
        CHECK(lmp(NodeSet(grown)) == char_poly(v) * base);
        CHECK(rmp(NodeSet(grown)) == char_poly(v) * rmp(NodeSet(nodes)));
        // A third point of the class changes nothing.
        const Quat u3 = g.conjugate_of(v);
        if (u3 != u1 && u3 != u2) {
            grown.push_back(u3);
            CHECK(lmp(NodeSet(grown)) == char_poly(v) * base);
        }
    }
}

TEST_CASE("a class meets the zero set of a minimal polynomial in one point or entirely") {
    oracle::Gen g(35);
    for (int n = 0; n < 40; ++n) {
        const Quat a = g.nonreal_quat(10);
        const Quat b = g.conjugate_of(a);
        if (a == b) continue;
        const QPoly one = lmp(NodeSet{a});
        const QPoly two = lmp(NodeSet{a, b});
        int zeros_one = 0;
        for (int t = 0; t < 10; ++t) {
            const Quat c = g.conjugate_of(a);
            CHECK(eval_left(two, c) == Quat());
            zeros_one += eval_left(one, c).is_zero() ? 1 : 0;
            if (c != a) CHECK_FALSE(eval_left(one, c).is_zero());
        }
        CHECK(eval_left(one, a).is_zero());
    }
}
