#include "hq/consistency.hpp"

#include <algorithm>
#include <optional>

namespace hq {

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

namespace {

std::string describe(const InconsistencyWitness& w) {
    return std::string("inconsistent ") + to_string(w.side) + " condition at " + to_string(w.condition.node) +
           ": " + w.identity + " fails (" + to_string(w.lhs) + " != " + to_string(w.rhs) + ")";
}

void check_distinct(const std::vector<Condition>& conds, Side side) {
    for (std::size_t a = 0; a < conds.size(); ++a)
        for (std::size_t b = a + 1; b < conds.size(); ++b)
            if (conds[a].node == conds[b].node)
                throw NodesNotDistinct(std::string("node ") + to_string(conds[a].node) + " repeated on the " +
                                       to_string(side) + " side");
}

struct Tagged {
    Side side;
    Condition cond;
    bool alive = true;
};

}  // namespace

Inconsistent::Inconsistent(InconsistencyWitness w) : Error(describe(w)), witness_(std::move(w)) {}

std::vector<Condition> ReducedProblem::left_conditions() const {
    std::vector<Condition> out;
    for (const auto& p : paired) out.push_back({p.alpha, p.c});
    out.insert(out.end(), left_only.begin(), left_only.end());
    return out;
}

std::vector<Condition> ReducedProblem::right_conditions() const {
    std::vector<Condition> out;
    for (const auto& p : paired) out.push_back({p.beta, p.d});
    out.insert(out.end(), right_only.begin(), right_only.end());
    return out;
}

std::vector<Quat> ReducedProblem::left_nodes() const {
    std::vector<Quat> out;
    for (const auto& c : left_conditions()) out.push_back(c.node);
    return out;
}

std::vector<Quat> ReducedProblem::right_nodes() const {
    std::vector<Quat> out;
    for (const auto& c : right_conditions()) out.push_back(c.node);
    return out;
}

RawProblem ReducedProblem::to_raw() const { return {left_conditions(), right_conditions()}; }

// Any f with the given values at a, b has the form
//   f = fa + (z - a)(a - b)^{-1}(fa - fb) + X g        (left values), or
//   f = fa + (fa - fb)(a - b)^{-1}(z - a) + g X        (right values),
// with X the characteristic polynomial of the class, which vanishes on both
// sides everywhere in the class. Evaluating at c gives the four transfer rules.
Quat transfer(const Quat& a, const Quat& fa, const Quat& b, const Quat& fb, Side side_in, const Quat& c,
              Side side_out) {
    if (!equivalent(a, b) || !equivalent(a, c))
        throw NotEquivalent("transfer nodes must share one conjugacy class");
    if (a == b) throw NodesNotDistinct("transfer anchors must be distinct");
    const Quat w = inv(a - b);
    if (side_in == Side::Left) {
        const Quat slope = w * (fa - fb);
        if (side_out == Side::Left) return fa + (c - a) * slope;
        return fa + slope * c - a * slope;
    }
    const Quat slope = (fa - fb) * w;
    if (side_out == Side::Right) return fa + slope * (c - a);
    return fa + c * slope - slope * a;
}

ReducedProblem reduce(const RawProblem& problem) {
    check_distinct(problem.left, Side::Left);
    check_distinct(problem.right, Side::Right);

    ReducedProblem out;
    std::vector<Tagged> conds;
    for (const auto& c : problem.left) conds.push_back({Side::Left, c});
    std::vector<Tagged> rights;
    for (const auto& c : problem.right) {
        if (!c.node.is_real()) {
            rights.push_back({Side::Right, c});
            continue;
        }
        auto same = std::find_if(conds.begin(), conds.end(), [&](const Tagged& t) { return t.cond.node == c.node; });
        if (same == conds.end()) {
            out.provenance.push_back({ProvenanceEntry::Action::MovedToLeft, Side::Right, c, Side::Left, {}, {}});
            conds.push_back({Side::Left, c});
        } else if (same->cond.value == c.value) {
            out.provenance.push_back({ProvenanceEntry::Action::MergedDuplicate, Side::Right, c, Side::Left, {}, {}});
        } else {
            throw Inconsistent({c.node.class_key(), Side::Right, c, "left and right values agree at a real node",
                                same->cond.value, c.value});
        }
    }
    conds.insert(conds.end(), rights.begin(), rights.end());

    // Classes in first-occurrence order.
    std::vector<ConjClassKey> classes;
    for (const auto& t : conds) {
        const auto key = t.cond.node.class_key();
        if (std::find(classes.begin(), classes.end(), key) == classes.end()) classes.push_back(key);
    }

    for (const auto& key : classes) {
        std::vector<std::size_t> lefts, rights_in;
        for (std::size_t n = 0; n < conds.size(); ++n) {
            if (!(conds[n].cond.node.class_key() == key)) continue;
            (conds[n].side == Side::Left ? lefts : rights_in).push_back(n);
        }
        if (lefts.size() + rights_in.size() < 3) continue;

        const auto& anchors = lefts.size() >= 2 ? lefts : rights_in;
        const Side anchor_side = conds[anchors[0]].side;
        const Condition a1 = conds[anchors[0]].cond;
        const Condition a2 = conds[anchors[1]].cond;
        for (std::size_t n = 0; n < conds.size(); ++n) {
            if (n == anchors[0] || n == anchors[1] || !(conds[n].cond.node.class_key() == key)) continue;
            auto& t = conds[n];
            const Quat expected = transfer(a1.node, a1.value, a2.node, a2.value, anchor_side, t.cond.node, t.side);
            if (expected != t.cond.value) {
                const std::string rule = std::string(to_string(anchor_side)) + "->" + to_string(t.side);
                throw Inconsistent({key, t.side, t.cond,
                                    "value implied by " + std::string(to_string(anchor_side)) + " anchors " +
                                        to_string(a1.node) + ", " + to_string(a2.node) + " (" + rule + ")",
                                    t.cond.value, expected});
            }
            t.alive = false;
            out.provenance.push_back({ProvenanceEntry::Action::Implied, t.side, t.cond, anchor_side, a1, a2});
        }
    }

    std::vector<bool> right_used(conds.size(), false);
    for (std::size_t n = 0; n < conds.size(); ++n) {
        const auto& t = conds[n];
        if (!t.alive || t.side != Side::Left) continue;
        const auto key = t.cond.node.class_key();
        std::optional<std::size_t> partner;
        std::size_t same_class_lefts = 0;
        for (std::size_t m = 0; m < conds.size(); ++m) {
            if (!conds[m].alive || !(conds[m].cond.node.class_key() == key)) continue;
            if (conds[m].side == Side::Left)
                ++same_class_lefts;
            else
                partner = m;
        }
        if (!partner || same_class_lefts != 1) {
            out.left_only.push_back(t.cond);
            continue;
        }
        const auto& r = conds[*partner].cond;
        const Quat diff = t.cond.value - r.value;
        const Quat lhs = t.cond.node.conj() * diff;
        const Quat rhs = diff * r.node;
        if (lhs != rhs)
            throw Inconsistent({key, Side::Right, r, "conj(alpha)(c - d) = (c - d) beta with alpha = " +
                                                         to_string(t.cond.node) + ", beta = " + to_string(r.node),
                                lhs, rhs});
        right_used[*partner] = true;
        out.paired.push_back({t.cond.node, t.cond.value, r.node, r.value});
    }
    for (std::size_t n = 0; n < conds.size(); ++n)
        if (conds[n].alive && conds[n].side == Side::Right && !right_used[n]) out.right_only.push_back(conds[n].cond);
    return out;
}

}  // namespace hq
