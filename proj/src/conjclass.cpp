#include "hq/conjclass.hpp"

#include "hq/error.hpp"

#include <algorithm>

namespace hq {

NodeSet::NodeSet(std::vector<Quat> nodes) : nodes_(std::move(nodes)) {
    for (std::size_t a = 0; a < nodes_.size(); ++a)
        for (std::size_t b = a + 1; b < nodes_.size(); ++b)
            if (nodes_[a] == nodes_[b])
                throw NodesNotDistinct("node " + to_string(nodes_[a]) + " appears more than once");
}

NodeSet::NodeSet(std::initializer_list<Quat> nodes) : NodeSet(std::vector<Quat>(nodes)) {}

NodeSet NodeSet::without(std::size_t n) const {
    NodeSet out;
    out.nodes_.reserve(nodes_.size());
    for (std::size_t m = 0; m < nodes_.size(); ++m)
        if (m != n) out.nodes_.push_back(nodes_[m]);
    return out;
}

std::size_t max_class_multiplicity(const std::vector<Quat>& nodes) {
    std::size_t best = 0;
    for (const auto& a : nodes) {
        const auto count = static_cast<std::size_t>(
            std::count_if(nodes.begin(), nodes.end(), [&](const Quat& b) { return equivalent(a, b); }));
        best = std::max(best, count);
    }
    return best;
}

QPoly char_poly(const Quat& a) {
    if (a.is_real()) throw RealInput("characteristic polynomial needs a non-real quaternion, got " + to_string(a));
    return QPoly({Quat(a.norm2()), Quat(Rat(-2 * a.w)), Quat(1)});
}

std::vector<QPoly> lmp_linear_factors(const NodeSet& nodes) {
    std::vector<QPoly> factors;
    QPoly p(Quat(1));
    for (const auto& a : nodes) {
        const Quat pa = eval_left(p, a);
        if (pa.is_zero()) continue;
        QPoly factor = QPoly::linear(inv(pa) * a * pa);
        p = p * factor;
        factors.push_back(std::move(factor));
    }
    return factors;
}

std::vector<QPoly> rmp_linear_factors(const NodeSet& nodes) {
    std::vector<QPoly> factors;  // built right to left
    QPoly q(Quat(1));
    for (const auto& a : nodes) {
        const Quat qa = eval_right(q, a);
        if (qa.is_zero()) continue;
        QPoly factor = QPoly::linear(qa * a * inv(qa));
        q = factor * q;
        factors.push_back(std::move(factor));
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

QPoly product(const std::vector<QPoly>& factors) {
    QPoly p(Quat(1));
    for (const auto& f : factors) p = p * f;
    return p;
}

QPoly lmp(const NodeSet& nodes) { return product(lmp_linear_factors(nodes)); }

QPoly rmp(const NodeSet& nodes) { return product(rmp_linear_factors(nodes)); }

namespace {

struct ClassSplit {
    std::vector<Quat> doubled;  // one representative per class hit twice
    std::vector<Quat> single;   // nodes alone in their class
};

ClassSplit split_classes(const NodeSet& nodes) {
    if (max_class_multiplicity(nodes.nodes()) >= 3)
        throw AssumptionAViolated("three or more nodes lie in one conjugacy class");
    ClassSplit out;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        const Quat& a = nodes[n];
        std::size_t first = n;
        std::size_t count = 0;
        for (std::size_t m = 0; m < nodes.size(); ++m) {
            if (!equivalent(a, nodes[m])) continue;
            first = std::min(first, m);
            ++count;
        }
        if (count == 1)
            out.single.push_back(a);
        else if (first == n)
            out.doubled.push_back(a);
    }
    return out;
}

}  // namespace

std::vector<QPoly> lmp_factored(const NodeSet& nodes) {
    const auto split = split_classes(nodes);
    std::vector<QPoly> factors;
    for (const auto& a : split.doubled) factors.push_back(char_poly(a));
    for (auto& f : lmp_linear_factors(NodeSet(split.single))) factors.push_back(std::move(f));
    return factors;
}

std::vector<QPoly> rmp_factored(const NodeSet& nodes) {
    const auto split = split_classes(nodes);
    std::vector<QPoly> factors;
    for (const auto& a : split.doubled) factors.push_back(char_poly(a));
    for (auto& f : rmp_linear_factors(NodeSet(split.single))) factors.push_back(std::move(f));
    return factors;
}

}  // namespace hq
