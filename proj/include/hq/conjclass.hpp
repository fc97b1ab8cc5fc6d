#pragma once

#include "hq/qpoly.hpp"
#include "hq/quat.hpp"

#include <initializer_list>
#include <vector>

namespace hq {

// Ordered list of pairwise distinct quaternions.
class NodeSet {
public:
    NodeSet() = default;
    // Throws NodesNotDistinct on a repeated node.
    explicit NodeSet(std::vector<Quat> nodes);
    NodeSet(std::initializer_list<Quat> nodes);

    const std::vector<Quat>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    const Quat& operator[](std::size_t n) const { return nodes_[n]; }
    auto begin() const { return nodes_.begin(); }
    auto end() const { return nodes_.end(); }

    // Same set with the n-th node removed.
    NodeSet without(std::size_t n) const;

private:
    std::vector<Quat> nodes_;
};

// Largest number of nodes that share one conjugacy class.
std::size_t max_class_multiplicity(const std::vector<Quat>& nodes);

// z^2 - 2 Re(a) z + |a|^2. Throws RealInput for real a.
QPoly char_poly(const Quat& a);

// Monic generator of the right ideal of polynomials vanishing on the left at
// every node. Built as a product of linear factors; a node whose class already
// contributed two nodes is skipped. The empty set gives 1.
QPoly lmp(const NodeSet& nodes);
// Mirror: generator of the left ideal of right-vanishing polynomials.
QPoly rmp(const NodeSet& nodes);

// The linear factors produced by the recursion, in multiplication order.
std::vector<QPoly> lmp_linear_factors(const NodeSet& nodes);
std::vector<QPoly> rmp_linear_factors(const NodeSet& nodes);

// Factored minimal polynomial: one characteristic polynomial per class hit
// twice (in first-occurrence order), followed by the linear factors for the
// classes hit once. Multiplying the list left to right gives lmp / rmp.
// Throws AssumptionAViolated if some class is hit three or more times.
std::vector<QPoly> lmp_factored(const NodeSet& nodes);
std::vector<QPoly> rmp_factored(const NodeSet& nodes);

// Left-to-right product of a factor list.
QPoly product(const std::vector<QPoly>& factors);

}  // namespace hq
