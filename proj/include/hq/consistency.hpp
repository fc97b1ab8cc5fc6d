#pragma once

#include "hq/error.hpp"
#include "hq/quat.hpp"

#include <string>
#include <vector>

namespace hq {

enum class Side { Left, Right };

const char* to_string(Side side);

// One interpolation condition: f^el(node) = value or f^er(node) = value.
struct Condition {
    Quat node;
    Quat value;

    friend bool operator==(const Condition&, const Condition&) = default;
};

// Interpolation data as given by the user. Nodes are distinct within a side;
// the same node may carry one left and one right condition.
struct RawProblem {
    std::vector<Condition> left;
    std::vector<Condition> right;

    friend bool operator==(const RawProblem&, const RawProblem&) = default;
};

// An equivalent left/right pair (alpha ~ beta) with targets c and d.
struct PairedCondition {
    Quat alpha, c, beta, d;

    friend bool operator==(const PairedCondition&, const PairedCondition&) = default;
};

// Why a raw condition is absent from the normal form.
struct ProvenanceEntry {
    enum class Action {
        MovedToLeft,     // real right node, now a left condition
        MergedDuplicate, // real node present on both sides with equal values
        Implied,         // determined by two anchor conditions in its class
    };
    Action action = Action::MovedToLeft;
    Side side = Side::Right;
    Condition condition;
    // Anchors for Action::Implied.
    Side anchor_side = Side::Left;
    Condition anchor1, anchor2;

    friend bool operator==(const ProvenanceEntry&, const ProvenanceEntry&) = default;
};

// Normal form: no conjugacy class holds three surviving nodes, classes of
// left_only / right_only nodes meet no node of the other side, paired
// entries satisfy conj(alpha)(c - d) = (c - d) beta, and no right node is real.
struct ReducedProblem {
    std::vector<PairedCondition> paired;
    std::vector<Condition> left_only;
    std::vector<Condition> right_only;
    std::vector<ProvenanceEntry> provenance;

    std::size_t k() const { return paired.size(); }
    std::size_t n() const { return paired.size() + left_only.size(); }
    std::size_t m() const { return paired.size() + right_only.size(); }

    // Left nodes ordered paired first, then left_only (the order every
    // solver uses); likewise for the right side.
    std::vector<Condition> left_conditions() const;
    std::vector<Condition> right_conditions() const;
    std::vector<Quat> left_nodes() const;
    std::vector<Quat> right_nodes() const;

    // Back to raw form in the order above.
    RawProblem to_raw() const;
};

// Everything needed to display a failed consistency identity.
struct InconsistencyWitness {
    ConjClassKey cls;
    Side side = Side::Left;
    Condition condition;
    std::string identity;
    Quat lhs;
    Quat rhs;
};

class Inconsistent : public Error {
public:
    explicit Inconsistent(InconsistencyWitness w);
    const InconsistencyWitness& witness() const { return witness_; }

private:
    InconsistencyWitness witness_;
};

// Given the side_in values fa, fb of some polynomial at distinct equivalent
// nodes a, b, returns its side_out value at c (any node of the same class).
// Throws NotEquivalent / NodesNotDistinct.
Quat transfer(const Quat& a, const Quat& fa, const Quat& b, const Quat& fb, Side side_in, const Quat& c,
              Side side_out);

// Moves real right conditions left, removes conditions implied by two anchors
// in any class with three or more conditions (checking each against the
// anchors), checks every remaining equivalent left/right pair, and returns the
// normal form. Throws Inconsistent with a witness, or NodesNotDistinct for a
// node repeated within one side.
ReducedProblem reduce(const RawProblem& problem);

}  // namespace hq
