#include "hq/cli.hpp"

#include "hq/conjclass.hpp"
#include "hq/consistency.hpp"
#include "hq/io.hpp"
#include "hq/lagrange.hpp"
#include "hq/newton.hpp"
#include "hq/sylvester.hpp"

#include "CLI11.hpp"

#include <map>
#include <ostream>

namespace hq::cli {

namespace {

using io::json;

std::string span(const PlaneH& p) { return "span{" + to_string(p.b1) + ", " + to_string(p.b2) + "}"; }

std::string factors_text(const std::vector<QPoly>& fs) {
    if (fs.empty()) return "1";
    std::string out;
    for (const auto& f : fs) out += (out.empty() ? "" : " * ") + ("(" + to_string(f) + ")");
    return out;
}

std::string condition_text(const Condition& c) { return "node " + to_string(c.node) + ", value " + to_string(c.value); }

void print_provenance(std::ostream& out, const ReducedProblem& r) {
    out << "reduction:\n";
    if (r.provenance.empty()) out << "  nothing removed\n";
    for (const auto& e : r.provenance) {
        out << "  " << to_string(e.side) << " condition at " << to_string(e.condition.node);
        switch (e.action) {
            case ProvenanceEntry::Action::MovedToLeft: out << " is real, moved to the left\n"; break;
            case ProvenanceEntry::Action::MergedDuplicate: out << " is real, duplicates the left condition\n"; break;
            case ProvenanceEntry::Action::Implied:
                out << " implied by " << to_string(e.anchor_side) << " conditions at " << to_string(e.anchor1.node)
                    << " and " << to_string(e.anchor2.node) << "\n";
                break;
        }
    }
}

void print_normal_form(std::ostream& out, const ReducedProblem& r) {
    out << "paired:\n";
    if (r.paired.empty()) out << "  none\n";
    for (std::size_t s = 0; s < r.paired.size(); ++s) {
        const auto& p = r.paired[s];
        out << "  [" << s << "] left " << condition_text({p.alpha, p.c}) << "; right "
            << condition_text({p.beta, p.d}) << "\n";
    }
    out << "left only:\n";
    if (r.left_only.empty()) out << "  none\n";
    for (std::size_t s = 0; s < r.left_only.size(); ++s)
        out << "  [" << s << "] " << condition_text(r.left_only[s]) << "\n";
    out << "right only:\n";
    if (r.right_only.empty()) out << "  none\n";
    for (std::size_t s = 0; s < r.right_only.size(); ++s)
        out << "  [" << s << "] " << condition_text(r.right_only[s]) << "\n";
}

void print_solution(std::ostream& out, const SolutionSet& sol) {
    out << "particular: " << to_string(sol.particular) << "\n";
    for (std::size_t s = 0; s < sol.paired_terms.size(); ++s) {
        const auto& t = sol.paired_terms[s];
        out << "paired term " << s << ": mu in " << span(t.plane) << "\n";
        out << "  left factor: " << to_string(t.left_factor) << "\n";
        out << "  right factor: " << to_string(t.right_factor) << "\n";
    }
    out << "ideal: (" << to_string(sol.ideal_left) << ") h (" << to_string(sol.ideal_right) << ")\n";
}

std::pair<std::size_t, std::string> split_index(const std::string& text, const char* flag) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0)
        throw ParseError(std::string(flag) + " \"" + text + "\": expected s:...");
    const std::string idx = text.substr(0, colon);
    if (idx.find_first_not_of("0123456789") != std::string::npos || idx.size() > 9)
        throw ParseError(std::string(flag) + " \"" + text + "\": bad index");
    return {std::stoul(idx), text.substr(colon + 1)};
}

std::size_t checked_index(std::size_t s, std::size_t k, const char* flag) {
    if (s >= k)
        throw ArityMismatch(std::string(flag) + " index " + std::to_string(s) + " out of range (" +
                            std::to_string(k) + " paired terms)");
    return s;
}

void print_witness(std::ostream& err, const Inconsistent& e) {
    const auto& w = e.witness();
    err << "error: inconsistent data\n";
    err << "  class: trace " << rat_to_string(w.cls.trace) << ", norm " << rat_to_string(w.cls.norm2) << "\n";
    err << "  " << to_string(w.side) << " condition: " << condition_text(w.condition) << "\n";
    err << "  identity: " << w.identity << "\n";
    err << "  lhs: " << to_string(w.lhs) << "\n";
    err << "  rhs: " << to_string(w.rhs) << "\n";
}

struct SolveArgs {
    std::string problem;
    std::string method = "lagrange";
    std::vector<std::string> mu;
    std::string h;
    std::vector<std::string> constraints;
};

int cmd_solve(const SolveArgs& a, bool as_json, std::ostream& out) {
    const RawProblem raw = io::problem_from_json(io::read_json_file(a.problem));
    const ReducedProblem reduced = reduce(raw);
    SolutionSet sol = solve(reduced);
    if (a.method != "lagrange") {
        if (reduced.k() != 0)
            throw ArityMismatch("--method " + a.method + " needs data without equivalent left/right pairs");
        sol.particular = a.method == "newton" ? two_sided_newton(reduced) : two_sided_with_basis(reduced, Basis::Monomial);
    }
    if (!a.constraints.empty() && !a.mu.empty()) throw ArityMismatch("--mu and --constraint are exclusive");

    const QPoly h = a.h.empty() ? QPoly() : io::poly_from_json(io::read_json_file(a.h), a.h);
    std::optional<QPoly> instantiated;
    std::optional<ConstrainedSolution> constrained;
    if (!a.constraints.empty()) {
        std::map<std::size_t, Quat> given;
        for (const auto& c : a.constraints) {
            auto [s, rest] = split_index(c, "--constraint");
            if (!given.emplace(checked_index(s, reduced.k(), "--constraint"), io::parse_quat_arg(rest)).second)
                throw ArityMismatch("--constraint index " + std::to_string(s) + " given twice");
        }
        if (given.size() != reduced.k())
            throw ArityMismatch("--constraint needed for each of the " + std::to_string(reduced.k()) + " paired terms");
        std::vector<Quat> q;
        for (auto& [s, v] : given) q.push_back(v);
        constrained = solve_constrained(reduced, q);
        instantiated = constrained->instantiate(h);
    } else if (!a.mu.empty() || !a.h.empty()) {
        std::vector<PlaneCoords> coords(reduced.k(), {Rat(0), Rat(0)});
        std::vector<bool> seen(reduced.k(), false);
        for (const auto& m : a.mu) {
            auto [s, rest] = split_index(m, "--mu");
            checked_index(s, reduced.k(), "--mu");
            if (seen[s]) throw ArityMismatch("--mu index " + std::to_string(s) + " given twice");
            seen[s] = true;
            const auto comma = rest.find(',');
            if (comma == std::string::npos) throw ParseError("--mu \"" + m + "\": expected s:u,v");
            coords[s] = {parse_rat(rest.substr(0, comma)), parse_rat(rest.substr(comma + 1))};
        }
        instantiated = instantiate(sol, coords, h);
    }

    if (as_json) {
        json j = io::to_json(sol);
        j["provenance"] = io::to_json(reduced)["provenance"];
        if (constrained) {
            json mus = json::array();
            for (const auto& mu : constrained->mu) mus.push_back(io::to_json(mu));
            j["constrained_mu"] = mus;
        }
        if (instantiated) j["instantiated"] = io::to_json(*instantiated);
        out << j.dump() << "\n";
        return kOk;
    }
    print_provenance(out, reduced);
    out << "normal form: " << reduced.k() << " paired, " << reduced.left_only.size() << " left only, "
        << reduced.right_only.size() << " right only\n";
    out << "method: " << a.method << "\n";
    print_solution(out, sol);
    if (constrained)
        for (std::size_t s = 0; s < constrained->mu.size(); ++s)
            out << "constraint " << s << ": mu = " << to_string(constrained->mu[s]) << " = ("
                << rat_to_string(constrained->mu_coords[s].first) << ", "
                << rat_to_string(constrained->mu_coords[s].second) << ") in the plane basis\n";
    if (instantiated) out << "instantiated: " << to_string(*instantiated) << "\n";
    return kOk;
}

int cmd_verify(const std::string& problem, const std::string& poly, bool as_json, std::ostream& out) {
    const RawProblem raw = io::problem_from_json(io::read_json_file(problem));
    const QPoly f = io::poly_from_json(io::read_json_file(poly), poly);
    std::size_t passed = 0, total = 0;
    json results = json::array();
    auto check = [&](Side side, const Condition& c) {
        const Quat got = side == Side::Left ? eval_left(f, c.node) : eval_right(f, c.node);
        const bool ok = got == c.value;
        ++total;
        passed += ok ? 1 : 0;
        if (as_json) {
            results.push_back({{"side", to_string(side)},
                               {"node", io::to_json(c.node)},
                               {"expected", io::to_json(c.value)},
                               {"got", io::to_json(got)},
                               {"pass", ok}});
        } else {
            out << (ok ? "PASS " : "FAIL ") << to_string(side) << " node " << to_string(c.node) << ": expected "
                << to_string(c.value) << ", got " << to_string(got) << "\n";
        }
    };
    for (const auto& c : raw.left) check(Side::Left, c);
    for (const auto& c : raw.right) check(Side::Right, c);
    if (as_json)
        out << json{{"conditions", results}, {"passed", passed}, {"total", total}}.dump() << "\n";
    else
        out << passed << "/" << total << " conditions hold\n";
    return passed == total ? kOk : kInconsistent;
}

int cmd_reduce(const std::string& problem, bool as_json, std::ostream& out) {
    const ReducedProblem reduced = reduce(io::problem_from_json(io::read_json_file(problem)));
    if (as_json) {
        out << io::to_json(reduced).dump() << "\n";
        return kOk;
    }
    print_provenance(out, reduced);
    print_normal_form(out, reduced);
    return kOk;
}

std::vector<Quat> parse_node_args(const std::vector<std::string>& args) {
    if (args.size() == 1 && args[0].rfind("[[", 0) == 0) {
        json j;
        try {
            j = json::parse(args[0]);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("nodes: ") + e.what());
        }
        if (!j.is_array()) throw ParseError("nodes: expected a list of quaternions");
        std::vector<Quat> out;
        for (std::size_t n = 0; n < j.size(); ++n)
            out.push_back(io::quat_from_json(j[n], "nodes[" + std::to_string(n) + "]"));
        return out;
    }
    std::vector<Quat> out;
    for (const auto& a : args) out.push_back(io::parse_quat_arg(a));
    return out;
}

int cmd_minpoly(const std::string& side, const std::vector<std::string>& nodes, bool as_json, std::ostream& out) {
    const NodeSet set(parse_node_args(nodes));
    const bool left = side == "left";
    const QPoly p = left ? lmp(set) : rmp(set);
    const std::vector<QPoly> linear = left ? lmp_linear_factors(set) : rmp_linear_factors(set);
    // The grouped form needs at most two nodes per class.
    std::optional<std::vector<QPoly>> grouped;
    if (max_class_multiplicity(set.nodes()) <= 2) grouped = left ? lmp_factored(set) : rmp_factored(set);
    if (as_json) {
        auto list = [](const std::vector<QPoly>& fs) {
            json out = json::array();
            for (const auto& f : fs) out.push_back(io::to_json(f));
            return out;
        };
        json j = {{"side", side}, {"polynomial", io::to_json(p)}, {"linear_factors", list(linear)}};
        if (grouped) j["factors"] = list(*grouped);
        out << j.dump() << "\n";
        return kOk;
    }
    out << side << " minimal polynomial: " << to_string(p) << "\n";
    out << "linear factors: " << factors_text(linear) << "\n";
    if (grouped) out << "factored: " << factors_text(*grouped) << "\n";
    return kOk;
}

int cmd_sylvester(const std::string& a_text, const std::string& b_text, const std::string& d_text, bool as_json,
                  std::ostream& out) {
    const Quat a = io::parse_quat_arg(a_text);
    const Quat b = io::parse_quat_arg(b_text);
    const Quat delta = io::parse_quat_arg(d_text);
    const SylvesterSolution s = solve_sylvester(a, b, delta);
    const bool witness = s.kind == SylvesterKind::None && equivalent(a, b);
    if (as_json) {
        json j = {{"kind", to_string(s.kind)}};
        if (s.kind == SylvesterKind::Unique || s.kind == SylvesterKind::Affine) j["particular"] = io::to_json(s.particular);
        if (s.plane) j["plane"] = json::array({io::to_json(s.plane->b1), io::to_json(s.plane->b2)});
        if (witness) j["witness"] = {{"lhs", io::to_json(s.lhs)}, {"rhs", io::to_json(s.rhs)}};
        out << j.dump() << "\n";
        return kOk;
    }
    out << "equation: (" << to_string(a) << ") q - q (" << to_string(b) << ") = " << to_string(delta) << "\n";
    out << "kind: " << to_string(s.kind) << "\n";
    switch (s.kind) {
        case SylvesterKind::Unique: out << "solution: " << to_string(s.particular) << "\n"; break;
        case SylvesterKind::Affine:
            out << "particular: " << to_string(s.particular) << "\n";
            out << "homogeneous: " << span(*s.plane) << "\n";
            break;
        case SylvesterKind::AllOfH: out << "every quaternion is a solution\n"; break;
        case SylvesterKind::None:
            out << "no solution";
            if (witness)
                out << ": conj(a) delta = " << to_string(s.lhs) << " differs from delta b = " << to_string(s.rhs);
            out << "\n";
            break;
    }
    return kOk;
}

int cmd_eval(const std::string& side, const std::string& poly, const std::string& point, bool as_json,
             std::ostream& out) {
    const QPoly f = io::poly_from_json(io::read_json_file(poly), poly);
    const Quat a = io::parse_quat_arg(point);
    const Quat v = side == "left" ? eval_left(f, a) : eval_right(f, a);
    if (as_json)
        out << json{{"side", side}, {"point", io::to_json(a)}, {"value", io::to_json(v)}}.dump() << "\n";
    else
        out << v << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact interpolation by quaternion polynomials", "hqi"};
    app.require_subcommand(1);
    bool as_json = false;
    const auto side_check = CLI::IsMember({"left", "right"});

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a two-sided interpolation problem");
    solve_cmd->set_help_flag("--help", "Print this help message and exit");
    solve_cmd->add_option("problem", solve_args.problem, "Problem JSON file")->required();
    solve_cmd->add_option("--method", solve_args.method, "lagrange, newton or vandermonde")
        ->check(CLI::IsMember({"lagrange", "newton", "vandermonde"}));
    solve_cmd->add_option("--mu", solve_args.mu, "Plane coordinates s:u,v of paired term s");
    solve_cmd->add_option("--h", solve_args.h, "Polynomial JSON file for the ideal parameter");
    solve_cmd->add_option("--constraint", solve_args.constraints, "Backward-shift value s:q of paired term s");
    solve_cmd->add_flag("--json", as_json, "Machine-readable output");

    std::string verify_problem, verify_poly;
    auto* verify_cmd = app.add_subcommand("verify", "Check a polynomial against every condition");
    verify_cmd->add_option("problem", verify_problem, "Problem JSON file")->required();
    verify_cmd->add_option("poly", verify_poly, "Polynomial JSON file")->required();
    verify_cmd->add_flag("--json", as_json, "Machine-readable output");

    std::string reduce_problem;
    auto* reduce_cmd = app.add_subcommand("reduce", "Print the normal form of a problem");
    reduce_cmd->add_option("problem", reduce_problem, "Problem JSON file")->required();
    reduce_cmd->add_flag("--json", as_json, "Machine-readable output");

    std::string minpoly_side = "left";
    auto* minpoly_cmd = app.add_subcommand("minpoly", "Minimal polynomial of a node set");
    minpoly_cmd->add_option("--side", minpoly_side, "left or right")->check(side_check);
    // Nodes are taken from the leftover arguments so that JSON arrays reach
    // the quaternion parser untouched.
    minpoly_cmd->allow_extras();
    minpoly_cmd->footer("Nodes: expressions such as 1/2-3k, JSON 4-arrays, or one JSON list of 4-arrays.");
    minpoly_cmd->add_flag("--json", as_json, "Machine-readable output");

    std::string syl_a, syl_b, syl_delta;
    auto* syl_cmd = app.add_subcommand("sylvester", "Solve a q - q b = delta");
    syl_cmd->add_option("a", syl_a)->required();
    syl_cmd->add_option("b", syl_b)->required();
    syl_cmd->add_option("delta", syl_delta)->required();
    syl_cmd->add_flag("--json", as_json, "Machine-readable output");

    std::string eval_side = "left", eval_poly, eval_point;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a polynomial at a point");
    eval_cmd->add_option("--side", eval_side, "left or right")->check(side_check);
    eval_cmd->add_option("poly", eval_poly, "Polynomial JSON file")->required();
    eval_cmd->add_option("point", eval_point, "Point")->required();
    eval_cmd->add_flag("--json", as_json, "Machine-readable output");

    try {
        // CLI11 consumes arguments from the back.
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve_args, as_json, out);
        if (*verify_cmd) return cmd_verify(verify_problem, verify_poly, as_json, out);
        if (*reduce_cmd) return cmd_reduce(reduce_problem, as_json, out);
        if (*minpoly_cmd) return cmd_minpoly(minpoly_side, minpoly_cmd->remaining(), as_json, out);
        if (*syl_cmd) return cmd_sylvester(syl_a, syl_b, syl_delta, as_json, out);
        if (*eval_cmd) return cmd_eval(eval_side, eval_poly, eval_point, as_json, out);
    } catch (const Inconsistent& e) {
        print_witness(err, e);
        return kInconsistent;
    } catch (const InvalidConstraint& e) {
        err << "error: " << e.what() << "\n";
        return kInconsistent;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace hq::cli
