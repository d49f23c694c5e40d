#pragma once

// The orecontract command line: argument handling, dispatch over the
// coefficient ring, and exit codes.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parse.hpp"
#include "report.hpp"

namespace oc {

enum ExitCode : int { exit_ok = 0, exit_parse = 2, exit_resource = 3, exit_unsupported = 4 };

struct JobSpec {
    std::string command;
    OreAlgebra alg;
    RingKind ring = RingKind::ZZ;
    std::vector<std::string> input;
    std::optional<int> max_order;
    std::string format = "text";
    std::uint64_t step_budget = StepBudget::kDefaultLimit;
    bool verbose = false;
    std::string factor;
};

namespace detail {

template <class R> OreOperator<R> read_operator(const std::string &text, const OreAlgebra &alg) {
    if (looks_like_recurrence(text))
        return parse_recurrence<R>(text, alg).op;
    return parse_operator<R>(text, alg);
}

template <class R> Json run_job(const JobSpec &job, StepBudget &budget) {
    const OreAlgebra &alg = job.alg;
    Json j = report_skeleton(job.command, alg, job.ring, job.input);
    auto need_inputs = [&](std::size_t n) {
        if (job.input.size() != n)
            throw ParseError("'" + job.command + "' expects " + std::to_string(n) + " input expression" +
                                 (n == 1 ? "" : "s") + ", got " + std::to_string(job.input.size()),
                             0);
    };
    if (job.command == "kratt") {
        if constexpr (!std::is_same_v<R, ZZ>) {
            throw UnsupportedShape("kratt works over ZZ only");
        } else {
            need_inputs(2);
            if (alg.kind != OreKind::shift)
                throw UnsupportedShape("kratt needs the shift algebra");
            PRecurrence A{read_operator<ZZ>(job.input[0], alg), {}};
            PRecurrence B{read_operator<ZZ>(job.input[1], alg), {}};
            CompleteOptions opt;
            opt.bound = job.max_order;
            kratt_json(j, check_krattenthaler(A, B, opt, budget), alg);
        }
        return j;
    }
    need_inputs(1);
    OreOperator<R> L = read_operator<R>(job.input[0], alg);
    if (job.command == "primitive") {
        primitive_json(j, is_r_primitive(L));
        return j;
    }
    if (L.order() < 1)
        throw UnsupportedShape("the operator must have order at least 1");
    if (job.command == "contract") {
        SubmoduleTower<R> tower(L, budget);
        ContractOptions opt;
        opt.bound = job.max_order;
        contract_json(j, contract(tower, opt), alg);
    } else if (job.command == "desingularize") {
        SubmoduleTower<R> tower(L, budget);
        int k = select_bound(tower, job.max_order);
        auto C = desingularized_operator(tower.ideal(k), L);
        j["generators"] = ops_json(std::vector<OreOperator<R>>{C.T});
        j["certificate"] = desing_certificate_json(C, alg);
    } else if (job.command == "complete") {
        SubmoduleTower<R> tower(L, budget);
        CompleteOptions opt;
        opt.bound = job.max_order;
        complete_json(j, completely_desingularize(tower, opt), alg);
    } else if (job.command == "removable") {
        if (job.factor.empty())
            throw ParseError("removable needs --factor", 0);
        OreOperator<R> p = parse_operator<R>(job.factor, alg);
        if (p.order() != 0)
            throw ParseError("--factor must be a polynomial", 0);
        removable_json(j, is_removable(L, p.lc(), job.max_order, true, budget), alg);
    } else {
        throw ParseError("unknown subcommand '" + job.command + "'", 0);
    }
    return j;
}

inline std::vector<std::string> read_stdin_inputs(std::istream &in, bool split_lines) {
    std::vector<std::string> out;
    std::string line, all;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        if (split_lines)
            out.push_back(line);
        else
            all += (all.empty() ? "" : " ") + line;
    }
    if (!split_lines && !all.empty())
        out.push_back(all);
    return out;
}

} // namespace detail

/// Runs one job; returns the exit code.
inline int run_job(const JobSpec &job, std::ostream &out, std::ostream &err) {
    try {
        if (job.step_budget == 0)
            throw ParseError("--step-budget must be positive", 0);
        if (job.format != "text" && job.format != "json")
            throw ParseError("--format must be text or json", 0);
        if (job.max_order && *job.max_order < 0)
            throw ParseError("--max-order must be nonnegative", 0);
        if (job.verbose)
            err << "algebra=" << job.alg.descriptor() << " ring=" << ring_name(job.ring)
                << " step-budget=" << job.step_budget
                << " max-order=" << (job.max_order ? std::to_string(*job.max_order) : "auto")
                << " format=" << job.format << "\n";
        StepBudget budget(job.step_budget);
        auto t0 = std::chrono::steady_clock::now();
        Json j = job.ring == RingKind::ZZ ? detail::run_job<ZZ>(job, budget) : detail::run_job<QtPoly>(job, budget);
        j["step_counts"]["reduction_steps"] = budget.used();
        j["step_counts"]["budget"] = budget.limit();
        if (job.verbose)
            j["timings"]["total_seconds"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (job.format == "json")
            out << j.dump(2) << "\n";
        else
            out << report_text(j);
        return exit_ok;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const ResourceError &e) {
        err << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const UnsupportedShape &e) {
        err << "unsupported: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const DomainError &e) {
        err << "unsupported: " << e.what() << "\n";
        return exit_unsupported;
    }
}

inline int run(int argc, const char *const *argv, std::istream &in = std::cin, std::ostream &out = std::cout,
               std::ostream &err = std::cerr) {
    CLI::App app{"Contraction ideals and complete desingularization of Ore operators"};
    app.name("orecontract");
    app.require_subcommand(1);
    app.fallthrough();

    JobSpec job;
    std::string algebra = "shift:n", ring = "ZZ";
    int max_order = -1;
    app.add_option("--algebra", algebra, "shift:<var> or diff:<var>")->capture_default_str();
    app.add_option("--ring", ring, "ZZ or QQt")->capture_default_str();
    app.add_option("--max-order", max_order, "order bound (contract/complete) or search bound (removable)");
    app.add_option("--format", job.format, "text or json")->capture_default_str();
    app.add_option("--step-budget", job.step_budget, "maximum number of reduction steps")->capture_default_str();
    app.add_flag("--verbose", job.verbose, "print defaults and timings");

    const std::vector<std::pair<std::string, std::string>> cmds = {
        {"contract", "basis of the contraction ideal"},
        {"desingularize", "a desingularized operator with its certificate"},
        {"complete", "a completely desingularized operator"},
        {"removable", "whether a factor of the leading coefficient is removable"},
        {"primitive", "whether the operator is R-primitive"},
        {"kratt", "leading-coefficient-n check for n! a_n b_n (two recurrences)"},
    };
    for (const auto &[name, help] : cmds) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("input", job.input, "operator or recurrence (read from stdin when absent)");
        if (name == "removable")
            sub->add_option("--factor", job.factor, "candidate factor p")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_parse;
    }
    job.command = app.get_subcommands().front()->get_name();
    try {
        job.alg = parse_algebra(algebra);
        job.ring = parse_ring(ring);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    }
    if (max_order >= 0)
        job.max_order = max_order;
    if (job.input.empty())
        job.input = detail::read_stdin_inputs(in, job.command == "kratt");
    return run_job(job, out, err);
}

} // namespace oc
