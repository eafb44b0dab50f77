#include "cli/commands.hpp"

#include <chrono>
#include <cstdint>
#include <optional>

#include <CLI11.hpp>

#include "cli/matrix_io.hpp"
#include "cli/report_json.hpp"
#include "pcore/campaign.hpp"
#include "pcore/errors.hpp"
#include "pcore/gen_inverse.hpp"
#include "pcore/theorem_suite.hpp"

namespace pcore::cli {

namespace {

struct Options {
    TolerancePolicy tol;
    std::string kind;
    std::string theorem;
    std::vector<std::string> inputs;
    std::optional<long long> split;
    std::optional<int> dim;
    std::vector<int> dims;
    int trials = 100;
    std::uint64_t seed = 0;
    bool timing = false;
};

void add_tolerance_flags(CLI::App* sub, Options& o) {
    sub->add_option("--rank-tol", o.tol.rank_rel_tol, "relative singular-value threshold");
    sub->add_option("--eq-tol", o.tol.eq_rel_tol, "relative equality threshold");
    sub->add_option("--res-tol", o.tol.residual_tol, "certificate acceptance threshold");
    sub->add_flag("--timing", o.timing, "include elapsed time in the report");
}

TheoremId theorem_from(const std::string& name) {
    const auto id = parse_theorem_id(name);
    if (!id) {
        throw ParameterError("unknown theorem id '" + name + "'");
    }
    return *id;
}

std::vector<Index> dims_from(const Options& o) {
    std::vector<Index> dims;
    for (int d : o.dims) {
        dims.push_back(d);
    }
    if (dims.empty()) {
        dims.push_back(o.dim.value_or(4));
    }
    for (Index d : dims) {
        if (d < 1) {
            throw ParameterError("dimensions must be positive");
        }
    }
    return dims;
}

ComplexMatrix single_matrix(const Options& o) {
    if (o.inputs.size() != 1) {
        throw InputError("compute expects exactly one --input");
    }
    const json j = read_json_file(o.inputs.front());
    if (is_matrix_file(j)) {
        return matrix_from_json(j);
    }
    return instance_from_json(j).at("a");
}

Instance instance_from_inputs(TheoremId id, const Options& o) {
    const std::vector<std::string>& symbols = theorem_symbols(id);
    Instance instance;
    if (o.inputs.size() == 1) {
        const json j = read_json_file(o.inputs.front());
        if (!is_matrix_file(j)) {
            instance = instance_from_json(j);
        } else if (!symbols.empty()) {
            instance.matrices[symbols.front()] = matrix_from_json(j);
        }
    } else {
        if (o.inputs.size() != symbols.size()) {
            throw InputError(std::string(to_string(id)) + " expects " +
                             std::to_string(symbols.size()) + " matrices, got " +
                             std::to_string(o.inputs.size()));
        }
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            instance.matrices[symbols[i]] = matrix_from_json(read_json_file(o.inputs[i]));
        }
    }
    for (const std::string& s : symbols) {
        if (!instance.matrices.count(s)) {
            throw InputError(std::string(to_string(id)) + " needs matrix '" + s + "'");
        }
    }
    if (o.split) {
        instance.split = static_cast<Index>(*o.split);
    }
    return instance;
}

int verdict_code(Verdict v) {
    switch (v) {
    case Verdict::pass: return kPass;
    case Verdict::fail: return kFail;
    case Verdict::hypotheses_not_met: return kHypothesesNotMet;
    }
    return kFail;
}

int cmd_compute(const Options& o, json& report) {
    const ComplexMatrix a = single_matrix(o);
    report["kind"] = o.kind;
    if (o.kind == "index") {
        report["index"] = index(a, o.tol);
        return kPass;
    }
    if (o.kind == "spectral_idempotent") {
        const ComplexMatrix p = spectral_idempotent(a, o.tol);
        report["matrix"] = matrix_to_json(p);
        report["idempotent_residual"] = relative_difference(p * p, p);
        return kPass;
    }
    if (o.kind == "star_dmp") {
        const StarDmp s = is_star_dmp(a, o.tol);
        report["holds"] = s.holds;
        report["exponent"] = s.exponent;
        return kPass;
    }
    const auto kind = parse_inverse_kind(o.kind);
    if (!kind) {
        throw ParameterError("unknown kind '" + o.kind + "'");
    }
    GenInverseResult r;
    switch (*kind) {
    case InverseKind::moore_penrose: r = moore_penrose(a, o.tol); break;
    case InverseKind::one_three: r = one_three(a, o.tol); break;
    case InverseKind::group: r = group_inverse(a, o.tol); break;
    case InverseKind::drazin: r = drazin(a, o.tol); break;
    case InverseKind::core: r = core_inverse(a, o.tol); break;
    case InverseKind::pseudo_core: r = pseudo_core(a, o.tol); break;
    }
    report["result"] = to_json(r);
    report["certified"] = r.certified(o.tol);
    return r.certified(o.tol) ? kPass : kFail;
}

int cmd_verify(const Options& o, json& report) {
    const TheoremId id = theorem_from(o.theorem);
    const TheoremReport r = run_check(id, instance_from_inputs(id, o), o.tol);
    report["report"] = to_json(r);
    return verdict_code(r.verdict());
}

int cmd_fuzz(const Options& o, json& report) {
    const TheoremId id = theorem_from(o.theorem);
    const std::vector<Index> dims = dims_from(o);
    const Campaign c = run_campaign(id, dims, o.trials, o.seed, o.tol);
    report["theorem"] = std::string(to_string(id));
    report["dims"] = dims;
    report["trials"] = o.trials;
    report["seed"] = o.seed;
    report["summary"] = to_json(c.summary);
    json instances = json::array();
    for (std::size_t i = 0; i < c.outcomes.size(); ++i) {
        const TrialOutcome& t = c.outcomes[i];
        instances.push_back(json{{"trial", i},
                                 {"seed", t.seed},
                                 {"degenerate", t.degenerate},
                                 {"verdict", std::string(to_string(t.report.verdict()))},
                                 {"report", to_json(t.report)}});
    }
    report["instances"] = std::move(instances);
    if (c.summary.fail > 0) {
        return kFail;
    }
    return c.summary.hypotheses_not_met > 0 ? kGeneratorIntegrity : kPass;
}

int cmd_generate(const Options& o, json& report) {
    const TheoremId id = theorem_from(o.theorem);
    const std::vector<Index> dims = dims_from(o);
    report["theorem"] = std::string(to_string(id));
    report["dims"] = dims;
    report["seed"] = o.seed;
    report["instance"] = instance_to_json(generate_instance(id, dims, o.seed));
    return kPass;
}

int cmd_example(const Options& o, json& report) {
    const TheoremReport r = reproduce_example_3_3(o.tol);
    report["report"] = to_json(r);
    return verdict_code(r.verdict());
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized inverses and their additive and block theorems"};
    app.name("pcore");
    app.require_subcommand(1);
    Options o;

    auto* compute = app.add_subcommand("compute", "compute one inverse or invariant");
    compute->add_option("--kind", o.kind,
                        "moore_penrose | one_three | group | drazin | core | pseudo_core | "
                        "index | spectral_idempotent | star_dmp")
        ->required();
    compute->add_option("--input", o.inputs, "matrix file")->required();
    add_tolerance_flags(compute, o);

    auto* verify = app.add_subcommand("verify", "check one theorem on a supplied instance");
    verify->add_option("--theorem", o.theorem)->required();
    verify->add_option("--input", o.inputs, "instance file, or one matrix file per symbol");
    verify->add_option("--split", o.split, "block split for L2_5b");
    add_tolerance_flags(verify, o);

    auto* fuzz = app.add_subcommand("fuzz", "seeded campaign over generated instances");
    fuzz->add_option("--theorem", o.theorem)->required();
    fuzz->add_option("--dim", o.dim);
    fuzz->add_option("--dims", o.dims)->delimiter(',');
    fuzz->add_option("--trials", o.trials);
    fuzz->add_option("--seed", o.seed);
    add_tolerance_flags(fuzz, o);

    auto* generate = app.add_subcommand("generate", "dump one generated instance");
    generate->add_option("--theorem", o.theorem)->required();
    generate->add_option("--dim", o.dim);
    generate->add_option("--dims", o.dims)->delimiter(',');
    generate->add_option("--seed", o.seed);
    add_tolerance_flags(generate, o);

    auto* example = app.add_subcommand("example-3-3", "reproduce the fixed 2x2 example");
    add_tolerance_flags(example, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    CLI::App* sub = app.get_subcommands().front();
    json report = report_header(sub->get_name(), o.tol);
    int code = kPass;
    try {
        o.tol.validate();
        if (sub == compute) {
            code = cmd_compute(o, report);
        } else if (sub == verify) {
            code = cmd_verify(o, report);
        } else if (sub == fuzz) {
            code = cmd_fuzz(o, report);
        } else if (sub == generate) {
            code = cmd_generate(o, report);
        } else {
            code = cmd_example(o, report);
        }
    } catch (const NoInverseError& e) {
        err << "pcore: " << e.what() << '\n';
        return kNoInverse;
    } catch (const InputError& e) {
        err << "pcore: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "pcore: " << e.what() << '\n';
        return kInputError;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.timing) {
        report["elapsed_seconds"] = elapsed;
    }
    out << report.dump(2) << '\n';
    return code;
}

} // namespace pcore::cli
