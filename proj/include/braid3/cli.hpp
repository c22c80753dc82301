#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braid3/suite.hpp"

namespace braid3::cli {

/// Stable exit codes.
enum ExitCode : int { ok = 0, check_failed = 1, usage = 2, domain = 3 };

enum class Format { text, json, latex };

struct Options {
    Format format = Format::text;
    double epsilon = 1e-9;
    std::uint64_t seed = 20190704;
    int trials = 32;
    std::string raw_path;
    std::vector<std::string> positional;
};

namespace detail {

inline Representation load(const Options& o, std::size_t index = 0) {
    if (!o.raw_path.empty() && index == 0) {
        std::ifstream in(o.raw_path);
        if (!in) throw ParseError(0, "cannot open " + o.raw_path);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ParseError(e.byte, "invalid JSON in " + o.raw_path);
        }
        try {
            return representation_from_json(j);
        } catch (const json::exception& e) {
            throw ParseError(0, std::string("malformed representation: ") + e.what());
        }
    }
    std::size_t k = o.raw_path.empty() ? index : index - 1;
    if (k >= o.positional.size()) throw ParseError(0, "missing family spec");
    return build(parse_family(o.positional[k]));
}

inline void print_rep(std::ostream& out, const Representation& r, Format f) {
    if (f == Format::json)
        out << to_json(r).dump(2) << "\n";
    else if (f == Format::latex)
        out << latex(r);
    else
        out << text(r);
}

inline int show(const Options& o, std::ostream& out) {
    print_rep(out, load(o), o.format);
    return ok;
}

inline int verify(const Options& o, std::ostream& out) {
    Representation r = load(o);
    VerificationReport v = verify_braid_relations(r);
    if (o.format == Format::json)
        out << json{{"representation", r.meta().label}, {"report", to_json(v)}}.dump(2) << "\n";
    else
        out << r.meta().label << "\n" << text(v);
    return v.overall ? ok : check_failed;
}

inline int decompose(const Options& o, std::ostream& out) {
    Representation r = load(o);
    try {
        DecompositionReport d = split_once(r);
        if (o.format == Format::json)
            out << to_json(d).dump(2) << "\n";
        else if (o.format == Format::latex) {
            out << "% basis change\n" << latex(d.basis_change) << "\n";
            for (const auto& b : d.blocks) out << "% block " << b.meta().label << "\n" << latex(b);
        } else
            out << text(d);
        return ok;
    } catch (const DecompositionError& e) {
        if (o.format == Format::json)
            out << json{{"representation", r.meta().label}, {"error", e.what()}}.dump(2) << "\n";
        else
            out << r.meta().label << ": " << e.what() << "\n";
        return check_failed;
    }
}

inline int specialize_cmd(const Options& o, std::ostream& out) {
    if (o.positional.size() < (o.raw_path.empty() ? 2u : 1u)) throw ParseError(0, "specialize needs SPEC and POINT");
    Scalar point = parse_scalar(o.positional.back());
    if (point.field() == Field::ratfunc) throw ParseError(0, "specialization point must be a constant");
    print_rep(out, specialize(load(o), point), o.format);
    return ok;
}

inline int isomorphic(const Options& o, std::ostream& out) {
    Representation a = load(o, 0);
    Representation b = load(o, 1);
    IsomorphismResult res = is_isomorphic(a, b, {o.seed, o.trials});
    if (o.format == Format::json) {
        json j{{"verdict", verdict_name(res.verdict)}, {"intertwiner_dimension", res.intertwiner_dimension}};
        if (res.conjugator) j["conjugator"] = to_json(*res.conjugator);
        out << j.dump(2) << "\n";
    } else {
        out << verdict_name(res.verdict) << " (intertwiner space dimension " << res.intertwiner_dimension << ")\n";
        if (res.conjugator) out << "conjugator C with C*a(s) = b(s)*C:\n" << text(*res.conjugator);
    }
    return res.verdict == Verdict::isomorphic ? ok : check_failed;
}

inline int suite(const Options& o, std::ostream& out) {
    SuiteOptions so;
    so.seed = o.seed;
    so.epsilon = o.epsilon;
    SuiteResult r = run_suite(so);
    if (o.format == Format::json)
        out << to_json(r).dump(2) << "\n";
    else
        out << text(r);
    return r.exit_code();
}

} // namespace detail

/// Entry point shared by the executable and the tests. args excludes argv[0].
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact representations of the braid group B3", "braid3"};
    app.require_subcommand(1);
    Options o;
    std::string format = "text";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--epsilon", o.epsilon, "float equality tolerance (scale-relative)");
        sub->add_option("--seed", o.seed, "seed for randomized checks");
    };
    auto* show = app.add_subcommand("show", "print generator images of a family");
    show->add_option("spec", o.positional, "family spec, e.g. burau(z)")->required();
    auto* verify = app.add_subcommand("verify", "check the braid relations");
    verify->add_option("spec", o.positional, "family spec");
    verify->add_option("--raw", o.raw_path, "JSON representation file");
    auto* decompose = app.add_subcommand("decompose", "split off a one-dimensional summand");
    decompose->add_option("spec", o.positional, "family spec");
    decompose->add_option("--raw", o.raw_path, "JSON representation file");
    auto* spec = app.add_subcommand("specialize", "substitute a point for z");
    spec->add_option("args", o.positional, "SPEC POINT (POINT: 5/7, omega, or a decimal)");
    spec->add_option("--raw", o.raw_path, "JSON representation file");
    auto* iso = app.add_subcommand("isomorphic", "decide isomorphism via intertwiners");
    iso->add_option("specs", o.positional, "two family specs")->expected(2)->required();
    iso->add_option("--trials", o.trials, "random combinations tried for multi-dimensional intertwiner spaces");
    auto* suite = app.add_subcommand("suite", "run the full replication checklist");
    for (auto* s : {show, verify, decompose, spec, iso, suite}) common(s);

    std::vector<std::string> argv_store{"braid3"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }
    o.format = format == "json" ? Format::json : format == "latex" ? Format::latex : Format::text;
    set_float_epsilon(o.epsilon);

    try {
        if (*show) return detail::show(o, out);
        if (*verify) return detail::verify(o, out);
        if (*decompose) return detail::decompose(o, out);
        if (*spec) return detail::specialize_cmd(o, out);
        if (*iso) return detail::isomorphic(o, out);
        if (*suite) return detail::suite(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const UndecidedError& e) {
        err << e.what() << "\n";
        return check_failed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return domain;
    }
    return usage;
}

} // namespace braid3::cli
