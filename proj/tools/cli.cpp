#include "cli.hpp"

#include "dsb/error.hpp"
#include "dsb/io/json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace dsb::cli {

using io::Json;

namespace {

Json load(const std::string& source) {
    std::string text;
    if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
        text = source;
    } else if (source == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(source);
        if (!in) throw InvalidInput("cannot read input: " + source);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error&) {
        throw InvalidInput("malformed json: parse error");
    }
}

struct Result {
    Json doc;
    int code = kDecided;
};

Result split_cmd(const std::string& input) { return {io::splitting_json(io::series_from_json(load(input)))}; }

Result verify_cmd(const std::string& input) {
    const Json j = load(input);
    const p1::LinearSeriesP1 v = io::series_from_json(j.contains("series") ? j.at("series") : j);
    const p1::GradedProfile prof = p1::graded_kernel_profile(v);
    const p1::SplittingType st = p1::splitting_from_profile(prof, v.degree(), v.rank());
    Json out = {{"profile", prof.kernel_dims}, {"twists", st.twists()}};
    bool ok = true;
    if (j.contains("twists")) ok &= j.at("twists") == Json(st.twists());
    if (j.contains("profile")) ok &= j.at("profile") == Json(prof.kernel_dims);
    out["verified"] = ok;
    return {out, ok ? kDecided : kInvalid};
}

Result linstab_cmd(const std::string& input, std::optional<int> max_base) {
    const Json j = load(input);
    linstab::LinStabVerdict v;
    if (j.contains("forms")) {
        const linstab::PlaneMap phi = io::plane_map_from_json(j);
        bool birational = phi.birational_flag().value_or(false);
        if (!phi.birational_flag()) birational = linstab::chordal_form(phi).birational;
        v = birational && !max_base ? linstab::plane_criterion(phi)
                                    : (max_base ? linstab::base_divisor_search(phi.series(), *max_base)
                                                : linstab::base_divisor_search(phi.series()));
    } else {
        const p1::LinearSeriesP1 s = io::series_from_json(j);
        v = max_base ? linstab::base_divisor_search(s, *max_base) : linstab::base_divisor_search(s);
    }
    return {io::to_json(v), v.status == linstab::LinStatus::unknown ? kUndecided : kDecided};
}

Result chordal_cmd(const std::string& input) {
    const linstab::PlaneMap phi = io::plane_map_from_json(load(input));
    const linstab::ChordalForm cf = linstab::chordal_form(phi);
    if (!cf.birational) return {io::to_json(cf, linstab::MultiplicityReport{}), kDecided};
    const linstab::MultiplicityReport rep = linstab::multiplicity_report(phi, cf);
    return {io::to_json(cf, rep), rep.exact ? kDecided : kUndecided};
}

Result certify_cmd(const std::string& input) {
    const auto [c, s] = io::invariants_from_json(load(input));
    const criteria::VerdictSet v = criteria::apply_rules(c, s);
    bool undecided = false;
    for (auto st : v.status) undecided |= st == criteria::Status::unknown;
    return {io::to_json(v), undecided ? kUndecided : kDecided};
}

Result fixtures_cmd() {
    Json list = Json::array();
    for (const auto& f : repro::fixtures()) list.push_back(io::to_json(f));
    return {{{"fixtures", list}}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dual span bundles on the projective line: splitting, linear stability and numerical criteria", "dsbtool"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output;
    app.add_option("--output", output, "Also write the JSON document to this file");

    std::string input;
    std::optional<int> max_base;
    int degree = 0, k = 0;
    std::uint64_t seed = repro::kStoredSeed;

    auto* split = app.add_subcommand("split", "Splitting type, slope and split verdicts of a series");
    split->add_option("input", input, "Series JSON (path, inline, or - for stdin)")->required();
    auto* verify = app.add_subcommand("verify", "Recompute the kernel profile of a split document and compare");
    verify->add_option("input", input, "Split output or series JSON")->required();
    auto* lin = app.add_subcommand("linstab", "Linear stability of a plane map or series");
    lin->add_option("input", input, "PlaneMap or series JSON")->required();
    lin->add_option("--max-base-degree", max_base, "Largest base divisor degree searched");
    auto* chordal = app.add_subcommand("chordal", "Identified parameters and multiplicities of a plane map");
    chordal->add_option("input", input, "PlaneMap JSON")->required();
    auto* certify = app.add_subcommand("certify", "Apply the numerical rules to curve and series invariants");
    certify->add_option("input", input, "Invariants JSON")->required();
    auto* reproduce = app.add_subcommand("reproduce", "Regenerate an example");
    reproduce->require_subcommand(1);
    auto* s8 = reproduce->add_subcommand("section8", "Linearly stable plane series with unstable kernel bundle");
    s8->add_option("--degree", degree, "Odd degree at least 5")->required();
    s8->add_option("--seed", seed, "Random seed");
    auto* s3 = reproduce->add_subcommand("slope3", "Invariants of the slope -3 family");
    s3->add_option("--k", k, "Family index, at least 2")->required();
    auto* fx = app.add_subcommand("fixtures", "List the stored fixtures with expected outputs");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kDecided;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInvalid;
    }

    Result res;
    try {
        if (*split) res = split_cmd(input);
        else if (*verify) res = verify_cmd(input);
        else if (*lin) res = linstab_cmd(input, max_base);
        else if (*chordal) res = chordal_cmd(input);
        else if (*certify) res = certify_cmd(input);
        else if (*s8) res = {io::to_json(repro::plane_counterexample(degree, seed))};
        else if (*s3) res = {io::to_json(repro::slope3_family(k))};
        else if (*fx) res = fixtures_cmd();
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const CeilingExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }

    const std::string text = res.doc.dump(2) + "\n";
    out << text;
    if (!output.empty()) {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            err << "error: cannot write output: " << output << "\n";
            return kInvalid;
        }
        file << text;
    }
    return res.code;
}

} // namespace dsb::cli
