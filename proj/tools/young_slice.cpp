#include "young/friedgut.hpp"
#include "young/io.hpp"
#include "young/operators.hpp"
#include "young/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace young;

namespace {

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct SliceArgs {
    std::vector<int> slice;
    std::string input;
    std::string output;
};

void add_slice_options(CLI::App* cmd, SliceArgs& args, bool needs_input = true) {
    cmd->add_option("--slice", args.slice, "N K")->expected(2)->required();
    auto* in = cmd->add_option("--input", args.input, "input JSON file");
    if (needs_input)
        in->required();
    cmd->add_option("--output", args.output, "output JSON file (default: stdout)");
}

void emit(const SliceArgs& args, const json& doc) {
    if (args.output.empty())
        std::cout << doc.dump(2) << '\n';
    else
        io::write_json_file(args.output, doc);
}

void check_header(const SliceArgs& args, const json& doc) {
    const int n = args.slice[0], k = args.slice[1];
    if (doc.value("n", -1) != n || doc.value("k", -1) != k)
        throw io::InputError("file describes a different slice than --slice " + std::to_string(n) +
                             " " + std::to_string(k));
}

SliceFunction read_function(const SliceArgs& args) {
    const json doc = io::read_json_file(args.input);
    check_header(args, doc);
    return io::function_from_json(doc);
}

json basis_rows(int n, int d, bool with_chi) {
    json rows = json::array();
    for (const auto& b : enumerate_top_sets(n, d)) {
        json row = {{"top_set", b.entries()},
                    {"companion", companion_sequence(b).entries()},
                    {"c", c_coefficient(b).get_str()}};
        if (with_chi)
            row["chi"] = chi_top(b).to_string();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sequence_string(const std::vector<int>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out + ")";
}

std::vector<Rational> parse_profile(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(parse_rational(item));
    return out;
}

json junta_to_json(const JuntaReport& r) {
    json matching = json::array();
    for (const auto& [i, j] : r.matching)
        matching.push_back({i, j});
    std::vector<int> permutation(r.permutation.begin() + 1, r.permutation.end());
    return {{"important_set", r.important_set},
            {"matching", std::move(matching)},
            {"tau", format_rational(r.tau)},
            {"permutation", permutation},
            {"coordinate_count", r.coordinate_count},
            {"distance", format_rational(r.distance)},
            {"rounding_bound", format_rational(r.rounding_bound)},
            {"junta", io::function_to_json(r.junta)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Young basis on the slice: expansions, operators and junta approximation"};
    app.require_subcommand(1);

    int basis_n = 0, basis_d = 0;
    bool basis_expand = false;
    std::string basis_format = "text";
    auto* basis = app.add_subcommand("basis", "list the top sets of size d with phi(B) and c_B");
    basis->add_option("--n", basis_n)->required();
    basis->add_option("--d", basis_d)->required();
    basis->add_flag("--expand", basis_expand, "also print chi_B");
    basis->add_option("--format", basis_format)->check(CLI::IsMember({"text", "json"}));

    SliceArgs expand_args, synth_args, influence_args, noise_args, spectrum_args, junta_args;
    auto* expand_cmd = app.add_subcommand("expand", "function file -> expansion file");
    add_slice_options(expand_cmd, expand_args);
    auto* synth_cmd = app.add_subcommand("synthesize", "expansion file -> function file");
    add_slice_options(synth_cmd, synth_args);
    auto* influence_cmd = app.add_subcommand("influence", "pairwise and total influences");
    add_slice_options(influence_cmd, influence_args);

    double noise_t = 0;
    auto* noise_cmd = app.add_subcommand("noise", "apply exp(-tL) to a function or expansion file");
    add_slice_options(noise_cmd, noise_args);
    noise_cmd->add_option("--t", noise_t)->required();

    std::string profile_text;
    std::string spectrum_format = "text";
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of an intersection profile");
    add_slice_options(spectrum_cmd, spectrum_args, false);
    spectrum_cmd->add_option("--profile", profile_text, "w0,...,wk")->required();
    spectrum_cmd->add_option("--format", spectrum_format)->check(CLI::IsMember({"text", "json"}));

    std::string tau_text, eps_text;
    auto* junta_cmd = app.add_subcommand("junta", "junta approximation of a Boolean function");
    add_slice_options(junta_cmd, junta_args);
    auto* tau_opt = junta_cmd->add_option("--tau", tau_text);
    auto* eps_opt = junta_cmd->add_option("--eps", eps_text);
    tau_opt->excludes(eps_opt);

    std::string suite = "all";
    int max_n = 6;
    auto* verify_cmd = app.add_subcommand("verify", "run the built-in property suites");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"orthogonality", "norms", "eigen", "junta", "all"}));
    verify_cmd->add_option("--max-n", max_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*basis) {
            if (basis_n < 0 || basis_d < 0 || 2 * basis_d > basis_n)
                throw InvalidInput("need 0 <= d <= n/2");
            if (basis_format == "json") {
                std::cout << basis_rows(basis_n, basis_d, basis_expand).dump(2) << '\n';
            } else {
                for (const auto& row : basis_rows(basis_n, basis_d, basis_expand)) {
                    std::cout << sequence_string(row["top_set"].get<std::vector<int>>())
                              << "\tphi=" << sequence_string(row["companion"].get<std::vector<int>>())
                              << "\tc=" << row["c"].get<std::string>();
                    if (basis_expand)
                        std::cout << "\tchi=" << row["chi"].get<std::string>();
                    std::cout << '\n';
                }
            }
        } else if (*expand_cmd) {
            emit(expand_args, io::expansion_to_json(expand(read_function(expand_args))));
        } else if (*synth_cmd) {
            const json doc = io::read_json_file(synth_args.input);
            check_header(synth_args, doc);
            emit(synth_args, io::function_to_json(synthesize(io::expansion_from_json(doc))));
        } else if (*influence_cmd) {
            const SliceFunction f = read_function(influence_args);
            json pairs = json::array();
            for (int i = 1; i <= f.n(); ++i)
                for (int j = i + 1; j <= f.n(); ++j)
                    pairs.push_back({{"pair", {i, j}},
                                     {"value", format_rational(influence_pair(f, i, j))}});
            const Moments mo = moments(expand(f));
            emit(influence_args, {{"n", f.n()},
                                  {"k", f.k()},
                                  {"pairs", std::move(pairs)},
                                  {"total", format_rational(total_influence(f))},
                                  {"variance", format_rational(mo.variance)}});
        } else if (*noise_cmd) {
            const json doc = io::read_json_file(noise_args.input);
            check_header(noise_args, doc);
            if (doc.contains("coeffs")) {
                emit(noise_args, io::real_expansion_to_json(noise(io::expansion_from_json(doc), noise_t)));
            } else {
                const SliceFunction f = io::function_from_json(doc);
                emit(noise_args, io::real_function_to_json(f.n(), f.k(),
                                                           synthesize(noise(expand(f), noise_t))));
            }
        } else if (*spectrum_cmd) {
            const int n = spectrum_args.slice[0], k = spectrum_args.slice[1];
            const IntersectionProfile profile(n, k, parse_profile(profile_text));
            const auto theta = scheme_eigenvalues(profile);
            json rows = json::array();
            for (int d = 0; d <= k; ++d)
                rows.push_back({{"degree", d},
                                {"eigenvalue", format_rational(theta[static_cast<std::size_t>(d)])},
                                {"multiplicity", count_top_sets(n, d).get_str()}});
            if (spectrum_format == "json" || !spectrum_args.output.empty()) {
                emit(spectrum_args, {{"n", n}, {"k", k}, {"spectrum", std::move(rows)}});
            } else {
                std::cout << "degree\teigenvalue\tmultiplicity\n";
                for (const auto& r : rows)
                    std::cout << r["degree"].get<int>() << '\t' << r["eigenvalue"].get<std::string>()
                              << '\t' << r["multiplicity"].get<std::string>() << '\n';
            }
        } else if (*junta_cmd) {
            if (tau_text.empty() == eps_text.empty())
                throw InvalidInput("junta needs exactly one of --tau or --eps");
            const SliceFunction f = read_function(junta_args);
            const JuntaReport r = tau_text.empty()
                                      ? junta_for_epsilon(f, parse_rational(eps_text))
                                      : junta_approximate(f, parse_rational(tau_text));
            emit(junta_args, junta_to_json(r));
        } else if (*verify_cmd) {
            const auto rows = run_checks(suite, max_n);
            std::cout << format_checks(rows);
            for (const auto& r : rows)
                if (!r.passed)
                    return kExitVerificationFailed;
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
