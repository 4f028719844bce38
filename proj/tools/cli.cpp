// Copyright 2026 The sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sepscope/criteria.hpp"
#include "sepscope/error.hpp"
#include "sepscope/io.hpp"
#include "sepscope/states.hpp"
#include "sepscope/truncation.hpp"
#include "sepscope/verification.hpp"

namespace sepscope::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

// Raised for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StateFlags {
    std::string family;
    std::string spec_path;
    std::map<std::string, double> values;
    std::map<std::string, CLI::Option*> options;

    void add_to(CLI::App* app) {
        app->add_option("--family", family, "State family (see 'sepscope families')");
        app->add_option("--spec", spec_path, "State spec file of key=value lines")->check(CLI::ExistingFile);
        static const std::pair<const char*, const char*> kParams[] = {
            {"alpha", "rho_alpha / rho_t_alpha parameter"},
            {"t", "mixing weight"},
            {"c", "werner_mc / rho_eps_c parameter"},
            {"m", "werner_mc / rho_eps_c block size"},
            {"eps", "rho_eps_c tail weight"},
            {"q1", "shift-mixture weight 1"},
            {"q2", "shift-mixture weight 2"},
            {"q3", "shift-mixture weight 3"},
            {"q4", "shift-mixture weight 4"},
            {"r", "geometric tail ratio"},
        };
        for (const auto& [name, help] : kParams) {
            options[name] = app->add_option(std::string("--") + name, values[name], help);
        }
    }

    std::map<std::string, double> given() const {
        std::map<std::string, double> out;
        for (const auto& [name, opt] : options)
            if (opt->count() > 0) out[name] = values.at(name);
        return out;
    }

    bool any_state_input() const { return !family.empty() || !spec_path.empty() || !given().empty(); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << text;
}

// --family or --spec, then parameter flags and --dim on top.
StateSpec resolve_spec(const StateFlags& flags, std::optional<std::size_t> dim) {
    if (!flags.family.empty() && !flags.spec_path.empty()) throw UsageError("give either --family or --spec, not both");
    StateSpec spec;
    if (!flags.spec_path.empty()) {
        spec = parse_state_spec(read_file(flags.spec_path));
    } else if (!flags.family.empty()) {
        const auto family = parse_family(flags.family);
        if (!family) throw UsageError("unknown family '" + flags.family + "'");
        spec.family = *family;
        spec.truncation_dim = default_dimension(*family);
    } else {
        throw UsageError("a state needs --family or --spec");
    }
    for (const auto& [key, value] : flags.given()) spec.params[key] = value;
    if (dim) spec.truncation_dim = *dim;
    return spec;
}

std::string verdict_text(Verdict v, const char* reason) {
    return v == Verdict::Entangled ? std::string("ENTANGLED (") + reason + ")"
                                   : "inconclusive (criterion is necessary-only)";
}

void print_report(std::ostream& out, const std::string& label, BipartiteDims dims, const CriterionReport& r) {
    out << "state                   " << label << "\n"
        << "dimensions              " << dims.dA << " x " << dims.dB << "\n"
        << "realignment trace norm  " << format_number(r.realignment_trace_norm) << "\n"
        << "ccn                     " << format_number(r.ccn) << "\n"
        << "ppt min eigenvalue      " << format_number(r.ppt_min_eigenvalue) << "\n"
        << "symmetric               " << (r.is_symmetric ? "yes" : "no") << "\n"
        << "operator schmidt rank   " << r.schmidt_rank << "\n"
        << "purity                  " << format_number(r.purity) << "\n"
        << "rccn                    " << verdict_text(r.rccn_verdict, "norm > 1") << "\n"
        << "ppt                     " << verdict_text(r.ppt_verdict, "negative partial transpose") << "\n";
}

GridAxis parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 4 || parts[0].empty()) throw UsageError("--grid expects param:lo:hi:n, got '" + text + "'");
    auto number = [&](const std::string& s) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("--grid: '" + s + "' is not a number");
        return v;
    };
    const double lo = number(parts[1]);
    const double hi = number(parts[2]);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), n);
    if (ec != std::errc{} || ptr != parts[3].data() + parts[3].size()) {
        throw UsageError("--grid: point count '" + parts[3] + "' is not a non-negative integer");
    }
    if (n == 0) throw UsageError("--grid '" + text + "' is empty");
    return {parts[0], linspace(lo, hi, n)};
}

int analyze(const StateFlags& flags, const std::string& file, const std::optional<std::size_t>& dim,
            const std::string& csv, std::ostream& out, std::ostream& err, const CLI::App& sub) {
    const int sources = static_cast<int>(!file.empty()) + static_cast<int>(flags.any_state_input());
    if (sources != 1) {
        err << "error: analyze needs exactly one input: --file, or --family/--spec with parameters\n\n"
            << sub.help();
        return kUsageError;
    }

    std::string family_label;
    std::string params_label;
    std::optional<DensityMatrix> rho;
    if (!file.empty()) {
        if (dim) throw UsageError("--dim applies to generated states, not --file");
        rho = parse_density_matrix(read_file(file));
        family_label = "file";
        params_label = "path=" + file;
    } else {
        const auto spec = resolve_spec(flags, dim);
        rho = build_state(spec);
        family_label = std::string(family_name(spec.family));
        params_label = format_params(spec.params);
    }

    const auto report = full_report(*rho);
    const auto dims = rho->dims();
    if (csv != "-") {
        const std::string label = params_label.empty() ? family_label : family_label + " " + params_label;
        print_report(out, label, dims, report);
    }
    if (!csv.empty()) {
        write_text(csv, emit_report_csv({{family_label, params_label, dims.dA, report}}), out);
    }
    return kSuccess;
}

int generate(const StateFlags& flags, const std::optional<std::size_t>& dim, const std::string& output,
             bool as_spec, std::ostream& out) {
    const auto spec = resolve_spec(flags, dim);
    const auto rho = build_state(spec);
    write_text(output, as_spec ? emit_state_spec(spec) : emit_matrix_file(rho.matrix(), rho.dims()), out);
    return kSuccess;
}

int sweep(const StateFlags& flags, const std::vector<std::string>& grids, const std::vector<std::size_t>& dims,
          const std::string& csv, std::ostream& out, std::ostream& err) {
    SweepPlan plan;
    plan.spec_template = resolve_spec(flags, std::nullopt);
    const auto allowed = family_parameters(plan.spec_template.family);
    for (const auto& g : grids) {
        auto axis = parse_grid(g);
        if (std::find(allowed.begin(), allowed.end(), axis.parameter) == allowed.end()) {
            throw UsageError("family " + std::string(family_name(plan.spec_template.family)) +
                             " has no parameter '" + axis.parameter + "'");
        }
        for (const auto& existing : plan.varying) {
            if (existing.parameter == axis.parameter) throw UsageError("parameter '" + axis.parameter + "' gridded twice");
        }
        plan.varying.push_back(std::move(axis));
    }
    plan.dims = dims.empty() ? std::vector<std::size_t>{plan.spec_template.truncation_dim} : dims;
    plan.spec_template.truncation_dim = plan.dims.front();
    plan.validate();

    const auto result = run_sweep(plan);
    std::size_t failures = 0;
    for (const auto& row : result.rows) {
        if (row.report) continue;
        ++failures;
        err << "warning: " << format_params(row.params) << " dim=" << row.dim << ": " << row.error << "\n";
    }
    write_text(csv, emit_report_csv(report_rows(result)), out);
    if (csv != "-") {
        out << "wrote " << result.rows.size() << " rows to " << csv << "\n";
    }
    return failures == result.rows.size() ? kUsageError : kSuccess;
}

int verify(std::uint64_t seed, std::ostream& out) {
    VerificationOptions options;
    options.seed = seed;
    const auto results = run_verification(options);
    std::size_t passed = 0;
    for (const auto& r : results) {
        out << format_anchor(r);
        if (r.passed) ++passed;
    }
    out << passed << " of " << results.size() << " anchors passed\n";
    return passed == results.size() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Realignment (RCCN) and PPT separability diagnostics for bipartite states"};
    app.name("sepscope");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    StateFlags analyze_flags;
    std::string analyze_file;
    std::optional<std::size_t> analyze_dim;
    std::string analyze_csv;
    auto* analyze_cmd = app.add_subcommand("analyze", "Report criterion scalars and verdicts for one state");
    analyze_flags.add_to(analyze_cmd);
    analyze_cmd->add_option("--file", analyze_file, "Density matrix file")->check(CLI::ExistingFile);
    analyze_cmd->add_option("--dim", analyze_dim, "Local truncation dimension");
    analyze_cmd->add_option("--csv", analyze_csv, "Also write the report as CSV ('-' for stdout only)");

    StateFlags generate_flags;
    std::optional<std::size_t> generate_dim;
    std::string generate_output = "-";
    bool generate_spec = false;
    auto* generate_cmd = app.add_subcommand("generate", "Write a family state as a matrix file");
    generate_flags.add_to(generate_cmd);
    generate_cmd->add_option("--dim", generate_dim, "Local truncation dimension");
    generate_cmd->add_option("-o,--output", generate_output, "Output path ('-' for stdout)");
    generate_cmd->add_flag("--as-spec", generate_spec, "Write the state spec instead of the matrix");

    StateFlags sweep_flags;
    std::vector<std::string> sweep_grids;
    std::vector<std::size_t> sweep_dims;
    std::string sweep_csv = "-";
    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a parameter grid across truncation dimensions");
    sweep_flags.add_to(sweep_cmd);
    sweep_cmd->add_option("--grid", sweep_grids, "param:lo:hi:n, repeatable")->take_all();
    sweep_cmd->add_option("--dim", sweep_dims, "Comma-separated, strictly increasing dimensions")->delimiter(',');
    sweep_cmd->add_option("--csv", sweep_csv, "CSV output path ('-' for stdout)");

    std::uint64_t verify_seed = VerificationOptions{}.seed;
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the acceptance anchors; exit 1 if any fails");
    verify_cmd->add_option("--seed", verify_seed, "Seed for the randomized anchors");

    auto* families_cmd = app.add_subcommand("families", "List state families and their parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    try {
        if (analyze_cmd->parsed()) {
            return analyze(analyze_flags, analyze_file, analyze_dim, analyze_csv, out, err, *analyze_cmd);
        }
        if (generate_cmd->parsed()) return generate(generate_flags, generate_dim, generate_output, generate_spec, out);
        if (sweep_cmd->parsed()) return sweep(sweep_flags, sweep_grids, sweep_dims, sweep_csv, out, err);
        if (verify_cmd->parsed()) return verify(verify_seed, out);
        if (families_cmd->parsed()) {
            for (Family f : all_families()) {
                out << family_name(f);
                for (const auto& p : family_parameters(f)) out << ' ' << p;
                out << "\n";
            }
            return kSuccess;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace sepscope::cli
