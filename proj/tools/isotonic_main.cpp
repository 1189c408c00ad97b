// isotonic: spectra, wavefunctions and table reproduction for the isotonic oscillator.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "isotonic/cli/commands.hpp"
#include "isotonic/cli/manifest.hpp"

namespace {

using isotonic::cli::Format;
using isotonic::cli::RunManifest;

struct Inputs {
    std::map<std::string, double> reals;
    std::map<std::string, int> ints;
    std::map<std::string, std::string> strings;
    std::map<std::string, bool> flags;
};

// Registers `--name` on `cmd`; the value lands in `in` only if the flag is given, so
// the manifest records exactly what the user typed.
void real(CLI::App* cmd, Inputs& in, const std::string& name, const std::string& help) {
    cmd->add_option_function<double>("--" + name, [&in, name](double v) { in.reals[name] = v; }, help);
}
void integer(CLI::App* cmd, Inputs& in, const std::string& name, const std::string& help) {
    cmd->add_option_function<int>("--" + name, [&in, name](int v) { in.ints[name] = v; }, help);
}
void string(CLI::App* cmd, Inputs& in, const std::string& name, const std::string& help) {
    cmd->add_option_function<std::string>("--" + name, [&in, name](const std::string& v) { in.strings[name] = v; },
                                          help);
}
void flag(CLI::App* cmd, Inputs& in, const std::string& name, const std::string& help) {
    cmd->add_flag_callback("--" + name, [&in, name] { in.flags[name] = true; }, help);
}

void physics(CLI::App* cmd, Inputs& in) {
    real(cmd, in, "g", "barrier strength g");
    real(cmd, in, "m", "barrier exponent m, sets M g / hbar^2 = m(m+1)");
    real(cmd, in, "mass", "mass M (default 1)");
    real(cmd, in, "omega", "angular frequency (default 1)");
    real(cmd, in, "hbar", "hbar (default 1)");
}

void dirac(CLI::App* cmd, Inputs& in) {
    real(cmd, in, "cs", "spin-symmetry constant C_s (default 0)");
    real(cmd, in, "cps", "pseudospin-symmetry constant C_ps (default 0)");
    real(cmd, in, "c", "speed of light (default 1)");
}

void grid(CLI::App* cmd, Inputs& in) {
    real(cmd, in, "x-min", "first sample (default 0)");
    real(cmd, in, "x-max", "last sample (default 6)");
    integer(cmd, in, "points", "number of samples (default 241)");
    flag(cmd, in, "compare-harmonic", "add the harmonic-oscillator column");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of the isotonic oscillator"};
    app.require_subcommand(1);

    Inputs in;
    std::string format = "csv";
    std::string manifest_path;
    std::string replay_path;

    const auto common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--manifest", manifest_path, "also write the run manifest as JSON to this path");
    };

    auto* spectrum = app.add_subcommand("spectrum", "energy levels n = 0..n-max");
    string(spectrum, in, "branch", "nonrel, harmonic, spin, pseudospin or klein-gordon (default nonrel)");
    integer(spectrum, in, "n-max", "highest quantum number (default 10)");
    physics(spectrum, in);
    dirac(spectrum, in);
    string(spectrum, in, "out", "output file (default stdout)");
    common(spectrum);

    auto* wavefunction = app.add_subcommand("wavefunction", "sampled eigenfunction");
    string(wavefunction, in, "branch", "nonrel, spin or pseudospin (default nonrel)");
    integer(wavefunction, in, "n", "quantum number (default 0)");
    physics(wavefunction, in);
    dirac(wavefunction, in);
    grid(wavefunction, in);
    string(wavefunction, in, "out", "output file (default stdout)");
    common(wavefunction);

    auto* potential = app.add_subcommand("potential", "sampled potential curve");
    physics(potential, in);
    grid(potential, in);
    string(potential, in, "out", "output file (default stdout)");
    common(potential);

    auto* tables = app.add_subcommand("reproduce-tables", "recompute the published eigenvalue tables");
    string(tables, in, "out", "directory for table1.csv and table2.csv (default .)");
    common(tables);

    auto* validate = app.add_subcommand("validate", "run validation suites, JSON report");
    string(validate, in, "suite", "identities, orthonormality, ode, oracle, duality, limit, tables or all");
    string(validate, in, "out", "output file (default stdout)");
    validate->add_option("--manifest", manifest_path, "also write the run manifest as JSON to this path");

    auto* replay = app.add_subcommand("replay", "re-run a saved manifest");
    replay->add_option("manifest", replay_path, "manifest JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : isotonic::cli::InvalidArguments;
    }

    RunManifest m;
    if (replay->parsed()) {
        std::ifstream file(replay_path);
        if (!file) {
            std::cerr << "error: cannot read " << replay_path << '\n';
            return isotonic::cli::InvalidArguments;
        }
        try {
            m = RunManifest::from_json(nlohmann::json::parse(file));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return isotonic::cli::InvalidArguments;
        }
    } else {
        m.command = app.get_subcommands().front()->get_name();
        m.output_format = format == "json" ? Format::Json : Format::Csv;
        for (const auto& [k, v] : in.reals) m.parameters[k] = v;
        for (const auto& [k, v] : in.ints) m.parameters[k] = v;
        for (const auto& [k, v] : in.strings) m.parameters[k] = v;
        for (const auto& [k, v] : in.flags) m.parameters[k] = v;
    }

    if (!manifest_path.empty()) {
        std::ofstream file(manifest_path, std::ios::binary);
        file << m.to_json().dump(2) << '\n';
        if (!file) {
            std::cerr << "error: cannot write " << manifest_path << '\n';
            return isotonic::cli::NumericalFailure;
        }
    }
    return isotonic::cli::run(m, std::cout, std::cerr);
}
