#include "isotonic/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <string>
#include <vector>

#include "isotonic/cli/format.hpp"
#include "isotonic/error.hpp"
#include "isotonic/nonrel.hpp"
#include "isotonic/rel.hpp"
#include "isotonic/tables.hpp"

namespace isotonic::cli {

namespace {

using nlohmann::json;

constexpr double table_tolerance = 5e-7;

double number(const json& params, const char* key, double fallback) {
    if (!params.contains(key)) return fallback;
    const json& v = params[key];
    if (!v.is_number()) throw DomainError(std::string("parameter '") + key + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw DomainError(std::string("parameter '") + key + "' must be finite");
    return x;
}

int integer(const json& params, const char* key, int fallback) {
    if (!params.contains(key)) return fallback;
    const json& v = params[key];
    if (!v.is_number_integer()) throw DomainError(std::string("parameter '") + key + "' must be an integer");
    return v.get<int>();
}

std::string text(const json& params, const char* key, const std::string& fallback) {
    if (!params.contains(key)) return fallback;
    const json& v = params[key];
    if (!v.is_string()) throw DomainError(std::string("parameter '") + key + "' must be a string");
    return v.get<std::string>();
}

bool flag(const json& params, const char* key) {
    if (!params.contains(key)) return false;
    const json& v = params[key];
    if (!v.is_boolean()) throw DomainError(std::string("parameter '") + key + "' must be true or false");
    return v.get<bool>();
}

nonrel::OscillatorParams oscillator(const json& params) {
    nonrel::OscillatorParams p;
    p.M = number(params, "mass", 1.0);
    p.omega = number(params, "omega", 1.0);
    p.hbar = number(params, "hbar", 1.0);
    if (params.contains("m")) {
        if (params.contains("g")) throw DomainError("--g and --m are mutually exclusive");
        // M g / hbar^2 = m (m + 1)
        const double m = number(params, "m", 0.0);
        p.g = m * (m + 1.0) * p.hbar * p.hbar / p.M;
    } else {
        p.g = number(params, "g", 0.0);
    }
    p.validate();
    return p;
}

rel::DiracParams dirac(const json& params, rel::Symmetry branch) {
    const nonrel::OscillatorParams o = oscillator(params);
    rel::DiracParams p = branch == rel::Symmetry::Spin
                             ? rel::DiracParams::spin(o.M, o.omega, o.g, number(params, "cs", 0.0))
                             : rel::DiracParams::pseudospin(o.M, o.omega, o.g, number(params, "cps", 0.0));
    p.hbar = o.hbar;
    p.c = number(params, "c", 1.0);
    p.validate();
    return p;
}

std::vector<double> sample_points(const json& params) {
    const double lo = number(params, "x-min", 0.0);
    const double hi = number(params, "x-max", 6.0);
    const int count = integer(params, "points", 241);
    if (count < 2) throw DomainError("--points must be at least 2");
    if (!(lo < hi)) throw DomainError("--x-min must be below --x-max");
    std::vector<double> xs(count);
    const double h = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) xs[i] = i + 1 == count ? hi : lo + i * h;
    return xs;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_samples(const Table& t, Format fmt, std::ostream& out) {
    if (fmt == Format::Json) {
        json doc = json::object();
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            json column = json::array();
            for (const auto& row : t.rows) column.push_back(std::isfinite(row[c]) ? json(row[c]) : json(nullptr));
            doc[t.columns[c]] = std::move(column);
        }
        out << doc.dump(2) << '\n';
        return;
    }
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << significant(row[c]);
        out << '\n';
    }
}

int cmd_spectrum(const json& params, Format fmt, std::ostream& out) {
    const std::string branch = text(params, "branch", "nonrel");
    const int n_max = integer(params, "n-max", 10);
    if (n_max < 0) throw DomainError("--n-max must be non-negative");

    std::vector<EnergyLevel> levels;
    for (int n = 0; n <= n_max; ++n) {
        if (branch == "nonrel") {
            levels.push_back(nonrel::energy(n, oscillator(params)));
        } else if (branch == "harmonic") {
            levels.push_back(nonrel::harmonic_energy(n, oscillator(params)));
        } else if (branch == "spin") {
            levels.push_back(rel::solve_spin_energy(n, dirac(params, rel::Symmetry::Spin)));
        } else if (branch == "pseudospin") {
            levels.push_back(rel::solve_pseudospin_energy(n, dirac(params, rel::Symmetry::Pseudospin)));
        } else if (branch == "klein-gordon") {
            levels.push_back(rel::klein_gordon_energy(n, dirac(params, rel::Symmetry::Spin)));
        } else {
            throw DomainError("unknown branch '" + branch + "'");
        }
    }

    if (fmt == Format::Json) {
        json doc = json::array();
        for (const auto& l : levels) {
            doc.push_back({{"n", l.n}, {"energy", l.value}, {"residual", l.residual},
                           {"branch", std::string(to_string(l.branch))}});
        }
        out << doc.dump(2) << '\n';
    } else {
        out << "n,energy,residual\n";
        for (const auto& l : levels) out << l.n << ',' << fixed(l.value) << ',' << scientific(l.residual) << '\n';
    }
    return Success;
}

int cmd_wavefunction(const json& params, Format fmt, std::ostream& out) {
    const std::string branch = text(params, "branch", "nonrel");
    const int n = integer(params, "n", 0);
    const auto xs = sample_points(params);
    Table t;

    if (branch == "nonrel") {
        const auto p = oscillator(params);
        const auto d = nonrel::derive(p);
        const bool harmonic = flag(params, "compare-harmonic");
        t.columns = {"x", "isotonic"};
        if (harmonic) t.columns.push_back("harmonic");
        for (double x : xs) {
            double psi = 0.0;  // psi(0) = 0
            if (x > 0.0) {
                psi = nonrel::wavefunction(n, p, x);
            } else if (x < 0.0) {
                const auto mirrored = nonrel::parity_extend(d.xi - 0.5, nonrel::wavefunction(n, p, -x), x);
                if (!mirrored) throw DomainError("wavefunction is not normalizable on x < 0 for non-integer m");
                psi = *mirrored;
            }
            std::vector<double> row{x, psi};
            if (harmonic) row.push_back(nonrel::harmonic_wavefunction(n, p, x));
            t.rows.push_back(std::move(row));
        }
    } else if (branch == "spin") {
        const auto p = dirac(params, rel::Symmetry::Spin);
        const double E = rel::solve_spin_energy(n, p).value;
        const bool regular = rel::spin_derived(p, E).zeta >= 0.5;
        t.columns = {"x", "upper", "lower"};
        for (double x : xs) {
            if (x < 0.0) throw DomainError("spinor components are defined for x >= 0");
            if (x == 0.0) {
                if (!regular) throw DomainError("lower spinor diverges at x = 0 for zeta < 1/2");
                t.rows.push_back({x, 0.0, 0.0});
            } else {
                t.rows.push_back({x, rel::spin_upper_spinor(n, p, E, x), rel::spin_lower_spinor(n, p, E, x)});
            }
        }
    } else if (branch == "pseudospin") {
        const auto p = dirac(params, rel::Symmetry::Pseudospin);
        const double E = rel::solve_pseudospin_energy(n, p).value;
        t.columns = {"x", "lower"};
        for (double x : xs) {
            if (x < 0.0) throw DomainError("spinor components are defined for x >= 0");
            t.rows.push_back({x, x == 0.0 ? 0.0 : rel::pseudospin_lower_spinor(n, p, E, x)});
        }
    } else {
        throw DomainError("wavefunction: branch must be nonrel, spin or pseudospin");
    }
    write_samples(t, fmt, out);
    return Success;
}

int cmd_potential(const json& params, Format fmt, std::ostream& out) {
    const auto p = oscillator(params);
    const bool harmonic = flag(params, "compare-harmonic");
    const double k = 0.5 * p.M * p.omega * p.omega;
    Table t;
    t.columns = {"x", "isotonic"};
    if (harmonic) t.columns.push_back("harmonic");
    for (double x : sample_points(params)) {
        const double u0 = k * x * x;
        double u = u0 + 0.5 * p.g / (x * x);
        if (x == 0.0) u = p.g == 0.0 ? 0.0 : std::copysign(INFINITY, p.g);
        std::vector<double> row{x, u};
        if (harmonic) row.push_back(u0);
        t.rows.push_back(std::move(row));
    }
    write_samples(t, fmt, out);
    return Success;
}

struct Cell {
    int n = 0;
    double g = 0.0;
    double C = 0.0;
    double golden = 0.0;
    double energy = NAN;
    std::string failure;
};

std::vector<Cell> solve_table(std::span<const tables::Column> columns, rel::Symmetry branch) {
    std::vector<Cell> cells;
    for (int n = 0; n < tables::rows; ++n) {
        for (const auto& col : columns) cells.push_back({n, col.g, col.C, col.energies[n], NAN, {}});
    }
    std::vector<std::future<void>> jobs;
    jobs.reserve(cells.size());
    for (auto& cell : cells) {
        jobs.push_back(std::async(std::launch::async, [&cell, branch] {
            try {
                cell.energy = branch == rel::Symmetry::Spin
                                  ? rel::solve_spin_energy(cell.n, rel::DiracParams::spin(1, 1, cell.g, cell.C)).value
                                  : rel::solve_pseudospin_energy(
                                        cell.n, rel::DiracParams::pseudospin(1, 1, cell.g, cell.C)).value;
            } catch (const Error& e) {
                cell.failure = e.what();
            }
        }));
    }
    for (auto& j : jobs) j.get();
    return cells;
}

struct TableSummary {
    std::string name;
    std::size_t cells = 0;
    std::size_t failures = 0;
    double max_deviation = 0.0;
    bool pass() const { return failures == 0 && max_deviation <= table_tolerance; }
};

TableSummary write_table(const std::string& name, const char* c_label, const std::vector<Cell>& cells,
                         const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write " + path.string());
    file << "n,g," << c_label << ",energy,golden,deviation\n";
    TableSummary s{name, cells.size()};
    for (const auto& c : cells) {
        file << c.n << ',' << significant(c.g) << ',' << significant(c.C) << ',';
        if (!c.failure.empty()) {
            ++s.failures;
            file << "nan," << fixed(c.golden) << ",nan\n";
            continue;
        }
        const double dev = std::abs(c.energy - c.golden);
        s.max_deviation = std::max(s.max_deviation, dev);
        file << fixed(c.energy) << ',' << fixed(c.golden) << ',' << scientific(dev) << '\n';
    }
    if (!file) throw Error("write failed: " + path.string());
    return s;
}

int cmd_reproduce_tables(const json& params, Format fmt, std::ostream& out) {
    const std::filesystem::path dir = text(params, "out", ".");
    std::filesystem::create_directories(dir);
    const auto spin_cells = solve_table(tables::spin_table(), rel::Symmetry::Spin);
    const auto ps_cells = solve_table(tables::pseudospin_table(), rel::Symmetry::Pseudospin);
    const TableSummary summaries[] = {
        write_table("table1", "cs", spin_cells, dir / "table1.csv"),
        write_table("table2", "cps", ps_cells, dir / "table2.csv"),
    };

    bool pass = true;
    json doc = json::array();
    for (const auto& s : summaries) {
        pass = pass && s.pass();
        doc.push_back({{"table", s.name}, {"cells", s.cells}, {"failures", s.failures},
                       {"max_deviation", s.max_deviation}, {"bound", table_tolerance}, {"pass", s.pass()}});
    }
    if (fmt == Format::Json) {
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& s : summaries) {
            out << s.name << ": " << s.cells << " cells, " << s.failures << " failed, max deviation "
                << scientific(s.max_deviation) << (s.pass() ? " PASS" : " FAIL") << '\n';
        }
    }
    for (const auto& cells : {&spin_cells, &ps_cells}) {
        for (const auto& c : *cells) {
            if (!c.failure.empty()) throw NoRootInRange("n=" + std::to_string(c.n) + ": " + c.failure);
        }
    }
    return pass ? Success : NumericalFailure;
}

int cmd_validate(const json& params, std::ostream& out) {
    const auto checks = validate_suite(text(params, "suite", "all"));
    json doc = json::array();
    bool pass = true;
    for (const auto& c : checks) {
        pass = pass && c.pass;
        doc.push_back({{"check", c.check}, {"value", c.value}, {"bound", c.bound}, {"pass", c.pass}});
    }
    out << doc.dump(2) << '\n';
    return pass ? Success : NumericalFailure;
}

int dispatch(const RunManifest& m, std::ostream& out) {
    const json& p = m.parameters;
    if (m.command == "spectrum") return cmd_spectrum(p, m.output_format, out);
    if (m.command == "wavefunction") return cmd_wavefunction(p, m.output_format, out);
    if (m.command == "potential") return cmd_potential(p, m.output_format, out);
    if (m.command == "reproduce-tables") return cmd_reproduce_tables(p, m.output_format, out);
    if (m.command == "validate") return cmd_validate(p, out);
    throw DomainError("unknown command '" + m.command + "'");
}

}  // namespace

int execute(const RunManifest& m, std::ostream& out) {
    // reproduce-tables treats "out" as a directory
    if (m.command != "reproduce-tables" && m.parameters.contains("out")) {
        const std::string path = text(m.parameters, "out", "");
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error("cannot write " + path);
        const int code = dispatch(m, file);
        if (!file.flush()) throw Error("write failed: " + path);
        return code;
    }
    return dispatch(m, out);
}

int run(const RunManifest& m, std::ostream& out, std::ostream& err) {
    try {
        return execute(m, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return InvalidArguments;
    } catch (const UnphysicalRegime& e) {
        err << "error: " << e.what() << '\n';
        return InvalidArguments;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return InvalidArguments;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return NumericalFailure;
    }
}

}  // namespace isotonic::cli
