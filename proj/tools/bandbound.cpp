// Command-line front end: certified spectral-measure bounds, band
// enclosures and gap certificates for periodic operator symbols, with a
// brute-force sampling oracle for cross-checks.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bandbound/bandbound.hpp"

namespace {

using namespace bandbound;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNumericalError = 2;
constexpr int kExitPresetFailed = 3;

const char* type_name(OperatorSpec::Type type) {
    switch (type) {
        case OperatorSpec::Type::jacobi1d: return "jacobi1d";
        case OperatorSpec::Type::schrodinger2d: return "schrodinger2d";
        case OperatorSpec::Type::symbol: return "symbol";
    }
    return "unknown";
}

double min_hopping_nuclear_norm(const JacobiSpec& spec) {
    double best = nuclear_norm(spec.a.front());
    for (std::size_t n = 1; n < spec.a.size(); ++n) best = std::min(best, nuclear_norm(spec.a[n]));
    return best;
}

BoundReportContext make_context(const OperatorSpec& spec, const FourierSymbol& sym) {
    BoundReportContext context;
    context.operator_type = type_name(spec.type);
    context.symbol_dim = sym.dim();
    if (spec.type == OperatorSpec::Type::jacobi1d) {
        const auto [shift, value] = jacobi_best_shift(spec.jacobi.value());
        context.best_shift_index = shift;
        context.best_shift_bound = value;
        if (spec.restriction) {
            const double half_span = 0.5 * (spec.restriction->second - spec.restriction->first);
            context.restricted_bound = 4.0 * std::sin(half_span) * min_hopping_nuclear_norm(spec.jacobi.value());
        }
    }
    return context;
}

void write_csv_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open CSV output file '" + path + "'");
    out << content;
}

int run_bound(const std::string& spec_path, int grid, double tol, const std::string& csv_path, bool no_oracle) {
    const OperatorSpec spec = load_operator_spec(spec_path);
    const FourierSymbol sym = build_symbol(spec, grid);
    const BoundReport report = compute_bounds(sym);
    write_bound_report_text(std::cout, report, make_context(spec, sym));
    if (!no_oracle) {
        const ValidationVerdict verdict = validate_report(sym, report, grid, tol);
        write_validation(std::cout, verdict);
    }
    if (!csv_path.empty()) {
        std::ostringstream csv;
        write_bound_report_csv(csv, report);
        write_csv_file(csv_path, csv.str());
    }
    return kExitOk;
}

int run_oracle(const std::string& spec_path, int grid, const std::string& csv_path) {
    const OperatorSpec spec = load_operator_spec(spec_path);
    const FourierSymbol sym = build_symbol(spec);
    const int points = grid > 0 ? grid : default_validation_grid(sym.domain.dim());
    const SampledBands bands = sample_bands(sym, points);
    write_oracle_summary(std::cout, bands);
    if (!csv_path.empty()) {
        std::ostringstream csv;
        write_band_csv(csv, bands, sym.domain.dim());
        write_csv_file(csv_path, csv.str());
    }
    return kExitOk;
}

int run_gaps(const std::string& spec_path, int grid) {
    const OperatorSpec spec = load_operator_spec(spec_path);
    const FourierSymbol sym = build_symbol(spec, grid);
    const std::vector<BandEnclosure> enclosures = band_enclosures(sym);
    const std::vector<GapInterval> gaps = certified_gaps(enclosures);
    std::cout << "operator_type: " << type_name(spec.type) << "\n";
    std::cout << "symbol_dim: " << sym.dim() << "\n";
    for (const BandEnclosure& enclosure : enclosures) {
        const std::string prefix = "enclosure_" + std::to_string(enclosure.index) + "_";
        std::cout << prefix << "lower: " << format_number(enclosure.lower) << "\n";
        std::cout << prefix << "upper: " << format_number(enclosure.upper) << "\n";
    }
    std::cout << "num_gaps: " << gaps.size() << "\n";
    for (std::size_t g = 0; g < gaps.size(); ++g) {
        std::cout << "gap_" << g + 1 << "_lower: " << format_number(gaps[g].lower) << "\n";
        std::cout << "gap_" << g + 1 << "_upper: " << format_number(gaps[g].upper) << "\n";
    }
    return kExitOk;
}

int run_compare(const std::string& spec_path, int grid, double tol, bool no_oracle) {
    const OperatorSpec spec = load_operator_spec(spec_path);
    const FourierSymbol sym = build_symbol(spec, grid);
    const BoundReport report = compute_bounds(sym);

    std::optional<ValidationVerdict> verdict;
    if (!no_oracle) verdict = validate_report(sym, report, grid, tol);

    std::vector<std::pair<std::string, double>> rows = {
        {"refined", report.refined_total},
        {"sound", report.sound_total},
        {"paper", report.paper_total},
        {"trivial", report.trivial_total},
    };
    if (spec.type == OperatorSpec::Type::jacobi1d && spec.jacobi->block_dim == 1) {
        std::vector<double> hoppings;
        bool ds_defined = true;
        for (const ComplexMatrix& a : spec.jacobi->a) {
            const double mag = std::abs(a(0, 0));
            if (mag == 0.0) ds_defined = false;
            hoppings.push_back(mag);
        }
        if (ds_defined) rows.emplace_back("ds", geometric_mean_bound(hoppings));
    }

    std::cout << std::left << std::setw(10) << "bound" << std::setw(20) << "value" << "valid\n";
    if (verdict)
        std::cout << std::left << std::setw(10) << "oracle" << std::setw(20)
                  << format_number(verdict->oracle_measure) << "reference\n";
    for (const auto& [name, value] : rows) {
        std::string flag = "n/a";
        if (verdict) flag = value >= verdict->oracle_measure - 1e-8 ? "yes" : "NO";
        std::cout << std::left << std::setw(10) << name << std::setw(20) << format_number(value) << flag << "\n";
    }
    if (verdict) write_validation(std::cout, *verdict);
    return kExitOk;
}

int run_named_preset(const std::string& name, const std::vector<std::string>& args) {
    std::map<std::string, std::string> params;
    for (const std::string& arg : args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("preset: parameters must look like key=value, got '" + arg + "'");
        params[arg.substr(0, eq)] = arg.substr(eq + 1);
    }
    const PresetResult result = run_preset(name, params);
    std::cout << "preset: " << result.name << "\n";
    for (const std::string& line : result.lines) std::cout << line << "\n";
    return result.pass ? kExitOk : kExitPresetFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Lebesgue-measure bounds for spectra of periodic operator symbols"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string csv_path;
    std::string preset_name;
    std::vector<std::string> preset_params;
    int grid = 0;
    double tol = bandbound::kValidationTolerance;
    bool no_oracle = false;

    CLI::App* bound = app.add_subcommand("bound", "compute the certified measure bound report");
    bound->add_option("spec", spec_path, "operator spec JSON file")->required();
    bound->add_option("--grid", grid, "per-axis grid resolution override");
    bound->add_option("--tol", tol, "validation tolerance (default 1e-8)");
    bound->add_option("--csv", csv_path, "write the per-term/enclosure/gap table to this CSV file");
    bound->add_flag("--no-oracle", no_oracle, "skip the sampling-oracle cross-check");

    CLI::App* oracle = app.add_subcommand("oracle", "sample eigenvalue bands on the k-grid");
    oracle->add_option("spec", spec_path, "operator spec JSON file")->required();
    oracle->add_option("--grid", grid, "per-axis grid resolution (default 512 for d=1, 128 for d=2)");
    oracle->add_option("--csv", csv_path, "write per-k eigenvalues to this CSV file");

    CLI::App* gaps = app.add_subcommand("gaps", "certified band enclosures and spectral gaps");
    gaps->add_option("spec", spec_path, "operator spec JSON file")->required();
    gaps->add_option("--grid", grid, "per-axis grid resolution override");

    CLI::App* compare = app.add_subcommand("compare", "oracle measure vs. every bound in one table");
    compare->add_option("spec", spec_path, "operator spec JSON file")->required();
    compare->add_option("--grid", grid, "per-axis grid resolution override");
    compare->add_option("--tol", tol, "validation tolerance (default 1e-8)");
    compare->add_flag("--no-oracle", no_oracle, "skip the sampling oracle (validity flags become n/a)");

    CLI::App* preset = app.add_subcommand("preset", "run a named experiment end to end (exit 3 on FAIL)");
    preset->add_option("name", preset_name,
                       "one of: sharpness-4m, theorem3-equality, large-spectrum, ds-comparison")
        ->required();
    preset->add_option("params", preset_params, "key=value parameters, e.g. m=2 T=100 eps=0.01");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (bound->parsed()) return run_bound(spec_path, grid, tol, csv_path, no_oracle);
        if (oracle->parsed()) return run_oracle(spec_path, grid, csv_path);
        if (gaps->parsed()) return run_gaps(spec_path, grid);
        if (compare->parsed()) return run_compare(spec_path, grid, tol, no_oracle);
        if (preset->parsed()) return run_named_preset(preset_name, preset_params);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const bandbound::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return kExitInputError;
}
