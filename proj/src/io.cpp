#include "gsa/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gsa/errors.hpp"
#include "gsa/rng.hpp"

namespace gsa {

namespace {

constexpr const char* kVersion = "1.0.0";

std::string format_g(double value, int precision) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                         std::chars_format::general, precision);
    (void)ec;
    return std::string(buffer, ptr);
}

class ArtifactWriter {
public:
    explicit ArtifactWriter(const std::filesystem::path& dir) : dir_(dir) {
        std::filesystem::create_directories(dir_);
    }

    std::ofstream open(const std::string& name) {
        files_.push_back(name);
        std::ofstream out(dir_ / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + (dir_ / name).string());
        return out;
    }

    const std::vector<std::string>& files() const { return files_; }

    void write_manifest(const std::string& command, const RunConfig& config) {
        nlohmann::ordered_json manifest;
        manifest["version"] = kVersion;
        manifest["command"] = command;
        manifest["seed"] = config.seed;
        nlohmann::ordered_json echo;
        std::stringstream stream(serialize_config(config));
        std::string line;
        while (std::getline(stream, line)) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = line.substr(0, eq - 1);
            echo[key] = line.substr(eq + 2);
        }
        manifest["config"] = echo;
        manifest["files"] = files_;

        std::ofstream out(dir_ / "manifest.json", std::ios::binary);
        out << manifest.dump(2) << "\n";
        files_.push_back("manifest.json");
    }

private:
    std::filesystem::path dir_;
    std::vector<std::string> files_;
};

void write_point_rows(std::ofstream& out, const PointStudyResult& point, bool with_mu) {
    for (const auto& est : point.estimates) {
        if (with_mu) out << format_number(point.mu_u) << "," << to_string(point.stage) << ",";
        out << to_string(est.method) << "," << est.variable << "," << format_number(est.value)
            << "," << format_number(est.ci_low) << "," << format_number(est.ci_high) << ","
            << est.rank << "\n";
    }
}

void write_curve(std::ofstream& out, const CurveData& curve) {
    for (std::size_t i = 0; i < curve.x.size(); ++i) {
        out << format_number(curve.x[i]) << " " << format_number(curve.y[i]) << "\n";
    }
}

std::string fix_label(int offset) {
    switch (offset) {
        case -2: return "m-2s";
        case -1: return "m-1s";
        case 0: return "m";
        case 1: return "m+1s";
        default: return "m+2s";
    }
}

void run_indices(ArtifactWriter& writer, const RunConfig& config) {
    StudySettings settings = config.study_settings();
    settings.with_ci = true;
    const PointStudyResult point = run_point_study(settings, config.mu_u, config.seed);
    auto out = writer.open("indices.csv");
    out << "method,variable,value,ci_low,ci_high,rank\n";
    write_point_rows(out, point, false);
}

void run_sweep(ArtifactWriter& writer, const RunConfig& config) {
    StudySettings settings = config.study_settings();
    settings.with_ci = config.sweep_ci;
    const SweepResult sweep = sweep_mu(settings, config.sweep_start, config.sweep_stop,
                                       config.sweep_step, config.seed);
    {
        auto out = writer.open("sweep.csv");
        out << "mu_u,stage,method,variable,value,ci_low,ci_high,rank\n";
        for (const auto& point : sweep.per_point) write_point_rows(out, point, true);
    }
    {
        auto out = writer.open("crossovers.csv");
        out << "method,variable_a,variable_b,mu_u\n";
        for (const Method method :
             {Method::sobol_total, Method::mi, Method::delta, Method::pawn}) {
            const auto crossing = detect_crossover(sweep, method, "U", "RH");
            out << to_string(method) << ",U,RH,"
                << (crossing ? format_number(*crossing) : std::string("none")) << "\n";
        }
    }
    if (!sweep.per_point.empty()) {
        for (const Method method :
             {Method::sobol_total, Method::sobol_main, Method::mi, Method::delta, Method::pawn}) {
            for (const auto* est : method_estimates(sweep.per_point.front(), method)) {
                auto out = writer.open("sweep_" + to_string(method) + "_" + est->variable + ".dat");
                for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
                    const IndexEstimate* point_est =
                        find_estimate(sweep.per_point[i], method, est->variable);
                    out << format_number(sweep.grid[i]) << " " << format_number(point_est->value)
                        << "\n";
                }
            }
        }
    }
}

void run_conditional(ArtifactWriter& writer, const RunConfig& config) {
    const StudySettings settings = config.study_settings();
    auto out = writer.open("conditional_summary.csv");
    out << "variable,fix_label,fix_value,variance,entropy,excess_kurtosis\n";
    bool baseline_written = false;
    for (const auto& spec : fire_spread_specs(config.mu_u)) {
        const ConditionalProfile profile =
            conditional_profile(settings, spec.name, config.mu_u, config.seed);
        if (!baseline_written) {
            out << "(all random),baseline,," << format_number(profile.baseline_variance) << ","
                << format_number(profile.baseline_entropy) << ","
                << format_number(profile.baseline_excess_kurtosis) << "\n";
            auto pdf = writer.open("pdf_baseline.dat");
            write_curve(pdf, profile.baseline_pdf);
            auto cdf = writer.open("cdf_baseline.dat");
            write_curve(cdf, profile.baseline_cdf);
            baseline_written = true;
        }
        for (int f = 0; f < 5; ++f) {
            const auto idx = static_cast<std::size_t>(f);
            out << profile.variable << "," << fix_label(f - 2) << ","
                << format_number(profile.fix_values[idx]) << ","
                << format_number(profile.variances[idx]) << ","
                << format_number(profile.entropies[idx]) << ","
                << format_number(profile.excess_kurtosis[idx]) << "\n";
            auto pdf = writer.open("pdf_" + profile.variable + "_" + fix_label(f - 2) + ".dat");
            write_curve(pdf, profile.pdf_curves[idx]);
            auto cdf = writer.open("cdf_" + profile.variable + "_" + fix_label(f - 2) + ".dat");
            write_curve(cdf, profile.cdf_curves[idx]);
        }
    }
}

void run_convergence(ArtifactWriter& writer, const RunConfig& config) {
    const ConvergenceResult result =
        convergence_study(config.study_settings(), config.mu_u, config.convergence_sizes,
                          config.convergence_repetitions, config.seed);
    auto out = writer.open("convergence.csv");
    out << "method,n,variable,mean_value,rank\n";
    for (const auto& [method, means] : result.mean_values) {
        const auto& ranks = result.ranks.at(method);
        for (std::size_t j = 0; j < result.sample_sizes.size(); ++j) {
            for (std::size_t v = 0; v < result.variables.size(); ++v) {
                out << to_string(method) << "," << result.sample_sizes[j] << ","
                    << result.variables[v] << "," << format_number(means[j][v]) << ","
                    << ranks[j][v] << "\n";
            }
        }
    }
}

void run_timing(ArtifactWriter& writer, const RunConfig& config) {
    const auto cells = timing_study(config.study_settings(), config.timing_sizes, config.seed,
                                    config.timing_runs);
    auto out = writer.open("timing.csv");
    out << "method,n,seconds\n";
    for (const auto& cell : cells) {
        out << to_string(cell.method) << "," << cell.sample_size << ","
            << format_number(cell.seconds) << "\n";
    }
}

}  // namespace

std::string format_number(double value) { return format_g(value, 6); }

std::vector<std::string> dispatch(const std::string& command, const RunConfig& config) {
    config.validate();
    ArtifactWriter writer(config.out_dir);
    if (command == "indices") {
        run_indices(writer, config);
    } else if (command == "sweep") {
        run_sweep(writer, config);
    } else if (command == "conditional") {
        run_conditional(writer, config);
    } else if (command == "convergence") {
        run_convergence(writer, config);
    } else if (command == "timing") {
        run_timing(writer, config);
    } else {
        throw config_error("unknown command '" + command + "'");
    }
    writer.write_manifest(command, config);
    return writer.files();
}

}  // namespace gsa
