#include "gsa/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gsa/errors.hpp"

namespace gsa {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return d;
    } catch (const std::exception&) {
        throw config_error("expected a number, got '" + value + "'", line);
    }
}

std::int64_t parse_int(const std::string& value, int line) {
    std::int64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw config_error("expected an integer, got '" + value + "'", line);
    }
    return out;
}

std::size_t parse_count(const std::string& value, int line) {
    const std::int64_t v = parse_int(value, line);
    if (v <= 0) throw config_error("expected a positive count, got '" + value + "'", line);
    return static_cast<std::size_t>(v);
}

bool parse_bool(const std::string& value, int line) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw config_error("expected true or false, got '" + value + "'", line);
}

std::vector<std::size_t> parse_count_list(const std::string& value, int line) {
    std::vector<std::size_t> out;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (item.empty()) throw config_error("empty entry in list", line);
        out.push_back(parse_count(item, line));
    }
    if (out.empty()) throw config_error("expected a comma-separated list of counts", line);
    return out;
}

RandomVariableSpec* find_variable(RunConfig& config, const std::string& name) {
    for (auto& spec : config.variables) {
        if (spec.name == name) return &spec;
    }
    return nullptr;
}

std::string format_shortest(double v) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    (void)ec;
    return std::string(buffer, ptr);
}

std::string join_counts(const std::vector<std::size_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::string to_string(Profile profile) {
    return profile == Profile::fast ? "fast" : "paper";
}

StudySettings RunConfig::study_settings() const {
    StudySettings settings;
    settings.sobol_n = sobol_n;
    settings.mi_n = mi_n;
    settings.delta_n = delta_n;
    settings.pawn_n = pawn_n;
    settings.conditional_n = conditional_n;
    settings.knn_k = knn_k;
    settings.conditional_entropy_k = conditional_entropy_k;
    settings.delta_partitions = delta_partitions;
    settings.pawn_intervals = pawn_intervals;
    settings.pawn_stat = pawn_stat;
    settings.pawn_scheme = pawn_scheme;
    settings.bootstrap_replications = bootstrap_replications;
    settings.jackknife_groups = jackknife_groups;
    settings.ci_level = ci_level;
    settings.placement = lhs_midpoint ? LhsPlacement::midpoint : LhsPlacement::random;
    return settings;
}

void RunConfig::validate() const {
    if (model != "dry_eucalypt") {
        throw config_error("unknown model '" + model + "' (supported: dry_eucalypt)");
    }
    if (knn_k < 1) throw config_error("knn_k must be positive");
    if (conditional_entropy_k < 1) throw config_error("conditional_entropy_k must be positive");
    if (delta_partitions == 1) {
        throw config_error("delta_partitions must be at least 2 (or auto)");
    }
    if (pawn_intervals < 2) throw config_error("pawn_intervals must be at least 2");
    if (bootstrap_replications < 100) throw config_error("bootstrap_replications must be >= 100");
    if (jackknife_groups < 2) throw config_error("jackknife_groups must be at least 2");
    if (!(ci_level > 0.0 && ci_level < 1.0)) throw config_error("ci_level must lie in (0, 1)");
    if (!(sweep_step > 0.0)) throw config_error("sweep_step must be positive");
    if (sweep_stop < sweep_start) throw config_error("sweep_stop must be >= sweep_start");
    if (convergence_repetitions < 1) throw config_error("convergence_repetitions must be >= 1");
    if (timing_runs < 1) throw config_error("timing_runs must be >= 1");
    try {
        std::vector<RandomVariableSpec> effective = variables;
        for (auto& spec : effective) {
            if (spec.name == "U") spec.mean = mu_u;
            spec.validate();
        }
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig config;
    std::set<std::string> seen;
    bool fast_profile = false;
    std::map<std::string, bool> size_set = {{"sobol_n", false},
                                            {"mi_n", false},
                                            {"delta_n", false},
                                            {"pawn_n", false},
                                            {"conditional_n", false}};

    std::stringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("expected key = value", line_no);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw config_error("missing key", line_no);
        if (value.empty()) throw config_error("missing value for '" + key + "'", line_no);
        if (!seen.insert(key).second) {
            throw config_error("duplicate key '" + key + "'", line_no);
        }

        if (key == "model") {
            config.model = value;
        } else if (key == "mu_u") {
            config.mu_u = parse_double(value, line_no);
        } else if (key == "sobol_n" || key == "mi_n" || key == "delta_n" || key == "pawn_n" ||
                   key == "conditional_n") {
            const std::size_t n = parse_count(value, line_no);
            size_set[key] = true;
            if (key == "sobol_n") config.sobol_n = n;
            else if (key == "mi_n") config.mi_n = n;
            else if (key == "delta_n") config.delta_n = n;
            else if (key == "pawn_n") config.pawn_n = n;
            else config.conditional_n = n;
        } else if (key == "knn_k") {
            config.knn_k = static_cast<int>(parse_count(value, line_no));
        } else if (key == "conditional_entropy_k") {
            config.conditional_entropy_k = static_cast<int>(parse_count(value, line_no));
        } else if (key == "delta_partitions") {
            config.delta_partitions = value == "auto" ? 0 : parse_count(value, line_no);
        } else if (key == "pawn_intervals") {
            config.pawn_intervals = parse_count(value, line_no);
        } else if (key == "pawn_interval_scheme") {
            if (value == "width") config.pawn_scheme = PawnIntervalScheme::equal_width;
            else if (value == "count") config.pawn_scheme = PawnIntervalScheme::equal_count;
            else throw config_error("pawn_interval_scheme must be width or count", line_no);
        } else if (key == "pawn_stat") {
            if (value == "mean") config.pawn_stat = PawnStat::mean;
            else if (value == "median") config.pawn_stat = PawnStat::median;
            else if (value == "max") config.pawn_stat = PawnStat::max;
            else throw config_error("pawn_stat must be mean, median or max", line_no);
        } else if (key == "bootstrap_replications") {
            config.bootstrap_replications = static_cast<int>(parse_count(value, line_no));
        } else if (key == "jackknife_groups") {
            config.jackknife_groups = static_cast<int>(parse_count(value, line_no));
        } else if (key == "ci_level") {
            config.ci_level = parse_double(value, line_no);
        } else if (key == "seed") {
            const std::int64_t s = parse_int(value, line_no);
            if (s < 0) throw config_error("seed must be non-negative", line_no);
            config.seed = static_cast<std::uint64_t>(s);
        } else if (key == "out_dir") {
            config.out_dir = value;
        } else if (key == "profile") {
            if (value == "paper") config.profile = Profile::paper;
            else if (value == "fast") config.profile = Profile::fast;
            else throw config_error("profile must be paper or fast", line_no);
            fast_profile = config.profile == Profile::fast;
        } else if (key == "lhs_midpoint") {
            config.lhs_midpoint = parse_bool(value, line_no);
        } else if (key == "sweep_start") {
            config.sweep_start = parse_double(value, line_no);
        } else if (key == "sweep_stop") {
            config.sweep_stop = parse_double(value, line_no);
        } else if (key == "sweep_step") {
            config.sweep_step = parse_double(value, line_no);
        } else if (key == "sweep_ci") {
            config.sweep_ci = parse_bool(value, line_no);
        } else if (key == "convergence_sizes") {
            config.convergence_sizes = parse_count_list(value, line_no);
        } else if (key == "convergence_repetitions") {
            config.convergence_repetitions = static_cast<int>(parse_count(value, line_no));
        } else if (key == "timing_sizes") {
            config.timing_sizes = parse_count_list(value, line_no);
        } else if (key == "timing_runs") {
            config.timing_runs = static_cast<int>(parse_count(value, line_no));
        } else if (key.rfind("var_", 0) == 0) {
            const auto second = key.find('_', 4);
            if (second == std::string::npos) throw config_error("unknown key '" + key + "'", line_no);
            const std::string var_name = key.substr(4, second - 4);
            const std::string field = key.substr(second + 1);
            RandomVariableSpec* spec = find_variable(config, var_name);
            if (spec == nullptr) throw config_error("unknown variable '" + var_name + "'", line_no);
            if (var_name == "U" && field == "mean") {
                throw config_error("set the wind speed mean through mu_u", line_no);
            }
            const double v = parse_double(value, line_no);
            if (field == "mean") spec->mean = v;
            else if (field == "sd") spec->std_dev = v;
            else if (field == "lower") spec->lower = v;
            else if (field == "upper") spec->upper = v;
            else throw config_error("unknown key '" + key + "'", line_no);
        } else {
            throw config_error("unknown key '" + key + "'", line_no);
        }
    }

    if (fast_profile) {
        // Documented rule: the fast profile divides defaulted sample sizes by
        // ten; explicitly set sizes are taken literally.
        if (!size_set["sobol_n"]) config.sobol_n /= 10;
        if (!size_set["mi_n"]) config.mi_n /= 10;
        if (!size_set["delta_n"]) config.delta_n /= 10;
        if (!size_set["pawn_n"]) config.pawn_n /= 10;
        if (!size_set["conditional_n"]) config.conditional_n /= 10;
    }

    for (auto& spec : config.variables) {
        if (spec.name == "U") spec.mean = config.mu_u;
    }

    config.validate();
    return config;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw config_error("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_config_text(buffer.str());
}

std::string serialize_config(const RunConfig& config) {
    std::ostringstream out;
    out << "model = " << config.model << "\n";
    out << "mu_u = " << format_shortest(config.mu_u) << "\n";
    out << "profile = " << to_string(config.profile) << "\n";
    out << "seed = " << config.seed << "\n";
    out << "out_dir = " << config.out_dir << "\n";
    out << "sobol_n = " << config.sobol_n << "\n";
    out << "mi_n = " << config.mi_n << "\n";
    out << "delta_n = " << config.delta_n << "\n";
    out << "pawn_n = " << config.pawn_n << "\n";
    out << "conditional_n = " << config.conditional_n << "\n";
    out << "knn_k = " << config.knn_k << "\n";
    out << "conditional_entropy_k = " << config.conditional_entropy_k << "\n";
    if (config.delta_partitions == 0) {
        out << "delta_partitions = auto\n";
    } else {
        out << "delta_partitions = " << config.delta_partitions << "\n";
    }
    out << "pawn_intervals = " << config.pawn_intervals << "\n";
    out << "pawn_stat = " << to_string(config.pawn_stat) << "\n";
    out << "pawn_interval_scheme = " << to_string(config.pawn_scheme) << "\n";
    out << "bootstrap_replications = " << config.bootstrap_replications << "\n";
    out << "jackknife_groups = " << config.jackknife_groups << "\n";
    out << "ci_level = " << format_shortest(config.ci_level) << "\n";
    out << "lhs_midpoint = " << (config.lhs_midpoint ? "true" : "false") << "\n";
    out << "sweep_start = " << format_shortest(config.sweep_start) << "\n";
    out << "sweep_stop = " << format_shortest(config.sweep_stop) << "\n";
    out << "sweep_step = " << format_shortest(config.sweep_step) << "\n";
    out << "sweep_ci = " << (config.sweep_ci ? "true" : "false") << "\n";
    out << "convergence_sizes = " << join_counts(config.convergence_sizes) << "\n";
    out << "convergence_repetitions = " << config.convergence_repetitions << "\n";
    out << "timing_sizes = " << join_counts(config.timing_sizes) << "\n";
    out << "timing_runs = " << config.timing_runs << "\n";
    for (const auto& spec : config.variables) {
        if (spec.name != "U") {
            out << "var_" << spec.name << "_mean = " << format_shortest(spec.mean) << "\n";
        }
        out << "var_" << spec.name << "_sd = " << format_shortest(spec.std_dev) << "\n";
        out << "var_" << spec.name << "_lower = " << format_shortest(spec.lower) << "\n";
        out << "var_" << spec.name << "_upper = " << format_shortest(spec.upper) << "\n";
    }
    return out.str();
}

}  // namespace gsa
