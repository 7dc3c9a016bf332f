#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gsa/config.hpp"
#include "gsa/errors.hpp"
#include "gsa/io.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw gsa::config_error("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

/// Drops any profile line so a command-line override can re-apply the
/// profile's sample-size rule during parsing.
std::string strip_profile_lines(const std::string& text) {
    std::stringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        std::string key = eq == std::string::npos ? line : line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        const auto end = key.find_last_not_of(" \t");
        if (end != std::string::npos) key.erase(end + 1);
        if (key == "profile") continue;
        out << line << "\n";
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Global sensitivity analysis toolkit for a segmented fire spread model"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir;
    std::string profile;
    std::uint64_t seed = 0;
    app.add_option("--config", config_path, "Configuration file (key = value lines)");
    auto* seed_opt = app.add_option("--seed", seed, "Master seed (overrides the config file)");
    auto* out_opt = app.add_option("--out", out_dir, "Output directory");
    auto* profile_opt = app.add_option("--profile", profile, "paper or fast")
                            ->check(CLI::IsMember({"paper", "fast"}));

    for (const char* name : {"indices", "sweep", "conditional", "convergence", "timing"}) {
        app.add_subcommand(name);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage problems are configuration errors
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        std::string text = config_path.empty() ? std::string{} : slurp(config_path);
        if (profile_opt->count() > 0) {
            text = strip_profile_lines(text) + "profile = " + profile + "\n";
        }
        gsa::RunConfig config = gsa::parse_config_text(text);
        if (seed_opt->count() > 0) config.seed = seed;
        if (out_opt->count() > 0) config.out_dir = out_dir;

        const auto files = gsa::dispatch(command, config);
        std::cout << command << ": wrote " << files.size() << " file(s) to " << config.out_dir
                  << "\n";
        return 0;
    } catch (const gsa::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
