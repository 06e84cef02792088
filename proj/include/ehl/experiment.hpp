#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "ehl/config.hpp"

namespace ehl {

// Accumulates output files in memory, then writes them plus a manifest
// listing every file with a content digest.
class OutputBundle {
  public:
    explicit OutputBundle(std::string dir) : dir_(std::move(dir)) {}
    void add(const std::string& name, const std::string& body);
    void flush();  // writes all files and manifest.json
    const std::string& dir() const { return dir_; }

  private:
    std::string dir_;
    std::vector<std::pair<std::string, std::string>> files_;
};

// Full pipeline for one config: solve, transforms, norms, traces, fits.
// Deterministic for a fixed config. Stage failures are rethrown with the
// stage name attached.
nlohmann::ordered_json run_experiment(const RunConfig& cfg, OutputBundle& out,
                                      const std::string& subcommand = "all");

// Subcommands: profile, normalize, solve, entropy, lsi, rates, mass, all.
// Exit status: 0 success, 1 computation error, 2 config error.
int dispatch(const std::string& subcommand, const std::string& config_path,
             const std::string& out_dir, bool quiet);

}  // namespace ehl
