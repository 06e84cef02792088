#include <iostream>
#include <string>

#include "ehl/experiment.hpp"

namespace {

void print_usage(std::ostream& out) {
    out << "usage: ehl <subcommand> --config <path> [--out <dir>] [--quiet]\n"
           "\n"
           "subcommands:\n"
           "  profile     harmonic profile samples and harmonicity residual\n"
           "  normalize   normalization table (tau, I, K, I', err)\n"
           "  solve       field snapshots at the configured output times\n"
           "  entropy     self-similar transform and entropy trace\n"
           "  lsi         log-Sobolev report (Phi'', Bakry-Emery, Poincare, assembly)\n"
           "  rates       error-norm series and fitted exponents\n"
           "  mass        total-mass series and asymptote residuals\n"
           "  all         everything above into one report\n"
           "\n"
           "Outputs land in the --out directory (default: [output] dir from the\n"
           "config) together with report.json and manifest.json. EHL_THREADS caps\n"
           "worker threads.\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        print_usage(std::cerr);
        return 2;
    }
    const std::string sub = argv[1];
    if (sub == "-h" || sub == "--help" || sub == "help") {
        print_usage(std::cout);
        return 0;
    }
    std::string config_path, out_dir;
    bool quiet = false;
    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) {
            config_path = argv[++i];
        } else if (arg == "--out" && i + 1 < argc) {
            out_dir = argv[++i];
        } else if (arg == "--quiet") {
            quiet = true;
        } else {
            std::cerr << "unrecognized argument '" << arg << "'\n";
            print_usage(std::cerr);
            return 2;
        }
    }
    if (config_path.empty()) {
        std::cerr << "missing --config <path>\n";
        print_usage(std::cerr);
        return 2;
    }
    const int rc = ehl::dispatch(sub, config_path, out_dir, quiet);
    if (rc == 2) print_usage(std::cerr);
    return rc;
}
