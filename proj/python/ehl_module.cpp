#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ehl/entropy.hpp"
#include "ehl/evolve.hpp"
#include "ehl/experiment.hpp"
#include "ehl/kernels.hpp"
#include "ehl/lsi.hpp"
#include "ehl/normalization.hpp"
#include "ehl/verify.hpp"

namespace py = pybind11;

namespace {

ehl::HarmonicProfile profile_from(const std::string& kind, int d, double param) {
    return ehl::make_profile(ehl::make_domain(ehl::domain_kind_from_string(kind), d, param));
}

}  // namespace

PYBIND11_MODULE(ehl, m) {
    m.doc() = "Heat flow in exterior domains: harmonic profiles, kernels, "
              "self-similar rescaling, entropy functionals and log-Sobolev bounds.";

    py::class_<ehl::HarmonicProfile>(m, "Profile")
        .def("phi", &ehl::HarmonicProfile::phi, py::arg("r"))
        .def("grad_phi", &ehl::HarmonicProfile::grad, py::arg("r"))
        .def("cstar", &ehl::HarmonicProfile::cstar)
        .def_property_readonly("dim",
                               [](const ehl::HarmonicProfile& p) { return p.domain.dim; });

    m.def("make_profile", &profile_from, py::arg("kind"), py::arg("d"), py::arg("param") = 0.0,
          "Profile for 'half_line' (param = x0), 'ball_complement' (param = R) "
          "or 'full_space'.");

    m.def("gaussian", &ehl::gaussian, py::arg("d"), py::arg("radius"));
    m.def("heat_gamma", &ehl::heat_gamma, py::arg("d"), py::arg("t"), py::arg("radius"));
    m.def("dipole", &ehl::dipole, py::arg("t"), py::arg("x"));
    m.def("halfline_kernel", &ehl::halfline_kernel, py::arg("t"), py::arg("x"), py::arg("y"),
          py::arg("x0") = 0.0);
    m.def(
        "gamma_shift_weighted_l1",
        [](int d, double t, double v) { return ehl::gamma_shift_weighted_l1(d, t, v); },
        py::arg("d"), py::arg("t"), py::arg("v"));

    m.def(
        "i_tau",
        [](const ehl::HarmonicProfile& p, double tau) { return ehl::i_tau(p, tau); },
        py::arg("profile"), py::arg("tau"));
    m.def("k_of_t", &ehl::k_of_t, py::arg("profile"), py::arg("t"));
    m.def("i_tau_prime", &ehl::i_tau_prime, py::arg("profile"), py::arg("tau"));
    m.def("kprime_over_k", &ehl::kprime_over_k, py::arg("profile"), py::arg("tau"));
    m.def("tau_of_t", &ehl::tau_of_t, py::arg("t"));

    m.def("radial_lsi_bound", &ehl::radial_lsi_bound, py::arg("lambda_l"), py::arg("lambda_p"),
          py::arg("m1"), py::arg("m2"), py::arg("d"), py::arg("c_assembly") = 1.0);
    m.def("lambda_hat", &ehl::lambda_hat, py::arg("profile"), py::arg("tau"),
          py::arg("c_assembly") = 1.0, py::arg("poincare_n") = 2000);

    m.def(
        "fit_rate",
        [](const std::vector<double>& t, const std::vector<double>& v, double t_lo, double t_hi) {
            ehl::RateSeries s{"series", t, v};
            ehl::RateFit f = ehl::fit_rate(s, t_lo, t_hi);
            return py::make_tuple(f.alpha, f.prefactor, f.max_log_residual);
        },
        py::arg("t"), py::arg("value"), py::arg("t_lo"), py::arg("t_hi"),
        "Least-squares exponent in log-log coordinates; returns "
        "(alpha, prefactor, max_log_residual).");

    m.def(
        "run_experiment",
        [](const std::string& config_text, const std::string& out_dir,
           const std::string& subcommand) {
            ehl::RunConfig cfg = ehl::parse_config(config_text);
            ehl::OutputBundle bundle(out_dir);
            auto report = ehl::run_experiment(cfg, bundle, subcommand);
            bundle.flush();
            return report.dump();
        },
        py::arg("config_text"), py::arg("out_dir"), py::arg("subcommand") = "all",
        "Runs a config and returns the report as a JSON string.");
}
