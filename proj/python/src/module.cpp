// pybind11 bindings: the main operations of the library for scripting and
// smoke tests. Exact rationals cross as "num/den" strings.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "zetamoments/acceptance.hpp"
#include "zetamoments/arith.hpp"
#include "zetamoments/exactpoly.hpp"
#include "zetamoments/localseries.hpp"
#include "zetamoments/singular.hpp"
#include "zetamoments/zetanum.hpp"

namespace py = pybind11;

namespace {

zm::zetanum::Method method_from(const std::string& m) {
    if (m == "em") return zm::zetanum::Method::euler_maclaurin;
    if (m == "rs") return zm::zetanum::Method::riemann_siegel;
    if (m == "auto") return zm::zetanum::Method::automatic;
    throw py::value_error("method must be auto, em, or rs");
}

zm::singular::AkForm form_from(const std::string& f) {
    if (f == "eq10") return zm::singular::AkForm::eq10;
    if (f == "eq51") return zm::singular::AkForm::eq51;
    throw py::value_error("form must be eq10 or eq51");
}

py::dict prediction_dict(const zm::report::PredictionReport& r) {
    py::dict d;
    d["k"] = r.k;
    d["x"] = r.x;
    d["h"] = r.h;
    d["predicted"] = r.predicted;
    d["uncertainty"] = r.uncertainty;
    d["actual"] = r.actual;
    d["rel_err"] = r.rel_err;
    d["fingerprint"] = r.fingerprint;
    return d;
}

}  // namespace

PYBIND11_MODULE(_zetamoments, m) {
    m.doc() = "divisor correlations, singular series, and zeta moment probes";

    // ---- arith ----
    py::class_<zm::arith::DivisorTable>(m, "DivisorTable")
        .def_readonly("k", &zm::arith::DivisorTable::k)
        .def_readonly("x_max", &zm::arith::DivisorTable::x_max)
        .def("__call__", &zm::arith::DivisorTable::operator())
        .def("__len__", [](const zm::arith::DivisorTable& t) { return t.x_max; });

    m.def("factorize", [](std::uint64_t n) {
        std::vector<std::pair<std::uint64_t, unsigned>> out;
        for (const auto& pe : zm::arith::factorize(n).factors)
            out.emplace_back(pe.p, pe.e);
        return out;
    });
    m.def("dk_prime_power", &zm::arith::dk_prime_power);
    m.def("dk", &zm::arith::dk_pointwise, py::arg("k"), py::arg("n"));
    m.def("sieve_dk", &zm::arith::sieve_dk, py::arg("k"), py::arg("x_max"));
    m.def("sieve_dk_cached", &zm::arith::sieve_dk_cached, py::arg("k"), py::arg("x_max"),
          py::arg("cache_dir"));
    m.def("mobius", &zm::arith::mobius);
    m.def("ramanujan_sum", &zm::arith::ramanujan_sum, py::arg("q"), py::arg("h"));
    m.def("brute_force_Dk", &zm::arith::brute_force_Dk, py::arg("k"), py::arg("x"),
          py::arg("h"), py::arg("table"));

    // ---- exactpoly ----
    m.def("gamma_kn",
          [](unsigned k, unsigned n) { return zm::exactpoly::gamma_kn(k, n).get_str(); });
    m.def("gamma_kn_oracle", [](unsigned k, unsigned n) {
        return zm::exactpoly::gamma_kn_oracle(k, n).get_str();
    });
    m.def(
        "w_poly",
        [](unsigned k, const std::string& variant) {
            const auto v = variant == "extra-recip"
                               ? zm::exactpoly::WVariant::extra_recip_np1
                           : variant == "mk-display" ? zm::exactpoly::WVariant::mk_display
                                                     : zm::exactpoly::WVariant::statement;
            const auto w = zm::exactpoly::w_poly(k, v);
            std::vector<std::string> out;
            for (const auto& c : w.coefficients())
                out.push_back(zm::exactpoly::to_string(c));
            return out;
        },
        py::arg("k"), py::arg("variant") = "statement");
    m.def("w_eval", [](unsigned k, double eta) {
        const auto w = zm::exactpoly::w_poly(k);
        double acc = 0;
        for (std::size_t i = w.coefficients().size(); i-- > 0;)
            acc = acc * eta + zm::exactpoly::to_double(w.coefficients()[i]);
        return acc;
    });
    m.def("moment_constant_prediction", [](unsigned k, long num, long den) {
        return zm::exactpoly::to_string(zm::exactpoly::moment_constant_prediction(
            k, zm::exactpoly::make_rational(num, den)));
    });
    m.def("ks_gk",
          [](unsigned k) { return zm::exactpoly::to_string(zm::exactpoly::ks_gk(k)); });
    m.def("ks_gk_partial", &zm::exactpoly::ks_gk_partial);

    // ---- localseries ----
    m.def("stieltjes", [] {
        std::vector<double> out;
        for (const auto& g : zm::localseries::stieltjes()) out.push_back(zm::to_double(g));
        return out;
    });
    m.def("zeta_real", [](double s) {
        return zm::to_double(zm::localseries::zeta_em_q(zm::qreal(s)));
    });
    m.def("prime_zeta", [](double x) {
        return zm::to_double(zm::localseries::prime_zeta_q(zm::qreal(x)));
    });
    m.def(
        "P_k_eval",
        [](unsigned k, double x, std::uint64_t q, std::size_t order, double tol) {
            return zm::localseries::P_k_eval(k, x, q, order, tol);
        },
        py::arg("k"), py::arg("x"), py::arg("q"), py::arg("order") = 8,
        py::arg("tol") = 1e-26);
    m.def("hstar_local_factor", &zm::localseries::hstar_local_factor, py::arg("k"),
          py::arg("p"), py::arg("tol") = 1e-14);

    // ---- singular ----
    py::class_<zm::singular::SingularSeriesEngine>(m, "SingularSeriesEngine")
        .def(py::init([](unsigned k, std::uint64_t Q, std::size_t order, double tol) {
                 return std::make_unique<zm::singular::SingularSeriesEngine>(
                     zm::singular::EngineConfig{
                         .k = k, .q_cutoff = Q, .order = order, .tol = tol});
             }),
             py::arg("k"), py::arg("Q") = 3000, py::arg("order") = 0,
             py::arg("tol") = 1e-26)
        .def("fingerprint", &zm::singular::SingularSeriesEngine::fingerprint)
        .def("P_k", &zm::singular::SingularSeriesEngine::P_k, py::arg("x"), py::arg("q"))
        .def(
            "f_k",
            [](const zm::singular::SingularSeriesEngine& e, double x, std::uint64_t d) {
                const auto v = e.f_k(x, d);
                return py::make_tuple(v.value, v.tail);
            },
            py::arg("x"), py::arg("d"))
        .def(
            "m_k_prime",
            [](const zm::singular::SingularSeriesEngine& e, double x, std::uint64_t h) {
                const auto v = e.m_k_prime(x, h);
                return py::make_tuple(v.value, v.tail);
            },
            py::arg("x"), py::arg("h"))
        .def(
            "m_k_increment",
            [](const zm::singular::SingularSeriesEngine& e, double x1, double x2,
               std::uint64_t h) {
                const auto v = e.m_k_increment(x1, x2, h);
                return py::make_tuple(v.value, v.tail);
            },
            py::arg("x1"), py::arg("x2"), py::arg("h"));

    m.def(
        "a_k",
        [](unsigned k, std::uint64_t P, const std::string& form) {
            const auto a = zm::singular::a_k_eval(k, P, form_from(form));
            py::dict d;
            d["value"] = a.value;
            d["log_value"] = a.log_value;
            d["tail_bound"] = a.tail_bound;
            return d;
        },
        py::arg("k"), py::arg("P") = 100000, py::arg("form") = "eq51");
    m.def(
        "hstar_identity_report",
        [](unsigned k, std::vector<std::uint64_t> primes, double tol) {
            const auto rep = zm::singular::hstar_identity_report(k, primes, tol);
            py::list rows;
            for (const auto& r : rep.rows) {
                py::dict d;
                d["p"] = r.p;
                d["hstar"] = r.hstar;
                d["ak_local"] = r.ak_local;
                d["deviation"] = r.deviation;
                rows.append(d);
            }
            return py::make_tuple(rows, rep.max_deviation);
        },
        py::arg("k"), py::arg("primes"), py::arg("tol") = 1e-14);
    m.def("proposition_trend", [](unsigned k_max, std::uint64_t P) {
        py::list out;
        for (const auto& r : zm::singular::proposition_trend(k_max, P)) {
            py::dict d;
            d["k"] = r.k;
            d["log_ak"] = r.log_ak;
            d["predicted"] = r.predicted;
            d["ratio"] = r.ratio;
            out.append(d);
        }
        return out;
    });
    m.def("correlation_report",
          [](const zm::singular::SingularSeriesEngine& e,
             const zm::arith::DivisorTable& table, std::vector<double> xs,
             std::vector<std::uint64_t> hs) {
              py::list out;
              for (const auto& r : zm::singular::correlation_report(e, table, xs, hs))
                  out.append(prediction_dict(r));
              return out;
          });

    // ---- zetanum ----
    m.def(
        "zeta_crit",
        [](double t, const std::string& method) {
            return zm::zetanum::zeta_crit(t, method_from(method));
        },
        py::arg("t"), py::arg("method") = "auto");
    m.def("zeta_em", [](std::complex<double> s) { return zm::zetanum::zeta_em(s); });
    m.def("rs_theta", &zm::zetanum::rs_theta);
    m.def("rs_Z", &zm::zetanum::rs_Z);
    m.def("chi_factor",
          [](std::complex<double> s) { return zm::zetanum::chi_factor(s); });
    m.def(
        "moment_integral",
        [](unsigned k, double T0, double T1, const std::string& method) {
            const auto r = zm::zetanum::moment_integral(k, T0, T1, method_from(method));
            py::dict d;
            d["k"] = r.k;
            d["T0"] = r.T0;
            d["T1"] = r.T1;
            d["value"] = r.value;
            d["error_estimate"] = r.error_estimate;
            d["points"] = r.points;
            d["exploratory"] = r.exploratory;
            return d;
        },
        py::arg("k"), py::arg("T0"), py::arg("T1"), py::arg("method") = "auto");
    m.def("second_moment_main_term", &zm::zetanum::second_moment_main_term);
    m.def(
        "gk_estimate",
        [](unsigned k, double T, const std::string& norm) {
            const auto n = norm == "refined"
                               ? zm::zetanum::GkNormalization::refined_second_moment
                               : zm::zetanum::GkNormalization::log_t;
            const auto g = zm::zetanum::gk_estimate(k, T, n);
            py::dict d;
            d["value"] = g.value;
            d["a_k"] = g.a_k;
            d["moment"] = g.moment.value;
            return d;
        },
        py::arg("k"), py::arg("T"), py::arg("norm") = "log_t");
    m.def(
        "dpoly_meansq",
        [](unsigned k, std::uint64_t N, double T0, double T1,
           const zm::arith::DivisorTable& table) {
            double err = 0;
            const double v = zm::zetanum::dpoly_meansq(k, N, T0, T1, table, &err);
            return py::make_tuple(v, err);
        },
        py::arg("k"), py::arg("N"), py::arg("T0"), py::arg("T1"), py::arg("table"));
    m.def("mv_diagonal", [](unsigned k, std::uint64_t N, double T,
                            const zm::arith::DivisorTable& table) {
        const auto r = zm::zetanum::mv_diagonal(k, N, T, table);
        return py::make_tuple(r.main, r.o_scale);
    });
    m.def("conjecture4_probe",
          [](unsigned k, double eta, double T, const zm::arith::DivisorTable& table) {
              return prediction_dict(zm::zetanum::conjecture4_probe(k, eta, T, table));
          });
    m.def(
        "conjecture2_probe",
        [](double T, double eta, const zm::arith::DivisorTable& table, bool m_zero) {
            const auto r = zm::zetanum::conjecture2_probe(T, eta, table, m_zero);
            py::dict d;
            d["T"] = r.T;
            d["eta"] = r.eta;
            d["N"] = r.N;
            d["M"] = r.M;
            d["meansq_N"] = r.meansq_N;
            d["meansq_M"] = r.meansq_M;
            d["cross"] = r.cross;
            d["moment"] = r.moment;
            d["sum_ratio"] = r.sum_ratio;
            d["cross_fraction"] = r.cross_fraction;
            return d;
        },
        py::arg("T"), py::arg("eta"), py::arg("table"), py::arg("m_zero") = false);

    // ---- acceptance ----
    m.def(
        "run_criteria",
        [](const std::string& level, const std::filesystem::path& scratch) {
            const auto lv = level == "full" ? zm::acceptance::Level::full
                                            : zm::acceptance::Level::quick;
            py::list out;
            for (const auto& r : zm::acceptance::run_criteria(lv, scratch)) {
                py::dict d;
                d["id"] = r.id;
                d["summary"] = r.summary;
                d["passed"] = r.passed;
                d["seconds"] = r.seconds;
                out.append(d);
            }
            return out;
        },
        py::arg("level") = "quick", py::arg("scratch"));
}
