#include "harmcert/constants.hpp"
#include "harmcert/errors.hpp"
#include "harmcert/harmonic.hpp"
#include "harmcert/lodge.hpp"
#include "harmcert/ramanujan_error.hpp"
#include "harmcert/report.hpp"
#include "harmcert/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace harmcert;

namespace {

std::vector<std::string> strings(const std::vector<Rational>& values)
{
    std::vector<std::string> out;
    for (const auto& v : values) {
        out.push_back(v.to_string());
    }
    return out;
}

PrecisionPolicy policy(unsigned initial_bits, unsigned max_bits)
{
    PrecisionPolicy p{initial_bits, max_bits, 2};
    p.validate();
    return p;
}

py::dict row_dict(const ReportRow& r)
{
    py::dict d;
    d["n"] = r.n;
    d["quantity"] = r.quantity;
    d["midpoint"] = r.midpoint;
    d["radius"] = r.radius;
    d["bound_lo"] = r.bound_lo;
    d["bound_hi"] = r.bound_hi;
    d["verdict"] = std::string(to_string(r.verdict));
    return d;
}

} // namespace

PYBIND11_MODULE(_harmcert, m)
{
    m.doc() = "Certified evaluation of the expansion of H_n in powers of m = n(n+1)/2";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception<PrecisionLimitError>(m, "PrecisionLimitError", PyExc_RuntimeError);

    py::class_<CertifiedReal>(m, "Enclosure")
        .def_property_readonly("precision", &CertifiedReal::precision)
        .def_property_readonly("midpoint", [](const CertifiedReal& x) { return to_decimal(x).midpoint; })
        .def_property_readonly("radius", [](const CertifiedReal& x) { return to_decimal(x).radius; })
        .def_property_readonly("lower", [](const CertifiedReal& x) {
            return format_decimal(x.lower().get(), report_digits, MPFR_RNDD);
        })
        .def_property_readonly("upper", [](const CertifiedReal& x) {
            return format_decimal(x.upper().get(), report_digits, MPFR_RNDU);
        })
        .def("__float__", &CertifiedReal::mid_double)
        .def_property_readonly("width", &CertifiedReal::width_double)
        .def("is_positive", &CertifiedReal::is_positive)
        .def("is_negative", &CertifiedReal::is_negative)
        .def("contains", [](const CertifiedReal& x, const std::string& q) { return x.contains(Rational::parse(q)); },
             py::arg("rational"))
        .def("overlaps", &CertifiedReal::overlaps)
        .def("__repr__", [](const CertifiedReal& x) {
            const auto d = to_decimal(x, 20);
            return "Enclosure(" + d.midpoint + " +/- " + d.radius + ")";
        });

    m.def("harmonic_exact", [](std::uint64_t n) { return harmonic_exact(HarmonicIndex(n)).to_string(); },
          py::arg("n"), "H_n as an exact 'p/q' string.");
    m.def("triangular", [](std::uint64_t n) { return m_of(HarmonicIndex(n)).value(); }, py::arg("n"));
    m.def("bernoulli", [](unsigned k) { return bernoulli(k).to_string(); }, py::arg("k"));
    m.def("ramanujan_approx",
          [](std::uint64_t n, unsigned terms, unsigned bits) { return ramanujan_approx(HarmonicIndex(n), terms, bits); },
          py::arg("n"), py::arg("terms") = 5, py::arg("precision_bits") = 128);
    m.def("ln", [](const std::string& q, unsigned bits) { return ln_enclosure(Rational::parse(q), bits); },
          py::arg("x"), py::arg("precision_bits") = 128);
    m.def("gamma", &gamma_constant, py::arg("precision_bits") = 128);
    m.def("gamma_euler_maclaurin", &gamma_euler_maclaurin, py::arg("precision_bits") = 320,
          py::arg("cutoff") = 1'000'000, py::arg("terms") = 5, py::call_guard<py::gil_scoped_release>());

    m.def("epsilon", [](std::uint64_t n, unsigned bits) { return epsilon(HarmonicIndex(n), bits).enclosure; },
          py::arg("n"), py::arg("precision_bits") = 128);
    m.def("epsilon_step", &epsilon_step, py::arg("n"), py::arg("precision_bits") = 128);
    m.def(
        "theta",
        [](std::uint64_t n, unsigned initial_bits, unsigned max_bits) {
            const auto t = theta(HarmonicIndex(n), policy(initial_bits, max_bits));
            return py::make_tuple(t.theta, std::string(to_string(t.verdict)), t.bits);
        },
        py::arg("n"), py::arg("precision_bits") = 128, py::arg("max_bits") = 4096,
        "(enclosure, verdict, bits) for Theta_n and the claim 0 < Theta_n < 1.");
    m.def(
        "truncation_check",
        [](std::uint64_t n, unsigned terms) {
            const auto c = alternating_truncation_check(HarmonicIndex(n), terms);
            py::dict d;
            d["residual"] = c.residual;
            d["next_term"] = c.next_term.to_string();
            d["verdict"] = std::string(to_string(c.verdict));
            return d;
        },
        py::arg("n"), py::arg("terms"));
    m.def(
        "identity_check",
        [](const std::string& id, std::uint64_t k) {
            const auto r = identity_check(parse_identity(id), k);
            return py::make_tuple(r.lhs.to_string(), r.rhs.to_string(), r.holds);
        },
        py::arg("id"), py::arg("k"), "(lhs, rhs, holds) as exact strings.");
    m.def(
        "decomposition_check",
        [](std::uint64_t n, const std::string& stage, unsigned bits) {
            const auto r = decomposition_check(HarmonicIndex(n), parse_identity(stage), bits);
            return py::make_tuple(r.representation, r.direct, r.overlaps);
        },
        py::arg("n"), py::arg("stage"), py::arg("precision_bits") = 256);
    m.def(
        "positivity_check",
        [](const std::string& id, std::uint64_t n, std::uint64_t k_limit) {
            const auto r = positivity_check(parse_identity(id), n, k_limit);
            py::dict d;
            d["holds"] = r.holds;
            d["in_claimed_range"] = r.in_claimed_range;
            d["checked"] = r.checked;
            d["first_violation"] = r.first_violation;
            return d;
        },
        py::arg("id"), py::arg("n"), py::arg("k_limit") = 0);

    m.def(
        "lodge_quantities",
        [](std::uint64_t n, unsigned initial_bits, unsigned max_bits) {
            const auto c = lodge_quantities(HarmonicIndex(n), policy(initial_bits, max_bits));
            py::dict d;
            for (const auto& b : c.bounds) {
                d[py::str(std::string(b.quantity))] = py::make_tuple(b.value, std::string(to_string(b.verdict)));
            }
            return d;
        },
        py::arg("n"), py::arg("precision_bits") = 128, py::arg("max_bits") = 4096);
    m.def("series_witness", [] {
        const auto w = series_witness();
        return py::make_tuple(strings(w.lambda), strings(w.capital_lambda));
    });
    m.def(
        "limit_scan",
        [](const std::string& quantity, const std::vector<std::uint64_t>& n_list, unsigned bits) {
            return limit_scan(parse_limit_quantity(quantity), n_list, bits);
        },
        py::arg("quantity"), py::arg("n_list"), py::arg("precision_bits") = 128);

    py::class_<CertificationReport>(m, "Report")
        .def_property_readonly("aggregate",
                               [](const CertificationReport& r) { return std::string(to_string(r.aggregate())); })
        .def_property_readonly("rows",
                               [](const CertificationReport& r) {
                                   py::list out;
                                   for (const auto& row : r.rows) {
                                       out.append(row_dict(row));
                                   }
                                   return out;
                               })
        .def("to_csv", &CertificationReport::to_csv)
        .def("to_json", &CertificationReport::to_json)
        .def_static("from_csv", &CertificationReport::from_csv)
        .def_static("from_json", &CertificationReport::from_json)
        .def("__len__", [](const CertificationReport& r) { return r.rows.size(); });

    m.def(
        "certify_theorem",
        [](std::uint64_t first, std::uint64_t last, unsigned initial_bits, unsigned max_bits, unsigned threads) {
            return certify_theorem(first, last, policy(initial_bits, max_bits), threads);
        },
        py::arg("first"), py::arg("last"), py::arg("precision_bits") = 128, py::arg("max_bits") = 4096,
        py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
    m.def(
        "certify_corollaries",
        [](std::uint64_t first, std::uint64_t last, unsigned initial_bits, unsigned max_bits, unsigned threads) {
            return certify_corollaries(first, last, policy(initial_bits, max_bits), threads);
        },
        py::arg("first"), py::arg("last"), py::arg("precision_bits") = 128, py::arg("max_bits") = 4096,
        py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
}
