#include "polytri/algebra.hpp"
#include "polytri/asymptotics.hpp"
#include "polytri/color_vector.hpp"
#include "polytri/enumerate.hpp"
#include "polytri/expansion.hpp"
#include "polytri/genfun.hpp"
#include "polytri/identities.hpp"
#include "polytri/polynomial.hpp"
#include "polytri/sturm.hpp"
#include "polytri/triangle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace polytri;

Rational to_rational(py::handle value) {
    if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
    if (py::isinstance<py::int_>(value))
        return parse_rational(py::str(value).cast<std::string>());
    if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
        const BigInt num{py::str(value.attr("numerator")).cast<std::string>()};
        const BigInt den{py::str(value.attr("denominator")).cast<std::string>()};
        return Rational(num, den);
    }
    throw py::type_error("expected int, 'p/q' string, or Fraction");
}

ColorVector to_colors(py::handle seq) {
    std::vector<Rational> entries;
    for (py::handle item : py::reinterpret_borrow<py::iterable>(seq)) entries.push_back(to_rational(item));
    return ColorVector(std::move(entries));
}

py::object to_fraction(const Rational& value) {
    py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(py::str(to_string(value)));
}

py::object to_py_int(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(py::str(value.str()));
}

py::list fractions(const std::vector<Rational>& values) {
    py::list out;
    for (const Rational& v : values) out.append(to_fraction(v));
    return out;
}

py::list matrix_to_list(const TruncatedMatrix& m) {
    py::list out;
    for (size_t r = 0; r < m.rows(); ++r) {
        py::list row;
        for (size_t c = 0; c < m.cols(); ++c) row.append(to_fraction(m.at(r, c)));
        out.append(row);
    }
    return out;
}

DensePolynomial poly_from(py::handle seq) {
    std::vector<Rational> coeffs;
    for (py::handle item : py::reinterpret_borrow<py::iterable>(seq)) coeffs.push_back(to_rational(item));
    return DensePolynomial(std::move(coeffs));
}

py::dict report_to_dict(const IdentityReport& report) {
    py::dict out;
    out["identity"] = report.tag;
    switch (report.status) {
        case IdentityReport::Status::Passed: out["status"] = "passed"; break;
        case IdentityReport::Status::Failed: out["status"] = "failed"; break;
        case IdentityReport::Status::Rejected:
            out["status"] = "rejected";
            out["reason"] = report.rejection_reason;
            break;
    }
    py::list counterexamples;
    for (const Counterexample& ce : report.counterexamples) {
        py::dict entry;
        entry["where"] = ce.where;
        entry["lhs"] = ce.lhs;
        entry["rhs"] = ce.rhs;
        counterexamples.append(entry);
    }
    out["counterexamples"] = counterexamples;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact coefficients of polynomial powers and their surrounding machinery";

    m.def(
        "coeff",
        [](py::handle a, int k, long long n) { return to_fraction(poly_coeff(to_colors(a), k, n)); },
        py::arg("a"), py::arg("k"), py::arg("n"),
        "Coefficient of t^n in p_a(t)^k, exact.");
    m.def(
        "row", [](py::handle a, int k) { return fractions(triangle_row(to_colors(a), k)); },
        py::arg("a"), py::arg("k"), "Row k of the triangle, exact.");
    m.def(
        "triangle",
        [](py::handle a, int k_max) {
            const ColorVector colors = to_colors(a);
            py::list rows;
            for (int k = 0; k <= k_max; ++k) rows.append(fractions(triangle_row(colors, k)));
            return rows;
        },
        py::arg("a"), py::arg("k_max"), "Rows 0..k_max of the triangle.");
    m.def(
        "score_distribution",
        [](py::handle a, int k) { return fractions(score_distribution(to_colors(a), k)); },
        py::arg("a"), py::arg("k"), "Exact score distribution after k weighted draws.");
    m.def(
        "coeff_by_partitions",
        [](py::handle a, int k, long long n) {
            return to_fraction(coeff_by_partitions(to_colors(a), k, n));
        },
        py::arg("a"), py::arg("k"), py::arg("n"),
        "Same value as coeff, via the restricted-partition sum.");
    m.def(
        "monomial_expansion",
        [](int k, long long n, int m_degree) {
            py::dict out;
            for (const auto& [exponents, count] : monomial_expansion(k, n, m_degree).terms)
                out[py::tuple(py::cast(exponents))] = to_py_int(count);
            return out;
        },
        py::arg("k"), py::arg("n"), py::arg("m"),
        "Exponent vectors (k_0..k_m) with their multinomial counts.");
    m.def(
        "alpha",
        [](py::handle a, long long n, long long i) { return to_fraction(alpha(to_colors(a), n, i)); },
        py::arg("a"), py::arg("n"), py::arg("i"),
        "Coefficient alpha_{n,i} from the truncated vector (a_1..a_m).");
    m.def(
        "reverse",
        [](py::handle a) { return fractions(to_colors(a).reversed().entries()); }, py::arg("a"),
        "Reversed weight vector Ja, trimmed to genuine degree.");

    m.def(
        "compose",
        [](py::handle a, py::handle b) {
            return fractions(compose(to_colors(a), to_colors(b)).entries());
        },
        py::arg("a"), py::arg("b"), "Coefficients of p_a(p_b(t)).");
    m.def(
        "s_matrix",
        [](py::handle a, int size) { return matrix_to_list(s_matrix(to_colors(a), size)); },
        py::arg("a"), py::arg("size"), "Array with entry (r, s) = <r+s, m*r>_a.");
    m.def(
        "triangle_product",
        [](py::handle a, py::handle b, int k_rows) {
            auto [product, direct] = triangle_product(to_colors(a), to_colors(b), k_rows);
            return py::make_tuple(matrix_to_list(product), matrix_to_list(direct));
        },
        py::arg("a"), py::arg("b"), py::arg("k_rows"),
        "K-row truncations of T(a)*T(b) and of T(a o b).");

    m.def(
        "p_polynomial",
        [](py::handle a, int n) { return fractions(p_polynomial(to_colors(a), n).coefficients()); },
        py::arg("a"), py::arg("n"),
        "Numerator polynomial of the ordinary column generating function.");
    m.def(
        "r_polynomial",
        [](py::handle a, int n) { return fractions(r_polynomial(to_colors(a), n).coefficients()); },
        py::arg("a"), py::arg("n"),
        "Polynomial factor of the exponential column generating function.");
    m.def(
        "pm2_closed_form", [](int n) { return fractions(pm2_closed_form(n).coefficients()); },
        py::arg("n"), "Colorless m=2 column polynomial from the solved recurrence.");
    m.def(
        "pm2_zeros",
        [](int n) {
            const Pm2Zeros z = pm2_zeros(n);
            return py::make_tuple(z.nontrivial, z.trivial_multiplicity);
        },
        py::arg("n"), "(distinct nonzero real zeros, multiplicity of the zero at 0).");
    m.def(
        "fibonacci", [](int n) { return to_py_int(fibonacci_trinomial(n)); }, py::arg("n"),
        "F_n computed exactly from the trinomial column polynomial.");
    m.def("hermite", &hermite_eval, py::arg("n"), py::arg("x"),
          "Hermite polynomial by the three-term recurrence.");
    m.def("hermite_series", &hermite_trinomial_series, py::arg("n"), py::arg("x"), py::arg("tol"),
          "Hermite polynomial from the trinomial-coefficient series.");
    m.def(
        "gegenbauer_check",
        [](py::handle a, int k, long long n) {
            const auto [triangle_value, recurrence_value] = gegenbauer_check(to_colors(a), k, n);
            return py::make_tuple(to_fraction(triangle_value), to_fraction(recurrence_value));
        },
        py::arg("a"), py::arg("k"), py::arg("n"),
        "(triangle value, ultraspherical recurrence value); equal when valid.");
    m.def(
        "sturm_real_root_count",
        [](py::handle coefficients) { return sturm_real_root_count(poly_from(coefficients)); },
        py::arg("coefficients"), "Distinct real roots of the polynomial, exact.");
    m.def(
        "conjecture_scan",
        [](int m_degree, int n_max) {
            const ConjectureReport report = conjecture_scan(m_degree, n_max);
            py::dict out;
            out["m"] = report.m;
            out["nmax"] = report.n_max;
            out["counterexamples"] = report.counterexamples;
            out["checked"] = report.entries.size();
            return out;
        },
        py::arg("m"), py::arg("nmax"),
        "Real-rootedness scan of the colorless column polynomials.");

    m.def(
        "occupancy_count",
        [](py::handle a, int k, long long n) {
            return to_fraction(occupancy_oracle(to_colors(a), k, n));
        },
        py::arg("a"), py::arg("k"), py::arg("n"), "Brute-force weighted occupancy count.");
    m.def(
        "lattice_path_count",
        [](py::handle a, int k, long long n) {
            return to_fraction(lattice_path_count(to_colors(a), k, n));
        },
        py::arg("a"), py::arg("k"), py::arg("n"), "Brute-force weighted lattice-path count.");
    m.def(
        "spin_config_count",
        [](py::handle a, int k, py::handle magnetization) {
            return to_fraction(spin_config_count(to_colors(a), k, to_rational(magnetization)));
        },
        py::arg("a"), py::arg("k"), py::arg("magnetization"),
        "Weighted spin configurations with the given mean magnetization.");
    m.def(
        "gaussian_shape_count",
        [](int k, int m_degree, long long n) { return to_py_int(gaussian_shape_count(k, m_degree, n)); },
        py::arg("k"), py::arg("m"), py::arg("n"),
        "Partitions of n inside a k x m box (Gaussian binomial coefficient).");
    m.def(
        "sample_scores",
        [](py::handle a, int k, long long trials, uint64_t seed) {
            return fractions(sample_scores(to_colors(a), k, trials, seed).frequencies);
        },
        py::arg("a"), py::arg("k"), py::arg("trials"), py::arg("seed"),
        "Empirical score frequencies from a seeded reproducible sampler.");

    m.def(
        "drift", [](py::handle a, double x) { return drift(to_colors(a), x); }, py::arg("a"),
        py::arg("x"), "x p'(x) / p(x).");
    m.def(
        "dispersion", [](py::handle a, double x) { return dispersion(to_colors(a), x); },
        py::arg("a"), py::arg("x"), "p''/p - (p'/p)^2 + p'/(x p).");
    m.def(
        "saddle_point", [](py::handle a, double rho) { return saddle_point(to_colors(a), rho); },
        py::arg("a"), py::arg("rho"), "Positive root of sum (i - rho) a_i t^i.");
    m.def(
        "entropy", [](py::handle a, double rho) { return entropy(to_colors(a), rho); },
        py::arg("a"), py::arg("rho"), "Entropy density in nats per box.");
    m.def("entropy_closed_m1", &entropy_closed_m1, py::arg("a0"), py::arg("a1"), py::arg("rho"),
          "Closed-form entropy density for m = 1.");
    m.def(
        "entropy_curve",
        [](py::handle a, int samples) { return entropy_curve(to_colors(a), samples); },
        py::arg("a"), py::arg("samples"), "Uniform-grid (rho, entropy) pairs over [0, m].");
    m.def(
        "daniels_good_estimate",
        [](py::handle a, long long k, long long n) {
            return daniels_good_estimate(to_colors(a), k, n);
        },
        py::arg("a"), py::arg("k"), py::arg("n"), "Saddle-point estimate of coeff(a, k, n).");
    m.def(
        "central_trinomial_asymp",
        [](py::handle a, long long k) { return central_trinomial_asymp(to_colors(a), k); },
        py::arg("a"), py::arg("k"), "Central-column estimate for m = 2.");

    m.def(
        "verify_identity",
        [](const std::string& tag, py::handle a, int k_max) {
            const auto id = parse_identity_tag(tag);
            if (!id) throw py::value_error("unknown identity tag '" + tag + "'");
            return report_to_dict(verify_identity(*id, to_colors(a), k_max));
        },
        py::arg("tag"), py::arg("a"), py::arg("k_max"), "Check one identity exactly.");
    m.def("identity_tags", [] {
        std::vector<std::string> tags;
        for (IdentityId id : all_identities()) tags.push_back(identity_tag(id));
        return tags;
    });

    py::list all_names;
    for (const char* name :
         {"coeff", "row", "triangle", "score_distribution", "coeff_by_partitions",
          "monomial_expansion", "alpha", "reverse", "compose", "s_matrix", "triangle_product",
          "p_polynomial", "r_polynomial", "pm2_closed_form", "pm2_zeros", "fibonacci", "hermite",
          "hermite_series", "gegenbauer_check", "sturm_real_root_count", "conjecture_scan",
          "occupancy_count", "lattice_path_count", "spin_config_count", "gaussian_shape_count",
          "sample_scores", "drift", "dispersion", "saddle_point", "entropy", "entropy_closed_m1",
          "entropy_curve", "daniels_good_estimate", "central_trinomial_asymp", "verify_identity",
          "identity_tags"})
        all_names.append(name);
    m.attr("__all__") = all_names;
}
