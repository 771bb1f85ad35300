#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diastat/catalog.hpp"
#include "diastat/entropy.hpp"
#include "diastat/errors.hpp"
#include "diastat/geometry.hpp"
#include "diastat/hilbert.hpp"
#include "diastat/homog.hpp"
#include "diastat/json_io.hpp"
#include "diastat/rational.hpp"

namespace py = pybind11;

namespace pybind11::detail {

/// diastat::Rational <-> fractions.Fraction (also accepts ints and
/// "num/den" strings on the way in).
template <>
struct type_caster<diastat::Rational> {
 public:
  PYBIND11_TYPE_CASTER(diastat::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (src.is_none()) return false;
    if (PyLong_Check(src.ptr())) {
      value = diastat::Rational(src.cast<long long>());
      return true;
    }
    if (PyUnicode_Check(src.ptr())) {
      try {
        value = diastat::parse_rational(src.cast<std::string>());
        return true;
      } catch (const std::exception&) {
        return false;
      }
    }
    const object fraction_cls = module_::import("fractions").attr("Fraction");
    if (isinstance(src, fraction_cls)) {
      value = diastat::Rational(src.attr("numerator").cast<long long>(),
                                src.attr("denominator").cast<long long>());
      return true;
    }
    return false;
  }

  static handle cast(const diastat::Rational& r, return_value_policy, handle) {
    const object fraction_cls = module_::import("fractions").attr("Fraction");
    return fraction_cls(r.numerator(), r.denominator()).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace diastat;
using geometry::DomainModel;
using geometry::Point;

hilbert::GaugeTerm gauge_from_optional(const std::optional<Eigen::VectorXcd>& alpha) {
  hilbert::GaugeTerm gauge;
  if (alpha) gauge.alpha = *alpha;
  return gauge;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Diastatic entropy, balanced metrics and weighted Bergman spaces on "
      "bounded complex domains";

  // Exception hierarchy.
  static py::exception<Error> base_exc(m, "DiastatError", PyExc_RuntimeError);
  py::register_exception<InvalidParameterError>(m, "InvalidParameterError",
                                                base_exc.ptr());
  py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError",
                                                 base_exc.ptr());
  py::register_exception<PointOutsideDomainError>(m, "PointOutsideDomainError",
                                                  base_exc.ptr());
  py::register_exception<DivergentNormError>(m, "DivergentNormError",
                                             base_exc.ptr());
  py::register_exception<FactorizationError>(m, "FactorizationError",
                                             base_exc.ptr());
  py::register_exception<VanishingKernelError>(m, "VanishingKernelError",
                                               base_exc.ptr());
  py::register_exception<NoBracketError>(m, "NoBracketError", base_exc.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base_exc.ptr());

  // --- catalog ---
  py::class_<catalog::DomainDescriptor>(m, "DomainDescriptor")
      .def_property_readonly(
          "family",
          [](const catalog::DomainDescriptor& d) { return to_string(d.family); })
      .def_readonly("params", &catalog::DomainDescriptor::params)
      .def_readonly("rank", &catalog::DomainDescriptor::rank)
      .def_readonly("a", &catalog::DomainDescriptor::a)
      .def_readonly("b", &catalog::DomainDescriptor::b)
      .def_readonly("dim", &catalog::DomainDescriptor::dim)
      .def_readonly("genus", &catalog::DomainDescriptor::genus)
      .def("to_json",
           [](const catalog::DomainDescriptor& d) {
             return json_io::descriptor_to_json(d).dump();
           })
      .def("__repr__", [](const catalog::DomainDescriptor& d) {
        return "DomainDescriptor(" + json_io::descriptor_to_json(d).dump() + ")";
      });

  m.def(
      "lookup_domain",
      [](const std::string& family, const std::vector<long long>& params) {
        return catalog::lookup_domain(catalog::family_from_string(family), params);
      },
      py::arg("family"), py::arg("params") = std::vector<long long>{},
      "Invariants of an irreducible bounded symmetric domain (families I..VI)");
  m.def("entropy_symmetric", &catalog::entropy_symmetric, py::arg("descriptor"),
        "(genus-1)/genus as an exact Fraction");
  m.def("symmetric_root_constants", &catalog::symmetric_root_constants,
        py::arg("descriptor"));
  m.def("standard_entries", &catalog::standard_entries);

  // --- homog ---
  py::class_<homog::RootConstants>(m, "RootConstants")
      .def(py::init([](long long rank, std::vector<Rational> p,
                       std::vector<Rational> q, std::vector<Rational> b,
                       std::vector<Rational> gamma) {
             homog::RootConstants c{rank, std::move(p), std::move(q), std::move(b),
                                    std::move(gamma)};
             homog::validate(c);
             return c;
           }),
           py::arg("rank"), py::arg("p"), py::arg("q"), py::arg("b"),
           py::arg("gamma"))
      .def_readonly("rank", &homog::RootConstants::rank)
      .def_readonly("p", &homog::RootConstants::p)
      .def_readonly("q", &homog::RootConstants::q)
      .def_readonly("b", &homog::RootConstants::b)
      .def_readonly("gamma", &homog::RootConstants::gamma)
      .def("to_json",
           [](const homog::RootConstants& c) {
             return json_io::root_constants_to_json(c).dump();
           })
      .def("__repr__", [](const homog::RootConstants& c) {
        return "RootConstants(" + json_io::root_constants_to_json(c).dump() + ")";
      });

  m.def("constants_from_root_dims", &homog::constants_from_root_dims,
        py::arg("rank"), py::arg("dims_upper"), py::arg("dims_half"),
        py::arg("gamma"),
        "Build constants from root-space dimensions: p_k = sum_{i<k} "
        "dims_upper[i][k], q_k = sum_{l>k} dims_upper[k][l], b_k = dims_half[k]/2");
  m.def("entropy_homogeneous", &homog::entropy_homogeneous, py::arg("constants"),
        "max_k (1 + p_k + b_k + q_k/2) / gamma_k as an exact Fraction");
  m.def("balanced_threshold", &homog::balanced_threshold, py::arg("constants"),
        "lambda*g is balanced exactly when lambda exceeds this Fraction");
  m.def("is_balanced_scale", &homog::is_balanced_scale, py::arg("constants"),
        py::arg("lam"));
  m.def("bergman_gamma", &homog::bergman_gamma, py::arg("constants"));
  m.def("entropy_scaled", &homog::entropy_scaled, py::arg("entropy"),
        py::arg("lam"));

  // --- geometry ---
  py::class_<DomainModel>(m, "DomainModel")
      .def_static("disk", &DomainModel::disk, py::arg("mu") = 1.0)
      .def_static("ball", &DomainModel::ball, py::arg("n"), py::arg("mu") = 1.0)
      .def_static("polydisk", &DomainModel::polydisk, py::arg("n"),
                  py::arg("mu") = 1.0)
      .def_static("type_i", &DomainModel::type_i, py::arg("p"), py::arg("q"),
                  py::arg("mu") = 1.0)
      .def_property_readonly("dim", &DomainModel::dim)
      .def_property_readonly("mu", &DomainModel::mu)
      .def_property_readonly("rows", &DomainModel::rows)
      .def_property_readonly("cols", &DomainModel::cols)
      .def("boundary_radius", &DomainModel::boundary_radius, py::arg("z"))
      .def("contains", &DomainModel::contains, py::arg("z"))
      .def("potential", &DomainModel::potential, py::arg("z"))
      .def("diastasis", &DomainModel::diastasis, py::arg("w"), py::arg("z"))
      .def("volume_density", &DomainModel::volume_density, py::arg("z"))
      .def("closed_form_kernel", &DomainModel::closed_form_kernel, py::arg("lam"),
           py::arg("z"), py::arg("w"))
      .def("lambda_threshold", &DomainModel::lambda_threshold)
      .def("__repr__", &DomainModel::describe);

  // --- hilbert ---
  py::class_<hilbert::BalancedSample>(m, "BalancedSample")
      .def_readonly("z", &hilbert::BalancedSample::z)
      .def_readonly("radius", &hilbert::BalancedSample::radius)
      .def_readonly("epsilon", &hilbert::BalancedSample::epsilon)
      .def_readonly("epsilon_half", &hilbert::BalancedSample::epsilon_half)
      .def_readonly("tail_limited", &hilbert::BalancedSample::tail_limited);

  py::class_<hilbert::BalancedReport>(m, "BalancedReport")
      .def_readonly("balanced", &hilbert::BalancedReport::balanced)
      .def_property_readonly(
          "verdict",
          [](const hilbert::BalancedReport& r) { return to_string(r.verdict); })
      .def_readonly("mean_epsilon", &hilbert::BalancedReport::mean_epsilon)
      .def_readonly("max_rel_deviation", &hilbert::BalancedReport::max_rel_deviation)
      .def_readonly("rel_tol", &hilbert::BalancedReport::rel_tol)
      .def_readonly("truncation_limited",
                    &hilbert::BalancedReport::truncation_limited)
      .def_readonly("samples", &hilbert::BalancedReport::samples)
      .def_readonly("note", &hilbert::BalancedReport::note)
      .def("__repr__", [](const hilbert::BalancedReport& r) {
        return "BalancedReport(" + to_string(r.verdict) + ")";
      });

  py::class_<hilbert::KernelApproximation>(m, "KernelApproximation")
      .def_property_readonly("model", &hilbert::KernelApproximation::model)
      .def_property_readonly("lam", &hilbert::KernelApproximation::lambda)
      .def_property_readonly("degree", &hilbert::KernelApproximation::degree)
      .def_property_readonly("basis_size", &hilbert::KernelApproximation::basis_size)
      .def_property_readonly(
          "gram",
          [](const hilbert::KernelApproximation& ka) { return ka.gram(); })
      .def("kernel", &hilbert::KernelApproximation::kernel, py::arg("z"),
           py::arg("w"), py::arg("basis_limit") = 0)
      .def("epsilon", &hilbert::KernelApproximation::epsilon, py::arg("z"),
           py::arg("basis_limit") = 0)
      .def("kernel_diastasis", &hilbert::KernelApproximation::kernel_diastasis,
           py::arg("z0"), py::arg("z"))
      .def("is_balanced", &hilbert::KernelApproximation::is_balanced,
           py::arg("sample_points"), py::arg("rel_tol") = 1e-4)
      .def("__repr__", [](const hilbert::KernelApproximation& ka) {
        return "KernelApproximation(" + ka.model().describe() +
               ", lambda=" + json_io::format_double(ka.lambda()) +
               ", degree=" + std::to_string(ka.degree()) + ")";
      });

  m.def(
      "build_space",
      [](const DomainModel& model, double lam, int degree,
         const std::optional<Eigen::VectorXcd>& gauge_alpha, int qmc_points) {
        hilbert::QuadratureSpec spec;
        spec.qmc_points = qmc_points;
        return hilbert::build_space(model, lam, degree, spec,
                                    gauge_from_optional(gauge_alpha));
      },
      py::arg("model"), py::arg("lam"), py::arg("degree"),
      py::arg("gauge_alpha") = std::nullopt, py::arg("qmc_points") = 1 << 15,
      "Monomial Gram matrix of the weighted Bergman space by quadrature, "
      "Cholesky-factorized");
  m.def("default_sample_points", &hilbert::default_sample_points, py::arg("model"),
        py::arg("n_radii") = 8, py::arg("n_angles") = 3,
        py::arg("rho_sample") = 0.9);

  // --- entropy ---
  py::class_<entropy::ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("c", &entropy::ConvergenceReport::c)
      .def_property_readonly(
          "verdict",
          [](const entropy::ConvergenceReport& r) { return to_string(r.verdict); })
      .def_property_readonly(
          "integrals",
          [](const entropy::ConvergenceReport& r) { return r.shells.integrals; })
      .def_property_readonly(
          "ratios",
          [](const entropy::ConvergenceReport& r) { return r.shells.ratios; })
      .def_property_readonly(
          "tail_decay",
          [](const entropy::ConvergenceReport& r) { return r.shells.tail_decay; })
      .def("__repr__", [](const entropy::ConvergenceReport& r) {
        return "ConvergenceReport(c=" + json_io::format_double(r.c) + ", " +
               to_string(r.verdict) + ")";
      });

  py::class_<entropy::EntropyEstimate>(m, "EntropyEstimate")
      .def_readonly("lower", &entropy::EntropyEstimate::lower)
      .def_readonly("upper", &entropy::EntropyEstimate::upper)
      .def_readonly("z0", &entropy::EntropyEstimate::z0)
      .def_readonly("tol", &entropy::EntropyEstimate::tol)
      .def_readonly("probes", &entropy::EntropyEstimate::probes)
      .def("to_json",
           [](const entropy::EntropyEstimate& e) {
             return json_io::estimate_to_json(e).dump();
           })
      .def("__repr__", [](const entropy::EntropyEstimate& e) {
        return "EntropyEstimate([" + json_io::format_double(e.lower) + ", " +
               json_io::format_double(e.upper) + "])";
      });

  m.def(
      "classify_convergence",
      [](const DomainModel& model, const Point& z0, double c, int jmin, int jmax) {
        entropy::ShellSchedule schedule;
        schedule.jmin = jmin;
        schedule.jmax = jmax;
        return entropy::classify_convergence(model, z0, c, schedule);
      },
      py::arg("model"), py::arg("z0"), py::arg("c"), py::arg("jmin") = 4,
      py::arg("jmax") = 14,
      "Shell-exhaustion verdict for the integrability of e^{-c D_{z0}}");
  m.def(
      "estimate_entropy",
      [](const DomainModel& model, const Point& z0, double tol, int jmin,
         int jmax) {
        entropy::ShellSchedule schedule;
        schedule.jmin = jmin;
        schedule.jmax = jmax;
        return entropy::estimate_entropy(model, z0, tol, schedule);
      },
      py::arg("model"), py::arg("z0"), py::arg("tol") = 0.05, py::arg("jmin") = 4,
      py::arg("jmax") = 14,
      "Bracket the diastatic entropy by bisection on shell verdicts");

  m.attr("__version__") = "0.1.0";
}
