#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "elsim/config.hpp"
#include "elsim/diagnostics.hpp"
#include "elsim/experiments.hpp"
#include "elsim/field.hpp"
#include "elsim/grid.hpp"
#include "elsim/linear_solver.hpp"
#include "elsim/mms.hpp"
#include "elsim/norms.hpp"
#include "elsim/operators.hpp"
#include "elsim/parabolic.hpp"
#include "elsim/picard.hpp"
#include "elsim/runner.hpp"
#include "elsim/snapshot.hpp"
#include "elsim/state.hpp"
#include "elsim/transport.hpp"
#include "elsim/version.hpp"

namespace py = pybind11;
using namespace elsim;

namespace {

Field field_from_array(const GridSpec& g, int components,
                       const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    const std::int64_t expect = std::int64_t(components) * g.node_count();
    if (a.size() != expect)
        throw std::invalid_argument("array has " + std::to_string(a.size()) +
                                    " entries, expected " + std::to_string(expect));
    std::vector<double> values(static_cast<std::size_t>(expect), 0.0);
    std::copy(a.data(), a.data() + expect, values.begin());
    return Field(g, components, std::move(values));
}

py::array_t<double> field_to_array(const Field& f) {
    py::array_t<double> out({py::ssize_t(f.components()), py::ssize_t(f.node_count())});
    std::copy(f.raw().begin(), f.raw().end(), out.mutable_data());
    return out;
}

std::array<double, 2> as_point(const std::vector<double>& p) {
    if (p.empty() || p.size() > 2)
        throw std::invalid_argument("a point needs 1 or 2 coordinates");
    return {p[0], p.size() > 1 ? p[1] : 0.0};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "compressible nematic flow bench core";
    m.attr("__version__") = kVersion;

    py::register_exception<config_error>(m, "ConfigError");
    py::register_exception<solver_error>(m, "SolverError");
    py::register_exception<picard_divergence_error>(m, "DivergenceError");
    py::register_exception<picard_nonconvergence_error>(m, "NonConvergenceError");

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<int, std::array<int, 2>, std::array<double, 2>>(), py::arg("dim"),
             py::arg("nodes"), py::arg("extent"))
        .def_static("line", &GridSpec::line, py::arg("nodes"), py::arg("extent"))
        .def_static("box", &GridSpec::box, py::arg("nodes_x"), py::arg("nodes_y"),
                    py::arg("extent_x"), py::arg("extent_y"))
        .def_property_readonly("dim", &GridSpec::dim)
        .def("nodes", &GridSpec::nodes, py::arg("axis"))
        .def("extent", &GridSpec::extent, py::arg("axis"))
        .def("spacing", &GridSpec::spacing, py::arg("axis"))
        .def_property_readonly("min_spacing", &GridSpec::min_spacing)
        .def_property_readonly("node_count", &GridSpec::node_count)
        .def("coord", &GridSpec::coord, py::arg("axis"), py::arg("i"))
        .def("index", &GridSpec::index, py::arg("ix"), py::arg("iy") = 0)
        .def("on_boundary", &GridSpec::on_boundary, py::arg("ix"), py::arg("iy") = 0)
        .def(py::self == py::self);

    py::class_<TimeGrid>(m, "TimeGrid")
        .def(py::init<double, int>(), py::arg("t_end"), py::arg("steps"))
        .def_property_readonly("t_end", &TimeGrid::t_end)
        .def_property_readonly("steps", &TimeGrid::steps)
        .def_property_readonly("dt", &TimeGrid::dt)
        .def("time", &TimeGrid::time, py::arg("level"))
        .def(py::self == py::self);

    py::class_<Field>(m, "Field")
        .def(py::init<GridSpec, int>(), py::arg("grid"), py::arg("components"))
        .def(py::init(&field_from_array), py::arg("grid"), py::arg("components"),
             py::arg("values"))
        .def_static("scalar", &Field::scalar)
        .def_static("vector", &Field::vector)
        .def_static("director", &Field::director)
        .def_static("tensor", &Field::tensor)
        .def_property_readonly("grid", &Field::grid)
        .def_property_readonly("components", &Field::components)
        .def_property_readonly("node_count", &Field::node_count)
        .def("value", [](const Field& f, int c, std::int64_t node) { return f.value(c, node); },
             py::arg("c"), py::arg("node"))
        .def("set_value",
             [](Field& f, int c, std::int64_t node, double v) { f.value(c, node) = v; },
             py::arg("c"), py::arg("node"), py::arg("value"))
        .def("numpy", &field_to_array)
        .def("__add__", [](const Field& a, const Field& b) { return a + b; })
        .def("__sub__", [](const Field& a, const Field& b) { return a - b; })
        .def("__rmul__", [](const Field& f, double s) { return s * f; });

    m.def("max_abs", &max_abs);
    m.def("min_value", &min_value);
    m.def("max_abs_diff", &max_abs_diff);

    m.def("partial", &partial, py::arg("field"), py::arg("axis"));
    m.def("gradient", &gradient);
    m.def("divergence", &divergence);
    m.def("laplacian", &laplacian);
    m.def("interpolate",
          [](const Field& f, const std::vector<double>& p) { return interpolate(f, as_point(p)); },
          py::arg("field"), py::arg("point"));
    m.def("interpolate_component",
          [](const Field& f, int c, const std::vector<double>& p) {
              return interpolate_component(f, c, as_point(p));
          },
          py::arg("field"), py::arg("c"), py::arg("point"));

    m.attr("INF_NORM") = kInfNorm;
    m.def("norm_lq", &norm_lq, py::arg("field"), py::arg("q"));
    m.def("norm_w1q", &norm_w1q, py::arg("field"), py::arg("q"));
    m.def("norm_h1", &norm_h1);
    m.def("norm_h2", &norm_h2);
    m.def("norm_h3", &norm_h3);
    m.def("weighted_l2", &weighted_l2, py::arg("rho"), py::arg("w"));

    m.def("write_snapshot",
          [](const std::string& path, const Field& f, double time) {
              write_snapshot(path, f, time);
          },
          py::arg("path"), py::arg("field"), py::arg("time"));
    m.def("read_snapshot", [](const std::string& path) {
        Snapshot s = read_snapshot(path);
        return py::make_tuple(std::move(s.field), s.time);
    });

    py::class_<PressureLaw>(m, "PressureLaw")
        .def(py::init<>())
        .def_readwrite("a", &PressureLaw::a)
        .def_readwrite("gamma", &PressureLaw::gamma)
        .def("validate", &PressureLaw::validate);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<>())
        .def_readwrite("mu", &ModelParams::mu)
        .def_readwrite("lambda_", &ModelParams::lambda)
        .def_readwrite("nu", &ModelParams::nu)
        .def_readwrite("sigma", &ModelParams::sigma)
        .def_readwrite("delta", &ModelParams::delta)
        .def_readwrite("m", &ModelParams::m)
        .def_readwrite("pressure", &ModelParams::pressure)
        .def("validate", &ModelParams::validate);

    m.def("pressure_value", &pressure_value, py::arg("law"), py::arg("rho"));
    m.def("pressure_deriv_value", &pressure_deriv_value, py::arg("law"), py::arg("rho"));
    m.def("pressure", &pressure, py::arg("rho"), py::arg("law"));
    m.def("pressure_deriv", &pressure_deriv, py::arg("rho"), py::arg("law"));
    m.def("gl_force", &gl_force, py::arg("d"), py::arg("sigma"));
    m.def("gl_potential", &gl_potential, py::arg("d"), py::arg("sigma"));
    m.def("gl_linearized", &gl_linearized, py::arg("n"), py::arg("d"), py::arg("m"),
          py::arg("sigma"));
    m.def("ericksen_stress", &ericksen_stress, py::arg("d"), py::arg("sigma"));
    m.def("divergence_tensor", &divergence_tensor);
    m.def("elastic_force", &elastic_force, py::arg("d"), py::arg("params"));

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &SolverConfig::rel_tol)
        .def_readwrite("max_iterations", &SolverConfig::max_iterations)
        .def_readwrite("stagnation_window", &SolverConfig::stagnation_window)
        .def_readwrite("stagnation_factor", &SolverConfig::stagnation_factor);

    py::class_<SolverStats>(m, "SolverStats")
        .def(py::init<>())
        .def_readonly("iterations", &SolverStats::iterations)
        .def_readonly("final_residual", &SolverStats::final_residual)
        .def_readonly("residual_history", &SolverStats::residual_history);

    py::class_<LinearOperatorSpec>(m, "LinearOperatorSpec")
        .def(py::init<ScalarField, double, Field>(), py::arg("mass"), py::arg("diffusion"),
             py::arg("dirichlet"))
        .def_readonly("mass", &LinearOperatorSpec::mass)
        .def_readonly("diffusion", &LinearOperatorSpec::diffusion)
        .def_readonly("dirichlet", &LinearOperatorSpec::dirichlet);

    m.def("spd_solve",
          [](const LinearOperatorSpec& op, const Field& rhs, const SolverConfig& cfg,
             const std::optional<Field>& guess) {
              SolverStats stats;
              Field x = spd_solve(op, rhs, cfg, &stats, guess ? &*guess : nullptr);
              return py::make_tuple(std::move(x), std::move(stats));
          },
          py::arg("op"), py::arg("rhs"), py::arg("config") = SolverConfig{},
          py::arg("initial_guess") = std::nullopt);

    py::class_<VelocitySlab>(m, "VelocitySlab")
        .def(py::init<VectorField, VectorField, double>(), py::arg("v_begin"),
             py::arg("v_end"), py::arg("dt"))
        .def_readonly("v_begin", &VelocitySlab::v_begin)
        .def_readonly("v_end", &VelocitySlab::v_end)
        .def_readonly("dt", &VelocitySlab::dt)
        .def_readonly("div_begin", &VelocitySlab::div_begin)
        .def_readonly("div_end", &VelocitySlab::div_end)
        .def("velocity",
             [](const VelocitySlab& s, double t, const std::vector<double>& p) {
                 const auto v = s.velocity(t, as_point(p));
                 return std::vector<double>{v.begin(),
                                            v.begin() + s.v_begin.grid().dim()};
             },
             py::arg("t"), py::arg("point"));

    m.def("trace_characteristic",
          [](const VelocitySlab& slab, const std::vector<double>& x) {
              const auto foot = trace_characteristic(slab, as_point(x));
              return std::vector<double>{foot.begin(),
                                         foot.begin() + slab.v_begin.grid().dim()};
          },
          py::arg("slab"), py::arg("x"));
    m.def("transport_step", &transport_step, py::arg("rho_n"), py::arg("slab"));

    py::class_<TransportSolution>(m, "TransportSolution")
        .def_readonly("rho", &TransportSolution::rho)
        .def_readonly("max_abs_div", &TransportSolution::max_abs_div)
        .def_readonly("lower_bound", &TransportSolution::lower_bound);

    m.def("solve_transport",
          [](const ScalarField& rho0, const std::vector<VectorField>& v, const TimeGrid& tg) {
              return solve_transport(rho0, v, tg);
          },
          py::arg("rho0"), py::arg("velocity"), py::arg("time_grid"));

    m.def("advective_cfl", &advective_cfl, py::arg("v"), py::arg("dt"));
    m.def("heat_flow",
          [](const VectorField& u0, const TimeGrid& tg, const SolverConfig& solver,
             double diffusivity) { return heat_flow(u0, tg, solver, diffusivity); },
          py::arg("u0"), py::arg("time_grid"), py::arg("solver") = SolverConfig{},
          py::arg("diffusivity") = 1.0);
    m.def("director_step",
          [](const DirectorField& d_n, const VectorField& v_n, const DirectorField& n_mid,
             const ModelParams& params, double dt, const SolverConfig& solver,
             const std::optional<DirectorField>& forcing) {
              return director_step(d_n, v_n, n_mid, params, dt, solver,
                                   forcing ? &*forcing : nullptr);
          },
          py::arg("d_n"), py::arg("v_n"), py::arg("n_mid"), py::arg("params"), py::arg("dt"),
          py::arg("solver") = SolverConfig{}, py::arg("forcing") = std::nullopt);
    m.def("momentum_step",
          [](const ScalarField& rho_np1, const VectorField& u_n, const VectorField& v_n,
             const DirectorField& d_n, const ModelParams& params, double dt, double rho_floor,
             const SolverConfig& solver, const std::optional<VectorField>& forcing) {
              return momentum_step(rho_np1, u_n, v_n, d_n, params, dt, rho_floor, solver,
                                   forcing ? &*forcing : nullptr);
          },
          py::arg("rho_np1"), py::arg("u_n"), py::arg("v_n"), py::arg("d_n"),
          py::arg("params"), py::arg("dt"), py::arg("rho_floor"),
          py::arg("solver") = SolverConfig{}, py::arg("forcing") = std::nullopt);
    m.def("solve_initial_velocity", &solve_initial_velocity, py::arg("g"), py::arg("rho0"),
          py::arg("d0"), py::arg("params"), py::arg("solver") = SolverConfig{});
    m.def("compute_g", &compute_g, py::arg("u0"), py::arg("rho0"), py::arg("d0"),
          py::arg("params"), py::arg("rho_min") = 1e-8);

    py::class_<FluidState>(m, "FluidState")
        .def(py::init<ScalarField, VectorField, DirectorField, double>(), py::arg("rho"),
             py::arg("u"), py::arg("d"), py::arg("time"))
        .def_readonly("rho", &FluidState::rho)
        .def_readonly("u", &FluidState::u)
        .def_readonly("d", &FluidState::d)
        .def_readonly("time", &FluidState::time);

    py::class_<Trajectory>(m, "Trajectory")
        .def(py::init<TimeGrid, std::vector<FluidState>>(), py::arg("time_grid"),
             py::arg("states"))
        .def_readonly("time_grid", &Trajectory::time_grid)
        .def_property_readonly("levels", &Trajectory::levels)
        .def("at", &Trajectory::at, py::arg("level"), py::return_value_policy::copy)
        .def("__len__", &Trajectory::levels);

    py::class_<EnergyBreakdown>(m, "EnergyBreakdown")
        .def_readonly("kinetic", &EnergyBreakdown::kinetic)
        .def_readonly("internal", &EnergyBreakdown::internal)
        .def_readonly("elastic", &EnergyBreakdown::elastic)
        .def_readonly("total", &EnergyBreakdown::total);

    m.def("energy", &energy, py::arg("state"), py::arg("params"));
    m.def("dissipation", &dissipation, py::arg("state"), py::arg("params"));

    py::class_<NormBundle>(m, "NormBundle")
        .def(py::init<>())
        .def_readonly("rho_w16", &NormBundle::rho_w16)
        .def_readonly("rho_t_l6", &NormBundle::rho_t_l6)
        .def_readonly("u_h1", &NormBundle::u_h1)
        .def_readonly("u_grad2_l2", &NormBundle::u_grad2_l2)
        .def_readonly("sqrt_rho_u_t_l2", &NormBundle::sqrt_rho_u_t_l2)
        .def_readonly("d_h1", &NormBundle::d_h1)
        .def_readonly("d_t_h1", &NormBundle::d_t_h1)
        .def_readonly("d_grad2_l2", &NormBundle::d_grad2_l2)
        .def_readonly("grad_d_h2", &NormBundle::grad_d_h2);

    m.def("monitor_norms", &monitor_norms);
    m.def("norm_sup", &norm_sup);
    m.def("energy_decay_violations", &energy_decay_violations, py::arg("trajectory"),
          py::arg("params"));

    py::class_<PicardConfig>(m, "PicardConfig")
        .def(py::init<>())
        .def_readwrite("time", &PicardConfig::time)
        .def_readwrite("psi_tol", &PicardConfig::psi_tol)
        .def_readwrite("max_sweeps", &PicardConfig::max_sweeps)
        .def_readwrite("divergence_patience", &PicardConfig::divergence_patience)
        .def_readwrite("solver", &PicardConfig::solver)
        .def_readwrite("cfl_warn", &PicardConfig::cfl_warn)
        .def_readwrite("cfl_error", &PicardConfig::cfl_error)
        .def_readwrite("collect_norms", &PicardConfig::collect_norms)
        .def("validate", &PicardConfig::validate);

    py::class_<InitialData>(m, "InitialData")
        .def(py::init<ScalarField, VectorField, DirectorField, std::optional<VectorField>>(),
             py::arg("rho0"), py::arg("u0"), py::arg("d0"),
             py::arg("g") = std::nullopt)
        .def_readonly("rho0", &InitialData::rho0)
        .def_readonly("u0", &InitialData::u0)
        .def_readonly("d0", &InitialData::d0)
        .def_readonly("g", &InitialData::g);

    py::class_<SweepRecord>(m, "SweepRecord")
        .def_readonly("sweep", &SweepRecord::sweep)
        .def_readonly("has_psi", &SweepRecord::has_psi)
        .def_readonly("psi_sup", &SweepRecord::psi_sup)
        .def_readonly("has_ratio", &SweepRecord::has_ratio)
        .def_readonly("ratio", &SweepRecord::ratio)
        .def_readonly("solver_iterations", &SweepRecord::solver_iterations)
        .def_readonly("cfl_max", &SweepRecord::cfl_max)
        .def_readonly("cfl_warning", &SweepRecord::cfl_warning)
        .def_readonly("wall_seconds", &SweepRecord::wall_seconds);

    py::class_<PicardReport>(m, "PicardReport")
        .def_readonly("sweeps", &PicardReport::sweeps)
        .def_readonly("sweep_norm_sup", &PicardReport::sweep_norm_sup)
        .def_readonly("termination", &PicardReport::termination)
        .def_readonly("delta", &PicardReport::delta)
        .def_readonly("psi_cumulative", &PicardReport::psi_cumulative)
        .def("csv", &PicardReport::csv, py::arg("include_wall_time") = true)
        .def("converged_sweeps", &PicardReport::converged_sweeps);

    m.def("psi_distance", &psi_distance, py::arg("a"), py::arg("b"));
    m.def("initial_iterates",
          [](const InitialData& data, const TimeGrid& tg, const SolverConfig& solver) {
              return initial_iterates(data, tg, solver);
          },
          py::arg("data"), py::arg("time_grid"), py::arg("solver") = SolverConfig{});
    m.def("solve_linearized",
          [](const InitialData& data, const std::vector<VectorField>& v,
             const std::vector<DirectorField>& n, const ModelParams& params,
             const PicardConfig& cfg) {
              LinearizedStats stats;
              Trajectory traj = solve_linearized(data, v, n, params, cfg, &stats);
              return py::make_tuple(std::move(traj), stats.solver_iterations, stats.cfl_max,
                                    stats.cfl_warning);
          },
          py::arg("data"), py::arg("v"), py::arg("n"), py::arg("params"), py::arg("config"));
    m.def("picard_solve", &picard_solve, py::arg("data"), py::arg("params"),
          py::arg("config"));

    py::class_<ResidualSeries>(m, "ResidualSeries")
        .def_readonly("time", &ResidualSeries::time)
        .def_readonly("continuity", &ResidualSeries::continuity)
        .def_readonly("momentum", &ResidualSeries::momentum)
        .def_readonly("director", &ResidualSeries::director);

    m.def("nonlinear_residual", &nonlinear_residual, py::arg("trajectory"), py::arg("params"));

    m.def("bump_data", &bump_data, py::arg("grid"), py::arg("theta"), py::arg("alpha"),
          py::arg("params"));
    m.def("perturb_data", &perturb_data, py::arg("base"), py::arg("eps"));

    py::class_<ContinuityRow>(m, "ContinuityRow")
        .def_readonly("eps", &ContinuityRow::eps)
        .def_readonly("psi0", &ContinuityRow::psi0)
        .def_readonly("psi_sup", &ContinuityRow::psi_sup)
        .def_readonly("d_h1_sup", &ContinuityRow::d_h1_sup);

    py::class_<ContinuityResult>(m, "ContinuityResult")
        .def_readonly("rows", &ContinuityResult::rows)
        .def_readonly("slope", &ContinuityResult::slope)
        .def_readonly("has_control", &ContinuityResult::has_control)
        .def_readonly("control_psi_sup", &ContinuityResult::control_psi_sup);

    m.def("continuity_experiment",
          [](const InitialData& base, const std::vector<double>& eps, const ModelParams& params,
             const PicardConfig& cfg) { return continuity_experiment(base, eps, params, cfg); },
          py::arg("base"), py::arg("epsilons"), py::arg("params"), py::arg("config"));

    py::class_<SmallDataResult>(m, "SmallDataResult")
        .def_readonly("trajectory", &SmallDataResult::trajectory)
        .def_readonly("report", &SmallDataResult::report)
        .def_readonly("bundles", &SmallDataResult::bundles)
        .def_readonly("initial", &SmallDataResult::initial)
        .def_readonly("sup", &SmallDataResult::sup)
        .def_readonly("growth_cap", &SmallDataResult::growth_cap)
        .def_readonly("within_cap", &SmallDataResult::within_cap);

    m.def("smalldata_experiment", &smalldata_experiment, py::arg("theta"), py::arg("alpha"),
          py::arg("grid"), py::arg("params"), py::arg("config"),
          py::arg("growth_cap") = 10.0);

    py::class_<DeltaSweepRow>(m, "DeltaSweepRow")
        .def_readonly("delta", &DeltaSweepRow::delta)
        .def_readonly("sweeps", &DeltaSweepRow::sweeps)
        .def_readonly("psi_final", &DeltaSweepRow::psi_final)
        .def_readonly("rho_min", &DeltaSweepRow::rho_min)
        .def_readonly("certificate", &DeltaSweepRow::certificate);

    m.def("delta_sweep", &delta_sweep, py::arg("data"), py::arg("params"), py::arg("config"),
          py::arg("halvings"));

    py::class_<MmsResult>(m, "MmsResult")
        .def_readonly("solver", &MmsResult::solver)
        .def_readonly("study", &MmsResult::study)
        .def_readonly("nodes_coarse", &MmsResult::nodes_coarse)
        .def_readonly("nodes_fine", &MmsResult::nodes_fine)
        .def_readonly("dt_coarse", &MmsResult::dt_coarse)
        .def_readonly("dt_fine", &MmsResult::dt_fine)
        .def_readonly("error_coarse", &MmsResult::error_coarse)
        .def_readonly("error_fine", &MmsResult::error_fine)
        .def_readonly("ratio", &MmsResult::ratio);

    m.def("mms_transport_spatial", &mms_transport_spatial);
    m.def("mms_transport_temporal", &mms_transport_temporal);
    m.def("mms_director_spatial", &mms_director_spatial);
    m.def("mms_director_temporal", &mms_director_temporal);
    m.def("mms_momentum_spatial", &mms_momentum_spatial);
    m.def("mms_momentum_temporal", &mms_momentum_temporal);
    m.def("run_mms_suite", &run_mms_suite);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("dim", &RunConfig::dim)
        .def_readwrite("nodes", &RunConfig::nodes)
        .def_readwrite("extent", &RunConfig::extent)
        .def_readwrite("t_end", &RunConfig::t_end)
        .def_readwrite("steps", &RunConfig::steps)
        .def_readwrite("model", &RunConfig::model)
        .def_readwrite("initial_kind", &RunConfig::initial_kind)
        .def_readwrite("alpha", &RunConfig::alpha)
        .def_readwrite("theta", &RunConfig::theta)
        .def_readwrite("rho_file", &RunConfig::rho_file)
        .def_readwrite("u_file", &RunConfig::u_file)
        .def_readwrite("d_file", &RunConfig::d_file)
        .def_readwrite("psi_tol", &RunConfig::psi_tol)
        .def_readwrite("max_sweeps", &RunConfig::max_sweeps)
        .def_readwrite("divergence_patience", &RunConfig::divergence_patience)
        .def_readwrite("rel_tol", &RunConfig::rel_tol)
        .def_readwrite("max_iterations", &RunConfig::max_iterations)
        .def_readwrite("experiment", &RunConfig::experiment)
        .def_readwrite("epsilons", &RunConfig::epsilons)
        .def_readwrite("growth_cap", &RunConfig::growth_cap)
        .def_readwrite("delta_halvings", &RunConfig::delta_halvings)
        .def_readwrite("out_dir", &RunConfig::out_dir)
        .def_readwrite("snapshot_levels", &RunConfig::snapshot_levels)
        .def_readwrite("snapshot_fields", &RunConfig::snapshot_fields)
        .def(py::self == py::self);

    m.def("parse_config", &parse_config, py::arg("text"));
    m.def("parse_config_file", &parse_config_file, py::arg("path"));
    m.def("apply_override", &apply_override, py::arg("config"), py::arg("assignment"));
    m.def("serialize_config", &serialize_config, py::arg("config"));
    m.def("validate_config", &validate_config, py::arg("config"));

    m.attr("EXIT_OK") = kExitOk;
    m.attr("EXIT_CONFIG") = kExitConfig;
    m.attr("EXIT_DIVERGED") = kExitDiverged;
    m.attr("EXIT_NO_CONVERGENCE") = kExitNoConvergence;
    m.attr("EXIT_IO") = kExitIo;
    m.def("resolve_out_dir", &resolve_out_dir, py::arg("config"), py::arg("cli_out") = "");
    m.def("run_experiment", &run_experiment, py::arg("config"), py::arg("out_dir"));
}
