#include "ftrunc/cli.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ftrunc/constructions.hpp"

namespace ftrunc {

namespace {

struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string shortest(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

AnalyzeParams make_params(const RunConfig& config) {
  AnalyzeParams params;
  params.order = config.order;
  params.panels_per_unit = config.panels;
  params.convention = config.convention;
  return params;
}

void require_converged(const ResolutionInfo& info) {
  if (!info.converged)
    throw NumericalFailure("quadrature refinement did not converge");
}

SpectralReport run_spectrum(const RunConfig& config, nlohmann::json& j) {
  const IntervalSet s = parse_literal(config.set_literal);
  SpectralReport report = analyze(s, make_params(config));
  require_converged(report.resolution);
  j = spectral_report_to_json(report);
  j["command"] = "spectrum";
  j["set"] = to_literal(s);
  return report;
}

nlohmann::json run_normality(const RunConfig& config) {
  const IntervalSet s = parse_literal(config.set_literal);
  AnalyzeParams params = make_params(config);
  ResolutionInfo info;
  const Quadrature q = resolve_quadrature(s, params, &info);
  require_converged(info);
  if (q.size() == 0) throw std::invalid_argument("set has zero measure");
  const DiscreteOperator f = discretize_F(s, q);
  const Eigen::MatrixXcd gram = f.matrix.adjoint() * f.matrix;
  const Eigen::MatrixXcd cogram = f.matrix * f.matrix.adjoint();
  const double defect = (gram - cogram).norm() / gram.norm();
  nlohmann::json j;
  j["command"] = "normality";
  j["commutator_defect"] = defect;
  j["convention"] = to_string(config.convention);
  j["is_symmetric"] = is_symmetric(s, 1e-12);
  j["resolution"] = resolution_to_json(info);
  j["set"] = to_literal(s);
  j["verdict"] = defect <= 1e-8 ? "normal" : "not normal";
  return j;
}

nlohmann::json run_fuchs(const RunConfig& config) {
  nlohmann::json rows = nlohmann::json::array();
  for (double l : config.l_values) {
    if (!(l > 0.0)) throw std::invalid_argument("fuchs sweep needs l > 0");
    // The asymptotic regime at parameter l is the sinc kernel with
    // time-bandwidth product l, reached through sinc_lambda0(sqrt(l)).
    const double lambda0 = sinc_lambda0(std::sqrt(l), config.nodes);
    const double prediction = fuchs_prediction(l);
    nlohmann::json row;
    row["l"] = l;
    row["lambda0"] = lambda0;
    row["one_minus_lambda0"] = 1.0 - lambda0;
    row["prediction"] = prediction;
    row["ratio"] = (1.0 - lambda0) / prediction;
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["command"] = "fuchs";
  j["n"] = config.nodes;
  j["rows"] = std::move(rows);
  return j;
}

nlohmann::json run_traceclass(const RunConfig& config) {
  const IntervalSet s = parse_literal(config.set_literal);
  const BoundsReport bounds = bounds_report(s, config.A, 10, config.seed);
  AnalyzeParams params = make_params(config);
  params.convention = Convention::analyst;
  const SpectralReport spectral = analyze(s, params);
  require_converged(spectral.resolution);
  const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
  nlohmann::json j;
  j["command"] = "traceclass";
  j["criterion_sum"] = bounds.criterion_sum;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [idx, cell] : unit_cells(s)) {
    nlohmann::json c;
    c["j"] = idx;
    c["measure"] = cell.measure();
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : bounds.block_bounds) {
    nlohmann::json e;
    e["bound"] = b.bound;
    e["nuclear_raw"] = b.nuclear_raw;
    e["p"] = b.p;
    e["q"] = b.q;
    blocks.push_back(std::move(e));
  }
  j["block_bounds"] = std::move(blocks);
  j["hs_majorization_analyst"] = bounds.hs_majorization_analyst;
  j["hs_majorization_raw"] = bounds.hs_majorization_raw;
  j["measure"] = bounds.measure;
  j["nuclear_norm_analyst"] = spectral.nuclear_norm;
  j["nuclear_norm_raw"] = spectral.nuclear_norm * sqrt_2pi;
  j["resolution"] = resolution_to_json(spectral.resolution);
  j["set"] = to_literal(s);
  j["trace_lower_analyst"] = bounds.trace_lower_analyst;
  j["trace_lower_raw"] = bounds.trace_lower_raw;
  j["trace_upper_analyst"] = bounds.trace_upper_analyst;
  j["trace_upper_raw"] = bounds.trace_upper_raw;
  return j;
}

nlohmann::json run_nazarov(const RunConfig& config) {
  const IntervalSet s = parse_literal(config.set_literal);
  NazarovFamilySpec family;
  family.seed = config.seed;
  const NazarovEstimate est = nazarov_empirical(s, s, family);
  const double a_used = std::max(1.0, est.implied_lower_bound_A);
  nlohmann::json j;
  j["command"] = "nazarov";
  j["A_user"] = config.A;
  j["bound_at_A_user"] = nazarov_contraction_bound(s, config.A);
  j["bound_at_implied_A"] = nazarov_contraction_bound(s, a_used);
  nlohmann::json fam;
  fam["members"] = family.members;
  fam["seed"] = family.seed;
  j["family"] = std::move(fam);
  j["implied_lower_bound_A"] = est.implied_lower_bound_A;
  j["max_ratio"] = est.max_ratio;
  j["set"] = to_literal(s);
  return j;
}

ConstructedVector run_example(const RunConfig& config, nlohmann::json& j) {
  BumpSpec spec;
  spec.a = config.a;
  spec.P = config.P;
  spec.order = config.order;
  spec.panels_per_unit = std::max(config.panels, 8.0);
  ConstructedVector vec;
  if (config.mode == "iso") {
    vec = build_isometric_vector(spec);
  } else if (config.mode == "null") {
    vec = build_null_vector(spec, config.h);
  } else {
    throw std::invalid_argument("example mode must be iso or null");
  }
  j = nlohmann::json{};
  j["P"] = vec.P;
  j["a"] = vec.a;
  j["certification_ratio"] = vec.certification_ratio;
  j["command"] = "example";
  j["h"] = vec.h;
  j["mode"] = config.mode;
  j["nodes"] = vec.quad.size();
  j["order"] = spec.order;
  j["panels_per_unit"] = spec.panels_per_unit;
  j["set"] = to_literal(vec.quad.domain);
  return vec;
}

std::string example_csv(const ConstructedVector& vec) {
  std::ostringstream out;
  out << "node,re_x,im_x\n";
  for (std::size_t k = 0; k < vec.quad.size(); ++k)
    out << shortest(vec.quad.nodes[k]) << ',' << shortest(vec.samples(static_cast<Eigen::Index>(k)).real())
        << ',' << shortest(vec.samples(static_cast<Eigen::Index>(k)).imag()) << '\n';
  return out.str();
}

std::string fuchs_csv(const nlohmann::json& j) {
  std::ostringstream out;
  out << "l,lambda0,one_minus_lambda0,prediction,ratio\n";
  for (const auto& row : j.at("rows"))
    out << shortest(row.at("l").get<double>()) << ',' << shortest(row.at("lambda0").get<double>())
        << ',' << shortest(row.at("one_minus_lambda0").get<double>()) << ','
        << shortest(row.at("prediction").get<double>()) << ','
        << shortest(row.at("ratio").get<double>()) << '\n';
  return out.str();
}

std::string traceclass_csv(const nlohmann::json& j) {
  std::ostringstream out;
  out << "quantity,paper_raw,analyst,reference\n";
  out << "nuclear_norm," << shortest(j.at("nuclear_norm_raw").get<double>()) << ','
      << shortest(j.at("nuclear_norm_analyst").get<double>()) << ",computed\n";
  out << "trace_lower," << shortest(j.at("trace_lower_raw").get<double>()) << ','
      << shortest(j.at("trace_lower_analyst").get<double>()) << ",(mes E)^2\n";
  out << "trace_upper," << shortest(j.at("trace_upper_raw").get<double>()) << ','
      << shortest(j.at("trace_upper_analyst").get<double>())
      << ",e^(1/4) (sum sqrt(mes E_j))^2\n";
  out << "hs_majorization," << shortest(j.at("hs_majorization_raw").get<double>()) << ','
      << shortest(j.at("hs_majorization_analyst").get<double>()) << ",mes E\n";
  return out.str();
}

std::string key_value_csv(const nlohmann::json& j) {
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_structured()) continue;
    out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return out.str();
}

}  // namespace

nlohmann::json resolution_to_json(const ResolutionInfo& info) {
  nlohmann::json j;
  j["converged"] = info.converged;
  j["nodes"] = info.nodes;
  j["order"] = info.order;
  j["panels_per_unit"] = info.panels_per_unit;
  j["refinements"] = info.refinements;
  return j;
}

nlohmann::json spectral_report_to_json(const SpectralReport& report) {
  nlohmann::json j;
  j["commutator_defect"] = report.commutator_defect;
  j["convention"] = to_string(report.convention);
  j["hs_norm"] = report.hs_norm;
  j["nuclear_norm"] = report.nuclear_norm;
  j["operator_norm"] = report.operator_norm;
  j["resolution"] = resolution_to_json(report.resolution);
  j["singular_values"] = report.singular_values;
  return j;
}

std::string singular_values_csv(const SpectralReport& report) {
  std::ostringstream out;
  for (double v : report.singular_values) out << shortest(v) << '\n';
  return out.str();
}

CommandResult run_command(const RunConfig& config) {
  CommandResult result;
  try {
    nlohmann::json j;
    if (config.command == "spectrum") {
      const SpectralReport report = run_spectrum(config, j);
      if (config.format == "csv") {
        result.output = singular_values_csv(report);
        return result;
      }
    } else if (config.command == "normality") {
      j = run_normality(config);
    } else if (config.command == "fuchs") {
      j = run_fuchs(config);
      if (config.format == "csv") {
        result.output = fuchs_csv(j);
        return result;
      }
    } else if (config.command == "traceclass") {
      j = run_traceclass(config);
      if (config.format == "csv") {
        result.output = traceclass_csv(j);
        return result;
      }
    } else if (config.command == "nazarov") {
      j = run_nazarov(config);
    } else if (config.command == "example") {
      const ConstructedVector vec = run_example(config, j);
      if (config.format == "csv") {
        result.output = example_csv(vec);
        return result;
      }
    } else {
      throw std::invalid_argument("unknown command: " + config.command);
    }
    if (config.format == "csv") {
      result.output = key_value_csv(j);
    } else if (config.format == "json") {
      result.output = j.dump(2) + "\n";
    } else {
      throw std::invalid_argument("format must be json or csv");
    }
  } catch (const NumericalFailure& err) {
    result.exit_code = 3;
    result.message = err.what();
  } catch (const std::invalid_argument& err) {
    result.exit_code = 2;
    result.message = err.what();
  } catch (const nlohmann::json::exception& err) {
    result.exit_code = 2;
    result.message = err.what();
  }
  return result;
}

}  // namespace ftrunc
