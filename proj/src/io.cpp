#include "quadent/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "quadent/errors.hpp"

namespace quadent {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw SpecParseError("state spec: " + msg);
}

const json& require_field(const json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) fail(std::string("missing field \"") + field + "\"");
  return *it;
}

double as_double(const json& value, const char* field) {
  if (!value.is_number())
    fail(std::string("field \"") + field + "\" must be a number");
  return value.get<double>();
}

double get_double(const json& doc, const char* field, double fallback) {
  const auto it = doc.find(field);
  if (it == doc.end()) return fallback;
  return as_double(*it, field);
}

int get_int(const json& doc, const char* field, int fallback) {
  const auto it = doc.find(field);
  if (it == doc.end()) return fallback;
  if (!it->is_number_integer())
    fail(std::string("field \"") + field + "\" must be an integer");
  return it->get<int>();
}

Complex parse_complex(const json& value, const char* field) {
  if (value.is_number()) return Complex(value.get<double>(), 0.0);
  if (value.is_array() && value.size() == 2 && value[0].is_number() &&
      value[1].is_number())
    return Complex(value[0].get<double>(), value[1].get<double>());
  fail(std::string("field \"") + field +
       "\" must be a number or a [re, im] pair");
}

CoeffVector parse_coeff_array(const json& doc, const char* field) {
  const json& value = require_field(doc, field);
  if (!value.is_array() || value.empty())
    fail(std::string("field \"") + field + "\" must be a non-empty array");
  CoeffVector coeffs;
  coeffs.reserve(value.size());
  for (const json& entry : value) coeffs.push_back(parse_complex(entry, field));
  return coeffs;
}

Normalize parse_normalize(const json& doc) {
  const auto it = doc.find("normalize");
  if (it == doc.end()) return Normalize::Reject;
  if (!it->is_boolean()) fail("field \"normalize\" must be a boolean");
  return it->get<bool>() ? Normalize::Apply : Normalize::Reject;
}

const char* source_name(SpectrumSource source) {
  return source == SpectrumSource::Analytic ? "analytic" : "numeric";
}

void append_double(std::string& out, double v) { out += format_double(v); }

void append_double_array(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    append_double(out, values[i]);
  }
  out += ']';
}

void append_int_array(std::string& out, const std::vector<int>& values) {
  out += '[';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
}

}  // namespace

std::string spec_kind(const json& doc) {
  if (!doc.is_object()) fail("document must be a JSON object");
  const json& kind = require_field(doc, "kind");
  if (!kind.is_string()) fail("field \"kind\" must be a string");
  return kind.get<std::string>();
}

TwoModeState parse_state_spec(const json& doc) {
  const std::string kind = spec_kind(doc);
  const double theta = get_double(doc, "theta", 0.0);
  const Normalize normalize = parse_normalize(doc);

  if (kind == "product")
    return make_product(parse_coeff_array(doc, "a_coeffs"),
                        parse_coeff_array(doc, "b_coeffs"), theta, normalize);
  if (kind == "stationary") {
    CoeffVector coeffs = parse_coeff_array(doc, "c_coeffs");
    const int total = get_int(doc, "total_photons",
                              static_cast<int>(coeffs.size()) - 1);
    if (total != static_cast<int>(coeffs.size()) - 1)
      fail("stationary: total_photons must equal c_coeffs length - 1");
    return make_stationary(std::move(coeffs), theta, normalize);
  }
  if (kind == "diagonal")
    return make_diagonal(parse_coeff_array(doc, "c_coeffs"), theta, normalize);
  if (kind == "single_photon")
    return make_single_photon(as_double(require_field(doc, "alpha"), "alpha"),
                              theta);
  if (kind == "qutrit")
    return make_qutrit(parse_complex(require_field(doc, "c1"), "c1"),
                       parse_complex(require_field(doc, "c2"), "c2"),
                       parse_complex(require_field(doc, "c3"), "c3"), theta,
                       normalize);
  if (kind == "squeezed_vacuum")
    return make_squeezed_vacuum(as_double(require_field(doc, "r"), "r"),
                                get_double(doc, "phi", 0.0),
                                get_double(doc, "tail_epsilon", 1e-12),
                                get_int(doc, "n_cap", 4096), theta);
  fail("unknown kind \"" + kind + "\"");
}

nlohmann::json load_json_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecParseError("cannot open state spec file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::exception& e) {
    throw SpecParseError(std::string("invalid JSON in ") + path + ": " +
                         e.what());
  }
}

TwoModeState load_state_spec(const std::string& path) {
  return parse_state_spec(load_json_document(path));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string report_to_json(const EntanglementReport& report) {
  std::string out = "{\"K\":";
  append_double(out, report.K);
  out += ",\"degree\":";
  append_double(out, report.degree);
  out += ",\"lambdas\":";
  append_double_array(out, report.spectrum.lambdas);
  out += ",\"pairing\":";
  append_int_array(out, report.spectrum.mode_pairing);
  out += ",\"norm_residual\":";
  append_double(out, report.norm_residual);
  out += ",\"source\":\"";
  out += source_name(report.source);
  out += "\"}";
  return out;
}

std::string combined_report_json(const std::string& state_kind,
                                 const EntanglementReport& analytic,
                                 const EntanglementReport* numeric) {
  std::string out = "{\"state_kind\":\"" + state_kind + "\",\"analytic\":";
  out += report_to_json(analytic);
  out += ",\"numeric\":";
  out += numeric ? report_to_json(*numeric) : "null";
  out += ",\"k_difference\":";
  if (numeric)
    append_double(out, numeric->K - analytic.K);
  else
    out += "null";
  out += "}\n";
  return out;
}

std::string combined_report_csv(const EntanglementReport& analytic,
                                const EntanglementReport* numeric) {
  std::string out = "quantity,value\n";
  const auto row = [&out](const std::string& name, double v) {
    out += name;
    out += ',';
    append_double(out, v);
    out += '\n';
  };
  row("K_analytic", analytic.K);
  row("degree_analytic", analytic.degree);
  row("norm_residual_analytic", analytic.norm_residual);
  if (numeric) {
    row("K_numeric", numeric->K);
    row("degree_numeric", numeric->degree);
    row("norm_residual_numeric", numeric->norm_residual);
    row("k_difference", numeric->K - analytic.K);
  }
  for (size_t i = 0; i < analytic.spectrum.lambdas.size(); ++i)
    row("lambda_analytic_" + std::to_string(i), analytic.spectrum.lambdas[i]);
  if (numeric)
    for (size_t i = 0; i < numeric->spectrum.lambdas.size(); ++i)
      row("lambda_numeric_" + std::to_string(i), numeric->spectrum.lambdas[i]);
  return out;
}

SchmidtSpectrum spectrum_from_json(const json& report) {
  SchmidtSpectrum spectrum;
  const json& lambdas = require_field(report, "lambdas");
  if (!lambdas.is_array()) fail("\"lambdas\" must be an array");
  for (const json& v : lambdas)
    spectrum.lambdas.push_back(as_double(v, "lambdas"));
  const json& pairing = require_field(report, "pairing");
  if (!pairing.is_array()) fail("\"pairing\" must be an array");
  for (const json& v : pairing) {
    if (!v.is_number_integer()) fail("\"pairing\" must hold integers");
    spectrum.mode_pairing.push_back(v.get<int>());
  }
  const json& source = require_field(report, "source");
  spectrum.source = source.is_string() && source.get<std::string>() == "numeric"
                        ? SpectrumSource::Numeric
                        : SpectrumSource::Analytic;
  return spectrum;
}

std::string lambdas_csv(const DiscretizedSchmidtModes& modes) {
  std::string out = "rank,lambda\n";
  for (size_t n = 0; n < modes.lambdas.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    append_double(out, modes.lambdas[n]);
    out += '\n';
  }
  return out;
}

std::string modes_csv(const DiscretizedSchmidtModes& modes, int axis) {
  if (axis != 0 && axis != 1)
    throw std::invalid_argument("modes_csv: axis must be 0 or 1");
  const GridSpec& grid = axis == 0 ? modes.grid_x : modes.grid_y;
  const Eigen::MatrixXcd& profiles = axis == 0 ? modes.modes_x : modes.modes_y;
  std::string out = axis == 0 ? "x" : "y";
  for (Eigen::Index n = 0; n < profiles.cols(); ++n) {
    out += ",mode" + std::to_string(n) + "_re,mode" + std::to_string(n) +
           "_im";
  }
  out += '\n';
  for (Eigen::Index i = 0; i < profiles.rows(); ++i) {
    append_double(out, grid.nodes[static_cast<size_t>(i)]);
    for (Eigen::Index n = 0; n < profiles.cols(); ++n) {
      out += ',';
      append_double(out, profiles(i, n).real());
      out += ',';
      append_double(out, profiles(i, n).imag());
    }
    out += '\n';
  }
  return out;
}

std::string density_csv(const WaveFunctionSample& sample) {
  std::string out = "x,y,density\n";
  for (Eigen::Index i = 0; i < sample.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < sample.values.cols(); ++j) {
      append_double(out, sample.grid_x.nodes[static_cast<size_t>(i)]);
      out += ',';
      append_double(out, sample.grid_y.nodes[static_cast<size_t>(j)]);
      out += ',';
      append_double(out, std::norm(sample.values(i, j)));
      out += '\n';
    }
  }
  return out;
}

}  // namespace quadent
