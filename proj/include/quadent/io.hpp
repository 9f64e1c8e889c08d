#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "quadent/schmidt_numeric.hpp"
#include "quadent/states.hpp"

namespace quadent {

/// State-spec document: a JSON object with "kind" in {"product",
/// "stationary", "diagonal", "single_photon", "qutrit", "squeezed_vacuum"}
/// and kind-specific fields mirroring the constructor parameters.  Complex
/// numbers are two-element [re, im] arrays (a bare number is accepted as a
/// real).  Optional fields: "theta" (default 0) and "normalize" (default
/// false, i.e. reject unnormalized coefficients).
TwoModeState parse_state_spec(const nlohmann::json& doc);

/// Load and parse a state-spec file.  IO and JSON errors surface as
/// SpecParseError.
TwoModeState load_state_spec(const std::string& path);

/// Read a JSON document from disk (SpecParseError on IO/syntax problems).
nlohmann::json load_json_document(const std::string& path);

/// Kind string of the document ("qutrit", ...), for report headers.
std::string spec_kind(const nlohmann::json& doc);

// -- deterministic serialization ------------------------------------------
// All floats are rendered with 17 significant digits so emitted values
// round-trip exactly and repeated runs are byte-identical.

std::string format_double(double v);

/// {"K":...,"degree":...,"lambdas":[...],"pairing":[...],
///  "norm_residual":...,"source":"analytic"|"numeric"}
std::string report_to_json(const EntanglementReport& report);

/// Combined analyze output.  The numeric report is optional ("null" when the
/// numeric pass is disabled); k_difference = K_numeric - K_analytic.
std::string combined_report_json(const std::string& state_kind,
                                 const EntanglementReport& analytic,
                                 const EntanglementReport* numeric);

/// Same content as combined_report_json in "quantity,value" CSV rows.
std::string combined_report_csv(const EntanglementReport& analytic,
                                const EntanglementReport* numeric);

/// Rebuild a spectrum from parsed report fields (used for round-trip checks).
SchmidtSpectrum spectrum_from_json(const nlohmann::json& report);

// -- CSV dumps for external plotting ---------------------------------------

/// rank,lambda rows.
std::string lambdas_csv(const DiscretizedSchmidtModes& modes);

/// x,mode0_re,mode0_im,mode1_re,... rows for the requested axis (0 = x modes,
/// 1 = y modes).
std::string modes_csv(const DiscretizedSchmidtModes& modes, int axis);

/// x,y,|Psi|^2 triples, row-major over the sample grids.
std::string density_csv(const WaveFunctionSample& sample);

}  // namespace quadent
