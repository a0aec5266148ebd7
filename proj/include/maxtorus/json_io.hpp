#pragma once

#include "maxtorus/normality.hpp"
#include "maxtorus/quotient.hpp"
#include "maxtorus/tk.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace maxtorus::io {

using Json = nlohmann::json;

/// Malformed or inconsistent input; the message names the location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Indented JSON with scalar-only arrays kept on one line; trailing newline.
std::string dump(const Json& j);

/// Parse errors carry "line L, column C".
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

/// {"dim": n, "rays": [[int,...],...], "max_cones": [[1-based],...]}
Fan fan_from_json(const Json& j, std::vector<std::string>* warnings = nullptr);
Json to_json(const Fan& fan);

/// {"vertices": m, "facets": [[1-based],...]}
SimplicialComplex complex_from_json(const Json& j);
Json to_json(const SimplicialComplex& k);

/// {"m": m, "basis": [[{"re": "p/q", "im": "p/q"},...],...]}
ComplexSubspace subspace_from_json(const Json& j);
Json to_json(const ComplexSubspace& h);

/// {"m": m, "symbols": k, "basis": [[{"re": {"1": "p/q", "xi1": "p/q"}, "im": {...}},...],...]}.
/// Plain subspace JSON is accepted as the rational case.
SymbolicSubspace symbolic_subspace_from_json(const Json& j);
Json to_json(const SymbolicSubspace& h);
bool is_symbolic(const Json& subspace);

/// {"b": ["p/q",...], "vertices": {"1,2,3": ["p/q",...]}}; cone keys are
/// 1-based ray lists of the maximal cones.
Json certificate_to_json(const Fan& fan, const NormalityCertificate& c);
/// Reads "b"; "vertices" is optional and ignored (recomputed by callers).
RationalVector certificate_b_from_json(const Json& j);

/// "1,2,3" for the 0-based set {0,1,2}.
std::string cone_key(const IndexSet& cone);

/// Condition name for a diagnostic code, e.g. "Construction II (b)".
std::string condition_name(const std::string& code, Construction construction);

Json to_json(const FanValidity& v);
Json to_json(const ValidationReport& r);
Json to_json(const CertificateCheck& c);
Json to_json(const LiftResult& l);
Json to_json(const FoliationData& f);
Json to_json(const DivisorHypotheses& d);
Json to_json(const TKReport& r);

Json rational_json(const Rational& r);
Json rational_vector_json(const RationalVector& v);
RationalVector rational_vector_from_json(const Json& j, const std::string& where);

}  // namespace maxtorus::io
