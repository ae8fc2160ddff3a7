#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qslice/qslice.hpp"

namespace qslice::cli {

using nlohmann::json;

/// Malformed command line or input document (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Quaternion& q);
json to_json(Complex z);
json to_json(const CQuaternion& z);
json to_json(const Domain& d);
json to_json(const LiftPoint& p);
json to_json(BranchIndex h);

Quaternion quaternion_from_json(const json& j);
Complex complex_from_json(const json& j);
CQuaternion cquaternion_from_json(const json& j);
Domain domain_from_json(const json& j);

/// {"samples":[{"t":..., "w0":[re,im], "w1":[re,im], "s":[[re,im] x 3]}, ...]}
SampledPath path_from_json(const json& j);

/// Function descriptor:
///   {"kind":"poly","coeffs":[[q0,q1,q2,q3],...]}, {"kind":"const","value":[...]},
///   {"kind":"identity"}, {"kind":"exp","arg":D}, {"kind":"add"|"mul","args":[D,...]}
/// with an optional "domain" on the outermost object (default: disk of radius 8
/// around 0). mul is the *-product.
SliceFunction function_from_json(const json& j);

/// Quaternion from "[a,b,c,d]" or "a,b,c,d".
Quaternion parse_quaternion(const std::string& text);
/// Complex number from "[re,im]", "re,im" or "re".
Complex parse_complex(const std::string& text);

json read_json_file(const std::string& path);

}  // namespace qslice::cli
