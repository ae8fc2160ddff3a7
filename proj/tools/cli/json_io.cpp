#include "json_io.hpp"

#include <fstream>

namespace qslice::cli {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string("expected a number for ") + what);
  return j.get<double>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

// Accepts both JSON arrays and bare comma separated lists.
json parse_list(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return parse_text(text);
  return parse_text("[" + text + "]");
}

SliceFunction node(const json& j, const Domain& d) {
  const std::string kind = field(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "poly") {
    const json& c = field(j, "coeffs");
    if (!c.is_array() || c.empty()) throw InputError("poly needs a non-empty coefficient array");
    std::vector<Quaternion> coeffs;
    for (const json& a : c) coeffs.push_back(quaternion_from_json(a));
    return SliceFunction(polynomial_stem(d, std::move(coeffs)));
  }
  if (kind == "const") return SliceFunction(constant_stem(d, quaternion_from_json(field(j, "value"))));
  if (kind == "identity") return SliceFunction(identity_stem(d));
  if (kind == "exp") return star_exp(node(field(j, "arg"), d));
  if (kind == "add" || kind == "mul") {
    const json& args = field(j, "args");
    if (!args.is_array() || args.empty()) throw InputError(kind + " needs a non-empty \"args\" array");
    SliceFunction acc = node(args[0], d);
    for (std::size_t k = 1; k < args.size(); ++k) {
      acc = kind == "add" ? acc + node(args[k], d) : acc * node(args[k], d);
    }
    return acc;
  }
  throw InputError("unknown function kind \"" + kind + "\"");
}

}  // namespace

json to_json(const Quaternion& q) { return json::array({q.q0, q.q1, q.q2, q.q3}); }
json to_json(Complex z) { return json::array({z.real(), z.imag()}); }
json to_json(const CQuaternion& z) { return json::array({to_json(z.z0), to_json(z.z1), to_json(z.z2), to_json(z.z3)}); }

json to_json(const Domain& d) {
  return {{"center", to_json(d.center())}, {"radius", d.radius()}, {"realIntersecting", d.real_intersecting()}};
}

json to_json(const LiftPoint& p) {
  return {{"u0", to_json(p.u0)}, {"u1", to_json(p.u1)}, {"s", json::array({to_json(p.s.z1), to_json(p.s.z2), to_json(p.s.z3)})}};
}

json to_json(BranchIndex h) { return {{"h1", h.h1}, {"h2", h.h2}}; }

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InputError("a quaternion is an array of 4 numbers");
  return {number(j[0], "q0"), number(j[1], "q1"), number(j[2], "q2"), number(j[3], "q3")};
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2) throw InputError("a complex number is an array [re, im]");
  return {number(j[0], "re"), number(j[1], "im")};
}

CQuaternion cquaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InputError("a complexified quaternion is an array of 4 [re, im] pairs");
  return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]), complex_from_json(j[3])};
}

Domain domain_from_json(const json& j) {
  const Complex c = complex_from_json(field(j, "center"));
  const double r = number(field(j, "radius"), "radius");
  Domain d = Domain::disk(c, r);
  if (j.contains("realIntersecting")) {
    if (!j.at("realIntersecting").is_boolean()) throw InputError("realIntersecting must be a boolean");
    if (j.at("realIntersecting").get<bool>() != d.real_intersecting()) {
      throw InputError("realIntersecting contradicts the center (a disk meets R exactly when its center is real)");
    }
  }
  return d;
}

SampledPath path_from_json(const json& j) {
  const json& samples = field(j, "samples");
  if (!samples.is_array() || samples.size() < 2) throw InputError("a path needs at least two samples");
  SampledPath path;
  for (const json& s : samples) {
    const json& unit = field(s, "s");
    if (!unit.is_array() || unit.size() != 3) throw InputError("\"s\" is an array of 3 [re, im] pairs");
    const CQuaternion sv(0.0, complex_from_json(unit[0]), complex_from_json(unit[1]), complex_from_json(unit[2]));
    path.push_back(number(field(s, "t"), "t"),
                   {complex_from_json(field(s, "w0")), complex_from_json(field(s, "w1")), sv});
  }
  return path;
}

SliceFunction function_from_json(const json& j) {
  const Domain d = j.is_object() && j.contains("domain") ? domain_from_json(j.at("domain")) : default_domain();
  return node(j, d);
}

Quaternion parse_quaternion(const std::string& text) { return quaternion_from_json(parse_list(text)); }

Complex parse_complex(const std::string& text) {
  const json j = parse_list(text);
  if (j.size() == 1) return complex_from_json(j[0]);
  return complex_from_json(j);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace qslice::cli
