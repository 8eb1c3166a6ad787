#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "excivib/params.hpp"

namespace excivib {

// Flat "key = value" document. '#' starts a comment, blank lines are
// ignored. Keys are dotted (lattice.n, atom.theta_deg, ...); the dipole
// angle is written in degrees here and converted to radians internally.
using KeyValueMap = std::map<std::string, std::string>;

KeyValueMap parse_key_values(std::istream& in);
KeyValueMap parse_key_value_file(const std::string& path);

// Builds and validates a ModelSpec; throws ValidationError on missing or
// malformed keys and on invariant violations.
ModelSpec spec_from_config(const KeyValueMap& kv);

// Canonical echo of the effective configuration; parsing it back yields the
// same validated bundle.
KeyValueMap config_from_spec(const ModelSpec& spec);

// Deterministic "key = value" rendering in key order.
std::string render_config(const KeyValueMap& kv);

// 17-significant-digit scientific notation used by every CSV artifact.
std::string format_sci(double value);

}  // namespace excivib
