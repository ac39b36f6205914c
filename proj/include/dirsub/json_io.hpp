#pragma once

#include <string>

#include "dirsub/directed_set.hpp"
#include "dirsub/engine.hpp"
#include "dirsub/geometry.hpp"

namespace dirsub {

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// All writers print floats with 17 significant digits, so output bytes are
// deterministic and round trips are lossless.
std::string format_double(double v);

std::string ds_serialize(const DirectedSet& a);
DirectedSet ds_deserialize(const std::string& json_text);

std::string grid_serialize(const SphereGrid& grid);
GridPtr grid_deserialize_obj(const std::string& json_text);

std::string polytope_serialize(const Polytope& c);
Polytope polytope_deserialize(const std::string& json_text);

std::string certificate_serialize(const MCertificate& cert);

}  // namespace dirsub
