#pragma once

#include <map>
#include <string>
#include <vector>

#include "tvd/scenario_io.hpp"

namespace tvd::models {

using ParamMap = std::map<std::string, std::string>;

// Names accepted by make_scenario.
const std::vector<std::string>& scenario_names();

// Builds a ready-to-run scenario for a named toy model:
//   kaon-decay        epsilon
//   kaon-oscillation  m1 m2 w t seed
//   edm               j g h0 d E
//   t-symmetric-s     dim seed
// Unknown names, unknown parameters and invalid values throw PremiseError.
io::Scenario make_scenario(const std::string& name, const ParamMap& params);

// Accepts "0.5", "1/2", "3".
double parse_real(const std::string& text);
// Accepts "i", "-i", "2", "0.5i", "1+2i", "1-0.5i".
Complex parse_complex(const std::string& text);

}  // namespace tvd::models
