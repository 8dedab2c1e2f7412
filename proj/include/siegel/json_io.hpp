#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "siegel/cocycles.hpp"
#include "siegel/genus3.hpp"

namespace siegel {

using Json = nlohmann::json;

Json to_json(const IntMatrix& m);
Json to_json(const SymplecticMatrix& m);
Json to_json(const Complex& z);  // [re, im]
Json to_json(const Cyclotomic8& c);  // {"coefficients": [a0..a3], "root": k or -1}
Json to_json(const CharacteristicMatrix& m);  // ["m'|m''", ...]
Json to_json(const std::vector<MonomialEntry>& action);
Json to_json(const FormalThetaCombination& phi);

/// A symmetric complex matrix from JSON rows; entries are numbers or [re, im] pairs.
SiegelPoint siegel_point_from_json(const Json& rows);

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Writes `report` with 2-space indentation and a trailing newline; throws OutputError
/// if the file cannot be written.
void write_json(const Json& report, const std::string& path);

}  // namespace siegel
