#include "siegel/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace siegel {

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).convert_to<long long>());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SymplecticMatrix& m) { return to_json(m.entries()); }

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Cyclotomic8& c) {
  return Json{{"coefficients", c.coefficients()}, {"root", c.root_index()}, {"text", c.to_string()}};
}

Json to_json(const CharacteristicMatrix& m) {
  Json cols = Json::array();
  for (const auto& c : m.columns()) cols.push_back(c.to_string());
  return cols;
}

Json to_json(const std::vector<MonomialEntry>& action) {
  Json out = Json::array();
  for (std::size_t a = 0; a < action.size(); ++a)
    out.push_back({{"source", a}, {"target", action[a].target}, {"phase", to_json(action[a].phase)}});
  return out;
}

Json to_json(const FormalThetaCombination& phi) {
  Json out = Json::array();
  for (const auto& [n, c] : phi.terms()) out.push_back({{"N", to_json(n)}, {"coefficient", to_json(c)}});
  return out;
}

SiegelPoint siegel_point_from_json(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("tau must be a non-empty array of rows");
  const std::size_t g = rows.size();
  CMatrix tau(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    if (!rows[i].is_array() || rows[i].size() != g) throw std::invalid_argument("tau must be square");
    for (std::size_t j = 0; j < g; ++j) {
      const Json& x = rows[i][j];
      if (x.is_number())
        tau(i, j) = Complex(x.get<double>(), 0.0);
      else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number())
        tau(i, j) = Complex(x[0].get<double>(), x[1].get<double>());
      else
        throw std::invalid_argument("tau entries must be numbers or [re, im] pairs");
    }
  }
  return SiegelPoint(tau);
}

void write_json(const Json& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw OutputError("cannot open output file: " + path);
  out << report.dump(2) << '\n';
  if (!out) throw OutputError("cannot write output file: " + path);
}

}  // namespace siegel
