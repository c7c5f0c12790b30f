#include "csflab/jsonio.hpp"

#include "csflab/graph_io.hpp"

namespace csflab {

using nlohmann::ordered_json;

ordered_json mpoly_to_json(const MPoly& f) {
  ordered_json coeffs = ordered_json::object();
  for (const auto& [lambda, c] : f.coeffs())
    coeffs[lambda.to_string()] = to_decimal_string(c);
  return ordered_json{
      {"degree", f.degree()}, {"basis", "m"}, {"coeffs", coeffs}};
}

ordered_json upoly_to_json(const UPoly& u) {
  ordered_json coeffs = ordered_json::object();
  for (const auto& [lambda, c] : u.coeffs)
    coeffs[lambda.to_string()] = to_decimal_string(c);
  return ordered_json{
      {"degree", u.degree}, {"basis", "x_lambda"}, {"coeffs", coeffs}};
}

ordered_json upoly_xy_to_json(const UPolyXY& u) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& [key, c] : u.coeffs)
    coeffs.push_back(ordered_json{{"lambda", key.first.to_string()},
                                  {"y_power", key.second},
                                  {"value", to_decimal_string(c)}});
  return ordered_json{
      {"degree", u.degree}, {"basis", "x_lambda"}, {"coeffs", coeffs}};
}

ordered_json expansion_to_json(const BasisExpansion& x) {
  ordered_json coeffs = ordered_json::object();
  for (const auto& [lambda, c] : x.coeffs)
    coeffs[lambda.to_string()] = to_decimal_string(c);
  return ordered_json{
      {"basis", x.basis_name}, {"n", x.degree}, {"coeffs", coeffs}};
}

ordered_json lambda_matrix_to_json(const LambdaMatrix& m, int rank) {
  ordered_json columns = ordered_json::array();
  for (const Partition& lambda : m.columns) columns.push_back(lambda.to_string());
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    ordered_json entries = ordered_json::array();
    for (const BigInt& v : m.entries[i]) entries.push_back(to_decimal_string(v));
    rows.push_back(
        ordered_json{{"graph6", to_graph6(m.rows[i])}, {"entries", entries}});
  }
  return ordered_json{
      {"n", m.n}, {"columns", columns}, {"rows", rows}, {"rank", rank}};
}

}  // namespace csflab
