#include "siegelchar/json_io.hpp"

#include "siegelchar/error.hpp"

namespace siegelchar::json_io {
namespace {

std::size_t degree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g") || !j.at("g").is_number_integer())
    throw Error(ErrorKind::Parse, "expected an object with integer field \"g\"");
  const auto g = j.at("g").get<long long>();
  if (g < 1) throw Error(ErrorKind::BadShape, "degree must be positive");
  return static_cast<std::size_t>(g);
}

Json real_matrix(const ComplexMatrix& tau, bool imaginary) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < tau.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < tau.cols(); ++j)
      row.push_back(imaginary ? tau(i, j).imag() : tau(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json int_table(const std::vector<std::vector<int>>& t) {
  Json out = Json::array();
  for (const auto& row : t) out.push_back(row);
  return out;
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorKind::Parse, "not a decimal integer: " + j.get<std::string>());
    return x;
  }
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"g", m.rows() / 2}, {"m", std::move(rows)}};
}

Json to_json(const SymplecticMatrix& m) { return to_json(m.entries()); }

IntMatrix int_matrix_from_json(const Json& j) {
  const std::size_t g = degree_from_json(j);
  if (!j.contains("m") || !j.at("m").is_array())
    throw Error(ErrorKind::Parse, "expected array field \"m\"");
  const Json& rows = j.at("m");
  if (rows.size() != 2 * g)
    throw Error(ErrorKind::BadShape, "expected " + std::to_string(2 * g) + " rows, got " +
                                         std::to_string(rows.size()));
  IntMatrix m(2 * g, 2 * g);
  for (std::size_t r = 0; r < 2 * g; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 2 * g)
      throw Error(ErrorKind::BadShape, "row " + std::to_string(r) + " must have " +
                                           std::to_string(2 * g) + " entries");
    for (std::size_t c = 0; c < 2 * g; ++c) m(r, c) = integer_from_json(rows[r][c]);
  }
  return m;
}

SymplecticMatrix matrix_from_json(const Json& j) { return make_matrix(int_matrix_from_json(j)); }

Json to_json(const GeneratorWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters)
    letters.push_back(Json::array({std::string(1, to_char(l.kind)), l.i, l.j, l.exponent}));
  return {{"g", w.g}, {"letters", std::move(letters)}};
}

GeneratorWord word_from_json(const Json& j) {
  GeneratorWord w{degree_from_json(j), {}};
  if (!j.contains("letters") || !j.at("letters").is_array())
    throw Error(ErrorKind::Parse, "expected array field \"letters\"");
  for (const auto& item : j.at("letters")) {
    if (!item.is_array() || item.size() != 4 || !item[0].is_string() ||
        item[0].get<std::string>().size() != 1 || !item[1].is_number_integer() ||
        !item[2].is_number_integer() || !item[3].is_number_integer())
      throw Error(ErrorKind::Parse, "letter must be [kind, i, j, exponent], got " + item.dump());
    w.letters.push_back({generator_kind_from_char(item[0].get<std::string>()[0]),
                         item[1].get<int>(), item[2].get<int>(), item[3].get<long>()});
  }
  validate(w);
  return w;
}

Json to_json(const Characteristic& m) {
  Json out = Json::array();
  for (const auto& x : m.flat()) out.push_back(to_json(x));
  return out;
}

Characteristic characteristic_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "characteristic must be an array");
  IntVector flat;
  for (const auto& x : j) flat.push_back(integer_from_json(x));
  return Characteristic::from_flat(flat);
}

Json to_json(EighthRoot r) {
  return {{"k", r.exponent()}, {"value", r.formula()}, {"name", r.name()}};
}

Json to_json(const AbelianExponents& e) {
  return {{"g", e.g},
          {"p", int_table(e.p)},
          {"qDiag", e.q_diag},
          {"qOff", int_table(e.q_off)},
          {"rDiag", e.r_diag},
          {"rOff", int_table(e.r_off)}};
}

Json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const SiegelPoint& tau) {
  return {{"g", tau.degree()},
          {"re", real_matrix(tau.tau(), false)},
          {"im", real_matrix(tau.tau(), true)}};
}

SiegelPoint siegel_point_from_json(const Json& j) {
  const std::size_t g = degree_from_json(j);
  const auto n = static_cast<Eigen::Index>(g);
  ComplexMatrix tau(n, n);
  for (const char* part : {"re", "im"}) {
    if (!j.contains(part) || !j.at(part).is_array() || j.at(part).size() != g)
      throw Error(ErrorKind::Parse, std::string("expected ") + std::to_string(g) + " rows in \"" +
                                        part + "\"");
  }
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& re_row = j.at("re")[static_cast<std::size_t>(r)];
    const Json& im_row = j.at("im")[static_cast<std::size_t>(r)];
    if (!re_row.is_array() || !im_row.is_array() || re_row.size() != g || im_row.size() != g)
      throw Error(ErrorKind::Parse, "tau rows must have g entries");
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto k = static_cast<std::size_t>(c);
      if (!re_row[k].is_number() || !im_row[k].is_number())
        throw Error(ErrorKind::Parse, "tau entries must be numbers");
      tau(r, c) = Complex(re_row[k].get<double>(), im_row[k].get<double>());
    }
  }
  return SiegelPoint::make(std::move(tau));
}

Json to_json(const VerificationReport& r) {
  Json m_list = Json::array();
  for (const auto& m : r.m_list) m_list.push_back(to_json(m));
  Json ratios = Json::array();
  for (const auto& z : r.ratios) ratios.push_back(to_json(z));
  Json raw = Json::array();
  for (const auto& z : r.raw_ratios) raw.push_back(to_json(z));
  Json out = {{"m_list", std::move(m_list)},
              {"ratios", std::move(ratios)},
              {"raw_ratios", std::move(raw)},
              {"estimated_unit", to_json(r.estimated_unit)},
              {"max_deviation", r.max_deviation},
              {"modulus_error", r.modulus_error},
              {"power_error", r.power_error},
              {"unit_order", r.unit_order},
              {"tolerance", r.tolerance},
              {"passed", r.passed}};
  if (!r.n_list.empty()) {
    Json n_list = Json::array();
    for (const auto& n : r.n_list) n_list.push_back(to_json(n));
    out["n_list"] = std::move(n_list);
  }
  return out;
}

}  // namespace siegelchar::json_io
