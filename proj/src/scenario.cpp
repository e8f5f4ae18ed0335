#include "ncgcurv/scenario.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace ncgcurv {

using nlohmann::json;

namespace {

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& field, const char* key) { return field + "." + key; }

Complex parse_complex(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ScenarioError(field, "expected a number or a [re, im] pair");
}

CVector parse_vector(const json& j, const std::string& field, Index expected) {
  if (!j.is_array()) throw ScenarioError(field, "expected an array of algebra coordinates");
  if (static_cast<Index>(j.size()) != expected)
    throw ScenarioError(field, "expected " + std::to_string(expected) + " algebra coordinates, got " +
                                   std::to_string(j.size()));
  CVector v(expected);
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = parse_complex(j[i], at(field, i));
  return v;
}

CMatrix parse_square(const json& j, const std::string& field, Index expected = -1) {
  CMatrix m = parse_matrix(j, field);
  if (m.rows() != m.cols())
    throw ScenarioError(field, "expected a square matrix, got " + std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()));
  if (expected >= 0 && m.rows() != expected)
    throw ScenarioError(field, "expected a " + std::to_string(expected) + "x" + std::to_string(expected) +
                                   " matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return m;
}

const json& require(const json& obj, const char* key, const std::string& field) {
  if (!obj.is_object()) throw ScenarioError(field, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(at(field, key), "missing required field");
  return *it;
}

std::vector<int> parse_signs(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw ScenarioError(field, "expected a non-empty array of +1/-1");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || (j[i].get<int>() != 1 && j[i].get<int>() != -1))
      throw ScenarioError(at(field, i), "expected +1 or -1");
    out.push_back(j[i].get<int>());
  }
  return out;
}

SpectralTriple parse_triple(const json& j, const std::string& field) {
  const CMatrix D = parse_square(require(j, "dirac", field), at(field, "dirac"));
  const Index n = D.rows();
  Grading gamma;
  if (j.contains("gamma_signs")) {
    const auto signs = parse_signs(j["gamma_signs"], at(field, "gamma_signs"));
    if (static_cast<Index>(signs.size()) != n)
      throw ScenarioError(at(field, "gamma_signs"), "length differs from the dirac operator size");
    gamma = Grading::diagonal(signs);
  } else {
    gamma = Grading(parse_square(require(j, "gamma", field), at(field, "gamma"), n));
  }
  const json& basis_json = require(j, "algebra_basis", field);
  const std::string bfield = at(field, "algebra_basis");
  if (!basis_json.is_array() || basis_json.empty())
    throw ScenarioError(bfield, "expected a non-empty array of matrices");
  std::vector<CMatrix> basis;
  for (std::size_t k = 0; k < basis_json.size(); ++k) basis.push_back(parse_square(basis_json[k], at(bfield, k), n));
  return SpectralTriple(std::move(gamma), std::move(basis), D);
}

template <typename T, typename F>
Table<T> parse_table(const json& j, const std::string& field, Index m, const T& fill, F parse_entry) {
  if (!j.is_array() || static_cast<Index>(j.size()) != m)
    throw ScenarioError(field, "expected " + std::to_string(m) + " rows");
  Table<T> t(m, fill);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string row = at(field, k);
    if (!j[k].is_array() || static_cast<Index>(j[k].size()) != m)
      throw ScenarioError(row, "expected " + std::to_string(m) + " entries");
    for (std::size_t l = 0; l < j[k].size(); ++l)
      t(static_cast<Index>(k), static_cast<Index>(l)) = parse_entry(j[k][l], at(row, l));
  }
  return t;
}

UniversalOneForm parse_form(const json& j, const std::string& field, const SpectralTriple& st) {
  const Index d = st.algebra_dim();
  if (j.is_number() && j.get<double>() == 0.0) return UniversalOneForm::zero(d);
  if (j.is_object()) {
    // {"terms": [{"a": coords, "b": coords}, ...]} meaning sum a delta(b).
    const json& terms = require(j, "terms", field);
    if (!terms.is_array()) throw ScenarioError(at(field, "terms"), "expected an array");
    UniversalOneForm w = UniversalOneForm::zero(d);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tf = at(at(field, "terms"), t);
      AlgebraElement a(parse_vector(require(terms[t], "a", tf), at(tf, "a"), d));
      AlgebraElement b(parse_vector(require(terms[t], "b", tf), at(tf, "b"), d));
      try {
        w = w + left_mult(st, a, delta(st, b));
      } catch (const NotInAlgebraError& e) {
        throw ScenarioError(tf, std::string("product left the algebra: ") + e.what());
      }
    }
    return w;
  }
  const CMatrix c = parse_matrix(j, field);
  if (c.rows() != d || c.cols() != d)
    throw ScenarioError(field, "expected a " + std::to_string(d) + "x" + std::to_string(d) + " coefficient table");
  return UniversalOneForm(c);
}

submersion::FramePoint parse_frame(const json& j, const std::string& field, std::string& catalog) {
  try {
    if (j.contains("canned")) {
      if (!j["canned"].is_string()) throw ScenarioError(at(field, "canned"), "expected a frame name");
      std::vector<double> params;
      if (j.contains("params")) {
        if (!j["params"].is_array()) throw ScenarioError(at(field, "params"), "expected an array of numbers");
        for (std::size_t i = 0; i < j["params"].size(); ++i) {
          if (!j["params"][i].is_number()) throw ScenarioError(at(at(field, "params"), i), "expected a number");
          params.push_back(j["params"][i].get<double>());
        }
      }
      catalog = j["canned"].get<std::string>();
      return submersion::canned_frame(catalog, params);
    }
    const json& dm = require(j, "dim_M", field);
    const json& df = require(j, "dim_F", field);
    if (!dm.is_number_integer() || !df.is_number_integer())
      throw ScenarioError(field, "dim_M and dim_F must be integers");
    submersion::FramePoint fp(dm.get<int>(), df.get<int>());
    const json& br = require(j, "brackets", field);
    if (!br.is_array()) throw ScenarioError(at(field, "brackets"), "expected an array of [i, j, k, value]");
    for (std::size_t t = 0; t < br.size(); ++t) {
      const std::string bf = at(at(field, "brackets"), t);
      const json& e = br[t];
      if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
          !e[2].is_number_integer() || !e[3].is_number())
        throw ScenarioError(bf, "expected [i, j, k, value] with integer indices");
      const int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
      const double v = e[3].get<double>();
      if (i >= 0 && jj >= 0 && k >= 0 && i < fp.dim_M() && jj < fp.dim_M() && k < fp.dim_M()) {
        const double existing = fp.c()(k, i, jj);
        if (existing != 0.0 && existing != v)
          throw ScenarioError(bf, "conflicts with an earlier bracket entry");
      }
      try {
        fp.set_bracket(i, jj, k, v);
      } catch (const std::exception& ex) {
        throw ScenarioError(bf, ex.what());
      }
    }
    return fp;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ScenarioError(field, ex.what());
  }
}

}  // namespace

CMatrix parse_matrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw ScenarioError(field, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].empty()) throw ScenarioError(at(field, r), "expected a non-empty row array");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols)
      throw ScenarioError(at(field, r), "ragged matrix: row has " + std::to_string(j[r].size()) +
                                            " entries, expected " + std::to_string(cols));
  }
  CMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) = parse_complex(j[r][c], at(at(field, r), c));
  return m;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sha256_hex(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

Scenario parse_scenario_json(const json& doc) {
  if (!doc.is_object()) throw ScenarioError("<root>", "expected a JSON object");
  Scenario sc;
  sc.digest = sha256_hex(doc.dump());
  sc.name = doc.value("name", std::string());

  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) throw ScenarioError("tolerances", "expected an object");
    if (t.contains("rank")) {
      if (!t["rank"].is_number()) throw ScenarioError("tolerances.rank", "expected a number");
      sc.tol.rank = t["rank"].get<double>();
    }
    if (t.contains("residual")) {
      if (!t["residual"].is_number()) throw ScenarioError("tolerances.residual", "expected a number");
      sc.tol.residual = t["residual"].get<double>();
    }
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ScenarioError("seed", "expected a non-negative integer");
    sc.seed = doc["seed"].get<std::uint64_t>();
  }

  if (doc.contains("triple")) sc.triple = parse_triple(doc["triple"], "triple");
  if (doc.contains("second_triple")) sc.second_triple = parse_triple(doc["second_triple"], "second_triple");

  if (doc.contains("module")) {
    if (!sc.triple) throw ScenarioError("module", "a module requires a triple");
    const SpectralTriple& st = *sc.triple;
    const json& mj = doc["module"];
    const auto signs = parse_signs(require(mj, "grading", "module"), "module.grading");
    const Index m = static_cast<Index>(signs.size());
    const Index d = st.algebra_dim();
    AlgebraTable p = parse_table(require(mj, "p", "module"), "module.p", m, AlgebraElement::zero(d),
                                 [&](const json& e, const std::string& f) {
                                   return AlgebraElement(parse_vector(e, f, d));
                                 });
    sc.module = ProjectiveModule(st, std::move(p), signs);
  }

  if (doc.contains("connection")) {
    if (!sc.module) throw ScenarioError("connection", "a connection requires a module");
    const json& cj = doc["connection"];
    const SpectralTriple& st = *sc.triple;
    UniversalConnectionForm A;
    A.hermitian = cj.value("hermitian", false);
    A.A = parse_table(require(cj, "A", "connection"), "connection.A", sc.module->generators(),
                      UniversalOneForm::zero(st.algebra_dim()),
                      [&](const json& e, const std::string& f) { return parse_form(e, f, st); });
    sc.connection = std::move(A);
  }

  if (doc.contains("vertical")) {
    if (!sc.module) throw ScenarioError("vertical", "a vertical operator requires a module");
    const Index d = sc.triple->algebra_dim();
    VerticalOperator S;
    S.S = parse_table(require(doc["vertical"], "S", "vertical"), "vertical.S", sc.module->generators(),
                      AlgebraElement::zero(d), [&](const json& e, const std::string& f) {
                        return AlgebraElement(parse_vector(e, f, d));
                      });
    sc.vertical = std::move(S);
  }

  if (doc.contains("frame")) sc.frame = parse_frame(doc["frame"], "frame", sc.frame_catalog);
  return sc;
}

Scenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("<root>", std::string("malformed JSON: ") + e.what());
  }
  return parse_scenario_json(doc);
}

Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("<file>", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  Scenario sc = parse_scenario_text(buf.str());
  if (sc.name.empty()) sc.name = path.stem().string();
  return sc;
}

}  // namespace ncgcurv
