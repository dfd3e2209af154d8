#include "nct/io.hpp"

#include <fstream>

namespace nct::io {

namespace {

json matrix_rows(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const cplx v = m.at(i, j);
      row.push_back(json::array({v.real(), v.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix rows_to_matrix(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix: rows missing");
  const std::size_t r = rows.size();
  const std::size_t c = rows.at(0).size();
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows.at(i).size() != c) throw ParseError("matrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      const json& e = rows.at(i).at(j);
      if (!e.is_array() || e.size() != 2) throw ParseError("matrix: bad entry");
      m.set(i, j, {e.at(0).get<double>(), e.at(1).get<double>()});
    }
  }
  return m;
}

}  // namespace

json theta_to_json(const SkewMatrix& theta) {
  json rows = json::array();
  for (int j = 0; j < theta.dim(); ++j) {
    json row = json::array();
    for (int k = 0; k < theta.dim(); ++k) row.push_back(theta(j, k));
    rows.push_back(std::move(row));
  }
  return json{{"n", theta.dim()}, {"theta", std::move(rows)}};
}

SkewMatrix theta_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto rows = j.at("theta").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != n)
      throw ParseError("theta: row count does not match n");
    return SkewMatrix::from_rows(rows);
  } catch (const json::exception& e) {
    throw ParseError(std::string("theta: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("theta: ") + e.what());
  }
}

json element_to_json(const TorusElement& a) {
  json out = theta_to_json(a.theta());
  json coeffs = json::array();
  for (const auto& [k, v] : a.coeffs())
    coeffs.push_back(json{{"k", k}, {"re", v.real()}, {"im", v.imag()}});
  out["coeffs"] = std::move(coeffs);
  return out;
}

TorusElement element_from_json(const json& j) {
  TorusElement a(theta_from_json(j));
  try {
    for (const json& c : j.at("coeffs")) {
      const LatticeIndex k = c.at("k").get<LatticeIndex>();
      if (static_cast<int>(k.size()) != a.dim())
        throw ParseError("element: coefficient index has wrong length");
      if (a.coeffs().count(k)) throw ParseError("element: duplicate index");
      a.set(k, {c.at("re").get<double>(), c.at("im").get<double>()});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("element: ") + e.what());
  }
  return a;
}

json operator_to_json(const TruncatedOperator& op) {
  return json{{"dim", op.dim()}, {"rows", matrix_rows(op.mat)}};
}

CMatrix matrix_from_json(const json& j) {
  try {
    const CMatrix m = rows_to_matrix(j.at("rows"));
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != m.rows())
      throw ParseError("operator: dim does not match rows");
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("operator: ") + e.what());
  }
}

json spectrum_to_json(const SpectrumReport& rep) {
  return json{{"eigenvalues", rep.eigenvalues},
              {"window", rep.radius},
              {"n", rep.n}};
}

json covering_to_json(const CoveringSpec& spec) {
  json base = theta_to_json(spec.base_theta);
  json cover = theta_to_json(spec.cover_theta);
  return json{{"k", spec.k},
              {"base_theta", base.at("theta")},
              {"cover_theta", cover.at("theta")}};
}

CoveringSpec covering_from_json(const json& j) {
  try {
    const auto k = j.at("k").get<std::vector<int>>();
    const auto base_rows = j.at("base_theta").get<std::vector<std::vector<double>>>();
    const auto cover_rows = j.at("cover_theta").get<std::vector<std::vector<double>>>();
    CoveringSpec spec{k, SkewMatrix::from_rows(base_rows),
                      SkewMatrix::from_rows(cover_rows)};
    validate_covering(spec);
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("covering: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("covering: ") + e.what());
  }
}

json moyal_to_json(const MoyalMatrix& x) {
  json factors = json::array();
  for (const CMatrix& f : x.factors) factors.push_back(matrix_rows(f));
  return json{{"theta", x.theta},
              {"M", x.trunc},
              {"N", x.half_dim()},
              {"factors", std::move(factors)}};
}

MoyalMatrix moyal_from_json(const json& j) {
  try {
    MoyalMatrix x{j.at("theta").get<double>(), j.at("M").get<int>(), 0, {}};
    for (const json& f : j.at("factors")) {
      CMatrix m = rows_to_matrix(f);
      if (static_cast<int>(m.rows()) != x.trunc || m.rows() != m.cols())
        throw ParseError("moyal: factor shape does not match M");
      x.factors.push_back(std::move(m));
    }
    if (x.factors.empty() ||
        static_cast<int>(x.factors.size()) != j.at("N").get<int>())
      throw ParseError("moyal: N does not match factors");
    return x;
  } catch (const json::exception& e) {
    throw ParseError(std::string("moyal: ") + e.what());
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace nct::io
