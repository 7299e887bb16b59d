#include "uj/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace uj::io {

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, field + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& field) {
  if (!j.is_object()) parse_fail(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(field, std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) parse_fail(field, "expected a number");
  return j.get<double>();
}

Matrix real_grid(const json& j, Eigen::Index dim, const std::string& field) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
    std::ostringstream os;
    os << "expected " << dim << " rows";
    parse_fail(field, os.str());
  }
  Matrix out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      std::ostringstream os;
      os << "expected " << dim << " columns";
      parse_fail(row_field, os.str());
    }
    for (Eigen::Index k = 0; k < dim; ++k)
      out(i, k) = number(row[static_cast<std::size_t>(k)], row_field + "[" + std::to_string(k) + "]");
  }
  return out;
}

std::optional<Rational> exact_entry(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::int64_t num = 0, den = 1;
    char slash = 0;
    std::istringstream is(s);
    if (!(is >> num)) parse_fail(field, "malformed fraction '" + s + "'");
    if (is >> slash) {
      if (slash != '/' || !(is >> den) || den == 0) parse_fail(field, "malformed fraction '" + s + "'");
    }
    is >> std::ws;
    if (!is.eof()) parse_fail(field, "malformed fraction '" + s + "'");
    return Rational(num, den);
  }
  if (j.is_number()) {
    // dyadic doubles such as 0.5 or 0.25 are kept exact
    double v = j.get<double>();
    std::int64_t den = 1;
    for (int k = 0; k <= 30; ++k) {
      if (std::floor(v) == v && std::abs(v) < 1e15) return Rational(static_cast<std::int64_t>(v), den);
      v *= 2.0;
      den *= 2;
    }
    return std::nullopt;
  }
  parse_fail(field, "expected a number or an \"n/d\" string");
}

double as_double(const json& j, const std::string& field) {
  if (j.is_string()) return boost::rational_cast<double>(*exact_entry(j, field));
  return number(j, field);
}

json quad_json(const std::array<Matrix, 4>& g) {
  json out = json::object();
  out["g_pp"] = to_json(g[kPP]);
  out["g_pm"] = to_json(g[kPM]);
  out["g_mp"] = to_json(g[kMP]);
  out["g_mm"] = to_json(g[kMM]);
  return out;
}

}  // namespace

json parse(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << origin << ":" << line << ":" << col << ": malformed JSON";
    throw Error(ErrorCode::ParseError, os.str());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

json to_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rr = json::array(), ii = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ii.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  json out = json::object();
  out["dim"] = m.rows();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

Matrix matrix_from_json(const json& j, const std::string& field) {
  const json& dim_j = member(j, "dim", field);
  if (!dim_j.is_number_integer() || dim_j.get<long long>() <= 0 || dim_j.get<long long>() > 64)
    parse_fail(field + ".dim", "expected an integer in [1, 64]");
  const auto dim = static_cast<Eigen::Index>(dim_j.get<long long>());
  Matrix m = real_grid(member(j, "re", field), dim, field + ".re");
  if (j.contains("im")) m += Complex(0, 1) * real_grid(j["im"], dim, field + ".im");
  return m;
}

json to_json(const DichotomicObservable& obs) {
  json out = json::object();
  out["yes"] = to_json(obs.yes().matrix());
  out["no"] = to_json(obs.no().matrix());
  return out;
}

DichotomicObservable observable_from_json(const json& j, const std::string& field) {
  if (j.is_object() && j.contains("dim")) return DichotomicObservable::from_yes(Effect::validate(matrix_from_json(j, field)));
  const Matrix yes = matrix_from_json(member(j, "yes", field), field + ".yes");
  if (j.contains("no")) return DichotomicObservable::validate(yes, matrix_from_json(j["no"], field + ".no"));
  return DichotomicObservable::from_yes(Effect::validate(yes));
}

DensityMatrix state_from_json(const json& j, const std::string& field) {
  if (j.is_object() && j.contains("ket")) {
    const json& ket = j["ket"];
    const json& re = member(ket, "re", field + ".ket");
    if (!re.is_array() || re.empty()) parse_fail(field + ".ket.re", "expected a non-empty array");
    Vector psi(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i)
      psi(static_cast<Eigen::Index>(i)) = number(re[i], field + ".ket.re[" + std::to_string(i) + "]");
    if (ket.contains("im")) {
      const json& im = ket["im"];
      if (!im.is_array() || im.size() != re.size()) parse_fail(field + ".ket.im", "length differs from re");
      for (std::size_t i = 0; i < im.size(); ++i)
        psi(static_cast<Eigen::Index>(i)) += Complex(0, number(im[i], field + ".ket.im[" + std::to_string(i) + "]"));
    }
    return DensityMatrix::pure(psi);
  }
  return DensityMatrix::validate(matrix_from_json(j, field));
}

ChshSettings settings_from_json(const json& j, const std::string& field) {
  return {observable_from_json(member(j, "a1", field), field + ".a1"),
          observable_from_json(member(j, "a2", field), field + ".a2"),
          observable_from_json(member(j, "b1", field), field + ".b1"),
          observable_from_json(member(j, "b2", field), field + ".b2")};
}

AnyBox box_from_json(const json& j, const std::string& field) {
  const json& p = member(j, "p", field);
  static const char* keys[2][2] = {{"11", "12"}, {"21", "22"}};
  BoxTable<Rational> exact;
  BoxTable<double> real;
  bool all_exact = true;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const std::string f = field + ".p." + keys[x][y];
      const json& grid = member(p, keys[x][y], field + ".p");
      if (!grid.is_array() || grid.size() != 2) parse_fail(f, "expected [[p++, p+-], [p-+, p--]]");
      for (int a = 0; a < 2; ++a) {
        const json& row = grid[static_cast<std::size_t>(a)];
        if (!row.is_array() || row.size() != 2) parse_fail(f, "expected [[p++, p+-], [p-+, p--]]");
        for (int b = 0; b < 2; ++b) {
          const std::string ef = f + "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
          const json& e = row[static_cast<std::size_t>(b)];
          const auto r = exact_entry(e, ef);
          if (r)
            exact.at(x, y, a, b) = *r;
          else
            all_exact = false;
          real.at(x, y, a, b) = as_double(e, ef);
        }
      }
    }
  if (all_exact) return ExactBox::validate(exact);
  return RealBox::validate(real);
}

json box_to_json(const ExactBox& box) {
  static const char* keys[2][2] = {{"11", "12"}, {"21", "22"}};
  json p = json::object();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      json grid = json::array();
      for (int a = 0; a < 2; ++a) {
        json row = json::array();
        for (int b = 0; b < 2; ++b) row.push_back(to_string(box(x, y, a, b)));
        grid.push_back(std::move(row));
      }
      p[keys[x][y]] = std::move(grid);
    }
  json out = json::object();
  out["p"] = std::move(p);
  return out;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json to_json(const JointObservable& j) { return quad_json(j.matrices()); }

json to_json(const FeasibilityReport& r) {
  json out = json::object();
  out["schema"] = kSchema;
  out["feasible"] = to_string(r.feasible);
  out["marginal_residual"] = r.marginal_residual;
  out["min_eigenvalue"] = r.min_eigenvalue;
  out["iterations"] = r.iterations;
  out["certified"] = r.certified;
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return out;
}

json to_json(const BlockDecomposition& d) {
  json blocks = json::array();
  for (const Block& b : d.blocks) {
    json jb = json::object();
    jb["dim"] = b.dim;
    jb["columns"] = b.columns;
    jb["rank_p"] = b.rank_p;
    jb["rank_q"] = b.rank_q;
    jb["overlap"] = b.overlap ? json(*b.overlap) : json(nullptr);
    blocks.push_back(std::move(jb));
  }
  json out = json::object();
  out["schema"] = kSchema;
  out["unitary"] = to_json(d.unitary);
  out["blocks"] = std::move(blocks);
  return out;
}

json to_json(const Dilation& d) {
  json out = json::object();
  out["schema"] = kSchema;
  out["convention"] = d.convention;
  out["rank"] = d.projector.rank();
  out["projector"] = to_json(d.projector.matrix());
  return out;
}

json to_json(const ChshReport& r) {
  json out = json::object();
  out["schema"] = kSchema;
  out["value"] = r.value;
  out["signed_value"] = r.signed_value;
  json terms = json::object();
  terms["A1B1"] = r.correlators[0][0];
  terms["A1B2"] = r.correlators[0][1];
  terms["A2B1"] = r.correlators[1][0];
  terms["A2B2"] = r.correlators[1][1];
  out["correlators"] = std::move(terms);
  out["lambda_opt"] = kQuantumLambdaOpt;
  out["bound"] = r.bound;
  out["within_bound"] = r.within_bound;
  if (r.lambda) out["lambda"] = *r.lambda;
  if (r.sharp_value) out["sharp_value"] = *r.sharp_value;
  return out;
}

json to_json(const LambdaOptResult& r) {
  json out = json::object();
  out["schema"] = kSchema;
  out["lambda_opt"] = r.lambda_opt;
  out["upper"] = r.upper;
  if (r.attaining_pair) {
    const auto& m = r.attaining_pair->m.v();
    const auto& n = r.attaining_pair->n.v();
    json pair = json::object();
    pair["m"] = {m[0], m[1], m[2]};
    pair["n"] = {n[0], n[1], n[2]};
    const double dot = std::clamp(m[0] * n[0] + m[1] * n[1] + m[2] * n[2], -1.0, 1.0);
    pair["angle_deg"] = std::acos(dot) * 180.0 / M_PI;
    out["attaining_pair"] = std::move(pair);
  } else {
    out["attaining_pair"] = nullptr;
  }
  out["oracle_below"] = to_string(r.oracle_below);
  out["oracle_above"] = to_string(r.oracle_above);
  out["evaluations"] = r.evaluations;
  return out;
}

json box_chsh_to_json(const AnyBox& box) {
  json out = json::object();
  out["schema"] = kSchema;
  std::visit(
      [&](const auto& b) {
        const auto c = box_chsh(b);
        using Scalar = std::decay_t<decltype(c.value)>;
        const bool exact = std::is_same_v<Scalar, Rational>;
        out["exact"] = exact;
        out["value"] = to_double(c.value);
        out["signed_value"] = to_double(c.signed_value);
        if constexpr (std::is_same_v<Scalar, Rational>) {
          out["value_exact"] = to_string(c.value);
        }
        json terms = json::object();
        terms["A1B1"] = to_double(c.correlators[0][0]);
        terms["A1B2"] = to_double(c.correlators[0][1]);
        terms["A2B1"] = to_double(c.correlators[1][0]);
        terms["A2B2"] = to_double(c.correlators[1][1]);
        out["correlators"] = std::move(terms);
        out["local_bound"] = 2.0;
        out["tsirelson_bound"] = kTsirelsonBound;
        out["algebraic_bound"] = 4.0;
      },
      box);
  return out;
}

}  // namespace uj::io
