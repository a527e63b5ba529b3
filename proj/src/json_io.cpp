#include "genshift/json_io.hpp"

#include <fstream>
#include <sstream>

namespace genshift::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError(what); }

template <typename F>
auto structural(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

Index parse_size(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) malformed(std::string("field \"") + key + "\" must be an integer");
  return v.get<Index>();
}

std::vector<Index> parse_indices(const json& j) {
  if (!j.is_array()) malformed("index list must be an array");
  std::vector<Index> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) malformed("index entries must be integers");
    out.push_back(e.get<Index>());
  }
  return out;
}

}  // namespace

// Adding 0.0 folds -0.0 into 0.0.
json to_json(const Complex& z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json to_json(const Vec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(Complex(v(i))));
  return out;
}

json to_json(const PExponent& p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

json to_json(const IndexMap& phi) { return {{"n", phi.size()}, {"map", phi.image()}}; }

json to_json(const LinOp& op) {
  if (auto s = op.as_multiplier_shift())
    return {{"n", op.size()}, {"r", to_json(s->r)}, {"phi", s->phi.image()}};
  const Mat& m = *op.as_dense();
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(to_json(Vec(m.row(i).transpose())));
  return {{"n", op.size()}, {"dense", rows}};
}

json to_json(const FiberReport& f) {
  return {{"sizes", f.sizes},
          {"bound", f.bound},
          {"empty_fibers", f.empty_fibers},
          {"surjective", f.surjective()},
          {"injective", f.injective()}};
}

json to_json(const Witness& w) {
  json inputs = json::array();
  for (const auto& v : w.inputs) inputs.push_back(to_json(v));
  json out = {{"inputs", inputs},
              {"lhs", to_json(w.lhs)},
              {"rhs", to_json(w.rhs)},
              {"deviation", w.deviation},
              {"source", w.from_basis ? "basis" : "random"}};
  if (w.level) out["level"] = *w.level;
  return out;
}

json to_json(const CheckResult& c) {
  return {{"holds", c.holds}, {"witness", c.witness ? to_json(*c.witness) : json(nullptr)}};
}

json to_json(const Classification& c) {
  json out = {{"accepted", c.accepted}, {"r", to_json(c.r)}};
  if (c.witness) {
    out["witness"] = {{"op", c.witness->op},
                      {"row", c.witness->row},
                      {"col", c.witness->col},
                      {"expected", to_json(c.witness->expected)},
                      {"actual", to_json(c.witness->actual)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const SolveReport& s) {
  json out = json::object();
  if (s.dimension) out["dimension"] = *s.dimension;
  if (s.feasible) out["feasible"] = *s.feasible;
  json basis = json::array();
  for (const auto& op : s.basis) basis.push_back(to_json(op));
  out["basis"] = basis;
  if (s.solution) out["solution"] = to_json(*s.solution);
  out["residual"] = s.residual;
  return out;
}

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    malformed("complex entries must be numbers or [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Vec parse_vector(const json& j) {
  if (!j.is_array()) malformed("vector must be an array of [re, im] pairs");
  if (j.empty()) throw InvalidInput("vector must have at least one entry");
  Vec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = parse_complex(j[i]);
  require_finite(v);
  return v;
}

PExponent parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Infinity") return PExponent::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    malformed("cannot read p from \"" + text + "\"");
  }
  if (used != text.size()) malformed("cannot read p from \"" + text + "\"");
  return PExponent::finite(v);
}

PExponent parse_p(const json& j) {
  if (j.is_string()) return parse_p(j.get<std::string>());
  if (!j.is_number()) malformed("p must be a number or \"inf\"");
  return PExponent::finite(j.get<double>());
}

IndexMap parse_index_map(const json& j) {
  return structural([&] {
    const Index n = parse_size(j, "n");
    if (!j.contains("map")) malformed("missing field \"map\"");
    auto img = parse_indices(j.at("map"));
    if (static_cast<Index>(img.size()) != n)
      throw InvalidInput("map has " + std::to_string(img.size()) + " entries but n = " +
                         std::to_string(n));
    return IndexMap(std::move(img));
  });
}

LinOp parse_linop(const json& j) {
  return structural([&]() -> LinOp {
    const Index n = parse_size(j, "n");
    if (n < 1) throw InvalidInput("operator dimension must be positive");
    if (j.contains("dense")) {
      const json& rows = j.at("dense");
      if (!rows.is_array()) malformed("\"dense\" must be an array of rows");
      if (static_cast<Index>(rows.size()) != n) throw InvalidInput("dense matrix must have n rows");
      Mat m(n, n);
      for (Index i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array()) malformed("dense rows must be arrays");
        if (static_cast<Index>(row.size()) != n) throw InvalidInput("dense matrix must have n columns");
        for (Index k = 0; k < n; ++k) m(i, k) = parse_complex(row[static_cast<std::size_t>(k)]);
      }
      return LinOp::dense(std::move(m));
    }
    if (j.contains("r") && j.contains("phi")) {
      Vec r = parse_vector(j.at("r"));
      auto img = parse_indices(j.at("phi"));
      if (r.size() != n || static_cast<Index>(img.size()) != n)
        throw InvalidInput("\"r\" and \"phi\" must both have n entries");
      return LinOp::multiplier_shift(std::move(r), IndexMap(std::move(img)));
    }
    malformed("operator needs either \"dense\" or both \"r\" and \"phi\"");
  });
}

std::vector<LinOp> parse_linop_list(const json& j) {
  if (!j.is_array()) malformed("expected an array of operators");
  std::vector<LinOp> out;
  for (const auto& e : j) out.push_back(parse_linop(e));
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace genshift::io
