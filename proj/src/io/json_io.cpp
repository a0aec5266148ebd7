#include "maxtorus/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace maxtorus::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Rational r;
    try {
      r = parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
    if (!is_integer(r)) fail(where, "expected an integer");
    return r.get_num();
  }
  fail(where, "expected an integer");
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j, where));
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

// Ray coordinates print as numbers when integral.
Json coordinate_json(const Rational& r) { return is_integer(r) ? integer_json(r.get_num()) : rational_json(r); }

std::vector<IndexSet> index_lists_from_json(const Json& j, std::size_t bound, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of index lists");
  std::vector<IndexSet> out;
  for (std::size_t c = 0; c < j.size(); ++c) {
    const std::string at = where + "[" + std::to_string(c) + "]";
    if (!j[c].is_array()) fail(at, "expected an array of 1-based indices");
    IndexSet s;
    for (std::size_t t = 0; t < j[c].size(); ++t) {
      const std::string el = at + "[" + std::to_string(t) + "]";
      const std::size_t i = count_from_json(j[c][t], el);
      if (i < 1 || i > bound) fail(el, "index " + std::to_string(i) + " out of range 1.." + std::to_string(bound));
      s.push_back(i - 1);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(at, "repeated index");
    out.push_back(std::move(s));
  }
  return out;
}

Json index_lists_json(const std::vector<IndexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) {
    Json one = Json::array();
    for (auto i : s) one.push_back(i + 1);
    out.push_back(one);
  }
  return out;
}

Json gaussian_json(const GaussianRational& z) { return {{"re", rational_json(z.re)}, {"im", rational_json(z.im)}}; }

Json symbolic_coordinate_json(const SymbolicVector::Coordinate& c) {
  Json out = Json::object();
  for (const auto& [symbol, value] : c) out[symbol == 0 ? "1" : "xi" + std::to_string(symbol)] = rational_json(value);
  return out;
}

void symbolic_coordinate_from_json(const Json& j, SymbolicVector& v, std::size_t coord, std::size_t symbols,
                                   const std::string& where) {
  if (!j.is_object()) {
    v.set(coord, 0, rational_from_json(j, where));
    return;
  }
  for (const auto& [key, value] : j.items()) {
    std::size_t symbol = 0;
    if (key != "1") {
      if (key.rfind("xi", 0) != 0 || key.size() == 2) fail(where, "unknown symbol \"" + key + "\"");
      try {
        symbol = std::stoul(key.substr(2));
      } catch (const std::exception&) {
        fail(where, "unknown symbol \"" + key + "\"");
      }
      if (symbol < 1 || symbol > symbols) fail(where, "symbol \"" + key + "\" exceeds declared count");
    }
    v.set(coord, symbol, v.coefficient(coord, symbol) + rational_from_json(value, where + "." + key));
  }
}

void dump_into(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  const auto scalar = [](const Json& x) { return !x.is_structured(); };
  if (j.is_object() && j.size() <= 4 && std::all_of(j.begin(), j.end(), scalar)) {
    out += "{";
    std::size_t t = 0;
    for (const auto& [k, v] : j.items()) out += (t++ ? ", " : "") + Json(k).dump() + ": " + v.dump();
    out += "}";
  } else if (j.is_object()) {
    out += "{\n";
    std::size_t t = 0;
    for (const auto& [k, v] : j.items()) {
      out += inner + Json(k).dump() + ": ";
      dump_into(v, indent + 2, out);
      out += ++t < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && !std::all_of(j.begin(), j.end(), scalar)) {
    out += "[\n";
    for (std::size_t t = 0; t < j.size(); ++t) {
      out += inner;
      dump_into(j[t], indent + 2, out);
      out += t + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t t = 0; t < j.size(); ++t) out += (t ? ", " : "") + j[t].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

std::string construction_name(Construction c) { return c == Construction::I ? "I" : "II"; }

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  return out + "\n";
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    if (pos != std::string::npos) what = what.substr(pos);
    throw InputError(source + ": malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + " (byte " + std::to_string(e.byte) + "): " + what);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_json(text.str(), path);
}

Json rational_json(const Rational& r) { return Json(to_string(r)); }

Json rational_vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

RationalVector rational_vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rationals");
  RationalVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Fan fan_from_json(const Json& j, std::vector<std::string>* warnings) {
  const std::size_t dim = count_from_json(field(j, "dim", "fan"), "fan.dim");
  const Json& rays = field(j, "rays", "fan");
  if (!rays.is_array()) fail("fan.rays", "expected an array of integer vectors");
  std::vector<IntegerVector> rs;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string at = "fan.rays[" + std::to_string(i) + "]";
    if (!rays[i].is_array() || rays[i].size() != dim) fail(at, "expected " + std::to_string(dim) + " integers");
    IntegerVector r;
    for (std::size_t t = 0; t < dim; ++t) r.push_back(integer_from_json(rays[i][t], at + "[" + std::to_string(t) + "]"));
    if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; })) fail(at, "zero ray");
    rs.push_back(std::move(r));
  }
  auto cones = index_lists_from_json(field(j, "max_cones", "fan"), rs.size(), "fan.max_cones");
  try {
    return Fan::from_integer_rays(dim, rs, std::move(cones), warnings);
  } catch (const std::invalid_argument& e) {
    fail("fan", e.what());
  }
}

Json to_json(const Fan& fan) {
  Json rays = Json::array();
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    Json r = Json::array();
    for (const auto& x : fan.rays.row_vector(i)) r.push_back(coordinate_json(x));
    rays.push_back(r);
  }
  return {{"dim", fan.dim}, {"rays", rays}, {"max_cones", index_lists_json(fan.max_cones)}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const std::size_t m = count_from_json(field(j, "vertices", "complex"), "complex.vertices");
  auto facets = index_lists_from_json(field(j, "facets", "complex"), m, "complex.facets");
  try {
    return SimplicialComplex::make(m, std::move(facets));
  } catch (const std::invalid_argument& e) {
    fail("complex", e.what());
  }
}

Json to_json(const SimplicialComplex& k) { return {{"vertices", k.vertices}, {"facets", index_lists_json(k.facets)}}; }

bool is_symbolic(const Json& subspace) { return subspace.is_object() && subspace.contains("symbols"); }

ComplexSubspace subspace_from_json(const Json& j) {
  if (is_symbolic(j)) {
    const auto s = symbolic_subspace_from_json(j);
    if (!s.is_rational()) fail("subspace", "symbolic coefficients are not supported by this command");
    return s.to_rational();
  }
  const std::size_t m = count_from_json(field(j, "m", "subspace"), "subspace.m");
  const Json& basis = field(j, "basis", "subspace");
  if (!basis.is_array()) fail("subspace.basis", "expected an array of vectors");
  std::vector<GaussianVector> vs;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const std::string at = "subspace.basis[" + std::to_string(b) + "]";
    if (!basis[b].is_array() || basis[b].size() != m) fail(at, "expected " + std::to_string(m) + " entries");
    GaussianVector v;
    for (std::size_t t = 0; t < m; ++t) {
      const Json& z = basis[b][t];
      const std::string el = at + "[" + std::to_string(t) + "]";
      if (z.is_object()) {
        const Rational re = z.contains("re") ? rational_from_json(z["re"], el + ".re") : Rational(0);
        const Rational im = z.contains("im") ? rational_from_json(z["im"], el + ".im") : Rational(0);
        v.emplace_back(re, im);
      } else {
        v.emplace_back(rational_from_json(z, el));
      }
    }
    vs.push_back(std::move(v));
  }
  try {
    return ComplexSubspace(m, std::move(vs));
  } catch (const std::invalid_argument& e) {
    fail("subspace", e.what());
  }
}

Json to_json(const ComplexSubspace& h) {
  Json basis = Json::array();
  for (const auto& v : h.basis()) {
    Json row = Json::array();
    for (const auto& z : v) row.push_back(gaussian_json(z));
    basis.push_back(row);
  }
  return {{"m", h.ambient()}, {"basis", basis}};
}

SymbolicSubspace symbolic_subspace_from_json(const Json& j) {
  if (!is_symbolic(j)) return SymbolicSubspace::from_rational(subspace_from_json(j));
  SymbolicSubspace s;
  s.symbols = count_from_json(j["symbols"], "subspace.symbols");
  s.ambient = count_from_json(field(j, "m", "subspace"), "subspace.m");
  const Json& basis = field(j, "basis", "subspace");
  if (!basis.is_array()) fail("subspace.basis", "expected an array of vectors");
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const std::string at = "subspace.basis[" + std::to_string(b) + "]";
    if (!basis[b].is_array() || basis[b].size() != s.ambient)
      fail(at, "expected " + std::to_string(s.ambient) + " entries");
    SymbolicVector re(s.ambient), im(s.ambient);
    for (std::size_t t = 0; t < s.ambient; ++t) {
      const Json& z = basis[b][t];
      const std::string el = at + "[" + std::to_string(t) + "]";
      if (z.is_object() && (z.contains("re") || z.contains("im"))) {
        if (z.contains("re")) symbolic_coordinate_from_json(z["re"], re, t, s.symbols, el + ".re");
        if (z.contains("im")) symbolic_coordinate_from_json(z["im"], im, t, s.symbols, el + ".im");
      } else {
        symbolic_coordinate_from_json(z, re, t, s.symbols, el);
      }
    }
    s.basis.emplace_back(std::move(re), std::move(im));
  }
  return s;
}

Json to_json(const SymbolicSubspace& h) {
  Json basis = Json::array();
  for (const auto& [re, im] : h.basis) {
    Json row = Json::array();
    for (std::size_t t = 0; t < h.ambient; ++t)
      row.push_back({{"re", symbolic_coordinate_json(re.at(t))}, {"im", symbolic_coordinate_json(im.at(t))}});
    basis.push_back(row);
  }
  return {{"m", h.ambient}, {"symbols", h.symbols}, {"basis", basis}};
}

std::string cone_key(const IndexSet& cone) {
  std::string out;
  for (std::size_t t = 0; t < cone.size(); ++t) out += (t ? "," : "") + std::to_string(cone[t] + 1);
  return out;
}

Json certificate_to_json(const Fan& fan, const NormalityCertificate& c) {
  Json vertices = Json::object();
  for (std::size_t i = 0; i < fan.max_cones.size() && i < c.vertices.size(); ++i)
    vertices[cone_key(fan.max_cones[i])] = rational_vector_json(c.vertices[i]);
  return {{"b", rational_vector_json(c.b)}, {"vertices", vertices}};
}

RationalVector certificate_b_from_json(const Json& j) { return rational_vector_from_json(field(j, "b", "certificate"), "certificate.b"); }

std::string condition_name(const std::string& code, Construction construction) {
  const std::string prefix = "Construction " + construction_name(construction);
  if (code == "FAN_INVALID") return "fan axioms";
  if (code == "FAN_NOT_REGULAR") return prefix + " (regular fan)";
  if (code.rfind("COND_A", 0) == 0) return prefix + " (a)";
  if (code.rfind("COND_B", 0) == 0) return prefix + " (b)";
  if (code == "MAXIMALITY_IDENTITY") return "maximality";
  return prefix;
}

Json to_json(const FanValidity& v) {
  Json issues = Json::array();
  for (const auto& i : v.issues)
    issues.push_back({{"code", i.code}, {"first", i.first + 1}, {"second", i.second + 1}, {"message", i.message}});
  return {{"valid", v.valid}, {"issues", issues}};
}

Json to_json(const ValidationReport& r) {
  const auto& d = r.descriptor;
  Json issues = Json::array();
  for (const auto& i : r.issues)
    issues.push_back({{"code", i.code}, {"condition", condition_name(i.code, d.construction)}, {"message", i.message}});
  Json descriptor = {{"construction", construction_name(d.construction)},
                     {"dim_C_M", d.dim_C_M},
                     {"dim_T", d.dim_T},
                     {"max_stabilizer_dim", d.max_stabilizer_dim},
                     {"foliation_dim", d.foliation_dim},
                     {"h_cap_t_trivial", d.h_cap_t_trivial},
                     {"h_cap_it_trivial", d.h_cap_it_trivial},
                     {"condition_a", d.condition_a},
                     {"condition_b", d.condition_b},
                     {"maximality", d.maximality}};
  return {{"valid", r.valid}, {"descriptor", descriptor}, {"issues", issues}};
}

Json to_json(const CertificateCheck& c) {
  Json violations = Json::array();
  for (const auto& v : c.violations)
    violations.push_back({{"code", v.code}, {"cone", v.cone + 1}, {"ray", v.ray + 1}, {"value", rational_json(v.value)}});
  return {{"ok", c.ok}, {"violations", violations}};
}

Json to_json(const LiftResult& l) {
  Json invariants = Json::array();
  for (const auto& k : l.invariants) invariants.push_back(integer_json(k));
  return {{"complex", to_json(l.complex)},
          {"subspace", to_json(l.h)},
          {"ghosts", l.ghosts},
          {"torus_ghosts", l.torus_ghosts},
          {"invariants", invariants}};
}

Json to_json(const FoliationData& f) {
  Json out = {{"conjugate", to_json(f.conjugate)},
              {"h_cap_hbar_dim", f.h_cap_hbar_dim},
              {"leaf_dim", f.leaf_dim},
              {"discrete", f.discrete}};
  out["consistent_with_fan"] = f.consistent_with_fan ? Json(*f.consistent_with_fan) : Json(nullptr);
  return out;
}

Json to_json(const DivisorHypotheses& d) {
  return {{"simply_connected", d.simply_connected}, {"generic_annihilator", d.generic_annihilator}, {"note", d.note}};
}

Json to_json(const TKReport& r) {
  Json pointwise = Json::array();
  for (const auto& p : r.pointwise)
    pointwise.push_back({{"y", p.y},
                         {"psd", p.psd},
                         {"kernel_dim", p.kernel_dim},
                         {"max_angle", p.max_angle},
                         {"fd_error", p.fd_error},
                         {"passes", p.passes}});
  Json summary = {{"psd", r.psd},
                  {"kernel_dim", r.kernel_dim},
                  {"max_angle", r.max_angle},
                  {"max_cocycle_dev", r.max_cocycle_dev},
                  {"fd_error", r.fd_error},
                  {"kappa", integer_json(r.kappa)},
                  {"passes", r.passes}};
  return {{"pointwise", pointwise}, {"summary", summary}};
}

}  // namespace maxtorus::io
