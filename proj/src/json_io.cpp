#include "centrosym/json_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

#include "centrosym/errors.hpp"

namespace centro {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t positive_integer(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw InputError(std::string(what) + ": \"" + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> real_array(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_array()) throw InputError(std::string(what) + ": \"" + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_number()) {
      throw InputError(std::string(what) + ": \"" + key + "\"[" + std::to_string(k) +
                       "] is not a number");
    }
    out.push_back(v[k].get<double>());
  }
  return out;
}

Json one_based_array(const MultiIndex& index) {
  Json out = Json::array();
  for (std::size_t i : index) out.push_back(i);
  return out;
}

void write(const Json& j, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int level) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(level * indent), ' ');
  };
  switch (j.type()) {
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(item, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += pretty ? ": " : ":";
        write(value, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  std::string s(buf.data(), res.ptr);
  // Keep floats recognizable as floats when they happen to be integral.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump(const Json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

Json to_json(const DenseTensor& t) {
  return Json{{"order", t.order()},
              {"dim", t.dim()},
              {"entries", std::vector<double>(t.entries().begin(), t.entries().end())}};
}

Json to_json(const Vector& v) {
  return Json{{"dim", v.dim()},
              {"components", std::vector<double>(v.components().begin(), v.components().end())}};
}

Json to_json(const StructureReport& r) {
  return Json{{"verdict", std::string(to_string(r.verdict))},
              {"max_violation", r.max_violation},
              {"worst_index", one_based_array(r.worst_index)},
              {"tolerance_used", r.tolerance_used}};
}

Json to_json(const Decomposition& d) {
  return Json{{"centro", to_json(d.centro)}, {"skew", to_json(d.skew)}};
}

Json to_json(const CauchySpec& s) {
  return Json{{"order", s.order},
              {"generating",
               std::vector<double>(s.generating.components().begin(), s.generating.components().end())}};
}

Json to_json(const EigenPair& p) {
  return Json{{"lambda", p.lambda},
              {"x", std::vector<double>(p.x.components().begin(), p.x.components().end())},
              {"residual", p.residual},
              {"classification", std::string(to_string(p.classification))}};
}

Json to_json(const EigenSet& s) {
  Json pairs = Json::array();
  for (const auto& p : s.pairs) pairs.push_back(to_json(p));
  return Json{{"pairs", pairs},
              {"solver_stats",
               {{"starts", s.stats.starts},
                {"converged", s.stats.converged},
                {"deduplicated", s.stats.deduplicated}}}};
}

Json to_json(const InverseResult& r) {
  Json j{{"found", r.found()},
         {"side", std::string(to_string(r.side))},
         {"order", r.order},
         {"residual", std::isfinite(r.residual) ? Json(r.residual) : Json(nullptr)},
         {"centro_verdict", r.centro_verdict},
         {"inverse", r.inverse ? to_json(*r.inverse) : Json(nullptr)}};
  if (r.condition) {
    j["condition"] = std::isfinite(*r.condition) ? Json(*r.condition) : Json(nullptr);
  }
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

DenseTensor tensor_from_json(const Json& j) {
  const std::size_t order = positive_integer(j, "order", "tensor");
  const std::size_t dim = positive_integer(j, "dim", "tensor");
  return DenseTensor(order, dim, real_array(j, "entries", "tensor"));
}

Vector vector_from_json(const Json& j) {
  const std::size_t dim = positive_integer(j, "dim", "vector");
  std::vector<double> c = real_array(j, "components", "vector");
  if (c.size() != dim) throw InputError("vector: \"components\" length does not match \"dim\"");
  return Vector(std::move(c));
}

CauchySpec cauchy_spec_from_json(const Json& j) {
  CauchySpec spec;
  spec.order = positive_integer(j, "order", "cauchy spec");
  std::vector<double> c = real_array(j, "generating", "cauchy spec");
  if (c.empty()) throw InputError("cauchy spec: \"generating\" must not be empty");
  spec.generating = Vector(std::move(c));
  return spec;
}

}  // namespace centro
