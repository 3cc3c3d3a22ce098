#include "phasedyn/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace phasedyn {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const Operator& o) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index r = 0; r < o.dim(); ++r) {
    Json rr = Json::array();
    Json ii = Json::array();
    for (Index c = 0; c < o.dim(); ++c) {
      rr.push_back(o(r, c).real());
      ii.push_back(o(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  Json out;
  out["dim"] = o.dim();
  out["label"] = o.label();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

Operator operator_from_json(const Json& j) {
  try {
    const auto d = j.at("dim").get<Index>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (d <= 0 || re.size() != static_cast<std::size_t>(d) ||
        im.size() != static_cast<std::size_t>(d)) {
      throw Error("format", "operator rows do not match dim");
    }
    Operator::Matrix m(d, d);
    for (Index r = 0; r < d; ++r) {
      const auto& rr = re.at(static_cast<std::size_t>(r));
      const auto& ii = im.at(static_cast<std::size_t>(r));
      if (rr.size() != static_cast<std::size_t>(d) || ii.size() != static_cast<std::size_t>(d)) {
        throw Error("format", "operator columns do not match dim");
      }
      for (Index c = 0; c < d; ++c) {
        m(r, c) = cplx(rr.at(static_cast<std::size_t>(c)).get<double>(),
                       ii.at(static_cast<std::size_t>(c)).get<double>());
      }
    }
    return Operator(std::move(m), j.value("label", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw Error("format", e.what());
  }
}

Json to_json(const DeformedTriple& t) {
  Json params = Json::object();
  for (const auto& [k, v] : t.provenance.params) params[k] = v;
  Json out;
  out["Jp"] = to_json(t.Jp);
  out["Jm"] = to_json(t.Jm);
  out["J0"] = to_json(t.J0);
  out["provenance"] = {{"map", t.provenance.map},
                       {"params", std::move(params)},
                       {"hermitian_pair", t.hermitian_pair}};
  return out;
}

Json to_json(const CheckReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks()) {
    out.push_back({{"name", c.name},
                   {"residual", c.residual},
                   {"tol", c.tol},
                   {"pass", c.pass},
                   {"detail", c.detail}});
  }
  return out;
}

namespace {

void dump(const Json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (j.type()) {
  case Json::value_t::object: {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ',';
      first = false;
      newline(depth + 1);
      out += Json(it.key()).dump();
      out += indent < 0 ? ":" : ": ";
      dump(it.value(), indent, depth + 1, out);
    }
    newline(depth);
    out += '}';
    return;
  }
  case Json::value_t::array: {
    if (j.empty()) {
      out += "[]";
      return;
    }
    // Arrays of scalars stay on one line; matrices then read row by row.
    const bool flat = std::none_of(j.begin(), j.end(),
                                   [](const Json& e) { return e.is_structured(); });
    out += '[';
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += flat ? ", " : ",";
      first = false;
      if (!flat) newline(depth + 1);
      dump(e, indent, depth + 1, out);
    }
    if (!flat) newline(depth);
    out += ']';
    return;
  }
  case Json::value_t::number_float: {
    const double v = j.get<double>();
    out += std::isfinite(v) ? format_double(v) : "null";
    return;
  }
  default:
    out += j.dump();
  }
}

} // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump(j, indent, 0, out);
  out += '\n';
  return out;
}

} // namespace phasedyn
