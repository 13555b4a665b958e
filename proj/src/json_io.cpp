#include "knotzeta/json_io.hpp"

#include <limits>
#include <sstream>

#include "knotzeta/error.hpp"

namespace knotzeta {

Json coefficients_json(const QPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) {
    const std::string key = std::to_string(e);
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
      out[key] = static_cast<long long>(c.get_num().get_si());
    } else {
      out[key] = to_string(c);
    }
  }
  return out;
}

Json coefficients_json(const FpPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.value();
  return out;
}

Json canonical_json(const CanonicalPoly<Rational>& p) {
  return Json{{"coeffs", coefficients_json(p.poly)}, {"unit", to_string(p.unit)}};
}

Json canonical_json(const CanonicalPoly<Fp>& p) {
  return Json{{"coeffs", coefficients_json(p.poly)}, {"unit", to_string(p.unit)}};
}

Json diagram_json(const KnotDiagram& d) {
  Json crossings = Json::array();
  for (const auto& c : d.crossings()) {
    crossings.push_back(Json{{"sign", to_int(c.sign)},
                             {"over", c.over.value},
                             {"under_in", c.under_in.value},
                             {"under_out", c.under_out.value}});
  }
  return Json{{"arcs", d.n_arcs()}, {"crossings", crossings}};
}

Json graph_json(const ArcGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(Json{{"from", e.from + 1},
                         {"to", e.to + 1},
                         {"label", std::string(to_string(e.label))},
                         {"crossing", e.crossing + 1}});
  }
  return Json{{"vertices", g.vertex_names()}, {"edges", edges}};
}

std::string graph_dot(const ArcGraph& g) {
  std::ostringstream out;
  out << "digraph arcs {\n";
  for (std::size_t v = 0; v < g.n_vertices(); ++v) out << "  v" << v + 1 << " [label=\"" << g.vertex_names()[v] << "\"];\n";
  for (const auto& e : g.edges()) {
    out << "  v" << e.from + 1 << " -> v" << e.to + 1 << " [label=\"" << to_string(e.label) << " c" << e.crossing + 1
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json verdict_json(const Verdict& v) {
  return Json{{"check", v.check}, {"status", std::string(to_string(v.status))}, {"lhs", v.lhs},
              {"rhs", v.rhs},     {"horizon", v.horizon},                       {"detail", v.detail}};
}

Json representation_json(const Representation& rho) {
  Json images = Json::object();
  for (std::size_t g = 0; g < rho.images.size(); ++g) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < rho.images[g].rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < rho.images[g].cols(); ++j) row.push_back(rho.images[g](i, j).value());
      rows.push_back(row);
    }
    images["x" + std::to_string(g + 1)] = rows;
  }
  return Json{{"dim", rho.dim}, {"field", rho.field.modulus()}, {"images", images}};
}

Representation parse_representation(const Json& j) {
  try {
    Representation rho;
    rho.dim = j.at("dim").get<int>();
    if (rho.dim < 1) throw InputError("representation dimension must be positive");
    rho.field = PrimeField(j.at("field").get<std::uint64_t>());
    const auto& images = j.at("images");
    const std::size_t n = images.size();
    rho.images.assign(n, Matrix<Fp>(rho.dim, rho.dim, rho.field.zero()));
    for (std::size_t g = 0; g < n; ++g) {
      const std::string key = "x" + std::to_string(g + 1);
      if (!images.contains(key)) throw InputError("representation is missing image " + key);
      const auto& rows = images.at(key);
      if (rows.size() != static_cast<std::size_t>(rho.dim)) throw InputError("image " + key + " has the wrong size");
      for (int r = 0; r < rho.dim; ++r) {
        if (rows.at(r).size() != static_cast<std::size_t>(rho.dim)) throw InputError("image " + key + " has the wrong size");
        for (int c = 0; c < rho.dim; ++c) rho.images[g](r, c) = rho.field(rows.at(r).at(c).get<std::int64_t>());
      }
    }
    return rho;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed representation: ") + e.what());
  }
}

}  // namespace knotzeta
