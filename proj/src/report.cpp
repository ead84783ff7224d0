#include "sdt/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace sdt {

Json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

Json to_json(const CycloInt& value) {
  Json coeffs = Json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", value.order()}, {"coeffs", std::move(coeffs)}};
}

std::string format_complex(const CycloInt& value) {
  auto z = value.to_complex();
  // Print exact zeros without a sign.
  auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", clean(z.real()), clean(z.imag()));
  return buf;
}

Json to_json(const ConjClassReport& report) {
  const SemiDihedral group(report.n);
  Json classes = Json::array();
  for (const auto& cls : report.classes) {
    Json members = Json::array();
    for (const auto& g : cls.members) members.push_back(group.name(g));
    classes.push_back(Json{{"representative", group.name(cls.representative)},
                           {"size", cls.members.size()},
                           {"members", std::move(members)}});
  }
  return Json{{"n", report.n}, {"group_order", group.order()}, {"class_count", report.classes.size()},
              {"classes", std::move(classes)}};
}

Json to_json(const CharacterTable& table) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.rows().size(); ++i) {
    Json values = Json::array();
    for (std::size_t j = 0; j < table.columns().size(); ++j) {
      Json cell = to_json(table.value(i, j));
      cell["trig"] = trig_label(table.n(), table.rows()[i], table.columns()[j].representative);
      cell["approx"] = format_complex(table.value(i, j));
      values.push_back(std::move(cell));
    }
    rows.push_back(Json{{"character", table.rows()[i].to_string()}, {"values", std::move(values)}});
  }
  Json sizes = Json::array();
  for (const auto& cls : table.columns()) sizes.push_back(cls.members.size());
  return Json{{"n", table.n()}, {"classes", table.column_labels()}, {"class_sizes", std::move(sizes)},
              {"rows", std::move(rows)}};
}

Json to_json(const DimReport& report) {
  Json dims = Json::array();
  for (const auto& e : report.entries) {
    dims.push_back(Json{{"character", e.character.to_string()},
                        {"general", to_json(e.general)},
                        {"closed_form", e.closed_form ? to_json(*e.closed_form) : Json(nullptr)},
                        {"agree", e.agree}});
  }
  return Json{{"n", report.n}, {"m", report.m}, {"dims", std::move(dims)},
              {"total_identity_holds", report.total_identity_holds}};
}

Json to_json(const BasisDecision& decision, std::optional<bool> predicted) {
  Json orbits = Json::array();
  for (const auto& o : decision.orbits) {
    Json item{{"representative", o.representative.to_string()},
              {"orbit_size", o.orbit_size},
              {"stabilizer_order", o.stabilizer_order},
              {"orbital_dim", o.orbital_dim}};
    if (o.found) {
      Json witness = Json::array();
      for (const auto& s : o.witness) witness.push_back(s.to_string());
      item["witness"] = std::move(witness);
    } else {
      item["failure"] = "no " + std::to_string(o.orbital_dim) + " pairwise orthogonal members";
    }
    orbits.push_back(std::move(item));
  }
  return Json{{"n", decision.n},
              {"m", decision.m},
              {"character", decision.character.to_string()},
              {"predicted", predicted ? Json(*predicted) : Json(nullptr)},
              {"exhaustive", decision.exists},
              {"first_failure", decision.first_failure ? Json(decision.orbits[*decision.first_failure].representative.to_string())
                                                       : Json(nullptr)},
              {"orbits", std::move(orbits)}};
}

Json orbits_to_json(int n, int m, const std::vector<OrbitData>& orbits, const std::vector<CharacterId>& characters) {
  const SemiDihedral group(n);
  Json list = Json::array();
  for (const auto& orbit : orbits) {
    Json stab = Json::array();
    for (const auto& g : orbit.stabilizer) stab.push_back(group.name(g));
    Json item{{"representative", orbit.representative.to_string()},
              {"orbit_size", orbit.members.size()},
              {"stabilizer", std::move(stab)}};
    if (!characters.empty()) {
      Json per = Json::array();
      for (const auto& id : characters) {
        const CycloInt sum = stabilizer_char_sum(n, id, orbit);
        const bool in_omega = !sum.is_zero();
        per.push_back(Json{{"character", id.to_string()},
                           {"stabilizer_sum", to_json(sum)},
                           {"in_delta_bar", in_omega},
                           {"orbital_dim", in_omega ? orbital_dimension(n, id, orbit) : 0}});
      }
      item["characters"] = std::move(per);
    }
    list.push_back(std::move(item));
  }
  return Json{{"n", n}, {"m", m}, {"orbit_count", orbits.size()}, {"orbits", std::move(list)}};
}

std::string table_to_csv(const CharacterTable& table) {
  std::ostringstream out;
  out << "character";
  for (const auto& label : table.column_labels()) out << "," << label;
  out << "\n";
  for (std::size_t i = 0; i < table.rows().size(); ++i) {
    out << table.rows()[i].to_string();
    for (std::size_t j = 0; j < table.columns().size(); ++j)
      out << ",\"" << table.value(i, j).to_string() << " ~ " << format_complex(table.value(i, j)) << "\"";
    out << "\n";
  }
  return out.str();
}

std::string to_pretty(const ConjClassReport& report) {
  const SemiDihedral group(report.n);
  std::ostringstream out;
  out << "SD_" << group.order() << ": " << report.classes.size() << " conjugacy classes\n";
  for (const auto& cls : report.classes) {
    out << "  [" << group.name(cls.representative) << "] size " << cls.members.size() << ": {";
    for (std::size_t i = 0; i < cls.members.size(); ++i) out << (i ? ", " : "") << group.name(cls.members[i]);
    out << "}\n";
  }
  return out.str();
}

std::string to_pretty(const CharacterTable& table) {
  std::ostringstream out;
  out << "Character table of SD_" << 8 * table.n() << "\n";
  const auto labels = table.column_labels();
  for (std::size_t i = 0; i < table.rows().size(); ++i) {
    out << table.rows()[i].display_name() << "\n";
    for (std::size_t j = 0; j < labels.size(); ++j)
      out << "  [" << labels[j] << "] " << trig_label(table.n(), table.rows()[i], table.columns()[j].representative) << "  "
          << table.value(i, j).to_string() << "\n";
  }
  return out.str();
}

std::string to_pretty(const DimReport& report) {
  std::ostringstream out;
  out << "dim V_chi(SD_" << 8 * report.n << "), m = " << report.m << "\n";
  for (const auto& e : report.entries) {
    out << "  " << e.character.display_name() << ": " << e.general << "  closed form: "
        << (e.closed_form ? e.closed_form->str() : std::string("non-integral")) << (e.agree ? "" : "  [MISMATCH]") << "\n";
  }
  out << "  sum dim = m^{4n}: " << (report.total_identity_holds ? "yes" : "NO") << "\n";
  return out.str();
}

std::string to_pretty(const BasisDecision& decision, std::optional<bool> predicted) {
  std::ostringstream out;
  out << "V_" << decision.character.display_name() << "(SD_" << 8 * decision.n << "), m = " << decision.m << "\n";
  out << "  predicted: " << (predicted ? (*predicted ? "basis" : "no basis") : "n/a (m < 2)") << "\n";
  out << "  exhaustive: " << (decision.exists ? "basis" : "no basis") << "\n";
  for (const auto& o : decision.orbits) {
    out << "  " << o.representative.to_string() << " |O|=" << o.orbit_size << " |G_a|=" << o.stabilizer_order
        << " dim=" << o.orbital_dim << (o.found ? " ok" : " FAIL");
    if (o.found && o.witness.size() > 1) {
      out << " {";
      for (std::size_t i = 0; i < o.witness.size(); ++i) out << (i ? " " : "") << o.witness[i].to_string();
      out << "}";
    }
    out << "\n";
  }
  return out.str();
}

std::string orbits_to_pretty(int n, int m, const std::vector<OrbitData>& orbits, const std::vector<CharacterId>& characters) {
  const SemiDihedral group(n);
  std::ostringstream out;
  out << orbits.size() << " orbits of SD_" << group.order() << " on sequences of length " << 4 * n << " over {1.." << m << "}\n";
  for (const auto& orbit : orbits) {
    out << "  " << orbit.representative.to_string() << " |O|=" << orbit.members.size() << " G_a={";
    for (std::size_t i = 0; i < orbit.stabilizer.size(); ++i) out << (i ? "," : "") << group.name(orbit.stabilizer[i]);
    out << "}";
    for (const auto& id : characters) {
      const bool in = !stabilizer_char_sum(n, id, orbit).is_zero();
      out << " " << id.display_name() << ":" << (in ? std::to_string(orbital_dimension(n, id, orbit)) : "-");
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sdt
