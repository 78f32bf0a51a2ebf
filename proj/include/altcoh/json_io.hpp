#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "altcoh/elemab.hpp"
#include "altcoh/exterior.hpp"
#include "altcoh/group_table.hpp"
#include "altcoh/perm.hpp"
#include "altcoh/stablecoh.hpp"

namespace altcoh {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

/// 1-based image list.
inline json perm_to_json(const Perm& g) {
  json a = json::array();
  for (Point x : g.images()) a.push_back(x + 1);
  return a;
}

inline Perm perm_from_json(const json& j) {
  std::vector<Point> img;
  for (const auto& v : j) {
    const long long x = v.get<long long>();
    if (x < 1 || x > 65535) throw std::invalid_argument("image list entries must be 1-based points");
    img.push_back(static_cast<Point>(x - 1));
  }
  return Perm(std::move(img));
}

/// {"size": n, "mul": [[...], ...] or flat list, "identity": i} with 0-based indices.
inline GroupTable group_table_from_json(const json& j) {
  const auto size = j.at("size").get<std::size_t>();
  std::vector<std::uint32_t> mul;
  for (const auto& row : j.at("mul")) {
    if (row.is_array())
      for (const auto& v : row) mul.push_back(v.get<std::uint32_t>());
    else
      mul.push_back(row.get<std::uint32_t>());
  }
  return GroupTable(size, std::move(mul), j.at("identity").get<std::uint32_t>());
}

inline json group_table_to_json(const GroupTable& H) {
  json rows = json::array();
  for (std::size_t a = 0; a < H.size(); ++a) {
    json r = json::array();
    for (std::size_t b = 0; b < H.size(); ++b)
      r.push_back(H.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
    rows.push_back(std::move(r));
  }
  return json{{"size", H.size()}, {"mul", rows}, {"identity", H.identity()}};
}

inline json table_to_json(const CohomologyTable& t) {
  json dims = json::array(), prov = json::array();
  for (std::size_t d = 0; d < t.dims.size(); ++d) {
    dims.push_back(t.dims[d]);
    prov.push_back(to_string(t.provenance[d]));
  }
  return json{{"schema_version", kSchemaVersion}, {"kind", "cohomology_table"}, {"n", t.n}, {"p", t.p},
              {"max_degree", t.dims.empty() ? 0 : t.dims.size() - 1}, {"dims", dims}, {"provenance", prov}};
}

/// One row per (n, p, d, dim), with a header line.
inline std::string table_to_csv(const CohomologyTable& t) {
  std::ostringstream os;
  os << "n,p,d,dim\n";
  for (std::size_t d = 0; d < t.dims.size(); ++d) os << t.n << ',' << t.p << ',' << d << ',' << t.dims[d] << '\n';
  return os.str();
}

inline std::string table_to_text(const CohomologyTable& t) {
  std::ostringstream os;
  os << "H^d_s(A_" << t.n << ", Z/" << t.p << ")\n";
  os << std::setw(6) << "d" << std::setw(6) << "dim" << "  provenance\n";
  for (std::size_t d = 0; d < t.dims.size(); ++d)
    os << std::setw(6) << d << std::setw(6) << t.dims[d] << "  " << to_string(t.provenance[d]) << '\n';
  return os.str();
}

inline json invariant_table_to_json(const GradedInvariantTable& t, bool with_bases = false) {
  json j{{"schema_version", kSchemaVersion}, {"kind", "invariant_table"}, {"p", t.p}, {"k", t.k}, {"dims", t.dims}};
  if (with_bases) j["bases"] = t.bases;
  return j;
}

inline json subgroup_to_json(const std::string& kind, std::size_t degree, std::uint64_t p,
                             const std::vector<Perm>& gens, std::uint64_t order,
                             const std::vector<Block>& blocks = {}) {
  json g = json::array();
  for (const auto& x : gens) g.push_back(perm_to_json(x));
  json b = json::array();
  for (const auto& blk : blocks) b.push_back(json{{"start", blk.start + 1}, {"size", blk.size}});
  return json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"degree", degree}, {"p", p},
              {"rank", kind == "sylow" ? json(nullptr) : json(gens.size())}, {"order", order},
              {"generators", g}, {"blocks", b}};
}

inline json subgroup_to_json(const std::string& kind, const ElemAbSubgroup& E) {
  return subgroup_to_json(kind, E.ambient_degree, E.p, E.generators, ipow(E.p, static_cast<unsigned>(E.rank)),
                          E.blocks);
}

inline json theorem_report_to_json(const TheoremReport& r) {
  json j{{"n", r.n},
         {"p", r.p},
         {"rank", r.rank},
         {"formula", r.formula},
         {"invariants", r.invariant_dims},
         {"provenance", to_string(r.provenance)},
         {"weyl_order", r.weyl_order},
         {"normalizer_order", r.normalizer_order},
         {"closed_system", r.closed_system ? json(*r.closed_system) : json(nullptr)},
         {"passed", r.passed()}};
  json dp = json::array();
  for (bool b : r.degree_pass) dp.push_back(b);
  j["degree_pass"] = dp;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace altcoh
