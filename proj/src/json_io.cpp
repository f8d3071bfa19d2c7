#include "gcard/json_io.hpp"

#include <cctype>
#include <iomanip>
#include <limits>
#include <sstream>

namespace gcard {

namespace {

json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
    return value.convert_to<std::uint64_t>();
  return value.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw FormatError("expected an integer, got " + j.dump());
}

std::size_t index_from_json(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw FormatError(std::string(what) + ": expected a natural number, got " + j.dump());
  return j.get<std::size_t>();
}

std::size_t key_index(const std::string& key, const char* what) {
  if (key.empty() || !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw FormatError(std::string(what) + ": key '" + key + "' is not an element index");
  return std::stoul(key);
}

std::string csv_double(const std::optional<double>& value) {
  if (!value) return "";
  std::ostringstream os;
  os << std::setprecision(17) << *value;
  return os.str();
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }

void to_json(json& j, const Permutation& sigma) {
  j = json::array();
  for (std::size_t v : sigma.images()) j.push_back(v);
}

void to_json(json& j, const Cycle& cycle) {
  j = json::array();
  for (std::size_t v : cycle.entries()) j.push_back(v);
}

void to_json(json& j, const CycleType& lambda) {
  j = json::array();
  for (std::size_t m : lambda.multiplicities()) j.push_back(m);
}

void to_json(json& j, const PVector& p) {
  j = json::array();
  for (unsigned v : p.entries()) j.push_back(v);
}

void to_json(json& j, const SkeletonComponent& c) {
  j = json::object();
  j["aut_order"] = big_to_json(c.aut_order);
  if (c.label) j["label"] = *c.label;
}

void to_json(json& j, const GroupoidSkeleton& skeleton) {
  j = json::object();
  j["components"] = json::array();
  for (const auto& c : skeleton.components()) j["components"].push_back(c);
}

void to_json(json& j, const ValidationReport& report) {
  j = json{{"valid", report.valid}, {"sampled", report.sampled}, {"checks", report.checks}};
  if (!report.valid) {
    j["failure"] = report.failure;
    j["witness"] = report.witness;
  }
}

void to_json(json& j, const Orbit& orbit) {
  j = json{{"representative", orbit.representative},
           {"size", orbit.size},
           {"stabilizer_order", big_to_json(orbit.stabilizer_order)}};
}

void to_json(json& j, const MomentReport& report) {
  j = json::object();
  j["n"] = report.n;
  j["p"] = report.p;
  j["method"] = to_string(report.method);
  if (report.lhs) j["lhs"] = *report.lhs;
  if (report.rhs) j["rhs"] = *report.rhs;
  if (report.equal) j["equal"] = *report.equal;
  if (report.estimate) j["estimate"] = *report.estimate;
  if (report.standard_error) j["standard_error"] = *report.standard_error;
  if (report.z_score) j["z_score"] = *report.z_score;
  if (report.samples) j["samples"] = *report.samples;
  if (report.seed) j["seed"] = *report.seed;
}

void to_json(json& j, const CategorifiedReport& report) {
  j = json::object();
  j["n"] = report.n;
  j["p"] = report.p;
  j["lhs_skeleton"] = report.lhs_skeleton;
  j["rhs_skeleton"] = report.rhs_skeleton;
  j["equivalent"] = report.equivalent;
  j["equivalence_level"] = "skeleton";
  j["lhs_card"] = report.lhs_card;
  j["rhs_card"] = report.rhs_card;
  j["bridge_check"] = report.bridge_check;
  j["q_size"] = report.q_size;
  j["q_over_factorial"] = report.q_over_factorial;
  j["expected_product"] = report.expected_product;
  j["orbits"] = report.orbits;
  j["action_validation"] = report.action_validation;
}

void to_json(json& j, const GeneralTheoremReport& report) {
  j = json::object();
  j["expected_size"] = report.expected_size;
  j["elements_cardinality"] = report.elements_cardinality;
  j["equal"] = report.equal;
  j["group_order"] = report.group_order;
  j["object_count"] = report.object_count;
  j["elements_skeleton"] = report.elements_skeleton;
  j["orbits"] = report.orbits;
  j["functor_validation"] = report.functor_validation;
}

// ---------------------------------------------------------------------- parse

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw FormatError(e.what());
    }
  }
  return Rational(big_from_json(j));
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("permutation must be an array of images");
  std::vector<std::size_t> images;
  for (const auto& v : j) images.push_back(index_from_json(v, "permutation"));
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

CycleType cycle_type_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("cycle type must be an array of multiplicities");
  std::vector<std::size_t> m;
  for (const auto& v : j) m.push_back(index_from_json(v, "cycle type"));
  try {
    return CycleType(std::move(m));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

GroupoidSkeleton skeleton_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw FormatError("skeleton must be an object with a \"components\" array");
  std::vector<SkeletonComponent> components;
  for (const auto& c : j["components"]) {
    if (!c.is_object() || !c.contains("aut_order")) throw FormatError("component needs an \"aut_order\"");
    SkeletonComponent comp{big_from_json(c["aut_order"]), std::nullopt};
    if (c.contains("label") && !c["label"].is_null())
      comp.label = c["label"].is_string() ? c["label"].get<std::string>() : c["label"].dump();
    components.push_back(std::move(comp));
  }
  try {
    return GroupoidSkeleton(std::move(components));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

FiniteGroup cayley_group_from_json(const json& j, const Limits& limits) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw FormatError("Cayley table must be an object with \"order\" and \"table\"");
  const std::size_t m = index_from_json(j["order"], "order");
  const json& rows = j["table"];
  if (!rows.is_array() || rows.size() != m)
    throw FormatError("Cayley table must have " + std::to_string(m) + " rows");
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : rows) {
    if (!row.is_array()) throw FormatError("Cayley table rows must be arrays");
    std::vector<std::size_t> r;
    for (const auto& v : row) r.push_back(index_from_json(v, "Cayley table entry"));
    table.push_back(std::move(r));
  }
  return from_cayley_table(table, limits, j.value("name", std::string("cayley")));
}

FiniteGroup group_from_name(const std::string& name, const Limits& limits) {
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'Z') &&
      std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
    const std::size_t k = std::stoul(name.substr(1));
    if (name[0] == 'Z') return make_cyclic(k);
    require_enumerable(static_cast<unsigned>(k), limits, "group S<n>");
    return make_symmetric(k);
  }
  throw FormatError("unknown group name '" + name + "' (expected S<n> or Z<k>)");
}

FiniteGroup group_from_json(const json& j, const Limits& limits) {
  if (j.is_string()) return group_from_name(j.get<std::string>(), limits);
  return cayley_group_from_json(j, limits);
}

json cayley_group_to_json(const FiniteGroup& group) {
  return json{{"order", group.order()}, {"table", group.cayley_table()}};
}

EquivariantFunctor functor_from_json(const json& j, const Limits& limits) {
  if (!j.is_object() || !j.contains("group") || !j.contains("fibers") || !j.contains("transports"))
    throw FormatError("functor must be an object with \"group\", \"fibers\" and \"transports\"");
  FiniteGroup group = group_from_json(j["group"], limits);
  const std::size_t m = group.order();

  const json& fibers = j["fibers"];
  if (!fibers.is_object()) throw FormatError("\"fibers\" must map element indices to sizes");
  std::vector<std::size_t> sizes(m, 0);
  std::vector<bool> have_fiber(m, false);
  for (const auto& [key, value] : fibers.items()) {
    const std::size_t g = key_index(key, "fibers");
    if (g >= m) throw FormatError("fibers: element " + key + " is not in the group");
    sizes[g] = index_from_json(value, "fiber size");
    have_fiber[g] = true;
  }
  for (std::size_t g = 0; g < m; ++g)
    if (!have_fiber[g]) throw FormatError("fibers: missing fiber for element " + std::to_string(g));

  const json& transports = j["transports"];
  if (!transports.is_object()) throw FormatError("\"transports\" must map element indices to transport tables");
  std::vector<std::vector<std::vector<std::size_t>>> tables(m, std::vector<std::vector<std::size_t>>(m));
  std::vector<std::vector<bool>> have(m, std::vector<bool>(m, false));
  for (const auto& [hkey, per_g] : transports.items()) {
    const std::size_t h = key_index(hkey, "transports");
    if (h >= m) throw FormatError("transports: element " + hkey + " is not in the group");
    if (!per_g.is_object()) throw FormatError("transports[" + hkey + "] must be an object");
    for (const auto& [gkey, bijection] : per_g.items()) {
      const std::size_t g = key_index(gkey, "transports");
      if (g >= m) throw FormatError("transports: element " + gkey + " is not in the group");
      if (!bijection.is_array()) throw FormatError("transports[" + hkey + "][" + gkey + "] must be an array");
      for (const auto& v : bijection) tables[h][g].push_back(index_from_json(v, "transport entry"));
      have[h][g] = true;
    }
  }
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t g = 0; g < m; ++g)
      if (!have[h][g])
        throw FormatError("transports: missing transport for (h, g) = (" + std::to_string(h) + ", " +
                          std::to_string(g) + ")");
  try {
    return EquivariantFunctor::from_tables(std::move(group), std::move(sizes), tables);
  } catch (const FunctorShapeError& e) {
    throw FormatError(e.what());
  }
}

// ------------------------------------------------------------------------ CSV

std::string moment_csv_header() { return "n,p,method,lhs,rhs,equal,estimate,standard_error,z_score,samples,seed"; }

std::string to_csv_row(const MomentReport& r) {
  std::ostringstream os;
  os << r.n << ",\"" << r.p.str() << "\"," << to_string(r.method) << ',' << (r.lhs ? r.lhs->str() : "") << ','
     << (r.rhs ? r.rhs->str() : "") << ',' << (r.equal ? (*r.equal ? "true" : "false") : "") << ','
     << csv_double(r.estimate) << ',' << csv_double(r.standard_error) << ',' << csv_double(r.z_score) << ','
     << (r.samples ? std::to_string(*r.samples) : "") << ',' << (r.seed ? std::to_string(*r.seed) : "");
  return os.str();
}

std::string categorified_csv_header() {
  return "n,p,equivalent,lhs_card,rhs_card,bridge_check,q_size,orbits,validation_sampled";
}

std::string to_csv_row(const CategorifiedReport& r) {
  std::ostringstream os;
  os << r.n << ",\"" << r.p.str() << "\"," << (r.equivalent ? "true" : "false") << ',' << r.lhs_card << ','
     << r.rhs_card << ',' << (r.bridge_check ? "true" : "false") << ',' << r.q_size << ',' << r.orbits.size() << ','
     << (r.action_validation.sampled ? "true" : "false");
  return os.str();
}

}  // namespace gcard
