#include "liemult/io.hpp"

#include <sstream>

namespace liemult {

FieldSpec field_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw Error(Errc::BadInput, "field: expected {\"type\": \"Q\"|\"Fp\", ...}");
  auto type = j["type"].get<std::string>();
  if (type == "Q") {
    if (j.size() != 1) throw Error(Errc::BadInput, "field: unknown keys in Q field");
    return FieldSpec::rationals();
  }
  if (type == "Fp") {
    if (j.size() != 2 || !j.contains("p") || !j["p"].is_number_integer())
      throw Error(Errc::BadInput, "field: Fp needs a prime 'p'");
    return FieldSpec::prime(j["p"].get<std::int64_t>());
  }
  throw Error(Errc::BadInput, "field: unknown type '" + type + "'");
}

nlohmann::json field_to_json(const FieldSpec& spec) {
  if (spec.kind == FieldSpec::Kind::Rationals) return {{"type", "Q"}};
  return {{"type", "Fp"}, {"p", spec.p}};
}

FieldSpec algebra_file_field(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("field"))
    throw Error(Errc::BadInput, "algebra file: missing 'field'");
  return field_from_json(j["field"]);
}

nlohmann::json parse_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::BadInput, "malformed JSON");
  return j;
}

nlohmann::json report_to_json(const std::string& algebra_name, std::size_t algebra_dim,
                              const MultiplierReport& rep) {
  nlohmann::json j;
  j["schema"] = "liemult-report/1";
  j["algebra"] = {{"name", algebra_name}, {"dim", algebra_dim}};
  j["field"] = field_to_json(rep.field);
  j["mode"] = rep.mode;
  j["dims"] = {
      {"derived", rep.dim_derived},
      {"wedge", rep.dim_wedge},
      {"schur", rep.dim_M},
      {"m0_lower", rep.dim_M0_lower},
      {"m0_upper", rep.dim_M0_upper},
      {"b0_lower", rep.dim_B0_lower},
      {"b0_upper", rep.dim_B0_upper},
      {"curly_lower", rep.dim_curly_lower},
      {"curly_upper", rep.dim_curly_upper},
  };
  j["status"] = to_string(rep.status);
  nlohmann::json ev;
  ev["points"] = rep.sweep.points;
  ev["last_growth"] = rep.sweep.last_growth;
  ev["early_exit"] = rep.sweep.early_exit;
  ev["m0_inside_kernel_checked"] = rep.m0_kernel_checked;
  if (rep.mode == "sampled") {
    ev["seed"] = rep.seed;
    ev["budget"] = rep.budget;
    ev["window"] = rep.window;
    ev["budget_exhausted"] = rep.sweep.budget_exhausted;
  } else {
    ev["reducer_dim"] = rep.sweep.reducer_dim;
    ev["transversal_dim"] = rep.sweep.transversal_dim;
  }
  j["evidence"] = ev;
  j["notes"] = rep.notes;
  return j;
}

std::string report_tsv_header() {
  return "algebra\tfield\tmode\tstatus\tdim\tderived\twedge\tschur\tm0_lower\tm0_upper\t"
         "b0_lower\tb0_upper\tcurly_lower\tcurly_upper";
}

std::string report_tsv_row(const std::string& algebra_name, const MultiplierReport& rep) {
  std::ostringstream os;
  os << algebra_name << '\t' << rep.field.to_string() << '\t' << rep.mode << '\t'
     << to_string(rep.status) << '\t' << rep.dim_L << '\t' << rep.dim_derived << '\t'
     << rep.dim_wedge << '\t' << rep.dim_M << '\t' << rep.dim_M0_lower << '\t' << rep.dim_M0_upper
     << '\t' << rep.dim_B0_lower << '\t' << rep.dim_B0_upper << '\t' << rep.dim_curly_lower << '\t'
     << rep.dim_curly_upper;
  return os.str();
}

}  // namespace liemult
