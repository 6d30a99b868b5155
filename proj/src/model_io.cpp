#include "floerbox/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace floerbox {

namespace {

using nlohmann::json;

int64_t require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw Error(ErrorCode::Io,
                std::string("model JSON needs integer field \"") + key + "\"");
  }
  return j[key].get<int64_t>();
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw Error(ErrorCode::Io,
                std::string("model JSON needs string field \"") + key + "\"");
  }
  return j[key].get<std::string>();
}

const json& require_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(ErrorCode::Io,
                std::string("model JSON needs array field \"") + key + "\"");
  }
  return j[key];
}

CfkModel parse_thin(const json& j) {
  ThinSpec spec;
  spec.tau = require_int(j, "tau");
  if (j.contains("squares")) {
    for (const json& sq : require_array(j, "squares")) {
      SquareSpec s;
      s.center = require_int(sq, "center");
      s.count = require_int(sq, "count");
      spec.squares.push_back(s);
    }
  }
  return build_thin_model(spec);
}

CfkModel parse_lspace(const json& j) {
  LspaceSpec spec;
  int64_t sign = require_int(j, "sign");
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::Io, "lspace model sign must be 1 or -1");
  }
  spec.sign = static_cast<int>(sign);
  for (const json& e : require_array(j, "r")) {
    if (!e.is_number_integer()) {
      throw Error(ErrorCode::Io, "lspace exponents must be integers");
    }
    spec.r.push_back(e.get<int64_t>());
  }
  return build_lspace_model(spec);
}

CfkModel parse_explicit(const json& j) {
  CfkModel model;
  for (const json& g : require_array(j, "generators")) {
    CfkGenerator gen;
    gen.name = require_string(g, "name");
    gen.alexander = require_int(g, "alexander");
    gen.maslov = require_int(g, "maslov");
    model.generators.push_back(gen);
  }
  for (const json& a : require_array(j, "arrows")) {
    std::string kind = require_string(a, "kind");
    CfkArrow arrow;
    arrow.src = model.find(require_string(a, "src"));
    arrow.dst = model.find(require_string(a, "dst"));
    arrow.length = a.contains("length") ? require_int(a, "length") : 1;
    if (arrow.src < 0 || arrow.dst < 0) {
      throw Error(ErrorCode::Io, "arrow endpoint names an unknown generator");
    }
    if (kind == "vertical") {
      model.vertical.push_back(arrow);
    } else if (kind == "horizontal") {
      model.horizontal.push_back(arrow);
    } else {
      throw Error(ErrorCode::Io,
                  "arrow kind must be \"vertical\" or \"horizontal\"");
    }
  }
  model.tau = require_int(j, "tau");
  int64_t eps = require_int(j, "epsilon");
  if (eps < -1 || eps > 1) {
    throw Error(ErrorCode::Io, "epsilon must be -1, 0, or 1");
  }
  model.epsilon = static_cast<int>(eps);

  // The distinguished generators are the ones untouched by the vertical
  // (respectively horizontal) arrows; validate() confirms uniqueness.
  std::vector<bool> in_vertical(model.generators.size(), false);
  std::vector<bool> in_horizontal(model.generators.size(), false);
  for (const CfkArrow& a : model.vertical) {
    in_vertical[a.src] = in_vertical[a.dst] = true;
  }
  for (const CfkArrow& a : model.horizontal) {
    in_horizontal[a.src] = in_horizontal[a.dst] = true;
  }
  for (size_t i = 0; i < model.generators.size(); ++i) {
    if (!in_vertical[i] && model.xi0 < 0) model.xi0 = static_cast<int>(i);
    if (!in_horizontal[i] && model.eta0 < 0) model.eta0 = static_cast<int>(i);
  }
  validate(model);
  return model;
}

json invariants_fields(const Invariants& inv) {
  return json{{"genus", inv.genus},
              {"fibered", inv.fibered},
              {"thickness", inv.thickness},
              {"total_rank", inv.total_rank}};
}

}  // namespace

CfkModel parse_model_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::Io, "model file is not a JSON object");
  }
  if (j.contains("thin")) return parse_thin(j["thin"]);
  if (j.contains("lspace")) return parse_lspace(j["lspace"]);
  if (j.contains("explicit")) return parse_explicit(j["explicit"]);
  throw Error(ErrorCode::Io,
              "model JSON needs a \"thin\", \"lspace\", or \"explicit\" key");
}

CfkModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open model file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model_json(buffer.str());
}

std::string hfk_tsv(const HfkTable& table) {
  std::ostringstream out;
  out << "A\tdelta_rel\trank\n";
  for (const auto& [key, rank] : table.ranks) {
    out << key.first << '\t' << key.second << '\t' << rank << '\n';
  }
  return out.str();
}

std::string hfk_json(const HfkTable& table, const std::string& pattern,
                     int64_t n) {
  json rows = json::array();
  for (const auto& [key, rank] : table.ranks) {
    rows.push_back(json{{"A", key.first},
                        {"delta_rel", key.second},
                        {"rank", rank}});
  }
  json doc{{"schema", "floerbox/1"},
           {"command", "hfk"},
           {"pattern", pattern},
           {"n", n},
           {"shift", table.shift},
           {"total_rank", table.total_rank()},
           {"rows", rows}};
  return doc.dump() + "\n";
}

std::string invariants_tsv(const Invariants& inv) {
  std::ostringstream out;
  out << "genus\tfibered\tthickness\ttotal_rank\n";
  out << inv.genus << '\t' << (inv.fibered ? "true" : "false") << '\t'
      << inv.thickness << '\t' << inv.total_rank << '\n';
  return out.str();
}

std::string invariants_json(const Invariants& inv, const std::string& pattern,
                            int64_t n) {
  json doc{{"schema", "floerbox/1"},
           {"command", "invariants"},
           {"pattern", pattern},
           {"n", n},
           {"invariants", invariants_fields(inv)}};
  return doc.dump() + "\n";
}

std::string csc_tsv(const CscVerdict& verdict) {
  std::ostringstream out;
  out << "status\tobstruction\tslopes\tfamily\n";
  out << to_string(verdict.status) << '\t' << to_string(verdict.obstruction)
      << '\t';
  if (verdict.candidate_pairs.empty()) {
    out << "-";
  } else {
    for (size_t i = 0; i < verdict.candidate_pairs.size(); ++i) {
      if (i) out << ',';
      out << to_string(verdict.candidate_pairs[i]);
    }
  }
  out << '\t' << (verdict.family.empty() ? "-" : verdict.family) << '\n';
  return out.str();
}

std::string csc_json(const CscVerdict& verdict, int64_t n) {
  json slopes = json::array();
  for (const SlopePair& p : verdict.candidate_pairs) {
    slopes.push_back(json{{"numerator", p.numerator},
                          {"q", p.q},
                          {"display", to_string(p)}});
  }
  json doc{{"schema", "floerbox/1"},
           {"command", "csc"},
           {"n", n},
           {"status", to_string(verdict.status)},
           {"obstruction", to_string(verdict.obstruction)},
           {"slopes", slopes},
           {"family", verdict.family},
           {"genus", verdict.genus},
           {"thickness", verdict.thickness},
           {"alexander", verdict.alexander.to_string()},
           {"alexander_second_derivative",
            verdict.alexander_second_derivative}};
  return doc.dump() + "\n";
}

std::string sweep_header_tsv() {
  return "n\tgenus\tfibered\tthickness\ttotal_rank\n";
}

std::string sweep_row_tsv(int64_t n, const Invariants& inv) {
  std::ostringstream out;
  out << n << '\t' << inv.genus << '\t' << (inv.fibered ? "true" : "false")
      << '\t' << inv.thickness << '\t' << inv.total_rank << '\n';
  return out.str();
}

std::string sweep_header_json(const std::string& pattern) {
  json doc{{"schema", "floerbox/1"},
           {"command", "sweep"},
           {"pattern", pattern}};
  return doc.dump() + "\n";
}

std::string sweep_row_json(int64_t n, const Invariants& inv) {
  json doc{{"n", n}, {"invariants", invariants_fields(inv)}};
  return doc.dump() + "\n";
}

std::string error_json(ErrorCode code, const std::string& message) {
  json doc{{"schema", "floerbox/1"},
           {"error", json{{"code", error_code_name(code)},
                          {"message", message}}}};
  return doc.dump() + "\n";
}

}  // namespace floerbox
