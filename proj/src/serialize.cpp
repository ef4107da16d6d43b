#include "serialize.hpp"

#include <cctype>

#include "error.hpp"

namespace crosscap {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

int small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1'000'000'000 || v > 1'000'000'000) parse_error(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(small_int(v, what));
  return out;
}

const Integer kSafe = Integer("9007199254740991");  // 2^53 - 1

Json move_list(const MoveWord& word) {
  Json out = Json::array();
  for (const auto& mv : word) out.push_back(move_to_json(mv));
  return out;
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (abs(x) <= kSafe) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) parse_error("empty integer string");
    for (std::size_t k = start; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) parse_error("not a decimal integer: \"" + s + "\"");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  parse_error("matrix entries must be integers or decimal strings");
}

Json move_to_json(const GeneratorMove& move) {
  Json j;
  if (const auto* s = std::get_if<CrosscapSlide>(&move)) {
    j["type"] = "crosscap_slide";
    j["i"] = s->i;
    j["j"] = s->j;
  } else if (const auto* t = std::get_if<DehnTwist>(&move)) {
    j["type"] = "dehn_twist";
    j["support"] = t->generator.support();
  } else if (const auto* b = std::get_if<BoundarySlide>(&move)) {
    j["type"] = "boundary_slide";
    j["i"] = b->i;
    j["j"] = b->j;
  } else {
    j["type"] = "puncture_perm";
    j["perm"] = std::get<PuncturePerm>(move).perm;
  }
  return j;
}

GeneratorMove move_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) parse_error("move type must be a string");
  const std::string& t = type.get_ref<const std::string&>();
  if (t == "crosscap_slide") return CrosscapSlide{small_int(field(j, "i"), "i"), small_int(field(j, "j"), "j")};
  if (t == "boundary_slide") return BoundarySlide{small_int(field(j, "i"), "i"), small_int(field(j, "j"), "j")};
  if (t == "puncture_perm") return PuncturePerm{int_list(field(j, "perm"), "perm")};
  if (t == "dehn_twist") {
    try {
      return DehnTwist{TwistGenerator(int_list(field(j, "support"), "support"))};
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      parse_error(std::string("bad twist support: ") + e.what());
    }
  }
  parse_error("unknown move type \"" + t + "\"");
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["surface"] = {{"crosscaps", inst.signature.crosscaps}, {"punctures", inst.signature.punctures}};
  Json rows = Json::array();
  for (int r = 0; r < inst.matrix.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < inst.matrix.size(); ++c) row.push_back(integer_to_json(inst.matrix.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

Instance instance_from_json(const Json& j) {
  const Json& surface = field(j, "surface");
  Instance inst;
  inst.signature.crosscaps = small_int(field(surface, "crosscaps"), "crosscaps");
  inst.signature.punctures = surface.contains("punctures") ? small_int(surface["punctures"], "punctures") : 0;
  check_signature(inst.signature);
  const Json& rows = field(j, "matrix");
  const int size = inst.signature.rank();
  if (!rows.is_array()) parse_error("matrix must be an array of rows");
  if (static_cast<int>(rows.size()) != size)
    throw Error(ErrorCode::DimensionMismatch, "matrix must have " + std::to_string(size) + " rows");
  inst.matrix = IntMatrix(size);
  for (int r = 0; r < size; ++r) {
    if (!rows[r].is_array()) parse_error("matrix must be an array of rows");
    if (static_cast<int>(rows[r].size()) != size)
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(r + 1) + " must have " +
                                                    std::to_string(size) + " entries");
    for (int c = 0; c < size; ++c) inst.matrix.at(r, c) = integer_from_json(rows[r][c]);
  }
  return inst;
}

Json trace_to_json(const Trace& trace) {
  Json out = Json::array();
  for (const auto& s : trace) {
    Json j;
    j["phase"] = s.phase;
    j["row"] = s.row;
    j["side"] = to_string(s.side);
    j["moves"] = move_list(s.moves);
    j["before"] = s.before;
    j["after"] = s.after;
    out.push_back(std::move(j));
  }
  return out;
}

Json certificate_to_json(const Certificate& cert, bool include_trace) {
  Json j;
  j["level"] = to_string(cert.level);
  j["moves"] = move_list(cert.moves);
  Json meta;
  meta["completeness"] = to_string(cert.level == Level::Integer ? Completeness::FullInteger : Completeness::Mod2Only);
  const MoveCounts& c = cert.meta.counts;
  meta["move_counts"] = {{"total", c.total()},
                         {"dehn_twist", c.dehn_twists},
                         {"crosscap_slide", c.crosscap_slides},
                         {"boundary_slide", c.boundary_slides},
                         {"puncture_perm", c.puncture_perms}};
  if (cert.meta.boundary_complexity) meta["boundary_complexity"] = integer_to_json(*cert.meta.boundary_complexity);
  if (include_trace) {
    meta["kernel_trace"] = trace_to_json(cert.meta.kernel_trace);
    meta["boundary_trace"] = trace_to_json(cert.meta.boundary_trace);
  }
  j["meta"] = std::move(meta);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  const Json& level = field(j, "level");
  if (level == "integer")
    cert.level = Level::Integer;
  else if (level == "mod2")
    cert.level = Level::Mod2;
  else
    parse_error("level must be \"integer\" or \"mod2\"");
  const Json& moves = field(j, "moves");
  if (!moves.is_array()) parse_error("moves must be an array");
  for (const auto& mv : moves) cert.moves.push_back(move_from_json(mv));
  cert.meta.counts = count_moves(cert.moves);
  if (j.contains("meta") && j["meta"].is_object() && j["meta"].contains("boundary_complexity"))
    cert.meta.boundary_complexity = integer_from_json(j["meta"]["boundary_complexity"]);
  return cert;
}

Json decision_to_json(const Decision& d, bool include_trace) {
  Json j;
  j["realizable"] = d.realizable;
  j["reason"] = to_string(d.reason);
  j["completeness"] = d.completeness ? Json(to_string(*d.completeness)) : Json(nullptr);
  if (d.certificate) j["certificate"] = certificate_to_json(*d.certificate, include_trace);
  return j;
}

Json enumeration_to_json(const EnumeratedGroup& g) {
  Json j;
  j["dim"] = g.dim;
  j["order"] = g.order();
  Json hist = Json::array();
  for (const auto& [len, count] : g.length_histogram()) hist.push_back({{"length", len}, {"count", count}});
  j["length_histogram"] = std::move(hist);
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace crosscap
