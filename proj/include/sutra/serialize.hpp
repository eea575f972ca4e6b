#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sutra/error.hpp"
#include "sutra/numeral.hpp"
#include "sutra/trace.hpp"

// Canonical trace JSON. nlohmann::json objects are std::map backed, so keys
// come out sorted; dump() without indentation emits no insignificant
// whitespace and leaves UTF-8 unescaped. Digit values travel as strings,
// counts and indices as integers.

namespace sutra {

using Json = nlohmann::json;

class FormatError : public Error {
 public:
  using Error::Error;
};

inline std::string canonicalDump(const Json& j) { return j.dump(); }

namespace detail {

template <typename Enum, std::size_t N>
Enum enumFrom(const Json& j, const std::pair<Enum, std::string_view> (&table)[N], std::string_view what) {
  const auto& s = j.get_ref<const std::string&>();
  for (const auto& [value, name] : table) {
    if (name == s) return value;
  }
  throw FormatError("unknown " + std::string(what) + " '" + s + "'");
}

inline constexpr std::pair<Pane, std::string_view> kPanes[] = {{Pane::Traditional, "traditional"},
                                                               {Pane::Vedic, "vedic"}};
inline constexpr std::pair<BlockKind, std::string_view> kBlockKinds[] = {{BlockKind::OperandRow, "operand-row"},
                                                                         {BlockKind::WorkRow, "work-row"},
                                                                         {BlockKind::ResultRow, "result-row"},
                                                                         {BlockKind::Guide, "guide"}};
inline constexpr std::pair<CarryKind, std::string_view> kCarryKinds[] = {{CarryKind::Carry, "carry"},
                                                                         {CarryKind::Borrow, "borrow"}};

inline ExactValue exactFrom(const Json& j) {
  const auto& s = j.get_ref<const std::string&>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw FormatError("expected a digit string, got '" + s + "'");
  }
  return ExactValue(s);
}

}  // namespace detail

// to_json / from_json overloads, found by ADL --------------------------------

inline void to_json(Json& j, const DigitString& d) { j = d.str(); }
inline void from_json(const Json& j, DigitString& d) {
  try {
    d = parseOperand(j.get_ref<const std::string&>());
  } catch (const ParseError& e) {
    throw FormatError(e.what());
  }
}

inline void to_json(Json& j, Pane p) { j = std::string(toString(p)); }
inline void from_json(const Json& j, Pane& p) { p = detail::enumFrom(j, detail::kPanes, "pane"); }

inline void to_json(Json& j, const CellRef& c) { j = Json{{"pane", c.pane}, {"row", c.row}, {"col", c.col}}; }
inline void from_json(const Json& j, CellRef& c) {
  j.at("pane").get_to(c.pane);
  j.at("row").get_to(c.row);
  j.at("col").get_to(c.col);
}

inline void to_json(Json& j, const Block& b) {
  j = Json{{"kind", std::string(toString(b.kind))},
           {"rowRange", Json{{"begin", b.rowBegin}, {"end", b.rowEnd}}},
           {"label", b.label}};
}
inline void from_json(const Json& j, Block& b) {
  b.kind = detail::enumFrom(j.at("kind"), detail::kBlockKinds, "block kind");
  j.at("rowRange").at("begin").get_to(b.rowBegin);
  j.at("rowRange").at("end").get_to(b.rowEnd);
  j.at("label").get_to(b.label);
}

inline void to_json(Json& j, const GridSpec& g) {
  j = Json{{"rows", g.rows}, {"cols", g.cols}, {"blocks", g.blocks}};
}
inline void from_json(const Json& j, GridSpec& g) {
  j.at("rows").get_to(g.rows);
  j.at("cols").get_to(g.cols);
  j.at("blocks").get_to(g.blocks);
}

inline void to_json(Json& j, const BasicOp& op) {
  Json operands = Json::array();
  for (const auto& v : op.operands) operands.push_back(v.str());
  j = Json{{"expression", op.expression}, {"operands", operands}, {"result", op.result.str()}};
}
inline void from_json(const Json& j, BasicOp& op) {
  j.at("expression").get_to(op.expression);
  op.operands.clear();
  for (const auto& v : j.at("operands")) op.operands.push_back(detail::exactFrom(v));
  op.result = detail::exactFrom(j.at("result"));
}

inline void to_json(Json& j, const CellWrite& w) { j = Json{{"cell", w.cell}, {"token", w.token}}; }
inline void from_json(const Json& j, CellWrite& w) {
  j.at("cell").get_to(w.cell);
  j.at("token").get_to(w.token);
}

inline void to_json(Json& j, const CarryNote& c) {
  j = Json{{"value", c.value.str()}, {"targetCol", c.targetCol}, {"kind", std::string(toString(c.kind))}};
}
inline void from_json(const Json& j, CarryNote& c) {
  c.value = detail::exactFrom(j.at("value"));
  j.at("targetCol").get_to(c.targetCol);
  c.kind = detail::enumFrom(j.at("kind"), detail::kCarryKinds, "carry kind");
}

inline void to_json(Json& j, const MainStep& s) {
  j = Json{{"index", s.index},
           {"description", s.description},
           {"highlights", s.highlights},
           {"writes", s.writes},
           {"subOps", s.subOps},
           {"carryNote", s.carryNote ? Json(*s.carryNote) : Json(nullptr)}};
}
inline void from_json(const Json& j, MainStep& s) {
  j.at("index").get_to(s.index);
  j.at("description").get_to(s.description);
  j.at("highlights").get_to(s.highlights);
  j.at("writes").get_to(s.writes);
  j.at("subOps").get_to(s.subOps);
  const auto& carry = j.at("carryNote");
  s.carryNote = carry.is_null() ? std::nullopt : std::optional<CarryNote>(carry.get<CarryNote>());
}

inline void to_json(Json& j, const Metrics& m) {
  j = Json{{"digitMultiplications", m.digitMultiplications},
           {"digitAdditions", m.digitAdditions},
           {"carries", m.carries},
           {"mainSteps", m.mainSteps},
           {"basicOps", m.basicOps}};
}
inline void from_json(const Json& j, Metrics& m) {
  j.at("digitMultiplications").get_to(m.digitMultiplications);
  j.at("digitAdditions").get_to(m.digitAdditions);
  j.at("carries").get_to(m.carries);
  j.at("mainSteps").get_to(m.mainSteps);
  j.at("basicOps").get_to(m.basicOps);
}

// "remainder" is present only for square-root traces.
inline void to_json(Json& j, const Trace& t) {
  Json layouts = Json::object();
  for (const auto& [pane, spec] : t.layouts) layouts[std::string(toString(pane))] = spec;
  j = Json{{"methodId", t.methodId},
           {"operands", t.operands},
           {"layouts", layouts},
           {"steps", t.steps},
           {"result", t.result},
           {"metrics", t.metrics},
           {"latentDisplay", std::string(toString(t.latentDisplay))}};
  if (t.remainder) j["remainder"] = t.remainder->str();
}
inline void from_json(const Json& j, Trace& t) {
  j.at("methodId").get_to(t.methodId);
  j.at("operands").get_to(t.operands);
  t.layouts.clear();
  for (const auto& [name, spec] : j.at("layouts").items()) {
    t.layouts[detail::enumFrom(Json(name), detail::kPanes, "pane")] = spec.get<GridSpec>();
  }
  j.at("steps").get_to(t.steps);
  j.at("result").get_to(t.result);
  j.at("metrics").get_to(t.metrics);
  auto display = parseLatentDisplay(j.at("latentDisplay").get<std::string>());
  if (!display) throw FormatError("unknown latentDisplay");
  t.latentDisplay = *display;
  t.remainder = j.contains("remainder") ? std::optional<ExactValue>(detail::exactFrom(j.at("remainder")))
                                        : std::nullopt;
}

inline void to_json(Json& j, const Warning& w) {
  j = Json{{"code", w.code}, {"message", w.message}, {"suggestion", w.suggestion}, {"blocking", w.blocking}};
}
inline void from_json(const Json& j, Warning& w) {
  j.at("code").get_to(w.code);
  j.at("message").get_to(w.message);
  j.at("suggestion").get_to(w.suggestion);
  j.at("blocking").get_to(w.blocking);
}

inline std::string canonicalSerialize(const Trace& t) { return canonicalDump(Json(t)); }

// Inverse of canonicalSerialize. Any malformed input surfaces as FormatError.
inline Trace parseTrace(std::string_view bytes) {
  try {
    return Json::parse(bytes).get<Trace>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed trace JSON: ") + e.what());
  }
}

}  // namespace sutra
