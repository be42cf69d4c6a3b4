#pragma once

#include "weightcat/categorio.hpp"
#include "weightcat/extcoh.hpp"
#include "weightcat/paperlab.hpp"

#include <json.hpp>

#include <string>

namespace weightcat {

using Json = nlohmann::json;  // std::map backed: keys come out sorted

inline constexpr const char* kSchema = "weightcat/1";

// {"schema": "weightcat/1", "command": ..., "result": body}
Json envelope(const std::string& command, Json body);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);
Json to_json(const MembershipReport& m);
Json to_json(const ConstraintSystem& s);
Json to_json(const QuotientDimension& q);
Json to_json(const LemmaReport& r);
LemmaReport lemma_from_json(const Json& j);

std::string render_text(const Verdict& v);
std::string render_text(const MembershipReport& m);
std::string render_text(const ConstraintSystem& s);
std::string render_text(const LemmaReport& r);

}  // namespace weightcat
