#include "nppc/error.hpp"
#include "nppc/instance.hpp"

namespace nppc {

namespace {

void reject_floats(const Json& doc, const std::string& where) {
  if (doc.is_number_float())
    fail(Errc::schema_violation,
         "floating-point number in canonical document at " + where);
  if (doc.is_binary() || doc.is_discarded())
    fail(Errc::schema_violation, "non-JSON value at " + where);
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items())
      reject_floats(value, where + "." + key);
  } else if (doc.is_array()) {
    for (size_t i = 0; i < doc.size(); ++i)
      reject_floats(doc[i], where + "[" + std::to_string(i) + "]");
  }
}

}  // namespace

std::string canonical_dump(const Json& doc) {
  reject_floats(doc, "$");
  // nlohmann's default object type is std::map, so keys serialize in
  // lexicographic order; dump() without indent emits no whitespace.
  return doc.dump();
}

Json canonical_parse_json(const std::string& bytes) {
  Json doc = Json::parse(bytes, nullptr, false);
  if (doc.is_discarded())
    fail(Errc::parse_error, "document is not valid JSON");
  return doc;
}

}  // namespace nppc
