#include <string>

#include "nppc/error.hpp"
#include "nppc/gym.hpp"
#include "nppc/instance.hpp"

// Full-record round-trip lives here rather than in core because both
// directions validate the payload against the problem's schema.

namespace nppc {

std::string canonical_serialize(const Instance& inst) {
  gym::validate_instance(inst);
  if (inst.level < 0) fail(Errc::schema_violation, "level must be >= 0");
  Json doc = Json::object();
  doc["problem"] = problem_name(inst.problem);
  doc["level"] = inst.level;
  doc["seed"] = inst.seed;
  doc["payload"] = inst.payload;
  return canonical_dump(doc);
}

Instance canonical_parse(const std::string& bytes) {
  Json doc = canonical_parse_json(bytes);
  if (!doc.is_object())
    fail(Errc::parse_error, "instance record must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "problem" && key != "level" && key != "seed" && key != "payload")
      fail(Errc::parse_error, "unexpected instance field '" + key + "'");
  }
  if (!doc.contains("problem") || !doc["problem"].is_string())
    fail(Errc::parse_error, "instance record needs a string 'problem'");
  if (!doc.contains("level") || !doc["level"].is_number_integer())
    fail(Errc::parse_error, "instance record needs an integer 'level'");
  if (!doc.contains("seed") ||
      !(doc["seed"].is_number_integer() || doc["seed"].is_number_unsigned()))
    fail(Errc::parse_error, "instance record needs an integer 'seed'");
  if (!doc.contains("payload"))
    fail(Errc::parse_error, "instance record needs a 'payload'");

  Instance inst;
  inst.problem = parse_problem(doc["problem"].get<std::string>());
  const int64_t level = doc["level"].get<int64_t>();
  if (level < 0) fail(Errc::parse_error, "level must be >= 0");
  inst.level = static_cast<int>(level);
  // is_number_integer() is also true for unsigned storage, where seeds
  // above INT64_MAX would misread as negative; only signed values can be.
  if (!doc["seed"].is_number_unsigned() && doc["seed"].get<int64_t>() < 0)
    fail(Errc::parse_error, "seed must be >= 0");
  inst.seed = doc["seed"].get<uint64_t>();
  inst.payload = doc["payload"];
  gym::validate_instance(inst);
  return inst;
}

}  // namespace nppc
