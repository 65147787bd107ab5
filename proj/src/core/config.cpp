#include "nppc/config.hpp"

#include "nppc/error.hpp"

namespace nppc {

namespace {

const ConfigValue& lookup(const GenConfig& cfg, const std::string& name) {
  auto it = cfg.params.find(name);
  if (it == cfg.params.end())
    fail(Errc::config_mismatch, "missing config parameter: " + name);
  return it->second;
}

}  // namespace

bool GenConfig::has(const std::string& name) const {
  return params.count(name) != 0;
}

int64_t GenConfig::geti(const std::string& name) const {
  const auto& v = lookup(*this, name);
  if (const auto* i = std::get_if<int64_t>(&v)) return *i;
  fail(Errc::config_mismatch, "config parameter is not an integer: " + name);
}

bool GenConfig::getb(const std::string& name) const {
  const auto& v = lookup(*this, name);
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  fail(Errc::config_mismatch, "config parameter is not a bool: " + name);
}

Rational GenConfig::getr(const std::string& name) const {
  const auto& v = lookup(*this, name);
  if (const auto* r = std::get_if<Rational>(&v)) return *r;
  if (const auto* i = std::get_if<int64_t>(&v)) return Rational{*i, 1};
  fail(Errc::config_mismatch, "config parameter is not a probability: " + name);
}

Json config_to_json(const GenConfig& cfg) {
  Json doc = Json::object();
  for (const auto& [name, value] : cfg.params) {
    if (const auto* i = std::get_if<int64_t>(&value)) {
      doc[name] = *i;
    } else if (const auto* b = std::get_if<bool>(&value)) {
      doc[name] = *b;
    } else {
      doc[name] = as_double(std::get<Rational>(value));
    }
  }
  return doc;
}

GenConfig config_from_json(const Json& doc) {
  if (!doc.is_object()) fail(Errc::parse_error, "config must be a JSON object");
  GenConfig cfg;
  for (const auto& [name, value] : doc.items()) {
    if (value.is_boolean()) {
      cfg.params[name] = value.get<bool>();
    } else if (value.is_number_integer() || value.is_number_unsigned()) {
      cfg.params[name] = value.get<int64_t>();
    } else if (value.is_number_float()) {
      cfg.params[name] = rational_from_decimal(value.get<double>());
    } else if (value.is_string()) {
      // "3/10" form, kept exact.
      const std::string s = value.get<std::string>();
      auto slash = s.find('/');
      if (slash == std::string::npos)
        fail(Errc::parse_error, "config parameter " + name +
                                    " is not a number or rational: " + s);
      try {
        int64_t num = std::stoll(s.substr(0, slash));
        int64_t den = std::stoll(s.substr(slash + 1));
        cfg.params[name] = make_rational(num, den);
      } catch (const std::logic_error&) {
        fail(Errc::parse_error, "bad rational literal: " + s);
      }
    } else {
      fail(Errc::parse_error, "config parameter " + name + " has bad type");
    }
  }
  return cfg;
}

std::string config_to_string(const GenConfig& cfg) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : cfg.params) {
    if (!first) out += ", ";
    first = false;
    out += name + "=";
    if (const auto* i = std::get_if<int64_t>(&value)) {
      out += std::to_string(*i);
    } else if (const auto* b = std::get_if<bool>(&value)) {
      out += *b ? "true" : "false";
    } else {
      out += to_string(std::get<Rational>(value));
    }
  }
  return out + "}";
}

}  // namespace nppc
