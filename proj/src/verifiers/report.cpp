#include <stdexcept>

#include <json.hpp>

#include "twopoint/verifiers.hpp"

namespace twopoint
{

using Json = nlohmann::ordered_json;

char const *to_string(Provenance p)
{
  switch (p) {
  case Provenance::paper:
    return "PAPER";
  case Provenance::trivial:
    return "TRIVIAL";
  case Provenance::derived:
    return "DERIVED";
  }
  return "DERIVED";
}

Provenance provenance_from_string(std::string const &s)
{
  if (s == "PAPER")
    return Provenance::paper;
  if (s == "TRIVIAL")
    return Provenance::trivial;
  if (s == "DERIVED")
    return Provenance::derived;
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

bool VerificationReport::pass() const
{
  for (auto const &c : claims) {
    if (!c.pass)
      return false;
  }
  return true;
}

void VerificationReport::param(std::string key, std::string value)
{
  params.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::add(std::string name, std::string expected, std::string actual,
                             Provenance provenance)
{
  bool ok = expected == actual;
  claims.push_back({std::move(name), std::move(expected), std::move(actual), provenance, ok});
}

void VerificationReport::add(std::string name, std::uint64_t expected, std::uint64_t actual,
                             Provenance provenance)
{
  add(std::move(name), std::to_string(expected), std::to_string(actual), provenance);
}

void VerificationReport::add_true(std::string name, bool holds, Provenance provenance)
{
  add(std::move(name), "true", holds ? "true" : "false", provenance);
}

namespace
{

Json to_json_value(VerificationReport const &report)
{
  Json params = Json::object();
  for (auto const &[k, v] : report.params)
    params[k] = v;
  Json claims = Json::array();
  for (auto const &c : report.claims) {
    claims.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"provenance", to_string(c.provenance)},
                      {"pass", c.pass}});
  }
  return {{"check", report.check},
          {"params", std::move(params)},
          {"claims", std::move(claims)},
          {"elapsed_ms", report.elapsed_ms},
          {"pass", report.pass()}};
}

} // namespace

std::string report_to_json(VerificationReport const &report, int indent)
{
  return to_json_value(report).dump(indent);
}

std::string reports_to_json(std::vector<VerificationReport> const &reports, int indent)
{
  Json all = Json::array();
  for (auto const &r : reports)
    all.push_back(to_json_value(r));
  return all.dump(indent);
}

VerificationReport report_from_json(std::string_view text)
{
  try {
    Json j = Json::parse(text);
    VerificationReport r;
    r.check = j.at("check").get<std::string>();
    for (auto const &[k, v] : j.at("params").items())
      r.param(k, v.get<std::string>());
    for (auto const &c : j.at("claims")) {
      r.claims.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                          c.at("actual").get<std::string>(),
                          provenance_from_string(c.at("provenance").get<std::string>()),
                          c.at("pass").get<bool>()});
    }
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    if (j.at("pass").get<bool>() != r.pass())
      throw std::invalid_argument("report: overall pass disagrees with its claims");
    return r;
  } catch (Json::exception const &e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
}

std::string report_to_text(VerificationReport const &report)
{
  std::string out = report.check;
  if (!report.params.empty()) {
    out += " (";
    for (std::size_t i = 0; i < report.params.size(); ++i)
      out += (i ? ", " : "") + report.params[i].first + "=" + report.params[i].second;
    out += ")";
  }
  out += "\n";
  for (auto const &c : report.claims) {
    out += c.pass ? "  ✓ " : "  ✗ ";
    out += c.name + ": expected " + c.expected + ", got " + c.actual + " [" +
           to_string(c.provenance) + "]\n";
  }
  out += report.pass() ? "PASS" : "FAIL";
  out += " in " + std::to_string(report.elapsed_ms) + " ms\n";
  return out;
}

} // namespace twopoint
