#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tvb/document.hpp"

namespace tvbkit {

using nlohmann::json;

inline constexpr const char* kSchema = "tvbkit-report/1";

struct Options {
  bool force = false;
  std::optional<tvb::PEClass> cls;
  std::optional<std::vector<int>> flag;
  std::string with;
};

struct Report {
  json result = json::object();
  std::string text;
  std::string certificate = "none";  // Sym-degree-1 certificate of the bundle the command ran on
  std::vector<std::string> warnings;
};

Report run_validate(const tvb::BundleDocument& doc);
Report run_classify(const tvb::BundleDocument& doc);
Report run_eff(const tvb::BundleDocument& doc, const Options& opt);
Report run_nef(const tvb::BundleDocument& doc, const Options& opt);
Report run_bpf(const tvb::BundleDocument& doc, const Options& opt);
Report run_hilbert_nef(const tvb::BundleDocument& doc, const Options& opt);
Report run_fujita_scan(const tvb::BundleDocument& doc, const Options& opt);
Report run_nobody(const tvb::BundleDocument& doc, const Options& opt);
Report run_anticanonical(const tvb::BundleDocument& doc, const Options& opt);
Report run_kaneyama(const tvb::BundleDocument& doc);
Report run_tangent(const tvb::BundleDocument& doc);
Report run_extend(const tvb::BundleDocument& doc, const Options& opt);

// Exact numbers are emitted as decimal strings.
json to_json(const tvb::Integer& z);
json to_json(const tvb::Rational& q);
json to_json(const tvb::ZVector& v);
json to_json(const tvb::QVector& v);
json to_json(const tvb::ZMatrix& m);
json to_json(const tvb::PEClass& c);
json to_json(const tvb::QCone& c);

// Counts and indices become decimal strings too, so the whole report has one number encoding.
json stringify_numbers(json j);

}  // namespace tvbkit
