// tvbkit: command line front end for toric vector bundle documents.
//
// exit codes: 0 success, 1 internal error, 2 invalid input, 3 certificate missing (retry with --force)

#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "report.hpp"

using namespace tvbkit;

namespace {

int emit_error(bool as_json, const std::string& command, const std::string& kind, const std::string& msg, int code) {
  if (as_json) {
    json out{{"schema", kSchema}, {"command", command}, {"error", json{{"kind", kind}, {"message", msg}}}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cerr << "tvbkit " << command << ": " << kind << ": " << msg << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for toric vector bundles"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string file;
  std::string cls_text;
  std::vector<int> flag;
  Options opt;

  app.add_flag("--json", as_json, "Emit the versioned JSON report");
  app.add_flag("--force", opt.force, "Proceed when no certificate holds");

  using Runner = std::function<Report()>;
  std::map<CLI::App*, std::pair<std::string, Runner>> commands;
  tvb::BundleDocument doc;

  auto add = [&](const std::string& name, const std::string& help, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", file, "Bundle document")->required()->check(CLI::ExistingFile);
    commands[sub] = {name, std::move(run)};
    return sub;
  };

  add("validate", "Validate the document and print the class basis", [&] { return run_validate(doc); });
  add("classify", "Sparse, uniform, CI, monomial and coloop-cover tests", [&] { return run_classify(doc); });
  add("eff", "Effective monoid and pseudo-effective cone", [&] { return run_eff(doc, opt); })
      ->add_option("--class", cls_text, "Class alpha;beta to test");
  add("nef", "Nef cone", [&] { return run_nef(doc, opt); })->add_option("--class", cls_text, "Class alpha;beta to test");
  add("bpf", "Basepoint freeness of a class", [&] { return run_bpf(doc, opt); })
      ->add_option("--class", cls_text, "Class alpha;beta")
      ->required();
  add("hilbert-nef", "Hilbert basis of the nef cone", [&] { return run_hilbert_nef(doc, opt); });
  add("fujita-scan", "Nef Hilbert basis elements that are not basepoint free", [&] { return run_fujita_scan(doc, opt); });
  CLI::App* nob = add("nobody", "Newton-Okounkov body of a class", [&] { return run_nobody(doc, opt); });
  nob->add_option("--flag", flag, "Basis order i1,i2,... defining the flag of flats")->delimiter(',');
  nob->add_option("--class", cls_text, "Class alpha;beta (default 0;1)");
  add("anticanonical", "Anticanonical class and the Fano test", [&] { return run_anticanonical(doc, opt); });
  add("kaneyama", "Closed-form nef/ample test for a diagonal diagram", [&] { return run_kaneyama(doc); });
  add("tangent", "Tangent bundle of the fan (only [fan] is read)", [&] { return run_tangent(doc); });
  add("extend", "Check an extension by extra columns", [&] { return run_extend(doc, opt); })
      ->add_option("--with", opt.with, "Document of the extended bundle")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors count as invalid input; --help exits 0
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string command;
  Runner run;
  for (auto& [sub, entry] : commands)
    if (sub->parsed()) {
      command = entry.first;
      run = entry.second;
    }

  try {
    if (!cls_text.empty()) opt.cls = tvb::parse_class(cls_text);
    if (!flag.empty()) opt.flag = flag;
    doc = tvb::read_document(file);
    Report r = run();
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
    if (as_json) {
      json out{{"schema", kSchema},
               {"command", command},
               {"certificate", r.certificate},
               {"warnings", r.warnings},
               {"result", stringify_numbers(r.result)}};
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << r.text;
    }
  } catch (const tvb::CertificateMissing& e) {
    return emit_error(as_json, command, "certificate-missing", e.what(), 3);
  } catch (const tvb::InvalidInput& e) {
    return emit_error(as_json, command, "invalid-input", e.what(), 2);
  } catch (const std::exception& e) {
    return emit_error(as_json, command, "internal", e.what(), 1);
  }
  return 0;
}
