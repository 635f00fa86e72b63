#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/spec_io.hpp"
#include "hopfcheck/suites.hpp"
#include "hopfcheck/zoo.hpp"
#include "json.hpp"

namespace hopf::cli {

namespace {

HopfPtr load(const RunConfig& c) {
  if (c.algebra.has_value() == c.spec.has_value()) throw SpecError(0, "give exactly one of --algebra and --spec");
  std::optional<RingSpec> ring;
  if (c.ring) ring = RingSpec::parse(*c.ring);
  if (c.spec) return parse_spec_file(*c.spec, {ring, c.max_degree});
  const int n = c.max_degree.value_or(default_max_degree(*c.algebra));
  return make_zoo(*c.algebra, ring.value_or(RingSpec::integers()), n);
}

std::vector<std::string> selected_suites(const RunConfig& c) {
  std::vector<std::string> ids;
  if (c.suites.empty()) {
    for (const auto& s : suite_catalogue()) ids.push_back(s.id);
    return ids;
  }
  for (const auto& id : c.suites) {
    if (!find_suite(id)) throw SpecError(0, "unknown suite '" + id + "' (see list-suites)");
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  return ids;
}

// Writes to --out when given, else to `out`.
int emit(const RunConfig& c, const std::string& text, std::ostream& out, std::ostream& err) {
  if (!c.out) {
    out << text;
    return kOk;
  }
  std::ofstream f(*c.out, std::ios::binary);
  if (!f) {
    err << "error: cannot write '" << *c.out << "'\n";
    return kConfigError;
  }
  f << text;
  return kOk;
}

template <class F>
int guarded(std::ostream& err, F f) {
  try {
    return f();
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ResourceGuardError& e) {
    err << "error: resource guard: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kConfigError;
}

}  // namespace

int default_max_degree(const std::string& selector) {
  const std::string name = selector.substr(0, selector.find(':'));
  if (name == "fqsym") return 4;
  return 5;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (c.format != "text" && c.format != "json") throw SpecError(0, "--format must be text or json");
    if (c.p < 1) throw SpecError(0, "--p must be positive");
    const auto ids = selected_suites(c);
    const HopfPtr h = load(c);
    SuiteOptions options;
    options.p = c.p;
    options.seed = c.seed;

    std::vector<VerificationReport> reports;
    for (const auto& id : ids) reports.push_back(run_suite(id, *h, options));
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();
    const int code = ok ? kOk : kCheckFailed;

    std::string text;
    if (c.format == "json") {
      nlohmann::ordered_json j;
      j["algebra"] = h->name();
      j["ring"] = h->ring().to_string();
      j["maxdeg"] = h->max_degree();
      j["p"] = c.p;
      j["seed"] = c.seed;
      j["ok"] = ok;
      j["exit_code"] = code;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(nlohmann::ordered_json::parse(r.to_json()));
      j["reports"] = arr;
      text = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "algebra " << h->name() << " over " << h->ring().to_string() << ", maxdeg " << h->max_degree()
         << ", p = " << c.p << "\n";
      std::size_t fails = 0;
      for (const auto& r : reports) {
        os << r.to_text();
        fails += r.count(Status::Fail);
      }
      os << (ok ? "OK" : "FAILED") << ": " << reports.size() << " suites, " << fails << " failing checks\n";
      text = os.str();
    }
    const int w = emit(c, text, out, err);
    return w == kOk ? code : w;
  });
}

int export_algebra(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return emit(c, export_spec(*load(c)), out, err); });
}

std::string list_suites() {
  std::ostringstream os;
  for (const auto& s : suite_catalogue()) os << s.id << '\t' << s.anchor << '\t' << s.summary << '\n';
  return os.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of antipode identities in graded Hopf algebras", "hopfcheck"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_source = [&](CLI::App* sub) {
    auto* a = sub->add_option("--algebra", c.algebra, "zoo algebra: abc, tensor[:r], shuffle[:r], fqsym, taft[:n]");
    auto* s = sub->add_option("--spec", c.spec, "algebra-spec file");
    a->excludes(s);
    sub->add_option("--ring", c.ring, "Z, Q, Z/m, Z[q]/(c0,...,1)");
    sub->add_option("--maxdeg", c.max_degree, "truncation degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", c.out, "write the output to this file");
  };

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_source(verify);
  verify->add_option("--suite", c.suites, "suite id (repeatable; default: all)");
  verify->add_option("--p", c.p, "the exponent-lowering parameter p")->check(CLI::PositiveNumber);
  verify->add_option("--seed", c.seed, "seed for randomized combination checks");
  verify->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* exp = app.add_subcommand("export", "print an algebra in spec-file form");
  add_source(exp);

  app.add_subcommand("list-suites", "list suite ids with their anchors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfigError;
  }

  if (verify->parsed()) return run(c, out, err);
  if (exp->parsed()) return export_algebra(c, out, err);
  out << list_suites();
  return kOk;
}

}  // namespace hopf::cli
