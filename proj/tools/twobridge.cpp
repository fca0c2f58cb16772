#include "twobridge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace twobridge;
using namespace twobridge::cli;

namespace {

int analyze(const std::string &fraction, const std::string &cf, const std::string &i1, const std::string &format, bool timing) {
  std::vector<AnalyzeInput> given;
  if (!fraction.empty()) given.push_back({"fraction", fraction});
  if (!cf.empty()) given.push_back({"cf", cf});
  if (!i1.empty()) given.push_back({"i1", i1});
  if (given.size() != 1) {
    std::cerr << "error: give exactly one of --fraction, --cf, --i1\n";
    return 2;
  }
  json r;
  try {
    r = knot_report(given[0], timing);
  } catch (const domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error &e) { // malformed integers from the bignum parser
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (format == "json")
    std::cout << r.dump(2) << "\n";
  else
    std::cout << report_text(r);
  return 0;
}

int table(long max_p, const std::string &out_path, const std::string &format, unsigned parallel) {
  if (max_p < 3) {
    std::cerr << "error: --max-p must be at least 3\n";
    return 2;
  }
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
  }
  std::ostream &os = out_path.empty() ? std::cout : file;
  std::vector<json> recs = table_records(max_p, parallel);
  if (format == "csv") os << csv_header() << "\n";
  for (auto &r : recs) {
    if (format == "csv")
      os << csv_rows(r);
    else
      os << r.dump() << "\n";
  }
  os.flush();
  if (!os) {
    std::cerr << "error: write failed\n";
    return 2;
  }
  if (!out_path.empty()) std::cerr << recs.size() << " records written to " << out_path << "\n";
  return 0;
}

int verify(long samples, std::uint64_t seed) {
  if (samples < 1) {
    std::cerr << "error: --samples must be at least 1\n";
    return 2;
  }
  VerifyResult v = run_verify(samples, seed);
  for (auto &s : v.suites)
    std::cout << s.name << ": " << s.passed << " passed, " << s.failed << " failed\n";
  if (v.ok()) {
    std::cout << "all suites pass\n";
    return 0;
  }
  std::cout << "FAILED " << v.failure << "\ncounterexample: analyze --i1 \"" << *v.counterexample << "\"\n";
  return 1;
}

int oracle_eta(const std::string &i1, const std::string &strip_path) {
  try {
    StripDiagram d;
    if (!strip_path.empty()) {
      std::ifstream in(strip_path);
      if (!in) {
        std::cerr << "error: cannot read " << strip_path << "\n";
        return 2;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      d = parse_strip(ss.str());
    } else if (!i1.empty()) {
      I1Presentation p = parse_i1(i1);
      d = build_strip(p);
      std::cout << "# " << p.str() << "\n";
    } else {
      std::cerr << "error: give --i1 or --strip\n";
      return 2;
    }
    LabeledStrip s = label_strip(d);
    std::cout << print_strip(d);
    std::cout << "# arc label dir\n";
    for (std::size_t i = 0; i < s.label.size(); ++i) std::cout << "label " << i << " " << s.label[i] << " " << s.dir[i] << "\n";
    std::cout << "# over under d eps box\n";
    for (auto &c : strip_census(s))
      std::cout << "census " << c.over << " " << c.under << " " << c.d << " " << (c.eps > 0 ? "+1" : "-1") << " " << c.box << "\n";
    std::cout << "eta " << eta_from_strip(s).str() << "\n";
  } catch (const domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Equivariant concordance invariants of 2-bridge knots"};
  app.require_subcommand(1);

  std::string fraction, cf, i1, format = "json";
  bool timing = false;
  auto *an = app.add_subcommand("analyze", "full report for one knot");
  an->add_option("--fraction", fraction, "p/q with p odd");
  an->add_option("--cf", cf, "even continued fraction, e.g. 2,-2");
  an->add_option("--i1", i1, "presentation a1,..,an;c1,..,cn");
  an->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  an->add_flag("--timing", timing, "add wall-clock time to the report");

  long max_p = 0;
  std::string out_path, tformat = "jsonl";
  unsigned parallel = 1;
  auto *tb = app.add_subcommand("table", "one record per 2-bridge knot class with p <= N");
  tb->add_option("--max-p", max_p)->required();
  tb->add_option("--out", out_path);
  tb->add_option("--format", tformat)->check(CLI::IsMember({"jsonl", "csv"}));
  tb->add_option("--parallel", parallel)->check(CLI::Range(1u, 256u));

  long samples = 500;
  std::uint64_t seed = 1;
  auto *vf = app.add_subcommand("verify", "randomized cross-checks of every module");
  vf->add_option("--samples", samples);
  vf->add_option("--seed", seed);

  std::string oi1, strip_path;
  auto *orc = app.add_subcommand("oracle", "independent oracles");
  orc->require_subcommand(1);
  auto *eta = orc->add_subcommand("eta", "labeled strip census and eta");
  eta->add_option("--i1", oi1);
  eta->add_option("--strip", strip_path, "strip-code file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*an) return analyze(fraction, cf, i1, format, timing);
    if (*tb) return table(max_p, out_path, tformat, parallel);
    if (*vf) return verify(samples, seed);
    if (*eta) return oracle_eta(oi1, strip_path);
  } catch (const invariant_violation &e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
