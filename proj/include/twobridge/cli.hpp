#pragma once

// Report assembly, table enumeration and the verify harness behind the command-line tool.

#include "json.hpp"
#include "random.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

namespace twobridge::cli {

struct AnalyzeInput {
  std::string kind; // fraction | cf | i1
  std::string text;
};

// Both inversions of the knot named by the input. Throws domain_error on invalid input.
inline InversionPair resolve_input(const AnalyzeInput &in) {
  if (in.kind == "fraction") {
    auto slash = in.text.find('/');
    if (slash == std::string::npos) throw domain_error("expected p/q");
    Fraction raw_p = Fraction::parse(in.text.substr(0, slash)), raw_q = Fraction::parse(in.text.substr(slash + 1));
    if (boost::multiprecision::gcd(raw_p.p, raw_q.p) != 1) throw domain_error(in.text + " is not in lowest terms");
    Fraction f = Fraction::parse(in.text);
    if (f.is_infinite()) throw domain_error("fraction has zero denominator");
    return inversions_from_fraction(f.p, f.q);
  }
  if (in.kind == "cf") {
    std::vector<Int> e = parse_cf(in.text);
    Fraction f = eval_cf(e);
    presentation_from_even_cf(e); // validates
    return inversions_from_cf(f, EvenCF{e, f.q});
  }
  if (in.kind == "i1") {
    I1Presentation p = parse_i1(in.text);
    Fraction f = knot_fraction(p);
    return inversions_from_cf(f, EvenCF{knot_entries(p), f.q});
  }
  throw domain_error("unknown input kind " + in.kind);
}

inline json knot_report(const AnalyzeInput &in, bool timing = false) {
  auto t0 = std::chrono::steady_clock::now();
  InversionPair inv = resolve_input(in);
  json r;
  r["schema_version"] = schema_version;
  r["input"] = {{"kind", in.kind}, {"value", in.text}};
  r["fraction"] = inv.source.str();
  r["even_cf"] = cf_str(inv.cf.entries);
  r["strong_inversions"] = inv.inv2 ? 2 : 1;
  json list = json::array();
  json a = presentation_report(inv.inv1);
  a["name"] = "inv1";
  list.push_back(std::move(a));
  if (inv.inv2) {
    json b = presentation_report(*inv.inv2);
    b["name"] = "inv2";
    list.push_back(std::move(b));
  }
  r["inversions"] = std::move(list);
  if (timing)
    r["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string jstr(const json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline std::string report_text(const json &r) {
  std::ostringstream os;
  os << "input: " << jstr(r["input"]["kind"]) << " " << jstr(r["input"]["value"]) << "\n";
  os << "knot: K(" << jstr(r["fraction"]) << ")  even CF " << jstr(r["even_cf"]) << "  strong inversions: "
     << r["strong_inversions"].dump() << "\n";
  for (auto &p : r["inversions"]) {
    os << jstr(p["name"]) << ": " << jstr(p["presentation"]) << "  (knot fraction " << jstr(p["knot_fraction"]) << ")\n";
    os << "  butterfly polynomial: " << jstr(p["butterfly_polynomial"]) << "\n";
    os << "  axis linking: K " << p["axis_linking"]["K"].dump() << ", aK " << p["axis_linking"]["aK"].dump() << "\n";
    const json &s = p["slice_certificate"];
    os << "  slice: " << jstr(s["verdict"]);
    if (!s["witness"].is_null()) {
      os << " via " << jstr(s["witness"]["kind"]);
      if (s["witness"].contains("which")) os << " " << jstr(s["witness"]["which"]) << " = " << s["witness"]["value"].dump();
    }
    os << "\n";
    const json &n = p["nullity"];
    os << "  nullity: " << n["nullity"].dump() << "  |H1| = " << n["h1_order"].dump() << "  p''/q'' = "
       << jstr(n["butterfly_fraction"]) << "\n";
    os << "  conway K: " << jstr(p["conway_knot"]) << "  det " << p["det_knot"].dump() << "\n";
    os << "  conway L^_b: " << jstr(p["conway_lhat"]) << "  det " << p["order_certificate"]["det_lhat"].dump() << "\n";
    os << "  moth: (" << jstr(p["moth"]["num"]) << ")/(" << jstr(p["moth"]["den"]) << ")\n";
    os << "  order: " << jstr(p["order_certificate"]["verdict"]) << "\n";
  }
  if (r.contains("timing_ms")) os << "time: " << r["timing_ms"].dump() << " ms\n";
  return os.str();
}

// One (p, q) per class up to mirror image: q is the smallest even representative.
inline std::vector<std::pair<long, long>> table_inputs(long max_p) {
  std::vector<std::pair<long, long>> out;
  for (long p = 3; p <= max_p; p += 2)
    for (long q = 2; q < p; q += 2)
      if (std::gcd(p, q) == 1 && canonical_even_q(p, q) == q) out.push_back({p, q});
  return out;
}

inline json table_record(long p, long q) {
  AnalyzeInput in{"fraction", std::to_string(p) + "/" + std::to_string(q)};
  json r = knot_report(in);
  json rec;
  rec["schema_version"] = schema_version;
  rec["p"] = p;
  rec["q"] = q;
  rec["even_cf"] = r["even_cf"];
  rec["inversions"] = r["inversions"];
  return rec;
}

// Pure map over inputs; results land at their input index, so output order never depends on k.
template <class F>
auto parallel_map(std::size_t count, unsigned k, F f) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> out(count);
  std::vector<std::exception_ptr> errs(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  if (k <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < k; ++t) pool.emplace_back(work);
    for (auto &t : pool) t.join();
  }
  for (auto &e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

inline std::vector<json> table_records(long max_p, unsigned parallel) {
  if (max_p < 3) throw domain_error("--max-p must be at least 3");
  auto in = table_inputs(max_p);
  return parallel_map(in.size(), parallel, [&](std::size_t i) { return table_record(in[i].first, in[i].second); });
}

inline std::string csv_header() {
  return "p,q,inversion,presentation,butterfly_polynomial,lk_K,lk_aK,slice_verdict,h1_order,det_lhat,order_verdict";
}

inline std::string csv_quote(const std::string &s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

inline std::string csv_rows(const json &rec) {
  std::string out;
  for (auto &p : rec["inversions"]) {
    out += rec["p"].dump() + "," + rec["q"].dump() + "," + jstr(p["name"]) + "," + csv_quote(jstr(p["presentation"])) + "," +
           csv_quote(jstr(p["butterfly_polynomial"])) + "," + p["axis_linking"]["K"].dump() + "," +
           p["axis_linking"]["aK"].dump() + "," + jstr(p["slice_certificate"]["verdict"]) + "," +
           p["nullity"]["h1_order"].dump() + "," + p["order_certificate"]["det_lhat"].dump() + "," +
           jstr(p["order_certificate"]["verdict"]) + "\n";
  }
  return out;
}

struct SuiteCount {
  std::string name;
  long passed = 0, failed = 0;
};

struct VerifyResult {
  std::vector<SuiteCount> suites;
  std::optional<std::string> counterexample; // I1 spec of the first failure
  std::string failure;
  bool ok() const { return !counterexample; }
};

inline bool moth_is_admissible(const RationalFn &m) {
  return m.at_one() == 0 && rf_make(m.num().inverted(), m.den().inverted()) == m;
}

inline VerifyResult run_verify(long samples, std::uint64_t seed) {
  if (samples < 1) throw domain_error("--samples must be at least 1");
  using Check = std::function<bool(const I1Presentation &)>;
  std::vector<std::pair<std::string, Check>> checks = {
      {"oracle_equivalence",
       [](const I1Presentation &p) {
         StripDiagram d = build_strip(p);
         return parse_strip(print_strip(d)) == d && eta_from_strip(label_strip(d)) == butterfly_polynomial(p);
       }},
      {"eta_admissibility", [](const I1Presentation &p) { return lp_is_eta_admissible(butterfly_polynomial(p)); }},
      {"determinant",
       [](const I1Presentation &p) {
         return determinant(knot_diagram(p)) == boost::multiprecision::abs(knot_fraction(p).p) &&
                determinant(build_lhat_diagram(p)) == boost::multiprecision::abs(butterfly_fraction(p).p);
       }},
      {"reversal_identity",
       [](const I1Presentation &p) {
         NullityReport r = nullity_obstruction(p);
         Fraction k = knot_fraction(p);
         return r.reversed.p == k.p && mod_pos(k.q * r.reversed.q + 1, boost::multiprecision::abs(k.p)) == 0;
       }},
      {"moth_properties",
       [](const I1Presentation &p) {
         return moth_is_admissible(moth_polynomial(p)) && order_certificate(p).verdict == OrderVerdict::InfiniteOrder;
       }},
  };
  VerifyResult res;
  for (auto &c : checks) res.suites.push_back({c.first});
  res.suites.push_back({"b0_reduction"});
  auto fail = [&](SuiteCount &s, const I1Presentation &p, const std::string &why) {
    ++s.failed;
    if (!res.counterexample) {
      res.counterexample = p.spec();
      res.failure = s.name + (why.empty() ? "" : ": " + why);
    }
  };
  PresentationSampler gen(seed);
  for (long i = 0; i < samples; ++i) {
    I1Presentation p = gen.next();
    for (std::size_t k = 0; k < checks.size(); ++k) {
      SuiteCount &s = res.suites[k];
      try {
        if (checks[k].second(p))
          ++s.passed;
        else
          fail(s, p, "");
      } catch (const std::exception &e) {
        fail(s, p, e.what());
      }
    }
    auto [kn, kn1] = gen.next_padded();
    SuiteCount &s = res.suites.back();
    try {
      auto red = reduce_if_b_zero(kn);
      if (red && *red == kn1 && butterfly_polynomial(kn) == butterfly_polynomial(kn1) &&
          butterfly_fraction(kn) == butterfly_fraction(kn1))
        ++s.passed;
      else
        fail(s, kn, "");
    } catch (const std::exception &e) {
      fail(s, kn, e.what());
    }
  }
  return res;
}

} // namespace twobridge::cli
