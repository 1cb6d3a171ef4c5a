#include "wsg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>

#include "wsg/curve.hpp"
#include "wsg/error.hpp"
#include "wsg/gaps.hpp"
#include "wsg/maximal_elements.hpp"
#include "wsg/membership.hpp"
#include "wsg/oracle.hpp"

namespace wsg::cli {

using json = nlohmann::ordered_json;
using std::int64_t;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInvalid = 2;

// JSON numbers beyond 2^53 lose precision in common readers.
json integer(int64_t v) {
  constexpr int64_t kSafe = int64_t{1} << 53;
  if (v > kSafe || v < -kSafe) return std::to_string(v);
  return v;
}

json vector_json(const PointVector& v) {
  json arr = json::array();
  for (auto c : v) arr.push_back(integer(c));
  return arr;
}

json vectors_json(const std::vector<PointVector>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(vector_json(v));
  return arr;
}

json params_json(const CurveParams& p) {
  json j;
  j["family"] = p.family == Family::X ? "X" : "Y";
  if (p.family == Family::X) {
    j["p"] = integer(p.p);
    j["a"] = integer(p.a);
    j["b"] = integer(p.b);
  } else {
    j["q"] = integer(p.q);
  }
  j["n"] = integer(p.n);
  j["s"] = integer(p.s);
  return j;
}

json derived_json(const DerivedConstants& dc) {
  json j;
  j["q"] = integer(dc.q);
  j["pb"] = integer(dc.pb);
  j["M"] = integer(dc.M);
  j["e"] = integer(dc.e);
  j["genus"] = integer(dc.genus);
  json gens = json::array();
  for (auto g : dc.generators()) gens.push_back(integer(g));
  j["generators"] = gens;
  j["frobenius"] = integer(dc.frobenius);
  j["canonical_degree"] = integer(dc.canonical_degree);
  j["max_m"] = integer(dc.max_m);
  return j;
}

struct Options {
  std::string family;
  int64_t p = 0, a = 0, b = 0, q = 0, n = 0, s = 0;
  int64_t m = 1;
  std::string format = "json";
  unsigned jobs = 1;
  std::string vector;
  bool pure = false;
  bool classical = false;
  std::optional<int64_t> box_sum;
};

void add_curve_flags(CLI::App* cmd, Options& o, bool with_m) {
  cmd->add_option("--family", o.family, "curve family")->required()->check(CLI::IsMember({"X", "Y"}));
  cmd->add_option("--p", o.p, "prime p (family X)");
  cmd->add_option("--a", o.a, "q = p^a (family X)");
  cmd->add_option("--b", o.b, "b, a divisor of a (family X)");
  cmd->add_option("--q", o.q, "prime power q (family Y)");
  cmd->add_option("--n", o.n, "odd n >= 3")->required();
  cmd->add_option("--s", o.s, "divisor s of (q^n+1)/(q+1)")->required();
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  if (with_m) {
    cmd->add_option("--m", o.m, "number of affine points")->required();
    cmd->add_option("--jobs", o.jobs, "worker threads for enumeration")->check(CLI::Range(1u, 256u));
  }
}

PointVector parse_vector(const std::string& text) {
  std::vector<int64_t> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw CLI::ValidationError("--vector", "not an integer: '" + item + "'");
    coords.push_back(v);
  }
  if (coords.empty()) throw CLI::ValidationError("--vector", "empty vector");
  return PointVector(std::move(coords));
}

json witness_json(const DerivedConstants& dc, int64_t m, std::size_t r, const MaximalElement& w) {
  json j;
  j["coordinate"] = r;
  j["kind"] = to_string(w.kind);
  if (w.kind == MaximalElement::Kind::Absolute || w.kind == MaximalElement::Kind::Relative) {
    j["i"] = integer(w.pair.i);
    j["j"] = integer(w.pair.j);
  }
  json ks = json::array();
  for (auto k : w.shifts) ks.push_back(integer(k));
  j["shifts"] = ks;
  j["vector"] = vector_json(realize(dc, m, w));
  return j;
}

void write_tsv_scalars(std::ostream& out, const json& payload) {
  for (const auto& [key, value] : payload.items()) {
    if (value.is_object() || value.is_array()) continue;
    out << key << '\t' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

void write_tsv_vectors(std::ostream& out, const std::vector<PointVector>& vs) {
  for (const auto& v : vs) {
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "\t" : "") << v[k];
    out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weierstrass semigroups at P_inf, P_1, ..., P_m on the curves X_{a,b,n,s} and Y_{n,s}"};
  app.name("wsg");
  app.require_subcommand(1);
  Options o;

  auto* params_cmd = app.add_subcommand("params", "validate parameters and print derived constants");
  add_curve_flags(params_cmd, o, false);
  auto* gamma_cmd = app.add_subcommand("gamma", "absolute maximal elements in the fundamental region");
  add_curve_flags(gamma_cmd, o, true);
  gamma_cmd->add_flag("--classical", o.classical, "minimal generating set of the classical semigroup instead");
  auto* lambda_cmd = app.add_subcommand("lambda", "relative maximal elements in the fundamental region");
  add_curve_flags(lambda_cmd, o, true);
  lambda_cmd->add_flag("--classical", o.classical, "relative maximal elements in N_0^{m+1} instead");
  auto* gaps_cmd = app.add_subcommand("gaps", "gaps of the classical semigroup");
  add_curve_flags(gaps_cmd, o, true);
  gaps_cmd->add_flag("--pure", o.pure, "pure gaps only");
  gaps_cmd->add_option("--box-sum", o.box_sum, "degree bound of the scanned simplex (at least 2g-1)");
  auto* member_cmd = app.add_subcommand("member", "membership test with witnesses");
  add_curve_flags(member_cmd, o, true);
  member_cmd->add_option("--vector", o.vector, "comma-separated coordinates, P_inf first")->required();
  member_cmd->add_flag("--classical", o.classical, "report membership in the classical semigroup");
  auto* counts_cmd = app.add_subcommand("counts", "cardinalities and bounds");
  add_curve_flags(counts_cmd, o, true);
  auto* verify_cmd = app.add_subcommand("verify", "run the consistency checks against the brute-force oracle");
  add_curve_flags(verify_cmd, o, true);
  verify_cmd->add_option("--box-sum", o.box_sum, "degree bound of the oracle simplex (default 2g)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalid;
  }

  try {
    RawParams raw;
    raw.family = o.family == "X" ? Family::X : Family::Y;
    raw.p = o.p;
    raw.a = o.a;
    raw.b = o.b;
    raw.q = o.q;
    raw.n = o.n;
    raw.s = o.s;
    const DerivedConstants dc = make_curve(raw);

    json record;
    record["schema_version"] = kSchemaVersion;
    record["command"] = app.get_subcommands().front()->get_name();
    record["params"] = params_json(dc.params);
    record["derived"] = derived_json(dc);
    json payload = json::object();
    std::vector<PointVector> vectors;
    bool vector_output = false;
    int code = kOk;

    const ScanOptions scan{o.jobs, std::nullopt};
    if (!app.got_subcommand(params_cmd)) {
      check_m(dc, o.m);
      payload["m"] = integer(o.m);
      if (app.got_subcommand(gamma_cmd)) {
        vectors = o.classical ? minimal_generating_set(dc, o.m) : absolute_maximals_in_region(dc, o.m);
        payload["set"] = o.classical ? "minimal_generating_set" : "absolute_maximals_in_region";
        vector_output = true;
      } else if (app.got_subcommand(lambda_cmd)) {
        vectors = o.classical ? classical_relative_maximals(dc, o.m) : relative_maximals_in_region(dc, o.m);
        payload["set"] = o.classical ? "classical_relative_maximals" : "relative_maximals_in_region";
        vector_output = true;
      } else if (app.got_subcommand(gaps_cmd)) {
        const ScanOptions bounded{o.jobs, o.box_sum};
        vectors = o.pure ? pure_gaps_via_witnesses(dc, o.m, bounded) : gaps_via_complement(dc, o.m, bounded);
        payload["pure"] = o.pure;
        payload["degree_bound"] = integer(o.box_sum.value_or(gap_degree_bound(dc)));
        vector_output = true;
      } else if (app.got_subcommand(member_cmd)) {
        const PointVector alpha = parse_vector(o.vector);
        if (static_cast<int64_t>(alpha.size()) != o.m + 1)
          throw Error(ErrorCode::LengthMismatch, "--vector needs m + 1 = " + std::to_string(o.m + 1) + " coordinates");
        const GeneralizedSemigroup hs(dc, o.m);
        const auto verdict = hs.test(alpha);
        const bool classical = verdict.member && alpha.nonnegative();
        payload["vector"] = vector_json(alpha);
        payload["member"] = o.classical ? classical : verdict.member;
        payload["generalized_member"] = verdict.member;
        payload["classical_member"] = classical;
        payload["failing_coordinate"] =
            verdict.failing_coordinate ? json(*verdict.failing_coordinate) : json(nullptr);
        json ws = json::array();
        for (std::size_t r = 0; r < verdict.witnesses.size(); ++r)
          ws.push_back(witness_json(dc, o.m, r, verdict.witnesses[r]));
        payload["witnesses"] = ws;
      } else if (app.got_subcommand(counts_cmd)) {
        const auto lambda = classical_relative_maximals(dc, o.m);
        payload["relative_maximals_formula"] = integer(count_classical_relative_maximals(dc, o.m));
        payload["relative_maximals_enumerated"] = integer(static_cast<int64_t>(lambda.size()));
        payload["minimal_generating_set_size"] = integer(static_cast<int64_t>(minimal_generating_set(dc, o.m).size()));
        payload["gap_count"] = integer(count_gaps_via_complement(dc, o.m, scan));
        payload["pure_gap_count"] = integer(static_cast<int64_t>(pure_gaps_via_witnesses(dc, o.m, scan).size()));
        payload["gap_count_upper_bound"] = integer(gap_count_upper_bound(dc, o.m));
        if (o.m == 1) payload["two_point_gap_count"] = integer(count_two_point_gaps(dc));
      } else if (app.got_subcommand(verify_cmd)) {
        const int64_t bound = o.box_sum.value_or(2 * dc.genus);
        const auto checks = consistency_report(dc, o.m, bound, {}, scan);
        json cj = json::object();
        for (const auto& [name, ok] : checks) cj[name] = ok;
        payload["sum_bound"] = integer(bound);
        payload["checks"] = cj;
        payload["passed"] = all_passed(checks);
        if (!all_passed(checks)) code = kVerifyFailed;
      }
    }

    if (vector_output) {
      payload["count"] = integer(static_cast<int64_t>(vectors.size()));
      payload["vectors"] = vectors_json(vectors);
    }
    record["payload"] = payload;

    if (o.format == "tsv") {
      if (vector_output) {
        write_tsv_vectors(out, vectors);
      } else if (app.got_subcommand(params_cmd)) {
        write_tsv_scalars(out, record["derived"]);
      } else {
        write_tsv_scalars(out, payload);
        if (payload.contains("checks"))
          for (const auto& [name, ok] : payload["checks"].items()) out << name << '\t' << ok.dump() << '\n';
      }
    } else {
      out << record.dump(2) << '\n';
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace wsg::cli
