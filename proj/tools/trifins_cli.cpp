#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trifins/domain_shape.hpp"
#include "trifins/finsler_triangle.hpp"
#include "trifins/serialize.hpp"
#include "trifins/spectral.hpp"
#include "trifins/tiling.hpp"
#include "trifins/triangle_group.hpp"

using namespace trifins;
using nlohmann::json;

namespace {

std::string g12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Doubles destined for JSON are rounded to 12 significant digits so the
// serialized form matches the CSV formatting rule.
double round12(double v) { return std::strtod(g12(v).c_str(), nullptr); }

Vec2 parse_vec2(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected \"x,y\": " + s);
  size_t ax = 0, ay = 0;
  double x = std::stod(s.substr(0, comma), &ax);
  double y = std::stod(s.substr(comma + 1), &ay);
  if (ax != comma || ay != s.size() - comma - 1)
    throw std::invalid_argument("expected \"x,y\": " + s);
  return {x, y};
}

// Output sink: a file when --out is given, stdout otherwise.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
      os = &file;
    }
  }
  std::ostream& out() { return *os; }
};

int cmd_rep_check(const std::string& pqr, const std::string& format, Sink& sink) {
  Presentation pres = Presentation::parse(pqr);
  const SymbolicRep& sym = shared_symbolic(pres);
  Mat3<LaurentPoly> id = sym.identity();
  LaurentPoly minus_one =
      LaurentPoly::constant(NFElem::of_rational(sym.field(), Rational(-1)));

  const char* names = "abc";
  bool all_ok = true;
  struct Line {
    std::string label;
    bool ok;
  };
  std::vector<Line> checks;
  for (int i = 0; i < 3; ++i) {
    std::string sq(2, names[i]);
    checks.push_back({std::string(1, names[i]) + "^2 = 1", sym.evaluate(sq) == id});
    checks.push_back({std::string("det(") + names[i] + ") = -1",
                      sym.generator(i).det() == minus_one});
  }
  const int orders[3] = {pres.p, pres.q, pres.r};
  const char* pairs[3] = {"ab", "bc", "ca"};
  for (int k = 0; k < 3; ++k) {
    std::string word;
    for (int rep = 0; rep < orders[k]; ++rep) word += pairs[k];
    checks.push_back({std::string("(") + pairs[k] + ")^" + std::to_string(orders[k]) + " = 1",
                      sym.evaluate(word) == id});
  }
  for (const Line& line : checks) all_ok = all_ok && line.ok;

  std::optional<LaurentPoly> ratio;
  try {
    ratio = sym.triple_ratio();
  } catch (const std::domain_error&) {
  }

  if (format == "json") {
    json out;
    out["pqr"] = {pres.p, pres.q, pres.r};
    json gens = json::array();
    for (int i = 0; i < 3; ++i) {
      json rows = json::array();
      for (int rr = 0; rr < 3; ++rr) {
        json row = json::array();
        for (int cc = 0; cc < 3; ++cc)
          row.push_back(laurent_to_json(sym.generator(i).at(rr, cc)));
        rows.push_back(row);
      }
      gens.push_back(rows);
    }
    out["generators"] = gens;
    json rel = json::object();
    for (const Line& line : checks) rel[line.label] = line.ok;
    out["relations"] = rel;
    out["triple_ratio"] = ratio ? laurent_to_json(*ratio) : json();
    sink.out() << out.dump(2) << '\n';
  } else {
    for (int i = 0; i < 3; ++i) {
      sink.out() << "generator " << names[i] << ":\n";
      for (int rr = 0; rr < 3; ++rr) {
        sink.out() << "  [";
        for (int cc = 0; cc < 3; ++cc)
          sink.out() << (cc ? ", " : "") << sym.generator(i).at(rr, cc).to_string();
        sink.out() << "]\n";
      }
    }
    for (const Line& line : checks)
      sink.out() << "relation " << line.label << ": " << (line.ok ? "ok" : "FAILED") << '\n';
    sink.out() << "triple ratio: " << (ratio ? ratio->to_string() : "undefined (a pairing vanishes)")
               << '\n';
    sink.out() << (all_ok ? "all relations verified\n" : "RELATION FAILURE\n");
  }
  return all_ok ? 0 : 1;
}

int cmd_trace_degrees(const std::string& pqr, const std::string& word,
                      const std::string& format, Sink& sink) {
  Presentation pres = Presentation::parse(pqr);
  require_valid_word(word);
  if (word.size() % 2 != 0)
    throw std::invalid_argument("trace degrees need an orientation-preserving (even) word");
  const SymbolicRep& sym = shared_symbolic(pres);
  auto [d1, d2] = trace_top_degrees(sym, word);
  if (format == "json") {
    std::string w = reduce_word(word);
    json out{{"word", word},
             {"d1", d1},
             {"d2", d2},
             {"trace", laurent_to_json(sym.evaluate(w).trace())},
             {"trace_inverse", laurent_to_json(sym.evaluate(inverse_word(w)).trace())}};
    sink.out() << out.dump(2) << '\n';
  } else {
    sink.out() << "d1,d2\n" << d1 << ',' << d2 << '\n';
  }
  return 0;
}

int cmd_jordan_scan(const std::string& pqr, const FamilyParam& param, int max_len,
                    const std::string& format, Sink& sink) {
  Presentation pres = Presentation::parse(pqr);
  ScanResult scan = jordan_scan(pres, param, max_len);
  if (format == "json") {
    json rows = json::array();
    for (const ScanRow& row : scan.rows)
      rows.push_back({{"word", row.word},
                      {"length", row.length},
                      {"x_logl1", round12(row.x)},
                      {"y_neg_logl3", round12(row.y)}});
    json out{{"t", round12(scan.t)}, {"rows", rows}};
    sink.out() << out.dump(2) << '\n';
  } else {
    write_scan_csv(sink.out(), scan);
  }
  LatticeStats stats = lattice_proximity(scan);
  if (stats.defined) {
    std::cerr << "lattice proximity (normalized by log t): mean=" << g12(stats.mean)
              << " p90=" << g12(stats.p90) << '\n';
  } else {
    std::cerr << "lattice proximity: undefined at t = 1\n";
  }
  return 0;
}

int cmd_flat_length(const std::string& pqr, const std::string& word,
                    const std::string& format, Sink& sink) {
  Presentation pres = Presentation::parse(pqr);
  require_valid_word(word);
  int fwd = translation_length(pres, word);
  int rev = translation_length(pres, inverse_word(word));
  if (format == "json") {
    json out{{"word", word}, {"length", fwd}, {"length_inverse", rev}};
    sink.out() << out.dump(2) << '\n';
  } else {
    sink.out() << "length,length_inverse\n" << fwd << ',' << rev << '\n';
  }
  return 0;
}

int cmd_verify_limit(const std::string& pqr, const std::string& word,
                     std::vector<double> values, bool tagged_t2, const std::string& format,
                     Sink& sink) {
  Presentation pres = Presentation::parse(pqr);
  require_valid_word(word);
  std::sort(values.begin(), values.end());

  std::optional<std::pair<int, int>> degrees;
  try {
    degrees = trace_top_degrees(shared_symbolic(pres), word);
  } catch (const std::domain_error&) {
    // Identically zero trace (some elliptic words); prediction undefined.
  }
  bool predicted_defined = degrees && degrees->second > 0;
  double predicted =
      predicted_defined ? static_cast<double>(degrees->first) / degrees->second : 0.0;

  struct Row {
    double value, xw, xwi;
    bool defined;
    double ratio, residual;
  };
  std::vector<Row> rows;
  for (double v : values) {
    FamilyParam param = tagged_t2 ? FamilyParam::t_squared(v) : FamilyParam::t(v);
    NumericRep rep(pres, param.as_t());
    double xw = jordan_projection(rep, word).x;
    double xwi = jordan_projection(rep, inverse_word(word)).x;
    Row row{v, xw, xwi, false, 0.0, 0.0};
    if (xwi != 0.0 && predicted_defined) {
      row.defined = true;
      row.ratio = xw / xwi;
      row.residual = row.ratio - predicted;
    }
    rows.push_back(row);
  }

  const char* tag = tagged_t2 ? "t2" : "t";
  if (format == "json") {
    json jrows = json::array();
    for (const Row& row : rows) {
      json jr{{tag, round12(row.value)},
              {"logl1_w", round12(row.xw)},
              {"logl1_winv", round12(row.xwi)}};
      if (row.defined) {
        jr["ratio"] = round12(row.ratio);
        jr["predicted"] = round12(predicted);
        jr["residual"] = round12(row.residual);
      }
      jrows.push_back(jr);
    }
    sink.out() << json{{"word", word}, {"rows", jrows}}.dump(2) << '\n';
  } else {
    sink.out() << tag << ",logl1_w,logl1_winv,ratio,predicted,residual\n";
    for (const Row& row : rows) {
      sink.out() << g12(row.value) << ',' << g12(row.xw) << ',' << g12(row.xwi) << ',';
      if (row.defined) {
        sink.out() << g12(row.ratio) << ',' << g12(predicted) << ',' << g12(row.residual)
                   << '\n';
      } else {
        sink.out() << "undefined,undefined,undefined\n";
      }
    }
  }

  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    if (!rows[i].defined || !rows[i + 1].defined) continue;
    if (!(std::abs(rows[i + 1].residual) < std::abs(rows[i].residual))) {
      std::cerr << "residual did not shrink from " << tag << "=" << g12(rows[i].value)
                << " to " << tag << "=" << g12(rows[i + 1].value) << '\n';
      return 1;
    }
  }
  return 0;
}

int cmd_funk(const std::string& body_path, const std::string& x_str,
             const std::string& v_str, const std::string& y_str, const std::string& format,
             Sink& sink) {
  std::ifstream in(body_path);
  if (!in) throw std::runtime_error("cannot read body file: " + body_path);
  ConvexBody body = body_from_json(json::parse(in));
  Vec2 x = parse_vec2(x_str);
  Lift flat = flat_lift();

  std::vector<std::pair<std::string, double>> results;
  if (!v_str.empty())
    results.emplace_back("fds", fds_eval(body, flat, x, parse_vec2(v_str)));
  if (!y_str.empty()) {
    Vec2 y = parse_vec2(y_str);
    results.emplace_back("dds", dds_eval(body, flat, x, y));
    results.emplace_back("dds_reverse", dds_eval(body, flat, y, x));
    results.emplace_back("hilbert", hilbert_distance(body, x, y));
  }
  if (results.empty())
    throw std::invalid_argument("nothing to evaluate: pass --v and/or --y");

  if (format == "json") {
    json out;
    for (const auto& [name, value] : results) out[name] = round12(value);
    sink.out() << out.dump(2) << '\n';
  } else {
    sink.out() << "metric,value\n";
    for (const auto& [name, value] : results) sink.out() << name << ',' << g12(value) << '\n';
  }
  return 0;
}

int cmd_titeica(double d, int samples, const std::string& dirs_str,
                const std::string& ball_out, const std::string& format, Sink& sink) {
  GaugeBall ball = truncated_ball(d, samples);

  std::vector<Vec2> dirs;
  if (dirs_str.empty()) {
    dirs = {{1.0, 0.0}, {0.0, 1.0}, {std::cos(M_PI / 7.0), std::sin(M_PI / 7.0)}};
  } else {
    std::stringstream ss(dirs_str);
    std::string item;
    while (std::getline(ss, item, ';')) dirs.push_back(parse_vec2(item));
  }

  struct Row {
    Vec2 v;
    double gauge, limit, rel;
  };
  std::vector<Row> rows;
  for (Vec2 v : dirs) {
    if (v.x == 0 && v.y == 0) throw std::invalid_argument("directions must be nonzero");
    double g = ball.gauge(v);
    double lim = finsler_delta_eval(1.0, {v.x, v.y});
    rows.push_back({v, g, lim, g / lim - 1.0});
  }

  if (format == "json") {
    json jrows = json::array();
    for (const Row& row : rows)
      jrows.push_back({{"vx", round12(row.v.x)},
                       {"vy", round12(row.v.y)},
                       {"gauge", round12(row.gauge)},
                       {"limit", round12(row.limit)},
                       {"rel_err", round12(row.rel)}});
    sink.out() << json{{"d", round12(d)}, {"samples", samples}, {"rows", jrows}}.dump(2)
               << '\n';
  } else {
    sink.out() << "vx,vy,gauge,limit,rel_err\n";
    for (const Row& row : rows)
      sink.out() << g12(row.v.x) << ',' << g12(row.v.y) << ',' << g12(row.gauge) << ','
                 << g12(row.limit) << ',' << g12(row.rel) << '\n';
  }
  if (!ball_out.empty()) {
    std::ofstream bf(ball_out);
    if (!bf) throw std::runtime_error("cannot open output file: " + ball_out);
    json jb = gauge_to_json(ball);
    for (auto& v : jb["vertices"]) v = json::array({round12(v[0]), round12(v[1])});
    bf << jb.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle-group representation families and their flat limit geometry"};
  app.require_subcommand(1);

  std::string pqr, word, out_path, format = "csv";
  std::string body_path, x_str, v_str, y_str, dirs_str, ball_out;
  double t_val = 0, t2_val = 0, d_val = 8.0;
  int max_len = 8, samples = 512;
  std::vector<double> t_list, t2_list;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the table to this file instead of stdout");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* rep = app.add_subcommand("rep-check", "verify the defining relations symbolically");
  rep->add_option("--pqr", pqr, "presentation p,q,r")->required();
  add_common(rep);

  CLI::App* deg = app.add_subcommand("trace-degrees", "top parameter degrees of word traces");
  deg->add_option("--pqr", pqr, "presentation p,q,r")->required();
  deg->add_option("--word", word, "even word over abc (default: identity)");
  add_common(deg);

  CLI::App* scan = app.add_subcommand("jordan-scan", "eigenvalue-log scatter over short classes");
  scan->add_option("--pqr", pqr, "presentation p,q,r")->required();
  CLI::Option* scan_t = scan->add_option("--t", t_val, "family parameter t");
  CLI::Option* scan_t2 = scan->add_option("--t2", t2_val, "triple ratio t^2");
  scan_t->excludes(scan_t2);
  scan_t2->excludes(scan_t);
  scan->add_option("--max-len", max_len, "maximum word length")
      ->required()
      ->check(CLI::Range(0, 20));
  add_common(scan);

  CLI::App* flat = app.add_subcommand("flat-length", "combinatorial translation lengths");
  flat->add_option("--pqr", pqr, "presentation p,q,r")->required();
  flat->add_option("--word", word, "word over abc");
  add_common(flat);

  CLI::App* limit = app.add_subcommand("verify-limit", "eigenvalue ratio against the degree ratio");
  limit->add_option("--pqr", pqr, "presentation p,q,r")->required();
  limit->add_option("--word", word, "even word over abc")->required();
  CLI::Option* lim_t = limit->add_option("--t", t_list, "parameter values t");
  CLI::Option* lim_t2 = limit->add_option("--t2", t2_list, "triple ratio values t^2");
  lim_t->excludes(lim_t2);
  lim_t2->excludes(lim_t);
  add_common(limit);

  CLI::App* funk = app.add_subcommand("funk", "domain-shape evaluators on a polygon JSON");
  funk->add_option("--body", body_path, "polygon JSON file")->required();
  funk->add_option("--x", x_str, "interior point \"x,y\"")->required();
  funk->add_option("--v", v_str, "tangent vector \"x,y\" for the gauge");
  funk->add_option("--y", y_str, "second point \"x,y\" for distances");
  add_common(funk);

  CLI::App* tit = app.add_subcommand("titeica", "truncated-ball gauges of the model surface");
  tit->add_option("--d", d_val, "truncation radius")->check(CLI::PositiveNumber);
  tit->add_option("--samples", samples, "angular samples per ring")->check(CLI::Range(16, 100000));
  tit->add_option("--dirs", dirs_str, "directions \"x,y;x,y;...\" (default: three fixed)");
  tit->add_option("--ball-out", ball_out, "also write the ball polygon JSON here");
  add_common(tit);

  CLI11_PARSE(app, argc, argv);

  try {
    Sink sink(out_path);
    if (rep->parsed()) return cmd_rep_check(pqr, format, sink);
    if (deg->parsed()) return cmd_trace_degrees(pqr, word, format, sink);
    if (scan->parsed()) {
      if (!scan_t->count() && !scan_t2->count())
        throw std::invalid_argument("the parameter must be tagged: pass --t or --t2");
      FamilyParam param =
          scan_t->count() ? FamilyParam::t(t_val) : FamilyParam::t_squared(t2_val);
      return cmd_jordan_scan(pqr, param, max_len, format, sink);
    }
    if (flat->parsed()) return cmd_flat_length(pqr, word, format, sink);
    if (limit->parsed()) {
      if (t_list.empty() && t2_list.empty())
        throw std::invalid_argument("the parameter must be tagged: pass --t or --t2 values");
      bool tagged_t2 = !t2_list.empty();
      return cmd_verify_limit(pqr, word, tagged_t2 ? t2_list : t_list, tagged_t2, format,
                              sink);
    }
    if (funk->parsed()) return cmd_funk(body_path, x_str, v_str, y_str, format, sink);
    if (tit->parsed()) return cmd_titeica(d_val, samples, dirs_str, ball_out, format, sink);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
