#include "unbias/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "unbias/dsl.hpp"
#include "unbias/laws.hpp"
#include "unbias/records.hpp"
#include "unbias/unbias_eval.hpp"

namespace unbias {

namespace {

using nlohmann::json;

std::string list_text(const std::vector<std::size_t>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

// Inline JSON, "-" for stdin, or a file path.
std::string slurp(const std::string& arg, std::istream& in) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::stringstream ss;
  if (arg == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(arg);
  if (!f) fail(Errc::RecordFormatError, "cannot read '" + arg + "'");
  ss << f.rdbuf();
  return ss.str();
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("UNBIAS_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Options {
  std::string format = "text";
  std::string mor1, mor2;
  std::string span1, span2, family, then;
  std::string model = "free";
  bool cells = false;
  std::string suite;
  std::size_t max_size = 3;
  std::uint64_t seed = 1;
};

int cmd_normalize(const Options& o, std::ostream& out) {
  const MorTerm t = parse_mor(o.mor1);
  const SListHom<std::string> f = normalize(t);
  const Word w = reduced_word(f.phi());
  const std::string canon = render(canonical_term(f));
  if (o.format == "record") {
    json j = {{"schema", kRecordSchema}, {"kind", "normal-form"},         {"source", f.src()}, {"target", f.dst()},
              {"phi", f.phi().images()}, {"word", w}, {"canonical", canon}};
    out << j.dump() << "\n";
  } else {
    out << "source: " << to_string(f.src()) << "\n"
        << "target: " << to_string(f.dst()) << "\n"
        << "phi: " << to_string(f.phi()) << "\n"
        << "word: " << list_text(w) << "\n"
        << "canonical: " << canon << "\n";
  }
  return 0;
}

int cmd_equal(const Options& o, std::ostream& out) {
  const MorTerm s = parse_mor(o.mor1), t = parse_mor(o.mor2);
  const bool eq = decide_equal(s, t);
  const Perm p = normalize(s).phi(), q = normalize(t).phi();
  if (o.format == "record") {
    json j = {{"schema", kRecordSchema}, {"kind", "equality"}, {"equal", eq}};
    if (!eq) j["witness"] = {p.images(), q.images()};
    out << j.dump() << "\n";
  } else {
    out << (eq ? "true" : "false") << "\n";
    if (!eq) out << "phi 1: " << to_string(p) << "\n" << "phi 2: " << to_string(q) << "\n";
  }
  return eq ? 0 : 1;
}

int cmd_span_compose(const Options& o, std::ostream& out, std::istream& in) {
  const Span s = read_span_record(slurp(o.span1, in));
  const Span t = read_span_record(slurp(o.span2, in));
  const SpanComposite c = compose_span_detail(s, t);
  if (o.format == "record") {
    json j = json::parse(write_span_record(c.span));
    if (o.cells) j["projections"] = {c.pb.p1().img(), c.pb.p2().img()};
    out << j.dump() << "\n";
    return 0;
  }
  out << "apex: " << c.span.apex() << "\n"
      << "source: " << c.span.source() << "\n"
      << "target: " << c.span.target() << "\n"
      << "left: " << list_text(c.span.left.img()) << "\n"
      << "right: " << list_text(c.span.right.img()) << "\n";
  if (o.cells)
    out << "p1: " << list_text(c.pb.p1().img()) << "\n"
        << "p2: " << list_text(c.pb.p2().img()) << "\n";
  return 0;
}

std::vector<std::string> complete_family(const std::vector<std::optional<std::string>>& raw, std::size_t n) {
  std::vector<std::string> x;
  for (std::size_t j = 0; j < n; ++j) {
    if (j >= raw.size() || !raw[j]) fail(Errc::UnassignedLabel, "no object for index " + std::to_string(j));
    x.push_back(*raw[j]);
  }
  if (raw.size() > n)
    fail(Errc::RecordFormatError, "family has " + std::to_string(raw.size()) + " entries for a set of size " + std::to_string(n));
  return x;
}

template <SmcModel M, class Parse, class Show, class ShowMor>
int unbias_with(const M& m, const Options& o, const Span& s, const std::vector<std::string>& raw, Parse parse, Show show,
                ShowMor show_mor, std::ostream& out, std::istream& in) {
  std::vector<typename M::Obj> x;
  for (const std::string& r : raw) x.push_back(parse(r));
  const Unbiased<M> U(m);
  const UnbiasResult<M> res = U.eval(s, x);

  std::vector<std::string> unit_cells, comp_cells;
  if (o.cells) {
    for (const auto& c : U.unit_cell(s.source(), x)) unit_cells.push_back(show_mor(c));
  }
  if (!o.then.empty()) {
    const Span t = read_span_record(slurp(o.then, in));
    for (const auto& c : U.comp_cell(s, t, x)) comp_cells.push_back(show_mor(c));
  }

  if (o.format == "record") {
    json objs = json::array();
    for (std::size_t k = 0; k < res.objects.size(); ++k)
      objs.push_back({{"index", k}, {"labels", res.family.lists[k]}, {"object", show(res.objects[k])}});
    json j = {{"schema", kRecordSchema}, {"kind", "unbias-result"}, {"model", o.model},
              {"span", json::parse(write_span_record(s))}, {"objects", objs}};
    if (o.cells) j["unit_cells"] = unit_cells;
    if (!o.then.empty()) j["comp_cells"] = comp_cells;
    out << j.dump() << "\n";
    return 0;
  }
  for (std::size_t k = 0; k < res.objects.size(); ++k) {
    out << "k=" << k << ": [";
    const NList& ls = res.family.lists[k];
    for (std::size_t i = 0; i < ls.size(); ++i) out << (i ? "," : "") << "x" << ls[i];
    out << "] = " << show(res.objects[k]) << "\n";
  }
  for (std::size_t j = 0; j < unit_cells.size(); ++j) out << "unit j=" << j << ": " << unit_cells[j] << "\n";
  for (std::size_t l = 0; l < comp_cells.size(); ++l) out << "comp l=" << l << ": " << comp_cells[l] << "\n";
  return 0;
}

int cmd_unbias(const Options& o, std::ostream& out, std::istream& in) {
  const Span s = read_span_record(slurp(o.span1, in));
  const std::vector<std::string> raw = complete_family(read_family_record(slurp(o.family, in)), s.source());
  if (o.model == "finbij") {
    auto parse = [](const std::string& r) -> std::size_t {
      if (r.empty() || r.find_first_not_of("0123456789") != std::string::npos)
        fail(Errc::RecordFormatError, "bijection model objects are sizes, got '" + r + "'");
      return std::stoul(r);
    };
    return unbias_with(
        FinBijModel{}, o, s, raw, parse, [](std::size_t n) { return std::to_string(n); },
        [](const Perm& p) { return to_string(p); }, out, in);
  }
  return unbias_with(
      FreeTermModel{}, o, s, raw, [](const std::string& r) { return parse_obj(r); },
      [](const ObjTerm& t) { return render(t); }, [](const MorTerm& t) { return render(t); }, out, in);
}

int cmd_check_laws(const Options& o, std::ostream& out) {
  std::vector<std::string> names{o.suite};
  if (o.suite == "all") names = suite_names();
  bool ok = true;
  json reports = json::array();
  for (const std::string& name : names) {
    LawReport r = run_suite(name, o.max_size, o.seed);
    ok = ok && r.ok();
    if (o.format == "record") {
      reports.push_back({{"schema", kRecordSchema}, {"kind", "law-report"}, {"suite", name}, {"max_size", o.max_size},
                         {"seed", o.seed},          {"cases", r.cases},     {"failed", r.failed}, {"violations", r.violations}});
    } else {
      out << "suite " << name << ": " << r.cases << " cases, " << r.failed << " failed\n";
      for (const std::string& v : r.violations) out << "  " << v << "\n";
    }
  }
  if (o.format == "record") {
    for (const json& j : reports) out << j.dump() << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Unbiased tensor products over spans of finite sets, and symmetric monoidal coherence."};
  app.require_subcommand(1);
  Options o;
  o.seed = default_seed();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "record"}))->capture_default_str();

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of a structural morphism");
  normalize_cmd->add_option("term", o.mor1, "Morphism term")->required();

  auto* equal_cmd = app.add_subcommand("equal", "Decide equality of two parallel morphisms (exit 0 if equal, 1 if not)");
  equal_cmd->add_option("lhs", o.mor1, "First term")->required();
  equal_cmd->add_option("rhs", o.mor2, "Second term")->required();

  auto* compose_cmd = app.add_subcommand("span-compose", "Compose two spans by pullback");
  compose_cmd->add_option("first", o.span1, "Span record: inline JSON, file, or -")->required();
  compose_cmd->add_option("second", o.span2, "Span record: inline JSON, file, or -")->required();
  compose_cmd->add_flag("--cells", o.cells, "Also print the pullback projections");

  auto* unbias_cmd = app.add_subcommand("unbias", "Unbiased tensor of a family along a span");
  unbias_cmd->add_option("span", o.span1, "Span record")->required();
  unbias_cmd->add_option("family", o.family, "Family record")->required();
  unbias_cmd->add_option("--model", o.model, "Target model")->check(CLI::IsMember({"free", "finbij"}))->capture_default_str();
  unbias_cmd->add_flag("--cells", o.cells, "Also print the unit cells");
  unbias_cmd->add_option("--then", o.then, "Second span record; prints the composition cells");

  auto* laws_cmd = app.add_subcommand("check-laws", "Run a law suite (seed defaults to $UNBIAS_SEED)");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  laws_cmd->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(choices));
  laws_cmd->add_option("--max-size", o.max_size, "Exhaustive bound")->capture_default_str();
  laws_cmd->add_option("--seed", o.seed, "Random seed");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*normalize_cmd) return cmd_normalize(o, out);
    if (*equal_cmd) return cmd_equal(o, out);
    if (*compose_cmd) return cmd_span_compose(o, out, in);
    if (*unbias_cmd) return cmd_unbias(o, out, in);
    if (*laws_cmd) return cmd_check_laws(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace unbias
