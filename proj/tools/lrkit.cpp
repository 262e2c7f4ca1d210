// Command-line front end: map, invert, verify, enumerate, symmetry, render.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lrkit/enumeration.hpp"
#include "lrkit/error.hpp"
#include "lrkit/expansion.hpp"
#include "lrkit/io.hpp"
#include "lrkit/lr_map.hpp"
#include "lrkit/reduction.hpp"
#include "lrkit/sundaram.hpp"

namespace {

using namespace lrkit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

SkewTableau read_tableau(const std::string& path) {
  return to_tableau(document_from_json(parse_json(read_text(path))));
}

Budget effective_budget(const std::string& flag) {
  if (!flag.empty()) return parse_budget(flag);
  if (const char* env = std::getenv("LRKIT_BUDGET")) return parse_budget(env);
  return {};
}

void require_n(int n) {
  if (n < 1) throw InputError("--n must be a positive integer");
}

struct Options {
  std::string in = "-";
  std::string out = "-";
  int n = 0;
  bool exact = false;
  bool render = false;
  // invert
  std::string p_path, q_path;
  // verify
  std::string lambda;
  bool all = false;
  int cells = -1;
  std::string budget;
  bool force = false;
  bool json = false;
  std::string certificates;
  unsigned threads = 0;
  // enumerate
  std::string kind;
  std::string outer, inner;
  int m = 0;
  bool count = false;
  // symmetry
  std::string rect;
};

ExpansionMethod method_of(const Options& o) {
  return o.exact ? ExpansionMethod::exact : ExpansionMethod::closed_form;
}

int cmd_map(const Options& o) {
  require_n(o.n);
  const SkewTableau t = read_tableau(o.in);
  const LrAiiTrace tr = lr_aii(t, o.n);
  Output out(o.out);
  if (o.render) {
    out.stream() << "P:\n" << render(tr.p_tableau) << "Q:\n" << render(tr.q_tableau) << "chain:";
    for (const auto& p : tr.shape_chain) out.stream() << ' ' << p.to_string();
    out.stream() << '\n';
  } else {
    out.stream() << to_json(tr, o.n).dump() << '\n';
  }
  return kExitOk;
}

int cmd_invert(const Options& o) {
  require_n(o.n);
  SkewTableau p, q;
  if (!o.p_path.empty() || !o.q_path.empty()) {
    if (o.p_path.empty() || o.q_path.empty()) throw InputError("--p and --q must be given together");
    p = read_tableau(o.p_path);
    q = read_tableau(o.q_path);
  } else {
    const Json j = parse_json(read_text(o.in));
    if (!j.is_object() || !j.contains("p") || !j.contains("q"))
      throw InputError("expected an object with fields \"p\" and \"q\"");
    p = to_tableau(document_from_json(j.at("p")));
    q = to_tableau(document_from_json(j.at("q")));
  }
  try {
    const SkewTableau t = expand(p, q, o.n, method_of(o));
    Output out(o.out);
    if (o.render)
      out.stream() << render(t);
    else
      out.stream() << to_json(to_document(t, o.n, DocumentKind::ssyt)).dump() << '\n';
  } catch (const ExpansionError& e) {
    std::cerr << "no preimage: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  require_n(o.n);
  const Budget budget = effective_budget(o.budget);
  std::vector<VerificationReport> reports;
  if (o.all) {
    const int cells = o.cells >= 0 ? o.cells : budget.cells;
    if ((cells > budget.cells || o.n > budget.n) && !o.force)
      throw InputError("sweep beyond the budget " + std::to_string(budget.cells) + ":" +
                       std::to_string(budget.n) + "; pass --force to run it");
    std::vector<int> ns;
    for (int n = 1; n <= o.n; ++n) ns.push_back(n);
    reports = verify_sweep(ns, cells, method_of(o), o.threads);
  } else {
    if (o.lambda.empty()) throw InputError("give --lambda or --all");
    const Partition lambda = parse_partition(o.lambda);
    if (lambda.length() > 2 * o.n)
      throw InputError(lambda.to_string() + " has more than 2n = " + std::to_string(2 * o.n) + " rows");
    if (!budget.admits(lambda, o.n) && !o.force)
      throw InputError("request beyond the budget " + std::to_string(budget.cells) + ":" +
                       std::to_string(budget.n) + "; pass --force to run it");
    reports.push_back(verify_bijection(lambda, o.n, method_of(o)));
  }

  bool all_ok = true;
  Json certs = Json::array();
  for (const auto& r : reports) {
    all_ok = all_ok && r.ok();
    for (const auto& c : r.roundtrip_failures) {
      Json cj = to_json(c, r.n);
      cj["lambda"] = to_json(r.lambda);
      cj["n"] = r.n;
      certs.push_back(cj);
    }
  }

  Output out(o.out);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out.stream() << (o.all ? arr : arr.at(0)).dump() << '\n';
  } else {
    for (const auto& r : reports) {
      out.stream() << "lambda=" << r.lambda.to_string() << " n=" << r.n << " lhs=" << r.lhs_count
                   << " rhs=" << r.rhs_total();
      if (r.ok())
        out.stream() << " OK\n";
      else
        out.stream() << " FAIL (" << r.roundtrip_failures.size() << " certificates)\n";
    }
  }
  if (!all_ok && !o.certificates.empty()) {
    std::ofstream cf(o.certificates);
    if (!cf) throw InputError("cannot write '" + o.certificates + "'");
    cf << certs.dump(2) << '\n';
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_enumerate(const Options& o) {
  const Budget budget = effective_budget(o.budget);
  const Partition outer = parse_partition(o.outer);
  const Partition inner = parse_partition(o.inner);
  const SkewShape shape(outer, inner);
  if (o.kind != "ssyt") require_n(o.n);
  const int alphabet = o.kind == "ssyt" ? (o.m > 0 ? o.m : 2 * o.n) : 2 * o.n;
  if (alphabet < 1) throw InputError("ssyt needs --m or --n");
  if ((shape.size() > budget.cells || alphabet > 2 * budget.n) && !o.force)
    throw InputError("request beyond the budget; pass --force to run it");

  std::vector<SkewTableau> items;
  DocumentKind kind = DocumentKind::ssyt;
  if (o.kind == "ssyt") {
    items = enum_ssyt(shape, alphabet);
  } else if (o.kind == "spt") {
    if (!shape.is_straight()) throw InputError("spt needs a straight shape");
    items = enum_spt(outer, o.n);
    kind = DocumentKind::symplectic;
  } else if (o.kind == "lrs") {
    items = enum_lrs(shape, o.n);
    kind = DocumentKind::lrs;
  } else if (o.kind == "rec") {
    items = enum_rec(shape, o.n);
    kind = DocumentKind::rec;
  } else {
    throw InputError("unknown --kind '" + o.kind + "'");
  }

  Output out(o.out);
  if (o.count) {
    out.stream() << items.size() << '\n';
    return kExitOk;
  }
  std::optional<int> n_field;
  if (o.n > 0) n_field = o.n;
  for (const auto& t : items) out.stream() << to_json(to_document(t, n_field, kind)).dump() << '\n';
  return kExitOk;
}

int cmd_symmetry(const Options& o) {
  require_n(o.n);
  const SkewTableau t = read_tableau(o.in);
  std::optional<int> rows, cols;
  if (!o.rect.empty()) {
    const Partition r = parse_partition(o.rect);
    if (r.length() != 2) throw InputError("--rect expects ROWS,COLS");
    rows = r.row(1);
    cols = r.row(2);
  }
  const LrsValidation v = validate_lrs(t, o.n);
  if (!v.valid) throw InputError("not an LRS tableau: fails " + std::string(to_string(*v.violated)));
  const SkewTableau q = lozenge(t, o.n);
  const SkewTableau b = blacklozenge(t, o.n, rows, cols);
  Output out(o.out);
  if (o.render) {
    out.stream() << "lozenge:\n" << render(q) << "blacklozenge:\n" << render(b);
  } else {
    Json j;
    j["lozenge"] = to_json(to_document(q, o.n, DocumentKind::rec));
    j["blacklozenge"] = to_json(to_document(b, std::nullopt, DocumentKind::lr));
    out.stream() << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_render(const Options& o) {
  Output out(o.out);
  out.stream() << render(read_tableau(o.in));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic Littlewood-Richardson map toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Input JSON document (- for stdin)");
    sub->add_option("--out", o.out, "Output path (- for stdout)");
  };

  auto* map = app.add_subcommand("map", "Run the forward map on an SSYT");
  add_io(map);
  map->add_option("--n", o.n, "Rank n (alphabet [2n])")->required();
  map->add_flag("--render", o.render, "Print text grids instead of JSON");

  auto* invert = app.add_subcommand("invert", "Rebuild an SSYT from a (P, Q) pair");
  add_io(invert);
  invert->add_option("--n", o.n, "Rank n")->required();
  invert->add_option("--p", o.p_path, "P document");
  invert->add_option("--q", o.q_path, "Q document");
  invert->add_flag("--exact", o.exact, "Rebuild columns by search instead of the closed form");
  invert->add_flag("--render", o.render, "Print a text grid instead of JSON");

  auto* verify = app.add_subcommand("verify", "Exhaustively check the bijection");
  verify->add_option("--out", o.out, "Output path (- for stdout)");
  verify->add_option("--n", o.n, "Rank n (with --all: every rank up to n)")->required();
  verify->add_option("--lambda", o.lambda, "Outer partition, e.g. 2,2");
  verify->add_flag("--all", o.all, "Sweep every partition within the size limit");
  verify->add_option("--cells", o.cells, "Size limit for --all (default: budget)");
  verify->add_option("--budget", o.budget, "Budget cells[:n]; overrides LRKIT_BUDGET");
  verify->add_flag("--force", o.force, "Allow requests beyond the budget");
  verify->add_flag("--json", o.json, "Emit JSON reports");
  verify->add_option("--certificates", o.certificates, "Write failure certificates here");
  verify->add_flag("--exact", o.exact, "Use the search-based column rebuild");
  verify->add_option("--threads", o.threads, "Worker threads for --all (0 = all cores)");

  auto* enumerate = app.add_subcommand("enumerate", "List a tableau family as NDJSON");
  enumerate->add_option("--out", o.out, "Output path (- for stdout)");
  enumerate->add_option("--kind", o.kind, "ssyt, spt, lrs or rec")->required();
  enumerate->add_option("--outer", o.outer, "Outer partition")->required();
  enumerate->add_option("--inner", o.inner, "Inner partition");
  enumerate->add_option("--n", o.n, "Rank n");
  enumerate->add_option("--m", o.m, "Alphabet size for ssyt");
  enumerate->add_flag("--count", o.count, "Print only the count");
  enumerate->add_option("--budget", o.budget, "Budget cells[:n]; overrides LRKIT_BUDGET");
  enumerate->add_flag("--force", o.force, "Allow requests beyond the budget");

  auto* symmetry = app.add_subcommand("symmetry", "Lozenge and blacklozenge images of an LRS tableau");
  add_io(symmetry);
  symmetry->add_option("--n", o.n, "Rank n")->required();
  symmetry->add_option("--rect", o.rect, "Bounding rectangle ROWS,COLS");
  symmetry->add_flag("--render", o.render, "Print text grids instead of JSON");

  auto* render_cmd = app.add_subcommand("render", "Draw a tableau document as text");
  add_io(render_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*map) return cmd_map(o);
    if (*invert) return cmd_invert(o);
    if (*verify) return cmd_verify(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*symmetry) return cmd_symmetry(o);
    if (*render_cmd) return cmd_render(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
