// Command-line front end: validate, construct, classify, verify, conditions,
// suite, enum, reconstruct. Exit codes: 0 pass, 1 a mathematical check
// failed, 2 bad input.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "unilat/constructions.hpp"
#include "unilat/enumerate.hpp"
#include "unilat/error.hpp"
#include "unilat/iff_suite.hpp"
#include "unilat/io.hpp"
#include "unilat/reconstruct.hpp"

namespace fs = std::filesystem;
using namespace unilat;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Globals {
  bool machine = false;
  std::uint64_t seed = 0x5eed;
  std::size_t max_elements = 5;
  std::size_t witness_cap = 32;
};

/// Validation failures are results, not input errors.
struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LatticePtr load_lattice(const fs::path& p) { return share(parse_lattice(read_file(p))); }

/// The lattice a table or unary file refers to: the explicit path, else
/// `<name>.lat` next to the file.
LatticePtr lattice_for(const fs::path& file, const std::string& name, const std::string& explicit_path) {
  const fs::path p = explicit_path.empty() ? file.parent_path() / (name + ".lat") : fs::path(explicit_path);
  return load_lattice(p);
}

std::pair<BinOpTable, LatticePtr> load_table(const fs::path& p, const std::string& lattice_path) {
  const RawTable raw = parse_table_raw(read_file(p));
  LatticePtr lat = lattice_for(p, raw.lattice_name, lattice_path);
  return {bind_table(raw, lat), lat};
}

std::string yes(bool b) { return b ? "true" : "false"; }

void print_verdict(const char* name, const Verdict& v, const Lattice& lat) {
  std::cout << name << ": " << (v.holds ? "pass" : "FAIL");
  if (!v.holds && v.witness) std::cout << " (" << describe(*v.witness, lat) << ")";
  std::cout << "\n";
}

bool report_axioms(const BinOpTable& op, Elem e) {
  const AxiomReport r = check_axioms(op, e);
  const Lattice& L = op.lattice();
  std::cout << "neutral element checked: " << L.label(e) << "\n";
  print_verdict("commutativity", r.commutative, L);
  print_verdict("associativity", r.associative, L);
  print_verdict("monotonicity", r.monotone, L);
  print_verdict("neutrality", r.neutral, L);
  return r.all();
}

void print_results(const char* title, const std::vector<ConditionResult>& rs, const Lattice& L) {
  for (const auto& c : rs) {
    std::cout << title << " " << c.id << ": " << (c.holds ? "holds" : "FAILS");
    if (!c.holds) std::cout << " (" << c.violations << " violations)";
    std::cout << "\n";
    for (const auto& w : c.witnesses) std::cout << "    " << describe(w, L) << "\n";
  }
}

void print_report(const ConditionReport& rep, const Lattice& L) {
  std::cout << "conditions for " << to_string(rep.construction) << "\n";
  print_results("hypothesis", rep.hypotheses, L);
  print_results("condition", rep.conditions, L);
  std::cout << "applicable: " << yes(rep.applicable()) << "\nall conditions hold: " << yes(rep.holds()) << "\n";
}

struct RequestArgs {
  std::string id, lattice, anchor, base, unary, neutral;
  bool allow_degenerate = false;
};

void add_request_args(CLI::App* c, RequestArgs& a) {
  c->add_option("id", a.id, "construction id (u1, u2, s1, u3, u_cl, ...)")->required();
  c->add_option("lattice", a.lattice, ".lat file")->required();
  c->add_option("anchor", a.anchor, "a, b, or e for the specials")->required();
  c->add_option("base", a.base, "base table .opt")->required();
  c->add_option("unary", a.unary, "closure or interior .unm");
  c->add_option("--neutral", a.neutral, "neutral element of the base");
  c->add_flag("--allow-degenerate", a.allow_degenerate, "accept a = 1 or b = 0");
}

ConstructionRequest make_request(const RequestArgs& a, LatticePtr& lat) {
  lat = load_lattice(a.lattice);
  ConstructionRequest req{parse_construction(a.id), lat->at(a.anchor), parse_table(read_file(a.base), lat),
                          std::nullopt, std::nullopt, a.allow_degenerate};
  if (!a.unary.empty()) req.unary = parse_unary(read_file(a.unary), lat);
  if (!a.neutral.empty()) req.neutral = lat->at(a.neutral);
  return req;
}

struct CheckArgs {
  std::string cond4 = "z", closure_case = "1i", parallel = "IeA", top = "a1";
};

void add_check_args(CLI::App* c, CheckArgs& a, bool variants) {
  c->add_option("--cond4", a.cond4, "reading of condition (4): z or a")->check(CLI::IsMember({"z", "a"}));
  c->add_option("--case", a.closure_case, "case of the closure theorems: 1i, 1ii, 2i, 2ii");
  auto par = std::vector<std::string>{"IeA", "IaE"};
  auto top = std::vector<std::string>{"a1", "lt1"};
  if (variants) {
    par.push_back("both");
    top.push_back("both");
  }
  c->add_option("--parallel-cond", a.parallel, "set of y in the parallel condition")->check(CLI::IsMember(par));
  c->add_option("--top", a.top, "case (2)(ii) range hypothesis: inside (a,1) or below 1")->check(CLI::IsMember(top));
}

CheckOptions make_options(const CheckArgs& a, const Globals& g) {
  CheckOptions o;
  o.witness_cap = g.witness_cap;
  o.cond4 = a.cond4 == "a" ? Cond4Reading::A : Cond4Reading::Z;
  o.closure_case = parse_case(a.closure_case);
  o.parallel = a.parallel == "IaE" ? ParallelVariant::IaE : ParallelVariant::IeA;
  o.top = a.top == "lt1" ? TopReading::Lt1 : TopReading::A1;
  return o;
}

// --- subcommands -----------------------------------------------------------

struct ValidateArgs {
  std::string path, as_uninorm, lattice;
  bool emit_covers = false;
};

int run_validate(const ValidateArgs& a) {
  const std::string text = read_file(a.path);
  const FileKind kind = sniff(text);
  try {
    if (kind == FileKind::Lattice) {
      const Lattice L = parse_lattice(text);
      const auto cov = L.covers();
      std::cout << "lattice " << L.name() << ": " << L.size() << " elements, " << cov.size()
                << " covers, bottom " << L.label(L.bottom()) << ", top " << L.label(L.top()) << "\n";
      if (a.emit_covers) {
        std::cout << "digraph " << L.name() << " {\n";
        for (auto [x, y] : cov) std::cout << "  \"" << L.label(x) << "\" -> \"" << L.label(y) << "\";\n";
        std::cout << "}\n";
      }
      std::cout << "valid\n";
      return kPass;
    }
    if (kind == FileKind::Table) {
      const RawTable raw = parse_table_raw(text);
      LatticePtr lat = lattice_for(a.path, raw.lattice_name, a.lattice);
      const BinOpTable op = bind_table(raw, lat);
      std::cout << "table " << op.name() << " on " << lat->name() << ": " << op.size() << " x " << op.size()
                << (op.is_closed() ? ", closed" : ", not closed") << "\n";
      if (!a.as_uninorm.empty()) {
        if (!report_axioms(op, lat->at(a.as_uninorm))) throw Failed("not a uninorm");
      }
      std::cout << "valid\n";
      return kPass;
    }
    const RawUnary raw = parse_unary_raw(text);
    LatticePtr lat = lattice_for(a.path, raw.lattice_name, a.lattice);
    const UnaryOpTable u = bind_unary(raw, lat);
    std::cout << "unary " << u.name() << " on " << lat->name() << ": moves " << u.moved().size() << " elements\n";
    std::cout << "closure: " << yes(is_closure(u).holds) << "\ninterior: " << yes(is_interior(u).holds) << "\n";
    std::cout << "valid\n";
    return kPass;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Failed(e.what());
  }
}

struct ConstructArgs {
  RequestArgs req;
  std::string output, compare;
  bool check_conditions = false, verify = false;
  CheckArgs check;
};

int run_construct(const ConstructArgs& a, const Globals& g) {
  LatticePtr lat;
  const ConstructionRequest req = make_request(a.req, lat);
  const BinOpTable out = construct(req);
  const Resolved r = resolve(req);
  int code = kPass;
  if (a.output.empty()) std::cout << print_table(out);
  else write_file(a.output, print_table(out));
  if (!a.compare.empty()) {
    const BinOpTable ref = parse_table(read_file(a.compare), lat);
    const std::size_t agree = count_agreements(out, ref);
    const std::size_t total = out.size() * out.size();
    std::cout << "compare with " << ref.name() << ": " << agree << "/" << total << " cells agree\n";
    if (agree != total || !table_equal(out, ref)) code = kFail;
  }
  if (a.check_conditions) {
    const ConditionReport rep = check_conditions(req, make_options(a.check, g));
    print_report(rep, *lat);
    if (!rep.applicable() || !rep.holds()) code = kFail;
  }
  if (a.verify) {
    std::cout << "verification of " << out.name() << "\n";
    if (!report_axioms(out, r.e)) code = kFail;
  }
  return code;
}

int run_classify(const std::string& path, const std::string& e, const std::string& lattice) {
  auto [op, lat] = load_table(path, lattice);
  try {
    const ClassificationProfile p = classify(op, lat->at(e));
    std::cout << "is_uninorm=" << yes(p.is_uninorm) << "\nis_tnorm=" << yes(p.is_tnorm)
              << "\nis_tconorm=" << yes(p.is_tconorm) << "\nneutral_elements=" << format_set(*lat, p.neutral_elements)
              << "\nidempotent=" << yes(p.idempotent) << "\nconjunctive=" << yes(p.conjunctive)
              << "\ndisjunctive=" << yes(p.disjunctive) << "\nin_Umin_star=" << yes(p.in_Umin_star)
              << "\nin_Umax_star=" << yes(p.in_Umax_star) << "\nin_Ubot_star=" << yes(p.in_Ubot_star)
              << "\nin_Utop_star=" << yes(p.in_Utop_star) << "\n";
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NotAUninorm) throw;
    throw Failed(err.what());
  }
  return kPass;
}

int run_verify(const std::string& path, const std::string& neutral, const std::string& lattice) {
  auto [op, lat] = load_table(path, lattice);
  std::optional<Elem> e = neutral.empty() ? op.declared_neutral() : std::optional<Elem>(lat->at(neutral));
  if (!e) {
    const ElemSet ns = neutral_elements(op);
    if (ns.empty()) {
      std::cout << "no neutral element\n";
      return kFail;
    }
    e = ns.first();
  }
  return report_axioms(op, *e) ? kPass : kFail;
}

int run_conditions(const RequestArgs& ra, const CheckArgs& ca, const Globals& g) {
  LatticePtr lat;
  const ConstructionRequest req = make_request(ra, lat);
  const ConditionReport rep = check_conditions(req, make_options(ca, g));
  print_report(rep, *lat);
  return rep.applicable() && rep.holds() ? kPass : kFail;
}

struct SuiteArgs {
  std::string claim;
  CheckArgs check;
  bool serial = false;
  std::string dump, summary;
  std::size_t max_uninorms = 5000;
  std::size_t show = 3;
};

int run_suite(const SuiteArgs& a, const Globals& g) {
  std::vector<std::string> ids;
  if (a.claim == "all") ids = claim_ids();
  else if (is_claim(a.claim)) ids = {a.claim};
  else throw Error(ErrorCode::UnknownClaim, "no claim '" + a.claim + "'");

  SuiteConfig cfg;
  cfg.enumeration.max_elements = g.max_elements;
  cfg.enumeration.seed = g.seed;
  cfg.enumeration.max_uninorms_per_interval = a.max_uninorms;
  cfg.parallel = !a.serial;
  CheckArgs base = a.check;
  const std::vector<std::string> pars =
      a.check.parallel == "both" ? std::vector<std::string>{"IeA", "IaE"} : std::vector<std::string>{a.check.parallel};
  const std::vector<std::string> tops =
      a.check.top == "both" ? std::vector<std::string>{"a1", "lt1"} : std::vector<std::string>{a.check.top};
  const bool variants = pars.size() > 1 || tops.size() > 1;

  std::ostringstream records;
  bool all_pass = true;
  for (const auto& id : ids) {
    std::vector<std::string> passing;
    const Population pop = build_population(population_for(id), cfg.enumeration);
    for (const auto& par : pars)
      for (const auto& top : tops) {
        base.parallel = par;
        base.top = top;
        cfg.check = make_options(base, g);
        const IffResult r = run_claim(id, pop, cfg);
        const std::string tag = variants ? " [parallel-cond=" + par + " top=" + top + "]" : "";
        if (g.machine) std::cout << summary_record(r) << tag << "\n";
        else std::cout << format_report(r, a.show) << (variants ? "  reading:" + tag + "\n" : "");
        records << summary_record(r) << tag << "\n";
        if (r.passed()) passing.push_back("parallel-cond=" + par + " top=" + top);
        if (!a.dump.empty())
          for (std::size_t i = 0; i < r.counterexamples.size(); ++i)
            dump_counterexample(r.counterexamples[i], a.dump, id + "_" + par + "_" + top + "_" + std::to_string(i));
      }
    if (variants) {
      std::cout << id << ": readings with zero counterexamples:";
      if (passing.empty()) std::cout << " none";
      for (const auto& p : passing) std::cout << " {" << p << "}";
      std::cout << "\n";
    }
    if (passing.empty()) all_pass = false;
  }
  if (!a.summary.empty()) write_file(a.summary, records.str());
  return all_pass ? kPass : kFail;
}

struct EnumArgs {
  std::string what = "lattices";
  std::string lattice, lo, hi, e;
  bool print = false, no_dedupe = false;
  std::size_t max_uninorms = 5000;
};

int run_enum(const EnumArgs& a, const Globals& g) {
  EnumConfig cfg;
  cfg.max_elements = g.max_elements;
  cfg.seed = g.seed;
  cfg.dedupe_isomorphic = !a.no_dedupe;
  cfg.max_uninorms_per_interval = a.max_uninorms;
  if (a.what == "lattices") {
    std::vector<std::size_t> by_size(g.max_elements + 1, 0);
    for_each_lattice(cfg, [&](const LatticePtr& l) {
      ++by_size[l->size()];
      if (a.print) std::cout << print_lattice(*l) << "\n";
    });
    for (std::size_t n = 2; n < by_size.size(); ++n)
      std::cout << (g.machine ? "n=" : "lattices with ") << n << (g.machine ? " count=" : " elements: ") << by_size[n]
                << "\n";
    return kPass;
  }
  if (a.lattice.empty()) throw Error(ErrorCode::InvalidRequest, "enum " + a.what + " needs --lattice");
  LatticePtr lat = load_lattice(a.lattice);
  if (a.what == "closures" || a.what == "interiors") {
    const auto ops = a.what == "closures" ? all_closures(lat) : all_interiors(lat);
    std::cout << ops.size() << " " << a.what << " on " << lat->name() << "\n";
    if (a.print)
      for (const auto& u : ops) std::cout << print_unary(u) << "\n";
    return kPass;
  }
  const Elem lo = a.lo.empty() ? lat->bottom() : lat->at(a.lo);
  const Elem hi = a.hi.empty() ? lat->top() : lat->at(a.hi);
  if (a.e.empty()) throw Error(ErrorCode::InvalidRequest, "enum uninorms needs --e");
  const UninormSet s = enumerate_uninorms(lat, lat->interval(lo, hi), lat->at(a.e), cfg);
  std::cout << s.tables.size() << " uninorms on [" << lat->label(lo) << "," << lat->label(hi) << "] with e = " << a.e
            << (s.truncated ? " (truncated)" : "") << "\n";
  if (a.print)
    for (const auto& t : s.tables) std::cout << print_table(t) << "\n";
  return kPass;
}

struct ReconstructArgs {
  std::string mode, base, full, unary, output;
  std::string anchor = "a", bottom = "0", top = "1";
  bool all = false, not_umax = false;
};

int run_reconstruct(const ReconstructArgs& a) {
  ReconstructInput in;
  in.mode = parse_reconstruct_mode(a.mode);
  in.base = parse_table_raw(read_file(a.base));
  if (!a.full.empty()) in.full = parse_table_raw(read_file(a.full));
  if (!a.unary.empty()) in.unary = parse_unary_raw(read_file(a.unary));
  in.anchor = a.anchor;
  in.bottom = a.bottom;
  in.top = a.top;
  if (a.not_umax)
    in.accept = [](const BinOpTable& b) { return !classify(b, *b.declared_neutral()).in_Umax_star; };
  const ReconstructResult r = reconstruct_all(in);
  std::cout << r.solutions.size() << (r.capped ? "+" : "") << " minimal solution(s), " << r.nodes
            << " search nodes\n";
  if (r.solutions.empty()) return kFail;
  const std::size_t shown = a.all ? r.solutions.size() : 1;
  for (std::size_t i = 0; i < shown; ++i) {
    if (r.solutions.size() > 1) std::cout << "# solution " << i << "\n";
    std::cout << print_lattice(r.solutions[i]);
  }
  if (!a.output.empty()) write_file(a.output, print_lattice(r.solutions.front()));
  if (r.solutions.size() > 1) {
    std::cout << "ambiguous: " << r.solutions.size() << " minimal orders; the first has the fewest order pairs\n";
    return a.all ? kPass : kFail;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uninorms on bounded lattices"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--machine", g.machine, "summary-record output");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--max-elements", g.max_elements, "largest enumerated lattice");
  app.add_option("--witness-cap", g.witness_cap, "witnesses kept per condition");
  app.fallthrough();

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "parse and validate a .lat, .opt or .unm file");
  validate->add_option("path", va.path)->required();
  validate->add_option("--as-uninorm", va.as_uninorm, "check the uninorm axioms with this neutral element");
  validate->add_option("--lattice", va.lattice, "lattice for a table or unary file");
  validate->add_flag("--emit-covers", va.emit_covers, "print the cover relation as a dot digraph");

  ConstructArgs ca;
  auto* cons = app.add_subcommand("construct", "build a table on the whole lattice");
  add_request_args(cons, ca.req);
  cons->add_option("-o,--output", ca.output, "write the table here instead of stdout");
  cons->add_option("--compare", ca.compare, "reference table to compare cell by cell");
  cons->add_flag("--check-conditions", ca.check_conditions, "print the condition report");
  cons->add_flag("--verify", ca.verify, "check the uninorm axioms on the output");
  add_check_args(cons, ca.check, false);

  std::string cl_path, cl_e, cl_lat;
  auto* cls = app.add_subcommand("classify", "print the classification profile of a uninorm");
  cls->add_option("table", cl_path)->required();
  cls->add_option("e", cl_e)->required();
  cls->add_option("--lattice", cl_lat);

  std::string vf_path, vf_e, vf_lat;
  auto* ver = app.add_subcommand("verify", "check the uninorm axioms of a table");
  ver->add_option("table", vf_path)->required();
  ver->add_option("--neutral", vf_e, "neutral element (default: declared, else discovered)");
  ver->add_option("--lattice", vf_lat);

  RequestArgs co_req;
  CheckArgs co_check;
  auto* cond = app.add_subcommand("conditions", "evaluate the side conditions of a construction");
  add_request_args(cond, co_req);
  add_check_args(cond, co_check, false);

  SuiteArgs sa;
  auto* suite = app.add_subcommand("suite", "run an iff suite over enumerated instances");
  suite->add_option("claim", sa.claim, "claim id or 'all'")->required();
  add_check_args(suite, sa.check, true);
  suite->add_flag("--serial", sa.serial, "use the serial reference path");
  suite->add_option("--dump", sa.dump, "directory for counterexample bundles");
  suite->add_option("--summary", sa.summary, "write summary records to this file");
  suite->add_option("--max-uninorms", sa.max_uninorms, "cap per interval");
  suite->add_option("--show", sa.show, "counterexamples printed per claim");

  EnumArgs ea;
  auto* en = app.add_subcommand("enum", "enumerate lattices, uninorms, closures or interiors");
  en->add_option("what", ea.what)->check(CLI::IsMember({"lattices", "uninorms", "closures", "interiors"}));
  en->add_option("--lattice", ea.lattice);
  en->add_option("--lo", ea.lo);
  en->add_option("--hi", ea.hi);
  en->add_option("--e", ea.e);
  en->add_flag("--print", ea.print);
  en->add_flag("--no-dedupe", ea.no_dedupe);
  en->add_option("--max-uninorms", ea.max_uninorms);

  ReconstructArgs ra;
  auto* rec = app.add_subcommand("reconstruct", "recover a lattice from its tables");
  rec->add_option("mode", ra.mode, "u1, u3, u31, u32, s1 or base")->required();
  rec->add_option("base", ra.base)->required();
  rec->add_option("full", ra.full);
  rec->add_option("unary", ra.unary);
  rec->add_option("--anchor", ra.anchor);
  rec->add_option("--bottom", ra.bottom);
  rec->add_option("--top", ra.top);
  rec->add_option("-o,--output", ra.output);
  rec->add_flag("--all", ra.all, "print every minimal solution");
  rec->add_flag("--not-umax", ra.not_umax, "require the base table outside U_max*");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*validate) return run_validate(va);
    if (*cons) return run_construct(ca, g);
    if (*cls) return run_classify(cl_path, cl_e, cl_lat);
    if (*ver) return run_verify(vf_path, vf_e, vf_lat);
    if (*cond) return run_conditions(co_req, co_check, g);
    if (*suite) return run_suite(sa, g);
    if (*en) return run_enum(ea, g);
    if (*rec) return run_reconstruct(ra);
  } catch (const Failed& f) {
    std::cout << "FAIL: " << f.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
