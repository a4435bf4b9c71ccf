#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>

#include "acceptance.hpp"
#include "qhall/error.hpp"
#include "qhall/hall.hpp"
#include "qhall/presver.hpp"
#include "qhall/quantum.hpp"
#include "qhall/quiver_io.hpp"

namespace qhall::cli {

namespace {

struct Report {
  nlohmann::json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int code = kOk;
};

// Display width of UTF-8 text (ids such as "+×1" carry a two-byte sign).
std::size_t columns(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

void render(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.json.dump(2) << "\n";
    return;
  }
  if (format == "tsv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
      out << "\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
    return;
  }
  std::vector<std::size_t> width(r.header.size(), 0);
  for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = columns(r.header[i]);
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], columns(row[i]));
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - columns(cells[i]), ' ');
    }
    out << s << "\n";
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- options

struct Options {
  std::string output = "text";
  // quiver / field
  std::string quiver;
  bool pm = false;
  long q = 2;
  int cap = 6;
  int enum_dim = 8;
  int canon_dim = 6;
  // cartan
  std::string matrix;
  std::string from_quiver;
  int c2n = 0;
  // modules / hallnum / lperp
  std::string dim;
  std::string gamma, alpha, beta;
  std::string norm = "ext-card";
  // verify
  std::string relations;
  bool embedding = false;
  int max_dim = 3;
  int imaginary_scan = 3;
  bool timing = false;
  // lemmas and scalars
  std::string which;
  std::string n_range = "1..8", d_range = "1", m_range = "1..10";
  int m = 1, t = 0, d = 1, n = 1, i = 1;
  // reduce
  std::string expr;
  int exponent = 2;
  std::string orientation = "plus";
  std::string strategy = "leftmost";
  std::uint64_t seed = 0;
};

ValuedQuiver load(const std::string& path, bool pm) {
  if (path.empty()) fail(Errc::InvalidInput, "--quiver is required");
  const ValuedQuiver q = load_quiver(path);
  return pm ? pm_quiver(q) : q;
}

Caps caps_of(const Options& o) {
  Caps c;
  c.enum_dim = o.enum_dim;
  c.canon_dim = o.canon_dim;
  if (o.cap < 1 || o.enum_dim < 1 || o.canon_dim < 1) fail(Errc::InvalidInput, "caps must be positive");
  return c;
}

std::unique_ptr<HallCtx> make_ctx(const Options& o, bool pm) {
  return std::make_unique<HallCtx>(species_from_quiver(load(o.quiver, pm), o.q), o.cap, caps_of(o));
}

GreenNormalization norm_of(const std::string& s) {
  if (s == "ext-card") return GreenNormalization::ExtCard;
  if (s == "aut-order") return GreenNormalization::AutOrder;
  fail(Errc::InvalidInput, "normalization must be ext-card or aut-order");
}

Report matrix_report(const CartanMatrix& c) {
  Report r;
  r.json = {{"ids", c.ids()}, {"matrix", matrix_to_json(c.entries())}, {"symmetrizer", c.symmetrizer()}};
  r.header.push_back("id");
  for (const auto& id : c.ids()) r.header.push_back(id);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<std::string> row{c.ids()[i]};
    for (std::size_t j = 0; j < c.size(); ++j) row.push_back(std::to_string(c(i, j)));
    r.rows.push_back(std::move(row));
  }
  return r;
}

// ---------------------------------------------------------------- commands

Report cmd_cartan(const Options& o) {
  if (o.matrix.empty() == o.from_quiver.empty()) fail(Errc::InvalidInput, "give exactly one of --matrix, --from-quiver");
  CartanMatrix c = [&] {
    if (!o.matrix.empty()) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(o.matrix);
      } catch (const nlohmann::json::exception& e) {
        fail(Errc::InvalidInput, std::string("matrix is not JSON: ") + e.what());
      }
      if (j.is_array() && !j.empty() && !j[0].is_array()) j = nlohmann::json::array({j});  // "[2]" is 1x1
      return CartanMatrix(matrix_from_json(j));
    }
    return cartan_from_graph(load_quiver(o.from_quiver).graph());
  }();
  if (o.pm && o.c2n) fail(Errc::InvalidInput, "--pm and --c2n are exclusive");
  if (o.c2n < 0) fail(Errc::InvalidInput, "--c2n must be positive");
  if (o.pm) c = c_pm(c);
  if (o.c2n > 0) c = c_2n(c, o.c2n);
  return matrix_report(c);
}

Report cmd_modules(const Options& o) {
  auto ctx = make_ctx(o, o.pm);
  const DimVec d = parse_dimvec(o.dim);
  Report r;
  r.header = {"class", "orbit", "aut_order", "ext_self_card"};
  auto arr = nlohmann::json::array();
  for (const auto& c : ctx->category().iso_classes(d)) {
    const std::string ext = ext_self_card(c.rep).get_str();
    r.rows.push_back({c.id.to_string(), std::to_string(c.orbit_size), c.aut_order.get_str(), ext});
    arr.push_back({{"class", c.id.to_string()},
                   {"orbit_size", c.orbit_size},
                   {"aut_order", c.aut_order.get_str()},
                   {"ext_self_card", ext}});
  }
  r.json = {{"dims", d}, {"q", o.q}, {"count", arr.size()}, {"classes", arr}};
  return r;
}

Report cmd_hallnum(const Options& o) {
  auto ctx = make_ctx(o, o.pm);
  const IsoClassId g = IsoClassId::parse(o.gamma), a = IsoClassId::parse(o.alpha), b = IsoClassId::parse(o.beta);
  const long h = hall_number(ctx->category(), g, a, b);
  Report r;
  r.header = {"gamma", "alpha", "beta", "hall_number"};
  r.rows.push_back({g.to_string(), a.to_string(), b.to_string(), std::to_string(h)});
  r.json = {{"gamma", g.to_string()}, {"alpha", a.to_string()}, {"beta", b.to_string()}, {"hall_number", h}};
  return r;
}

Report cmd_lperp(const Options& o) {
  auto ctx = make_ctx(o, o.pm);
  const DimVec d = parse_dimvec(o.dim);
  const auto L = l_space(*ctx, d);
  const auto P = lperp(*ctx, d, norm_of(o.norm));
  Report r;
  r.header = {"space", "index", "norm", "element"};
  auto jl = nlohmann::json::array(), jp = nlohmann::json::array();
  for (std::size_t k = 0; k < L.size(); ++k) {
    r.rows.push_back({"L", std::to_string(k), "", L[k].to_string()});
    jl.push_back(L[k].to_json());
  }
  for (std::size_t k = 0; k < P.basis.size(); ++k) {
    r.rows.push_back({"Lperp", std::to_string(k), P.norms[k].to_string(), P.basis[k].to_string()});
    jp.push_back({{"element", P.basis[k].to_json()}, {"norm", P.norms[k].to_string()}});
  }
  r.json = {{"dims", d},
            {"dim_H", ctx->classes(d).size()},
            {"dim_L", L.size()},
            {"dim_Lperp", P.basis.size()},
            {"orthonormal", P.orthonormal},
            {"normalization", o.norm},
            {"L", jl},
            {"Lperp", jp}};
  return r;
}

Report cmd_verify(const Options& o) {
  if (o.relations.empty() && !o.embedding) fail(Errc::InvalidInput, "give --relations and/or --embedding");
  Report r;
  r.header = {"check", "instance", "status", "residue_terms", "millis"};
  r.json = nlohmann::json::object();
  bool ok = true;
  auto pm = make_ctx(o, o.pm);
  if (!o.relations.empty()) {
    RelationOptions opts;
    opts.timing = o.timing;
    opts.imaginary_scan = o.imaginary_scan;
    auto arr = nlohmann::json::array();
    for (const auto& res : verify_relations(*pm, parse_relations(o.relations), opts)) {
      ok &= res.status != "violated";
      r.rows.push_back({res.relation, res.instance.dump(), res.status, std::to_string(res.residue_terms),
                        std::to_string(res.millis)});
      arr.push_back(res.to_json());
    }
    r.json["relations"] = arr;
  }
  if (o.embedding) {
    if (!o.pm) fail(Errc::InvalidInput, "--embedding needs --pm (the base quiver is --quiver)");
    HallCtx base(species_from_quiver(load(o.quiver, false), o.q), o.cap, caps_of(o));
    const EmbeddingReport rep = verify_embedding(base, *pm, o.max_dim);
    ok &= rep.ok();
    for (const auto& c : rep.checks) {
      r.rows.push_back({"embedding",
                        to_string(c.sign) + " " + c.alpha.to_string() + " * " + c.beta.to_string() + " -> " +
                            c.gamma.to_string(),
                        c.ok() ? "ok" : "violated", "0", "0"});
    }
    r.json["embedding"] = rep.to_json();
  }
  r.json["ok"] = ok;
  r.code = ok ? kOk : kFailed;
  return r;
}

Report cmd_lemmas(const Options& o) {
  Report r;
  r.header = {"check", "case", "ok"};
  auto arr = nlohmann::json::array();
  bool all = true;
  auto add = [&](const std::string& check, nlohmann::json args, bool ok, std::string extra = {}) {
    all &= ok;
    std::string label;
    for (auto it = args.begin(); it != args.end(); ++it) {
      if (!label.empty()) label += " ";
      label += it.key() + "=" + it.value().dump();
    }
    r.rows.push_back({check, label + extra, yes_no(ok)});
    arr.push_back({{"check", check}, {"case", args}, {"ok", ok}});
  };
  const std::string& w = o.which;
  if (w == "41") {
    for (int d : parse_range(o.d_range))
      for (int n : parse_range(o.n_range)) {
        const auto res = check_lemma_41(n, d);
        add("41", {{"n", n}, {"d", d}}, res.ok, " steps=" + std::to_string(res.trace_len));
      }
  } else if (w == "42") {
    for (int n : parse_range(o.n_range)) {
      for (int i = 1; i <= n; ++i) {
        bool ok = false;
        try {
          ok = b_partial_sum(n, i) == b_closed_form(n, i);
        } catch (const Error& e) {
          if (e.code() != Errc::IdentityViolation) throw;
        }
        add("42", {{"n", n}, {"i", i}}, ok && check_identity_4_2(n, i));
      }
      add("42-last", {{"n", n}}, b_partial_sum(n, n) == -qint(2 * n + 1));
    }
  } else if (w == "s2") {
    for (int m : parse_range(o.m_range)) add("s2", {{"m", m}}, check_s2(m));
  } else if (w == "s2red") {
    for (int d : parse_range(o.d_range))
      for (int n : parse_range(o.n_range)) add("s2red", {{"n", n}, {"d", d}}, check_s2_reduction(n, d));
  } else if (w == "termA") {
    for (int n : parse_range(o.n_range))
      for (int p = 0; p <= n; ++p) add("termA", {{"n", n}, {"p", p}}, check_term_A(n, p));
  } else if (w == "chain") {
    for (int n : parse_range(o.n_range)) add("chain", {{"n", n}}, check_residual_chain(n));
  } else if (w == "23") {
    for (int d : parse_range(o.d_range)) {
      add("23", {{"d", d}, {"powers", "+"}}, reduce_mixed(serre_mixed_expr(1, d), d, 2).is_zero());
      add("23", {{"d", d}, {"powers", "-"}},
          reduce_mixed(serre_mixed_expr(1, d, true), d, 2, {Orientation::MinusPowers}).is_zero());
    }
  } else {
    fail(Errc::InvalidInput, "--which must be one of 41, 42, s2, s2red, termA, chain, 23");
  }
  r.json = {{"which", w}, {"results", arr}, {"ok", all}};
  r.code = all ? kOk : kFailed;
  return r;
}

Report scalar_report(const std::string& what, const LaurentPoly& p) {
  Report r;
  r.header = {what, "value"};
  r.rows.push_back({what, p.to_string()});
  r.json = {{what, p.to_string()}};
  return r;
}

Report cmd_lemma42(const Options& o) {
  if (o.n < 1 || o.i < 1 || o.i > o.n) fail(Errc::InvalidInput, "need 1 <= i <= n");
  const LaurentPoly partial = b_partial_sum(o.n, o.i);
  Report r;
  r.header = {"n", "i", "partial_sum", "closed_form", "equal"};
  std::string closed = "not divisible by [n]";
  bool eq = false;
  try {
    const LaurentPoly c = b_closed_form(o.n, o.i);
    closed = c.to_string();
    eq = c == partial;
  } catch (const Error& e) {
    if (e.code() != Errc::IdentityViolation) throw;
  }
  r.rows.push_back({std::to_string(o.n), std::to_string(o.i), partial.to_string(), closed, yes_no(eq)});
  r.json = {{"n", o.n}, {"i", o.i}, {"partial_sum", partial.to_string()}, {"closed_form", closed}, {"equal", eq}};
  r.code = eq ? kOk : kFailed;
  return r;
}

Report cmd_reduce(const Options& o) {
  ReduceOptions ro;
  if (o.orientation == "plus") {
    ro.orientation = Orientation::PlusPowers;
  } else if (o.orientation == "minus") {
    ro.orientation = Orientation::MinusPowers;
  } else {
    fail(Errc::InvalidInput, "--orientation must be plus or minus");
  }
  if (o.strategy == "leftmost") {
    ro.strategy = Strategy::Leftmost;
  } else if (o.strategy == "random") {
    ro.strategy = Strategy::Random;
  } else {
    fail(Errc::InvalidInput, "--strategy must be leftmost or random");
  }
  ro.seed = o.seed;
  ReductionTrace trace;
  const NormalElem e = reduce_mixed(parse_nc_expr(o.expr), o.d, o.exponent, ro, &trace);
  const bool plus = ro.orientation == Orientation::PlusPowers;
  const std::string single = plus ? "E-" : "E+", pw = plus ? "E+" : "E-";
  Report r;
  r.header = {"K", single, pw, "coeff"};
  auto arr = nlohmann::json::array();
  for (const auto& [k, c] : e.terms()) {
    r.rows.push_back({std::to_string(k.torus), std::to_string(k.single), std::to_string(k.power), c.to_string()});
    arr.push_back({{"torus", k.torus}, {"single", k.single}, {"power", k.power}, {"coeff", c.to_string()}});
  }
  r.json = {{"normal_form", e.to_string(single, pw)},
            {"terms", arr},
            {"steps", trace.steps.size()},
            {"commutator_steps", trace.count(Rule::Commutator)}};
  return r;
}

Report cmd_selftest(std::ostream& err) {
  const auto results = run_acceptance(&err);
  Report r;
  r.header = {"criterion", "status", "name", "detail"};
  auto arr = nlohmann::json::array();
  bool all = true;
  for (const auto& c : results) {
    all &= c.pass;
    r.rows.push_back({std::to_string(c.id), c.pass ? "PASS" : "FAIL", c.name, c.detail});
    arr.push_back({{"criterion", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  r.json = {{"criteria", arr}, {"ok", all}};
  r.code = all ? kOk : kFailed;
  return r;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case Errc::CapExceeded: return kCapExceeded;
    case Errc::RelationViolated:
    case Errc::IdentityViolation: return kFailed;
    default: return kBadInput;
  }
}

}  // namespace

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  auto num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail(Errc::InvalidInput, "bad range '" + text + "'");
    }
  };
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(part));
      continue;
    }
    const int a = num(part.substr(0, dots)), b = num(part.substr(dots + 2));
    if (a > b) fail(Errc::InvalidInput, "empty range '" + part + "'");
    for (int k = a; k <= b; ++k) out.push_back(k);
  }
  if (out.empty()) fail(Errc::InvalidInput, "empty range");
  for (int v : out)
    if (v < 1) fail(Errc::InvalidInput, "range values must be positive");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact quantum-group and Ringel-Hall algebra computations over small finite fields", "qhall"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", o.output, "Report format")->check(CLI::IsMember({"json", "tsv", "text"}));

  auto field_opts = [&](CLI::App* s) {
    s->add_option("--quiver", o.quiver, "Quiver spec JSON file");
    s->add_flag("--pm", o.pm, "Use the doubled quiver of --quiver");
    s->add_option("--q", o.q, "Field order");
    s->add_option("--cap", o.cap, "Largest total k-dimension of a product");
    s->add_option("--enum-dim", o.enum_dim, "Largest k-dimension for class enumeration");
    s->add_option("--canon-dim", o.canon_dim, "Largest k-dimension for classifying modules");
  };

  auto* cartan = app.add_subcommand("cartan", "Cartan matrices and block constructions");
  cartan->add_option("--matrix", o.matrix, "Matrix as JSON, e.g. \"[[2,-1],[-1,2]]\"");
  cartan->add_option("--from-quiver", o.from_quiver, "Quiver spec JSON file");
  cartan->add_flag("--pm", o.pm, "Doubled matrix [[C,-2],[-2,C]]");
  cartan->add_option("--c2n", o.c2n, "Block matrix [[C,-2n],[-2n,C]]");

  auto* modules = app.add_subcommand("modules", "Isomorphism classes of a dimension vector");
  field_opts(modules);
  modules->add_option("--dim", o.dim, "Dimension vector, e.g. \"1,1\"")->required();

  auto* hallnum = app.add_subcommand("hallnum", "Hall number g^gamma_{alpha,beta}");
  field_opts(hallnum);
  hallnum->add_option("--gamma", o.gamma)->required();
  hallnum->add_option("--alpha", o.alpha)->required();
  hallnum->add_option("--beta", o.beta)->required();

  auto* lperp_cmd = app.add_subcommand("lperp", "L_nu and its orthogonal complement");
  field_opts(lperp_cmd);
  lperp_cmd->add_option("--dim", o.dim)->required();
  lperp_cmd->add_option("--norm", o.norm, "ext-card or aut-order");

  auto* verify = app.add_subcommand("verify", "Relation suite and embedding checks");
  field_opts(verify);
  verify->add_option("--relations", o.relations, "Comma list of 1+,2+,1-,2-,1pm,2pm,3pm or all");
  verify->add_flag("--embedding", o.embedding, "Check the +/- embeddings of the base quiver");
  verify->add_option("--max-dim", o.max_dim, "Largest total k-dimension for embedding triples");
  verify->add_option("--imaginary-scan", o.imaginary_scan, "Largest k-dimension scanned for imaginary generators");
  verify->add_flag("--timing", o.timing, "Record wall-clock millis in the report");

  auto* lemmas = app.add_subcommand("lemmas", "Symbolic identity checks");
  lemmas->add_option("--which", o.which, "41, 42, s2, s2red, termA, chain or 23")->required();
  lemmas->add_option("--n", o.n_range, "Range, e.g. 1..8");
  lemmas->add_option("--d", o.d_range, "Range of d");
  lemmas->add_option("--m", o.m_range, "Range of m");

  auto* qint_cmd = app.add_subcommand("qint", "Quantum integer [m]_d");
  qint_cmd->add_option("--m", o.m)->required();
  qint_cmd->add_option("--d", o.d);

  auto* qbinom_cmd = app.add_subcommand("qbinom", "Quantum binomial [m choose t]_d");
  qbinom_cmd->add_option("--m", o.m)->required();
  qbinom_cmd->add_option("--t", o.t)->required();
  qbinom_cmd->add_option("--d", o.d);

  auto* lemma42 = app.add_subcommand("lemma42", "Partial sum B(n,i) against its closed form");
  lemma42->add_option("--n", o.n)->required();
  lemma42->add_option("--i", o.i)->required();

  auto* reduce = app.add_subcommand("reduce", "Normal form of an expression in E+, E-, K, K-");
  reduce->add_option("--expr", o.expr, "e.g. \"(1) E+ E- ; (-1) E- E+\"")->required();
  reduce->add_option("--d", o.d);
  reduce->add_option("--exponent", o.exponent, "Torus weight multiplier (even)");
  reduce->add_option("--orientation", o.orientation, "plus or minus");
  reduce->add_option("--strategy", o.strategy, "leftmost or random");
  reduce->add_option("--seed", o.seed);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    Report r;
    if (cartan->parsed()) {
      r = cmd_cartan(o);
    } else if (modules->parsed()) {
      r = cmd_modules(o);
    } else if (hallnum->parsed()) {
      r = cmd_hallnum(o);
    } else if (lperp_cmd->parsed()) {
      r = cmd_lperp(o);
    } else if (verify->parsed()) {
      r = cmd_verify(o);
    } else if (lemmas->parsed()) {
      r = cmd_lemmas(o);
    } else if (qint_cmd->parsed()) {
      r = scalar_report("qint", qint(o.m, o.d));
    } else if (qbinom_cmd->parsed()) {
      r = scalar_report("qbinom", qbinom(o.m, o.t, o.d));
    } else if (lemma42->parsed()) {
      r = cmd_lemma42(o);
    } else if (reduce->parsed()) {
      r = cmd_reduce(o);
    } else if (selftest->parsed()) {
      r = cmd_selftest(err);
    }
    render(r, o.output, out);
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: InvalidInput: " << e.what() << "\n";
    return kBadInput;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run_cli(args, out, err);
}

}  // namespace qhall::cli
