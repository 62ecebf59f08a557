#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "zz/error.hpp"
#include "zz/generators.hpp"
#include "zz/serialize.hpp"
#include "zz/spectral.hpp"
#include "zz/tower.hpp"
#include "zz/zigzag.hpp"

namespace zz::cli {

namespace {

namespace fs = std::filesystem;

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw FormatError("standard input can only be read once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot read " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  void write(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot write " + path);
    f << text;
  }

  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

// Graph paths inside a document are taken relative to the document.
GraphResolver resolver_near(const std::string& doc_path) {
  fs::path dir = doc_path == "-" ? fs::path() : fs::path(doc_path).parent_path();
  return [dir](const std::string& ref) {
    fs::path p(ref);
    if (p.is_relative() && !dir.empty()) p = dir / p;
    return read_graph_file(p.string());
  };
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string opt_real(const std::optional<double>& x) { return x ? format_real(*x) : "-"; }

template <class T>
std::string opt_int(const std::optional<T>& x) {
  return x ? std::to_string(*x) : "-";
}

std::string rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string ids(const std::vector<VertexId>& v) {
  std::string s;
  for (const auto& id : v) s += (s.empty() ? "" : " ") + id.to_string();
  return s;
}

// Why m is not a covering map.
std::string covering_witness(const VertexMap& m) {
  const auto& a = m.domain();
  const auto& b = m.codomain();
  for (const auto& e : a.edges())
    if (!b.adjacent(m(e.u), m(e.v)))
      return "edge {" + a.id(e.u).to_string() + "," + a.id(e.v).to_string() +
             "} maps to non-edge {" + m.image_id(e.u).to_string() + "," +
             m.image_id(e.v).to_string() + "}";
  for (std::size_t x = 0; x < a.vertex_count(); ++x) {
    std::vector<std::size_t> image;
    for (auto y : a.neighbors(x)) image.push_back(m(y));
    std::sort(image.begin(), image.end());
    auto target = b.neighbors(m(x));
    if (!std::equal(image.begin(), image.end(), target.begin(), target.end())) {
      std::vector<VertexId> got, want;
      for (auto v : image) got.push_back(b.id(v));
      for (auto v : target) want.push_back(b.id(v));
      return "vertex " + a.id(x).to_string() + ": neighbours map to [" + ids(got) +
             "] but " + m.image_id(x).to_string() + " has neighbours [" + ids(want) + "]";
    }
  }
  return {};
}

struct LabelingArgs {
  std::string path;
  std::string constant;
};

void add_labeling_options(CLI::App* cmd, LabelingArgs& args) {
  auto* l = cmd->add_option("-l,--labeling", args.path, "Labeling JSON file");
  auto* c = cmd->add_option("--constant", args.constant, "Label every dart with LABEL");
  l->excludes(c);
  c->excludes(l);
}

HLabeling load_labeling(Io& io, const LabelingArgs& args, const Graph& g, const Graph& h) {
  if (!args.constant.empty()) return HLabeling::constant(g, h, parse_atom(args.constant));
  if (args.path.empty()) throw PreconditionError("give a labeling with -l FILE or --constant LABEL");
  return read_labeling_json(io.read(args.path), g, h, resolver_near(args.path));
}

Graph load_graph(Io& io, const std::string& path) { return read_graph(io.read(path)); }

struct Options {
  // gen
  std::string kind;
  std::vector<std::int64_t> params;
  std::string format = "json";
  // shared
  std::string output = "-";
  std::string graph;
  std::string labels;
  LabelingArgs labeling;
  bool json = false;
  // spectrum
  bool normalized = false;
  // check / lift
  std::string map, from, to, product;
  std::string out_dir;
  // tower
  std::size_t depth = 0;
  std::size_t budget = TowerOptions{}.vertex_budget;
  std::size_t spectral_cap = TowerOptions{}.spectral_cap;
  std::string report;
  // folner
  std::string chain;
  // export
  bool as_dot = false, as_json = false, as_edgelist = false;
};

int cmd_gen(Io& io, const Options& o) {
  auto g = gen::generate(o.kind, o.params);
  io.write(o.output, write_graph(g, parse_graph_format(o.format)));
  return kOk;
}

int cmd_product(Io& io, const Options& o) {
  auto g = load_graph(io, o.graph);
  auto h = load_graph(io, o.labels);
  auto z = zigzag_product(g, h, load_labeling(io, o.labeling, g, h));
  io.write(o.output, write_product_json(z));
  return kOk;
}

int cmd_spectrum(Io& io, const Options& o) {
  auto g = load_graph(io, o.graph);
  auto r = o.normalized ? normalized_laplacian_spectrum(g) : adjacency_spectrum(g);
  if (o.json) {
    io.write(o.output, write_spectrum_json(r));
    return kOk;
  }
  std::string values;
  for (double x : r.eigenvalues) values += (values.empty() ? "" : " ") + format_real(x);
  io.write(o.output, table({{"operator", to_string(r.kind)},
                            {"vertices", std::to_string(g.vertex_count())},
                            {"rho", format_real(r.rho)},
                            {"lambda2", opt_real(r.lambda2)},
                            {"gap", opt_real(r.gap)},
                            {"eigenvalues", values}}));
  return kOk;
}

VertexMap load_map(Io& io, const Options& o, std::optional<Graph> to = std::nullopt) {
  std::optional<Graph> from;
  if (!o.from.empty()) from = load_graph(io, o.from);
  if (!to && !o.to.empty()) to = load_graph(io, o.to);
  return read_vertex_map(io.read(o.map), from, to, resolver_near(o.map));
}

int cmd_check_cover(Io& io, const Options& o) {
  auto m = load_map(io, o);
  auto witness = covering_witness(m);
  bool ok = witness.empty();
  std::ostringstream s;
  s << "covering map: " << (ok ? "yes" : "no") << "\n";
  if (!ok) s << "witness: " << witness << "\n";
  io.write("-", s.str());
  return ok ? kOk : kVerificationFailed;
}

int cmd_check_comb(Io& io, const Options& o) {
  auto m = load_map(io, o);
  auto c = is_combinatorial_cover(m);
  std::ostringstream s;
  if (c) {
    s << "combinatorial cover: index " << *c.index << "\n";
  } else {
    s << "combinatorial cover: no\n"
      << "violation: " << c.message << "\n";
    if (!c.witness.empty()) s << "witness: " << ids(c.witness) << "\n";
  }
  io.write("-", s.str());
  return c ? kOk : kVerificationFailed;
}

int cmd_check_pi(Io& io, const Options& o) {
  auto z = read_product_json(io.read(o.product), resolver_near(o.product));
  auto r = pi_combinatorial_cover_check(z);
  std::string msg = table({{"valency", std::to_string(r.valency)},
                           {"expected index", std::to_string(r.expected_index)},
                           {"index", opt_int(r.check.index)},
                           {"verdict", r.ok() ? "pass" : "fail"}});
  if (!r.ok() && !r.check.message.empty()) msg += "violation: " + r.check.message + "\n";
  if (!r.ok() && !r.check.witness.empty()) msg += "witness: " + ids(r.check.witness) + "\n";
  io.write("-", msg);
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_lift(Io& io, const Options& o, bool combinatorial) {
  auto z = read_product_json(io.read(o.product), resolver_near(o.product));
  auto p = load_map(io, o, z.base());
  auto cl = combinatorial ? lift_combinatorial_cover(p, z) : lift_covering(p, z);
  std::vector<std::vector<std::string>> rows{
      {"lifted vertices", std::to_string(cl.lifted.product().vertex_count())},
      {"lifted edges", std::to_string(cl.lifted.product().edge_count())},
      {combinatorial ? "combinatorial cover" : "covering map", cl.verified ? "yes" : "no"}};
  if (combinatorial) rows.push_back({"index", opt_int(cl.index)});
  io.write("-", table(rows));
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    io.write((fs::path(o.out_dir) / "labeling.json").string(), write_labeling_json(cl.beta));
    io.write((fs::path(o.out_dir) / "product.json").string(), write_product_json(cl.lifted));
    io.write((fs::path(o.out_dir) / "phat.json").string(), write_vertex_map_json(cl.phat));
  }
  return cl.verified ? kOk : kVerificationFailed;
}

int cmd_tower(Io& io, const Options& o) {
  if (o.depth < 2) throw PreconditionError("tower report needs --depth >= 2");
  auto g = load_graph(io, o.graph);
  auto h = load_graph(io, o.labels);
  auto a = load_labeling(io, o.labeling, g, h);
  auto tower = build_tower(g, h, a, o.depth, {.vertex_budget = o.budget, .spectral_cap = o.spectral_cap});
  auto r = tower_spectrum_check(tower);
  auto json = write_tower_report_json(r);
  if (!o.report.empty()) io.write(o.report, json);
  if (o.json) {
    io.write("-", json);
  } else {
    std::vector<std::vector<std::string>> levels{
        {"level", "|V|", "|E|", "rho", "lambda", "gap", "cover-index"}};
    for (const auto& l : r.levels)
      levels.push_back({std::to_string(l.index), std::to_string(l.vertices), std::to_string(l.edges),
                        opt_real(l.rho), opt_real(l.lambda2), opt_real(l.gap), opt_int(l.cover_index)});
    std::vector<std::vector<std::string>> pairs{
        {"levels", "cover", "labeling", "edges", "scaling", "containment", "gap"}};
    for (const auto& p : r.pairs)
      pairs.push_back({std::to_string(p.from) + "->" + std::to_string(p.to), to_string(p.cover),
                       to_string(p.labeling), to_string(p.edge_count), to_string(p.scaling),
                       to_string(p.containment), to_string(p.gap_scaling)});
    std::string text = "valency " + std::to_string(r.valency) + "\n\n" + table(levels) + "\n" + table(pairs);
    if (r.truncated) text += "\ntruncated: vertex budget " + std::to_string(o.budget) + " reached\n";
    io.write("-", text);
  }
  return r.all_passed() ? kOk : kVerificationFailed;
}

int cmd_folner(Io& io, const Options& o) {
  auto g = load_graph(io, o.graph);
  auto h = load_graph(io, o.labels);
  auto a = load_labeling(io, o.labeling, g, h);
  auto chain = read_chain(io.read(o.chain), g);
  auto r = folner_product_check(g, h, a, chain);
  if (o.json) {
    io.write("-", write_folner_report_json(r));
  } else {
    const auto d2 = r.max_label_degree * r.max_label_degree;
    std::vector<std::vector<std::string>> rows{
        {"|F|", "|dF|", "ratio", "|FxH|", "|d(FxH)|", "D^2|dF|", "product-ratio", "bound"}};
    for (const auto& e : r.entries)
      rows.push_back({std::to_string(e.size), std::to_string(e.boundary), rational(e.ratio),
                      std::to_string(e.product_size), std::to_string(e.product_boundary),
                      std::to_string(d2 * e.boundary),
                      e.product_ratio ? rational(*e.product_ratio) : "-", e.bound_holds ? "pass" : "fail"});
    io.write("-", "max label degree " + std::to_string(r.max_label_degree) + "\n\n" + table(rows) +
                      "\nbound: " + (r.bound_holds ? "pass" : "fail") +
                      "\nproduct ratios non-increasing: " +
                      (r.product_ratios_non_increasing ? "yes" : "no") + "\n");
  }
  return r.bound_holds ? kOk : kVerificationFailed;
}

int cmd_export(Io& io, const Options& o) {
  int chosen = int(o.as_dot) + int(o.as_json) + int(o.as_edgelist);
  if (chosen != 1) throw PreconditionError("choose exactly one of --dot, --json, --edgelist");
  auto g = load_graph(io, o.graph);
  auto f = o.as_dot ? GraphFormat::dot : o.as_json ? GraphFormat::json : GraphFormat::edge_list;
  io.write(o.output, write_graph(g, f));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Generalized zig-zag products of labeled graphs", "zz"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a standard graph");
  gen->add_option("kind", o.kind, "cycle, path, complete, hypercube, empty or cayley_cyclic")->required();
  gen->add_option("params", o.params, "Size, or n followed by generators for cayley_cyclic")->required();
  gen->add_option("-o,--output", o.output, "Output file");
  gen->add_option("--format", o.format, "json, edgelist or dot")
      ->check(CLI::IsMember({"json", "edgelist", "dot"}));

  auto* product = app.add_subcommand("product", "Build the zig-zag product");
  product->add_option("-g,--graph", o.graph, "Base graph")->required();
  product->add_option("-H,--labels", o.labels, "Label graph")->required();
  add_labeling_options(product, o.labeling);
  product->add_option("-o,--output", o.output, "Output file");

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency or normalized Laplacian spectrum");
  spectrum->add_option("-g,--graph", o.graph, "Graph")->required();
  spectrum->add_flag("--normalized", o.normalized, "Normalized Laplacian");
  spectrum->add_flag("--json", o.json, "Machine-readable output");
  spectrum->add_option("-o,--output", o.output, "Output file");

  auto* check = app.add_subcommand("check", "Verify a map or a product projection");
  check->require_subcommand(1);
  auto* cover = check->add_subcommand("cover", "Is the map a covering map?");
  auto* comb = check->add_subcommand("comb-cover", "Is the map a combinatorial cover?");
  for (auto* c : {cover, comb}) {
    c->add_option("--map", o.map, "Vertex map")->required();
    c->add_option("--from", o.from, "Domain graph");
    c->add_option("--to", o.to, "Codomain graph");
  }
  auto* pi = check->add_subcommand("pi", "Is the projection a combinatorial cover of index n^2?");
  pi->add_option("-p,--product", o.product, "Product JSON")->required();

  auto* lift = app.add_subcommand("lift", "Lift a cover through a product");
  lift->require_subcommand(1);
  auto* lift_cover = lift->add_subcommand("cover", "Lift a covering map");
  auto* lift_comb = lift->add_subcommand("comb-cover", "Lift a combinatorial cover");
  for (auto* c : {lift_cover, lift_comb}) {
    c->add_option("-p,--map", o.map, "Cover of the product's base")->required();
    c->add_option("-z,--product", o.product, "Product JSON")->required();
    c->add_option("--from", o.from, "Covering graph, when the map does not embed it");
    c->add_option("-o,--output-dir", o.out_dir, "Write labeling.json, product.json and phat.json here");
  }

  auto* tower = app.add_subcommand("tower", "Build the iterated product and check its spectra");
  tower->add_option("-g,--graph", o.graph, "Base graph")->required();
  tower->add_option("-H,--labels", o.labels, "Label graph")->required();
  add_labeling_options(tower, o.labeling);
  tower->add_option("--depth", o.depth, "Number of levels")->required();
  tower->add_option("--budget", o.budget, "Largest level size");
  tower->add_option("--spectral-cap", o.spectral_cap, "Largest level whose spectra are computed");
  tower->add_option("--report", o.report, "Write the JSON report here");
  tower->add_flag("--json", o.json, "Machine-readable output");

  auto* folner = app.add_subcommand("folner", "Boundary bound for products of a chain of subsets");
  folner->add_option("-g,--graph", o.graph, "Base graph")->required();
  folner->add_option("-H,--labels", o.labels, "Label graph")->required();
  add_labeling_options(folner, o.labeling);
  folner->add_option("--chain", o.chain, "Nested vertex subsets")->required();
  folner->add_flag("--json", o.json, "Machine-readable output");

  auto* exp = app.add_subcommand("export", "Convert a graph");
  exp->add_option("-g,--graph", o.graph, "Graph")->required();
  exp->add_flag("--dot", o.as_dot, "DOT");
  exp->add_flag("--json", o.as_json, "JSON");
  exp->add_flag("--edgelist", o.as_edgelist, "Edge list");
  exp->add_option("-o,--output", o.output, "Output file");

  std::vector<const char*> argv{"zz"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Io io(in, out);
  try {
    if (app.got_subcommand(gen)) return cmd_gen(io, o);
    if (app.got_subcommand(product)) return cmd_product(io, o);
    if (app.got_subcommand(spectrum)) return cmd_spectrum(io, o);
    if (cover->parsed()) return cmd_check_cover(io, o);
    if (comb->parsed()) return cmd_check_comb(io, o);
    if (pi->parsed()) return cmd_check_pi(io, o);
    if (lift_cover->parsed()) return cmd_lift(io, o, false);
    if (lift_comb->parsed()) return cmd_lift(io, o, true);
    if (app.got_subcommand(tower)) return cmd_tower(io, o);
    if (app.got_subcommand(folner)) return cmd_folner(io, o);
    if (app.got_subcommand(exp)) return cmd_export(io, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace zz::cli
