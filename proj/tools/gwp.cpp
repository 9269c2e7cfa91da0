// gwp: command-line front end for the graph W*-probability engine.
//
// Exit codes: 0 success, 1 usage error, 2 parse/format error, 3 domain error.

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwp/compress.hpp"
#include "gwp/error.hpp"
#include "gwp/fock.hpp"
#include "gwp/freeprob.hpp"
#include "gwp/io.hpp"
#include "gwp/ncpart.hpp"

namespace {

  using gwp::io::json;

  constexpr int exit_usage  = 1;
  constexpr int exit_parse  = 2;
  constexpr int exit_domain = 3;

  struct Options {
    std::string              format = "json";
    std::string              graph;
    std::string              var;
    std::string              var2;
    std::string              word;
    std::string              mode = "ck";
    std::string              vertices;
    std::string              vertex;
    std::string              kind = "moment";
    std::vector<std::string> d_files;
    std::size_t              max_len       = 0;
    std::size_t              n             = 0;
    std::size_t              max_order     = 0;
    std::size_t              order         = 0;
    std::size_t              trunc         = 0;
    bool                     contributions = false;
  };

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  bool is_scalar(json const& j) {
    return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im");
  }

  bool is_scalar_pair(json const& j) {
    return j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string();
  }

  std::string scalar_text(std::string const& re, std::string const& im) {
    if (im == "0") {
      return re;
    }
    std::string sign = im.front() == '-' ? "" : "+";
    return (re == "0" ? "" : re + sign) + im + "i";
  }

  std::string cell(json const& j) {
    if (j.is_string()) {
      return j.get<std::string>();
    }
    if (is_scalar(j)) {
      return scalar_text(j["re"], j["im"]);
    }
    if (is_scalar_pair(j)) {
      return scalar_text(j[0], j[1]);
    }
    if (j.is_object() && j.empty()) {
      return "0";
    }
    if (j.is_array() && std::all_of(j.begin(), j.end(), [](json const& v) { return v.is_object(); })) {
      std::string out;
      for (auto const& v : j) {
        out += (out.empty() ? "" : " | ") + cell(v);
      }
      return out;
    }
    if (j.is_object() && !j.empty()
        && std::all_of(j.begin(), j.end(), [](json const& v) { return is_scalar(v); })) {
      std::string out;
      for (auto const& [k, v] : j.items()) {
        out += (out.empty() ? "" : ", ") + k + ": " + cell(v);
      }
      return out;
    }
    if (j.is_array() && std::all_of(j.begin(), j.end(), [](json const& v) { return v.is_string(); })) {
      std::string out;
      for (auto const& v : j) {
        out += (out.empty() ? "" : " ") + v.get<std::string>();
      }
      return out;
    }
    if (j.is_object()) {
      std::string out;
      for (auto const& [k, v] : j.items()) {
        out += (out.empty() ? "" : "; ") + k + " = " + cell(v);
      }
      return out;
    }
    return j.dump();
  }

  std::string aligned(std::vector<std::vector<std::string>> const& rows, std::string const& indent) {
    std::vector<std::size_t> width;
    for (auto const& r : rows) {
      width.resize(std::max(width.size(), r.size()));
      for (std::size_t c = 0; c < r.size(); ++c) {
        width[c] = std::max(width[c], r[c].size());
      }
    }
    std::ostringstream out;
    for (auto const& r : rows) {
      out << indent;
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c + 1 == r.size()) {
          out << r[c];
        } else {
          out << std::left << std::setw(static_cast<int>(width[c])) << r[c] << "  ";
        }
      }
      out << '\n';
    }
    return out.str();
  }

  // An array of objects none of which is a scalar or a diagonal element.
  bool is_record_list(json const& j) {
    return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](json const& v) {
             return v.is_object() && !is_scalar(v) && !v.empty()
                    && std::any_of(v.begin(), v.end(), [](json const& f) { return !is_scalar(f); });
           });
  }

  std::string record_table(json const& records) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string>              header;
    for (auto const& [k, v] : records.front().items()) {
      header.push_back(k);
    }
    rows.push_back(header);
    for (auto const& r : records) {
      std::vector<std::string> row;
      for (auto const& k : header) {
        json const& f = r.contains(k) ? r.at(k) : json();
        if (f.is_array() && std::all_of(f.begin(), f.end(), [](json const& x) { return x.is_string(); })) {
          std::string joined;
          for (auto const& x : f) {
            joined += (joined.empty() ? "" : "; ") + x.get<std::string>();
          }
          row.push_back(joined.empty() ? "-" : joined);
        } else {
          row.push_back(cell(f));
        }
      }
      rows.push_back(row);
    }
    return aligned(rows, "  ");
  }

  std::string render_table(json const& j) {
    if (is_record_list(j)) {
      return record_table(j);
    }
    std::vector<std::vector<std::string>> rows;
    if (j.is_array()) {
      bool const series = std::all_of(j.begin(), j.end(), [](json const& v) {
        return is_scalar_pair(v) || is_scalar(v) || v.is_object();
      });
      if (!series) {
        std::string out;
        for (auto const& v : j) {
          out += cell(v) + "\n";
        }
        return out;
      }
      for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back({"n=" + std::to_string(i + 1), cell(j[i])});
      }
    } else if (j.is_object() && !is_scalar(j)) {
      std::string nested;
      for (auto const& [k, v] : j.items()) {
        if (is_record_list(v)) {
          nested += k + ":\n" + record_table(v);
        } else {
          rows.push_back({k, cell(v)});
        }
      }
      if (rows.empty() && nested.empty()) {
        return "(zero)\n";
      }
      return aligned(rows, "") + nested;
    } else {
      return cell(j) + "\n";
    }
    if (rows.empty()) {
      return "(zero)\n";
    }
    return aligned(rows, "");
  }

  std::string render(json const& j, std::string const& format) {
    return format == "table" ? render_table(j) : j.dump() + "\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  gwp::VertexId vertex_by_name(gwp::Graph const& g, std::string const& name) {
    auto v = g.find_vertex(name);
    if (!v) {
      throw gwp::DomainError("unknown vertex '" + name + "'");
    }
    return *v;
  }

  std::vector<std::string> split_commas(std::string const& text) {
    std::vector<std::string> out;
    std::stringstream        in(text);
    std::string              item;
    while (std::getline(in, item, ',')) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      if (!item.empty()) {
        out.push_back(item);
      }
    }
    return out;
  }

  gwp::MomentRequest request(Options const& o) {
    auto a = gwp::io::load_variable_file(o.var);
    if (o.n == 0) {
      throw gwp::DomainError("order -n must be at least 1");
    }
    auto req = gwp::MomentRequest::trivial(std::vector<gwp::RandomVariable>(o.n, a));
    if (!o.d_files.empty()) {
      if (o.d_files.size() != o.n) {
        throw gwp::DomainError("expected " + std::to_string(o.n) + " --d files, got "
                               + std::to_string(o.d_files.size()));
      }
      for (std::size_t i = 0; i < o.n; ++i) {
        req.d[i] = gwp::io::load_diagonal_file(o.d_files[i], *a.graph());
      }
    }
    return req;
  }

  json cmd_paths(Options const& o) {
    auto g   = gwp::io::load_graph_file(o.graph);
    json out = json::array();
    for (auto const& w : gwp::enumerate_paths(*g, o.max_len)) {
      out.push_back(gwp::to_string(*g, w));
    }
    return out;
  }

  json cmd_reduce(Options const& o) {
    auto g       = gwp::io::load_graph_file(o.graph);
    auto letters = gwp::io::parse_word_literal(*g, o.word);
    auto mode    = o.mode == "toeplitz" ? gwp::Mode::toeplitz : gwp::Mode::ck;
    return gwp::io::normal_form_to_json(*g, gwp::reduce(letters, mode));
  }

  json cmd_lattice(Options const& o) {
    auto           g = gwp::io::load_graph_file(o.graph);
    gwp::Monomial  m{gwp::io::parse_word_literal(*g, o.word), 1};
    auto           path  = gwp::lattice_path(m);
    json           steps = json::array();
    for (auto [dx, dy] : path.steps) {
      steps.push_back({dx, dy});
    }
    auto [x, y] = path.endpoint();
    json out    = {{"empty", path.empty}, {"steps", steps}, {"star_axis", gwp::star_axis_property(m)}};
    if (!path.empty) {
      out["endpoint"] = {x, y};
    }
    return out;
  }

  json cmd_expect(Options const& o) {
    auto a = gwp::io::load_variable_file(o.var);
    return gwp::io::diagonal_to_json(gwp::expectation(a), *a.graph());
  }

  json cmd_moment(Options const& o) {
    auto req = request(o);
    return gwp::io::diagonal_to_json(gwp::moment(req), *req.a.front().graph());
  }

  json cmd_cumulant(Options const& o) {
    if (o.n > gwp::cumulant_max_order) {
      throw gwp::DomainError("cumulant order " + std::to_string(o.n) + " exceeds the bound "
                             + std::to_string(gwp::cumulant_max_order));
    }
    auto         req    = request(o);
    auto const&  g      = *req.a.front().graph();
    auto         report = gwp::cumulant(req);
    json         out    = {{"n", o.n}, {"value", gwp::io::diagonal_to_json(report.value, g)}};
    if (o.contributions) {
      json parts = json::array();
      for (std::size_t i = 0; i < report.partitions.size(); ++i) {
        parts.push_back({{"partition", gwp::to_string(report.partitions[i])},
                         {"mobius", report.weights[i]},
                         {"moment", gwp::io::diagonal_to_json(report.contributions[i], g)}});
      }
      out["contributions"] = parts;
    }
    return out;
  }

  json witness_json(gwp::MixedCheck const& check, gwp::Graph const& g) {
    json slots = json::array();
    for (auto s : check.witness) {
      slots.push_back(gwp::to_string(s));
    }
    return {{"slots", slots}, {"value", gwp::io::diagonal_to_json(check.witness_value, g)}};
  }

  json cmd_free(Options const& o) {
    auto a     = gwp::io::load_variable_file(o.var);
    auto b     = gwp::io::load_variable_file(o.var2);
    auto cert  = gwp::freeness_certificate(a, b);
    auto check = gwp::mixed_cumulants_vanish(a, b, o.max_order);
    json out   = {{"certificate", cert == gwp::Certificate::certified ? "diagram-distinct" : "unknown"},
                  {"brute_force_ok", check.vanish}};
    if (!check.vanish) {
      out["witness"] = witness_json(check, *a.graph());
    }
    return out;
  }

  json cmd_classify(Options const& o) {
    auto a = gwp::io::load_variable_file(o.var);
    auto c = gwp::classify(a, o.max_order);
    json ks = json::array();
    for (auto const& k : c.trivial_cumulants) {
      ks.push_back(gwp::io::diagonal_to_json(k, *a.graph()));
    }
    return {{"self_adjoint", c.self_adjoint},
            {"semicircular", c.semicircular},
            {"even", c.even},
            {"r_diagonal", c.r_diagonal},
            {"max_order", c.max_order},
            {"hint", c.hint},
            {"trivial_cumulants", ks}};
  }

  json cmd_compress(Options const& o) {
    auto                       a = gwp::io::load_variable_file(o.var);
    std::vector<gwp::VertexId> vs;
    for (auto const& name : split_commas(o.vertices)) {
      vs.push_back(vertex_by_name(*a.graph(), name));
    }
    return gwp::io::variable_to_json(gwp::diagonal_compress(a, vs));
  }

  json cmd_series(Options const& o) {
    auto a  = gwp::io::load_variable_file(o.var);
    auto v0 = vertex_by_name(*a.graph(), o.vertex);
    auto coeffs = o.kind == "rtransform" ? gwp::compressed_r_transform(a, v0, o.order)
                                         : gwp::compressed_moment_series(a, v0, o.order);
    json out = json::array();
    for (auto const& z : coeffs) {
      out.push_back({gwp::to_string(z.re()), gwp::to_string(z.im())});
    }
    return out;
  }

  json cmd_oracle(Options const& o) {
    auto g      = gwp::io::load_graph_file(o.graph);
    auto report = gwp::fock::verify_relations(*g, o.trunc);
    json rels   = json::array();
    for (auto const& r : report.relations) {
      rels.push_back({{"relation", r.relation},
                      {"status", r.status},
                      {"max_error", r.max_error},
                      {"instances", r.instances},
                      {"counterexamples", r.counterexamples}});
    }
    return {{"trunc", report.trunc}, {"relations", rels}};
  }

  json cmd_nc_debug(Options const& o) {
    if (o.n < 1 || o.n > gwp::nc_max_n) {
      throw gwp::DomainError("nc-debug: n must lie in [1, " + std::to_string(gwp::nc_max_n) + "]");
    }
    json counts = json::array();
    json mobius = json::array();
    for (std::size_t k = 1; k <= o.n; ++k) {
      counts.push_back(gwp::enumerate_nc(k).size());
      if (k <= gwp::cumulant_max_order) {
        mobius.push_back(gwp::mobius(gwp::NoncrossingPartition::zero(k),
                                     gwp::NoncrossingPartition::one(k)));
      }
    }
    return {{"n", o.n}, {"counts", counts}, {"mobius_bottom_top", mobius}};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph W*-probability: operator words, moments, cumulants and compressions"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  auto graph_opt = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "Graph JSON file")->required();
  };
  auto var_opt = [&](CLI::App* sub) {
    sub->add_option("--var", o.var, "Random variable JSON file")->required();
  };

  auto* paths = app.add_subcommand("paths", "List the free semigroupoid up to a length");
  graph_opt(paths);
  paths->add_option("--max-len", o.max_len, "Maximum path length")->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce a word to normal form");
  graph_opt(reduce);
  reduce->add_option("--word", o.word, "Word literal, e.g. \"e1 e2*\"")->required();
  reduce->add_option("--mode", o.mode, "Reduction mode")
      ->check(CLI::IsMember({"ck", "toeplitz"}));

  auto* lattice = app.add_subcommand("lattice", "Lattice path and *-axis property of a word");
  graph_opt(lattice);
  lattice->add_option("--word", o.word, "Word literal")->required();

  auto* expect = app.add_subcommand("expect", "Conditional expectation E(a)");
  var_opt(expect);

  auto* moment = app.add_subcommand("moment", "n-th D_G-valued moment");
  var_opt(moment);
  moment->add_option("-n", o.n, "Order")->required();
  moment->add_option("--d", o.d_files, "Diagonal multiplier files d_1..d_n");

  auto* cumulant = app.add_subcommand("cumulant", "n-th D_G-valued cumulant");
  var_opt(cumulant);
  cumulant->add_option("-n", o.n, "Order")->required();
  cumulant->add_option("--d", o.d_files, "Diagonal multiplier files d_1..d_n");
  cumulant->add_flag("--contributions", o.contributions, "Include per-partition moments");

  auto* free = app.add_subcommand("free", "Freeness certificate and bounded mixed-cumulant check");
  var_opt(free);
  free->add_option("--var2", o.var2, "Second random variable")->required();
  free->add_option("--max-order", o.max_order, "Highest cumulant order")->default_val(4);

  auto* classify = app.add_subcommand("classify", "Semicircular / even / R-diagonal tests");
  var_opt(classify);
  classify->add_option("--max-order", o.max_order, "Highest cumulant order (even)")
      ->default_val(6);

  auto* compress = app.add_subcommand("compress", "Diagonal compression by a vertex set");
  var_opt(compress);
  compress->add_option("--vertices", o.vertices, "Comma-separated vertex ids")->required();

  auto* series = app.add_subcommand("series", "Vertex-compressed moment or R-series");
  var_opt(series);
  series->add_option("--vertex", o.vertex, "Compression vertex")->required();
  series->add_option("--order", o.order, "Number of coefficients")->required();
  series->add_option("--kind", o.kind, "Series kind")
      ->check(CLI::IsMember({"moment", "rtransform"}));

  auto* oracle = app.add_subcommand("oracle", "Truncated Fock-space relation checks");
  graph_opt(oracle);
  oracle->add_option("--trunc", o.trunc, "Truncation length")->required();

  auto* nc = app.add_subcommand("nc-debug", "Noncrossing partition counts and Moebius values");
  nc->add_option("n", o.n, "Largest n")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    json result;
    auto* sub = app.get_subcommands().front();
    std::string const name = sub->get_name();
    if (name == "paths") {
      result = cmd_paths(o);
    } else if (name == "reduce") {
      result = cmd_reduce(o);
    } else if (name == "lattice") {
      result = cmd_lattice(o);
    } else if (name == "expect") {
      result = cmd_expect(o);
    } else if (name == "moment") {
      result = cmd_moment(o);
    } else if (name == "cumulant") {
      result = cmd_cumulant(o);
    } else if (name == "free") {
      result = cmd_free(o);
    } else if (name == "classify") {
      result = cmd_classify(o);
    } else if (name == "compress") {
      result = cmd_compress(o);
    } else if (name == "series") {
      result = cmd_series(o);
    } else if (name == "oracle") {
      result = cmd_oracle(o);
    } else {
      result = cmd_nc_debug(o);
    }
    std::cout << render(result, o.format);
    return EXIT_SUCCESS;
  } catch (gwp::ParseError const& e) {
    std::cerr << "gwp: " << e.what() << '\n';
    return exit_parse;
  } catch (gwp::DomainError const& e) {
    std::cerr << "gwp: " << e.what() << '\n';
    return exit_domain;
  } catch (json::exception const& e) {
    std::cerr << "gwp: " << e.what() << '\n';
    return exit_parse;
  }
}
