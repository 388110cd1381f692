#include "cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/spec_io.hpp"
#include "planar/errors.hpp"
#include "planar/graph.hpp"
#include "planar/markov.hpp"
#include "planar/symmetry.hpp"
#include "planar/tangle.hpp"

namespace planar::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Csv };

struct Options {
  std::string input;
  std::string group;
  unsigned kmax = 3;
  unsigned depth = 2;
  std::string format = "json";
  unsigned long long limit_loops = kDefaultLoopLimit;

  Format fmt() const { return format == "csv" ? Format::Csv : Format::Json; }
};

// ---------------------------------------------------------------------------
// Rendering helpers

json scalar_json(const RadicalScalar& x) {
  return json{{"exact", x.to_string()}, {"float", x.to_double()}};
}

json integer_json(const mpz_class& z) {
  if (z.fits_ulong_p()) return json(static_cast<std::uint64_t>(z.get_ui()));
  return json(z.get_str());
}

json rational_json(const mpq_class& q) {
  if (q.get_den() == 1) return integer_json(q.get_num());
  return json(q.get_str());
}

json blocks_json(const AlgebraDims& d) { return json(d.blocks()); }

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

std::string blocks_text(const AlgebraDims& d) {
  std::string out;
  for (auto b : d.blocks()) out += (out.empty() ? "" : " ") + std::to_string(b);
  return out;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Shared preparation

void check_kmax(unsigned kmax) {
  if (kmax > kMaxKmax) {
    throw ResourceLimit("--kmax " + std::to_string(kmax) + " exceeds the limit of " +
                        std::to_string(kMaxKmax));
  }
}

// Refuses work whose loop basis at `degree` would exceed the limit. The
// estimate is tr((m mᵗ)^degree), computed before anything is enumerated.
void check_loops(const InclusionData& inc, unsigned degree, unsigned long long limit) {
  mpz_class estimate = loop_count(inc, degree);
  if (estimate > mpz_class(std::to_string(limit))) {
    throw ResourceLimit("estimated " + estimate.get_str() + " loops at degree " +
                        std::to_string(degree) + " exceeds --limit-loops " +
                        std::to_string(limit));
  }
}

InclusionData load_inclusion(const Options& opt) {
  std::string text = read_source(opt.input);
  return inclusion_from_json(parse_json(text, opt.input));
}

// ---------------------------------------------------------------------------
// Commands

int cmd_analyze(const Options& opt, std::ostream& out) {
  InclusionData inc = load_inclusion(opt);
  MarkovReport rep = analyze(inc);

  json norms = json::array();
  if (rep.is_markov) {
    for (unsigned k = 1; k <= 6; ++k) {
      for (auto start : {WordStart::M, WordStart::MT}) {
        WordNorm wn = word_norm(inc, k, start);
        norms.push_back({{"length", k},
                         {"start", to_string(start)},
                         {"numeric", wn.numeric},
                         {"theoretical", scalar_json(wn.theoretical)},
                         {"agrees", wn.agrees}});
      }
    }
  }

  auto weights = [](const AlgebraDims& d) {
    json arr = json::array();
    for (const auto& w : canonical_trace_weights(d)) arr.push_back(w.get_str());
    return arr;
  };
  json mb = json::array();
  for (const auto& x : rep.mb) mb.push_back(integer_json(x));

  if (opt.fmt() == Format::Csv) {
    out << "length,start,numeric,theoretical,agrees\n";
    for (const auto& n : norms) {
      std::ostringstream num;
      num.precision(17);
      num << n["numeric"].get<double>();
      out << n["length"] << "," << n["start"].get<std::string>() << "," << num.str()
          << ",\"" << n["theoretical"]["exact"].get<std::string>() << "\","
          << (n["agrees"].get<bool>() ? "true" : "false") << "\n";
    }
  } else {
    json report{{"a", blocks_json(inc.a())},
                {"b", blocks_json(inc.b())},
                {"m", matrix_json(inc.m())},
                {"markov", rep.is_markov},
                {"r", rational_json(rep.r)},
                {"abelian", rep.is_abelian},
                {"mb", mb},
                {"trace_weights", {{"a", weights(inc.a())}, {"b", weights(inc.b())}}},
                {"norms", norms}};
    if (rep.is_markov) report["index_integral"] = rep.index_integral;
    emit_json(out, report);
  }

  if (rep.index_violation) throw InvariantViolation("Markov inclusion with non-integer index");
  for (const auto& n : norms) {
    if (!n["agrees"].get<bool>()) throw InvariantViolation("word norm disagrees with r^(k/2)");
  }
  return kOk;
}

int cmd_tower(const Options& opt, std::ostream& out) {
  InclusionData inc = load_inclusion(opt);
  auto tower = jones_tower(inc, opt.depth);
  bool abelian = is_abelian(inc);
  mpz_class r = static_cast<unsigned long>(markov_index(inc));

  bool ratios_ok = true;
  json levels = json::array();
  std::ostringstream csv;
  csv << "k,algebra,blocks,dimension\n";
  for (unsigned k = 0; k <= opt.depth; ++k) {
    const AlgebraDims& ak = tower[2 * k];
    const AlgebraDims& bk = tower[2 * k + 1];
    mpz_class dim_a = ak.total_dimension(), dim_b = bk.total_dimension();
    ratios_ok = ratios_ok && dim_b == dim_a * r;
    if (k > 0) ratios_ok = ratios_ok && dim_a == tower[2 * k - 1].total_dimension() * r;

    json level{{"k", k},
               {"A", {{"blocks", blocks_json(ak)}, {"dimension", integer_json(dim_a)}}},
               {"B", {{"blocks", blocks_json(bk)}, {"dimension", integer_json(dim_b)}}}};
    csv << k << ",A," << blocks_text(ak) << "," << dim_a.get_str() << "\n";
    csv << k << ",B," << blocks_text(bk) << "," << dim_b.get_str() << "\n";
    if (abelian) {
      json rel = json::object();
      for (auto f : {Flavor::AA, Flavor::AB, Flavor::BA, Flavor::BB}) {
        AlgebraDims d = relative_commutant_dims(inc, k, f);
        rel[to_string(f)] = blocks_json(d);
        csv << k << "," << to_string(f) << "," << blocks_text(d) << ","
            << d.total_dimension().get_str() << "\n";
      }
      level["relative_commutants"] = rel;
    } else {
      level["relative_commutants"] = nullptr;
    }
    levels.push_back(level);
  }

  if (opt.fmt() == Format::Csv) {
    out << csv.str();
  } else {
    emit_json(out, {{"r", integer_json(r)},
                    {"abelian", abelian},
                    {"depth", opt.depth},
                    {"levels", levels},
                    {"ratios_ok", ratios_ok}});
  }
  if (!ratios_ok) throw InvariantViolation("tower dimension ratios differ from r");
  return kOk;
}

int cmd_dims(const Options& opt, std::ostream& out) {
  check_kmax(opt.kmax);
  InclusionData inc = load_inclusion(opt);
  check_loops(inc, opt.kmax, opt.limit_loops);
  BipartiteGraph g = build_graph(inc);

  json dims = json::array();
  for (unsigned k = 0; k <= opt.kmax; ++k) {
    mpz_class expected = loop_count(inc, k);
    std::size_t counted = enumerate_loops(g, k).size();
    if (mpz_class(std::to_string(counted)) != expected) {
      throw InvariantViolation("degree " + std::to_string(k) + ": enumerated " +
                               std::to_string(counted) + " loops, trace formula gives " +
                               expected.get_str());
    }
    dims.push_back(counted);
  }

  if (opt.fmt() == Format::Csv) {
    out << "k,dim\n";
    for (unsigned k = 0; k <= opt.kmax; ++k) out << k << "," << dims[k] << "\n";
  } else {
    emit_json(out, {{"kmax", opt.kmax}, {"dims", dims}});
  }
  return kOk;
}

int cmd_verify_tl(const Options& opt, std::ostream& out) {
  check_kmax(opt.kmax);
  InclusionData inc = load_inclusion(opt);
  check_loops(inc, opt.kmax + 2, opt.limit_loops);
  BipartiteGraph g = build_graph(inc);

  const std::size_t top = opt.kmax + 2;
  std::vector<PlanarElement> e;  // e_k included up to the top degree
  for (std::size_t k = 0; k <= opt.kmax; ++k)
    e.push_back(include_to(g, jones_projection(g, k), top));
  RadicalScalar gamma_m2 = g.gamma_inverse() * g.gamma_inverse();
  RadicalScalar inv_r(mpq_class(1, static_cast<unsigned long>(g.index())));

  json relations = json::array();
  bool all = true;
  auto record = [&](json entry, bool ok) {
    entry["pass"] = ok;
    all = all && ok;
    relations.push_back(std::move(entry));
  };
  for (std::size_t k = 0; k <= opt.kmax; ++k) {
    record({{"relation", "idempotent"}, {"k", k}}, multiply(e[k], e[k]) == e[k]);
    RadicalScalar t = trace(g, e[k]);
    record({{"relation", "trace"}, {"k", k}, {"value", scalar_json(t)}}, t == inv_r);
  }
  for (std::size_t k = 0; k + 1 <= opt.kmax; ++k) {
    const auto& a = e[k];
    const auto& b = e[k + 1];
    record({{"relation", "braid"}, {"k", k}, {"l", k + 1}},
           multiply(multiply(a, b), a) == gamma_m2 * a);
    record({{"relation", "braid"}, {"k", k + 1}, {"l", k}},
           multiply(multiply(b, a), b) == gamma_m2 * b);
  }
  for (std::size_t k = 0; k <= opt.kmax; ++k) {
    for (std::size_t l = k + 2; l <= opt.kmax; ++l) {
      record({{"relation", "commute"}, {"k", k}, {"l", l}},
             multiply(e[k], e[l]) == multiply(e[l], e[k]));
    }
  }

  if (opt.fmt() == Format::Csv) {
    out << "relation,k,l,pass\n";
    for (const auto& rel : relations) {
      out << rel["relation"].get<std::string>() << "," << rel["k"] << ","
          << (rel.contains("l") ? rel["l"].dump() : "") << ","
          << (rel["pass"].get<bool>() ? "true" : "false") << "\n";
    }
  } else {
    emit_json(out, {{"r", g.index()},
                    {"gamma", scalar_json(g.gamma())},
                    {"kmax", opt.kmax},
                    {"relations", relations},
                    {"all_pass", all}});
  }
  return all ? kOk : kInvariantViolation;
}

int cmd_fixed(const Options& opt, std::ostream& out) {
  check_kmax(opt.kmax);
  InclusionData inc = load_inclusion(opt);
  check_loops(inc, opt.kmax + 2, opt.limit_loops);
  BipartiteGraph g = build_graph(inc);
  std::string group_text = read_source(opt.group);
  auto gens = generators_from_json(g, parse_json(group_text, opt.group));
  GroupAction group = close_group(g, std::move(gens));

  auto dims = fixed_dims_report(group, opt.kmax);
  json ergodic = nullptr;
  if (is_abelian(inc)) {
    auto erg = is_centrally_ergodic(group);
    ergodic = {{"on_a", erg.on_a}, {"on_b", erg.on_b}};
  }

  json checks = json::array();
  bool all = true;
  std::vector<bool> per_degree(opt.kmax + 1, true);
  if (opt.kmax >= 2) {
    SubalgebraReport rep = verify_planar_subalgebra(group, opt.kmax);
    all = rep.all_passed();
    for (const auto& c : rep.checks) {
      checks.push_back({{"name", c.name},
                        {"k", c.k},
                        {"cases", c.cases},
                        {"failures", c.failures},
                        {"pass", c.passed()}});
      if (!c.passed()) per_degree[c.k] = false;
    }
  }

  if (opt.fmt() == Format::Csv) {
    out << "k,dim,closure\n";
    for (unsigned k = 0; k <= opt.kmax; ++k) {
      out << k << "," << dims[k] << ","
          << (opt.kmax < 2 ? "skipped" : per_degree[k] ? "pass" : "fail") << "\n";
    }
  } else {
    emit_json(out, {{"order", group.order()},
                    {"generators", group.generators().size()},
                    {"kmax", opt.kmax},
                    {"dims", dims},
                    {"ergodic", ergodic},
                    {"closure_checked", opt.kmax >= 2},
                    {"checks", checks},
                    {"all_pass", all}});
  }
  return all ? kOk : kInvariantViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar algebras of Markov inclusions and their fixed-point subalgebras",
               "planar"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Inclusion spec: JSON file or inline JSON")
        ->required();
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--kmax", opt.kmax, "Largest degree (default 4 for dims, else 3)");
    sub->add_option("--limit-loops", opt.limit_loops,
                    "Largest loop basis the command may enumerate")
        ->capture_default_str();
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Markov condition, index, word norms");
  add_common(analyze_cmd);
  auto* tower_cmd = app.add_subcommand("tower", "Jones tower and relative commutants");
  add_common(tower_cmd);
  tower_cmd->add_option("--depth", opt.depth, "Number of basic constructions")
      ->capture_default_str();
  auto* dims_cmd = app.add_subcommand("dims", "Loop-basis dimensions of P_k");
  add_common(dims_cmd);
  add_limits(dims_cmd);
  auto* tl_cmd = app.add_subcommand("verify-tl", "Temperley-Lieb relations of e_k");
  add_common(tl_cmd);
  add_limits(tl_cmd);
  auto* fixed_cmd = app.add_subcommand("fixed", "Fixed-point subalgebra under a group");
  add_common(fixed_cmd);
  add_limits(fixed_cmd);
  fixed_cmd->add_option("--group", opt.group, "Group spec: JSON file or inline JSON")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  if (dims_cmd->parsed() && dims_cmd->count("--kmax") == 0) opt.kmax = 4;

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(opt, out);
    if (tower_cmd->parsed()) return cmd_tower(opt, out);
    if (dims_cmd->parsed()) return cmd_dims(opt, out);
    if (tl_cmd->parsed()) return cmd_verify_tl(opt, out);
    if (fixed_cmd->parsed()) return cmd_fixed(opt, out);
  } catch (const InputError& e) {
    err << "planar: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "planar: precondition failed: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const ResourceLimit& e) {
    err << "planar: resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InvariantViolation& e) {
    err << "planar: internal invariant violated: " << e.what() << "\n";
    return kInvariantViolation;
  }
  return kInputError;
}

}  // namespace planar::cli
