#include "pqech/cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqech/bundle.hpp"
#include "pqech/generators.hpp"
#include "pqech/index.hpp"
#include "pqech/obstruction.hpp"
#include "pqech/spectrum.hpp"

namespace pqech::cli {

namespace {

using json = nlohmann::json;

enum class Format { Table, Csv, Json };

// Minimal aligned-column / CSV emitter. Cells are preformatted strings.
class Rows {
 public:
  explicit Rows(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print_table(std::ostream& os) const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) {
      width[c] = header_[c].size();
      for (const auto& r : rows_) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        os << cells[c];
        if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size() + 2, ' ');
      }
      os << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

  void print_csv(std::ostream& os) const {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) os << ',';
        os << csv_cell(cells[c]);
      }
      os << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

  void print(std::ostream& os, Format f) const {
    if (f == Format::Csv) {
      print_csv(os);
    } else {
      print_table(os);
    }
  }

 private:
  static std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + '"';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string str(Int v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

json record(const std::string& command, json inputs, json result, json witnesses) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"witnesses", std::move(witnesses)},
              {"version", kVersion}};
}

json witness_json(const TorusWitness& w) {
  return json{{"d", w.d}, {"m_plus", w.m_plus}, {"m1", w.m1}, {"m2", w.m2}, {"m_minus", w.m_minus}};
}

std::string witness_str(const TorusWitness& w) {
  return "(" + str(w.d) + "," + str(w.m_plus) + "," + str(w.m1) + "," + str(w.m2) + "," + str(w.m_minus) + ")";
}

// ---------------------------------------------------------------- capacity

struct CapacityArgs {
  std::string base;
  Int euler = 0;
  Int k = 0;
  std::optional<Int> k_max;
};

void run_capacity(const CapacityArgs& a, Format fmt, std::ostream& out) {
  const bool sphere = a.base == "sphere";
  const PrequantizationBundle bundle(sphere ? 0 : 1, a.euler);
  const Int k_last = a.k_max.value_or(a.k);
  if (a.k < 0) throw InputError("--k must be nonnegative");
  if (k_last < a.k) throw InputError("--k-max must be >= --k");

  Rows rows = sphere ? Rows({"k", "capacity"})
                     : Rows({"k", "lower", "upper", "exact", "d_minus", "d_plus", "wl_m_plus", "wl_m1", "wl_m2",
                             "wl_m_minus", "wu_m_plus", "wu_m1", "wu_m2", "wu_m_minus"});
  if (fmt == Format::Table && !sphere) rows = Rows({"k", "lower", "upper", "exact", "witness_lower", "witness_upper"});

  for (Int k = a.k; k <= k_last; ++k) {
    const CapacityResult r = sphere ? capacity_sphere_result(bundle.abs_e(), k) : capacity_torus_bounds(bundle.abs_e(), k);
    if (sphere && capacity_sphere_via_u(bundle.abs_e(), k) != r.lower) {
      throw InvariantError("U-map route disagrees with the sphere capacity at k=" + str(k));
    }
    if (fmt == Format::Json) {
      json inputs{{"base", a.base}, {"euler", a.euler}, {"k", k}};
      json result{{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}};
      if (r.exact) result["capacity"] = r.lower;
      json witnesses{{"lower", witness_json(r.witness_lower)}, {"upper", witness_json(r.witness_upper)}};
      out << record("capacity", std::move(inputs), std::move(result), std::move(witnesses)).dump() << '\n';
    } else if (sphere) {
      rows.add({str(k), str(r.lower)});
    } else if (fmt == Format::Table) {
      rows.add({str(k), str(r.lower), str(r.upper), str(r.exact), witness_str(r.witness_lower),
                witness_str(r.witness_upper)});
    } else {
      const auto& wl = r.witness_lower;
      const auto& wu = r.witness_upper;
      rows.add({str(k), str(r.lower), str(r.upper), str(r.exact), str(wl.d), str(wu.d), str(wl.m_plus), str(wl.m1),
                str(wl.m2), str(wl.m_minus), str(wu.m_plus), str(wu.m1), str(wu.m2), str(wu.m_minus)});
    }
  }
  if (fmt != Format::Json) rows.print(out, fmt);
}

// -------------------------------------------------------------- generators

struct GeneratorArgs {
  Int genus = 0;
  Int euler = 0;
  std::optional<Int> grading;
  std::optional<std::string> action_limit;
};

ExactAction parse_action_limit(const std::string& text) {
  auto colon = text.find(':');
  std::string lead = text.substr(0, colon);
  Int leading = 0;
  auto [ptr, ec] = std::from_chars(lead.data(), lead.data() + lead.size(), leading);
  if (ec != std::errc() || ptr != lead.data() + lead.size() || lead.empty()) {
    throw InputError("malformed --action-limit '" + text + "' (expected L or L:c)");
  }
  Rational correction = colon == std::string::npos ? Rational(0) : Rational::parse(text.substr(colon + 1));
  return {leading, correction};
}

void run_generators(const GeneratorArgs& a, Format fmt, std::ostream& out) {
  const PrequantizationBundle bundle(a.genus, a.euler);
  const MorseProfile profile = MorseProfile::standard(bundle.genus());
  std::vector<GradedGenerator> gens;
  json inputs{{"genus", a.genus}, {"euler", a.euler}};
  if (a.grading) {
    gens = enumerate_by_grading(bundle, *a.grading, profile);
    inputs["grading"] = *a.grading;
  } else {
    const ExactAction limit = parse_action_limit(*a.action_limit);
    gens = enumerate_by_action(bundle, profile, limit);
    inputs["action_limit"] = {{"leading", limit.leading}, {"correction", limit.correction.str()}};
  }

  if (fmt == Format::Json) {
    json list = json::array();
    for (const auto& g : gens) {
      list.push_back({{"orbit_set", g.orbit_set.str()},
                      {"m_plus", g.orbit_set.m_plus()},
                      {"m_hyp", g.orbit_set.m_hyp()},
                      {"m_minus", g.orbit_set.m_minus()},
                      {"M", g.orbit_set.total()},
                      {"d", g.degree},
                      {"grading", g.grading},
                      {"action", {{"leading", g.action.leading}, {"correction", g.action.correction.str()}}}});
    }
    json result{{"count", gens.size()}, {"generators", std::move(list)}};
    out << record("generators", std::move(inputs), std::move(result), json::object()).dump() << '\n';
    return;
  }
  Rows rows({"orbit_set", "M", "d", "grading", "action_leading", "action_correction"});
  for (const auto& g : gens) {
    rows.add({g.orbit_set.str(), str(g.orbit_set.total()), str(g.degree), str(g.grading), str(g.action.leading),
              g.action.correction.str()});
  }
  rows.print(out, fmt);
}

// ------------------------------------------------------------------ index

struct IndexArgs {
  Int genus = 0;
  Int euler = 0;
  std::string orbitset;
  Int d = 0;
};

void run_index(const IndexArgs& a, Format fmt, std::ostream& out) {
  const PrequantizationBundle bundle(a.genus, a.euler);
  const OrbitSet alpha = OrbitSet::parse(a.orbitset, a.genus);
  const Int value = ech_index(bundle, alpha, a.d);
  switch (fmt) {
    case Format::Json:
      out << record("index", {{"genus", a.genus}, {"euler", a.euler}, {"orbitset", alpha.str()}, {"d", a.d}},
                    {{"index", value}}, json::object())
                 .dump()
          << '\n';
      break;
    case Format::Csv: {
      Rows rows({"orbitset", "d", "index"});
      rows.add({alpha.str(), str(a.d), str(value)});
      rows.print_csv(out);
      break;
    }
    case Format::Table:
      out << value << '\n';
      break;
  }
}

// ------------------------------------------------------------------- umap

struct UmapArgs {
  Int euler = 0;
  std::string start;
  bool trace = false;
};

SphereState parse_start(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--start must look like \"m-:m+\", got '" + text + "'");
  auto field = [&](std::string s) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) throw OverflowError("--start value out of range");
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v < 0) {
      throw InputError("--start must look like \"m-:m+\", got '" + text + "'");
    }
    return v;
  };
  return {field(text.substr(0, colon)), field(text.substr(colon + 1))};
}

void run_umap(const UmapArgs& a, Format fmt, std::ostream& out) {
  const PrequantizationBundle bundle(0, a.euler);
  const SphereState start = parse_start(a.start);
  if (start.m_minus == 0 && start.m_plus == 0) throw InputError("--start must not be the empty orbit set");
  if (arith::mod(arith::add(start.m_minus, start.m_plus), bundle.abs_e()) != 0) {
    throw InputError("--start must satisfy m- + m+ = 0 mod |e|");
  }

  struct Step {
    std::optional<SphereState> state;
    Int grading;
  };
  std::vector<Step> steps;
  std::optional<SphereState> state = start;
  Int gr = grading(bundle, OrbitSet::sphere(start.m_minus, start.m_plus));
  steps.push_back({state, gr});
  while (state) {
    state = sphere_u_step(bundle.abs_e(), *state);
    const Int next = state ? grading(bundle, OrbitSet::sphere(state->m_minus, state->m_plus)) : 0;
    if (next != gr - 2) throw InvariantError("U step changed the grading by " + str(next - gr) + " instead of -2");
    gr = next;
    steps.push_back({state, gr});
  }
  const Int n_steps = static_cast<Int>(steps.size()) - 1;
  auto label = [](const std::optional<SphereState>& s) {
    return s ? "(" + str(s->m_minus) + "," + str(s->m_plus) + ")" : std::string("EMPTY");
  };

  if (fmt == Format::Json) {
    json result{{"steps", n_steps}, {"start_grading", steps.front().grading}};
    if (a.trace) {
      json trace = json::array();
      for (const auto& s : steps) {
        json entry{{"state", label(s.state)}, {"grading", s.grading}};
        if (s.state) {
          entry["m_minus"] = s.state->m_minus;
          entry["m_plus"] = s.state->m_plus;
        }
        trace.push_back(std::move(entry));
      }
      result["trace"] = std::move(trace);
    }
    out << record("umap", {{"euler", a.euler}, {"start", label(start)}, {"trace", a.trace}}, std::move(result),
                  json::object())
               .dump()
        << '\n';
    return;
  }
  if (!a.trace) {
    Rows rows({"start", "grading", "steps", "end"});
    rows.add({label(start), str(steps.front().grading), str(n_steps), "EMPTY"});
    rows.print(out, fmt);
    return;
  }
  Rows rows({"step", "state", "grading"});
  for (std::size_t i = 0; i < steps.size(); ++i) rows.add({str(static_cast<Int>(i)), label(steps[i].state), str(steps[i].grading)});
  rows.print(out, fmt);
}

// --------------------------------------------------------------- obstruct

struct ObstructArgs {
  std::string source;
  std::string target;
  Int k_max = 0;
};

CapacitySequence parse_domain(const std::string& text, Int k_max) {
  auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "ball" && !params.empty() && params.find(',') == std::string::npos) {
    return ball_capacities(Rational::parse(params), k_max);
  }
  if (kind == "ellipsoid") {
    auto comma = params.find(',');
    if (comma != std::string::npos) {
      return ellipsoid_capacities(Rational::parse(params.substr(0, comma)), Rational::parse(params.substr(comma + 1)),
                                  k_max);
    }
  }
  throw InputError("domain must be ball:A or ellipsoid:A,B, got '" + text + "'");
}

void run_obstruct(const ObstructArgs& a, Format fmt, std::ostream& out) {
  if (a.k_max < 0) throw InputError("--k-max must be nonnegative");
  const CapacitySequence src = parse_domain(a.source, a.k_max);
  const CapacitySequence dst = parse_domain(a.target, a.k_max);
  const ObstructionResult r = obstructs_embedding(src, dst);
  const std::string first = r.first_violation ? str(*r.first_violation) : "";
  if (fmt == Format::Json) {
    json result{{"obstructed", r.obstructed},
                {"first_violation", r.first_violation ? json(*r.first_violation) : json(nullptr)}};
    json witnesses = json::object();
    if (r.first_violation) {
      const auto k = static_cast<std::size_t>(*r.first_violation);
      witnesses = {{"source_value", src.values[k].str()}, {"target_value", dst.values[k].str()}};
    }
    out << record("obstruct", {{"source", src.label}, {"target", dst.label}, {"k_max", a.k_max}}, std::move(result),
                  std::move(witnesses))
               .dump()
        << '\n';
    return;
  }
  Rows rows({"source", "target", "k_max", "obstructed", "first_violation"});
  rows.add({src.label, dst.label, str(a.k_max), str(r.obstructed), first});
  rows.print(out, fmt);
}

// ----------------------------------------------------------------- gromov

struct GromovArgs {
  Int genus = 0;
  Int euler = 0;
};

void run_gromov(const GromovArgs& a, Format fmt, std::ostream& out) {
  const GromovReport r = gromov_width_report(PrequantizationBundle(a.genus, a.euler));
  auto opt = [](const std::optional<Int>& v) { return v ? str(*v) : std::string(); };
  if (fmt == Format::Json) {
    auto opt_json = [](const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); };
    json result{{"universal_bound", r.universal_bound},
                {"capacity_c1", opt_json(r.capacity_c1)},
                {"best_bound", opt_json(r.best_bound)},
                {"genus_in_scope", r.genus_in_scope}};
    out << record("gromov", {{"genus", a.genus}, {"euler", a.euler}}, std::move(result), json::object()).dump() << '\n';
    return;
  }
  Rows rows({"genus", "euler", "universal_bound", "capacity_c1", "best_bound", "genus_in_scope"});
  rows.add({str(a.genus), str(a.euler), str(r.universal_bound), opt(r.capacity_c1), opt(r.best_bound),
            str(r.genus_in_scope)});
  rows.print(out, fmt);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ECH combinatorics of prequantization bundles over the sphere and torus", "pqech"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string format_name = "table";
  const std::vector<std::string> formats{"json", "csv", "table"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember(formats));
  };

  CapacityArgs cap;
  auto* capacity = app.add_subcommand("capacity", "ECH capacities c_k of the sphere or torus bundle");
  capacity->add_option("--base", cap.base, "Base surface")->required()->check(CLI::IsMember({"sphere", "torus"}));
  capacity->add_option("--euler", cap.euler, "Euler number e (negative)")->required();
  capacity->add_option("--k", cap.k, "Index k (first of the range with --k-max)")->required();
  capacity->add_option("--k-max", cap.k_max, "Last k of the range");
  add_format(capacity);

  GeneratorArgs gen;
  auto* generators = app.add_subcommand("generators", "Enumerate null-class ECH generators");
  generators->add_option("--genus", gen.genus, "Genus of the base")->required();
  generators->add_option("--euler", gen.euler, "Euler number e (negative)")->required();
  auto* mode = generators->add_option_group("mode", "Select generators by grading or by action");
  mode->add_option("--grading", gen.grading, "Even grading 2K");
  mode->add_option("--action-limit", gen.action_limit, "Action bound L or L:c (strict)");
  mode->require_option(1);
  add_format(generators);

  IndexArgs idx;
  auto* index = app.add_subcommand("index", "ECH index I(Z_alpha + d[Sigma])");
  index->add_option("--genus", idx.genus, "Genus of the base")->required();
  index->add_option("--euler", idx.euler, "Euler number e (negative)")->required();
  index->add_option("--orbitset", idx.orbitset, "Orbit set, e.g. \"e+^2 h1 e-^3\"")->required();
  index->add_option("--d", idx.d, "Coefficient of [Sigma]")->required();
  add_format(index);

  UmapArgs um;
  auto* umap = app.add_subcommand("umap", "Sphere U-map orbit down to the empty set");
  umap->add_option("--euler", um.euler, "Euler number e (negative)")->required();
  umap->add_option("--start", um.start, "Starting generator \"m-:m+\"")->required();
  umap->add_flag("--trace", um.trace, "Print every step");
  add_format(umap);

  ObstructArgs ob;
  auto* obstruct = app.add_subcommand("obstruct", "Compare capacity sequences of two domains");
  obstruct->add_option("--source", ob.source, "ball:A or ellipsoid:A,B")->required();
  obstruct->add_option("--target", ob.target, "ball:A or ellipsoid:A,B")->required();
  obstruct->add_option("--k-max", ob.k_max, "Compare c_0..c_K")->required();
  add_format(obstruct);

  GromovArgs gw;
  auto* gromov = app.add_subcommand("gromov", "Gromov width bounds for the disk bundle");
  gromov->add_option("--genus", gw.genus, "Genus of the base")->required();
  gromov->add_option("--euler", gw.euler, "Euler number e (negative)")->required();
  add_format(gromov);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const Format fmt = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Table;
  try {
    if (capacity->parsed()) run_capacity(cap, fmt, out);
    else if (generators->parsed()) run_generators(gen, fmt, out);
    else if (index->parsed()) run_index(idx, fmt, out);
    else if (umap->parsed()) run_umap(um, fmt, out);
    else if (obstruct->parsed()) run_obstruct(ob, fmt, out);
    else if (gromov->parsed()) run_gromov(gw, fmt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace pqech::cli
