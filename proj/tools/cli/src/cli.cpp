#include "nsgps_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "nsgps/classify.hpp"
#include "nsgps/curves.hpp"
#include "nsgps/enumerate.hpp"
#include "nsgps/invariants.hpp"
#include "nsgps/presentations.hpp"

namespace nsgps::cli {

  namespace {

    struct Settings {
      bool                       json = false;
      std::optional<std::size_t> limit;
      unsigned                   threads = 0;
      std::vector<Int>           gens;
      std::string                input;
      bool                       reduce = false;
    };

    // Subcommand arguments, fresh for every run.
    struct Values {
      Int                        apery_n = 0;
      std::string                route   = "automatic";
      bool                       over_count = false;
      std::optional<Int>         med_element;
      Int                        factor_element = 0;
      bool                       factor_classes = false;
      std::optional<Int>         invariant_element;
      std::optional<Int>         genus, frob, irreducible, free, delta;
      bool                       enum_count = false;
      std::vector<Int>           curve_r;
      bool                       curve_dual = false;
    };

    using Handler = std::function<Json(Semigroup const&)>;

    struct Command {
      CLI::App*        app = nullptr;
      std::vector<Int> positional;
      Handler          on_semigroup;           // subcommands taking generators
      std::function<Json()> standalone;        // enumerate, curve
    };

    std::string scalar(Json const& v);

    std::string join_array(Json const& v) {
      if (v.empty()) {
        return "[  ]";
      }
      std::string out = "[ ";
      bool        first = true;
      for (auto const& e : v) {
        if (!first) {
          out += ", ";
        }
        first = false;
        out += e.is_string() ? e.dump() : scalar(e);
      }
      return out + " ]";
    }

    std::string scalar(Json const& v) {
      if (v.is_null()) {
        return "none";
      }
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_array()) {
        return join_array(v);
      }
      return v.dump();
    }

    void render_lines(std::string const& prefix, Json const& v, std::string& out) {
      if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
          render_lines(prefix.empty() ? it.key() : prefix + "." + it.key(),
                       it.value(), out);
        }
        return;
      }
      out += prefix + ": " + scalar(v) + "\n";
    }

    Json factorizations_json(std::vector<Factorization> const& z) {
      Json out = Json::array();
      for (auto const& f : z) {
        out.push_back(f.coords);
      }
      return out;
    }

    Json generators_json(Semigroup const& s) {
      return std::vector<Int>(s.generators().begin(), s.generators().end());
    }

    Json semigroups_json(std::vector<Semigroup> const& list) {
      Json out = Json::array();
      for (auto const& s : list) {
        out.push_back(generators_json(s));
      }
      return out;
    }

    Json char_json(CharSequences const& c) {
      return Json{{"n", c.n},
                  {"m_seq", c.m_seq},
                  {"d_seq", c.d_seq},
                  {"r_seq", c.r_seq},
                  {"e_seq", c.e_seq}};
    }

    std::vector<std::vector<Int>> read_batch(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        raise(ErrorKind::InvalidArgument, "cannot read " + path);
      }
      std::vector<std::vector<Int>> lists;
      std::string                   line;
      while (std::getline(in, line)) {
        auto const first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
          continue;
        }
        lists.push_back(parse_generator_line(line));
      }
      return lists;
    }

  }  // namespace

  std::string format_list(std::span<Int const> values) {
    return join_array(Json(std::vector<Int>(values.begin(), values.end())));
  }

  std::string render_plain(Json const& payload) {
    if (payload.is_object() && payload.size() == 1) {
      Json const& only = payload.begin().value();
      if (only.is_object()) {
        return render_plain(only);
      }
      return scalar(only) + "\n";
    }
    std::string out;
    render_lines("", payload, out);
    return out;
  }

  Json to_json(Semigroup const& s) {
    auto const ne = notable_elements(s);
    Json       ap = Json::array();
    for (Int w : s.apery(s.multiplicity()).residues) {
      ap.push_back(w);
    }
    return Json{{"generators", generators_json(s)},
                {"multiplicity", ne.multiplicity},
                {"embedding_dimension", ne.embedding_dim},
                {"frobenius", ne.frobenius},
                {"conductor", ne.conductor},
                {"genus", ne.genus},
                {"sporadic_count", ne.sporadic_count},
                {"small_elements", s.small_elements()},
                {"gaps", ne.gaps},
                {"apery", ap},
                {"pf", pseudo_frobenius(s)},
                {"type", type(s)},
                {"special_gaps", special_gaps(s)},
                {"wilf", wilf_check(s)}};
  }

  Semigroup semigroup_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("generators")) {
      raise(ErrorKind::InvalidArgument, "JSON record has no generators");
    }
    return from_generators(j.at("generators").get<std::vector<Int>>());
  }

  std::vector<Int> parse_generator_line(std::string const& line) {
    std::string cleaned = line;
    for (char& ch : cleaned) {
      if (ch == ',' || ch == '\t' || ch == '\r') {
        ch = ' ';
      }
    }
    std::istringstream in(cleaned);
    std::vector<Int>   out;
    std::string        token;
    while (in >> token) {
      std::size_t used = 0;
      Int         v    = 0;
      try {
        v = std::stoll(token, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != token.size()) {
        raise(ErrorKind::InvalidArgument, "not an integer: " + token);
      }
      out.push_back(v);
    }
    return out;
  }

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    Settings settings;
    Values   v;
    CLI::App app{"Computations with numerical semigroups", "nsgps"};
    app.require_subcommand(1);
    app.add_flag("--json", settings.json, "Emit JSON instead of plain text");
    app.add_option("--limit", settings.limit,
                   "Resource cap: listing size, oversemigroup count, omega "
                   "search vectors, decomposition nodes");
    app.add_option("--threads", settings.threads,
                   "Worker threads for enumeration (0 = all cores)");
    app.add_option("--gens", settings.gens, "Generators, comma separated")
        ->delimiter(',');
    app.add_option("--input", settings.input,
                   "Batch file with one generator list per line")
        ->check(CLI::ExistingFile);
    app.add_flag("--reduce", settings.reduce,
                 "Divide the generators by their gcd instead of rejecting them");

    std::vector<Command> commands;
    commands.reserve(16);
    auto add = [&](std::string const& name, std::string const& help) -> Command& {
      Command& c = commands.emplace_back();
      c.app      = app.add_subcommand(name, help);
      c.app->fallthrough();
      return c;
    };
    auto with_gens = [](Command& c) {
      c.app->add_option("generators", c.positional, "Generators");
    };

    auto enum_opts = [&] {
      EnumerationOptions o;
      o.threads = settings.threads;
      if (settings.limit) {
        o.max_results = *settings.limit;
      }
      return o;
    };

    {
      auto& c = add("info", "Notable elements");
      with_gens(c);
      c.on_semigroup = [](Semigroup const& s) { return to_json(s); };
    }
    {
      auto& c = add("apery", "Apery set with respect to n");
      c.app->add_option("n", v.apery_n, "Element or integer")->required();
      with_gens(c);
      c.on_semigroup = [&v](Semigroup const& s) {
        Int const n = v.apery_n;
        if (n > 0 && s.contains(n)) {
          return Json{{"apery", s.apery(n).residues}};
        }
        if (n <= 0) {
          raise(ErrorKind::InvalidArgument, "n must be positive");
        }
        return Json{{"apery", apery_wrt_integer(s, n)}};
      };
    }
    {
      auto& c = add("classify", "Symmetry, irreducibility, MED, freeness");
      with_gens(c);
      c.on_semigroup = [](Semigroup const& s) {
        Json free = nullptr;
        if (s.embedding_dimension() <= kMaxFreeSearchGenerators) {
          free = is_free(s);
        }
        return Json{{"classification",
                     {{"symmetric", is_symmetric(s)},
                      {"pseudo_symmetric", is_pseudo_symmetric(s)},
                      {"irreducible", is_irreducible(s)},
                      {"med", is_med(s)},
                      {"telescopic", is_telescopic(s)},
                      {"free", free},
                      {"type", type(s)}}}};
      };
    }
    {
      auto& c = add("decompose", "Decomposition into irreducibles");
      c.app->add_option("--route", v.route, "automatic, exact, constructive or minimum")
          ->check(CLI::IsMember({"automatic", "exact", "constructive", "minimum"}));
      with_gens(c);
      c.on_semigroup = [&settings, &v](Semigroup const& s) {
        DecompositionOptions o;
        o.route = v.route == "exact"          ? DecompositionRoute::Exact
                  : v.route == "constructive" ? DecompositionRoute::Constructive
                  : v.route == "minimum"      ? DecompositionRoute::MinimumCardinality
                                            : DecompositionRoute::Automatic;
        if (settings.limit) {
          o.node_budget = *settings.limit;
        }
        return Json{{"decomposition",
                     semigroups_json(decompose_into_irreducibles(s, o))}};
      };
    }
    {
      auto& c = add("over", "Oversemigroups");
      c.app->add_flag("--count", v.over_count, "Only the number of oversemigroups");
      with_gens(c);
      c.on_semigroup = [&settings, &v](Semigroup const& s) {
        OverSemigroupOptions o;
        if (settings.limit) {
          o.max_count = *settings.limit;
        }
        auto const list = oversemigroups(s, o);
        if (v.over_count) {
          return Json{{"count", list.size()}};
        }
        return Json{{"oversemigroups", semigroups_json(list)}};
      };
    }
    {
      auto& c = add("med", "Maximal embedding dimension");
      c.app->add_option("--element", v.med_element,
                        "Element used for the closure (default: multiplicity)");
      with_gens(c);
      c.on_semigroup = [&v](Semigroup const& s) {
        Int const n = v.med_element.value_or(s.multiplicity());
        return Json{{"med", is_med(s)},
                    {"closure", generators_json(med_closure(s, n))}};
      };
    }
    {
      auto& c = add("free", "Free arrangement and standard representation data");
      with_gens(c);
      c.on_semigroup = [](Semigroup const& s) {
        auto const r = free_arrangement(s);
        return Json{{"free",
                     {{"free", r.free},
                      {"telescopic", is_telescopic(s)},
                      {"arrangement", r.arrangement},
                      {"d_seq", r.d_seq},
                      {"e_seq", r.e_seq}}}};
      };
    }
    {
      auto& c = add("presentation", "Minimal presentation");
      with_gens(c);
      c.on_semigroup = [](Semigroup const& s) {
        Json pairs     = Json::array();
        Json binomials = Json::array();
        for (auto const& rel : minimal_presentation(s)) {
          pairs.push_back(Json::array({rel.lhs.coords, rel.rhs.coords}));
          binomials.push_back(binomial_text(rel));
        }
        return Json{{"presentation", pairs}, {"binomials", binomials}};
      };
    }
    {
      auto& c = add("betti", "Betti elements");
      with_gens(c);
      c.on_semigroup = [](Semigroup const& s) {
        return Json{{"betti", betti_elements(s)}};
      };
    }
    {
      auto& c = add("factorize", "Factorizations of an element");
      c.app->add_option("s", v.factor_element, "Element")->required();
      c.app->add_flag("--classes", v.factor_classes, "Also list the R-classes");
      with_gens(c);
      c.on_semigroup = [&v](Semigroup const& s) {
        Int const element = v.factor_element;
        Json out{{"factorizations", factorizations_json(factorizations(s, element))}};
        if (v.factor_classes) {
          Json rc = Json::array();
          for (auto const& cls : r_classes(s, element)) {
            rc.push_back(factorizations_json(cls));
          }
          out["r_classes"] = rc;
        }
        return out;
      };
    }
    {
      auto& c = add("invariants", "Factorization invariants");
      c.app->add_option("--element", v.invariant_element,
                        "Element instead of the whole semigroup");
      with_gens(c);
      c.on_semigroup = [&settings, &v](Semigroup const& s) {
        std::size_t const cap = settings.limit.value_or(kDefaultOmegaCap);
        if (v.invariant_element) {
          Int const x = *v.invariant_element;
          return Json{{"invariants",
                       {{"element", x},
                        {"lengths", lengths(s, x).lengths},
                        {"elasticity", to_string(elasticity_of(s, x))},
                        {"delta", delta_of(s, x)},
                        {"catenary", catenary_of(s, x)},
                        {"omega", omega_of(s, x, cap)}}}};
        }
        auto const r = invariant_report(s, cap);
        Json dmin = nullptr;
        Json dmax = nullptr;
        if (r.delta_min) {
          dmin = *r.delta_min;
          dmax = *r.delta_max;
        }
        return Json{{"invariants",
                     {{"elasticity", to_string(r.elasticity)},
                      {"delta_min", dmin},
                      {"delta_max", dmax},
                      {"catenary", r.catenary},
                      {"omega", r.omega}}}};
      };
    }
    {
      auto& c  = add("enumerate", "Families of semigroups");
      auto* g  = c.app->add_option("--genus", v.genus, "All semigroups of genus g");
      auto* f  = c.app->add_option("--frobenius", v.frob, "All with Frobenius number F");
      auto* i  = c.app->add_option("--irreducible", v.irreducible,
                                   "Irreducible, Frobenius number F");
      auto* fr = c.app->add_option("--free", v.free, "Free, Frobenius number F");
      auto* d  = c.app->add_option("--delta", v.delta, "Delta-sequences, Frobenius number F");
      std::vector<CLI::Option*> family{g, f, i, fr, d};
      for (auto* a : family) {
        for (auto* b : family) {
          if (a != b) {
            a->excludes(b);
          }
        }
      }
      c.app->add_flag("--count", v.enum_count, "Only the number of results");
      c.standalone = [&v, enum_opts]() -> Json {
        auto const o     = enum_opts();
        bool const count = v.enum_count;
        if (v.genus) {
          if (count) {
            auto const counts = count_by_genus(*v.genus, o);
            return Json{{"count", counts.back()}};
          }
          return Json{{"semigroups", semigroups_json(with_genus(*v.genus, o))}};
        }
        if (v.delta) {
          auto const seqs = delta_sequences_with_frobenius(*v.delta, o);
          if (count) {
            return Json{{"count", seqs.size()}};
          }
          return Json{{"sequences", seqs}};
        }
        std::vector<Semigroup> list;
        if (v.frob) {
          list = with_frobenius(*v.frob, o);
        } else if (v.irreducible) {
          list = irreducible_with_frobenius(*v.irreducible, o);
        } else if (v.free) {
          list = free_with_frobenius(*v.free, o);
        } else {
          throw CLI::ValidationError(
              "enumerate",
              "one of --genus, --frobenius, --irreducible, --free, --delta is required");
        }
        if (count) {
          return Json{{"count", list.size()}};
        }
        return Json{{"semigroups", semigroups_json(list)}};
      };
    }
    {
      auto& c = add("curve", "Characteristic sequences of a branch");
      c.app->add_option("--from-r", v.curve_r, "r_0,r_1,...,r_h")
          ->delimiter(',')
          ->required();
      c.app->add_flag("--dual", v.curve_dual, "Also compute the dual at infinity");
      c.standalone = [&v]() -> Json {
        auto const cs = char_from_r(v.curve_r);
        Json       j  = char_json(cs);
        j["local_branch"]     = is_local_branch(cs);
        j["delta_sequence"]   = is_delta_sequence(cs);
        j["coordinate_like"]  = is_coordinate_like(cs);
        j["minimal_int"]      = is_minimal_int(cs);
        j["conductor"]        = conductor_of(cs);
        j["semigroup"]        = generators_json(semigroup_of(cs));
        if (v.curve_dual) {
          auto const dc     = infinity_dual(cs);
          Json       dj     = char_json(dc);
          dj["conductor"]   = conductor_of(dc);
          dj["semigroup"]   = generators_json(semigroup_of(dc));
          j["dual"]         = dj;
        }
        return Json{{"curve", j}};
      };
    }

    std::vector<char const*> argv{"nsgps"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }

    Command const* chosen = nullptr;
    for (auto const& c : commands) {
      if (c.app->parsed()) {
        chosen = &c;
      }
    }

    auto emit = [&](Json const& j) {
      if (settings.json) {
        out << j.dump(2) << "\n";
      } else {
        out << render_plain(j);
      }
    };

    try {
      if (chosen->standalone) {
        emit(chosen->standalone());
        return kExitOk;
      }

      std::vector<std::vector<Int>> lists;
      if (!settings.input.empty()) {
        lists = read_batch(settings.input);
      } else {
        std::vector<Int> gens = chosen->positional;
        gens.insert(gens.end(), settings.gens.begin(), settings.gens.end());
        if (gens.empty()) {
          err << "error: no generators given (positional or --gens)\n";
          return kExitUsage;
        }
        lists.push_back(std::move(gens));
      }

      bool const batch   = !settings.input.empty();
      Json       results = Json::array();
      for (auto const& gens : lists) {
        Semigroup s;
        Int       divided = 1;
        if (settings.reduce) {
          std::tie(divided, s) = from_generators_reduced(gens);
        } else {
          s = from_generators(gens);
        }
        Json payload = chosen->on_semigroup(s);
        Json record{{"generators", generators_json(s)}};
        if (divided != 1) {
          record["reduced_by"] = divided;
        }
        for (auto it = payload.begin(); it != payload.end(); ++it) {
          record[it.key()] = it.value();
        }
        if (settings.json) {
          results.push_back(record);
        } else {
          if (batch) {
            out << format_list(s.generators()) << "\n";
          } else if (divided != 1) {
            out << "reduced_by: " << divided << "\n";
          }
          out << render_plain(payload);
          if (batch) {
            out << "\n";
          }
        }
      }
      if (settings.json) {
        out << (batch ? results : results.front()).dump(2) << "\n";
      }
      return kExitOk;
    } catch (CLI::ValidationError const& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return kExitDomain;
    }
  }

}  // namespace nsgps::cli
