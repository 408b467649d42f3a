#include "weakgen/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "weakgen/finite.hpp"
#include "weakgen/model.hpp"
#include "weakgen/render.hpp"
#include "weakgen/selftest.hpp"

namespace weakgen {

  namespace {
    int exit_code(Errc e) {
      switch (category(e)) {
        case ErrorCategory::Syntax: return kExitSyntax;
        case ErrorCategory::Validation: return kExitValidation;
        case ErrorCategory::Resource: return kExitResource;
        default: return 1;
      }
    }

    std::string join(std::vector<std::string> const& v, char sep) {
      std::string out;
      for (auto const& s : v) {
        if (!out.empty()) {
          out += sep;
        }
        out += s;
      }
      return out;
    }

    // The declared alphabet, or the sorted identifiers of the inputs.
    Alphabet resolve_alphabet(std::string const&              declared,
                              std::vector<std::string> const& texts,
                              std::ostream&                   err) {
      if (!declared.empty()) {
        return Alphabet::from_list(declared);
      }
      std::vector<std::string> ids;
      for (auto const& t : texts) {
        for (auto& id : collect_identifiers(t)) {
          if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
            ids.push_back(std::move(id));
          }
        }
      }
      if (ids.empty()) {
        // Letter-free input means the same thing over any alphabet.
        ids.push_back("x");
      }
      std::sort(ids.begin(), ids.end());
      err << "note: alphabet inferred as " << join(ids, ',') << '\n';
      return Alphabet::from_list(join(ids, ','));
    }

    FiniteSemigroup load_table(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error(Errc::BadArgument, "cannot read '" + path + "'");
      }
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (nlohmann::json::parse_error const& e) {
        throw Error(Errc::Syntax, path + ": " + e.what());
      }
      return FiniteSemigroup::from_json(j);
    }

    std::vector<Elem> parse_map(Alphabet const&                 alphabet,
                                std::vector<std::string> const& items) {
      std::vector<std::optional<Elem>> images(alphabet.size());
      for (auto const& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
          throw Error(Errc::Syntax, "map entries look like x=5, got '" + item
                                        + "'");
        }
        std::string letter = item.substr(0, eq);
        unsigned long v;
        try {
          std::size_t used = 0;
          v = std::stoul(item.substr(eq + 1), &used);
          if (used != item.size() - eq - 1) {
            throw std::invalid_argument(item);
          }
        } catch (std::logic_error const&) {
          throw Error(Errc::Syntax, "bad element id in '" + item + "'");
        }
        images[alphabet.id(letter)] = Elem(v);
      }
      std::vector<Elem> out;
      for (LetterId x = 0; x < alphabet.size(); ++x) {
        if (!images[x]) {
          throw Error(Errc::BadArgument,
                      "no image for '" + alphabet.name(x) + "'");
        }
        out.push_back(*images[x]);
      }
      return out;
    }

    std::vector<std::string> split_map(std::vector<std::string> const& raw) {
      std::vector<std::string> out;
      for (auto const& r : raw) {
        std::stringstream ss(r);
        for (std::string part; std::getline(ss, part, ',');) {
          if (!part.empty()) {
            out.push_back(part);
          }
        }
      }
      return out;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Normal forms, Green's relations and skeleton mappings for "
                 "the free weakly generated regular semigroup presentation"};
    app.name("weakgen");
    app.require_subcommand(1);
    app.fallthrough();

    std::string alphabet_flag;
    unsigned    cap        = GenStore::kDefaultHeightCap;
    std::size_t max_states = SearchBounds{}.max_states;
    app.add_option("--alphabet", alphabet_flag,
                   "Comma separated letters, e.g. x,y (inferred if omitted)");
    app.add_option("--cap", cap, "Generator height cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-states", max_states,
                   "State budget of gorge searches")
        ->check(CLI::PositiveNumber);

    std::string a, b, rel, peak, kind = "all", format = "ascii", output,
                table, strategy = "first";
    std::vector<std::string> words, map_items;
    bool        trace = false, gorge = false, normalize_first = false;
    unsigned    gen_height = 0, sk_height = 3, transformations = 0,
             st_height = 3;
    std::uint64_t seed = 0, st_seed = 7;
    std::size_t   probe = 0;

    auto* c_norm = app.add_subcommand("normalize", "Normal form of a word");
    c_norm->add_option("word", a, "Word over G")->required();
    c_norm->add_flag("--trace", trace,
                     "Print every uplift snapshot as a JSON array");

    auto* c_eq = app.add_subcommand("eq", "Decide whether two words are equal");
    c_eq->add_option("u", a)->required();
    c_eq->add_option("v", b)->required();

    auto* c_mul = app.add_subcommand("mul", "Product of words in the model");
    c_mul->add_option("words", words)->required();

    auto* c_green = app.add_subcommand(
        "green", "Green's relation test: R L J H D leqR leqL leqJ");
    c_green->add_option("relation", rel)->required();
    c_green->add_option("u", a)->required();
    c_green->add_option("v", b)->required();

    auto* c_order = app.add_subcommand("order", "Natural order: is v <= u");
    c_order->add_option("v", a)->required();
    c_order->add_option("u", b)->required();
    c_order->add_flag("--gorge", gorge, "Use the gorge route (may be unknown)");

    auto* c_idem = app.add_subcommand("idempotent", "Is the word idempotent");
    c_idem->add_option("u", a)->required();
    c_idem->add_flag("--gorge", gorge, "Use the gorge route (may be unknown)");

    auto* c_inv = app.add_subcommand("inverses", "All inverses of a word");
    c_inv->add_option("u", a)->required();

    auto* c_sand = app.add_subcommand("sandwich", "Sandwich set S(e, f)");
    c_sand->add_option("e", a)->required();
    c_sand->add_option("f", b)->required();

    auto* c_count = app.add_subcommand(
        "count", "Count uphills and mountains with a given peak");
    c_count->add_option("--peak", peak, "Generator term")->required();

    auto* c_gens = app.add_subcommand("gens", "List generators of one height");
    c_gens->add_option("--height", gen_height)
        ->required()
        ->check(CLI::PositiveNumber);
    c_gens->add_option("--kind", kind, "e, d or all")
        ->check(CLI::IsMember({"e", "d", "all"}));

    auto* c_render = app.add_subcommand("render", "Draw a landscape");
    c_render->add_option("input", a, "Landscape (or word with --normalize)")
        ->required();
    c_render->add_option("--format", format)
        ->check(CLI::IsMember({"ascii", "svg", "json"}));
    c_render->add_flag("--normalize", normalize_first,
                       "Treat the input as a word and draw its normal form");
    c_render->add_option("--output", output, "Write to a file");

    auto* c_skel = app.add_subcommand(
        "skeleton", "Build a skeleton mapping into a finite regular semigroup");
    auto* o_table = c_skel->add_option("--table", table, "Table JSON file");
    auto* o_tn    = c_skel->add_option("--transformations", transformations,
                                       "Use the full transformation monoid T_n")
                     ->check(CLI::Range(1, 4));
    o_table->excludes(o_tn);
    c_skel->add_option("--map", map_items, "Letter images, e.g. x=5,y=3")
        ->required();
    c_skel->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"first", "seeded"}));
    c_skel->add_option("--seed", seed);
    c_skel->add_option("--height", sk_height)->check(CLI::Range(1, 6));
    c_skel->add_option("--probe", probe,
                       "Run the weak generation probe with this budget");

    auto* c_self = app.add_subcommand("selftest", "Run the property suite");
    c_self->add_option("--max-height", st_height)->check(CLI::Range(1, 4));
    c_self->add_option("--seed", st_seed);

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int rc = app.exit(e, out, err);
      return rc == 0 ? kExitOk : kExitSyntax;
    }

    try {
      if (c_self->parsed()) {
        bool ok = true;
        run_selftest({st_height, st_seed}, [&](PropertyResult const& r) {
          ok = ok && r.passed();
          out << format_result(r, st_seed) << std::endl;
        });
        return ok ? kExitOk : kExitSelftest;
      }

      std::vector<std::string> texts;
      for (auto const* s : {&a, &b, &peak}) {
        if (!s->empty()) {
          texts.push_back(*s);
        }
      }
      texts.insert(texts.end(), words.begin(), words.end());
      if (c_skel->parsed() && alphabet_flag.empty()) {
        std::vector<std::string> letters;
        for (auto const& item : split_map(map_items)) {
          letters.push_back(item.substr(0, item.find('=')));
        }
        std::sort(letters.begin(), letters.end());
        alphabet_flag = join(letters, ',');
      }

      GenStore store(resolve_alphabet(alphabet_flag, texts, err), cap);
      Model    model(store);
      auto     word  = [&](std::string const& t) { return parse_word(store, t); };
      auto     mount = [&](std::string const& t) { return model.parse(t); };
      auto     print_set = [&](std::vector<Mountain> const& ms) {
        for (auto const& m : ms) {
          out << model.serialize(m) << '\n';
        }
      };
      auto tf = [](bool v) { return v ? "true" : "false"; };

      if (c_norm->parsed()) {
        if (trace) {
          std::vector<Landscape> steps;
          beta2(store, beta1(store, word(a)), &steps);
          nlohmann::json arr = nlohmann::json::array();
          for (auto const& s : steps) {
            arr.push_back(to_json(store, s));
          }
          out << arr.dump(2) << '\n';
        } else {
          out << serialize(store, beta(store, word(a))) << '\n';
        }
      } else if (c_eq->parsed()) {
        out << tf(equivalent(store, word(a), word(b))) << '\n';
      } else if (c_mul->parsed()) {
        Mountain p;
        for (auto const& w : words) {
          p = model.mul(p, mount(w));
        }
        out << model.serialize(p) << '\n';
      } else if (c_green->parsed()) {
        out << tf(model.green(green_from_string(rel), mount(a), mount(b)))
            << '\n';
      } else if (c_order->parsed()) {
        if (gorge) {
          SearchBounds bounds;
          bounds.max_states = max_states;
          out << to_string(model.natural_leq_gorge(mount(a), mount(b), bounds))
              << '\n';
        } else {
          out << tf(model.natural_leq(mount(a), mount(b))) << '\n';
        }
      } else if (c_idem->parsed()) {
        if (gorge) {
          auto r = model.idempotent_by_gorge(mount(a));
          out << (r == GorgeResult::Gorge      ? "true"
                  : r == GorgeResult::NotGorge ? "false"
                                               : "unknown")
              << '\n';
        } else {
          out << tf(model.is_idempotent(mount(a))) << '\n';
        }
      } else if (c_inv->parsed()) {
        print_set(model.inverses(mount(a)));
      } else if (c_sand->parsed()) {
        print_set(model.sandwich_set(mount(a), mount(b)));
      } else if (c_count->parsed()) {
        GenId       g  = parse_gen(store, peak);
        auto const  n  = store.height(g);
        std::size_t up = enumerate_uphills(store, g).size();
        std::size_t ms = enumerate_mountains(store, g).size();
        std::size_t eu = std::size_t(1) << n, em = std::size_t(1) << 2 * n;
        bool        ok = up == eu && ms == em;
        out << "uphills=" << up << " mountains=" << ms << " expected=" << eu
            << ',' << em << (ok ? " OK" : " MISMATCH") << '\n';
        return ok ? kExitOk : kExitValidation;
      } else if (c_gens->parsed()) {
        KindFilter f = kind == "e"   ? KindFilter::E
                       : kind == "d" ? KindFilter::D
                                     : KindFilter::All;
        for (GenId g : enumerate(store, gen_height, f)) {
          out << serialize(store, g) << '\n';
        }
      } else if (c_render->parsed()) {
        Landscape u = normalize_first ? beta(store, word(a))
                                      : parse_landscape(store, a);
        std::string text = format == "svg"    ? render_svg(store, u)
                           : format == "json" ? render_json(store, u).dump(2) + "\n"
                                              : render_ascii(store, u);
        if (output.empty()) {
          out << text;
        } else {
          std::ofstream f(output);
          if (!(f << text)) {
            throw Error(Errc::BadArgument, "cannot write '" + output + "'");
          }
        }
      } else if (c_skel->parsed()) {
        if (table.empty() && transformations == 0) {
          throw Error(Errc::BadArgument,
                      "pass --table FILE or --transformations N");
        }
        FiniteSemigroup s = table.empty()
                                ? full_transformation_monoid(transformations)
                                : load_table(table);
        auto xs    = parse_map(store.alphabet(), split_map(map_items));
        auto strat = strategy == "seeded" ? ChoiceStrategy::seeded(seed)
                                          : ChoiceStrategy::first();
        auto sk     = build_skeleton(store, s, xs, strat, sk_height);
        auto report = skeleton_report(sk, sk_height);
        if (probe > 0) {
          auto p          = weakly_generated_probe(s, xs, probe);
          report["probe"] = {{"result", to_string(p.kind)},
                             {"subset", p.subset}};
        }
        out << report.dump(2) << '\n';
        return report["checks"]["all_pass"].get<bool>() ? kExitOk
                                                        : kExitValidation;
      }
      return kExitOk;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_code(e.code());
    } catch (nlohmann::json::exception const& e) {
      err << "error: " << e.what() << '\n';
      return kExitSyntax;
    }
  }

}  // namespace weakgen
