#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <adhesive/adhesion.hpp>
#include <adhesive/dpo.hpp>
#include <adhesive/instances.hpp>
#include <adhesive/replay.hpp>
#include <adhesive/reproduce.hpp>
#include <adhesive/serialize.hpp>
#include <adhesive/sheaf.hpp>

namespace {

  using nlohmann::json;

  // Exit codes shared by every subcommand.
  constexpr int exit_ok         = 0;
  constexpr int exit_failed     = 1;
  constexpr int exit_parse      = 2;
  constexpr int exit_overflow   = 3;

  struct RunConfig {
    int         bound  = 3;
    unsigned    seed   = 7;
    std::string out;
    std::string format = "json";
    std::string replay;
  };

  json read_json(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw adh::Error(adh::ErrorKind::parse_error, "cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::exception const& e) {
      throw adh::Error(adh::ErrorKind::parse_error, path + ": " + e.what());
    }
  }

  void emit(RunConfig const& cfg, json const& report, std::string const& text) {
    std::string body = cfg.format == "text" ? text : report.dump(2) + "\n";
    if (cfg.out.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream out(cfg.out);
    if (!out) {
      throw adh::Error(adh::ErrorKind::parse_error, "cannot write " + cfg.out);
    }
    out << body;
  }

  std::string verdict(adh::Witness const& w) {
    return w.pass ? "pass" : "fail (" + w.reason + ")";
  }

  adh::Category const& instance_or_file(std::string const& arg) {
    if (auto const* cat = adh::find_instance(arg)) {
      return *cat;
    }
    // Otherwise a JSON file naming its category, e.g. any diagram file.
    auto j = read_json(arg);
    if (!j.is_object() || !j.contains("category") || !j["category"].is_string()) {
      throw adh::Error(adh::ErrorKind::parse_error, arg + ": not an instance name or a file with \"category\"");
    }
    auto const* cat = adh::find_instance(j["category"].get<std::string>());
    if (!cat) {
      throw adh::Error(adh::ErrorKind::parse_error, "unknown category " + j["category"].dump());
    }
    return *cat;
  }

  int cmd_classify(RunConfig const& cfg, std::string const& target) {
    auto const& cat   = instance_or_file(target);
    auto        start = std::chrono::steady_clock::now();
    auto        c     = adh::classify(cat, cfg.bound);
    double      secs  = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ostringstream text;
    text << c.category << " at bound " << c.bound << "\n";
    auto line = [&](char const* name, adh::Flag const& f) {
      text << "  " << name << ": " << (f.verified ? "verified" : "refuted") << " (" << f.checked << " checked)";
      if (!f.verified) {
        text << ", witness " << f.witness.check << ": " << f.witness.reason;
      }
      text << "\n";
    };
    line("adhesive", c.adhesive);
    line("rm-adhesive", c.rm_adhesive);
    line("q-adhesive", c.q_adhesive);
    text << "  time: " << secs << " s\n";
    emit(cfg, c.to_json(), text.str());
    return exit_ok;
  }

  int cmd_reproduce(RunConfig const& cfg, std::string const& name) {
    auto r = adh::reproduce(name, cfg.seed, cfg.bound);
    emit(cfg, r.report, r.name + ": " + (r.observed ? "expected outcome observed" : "REGRESSION") + "\n");
    return r.observed ? exit_ok : exit_failed;
  }

  json presheaf_report(adh::Site const& site, adh::Presheaf const& f, std::string const& label, std::ostringstream& text) {
    json value = adh::to_json(site.presentation(), f);
    json inputs{{"site", site.to_json()}, {"presheaf", value}};
    json entry{{"presheaf", label}, {"value", value}};
    auto j = adh::is_j_sheaf(site, f);
    entry["is_j_sheaf"] = adh::replayable(j, inputs);
    bool hyp = adh::kernel_hypothesis(site, f);
    entry["kernel_hypothesis"] = hyp;
    if (hyp) {
      entry["simplified_sheaf_check"] = adh::replayable(adh::simplified_sheaf_check(site, f), inputs);
    }
    auto k = adh::is_k_separated(site, f);
    entry["is_k_separated"] = adh::replayable(k, inputs);
    text << "  " << label << ": j-sheaf " << verdict(j) << ", k-separated " << verdict(k) << "\n";
    return entry;
  }

  int cmd_sheaf(RunConfig const& cfg, std::string const& site_path, std::string const& presheaf_path,
                std::string const& instance) {
    std::ostringstream text;
    if (!instance.empty()) {
      auto const* cat = adh::find_instance(instance);
      if (!cat) {
        throw adh::Error(adh::ErrorKind::parse_error, "unknown instance " + instance);
      }
      auto report = adh::embedding_report(*cat, cfg.bound);
      text << instance << " at bound " << cfg.bound << ": " << report.at("verdict").get<std::string>() << "\n"
           << "  " << report.at("summary").dump() << "\n";
      emit(cfg, report, text.str());
      return exit_ok;
    }
    if (site_path.empty()) {
      throw adh::Error(adh::ErrorKind::parse_error, "sheaf needs a site file or --instance");
    }
    auto site = adh::Site::from_json(read_json(site_path));
    auto const& p = site.presentation();
    json report{{"site", site_path}, {"families", {{"j", json::array()}, {"k", json::array()}}}};
    for (auto const& c : adh::j_families(site)) {
      report["families"]["j"].push_back(adh::to_json(p, c));
    }
    for (auto const& c : adh::k_families(site)) {
      report["families"]["k"].push_back(adh::to_json(p, c));
    }
    json checks = json::array();
    text << site_path << "\n";
    if (!presheaf_path.empty()) {
      checks.push_back(presheaf_report(site, adh::presheaf_from_json(p, read_json(presheaf_path)), presheaf_path, text));
    } else {
      for (int x = 0; x < p.object_count(); ++x) {
        checks.push_back(presheaf_report(site, adh::representable(p, x), "y(" + p.object_name(x) + ")", text));
      }
    }
    report["checks"] = checks;
    emit(cfg, report, text.str());
    return exit_ok;
  }

  int cmd_dpo(RunConfig const& cfg, std::string const& rule_path, std::string const& host_path) {
    auto rule = adh::rule_from_json(read_json(rule_path));
    auto cat  = &adh::instance_for(rule.L()->kind);
    auto host = adh::host_from_json(*cat, rule, read_json(host_path));

    std::vector<adh::Morphism> matches;
    if (host.match) {
      matches.push_back(*host.match);
    } else {
      matches = cat->homs(rule.L(), host.G);
    }
    json               steps = json::array();
    std::ostringstream text;
    int                applied = 0;
    for (auto const& m : matches) {
      auto d = adh::dpo_step(*cat, rule, m);
      json step{{"match", adh::to_json(m)}, {"derivation", adh::to_json(*cat, d)}};
      if (d.applicable) {
        ++applied;
        auto w = adh::complement_unique(*cat, rule.l, m, {d.left.B(), d.left.f, d.left.n, d.left_pushout},
                                        cat->carrier_size(*d.left.B()));
        step["complement_unique"] =
            adh::replayable(w, {{"complement", adh::square_diagram(*cat, d.left).to_json()}});
      }
      steps.push_back(step);
      text << "match " << adh::to_json(m).dump() << ": "
           << (d.applicable ? "H = " + adh::to_json(*d.H()).dump() : "inapplicable, " + d.reason) << "\n";
    }
    json report{{"rule", adh::to_json(*cat, rule)}, {"matches", matches.size()}, {"applied", applied},
                {"steps", steps}};
    emit(cfg, report, text.str());
    return exit_ok;
  }

  int cmd_replay(RunConfig const& cfg) {
    auto results = adh::replay_all(read_json(cfg.replay));
    bool all     = true;
    for (auto const& r : results) {
      all = all && r["replayed"].get<bool>();
    }
    std::ostringstream text;
    for (auto const& r : results) {
      text << r["check"].get<std::string>() << " (" << r["recorded"].get<std::string>()
           << "): " << (r["replayed"].get<bool>() ? "replayed" : "DIFFERS") << "\n";
    }
    emit(cfg, {{"witnesses", results}, {"all_replayed", all}}, text.str());
    return all && !results.empty() ? exit_ok : exit_failed;
  }

  int exit_code(adh::ErrorKind kind) {
    switch (kind) {
      case adh::ErrorKind::closure_overflow:
      case adh::ErrorKind::missing_kernel_pair:
      case adh::ErrorKind::unsupported_limit:
        return exit_overflow;
      case adh::ErrorKind::hypothesis_failed:
        return exit_failed;
      default:
        return exit_parse;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App  app{"Adhesivity checks on finite categories"};
  RunConfig cfg;
  app.add_option("--bound", cfg.bound, "carrier-size bound")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--out", cfg.out, "write the report here instead of stdout");
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--replay", cfg.replay, "replay every witness in a JSON report");
  app.fallthrough();

  std::string target, name, site, presheaf, instance, rule, graph;
  auto*       classify = app.add_subcommand("classify", "adhesive / rm-adhesive / q-adhesive verdicts");
  classify->add_option("target", target, "instance name or JSON file with \"category\"")->required();
  auto* reproduce = app.add_subcommand("reproduce", "run a scripted reproduction");
  reproduce->add_option("name", name)->required()->check(CLI::IsMember(adh::reproduction_names()));
  auto* sheaf = app.add_subcommand("sheaf", "sheaf conditions on a site, or an embedding report");
  sheaf->add_option("site", site, "presentation with declared squares");
  sheaf->add_option("presheaf", presheaf, "presheaf file; representables when omitted");
  sheaf->add_option("--instance", instance, "embedding report for a built-in instance");
  auto* dpo = app.add_subcommand("dpo", "double-pushout rewriting");
  dpo->add_option("rule", rule)->required();
  dpo->add_option("graph", graph, "host file {graph, match?}; all matches when match is absent")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_parse;
  }

  try {
    if (!cfg.replay.empty()) {
      return cmd_replay(cfg);
    }
    if (*classify) {
      return cmd_classify(cfg, target);
    }
    if (*reproduce) {
      return cmd_reproduce(cfg, name);
    }
    if (*sheaf) {
      return cmd_sheaf(cfg, site, presheaf, instance);
    }
    if (*dpo) {
      return cmd_dpo(cfg, rule, graph);
    }
    std::cerr << app.help();
    return exit_parse;
  } catch (adh::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  }
}
