// gpd: command-line access to the finite groupoid calculus.
//
// Exit codes: 0 success / property true, 1 property false, 2 parse error,
// 3 validation error, 4 size-guard refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpd/format.hpp"
#include "gpd/selftest.hpp"
#include "gpd/standard.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gpd::ParseError("cannot read file '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

gpd::GroupoidPtr need_groupoid(const gpd::Document& doc,
                               const std::string& name) {
  if (const gpd::GroupoidPtr* g = doc.find_groupoid(name)) return *g;
  throw gpd::ValidationError("unknown groupoid '" + name + "'");
}

const gpd::Functor& need_functor(const gpd::Document& doc,
                                 const std::string& name) {
  if (const gpd::Functor* f = doc.find_functor(name)) return *f;
  throw gpd::ValidationError("unknown functor '" + name + "'");
}

const gpd::Fraction& need_fraction(const gpd::Document& doc,
                                   const std::string& name) {
  if (const gpd::Fraction* f = doc.find_fraction(name)) return *f;
  throw gpd::ValidationError("unknown fraction '" + name + "'");
}

std::string sizes(const gpd::FiniteGroupoid& g) {
  return std::to_string(g.num_objects()) + " objects, " +
         std::to_string(g.num_arrows()) + " arrows";
}

json json_sizes(const gpd::FiniteGroupoid& g) {
  return json{{"objects", g.num_objects()}, {"arrows", g.num_arrows()}};
}

json json_profile(const gpd::FunctorProfile& p) {
  json j;
  j["i_faithful"] = p.i_faithful;
  j["s_full"] = p.s_full;
  j["inductor"] = p.inductor;
  j["essentially_surjective"] = p.essentially_surjective;
  j["equivalence"] = p.equivalence;
  j["s_equivalence"] = p.s_equivalence;
  j["actor"] = p.actor;
  j["inactor"] = p.inactor;
  j["exactor"] = p.exactor;
  j["s_functor"] = p.s_functor;
  j["s_extensor"] = p.s_extensor;
  j["subactor"] = p.subactor;
  j["uniferous"] = p.uniferous;
  j["principal_source"] = p.principal_source;
  if (p.split.has_value())
    j["split"] = *p.split;
  else
    j["split"] = nullptr;
  return j;
}

struct Output {
  bool as_json = false;
  json j = json::object();
  std::ostringstream text;

  void kv(const std::string& key, const std::string& value) {
    j[key] = value;
    text << key << ": " << value << "\n";
  }
  void kv(const std::string& key, bool value) {
    j[key] = value;
    text << key << ": " << (value ? "true" : "false") << "\n";
  }
  void kv(const std::string& key, long long value) {
    j[key] = value;
    text << key << ": " << value << "\n";
  }
  void line(const std::string& s) {
    text << s << "\n";
  }
  void flush() {
    if (as_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groupoid calculus: classes, functor profiles, and "
               "morphisms represented as fractions"};
  app.require_subcommand(1);
  app.fallthrough();

  int max_arrows = 64;
  int max_built = 2048;
  unsigned int seed = 1;
  bool as_json = false;
  app.add_option("--max-arrows", max_arrows,
                 "cap for exhaustive searches (default 64)");
  app.add_option("--max-built", max_built,
                 "cap for constructed groupoid sizes (default 2048)");
  app.add_option("--seed", seed, "seed for sampled constructions (default 1)");
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string file, name_a, name_b, name_c;

  CLI::App* cmd_classify = app.add_subcommand("classify", "class of a groupoid");
  cmd_classify->add_option("file", file)->required();
  cmd_classify->add_option("groupoid", name_a)->required();

  CLI::App* cmd_analyze = app.add_subcommand("analyze", "profile of a functor");
  cmd_analyze->add_option("file", file)->required();
  cmd_analyze->add_option("functor", name_a)->required();

  CLI::App* cmd_kernel = app.add_subcommand("kernel", "kernel of a functor");
  cmd_kernel->add_option("file", file)->required();
  cmd_kernel->add_option("functor", name_a)->required();

  CLI::App* cmd_holograph =
      app.add_subcommand("holograph", "expansion of a functor into a fraction");
  cmd_holograph->add_option("file", file)->required();
  cmd_holograph->add_option("functor", name_a)->required();

  CLI::App* cmd_reduce =
      app.add_subcommand("reduce", "irreducible representative of a fraction");
  cmd_reduce->add_option("file", file)->required();
  cmd_reduce->add_option("fraction", name_a)->required();

  CLI::App* cmd_equiv =
      app.add_subcommand("equiv", "decide equivalence of two fractions");
  cmd_equiv->add_option("file", file)->required();
  cmd_equiv->add_option("first", name_a)->required();
  cmd_equiv->add_option("second", name_b)->required();

  CLI::App* cmd_compose =
      app.add_subcommand("compose", "compose two fractions (second after first)");
  cmd_compose->add_option("file", file)->required();
  cmd_compose->add_option("second", name_a)->required();
  cmd_compose->add_option("first", name_b)->required();

  CLI::App* cmd_morita =
      app.add_subcommand("morita", "decide equivalence of two groupoids");
  cmd_morita->add_option("file", file)->required();
  cmd_morita->add_option("first", name_a)->required();
  cmd_morita->add_option("second", name_b)->required();

  CLI::App* cmd_pi1 =
      app.add_subcommand("pi1", "fundamental plurigroup of a groupoid");
  cmd_pi1->add_option("file", file)->required();
  cmd_pi1->add_option("groupoid", name_a)->required();

  CLI::App* cmd_bibundle =
      app.add_subcommand("bibundle", "two-sided action data of a fraction");
  cmd_bibundle->add_option("file", file)->required();
  cmd_bibundle->add_option("fraction", name_a)->required();

  CLI::App* cmd_gzprobe = app.add_subcommand(
      "gzprobe", "probes relating the two classical fraction calculi");
  CLI::App* probe_equiv =
      cmd_gzprobe->add_subcommand("equiv", "compare equivalence notions");
  probe_equiv->add_option("file", file)->required();
  probe_equiv->add_option("first", name_a)->required();
  probe_equiv->add_option("second", name_b)->required();
  CLI::App* probe_cstar = cmd_gzprobe->add_subcommand(
      "cstar", "pullback stability of a test functor");
  probe_cstar->add_option("file", file)->required();
  probe_cstar->add_option("functor", name_a)->required();
  probe_cstar->add_option("test", name_b)->required();
  CLI::App* probe_dstar = cmd_gzprobe->add_subcommand(
      "dstar", "search for an equalizing test map");
  probe_dstar->add_option("file", file)->required();
  probe_dstar->add_option("f", name_a)->required();
  probe_dstar->add_option("g", name_b)->required();
  probe_dstar->add_option("test", name_c)->required();
  cmd_gzprobe->require_subcommand(1);

  CLI::App* cmd_selftest =
      app.add_subcommand("selftest", "generated catalog and property suites");
  int max_objects = 4;
  cmd_selftest->add_option("--max-objects", max_objects,
                           "object ceiling for catalog bases (default 4)");

  CLI11_PARSE(app, argc, argv);

  gpd::SizeGuard guard;
  guard.max_arrows = max_arrows;
  guard.max_built_arrows = max_built;

  Output out;
  out.as_json = as_json;
  int code = 0;

  try {
    auto load = [&] { return gpd::parse_document(read_file(file)); };

    if (cmd_classify->parsed()) {
      const gpd::Document doc = load();
      const gpd::GroupoidPtr g = need_groupoid(doc, name_a);
      const std::string cls = gpd::classify(*g).to_string();
      if (as_json) {
        out.j["class"] = cls;
        out.j["size"] = json_sizes(*g);
      } else {
        out.line(cls);
      }
    } else if (cmd_analyze->parsed()) {
      const gpd::Document doc = load();
      const gpd::Functor& f = need_functor(doc, name_a);
      const gpd::FunctorProfile p = gpd::analyze_functor(f, guard);
      if (as_json) {
        out.j["profile"] = json_profile(p);
        out.j["dom"] = json_sizes(f.dom());
        out.j["cod"] = json_sizes(f.cod());
      } else {
        out.line("dom: " + sizes(f.dom()));
        out.line("cod: " + sizes(f.cod()));
        out.line("profile: " + p.to_string());
        if (p.essentially_surjective)
          out.line("note: essentially_surjective is also called essentially "
                   "surmersive");
      }
    } else if (cmd_kernel->parsed()) {
      const gpd::Document doc = load();
      const gpd::Functor& f = need_functor(doc, name_a);
      const gpd::EmbeddedSubgroupoid k = gpd::kernel(f);
      int non_units = 0;
      for (int a = 0; a < k.groupoid->num_arrows(); ++a)
        if (k.groupoid->unit(k.groupoid->src(a)) != a) ++non_units;
      out.kv("kernel", sizes(*k.groupoid));
      out.kv("non-units", static_cast<long long>(non_units));
      out.kv("class", gpd::classify(*k.groupoid).to_string());
    } else if (cmd_holograph->parsed()) {
      const gpd::Document doc = load();
      const gpd::Functor& f = need_functor(doc, name_a);
      const gpd::Holograph h = gpd::holograph(f, guard);
      const gpd::FunctorProfile pp = gpd::analyze_functor(h.numerator, guard);
      const gpd::FunctorProfile qp = gpd::analyze_functor(h.denominator, guard);
      if (as_json) {
        out.j["apex"] = json_sizes(*h.apex);
        out.j["numerator"] = json_profile(pp);
        out.j["denominator"] = json_profile(qp);
      } else {
        out.kv("apex", sizes(*h.apex));
        out.kv("numerator", pp.to_string());
        out.kv("denominator", qp.to_string());
      }
    } else if (cmd_reduce->parsed()) {
      const gpd::Document doc = load();
      const gpd::Fraction& fr = need_fraction(doc, name_a);
      const gpd::ReducedFraction red = gpd::reduce_fraction(fr, guard);
      out.kv("apex", sizes(fr.apex()));
      out.kv("reduced apex", sizes(red.fraction.apex()));
      out.kv("irreducible", gpd::is_irreducible(red.fraction, guard).irreducible());
      if (as_json) {
        out.j["apex"] = json_sizes(fr.apex());
        out.j["reduced apex"] = json_sizes(red.fraction.apex());
      }
    } else if (cmd_equiv->parsed()) {
      const gpd::Document doc = load();
      const gpd::Fraction& a = need_fraction(doc, name_a);
      const gpd::Fraction& b = need_fraction(doc, name_b);
      const auto w = gpd::fractions_equivalent(a, b, guard);
      if (w) {
        out.kv("verdict", std::string("equivalent"));
        out.kv("witness apex", sizes(*w->apex));
        if (as_json) out.j["witness apex"] = json_sizes(*w->apex);
      } else {
        out.kv("verdict", std::string("not equivalent"));
        code = 1;
      }
    } else if (cmd_compose->parsed()) {
      const gpd::Document doc = load();
      const gpd::Fraction& second = need_fraction(doc, name_a);
      const gpd::Fraction& first = need_fraction(doc, name_b);
      const gpd::Meromorphism m = gpd::compose_meromorphisms(
          gpd::Meromorphism(second, guard), gpd::Meromorphism(first, guard),
          guard);
      out.kv("source", sizes(m.source()));
      out.kv("target", sizes(m.target()));
      out.kv("reduced apex", sizes(m.fraction().apex()));
      if (as_json) {
        out.j["source"] = json_sizes(m.source());
        out.j["target"] = json_sizes(m.target());
        out.j["reduced apex"] = json_sizes(m.fraction().apex());
      }
    } else if (cmd_morita->parsed()) {
      const gpd::Document doc = load();
      const gpd::GroupoidPtr a = need_groupoid(doc, name_a);
      const gpd::GroupoidPtr b = need_groupoid(doc, name_b);
      const auto w = gpd::morita_equivalent(a, b, guard);
      if (w) {
        out.kv("verdict", std::string("equivalent"));
        out.kv("witness apex", sizes(*w->apex));
        if (as_json) out.j["witness apex"] = json_sizes(*w->apex);
      } else {
        out.kv("verdict", std::string("not equivalent"));
        code = 1;
      }
    } else if (cmd_pi1->parsed()) {
      const gpd::Document doc = load();
      const gpd::GroupoidPtr g = need_groupoid(doc, name_a);
      const gpd::FundamentalPlurigroup pi = gpd::fundamental_plurigroup(g, guard);
      out.kv("plurigroup", sizes(*pi.plurigroup));
      const gpd::Orbits orbits = gpd::compute_orbits(*g);
      out.kv("orbits", static_cast<long long>(orbits.members.size()));
      for (size_t i = 0; i < orbits.members.size(); ++i) {
        const gpd::VertexGroup v =
            gpd::vertex_group_at(*g, orbits.representative[i]);
        out.kv("orbit " + std::to_string(i) + " group order",
               static_cast<long long>(v.group->num_arrows()));
      }
      out.kv("unit class meriedric",
             gpd::is_meriedric_equivalence(pi.unit, guard));
      if (as_json) out.j["plurigroup"] = json_sizes(*pi.plurigroup);
    } else if (cmd_bibundle->parsed()) {
      const gpd::Document doc = load();
      const gpd::Fraction& fr = need_fraction(doc, name_a);
      const gpd::Meromorphism m(fr, guard);
      const gpd::Bibundle b = gpd::to_bibundle(m, guard);
      out.kv("carrier", static_cast<long long>(b.carrier));
      out.kv("left", sizes(*b.left));
      out.kv("right", sizes(*b.right));
      out.kv("valid", gpd::validate_bibundle(b).ok());
    } else if (cmd_gzprobe->parsed()) {
      const gpd::Document doc = load();
      if (probe_equiv->parsed()) {
        const gpd::Fraction& a = need_fraction(doc, name_a);
        const gpd::Fraction& b = need_fraction(doc, name_b);
        const gpd::GzEquivalenceProbe p = gpd::gz_equivalence_probe(a, b, guard);
        out.kv("refinement equivalent", p.hsh_equivalent);
        out.kv("canonical candidate commutes", p.gz_canonical_commutes);
        out.kv("composite denominator ok", p.gz_denominator_ok);
      } else if (probe_cstar->parsed()) {
        const gpd::Functor& f = need_functor(doc, name_a);
        const gpd::Functor& s = need_functor(doc, name_b);
        const gpd::GzCstarReport r = gpd::gz_cstar(f, s, guard);
        out.kv("holds", r.holds);
        out.kv("pulled profile", r.pulled_profile.to_string());
        if (!r.holds) code = 1;
      } else {
        const gpd::Functor& f = need_functor(doc, name_a);
        const gpd::Functor& g = need_functor(doc, name_b);
        const gpd::Functor& s = need_functor(doc, name_c);
        const gpd::GzDstarReport r = gpd::gz_dstar(f, g, s, guard);
        out.kv("found", r.found);
        out.kv("candidates tested", static_cast<long long>(r.candidates_tested));
        out.kv("arrow cap", static_cast<long long>(r.arrow_cap));
        out.kv("inconclusive", r.inconclusive);
        if (r.found && r.witness)
          out.kv("witness domain", sizes(*r.witness->domain));
        if (!r.found) code = 1;
      }
    } else if (cmd_selftest->parsed()) {
      gpd::SelftestOptions opt;
      opt.max_objects = max_objects;
      opt.seed = seed;
      opt.guard = guard;
      const gpd::SelftestReport report = gpd::run_selftest(opt);
      if (as_json) {
        json suites = json::array();
        for (const gpd::SuiteResult& s : report.suites) {
          json cases = json::array();
          for (const gpd::CaseResult& c : s.cases) {
            const char* st = c.status == gpd::CaseStatus::pass   ? "pass"
                             : c.status == gpd::CaseStatus::fail ? "fail"
                                                                 : "skip";
            cases.push_back(json{{"name", c.name},
                                 {"status", st},
                                 {"detail", c.detail}});
          }
          suites.push_back(json{{"name", s.name},
                                {"passed", s.passed()},
                                {"failed", s.failed()},
                                {"skipped", s.skipped()},
                                {"cases", cases}});
        }
        out.j["suites"] = suites;
        out.j["groupoids"] = report.num_groupoids;
        out.j["functors"] = report.num_functors;
        out.j["meromorphisms"] = report.num_meromorphisms;
        out.j["generation skips"] = report.generation_skips;
        out.j["result"] = report.all_passed() ? "PASS" : "FAIL";
      } else {
        out.line(report.render());
      }
      if (!report.all_passed()) code = 1;
    }
  } catch (const gpd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const gpd::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 4;
  } catch (const gpd::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const gpd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  out.flush();
  return code;
}
