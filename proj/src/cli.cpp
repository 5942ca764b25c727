#include "schubert/cli.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "schubert/constants.hpp"
#include "schubert/counting.hpp"
#include "schubert/errors.hpp"
#include "schubert/gamma.hpp"
#include "schubert/json_io.hpp"
#include "schubert/restriction.hpp"
#include "schubert/selftest.hpp"
#include "schubert/support.hpp"

namespace schubert::cli {

namespace {

struct Common {
  bool json = false;
  int jobs = 1;
  std::string cache_dir;
};

struct Args {
  std::string diagram, family, u, v, w, support, check;
  int k = 0;
  int n = 0;
  int rank = 0;
  bool direct = false;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto num = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw InvalidArgument("bad range '" + text + "', expected n1..n2");
    return value;
  };
  const std::string_view all(text);
  if (dots == std::string::npos) {
    const int n = num(all);
    return {n, n};
  }
  const int lo = num(all.substr(0, dots));
  const int hi = num(all.substr(dots + 2));
  if (lo > hi) throw InvalidArgument("bad range '" + text + "': empty");
  return {lo, hi};
}

/// Element in the family's group at an explicit rank or, by default, the
/// smallest rank containing every letter.
WeylElement element_in_family(const std::string& family, int rank, const std::string& text) {
  const Family f = parse_family(family);
  if (rank == 0) {
    const Word word = parse_word(text);
    rank = family_min_rank(f);
    for (int a : word) rank = std::max(rank, a);
  }
  return parse_element(build_diagram(f, rank), text);
}

Json element_json(const WeylElement& w) { return to_json(w.canonical_reduced_word()); }

std::string bool_word(bool b) { return b ? "match" : "MISMATCH"; }

Json class_json(const ClassEntry& c) {
  return Json{{"key", c.key},
              {"length", c.length},
              {"profile", c.profile},
              {"members", c.members},
              {"inner_sum", c.inner_sum},
              {"automorphisms", c.automorphisms},
              {"nw", to_json(c.nw)}};
}

void print_classes(std::ostream& out, const std::vector<ClassEntry>& classes) {
  for (const auto& c : classes)
    out << c.key << "  l=" << c.length << "  support=" << c.profile << "  aut=" << c.automorphisms
        << "  inner_sum=" << c.inner_sum << "  N_w(n)=" << to_string(c.nw) << " (n >= " << c.nw.threshold() << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant Schubert structure constants and the sums gamma_k(n)", "schubert"};
  app.require_subcommand(1);
  Common common;
  Args a;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Emit one JSON document");
    sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", common.cache_dir, "Directory for the constants cache (default: $SCHUBERT_CACHE_DIR)");
  };

  auto* restrict_cmd = app.add_subcommand("restrict", "Restriction of the class of v to the fixed point w");
  restrict_cmd->add_option("--diagram", a.diagram, "Diagram such as A3")->required();
  restrict_cmd->add_option("--v", a.v, "Element v")->required();
  restrict_cmd->add_option("--w", a.w, "Element w")->required();
  restrict_cmd->add_flag("--direct", a.direct, "Evaluate the operator product along the canonical word instead");
  add_common(restrict_cmd);

  auto* constant_cmd = app.add_subcommand("constant", "Equivariant structure constant C_{u,v}^w");
  constant_cmd->add_option("--diagram", a.diagram)->required();
  constant_cmd->add_option("--u", a.u)->required();
  constant_cmd->add_option("--v", a.v)->required();
  constant_cmd->add_option("--w", a.w)->required();
  add_common(constant_cmd);

  auto* inner_cmd = app.add_subcommand("inner-sum", "Sum of ordinary constants c_{u,v}^w over u, v");
  inner_cmd->add_option("--diagram", a.diagram)->required();
  inner_cmd->add_option("--w", a.w)->required();
  add_common(inner_cmd);

  auto* classes_cmd = app.add_subcommand("classes", "Equivalence classes of length-k elements");
  classes_cmd->add_option("--family", a.family)->required();
  classes_cmd->add_option("--k", a.k)->required()->check(CLI::NonNegativeNumber);
  add_common(classes_cmd);

  auto* count_cmd = app.add_subcommand("count", "Embeddings of a support, or N_w(n) for an element");
  count_cmd->add_option("--family", a.family)->required();
  count_cmd->add_option("--n", a.n, "Ambient rank")->required();
  auto* support_opt = count_cmd->add_option("--support", a.support, "Support profile such as A1+A2");
  auto* w_opt = count_cmd->add_option("--w", a.w, "Element (counts its class in W_n)");
  count_cmd->add_option("--rank", a.rank, "Rank the element is read in");
  support_opt->excludes(w_opt);
  add_common(count_cmd);

  auto* nwpoly_cmd = app.add_subcommand("nwpoly", "Counting polynomial N_w(n)");
  nwpoly_cmd->add_option("--family", a.family)->required();
  nwpoly_cmd->add_option("--w", a.w)->required();
  nwpoly_cmd->add_option("--rank", a.rank, "Rank the element is read in");
  add_common(nwpoly_cmd);

  auto* gamma_cmd = app.add_subcommand("gamma", "Polynomial gamma_k(n)");
  gamma_cmd->add_option("--family", a.family)->required();
  gamma_cmd->add_option("--k", a.k)->required()->check(CLI::NonNegativeNumber);
  gamma_cmd->add_option("--check", a.check, "Compare with the direct sum for n in n1..n2");
  add_common(gamma_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in property checks");
  add_common(selftest_cmd);

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    std::unique_ptr<ConstantCache> cache;
    std::optional<std::filesystem::path> dir;
    if (!common.cache_dir.empty()) dir = common.cache_dir;
    else dir = ConstantCache::dir_from_env();
    if (dir) cache = std::make_unique<ConstantCache>(*dir);
    GammaOptions opts{common.jobs, cache.get()};

    if (restrict_cmd->parsed()) {
      const DiagramPtr d = parse_diagram(a.diagram);
      const WeylElement v = parse_element(d, a.v);
      const WeylElement w = parse_element(d, a.w);
      const MultiPoly p = a.direct ? restrict_direct(v, w, w.canonical_reduced_word()) : restrict(v, w);
      if (common.json)
        out << Json{{"diagram", d->name()}, {"v", element_json(v)}, {"w", element_json(w)}, {"restriction", to_json(p)}}.dump()
            << '\n';
      else
        out << to_string(p) << '\n';
      return 0;
    }
    if (constant_cmd->parsed()) {
      const DiagramPtr d = parse_diagram(a.diagram);
      const WeylElement u = parse_element(d, a.u), v = parse_element(d, a.v), w = parse_element(d, a.w);
      StructureConstants sc(cache.get());
      const MultiPoly c = sc.equivariant(u, v, w);
      const std::int64_t ordinary = sc.ordinary(u, v, w);
      if (common.json)
        out << Json{{"diagram", d->name()}, {"u", element_json(u)}, {"v", element_json(v)}, {"w", element_json(w)},
                    {"equivariant", to_json(c)}, {"ordinary", ordinary}}.dump()
            << '\n';
      else
        out << "equivariant: " << to_string(c) << "\nordinary: " << ordinary << '\n';
      return 0;
    }
    if (inner_cmd->parsed()) {
      const DiagramPtr d = parse_diagram(a.diagram);
      const WeylElement w = parse_element(d, a.w);
      StructureConstants sc(cache.get());
      const auto s = sc.inner_sum(w);
      if (common.json)
        out << Json{{"diagram", d->name()}, {"w", element_json(w)}, {"inner_sum", s}}.dump() << '\n';
      else
        out << s << '\n';
      return 0;
    }
    if (classes_cmd->parsed()) {
      const Family f = parse_family(a.family);
      const auto classes = length_classes(f, a.k, opts);
      if (common.json) {
        Json arr = Json::array();
        for (const auto& c : classes) arr.push_back(class_json(c));
        out << Json{{"family", std::string(1, family_letter(f))}, {"k", a.k}, {"classes", arr}}.dump() << '\n';
      } else {
        print_classes(out, classes);
      }
      return 0;
    }
    if (count_cmd->parsed()) {
      const Family f = parse_family(a.family);
      const DiagramPtr ambient = build_diagram(f, a.n);
      Json doc{{"family", std::string(1, family_letter(f))}, {"n", a.n}};
      std::int64_t value = 0;
      if (!a.w.empty()) {
        const WeylElement w = element_in_family(a.family, a.rank, a.w);
        value = N_w_count(w, a.n);
        doc["w"] = element_json(w);
        doc["count"] = value;
      } else if (!a.support.empty()) {
        const CartanMatrix pattern = parse_profile(a.support);
        value = enumerate_embeddings(pattern, *ambient);
        doc["support"] = a.support;
        doc["embeddings"] = value;
        doc["placements"] = placement_count(pattern, *ambient);
      } else {
        throw InvalidArgument("count needs --support or --w");
      }
      if (common.json) out << doc.dump() << '\n';
      else out << value << '\n';
      return 0;
    }
    if (nwpoly_cmd->parsed()) {
      const WeylElement w = element_in_family(a.family, a.rank, a.w);
      const UniPolyQ p = N_w_polynomial(w);
      if (common.json)
        out << Json{{"w", element_json(w)}, {"polynomial", to_json(p)}}.dump() << '\n';
      else
        out << to_string(p) << "  (n >= " << p.threshold() << ")\n";
      return 0;
    }
    if (gamma_cmd->parsed()) {
      const Family f = parse_family(a.family);
      const GammaResult g = gamma_polynomial(f, a.k, opts);
      Json checks = Json::array();
      std::ostringstream lines;
      bool ok = true;
      if (!a.check.empty()) {
        const auto [lo, hi] = parse_range(a.check);
        for (int n = lo; n <= hi; ++n) {
          if (n < family_min_rank(f)) {
            lines << "n=" << n << ": skipped, no rank-" << n << " diagram\n";
            continue;
          }
          const Rational formula = g.polynomial.evaluate(n);
          const std::int64_t oracle = gamma_bruteforce(f, a.k, n, opts);
          const bool match = formula == Rational(oracle);
          const bool in_range = n >= g.polynomial.threshold();
          if (in_range && !match) ok = false;
          checks.push_back(Json{{"n", n}, {"formula", to_json(formula)}, {"oracle", oracle}, {"match", match},
                                {"above_threshold", in_range}});
          lines << "n=" << n << ": formula " << to_string(formula) << ", direct " << oracle << ", "
                << bool_word(match) << (in_range ? "" : " (below threshold)") << '\n';
        }
      }
      if (common.json) {
        Json arr = Json::array();
        for (const auto& c : g.classes) arr.push_back(class_json(c));
        Json doc{{"family", std::string(1, family_letter(f))}, {"k", a.k}, {"polynomial", to_json(g.polynomial)},
                 {"classes", arr}};
        if (!a.check.empty()) doc["check"] = checks;
        out << doc.dump() << '\n';
      } else {
        out << "gamma_" << a.k << "(n) = " << to_string(g.polynomial) << "  (n >= " << g.polynomial.threshold() << ")\n";
        print_classes(out, g.classes);
        out << lines.str();
      }
      if (!ok) {
        err << "error: gamma polynomial disagrees with the direct sum above its threshold\n";
        return 1;
      }
      return 0;
    }
    if (selftest_cmd->parsed()) return run_selftest(out, common.jobs) ? 0 : 1;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace schubert::cli
