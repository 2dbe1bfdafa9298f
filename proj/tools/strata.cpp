// strata: command-line front end for the slide, tournament, kappa, oracle,
// pattern and count computations.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "strata/counts.hpp"
#include "strata/error.hpp"
#include "strata/geometry.hpp"
#include "strata/io.hpp"
#include "strata/kappa.hpp"
#include "strata/patterns.hpp"
#include "strata/slide.hpp"
#include "strata/tournament.hpp"

using namespace strata;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct Common {
  std::string format = "text";
  int max_n = default_max_n();
};

void require_bound(int n, const Common& common) {
  if (n > common.max_n) {
    throw StrataError(ErrorCode::BoundExceeded,
                      "n=" + std::to_string(n) + " exceeds max n " + std::to_string(common.max_n));
  }
}

std::string sum_csv(const StrataSum& sum) {
  std::ostringstream out;
  out << "multiplicity,tree\n";
  for (const auto& [tree, mult] : sum.terms()) out << mult << ",\"" << to_text(tree) << "\"\n";
  return out.str();
}

void print_sum(const StrataSum& sum, const Common& common) {
  if (common.format == "json") {
    std::cout << to_json(sum).dump(2) << "\n";
  } else if (common.format == "dot") {
    std::cout << to_dot(sum);
  } else if (common.format == "csv") {
    std::cout << sum_csv(sum);
  } else {
    std::cout << "# n=" << sum.n() << " strata=" << sum.size() << " total=" << sum.total_multiplicity() << "\n"
              << to_text(sum);
  }
}

void print_tree(const StableTree& tree, const Common& common) {
  if (common.format == "json") {
    std::cout << to_json(tree).dump(2) << "\n";
  } else if (common.format == "dot") {
    std::cout << to_dot(tree);
  } else {
    std::cout << to_text(tree) << "\n";
  }
}

// ---------------------------------------------------------------------------
// Oracle sweeps

// The tree with edges e_c, e_1, ..., e_{n-1} along a path.
StableTree common_tree(int n) {
  std::vector<LeafSet> sides;
  LeafSet tail = 0;
  for (int j = n; j >= 1; --j) {
    tail |= bit(Leaf::numbered(j));
    if (j < n) sides.push_back(tail);
  }
  if (n >= 1) sides.push_back(tail | bit(Leaf::kC));
  return StableTree::from_splits(n, sides);
}

StableTree random_stable_tree(int n, std::mt19937_64& rng) {
  StableTree tree = StableTree::interior(0);
  for (int j = 1; j <= n; ++j) {
    std::vector<LeafSet> edges;
    for (int index = 1; index < tree.leaf_count(); ++index) edges.push_back(bit(index));
    edges.insert(edges.end(), tree.splits().begin(), tree.splits().end());
    edges.push_back(tree.root_clade());
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    tree = insert_leaf_on_edge(tree, edges[pick(rng)]);
  }
  std::bernoulli_distribution keep(0.5);
  for (LeafSet side : std::vector<LeafSet>(tree.splits())) {
    if (!keep(rng)) tree = contract_split(tree, side);
  }
  return tree;
}

Composition random_composition(int n, std::mt19937_64& rng) {
  Composition k(n, 0);
  std::uniform_int_distribution<int> slot(0, n - 1);
  for (int unit = 0; unit < n; ++unit) ++k[slot(rng)];
  return k;
}

struct Sweep {
  explicit Sweep(std::string label) : name(std::move(label)) {}

  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

Sweep check_slides(int max_n) {
  Sweep sweep{"slides"};
  for (int n = 1; n <= max_n; ++n) {
    for_each_stable(n, [&](const StableTree& tree) {
      for (int i = 1; i <= n; ++i) sweep.check(oracle_slide(tree, i) == slide_i(tree, i), to_text(tree));
    }, max_n);
  }
  return sweep;
}

Sweep check_limits(int max_n) {
  Sweep sweep{"limits"};
  for (int n = 1; n <= max_n; ++n) {
    for (const Composition& k : weak_compositions(n, n)) {
      for (Flavor flavor : {Flavor::Psi, Flavor::Omega}) {
        sweep.check(iterated_limit(k, flavor) == slide_set(k, flavor),
                    std::string(to_string(flavor)) + " " + composition_to_string(k));
      }
    }
  }
  return sweep;
}

Sweep check_labelings(int max_n) {
  Sweep sweep{"labelings"};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<StableTree> trees;
    for_each_stable(n, [&](const StableTree& tree) { trees.push_back(tree); }, max_n);
    for (const Composition& k : weak_compositions(n, n)) {
      for (Flavor flavor : {Flavor::Psi, Flavor::Omega}) {
        StrataSum accepted(n);
        for (const StableTree& tree : trees) {
          if (admits_labeling(tree, k, flavor)) accepted.add(tree);
        }
        sweep.check(accepted == slide_set(k, flavor), std::string(to_string(flavor)) + " " + composition_to_string(k));
      }
    }
  }
  return sweep;
}

Sweep check_tour(int max_n) {
  Sweep sweep{"tour"};
  for (int n = 1; n <= max_n; ++n) {
    const auto counts = tour_counts(n, max_n);
    std::int64_t all = 0;
    for (const Composition& k : weak_compositions(n, n)) {
      const auto it = counts.find(k);
      const std::int64_t tours = it == counts.end() ? 0 : it->second;
      all += tours;
      sweep.check(tours == static_cast<std::int64_t>(slide_set_omega(k).size()), composition_to_string(k));
    }
    sweep.check(BigInt(all) == double_factorial_odd(n), "total n=" + std::to_string(n));
  }
  return sweep;
}

Sweep check_multinomial(int max_n) {
  Sweep sweep{"multinomial"};
  for (int n = 1; n <= max_n; ++n) {
    for (const Composition& k : weak_compositions(n, n)) {
      sweep.check(BigInt(slide_set_psi(k).size()) == multinomial(k), composition_to_string(k));
    }
  }
  return sweep;
}

Sweep check_properties(int n, long cases, std::uint64_t seed) {
  Sweep sweep{"properties"};
  std::mt19937_64 rng(seed);
  std::map<std::pair<Composition, Flavor>, StrataSum> cache;
  auto slides = [&](const Composition& k, Flavor flavor) -> const StrataSum& {
    auto key = std::make_pair(k, flavor);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, slide_set(k, flavor)).first;
    return it->second;
  };
  const StableTree t0 = common_tree(n);
  std::uniform_int_distribution<int> leaf(1, n);
  for (long c = 0; c < cases; ++c) {
    const StableTree tree = random_stable_tree(n, rng);
    const int i = leaf(rng);
    const std::vector<StableTree> out = slide_i(tree, i);
    const int deg = tree.degree_at(Leaf::numbered(i));
    const std::string where = to_text(tree) + " i=" + std::to_string(i);
    sweep.check(static_cast<long>(out.size()) == (1L << (deg - 3)) - 1, "size " + where);
    bool undone = true;
    bool valency = true;
    for (const StableTree& result : out) {
      undone &= contract_split(result, result.clade_at(Leaf::numbered(i))) == tree;
      valency &= result.extra_valency() == tree.extra_valency() - 1;
    }
    sweep.check(undone, "injectivity " + where);
    sweep.check(valency, "extra valency " + where);

    const Composition k = random_composition(n, rng);
    Composition shuffled = k;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    sweep.check(slides(k, Flavor::Psi).size() == slides(shuffled, Flavor::Psi).size(),
                composition_to_string(k) + " vs " + composition_to_string(shuffled));
    sweep.check(slides(k, Flavor::Omega).contains(t0) == is_catalan(k), "catalan " + composition_to_string(k));
    sweep.check(slides(k, Flavor::Psi).contains(t0) == is_almost_catalan(k),
                "almost catalan " + composition_to_string(k));
  }
  return sweep;
}

int report(const std::vector<Sweep>& sweeps) {
  int status = 0;
  for (const Sweep& sweep : sweeps) {
    std::cout << sweep.name << ": " << sweep.cases << " checks, " << sweep.failures << " failures";
    if (sweep.failures) {
      std::cout << " (first: " << sweep.first_failure << ")";
      status = kExitCheckFailed;
    }
    std::cout << "\n";
  }
  return status;
}

Permutation parse_word(const std::string& text) {
  if (text.find(',') != std::string::npos) return parse_composition(text);
  Permutation w;
  for (char ch : text) {
    if (ch < '1' || ch > '9') throw StrataError(ErrorCode::ParseError, "bad word '" + text + "'");
    w.push_back(ch - '0');
  }
  return w;
}

std::string word_to_string(const Permutation& w) {
  const bool wide = std::any_of(w.begin(), w.end(), [](int v) { return v >= 10; });
  std::string out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (wide && p) out += ',';
    out += std::to_string(w[p]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StrataError(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary strata of M_{0,n+3} via slide rules and lazy tournaments"};
  app.require_subcommand(1);
  Common common;
  std::string flavor_text = "psi";
  std::string k_text;
  int n = -1;
  int i = -1;
  std::string r_text;

  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--max-n", common.max_n, "Bound on n (default from STRATA_MAX_N, else 7)")
        ->check(CLI::Range(0, kMaxN));
  };

  auto* slide = app.add_subcommand("slide", "Slide^psi(k) or Slide^omega(k)");
  slide->add_option("--k", k_text, "Composition, e.g. 1,0,2")->required();
  slide->add_option("--flavor", flavor_text, "psi or omega")->check(CLI::IsMember({"psi", "omega"}));
  add_common(slide, {"text", "json", "dot", "csv"});

  auto* tour = app.add_subcommand("tour", "Tour(k) with tournament data");
  tour->add_option("--k", k_text, "Composition")->required();
  add_common(tour, {"text", "json", "dot", "csv"});

  std::string route = "slide";
  auto* kappa = app.add_subcommand("kappa", "kappa_i or R_{n;r} expansions");
  kappa->add_option("--n", n, "n, for M_{0,n+3}")->required();
  auto* i_opt = kappa->add_option("--i", i, "kappa index");
  auto* r_opt = kappa->add_option("--r", r_text, "Exponents r_1,...,r_m for R_{n;r}");
  i_opt->excludes(r_opt);
  kappa->add_option("--route", route, "slide (trivalence test) or degrees (weighted)")
      ->check(CLI::IsMember({"slide", "degrees"}));
  add_common(kappa, {"text", "json", "dot", "csv"});

  std::string check = "all";
  std::uint64_t seed = 1;
  long cases = 1000;
  auto* oracle = app.add_subcommand("oracle", "Cross-check independent computations");
  oracle->add_option("--check", check, "slides, limits, labelings, tour, multinomial, properties, main or all")
      ->check(CLI::IsMember({"slides", "limits", "labelings", "tour", "multinomial", "properties", "main", "all"}));
  oracle->add_option("--n", n, "Largest n swept (properties: the n sampled)");
  oracle->add_option("--k", k_text, "Composition for --check main");
  oracle->add_option("--flavor", flavor_text, "psi or omega, for --check main")
      ->check(CLI::IsMember({"psi", "omega"}));
  oracle->add_option("--seed", seed, "Seed for the randomized sweep");
  oracle->add_option("--cases", cases, "Random cases for the property sweep")->check(CLI::PositiveNumber);
  add_common(oracle, {"text"});

  auto* patterns = app.add_subcommand("patterns", "23-1 avoiders and caterpillars");
  patterns->require_subcommand(1);
  auto* avoiders = patterns->add_subcommand("avoiders", "List 23-1 avoiding permutations");
  avoiders->add_option("--n", n, "Length")->required();
  add_common(avoiders, {"text", "json", "csv"});
  std::string word_text;
  auto* to_tree = patterns->add_subcommand("tree", "Leaf labeling of a 23-1 avoider");
  to_tree->add_option("--word", word_text, "Permutation, e.g. 2143 or 2,1,4,3")->required();
  add_common(to_tree, {"text", "json", "dot"});
  std::string tree_text;
  auto* to_word = patterns->add_subcommand("word", "Reading word of a caterpillar");
  to_word->add_option("--n", n, "n")->required();
  to_word->add_option("--tree", tree_text, "Tree, e.g. \"{ab|c1234, ...}\"")->required();
  add_common(to_word, {"text", "json"});
  auto* bell_cmd = patterns->add_subcommand("bell", "Bell numbers against avoider and caterpillar counts");
  bell_cmd->add_option("--n", n, "Largest n")->required();
  add_common(bell_cmd, {"text", "json", "csv"});

  auto* counts = app.add_subcommand("counts", "Multidegree table for one n");
  counts->add_option("--n", n, "n")->required();
  add_common(counts, {"text", "json", "csv"});

  std::string input;
  auto* exporter = app.add_subcommand("export", "Convert a tree or a JSON sum between formats");
  exporter->add_option("--n", n, "n (with --tree)");
  auto* tree_opt = exporter->add_option("--tree", tree_text, "Tree in text notation");
  auto* input_opt = exporter->add_option("--input", input, "JSON file holding a tree or a sum");
  tree_opt->excludes(input_opt);
  add_common(exporter, {"text", "json", "dot", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*slide) {
      const Composition k = parse_composition(k_text);
      require_bound(static_cast<int>(k.size()), common);
      print_sum(slide_set(k, parse_flavor(flavor_text)), common);
      return 0;
    }

    if (*tour) {
      const Composition k = parse_composition(k_text);
      require_bound(static_cast<int>(k.size()), common);
      const StrataSum set = tour_set(k, common.max_n);
      if (common.format == "json") {
        Json trees = Json::array();
        for (const StableTree& tree : set.trees()) trees.push_back(to_json(lazy_tournament(tree)));
        std::cout << Json{{"k", k}, {"size", set.size()}, {"tournaments", std::move(trees)}}.dump(2) << "\n";
      } else if (common.format == "csv") {
        std::cout << "tree,wins\n";
        for (const StableTree& tree : set.trees()) {
          std::cout << "\"" << to_text(tree) << "\",\"" << composition_to_string(lazy_tournament(tree).numbered_wins())
                    << "\"\n";
        }
      } else {
        print_sum(set, common);
      }
      return 0;
    }

    if (*kappa) {
      require_bound(n + (r_opt->count() ? static_cast<int>(parse_composition(r_text).size()) : 1), common);
      StrataSum result(n);
      if (r_opt->count()) {
        if (route != "slide") throw StrataError(ErrorCode::BadComposition, "--route applies to --i only");
        result = generalized_kappa(n, parse_composition(r_text));
      } else {
        if (i < 0) throw StrataError(ErrorCode::BadDegree, "give --i or --r");
        result = route == "slide" ? kappa_expansion(n, i) : kappa_expansion_via_degrees(n, i);
      }
      print_sum(result, common);
      return 0;
    }

    if (*oracle) {
      if (check == "main") {
        const Composition k = parse_composition(k_text);
        require_bound(static_cast<int>(k.size()), common);
        const Flavor flavor = parse_flavor(flavor_text);
        int degenerate = 0;
        Sweep sweep("main " + std::string(to_string(flavor)) + " " + composition_to_string(k));
        sweep.check(iterated_limit(k, flavor, &degenerate) == slide_set(k, flavor), "limit differs from slide set");
        std::cout << "degenerate restrictions: " << degenerate << "\n";
        return report({sweep});
      }
      if (n < 0) throw StrataError(ErrorCode::ParseError, "--check " + check + " needs --n");
      require_bound(n, common);
      std::vector<Sweep> sweeps;
      auto want = [&](const char* name) { return check == "all" || check == name; };
      if (want("slides")) sweeps.push_back(check_slides(n));
      if (want("limits")) sweeps.push_back(check_limits(n));
      if (want("labelings")) sweeps.push_back(check_labelings(n));
      if (want("tour")) sweeps.push_back(check_tour(n));
      if (want("multinomial")) sweeps.push_back(check_multinomial(n));
      if (want("properties") && n >= 1) sweeps.push_back(check_properties(n, cases, seed));
      return report(sweeps);
    }

    if (*avoiders) {
      require_bound(n, common);
      const auto words = avoiders_231_dash(n);
      if (common.format == "json") {
        Json list = Json::array();
        for (const auto& w : words) list.push_back(word_to_string(w));
        std::cout << Json{{"n", n}, {"count", words.size()}, {"avoiders", std::move(list)}}.dump(2) << "\n";
      } else {
        if (common.format == "csv") std::cout << "word\n";
        for (const auto& w : words) std::cout << word_to_string(w) << "\n";
      }
      return 0;
    }

    if (*to_tree) {
      print_tree(leaf_labeling(parse_word(word_text)), common);
      return 0;
    }

    if (*to_word) {
      const Permutation w = reading_word(parse_tree_text(n, tree_text));
      if (common.format == "json") {
        std::cout << Json{{"word", w}}.dump() << "\n";
      } else {
        std::cout << word_to_string(w) << "\n";
      }
      return 0;
    }

    if (*bell_cmd) {
      require_bound(n, common);
      Json rows = Json::array();
      bool agree = true;
      if (common.format == "csv") std::cout << "n,bell,avoiders,caterpillars\n";
      if (common.format == "text") std::cout << "n  bell  avoiders  caterpillars\n";
      for (int m = 0; m <= n; ++m) {
        std::size_t caterpillars = 0;
        for (const StableTree& tree : slide_set_omega(Composition(m, 1)).trees()) caterpillars += tree.is_caterpillar();
        const std::size_t avoider_count = avoiders_231_dash(m).size();
        const std::uint64_t b = bell(m);
        agree &= avoider_count == b && caterpillars == b;
        if (common.format == "json") {
          rows.push_back(Json{{"n", m}, {"bell", b}, {"avoiders", avoider_count}, {"caterpillars", caterpillars}});
        } else if (common.format == "csv") {
          std::cout << m << "," << b << "," << avoider_count << "," << caterpillars << "\n";
        } else {
          std::cout << m << "  " << b << "  " << avoider_count << "  " << caterpillars << "\n";
        }
      }
      if (common.format == "json") std::cout << rows.dump(2) << "\n";
      return agree ? 0 : kExitCheckFailed;
    }

    if (*counts) {
      require_bound(n, common);
      Json rows = Json::array();
      BigInt psi_total = 0;
      BigInt omega_total = 0;
      if (common.format == "csv") std::cout << "k,multinomial,asym_multinomial,catalan,almost_catalan\n";
      for (const Composition& k : weak_compositions(n, n)) {
        const BigInt psi = multinomial(k);
        const BigInt omega = asym_multinomial(k);
        psi_total += psi;
        omega_total += omega;
        if (common.format == "json") {
          rows.push_back(Json{{"k", k},
                              {"multinomial", psi.str()},
                              {"asym_multinomial", omega.str()},
                              {"catalan", is_catalan(k)},
                              {"almost_catalan", is_almost_catalan(k)}});
        } else if (common.format == "csv") {
          std::cout << "\"" << composition_to_string(k) << "\"," << psi << "," << omega << "," << is_catalan(k) << ","
                    << is_almost_catalan(k) << "\n";
        } else {
          std::cout << "(" << composition_to_string(k) << ")  " << psi << "  " << omega << "\n";
        }
      }
      if (common.format == "json") {
        std::cout << Json{{"n", n},
                          {"rows", std::move(rows)},
                          {"multinomial_total", psi_total.str()},
                          {"asym_total", omega_total.str()}}
                         .dump(2)
                  << "\n";
      } else if (common.format == "text") {
        std::cout << "total  " << psi_total << "  " << omega_total << "\n";
      }
      return 0;
    }

    if (*exporter) {
      if (tree_opt->count()) {
        if (n < 0) throw StrataError(ErrorCode::ParseError, "--tree needs --n");
        print_tree(parse_tree_text(n, tree_text), common);
        return 0;
      }
      if (!input_opt->count()) throw StrataError(ErrorCode::ParseError, "give --tree or --input");
      const Json j = [&] {
        try {
          return Json::parse(read_file(input));
        } catch (const Json::exception& error) {
          throw StrataError(ErrorCode::ParseError, error.what());
        }
      }();
      if (j.contains("terms")) {
        print_sum(sum_from_json(j), common);
      } else {
        print_tree(tree_from_json(j), common);
      }
      return 0;
    }
  } catch (const StrataError& error) {
    std::cerr << "strata: " << error.what() << "\n";
    return error.code() == ErrorCode::BoundExceeded ? kExitBound : kExitUsage;
  }
  return kExitUsage;
}
