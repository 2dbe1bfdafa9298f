#include "strata/io.hpp"

#include <algorithm>
#include <sstream>

#include "strata/error.hpp"

namespace strata {

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw StrataError(ErrorCode::ParseError, "'" + std::string(text) + "': " + why);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first == s.npos) return {};
  const auto last = s.find_last_not_of(" \t\n");
  return std::string(s.substr(first, last - first + 1));
}

LeafSet parse_group(std::string_view whole, std::string_view group) {
  LeafSet out = 0;
  auto take = [&](std::string_view label) {
    const Leaf leaf = Leaf::parse(trim(label));
    if (contains(out, leaf)) parse_fail(whole, "repeated label " + leaf.to_string());
    out |= bit(leaf);
  };
  if (group.find(',') != group.npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = group.find(',', start);
      take(group.substr(start, comma == group.npos ? group.npos : comma - start));
      if (comma == group.npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t p = 0; p < group.size(); ++p) take(group.substr(p, 1));
  }
  return out;
}

// "A|B" -> the side without a.
LeafSet parse_divisor(int n, std::string_view whole, std::string_view body) {
  const auto bar = body.find('|');
  if (bar == body.npos || body.find('|', bar + 1) != body.npos) parse_fail(whole, "expected A|B");
  const LeafSet left = parse_group(whole, trim(body.substr(0, bar)));
  const LeafSet right = parse_group(whole, trim(body.substr(bar + 1)));
  if ((left & right) != 0 || (left | right) != leaves_of(n)) parse_fail(whole, "A|B must partition the leaves");
  return contains(left, Leaf::kA) ? right : left;
}

// Leaves sitting directly at the vertex owning `clade`.
LeafSet leaves_at(const StableTree& tree, LeafSet clade) {
  LeafSet out = clade == tree.root_clade() ? bit(Leaf::kA) : 0;
  for (LeafSet child : tree.children_of(clade)) {
    if (size_of(child) == 1) out |= child;
  }
  return out;
}

std::string divisor_text(const StableTree& tree, LeafSet side) {
  return set_to_string(tree.all_leaves() & ~side) + "|" + set_to_string(side);
}

std::string leaf_text(Leaf leaf) { return leaf.to_string(); }

}  // namespace

std::string to_text(const StableTree& tree) {
  const auto& splits = tree.splits();
  switch (splits.size()) {
    case 0:
      return "(" + set_to_string(tree.all_leaves()) + ")";
    case 1:
      return "D(" + divisor_text(tree, splits[0]) + ")";
    case 2: {
      const LeafSet root = tree.root_clade();
      LeafSet x = splits[0];
      LeafSet y = splits[1];
      std::vector<LeafSet> path;
      if (is_subset(x, y) || is_subset(y, x)) {
        if (size_of(x) < size_of(y)) std::swap(x, y);
        path = {root, x, y};
      } else {
        // a sits in the middle; start from the end with the smaller label.
        if (min_index(y) < min_index(x)) std::swap(x, y);
        path = {x, root, y};
      }
      std::string out;
      for (LeafSet clade : path) {
        if (!out.empty()) out += "-";
        out += "(" + set_to_string(leaves_at(tree, clade)) + ")";
      }
      return out;
    }
    default: {
      std::string out = "{";
      for (std::size_t s = 0; s < splits.size(); ++s) {
        if (s) out += ", ";
        out += divisor_text(tree, splits[s]);
      }
      return out + "}";
    }
  }
}

StableTree parse_tree_text(int n, std::string_view raw) {
  if (n < 0 || n > kMaxN) throw StrataError(ErrorCode::BoundExceeded, "n out of range");
  const std::string text = trim(raw);
  if (text.empty()) parse_fail(raw, "empty");
  std::vector<LeafSet> sides;
  if (text.rfind("D(", 0) == 0 && text.back() == ')') {
    sides.push_back(parse_divisor(n, raw, std::string_view(text).substr(2, text.size() - 3)));
  } else if (text.front() == '{' && text.back() == '}') {
    // Divisors are separated by ", " or ";". Wide groups use bare commas.
    std::string body = text.substr(1, text.size() - 2);
    for (std::size_t at; (at = body.find(", ")) != std::string::npos;) body.replace(at, 2, ";");
    std::vector<std::string> pieces;
    std::stringstream in(body);
    for (std::string piece; std::getline(in, piece, ';');) pieces.push_back(piece);
    for (const std::string& piece : pieces) {
      if (!trim(piece).empty()) sides.push_back(parse_divisor(n, raw, trim(piece)));
    }
  } else if (text.front() == '(' && text.back() == ')') {
    std::vector<LeafSet> groups;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != '(') parse_fail(raw, "expected '('");
      const auto close = text.find(')', pos);
      if (close == text.npos) parse_fail(raw, "unclosed group");
      groups.push_back(parse_group(raw, std::string_view(text).substr(pos + 1, close - pos - 1)));
      pos = close + 1;
      if (pos < text.size()) {
        if (text[pos] != '-') parse_fail(raw, "expected '-' between vertices");
        ++pos;
      }
    }
    LeafSet seen = 0;
    for (LeafSet g : groups) {
      if ((seen & g) != 0) parse_fail(raw, "label used twice");
      seen |= g;
    }
    if (seen != leaves_of(n)) parse_fail(raw, "labels must cover a, b, c, 1..n");
    LeafSet left = 0;
    for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
      left |= groups[g];
      sides.push_back(contains(left, Leaf::kA) ? leaves_of(n) & ~left : left);
    }
  } else {
    parse_fail(raw, "unrecognized tree notation");
  }
  return StableTree::from_splits(n, sides);
}

Json to_json(const StableTree& tree) {
  Json splits = Json::array();
  for (LeafSet side : tree.splits()) {
    Json labels = Json::array();
    for (Leaf leaf : members(side)) labels.push_back(leaf.to_string());
    splits.push_back(std::move(labels));
  }
  return Json{{"n", tree.n()}, {"splits", std::move(splits)}};
}

StableTree tree_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<LeafSet> sides;
    for (const Json& labels : j.at("splits")) {
      LeafSet side = 0;
      for (const Json& label : labels) side |= bit(Leaf::parse(label.get<std::string>()));
      sides.push_back(side);
    }
    if (n < 0 || n > kMaxN) throw StrataError(ErrorCode::ParseError, "n out of range");
    return StableTree::from_splits(n, sides);
  } catch (const Json::exception& error) {
    throw StrataError(ErrorCode::ParseError, error.what());
  }
}

Json to_json(const StrataSum& sum) {
  Json terms = Json::array();
  for (const auto& [tree, mult] : sum.terms()) {
    terms.push_back(Json{{"tree", to_json(tree)}, {"text", to_text(tree)}, {"mult", mult}});
  }
  return Json{{"n", sum.n()},
              {"size", sum.size()},
              {"total", sum.total_multiplicity()},
              {"terms", std::move(terms)}};
}

StrataSum sum_from_json(const Json& j) {
  try {
    StrataSum sum(j.at("n").get<int>());
    for (const Json& term : j.at("terms")) {
      const auto mult = term.at("mult").get<std::int64_t>();
      if (mult <= 0) throw StrataError(ErrorCode::ParseError, "multiplicity must be positive");
      sum.add(tree_from_json(term.at("tree")), mult);
    }
    return sum;
  } catch (const Json::exception& error) {
    throw StrataError(ErrorCode::ParseError, error.what());
  }
}

Json to_json(const TournamentResult& result) {
  Json edges = Json::array();
  for (const auto& [side, label] : result.edge_labels) {
    Json labels = Json::array();
    for (Leaf leaf : members(side)) labels.push_back(leaf.to_string());
    edges.push_back(Json{{"edge", std::move(labels)}, {"label", label.to_string()}});
  }
  Json matches = Json::array();
  for (const Match& m : result.match_log) {
    matches.push_back(Json{{"loser", leaf_text(m.loser)}, {"winner", leaf_text(m.winner)},
                           {"advanced", leaf_text(m.advanced)}});
  }
  return Json{{"tree", to_json(result.tree)},
              {"text", to_text(result.tree)},
              {"wins", result.numbered_wins()},
              {"edge_labels", std::move(edges)},
              {"matches", std::move(matches)},
              {"ties", result.ties}};
}

TournamentResult tournament_from_json(const Json& j) {
  try {
    TournamentResult result;
    result.tree = tree_from_json(j.at("tree"));
    for (const Json& edge : j.at("edge_labels")) {
      LeafSet side = 0;
      for (const Json& label : edge.at("edge")) side |= bit(Leaf::parse(label.get<std::string>()));
      result.edge_labels.emplace(side, Leaf::parse(edge.at("label").get<std::string>()));
    }
    result.win_counts.assign(result.tree.leaf_count(), 0);
    for (const Json& m : j.at("matches")) {
      const Match match{Leaf::parse(m.at("loser").get<std::string>()),
                        Leaf::parse(m.at("winner").get<std::string>()),
                        Leaf::parse(m.at("advanced").get<std::string>())};
      if (match.winner.index() >= result.tree.leaf_count()) throw StrataError(ErrorCode::ParseError, "bad winner");
      ++result.win_counts[match.winner.index()];
      result.match_log.push_back(match);
    }
    if (result.numbered_wins() != j.at("wins").get<Composition>()) {
      throw StrataError(ErrorCode::ParseError, "wins disagree with the match log");
    }
    result.ties = j.at("ties").get<int>();
    return result;
  } catch (const Json::exception& error) {
    throw StrataError(ErrorCode::ParseError, error.what());
  }
}

namespace {

void dot_body(std::ostream& out, const StableTree& tree, const std::string& prefix, const std::string& indent) {
  const std::vector<LeafSet> clades = tree.vertex_clades();
  auto vertex_id = [&](LeafSet clade) {
    const auto p = std::find(clades.begin(), clades.end(), clade) - clades.begin();
    return prefix + "v" + std::to_string(p);
  };
  auto leaf_id = [&](int index) { return prefix + "l" + std::to_string(index); };
  for (int index = 0; index < tree.leaf_count(); ++index) {
    out << indent << leaf_id(index) << " [label=\"" << Leaf::from_index(index).to_string()
        << "\", shape=plaintext];\n";
  }
  for (LeafSet clade : clades) out << indent << vertex_id(clade) << " [label=\"\", shape=point];\n";
  out << indent << leaf_id(Leaf::kA) << " -- " << vertex_id(tree.root_clade()) << ";\n";
  for (LeafSet clade : clades) {
    for (LeafSet child : tree.children_of(clade)) {
      out << indent << vertex_id(clade) << " -- "
          << (size_of(child) == 1 ? leaf_id(min_index(child)) : vertex_id(child)) << ";\n";
    }
  }
}

}  // namespace

std::string to_dot(const StableTree& tree, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  label=\"" << to_text(tree) << "\";\n";
  dot_body(out, tree, "", "  ");
  out << "}\n";
  return out.str();
}

std::string to_dot(const StrataSum& sum) {
  std::ostringstream out;
  out << "graph S {\n";
  int t = 0;
  for (const auto& [tree, mult] : sum.terms()) {
    const std::string prefix = "t" + std::to_string(t) + "_";
    out << "  subgraph cluster_" << t << " {\n";
    out << "    label=\"" << (mult == 1 ? "" : std::to_string(mult) + " ") << to_text(tree) << "\";\n";
    dot_body(out, tree, prefix, "    ");
    out << "  }\n";
    ++t;
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const StrataSum& sum) {
  std::ostringstream out;
  for (const auto& [tree, mult] : sum.terms()) out << mult << "  " << to_text(tree) << "\n";
  return out.str();
}

}  // namespace strata
