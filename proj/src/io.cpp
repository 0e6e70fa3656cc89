#include "weylalt/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace weylalt {

Json weight_to_json(const Weight& w) {
  Json out = Json::array();
  for (const auto& c : w.coords()) {
    if (c.denominator() == 1) out.push_back(c.numerator());
    else out.push_back(to_string(c));
  }
  return out;
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be a JSON array");
  std::vector<Rational> coords;
  for (const auto& v : j) {
    if (v.is_number_integer()) coords.emplace_back(v.get<std::int64_t>());
    else if (v.is_string()) coords.push_back(parse_rational(v.get<std::string>()));
    else throw std::invalid_argument("weight coordinate must be an integer or a \"p/q\" string");
  }
  return Weight(std::move(coords));
}

Json word_to_json(const Word& w) { return Json(w); }

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("word must be a JSON array of generator indices");
  Word w;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("generator index must be an integer");
    w.push_back(v.get<int>());
  }
  return w;
}

namespace {

Json edge_json(const WeylElement& a, const WeylElement& b) {
  return Json::array({word_to_json(a.word()), word_to_json(b.word())});
}

}  // namespace

Json to_json(const RootSystem& rs, const AlternationSet& set) {
  Json out;
  out["root_system"] = rs.name();
  out["lambda"] = weight_to_json(set.lambda);
  out["mu"] = weight_to_json(set.mu);
  out["size"] = set.size();
  Json elements = Json::array();
  for (const auto& e : set.elements) elements.push_back(word_to_json(e.word()));
  out["elements"] = std::move(elements);
  Json edges = Json::array();
  for (const auto& [a, b] : set.right_cover_edges) edges.push_back(edge_json(a, b));
  out["right_cover_edges"] = std::move(edges);
  return out;
}

AlternationSet alternation_set_from_json(const RootSystem& rs, const Json& j) {
  try {
    if (j.at("root_system").get<std::string>() != rs.name())
      throw std::invalid_argument("document describes " + j.at("root_system").get<std::string>() + ", not " +
                                  rs.name());
    AlternationSet out{weight_from_json(j.at("lambda")), weight_from_json(j.at("mu")), {}, {}};
    for (const auto& w : j.at("elements")) out.elements.insert(from_word(rs, word_from_json(w)));
    for (const auto& e : j.at("right_cover_edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair of words");
      out.right_cover_edges.emplace_back(from_word(rs, word_from_json(e[0])), from_word(rs, word_from_json(e[1])));
    }
    if (j.at("size").get<std::size_t>() != out.size()) throw std::invalid_argument("size field disagrees with elements");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed alternation set document: ") + e.what());
  }
}

Json to_json(const RootSystem& rs, const BasSet& bas) {
  Json out;
  out["root_system"] = rs.name();
  out["lambda"] = weight_to_json(bas.lambda);
  out["mu"] = weight_to_json(bas.mu);
  Json members = Json::array();
  for (const auto& e : bas.members) members.push_back(word_to_json(e.word()));
  out["members"] = std::move(members);
  Json edges = Json::array();
  for (const auto& [a, b] : bas.dependence_edges) edges.push_back(edge_json(a, b));
  out["dependence_edges"] = std::move(edges);
  return out;
}

Json to_json(const Report& report) {
  Json out;
  out["name"] = report.name;
  out["ok"] = report.ok();
  out["checked"] = report.checked;
  out["failures"] = report.failures;
  return out;
}

Json to_json(const PowerSeries& series) {
  Json out;
  out["variables"] = Json::array();
  for (char v : series.variables()) out["variables"].push_back(std::string(1, v));
  out["truncation"] = series.truncation();
  Json terms = Json::array();
  for (const auto& [e, c] : series.terms()) {
    Json t;
    t["exponents"] = e;
    if (denominator(c) == 1) t["coefficient"] = numerator(c).str();
    else t["coefficient"] = c.str();
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string quoted(const WeylElement& e) { return "\"" + e.str() + "\""; }

}  // namespace

std::string hasse_dot(const AlternationSet& set, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& e : set.elements) os << "  " << quoted(e) << ";\n";
  for (const auto& [a, b] : set.right_cover_edges) os << "  " << quoted(a) << " -> " << quoted(b) << ";\n";
  os << "}\n";
  return os.str();
}

std::string hasse_dot(const RootSystem& rs, const ElementSet& elements, bool left_order, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& e : elements) os << "  " << quoted(e) << ";\n";
  for (const auto& e : elements) {
    auto ups = left_order ? left_covers(rs, e) : right_covers(rs, e);
    std::sort(ups.begin(), ups.end(), ByLengthThenWord{});
    for (const auto& u : ups)
      if (elements.count(u)) os << "  " << quoted(e) << " -> " << quoted(u) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string dependence_dot(const BasSet& bas, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=plaintext];\n";
  for (const auto& e : bas.members) os << "  " << quoted(e) << ";\n";
  for (const auto& [a, b] : bas.dependence_edges) os << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
  os << "}\n";
  return os.str();
}

std::string counts_csv(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  os << "r,i,j,count,formula_value,match\n";
  for (const auto& r : rows)
    os << r.r << ',' << r.i << ',' << r.j << ',' << r.count << ',' << r.formula_value << ','
       << (r.match ? "true" : "false") << '\n';
  return os.str();
}

std::string alternation_set_text(const AlternationSet& set) {
  std::ostringstream os;
  os << "lambda = (" << set.lambda.str() << "), mu = (" << set.mu.str() << ")\n";
  os << "|A| = " << set.size() << "\n";
  std::map<int, std::vector<std::string>> rows;
  for (const auto& e : set.elements) rows[e.length()].push_back(e.str());
  for (const auto& [len, words] : rows) {
    os << "length " << len << ":";
    for (const auto& w : words) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

std::string bas_text(const BasSet& bas) {
  std::ostringstream os;
  os << "lambda = (" << bas.lambda.str() << "), mu = (" << bas.mu.str() << ")\n";
  os << "|BAS| = " << bas.size() << "\n";
  std::map<int, std::vector<std::string>> rows;
  for (const auto& e : bas.members) rows[e.length()].push_back(e.str());
  for (const auto& [len, words] : rows) {
    os << "length " << len << ":";
    for (const auto& w : words) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

std::string catalog_text(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  std::map<char, std::vector<std::string>> rows;
  for (const auto& e : entries) {
    std::string w;
    for (int g : e.word) w += "s" + std::to_string(g);
    rows[e.shape].push_back(w);
  }
  for (char shape : {'a', 'b', 'c', 'd', 'e'}) {
    os << '(' << shape << ')';
    for (const auto& w : rows[shape]) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

}  // namespace weylalt
