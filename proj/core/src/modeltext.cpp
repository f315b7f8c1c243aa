#include "cucalc/modeltext.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cucalc {

namespace {

struct Token {
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  bool accept(const std::string& t) {
    if (tok_.text == t) {
      advance();
      return true;
    }
    return false;
  }
  Token expect(const std::string& t) {
    if (tok_.text != t)
      throw ParseError("expected '" + t + "', found '" + tok_.text + "'", tok_.line, tok_.col);
    return take();
  }
  bool done() const { return tok_.text.empty(); }

private:
  void advance() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_ = Token{"", line_, col_};
    if (pos_ >= s_.size()) return;
    char c = s_[pos_];
    auto word = [&](auto pred) {
      std::string out;
      while (pos_ < s_.size() && pred(s_[pos_])) {
        out.push_back(s_[pos_++]);
        ++col_;
      }
      return out;
    };
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      tok_.text = word([](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.';
      });
    } else if (s_.compare(pos_, 2, "<=") == 0) {
      tok_.text = "<=";
      pos_ += 2;
      col_ += 2;
    } else {
      tok_.text = std::string(1, c);
      ++pos_;
      ++col_;
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

std::vector<std::string> parse_name_list(Lexer& lx) {
  std::vector<std::string> out;
  lx.expect("[");
  if (!lx.accept("]")) {
    out.push_back(lx.take().text);
    while (lx.accept(",")) out.push_back(lx.take().text);
    lx.expect("]");
  }
  return out;
}

ScalarKind parse_kind(const Token& t) {
  if (t.text == "nbar") return ScalarKind::NBar;
  if (t.text == "zcu") return ScalarKind::ZCu;
  if (t.text == "extrat") return ScalarKind::ExtRat;
  throw ParseError("unknown scalar kind '" + t.text + "'", t.line, t.col);
}

CuModel parse_one(Lexer& lx);

CuModel parse_lsc(Lexer& lx) {
  Token open = lx.expect("{");
  std::vector<std::string> points;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::optional<ScalarKind> kind;
  std::vector<ScalarKind> kinds;
  bool saw_poset = false;
  while (!lx.accept("}")) {
    Token key = lx.take();
    if (key.text == "poset") {
      saw_poset = true;
      lx.expect("{");
      while (!lx.accept("}")) {
        Token pk = lx.take();
        lx.expect("=");
        if (pk.text == "points") {
          points = parse_name_list(lx);
        } else if (pk.text == "relations") {
          lx.expect("[");
          if (!lx.accept("]")) {
            do {
              Token a = lx.take();
              lx.expect("<=");
              Token b = lx.take();
              auto find = [&](const Token& t) -> std::size_t {
                for (std::size_t i = 0; i < points.size(); ++i)
                  if (points[i] == t.text) return i;
                throw ParseError("relation names unknown point '" + t.text + "'", t.line, t.col);
              };
              rel.push_back({find(a), find(b)});
            } while (lx.accept(","));
            lx.expect("]");
          }
        } else {
          throw ParseError("unknown poset field '" + pk.text + "'", pk.line, pk.col);
        }
        lx.accept(";");
      }
    } else if (key.text == "scalar") {
      lx.expect("=");
      kind = parse_kind(lx.take());
      lx.accept(";");
    } else if (key.text == "scalars") {
      lx.expect("=");
      lx.expect("[");
      do {
        kinds.push_back(parse_kind(lx.take()));
      } while (lx.accept(","));
      lx.expect("]");
      lx.accept(";");
    } else {
      throw ParseError("unknown lsc field '" + key.text + "'", key.line, key.col);
    }
  }
  if (!saw_poset || points.empty())
    throw ParseError("lsc model needs a poset with at least one point", open.line, open.col);
  try {
    FinitePoset poset(points, rel);
    if (!kinds.empty()) {
      if (kinds.size() != points.size())
        throw std::invalid_argument("scalars list arity differs from the point count");
      return make_lsc(std::move(poset), std::move(kinds));
    }
    return make_lsc(std::move(poset), kind.value_or(ScalarKind::NBar));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), open.line, open.col);
  }
}

CuModel parse_table(Lexer& lx) {
  Token open = lx.expect("{");
  std::vector<std::string> names;
  std::optional<std::string> zero;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<std::tuple<std::string, std::string, std::string>> sums;
  auto find = [&](const Token& t) -> std::size_t {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == t.text) return i;
    throw ParseError("unknown table element '" + t.text + "'", t.line, t.col);
  };
  while (!lx.accept("}")) {
    Token key = lx.take();
    if (key.text == "elements") {
      lx.expect("=");
      names = parse_name_list(lx);
      lx.accept(";");
    } else if (key.text == "zero") {
      lx.expect("=");
      zero = lx.take().text;
      lx.accept(";");
    } else if (key.text == "order") {
      lx.expect("=");
      lx.expect("[");
      if (!lx.accept("]")) {
        do {
          Token a = lx.take();
          lx.expect("<=");
          Token b = lx.take();
          order.push_back({find(a), find(b)});
        } while (lx.accept(","));
        lx.expect("]");
      }
      lx.accept(";");
    } else if (key.text == "add") {
      lx.expect("{");
      while (!lx.accept("}")) {
        Token a = lx.take();
        lx.expect("+");
        Token b = lx.take();
        lx.expect("=");
        Token c = lx.take();
        sums.emplace_back(a.text, b.text, c.text);
        lx.accept(";");
      }
    } else {
      throw ParseError("unknown table field '" + key.text + "'", key.line, key.col);
    }
  }
  if (names.empty()) throw ParseError("table model needs elements", open.line, open.col);
  if (!zero) throw ParseError("table model needs a zero element", open.line, open.col);
  std::size_t zi = names.size();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == *zero) zi = i;
  if (zi == names.size())
    throw ParseError("zero element '" + *zero + "' not in the element list", open.line, open.col);

  std::size_t n = names.size();
  std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    add[zi][i] = i;
    add[i][zi] = i;
  }
  auto idx = [&](const std::string& s) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == s) return i;
    throw ParseError("unknown table element '" + s + "'", open.line, open.col);
  };
  for (auto& [a, b, c] : sums) {
    add[idx(a)][idx(b)] = idx(c);
    add[idx(b)][idx(a)] = idx(c);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (add[i][j] == n)
        throw ParseError("addition table incomplete: " + names[i] + "+" + names[j] +
                             " not defined",
                         open.line, open.col);
  try {
    return make_table(names, zi, add, order);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), open.line, open.col);
  }
}

CuModel parse_one(Lexer& lx) {
  Token kw = lx.expect("model");
  Token kind = lx.take();
  if (kind.text == "lsc") return parse_lsc(lx);
  if (kind.text == "table") return parse_table(lx);
  if (kind.text == "torsion") {
    lx.expect("{");
    lx.expect("}");
    return make_torsion();
  }
  if (kind.text == "product") {
    lx.expect("{");
    lx.expect("factors");
    lx.expect("{");
    std::vector<CuModel> factors;
    while (lx.peek().text == "model") factors.push_back(parse_one(lx));
    lx.expect("}");
    lx.expect("}");
    try {
      return make_product(factors);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), kw.line, kw.col);
    }
  }
  throw ParseError("unknown model kind '" + kind.text + "'", kind.line, kind.col);
}

CuModel from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), 1, 1);
  }
  std::string kind = j.at("model").get<std::string>();
  try {
    if (kind == "lsc") {
      std::vector<std::string> points = j.at("poset").at("points").get<std::vector<std::string>>();
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (const auto& pr : j.at("poset").value("relations", nlohmann::json::array())) {
        auto find = [&](const std::string& s) -> std::size_t {
          for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == s) return i;
          throw std::invalid_argument("relation names unknown point '" + s + "'");
        };
        rel.push_back({find(pr.at(0).get<std::string>()), find(pr.at(1).get<std::string>())});
      }
      std::string sk = j.value("scalar", "nbar");
      ScalarKind kindv = sk == "zcu"      ? ScalarKind::ZCu
                         : sk == "extrat" ? ScalarKind::ExtRat
                                          : ScalarKind::NBar;
      return make_lsc(FinitePoset(points, rel), kindv);
    }
    if (kind == "torsion") return make_torsion();
    if (kind == "table") {
      std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
      auto idx = [&](const std::string& s) -> std::size_t {
        for (std::size_t i = 0; i < names.size(); ++i)
          if (names[i] == s) return i;
        throw std::invalid_argument("unknown table element '" + s + "'");
      };
      std::size_t zi = idx(j.at("zero").get<std::string>());
      std::size_t n = names.size();
      std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n, n));
      for (std::size_t i = 0; i < n; ++i) {
        add[zi][i] = i;
        add[i][zi] = i;
      }
      for (const auto& s : j.value("add", nlohmann::json::array())) {
        std::size_t a = idx(s.at(0).get<std::string>());
        std::size_t b = idx(s.at(1).get<std::string>());
        std::size_t c = idx(s.at(2).get<std::string>());
        add[a][b] = c;
        add[b][a] = c;
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < n; ++jj)
          if (add[i][jj] == n) throw std::invalid_argument("addition table incomplete");
      std::vector<std::pair<std::size_t, std::size_t>> order;
      for (const auto& pr : j.value("order", nlohmann::json::array()))
        order.push_back({idx(pr.at(0).get<std::string>()), idx(pr.at(1).get<std::string>())});
      return make_table(names, zi, add, order);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what(), 1, 1);
  }
  throw ParseError("unknown model kind '" + kind + "'", 1, 1);
}

}  // namespace

CuModel parse_model(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return from_json(text);
  Lexer lx(text);
  CuModel m = parse_one(lx);
  if (!lx.done())
    throw ParseError("trailing input after model", lx.peek().line, lx.peek().col);
  return m;
}

CuModel builtin_model(const std::string& name) {
  if (name == "nbar") return make_scalar(ScalarKind::NBar);
  if (name == "zcu") return make_scalar(ScalarKind::ZCu);
  if (name == "extrat") return make_scalar(ScalarKind::ExtRat);
  if (name == "nbar2") return make_lsc(FinitePoset::antichain(2), ScalarKind::NBar);
  if (name == "nbar3") return make_lsc(FinitePoset::antichain(3), ScalarKind::NBar);
  if (name == "chain2") return make_lsc(FinitePoset::chain(2), ScalarKind::NBar);
  if (name == "chain3") return make_lsc(FinitePoset::chain(3), ScalarKind::NBar);
  if (name == "vee3")
    return make_lsc(FinitePoset({"a", "b", "c"}, {{0, 1}, {0, 2}}), ScalarKind::NBar);
  if (name == "lambda3")
    return make_lsc(FinitePoset({"a", "b", "c"}, {{0, 2}, {1, 2}}), ScalarKind::NBar);
  if (name == "chain2pt")
    return make_lsc(FinitePoset({"a", "b", "c"}, {{0, 1}}), ScalarKind::NBar);
  if (name == "zcuchain2") return make_lsc(FinitePoset::chain(2), ScalarKind::ZCu);
  if (name == "torsion") return make_torsion();
  if (name == "diamond") return crafted_diamond_table();
  if (name == "noo5") return crafted_no_o5_table();
  throw std::invalid_argument("no builtin model named '" + name + "'");
}

std::vector<std::string> builtin_model_names() {
  return {"nbar",    "nbar2",   "nbar3",   "chain2",  "chain3",    "vee3",  "lambda3",
          "chain2pt", "zcuchain2", "zcu",  "extrat",  "torsion",   "diamond", "noo5"};
}

CuModel load_model(const std::string& source) {
  std::ifstream in(source);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
  }
  for (const auto& n : builtin_model_names())
    if (n == source) return builtin_model(source);
  if (source.find('{') != std::string::npos || source.find("model") == 0)
    return parse_model(source);
  throw std::invalid_argument("cannot load model from '" + source +
                              "': not a file, builtin name, or inline text");
}

}  // namespace cucalc
