#include <map>
#include <sstream>

#include "leavitt/errors.hpp"
#include "leavitt/graded.hpp"
#include "lincomb.hpp"
#include "text.hpp"

namespace leavitt {

namespace {

bool valid_basis_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^') continue;
    if (c == '-' && i > 0 && s[i - 1] == '^') continue;
    return false;
  }
  return true;
}

std::int64_t parse_int(std::string_view s, std::size_t line) {
  std::int64_t v = 0;
  std::istringstream in{std::string(s)};
  if (!(in >> v) || !in.eof()) throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
  return v;
}

}  // namespace

GradedAlgebra parse_graded(std::string_view source) {
  using text::split_once;
  using text::split_ws;
  std::optional<RingDescriptor> ring;
  std::optional<Group> group;
  std::optional<std::int64_t> window;
  bool table_mode = false;
  std::vector<std::string> elements;
  std::map<std::string, std::vector<std::string>> rows;
  std::size_t group_line = 0;
  bool total = false;
  std::vector<std::string> basis;
  std::map<std::string, std::pair<std::string, std::size_t>> degree_text;
  struct Mul {
    std::string a, b, rhs;
    std::size_t line;
  };
  std::vector<Mul> muls;

  for (const auto& [line, content] : text::content_lines(source)) {
    std::string_view head, tail;
    if (content.starts_with("ring:")) {
      if (ring) throw ParseError("second 'ring:' line", line);
      try {
        ring = parse_ring(text::trim(content.substr(5)));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
      }
    } else if (content.starts_with("group:")) {
      if (group || table_mode) throw ParseError("second 'group:' line", line);
      auto words = split_ws(content.substr(6));
      group_line = line;
      if (words.size() == 1 && words[0] == "Z") {
        group = Group::integers();
      } else if (words.size() == 3 && words[0] == "Z" && words[1] == "window") {
        group = Group::integers();
        window = parse_int(words[2], line);
        if (*window < 0) throw ParseError("window must be nonnegative", line);
      } else if (words.size() == 1 && words[0] == "table") {
        table_mode = true;
      } else {
        throw ParseError("expected 'group: Z [window B]' or 'group: table'", line);
      }
    } else if (content.starts_with("elements:")) {
      if (!table_mode) throw ParseError("'elements:' needs 'group: table'", line);
      elements = split_ws(content.substr(9));
    } else if (content.starts_with("row ") && split_once(content.substr(4), ":", head, tail)) {
      if (!table_mode) throw ParseError("'row' needs 'group: table'", line);
      rows[std::string(head)] = split_ws(tail);
    } else if (content.starts_with("total:")) {
      auto v = text::trim(content.substr(6));
      if (v != "yes" && v != "no") throw ParseError("expected 'total: yes' or 'total: no'", line);
      total = v == "yes";
    } else if (content.starts_with("basis:")) {
      if (!basis.empty()) throw ParseError("second 'basis:' line", line);
      for (auto& name : split_ws(content.substr(6))) {
        if (!valid_basis_name(name)) throw ParseError("invalid basis name '" + name + "'", line);
        if (std::find(basis.begin(), basis.end(), name) != basis.end())
          throw ParseError("duplicate basis name '" + name + "'", line);
        basis.push_back(name);
      }
    } else if (content.starts_with("deg ") && split_once(content.substr(4), "=", head, tail)) {
      degree_text[std::string(head)] = {std::string(tail), line};
    } else if (content.starts_with("mul ") && split_once(content.substr(4), "=", head, tail)) {
      auto names = split_ws(head);
      if (names.size() != 2) throw ParseError("expected 'mul A B = combination'", line);
      muls.push_back({names[0], names[1], std::string(tail), line});
    } else {
      throw ParseError("unrecognized line '" + std::string(content) + "'", line);
    }
  }
  if (!ring) throw ParseError("missing 'ring:' line");
  if (table_mode) {
    if (elements.empty()) throw ParseError("group table has no 'elements:' line", group_line);
    std::vector<std::vector<std::size_t>> table;
    for (const auto& x : elements) {
      auto it = rows.find(x);
      if (it == rows.end()) throw ParseError("group table misses 'row " + x + ":'", group_line);
      std::vector<std::size_t> row;
      for (const auto& y : it->second) {
        auto at = std::find(elements.begin(), elements.end(), y);
        if (at == elements.end()) throw ParseError("unknown group element '" + y + "' in row " + x, group_line);
        row.push_back(static_cast<std::size_t>(at - elements.begin()));
      }
      table.push_back(std::move(row));
    }
    if (rows.size() != elements.size()) throw ParseError("group table has rows for unknown elements", group_line);
    group = Group::finite(elements, std::move(table));
  }
  if (!group) throw ParseError("missing 'group:' line");
  if (basis.empty()) throw ParseError("missing 'basis:' line");

  std::vector<GroupElement> degrees;
  for (const auto& b : basis) {
    auto it = degree_text.find(b);
    if (it == degree_text.end()) throw ParseError("basis element '" + b + "' has no degree");
    try {
      degrees.push_back(group->parse_element(it->second.first));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), it->second.second);
    }
    if (window && std::abs(degrees.back()) > *window)
      throw ParseError("degree of '" + b + "' lies outside the window", it->second.second);
  }
  for (const auto& [name, d] : degree_text)
    if (std::find(basis.begin(), basis.end(), name) == basis.end())
      throw ParseError("degree given for unknown basis element '" + name + "'", d.second);

  const std::size_t n = basis.size();
  auto lookup = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < n; ++i)
      if (basis[i] == name) return i;
    return std::nullopt;
  };
  std::vector<std::vector<std::optional<Coordinates>>> products(n, std::vector<std::optional<Coordinates>>(n));
  if (total)
    for (auto& row : products)
      for (auto& p : row) p = linalg::zero_vector(*ring, n);
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (const auto& m : muls) {
    auto i = lookup(m.a), j = lookup(m.b);
    if (!i) throw ParseError("unknown basis element '" + m.a + "'", m.line);
    if (!j) throw ParseError("unknown basis element '" + m.b + "'", m.line);
    if (seen[*i][*j]) throw ParseError("product " + m.a + " " + m.b + " given twice", m.line);
    seen[*i][*j] = true;
    auto v = linalg::zero_vector(*ring, n);
    for (auto& [k, c] : text::parse_lincomb(*ring, m.rhs, lookup, m.line)) v[k] += c;
    products[*i][*j] = std::move(v);
  }
  return GradedAlgebra(*ring, *group, basis, degrees, std::move(products), window);
}

std::string to_text(const GradedAlgebra& a) {
  std::ostringstream out;
  out << "ring: " << a.ring().to_string() << "\n";
  const Group& g = a.group();
  if (g.is_integers()) {
    out << "group: Z";
    if (a.window()) out << " window " << *a.window();
    out << "\n";
  } else {
    out << "group: table\nelements:";
    for (const auto& name : g.names()) out << " " << name;
    out << "\n";
    for (auto x : g.elements()) {
      out << "row " << g.name(x) << ":";
      for (auto y : g.elements()) out << " " << g.name(g.multiply(x, y));
      out << "\n";
    }
  }
  out << "basis:";
  for (const auto& b : a.basis_names()) out << " " << b;
  out << "\n";
  for (std::size_t i = 0; i < a.dimension(); ++i) out << "deg " << a.basis_name(i) << " = " << g.name(a.degree(i)) << "\n";
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j)
      if (const auto& p = a.product(i, j))
        out << "mul " << a.basis_name(i) << " " << a.basis_name(j) << " = " << a.render(*p) << "\n";
  return out.str();
}

Coordinates parse_coordinates(const GradedAlgebra& a, std::string_view text) {
  Coordinates v = a.zero();
  auto lookup = [&](std::string_view name) { return a.find_basis(name); };
  for (auto& [k, c] : text::parse_lincomb(a.ring(), text, lookup, 0)) v[k] += c;
  return v;
}

}  // namespace leavitt
