#include "hnc/preset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hnc/errors.hpp"
#include "hnc/expr.hpp"

namespace hnc {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

[[noreturn]] void fail_at(const std::string& msg, std::size_t line, std::size_t column) {
  throw ParseError(msg, 0, line, column);
}

/// Re-throws an expression error with the position mapped into the file.
[[noreturn]] void rethrow_mapped(const ParseError& e, const PresetLine& where) {
  const std::size_t line = where.line + e.line() - 1;
  const std::size_t column = e.line() == 1 ? where.column + e.column() - 1 : e.column();
  throw ParseError(e.bare_message(), e.offset(), line, column);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// Splits "name = value" keeping the column of the value.
NamedEntry named_entry(const PresetLine& l) {
  const auto eq = l.text.find('=');
  if (eq == std::string::npos) fail_at("expected '<name> = <value>'", l.line, l.column);
  NamedEntry e;
  e.name = trim(std::string_view(l.text).substr(0, eq));
  if (!valid_name(e.name)) fail_at("invalid name '" + e.name + "'", l.line, l.column);
  std::size_t start = eq + 1;
  while (start < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[start]))) ++start;
  e.value = {trim(std::string_view(l.text).substr(start)), l.line, l.column + start};
  return e;
}

const std::map<std::string, std::string>& builtin_table() {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    t["debord_line"] =
        "name: debord_line\n"
        "tag: a single nowhere-vanishing field on the line\n"
        "vars: x\n"
        "generators:\n"
        "  g1 = d/dx\n"
        "structure:\n"
        "operators:\n"
        "  square = g1.g1\n"
        "points:\n"
        "  0\n"
        "  1\n"
        "scenarios:\n"
        "  shift = a=g1 m=0 T=1 steps=1000\n";
    t["so3_r3"] =
        "name: so3_r3\n"
        "tag: so(3) linear Poisson structure on R^3\n"
        "vars: x, y, z\n"
        "generators:\n"
        "  g1 = z*d/dy - y*d/dz\n"
        "  g2 = x*d/dz - z*d/dx\n"
        "  g3 = y*d/dx - x*d/dy\n"
        "structure:\n"
        "  [g1,g2] = g3\n"
        "  [g2,g3] = g1\n"
        "  [g3,g1] = g2\n"
        "operators:\n"
        "  casimir = g1.g1 + g2.g2 + g3.g3\n"
        "  first_square = g1.g1\n"
        "points:\n"
        "  0,0,0\n"
        "  1,0,0\n"
        "  0,2,0\n"
        "  1,1,1\n"
        "scenarios:\n"
        "  rotate_z = a=g3 m=1,0,0 T=1 steps=1000 eta=0,1,1\n"
        "  rotate_x = a=g1 m=0,2,0 T=1 steps=1000 eta=1,0,1\n"
        "  tilted = a=g1+2*g2 m=1,1,1 T=1 steps=1000 eta=1,-1,2\n";
    t["vanishing_origin_2"] =
        vanishing_origin_text(2, "vanishing_origin_2", "fields vanishing at the origin of R^2 (action of gl_2)") +
        "operators:\n"
        "  square_sum = g11.g11 + g12.g12 + g21.g21 + g22.g22\n"
        "points:\n"
        "  0,0\n"
        "  1,0\n"
        "  1,2\n"
        "scenarios:\n"
        "  scale_x = a=g11 m=1,0 T=1 steps=1000 eta=1,1\n"
        "  shear = a=g12 m=1,2 T=1 steps=1000 eta=2,-1\n"
        "  mixed = a=g21+g22 m=2,1 T=1 steps=1000 eta=1,3\n";
    t["vanishing_origin_3"] =
        vanishing_origin_text(3, "vanishing_origin_3", "fields vanishing at the origin of R^3 (action of gl_3)") +
        "operators:\n"
        "  square_sum = g11.g11 + g12.g12 + g13.g13 + g21.g21 + g22.g22 + g23.g23 + g31.g31 + g32.g32 + g33.g33\n"
        "points:\n"
        "  0,0,0\n"
        "  1,0,0\n"
        "  1,2,-1\n"
        "scenarios:\n"
        "  rotate = a=g12-g21 m=1,0,0 T=1 steps=1000 eta=1,1,1\n";
    t["order2_r2"] =
        "name: order2_r2\n"
        "tag: fields vanishing to order two at the origin of R^2\n"
        "vars: x, y\n"
        "generators:\n"
        "  g1 = x^2*d/dx\n"
        "  g2 = y^2*d/dx\n"
        "  g3 = x*y*d/dx\n"
        "  g4 = x^2*d/dy\n"
        "  g5 = y^2*d/dy\n"
        "  g6 = x*y*d/dy\n"
        "structure: auto\n"
        "operators:\n"
        "  square_sum = g1.g1 + g2.g2 + g3.g3 + g4.g4 + g5.g5 + g6.g6\n"
        "points:\n"
        "  0,0\n"
        "  1,0\n"
        "  1,1\n";
    t["r4_counterexample"] =
        vanishing_origin_text(4, "r4_counterexample", "fields vanishing at the origin of R^4; realization is not injective") +
        "operators:\n"
        "  counterexample = g12.g34 - g14.g32\n"
        "points:\n"
        "  0,0,0,0\n"
        "  1,0,0,0\n"
        "  1,2,0,-1\n";
    return t;
  }();
  return table;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open preset file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string vanishing_origin_text(std::size_t d, const std::string& name, const std::string& tag) {
  auto var = [](std::size_t i) { return "x" + std::to_string(i + 1); };
  auto gen = [](std::size_t i, std::size_t j) { return "g" + std::to_string(i + 1) + std::to_string(j + 1); };
  std::string s = "name: " + name + "\ntag: " + tag + "\nvars: ";
  for (std::size_t i = 0; i < d; ++i) s += (i ? ", " : "") + var(i);
  s += "\ngenerators:\n";
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) s += "  " + gen(i, j) + " = " + var(i) + "*d/d" + var(j) + "\n";
  }
  // [x_i d_j, x_k d_l] = delta_jk x_i d_l - delta_li x_k d_j
  s += "structure:\n";
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) idx.emplace_back(i, j);
  }
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const auto [i, j] = idx[a];
      const auto [k, l] = idx[b];
      std::string rhs;
      if (j == k) rhs += gen(i, l);
      if (l == i) rhs += (rhs.empty() ? "-" : " - ") + gen(k, j);
      if (j == k && l == i && i == k) continue;  // the two terms cancel
      if (!rhs.empty()) s += "  [" + gen(i, j) + "," + gen(k, l) + "] = " + rhs + "\n";
    }
  }
  return s;
}

Preset parse_preset(std::string_view text, const std::string& source) {
  Preset p;
  p.source = source;
  std::vector<PresetLine> lines;
  {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      std::string raw(text.substr(pos, end - pos));
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::size_t indent = 0;
      while (indent < raw.size() && std::isspace(static_cast<unsigned char>(raw[indent]))) ++indent;
      std::string body = trim(raw);
      if (!body.empty()) lines.push_back({indent > 0 ? " " + body : body, line_no, indent + 1});
      if (end == text.size()) break;
      pos = end + 1;
    }
  }
  std::string section;
  bool seen_name = false;
  bool seen_vars = false;
  std::vector<std::string> seen_sections;
  for (const auto& l : lines) {
    const bool indented = l.text.front() == ' ';
    const PresetLine item{indented ? l.text.substr(1) : l.text, l.line, l.column};
    if (indented) {
      if (section.empty()) fail_at("indented line outside a section", l.line, l.column);
      if (section == "generators") {
        p.generators.push_back(named_entry(item));
      } else if (section == "structure") {
        if (p.structure_auto) fail_at("'structure: auto' takes no entries", l.line, l.column);
        p.structure.push_back(item);
      } else if (section == "operators") {
        p.operators.push_back(named_entry(item));
      } else if (section == "points") {
        try {
          p.points.push_back(parse_point(item.text));
        } catch (const std::exception& e) {
          fail_at(std::string("bad point: ") + e.what(), l.line, l.column);
        }
      } else if (section == "scenarios") {
        p.scenarios.push_back(named_entry(item));
      }
      continue;
    }
    const auto colon = item.text.find(':');
    if (colon == std::string::npos) fail_at("expected '<key>:'", l.line, l.column);
    const std::string key = trim(std::string_view(item.text).substr(0, colon));
    const std::string value = trim(std::string_view(item.text).substr(colon + 1));
    if (std::find(seen_sections.begin(), seen_sections.end(), key) != seen_sections.end()) {
      fail_at("duplicate key '" + key + "'", l.line, l.column);
    }
    seen_sections.push_back(key);
    section.clear();
    if (key == "name") {
      if (!valid_name(value)) fail_at("invalid preset name '" + value + "'", l.line, l.column);
      p.name = value;
      seen_name = true;
    } else if (key == "tag") {
      p.tag = value;
    } else if (key == "vars") {
      p.vars = split_list(value, ',');
      for (const auto& v : p.vars) {
        if (!valid_name(v)) {
          fail_at("invalid variable name '" + v + "'", l.line, l.column);
        }
      }
      if (p.vars.empty()) fail_at("at least one variable is required", l.line, l.column);
      seen_vars = true;
    } else if (key == "structure") {
      p.has_structure = true;
      if (value == "auto") {
        p.structure_auto = true;
      } else if (!value.empty()) {
        fail_at("expected 'structure:' or 'structure: auto'", l.line, l.column);
      }
      section = key;
    } else if (key == "generators" || key == "operators" || key == "points" || key == "scenarios") {
      if (!value.empty()) fail_at("section '" + key + "' takes indented entries", l.line, l.column);
      section = key;
    } else {
      fail_at("unknown key '" + key + "'", l.line, l.column);
    }
  }
  if (!seen_name) throw ParseError("missing 'name:'", 0, 1, 1);
  if (!seen_vars) throw ParseError("missing 'vars:'", 0, 1, 1);
  if (p.generators.empty()) throw ParseError("missing generators", 0, 1, 1);
  return p;
}

FoliationPresentation build_presentation(const Preset& preset) {
  std::vector<PolyVectorField> gens;
  std::vector<std::string> names;
  for (const auto& g : preset.generators) {
    if (std::find(names.begin(), names.end(), g.name) != names.end() ||
        std::find(preset.vars.begin(), preset.vars.end(), g.name) != preset.vars.end()) {
      fail_at("duplicate or clashing generator name '" + g.name + "'", g.value.line, g.value.column);
    }
    try {
      gens.push_back(parse_vector_field(g.value.text, preset.vars));
    } catch (const ParseError& e) {
      rethrow_mapped(e, g.value);
    }
    names.push_back(g.name);
  }
  FoliationPresentation fp(preset.name, preset.vars, std::move(gens), names);
  if (!preset.has_structure) return fp;
  if (preset.structure_auto) {
    auto c = solve_structure_functions(fp, default_degree_bound(fp));
    if (!c) throw InvariantViolation("no polynomial structure functions found for '" + preset.name + "'");
    fp.set_structure_functions(std::move(*c));
    return fp;
  }
  StructureFunctions c(fp.size(), fp.dim());
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& l : preset.structure) {
    const auto close = l.text.find(']');
    const auto eq = l.text.find('=', close == std::string::npos ? 0 : close);
    if (l.text.front() != '[' || close == std::string::npos || eq == std::string::npos) {
      fail_at("expected '[gi,gj] = <combination>'", l.line, l.column);
    }
    const auto pair = split_list(l.text.substr(1, close - 1), ',');
    if (pair.size() != 2) fail_at("expected two generator names in brackets", l.line, l.column);
    std::size_t idx[2];
    for (int s = 0; s < 2; ++s) {
      auto it = std::find(names.begin(), names.end(), pair[s]);
      if (it == names.end()) fail_at("unknown generator '" + pair[s] + "'", l.line, l.column);
      idx[s] = static_cast<std::size_t>(it - names.begin());
    }
    if (idx[0] == idx[1]) fail_at("bracket of a generator with itself is zero", l.line, l.column);
    const auto key = std::minmax(idx[0], idx[1]);
    if (std::find(seen.begin(), seen.end(), std::make_pair(key.first, key.second)) != seen.end()) {
      fail_at("bracket listed twice", l.line, l.column);
    }
    seen.emplace_back(key.first, key.second);
    std::size_t start = eq + 1;
    while (start < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[start]))) ++start;
    const PresetLine rhs{l.text.substr(start), l.line, l.column + start};
    std::vector<OperatorWord> words;
    try {
      words = parse_operator(rhs.text, names, preset.vars);
    } catch (const ParseError& e) {
      rethrow_mapped(e, rhs);
    }
    std::vector<Polynomial> coeffs(fp.size(), Polynomial(fp.dim()));
    for (const auto& w : words) {
      if (w.letters.size() != 1) fail_at("structure right-hand side must be a combination of generators", rhs.line, rhs.column);
      coeffs[w.letters[0]] += w.coefficient;
    }
    c.set_pair(idx[0], idx[1], coeffs);
  }
  fp.set_structure_functions(std::move(c));
  return fp;
}

LoadedPreset load_preset(const std::string& name_or_path) {
  const auto& table = builtin_table();
  auto it = table.find(name_or_path);
  Preset p = it != table.end() ? parse_preset(it->second, "builtin:" + name_or_path)
                               : parse_preset(read_file(name_or_path), name_or_path);
  FoliationPresentation fp = build_presentation(p);
  for (const auto& op : p.operators) {
    try {
      (void)parse_operator(op.value.text, fp.generator_names(), fp.vars());
    } catch (const ParseError& e) {
      rethrow_mapped(e, op.value);
    }
  }
  for (const auto& m : p.points) {
    if (m.size() != fp.dim()) throw InvariantViolation("point " + point_to_string(m) + " has the wrong dimension");
  }
  for (const auto& s : p.scenarios) {
    try {
      (void)parse_scenario(s.name, s.value.text, fp);
    } catch (const ParseError& e) {
      rethrow_mapped(e, s.value);
    }
  }
  return {std::move(p), std::move(fp)};
}

std::string resolve_operator(const LoadedPreset& lp, const std::string& op) {
  for (const auto& e : lp.preset.operators) {
    if (e.name == op) return e.value.text;
  }
  return op;
}

std::vector<std::string> builtin_preset_names() {
  return {"debord_line", "so3_r3", "vanishing_origin_2", "vanishing_origin_3", "order2_r2", "r4_counterexample"};
}

std::string builtin_preset_text(const std::string& name) { return builtin_table().at(name); }

PoissonScenario parse_scenario(const std::string& name, std::string_view text, const FoliationPresentation& p) {
  PoissonScenario s;
  s.name = name;
  bool have_a = false;
  bool have_m = false;
  std::size_t pos = 0;
  const std::string t(text);
  while (pos < t.size()) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos >= t.size()) break;
    std::size_t end = pos;
    while (end < t.size() && !std::isspace(static_cast<unsigned char>(t[end]))) ++end;
    const std::string tok = t.substr(pos, end - pos);
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", pos, 1, pos + 1);
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    const std::size_t vpos = pos + eq + 1;
    try {
      if (key == "a") {
        s.section.assign(p.size(), Rational(0));
        for (const auto& w : parse_operator(value, p.generator_names(), p.vars())) {
          if (w.letters.size() != 1 || !w.coefficient.is_constant()) {
            throw ParseError("section must be a constant combination of generators", 0, 1, 1);
          }
          s.section[w.letters[0]] += w.coefficient.constant_term();
        }
        have_a = true;
      } else if (key == "m") {
        s.point = parse_point(value);
        if (s.point.size() != p.dim()) throw ParseError("point has the wrong dimension", 0, 1, 1);
        have_m = true;
      } else if (key == "eta") {
        s.eta = parse_point(value);
        if (s.eta->size() != p.dim()) throw ParseError("covector has the wrong dimension", 0, 1, 1);
      } else if (key == "T") {
        std::size_t used = 0;
        s.duration = std::stod(value, &used);
        if (used != value.size() || !(s.duration >= 0)) throw ParseError("bad duration", 0, 1, 1);
      } else if (key == "steps") {
        std::size_t used = 0;
        const long v = std::stol(value, &used);
        if (used != value.size() || v < 1) throw ParseError("steps must be a positive integer", 0, 1, 1);
        s.steps = static_cast<std::size_t>(v);
      } else {
        throw ParseError("unknown scenario key '" + key + "'", 0, 1, 1);
      }
    } catch (const ParseError& e) {
      throw ParseError(e.bare_message(), vpos + e.column() - 1, 1, vpos + e.column());
    } catch (const std::invalid_argument& e) {
      throw ParseError("bad value for '" + key + "'", vpos, 1, vpos + 1);
    } catch (const std::out_of_range&) {
      throw ParseError("value out of range for '" + key + "'", vpos, 1, vpos + 1);
    }
    pos = end;
  }
  if (!have_a) throw ParseError("scenario needs a=<section>", 0, 1, 1);
  if (!have_m) throw ParseError("scenario needs m=<point>", 0, 1, 1);
  return s;
}

}  // namespace hnc
