#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "vtrans/catalog.hpp"

namespace vtrans {

// ---------------------------------------------------------------------------
// Literals.  Words: juxtaposed generator tokens `A1 B1 A1^-1 B2^3`; "1" is
// the identity.  H1 classes: integer combinations `2*A1 - 3*B2`; "0" is the
// zero class.  Bases: `f^<int>` for fiber powers, otherwise a word (an
// optional trailing fiber token is accepted so every element round-trips).
// ---------------------------------------------------------------------------

namespace detail {

inline long long to_ll(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size() || s.empty()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DomainError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

// one generator token [AB]<idx>(^<exp>)?; returns (gen, exp)
inline std::pair<int, long long> parse_generator_token(const std::string& t, int genus) {
  std::size_t i = 0;
  if (t.empty() || (t[0] != 'A' && t[0] != 'B'))
    throw DomainError("bad word token '" + t + "'");
  const int off = t[0] == 'B' ? 1 : 0;
  ++i;
  std::size_t d0 = i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i == d0) throw DomainError("bad word token '" + t + "': generator needs an index");
  const long long idx = to_ll(t.substr(d0, i - d0), "a generator index");
  if (idx < 1 || idx > genus)
    throw DomainError("generator index out of range in token '" + t + "'");
  long long exp = 1;
  if (i < t.size()) {
    if (t[i] != '^') throw DomainError("bad word token '" + t + "'");
    exp = to_ll(t.substr(i + 1), "an exponent");
    if (exp > 4096 || exp < -4096) throw DomainError("exponent out of range in '" + t + "'");
  }
  return {2 * static_cast<int>(idx - 1) + off, exp};
}

}  // namespace detail

inline SurfaceWord parse_word(const std::string& text, int genus) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(std::move(t));
  if (toks.empty()) throw DomainError("empty word literal");
  if (toks.size() == 1 && toks[0] == "1") return SurfaceWord(genus);
  std::vector<SurfaceWord::Letter> letters;
  for (const std::string& t : toks) {
    const auto [gen, exp] = detail::parse_generator_token(t, genus);
    const int sign = exp < 0 ? -1 : +1;
    for (long long r = 0; r < (exp < 0 ? -exp : exp); ++r) letters.push_back({gen, sign});
  }
  return SurfaceWord::from_letters(genus, letters);
}

inline std::string format_word(const SurfaceWord& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long long exp = static_cast<long long>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += (ls[i].gen % 2 == 0 ? 'A' : 'B');
    out += std::to_string(ls[i].gen / 2 + 1);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

inline H1Class parse_h1(const std::string& text, int genus) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DomainError("empty H1 literal");
  H1Class out(genus);
  if (s == "0") return out;
  std::size_t i = 0;
  while (i < s.size()) {
    long long sign = +1;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    long long coeff = 1;
    std::size_t d0 = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > d0) coeff = detail::to_ll(s.substr(d0, i - d0), "an H1 coefficient");
    if (i < s.size() && s[i] == '*') {
      if (i == d0) throw DomainError("bad H1 literal: '*' without a coefficient");
      ++i;
    }
    if (i >= s.size() || (s[i] != 'A' && s[i] != 'B'))
      throw DomainError("bad H1 literal near '" + s.substr(d0) + "'");
    const bool isB = s[i] == 'B';
    ++i;
    d0 = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == d0) throw DomainError("bad H1 literal: generator needs an index");
    const long long idx = detail::to_ll(s.substr(d0, i - d0), "a generator index");
    if (idx < 1 || idx > genus) throw DomainError("generator index out of range in H1 literal");
    out = out + sign * coeff *
                    H1Class::basis(genus, 2 * static_cast<int>(idx - 1) + (isB ? 1 : 0));
  }
  return out;
}

inline std::string format_h1(const H1Class& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (int g = 0; g < 2 * c.genus(); ++g) {
    const long long v = c[g];
    if (v == 0) continue;
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    const long long a = v < 0 ? -v : v;
    if (a != 1) out += std::to_string(a) + "*";
    out += (g % 2 == 0 ? 'A' : 'B');
    out += std::to_string(g / 2 + 1);
  }
  return out;
}

inline Pi1MElement parse_base(const std::string& text, int genus) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(std::move(t));
  if (toks.empty()) throw DomainError("empty base literal");
  long long fiber = 0;
  if (toks.back() == "f") {
    fiber = 1;
    toks.pop_back();
  } else if (toks.back().rfind("f^", 0) == 0) {
    fiber = detail::to_ll(toks.back().substr(2), "a fiber exponent");
    toks.pop_back();
  }
  SurfaceWord w(genus);
  if (!toks.empty()) {
    std::string rest;
    for (const auto& t : toks) rest += t + " ";
    w = parse_word(rest, genus);
  }
  return Pi1MElement{std::move(w), fiber};
}

inline std::string format_base(const Pi1MElement& e) {
  if (e.base_word.empty()) return "f^" + std::to_string(e.fiber_exp);
  std::string s = format_word(e.base_word);
  if (e.fiber_exp != 0) s += " f^" + std::to_string(e.fiber_exp);
  return s;
}

// ---------------------------------------------------------------------------
// Script files.  Line-oriented: `manifold`, `field`, `component` headers in
// that order, then one or more `begin homotopy <name> ... end` event blocks.
// `#` starts a comment; values with spaces are double-quoted.
// ---------------------------------------------------------------------------

struct ComponentDecl {
  std::string name;
  Pi1MElement base;
  long long kinks = 0;
};

struct HomotopyBlock {
  std::string name;
  std::vector<MoveEvent> events;
};

struct ScriptFile {
  BundleData bundle;
  FieldData field;
  std::vector<ComponentDecl> components;
  std::vector<HomotopyBlock> blocks;
};

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line, int lineno) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, token_open = false;
  for (char c : line) {
    if (quoted) {
      if (c == '"')
        quoted = false;
      else
        cur += c;
    } else if (c == '"') {
      quoted = true;
      token_open = true;
    } else if (c == '#') {
      break;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty() || token_open) {
        out.push_back(cur);
        cur.clear();
        token_open = false;
      }
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError(lineno, "unterminated quote");
  if (!cur.empty() || token_open) out.push_back(cur);
  return out;
}

inline bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

// key=value fields plus positional fields, with required/optional key checks
struct DirectiveArgs {
  std::vector<std::string> positional;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<bool> used;
  int lineno;
  std::string kind;

  DirectiveArgs(const std::vector<std::string>& fields, int line)
      : lineno(line), kind(fields.at(0)) {
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const auto eq = fields[i].find('=');
      if (eq == std::string::npos)
        positional.push_back(fields[i]);
      else
        attrs.emplace_back(fields[i].substr(0, eq), fields[i].substr(eq + 1));
    }
    used.assign(attrs.size(), false);
  }

  const std::string* find(const std::string& key) {
    for (std::size_t i = 0; i < attrs.size(); ++i)
      if (attrs[i].first == key) {
        used[i] = true;
        return &attrs[i].second;
      }
    return nullptr;
  }
  const std::string& require(const std::string& key) {
    const std::string* v = find(key);
    if (!v)
      throw ParseError(lineno, "missing attribute '" + key + "' for '" + kind + "'");
    return *v;
  }
  void expect_positional(std::size_t n) const {
    if (positional.size() != n)
      throw ParseError(lineno, "'" + kind + "' expects " + std::to_string(n) +
                                   " component name(s), got " +
                                   std::to_string(positional.size()));
  }
  void finish() const {
    for (std::size_t i = 0; i < attrs.size(); ++i)
      if (!used[i])
        throw ParseError(lineno,
                         "unknown attribute '" + attrs[i].first + "' for '" + kind + "'");
  }
};

inline long long attr_int(DirectiveArgs& a, const std::string& key) {
  return to_ll(a.require(key), ("attribute '" + key + "'").c_str());
}

inline int parse_sign(DirectiveArgs& a) {
  const std::string& v = a.require("sign");
  if (v == "+" || v == "+1") return +1;
  if (v == "-" || v == "-1") return -1;
  throw ParseError(a.lineno, "sign must be '+' or '-', got '" + v + "'");
}

inline MoveEvent parse_event_fields(const std::vector<std::string>& fields, int genus,
                                    int lineno) {
  DirectiveArgs a(fields, lineno);
  const std::string& k = a.kind;
  MoveEvent ev;
  if (k == "cross") {
    a.expect_positional(2);
    ev = CrossEvent{a.positional[0], a.positional[1], parse_sign(a)};
  } else if (k == "self") {
    a.expect_positional(1);
    ev = SelfCrossEvent{a.positional[0], parse_sign(a)};
  } else if (k == "drag") {
    a.expect_positional(1);
    ev = DragEvent{a.positional[0], parse_h1(a.require("path"), genus)};
  } else if (k == "rot") {
    a.expect_positional(1);
    ev = RotEvent{a.positional[0], attr_int(a, "n")};
  } else if (k == "fib") {
    a.expect_positional(1);
    ev = FibEvent{a.positional[0], attr_int(a, "n")};
  } else if (k == "kinkslide") {
    a.expect_positional(1);
    ev = KinkSlideEvent{a.positional[0], attr_int(a, "n")};
  } else if (k == "vstab") {
    a.expect_positional(1);
    ev = VStabEvent{a.positional[0], attr_int(a, "i")};
  } else if (k == "clasp") {
    a.expect_positional(1);
    ev = ClaspEvent{a.positional[0]};
  } else if (k == "unclasp") {
    a.expect_positional(1);
    ev = UnclaspEvent{a.positional[0]};
  } else if (k == "legstab") {
    a.expect_positional(1);
    ev = LegStabEvent{a.positional[0], attr_int(a, "pos"), attr_int(a, "neg")};
  } else {
    throw ParseError(lineno, "unknown directive '" + k + "'");
  }
  a.finish();
  return ev;
}

}  // namespace detail

inline ScriptFile parse_script(const std::string& text) {
  std::optional<BundleData> bundle;
  std::optional<FieldData> field;
  std::vector<ComponentDecl> comps;
  std::vector<HomotopyBlock> blocks;
  std::optional<HomotopyBlock> open;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    try {
      const auto fields = detail::split_fields(raw, lineno);
      if (fields.empty()) continue;
      const std::string& kw = fields[0];

      if (kw == "manifold") {
        if (bundle) throw ParseError(lineno, "duplicate manifold directive");
        if (field || !comps.empty() || !blocks.empty() || open)
          throw ParseError(lineno, "manifold directive must come first");
        detail::DirectiveArgs a(fields, lineno);
        a.expect_positional(0);
        const long long g = detail::attr_int(a, "genus");
        const long long e = detail::attr_int(a, "euler");
        a.finish();
        if (g < 1 || g > 64) throw ParseError(lineno, "genus out of supported range");
        bundle = BundleData{Surface(static_cast<int>(g)), e};
      } else if (kw == "field") {
        if (!bundle) throw ParseError(lineno, "manifold directive required before field");
        if (field) throw ParseError(lineno, "duplicate field directive");
        if (!comps.empty() || !blocks.empty() || open)
          throw ParseError(lineno, "field directive must follow manifold immediately");
        detail::DirectiveArgs a(fields, lineno);
        a.expect_positional(0);
        const long long k = detail::attr_int(a, "k");
        const H1Class dual = parse_h1(a.require("dual"), bundle->base.genus);
        a.finish();
        field.emplace(k, dual);
      } else if (kw == "component") {
        if (!bundle || !field)
          throw ParseError(lineno, "manifold and field directives required before components");
        if (!blocks.empty() || open)
          throw ParseError(lineno, "component declarations must precede homotopy blocks");
        detail::DirectiveArgs a(fields, lineno);
        a.expect_positional(1);
        const std::string& name = a.positional[0];
        if (!detail::valid_name(name))
          throw ParseError(lineno, "invalid component name '" + name + "'");
        for (const auto& c : comps)
          if (c.name == name)
            throw ParseError(lineno, "duplicate component name '" + name + "'");
        const Pi1MElement base = parse_base(a.require("base"), bundle->base.genus);
        const std::string* kinks = a.find("kinks");
        a.finish();
        comps.push_back(
            {name, base, kinks ? detail::to_ll(*kinks, "attribute 'kinks'") : 0});
      } else if (kw == "begin") {
        if (!bundle || !field)
          throw ParseError(lineno, "manifold and field directives required before blocks");
        if (open) throw ParseError(lineno, "nested homotopy block");
        if (fields.size() != 3 || fields[1] != "homotopy")
          throw ParseError(lineno, "expected 'begin homotopy <name>'");
        if (!detail::valid_name(fields[2]))
          throw ParseError(lineno, "invalid homotopy name '" + fields[2] + "'");
        for (const auto& b : blocks)
          if (b.name == fields[2])
            throw ParseError(lineno, "duplicate homotopy name '" + fields[2] + "'");
        open = HomotopyBlock{fields[2], {}};
      } else if (kw == "end") {
        if (!open) throw ParseError(lineno, "'end' outside a homotopy block");
        if (fields.size() != 1) throw ParseError(lineno, "'end' takes no arguments");
        blocks.push_back(std::move(*open));
        open.reset();
      } else {
        if (!open) {
          // a known event keyword outside a block gets a clearer message
          static const char* kinds[] = {"cross", "self",  "drag",    "rot",   "fib",
                                        "kinkslide", "vstab", "clasp", "unclasp", "legstab"};
          for (const char* kk : kinds)
            if (kw == kk)
              throw ParseError(lineno, "event directive outside a homotopy block");
          throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
        open->events.push_back(
            detail::parse_event_fields(fields, bundle->base.genus, lineno));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (open) throw ParseError(lineno, "unterminated homotopy block '" + open->name + "'");
  if (!bundle) throw ParseError(1, "missing manifold directive");
  if (!field) throw ParseError(1, "missing field directive");
  if (blocks.empty())
    throw ParseError(lineno > 0 ? lineno : 1, "expected at least one homotopy block");
  return ScriptFile{*bundle, *field, std::move(comps), std::move(blocks)};
}

inline ScriptFile parse_script_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str());
}

// ---------------------------------------------------------------------------
// Serialization (canonical form; parse . serialize == id on parsed files).
// ---------------------------------------------------------------------------

namespace detail {

inline std::string serialize_event(const MoveEvent& ev) {
  return std::visit(
      [](const auto& e) -> std::string {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, CrossEvent>)
          return "cross " + e.a + " " + e.b + " sign=" + (e.sign > 0 ? "+" : "-");
        else if constexpr (std::is_same_v<T, SelfCrossEvent>)
          return "self " + e.comp + " sign=" + (e.sign > 0 ? "+" : "-");
        else if constexpr (std::is_same_v<T, DragEvent>)
          return "drag " + e.comp + " path=\"" + format_h1(e.path) + "\"";
        else if constexpr (std::is_same_v<T, RotEvent>)
          return "rot " + e.comp + " n=" + std::to_string(e.n);
        else if constexpr (std::is_same_v<T, FibEvent>)
          return "fib " + e.comp + " n=" + std::to_string(e.n);
        else if constexpr (std::is_same_v<T, KinkSlideEvent>)
          return "kinkslide " + e.comp + " n=" + std::to_string(e.n);
        else if constexpr (std::is_same_v<T, VStabEvent>)
          return "vstab " + e.comp + " i=" + std::to_string(e.level);
        else if constexpr (std::is_same_v<T, KinkPairEvent>)
          throw DomainError("kink-pair moves have no script syntax");
        else if constexpr (std::is_same_v<T, ClaspEvent>)
          return "clasp " + e.comp;
        else if constexpr (std::is_same_v<T, UnclaspEvent>)
          return "unclasp " + e.comp;
        else
          return "legstab " + e.comp + " pos=" + std::to_string(e.pos) +
                 " neg=" + std::to_string(e.neg);
      },
      ev);
}

}  // namespace detail

inline std::string serialize_script(const ScriptFile& f) {
  std::ostringstream o;
  o << "manifold genus=" << f.bundle.base.genus << " euler=" << f.bundle.euler << "\n";
  o << "field k=" << f.field.k << " dual=\"" << format_h1(f.field.dual) << "\"\n";
  for (const auto& c : f.components)
    o << "component " << c.name << " base=\"" << format_base(c.base) << "\" kinks=" << c.kinks
      << "\n";
  for (const auto& b : f.blocks) {
    o << "\nbegin homotopy " << b.name << "\n";
    for (const auto& ev : b.events) o << "  " << detail::serialize_event(ev) << "\n";
    o << "end\n";
  }
  return o.str();
}

// ---------------------------------------------------------------------------
// Selection and instantiation.
// ---------------------------------------------------------------------------

inline const HomotopyBlock& select_block(const ScriptFile& f, const std::string& name) {
  if (name.empty()) {
    if (f.blocks.size() == 1) return f.blocks.front();
    std::string names;
    for (const auto& b : f.blocks) names += (names.empty() ? "" : ", ") + b.name;
    throw DomainError("script has " + std::to_string(f.blocks.size()) +
                      " homotopy blocks (" + names + "); select one with --homotopy");
  }
  for (const auto& b : f.blocks)
    if (b.name == name) return b;
  throw DomainError("no homotopy block named '" + name + "'");
}

inline HomotopyScript script_for(const ScriptFile& f, const HomotopyBlock& b) {
  std::vector<ComponentState> states;
  states.reserve(f.components.size());
  for (const auto& c : f.components) states.push_back(initial_component(c.name, c.base, c.kinks));
  return HomotopyScript{f.bundle, f.field, std::move(states), b.events, b.name};
}

/// `;`-separated event directives, e.g. `"drag K1 path=B2 ; rot K1 n=2"`.
inline std::vector<MoveEvent> parse_loop(const std::string& text, int genus) {
  std::vector<MoveEvent> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(';', start);
    if (stop == std::string::npos) stop = text.size();
    const std::string piece = text.substr(start, stop - start);
    const auto fields = detail::split_fields(piece, 1);
    if (!fields.empty()) out.push_back(detail::parse_event_fields(fields, genus, 1));
    start = stop + 1;
  }
  if (out.empty()) throw DomainError("empty loop");
  return out;
}

// ---------------------------------------------------------------------------
// Reports: `key: value` lines under [nu] / [verdict] / [provenance] headers;
// byte-deterministic, explicit signs on verdict-relevant integers.
// ---------------------------------------------------------------------------

inline std::string format_signed(long long v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+lld", v);
  return buf;
}

inline std::string format_pi1(const Pi1MElement& e) {
  if (e.base_word.empty() && e.fiber_exp == 0) return "1";
  return format_base(e);
}

inline std::string format_lift(const LiftClass& l) {
  if (const auto* f = std::get_if<FiberLift>(&l))
    return "(f^" + std::to_string(f->fiber_power) + ", " + format_signed(f->central) + ")";
  const auto& o = std::get<OpaqueLift>(l);
  return "(" + format_pi1(o.base) + ", " + format_signed(o.central) + ")";
}

inline std::string format_term(const Fig8Term& t) {
  return std::string(t.sign > 0 ? "+1" : "-1") + " * (" + format_lift(t.left) + ", " +
         format_lift(t.right) + ")";
}

inline std::string render_nu_report(const std::string& homotopy, const NuValue& value,
                                    NuVerdict verdict) {
  std::ostringstream o;
  o << "[nu]\n";
  o << "homotopy: " << homotopy << "\n";
  o << "terms: " << value.terms.size() << "\n";
  for (const auto& t : value.terms) o << "term: " << format_term(t) << "\n";
  if (value.terms.empty())
    o << "nu = ZERO (no inter-component double points)\n";
  else
    o << "nu = " << to_string(verdict) << "\n";
  return o.str();
}

inline std::string render_verdict_report(const Verdict& v) {
  std::ostringstream o;
  o << "[verdict]\n";
  o << "framed: " << to_string(v.framed) << "\n";
  o << "homotopic: " << to_string(v.homotopic) << "\n";
  o << "link-homotopic: " << to_string(v.link_homotopic) << "\n";
  o << "componentwise: " << to_string(v.componentwise) << "\n";
  o << "isotopic: " << to_string(v.isotopic) << "\n";
  for (const auto& f : v.flags) o << "flag: " << f << "\n";
  o << "[provenance]\n";
  for (const auto& p : v.provenance) o << "cite: " << p << "\n";
  return o.str();
}

inline std::string render_legendrian_report(const LegendrianVerdict& v) {
  std::ostringstream o;
  o << "[verdict]\n";
  o << "category: legendrian\n";
  o << "framed: " << to_string(v.framed) << "\n";
  o << "homotopic: " << to_string(v.homotopic) << "\n";
  o << "link-homotopic: " << to_string(v.link_homotopic) << "\n";
  o << "componentwise: " << to_string(v.componentwise) << "\n";
  o << "isotopic: " << to_string(v.isotopic) << "\n";
  o << "loose-components: " << (v.loose.components ? "yes" : "no") << "\n";
  o << "loose-link: " << (v.loose.link ? "yes" : "no") << "\n";
  o << "[provenance]\n";
  for (const auto& p : v.provenance) o << "cite: " << p << "\n";
  return o.str();
}

inline std::string table_header() { return "family,i1,i2,LH,CW,ISO"; }

inline std::string render_table_row(const TableRow& r) {
  std::ostringstream o;
  o << to_string(r.family) << "," << format_signed(r.params.i1) << ","
    << format_signed(r.params.i2) << "," << to_string(r.verdict.link_homotopic) << ","
    << to_string(r.verdict.componentwise) << "," << to_string(r.verdict.isotopic);
  return o.str();
}

// ---------------------------------------------------------------------------
// Verdicts on raw script files.  Constructive-witness semantics: Yes only
// when the script itself witnesses the relation through transverse-realizable
// moves; No only from the nu obstruction, the exact central-offset kernel, or
// self-linking changes; logical closure applied last.
// ---------------------------------------------------------------------------

inline Verdict file_verdict(const HomotopyScript& s) {
  const RunResult res = run(s);
  Verdict v;

  bool transverse = true;  // no bookkeeping teleports (vstab / legstab)
  bool any_cross = false;
  std::vector<bool> self_touched(s.components.size(), false);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < s.components.size(); ++i) index[s.components[i].name] = i;
  for (const MoveEvent& ev : s.events) {
    const std::string kind = event_kind(ev);
    if (kind == "vstab" || kind == "legstab") transverse = false;
    if (kind == "cross") any_cross = true;
    if (kind == "self" || kind == "clasp" || kind == "unclasp")
      self_touched[index.at(event_component(ev))] = true;
  }

  bool kernel_ok = true, writhe_ok = true, all_states_restored = true;
  std::string kernel_comp, writhe_comp;
  long long writhe_delta = 0;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    const ComponentState& ini = s.components[i];
    const ComponentState& fin = res.components[i];
    const long long dc = fin.ev_central - ini.ev_central;
    const long long dw = fin.writhe_offset() - ini.writhe_offset();
    const long long dr = fin.rot_offset() - ini.rot_offset();
    long long step;  // achievable central offsets form step * Z
    if (ini.fiber_power())
      step = central_shift_step(s.field);
    else
      step = std::llabs(2 * s.field.k *
                        intersection_number(s.field.dual, abelianize(ini.base_class.base_word)));
    const bool ok = step == 0 ? dc == 0 : dc % step == 0;
    if (!ok && kernel_ok) {
      kernel_ok = false;
      kernel_comp = ini.name;
    }
    if (dw != 0 && writhe_ok) {
      writhe_ok = false;
      writhe_comp = ini.name;
      writhe_delta = dw;
    }
    if (dc != 0 || dw != 0 || dr != 0 || self_touched[i]) all_states_restored = false;
  }

  // homotopic: exact kernel condition on the central offsets
  if (kernel_ok) {
    v.homotopic = Tri::Yes;
    v.provenance.push_back("kernel: every central offset change is realizable by admitted loops");
  } else {
    v.homotopic = Tri::No;
    v.provenance.push_back("kernel: the central offset change on '" + kernel_comp +
                           "' is not realizable by admitted loops");
  }

  // framed: self-linking is an invariant; it only moves under legstab
  if (!writhe_ok) {
    v.framed = Tri::No;
    v.provenance.push_back("framing: self-linking changes by " + format_signed(writhe_delta) +
                           " on '" + writhe_comp + "'");
  } else {
    v.framed = v.homotopic;
    if (v.framed == Tri::Yes) v.provenance.push_back("framing: self-linking is conserved");
  }

  // link-homotopic
  const bool valid = obstruction_valid(s);
  const NuVerdict zero = s.components.size() >= 2
                             ? decide_zero(NuValue{res.terms}, s.field)
                             : NuVerdict::Unknown;
  if (transverse && !any_cross) {
    v.link_homotopic = Tri::Yes;
    v.provenance.push_back("witness: the script avoids inter-component crossings");
  } else if (v.homotopic == Tri::No) {
    v.link_homotopic = Tri::No;
    v.provenance.push_back("closure: not even transversely homotopic");
  } else if (zero == NuVerdict::Nonzero && valid) {
    v.link_homotopic = Tri::No;
    v.provenance.push_back("obstruction: nu is nonzero");
  } else {
    v.link_homotopic = Tri::Unknown;
    v.provenance.push_back(
        "nu fails to obstruct and the script is not a link-homotopy witness");
    if (zero == NuVerdict::Nonzero && !valid)
      v.flags.push_back("invariance unverified: not all components are fiber powers");
  }

  // componentwise
  bool cw_witness = transverse;
  for (std::size_t i = 0; i < s.components.size() && cw_witness; ++i) {
    const ComponentState& ini = s.components[i];
    const ComponentState& fin = res.components[i];
    if (self_touched[i] || fin.ev_central != ini.ev_central ||
        fin.writhe_offset() != ini.writhe_offset() || fin.rot_offset() != ini.rot_offset())
      cw_witness = false;
  }
  if (!writhe_ok) {
    v.componentwise = Tri::No;
    v.provenance.push_back("framing: a self-linking change refutes per-component isotopy");
  } else if (v.homotopic == Tri::No) {
    v.componentwise = Tri::No;
    v.provenance.push_back("closure: not even transversely homotopic");
  } else if (cw_witness) {
    v.componentwise = Tri::Yes;
    v.provenance.push_back(
        "witness: every component returns to its state without self-crossings");
  } else {
    v.componentwise = Tri::Unknown;
    v.provenance.push_back("per-component isotopy is neither witnessed nor refuted");
  }

  // isotopic
  if (transverse && !any_cross && all_states_restored) {
    v.isotopic = Tri::Yes;
    v.provenance.push_back("witness: the script is a transverse isotopy");
  } else if (v.homotopic == Tri::No || v.framed == Tri::No || v.link_homotopic == Tri::No ||
             v.componentwise == Tri::No) {
    v.isotopic = Tri::No;
    v.provenance.push_back("closure: an isotopy would induce the refuted relation");
  } else {
    v.isotopic = Tri::Unknown;
    v.provenance.push_back("isotopy is neither witnessed nor refuted");
  }
  return v;
}

}  // namespace vtrans
