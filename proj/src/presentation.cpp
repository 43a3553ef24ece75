#include "magnus/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "magnus/error.hpp"

namespace magnus {

namespace {

std::set<std::string, std::less<>> names_in(Word const& w) {
  std::set<std::string, std::less<>> out;
  for (Letter const& l : w) {
    out.insert(l.sym.name);
  }
  return out;
}

std::string trim(std::string_view s) {
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::string const t = trim(s);
  std::int64_t out = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size()) {
    throw Error(Errc::Parse, "expected integer for " + std::string(what) +
                                 ", got '" + t + "'");
  }
  return out;
}

}  // namespace

FamilyPresentation validate_impl(RawPresentation raw, bool allow_reserved) {
  std::vector<std::string> all{raw.magnus_gen, raw.b_gen};
  all.insert(all.end(), raw.y_gens.begin(), raw.y_gens.end());
  std::set<std::string, std::less<>> seen;
  for (auto const& name : all) {
    if (is_reserved_name(name)) {
      if (!allow_reserved) {
        throw Error(Errc::ReservedName, "generator name '" + name + "' is reserved");
      }
    } else if (!is_valid_name(name)) {
      throw Error(Errc::Parse, "bad generator name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw Error(Errc::DuplicateGenerator, "generator '" + name + "' listed twice");
    }
  }
  if (raw.y_gens.size() < 2) {
    throw Error(Errc::TooFewY, "need at least two y generators, got " +
                                   std::to_string(raw.y_gens.size()));
  }
  if (raw.k < 1) {
    throw Error(Errc::NonPositiveK, "k = " + std::to_string(raw.k));
  }
  if (raw.u.empty() || raw.v.empty()) {
    throw Error(Errc::EmptyUV, "u and v must be nontrivial reduced words");
  }
  std::set<std::string, std::less<>> const ys(raw.y_gens.begin(), raw.y_gens.end());
  auto const in_u = names_in(raw.u);
  auto const in_v = names_in(raw.v);
  for (Word const* w : {&raw.u, &raw.v}) {
    for (Letter const& l : *w) {
      if (!ys.contains(l.sym.name) || l.sym.index) {
        throw Error(Errc::ForeignLetter,
                    "u and v must be words in the y generators, found " +
                        to_string(l));
      }
    }
  }
  for (auto const& name : in_u) {
    if (in_v.contains(name)) {
      throw Error(Errc::SharedLetters, "u and v share the letter " + name);
    }
  }
  return FamilyPresentation(std::move(raw));
}

FamilyPresentation validate(RawPresentation raw) {
  return validate_impl(std::move(raw), false);
}

FamilyPresentation validate_internal(RawPresentation raw) {
  return validate_impl(std::move(raw), true);
}

Word FamilyPresentation::relator() const {
  Word const xk = gen_power(data_.magnus_gen, data_.k);
  Word const b = Word::letter(gen(data_.b_gen));
  return invert(xk) * invert(b) * xk * b * data_.u * data_.v;
}

std::vector<std::string> FamilyPresentation::generators() const {
  std::vector<std::string> out{data_.magnus_gen, data_.b_gen};
  out.insert(out.end(), data_.y_gens.begin(), data_.y_gens.end());
  return out;
}

bool FamilyPresentation::has_generator(std::string_view name) const {
  return name == data_.magnus_gen || name == data_.b_gen || y_slot(name);
}

std::optional<std::size_t> FamilyPresentation::y_slot(std::string_view name) const {
  auto it = std::find(data_.y_gens.begin(), data_.y_gens.end(), name);
  if (it == data_.y_gens.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - data_.y_gens.begin());
}

FamilyPresentation from_surface_genus(std::int64_t genus, std::int64_t u_squares) {
  if (genus <= 3) {
    throw Error(Errc::Unsupported,
                "surface genus " + std::to_string(genus) +
                    " is outside the supported range (genus >= 4)");
  }
  std::int64_t const e = genus - 2;
  if (u_squares < 1 || u_squares >= e) {
    throw Error(Errc::PreconditionViolated,
                "u must take between 1 and " + std::to_string(e - 1) + " squares");
  }
  RawPresentation raw{"a", "b", {}, 1, {}, {}};
  Word::Builder u, v;
  for (std::int64_t j = 1; j <= e; ++j) {
    std::string name = "y" + std::to_string(j);
    raw.y_gens.push_back(name);
    auto& target = j <= u_squares ? u : v;
    target.push(gen(name)).push(gen(name));
  }
  raw.u = std::move(u).build();
  raw.v = std::move(v).build();
  return validate(std::move(raw));
}

FamilyPresentation swap_presentation(FamilyPresentation const& p) {
  if (p.k() != 1) {
    throw Error(Errc::PreconditionViolated,
                "presentation swap needs a commutator relator (k = 1)");
  }
  RawPresentation raw = p.raw();
  std::swap(raw.magnus_gen, raw.b_gen);
  raw.u = invert(p.v());
  raw.v = invert(p.u());
  return validate_internal(std::move(raw));
}

Embedding embed_into_H(FamilyPresentation const& p, Word const& r) {
  if (p.k() != 1) {
    throw Error(Errc::PreconditionViolated,
                "embedding needs a commutator relator (k = 1)");
  }
  Embedding out{p, {}, exponent_sum(r, p.magnus_gen()), exponent_sum(r, p.b_gen()), 1};
  if (out.r_b == 0) {
    throw Error(Errc::ZeroBExponent,
                "exponent sum of " + p.b_gen() + " is zero; use the swapped presentation");
  }
  out.orientation = out.r_b > 0 ? 1 : -1;
  RawPresentation raw = p.raw();
  raw.magnus_gen = std::string(kReservedMagnus);
  raw.b_gen = std::string(kReservedBbar);
  raw.k = out.r_b > 0 ? out.r_b : -out.r_b;
  out.group = validate_internal(std::move(raw));

  std::string const x(kReservedMagnus);
  out.lift[p.magnus_gen()] = gen_power(x, out.group.k());
  out.lift[p.b_gen()] = gen_power(x, -out.orientation * out.r_a) *
                        Word::letter(gen(std::string(kReservedBbar)));
  for (auto const& y : p.y_gens()) {
    out.lift[y] = Word::letter(gen(y));
  }
  return out;
}

PsiMap psi(FamilyPresentation const& p) {
  std::string const& x = p.magnus_gen();
  Word const xk = gen_power(x, p.k());
  Word const xk_inv = invert(xk);
  Word const& u = p.u();
  Word const u_inv = invert(u);
  auto const in_u = names_in(u);
  auto const in_v = names_in(p.v());

  PsiMap m;
  m.forward[x] = m.backward[x] = Word::letter(gen(x));
  Word const b = Word::letter(gen(p.b_gen()));
  m.forward[p.b_gen()] = b * u;
  m.backward[p.b_gen()] = b * xk * u_inv * xk_inv;
  for (auto const& y : p.y_gens()) {
    Word const g = Word::letter(gen(y));
    if (in_u.contains(y)) {
      m.forward[y] = xk_inv * g * xk;
      m.backward[y] = xk * g * xk_inv;
    } else if (in_v.contains(y)) {
      Word const t = xk_inv * u * xk;
      m.forward[y] = invert(t) * g * t;
      m.backward[y] = u * g * u_inv;
    } else {
      m.forward[y] = m.backward[y] = g;
    }
  }
  return m;
}

Word psi_apply(PsiMap const& map, Word const& w, std::int64_t n) {
  Word out = w;
  HomMap const& step = n >= 0 ? map.forward : map.backward;
  for (std::int64_t i = 0; i < (n >= 0 ? n : -n); ++i) {
    out = apply_hom(out, step);
  }
  return out;
}

Word psi_apply(FamilyPresentation const& p, Word const& w, std::int64_t n) {
  return psi_apply(psi(p), w, n);
}

FamilyPresentation parse_presentation_config(std::string_view text) {
  RawPresentation raw;
  std::optional<std::int64_t> genus;
  std::set<std::string> keys;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (trim(line).empty()) {
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string const key = trim(std::string_view(line).substr(0, eq));
    std::string const value = trim(std::string_view(line).substr(eq + 1));
    if (!keys.insert(key).second) {
      throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": duplicate key " + key);
    }
    if (key == "magnus_gen") {
      raw.magnus_gen = value;
    } else if (key == "b_gen") {
      raw.b_gen = value;
    } else if (key == "y_gens") {
      std::istringstream ys(value);
      std::string item;
      while (std::getline(ys, item, ',')) {
        raw.y_gens.push_back(trim(item));
      }
    } else if (key == "k") {
      raw.k = parse_int(value, "k");
    } else if (key == "u") {
      raw.u = parse_word(value);
    } else if (key == "v") {
      raw.v = parse_word(value);
    } else if (key == "surface_genus") {
      genus = parse_int(value, "surface_genus");
    } else {
      throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  if (genus) {
    if (keys.size() != 1) {
      throw Error(Errc::Parse, "surface_genus cannot be combined with other keys");
    }
    return from_surface_genus(*genus);
  }
  for (char const* required : {"magnus_gen", "b_gen", "y_gens", "u", "v"}) {
    if (!keys.contains(required)) {
      throw Error(Errc::Parse, std::string("missing key ") + required);
    }
  }
  return validate(std::move(raw));
}

std::string describe(FamilyPresentation const& p) {
  std::ostringstream out;
  out << "<" << p.magnus_gen() << ", " << p.b_gen();
  for (auto const& y : p.y_gens()) {
    out << ", " << y;
  }
  out << " | [" << p.magnus_gen();
  if (p.k() != 1) {
    out << "^" << p.k();
  }
  out << ", " << p.b_gen() << "] (" << to_string(p.u()) << ") (" << to_string(p.v())
      << ")>";
  return out.str();
}

}  // namespace magnus
