#include "magnus/words.hpp"

#include <cctype>
#include <charconv>

#include "magnus/error.hpp"

namespace magnus {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::Parse: return "ParseError";
    case Errc::MissingImage: return "MissingImage";
    case Errc::ForeignLetter: return "ForeignLetter";
    case Errc::IndexOverflow: return "IndexOverflow";
    case Errc::SharedLetters: return "SharedLetters";
    case Errc::TooFewY: return "TooFewY";
    case Errc::EmptyUV: return "EmptyUV";
    case Errc::NonPositiveK: return "NonPositiveK";
    case Errc::ReservedName: return "ReservedName";
    case Errc::DuplicateGenerator: return "DuplicateGenerator";
    case Errc::Unsupported: return "Unsupported";
    case Errc::ZeroBExponent: return "ZeroBExponent";
    case Errc::NonzeroXExponent: return "NonzeroXExponent";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::TrivialElement: return "TrivialElement";
    case Errc::IterationCapExceeded: return "IterationCapExceeded";
    case Errc::ResourceCap: return "ResourceCap";
  }
  return "Error";
}

Word free_reduce(std::span<Letter const> raw) { return Word::reduce(raw); }

std::int64_t exponent_sum(Word const& w, std::string_view name) {
  std::int64_t sum = 0;
  for (Letter const& l : w) {
    if (l.sym.name == name) {
      sum += l.sign;
    }
  }
  return sum;
}

Word kill_generators(Word const& w,
                     std::set<std::string, std::less<>> const& kill) {
  Word::Builder b;
  for (Letter const& l : w) {
    if (!kill.contains(l.sym.name)) {
      b.push(l);
    }
  }
  return std::move(b).build();
}

Word apply_hom(Word const& w, HomMap const& images) {
  Word::Builder b;
  for (Letter const& l : w) {
    auto it = images.find(l.sym.name);
    if (it == images.end()) {
      throw Error(Errc::MissingImage, "no image for generator " + l.sym.name);
    }
    if (l.sign > 0) {
      b.append(it->second);
    } else {
      b.append_inverse(it->second);
    }
  }
  return std::move(b).build();
}

Word gen_power(std::string const& name, std::int64_t n) {
  return power(Word::letter(gen(name)), n);
}

bool is_reserved_name(std::string_view name) {
  return name == kReservedMagnus || name == kReservedBbar;
}

bool is_valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

namespace {

Letter parse_token(std::string_view tok) {
  auto fail = [&](char const* why) -> Letter {
    throw Error(Errc::Parse, std::string(why) + " in token '" +
                                 std::string(tok) + "'");
  };
  std::size_t pos = 0;
  while (pos < tok.size() && tok[pos] != '[' && tok[pos] != '^') {
    ++pos;
  }
  std::string_view const name = tok.substr(0, pos);
  if (!is_valid_name(name) && !is_reserved_name(name)) {
    return fail("bad generator name");
  }
  Letter l{GenSym{std::string(name), std::nullopt}, 1};
  std::string_view rest = tok.substr(pos);
  if (!rest.empty() && rest.front() == '[') {
    auto close = rest.find(']');
    if (close == std::string_view::npos) {
      return fail("unterminated index");
    }
    std::string_view digits = rest.substr(1, close - 1);
    if (!digits.empty() && digits.front() == '+') {
      digits.remove_prefix(1);
    }
    std::int64_t idx = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size()) {
      return fail("bad index");
    }
    l.sym.index = idx;
    rest = rest.substr(close + 1);
  }
  if (!rest.empty()) {
    if (rest != "^-1") {
      return fail("unexpected suffix");
    }
    l.sign = -1;
  }
  return l;
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j > i) {
      raw.push_back(parse_token(text.substr(i, j - i)));
    }
    i = j;
  }
  return Word::reduce(raw);
}

std::string to_string(Letter const& l) {
  std::string out = l.sym.name;
  if (l.sym.index) {
    out += '[';
    out += std::to_string(*l.sym.index);
    out += ']';
  }
  if (l.sign < 0) {
    out += "^-1";
  }
  return out;
}

std::string to_string(Word const& w) {
  std::string out;
  for (Letter const& l : w) {
    if (!out.empty()) {
      out += ' ';
    }
    out += to_string(l);
  }
  return out;
}

}  // namespace magnus
