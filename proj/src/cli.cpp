#include "magnus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "magnus/amalgam.hpp"
#include "magnus/decide.hpp"
#include "magnus/error.hpp"
#include "magnus/kernel.hpp"
#include "magnus/presentation.hpp"
#include "magnus/special.hpp"
#include "magnus/words.hpp"

namespace magnus::cli {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

struct UsageError {
  std::string what;
};

struct PresentationError {
  std::string what;
};

struct Options {
  std::optional<std::int64_t> genus;
  std::string presentation_file;
  bool porcelain = false;
  std::int64_t psi_cap = 64;

  std::vector<std::string> words;
  std::int64_t psi_n = 1;
  std::int64_t shift = 0;
  std::string lemma;
  std::int64_t j = 0, i = 0, m = 0, n = 0;
  std::int64_t depth = 2;
  std::int64_t conj_len = 2;
};

class Session {
 public:
  Session(Options const& opts, std::istream& in, std::ostream& out)
      : opts_(opts), in_(in), out_(out) {}

  bool has_presentation() const {
    return opts_.genus.has_value() || !opts_.presentation_file.empty();
  }

  FamilyPresentation const& presentation() {
    if (!presentation_) {
      if (!has_presentation()) {
        throw UsageError{"this subcommand needs --genus N or --presentation FILE"};
      }
      try {
        if (opts_.genus) {
          presentation_ = from_surface_genus(*opts_.genus);
        } else {
          std::ifstream file(opts_.presentation_file);
          if (!file) {
            throw PresentationError{"cannot read " + opts_.presentation_file};
          }
          std::string text((std::istreambuf_iterator<char>(file)), {});
          presentation_ = parse_presentation_config(text);
        }
      } catch (Error const& e) {
        throw PresentationError{e.what()};
      }
    }
    return *presentation_;
  }

  Kernel const& kernel() {
    if (!kernel_) {
      kernel_.emplace(presentation());
    }
    return *kernel_;
  }

  std::string read_stdin() {
    if (stdin_read_) {
      throw UsageError{"standard input can be consumed only once"};
    }
    stdin_read_ = true;
    return std::string((std::istreambuf_iterator<char>(in_)), {});
  }

  Word word(std::size_t idx) {
    std::string const& text = opts_.words.at(idx);
    return parse_word(text == "-" ? read_stdin() : text);
  }

  // Words holding indexed letters are kernel words already.
  KernelWord kernel_word(std::size_t idx) {
    Word const w = word(idx);
    bool const indexed = std::any_of(w.begin(), w.end(),
                                     [](Letter const& l) { return l.sym.index.has_value(); });
    return indexed ? kernel().from_word(w) : kernel().rs_rewrite(w);
  }

  std::string kernel_text(KernelWord const& kw) { return to_string(kernel().to_word(kw)); }

  void emit(Fields const& fields, std::vector<std::string> const& notes = {}) {
    if (!opts_.porcelain) {
      for (auto const& note : notes) {
        out_ << "# " << note << "\n";
      }
    }
    for (auto const& [key, value] : fields) {
      out_ << key << "=" << value << "\n";
    }
  }

  void emit_raw(std::string const& text) { out_ << text; }

  Options const& opts() const { return opts_; }

 private:
  Options const& opts_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<FamilyPresentation> presentation_;
  std::optional<Kernel> kernel_;
  bool stdin_read_ = false;
};

std::string flag(bool b) { return b ? "true" : "false"; }
std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

std::string join(std::vector<std::int64_t> const& xs) {
  std::string out;
  for (auto x : xs) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(x);
  }
  return out;
}

std::string_view ambient_name(Ambient a) {
  switch (a) {
    case Ambient::Free: return "free";
    case Ambient::G: return "G";
    case Ambient::H: return "H";
  }
  return "G";
}

Fields verdict_fields(Verdict const& v) {
  if (!v.same()) {
    return {{"verdict", "different"}, {"reason", std::string(reason_name(*v.reason))}};
  }
  Fields f{{"verdict", "same"},
           {"sign", sign_text(v.sign)},
           {"conjugator", to_string(v.conjugator)},
           {"ambient", std::string(ambient_name(v.ambient))}};
  if (v.g_conjugator) {
    f.emplace_back("g_conjugator", to_string(*v.g_conjugator));
  }
  return f;
}

Fields special_fields(Session& s, SpecialElement const& g) {
  return {{"element", s.kernel_text(g.element)},
          {"alpha", std::to_string(g.alpha)},
          {"omega", std::to_string(g.omega)},
          {"width", std::to_string(g.width)},
          {"pieces", std::to_string(g.pieces.size())},
          {"conjugator", to_string(g.conjugator)},
          {"psi_power", std::to_string(g.psi_power)}};
}

SpecialElement specialize_arg(Session& s, std::size_t idx) {
  return specialize(s.kernel(), s.kernel_word(idx), {s.opts().psi_cap, 0});
}

// Certificates are the key=value lines a `magnus` run prints; comments and
// other keys are ignored.
Verdict read_certificate(std::string const& text) {
  Verdict v;
  std::optional<int> sign;
  std::optional<Word> conjugator;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.empty() || line.front() == '#') {
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      continue;
    }
    std::string const key = line.substr(0, eq);
    std::string const value = line.substr(eq + 1);
    if (key == "sign") {
      if (value == "+1" || value == "1") {
        sign = 1;
      } else if (value == "-1") {
        sign = -1;
      } else {
        throw UsageError{"bad sign '" + value + "' in certificate"};
      }
    } else if (key == "conjugator") {
      conjugator = parse_word(value);
    } else if (key == "verdict" && value != "same") {
      throw UsageError{"certificate does not claim verdict=same"};
    }
  }
  if (!sign || !conjugator) {
    throw UsageError{"certificate needs sign= and conjugator= lines"};
  }
  v.kind = VerdictKind::SameClosure;
  v.sign = *sign;
  v.conjugator = std::move(*conjugator);
  return v;
}

void dispatch(std::string const& cmd, Session& s) {
  Options const& o = s.opts();
  if (cmd == "reduce") {
    s.emit({{"word", to_string(s.word(0))}});
  } else if (cmd == "conj-free") {
    Word const a = s.word(0), b = s.word(1);
    auto h = is_conjugate_free(a, b);
    Fields f{{"conjugate", flag(h.has_value())}};
    if (h) {
      f.emplace_back("conjugator", to_string(*h));
    }
    s.emit(f);
  } else if (cmd == "wp") {
    Word const w = s.word(0);
    bool const indexed = std::any_of(w.begin(), w.end(),
                                     [](Letter const& l) { return l.sym.index.has_value(); });
    bool const trivial = indexed ? s.kernel().is_trivial(s.kernel().from_word(w))
                                 : s.kernel().is_trivial_in_H(w);
    s.emit({{"trivial", flag(trivial)}}, {describe(s.presentation())});
  } else if (cmd == "rs") {
    s.emit({{"kernel_word", s.kernel_text(s.kernel().rs_rewrite(s.word(0)))}});
  } else if (cmd == "canon") {
    s.emit({{"canonical", s.kernel_text(s.kernel().canonicalize(s.kernel_word(0)).word())}},
           {"basis b[1..k] and all y[i]"});
  } else if (cmd == "width") {
    WidthInfo const w = s.kernel().alpha_omega(s.kernel_word(0));
    s.emit({{"alpha", std::to_string(w.alpha)},
            {"omega", std::to_string(w.omega)},
            {"width", std::to_string(w.width)}});
  } else if (cmd == "pieces") {
    PieceDecomposition const p = pieces(s.kernel(), s.kernel_word(0));
    Fields f{{"count", std::to_string(p.size())}};
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
      f.emplace_back("piece", std::to_string(p.residues[idx]) + ":" + s.kernel_text(p.pieces[idx]));
    }
    s.emit(f, {"piece=<residue>:<word in the canonical basis>"});
  } else if (cmd == "psi") {
    s.emit({{"word", to_string(psi_apply(s.presentation(), s.word(0), o.psi_n))}});
  } else if (cmd == "specialize") {
    s.emit(special_fields(s, specialize_arg(s, 0)));
  } else if (cmd == "sets") {
    SpecialElement const g = specialize_arg(s, 0);
    LeftRightSets const sets = left_right_sets(s.kernel(), g, o.shift);
    Fields f{{"left", join(sets.left_indices)}, {"right", join(sets.right_indices)}};
    for (std::size_t idx = 0; idx < sets.left.size(); ++idx) {
      f.emplace_back("w_" + std::to_string(sets.left_indices[idx]), s.kernel_text(sets.left[idx]));
    }
    s.emit(f, {"left lists l with w_l, right lists l with b[l]"});
  } else if (cmd == "split") {
    SpecialElement const g = specialize_arg(s, 0);
    AmalgamSplit const split = o.lemma == "41" ? split_41(s.kernel(), g, o.j, o.i, o.m, o.n)
                                               : split_42(s.kernel(), g, o.j, o.i, o.m, o.n);
    s.emit_raw(format_split(split, s.kernel().k()));
  } else if (cmd == "magnus") {
    Word const r = s.word(0), t = s.word(1);
    Verdict const v = magnus_same_closure(s.presentation(), r, t, {Route::Auto, o.psi_cap});
    std::vector<std::string> notes;
    if (v.same() && v.ambient == Ambient::H) {
      notes.push_back("conjugator lives in G *_{a = _x^k} <_x>");
    }
    s.emit(verdict_fields(v), notes);
  } else if (cmd == "free-magnus") {
    if (s.has_presentation()) {
      throw UsageError{"free-magnus works in a free group and takes no presentation"};
    }
    Word const r = s.word(0), t = s.word(1);
    s.emit(verdict_fields(free_magnus(r, t)));
  } else if (cmd == "oracle") {
    Word const r = s.word(0), t = s.word(1);
    OracleBounds const bounds{o.depth, o.conj_len};
    std::vector<std::string> alphabet;
    FamilyPresentation const* p = nullptr;
    if (s.has_presentation()) {
      p = &s.presentation();
      alphabet = p->generators();
    } else {
      std::set<std::string> names;
      for (Word const* w : {&r, &t}) {
        for (Letter const& l : *w) {
          names.insert(l.sym.name);
        }
      }
      alphabet.assign(names.begin(), names.end());
    }
    bool const forward = nc_member_bounded(t, r, p, alphabet, bounds);
    bool const backward = nc_member_bounded(r, t, p, alphabet, bounds);
    s.emit({{"s_in_closure_of_r", flag(forward)},
            {"r_in_closure_of_s", flag(backward)},
            {"verdict", forward && backward ? "same" : "not-found"}},
           {"bounded search: not-found is not a proof of distinct closures"});
  } else if (cmd == "verify") {
    Word const r = s.word(0), t = s.word(1);
    Verdict const v = read_certificate(s.read_stdin());
    bool const ok = s.has_presentation() ? verify_certificate(s.presentation(), r, t, v)
                                         : verify_free_certificate(r, t, v);
    s.emit({{"valid", flag(ok)}});
  }
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::IterationCapExceeded: return kIterationCap;
    case Errc::ResourceCap:
    case Errc::IndexOverflow: return kResourceCap;
    default: return kUsage;
  }
}

}  // namespace

int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  o.words.resize(2);  // options bind to these slots
  CLI::App app{"Decide normal-closure questions in <a,b,y | [a^k,b]uv>", "magnus-kit"};
  app.fallthrough();
  app.require_subcommand(1);
  auto* genus = app.add_option("--genus", o.genus, "nonorientable surface group of genus N");
  app.add_option("--presentation", o.presentation_file, "presentation config file")
      ->excludes(genus);
  app.add_flag("--porcelain", o.porcelain, "stable key=value output only");
  app.add_option("--psi-cap", o.psi_cap, "largest psi power tried by specialize");

  auto words = [&](CLI::App* sub, std::vector<std::string> names) {
    for (std::size_t idx = 0; idx < names.size(); ++idx) {
      sub->add_option(names[idx], o.words[idx], "word, or - for standard input")->required();
    }
  };
  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto sub = [&](std::string const& name, std::string const& help, std::vector<std::string> w) {
    CLI::App* s = app.add_subcommand(name, help);
    words(s, std::move(w));
    subs.emplace_back(name, s);
    return s;
  };
  sub("reduce", "free reduction", {"W"});
  sub("conj-free", "conjugacy in the free group", {"W1", "W2"});
  sub("wp", "word problem", {"W"});
  sub("rs", "rewrite a zero x-exponent word over b[i], y[i]", {"W"});
  sub("canon", "canonical basis form of a kernel element", {"W"});
  sub("width", "alpha, omega and width of a kernel element", {"W"});
  sub("pieces", "free product pieces of a kernel element", {"W"});
  sub("psi", "apply psi^N", {"W"})->add_option("-n", o.psi_n, "power (may be negative)");
  sub("specialize", "specialize a kernel element", {"W"});
  sub("sets", "left and right sets of a shifted special element", {"W"})
      ->add_option("--shift", o.shift, "shift i")
      ->required();
  CLI::App* split = sub("split", "amalgam splitting descriptor", {"LEMMA", "W"});
  split->add_option("--j", o.j)->required();
  split->add_option("--i", o.i)->required();
  split->add_option("--m", o.m)->required();
  split->add_option("--n", o.n)->required();
  sub("magnus", "do R and S have the same normal closure?", {"R", "S"});
  sub("free-magnus", "the same question in a free group", {"R", "S"});
  CLI::App* oracle = sub("oracle", "bounded search for normal closure membership", {"R", "S"});
  oracle->add_option("--depth", o.depth);
  oracle->add_option("--conj-len", o.conj_len);
  sub("verify", "check a certificate read from standard input", {"R", "S"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string cmd;
  for (auto const& [name, s] : subs) {
    if (s->parsed()) {
      cmd = name;
    }
  }
  if (cmd == "split") {
    o.lemma = o.words[0];
    o.words.erase(o.words.begin());
    if (o.lemma != "41" && o.lemma != "42") {
      err << "magnus-kit: split takes 41 or 42, got " << o.lemma << "\n";
      return kUsage;
    }
  }

  Session s(o, in, out);
  try {
    dispatch(cmd, s);
  } catch (UsageError const& e) {
    err << "magnus-kit: " << e.what << "\n";
    return kUsage;
  } catch (PresentationError const& e) {
    err << "magnus-kit: invalid presentation: " << e.what << "\n";
    return kBadPresentation;
  } catch (Error const& e) {
    err << "magnus-kit: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kOk;
}

}  // namespace magnus::cli
