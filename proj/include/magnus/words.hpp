#pragma once

// Free-group words over named (optionally indexed) generators.
//
// Every word value is freely reduced at all times; the only way to build one
// from arbitrary letters goes through free reduction. The letter container is
// generic so that the kernel module can reuse the same machinery with its
// integer-coded letters.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "magnus/detail/reduce.hpp"

namespace magnus {

struct GenSym {
  std::string name;
  std::optional<std::int64_t> index;

  friend bool operator==(GenSym const&, GenSym const&) = default;
  friend std::strong_ordering operator<=>(GenSym const&,
                                          GenSym const&) = default;
};

struct Letter {
  GenSym sym;
  int sign = 1;

  Letter inverse() const { return Letter{sym, -sign}; }
  bool cancels(Letter const& other) const {
    return sign == -other.sign && sym == other.sym;
  }

  friend bool operator==(Letter const&, Letter const&) = default;
  friend std::strong_ordering operator<=>(Letter const&,
                                          Letter const&) = default;
};

inline Letter gen(std::string name, int sign = 1) {
  return Letter{GenSym{std::move(name), std::nullopt}, sign};
}

inline Letter gen(std::string name, std::int64_t index, int sign) {
  return Letter{GenSym{std::move(name), index}, sign};
}

template <class L>
class ReducedWord {
 public:
  using letter_type = L;
  using const_iterator = typename std::vector<L>::const_iterator;

  ReducedWord() = default;

  static ReducedWord reduce(std::span<L const> raw) {
    std::vector<L> out;
    out.reserve(raw.size());
    for (L const& l : raw) {
      detail::push_reduced(out, l);
    }
    return ReducedWord(std::move(out));
  }

  static ReducedWord reduce(std::initializer_list<L> raw) {
    return reduce(std::span<L const>(raw.begin(), raw.size()));
  }

  static ReducedWord letter(L const& l) { return ReducedWord({l}); }

  std::vector<L> const& letters() const noexcept { return letters_; }
  std::span<L const> span() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  L const& operator[](std::size_t i) const { return letters_[i]; }
  L const& front() const { return letters_.front(); }
  L const& back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }

  // Contiguous subword [pos, pos + len); subwords of reduced words are
  // reduced.
  ReducedWord subword(std::size_t pos, std::size_t len) const {
    return ReducedWord(std::vector<L>(letters_.begin() + pos,
                                      letters_.begin() + pos + len));
  }

  friend bool operator==(ReducedWord const&, ReducedWord const&) = default;
  friend auto operator<=>(ReducedWord const& a, ReducedWord const& b) {
    return a.letters_ <=> b.letters_;
  }

  // Accumulates letters with on-the-fly cancellation.
  class Builder {
   public:
    Builder() = default;
    explicit Builder(ReducedWord const& start) : out_(start.letters_) {}

    Builder& push(L const& l) {
      detail::push_reduced(out_, l);
      return *this;
    }
    Builder& append(ReducedWord const& w) {
      for (L const& l : w.letters_) {
        detail::push_reduced(out_, l);
      }
      return *this;
    }
    Builder& append_inverse(ReducedWord const& w) {
      for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
        detail::push_reduced(out_, it->inverse());
      }
      return *this;
    }
    std::size_t size() const noexcept { return out_.size(); }
    ReducedWord build() && { return ReducedWord(std::move(out_)); }
    ReducedWord build() const& { return ReducedWord(out_); }

   private:
    std::vector<L> out_;
  };

 private:
  explicit ReducedWord(std::vector<L> reduced) : letters_(std::move(reduced)) {}
  std::vector<L> letters_;
};

using Word = ReducedWord<Letter>;

template <class L>
ReducedWord<L> invert(ReducedWord<L> const& w) {
  return typename ReducedWord<L>::Builder().append_inverse(w).build();
}

template <class L>
ReducedWord<L> concat(ReducedWord<L> const& a, ReducedWord<L> const& b) {
  return typename ReducedWord<L>::Builder(a).append(b).build();
}

template <class L>
ReducedWord<L> operator*(ReducedWord<L> const& a, ReducedWord<L> const& b) {
  return concat(a, b);
}

// h^-1 w h
template <class L>
ReducedWord<L> conjugate(ReducedWord<L> const& w, ReducedWord<L> const& h) {
  return typename ReducedWord<L>::Builder()
      .append_inverse(h)
      .append(w)
      .append(h)
      .build();
}

template <class L>
ReducedWord<L> power(ReducedWord<L> const& w, std::int64_t n) {
  typename ReducedWord<L>::Builder b;
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) {
    if (n > 0) {
      b.append(w);
    } else {
      b.append_inverse(w);
    }
  }
  return std::move(b).build();
}

// w is cyclically reduced when its first and last letters are not inverse.
template <class L>
bool is_cyclically_reduced(ReducedWord<L> const& w) {
  return w.size() < 2 || !w.front().cancels(w.back());
}

// Conjugacy class representative compared up to rotation. The stored letters
// are the least rotation of the cyclic reduction.
template <class L>
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(ReducedWord<L> const& w) {
    std::size_t const t = detail::cyclic_trim(w.span());
    ReducedWord<L> core = w.subword(t, w.size() - 2 * t);
    std::size_t const r = detail::least_rotation(core.span());
    typename ReducedWord<L>::Builder b;
    for (std::size_t i = 0; i < core.size(); ++i) {
      b.push(core[(r + i) % core.size()]);
    }
    canonical_ = std::move(b).build();
  }

  ReducedWord<L> const& canonical() const noexcept { return canonical_; }
  std::size_t size() const noexcept { return canonical_.size(); }

  friend bool operator==(CyclicWord const&, CyclicWord const&) = default;
  friend auto operator<=>(CyclicWord const& a, CyclicWord const& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  ReducedWord<L> canonical_;
};

// w == conjugator^-1 * core * conjugator, core cyclically reduced.
template <class L>
struct CyclicReduction {
  ReducedWord<L> core;
  ReducedWord<L> conjugator;
};

template <class L>
CyclicReduction<L> cyclic_reduce(ReducedWord<L> const& w) {
  std::size_t const t = detail::cyclic_trim(w.span());
  // w = A core A^-1 with A the first t letters, so the conjugator is A^-1.
  return {w.subword(t, w.size() - 2 * t), invert(w.subword(0, t))};
}

// Some h with h^-1 w1 h == w2, if w1 and w2 are conjugate in the free group.
template <class L>
std::optional<ReducedWord<L>> is_conjugate_free(ReducedWord<L> const& w1,
                                                ReducedWord<L> const& w2) {
  auto const c1 = cyclic_reduce(w1);
  auto const c2 = cyclic_reduce(w2);
  auto const t = detail::rotation_offset(c1.core.span(), c2.core.span());
  if (!t) {
    return std::nullopt;
  }
  // core1 = A B and core2 = B A = A^-1 core1 A.
  ReducedWord<L> const a = c1.core.subword(0, *t);
  return invert(c1.conjugator) * a * c2.conjugator;
}

using HomMap = std::map<std::string, Word, std::less<>>;

std::int64_t exponent_sum(Word const& w, std::string_view name);
Word kill_generators(Word const& w, std::set<std::string, std::less<>> const& kill);
// Letters carrying an index are looked up by name as well.
Word apply_hom(Word const& w, HomMap const& images);
Word free_reduce(std::span<Letter const> raw);
Word gen_power(std::string const& name, std::int64_t n);

inline constexpr std::string_view kReservedMagnus = "_x";
inline constexpr std::string_view kReservedBbar = "_bbar";
bool is_reserved_name(std::string_view name);
bool is_valid_name(std::string_view name);

// Whitespace-separated tokens `name`, `name^-1`, `name[i]`, `name[i]^-1`.
Word parse_word(std::string_view text);
std::string to_string(Letter const& l);
std::string to_string(Word const& w);

}  // namespace magnus
