#pragma once

// PBW normal forms in U(g) over an ordered alphabet of letters. A letter is
// scale * X_b + offset for a canonical basis element X_b, so shifted Cartan
// generators such as E_nn - c are single letters.
//
// Words are std::string with one byte per letter; letter ids are their rank
// in the active order, so a word is normal iff its bytes are nondecreasing.

#include "twy/lie.hpp"
#include "twy/multipoly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace twy {

enum class LetterClass { Plain, Row, Col, Shifted };

struct Letter {
  int basis = 0;
  Rational scale{1};
  MultiPoly offset;
  LetterClass cls = LetterClass::Plain;
};

inline Letter plain_letter(int b) {
  Letter l;
  l.basis = b;
  return l;
}

enum class OrderKind { HC, Verma, Ideal, RightIdeal, Custom };

/// Total order on the canonical basis, with the letter alphabet it induces.
///   HC:         lower < cartan < upper
///   Verma:      lower < upper < cartan
///   Ideal:      row-n < g(n-1) (HC) < column-n < shifted Cartan letter
///   RightIdeal: shifted Cartan letter < row-n < g(n-1) (HC) < column-n
///   Custom:     explicit list of basis positions, smallest first
struct MonomialOrder {
  OrderKind kind = OrderKind::HC;
  MultiPoly c;
  std::vector<int> custom;

  static MonomialOrder hc() { return {}; }
  static MonomialOrder verma() { return {OrderKind::Verma, {}, {}}; }
  static MonomialOrder ideal(MultiPoly c) { return {OrderKind::Ideal, std::move(c), {}}; }
  static MonomialOrder right_ideal(MultiPoly c) { return {OrderKind::RightIdeal, std::move(c), {}}; }
  static MonomialOrder explicit_order(std::vector<int> basis_positions) {
    return {OrderKind::Custom, {}, std::move(basis_positions)};
  }

  std::string key() const {
    switch (kind) {
      case OrderKind::HC: return "hc";
      case OrderKind::Verma: return "verma";
      case OrderKind::Ideal: return "ideal(" + c.to_string() + ")";
      case OrderKind::RightIdeal: return "right-ideal(" + c.to_string() + ")";
      case OrderKind::Custom: {
        std::string s = "custom(";
        for (int b : custom) s += std::to_string(b) + ",";
        return s + ")";
      }
    }
    return "?";
  }
};

using Word = std::string;
using Combo = std::vector<std::pair<Word, MultiPoly>>;

inline unsigned char letter_at(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

/// Shortlex order on words; deterministic term order for printing and merging.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::char_traits<char>::compare(a.data(), b.data(), a.size()) < 0;
  }
};

/// Sparse accumulator of word -> coefficient.
class WordAccumulator {
 public:
  void add(const Word& w, const MultiPoly& k) {
    if (k.is_zero()) return;
    auto [it, inserted] = m_.try_emplace(w, k);
    if (!inserted) it->second += k;
  }
  Combo finish() {
    Combo out;
    out.reserve(m_.size());
    for (auto& [w, k] : m_)
      if (!k.is_zero()) out.emplace_back(w, std::move(k));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return WordLess{}(x.first, y.first); });
    m_.clear();
    return out;
  }

 private:
  std::unordered_map<Word, MultiPoly> m_;
};

/// U(g) with a fixed ordered alphabet: letter table, letter brackets and the
/// memo of normal forms of (normal word) * letter. Obtain through get().
class Uea {
 public:
  struct LetterBracket {
    std::vector<std::pair<unsigned char, Rational>> linear;
    MultiPoly constant;
  };

  /// Shared context for (spec, order); contexts stay alive while any element
  /// refers to them.
  static std::shared_ptr<const Uea> get(const AlgebraSpec& spec, const MonomialOrder& order) {
    static std::mutex mu;
    static std::map<std::string, std::weak_ptr<const Uea>> cache;
    std::string key = spec.to_string() + "|" + order.key();
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end())
      if (auto p = it->second.lock()) return p;
    std::shared_ptr<const Uea> p(new Uea(LieAlgebra::make(spec), order));
    cache[key] = p;
    return p;
  }

  const LieAlgebra& algebra() const { return *g_; }
  const AlgebraSpec& spec() const { return g_->spec(); }
  const MonomialOrder& order() const { return order_; }
  int letter_count() const { return static_cast<int>(letters_.size()); }
  const Letter& letter(unsigned char id) const { return letters_.at(id); }
  unsigned char letter_of_basis(int b) const { return of_basis_.at(static_cast<std::size_t>(b)); }
  const LetterBracket& bracket(unsigned char p, unsigned char q) const {
    return brackets_[static_cast<std::size_t>(p) * letters_.size() + q];
  }

  bool is_normal(const Word& w) const {
    for (std::size_t i = 1; i < w.size(); ++i)
      if (letter_at(w, i - 1) > letter_at(w, i)) return false;
    return true;
  }

  /// Calls f(word, coefficient) for each term of NF(w * x); w must be normal.
  template <class F>
  void visit_product(const Word& w, unsigned char x, F&& f) const {
    if (w.empty() || letter_at(w, w.size() - 1) <= x) {
      Word v = w;
      v.push_back(static_cast<char>(x));
      f(v, one_);
      return;
    }
    for (const auto& [v, k] : memo(w, x)) f(v, k);
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
  }

  std::string letter_name(unsigned char id) const {
    const Letter& l = letter(id);
    std::string base = g_->name(l.basis);
    if (l.offset.is_zero() && l.scale.is_one()) return base;
    std::string s = "(";
    if (l.scale == Rational(-1)) s += "-";
    else if (!l.scale.is_one()) s += l.scale.to_string() + "*";
    s += base;
    if (!l.offset.is_zero()) {
      std::string o = l.offset.to_string();
      s += o[0] == '-' ? " - " + o.substr(1) : " + " + o;
    }
    return s + ")";
  }

  std::string word_to_string(const Word& w) const {
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!s.empty()) s += "*";
      s += letter_name(letter_at(w, i));
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }

 private:
  Uea(std::shared_ptr<const LieAlgebra> g, MonomialOrder order) : g_(std::move(g)), order_(std::move(order)) {
    build_letters();
    if (letters_.size() > 255) throw std::invalid_argument("algebra too large for the byte alphabet");
    of_basis_.assign(static_cast<std::size_t>(g_->dim()), 0);
    for (std::size_t id = 0; id < letters_.size(); ++id)
      of_basis_[static_cast<std::size_t>(letters_[id].basis)] = static_cast<unsigned char>(id);
    build_brackets();
  }

  void build_letters() {
    const auto& g = *g_;
    const AlgebraSpec& spec = g.spec();
    const int n = spec.n;
    auto tri_rank = [&](int b, bool verma) {
      switch (g.tri_class(b)) {
        case TriClass::Lower: return 0;
        case TriClass::Cartan: return verma ? 2 : 1;
        case TriClass::Upper: return verma ? 1 : 2;
      }
      return 0;
    };
    std::vector<std::pair<std::pair<int, int>, Letter>> keyed;
    switch (order_.kind) {
      case OrderKind::HC:
      case OrderKind::Verma:
        for (int b = 0; b < g.dim(); ++b) keyed.push_back({{tri_rank(b, order_.kind == OrderKind::Verma), b}, plain_letter(b)});
        break;
      case OrderKind::Custom: {
        if (static_cast<int>(order_.custom.size()) != g.dim()) throw std::invalid_argument("custom order must list every basis element");
        std::vector<bool> seen(static_cast<std::size_t>(g.dim()), false);
        int rank = 0;
        for (int b : order_.custom) {
          if (b < 0 || b >= g.dim() || seen[static_cast<std::size_t>(b)]) throw std::invalid_argument("custom order is not a permutation");
          seen[static_cast<std::size_t>(b)] = true;
          keyed.push_back({{rank++, 0}, plain_letter(b)});
        }
        break;
      }
      case OrderKind::Ideal:
      case OrderKind::RightIdeal: {
        bool right = order_.kind == OrderKind::RightIdeal;
        for (int b = 0; b < g.dim(); ++b) {
          const GenIndex& e = g.element(b);
          Letter l = plain_letter(b);
          int group;
          if (spec.is_gl()) {
            if (e.i == n && e.j == n) l.cls = LetterClass::Shifted;
            else if (e.i == n) l.cls = LetterClass::Row;
            else if (e.j == n) l.cls = LetterClass::Col;
          } else {
            if (e.i == -n && e.j == -n) l.cls = LetterClass::Shifted;
            else if (e.i == -n) l.cls = LetterClass::Col;
            else if (e.j == -n) l.cls = LetterClass::Row;
          }
          switch (l.cls) {
            case LetterClass::Shifted:
              // E_nn - c, or F_nn + c = -F_{-n,-n} + c
              if (spec.is_gl()) {
                l.offset = -order_.c;
              } else {
                l.scale = Rational(-1);
                l.offset = order_.c;
              }
              group = right ? 0 : 30;
              break;
            case LetterClass::Row: group = right ? 1 : 0; break;
            case LetterClass::Col: group = right ? 30 : 20; break;
            default: group = (right ? 10 : 10) + tri_rank(b, false); break;
          }
          keyed.push_back({{group, b}, l});
        }
        break;
      }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [k, l] : keyed) letters_.push_back(std::move(l));
  }

  void build_brackets() {
    const std::size_t L = letters_.size();
    brackets_.resize(L * L);
    for (std::size_t p = 0; p < L; ++p)
      for (std::size_t q = 0; q < L; ++q) {
        const Letter& lp = letters_[p];
        const Letter& lq = letters_[q];
        LetterBracket br;
        for (const auto& [e, k] : g_->bracket(lp.basis, lq.basis)) {
          unsigned char le = of_basis_[static_cast<std::size_t>(e)];
          const Letter& l = letters_[le];
          Rational coef = lp.scale * lq.scale * k / l.scale;
          br.linear.emplace_back(le, coef);
          if (!l.offset.is_zero()) br.constant -= l.offset * coef;
        }
        std::sort(br.linear.begin(), br.linear.end());
        brackets_[p * L + q] = std::move(br);
      }
  }

  /// NF(w * x) for normal w with last(w) > x:
  /// NF(w' x y) = NF(NF(w' x) y) + NF(w' [y, x]) where w = w' y.
  const Combo& memo(const Word& w, unsigned char x) const {
    Word key = w;
    key.push_back(static_cast<char>(x));
    {
      std::shared_lock lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const unsigned char y = letter_at(w, w.size() - 1);
    const Word rest = w.substr(0, w.size() - 1);
    WordAccumulator acc;
    visit_product(rest, x, [&](const Word& v, const MultiPoly& k) {
      visit_product(v, y, [&](const Word& v2, const MultiPoly& k2) { acc.add(v2, k * k2); });
    });
    const LetterBracket& br = bracket(y, x);
    for (const auto& [e, k] : br.linear)
      visit_product(rest, e, [&](const Word& v2, const MultiPoly& k2) { acc.add(v2, k2 * k); });
    if (!br.constant.is_zero()) acc.add(rest, br.constant);
    Combo result = acc.finish();
    std::unique_lock lock(mu_);
    auto [it, inserted] = memo_.try_emplace(std::move(key), std::move(result));
    return it->second;
  }

  std::shared_ptr<const LieAlgebra> g_;
  MonomialOrder order_;
  std::vector<Letter> letters_;
  std::vector<unsigned char> of_basis_;
  std::vector<LetterBracket> brackets_;
  const MultiPoly one_{1};
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Word, Combo> memo_;
};

using UeaPtr = std::shared_ptr<const Uea>;

/// Element of U(g) in normal form with respect to its context's order.
/// A default-constructed element is an unbound zero that adopts the context
/// of whatever it is combined with.
class UEAElement {
 public:
  UEAElement() = default;
  explicit UEAElement(UeaPtr ctx) : ctx_(std::move(ctx)) {}

  static UEAElement scalar(UeaPtr ctx, const MultiPoly& k) {
    UEAElement r(std::move(ctx));
    if (!k.is_zero()) r.t_.emplace_back(Word{}, k);
    return r;
  }
  static UEAElement letter(UeaPtr ctx, unsigned char id) {
    UEAElement r(std::move(ctx));
    r.t_.emplace_back(Word(1, static_cast<char>(id)), MultiPoly(1));
    return r;
  }
  /// The generator E_ij (gl) or F_ij (other families), canonicalized.
  static UEAElement generator(UeaPtr ctx, int i, int j) {
    UEAElement r(ctx);
    auto cf = ctx->algebra().canonicalize(i, j);
    if (!cf) return r;
    unsigned char id = ctx->letter_of_basis(cf->second);
    const Letter& l = ctx->letter(id);
    // X_b = (letter - offset) / scale
    Rational k = cf->first / l.scale;
    if (!l.offset.is_zero()) r.t_.emplace_back(Word{}, -(l.offset * k));
    r.t_.emplace_back(Word(1, static_cast<char>(id)), MultiPoly(k));
    return r;
  }
  /// Normal form of a sum of arbitrary (possibly unordered) words.
  static UEAElement from_words(UeaPtr ctx, const Combo& raw) {
    WordAccumulator acc;
    for (const auto& [w, k] : raw) {
      Combo cur{{Word{}, k}};
      for (char ch : w) {
        WordAccumulator step;
        for (const auto& [v, kv] : cur)
          ctx->visit_product(v, static_cast<unsigned char>(ch),
                             [&](const Word& v2, const MultiPoly& k2) { step.add(v2, kv * k2); });
        cur = step.finish();
      }
      for (const auto& [v, kv] : cur) acc.add(v, kv);
    }
    UEAElement r(std::move(ctx));
    r.t_ = acc.finish();
    return r;
  }
  static UEAElement from_normal_terms(UeaPtr ctx, Combo terms) {
    UEAElement r(std::move(ctx));
    WordAccumulator acc;
    for (auto& [w, k] : terms) {
      if (!r.ctx_->is_normal(w)) throw std::invalid_argument("from_normal_terms: word is not normal");
      acc.add(w, k);
    }
    r.t_ = acc.finish();
    return r;
  }

  const UeaPtr& context() const { return ctx_; }
  const Combo& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_[0].first.empty()); }
  MultiPoly scalar_part() const { return !t_.empty() && t_[0].first.empty() ? t_[0].second : MultiPoly(); }
  std::size_t degree() const { return t_.empty() ? 0 : t_.back().first.size(); }
  std::size_t size() const { return t_.size(); }

  friend UEAElement operator+(const UEAElement& a, const UEAElement& b) {
    UeaPtr ctx = common(a, b);
    if (a.t_.empty()) return b.rebound(ctx);
    if (b.t_.empty()) return a.rebound(ctx);
    UEAElement r(ctx);
    r.t_.reserve(a.t_.size() + b.t_.size());
    auto i = a.t_.begin(), j = b.t_.begin();
    WordLess less;
    while (i != a.t_.end() && j != b.t_.end()) {
      if (less(i->first, j->first)) r.t_.push_back(*i++);
      else if (less(j->first, i->first)) r.t_.push_back(*j++);
      else {
        MultiPoly s = i->second + j->second;
        if (!s.is_zero()) r.t_.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    r.t_.insert(r.t_.end(), i, a.t_.end());
    r.t_.insert(r.t_.end(), j, b.t_.end());
    return r;
  }
  friend UEAElement operator-(const UEAElement& a) {
    UEAElement r = a;
    for (auto& [w, k] : r.t_) k = -k;
    return r;
  }
  friend UEAElement operator-(const UEAElement& a, const UEAElement& b) { return a + (-b); }
  friend UEAElement operator*(const UEAElement& a, const MultiPoly& s) {
    if (s.is_zero()) return UEAElement(a.ctx_);
    UEAElement r = a;
    for (auto& [w, k] : r.t_) k = k * s;
    return r;
  }
  friend UEAElement operator*(const MultiPoly& s, const UEAElement& a) { return a * s; }
  friend UEAElement operator*(const UEAElement& a, const Rational& s) { return a * MultiPoly(s); }
  friend UEAElement operator*(const Rational& s, const UEAElement& a) { return a * MultiPoly(s); }
  friend UEAElement operator*(const UEAElement& a, int s) { return a * MultiPoly(s); }
  friend UEAElement operator*(int s, const UEAElement& a) { return a * MultiPoly(s); }

  friend UEAElement operator*(const UEAElement& a, const UEAElement& b) {
    UeaPtr ctx = common(a, b);
    if (a.t_.empty() || b.t_.empty()) return UEAElement(ctx);
    if (a.is_scalar()) return b.rebound(ctx) * a.t_[0].second;
    if (b.is_scalar()) return a.rebound(ctx) * b.t_[0].second;
    WordAccumulator acc;
    for (const auto& [wa, ka] : a.t_)
      for (const auto& [wb, kb] : b.t_) {
        MultiPoly k = ka * kb;
        if (k.is_zero()) continue;
        if (wa.empty() || wb.empty() || letter_at(wa, wa.size() - 1) <= letter_at(wb, 0)) {
          acc.add(wa + wb, k);
          continue;
        }
        Combo cur{{wa, k}};
        for (char ch : wb) {
          WordAccumulator step;
          for (const auto& [v, kv] : cur)
            ctx->visit_product(v, static_cast<unsigned char>(ch),
                               [&](const Word& v2, const MultiPoly& k2) { step.add(v2, kv * k2); });
          cur = step.finish();
        }
        for (const auto& [v, kv] : cur) acc.add(v, kv);
      }
    UEAElement r(ctx);
    r.t_ = acc.finish();
    return r;
  }
  UEAElement& operator+=(const UEAElement& o) { return *this = *this + o; }
  UEAElement& operator-=(const UEAElement& o) { return *this = *this - o; }
  UEAElement& operator*=(const UEAElement& o) { return *this = *this * o; }

  friend bool operator==(const UEAElement& a, const UEAElement& b) {
    if (a.t_.empty() && b.t_.empty()) return true;
    return a.ctx_ == b.ctx_ && a.t_ == b.t_;
  }

  /// Applies f to every coefficient (e.g. substitution of central variables).
  template <class F>
  UEAElement map_coefficients(F&& f) const {
    UEAElement r(ctx_);
    for (const auto& [w, k] : t_) {
      MultiPoly v = f(k);
      if (!v.is_zero()) r.t_.emplace_back(w, std::move(v));
    }
    return r;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [w, k] : t_) {
      std::string coef;
      bool neg = false;
      if (auto r = k.as_constant()) {
        neg = r->sign() < 0;
        Rational a = neg ? -*r : *r;
        coef = a.to_string();
        if (a.is_one() && !w.empty()) coef.clear();
      } else {
        coef = "(" + k.to_string() + ")";
      }
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      s += coef;
      if (!w.empty()) s += (coef.empty() ? "" : "*") + ctx_->word_to_string(w);
    }
    return s;
  }

 private:
  static UeaPtr common(const UEAElement& a, const UEAElement& b) {
    if (!a.ctx_) return b.ctx_;
    if (!b.ctx_ || a.ctx_ == b.ctx_) return a.ctx_;
    if (a.t_.empty()) return b.ctx_;
    if (b.t_.empty()) return a.ctx_;
    throw std::invalid_argument("UEA elements live in different contexts (" + a.ctx_->spec().to_string() + " " +
                                a.ctx_->order().key() + " vs " + b.ctx_->spec().to_string() + " " + b.ctx_->order().key() + ")");
  }
  UEAElement rebound(const UeaPtr& ctx) const {
    UEAElement r = *this;
    r.ctx_ = ctx;
    return r;
  }

  UeaPtr ctx_;
  Combo t_;
};

inline UEAElement zero_like(const UEAElement& a) { return UEAElement(a.context()); }
inline UEAElement one_like(const UEAElement& a) { return UEAElement::scalar(a.context(), MultiPoly(1)); }
inline std::optional<UEAElement> scalar_inverse(const UEAElement& a) {
  if (!a.is_scalar()) return std::nullopt;
  auto inv = scalar_inverse(a.scalar_part());
  if (!inv) return std::nullopt;
  return UEAElement::scalar(a.context(), *inv);
}
inline std::string to_string(const UEAElement& a) { return a.to_string(); }

inline UEAElement commutator(const UEAElement& a, const UEAElement& b) { return a * b - b * a; }

/// Rewrites a into the context target, mapping letters through their basis
/// labels (i, j). The target may have a different order or a different rank,
/// as long as every label used by a exists there.
inline UEAElement reexpress(const UEAElement& a, const UeaPtr& target) {
  if (!a.context() || a.context() == target) return a.is_zero() ? UEAElement(target) : a;
  const Uea& src = *a.context();
  std::map<unsigned char, UEAElement> image;
  auto letter_image = [&](unsigned char id) -> const UEAElement& {
    auto it = image.find(id);
    if (it != image.end()) return it->second;
    const Letter& l = src.letter(id);
    const GenIndex& e = src.algebra().element(l.basis);
    if (!target->algebra().find(e.i, e.j))
      throw std::invalid_argument("reexpress: generator (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") not in " +
                                  target->spec().to_string());
    UEAElement v = UEAElement::generator(target, e.i, e.j) * l.scale + UEAElement::scalar(target, l.offset);
    return image.emplace(id, std::move(v)).first->second;
  };
  WordAccumulator acc;
  for (const auto& [w, k] : a.terms()) {
    UEAElement cur = UEAElement::scalar(target, k);
    for (char ch : w) cur = cur * letter_image(static_cast<unsigned char>(ch));
    for (const auto& [v, kv] : cur.terms()) acc.add(v, kv);
  }
  return UEAElement::from_normal_terms(target, acc.finish());
}

/// Sum of many elements without quadratic merging.
class ElementAccumulator {
 public:
  explicit ElementAccumulator(UeaPtr ctx) : ctx_(std::move(ctx)) {}
  void add(const UEAElement& a, const MultiPoly& k = MultiPoly(1)) {
    if (a.is_zero() || k.is_zero()) return;
    if (a.context() != ctx_) throw std::invalid_argument("ElementAccumulator: context mismatch");
    for (const auto& [w, c] : a.terms()) acc_.add(w, c * k);
  }
  UEAElement finish() { return UEAElement::from_normal_terms(ctx_, acc_.finish()); }

 private:
  UeaPtr ctx_;
  WordAccumulator acc_;
};

// ---------------------------------------------------------------------------
// Reference rewriting engine: repeatedly swaps one adjacent out-of-order pair.

enum class RewriteStrategy { Leftmost, Rightmost };

inline UEAElement rewrite_normal_form(const UeaPtr& ctx, const Combo& raw, RewriteStrategy strategy) {
  std::map<Word, MultiPoly, WordLess> work;
  auto push = [&](const Word& w, const MultiPoly& k) {
    if (k.is_zero()) return;
    auto [it, ins] = work.try_emplace(w, k);
    if (!ins) {
      it->second += k;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  for (const auto& [w, k] : raw) push(w, k);
  WordAccumulator done;
  while (!work.empty()) {
    auto it = std::prev(work.end());  // longest words first
    Word w = it->first;
    MultiPoly k = it->second;
    work.erase(it);
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (letter_at(w, i) > letter_at(w, i + 1)) {
        pos = i;
        if (strategy == RewriteStrategy::Leftmost) break;
      }
    if (!pos) {
      done.add(w, k);
      continue;
    }
    const std::size_t i = *pos;
    unsigned char x = letter_at(w, i), y = letter_at(w, i + 1);
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    push(swapped, k);
    const auto& br = ctx->bracket(x, y);
    for (const auto& [e, c] : br.linear) {
      Word v = w.substr(0, i) + static_cast<char>(e) + w.substr(i + 2);
      push(v, k * c);
    }
    if (!br.constant.is_zero()) push(w.substr(0, i) + w.substr(i + 2), k * br.constant);
  }
  return UEAElement::from_normal_terms(ctx, done.finish());
}

// ---------------------------------------------------------------------------
// Ideals, projections, Harish-Chandra images.

enum class IdealSide { Left, Right };

/// First monomial (in the ideal order) that is not visibly in I(n) (left)
/// or J(n) (right); nullopt means membership.
inline std::optional<std::string> ideal_violation(const UEAElement& a, const MultiPoly& c, IdealSide side = IdealSide::Left) {
  if (!a.context()) return std::nullopt;
  const AlgebraSpec& spec = a.context()->spec();
  auto ctx = Uea::get(spec, side == IdealSide::Left ? MonomialOrder::ideal(c) : MonomialOrder::right_ideal(c));
  UEAElement x = reexpress(a, ctx);
  const LetterClass edge = side == IdealSide::Left ? LetterClass::Col : LetterClass::Row;
  for (const auto& [w, k] : x.terms()) {
    bool hit = false;
    for (char ch : w) {
      auto cls = ctx->letter(static_cast<unsigned char>(ch)).cls;
      if (cls == edge || cls == LetterClass::Shifted) {
        hit = true;
        break;
      }
    }
    if (!hit) return (k.is_constant() ? k.to_string() : "(" + k.to_string() + ")") + (w.empty() ? "" : "*" + ctx->word_to_string(w));
  }
  return std::nullopt;
}

inline bool ideal_membership(const UEAElement& a, const MultiPoly& c, IdealSide side = IdealSide::Left) {
  return !ideal_violation(a, c, side);
}

/// E_nn (gl) or F_nn for the top rank of a's algebra.
inline UEAElement top_cartan(const UeaPtr& ctx) {
  int n = ctx->spec().n;
  return UEAElement::generator(ctx, n, n);
}

inline bool in_zero_weight_top(const UEAElement& a) {
  if (!a.context()) return true;
  return commutator(a, top_cartan(a.context())).is_zero();
}

/// pi_{n,c}: A(n)^0 -> A(n-1)^0. The result lives in the HC context of rank n-1.
inline UEAElement pi_projection(const UEAElement& a, const MultiPoly& c) {
  const UeaPtr& src = a.context();
  if (!src) throw std::invalid_argument("pi_projection: unbound element");
  const AlgebraSpec spec = src->spec();
  if (spec.n < 2) throw std::invalid_argument("pi_projection: rank must be at least 2");
  if (!in_zero_weight_top(a)) throw std::domain_error("pi_projection: element does not commute with the top Cartan generator");
  auto ictx = Uea::get(spec, MonomialOrder::ideal(c));
  UEAElement x = reexpress(a, ictx);
  Combo kept;
  for (const auto& [w, k] : x.terms()) {
    bool plain = std::all_of(w.begin(), w.end(), [&](char ch) {
      return ictx->letter(static_cast<unsigned char>(ch)).cls == LetterClass::Plain;
    });
    if (plain) kept.emplace_back(w, k);
  }
  UEAElement inner = UEAElement::from_normal_terms(ictx, std::move(kept));
  return reexpress(inner, Uea::get(spec.with_rank(spec.n - 1), MonomialOrder::hc()));
}

/// Cartan elements E_kk (gl) or F_{-k,-k}.
inline std::vector<UEAElement> cartan_generators(const UeaPtr& ctx) {
  std::vector<UEAElement> r;
  for (int k = 1; k <= ctx->spec().n; ++k)
    r.push_back(ctx->spec().is_gl() ? UEAElement::generator(ctx, k, k) : UEAElement::generator(ctx, -k, -k));
  return r;
}

inline bool is_weight_zero(const UEAElement& a) {
  if (!a.context()) return true;
  for (const auto& h : cartan_generators(a.context()))
    if (!commutator(a, h).is_zero()) return false;
  return true;
}

/// Harish-Chandra image: E_kk -> lambda_k (gl), F_{-k,-k} -> lambda_{-k}.
inline MultiPoly hc_omega(const UEAElement& a) {
  if (!a.context()) return {};
  if (!is_weight_zero(a)) throw std::domain_error("hc_omega: element has nonzero weight");
  const AlgebraSpec& spec = a.context()->spec();
  auto ctx = Uea::get(spec, MonomialOrder::hc());
  UEAElement x = reexpress(a, ctx);
  std::vector<Var> var_of(static_cast<std::size_t>(ctx->letter_count()));
  std::vector<bool> cartan(static_cast<std::size_t>(ctx->letter_count()), false);
  for (int id = 0; id < ctx->letter_count(); ++id) {
    const Letter& l = ctx->letter(static_cast<unsigned char>(id));
    if (ctx->algebra().tri_class(l.basis) != TriClass::Cartan) continue;
    cartan[static_cast<std::size_t>(id)] = true;
    var_of[static_cast<std::size_t>(id)] = Var::lambda(ctx->algebra().element(l.basis).i);
  }
  MultiPoly r;
  for (const auto& [w, k] : x.terms()) {
    MultiPoly m(1);
    bool keep = true;
    for (char ch : w) {
      auto id = static_cast<std::size_t>(static_cast<unsigned char>(ch));
      if (!cartan[id]) {
        keep = false;
        break;
      }
      m = m * MultiPoly::var(var_of[id]);
    }
    if (keep) r += m * k;
  }
  return r;
}

/// Eigenvalue of a weight-zero element on the highest vector of weight lambda.
inline MultiPoly highest_weight_eigenvalue(const UEAElement& a, const std::map<Var, MultiPoly>& weight) {
  return hc_omega(a).substitute(weight);
}

/// The same eigenvalue read off the order lower < upper < cartan: raising
/// letters kill the highest vector before any lowering letter acts, so only
/// pure Cartan words contribute.
inline MultiPoly verma_eigenvalue(const UEAElement& a, const std::map<Var, MultiPoly>& weight) {
  if (!a.context()) return {};
  if (!is_weight_zero(a)) throw std::domain_error("verma_eigenvalue: element has nonzero weight");
  auto ctx = Uea::get(a.context()->spec(), MonomialOrder::verma());
  UEAElement x = reexpress(a, ctx);
  MultiPoly r;
  for (const auto& [w, k] : x.terms()) {
    MultiPoly m = k;
    for (char ch : w) {
      const Letter& l = ctx->letter(static_cast<unsigned char>(ch));
      if (ctx->algebra().tri_class(l.basis) != TriClass::Cartan) {
        m = MultiPoly();
        break;
      }
      m = m * MultiPoly::var(Var::lambda(ctx->algebra().element(l.basis).i));
    }
    r += m;
  }
  return r.substitute(weight);
}

/// a v_lambda in the Verma module with lambda symbolic, as a combination of
/// lowering words: raising letters kill v_lambda, Cartan letters act by lambda.
inline UEAElement verma_vector(const UEAElement& a) {
  if (!a.context()) return a;
  auto ctx = Uea::get(a.context()->spec(), MonomialOrder::verma());
  UEAElement x = reexpress(a, ctx);
  Combo kept;
  for (const auto& [w, k] : x.terms()) {
    Word low;
    MultiPoly m = k;
    for (char ch : w) {
      const Letter& l = ctx->letter(static_cast<unsigned char>(ch));
      const TriClass tc = ctx->algebra().tri_class(l.basis);
      if (tc == TriClass::Upper) {
        m = MultiPoly();
        break;
      }
      if (tc == TriClass::Cartan) m = m * MultiPoly::var(Var::lambda(ctx->algebra().element(l.basis).i));
      else low.push_back(ch);
    }
    if (!m.is_zero()) kept.emplace_back(std::move(low), std::move(m));
  }
  return UEAElement::from_normal_terms(ctx, std::move(kept));
}

/// Zero iff a kills v_lambda and every y v_lambda with y a lowering generator;
/// the vectors are kept apart by powers of t.
inline UEAElement verma_module_reduce(const UEAElement& a) {
  if (!a.context()) return a;
  const UeaPtr& src = a.context();
  UEAElement r = verma_vector(a);
  unsigned k = 0;
  const auto& alg = src->algebra();
  for (int b = 0; b < static_cast<int>(alg.basis().size()); ++b) {
    if (alg.tri_class(b) != TriClass::Lower) continue;
    const auto& e = alg.element(b);
    const MultiPoly tk = MultiPoly::var(Var::t()).pow(++k);
    r = r + verma_vector(a * UEAElement::generator(src, e.i, e.j)).map_coefficients([&](const MultiPoly& p) { return p * tk; });
  }
  return r;
}

/// Matrix of generators E = (E_ij) or F = (F_ij) over the full index set.
inline std::vector<std::vector<UEAElement>> generator_matrix(const UeaPtr& ctx) {
  auto idx = ctx->spec().index_set();
  std::vector<std::vector<UEAElement>> m;
  for (int i : idx) {
    m.emplace_back();
    for (int j : idx) m.back().push_back(UEAElement::generator(ctx, i, j));
  }
  return m;
}

/// Entries of F^M (noncommutative matrix power) for M = 0..K, with
/// F^0 the identity; result[M][a][b] uses positions in the index set.
inline std::vector<std::vector<std::vector<UEAElement>>> generator_matrix_powers(const UeaPtr& ctx, int K) {
  auto F = generator_matrix(ctx);
  const std::size_t N = F.size();
  std::vector<std::vector<std::vector<UEAElement>>> P;
  std::vector<std::vector<UEAElement>> id(N, std::vector<UEAElement>(N, UEAElement(ctx)));
  for (std::size_t a = 0; a < N; ++a) id[a][a] = UEAElement::scalar(ctx, MultiPoly(1));
  P.push_back(id);
  for (int M = 1; M <= K; ++M) {
    const auto& prev = P.back();
    std::vector<std::vector<UEAElement>> next(N, std::vector<UEAElement>(N, UEAElement(ctx)));
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        ElementAccumulator acc(ctx);
        for (std::size_t k = 0; k < N; ++k) {
          if (prev[a][k].is_zero() || F[k][b].is_zero()) continue;
          acc.add(prev[a][k] * F[k][b]);
        }
        next[a][b] = acc.finish();
      }
    P.push_back(std::move(next));
  }
  return P;
}

/// Gelfand invariant tr(F^M) = sum F_{i1 i2} F_{i2 i3} ... F_{iM i1}.
inline UEAElement gelfand_invariant(const UeaPtr& ctx, int M) {
  if (M < 1) throw std::invalid_argument("gelfand_invariant: M >= 1");
  auto F = generator_matrix(ctx);
  const std::size_t N = F.size();
  std::vector<std::vector<UEAElement>> row = F;
  for (int step = 1; step < M; ++step) {
    std::vector<std::vector<UEAElement>> next(N, std::vector<UEAElement>(N, UEAElement(ctx)));
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        ElementAccumulator acc(ctx);
        for (std::size_t k = 0; k < N; ++k)
          if (!row[a][k].is_zero() && !F[k][b].is_zero()) acc.add(row[a][k] * F[k][b]);
        next[a][b] = acc.finish();
      }
    row = std::move(next);
  }
  ElementAccumulator tr(ctx);
  for (std::size_t a = 0; a < N; ++a) tr.add(row[a][a]);
  return tr.finish();
}

/// Canonical basis elements of g_m(n): all indices with m+1 <= |i|, |j| <= n.
inline std::vector<GenIndex> centralized_subalgebra_basis(const LieAlgebra& g, int m) {
  std::vector<GenIndex> r;
  for (const auto& e : g.basis()) {
    int ai = e.i < 0 ? -e.i : e.i, aj = e.j < 0 ? -e.j : e.j;
    if (ai >= m + 1 && aj >= m + 1) r.push_back(e);
  }
  return r;
}

/// First generator of g_m(n) that fails to commute with a, if any.
inline std::optional<GenIndex> centralizer_violation(const UEAElement& a, int m) {
  if (!a.context()) return std::nullopt;
  const UeaPtr& ctx = a.context();
  for (const auto& e : centralized_subalgebra_basis(ctx->algebra(), m))
    if (!commutator(a, UEAElement::generator(ctx, e.i, e.j)).is_zero()) return e;
  return std::nullopt;
}

inline bool centralizer_check(const UEAElement& a, int m) { return !centralizer_violation(a, m); }

/// Leading homogeneous component as a commutative polynomial in x[i,j]
/// (canonical labels).
inline MultiPoly top_symbol(const UEAElement& a) {
  if (a.is_zero()) return {};
  const Uea& ctx = *a.context();
  std::size_t d = a.degree();
  MultiPoly r;
  for (const auto& [w, k] : a.terms()) {
    if (w.size() != d) continue;
    MultiPoly m = k;
    for (char ch : w) {
      const Letter& l = ctx.letter(static_cast<unsigned char>(ch));
      const GenIndex& e = ctx.algebra().element(l.basis);
      m = m * (MultiPoly::var(Var::x(e.i, e.j)) * l.scale);
    }
    r += m;
  }
  return r;
}

}  // namespace twy
