#include "qhecke/rings.hpp"

#include <algorithm>
#include <cctype>

namespace qhecke {
namespace detail {
namespace {

const BigInt kZero{};

std::string power_text(std::string_view var, long long e) {
  std::string s(var);
  s += '^';
  s += std::to_string(e);
  return s;
}

struct Scanner {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
  BigInt number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected a number in: " + std::string(text));
    return BigInt(std::string(text.substr(start, pos - start)));
  }
  long long integer() {
    skip_ws();
    bool neg = consume('-');
    BigInt n = number();
    if (neg) n = -n;
    return n.convert_to<long long>();
  }
};

}  // namespace

std::string render_terms(const std::vector<std::pair<long long, BigInt>>& terms,
                         std::string_view var) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
    } else if (mag == 1) {
      out += power_text(var, e);
    } else {
      out += mag.str();
      out += '*';
      out += power_text(var, e);
    }
  }
  return out;
}

std::vector<std::pair<long long, BigInt>> parse_terms(std::string_view text,
                                                      std::string_view var) {
  std::vector<std::pair<long long, BigInt>> terms;
  Scanner sc{text};
  bool neg = sc.consume('-');
  while (true) {
    BigInt mag(1);
    long long e = 0;
    bool have_var = false;
    if (sc.peek_digit()) {
      mag = sc.number();
      if (sc.consume('*')) {
        if (!sc.consume_word(var))
          throw std::invalid_argument("expected variable in: " + std::string(text));
        have_var = true;
      }
    } else if (sc.consume_word(var)) {
      have_var = true;
    } else {
      throw std::invalid_argument("malformed term in: " + std::string(text));
    }
    if (have_var) e = sc.consume('^') ? sc.integer() : 1;
    terms.emplace_back(e, neg ? BigInt(-mag) : mag);
    if (sc.done()) break;
    if (sc.consume('+')) neg = false;
    else if (sc.consume('-')) neg = true;
    else throw std::invalid_argument("expected + or - in: " + std::string(text));
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return terms;
}

std::string render_linear(const BigInt& c0, const BigInt& c1, std::string_view gen) {
  auto gen_part = [&](const BigInt& mag) {
    return mag == 1 ? std::string(gen) : mag.str() + "*" + std::string(gen);
  };
  if (c1.is_zero()) return c0.str();
  bool neg = c1 < 0;
  BigInt mag = neg ? BigInt(-c1) : c1;
  if (c0.is_zero()) return (neg ? "-" : "") + gen_part(mag);
  return c0.str() + (neg ? " - " : " + ") + gen_part(mag);
}

std::pair<BigInt, BigInt> parse_linear(std::string_view text, std::string_view gen) {
  BigInt c0, c1;
  Scanner sc{text};
  bool neg = sc.consume('-');
  bool any = false;
  while (!sc.done()) {
    BigInt mag(1);
    bool have_gen = false;
    if (sc.peek_digit()) {
      mag = sc.number();
      if (sc.consume('*')) {
        if (!sc.consume_word(gen))
          throw std::invalid_argument("expected generator in: " + std::string(text));
        have_gen = true;
      }
    } else if (sc.consume_word(gen)) {
      have_gen = true;
    } else {
      throw std::invalid_argument("malformed element: " + std::string(text));
    }
    (have_gen ? c1 : c0) += neg ? BigInt(-mag) : mag;
    any = true;
    if (sc.done()) break;
    if (sc.consume('+')) neg = false;
    else if (sc.consume('-')) neg = true;
    else throw std::invalid_argument("expected + or - in: " + std::string(text));
  }
  if (!any) throw std::invalid_argument("empty element text");
  return {c0, c1};
}

}  // namespace detail

ZElem ZElem::parse(std::string_view text) {
  auto terms = detail::parse_terms(text, "x");
  BigInt v;
  for (const auto& [e, c] : terms) {
    if (e != 0) throw std::invalid_argument("integer literal cannot carry a variable");
    v += c;
  }
  return ZElem(v);
}

LaurentA LaurentA::monomial(BigInt c, long long e) {
  LaurentA r;
  if (!c.is_zero()) {
    r.off_ = e;
    r.c_.push_back(std::move(c));
  }
  return r;
}

long long LaurentA::lo_exp() const {
  if (c_.empty()) throw std::logic_error("lo_exp of zero Laurent element");
  return off_;
}

long long LaurentA::hi_exp() const {
  if (c_.empty()) throw std::logic_error("hi_exp of zero Laurent element");
  return off_ + static_cast<long long>(c_.size()) - 1;
}

const BigInt& LaurentA::at(long long e) const {
  if (c_.empty() || e < off_ || e >= off_ + static_cast<long long>(c_.size()))
    return detail::kZero;
  return c_[static_cast<size_t>(e - off_)];
}

void LaurentA::normalize() {
  size_t b = 0;
  size_t e = c_.size();
  while (b < e && c_[b].is_zero()) ++b;
  while (e > b && c_[e - 1].is_zero()) --e;
  if (b == e) {
    c_.clear();
    off_ = 0;
    return;
  }
  if (b > 0 || e < c_.size()) {
    std::vector<BigInt> t(c_.begin() + static_cast<long>(b), c_.begin() + static_cast<long>(e));
    c_ = std::move(t);
    off_ += static_cast<long long>(b);
  }
}

LaurentA operator+(const LaurentA& x, const LaurentA& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  long long lo = std::min(x.off_, y.off_);
  long long hi = std::max(x.hi_exp(), y.hi_exp());
  LaurentA r;
  r.off_ = lo;
  r.c_.assign(static_cast<size_t>(hi - lo + 1), BigInt());
  for (size_t i = 0; i < x.c_.size(); ++i)
    r.c_[static_cast<size_t>(x.off_ - lo) + i] += x.c_[i];
  for (size_t i = 0; i < y.c_.size(); ++i)
    r.c_[static_cast<size_t>(y.off_ - lo) + i] += y.c_[i];
  r.normalize();
  return r;
}

LaurentA operator-(const LaurentA& x) {
  LaurentA r = x;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentA operator-(const LaurentA& x, const LaurentA& y) { return x + (-y); }

LaurentA operator*(const LaurentA& x, const LaurentA& y) {
  if (x.is_zero() || y.is_zero()) return LaurentA();
  LaurentA r;
  r.off_ = x.off_ + y.off_;
  r.c_.assign(x.c_.size() + y.c_.size() - 1, BigInt());
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j].is_zero()) continue;
      r.c_[i + j] += x.c_[i] * y.c_[j];
    }
  }
  r.normalize();
  return r;
}

LaurentA LaurentA::invert_a() const {
  LaurentA r;
  if (c_.empty()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.off_ = -hi_exp();
  return r;
}

LaurentA LaurentA::negate_a() const {
  LaurentA r = *this;
  for (size_t i = 0; i < r.c_.size(); ++i) {
    long long e = r.off_ + static_cast<long long>(i);
    if (e % 2 != 0) r.c_[i] = -r.c_[i];
  }
  return r;
}

std::optional<LaurentA> LaurentA::try_invert() const {
  if (c_.size() != 1) return std::nullopt;
  if (c_[0] != 1 && c_[0] != -1) return std::nullopt;
  return monomial(c_[0], -off_);
}

std::string LaurentA::str() const {
  std::vector<std::pair<long long, BigInt>> terms;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) terms.emplace_back(off_ + static_cast<long long>(i), c_[i]);
  return detail::render_terms(terms, "a");
}

LaurentA LaurentA::parse(std::string_view text) {
  LaurentA r;
  for (const auto& [e, c] : detail::parse_terms(text, "a")) r = r + monomial(c, e);
  return r;
}

}  // namespace qhecke
