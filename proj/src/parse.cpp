#include "qcyc/parse.hpp"

#include <cctype>
#include <limits>

namespace qcyc {

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool done() {
    skip();
    return p_ == s_.size();
  }
  std::size_t pos() const { return p_; }
  bool peek(char c) {
    skip();
    return p_ < s_.size() && s_[p_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++p_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long integer() {
    skip();
    const std::size_t start = p_;
    if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) ++p_;
    const std::size_t digits = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (p_ == digits) {
      p_ = start;
      fail("expected an integer");
    }
    try {
      return std::stol(s_.substr(start, p_ - start));
    } catch (const std::out_of_range&) {
      p_ = start;
      fail("integer out of range");
    }
    return 0;
  }
  // Orbit label: letters, digits and '_' ending in '@'; empty if absent.
  std::string orbit() {
    skip();
    std::size_t q = p_;
    while (q < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[q])) || s_[q] == '_')) ++q;
    if (q > p_ && q < s_.size() && s_[q] == '@') {
      std::string o = s_.substr(p_, q - p_);
      p_ = q + 1;
      return o;
    }
    return {};
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, p_); }

 private:
  const std::string& s_;
  std::size_t p_ = 0;
};

int to_int(Lexer& lx, long v, const char* what) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) lx.fail(std::string(what) + " out of range");
  return static_cast<int>(v);
}

SpectralParam param(Lexer& lx, std::string orbit, int* node) {
  *node = to_int(lx, lx.integer(), "node index");
  if (*node < 1) lx.fail("node index must be positive");
  lx.expect(';');
  const long l = lx.integer();
  int k = 0;
  if (lx.accept(';')) k = to_int(lx, lx.integer(), "eps exponent");
  if (orbit.empty()) orbit = "c";
  return SpectralParam(l, k, std::move(orbit));
}

}  // namespace

Monomial parse_monomial(const std::string& s) {
  Lexer lx(s);
  if (lx.done()) lx.fail("empty monomial");
  if (lx.peek('1')) {
    lx.expect('1');
    if (!lx.done()) lx.fail("unexpected input after '1'");
    return Monomial();
  }
  Monomial m;
  do {
    std::string orbit = lx.orbit();
    lx.expect('Y');
    lx.expect('[');
    int i = 0;
    SpectralParam a = param(lx, std::move(orbit), &i);
    lx.expect(']');
    int e = 1;
    if (lx.accept('^')) {
      const std::size_t at = lx.pos();
      e = to_int(lx, lx.integer(), "exponent");
      if (e == 0) throw ParseError("exponent 0 is not allowed", at);
    }
    m *= Monomial::Y(i, a, e);
  } while (lx.accept('*'));
  if (!lx.done()) lx.fail("unexpected character");
  return m;
}

Fundamental parse_fundamental(const std::string& s) {
  Lexer lx(s);
  std::string orbit = lx.orbit();
  Fundamental f;
  f.a = param(lx, std::move(orbit), &f.i);
  if (!lx.done()) lx.fail("unexpected character");
  return f;
}

}  // namespace qcyc
