#include "weilzeta/variety.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace weilzeta {
namespace {

Int reduce_mod(const Int& c, const Int& p) {
  Int r = c % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

MPoly MPoly::constant(std::size_t nvars, const Int& p, const Int& c) {
  MPoly f(nvars, p);
  f.add_term(Exponents(nvars, 0), c);
  return f;
}

MPoly MPoly::variable(std::size_t nvars, const Int& p, std::size_t index) {
  MPoly f(nvars, p);
  Exponents e(nvars, 0);
  e.at(index) = 1;
  f.add_term(e, 1);
  return f;
}

void MPoly::add_term(const Exponents& e, const Int& c) {
  if (e.size() != nvars_) fail(ErrorKind::DimensionMismatch, "exponent vector length");
  Int v = reduce_mod(c, p_);
  auto it = terms_.find(e);
  if (it != terms_.end()) {
    v = reduce_mod(v + it->second, p_);
    if (v == 0)
      terms_.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    terms_.emplace(e, v);
  }
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total_degree();
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    if (s != d) return false;
  }
  return true;
}

unsigned MPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    best = std::max(best, s);
  }
  return best;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_, p_);
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.nvars_, a.p_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(nvars_, p_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

FFElement MPoly::eval(const std::vector<FFElement>& point, const FiniteField& field) const {
  if (point.size() != nvars_) fail(ErrorKind::DimensionMismatch, "point has the wrong number of coordinates");
  FFElement acc = field.zero();
  for (const auto& [e, c] : terms_) {
    FFElement t = field.from_int(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * weilzeta::pow(point[i], Int(e[i]));
    acc = acc + t;
  }
  return acc;
}

std::string to_string(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree terms first reads more naturally.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (has_var) mono << "*";
      mono << "X" << i;
      if (e[i] > 1) mono << "^" << e[i];
      has_var = true;
    }
    if (!has_var)
      os << c.get_str();
    else if (c == 1)
      os << mono.str();
    else
      os << c.get_str() << "*" << mono.str();
  }
  return os.str();
}

VarietySpec make_variety(const Int& p, Ambient ambient, unsigned dim, unsigned vardim, std::vector<MPoly> polys) {
  if (!is_prime(p)) fail(ErrorKind::InvalidPrime, p.get_str() + " is not prime");
  VarietySpec v;
  v.p = p;
  v.ambient = ambient;
  v.dim = dim;
  v.vardim = vardim;
  for (auto& f : polys) {
    if (f.num_vars() != v.num_vars())
      fail(ErrorKind::DimensionMismatch, "polynomial uses " + std::to_string(f.num_vars()) + " variables, ambient has " +
                                             std::to_string(v.num_vars()));
    if (f.prime() != p) fail(ErrorKind::FieldMismatch, "polynomial reduced modulo a different prime");
    if (ambient == Ambient::Projective && !f.is_homogeneous())
      fail(ErrorKind::NotHomogeneous, "projective equation is not homogeneous: " + to_string(f));
  }
  v.polys = std::move(polys);
  return v;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum Kind { Number, Var, Op, End } kind;
  std::string text;
  std::size_t column;  // 1-based
};

class ExprParser {
 public:
  ExprParser(std::string_view src, std::size_t line, std::size_t col0, std::size_t nvars, const Int& p)
      : line_(line), nvars_(nvars), p_(p) {
    tokenize(src, col0);
  }

  MPoly parse() {
    MPoly f = expr();
    if (peek().kind != Token::End) error(peek(), "unexpected token '" + peek().text + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const Token& t, const std::string& msg) const {
    fail(ErrorKind::ParseError, "line " + std::to_string(line_) + ", column " + std::to_string(t.column) + ": " + msg);
  }

  void tokenize(std::string_view s, std::size_t col0) {
    std::size_t i = 0;
    while (i < s.size()) {
      const char ch = s[i];
      const std::size_t col = col0 + i;
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        toks_.push_back({Token::Number, std::string(s.substr(i, j - i)), col});
        i = j;
      } else if (ch == 'X') {
        std::size_t j = i + 1;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i + 1) error({Token::Var, "X", col}, "variable 'X' needs an index");
        toks_.push_back({Token::Var, std::string(s.substr(i, j - i)), col});
        i = j;
      } else if (std::string_view("+-*^()").find(ch) != std::string_view::npos) {
        toks_.push_back({Token::Op, std::string(1, ch), col});
        ++i;
      } else {
        std::size_t j = i + 1;
        while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
        error({Token::Op, "", col}, "unknown token '" + std::string(s.substr(i, j - i)) + "'");
      }
    }
    toks_.push_back({Token::End, "<end of line>", col0 + s.size()});
  }

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool accept_op(char c) {
    if (peek().kind == Token::Op && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept_op('+'))
        acc = acc + term();
      else if (accept_op('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    while (accept_op('*')) acc = acc * unary();
    return acc;
  }

  MPoly unary() {
    if (accept_op('-')) return -unary();
    if (accept_op('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (accept_op('^')) {
      const Token t = take();
      if (t.kind != Token::Number) error(t, "exponent must be a non-negative integer literal");
      const Int e(t.text);
      if (e > 1000) error(t, "exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  MPoly atom() {
    const Token t = take();
    switch (t.kind) {
      case Token::Number:
        return MPoly::constant(nvars_, p_, Int(t.text));
      case Token::Var: {
        const Int idx(t.text.substr(1));
        if (idx >= static_cast<unsigned long>(nvars_))
          error(t, "variable " + t.text + " out of range (ambient has " + std::to_string(nvars_) + " variables)");
        return MPoly::variable(nvars_, p_, idx.get_ui());
      }
      case Token::Op:
        if (t.text == "(") {
          MPoly inner = expr();
          if (!accept_op(')')) error(peek(), "expected ')'");
          return inner;
        }
        error(t, "unexpected '" + t.text + "'");
      case Token::End:
        error(t, "unexpected end of expression");
    }
    error(t, "unreachable");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t nvars_;
  Int p_;
};

[[noreturn]] void header_error(std::size_t line, const std::string& msg) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column 1: " + msg);
}

Int parse_key_int(const std::string& word, const std::string& key, std::size_t line) {
  const std::string prefix = key + "=";
  if (word.rfind(prefix, 0) != 0) header_error(line, "expected '" + prefix + "<integer>', got '" + word + "'");
  const std::string digits = word.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    header_error(line, "expected an integer in '" + word + "'");
  return Int(digits);
}

}  // namespace

VarietySpec parse_variety(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  int stage = 0;  // 0: expect field, 1: expect ambient, 2: polys
  Int p;
  Ambient ambient = Ambient::Projective;
  unsigned dim = 0, vardim = 0;
  std::vector<MPoly> polys;
  std::vector<std::size_t> poly_lines;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream words(raw);
    std::string kw;
    words >> kw;
    if (stage == 0) {
      if (kw != "field") header_error(line_no, "expected 'field p=<prime>'");
      std::string w;
      words >> w;
      p = parse_key_int(w, "p", line_no);
      if (!is_prime(p)) fail(ErrorKind::InvalidPrime, "line " + std::to_string(line_no) + ": " + p.get_str() + " is not prime");
      stage = 1;
    } else if (stage == 1) {
      if (kw != "ambient") header_error(line_no, "expected 'ambient projective|affine dim=<N> vardim=<n>'");
      std::string kind, d, n;
      words >> kind >> d >> n;
      if (kind == "projective")
        ambient = Ambient::Projective;
      else if (kind == "affine")
        ambient = Ambient::Affine;
      else
        header_error(line_no, "ambient must be 'projective' or 'affine', got '" + kind + "'");
      dim = static_cast<unsigned>(parse_key_int(d, "dim", line_no).get_ui());
      vardim = static_cast<unsigned>(parse_key_int(n, "vardim", line_no).get_ui());
      stage = 2;
    } else {
      if (kw != "poly") header_error(line_no, "expected 'poly <expression>', got '" + kw + "'");
      const std::size_t at = raw.find("poly") + 4;
      const std::size_t nvars = ambient == Ambient::Projective ? dim + 1 : dim;
      ExprParser parser(std::string_view(raw).substr(at), line_no, at + 1, nvars, p);
      polys.push_back(parser.parse());
      poly_lines.push_back(line_no);
    }
  }
  if (stage < 2) fail(ErrorKind::ParseError, "line " + std::to_string(line_no + 1) + ", column 1: missing header line");
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (ambient == Ambient::Projective && !polys[i].is_homogeneous())
      fail(ErrorKind::NotHomogeneous, "line " + std::to_string(poly_lines[i]) + ": equation is not homogeneous");
  return make_variety(p, ambient, dim, vardim, std::move(polys));
}

VarietySpec load_variety(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_variety(ss.str());
}

VarietySpec weierstrass_curve(const Int& a, const Int& b, const Int& p) {
  const std::size_t n = 3;
  const MPoly x = MPoly::variable(n, p, 0), y = MPoly::variable(n, p, 1), z = MPoly::variable(n, p, 2);
  const MPoly ca = MPoly::constant(n, p, a), cb = MPoly::constant(n, p, b);
  MPoly f = y.pow(2) * z - x.pow(3) - ca * x * z.pow(2) - cb * z.pow(3);
  return make_variety(p, Ambient::Projective, 2, 1, {f});
}

// ---------------------------------------------------------------------------
// Counting

Int ambient_size(const VarietySpec& v, unsigned m) {
  const Int qm = int_pow(v.p, m);
  if (v.ambient == Ambient::Affine) return int_pow(qm, v.dim);
  return (int_pow(qm, v.dim + 1) - 1) / (qm - 1);
}

namespace {

struct CompiledTerm {
  LogTables::Code coeff;
  std::vector<std::pair<std::size_t, unsigned>> powers;
};

using CompiledPoly = std::vector<CompiledTerm>;

bool vanishes(const std::vector<CompiledPoly>& polys, const std::vector<LogTables::Code>& x, const LogTables& t) {
  for (const auto& f : polys) {
    LogTables::Code acc = t.zero();
    for (const auto& term : f) {
      LogTables::Code v = term.coeff;
      for (const auto& [var, e] : term.powers) v = t.mul(v, t.pow(x[var], e));
      acc = t.add(acc, v);
    }
    if (acc != t.zero()) return false;
  }
  return true;
}

// Iterate coordinates [from, n) over all field codes; count zeros.
Int count_free(const std::vector<CompiledPoly>& polys, std::vector<LogTables::Code>& x, std::size_t from,
               const LogTables& t) {
  const std::uint64_t q = t.order();
  const std::size_t n = x.size();
  for (std::size_t i = from; i < n; ++i) x[i] = 0;
  unsigned long count = 0;
  for (;;) {
    if (vanishes(polys, x, t)) ++count;
    bool done = true;
    for (std::size_t i = n; i > from;) {
      --i;
      if (++x[i] < q) {
        done = false;
        break;
      }
      x[i] = 0;
    }
    if (done) break;
  }
  return Int(count);
}

}  // namespace

Int count_points(const VarietySpec& v, unsigned m, const Int& budget) {
  if (m < 1) fail(ErrorKind::InvalidDegree, "extension degree must be >= 1");
  const Int size = ambient_size(v, m);
  if (size > budget)
    fail(ErrorKind::EnumerationBudgetExceeded,
         "ambient space over F_" + v.p.get_str() + "^" + std::to_string(m) + " has " + size.get_str() +
             " points, budget " + budget.get_str());
  for (const auto& f : v.polys)
    if (v.ambient == Ambient::Projective && !f.is_homogeneous())
      fail(ErrorKind::NotHomogeneous, "projective equation is not homogeneous: " + to_string(f));

  const FiniteField field = FiniteField::make(v.p, m);
  const LogTables tables(field, budget);
  std::vector<CompiledPoly> compiled;
  for (const auto& f : v.polys) {
    CompiledPoly cp;
    for (const auto& [e, c] : f.terms()) {
      CompiledTerm term{tables.from_int(c), {}};
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) term.powers.emplace_back(i, e[i]);
      cp.push_back(std::move(term));
    }
    compiled.push_back(std::move(cp));
  }

  const std::size_t n = v.num_vars();
  std::vector<LogTables::Code> x(n, 0);
  if (v.ambient == Ambient::Affine) return count_free(compiled, x, 0, tables);

  // Normalized representatives: first nonzero coordinate is 1.
  Int total = 0;
  for (std::size_t lead = 0; lead < n; ++lead) {
    for (std::size_t j = 0; j < lead; ++j) x[j] = tables.zero();
    x[lead] = tables.one();
    total += count_free(compiled, x, lead + 1, tables);
  }
  return total;
}

PointCountSeries count_series(const VarietySpec& v, unsigned m_max, const Int& budget) {
  PointCountSeries s;
  s.q = v.p;
  for (unsigned m = 1; m <= m_max; ++m) s.counts.push_back(count_points(v, m, budget));
  return s;
}

Int ec_count(const Int& a, const Int& b, const Int& p) {
  if (p <= 3) fail(ErrorKind::UnsupportedCharacteristic, "characteristic " + p.get_str() + " is not supported");
  if (!is_prime(p)) fail(ErrorKind::InvalidPrime, p.get_str() + " is not prime");
  if (p > kDefaultBudget) fail(ErrorKind::EnumerationBudgetExceeded, "p exceeds the enumeration budget");
  const Int A = reduce_mod(a, p), B = reduce_mod(b, p);
  if (reduce_mod(4 * A * A * A + 27 * B * B, p) == 0)
    fail(ErrorKind::SingularCurve, "4A^3 + 27B^2 = 0 mod " + p.get_str());

  const std::size_t n = p.get_ui();
  std::vector<int> chi(n, 0);
  const Int e = (p - 1) / 2;
  for (std::size_t r = 1; r < n; ++r) {
    Int v;
    mpz_powm(v.get_mpz_t(), Int(static_cast<unsigned long>(r)).get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    chi[r] = (v == 1) ? 1 : -1;
  }
  Int sum = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const Int xv(static_cast<unsigned long>(x));
    const Int rhs = reduce_mod(xv * xv * xv + A * xv + B, p);
    sum += chi[rhs.get_ui()];
  }
  return p + 1 + sum;
}

}  // namespace weilzeta
