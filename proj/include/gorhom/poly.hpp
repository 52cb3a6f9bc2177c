#pragma once
// Multivariate polynomials over an exact field, ordered by graded reverse
// lexicographic order (x1 > x2 > ... > xn). Terms are kept sorted descending
// with zero coefficients dropped, so equality is representational.
#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gorhom/error.hpp"
#include "gorhom/field.hpp"

namespace gorhom {

using Mono = std::vector<int>;  // exponent vector, one slot per variable

inline int mono_deg(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// true iff a < b in grevlex: lower total degree, or (same degree and the
// rightmost differing exponent is larger)
inline bool grevlex_less(const Mono& a, const Mono& b) {
  int da = mono_deg(a), db = mono_deg(b);
  if (da != db) return da < db;
  for (std::size_t j = a.size(); j-- > 0;)
    if (a[j] != b[j]) return a[j] > b[j];
  return false;
}

// all monomials in n variables of total degree d, listed grevlex-descending
inline std::vector<Mono> monomials_of_degree(int n, int d) {
  std::vector<Mono> out;
  Mono cur(n, 0);
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == n - 1) {
      cur[var] = rem;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, rem - e);
    }
    cur[var] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) { return grevlex_less(b, a); });
  return out;
}

template <class F>
struct Poly {
  using E = typename F::Elem;
  struct Term {
    Mono m;
    E c;
  };
  std::vector<Term> t;  // grevlex-descending, no zero coefficients

  bool is_zero() const { return t.empty(); }
  // homogeneous degree, if any; zero counts as homogeneous of every degree
  std::optional<int> homogeneous_degree() const {
    if (t.empty()) return 0;
    int d = mono_deg(t[0].m);
    for (const Term& x : t)
      if (mono_deg(x.m) != d) return std::nullopt;
    return d;
  }
};

namespace detail {

template <class F>
void poly_normalize(const F& f, Poly<F>& p) {
  std::sort(p.t.begin(), p.t.end(),
            [](const auto& a, const auto& b) { return grevlex_less(b.m, a.m); });
  std::vector<typename Poly<F>::Term> out;
  for (auto& x : p.t) {
    if (!out.empty() && out.back().m == x.m)
      out.back().c = f.add(out.back().c, x.c);
    else
      out.push_back(x);
    if (!out.empty() && f.is_zero(out.back().c)) out.pop_back();
  }
  p.t = std::move(out);
}

}  // namespace detail

template <class F>
Poly<F> poly_zero(const F&) {
  return {};
}

template <class F>
Poly<F> poly_term(const F& f, typename F::Elem c, Mono m) {
  Poly<F> p;
  if (!f.is_zero(c)) p.t.push_back({std::move(m), std::move(c)});
  return p;
}

template <class F>
Poly<F> poly_const(const F& f, typename F::Elem c, int nvars) {
  return poly_term(f, std::move(c), Mono(nvars, 0));
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r = a;
  r.t.insert(r.t.end(), b.t.begin(), b.t.end());
  detail::poly_normalize(f, r);
  return r;
}

template <class F>
Poly<F> poly_neg(const F& f, const Poly<F>& a) {
  Poly<F> r = a;
  for (auto& x : r.t) x.c = f.neg(x.c);
  return r;
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return poly_add(f, a, poly_neg(f, b));
}

template <class F>
Poly<F> poly_scale(const F& f, const typename F::Elem& c, const Poly<F>& a) {
  if (f.is_zero(c)) return {};
  Poly<F> r = a;
  for (auto& x : r.t) x.c = f.mul(x.c, c);
  return r;
}

template <class F>
Poly<F> poly_mul_mono(const F&, const Poly<F>& a, const Mono& m) {
  Poly<F> r = a;  // multiplying by a monomial preserves grevlex order
  for (auto& x : r.t) x.m = mono_mul(x.m, m);
  return r;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  for (const auto& x : a.t)
    for (const auto& y : b.t) r.t.push_back({mono_mul(x.m, y.m), f.mul(x.c, y.c)});
  detail::poly_normalize(f, r);
  return r;
}

// set variable v to zero and remove its slot from every exponent vector
template <class F>
Poly<F> poly_set_var_zero_and_drop(const F&, const Poly<F>& a, int v) {
  Poly<F> r;
  for (const auto& x : a.t) {
    if (x.m[v] > 0) continue;
    Mono m;
    m.reserve(x.m.size() - 1);
    for (std::size_t j = 0; j < x.m.size(); ++j)
      if (static_cast<int>(j) != v) m.push_back(x.m[j]);
    r.t.push_back({std::move(m), x.c});
  }
  // removing a shared zero slot changes neither degrees nor the rightmost
  // differing position, so the term order survives
  return r;
}

template <class F>
std::string poly_str(const F& f, const Poly<F>& p, const std::vector<std::string>& vars) {
  if (p.t.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.t.size(); ++k) {
    const auto& term = p.t[k];
    std::string c = f.str(term.c);
    bool negative = !c.empty() && c[0] == '-';
    if (k == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (negative) c = c.substr(1);
    std::string mono;
    for (std::size_t v = 0; v < term.m.size(); ++v) {
      if (term.m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[v];
      if (term.m[v] > 1) mono += "^" + std::to_string(term.m[v]);
    }
    if (mono.empty())
      out += c;
    else if (c == "1")
      out += mono;
    else
      out += c + "*" + mono;
  }
  return out;
}

// Recursive-descent parser for polynomial expressions.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ['^' exponent]
//   primary:= NUMBER | IDENT | '(' expr ')'
//   exponent := ['-'] INTEGER | IDENT
//
// NUMBER is an integer or a rational literal like 7/3 (no spaces around /).
// IDENT is either a declared variable, a named scalar (typically the
// deformation parameter), or a bound integer symbol; bound integers are only
// meaningful as exponents. Variables cannot carry negative exponents; named
// scalars can, through the field inverse.
template <class F>
struct PolyParser {
  using E = typename F::Elem;
  F fld;
  std::vector<std::string> vars;
  std::map<std::string, E> scalars;
  std::map<std::string, long long> bound_ints;

  PolyParser(F f, std::vector<std::string> variables) : fld(f), vars(std::move(variables)) {}

  Poly<F> parse(const std::string& src) const {
    Cursor cur{src, 0};
    Poly<F> p = parse_expr(cur);
    skip_ws(cur);
    if (cur.pos != src.size()) throw ParseError("unexpected trailing input", cur.pos);
    return p;
  }

 private:
  struct Cursor {
    const std::string& s;
    std::size_t pos;
  };

  static void skip_ws(Cursor& c) {
    while (c.pos < c.s.size() && (c.s[c.pos] == ' ' || c.s[c.pos] == '\t')) ++c.pos;
  }
  static bool peek(Cursor& c, char ch) {
    skip_ws(c);
    return c.pos < c.s.size() && c.s[c.pos] == ch;
  }
  static bool eat(Cursor& c, char ch) {
    if (!peek(c, ch)) return false;
    ++c.pos;
    return true;
  }

  static std::string lex_ident(Cursor& c) {
    skip_ws(c);
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
      ++c.pos;
    return c.s.substr(start, c.pos - start);
  }

  static std::string lex_number(Cursor& c) {
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
      std::size_t slash = c.pos;
      ++c.pos;
      if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        throw ParseError("expected digits after '/'", slash + 1);
      while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    }
    return c.s.substr(start, c.pos - start);
  }

  long long parse_exponent(Cursor& c) const {
    skip_ws(c);
    bool negative = eat(c, '-');
    skip_ws(c);
    if (c.pos >= c.s.size()) throw ParseError("expected exponent", c.pos);
    char ch = c.s[c.pos];
    long long v;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = c.pos;
      std::string num = lex_number(c);
      if (num.find('/') != std::string::npos) throw ParseError("exponent must be an integer", start);
      v = std::stoll(num);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = c.pos;
      std::string id = lex_ident(c);
      auto it = bound_ints.find(id);
      if (it == bound_ints.end())
        throw ParseError("unbound exponent symbol '" + id + "'", start);
      v = it->second;
    } else {
      throw ParseError("expected exponent", c.pos);
    }
    return negative ? -v : v;
  }

  Poly<F> parse_primary(Cursor& c) const {
    skip_ws(c);
    if (c.pos >= c.s.size()) throw ParseError("unexpected end of expression", c.pos);
    char ch = c.s[c.pos];
    if (ch == '(') {
      ++c.pos;
      Poly<F> p = parse_expr(c);
      if (!eat(c, ')')) throw ParseError("expected ')'", c.pos);
      return apply_power(c, p);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = lex_number(c);
      E v = fld.from_string(num);
      return apply_scalar_power(c, v);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = c.pos;
      std::string id = lex_ident(c);
      for (std::size_t vdx = 0; vdx < vars.size(); ++vdx) {
        if (vars[vdx] == id) {
          long long e = 1;
          if (eat(c, '^')) e = parse_exponent(c);
          if (e < 0) throw ParseError("variable '" + id + "' cannot have a negative exponent", start);
          Mono m(vars.size(), 0);
          m[vdx] = static_cast<int>(e);
          return poly_term(fld, fld.one(), m);
        }
      }
      auto sc = scalars.find(id);
      if (sc != scalars.end()) return apply_scalar_power(c, sc->second);
      throw ParseError("unknown identifier '" + id + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", c.pos);
  }

  Poly<F> apply_scalar_power(Cursor& c, const E& v) const {
    E r = v;
    if (eat(c, '^')) r = fld.pow(v, parse_exponent(c));
    return poly_const(fld, r, static_cast<int>(vars.size()));
  }

  Poly<F> apply_power(Cursor& c, const Poly<F>& p) const {
    if (!peek(c, '^')) return p;
    std::size_t at = c.pos;
    eat(c, '^');
    long long e = parse_exponent(c);
    if (e < 0) throw ParseError("negative exponent on a polynomial", at);
    Poly<F> r = poly_const(fld, fld.one(), static_cast<int>(vars.size()));
    for (long long k = 0; k < e; ++k) r = poly_mul(fld, r, p);
    return r;
  }

  Poly<F> parse_factor(Cursor& c) const { return parse_primary(c); }

  Poly<F> parse_term(Cursor& c) const {
    Poly<F> p = parse_factor(c);
    while (true) {
      skip_ws(c);
      if (c.pos < c.s.size() && c.s[c.pos] == '/')
        throw ParseError("division is only supported inside numeric literals", c.pos);
      if (!eat(c, '*')) break;
      p = poly_mul(fld, p, parse_factor(c));
    }
    return p;
  }

  Poly<F> parse_expr(Cursor& c) const {
    skip_ws(c);
    bool neg = false;
    if (eat(c, '-'))
      neg = true;
    else
      eat(c, '+');
    Poly<F> p = parse_term(c);
    if (neg) p = poly_neg(fld, p);
    while (true) {
      skip_ws(c);
      if (c.pos >= c.s.size()) break;
      if (c.s[c.pos] == '+') {
        ++c.pos;
        p = poly_add(fld, p, parse_term(c));
      } else if (c.s[c.pos] == '-') {
        ++c.pos;
        p = poly_sub(fld, p, parse_term(c));
      } else {
        break;
      }
    }
    return p;
  }
};

}  // namespace gorhom
