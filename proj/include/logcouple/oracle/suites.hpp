#pragma once

// Executable property suites.
//
// A suite is a generator that draws one case as a map of named, printable
// inputs, plus a checker that parses those inputs back and returns an error
// message or nothing. Reported failures therefore replay from their inputs
// alone, without the generator.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "logcouple/compose.hpp"
#include "logcouple/couple.hpp"
#include "logcouple/eventual.hpp"
#include "logcouple/json.hpp"
#include "logcouple/normalize.hpp"
#include "logcouple/oracle/closure.hpp"
#include "logcouple/oracle/generators.hpp"
#include "logcouple/parser.hpp"
#include "logcouple/solve.hpp"

namespace logcouple::oracle {

using Inputs = std::map<std::string, std::string>;
using Outcome = std::optional<std::string>;

struct Failure {
  Inputs inputs;
  std::string message;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0;

  bool ok() const { return failures.empty(); }
};

struct Suite {
  std::string name;
  /// Heavy suites run samples / 10 cases.
  bool heavy = false;
  std::function<Inputs(Generator&, std::size_t)> generate;
  std::function<Outcome(const Inputs&)> check;
  /// Exhaustive suites ignore the sample count.
  std::optional<std::size_t> fixed_cases = std::nullopt;
};

namespace detail {

// Input encoding -----------------------------------------------------------

inline std::string enc(const LogVector& v) { return to_string(v); }
inline std::string enc(const ExtValue& v) { return to_string(v); }
inline std::string enc(const Rational& r) { return to_string(r); }
inline std::string enc(const SFunction& f) { return to_json(f).dump(); }

inline LogVector vec(const Inputs& in, const std::string& key) { return parse_vector(in.at(key)); }
inline ExtValue ext(const Inputs& in, const std::string& key) { return parse_ext_value(in.at(key)); }
inline Rational rat(const Inputs& in, const std::string& key) { return parse_rational(in.at(key)); }
inline long long num(const Inputs& in, const std::string& key) { return std::stoll(in.at(key)); }
inline SFunction sfn(const Inputs& in, const std::string& key) {
  return sfunction_from_json(nlohmann::json::parse(in.at(key)));
}

inline std::string enc_list(const std::vector<LogVector>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : ";") + to_string(v);
  return out;
}

inline std::vector<LogVector> vec_list(const Inputs& in, const std::string& key) {
  std::vector<LogVector> out;
  std::stringstream ss(in.at(key));
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_vector(item));
  return out;
}

/// Σ q_j ψ_{levels_j} as "level:q,level:q".
inline std::string enc_combination(const std::vector<std::pair<Level, Rational>>& terms) {
  std::string out;
  for (const auto& [l, q] : terms) out += (out.empty() ? "" : ",") + std::to_string(l) + ":" + to_string(q);
  return out;
}

inline std::vector<std::pair<Level, Rational>> combination(const Inputs& in, const std::string& key) {
  std::vector<std::pair<Level, Rational>> out;
  std::stringstream ss(in.at(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    out.emplace_back(std::stoull(item.substr(0, colon)), parse_rational(item.substr(colon + 1)));
  }
  return out;
}

inline Outcome fail(const std::string& what) { return what; }

#define LOGCOUPLE_EXPECT(cond, msg) \
  do {                              \
    if (!(cond)) return fail(msg);  \
  } while (false)

// Shared generators -------------------------------------------------------

/// Distinct increasing levels with nonzero coefficients; sum steered to `sum`.
inline std::vector<std::pair<Level, Rational>> psi_combination(Generator& g, std::optional<Rational> sum) {
  const auto n = g.uniform(1, 5);
  std::set<Level> levels;
  while (static_cast<long long>(levels.size()) < n) levels.insert(static_cast<Level>(g.uniform(0, 12)));
  std::vector<std::pair<Level, Rational>> out;
  for (Level l : levels) out.emplace_back(l, g.nonzero_rational());
  if (sum) {
    Rational rest = 0;
    for (std::size_t j = 0; j + 1 < out.size(); ++j) rest += out[j].second;
    if (*sum - rest != 0) {
      out.back().second = *sum - rest;
    } else {
      // the last coefficient would vanish: start over with fresh draws
      return psi_combination(g, sum);
    }
  }
  return out;
}

inline LogVector combine(const std::vector<std::pair<Level, Rational>>& terms) {
  LogVector v;
  for (const auto& [l, q] : terms) v += q * psi_vector(l);
  return v;
}

/// Members of (Ψ-Ψ)^{>0} are exactly the vectors of ones on a block [a+1, b], a >= 0.
inline bool is_psi_difference(const LogVector& v) {
  const auto& e = v.entries();
  if (e.empty() || e.front().first == 0) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].second != 1 || e[i].first != e.front().first + i) return false;
  }
  return true;
}

inline const Condition& psi_difference_formula() {
  static const Condition c = parse_condition("x = -p(psi(x)) + p(s(x + p(psi(x))))");
  return c;
}

inline std::size_t count_succ(const Term& t) {
  std::size_t n = t.kind() == TermKind::S ? 1 : 0;
  for (std::size_t i = 0; i < t.arity(); ++i) n += count_succ(t.child(i));
  return n;
}

inline long long max_constant_index(const Term& t) {
  long long m = -1;
  if (t.kind() == TermKind::Const && !t.value().is_zero()) m = static_cast<long long>(*t.value().max_index());
  for (std::size_t i = 0; i < t.arity(); ++i) m = std::max(m, max_constant_index(t.child(i)));
  return m;
}

inline Inputs table_case(Generator& g) {
  SFunction f = g.chance(5) ? SFunction::constant(g.chance(20) ? ExtValue::infinity() : ExtValue(g.vector()))
                            : g.sfunction();
  return {{"F", enc(f)}, {"max_level", std::to_string(g.config().max_level)}};
}

template <class Compose, class Direct>
Outcome table_check(const Inputs& in, Compose&& compose, Direct&& direct) {
  const SFunction f = sfn(in, "F");
  const PiecewiseSFunction g = compose(f);
  const auto top = static_cast<Level>(num(in, "max_level"));
  for (Level m = 0; m <= top; ++m) {
    const ExtValue want = direct(f(m));
    const ExtValue got = g(m);
    LOGCOUPLE_EXPECT(got == want, "at psi_" + std::to_string(m) + ": table gives " + enc(got) + ", direct " + enc(want));
  }
  return std::nullopt;
}

// The suites ----------------------------------------------------------------

inline std::vector<Suite> make_suites() {
  std::vector<Suite> s;

  s.push_back({"AC1", false,
               [](Generator& g, std::size_t) {
                 LogVector a = g.nonzero_vector();
                 LogVector b = g.nonzero_vector();
                 if (g.chance(30)) b = -a + g.rational() * LogVector::unit(g.index());
                 if (b.is_zero() || (a + b).is_zero()) b = b + LogVector::unit(g.index() + 1);
                 if (b.is_zero() || (a + b).is_zero()) b = LogVector::unit(0);
                 if ((a + b).is_zero()) b = LogVector::unit(1);
                 return Inputs{{"a", enc(a)}, {"b", enc(b)}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a"), b = vec(in, "b");
                 LOGCOUPLE_EXPECT(!a.is_zero() && !b.is_zero() && !(a + b).is_zero(), "premise: a, b, a+b nonzero");
                 LOGCOUPLE_EXPECT(psi(a + b) >= std::min(psi(a), psi(b)), "psi(a+b) < min(psi(a), psi(b))");
                 return std::nullopt;
               }});

  s.push_back({"AC2", false,
               [](Generator& g, std::size_t) {
                 long long r = g.uniform(1, 5);
                 if (g.chance(50)) r = -r;
                 return Inputs{{"a", enc(g.nonzero_vector())}, {"r", std::to_string(r)}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a");
                 const Rational r(num(in, "r"));
                 LOGCOUPLE_EXPECT(!a.is_zero() && r != 0, "premise: a != 0, r != 0");
                 LOGCOUPLE_EXPECT(psi(r * a) == psi(a), "psi(r a) != psi(a)");
                 return std::nullopt;
               }});

  s.push_back({"AC3", false,
               [](Generator& g, std::size_t) {
                 return Inputs{{"a", enc(g.positive_vector())}, {"b", enc(g.nonzero_vector())}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a"), b = vec(in, "b");
                 LOGCOUPLE_EXPECT(a.sign() > 0 && !b.is_zero(), "premise: a > 0, b != 0");
                 LOGCOUPLE_EXPECT(a + psi(a).finite() > psi(b).finite(), "a + psi(a) <= psi(b)");
                 return std::nullopt;
               }});

  s.push_back({"HC", false,
               [](Generator& g, std::size_t) {
                 LogVector a = g.positive_vector();
                 LogVector b = g.chance(40) ? a + abs(g.rational() * LogVector::unit(g.index())) : g.positive_vector();
                 if (b < a) std::swap(a, b);
                 return Inputs{{"a", enc(a)}, {"b", enc(b)}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a"), b = vec(in, "b");
                 LOGCOUPLE_EXPECT(LogVector{} < a && a <= b, "premise: 0 < a <= b");
                 LOGCOUPLE_EXPECT(psi(a) >= psi(b), "psi(a) < psi(b)");
                 return std::nullopt;
               }});

  s.push_back({"T0", false,
               [](Generator& g, std::size_t index) {
                 const Level n = index % 101;
                 // strictly between ψ_n and ψ_{n+1}
                 Rational t(Integer(g.uniform(1, 99)), Integer(100));
                 if (g.chance(30)) t = 0;
                 const LogVector between =
                     psi_vector(n) + t * LogVector::unit(n + 1) + g.rational() * LogVector::unit(n + 2 + g.index());
                 return Inputs{{"n", std::to_string(n)}, {"between", enc(between)}};
               },
               [](const Inputs& in) -> Outcome {
                 const auto n = static_cast<Level>(num(in, "n"));
                 const LogVector between = vec(in, "between");
                 const LogVector pn = psi_vector(n), pn1 = psi_vector(n + 1);
                 LOGCOUPLE_EXPECT(s0() == LogVector::unit(0) && s0() > LogVector{}, "min Psi is not (1) > 0");
                 LOGCOUPLE_EXPECT(pn >= s0(), "psi_n below s0");
                 LOGCOUPLE_EXPECT(succ(pn) == pn1 && pn < pn1, "succ(psi_n) != psi_{n+1}");
                 LOGCOUPLE_EXPECT(pred(ExtValue(pn1)) == ExtValue(pn), "pred(psi_{n+1}) != psi_n");
                 LOGCOUPLE_EXPECT(pred(succ(ExtValue(pn))) == ExtValue(pn), "pred does not invert succ");
                 LOGCOUPLE_EXPECT(pred(ExtValue(s0())).is_infinite(), "pred(s0) finite");
                 if (pn < between && between < pn1) {
                   LOGCOUPLE_EXPECT(!in_psi(between), "a Psi-element strictly between psi_n and psi_{n+1}");
                 }
                 return std::nullopt;
               }});

  s.push_back({"integral-identity", false,
               [](Generator& g, std::size_t) { return Inputs{{"a", enc(g.vector())}}; },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a");
                 const LogVector i = integral(a);
                 LOGCOUPLE_EXPECT(i == a - succ(a), "integral(a) != a - s(a)");
                 LOGCOUPLE_EXPECT(!i.is_zero(), "integral(a) = 0");
                 LOGCOUPLE_EXPECT(prime(i) == a, "prime(integral(a)) != a");
                 if (!a.is_zero()) LOGCOUPLE_EXPECT(integral(prime(a)) == a, "integral(prime(a)) != a");
                 return std::nullopt;
               }});

  s.push_back({"fixed-point", false,
               [](Generator& g, std::size_t) {
                 const LogVector a = g.vector();
                 LogVector b;
                 switch (g.uniform(0, 3)) {
                   case 0:
                   case 1: b = succ(a); break;
                   case 2: b = psi_vector(g.index()); break;
                   default: b = g.vector(); break;
                 }
                 return Inputs{{"alpha", enc(a)}, {"beta", enc(b)}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "alpha"), b = vec(in, "beta");
                 const bool fixed = psi(a - b) == ExtValue(b);
                 const bool is_succ = b == succ(a);
                 LOGCOUPLE_EXPECT(fixed == is_succ, fixed ? "beta = psi(alpha - beta) but beta != s(alpha)"
                                                          : "beta = s(alpha) but beta != psi(alpha - beta)");
                 return std::nullopt;
               }});

  s.push_back({"successor-identity", false,
               [](Generator& g, std::size_t) {
                 const LogVector a = g.vector();
                 const Level n = logcouple::detail::first_non_unit_index(a);
                 // b agrees with ones past n, so s(b) > s(a)
                 LogVector b = psi_vector(n + static_cast<Level>(g.uniform(0, 2)));
                 const Level tail = *b.max_index() + 1;
                 Rational c = g.rational();
                 if (c == 1) c = 2;
                 b += c * LogVector::unit(tail) + g.rational() * LogVector::unit(tail + 1 + g.index());
                 return Inputs{{"a", enc(a)}, {"b", enc(b)}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a"), b = vec(in, "b");
                 LOGCOUPLE_EXPECT(succ(a) < succ(b), "premise: s(a) < s(b)");
                 LOGCOUPLE_EXPECT(psi(b - a) == ExtValue(succ(a)), "psi(b - a) != s(a)");
                 return std::nullopt;
               }});

  s.push_back({"limit-lemma", false,
               [](Generator& g, std::size_t) {
                 const LogVector a = g.vector();
                 const LogVector sa = succ(a), ssa = succ(sa), isa = integral(sa);
                 std::vector<LogVector> mesh;
                 for (int j = 0; j <= 8; ++j) mesh.push_back(ssa - Rational(j, 8) * isa);
                 const Level deep = *ssa.max_index() + 1;
                 for (int j = 0; j < 3; ++j) {
                   const Rational t(Integer(g.uniform(1, 999)), Integer(1000));
                   mesh.push_back(ssa - t * isa + g.rational() * LogVector::unit(deep + g.index()));
                 }
                 return Inputs{{"alpha", enc(a)}, {"gammas", enc_list(mesh)}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "alpha");
                 const LogVector sa = succ(a), ssa = succ(sa);
                 const LogVector hi = ssa - integral(sa);
                 for (const auto& gamma : vec_list(in, "gammas")) {
                   LOGCOUPLE_EXPECT(ssa <= gamma && gamma <= hi, "mesh point " + enc(gamma) + " outside [s^2 a, s^2 a - int s a]");
                   LOGCOUPLE_EXPECT(psi(gamma - a) == ExtValue(sa), "psi(gamma - alpha) != s(alpha) at " + enc(gamma));
                 }
                 return std::nullopt;
               }});

  s.push_back({"s0-uniqueness", false,
               [](Generator& g, std::size_t) {
                 LogVector a = g.nonzero_vector();
                 if (g.chance(20)) a = LogVector::unit(0) + g.rational() * LogVector::unit(1 + g.index());
                 if (g.chance(5)) a = LogVector::unit(0);
                 if (a.is_zero()) a = LogVector::unit(0);
                 return Inputs{{"a", enc(a)}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a");
                 LOGCOUPLE_EXPECT(psi(s0()) == ExtValue(s0()), "psi(s0) != s0");
                 LOGCOUPLE_EXPECT((psi(a) == ExtValue(a)) == (a == s0()), "fixed points of psi other than s0");
                 return std::nullopt;
               }});

  s.push_back({"successor-increasing", false,
               [](Generator& g, std::size_t) { return Inputs{{"a", enc(g.vector())}}; },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a");
                 const int sign = integral(a).sign();
                 if (sign < 0) LOGCOUPLE_EXPECT(a < succ(a), "a in (Gamma^<)' but a >= s(a)");
                 if (sign > 0) LOGCOUPLE_EXPECT(a > succ(a), "a in (Gamma^>)' but a <= s(a)");
                 return std::nullopt;
               }});

  s.push_back({"chi-contraction", false,
               [](Generator& g, std::size_t) { return Inputs{{"a", enc(g.vector())}}; },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a");
                 if (a.sign() >= 0) {
                   try {
                     (void)chi(a);
                   } catch (const non_negative_argument&) {
                     return std::nullopt;
                   }
                   return fail("chi accepted a non-negative argument");
                 }
                 const LogVector c = chi(a);
                 LOGCOUPLE_EXPECT(c.sign() < 0, "chi(a) >= 0");
                 LOGCOUPLE_EXPECT(c == integral(psi(a).finite()), "chi(a) != integral(psi(a))");
                 return std::nullopt;
               }});

  s.push_back({"psi-definition", false,
               [](Generator& g, std::size_t) { return Inputs{{"a", enc(g.vector())}}; },
               [](const Inputs& in) -> Outcome {
                 const ExtValue a = ext(in, "a");
                 static const Term formula = parse_term("p(s(x))");
                 LOGCOUPLE_EXPECT(in_psi(a) == (eval(formula, a) == a), "in_psi disagrees with x = p(s(x))");
                 if (auto level = psi_level(a)) LOGCOUPLE_EXPECT(psi_vector(*level) == a.finite(), "psi_level witness wrong");
                 return std::nullopt;
               }});

  s.push_back({"psi-minus-psi", false,
               [](Generator& g, std::size_t) {
                 const auto a = static_cast<Level>(g.uniform(0, 10));
                 const auto b = a + static_cast<Level>(g.uniform(1, 8));
                 const LogVector member = psi_vector(b) - psi_vector(a);
                 LogVector v = member;
                 switch (g.uniform(0, 7)) {
                   case 0:
                   case 1:
                   case 2: break;
                   case 3: v = member + g.nonzero_rational() * LogVector::unit(g.index()); break;
                   case 4: v = psi_vector(b); break;
                   case 5: v = -member; break;
                   case 6: v = member + psi_vector(b + 3) - psi_vector(b + 1); break;
                   default: v = g.positive_vector(); break;
                 }
                 return Inputs{{"x", enc(v)}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector x = vec(in, "x");
                 const bool member = is_psi_difference(x);
                 const bool formula = eval_condition(psi_difference_formula(), x);
                 LOGCOUPLE_EXPECT(member == formula, member ? "member rejected by the formula" : "non-member accepted by the formula");
                 return std::nullopt;
               }});

  s.push_back({"closure-chain", false,
               [](Generator&, std::size_t index) { return Inputs{{"n_max", std::to_string(1 + index)}}; },
               [](const Inputs& in) -> Outcome {
                 const auto chain = closure_chain(static_cast<std::size_t>(num(in, "n_max")));
                 for (const auto& step : chain.steps) {
                   LOGCOUPLE_EXPECT(step.all(), "relation fails at step " + std::to_string(step.k));
                 }
                 LOGCOUPLE_EXPECT(chain.all(), "chain does not start at e_0");
                 return std::nullopt;
               },
               50});

  s.push_back({"ordered-group", false,
               [](Generator& g, std::size_t) {
                 LogVector b = g.vector();
                 LogVector a = g.chance(20) ? b : g.vector();
                 return Inputs{{"a", enc(a)}, {"b", enc(b)}, {"c", enc(g.vector())}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a"), b = vec(in, "b"), c = vec(in, "c");
                 LOGCOUPLE_EXPECT(a + b == b + a, "addition not commutative");
                 LOGCOUPLE_EXPECT((a + b) + c == a + (b + c), "addition not associative");
                 LOGCOUPLE_EXPECT((a - a).is_zero() && a + LogVector{} == a, "inverse or identity broken");
                 LOGCOUPLE_EXPECT((a < b) == (a + c < b + c), "order not translation invariant");
                 LOGCOUPLE_EXPECT((a < b) + (a == b) + (a > b) == 1, "order not a strict total order");
                 if (a < b && b < c) LOGCOUPLE_EXPECT(a < c, "order not transitive");
                 // lexicographic oracle on dense coordinates
                 auto da = a.dense(), db = b.dense();
                 da.resize(std::max(da.size(), db.size()));
                 db.resize(da.size());
                 int want = 0;
                 for (std::size_t i = 0; i < da.size() && want == 0; ++i) {
                   if (da[i] != db[i]) want = da[i] < db[i] ? -1 : 1;
                 }
                 const auto got = a <=> b;
                 LOGCOUPLE_EXPECT((want < 0) == (got < 0) && (want > 0) == (got > 0), "order is not lexicographic");
                 return std::nullopt;
               }});

  s.push_back({"psi-basis-roundtrip", false,
               [](Generator& g, std::size_t) { return Inputs{{"a", enc(g.vector())}}; },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a");
                 const auto basis = to_psi_basis(a);
                 LOGCOUPLE_EXPECT(from_psi_basis(basis) == a, "from_psi_basis(to_psi_basis(a)) != a");
                 LogVector sum;
                 for (const auto& [n, c] : basis) {
                   LOGCOUPLE_EXPECT(c != 0, "zero coefficient in Psi-basis");
                   sum += c * psi_vector(n);
                 }
                 LOGCOUPLE_EXPECT(sum == a, "Psi-basis coefficients do not sum back to a");
                 return std::nullopt;
               }});

  s.push_back({"arch-class", false,
               [](Generator& g, std::size_t) {
                 return Inputs{{"a", enc(g.nonzero_vector())}, {"b", enc(g.nonzero_vector())}};
               },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = abs(vec(in, "a")), b = abs(vec(in, "b"));
                 const Level la = *a.leading_index(), lb = *b.leading_index();
                 LOGCOUPLE_EXPECT(arch_class(LogVector{}) < arch_class(a), "zero class is not least");
                 if (la == lb) {
                   LOGCOUPLE_EXPECT(arch_class(a) == arch_class(b), "equal leading index, different class");
                   const Rational ca = a.coeff(la), cb = b.coeff(lb);
                   const Rational n = (ca > cb ? ca / cb : cb / ca) + 1;
                   LOGCOUPLE_EXPECT(a <= n * b && b <= n * a, "same class but not mutually bounded");
                 } else {
                   const LogVector& small = la > lb ? a : b;
                   const LogVector& big = la > lb ? b : a;
                   LOGCOUPLE_EXPECT(arch_class(small) < arch_class(big), "class order disagrees with leading index");
                   LOGCOUPLE_EXPECT(Rational(1000000) * small < big, "smaller class is not infinitesimal");
                 }
                 return std::nullopt;
               }});

  s.push_back({"canonical-form", false,
               [](Generator& g, std::size_t) { return Inputs{{"a", enc(g.vector())}, {"b", enc(g.vector())}}; },
               [](const Inputs& in) -> Outcome {
                 const LogVector a = vec(in, "a"), b = vec(in, "b");
                 for (const LogVector& v : {a, a + b, a - b, Rational(3, 7) * a}) {
                   const auto& e = v.entries();
                   for (std::size_t i = 0; i < e.size(); ++i) {
                     LOGCOUPLE_EXPECT(e[i].second != 0, "stored zero coefficient");
                     LOGCOUPLE_EXPECT(denominator_of(e[i].second) > 0, "non-positive denominator");
                     if (i > 0) LOGCOUPLE_EXPECT(e[i - 1].first < e[i].first, "entries not strictly increasing");
                   }
                   LOGCOUPLE_EXPECT(parse_vector(to_string(v)) == v, "print/parse round trip fails for " + enc(v));
                 }
                 LOGCOUPLE_EXPECT(a + b - b == a, "a + b - b != a");
                 return std::nullopt;
               }});

  s.push_back({"coeff-sum-psi", false,
               [](Generator& g, std::size_t) {
                 std::optional<Rational> sum;
                 if (g.chance(50)) sum = Rational(0);
                 return Inputs{{"terms", enc_combination(psi_combination(g, sum))}};
               },
               [](const Inputs& in) -> Outcome {
                 const auto terms = combination(in, "terms");
                 Rational q = 0;
                 for (const auto& t : terms) q += t.second;
                 const LogVector formula = q == 0 ? succ(psi_vector(terms.front().first)) : s0();
                 LOGCOUPLE_EXPECT(psi(combine(terms)) == ExtValue(formula), "psi of the combination is not " + enc(formula));
                 return std::nullopt;
               }});

  s.push_back({"coeff-sum-s", false,
               [](Generator& g, std::size_t) {
                 return Inputs{{"terms", enc_combination(psi_combination(g, Rational(1)))}};
               },
               [](const Inputs& in) -> Outcome {
                 const auto terms = combination(in, "terms");
                 Rational q = 0;
                 for (const auto& t : terms) q += t.second;
                 LOGCOUPLE_EXPECT(q == 1, "premise: coefficients sum to 1");
                 const LogVector a1 = psi_vector(terms.front().first);
                 LOGCOUPLE_EXPECT(succ(combine(terms)) == succ(a1), "s of the combination is not s(alpha_1)");
                 return std::nullopt;
               }});

  s.push_back({"independence", false,
               [](Generator& g, std::size_t) {
                 return Inputs{{"terms", enc_combination(psi_combination(g, std::nullopt))}};
               },
               [](const Inputs& in) -> Outcome {
                 LOGCOUPLE_EXPECT(!combine(combination(in, "terms")).is_zero(), "nontrivial combination vanishes");
                 return std::nullopt;
               }});

  s.push_back({"injectivity", true,
               [](Generator& g, std::size_t) {
                 return Inputs{{"F", enc(g.sfunction())}, {"max_level", "30"}};
               },
               [](const Inputs& in) -> Outcome {
                 const SFunction f = sfn(in, "F");
                 std::set<LogVector> seen;
                 for (Level m = f.domain_start(); m <= static_cast<Level>(num(in, "max_level")); ++m) {
                   LOGCOUPLE_EXPECT(seen.insert(f(m).finite()).second, "F takes a value twice, second time at psi_" + std::to_string(m));
                 }
                 return std::nullopt;
               }});

  s.push_back({"table-psi", true, [](Generator& g, std::size_t) { return table_case(g); },
               [](const Inputs& in) {
                 return table_check(in, [](const SFunction& f) { return compose_psi(f); },
                                    [](const ExtValue& v) { return psi(v); });
               }});

  s.push_back({"table-s", true, [](Generator& g, std::size_t) { return table_case(g); },
               [](const Inputs& in) {
                 return table_check(in, [](const SFunction& f) { return compose_s(f); },
                                    [](const ExtValue& v) { return succ(v); });
               }});

  s.push_back({"table-p", true, [](Generator& g, std::size_t) { return table_case(g); },
               [](const Inputs& in) -> Outcome {
                 if (auto bad = table_check(in, [](const SFunction& f) { return compose_p(f); },
                                            [](const ExtValue& v) { return pred(v); })) {
                   return bad;
                 }
                 const SFunction f = sfn(in, "F");
                 if (f.is_constant()) return std::nullopt;
                 const auto image = image_in_psi(f);
                 const auto top = static_cast<Level>(num(in, "max_level"));
                 for (Level m = f.domain_start(); m <= top; ++m) {
                   const bool hit = in_psi(f(m));
                   bool claimed = std::holds_alternative<AllPsi>(image);
                   if (!claimed) {
                     const auto& pts = std::get<ExceptionalPoints>(image).levels;
                     LOGCOUPLE_EXPECT(pts.size() <= 2, "more than two exceptional points");
                     claimed = std::find(pts.begin(), pts.end(), m) != pts.end();
                   }
                   LOGCOUPLE_EXPECT(hit == claimed, "image_in_psi wrong at psi_" + std::to_string(m));
                 }
                 return std::nullopt;
               }});

  s.push_back({"piecewise-oracle", true,
               [](Generator& g, std::size_t) {
                 return Inputs{{"t", to_string(g.term(6))}, {"max_level", std::to_string(g.config().max_level)}};
               },
               [](const Inputs& in) -> Outcome {
                 const Term t = parse_term(in.at("t"));
                 const PiecewiseSFunction f = term_to_piecewise(t);
                 for (Level m = 0; m <= static_cast<Level>(num(in, "max_level")); ++m) {
                   const ExtValue want = eval(t, ExtValue(psi_vector(m)));
                   LOGCOUPLE_EXPECT(f(m) == want, "at psi_" + std::to_string(m) + ": piecewise " + enc(f(m)) + ", direct " + enc(want));
                 }
                 return std::nullopt;
               }});

  s.push_back({"solve-oracle", true,
               [](Generator& g, std::size_t) {
                 const int atoms = g.chance(50) ? 1 : 3;
                 return Inputs{{"c", to_string(g.condition(atoms, 4))}, {"max_level", std::to_string(g.config().max_level)}};
               },
               [](const Inputs& in) -> Outcome {
                 const Condition c = parse_condition(in.at("c"));
                 const PsiSubset set = solve(c);
                 LOGCOUPLE_EXPECT(set.is_normalized(), "solution is not a normalized PsiSubset");
                 const Level top = std::max<Level>(2 * stability_bound(c), static_cast<Level>(num(in, "max_level")));
                 for (Level m = 0; m <= top; ++m) {
                   const bool want = eval_condition(c, ExtValue(psi_vector(m)));
                   LOGCOUPLE_EXPECT(set.contains(m) == want, "solve disagrees with evaluation at psi_" + std::to_string(m));
                 }
                 return std::nullopt;
               }});

  s.push_back({"eventual-form", true,
               [](Generator& g, std::size_t) {
                 const Term t = g.term(6);
                 const LogVector threshold = eventual_form(t).threshold;
                 std::vector<LogVector> probes;
                 for (long long big : {1000LL, 1000000LL}) {
                   const LogVector v = Rational(big) * LogVector::unit(0);
                   probes.push_back(v > threshold ? v : threshold + v);
                 }
                 probes.push_back(threshold + LogVector::unit(0));
                 probes.push_back(threshold + LogVector::unit(30));
                 while (probes.size() < 10) probes.push_back(threshold + g.positive_vector());
                 return Inputs{{"t", to_string(t)}, {"probes", enc_list(probes)}};
               },
               [](const Inputs& in) -> Outcome {
                 const Term t = parse_term(in.at("t"));
                 const EventualForm form = eventual_form(t);
                 for (const auto& x : vec_list(in, "probes")) {
                   LOGCOUPLE_EXPECT(x > form.threshold, "probe " + enc(x) + " not beyond the threshold");
                   const ExtValue want = eval(t, ExtValue(x));
                   LOGCOUPLE_EXPECT(form(x) == want, "at " + enc(x) + ": form gives " + enc(form(x)) + ", direct " + enc(want));
                 }
                 return std::nullopt;
               }});

  s.push_back({"term-totality", false,
               [](Generator& g, std::size_t) {
                 const ExtValue x = g.chance(10) ? ExtValue::infinity() : ExtValue(g.vector());
                 return Inputs{{"t", to_string(g.term(static_cast<int>(g.uniform(0, 6))))}, {"x", enc(x)}};
               },
               [](const Inputs& in) -> Outcome {
                 const Term t = parse_term(in.at("t"));
                 const ExtValue x = ext(in, "x");
                 for (const Term& u : {Term::psi(t), Term::s(t), Term::p(t)}) {
                   const ExtValue v = eval(u, x);
                   LOGCOUPLE_EXPECT(v.is_infinite() || in_psi(v), to_string(u) + " left Psi u {inf}");
                 }
                 // total: evaluation never throws, whatever the argument
                 (void)eval(t, x);
                 return std::nullopt;
               }});

  s.push_back({"print-parse", false,
               [](Generator& g, std::size_t) {
                 const Term t = g.term(static_cast<int>(g.uniform(0, 6)));
                 const Condition c = g.condition(static_cast<int>(g.uniform(1, 4)), 2);
                 return Inputs{{"t", to_string(t)}, {"t_json", to_json(t).dump()}, {"c", to_string(c)}};
               },
               [](const Inputs& in) -> Outcome {
                 const Term t = parse_term(in.at("t"));
                 LOGCOUPLE_EXPECT(to_json(t).dump() == in.at("t_json"), "parse(print(t)) is a different tree");
                 LOGCOUPLE_EXPECT(to_string(t) == in.at("t"), "print(parse(s)) != s");
                 const Condition c = parse_condition(in.at("c"));
                 LOGCOUPLE_EXPECT(to_string(c) == in.at("c"), "condition print(parse(s)) != s");
                 LOGCOUPLE_EXPECT(parse_condition(to_string(c)) == c, "condition round trip changes the tree");
                 return std::nullopt;
               }});

  s.push_back({"substructure-closure", false,
               [](Generator& g, std::size_t) {
                 return Inputs{{"t", to_string(g.term(static_cast<int>(g.uniform(0, 6))))}, {"x", enc(g.vector())}};
               },
               [](const Inputs& in) -> Outcome {
                 // values stay inside span(e_0..e_N) with N = largest input index + number of s-symbols
                 const Term t = parse_term(in.at("t"));
                 const LogVector x = vec(in, "x");
                 long long n = max_constant_index(t);
                 if (!x.is_zero() && t.has_var()) n = std::max(n, static_cast<long long>(*x.max_index()));
                 const ExtValue v = eval(t, ExtValue(x));
                 if (v.is_finite() && !v.finite().is_zero()) {
                   const auto top = static_cast<long long>(*v.finite().max_index());
                   LOGCOUPLE_EXPECT(top <= n + static_cast<long long>(count_succ(t)), "value escapes the generated span");
                 }
                 return std::nullopt;
               }});

  s.push_back({"non-local-o-minimality", false,
               [](Generator& g, std::size_t index) {
                 const Rational q(Integer(g.uniform(1, 1000)), Integer(g.uniform(1, 1000)));
                 return Inputs{{"n", std::to_string(index % 60)}, {"q", enc(q)}};
               },
               [](const Inputs& in) -> Outcome {
                 const auto n = static_cast<Level>(num(in, "n"));
                 const Rational q = rat(in, "q");
                 const LogVector member = psi_vector(n + 1) - psi_vector(n);
                 LOGCOUPLE_EXPECT(member == LogVector::unit(n + 1) && member > LogVector{}, "psi_{n+1} - psi_n != e_{n+1}");
                 LOGCOUPLE_EXPECT(eval_condition(psi_difference_formula(), member), "e_{n+1} not accepted by the formula");
                 for (Level k = 0; k <= n; ++k) {
                   LOGCOUPLE_EXPECT(member < q * LogVector::unit(k), "e_{n+1} >= q e_k for k = " + std::to_string(k));
                 }
                 if (n == 0) LOGCOUPLE_EXPECT(solve(psi_difference_formula()).empty(), "formula meets Psi");
                 return std::nullopt;
               }});

  return s;
}

#undef LOGCOUPLE_EXPECT

}  // namespace detail

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = detail::make_suites();
  return all;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.push_back(s.name);
  return out;
}

inline const Suite& find_suite(std::string_view name) {
  for (const auto& s : suites()) {
    if (s.name == name) return s;
  }
  throw unknown_suite(std::string(name));
}

inline std::size_t case_count(const Suite& suite, const GenConfig& cfg) {
  if (suite.fixed_cases) return *suite.fixed_cases;
  return suite.heavy ? std::max<std::size_t>(1, cfg.samples / 10) : cfg.samples;
}

/// Runs one case and turns exceptions into failures.
inline Outcome replay_case(std::string_view name, const Inputs& inputs) {
  const Suite& suite = find_suite(name);
  try {
    return suite.check(inputs);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

inline SuiteReport run_suite(std::string_view name, const GenConfig& cfg) {
  const Suite& suite = find_suite(name);
  const auto started = std::chrono::steady_clock::now();
  Generator gen(cfg, stream_seed(cfg.seed, suite.name));
  SuiteReport report;
  report.suite = suite.name;
  report.cases = case_count(suite, cfg);
  for (std::size_t i = 0; i < report.cases; ++i) {
    Inputs inputs;
    Outcome outcome;
    try {
      inputs = suite.generate(gen, i);
      outcome = replay_case(suite.name, inputs);
    } catch (const std::exception& e) {
      outcome = std::string("generator exception: ") + e.what();
    }
    if (outcome) report.failures.push_back(Failure{std::move(inputs), *outcome});
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

/// `name` may be "all".
inline std::vector<SuiteReport> run_suites(std::string_view name, const GenConfig& cfg) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& s : suites()) out.push_back(run_suite(s.name, cfg));
  } else {
    out.push_back(run_suite(name, cfg));
  }
  return out;
}

/// Elapsed time is left out unless asked for, so that reports are reproducible byte for byte.
inline nlohmann::json to_json(const SuiteReport& r, bool timing = false) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back({{"inputs", f.inputs}, {"message", f.message}});
  nlohmann::json out = {{"suite", r.suite}, {"cases", r.cases}, {"failed", r.failures.size()}, {"failures", failures}};
  if (timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

}  // namespace logcouple::oracle
