// Walks through vector arithmetic first, then normalizes a term and solves a condition on Psi.

#include <iostream>

#include "logcouple/logcouple.hpp"

int main() {
  using namespace logcouple;

  const LogVector a = parse_vector("[0,0,5,-1]");
  std::cout << "psi(" << a << ") = " << psi(a) << '\n';
  std::cout << "integral([1,1]) = " << integral(parse_vector("[1,1]")) << '\n';
  std::cout << "s(0) = " << succ(LogVector{}) << '\n';

  // x - s(x) is the integral of x, so psi of it is s(x) everywhere on Psi
  const Term t = parse_term("psi(x - s(x))");
  std::cout << "\n" << to_string(t) << " on Psi:\n" << render(term_to_piecewise(t), TextStyle{true});

  const Condition c = parse_condition("s(x) < [1,1,1] | x = [1,1,1,1,1]");
  std::cout << "\n" << to_string(c) << " holds on " << render(solve(c), TextStyle{true}) << '\n';

  const EventualForm f = eventual_form(parse_term("d2(x) + psi(x)"));
  std::cout << "\nfor large x, d2(x) + psi(x) is " << to_string(f) << '\n';
}
