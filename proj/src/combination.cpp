#include "p1inv/combination.hpp"

#include <sstream>

#include "p1inv/error.hpp"

namespace p1inv {

GraphCombination::GraphCombination(int n, std::vector<int> degree)
    : n_(n), degree_(std::move(degree)) {
  if (static_cast<int>(degree_.size()) != n_) {
    throw Error(ErrorKind::LengthMismatch, "degree vector length differs from n");
  }
}

GraphCombination GraphCombination::of(const Graph& g, const Rational& coeff) {
  GraphCombination c(g.n(), multidegree(g));
  c.add(g, coeff);
  return c;
}

void GraphCombination::add(const CanonicalGraph& g, const Rational& coeff) {
  if (coeff == 0) return;
  if (g.n() != n_) {
    throw Error(ErrorKind::VertexCountMismatch,
                std::to_string(g.n()) + " vs " + std::to_string(n_));
  }
  if (multidegree(g) != degree_) {
    throw Error(ErrorKind::DegreeMismatch, "graph [" + to_string(g.graph()) +
                                               "] does not have the combination's multidegree");
  }
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void GraphCombination::add(const Graph& g, const Rational& coeff) {
  auto canon = canonicalize(g);
  add(canon.graph, canon.sign == 1 ? Rational(coeff) : Rational(-coeff));
}

void GraphCombination::add(const GraphCombination& other, const Rational& scale) {
  if (other.n_ != n_ || (other.degree_ != degree_ && !other.is_zero())) {
    throw Error(ErrorKind::DegreeMismatch, "combinations of different multidegree");
  }
  if (scale == 0) return;
  for (const auto& [g, c] : other.terms_) add(g, Rational(c * scale));
}

GraphCombination GraphCombination::scaled(const Rational& factor) const {
  GraphCombination out(n_, degree_);
  out.add(*this, factor);
  return out;
}

std::string to_string(const GraphCombination& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, coeff] : c.terms()) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(coeff);
    if (mag != 1) os << to_string(mag) << "*";
    os << "[" << to_string(g.graph()) << "]";
  }
  return os.str();
}

}  // namespace p1inv
