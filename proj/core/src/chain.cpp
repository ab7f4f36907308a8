#include "cuspcalc/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cuspcalc {

namespace {

void require_admissible(const LinearChain& c, const char* op) {
  if (!c.admissible()) {
    throw std::invalid_argument(std::string(op) + ": chain " + c.to_string() +
                                " is not admissible (non-empty, entries >= 2)");
  }
}

}  // namespace

LinearChain LinearChain::parse(const std::string& s) {
  std::size_t begin = s.find('[');
  std::size_t end = s.rfind(']');
  if (begin == std::string::npos || end == std::string::npos || begin > end) {
    throw std::invalid_argument("chain syntax must be like [2,2,3]: " + s);
  }
  std::vector<Int> weights;
  std::string body = s.substr(begin + 1, end - begin - 1);
  std::stringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char ch) { return std::isspace((unsigned char)ch); }),
              tok.end());
    if (tok.empty()) {
      throw std::invalid_argument("empty entry in chain: " + s);
    }
    try {
      weights.emplace_back(Int(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad chain entry '" + tok + "' in " + s);
    }
  }
  return LinearChain(std::move(weights));
}

bool LinearChain::admissible() const {
  if (weights_.empty()) return false;
  return std::all_of(weights_.begin(), weights_.end(), [](const Int& w) { return w >= 2; });
}

std::string LinearChain::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ",";
    out += weights_[i].str();
  }
  return out + "]";
}

Int discriminant(const LinearChain& c) {
  // d(A) = a_1 d(A-bar) - d(A-bar-bar), d(empty) = 1, d of a deleted
  // extra step is 0.  Run the recursion from the tail.
  Int prev = 0, cur = 1;
  for (auto it = c.weights().rbegin(); it != c.weights().rend(); ++it) {
    Int next = *it * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Rat inductance(const LinearChain& c) {
  require_admissible(c, "inductance");
  return Rat(discriminant(head_removed(c)), discriminant(c));
}

LinearChain inverse_inductance(const Rat& q) {
  if (!(q > 0 && q < 1)) {
    throw std::invalid_argument("inverse_inductance: value must lie in (0,1)");
  }
  // 1/e(A) = a_1 - e(A-bar): peel off the ceiling and recurse.
  std::vector<Int> weights;
  Rat e = q;
  while (e != 0) {
    Rat x = 1 / e;
    Int a = ceil_pos(x);
    weights.push_back(a);
    e = a - x;
  }
  return LinearChain(std::move(weights));
}

LinearChain adjoint(const LinearChain& c) {
  require_admissible(c, "adjoint");
  return inverse_inductance(1 - inductance(transpose(c)));
}

LinearChain star(const LinearChain& a, const LinearChain& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("star: operands must be non-empty");
  }
  std::vector<Int> weights(a.weights().begin(), a.weights().end() - 1);
  weights.push_back(a.weights().back() + b.weights().front() - 1);
  weights.insert(weights.end(), b.weights().begin() + 1, b.weights().end());
  return LinearChain(std::move(weights));
}

LinearChain transpose(const LinearChain& c) {
  std::vector<Int> weights(c.weights().rbegin(), c.weights().rend());
  return LinearChain(std::move(weights));
}

LinearChain head_removed(const LinearChain& c) {
  if (c.empty()) throw std::invalid_argument("head_removed: empty chain");
  return LinearChain(std::vector<Int>(c.weights().begin() + 1, c.weights().end()));
}

LinearChain tail_removed(const LinearChain& c) {
  if (c.empty()) throw std::invalid_argument("tail_removed: empty chain");
  return LinearChain(std::vector<Int>(c.weights().begin(), c.weights().end() - 1));
}

LinearChain tw(std::size_t n) {
  return LinearChain(std::vector<Int>(n, Int(2)));
}

LinearChain appended(const LinearChain& c, const Int& extra) {
  std::vector<Int> weights = c.weights();
  weights.push_back(extra);
  return LinearChain(std::move(weights));
}

}  // namespace cuspcalc
