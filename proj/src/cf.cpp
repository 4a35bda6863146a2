#include "zaremba/cf.hpp"

#include <boost/multiprecision/integer.hpp>
#include <algorithm>
#include <limits>

namespace zaremba {

Rational Rational::reduced(Natural n, Natural d) {
  if (d == 0) throw InvalidInputError("zero denominator");
  Natural g = boost::multiprecision::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n <= 0 || n >= d)
    throw InvalidInputError("fraction " + n.str() + "/" + d.str() +
                            " is outside (0, 1)");
  return Rational{std::move(n), std::move(d)};
}

ContinuedFraction expand(const Rational& x) {
  ContinuedFraction w;
  if (x.den <= std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t num = x.num.convert_to<std::uint64_t>();
    std::uint64_t den = x.den.convert_to<std::uint64_t>();
    while (num != 0) {
      w.quotients.emplace_back(den / num);
      std::uint64_t r = den % num;
      den = num;
      num = r;
    }
    return w;
  }
  Natural num = x.num, den = x.den, quot, rem;
  while (num != 0) {
    boost::multiprecision::divide_qr(den, num, quot, rem);
    w.quotients.push_back(quot);
    den = num;
    num = rem;
  }
  return w;
}

Rational evaluate(const ContinuedFraction& w) {
  if (w.quotients.empty()) throw InvalidWordError("empty continued fraction");
  Natural p_prev = 1, p_cur = 0;  // numerator recurrence, seeded for [0; ...]
  Natural q_prev = 0, q_cur = 1;
  for (const Natural& a : w.quotients) {
    if (a == 0)
      throw NotNormalizedError("word contains a zero partial quotient");
    Natural p_next = a * p_cur + p_prev;
    Natural q_next = a * q_cur + q_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
  }
  // Consecutive convergents are coprime, so p_cur/q_cur is already reduced.
  return Rational::reduced(p_cur, q_cur);
}

ContinuedFraction alternate_rep(const ContinuedFraction& w) {
  if (w.quotients.empty()) throw InvalidWordError("empty continued fraction");
  for (const Natural& a : w.quotients)
    if (a == 0) throw NotNormalizedError("word contains a zero partial quotient");
  ContinuedFraction out = w;
  Natural& last = out.quotients.back();
  if (last >= 2) {
    last -= 1;
    out.quotients.emplace_back(1);
  } else {
    if (out.quotients.size() == 1)
      throw InvalidWordError("[1] has value 1, which has no second expansion");
    out.quotients.pop_back();
    out.quotients.back() += 1;
  }
  return out;
}

ContinuedFraction normalize(const ContinuedFraction& w) {
  if (w.quotients.empty()) throw InvalidWordError("empty continued fraction");
  if (w.quotients.front() == 0)
    throw InvalidWordError("leading zero partial quotient");
  if (w.quotients.back() == 0)
    throw InvalidWordError("trailing zero partial quotient");
  ContinuedFraction out = w;
  auto& q = out.quotients;
  for (std::size_t i = 1; i + 1 < q.size();) {
    if (q[i] != 0) {
      ++i;
      continue;
    }
    q[i - 1] += q[i + 1];
    q.erase(q.begin() + static_cast<std::ptrdiff_t>(i),
            q.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    if (i > 1) --i;  // the merged entry may now sit next to another zero
  }
  return out;
}

Natural partial_quotient_max(const ContinuedFraction& w) {
  if (w.quotients.empty()) throw InvalidWordError("empty continued fraction");
  return *std::max_element(w.quotients.begin(), w.quotients.end());
}

Natural continuant(const std::vector<Natural>& entries) {
  Natural q_prev = 0, q_cur = 1;
  for (const Natural& a : entries) {
    Natural q_next = a * q_cur + q_prev;
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
  }
  return q_cur;
}

ContinuedFraction mirror(const ContinuedFraction& w) {
  if (w.quotients.empty()) throw InvalidWordError("empty continued fraction");
  for (const Natural& a : w.quotients)
    if (a == 0) throw NotNormalizedError("word contains a zero partial quotient");
  ContinuedFraction out;
  if (w.quotients.front() == 1) {
    if (w.quotients.size() == 1)
      throw InvalidWordError("[1] has value 1; its complement 0 has no word");
    out.quotients.assign(w.quotients.begin() + 1, w.quotients.end());
    out.quotients.front() += 1;
  } else {
    out.quotients.reserve(w.quotients.size() + 1);
    out.quotients.emplace_back(1);
    out.quotients.push_back(w.quotients.front() - 1);
    out.quotients.insert(out.quotients.end(), w.quotients.begin() + 1,
                         w.quotients.end());
  }
  return out;
}

ContinuedFraction reversed(const ContinuedFraction& w) {
  if (w.quotients.empty()) throw InvalidWordError("empty continued fraction");
  ContinuedFraction out;
  out.quotients.assign(w.quotients.rbegin(), w.quotients.rend());
  return out;
}

bool is_canonical(const ContinuedFraction& w) {
  if (w.quotients.empty()) return false;
  for (const Natural& a : w.quotients)
    if (a == 0) return false;
  return w.quotients.size() == 1 || w.quotients.back() >= 2;
}

}  // namespace zaremba
