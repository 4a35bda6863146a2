#include "zaremba/oracle.hpp"

#include <atomic>
#include <thread>

namespace zaremba {

OracleReport min_k(const Natural& q, const OracleOptions& opts) {
  if (q < 2) throw InvalidInputError("min_k requires q >= 2");
  if (q > opts.limit)
    throw OracleLimitError("q = " + q.str() + " exceeds the oracle limit " +
                           opts.limit.str());
  OracleReport report;
  report.q = q;
  report.min_k_canonical = q;  // K(1/q) = q, so q is always an upper bound
  report.min_k_best_rep = q;
  for (Natural a = 1; a < q; ++a) {
    if (gcd(a, q) != 1) continue;
    ContinuedFraction w = expand(Rational{a, q});
    Natural k_canonical = partial_quotient_max(w);
    Natural k_alt = partial_quotient_max(alternate_rep(w));
    Natural k_best = k_alt < k_canonical ? k_alt : k_canonical;
    if (k_canonical < report.min_k_canonical) {
      report.min_k_canonical = k_canonical;
      report.minimizers_canonical.clear();
    }
    if (k_canonical == report.min_k_canonical)
      report.minimizers_canonical.push_back(a);
    if (k_best < report.min_k_best_rep) {
      report.min_k_best_rep = k_best;
      report.minimizers_best_rep.clear();
    }
    if (k_best == report.min_k_best_rep) report.minimizers_best_rep.push_back(a);
  }
  return report;
}

std::vector<ScanRow> scan_range(const Natural& lo, const Natural& hi,
                                const OracleOptions& opts) {
  if (lo < 2) throw InvalidInputError("scan_range requires lo >= 2");
  if (hi < lo) throw InvalidInputError("scan_range requires lo <= hi");
  if (hi > opts.limit)
    throw OracleLimitError("hi = " + hi.str() + " exceeds the oracle limit " +
                           opts.limit.str());

  const std::size_t count = Natural(hi - lo + 1).convert_to<std::size_t>();
  std::vector<ScanRow> rows(count);

  auto compute_row = [&](std::size_t idx) {
    ScanRow& row = rows[idx];
    row.q = lo + idx;
    try {
      Factorization f = factorize(row.q, opts.factorize);
      row.rad = radical(f);
      row.min_k_canonical = min_k(row.q, opts).min_k_canonical;
      Certificate cert = construct(row.q, opts.factorize);
      row.constructed_k = cert.achieved_k;
      row.claimed_bound = cert.claimed_bound;
    } catch (const Error& e) {
      row.error = e.what();
    }
  };

  unsigned threads = opts.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) compute_row(i);
    return rows;
  }

  // Rows are written to disjoint slots indexed by q, so the output does not
  // depend on scheduling.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
      compute_row(i);
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return rows;
}

}  // namespace zaremba
