#include "sawtm/flm.hpp"

#include <string>

namespace sawtm {

namespace {

void add_scaled(TruncatedPolynomial& target, const TruncatedPolynomial& source, std::uint64_t factor,
                std::span<const Modulus> moduli) {
  const std::size_t k = moduli.size();
  for (std::size_t d = 0; d <= target.max_degree(); ++d) {
    for (std::size_t m = 0; m < k; ++m) {
      const std::uint64_t v = moduli[m].mul(source.coeff(d, m), factor % moduli[m].value());
      target.raw()[d * k + m] = moduli[m].add(target.coeff(d, m), v);
    }
  }
  target.refresh_min_degree();
}

}  // namespace

SeriesTable enumerate(const RunPlan& plan) {
  require_coprime(plan.moduli);
  const std::size_t n_max = plan.n_max();
  const std::size_t k = plan.moduli.size();
  TruncatedPolynomial total(n_max, k);
  for (std::size_t w = 0; w <= plan.wmax; ++w) {
    SweepOptions opt;
    opt.width = w;
    opt.max_columns = n_max - w;
    opt.n_max = n_max;
    opt.moduli = plan.moduli;
    opt.prune = plan.prune;
    opt.workers = plan.workers;
    SweepStats stats;
    const CompletionLedger ledger = sweep(opt, &stats);
    for (std::size_t c = w; c < ledger.per_column.size(); ++c) {
      add_scaled(total, ledger.per_column[c], c > w ? 4 : 2, plan.moduli);
    }
    if (plan.on_width) plan.on_width(w, stats);
  }
  for (std::size_t m = 0; m < k; ++m) total.set(0, m, 1);

  SeriesTable table;
  table.header["lattice"] = "square";
  table.header["quantity"] = "count";
  table.header["wmax"] = std::to_string(plan.wmax);
  table.header["nmax"] = std::to_string(n_max);
  table.header["algorithm"] = "transfer-matrix";
  table.header["version"] = kAlgorithmVersion;
  table.moduli = plan.moduli;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto r = total.residues(n);
    table.residues.emplace_back(r.begin(), r.end());
  }
  return table;
}

TruncatedPolynomial box_counts(const RunPlan& plan, std::size_t width, std::size_t length) {
  if (width > length) throw ConfigError("box_counts expects width <= length");
  SweepOptions opt;
  opt.width = width;
  opt.max_columns = length;
  opt.n_max = plan.n_max();
  opt.moduli = plan.moduli;
  opt.prune = false;
  opt.workers = plan.workers;
  const CompletionLedger ledger = sweep(opt);
  TruncatedPolynomial out(plan.n_max(), plan.moduli.size());
  add_scaled(out, ledger.per_column[length], 2, plan.moduli);
  return out;
}

}  // namespace sawtm
