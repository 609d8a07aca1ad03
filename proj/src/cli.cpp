#include "sawtm/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sawtm/analysis.hpp"
#include "sawtm/flm.hpp"
#include "sawtm/oracle.hpp"
#include "sawtm/series_file.hpp"

namespace sawtm {

namespace {

void emit_series(const SeriesTable& table, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    write_series(table, out);
  } else {
    write_series(table, std::filesystem::path(path));
  }
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoul(item));
  }
  if (out.empty()) throw ConfigError("empty list '" + csv + "'");
  return out;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  if (out.empty()) throw ConfigError("empty list '" + csv + "'");
  return out;
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << std::setprecision(15);
  return f;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and series analysis of square-lattice self-avoiding walks", "sawtm"};
  app.require_subcommand(1);

  // enumerate
  auto* en = app.add_subcommand("enumerate", "Count walks with the transfer matrix up to n = 2*wmax+1");
  std::size_t wmax = 0;
  std::string moduli_csv;
  std::size_t workers = 1;
  bool no_prune = false;
  bool residues = false;
  bool verbose = false;
  std::string en_out;
  en->add_option("--wmax", wmax, "Largest rectangle width")->required();
  en->add_option("--moduli", moduli_csv, "Comma-separated coprime moduli (default 2^62,2^62-1)");
  en->add_option("--workers", workers, "Worker threads per sweep")->check(CLI::PositiveNumber);
  en->add_flag("--no-prune", no_prune, "Disable pruning");
  en->add_flag("--residues", residues, "Write per-modulus residues instead of exact integers");
  en->add_flag("-v,--verbose", verbose, "Report per-width statistics on stderr");
  en->add_option("-o,--output", en_out, "Output series file ('-' for stdout)")->required();

  // oracle
  auto* orc = app.add_subcommand("oracle", "Brute-force walk counts (and size sums)");
  std::size_t nmax = 0;
  bool metrics = false;
  std::size_t threads = 1;
  std::string or_out;
  orc->add_option("--nmax", nmax, "Longest walk")->required();
  orc->add_flag("--metrics", metrics, "Also write FILE.r2e, FILE.r2g and FILE.r2m");
  orc->add_option("--threads", threads, "Threads (one per first step)");
  orc->add_option("-o,--output", or_out, "Output series file")->required();

  // box
  auto* bx = app.add_subcommand("box", "Counts of walks spanning one W x L box");
  std::size_t bw = 0, bl = 0, bn = 0;
  bool box_oracle = false;
  bx->add_option("--width", bw, "Box height in cells")->required();
  bx->add_option("--length", bl, "Box length in cells")->required();
  bx->add_option("--nmax", bn, "Longest walk")->required();
  bx->add_flag("--oracle", box_oracle, "Use brute force instead of the transfer matrix");

  // verify
  auto* vf = app.add_subcommand("verify", "Compare two series exactly over their common range");
  std::string va, vb;
  vf->add_option("A", va, "First series")->required();
  vf->add_option("B", vb, "Second series")->required();

  // crt
  auto* cr = app.add_subcommand("crt", "Chinese-remainder reconstruction");
  std::string cr_res;
  std::string cr_mod;
  std::string cr_series, cr_out;
  cr->add_option("--residues", cr_res, "Comma-separated residues");
  cr->add_option("--moduli", cr_mod, "Comma-separated moduli (default 2^62,2^62-1)");
  cr->add_option("--series", cr_series, "Residue series file to convert");
  cr->add_option("-o,--output", cr_out, "Exact series output for --series");

  // analyze
  auto* an = app.add_subcommand("analyze", "Differential-approximant scan");
  std::string an_series, an_orders = "2", an_inhom = "0", an_out;
  std::size_t min_terms = 0;
  double guess = 0.0;
  an->add_option("--series", an_series, "Exact series file")->required();
  an->add_option("--order", an_orders, "Approximant orders K (comma-separated)");
  an->add_option("--inhomog", an_inhom, "Inhomogeneous degrees L (comma-separated, -1 for none)");
  an->add_option("--min-terms", min_terms, "Use only approximants consuming at least this many terms");
  an->add_option("--guess", guess, "Pick the real root nearest this value");
  an->add_option("-o,--output", an_out, "CSV of individual approximants")->required();

  // fit
  auto* ft = app.add_subcommand("fit", "Amplitude fit to the asymptotic form of the coefficients");
  std::string ft_series, ft_model = "count", ft_out, ft_xc = kDefaultCriticalPoint;
  std::size_t fk = 2, fm = 1, fmin = 1;
  ft->add_option("--series", ft_series, "Exact series file")->required();
  ft->add_option("--model", ft_model, "count, r2e, r2g or r2m");
  ft->add_option("--k", fk, "Terms at x_c");
  ft->add_option("--m", fm, "Terms at -x_c");
  ft->add_option("--xc", ft_xc, "Critical point (mu = 1/x_c)");
  ft->add_option("--min-n", fmin, "Smallest coefficient index used");
  ft->add_option("-o,--output", ft_out, "CSV of (inv_n, a0)")->required();

  // ratios
  auto* ra = app.add_subcommand("ratios", "Universal amplitude ratios");
  double ra_a = 0, ra_c = 0, ra_d = 0, ra_e = 0;
  ra->add_option("--A", ra_a)->required();
  ra->add_option("--C", ra_c)->required();
  ra->add_option("--D", ra_d)->required();
  ra->add_option("--E", ra_e)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*en) {
      RunPlan plan;
      plan.wmax = wmax;
      if (!moduli_csv.empty()) plan.moduli = parse_moduli(moduli_csv);
      plan.workers = workers;
      plan.prune = !no_prune;
      const auto start = std::chrono::steady_clock::now();
      if (verbose) {
        plan.on_width = [&](std::size_t w, const SweepStats& s) {
          const double secs =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          err << "width " << w << ": max states " << s.max_states << ", max terms " << s.max_terms
              << ", " << std::fixed << std::setprecision(1) << secs << " s\n";
        };
      }
      SeriesTable table = enumerate(plan);
      if (!residues) table = table.to_exact();
      emit_series(table, en_out, out);
      return 0;
    }
    if (*orc) {
      if (metrics) {
        const MetricSeries m = metric_sums(nmax, threads);
        emit_series(m.count, or_out, out);
        write_series(m.r2e, std::filesystem::path(or_out + ".r2e"));
        write_series(m.r2g, std::filesystem::path(or_out + ".r2g"));
        write_series(m.r2m, std::filesystem::path(or_out + ".r2m"));
      } else {
        emit_series(count_walks(nmax, threads), or_out, out);
      }
      return 0;
    }
    if (*bx) {
      if (bw > bl) throw ConfigError("--width must not exceed --length");
      if (box_oracle) {
        const auto v = box_spanning_counts(bw, bl, bn);
        for (std::size_t n = 0; n < v.size(); ++n) {
          if (v[n] != 0) out << n << '\t' << v[n] << '\n';
        }
      } else {
        SweepOptions opt;
        opt.width = bw;
        opt.max_columns = bl;
        opt.n_max = bn;
        opt.prune = false;
        const CompletionLedger ledger = sweep(opt);
        const auto& poly = ledger.per_column[bl];
        for (std::size_t n = 0; n <= bn; ++n) {
          const BigInt v = crt_reconstruct(poly.residues(n), opt.moduli) * 2;
          if (v != 0) out << n << '\t' << v << '\n';
        }
      }
      return 0;
    }
    if (*vf) {
      const SeriesTable a = read_series(std::filesystem::path(va));
      const SeriesTable b = read_series(std::filesystem::path(vb));
      const auto mismatch = first_mismatch(a, b);
      if (mismatch) {
        out << "mismatch at n = " << mismatch->n << ": " << mismatch->left << " vs " << mismatch->right
            << '\n';
        return 1;
      }
      out << "agree for n = " << std::max(a.first_n, b.first_n) << ".." << std::min(a.last_n(), b.last_n())
          << '\n';
      return 0;
    }
    if (*cr) {
      const std::vector<Modulus> mods = cr_mod.empty() ? default_moduli() : parse_moduli(cr_mod);
      if (!cr_series.empty()) {
        const SeriesTable t = read_series(std::filesystem::path(cr_series));
        emit_series(t.to_exact(), cr_out, out);
        return 0;
      }
      if (cr_res.empty()) throw ConfigError("crt needs --residues or --series");
      std::vector<std::uint64_t> r;
      std::stringstream ss(cr_res);
      std::string item;
      while (std::getline(ss, item, ',')) r.push_back(std::stoull(item));
      out << crt_reconstruct(r, mods) << '\n';
      return 0;
    }
    if (*an) {
      const SeriesTable series = read_series(std::filesystem::path(an_series));
      DAOptions opts;
      if (an->count("--guess")) opts.guess = guess;
      const DAScan scan = da_scan(series, parse_sizes(an_orders), parse_ints(an_inhom), min_terms, opts);
      std::ofstream csv = open_csv(an_out);
      csv << "# series: " << an_series << ", min-terms: " << min_terms << '\n';
      csv << "L,K,last_n,degrees,x_c,exponent\n";
      for (const DAScanRow& r : scan.rows) {
        csv << r.inhomog << ',' << r.order << ',' << r.last_n << ',' << r.degrees << ',' << r.x_c << ','
            << r.exponent << '\n';
      }
      out << std::setprecision(12);
      for (const DASummary& s : scan.summaries) {
        out << "K=" << s.order << " L=" << s.inhomog << ": ";
        if (s.empty()) {
          out << "no approximants\n";
          continue;
        }
        out << "x_c = " << s.x_mean << " +- " << s.x_sd << ", exponent = " << s.exponent_mean << " +- "
            << s.exponent_sd << " (" << s.count << " approximants)\n";
      }
      return 0;
    }
    if (*ft) {
      const SeriesTable series = read_series(std::filesystem::path(ft_series));
      FitOptions opts;
      opts.model = parse_fit_model(ft_model);
      opts.k = fk;
      opts.m = fm;
      opts.x_c = ft_xc;
      opts.min_n = fmin;
      const AmplitudeFit fit = amplitude_fit(series, opts);
      std::ofstream csv = open_csv(ft_out);
      csv << "# model: " << to_string(opts.model) << ", k: " << fk << ", m: " << fm << ", x_c: " << ft_xc
          << '\n';
      csv << "inv_n,a0,ill_conditioned\n";
      for (const FitPoint& p : fit.trajectory) {
        csv << p.inv_n << ',' << p.a0 << ',' << (p.ill_conditioned ? 1 : 0) << '\n';
      }
      out << std::setprecision(12) << "a0 = " << fit.last << " (last), " << fit.extrapolated
          << " (extrapolated)" << (fit.flagged ? " [ill-conditioned windows present]" : "") << '\n';
      return 0;
    }
    if (*ra) {
      const UniversalRatios r = universal_ratios(ra_a, ra_c, ra_d, ra_e);
      out << std::setprecision(10) << "D/C = " << r.d_over_c << "\nE/C = " << r.e_over_c << "\nF = " << r.f
          << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace sawtm
