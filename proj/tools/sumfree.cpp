// Command-line front end: set-file I/O, JSON reports, exit codes
// 0 = clean, 1 = a checked property failed, 2 = usage or I/O error.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "sumfree/analytic_verify.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/lemma_oracles.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/report.hpp"
#include "sumfree/set_io.hpp"
#include "sumfree/spectrum.hpp"
#include "sumfree/structure.hpp"

namespace {

using namespace sumfree;
using nlohmann::json;

int finish(const Report& report, bool as_json) {
  if (as_json) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << report.command << ": "
              << (report.violations.empty() ? "ok" : "violations found") << '\n';
    for (const auto& [key, value] : report.results.items()) {
      std::cout << "  " << key << " = " << value.dump() << '\n';
    }
    for (const auto& v : report.violations) std::cout << "  violation: " << v << '\n';
  }
  return report.exit_code();
}

json certificate_json(const StructureCertificate& cert) {
  json assertions = json::array();
  for (const auto& a : cert.assertions) {
    json entry{{"name", a.name}, {"holds", a.holds}};
    if (!a.detail.empty()) entry["detail"] = a.detail;
    assertions.push_back(entry);
  }
  json trace = json::array();
  for (const auto& e : cert.trace) trace.push_back(json{{"name", e.name}, {"value", e.value}});
  return json{{"d", cert.d},
              {"n", cert.n},
              {"contained", cert.contained},
              {"branch", branch_name(cert.branch)},
              {"assertions", assertions},
              {"trace", trace},
              {"theorem_scale_failure", cert.theorem_scale_failure}};
}

int cmd_spectrum(const std::string& path, bool as_json) {
  const ResidueSet s = read_set_file(path);
  const Spectrum sp = compute_spectrum(s);

  std::vector<std::pair<double, std::int64_t>> mags;
  for (std::int64_t z = 1; z < sp.p; ++z) {
    mags.emplace_back(std::abs(sp.coeffs[static_cast<std::size_t>(z)]), z);
  }
  std::sort(mags.begin(), mags.end(), [](const auto& a, const auto& b) {
    return a.first > b.first || (a.first == b.first && a.second < b.second);
  });

  Report report;
  report.command = "spectrum";
  report.inputs = {{"setfile", path}};
  json top = json::array();
  for (std::size_t i = 0; i < mags.size() && i < 5; ++i) {
    top.push_back(json{{"z", mags[i].second}, {"magnitude", mags[i].first}});
  }
  report.results = {{"p", sp.p},
                    {"n", sp.n},
                    {"alpha", static_cast<double>(sp.n) / static_cast<double>(sp.p)},
                    {"top_coefficients", top},
                    {"parseval_residual", parseval_residual(sp)},
                    {"cubic_residual", cubic_identity_residual(sp)}};
  return finish(report, as_json);
}

int cmd_check_sumfree(const std::string& path, bool as_json) {
  const ResidueSet s = read_set_file(path);
  Report report;
  report.command = "check-sumfree";
  report.inputs = {{"setfile", path}};
  const bool ok = is_sum_free(s);
  report.results = {{"p", s.modulus_value()}, {"n", s.size()}, {"sum_free", ok}};
  if (!ok) report.violations.push_back("set is not sum-free");
  return finish(report, as_json);
}

int cmd_recover(const std::string& path, bool oracle, bool as_json) {
  const ResidueSet s = read_set_file(path);
  const StructureCertificate cert = recover_structure(s);  // throws on preconditions

  Report report;
  report.command = "recover-structure";
  report.inputs = {{"setfile", path}, {"oracle", oracle}};
  report.results = {{"certificate", certificate_json(cert)}};
  if (oracle) {
    const std::vector<std::int64_t> scan = exhaustive_d_scan(s);
    report.results["oracle_witness_count"] = scan.size();
    const bool agrees = cert.contained
                            ? std::find(scan.begin(), scan.end(), cert.d) != scan.end()
                            : scan.empty();
    report.results["oracle_agrees"] = agrees;
    if (!agrees) report.violations.push_back("pipeline disagrees with the exhaustive scan");
  }
  if (!cert.contained) {
    report.violations.push_back("no dilation witness: containment fails at this size");
  }
  return finish(report, as_json);
}

int cmd_scan_inequalities(double step, bool as_json) {
  const auto certs = run_all_certificates(step);
  Report report;
  report.command = "scan-inequalities";
  report.inputs = {{"step", step}};
  json table = json::array();
  for (const auto& c : certs) {
    json region = json::array();
    for (const auto& [lo, hi] : c.region) {
      region.push_back(json{{"lo", {{"num", lo.num}, {"den", lo.den}}},
                            {"hi", {{"num", hi.num}, {"den", hi.den}}}});
    }
    table.push_back(json{{"name", c.name},
                         {"region", region},
                         {"grid_step", c.grid_step},
                         {"lipschitz_bound", c.lipschitz_bound},
                         {"min_margin", c.min_margin},
                         {"sign", c.sign},
                         {"verdict", verdict_name(c.verdict)}});
    if (c.verdict != Verdict::kSignDefinite) {
      report.violations.push_back("certificate '" + c.name + "' is not sign-definite");
    }
  }
  report.results = {{"certificates", table}};
  if (!as_json) {
    std::cout << "name                      margin        lipschitz     verdict\n";
    for (const auto& c : certs) {
      std::printf("%-25s %-13.6g %-13.6g %s\n", c.name.c_str(), c.min_margin, c.lipschitz_bound,
                  verdict_name(c.verdict));
    }
    return report.exit_code();
  }
  return finish(report, as_json);
}

// Exhaustive and setfile-driven lemma verification; returns violation count.
struct LemmaRun {
  std::int64_t checked = 0;
  std::int64_t applicable = 0;
  std::int64_t violations = 0;
  std::string first_witness;

  void absorb(const LemmaReport& r) {
    ++checked;
    if (!r.hypotheses_hold) return;
    ++applicable;
    if (!r.conclusion_holds) {
      ++violations;
      if (first_witness.empty() && r.witness) first_witness = *r.witness;
    }
  }
};

// All subsets of [0, span] containing 0 and span with gap gcd 1, by bitmask.
void for_each_normalized_subset(std::int64_t span_max,
                                const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  for (std::int64_t span = 1; span <= span_max; ++span) {
    const std::int64_t free_bits = span - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_bits); ++mask) {
      std::vector<std::int64_t> xs{0};
      for (std::int64_t b = 0; b < free_bits; ++b) {
        if ((mask >> b) & 1u) xs.push_back(b + 1);
      }
      xs.push_back(span);
      std::int64_t g = 0;
      for (std::size_t i = 1; i < xs.size(); ++i) g = std::gcd(g, xs[i] - xs[i - 1]);
      if (g == 1) fn(xs);
    }
  }
}

void for_each_bounded_subset(std::int64_t m, std::int64_t span,
                             const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  // All size-m subsets of [0, span].
  std::vector<std::int64_t> xs(static_cast<std::size_t>(m));
  const std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t idx,
                                                                  std::int64_t next) {
    if (idx == m) {
      fn(xs);
      return;
    }
    for (std::int64_t v = next; v <= span - (m - 1 - idx); ++v) {
      xs[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, v + 1);
    }
  };
  rec(0, 0);
}

Prime smallest_usable_prime(std::int64_t at_least) {
  std::int64_t c = std::max<std::int64_t>(3, at_least);
  while (!Prime::is_prime(c)) ++c;
  return Prime(c);
}

int cmd_verify_lemma(const std::string& id, std::int64_t exhaustive_max,
                     const std::string& setfile, std::uint64_t seed, bool as_json) {
  Report report;
  report.command = "verify-lemma";
  report.inputs = {{"id", id},
                   {"exhaustive_max", exhaustive_max},
                   {"setfile", setfile},
                   {"seed", seed}};
  LemmaRun run;

  const auto lifted_of = [](const std::vector<std::int64_t>& xs, Prime p) {
    return LiftedSet{p, xs};
  };

  if (id == "extremal-vector") {
    const std::int64_t steps = exhaustive_max > 0 ? exhaustive_max : 200;
    const ExtremalVectorProblem prob = make_extremal_vector_problem(0.5, 0.4502, 5);
    const double x = solve_extremal_root(prob);
    report.results["root"] = x;
    report.results["K"] = prob.K;
    // Feasible grid vectors must keep their maximum above the root, up to
    // one grid cell.
    std::vector<double> power(static_cast<std::size_t>(steps) + 1);
    for (std::int64_t i = 0; i <= steps; ++i) {
      power[static_cast<std::size_t>(i)] =
          std::pow(static_cast<double>(i) / static_cast<double>(steps), 1.5);
    }
    std::int64_t feasible = 0, violations = 0;
    std::vector<std::int64_t> parts(5);
    const std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec =
        [&](std::int64_t idx, std::int64_t rem, std::int64_t max_part) {
          if (idx == 4) {
            if (rem > max_part) return;
            parts[4] = rem;
            double ps = 0.0;
            for (std::int64_t part : parts) ps += power[static_cast<std::size_t>(part)];
            if (ps >= prob.gamma) {
              ++feasible;
              if (static_cast<double>(parts[0]) / static_cast<double>(steps) <
                  x - 1.0 / static_cast<double>(steps)) {
                ++violations;
              }
            }
            return;
          }
          for (std::int64_t v = std::min(rem, max_part); v >= 0; --v) {
            if (v * (5 - idx) < rem) break;  // descending parts cannot reach the sum
            parts[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1, rem - v, v);
          }
        };
    rec(0, steps, steps);
    run.checked = run.applicable = feasible;
    run.violations = violations;
  } else if (id == "rearrangement") {
    // Exhaustive-u maximum never falls below the arcsin bound.
    const std::int64_t pmax = exhaustive_max > 0 ? exhaustive_max : 101;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 500; ++trial) {
      const Prime p = smallest_usable_prime(3 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(pmax)));
      std::vector<std::int64_t> elems;
      for (std::int64_t r = 0; r < p.value(); ++r) {
        if (rng() & 1u) elems.push_back(r);
      }
      const ResidueSet s = ResidueSet::from_residues(p, elems);
      const RearrangementBound rb = rearrangement_bound(s);
      ++run.checked;
      ++run.applicable;
      if (static_cast<double>(rb.count) < rb.bound - 1e-9) {
        ++run.violations;
        if (run.first_witness.empty()) {
          run.first_witness = "p=" + std::to_string(p.value()) + " count below bound";
        }
      }
    }
  } else if (!setfile.empty()) {
    const ResidueSet s = read_set_file(setfile);
    if (id == "tail-containment") {
      run.absorb(check_tail_containment(s));
    } else if (id == "diffset-size" || id == "diffset-interval" || id == "diffset-symmetric") {
      // Lift through the tightest covering window (largest complement gap).
      const std::int64_t p = s.modulus_value();
      if (s.size() < 2) throw std::invalid_argument("verify-lemma: need at least 2 elements");
      const std::vector<std::int64_t> elems = s.residues();
      std::int64_t best_gap = -1, gap_start = 0;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        const std::int64_t cur = elems[i];
        const std::int64_t next = i + 1 < elems.size() ? elems[i + 1] : elems[0] + p;
        if (next - cur - 1 > best_gap) {
          best_gap = next - cur - 1;
          gap_start = cur + 1;
        }
      }
      const std::int64_t win_len = p - best_gap - 1;
      const ModularInterval window(s.modulus(), gap_start + best_gap, win_len);
      if (id == "diffset-size") {
        run.absorb(check_diffset_size_bound_zp(s, window));
      } else if (id == "diffset-interval") {
        run.absorb(check_diffset_interval_zp(s, window, 1));
      } else {
        run.absorb(check_diffset_symmetric_interval_zp(s, window, 2));
      }
    } else if (id == "excluded-interval") {
      const std::int64_t p = s.modulus_value();
      for (std::int64_t u = 0; u < p; ++u) {
        for (std::int64_t len = 1; 2 * len <= p; ++len) {
          const ModularInterval window(s.modulus(), u, len);
          for (std::int64_t a = (len + 3) / 4; 2 * a <= len; ++a) {
            if (!s.contains(a)) continue;
            run.absorb(check_excluded_interval(s, window, a));
          }
        }
      }
    } else {
      throw CLI::ValidationError("verify-lemma", "unknown lemma id '" + id + "'");
    }
  } else if (id == "diffset-size") {
    const std::int64_t span_max = exhaustive_max > 0 ? exhaustive_max : 12;
    const Prime big = smallest_usable_prime(4 * span_max + 1);
    for_each_normalized_subset(span_max, [&](const std::vector<std::int64_t>& xs) {
      if (xs.size() < 2) return;
      run.absorb(check_diffset_size_bound(lifted_of(xs, big)));
    });
  } else if (id == "diffset-interval") {
    const std::int64_t m_max = exhaustive_max > 0 ? exhaustive_max : 10;
    const Prime big = smallest_usable_prime(8 * m_max + 1);
    for (std::int64_t m = 1; m <= m_max; ++m) {
      for (std::int64_t span = m - 1; span <= 2 * m - 2; ++span) {
        for_each_bounded_subset(m, span, [&](const std::vector<std::int64_t>& xs) {
          for (std::int64_t k = 1; k <= 3; ++k) {
            run.absorb(check_diffset_interval(lifted_of(xs, big), k));
          }
        });
      }
    }
  } else if (id == "diffset-symmetric") {
    const std::int64_t m_max = exhaustive_max > 0 ? exhaustive_max : 10;
    const Prime big = smallest_usable_prime(8 * m_max + 1);
    for (std::int64_t m = 1; m <= m_max; ++m) {
      for (std::int64_t k = 2; k <= 3; ++k) {
        for (std::int64_t span = m - 1; k * (span + 1) < (2 * k - 1) * m; ++span) {
          for_each_bounded_subset(m, span, [&](const std::vector<std::int64_t>& xs) {
            run.absorb(check_diffset_symmetric_interval(lifted_of(xs, big), k));
          });
        }
      }
    }
  } else if (id == "tail-containment") {
    const std::int64_t p_max = exhaustive_max > 0 ? exhaustive_max : 23;
    for (std::int64_t pv = 3; pv <= p_max; ++pv) {
      if (!Prime::is_prime(pv)) continue;
      enumerate_all_sumfree(Prime(pv), [&](const InstanceRecord& rec) {
        run.absorb(check_tail_containment(rec.set));
      });
    }
  } else if (id == "excluded-interval") {
    const std::int64_t p_max = exhaustive_max > 0 ? exhaustive_max : 199;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
      const Prime p = smallest_usable_prime(50 + static_cast<std::int64_t>(
                                                     rng() % static_cast<std::uint64_t>(p_max - 49)));
      const auto inst = greedy_random_sumfree(p, 0.05, rng());
      if (!inst) continue;
      const ResidueSet& s = inst->set;
      for (std::int64_t u = 0; u < p.value(); ++u) {
        for (std::int64_t len = 1; 2 * len <= p.value(); ++len) {
          const ModularInterval window(p, u, len);
          for (std::int64_t a = (len + 3) / 4; 2 * a <= len; ++a) {
            if (!s.contains(a)) continue;
            run.absorb(check_excluded_interval(s, window, a));
          }
        }
      }
    }
  } else {
    throw CLI::ValidationError("verify-lemma", "unknown lemma id '" + id + "'");
  }

  report.results["checked"] = run.checked;
  report.results["applicable"] = run.applicable;
  report.results["violations"] = run.violations;
  if (run.violations > 0) {
    report.violations.push_back("lemma '" + id + "' violated: " + run.first_witness);
  }
  return finish(report, as_json);
}

int cmd_enumerate(std::int64_t pv, const std::string& mode_name, double min_density,
                  std::uint64_t seed, std::int64_t limit, const std::string& out_dir,
                  bool as_json) {
  const Prime p(pv);
  const auto mode = enumeration_mode_from_name(mode_name);
  if (!mode) throw CLI::ValidationError("enumerate", "unknown mode '" + mode_name + "'");

  Report report;
  report.command = "enumerate";
  report.inputs = {{"p", pv},         {"mode", mode_name}, {"min_density", min_density},
                   {"seed", seed},    {"limit", limit},    {"out", out_dir}};

  const bool write_files = !out_dir.empty();
  if (write_files) std::filesystem::create_directories(out_dir);

  json files = json::array();
  std::int64_t count = 0, max_n = 0, extremal = 0;
  const auto handle = [&](const InstanceRecord& rec) {
    ++count;
    max_n = std::max(max_n, rec.n);
    if (rec.is_extremal) ++extremal;
    if (write_files && (limit == 0 || count <= limit)) {
      char name[32];
      std::snprintf(name, sizeof(name), "set_%06lld.set", static_cast<long long>(count));
      const std::string path = out_dir + "/" + name;
      write_set_file(path, rec.set);
      files.push_back(json{{"file", name}, {"n", rec.n}, {"is_extremal", rec.is_extremal},
                           {"seed", rec.seed}});
    }
  };

  if (*mode == EnumerationMode::kAll) {
    enumerate_all_sumfree(p, handle);
  } else if (*mode == EnumerationMode::kMaximal) {
    enumerate_maximal_sumfree(p, handle);
  } else {
    const std::int64_t instances = limit > 0 ? limit : 1;
    std::int64_t failures = 0;
    for (std::int64_t i = 0; i < instances; ++i) {
      const auto inst = greedy_random_sumfree(p, min_density, seed + static_cast<std::uint64_t>(i));
      if (inst) {
        handle(*inst);
      } else {
        ++failures;
      }
    }
    report.results["budget_failures"] = failures;
    if (failures > 0) {
      report.violations.push_back("generator budget exhausted for " + std::to_string(failures) +
                                  " instance(s)");
    }
  }

  report.results["count"] = count;
  report.results["max_n"] = max_n;
  report.results["extremal_count"] = extremal;
  if (write_files) {
    report.results["files"] = files;
    std::ofstream manifest(out_dir + "/manifest.json");
    manifest << report.to_json().dump(2) << '\n';
  }
  return finish(report, as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for dense sum-free subsets of Z/pZ"};
  app.set_version_flag("--version", kToolVersion);
  int threads = 0;
  app.add_option("--threads", threads, "Worker thread cap (default: SUMFREE_THREADS or cores)");

  std::string setfile, out_dir, mode = "all", lemma_id;
  bool as_json = false, oracle = false;
  double step = kDefaultGridStep, min_density = 0.0;
  std::int64_t pv = 13, exhaustive_max = 0, limit = 0;
  std::uint64_t seed = 1;

  auto* sp = app.add_subcommand("spectrum", "Fourier coefficients and identities of a set");
  sp->add_option("setfile", setfile)->required();
  sp->add_flag("--json", as_json);

  auto* cs = app.add_subcommand("check-sumfree", "Test a set file for sum-freeness");
  cs->add_option("setfile", setfile)->required();
  cs->add_flag("--json", as_json);

  auto* rs = app.add_subcommand("recover-structure",
                                "Dilation witness d with A inside d*[n, p-n]");
  rs->add_option("setfile", setfile)->required();
  rs->add_flag("--oracle", oracle, "Cross-check against the exhaustive dilation scan");
  rs->add_flag("--json", as_json);

  auto* vl = app.add_subcommand("verify-lemma",
                                "Check one lemma predicate exhaustively or on a set file");
  vl->add_option("id", lemma_id,
                 "extremal-vector | rearrangement | diffset-size | diffset-interval | "
                 "diffset-symmetric | excluded-interval | tail-containment")
      ->required();
  vl->add_option("--exhaustive-max", exhaustive_max, "Range bound for the exhaustive sweep");
  vl->add_option("--setfile", setfile, "Check a single set instead of sweeping");
  vl->add_option("--seed", seed, "Seed for randomized sweeps");
  vl->add_flag("--json", as_json);

  auto* si = app.add_subcommand("scan-inequalities", "Run all analytic sign certificates");
  si->add_option("--step", step, "Grid step (default 1e-5)");
  si->add_flag("--json", as_json);

  auto* en = app.add_subcommand("enumerate", "Generate sum-free sets");
  en->add_option("--p", pv, "Prime modulus")->required();
  en->add_option("--mode", mode, "all | maximal | greedy-random");
  en->add_option("--min-density", min_density, "Density target for greedy-random");
  en->add_option("--seed", seed, "Base seed for greedy-random");
  en->add_option("--limit", limit, "Instance cap (greedy-random) / file cap (all, maximal)");
  en->add_option("--out", out_dir, "Directory for set files plus manifest.json");
  en->add_flag("--json", as_json);

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
    if (threads > 0) set_thread_cap(threads);

    if (sp->parsed()) return cmd_spectrum(setfile, as_json);
    if (cs->parsed()) return cmd_check_sumfree(setfile, as_json);
    if (rs->parsed()) return cmd_recover(setfile, oracle, as_json);
    if (vl->parsed()) return cmd_verify_lemma(lemma_id, exhaustive_max, setfile, seed, as_json);
    if (si->parsed()) return cmd_scan_inequalities(step, as_json);
    if (en->parsed()) return cmd_enumerate(pv, mode, min_density, seed, limit, out_dir, as_json);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const SetParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
