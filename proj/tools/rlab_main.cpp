// rlab: residue-set workbench. Every subcommand prints one machine-readable
// payload (JSON by default, CSV on request), returns 0 on success, 1 when a
// verified property fails or a high-severity finding appears, and 2 on bad
// input. With --log PATH each run appends one JSON line to a reproducible
// run log.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "rlab/census.hpp"
#include "rlab/correlation.hpp"
#include "rlab/decomposition.hpp"
#include "rlab/field.hpp"
#include "rlab/numeric.hpp"
#include "rlab/serialize.hpp"

namespace {

using rlab::Json;

struct Output {
  Json payload;
  bool finding = false;  // true forces exit code 1
};

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::string>& keys,
             std::vector<std::string>& vals) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, keys, vals);
  } else if (j.is_array()) {
    std::string joined;
    for (const auto& v : j) {
      if (!joined.empty()) joined += ';';
      joined += v.is_structured() ? v.dump() : csv_value(v);
    }
    keys.push_back(prefix);
    vals.push_back(joined);
  } else {
    keys.push_back(prefix);
    vals.push_back(csv_value(j));
  }
}

std::string to_csv(const Json& payload) {
  std::string out;
  if (payload.contains("rows") && payload["rows"].is_array() && !payload["rows"].empty() &&
      payload["rows"][0].is_object()) {
    const Json& rows = payload["rows"];
    bool first = true;
    for (const auto& [k, v] : rows[0].items()) {
      (void)v;
      if (!first) out += ',';
      out += k;
      first = false;
    }
    out += '\n';
    for (const auto& row : rows) {
      first = true;
      for (const auto& [k, v] : row.items()) {
        (void)k;
        if (!first) out += ',';
        out += csv_value(v);
        first = false;
      }
      out += '\n';
    }
    return out;
  }
  std::vector<std::string> keys, vals;
  flatten(payload, "", keys, vals);
  for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + keys[i];
  out += '\n';
  for (std::size_t i = 0; i < vals.size(); ++i) out += (i ? "," : "") + vals[i];
  out += '\n';
  return out;
}

std::vector<std::uint32_t> parse_set(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(static_cast<std::uint32_t>(std::stoull(text.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  return out;
}

// Deterministic draws; mt19937_64 is fully specified, and plain modulo keeps
// the stream identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rlab: k-th power residue decomposition and character-sum workbench"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path, log_path;
  unsigned jobs = 1;
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Write the payload to this file instead of stdout");
  app.add_option("--log", log_path, "Append a JSON run record to this file");
  app.add_option("--jobs", jobs, "Worker threads for searches and sieves");
  app.add_flag("--timing", timing, "Include elapsed milliseconds in search payloads");

  std::string op;
  Json params;
  std::function<Output()> run;

  // ---- field -------------------------------------------------------------
  std::uint64_t p_opt = 0;
  std::uint32_t k_opt = 0, r_opt = 1, m_opt = 2, j_opt = 1, t_opt = 1;
  std::uint64_t seed = 0;
  std::uint32_t iters = 0;

  auto* cmd_field = app.add_subcommand("field", "Prime field summary: least primitive root");
  cmd_field->add_option("--p", p_opt, "Odd prime")->required();
  cmd_field->callback([&] {
    op = "field";
    params = Json{{"p", p_opt}};
    run = [&]() -> Output {
      const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
      Json factors = Json::array();
      for (std::uint32_t q : field.order_factors()) factors.push_back(q);
      return {Json{{"p", field.p()}, {"g", field.generator()}, {"order_factors", factors}}, false};
    };
  });

  // ---- dk ----------------------------------------------------------------
  auto* cmd_dk = app.add_subcommand("dk", "The set D_k of k-th power residues");
  cmd_dk->add_option("--p", p_opt)->required();
  cmd_dk->add_option("--k", k_opt)->required();
  cmd_dk->callback([&] {
    op = "dk";
    params = Json{{"p", p_opt}, {"k", k_opt}};
    run = [&]() -> Output {
      const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
      const rlab::ElementSet d = rlab::power_residues(field, k_opt);
      return {Json{{"p", field.p()}, {"k", k_opt}, {"Dk", rlab::json_of(d)}}, false};
    };
  });

  // ---- search2 -----------------------------------------------------------
  std::string mode_opt = "general";
  bool include_trivial = false, all_orbits = false;
  auto* cmd_s2 = app.add_subcommand("search2", "All non-trivial A+B = D_k up to symmetry");
  cmd_s2->add_option("--p", p_opt)->required();
  cmd_s2->add_option("--k", k_opt)->required();
  cmd_s2->add_option("--mode", mode_opt)->check(CLI::IsMember({"general", "perfect"}));
  cmd_s2->add_flag("--include-trivial", include_trivial, "List the singleton decompositions too");
  cmd_s2->add_flag("--all-orbits", all_orbits, "Expand each orbit into all of its images");
  cmd_s2->callback([&] {
    op = "search2";
    params = Json{{"p", p_opt}, {"k", k_opt}, {"mode", mode_opt}};
    run = [&]() -> Output {
      const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
      const auto mode =
          mode_opt == "general" ? rlab::SearchMode::general : rlab::SearchMode::perfect;
      const rlab::SearchReport report = rlab::enumerate_2_decompositions(field, k_opt, mode, jobs);
      Json payload = rlab::json_of(report, timing);
      bool finding = false;
      for (const auto& dec : report.orbits) finding = finding || !dec.rigidity.ok();
      const rlab::ElementSet d = rlab::power_residues(field, k_opt);
      if (include_trivial) {
        Json trivial = Json::array();
        for (std::uint32_t x : d.members()) {
          rlab::ElementSet rest = d.shifted(field.p() - x);
          trivial.push_back(Json{{"A", Json::array({x})}, {"B", rlab::json_of(rest)}});
        }
        payload["trivial"] = std::move(trivial);
      }
      if (all_orbits) {
        Json images_all = Json::array();
        for (const auto& dec : report.orbits) {
          Json images = Json::array();
          for (const auto& [ia, ib] :
               rlab::orbit_images(field.p(), dec.A.members(), dec.B.members(), d.members()))
            images.push_back(Json{{"A", ia}, {"B", ib}});
          images_all.push_back(std::move(images));
        }
        payload["orbit_images"] = std::move(images_all);
      }
      return {std::move(payload), finding};
    };
  });

  // ---- search-b2 ---------------------------------------------------------
  auto* cmd_b2 = app.add_subcommand("search-b2", "All t with A + {0,t} = D_k");
  cmd_b2->add_option("--p", p_opt)->required();
  cmd_b2->add_option("--k", k_opt)->required();
  cmd_b2->callback([&] {
    op = "search-b2";
    params = Json{{"p", p_opt}, {"k", k_opt}};
    run = [&]() -> Output {
      const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
      const auto hits = rlab::search_b2(field, k_opt, jobs);
      const std::uint64_t threshold = 16ull * k_opt * k_opt;
      const bool above = p_opt > threshold;
      Json t = Json::array();
      for (std::uint32_t v : hits) t.push_back(v);
      return {Json{{"p", p_opt},
                   {"k", k_opt},
                   {"b2_threshold", threshold},
                   {"above_threshold", above},
                   {"t", std::move(t)}},
              above && !hits.empty()};
    };
  });

  // ---- search-aa ---------------------------------------------------------
  auto* cmd_aa = app.add_subcommand("search-aa", "Witness A with A + A = D_k, if any");
  cmd_aa->add_option("--p", p_opt)->required();
  cmd_aa->add_option("--k", k_opt)->required();
  cmd_aa->callback([&] {
    op = "search-aa";
    params = Json{{"p", p_opt}, {"k", k_opt}};
    run = [&]() -> Output {
      const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
      const auto witness = rlab::search_aa(field, k_opt, jobs);
      Json payload{{"p", p_opt}, {"k", k_opt}};
      payload["witness"] = witness ? rlab::json_of(*witness) : Json(nullptr);
      return {std::move(payload), witness.has_value()};
    };
  });

  // ---- search3 -----------------------------------------------------------
  auto* cmd_s3 = app.add_subcommand("search3", "Search for D_k = A + B + C");
  cmd_s3->add_option("--p", p_opt)->required();
  cmd_s3->add_option("--k", k_opt)->required();
  cmd_s3->callback([&] {
    op = "search3";
    params = Json{{"p", p_opt}, {"k", k_opt}};
    run = [&]() -> Output {
      const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
      const auto report = rlab::search_3_decompositions(field, k_opt, jobs);
      const auto bounds = rlab::thresholds_and_bounds(p_opt, k_opt);
      Json payload = rlab::json_of(report);
      payload["triple_threshold"] = bounds.triple_threshold;
      const bool finding = !report.triples.empty() && bounds.triple_applicable;
      return {std::move(payload), finding};
    };
  });

  // ---- verify ------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "Exact identity and bound checks");
  cmd_verify->require_subcommand(1);

  std::string poly_opt, a_set, b_set, c_set, shifts_opt;
  std::uint32_t coeff_opt = 1;
  bool fuzz = false;
  std::uint64_t pmax_opt = 499;

  auto* v_weil = cmd_verify->add_subcommand("weil", "Complete character sum against (r-1) sqrt(p)");
  v_weil->add_option("--p", p_opt);
  v_weil->add_option("--m", m_opt, "Character order (divides p-1)");
  v_weil->add_option("--j", j_opt, "Character exponent, chi = psi^j");
  v_weil->add_option("--poly", poly_opt, "Factored polynomial, shift:exponent[,...]");
  v_weil->add_option("--coeff", coeff_opt, "Leading coefficient");
  v_weil->add_flag("--fuzz", fuzz, "Run seeded random instances instead");
  v_weil->add_option("--iters", iters);
  v_weil->add_option("--seed", seed);
  v_weil->add_option("--pmax", pmax_opt, "Largest prime for fuzzing");
  v_weil->callback([&] {
    op = "verify weil";
    if (fuzz) {
      params = Json{{"fuzz", true}, {"iters", iters ? iters : 500}, {"seed", seed},
                    {"pmax", pmax_opt}};
      run = [&]() -> Output {
        const std::uint32_t n = iters ? iters : 500;
        std::mt19937_64 rng(seed);
        const auto primes = rlab::primes_up_to(static_cast<std::uint32_t>(pmax_opt));
        Json failures = Json::array();
        std::uint32_t checked = 0;
        while (checked < n) {
          const std::uint32_t p = primes[draw(rng, primes.size())];
          if (p < 3) continue;
          std::vector<std::uint32_t> ms;
          for (std::uint64_t d : rlab::divisors_of(p - 1))
            if (d >= 2) ms.push_back(static_cast<std::uint32_t>(d));
          const std::uint32_t m = ms[draw(rng, ms.size())];
          const std::uint32_t nshifts = 1 + static_cast<std::uint32_t>(draw(rng, 4));
          if (nshifts > p) continue;
          rlab::FactoredPoly poly;
          std::set<std::uint32_t> used;
          while (poly.factors.size() < nshifts) {
            const std::uint32_t s = static_cast<std::uint32_t>(draw(rng, p));
            if (!used.insert(s).second) continue;
            const std::uint32_t e = 1 + static_cast<std::uint32_t>(draw(rng, m - 1));
            poly.factors.push_back({s, e});
          }
          const rlab::PrimeField field(p);
          const rlab::CharacterSpec spec{m, 1};
          const auto rep = rlab::weil_verify(field, spec, poly);
          ++checked;
          if (!rep.holds)
            failures.push_back(Json{{"p", p}, {"m", m}, {"poly", poly.to_string()},
                                    {"magnitude", rep.magnitude}, {"bound", rep.bound}});
        }
        return {Json{{"iters", n}, {"seed", seed}, {"checked", checked},
                     {"failures", failures}},
                !failures.empty()};
      };
    } else {
      params = Json{{"p", p_opt}, {"m", m_opt}, {"j", j_opt}, {"poly", poly_opt},
                    {"coeff", coeff_opt}};
      run = [&]() -> Output {
        const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
        rlab::FactoredPoly poly = rlab::FactoredPoly::parse(poly_opt, field.p());
        poly.lead = coeff_opt;
        const rlab::CharacterSpec spec{m_opt, j_opt};
        const auto rep = rlab::weil_verify(field, spec, poly);
        return {Json{{"p", p_opt}, {"m", m_opt}, {"j", j_opt}, {"poly", poly.to_string()},
                     {"coeff", coeff_opt}, {"magnitude", rep.magnitude}, {"bound", rep.bound},
                     {"holds", rep.holds}, {"distinct_roots", rep.distinct_roots}},
                !rep.holds};
      };
    }
  });

  auto* v_shk = cmd_verify->add_subcommand("shkredov", "Moment identity for correlations");
  v_shk->add_option("--p", p_opt)->required();
  v_shk->add_option("--k", k_opt, "Use f = g = f_k");
  v_shk->add_option("--r", r_opt)->required();
  v_shk->add_flag("--fuzz", fuzz, "Random integer-valued pairs instead of f_k");
  v_shk->add_option("--iters", iters);
  v_shk->add_option("--seed", seed);
  v_shk->callback([&] {
    op = "verify shkredov";
    if (fuzz) {
      params = Json{{"p", p_opt}, {"r", r_opt}, {"fuzz", true}, {"iters", iters ? iters : 50},
                    {"seed", seed}};
      run = [&]() -> Output {
        const std::uint32_t n = iters ? iters : 50;
        const std::uint32_t p = static_cast<std::uint32_t>(p_opt);
        std::mt19937_64 rng(seed);
        std::uint32_t failures = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
          rlab::IntFunction f = rlab::IntFunction::zeros(p), g = rlab::IntFunction::zeros(p);
          for (std::uint32_t x = 0; x < p; ++x) {
            f.values[x] = static_cast<std::int64_t>(draw(rng, 11)) - 5;
            g.values[x] = static_cast<std::int64_t>(draw(rng, 11)) - 5;
          }
          if (!rlab::shkredov_check(f, g, r_opt, jobs).equal) ++failures;
        }
        return {Json{{"p", p}, {"r", r_opt}, {"iters", n}, {"seed", seed},
                     {"failures", failures}},
                failures != 0};
      };
    } else {
      params = Json{{"p", p_opt}, {"k", k_opt}, {"r", r_opt}};
      run = [&]() -> Output {
        const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
        const rlab::IntFunction f = rlab::IntFunction::from_fk(rlab::fk_table(field, k_opt));
        const auto rep = rlab::shkredov_check(f, f, r_opt, jobs);
        return {Json{{"p", p_opt}, {"k", k_opt}, {"r", r_opt}, {"lhs", rep.lhs},
                     {"rhs", rep.rhs}, {"equal", rep.equal}},
                !rep.equal};
      };
    }
  });

  auto* v_l22 = cmd_verify->add_subcommand(
      "lemma22", "Expansion identity for the shifted triple product sum");
  v_l22->add_option("--p", p_opt)->required();
  v_l22->add_option("--k", k_opt)->required();
  v_l22->add_option("--t", t_opt)->required();
  v_l22->callback([&] {
    op = "verify lemma22";
    params = Json{{"p", p_opt}, {"k", k_opt}, {"t", t_opt}};
    run = [&]() -> Output {
      const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
      const auto rep = rlab::b2_product_expansion_check(field, k_opt, t_opt);
      Json payload = rlab::json_of(rep);
      payload["p"] = p_opt;
      payload["k"] = k_opt;
      payload["t"] = t_opt;
      const bool g0_ok = rep.g0 >= 0 && rep.g0 <= static_cast<std::int64_t>(k_opt) * k_opt;
      payload["g0_ok"] = g0_ok;
      return {std::move(payload), !rep.equal || !g0_ok};
    };
  });

  auto* v_l23 = cmd_verify->add_subcommand(
      "lemma23", "Normalized membership product: pointwise range and binomial identities");
  v_l23->add_option("--p", p_opt)->required();
  v_l23->add_option("--k", k_opt)->required();
  v_l23->add_option("--B", shifts_opt, "Shift list, e.g. 0,7")->required();
  v_l23->callback([&] {
    op = "verify lemma23";
    params = Json{{"p", p_opt}, {"k", k_opt}, {"B", shifts_opt}};
    run = [&]() -> Output {
      const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
      const auto shifts = parse_set(shifts_opt);
      const auto rep = rlab::membership_product_check(field, k_opt, shifts);
      Json payload = rlab::json_of(rep);
      payload["p"] = p_opt;
      payload["k"] = k_opt;
      payload["B"] = shifts;
      return {std::move(payload), !(rep.pointwise_ok && rep.identities_ok)};
    };
  });

  auto* v_c4 = cmd_verify->add_subcommand("c4scan", "Scan C_4(f_k) over all of F_p^3");
  v_c4->add_option("--p", p_opt)->required();
  v_c4->add_option("--k", k_opt)->required();
  v_c4->callback([&] {
    op = "verify c4scan";
    params = Json{{"p", p_opt}, {"k", k_opt}};
    run = [&]() -> Output {
      const rlab::PrimeField field(static_cast<std::uint32_t>(p_opt));
      const auto rep = rlab::c4_fk_scan(field, k_opt, jobs);
      return {rlab::json_of(rep), !rep.all_hold()};
    };
  });

  auto* v_ruzsa = cmd_verify->add_subcommand("ruzsa", "Triple sumset inequality");
  v_ruzsa->add_option("--p", p_opt)->required();
  v_ruzsa->add_option("--A", a_set);
  v_ruzsa->add_option("--B", b_set);
  v_ruzsa->add_option("--C", c_set);
  v_ruzsa->add_flag("--fuzz", fuzz);
  v_ruzsa->add_option("--iters", iters);
  v_ruzsa->add_option("--seed", seed);
  v_ruzsa->callback([&] {
    op = "verify ruzsa";
    if (fuzz) {
      params = Json{{"p", p_opt}, {"fuzz", true}, {"iters", iters ? iters : 1000}, {"seed", seed}};
      run = [&]() -> Output {
        const std::uint32_t n = iters ? iters : 1000;
        const std::uint32_t p = static_cast<std::uint32_t>(p_opt);
        std::mt19937_64 rng(seed);
        std::uint32_t failures = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
          auto random_set = [&] {
            rlab::ElementSet s(p);
            const std::uint64_t size = 1 + draw(rng, 8);
            while (s.count() < std::min<std::uint64_t>(size, p))
              s.set(static_cast<std::uint32_t>(draw(rng, p)));
            return s;
          };
          const auto rep = rlab::ruzsa_triple_check(random_set(), random_set(), random_set());
          if (!rep.holds) ++failures;
        }
        return {Json{{"p", p}, {"iters", n}, {"seed", seed}, {"failures", failures}},
                failures != 0};
      };
    } else {
      params = Json{{"p", p_opt}, {"A", a_set}, {"B", b_set}, {"C", c_set}};
      run = [&]() -> Output {
        const std::uint32_t p = static_cast<std::uint32_t>(p_opt);
        const auto a = rlab::ElementSet::from_members(p, parse_set(a_set));
        const auto b = rlab::ElementSet::from_members(p, parse_set(b_set));
        const auto c = rlab::ElementSet::from_members(p, parse_set(c_set));
        const auto rep = rlab::ruzsa_triple_check(a, b, c);
        Json payload = rlab::json_of(rep);
        payload["p"] = p;
        return {std::move(payload), !rep.holds};
      };
    }
  });

  // ---- census ------------------------------------------------------------
  auto* cmd_census = app.add_subcommand("census", "Divisor-interval and prime counts");
  cmd_census->require_subcommand(1);

  std::uint64_t n_opt = 1, x_opt = 0;
  double y_opt = 1.0, z_opt = 1.0;
  std::int32_t shift_opt = 0;
  std::vector<std::uint64_t> xs_opt;
  bool nontrivial_divisors = false;
  std::uint64_t rescaled_x = 0;
  std::uint32_t pmax_census = 0;
  std::string census_mode = "perfect";

  auto* c_tau = cmd_census->add_subcommand("tau", "Divisors of n in (y, z]");
  c_tau->add_option("--n", n_opt)->required();
  c_tau->add_option("--y", y_opt)->required();
  c_tau->add_option("--z", z_opt)->required();
  c_tau->callback([&] {
    op = "census tau";
    params = Json{{"n", n_opt}, {"y", y_opt}, {"z", z_opt}};
    run = [&]() -> Output {
      return {Json{{"n", n_opt}, {"y", y_opt}, {"z", z_opt},
                   {"tau", rlab::tau_interval(n_opt, y_opt, z_opt)}},
              false};
    };
  });

  auto* c_h = cmd_census->add_subcommand("H", "Integers up to x with a divisor in (y, z]");
  c_h->add_option("--x", x_opt)->required();
  c_h->add_option("--y", y_opt)->required();
  c_h->add_option("--z", z_opt)->required();
  c_h->callback([&] {
    op = "census H";
    params = Json{{"x", x_opt}, {"y", y_opt}, {"z", z_opt}};
    run = [&]() -> Output {
      return {Json{{"x", x_opt}, {"y", y_opt}, {"z", z_opt},
                   {"count", rlab::count_h(x_opt, y_opt, z_opt)}},
              false};
    };
  });

  auto* c_hs = cmd_census->add_subcommand("Hshift", "Same count over shifted primes");
  c_hs->add_option("--x", x_opt)->required();
  c_hs->add_option("--y", y_opt)->required();
  c_hs->add_option("--z", z_opt)->required();
  c_hs->add_option("--shift", shift_opt, "lambda in [-10, 10]")->required();
  c_hs->callback([&] {
    op = "census Hshift";
    params = Json{{"x", x_opt}, {"y", y_opt}, {"z", z_opt}, {"shift", shift_opt}};
    run = [&]() -> Output {
      return {Json{{"x", x_opt}, {"y", y_opt}, {"z", z_opt}, {"shift", shift_opt},
                   {"count", rlab::count_h_shifted(x_opt, y_opt, z_opt, shift_opt)}},
              false};
    };
  });

  auto* c_pi = cmd_census->add_subcommand("pi", "Prime counting function");
  c_pi->add_option("--x", x_opt)->required();
  c_pi->callback([&] {
    op = "census pi";
    params = Json{{"x", x_opt}};
    run = [&]() -> Output {
      return {Json{{"x", x_opt}, {"pi", rlab::prime_pi(x_opt, jobs)}}, false};
    };
  });

  auto* c_cand = cmd_census->add_subcommand(
      "candidates", "Primes whose (p-1)/k has a divisor in the decomposition window");
  c_cand->add_option("--k", k_opt)->required();
  c_cand->add_option("--x", xs_opt, "Range bound; repeatable for a table")->required();
  c_cand->add_flag("--nontrivial-divisors", nontrivial_divisors, "Exclude d in {1, n}");
  c_cand->add_option("--rescaled", rescaled_x,
                     "Use the half-open rescaled interval at this fixed X");
  c_cand->callback([&] {
    op = "census candidates";
    params = Json{{"k", k_opt}, {"x", xs_opt}, {"nontrivial_divisors", nontrivial_divisors}};
    if (rescaled_x) params["rescaled"] = rescaled_x;
    run = [&]() -> Output {
      rlab::CandidateOptions opt;
      opt.nontrivial_divisors = nontrivial_divisors;
      if (rescaled_x) opt.rescaled_x = rescaled_x;
      Json rows = Json::array();
      std::vector<double> ratios;
      auto xs = xs_opt;
      std::sort(xs.begin(), xs.end());
      for (std::uint64_t x : xs) {
        const auto row = rlab::candidate_ratio(k_opt, x, opt);
        if (row.denominator > 0) ratios.push_back(row.ratio);
        rows.push_back(rlab::json_of(row));
      }
      std::string trend = "single";
      if (ratios.size() >= 2) {
        bool dec = true, inc = true;
        for (std::size_t i = 1; i < ratios.size(); ++i) {
          dec = dec && ratios[i] <= ratios[i - 1];
          inc = inc && ratios[i] >= ratios[i - 1];
        }
        trend = dec && inc ? "constant" : dec ? "decreasing" : inc ? "increasing" : "mixed";
      }
      Json payload{{"k", k_opt}, {"nontrivial_divisors", nontrivial_divisors}};
      if (rescaled_x) payload["rescaled"] = rescaled_x;
      payload["rows"] = std::move(rows);
      payload["trend"] = trend;  // a note for inspection, never an assertion
      return {std::move(payload), false};
    };
  });

  auto* c_bad = cmd_census->add_subcommand("bad", "Primes whose D_k decomposes, with witnesses");
  c_bad->add_option("--k", k_opt)->required();
  c_bad->add_option("--pmax", pmax_census)->required();
  c_bad->add_option("--mode", census_mode)->check(CLI::IsMember({"general", "perfect"}));
  c_bad->callback([&] {
    op = "census bad";
    params = Json{{"k", k_opt}, {"pmax", pmax_census}, {"mode", census_mode}};
    run = [&]() -> Output {
      const auto mode =
          census_mode == "general" ? rlab::SearchMode::general : rlab::SearchMode::perfect;
      const auto census = rlab::bad_prime_census(k_opt, pmax_census, mode, jobs);
      bool finding = false;
      for (const auto& b : census.bad) finding = finding || !b.witness.rigidity.ok();
      return {rlab::json_of(census), finding};
    };
  });

  // ---- bounds ------------------------------------------------------------
  auto* cmd_bounds = app.add_subcommand("bounds", "Thresholds and size windows at (p, k)");
  cmd_bounds->add_option("--p", p_opt)->required();
  cmd_bounds->add_option("--k", k_opt)->required();
  cmd_bounds->callback([&] {
    op = "bounds";
    params = Json{{"p", p_opt}, {"k", k_opt}};
    run = [&]() -> Output {
      if (!rlab::is_prime(p_opt)) throw rlab::CompositeInput("p must be prime");
      return {rlab::json_of(rlab::thresholds_and_bounds(p_opt, k_opt)), false};
    };
  });

  // ---- ford --------------------------------------------------------------
  double y_ford = 0.0;
  auto* cmd_ford = app.add_subcommand("ford", "Divisor-density constants delta and u(y)");
  cmd_ford->add_option("--k", k_opt)->required();
  cmd_ford->add_option("--y", y_ford)->required();
  cmd_ford->callback([&] {
    op = "ford";
    params = Json{{"k", k_opt}, {"y", y_ford}};
    run = [&]() -> Output {
      Json payload = rlab::json_of(rlab::ford_constants(k_opt, y_ford));
      payload["k"] = k_opt;
      payload["y"] = y_ford;
      return {std::move(payload), false};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Output result;
  try {
    result = run();
  } catch (const rlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

  const std::string text =
      format == "csv" ? to_csv(result.payload) : result.payload.dump() + "\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << text;
  } else {
    std::cout << text;
  }

  if (!log_path.empty()) {
    char digest[24];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(text)));
    Json record{{"utc", utc_now()}, {"op", op}, {"params", params}, {"digest", digest},
                {"ms", ms}};
    std::ofstream log(log_path, std::ios::app);
    log << record.dump() << "\n";
  }

  return result.finding ? 1 : 0;
}
