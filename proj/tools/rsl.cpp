#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsl/bohr.hpp"
#include "rsl/bootstrap.hpp"
#include "rsl/colouring.hpp"
#include "rsl/expsums.hpp"
#include "rsl/smoothcut.hpp"
#include "rsl/sumsetqr.hpp"
#include "rsl/twosquares.hpp"

using json = nlohmann::json;

namespace {

// Flag combinations CLI11's declarative checks cannot express.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rsl::precondition_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::int64_t> read_integers(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::int64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::int64_t v;
    while (ls >> v) out.push_back(v);
  }
  return out;
}

void emit(std::ostream& os, const json& j) { os << j.dump(2) << "\n"; }

// ---- colour ----------------------------------------------------------------

struct ColourOpts {
  bool dyadic = false, verify = false, include_trivial = false;
  std::int64_t n = 100;
  std::string load;
};

void run_colour(const ColourOpts& o, std::ostream& os) {
  rsl::Colouring c;
  if (!o.load.empty())
    c = rsl::parse_colouring(read_file(o.load));
  else if (o.dyadic)
    c = rsl::dyadic_colouring(o.n);
  else
    throw usage_error("colour: need --dyadic or --load");
  if (!o.verify) {
    os << rsl::serialize(c) << "\n";
    return;
  }
  std::vector<rsl::MonoSolution> sols = rsl::find_mono_solutions(c, o.include_trivial);
  std::int64_t trivial = 0;
  for (const auto& s : sols)
    if (s.x == 2 && s.y == 2 && s.z == 2) ++trivial;
  os << (static_cast<std::int64_t>(sols.size()) - trivial)
     << " nontrivial monochromatic solutions\n";
  if (o.include_trivial) os << trivial << " trivial solutions\n";
  std::size_t shown = 0;
  for (const auto& s : sols) {
    if (shown++ == 20) {
      os << "...\n";
      break;
    }
    os << s.x << "," << s.y << "," << s.z << ",colour=" << s.colour << "\n";
  }
}

// ---- search ----------------------------------------------------------------

struct SearchOpts {
  std::int64_t n = 0;
  bool threshold = false;
  std::int64_t budget = 50'000'000;
  std::int64_t cap = 10'000;
};

void run_search(const SearchOpts& o, std::ostream& os) {
  if (o.threshold) {
    os << "threshold " << rsl::threshold_2colouring(o.budget, o.cap) << "\n";
    return;
  }
  if (o.n < 1) throw usage_error("search: need --n or --threshold");
  rsl::SearchResult r = rsl::search_2colouring(o.n, o.budget);
  if (r.status == rsl::SearchStatus::budget_exceeded)
    throw rsl::budget_error("search: node budget exceeded");
  if (r.status == rsl::SearchStatus::unsat) {
    os << "unsat " << o.n << " nodes=" << r.nodes << "\n";
    return;
  }
  os << "sat " << o.n << " nodes=" << r.nodes << "\n";
  os << rsl::serialize(*r.colouring) << "\n";
}

// ---- twosq -----------------------------------------------------------------

struct TwosqOpts {
  bool simple = false, balanced = false, constrained = false;
  std::int64_t n = 0;
  std::string in;
  std::int64_t q = 1, scale = 0;
  double lo1 = 0, hi1 = 0, lo2 = 0, hi2 = 0, gamma1 = 0, gamma2 = 0;
};

void run_twosq(const TwosqOpts& o, std::ostream& os) {
  int modes = int(o.simple) + int(o.balanced) + int(o.constrained);
  if (modes != 1) throw usage_error("twosq: pick exactly one of --simple/--balanced/--constrained");
  std::vector<std::int64_t> ns;
  if (!o.in.empty())
    ns = read_integers(o.in);
  else if (o.n > 0)
    ns.push_back(o.n);
  else
    throw usage_error("twosq: need --n or --in");
  os << "n,n1,n2,error,k\n";
  for (std::int64_t n : ns) {
    rsl::TwoSquareResult r;
    if (o.simple)
      r = rsl::approx_simple(n);
    else if (o.balanced)
      r = rsl::approx_balanced(n);
    else {
      rsl::Progression P1{o.lo1, o.hi1, o.scale, o.q};
      rsl::Progression P2{o.lo2, o.hi2, o.scale, o.q};
      r = rsl::approx_constrained(n, P1, P2, {o.gamma1, o.gamma2});
    }
    os << n << "," << r.n1 << "," << r.n2 << "," << r.error << "," << r.k << "\n";
  }
}

// ---- weyl ------------------------------------------------------------------

struct WeylOpts {
  std::vector<double> alpha;
  std::vector<std::int64_t> r;
  int degree = 1;
  std::int64_t lo = 1, hi = 1000;
  std::vector<double> lower;
};

void run_weyl(const WeylOpts& o, std::ostream& os) {
  rsl::TorusVector theta(o.alpha);
  std::vector<std::int64_t> r = o.r.empty() ? std::vector<std::int64_t>(o.alpha.size(), 1) : o.r;
  rsl::PolynomialPhase lower(o.lower.empty() ? std::vector<double>{0.0} : o.lower);
  rsl::WeylReport rep = rsl::weyl_check(theta, r, o.degree, o.lo, o.hi, lower);
  std::vector<double> coeffs = lower.coeffs;
  coeffs.resize(static_cast<std::size_t>(o.degree) + 1, 0.0);
  coeffs[static_cast<std::size_t>(o.degree)] += rep.leading;
  std::complex<double> sum = rsl::weyl_sum(rsl::PolynomialPhase(coeffs), o.lo, o.hi);
  json j{{"alpha", o.alpha},  {"r", r},
         {"degree", o.degree}, {"lo", o.lo},
         {"hi", o.hi},         {"sum_re", sum.real()},
         {"sum_im", sum.imag()}, {"delta", rep.delta},
         {"leading", rep.leading}, {"best_q", rep.q},
         {"distance", rep.distance}};
  emit(os, j);
}

// ---- moment ----------------------------------------------------------------

struct MomentOpts {
  bool squares = false;
  std::int64_t n = 0;
  std::string in;
  int lq = 0;
};

void run_moment(const MomentOpts& o, std::ostream& os) {
  std::vector<std::int64_t> S;
  std::int64_t scale_n = 0;
  if (o.squares) {
    if (o.n < 1) throw usage_error("moment: --squares needs --n");
    for (std::int64_t z = 1; z * z <= o.n; ++z) S.push_back(z * z);
    scale_n = o.n;
  } else if (!o.in.empty()) {
    S = read_integers(o.in);
    for (std::int64_t v : S) scale_n = std::max(scale_n, v);
  } else {
    throw usage_error("moment: need --squares or --in");
  }
  std::int64_t m6 = rsl::sixth_moment(S);
  json j{{"N", scale_n},
         {"set_size", S.size()},
         {"sixth_moment", m6},
         {"ratio_to_N2",
          static_cast<double>(m6) / (static_cast<double>(scale_n) * static_cast<double>(scale_n))}};
  if (o.lq != 0) {
    rsl::MomentReport rep = rsl::lq_moment_report(S, o.lq);
    j["lq_q"] = rep.q;
    j["lq_moment"] = rep.moment;
    j["lq_bound_scale"] = rep.bound_scale;
    j["lq_ratio"] = rep.ratio;
  }
  emit(os, j);
}

// ---- losqr -----------------------------------------------------------------

void run_losqr(std::int64_t qmax, bool witness, std::ostream& os) {
  std::vector<rsl::LosRow> rows = rsl::verify_los(qmax);
  os << "q,max_size,bound,ok\n";
  for (const auto& row : rows) {
    os << row.q << "," << row.max_size << "," << row.bound << "," << (row.ok ? "ok" : "FAIL");
    if (witness) {
      rsl::QrFreeResult r = rsl::max_qr_sumset_free(row.q);
      os << ",";
      for (std::size_t i = 0; i < r.witness.size(); ++i)
        os << (i ? " " : "") << r.witness[i];
    }
    os << "\n";
  }
}

// ---- bohr ------------------------------------------------------------------

struct BohrOpts {
  std::string config;
  bool lemma53 = false, prop51 = false;
  std::int64_t a = 0;
  double c = 0.125;
  std::string subset;
  std::int64_t budget = 10'000'000;
};

void run_bohr(const BohrOpts& o, std::ostream& os) {
  rsl::BohrSpec spec = rsl::parse_bohr_config(read_file(o.config));
  if (o.lemma53) {
    rsl::Lemma53Report rep = rsl::lemma53_report(spec, o.a, o.c);
    emit(os, json{{"op", "lemma53"},
                  {"a", rep.a},
                  {"q_size", rep.q_size},
                  {"passing", rep.passing},
                  {"fraction", rep.fraction},
                  {"threshold", rep.threshold},
                  {"c", rep.c}});
    return;
  }
  if (o.prop51) {
    std::vector<std::int64_t> Yp =
        o.subset.empty() ? rsl::bohr_elements(spec, o.budget) : read_integers(o.subset);
    rsl::Prop51Report rep = rsl::prop51_check(spec, Yp);
    emit(os, json{{"op", "prop51_check"},
                  {"q_size", rep.q_size},
                  {"hits", rep.hits},
                  {"deficiency", rep.deficiency},
                  {"fraction", rep.fraction}});
    return;
  }
  std::vector<std::int64_t> Y = rsl::bohr_elements(spec, o.budget);
  std::vector<std::int64_t> R = rsl::sqrt_set(Y);
  emit(os, json{{"op", "bohr_elements"},
                {"N", spec.N},
                {"q", spec.q},
                {"b", spec.b},
                {"x", spec.x},
                {"eps", spec.eps},
                {"d", spec.theta.dim()},
                {"elements", Y.size()},
                {"sqrt_elements", R.size()},
                {"classes", rsl::bohr_sqrt_classes(spec)}});
}

// ---- cutoff ----------------------------------------------------------------

struct CutoffOpts {
  bool interval = false, sharp = false, torus = false, chi = false;
  bool smooth = false, minorant = false;
  std::int64_t n = 0;
  std::int64_t grid = 0;
  double eps = 0.1;
  int dim = 1;
  std::int64_t radius = 512;
  std::string table;
  std::string config;
  double eps_prime = 0;
};

void run_cutoff(const CutoffOpts& o, std::ostream& os) {
  int modes = int(o.interval) + int(o.sharp) + int(o.torus) + int(o.chi);
  if (modes != 1)
    throw usage_error("cutoff: pick exactly one of --interval/--sharp/--torus/--chi");
  if (o.interval || o.sharp) {
    if (o.n < 1) throw usage_error("cutoff: need --n");
    std::int64_t grid = o.grid > 0 ? o.grid : std::max<std::int64_t>(1 << 14, 32 * o.n);
    rsl::SampledCutoff psi =
        o.sharp ? rsl::interval_sharp(o.n) : rsl::interval_majorant(o.n, o.smooth);
    emit(os, json{{"op", "interval_cutoff"},
                  {"variant", o.sharp ? "sharp" : (o.smooth ? "smooth" : "trapezoid")},
                  {"N", o.n},
                  {"grid", grid},
                  {"l1_norm", rsl::l1_fourier_norm(psi, grid)},
                  {"mass", rsl::integer_mass(psi)}});
    return;
  }
  if (o.torus) {
    rsl::SampledCutoff psi =
        o.minorant ? rsl::torus_minorant(o.eps, o.dim) : rsl::torus_majorant(o.eps, o.dim);
    rsl::DecayReport rep = rsl::torus_fourier_decay(psi, o.radius);
    if (!o.table.empty()) {
      std::int64_t side = 2 * o.radius + 1;
      double rows = std::pow(static_cast<double>(side), o.dim);
      if (rows > 1e6)
        throw rsl::precondition_error("cutoff: table too large; lower --radius or --dim");
      std::ofstream tf(o.table);
      if (!tf) throw rsl::precondition_error("cannot open file: " + o.table);
      for (int i = 1; i <= o.dim; ++i) tf << "r" << i << ",";
      tf << "re,im,modulus\n";
      std::vector<std::int64_t> r(static_cast<std::size_t>(o.dim), -o.radius);
      for (;;) {
        std::complex<double> cval = rep.table.coeff(r);
        for (std::int64_t ri : r) tf << ri << ",";
        tf << cval.real() << "," << cval.imag() << "," << std::abs(cval) << "\n";
        int pos = o.dim - 1;
        while (pos >= 0 && r[static_cast<std::size_t>(pos)] == o.radius) {
          r[static_cast<std::size_t>(pos)] = -o.radius;
          --pos;
        }
        if (pos < 0) break;
        ++r[static_cast<std::size_t>(pos)];
      }
    }
    emit(os, json{{"op", "torus_cutoff"},
                  {"variant", o.minorant ? "minorant" : "majorant"},
                  {"eps", o.eps},
                  {"dim", o.dim},
                  {"radius", o.radius},
                  {"integral", rsl::torus_integral(psi)},
                  {"partial_sum", rep.partial_sum},
                  {"fitted_exponent", rep.fitted_exponent},
                  {"fit_lo", rep.fit_lo},
                  {"fit_hi", rep.fit_hi},
                  {"quad_error", rep.table.quad_error}});
    return;
  }
  // --chi: Bohr-style config reinterpreted as chi parameters (u = b).
  if (o.config.empty()) throw usage_error("cutoff: --chi needs --config");
  rsl::BohrSpec spec = rsl::parse_bohr_config(read_file(o.config));
  rsl::ChiParams p;
  p.N = spec.N;
  p.q = spec.q;
  p.u = spec.b;
  p.x = spec.x;
  p.eps = spec.eps;
  auto d = static_cast<double>(spec.theta.dim());
  p.eps_prime = o.eps_prime > 0 ? o.eps_prime : spec.eps / (20.0 * d);
  p.theta = spec.theta;
  p.z = spec.z;
  rsl::SampledCutoff chi = rsl::chi_cutoff(p);
  double mass = rsl::integer_mass(chi);
  double scale = std::pow(2.0 * p.eps, d + 1.0) * static_cast<double>(p.N) /
                 static_cast<double>(p.q);
  emit(os, json{{"op", "chi_cutoff"},
                {"N", p.N},
                {"q", p.q},
                {"u", p.u},
                {"eps", p.eps},
                {"eps_prime", p.eps_prime},
                {"d", spec.theta.dim()},
                {"mass", mass},
                {"mass_scale", scale},
                {"mass_ratio", mass / scale}});
}

// ---- bootstrap -------------------------------------------------------------

struct BootstrapOpts {
  bool lemma71 = false, lemma64 = false, chain = false;
  std::int64_t q = 1, scale = 0;
  double lo = 0, hi = 0;
  std::string subset, load;
  double lo1 = 0, hi1 = 0, lo2 = 0, hi2 = 0, gamma1 = 0, gamma2 = 0;
  std::int64_t n = 0;
  std::int64_t budget = 2'000'000'000;
};

void run_bootstrap(const BootstrapOpts& o, std::ostream& os) {
  int modes = int(o.lemma71) + int(o.lemma64) + int(o.chain);
  if (modes != 1)
    throw usage_error("bootstrap: pick exactly one of --lemma71/--lemma64/--chain");
  if (o.lemma71) {
    rsl::Progression Q{o.lo, o.hi, o.scale, o.q};
    std::vector<std::int64_t> S =
        o.subset.empty() ? rsl::progression_elements(Q) : read_integers(o.subset);
    auto P = rsl::sumset_subprogression(Q, S);
    json j{{"op", "sumset_subprogression"}, {"q", o.q}, {"found", P.has_value()}};
    if (P) {
      j["lo"] = P->lo;
      j["hi"] = P->hi;
      j["difference"] = P->q;
      j["size"] = static_cast<std::int64_t>((P->hi - P->lo) / static_cast<double>(P->q)) + 1;
    }
    emit(os, j);
    return;
  }
  if (o.lemma64) {
    rsl::Progression P1{o.lo1, o.hi1, o.scale, o.q};
    rsl::Progression P2{o.lo2, o.hi2, o.scale, o.q};
    rsl::Lemma64Report rep = rsl::lemma64_verify(P1, P2, {o.gamma1, o.gamma2}, o.budget);
    json fails = json::array();
    for (std::size_t i = 0; i < rep.failures.size() && i < 10; ++i)
      fails.push_back(rep.failures[i]);
    emit(os, json{{"op", "lemma64_verify"},
                  {"checked", rep.checked},
                  {"failures", rep.failures.size()},
                  {"walk_hits", rep.walk_hits},
                  {"first_failures", fails}});
    return;
  }
  rsl::Colouring c;
  if (!o.load.empty())
    c = rsl::parse_colouring(read_file(o.load));
  else if (o.n >= 1) {
    rsl::SearchResult r = rsl::search_2colouring(o.n, o.budget);
    if (r.status == rsl::SearchStatus::budget_exceeded)
      throw rsl::budget_error("bootstrap: search budget exceeded");
    if (r.status == rsl::SearchStatus::unsat)
      throw rsl::precondition_error("bootstrap: no solution-free 2-colouring at this size");
    c = *r.colouring;
  } else {
    throw usage_error("bootstrap: --chain needs --load or --n");
  }
  rsl::ChainReport rep = rsl::chain_check(c);
  emit(os, json{{"op", "chain_check"},
                {"n_max", rep.n_max},
                {"ok1", rep.ok1},
                {"ok2", rep.ok2},
                {"ok3", rep.ok3},
                {"range1", rep.range1},
                {"range2", rep.range2},
                {"range3", rep.range3},
                {"counterexample1", rep.counterexample1},
                {"counterexample2", rep.counterexample2},
                {"counterexample3", rep.counterexample3}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colouring, two-squares, exponential-sum and Bohr-set toolkit"};
  app.require_subcommand(1);
  std::string out_path, manifest_path;
  std::uint64_t seed = 0;
  app.add_option("--out", out_path, "duplicate primary output into this file");
  app.add_option("--manifest", manifest_path, "write a reproducibility manifest (JSON)");
  app.add_option("--seed", seed, "seed recorded for randomized sweeps");

  ColourOpts co;
  auto* colour = app.add_subcommand("colour", "build or verify colourings of [1, n]");
  colour->add_flag("--dyadic", co.dyadic, "dyadic-block 3-colouring");
  colour->add_option("--n", co.n, "right endpoint");
  colour->add_flag("--verify", co.verify, "count monochromatic solutions of x + y = z^2");
  colour->add_flag("--include-trivial", co.include_trivial, "count (2,2,2) as well");
  colour->add_option("--load", co.load, "load a serialized colouring instead");

  SearchOpts so;
  auto* search = app.add_subcommand("search", "backtracking solution-free 2-colouring search");
  search->add_option("--n", so.n, "interval right endpoint");
  search->add_flag("--threshold", so.threshold, "find the smallest unsatisfiable n");
  search->add_option("--budget", so.budget, "node budget");
  search->add_option("--cap", so.cap, "threshold scan cap");

  TwosqOpts to;
  auto* twosq = app.add_subcommand("twosq", "two-squares approximations with gaps");
  twosq->add_flag("--simple", to.simple, "greedy split");
  twosq->add_flag("--balanced", to.balanced, "balanced walk");
  twosq->add_flag("--constrained", to.constrained, "walk constrained to progressions");
  twosq->add_option("--n", to.n, "target integer");
  twosq->add_option("--in", to.in, "file with one target per line");
  twosq->add_option("--q", to.q, "progression modulus");
  twosq->add_option("--scale", to.scale, "progression scale N");
  twosq->add_option("--lo1", to.lo1, "first coordinate lower bound");
  twosq->add_option("--hi1", to.hi1, "first coordinate upper bound");
  twosq->add_option("--lo2", to.lo2, "second coordinate lower bound");
  twosq->add_option("--hi2", to.hi2, "second coordinate upper bound");
  twosq->add_option("--gamma1", to.gamma1, "squared-norm window lower end");
  twosq->add_option("--gamma2", to.gamma2, "squared-norm window upper end");

  WeylOpts wo;
  auto* weyl = app.add_subcommand("weyl", "normalized exponential sums of polynomial phases");
  weyl->add_option("--alpha", wo.alpha, "torus coordinates of theta")->required();
  weyl->add_option("--r", wo.r, "integer vector multiplying theta");
  weyl->add_option("--degree", wo.degree, "leading degree k");
  weyl->add_option("--lo", wo.lo, "summation start");
  weyl->add_option("--hi", wo.hi, "summation end");
  weyl->add_option("--lower", wo.lower, "lower-order coefficients c0 c1 ...");

  MomentOpts mo;
  auto* moment = app.add_subcommand("moment", "sixth moments of representation functions");
  moment->add_flag("--squares", mo.squares, "use S = squares <= n");
  moment->add_option("--n", mo.n, "bound for --squares");
  moment->add_option("--in", mo.in, "file with set elements");
  moment->add_option("--lq", mo.lq, "also compute the grid L^q moment (q = 5 or 6)");

  std::int64_t qmax = 8;
  bool losqr_witness = false;
  auto* losqr = app.add_subcommand("losqr", "max sumset-residue-free subsets of Z/q");
  losqr->add_option("--qmax", qmax, "verify q = 1..qmax")->required();
  losqr->add_flag("--witness", losqr_witness, "append an extremal subset per row");

  BohrOpts bo;
  auto* bohr = app.add_subcommand("bohr", "Bohr-type set enumeration and statistics");
  bohr->add_option("--config", bo.config, "key = value spec file")->required();
  bohr->add_flag("--lemma53", bo.lemma53, "representation-count statistics over Q");
  bohr->add_option("--a", bo.a, "square-root residue class for --lemma53");
  bohr->add_option("--c", bo.c, "threshold calibration constant");
  bohr->add_flag("--prop51", bo.prop51, "fraction of t in Q with t^2 in sqrtY' + sqrtY'");
  bohr->add_option("--subset", bo.subset, "file with Y' elements (default: all of Y)");
  bohr->add_option("--budget", bo.budget, "element budget");

  CutoffOpts cuo;
  auto* cutoff = app.add_subcommand("cutoff", "smooth cutoff kernels and Fourier statistics");
  cutoff->add_flag("--interval", cuo.interval, "majorant of [N, 2N)");
  cutoff->add_flag("--sharp", cuo.sharp, "sharp indicator of [N, 2N) (contrast)");
  cutoff->add_flag("--torus", cuo.torus, "sup-norm ball cutoff on T^d");
  cutoff->add_flag("--chi", cuo.chi, "congruence-window-torus product cutoff");
  cutoff->add_flag("--smooth", cuo.smooth, "smooth interval variant");
  cutoff->add_flag("--minorant", cuo.minorant, "torus minorant instead of majorant");
  cutoff->add_option("--n", cuo.n, "interval scale N");
  cutoff->add_option("--grid", cuo.grid, "quadrature grid (default max(2^14, 32N))");
  cutoff->add_option("--eps", cuo.eps, "ball radius");
  cutoff->add_option("--dim", cuo.dim, "torus dimension");
  cutoff->add_option("--radius", cuo.radius, "Fourier table radius");
  cutoff->add_option("--table", cuo.table, "write the coefficient table CSV here");
  cutoff->add_option("--config", cuo.config, "chi parameters (bohr config format)");
  cutoff->add_option("--eps-prime", cuo.eps_prime, "mollifier width (default eps/(20 d))");

  BootstrapOpts bso;
  auto* bootstrap = app.add_subcommand("bootstrap", "progression sumsets and colouring chains");
  bootstrap->add_flag("--lemma71", bso.lemma71, "subprogression inside S + S");
  bootstrap->add_flag("--lemma64", bso.lemma64, "progression window two-squares verification");
  bootstrap->add_flag("--chain", bso.chain, "three-level inclusion chain of a 2-colouring");
  bootstrap->add_option("--q", bso.q, "modulus");
  bootstrap->add_option("--scale", bso.scale, "scale N");
  bootstrap->add_option("--lo", bso.lo, "window lower end (lemma71)");
  bootstrap->add_option("--hi", bso.hi, "window upper end (lemma71)");
  bootstrap->add_option("--subset", bso.subset, "file with S elements (default: all of Q)");
  bootstrap->add_option("--lo1", bso.lo1, "first box lower bound");
  bootstrap->add_option("--hi1", bso.hi1, "first box upper bound");
  bootstrap->add_option("--lo2", bso.lo2, "second box lower bound");
  bootstrap->add_option("--hi2", bso.hi2, "second box upper bound");
  bootstrap->add_option("--gamma1", bso.gamma1, "window lower end (linear norm)");
  bootstrap->add_option("--gamma2", bso.gamma2, "window upper end (linear norm)");
  bootstrap->add_option("--n", bso.n, "search a colouring of [1, n] first (chain)");
  bootstrap->add_option("--load", bso.load, "load a serialized colouring (chain)");
  bootstrap->add_option("--budget", bso.budget, "scan / search budget");

  try {
    app.parse(argc, argv);
    std::ostringstream os;
    if (*colour) run_colour(co, os);
    if (*search) run_search(so, os);
    if (*twosq) run_twosq(to, os);
    if (*weyl) run_weyl(wo, os);
    if (*moment) run_moment(mo, os);
    if (*losqr) run_losqr(qmax, losqr_witness, os);
    if (*bohr) run_bohr(bo, os);
    if (*cutoff) run_cutoff(cuo, os);
    if (*bootstrap) run_bootstrap(bso, os);
    const std::string text = os.str();
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw rsl::precondition_error("cannot open file: " + out_path);
      f << text;
    }
    if (!manifest_path.empty()) {
      json params = json::array();
      for (int i = 1; i < argc; ++i) params.push_back(argv[i]);
      char hex[32];
      std::snprintf(hex, sizeof hex, "%016llx",
                    static_cast<unsigned long long>(fnv1a(text)));
      json m{{"subcommand", app.get_subcommands().front()->get_name()},
             {"params", params},
             {"seed", seed},
             {"version", "rsl 1.0.0"},
             {"checksum_fnv1a", hex}};
      std::ofstream f(manifest_path);
      if (!f) throw rsl::precondition_error("cannot open file: " + manifest_path);
      f << m.dump(2) << "\n";
    }
    return 0;
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const rsl::precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const rsl::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const rsl::walk_error& e) {
    std::cerr << "walk failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
